//! Per-group analysis context.
//!
//! A [`GroupContext`] memoizes everything that is expensive and reused
//! across predicates: the subgroup lattice, the normalizer and normal
//! closure of every lattice member, the upper central series, Sylow
//! subgroups and per-property class membership. Caches are write-once
//! (`OnceLock`), so a context can be shared across threads; distinct groups
//! always get distinct contexts.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::embedding::{self, Property};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{Lattice, DEFAULT_LATTICE_CAP};
use crate::primes::prime_divisors;
use crate::series::{upper_central_series, CentralSeries};
use crate::subgroup::Subgroup;
use crate::sylow::sylow_subgroups;

pub struct GroupContext<'g> {
    group: &'g FiniteGroup,
    whole: Subgroup<'g>,
    lattice_cap: usize,
    fault: Option<Property>,
    lattice: OnceLock<Lattice<'g>>,
    normalizers: OnceLock<Vec<Subgroup<'g>>>,
    normal_closures: OnceLock<Vec<Subgroup<'g>>>,
    center: OnceLock<Subgroup<'g>>,
    upper: OnceLock<CentralSeries<'g>>,
    sylow: OnceLock<BTreeMap<u64, Vec<Subgroup<'g>>>>,
    membership: [OnceLock<Vec<bool>>; Property::ALL.len()],
}

impl<'g> GroupContext<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        Self::with_lattice_cap(group, DEFAULT_LATTICE_CAP)
    }

    pub fn with_lattice_cap(group: &'g FiniteGroup, lattice_cap: usize) -> Self {
        GroupContext {
            group,
            whole: Subgroup::whole(group),
            lattice_cap,
            fault: None,
            lattice: OnceLock::new(),
            normalizers: OnceLock::new(),
            normal_closures: OnceLock::new(),
            center: OnceLock::new(),
            upper: OnceLock::new(),
            sylow: OnceLock::new(),
            membership: Default::default(),
        }
    }

    /// Test hook: class membership for `property` is reported negated.
    /// Used to show that harness checks can fail.
    pub fn with_fault(mut self, property: Property) -> Self {
        self.fault = Some(property);
        self
    }

    pub fn fault(&self) -> Option<Property> {
        self.fault
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn whole(&self) -> &Subgroup<'g> {
        &self.whole
    }

    pub fn lattice_cap(&self) -> usize {
        self.lattice_cap
    }

    pub fn lattice_available(&self) -> bool {
        self.group.order() <= self.lattice_cap
    }

    pub fn lattice(&self) -> Result<&Lattice<'g>> {
        if !self.lattice_available() {
            return Err(Error::LatticeCapExceeded {
                order: self.group.order(),
                cap: self.lattice_cap,
            });
        }
        Ok(self.lattice.get_or_init(|| {
            Lattice::enumerate(self.group, self.lattice_cap).expect("order checked against cap")
        }))
    }

    pub fn subgroups(&self) -> Result<&[Subgroup<'g>]> {
        Ok(self.lattice()?.subgroups())
    }

    fn lattice_position(&self, h: &Subgroup<'g>) -> Option<usize> {
        self.lattice.get().and_then(|l| l.position(h))
    }

    /// Fills the lattice-wide normalizer and normal-closure caches.
    ///
    /// Lookups never initialize these caches themselves: a rayon worker must
    /// not block on a `OnceLock` that its own stolen work is filling.
    pub fn warm(&self) -> Result<()> {
        let lattice = self.lattice()?;
        self.normalizers.get_or_init(|| {
            lattice
                .subgroups()
                .par_iter()
                .map(|h| h.normalizer_in(&self.whole))
                .collect()
        });
        self.normal_closures.get_or_init(|| {
            lattice
                .subgroups()
                .par_iter()
                .map(|k| k.normal_closure_in(&self.whole))
                .collect()
        });
        Ok(())
    }

    /// `N_G(H)`, served from the cache when `H` is interned and the cache
    /// has been warmed.
    pub fn normalizer(&self, h: &Subgroup<'g>) -> Subgroup<'g> {
        match (self.lattice_position(h), self.normalizers.get()) {
            (Some(i), Some(cached)) => cached[i].clone(),
            _ => h.normalizer_in(&self.whole),
        }
    }

    /// Normalizer of the `i`-th lattice member.
    pub fn normalizer_at(&self, i: usize) -> Result<Subgroup<'g>> {
        let lattice = self.lattice()?;
        Ok(match self.normalizers.get() {
            Some(cached) => cached[i].clone(),
            None => lattice.get(i).normalizer_in(&self.whole),
        })
    }

    /// `H^G`.
    pub fn normal_closure(&self, h: &Subgroup<'g>) -> Subgroup<'g> {
        match (self.lattice_position(h), self.normal_closures.get()) {
            (Some(i), Some(cached)) => cached[i].clone(),
            _ => h.normal_closure_in(&self.whole),
        }
    }

    pub fn centralizer(&self, h: &Subgroup<'g>) -> Subgroup<'g> {
        h.centralizer_in(&self.whole)
    }

    pub fn center(&self) -> &Subgroup<'g> {
        self.center
            .get_or_init(|| self.whole.centralizer_in(&self.whole))
    }

    pub fn upper_central_series(&self) -> &CentralSeries<'g> {
        self.upper.get_or_init(|| upper_central_series(self.group))
    }

    pub fn hypercenter(&self) -> &Subgroup<'g> {
        self.upper_central_series().hypercenter()
    }

    /// Sylow p-subgroups for every prime dividing `|G|`.
    pub fn sylow_by_prime(&self) -> &BTreeMap<u64, Vec<Subgroup<'g>>> {
        self.sylow.get_or_init(|| {
            prime_divisors(self.group.order() as u64)
                .into_iter()
                .map(|p| (p, sylow_subgroups(self.group, p).expect("p is prime")))
                .collect()
        })
    }

    pub fn sylow(&self, p: u64) -> Result<Vec<Subgroup<'g>>> {
        match self.sylow_by_prime().get(&p) {
            Some(s) => Ok(s.clone()),
            None => sylow_subgroups(self.group, p),
        }
    }

    /// `𝒮(G)`: every Sylow subgroup for every prime divisor of `|G|`.
    pub fn all_sylow(&self) -> Vec<Subgroup<'g>> {
        self.sylow_by_prime().values().flatten().cloned().collect()
    }

    /// For each lattice member, whether it has `property` (negated when a
    /// fault is injected for that property).
    pub fn membership(&self, property: Property) -> Result<&[bool]> {
        let lattice = self.lattice()?;
        let slot = &self.membership[property.index()];
        if let Some(v) = slot.get() {
            return Ok(v);
        }
        self.warm()?;
        let computed = lattice
            .subgroups()
            .par_iter()
            .map(|h| embedding::holds(self, property, h))
            .collect::<Result<Vec<bool>>>()?;
        let flip = self.fault == Some(property);
        let computed = computed.into_iter().map(|b| b != flip).collect();
        Ok(slot.get_or_init(|| computed))
    }

    /// The lattice members having `property`.
    pub fn class(&self, property: Property) -> Result<Vec<Subgroup<'g>>> {
        let lattice = self.lattice()?;
        let flags = self.membership(property)?;
        Ok(lattice
            .iter()
            .zip(flags)
            .filter(|(_, &f)| f)
            .map(|(h, _)| h.clone())
            .collect())
    }
}
