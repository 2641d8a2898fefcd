//! Upper central series, derived series, and the solvability and
//! 𝒯-group tests built on them.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice::Lattice;
use crate::subgroup::{is_subnormal, Subgroup};

/// `Z₀ = 1 < Z₁ < … < Z_k`, stopped at the first fixed point. The last term
/// is the hypercenter.
#[derive(Debug, Clone)]
pub struct CentralSeries<'g> {
    pub terms: Vec<Subgroup<'g>>,
    pub stabilized: bool,
}

impl<'g> CentralSeries<'g> {
    /// `Z_i`; indices past the end return the hypercenter.
    pub fn term(&self, i: usize) -> &Subgroup<'g> {
        &self.terms[i.min(self.terms.len() - 1)]
    }

    pub fn hypercenter(&self) -> &Subgroup<'g> {
        self.terms.last().expect("series always holds Z0")
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// `Z_{i+1} = {x : [x, g] ∈ Z_i for every generator g}`.
pub fn upper_central_series(group: &FiniteGroup) -> CentralSeries<'_> {
    let mut terms = vec![Subgroup::trivial(group)];
    loop {
        let prev = terms.last().unwrap();
        let mut members = FixedBitSet::with_capacity(group.order());
        for x in 0..group.order() {
            if group
                .generator_ids()
                .iter()
                .all(|&g| prev.contains(group.commutator(x, g)))
            {
                members.insert(x);
            }
        }
        let next = Subgroup::from_members(group, members);
        if next == *prev {
            break;
        }
        terms.push(next);
    }
    CentralSeries {
        terms,
        stabilized: true,
    }
}

pub fn hypercenter(group: &FiniteGroup) -> Subgroup<'_> {
    upper_central_series(group).hypercenter().clone()
}

/// `[K, K]`: the normal closure in `K` of commutators of its generators.
pub fn commutator_subgroup<'g>(k: &Subgroup<'g>) -> Subgroup<'g> {
    let group = k.group();
    let gens = k.generators();
    let seed: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| group.commutator(a, b)))
        .collect();
    Subgroup::generated_by(group, seed).normal_closure_in(k)
}

/// `G ⊇ G' ⊇ G'' ⊇ …`, ending at the trivial subgroup or at the first
/// repeated term (which is included once more, e.g. `[A5, A5]`).
pub fn derived_series(group: &FiniteGroup) -> Vec<Subgroup<'_>> {
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(last);
        let repeated = next == *last;
        series.push(next);
        if repeated {
            break;
        }
    }
    series
}

pub fn is_solvable(group: &FiniteGroup) -> bool {
    derived_series(group).last().unwrap().is_trivial()
}

pub fn is_nilpotent(group: &FiniteGroup) -> bool {
    upper_central_series(group).hypercenter().is_whole()
}

/// Every subnormal subgroup is normal. Needs the full lattice.
pub fn is_t_group(group: &FiniteGroup, cap: usize) -> Result<bool> {
    let lattice = Lattice::enumerate(group, cap)?;
    Ok(is_t_group_in(group, &lattice))
}

pub fn is_t_group_in<'g>(group: &'g FiniteGroup, lattice: &Lattice<'g>) -> bool {
    lattice
        .iter()
        .all(|h| h.is_normal() || !is_subnormal(group, h))
}
