//! Subgroup embedding properties.
//!
//! For `H ≤ G`:
//!
//! * self-normalizing: `H = N_G(H)`
//! * self-centralizing: `C_G(H) ≤ H`
//! * pronormal: for every `g` some `x ∈ ⟨H, H^g⟩` has `H^x = H^g`
//! * ℋ-subgroup: `N_G(H) ∩ H^g ≤ H` for every `g`
//! * weakly normal: `H^g ≤ N_G(H)` forces `g ∈ N_G(H)`
//! * NE-subgroup: `H = N_G(H) ∩ H^G`
//! * subnormalizer condition: `N_G(K) ≤ N_G(H)` for every `K` with `H ⊴ K`
//!
//! The quantifiers over `g` only depend on the right coset `N_G(H)·g`, so
//! the fast predicates walk a coset transversal. [`naive`] holds direct
//! translations of the definitions for cross-checking.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::subgroup::{is_subnormal_in, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    SelfNormalizing,
    SelfCentralizing,
    Pronormal,
    HSubgroup,
    WeaklyNormal,
    NeSubgroup,
    SubnormalizerCondition,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::SelfNormalizing,
        Property::SelfCentralizing,
        Property::Pronormal,
        Property::HSubgroup,
        Property::WeaklyNormal,
        Property::NeSubgroup,
        Property::SubnormalizerCondition,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn id(self) -> &'static str {
        match self {
            Property::SelfNormalizing => "self_normalizing",
            Property::SelfCentralizing => "self_centralizing",
            Property::Pronormal => "pronormal",
            Property::HSubgroup => "h_subgroup",
            Property::WeaklyNormal => "weakly_normal",
            Property::NeSubgroup => "ne_subgroup",
            Property::SubnormalizerCondition => "subnormalizer_condition",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::UnknownOmegaClass(s.to_string()))
    }
}

/// How the pronormality test ranges over conjugating elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConjugatorScan {
    /// One representative per right coset of `N_G(H)`.
    #[default]
    Transversal,
    /// Every element of `G`.
    Full,
}

pub fn holds<'g>(ctx: &GroupContext<'g>, property: Property, h: &Subgroup<'g>) -> Result<bool> {
    Ok(match property {
        Property::SelfNormalizing => is_self_normalizing(ctx, h),
        Property::SelfCentralizing => is_self_centralizing(ctx, h),
        Property::Pronormal => is_pronormal(ctx, h),
        Property::HSubgroup => is_h_subgroup(ctx, h),
        Property::WeaklyNormal => is_weakly_normal(ctx, h),
        Property::NeSubgroup => is_ne_subgroup(ctx, h),
        Property::SubnormalizerCondition => return satisfies_subnormalizer_condition(ctx, h),
    })
}

/// Right-coset representatives of `N` in `G`: `H^g` is constant on `N·g`.
fn transversal<'g>(ctx: &GroupContext<'g>, n: &Subgroup<'g>) -> Vec<usize> {
    let g = ctx.group();
    let mut covered = FixedBitSet::with_capacity(g.order());
    let mut reps = Vec::with_capacity(n.index());
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for m in n.iter() {
            covered.insert(g.mul(m, x));
        }
    }
    reps
}

pub fn is_self_normalizing<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    ctx.normalizer(h) == *h
}

pub fn is_self_centralizing<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    ctx.centralizer(h).is_subgroup_of(h)
}

pub fn is_pronormal<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    is_pronormal_with(ctx, h, ConjugatorScan::Transversal)
}

pub fn is_pronormal_with<'g>(
    ctx: &GroupContext<'g>,
    h: &Subgroup<'g>,
    scan: ConjugatorScan,
) -> bool {
    let conjugators: Vec<usize> = match scan {
        ConjugatorScan::Transversal => transversal(ctx, &ctx.normalizer(h)),
        ConjugatorScan::Full => (0..ctx.group().order()).collect(),
    };
    conjugators.into_iter().all(|g| {
        let hg = h.conjugate(g);
        if hg == *h {
            return true;
        }
        let joined = h.join(&hg);
        let found = joined.iter().any(|x| h.conjugate(x) == hg);
        found
    })
}

pub fn is_h_subgroup<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    let n = ctx.normalizer(h);
    transversal(ctx, &n)
        .into_iter()
        .all(|g| n.intersection(&h.conjugate(g)).is_subgroup_of(h))
}

pub fn is_weakly_normal<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    let n = ctx.normalizer(h);
    transversal(ctx, &n)
        .into_iter()
        .all(|g| n.contains(g) || !h.conjugate(g).is_subgroup_of(&n))
}

pub fn is_ne_subgroup<'g>(ctx: &GroupContext<'g>, h: &Subgroup<'g>) -> bool {
    ctx.normalizer(h).intersection(&ctx.normal_closure(h)) == *h
}

/// Only `K` with `H ≤ K ≤ N_G(H)` are tested: those are exactly the
/// subgroups in which `H` is normal.
pub fn satisfies_subnormalizer_condition<'g>(
    ctx: &GroupContext<'g>,
    h: &Subgroup<'g>,
) -> Result<bool> {
    satisfies_subnormalizer_condition_in(ctx, ctx.whole(), h)
}

/// The subnormalizer condition for `H` inside a subgroup `M ≥ H`, using
/// `N_M(X) = N_G(X) ∩ M`.
pub fn satisfies_subnormalizer_condition_in<'g>(
    ctx: &GroupContext<'g>,
    m: &Subgroup<'g>,
    h: &Subgroup<'g>,
) -> Result<bool> {
    let lattice = ctx.lattice()?;
    let n_h = ctx.normalizer(h).intersection(m);
    for k in lattice.between(h, &n_h) {
        let n_k = ctx.normalizer_at(k)?.intersection(m);
        if !n_k.is_subgroup_of(&n_h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The seven embedding verdicts for one subgroup plus normality context.
#[derive(Debug, Clone)]
pub struct PropertyClassification<'g> {
    pub subgroup: Subgroup<'g>,
    pub self_normalizing: bool,
    pub self_centralizing: bool,
    pub pronormal: bool,
    pub h_subgroup: bool,
    pub weakly_normal: bool,
    pub ne_subgroup: bool,
    pub subnormalizer_condition: bool,
    pub normal: bool,
    pub subnormal: bool,
}

impl PropertyClassification<'_> {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::SelfNormalizing => self.self_normalizing,
            Property::SelfCentralizing => self.self_centralizing,
            Property::Pronormal => self.pronormal,
            Property::HSubgroup => self.h_subgroup,
            Property::WeaklyNormal => self.weakly_normal,
            Property::NeSubgroup => self.ne_subgroup,
            Property::SubnormalizerCondition => self.subnormalizer_condition,
        }
    }

    /// Names of the record-level implications that fail. Empty for every
    /// correctly classified subgroup.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.pronormal && !self.weakly_normal {
            out.push("pronormal => weakly_normal");
        }
        if self.h_subgroup && !self.weakly_normal {
            out.push("h_subgroup => weakly_normal");
        }
        if self.weakly_normal && !self.subnormalizer_condition {
            out.push("weakly_normal => subnormalizer_condition");
        }
        if self.ne_subgroup && !self.subnormalizer_condition {
            out.push("ne_subgroup => subnormalizer_condition");
        }
        if self.normal
            && !(self.pronormal
                && self.h_subgroup
                && self.weakly_normal
                && self.ne_subgroup
                && self.subnormalizer_condition)
        {
            out.push("normal => every embedding property");
        }
        if self.subnormal && self.subnormalizer_condition && !self.normal {
            out.push("subnormal and subnormalizer_condition => normal");
        }
        out
    }
}

pub fn classify<'g>(
    ctx: &GroupContext<'g>,
    h: &Subgroup<'g>,
) -> Result<PropertyClassification<'g>> {
    let flag = |p: Property| -> Result<bool> {
        let base = holds(ctx, p, h)?;
        Ok(base != (ctx.fault() == Some(p)))
    };
    Ok(PropertyClassification {
        subgroup: h.clone(),
        self_normalizing: flag(Property::SelfNormalizing)?,
        self_centralizing: flag(Property::SelfCentralizing)?,
        pronormal: flag(Property::Pronormal)?,
        h_subgroup: flag(Property::HSubgroup)?,
        weakly_normal: flag(Property::WeaklyNormal)?,
        ne_subgroup: flag(Property::NeSubgroup)?,
        subnormalizer_condition: flag(Property::SubnormalizerCondition)?,
        normal: h.is_normal(),
        subnormal: is_subnormal_in(ctx.whole(), h),
    })
}

/// Direct quantifier translations of the definitions. No transversals, no
/// cached normalizers, no lattice shortcuts: each subgroup-valued quantity
/// is recomputed elementwise.
pub mod naive {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::lattice::all_subgroups;

    fn normalizer<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> Vec<usize> {
        (0..g.order()).filter(|&x| h.conjugate(x) == *h).collect()
    }

    fn normalizer_subgroup<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> Subgroup<'g> {
        Subgroup::generated_by(g, normalizer(g, h))
    }

    fn set_within(a: &Subgroup<'_>, b: &[usize]) -> bool {
        a.iter().all(|x| b.contains(&x))
    }

    pub fn is_self_normalizing<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
        normalizer(g, h) == h.iter().collect::<Vec<_>>()
    }

    pub fn is_self_centralizing<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
        (0..g.order())
            .filter(|&x| h.iter().all(|y| g.mul(x, y) == g.mul(y, x)))
            .all(|x| h.contains(x))
    }

    pub fn is_pronormal<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
        (0..g.order()).all(|x| {
            let hx = h.conjugate(x);
            let seed: Vec<usize> = h.iter().chain(hx.iter()).collect();
            let joined = Subgroup::generated_by(g, seed);
            let found = joined.iter().any(|y| h.conjugate(y) == hx);
            found
        })
    }

    pub fn is_h_subgroup<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
        let n = normalizer(g, h);
        (0..g.order()).all(|x| {
            let hx = h.conjugate(x);
            n.iter()
                .filter(|&&y| hx.contains(y))
                .all(|&y| h.contains(y))
        })
    }

    pub fn is_weakly_normal<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
        let n = normalizer(g, h);
        (0..g.order()).all(|x| !set_within(&h.conjugate(x), &n) || n.contains(&x))
    }

    /// `H^G` taken as the intersection of all normal subgroups containing `H`.
    pub fn is_ne_subgroup<'g>(g: &'g FiniteGroup, h: &Subgroup<'g>, cap: usize) -> Result<bool> {
        let subgroups = all_subgroups(g, cap)?;
        let closure = subgroups
            .iter()
            .filter(|k| h.is_subgroup_of(k) && k.is_normal())
            .fold(Subgroup::whole(g), |acc, k| acc.intersection(k));
        let n = normalizer_subgroup(g, h);
        Ok(n.intersection(&closure) == *h)
    }

    /// Scans every subgroup `K` of `G` and tests `H ⊴ K` directly.
    pub fn satisfies_subnormalizer_condition<'g>(
        g: &'g FiniteGroup,
        h: &Subgroup<'g>,
        cap: usize,
    ) -> Result<bool> {
        let n_h = normalizer(g, h);
        let subgroups = all_subgroups(g, cap)?;
        Ok(subgroups.iter().all(|k| {
            let h_normal_in_k = h.is_subgroup_of(k) && k.iter().all(|x| h.conjugate(x) == *h);
            !h_normal_in_k || normalizer(g, k).iter().all(|x| n_h.contains(x))
        }))
    }

    pub fn holds<'g>(
        g: &'g FiniteGroup,
        property: Property,
        h: &Subgroup<'g>,
        cap: usize,
    ) -> Result<bool> {
        Ok(match property {
            Property::SelfNormalizing => is_self_normalizing(g, h),
            Property::SelfCentralizing => is_self_centralizing(g, h),
            Property::Pronormal => is_pronormal(g, h),
            Property::HSubgroup => is_h_subgroup(g, h),
            Property::WeaklyNormal => is_weakly_normal(g, h),
            Property::NeSubgroup => return is_ne_subgroup(g, h, cap),
            Property::SubnormalizerCondition => {
                return satisfies_subnormalizer_condition(g, h, cap)
            }
        })
    }
}
