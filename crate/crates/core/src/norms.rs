//! Intersections of normalizers over subgroup classes.
//!
//! `N_Ω(G)` is the intersection of `N_G(H)` over every `H` in the class
//! `Ω(G)`, and is `G` itself when the class is empty.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::context::GroupContext;
use crate::embedding::Property;
use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Property(Property),
    Sylow,
    AllSubgroups,
}

impl ClassKind {
    pub fn id(self) -> &'static str {
        match self {
            ClassKind::Property(p) => p.id(),
            ClassKind::Sylow => "sylow",
            ClassKind::AllSubgroups => "all_subgroups",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Accepts both the long ids (`weakly_normal`) and the CLI short forms
/// (`wn`, `sn`, `sc`, `h`, `subnorm`, `ne`, `all-subgroups`).
impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sn" => ClassKind::Property(Property::SelfNormalizing),
            "sc" => ClassKind::Property(Property::SelfCentralizing),
            "h" => ClassKind::Property(Property::HSubgroup),
            "wn" => ClassKind::Property(Property::WeaklyNormal),
            "subnorm" => ClassKind::Property(Property::SubnormalizerCondition),
            "ne" => ClassKind::Property(Property::NeSubgroup),
            "sylow" => ClassKind::Sylow,
            "all-subgroups" | "all_subgroups" => ClassKind::AllSubgroups,
            other => ClassKind::Property(other.parse()?),
        })
    }
}

/// A subgroup class `Ω(G)`, optionally cut down to its p-subgroups `Ω_p(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaClass {
    pub kind: ClassKind,
    pub p_restriction: Option<u64>,
}

impl OmegaClass {
    pub fn new(kind: ClassKind) -> Self {
        OmegaClass {
            kind,
            p_restriction: None,
        }
    }

    pub fn property(p: Property) -> Self {
        Self::new(ClassKind::Property(p))
    }

    pub fn restricted_to(self, p: u64) -> Self {
        OmegaClass {
            p_restriction: Some(p),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormOptions {
    /// Whether the trivial subgroup counts as a p-group of `Ω_p(G)`.
    /// It never changes the result (its normalizer is `G`), but it decides
    /// whether the class is empty.
    pub include_trivial: bool,
    /// Stop intersecting once the running intersection reaches `Z(G)`,
    /// which lies in every normalizer. Off in oracle mode.
    pub early_exit: bool,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions {
            include_trivial: true,
            early_exit: true,
        }
    }
}

impl NormOptions {
    pub fn oracle() -> Self {
        NormOptions {
            early_exit: false,
            ..Self::default()
        }
    }
}

/// The members of a class, in lattice order (or Sylow order for `Sylow`).
pub fn class_members<'g>(
    ctx: &GroupContext<'g>,
    class: OmegaClass,
    opts: NormOptions,
) -> Result<Vec<Subgroup<'g>>> {
    if let Some(p) = class.p_restriction {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let base = match (class.kind, class.p_restriction) {
        (ClassKind::Sylow, Some(p)) => ctx.sylow(p)?,
        (ClassKind::Sylow, None) => ctx.all_sylow(),
        (ClassKind::AllSubgroups, _) => ctx.subgroups()?.to_vec(),
        (ClassKind::Property(prop), _) => ctx.class(prop)?,
    };
    Ok(match class.p_restriction {
        None => base,
        Some(p) => base
            .into_iter()
            .filter(|h| h.is_p_group(p) && (opts.include_trivial || !h.is_trivial()))
            .collect(),
    })
}

/// `∩ N_G(H)` over `members`; `G` when `members` is empty.
pub fn intersect_normalizers<'g>(
    ctx: &GroupContext<'g>,
    members: &[Subgroup<'g>],
    early_exit: bool,
) -> Subgroup<'g> {
    let floor = ctx.center();
    let mut acc = ctx.whole().clone();
    for h in members {
        if early_exit && acc == *floor {
            break;
        }
        acc = acc.intersection(&ctx.normalizer(h));
    }
    acc
}

pub fn omega_norm<'g>(
    ctx: &GroupContext<'g>,
    class: OmegaClass,
    opts: NormOptions,
) -> Result<Subgroup<'g>> {
    let members = class_members(ctx, class, opts)?;
    Ok(intersect_normalizers(ctx, &members, opts.early_exit))
}

pub fn omega_p_norm<'g>(
    ctx: &GroupContext<'g>,
    kind: ClassKind,
    p: u64,
    opts: NormOptions,
) -> Result<Subgroup<'g>> {
    omega_norm(ctx, OmegaClass::new(kind).restricted_to(p), opts)
}

/// Intersection of the normalizers of every Sylow subgroup.
pub fn sylow_norm<'g>(ctx: &GroupContext<'g>) -> Subgroup<'g> {
    intersect_normalizers(ctx, &ctx.all_sylow(), true)
}

pub fn sylow_p_norm<'g>(ctx: &GroupContext<'g>, p: u64) -> Result<Subgroup<'g>> {
    Ok(intersect_normalizers(ctx, &ctx.sylow(p)?, true))
}

/// The norm: intersection of the normalizers of all subgroups.
pub fn baer_norm<'g>(ctx: &GroupContext<'g>, opts: NormOptions) -> Result<Subgroup<'g>> {
    omega_norm(ctx, OmegaClass::new(ClassKind::AllSubgroups), opts)
}

/// Intersection of the self-centralizing subgroups themselves.
pub fn sc_intersection<'g>(ctx: &GroupContext<'g>) -> Result<Subgroup<'g>> {
    Ok(ctx
        .class(Property::SelfCentralizing)?
        .iter()
        .fold(ctx.whole().clone(), |acc, h| acc.intersection(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::FiniteGroup;
    use crate::primes::prime_divisors;

    /// Brute-force normalizer intersection straight from element arithmetic.
    fn oracle_norm(g: &FiniteGroup, members: &[Subgroup<'_>]) -> Vec<usize> {
        (0..g.order())
            .filter(|&x| {
                members
                    .iter()
                    .all(|h| h.iter().all(|y| h.contains(g.conj(y, x))))
            })
            .collect()
    }

    #[test]
    fn abelian_groups_have_every_norm_equal_to_g() {
        let c6 = catalog::cyclic(6).unwrap();
        let ctx = GroupContext::new(&c6);
        for p in Property::ALL {
            assert!(
                omega_norm(&ctx, OmegaClass::property(p), NormOptions::default())
                    .unwrap()
                    .is_whole()
            );
        }
        assert!(baer_norm(&ctx, NormOptions::default()).unwrap().is_whole());
        assert!(sc_intersection(&ctx).unwrap().is_whole());
        assert!(sylow_norm(&ctx).is_whole());
    }

    #[test]
    fn s3_norms() {
        let s3 = catalog::symmetric(3).unwrap();
        let ctx = GroupContext::new(&s3);
        let sn = omega_norm(
            &ctx,
            OmegaClass::property(Property::SelfNormalizing),
            NormOptions::oracle(),
        )
        .unwrap();
        assert!(sn.is_trivial());
        let members = class_members(
            &ctx,
            OmegaClass::property(Property::SelfNormalizing),
            NormOptions::oracle(),
        )
        .unwrap();
        assert_eq!(oracle_norm(&s3, &members), vec![0]);
        assert!(sylow_norm(&ctx).is_trivial());
        assert!(baer_norm(&ctx, NormOptions::oracle()).unwrap().is_trivial());
        assert!(sc_intersection(&ctx).unwrap().is_trivial());
        let pn = omega_p_norm(
            &ctx,
            ClassKind::Property(Property::Pronormal),
            3,
            NormOptions::default(),
        )
        .unwrap();
        assert!(pn.is_whole());
        assert!(sylow_p_norm(&ctx, 3).unwrap().is_whole());
    }

    #[test]
    fn q16_self_centralizing_norm_is_second_center() {
        let q16 = catalog::dicyclic(4).unwrap();
        let ctx = GroupContext::new(&q16);
        let n = omega_norm(
            &ctx,
            OmegaClass::property(Property::SelfCentralizing),
            NormOptions::default(),
        )
        .unwrap();
        assert_eq!(n.order(), 4);
        assert_eq!(n, *ctx.upper_central_series().term(2));
        assert_eq!(sc_intersection(&ctx).unwrap().order(), 2);
    }

    #[test]
    fn a5_ne_five_norms() {
        let a5 = catalog::alternating(5).unwrap();
        let ctx = GroupContext::new(&a5);
        let ne = ClassKind::Property(Property::NeSubgroup);
        let with_trivial = omega_p_norm(&ctx, ne, 5, NormOptions::default()).unwrap();
        assert!(with_trivial.is_whole());
        let opts = NormOptions {
            include_trivial: false,
            ..NormOptions::default()
        };
        let members = class_members(&ctx, OmegaClass::new(ne).restricted_to(5), opts).unwrap();
        assert!(members.is_empty());
        assert!(omega_p_norm(&ctx, ne, 5, opts).unwrap().is_whole());
        assert!(sylow_p_norm(&ctx, 5).unwrap().is_trivial());
        let p5 = &ctx.sylow(5).unwrap();
        assert_eq!(oracle_norm(&a5, p5), vec![0]);
    }

    #[test]
    fn p_not_dividing_order_gives_g() {
        let s3 = catalog::symmetric(3).unwrap();
        let ctx = GroupContext::new(&s3);
        for kind in [ClassKind::Property(Property::Pronormal), ClassKind::Sylow] {
            assert!(omega_p_norm(&ctx, kind, 5, NormOptions::default())
                .unwrap()
                .is_whole());
        }
        assert!(matches!(
            omega_p_norm(&ctx, ClassKind::Sylow, 6, NormOptions::default()),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn nilpotent_sylow_norm_and_hamiltonian_norm() {
        let d8 = catalog::dihedral(8).unwrap();
        let ctx = GroupContext::new(&d8);
        assert!(sylow_norm(&ctx).is_whole());
        let q8 = catalog::dicyclic(2).unwrap();
        let ctx = GroupContext::new(&q8);
        assert!(baer_norm(&ctx, NormOptions::oracle()).unwrap().is_whole());
        let a5 = catalog::alternating(5).unwrap();
        let ctx = GroupContext::new(&a5);
        assert!(sylow_p_norm(&ctx, 5).unwrap().is_trivial());
    }

    #[test]
    fn early_exit_matches_full_intersection() {
        for g in [
            catalog::symmetric(4).unwrap(),
            catalog::dicyclic(4).unwrap(),
            catalog::frobenius_21().unwrap(),
        ] {
            let ctx = GroupContext::new(&g);
            for kind in Property::ALL
                .map(ClassKind::Property)
                .into_iter()
                .chain([ClassKind::Sylow, ClassKind::AllSubgroups])
            {
                let fast = omega_norm(&ctx, OmegaClass::new(kind), NormOptions::default()).unwrap();
                let slow = omega_norm(&ctx, OmegaClass::new(kind), NormOptions::oracle()).unwrap();
                assert_eq!(fast, slow);
                let members =
                    class_members(&ctx, OmegaClass::new(kind), NormOptions::oracle()).unwrap();
                assert_eq!(fast.iter().collect::<Vec<_>>(), oracle_norm(&g, &members));
                for p in prime_divisors(g.order() as u64) {
                    let fast = omega_p_norm(&ctx, kind, p, NormOptions::default()).unwrap();
                    let slow = omega_p_norm(&ctx, kind, p, NormOptions::oracle()).unwrap();
                    assert_eq!(fast, slow);
                }
            }
        }
    }

    #[test]
    fn class_kind_parsing() {
        assert_eq!(
            "wn".parse::<ClassKind>().unwrap(),
            ClassKind::Property(Property::WeaklyNormal)
        );
        assert_eq!(
            "pronormal".parse::<ClassKind>().unwrap(),
            ClassKind::Property(Property::Pronormal)
        );
        assert_eq!(
            "all-subgroups".parse::<ClassKind>().unwrap(),
            ClassKind::AllSubgroups
        );
        assert!("bogus".parse::<ClassKind>().is_err());
    }
}
