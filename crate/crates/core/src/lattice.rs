//! Full subgroup lattices.
//!
//! Enumeration seeds the lattice with every cyclic subgroup and then joins
//! each known subgroup with each element outside it until nothing new
//! appears. Every subgroup is reached this way, since a subgroup with `k`
//! generators is the join of one with `k - 1` generators and one element.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

pub const DEFAULT_LATTICE_CAP: usize = 400;

/// The interned subgroups of one group, sorted by order and then by
/// element indices.
pub struct Lattice<'g> {
    subgroups: Vec<Subgroup<'g>>,
    index: HashMap<FixedBitSet, usize>,
}

impl<'g> Lattice<'g> {
    pub fn enumerate(group: &'g FiniteGroup, cap: usize) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::LatticeCapExceeded {
                order: group.order(),
                cap,
            });
        }
        let mut found: HashMap<FixedBitSet, Subgroup<'g>> = HashMap::new();
        let mut pending: Vec<Subgroup<'g>> = Vec::new();
        for x in 0..group.order() {
            let c = Subgroup::generated_by(group, [x]);
            if !found.contains_key(c.members()) {
                found.insert(c.members().clone(), c.clone());
                pending.push(c);
            }
        }
        while let Some(h) = pending.pop() {
            for x in 0..group.order() {
                if h.contains(x) {
                    continue;
                }
                let j = h.join_element(x);
                if !found.contains_key(j.members()) {
                    found.insert(j.members().clone(), j.clone());
                    pending.push(j);
                }
            }
        }
        let mut subgroups: Vec<Subgroup<'g>> = found.into_values().collect();
        subgroups.sort();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        Ok(Lattice { subgroups, index })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup<'g> {
        &self.subgroups[i]
    }

    pub fn position(&self, h: &Subgroup<'_>) -> Option<usize> {
        self.index.get(h.members()).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup<'g>> {
        self.subgroups.iter()
    }

    /// Indices of the subgroups `K` with `lower ≤ K ≤ upper`.
    pub fn between(&self, lower: &Subgroup<'g>, upper: &Subgroup<'g>) -> Vec<usize> {
        self.subgroups
            .iter()
            .enumerate()
            .filter(|(_, k)| lower.is_subgroup_of(k) && k.is_subgroup_of(upper))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn into_vec(self) -> Vec<Subgroup<'g>> {
        self.subgroups
    }
}

pub fn all_subgroups(group: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup<'_>>> {
    Ok(Lattice::enumerate(group, cap)?.into_vec())
}

/// Abelian subgroups not properly contained in another abelian subgroup.
pub fn maximal_abelian_subgroups<'g>(lattice: &Lattice<'g>) -> Vec<Subgroup<'g>> {
    let abelian: Vec<&Subgroup<'g>> = lattice.iter().filter(|s| s.is_abelian()).collect();
    abelian
        .iter()
        .filter(|a| {
            !abelian
                .iter()
                .any(|b| b.order() > a.order() && a.is_subgroup_of(b))
        })
        .map(|a| (*a).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::collections::HashSet;

    /// Brute force: every subset closed under multiplication that contains
    /// the identity. Only viable for tiny groups.
    fn subgroups_by_subsets(g: &FiniteGroup) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|mask| {
                mask & 1 == 1
                    && (0..n).all(|a| {
                        mask >> a & 1 == 0
                            || (0..n).all(|b| mask >> b & 1 == 0 || mask >> g.mul(a, b) & 1 == 1)
                    })
            })
            .count()
    }

    #[test]
    fn lattice_sizes_match_subset_brute_force() {
        for g in [
            catalog::cyclic(5).unwrap(),
            catalog::symmetric(3).unwrap(),
            catalog::dihedral(8).unwrap(),
            catalog::dicyclic(2).unwrap(),
            catalog::cyclic(6).unwrap(),
        ] {
            let l = Lattice::enumerate(&g, 400).unwrap();
            assert_eq!(l.len(), subgroups_by_subsets(&g), "{}", g.name());
        }
    }

    #[test]
    fn lattice_sizes() {
        let cases = [
            (catalog::cyclic(7).unwrap(), 2),
            (catalog::symmetric(3).unwrap(), 6),
            (catalog::dihedral(8).unwrap(), 10),
            (catalog::alternating(4).unwrap(), 10),
            (catalog::symmetric(4).unwrap(), 30),
            (catalog::alternating(5).unwrap(), 59),
            (catalog::dicyclic(4).unwrap(), 11),
        ];
        for (g, n) in cases {
            assert_eq!(all_subgroups(&g, 400).unwrap().len(), n, "{}", g.name());
        }
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let s5 = catalog::symmetric(5).unwrap();
        assert!(matches!(
            Lattice::enumerate(&s5, 100),
            Err(Error::LatticeCapExceeded {
                order: 120,
                cap: 100
            })
        ));
    }

    #[test]
    fn lattice_is_deterministic_and_conjugation_closed() {
        let s4 = catalog::symmetric(4).unwrap();
        let a = all_subgroups(&s4, 400).unwrap();
        let b = all_subgroups(&s4, 400).unwrap();
        assert_eq!(a, b);
        let set: HashSet<_> = a.iter().cloned().collect();
        for h in &a {
            assert_eq!(s4.order() % h.order(), 0);
            for g in 0..s4.order() {
                assert!(set.contains(&h.conjugate(g)));
            }
        }
    }

    #[test]
    fn maximal_abelian_examples() {
        let c6 = catalog::cyclic(6).unwrap();
        let l = Lattice::enumerate(&c6, 400).unwrap();
        let m = maximal_abelian_subgroups(&l);
        assert_eq!(m.len(), 1);
        assert!(m[0].is_whole());

        let s3 = catalog::symmetric(3).unwrap();
        let m = maximal_abelian_subgroups(&Lattice::enumerate(&s3, 400).unwrap());
        let mut orders: Vec<usize> = m.iter().map(Subgroup::order).collect();
        orders.sort();
        assert_eq!(orders, [2, 2, 2, 3]);

        let d8 = catalog::dihedral(8).unwrap();
        let m = maximal_abelian_subgroups(&Lattice::enumerate(&d8, 400).unwrap());
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|a| a.order() == 4));
    }
}
