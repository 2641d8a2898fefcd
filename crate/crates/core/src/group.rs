//! Finite permutation groups held as fully enumerated element lists.
//!
//! Elements are sorted lexicographically by image array, so the identity is
//! always element 0. Everything above this module addresses elements by
//! their index in that list.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Groups up to this order get a full multiplication table on first use.
const TABLE_LIMIT: usize = 1024;

pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: OnceLock<Vec<u32>>,
}

pub fn group_from_generators(
    name: impl Into<String>,
    degree: usize,
    generators: Vec<Permutation>,
    max_order: usize,
) -> Result<FiniteGroup> {
    FiniteGroup::from_generators(name, degree, generators, max_order)
}

impl FiniteGroup {
    /// Enumerates `⟨generators⟩` breadth-first, failing once the closure
    /// grows past `max_order` elements.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let max_order = max_order.max(1);

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then_unchecked(g);
                if !seen.contains(&y) {
                    if seen.len() == max_order {
                        return Err(Error::OrderCapExceeded { cap: max_order });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();

        Ok(FiniteGroup {
            name: name.into(),
            degree,
            generators,
            generator_ids,
            elements,
            index,
            inverses,
            table: OnceLock::new(),
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[usize] {
        &self.generator_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn require(&self, p: &Permutation) -> Result<usize> {
        self.index_of(p).ok_or_else(|| Error::NotInGroup {
            group: self.name.clone(),
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Product "a, then b".
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.elements.len();
        if n <= TABLE_LIMIT {
            let table = self.table.get_or_init(|| self.build_table());
            table[a * n + b] as usize
        } else {
            self.index[&self.elements[a].then_unchecked(&self.elements[b])]
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ h g`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// `[x, g] = x⁻¹ g⁻¹ x g`.
    pub fn commutator(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(g)), self.mul(x, g))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_ids;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                table.push(self.index[&a.then_unchecked(b)] as u32);
            }
        }
        table
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn empty_generating_set_gives_trivial_group() {
        let g = group_from_generators("1", 3, vec![], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn s3_and_a5_closures() {
        let s3 = group_from_generators(
            "S3",
            3,
            vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        let a5 = group_from_generators(
            "A5",
            5,
            vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn order_cap_is_an_error() {
        let err = group_from_generators(
            "S5",
            5,
            vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])],
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded { cap: 100 }));
        // exactly at the cap is fine
        let ok = group_from_generators(
            "S5",
            5,
            vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])],
            120,
        );
        assert_eq!(ok.unwrap().order(), 120);
    }

    #[test]
    fn generator_degree_must_match() {
        let err = group_from_generators("x", 4, vec![cyc(3, &[&[0, 1]])], 10).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn elements_are_sorted_and_closed() {
        let g = group_from_generators(
            "D8",
            4,
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])],
            DEFAULT_MAX_ORDER,
        )
        .unwrap();
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for gen in g.generators() {
            assert!(g.contains(gen));
        }
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            for b in 0..g.order() {
                let prod = g.element(a).then(g.element(b)).unwrap();
                assert_eq!(g.index_of(&prod), Some(g.mul(a, b)));
                assert!(g.conj(a, b) < g.order());
            }
        }
    }

    #[test]
    fn enumeration_is_stable() {
        let gens = vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1, 2]])];
        let a = group_from_generators("A5", 5, gens.clone(), 100).unwrap();
        let b = group_from_generators("A5", 5, gens, 100).unwrap();
        assert_eq!(a.elements(), b.elements());
    }
}
