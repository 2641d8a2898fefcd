//! Subgroups as element bitsets over an ambient [`FiniteGroup`].

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// A subgroup of an enumerated group. Equality, hashing and ordering look
/// only at the element set; ordering is by order first, then by the sorted
/// list of element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: FixedBitSet,
    order: usize,
    gens: OnceLock<Vec<usize>>,
}

impl<'g> Subgroup<'g> {
    pub fn trivial(group: &'g FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(group.identity());
        Self::with_gens(group, members, Vec::new())
    }

    pub fn whole(group: &'g FiniteGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Self::with_gens(group, members, group.generator_ids().to_vec())
    }

    /// Caller guarantees `members` is closed under the group operation.
    pub(crate) fn from_members(group: &'g FiniteGroup, members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Subgroup {
            group,
            members,
            order,
            gens: OnceLock::new(),
        }
    }

    fn with_gens(group: &'g FiniteGroup, members: FixedBitSet, gens: Vec<usize>) -> Self {
        let s = Self::from_members(group, members);
        let _ = s.gens.set(gens);
        s
    }

    /// Smallest subgroup containing the given element indices.
    pub fn generated_by(group: &'g FiniteGroup, seed: impl IntoIterator<Item = usize>) -> Self {
        let mut gens: Vec<usize> = Vec::new();
        let mut current = Self::trivial(group);
        for x in seed {
            if !current.contains(x) {
                gens.push(x);
                current = current.join_element(x);
            }
        }
        let _ = current.gens.set(gens);
        current
    }

    /// Smallest subgroup containing the given permutations.
    pub fn closure_of(group: &'g FiniteGroup, seed: &[Permutation]) -> Result<Self> {
        let ids = seed
            .iter()
            .map(|p| group.require(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated_by(group, ids))
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.group.index_of(p).is_some_and(|i| self.contains(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn element_perms(&self) -> Vec<Permutation> {
        self.iter().map(|i| self.group.element(i).clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Self::from_members(self.group, members)
    }

    /// A generating set. Seeds used at construction are kept; otherwise a
    /// greedy set is built from the smallest missing elements.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let mut gens = Vec::new();
            let mut current = Self::trivial(self.group);
            for x in self.iter() {
                if current.order == self.order {
                    break;
                }
                if !current.contains(x) {
                    gens.push(x);
                    current = current.join_element(x);
                }
            }
            gens
        })
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators()
            .iter()
            .map(|&i| self.group.element(i).clone())
            .collect()
    }

    /// `⟨self, x⟩`.
    pub fn join_element(&self, x: usize) -> Subgroup<'g> {
        if self.contains(x) {
            return self.clone();
        }
        let g = self.group;
        let mut step: Vec<usize> = self.generators().to_vec();
        step.push(x);
        // self ⊆ ⟨step⟩, so closing self under right multiplication by
        // `step` yields exactly ⟨step⟩.
        let mut members = self.members.clone();
        let mut queue: VecDeque<usize> = self.iter().collect();
        while let Some(y) = queue.pop_front() {
            for &s in &step {
                let z = g.mul(y, s);
                if !members.put(z) {
                    queue.push_back(z);
                }
            }
        }
        Self::with_gens(g, members, step)
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        other
            .generators()
            .iter()
            .fold(self.clone(), |acc, &x| acc.join_element(x))
    }

    /// `{g⁻¹ h g : h ∈ self}` for an element index `g`.
    pub fn conjugate(&self, g: usize) -> Subgroup<'g> {
        let grp = self.group;
        let mut members = FixedBitSet::with_capacity(grp.order());
        for h in self.iter() {
            members.insert(grp.conj(h, g));
        }
        let gens = self.generators().iter().map(|&h| grp.conj(h, g)).collect();
        Self::with_gens(grp, members, gens)
    }

    /// True when `g` normalizes `self`.
    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.generators()
            .iter()
            .all(|&h| self.contains(self.group.conj(h, g)))
    }

    pub fn is_normal_in(&self, over: &Subgroup<'g>) -> bool {
        self.is_subgroup_of(over) && over.generators().iter().all(|&g| self.is_normalized_by(g))
    }

    pub fn is_normal(&self) -> bool {
        self.group
            .generator_ids()
            .iter()
            .all(|&g| self.is_normalized_by(g))
    }

    /// `N_K(self)` for an ambient subgroup `K`.
    pub fn normalizer_in(&self, over: &Subgroup<'g>) -> Subgroup<'g> {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for g in over.iter() {
            if self.is_normalized_by(g) {
                members.insert(g);
            }
        }
        Self::from_members(self.group, members)
    }

    /// `C_K(self)` for an ambient subgroup `K`.
    pub fn centralizer_in(&self, over: &Subgroup<'g>) -> Subgroup<'g> {
        let grp = self.group;
        let mut members = FixedBitSet::with_capacity(grp.order());
        for g in over.iter() {
            if self
                .generators()
                .iter()
                .all(|&h| grp.mul(g, h) == grp.mul(h, g))
            {
                members.insert(g);
            }
        }
        Self::from_members(grp, members)
    }

    /// Smallest normal subgroup of `over` containing `self`.
    pub fn normal_closure_in(&self, over: &Subgroup<'g>) -> Subgroup<'g> {
        let grp = self.group;
        let mut closure = self.clone();
        let mut k = 0;
        // generators of `closure` only grow by appending, so a single pass
        // over the growing list reaches a fixed point
        loop {
            let gens = closure.generators().to_vec();
            if k >= gens.len() {
                break;
            }
            let h = gens[k];
            k += 1;
            for &g in over.generators() {
                let c = grp.conj(h, g);
                if !closure.contains(c) {
                    closure = closure.join_element(c);
                }
            }
        }
        closure
    }

    pub fn is_abelian(&self) -> bool {
        let grp = self.group;
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| grp.mul(a, b) == grp.mul(b, a)))
    }

    /// True when every element order is a power of `p` (the trivial
    /// subgroup counts as a p-group for every p).
    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order as u64;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl Hash for Subgroup<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl PartialOrd for Subgroup<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order)?;
        for (k, p) in self.generator_perms().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("])")
    }
}

/// `⟨seed⟩` inside `group`.
pub fn subgroup_closure<'g>(group: &'g FiniteGroup, seed: &[Permutation]) -> Result<Subgroup<'g>> {
    Subgroup::closure_of(group, seed)
}

/// `H^g`, with `g` given as a permutation of the ambient group.
pub fn conjugate_subgroup<'g>(h: &Subgroup<'g>, g: &Permutation) -> Result<Subgroup<'g>> {
    let gid = h.group().require(g)?;
    Ok(h.conjugate(gid))
}

pub fn normalizer<'g>(group: &'g FiniteGroup, h: &Subgroup<'g>) -> Subgroup<'g> {
    h.normalizer_in(&Subgroup::whole(group))
}

pub fn centralizer<'g>(group: &'g FiniteGroup, h: &Subgroup<'g>) -> Subgroup<'g> {
    h.centralizer_in(&Subgroup::whole(group))
}

pub fn center(group: &FiniteGroup) -> Subgroup<'_> {
    let whole = Subgroup::whole(group);
    whole.centralizer_in(&whole)
}

pub fn normal_closure<'g>(group: &'g FiniteGroup, h: &Subgroup<'g>) -> Subgroup<'g> {
    h.normal_closure_in(&Subgroup::whole(group))
}

/// Walks `K₀ = G`, `K_{i+1} = H^{K_i}` to its fixed point; `H` is subnormal
/// iff the chain bottoms out at `H`.
pub fn is_subnormal<'g>(group: &'g FiniteGroup, h: &Subgroup<'g>) -> bool {
    is_subnormal_in(&Subgroup::whole(group), h)
}

pub fn is_subnormal_in<'g>(over: &Subgroup<'g>, h: &Subgroup<'g>) -> bool {
    if !h.is_subgroup_of(over) {
        return false;
    }
    let mut k = over.clone();
    loop {
        let next = h.normal_closure_in(&k);
        if next == k {
            return k == *h;
        }
        k = next;
    }
}
