//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition order is fixed for the whole crate: `a.then(b)` (and the free
//! function [`compose`]) applies `a` first and `b` second, so the image of a
//! point `i` is `b[a[i]]`. Conjugation follows the same convention:
//! `h^g = g⁻¹ h g` means "apply g⁻¹, then h, then g".

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &img) in images.iter().enumerate() {
            let i = img as usize;
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {pos} has value {img}, outside 0..{n}"
                )));
            }
            if seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "entry {pos} repeats value {img}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    ///
    /// `from_cycles(3, &[&[0, 1, 2]])` sends 0 to 1, 1 to 2 and 2 to 0.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let p = p as usize;
                if p >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {p} outside 0..{degree}"
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self, other)?;
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        check_degree(self, g)?;
        Ok(g.inverse().then_unchecked(self).then_unchecked(g))
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                seen[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least k ≥ 1 with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Disjoint union action: `self` on the first block of points, `other`
    /// shifted onto the following block.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.images.len() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&v| v + shift));
        Permutation { images }
    }
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.then(b)
}

pub fn inverse(a: &Permutation) -> Permutation {
    a.inverse()
}

pub fn conjugate(h: &Permutation, g: &Permutation) -> Result<Permutation> {
    h.conjugate_by(g)
}

pub fn element_order(g: &Permutation) -> u64 {
    g.order()
}

fn check_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn composition_order_is_left_then_right() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0, 2 -> 1
        assert_eq!(compose(&a, &b).unwrap(), cyc(3, &[&[0, 2, 1]]));
        // (1 2) then (0 1): 0 -> 1, 1 -> 2, 2 -> 0
        assert_eq!(compose(&b, &a).unwrap(), cyc(3, &[&[0, 1, 2]]));
    }

    #[test]
    fn compose_examples() {
        let t = cyc(3, &[&[0, 1]]);
        let id = Permutation::identity(3);
        let r = cyc(3, &[&[0, 1, 2]]);
        assert!(compose(&t, &t).unwrap().is_identity());
        assert_eq!(compose(&id, &r).unwrap(), r);
        assert_eq!(compose(&r, &r).unwrap(), cyc(3, &[&[0, 2, 1]]));
        assert_eq!(compose(&r, &r).unwrap().images(), &[2, 0, 1]);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            compose(&a, &b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
        assert!(conjugate(&a, &b).is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = Permutation::identity(4);
        assert_eq!(inverse(&id), id);
        let t = cyc(3, &[&[0, 1]]);
        assert_eq!(inverse(&t), t);
        assert_eq!(inverse(&cyc(3, &[&[0, 1, 2]])), cyc(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn conjugate_examples() {
        let h = cyc(3, &[&[0, 1]]);
        let id = Permutation::identity(3);
        assert_eq!(conjugate(&h, &id).unwrap(), h);
        assert_eq!(conjugate(&h, &h).unwrap(), h);
        let g = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(conjugate(&h, &g).unwrap(), cyc(3, &[&[1, 2]]));
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(element_order(&Permutation::identity(5)), 1);
        assert_eq!(element_order(&cyc(2, &[&[0, 1]])), 2);
        assert_eq!(element_order(&cyc(5, &[&[0, 1, 2], &[3, 4]])), 6);
    }

    #[test]
    fn invalid_images_are_rejected() {
        assert!(Permutation::from_images(vec![]).is_err());
        let err = Permutation::from_images(vec![0, 3, 1]).unwrap_err();
        assert!(err.to_string().contains("entry 1"));
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 5]]).is_err());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[0, 1, 2], &[3, 4]]).to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn serde_uses_image_arrays() {
        let p = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,0]");
        let back: Permutation = serde_json::from_str("[1,2,0]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}
