//! Sylow subgroups without the full lattice.
//!
//! One Sylow p-subgroup is grown from the trivial subgroup: while `|P|` is
//! short of the full p-part, some `x ∈ N_G(P) \ P` has `x^p ∈ P`, and
//! `⟨P, x⟩` has order `p·|P|`. The rest are its conjugates.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::primes::{is_prime, p_part};
use crate::subgroup::Subgroup;

/// All Sylow p-subgroups, sorted. When `p` does not divide `|G|` the only
/// one is the trivial subgroup.
pub fn sylow_subgroups(group: &FiniteGroup, p: u64) -> Result<Vec<Subgroup<'_>>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(group.order() as u64, p) as usize;
    let whole = Subgroup::whole(group);
    let mut sylow = Subgroup::trivial(group);
    while sylow.order() < target {
        let norm = sylow.normalizer_in(&whole);
        let x = norm
            .iter()
            .find(|&x| !sylow.contains(x) && sylow.contains(group.pow(x, p)))
            .expect("p divides |N(P):P| while P is not Sylow");
        sylow = sylow.join_element(x);
    }

    let mut seen: HashSet<Subgroup<'_>> = HashSet::new();
    let mut stack = vec![sylow.clone()];
    seen.insert(sylow);
    while let Some(q) = stack.pop() {
        for &g in group.generator_ids() {
            let c = q.conjugate(g);
            if !seen.contains(&c) {
                seen.insert(c.clone());
                stack.push(c);
            }
        }
    }
    let mut out: Vec<Subgroup<'_>> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::primes::prime_divisors;

    #[test]
    fn sylow_examples() {
        let d8 = catalog::dihedral(8).unwrap();
        let s = sylow_subgroups(&d8, 2).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_whole());

        let s3 = catalog::symmetric(3).unwrap();
        let s = sylow_subgroups(&s3, 3).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].order(), 3);

        let a5 = catalog::alternating(5).unwrap();
        let s = sylow_subgroups(&a5, 5).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|p| p.order() == 5));
    }

    #[test]
    fn non_divisor_gives_trivial_and_non_prime_errors() {
        let s3 = catalog::symmetric(3).unwrap();
        let s = sylow_subgroups(&s3, 5).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_trivial());
        assert!(matches!(sylow_subgroups(&s3, 4), Err(Error::NotPrime(4))));
        assert!(sylow_subgroups(&s3, 1).is_err());
    }

    #[test]
    fn sylow_counts() {
        for g in [
            catalog::symmetric(4).unwrap(),
            catalog::alternating(5).unwrap(),
            catalog::symmetric(5).unwrap(),
            catalog::frobenius_21().unwrap(),
            catalog::dicyclic(3).unwrap(),
        ] {
            for p in prime_divisors(g.order() as u64) {
                let s = sylow_subgroups(&g, p).unwrap();
                let pa = p_part(g.order() as u64, p) as usize;
                let n = s.len();
                assert_eq!(n as u64 % p, 1, "{} p={p}", g.name());
                assert_eq!((g.order() / pa) % n, 0);
                for q in &s {
                    assert_eq!(q.order(), pa);
                    // pairwise conjugate: every one is a conjugate of the first
                    assert!((0..g.order()).any(|x| s[0].conjugate(x) == *q));
                }
            }
        }
    }
}
