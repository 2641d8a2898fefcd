pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(prime_divisors(120), [2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(120, 2), 8);
        assert_eq!(p_part(120, 7), 1);
    }
}
