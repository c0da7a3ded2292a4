//! Integer helpers: primality, factorization, gcd.

pub use num_integer::gcd;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factors of `n` with multiplicity, in ascending order. `1` has none.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n % d == 0 {
            out.push(d);
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    let mut f = prime_factors(n);
    f.dedup();
    f
}

/// All primes `p` with `lo <= p <= hi`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| is_prime(p)).collect()
}

pub fn odd_primes_up_to(hi: u64) -> Vec<u64> {
    primes_in(3, hi)
}
