use std::fmt;

use crate::error::{Error, Result};

/// An element `s^t r^k` of the dihedral group of the `n`-gon, `r^n = s^2 = 1`,
/// `srs = r^-1`. Equality is structural on the normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralWord {
    t: u8,
    k: u32,
    n: u32,
}

impl DihedralWord {
    pub fn new(t: u8, k: i64, n: u32) -> Self {
        Self { t: t & 1, k: k.rem_euclid(n as i64) as u32, n }
    }

    pub fn rotation(k: i64, n: u32) -> Self {
        Self::new(0, k, n)
    }

    pub fn reflection(k: i64, n: u32) -> Self {
        Self::new(1, k, n)
    }

    pub fn t(&self) -> u8 {
        self.t
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(s^a r^b)(s^c r^d) = s^(a+c) r^(±b + d)` using `r s = s r^-1`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n as i64;
        let moved = if other.t == 1 { -(self.k as i64) } else { self.k as i64 };
        Self { t: self.t ^ other.t, k: (moved + other.k as i64).rem_euclid(n) as u32, n: self.n }
    }

    pub fn inverse(&self) -> Self {
        if self.t == 1 {
            *self
        } else {
            Self::rotation(-(self.k as i64), self.n)
        }
    }

    /// Parses `s^t r^k`; either factor may be omitted and a bare `s`/`r` means exponent 1.
    pub fn parse(s: &str, n: u32) -> Result<Self> {
        let mut t = 0i64;
        let mut k = 0i64;
        let mut seen_r = false;
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" || trimmed == "e" {
            return Ok(Self::new(0, 0, n));
        }
        for token in trimmed.split_whitespace() {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?,
                ),
                None => (token, 1),
            };
            match base {
                "s" if !seen_r => t += exp,
                "r" => {
                    seen_r = true;
                    k += exp;
                }
                _ => return Err(Error::Parse(format!("expected s^t r^k, got {s:?}"))),
            }
        }
        Ok(Self::new(t.rem_euclid(2) as u8, k, n))
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{} r^{}", self.t, self.k)
    }
}
