use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored 0-based.
///
/// Products compose left to right: `g.then(h)` applies `g` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n as u8).collect() }
    }

    /// Builds a permutation from its 1-based image list `[g(1), .., g(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[i - 1] = true;
            image.push((i - 1) as u8);
        }
        Ok(Self { image })
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<u8> = (0..n as u8).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point == 0 || point > n {
                    return Err(Error::Parse(format!("point {point} outside 1..{n}")));
                }
                if touched[point - 1] {
                    return Err(Error::Parse(format!("point {point} repeated in cycle notation")));
                }
                touched[point - 1] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                image[point - 1] = (next - 1) as u8;
            }
        }
        Ok(Self { image })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in permutation {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { image: self.image.iter().map(|&i| other.image[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0u8; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j as usize] = i as u8;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.image[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Position in the lexicographic order of image lists (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.image.len();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_later = self.image[i + 1..].iter().filter(|&&v| v < self.image[i]).count();
            rank = rank * (n - i) + smaller_later;
        }
        rank
    }

    /// All permutations of degree `n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Self> {
        let mut current: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Self { image: current.clone() }];
        while next_permutation(&mut current) {
            out.push(Self { image: current.clone() });
        }
        out
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
