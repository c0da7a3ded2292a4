use std::fmt;
use std::str::FromStr;

/// Comma-separated integers and inclusive ranges, e.g. `2,4,5` or `1..15`.
/// The empty string is the empty list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntList(pub Vec<u64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("invalid integer {t:?} in {s:?}"));
            match item.split_once("..") {
                Some((lo, hi)) => {
                    let hi = hi.strip_prefix('=').unwrap_or(hi);
                    let (lo, hi) = (parse(lo)?, parse(hi)?);
                    if lo > hi {
                        return Err(format!("empty range {item:?}"));
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(parse(item)?),
            }
        }
        Ok(IntList(out))
    }
}

impl fmt::Display for IntList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl IntList {
    /// The single value of a one-element list.
    pub fn single(&self, flag: &str) -> anyhow::Result<u64> {
        match self.0.as_slice() {
            [v] => Ok(*v),
            _ => anyhow::bail!("--{flag} takes exactly one value here, got {:?}", self.to_string()),
        }
    }
}
