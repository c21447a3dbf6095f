//! Integer partitions: the index set for Specht modules, tableau shapes,
//! conjugacy classes and component types of spanning subgraphs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing: {0} is followed by {1}")]
    NotDecreasing(u32, u32),
    #[error("cannot parse partition from `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for w in parts.windows(2) {
            if w[1] > w[0] {
                return Err(PartitionError::NotDecreasing(w[0], w[1]));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The single-row partition `(n)`, or the empty partition for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    /// The single-column partition `1^n`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize], n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity_of(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Dominance order: every prefix sum of `self` is >= the corresponding
    /// prefix sum of `other`. Only meaningful when both are partitions of the
    /// same n.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.n, other.n);
        let len = self.parts.len().max(other.parts.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..len {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return false;
            }
        }
        true
    }

    /// Reverse-lexicographic comparison: `(n)` sorts first, `1^n` last.
    pub fn cmp_revlex(&self, other: &Partition) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// Exponent notation, e.g. `3 2^2 1^3`. Round-trips through `parse`.
    pub fn exponent_string(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                out.push(format!("{v}"));
            } else {
                out.push(format!("{v}^{mult}"));
            }
            i = j;
        }
        out.join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "Partition()")
        } else {
            write!(f, "Partition({self})")
        }
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts comma-separated parts (`3,2,2`) and exponent form
    /// (`3 2^2`, `2^2 1^3`). The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let err = |reason: &str| PartitionError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts: Vec<u32> = Vec::new();
        for tok in s.split(|c| c == ',' || c == ' ').filter(|t| !t.is_empty()) {
            if let Some((base, exp)) = tok.split_once('^') {
                let base: u32 = base.parse().map_err(|_| err("invalid part"))?;
                let exp: usize = exp.parse().map_err(|_| err("invalid exponent"))?;
                parts.extend(std::iter::repeat(base).take(exp));
            } else {
                parts.push(tok.parse().map_err(|_| err("invalid part"))?);
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse-lexicographic order (largest part
/// first): `partitions_of(4)` is `4, 31, 2^2, 21^2, 1^4`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        let parts = prefix.clone();
        let n = parts.iter().sum();
        out.push(Partition { parts, n });
        return;
    }
    let hi = max_part.min(remaining);
    for p in (1..=hi).rev() {
        prefix.push(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_of_zero_is_empty_partition() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_revlex_order() {
        let got = partitions_of(4);
        let want = vec![p("4"), p("3,1"), p("2,2"), p("2,1,1"), p("1,1,1,1")];
        assert_eq!(got, want);
    }

    #[test]
    fn partition_counts_by_brute_force() {
        // Independent count: partitions of n with parts <= k, by recursion on k.
        fn count(n: u32, k: u32) -> usize {
            if n == 0 {
                return 1;
            }
            if k == 0 {
                return 0;
            }
            count(n, k - 1) + if n >= k { count(n - k, k) } else { 0 }
        }
        for n in 0..=12 {
            assert_eq!(partitions_of(n).len(), count(n, n), "n = {n}");
        }
        assert_eq!(partitions_of(7).len(), 15);
    }

    #[test]
    fn rejects_invalid_parts() {
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart));
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(1, 2))
        );
    }

    #[test]
    fn parses_both_text_forms() {
        assert_eq!(p("3,2,2").parts(), &[3, 2, 2]);
        assert_eq!(p("3 2^2").parts(), &[3, 2, 2]);
        assert_eq!(p("2^2 1^3").parts(), &[2, 2, 1, 1, 1]);
        assert_eq!(p(""), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn display_and_exponent_round_trip() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
                assert_eq!(lam.exponent_string().parse::<Partition>().unwrap(), lam);
            }
        }
    }

    #[test]
    fn dominance_basics() {
        assert!(p("4").dominates(&p("2,2")));
        assert!(p("2,2").dominates(&p("2,1,1")));
        assert!(!p("1,1,1,1").dominates(&p("2,2")));
        assert!(p("3,1").dominates(&p("3,1")));
    }

    #[test]
    fn revlex_matches_generation_order() {
        for n in 0..=9 {
            let all = partitions_of(n);
            for w in all.windows(2) {
                assert_eq!(w[0].cmp_revlex(&w[1]), Ordering::Less);
            }
        }
    }
}
