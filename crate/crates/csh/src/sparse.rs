//! Sparse integer matrices and exact / multi-modular rank computation.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Sparse matrix with exact integer entries, stored as sorted row-major
/// triplets with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, i64)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("modular ranks disagree: {0} mod {2} vs {1} mod {3}")]
    ModularMismatch(usize, usize, u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    Modular,
    Auto,
}

impl std::str::FromStr for RankMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(RankMode::Exact),
            "modular" => Ok(RankMode::Modular),
            "auto" => Ok(RankMode::Auto),
            other => Err(format!("unknown rank mode `{other}`")),
        }
    }
}

impl SparseMatrix {
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        mut triplets: Vec<(u32, u32, i64)>,
    ) -> SparseMatrix {
        triplets.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut entries: Vec<(u32, u32, i64)> = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            debug_assert!((r as usize) < rows && (c as usize) < cols);
            match entries.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => entries.push((r, c, v)),
            }
        }
        entries.retain(|&(_, _, v)| v != 0);
        SparseMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        let entries = (0..n as u32).map(|i| (i, i, 1)).collect();
        SparseMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(u32, u32, i64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, s: i64) -> SparseMatrix {
        let entries = if s == 0 {
            Vec::new()
        } else {
            self.entries.iter().map(|&(r, c, v)| (r, c, v * s)).collect()
        };
        SparseMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Per-row adjacency: `row_lists()[r]` holds (col, value) pairs.
    pub fn row_lists(&self) -> Vec<Vec<(u32, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r as usize].push((c, v));
        }
        rows
    }

    /// Per-column adjacency: `col_lists()[c]` holds (row, value) pairs.
    pub fn col_lists(&self) -> Vec<Vec<(u32, i64)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for &(r, c, v) in &self.entries {
            cols[c as usize].push((r, v));
        }
        cols
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows);
        let rhs_rows = rhs.row_lists();
        let mut triplets = Vec::new();
        let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
        let self_rows = self.row_lists();
        for (r, row) in self_rows.iter().enumerate() {
            acc.clear();
            for &(k, v) in row {
                for &(c, w) in &rhs_rows[k as usize] {
                    *acc.entry(c).or_insert(0) += v * w;
                }
            }
            for (&c, &v) in &acc {
                if v != 0 {
                    triplets.push((r as u32, c, v));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, rhs.cols, triplets)
    }

    pub fn to_dense(&self) -> Dense {
        let mut data = vec![0i64; self.rows * self.cols];
        for &(r, c, v) in &self.entries {
            data[r as usize * self.cols + c as usize] = v;
        }
        Dense { rows: self.rows, cols: self.cols, data }
    }
}

/// Dense integer matrix used as the staging area for rank computations.
#[derive(Clone, Debug)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Dense {
        Dense { rows, cols, data: vec![0; rows * cols] }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }
}

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
pub fn rank_exact(m: &Dense) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| BigInt::from(m.at(r, c))).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    for col in 0..m.cols {
        let pivot_row = (rank..m.rows).find(|&r| !a[r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        a.swap(rank, pr);
        let pivot = a[rank][col].clone();
        for r in rank + 1..m.rows {
            let head = std::mem::replace(&mut a[r][col], BigInt::zero());
            for c in col + 1..m.cols {
                let num = &pivot * &a[r][c] - &head * &a[rank][c];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                a[r][c] = q;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Rank of the reduction mod p, by in-place Gaussian elimination.
pub fn rank_mod_prime(m: &Dense, p: u64) -> usize {
    let cols = m.cols;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let v = m.at(r, c) % p as i64;
                    if v < 0 {
                        (v + p as i64) as u64
                    } else {
                        v as u64
                    }
                })
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][col], p);
        for r in rank + 1..a.len() {
            let v = a[r][col];
            if v == 0 {
                continue;
            }
            let f = v * inv % p;
            let neg = p - f;
            let (head, tail) = a.split_at_mut(rank + 1);
            let prow = &head[rank];
            let row = &mut tail[r - rank - 1];
            row[col] = 0;
            for c in col + 1..cols {
                // p < 2^31, so the accumulator stays below 2^63.
                row[c] = (row[c] + neg * prow[c]) % p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime.
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow_u128(base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % n as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % n as u128;
        }
        b = b * b % n as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministically draws `count` distinct primes in [2^30, 2^31) from the
/// given seed.
pub fn primes_from_seed(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::with_capacity(count);
    while primes.len() < count {
        let candidate: u64 = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime_u64(candidate) && !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    primes
}

/// Rank mod two independent primes with an agreement check.
pub fn rank_modular(m: &Dense, primes: &[u64]) -> Result<usize, RankError> {
    assert!(primes.len() >= 2);
    let r0 = rank_mod_prime(m, primes[0]);
    let r1 = rank_mod_prime(m, primes[1]);
    if r0 != r1 {
        return Err(RankError::ModularMismatch(r0, r1, primes[0], primes[1]));
    }
    Ok(r0)
}

/// Dimension threshold up to which `RankMode::Auto` stays exact.
pub const AUTO_EXACT_DIM_LIMIT: usize = 600;

/// Dispatches on the rank mode; returns the rank and the backend used.
pub fn rank_with_mode(
    m: &Dense,
    mode: RankMode,
    exact_dim_limit: usize,
    primes: &[u64],
) -> Result<(usize, &'static str), RankError> {
    let exact = match mode {
        RankMode::Exact => true,
        RankMode::Modular => false,
        RankMode::Auto => m.rows.max(m.cols) <= exact_dim_limit,
    };
    if exact {
        Ok((rank_exact(m), "exact"))
    } else {
        Ok((rank_modular(m, primes)?, "modular"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: usize, cols: usize, vals: &[i64]) -> Dense {
        Dense { rows, cols, data: vals.to_vec() }
    }

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = SparseMatrix::from_triplets(2, 2, vec![(0, 0, 1), (0, 0, -1), (1, 1, 3)]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.entries(), &[(1, 1, 3)]);
    }

    #[test]
    fn sparse_product() {
        let a = SparseMatrix::from_triplets(2, 3, vec![(0, 0, 1), (0, 2, 2), (1, 1, -1)]);
        let b = SparseMatrix::from_triplets(3, 2, vec![(0, 0, 3), (2, 0, 1), (1, 1, 5)]);
        let c = a.mul(&b);
        assert_eq!(c.entries(), &[(0, 0, 5), (1, 1, -5)]);
        let id = SparseMatrix::identity(3);
        assert_eq!(a.mul(&id), a);
    }

    #[test]
    fn exact_rank_small_cases() {
        assert_eq!(rank_exact(&dense(2, 2, &[1, 0, 0, 1])), 2);
        assert_eq!(rank_exact(&dense(2, 2, &[1, 2, 2, 4])), 1);
        assert_eq!(rank_exact(&dense(3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 0])), 0);
        assert_eq!(
            rank_exact(&dense(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 1, 1, 1, 1])),
            2
        );
    }

    #[test]
    fn modular_rank_agrees_with_exact_on_random_matrices() {
        use rand::SeedableRng;
        let primes = primes_from_seed(7, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..40 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-6..=6)).collect();
            let m = Dense { rows, cols, data };
            assert_eq!(rank_modular(&m, &primes).unwrap(), rank_exact(&m));
        }
    }

    #[test]
    fn seeded_primes_are_deterministic_and_prime() {
        let a = primes_from_seed(42, 2);
        let b = primes_from_seed(42, 2);
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
        for &p in &a {
            assert!(is_prime_u64(p));
            assert!(p >= (1 << 30) && p < (1 << 31));
        }
        assert_ne!(primes_from_seed(43, 2), a);
    }

    #[test]
    fn prime_test_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64((1 << 31) - 1));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64((1 << 31) - 3));
        assert!(!is_prime_u64(1_073_741_825));
    }
}
