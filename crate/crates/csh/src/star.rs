//! Closed-form multiplicity formulas for `H_{1,0}` of star graphs, and the
//! empirical vanishing-conjecture checker.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::chain::{homology_multiplicities, MultiplicityTable, OracleConfig, OracleError};
use crate::comb::binomial;
use crate::graph::Graph;
use crate::partition::Partition;
use crate::tableau::f_syt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("invalid star shape: n = {n}, ell = {ell}, k = {k} (need ell >= 2, n - ell - 2k >= 0)")]
    InvalidShape { n: u32, ell: u32, k: u32 },
    #[error("arguments outside the formula's domain: n = {n}, parameter = {param}")]
    Domain { n: u32, param: u32 },
    #[error("formula is negative at n = {n}, ell = {ell}, k = {k} (deficit {deficit}): outside its validity domain")]
    Negative { n: u32, ell: u32, k: u32, deficit: BigUint },
    #[error("non-integral value at n = {n}, k = {k}: outside the formula's domain")]
    NonIntegral { n: u32, k: u32 },
}

/// The shape `lam = ell 2^k 1^(n - ell - 2k)` of a partition of n with at
/// most one part above 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarShape {
    n: u32,
    ell: u32,
    k: u32,
}

impl StarShape {
    pub fn new(n: u32, ell: u32, k: u32) -> Result<Self, StarError> {
        if ell < 2 || ell + 2 * k > n {
            return Err(StarError::InvalidShape { n, ell, k });
        }
        Ok(StarShape { n, ell, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The full partition `ell 2^k 1^(n - ell - 2k)`.
    pub fn partition(&self) -> Partition {
        let ones = (self.n - self.ell - 2 * self.k) as usize;
        Partition::new(
            [vec![self.ell], vec![2; self.k as usize], vec![1; ones]].concat(),
        )
        .expect("validated shape parameters form a partition")
    }

    /// The partition with the first row removed: `2^k 1^(n - ell - 2k)`.
    pub fn tail(&self) -> Partition {
        let ones = (self.n - self.ell - 2 * self.k) as usize;
        Partition::new([vec![2; self.k as usize], vec![1; ones]].concat())
            .expect("tail of a validated shape is a partition")
    }
}

/// Multiplicity of `S_lam` in `H_{1,0}` of the n-vertex star for
/// `lam = ell 2^k 1^(n - ell - 2k)`:
/// `C(n-1, ell-1) f^(2^k 1^(n-ell-2k)) - f^lam`.
/// A negative value is reported as an error, never clamped.
pub fn mult_general(shape: &StarShape) -> Result<BigUint, StarError> {
    let positive = BigInt::from(
        binomial(u64::from(shape.n - 1), u64::from(shape.ell - 1)) * f_syt(&shape.tail()),
    );
    let negative = BigInt::from(f_syt(&shape.partition()));
    let diff = positive - negative;
    if diff.is_negative() {
        return Err(StarError::Negative {
            n: shape.n,
            ell: shape.ell,
            k: shape.k,
            deficit: (-diff).to_biguint().expect("negated negative is positive"),
        });
    }
    Ok(diff.to_biguint().expect("nonnegative difference"))
}

/// Multiplicity of `S_(ell 2 1^(n-ell-2))` in `H_{1,0}` of the star:
/// `C(n-2, ell)` for `2 <= ell <= n - 2`.
pub fn mult_hook_case(n: u32, ell: u32) -> Result<BigUint, StarError> {
    if !(2..=n.saturating_sub(2)).contains(&ell) {
        return Err(StarError::Domain { n, param: ell });
    }
    Ok(binomial(u64::from(n - 2), u64::from(ell)))
}

/// Multiplicity of `S_(2^k 1^(n-2k))` in `H_{1,0}` of the star:
/// `(n - 2k + 1)(C(n-1, k-1) - (1/k) C(n, k-1))`, evaluated in exact
/// rational arithmetic with the integrality of the result asserted.
pub fn mult_two_column(n: u32, k: u32) -> Result<BigUint, StarError> {
    if k < 1 || 2 * k > n {
        return Err(StarError::Domain { n, param: k });
    }
    let b1 = BigRational::from(BigInt::from(binomial(
        u64::from(n - 1),
        u64::from(k - 1),
    )));
    let b2 = BigRational::from(BigInt::from(binomial(u64::from(n), u64::from(k - 1))));
    let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
    let value = BigRational::from(BigInt::from(n - 2 * k + 1)) * (b1 - inv_k * b2);
    if !value.is_integer() {
        return Err(StarError::NonIntegral { n, k });
    }
    let value = value.to_integer();
    if value.is_negative() {
        return Err(StarError::Negative {
            n,
            ell: 2,
            k: k - 1,
            deficit: (-value).to_biguint().expect("negated negative is positive"),
        });
    }
    Ok(value.to_biguint().expect("nonnegative integer"))
}

/// Closed-form prediction of the full `H_{1,0}` table of the n-vertex star.
/// Only shapes `ell 2^k 1^m` can be nonzero under the vanishing conjecture,
/// which the prediction assumes; the flag records that.
pub struct Prediction {
    pub n: u32,
    pub table: MultiplicityTable,
    pub assumes_conjecture: bool,
}

pub fn predict_h10_star(n: u32) -> Result<Prediction, StarError> {
    if n < 4 {
        return Err(StarError::Domain { n, param: n });
    }
    let mut table = MultiplicityTable::new();
    for ell in 2..=n {
        for k in 0..=(n - ell) / 2 {
            let shape = StarShape::new(n, ell, k)?;
            let mult = mult_general(&shape)?;
            let mult = u64::try_from(mult).expect("prediction values fit in u64");
            table.set(shape.partition(), mult);
        }
    }
    Ok(Prediction { n, table, assumes_conjecture: true })
}

/// The published `H_{1,0}` tables for stars on 4 to 7 vertices, frozen as
/// reference constants.
pub fn reference_h10_table(n: u32) -> Option<MultiplicityTable> {
    let pairs: Vec<(&str, u64)> = match n {
        4 => vec![("2,2", 1)],
        5 => vec![("2,2,1", 3), ("3,2", 1)],
        6 => vec![("2,2,1,1", 6), ("2,2,2", 5), ("3,2,1", 4), ("4,2", 1)],
        7 => vec![
            ("2,2,1,1,1", 10),
            ("2,2,2,1", 16),
            ("3,2,1,1", 10),
            ("3,2,2", 9),
            ("4,2,1", 5),
            ("5,2", 1),
        ],
        _ => return None,
    };
    Some(MultiplicityTable::from_pairs(
        pairs
            .into_iter()
            .map(|(s, m)| (s.parse().expect("reference partitions parse"), m)),
    ))
}

/// A nonzero multiplicity the vanishing conjecture says should be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub lam: Partition,
    pub mult: u64,
}

#[derive(Debug)]
pub struct ConjectureReport {
    pub n: u32,
    pub violations: Vec<Violation>,
    pub tables: Vec<(usize, MultiplicityTable)>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the oracle on the n-vertex star at every homological index and
/// collects each nonzero multiplicity with `i >= 2` or `lam_2 >= 3`.
/// Violations are findings, not failures.
pub fn check_conjecture(n: u32, cfg: &OracleConfig) -> Result<ConjectureReport, OracleError> {
    let g = Graph::star(n).expect("n >= 2 for a star");
    let mut violations = Vec::new();
    let mut tables = Vec::new();
    for i in 0..=g.edge_count() {
        let h = homology_multiplicities(&g, i, cfg)?;
        for (lam, mult) in h.table.iter_revlex() {
            let lam2 = lam.part(1);
            if i >= 2 || lam2 >= 3 {
                violations.push(Violation { i, lam: lam.clone(), mult });
            }
        }
        tables.push((i, h.table));
    }
    Ok(ConjectureReport { n, violations, tables })
}
