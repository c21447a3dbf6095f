//! Young tableaux: hook lengths, SYT/SSYT enumeration and Kostka numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::comb::factorial;
use crate::partition::Partition;

/// A filling of the Young diagram of `shape`: row i holds exactly
/// `shape.parts()[i]` entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("row {row} has {got} entries, shape requires {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("number of rows {got} does not match shape with {want} rows")]
    RowCount { got: usize, want: usize },
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        if rows.len() != shape.len() {
            return Err(TableauError::RowCount { got: rows.len(), want: shape.len() });
        }
        for (i, row) in rows.iter().enumerate() {
            let want = shape.parts()[i] as usize;
            if row.len() != want {
                return Err(TableauError::RowLength { row: i, got: row.len(), want });
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds the tableau whose shape is given by the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, crate::partition::PartitionError> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom.
    pub fn is_ssyt(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[1] < w[0]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] <= self.rows[r - 1][c] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_syt(&self) -> bool {
        self.is_ssyt() && self.content().iter().all(|&m| m == 1)
    }

    /// Count vector of entry values: `content()[i]` is the number of entries
    /// equal to `i + 1`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for row in &self.rows {
            for &v in row {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "Tableau[{}]", rows.join(" | "))
    }
}

/// The tableau whose box (r, c) holds the hook length
/// `arm + leg + 1 = (parts[r] - c - 1) + #{r' > r : parts[r'] > c} + 1`.
pub fn hook_lengths(shape: &Partition) -> Tableau {
    let parts = shape.parts();
    let mut rows = Vec::with_capacity(parts.len());
    for (r, &len) in parts.iter().enumerate() {
        let mut row = Vec::with_capacity(len as usize);
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&p| p > c).count() as u32;
            row.push(arm + leg + 1);
        }
        rows.push(row);
    }
    Tableau { shape: shape.clone(), rows }
}

/// Number of standard Young tableaux of `shape`, by the hook length formula.
pub fn f_syt(shape: &Partition) -> BigUint {
    let mut denom = BigUint::from(1u32);
    for row in hook_lengths(shape).rows() {
        for &h in row {
            denom *= h;
        }
    }
    let num = factorial(u64::from(shape.n()));
    let (q, r) = num_integer::Integer::div_rem(&num, &denom);
    assert!(
        r.is_zero(),
        "hook product does not divide {}! for shape {shape}",
        shape.n()
    );
    q
}

/// All semistandard tableaux of the given shape and content, in lexicographic
/// order of the row-reading word.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    assert_eq!(shape.n(), content.n(), "shape and content must have equal size");
    if shape.n() == 0 {
        return vec![Tableau { shape: shape.clone(), rows: Vec::new() }];
    }
    let nvals = content.len();
    let mut budget: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| Vec::with_capacity(l as usize)).collect();
    let mut out = Vec::new();
    fill_cell(shape, nvals, &mut budget, &mut rows, 0, 0, &mut out);
    out
}

fn fill_cell(
    shape: &Partition,
    nvals: usize,
    budget: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    r: usize,
    c: usize,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    let (nr, nc) = if c + 1 < shape.parts()[r] as usize { (r, c + 1) } else { (r + 1, 0) };
    let mut lo = 1u32;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=nvals as u32 {
        if budget[v as usize - 1] == 0 {
            continue;
        }
        budget[v as usize - 1] -= 1;
        rows[r].push(v);
        fill_cell(shape, nvals, budget, rows, nr, nc, out);
        rows[r].pop();
        budget[v as usize - 1] += 1;
    }
}

/// All standard Young tableaux of `shape`, each exactly once.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    enumerate_ssyt(shape, &Partition::column(shape.n()))
}

/// Kostka number: the number of SSYT of the given shape and content, equally
/// the multiplicity of the Specht module `S_shape` in the permutation module
/// `M_content`. Memoized.
pub fn kostka(shape: &Partition, content: &Partition) -> u64 {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&(shape.clone(), content.clone())) {
        return v;
    }
    let v = enumerate_ssyt(shape, content).len() as u64;
    cache
        .lock()
        .unwrap()
        .insert((shape.clone(), content.clone()), v);
    v
}
