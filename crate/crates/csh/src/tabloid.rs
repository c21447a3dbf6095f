//! Tabloids: ordered set partitions of {1..n} with weakly decreasing block
//! sizes, the coset basis of a Young-subgroup permutation module.

use std::fmt;

use thiserror::Error;

use crate::partition::Partition;

/// Blocks are stored sorted ascending; block positions are significant, so
/// two equal-size blocks in swapped positions are distinct tabloids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    blocks: Vec<Vec<u32>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TabloidError {
    #[error("block sizes must be weakly decreasing")]
    BadSizes,
    #[error("blocks must partition 1..=n")]
    NotAPartitionOfGround,
}

impl Tabloid {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> Result<Self, TabloidError> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        if blocks.windows(2).any(|w| w[1].len() > w[0].len()) {
            return Err(TabloidError::BadSizes);
        }
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let n = all.len() as u32;
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(TabloidError::NotAPartitionOfGround);
        }
        Ok(Tabloid { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
            .expect("block sizes are validated on construction")
    }

    /// Packed block-label key: 4 bits per vertex. Requires n <= 15.
    pub fn key(&self) -> u64 {
        let mut key = 0u64;
        for (bi, block) in self.blocks.iter().enumerate() {
            for &v in block {
                key |= (bi as u64) << (4 * (v as u64 - 1));
            }
        }
        key
    }

    /// Left group action: block j of the result is sigma applied to block j.
    pub fn apply(&self, sigma: &[u32]) -> Tabloid {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<u32> = b.iter().map(|&v| sigma[v as usize - 1]).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Tabloid { blocks }
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{{{}}}", s.join("|"))
    }
}

/// All tabloids of {1..n} with the given block sizes, in lexicographic order
/// of the sequence of sorted blocks.
pub fn enumerate_tabloids(shape: &Partition) -> Vec<Tabloid> {
    let n = shape.n();
    let ground: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(shape.len());
    rec(shape, 0, &ground, &mut blocks, &mut out);
    out
}

fn rec(
    shape: &Partition,
    depth: usize,
    remaining: &[u32],
    blocks: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tabloid>,
) {
    if depth == shape.len() {
        out.push(Tabloid { blocks: blocks.clone() });
        return;
    }
    let size = shape.parts()[depth] as usize;
    for combo in crate::graph::combinations(remaining.len(), size) {
        let block: Vec<u32> = combo.iter().map(|&i| remaining[i]).collect();
        let rest: Vec<u32> = remaining
            .iter()
            .enumerate()
            .filter(|(i, _)| !combo.contains(i))
            .map(|(_, &v)| v)
            .collect();
        blocks.push(block);
        rec(shape, depth + 1, &rest, blocks, out);
        blocks.pop();
    }
}
