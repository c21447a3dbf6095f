//! Irreducible characters of the symmetric group via the Murnaghan-Nakayama
//! border-strip recursion, plus conjugacy-class bookkeeping.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::partition::Partition;

/// A conjugacy class of the symmetric group, labeled by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub cycle_type: Partition,
}

impl ClassLabel {
    pub fn new(cycle_type: Partition) -> Self {
        ClassLabel { cycle_type }
    }
}

/// The irreducible character `chi_lam` evaluated on the class of cycle type
/// `mu`. Memoized on (shape, remaining cycle type).
pub fn character(lam: &Partition, mu: &ClassLabel) -> i64 {
    assert_eq!(lam.n(), mu.cycle_type.n(), "character needs |lam| = |mu|");
    static CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    mn(lam.parts(), mu.cycle_type.parts(), cache)
}

fn mn(lam: &[u32], mu: &[u32], cache: &Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>) -> i64 {
    if mu.is_empty() {
        debug_assert!(lam.is_empty());
        return 1;
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let strip = mu[0];
    let rest = &mu[1..];
    // Beta set of the shape: distinct values lam[i] + (rows - 1 - i).
    let rows = lam.len();
    let betas: Vec<u32> = lam
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (rows - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if betas.contains(&target) {
            continue;
        }
        // Removing the strip moves beta number b down to b - strip; the sign
        // is (-1)^(number of beta numbers strictly between them).
        let crossings = betas.iter().filter(|&&x| x > target && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut nb = betas.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let new_lam: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (rows - 1 - j) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn(&new_lam, rest, cache);
    }
    cache.lock().unwrap().insert(key, total);
    total
}

/// Order of the conjugacy class with the given cycle type: n! / z_mu where
/// z_mu = prod_i i^(m_i) m_i!.
pub fn class_size(mu: &ClassLabel) -> u64 {
    let n = u64::from(mu.cycle_type.n());
    let mut fact = 1u64;
    for k in 2..=n {
        fact *= k;
    }
    fact / centralizer_order(mu)
}

/// z_mu, the order of the centralizer of an element of cycle type mu.
pub fn centralizer_order(mu: &ClassLabel) -> u64 {
    let mut z = 1u64;
    let parts = mu.cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == v {
            j += 1;
        }
        let mult = (j - i) as u64;
        for _ in 0..mult {
            z *= u64::from(v);
        }
        for m in 2..=mult {
            z *= m;
        }
        i = j;
    }
    z
}

/// Cycle type of a permutation given in one-line notation with 1-based
/// values: `perm[v - 1]` is the image of `v`.
pub fn cycle_type(perm: &[u32]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lens: Vec<u32> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = perm[v] as usize - 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lens).expect("cycle lengths form a partition")
}

/// All permutations of 1..=n in one-line notation, in lexicographic order.
pub fn all_permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize];
    fn rec(n: u32, current: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n as usize {
            out.push(current.clone());
            return;
        }
        for v in 1..=n {
            if !used[v as usize - 1] {
                used[v as usize - 1] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v as usize - 1] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
