//! The chromatic symmetric function of a labeled graph, in the monomial and
//! Schur bases, with exact integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::comb::factorial;
use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};
use crate::tableau::kostka;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Schur,
}

/// A symmetric-function expansion with integer coefficients, indexed by
/// partitions of the graph's vertex count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsfExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CsfError {
    #[error("graph has {got} vertices, over the configured bound {bound}")]
    TooLarge { got: u32, bound: u32 },
    #[error("expected a {0:?}-basis expansion")]
    WrongBasis(Basis),
}

pub const DEFAULT_CSF_BOUND: u32 = 8;

/// Monomial expansion of X_G: the coefficient of m_mu is the number of
/// proper colorings using color i exactly mu_i times, colors 1..=len(mu).
pub fn chromatic_symmetric_function(g: &Graph, bound: u32) -> Result<CsfExpansion, CsfError> {
    if g.n() > bound {
        return Err(CsfError::TooLarge { got: g.n(), bound });
    }
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(g.n()) {
        let count = count_colorings_with_content(g, &mu);
        if count != 0 {
            coeffs.insert(mu, count);
        }
    }
    Ok(CsfExpansion { basis: Basis::Monomial, coeffs })
}

/// Number of proper colorings of exact content mu: color i used mu_i times.
fn count_colorings_with_content(g: &Graph, mu: &Partition) -> i64 {
    let n = g.n() as usize;
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        // Only earlier-labeled neighbors matter in a vertex-by-vertex scan.
        neighbors[v as usize - 1].push(u as usize - 1);
    }
    let mut budget: Vec<u32> = mu.parts().to_vec();
    let mut colors = vec![0u32; n];
    fn rec(
        v: usize,
        n: usize,
        neighbors: &[Vec<usize>],
        budget: &mut Vec<u32>,
        colors: &mut Vec<u32>,
    ) -> i64 {
        if v == n {
            return 1;
        }
        let mut total = 0;
        for c in 0..budget.len() {
            if budget[c] == 0 {
                continue;
            }
            let color = c as u32 + 1;
            if neighbors[v].iter().any(|&u| colors[u] == color) {
                continue;
            }
            budget[c] -= 1;
            colors[v] = color;
            total += rec(v + 1, n, neighbors, budget, colors);
            budget[c] += 1;
        }
        colors[v] = 0;
        total
    }
    rec(0, n, &neighbors, &mut budget, &mut colors)
}

/// Change of basis monomial -> Schur by back-substitution through the
/// unitriangular Kostka matrix: m-coefficients satisfy
/// `m_mu = sum_lam c_lam K_(lam, mu)`.
pub fn csf_to_schur(e: &CsfExpansion) -> Result<CsfExpansion, CsfError> {
    if e.basis != Basis::Monomial {
        return Err(CsfError::WrongBasis(Basis::Monomial));
    }
    let n = match e.coeffs.keys().next() {
        Some(p) => p.n(),
        None => return Ok(CsfExpansion { basis: Basis::Schur, coeffs: BTreeMap::new() }),
    };
    // Revlex order refines dominance downward, so earlier entries never
    // depend on later ones.
    let order = partitions_of(n);
    let mut schur: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut solved: Vec<(Partition, i64)> = Vec::new();
    for lam in &order {
        let target = e.coeffs.get(lam).copied().unwrap_or(0);
        let mut c = target;
        for (nu, cv) in &solved {
            c -= cv * kostka(nu, lam) as i64;
        }
        solved.push((lam.clone(), c));
        if c != 0 {
            schur.insert(lam.clone(), c);
        }
    }
    Ok(CsfExpansion { basis: Basis::Schur, coeffs: schur })
}

/// Expands a Schur-basis expansion back into the monomial basis.
pub fn schur_to_monomial(e: &CsfExpansion) -> Result<CsfExpansion, CsfError> {
    if e.basis != Basis::Schur {
        return Err(CsfError::WrongBasis(Basis::Schur));
    }
    let n = match e.coeffs.keys().next() {
        Some(p) => p.n(),
        None => return Ok(CsfExpansion { basis: Basis::Monomial, coeffs: BTreeMap::new() }),
    };
    let mut mono: BTreeMap<Partition, i64> = BTreeMap::new();
    for mu in partitions_of(n) {
        let mut c = 0i64;
        for (lam, cv) in &e.coeffs {
            c += cv * kostka(lam, &mu) as i64;
        }
        if c != 0 {
            mono.insert(mu, c);
        }
    }
    Ok(CsfExpansion { basis: Basis::Monomial, coeffs: mono })
}

/// Evaluates a monomial expansion at x_1 = .. = x_k = 1, x_j = 0 for j > k,
/// i.e. the number of proper colorings with k available colors.
pub fn evaluate_at_k_colors(e: &CsfExpansion, k: u64) -> Result<BigInt, CsfError> {
    if e.basis != Basis::Monomial {
        return Err(CsfError::WrongBasis(Basis::Monomial));
    }
    let mut total = BigInt::zero();
    for (mu, &c) in &e.coeffs {
        // Number of monomials of m_mu supported on k variables: injections
        // of the multiset of parts into the k colors.
        let l = mu.len() as u64;
        if l > k {
            continue;
        }
        let mut ways = BigInt::one();
        for i in 0..l {
            ways *= BigInt::from(k - i);
        }
        let mut auto = BigInt::one();
        let mut seen: Vec<u32> = Vec::new();
        for &v in mu.parts() {
            if !seen.contains(&v) {
                seen.push(v);
                auto *= BigInt::from(factorial(mu.multiplicity_of(v) as u64));
            }
        }
        total += BigInt::from(c) * ways / auto;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn mono(g: &Graph) -> CsfExpansion {
        chromatic_symmetric_function(g, DEFAULT_CSF_BOUND).unwrap()
    }

    /// Independent oracle: brute force over all colorings with colors
    /// 1..=limit, bucketing by sorted content.
    fn brute_force_monomial(g: &Graph, limit: u32) -> BTreeMap<Partition, i64> {
        let n = g.n() as usize;
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        let total = (limit as u64).pow(n as u32);
        'outer: for code in 0..total {
            let mut colors = vec![0u32; n];
            let mut c = code;
            for v in 0..n {
                colors[v] = (c % limit as u64) as u32 + 1;
                c /= limit as u64;
            }
            for &(u, v) in g.edges() {
                if colors[u as usize - 1] == colors[v as usize - 1] {
                    continue 'outer;
                }
            }
            // Keep only colorings whose used colors are exactly 1..=#used
            // with weakly decreasing counts: those are the canonical
            // representatives counted by the monomial coefficient.
            let maxc = *colors.iter().max().unwrap() as usize;
            let mut counts = vec![0u32; maxc];
            for &c in &colors {
                counts[c as usize - 1] += 1;
            }
            if counts.iter().any(|&x| x == 0) {
                continue;
            }
            if counts.windows(2).any(|w| w[1] > w[0]) {
                continue;
            }
            *out.entry(Partition::new(counts).unwrap()).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn single_vertex_and_single_edge() {
        let v1 = Graph::new(1, vec![]).unwrap();
        assert_eq!(mono(&v1).coeffs, BTreeMap::from([(p("1"), 1)]));
        let k2 = Graph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(mono(&k2).coeffs, BTreeMap::from([(p("1,1"), 2)]));
    }

    #[test]
    fn star3_monomial_expansion() {
        let g = Graph::star(3).unwrap();
        let e = mono(&g);
        assert_eq!(e.coeffs, BTreeMap::from([(p("1,1,1"), 6), (p("2,1"), 1)]));
        assert_eq!(e.coeffs, brute_force_monomial(&g, 3));
    }

    #[test]
    fn monomial_matches_brute_force_on_small_graphs() {
        let graphs = vec![
            Graph::star(4).unwrap(),
            Graph::new(4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
            Graph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap(),
            Graph::new(5, vec![(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(mono(&g).coeffs, brute_force_monomial(&g, g.n()));
        }
    }

    #[test]
    fn size_bound_enforced() {
        let g = Graph::star(5).unwrap();
        assert_eq!(
            chromatic_symmetric_function(&g, 4),
            Err(CsfError::TooLarge { got: 5, bound: 4 })
        );
    }

    #[test]
    fn schur_round_trip_identities() {
        let single = Graph::new(1, vec![]).unwrap();
        let s = csf_to_schur(&mono(&single)).unwrap();
        assert_eq!(s.coeffs, BTreeMap::from([(p("1"), 1)]));

        let k2 = Graph::new(2, vec![(1, 2)]).unwrap();
        let s = csf_to_schur(&mono(&k2)).unwrap();
        assert_eq!(s.coeffs, BTreeMap::from([(p("1,1"), 2)]));

        for n in 2..=6u32 {
            let g = Graph::star(n).unwrap();
            let m = mono(&g);
            let s = csf_to_schur(&m).unwrap();
            assert_eq!(schur_to_monomial(&s).unwrap().coeffs, m.coeffs, "n = {n}");
        }
    }

    /// Independent oracle: chromatic polynomial by deletion-contraction.
    fn chromatic_poly(n: u32, edges: &[(u32, u32)], k: u64) -> BigInt {
        match edges.first() {
            None => {
                let mut acc = BigInt::one();
                for _ in 0..n {
                    acc *= BigInt::from(k);
                }
                acc
            }
            Some(&(u, v)) => {
                let deleted: Vec<(u32, u32)> = edges[1..].to_vec();
                // Contract v into u, relabel w > v down by one.
                let mut contracted: Vec<(u32, u32)> = Vec::new();
                let map = |w: u32| {
                    let w = if w == v { u } else { w };
                    if w > v {
                        w - 1
                    } else {
                        w
                    }
                };
                for &(a, b) in &deleted {
                    let (a, b) = (map(a), map(b));
                    if a == b {
                        continue;
                    }
                    let e = (a.min(b), a.max(b));
                    if !contracted.contains(&e) {
                        contracted.push(e);
                    }
                }
                chromatic_poly(n, &deleted, k) - chromatic_poly(n - 1, &contracted, k)
            }
        }
    }

    #[test]
    fn agrees_with_deletion_contraction_on_all_small_graphs() {
        for n in 1..=5u32 {
            let all_pairs: Vec<(u32, u32)> = (1..=n)
                .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
                .collect();
            let m = all_pairs.len();
            for mask in 0u32..(1 << m) {
                let edges: Vec<(u32, u32)> = (0..m)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| all_pairs[i])
                    .collect();
                let g = Graph::new(n, edges.clone()).unwrap();
                let e = mono(&g);
                for k in 0..=u64::from(n) + 1 {
                    assert_eq!(
                        evaluate_at_k_colors(&e, k).unwrap(),
                        chromatic_poly(n, &edges, k),
                        "n = {n}, mask = {mask}, k = {k}"
                    );
                }
            }
        }
    }
}
