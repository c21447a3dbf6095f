//! The degree-0 chain complex in its tabloid basis: chain layers, signed
//! natural-embedding differentials, and Specht-module multiplicities of
//! homology via isotypic-projection rank computations.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::character::{all_permutations, character, cycle_type, ClassLabel};
use crate::graph::{combinations, Graph, SpanningSubgraph};
use crate::partition::{partitions_of, Partition};
use crate::sparse::{
    primes_from_seed, rank_with_mode, Dense, RankError, RankMode, SparseMatrix,
    AUTO_EXACT_DIM_LIMIT,
};
use crate::tableau::{f_syt, kostka};
use crate::tabloid::{enumerate_tabloids, Tabloid};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {n} vertices is over the size budget {limit} (use allow_large for n = 7)")]
    SizeBound { n: u32, limit: u32 },
    #[error("n = 7 requires the modular rank backend")]
    LargeNeedsModular,
    #[error("homological index {i} out of range 0..={m}")]
    IndexOutOfRange { i: usize, m: usize },
    #[error("edge ({0}, {1}) is not in the subgraph")]
    EdgeNotInSubgraph(u32, u32),
    #[error("negative multiplicity for {lam} at i = {i}: chain {chain}, ranks {down} + {up}")]
    NegativeMultiplicity { lam: Partition, i: usize, chain: u64, down: u64, up: u64 },
    #[error("isotypic rank {rank} not divisible by f^{lam} = {dim}")]
    InexactDivision { lam: Partition, rank: u64, dim: u64 },
    #[error(transparent)]
    Rank(#[from] RankError),
}

/// Map from partitions to nonnegative multiplicities; zero entries are not
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiplicityTable {
    map: BTreeMap<Partition, u64>,
}

impl MultiplicityTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, u64)>>(pairs: I) -> Self {
        let mut t = Self::new();
        for (lam, v) in pairs {
            t.set(lam, v);
        }
        t
    }

    pub fn set(&mut self, lam: Partition, v: u64) {
        if v == 0 {
            self.map.remove(&lam);
        } else {
            self.map.insert(lam, v);
        }
    }

    pub fn get(&self, lam: &Partition) -> u64 {
        self.map.get(lam).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Entries in reverse-lexicographic partition order.
    pub fn iter_revlex(&self) -> Vec<(&Partition, u64)> {
        let mut v: Vec<(&Partition, u64)> = self.map.iter().map(|(p, &m)| (p, m)).collect();
        v.sort_by(|a, b| a.0.cmp_revlex(b.0));
        v
    }

    /// One line per nonzero entry: `"<partition>": <multiplicity>`.
    pub fn to_text(&self) -> String {
        self.iter_revlex()
            .into_iter()
            .map(|(p, m)| format!("\"{p}\": {m}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Oracle configuration: rank backend, size budget and seed for modular
/// prime selection.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub rank_mode: RankMode,
    pub max_n: u32,
    pub allow_large: bool,
    pub seed: u64,
    pub exact_dim_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            rank_mode: RankMode::Auto,
            max_n: 6,
            allow_large: false,
            seed: 20260823,
            exact_dim_limit: AUTO_EXACT_DIM_LIMIT,
        }
    }
}

/// One direct summand of a chain layer: a spanning subgraph together with
/// the tabloid basis of its degree-0 permutation module.
pub struct Summand {
    pub subgraph: SpanningSubgraph,
    pub tabloids: Vec<Tabloid>,
    pub offset: usize,
    index: HashMap<u64, u32>,
}

impl Summand {
    fn local_index(&self, t: &Tabloid) -> u32 {
        self.index[&t.key()]
    }
}

/// The degree-0 part of the i-th chain module, as an ordered direct sum of
/// tabloid bases with contiguous column offsets.
pub struct ChainLayer {
    pub n: u32,
    pub i: usize,
    pub summands: Vec<Summand>,
    pub dim: usize,
}

/// Tabloid basis of the degree-0 part of the permutation module attached to
/// a spanning subgraph: all ordered set partitions with block sizes equal to
/// the partition type.
pub fn tabloid_basis(f: &SpanningSubgraph) -> Vec<Tabloid> {
    enumerate_tabloids(&f.partition_type())
}

/// Builds the i-th chain layer of the graph.
pub fn chain_layer(g: &Graph, i: usize) -> ChainLayer {
    assert!(i <= g.edge_count());
    let mut summands = Vec::new();
    let mut offset = 0usize;
    for f in g.spanning_subgraphs(i) {
        let tabloids = tabloid_basis(&f);
        let index: HashMap<u64, u32> = tabloids
            .iter()
            .enumerate()
            .map(|(j, t)| (t.key(), j as u32))
            .collect();
        let dim = tabloids.len();
        summands.push(Summand { subgraph: f, tabloids, offset, index });
        offset += dim;
    }
    ChainLayer { n: g.n(), i, summands, dim: offset }
}

impl ChainLayer {
    /// Multiplicity of the Specht module `S_lam` in this layer, from the
    /// Kostka decomposition of each summand.
    pub fn multiplicity(&self, lam: &Partition) -> u64 {
        self.summands
            .iter()
            .map(|s| kostka(lam, &s.subgraph.partition_type()))
            .sum()
    }

    /// Matrix of the action of a permutation on the layer basis.
    pub fn action_matrix(&self, sigma: &[u32]) -> SparseMatrix {
        let mut triplets = Vec::with_capacity(self.dim);
        for s in &self.summands {
            for (j, t) in s.tabloids.iter().enumerate() {
                let r = s.offset + s.local_index(&t.apply(sigma)) as usize;
                triplets.push((r as u32, (s.offset + j) as u32, 1));
            }
        }
        SparseMatrix::from_triplets(self.dim, self.dim, triplets)
    }
}

/// The natural embedding `M_F -> M_(F minus e)` in tabloid bases. When
/// removing `e` does not split a component the map is the identity on a
/// shared basis; when it splits block B into B1 and B2, each tabloid maps to
/// the sum of the C(|B|, |B1|) tabloids obtained from the coset
/// representatives of the smaller row group, all with coefficient +1.
pub fn differential_block(
    g: &Graph,
    f: &SpanningSubgraph,
    e: (u32, u32),
) -> Result<SparseMatrix, OracleError> {
    let pos = f
        .edges()
        .iter()
        .position(|&x| x == e)
        .ok_or(OracleError::EdgeNotInSubgraph(e.0, e.1))?;
    let fp_indices: Vec<usize> = f
        .edge_indices()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pos)
        .map(|(_, &x)| x)
        .collect();
    let fp = g.spanning_subgraph(fp_indices);
    let fp_basis = tabloid_basis(&fp);
    let fp_index: HashMap<u64, u32> = fp_basis
        .iter()
        .enumerate()
        .map(|(j, t)| (t.key(), j as u32))
        .collect();
    let f_basis = tabloid_basis(f);
    let mut triplets = Vec::new();
    for_each_block_entry(f, &fp, e, &f_basis, |t_out, col| {
        triplets.push((fp_index[&t_out.key()], col as u32, 1));
    });
    Ok(SparseMatrix::from_triplets(fp_basis.len(), f_basis.len(), triplets))
}

/// Emits (output tabloid, input column) pairs of the embedding, one call per
/// +1 coefficient.
fn for_each_block_entry<F: FnMut(Tabloid, usize)>(
    f: &SpanningSubgraph,
    fp: &SpanningSubgraph,
    e: (u32, u32),
    f_basis: &[Tabloid],
    mut emit: F,
) {
    let n = f.n() as usize;
    let f_comps = f.components();
    let fp_comps = fp.components();
    if f_comps == fp_comps {
        // The removed edge lay on a cycle; component structure is unchanged
        // and both bases coincide.
        for (j, t) in f_basis.iter().enumerate() {
            emit(t.clone(), j);
        }
        return;
    }
    let b: &Vec<u32> = f_comps
        .iter()
        .find(|c| c.binary_search(&e.0).is_ok())
        .expect("edge endpoint lies in some component");
    let b1: &Vec<u32> = fp_comps
        .iter()
        .find(|c| c.binary_search(&e.0).is_ok())
        .expect("endpoint has a component in F'");
    let b2: &Vec<u32> = fp_comps
        .iter()
        .find(|c| c.binary_search(&e.1).is_ok())
        .expect("endpoint has a component in F'");
    debug_assert_eq!(b1.len() + b2.len(), b.len());

    // Coset representatives of Row(T(F')) inside Row(T(F)): for each subset
    // A of B with |A| = |B1|, the order-preserving bijection B1 -> A,
    // B2 -> B minus A, identity elsewhere.
    let mut cosets: Vec<Vec<u32>> = Vec::new();
    for combo in combinations(b.len(), b1.len()) {
        let mut c: Vec<u32> = (1..=n as u32).collect();
        let a_set: Vec<u32> = combo.iter().map(|&i| b[i]).collect();
        let rest: Vec<u32> = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !combo.contains(i))
            .map(|(_, &v)| v)
            .collect();
        for (src, dst) in b1.iter().zip(&a_set) {
            c[*src as usize - 1] = *dst;
        }
        for (src, dst) in b2.iter().zip(&rest) {
            c[*src as usize - 1] = *dst;
        }
        cosets.push(c);
    }

    let mut sigma = vec![0u32; n];
    for (j, t) in f_basis.iter().enumerate() {
        // sigma carries the rows of T(F) onto the blocks of t.
        for (row, block) in f_comps.iter().zip(t.blocks()) {
            for (src, dst) in row.iter().zip(block) {
                sigma[*src as usize - 1] = *dst;
            }
        }
        for c in &cosets {
            let blocks: Vec<Vec<u32>> = fp_comps
                .iter()
                .map(|row| {
                    let mut out: Vec<u32> = row
                        .iter()
                        .map(|&v| sigma[c[v as usize - 1] as usize - 1])
                        .collect();
                    out.sort_unstable();
                    out
                })
                .collect();
            emit(
                Tabloid::new(blocks).expect("image blocks partition the ground set"),
                j,
            );
        }
    }
}

/// The full signed boundary matrix `d_i : C_i -> C_(i-1)`. Rows follow the
/// layout of layer i-1, columns that of layer i; each block carries the sign
/// (-1)^(number of edges of F after the removed edge in the global order).
pub fn boundary_matrix(g: &Graph, i: usize) -> SparseMatrix {
    assert!(i >= 1 && i <= g.edge_count());
    let dom = chain_layer(g, i);
    let cod = chain_layer(g, i - 1);
    boundary_matrix_between(&dom, &cod)
}

/// Boundary matrix for prebuilt adjacent layers.
pub fn boundary_matrix_between(dom: &ChainLayer, cod: &ChainLayer) -> SparseMatrix {
    assert_eq!(dom.i, cod.i + 1);
    let cod_lookup: HashMap<&[usize], usize> = cod
        .summands
        .iter()
        .enumerate()
        .map(|(k, s)| (s.subgraph.edge_indices(), k))
        .collect();
    let mut triplets = Vec::new();
    for s in &dom.summands {
        let f = &s.subgraph;
        let count = f.edge_indices().len();
        for (pos, _) in f.edge_indices().iter().enumerate() {
            let e = f.edges()[pos];
            let fp_indices: Vec<usize> = f
                .edge_indices()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != pos)
                .map(|(_, &x)| x)
                .collect();
            let target = &cod.summands[cod_lookup[fp_indices.as_slice()]];
            let sign: i64 = if (count - 1 - pos) % 2 == 0 { 1 } else { -1 };
            for_each_block_entry(f, &target.subgraph, e, &s.tabloids, |t_out, col| {
                triplets.push((
                    (target.offset + target.local_index(&t_out) as usize) as u32,
                    (s.offset + col) as u32,
                    sign,
                ));
            });
        }
    }
    SparseMatrix::from_triplets(cod.dim, dom.dim, triplets)
}

/// Sum of the action matrices over each conjugacy class of the layer's
/// symmetric group, stored as merged sparse triplets.
pub struct ClassSums {
    pub dim: usize,
    pub classes: Vec<(Partition, Vec<(u32, u32, i64)>)>,
}

pub fn class_sums(layer: &ChainLayer) -> ClassSums {
    let n = layer.n;
    let class_order = partitions_of(n);
    let class_idx: HashMap<&Partition, usize> =
        class_order.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut buckets: Vec<Vec<(u32, u32)>> = vec![Vec::new(); class_order.len()];
    for sigma in all_permutations(n) {
        let ci = class_idx[&cycle_type(&sigma)];
        let bucket = &mut buckets[ci];
        for s in &layer.summands {
            for (j, t) in s.tabloids.iter().enumerate() {
                let r = s.offset + s.local_index(&t.apply(&sigma)) as usize;
                bucket.push((r as u32, (s.offset + j) as u32));
            }
        }
    }
    let classes = class_order
        .into_iter()
        .zip(buckets)
        .map(|(ct, mut bucket)| {
            bucket.sort_unstable();
            let mut merged: Vec<(u32, u32, i64)> = Vec::new();
            for (r, c) in bucket {
                match merged.last_mut() {
                    Some(last) if last.0 == r && last.1 == c => last.2 += 1,
                    _ => merged.push((r, c, 1)),
                }
            }
            (ct, merged)
        })
        .collect();
    ClassSums { dim: layer.dim, classes }
}

/// Integer numerator of the isotypic projector: `Q_lam = sum_mu
/// chi_lam(mu) A_mu`, which equals `(n!/f^lam) P_lam`.
pub fn projector_numerator(sums: &ClassSums, lam: &Partition) -> SparseMatrix {
    let mut triplets = Vec::new();
    for (ct, entries) in &sums.classes {
        let chi = character(lam, &ClassLabel::new(ct.clone()));
        if chi == 0 {
            continue;
        }
        for &(r, c, cnt) in entries {
            triplets.push((r, c, chi * cnt));
        }
    }
    SparseMatrix::from_triplets(sums.dim, sums.dim, triplets)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ProjectSide {
    Domain,
    Codomain,
}

/// Dense product of the projector numerator with the matrix, on the chosen
/// side.
fn projected_product(
    m: &SparseMatrix,
    sums: &ClassSums,
    lam: &Partition,
    side: ProjectSide,
) -> Dense {
    let mut out = Dense::zeros(m.rows(), m.cols());
    let cols = m.cols();
    match side {
        ProjectSide::Domain => {
            // out = M * Q, iterating over Q entries with M in column form.
            debug_assert_eq!(sums.dim, m.cols());
            let by_col = m.col_lists();
            for (ct, entries) in &sums.classes {
                let chi = character(lam, &ClassLabel::new(ct.clone()));
                if chi == 0 {
                    continue;
                }
                for &(qr, qc, cnt) in entries {
                    let w = chi * cnt;
                    for &(r, v) in &by_col[qr as usize] {
                        out.data[r as usize * cols + qc as usize] += v * w;
                    }
                }
            }
        }
        ProjectSide::Codomain => {
            // out = Q * M, iterating over Q entries with M in row form.
            debug_assert_eq!(sums.dim, m.rows());
            let by_row = m.row_lists();
            for (ct, entries) in &sums.classes {
                let chi = character(lam, &ClassLabel::new(ct.clone()));
                if chi == 0 {
                    continue;
                }
                for &(qr, qc, cnt) in entries {
                    let w = chi * cnt;
                    for &(c, v) in &by_row[qc as usize] {
                        out.data[qr as usize * cols + c as usize] += v * w;
                    }
                }
            }
        }
    }
    out
}

fn f_dim(lam: &Partition) -> u64 {
    u64::try_from(f_syt(lam)).expect("f^lam fits in u64 at oracle scale")
}

/// Multiplicity of `S_lam` in the image of an equivariant map: the rank of
/// the projected matrix divided by f^lam, with the division checked exact.
pub fn isotypic_rank(
    g: &Graph,
    i: usize,
    lam: &Partition,
    cfg: &OracleConfig,
) -> Result<u64, OracleError> {
    let dom = chain_layer(g, i);
    let cod = chain_layer(g, i - 1);
    let m = boundary_matrix_between(&dom, &cod);
    let (side, layer) = if dom.dim <= cod.dim {
        (ProjectSide::Domain, &dom)
    } else {
        (ProjectSide::Codomain, &cod)
    };
    let sums = class_sums(layer);
    let primes = primes_from_seed(cfg.seed, 2);
    let (mult, _) = isotypic_rank_with(&m, &sums, side, &dom, &cod, lam, cfg, &primes)?;
    Ok(mult)
}

#[allow(clippy::too_many_arguments)]
fn isotypic_rank_with(
    m: &SparseMatrix,
    sums: &ClassSums,
    side: ProjectSide,
    dom: &ChainLayer,
    cod: &ChainLayer,
    lam: &Partition,
    cfg: &OracleConfig,
    primes: &[u64],
) -> Result<(u64, &'static str), OracleError> {
    // The image multiplicity is bounded by both chain multiplicities; skip
    // the rank computation when either is zero.
    if dom.multiplicity(lam) == 0 || cod.multiplicity(lam) == 0 {
        return Ok((0, "skipped"));
    }
    let product = projected_product(m, sums, lam, side);
    let (rank, backend) =
        rank_with_mode(&product, cfg.rank_mode, cfg.exact_dim_limit, primes)?;
    let dim = f_dim(lam);
    let rank = rank as u64;
    if rank % dim != 0 {
        return Err(OracleError::InexactDivision { lam: lam.clone(), rank, dim });
    }
    Ok((rank / dim, backend))
}

/// Plain (unprojected) rank of a sparse matrix under the configured backend.
pub fn matrix_rank(m: &SparseMatrix, cfg: &OracleConfig) -> Result<usize, OracleError> {
    let primes = primes_from_seed(cfg.seed, 2);
    let (rank, _) = rank_with_mode(&m.to_dense(), cfg.rank_mode, cfg.exact_dim_limit, &primes)?;
    Ok(rank)
}

/// Multiplicity of `S_lam` in the i-th chain module: the Kostka-weighted sum
/// over i-edge spanning subgraphs.
pub fn chain_multiplicity(g: &Graph, i: usize, lam: &Partition) -> u64 {
    g.spanning_subgraphs(i)
        .iter()
        .map(|f| kostka(lam, &f.partition_type()))
        .sum()
}

/// Per-partition rank bookkeeping reported alongside a homology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRanks {
    pub lam: Partition,
    pub chain_mult: u64,
    pub rank_down: u64,
    pub rank_up: u64,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyMeta {
    pub chain_dims: Vec<(usize, usize)>,
    pub per_lambda: Vec<LambdaRanks>,
    pub backend: String,
    pub primes: Vec<u64>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyOutput {
    pub i: usize,
    pub table: MultiplicityTable,
    pub meta: HomologyMeta,
}

/// Specht-module multiplicities of `H_(i,0)(G; C)`: for each partition of n,
/// the chain multiplicity minus the isotypic ranks of the two adjacent
/// differentials.
pub fn homology_multiplicities(
    g: &Graph,
    i: usize,
    cfg: &OracleConfig,
) -> Result<HomologyOutput, OracleError> {
    let n = g.n();
    let limit = if cfg.allow_large { cfg.max_n.max(7) } else { cfg.max_n };
    if n > limit || n > 7 {
        return Err(OracleError::SizeBound { n, limit: limit.min(7) });
    }
    let effective_cfg = if n == 7 {
        if cfg.rank_mode == RankMode::Exact {
            return Err(OracleError::LargeNeedsModular);
        }
        OracleConfig { rank_mode: RankMode::Modular, ..cfg.clone() }
    } else {
        cfg.clone()
    };
    let cfg = &effective_cfg;
    let m = g.edge_count();
    if i > m {
        return Err(OracleError::IndexOutOfRange { i, m });
    }

    let layer_i = chain_layer(g, i);
    let layer_below = if i >= 1 { Some(chain_layer(g, i - 1)) } else { None };
    let layer_above = if i + 1 <= m { Some(chain_layer(g, i + 1)) } else { None };

    let d_down = layer_below
        .as_ref()
        .map(|below| boundary_matrix_between(&layer_i, below));
    let d_up = layer_above
        .as_ref()
        .map(|above| boundary_matrix_between(above, &layer_i));

    // Each matrix is projected on its smaller side; class sums are shared
    // when both choose the middle layer.
    let down_side = layer_below.as_ref().map(|below| {
        if layer_i.dim <= below.dim {
            ProjectSide::Domain
        } else {
            ProjectSide::Codomain
        }
    });
    let up_side = layer_above.as_ref().map(|above| {
        if above.dim <= layer_i.dim {
            ProjectSide::Domain
        } else {
            ProjectSide::Codomain
        }
    });
    let mut sums_mid: Option<ClassSums> = None;
    let mut sums_below: Option<ClassSums> = None;
    let mut sums_above: Option<ClassSums> = None;
    if down_side == Some(ProjectSide::Domain) || up_side == Some(ProjectSide::Codomain) {
        sums_mid = Some(class_sums(&layer_i));
    }
    if down_side == Some(ProjectSide::Codomain) {
        sums_below = Some(class_sums(layer_below.as_ref().unwrap()));
    }
    if up_side == Some(ProjectSide::Domain) {
        sums_above = Some(class_sums(layer_above.as_ref().unwrap()));
    }

    let primes = primes_from_seed(cfg.seed, 2);
    let lambdas = partitions_of(n);
    let results: Result<Vec<(LambdaRanks, Vec<&'static str>)>, OracleError> = lambdas
        .par_iter()
        .map(|lam| {
            let chain_mult = layer_i.multiplicity(lam);
            let mut backends = Vec::new();
            let rank_down = match (&d_down, down_side) {
                (Some(mat), Some(side)) => {
                    let sums = match side {
                        ProjectSide::Domain => sums_mid.as_ref().unwrap(),
                        ProjectSide::Codomain => sums_below.as_ref().unwrap(),
                    };
                    let (r, b) = isotypic_rank_with(
                        mat,
                        sums,
                        side,
                        &layer_i,
                        layer_below.as_ref().unwrap(),
                        lam,
                        cfg,
                        &primes,
                    )?;
                    backends.push(b);
                    r
                }
                _ => 0,
            };
            let rank_up = match (&d_up, up_side) {
                (Some(mat), Some(side)) => {
                    let sums = match side {
                        ProjectSide::Domain => sums_above.as_ref().unwrap(),
                        ProjectSide::Codomain => sums_mid.as_ref().unwrap(),
                    };
                    let (r, b) = isotypic_rank_with(
                        mat,
                        sums,
                        side,
                        layer_above.as_ref().unwrap(),
                        &layer_i,
                        lam,
                        cfg,
                        &primes,
                    )?;
                    backends.push(b);
                    r
                }
                _ => 0,
            };
            if chain_mult < rank_down + rank_up {
                return Err(OracleError::NegativeMultiplicity {
                    lam: lam.clone(),
                    i,
                    chain: chain_mult,
                    down: rank_down,
                    up: rank_up,
                });
            }
            let mult = chain_mult - rank_down - rank_up;
            Ok((
                LambdaRanks { lam: lam.clone(), chain_mult, rank_down, rank_up, mult },
                backends,
            ))
        })
        .collect();
    let results = results?;

    let mut table = MultiplicityTable::new();
    let mut per_lambda = Vec::new();
    let mut used: Vec<&'static str> = Vec::new();
    for (detail, backends) in results {
        table.set(detail.lam.clone(), detail.mult);
        for b in backends {
            if b != "skipped" && !used.contains(&b) {
                used.push(b);
            }
        }
        per_lambda.push(detail);
    }
    per_lambda.sort_by(|a, b| a.lam.cmp_revlex(&b.lam));
    used.sort();
    let backend = if used.is_empty() { "none".to_string() } else { used.join("+") };
    let primes_used = if backend.contains("modular") { primes } else { Vec::new() };

    let mut chain_dims = Vec::new();
    if let Some(below) = &layer_below {
        chain_dims.push((i - 1, below.dim));
    }
    chain_dims.push((i, layer_i.dim));
    if let Some(above) = &layer_above {
        chain_dims.push((i + 1, above.dim));
    }

    Ok(HomologyOutput {
        i,
        table,
        meta: HomologyMeta { chain_dims, per_lambda, backend, primes: primes_used, seed: cfg.seed },
    })
}

/// Total dimension of a layer from its multiplicities: used in dimension
/// cross-checks.
pub fn dimension_from_multiplicities(table: &MultiplicityTable) -> BigUint {
    let mut acc = BigUint::from(0u32);
    for (lam, mult) in table.iter_revlex() {
        acc += f_syt(lam) * mult;
    }
    acc
}
