//! Level-block construction for acyclic digraphs with few levels.
//!
//! For a parameter `k >= 7` let `z = floor(sqrt(k/2))`, `f(q) = floor((2k - 2q² - q)/2)`
//! and `n_q = 2f(q) + q`. The `n*_k = 2k + 2·Σ_{q=1..z} n_q` positions of a level
//! ordering are cut into consecutive blocks `A_{-z}, …, A_{-1}, A_0, A_1, …, A_z`
//! of sizes `n_z, …, n_1, 2k, n_1, …, n_z`. Block `A_i` is split uniformly at
//! random into `X_i`, `Y_i` with `|X_i| = f(|i|) + |i|` for `i <= 0` and
//! `|X_i| = f(i)` for `i > 0`. Every arc between positions `s < t` is then cut
//! with probability at least `k/(4k - 2)`.

use num_traits::Zero;

use crate::certificate::{Algorithm, CertifiedCut};
use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;
use crate::measures::contract_levels;
use crate::rational::{int, Rational};
use crate::scheme::{AssignmentScheme, PoolLaw};

use super::{certify, trivial};

/// Smallest block parameter the construction supports.
pub const MIN_BLOCK_PARAMETER: u64 = 7;

/// `floor(sqrt(k/2))`: the largest `z` with `2z² <= k`.
fn block_radius(k: u64) -> u64 {
    let mut z = ((k as f64 / 2.0).sqrt()) as u64;
    while 2 * (z + 1) * (z + 1) <= k {
        z += 1;
    }
    while z > 0 && 2 * z * z > k {
        z -= 1;
    }
    z
}

/// `f(q) = floor((2k - 2q² - q) / 2)`, defined for `q <= floor(sqrt(k/2))`.
pub fn block_f(k: u64, q: u64) -> u64 {
    assert!(
        q <= block_radius(k),
        "q = {q} exceeds the block radius for k = {k}"
    );
    (2 * k - 2 * q * q - q) / 2
}

/// `n_q = 2f(q) + q`.
pub fn block_size(k: u64, q: u64) -> u64 {
    2 * block_f(k, q) + q
}

/// `n*_k`, the number of level positions covered by the blocks for `k`.
pub fn n_star(k: u64) -> u64 {
    2 * k + 2 * (1..=block_radius(k)).map(|q| block_size(k, q)).sum::<u64>()
}

/// Smallest `k >= 7` whose blocks cover `nu` levels.
pub fn smallest_block_parameter(nu: u64) -> u64 {
    let mut k = MIN_BLOCK_PARAMETER;
    while n_star(k) < nu {
        k += 1;
    }
    k
}

/// `k / (4k - 2)`.
pub fn claim_a_bound(k: u64) -> Rational {
    Rational::new((k as i64).into(), (4 * k as i64 - 2).into())
}

/// Probability that two given distinct vertices of a block of size `n_q`, split
/// into parts of sizes `f(q) + q` and `f(q)`, land on the larger and the
/// smaller part respectively.
pub fn claim_a_probability(k: u64, q: u64) -> Rational {
    let f = block_f(k, q) as i64;
    let q = q as i64;
    Rational::new((f + q).into(), (2 * f + q).into())
        * Rational::new(f.into(), (2 * f + q - 1).into())
}

/// Whether every block size for `k` meets the `k/(4k-2)` bound.
pub fn claim_a_holds(k: u64) -> bool {
    let bound = claim_a_bound(k);
    (0..=block_radius(k)).all(|q| claim_a_probability(k, q) >= bound)
}

/// `(n*_k)² >= k³`, i.e. `n*_k >= k^{3/2}`, as an integer inequality.
pub fn claim_b_holds(k: u64) -> bool {
    let n = n_star(k) as u128;
    n * n >= (k as u128).pow(3)
}

/// One block of the layout: positions `start..start + len`, of which `x_count`
/// go to `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub index: i64,
    pub start: usize,
    pub len: usize,
    pub x_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub k: u64,
    pub radius: u64,
    pub blocks: Vec<Block>,
    pub positions: usize,
}

/// Blocks `A_{-z}..A_z` in position order.
pub fn block_layout(k: u64) -> Result<BlockLayout> {
    if k < MIN_BLOCK_PARAMETER {
        return Err(Error::InvalidParameter(format!(
            "block parameter k = {k} is below {MIN_BLOCK_PARAMETER}"
        )));
    }
    let z = block_radius(k);
    let mut blocks = Vec::with_capacity(2 * z as usize + 1);
    let mut start = 0usize;
    for index in -(z as i64)..=(z as i64) {
        let q = index.unsigned_abs();
        let f = block_f(k, q) as usize;
        let len = 2 * f + q as usize;
        let x_count = if index <= 0 { f + q as usize } else { f };
        blocks.push(Block {
            index,
            start,
            len,
            x_count,
        });
        start += len;
    }
    debug_assert_eq!(start as u64, n_star(k));
    Ok(BlockLayout {
        k,
        radius: z,
        blocks,
        positions: start,
    })
}

/// Probability that a vertex of each block lands in `X`, in block order.
pub fn block_marginals(k: u64) -> Result<Vec<Rational>> {
    Ok(block_layout(k)?
        .blocks
        .iter()
        .map(|b| Rational::new((b.x_count as i64).into(), (b.len as i64).into()))
        .collect())
}

/// Each block of the layout sends exactly its `x_count` positions, chosen
/// uniformly, to `X`.
pub(super) fn block_scheme(layout: &BlockLayout) -> Result<AssignmentScheme> {
    let mut scheme = AssignmentScheme::new(layout.positions);
    for b in &layout.blocks {
        let units = (b.start..b.start + b.len)
            .map(|p| vec![(p, false)])
            .collect();
        scheme.add_pool(units, PoolLaw::ExactHeads(b.x_count))?;
    }
    Ok(scheme)
}

/// Certified cut of weight at least `k/(4k-2)·w(D)` for an acyclic digraph
/// with at most `n*_k` levels.
///
/// Levels are contracted, placed on the first positions of the layout (the
/// remaining positions stay empty), and the block splits are derandomized. The
/// per-arc probability bound is re-checked exactly on the contracted digraph
/// before rounding.
pub fn dag_block_cut(d: &WeightedDigraph, k: u64) -> Result<CertifiedCut> {
    let layout = block_layout(k)?;
    let (contracted, level_of) = contract_levels(d)?;
    let nu = contracted.n();
    if nu > layout.positions {
        return Err(Error::InvalidParameter(format!(
            "{nu} levels exceed the {} positions for k = {k}; use k >= {}",
            layout.positions,
            smallest_block_parameter(nu as u64)
        )));
    }
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::DagBlock));
    }
    let padded = WeightedDigraph::new(layout.positions, contracted.arcs().to_vec())?;
    let scheme = block_scheme(&layout)?;
    let bound = claim_a_bound(k);
    let probs = scheme.arc_probabilities(&padded)?;
    if let Some(i) = probs.iter().position(|p| *p < bound) {
        let a = &padded.arcs()[i];
        return Err(Error::CheckFailed(format!(
            "arc between positions {} and {} is cut with probability {} < {}",
            a.tail, a.head, probs[i], bound
        )));
    }
    let positions = scheme.derandomize(&padded)?;
    let cut = positions.pull_back(&level_of);
    let guarantee = &w * &bound;
    let (cut, cert) = certify(d, Algorithm::DagBlock, guarantee, cut);
    Ok((
        cut,
        cert.with_param("k", int(k as i64))
            .with_param("levels", int(nu as i64))
            .with_param("n_star", int(layout.positions as i64))
            .with_param("blocks", int(layout.blocks.len() as i64)),
    ))
}
