//! Exact maximum dicut and maximum undirected cut by exhaustive enumeration.
//!
//! [`max_dicut_exact`] walks all `2^n` source sides in Gray-code order, updating
//! the cut weight by the flipped vertex's contribution; the search is split across
//! threads by the high-order bits. [`max_dicut_bruteforce`] recomputes every
//! subset from scratch in rational arithmetic and serves as an independent check.
//! Ties go to the numerically smallest bitmask in both.

use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Dicut, WeightedDigraph};
use crate::rational::Rational;

/// Default vertex cap for [`max_dicut_exact`] and [`max_cut_exact`].
pub const DEFAULT_EXACT_CAP: usize = 26;
/// Vertex cap for the unpruned brute-force oracle.
pub const BRUTEFORCE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Max,
    /// Minimum over partitions with both sides non-empty.
    MinProper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Objective {
    Directed,
    Undirected,
}

trait Weight:
    Clone + Zero + Ord + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
}
impl<T> Weight for T where
    T: Clone + Zero + Ord + Send + Sync + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T>
{
}

/// Integer weights `w * scale` for a common denominator `scale`, arranged as
/// a dense matrix with `matrix[u][v]` the weight counted when `u` is in `X` and
/// `v` is not.
struct Scaled {
    matrix: Vec<Vec<BigInt>>,
    scale: BigInt,
}

fn scaled_matrix(d: &WeightedDigraph, objective: Objective) -> Scaled {
    let n = d.n();
    let scale = d
        .arcs()
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.weight.denom()));
    let mut matrix = vec![vec![BigInt::zero(); n]; n];
    for a in d.arcs() {
        let w = a.weight.numer() * (&scale / a.weight.denom());
        matrix[a.tail][a.head] += &w;
        if objective == Objective::Undirected {
            matrix[a.head][a.tail] += &w;
        }
    }
    Scaled { matrix, scale }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn cut_value<T: Weight>(matrix: &[Vec<T>], mask: u64) -> T {
    let n = matrix.len();
    let mut total = T::zero();
    for u in (0..n).filter(|&u| mask >> u & 1 == 1) {
        for v in (0..n).filter(|&v| mask >> v & 1 == 0) {
            total += &matrix[u][v];
        }
    }
    total
}

fn better<T: Ord>(goal: Goal, value: &T, mask: u64, best: &Option<(T, u64)>) -> bool {
    match best {
        None => true,
        Some((bv, bm)) => match goal {
            Goal::Max => value > bv || (value == bv && mask < *bm),
            Goal::MinProper => value < bv || (value == bv && mask < *bm),
        },
    }
}

/// Enumerates the subsets whose high bits equal `prefix`, in Gray-code order
/// over the low `low_bits` bits.
fn scan_chunk<T: Weight>(
    matrix: &[Vec<T>],
    goal: Goal,
    prefix: u64,
    low_bits: usize,
) -> Option<(T, u64)> {
    let n = matrix.len();
    let full = full_mask(n);
    let mut mask = prefix;
    let mut value = cut_value(matrix, mask);
    let mut best: Option<(T, u64)> = None;
    let count: u64 = 1u64 << low_bits;
    for step in 0..count {
        if step > 0 {
            let v = step.trailing_zeros() as usize;
            flip(matrix, &mut value, mask, v);
            mask ^= 1 << v;
        }
        let admissible = goal == Goal::Max || (mask != 0 && mask != full);
        if admissible && better(goal, &value, mask, &best) {
            best = Some((value.clone(), mask));
        }
    }
    best
}

// Moves v across the partition, adjusting the cut weight by its contribution.
#[allow(clippy::needless_range_loop)]
fn flip<T: Weight>(matrix: &[Vec<T>], value: &mut T, mask: u64, v: usize) {
    let n = matrix.len();
    let mut out_to_y = T::zero();
    let mut in_from_x = T::zero();
    for t in 0..n {
        if t == v {
            continue;
        }
        if mask >> t & 1 == 1 {
            in_from_x += &matrix[t][v];
        } else {
            out_to_y += &matrix[v][t];
        }
    }
    if mask >> v & 1 == 1 {
        // leaving X: lose arcs v -> Y, gain arcs X -> v
        *value -= &out_to_y;
        *value += &in_from_x;
    } else {
        *value += &out_to_y;
        *value -= &in_from_x;
    }
}

fn search<T: Weight>(matrix: &[Vec<T>], goal: Goal) -> Option<(T, u64)> {
    let n = matrix.len();
    let high_bits = n.saturating_sub(12).min(8);
    let low_bits = n - high_bits;
    let chunks: Vec<Option<(T, u64)>> = (0u64..1 << high_bits)
        .into_par_iter()
        .map(|hi| scan_chunk(matrix, goal, hi << low_bits, low_bits))
        .collect();
    let mut best = None;
    for (value, mask) in chunks.into_iter().flatten() {
        if better(goal, &value, mask, &best) {
            best = Some((value, mask));
        }
    }
    best
}

fn solve(
    d: &WeightedDigraph,
    objective: Objective,
    goal: Goal,
    cap: usize,
) -> Result<Option<(Dicut, Rational)>> {
    let n = d.n();
    if n > cap.min(63) {
        return Err(Error::TooLarge {
            n,
            cap: cap.min(63),
        });
    }
    let Scaled { matrix, scale } = scaled_matrix(d, objective);
    let total: BigInt = matrix.iter().flatten().sum();
    // every partial sum is bounded by the total, so i128 is exact when it fits
    let found = if total.to_i128().is_some_and(|t| t < i128::MAX / 4) {
        let small: Vec<Vec<i128>> = matrix
            .iter()
            .map(|row| row.iter().map(|w| w.to_i128().expect("fits")).collect())
            .collect();
        search(&small, goal).map(|(v, m)| (BigInt::from(v), m))
    } else {
        search(&matrix, goal)
    };
    Ok(found.map(|(value, mask)| (Dicut::from_mask(mask, n), Rational::new(value, scale))))
}

/// `mac(D)` with a maximizing source side, for `n <= max_n`.
pub fn max_dicut_exact(d: &WeightedDigraph, max_n: usize) -> Result<(Dicut, Rational)> {
    let found = solve(d, Objective::Directed, Goal::Max, max_n)?;
    Ok(found.expect("the empty set is always a candidate"))
}

/// Minimum dicut weight over partitions with both sides non-empty. `None`
/// when the digraph has fewer than two vertices.
pub fn min_dicut_exact(d: &WeightedDigraph, max_n: usize) -> Result<Option<(Dicut, Rational)>> {
    solve(d, Objective::Directed, Goal::MinProper, max_n)
}

/// Maximum undirected cut, reading every arc as an undirected edge (so the
/// symmetric encoding from `underlying_graph` counts each edge once).
pub fn max_cut_exact(g: &WeightedDigraph, max_n: usize) -> Result<Rational> {
    max_cut_exact_with_side(g, max_n).map(|(_, w)| w)
}

pub fn max_cut_exact_with_side(g: &WeightedDigraph, max_n: usize) -> Result<(Dicut, Rational)> {
    let found = solve(g, Objective::Undirected, Goal::Max, max_n)?;
    Ok(found.expect("the empty set is always a candidate"))
}

/// Plain enumeration of all subsets, recomputing each dicut weight from the arc
/// list in rational arithmetic. No pruning, no incremental updates.
pub fn max_dicut_bruteforce(d: &WeightedDigraph) -> Result<(Dicut, Rational)> {
    let n = d.n();
    if n > BRUTEFORCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTEFORCE_CAP,
        });
    }
    let mut best_mask = 0u64;
    let mut best = Rational::zero();
    for mask in 0u64..1 << n {
        let w: Rational = d
            .arcs()
            .iter()
            .filter(|a| mask >> a.tail & 1 == 1 && mask >> a.head & 1 == 0)
            .map(|a| &a.weight)
            .sum();
        if w > best {
            best = w;
            best_mask = mask;
        }
    }
    Ok((Dicut::from_mask(best_mask, n), best))
}
