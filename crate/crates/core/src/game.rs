//! The dicut covering game and the constants `c_ν`.
//!
//! `c_ν` is the largest `c` such that every weighted acyclic digraph whose
//! longest path has `ν` vertices has a dicut of weight at least `c·w`. Contracting
//! the source-peeling levels of such a digraph gives a digraph on `ν` vertices
//! whose arcs all go forward and whose dicuts are dicuts of the original, so the
//! worst case is a weighting of the complete transitive DAG on `ν` vertices
//! (zero weights are allowed, which keeps the longest path at `ν` vertices).
//! Hence `c_ν` is the value of the zero-sum game in which one player picks a
//! dicut `X`, the other an arc `i -> j`, and the payoff is `[i ∈ X, j ∉ X]`.
//!
//! The value is computed from the covering program
//! `min Σ u_X` s.t. `Σ_{X covers a} u_X >= 1` for every arc: the value is
//! `1/Σu`, the cut strategy is `u/Σu` and the arc strategy is `y/Σy` for the
//! dual solution `y`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Dicut;
use crate::lp::solve_covering;
use crate::rational::{int, pow_ratio_lower, pow_ratio_upper, ratio, Rational};

/// Largest `ν` accepted by [`cnu`].
pub const MAX_GAME_NU: usize = 12;

/// Optimal strategies of the covering game on the complete transitive DAG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub nu: usize,
    /// `c_ν`.
    pub value: Rational,
    /// Cuts with positive probability, by increasing bitmask.
    pub cut_distribution: Vec<(Dicut, Rational)>,
    /// Probability of every arc `(i, j)`, `i < j`.
    pub adversary_weights: BTreeMap<(usize, usize), Rational>,
    /// Guaranteed coverage of the cut strategy: its minimum over arcs.
    pub primal_value: Rational,
    /// Best response payoff against the arc strategy: its maximum over all cuts.
    pub dual_value: Rational,
    pub pivots: usize,
}

/// Arcs `i -> j`, `i < j`, of the complete transitive DAG in lexicographic order.
pub fn transitive_arcs(nu: usize) -> Vec<(usize, usize)> {
    (0..nu)
        .flat_map(|i| (i + 1..nu).map(move |j| (i, j)))
        .collect()
}

fn covers(mask: u64, (i, j): (usize, usize)) -> bool {
    mask >> i & 1 == 1 && mask >> j & 1 == 0
}

/// Solves the game for `2 <= ν <=` [`MAX_GAME_NU`].
pub fn cnu(nu: usize) -> Result<GameSolution> {
    if !(2..=MAX_GAME_NU).contains(&nu) {
        return Err(Error::InvalidParameter(format!(
            "nu must lie in 2..={MAX_GAME_NU}, got {nu}"
        )));
    }
    let arcs = transitive_arcs(nu);
    // the empty and the full set cover nothing
    let masks: Vec<u64> = (1..(1u64 << nu) - 1).collect();
    let columns: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| (0..arcs.len()).filter(|&a| covers(m, arcs[a])).collect())
        .collect();
    let sol = solve_covering(arcs.len(), &columns)?;
    let value = Rational::one() / &sol.objective;
    let cut_distribution: Vec<(Dicut, Rational)> = masks
        .iter()
        .zip(&sol.primal)
        .filter(|(_, u)| !u.is_zero())
        .map(|(&m, u)| (Dicut::from_mask(m, nu), u * &value))
        .collect();
    let adversary_weights: BTreeMap<(usize, usize), Rational> = arcs
        .iter()
        .zip(&sol.dual)
        .map(|(&a, y)| (a, y * &value))
        .collect();
    let primal_value = min_coverage(nu, &cut_distribution);
    let dual_value = best_response(nu, &adversary_weights);
    Ok(GameSolution {
        nu,
        value,
        cut_distribution,
        adversary_weights,
        primal_value,
        dual_value,
        pivots: sol.pivots,
    })
}

/// Smallest probability, over all arcs, that a cut drawn from `dist` covers it.
pub fn min_coverage(nu: usize, dist: &[(Dicut, Rational)]) -> Rational {
    transitive_arcs(nu)
        .into_iter()
        .map(|a| {
            dist.iter()
                .filter(|(c, _)| covers(c.mask(), a))
                .map(|(_, p)| p.clone())
                .sum::<Rational>()
        })
        .min()
        .unwrap_or_else(Rational::zero)
}

/// Largest weight, over all `2^ν` cuts, of the arcs a cut covers.
pub fn best_response(nu: usize, weights: &BTreeMap<(usize, usize), Rational>) -> Rational {
    (0..1u64 << nu)
        .map(|m| {
            weights
                .iter()
                .filter(|(&a, _)| covers(m, a))
                .map(|(_, w)| w.clone())
                .sum::<Rational>()
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

impl GameSolution {
    /// Checks every certificate exactly: both strategies are distributions,
    /// the cut strategy covers every arc with probability at least `value`, and
    /// no cut covers more than `value` of the arc strategy.
    pub fn verify(&self) -> bool {
        let zero = Rational::zero();
        let p_sum: Rational = self.cut_distribution.iter().map(|(_, p)| p).sum();
        let y_sum: Rational = self.adversary_weights.values().sum();
        self.cut_distribution.iter().all(|(_, p)| *p >= zero)
            && self.adversary_weights.values().all(|y| *y >= zero)
            && p_sum.is_one()
            && y_sum.is_one()
            && self.primal_value == self.value
            && self.dual_value == self.value
            && min_coverage(self.nu, &self.cut_distribution) >= self.value
            && best_response(self.nu, &self.adversary_weights) <= self.value
    }
}

/// The explicit dicut families certifying `c_ν` for `ν = 5..=8`: each arc of the
/// complete transitive DAG is covered by at least `t` of the `|family|` cuts.
/// Returns `(family, t)`.
pub fn appendix_cover_family(nu: usize) -> Option<(Vec<Dicut>, usize)> {
    let sets: &[&[usize]] = match nu {
        5 => &[&[1, 2, 3], &[1, 2], &[1, 3, 4], &[1, 3], &[1, 2, 4]],
        6 => &[&[1, 2, 5], &[1, 3, 4], &[1, 2, 3], &[1, 3, 5], &[1, 2, 4]],
        7 => &[
            &[1, 2, 3, 5],
            &[1, 2, 3, 6],
            &[1, 2, 4, 5],
            &[1, 2, 4],
            &[1, 2, 6],
            &[1, 3, 4, 6],
            &[1, 3, 4],
            &[1, 3, 5],
        ],
        8 => &[
            &[1, 2, 3, 5],
            &[1, 2, 3, 6],
            &[1, 2, 3, 7],
            &[1, 2, 4, 5],
            &[1, 2, 4, 6],
            &[1, 2, 4, 7],
            &[1, 2, 5, 6],
            &[1, 3, 4, 5],
            &[1, 3, 4, 6],
            &[1, 3, 4, 7],
            &[1, 3, 5, 7],
        ],
        _ => return None,
    };
    let t = match nu {
        5 | 6 => 2,
        7 => 3,
        _ => 4,
    };
    let family = sets
        .iter()
        .map(|s| Dicut::new(s.iter().map(|v| v - 1)))
        .collect();
    Some((family, t))
}

/// Whether each arc of the complete transitive DAG on `ν` vertices is covered by
/// at least `t` cuts of `family`, which must have exactly `total` members.
pub fn verify_cover_family(nu: usize, family: &[Dicut], t: usize, total: usize) -> Result<bool> {
    if family.len() != total {
        return Err(Error::InvalidParameter(format!(
            "family has {} cuts, expected {total}",
            family.len()
        )));
    }
    if nu > 63 {
        return Err(Error::InvalidParameter(format!(
            "nu = {nu} too large for a cover check"
        )));
    }
    for c in family {
        c.check(nu)?;
    }
    Ok(transitive_arcs(nu)
        .into_iter()
        .all(|a| family.iter().filter(|c| covers(c.mask(), a)).count() >= t))
}

/// Known bounds on `c_ν` as exact rationals.
///
/// Lower: `1/4 + 1/(4ν)` for `ν < 36` (coloring by levels), else
/// `1/4 + 1/(8U)` with `U >= (3ν)^{2/3}`, i.e. below `1/4 + ν^{-2/3}/(8·3^{2/3})`.
/// Upper, for `ν >= 12`: `1/4 + 1/(3s - 10)` with `s <= √ν`, i.e. above
/// `1/4 + 1/(3√ν - 10)`.
pub fn cnu_bounds(nu: usize) -> Result<(Rational, Option<Rational>)> {
    if nu < 2 {
        return Err(Error::InvalidParameter(format!(
            "nu must be >= 2, got {nu}"
        )));
    }
    let quarter = ratio(1, 4);
    let n = int(nu as i64);
    let lower = if nu < 36 {
        &quarter + Rational::one() / (int(4) * &n)
    } else {
        let u = pow_ratio_upper(&(int(3) * &n), 2, 3);
        &quarter + Rational::one() / (int(8) * u)
    };
    let upper = (nu >= 12).then(|| {
        let s = pow_ratio_lower(&n, 1, 2);
        &quarter + Rational::one() / (int(3) * s - int(10))
    });
    Ok((lower, upper))
}

/// Bounds plus, when `ν <= solve_up_to`, the solved value and whether it lies
/// between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsCheck {
    pub nu: usize,
    pub lower: Rational,
    pub upper: Option<Rational>,
    pub value: Option<Rational>,
    pub consistent: bool,
}

pub fn cnu_bounds_check(nu: usize, solve_up_to: usize) -> Result<BoundsCheck> {
    let (lower, upper) = cnu_bounds(nu)?;
    let value = if nu <= solve_up_to.min(MAX_GAME_NU) {
        Some(cnu(nu)?.value)
    } else {
        None
    };
    let consistent = lower <= upper.clone().unwrap_or_else(Rational::one)
        && value
            .as_ref()
            .is_none_or(|v| lower <= *v && upper.as_ref().is_none_or(|u| v <= u));
    Ok(BoundsCheck {
        nu,
        lower,
        upper,
        value,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let expected = [
            (2, ratio(1, 1)),
            (3, ratio(1, 2)),
            (4, ratio(1, 2)),
            (5, ratio(2, 5)),
            (6, ratio(2, 5)),
        ];
        for (nu, v) in expected {
            let g = cnu(nu).unwrap();
            assert_eq!(g.value, v, "nu = {nu}");
            assert!(g.verify(), "certificates for nu = {nu}");
        }
        assert!(cnu(1).is_err());
        assert!(cnu(13).is_err());
    }

    #[test]
    fn cover_families() {
        for nu in 5..=8 {
            let (family, t) = appendix_cover_family(nu).unwrap();
            assert!(
                verify_cover_family(nu, &family, t, family.len()).unwrap(),
                "nu = {nu}"
            );
        }
        let (mut five, t) = appendix_cover_family(5).unwrap();
        five.remove(0);
        assert!(!verify_cover_family(5, &five, t, 4).unwrap());
        assert!(verify_cover_family(5, &five, t, 5).is_err());
        assert!(verify_cover_family(3, &[Dicut::new([7])], 1, 1).is_err());
        assert!(appendix_cover_family(4).is_none());
    }

    #[test]
    fn bounds() {
        assert_eq!(cnu_bounds(2).unwrap(), (ratio(3, 8), None));
        let (lo, up) = cnu_bounds(11).unwrap();
        assert!(lo <= ratio(31, 92));
        assert!(up.is_none());
        let (_, up) = cnu_bounds(12).unwrap();
        // 3√12 - 10 ≈ 0.3923
        let up = crate::rational::to_f64(&up.unwrap());
        assert!((up - (0.25 + 1.0 / (3.0 * 12f64.sqrt() - 10.0))).abs() < 1e-9);
        let (lo, _) = cnu_bounds(100).unwrap();
        let k2 = 1.0 / (8.0 * 3f64.powf(2.0 / 3.0));
        assert!(crate::rational::to_f64(&lo) <= 0.25 + k2 * 100f64.powf(-2.0 / 3.0));
        let check = cnu_bounds_check(6, 6).unwrap();
        assert!(check.consistent);
        assert_eq!(check.value, Some(ratio(2, 5)));
    }
}
