//! Exact covering linear programs.
//!
//! Solves `min Σ_j u_j` subject to `Σ_{j covers i} u_j >= 1` for every row `i`
//! and `u >= 0`, where each column is a 0/1 vector given by the rows it covers.
//! The dual is the packing program `max Σ_i y_i` subject to
//! `Σ_{i in column j} y_i <= 1`, `y >= 0`.
//!
//! The engine is a revised dual simplex started from the all-surplus basis,
//! which is dual feasible because every cost is non-negative. The basis inverse
//! is stored fraction-free as an integer matrix `N` over a common integer
//! denominator `D` (so `B⁻¹ = N / D`, with `D = ±det B`); a pivot updates it with
//! exact integer division. Pricing therefore only adds integers.
//!
//! Leaving rows are chosen by largest infeasibility, switching permanently to
//! Bland's smallest-index rule once too many consecutive pivots are degenerate,
//! which rules out cycling.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_STREAK_LIMIT: usize = 50;

/// Optimal primal and dual solutions of a covering program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringSolution {
    /// `u_j` per column.
    pub primal: Vec<Rational>,
    /// `y_i` per row.
    pub dual: Vec<Rational>,
    /// `Σ u_j`, equal to `Σ y_i`.
    pub objective: Rational,
    pub pivots: usize,
}

/// Variable ids: `0..columns` are structural, `columns..columns + rows` are the
/// surplus variables (column `-e_i`).
struct Problem<'a> {
    rows: usize,
    columns: &'a [Vec<usize>],
}

impl Problem<'_> {
    fn is_structural(&self, var: usize) -> bool {
        var < self.columns.len()
    }

    fn cost(&self, var: usize) -> BigInt {
        if self.is_structural(var) {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    /// `v · a_var` for an integer row vector `v`.
    fn dot(&self, v: &[BigInt], var: usize) -> BigInt {
        if self.is_structural(var) {
            self.columns[var].iter().map(|&i| &v[i]).sum()
        } else {
            -v[var - self.columns.len()].clone()
        }
    }

    /// `N · a_var`.
    fn column_image(&self, n: &[Vec<BigInt>], var: usize) -> Vec<BigInt> {
        n.iter().map(|row| self.dot(row, var)).collect()
    }
}

/// Solves the covering program exactly.
#[allow(clippy::needless_range_loop)]
pub fn solve_covering(rows: usize, columns: &[Vec<usize>]) -> Result<CoveringSolution> {
    for (j, col) in columns.iter().enumerate() {
        if let Some(&i) = col.iter().find(|&&i| i >= rows) {
            return Err(Error::InvalidParameter(format!(
                "column {j} covers row {i} of {rows}"
            )));
        }
    }
    let problem = Problem { rows, columns };
    let vars = columns.len() + rows;

    // B = -I: N = I, D = -1, normalised to N = -I, D = 1.
    let mut n: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|k| {
                    if i == k {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut d = BigInt::one();
    let mut basis: Vec<usize> = (0..rows).map(|i| columns.len() + i).collect();
    let mut in_basis = vec![false; vars];
    for &b in &basis {
        in_basis[b] = true;
    }

    let mut pivots = 0usize;
    let mut degenerate_streak = 0usize;
    let mut bland = false;
    loop {
        // x_B = N·1 / D; D > 0 so signs are those of the row sums.
        let xb: Vec<BigInt> = n.iter().map(|row| row.iter().sum()).collect();
        let leaving = if bland {
            (0..rows)
                .filter(|&r| xb[r].is_negative())
                .min_by_key(|&r| basis[r])
        } else {
            (0..rows)
                .filter(|&r| xb[r].is_negative())
                .min_by(|&a, &b| xb[a].cmp(&xb[b]).then(basis[a].cmp(&basis[b])))
        };
        let Some(r) = leaving else {
            return Ok(extract(&problem, &n, &d, &basis, pivots));
        };

        // y·D = c_B^T N
        let y: Vec<BigInt> = (0..rows)
            .map(|k| {
                (0..rows)
                    .filter(|&i| problem.is_structural(basis[i]))
                    .map(|i| &n[i][k])
                    .sum()
            })
            .collect();

        // entering: min over p_j < 0 of dn_j / |p_j|, ties to the smallest index
        let mut best: Option<(usize, BigInt, BigInt)> = None;
        for var in 0..vars {
            if in_basis[var] {
                continue;
            }
            let p = problem.dot(&n[r], var);
            if !p.is_negative() {
                continue;
            }
            let dn = problem.cost(var) * &d - problem.dot(&y, var);
            debug_assert!(!dn.is_negative(), "dual feasibility lost");
            let p = -p;
            let better = match &best {
                None => true,
                Some((_, bdn, bp)) => &dn * bp < bdn * &p,
            };
            if better {
                best = Some((var, dn, p));
            }
        }
        let Some((q, dn, _)) = best else {
            return Err(Error::Infeasible);
        };
        if dn.is_zero() {
            degenerate_streak += 1;
            if degenerate_streak >= DEGENERATE_STREAK_LIMIT {
                bland = true;
            }
        } else {
            degenerate_streak = 0;
        }

        let c = problem.column_image(&n, q);
        let pivot = c[r].clone();
        for i in 0..rows {
            if i == r {
                continue;
            }
            for k in 0..rows {
                let updated = &n[i][k] * &pivot - &c[i] * &n[r][k];
                let (quot, rem) = updated.div_rem(&d);
                debug_assert!(rem.is_zero(), "fraction-free update must divide exactly");
                n[i][k] = quot;
            }
        }
        d = pivot;
        if d.is_negative() {
            d = -d;
            for row in n.iter_mut() {
                for x in row.iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
        }
        in_basis[basis[r]] = false;
        in_basis[q] = true;
        basis[r] = q;
        pivots += 1;
    }
}

fn extract(
    problem: &Problem<'_>,
    n: &[Vec<BigInt>],
    d: &BigInt,
    basis: &[usize],
    pivots: usize,
) -> CoveringSolution {
    let rows = problem.rows;
    let mut primal = vec![Rational::zero(); problem.columns.len()];
    for (i, &var) in basis.iter().enumerate() {
        if problem.is_structural(var) {
            let sum: BigInt = n[i].iter().sum();
            primal[var] = Rational::new(sum, d.clone());
        }
    }
    let dual: Vec<Rational> = (0..rows)
        .map(|k| {
            let num: BigInt = (0..rows)
                .filter(|&i| problem.is_structural(basis[i]))
                .map(|i| &n[i][k])
                .sum();
            Rational::new(num, d.clone())
        })
        .collect();
    let objective = primal.iter().sum();
    CoveringSolution {
        primal,
        dual,
        objective,
        pivots,
    }
}
