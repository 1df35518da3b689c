//! Verification suites: each check prints one `PASS`/`FAIL` line, in a fixed
//! order, and the command fails if any check does.

use anyhow::Result;
use clap::ValueEnum;
use maxdicut_core::cuts::{
    block_marginals, claim_a_holds, claim_b_holds, n_star, MIN_BLOCK_PARAMETER,
};
use maxdicut_core::exact::{max_cut_exact, max_dicut_exact, min_dicut_exact, DEFAULT_EXACT_CAP};
use maxdicut_core::game::{appendix_cover_family, cnu, cnu_bounds_check, verify_cover_family};
use maxdicut_core::generators::{
    appendix_extremal, random_bounded_cycle, random_dag, random_digraph, WeightRange,
};
use maxdicut_core::measures::{r_plus, underlying_graph};
use maxdicut_core::rational::{int, ratio};
use maxdicut_core::{Algorithm, Rational, WeightedDigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Appendix,
    Bounds,
    Lp,
    Claims,
    All,
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: impl Into<String>, outcome: Result<(bool, String)>) -> Self {
        match outcome {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {e:#}")),
        }
    }
}

/// Runs `suite` and reports whether every check passed.
pub fn run(suite: Suite, seed: u64) -> Result<bool> {
    let suites = match suite {
        Suite::All => vec![Suite::Appendix, Suite::Claims, Suite::Lp, Suite::Bounds],
        one => vec![one],
    };
    let mut all = true;
    for s in suites {
        let checks = match s {
            Suite::Appendix => appendix(),
            Suite::Claims => claims(),
            Suite::Lp => lp(),
            _ => bounds(seed),
        };
        for c in checks {
            all &= c.passed;
            println!(
                "{} {} {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
    }
    Ok(all)
}

/// `c_ν` for `ν = 2..=11`.
pub const CNU_TABLE: [(i64, i64); 10] = [
    (1, 1),
    (1, 2),
    (1, 2),
    (2, 5),
    (2, 5),
    (3, 8),
    (4, 11),
    (13, 37),
    (9, 26),
    (31, 92),
];

fn appendix() -> Vec<Check> {
    let mut out = Vec::new();
    for nu in 3..=8usize {
        let expected = ratio(CNU_TABLE[nu - 2].0, CNU_TABLE[nu - 2].1);
        out.push(Check::from_result(
            format!("appendix.ratio.nu{nu}"),
            (|| {
                let d = appendix_extremal(nu)?;
                let (_, mac) = max_dicut_exact(&d, DEFAULT_EXACT_CAP)?;
                let r = mac / d.total_weight();
                Ok((
                    r == expected,
                    format!("mac/w = {} expected {}", rat(&r), rat(&expected)),
                ))
            })(),
        ));
    }
    for (nu, total) in [(5, 5), (6, 5), (7, 8), (8, 11)] {
        out.push(Check::from_result(
            format!("appendix.cover.nu{nu}"),
            (|| {
                let (family, t) = appendix_cover_family(nu)
                    .ok_or_else(|| anyhow::anyhow!("no family for nu = {nu}"))?;
                let ok = verify_cover_family(nu, &family, t, total)?;
                Ok((
                    ok,
                    format!("{total} cuts, every arc covered at least {t} times"),
                ))
            })(),
        ));
    }
    out
}

fn claims() -> Vec<Check> {
    let ks = MIN_BLOCK_PARAMETER..=200;
    let a_fail: Vec<u64> = ks.clone().filter(|&k| !claim_a_holds(k)).collect();
    let b_fail: Vec<u64> = ks.clone().filter(|&k| !claim_b_holds(k)).collect();
    let monotone = (MIN_BLOCK_PARAMETER..=50)
        .all(|k| block_marginals(k).is_ok_and(|m| m.windows(2).all(|p| p[0] > p[1])));
    vec![
        Check::new(
            "claims.a",
            a_fail.is_empty(),
            format!("k in 7..=200, failures {a_fail:?}"),
        ),
        Check::new(
            "claims.b",
            b_fail.is_empty(),
            format!("k in 7..=200, failures {b_fail:?}"),
        ),
        Check::new(
            "claims.n_star_7",
            n_star(7) == 36,
            format!("n*_7 = {}", n_star(7)),
        ),
        Check::new(
            "claims.marginals",
            monotone,
            "block X-fractions strictly decrease, k <= 50",
        ),
    ]
}

fn lp() -> Vec<Check> {
    let mut out = Vec::new();
    let mut values: Vec<Rational> = Vec::new();
    for nu in 2..=11usize {
        let expected = ratio(CNU_TABLE[nu - 2].0, CNU_TABLE[nu - 2].1);
        out.push(Check::from_result(
            format!("lp.cnu.nu{nu}"),
            cnu(nu).map_err(Into::into).map(|sol| {
                let ok = sol.value == expected && sol.verify();
                values.push(sol.value.clone());
                (
                    ok,
                    format!(
                        "value {} expected {}, primal {} dual {}",
                        rat(&sol.value),
                        rat(&expected),
                        rat(&sol.primal_value),
                        rat(&sol.dual_value)
                    ),
                )
            }),
        ));
    }
    let monotone = values.len() == 10 && values.windows(2).all(|p| p[0] >= p[1]);
    out.push(Check::new(
        "lp.monotone",
        monotone,
        "c_nu non-increasing for nu = 2..=11",
    ));
    for nu in [2, 8, 12, 36, 100] {
        out.push(Check::from_result(
            format!("lp.bounds.nu{nu}"),
            cnu_bounds_check(nu, 8).map_err(Into::into).map(|b| {
                let upper = b.upper.as_ref().map_or("-".to_string(), rat);
                (
                    b.consistent,
                    format!("lower {} upper {}", rat(&b.lower), upper),
                )
            }),
        ));
    }
    out
}

/// Instances per constructor in the bounds suite.
const BOUNDS_INSTANCES: usize = 60;
const SANDWICH_INSTANCES: usize = 100;

/// A random instance in the precondition class of `alg`, `n <= 10`.
fn instance(alg: Algorithm, rng: &mut ChaCha8Rng) -> Result<WeightedDigraph> {
    let n = rng.gen_range(2..=10);
    let density = rng.gen_range(0.2..0.9);
    let seed = rng.gen();
    Ok(match alg {
        Algorithm::PathMatching | Algorithm::DagBlock | Algorithm::Dag => {
            random_dag(n, density, WeightRange::integers(1, 4), seed)?
        }
        Algorithm::StrongComponent => {
            if rng.gen_bool(0.5) {
                random_bounded_cycle(n, rng.gen_range(2..=4), seed)?
            } else {
                random_digraph(n, density, WeightRange::integers(1, 3), seed)?
            }
        }
        _ => random_digraph(
            n,
            density,
            WeightRange {
                lo: 0,
                hi: 6,
                denom: 2,
            },
            seed,
        )?,
    })
}

fn bounds(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for alg in Algorithm::ALL {
        let outcome = (|| {
            let mut failures = 0;
            for _ in 0..BOUNDS_INSTANCES {
                let d = instance(alg, &mut rng)?;
                let (cut, cert) = maxdicut_core::cuts::run(alg, &d)?;
                let (_, mac) = max_dicut_exact(&d, DEFAULT_EXACT_CAP)?;
                if !cert.is_consistent(&d, &cut) || cert.guaranteed_weight > mac {
                    failures += 1;
                }
            }
            Ok((
                failures == 0,
                format!("{BOUNDS_INSTANCES} instances, {failures} failures"),
            ))
        })();
        out.push(Check::from_result(format!("bounds.{}", alg.id()), outcome));
    }
    let outcome = (|| {
        let mut failures = 0;
        for _ in 0..SANDWICH_INSTANCES {
            let d = instance(Algorithm::Coloring, &mut rng)?;
            let (_, mac) = max_dicut_exact(&d, DEFAULT_EXACT_CAP)?;
            let mac_g = max_cut_exact(&underlying_graph(&d), DEFAULT_EXACT_CAP)?;
            let rp = r_plus(&d);
            let min = min_dicut_exact(&d, DEFAULT_EXACT_CAP)?.map_or(int(0), |(_, k)| k);
            let ok = &mac_g / int(2) <= mac
                && mac <= (&mac_g + &rp) / int(2)
                && (&mac_g / int(2) + &rp) / int(2) <= mac
                && &rp + &min <= mac;
            failures += usize::from(!ok);
        }
        Ok((
            failures == 0,
            format!("{SANDWICH_INSTANCES} instances, {failures} failures"),
        ))
    })();
    out.push(Check::from_result("bounds.sandwich", outcome));
    out
}
