use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use maxdicut_core::cuts::{random_scheme, run};
use maxdicut_core::exact::max_dicut_exact;
use maxdicut_core::game::cnu as solve_game;
use maxdicut_core::generators::{self as g, WeightRange};
use maxdicut_core::io::{parse_instance, write_instance};
use maxdicut_core::rational::{parse_rational, to_f64};
use maxdicut_core::{Algorithm, Rational, WeightedDigraph};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{
    ids, join, rat, ArcWeight, BoundReport, CnuReport, CutProbability, ExactReport, SampleReport,
};

/// `key=value` family parameters; every key must be consumed.
struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(raw: &[String]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter `{item}` is not key=value"))?;
            if map.insert(k.to_string(), v.to_string()).is_some() {
                bail!("parameter `{k}` given twice");
            }
        }
        Ok(Params(map))
    }

    fn take<T: FromStr>(&mut self, key: &str, default: Option<T>) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        match self.0.remove(key) {
            Some(v) => v.parse().map_err(|e| anyhow!("bad value for `{key}`: {e}")),
            None => default.ok_or_else(|| anyhow!("missing parameter `{key}`")),
        }
    }

    fn take_rational(&mut self, key: &str) -> Result<Rational> {
        let v = self
            .0
            .remove(key)
            .ok_or_else(|| anyhow!("missing parameter `{key}`"))?;
        Ok(parse_rational(&v)?)
    }

    fn weights(&mut self) -> Result<WeightRange> {
        Ok(WeightRange {
            lo: self.take("lo", Some(1))?,
            hi: self.take("hi", Some(1))?,
            denom: self.take("denom", Some(1))?,
        })
    }

    fn finish(self) -> Result<()> {
        match self.0.keys().next() {
            Some(k) => bail!("unknown parameter `{k}`"),
            None => Ok(()),
        }
    }
}

pub fn generate(family: &str, raw: &[String], seed: u64) -> Result<WeightedDigraph> {
    let mut p = Params::parse(raw)?;
    let d = match family {
        "tournament" => g::regular_tournament(p.take("k", None)?)?,
        "two-tournament" => {
            let k = p.take("k", None)?;
            g::two_tournament(k, &p.take_rational("theta")?)?
        }
        "staircase" => g::staircase(p.take("n", None)?)?,
        "staircase-m" => g::staircase_trimmed(p.take("m", None)?)?,
        "appendix" => g::appendix_extremal(p.take("nu", None)?)?,
        "transitive" => g::complete_transitive_dag(p.take("nu", None)?)?,
        "random-dag" | "random-digraph" => {
            let n = p.take("n", None)?;
            let density = p.take("density", Some(0.5))?;
            let weights = p.weights()?;
            if family == "random-dag" {
                g::random_dag(n, density, weights, seed)?
            } else {
                g::random_digraph(n, density, weights, seed)?
            }
        }
        "random-bounded-cycle" => {
            let n = p.take("n", None)?;
            g::random_bounded_cycle(n, p.take("l", None)?, seed)?
        }
        other => bail!("unknown family `{other}`"),
    };
    p.finish()?;
    Ok(d)
}

pub fn gen(family: &str, raw: &[String], seed: u64, out: Option<&Path>) -> Result<bool> {
    let text = write_instance(&generate(family, raw, seed)?);
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(true)
}

fn load(path: &Path) -> Result<WeightedDigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

pub fn exact(path: &Path, max_n: usize, json: bool) -> Result<bool> {
    let d = load(path)?;
    let start = Instant::now();
    let (cut, mac) = max_dicut_exact(&d, max_n)?;
    let w = d.total_weight();
    let report = ExactReport {
        n: d.n(),
        m: d.m(),
        w: rat(&w),
        mac: rat(&mac),
        ratio: (!w.is_zero()).then(|| rat(&(&mac / &w))),
        cut: ids(&cut),
        elapsed_ms: start.elapsed().as_millis(),
    };
    if json {
        print_json(&report)?;
    } else {
        println!("n {} m {} w {}", report.n, report.m, report.w);
        println!("mac {}", report.mac);
        println!("ratio {}", report.ratio.as_deref().unwrap_or("-"));
        println!("cut {}", join(&cut));
        println!("elapsed_ms {}", report.elapsed_ms);
    }
    Ok(true)
}

pub fn bound(
    algorithm: &str,
    path: &Path,
    json: bool,
    trials: Option<usize>,
    seed: u64,
) -> Result<bool> {
    let alg = Algorithm::from_id(algorithm).ok_or_else(|| {
        let known: Vec<&str> = Algorithm::ALL.iter().map(|a| a.id()).collect();
        anyhow!(
            "unknown algorithm `{algorithm}` (expected one of {})",
            known.join(", ")
        )
    })?;
    let d = load(path)?;
    let start = Instant::now();
    let (cut, cert) = run(alg, &d)?;
    let randomized = match trials {
        Some(t) => Some(sample(alg, &d, t, seed, &cut)?),
        None => None,
    };
    let report = BoundReport {
        algorithm: alg.id().to_string(),
        n: d.n(),
        m: d.m(),
        w: rat(&d.total_weight()),
        guarantee: rat(&cert.guaranteed_weight),
        achieved: rat(&cert.achieved_weight),
        cut: ids(&cut),
        seed,
        elapsed_ms: start.elapsed().as_millis(),
        pass: cert.is_consistent(&d, &cut),
        params: cert
            .params
            .iter()
            .map(|(k, v)| (k.clone(), rat(v)))
            .collect(),
        randomized,
    };
    if json {
        print_json(&report)?;
    } else {
        println!("algorithm {}", report.algorithm);
        println!("n {} m {} w {}", report.n, report.m, report.w);
        println!(
            "guarantee {} (~{:.6})",
            report.guarantee,
            to_f64(&cert.guaranteed_weight)
        );
        println!("achieved {}", report.achieved);
        println!("cut {}", join(&cut));
        for (k, v) in &report.params {
            println!("param {k} {v}");
        }
        if let Some(s) = &report.randomized {
            println!(
                "randomized trials {} best {} mean {:.6}{}",
                s.trials,
                s.best,
                s.mean,
                if s.random { "" } else { " (deterministic)" }
            );
        }
        println!("elapsed_ms {}", report.elapsed_ms);
        println!("{}", if report.pass { "PASS" } else { "FAIL" });
    }
    Ok(report.pass)
}

fn sample(
    alg: Algorithm,
    d: &WeightedDigraph,
    trials: usize,
    seed: u64,
    fallback: &maxdicut_core::Dicut,
) -> Result<SampleReport> {
    let Some(scheme) = random_scheme(alg, d)? else {
        let w = d.dicut_weight(fallback);
        return Ok(SampleReport {
            trials,
            random: false,
            best: rat(&w),
            best_cut: ids(fallback),
            mean: to_f64(&w),
        });
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (Rational::zero(), maxdicut_core::Dicut::empty());
    let mut total = Rational::zero();
    for _ in 0..trials {
        let cut = scheme.sample(&mut rng)?;
        let w = d.dicut_weight(&cut);
        total += &w;
        if w > best.0 {
            best = (w, cut);
        }
    }
    let mean = if trials == 0 {
        0.0
    } else {
        to_f64(&total) / trials as f64
    };
    Ok(SampleReport {
        trials,
        random: true,
        best: rat(&best.0),
        best_cut: ids(&best.1),
        mean,
    })
}

pub fn cnu(nu: usize, json: bool) -> Result<bool> {
    let start = Instant::now();
    let sol = solve_game(nu)?;
    let verified = sol.verify();
    let report = CnuReport {
        nu,
        value: rat(&sol.value),
        primal_value: rat(&sol.primal_value),
        dual_value: rat(&sol.dual_value),
        verified,
        pivots: sol.pivots,
        cut_distribution: sol
            .cut_distribution
            .iter()
            .map(|(c, p)| CutProbability {
                cut: ids(c),
                probability: rat(p),
            })
            .collect(),
        adversary_weights: sol
            .adversary_weights
            .iter()
            .filter(|(_, y)| !y.is_zero())
            .map(|(&(tail, head), y)| ArcWeight {
                tail,
                head,
                weight: rat(y),
            })
            .collect(),
        elapsed_ms: start.elapsed().as_millis(),
    };
    if json {
        print_json(&report)?;
    } else {
        println!("nu {} value {}", report.nu, report.value);
        println!("primal {} dual {}", report.primal_value, report.dual_value);
        println!("cuts");
        for c in &report.cut_distribution {
            let parts: Vec<String> = c.cut.iter().map(usize::to_string).collect();
            println!("  {} : {}", c.probability, parts.join(" "));
        }
        println!("arcs");
        for a in &report.adversary_weights {
            println!("  {} -> {} : {}", a.tail, a.head, a.weight);
        }
        println!("pivots {} elapsed_ms {}", report.pivots, report.elapsed_ms);
        println!("{}", if verified { "PASS" } else { "FAIL" });
    }
    Ok(verified)
}
