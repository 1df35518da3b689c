//! Serializable report shapes. Rationals are written as `p` or `p/q` strings.

use std::collections::BTreeMap;

use maxdicut_core::rational::format_rational;
use maxdicut_core::{Dicut, Rational};
use serde::Serialize;

pub fn rat(r: &Rational) -> String {
    format_rational(r)
}

pub fn ids(cut: &Dicut) -> Vec<usize> {
    cut.x_side().to_vec()
}

pub fn join(cut: &Dicut) -> String {
    let parts: Vec<String> = cut.x_side().iter().map(usize::to_string).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

#[derive(Debug, Serialize)]
pub struct ExactReport {
    pub n: usize,
    pub m: usize,
    pub w: String,
    pub mac: String,
    /// `mac / w`, absent for zero-weight input.
    pub ratio: Option<String>,
    pub cut: Vec<usize>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub w: String,
    pub guarantee: String,
    pub achieved: String,
    pub cut: Vec<usize>,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub pass: bool,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub randomized: Option<SampleReport>,
}

#[derive(Debug, Serialize)]
pub struct SampleReport {
    pub trials: usize,
    /// False when the constructor has no random scheme on this input; the
    /// best cut is then the deterministic one.
    pub random: bool,
    pub best: String,
    pub best_cut: Vec<usize>,
    pub mean: f64,
}

#[derive(Debug, Serialize)]
pub struct CutProbability {
    pub cut: Vec<usize>,
    pub probability: String,
}

#[derive(Debug, Serialize)]
pub struct ArcWeight {
    pub tail: usize,
    pub head: usize,
    pub weight: String,
}

#[derive(Debug, Serialize)]
pub struct CnuReport {
    pub nu: usize,
    pub value: String,
    pub primal_value: String,
    pub dual_value: String,
    pub verified: bool,
    pub pivots: usize,
    pub cut_distribution: Vec<CutProbability>,
    /// Arcs with positive adversary weight.
    pub adversary_weights: Vec<ArcWeight>,
    pub elapsed_ms: u128,
}
