use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{Dicut, WeightedDigraph};
use crate::rational::{format_rational, Rational};

/// Identifier of a certified cut constructor. The string forms are the ids the
/// command line accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    PositiveImbalance,
    ThetaBiased,
    Coloring,
    Bipartite,
    Matching,
    PathMatching,
    DagBlock,
    Dag,
    StrongComponent,
}

impl Algorithm {
    pub const ALL: [Algorithm; 9] = [
        Algorithm::PositiveImbalance,
        Algorithm::ThetaBiased,
        Algorithm::Coloring,
        Algorithm::Bipartite,
        Algorithm::Matching,
        Algorithm::PathMatching,
        Algorithm::DagBlock,
        Algorithm::Dag,
        Algorithm::StrongComponent,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::PositiveImbalance => "rplus",
            Algorithm::ThetaBiased => "theta",
            Algorithm::Coloring => "coloring",
            Algorithm::Bipartite => "bipartite",
            Algorithm::Matching => "matching",
            Algorithm::PathMatching => "path-matching",
            Algorithm::DagBlock => "dag-block",
            Algorithm::Dag => "dag",
            Algorithm::StrongComponent => "scc",
        }
    }

    pub fn from_id(id: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.id() == id)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The runtime form of a "mac(D) >= guarantee" statement: which constructor
/// ran, what it promised and what its cut actually weighs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub algorithm: Algorithm,
    pub guaranteed_weight: Rational,
    pub achieved_weight: Rational,
    pub params: BTreeMap<String, Rational>,
}

impl BoundCertificate {
    pub fn new(
        algorithm: Algorithm,
        guaranteed_weight: Rational,
        achieved_weight: Rational,
    ) -> Self {
        BoundCertificate {
            algorithm,
            guaranteed_weight,
            achieved_weight,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: Rational) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn holds(&self) -> bool {
        self.achieved_weight >= self.guaranteed_weight
    }

    /// Both certificate invariants: the promise is met, and the achieved weight
    /// is the weight of `cut` in `d`.
    pub fn is_consistent(&self, d: &WeightedDigraph, cut: &Dicut) -> bool {
        self.holds() && d.dicut_weight(cut) == self.achieved_weight
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: achieved {} >= guaranteed {}",
            self.algorithm,
            format_rational(&self.achieved_weight),
            format_rational(&self.guaranteed_weight)
        )?;
        for (k, v) in &self.params {
            write!(f, " {k}={}", format_rational(v))?;
        }
        Ok(())
    }
}

/// A cut together with its certificate.
pub type CertifiedCut = (Dicut, BoundCertificate);
