//! The random assignment behind each constructor, for sampling experiments.

use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::certificate::Algorithm;
use crate::error::Result;
use crate::graph::{Dicut, WeightedDigraph};
use crate::measures::{
    condensation, contract_levels, greedy_coloring, level_decomposition, longest_path,
    path_coloring, theta,
};
use crate::rational::{ratio, Rational};
use crate::scheme::AssignmentScheme;

use super::blocks::block_scheme;
use super::dag::{component_scheme, heavier_path_matching};
use super::{
    bipartite_components, block_layout, coloring_scheme, dag_cut, family_scheme, greedy_matching,
    p_bar, smallest_block_parameter, theta_probabilities,
};

/// A random assignment over some positions, pulled back to vertices through
/// `position_of` when the positions are not the vertices themselves.
#[derive(Debug, Clone)]
pub struct RandomizedCut {
    pub scheme: AssignmentScheme,
    pub position_of: Option<Vec<usize>>,
}

impl RandomizedCut {
    fn direct(scheme: AssignmentScheme) -> Self {
        RandomizedCut {
            scheme,
            position_of: None,
        }
    }

    /// Draws one cut of the original digraph.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Dicut> {
        let cut = self.scheme.sample(rng)?;
        Ok(match &self.position_of {
            Some(map) => cut.pull_back(map),
            None => cut,
        })
    }
}

/// The scheme that `algorithm` derandomizes on `d`, or `None` when the
/// constructor is deterministic there (`rplus`, `theta` with `θ >= 1/3`, and
/// zero-weight input). For `dag` this is the scheme of the branch it picks;
/// for `scc` on cyclic input it is the per-component color-class split.
pub fn random_scheme(algorithm: Algorithm, d: &WeightedDigraph) -> Result<Option<RandomizedCut>> {
    if d.total_weight().is_zero() {
        return Ok(None);
    }
    let scheme = match algorithm {
        Algorithm::PositiveImbalance => return Ok(None),
        Algorithm::ThetaBiased => {
            let t = theta(d)?;
            if t >= ratio(1, 3) {
                return Ok(None);
            }
            RandomizedCut::direct(AssignmentScheme::independent(&theta_probabilities(
                d,
                &p_bar(&t),
            ))?)
        }
        Algorithm::Coloring => RandomizedCut::direct(coloring_scheme(d.n(), &greedy_coloring(d))?),
        Algorithm::Bipartite => {
            RandomizedCut::direct(family_scheme(d.n(), &bipartite_components(d))?)
        }
        Algorithm::Matching => RandomizedCut::direct(family_scheme(d.n(), &greedy_matching(d))?),
        Algorithm::PathMatching => path_matching_scheme(d)?,
        Algorithm::DagBlock => {
            let levels = level_decomposition(d)?.len();
            block_random_cut(d, smallest_block_parameter(levels as u64))?
        }
        Algorithm::Dag => dag_scheme(d)?,
        Algorithm::StrongComponent => {
            let cond = condensation(d);
            if cond.internal_weight.is_zero() {
                dag_scheme(d)?
            } else {
                RandomizedCut::direct(component_scheme(d, &cond.members())?.0)
            }
        }
    };
    Ok(Some(scheme))
}

fn path_matching_scheme(d: &WeightedDigraph) -> Result<RandomizedCut> {
    let path = longest_path(d)?;
    let (chosen, _, _) = heavier_path_matching(d, &path);
    Ok(RandomizedCut::direct(family_scheme(d.n(), &chosen)?))
}

fn block_random_cut(d: &WeightedDigraph, k: u64) -> Result<RandomizedCut> {
    let layout = block_layout(k)?;
    let (_, level_of) = contract_levels(d)?;
    Ok(RandomizedCut {
        scheme: block_scheme(&layout)?,
        position_of: Some(level_of),
    })
}

fn dag_scheme(d: &WeightedDigraph) -> Result<RandomizedCut> {
    let (_, cert) = dag_cut(d)?;
    let branch = cert.params.get("branch").and_then(Rational::to_i64);
    match branch {
        Some(0) => path_matching_scheme(d),
        Some(2) => {
            let k = cert.params["k"]
                .to_u64()
                .expect("block parameter is a small integer");
            block_random_cut(d, k)
        }
        _ => Ok(RandomizedCut::direct(coloring_scheme(
            d.n(),
            &path_coloring(d),
        )?)),
    }
}
