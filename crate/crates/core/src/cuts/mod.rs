//! Certified cut constructors.
//!
//! Every constructor returns a [`CertifiedCut`]: a dicut together with the
//! weight it is guaranteed to reach and the weight it actually reaches.
//! Randomized constructions are rounded with
//! [`AssignmentScheme::derandomize`], so the achieved weight is at least the
//! exact expectation, which is at least the guarantee. A digraph of total weight
//! zero always yields the empty cut with guarantee zero.

mod blocks;
mod dag;
mod random;

pub use blocks::{
    block_f, block_layout, block_marginals, block_size, claim_a_bound, claim_a_holds,
    claim_a_probability, claim_b_holds, dag_block_cut, n_star, smallest_block_parameter,
    BlockLayout, MIN_BLOCK_PARAMETER,
};
pub use dag::{dag_cut, path_matching_cut, strong_component_cut, SCC_K};
pub use random::{random_scheme, RandomizedCut};

use num_traits::{One, Zero};

use crate::certificate::{Algorithm, BoundCertificate, CertifiedCut};
use crate::error::{Error, Result};
use crate::graph::{Dicut, WeightedDigraph};
use crate::measures::{imbalances, l_of_theta, r_plus, theta, underlying_graph, ProperColoring};
use crate::rational::{int, ratio, Rational};
use crate::scheme::{AssignmentScheme, PoolLaw};

/// Packages `cut` with its measured weight.
fn certify(
    d: &WeightedDigraph,
    algorithm: Algorithm,
    guarantee: Rational,
    cut: Dicut,
) -> (Dicut, BoundCertificate) {
    let achieved = d.dicut_weight(&cut);
    (cut, BoundCertificate::new(algorithm, guarantee, achieved))
}

fn trivial(algorithm: Algorithm) -> CertifiedCut {
    (
        Dicut::empty(),
        BoundCertificate::new(algorithm, Rational::zero(), Rational::zero()),
    )
}

/// `X = {v : r(v) > 0}`, which cuts at least `r⁺(D)`.
pub fn positive_imbalance_cut(d: &WeightedDigraph) -> CertifiedCut {
    let r = imbalances(d);
    let cut = Dicut::new((0..d.n()).filter(|&v| r[v] > Rational::zero()));
    let rp = r_plus(d);
    let (cut, cert) = certify(d, Algorithm::PositiveImbalance, rp.clone(), cut);
    (cut, cert.with_param("r_plus", rp))
}

/// Biased random cut reaching `l(θ)·w`. For `θ >= 1/3` the positive-imbalance
/// cut already does; otherwise vertices of positive imbalance join `X` with
/// probability `1/2 + p̄` and the rest with `1/2 - p̄`, `p̄ = θ / (2(1 - 2θ))`.
pub fn theta_biased_cut(d: &WeightedDigraph) -> Result<CertifiedCut> {
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::ThetaBiased));
    }
    let t = theta(d)?;
    let guarantee = l_of_theta(&t)? * &w;
    if t >= ratio(1, 3) {
        let (cut, _) = positive_imbalance_cut(d);
        let (cut, cert) = certify(d, Algorithm::ThetaBiased, guarantee, cut);
        return Ok((cut, cert.with_param("theta", t)));
    }
    let p_bar = p_bar(&t);
    let probs = theta_probabilities(d, &p_bar);
    let cut = AssignmentScheme::independent(&probs)?.derandomize(d)?;
    let (cut, cert) = certify(d, Algorithm::ThetaBiased, guarantee, cut);
    Ok((cut, cert.with_param("theta", t).with_param("p_bar", p_bar)))
}

/// `p̄ = θ / (2(1 - 2θ))`.
fn p_bar(t: &Rational) -> Rational {
    t / (int(2) * (Rational::one() - int(2) * t))
}

fn theta_probabilities(d: &WeightedDigraph, p_bar: &Rational) -> Vec<Rational> {
    let half = ratio(1, 2);
    imbalances(d)
        .iter()
        .map(|rv| {
            if *rv > Rational::zero() {
                &half + p_bar
            } else {
                &half - p_bar
            }
        })
        .collect()
}

/// Coefficient `c` with `mac(D) >= c·w(D)` for a proper coloring with `chi`
/// colors: `1/4 + 1/(4chi)` for odd `chi`, `1/4 + 1/(4(chi-1))` for even `chi`.
pub fn coloring_coefficient(chi: usize) -> Rational {
    assert!(chi >= 1, "a coloring uses at least one color");
    let denom = if chi % 2 == 1 { chi } else { chi - 1 };
    ratio(1, 4) + ratio(1, 4 * denom as i64)
}

/// Splits the color classes into two groups whose sizes differ by at most one,
/// uniformly at random with the larger group on a random side.
pub fn coloring_cut(d: &WeightedDigraph, coloring: &ProperColoring) -> Result<CertifiedCut> {
    if coloring.color_of.len() != d.n() {
        return Err(Error::InvalidParameter(format!(
            "coloring has {} entries for {} vertices",
            coloring.color_of.len(),
            d.n()
        )));
    }
    if let Some(a) = d
        .arcs()
        .iter()
        .find(|a| coloring.color_of[a.tail] == coloring.color_of[a.head])
    {
        return Err(Error::ImproperColoring {
            tail: a.tail,
            head: a.head,
            color: coloring.color_of[a.tail],
        });
    }
    // recompact in case the caller built the struct by hand
    let coloring = ProperColoring::new(d, coloring.color_of.clone())?;
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::Coloring));
    }
    let chi = coloring.colors_used;
    let cut = coloring_scheme(d.n(), &coloring)?.derandomize(d)?;
    let guarantee = coloring_coefficient(chi) * &w;
    let (cut, cert) = certify(d, Algorithm::Coloring, guarantee, cut);
    Ok((cut, cert.with_param("colors_used", int(chi as i64))))
}

fn coloring_scheme(n: usize, coloring: &ProperColoring) -> Result<AssignmentScheme> {
    let units = coloring
        .classes()
        .into_iter()
        .map(|class| class.into_iter().map(|v| (v, false)).collect())
        .collect();
    let mut scheme = AssignmentScheme::new(n);
    scheme.add_pool(units, PoolLaw::EitherHalf)?;
    Ok(scheme)
}

/// One component of a bipartite family: its two sides, each independent in `D`.
pub type BipartiteComponent = (Vec<usize>, Vec<usize>);

/// Weight of the arcs inside the components' vertex sets, after checking that
/// the components are disjoint and every side is independent.
fn family_weight(d: &WeightedDigraph, components: &[BipartiteComponent]) -> Result<Rational> {
    let n = d.n();
    let mut owner: Vec<Option<(usize, bool)>> = vec![None; n];
    for (c, (xs, ys)) in components.iter().enumerate() {
        for (side, vs) in [(false, xs), (true, ys)] {
            for &v in vs {
                if v >= n {
                    return Err(Error::CutOutOfRange { vertex: v, n });
                }
                if owner[v].is_some() {
                    return Err(Error::OverlappingComponents { vertex: v });
                }
                owner[v] = Some((c, side));
            }
        }
    }
    let mut weight = Rational::zero();
    for a in d.arcs() {
        if let (Some((cu, su)), Some((cv, sv))) = (owner[a.tail], owner[a.head]) {
            if cu == cv {
                if su == sv {
                    return Err(Error::NotIndependent {
                        component: cu,
                        tail: a.tail,
                        head: a.head,
                    });
                }
                weight += &a.weight;
            }
        }
    }
    Ok(weight)
}

/// Fair coin per component deciding which side goes to `X`, fair coin per
/// remaining vertex. Arcs inside a component are cut with probability 1/2, all
/// others with probability 1/4, giving `w(D)/4 + w(R)/4`.
pub fn bipartite_family_cut(
    d: &WeightedDigraph,
    components: &[BipartiteComponent],
) -> Result<CertifiedCut> {
    let family = family_weight(d, components)?;
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::Bipartite));
    }
    let cut = family_scheme(d.n(), components)?.derandomize(d)?;
    let guarantee = (&w + &family) / int(4);
    let (cut, cert) = certify(d, Algorithm::Bipartite, guarantee, cut);
    Ok((cut, cert.with_param("family_weight", family)))
}

fn family_scheme(n: usize, components: &[BipartiteComponent]) -> Result<AssignmentScheme> {
    let mut scheme = AssignmentScheme::new(n);
    let units = components
        .iter()
        .map(|(xs, ys)| {
            xs.iter()
                .map(|&v| (v, false))
                .chain(ys.iter().map(|&v| (v, true)))
                .collect()
        })
        .collect();
    scheme.add_pool(units, PoolLaw::Coin(ratio(1, 2)))?;
    scheme.cover_rest_with_fair_coins();
    Ok(scheme)
}

/// Greedy maximum-weight-first matching on the underlying graph (ties by
/// smaller endpoint pair), as singleton-sided components.
pub fn greedy_matching(d: &WeightedDigraph) -> Vec<BipartiteComponent> {
    let g = underlying_graph(d);
    let mut edges: Vec<_> = g.arcs().iter().collect();
    edges.sort_by(|a, b| {
        b.weight
            .cmp(&a.weight)
            .then((a.tail, a.head).cmp(&(b.tail, b.head)))
    });
    let mut used = vec![false; d.n()];
    let mut matching = Vec::new();
    for e in edges {
        if !used[e.tail] && !used[e.head] {
            used[e.tail] = true;
            used[e.head] = true;
            matching.push((vec![e.tail], vec![e.head]));
        }
    }
    matching
}

/// [`bipartite_family_cut`] applied to a greedy heavy matching.
pub fn matching_cut(d: &WeightedDigraph) -> Result<CertifiedCut> {
    let matching = greedy_matching(d);
    let (cut, mut cert) = bipartite_family_cut(d, &matching)?;
    cert.algorithm = Algorithm::Matching;
    Ok((
        cut,
        cert.with_param("matching_edges", int(matching.len() as i64)),
    ))
}

/// Runs the constructor named by `algorithm` with its default inputs: greedy
/// coloring for `coloring`, bipartite connected components of the underlying
/// graph for `bipartite`, the smallest admissible block parameter for
/// `dag-block`.
pub fn run(algorithm: Algorithm, d: &WeightedDigraph) -> Result<CertifiedCut> {
    match algorithm {
        Algorithm::PositiveImbalance => Ok(positive_imbalance_cut(d)),
        Algorithm::ThetaBiased => theta_biased_cut(d),
        Algorithm::Coloring => coloring_cut(d, &crate::measures::greedy_coloring(d)),
        Algorithm::Bipartite => bipartite_family_cut(d, &bipartite_components(d)),
        Algorithm::Matching => matching_cut(d),
        Algorithm::PathMatching => path_matching_cut(d),
        Algorithm::DagBlock => {
            let levels = crate::measures::level_decomposition(d)?.len();
            dag_block_cut(d, smallest_block_parameter(levels as u64))
        }
        Algorithm::Dag => dag_cut(d),
        Algorithm::StrongComponent => strong_component_cut(d),
    }
}

/// Connected components of the underlying graph that are bipartite, each with
/// its two-coloring (sides found by breadth-first search from the smallest id).
/// Components containing an odd cycle, and isolated vertices, are skipped.
pub fn bipartite_components(d: &WeightedDigraph) -> Vec<BipartiteComponent> {
    let n = d.n();
    let mut adj = vec![Vec::new(); n];
    for a in d.arcs() {
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut out = Vec::new();
    for root in 0..n {
        if side[root].is_some() || adj[root].is_empty() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        let mut members = Vec::new();
        let mut bipartite = true;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            let s = side[v].expect("queued vertices are colored");
            for &u in &adj[v] {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(t) if t == s => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        if bipartite {
            members.sort_unstable();
            let (xs, ys) = members.iter().partition(|&&v| side[v] == Some(false));
            out.push((xs, ys));
        }
    }
    out
}
