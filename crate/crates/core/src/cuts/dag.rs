use num_traits::Zero;

use crate::certificate::{Algorithm, BoundCertificate, CertifiedCut};
use crate::error::Result;
use crate::graph::WeightedDigraph;
use crate::measures::{
    condensation, exact_coloring, greedy_coloring, longest_path, path_coloring, ProperColoring,
    EXACT_COLORING_CAP,
};
use crate::rational::{int, pow_ratio_lower, ratio, Rational};
use crate::scheme::{AssignmentScheme, PoolLaw};

use super::{
    bipartite_family_cut, certify, coloring_cut, dag_block_cut, smallest_block_parameter, trivial,
    BipartiteComponent,
};

/// Below this many levels the coloring cut alone beats the block construction.
const BLOCK_BRANCH_MIN_LEVELS: usize = 36;

/// Additive constant used for the acyclic part in [`strong_component_cut`].
pub const SCC_K: (i64, i64) = (1, 24);

/// Longest path `p_1 … p_l`, matchings `M_0 = {p_1p_2, p_3p_4, …}` and
/// `M_1 = {p_2p_3, p_4p_5, …}`; the heavier one drives a bipartite family cut.
pub fn path_matching_cut(d: &WeightedDigraph) -> Result<CertifiedCut> {
    let path = longest_path(d)?;
    if d.total_weight().is_zero() {
        return Ok(trivial(Algorithm::PathMatching));
    }
    let (chosen, w0, w1) = heavier_path_matching(d, &path);
    let (cut, mut cert) = bipartite_family_cut(d, &chosen)?;
    cert.algorithm = Algorithm::PathMatching;
    Ok((
        cut,
        cert.with_param("path_order", int(path.len() as i64))
            .with_param("m0_weight", w0)
            .with_param("m1_weight", w1),
    ))
}

/// The heavier of the two alternating matchings along `path`, with both weights.
pub(super) fn heavier_path_matching(
    d: &WeightedDigraph,
    path: &[usize],
) -> (Vec<BipartiteComponent>, Rational, Rational) {
    let matching = |offset: usize| -> Vec<BipartiteComponent> {
        path.windows(2)
            .skip(offset)
            .step_by(2)
            .map(|pair| (vec![pair[0]], vec![pair[1]]))
            .collect()
    };
    let pair_weight = |m: &[BipartiteComponent]| -> Rational {
        let mut side = vec![None; d.n()];
        for (i, (x, y)) in m.iter().enumerate() {
            side[x[0]] = Some(i);
            side[y[0]] = Some(i);
        }
        d.arcs()
            .iter()
            .filter(|a| side[a.tail].is_some() && side[a.tail] == side[a.head])
            .map(|a| a.weight.clone())
            .sum()
    };
    let (m0, m1) = (matching(0), matching(1));
    let (w0, w1) = (pair_weight(&m0), pair_weight(&m1));
    let chosen = if w0 >= w1 { m0 } else { m1 };
    (chosen, w0, w1)
}

/// `w/4 + g/24` where `g <= w^{3/5}` is the certified dyadic lower bound.
fn dag_guarantee(w: &Rational) -> (Rational, Rational) {
    let g = pow_ratio_lower(w, 3, 5);
    (w / int(4) + &g / int(24), g)
}

/// Certified cut of weight at least `w/4 + w^{3/5}/24` for acyclic digraphs whose
/// arcs all weigh at least one.
///
/// If the longest path has order `l >= w^{3/5}` (checked as `l⁵ >= w³`), the
/// path-matching cut is used. Otherwise, with `ν = l` levels, the coloring cut by
/// levels is used for `ν < 36`, and for larger `ν` the heavier of that and the
/// block cut with the smallest `k` covering `ν` levels.
pub fn dag_cut(d: &WeightedDigraph) -> Result<CertifiedCut> {
    d.check_weights_at_least_one()?;
    let path = longest_path(d)?;
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::Dag));
    }
    let (guarantee, g) = dag_guarantee(&w);
    let l = path.len();
    let l_rat = int(l as i64);
    let (cut, branch_cert, branch) = if num_traits::pow(l_rat, 5) >= num_traits::pow(w.clone(), 3) {
        let (cut, cert) = path_matching_cut(d)?;
        (cut, cert, 0)
    } else {
        let (c_cut, c_cert) = coloring_cut(d, &path_coloring(d))?;
        if l < BLOCK_BRANCH_MIN_LEVELS {
            (c_cut, c_cert, 1)
        } else {
            let k = smallest_block_parameter(l as u64);
            let (b_cut, b_cert) = dag_block_cut(d, k)?;
            if b_cert.achieved_weight > c_cert.achieved_weight {
                (b_cut, b_cert, 2)
            } else {
                (c_cut, c_cert, 1)
            }
        }
    };
    let (cut, mut cert) = certify(d, Algorithm::Dag, guarantee, cut);
    cert = cert
        .with_param("branch", int(branch))
        .with_param("path_order", int(l as i64))
        .with_param("w_pow_lower", g)
        .with_param("branch_guarantee", branch_cert.guaranteed_weight.clone());
    if let Some(k) = branch_cert.params.get("k") {
        cert = cert.with_param("k", k.clone());
    }
    Ok((cut, cert))
}

/// Fewest colors among the available colorings of one component.
fn component_coloring(component: &WeightedDigraph) -> ProperColoring {
    if component.n() <= EXACT_COLORING_CAP {
        return exact_coloring(component).expect("component within the exact cap");
    }
    let (a, b) = (path_coloring(component), greedy_coloring(component));
    if b.colors_used < a.colors_used {
        b
    } else {
        a
    }
}

/// Certified cut for digraphs whose arcs all weigh at least one, combining the
/// acyclic structure between strong components with colorings inside them.
///
/// With `w_s` the weight inside strong components, `w_a = w - w_s`, `L` the
/// largest number of colors used on a component and `k = 1/24`, the guarantee is
/// `w/4 + k/((4k+1)L + 1) · (g_a + w_s)` where `g_a <= w_a^{3/5}`. It is met by
/// the heavier of two cuts: [`dag_cut`] on the condensation (pulled back), and a
/// split of each component's `L` color classes into halves differing by at most
/// one, independently per component. Acyclic input is handed to [`dag_cut`].
pub fn strong_component_cut(d: &WeightedDigraph) -> Result<CertifiedCut> {
    d.check_weights_at_least_one()?;
    let w = d.total_weight();
    if w.is_zero() {
        return Ok(trivial(Algorithm::StrongComponent));
    }
    let cond = condensation(d);
    if cond.internal_weight.is_zero() {
        let (cut, cert) = dag_cut(d)?;
        return Ok((cut, relabel(cert, Algorithm::StrongComponent)));
    }
    let w_s = cond.internal_weight.clone();
    let w_a = cond.quotient.total_weight();

    let (q_cut, q_cert) = dag_cut(&cond.quotient)?;
    let c1 = q_cut.pull_back(&cond.component_of);

    let (scheme, colors) = component_scheme(d, &cond.members())?;
    let c2 = scheme.derandomize(d)?;

    let k = ratio(SCC_K.0, SCC_K.1);
    let g_a = pow_ratio_lower(&w_a, 3, 5);
    let coefficient = &k / ((int(4) * &k + int(1)) * int(colors as i64) + int(1));
    let guarantee = &w / int(4) + coefficient * (&g_a + &w_s);

    let (c1_weight, c2_weight) = (d.dicut_weight(&c1), d.dicut_weight(&c2));
    let (cut, chosen) = if c1_weight >= c2_weight {
        (c1, 1)
    } else {
        (c2, 2)
    };
    let (cut, cert) = certify(d, Algorithm::StrongComponent, guarantee, cut);
    Ok((
        cut,
        cert.with_param("colors", int(colors as i64))
            .with_param("k", k)
            .with_param("internal_weight", w_s)
            .with_param("acyclic_weight", w_a)
            .with_param("acyclic_pow_lower", g_a)
            .with_param("acyclic_guarantee", q_cert.guaranteed_weight)
            .with_param("chosen", int(chosen)),
    ))
}

/// One pool per strong component whose units are its color classes (padded
/// to the largest color count `L`), split into halves of sizes `⌈L/2⌉` and
/// `⌊L/2⌋`. Returns the scheme and `L`.
pub(super) fn component_scheme(
    d: &WeightedDigraph,
    members: &[Vec<usize>],
) -> Result<(AssignmentScheme, usize)> {
    let colorings: Vec<(ProperColoring, Vec<usize>)> = members
        .iter()
        .map(|vs| {
            let (sub, old_ids) = d.induced(vs);
            (component_coloring(&sub), old_ids)
        })
        .collect();
    let colors = colorings
        .iter()
        .map(|(c, _)| c.colors_used)
        .max()
        .unwrap_or(1);
    let mut scheme = AssignmentScheme::new(d.n());
    for (coloring, old_ids) in &colorings {
        let mut units: Vec<Vec<(usize, bool)>> = vec![Vec::new(); colors];
        for (local, &c) in coloring.color_of.iter().enumerate() {
            units[c].push((old_ids[local], false));
        }
        scheme.add_pool(units, PoolLaw::EitherHalf)?;
    }
    Ok((scheme, colors))
}

fn relabel(mut cert: BoundCertificate, algorithm: Algorithm) -> BoundCertificate {
    cert.algorithm = algorithm;
    cert
}
