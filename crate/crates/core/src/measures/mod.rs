//! Scalar and structural quantities of weighted digraphs.

mod coloring;
mod structure;

pub use coloring::{
    exact_coloring, greedy_coloring, path_coloring, ProperColoring, EXACT_COLORING_CAP,
};
pub use structure::{
    condensation, contract_levels, is_acyclic, level_decomposition, longest_path, Condensation,
    LevelDecomposition,
};

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Arc, WeightedDigraph};
use crate::rational::{int, ratio, Rational};

/// `w(D)`: the sum of all arc weights.
pub fn total_weight(d: &WeightedDigraph) -> Rational {
    d.total_weight()
}

/// All imbalances `r(v) = w+(v) - w-(v)` at once.
pub fn imbalances(d: &WeightedDigraph) -> Vec<Rational> {
    let mut r = vec![Rational::zero(); d.n()];
    for a in d.arcs() {
        r[a.tail] += &a.weight;
        r[a.head] -= &a.weight;
    }
    r
}

/// `r(v)`: out-weight minus in-weight of `v`.
pub fn imbalance(d: &WeightedDigraph, v: usize) -> Rational {
    d.arcs().iter().fold(Rational::zero(), |acc, a| {
        match (a.tail == v, a.head == v) {
            (true, _) => acc + &a.weight,
            (_, true) => acc - &a.weight,
            _ => acc,
        }
    })
}

/// `r+(D)`: the sum of the positive imbalances.
pub fn r_plus(d: &WeightedDigraph) -> Rational {
    imbalances(d).into_iter().filter(|r| r.is_positive()).sum()
}

/// `r+(D)` via the other formula, half the total absolute imbalance.
pub fn r_plus_half_abs(d: &WeightedDigraph) -> Rational {
    imbalances(d).iter().map(|r| r.abs()).sum::<Rational>() / int(2)
}

/// `θ(D) = r+(D) / w(D)`. Zero-weight digraphs are an error, not `0/0`.
pub fn theta(d: &WeightedDigraph) -> Result<Rational> {
    let w = d.total_weight();
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    Ok(r_plus(d) / w)
}

/// The tight lower-bound coefficient `l(θ)`:
/// `1/4 + θ²/(4(1-2θ))` below one third, `θ` from one third on.
pub fn l_of_theta(t: &Rational) -> Result<Rational> {
    if t.is_negative() || *t > int(1) {
        return Err(Error::InvalidParameter(format!(
            "theta must lie in [0, 1], got {t}"
        )));
    }
    if *t < ratio(1, 3) {
        Ok(ratio(1, 4) + t * t / (int(4) * (int(1) - int(2) * t)))
    } else {
        Ok(t.clone())
    }
}

/// The underlying undirected graph, encoded as a digraph with one arc `u -> v`
/// (`u < v`) per adjacent pair whose weight is the sum over both directions.
/// Total weight is preserved.
pub fn underlying_graph(d: &WeightedDigraph) -> WeightedDigraph {
    let mut edges: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for a in d.arcs() {
        let key = (a.tail.min(a.head), a.tail.max(a.head));
        *edges.entry(key).or_insert_with(Rational::zero) += &a.weight;
    }
    let arcs = edges
        .into_iter()
        .map(|((u, v), w)| Arc::new(u, v, w))
        .collect();
    WeightedDigraph::new(d.n(), arcs).expect("underlying graph of a valid digraph is valid")
}

/// Largest out-degree and in-degree, counting parallel arcs.
pub fn max_semidegrees(d: &WeightedDigraph) -> (usize, usize) {
    let mut out = vec![0usize; d.n()];
    let mut inc = vec![0usize; d.n()];
    for a in d.arcs() {
        out[a.tail] += 1;
        inc[a.head] += 1;
    }
    (
        out.into_iter().max().unwrap_or(0),
        inc.into_iter().max().unwrap_or(0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Dicut;

    fn abc() -> WeightedDigraph {
        // a -> b (3), b -> c (1)
        WeightedDigraph::from_triples(3, [(0, 1, int(3)), (1, 2, int(1))]).unwrap()
    }

    #[test]
    fn weights_and_imbalances() {
        assert_eq!(total_weight(&WeightedDigraph::empty(4)), int(0));
        assert_eq!(total_weight(&abc()), int(4));
        let d = abc();
        assert_eq!(imbalance(&d, 0), int(3));
        assert_eq!(imbalance(&d, 1), int(-2));
        assert_eq!(imbalance(&d, 2), int(-1));
        assert_eq!(imbalances(&d).into_iter().sum::<Rational>(), int(0));
        assert_eq!(r_plus(&d), int(3));
        assert_eq!(r_plus_half_abs(&d), int(3));
    }

    #[test]
    fn balanced_triangle() {
        let t = WeightedDigraph::unit(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(r_plus(&t), int(0));
        assert_eq!(theta(&t).unwrap(), int(0));
        let single = WeightedDigraph::from_triples(2, [(0, 1, int(5))]).unwrap();
        assert_eq!(theta(&single).unwrap(), int(1));
        assert_eq!(theta(&WeightedDigraph::empty(3)), Err(Error::ZeroWeight));
        let zero_arc = WeightedDigraph::from_triples(2, [(0, 1, int(0))]).unwrap();
        assert_eq!(theta(&zero_arc), Err(Error::ZeroWeight));
    }

    #[test]
    fn l_of_theta_values() {
        assert_eq!(l_of_theta(&int(0)).unwrap(), ratio(1, 4));
        assert_eq!(l_of_theta(&ratio(1, 3)).unwrap(), ratio(1, 3));
        // first branch evaluated at 1/3 agrees
        let t = ratio(1, 3);
        assert_eq!(
            ratio(1, 4) + &t * &t / (int(4) * (int(1) - int(2) * &t)),
            ratio(1, 3)
        );
        assert_eq!(l_of_theta(&ratio(1, 4)).unwrap(), ratio(9, 32));
        assert_eq!(l_of_theta(&int(1)).unwrap(), int(1));
        assert!(l_of_theta(&ratio(-1, 5)).is_err());
        assert!(l_of_theta(&ratio(6, 5)).is_err());
    }

    #[test]
    fn underlying_graph_merges_directions_and_parallels() {
        let d = WeightedDigraph::from_triples(2, [(0, 1, int(2)), (1, 0, int(3))]).unwrap();
        let g = underlying_graph(&d);
        assert_eq!(g.m(), 1);
        assert_eq!(g.arcs()[0].weight, int(5));

        let d = WeightedDigraph::from_triples(2, [(1, 0, int(3))]).unwrap();
        let g = underlying_graph(&d);
        assert_eq!((g.arcs()[0].tail, g.arcs()[0].head), (0, 1));
        assert_eq!(g.arcs()[0].weight, int(3));

        let d = WeightedDigraph::unit(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(underlying_graph(&d).arcs()[0].weight, int(2));
    }

    #[test]
    fn cut_difference_identity() {
        // sum of r over X equals w(X, Y) - w(Y, X)
        let d = WeightedDigraph::from_triples(
            4,
            [
                (0, 1, int(2)),
                (1, 2, ratio(1, 2)),
                (2, 0, int(1)),
                (3, 1, int(4)),
                (2, 3, int(1)),
            ],
        )
        .unwrap();
        let r = imbalances(&d);
        for mask in 0u64..16 {
            let x = Dicut::from_mask(mask, 4);
            let lhs: Rational = x.x_side().iter().map(|&v| r[v].clone()).sum();
            let rhs = d.dicut_weight(&x) - d.dicut_weight(&x.complement(4));
            assert_eq!(lhs, rhs);
        }
    }
}
