use crate::error::{Error, Result};
use crate::graph::WeightedDigraph;

use super::structure::level_decomposition;

/// Components at or below this many vertices get an exact chromatic number.
pub const EXACT_COLORING_CAP: usize = 20;

/// A proper vertex coloring of the underlying graph: no arc, in either
/// direction, joins two vertices of the same color. Colors are `0..colors_used`
/// and every color is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColoring {
    pub color_of: Vec<usize>,
    pub colors_used: usize,
}

impl ProperColoring {
    /// Validates a raw assignment against `d` and compacts the color ids.
    pub fn new(d: &WeightedDigraph, color_of: Vec<usize>) -> Result<Self> {
        if color_of.len() != d.n() {
            return Err(Error::InvalidParameter(format!(
                "coloring has {} entries for {} vertices",
                color_of.len(),
                d.n()
            )));
        }
        for a in d.arcs() {
            if color_of[a.tail] == color_of[a.head] {
                return Err(Error::ImproperColoring {
                    tail: a.tail,
                    head: a.head,
                    color: color_of[a.tail],
                });
            }
        }
        Ok(Self::compact(color_of))
    }

    fn compact(color_of: Vec<usize>) -> Self {
        let mut ids: Vec<usize> = color_of.clone();
        ids.sort_unstable();
        ids.dedup();
        let color_of = color_of
            .into_iter()
            .map(|c| ids.binary_search(&c).expect("present"))
            .collect();
        ProperColoring {
            color_of,
            colors_used: ids.len(),
        }
    }

    /// Vertices of each color class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.colors_used];
        for (v, &c) in self.color_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_proper_for(&self, d: &WeightedDigraph) -> bool {
        self.color_of.len() == d.n()
            && d.arcs()
                .iter()
                .all(|a| self.color_of[a.tail] != self.color_of[a.head])
    }
}

fn simple_adjacency(d: &WeightedDigraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); d.n()];
    for a in d.arcs() {
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

/// First-fit coloring in smallest-last (degeneracy) order, so a `k`-degenerate
/// underlying graph gets at most `k + 1` colors.
pub fn greedy_coloring(d: &WeightedDigraph) -> ProperColoring {
    let n = d.n();
    let adj = simple_adjacency(d);
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut taken: Vec<usize> = adj[v].iter().map(|&u| color[u]).collect();
        taken.sort_unstable();
        let mut c = 0;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        color[v] = c;
    }
    ProperColoring::compact(color)
}

/// Coloring with at most as many colors as the longest path has vertices.
///
/// Acyclic inputs are colored by source-peeling level. Otherwise a maximal
/// acyclic spanning subdigraph is grown by scanning arcs in input order and
/// keeping each arc that closes no directed cycle; its levels color the whole
/// digraph properly, because every rejected arc `u -> v` has a kept path
/// `v ~> u`.
pub fn path_coloring(d: &WeightedDigraph) -> ProperColoring {
    if let Ok(levels) = level_decomposition(d) {
        return ProperColoring::compact(levels.level_of);
    }
    let n = d.n();
    let mut kept_out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut kept = Vec::new();
    let mut seen = vec![usize::MAX; n];
    for (stamp, a) in d.arcs().iter().enumerate() {
        if reaches(&kept_out, a.head, a.tail, &mut seen, stamp) {
            continue;
        }
        kept_out[a.tail].push(a.head);
        kept.push(a.clone());
    }
    let acyclic = WeightedDigraph::new(n, kept).expect("subdigraph of a valid digraph");
    let levels = level_decomposition(&acyclic).expect("kept arcs close no cycle");
    ProperColoring::compact(levels.level_of)
}

fn reaches(out: &[Vec<usize>], from: usize, to: usize, seen: &mut [usize], stamp: usize) -> bool {
    let mut stack = vec![from];
    seen[from] = stamp;
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for &w in &out[v] {
            if seen[w] != stamp {
                seen[w] = stamp;
                stack.push(w);
            }
        }
    }
    false
}

/// Minimum proper coloring by backtracking, for at most
/// [`EXACT_COLORING_CAP`] vertices.
pub fn exact_coloring(d: &WeightedDigraph) -> Result<ProperColoring> {
    let n = d.n();
    if n > EXACT_COLORING_CAP {
        return Err(Error::TooLarge {
            n,
            cap: EXACT_COLORING_CAP,
        });
    }
    let greedy = greedy_coloring(d);
    if n == 0 {
        return Ok(greedy);
    }
    let adj = simple_adjacency(d);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut best = greedy;
    // try to beat the incumbent with one fewer color until that fails
    while best.colors_used > 1 {
        let k = best.colors_used - 1;
        let mut color = vec![usize::MAX; n];
        if color_with(&adj, &order, 0, k, 0, &mut color) {
            best = ProperColoring::compact(color);
        } else {
            break;
        }
    }
    Ok(best)
}

fn color_with(
    adj: &[Vec<usize>],
    order: &[usize],
    at: usize,
    k: usize,
    used: usize,
    color: &mut [usize],
) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    // symmetry breaking: a fresh color is only ever the next unused one
    for c in 0..k.min(used + 1) {
        if adj[v].iter().all(|&u| color[u] != c) {
            color[v] = c;
            if color_with(adj, order, at + 1, k, used.max(c + 1), color) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::longest_path;

    #[test]
    fn bipartite_dag_gets_two_level_colors() {
        let d = WeightedDigraph::unit(4, [(0, 2), (0, 3), (1, 3)]).unwrap();
        let c = path_coloring(&d);
        assert_eq!(c.colors_used, 2);
        assert!(c.is_proper_for(&d));
    }

    #[test]
    fn transitive_dag_needs_all_levels() {
        let nu = 6;
        let pairs: Vec<_> = (0..nu)
            .flat_map(|i| (i + 1..nu).map(move |j| (i, j)))
            .collect();
        let d = WeightedDigraph::unit(nu, pairs).unwrap();
        let c = path_coloring(&d);
        assert_eq!(c.colors_used, nu);
        assert_eq!(longest_path(&d).unwrap().len(), nu);
        assert_eq!(exact_coloring(&d).unwrap().colors_used, nu);
    }

    #[test]
    fn triangle_path_coloring() {
        let d = WeightedDigraph::unit(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = path_coloring(&d);
        assert!(c.is_proper_for(&d));
        assert!(c.colors_used <= 3);
        assert_eq!(exact_coloring(&d).unwrap().colors_used, 3);
    }

    #[test]
    fn improper_coloring_rejected() {
        let d = WeightedDigraph::unit(2, [(0, 1)]).unwrap();
        assert!(matches!(
            ProperColoring::new(&d, vec![4, 4]),
            Err(Error::ImproperColoring { color: 4, .. })
        ));
        let ok = ProperColoring::new(&d, vec![7, 3]).unwrap();
        assert_eq!(ok.color_of, vec![1, 0]);
        assert_eq!(ok.colors_used, 2);
    }

    #[test]
    fn exact_coloring_of_odd_cycle_and_bipartite() {
        let c5 = WeightedDigraph::unit(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(exact_coloring(&c5).unwrap().colors_used, 3);
        let c6 = WeightedDigraph::unit(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(exact_coloring(&c6).unwrap().colors_used, 2);
        assert!(matches!(
            exact_coloring(&WeightedDigraph::empty(21)),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(
            exact_coloring(&WeightedDigraph::empty(3))
                .unwrap()
                .colors_used,
            1
        );
    }
}
