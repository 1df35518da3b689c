use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Arc, WeightedDigraph};
use crate::rational::Rational;

/// Quotient of a digraph over its strong components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Acyclic quotient; parallel quotient arcs are merged by summing weights.
    pub quotient: WeightedDigraph,
    /// `component_of[v]` is the quotient vertex containing `v`. Components are
    /// numbered in topological order of the quotient.
    pub component_of: Vec<usize>,
    /// Total weight of arcs inside strong components.
    pub internal_weight: Rational,
}

impl Condensation {
    /// Original vertices of each component, in increasing id order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.quotient.n()];
        for (v, &c) in self.component_of.iter().enumerate() {
            members[c].push(v);
        }
        members
    }
}

/// Strong components by Tarjan's algorithm (iterative). Returns the component
/// index of every vertex, with components numbered so that every arc between
/// different components goes from a smaller to a larger index.
pub fn strong_components(d: &WeightedDigraph) -> (Vec<usize>, usize) {
    let n = d.n();
    let out: Vec<Vec<usize>> = d
        .out_arcs()
        .into_iter()
        .map(|arcs| arcs.into_iter().map(|i| d.arcs()[i].head).collect())
        .collect();

    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut found = 0usize;
    let mut next_index = 0usize;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its out-list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < out[v].len() {
                let w = out[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = found;
                        if w == v {
                            break;
                        }
                    }
                    found += 1;
                }
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    for c in comp.iter_mut() {
        *c = found - 1 - *c;
    }
    (comp, found)
}

/// Contracts every strong component to a vertex.
pub fn condensation(d: &WeightedDigraph) -> Condensation {
    let (component_of, count) = strong_components(d);
    let mut merged: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut internal_weight = Rational::zero();
    for a in d.arcs() {
        let (cu, cv) = (component_of[a.tail], component_of[a.head]);
        if cu == cv {
            internal_weight += &a.weight;
        } else {
            *merged.entry((cu, cv)).or_insert_with(Rational::zero) += &a.weight;
        }
    }
    let arcs = merged
        .into_iter()
        .map(|((u, v), w)| Arc::new(u, v, w))
        .collect();
    Condensation {
        quotient: WeightedDigraph::new(count, arcs).expect("quotient is a valid digraph"),
        component_of,
        internal_weight,
    }
}

/// Partition of an acyclic digraph's vertices by repeated source removal:
/// level 0 holds the sources, level 1 the sources once level 0 is gone, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub levels: Vec<Vec<usize>>,
    pub level_of: Vec<usize>,
}

impl LevelDecomposition {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// Source-peeling levels (Kahn layering). Fails on cyclic input.
pub fn level_decomposition(d: &WeightedDigraph) -> Result<LevelDecomposition> {
    let n = d.n();
    let out = d.out_arcs();
    let mut indegree = vec![0usize; n];
    for a in d.arcs() {
        indegree[a.head] += 1;
    }
    let mut level_of = vec![usize::MAX; n];
    let mut levels = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut placed = 0;
    while !current.is_empty() {
        let depth = levels.len();
        let mut next = Vec::new();
        for &v in &current {
            level_of[v] = depth;
            for &i in &out[v] {
                let h = d.arcs()[i].head;
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    next.push(h);
                }
            }
        }
        placed += current.len();
        next.sort_unstable();
        levels.push(std::mem::replace(&mut current, next));
    }
    if placed < n {
        return Err(Error::Cyclic);
    }
    Ok(LevelDecomposition { levels, level_of })
}

pub fn is_acyclic(d: &WeightedDigraph) -> bool {
    level_decomposition(d).is_ok()
}

/// Contracts each source-peeling level `S_i` to a single vertex `s_i`, giving a
/// DAG on as many vertices as there are levels whose arc `s_i -> s_j` carries
/// `w(S_i, S_j)`. Also returns the level of every original vertex.
pub fn contract_levels(d: &WeightedDigraph) -> Result<(WeightedDigraph, Vec<usize>)> {
    let levels = level_decomposition(d)?;
    let mut merged: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for a in d.arcs() {
        let key = (levels.level_of[a.tail], levels.level_of[a.head]);
        *merged.entry(key).or_insert_with(Rational::zero) += &a.weight;
    }
    let arcs = merged
        .into_iter()
        .map(|((u, v), w)| Arc::new(u, v, w))
        .collect();
    let contracted = WeightedDigraph::new(levels.len(), arcs)?;
    Ok((contracted, levels.level_of))
}

/// A directed path with the largest number of vertices, found by dynamic
/// programming. Starts at the smallest-id vertex that begins a longest path and
/// always continues to the smallest-id admissible successor.
pub fn longest_path(d: &WeightedDigraph) -> Result<Vec<usize>> {
    let levels = level_decomposition(d)?;
    let n = d.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let out = d.out_arcs();
    // reach[v]: vertices on a longest path starting at v
    let mut reach = vec![1usize; n];
    for level in levels.levels.iter().rev() {
        for &v in level {
            for &i in &out[v] {
                let h = d.arcs()[i].head;
                reach[v] = reach[v].max(reach[h] + 1);
            }
        }
    }
    let best = *reach.iter().max().expect("non-empty");
    let mut v = (0..n)
        .find(|&v| reach[v] == best)
        .expect("some vertex attains it");
    let mut path = vec![v];
    while reach[v] > 1 {
        v = out[v]
            .iter()
            .map(|&i| d.arcs()[i].head)
            .filter(|&h| reach[h] + 1 == reach[v])
            .min()
            .expect("a successor continues the path");
        path.push(v);
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn condensation_of_acyclic_input_is_isomorphic() {
        let d = WeightedDigraph::unit(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        let c = condensation(&d);
        assert_eq!(c.quotient.n(), 4);
        assert_eq!(c.quotient.m(), 3);
        assert_eq!(c.internal_weight, int(0));
        assert_eq!(c.quotient.total_weight(), d.total_weight());
        for a in d.arcs() {
            assert!(c.component_of[a.tail] < c.component_of[a.head]);
        }
    }

    #[test]
    fn condensation_of_triangle_with_pendant() {
        let t = WeightedDigraph::unit(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = condensation(&t);
        assert_eq!(c.quotient.n(), 1);
        assert_eq!(c.internal_weight, int(3));

        let d = WeightedDigraph::from_triples(
            4,
            [
                (0, 1, int(1)),
                (1, 2, int(1)),
                (2, 0, int(1)),
                (1, 3, int(2)),
            ],
        )
        .unwrap();
        let c = condensation(&d);
        assert_eq!(c.quotient.n(), 2);
        assert_eq!(c.quotient.m(), 1);
        assert_eq!(c.quotient.arcs()[0].weight, int(2));
        assert_eq!(c.internal_weight, int(3));
        assert_eq!(
            c.members().iter().map(Vec::len).collect::<Vec<_>>(),
            vec![3, 1]
        );
    }

    #[test]
    fn condensation_merges_parallel_quotient_arcs() {
        // two 2-cycles joined by three arcs
        let d = WeightedDigraph::unit(4, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (1, 3), (0, 3)])
            .unwrap();
        let c = condensation(&d);
        assert_eq!(c.quotient.n(), 2);
        assert_eq!(c.quotient.m(), 1);
        assert_eq!(c.quotient.arcs()[0].weight, int(3));
        assert_eq!(c.internal_weight, int(4));
    }

    #[test]
    fn levels_and_paths() {
        let p = WeightedDigraph::unit(3, [(0, 1), (1, 2)]).unwrap();
        let l = level_decomposition(&p).unwrap();
        assert_eq!(l.levels, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(longest_path(&p).unwrap(), vec![0, 1, 2]);

        let single = WeightedDigraph::empty(1);
        assert_eq!(level_decomposition(&single).unwrap().len(), 1);
        assert_eq!(longest_path(&single).unwrap(), vec![0]);

        let star = WeightedDigraph::unit(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(longest_path(&star).unwrap(), vec![0, 1]);

        let arc = WeightedDigraph::unit(2, [(1, 0)]).unwrap();
        assert_eq!(longest_path(&arc).unwrap(), vec![1, 0]);

        let cyc = WeightedDigraph::unit(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(level_decomposition(&cyc), Err(Error::Cyclic));
        assert_eq!(longest_path(&cyc), Err(Error::Cyclic));
        assert_eq!(contract_levels(&cyc).unwrap_err(), Error::Cyclic);
    }

    #[test]
    fn contraction_of_disjoint_arcs() {
        let d = WeightedDigraph::from_triples(4, [(0, 1, int(2)), (2, 3, int(5))]).unwrap();
        let (c, level_of) = contract_levels(&d).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.m(), 1);
        assert_eq!(c.arcs()[0].weight, int(7));
        assert_eq!(level_of, vec![0, 1, 0, 1]);
    }

    #[test]
    fn contraction_of_path_is_unchanged() {
        let d = WeightedDigraph::unit(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (c, _) = contract_levels(&d).unwrap();
        assert_eq!(c, d);
    }
}
