//! Weighted directed multigraphs and directed cuts.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// One weighted arc `tail -> head`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub weight: Rational,
}

impl Arc {
    pub fn new(tail: usize, head: usize, weight: Rational) -> Self {
        Arc { tail, head, weight }
    }
}

/// A weighted directed multigraph on vertices `0..n`.
///
/// Arcs are stored as an ordered list so that parallel arcs and zero-weight arcs
/// stay distinct, and so that iteration order is deterministic. Instances are
/// validated on construction and immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDigraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl WeightedDigraph {
    /// Validates and builds an instance. Rejects self-loops, negative weights and
    /// out-of-range endpoints, each with its own error kind.
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        for (index, arc) in arcs.iter().enumerate() {
            for vertex in [arc.tail, arc.head] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { index, vertex, n });
                }
            }
            if arc.tail == arc.head {
                return Err(Error::SelfLoop {
                    index,
                    vertex: arc.tail,
                });
            }
            if arc.weight.is_negative() {
                return Err(Error::NegativeWeight {
                    index,
                    weight: format_rational(&arc.weight),
                });
            }
        }
        Ok(WeightedDigraph { n, arcs })
    }

    /// Convenience constructor from `(tail, head, weight)` triples.
    pub fn from_triples<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let arcs = triples
            .into_iter()
            .map(|(t, h, w)| Arc::new(t, h, w))
            .collect();
        Self::new(n, arcs)
    }

    /// Unit-weight instance from `(tail, head)` pairs.
    pub fn unit<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_triples(
            n,
            pairs
                .into_iter()
                .map(|(t, h)| (t, h, Rational::from_integer(1.into()))),
        )
    }

    pub fn empty(n: usize) -> Self {
        WeightedDigraph {
            n,
            arcs: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs, counting parallel arcs separately.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Sum of all arc weights.
    pub fn total_weight(&self) -> Rational {
        self.arcs.iter().map(|a| &a.weight).sum()
    }

    /// Weight of the dicut `(X, V \ X)`: the arcs with tail in `X` and head outside.
    ///
    /// Panics if the cut mentions a vertex outside `0..n`; use [`Dicut::check`]
    /// first for untrusted input.
    pub fn dicut_weight(&self, cut: &Dicut) -> Rational {
        let side = cut.indicator(self.n).expect("dicut out of range");
        self.cut_weight_indicator(&side)
    }

    /// Dicut weight for a membership vector (`side[v]` is true for `v` in `X`).
    pub fn cut_weight_indicator(&self, side: &[bool]) -> Rational {
        self.arcs
            .iter()
            .filter(|a| side[a.tail] && !side[a.head])
            .map(|a| &a.weight)
            .sum()
    }

    /// Same instance with every weight multiplied by `c >= 0`.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(
            self.n,
            self.arcs
                .iter()
                .map(|a| Arc::new(a.tail, a.head, &a.weight * c))
                .collect(),
        )
    }

    /// Out-neighbour lists (arc indices), one per vertex.
    pub fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for (i, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(i);
        }
        out
    }

    /// In-neighbour lists (arc indices), one per vertex.
    pub fn in_arcs(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, a) in self.arcs.iter().enumerate() {
            inc[a.head].push(i);
        }
        inc
    }

    /// True if every arc weight is at least one (the class of digraphs whose
    /// additive guarantees are stated in absolute terms).
    pub fn check_weights_at_least_one(&self) -> Result<()> {
        let one = Rational::from_integer(1.into());
        match self.arcs.iter().position(|a| a.weight < one) {
            Some(index) => Err(Error::WeightBelowOne {
                index,
                weight: format_rational(&self.arcs[index].weight),
            }),
            None => Ok(()),
        }
    }

    /// Sub-digraph with all arcs of `self` whose endpoints both lie
    /// in `keep`, relabelled densely in increasing id order. Returns the map from
    /// new ids to old ids.
    pub fn induced(&self, keep: &[usize]) -> (WeightedDigraph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|a| new_id[a.tail] != usize::MAX && new_id[a.head] != usize::MAX)
            .map(|a| Arc::new(new_id[a.tail], new_id[a.head], a.weight.clone()))
            .collect();
        (
            WeightedDigraph {
                n: old_ids.len(),
                arcs,
            },
            old_ids,
        )
    }
}

/// A directed cut, given by its source side `X`. The sink side is the
/// complement within the digraph it is applied to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Dicut {
    x_side: Vec<usize>,
}

impl Dicut {
    pub fn new<I: IntoIterator<Item = usize>>(x_side: I) -> Self {
        let set: BTreeSet<usize> = x_side.into_iter().collect();
        Dicut {
            x_side: set.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Dicut::default()
    }

    /// Cut whose `X` is the set bits of `mask` (bit `i` is vertex `i`).
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Dicut {
            x_side: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn from_indicator(side: &[bool]) -> Self {
        Dicut {
            x_side: side
                .iter()
                .enumerate()
                .filter_map(|(v, &inside)| inside.then_some(v))
                .collect(),
        }
    }

    /// Sorted vertex ids of `X`.
    pub fn x_side(&self) -> &[usize] {
        &self.x_side
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x_side.binary_search(&v).is_ok()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.x_side.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::CutOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    pub fn indicator(&self, n: usize) -> Result<Vec<bool>> {
        self.check(n)?;
        let mut side = vec![false; n];
        for &v in &self.x_side {
            side[v] = true;
        }
        Ok(side)
    }

    /// Bitmask form; only meaningful for `n <= 64`.
    pub fn mask(&self) -> u64 {
        self.x_side.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    /// The cut `(V \ X, X)`.
    pub fn complement(&self, n: usize) -> Dicut {
        Dicut {
            x_side: (0..n).filter(|v| !self.contains(*v)).collect(),
        }
    }

    /// Pulls a cut on a quotient digraph back through a vertex map
    /// (`map[v]` is the quotient vertex of original vertex `v`).
    pub fn pull_back(&self, map: &[usize]) -> Dicut {
        Dicut {
            x_side: (0..map.len()).filter(|&v| self.contains(map[v])).collect(),
        }
    }
}
