//! Deterministic instance families and seeded random corpora.
//!
//! Random generators draw from `ChaCha8Rng::seed_from_u64(seed)`, which yields
//! the same stream on every platform.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Arc, WeightedDigraph};
use crate::rational::{int, ratio, Rational};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// The `k`-regular tournament on `2k + 1` vertices: `i -> i + j (mod 2k+1)` for
/// `j = 1..=k`, unit weights.
pub fn regular_tournament(k: usize) -> Result<WeightedDigraph> {
    if k == 0 {
        return Err(invalid("regular tournament needs k >= 1"));
    }
    let n = 2 * k + 1;
    WeightedDigraph::unit(
        n,
        (0..n).flat_map(|i| (1..=k).map(move |j| (i, (i + j) % n))),
    )
}

/// Cross-arc weight `Q = θ(1 - 1/k)/(1 - θ)` that makes [`two_tournament`] have
/// imbalance ratio exactly `θ`.
pub fn two_tournament_q(k: usize, theta: &Rational) -> Rational {
    let k = int(k as i64);
    theta * (Rational::one() - Rational::one() / &k) / (Rational::one() - theta)
}

/// Two disjoint regular tournaments `A` (ids `0..k`) and `B` (ids `k..2k`) of odd
/// order `k`, unit internal weights, plus all `k²` arcs `A -> B` of weight `Q`.
pub fn two_tournament(k: usize, theta: &Rational) -> Result<WeightedDigraph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid(format!(
            "two-tournament needs odd k >= 3 (regular tournaments have odd order), got {k}"
        )));
    }
    if *theta < Rational::from_integer(0.into()) || *theta >= Rational::one() {
        return Err(invalid(format!("theta must lie in [0, 1), got {theta}")));
    }
    let q = two_tournament_q(k, theta);
    let half = k / 2;
    let mut arcs = Vec::with_capacity(k * (k - 1) + k * k);
    for offset in [0, k] {
        for i in 0..k {
            for j in 1..=half {
                arcs.push(Arc::new(offset + i, offset + (i + j) % k, Rational::one()));
            }
        }
    }
    for a in 0..k {
        for b in k..2 * k {
            arcs.push(Arc::new(a, b, q.clone()));
        }
    }
    WeightedDigraph::new(2 * k, arcs)
}

/// Continuous maximum of `g(x, y) = Qxy + x(k-x)/2 + y(k-y)/2` over
/// `0 <= x, y <= k`: `k²/(4(1-Q))` for `Q <= 1/2`, else `Qk²`. An upper bound
/// on the maximum dicut of [`two_tournament`] with cross weight `Q`.
pub fn mac_upper_two_tournament(k: usize, q: &Rational) -> Result<Rational> {
    if *q <= int(0) || *q >= int(1) {
        return Err(invalid(format!("Q must lie in (0, 1), got {q}")));
    }
    let k2 = int((k * k) as i64);
    Ok(if *q <= ratio(1, 2) {
        k2 / (int(4) * (Rational::one() - q))
    } else {
        q * k2
    })
}

/// `⌊√n⌋`.
fn isqrt(n: usize) -> usize {
    let mut q = (n as f64).sqrt() as usize;
    while (q + 1) * (q + 1) <= n {
        q += 1;
    }
    while q * q > n {
        q -= 1;
    }
    q
}

/// Arc count of [`staircase`]`(n)`: `nq²/2 - nq/2 - q³/6 + q/6` with `q = ⌊√n⌋`.
pub fn staircase_arc_count(n: usize) -> usize {
    let q = isqrt(n);
    (3 * n * q * q + q - 3 * n * q - q * q * q) / 6
}

/// The staircase multigraph on `n >= 4` vertices.
///
/// With `q = ⌊√n⌋`, for each `i` take the forward transitive tournament on the
/// cyclic window `v_i, …, v_{i+q-1}` (indices mod `n`), keep only arcs from a
/// smaller to a larger index, and keep parallel copies. Arcs are listed sorted
/// by `(tail, head)`.
pub fn staircase(n: usize) -> Result<WeightedDigraph> {
    if n < 4 {
        return Err(invalid(format!("staircase needs n >= 4, got {n}")));
    }
    let q = isqrt(n);
    let mut pairs = Vec::new();
    for i in 0..n {
        for a in 0..q {
            for b in a + 1..q {
                let (t, h) = ((i + a) % n, (i + b) % n);
                if t < h {
                    pairs.push((t, h));
                }
            }
        }
    }
    pairs.sort_unstable();
    let d = WeightedDigraph::unit(n, pairs)?;
    debug_assert_eq!(d.m(), staircase_arc_count(n));
    Ok(d)
}

/// Exactly `m >= 1` arcs: the smallest staircase with at least `m` arcs, minus
/// its last arcs in `(tail, head)` order (parallel copies removed last-first).
pub fn staircase_trimmed(m: usize) -> Result<WeightedDigraph> {
    if m == 0 {
        return Err(invalid("trimmed staircase needs m >= 1"));
    }
    let mut n = 4;
    while staircase_arc_count(n) < m {
        n += 1;
    }
    let full = staircase(n)?;
    WeightedDigraph::new(n, full.arcs()[..m].to_vec())
}

/// The extremal acyclic digraphs for `ν = 3..=8` levels whose maximum dicut is
/// exactly `c_ν` times their weight. Vertex `s_i` has id `i - 1`; heavy arcs
/// weigh 2.
pub fn appendix_extremal(nu: usize) -> Result<WeightedDigraph> {
    let path = |len: usize| (1..len).map(|i| (i, i + 1)).collect::<Vec<_>>();
    type Pairs = Vec<(usize, usize)>;
    let (light, heavy): (Pairs, Pairs) = match nu {
        3 => (path(3), vec![]),
        4 => ([path(4), vec![(1, 3)]].concat(), vec![]),
        5 => ([path(5), vec![(2, 4)]].concat(), vec![]),
        6 => (
            [
                (2..6).map(|i| (i, i + 1)).collect(),
                vec![(1, 3), (2, 4), (2, 5), (3, 5)],
            ]
            .concat(),
            vec![(1, 2)],
        ),
        7 => ([path(7), vec![(2, 4), (4, 6)]].concat(), vec![]),
        8 => (
            vec![(2, 5), (3, 5), (4, 6), (4, 7)],
            [path(8), vec![(2, 4), (5, 7)]].concat(),
        ),
        _ => {
            return Err(invalid(format!(
                "extremal instances exist for nu in 3..=8, got {nu}"
            )))
        }
    };
    let arcs = heavy
        .into_iter()
        .map(|p| (p, int(2)))
        .chain(light.into_iter().map(|p| (p, int(1))))
        .map(|((s, t), w)| Arc::new(s - 1, t - 1, w));
    let mut arcs: Vec<Arc> = arcs.collect();
    arcs.sort_by_key(|a| (a.tail, a.head));
    WeightedDigraph::new(nu, arcs)
}

/// All `ν(ν-1)/2` arcs `i -> j`, `i < j`, unit weights.
pub fn complete_transitive_dag(nu: usize) -> Result<WeightedDigraph> {
    if nu < 2 {
        return Err(invalid(format!("transitive DAG needs nu >= 2, got {nu}")));
    }
    WeightedDigraph::unit(nu, (0..nu).flat_map(|i| (i + 1..nu).map(move |j| (i, j))))
}

/// Arc weights drawn as `U{lo..=hi} / denom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightRange {
    pub lo: u64,
    pub hi: u64,
    pub denom: u64,
}

impl WeightRange {
    pub const UNIT: WeightRange = WeightRange {
        lo: 1,
        hi: 1,
        denom: 1,
    };

    pub fn integers(lo: u64, hi: u64) -> Self {
        WeightRange { lo, hi, denom: 1 }
    }

    fn check(&self) -> Result<()> {
        if self.denom == 0 || self.lo > self.hi || self.hi > i64::MAX as u64 {
            return Err(invalid(format!("bad weight range {self:?}")));
        }
        Ok(())
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> Rational {
        ratio(rng.gen_range(self.lo..=self.hi) as i64, self.denom as i64)
    }
}

fn check_density(density: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&density) {
        return Err(invalid(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    Ok(())
}

/// Random acyclic digraph: a random vertex order, each forward pair an arc with
/// probability `density`.
pub fn random_dag(
    n: usize,
    density: f64,
    weights: WeightRange,
    seed: u64,
) -> Result<WeightedDigraph> {
    check_density(density)?;
    weights.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                arcs.push(Arc::new(order[i], order[j], weights.draw(&mut rng)));
            }
        }
    }
    WeightedDigraph::new(n, arcs)
}

/// Random digraph: each ordered pair `(u, v)`, `u != v`, an arc with
/// probability `density`.
pub fn random_digraph(
    n: usize,
    density: f64,
    weights: WeightRange,
    seed: u64,
) -> Result<WeightedDigraph> {
    check_density(density)?;
    weights.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push(Arc::new(u, v, weights.draw(&mut rng)));
            }
        }
    }
    WeightedDigraph::new(n, arcs)
}

/// Random digraph whose cycles all have length at most `l`.
///
/// A random vertex order is cut into `⌈n/l⌉` consecutive groups of at most `l`
/// vertices. Every ordered pair inside a group is an arc with probability 1/2,
/// and every pair from an earlier to a later group is an arc with probability
/// 1/2. Cycles therefore stay inside one group. Weights are integers in `1..=3`.
pub fn random_bounded_cycle(n: usize, l: usize, seed: u64) -> Result<WeightedDigraph> {
    if l == 0 {
        return Err(invalid("cycle bound l must be >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let group = |pos: usize| pos / l;
    let weights = WeightRange::integers(1, 3);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let forward = group(i) < group(j);
            let inside = group(i) == group(j) && i != j;
            if (forward || inside) && rng.gen_bool(0.5) {
                arcs.push(Arc::new(order[i], order[j], weights.draw(&mut rng)));
            }
        }
    }
    WeightedDigraph::new(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{imbalances, longest_path, r_plus, theta};

    #[test]
    fn tournaments() {
        let t1 = regular_tournament(1).unwrap();
        assert_eq!(
            t1,
            WeightedDigraph::unit(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
        );
        let t2 = regular_tournament(2).unwrap();
        assert_eq!((t2.n(), t2.m()), (5, 10));
        assert!(imbalances(&t2).iter().all(|r| *r == int(0)));
        assert!(regular_tournament(0).is_err());
    }

    #[test]
    fn two_tournament_identities() {
        for k in [3usize, 5, 7] {
            for t in [
                ratio(0, 1),
                ratio(1, 10),
                ratio(1, 4),
                ratio(2, 5),
                ratio(1, 2),
            ] {
                let d = two_tournament(k, &t).unwrap();
                let q = two_tournament_q(k, &t);
                let kk = int((k * k) as i64);
                assert_eq!(d.total_weight(), int((k * k - k) as i64) + &q * &kk);
                assert_eq!(r_plus(&d), &q * &kk);
                if t > int(0) {
                    assert_eq!(theta(&d).unwrap(), t);
                }
            }
        }
        assert_eq!(two_tournament_q(3, &ratio(1, 4)), ratio(2, 9));
        assert!(two_tournament(4, &ratio(1, 4)).is_err());
        assert!(two_tournament(3, &int(1)).is_err());
    }

    #[test]
    fn continuous_maximum() {
        assert_eq!(
            mac_upper_two_tournament(4, &ratio(1, 4)).unwrap(),
            ratio(16, 3)
        );
        // both branches agree at Q = 1/2
        assert_eq!(mac_upper_two_tournament(6, &ratio(1, 2)).unwrap(), int(18));
        assert_eq!(ratio(1, 2) * int(36), int(18));
        assert!(mac_upper_two_tournament(3, &int(1)).is_err());
        assert!(mac_upper_two_tournament(3, &int(0)).is_err());
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(staircase(4).unwrap().m(), 3);
        assert_eq!(staircase(9).unwrap().m(), 23);
        assert_eq!(staircase_arc_count(8), 7);
        for n in 4..=400 {
            let q = isqrt(n) as i64;
            let n_i = n as i64;
            let exact =
                ratio(n_i * q * q, 2) - ratio(n_i * q, 2) - ratio(q * q * q, 6) + ratio(q, 6);
            assert_eq!(int(staircase(n).unwrap().m() as i64), exact, "n = {n}");
        }
        for n in 4..=30 {
            assert_eq!(longest_path(&staircase(n).unwrap()).unwrap().len(), n);
        }
        assert!(staircase(3).is_err());
    }

    #[test]
    fn trimmed_staircase() {
        assert_eq!(staircase_trimmed(3).unwrap(), staircase(4).unwrap());
        assert_eq!(staircase_trimmed(23).unwrap(), staircase(9).unwrap());
        let t = staircase_trimmed(20).unwrap();
        assert_eq!((t.n(), t.m()), (9, 20));
        assert_eq!(t.arcs(), &staircase(9).unwrap().arcs()[..20]);
    }

    #[test]
    fn appendix_instances() {
        let expected = [
            (3, 2, 2),
            (4, 4, 4),
            (5, 5, 5),
            (6, 9, 10),
            (7, 8, 8),
            (8, 13, 22),
        ];
        for (nu, m, w) in expected {
            let d = appendix_extremal(nu).unwrap();
            assert_eq!(
                (d.n(), d.m(), d.total_weight()),
                (nu, m, int(w)),
                "nu = {nu}"
            );
            assert_eq!(longest_path(&d).unwrap().len(), nu);
        }
        assert!(appendix_extremal(2).is_err());
        assert!(appendix_extremal(9).is_err());
    }

    #[test]
    fn transitive_dags() {
        assert_eq!(complete_transitive_dag(2).unwrap().m(), 1);
        assert_eq!(complete_transitive_dag(4).unwrap().m(), 6);
        assert_eq!(
            longest_path(&complete_transitive_dag(7).unwrap())
                .unwrap()
                .len(),
            7
        );
    }

    #[test]
    fn random_generators_are_deterministic() {
        let w = WeightRange {
            lo: 1,
            hi: 9,
            denom: 4,
        };
        assert_eq!(
            random_dag(10, 0.4, w, 3).unwrap(),
            random_dag(10, 0.4, w, 3).unwrap()
        );
        assert_eq!(
            random_digraph(10, 0.4, w, 3).unwrap(),
            random_digraph(10, 0.4, w, 3).unwrap()
        );
        assert_eq!(
            random_bounded_cycle(12, 3, 5).unwrap(),
            random_bounded_cycle(12, 3, 5).unwrap()
        );
        assert_ne!(
            random_dag(10, 0.4, w, 3).unwrap(),
            random_dag(10, 0.4, w, 4).unwrap()
        );
        assert_eq!(random_dag(10, 0.0, w, 1).unwrap().m(), 0);
        assert_eq!(random_digraph(10, 0.0, w, 1).unwrap().m(), 0);
        assert!(crate::measures::is_acyclic(
            &random_dag(15, 0.7, w, 9).unwrap()
        ));
        assert!(random_dag(3, 1.5, w, 0).is_err());
        assert!(random_dag(
            3,
            0.5,
            WeightRange {
                lo: 2,
                hi: 1,
                denom: 1
            },
            0
        )
        .is_err());
        assert!(random_bounded_cycle(3, 0, 0).is_err());
    }

    /// Longest simple cycle by exhaustive depth-first search.
    fn circumference(d: &WeightedDigraph) -> usize {
        let n = d.n();
        let mut out = vec![Vec::new(); n];
        for a in d.arcs() {
            out[a.tail].push(a.head);
        }
        fn dfs(
            out: &[Vec<usize>],
            start: usize,
            v: usize,
            on: &mut Vec<bool>,
            len: usize,
            best: &mut usize,
        ) {
            for &u in &out[v] {
                if u == start {
                    *best = (*best).max(len);
                } else if u > start && !on[u] {
                    on[u] = true;
                    dfs(out, start, u, on, len + 1, best);
                    on[u] = false;
                }
            }
        }
        let mut best = 0;
        for s in 0..n {
            let mut on = vec![false; n];
            on[s] = true;
            dfs(&out, s, s, &mut on, 1, &mut best);
        }
        best
    }

    #[test]
    fn bounded_cycles_respect_the_bound() {
        for seed in 0..20 {
            let d = random_bounded_cycle(12, 3, seed).unwrap();
            assert!(circumference(&d) <= 3, "seed {seed}");
        }
        assert_eq!(circumference(&regular_tournament(2).unwrap()), 5);
    }
}
