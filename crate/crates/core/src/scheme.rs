//! Random cut schemes and their derandomization by conditional expectations.
//!
//! A scheme groups vertices into *units*: every vertex follows one unit's coin,
//! possibly flipped (`v` lands in `X` iff its unit shows heads and the vertex is
//! not flipped, or tails and it is). Units are grouped into independent *pools*.
//! Within a pool, a head count `h` is drawn from a small distribution and then a
//! uniformly random set of `h` units shows heads. This covers:
//!
//! * independent biased coins per vertex (one unit per pool, `h ~ Bernoulli(p)`),
//! * balanced splits of color classes or level blocks into parts of fixed size,
//! * splits whose larger half lands on a uniformly random side,
//! * a fair coin per bipartite component, with one side flipped.
//!
//! For every arc the exact probability of being cut, conditioned on any partial
//! assignment of units, is a closed-form product or hypergeometric ratio.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Dicut, WeightedDigraph};
use crate::rational::{int, Rational};

/// Law of one pool of units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoolLaw {
    /// Every unit of the pool shows heads independently with this probability.
    /// Expanded into one single-unit pool per unit.
    Coin(Rational),
    /// Exactly this many units show heads, chosen uniformly.
    ExactHeads(usize),
    /// `ceil(L/2)` or `floor(L/2)` of the `L` units show heads with probability
    /// one half each, so every unit is individually a fair coin.
    EitherHalf,
}

#[derive(Debug, Clone)]
struct Pool {
    units: Vec<usize>,
    /// (head count, probability), probabilities summing to one
    prior: Vec<(usize, Rational)>,
}

/// A random assignment of vertices to the two sides of a dicut.
#[derive(Debug, Clone)]
pub struct AssignmentScheme {
    n: usize,
    /// (pool, members as (vertex, flipped))
    units: Vec<(usize, Vec<(usize, bool)>)>,
    pools: Vec<Pool>,
    vertex_unit: Vec<Option<(usize, bool)>>,
}

impl AssignmentScheme {
    pub fn new(n: usize) -> Self {
        AssignmentScheme {
            n,
            units: Vec::new(),
            pools: Vec::new(),
            vertex_unit: vec![None; n],
        }
    }

    /// Adds units governed by `law`. Each unit is a list of `(vertex, flipped)`.
    /// Units get ids in insertion order.
    pub fn add_pool(&mut self, units: Vec<Vec<(usize, bool)>>, law: PoolLaw) -> Result<&mut Self> {
        for &(v, _) in units.iter().flatten() {
            if v >= self.n {
                return Err(Error::InvalidParameter(format!(
                    "scheme vertex {v} out of range"
                )));
            }
            if self.vertex_unit[v].is_some() {
                return Err(Error::OverlappingComponents { vertex: v });
            }
        }
        let size = units.len();
        match law {
            PoolLaw::Coin(p) => {
                if p < Rational::zero() || p > Rational::one() {
                    return Err(Error::InvalidParameter(format!(
                        "coin bias {p} outside [0, 1]"
                    )));
                }
                for members in units {
                    let prior = vec![(1, p.clone()), (0, Rational::one() - &p)];
                    self.push_pool(vec![members], prior);
                }
            }
            PoolLaw::ExactHeads(h) => {
                if h > size {
                    return Err(Error::InvalidParameter(format!(
                        "{h} heads requested from a pool of {size} units"
                    )));
                }
                self.push_pool(units, vec![(h, Rational::one())]);
            }
            PoolLaw::EitherHalf => {
                let half = Rational::new(1.into(), 2.into());
                let prior = if size.is_multiple_of(2) {
                    vec![(size / 2, Rational::one())]
                } else {
                    vec![(size / 2 + 1, half.clone()), (size / 2, half)]
                };
                self.push_pool(units, prior);
            }
        }
        Ok(self)
    }

    fn push_pool(&mut self, units: Vec<Vec<(usize, bool)>>, prior: Vec<(usize, Rational)>) {
        let pool = self.pools.len();
        let mut ids = Vec::with_capacity(units.len());
        for members in units {
            let id = self.units.len();
            for &(v, flip) in &members {
                self.vertex_unit[v] = Some((id, flip));
            }
            self.units.push((pool, members));
            ids.push(id);
        }
        let prior = prior.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        self.pools.push(Pool { units: ids, prior });
    }

    /// Vertices not yet covered each get an independent fair coin.
    pub fn cover_rest_with_fair_coins(&mut self) -> &mut Self {
        let rest: Vec<Vec<(usize, bool)>> = (0..self.n)
            .filter(|&v| self.vertex_unit[v].is_none())
            .map(|v| vec![(v, false)])
            .collect();
        self.add_pool(rest, PoolLaw::Coin(Rational::new(1.into(), 2.into())))
            .expect("fresh vertices, fair coin");
        self
    }

    /// Independent coin per vertex, `probs[v]` being the chance that `v` is in `X`.
    pub fn independent(probs: &[Rational]) -> Result<Self> {
        let mut s = AssignmentScheme::new(probs.len());
        for (v, p) in probs.iter().enumerate() {
            s.add_pool(vec![vec![(v, false)]], PoolLaw::Coin(p.clone()))?;
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    fn check_complete(&self) -> Result<()> {
        match self.vertex_unit.iter().position(Option::is_none) {
            Some(v) => Err(Error::InvalidParameter(format!(
                "vertex {v} has no unit in the scheme"
            ))),
            None => Ok(()),
        }
    }

    /// Exact expected dicut weight of the scheme on `d`.
    pub fn expected_weight(&self, d: &WeightedDigraph) -> Result<Rational> {
        self.check_complete()?;
        let state = State::fresh(self);
        Ok(d.arcs()
            .iter()
            .map(|a| &a.weight * state.cut_probability(self, a.tail, a.head))
            .sum())
    }

    /// Exact probability that the arc `u -> v` is cut.
    pub fn cut_probability(&self, u: usize, v: usize) -> Rational {
        State::fresh(self).cut_probability(self, u, v)
    }

    /// Exact unconditional cut probability of every arc of `d`, in arc order.
    pub fn arc_probabilities(&self, d: &WeightedDigraph) -> Result<Vec<Rational>> {
        self.check_complete()?;
        let state = State::fresh(self);
        Ok(d.arcs()
            .iter()
            .map(|a| state.cut_probability(self, a.tail, a.head))
            .collect())
    }

    /// Conditional-expectation rounding: units are fixed in increasing id order,
    /// each to the outcome with the larger conditional expected cut weight,
    /// ties going to heads. The result weighs at least [`Self::expected_weight`].
    pub fn derandomize(&self, d: &WeightedDigraph) -> Result<Dicut> {
        self.check_complete()?;
        if d.n() != self.n {
            return Err(Error::InvalidParameter(
                "scheme and digraph sizes differ".into(),
            ));
        }
        // arcs whose probability depends on each pool
        let mut pool_arcs: Vec<Vec<usize>> = vec![Vec::new(); self.pools.len()];
        for (i, a) in d.arcs().iter().enumerate() {
            let pu = self.units[self.unit_of(a.tail)].0;
            let pv = self.units[self.unit_of(a.head)].0;
            pool_arcs[pu].push(i);
            if pv != pu {
                pool_arcs[pv].push(i);
            }
        }
        let mut state = State::fresh(self);
        for unit in 0..self.units.len() {
            let pool = self.units[unit].0;
            let mut best: Option<(Rational, bool)> = None;
            for heads in [true, false] {
                if state.pool_views[pool].outcome_probability(heads).is_zero() {
                    continue;
                }
                let trial = state.with(self, unit, heads);
                let value: Rational = pool_arcs[pool]
                    .iter()
                    .map(|&i| {
                        let a = &d.arcs()[i];
                        &a.weight * trial.cut_probability(self, a.tail, a.head)
                    })
                    .sum();
                if best.as_ref().is_none_or(|(b, _)| value > *b) {
                    best = Some((value, heads));
                }
            }
            let (_, heads) = best.expect("some outcome has positive probability");
            state = state.with(self, unit, heads);
        }
        Ok(self.cut_from(&state.assigned))
    }

    fn unit_of(&self, v: usize) -> usize {
        self.vertex_unit[v].expect("complete scheme").0
    }

    fn cut_from(&self, assigned: &[Option<bool>]) -> Dicut {
        let side: Vec<bool> = (0..self.n)
            .map(|v| {
                let (unit, flip) = self.vertex_unit[v].expect("complete scheme");
                assigned[unit].expect("all units fixed") != flip
            })
            .collect();
        Dicut::from_indicator(&side)
    }

    /// Draws one cut from the scheme. Probabilities are converted to `f64` for
    /// sampling, so this is for experiments, not certificates.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Dicut> {
        self.check_complete()?;
        let mut assigned = vec![None; self.units.len()];
        for pool in &self.pools {
            let r: f64 = rng.gen();
            let mut acc = 0.0;
            let mut heads = pool.prior.last().map_or(0, |(h, _)| *h);
            for (h, p) in &pool.prior {
                acc += p.to_f64().unwrap_or(0.0);
                if r < acc {
                    heads = *h;
                    break;
                }
            }
            let mut order = pool.units.clone();
            order.shuffle(rng);
            for (i, &u) in order.iter().enumerate() {
                assigned[u] = Some(i < heads);
            }
        }
        Ok(self.cut_from(&assigned))
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Conditional law of the unassigned units of one pool.
#[derive(Debug, Clone)]
struct PoolView {
    /// P(an unassigned unit shows heads)
    heads: Rational,
    /// pair[a][b] = P(first unassigned unit shows a, second shows b), index 1 = heads
    pair: [[Rational; 2]; 2],
}

impl PoolView {
    fn build(pool: &Pool, assigned_heads: usize, assigned_tails: usize) -> PoolView {
        let size = pool.units.len();
        let rest = size - assigned_heads - assigned_tails;
        // posterior over the total head count given the observed units
        let mut posterior: Vec<(usize, Rational)> = Vec::new();
        for (h, p) in &pool.prior {
            if *h < assigned_heads || size - h < assigned_tails {
                continue;
            }
            let likelihood = Rational::new(binomial(rest, h - assigned_heads), binomial(size, *h));
            posterior.push((h - assigned_heads, p * likelihood));
        }
        let total: Rational = posterior.iter().map(|(_, p)| p).sum();
        let zero = Rational::zero;
        let mut view = PoolView {
            heads: zero(),
            pair: [[zero(), zero()], [zero(), zero()]],
        };
        if total.is_zero() || rest == 0 {
            return view;
        }
        for (remaining_heads, p) in posterior {
            let p = p / &total;
            let hh = int(remaining_heads as i64);
            let tt = int((rest - remaining_heads) as i64);
            let r = int(rest as i64);
            view.heads += &p * &hh / &r;
            if rest >= 2 {
                let denom = &r * (&r - int(1));
                view.pair[1][1] += &p * &hh * (&hh - int(1)) / &denom;
                view.pair[1][0] += &p * &hh * &tt / &denom;
                view.pair[0][1] += &p * &hh * &tt / &denom;
                view.pair[0][0] += &p * &tt * (&tt - int(1)) / &denom;
            }
        }
        view
    }

    fn outcome_probability(&self, heads: bool) -> Rational {
        if heads {
            self.heads.clone()
        } else {
            Rational::one() - &self.heads
        }
    }
}

#[derive(Debug, Clone)]
struct State {
    assigned: Vec<Option<bool>>,
    /// per pool: (assigned heads, assigned tails)
    counts: Vec<(usize, usize)>,
    pool_views: Vec<PoolView>,
}

impl State {
    fn fresh(s: &AssignmentScheme) -> State {
        State {
            assigned: vec![None; s.units.len()],
            counts: vec![(0, 0); s.pools.len()],
            pool_views: s.pools.iter().map(|p| PoolView::build(p, 0, 0)).collect(),
        }
    }

    fn with(&self, s: &AssignmentScheme, unit: usize, heads: bool) -> State {
        let mut next = self.clone();
        let pool = s.units[unit].0;
        next.assigned[unit] = Some(heads);
        let (h, t) = &mut next.counts[pool];
        if heads {
            *h += 1;
        } else {
            *t += 1;
        }
        let (h, t) = next.counts[pool];
        next.pool_views[pool] = PoolView::build(&s.pools[pool], h, t);
        next
    }

    fn unit_outcome(&self, s: &AssignmentScheme, unit: usize, heads: bool) -> Rational {
        match self.assigned[unit] {
            Some(x) => indicator(x == heads),
            None => self.pool_views[s.units[unit].0].outcome_probability(heads),
        }
    }

    /// P(u in X and v not in X) under the current partial assignment.
    fn cut_probability(&self, s: &AssignmentScheme, u: usize, v: usize) -> Rational {
        let (uu, fu) = s.vertex_unit[u].expect("complete scheme");
        let (uv, fv) = s.vertex_unit[v].expect("complete scheme");
        // u in X iff unit(u) shows !fu; v in Y iff unit(v) shows fv
        let (need_u, need_v) = (!fu, fv);
        if uu == uv {
            return if need_u == need_v {
                self.unit_outcome(s, uu, need_u)
            } else {
                Rational::zero()
            };
        }
        let (pu, pv) = (s.units[uu].0, s.units[uv].0);
        match (self.assigned[uu], self.assigned[uv]) {
            (Some(_), _) | (_, Some(_)) => {
                self.unit_outcome(s, uu, need_u) * self.unit_outcome(s, uv, need_v)
            }
            (None, None) if pu == pv => {
                self.pool_views[pu].pair[need_u as usize][need_v as usize].clone()
            }
            (None, None) => self.unit_outcome(s, uu, need_u) * self.unit_outcome(s, uv, need_v),
        }
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}
