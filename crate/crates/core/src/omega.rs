//! The poset Ω of all orders on a finite set, ordered by inclusion.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{OmegaError, Result};
use crate::relation::{ElementSet, GroundSet, OrderRelation, Pair, Relation};

/// Largest `|S - R|` for which [`interval_orders`] scans subsets.
pub const MAX_INTERVAL_FREE_PAIRS: usize = 24;

/// Environment variable that overrides the enumeration cap.
pub const MAX_N_ENV: &str = "OMEGA_MAX_N";

impl OrderRelation {
    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(OmegaError::ElementOutOfRange {
                element: x,
                n: self.n(),
            })
        }
    }

    /// `]., x]`
    pub fn closed_below(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.column(x))
    }

    /// `]., x[`
    pub fn strict_below(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(ElementSet::from_bits(self.column(x).bits() & !(1 << x)))
    }

    /// `[x, .[`
    pub fn closed_above(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(self.row(x))
    }

    /// `]x, .[`
    pub fn strict_above(&self, x: usize) -> Result<ElementSet> {
        self.check_element(x)?;
        Ok(ElementSet::from_bits(self.row(x).bits() & !(1 << x)))
    }

    /// `]x, y[ = {z | x < z < y}`
    pub fn open_interval(&self, x: usize, y: usize) -> Result<ElementSet> {
        Ok(self.strict_above(x)?.intersection(self.strict_below(y)?))
    }

    /// `[x, y] = {z | x <= z <= y}`
    pub fn closed_interval(&self, x: usize, y: usize) -> Result<ElementSet> {
        Ok(self.closed_above(x)?.intersection(self.closed_below(y)?))
    }

    fn strict_below_all(&self) -> Vec<ElementSet> {
        (0..self.n())
            .map(|x| self.strict_below(x).unwrap())
            .collect()
    }

    fn strict_above_all(&self) -> Vec<ElementSet> {
        (0..self.n())
            .map(|x| self.strict_above(x).unwrap())
            .collect()
    }
}

/// The adjacent (covering) pairs `M_S` of an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacentPairSet {
    pub order: OrderRelation,
    pub pairs: Relation,
}

impl AdjacentPairSet {
    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pairs.pairs()
    }

    pub fn len(&self) -> usize {
        self.pairs.pair_count()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `M_S = {(x, y) | x <_S y and ]x, y[_S = ∅}`.
pub fn adjacent_pairs(s: &OrderRelation) -> AdjacentPairSet {
    let mut pairs = Relation::empty(s.ground());
    for x in 0..s.n() {
        let above = s.strict_above(x).unwrap();
        for y in above.iter() {
            if s.open_interval(x, y).unwrap().is_empty() {
                pairs = pairs.with_pair(x, y).unwrap();
            }
        }
    }
    AdjacentPairSet { order: *s, pairs }
}

/// `Δ ∪ (S - Δ)^2`.
pub fn frattini_by_formula(s: &OrderRelation) -> Relation {
    let delta = Relation::identity(s.ground());
    let strict = s.difference_unchecked(&delta);
    strict.square().union_unchecked(&delta)
}

/// `S - M_S`.
pub fn frattini_by_adjacency(s: &OrderRelation) -> Relation {
    s.difference_unchecked(&adjacent_pairs(s).pairs)
}

/// The Frattini subrelation: the intersection of all maximal order
/// subrelations of `s`. Evaluated both from the squaring formula and as
/// `S - M_S`; the two must agree.
pub fn frattini(s: &OrderRelation) -> Relation {
    let by_formula = frattini_by_formula(s);
    let by_adjacency = frattini_by_adjacency(s);
    assert_eq!(
        by_formula, by_adjacency,
        "Frattini formula and S - M_S disagree for {s:?}"
    );
    by_formula
}

/// Orders `R ⊂ S` with nothing strictly between them: `S` minus one
/// adjacent pair, in lexicographic order of the removed pair.
pub fn maximal_subrelations(s: &OrderRelation) -> Vec<OrderRelation> {
    adjacent_pairs(s)
        .iter()
        .map(|(x, y)| {
            let r = s.without_pair(x, y).unwrap();
            OrderRelation::new(r).expect("removing an adjacent pair leaves an order")
        })
        .collect()
}

/// `(x, y) <= (x', y')` in `R x R^op`, i.e. `x <=_R x'` and `y' <=_R y`.
pub fn pair_order_leq(r: &OrderRelation, (x, y): Pair, (x2, y2): Pair) -> bool {
    r.leq(x, x2) && r.leq(y2, y)
}

fn incomparable_pairs(r: &OrderRelation) -> Relation {
    let comparable = r.union_unchecked(&r.opposite());
    Relation::full(r.ground()).difference_unchecked(&comparable)
}

/// Minimal elements of `(X x X) - (R ∪ R^op)` for `R x R^op`, by direct
/// comparison against every other candidate.
pub fn minimal_missing_pairs_direct(r: &OrderRelation) -> Relation {
    let candidates = incomparable_pairs(r);
    let mut out = Relation::empty(r.ground());
    for p in candidates.pairs() {
        let dominated = candidates
            .pairs()
            .any(|q| q != p && pair_order_leq(r, q, p));
        if !dominated {
            out = out.with_pair(p.0, p.1).unwrap();
        }
    }
    out
}

/// Pairs `(a, b) ∉ R ∪ R^op` with `]., a[ ⊆ ]., b[` and `]b, .[ ⊆ ]a, .[`.
pub fn minimal_missing_pairs_by_condition(r: &OrderRelation) -> Relation {
    let below = r.strict_below_all();
    let above = r.strict_above_all();
    let mut out = Relation::empty(r.ground());
    for (a, b) in incomparable_pairs(r).pairs() {
        if below[a].is_subset(below[b]) && above[b].is_subset(above[a]) {
            out = out.with_pair(a, b).unwrap();
        }
    }
    out
}

/// The minimal missing pairs of `r`, computed two ways which must agree.
pub fn minimal_missing_pairs(r: &OrderRelation) -> Relation {
    let direct = minimal_missing_pairs_direct(r);
    let by_condition = minimal_missing_pairs_by_condition(r);
    assert_eq!(
        direct, by_condition,
        "minimality test and inclusion condition disagree for {r:?}"
    );
    direct
}

/// Orders covering `r` in Ω: `R ⊔ {(x, y)}` for each minimal missing pair,
/// in lexicographic order of the added pair.
pub fn covers_above(r: &OrderRelation) -> Vec<OrderRelation> {
    minimal_missing_pairs(r)
        .pairs()
        .map(|(x, y)| {
            let s = r.with_pair(x, y).unwrap();
            OrderRelation::new(s).expect("adding a minimal missing pair yields an order")
        })
        .collect()
}

/// How [`enumerate_orders`] produces Ω_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Test every reflexive relation for the order axioms.
    Brute,
    /// Breadth-first closure of `{Δ}` under [`covers_above`].
    Covers,
}

impl std::str::FromStr for Strategy {
    type Err = OmegaError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Strategy::Brute),
            "covers" => Ok(Strategy::Covers),
            other => Err(OmegaError::Parse(format!("unknown strategy {other:?}"))),
        }
    }
}

/// Upper bound on `n` for whole-poset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap(usize);

impl EnumerationCap {
    pub const DEFAULT: EnumerationCap = EnumerationCap(5);
    /// Largest cap reachable through the explicit override.
    pub const OVERRIDE: EnumerationCap = EnumerationCap(6);

    pub fn new(max_n: usize) -> Self {
        EnumerationCap(max_n)
    }

    pub fn max_n(self) -> usize {
        self.0
    }

    /// Reads [`MAX_N_ENV`]; falls back to `fallback` when unset.
    pub fn from_env_or(fallback: EnumerationCap) -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(EnumerationCap)
                .map_err(|_| OmegaError::Parse(format!("{MAX_N_ENV}={v:?} is not an integer"))),
            Err(_) => Ok(fallback),
        }
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(OmegaError::EnumerationCap { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// All orders on `{0, .., n-1}` in canonical order.
pub fn enumerate_orders(
    n: usize,
    strategy: Strategy,
    cap: EnumerationCap,
) -> Result<Vec<OrderRelation>> {
    cap.check(n)?;
    let ground = GroundSet::new(n)?;
    let mut orders = match strategy {
        Strategy::Brute => enumerate_brute(ground),
        Strategy::Covers => closure_under_covers(OrderRelation::discrete(ground), None),
    };
    orders.sort_unstable();
    Ok(orders)
}

fn enumerate_brute(ground: GroundSet) -> Vec<OrderRelation> {
    let n = ground.size();
    let off_diagonal: Vec<Pair> = ground
        .elements()
        .flat_map(|x| {
            ground
                .elements()
                .filter(move |&y| y != x)
                .map(move |y| (x, y))
        })
        .collect();
    let delta = Relation::identity(ground);
    let m = off_diagonal.len();
    (0u64..1 << m)
        .into_par_iter()
        .filter_map(|mask| {
            let mut rows: Vec<_> = delta.rows().to_vec();
            for (i, &(x, y)) in off_diagonal.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows[x] |= 1 << y;
                }
            }
            let r = Relation::from_rows(ground, &rows).unwrap();
            debug_assert_eq!(r.n(), n);
            r.is_order().then(|| OrderRelation::new_unchecked(r))
        })
        .collect()
}

/// Every order reachable from `start` by repeated covers, including `start`
/// itself, optionally restricted to subrelations of `bound`.
fn closure_under_covers(start: OrderRelation, bound: Option<&OrderRelation>) -> Vec<OrderRelation> {
    let mut seen: HashSet<OrderRelation> = HashSet::new();
    seen.insert(start);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        frontier.sort_unstable();
        let next: Vec<OrderRelation> = frontier
            .par_iter()
            .flat_map_iter(covers_above)
            .filter(|t| bound.is_none_or(|b| t.is_subset(b)))
            .collect();
        frontier = next.into_iter().filter(|t| seen.insert(*t)).collect();
    }
    seen.into_iter().collect()
}

/// All orders strictly containing `r`, in canonical order.
pub fn orders_above(r: &OrderRelation) -> Vec<OrderRelation> {
    let mut out = closure_under_covers(*r, None);
    out.retain(|t| t != r);
    out.sort_unstable();
    out
}

/// A closed interval `[R, S]` of Ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    lower: OrderRelation,
    upper: OrderRelation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Openness {
    Closed,
    Open,
}

impl IntervalSpec {
    pub fn new(lower: OrderRelation, upper: OrderRelation) -> Result<Self> {
        if lower.n() != upper.n() {
            return Err(OmegaError::GroundMismatch {
                left: lower.n(),
                right: upper.n(),
            });
        }
        if !lower.is_subset(&upper) {
            return Err(OmegaError::NotComparable);
        }
        Ok(IntervalSpec { lower, upper })
    }

    pub fn lower(&self) -> &OrderRelation {
        &self.lower
    }

    pub fn upper(&self) -> &OrderRelation {
        &self.upper
    }

    /// `S - R`.
    pub fn free_pairs(&self) -> Relation {
        self.upper.difference_unchecked(&self.lower)
    }

    /// `|S - R|`.
    pub fn rank(&self) -> usize {
        self.upper.pair_count() - self.lower.pair_count()
    }

    pub fn contains(&self, t: &OrderRelation) -> bool {
        t.n() == self.lower.n() && self.lower.is_subset(t) && t.is_subset(&self.upper)
    }

    pub fn contains_open(&self, t: &OrderRelation) -> bool {
        self.contains(t) && *t != self.lower && *t != self.upper
    }

    fn check_member(&self, t: &OrderRelation) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(OmegaError::OutsideInterval)
        }
    }

    /// `T ∧ T' = T ∩ T'`.
    pub fn meet(&self, t: &OrderRelation, u: &OrderRelation) -> Result<OrderRelation> {
        self.check_member(t)?;
        self.check_member(u)?;
        let m = OrderRelation::new(t.intersection_unchecked(u))
            .expect("intersection of orders is an order");
        debug_assert!(self.contains(&m));
        Ok(m)
    }

    /// `T ∨ T' = closure(T ∪ T')`.
    pub fn join(&self, t: &OrderRelation, u: &OrderRelation) -> Result<OrderRelation> {
        self.check_member(t)?;
        self.check_member(u)?;
        let j = OrderRelation::new(t.union_unchecked(u).transitive_closure())
            .expect("closure of a union inside an order is an order");
        debug_assert!(self.contains(&j));
        Ok(j)
    }
}

/// Orders `T` with `R ⊆ T ⊆ S` (or `R ⊂ T ⊂ S` when open), found by
/// scanning subsets of `S - R`. Output is in canonical order.
pub fn interval_orders(iv: &IntervalSpec, openness: Openness) -> Result<Vec<OrderRelation>> {
    let free: Vec<Pair> = iv.free_pairs().pairs().collect();
    let k = free.len();
    if k > MAX_INTERVAL_FREE_PAIRS {
        return Err(OmegaError::Precondition(format!(
            "interval has {k} free pairs; subset scan supports at most {MAX_INTERVAL_FREE_PAIRS}"
        )));
    }
    let full: u64 = (1 << k) - 1;
    let mut out = Vec::new();
    for mask in 0..=full {
        if openness == Openness::Open && (mask == 0 || mask == full) {
            continue;
        }
        let mut t = *iv.lower.relation();
        for (i, &(x, y)) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t = t.with_pair(x, y).unwrap();
            }
        }
        if t.is_order() {
            out.push(OrderRelation::new_unchecked(t));
        }
    }
    out.sort_unstable();
    Ok(out)
}
