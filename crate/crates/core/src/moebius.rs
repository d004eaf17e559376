//! Möbius function of Ω.
//!
//! [`mobius_closed`] evaluates the Frattini criterion directly. The
//! recursion in [`mobius_recursive`] and the chain count in
//! [`reduced_euler_characteristic`] are independent checks of it.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::omega::{frattini, interval_orders, IntervalSpec, Openness};
use crate::poset::FinitePoset;
use crate::relation::{OrderRelation, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MobiusResult {
    pub lower: OrderRelation,
    pub upper: OrderRelation,
    pub value: i64,
}

/// The three routes to `μ(R, S)` side by side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusComparison {
    pub closed_form: i64,
    pub recursive: i64,
    /// `χ̃(]R, S[)`; absent when `R = S`.
    pub euler: Option<i64>,
}

impl MobiusComparison {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.recursive && self.euler.is_none_or(|e| e == self.recursive)
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `0` if `Φ(S) ⊄ R`, else `(-1)^|S - R|`.
pub fn mobius_closed(r: &OrderRelation, s: &OrderRelation) -> Result<i64> {
    let iv = IntervalSpec::new(*r, *s)?;
    if frattini(s).is_subset(r) {
        Ok(sign(iv.rank()))
    } else {
        Ok(0)
    }
}

pub fn mobius(r: &OrderRelation, s: &OrderRelation) -> Result<MobiusResult> {
    Ok(MobiusResult {
        lower: *r,
        upper: *s,
        value: mobius_closed(r, s)?,
    })
}

/// `μ(R, R) = 1` and `Σ_{R ⊆ T ⊆ S} μ(R, T) = 0`, solved over `[R, S]` in
/// order of increasing size.
pub fn mobius_recursive(r: &OrderRelation, s: &OrderRelation) -> Result<i64> {
    let iv = IntervalSpec::new(*r, *s)?;
    let mut members = interval_orders(&iv, Openness::Closed)?;
    members.sort_by_key(|t| t.pair_count());
    let mut memo: HashMap<Relation, i64> = HashMap::with_capacity(members.len());
    for (i, t) in members.iter().enumerate() {
        let value = if t == r {
            1
        } else {
            -members[..i]
                .iter()
                .filter(|u| u.is_proper_subset(t))
                .map(|u| memo[u.relation()])
                .sum::<i64>()
        };
        memo.insert(*t.relation(), value);
    }
    Ok(memo[s.relation()])
}

/// Reduced Euler characteristic of a finite poset: the signed count of its
/// chains, with the empty chain contributing -1.
pub fn reduced_euler_characteristic<T, F>(elements: &[T], leq: F) -> Result<i64>
where
    F: Fn(&T, &T) -> bool,
{
    Ok(FinitePoset::from_predicate(elements, leq)?.reduced_euler_characteristic())
}

/// Reduced Euler characteristic of the open interval `]R, S[`.
pub fn open_interval_euler(iv: &IntervalSpec) -> Result<i64> {
    let members = interval_orders(iv, Openness::Open)?;
    reduced_euler_characteristic(&members, |a, b| a.is_subset(b))
}

pub fn compare_mobius(r: &OrderRelation, s: &OrderRelation) -> Result<MobiusComparison> {
    let iv = IntervalSpec::new(*r, *s)?;
    Ok(MobiusComparison {
        closed_form: mobius_closed(r, s)?,
        recursive: mobius_recursive(r, s)?,
        euler: if r == s {
            None
        } else {
            Some(open_interval_euler(&iv)?)
        },
    })
}
