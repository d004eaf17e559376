//! Homotopy type of the upper intervals `]R, .[` of Ω.
//!
//! Let `E_R` be the set of pairs `(a, b)` outside `R ∪ R^op` with
//! `]., a[ ⊆ ]., b[` and `]b, .[ ⊆ ]a, .[`. If `E_R` is not symmetric the
//! upper interval is contractible. Otherwise `Δ ⊔ E_R` is an equivalence
//! relation with `r` classes and the upper interval is a sphere of dimension
//! `n - r - 1`.

use serde_json::{json, Value};

use crate::error::Result;
use crate::omega::{minimal_missing_pairs, orders_above, EnumerationCap};
use crate::relation::{OrderRelation, Pair, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESet {
    pub order: OrderRelation,
    pub pairs: Relation,
}

impl ESet {
    pub fn is_symmetric(&self) -> bool {
        self.pairs.is_symmetric()
    }

    /// Least `(a, b)` in the set whose reverse is not.
    pub fn asymmetric_witness(&self) -> Option<Pair> {
        self.pairs
            .pairs()
            .find(|&(a, b)| !self.pairs.contains(b, a))
    }
}

/// Evaluates the defining inclusions pair by pair. Panics if the result
/// differs from [`minimal_missing_pairs`], which it never should.
pub fn e_set(r: &OrderRelation) -> ESet {
    let n = r.n();
    let below: Vec<_> = (0..n).map(|x| r.strict_below(x).unwrap()).collect();
    let above: Vec<_> = (0..n).map(|x| r.strict_above(x).unwrap()).collect();
    let mut pairs = Relation::empty(r.ground());
    for a in 0..n {
        for b in 0..n {
            if r.leq(a, b) || r.leq(b, a) {
                continue;
            }
            if below[a].is_subset(below[b]) && above[b].is_subset(above[a]) {
                pairs = pairs.with_pair(a, b).unwrap();
            }
        }
    }
    assert_eq!(
        pairs,
        minimal_missing_pairs(r),
        "E_R differs from the minimal missing pairs of {r:?}"
    );
    ESet { order: *r, pairs }
}

/// A partition of `{0, .., n-1}`; classes are sorted and listed by their
/// least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalencePartition {
    pub classes: Vec<Vec<usize>>,
}

impl EquivalencePartition {
    /// Classes of an equivalence relation. Panics on anything else.
    pub fn of(e: &Relation) -> Self {
        assert!(e.is_equivalence(), "{e:?} is not an equivalence relation");
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut seen = 0u64;
        for x in 0..e.n() {
            if seen >> x & 1 == 1 {
                continue;
            }
            let class: Vec<usize> = e.row(x).iter().collect();
            for &y in &class {
                seen |= 1 << y;
            }
            classes.push(class);
        }
        EquivalencePartition { classes }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperIntervalClass {
    Contractible {
        witness: Pair,
    },
    Sphere {
        partition: EquivalencePartition,
        dimension: isize,
    },
}

impl UpperIntervalClass {
    pub fn to_json(&self) -> Value {
        match self {
            UpperIntervalClass::Contractible { witness } => {
                json!({ "verdict": "contractible", "witness": [witness.0, witness.1] })
            }
            UpperIntervalClass::Sphere {
                partition,
                dimension,
            } => {
                json!({ "verdict": "sphere", "classes": partition.classes, "dimension": dimension })
            }
        }
    }

    pub fn sphere_dimension(&self) -> Option<isize> {
        match self {
            UpperIntervalClass::Sphere { dimension, .. } => Some(*dimension),
            UpperIntervalClass::Contractible { .. } => None,
        }
    }
}

pub fn classify_upper(r: &OrderRelation) -> UpperIntervalClass {
    let e = e_set(r);
    if let Some(witness) = e.asymmetric_witness() {
        return UpperIntervalClass::Contractible { witness };
    }
    for (a, b) in e.pairs.pairs() {
        assert!(
            r.strict_below(a).unwrap() == r.strict_below(b).unwrap()
                && r.strict_above(a).unwrap() == r.strict_above(b).unwrap(),
            "symmetric E_R pair ({a},{b}) of {r:?} has unequal strict neighbourhoods"
        );
    }
    let equivalence = e.pairs.union(&Relation::identity(r.ground())).unwrap();
    let partition = EquivalencePartition::of(&equivalence);
    let dimension = r.n() as isize - partition.class_count() as isize - 1;
    UpperIntervalClass::Sphere {
        partition,
        dimension,
    }
}

/// `]R, .[`: all orders strictly containing `r`, in canonical order.
pub fn upper_interval_poset(r: &OrderRelation, cap: EnumerationCap) -> Result<Vec<OrderRelation>> {
    cap.check(r.n())?;
    Ok(orders_above(r))
}
