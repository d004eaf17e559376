//! Relations on a finite set `{0, .., n-1}` stored as bit matrices.
//!
//! Row `x` of a [`Relation`] is a word whose bit `y` is set when the pair
//! `(x, y)` belongs to the relation. Composition gathers rows with OR, so
//! products and closures cost `O(n^2)` word operations.
//!
//! Bits outside the `n x n` block are always zero; derived equality and
//! hashing therefore compare exactly `(n, bits)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{OmegaError, Result};

/// Word type of a single matrix row.
pub type Row = u32;

/// Largest ground set a [`Relation`] can physically store.
pub const MAX_GROUND: usize = Row::BITS as usize;

/// Default upper bound on `n` accepted by [`GroundSet::new`].
pub const DEFAULT_MAX_N: usize = 12;

/// A pair `(x, y)` of elements.
pub type Pair = (usize, usize);

/// The ground set `{0, .., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet(usize);

impl GroundSet {
    /// Ground set of size `n`, checked against [`DEFAULT_MAX_N`].
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_N)
    }

    /// Ground set of size `n`, checked against a caller-supplied limit.
    /// The limit itself is clamped to [`MAX_GROUND`].
    pub fn with_limit(n: usize, limit: usize) -> Result<Self> {
        let max = limit.min(MAX_GROUND);
        if n > max {
            return Err(OmegaError::GroundTooLarge { n, max });
        }
        Ok(GroundSet(n))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.0
    }

    fn check(self, x: usize) -> Result<()> {
        if x < self.0 {
            Ok(())
        } else {
            Err(OmegaError::ElementOutOfRange {
                element: x,
                n: self.0,
            })
        }
    }
}

impl TryFrom<usize> for GroundSet {
    type Error = OmegaError;

    fn try_from(n: usize) -> Result<Self> {
        GroundSet::new(n)
    }
}

/// A subset of the ground set, one bit per element.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(Row);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: Row) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> Row {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_GROUND && self.0 >> x & 1 == 1
    }

    pub fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_GROUND).filter(move |&i| bits >> i & 1 == 1)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// A relation on `{0, .., n-1}`, i.e. a subset of `X x X`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    rows: [Row; MAX_GROUND],
}

impl Relation {
    /// The empty relation.
    pub fn empty(ground: GroundSet) -> Self {
        Relation {
            n: ground.size(),
            rows: [0; MAX_GROUND],
        }
    }

    /// The equality relation (the diagonal).
    pub fn identity(ground: GroundSet) -> Self {
        let mut r = Self::empty(ground);
        for x in ground.elements() {
            r.rows[x] = 1 << x;
        }
        r
    }

    /// `X x X`.
    pub fn full(ground: GroundSet) -> Self {
        let mut r = Self::empty(ground);
        let mask = r.row_mask();
        for x in ground.elements() {
            r.rows[x] = mask;
        }
        r
    }

    pub fn from_pairs<I>(ground: GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Pair>,
    {
        let mut r = Self::empty(ground);
        for (x, y) in pairs {
            ground.check(x)?;
            ground.check(y)?;
            r.rows[x] |= 1 << y;
        }
        Ok(r)
    }

    /// `Δ ∪ pairs`. Convenience for writing orders by their strict part.
    pub fn reflexive_from_pairs<I>(ground: GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Pair>,
    {
        Ok(Self::from_pairs(ground, pairs)?.union_unchecked(&Self::identity(ground)))
    }

    /// Builds a relation from its row words. Bits at or beyond column `n`
    /// must be clear.
    pub fn from_rows(ground: GroundSet, rows: &[Row]) -> Result<Self> {
        if rows.len() != ground.size() {
            return Err(OmegaError::Parse(format!(
                "expected {} rows, got {}",
                ground.size(),
                rows.len()
            )));
        }
        let mut r = Self::empty(ground);
        let mask = r.row_mask();
        for (x, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(OmegaError::Parse(format!(
                    "row {x} has bits outside the ground set"
                )));
            }
            r.rows[x] = row;
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet(self.n)
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows[..self.n]
    }

    pub fn row(&self, x: usize) -> ElementSet {
        ElementSet(self.rows[x])
    }

    /// `{y | (y, x) ∈ self}`.
    pub fn column(&self, x: usize) -> ElementSet {
        (0..self.n)
            .filter(|&y| self.rows[y] >> x & 1 == 1)
            .collect()
    }

    fn row_mask(&self) -> Row {
        if self.n == MAX_GROUND {
            Row::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    /// Whether `(x, y)` is in the relation. Pairs outside the ground set
    /// are never members.
    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.n && self.rows[x] >> y & 1 == 1
    }

    pub fn with_pair(&self, x: usize, y: usize) -> Result<Self> {
        self.ground().check(x)?;
        self.ground().check(y)?;
        let mut r = *self;
        r.rows[x] |= 1 << y;
        Ok(r)
    }

    pub fn without_pair(&self, x: usize, y: usize) -> Result<Self> {
        self.ground().check(x)?;
        self.ground().check(y)?;
        let mut r = *self;
        r.rows[x] &= !(1 << y);
        Ok(r)
    }

    /// `|self|` as a set of pairs.
    pub fn pair_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows().iter().all(|&r| r == 0)
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        (0..self.n).flat_map(move |x| ElementSet(self.rows[x]).iter().map(move |y| (x, y)))
    }

    /// Pair-set inclusion. Independent of the ground sets involved, since
    /// out-of-range bits are always zero.
    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(other.rows.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Relation) -> bool {
        self.is_subset(other) && self != other
    }

    fn same_ground(&self, other: &Relation) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(OmegaError::GroundMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    fn zip_rows(&self, other: &Relation, f: impl Fn(Row, Row) -> Row) -> Relation {
        let mut r = *self;
        for x in 0..self.n {
            r.rows[x] = f(self.rows[x], other.rows[x]);
        }
        r
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_ground(other)?;
        Ok(self.union_unchecked(other))
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.same_ground(other)?;
        Ok(self.intersection_unchecked(other))
    }

    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.same_ground(other)?;
        Ok(self.difference_unchecked(other))
    }

    pub(crate) fn union_unchecked(&self, other: &Relation) -> Relation {
        self.zip_rows(other, |a, b| a | b)
    }

    pub(crate) fn intersection_unchecked(&self, other: &Relation) -> Relation {
        self.zip_rows(other, |a, b| a & b)
    }

    pub(crate) fn difference_unchecked(&self, other: &Relation) -> Relation {
        self.zip_rows(other, |a, b| a & !b)
    }

    /// `self ∘ other = {(x, y) | ∃z: (x, z) ∈ self, (z, y) ∈ other}`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.same_ground(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Relation) -> Relation {
        let mut out = Relation {
            n: self.n,
            rows: [0; MAX_GROUND],
        };
        for x in 0..self.n {
            let mut acc = 0;
            let mut mids = self.rows[x];
            while mids != 0 {
                let z = mids.trailing_zeros() as usize;
                acc |= other.rows[z];
                mids &= mids - 1;
            }
            out.rows[x] = acc;
        }
        out
    }

    pub fn square(&self) -> Relation {
        self.compose_unchecked(self)
    }

    pub fn opposite(&self) -> Relation {
        let mut out = Relation {
            n: self.n,
            rows: [0; MAX_GROUND],
        };
        for (x, y) in self.pairs() {
            out.rows[y] |= 1 << x;
        }
        out
    }

    /// Least preorder containing `self ∪ Δ`.
    ///
    /// The closure is only meaningful for reflexive input; non-reflexive
    /// input has the diagonal added first, so the result always contains Δ.
    pub fn transitive_closure(&self) -> Relation {
        let mut r = self.union_unchecked(&Self::identity(self.ground()));
        for k in 0..self.n {
            let through = r.rows[k];
            for x in 0..self.n {
                if r.rows[x] >> k & 1 == 1 {
                    r.rows[x] |= through;
                }
            }
        }
        r
    }

    /// Closure of `self ∪ Δ` by repeated squaring, together with the number
    /// of squarings that changed the relation.
    pub fn closure_by_squaring(&self) -> (Relation, usize) {
        let mut r = self.union_unchecked(&Self::identity(self.ground()));
        let mut steps = 0;
        loop {
            let next = r.square();
            if next == r {
                return (r, steps);
            }
            r = next;
            steps += 1;
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.rows[x] >> x & 1 == 1)
    }

    pub fn is_transitive(&self) -> bool {
        self.square().is_subset(self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.opposite() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.intersection_unchecked(&self.opposite())
            .is_subset(&Self::identity(self.ground()))
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    /// Row-major bit string, `'1'` at position `x * n + y` when `(x, y)` is
    /// present.
    pub fn bit_string(&self) -> String {
        let mut s = String::with_capacity(self.n * self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                s.push(if self.contains(x, y) { '1' } else { '0' });
            }
        }
        s
    }

    /// Bit string packed four bits per lowercase hex digit, first bit most
    /// significant, zero-padded on the right to a whole digit.
    pub fn to_hex(&self) -> String {
        let bits: Vec<bool> = self.bit_string().chars().map(|c| c == '1').collect();
        bits.chunks(4)
            .map(|chunk| {
                let v = chunk
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &b)| acc | (b as u32) << (3 - i));
                char::from_digit(v, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(ground: GroundSet, hex: &str) -> Result<Self> {
        let n = ground.size();
        let total = n * n;
        let digits = total.div_ceil(4);
        let hex = hex.trim();
        if hex.len() != digits {
            return Err(OmegaError::Parse(format!(
                "hex form for n = {n} needs {digits} digits, got {}",
                hex.len()
            )));
        }
        let mut r = Self::empty(ground);
        for (i, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| OmegaError::Parse(format!("invalid hex digit {c:?}")))?;
            for b in 0..4 {
                if v >> (3 - b) & 1 == 0 {
                    continue;
                }
                let pos = i * 4 + b;
                if pos >= total {
                    return Err(OmegaError::Parse("nonzero padding bits in hex form".into()));
                }
                r.rows[pos / n] |= 1 << (pos % n);
            }
        }
        Ok(r)
    }
}

impl Ord for Relation {
    /// Canonical order: by `n`, then lexicographically by row-major bit
    /// string.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            // Reversing a row puts column 0 in the most significant bit, so
            // numeric comparison matches the bit string.
            self.rows()
                .iter()
                .map(|r| r.reverse_bits())
                .cmp(other.rows().iter().map(|r| r.reverse_bits()))
        })
    }
}

impl PartialOrd for Relation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, {})", self.n, self)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}

/// A relation satisfying the order axioms: reflexive, transitive and
/// antisymmetric.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderRelation(Relation);

impl OrderRelation {
    pub fn new(rel: Relation) -> Result<Self> {
        if !rel.is_reflexive() {
            return Err(OmegaError::NotAnOrder("not reflexive".into()));
        }
        if !rel.is_transitive() {
            return Err(OmegaError::NotAnOrder("not transitive".into()));
        }
        if !rel.is_antisymmetric() {
            return Err(OmegaError::NotAnOrder("not antisymmetric".into()));
        }
        Ok(OrderRelation(rel))
    }

    pub(crate) fn new_unchecked(rel: Relation) -> Self {
        debug_assert!(rel.is_order(), "{rel:?} is not an order");
        OrderRelation(rel)
    }

    /// The equality relation Δ, the minimum of the poset of orders.
    pub fn discrete(ground: GroundSet) -> Self {
        OrderRelation(Relation::identity(ground))
    }

    /// The total order `0 < 1 < .. < n-1`.
    pub fn chain(ground: GroundSet) -> Self {
        let mut r = Relation::empty(ground);
        let mask = r.row_mask();
        for x in ground.elements() {
            r.rows[x] = mask & !((1 << x) - 1);
        }
        OrderRelation(r)
    }

    /// `Δ ∪ pairs`, validated.
    pub fn from_strict_pairs<I>(ground: GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Pair>,
    {
        Self::new(Relation::reflexive_from_pairs(ground, pairs)?)
    }

    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn ground(&self) -> GroundSet {
        self.0.ground()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.contains(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.0.contains(x, y)
    }

    pub fn is_subset(&self, other: &OrderRelation) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl std::ops::Deref for OrderRelation {
    type Target = Relation;

    fn deref(&self) -> &Relation {
        &self.0
    }
}

impl fmt::Debug for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Order(n={}, {})", self.0.n, self.0)
    }
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn rel(n: usize, pairs: &[Pair]) -> Relation {
        Relation::from_pairs(g(n), pairs.iter().copied()).unwrap()
    }

    fn refl(n: usize, pairs: &[Pair]) -> Relation {
        Relation::reflexive_from_pairs(g(n), pairs.iter().copied()).unwrap()
    }

    /// Every relation on `n` elements, by subset of `n^2` bits.
    fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
        (0u64..1 << (n * n)).map(move |mask| {
            Relation::from_pairs(
                g(n),
                (0..n * n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i / n, i % n)),
            )
            .unwrap()
        })
    }

    #[test]
    fn ground_set_cap() {
        assert!(GroundSet::new(12).is_ok());
        assert_eq!(
            GroundSet::new(13),
            Err(OmegaError::GroundTooLarge { n: 13, max: 12 })
        );
        assert!(GroundSet::with_limit(20, 20).is_ok());
        assert!(GroundSet::with_limit(40, 100).is_err());
    }

    #[test]
    fn compose_examples() {
        for n in 0..6 {
            let d = Relation::identity(g(n));
            assert_eq!(d.compose(&d).unwrap(), d);
        }
        assert_eq!(
            rel(3, &[(0, 1)]).compose(&rel(3, &[(1, 2)])).unwrap(),
            rel(3, &[(0, 2)])
        );
        assert!(rel(2, &[(0, 1)])
            .compose(&rel(2, &[(0, 1)]))
            .unwrap()
            .is_empty());
        assert_eq!(
            rel(2, &[]).compose(&rel(3, &[])),
            Err(OmegaError::GroundMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(
            Relation::identity(g(4)).opposite(),
            Relation::identity(g(4))
        );
        assert_eq!(rel(2, &[(0, 1)]).opposite(), rel(2, &[(1, 0)]));
        assert_eq!(
            refl(3, &[(0, 1), (0, 2)]).opposite(),
            refl(3, &[(1, 0), (2, 0)])
        );
    }

    #[test]
    fn closure_examples() {
        let d = Relation::identity(g(3));
        assert_eq!(d.transitive_closure(), d);
        assert_eq!(
            refl(3, &[(0, 1), (1, 2)]).transitive_closure(),
            refl(3, &[(0, 1), (1, 2), (0, 2)])
        );
        let pre = refl(2, &[(0, 1), (1, 0)]);
        assert_eq!(pre.transitive_closure(), pre);
        // non-reflexive input gains the diagonal
        assert_eq!(rel(3, &[(0, 1)]).transitive_closure(), refl(3, &[(0, 1)]));
    }

    #[test]
    fn predicate_examples() {
        for n in 0..6 {
            assert!(Relation::identity(g(n)).is_order());
        }
        assert!(!refl(3, &[(0, 1), (1, 2)]).is_order());
        assert!(refl(3, &[(0, 1), (1, 0)]).is_equivalence());
        assert!(!refl(3, &[(0, 1)]).is_equivalence());
    }

    #[test]
    fn set_algebra_examples() {
        let d2 = Relation::identity(g(2));
        assert_eq!(
            refl(2, &[(0, 1)]).difference(&d2).unwrap(),
            rel(2, &[(0, 1)])
        );
        assert_eq!(Relation::identity(g(4)).pair_count(), 4);
        assert_eq!(d2.union(&rel(2, &[(0, 1)])).unwrap(), refl(2, &[(0, 1)]));
        assert_eq!(
            refl(2, &[(0, 1)])
                .intersection(&rel(2, &[(0, 1), (1, 0)]))
                .unwrap(),
            rel(2, &[(0, 1)])
        );
        assert!(d2.union(&Relation::identity(g(3))).is_err());
        assert!(rel(3, &[(0, 1)]).contains(0, 1));
        assert!(!rel(3, &[(0, 1)]).contains(0, 7));
    }

    #[test]
    fn out_of_range_pairs_rejected() {
        assert_eq!(
            Relation::from_pairs(g(2), [(0, 2)]),
            Err(OmegaError::ElementOutOfRange { element: 2, n: 2 })
        );
    }

    #[test]
    fn order_validation_reports_reason() {
        assert!(matches!(
            OrderRelation::new(rel(2, &[(0, 1)])),
            Err(OmegaError::NotAnOrder(_))
        ));
        assert!(OrderRelation::new(refl(2, &[(0, 1), (1, 0)])).is_err());
        assert!(OrderRelation::chain(g(4)).is_order());
        assert_eq!(OrderRelation::chain(g(4)).pair_count(), 10);
    }

    #[test]
    fn exhaustive_algebra_laws_small() {
        for n in 0..=2 {
            let all: Vec<_> = all_relations(n).collect();
            let d = Relation::identity(g(n));
            for a in &all {
                assert_eq!(a.opposite().opposite(), *a);
                assert_eq!(d.compose(a).unwrap(), *a);
                assert_eq!(a.compose(&d).unwrap(), *a);
                for b in &all {
                    for c in &all {
                        let left = a.compose(b).unwrap().compose(c).unwrap();
                        let right = a.compose(&b.compose(c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn order_iff_preorder_and_antisymmetric_n3() {
        for r in all_relations(3) {
            assert_eq!(r.is_order(), r.is_preorder() && r.is_antisymmetric());
            let c = r.transitive_closure();
            assert_eq!(c.transitive_closure(), c);
        }
    }

    #[test]
    fn canonical_order_follows_bit_string() {
        let all: Vec<_> = all_relations(2).collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.cmp(b), a.bit_string().cmp(&b.bit_string()));
            }
        }
    }

    #[test]
    fn hex_round_trip_and_layout() {
        let r = refl(3, &[(0, 1)]);
        assert_eq!(r.bit_string(), "110010001");
        assert_eq!(r.to_hex(), "c88");
        assert_eq!(Relation::from_hex(g(3), "c88").unwrap(), r);
        assert!(Relation::from_hex(g(3), "c89").is_err());
        assert!(Relation::from_hex(g(3), "c8").is_err());
        assert_eq!(Relation::from_hex(g(0), "").unwrap(), Relation::empty(g(0)));
    }
}
