mod common;

use std::collections::BTreeSet;

use common::Pairs;
use omega_core::moebius::open_interval_euler;
use omega_core::topology::{interval_complex, reduced_homology};
use omega_core::{
    adjacent_pairs, enumerate_orders, interval_orders, mobius_closed, orders_above, EnumerationCap,
    GroundSet, IntervalSpec, Openness, OrderRelation, Relation, Strategy,
};

fn orders(n: usize) -> Vec<OrderRelation> {
    enumerate_orders(n, Strategy::Brute, EnumerationCap::DEFAULT).unwrap()
}

fn pairs_of(r: &OrderRelation) -> Pairs {
    common::from_relation(r.relation())
}

fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    (0u32..1 << (n * n)).map(move |mask| {
        let pairs = (0..n * n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i / n, i % n));
        Relation::from_pairs(GroundSet::new(n).unwrap(), pairs).unwrap()
    })
}

#[test]
fn order_test_and_closure_match_oracle() {
    for n in 0..=3 {
        for r in all_relations(n) {
            let p = common::from_relation(&r);
            assert_eq!(r.is_order(), common::is_order(n, &p), "{r}");
            assert_eq!(
                common::from_relation(&r.transitive_closure()),
                common::closure(n, &p),
                "{r}"
            );
        }
    }
}

#[test]
fn lattice_laws_on_omega_3() {
    let all = orders(3);
    for r in &all {
        for s in all.iter().filter(|s| r.is_subset(s)) {
            let iv = IntervalSpec::new(*r, *s).unwrap();
            let members = interval_orders(&iv, Openness::Closed).unwrap();
            for a in &members {
                for b in &members {
                    let meet = iv.meet(a, b).unwrap();
                    let join = iv.join(a, b).unwrap();
                    let (pa, pb) = (pairs_of(a), pairs_of(b));
                    assert_eq!(
                        pairs_of(&meet),
                        pa.intersection(&pb).copied().collect::<Pairs>()
                    );
                    let union: Pairs = pa.union(&pb).copied().collect();
                    assert_eq!(pairs_of(&join), common::closure(3, &union));
                    assert_eq!(meet, iv.meet(b, a).unwrap());
                    assert_eq!(join, iv.join(b, a).unwrap());
                    assert_eq!(iv.meet(a, &join).unwrap(), *a);
                    assert_eq!(iv.join(a, &meet).unwrap(), *a);
                }
            }
        }
    }
}

#[test]
fn adjacent_pairs_heredity() {
    for n in 0..=3 {
        let all = orders(n);
        for s in &all {
            let m_s = adjacent_pairs(s).pairs;
            for (x, y) in m_s.pairs() {
                assert!(s.lt(x, y));
                assert!(s.open_interval(x, y).unwrap().is_empty());
            }
            for t in all.iter().filter(|t| t.is_subset(s)) {
                let m_t = adjacent_pairs(t).pairs;
                assert!(
                    m_s.intersection(t.relation()).unwrap().is_subset(&m_t),
                    "S={s} T={t}"
                );
            }
        }
    }
}

#[test]
fn intervals_and_upper_sets_match_filters() {
    for n in 0..=3 {
        let all = orders(n);
        for r in &all {
            let above: Vec<OrderRelation> = all
                .iter()
                .filter(|s| r.is_proper_subset(s))
                .copied()
                .collect();
            assert_eq!(orders_above(r), above);
            for s in all.iter().filter(|s| r.is_subset(s)) {
                let iv = IntervalSpec::new(*r, *s).unwrap();
                let closed: BTreeSet<OrderRelation> = all
                    .iter()
                    .filter(|t| r.is_subset(t) && t.is_subset(s))
                    .copied()
                    .collect();
                let got: BTreeSet<OrderRelation> = interval_orders(&iv, Openness::Closed)
                    .unwrap()
                    .into_iter()
                    .collect();
                assert_eq!(got, closed);
                let open = interval_orders(&iv, Openness::Open).unwrap();
                assert_eq!(
                    open.len(),
                    closed.len().saturating_sub(if r == s { 1 } else { 2 })
                );
            }
        }
    }
}

#[test]
fn mobius_row_sums_vanish() {
    for n in 0..=4 {
        let all = orders(n);
        for r in &all {
            for s in all.iter().filter(|s| r.is_proper_subset(s)) {
                let iv = IntervalSpec::new(*r, *s).unwrap();
                let sum: i64 = interval_orders(&iv, Openness::Closed)
                    .unwrap()
                    .iter()
                    .map(|t| mobius_closed(r, t).unwrap())
                    .sum();
                assert_eq!(sum, 0, "R={r} S={s}");
            }
        }
    }
}

#[test]
fn homology_euler_matches_chain_count() {
    for n in 0..=3 {
        let all = orders(n);
        for r in &all {
            for s in all.iter().filter(|s| r.is_proper_subset(s)) {
                let iv = IntervalSpec::new(*r, *s).unwrap();
                let h = reduced_homology(&interval_complex(&iv).unwrap());
                assert_eq!(
                    h.euler_characteristic(),
                    open_interval_euler(&iv).unwrap(),
                    "R={r} S={s}"
                );
            }
        }
    }
}
