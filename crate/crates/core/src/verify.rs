//! Exhaustive checks of the structural results about Ω at a fixed `n`.
//!
//! Each suite compares closed-form answers against independent evaluations
//! (brute-force enumeration, recursions, chain counts, integral homology)
//! and records every disagreement.

use std::fmt::{Debug, Display};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{classify_upper, e_set, UpperIntervalClass};
use crate::error::{OmegaError, Result};
use crate::moebius::{mobius_closed, mobius_recursive, open_interval_euler};
use crate::omega::{
    adjacent_pairs, covers_above, enumerate_orders, frattini_by_adjacency, frattini_by_formula,
    interval_orders, maximal_subrelations, minimal_missing_pairs_by_condition,
    minimal_missing_pairs_direct, orders_above, EnumerationCap, IntervalSpec, Openness, Strategy,
};
use crate::relation::{GroundSet, OrderRelation, Relation};
use crate::topology::{
    boolean_model, conical_certificate, frattini_below, inclusion_complex, interval_complex,
    is_sphere_profile, is_trivial_profile, reduced_homology_audited, SimplicialComplex,
};

/// Largest `n` accepted by [`run_suite`].
pub const MAX_VERIFY_N: usize = 4;

/// Largest `n` at which homology suites compute full homology by default.
pub const FULL_HOMOLOGY_N: usize = 3;

/// Largest `n` at which meet/join laws are checked on every interval.
pub const LATTICE_LAW_N: usize = 3;

/// Minimum number of intervals given full homology at `n = 4`.
pub const HOMOLOGY_SELECTION: usize = 500;

/// |Ω_n| for n = 0..=5, from a brute-force subset scan.
pub const OMEGA_COUNTS: [usize; 6] = [1, 1, 3, 19, 219, 4231];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Mobius,
    Intervals,
    Covers,
    Upper,
    Global,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Mobius => "mobius",
            Suite::Intervals => "intervals",
            Suite::Covers => "covers",
            Suite::Upper => "upper",
            Suite::Global => "global",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = OmegaError;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::All,
            Suite::Mobius,
            Suite::Intervals,
            Suite::Covers,
            Suite::Upper,
            Suite::Global,
        ]
        .into_iter()
        .find(|suite| suite.name() == s)
        .ok_or_else(|| OmegaError::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Full homology everywhere, even where Euler characteristics suffice.
    pub exhaustive: bool,
    /// Replace the deterministic homology selection at `n = 4` by a seeded
    /// random sample of this size.
    pub sample: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    pub checks_run: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn expect<T: PartialEq + Debug>(
        &mut self,
        check: &str,
        inputs: impl Display,
        expected: T,
        got: T,
    ) {
        self.checks += 1;
        if expected != got {
            self.failures.push(Failure {
                check: check.to_string(),
                inputs: inputs.to_string(),
                expected: format!("{expected:?}"),
                got: format!("{got:?}"),
            });
        }
    }

    fn holds(&mut self, check: &str, inputs: impl Display, ok: bool) {
        self.expect(check, inputs, true, ok);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    /// Audits a complex and returns its homology; records `∂∂ = 0` and the
    /// Smith-form post-conditions as checks.
    fn homology_of(
        &mut self,
        c: &SimplicialComplex,
        inputs: &str,
    ) -> crate::topology::HomologyProfile {
        let (h, audit) = reduced_homology_audited(c);
        self.holds(
            "boundary-squared-zero",
            inputs,
            audit.boundary_squares_vanish,
        );
        self.checks += audit.matrices_checked;
        for f in audit.smith_failures {
            self.failures.push(Failure {
                check: "smith-postconditions".into(),
                inputs: inputs.to_string(),
                expected: "valid Smith form".into(),
                got: f,
            });
        }
        h
    }
}

fn sign(k: isize) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn pair_label(r: &OrderRelation, s: &OrderRelation) -> String {
    format!("R={r} S={s}")
}

struct Context {
    n: usize,
    orders: Vec<OrderRelation>,
    options: VerifyOptions,
}

impl Context {
    fn comparable_pairs(&self, strict: bool) -> Vec<(OrderRelation, OrderRelation)> {
        let mut out = Vec::new();
        for r in &self.orders {
            for s in &self.orders {
                if r.is_subset(s) && !(strict && r == s) {
                    out.push((*r, *s));
                }
            }
        }
        out
    }

    fn full_homology(&self) -> bool {
        self.options.exhaustive || self.n <= FULL_HOMOLOGY_N
    }
}

pub fn run_suite(n: usize, suite: Suite, options: &VerifyOptions) -> Result<VerifyReport> {
    if n > MAX_VERIFY_N {
        return Err(OmegaError::EnumerationCap {
            n,
            cap: MAX_VERIFY_N,
        });
    }
    let ctx = Context {
        n,
        orders: enumerate_orders(n, Strategy::Brute, EnumerationCap::DEFAULT)?,
        options: options.clone(),
    };
    let tally = match suite {
        Suite::All => covers_suite(&ctx)?
            .merge(mobius_suite(&ctx)?)
            .merge(intervals_suite(&ctx)?)
            .merge(upper_suite(&ctx)?)
            .merge(global_suite(&ctx)?),
        Suite::Mobius => mobius_suite(&ctx)?,
        Suite::Intervals => intervals_suite(&ctx)?,
        Suite::Covers => covers_suite(&ctx)?,
        Suite::Upper => upper_suite(&ctx)?,
        Suite::Global => global_suite(&ctx)?,
    };
    let mut failures = tally.failures;
    failures.sort();
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        n,
        checks_run: tally.checks,
        failures,
    })
}

fn collect<I, F>(items: I, f: F) -> Result<Tally>
where
    I: IntoParallelIterator,
    F: Fn(I::Item) -> Result<Tally> + Sync + Send,
{
    items
        .into_par_iter()
        .map(f)
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

/// Enumeration, covers, minimal missing pairs, Frattini, lattice laws.
fn covers_suite(ctx: &Context) -> Result<Tally> {
    let mut t = Tally::default();
    let n = ctx.n;
    let by_covers = enumerate_orders(n, Strategy::Covers, EnumerationCap::DEFAULT)?;
    t.expect(
        "enumeration-agreement",
        format!("n={n}"),
        &ctx.orders,
        &by_covers,
    );
    t.expect(
        "enumeration-count",
        format!("n={n}"),
        OMEGA_COUNTS[n],
        ctx.orders.len(),
    );

    let per_order = collect(&ctx.orders, |r| {
        let mut t = Tally::default();
        let label = format!("R={r}");

        // covers: orders S ⊋ R with empty open interval
        let mut brute: Vec<OrderRelation> = ctx
            .orders
            .iter()
            .filter(|s| r.is_proper_subset(s))
            .filter(|s| {
                let iv = IntervalSpec::new(*r, **s).unwrap();
                interval_orders(&iv, Openness::Open).unwrap().is_empty()
            })
            .copied()
            .collect();
        brute.sort();
        let mut got = covers_above(r);
        got.sort();
        t.expect("covers", &label, brute, got);

        let direct = minimal_missing_pairs_direct(r);
        t.expect(
            "minimal-pairs-agreement",
            &label,
            direct,
            minimal_missing_pairs_by_condition(r),
        );
        t.expect("minimal-pairs-e-set", &label, direct, e_set(r).pairs);

        let meet_of_maximals = maximal_subrelations(r)
            .iter()
            .fold(*r.relation(), |acc, m| acc.intersection(m).unwrap());
        let formula = frattini_by_formula(r);
        t.expect("frattini-intersection", &label, formula, meet_of_maximals);
        t.expect(
            "frattini-adjacency",
            &label,
            formula,
            frattini_by_adjacency(r),
        );
        Ok(t)
    })?;
    t = t.merge(per_order);

    let per_pair = collect(ctx.comparable_pairs(false), |(r, s)| {
        let mut t = Tally::default();
        let label = pair_label(&r, &s);
        // M_S ∩ T ⊆ M_T for T ⊆ S
        let m_s = adjacent_pairs(&s).pairs;
        let m_r = adjacent_pairs(&r).pairs;
        t.holds(
            "adjacent-heredity",
            &label,
            m_s.intersection(&r).unwrap().is_subset(&m_r),
        );

        if ctx.n > LATTICE_LAW_N {
            return Ok(t);
        }
        let iv = IntervalSpec::new(r, s)?;
        let members = interval_orders(&iv, Openness::Closed)?;
        for a in &members {
            for b in &members {
                let meet = iv.meet(a, b)?;
                let join = iv.join(a, b)?;
                let ok = meet == iv.meet(b, a)?
                    && join == iv.join(b, a)?
                    && iv.meet(a, &join)? == *a
                    && iv.join(a, &meet)? == *a;
                t.checks += 1;
                if !ok {
                    t.failures.push(Failure {
                        check: "lattice-laws".into(),
                        inputs: format!("{label} T={a} U={b}"),
                        expected: "commutative and absorptive".into(),
                        got: format!("meet={meet} join={join}"),
                    });
                }
            }
        }
        Ok(t)
    })?;
    Ok(t.merge(per_pair))
}

/// Closed form = recursion = reduced Euler characteristic, and row sums.
fn mobius_suite(ctx: &Context) -> Result<Tally> {
    collect(ctx.comparable_pairs(false), |(r, s)| {
        let mut t = Tally::default();
        let label = pair_label(&r, &s);
        let closed = mobius_closed(&r, &s)?;
        t.expect(
            "mobius-recursive",
            &label,
            closed,
            mobius_recursive(&r, &s)?,
        );
        if r != s {
            let iv = IntervalSpec::new(r, s)?;
            t.expect("mobius-euler", &label, closed, open_interval_euler(&iv)?);
            let mut row_sum = 0;
            for u in interval_orders(&iv, Openness::Closed)? {
                row_sum += mobius_closed(&r, &u)?;
            }
            t.expect("mobius-row-sum", &label, 0, row_sum);
        }
        Ok(t)
    })
}

/// Indices of the strict pairs that get full homology at `n = 4`.
fn homology_selection(total: usize, options: &VerifyOptions) -> Vec<bool> {
    let mut chosen = vec![false; total];
    if options.exhaustive {
        chosen.iter_mut().for_each(|c| *c = true);
    } else if let Some(k) = options.sample {
        let mut idx: Vec<usize> = (0..total).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        idx.shuffle(&mut rng);
        for &i in idx.iter().take(k) {
            chosen[i] = true;
        }
    } else {
        let stride = (total / HOMOLOGY_SELECTION).max(1);
        for i in (0..total).step_by(stride) {
            chosen[i] = true;
        }
    }
    chosen
}

/// Branch structure and homotopy type of every open interval `]R, S[`.
fn intervals_suite(ctx: &Context) -> Result<Tally> {
    let pairs = ctx.comparable_pairs(true);
    let chosen = if ctx.full_homology() {
        vec![true; pairs.len()]
    } else {
        homology_selection(pairs.len(), &ctx.options)
    };
    collect(
        pairs.into_iter().zip(chosen).collect::<Vec<_>>(),
        |((r, s), full)| {
            let mut t = Tally::default();
            let label = pair_label(&r, &s);
            let iv = IntervalSpec::new(r, s)?;
            let sphere = frattini_below(&iv);
            let dim = iv.rank() as isize - 2;
            if sphere {
                let model = boolean_model(&iv)?;
                t.holds(
                    "boolean-subsets-are-orders",
                    &label,
                    model.every_subset_is_order,
                );
                t.holds(
                    "boolean-complex-isomorphism",
                    &label,
                    model.complex_isomorphic,
                );
            } else {
                let cert = conical_certificate(&iv)?;
                t.expect("conical-certificate", &label, None, cert.counterexample);
            }
            let expected_euler = if sphere { sign(dim) } else { 0 };
            t.expect(
                "interval-euler",
                &label,
                expected_euler,
                open_interval_euler(&iv)?,
            );
            if full {
                let h = t.homology_of(&interval_complex(&iv)?, &label);
                if sphere {
                    t.holds(
                        &format!("interval-sphere-{dim}"),
                        &label,
                        is_sphere_profile(&h, dim),
                    );
                } else {
                    t.holds("interval-contractible", &label, is_trivial_profile(&h));
                }
            }
            Ok(t)
        },
    )
}

/// Upper-interval classification against homology or Euler characteristic.
fn upper_suite(ctx: &Context) -> Result<Tally> {
    collect(&ctx.orders, |r| {
        let mut t = Tally::default();
        let label = format!("R={r}");
        let e = e_set(r);
        if e.is_symmetric() {
            let eq = e.pairs.union(&Relation::identity(r.ground())).unwrap();
            t.holds("e-set-equivalence", &label, eq.is_equivalence());
        }
        let class = classify_upper(r);
        let above = orders_above(r);
        let complex = inclusion_complex(&above)?;
        if ctx.full_homology() {
            let h = t.homology_of(&complex, &label);
            match &class {
                UpperIntervalClass::Contractible { .. } => {
                    t.holds("upper-contractible", &label, is_trivial_profile(&h))
                }
                UpperIntervalClass::Sphere { dimension, .. } => t.holds(
                    &format!("upper-sphere-{dimension}"),
                    &label,
                    is_sphere_profile(&h, *dimension),
                ),
            }
        } else {
            let expected = class.sphere_dimension().map_or(0, sign);
            t.expect(
                "upper-euler",
                &label,
                expected,
                complex.reduced_euler_characteristic(),
            );
        }
        Ok(t)
    })
}

/// `Ω_n - {Δ}` is a sphere of dimension `n - 2`.
fn global_suite(ctx: &Context) -> Result<Tally> {
    let mut t = Tally::default();
    for m in 1..=5 {
        let delta = OrderRelation::discrete(GroundSet::new(m)?);
        t.expect(
            "discrete-classification",
            format!("n={m}"),
            Some(m as isize - 2),
            classify_upper(&delta).sphere_dimension(),
        );
    }
    let n = ctx.n;
    if n == 0 {
        return Ok(t);
    }
    let delta = OrderRelation::discrete(GroundSet::new(n)?);
    let nontrivial: Vec<OrderRelation> = ctx
        .orders
        .iter()
        .filter(|o| **o != delta)
        .copied()
        .collect();
    let complex = inclusion_complex(&nontrivial)?;
    let label = format!("n={n}");
    let dim = n as isize - 2;
    if ctx.full_homology() {
        let h = t.homology_of(&complex, &label);
        t.holds(
            &format!("global-sphere-{dim}"),
            &label,
            is_sphere_profile(&h, dim),
        );
    } else {
        t.expect(
            "global-euler",
            &label,
            sign(dim),
            complex.reduced_euler_characteristic(),
        );
    }
    Ok(t)
}
