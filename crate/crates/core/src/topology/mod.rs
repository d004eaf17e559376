//! Order complexes and their reduced integral homology.
//!
//! Homotopy equivalences are not checked directly. What is checked is
//! reduced homology over the integers (so spheres must be torsion-free) and,
//! for the contractible branch of an interval, an explicit conical
//! contraction.

mod complex;
mod smith;

pub use complex::{order_complex, SimplicialComplex};
pub use smith::{rational_rank, smith_normal_form, IntMatrix, SmithForm};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{OmegaError, Result};
use crate::omega::{frattini, interval_orders, IntervalSpec, Openness};
use crate::relation::{OrderRelation, Relation};

/// `H̃_k` for a single `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub dim: isize,
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology in every dimension from -1 to the top dimension of the
/// complex. Dimensions past the end are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn groups(&self) -> &[HomologyGroup] {
        &self.groups
    }

    pub fn group(&self, dim: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }

    pub fn free_rank(&self, dim: isize) -> usize {
        self.group(dim).map_or(0, |g| g.free_rank)
    }

    /// `Σ (-1)^k rank H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| {
                if g.dim.rem_euclid(2) == 0 {
                    g.free_rank as i64
                } else {
                    -(g.free_rank as i64)
                }
            })
            .sum()
    }

    /// `[{"dim": k, "free_rank": r, "torsion": [..]}, ..]`. Torsion
    /// coefficients that do not fit in a `u64` are written as strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.groups
                .iter()
                .map(|g| {
                    let torsion: Vec<Value> = g
                        .torsion
                        .iter()
                        .map(|t| match u64::try_from(t) {
                            Ok(v) => json!(v),
                            Err(_) => json!(t.to_string()),
                        })
                        .collect();
                    json!({ "dim": g.dim, "free_rank": g.free_rank, "torsion": torsion })
                })
                .collect(),
        )
    }
}

/// `H̃_d = Z` and every other group vanishes. `d = -1` is the empty complex.
pub fn is_sphere_profile(h: &HomologyProfile, d: isize) -> bool {
    h.group(d).is_some()
        && h.groups.iter().all(|g| {
            if g.dim == d {
                g.free_rank == 1 && g.torsion.is_empty()
            } else {
                g.is_zero()
            }
        })
}

pub fn is_trivial_profile(h: &HomologyProfile) -> bool {
    h.groups.iter().all(HomologyGroup::is_zero)
}

/// Side results of a homology computation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyAudit {
    /// `∂_{k-1} ∘ ∂_k = 0` for every `k`.
    pub boundary_squares_vanish: bool,
    /// Number of boundary matrices whose Smith form was re-checked.
    pub matrices_checked: usize,
    pub smith_failures: Vec<String>,
}

impl HomologyAudit {
    pub fn passed(&self) -> bool {
        self.boundary_squares_vanish && self.smith_failures.is_empty()
    }
}

fn homology_impl(c: &SimplicialComplex, recheck_smith: bool) -> (HomologyProfile, HomologyAudit) {
    let top = c.dimension();
    let mut audit = HomologyAudit {
        boundary_squares_vanish: true,
        ..Default::default()
    };
    // boundaries[k] = ∂_k for k = 0..=top+1
    let boundaries: Vec<IntMatrix> = (0..=(top + 1) as usize)
        .map(|k| c.boundary_matrix(k))
        .collect();
    for k in 1..boundaries.len() {
        if !boundaries[k - 1].mul(&boundaries[k]).is_zero() {
            audit.boundary_squares_vanish = false;
        }
    }
    let forms: Vec<SmithForm> = boundaries.iter().map(smith_normal_form).collect();
    if recheck_smith {
        for (k, (m, f)) in boundaries.iter().zip(&forms).enumerate() {
            audit.matrices_checked += 1;
            if let Err(e) = f.check_against(m) {
                audit.smith_failures.push(format!("boundary {k}: {e}"));
            }
        }
    }
    let chain_rank = |d: isize| if d < 0 { 1 } else { c.count(d as usize) };
    let boundary_rank = |d: isize| if d < 0 { 0 } else { forms[d as usize].rank() };
    let groups = (-1..=top)
        .map(|d| {
            let next = &forms[(d + 1) as usize];
            HomologyGroup {
                dim: d,
                free_rank: chain_rank(d) - boundary_rank(d) - next.rank(),
                torsion: next.torsion(),
            }
        })
        .collect();
    (HomologyProfile { groups }, audit)
}

/// Reduced integral homology of the augmented chain complex. The empty
/// complex has `H̃_{-1} = Z`.
pub fn reduced_homology(c: &SimplicialComplex) -> HomologyProfile {
    let (profile, audit) = homology_impl(c, false);
    assert!(
        audit.boundary_squares_vanish,
        "boundary of boundary is nonzero"
    );
    profile
}

/// As [`reduced_homology`], additionally re-checking every Smith form
/// against its matrix.
pub fn reduced_homology_audited(c: &SimplicialComplex) -> (HomologyProfile, HomologyAudit) {
    homology_impl(c, true)
}

fn subset_leq(a: &OrderRelation, b: &OrderRelation) -> bool {
    a.is_subset(b)
}

/// Order complex of `]R, S[`.
pub fn interval_complex(iv: &IntervalSpec) -> Result<SimplicialComplex> {
    let members = interval_orders(iv, Openness::Open)?;
    order_complex(&members, subset_leq)
}

/// Order complex of the given orders under inclusion.
pub fn inclusion_complex(orders: &[OrderRelation]) -> Result<SimplicialComplex> {
    order_complex(orders, subset_leq)
}

/// Whether `Φ(S) ⊆ R`.
pub fn frattini_below(iv: &IntervalSpec) -> bool {
    frattini(iv.upper()).is_subset(iv.lower())
}

/// Predicted homotopy type of `]R, S[` for `R ⊂ S`: a sphere of dimension
/// `|S - R| - 2` when `Φ(S) ⊆ R`, otherwise contractible (`None`).
pub fn predicted_sphere_dimension(iv: &IntervalSpec) -> Option<isize> {
    frattini_below(iv).then(|| iv.rank() as isize - 2)
}

/// Outcome of checking `T ↦ closure(T ∪ Φ(S))` as a conical contraction of
/// `]R, S[`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicalCertificate {
    pub cone_point: Relation,
    pub elements_checked: usize,
    pub counterexample: Option<String>,
}

impl ConicalCertificate {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks, over every `T ∈ ]R, S[`, that `f(T) = closure(T ∪ Φ(S))` lies in
/// `]R, S[`, that `T ⊆ f(T)`, that `f` is monotone, and that
/// `c0 = closure(R ∪ Φ(S))` lies in `]R, S[` below every `f(T)`.
///
/// Fails with a precondition error when `Φ(S) ⊆ R`.
pub fn conical_certificate(iv: &IntervalSpec) -> Result<ConicalCertificate> {
    let phi = frattini(iv.upper());
    if phi.is_subset(iv.lower()) {
        return Err(OmegaError::Precondition(
            "Frattini subrelation of the upper bound lies in the lower bound".into(),
        ));
    }
    let members = interval_orders(iv, Openness::Open)?;
    let f = |t: &Relation| t.union_unchecked(&phi).transitive_closure();
    let in_open = |t: &Relation| {
        t.is_order() && iv.lower().is_proper_subset(t) && t.is_proper_subset(iv.upper())
    };
    let cone_point = f(iv.lower());
    let mut cert = ConicalCertificate {
        cone_point,
        elements_checked: members.len(),
        counterexample: None,
    };
    if !in_open(&cone_point) {
        cert.counterexample = Some(format!(
            "cone point {cone_point} is not in the open interval"
        ));
        return Ok(cert);
    }
    let images: Vec<Relation> = members.iter().map(|t| f(t.relation())).collect();
    for (t, ft) in members.iter().zip(&images) {
        let problem = if !in_open(ft) {
            Some("f(T) is not in the open interval")
        } else if !t.relation().is_subset(ft) {
            Some("T is not contained in f(T)")
        } else if !cone_point.is_subset(ft) {
            Some("cone point is not below f(T)")
        } else {
            None
        };
        if let Some(p) = problem {
            cert.counterexample = Some(format!("{p}: T = {t}, f(T) = {ft}"));
            return Ok(cert);
        }
    }
    for (i, t) in members.iter().enumerate() {
        for (j, u) in members.iter().enumerate() {
            if t.is_subset(u) && !images[i].is_subset(&images[j]) {
                cert.counterexample = Some(format!("f is not monotone on {t} <= {u}"));
                return Ok(cert);
            }
        }
    }
    Ok(cert)
}

/// Outcome of comparing `]R, S[` with the proper non-empty subsets of
/// `S - R` when `Φ(S) ⊆ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanModel {
    pub free_pairs: usize,
    /// Every `R ∪ B` with `B ⊆ S - R` is an order.
    pub every_subset_is_order: bool,
    /// `T ↦ T - R` identifies the order complex of `]R, S[` with the order
    /// complex of proper non-empty subsets of `S - R`, vertex for vertex.
    pub complex_isomorphic: bool,
}

impl BooleanModel {
    pub fn holds(&self) -> bool {
        self.every_subset_is_order && self.complex_isomorphic
    }
}

/// Fails with a precondition error when `Φ(S) ⊄ R`.
pub fn boolean_model(iv: &IntervalSpec) -> Result<BooleanModel> {
    if !frattini_below(iv) {
        return Err(OmegaError::Precondition(
            "Frattini subrelation of the upper bound is not in the lower bound".into(),
        ));
    }
    let free: Vec<_> = iv.free_pairs().pairs().collect();
    let k = free.len();
    if k > 16 {
        return Err(OmegaError::Precondition(format!(
            "{k} free pairs is too many to model"
        )));
    }
    let union_of = |mask: u32| {
        let mut t = *iv.lower().relation();
        for (i, &(x, y)) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t = t.with_pair(x, y).unwrap();
            }
        }
        t
    };
    let full: u32 = (1 << k) - 1;
    let every_subset_is_order = (0..=full).all(|m| union_of(m).is_order());

    let masks: Vec<u32> = (1..full).collect();
    let members = interval_orders(iv, Openness::Open)?;
    let mut by_mask: Vec<OrderRelation> = Vec::with_capacity(masks.len());
    let mut complex_isomorphic = members.len() == masks.len();
    if complex_isomorphic {
        for &m in &masks {
            match members.iter().find(|t| *t.relation() == union_of(m)) {
                Some(t) => by_mask.push(*t),
                None => {
                    complex_isomorphic = false;
                    break;
                }
            }
        }
    }
    if complex_isomorphic {
        let from_orders = inclusion_complex(&by_mask)?;
        let from_subsets = order_complex(&masks, |a, b| a & !b == 0)?;
        complex_isomorphic = from_orders == from_subsets;
    }
    Ok(BooleanModel {
        free_pairs: k,
        every_subset_is_order,
        complex_isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{GroundSet, Pair};

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn ord(n: usize, pairs: &[Pair]) -> OrderRelation {
        OrderRelation::from_strict_pairs(g(n), pairs.iter().copied()).unwrap()
    }

    fn profile(c: &SimplicialComplex) -> HomologyProfile {
        let (h, audit) = reduced_homology_audited(c);
        assert!(audit.passed(), "{audit:?}");
        h
    }

    #[test]
    fn homology_examples() {
        let point = SimplicialComplex::generated_by(1, [vec![0]]).unwrap();
        assert!(is_trivial_profile(&profile(&point)));
        assert!(!is_sphere_profile(&profile(&point), 0));

        let circle =
            SimplicialComplex::generated_by(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let h = profile(&circle);
        assert!(is_sphere_profile(&h, 1));
        assert_eq!(circle.boundary_matrix(1).to_dense().len(), 3);
        assert_eq!(smith_normal_form(&circle.boundary_matrix(1)).rank(), 2);

        let empty = SimplicialComplex::empty(0);
        let h = profile(&empty);
        assert!(is_sphere_profile(&h, -1));
        assert_eq!(h.groups().len(), 1);

        let two_points = SimplicialComplex::generated_by(2, [vec![0], vec![1]]).unwrap();
        assert!(is_sphere_profile(&profile(&two_points), 0));
    }

    #[test]
    fn projective_plane_has_torsion() {
        // 6-vertex triangulation of RP^2
        let facets = [
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 4, 5],
            [2, 3, 5],
            [3, 4, 5],
        ];
        let rp2 = SimplicialComplex::generated_by(6, facets.iter().map(|f| f.to_vec())).unwrap();
        let h = profile(&rp2);
        assert_eq!(h.free_rank(0), 0);
        assert_eq!(h.free_rank(1), 0);
        assert_eq!(h.group(1).unwrap().torsion, vec![BigInt::from(2)]);
        assert!(h.group(2).unwrap().is_zero());
        assert!(!is_trivial_profile(&h));
        assert_eq!(h.to_json()[2]["torsion"], json!([2]));
    }

    #[test]
    fn certificate_on_chain_intervals() {
        let d3 = OrderRelation::discrete(g(3));
        let cert = conical_certificate(&IntervalSpec::new(d3, OrderRelation::chain(g(3))).unwrap())
            .unwrap();
        assert!(cert.passed());
        assert_eq!(
            cert.cone_point,
            Relation::reflexive_from_pairs(g(3), [(0, 2)]).unwrap()
        );
        assert_eq!(cert.elements_checked, 5);

        let d4 = OrderRelation::discrete(g(4));
        let cert = conical_certificate(&IntervalSpec::new(d4, OrderRelation::chain(g(4))).unwrap())
            .unwrap();
        assert!(cert.passed());
    }

    #[test]
    fn certificate_rejects_sphere_branch() {
        let v =
            IntervalSpec::new(OrderRelation::discrete(g(3)), ord(3, &[(0, 1), (2, 1)])).unwrap();
        assert!(matches!(
            conical_certificate(&v),
            Err(OmegaError::Precondition(_))
        ));
        let m = boolean_model(&v).unwrap();
        assert!(m.holds());
        assert_eq!(m.free_pairs, 2);
        let h = reduced_homology(&interval_complex(&v).unwrap());
        assert!(is_sphere_profile(&h, 0));
        assert_eq!(predicted_sphere_dimension(&v), Some(0));
    }
}
