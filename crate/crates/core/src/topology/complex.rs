use std::collections::{BTreeSet, HashMap};

use crate::error::{OmegaError, Result};
use crate::poset::FinitePoset;
use crate::topology::smith::IntMatrix;

/// A finite abstract simplicial complex. Simplices are strictly increasing
/// vertex lists; `simplices[k]` holds the `k`-simplices in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            simplices: Vec::new(),
        }
    }

    /// Validates and stores the given simplices. Every face of every simplex
    /// must be present.
    pub fn new<I>(vertex_count: usize, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for s in simplices {
            if s.is_empty() {
                return Err(OmegaError::InvalidComplex("empty simplex".into()));
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(OmegaError::InvalidComplex(format!(
                    "{s:?} is not strictly increasing"
                )));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(OmegaError::InvalidComplex(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
            let k = s.len() - 1;
            if by_dim.len() <= k {
                by_dim.resize_with(k + 1, BTreeSet::new);
            }
            by_dim[k].insert(s);
        }
        for k in 1..by_dim.len() {
            for s in &by_dim[k] {
                for i in 0..s.len() {
                    let face = drop_vertex(s, i);
                    if !by_dim[k - 1].contains(&face) {
                        return Err(OmegaError::InvalidComplex(format!(
                            "face {face:?} of {s:?} is missing"
                        )));
                    }
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            simplices: by_dim
                .into_iter()
                .map(|set| set.into_iter().collect())
                .collect(),
        })
    }

    /// The smallest complex containing every given facet.
    pub fn generated_by<I>(vertex_count: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut all = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if f.len() > 20 {
                return Err(OmegaError::InvalidComplex(
                    "facet too large to expand".into(),
                ));
            }
            for mask in 1u32..1 << f.len() {
                all.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect::<Vec<_>>(),
                );
            }
        }
        Self::new(vertex_count, all)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn total_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// `Σ (-1)^k f_k` over `k >= -1`, counting the empty simplex once.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| {
                if k % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum::<i64>()
            - 1
    }

    /// Augmented boundary map `∂_k : C_k -> C_{k-1}`. Rows index the
    /// `(k-1)`-simplices (a single row for the empty simplex when `k = 0`),
    /// columns the `k`-simplices. Deleting the vertex at position `i`
    /// contributes `(-1)^i`.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        let cols = self.simplices(k);
        if k == 0 {
            return IntMatrix::from_entries(1, cols.len(), (0..cols.len()).map(|j| (0, j, 1)));
        }
        let faces = self.simplices(k - 1);
        let index: HashMap<&[usize], usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut entries = Vec::with_capacity(cols.len() * (k + 1));
        for (j, s) in cols.iter().enumerate() {
            for i in 0..s.len() {
                let face = drop_vertex(s, i);
                let row = index[face.as_slice()];
                entries.push((row, j, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        IntMatrix::from_entries(faces.len(), cols.len(), entries)
    }

    /// One line per dimension: `{"dim": k, "simplices": [[..], ..]}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.simplices.iter().enumerate() {
            let line = serde_json::json!({ "dim": k, "simplices": s });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

fn drop_vertex(s: &[usize], i: usize) -> Vec<usize> {
    s.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &v)| v)
        .collect()
}

/// The order complex: vertex `i` is `elements[i]`, simplices are chains.
pub fn order_complex<T, F>(elements: &[T], leq: F) -> Result<SimplicialComplex>
where
    F: Fn(&T, &T) -> bool,
{
    let poset = FinitePoset::from_predicate(elements, leq)?;
    Ok(complex_of_poset(&poset))
}

pub(crate) fn complex_of_poset(poset: &FinitePoset) -> SimplicialComplex {
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    for chain in poset.chains() {
        let k = chain.len() - 1;
        if by_dim.len() <= k {
            by_dim.resize_with(k + 1, Vec::new);
        }
        by_dim[k].push(chain);
    }
    for level in &mut by_dim {
        level.sort_unstable();
    }
    SimplicialComplex {
        vertex_count: poset.len(),
        simplices: by_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_complex_examples() {
        let none: [u32; 0] = [];
        let c = order_complex(&none, |a, b| a == b).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.dimension(), -1);

        let two = order_complex(&[1u32, 2], |a, b| a & !b == 0).unwrap();
        assert_eq!(two.simplices(0), &[vec![0], vec![1]]);
        assert_eq!(two.count(1), 0);

        let hexagon = order_complex(&[1u32, 2, 4, 3, 5, 6], |a, b| a & !b == 0).unwrap();
        assert_eq!(hexagon.count(0), 6);
        assert_eq!(hexagon.count(1), 6);
        assert_eq!(hexagon.dimension(), 1);
        assert_eq!(hexagon.reduced_euler_characteristic(), -1);
    }

    #[test]
    fn edge_boundary() {
        let edge = SimplicialComplex::generated_by(2, [vec![0, 1]]).unwrap();
        assert_eq!(edge.boundary_matrix(1).to_dense(), vec![vec![-1], vec![1]]);
        assert_eq!(edge.boundary_matrix(0).to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let tetra = SimplicialComplex::generated_by(4, [vec![0, 1, 2, 3]]).unwrap();
        for k in 1..=3 {
            assert!(tetra
                .boundary_matrix(k - 1)
                .mul(&tetra.boundary_matrix(k))
                .is_zero());
        }
    }

    #[test]
    fn validation() {
        assert!(SimplicialComplex::new(3, [vec![0, 1]]).is_err());
        assert!(SimplicialComplex::new(3, [vec![1, 0]]).is_err());
        assert!(SimplicialComplex::new(2, [vec![0], vec![5]]).is_err());
        let ok = SimplicialComplex::new(2, [vec![0], vec![1], vec![0, 1], vec![0]]).unwrap();
        assert_eq!(ok.total_count(), 3);
    }

    #[test]
    fn json_lines_dump() {
        let edge = SimplicialComplex::generated_by(2, [vec![0, 1]]).unwrap();
        assert_eq!(
            edge.to_json_lines(),
            "{\"dim\":0,\"simplices\":[[0],[1]]}\n{\"dim\":1,\"simplices\":[[0,1]]}\n"
        );
    }
}
