//! Finite posets given by an element list and a comparison predicate.

use crate::error::{OmegaError, Result};

/// A validated finite poset on indices `0..len`.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    len: usize,
    // less[i * len + j] <=> i < j
    less: Vec<bool>,
    linear: Vec<usize>,
}

impl FinitePoset {
    /// Checks that `leq` restricted to `elements` is reflexive, antisymmetric
    /// and transitive. Distinct positions are distinct elements.
    pub fn from_predicate<T, F>(elements: &[T], leq: F) -> Result<Self>
    where
        F: Fn(&T, &T) -> bool,
    {
        let len = elements.len();
        let mut less = vec![false; len * len];
        for (i, a) in elements.iter().enumerate() {
            if !leq(a, a) {
                return Err(OmegaError::InvalidPoset(format!(
                    "element {i} is not <= itself"
                )));
            }
            for (j, b) in elements.iter().enumerate() {
                if i != j && leq(a, b) {
                    less[i * len + j] = true;
                }
            }
        }
        for i in 0..len {
            for j in (i + 1)..len {
                if less[i * len + j] && less[j * len + i] {
                    return Err(OmegaError::InvalidPoset(format!(
                        "elements {i} and {j} are mutually <="
                    )));
                }
            }
        }
        for i in 0..len {
            for j in 0..len {
                if !less[i * len + j] {
                    continue;
                }
                for k in 0..len {
                    if less[j * len + k] && !less[i * len + k] {
                        return Err(OmegaError::InvalidPoset(format!(
                            "{i} < {j} < {k} but not {i} < {k}"
                        )));
                    }
                }
            }
        }
        // Strict down-sets grow along any chain, so sorting by their size
        // gives a linear extension.
        let mut linear: Vec<usize> = (0..len).collect();
        linear.sort_by_key(|&j| ((0..len).filter(|&i| less[i * len + j]).count(), j));
        Ok(FinitePoset { len, less, linear })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[i * self.len + j]
    }

    /// Indices listed so that `i < j` implies `i` comes first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// Sum over all chains (including the empty one) of `(-1)^(k-1)` where
    /// `k` is the number of elements in the chain. The empty poset gives -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        // signed[x] = Σ over chains with top x of (-1)^(k-1)
        let mut signed = vec![0i64; self.len];
        for &x in &self.linear {
            let below: i64 = (0..self.len)
                .filter(|&y| self.lt(y, x))
                .map(|y| signed[y])
                .sum();
            signed[x] = 1 - below;
        }
        signed.iter().sum::<i64>() - 1
    }

    /// Every non-empty chain, as index lists sorted ascending.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for &x in &self.linear {
            stack.push(x);
            self.extend_chains(&mut stack, &mut out);
            stack.pop();
        }
        for c in &mut out {
            c.sort_unstable();
        }
        out
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(stack.clone());
        let top = *stack.last().unwrap();
        for &y in &self.linear {
            if self.lt(top, y) {
                stack.push(y);
                self.extend_chains(stack, out);
                stack.pop();
            }
        }
    }
}
