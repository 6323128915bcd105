//! Realized matroids on labeled ground sets.
//!
//! Every matroid here is the column matroid of an exact matrix Q whose rows
//! span the annihilator of a subspace V: the rank of a subset S of the
//! ground set is the rank of the corresponding columns of Q, which equals
//! |S| - dim(V ∩ k^S). Circuits therefore come with kernel-vector
//! certificates, and all queries are exact.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::field::Field;
use crate::matrix::Matrix;

/// Advance to the next k-combination of {0, .., n-1} in lexicographic
/// order; returns false after the last one.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Ground sets above this size refuse circuit enumeration.
pub const CIRCUIT_GROUND_BOUND: usize = 24;

#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("ground set of size {size} exceeds the circuit-enumeration bound {bound}")]
    GroundTooLarge { size: usize, bound: usize },
    #[error("vector has length {got}, ground set has size {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("rank {k} out of range for a ground set of size {n}")]
    RankOutOfRange { k: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self, MatroidError> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(MatroidError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>, MatroidError> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| MatroidError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }
}

/// A total order on ground elements, listed from smallest to largest.
#[derive(Clone, Debug)]
pub struct TotalOrder {
    ascending: Vec<usize>,
    position: Vec<usize>,
}

impl TotalOrder {
    pub fn from_ascending(ascending: Vec<usize>) -> Self {
        let n = ascending.len();
        let mut position = vec![usize::MAX; n];
        for (rank, &el) in ascending.iter().enumerate() {
            assert!(el < n && position[el] == usize::MAX, "not a permutation");
            position[el] = rank;
        }
        TotalOrder { ascending, position }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_ascending((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.ascending.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ascending.is_empty()
    }

    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    /// Rank of an element: 0 is the smallest.
    pub fn position(&self, el: usize) -> usize {
        self.position[el]
    }

    pub fn reversed(&self) -> Self {
        Self::from_ascending(self.ascending.iter().rev().copied().collect())
    }

    pub fn min_of<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> Option<usize> {
        set.into_iter().copied().min_by_key(|&e| self.position(e))
    }
}

#[derive(Clone)]
pub struct Matroid<K> {
    ground: GroundSet,
    realization: Matrix<K>,
    rank_full: usize,
    circuits: OnceLock<Vec<BTreeSet<usize>>>,
}

impl<K: Field> Matroid<K> {
    /// The matroid of the subspace V spanned by the given vectors: the rank
    /// of S is |S| - dim(V ∩ k^S), realized by a matrix whose rows span the
    /// annihilator of V.
    pub fn from_subspace(
        ground: GroundSet,
        span_vectors: &[Vec<K>],
    ) -> Result<Self, MatroidError> {
        let n = ground.len();
        for v in span_vectors {
            if v.len() != n {
                return Err(MatroidError::DimensionMismatch { got: v.len(), want: n });
            }
        }
        let v_mat = if span_vectors.is_empty() {
            Matrix::zero(0, n)
        } else {
            Matrix::from_rows(span_vectors.to_vec())
        };
        let annihilator = v_mat.kernel_basis();
        let q = if annihilator.is_empty() {
            Matrix::zero(0, n)
        } else {
            Matrix::from_rows(annihilator)
        };
        Ok(Self::from_realization(ground, q))
    }

    /// Column matroid of an explicit realization matrix.
    pub fn from_realization(ground: GroundSet, realization: Matrix<K>) -> Self {
        assert_eq!(realization.cols(), ground.len());
        let rank_full = realization.rank();
        Matroid { ground, realization, rank_full, circuits: OnceLock::new() }
    }

    /// The uniform matroid U_{k,E}: every subset of size at most k is
    /// independent. Realized by a Vandermonde matrix on distinct integer
    /// nodes, which makes every k columns independent.
    pub fn uniform(k: usize, ground: GroundSet) -> Result<Self, MatroidError> {
        let n = ground.len();
        if k > n {
            return Err(MatroidError::RankOutOfRange { k, n });
        }
        let mut node_pows: Vec<K> = (0..n).map(|_| K::one()).collect();
        let q = Matrix::from_fn(k, n, |_, j| {
            let entry = node_pows[j].clone();
            node_pows[j] = node_pows[j].clone() * K::from_int(j as i64 + 1);
            entry
        });
        Ok(Self::from_realization(ground, q))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn realization(&self) -> &Matrix<K> {
        &self.realization
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.rank_full
    }

    pub fn rank_indices(&self, set: &[usize]) -> usize {
        self.realization.select_columns(set).rank()
    }

    pub fn rank_labels<S: AsRef<str>>(&self, set: &[S]) -> Result<usize, MatroidError> {
        Ok(self.rank_indices(&self.ground.resolve(set)?))
    }

    pub fn is_dependent_indices(&self, set: &[usize]) -> bool {
        self.rank_indices(set) < set.len()
    }

    pub fn is_dependent<S: AsRef<str>>(&self, set: &[S]) -> Result<bool, MatroidError> {
        Ok(self.is_dependent_indices(&self.ground.resolve(set)?))
    }

    /// Minimal dependent set: S is dependent and every proper subset is not.
    pub fn is_circuit_indices(&self, set: &[usize]) -> bool {
        if !self.is_dependent_indices(set) {
            return false;
        }
        (0..set.len()).all(|drop| {
            let sub: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &e)| e)
                .collect();
            !self.is_dependent_indices(&sub)
        })
    }

    pub fn is_circuit<S: AsRef<str>>(&self, set: &[S]) -> Result<bool, MatroidError> {
        Ok(self.is_circuit_indices(&self.ground.resolve(set)?))
    }

    /// A cycle is a union of circuits, equivalently a set in which no
    /// element is a coloop of the restriction: r(S \ {e}) = r(S) for all e.
    /// The empty set is a cycle.
    pub fn is_cycle_indices(&self, set: &[usize]) -> bool {
        let r = self.rank_indices(set);
        (0..set.len()).all(|drop| {
            let sub: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &e)| e)
                .collect();
            self.rank_indices(&sub) == r
        })
    }

    pub fn is_cycle<S: AsRef<str>>(&self, set: &[S]) -> Result<bool, MatroidError> {
        Ok(self.is_cycle_indices(&self.ground.resolve(set)?))
    }

    /// Elements of rank zero (zero columns of the realization).
    pub fn loops(&self) -> BTreeSet<usize> {
        (0..self.ground.len())
            .filter(|&j| {
                (0..self.realization.rows()).all(|i| self.realization[(i, j)].is_zero())
            })
            .collect()
    }

    /// Elements contained in no dependent set: r(E \ {e}) = r(E) - 1.
    pub fn coloops(&self) -> BTreeSet<usize> {
        (0..self.ground.len())
            .filter(|&j| {
                let rest: Vec<usize> = (0..self.ground.len()).filter(|&i| i != j).collect();
                self.rank_indices(&rest) + 1 == self.rank_full
            })
            .collect()
    }

    /// All circuits, by subset search in increasing size with containment
    /// pruning. Any circuit has size at most rank + 1. Results are cached.
    pub fn circuits(&self) -> Result<&[BTreeSet<usize>], MatroidError> {
        self.circuits_bounded(CIRCUIT_GROUND_BOUND)
    }

    pub fn circuits_bounded(&self, bound: usize) -> Result<&[BTreeSet<usize>], MatroidError> {
        let n = self.ground.len();
        if n > bound.min(CIRCUIT_GROUND_BOUND) {
            return Err(MatroidError::GroundTooLarge {
                size: n,
                bound: bound.min(CIRCUIT_GROUND_BOUND),
            });
        }
        Ok(self.circuits.get_or_init(|| self.enumerate_circuits()))
    }

    fn enumerate_circuits(&self) -> Vec<BTreeSet<usize>> {
        let n = self.ground.len();
        let mut found_masks: Vec<u32> = Vec::new();
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        let max_size = (self.rank_full + 1).min(n);
        for size in 1..=max_size {
            let mut comb: Vec<usize> = (0..size).collect();
            loop {
                let mask: u32 = comb.iter().fold(0, |m, &e| m | 1 << e);
                // a set passing this filter has all proper subsets
                // independent (any dependent one would contain an already
                // recorded smaller circuit), so dependent means circuit
                if !found_masks.iter().any(|&c| c & mask == c)
                    && self.is_dependent_indices(&comb)
                {
                    found_masks.push(mask);
                    found.push(comb.iter().copied().collect());
                }
                if !next_combination(&mut comb, n) {
                    break;
                }
            }
        }
        found
    }

    pub fn circuit_label_sets(&self) -> Result<BTreeSet<BTreeSet<String>>, MatroidError> {
        Ok(self
            .circuits()?
            .iter()
            .map(|c| c.iter().map(|&i| self.ground.label(i).to_string()).collect())
            .collect())
    }

    /// Eliminate on the columns of `s`; returns the realization with the
    /// pivot rows used up by S removed. The remaining rows realize the
    /// looped contraction on the full ground set.
    fn eliminate_columns(&self, s: &BTreeSet<usize>) -> Matrix<K> {
        let mut q = self.realization.clone();
        let rows = q.rows();
        let mut used: Vec<bool> = vec![false; rows];
        for &c in s {
            let Some(r) = (0..rows).find(|&i| !used[i] && !q[(i, c)].is_zero()) else {
                continue;
            };
            used[r] = true;
            let pivot_inv = q[(r, c)].inv().unwrap();
            for i in 0..rows {
                if i != r && !used[i] {
                    if !q[(i, c)].is_zero() {
                        let factor = q[(i, c)].clone() * pivot_inv.clone();
                        for j in 0..q.cols() {
                            let t = factor.clone() * q[(r, j)].clone();
                            q[(i, j)] = q[(i, j)].clone() - t;
                        }
                    }
                }
            }
        }
        let keep: Vec<Vec<K>> = (0..rows)
            .filter(|&i| !used[i])
            .map(|i| q.row(i).to_vec())
            .collect();
        if keep.is_empty() {
            Matrix::zero(0, q.cols())
        } else {
            Matrix::from_rows(keep)
        }
    }

    /// Contraction M/S on the ground set E \ S, with
    /// r_{M/S}(T) = r_M(S ∪ T) - r_M(S).
    pub fn contraction_indices(&self, s: &BTreeSet<usize>) -> Self {
        let reduced = self.eliminate_columns(s);
        let keep_cols: Vec<usize> =
            (0..self.ground.len()).filter(|i| !s.contains(i)).collect();
        let labels = keep_cols
            .iter()
            .map(|&i| self.ground.label(i).to_string())
            .collect();
        let ground = GroundSet::new(labels).unwrap();
        Self::from_realization(ground, reduced.select_columns(&keep_cols))
    }

    pub fn contraction<S: AsRef<str>>(&self, s: &[S]) -> Result<Self, MatroidError> {
        let idx: BTreeSet<usize> = self.ground.resolve(s)?.into_iter().collect();
        Ok(self.contraction_indices(&idx))
    }

    /// Looped contraction M ÷ S: same rank function as M/S extended by
    /// r(S ∪ T) - r(S) to the whole ground set; elements of S become loops.
    pub fn looped_contraction_indices(&self, s: &BTreeSet<usize>) -> Self {
        let reduced = self.eliminate_columns(s);
        Self::from_realization(self.ground.clone(), reduced)
    }

    pub fn looped_contraction<S: AsRef<str>>(&self, s: &[S]) -> Result<Self, MatroidError> {
        let idx: BTreeSet<usize> = self.ground.resolve(s)?.into_iter().collect();
        Ok(self.looped_contraction_indices(&idx))
    }

    /// Direct sum, on the concatenated (disjoint) ground sets.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, MatroidError> {
        let mut labels = self.ground.labels().to_vec();
        labels.extend(other.ground.labels().iter().cloned());
        let ground = GroundSet::new(labels)?;
        let (r1, c1) = (self.realization.rows(), self.realization.cols());
        let (r2, c2) = (other.realization.rows(), other.realization.cols());
        let q = Matrix::from_fn(r1 + r2, c1 + c2, |i, j| {
            if i < r1 && j < c1 {
                self.realization[(i, j)].clone()
            } else if i >= r1 && j >= c1 {
                other.realization[(i - r1, j - c1)].clone()
            } else {
                K::zero()
            }
        });
        Ok(Self::from_realization(ground, q))
    }

    /// The set of minimal support elements of nonzero vectors of V with
    /// respect to the order; these are exactly the loops of the initial
    /// matroid. Computed by row reduction of a basis of V with the columns
    /// visited in ascending order, so no circuit enumeration is needed.
    pub fn initial_loops(&self, order: &TotalOrder) -> BTreeSet<usize> {
        assert_eq!(order.len(), self.ground.len());
        let kernel = self.realization.kernel_basis();
        if kernel.is_empty() {
            return BTreeSet::new();
        }
        let b = Matrix::from_rows(kernel);
        let permuted = b.select_columns(order.ascending());
        let (_, pivots) = permuted.rref();
        pivots.into_iter().map(|p| order.ascending()[p]).collect()
    }

    /// The initial matroid: a discrete matroid whose loops are the order
    /// minima of the circuits of M and whose remaining elements are coloops.
    pub fn initial_matroid(&self, order: &TotalOrder) -> DiscreteMatroid {
        let loops = self.initial_loops(order);
        DiscreteMatroid::new(self.ground.clone(), loops)
    }

    pub fn to_json(&self) -> Result<serde_json::Value, MatroidError> {
        let circuits: Vec<Vec<String>> = self
            .circuits()?
            .iter()
            .map(|c| c.iter().map(|&i| self.ground.label(i).to_string()).collect())
            .collect();
        Ok(serde_json::json!({
            "ground": self.ground.labels(),
            "rank": self.rank(),
            "circuits": circuits,
        }))
    }
}

impl<K: Field> std::fmt::Debug for Matroid<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Matroid(rank {} on {{{}}})",
            self.rank_full,
            self.ground.labels().join(", ")
        )
    }
}

/// A matroid in which every element is a loop or a coloop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteMatroid {
    ground: GroundSet,
    loops: BTreeSet<usize>,
    coloops: BTreeSet<usize>,
}

impl DiscreteMatroid {
    pub fn new(ground: GroundSet, loops: BTreeSet<usize>) -> Self {
        let coloops = (0..ground.len()).filter(|i| !loops.contains(i)).collect();
        DiscreteMatroid { ground, loops, coloops }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn coloops(&self) -> &BTreeSet<usize> {
        &self.coloops
    }

    pub fn rank(&self) -> usize {
        self.coloops.len()
    }

    pub fn loop_labels(&self) -> BTreeSet<String> {
        self.loops.iter().map(|&i| self.ground.label(i).to_string()).collect()
    }

    pub fn coloop_labels(&self) -> BTreeSet<String> {
        self.coloops.iter().map(|&i| self.ground.label(i).to_string()).collect()
    }
}
