//! Homogeneous ideals in k[x, y] with the standard grading: graded pieces,
//! Hilbert functions, truncated tropicalization, dependence tests, the
//! tropical-ideal axiom check, and initial monomial ideals.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::cyclotomic::CycNum;
use crate::field::{One, Zero};
use crate::matrix::Matrix;
use crate::matroid::{Matroid, MatroidError};
use crate::monomial::{ground_of_degree, mon_d, Monomial, TermOrder};
use crate::poly::HomogPoly;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("zero polynomial is not a valid generator")]
    ZeroGenerator,
    #[error("monomial {monomial} does not have degree {degree}")]
    DegreeMismatch { monomial: String, degree: u32 },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("proposition violated: {0}")]
    PropositionFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// A homogeneous ideal given by generators. Graded pieces are memoized
/// behind a mutex, so shared references stay cheap to query.
pub struct GradedIdeal {
    generators: Vec<HomogPoly>,
    pieces: Mutex<HashMap<u32, Arc<Matrix<CycNum>>>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            generators: self.generators.clone(),
            pieces: Mutex::new(self.pieces.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl GradedIdeal {
    pub fn new(generators: Vec<HomogPoly>) -> Result<Self, IdealError> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(IdealError::ZeroGenerator);
        }
        Ok(GradedIdeal { generators, pieces: Mutex::new(HashMap::new()) })
    }

    pub fn principal(f: HomogPoly) -> Result<Self, IdealError> {
        Self::new(vec![f])
    }

    /// Parse a semicolon-separated generator list.
    pub fn parse(src: &str) -> Result<Self, crate::parse::ParseError> {
        let gens = crate::parse::parse_generators(src)?;
        Ok(Self::new(gens).expect("parsed generators are nonzero"))
    }

    pub fn generators(&self) -> &[HomogPoly] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// The default truncation degree used by the CLI.
    pub fn default_max_degree(&self) -> u32 {
        2 * self.max_generator_degree() + 2
    }

    /// A column basis of the degree-d piece, in Mon_d coordinates
    /// (row index = y-exponent). Memoized.
    pub fn graded_piece(&self, d: u32) -> Arc<Matrix<CycNum>> {
        if let Some(p) = self.pieces.lock().unwrap().get(&d) {
            return p.clone();
        }
        let mut cols: Vec<Vec<CycNum>> = Vec::new();
        for g in &self.generators {
            if g.degree() <= d {
                for m in mon_d(d - g.degree()) {
                    cols.push(g.mul_monomial(&m).coeff_vec());
                }
            }
        }
        let raw = Matrix::from_fn((d + 1) as usize, cols.len(), |i, j| cols[j][i].clone());
        let basis = Arc::new(raw.column_basis());
        self.pieces.lock().unwrap().insert(d, basis.clone());
        basis
    }

    pub fn dim_piece(&self, d: u32) -> usize {
        self.graded_piece(d).cols()
    }

    pub fn hilbert_function(&self, d: u32) -> usize {
        (d + 1) as usize - self.dim_piece(d)
    }

    /// Least degree D such that the Hilbert function vanishes from D on, if
    /// the ideal has finite colength witnessed by degree `limit`.
    pub fn colength_up_to(&self, limit: u32) -> usize {
        (0..=limit).map(|d| self.hilbert_function(d)).sum()
    }

    /// The matroid Trop(I_d) on the degree-d monomials.
    pub fn trop_piece(&self, d: u32) -> Matroid<CycNum> {
        let piece = self.graded_piece(d);
        let vectors: Vec<Vec<CycNum>> = (0..piece.cols())
            .map(|j| (0..piece.rows()).map(|i| piece[(i, j)].clone()).collect())
            .collect();
        Matroid::from_subspace(ground_of_degree(d), &vectors)
            .expect("piece vectors match the ground set")
    }

    pub fn tropicalize(&self, max_degree: u32) -> TruncatedTropIdeal {
        TruncatedTropIdeal {
            max_degree,
            pieces: (0..=max_degree).map(|d| self.trop_piece(d)).collect(),
        }
    }

    /// Set-theoretic dependence test: is U a dependent set modulo I_d?
    pub fn is_dependent_in(&self, d: u32, set: &[Monomial]) -> Result<bool, IdealError> {
        for m in set {
            if m.degree() != d {
                return Err(IdealError::DegreeMismatch {
                    monomial: m.to_string(),
                    degree: d,
                });
            }
        }
        let piece = self.graded_piece(d);
        let indicators = Matrix::from_fn((d + 1) as usize, set.len(), |i, j| {
            if i as u32 == set[j].b {
                CycNum::one()
            } else {
                CycNum::zero()
            }
        });
        let combined = piece.hstack(&indicators);
        Ok(combined.rank() < piece.cols() + set.len())
    }

    /// The ideal x*I or y*I (generators multiplied by the variable).
    pub fn multiply_by(&self, var: Var) -> GradedIdeal {
        let m = match var {
            Var::X => Monomial::new(1, 0),
            Var::Y => Monomial::new(0, 1),
        };
        GradedIdeal::new(self.generators.iter().map(|g| g.mul_monomial(&m)).collect())
            .expect("nonzero generators stay nonzero")
    }

    /// I + N for a list of monomial generators N.
    pub fn add_monomial_ideal(&self, monomials: &[Monomial]) -> GradedIdeal {
        let mut gens = self.generators.clone();
        gens.extend(monomials.iter().map(|&m| HomogPoly::monomial(m)));
        GradedIdeal::new(gens).expect("monomial generators are nonzero")
    }

    /// Degree-d monomials of the initial ideal: the order-minimal support
    /// elements of polynomials in I_d, read off a row echelon form of the
    /// piece with columns visited in ascending order.
    pub fn initial_loops(&self, d: u32, order: TermOrder) -> BTreeSet<Monomial> {
        let piece = self.graded_piece(d);
        let rows = piece.transpose();
        let total = order.on_degree(d);
        let permuted = rows.select_columns(total.ascending());
        let (_, pivots) = permuted.rref();
        let mons = mon_d(d);
        pivots.into_iter().map(|p| mons[total.ascending()[p]]).collect()
    }

    /// Minimal generators of the initial monomial ideal, collected up to
    /// degree D. For finite-colength ideals, D large enough to reach the
    /// all-loops range makes the list complete; that choice is the
    /// caller's.
    pub fn initial_monomial_ideal(&self, order: TermOrder, max_degree: u32) -> Vec<Monomial> {
        let mut gens: Vec<Monomial> = Vec::new();
        let mut prev: BTreeSet<Monomial> = BTreeSet::new();
        for d in 0..=max_degree {
            let loops = self.initial_loops(d, order);
            for &m in &loops {
                let from_x = m.a > 0 && prev.contains(&Monomial::new(m.a - 1, m.b));
                let from_y = m.b > 0 && prev.contains(&Monomial::new(m.a, m.b - 1));
                if !from_x && !from_y {
                    gens.push(m);
                }
            }
            prev = loops;
        }
        // staircase order: minimal generators have strictly decreasing
        // x-exponent, so this is canonical
        gens.sort_by_key(|m| std::cmp::Reverse(m.a));
        gens
    }

    /// Dependence of U in degree h + k - 1 coincides with dependence of
    /// every k-element superset (k = deg f, the Hilbert value there).
    /// Returns the common value; a mismatch is reported as an error since
    /// the equality is a theorem.
    pub fn dependence_intersection_check(
        f: &HomogPoly,
        h: u32,
        set: &[Monomial],
    ) -> Result<bool, IdealError> {
        assert!(h >= 1);
        let k = f.degree();
        let d = h + k - 1;
        let ideal = GradedIdeal::principal(f.clone())?;
        let lhs = ideal.is_dependent_in(d, set)?;
        let mons = mon_d(d);
        let base: BTreeSet<Monomial> = set.iter().copied().collect();
        let mut rhs = true;
        if base.len() <= k as usize {
            let free: Vec<Monomial> =
                mons.iter().filter(|m| !base.contains(m)).copied().collect();
            let need = k as usize - base.len();
            let mut comb: Vec<usize> = (0..need).collect();
            'outer: loop {
                let mut w: Vec<Monomial> = base.iter().copied().collect();
                w.extend(comb.iter().map(|&i| free[i]));
                if !ideal.is_dependent_in(d, &w)? {
                    rhs = false;
                    break;
                }
                // next combination of the complement
                if need == 0 {
                    break 'outer;
                }
                let mut i = need;
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    if comb[i] < free.len() - need + i {
                        comb[i] += 1;
                        for j in i + 1..need {
                            comb[j] = comb[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
        if lhs != rhs {
            return Err(IdealError::PropositionFailed(format!(
                "dependence of {set:?} is {lhs} but the k-superset intersection gives {rhs}"
            )));
        }
        Ok(lhs)
    }

    /// Pullback of a dependence locus along I -> x_i * I: dependence of U
    /// in degree d for x_i*I equals dependence of U/x_i (dropping the
    /// monomials x_i does not divide) in degree d - 1 for I. Returns the
    /// common value.
    pub fn strata_pullback_check(
        &self,
        var: Var,
        d: u32,
        set: &[Monomial],
    ) -> Result<bool, IdealError> {
        let shifted = self.multiply_by(var);
        let lhs = shifted.is_dependent_in(d, set)?;
        let divided: Vec<Monomial> = set
            .iter()
            .filter_map(|m| {
                let div = match var {
                    Var::X => Monomial::new(1, 0),
                    Var::Y => Monomial::new(0, 1),
                };
                m.div(&div)
            })
            .collect();
        let rhs = if d == 0 {
            false
        } else {
            self.is_dependent_in(d - 1, &divided)?
        };
        if lhs != rhs {
            return Err(IdealError::PropositionFailed(format!(
                "pullback mismatch for {set:?} along {var:?}: {lhs} vs {rhs}"
            )));
        }
        Ok(lhs)
    }
}

/// The tropicalization of an ideal, truncated at a maximum degree: one
/// matroid per degree on the monomials of that degree.
pub struct TruncatedTropIdeal {
    max_degree: u32,
    pieces: Vec<Matroid<CycNum>>,
}

#[derive(Debug, Clone)]
pub struct AxiomViolation {
    pub degree: u32,
    pub circuit: Vec<Monomial>,
    pub multiplier: Monomial,
}

impl TruncatedTropIdeal {
    /// Assemble from explicit pieces (piece d on Mon_d). Nothing is
    /// validated; run `tropical_axiom_check` to test the defining
    /// condition.
    pub fn from_pieces(pieces: Vec<Matroid<CycNum>>) -> Self {
        for (d, p) in pieces.iter().enumerate() {
            assert_eq!(p.ground().len(), d + 1, "piece {d} not on Mon_{d}");
        }
        TruncatedTropIdeal { max_degree: pieces.len() as u32 - 1, pieces }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn piece(&self, d: u32) -> &Matroid<CycNum> {
        &self.pieces[d as usize]
    }

    pub fn pieces(&self) -> &[Matroid<CycNum>] {
        &self.pieces
    }

    pub fn hilbert(&self, d: u32) -> usize {
        self.piece(d).rank()
    }

    /// Circuits of every piece, as y-exponent sets per degree. This is the
    /// comparison key for truncation-bounded equality of tropicalizations.
    pub fn circuit_profile(&self) -> Result<Vec<BTreeSet<BTreeSet<u32>>>, MatroidError> {
        self.pieces
            .iter()
            .map(|p| {
                Ok(p.circuits()?
                    .iter()
                    .map(|c| c.iter().map(|&i| i as u32).collect())
                    .collect())
            })
            .collect()
    }

    /// Degrees ≤ D agree as matroids (same circuits).
    pub fn equal_up_to(&self, other: &Self, max_degree: u32) -> Result<bool, MatroidError> {
        assert!(max_degree <= self.max_degree && max_degree <= other.max_degree);
        for d in 0..=max_degree {
            if self.piece(d).circuit_label_sets()? != other.piece(d).circuit_label_sets()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The defining condition of a tropical ideal: for every circuit S of
    /// piece d and every monomial m', the set m'S is a cycle in piece
    /// d + deg m'. Returns all violations within the truncation.
    pub fn tropical_axiom_check(&self) -> Result<Vec<AxiomViolation>, MatroidError> {
        let mut violations = Vec::new();
        for d in 0..=self.max_degree {
            let circuits: Vec<Vec<Monomial>> = {
                let mons = mon_d(d);
                self.piece(d)
                    .circuits()?
                    .iter()
                    .map(|c| c.iter().map(|&i| mons[i]).collect())
                    .collect()
            };
            for circuit in &circuits {
                for d_shift in 0..=self.max_degree - d {
                    for m in mon_d(d_shift) {
                        let target = d + d_shift;
                        let shifted: Vec<usize> =
                            circuit.iter().map(|c| (c.b + m.b) as usize).collect();
                        if !self.piece(target).is_cycle_indices(&shifted) {
                            violations.push(AxiomViolation {
                                degree: d,
                                circuit: circuit.clone(),
                                multiplier: m,
                            });
                        }
                    }
                }
            }
        }
        Ok(violations)
    }
}
