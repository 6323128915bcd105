//! Torus-graph-facing computations: the loop/coloop classifier from the
//! basis-counting inequality, dependence propagation for principal-plus-
//! monomial ideals, the rectangle edge classification, and grouping of
//! ideals by truncated tropicalization.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::field::Field;
use crate::ideal::{GradedIdeal, IdealError};
use crate::matroid::{Matroid, MatroidError, TotalOrder};
use crate::monomial::{mon_d, Monomial, TermOrder};
use crate::necklace::{enumerate, Necklace, NecklaceError};
use crate::poly::HomogPoly;

#[derive(Debug, Error)]
pub enum TGraphError {
    #[error("lemma violated: {0}")]
    LemmaViolated(String),
    #[error("{0} is not a monomial of the monomial ideal in degree {1}")]
    NotInMonomialIdeal(String, u32),
    #[error("ideals do not share a Hilbert function up to degree {degree}: {details}")]
    HilbertMismatch { degree: u32, details: String },
    #[error("need d0 > k >= 1 and d0 <= 16, got k = {k}, d0 = {d0}")]
    BadRectangle { k: u32, d0: u32 },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Necklace(#[from] NecklaceError),
}

/// A monomial ideal, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(generators: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = generators.into_iter().collect();
        gens.sort_by_key(|m| (m.a, m.b));
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|m| !gens.iter().any(|g| g != *m && g.divides(m)))
            .copied()
            .collect();
        let mut generators = minimal;
        generators.sort_by_key(|m| std::cmp::Reverse(m.a));
        MonomialIdeal { generators }
    }

    /// The rectangle staircase: complement {a < d0, b < k}.
    pub fn rectangle(d0: u32, k: u32) -> Self {
        Self::new([Monomial::new(d0, 0), Monomial::new(0, k)])
    }

    /// Cut off in degree d1: add every degree-d1 monomial.
    pub fn truncate_at(&self, d1: u32) -> Self {
        let mut gens = self.generators.clone();
        gens.extend(mon_d(d1));
        Self::new(gens)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        mon_d(d).into_iter().filter(|m| self.contains(m)).collect()
    }

    pub fn hilbert_function(&self, d: u32) -> usize {
        mon_d(d).iter().filter(|m| !self.contains(m)).count()
    }

    pub fn colength_up_to(&self, limit: u32) -> usize {
        (0..=limit).map(|d| self.hilbert_function(d)).sum()
    }

    pub fn to_graded_ideal(&self) -> GradedIdeal {
        GradedIdeal::new(self.generators.iter().map(|&m| HomogPoly::monomial(m)).collect())
            .expect("monomials are nonzero")
    }
}

/// Elements m of the ground set satisfying the basis-counting inequality
///
///   |{m' in B_dn : m' <= m}| - |{m' in B_up : m' <= m}|
///     <= |{m' in B_dn : m' >= m}| - |{m' in B_up : m' >= m}|
///
/// where B_dn (resp. B_up) is the coloop set of the initial matroid for
/// the reversed (resp. given) order — the basis that spans every down-set
/// (resp. up-set). Every such m must be a loop or a coloop of M; a
/// violation is an error since that is a proven lemma.
pub fn convex_hull_classify<K: Field>(
    m: &Matroid<K>,
    order: &TotalOrder,
) -> Result<Vec<usize>, TGraphError> {
    let n = m.ground().len();
    let b_dn = m.initial_matroid(&order.reversed()).coloops().clone();
    let b_up = m.initial_matroid(order).coloops().clone();
    let loops = m.loops();
    let coloops = m.coloops();
    let mut classified = Vec::new();
    for e in 0..n {
        let pos = order.position(e);
        let count = |b: &BTreeSet<usize>, up: bool| {
            (0..n)
                .filter(|&i| {
                    b.contains(&i)
                        && if up { order.position(i) >= pos } else { order.position(i) <= pos }
                })
                .count() as i64
        };
        let lhs = count(&b_dn, false) - count(&b_up, false);
        let rhs = count(&b_dn, true) - count(&b_up, true);
        if lhs <= rhs {
            if !loops.contains(&e) && !coloops.contains(&e) {
                return Err(TGraphError::LemmaViolated(format!(
                    "{} satisfies the inequality but is neither loop nor coloop",
                    m.ground().label(e)
                )));
            }
            classified.push(e);
        }
    }
    Ok(classified)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintOutcome {
    /// The cardinality precondition fails; nothing is claimed.
    NotApplicable,
    /// The precondition holds and (f) is in the dependence locus of U.
    Holds,
}

/// Dependence propagation for a PPM ideal (f) + N: if U is a set of
/// degree-d monomials of N with |U| exceeding the rank drop from Trop((f))
/// to Trop((f) + N) in degree d, then U is dependent for (f) alone.
pub fn constraint_preserved_check(
    f: &HomogPoly,
    n: &MonomialIdeal,
    d: u32,
    set: &[Monomial],
) -> Result<ConstraintOutcome, TGraphError> {
    for m in set {
        if !n.contains(m) || m.degree() != d {
            return Err(TGraphError::NotInMonomialIdeal(m.to_string(), d));
        }
    }
    let principal = GradedIdeal::principal(f.clone())?;
    let combined = principal.add_monomial_ideal(n.generators());
    let drop = principal.hilbert_function(d) - combined.hilbert_function(d);
    if set.len() <= drop {
        return Ok(ConstraintOutcome::NotApplicable);
    }
    if !principal.is_dependent_in(d, set)? {
        return Err(TGraphError::LemmaViolated(format!(
            "|U| = {} exceeds the rank drop {drop} but U = {set:?} is independent for ({f})",
            set.len()
        )));
    }
    Ok(ConstraintOutcome::Holds)
}

/// One verified point of the edge scheme between the two rectangle
/// monomial ideals.
#[derive(Clone, Debug)]
pub struct EdgePoint {
    pub necklace: Necklace,
    pub ideal: GradedIdeal,
    pub hilbert: Vec<usize>,
    pub colength: usize,
    pub init_x_greater: Vec<Monomial>,
    pub init_y_greater: Vec<Monomial>,
    pub hilbert_ok: bool,
    pub colength_ok: bool,
    pub init_ok: bool,
}

impl EdgePoint {
    pub fn verified(&self) -> bool {
        self.hilbert_ok && self.colength_ok && self.init_ok
    }
}

/// The edge points between the d0 x k and k x d0 rectangles (optionally
/// cut off in degree d1): one for each necklace with k black and d0 - k
/// white beads, built as (f_necklace) + (x^d0, y^d0) (+ all of degree d1),
/// and verified against the Hilbert profile, the colength, and both
/// initial monomial ideals.
pub fn rectangle_edge_points(
    k: u32,
    d0: u32,
    truncation: Option<u32>,
) -> Result<Vec<EdgePoint>, TGraphError> {
    if k == 0 || d0 <= k || d0 > 16 {
        return Err(TGraphError::BadRectangle { k, d0 });
    }
    if let Some(d1) = truncation {
        assert!(d1 > d0, "the cutoff degree must exceed d0");
    }
    let mut m_x = MonomialIdeal::rectangle(d0, k);
    let mut m_y = MonomialIdeal::rectangle(k, d0);
    let mut added = vec![Monomial::new(d0, 0), Monomial::new(0, d0)];
    if let Some(d1) = truncation {
        m_x = m_x.truncate_at(d1);
        m_y = m_y.truncate_at(d1);
        added.extend(mon_d(d1));
    }
    let limit = truncation.unwrap_or(d0 + k);
    let profile: Vec<usize> = (0..=limit).map(|d| m_x.hilbert_function(d)).collect();
    debug_assert_eq!(
        profile,
        (0..=limit).map(|d| m_y.hilbert_function(d)).collect::<Vec<_>>(),
        "the two endpoint fixed points share a Hilbert function"
    );
    let expected_colength = m_x.colength_up_to(limit);
    let expect_xg: Vec<Monomial> = m_x.generators().to_vec();
    let expect_yg: Vec<Monomial> = m_y.generators().to_vec();

    let mut points = Vec::new();
    for gamma in enumerate(d0, k)? {
        let ideal = gamma.ideal().add_monomial_ideal(&added);
        let hilbert: Vec<usize> = (0..=limit).map(|d| ideal.hilbert_function(d)).collect();
        let colength = hilbert.iter().sum::<usize>();
        let init_x_greater = ideal.initial_monomial_ideal(TermOrder::XGreater, limit);
        let init_y_greater = ideal.initial_monomial_ideal(TermOrder::YGreater, limit);
        points.push(EdgePoint {
            hilbert_ok: hilbert == profile,
            colength_ok: colength == expected_colength,
            init_ok: init_x_greater == expect_xg && init_y_greater == expect_yg,
            necklace: gamma,
            ideal,
            hilbert,
            colength,
            init_x_greater,
            init_y_greater,
        });
    }
    Ok(points)
}

/// Group ideals by their truncated tropicalization (equal circuits in all
/// degrees up to the bound). All inputs must share a Hilbert function up
/// to the bound. Groups come back as index lists in first-seen order.
pub fn stratum_probe(
    ideals: &[GradedIdeal],
    max_degree: u32,
) -> Result<Vec<Vec<usize>>, TGraphError> {
    if let Some(first) = ideals.first() {
        let h0: Vec<usize> = (0..=max_degree).map(|d| first.hilbert_function(d)).collect();
        for (i, ideal) in ideals.iter().enumerate().skip(1) {
            let h: Vec<usize> = (0..=max_degree).map(|d| ideal.hilbert_function(d)).collect();
            if h != h0 {
                return Err(TGraphError::HilbertMismatch {
                    degree: max_degree,
                    details: format!("ideal {i} has {h:?}, ideal 0 has {h0:?}"),
                });
            }
        }
    }
    let mut profiles = Vec::new();
    for ideal in ideals {
        profiles.push(ideal.tropicalize(max_degree).circuit_profile()?);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, profile) in profiles.iter().enumerate() {
        match groups.iter_mut().find(|g| profiles[g[0]] == *profile) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    Ok(groups)
}
