//! Binary necklaces with k black and d-k white beads: enumeration up to
//! rotation, the coprime skip action, the associated principal ideal over
//! Q(zeta_d), the gcd criterion for {x^d', y^d'} dependence, and the
//! necklace determinant.

use std::collections::BTreeSet;

use num::Integer;
use thiserror::Error;

use crate::cyclotomic::CycNum;
use crate::field::One;
use crate::ideal::{GradedIdeal, TruncatedTropIdeal};
use crate::matrix::Matrix;
use crate::matroid::MatroidError;
use crate::poly::HomogPoly;
use crate::schur::{theorem_check, Partition, SchurError};

pub const NECKLACE_BEAD_BOUND: u32 = 24;

#[derive(Debug, Error)]
pub enum NecklaceError {
    #[error("bead count {0} out of range 1..={NECKLACE_BEAD_BOUND}")]
    BeadCountOutOfRange(u32),
    #[error("black bead count {k} out of range 1..={d}")]
    BlackCountOutOfRange { k: u32, d: u32 },
    #[error("bead position {0} is not a residue mod {1}")]
    BadPosition(u32, u32),
    #[error("{a} is not coprime to {d}")]
    NotCoprime { a: u32, d: u32 },
    #[error("necklaces have different bead counts {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A binary necklace: the black-bead positions as given (the
/// representative) plus the canonical form, the positions of the
/// lexicographically least rotation of the bit string (black = 1).
/// Equality, ordering and hashing go through the canonical form, so a
/// necklace equals its own canonicalization.
#[derive(Clone, Debug)]
pub struct Necklace {
    d: u32,
    positions: BTreeSet<u32>,
    canonical: BTreeSet<u32>,
}

impl PartialEq for Necklace {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.canonical == other.canonical
    }
}

impl Eq for Necklace {}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, &self.canonical).cmp(&(other.d, &other.canonical))
    }
}

impl std::hash::Hash for Necklace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.d, &self.canonical).hash(state);
    }
}

impl Necklace {
    pub fn new(d: u32, positions: impl IntoIterator<Item = u32>) -> Result<Self, NecklaceError> {
        if d == 0 || d > NECKLACE_BEAD_BOUND {
            return Err(NecklaceError::BeadCountOutOfRange(d));
        }
        let raw: BTreeSet<u32> = positions.into_iter().collect();
        for &p in &raw {
            if p >= d {
                return Err(NecklaceError::BadPosition(p, d));
            }
        }
        if raw.is_empty() {
            return Err(NecklaceError::BlackCountOutOfRange { k: 0, d });
        }
        let canonical = canonical_rotation(d, &raw);
        Ok(Necklace { d, positions: raw, canonical })
    }

    pub fn parse(src: &str) -> Result<Self, crate::parse::ParseError> {
        let (d, positions) = crate::parse::parse_necklace_bits(src)?;
        Necklace::new(d, positions).map_err(|e| crate::parse::ParseError {
            pos: 0,
            msg: e.to_string(),
        })
    }

    pub fn beads(&self) -> u32 {
        self.d
    }

    pub fn black_count(&self) -> u32 {
        self.positions.len() as u32
    }

    /// The representative positions this necklace was built from.
    pub fn positions(&self) -> &BTreeSet<u32> {
        &self.positions
    }

    /// Positions of the canonical (lexicographically least) rotation.
    pub fn canonical_positions(&self) -> &BTreeSet<u32> {
        &self.canonical
    }

    /// The same necklace with the canonical rotation as representative.
    pub fn canonicalize(&self) -> Necklace {
        Necklace {
            d: self.d,
            positions: self.canonical.clone(),
            canonical: self.canonical.clone(),
        }
    }

    /// Bit string of the canonical rotation, e.g. "000011".
    pub fn bits(&self) -> String {
        (0..self.d)
            .map(|i| if self.canonical.contains(&i) { '1' } else { '0' })
            .collect()
    }

    /// Traverse by jumps of length a (coprime to d): positions map to a*p,
    /// then the result is re-canonicalized.
    pub fn skip(&self, a: u32) -> Result<Necklace, NecklaceError> {
        if a.gcd(&self.d) != 1 {
            return Err(NecklaceError::NotCoprime { a, d: self.d });
        }
        Ok(Necklace::new(
            self.d,
            self.positions
                .iter()
                .map(|&p| (a as u64 * p as u64 % self.d as u64) as u32),
        )?
        .canonicalize())
    }

    /// All images under the coprime skip action, self included.
    pub fn skip_orbit(&self) -> BTreeSet<Necklace> {
        (1..=self.d)
            .filter(|a| a.gcd(&self.d) == 1)
            .map(|a| self.skip(a).unwrap())
            .collect()
    }

    /// The principal ideal of the bead points: ( prod (x - zeta_d^p y) ).
    pub fn ideal(&self) -> GradedIdeal {
        GradedIdeal::principal(self.polynomial()).expect("necklace polynomial is nonzero")
    }

    pub fn polynomial(&self) -> HomogPoly {
        let factors: Vec<(CycNum, CycNum)> = self
            .positions
            .iter()
            .map(|&p| (CycNum::one(), -CycNum::zeta_power(self.d, p as i64)))
            .collect();
        HomogPoly::product_of_linear(&factors)
    }

    pub fn trop(&self, max_degree: u32) -> TruncatedTropIdeal {
        self.ideal().tropicalize(max_degree)
    }

    /// Same circuits in every degree up to the bound.
    pub fn trop_equal(&self, other: &Necklace, max_degree: u32) -> Result<bool, NecklaceError> {
        Ok(self
            .trop(max_degree)
            .equal_up_to(&other.trop(max_degree), max_degree)?)
    }

    /// gcd of the k gap lengths between consecutive black beads.
    pub fn gcd_alpha(&self) -> u32 {
        let pos: Vec<u32> = self.positions.iter().copied().collect();
        let mut alpha = 0u32;
        for w in pos.windows(2) {
            alpha = alpha.gcd(&(w[1] - w[0]));
        }
        let wrap = self.d - pos.last().unwrap() + pos.first().unwrap();
        alpha.gcd(&wrap)
    }

    /// Whether {x^d', y^d'} is dependent in Trop of this necklace's ideal:
    /// exactly when d/alpha divides d'.
    pub fn power_pair_dependent(&self, d_prime: u32) -> bool {
        d_prime % (self.d / self.gcd_alpha()) == 0
    }
}

impl std::fmt::Display for Necklace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.bits())
    }
}

fn canonical_rotation(d: u32, positions: &BTreeSet<u32>) -> BTreeSet<u32> {
    let mut best: Option<Vec<bool>> = None;
    for r in 0..d {
        let candidate: Vec<bool> = (0..d)
            .map(|i| positions.contains(&((i + d - r) % d)))
            .collect();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    let bits = best.unwrap();
    (0..d).filter(|&i| bits[i as usize]).collect()
}

/// One canonical representative per rotation class of k black beads on d.
pub fn enumerate(d: u32, k: u32) -> Result<Vec<Necklace>, NecklaceError> {
    if d == 0 || d > NECKLACE_BEAD_BOUND {
        return Err(NecklaceError::BeadCountOutOfRange(d));
    }
    if k == 0 || k > d {
        return Err(NecklaceError::BlackCountOutOfRange { k, d });
    }
    let mut seen: BTreeSet<Necklace> = BTreeSet::new();
    let mut comb: Vec<u32> = (0..k).collect();
    loop {
        seen.insert(Necklace::new(d, comb.iter().copied())?.canonicalize());
        // next k-combination of 0..d
        let kk = comb.len();
        let mut i = kk;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if comb[i] < d - kk as u32 + i as u32 {
                comb[i] += 1;
                for j in i + 1..kk {
                    comb[j] = comb[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Ok(seen.into_iter().collect())
}

/// The necklace determinant det( zeta_d^{p_i * q_j} ), computed on the
/// canonical representatives. The value depends on the representatives;
/// only its vanishing is an invariant of the pair.
pub fn necklace_determinant(n1: &Necklace, n2: &Necklace) -> Result<CycNum, NecklaceError> {
    if n1.d != n2.d {
        return Err(NecklaceError::OrderMismatch(n1.d, n2.d));
    }
    let p: Vec<u32> = n1.canonical.iter().copied().collect();
    let q: Vec<u32> = n2.canonical.iter().copied().collect();
    if p.len() != q.len() {
        return Err(NecklaceError::OrderMismatch(n1.d, n2.d));
    }
    let d = n1.d;
    Ok(Matrix::from_fn(p.len(), q.len(), |i, j| {
        CycNum::zeta_power(d, p[i] as i64 * q[j] as i64)
    })
    .det())
}

/// Outcome of the exponent-multiset map λ ↦ {λ_i + k - i mod d}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaOutcome {
    Necklace(Necklace),
    /// Two exponents coincide mod d; the Schur value then vanishes at every
    /// d-th-root configuration (two equal rows in the defining matrix).
    Collision(Vec<u32>),
}

/// The necklace of a partition: exponents λ_i + k - i (i = 1..k) reduced
/// mod d. With `shifted` the variant λ_i + k - i - 1 is used; the two
/// differ by a rotation, so they name the same necklace whenever defined.
pub fn eta(d: u32, k: u32, lambda: &Partition, shifted: bool) -> EtaOutcome {
    let offset = if shifted { 1 } else { 0 };
    let exponents: Vec<u32> = (1..=k)
        .map(|i| {
            let raw = lambda.part(i as usize - 1) as i64 + (k - i) as i64 - offset;
            raw.rem_euclid(d as i64) as u32
        })
        .collect();
    let set: BTreeSet<u32> = exponents.iter().copied().collect();
    if set.len() < exponents.len() {
        return EtaOutcome::Collision(exponents);
    }
    EtaOutcome::Necklace(Necklace::new(d, set).expect("exponents are residues mod d"))
}

/// Commutativity of the necklace pairing: with γ(λ), γ(λ') the η-necklaces,
/// U_{λ'}^{g,k} is dependent for γ(λ) exactly when U_λ^{g,k} is dependent
/// for γ(λ'). Returns the common value, or None if either η collides.
pub fn commutativity_check(
    d: u32,
    k: u32,
    g: u32,
    lambda: &Partition,
    lambda_prime: &Partition,
) -> Result<Option<bool>, SchurError> {
    let (EtaOutcome::Necklace(n1), EtaOutcome::Necklace(n2)) =
        (eta(d, k, lambda, false), eta(d, k, lambda_prime, false))
    else {
        return Ok(None);
    };
    let side1 = theorem_check(&n1.polynomial(), lambda_prime, g)?.dependent;
    let side2 = theorem_check(&n2.polynomial(), lambda, g)?.dependent;
    if side1 != side2 {
        return Err(SchurError::TheoremViolated(format!(
            "necklace commutativity fails for d={d}, k={k}, g={g}, \
             lambda={lambda}, lambda'={lambda_prime}"
        )));
    }
    Ok(Some(side1))
}

/// Search for pairs in N_{d,k} with equal circuit profiles up to the
/// degree bound that are not related by the skip action. The profile
/// function is injected so the reporting mechanism itself is testable.
pub fn converse_skip_search_with<F, P>(
    necklaces: &[Necklace],
    mut profile: F,
) -> Vec<(Necklace, Necklace)>
where
    F: FnMut(&Necklace) -> P,
    P: PartialEq,
{
    let profiles: Vec<P> = necklaces.iter().map(|n| profile(n)).collect();
    let mut pairs = Vec::new();
    for i in 0..necklaces.len() {
        let orbit = necklaces[i].skip_orbit();
        for j in i + 1..necklaces.len() {
            if profiles[i] == profiles[j] && !orbit.contains(&necklaces[j]) {
                pairs.push((necklaces[i].clone(), necklaces[j].clone()));
            }
        }
    }
    pairs
}

/// The search with the honest profile: circuits of the tropicalization up
/// to the degree bound.
pub fn converse_skip_search(
    d: u32,
    k: u32,
    max_degree: u32,
) -> Result<Vec<(Necklace, Necklace)>, NecklaceError> {
    let necklaces = enumerate(d, k)?;
    let mut profiles = Vec::new();
    for n in &necklaces {
        profiles.push(n.trop(max_degree).circuit_profile()?);
    }
    let mut pairs = Vec::new();
    for i in 0..necklaces.len() {
        let orbit = necklaces[i].skip_orbit();
        for j in i + 1..necklaces.len() {
            if profiles[i] == profiles[j] && !orbit.contains(&necklaces[j]) {
                pairs.push((necklaces[i].clone(), necklaces[j].clone()));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Zero;
    use crate::monomial::Monomial;

    fn nk(d: u32, pos: &[u32]) -> Necklace {
        Necklace::new(d, pos.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        let a = nk(6, &[0, 1]);
        let b = nk(6, &[3, 4]);
        assert_eq!(a, b);
        assert_eq!(a.bits(), "000011");
        assert_eq!(Necklace::parse("110000").unwrap(), a);
        assert_ne!(a, nk(6, &[0, 2]));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(6, 2).unwrap().len(), 3);
        assert_eq!(enumerate(8, 4).unwrap().len(), 10);
        for d in 1..=8 {
            assert_eq!(enumerate(d, d).unwrap().len(), 1);
        }
        assert!(enumerate(30, 2).is_err());
        assert!(enumerate(4, 0).is_err());
    }

    /// Orbit counting oracle: walk every subset, marking whole rotation
    /// orbits.
    fn orbit_count(d: u32, k: u32) -> usize {
        let mut visited = vec![false; 1usize << d];
        let mut count = 0;
        for mask in 0u32..1 << d {
            if mask.count_ones() != k || visited[mask as usize] {
                continue;
            }
            count += 1;
            let mut m = mask;
            for _ in 0..d {
                m = (m << 1 | m >> (d - 1)) & ((1 << d) - 1);
                visited[m as usize] = true;
            }
        }
        count
    }

    #[test]
    fn enumerate_matches_orbit_counting() {
        for d in 1..=12 {
            for k in 1..=d {
                assert_eq!(
                    enumerate(d, k).unwrap().len(),
                    orbit_count(d, k),
                    "N_{{{d},{k}}}"
                );
            }
        }
    }

    #[test]
    fn skip_action() {
        // pentagon, adjacent pair, jumps of 3: beads land two apart
        let gamma = nk(5, &[0, 1]);
        assert_eq!(gamma.skip(3).unwrap(), nk(5, &[0, 3]));
        assert_eq!(gamma.skip(1).unwrap(), gamma);
        assert!(gamma.skip(0).is_err());
        assert!(nk(6, &[0, 1]).skip(2).is_err());
        // group action: skipping by a then a^{-1} returns
        let g = nk(8, &[0, 1, 3]);
        assert_eq!(g.skip(3).unwrap().skip(3).unwrap(), g); // 3*3 = 9 = 1 mod 8
    }

    #[test]
    fn necklace_ideals() {
        assert_eq!(nk(1, &[0]).polynomial().to_string(), "x - y");
        // antipodal hexagon pair: (x - y)(x + y)
        assert_eq!(nk(6, &[0, 3]).polynomial().to_string(), "x^2 - y^2");
        // adjacent pair at the given representative {0, 1}
        let f = nk(6, &[0, 1]).polynomial();
        assert_eq!(f.degree(), 2);
        let z = CycNum::zeta_power(6, 1);
        assert_eq!(f.coeff(&Monomial::new(0, 2)), z);
        assert_eq!(f.coeff(&Monomial::new(1, 1)), -(CycNum::one() + z));
        // the canonicalized representative gives a rotated polynomial with
        // the same tropicalization
        let g = nk(6, &[0, 1]).canonicalize().polynomial();
        assert_ne!(f, g);
    }

    #[test]
    fn gcd_alpha_and_power_pairs() {
        let adj = nk(6, &[0, 1]);
        assert_eq!(adj.gcd_alpha(), 1);
        assert!(adj.power_pair_dependent(6));
        assert!(adj.power_pair_dependent(12));
        assert!(!adj.power_pair_dependent(4));

        let anti = nk(6, &[0, 3]);
        assert_eq!(anti.gcd_alpha(), 3);
        assert!(anti.power_pair_dependent(2));

        let all = nk(5, &[0, 1, 2, 3, 4]);
        assert_eq!(all.gcd_alpha(), 1);
        assert!(all.power_pair_dependent(5));
        assert!(!all.power_pair_dependent(4));
    }

    #[test]
    fn power_pair_matches_dependence_oracle() {
        for d in 2..=6u32 {
            for k in 1..=d {
                for gamma in enumerate(d, k).unwrap() {
                    let ideal = gamma.ideal();
                    for d_prime in k..=8 {
                        let set =
                            [Monomial::new(d_prime, 0), Monomial::new(0, d_prime)];
                        assert_eq!(
                            ideal.is_dependent_in(d_prime, &set).unwrap(),
                            gamma.power_pair_dependent(d_prime),
                            "gamma = {gamma}, d' = {d_prime}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn every_necklace_ideal_hits_its_power_pair() {
        for d in 1..=6u32 {
            for k in 1..=d {
                for gamma in enumerate(d, k).unwrap() {
                    let set = [Monomial::new(d, 0), Monomial::new(0, d)];
                    assert!(gamma.ideal().is_dependent_in(d, &set).unwrap());
                }
            }
        }
    }

    #[test]
    fn hexagon_pairs_have_distinct_tropicalizations() {
        let necklaces = enumerate(6, 2).unwrap();
        for i in 0..necklaces.len() {
            for j in i + 1..necklaces.len() {
                assert!(
                    !necklaces[i].trop_equal(&necklaces[j], 8).unwrap(),
                    "{} vs {}",
                    necklaces[i],
                    necklaces[j]
                );
            }
        }
        // the antipodal pair has the degree-2 circuit {x^2, y^2}
        let anti = nk(6, &[0, 3]);
        let t = anti.trop(4);
        assert!(t.piece(2).is_dependent(&["x^2*y^0", "x^0*y^2"]).unwrap());
    }

    #[test]
    fn skip_preserves_tropicalization_small() {
        for (d, k) in [(5u32, 2u32), (6, 2), (6, 3)] {
            for gamma in enumerate(d, k).unwrap() {
                for a in 2..d {
                    if a.gcd(&d) == 1 {
                        assert!(
                            gamma.trop_equal(&gamma.skip(a).unwrap(), 7).unwrap(),
                            "gamma = {gamma}, a = {a}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn determinant_examples() {
        // k = 1: a single root of unity, never zero
        let d1 = necklace_determinant(&nk(4, &[1]), &nk(4, &[2])).unwrap();
        assert!(!d1.is_zero());
        // antipodal square pairs: every entry is 1
        let anti = nk(4, &[0, 2]);
        assert!(necklace_determinant(&anti, &anti).unwrap().is_zero());
        // adjacent square pair against itself: positions {3, 0} canonical
        let adj = nk(4, &[0, 1]);
        assert!(!necklace_determinant(&adj, &adj).unwrap().is_zero());
        assert!(necklace_determinant(&adj, &nk(6, &[0, 1])).is_err());
    }

    #[test]
    fn determinant_vanishing_is_rotation_invariant() {
        let pairs = [
            (nk(6, &[0, 2]), nk(6, &[0, 3])),
            (nk(6, &[0, 1]), nk(6, &[0, 2])),
            (nk(4, &[0, 2]), nk(4, &[0, 2])),
            (nk(8, &[0, 1, 4]), nk(8, &[0, 2, 5])),
        ];
        for (n1, n2) in pairs {
            let reference = necklace_determinant(&n1, &n2).unwrap().is_zero();
            let d = n1.beads();
            for r in 0..d {
                // rotate the representative of n1 by hand
                let p: Vec<u32> =
                    n1.positions().iter().map(|&x| (x + r) % d).collect();
                let q: Vec<u32> = n2.positions().iter().copied().collect();
                let det = Matrix::from_fn(p.len(), q.len(), |i, j| {
                    CycNum::zeta_power(d, p[i] as i64 * q[j] as i64)
                })
                .det();
                assert_eq!(det.is_zero(), reference);
            }
        }
    }

    #[test]
    fn eta_examples() {
        // λ = ∅, k = 3, d = 6: exponents {2, 1, 0}, three consecutive beads
        match eta(6, 3, &Partition::empty(), false) {
            EtaOutcome::Necklace(n) => assert_eq!(n, nk(6, &[0, 1, 2])),
            other => panic!("unexpected {other:?}"),
        }
        // λ = (d), k = 1: single bead at d mod d = 0
        match eta(5, 1, &Partition::new(vec![5]), false) {
            EtaOutcome::Necklace(n) => assert_eq!(n, nk(5, &[0])),
            other => panic!("unexpected {other:?}"),
        }
        // collision: k = 2, d = 2, λ = (1): exponents {2, 0} = {0, 0} mod 2
        assert!(matches!(
            eta(2, 2, &Partition::new(vec![1]), false),
            EtaOutcome::Collision(_)
        ));
        // the shifted variant is a rotation: same necklace when defined
        for (d, k, parts) in [(6u32, 3u32, vec![2, 1]), (5, 2, vec![3]), (8, 3, vec![4, 2, 1])] {
            let lam = Partition::new(parts);
            match (eta(d, k, &lam, false), eta(d, k, &lam, true)) {
                (EtaOutcome::Necklace(a), EtaOutcome::Necklace(b)) => assert_eq!(a, b),
                (EtaOutcome::Collision(_), EtaOutcome::Collision(_)) => {}
                other => panic!("conventions disagree: {other:?}"),
            }
        }
    }

    #[test]
    fn first_collision_by_search() {
        'outer: for d in 1..=4u32 {
            for k in 2..=3u32 {
                for l1 in 0..=4u32 {
                    for l2 in 0..=l1 {
                        let lam = Partition::new(vec![l1, l2]);
                        if let EtaOutcome::Collision(e) = eta(d, k, &lam, false) {
                            assert_eq!(d, 1, "first collision is at d = 1 ({e:?})");
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutativity_small() {
        // λ = λ': trivially symmetric
        let lam = Partition::new(vec![2, 1]);
        let r = commutativity_check(6, 2, 4, &lam, &lam).unwrap();
        assert!(r.is_some());
        // collision reports None rather than asserting
        let r = commutativity_check(2, 2, 3, &Partition::new(vec![1]), &lam).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn converse_search_mechanism() {
        let necklaces = enumerate(6, 2).unwrap();
        // constant profile: everything collides, so all non-orbit pairs
        // get reported
        let pairs = converse_skip_search_with(&necklaces, |_| 0u8);
        assert!(!pairs.is_empty(), "injected duplicate profile is reported");
        // honest profile on the hexagon: no counterexamples
        let pairs = converse_skip_search(6, 2, 7).unwrap();
        assert!(pairs.is_empty());
    }
}
