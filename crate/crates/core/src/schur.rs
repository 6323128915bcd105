//! Partitions, rim paths, and bihomogeneous symmetric polynomials: the
//! dictionary between k-element monomial sets in degree h+k-1 and Schur
//! polynomials in k pairs of variables, together with the three-way
//! dependence test that ties it all together.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cyclotomic::CycNum;
use crate::field::{Field, One, Zero};
use crate::ideal::{GradedIdeal, IdealError};
use crate::matrix::Matrix;
use crate::monomial::Monomial;
use crate::poly::HomogPoly;

#[derive(Debug, Error)]
pub enum SchurError {
    #[error("partition {0:?} does not fit in a {1}x{2} box")]
    OutOfBox(Vec<u32>, u32, u32),
    #[error("expected a set of {want} monomials of degree {degree}, got {got}")]
    BadMonomialSet { want: usize, degree: u32, got: String },
    #[error("repeated points: the Vandermonde denominator vanishes")]
    RepeatedPoints,
    #[error("elementary index {0} out of range 0..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("point (0,0) is not on the projective line")]
    ZeroPoint,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("theorem violated: {0}")]
    TheoremViolated(String),
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 0-based, with implicit zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn fits_in_box(&self, k: u32, h: u32) -> bool {
        self.len() as u32 <= k && self.first() <= h
    }

    /// Conjugate partition: λ'_i = #{j : λ_j ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let rows = self.first();
        let parts = (1..=rows)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Subtract c from every part (requires λ_last >= c when padded to k
    /// parts is not intended; used for the factor-out identity).
    pub fn subtract_all(&self, c: u32, k: usize) -> Partition {
        let parts = (0..k).map(|i| self.part(i).saturating_sub(c)).collect();
        Partition::new(parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Left,
    Down,
}

/// The lattice path along the rim of λ inside a k×h box, from (h, 0) down
/// to (0, -k); h Left steps and k Down steps, indexed 0..h+k-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimPath {
    pub h: u32,
    pub k: u32,
    pub steps: Vec<Step>,
}

pub fn rim_path(lambda: &Partition, h: u32, k: u32) -> Result<RimPath, SchurError> {
    if !lambda.fits_in_box(k, h) {
        return Err(SchurError::OutOfBox(lambda.parts().to_vec(), k, h));
    }
    // the down step of row j (1-based) is step h - λ_j + j - 1
    let down_at: BTreeSet<u32> = (1..=k).map(|j| h - lambda.part(j as usize - 1) + j - 1).collect();
    let steps = (0..h + k)
        .map(|i| if down_at.contains(&i) { Step::Down } else { Step::Left })
        .collect();
    Ok(RimPath { h, k, steps })
}

/// The monomial set U_λ^{h,k}: degree h+k-1 monomials x^{h+k-1-i} y^i over
/// the Down steps i of the rim path. Its x-exponents are λ_j + k - j.
pub fn monomial_set(lambda: &Partition, h: u32, k: u32) -> Result<BTreeSet<Monomial>, SchurError> {
    let path = rim_path(lambda, h, k)?;
    Ok(path
        .steps
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::Down)
        .map(|(i, _)| Monomial::new(h + k - 1 - i as u32, i as u32))
        .collect())
}

/// Inverse of `monomial_set`: every k-element subset of the degree h+k-1
/// monomials arises from exactly one partition in the k×h box.
pub fn partition_of(
    set: &BTreeSet<Monomial>,
    h: u32,
    k: u32,
) -> Result<Partition, SchurError> {
    let bad = || SchurError::BadMonomialSet {
        want: k as usize,
        degree: h + k - 1,
        got: format!("{set:?}"),
    };
    if set.len() != k as usize {
        return Err(bad());
    }
    let mut xs: Vec<u32> = Vec::new();
    for m in set {
        if m.degree() != h + k - 1 {
            return Err(bad());
        }
        xs.push(m.a);
    }
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u32> = xs
        .iter()
        .enumerate()
        .map(|(i, &l)| l - (k - 1 - i as u32))
        .collect();
    Ok(Partition::new(parts))
}

/// k points of the projective line, stored as coordinate pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfig {
    pairs: Vec<(CycNum, CycNum)>,
}

impl PointConfig {
    pub fn new(pairs: Vec<(CycNum, CycNum)>) -> Result<Self, SchurError> {
        if pairs.iter().any(|(x, y)| x.is_zero() && y.is_zero()) {
            return Err(SchurError::ZeroPoint);
        }
        Ok(PointConfig { pairs })
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(CycNum, CycNum)] {
        &self.pairs
    }

    /// The degree-k form ∏ (y_i x + x_i y). Its coefficient vector is
    /// exactly (e_0, ..., e_k) of this configuration; its roots are the
    /// points (-x_i : y_i), i.e. the negatives of the configuration.
    pub fn ideal_polynomial(&self) -> HomogPoly {
        HomogPoly::product_of_linear(
            &self.pairs.iter().map(|(x, y)| (y.clone(), x.clone())).collect::<Vec<_>>(),
        )
    }
}

/// All elementary symmetric values e_0, ..., e_k at the configuration:
/// e_j is the t^j coefficient of ∏ (y_i + x_i t).
pub fn elementary_all(config: &PointConfig) -> Vec<CycNum> {
    let mut acc = vec![CycNum::one()];
    for (x, y) in config.pairs() {
        let mut next = vec![CycNum::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i] = next[i].clone() + c.clone() * y.clone();
            next[i + 1] = next[i + 1].clone() + c.clone() * x.clone();
        }
        acc = next;
    }
    acc
}

pub fn elementary_eval(j: usize, config: &PointConfig) -> Result<CycNum, SchurError> {
    let all = elementary_all(config);
    all.get(j)
        .cloned()
        .ok_or(SchurError::IndexOutOfRange(j, config.k()))
}

/// The bihomogeneous complete symmetric value h_i: the sum over
/// i_1 + ... + i_k = i of ∏_j x_j^{i_j} y_j^{i - i_j}.
pub fn complete_eval(i: u32, config: &PointConfig) -> CycNum {
    let i = i as usize;
    // coefficient of t^i in ∏_j (y_j^i + x_j y_j^{i-1} t + ... + x_j^i t^i)
    let mut acc = vec![CycNum::zero(); i + 1];
    acc[0] = CycNum::one();
    for (x, y) in config.pairs() {
        // powers x^m y^{i-m}
        let mut pair_poly = vec![CycNum::zero(); i + 1];
        let mut xp = CycNum::one();
        for m in 0..=i {
            pair_poly[m] = xp.clone();
            xp = xp * x.clone();
        }
        let mut yp = CycNum::one();
        for m in (0..=i).rev() {
            pair_poly[m] = pair_poly[m].clone() * yp.clone();
            yp = yp * y.clone();
        }
        let mut next = vec![CycNum::zero(); i + 1];
        for a in 0..=i {
            if acc[a].is_zero() {
                continue;
            }
            for b in 0..=i - a {
                if !pair_poly[b].is_zero() {
                    next[a + b] =
                        next[a + b].clone() + acc[a].clone() * pair_poly[b].clone();
                }
            }
        }
        acc = next;
    }
    acc[i].clone()
}

/// Bialternant form: a_{λ+δ} / a_δ with a_{(l_1,...,l_k)} the determinant
/// of (x_j^{l_i} y_j^{l_1 - l_i}). Requires pairwise distinct points.
pub fn schur_eval_bialternant(
    lambda: &Partition,
    config: &PointConfig,
) -> Result<CycNum, SchurError> {
    let k = config.k();
    assert!(lambda.len() <= k, "partition has more than k parts");
    let alternant = |ls: &[u32]| -> CycNum {
        let l0 = ls[0];
        Matrix::from_fn(k, k, |i, j| {
            let (x, y) = &config.pairs()[j];
            x.pow(ls[i]) * y.pow(l0 - ls[i])
        })
        .det()
    };
    let delta: Vec<u32> = (0..k as u32).rev().collect();
    let denom = alternant(&delta);
    if denom.is_zero() {
        return Err(SchurError::RepeatedPoints);
    }
    let shifted: Vec<u32> = (0..k)
        .map(|i| lambda.part(i) + (k - 1 - i) as u32)
        .collect();
    let numer = alternant(&shifted);
    Ok(numer * denom.inv().unwrap())
}

/// Schur value from elementary values via the second Jacobi-Trudi formula:
/// the λ_1 × λ_1 determinant of (e_{λ'_i - i + j}).
pub fn schur_from_elementaries(lambda: &Partition, e: &[CycNum]) -> CycNum {
    let m = lambda.first() as usize;
    if m == 0 {
        return CycNum::one();
    }
    let conj = lambda.conjugate();
    Matrix::from_fn(m, m, |i, j| {
        let idx = conj.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 || idx as usize >= e.len() {
            CycNum::zero()
        } else {
            e[idx as usize].clone()
        }
    })
    .det()
}

/// Jacobi-Trudi evaluation; defined at every configuration, including
/// repeated points.
pub fn schur_eval_jacobi_trudi(lambda: &Partition, config: &PointConfig) -> CycNum {
    schur_from_elementaries(lambda, &elementary_all(config))
}

/// Every partition with at most k parts and first part at most h.
pub fn partitions_in_box(k: u32, h: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<Vec<u32>> = vec![vec![]];
    while let Some(cur) = stack.pop() {
        if cur.len() as u32 == k {
            continue;
        }
        let max = cur.last().copied().unwrap_or(h);
        for next in 1..=max {
            let mut v = cur.clone();
            v.push(next);
            out.push(Partition::new(v.clone()));
            stack.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The (h+k) × h band matrix with entry (b, j) = e_{b-j}, where the
/// elementary values are the coefficients of the degree-k form f (rows are
/// the degree h+k-1 monomials, row b having y-exponent b).
pub fn build_xa(f: &HomogPoly, h: u32) -> Matrix<CycNum> {
    let e = f.coeff_vec();
    let k = f.degree();
    Matrix::from_fn((h + k) as usize, h as usize, |b, j| {
        let idx = b as i64 - j as i64;
        if idx < 0 || idx > k as i64 {
            CycNum::zero()
        } else {
            e[idx as usize].clone()
        }
    })
}

/// Outcome of the three-way dependence test for one (f, λ, h).
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub dependent: bool,
    pub determinant: CycNum,
    pub schur_product: CycNum,
    /// determinant = sign * schur_product; 0 when both vanish.
    pub sign: i8,
}

/// Checks, for the principal ideal (f) and the monomial set U_λ^{h,k},
/// that the following three agree, and reports them:
///   (1) U_λ^{h,k} is dependent modulo (f) in degree h+k-1;
///   (2) the determinant of the U-rows-deleted band matrix vanishes;
///   (3) e_0^{h-λ_1} s_λ vanishes (Schur value from the coefficients of f).
/// A disagreement is returned as an error.
pub fn theorem_check(
    f: &HomogPoly,
    lambda: &Partition,
    h: u32,
) -> Result<TheoremReport, SchurError> {
    theorem_check_in(&GradedIdeal::principal(f.clone())?, lambda, h)
}

/// `theorem_check` against an already-built principal ideal, so a sweep
/// over many partitions reuses the cached graded piece.
pub fn theorem_check_in(
    ideal: &GradedIdeal,
    lambda: &Partition,
    h: u32,
) -> Result<TheoremReport, SchurError> {
    assert_eq!(ideal.generators().len(), 1, "the ideal must be principal");
    let f = &ideal.generators()[0];
    let k = f.degree();
    if !lambda.fits_in_box(k, h) {
        return Err(SchurError::OutOfBox(lambda.parts().to_vec(), k, h));
    }
    let u: Vec<Monomial> = monomial_set(lambda, h, k)?.into_iter().collect();

    let dependent = ideal.is_dependent_in(h + k - 1, &u)?;

    let xa = build_xa(f, h);
    let drop_rows: Vec<usize> = u.iter().map(|m| m.b as usize).collect();
    let determinant = xa.delete_rows(&drop_rows).det();

    let e = f.coeff_vec();
    let mut schur_product = schur_from_elementaries(lambda, &e);
    for _ in 0..h - lambda.first() {
        schur_product = schur_product * e[0].clone();
    }

    if dependent != determinant.is_zero() || dependent != schur_product.is_zero() {
        return Err(SchurError::TheoremViolated(format!(
            "f = {f}, lambda = {lambda}, h = {h}: dependent = {dependent}, \
             det = {determinant}, e0^(h-l1) s = {schur_product}"
        )));
    }
    let sign = if determinant.is_zero() {
        0
    } else if determinant == schur_product {
        1
    } else if determinant == -schur_product.clone() {
        -1
    } else {
        return Err(SchurError::TheoremViolated(format!(
            "f = {f}, lambda = {lambda}, h = {h}: det = {determinant} is not \
             ± (e0^(h-l1) s = {schur_product})"
        )));
    };
    Ok(TheoremReport { dependent, determinant, schur_product, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::parse::parse_homog_poly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn rational_config(vals: &[(i64, i64)]) -> PointConfig {
        PointConfig::new(
            vals.iter()
                .map(|&(x, y)| (CycNum::from_int(x), CycNum::from_int(y)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rim_path_running_example() {
        // U_{(4,1)}^{5,3} = {x^6 y, x^2 y^5, y^7}
        let u = monomial_set(&p(&[4, 1]), 5, 3).unwrap();
        let expect: BTreeSet<Monomial> =
            [(6, 1), (2, 5), (0, 7)].iter().map(|&(a, b)| Monomial::new(a, b)).collect();
        assert_eq!(u, expect);
        // inverse
        assert_eq!(partition_of(&u, 5, 3).unwrap(), p(&[4, 1]));
    }

    #[test]
    fn empty_partition_gives_lowest_x_degrees() {
        let u = monomial_set(&Partition::empty(), 4, 3).unwrap();
        let expect: BTreeSet<Monomial> =
            (0..3).map(|j| Monomial::new(2 - j, 4 + j)).collect();
        assert_eq!(u, expect);
    }

    #[test]
    fn admissible_partition_example() {
        let u = monomial_set(&p(&[7, 4, 4, 1]), 7, 5).unwrap();
        for (a, b) in [(11, 0), (7, 4), (6, 5), (2, 9), (0, 11)] {
            assert!(u.contains(&Monomial::new(a, b)), "missing x^{a} y^{b}");
        }
        assert!(rim_path(&p(&[8]), 7, 5).is_err());
        assert!(rim_path(&p(&[1, 1, 1, 1, 1, 1]), 7, 5).is_err());
    }

    #[test]
    fn partition_of_round_trip_random() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let k = rng.random_range(1..=5u32);
            let h = rng.random_range(1..=6u32);
            let mut parts: Vec<u32> = (0..rng.random_range(0..=k))
                .map(|_| rng.random_range(0..=h))
                .collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts);
            let u = monomial_set(&lam, h, k).unwrap();
            assert_eq!(u.len(), k as usize);
            assert_eq!(partition_of(&u, h, k).unwrap(), lam);
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..30 {
            let mut parts: Vec<u32> =
                (0..rng.random_range(0..5)).map(|_| rng.random_range(1..6)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts);
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn elementary_extremes() {
        let cfg = rational_config(&[(2, 3), (5, 7), (11, 13)]);
        let e = elementary_all(&cfg);
        assert_eq!(e[0], CycNum::from_int(3 * 7 * 13));
        assert_eq!(e[3], CycNum::from_int(2 * 5 * 11));
        assert!(elementary_eval(4, &cfg).is_err());
    }

    #[test]
    fn complete_symmetric_vanishes_on_hexagon_pair() {
        // d = 6, k = 2: h_5 vanishes at two vertices of the hexagon
        let cfg = PointConfig::new(vec![
            (CycNum::one(), CycNum::one()),
            (CycNum::zeta_power(6, 1), CycNum::one()),
        ])
        .unwrap();
        assert!(complete_eval(5, &cfg).is_zero());
        assert!(!complete_eval(4, &cfg).is_zero());
        assert!(complete_eval(0, &cfg).is_one());
    }

    #[test]
    fn bialternant_basics() {
        let cfg = rational_config(&[(2, 1), (3, 1), (5, 1)]);
        assert!(schur_eval_bialternant(&Partition::empty(), &cfg).unwrap().is_one());
        // k = 1: s_(n) = x^n
        let single = rational_config(&[(3, 2)]);
        assert_eq!(
            schur_eval_bialternant(&p(&[4]), &single).unwrap(),
            CycNum::from_int(81)
        );
        // repeated points refuse
        let rep = rational_config(&[(1, 1), (2, 2)]);
        assert!(matches!(
            schur_eval_bialternant(&p(&[1]), &rep),
            Err(SchurError::RepeatedPoints)
        ));
        // Jacobi-Trudi handles them
        let _ = schur_eval_jacobi_trudi(&p(&[1]), &rep);
    }

    #[test]
    fn jacobi_trudi_matches_bialternant() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..60 {
            let k = rng.random_range(1..=4);
            let mut pts: Vec<(i64, i64)> = Vec::new();
            while pts.len() < k {
                let cand = (rng.random_range(-4..=4), rng.random_range(1..=4));
                if pts.iter().all(|&(a, b)| a * cand.1 != cand.0 * b) {
                    pts.push(cand);
                }
            }
            let cfg = rational_config(&pts);
            let mut parts: Vec<u32> =
                (0..rng.random_range(0..=k)).map(|_| rng.random_range(1..=4)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts);
            assert_eq!(
                schur_eval_jacobi_trudi(&lam, &cfg),
                schur_eval_bialternant(&lam, &cfg).unwrap(),
                "lambda = {lam}, pts = {pts:?}"
            );
        }
    }

    #[test]
    fn bihomogeneity_and_symmetry() {
        let cfg = rational_config(&[(2, 1), (3, -1), (1, 4)]);
        let lam = p(&[3, 1]);
        let s = schur_eval_jacobi_trudi(&lam, &cfg);
        // scale the middle pair by t: s_λ picks up t^{λ_1}
        let t = CycNum::from_rational(Rational::new(7.into(), 2.into()));
        let scaled = PointConfig::new(vec![
            (CycNum::from_int(2), CycNum::from_int(1)),
            (CycNum::from_int(3) * t.clone(), CycNum::from_int(-1) * t.clone()),
            (CycNum::from_int(1), CycNum::from_int(4)),
        ])
        .unwrap();
        assert_eq!(schur_eval_jacobi_trudi(&lam, &scaled), s.clone() * t.pow(3));
        // e_j scales linearly in the pair
        assert_eq!(
            elementary_eval(2, &scaled).unwrap(),
            elementary_eval(2, &cfg).unwrap() * t.clone()
        );
        // permutation invariance
        let perm = rational_config(&[(1, 4), (2, 1), (3, -1)]);
        assert_eq!(schur_eval_jacobi_trudi(&lam, &perm), s);
    }

    #[test]
    fn factor_out_full_columns() {
        // s_λ = e_k^{λ_k} s_{λ - (λ_k,...,λ_k)} when λ has k parts
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..50 {
            let k = rng.random_range(1..=4usize);
            let mut parts: Vec<u32> = (0..k).map(|_| rng.random_range(1..=4)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(parts.clone());
            if lam.len() < k {
                continue;
            }
            let cfg = rational_config(
                &(0..k)
                    .map(|_| (rng.random_range(-3..=3), rng.random_range(-3..=3)))
                    .filter(|&(a, b)| a != 0 || b != 0)
                    .collect::<Vec<_>>(),
            );
            if cfg.k() < k {
                continue;
            }
            let lk = lam.part(k - 1);
            let reduced = lam.subtract_all(lk, k);
            let e = elementary_all(&cfg);
            let lhs = schur_eval_jacobi_trudi(&lam, &cfg);
            let rhs = e[k].pow(lk) * schur_eval_jacobi_trudi(&reduced, &cfg);
            assert_eq!(lhs, rhs, "lambda = {lam}");
        }
    }

    #[test]
    fn band_matrix_shape() {
        let f = parse_homog_poly("x^2 + 3*x*y + 2*y^2").unwrap();
        let xa = build_xa(&f, 3);
        assert_eq!((xa.rows(), xa.cols()), (5, 3));
        // row b, column j holds e_{b-j}
        assert_eq!(xa[(0, 0)], CycNum::one());
        assert_eq!(xa[(1, 0)], CycNum::from_int(3));
        assert_eq!(xa[(2, 0)], CycNum::from_int(2));
        assert!(xa[(3, 0)].is_zero());
        assert_eq!(xa[(2, 1)], CycNum::from_int(3));
    }

    #[test]
    fn theorem_check_empty_partition() {
        // det = e_0^h, so dependence of U_∅ means the coefficient of x^k
        // vanishes (a root at [1:0])
        let f = parse_homog_poly("x^2 - y^2").unwrap();
        let rep = theorem_check(&f, &Partition::empty(), 4).unwrap();
        assert!(!rep.dependent);
        assert_eq!(rep.schur_product, CycNum::one());
        let g = parse_homog_poly("x*y + y^2").unwrap(); // root at [1:0]
        let rep = theorem_check(&g, &Partition::empty(), 4).unwrap();
        assert!(rep.dependent);
    }

    #[test]
    fn theorem_check_small_boxes_exhaustive() {
        let mut rng = StdRng::seed_from_u64(29);
        for h in 1..=3u32 {
            for k in 1..=3u32 {
                let lambdas = partitions_in_box(k, h);
                for _ in 0..5 {
                    let coeffs: Vec<i64> =
                        (0..=k).map(|_| rng.random_range(-3..=3)).collect();
                    if coeffs.iter().all(|&c| c == 0) {
                        continue;
                    }
                    let f = HomogPoly::from_coeff_vec(
                        k,
                        &coeffs.iter().map(|&c| CycNum::from_int(c)).collect::<Vec<_>>(),
                    );
                    for lam in &lambdas {
                        theorem_check(&f, lam, h).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn hexagon_necklace_vanishing_partition() {
        // two adjacent hexagon vertices: U_{(5)}^{5,2} = {x^6, y^6} is
        // dependent, and s_(5) = h_5 vanishes there
        let z = CycNum::zeta_power(6, 1);
        let f = HomogPoly::product_of_linear(&[
            (CycNum::one(), -CycNum::one()),
            (CycNum::one(), -z),
        ]);
        let u = monomial_set(&p(&[5]), 5, 2).unwrap();
        let expect: BTreeSet<Monomial> =
            [(6, 0), (0, 6)].iter().map(|&(a, b)| Monomial::new(a, b)).collect();
        assert_eq!(u, expect);
        let rep = theorem_check(&f, &p(&[5]), 5).unwrap();
        assert!(rep.dependent);
        let rep = theorem_check(&f, &p(&[4]), 5).unwrap();
        assert!(!rep.dependent);
    }
}
