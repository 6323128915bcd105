//! Homogeneous polynomials in k[x, y] with cyclotomic coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclotomic::CycNum;
use crate::field::{One, Zero};
use crate::monomial::Monomial;

/// A homogeneous polynomial of a fixed degree; only nonzero coefficients
/// are stored, so the key set is the support.
#[derive(Clone, PartialEq)]
pub struct HomogPoly {
    degree: u32,
    coeffs: BTreeMap<Monomial, CycNum>,
}

impl HomogPoly {
    pub fn new(degree: u32, coeffs: BTreeMap<Monomial, CycNum>) -> Self {
        for m in coeffs.keys() {
            assert_eq!(m.degree(), degree, "mixed degrees in homogeneous polynomial");
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        HomogPoly { degree, coeffs }
    }

    pub fn zero(degree: u32) -> Self {
        HomogPoly { degree, coeffs: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(m, CycNum::one());
        HomogPoly { degree: m.degree(), coeffs }
    }

    /// From the coefficient vector in the standard degree-d listing
    /// (index = y-exponent).
    pub fn from_coeff_vec(degree: u32, v: &[CycNum]) -> Self {
        assert_eq!(v.len() as u32, degree + 1);
        let coeffs = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::new(degree - i as u32, i as u32), c.clone()))
            .collect();
        HomogPoly { degree, coeffs }
    }

    /// The product of linear forms (p_i x + q_i y).
    pub fn product_of_linear(factors: &[(CycNum, CycNum)]) -> Self {
        let mut acc = vec![CycNum::one()];
        for (p, q) in factors {
            let mut next = vec![CycNum::zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i] = next[i].clone() + c.clone() * p.clone();
                next[i + 1] = next[i + 1].clone() + c.clone() * q.clone();
            }
            acc = next;
        }
        Self::from_coeff_vec(factors.len() as u32, &acc)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> CycNum {
        self.coeffs.get(m).cloned().unwrap_or_else(CycNum::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycNum)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.coeffs.keys().copied().collect()
    }

    /// Coefficients in the standard degree-d listing (index = y-exponent).
    pub fn coeff_vec(&self) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); (self.degree + 1) as usize];
        for (m, c) in &self.coeffs {
            v[m.b as usize] = c.clone();
        }
        v
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mm, c)| (mm.mul(m), c.clone()))
            .collect();
        HomogPoly { degree: self.degree + m.degree(), coeffs }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, x)| (*m, x.clone() * c.clone()))
            .collect();
        HomogPoly { degree: self.degree, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut coeffs = self.coeffs.clone();
        for (m, c) in &other.coeffs {
            let entry = coeffs.entry(*m).or_insert_with(CycNum::zero);
            *entry = entry.clone() + c.clone();
        }
        Self::new(self.degree, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<Monomial, CycNum> = BTreeMap::new();
        for (m1, c1) in &self.coeffs {
            for (m2, c2) in &other.coeffs {
                let m = m1.mul(m2);
                let entry = coeffs.entry(m).or_insert_with(CycNum::zero);
                *entry = entry.clone() + c1.clone() * c2.clone();
            }
        }
        Self::new(self.degree + other.degree, coeffs)
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // display in the paper's default order: increasing y-exponent
        let mut terms: Vec<(&Monomial, &CycNum)> = self.coeffs.iter().collect();
        terms.sort_by_key(|(m, _)| m.b);
        let mut first = true;
        for (m, c) in terms {
            let (neg, mag) = match c.as_rational() {
                Some(q) if q < crate::field::Rational::zero() => {
                    (true, CycNum::from_rational(-q))
                }
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_constant_term = m.degree() == 0;
            if mag.is_one() && !is_constant_term {
                write!(f, "{m}")?;
            } else {
                if mag.as_rational().is_some() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
                if !is_constant_term {
                    write!(f, "*{m}")?;
                }
            }
        }
        Ok(())
    }
}
