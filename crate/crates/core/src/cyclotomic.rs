//! Exact arithmetic in cyclotomic fields Q(zeta_d).
//!
//! Elements are stored as residues modulo the d-th cyclotomic polynomial
//! Phi_d, i.e. as vectors of phi(d) rationals. The representation is the
//! unique reduced residue, so the zero test is "all coefficients zero" —
//! every dependence decision in the crate bottoms out here.
//!
//! The order d = 1 case degenerates to plain rationals.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, Integer};

use crate::field::{Field, One, Rational, Zero};

/// Euler's totient.
pub fn totient(d: u32) -> u32 {
    assert!(d >= 1);
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn divisors(d: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for e in 1..=d {
        if d % e == 0 {
            out.push(e);
        }
    }
    out
}

/// Exact division of integer polynomials, with the divisor monic.
/// Coefficients are dense, lowest degree first. Panics if not exact.
fn zpoly_div_exact(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let dn = num.len() - 1;
    assert!(dn >= dd);
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = num[i + dd].clone();
        if !c.is_zero() {
            for (j, dc) in den.iter().enumerate() {
                num[i + j] -= &c * dc;
            }
        }
        quot[i] = c;
    }
    assert!(num.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The monic d-th cyclotomic polynomial Phi_d, dense integer coefficients,
/// lowest degree first. Computed by exact division of x^d - 1 by Phi_e over
/// the proper divisors e of d, and memoized globally.
pub fn cyclotomic_polynomial(d: u32) -> Arc<Vec<BigInt>> {
    assert!(d >= 1, "order must be positive");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let poly = if d == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^d - 1
        let mut num = vec![BigInt::zero(); (d + 1) as usize];
        num[0] = BigInt::from(-1);
        num[d as usize] = BigInt::from(1);
        let mut num = num;
        for e in divisors(d) {
            if e < d {
                let phi_e = cyclotomic_polynomial(e);
                num = zpoly_div_exact(num, &phi_e);
            }
        }
        num
    };
    debug_assert_eq!(poly.len() as u32 - 1, totient(d));
    let arc = Arc::new(poly);
    cyclo_cache().lock().unwrap().insert(d, arc.clone());
    arc
}

// ---- dense polynomials over Q, used for reduction mod Phi_d ----

fn qpoly_trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn qpoly_is_zero(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    out
}

/// Remainder of a modulo b (b need not be monic; field division is exact).
fn qpoly_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let mut bv = b.to_vec();
    qpoly_trim(&mut bv);
    let db = bv.len() - 1;
    assert!(db > 0 || !bv[0].is_zero());
    let lead_inv = bv[db].clone().recip();
    loop {
        qpoly_trim(&mut a);
        let da = a.len() - 1;
        if da < db || qpoly_is_zero(&a) {
            return a;
        }
        let c = &a[da] * &lead_inv;
        for j in 0..=db {
            let t = &c * &bv[j];
            a[da - db + j] -= t;
        }
    }
}

/// Quotient and remainder.
fn qpoly_divrem(mut a: Vec<Rational>, b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut bv = b.to_vec();
    qpoly_trim(&mut bv);
    let db = bv.len() - 1;
    let lead_inv = bv[db].clone().recip();
    qpoly_trim(&mut a);
    if a.len() - 1 < db {
        return (vec![Rational::zero()], a);
    }
    let mut q = vec![Rational::zero(); a.len() - db];
    for i in (0..a.len() - db).rev() {
        let c = &a[i + db] * &lead_inv;
        if !c.is_zero() {
            for j in 0..=db {
                let t = &c * &bv[j];
                a[i + j] -= t;
            }
        }
        q[i] = c;
    }
    qpoly_trim(&mut a);
    (q, a)
}

/// An element of Q(zeta_d): `coeffs[j]` is the coefficient of zeta_d^j,
/// reduced modulo Phi_d so that `coeffs.len() == phi(d)`.
#[derive(Clone)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    /// Reduce an arbitrary coefficient vector (in powers of zeta_d) mod Phi_d.
    pub fn from_poly(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1);
        let phi = totient(order) as usize;
        let mut c = coeffs;
        if c.is_empty() {
            c.push(Rational::zero());
        }
        if c.len() > phi {
            let modulus: Vec<Rational> = cyclotomic_polynomial(order)
                .iter()
                .map(|z| BigRational::from_integer(z.clone()))
                .collect();
            c = qpoly_rem(c, &modulus);
        }
        c.resize(phi, Rational::zero());
        CycNum { order, coeffs: c }
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum { order: 1, coeffs: vec![q] }
    }

    /// zeta_d^e, with e taken modulo d (negative e allowed).
    pub fn zeta_power(order: u32, e: i64) -> Self {
        assert!(order >= 1);
        let e = e.rem_euclid(order as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_poly(order, c)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Embed into Q(zeta_m); requires self.order | m. Sends zeta_d to
    /// zeta_m^{m/d}.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.order == 0, "no embedding Q(z{}) -> Q(z{})", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut c = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, q) in self.coeffs.iter().enumerate() {
            c[j * step] = q.clone();
        }
        Self::from_poly(m, c)
    }

    /// Bring two elements into the common field Q(zeta_lcm).
    fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = a.order.lcm(&b.order);
            (a.embed(m), b.embed(m))
        }
    }

    /// The rational part if the element lies in Q, else None.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::align(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycNum {}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        let (mut a, b) = Self::align(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        self + (-rhs)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        let (a, b) = Self::align(&self, &rhs);
        let prod = qpoly_mul(&a.coeffs, &b.coeffs);
        CycNum::from_poly(a.order, prod)
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

impl Field for CycNum {
    /// Inverse via the extended Euclidean algorithm against Phi_d.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self {
                order: self.order,
                coeffs: {
                    let mut c = vec![Rational::zero(); self.coeffs.len()];
                    c[0] = q.recip();
                    c
                },
            });
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|z| BigRational::from_integer(z.clone()))
            .collect();
        // Bezout: s*a + t*Phi = g, with g a nonzero constant since Phi_d is
        // irreducible over Q.
        let mut r0 = modulus.clone();
        let mut r1 = self.coeffs.clone();
        qpoly_trim(&mut r1);
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        while !qpoly_is_zero(&r1) {
            let (q, r) = qpoly_divrem(r0.clone(), &r1);
            let qs1 = qpoly_mul(&q, &s1);
            let mut s2 = s0.clone();
            s2.resize(s2.len().max(qs1.len()), Rational::zero());
            for (i, c) in qs1.iter().enumerate() {
                s2[i] -= c;
            }
            qpoly_trim(&mut s2);
            r0 = r1;
            r1 = r;
            qpoly_trim(&mut r1);
            s0 = s1;
            s1 = s2;
        }
        assert_eq!(r0.len(), 1, "Phi_d must be coprime to any nonzero residue");
        let ginv = r0[0].clone().recip();
        let inv: Vec<Rational> = s0.iter().map(|c| c * &ginv).collect();
        Some(Self::from_poly(self.order, inv))
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
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
            if p == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z({})", self.order)?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bigints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), bigints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), bigints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), bigints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), bigints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), bigints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degrees_sum_to_d() {
        for d in 1..=100 {
            let total: u32 = divisors(d)
                .iter()
                .map(|&e| cyclotomic_polynomial(e).len() as u32 - 1)
                .sum();
            assert_eq!(total, d, "sum of deg Phi_e over e|{d}");
        }
    }

    #[test]
    fn zeta6_satisfies_phi6() {
        let z = CycNum::zeta_power(6, 1);
        let val = z.clone() * z.clone() - z + CycNum::one();
        assert!(val.is_zero());
    }

    #[test]
    fn inverse_of_2_plus_3i() {
        let a = CycNum::from_int(2) + CycNum::from_int(3) * CycNum::zeta_power(4, 1);
        let b = a.inv().unwrap();
        assert!((a * b).is_one());
        assert!(CycNum::zero().inv().is_none());
    }

    #[test]
    fn zeta_d_to_the_d_is_one() {
        for d in 1..=24 {
            let mut acc = CycNum::one();
            let z = CycNum::zeta_power(d, 1);
            for _ in 0..d {
                acc = acc * z.clone();
            }
            assert!(acc.is_one(), "zeta_{d}^{d}");
            assert!(CycNum::zeta_power(d, d as i64).is_one());
        }
    }

    #[test]
    fn mixed_order_embedding() {
        // zeta_4 * zeta_6 = zeta_12^5
        let prod = CycNum::zeta_power(4, 1) * CycNum::zeta_power(6, 1);
        assert_eq!(prod, CycNum::zeta_power(12, 5));
        // zeta_2 = -1 in any containing field
        assert_eq!(CycNum::zeta_power(2, 1), CycNum::from_int(-1));
        assert_eq!(CycNum::zeta_power(6, 3), CycNum::from_int(-1));
    }

    #[test]
    fn negative_zeta_exponent() {
        let d = 8;
        let z = CycNum::zeta_power(d, -3);
        assert_eq!(z, CycNum::zeta_power(d, 5));
    }

    fn arb_triple() -> impl Strategy<Value = (u32, Vec<i64>, Vec<i64>, Vec<i64>)> {
        prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 12]).prop_flat_map(|d| {
            let phi = totient(d) as usize;
            let coeffs = || proptest::collection::vec(-4i64..=4, phi);
            (Just(d), coeffs(), coeffs(), coeffs())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms((d, av, bv, cv) in arb_triple()) {
            let mk = |v: Vec<i64>| {
                CycNum::from_poly(d, v.into_iter().map(Rational::from_int).collect())
            };
            let (a, b, c) = (mk(av), mk(bv), mk(cv));
            // associativity and distributivity, exactly
            prop_assert_eq!(
                (a.clone() * b.clone()) * c.clone(),
                a.clone() * (b.clone() * c.clone())
            );
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
            if !a.is_zero() {
                prop_assert!((a.clone() * a.inv().unwrap()).is_one());
            }
        }
    }
}
