//! Monomials x^a y^b and orderings on the degree-d slice.

use std::fmt;

use crate::matroid::{GroundSet, TotalOrder};

/// A monomial x^a y^b. The canonical label is "x^a*y^b" with explicit
/// exponents; it doubles as the ground-set label of the degree-(a+b) slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub fn new(a: u32, b: u32) -> Self {
        Monomial { a, b }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b
    }

    pub fn label(&self) -> String {
        format!("x^{}*y^{}", self.a, self.b)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.a + other.a, self.b + other.b)
    }

    /// Exact division; None if not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial::new(self.a - other.a, self.b - other.b))
        } else {
            None
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write_var(f, 'x', a),
            (0, b) => write_var(f, 'y', b),
            (a, b) => {
                write_var(f, 'x', a)?;
                write!(f, "*")?;
                write_var(f, 'y', b)
            }
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, e: u32) -> fmt::Result {
    if e == 1 {
        write!(f, "{v}")
    } else {
        write!(f, "{v}^{e}")
    }
}

/// The degree-d monomials x^d, x^{d-1}y, ..., y^d, listed by increasing
/// y-exponent. Index i in this list is the y-exponent.
pub fn mon_d(d: u32) -> Vec<Monomial> {
    (0..=d).map(|i| Monomial::new(d - i, i)).collect()
}

/// Ground set for the degree-d slice, in the standard listing.
pub fn ground_of_degree(d: u32) -> GroundSet {
    GroundSet::new(mon_d(d).iter().map(|m| m.label()).collect()).unwrap()
}

/// The two term orders on a fixed degree. `XGreater` makes monomials with a
/// larger x-exponent larger (so the order minimum of a set is its most
/// y-heavy element); `YGreater` is the reverse. The standard listing of
/// Mon_d (by increasing y-exponent) is ascending for `YGreater`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    XGreater,
    YGreater,
}

impl TermOrder {
    pub fn opposite(self) -> Self {
        match self {
            TermOrder::XGreater => TermOrder::YGreater,
            TermOrder::YGreater => TermOrder::XGreater,
        }
    }

    /// The order on the standard degree-d ground set (index = y-exponent).
    pub fn on_degree(self, d: u32) -> TotalOrder {
        let n = (d + 1) as usize;
        match self {
            // ascending x-exponent = descending index
            TermOrder::XGreater => TotalOrder::from_ascending((0..n).rev().collect()),
            TermOrder::YGreater => TotalOrder::identity(n),
        }
    }

    /// Minimum of a set of monomials of equal degree.
    pub fn min_of(self, set: &[Monomial]) -> Option<Monomial> {
        match self {
            TermOrder::XGreater => set.iter().min_by_key(|m| m.a).copied(),
            TermOrder::YGreater => set.iter().min_by_key(|m| m.b).copied(),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::XGreater => write!(f, "x>y"),
            TermOrder::YGreater => write!(f, "y>x"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mon_d_listing() {
        let m3 = mon_d(3);
        assert_eq!(m3.len(), 4);
        assert_eq!(m3[0], Monomial::new(3, 0));
        assert_eq!(m3[3], Monomial::new(0, 3));
        assert_eq!(m3[1].label(), "x^2*y^1");
        assert_eq!(m3[1].to_string(), "x^2*y");
    }

    #[test]
    fn order_minima() {
        let set = [Monomial::new(2, 0), Monomial::new(0, 2)];
        assert_eq!(TermOrder::XGreater.min_of(&set), Some(Monomial::new(0, 2)));
        assert_eq!(TermOrder::YGreater.min_of(&set), Some(Monomial::new(2, 0)));
    }

    #[test]
    fn order_on_degree_matches_min_of() {
        for order in [TermOrder::XGreater, TermOrder::YGreater] {
            let d = 4;
            let mons = mon_d(d);
            let total = order.on_degree(d);
            let set: Vec<Monomial> = vec![mons[1], mons[3], mons[4]];
            let by_total = total
                .min_of([1usize, 3, 4].iter())
                .map(|i| mons[i])
                .unwrap();
            assert_eq!(Some(by_total), order.min_of(&set));
        }
    }
}
