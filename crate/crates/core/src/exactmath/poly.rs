use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` over the rationals.
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are stripped, so
/// the zero polynomial has no coefficients and equality is coefficient-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for non-zero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Index of the first non-constant coefficient that is non-zero.
    pub fn first_nonconstant_term(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&k| !self.coeffs[k].is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `self * (t - a)`.
    fn mul_linear(&self, a: &Rational) -> Poly {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= &(c * a);
        }
        Poly::from_coeffs(out)
    }
}

pub fn poly_eval(p: &Poly, t: &Rational) -> Rational {
    p.eval(t)
}

/// The unique polynomial of degree below `points.len()` through every point.
///
/// Builds the Newton divided-difference table and expands it in Horner form;
/// all arithmetic is exact.
pub fn poly_interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    if points.is_empty() {
        return Err(Error::Empty("interpolation needs at least one point"));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateAbscissa(x.to_string()));
        }
    }
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = xs[i] - xs[i - level];
            table[i] = num / den;
        }
    }
    let mut p = Poly::constant(table[n - 1].clone());
    for k in (0..n - 1).rev() {
        p = p.mul_linear(xs[k]) + Poly::constant(table[k].clone());
    }
    Ok(p)
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Rational::from(-1))
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        self.scale(rhs)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::from_coeffs(Vec::<Rational>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        v.iter().map(|&(x, y)| (r(x), r(y))).collect()
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(poly_interpolate(&pts(&[(0, 1), (1, 1), (2, 1)])).unwrap(), Poly::constant(r(1)));
        assert_eq!(poly_interpolate(&pts(&[(0, 0), (1, 1)])).unwrap(), Poly::t());
        let sq = poly_interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(sq, Poly::from_coeffs(vec![r(0), r(0), r(1)]));
        for (x, y) in pts(&[(0, 0), (1, 1), (2, 4)]) {
            assert_eq!(sq.eval(&x), y);
        }
    }

    #[test]
    fn interpolation_errors() {
        assert!(matches!(poly_interpolate(&[]), Err(Error::Empty(_))));
        assert!(matches!(
            poly_interpolate(&pts(&[(1, 0), (1, 2)])),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let sq = Poly::from_coeffs(vec![r(0), r(0), r(1)]);
        assert_eq!(poly_eval(&sq, &q(1, 2)), q(1, 4));
        assert_eq!(poly_eval(&Poly::zero(), &r(7)), r(0));
        let one_minus_t_sq = Poly::from_coeffs(vec![r(1), r(-2), r(1)]);
        assert_eq!(poly_eval(&one_minus_t_sq, &r(1)), r(0));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let p = Poly::from_coeffs(vec![r(3), r(0), r(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(p.is_constant());
        assert_eq!(Poly::from_coeffs(vec![r(0)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
        let x = Poly::from_coeffs(vec![r(1), r(1)]);
        assert_eq!(&x - &x, Poly::zero());
        assert_eq!(&x * &x, Poly::from_coeffs(vec![r(1), r(2), r(1)]));
    }

    #[test]
    fn json_form() {
        let p = Poly::from_coeffs(vec![q(1, 2), r(0), r(-3)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1/2","0","-3"]"#);
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn interpolant_hits_every_sample(ys in proptest::collection::vec(rational(), 1..7)) {
            let points: Vec<_> = ys.iter().enumerate().map(|(i, y)| (q(i as i64, 3), y.clone())).collect();
            let p = poly_interpolate(&points).unwrap();
            prop_assert!(p.degree().map_or(true, |d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&p.eval(x), y);
            }
        }

        #[test]
        fn oversampling_reproduces_coefficients(cs in proptest::collection::vec(rational(), 1..5), shift in -3i64..3) {
            let p = Poly::from_coeffs(cs);
            let n = p.coeffs().len() + 1;
            let points: Vec<_> = (0..=n as i64)
                .map(|k| {
                    let x = q(k + shift, 2);
                    let y = p.eval(&x);
                    (x, y)
                })
                .collect();
            prop_assert_eq!(poly_interpolate(&points).unwrap(), p);
        }
    }
}
