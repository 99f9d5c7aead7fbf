//! Dense polynomials and rational functions in `q` over `BigRational`.
//!
//! Used where exact division is unavoidable: the seminormal matrix models
//! of the Hecke algebra and the block solve for Green tables. Sizes are
//! small (matrix ranks below 100), so clarity wins over cleverness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::LaurentPoly;
use crate::qpoly::QPoly;

pub type QQ = BigRational;

pub fn qq(n: i64) -> QQ {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qq_ratio(n: i64, d: i64) -> QQ {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense polynomial in `q` over the rationals. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QQPoly {
    pub coeffs: Vec<QQ>,
}

impl QQPoly {
    pub fn zero() -> Self {
        QQPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QQPoly { coeffs: vec![QQ::one()] }
    }

    pub fn constant(c: QQ) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QQPoly { coeffs: vec![c] }
        }
    }

    pub fn monomial(k: usize, c: QQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![QQ::zero(); k + 1];
        v[k] = c;
        QQPoly { coeffs: v }
    }

    pub fn from_coeffs(mut coeffs: Vec<QQ>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QQPoly { coeffs }
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        Self::from_coeffs(p.coeffs.iter().map(|c| qq(*c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> QQ {
        self.coeffs.get(k).cloned().unwrap_or_else(QQ::zero)
    }

    pub fn leading(&self) -> QQ {
        self.coeffs.last().cloned().unwrap_or_else(QQ::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), QQ::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            out.resize(other.coeffs.len(), QQ::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        QQPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![QQ::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &QQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QQPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = den.degree().unwrap();
        let lead = den.leading();
        let mut quot = vec![
            QQ::zero();
            self.coeffs.len().saturating_sub(den.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading() / lead.clone();
            let k = rd - dd;
            quot[k] = f.clone();
            for (i, c) in den.coeffs.iter().enumerate() {
                rem.coeffs[k + i] -= &f * c;
            }
            rem.trim();
        }
        (Self::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, den: &Self) -> Self {
        let (q, r) = self.div_rem(den);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(_) = a.degree() {
            let lead = a.leading();
            a = a.scale(&lead.recip());
        }
        a
    }

    pub fn eval(&self, q: &QQ) -> QQ {
        let mut acc = QQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Reverse coefficients as `q^deg_bound * p(1/q)`, which must stay a
    /// polynomial (deg_bound >= degree).
    pub fn reversed(&self, deg_bound: usize) -> Self {
        let mut out = vec![QQ::zero(); deg_bound + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= deg_bound, "reversal bound too small");
            out[deg_bound - i] = c.clone();
        }
        Self::from_coeffs(out)
    }

    /// Convert to integer-coefficient QPoly; panics if any coefficient
    /// is non-integral or exceeds i64.
    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "non-integral coefficient {c}");
                    let n = c.to_integer();
                    i64::try_from(&n).expect("coefficient exceeds i64")
                })
                .collect(),
        )
    }

    /// Interpret in `v` via `q = v^2`, then multiply by `v^shift`.
    pub fn to_laurent_v_squared_shifted(&self, shift: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            assert!(c.is_integer(), "non-integral coefficient {c}");
            p.add_term(2 * i as i64 + shift, c.to_integer());
        }
        p
    }
}

impl std::fmt::Display for QQPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Rational function `num/den` in `q`, kept reduced with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    pub num: QQPoly,
    pub den: QQPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: QQPoly::zero(), den: QQPoly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: QQPoly::one(), den: QQPoly::one() }
    }

    pub fn from_poly(p: QQPoly) -> Self {
        RatFun { num: p, den: QQPoly::one() }
    }

    pub fn constant(c: QQ) -> Self {
        Self::from_poly(QQPoly::constant(c))
    }

    pub fn new(num: QQPoly, den: QQPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QQPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lead = self.den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0) || self.den == QQPoly::one()
    }

    pub fn as_polynomial(&self) -> Option<QQPoly> {
        if self.den == QQPoly::one() {
            Some(self.num.clone())
        } else if self.den.degree() == Some(0) {
            Some(self.num.scale(&self.den.coeff(0).recip()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

impl std::fmt::Display for RatFun {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == QQPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Square matrix over the rationals (used by numeric seminormal models).
pub type QQMatrix = Vec<Vec<QQ>>;

pub fn qq_mat_mul(a: &QQMatrix, b: &QQMatrix) -> QQMatrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![QQ::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            let ail = &a[i][l];
            for j in 0..m {
                if b[l][j].is_zero() {
                    continue;
                }
                out[i][j] += ail * &b[l][j];
            }
        }
    }
    out
}

pub fn qq_mat_identity(n: usize) -> QQMatrix {
    let mut m = vec![vec![QQ::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = QQ::one();
    }
    m
}

pub fn qq_mat_trace(a: &QQMatrix) -> QQ {
    let mut t = QQ::zero();
    for (i, row) in a.iter().enumerate() {
        t += &row[i];
    }
    t
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
pub fn lagrange_interpolate(points: &[(QQ, QQ)]) -> QQPoly {
    let mut acc = QQPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QQPoly::one();
        let mut denom = QQ::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&QQPoly::from_coeffs(vec![-xj.clone(), QQ::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = QQPoly::from_coeffs(vec![qq(-1), qq(0), qq(1)]);
        let den = QQPoly::from_coeffs(vec![qq(-1), qq(1)]);
        assert_eq!(num.div_exact(&den), QQPoly::from_coeffs(vec![qq(1), qq(1)]));
    }

    #[test]
    fn ratfun_reduction() {
        let a = RatFun::new(
            QQPoly::from_coeffs(vec![qq(-1), qq(0), qq(1)]),
            QQPoly::from_coeffs(vec![qq(-1), qq(1)]),
        );
        assert!(a.is_polynomial());
        assert_eq!(a.as_polynomial().unwrap(), QQPoly::from_coeffs(vec![qq(1), qq(1)]));
    }

    #[test]
    fn interpolation() {
        // p(q) = q^2 + 3
        let pts: Vec<(QQ, QQ)> = [2i64, 3, 5]
            .iter()
            .map(|x| (qq(*x), qq(x * x + 3)))
            .collect();
        let p = lagrange_interpolate(&pts);
        assert_eq!(p, QQPoly::from_coeffs(vec![qq(3), qq(0), qq(1)]));
    }
}
