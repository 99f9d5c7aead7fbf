//! Dense polynomials in `q` with `i64` coefficients.
//!
//! These are the workhorse representation for Kazhdan-Lusztig polynomials
//! and Hecke class polynomials, where coefficients stay small but the
//! number of polynomial operations is large. All arithmetic is checked;
//! an overflow is a bug, never silent wraparound.

use crate::poly::LaurentPoly;

/// Polynomial in `q` with nonnegative exponents. Invariant: no trailing
/// zero (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QPoly {
    pub coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            QPoly { coeffs: vec![c] }
        }
    }

    /// `c * q^k`.
    pub fn monomial(k: usize, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut v = vec![0; k + 1];
        v[k] = c;
        QPoly { coeffs: v }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add_assign(&mut self, other: &QPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] = self.coeffs[i].checked_add(*c).expect("QPoly overflow");
        }
        self.trim();
    }

    pub fn sub_assign(&mut self, other: &QPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] = self.coeffs[i].checked_sub(*c).expect("QPoly overflow");
        }
        self.trim();
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b == 0 {
                    continue;
                }
                let prod = a.checked_mul(*b).expect("QPoly overflow");
                out[i + j] = out[i + j].checked_add(prod).expect("QPoly overflow");
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: i64) -> QPoly {
        if c == 0 {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.checked_mul(c).expect("QPoly overflow"))
                .collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        QPoly { coeffs: v }
    }

    pub fn eval_i64(&self, q: i64) -> i64 {
        let mut acc: i64 = 0;
        for c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(q)
                .and_then(|a| a.checked_add(*c))
                .expect("QPoly eval overflow");
        }
        acc
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// As a Laurent polynomial in `v` under `q = v^2`.
    pub fn to_laurent_in_v_squared(&self) -> LaurentPoly {
        LaurentPoly::from_pairs(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (2 * i as i64, *c)),
        )
    }

    /// As a Laurent polynomial in `v` under `q = v` (plain embedding).
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_pairs(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i as i64, *c)),
        )
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if *c < 0 { "-" } else { "+" })?;
            } else {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.unsigned_abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if a == 1 => write!(f, "q^{i}")?,
                _ => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let a = QPoly::from_coeffs(vec![1, 2]); // 1 + 2q
        let b = QPoly::from_coeffs(vec![0, 1]); // q
        assert_eq!(a.mul(&b), QPoly::from_coeffs(vec![0, 1, 2]));
        assert_eq!(a.sub(&a), QPoly::zero());
        assert_eq!(a.add(&b).coeff(1), 3);
        assert_eq!(a.eval_i64(2), 5);
    }

    #[test]
    fn laurent_conversion() {
        let a = QPoly::from_coeffs(vec![1, 0, 3]);
        let l = a.to_laurent_in_v_squared();
        assert_eq!(l.coeff(4), 3.into());
        assert_eq!(l.coeff(0), 1.into());
    }
}
