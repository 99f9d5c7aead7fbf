//! Exact Laurent polynomials in `v` over arbitrary-precision integers.
//!
//! This is the value type for every table entry produced by the engine:
//! Kazhdan-Lusztig traces, Hecke character values, and the alpha
//! polynomials themselves. Only nonzero coefficients are stored, so
//! structural equality is canonical equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::WalphaError;

/// Sign pattern of the nonzero coefficients of a Laurent polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SignClass {
    Zero,
    AllPositive,
    AllNegative,
    Mixed,
}

impl SignClass {
    pub fn flip(self) -> SignClass {
        match self {
            SignClass::AllPositive => SignClass::AllNegative,
            SignClass::AllNegative => SignClass::AllPositive,
            other => other,
        }
    }
}

/// Laurent polynomial in one variable `v` with `BigInt` coefficients.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c.into())
    }

    /// `c * v^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(exp, c);
        }
        LaurentPoly { coeffs: m }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, impl Into<BigInt>)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in other.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `v -> v^k` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Inverse of `substitute_power(2)`: substitute `v^2 -> v` on a
    /// polynomial supported on even exponents.
    pub fn contract_even(&self) -> Option<Self> {
        if self.coeffs.keys().any(|e| e % 2 != 0) {
            return None;
        }
        Some(LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        let mut s = BigInt::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }

    /// True iff the coefficient of `v^k` equals the coefficient of `v^{-k}`
    /// for all `k`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c)
    }

    pub fn sign_class(&self) -> SignClass {
        if self.is_zero() {
            return SignClass::Zero;
        }
        let mut pos = false;
        let mut neg = false;
        for c in self.coeffs.values() {
            if c.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        match (pos, neg) {
            (true, false) => SignClass::AllPositive,
            (false, true) => SignClass::AllNegative,
            _ => SignClass::Mixed,
        }
    }

    /// Unimodality in absolute value of the sequence of NONZERO
    /// coefficients read in increasing exponent order. Internal zero gaps
    /// are skipped; the zero polynomial counts as unimodal.
    pub fn is_unimodal_abs(&self) -> bool {
        let seq: Vec<BigInt> = self.coeffs.values().map(|c| c.abs()).collect();
        let mut rising = true;
        for w in seq.windows(2) {
            if rising {
                if w[1] < w[0] {
                    rising = false;
                }
            } else if w[1] > w[0] {
                return false;
            }
        }
        true
    }

    /// Parse the compact palindromic codec: `(a_m...a_1a_0)` denotes
    /// `a_m v^m + ... + a_1 v + a_0 + a_1 v^{-1} + ... + a_m v^{-m}`,
    /// with multi-digit coefficients bracketed as `[11]`. A leading `-`
    /// negates the whole polynomial. Bare nonnegative integers such as
    /// `1` and `0` denote constants.
    pub fn parse_compact(code: &str) -> Result<Self, WalphaError> {
        let bytes = code.as_bytes();
        let mut pos = 0usize;
        let err = |pos: usize, what: &str| {
            Err(WalphaError::Parse(format!(
                "compact codec: {what} at byte {pos} of {code:?}"
            )))
        };
        let mut negate = false;
        if pos < bytes.len() && bytes[pos] == b'-' {
            negate = true;
            pos += 1;
        }
        if pos >= bytes.len() {
            return err(pos, "unexpected end of input");
        }
        if bytes[pos] != b'(' {
            // bare integer constant
            let digits = &code[pos..];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return err(pos, "expected '(' or digits");
            }
            let n: BigInt = digits.parse().expect("digits");
            let p = Self::constant(if negate { -n } else { n });
            return Ok(p);
        }
        pos += 1;
        let mut coeffs: Vec<BigInt> = Vec::new();
        loop {
            if pos >= bytes.len() {
                return err(pos, "unterminated '('");
            }
            match bytes[pos] {
                b')' => {
                    pos += 1;
                    break;
                }
                b'[' => {
                    let close = match code[pos..].find(']') {
                        Some(off) => pos + off,
                        None => return err(pos, "unterminated '['"),
                    };
                    let digits = &code[pos + 1..close];
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return err(pos + 1, "expected digits inside brackets");
                    }
                    coeffs.push(digits.parse().expect("digits"));
                    pos = close + 1;
                }
                b if b.is_ascii_digit() => {
                    coeffs.push(BigInt::from((b - b'0') as u32));
                    pos += 1;
                }
                _ => return err(pos, "unexpected character"),
            }
        }
        if pos != bytes.len() {
            return err(pos, "trailing input");
        }
        if coeffs.is_empty() {
            return err(pos, "empty parenthesized code");
        }
        let m = (coeffs.len() - 1) as i64;
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let e = m - i as i64;
            let c = if negate { -c.clone() } else { c.clone() };
            if e == 0 {
                p.add_term(0, c);
            } else {
                p.add_term(e, c.clone());
                p.add_term(-e, c);
            }
        }
        Ok(p)
    }

    /// Emit the compact codec. Defined exactly on palindromic polynomials
    /// whose nonzero coefficients share one sign (and on zero).
    pub fn emit_compact(&self) -> Result<String, WalphaError> {
        if !self.is_palindromic() {
            return Err(WalphaError::Codec(format!(
                "not palindromic: {self}"
            )));
        }
        if self.is_zero() {
            return Ok("0".to_string());
        }
        let negate = match self.sign_class() {
            SignClass::AllPositive => false,
            SignClass::AllNegative => true,
            _ => {
                return Err(WalphaError::Codec(format!(
                    "mixed-sign coefficients not representable: {self}"
                )))
            }
        };
        let m = self.max_exp().unwrap();
        if m == 0 {
            let c = self.coeff(0);
            return Ok(c.to_string());
        }
        let mut out = String::new();
        if negate {
            out.push('-');
        }
        out.push('(');
        for e in (0..=m).rev() {
            let c = self.coeff(e);
            let c = if negate { -c } else { c };
            let s = c.to_string();
            if s.len() == 1 {
                out.push_str(&s);
            } else {
                out.push('[');
                out.push_str(&s);
                out.push(']');
            }
        }
        out.push(')');
        Ok(out)
    }

    /// Compact codec when representable, plain form otherwise.
    pub fn display_compact(&self) -> String {
        self.emit_compact().unwrap_or_else(|_| self.to_string())
    }

    /// JSON object `{exponent: coefficient-as-decimal-string}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.coeffs.iter() {
            map.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, WalphaError> {
        let obj = value
            .as_object()
            .ok_or_else(|| WalphaError::Parse("polynomial: expected JSON object".into()))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| WalphaError::Parse(format!("polynomial: bad exponent {k:?}")))?;
            let s = v
                .as_str()
                .ok_or_else(|| WalphaError::Parse("polynomial: coefficient must be a string".into()))?;
            let c: BigInt = s
                .parse()
                .map_err(|_| WalphaError::Parse(format!("polynomial: bad coefficient {s:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}v", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}v^{}", if show_coeff { "*" } else { "" }, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(code: &str) -> LaurentPoly {
        LaurentPoly::parse_compact(code).unwrap()
    }

    #[test]
    fn parse_paper_entries() {
        // (10202) -> v^4 + 2v^2 + 2 + 2v^-2 + v^-4
        let q = p("(10202)");
        assert_eq!(q.coeff(4), BigInt::from(1));
        assert_eq!(q.coeff(2), BigInt::from(2));
        assert_eq!(q.coeff(0), BigInt::from(2));
        assert_eq!(q.coeff(-2), BigInt::from(2));
        assert_eq!(q.coeff(-4), BigInt::from(1));
        assert_eq!(q.num_terms(), 5);

        // -(10) -> -v - v^-1
        let q = p("-(10)");
        assert_eq!(q.coeff(1), BigInt::from(-1));
        assert_eq!(q.coeff(-1), BigInt::from(-1));
        assert_eq!(q.coeff(0), BigInt::from(0));

        // bare constants
        assert!(p("1").is_one());
        assert!(p("0").is_zero());

        // bracketed multi-digit coefficients
        let q = p("(104080[11]0[12])");
        assert_eq!(q.coeff(7), BigInt::from(1));
        assert_eq!(q.coeff(5), BigInt::from(4));
        assert_eq!(q.coeff(3), BigInt::from(8));
        assert_eq!(q.coeff(1), BigInt::from(11));
        assert_eq!(q.coeff(0), BigInt::from(12));
        assert_eq!(q.coeff(-1), BigInt::from(11));
        assert_eq!(q.coeff(-7), BigInt::from(1));
    }

    #[test]
    fn parse_errors_name_position() {
        for bad in ["(", "(12x)", "[3]", "(10", "(1)z", "()"] {
            let e = LaurentPoly::parse_compact(bad).unwrap_err();
            let msg = format!("{e}");
            assert!(msg.contains("byte"), "error should carry a position: {msg}");
        }
    }

    #[test]
    fn emit_roundtrip() {
        for code in ["(10202)", "-(10)", "1", "0", "(104080[11]0[12])", "(101)", "3"] {
            assert_eq!(p(code).emit_compact().unwrap(), code);
        }
    }

    #[test]
    fn emit_rejects_non_codec() {
        // non-palindromic
        let q = LaurentPoly::from_pairs([(2i64, 1i64), (0, 1)]);
        assert!(q.emit_compact().is_err());
        // mixed signs, palindromic
        let q = LaurentPoly::from_pairs([(2i64, 1i64), (0, -1), (-2, 1)]);
        assert!(q.emit_compact().is_err());
    }

    #[test]
    fn palindromic_examples() {
        assert!(p("(10202)").is_palindromic());
        assert!(!LaurentPoly::from_pairs([(2i64, 1i64), (0, 1)]).is_palindromic());
        assert!(LaurentPoly::zero().is_palindromic());
    }

    #[test]
    fn sign_class_examples() {
        assert_eq!(p("(10)").sign_class(), SignClass::AllPositive);
        assert_eq!(p("-(10)").sign_class(), SignClass::AllNegative);
        let mixed = LaurentPoly::from_pairs([(2i64, 1i64), (0, -1), (-2, 1)]);
        assert_eq!(mixed.sign_class(), SignClass::Mixed);
        assert_eq!(LaurentPoly::zero().sign_class(), SignClass::Zero);
    }

    #[test]
    fn unimodal_examples() {
        // v^5+3v^3+4v+4v^-1+3v^-3+v^-5
        assert!(p("(103040)").is_unimodal_abs());
        // coefficients (2,1,2) at exponents (2,0,-2): a valley
        let valley = LaurentPoly::from_pairs([(2i64, 2i64), (0, 1), (-2, 2)]);
        assert!(!valley.is_unimodal_abs());
        assert!(LaurentPoly::zero().is_unimodal_abs());
        // gaps are skipped: (1020) has nonzero coefficients 1,2,2,1
        assert!(p("(1020)").is_unimodal_abs());
        // negated sequences behave identically
        assert!(p("-(103040)").is_unimodal_abs());
    }

    #[test]
    fn substitution_roundtrip() {
        let q = p("(10202)");
        let doubled = q.substitute_power(2);
        assert_eq!(doubled.contract_even().unwrap(), q);
        assert_eq!(doubled.coeff(8), BigInt::from(1));
    }

    #[test]
    fn json_roundtrip() {
        let q = p("-(102)");
        let j = q.to_json();
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), q);
    }
}
