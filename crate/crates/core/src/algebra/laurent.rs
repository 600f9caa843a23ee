//! Sparse Laurent polynomials in `u = t^(1/2)` over exact rationals.
//!
//! One formal variable serves every coefficient in the crate: a value "is
//! in t" when all stored exponents are even (the exponent of `t^k` is
//! `2k`). Half-integer powers of `t` show up in the factored norm
//! formulas and in the bosonization weights, so they are first-class.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::error::{CoreError, Result};
use super::rational::{format_rat, parse_rat, rat_i64, rat_pow, BigRat};
use super::upoly::UPoly;

/// Degree unit used when reporting max/min degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegUnit {
    /// Exponents are integer powers of `t`.
    T,
    /// Exponents are integer powers of `u = t^(1/2)`.
    SqrtT,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// exponent of `u` -> nonzero coefficient
    terms: BTreeMap<i64, BigRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::u_term(0, BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::u_term(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_i64(n))
    }

    /// Single term `c * u^exp`.
    pub fn u_term(exp: i64, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// Single term `c * t^k`.
    pub fn t_term(k: i64, c: BigRat) -> Self {
        Self::u_term(2 * k, c)
    }

    pub fn t_pow(k: i64) -> Self {
        Self::t_term(k, BigRat::one())
    }

    pub fn u_pow(k: i64) -> Self {
        Self::u_term(k, BigRat::one())
    }

    pub fn from_u_terms<I: IntoIterator<Item = (i64, BigRat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    /// Polynomial in `t` from `(t-exponent, coefficient)` pairs.
    pub fn from_t_terms<I: IntoIterator<Item = (i64, BigRat)>>(iter: I) -> Self {
        Self::from_u_terms(iter.into_iter().map(|(k, c)| (2 * k, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, u_exp: i64) -> BigRat {
        self.terms.get(&u_exp).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Coefficient of `t^k` (the `u^{2k}` term).
    pub fn t_coeff(&self, k: i64) -> BigRat {
        self.coeff(2 * k)
    }

    fn add_term(&mut self, exp: i64, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// True when every stored exponent is even, i.e. the value lies in
    /// `Q[t, t^-1]`.
    pub fn is_in_t(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn min_u_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_u_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Max/min degrees. Reported in units of `t` (exponents halved) when
    /// the support is even, in units of `u = t^(1/2)` otherwise.
    pub fn maxmin_deg(&self) -> Result<(i64, i64, DegUnit)> {
        let max = self.max_u_exp().ok_or(CoreError::ZeroDegree)?;
        let min = self.min_u_exp().unwrap();
        if self.is_in_t() {
            Ok((max / 2, min / 2, DegUnit::T))
        } else {
            Ok((max, min, DegUnit::SqrtT))
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul_u_pow(&self, shift: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluation at a rational `t0 != 0`; requires even support.
    pub fn eval_t(&self, t0: &BigRat) -> Result<BigRat> {
        if !self.is_in_t() {
            return Err(CoreError::HalfPower(self.to_string()));
        }
        if t0.is_zero() && self.min_u_exp().is_some_and(|m| m < 0) {
            return Err(CoreError::DivisionByZero);
        }
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(t0, e / 2)?;
        }
        Ok(acc)
    }

    /// Evaluation at a rational `u0 != 0` (used by interpolation layers).
    pub fn eval_u(&self, u0: &BigRat) -> Result<BigRat> {
        if u0.is_zero() && self.min_u_exp().is_some_and(|m| m < 0) {
            return Err(CoreError::DivisionByZero);
        }
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(u0, *e)?;
        }
        Ok(acc)
    }

    /// `t -> -t`; requires even support.
    pub fn subst_t_neg(&self) -> Result<Self> {
        if !self.is_in_t() {
            return Err(CoreError::HalfPower(self.to_string()));
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let k = e / 2;
                    let c = if k.rem_euclid(2) == 1 {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    (*e, c)
                })
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        })
    }

    /// `t -> 1/t` (negates every exponent; valid for half powers too).
    pub fn subst_t_inv(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `(shift, p)` with `self = u^shift * p` and `p` an ordinary
    /// polynomial in `u` with nonzero constant term.
    pub fn to_upoly(&self) -> (i64, UPoly) {
        match self.min_u_exp() {
            None => (0, UPoly::zero()),
            Some(min) => {
                let max = self.max_u_exp().unwrap();
                let mut coeffs = vec![BigRat::zero(); (max - min + 1) as usize];
                for (e, c) in &self.terms {
                    coeffs[(e - min) as usize] = c.clone();
                }
                (min, UPoly::from_coeffs(coeffs))
            }
        }
    }

    pub fn from_upoly(shift: i64, p: &UPoly) -> Self {
        Self::from_u_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (shift + k as i64, c.clone())),
        )
    }

    /// Exact division in the Laurent ring.
    pub fn try_exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, pa) = self.to_upoly();
        let (sb, pb) = rhs.to_upoly();
        let q = pa.exact_div(&pb)?;
        Ok(Self::from_upoly(sa - sb, &q))
    }

    /// Primitive gcd, normalized to integer coefficients with positive
    /// leading coefficient and nonnegative minimal exponent zero.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (_, pa) = self.to_upoly();
        let (_, pb) = rhs.to_upoly();
        Self::from_upoly(0, &pa.gcd(&pb))
    }

    /// JSON value: list of `[u_exponent, [num, den]]` pairs, descending
    /// exponents, big integers carried as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(e, c)| {
                    serde_json::json!([e, [c.numer().to_string(), c.denom().to_string()]])
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| CoreError::Parse("expected array".into()))?;
        let mut out = Self::zero();
        for item in arr {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| CoreError::Parse("expected [exp, [num, den]]".into()))?;
            let exp = pair[0]
                .as_i64()
                .ok_or_else(|| CoreError::Parse("bad exponent".into()))?;
            let nd = pair[1]
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| CoreError::Parse("expected [num, den]".into()))?;
            let num = nd[0]
                .as_str()
                .ok_or_else(|| CoreError::Parse("bad numerator".into()))?;
            let den = nd[1]
                .as_str()
                .ok_or_else(|| CoreError::Parse("bad denominator".into()))?;
            out.add_term(exp, parse_rat(&format!("{num}/{den}"))?);
        }
        Ok(out)
    }

    /// Canonical text form: terms sorted by descending exponent, integer
    /// powers rendered in `t`, half powers as `t^{k/2}`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = match *e {
                0 => String::new(),
                e if e % 2 == 0 => match e / 2 {
                    1 => "t".into(),
                    k => format!("t^{k}"),
                },
                e => format!("t^{{{e}/2}}"),
            };
            if power.is_empty() {
                out.push_str(&format_rat(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format_rat(&mag));
                out.push_str(&power);
            }
        }
        out
    }

    /// Parses the canonical text form produced by [`Self::to_text`].
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        loop {
            let (term, tail) = split_term(rest);
            let (coeff, exp) = parse_term(term)?;
            let c = if sign < 0 { -coeff } else { coeff };
            out.add_term(exp, c);
            match tail {
                None => break,
                Some((next_sign, tail)) => {
                    sign = next_sign;
                    rest = tail;
                }
            }
        }
        Ok(out)
    }
}

/// Splits off one term at a top-level ` + ` or ` - ` separator.
fn split_term(s: &str) -> (&str, Option<(i64, &str)>) {
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b' ' && i + 2 < bytes.len() {
            let op = bytes[i + 1];
            if (op == b'+' || op == b'-') && bytes[i + 2] == b' ' {
                let sign = if op == b'+' { 1 } else { -1 };
                return (&s[..i], Some((sign, &s[i + 3..])));
            }
        }
        i += 1;
    }
    (s, None)
}

/// Parses a single signless term: `5`, `3/4`, `t`, `t^-2`, `3t^2`,
/// `1/2t^{{-1/2}}`-style half powers.
fn parse_term(term: &str) -> Result<(BigRat, i64)> {
    let term = term.trim();
    let t_at = term.find('t');
    match t_at {
        None => Ok((parse_rat(term)?, 0)),
        Some(pos) => {
            let coeff_str = term[..pos].trim();
            let coeff = if coeff_str.is_empty() {
                BigRat::one()
            } else {
                parse_rat(coeff_str)?
            };
            let power = &term[pos + 1..];
            let exp = if power.is_empty() {
                2
            } else {
                let p = power
                    .strip_prefix('^')
                    .ok_or_else(|| CoreError::Parse(format!("bad term `{term}`")))?;
                if let Some(inner) = p.strip_prefix('{').and_then(|q| q.strip_suffix('}')) {
                    let halves = inner
                        .strip_suffix("/2")
                        .ok_or_else(|| CoreError::Parse(format!("bad half power `{term}`")))?;
                    halves
                        .parse::<i64>()
                        .map_err(|_| CoreError::Parse(format!("bad half power `{term}`")))?
                } else {
                    2 * p
                        .parse::<i64>()
                        .map_err(|_| CoreError::Parse(format!("bad power `{term}`")))?
                }
            };
            Ok((coeff, exp))
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        LaurentPoly::from_json(&v).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let t = LaurentPoly::t_pow(1);
        let tinv = LaurentPoly::t_pow(-1);
        assert!(t.mul(&tinv).is_one());
    }

    #[test]
    fn difference_of_squares() {
        let t = LaurentPoly::t_pow(1);
        let one = LaurentPoly::one();
        let got = t.sub(&one).mul(&t.add(&one));
        let want = LaurentPoly::t_pow(2).sub(&one);
        assert_eq!(got, want);
    }

    #[test]
    fn central_charge_at_one() {
        // c(t) = 13 - 6(t + 1/t), built as an add/sub/mul chain, is 1 at t = 1.
        let c = LaurentPoly::from_int(13).sub(
            &LaurentPoly::from_int(6).mul(&LaurentPoly::t_pow(1).add(&LaurentPoly::t_pow(-1))),
        );
        assert_eq!(c.eval_t(&rat(1, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn maxmin_in_t_units() {
        let p = LaurentPoly::from_t_terms([(2, rat(1, 1)), (0, rat(-2, 1)), (-2, rat(1, 1))]);
        assert_eq!(p.maxmin_deg().unwrap(), (2, -2, DegUnit::T));
        let c = LaurentPoly::from_int(5);
        assert_eq!(c.maxmin_deg().unwrap(), (0, 0, DegUnit::T));
        assert_eq!(
            LaurentPoly::zero().maxmin_deg(),
            Err(CoreError::ZeroDegree)
        );
        let half = LaurentPoly::u_pow(3);
        assert_eq!(half.maxmin_deg().unwrap(), (3, 3, DegUnit::SqrtT));
    }

    #[test]
    fn text_round_trip() {
        let p = LaurentPoly::from_t_terms([(2, rat(1, 1)), (0, rat(-2, 1)), (-2, rat(1, 1))]);
        assert_eq!(p.to_text(), "t^2 - 2 + t^-2");
        assert_eq!(LaurentPoly::parse("t^2 - 2 + t^-2").unwrap(), p);

        let q = LaurentPoly::from_u_terms([(3, rat(1, 2)), (-1, rat(-5, 3)), (0, rat(7, 1))]);
        let text = q.to_text();
        assert_eq!(text, "1/2t^{3/2} + 7 - 5/3t^{-1/2}");
        assert_eq!(LaurentPoly::parse(&text).unwrap(), q);
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_u_terms([(5, rat(22, 7)), (-4, rat(-1, 3))]);
        let v = p.to_json();
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn exact_division() {
        let t = LaurentPoly::t_pow(1);
        let one = LaurentPoly::one();
        let prod = t.sub(&one).mul(&t.add(&one));
        let q = prod.try_exact_div(&t.sub(&one)).unwrap();
        assert_eq!(q, t.add(&one));
        assert!(prod.add(&one).try_exact_div(&t.sub(&one)).is_err());
    }

    #[test]
    fn t_negation_and_inverse() {
        let p = LaurentPoly::from_t_terms([(3, rat(2, 1)), (0, rat(1, 1)), (-1, rat(5, 1))]);
        let n = p.subst_t_neg().unwrap();
        assert_eq!(n.t_coeff(3), rat(-2, 1));
        assert_eq!(n.t_coeff(0), rat(1, 1));
        assert_eq!(n.t_coeff(-1), rat(-5, 1));
        let inv = p.subst_t_inv();
        assert_eq!(inv.t_coeff(-3), rat(2, 1));
        assert_eq!(inv.t_coeff(1), rat(5, 1));
        assert!(LaurentPoly::u_pow(1).subst_t_neg().is_err());
    }
}
