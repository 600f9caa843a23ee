//! Sparse multivariate polynomials over exact rationals.
//!
//! Used for the Nekrasov-side rational functions (variables drawn from
//! `{eps1, eps2, a1, a2, t, h}`) and for the independent slow gcd that
//! re-checks fraction reduction. Monomials are compared lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::error::{CoreError, Result};
use super::rational::{format_rat, BigRat};

pub type Monomial = Vec<u16>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    /// exponent vector (length `nvars`) -> nonzero coefficient, lex order
    terms: BTreeMap<Monomial, BigRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigRat::one());
        p
    }

    pub fn term(nvars: usize, exps: Monomial, c: BigRat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    /// Linear combination `c0 + sum_i coeffs[i] * x_i`.
    pub fn linear(nvars: usize, c0: BigRat, coeffs: &[(usize, BigRat)]) -> Self {
        let mut p = Self::constant(nvars, c0);
        for (i, c) in coeffs {
            let mut exps = vec![0; nvars];
            exps[*i] = 1;
            p.add_term(exps, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exps: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRat::zero);
        *entry += c;
        if entry.is_zero() {
            // remove the zeroed key
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &rhs.terms {
                let exps: Monomial = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.add_term(exps, v1 * v2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[BigRat]) -> BigRat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.keys().map(|k| k[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|k| k.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Lex-leading `(monomial, coefficient)`.
    pub fn leading(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Multivariate division; `Some(q)` iff `rhs` divides `self` exactly.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.nvars, rhs.nvars);
        let (lead_m, lead_c) = rhs.leading().ok_or(CoreError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            let Some(qm) = sub_exps(m, lead_m) else {
                return Err(CoreError::InexactDivision);
            };
            let qc = c / lead_c;
            let qterm = Self::term(self.nvars, qm, qc);
            rem = rem.sub(&qterm.mul(rhs));
            quot = quot.add(&qterm);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Rational content (gcd of coefficients as a positive rational times
    /// the sign of the leading coefficient).
    pub fn content(&self) -> BigRat {
        if self.is_zero() {
            return BigRat::zero();
        }
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = BigRat::new(num, den);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divides out the content: integer coefficients, coprime, positive
    /// leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Primitive multivariate gcd (recursive primitive PRS). Slow but
    /// exact; intended for desk-scale inputs and as the independent
    /// re-checker of fraction reduction.
    pub fn gcd(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        if self.is_zero() {
            return rhs.primitive();
        }
        if rhs.is_zero() {
            return self.primitive();
        }
        // pick the last variable that actually occurs in either operand
        let var = (0..self.nvars)
            .rev()
            .find(|&i| self.degree_in(i) > 0 || rhs.degree_in(i) > 0);
        let Some(var) = var else {
            return Self::one(self.nvars); // both constants
        };
        let a = self.to_uni(var);
        let b = rhs.to_uni(var);
        let cont_a = vec_gcd(&a);
        let cont_b = vec_gcd(&b);
        let cont = cont_a.gcd(&cont_b);
        let a: Vec<MPoly> = a.iter().map(|p| p.exact_div(&cont_a).unwrap()).collect();
        let b: Vec<MPoly> = b.iter().map(|p| p.exact_div(&cont_b).unwrap()).collect();
        let prs = prs_gcd(a, b, var);
        cont.mul(&prs).primitive()
    }

    /// Coefficient list of `self` viewed as univariate in `var` with
    /// `MPoly` coefficients (dense, ascending).
    fn to_uni(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (exps, c) in &self.terms {
            let k = exps[var] as usize;
            let mut e = exps.clone();
            e[var] = 0;
            out[k].add_term(e, c.clone());
        }
        out
    }

    fn from_uni(coeffs: &[MPoly], var: usize, nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (exps, v) in &c.terms {
                let mut e = exps.clone();
                e[var] = k as u16;
                out.add_term(e, v.clone());
            }
        }
        out
    }

    /// Renders with the given variable names.
    pub fn to_text(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut body = String::new();
            let is_const_term = exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const_term {
                body.push_str(&format_rat(&mag));
            }
            for (name, &e) in vars.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => {
                        if !body.is_empty() {
                            body.push('*');
                        }
                        body.push_str(name);
                    }
                    _ => {
                        if !body.is_empty() {
                            body.push('*');
                        }
                        body.push_str(&format!("{name}^{e}"));
                    }
                }
            }
            out.push_str(&body);
        }
        out
    }
}

fn sub_exps(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect()
}

fn vec_gcd(v: &[MPoly]) -> MPoly {
    let nvars = v[0].nvars;
    let mut g = MPoly::zero(nvars);
    for p in v {
        g = g.gcd(p);
        if g.is_constant() && !g.is_zero() {
            return MPoly::one(nvars);
        }
    }
    g
}

/// Primitive PRS gcd of two primitive univariate polynomials over the
/// multivariate coefficient ring.
fn prs_gcd(mut a: Vec<MPoly>, mut b: Vec<MPoly>, var: usize) -> MPoly {
    let nvars = a[0].nvars;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            let p = MPoly::from_uni(&a, var, nvars);
            return p.primitive();
        }
        let r = pseudo_rem_uni(&a, &b);
        a = b;
        b = primitive_uni(r);
    }
}

fn trim(mut v: Vec<MPoly>) -> Vec<MPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn pseudo_rem_uni(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut r: Vec<MPoly> = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    loop {
        r = trim(r);
        if r.len() <= db {
            return r;
        }
        let k = r.len() - 1;
        let q = r[k].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lead);
        }
        let shift = k - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&q.mul(bc));
        }
    }
}

fn primitive_uni(v: Vec<MPoly>) -> Vec<MPoly> {
    let v = trim(v);
    if v.is_empty() {
        return v;
    }
    let g = vec_gcd(&v);
    v.iter().map(|c| c.exact_div(&g).unwrap()).collect()
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        f.write_str(&self.to_text(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_i64};

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn exact_division_detects_failure() {
        let (x, y) = xy();
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        assert_eq!(p.exact_div(&x.sub(&y)).unwrap(), x.add(&y));
        assert!(p.add(&MPoly::one(2)).exact_div(&x.sub(&y)).is_err());
    }

    #[test]
    fn gcd_multivariate() {
        let (x, y) = xy();
        let g = x.add(&y); // x + y
        let a = g.mul(&x.sub(&y)).scale(&rat_i64(6));
        let b = g.mul(&g).scale(&rat_i64(4));
        let got = a.gcd(&b);
        assert_eq!(got, g);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let (x, y) = xy();
        let a = x.mul(&x).add(&MPoly::one(2));
        let b = y.sub(&MPoly::constant(2, rat(3, 1)));
        assert_eq!(a.gcd(&b), MPoly::one(2));
    }

    #[test]
    fn eval_matches_structure() {
        let (x, y) = xy();
        let p = x.pow(2).add(&y.scale(&rat(3, 1)));
        assert_eq!(p.eval(&[rat(2, 1), rat(5, 1)]), rat(19, 1));
    }
}
