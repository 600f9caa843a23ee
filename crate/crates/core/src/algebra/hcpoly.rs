//! Bivariate polynomials in the highest weight `h` and central charge `c`
//! over exact rationals — the coefficient ring of the Verma-module engine.
//!
//! Keeping `c` symbolic until the last moment lets one normal-ordering
//! computation serve both the `(h, c)` golden displays and every
//! `c = c(t)` specialization.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::hpoly::HPoly;
use super::laurent::LaurentPoly;
use super::rational::{format_rat, rat_i64, BigRat};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HcPoly {
    /// `(h_degree, c_degree) -> nonzero coefficient`
    terms: BTreeMap<(u32, u32), BigRat>,
}

impl HcPoly {
    pub fn zero() -> Self {
        HcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(v: BigRat) -> Self {
        Self::term(0, 0, v)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_i64(n))
    }

    pub fn h() -> Self {
        Self::term(1, 0, BigRat::one())
    }

    pub fn c() -> Self {
        Self::term(0, 1, BigRat::one())
    }

    pub fn term(h_deg: u32, c_deg: u32, v: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !v.is_zero() {
            terms.insert((h_deg, c_deg), v);
        }
        HcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, h_deg: u32, c_deg: u32) -> BigRat {
        self.terms
            .get(&(h_deg, c_deg))
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    fn add_term(&mut self, key: (u32, u32), v: BigRat) {
        if v.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRat::zero);
        *entry += v;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, -v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        HcPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((h1, c1), v1) in &self.terms {
            for ((h2, c2), v2) in &rhs.terms {
                out.add_term((h1 + h2, c1 + c2), v1 * v2);
            }
        }
        out
    }

    pub fn scale(&self, v: &BigRat) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        HcPoly {
            terms: self.terms.iter().map(|(k, a)| (*k, a * v)).collect(),
        }
    }

    pub fn eval(&self, h0: &BigRat, c0: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for ((hd, cd), v) in &self.terms {
            let mut term = v.clone();
            for _ in 0..*hd {
                term *= h0;
            }
            for _ in 0..*cd {
                term *= c0;
            }
            acc += term;
        }
        acc
    }

    /// Substitutes `c -> c_val`, keeping `h` symbolic.
    pub fn subst_c(&self, c_val: &LaurentPoly) -> HPoly {
        let max_h = self.terms.keys().map(|(h, _)| *h).max().unwrap_or(0);
        let mut coeffs = vec![LaurentPoly::zero(); max_h as usize + 1];
        for ((hd, cd), v) in &self.terms {
            let mut p = LaurentPoly::constant(v.clone());
            for _ in 0..*cd {
                p = p.mul(c_val);
            }
            coeffs[*hd as usize] = coeffs[*hd as usize].add(&p);
        }
        HPoly::from_coeffs(coeffs)
    }

    /// Substitutes both variables by Laurent values.
    pub fn subst_both(&self, h_val: &LaurentPoly, c_val: &LaurentPoly) -> LaurentPoly {
        self.subst_c(c_val).eval_h(h_val)
    }
}

impl fmt::Display for HcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((hd, cd), v) in self.terms.iter().rev() {
            let neg = v.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = v.abs();
            let mut body = String::new();
            if !mag.is_one() || (*hd == 0 && *cd == 0) {
                body.push_str(&format_rat(&mag));
            }
            for (sym, d) in [("h", hd), ("c", cd)] {
                match d {
                    0 => {}
                    1 => body.push_str(sym),
                    _ => body.push_str(&format!("{sym}^{d}")),
                }
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn ring_smoke() {
        let h = HcPoly::h();
        let c = HcPoly::c();
        // (2h + c/2)^2 = 4h^2 + 2hc + c^2/4
        let p = h.scale(&rat(2, 1)).add(&c.scale(&rat(1, 2)));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(2, 0), rat(4, 1));
        assert_eq!(sq.coeff(1, 1), rat(2, 1));
        assert_eq!(sq.coeff(0, 2), rat(1, 4));
        assert_eq!(sq.eval(&rat(1, 2), &rat(3, 1)), rat(25, 4));
    }

    #[test]
    fn substitution_agrees_with_eval() {
        let p = HcPoly::h().mul(&HcPoly::c()).add(&HcPoly::from_int(7));
        let c_val = LaurentPoly::from_t_terms([(1, rat(-6, 1)), (0, rat(13, 1)), (-1, rat(-6, 1))]);
        let hp = p.subst_c(&c_val);
        let t0 = rat(5, 3);
        let h0 = rat(-2, 7);
        let direct = p.eval(&h0, &c_val.eval_t(&t0).unwrap());
        assert_eq!(hp.eval_at(&t0, &h0).unwrap(), direct);
    }
}
