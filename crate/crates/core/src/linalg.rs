//! Fraction-free linear algebra: Bareiss determinants over exact rings,
//! degree-bounded interpolation determinants for `h`-polynomial matrices,
//! and a nullity-one kernel solver over the Laurent ring with content
//! stripping after each pivot step.

use num_traits::{One, Signed, Zero};

use crate::algebra::error::{CoreError, Result};
use crate::algebra::hpoly::HPoly;
use crate::algebra::laurent::LaurentPoly;
use crate::algebra::ratfunc::URat;
use crate::algebra::rational::{rat_i64, BigRat};
use crate::algebra::upoly::UPoly;

/// Minimal ring interface for the fraction-free elimination.
pub trait ElimRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Result<Self>;
}

impl ElimRing for BigRat {
    fn zero() -> Self {
        <BigRat as Zero>::zero()
    }
    fn one() -> Self {
        <BigRat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(CoreError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl ElimRing for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UPoly::mul(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UPoly::sub(self, rhs)
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        UPoly::exact_div(self, rhs)
    }
}

/// Fraction-free Bareiss determinant. Works over any integral domain with
/// exact division; all intermediate entries are minors of the input.
pub fn bareiss_det<R: ElimRing>(mut m: Vec<Vec<R>>) -> Result<R> {
    let n = m.len();
    if n == 0 {
        return Ok(R::one());
    }
    for row in &m {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev)?;
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip {
        det.sub(&det).sub(&det) // -det
    } else {
        det
    })
}

/// Determinant of a matrix of `h`-polynomials with Laurent coefficients,
/// computed exactly by evaluation at integer points of `u` (Bareiss over
/// `Q[h]` per point) and degree-bounded interpolation in `u`. The
/// exponent bounds come from row-wise support sums, so the interpolated
/// answer is an identity, not an approximation.
pub fn det_hpoly(m: &[Vec<HPoly>]) -> Result<HPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(HPoly::one());
    }
    let mut lo = 0i64;
    let mut hi = 0i64;
    let mut h_deg = 0usize;
    for row in m {
        assert_eq!(row.len(), n);
        let mut row_lo = i64::MAX;
        let mut row_hi = i64::MIN;
        let mut row_h = 0usize;
        let mut all_zero = true;
        for e in row {
            if e.is_zero() {
                continue;
            }
            all_zero = false;
            row_h = row_h.max(e.h_degree().unwrap_or(0));
            for (_, c) in e.terms() {
                row_lo = row_lo.min(c.min_u_exp().unwrap());
                row_hi = row_hi.max(c.max_u_exp().unwrap());
            }
        }
        if all_zero {
            return Ok(HPoly::zero());
        }
        lo += row_lo;
        hi += row_hi;
        h_deg += row_h;
    }
    let span = (hi - lo) as usize;
    let points: Vec<BigRat> = (1..=span as i64 + 1).map(rat_i64).collect();
    let mut dets = Vec::with_capacity(points.len());
    for u0 in &points {
        let mat: Vec<Vec<UPoly>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let coeffs: Vec<BigRat> = (0..=e.h_degree().unwrap_or(0))
                            .map(|k| e.coeff(k).eval_u(u0).expect("nonzero node"))
                            .collect();
                        UPoly::from_coeffs(coeffs)
                    })
                    .collect()
            })
            .collect();
        dets.push(bareiss_det::<UPoly>(mat)?);
    }
    let mut coeffs = Vec::with_capacity(h_deg + 1);
    for j in 0..=h_deg {
        let pts: Vec<(BigRat, BigRat)> = points
            .iter()
            .zip(&dets)
            .map(|(u0, d)| {
                let scale = crate::algebra::rational::rat_pow(u0, -lo).unwrap();
                (u0.clone(), d.coeff(j) * scale)
            })
            .collect();
        let p = UPoly::interpolate(&pts);
        coeffs.push(LaurentPoly::from_upoly(lo, &p));
    }
    Ok(HPoly::from_coeffs(coeffs))
}

/// Numeric determinant over exact rationals.
pub fn det_rat(m: Vec<Vec<BigRat>>) -> Result<BigRat> {
    bareiss_det::<BigRat>(m)
}

/// Deletes one row and one column.
pub fn minor<T: Clone>(m: &[Vec<T>], row: usize, col: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Kernel vector of a square Laurent-polynomial matrix whose nullity is
/// exactly one. Forward phase is fraction-free (two-term cross-multiply)
/// with per-row content stripping; back substitution runs over reduced
/// univariate fractions in `u`. Errors if the nullity is not one.
pub fn kernel_one(m: &[Vec<LaurentPoly>]) -> Result<Vec<URat>> {
    let n = m.len();
    let mut rows: Vec<Vec<UPoly>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n);
            // shared per-row shift: scaling a row by a power of u keeps
            // the kernel, but the shift must be the same across the row
            let base = row
                .iter()
                .filter_map(|e| e.min_u_exp())
                .min()
                .unwrap_or(0);
            normalize_row(
                row.iter()
                    .map(|e| e.mul_u_pow(-base).to_upoly())
                    .map(|(shift, p)| {
                        debug_assert!(shift >= 0);
                        p.mul(&UPoly::monomial(<BigRat as One>::one(), shift as usize))
                    })
                    .collect(),
            )
        })
        .collect();

    let mut pivots: Vec<(Vec<UPoly>, usize)> = Vec::new();
    let mut free_cols: Vec<usize> = Vec::new();
    for col in 0..n {
        // cheapest pivot first: fewest terms, then lowest degree
        let candidate = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| {
                let p = &r[col];
                let terms = p.coeffs().iter().filter(|c| !Zero::is_zero(*c)).count();
                (terms, p.deg().unwrap_or(0))
            })
            .map(|(i, _)| i);
        let Some(pidx) = candidate else {
            free_cols.push(col);
            continue;
        };
        let pivot_row = rows.swap_remove(pidx);
        for r in rows.iter_mut() {
            if r[col].is_zero() {
                continue;
            }
            let mut next: Vec<UPoly> = Vec::with_capacity(n);
            for j in 0..n {
                next.push(pivot_row[col].mul(&r[j]).sub(&r[col].mul(&pivot_row[j])));
            }
            *r = normalize_row(next);
        }
        rows.retain(|r| r.iter().any(|e| !e.is_zero()));
        pivots.push((pivot_row, col));
    }

    if free_cols.len() != 1 || !rows.is_empty() {
        return Err(CoreError::Internal(format!(
            "kernel dimension is not one: {} free column(s), {} leftover row(s)",
            free_cols.len(),
            rows.len()
        )));
    }
    let free = free_cols[0];
    let mut x: Vec<URat> = vec![URat::zero(); n];
    x[free] = URat::one();
    for (row, col) in pivots.iter().rev() {
        let mut acc = URat::zero();
        for j in 0..n {
            if j == *col || row[j].is_zero() || x[j].is_zero() {
                continue;
            }
            acc = acc.add(&URat::from_poly(row[j].clone()).mul(&x[j]));
        }
        x[*col] = acc.neg().div(&URat::from_poly(row[*col].clone()))?;
    }
    Ok(x)
}

/// Strips the content of a row: common `u`-power and common primitive gcd
/// of the entries.
fn normalize_row(mut row: Vec<UPoly>) -> Vec<UPoly> {
    // common power of u
    let mut shift = usize::MAX;
    for e in &row {
        if e.is_zero() {
            continue;
        }
        let low = e
            .coeffs()
            .iter()
            .position(|c| !Zero::is_zero(c))
            .unwrap_or(0);
        shift = shift.min(low);
    }
    if shift != usize::MAX && shift > 0 {
        for e in row.iter_mut() {
            if !e.is_zero() {
                *e = UPoly::from_coeffs(e.coeffs()[shift..].to_vec());
            }
        }
    }
    // polynomial content
    let mut g = UPoly::zero();
    for e in &row {
        g = g.gcd(e);
        if g.deg() == Some(0) {
            break;
        }
    }
    if let Some(d) = g.deg() {
        if d > 0 {
            for e in row.iter_mut() {
                if !e.is_zero() {
                    *e = e.exact_div(&g).expect("content divides");
                }
            }
        }
    }
    // rational content: make coefficients primitive integers
    let mut nonzero = row.iter().filter(|e| !e.is_zero());
    if let Some(first) = nonzero.next() {
        let (mut c, _) = first.primitive_int();
        for e in nonzero {
            let (ce, _) = e.primitive_int();
            c = gcd_rat(&c, &ce);
        }
        if !c.is_one() {
            let inv = c.recip();
            for e in row.iter_mut() {
                *e = e.scale(&inv);
            }
        }
    }
    row
}

fn gcd_rat(a: &BigRat, b: &BigRat) -> BigRat {
    use num_integer::Integer;
    BigRat::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
    .abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    /// Cofactor-expansion oracle, independent of the Bareiss path.
    fn laplace_det<R: ElimRing + std::ops::Neg<Output = R>>(m: &[Vec<R>]) -> R {
        let n = m.len();
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = R::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let sub = minor(m, 0, j);
            let term = m[0][j].mul(&laplace_det(&sub));
            acc = if j % 2 == 0 {
                acc.sub(&-term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    #[test]
    fn rational_det_matches_laplace() {
        let m = vec![
            vec![rat(2, 1), rat(-1, 3), rat(0, 1)],
            vec![rat(5, 2), rat(1, 1), rat(4, 1)],
            vec![rat(-3, 1), rat(7, 5), rat(1, 2)],
        ];
        assert_eq!(det_rat(m.clone()).unwrap(), laplace_det(&m));
    }

    #[test]
    fn upoly_det_matches_laplace() {
        let p = |v: &[i64]| UPoly::from_coeffs(v.iter().map(|&c| rat(c, 1)).collect());
        let m = vec![
            vec![p(&[1, 2]), p(&[0, 0, 1]), p(&[3])],
            vec![p(&[-1]), p(&[4, 1]), p(&[0, 2])],
            vec![p(&[5, 0, 1]), p(&[1]), p(&[1, 1, 1])],
        ];
        assert_eq!(bareiss_det::<UPoly>(m.clone()).unwrap(), laplace_det(&m));
    }

    impl std::ops::Neg for UPoly {
        type Output = UPoly;
        fn neg(self) -> UPoly {
            UPoly::neg(&self)
        }
    }

    #[test]
    fn hpoly_interpolation_det_matches_direct_expansion() {
        let h = HPoly::h();
        let t = |k: i64| HPoly::constant(LaurentPoly::t_pow(k));
        let m = vec![
            vec![h.mul_laurent(&LaurentPoly::t_pow(1)), t(-1)],
            vec![t(2).add(&h), h.mul(&h).sub(&t(0))],
        ];
        let want = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
        assert_eq!(det_hpoly(&m).unwrap(), want);
    }

    #[test]
    fn kernel_of_constructed_rank_deficiency() {
        // columns satisfy c2 = t*c0 + (t^-1 - 1)*c1, so (t, t^-1 - 1, -1)
        // spans the kernel
        let a = LaurentPoly::t_pow(1);
        let b = LaurentPoly::t_pow(-1).sub(&LaurentPoly::one());
        let c0 = [
            LaurentPoly::one(),
            LaurentPoly::t_pow(2),
            LaurentPoly::from_int(3),
        ];
        let c1 = [
            LaurentPoly::t_pow(-1),
            LaurentPoly::one(),
            LaurentPoly::t_pow(1).add(&LaurentPoly::one()),
        ];
        let mut m = Vec::new();
        for i in 0..3 {
            let c2 = a.mul(&c0[i]).add(&b.mul(&c1[i]));
            m.push(vec![c0[i].clone(), c1[i].clone(), c2]);
        }
        let x = kernel_one(&m).unwrap();
        // normalize so the last coordinate is -1
        let scale = x[2].neg();
        let x0 = x[0].div(&scale).unwrap();
        let x1 = x[1].div(&scale).unwrap();
        assert_eq!(x0.to_laurent().unwrap(), a);
        assert_eq!(x1.to_laurent().unwrap(), b);
    }

    #[test]
    fn kernel_rejects_rank_deficiency_two() {
        let z = LaurentPoly::zero();
        let m = vec![
            vec![LaurentPoly::one(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone()],
        ];
        assert!(kernel_one(&m).is_err());
    }
}
