//! Commutator rewriting onto the PBW basis, with memoized single-generator
//! expansions shared across every pairing in the crate.
//!
//! Conventions, pinned against the worked examples at levels 2 and 3:
//! the basis vector attached to a partition `(λ1 >= ... >= λk)` is the
//! operator word `L_{-λ1} L_{-λ2} ... L_{-λk}` applied to the highest
//! weight vector (rightmost factor acts first), and its dual is the
//! reversed word of positive modes `L_{λk} ... L_{λ1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::hcpoly::HcPoly;
use crate::algebra::hpoly::HPoly;
use crate::algebra::rational::{rat, rat_i64, BigRat};
use crate::partitions::Partition;
use crate::virasoro::central_charge;

use num_traits::Zero;

/// A word in the Virasoro generators: `n` stands for `L_n`, read left to
/// right as an operator product (the rightmost factor acts first).
pub type VirWord = Vec<i64>;

/// Expansion of a vector in the PBW basis with `(h, c)`-polynomial
/// coefficients.
pub type VermaMap = BTreeMap<Partition, HcPoly>;

/// Expansion with scalar coefficients (no `h` or `c` enters when only
/// negative modes are rewritten).
pub type LowerMap = BTreeMap<Partition, BigRat>;

type LowerCache = RwLock<HashMap<(u32, Partition), Arc<LowerMap>>>;
type RaiseCache = RwLock<HashMap<(u32, Partition), Arc<VermaMap>>>;

fn lower_cache() -> &'static LowerCache {
    static CACHE: OnceLock<LowerCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn raise_cache() -> &'static RaiseCache {
    static CACHE: OnceLock<RaiseCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn add_lower(out: &mut LowerMap, key: Partition, v: BigRat) {
    if v.is_zero() {
        return;
    }
    let entry = out.entry(key.clone()).or_insert_with(BigRat::zero);
    *entry += v;
    if entry.is_zero() {
        out.remove(&key);
    }
}

fn add_verma(out: &mut VermaMap, key: Partition, v: HcPoly) {
    if v.is_zero() {
        return;
    }
    let entry = out.entry(key.clone()).or_insert_with(HcPoly::zero);
    *entry = entry.add(&v);
    if entry.is_zero() {
        out.remove(&key);
    }
}

/// `L_{-n} |λ>` in the PBW basis (`n >= 1`).
pub fn apply_lower(n: u32, lambda: &Partition) -> Arc<LowerMap> {
    assert!(n >= 1);
    if lambda.is_empty() || n >= lambda.first() {
        let mut out = LowerMap::new();
        out.insert(lambda.insert_part(n), BigRat::from_integer(1.into()));
        return Arc::new(out);
    }
    let key = (n, lambda.clone());
    if let Some(hit) = lower_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let head = lambda.first();
    let tail = lambda.tail();
    let mut out = LowerMap::new();
    // L_{-n} L_{-a} = L_{-a} L_{-n} + (a - n) L_{-(a+n)}
    for (mu, c) in apply_lower(n, &tail).iter() {
        for (nu, d) in apply_lower(head, mu).iter() {
            add_lower(&mut out, nu.clone(), c * d);
        }
    }
    let bump = rat_i64(head as i64 - n as i64);
    for (mu, c) in apply_lower(head + n, &tail).iter() {
        add_lower(&mut out, mu.clone(), c * &bump);
    }
    let out = Arc::new(out);
    lower_cache()
        .write()
        .unwrap()
        .insert(key, out.clone());
    out
}

/// `L_k |λ>` in the PBW basis (`k >= 1`), coefficients polynomial in
/// `(h, c)`.
pub fn apply_raise(k: u32, lambda: &Partition) -> Arc<VermaMap> {
    assert!(k >= 1);
    if lambda.is_empty() {
        return Arc::new(VermaMap::new());
    }
    let key = (k, lambda.clone());
    if let Some(hit) = raise_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let a = lambda.first();
    let tail = lambda.tail();
    let mut out = VermaMap::new();
    // [L_k, L_{-a}] = (k + a) L_{k-a} + (C/12) k (k^2 - 1) δ_{k,a}
    let kk = k as i64;
    let aa = a as i64;
    if k == a {
        let coeff = HcPoly::h()
            .add(&HcPoly::constant(rat_i64(tail.size() as i64)))
            .scale(&rat_i64(2 * kk))
            .add(&HcPoly::c().scale(&rat(kk * kk * kk - kk, 12)));
        add_verma(&mut out, tail.clone(), coeff);
    } else if k > a {
        let scale = rat_i64(kk + aa);
        for (mu, p) in apply_raise(k - a, &tail).iter() {
            add_verma(&mut out, mu.clone(), p.scale(&scale));
        }
    } else {
        let scale = rat_i64(kk + aa);
        for (mu, c) in apply_lower(a - k, &tail).iter() {
            add_verma(&mut out, mu.clone(), HcPoly::constant(c * &scale));
        }
    }
    // L_{-a} (L_k |tail>)
    for (mu, p) in apply_raise(k, &tail).iter() {
        for (nu, d) in apply_lower(a, mu).iter() {
            add_verma(&mut out, nu.clone(), p.scale(d));
        }
    }
    let out = Arc::new(out);
    raise_cache()
        .write()
        .unwrap()
        .insert(key, out.clone());
    out
}

/// Applies one generator to a vector.
pub fn apply_gen(g: i64, v: &VermaMap) -> VermaMap {
    assert!(g != 0);
    let mut out = VermaMap::new();
    for (lambda, coeff) in v {
        if g > 0 {
            for (mu, p) in apply_raise(g as u32, lambda).iter() {
                add_verma(&mut out, mu.clone(), coeff.mul(p));
            }
        } else {
            for (mu, c) in apply_lower((-g) as u32, lambda).iter() {
                add_verma(&mut out, mu.clone(), coeff.scale(c));
            }
        }
    }
    out
}

/// Image of `word . |c,h>` in the PBW basis with `(h, c)` symbolic,
/// keeping only components of level `<= level_cap` in the result.
/// Intermediate levels are allowed to overshoot by the positive modes
/// still waiting to act, so no contribution to the kept range is lost.
pub fn normal_order_apply_hc(word: &[i64], level_cap: u32) -> VermaMap {
    let mut v = VermaMap::new();
    v.insert(Partition::empty(), HcPoly::one());
    for i in (0..word.len()).rev() {
        v = apply_gen(word[i], &v);
        let pending_raise: i64 = word[..i].iter().filter(|&&g| g > 0).sum();
        let allowed = level_cap as i64 + pending_raise;
        v.retain(|lambda, _| (lambda.size() as i64) <= allowed);
    }
    v
}

/// Same with `c` pre-substituted to `c(t)`.
pub fn normal_order_apply(word: &[i64], level_cap: u32) -> BTreeMap<Partition, HPoly> {
    let c = central_charge();
    normal_order_apply_hc(word, level_cap)
        .into_iter()
        .map(|(k, p)| (k, p.subst_c(&c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hc(h_terms: &[(u32, u32, (i64, i64))]) -> HcPoly {
        let mut p = HcPoly::zero();
        for &(hd, cd, (n, d)) in h_terms {
            p = p.add(&HcPoly::term(hd, cd, rat(n, d)));
        }
        p
    }

    #[test]
    fn level_one_pairing() {
        // L_1 L_{-1} |h> = 2h |h>
        let got = normal_order_apply_hc(&[1, -1], 0);
        assert_eq!(got.len(), 1);
        assert_eq!(got[&Partition::empty()], hc(&[(1, 0, (2, 1))]));
    }

    #[test]
    fn level_two_diagonal_pairing() {
        // L_2 L_{-2} |h> = (4h + c/2) |h>
        let got = normal_order_apply_hc(&[2, -2], 0);
        assert_eq!(got[&Partition::empty()], hc(&[(1, 0, (4, 1)), (0, 1, (1, 2))]));
    }

    #[test]
    fn single_lowering_is_basis() {
        let got = normal_order_apply_hc(&[-1], 1);
        assert_eq!(got.len(), 1);
        assert_eq!(got[&Partition::row(1)], HcPoly::one());
    }

    #[test]
    fn lowering_reorders_into_pbw() {
        // L_{-1} L_{-2} = L_{-2} L_{-1} + L_{-3}
        let got = normal_order_apply_hc(&[-1, -2], 3);
        assert_eq!(got.len(), 2);
        assert_eq!(got[&Partition::new(vec![2, 1])], HcPoly::one());
        assert_eq!(got[&Partition::row(3)], HcPoly::one());
    }

    #[test]
    fn level_cap_keeps_returning_components() {
        // L_2 L_{-2} L_{-1} |h> at cap 1: the level-3 intermediate must
        // survive long enough for L_2 to bring it back down
        let got = normal_order_apply_hc(&[2, -2, -1], 1);
        let direct = {
            // [L_2, L_{-2}] L_{-1} + L_{-2} [L_2, L_{-1}] on |h>:
            // (4(h+1) + c/2) L_{-1}|h> + 3 L_{-2} L_1 |h>
            hc(&[(1, 0, (4, 1)), (0, 0, (4, 1)), (0, 1, (1, 2))])
        };
        assert_eq!(got.len(), 1);
        assert_eq!(got[&Partition::row(1)], direct);
    }

    #[test]
    fn raising_annihilates_highest_weight() {
        assert!(normal_order_apply_hc(&[3], 0).is_empty());
    }
}
