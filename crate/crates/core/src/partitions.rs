//! Integer partitions and Young-diagram combinatorics.
//!
//! The canonical ordering of partitions of `n` — used for matrix indexing
//! everywhere — is reverse-lexicographic: `(n)` first, `(1^n)` last.
//! Arm and leg are the generalized versions that may be negative for
//! boxes outside the diagram.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::error::{CoreError, Result};

/// Non-increasing finite sequence of positive parts; empty is the
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// 1-based box coordinates; membership in a diagram is a separate
/// predicate, so boxes outside a diagram are legal values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramBox {
    pub row: u32,
    pub col: u32,
}

impl DiagramBox {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "boxes are 1-based");
        DiagramBox { row, col }
    }
}

/// Three-valued outcome of the dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceCmp {
    /// `mu <= lambda` in dominance (including equality).
    LessEq,
    /// `mu` strictly dominates `lambda`.
    Greater,
    Incomparable,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1),
            "parts must be non-increasing and positive"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The row partition `(n)`; `(0)` is the empty partition.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The rectangle `(s^r)`: `r` parts equal to `s`.
    pub fn rect(r: u32, s: u32) -> Self {
        if r == 0 || s == 0 {
            Self::empty()
        } else {
            Partition(vec![s; r as usize])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `lambda_i` with the convention `lambda_i = 0` for `i > len` (1-based).
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&p| p == k).count() as u32
    }

    /// Partition with one copy of `k` removed; `None` if absent.
    pub fn remove_part(&self, k: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Partition with `k` inserted in sorted position.
    pub fn insert_part(&self, k: u32) -> Self {
        assert!(k >= 1);
        let mut parts = self.0.clone();
        let pos = parts.iter().position(|&p| p < k).unwrap_or(parts.len());
        parts.insert(pos, k);
        Partition(parts)
    }

    /// Partition of the remaining parts after the first.
    pub fn tail(&self) -> Self {
        Partition(self.0[1.min(self.0.len())..].to_vec())
    }

    pub fn conjugate(&self) -> Self {
        let mut parts = Vec::new();
        let mut j = 1;
        loop {
            let count = self.0.iter().filter(|&&p| p >= j).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            j += 1;
        }
        Partition(parts)
    }

    /// Boxes of the diagram in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = DiagramBox> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| {
            (1..=len).map(move |j| DiagramBox::new(i as u32 + 1, j))
        })
    }

    pub fn contains_box(&self, b: DiagramBox) -> bool {
        self.part(b.row) >= b.col
    }

    pub fn to_text(&self) -> String {
        let inner: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| CoreError::Parse(format!("bad partition `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            inner.split(',').map(|p| p.trim().parse()).collect();
        let parts = parts.map_err(|_| CoreError::Parse(format!("bad partition `{s}`")))?;
        if !(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1)) {
            return Err(CoreError::Parse(format!("not a partition `{s}`")));
        }
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All partitions of `n` in canonical (reverse-lexicographic) order:
/// `(n)` first, `(1^n)` last. Length is `p(n)`.
pub fn enumerate(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partition numbers `p(0..=n)` by the pentagonal-number recurrence.
pub fn partition_counts(n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1i128 } else { 1i128 };
            acc += sign * p[m - g1 as usize] as i128;
            if g2 as usize <= m {
                acc += sign * p[m - g2 as usize] as i128;
            }
            k += 1;
        }
        p[m] = acc as u64;
    }
    p
}

pub fn partition_count(n: u32) -> u64 {
    partition_counts(n)[n as usize]
}

/// Generalized arm and leg of a box with respect to `y`:
/// `arm = y_i - j`, `leg = y^T_j - i`, with rows/columns outside the
/// diagram contributing zero. Values may be negative.
pub fn arm_leg(y: &Partition, b: DiagramBox) -> (i64, i64) {
    let arm = y.part(b.row) as i64 - b.col as i64;
    let conj_col = y.0.iter().filter(|&&p| p >= b.col).count() as i64;
    let leg = conj_col - b.row as i64;
    (arm, leg)
}

/// The centralizer size `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = 1;
    while i <= lambda.first() {
        let m = lambda.multiplicity(i) as u64;
        for _ in 0..m {
            acc *= BigInt::from(i);
        }
        acc *= crate::algebra::rational::factorial(m);
        i += 1;
    }
    acc
}

/// Dominance comparison of two partitions of the same size.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<DominanceCmp> {
    if mu.size() != lambda.size() {
        return Err(CoreError::SizeMismatch(mu.to_text(), lambda.to_text()));
    }
    let len = mu.len().max(lambda.len());
    let (mut s_mu, mut s_la) = (0i64, 0i64);
    let (mut leq, mut geq) = (true, true);
    for i in 1..=len {
        s_mu += mu.part(i) as i64;
        s_la += lambda.part(i) as i64;
        if s_mu > s_la {
            leq = false;
        }
        if s_mu < s_la {
            geq = false;
        }
    }
    Ok(if leq {
        DominanceCmp::LessEq
    } else if geq {
        DominanceCmp::Greater
    } else {
        DominanceCmp::Incomparable
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(
            enumerate(3),
            vec![
                Partition::new(vec![3]),
                Partition::new(vec![2, 1]),
                Partition::new(vec![1, 1, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_matches_pentagonal_counts() {
        let counts = partition_counts(40);
        for n in 0..=40 {
            assert_eq!(enumerate(n).len() as u64, counts[n as usize], "n = {n}");
        }
    }

    #[test]
    fn conjugate_examples() {
        let lambda = Partition::new(vec![4, 4, 2, 1, 1, 1]);
        assert_eq!(lambda.conjugate(), Partition::new(vec![6, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(5).conjugate(), Partition::rect(5, 1));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for lambda in enumerate(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn arm_leg_by_direct_count() {
        // independent oracle: count boxes strictly right / strictly below
        let y = Partition::new(vec![4, 4, 2, 1, 1, 1]);
        let b = DiagramBox::new(1, 1);
        let right = y
            .boxes()
            .filter(|bb| bb.row == b.row && bb.col > b.col)
            .count() as i64;
        let below = y
            .boxes()
            .filter(|bb| bb.col == b.col && bb.row > b.row)
            .count() as i64;
        assert_eq!((right, below), (3, 5));
        assert_eq!(arm_leg(&y, b), (3, 5));
        // counting oracle over every box of the diagram
        for bb in y.boxes() {
            let right = y
                .boxes()
                .filter(|x| x.row == bb.row && x.col > bb.col)
                .count() as i64;
            let below = y
                .boxes()
                .filter(|x| x.col == bb.col && x.row > bb.row)
                .count() as i64;
            assert_eq!(arm_leg(&y, bb), (right, below));
        }
    }

    #[test]
    fn arm_leg_edge_cases() {
        assert_eq!(arm_leg(&Partition::row(1), DiagramBox::new(1, 1)), (0, 0));
        assert_eq!(arm_leg(&Partition::empty(), DiagramBox::new(1, 1)), (-1, -1));
    }

    #[test]
    fn box_and_size_consistency() {
        for n in 0..=9 {
            for lambda in enumerate(n) {
                assert_eq!(lambda.boxes().count() as u32, lambda.size());
                for b in lambda.boxes() {
                    let (a, l) = arm_leg(&lambda, b);
                    assert!(a >= 0 && l >= 0, "inside boxes have nonnegative arm/leg");
                }
            }
        }
    }

    #[test]
    fn z_lambda_examples() {
        assert_eq!(
            z_lambda(&Partition::rect(5, 1)),
            crate::algebra::rational::factorial(5)
        );
        assert_eq!(z_lambda(&Partition::empty()), BigInt::one());
        // centralizer oracle for cycle type (2,1) in S_3: brute force over
        // all 6 permutations, conjugating a fixed permutation of that type
        let sigma = [1usize, 0, 2]; // transposition (0 1), cycle type (2,1)
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let centralizer = perms
            .iter()
            .filter(|tau| {
                // tau . sigma . tau^{-1} == sigma
                let mut conj = [0usize; 3];
                for x in 0..3 {
                    let tx = tau[x];
                    conj[tx] = tau[sigma[x]];
                }
                conj == sigma
            })
            .count();
        assert_eq!(centralizer, 2);
        assert_eq!(z_lambda(&Partition::new(vec![2, 1])), BigInt::from(2));
    }

    #[test]
    fn dominance_examples() {
        let leq = |a: &[u32], b: &[u32]| {
            dominance_leq(&Partition::new(a.to_vec()), &Partition::new(b.to_vec())).unwrap()
        };
        assert_eq!(leq(&[1, 1, 1], &[3]), DominanceCmp::LessEq);
        assert_eq!(leq(&[2, 1], &[2, 1]), DominanceCmp::LessEq);
        // partial-sum oracle: sums 3,4,5,6 vs 2,4,6,6 cross
        assert_eq!(leq(&[3, 1, 1, 1], &[2, 2, 2]), DominanceCmp::Incomparable);
        assert_eq!(leq(&[3], &[1, 1, 1]), DominanceCmp::Greater);
        assert!(dominance_leq(&Partition::row(2), &Partition::row(3)).is_err());
    }

    #[test]
    fn dominance_transitive_antisymmetric() {
        for n in 0..=8 {
            let all = enumerate(n);
            for a in &all {
                for b in &all {
                    let ab = dominance_leq(a, b).unwrap();
                    let ba = dominance_leq(b, a).unwrap();
                    // antisymmetry
                    if ab == DominanceCmp::LessEq && ba == DominanceCmp::LessEq {
                        assert_eq!(a, b);
                    }
                    if ab != DominanceCmp::LessEq {
                        continue;
                    }
                    for c in &all {
                        if dominance_leq(b, c).unwrap() == DominanceCmp::LessEq {
                            assert_eq!(dominance_leq(a, c).unwrap(), DominanceCmp::LessEq);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["()", "(1)", "(4,4,2,1,1,1)"] {
            assert_eq!(Partition::parse(s).unwrap().to_text(), s);
        }
        assert!(Partition::parse("(1,2)").is_err());
    }
}
