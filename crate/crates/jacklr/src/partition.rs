//! Integer partitions and the diagram combinatorics built on them.
//!
//! A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0)` is stored without trailing
//! zeros, so equality of values is equality of representations.  The Young
//! diagram of `λ` has `λ_i` cells in row `i`; rows and columns are 1-based.
//!
//! Two orders appear throughout the crate:
//!
//! * *dominance*: `μ ⊴ λ` iff `μ_1 + … + μ_i ≤ λ_1 + … + λ_i` for all `i`
//!   (only defined when `|μ| = |λ|`).  This is a partial order; incomparable
//!   pairs exist from size 6 on.
//! * the total order implemented by [`Ord`]: first by size, then
//!   lexicographically by parts.  On fixed size it is a linear extension of
//!   dominance (`μ ⊴ λ` implies `μ ≤ λ`), which is what makes the
//!   triangular solves elsewhere in the crate well-posed.  Iterating
//!   [`partitions_of`] yields the reverse (largest-first) of this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, with 1-based `row` and `col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    /// Build a partition from parts.  Trailing zeros are stripped; panics if
    /// the sequence is not weakly decreasing (that is a programming error,
    /// not an input error — parse user text with `from_str`).
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (1-based), 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Parts padded with zeros to length `n`.  Panics if `ℓ(λ) > n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(self.parts.len() <= n, "cannot pad {self} to {n} entries");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// The conjugate (transposed diagram): `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts) .all(|(&o, &s)| o <= s)
    }

    /// Each part multiplied by `k` (so `scaled(2)` is the doubling `2λ`).
    pub fn scaled(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition { parts: self.parts.iter().map(|&p| p * k).collect() }
    }

    /// Whether `(row, col)` is a cell of the diagram.
    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// All cells of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| {
            (1..=p).map(move |col| Cell { row: i + 1, col })
        })
    }

    /// Arm length: cells strictly to the right of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    /// Leg length: cells strictly below `cell` in its column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.parts.iter().skip(cell.row).filter(|&&p| p >= cell.col).count())
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.has_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutside { row: cell.row, col: cell.col, shape: self.to_string() })
        }
    }

    /// `z_λ = Π_i i^{m_i} · m_i!` where `m_i` is the multiplicity of `i`.
    /// This is the order of the centralizer of a permutation of cycle type
    /// `λ`, and the normalizing constant of the power-sum inner product.
    pub fn zee(&self) -> u64 {
        let mut z: u64 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i] as u64;
            let mut m = 0u64;
            while i < self.parts.len() && self.parts[i] as u64 == p {
                m += 1;
                i += 1;
            }
            for j in 1..=m {
                z *= p * j;
            }
        }
        z
    }
}

/// `μ ⊴ λ` in dominance order.  Errors unless `|μ| = |λ|`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::UnequalSize(mu.to_string(), lambda.to_string()));
    }
    let rows = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0usize, 0usize);
    for i in 1..=rows {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `ν ⊇ λ` with `|ν| = |λ| + k` such that `ν/λ` is a horizontal strip
/// (at most one new cell per column, equivalently `ν_1 ≥ λ_1 ≥ ν_2 ≥ λ_2 ≥ …`),
/// restricted to `ℓ(ν) ≤ max_len`.  Ordered largest-first lexicographically.
/// Empty when `max_len < ℓ(λ)`.
pub fn horizontal_strips(lambda: &Partition, k: usize, max_len: usize) -> Vec<Partition> {
    if max_len < lambda.len() {
        return Vec::new();
    }
    let depth = max_len.min(lambda.len() + 1);
    let mut out = Vec::new();
    let mut nu: Vec<usize> = Vec::new();
    strip_rec(lambda, k, depth, 1, &mut nu, &mut out);
    out
}

fn strip_rec(
    lambda: &Partition,
    budget: usize,
    depth: usize,
    row: usize,
    nu: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > depth {
        if budget == 0 {
            out.push(Partition::new(nu.iter().copied()));
        }
        return;
    }
    // Interlacing bounds: λ_{row-1} ≥ ν_row ≥ λ_row.
    let lo = lambda.part(row);
    let hi = if row == 1 { lo + budget } else { lambda.part(row - 1).min(lo + budget) };
    let mut v = hi;
    loop {
        nu.push(v);
        strip_rec(lambda, budget - (v - lo), depth, row + 1, nu, out);
        nu.pop();
        if v == lo {
            break;
        }
        v -= 1;
    }
}

/// All `κ ⊆ λ` with `|κ| = |λ| - k` such that `λ/κ` is a horizontal strip.
/// Used when peeling semistandard tableaux apart row by row.
pub fn horizontal_strip_predecessors(lambda: &Partition, k: usize) -> Vec<Partition> {
    if k > lambda.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut kappa: Vec<usize> = Vec::new();
    let goal = lambda.size() - k;
    pred_rec(lambda, goal, 1, 0, &mut kappa, &mut out);
    out
}

fn pred_rec(
    lambda: &Partition,
    goal: usize,
    row: usize,
    acc: usize,
    kappa: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > lambda.len() {
        if acc == goal {
            out.push(Partition::new(kappa.iter().copied()));
        }
        return;
    }
    // Interlacing from the other side: λ_row ≥ κ_row ≥ λ_{row+1}.
    let lo = lambda.part(row + 1);
    let hi = lambda.part(row);
    let mut v = hi;
    loop {
        if acc + v <= goal {
            kappa.push(v);
            pred_rec(lambda, goal, row + 1, acc + v, kappa, out);
            kappa.pop();
        }
        if v == lo {
            break;
        }
        v -= 1;
    }
}

/// All partitions of `n`, largest-first in the lexicographic order
/// (`(n)` first, `(1,…,1)` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_of_bounded(n, n)
}

/// All partitions of `n` with at most `max_len` parts, largest-first.
pub fn partitions_of_bounded(n: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    parts_rec(n, n, max_len, &mut prefix, &mut out);
    out
}

fn parts_rec(
    remaining: usize,
    max_part: usize,
    slots: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    if slots == 0 || max_part == 0 {
        return;
    }
    let mut p = max_part.min(remaining);
    loop {
        prefix.push(p);
        parts_rec(remaining - p, p, slots - 1, prefix, out);
        prefix.pop();
        if p == 1 {
            break;
        }
        p -= 1;
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Graded lexicographic: first by `|λ|`, then by parts.  On fixed size
    /// this refines dominance, so ascending iteration over a `BTreeMap`
    /// visits dominated partitions before dominating ones.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    /// Text form: comma-separated parts (`3,1,1`); the empty partition
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, the empty string, or `0`.  Interior zeros or
    /// increasing runs are rejected.
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (i, tok) in t.split(',').enumerate() {
            let p: usize = tok.trim().parse().map_err(|_| Error::Parse {
                pos: i,
                msg: format!("bad part {tok:?} in partition {s:?}"),
            })?;
            parts.push(p);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Parse {
                    pos: i + 1,
                    msg: format!("parts must be weakly decreasing in {s:?}"),
                });
            }
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse {
                pos: i,
                msg: format!("zero part inside partition {s:?}"),
            });
        }
        Ok(Partition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn dominance_basic() {
        // (3,3) and (4,1,1) are incomparable: 3<4 one way, 6>5 the other.
        let a = p(&[3, 3]);
        let b = p(&[4, 1, 1]);
        assert!(!dominance_leq(&a, &b).unwrap());
        assert!(!dominance_leq(&b, &a).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert!(dominance_leq(&Partition::empty(), &Partition::empty()).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for n in 0..=7 {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    assert_eq!(
                        dominance_leq(a, b).unwrap(),
                        dominance_leq(&b.conjugate(), &a.conjugate()).unwrap(),
                        "conjugation should reverse dominance for {a}, {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn total_order_refines_dominance() {
        for n in 0..=8 {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    if dominance_leq(a, b).unwrap() {
                        assert!(a <= b, "{a} ⊴ {b} but {a} > {b} in the total order");
                    }
                }
            }
            // partitions_of is the descending chain of that order
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
        }
    }

    #[test]
    fn arm_and_leg() {
        let lam = p(&[4, 3, 1]);
        assert_eq!(lam.arm(Cell { row: 1, col: 1 }).unwrap(), 3);
        assert_eq!(lam.leg(Cell { row: 1, col: 1 }).unwrap(), 2);
        assert_eq!(lam.arm(Cell { row: 2, col: 2 }).unwrap(), 1);
        assert_eq!(lam.leg(Cell { row: 2, col: 2 }).unwrap(), 0);
        assert!(lam.arm(Cell { row: 3, col: 2 }).is_err());
        assert!(lam.leg(Cell { row: 0, col: 1 }).is_err());
    }

    #[test]
    fn arm_sums_close_in_rows() {
        // Σ_c (a(c)+1) over a row of length m is m(m+1)/2; legs transpose.
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let arms: usize =
                    lam.cells().map(|c| lam.arm(c).unwrap() + 1).sum();
                let by_rows: usize =
                    lam.parts().iter().map(|&m| m * (m + 1) / 2).sum();
                assert_eq!(arms, by_rows);
                let legs: usize =
                    lam.cells().map(|c| lam.leg(c).unwrap() + 1).sum();
                let by_cols: usize =
                    lam.conjugate().parts().iter().map(|&m| m * (m + 1) / 2).sum();
                assert_eq!(legs, by_cols);
            }
        }
    }

    #[test]
    fn zee_values() {
        assert_eq!(p(&[2, 1, 1]).zee(), 4);
        assert_eq!(p(&[1, 1, 1]).zee(), 6);
        assert_eq!(p(&[3]).zee(), 3);
        assert_eq!(p(&[2, 2]).zee(), 8);
        assert_eq!(Partition::empty().zee(), 1);
        // Σ n!/z_λ over partitions of n counts all of S_n by cycle type.
        for (n, fact) in [(1u64, 1u64), (2, 2), (3, 6), (4, 24), (5, 120), (6, 720)] {
            let total: u64 = partitions_of(n as usize)
                .iter()
                .map(|lam| {
                    assert_eq!(fact % lam.zee(), 0);
                    fact / lam.zee()
                })
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn strips_example() {
        let got = horizontal_strips(&p(&[2, 1]), 2, 3);
        let want = vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn strips_against_column_oracle() {
        // Independent characterization: ν ⊇ λ is a horizontal strip iff no
        // column gains two cells, i.e. ν'_j - λ'_j ≤ 1 for all j.
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for k in 0..=4usize {
                    for max_len in lam.len()..=(lam.len() + 2) {
                        let fast = horizontal_strips(&lam, k, max_len);
                        let slow: Vec<Partition> = partitions_of_bounded(n + k, max_len)
                            .into_iter()
                            .filter(|nu| {
                                nu.contains(&lam) && {
                                    let (nc, lc) = (nu.conjugate(), lam.conjugate());
                                    (1..=nc.len()).all(|j| nc.part(j) - lc.part(j) <= 1)
                                }
                            })
                            .collect();
                        assert_eq!(fast, slow, "λ={lam}, k={k}, max_len={max_len}");
                    }
                }
            }
        }
    }

    #[test]
    fn strip_predecessors_invert_strips() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                for k in 0..=n {
                    for kappa in horizontal_strip_predecessors(&lam, k) {
                        assert!(
                            horizontal_strips(&kappa, k, lam.len()).contains(&lam),
                            "λ={lam}, κ={kappa}, k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "3,1,1".parse().unwrap();
        assert_eq!(lam, p(&[3, 1, 1]));
        assert_eq!(lam.to_string(), "3,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!("4,4,0".parse::<Partition>().unwrap(), p(&[4, 4]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=9).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions_of_bounded(6, 2).len(), 4); // (6),(5,1),(4,2),(3,3)
    }
}
