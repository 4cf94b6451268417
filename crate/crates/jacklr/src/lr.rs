//! Littlewood-Richardson coefficients.
//!
//! `c^ν_{λμ}` is computed by direct enumeration of Littlewood-Richardson
//! skew tableaux: fillings of `ν/λ` with content `μ` that are semistandard
//! (rows weakly increasing, columns strictly increasing) and whose reverse
//! reading word — right to left along each row, rows top to bottom — is a
//! lattice word (every prefix contains at least as many `t`s as `(t+1)`s).
//! Cells are filled exactly in reading order, so all three constraints prune
//! incrementally and the search never revisits a prefix twice.
//!
//! [`lr_oracle`] recomputes the same number by an independent route —
//! multiply `s_λ s_μ` in the monomial basis and peel off Schur expansions
//! against the dominance order — which is what the test suite uses to
//! cross-validate the tableau walk.
//!
//! Also here: the `c^ν_{λμ} = c^{ν'}_{λ'μ'}` conjugation symmetry, the
//! saturation property `c^ν_{λμ} ≠ 0 ⇔ c^{2ν}_{2λ,2μ} ≠ 0` (Knutson-Tao),
//! the closed form for partitions with at most two rows, and the Pieri rule
//! `s_λ s_{(k)} = Σ s_ν` over horizontal strips.

use std::collections::BTreeMap;

use num::{Signed, ToPrimitive};

use crate::error::Result;
use crate::partition::{horizontal_strips, partitions_of, Partition};
use crate::symring::{mono_product, schur_to_mono};

/// The Littlewood-Richardson coefficient `c^ν_{λμ}` by tableau enumeration.
/// Returns 0 whenever `|ν| ≠ |λ| + |μ|` or `λ ⊄ ν`.
pub fn lr_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) {
        return 0;
    }
    if mu.is_empty() {
        return 1; // the unique empty filling
    }
    // Skew cells in reverse reading order.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..=nu.len() {
        for j in ((lam.part(i) + 1)..=nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: Vec<Vec<usize>> =
        nu.parts().iter().map(|&p| vec![0; p]).collect();
    let mut counts = vec![0usize; mu.len() + 1];
    fill(&mut grid, &mut counts, &cells, 0, lam, mu, nu)
}

fn fill(
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    cells: &[(usize, usize)],
    idx: usize,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (i, j) = cells[idx];
    // row bound: the right neighbor was already placed in this row pass
    let vmax = if j + 1 <= nu.part(i) {
        grid[i - 1][j]
    } else {
        mu.len()
    };
    // column bound: the cell above is either part of λ (no constraint) or a
    // skew cell filled in an earlier row pass
    let vmin = if i >= 2 && j > lam.part(i - 1) {
        grid[i - 2][j - 1] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in vmin..=vmax.min(mu.len()) {
        if counts[v] >= mu.part(v) {
            continue; // content bound
        }
        if v > 1 && counts[v] >= counts[v - 1] {
            continue; // lattice condition on the reading-word prefix
        }
        grid[i - 1][j - 1] = v;
        counts[v] += 1;
        total += fill(grid, counts, cells, idx + 1, lam, mu, nu);
        counts[v] -= 1;
        grid[i - 1][j - 1] = 0;
    }
    total
}

/// The full Schur expansion of `s_λ s_μ`: the map `ν ↦ c^ν_{λμ}` over
/// `ν ⊢ |λ| + |μ|`, computed with `|λ| + |μ|` variables where no truncation
/// can occur.
pub fn schur_product(lam: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let d = lam.size() + mu.size();
    let n = d.max(1);
    let f = schur_to_mono(lam, n)?;
    let g = schur_to_mono(mu, n)?;
    let mut rem = mono_product(&f, &g)?;
    let mut out = BTreeMap::new();
    // s_ν = m_ν + (dominated terms), so peeling largest-first against the
    // total order removes each leading monomial exactly once
    for nu in partitions_of(d) {
        let c = rem.coeff(&nu);
        if num::Zero::is_zero(&c) {
            continue;
        }
        assert!(
            c.is_integer() && !c.is_negative(),
            "non-integral Schur expansion coefficient {c} at {nu}"
        );
        let cu = c.to_integer().to_u64().expect("coefficient out of range");
        out.insert(nu.clone(), cu);
        let minus_c = -c;
        rem.add_scaled(&schur_to_mono(&nu, n)?, &minus_c);
    }
    assert!(rem.is_zero(), "Schur peel left a remainder");
    Ok(out)
}

/// Independent recomputation of `c^ν_{λμ}` through [`schur_product`].
pub fn lr_oracle(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lam.size() + mu.size() != nu.size() {
        return Ok(0);
    }
    Ok(schur_product(lam, mu)?.get(nu).copied().unwrap_or(0))
}

/// `c^ν_{λμ} = c^{ν'}_{λ'μ'}`: returns whether the conjugation symmetry
/// holds for this triple (it always should).
pub fn check_duality(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lr_coeff(lam, mu, nu)
        == lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
}

/// Saturation: `c^ν_{λμ} ≠ 0` iff `c^{2ν}_{2λ,2μ} ≠ 0`.  Returns whether
/// the equivalence holds for this triple.
pub fn check_saturation(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let single = lr_coeff(lam, mu, nu) != 0;
    let doubled =
        lr_coeff(&lam.scaled(2), &mu.scaled(2), &nu.scaled(2)) != 0;
    single == doubled
}

/// Closed form in the two-row case.  With `a = λ_1 - λ_2`, `b = μ_1 - μ_2`,
/// `c = ν_1 - ν_2`, the coefficient is 1 exactly when `|ν| = |λ| + |μ|` and
/// `c ∈ {a+b, a+b-2, …, |a-b|}`, else 0 — the Clebsch-Gordan pattern for
/// `sl_2`.  Returns 0 if any partition has more than two parts.
pub fn rank2_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.len() > 2 || mu.len() > 2 || nu.len() > 2 {
        return 0;
    }
    if lam.size() + mu.size() != nu.size() {
        return 0;
    }
    let a = lam.part(1) - lam.part(2);
    let b = mu.part(1) - mu.part(2);
    let c = nu.part(1) - nu.part(2);
    let (lo, hi) = (a.abs_diff(b), a + b);
    if c >= lo && c <= hi && (hi - c) % 2 == 0 {
        1
    } else {
        0
    }
}

/// Pieri rule: the Schur expansion of `s_λ s_{(k)}` is `Σ_ν s_ν` over the
/// horizontal strips `ν/λ` of size `k`, all with coefficient 1.
pub fn pieri_expand(lam: &Partition, k: usize, max_len: usize) -> Vec<Partition> {
    horizontal_strips(lam, k, max_len)
}
