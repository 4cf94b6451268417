//! Structure constants of the Jack basis:
//! `P_λ(x;α) · P_μ(x;α) = Σ_ν f^ν_{λμ}(α) P_ν(x;α)`.
//!
//! The `f^ν_{λμ}(α)` are rational functions of `α`.  At `α = 1` they
//! specialize to the Littlewood-Richardson coefficients `c^ν_{λμ}` (the
//! Schur case), which anchors every symbolic computation here to the
//! independent combinatorial rule in [`crate::lr`].
//!
//! On top of the raw expansion this module packages three classical
//! verification batteries:
//!
//! * **Stanley's positivity conjecture** (Stanley 1989): the normalized
//!   product `c_λ(α) c_μ(α) c'_ν(α) f^ν_{λμ}(α)` is conjectured to be a
//!   polynomial in `α` with nonnegative integer coefficients.  That it is a
//!   polynomial with integer coefficients is the Knop-Sahi theorem, so
//!   [`check_stanley`] classifies the outcome in three tiers.
//! * **Specialization agreement**: for positive rational points `α = 2/m`
//!   the nonvanishing of `f^ν_{λμ}(2/m)` is expected to be independent of
//!   `m` and to coincide with `c^ν_{λμ} ≠ 0` ([`check_specializations`]).
//! * **Pieri interlacing**: for a one-row `μ = (k)` the support of the
//!   product is exactly the set of partitions obtained from `λ` by adding a
//!   horizontal `k`-strip ([`check_jack_pieri`]).

use std::collections::BTreeMap;

use num::Zero;

use crate::alg::{has_nonneg_int_coeffs, rat, AlphaPoly, AlphaRat, BigRat};
use crate::error::{Error, Result};
use crate::jack::{hook_c, hook_cprime, JackBasis};
use crate::lr::lr_coeff;
use crate::partition::{horizontal_strips, Partition};
use crate::symring::mono_product;

/// The expansion of one Jack product in the Jack basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructTable {
    lambda: Partition,
    mu: Partition,
    nvars: usize,
    entries: BTreeMap<Partition, AlphaRat>,
}

impl StructTable {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `f^ν_{λμ}(α)`; zero for any `ν` outside the stored support.
    pub fn coeff(&self, nu: &Partition) -> AlphaRat {
        self.entries.get(nu).cloned().unwrap_or_else(AlphaRat::zero)
    }

    /// Nonzero entries, keyed by `ν`.
    pub fn entries(&self) -> &BTreeMap<Partition, AlphaRat> {
        &self.entries
    }

    /// The support, largest partition first.
    pub fn support(&self) -> Vec<Partition> {
        self.entries.keys().rev().cloned().collect()
    }
}

/// Expand `P_λ · P_μ` in the Jack basis, in `nvars` variables.
///
/// Use `nvars = |λ| + |μ|` to see the full support; with fewer variables
/// the partitions `ν` with `ℓ(ν) > nvars` are truncated away (the surviving
/// coefficients are unchanged, since restriction to fewer variables is a
/// ring homomorphism and the truncated Jack polynomials stay independent).
pub fn structure_constants(
    jack: &JackBasis,
    lam: &Partition,
    mu: &Partition,
    nvars: usize,
) -> Result<StructTable> {
    for part in [lam, mu] {
        if part.len() > nvars {
            return Err(Error::LengthExceedsVars {
                partition: part.to_string(),
                len: part.len(),
                nvars,
            });
        }
    }
    let p_lam = jack.expand(lam, nvars)?.to_sym();
    let p_mu = jack.expand(mu, nvars)?.to_sym();
    let product = mono_product(&p_lam, &p_mu)?;

    // Peel repeatedly at the largest remaining monomial key.  Lex order on
    // partitions of equal size refines dominance, and every P_ν is
    // dominance-triangular with monic top term m_ν, so the leading key of
    // the residual names the next ν and its coefficient is f^ν exactly.
    let mut residual = product.clone();
    let mut entries = BTreeMap::new();
    while let Some(nu) = residual.keys_desc().first().map(|&k| k.clone()) {
        let c = residual.coeff(&nu);
        let p_nu = jack.expand(&nu, nvars)?.to_sym();
        residual.add_scaled(&p_nu, &(-&c));
        debug_assert!(residual.coeff(&nu).is_zero());
        entries.insert(nu, c);
    }

    #[cfg(debug_assertions)]
    {
        let mut rebuilt = crate::symring::SymPoly::zero(
            crate::symring::Basis::Monomial,
            nvars,
        );
        for (nu, c) in &entries {
            rebuilt.add_scaled(&jack.expand(nu, nvars)?.to_sym(), c);
        }
        debug_assert!(
            rebuilt == product,
            "Jack expansion of P_{lam}·P_{mu} failed to reconstruct"
        );
    }

    Ok(StructTable { lambda: lam.clone(), mu: mu.clone(), nvars, entries })
}

/// The Stanley normalization `c_λ(α) c_μ(α) c'_ν(α) f^ν_{λμ}(α)`, reduced.
///
/// Returns zero whenever `f^ν_{λμ} = 0`, in particular when
/// `|ν| ≠ |λ| + |μ|`.
pub fn stanley_product(
    jack: &JackBasis,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<AlphaRat> {
    if nu.size() != lam.size() + mu.size() {
        return Ok(AlphaRat::zero());
    }
    let nvars = (lam.size() + mu.size()).max(1);
    let table = structure_constants(jack, lam, mu, nvars)?;
    let f = table.coeff(nu);
    if f.is_zero() {
        return Ok(AlphaRat::zero());
    }
    let hooks = &(&hook_c(lam) * &hook_c(mu)) * &hook_cprime(nu);
    Ok(&AlphaRat::from_poly(hooks) * &f)
}

/// Outcome of the Stanley positivity check for one triple.
#[derive(Clone, Debug, PartialEq)]
pub enum StanleyOutcome {
    /// A polynomial in `α` with nonnegative integer coefficients — the
    /// conjectured behaviour.
    PolynomialNonneg(AlphaPoly),
    /// A polynomial, but with a negative or non-integer coefficient.  A
    /// reproducible instance would be a disproof of Stanley's conjecture.
    PolynomialNegative(AlphaPoly),
    /// Not a polynomial at all.  Would contradict the Knop-Sahi theorem,
    /// i.e. it indicates a bug rather than mathematics.
    NotPolynomial(AlphaRat),
}

/// Classify `stanley_product(λ, μ, ν)`.
pub fn check_stanley(
    jack: &JackBasis,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<StanleyOutcome> {
    let value = stanley_product(jack, lam, mu, nu)?;
    Ok(match value.try_as_polynomial() {
        Some(p) if has_nonneg_int_coeffs(&p) => {
            StanleyOutcome::PolynomialNonneg(p)
        }
        Some(p) => StanleyOutcome::PolynomialNegative(p),
        None => StanleyOutcome::NotPolynomial(value),
    })
}

/// Evidence bundle from [`check_specializations`].
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializationCheck {
    /// The symbolic structure constant `f^ν_{λμ}(α)`.
    pub f: AlphaRat,
    /// The Littlewood-Richardson coefficient `c^ν_{λμ}`.
    pub lr: u64,
    /// `(m, f^ν_{λμ}(2/m))` for each requested `m`.
    pub values: Vec<(u64, BigRat)>,
    /// Whether every evaluated point is nonzero exactly when `c^ν ≠ 0`.
    pub agrees: bool,
}

/// Evaluate `f^ν_{λμ}` at `α = 2/m` for each `m` and compare nonvanishing
/// against the Littlewood-Richardson coefficient.
///
/// The expected behaviour — `f(2/m) ≠ 0` for every positive `m` iff
/// `c^ν_{λμ} ≠ 0` — is what makes the rational points interchangeable with
/// the combinatorial rule; any disagreement is surfaced in the returned
/// record, never dropped.
pub fn check_specializations(
    jack: &JackBasis,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    m_values: &[u64],
) -> Result<SpecializationCheck> {
    if m_values.iter().any(|&m| m == 0) {
        return Err(Error::InvalidParameters(
            "m values must be positive".into(),
        ));
    }
    let f = if nu.size() == lam.size() + mu.size() {
        let nvars = nu.size().max(1);
        structure_constants(jack, lam, mu, nvars)?.coeff(nu)
    } else {
        AlphaRat::zero()
    };
    let lr = lr_coeff(lam, mu, nu);
    let mut values = Vec::with_capacity(m_values.len());
    for &m in m_values {
        let point = rat(2, m as i64);
        values.push((m, f.evaluate(&point)?));
    }
    let agrees = values.iter().all(|(_, v)| !v.is_zero() == (lr != 0));
    Ok(SpecializationCheck { f, lr, values, agrees })
}

/// Evidence bundle from [`check_jack_pieri`].
#[derive(Clone, Debug, PartialEq)]
pub struct PieriCheck {
    /// Support of `P_λ · P_(k)` in the Jack basis, largest first.
    pub support: Vec<Partition>,
    /// Partitions reachable from `λ` by adding a horizontal `k`-strip,
    /// capped at `ℓ ≤ nvars`; same order.
    pub expected: Vec<Partition>,
    pub matches: bool,
}

/// Check that multiplying by the one-row `P_(k)` moves the support exactly
/// along horizontal `k`-strips (the interlacing condition
/// `ν_1 ≥ λ_1 ≥ ν_2 ≥ λ_2 ≥ …`).
pub fn check_jack_pieri(
    jack: &JackBasis,
    lam: &Partition,
    k: usize,
    nvars: usize,
) -> Result<PieriCheck> {
    let row = Partition::new([k]);
    let table = structure_constants(jack, lam, &row, nvars)?;
    let support = table.support();
    let expected = horizontal_strips(lam, k, nvars);
    let matches = support == expected;
    Ok(PieriCheck { support, expected, matches })
}
