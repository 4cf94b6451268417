//! Exact combinatorics of Littlewood-Richardson coefficients, symbolic Jack
//! polynomials in the parameter `α`, and the product-support / tensor-product
//! questions they answer for the classical Hermitian symmetric spaces.
//!
//! Everything here is exact: integer partition combinatorics, arbitrary
//! precision rationals ([`BigRat`]), dense polynomials in `α` ([`AlphaPoly`])
//! and reduced rational functions in `α` ([`AlphaRat`]).  No floating point is
//! used anywhere, so every reported value is a certificate, not an estimate.
//!
//! The main layers, bottom to top:
//!
//! * [`partition`] — partitions, conjugation, dominance order, arm/leg
//!   statistics, horizontal strips.
//! * [`alg`] — the coefficient rings `ℚ`, `ℚ[α]`, `ℚ(α)`.
//! * [`symring`] — symmetric polynomials in a fixed number of variables with
//!   basis conversions (monomial, power sum, Schur) and the standard
//!   `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{ℓ(λ)}` inner product.
//! * [`lr`] — Littlewood-Richardson coefficients by tableau enumeration, an
//!   independent oracle through Schur expansions, duality / saturation
//!   checks, and the rank-two closed form.
//! * [`jack`] — the monic Jack basis `P_λ(x; α)` computed by Gram-Schmidt
//!   against the dominance order, hook normalizers, and the constant-term
//!   inner product used to validate orthogonality.
//! * [`structconst`] — structure constants `f^ν_{λμ}(α)` of the Jack basis,
//!   Stanley-style positivity checks, and Pieri support checks.
//! * [`hermitian`] — the registry of irreducible Hermitian symmetric cases
//!   and the translation of product-support and tensor-multiplicity
//!   questions into Littlewood-Richardson data.
//! * [`scan`] — exhaustive sweep drivers with deterministic JSON reports.
//!
//! The `jacklr` binary exposes the same functionality as a small CLI
//! (`lr`, `jack`, `struct`, `scan`); the `examples/` directory shows each
//! capability as a short program.

pub mod alg;
pub mod cache;
pub mod error;
pub mod hermitian;
pub mod jack;
pub mod lr;
pub mod partition;
pub mod scan;
pub mod structconst;
pub mod symring;

pub use alg::{AlphaPoly, AlphaRat, BigRat};
pub use error::{Error, Result};
pub use jack::{ct_inner, hook_c, hook_cprime, JackBasis, JackExpansion};
pub use hermitian::{
    case_registry, check_tensor_vs_lr, decide_product_support,
    tensor_multiplicity, Family, HermitianCase, MultiplicityResult,
    SupportDecision, SupportVerdict, TensorFormula,
};
pub use structconst::{
    check_jack_pieri, check_specializations, check_stanley,
    stanley_product, structure_constants, PieriCheck, SpecializationCheck,
    StanleyOutcome, StructTable,
};
pub use partition::{Cell, Partition};
pub use scan::{run_scan, Counterexample, ScanKind, ScanParams, ScanReport};
pub use symring::{Basis, SymPoly};
