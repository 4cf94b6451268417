//! Structure constants of the Jack basis: the rational functions
//! f^nu_{lambda,mu}(alpha) in P_lambda * P_mu = sum_nu f^nu P_nu, their
//! specializations, and the normalized products that are conjecturally
//! polynomials with nonnegative integer coefficients.
//!
//! Run with: cargo run --example structure_constants

use jacklr::{
    check_stanley, stanley_product, structure_constants, JackBasis,
    Partition, StanleyOutcome,
};

fn main() -> jacklr::Result<()> {
    let basis = JackBasis::new();
    let lam = Partition::new([2]);
    let mu = Partition::new([1, 1]);
    let nvars = lam.size() + mu.size();

    println!("P_({lam}) * P_({mu}) = sum of f^nu * P_nu with");
    let table = structure_constants(&basis, &lam, &mu, nvars)?;
    for (nu, f) in table.entries().iter().rev() {
        println!("  f^({nu}) = {f}");
    }

    // Multiplying by the hook normalizers clears every denominator:
    // c_lambda c_mu c'_nu f^nu is a polynomial in alpha with nonnegative
    // integer coefficients (Stanley's conjecture, proved in special cases).
    println!("\nnormalized products c_l c_m c'_n * f^n:");
    for (nu, _) in table.entries().iter().rev() {
        let p = stanley_product(&basis, &lam, &mu, nu)?;
        let verdict = match check_stanley(&basis, &lam, &mu, nu)? {
            StanleyOutcome::PolynomialNonneg(_) => "nonnegative integers",
            StanleyOutcome::PolynomialNegative(_) => "NEGATIVE coefficient!",
            StanleyOutcome::NotPolynomial(_) => "NOT a polynomial!",
        };
        println!("  nu = ({nu}): {p}   [{verdict}]");
    }
    Ok(())
}
