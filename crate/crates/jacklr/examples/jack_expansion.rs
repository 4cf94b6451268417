//! Symbolic Jack polynomials P_lambda(x; alpha) in the monomial basis:
//! exact coefficients in the field Q(alpha), the Schur specialization at
//! alpha = 1, and the closed-form norm in terms of hook products.
//!
//! Run with: cargo run --example jack_expansion

use jacklr::{hook_c, hook_cprime, BigRat, JackBasis, Partition};

fn main() -> jacklr::Result<()> {
    let basis = JackBasis::new();
    let one: BigRat = "1".parse().expect("rational literal");

    // P_(2,1) in three variables, with every coefficient an exact rational
    // function of alpha (printed as `a`).
    let lam = Partition::new([2, 1]);
    let exp = basis.expand(&lam, 3)?;
    println!("P_({lam}) in 3 variables:");
    println!("  {exp}");

    // At alpha = 1 the Jack polynomial collapses to the Schur function.
    println!("\nat alpha = 1 (the Schur function s_({lam})):");
    println!("  {}", exp.evaluate_at(&one)?);

    // The squared norm <P, P> equals the hook-product ratio c'/c.
    let c = hook_c(&lam);
    let cp = hook_cprime(&lam);
    println!("\nhook products for ({lam}):");
    println!("  c  = {c}");
    println!("  c' = {cp}");
    println!("  <P, P> = c'/c = {}", basis.norm(&lam)?);
    Ok(())
}
