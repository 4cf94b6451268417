//! Littlewood-Richardson coefficients: single values, full Schur products,
//! and the classical symmetries (conjugation duality, saturation).
//!
//! Run with: cargo run --example lr_coefficients

use jacklr::lr::{check_duality, check_saturation, lr_coeff, schur_product};
use jacklr::Partition;

fn main() -> jacklr::Result<()> {
    let lam = Partition::new([2, 1]);
    let mu = Partition::new([2, 1]);

    // A single coefficient: the multiplicity of s_(3,2,1) in s_(2,1)^2.
    let nu = Partition::new([3, 2, 1]);
    println!("c^({nu})_(({lam}),({mu})) = {}", lr_coeff(&lam, &mu, &nu));

    // The whole product s_(2,1) * s_(2,1), largest nu first.
    println!("\ns_({lam}) * s_({mu}) =");
    for (nu, c) in schur_product(&lam, &mu)?.iter().rev() {
        println!("  {c} * s_({nu})");
    }

    // Conjugation duality: c^nu_{lam,mu} = c^{nu'}_{lam',mu'}.
    println!(
        "\nduality on ((2,1),(2,1),(3,2,1)): {}",
        check_duality(&lam, &mu, &nu)
    );

    // Saturation: c^nu != 0 exactly when c^{2nu}_{2lam,2mu} != 0.
    let thin = Partition::new([2, 2]);
    println!(
        "saturation on ((2,1),(2,1),(2,2,1,1)): {}",
        check_saturation(&lam, &mu, &Partition::new([2, 2, 1, 1]))
    );
    println!(
        "saturation on ((1,1),(1,1),(2,2)):     {}",
        check_saturation(
            &Partition::new([1, 1]),
            &Partition::new([1, 1]),
            &thin
        )
    );
    Ok(())
}
