//! The Pieri rule for Jack polynomials: the support of P_lambda * P_(k)
//! is exactly the set of partitions obtained by adding a horizontal
//! k-strip to lambda, independent of alpha.
//!
//! Run with: cargo run --example pieri_support

use jacklr::partition::horizontal_strips;
use jacklr::{check_jack_pieri, JackBasis, Partition};

fn main() -> jacklr::Result<()> {
    let basis = JackBasis::new();
    let lam = Partition::new([3, 1]);
    let k = 2;
    let nvars = lam.size() + k;

    println!("horizontal {k}-strips over ({lam}):");
    for nu in horizontal_strips(&lam, k, nvars) {
        println!("  ({nu})");
    }

    let check = check_jack_pieri(&basis, &lam, k, nvars)?;
    println!("\nsupport of P_({lam}) * P_({k}):");
    for nu in &check.support {
        println!("  ({nu})");
    }
    println!("\nsupport equals the strip set: {}", check.matches);
    Ok(())
}
