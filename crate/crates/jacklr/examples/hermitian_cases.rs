//! The registry of irreducible Hermitian symmetric spaces: rank,
//! restricted-root multiplicity m, tube type, the tube-type reduction of
//! the non-tube cases, and the Jack parameter alpha = 2/m that encodes
//! each case's spherical-function combinatorics.
//!
//! Run with: cargo run --example hermitian_cases

use jacklr::case_registry;

fn main() {
    println!(
        "{:<12} {:>4} {:>4} {:>6}   {:<10} {}",
        "case", "rank", "m", "alpha", "tube?", "tube reduction"
    );
    for case in case_registry() {
        let reduction = if case.is_tube() {
            "(itself)".to_string()
        } else {
            case.tube_reduction().to_string()
        };
        println!(
            "{:<12} {:>4} {:>4} {:>6}   {:<10} {}",
            case.to_string(),
            case.rank(),
            case.mult(),
            case.alpha().to_string(),
            if case.is_tube() { "tube" } else { "non-tube" },
            reduction
        );
    }

    println!();
    println!("case literals parse back: `\"su:3,5\".parse::<HermitianCase>()`");
}
