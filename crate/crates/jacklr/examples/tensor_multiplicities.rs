//! Multiplicities in tensor products of the unitary highest-weight
//! representations attached to each Hermitian case, expressed through
//! Littlewood-Richardson data: squares for SU(p,q), index-doubled
//! coefficients for Sp(n) and SO*(2n), an explicit rank-two branching
//! rule for SO(n,2), and the conjectural closed forms for the two
//! exceptional cases.
//!
//! Run with: cargo run --example tensor_multiplicities

use jacklr::lr::lr_coeff;
use jacklr::{tensor_multiplicity, HermitianCase, Partition};

fn main() -> jacklr::Result<()> {
    let lam = Partition::new([2]);
    let mu = Partition::new([1, 1]);
    let nu = Partition::new([2, 1, 1]);

    println!(
        "multiplicity of nu = ({nu}) in the ({lam}) x ({mu}) tensor product:"
    );
    println!("(plain LR coefficient c = {})\n", lr_coeff(&lam, &mu, &nu));
    for literal in ["su:3,3", "sp:3", "sostar:12", "evii"] {
        let case: HermitianCase = literal.parse()?;
        let m = tensor_multiplicity(&case, &lam, &mu, &nu)?;
        let tag = if m.conjectural { "  [conjectural]" } else { "" };
        println!("  {literal:<10} -> {:>3}   via {:?}{tag}", m.value, m.formula);
    }

    // Rank-two branching: SO(n,2) representations are labeled by at most
    // two rows; the multiplicity comes from an explicit finite sum, and
    // only components of total size |lam| + |mu| can appear.
    let case: HermitianCase = "so2:6".parse()?;
    let a = Partition::new([3]);
    let b = Partition::new([2]);
    println!("\nSO(6,2) multiplicities in the ({a}) x ({b}) product:");
    for nu in [
        Partition::new([5]),
        Partition::new([4, 1]),
        Partition::new([3, 2]),
        Partition::new([3]),
        Partition::new([2, 1]),
        Partition::new([1]),
    ] {
        let m = tensor_multiplicity(&case, &a, &b, &nu)?;
        println!("  nu = ({nu}): multiplicity {}", m.value);
    }
    Ok(())
}
