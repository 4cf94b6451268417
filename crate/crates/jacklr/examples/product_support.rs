//! Deciding whether P_nu appears in the product P_lambda * P_mu at a
//! Hermitian case's own evaluation point alpha = 2/m, with the full
//! evidence bundle: the symbolic constant f^nu(alpha), its value at 2/m,
//! and the Littlewood-Richardson coefficient that conjecturally predicts
//! the same verdict.
//!
//! Run with: cargo run --example product_support

use jacklr::{
    decide_product_support, HermitianCase, JackBasis, Partition,
    SupportVerdict,
};

fn main() -> jacklr::Result<()> {
    let basis = JackBasis::new();
    let lam = Partition::new([1]);
    let mu = Partition::new([1]);

    for literal in ["sp:2", "su:2,2", "sostar:8", "so2:6", "eiii"] {
        let case: HermitianCase = literal.parse()?;
        println!("case {case} (alpha = {}):", case.alpha());
        for nu in [Partition::new([2]), Partition::new([1, 1])] {
            let d = decide_product_support(&basis, &case, &lam, &mu, &nu)?;
            let verdict = match d.verdict {
                SupportVerdict::InSupport => "in support",
                SupportVerdict::NotInSupport => "NOT in support",
            };
            println!(
                "  nu = ({nu}): f = {}, f(2/m) = {}, lr = {}  ->  {verdict}",
                d.f, d.value, d.lr
            );
        }
        println!();
    }
    Ok(())
}
