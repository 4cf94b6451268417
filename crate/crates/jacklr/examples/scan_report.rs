//! Exhaustive verification sweeps with deterministic reports: run a small
//! Stanley-positivity scan and a case-driven support scan, then show the
//! canonical JSON bytes that CI or plotting scripts would consume.
//!
//! The serialized report is a pure function of the scan parameters —
//! worker count and cache state never change a byte.
//!
//! Run with: cargo run --example scan_report

use jacklr::{run_scan, ScanKind, ScanParams};

fn main() -> jacklr::Result<()> {
    // Stanley positivity over every triple with |lambda| + |mu| <= 4.
    let mut params = ScanParams::new(ScanKind::Stanley);
    params.max_size = 4;
    params.workers = 4;
    let report = run_scan(&params)?;
    println!("{report}\n");

    // Product-support vs Littlewood-Richardson on two Hermitian cases.
    let mut params = ScanParams::new(ScanKind::ConjB);
    params.max_size = 3;
    params.cases = vec!["sp:2".parse()?, "su:2,2".parse()?];
    let report = run_scan(&params)?;
    println!("{report}\n");

    println!("canonical JSON (what --json and --out emit):");
    print!("{}", report.to_json());
    Ok(())
}
