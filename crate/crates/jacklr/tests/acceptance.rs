//! The acceptance sweep: twelve numbered criteria, each with a pinned
//! exact tolerance (equality of exact rationals, or literal zero) and,
//! where stated, a wall-clock budget.  Each test prints a single
//! `[criterion NN] PASS` line (run with `-- --nocapture` to see them);
//! a failing criterion shows up as the corresponding failed test.

use std::path::PathBuf;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use jacklr::lr::{
    check_duality, check_saturation, lr_coeff, rank2_coeff, schur_product,
};
use jacklr::partition::{horizontal_strips, partitions_of};
use jacklr::symring::schur_to_mono;
use jacklr::{
    check_jack_pieri, check_stanley, ct_inner, run_scan,
    structure_constants, BigRat, Counterexample, JackBasis, Partition,
    ScanKind, ScanParams, ScanReport, StanleyOutcome,
};

/// One Jack basis for the whole binary, so Gram-Schmidt work at each
/// degree happens once no matter which criterion reaches it first.
fn basis() -> &'static JackBasis {
    static BASIS: OnceLock<JackBasis> = OnceLock::new();
    BASIS.get_or_init(JackBasis::new)
}

/// One shared on-disk cache for the scan-driven criteria.
fn scan_cache() -> PathBuf {
    static DIR: OnceLock<tempfile::TempDir> = OnceLock::new();
    DIR.get_or_init(|| tempfile::tempdir().expect("tempdir"))
        .path()
        .to_path_buf()
}

/// All `(λ, μ)` with `|λ| + |μ| ≤ max_total`.
fn pairs_up_to(max_total: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for a in 0..=total {
            for lam in partitions_of(a) {
                for mu in partitions_of(total - a) {
                    out.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

fn one() -> BigRat {
    "1".parse().expect("rational literal")
}

/// Criteria 5 and 6 examine the two failure classes of the same sweep;
/// run it once.
fn stanley_sweep() -> &'static ScanReport {
    static REPORT: OnceLock<ScanReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let mut p = ScanParams::new(ScanKind::Stanley);
        p.max_size = 6;
        p.workers = 4;
        p.cache_dir = Some(scan_cache());
        run_scan(&p).expect("stanley sweep runs")
    })
}

#[test]
fn criterion_01_lr_matches_independent_oracle() {
    let start = Instant::now();
    let mut triples = 0u64;
    for (lam, mu) in pairs_up_to(7) {
        let oracle = schur_product(&lam, &mu).expect("oracle product");
        for nu in partitions_of(lam.size() + mu.size()) {
            let expected = oracle.get(&nu).copied().unwrap_or(0);
            assert_eq!(
                lr_coeff(&lam, &mu, &nu),
                expected,
                "tableau count and Schur-expansion oracle disagree at \
                 ({lam}),({mu}),({nu})"
            );
            triples += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "budget exceeded: {elapsed:?}");
    println!(
        "[criterion 01] PASS - lr_coeff equals the Schur-expansion oracle \
         on all {triples} triples with |lambda|+|mu| <= 7 ({elapsed:.2?})"
    );
}

#[test]
fn criterion_02_structure_constants_specialize_to_lr() {
    let start = Instant::now();
    let at = one();
    let mut triples = 0u64;
    for (lam, mu) in pairs_up_to(6) {
        let nvars = (lam.size() + mu.size()).max(1);
        let table = structure_constants(basis(), &lam, &mu, nvars)
            .expect("structure constants");
        for nu in partitions_of(lam.size() + mu.size()) {
            let f1 = table.coeff(&nu).evaluate(&at).expect("no pole at 1");
            let c = BigRat::from_integer(lr_coeff(&lam, &mu, &nu).into());
            assert_eq!(
                f1, c,
                "f^nu(1) != c^nu at ({lam}),({mu}),({nu})"
            );
            triples += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "budget exceeded: {elapsed:?}");
    println!(
        "[criterion 02] PASS - f^nu(alpha=1) equals c^nu on all {triples} \
         triples with |lambda|+|mu| <= 6 ({elapsed:.2?})"
    );
}

#[test]
fn criterion_03_jack_at_one_is_schur() {
    let start = Instant::now();
    let at = one();
    let mut count = 0u64;
    for size in 0..=6usize {
        for lam in partitions_of(size) {
            let nvars = size.max(1);
            let jack = basis()
                .expand(&lam, nvars)
                .expect("expansion")
                .evaluate_at(&at)
                .expect("no pole at 1");
            let schur = schur_to_mono(&lam, nvars).expect("schur expansion");
            assert_eq!(jack, schur, "P_({lam}) at alpha=1 is not s_({lam})");
            count += 1;
        }
    }
    println!(
        "[criterion 03] PASS - P_lambda(x; 1) equals s_lambda for all \
         {count} partitions with |lambda| <= 6 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_04_constant_term_orthogonality() {
    let start = Instant::now();
    let mut checks = 0u64;
    for size in 1..=4usize {
        let parts: Vec<_> = partitions_of(size);
        for lam in &parts {
            for mu in &parts {
                if lam == mu {
                    continue;
                }
                for nvars in lam.len().max(mu.len()).max(1)..=4 {
                    for k in [1u32, 2, 4] {
                        let alpha: BigRat =
                            format!("1/{k}").parse().expect("rational");
                        let f = basis()
                            .expand(lam, nvars)
                            .expect("expansion")
                            .evaluate_at(&alpha)
                            .expect("no pole");
                        let g = basis()
                            .expand(mu, nvars)
                            .expect("expansion")
                            .evaluate_at(&alpha)
                            .expect("no pole");
                        let ip = ct_inner(&f, &g, k).expect("constant term");
                        assert!(
                            num::Zero::is_zero(&ip),
                            "<P_({lam}), P_({mu})> = {ip} != 0 at \
                             alpha=1/{k}, {nvars} vars"
                        );
                        checks += 1;
                    }
                }
            }
        }
    }
    println!(
        "[criterion 04] PASS - constant-term inner product of distinct \
         Jacks is exactly 0 in all {checks} cases (sizes <= 4, nvars <= 4, \
         alpha in {{1, 1/2, 1/4}}) ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_05_no_nonpolynomial_normalized_products() {
    let report = stanley_sweep();
    let bad: Vec<_> = report
        .counterexamples
        .iter()
        .filter(|cx| {
            matches!(cx, Counterexample::Stanley { outcome, .. }
                if outcome == "not_polynomial")
        })
        .collect();
    assert!(
        bad.is_empty(),
        "normalized products failed to clear denominators (this is a \
         computation bug, not mathematical evidence): {bad:?}"
    );
    println!(
        "[criterion 05] PASS - all {} normalized products with \
         |lambda|+|mu| <= 6 are polynomials in alpha",
        report.attempted
    );
}

#[test]
fn criterion_06_no_negative_polynomial_coefficients() {
    let report = stanley_sweep();
    let bad: Vec<_> = report
        .counterexamples
        .iter()
        .filter(|cx| {
            matches!(cx, Counterexample::Stanley { outcome, .. }
                if outcome == "polynomial_with_negative_coefficient")
        })
        .collect();
    assert!(
        bad.is_empty(),
        "normalized products with a negative coefficient (genuine \
         counterexample evidence): {bad:?}"
    );
    println!(
        "[criterion 06] PASS - all {} normalized products with \
         |lambda|+|mu| <= 6 have nonnegative integer coefficients",
        report.attempted
    );
}

#[test]
fn criterion_07_pieri_support_is_horizontal_strips() {
    let start = Instant::now();
    let mut checks = 0u64;
    for size in 0..=5usize {
        for lam in partitions_of(size) {
            for k in 0..=4usize {
                for nvars in [lam.len() + 1, (size + k).max(1)] {
                    let rep = check_jack_pieri(basis(), &lam, k, nvars)
                        .expect("pieri check");
                    assert!(
                        rep.matches,
                        "support {:?} != strips {:?} at ({lam}), k={k}, \
                         nvars={nvars}",
                        rep.support, rep.expected
                    );
                    // the expectation itself comes from the interlacing
                    // enumeration; pin that explicitly
                    assert_eq!(
                        rep.expected,
                        horizontal_strips(&lam, k, nvars)
                    );
                    checks += 1;
                }
            }
        }
    }
    println!(
        "[criterion 07] PASS - Jack Pieri support equals the horizontal \
         k-strip set in all {checks} cases (|lambda| <= 5, k <= 4) \
         ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_08_rank_two_closed_form() {
    let start = Instant::now();
    let mut two_rows = Vec::new();
    for a in 0..=6usize {
        for b in 0..=a {
            two_rows.push(Partition::new([a, b]));
        }
    }
    let mut checks = 0u64;
    for lam in &two_rows {
        for mu in &two_rows {
            for nu in &two_rows {
                assert_eq!(
                    rank2_coeff(lam, mu, nu),
                    lr_coeff(lam, mu, nu),
                    "closed form disagrees at ({lam}),({mu}),({nu})"
                );
                checks += 1;
            }
        }
    }
    println!(
        "[criterion 08] PASS - the two-row closed form equals lr_coeff on \
         all {checks} triples with parts <= 6 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_09_saturation_and_duality() {
    let start = Instant::now();
    let mut checks = 0u64;
    for (lam, mu) in pairs_up_to(6) {
        for nu in partitions_of(lam.size() + mu.size()) {
            assert!(
                check_saturation(&lam, &mu, &nu),
                "saturation fails at ({lam}),({mu}),({nu})"
            );
            assert!(
                check_duality(&lam, &mu, &nu),
                "conjugation duality fails at ({lam}),({mu}),({nu})"
            );
            checks += 1;
        }
    }
    println!(
        "[criterion 09] PASS - saturation and conjugation duality hold on \
         all {checks} triples with |lambda|+|mu| <= 6 ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_10_tensor_multiplicity_matches_lr() {
    let start = Instant::now();
    let mut p = ScanParams::new(ScanKind::Prop61);
    p.max_size = 6;
    p.workers = 4;
    p.cache_dir = Some(scan_cache());
    let report = run_scan(&p).expect("tensor sweep runs");
    assert!(
        report.counterexamples.is_empty(),
        "tensor multiplicity vs LR mismatches: {:?}",
        report.counterexamples
    );
    assert!(report.attempted > 0);
    println!(
        "[criterion 10] PASS - tensor multiplicity is nonzero exactly when \
         c^nu != 0 in all {} rank-compatible cases, sizes <= 6, for \
         su:2,2 su:2,3 sp:2 sp:3 sostar:8 so2:6 ({:.2?})",
        report.attempted,
        start.elapsed()
    );
}

#[test]
fn criterion_11_support_sweep_all_default_cases() {
    let start = Instant::now();
    let mut p = ScanParams::new(ScanKind::ConjB);
    p.max_size = 6;
    p.workers = 4;
    p.cache_dir = Some(scan_cache());
    let report = run_scan(&p).expect("support sweep runs");
    assert!(
        report.counterexamples.is_empty(),
        "support verdict vs LR mismatches: {:?}",
        report.counterexamples
    );
    assert!(report.attempted > 0);
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1800),
        "budget exceeded: {elapsed:?}"
    );
    println!(
        "[criterion 11] PASS - f^nu(2/m) != 0 agrees with c^nu != 0 in all \
         {} cases across sp:2 sp:3 su:2,2 su:3,3 sostar:8 so2:5 so2:6 \
         evii, sizes <= 6 ({elapsed:.2?})",
        report.attempted
    );
}

#[test]
fn criterion_12_scan_reports_are_deterministic() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_jacklr");
    let cache_a = tempfile::tempdir().expect("tempdir");
    let cache_b = tempfile::tempdir().expect("tempdir");
    let run = |workers: &str, cache: &std::path::Path| {
        let out = Command::new(bin)
            .args([
                "scan",
                "stanley",
                "--max-size",
                "4",
                "--json",
                "--workers",
                workers,
                "--cache",
            ])
            .arg(cache)
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "scan exited nonzero: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    let serial_cold = run("1", cache_a.path());
    let parallel_cold = run("8", cache_b.path());
    let serial_warm = run("1", cache_a.path());
    assert_eq!(
        serial_cold, parallel_cold,
        "worker count changed the report bytes"
    );
    assert_eq!(
        serial_cold, serial_warm,
        "cache state changed the report bytes"
    );
    assert!(!serial_cold.is_empty());
    println!(
        "[criterion 12] PASS - scan JSON is byte-identical across workers \
         1 vs 8 and cold vs warm cache ({:.2?})",
        start.elapsed()
    );
}

/// The sweep behind criteria 5 and 6 must also classify by exercising the
/// same public entry point a caller would use; spot-check the library API
/// agrees with the scan on one triple.
#[test]
fn stanley_api_agrees_with_sweep() {
    let lam = Partition::new([2, 1]);
    let mu = Partition::new([1]);
    let nu = Partition::new([2, 1, 1]);
    match check_stanley(basis(), &lam, &mu, &nu).expect("check runs") {
        StanleyOutcome::PolynomialNonneg(_) => {}
        other => panic!("expected a nonnegative polynomial, got {other:?}"),
    }
}
