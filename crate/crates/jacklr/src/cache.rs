//! On-disk cache for Jack expansions.
//!
//! One record per `(λ, nvars)` pair, stored as a small text file:
//!
//! ```text
//! jack|3,1|4|v1
//! 3,1|1|1
//! 2,1,1|2*a + 4|a + 1
//! ...
//! ```
//!
//! The header pins the key and the format version; each following line is
//! `<μ>|<numerator>|<denominator>` with the coefficient polynomials in their
//! canonical text form, keys largest-first.  Records are written to a
//! temporary file in the same directory and then renamed into place, so
//! readers never observe a half-written record.  Records that fail to parse
//! or validate are deleted and recomputed; they are never trusted.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::alg::{AlphaPoly, AlphaRat};
use crate::error::Result;
use crate::partition::Partition;

const VERSION: &str = "v1";

/// A directory of Jack-expansion records.
#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// Wrap a directory path.  Nothing is created until the first store.
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn record_path(&self, lam: &Partition, nvars: usize) -> PathBuf {
        self.dir.join(format!("jack_{lam}_{nvars}.rec"))
    }

    /// Load a record if present and intact.  A corrupt record is removed so
    /// the subsequent store can replace it.
    pub fn load(
        &self,
        lam: &Partition,
        nvars: usize,
    ) -> Option<BTreeMap<Partition, AlphaRat>> {
        let path = self.record_path(lam, nvars);
        let text = std::fs::read_to_string(&path).ok()?;
        match parse_record(&text, lam, nvars) {
            // Records are only ever written in canonical form, so anything
            // that does not survive a bit-exact re-render (stray whitespace,
            // truncation mid-line, reordered terms) is damage.
            Some(coeffs) if render_record(lam, nvars, &coeffs) == text => {
                Some(coeffs)
            }
            _ => {
                let _ = std::fs::remove_file(&path);
                None
            }
        }
    }

    /// Write a record atomically (temp file + rename).
    pub fn store(
        &self,
        lam: &Partition,
        nvars: usize,
        coeffs: &BTreeMap<Partition, AlphaRat>,
    ) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let final_path = self.record_path(lam, nvars);
        let tmp_path = self.dir.join(format!(
            "{}.tmp.{}.{}",
            final_path.file_name().unwrap().to_string_lossy(),
            std::process::id(),
            next_seq(),
        ));
        std::fs::write(&tmp_path, render_record(lam, nvars, coeffs))?;
        std::fs::rename(&tmp_path, &final_path)?;
        Ok(())
    }
}

fn next_seq() -> u64 {
    static SEQ: AtomicU64 = AtomicU64::new(0);
    SEQ.fetch_add(1, Ordering::Relaxed)
}

fn render_record(
    lam: &Partition,
    nvars: usize,
    coeffs: &BTreeMap<Partition, AlphaRat>,
) -> String {
    let mut out = format!("jack|{lam}|{nvars}|{VERSION}\n");
    for (mu, c) in coeffs.iter().rev() {
        out.push_str(&format!("{mu}|{}|{}\n", c.num(), c.den()));
    }
    out
}

fn parse_record(
    text: &str,
    lam: &Partition,
    nvars: usize,
) -> Option<BTreeMap<Partition, AlphaRat>> {
    let mut lines = text.lines();
    let header = lines.next()?;
    if header != format!("jack|{lam}|{nvars}|{VERSION}") {
        return None;
    }
    let mut coeffs = BTreeMap::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.splitn(3, '|');
        let mu: Partition = fields.next()?.parse().ok()?;
        let num: AlphaPoly = fields.next()?.parse().ok()?;
        let den: AlphaPoly = fields.next()?.parse().ok()?;
        let c = AlphaRat::ratio(num, den).ok()?;
        if c.is_zero() || coeffs.insert(mu, c).is_some() {
            return None; // zero terms and duplicate keys are both corrupt
        }
    }
    // structural sanity of the expansion itself
    if !coeffs.get(lam).map_or(false, |c| c.is_one()) {
        return None;
    }
    for mu in coeffs.keys() {
        if mu.size() != lam.size()
            || mu.len() > nvars
            || !crate::partition::dominance_leq(mu, lam).unwrap_or(false)
        {
            return None;
        }
    }
    // Every dominated partition that fits the variable count carries a
    // strictly positive coefficient in P_λ, so a complete record has exactly
    // that many lines; fewer means the tail of the file is missing.
    let expected = crate::partition::partitions_of(lam.size())
        .into_iter()
        .filter(|mu| {
            mu.len() <= nvars
                && crate::partition::dominance_leq(mu, lam).unwrap_or(false)
        })
        .count();
    if coeffs.len() != expected {
        return None;
    }
    Some(coeffs)
}
