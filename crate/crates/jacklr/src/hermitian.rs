//! The Hermitian-symmetric-space layer.
//!
//! Each irreducible Hermitian symmetric space `G_ℝ/K_ℝ` of rank `r` gives a
//! multiplicity-free action of `K` on the polynomial ring `ℂ[p⁺]`, whose
//! isotypic components `S_λ` are indexed by partitions `λ` with `ℓ(λ) ≤ r`
//! (Schmid's theorem).  Two families of questions about these components
//! reduce to the combinatorics implemented in the lower layers:
//!
//! * **Product support** — whether `S_ν ⊆ S_λ · S_μ`.  By Ruitenburg's
//!   criterion this holds iff the Jack structure constant `f^ν_{λμ}`
//!   evaluated at `α = 2/m` is nonzero, where `m` is the restricted-root
//!   multiplicity of the associated *tube-type* space (non-tube spaces
//!   reduce to a tube-type space of the same rank by Wallach's
//!   construction).  The conjectural shortcut — equivalent under Stanley's
//!   positivity conjecture — is plain nonvanishing of the
//!   Littlewood-Richardson coefficient `c^ν_{λμ}`.
//!   [`decide_product_support`] computes both and reports the evidence.
//! * **Tensor multiplicities** — `[V_λ ⊗ V_μ : V_ν]` for the irreducible
//!   `K`-modules `V_λ` generated by the lowest vectors of `S_λ`.  For the
//!   classical families these are exact Littlewood-Richardson expressions;
//!   for the two exceptional spaces they are conjectural formulas, flagged
//!   as such.  [`check_tensor_vs_lr`] verifies that nonvanishing of the
//!   multiplicity coincides with nonvanishing of `c^ν_{λμ}` (graded case).
//!
//! The registry data per family (rank `r`, multiplicity `m`, tube type):
//!
//! | case        | `r`      | tube?      | `m`    | tube reduction      |
//! |-------------|----------|------------|--------|---------------------|
//! | `su:p,q`    | min(p,q) | p = q      | 2      | `su:r,r`            |
//! | `sp:n`      | n        | yes        | 1      | —                   |
//! | `sostar:2n` | ⌊n/2⌋    | n even     | 4      | `sostar:2(n−1)`     |
//! | `so2:n`     | 2        | yes        | n − 2  | —                   |
//! | `eiii`      | 2        | no         | 6      | `so2:8`             |
//! | `evii`      | 3        | yes        | 8      | —                   |
//!
//! The Jack parameter attached to a case is `α = 2/m`.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::alg::{rat, AlphaRat, BigRat};
use crate::error::{Error, Result};
use crate::jack::JackBasis;
use crate::lr::lr_coeff;
use crate::partition::Partition;
use crate::structconst::structure_constants;

/// The six families of irreducible Hermitian symmetric spaces, with their
/// parameters.  `SoStar { two_n }` is `SO*(2n)` storing the full `2n`;
/// `So2 { n }` is `SO₀(n,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Su { p: u32, q: u32 },
    Sp { n: u32 },
    SoStar { two_n: u32 },
    So2 { n: u32 },
    Eiii,
    Evii,
}

/// A validated case: the family together with its derived invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HermitianCase {
    family: Family,
    rank: usize,
    mult: u64,
    tube: bool,
}

impl HermitianCase {
    /// Validate the parameters and fill in rank, multiplicity and tube type.
    pub fn new(family: Family) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        let (rank, mult, tube) = match family {
            Family::Su { p, q } => {
                if p < 1 || q < 1 {
                    return bad(format!("su:{p},{q} needs p, q >= 1"));
                }
                (p.min(q) as usize, 2, p == q)
            }
            Family::Sp { n } => {
                if n < 1 {
                    return bad("sp:0 is empty".into());
                }
                (n as usize, 1, true)
            }
            Family::SoStar { two_n } => {
                if two_n % 2 != 0 {
                    return bad(format!(
                        "sostar:{two_n} must be even (the case is SO*(2n))"
                    ));
                }
                if two_n < 4 {
                    return bad(format!("sostar:{two_n} has rank 0"));
                }
                let n = two_n / 2;
                ((n / 2) as usize, 4, n % 2 == 0)
            }
            Family::So2 { n } => {
                if n < 3 {
                    return bad(format!("so2:{n} needs n >= 3"));
                }
                (2, (n - 2) as u64, true)
            }
            Family::Eiii => (2, 6, false),
            Family::Evii => (3, 8, true),
        };
        Ok(HermitianCase { family, rank, mult, tube })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank `r`: partitions are restricted to `ℓ ≤ r`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The restricted-root multiplicity `m` of the associated tube-type
    /// space.
    pub fn mult(&self) -> u64 {
        self.mult
    }

    pub fn is_tube(&self) -> bool {
        self.tube
    }

    /// The associated tube-type case of the same rank (itself, if already
    /// of tube type).
    pub fn tube_reduction(&self) -> HermitianCase {
        if self.tube {
            return *self;
        }
        let family = match self.family {
            Family::Su { p, q } => {
                let r = p.min(q);
                Family::Su { p: r, q: r }
            }
            Family::SoStar { two_n } => Family::SoStar { two_n: two_n - 2 },
            Family::Eiii => Family::So2 { n: 8 },
            // the remaining families are always tube type
            Family::Sp { .. } | Family::So2 { .. } | Family::Evii => {
                unreachable!()
            }
        };
        HermitianCase::new(family).expect("reductions are valid cases")
    }

    /// The Jack parameter `α = 2/m`.
    pub fn alpha(&self) -> BigRat {
        rat(2, self.mult as i64)
    }

    fn check_rank(&self, parts: &[&Partition]) -> Result<()> {
        for part in parts {
            if part.len() > self.rank {
                return Err(Error::RankExceeded {
                    partition: part.to_string(),
                    len: part.len(),
                    rank: self.rank,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for HermitianCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Su { p, q } => write!(f, "su:{p},{q}"),
            Family::Sp { n } => write!(f, "sp:{n}"),
            Family::SoStar { two_n } => write!(f, "sostar:{two_n}"),
            Family::So2 { n } => write!(f, "so2:{n}"),
            Family::Eiii => write!(f, "eiii"),
            Family::Evii => write!(f, "evii"),
        }
    }
}

impl FromStr for HermitianCase {
    type Err = Error;

    /// Case literals: `su:3,5`, `sp:4`, `sostar:8`, `so2:6`, `eiii`, `evii`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |msg: &str| Error::Parse { pos: 0, msg: msg.into() };
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let one = |args: Option<&str>| -> Result<u32> {
            args.and_then(|a| a.parse().ok())
                .ok_or_else(|| parse_err("expected one integer parameter"))
        };
        let family = match name {
            "su" => {
                let (p, q) = args
                    .and_then(|a| a.split_once(','))
                    .and_then(|(p, q)| Some((p.parse().ok()?, q.parse().ok()?)))
                    .ok_or_else(|| parse_err("expected su:<p>,<q>"))?;
                Family::Su { p, q }
            }
            "sp" => Family::Sp { n: one(args)? },
            "sostar" => Family::SoStar { two_n: one(args)? },
            "so2" => Family::So2 { n: one(args)? },
            "eiii" if args.is_none() => Family::Eiii,
            "evii" if args.is_none() => Family::Evii,
            _ => {
                return Err(parse_err(&format!("unknown case literal {s:?}")))
            }
        };
        HermitianCase::new(family)
    }
}

/// A representative selection of valid cases, covering every family and
/// both tube and non-tube variants.
pub fn case_registry() -> Vec<HermitianCase> {
    [
        "su:2,2", "su:3,3", "su:2,3", "su:3,5", "sp:2", "sp:3", "sp:4",
        "sostar:8", "sostar:10", "sostar:12", "so2:3", "so2:4", "so2:5",
        "so2:6", "so2:8", "eiii", "evii",
    ]
    .iter()
    .map(|s| s.parse().expect("registry literals are valid"))
    .collect()
}

/// Verdict of [`decide_product_support`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportVerdict {
    InSupport,
    NotInSupport,
}

/// Evidence bundle for one product-support decision.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportDecision {
    pub verdict: SupportVerdict,
    /// The symbolic Jack structure constant `f^ν_{λμ}(α)`.
    pub f: AlphaRat,
    /// The evaluation point `α = 2/m` of the case.
    pub alpha: BigRat,
    /// `f^ν_{λμ}(2/m)`; the verdict is `InSupport` iff this is nonzero.
    pub value: BigRat,
    /// The Littlewood-Richardson coefficient `c^ν_{λμ}`, the conjectural
    /// predictor of the same verdict.
    pub lr: u64,
}

/// Decide whether `S_ν ⊆ S_λ · S_μ` in `ℂ[p⁺]` for the given case.
///
/// Ground truth is Ruitenburg's criterion `f^ν_{λμ}(2/m) ≠ 0`; the returned
/// evidence also carries `c^ν_{λμ}`, whose nonvanishing is the
/// conjecturally equivalent combinatorial test, so callers can audit
/// agreement rather than assume it.  Triples with `|ν| ≠ |λ| + |μ|` are
/// `NotInSupport` outright (the product is graded).
pub fn decide_product_support(
    jack: &JackBasis,
    case: &HermitianCase,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<SupportDecision> {
    case.check_rank(&[lam, mu, nu])?;
    let alpha = case.alpha();
    let lr = lr_coeff(lam, mu, nu);
    let f = if nu.size() == lam.size() + mu.size() {
        let nvars = nu.size().max(1);
        structure_constants(jack, lam, mu, nvars)?.coeff(nu)
    } else {
        AlphaRat::zero()
    };
    let value = f.evaluate(&alpha)?;
    let verdict = if value.is_zero() {
        SupportVerdict::NotInSupport
    } else {
        SupportVerdict::InSupport
    };
    Ok(SupportDecision { verdict, f, alpha, value, lr })
}

/// Which closed formula produced a tensor multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorFormula {
    /// `su:p,q` — `(c^ν_{λμ})²`.
    LrSquared,
    /// `sp:n` — `c^{2ν}_{2λ,2μ}` (all parts doubled).
    LrDoubled,
    /// `sostar:2n` — `c^{2ν'}_{2λ',2μ'}` (conjugates doubled).
    LrDoubledConjugate,
    /// `so2:n` — the rank-two branching sum below.
    RankTwoBranching,
    /// `eiii` — conjecturally `c^ν_{λμ}`.
    LrConjectural,
    /// `evii` — conjecturally `c^ν_{λμ}(c^ν_{λμ}+1)/2`.
    LrPairsConjectural,
}

/// Result of [`tensor_multiplicity`]: the value, the formula that produced
/// it, and whether that formula is conjectural (the exceptional cases).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub value: u64,
    pub formula: TensorFormula,
    pub conjectural: bool,
}

/// Multiplicity of `E_{cε₁}` in `E_{aε₁} ⊗ E_{bε₁}` for `so_n`, `n ≥ 4`,
/// in the stable range: the tensor product decomposes as
/// `⊕_{k=0}^{b} ⊕_{l=0}^{b−k} E_{(a+b−2k−l)ε₁ + lε₂}` for `a ≥ b`
/// (Howe-Tan-Willenbring stable branching plus the Pieri rule).
fn so_branching_multiplicity(a: usize, b: usize, c: usize) -> u64 {
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    let mut mult = 0;
    for k in 0..=b {
        for l in 0..=(b - k) {
            if a + b - 2 * k - l == c && l == 0 {
                mult += 1;
            }
        }
    }
    mult
}

/// The tensor-product multiplicity `[V_λ ⊗ V_μ : V_ν]` of the irreducible
/// `K`-modules attached to the case.
///
/// Classical families use exact Littlewood-Richardson formulas (see
/// [`TensorFormula`]); `so2:n` uses the branching decomposition, valid for
/// `n ≥ 4` — `so2:3` is rejected since `so(3,2) ≅ sp(2,ℝ)` makes `sp:2`
/// the canonical form.  The exceptional cases return conjectural values.
pub fn tensor_multiplicity(
    case: &HermitianCase,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<MultiplicityResult> {
    case.check_rank(&[lam, mu, nu])?;
    let graded = nu.size() == lam.size() + mu.size();
    let (value, formula, conjectural) = match case.family {
        Family::Su { .. } => {
            let c = lr_coeff(lam, mu, nu);
            (c * c, TensorFormula::LrSquared, false)
        }
        Family::Sp { .. } => (
            lr_coeff(&lam.scaled(2), &mu.scaled(2), &nu.scaled(2)),
            TensorFormula::LrDoubled,
            false,
        ),
        Family::SoStar { .. } => (
            lr_coeff(
                &lam.conjugate().scaled(2),
                &mu.conjugate().scaled(2),
                &nu.conjugate().scaled(2),
            ),
            TensorFormula::LrDoubledConjugate,
            false,
        ),
        Family::So2 { n } => {
            if n == 3 {
                return Err(Error::IsomorphicCase);
            }
            let value = if graded {
                so_branching_multiplicity(
                    lam.part(1) - lam.part(2),
                    mu.part(1) - mu.part(2),
                    nu.part(1) - nu.part(2),
                )
            } else {
                0
            };
            (value, TensorFormula::RankTwoBranching, false)
        }
        Family::Eiii => {
            (lr_coeff(lam, mu, nu), TensorFormula::LrConjectural, true)
        }
        Family::Evii => {
            let c = lr_coeff(lam, mu, nu);
            (c * (c + 1) / 2, TensorFormula::LrPairsConjectural, true)
        }
    };
    Ok(MultiplicityResult { value, formula, conjectural })
}

/// Check that the tensor multiplicity is nonzero exactly when `c^ν_{λμ}`
/// is, for a graded triple in a classical case.
///
/// For `su` this is immediate, for `so2` it is the branching computation,
/// and for `sp`/`sostar` it amounts to the saturation theorem for doubled
/// partitions — so a `false` return indicates a bug, not new mathematics.
/// The conjectural exceptional cases are refused.
pub fn check_tensor_vs_lr(
    case: &HermitianCase,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<bool> {
    if nu.size() != lam.size() + mu.size() {
        return Err(Error::SizeMismatch {
            nu: nu.size(),
            total: lam.size() + mu.size(),
        });
    }
    if matches!(case.family, Family::Eiii | Family::Evii) {
        return Err(Error::ConjecturalCase(case.to_string()));
    }
    let tensor = tensor_multiplicity(case, lam, mu, nu)?;
    let lr = lr_coeff(lam, mu, nu);
    Ok((tensor.value != 0) == (lr != 0))
}
