//! Symmetric polynomials in a fixed number of variables.
//!
//! A [`SymPoly`] is a finite sum `Σ_λ c_λ b_λ` where `b` is one of the
//! classical bases tagged by [`Basis`]: monomial `m_λ`, power sum `p_λ`,
//! Schur `s_λ`, or the monic Jack basis `P_λ` (the last with coefficients in
//! `ℚ(α)`).  Coefficients live in any ring implementing [`Coeff`]; the two
//! instances used in the crate are exact rationals and rational functions
//! in `α`.
//!
//! With `n` variables the monomial symmetric polynomials `m_λ`, `ℓ(λ) ≤ n`,
//! form a basis, and restriction to `n` variables kills exactly the `m_λ`
//! with `ℓ(λ) > n`.  Conversion from monomials to power sums is only
//! faithful when `n` is at least the degree, because the `p_λ` with
//! `|λ| = d > n` become linearly dependent below that; [`mono_to_power`]
//! refuses to run outside the faithful range rather than return an answer
//! that depends on `n`.
//!
//! The deformed Hall inner product is defined on power sums by
//! `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{ℓ(λ)}` and extended bilinearly; at `α = 1`
//! it is the classical Hall product in which the Schur functions are
//! orthonormal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::alg::{int, AlphaPoly, AlphaRat, BigRat};
use crate::error::{Error, Result};
use crate::partition::{horizontal_strip_predecessors, partitions_of_bounded, Partition};

/// Which family of symmetric polynomials the keys of a [`SymPoly`] index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Monomial symmetric polynomials `m_λ`.
    Monomial,
    /// Power sums `p_λ = p_{λ_1} ⋯ p_{λ_ℓ}`.
    PowerSum,
    /// Schur polynomials `s_λ`.
    Schur,
    /// Monic Jack polynomials `P_λ(x; α)`; the parameter lives in the
    /// coefficient ring, not in the tag.
    Jack,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Schur => "s",
            Basis::Jack => "P",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Coefficient ring contract: a commutative ring containing `ℚ`.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &BigRat) -> Self;
}

impl Coeff for BigRat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
}

impl Coeff for AlphaRat {
    fn zero() -> Self {
        AlphaRat::zero()
    }
    fn one() -> Self {
        AlphaRat::one()
    }
    fn is_zero(&self) -> bool {
        AlphaRat::is_zero(self)
    }
    fn from_rat(r: &BigRat) -> Self {
        AlphaRat::from_rat(r)
    }
}

/// A symmetric polynomial: basis tag, variable count, and sparse terms.
///
/// Zero coefficients are never stored.  For the monomial, Schur, and Jack
/// bases every key satisfies `ℓ(λ) ≤ nvars`; power-sum keys are
/// unconstrained.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly<C> {
    basis: Basis,
    nvars: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymPoly<C> {
    pub fn zero(basis: Basis, nvars: usize) -> Self {
        SymPoly { basis, nvars, terms: BTreeMap::new() }
    }

    /// The constant `c` (key: empty partition).
    pub fn constant(basis: Basis, nvars: usize, c: C) -> Self {
        let mut s = Self::zero(basis, nvars);
        s.add_term(Partition::empty(), c);
        s
    }

    /// The single basis element `b_λ` with coefficient one.
    pub fn unit(basis: Basis, lam: Partition, nvars: usize) -> Result<Self> {
        if basis != Basis::PowerSum && lam.len() > nvars {
            return Err(Error::LengthExceedsVars {
                partition: lam.to_string(),
                len: lam.len(),
                nvars,
            });
        }
        let mut s = Self::zero(basis, nvars);
        s.add_term(lam, C::one());
        Ok(s)
    }

    /// `m_λ` in `nvars` variables.
    pub fn monomial(lam: Partition, nvars: usize) -> Result<Self> {
        Self::unit(Basis::Monomial, lam, nvars)
    }

    /// `p_λ` in `nvars` variables.
    pub fn power(lam: Partition, nvars: usize) -> Result<Self> {
        Self::unit(Basis::PowerSum, lam, nvars)
    }

    pub fn from_terms<I>(basis: Basis, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut s = Self::zero(basis, nvars);
        for (lam, c) in terms {
            if basis != Basis::PowerSum && lam.len() > nvars {
                return Err(Error::LengthExceedsVars {
                    partition: lam.to_string(),
                    len: lam.len(),
                    nvars,
                });
            }
            s.add_term(lam, c);
        }
        Ok(s)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `|λ|` over stored keys (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|k| k.size()).max().unwrap_or(0)
    }

    /// The coefficient of `b_λ` (zero if absent).
    pub fn coeff(&self, lam: &Partition) -> C {
        self.terms.get(lam).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    /// Keys largest-first (the display and serialization order).
    pub fn keys_desc(&self) -> Vec<&Partition> {
        self.terms.keys().rev().collect()
    }

    /// Add `c` to the coefficient of `λ`, dropping it if the sum is zero.
    pub fn add_term(&mut self, lam: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&lam) {
            None => {
                self.terms.insert(lam, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(lam, s);
                }
            }
        }
    }

    /// `self += c · other` (same basis and variable count; panics otherwise).
    pub fn add_scaled(&mut self, other: &SymPoly<C>, c: &C) {
        assert_eq!(self.basis, other.basis, "basis mismatch in add_scaled");
        assert_eq!(self.nvars, other.nvars, "nvars mismatch in add_scaled");
        for (lam, oc) in &other.terms {
            self.add_term(lam.clone(), c.clone() * oc.clone());
        }
    }

    pub fn scaled(&self, c: &C) -> SymPoly<C> {
        let mut out = SymPoly::zero(self.basis, self.nvars);
        out.add_scaled(self, c);
        out
    }

    /// Map coefficients into another ring, dropping zeros.
    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> SymPoly<D> {
        let mut out = SymPoly::zero(self.basis, self.nvars);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), f(c));
        }
        out
    }

    /// Drop every key with more than `max_len` parts.
    pub fn truncate_len(&self, max_len: usize) -> SymPoly<C> {
        let mut out = SymPoly::zero(self.basis, self.nvars.min(max_len));
        for (lam, c) in &self.terms {
            if lam.len() <= max_len {
                out.add_term(lam.clone(), c.clone());
            }
        }
        out
    }

    fn keys_by_degree(&self) -> BTreeMap<usize, Vec<Partition>> {
        let mut m: BTreeMap<usize, Vec<Partition>> = BTreeMap::new();
        for lam in self.terms.keys() {
            m.entry(lam.size()).or_default().push(lam.clone());
        }
        m
    }
}

impl<C: Coeff> Add for &SymPoly<C> {
    type Output = SymPoly<C>;
    fn add(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coeff> Sub for &SymPoly<C> {
    type Output = SymPoly<C>;
    fn sub(self, rhs: &SymPoly<C>) -> SymPoly<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &(-C::one()));
        out
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for SymPoly<C> {
    /// Largest key first, e.g. `m[2] + (2 / (a + 1))*m[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        let mut first = true;
        for (lam, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let key = format!("{letter}[{lam}]");
            if cs == "1" {
                write!(f, "{key}")?;
            } else if cs.contains(' ') || cs.contains('/') {
                write!(f, "({cs})*{key}")?;
            } else {
                write!(f, "{cs}*{key}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Multiset permutations
// ---------------------------------------------------------------------------

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct rearrangements of `v`.
fn distinct_permutations(mut v: Vec<usize>) -> Vec<Vec<usize>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

fn check_pair<A, B>(f: &SymPoly<A>, g: &SymPoly<B>, basis: Basis) -> Result<()>
where
    A: Coeff,
    B: Coeff,
{
    if f.basis != basis || g.basis != basis {
        return Err(Error::BasisMismatch(f.basis.to_string(), g.basis.to_string()));
    }
    if f.nvars != g.nvars {
        return Err(Error::NvarsMismatch(f.nvars, g.nvars));
    }
    Ok(())
}

/// Product of two monomial-basis symmetric polynomials.
///
/// The coefficient of `m_ν` in `m_λ m_μ` is the number of ways to write the
/// sorted exponent vector of `ν` as `a + b` with `a` a rearrangement of `λ`
/// and `b` one of `μ` (padded to `nvars` entries); only the splitting of the
/// distinguished monomial `x^ν` needs to be counted because the product is
/// symmetric.
pub fn mono_product<C: Coeff>(f: &SymPoly<C>, g: &SymPoly<C>) -> Result<SymPoly<C>> {
    check_pair(f, g, Basis::Monomial)?;
    let n = f.nvars;
    let mut out = SymPoly::zero(Basis::Monomial, n);
    let fdeg = f.keys_by_degree();
    let gdeg = g.keys_by_degree();
    for (df, fkeys) in &fdeg {
        for (dg, _) in &gdeg {
            let targets = partitions_of_bounded(df + dg, n);
            let tpads: Vec<Vec<usize>> =
                targets.iter().map(|nu| nu.padded(n)).collect();
            for kf in fkeys {
                let cf = f.coeff(kf);
                let perms = distinct_permutations(kf.padded(n));
                for (nu, nupad) in targets.iter().zip(&tpads) {
                    let mut counts: HashMap<Partition, u64> = HashMap::new();
                    'perm: for a in &perms {
                        let mut b: Vec<usize> = Vec::with_capacity(n);
                        for (x, y) in nupad.iter().zip(a) {
                            if x < y {
                                continue 'perm;
                            }
                            b.push(x - y);
                        }
                        b.sort_unstable_by(|x, y| y.cmp(x));
                        let kg = Partition::new(b);
                        if kg.size() == *dg && g.terms.contains_key(&kg) {
                            *counts.entry(kg).or_insert(0) += 1;
                        }
                    }
                    let mut acc = C::zero();
                    for (kg, cnt) in counts {
                        let cg = g.coeff(&kg);
                        acc = acc + cg * C::from_rat(&int(cnt as i64));
                    }
                    if !acc.is_zero() {
                        out.add_term(nu.clone(), cf.clone() * acc);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Multiply a monomial-basis polynomial by the power sum `p_k`.
///
/// Specialization of [`mono_product`] with `g = m_{(k)}`: the coefficient of
/// `m_ν` in `f · p_k` is `Σ_i f_{sort(ν - k e_i)}` over the `nvars`
/// coordinate positions.
fn mono_times_prow<C: Coeff>(f: &SymPoly<C>, k: usize) -> SymPoly<C> {
    assert_eq!(f.basis, Basis::Monomial);
    assert!(k >= 1);
    let n = f.nvars;
    let mut out = SymPoly::zero(Basis::Monomial, n);
    for (d, _) in f.keys_by_degree() {
        for nu in partitions_of_bounded(d + k, n) {
            let nupad = nu.padded(n);
            let mut acc = C::zero();
            for i in 0..n {
                if nupad[i] < k {
                    continue;
                }
                let mut w = nupad.clone();
                w[i] -= k;
                w.sort_unstable_by(|x, y| y.cmp(x));
                let kappa = Partition::new(w);
                if kappa.size() == d {
                    let c = f.coeff(&kappa);
                    if !c.is_zero() {
                        acc = acc + c;
                    }
                }
            }
            out.add_term(nu, acc);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Basis conversions
// ---------------------------------------------------------------------------

/// Transition data between the monomial and power-sum bases in degree `d`
/// with `nvars` variables, memoized process-wide.  All entries are rational
/// and independent of the coefficient ring in use.
struct Transitions {
    /// `p_κ = Σ_μ R_{κμ} m_μ` for each `κ ⊢ d`.
    p_in_m: BTreeMap<Partition, SymPoly<BigRat>>,
    /// `m_λ = Σ_κ X_{λκ} p_κ`; only present when `nvars ≥ d`.
    m_in_p: BTreeMap<Partition, Vec<(Partition, BigRat)>>,
}

fn transitions(d: usize, nvars: usize) -> Arc<Transitions> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Transitions>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(d, nvars)) {
        return Arc::clone(t);
    }
    let t = Arc::new(build_transitions(d, nvars));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry((d, nvars)).or_insert(t))
}

fn build_transitions(d: usize, nvars: usize) -> Transitions {
    // ascending order = dominated partitions first; that makes both solves
    // below triangular with nonzero pivots
    let mut parts = partitions_of_bounded(d, d);
    parts.reverse();

    let mut p_in_m = BTreeMap::new();
    for kappa in &parts {
        let mut acc: SymPoly<BigRat> =
            SymPoly::constant(Basis::Monomial, nvars, num::One::one());
        for &k in kappa.parts() {
            acc = mono_times_prow(&acc, k);
        }
        p_in_m.insert(kappa.clone(), acc);
    }

    let mut m_in_p = BTreeMap::new();
    if nvars >= d {
        // [m_κ] p_ρ ≠ 0 forces κ ⊵ ρ, so solving for m_λ = Σ x_κ p_κ row by
        // row in ascending order only ever uses already-known unknowns.
        for lam in &parts {
            if lam.len() > nvars {
                continue;
            }
            let mut x: Vec<(Partition, BigRat)> = Vec::new();
            for kappa in &parts {
                let mut rhs: BigRat = if lam == kappa {
                    num::One::one()
                } else {
                    num::Zero::zero()
                };
                for (rho, xr) in &x {
                    let r = p_in_m[rho].coeff(kappa);
                    if !num::Zero::is_zero(&r) {
                        rhs -= xr * r;
                    }
                }
                let pivot = p_in_m[kappa].coeff(kappa);
                assert!(!num::Zero::is_zero(&pivot));
                let val = rhs / pivot;
                if !num::Zero::is_zero(&val) {
                    x.push((kappa.clone(), val));
                }
            }
            m_in_p.insert(lam.clone(), x);
        }
    }

    Transitions { p_in_m, m_in_p }
}

/// Expand a power-sum-basis polynomial in the monomial basis.  Total on its
/// inputs; keys longer than `nvars` in the result are truncated away, which
/// is exactly the restriction to `nvars` variables.
pub fn power_to_mono<C: Coeff>(f: &SymPoly<C>) -> Result<SymPoly<C>> {
    if f.basis != Basis::PowerSum {
        return Err(Error::BasisMismatch(
            f.basis.to_string(),
            Basis::PowerSum.to_string(),
        ));
    }
    let mut out = SymPoly::zero(Basis::Monomial, f.nvars);
    for (kappa, c) in &f.terms {
        let t = transitions(kappa.size(), f.nvars);
        for (mu, r) in t.p_in_m[kappa].terms() {
            out.add_term(mu.clone(), c.clone() * C::from_rat(r));
        }
    }
    Ok(out)
}

/// Expand a monomial-basis polynomial in power sums.  Requires
/// `nvars ≥ degree`, the faithful range in which the answer agrees with the
/// change of basis for symmetric functions in infinitely many variables.
pub fn mono_to_power<C: Coeff>(f: &SymPoly<C>) -> Result<SymPoly<C>> {
    if f.basis != Basis::Monomial {
        return Err(Error::BasisMismatch(
            f.basis.to_string(),
            Basis::Monomial.to_string(),
        ));
    }
    let d = f.degree();
    if f.nvars < d {
        return Err(Error::UnstableTruncation { degree: d, nvars: f.nvars });
    }
    let mut out = SymPoly::zero(Basis::PowerSum, f.nvars);
    for (lam, c) in &f.terms {
        let t = transitions(lam.size(), f.nvars);
        for (kappa, x) in &t.m_in_p[lam] {
            out.add_term(kappa.clone(), c.clone() * C::from_rat(x));
        }
    }
    Ok(out)
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content
/// `μ`, counted by peeling horizontal strips off `λ`, one entry at a time.
pub fn kostka(lam: &Partition, mu: &Partition) -> u64 {
    if lam.size() != mu.size() {
        return 0;
    }
    fn rec(shape: &Partition, content: &[usize]) -> u64 {
        match content.last() {
            None => 1, // both empty by the size bookkeeping
            Some(&k) => horizontal_strip_predecessors(shape, k)
                .iter()
                .map(|kappa| rec(kappa, &content[..content.len() - 1]))
                .sum(),
        }
    }
    rec(lam, mu.parts())
}

/// Expand the Schur polynomial `s_λ` in the monomial basis:
/// `s_λ = Σ_μ K_{λμ} m_μ`, kept to `ℓ(μ) ≤ nvars`.
pub fn schur_to_mono(lam: &Partition, nvars: usize) -> Result<SymPoly<BigRat>> {
    if lam.len() > nvars {
        return Err(Error::LengthExceedsVars {
            partition: lam.to_string(),
            len: lam.len(),
            nvars,
        });
    }
    let mut out = SymPoly::zero(Basis::Monomial, nvars);
    for mu in partitions_of_bounded(lam.size(), nvars) {
        let k = kostka(lam, &mu);
        if k > 0 {
            out.add_term(mu, int(k as i64));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The deformed Hall inner product
// ---------------------------------------------------------------------------

/// `⟨f, g⟩_α` via `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ α^{ℓ(λ)}`.
///
/// Accepts monomial- or power-sum-basis input; monomial input is converted
/// first, so the inner product requires `nvars ≥ degree` in that case.
pub fn power_inner(f: &SymPoly<AlphaRat>, g: &SymPoly<AlphaRat>) -> Result<AlphaRat> {
    let fp = to_power(f)?;
    let gp = to_power(g)?;
    if fp.nvars != gp.nvars {
        return Err(Error::NvarsMismatch(fp.nvars, gp.nvars));
    }
    let mut acc = AlphaRat::zero();
    for (lam, cf) in fp.terms() {
        let cg = gp.coeff(lam);
        if cg.is_zero() {
            continue;
        }
        let weight = AlphaRat::from_poly(AlphaPoly::monomial(
            int(lam.zee() as i64),
            lam.len(),
        ));
        acc = &acc + &(&(cf.clone() * cg) * &weight);
    }
    Ok(acc)
}

fn to_power(f: &SymPoly<AlphaRat>) -> Result<SymPoly<AlphaRat>> {
    match f.basis {
        Basis::PowerSum => Ok(f.clone()),
        Basis::Monomial => mono_to_power(f),
        other => Err(Error::BasisMismatch(
            other.to_string(),
            "Monomial or PowerSum".to_string(),
        )),
    }
}
