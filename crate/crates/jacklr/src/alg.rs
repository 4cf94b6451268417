//! The coefficient rings: exact rationals `ℚ`, dense polynomials `ℚ[α]`,
//! and reduced rational functions `ℚ(α)`.
//!
//! The deformation parameter is written `a` in all text forms.  A rational
//! function is kept in a canonical shape — numerator and denominator coprime,
//! denominator a primitive integer polynomial with positive leading
//! coefficient, zero represented as `0 / 1` — so that structural equality is
//! mathematical equality and printed output round-trips through the parsers.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type BigRat = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> BigRat {
    BigRat::from(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Polynomials in a
// ---------------------------------------------------------------------------

/// A dense polynomial in `a` with rational coefficients.
///
/// `coeffs[k]` multiplies `a^k`; the vector never ends in a zero, and the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaPoly {
    coeffs: Vec<BigRat>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(BigRat::one())
    }

    /// The variable `a` itself.
    pub fn alpha() -> Self {
        AlphaPoly::monomial(BigRat::one(), 1)
    }

    pub fn constant(c: BigRat) -> Self {
        AlphaPoly::from_coeffs(vec![c])
    }

    /// `c · a^deg`.
    pub fn monomial(c: BigRat, deg: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        AlphaPoly::from_coeffs(coeffs)
    }

    /// Build from `coeffs[k] · a^k`, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `a^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Evaluate at a rational point by Horner's rule.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> AlphaPoly {
        if c.is_zero() {
            return AlphaPoly::zero();
        }
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder of division by `d` (which must be nonzero).
    pub fn divmod(&self, d: &AlphaPoly) -> (AlphaPoly, AlphaPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] * &lead_inv;
            if !q.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    let t = &q * c;
                    rem[k + i] = &rem[k + i] - t;
                }
                quot[k] = q;
            }
            rem.pop();
        }
        (AlphaPoly::from_coeffs(quot), AlphaPoly::from_coeffs(rem))
    }

    /// Scale to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> AlphaPoly {
        if self.is_zero() {
            return AlphaPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Write `self = c · q` with `q` a primitive integer polynomial with
    /// positive leading coefficient.  Returns `(q, c)`; for zero, `(0, 1)`.
    pub fn primitive_integer_form(&self) -> (AlphaPoly, BigRat) {
        if self.is_zero() {
            return (AlphaPoly::zero(), BigRat::one());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let c = BigRat::new(g.clone(), lcm);
        let q = AlphaPoly::from_coeffs(
            ints.iter().map(|v| BigRat::from(v / &g)).collect(),
        );
        (q, c)
    }
}

/// Monic greatest common divisor in `ℚ[a]` by the Euclidean algorithm.
pub fn poly_gcd(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        // The gcd is insensitive to scalar factors, so renormalizing the
        // divisor each round keeps the remainder coefficients from the
        // explosive growth of the plain rational Euclidean algorithm.
        b = b.primitive_integer_form().0;
        let r = a.divmod(&b).1;
        a = b;
        b = r;
    }
    a.monic()
}

/// True iff every coefficient is a nonnegative integer.
pub fn has_nonneg_int_coeffs(p: &AlphaPoly) -> bool {
    p.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut coeffs =
            vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in rhs.coeffs.iter().enumerate() {
                if !cj.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + ci * cj;
                }
            }
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops_poly {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for AlphaPoly {
            type Output = AlphaPoly;
            fn $f(self, rhs: AlphaPoly) -> AlphaPoly { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops_poly!(Add::add, Sub::sub, Mul::mul);

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

impl fmt::Display for AlphaPoly {
    /// Descending powers, e.g. `2*a^2 + a - 1/2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for AlphaPoly {
    type Err = Error;

    /// Parses the `Display` form: terms like `2*a^2`, `1/2*a`, `a^3`, `7`,
    /// joined by `+`/`-`.
    fn from_str(s: &str) -> Result<AlphaPoly> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
        }
        let mut acc = AlphaPoly::zero();
        let chars: Vec<char> = t.chars().collect();
        let mut i = 0usize;
        let mut sign = 1i64;
        if chars[0] == '-' {
            sign = -1;
            i = 1;
        } else if chars[0] == '+' {
            i = 1;
        }
        let mut start = i;
        loop {
            if i == chars.len() || chars[i] == '+' || chars[i] == '-' {
                let term: String = chars[start..i].iter().collect();
                let parsed = parse_term(term.trim(), start)?;
                acc = &acc + &parsed.scale(&int(sign));
                if i == chars.len() {
                    break;
                }
                sign = if chars[i] == '-' { -1 } else { 1 };
                i += 1;
                start = i;
            } else {
                i += 1;
            }
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, pos: usize) -> Result<AlphaPoly> {
    let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse { pos, msg: "empty term".into() });
    }
    let (coef_str, var_str) = match t.split_once('*') {
        Some((c, v)) => (Some(c), Some(v)),
        None => {
            if t.starts_with('a') {
                (None, Some(t.as_str()))
            } else {
                (Some(t.as_str()), None)
            }
        }
    };
    let coef = match coef_str {
        None => BigRat::one(),
        Some(c) => BigRat::from_str(c).map_err(|_| Error::Parse {
            pos,
            msg: format!("bad coefficient {c:?}"),
        })?,
    };
    let deg = match var_str {
        None => 0,
        Some("a") => 1,
        Some(v) => {
            let exp = v.strip_prefix("a^").ok_or_else(|| Error::Parse {
                pos,
                msg: format!("bad variable part {v:?}"),
            })?;
            exp.parse::<usize>().map_err(|_| Error::Parse {
                pos,
                msg: format!("bad exponent {exp:?}"),
            })?
        }
    };
    Ok(AlphaPoly::monomial(coef, deg))
}

// ---------------------------------------------------------------------------
// Rational functions in a
// ---------------------------------------------------------------------------

/// A reduced rational function in `a`.
///
/// Canonical form: `gcd(num, den) = 1`, `den` a primitive integer polynomial
/// with positive leading coefficient (so polynomials have `den = 1`), and
/// zero is `0 / 1`.  Equality of values is structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaRat {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaRat {
    pub fn zero() -> Self {
        AlphaRat { num: AlphaPoly::zero(), den: AlphaPoly::one() }
    }

    pub fn one() -> Self {
        AlphaRat::from_poly(AlphaPoly::one())
    }

    /// The variable `a`.
    pub fn alpha() -> Self {
        AlphaRat::from_poly(AlphaPoly::alpha())
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        AlphaRat { num: p, den: AlphaPoly::one() }
    }

    pub fn from_rat(r: &BigRat) -> Self {
        AlphaRat::from_poly(AlphaPoly::constant(r.clone()))
    }

    pub fn from_int(n: i64) -> Self {
        AlphaRat::from_rat(&int(n))
    }

    /// `num / den`, reduced to canonical form.  Errors if `den = 0`.
    pub fn ratio(num: AlphaPoly, den: AlphaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: AlphaPoly, den: AlphaPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return AlphaRat::zero();
        }
        let g = poly_gcd(&num, &den);
        let num = num.divmod(&g).0;
        let den = den.divmod(&g).0;
        let (den_prim, c) = den.primitive_integer_form();
        let num = num.scale(&c.recip());
        AlphaRat { num, den: den_prim }
    }

    pub fn num(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn den(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial content, if the denominator reduced to 1.
    pub fn try_as_polynomial(&self) -> Option<AlphaPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Evaluate at `a = x`; errors with a pole when `den(x) = 0`.
    pub fn evaluate(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn recip(&self) -> Result<AlphaRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &AlphaRat) -> Result<AlphaRat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: usize) -> AlphaRat {
        let mut acc = AlphaRat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_rat(&self, c: &BigRat) -> AlphaRat {
        AlphaRat::reduce(self.num.scale(c), self.den.clone())
    }
}

impl Add for &AlphaRat {
    type Output = AlphaRat;
    fn add(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &AlphaRat {
    type Output = AlphaRat;
    fn sub(self, rhs: &AlphaRat) -> AlphaRat {
        self + &(-rhs)
    }
}

impl Mul for &AlphaRat {
    type Output = AlphaRat;
    fn mul(self, rhs: &AlphaRat) -> AlphaRat {
        AlphaRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &AlphaRat {
    type Output = AlphaRat;
    /// Panics on division by zero; use `checked_div` on untrusted input.
    fn div(self, rhs: &AlphaRat) -> AlphaRat {
        self.checked_div(rhs).expect("division by zero in Q(a)")
    }
}

impl Neg for &AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        AlphaRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops_rat {
    ($($t:ident :: $f:ident),*) => {$(
        impl $t for AlphaRat {
            type Output = AlphaRat;
            fn $f(self, rhs: AlphaRat) -> AlphaRat { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops_rat!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for AlphaRat {
    type Output = AlphaRat;
    fn neg(self) -> AlphaRat {
        -&self
    }
}

impl fmt::Display for AlphaRat {
    /// `num / den`, or just `num` when the value is a polynomial.  A side
    /// with more than one term is parenthesized, e.g. `2*a / (a + 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &AlphaPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}

impl FromStr for AlphaRat {
    type Err = Error;

    /// Parses the `Display` form: either a polynomial or `num / den` with
    /// the slash at parenthesis depth zero and spaces around it.
    fn from_str(s: &str) -> Result<AlphaRat> {
        let t = s.trim();
        let mut depth = 0i32;
        let chars: Vec<char> = t.chars().collect();
        let mut split = None;
        for (i, &c) in chars.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    // a slash inside a rational coefficient like 1/2 has a
                    // digit on both sides; the separator is spaced
                    let spaced = i > 0
                        && chars[i - 1] == ' '
                        && i + 1 < chars.len()
                        && chars[i + 1] == ' ';
                    if spaced {
                        split = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        match split {
            None => Ok(AlphaRat::from_poly(strip_parens(t).parse()?)),
            Some(i) => {
                let num: AlphaPoly = strip_parens(t[..i].trim()).parse()?;
                let den: AlphaPoly =
                    strip_parens(t[i + 1..].trim()).parse()?;
                AlphaRat::ratio(num, den)
            }
        }
    }
}

/// Remove one pair of enclosing parentheses if they match each other.
fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return t; // the outer parens do not match
                    }
                }
                _ => {}
            }
        }
        return inner.trim();
    }
    t
}
