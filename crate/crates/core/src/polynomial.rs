//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored degree-ascending (`coeffs[i]` is the coefficient
//! of `x^i`) and kept canonical: the highest stored coefficient is nonzero,
//! and the zero polynomial is the empty vector. Every operation returns a
//! canonical value, so equality is plain coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A univariate polynomial with `BigInt` coefficients, degree-ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

/// Exact division failed: the divisor does not divide the dividend over the
/// integers. For identity checking this signals a falsified quotient form
/// rather than a numerical problem.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("polynomial division left a nonzero remainder")]
pub struct NotDivisible;

/// Parse failure for the polynomial text grammar, with a byte position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character '{ch}' at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("exponent at position {pos} is too large")]
    ExponentTooLarge { pos: usize },
    #[error("empty input")]
    Empty,
}

impl Polynomial {
    /// Builds a polynomial from degree-ascending coefficients, trimming
    /// trailing zeros so the result is canonical.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::new(vec![c.into()])
    }

    /// `c * x^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine integers, degree-ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Degree-ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `None` is the degree of the zero polynomial, below every integer.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `self^k` by repeated squaring; `pow(0, 0) = 1` (empty product).
    pub fn pow(&self, k: u64) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Long division from the top; any inexact leading-coefficient division
    /// or nonzero final remainder yields [`NotDivisible`]. When it succeeds,
    /// `q * divisor == self` exactly.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, NotDivisible> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let da = self.coeffs.len() - 1;
        let db = divisor.coeffs.len() - 1;
        if da < db {
            return Err(NotDivisible);
        }
        let lead = divisor.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = std::mem::replace(&mut rem[k + db], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(NotDivisible);
            }
            let q = &top / lead;
            for (i, d) in divisor.coeffs.iter().take(db).enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(NotDivisible);
        }
        Ok(Polynomial::new(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Parses the polynomial text grammar.
    ///
    /// Accepted input: signed integer terms, `3*x^2`, juxtaposed `3x^2`,
    /// bare `x` / `x^k`, joined by `+` / `-`, whitespace ignored. The
    /// variable is always `x`.
    pub fn parse(text: &str) -> Result<Polynomial, ParseError> {
        Parser::new(text).parse()
    }

    /// Canonical text: degree-descending, spaced `+`/`-`, coefficient 1
    /// omitted except on the constant term, `x^1` printed as `x`.
    pub fn to_text(&self) -> String {
        self.format_with('x')
    }

    /// Canonical text with a caller-chosen variable letter (table output
    /// prints the generating polynomial's variable as `h`).
    pub fn format_with(&self, letter: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for pow in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[pow];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if pow == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push(letter);
                if pow > 1 {
                    out.push('^');
                    out.push_str(&pow.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_text())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len().max(rhs.coeffs.len()), BigInt::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Exact binomial coefficient with the extended zero convention:
/// `binomial(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

// JSON form: {"coeffs": ["c0", "c1", ...]} with decimal-string integers,
// so round-trips are bit-exact regardless of magnitude.

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| BigInt::from_str(s).map_err(|_| D::Error::custom(format!("bad integer: {s}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                Some(ch) => {
                    return Err(ParseError::UnexpectedChar {
                        ch: ch as char,
                        pos: self.pos,
                    })
                }
            }
        }
    }

    /// One signed term: `int`, `int [*] x [^k]`, or `[-] x [^k]`.
    fn term(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        }
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let exp = self.exponent()?;
                let c = if negative { -1 } else { 1 };
                Ok(Polynomial::monomial(c, exp))
            }
            Some(d) if d.is_ascii_digit() => {
                let mut coeff = self.integer()?;
                if negative {
                    coeff = -coeff;
                }
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    match self.peek() {
                        Some(b'x') => {}
                        Some(ch) => {
                            return Err(ParseError::UnexpectedChar {
                                ch: ch as char,
                                pos: self.pos,
                            })
                        }
                        None => return Err(ParseError::UnexpectedEnd { pos: self.pos }),
                    }
                }
                if self.peek() == Some(b'x') {
                    self.pos += 1;
                    let exp = self.exponent()?;
                    Ok(Polynomial::monomial(coeff, exp))
                } else {
                    Ok(Polynomial::constant(coeff))
                }
            }
            Some(ch) => Err(ParseError::UnexpectedChar {
                ch: ch as char,
                pos: self.pos,
            }),
            None => Err(ParseError::UnexpectedEnd { pos: self.pos }),
        }
    }

    /// Optional `^uint` suffix after `x`; defaults to 1.
    fn exponent(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return match self.peek() {
                Some(ch) => Err(ParseError::UnexpectedChar {
                    ch: ch as char,
                    pos: self.pos,
                }),
                None => Err(ParseError::UnexpectedEnd { pos: self.pos }),
            };
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits
            .parse::<usize>()
            .map_err(|_| ParseError::ExponentTooLarge { pos: start })
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        debug_assert!(self.pos > start);
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(digits).expect("decimal digits"))
    }
}
