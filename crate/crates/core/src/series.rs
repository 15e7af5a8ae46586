//! Truncated formal power series in t with polynomial coefficients, and
//! the closed-form generating functions of the incomplete families.
//!
//! A rational generating function is expanded as numerator times the
//! series inverse of the denominator — never via partial fractions — so
//! everything stays in exact integer polynomial arithmetic. The closed
//! forms put their bracketed fractional term over the common denominator
//! (1-ht)^{l+1} first, leaving one inversion per expansion.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::families::{fib, lucas, FamilyParams};
use crate::polynomial::{binomial, Polynomial};

/// A power series in t known modulo t^{order+1}; coefficient i is the
/// polynomial (in x) attached to t^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<Polynomial>,
}

/// Series inversion needs a unit constant term (the constant polynomial
/// 1 or -1).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("series constant term is not a unit (must be 1 or -1)")]
pub struct NotAUnit;

impl PolySeries {
    /// Wraps coefficients as a series of order `len - 1`.
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        PolySeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PolySeries {
            coeffs: vec![Polynomial::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        s.coeffs[0] = Polynomial::one();
        s
    }

    pub fn constant(c: Polynomial, order: usize) -> Self {
        let mut s = PolySeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Polynomial) -> Self {
        PolySeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k; panics beyond the truncation order, where the
    /// series is unknown.
    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> PolySeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PolySeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &PolySeries) -> PolySeries {
        let order = self.order().min(rhs.order());
        PolySeries::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }

    pub fn sub(&self, rhs: &PolySeries) -> PolySeries {
        let order = self.order().min(rhs.order());
        PolySeries::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &PolySeries) -> PolySeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Polynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PolySeries { coeffs }
    }

    /// Multiplicative inverse to the truncation order, by the standard
    /// recurrence b_0 = 1/a_0, b_n = -a_0^{-1} Σ_{k=1..n} a_k b_{n-k}.
    pub fn inverse(&self) -> Result<PolySeries, NotAUnit> {
        let a0 = &self.coeffs[0];
        let unit = if a0.is_one() {
            Polynomial::one()
        } else if (-a0).is_one() {
            Polynomial::constant(-1)
        } else {
            return Err(NotAUnit);
        };
        // for a0 = ±1 the inverse of a0 is a0 itself
        let order = self.order();
        let mut inv = vec![Polynomial::zero(); order + 1];
        inv[0] = unit.clone();
        for n in 1..=order {
            let mut acc = Polynomial::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &inv[n - k]);
            }
            inv[n] = -(&unit * &acc);
        }
        Ok(PolySeries { coeffs: inv })
    }

    /// Multiplies by t^k, preserving the truncation order (high terms
    /// fall off the end).
    pub fn shift(&self, k: usize) -> PolySeries {
        let order = self.order();
        PolySeries::from_fn(order, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                Polynomial::zero()
            }
        })
    }
}

/// A rational generating function in t: finite numerator and denominator
/// polynomials with [`Polynomial`] coefficients, index = power of t.
/// Expansion requires the denominator's constant term to be ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfSpec {
    pub numerator: Vec<Polynomial>,
    pub denominator: Vec<Polynomial>,
}

impl GfSpec {
    pub fn new(numerator: Vec<Polynomial>, denominator: Vec<Polynomial>) -> Self {
        GfSpec {
            numerator,
            denominator,
        }
    }

    /// Numerator times the series inverse of the denominator, truncated.
    pub fn expand(&self, order: usize) -> Result<PolySeries, NotAUnit> {
        let num = tpoly_to_series(&self.numerator, order);
        let den = tpoly_to_series(&self.denominator, order);
        Ok(num.mul(&den.inverse()?))
    }
}

/// Pads a polynomial-in-t into a series of the requested order.
fn tpoly_to_series(poly: &[Polynomial], order: usize) -> PolySeries {
    PolySeries::from_fn(order, |i| poly.get(i).cloned().unwrap_or_default())
}

/// Exact product of two polynomials in t.
fn tpoly_mul(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(p * q);
        }
    }
    out
}

/// (1 - h t)^k as a polynomial in t.
fn one_minus_ht_pow(h: &Polynomial, k: u64) -> Vec<Polynomial> {
    let base = vec![Polynomial::one(), -h];
    let mut acc = vec![Polynomial::one()];
    for _ in 0..k {
        acc = tpoly_mul(&acc, &base);
    }
    acc
}

/// (1 - h(x)t)^{-exponent}: coefficient of t^n is C(n+exponent-1, n)·h^n.
pub fn expand_negative_binomial(h: &Polynomial, exponent: u64, order: usize) -> PolySeries {
    assert!(exponent >= 1, "exponent must be positive");
    let mut hp = Polynomial::one();
    PolySeries::from_fn(order, |n| {
        if n > 0 {
            hp = &hp * h;
        }
        hp.scale(&binomial(n as u64 + exponent - 1, n as i64))
    })
}

/// Generating function of a sequence obeying s_n = a·s_{n-1} + b·s_{n-2} + r_n
/// for n ≥ 2: U(t) = (G(t) + s0 - r0 + (s1 - s0·a - r1)·t) / (1 - a·t - b·t²),
/// where `g` is the generating function of the forcing sequence {r_n}.
/// The output carries g's truncation order.
pub fn solve_nonhomogeneous_gf(
    a: &Polynomial,
    b: &Polynomial,
    g: &PolySeries,
    s0: &Polynomial,
    s1: &Polynomial,
    r0: &Polynomial,
    r1: &Polynomial,
) -> PolySeries {
    let order = g.order();
    let mut num = g.clone();
    num.coeffs[0] = &num.coeffs[0] + &(s0 - r0);
    if order >= 1 {
        num.coeffs[1] = &num.coeffs[1] + &(s1 - &(s0 * a) - r1);
    }
    let den = tpoly_to_series(&[Polynomial::one(), -a, -b], order);
    num.mul(&den.inverse().expect("denominator has unit constant term"))
}

/// Variant selector for the incomplete-Lucas closed form, whose printed
/// numerator factor (2 - t) is suspected to be a typo for (2 - h(x)t).
/// Both are shipped so the oracle can adjudicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasGfVariant {
    AsPrinted,
    CorrectedCandidate,
}

impl LucasGfVariant {
    pub fn label(self) -> &'static str {
        match self {
            LucasGfVariant::AsPrinted => "as-printed",
            LucasGfVariant::CorrectedCandidate => "corrected-candidate",
        }
    }
}

/// Closed-form generating function of F^l_{h,n}:
/// t^{2l+1}·[F_{2l+1} + (F_{2l+2} - h·F_{2l+1})t - t²/(1-ht)^{l+1}] / (1-ht-t²),
/// expanded exactly by clearing the inner fraction against (1-ht)^{l+1}.
pub fn gf_fib_incomplete_closed(params: &FamilyParams, l: u64, order: usize) -> PolySeries {
    assert!(order as u64 > 2 * l, "order must reach the support start");
    let h = params.h();
    let f_lo = fib(params, 2 * l + 1);
    let f_hi = fib(params, 2 * l + 2);
    let seed = vec![f_lo.clone(), &f_hi - &(h * &f_lo)];
    let omht = one_minus_ht_pow(h, l + 1);
    let mut bracket = tpoly_mul(&seed, &omht);
    bracket.resize(bracket.len().max(3), Polynomial::zero());
    bracket[2] = &bracket[2] - &Polynomial::one();
    let mut numerator = vec![Polynomial::zero(); (2 * l + 1) as usize];
    numerator.extend(bracket);
    let denominator = tpoly_mul(&omht, &[Polynomial::one(), -h, -Polynomial::one()]);
    GfSpec::new(numerator, denominator)
        .expand(order)
        .expect("denominator constant term is 1")
}

/// Closed-form generating function of L^l_{h,n}:
/// t^{2l}·[L_{2l} + (L_{2l+1} - h·L_{2l})t - t²(2-t)/(1-ht)^{l+1}] / (1-ht-t²)
/// for [`LucasGfVariant::AsPrinted`]; the candidate variant replaces the
/// numerator factor (2 - t) with (2 - h(x)t).
pub fn gf_lucas_incomplete_closed(
    params: &FamilyParams,
    l: u64,
    order: usize,
    variant: LucasGfVariant,
) -> PolySeries {
    assert!(order as u64 >= 2 * l, "order must reach the support start");
    let h = params.h();
    let l_lo = lucas(params, 2 * l);
    let l_hi = lucas(params, 2 * l + 1);
    let seed = vec![l_lo.clone(), &l_hi - &(h * &l_lo)];
    let omht = one_minus_ht_pow(h, l + 1);
    let mut bracket = tpoly_mul(&seed, &omht);
    bracket.resize(bracket.len().max(4), Polynomial::zero());
    // subtract t²·(2 - t) or t²·(2 - h t)
    bracket[2] = &bracket[2] - &Polynomial::constant(2);
    match variant {
        LucasGfVariant::AsPrinted => bracket[3] = &bracket[3] + &Polynomial::one(),
        LucasGfVariant::CorrectedCandidate => bracket[3] = &bracket[3] + h,
    }
    let mut numerator = vec![Polynomial::zero(); (2 * l) as usize];
    numerator.extend(bracket);
    let denominator = tpoly_mul(&omht, &[Polynomial::one(), -h, -Polynomial::one()]);
    GfSpec::new(numerator, denominator)
        .expand(order)
        .expect("denominator constant term is 1")
}

/// Outcome of comparing a closed-form expansion against the direct
/// definition sequence, coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfComparison {
    AllMatch,
    Mismatch {
        index: usize,
        closed: Polynomial,
        direct: Polynomial,
    },
}

impl GfComparison {
    pub fn all_match(&self) -> bool {
        matches!(self, GfComparison::AllMatch)
    }
}

/// Compares `closed` against `direct(n)` for n = 0..=order and reports the
/// first mismatch, if any. This is the falsification oracle for the closed
/// forms.
pub fn compare_gf_to_sequence(
    closed: &PolySeries,
    direct: impl Fn(u64) -> Polynomial,
    order: usize,
) -> GfComparison {
    assert!(
        order <= closed.order(),
        "comparison exceeds truncation order"
    );
    for n in 0..=order {
        let expected = direct(n as u64);
        if *closed.coeff(n) != expected {
            return GfComparison::Mismatch {
                index: n,
                closed: closed.coeff(n).clone(),
                direct: expected,
            };
        }
    }
    GfComparison::AllMatch
}

impl Serialize for PolySeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("series", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

impl Serialize for GfComparison {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            GfComparison::AllMatch => {
                let mut st = serializer.serialize_struct("comparison", 1)?;
                st.serialize_field("status", "all_match")?;
                st.end()
            }
            GfComparison::Mismatch {
                index,
                closed,
                direct,
            } => {
                let mut st = serializer.serialize_struct("comparison", 4)?;
                st.serialize_field("status", "mismatch")?;
                st.serialize_field("first_mismatch", index)?;
                st.serialize_field("closed", &closed.to_text())?;
                st.serialize_field("direct", &direct.to_text())?;
                st.end()
            }
        }
    }
}
