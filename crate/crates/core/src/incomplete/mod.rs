//! Incomplete h(x)-Fibonacci and h(x)-Lucas polynomials.
//!
//! F^l_{h,n} keeps the first l+1 terms of the explicit Fibonacci sum,
//! L^l_{h,n} the first l+1 terms of the Lucas sum. Strict index bounds are
//! 1 ≤ n, 0 ≤ l ≤ ⌊(n-1)/2⌋ for the Fibonacci kind and 0 ≤ l ≤ ⌊n/2⌋ for
//! the Lucas kind. The `_extended` variants opt into the zero-extension
//! convention used silently by several identities: negative superscripts
//! and below-support indices (n < 2l+1 Fibonacci, n < 2l Lucas) evaluate
//! to the zero polynomial.

pub mod identity;

use num_traits::Zero;
use thiserror::Error;

use crate::families::{lucas_term_coeff, power_table, FamilyParams};
use crate::polynomial::{binomial, Polynomial};

/// Which family an incomplete index addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Fibonacci,
    Lucas,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Fibonacci => f.write_str("Fibonacci"),
            Kind::Lucas => f.write_str("Lucas"),
        }
    }
}

/// An (n, l) index into one of the incomplete families. `l` is signed so
/// the zero-extension convention (l < 0 ⇒ value 0) is representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IncompleteIndex {
    pub n: u64,
    pub l: i64,
    pub kind: Kind,
}

impl IncompleteIndex {
    pub fn fibonacci(n: u64, l: i64) -> Self {
        IncompleteIndex {
            n,
            l,
            kind: Kind::Fibonacci,
        }
    }

    pub fn lucas(n: u64, l: i64) -> Self {
        IncompleteIndex {
            n,
            l,
            kind: Kind::Lucas,
        }
    }

    /// The definitional bounds, with no extension.
    pub fn is_strictly_valid(&self) -> bool {
        if self.l < 0 {
            return false;
        }
        let l = self.l as u64;
        match self.kind {
            Kind::Fibonacci => self.n >= 1 && 2 * l < self.n,
            Kind::Lucas => 2 * l <= self.n,
        }
    }
}

/// Strict-mode index violation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index (n={n}, l={l}) outside the valid range of the incomplete {kind} family")]
    OutOfRange { kind: Kind, n: u64, l: i64 },
    #[error("special case {which:?} requires n >= {min}, got n = {n}")]
    BelowThreshold { which: Special, min: u64, n: u64 },
}

/// F^l_{h,n} = Σ_{i=0}^{l} C(n-1-i, i) h^{n-2i-1}, strict bounds.
pub fn fib_incomplete(params: &FamilyParams, n: u64, l: u64) -> Result<Polynomial, IndexError> {
    let idx = IncompleteIndex::fibonacci(n, l as i64);
    if !idx.is_strictly_valid() {
        return Err(IndexError::OutOfRange {
            kind: Kind::Fibonacci,
            n,
            l: l as i64,
        });
    }
    let pows = power_table(params.h(), (n - 1) as usize);
    Ok(fib_inc_tbl(&pows, n as i64, l as i64))
}

/// L^l_{h,n} = Σ_{i=0}^{l} (n/(n-i)) C(n-i, i) h^{n-2i}, strict bounds.
/// The boundary value L^0_{h,0} is the constant 2, matching L_{h,0}.
pub fn lucas_incomplete(params: &FamilyParams, n: u64, l: u64) -> Result<Polynomial, IndexError> {
    let idx = IncompleteIndex::lucas(n, l as i64);
    if !idx.is_strictly_valid() {
        return Err(IndexError::OutOfRange {
            kind: Kind::Lucas,
            n,
            l: l as i64,
        });
    }
    let pows = power_table(params.h(), n as usize);
    Ok(lucas_inc_tbl(&pows, n as i64, l as i64))
}

/// F^l_{h,n} under the zero-extension convention: 0 for l < 0 or n < 2l+1.
pub fn fib_incomplete_extended(params: &FamilyParams, n: i64, l: i64) -> Polynomial {
    if l < 0 || n < 2 * l + 1 {
        return Polynomial::zero();
    }
    let pows = power_table(params.h(), (n - 1) as usize);
    fib_inc_tbl(&pows, n, l)
}

/// L^l_{h,n} under the zero-extension convention: 0 for l < 0 or n < 2l.
pub fn lucas_incomplete_extended(params: &FamilyParams, n: i64, l: i64) -> Polynomial {
    if l < 0 || n < 2 * l {
        return Polynomial::zero();
    }
    let pows = power_table(params.h(), n as usize);
    lucas_inc_tbl(&pows, n, l)
}

/// Sum evaluator against a precomputed power table; extended semantics.
/// `pows` must cover exponents up to n-1.
pub(crate) fn fib_inc_tbl(pows: &[Polynomial], n: i64, l: i64) -> Polynomial {
    if l < 0 || n < 2 * l + 1 {
        return Polynomial::zero();
    }
    let (n, l) = (n as u64, l as u64);
    let mut acc = SumBuf::new(&pows[(n - 1) as usize]);
    for i in 0..=l {
        let c = binomial(n - 1 - i, i as i64);
        acc.add_scaled(&pows[(n - 1 - 2 * i) as usize], &c);
    }
    acc.finish()
}

/// Lucas analogue of [`fib_inc_tbl`]; `pows` must cover exponents up to n.
pub(crate) fn lucas_inc_tbl(pows: &[Polynomial], n: i64, l: i64) -> Polynomial {
    if l < 0 || n < 2 * l {
        return Polynomial::zero();
    }
    let (n, l) = (n as u64, l as u64);
    let mut acc = SumBuf::new(&pows[n as usize]);
    for i in 0..=l {
        let c = lucas_term_coeff(n, i);
        acc.add_scaled(&pows[(n - 2 * i) as usize], &c);
    }
    acc.finish()
}

/// Single-allocation accumulator for Σ c_i·h^{e_i}; the identity sweeps
/// evaluate these sums millions of times.
struct SumBuf {
    coeffs: Vec<num_bigint::BigInt>,
}

impl SumBuf {
    /// `top` must be the summand of largest degree.
    fn new(top: &Polynomial) -> Self {
        let len = top.coeffs().len().max(1);
        SumBuf {
            coeffs: vec![num_bigint::BigInt::from(0); len],
        }
    }

    fn add_scaled(&mut self, poly: &Polynomial, c: &num_bigint::BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert!(poly.coeffs().len() <= self.coeffs.len());
        for (slot, a) in self.coeffs.iter_mut().zip(poly.coeffs()) {
            *slot += a * c;
        }
    }

    fn finish(self) -> Polynomial {
        Polynomial::new(self.coeffs)
    }
}

/// The closed-form special cases of the incomplete families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Special {
    /// l = 0: a single power of h.
    L0,
    /// l = 1: two terms.
    L1,
    /// l = 2: three terms.
    L2,
    /// maximal l: recovers the complete polynomial.
    Full,
    /// one step below maximal l.
    Penultimate,
}

/// Closed forms for F^l at l ∈ {0, 1, 2}, the full recovery, and the
/// penultimate column F_{h,n} - nh/2 (n even) / F_{h,n} - 1 (n odd).
pub fn fib_incomplete_special(
    params: &FamilyParams,
    n: u64,
    which: Special,
) -> Result<Polynomial, IndexError> {
    let min = match which {
        Special::L0 | Special::Full => 1,
        Special::L1 | Special::Penultimate => 3,
        Special::L2 => 5,
    };
    if n < min {
        return Err(IndexError::BelowThreshold { which, min, n });
    }
    let h = params.h();
    let value = match which {
        Special::L0 => h.pow(n - 1),
        Special::L1 => &h.pow(n - 1) + &h.pow(n - 3).scale(&(n - 2).into()),
        Special::L2 => {
            let two_terms = &h.pow(n - 1) + &h.pow(n - 3).scale(&(n - 2).into());
            let c = (n - 4) * (n - 3) / 2;
            &two_terms + &h.pow(n - 5).scale(&c.into())
        }
        Special::Full => crate::families::fib(params, n),
        Special::Penultimate => {
            let f = crate::families::fib(params, n);
            if n % 2 == 0 {
                &f - &h.scale(&(n / 2).into())
            } else {
                &f - &Polynomial::one()
            }
        }
    };
    Ok(value)
}

/// Lucas analogue: closed forms for L^l at l ∈ {0, 1, 2}, full recovery,
/// and the penultimate column L_{h,n} - 2 (n even) / L_{h,n} - nh (n odd).
pub fn lucas_incomplete_special(
    params: &FamilyParams,
    n: u64,
    which: Special,
) -> Result<Polynomial, IndexError> {
    let min = match which {
        Special::L0 | Special::Full => 1,
        Special::L1 | Special::Penultimate => 2,
        Special::L2 => 4,
    };
    if n < min {
        return Err(IndexError::BelowThreshold { which, min, n });
    }
    let h = params.h();
    let value = match which {
        Special::L0 => h.pow(n),
        Special::L1 => &h.pow(n) + &h.pow(n - 2).scale(&n.into()),
        Special::L2 => {
            let two_terms = &h.pow(n) + &h.pow(n - 2).scale(&n.into());
            let c = n * (n - 3) / 2;
            &two_terms + &h.pow(n - 4).scale(&c.into())
        }
        Special::Full => crate::families::lucas(params, n),
        Special::Penultimate => {
            let l = crate::families::lucas(params, n);
            if n % 2 == 0 {
                &l - &Polynomial::constant(2)
            } else {
                &l - &h.scale(&n.into())
            }
        }
    };
    Ok(value)
}
