//! The complete h(x)-Fibonacci and h(x)-Lucas polynomial families.
//!
//! Both families are available through the defining linear recurrence and
//! through the explicit binomial formula; tests pin the two routes to each
//! other. The generating polynomial h(x) may be anything, including zero
//! and constants: h = 1 specializes to Fibonacci/Lucas numbers, h = 2 to
//! Pell numbers, h = k to the k-Fibonacci family.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polynomial::{binomial, Polynomial};

/// The family parameter: the generating polynomial h(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    h: Polynomial,
}

impl FamilyParams {
    pub fn new(h: Polynomial) -> Self {
        FamilyParams { h }
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }
}

/// F_{h,n}: seeds 0, 1, then F_{h,n+1} = h·F_{h,n} + F_{h,n-1}.
///
/// Iterative with two rolling values, so large n is cheap and stack-safe.
pub fn fib(params: &FamilyParams, n: u64) -> Polynomial {
    let (mut prev, mut curr) = (Polynomial::zero(), Polynomial::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = params.h() * &curr + &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// L_{h,n}: seeds 2, h(x), same recurrence as [`fib`].
pub fn lucas(params: &FamilyParams, n: u64) -> Polynomial {
    let (mut prev, mut curr) = (Polynomial::constant(2), params.h().clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = params.h() * &curr + &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// F_{h,n} by the explicit sum Σ_i C(n-i-1, i) h^{n-2i-1}, n ≥ 1.
pub fn fib_explicit(params: &FamilyParams, n: u64) -> Polynomial {
    assert!(n >= 1, "explicit formula requires n >= 1");
    let pows = power_table(params.h(), (n - 1) as usize);
    let mut acc = Polynomial::zero();
    for i in 0..=(n - 1) / 2 {
        let c = binomial(n - i - 1, i as i64);
        acc = &acc + &pows[(n - 2 * i - 1) as usize].scale(&c);
    }
    acc
}

/// L_{h,n} by the explicit sum Σ_i (n/(n-i)) C(n-i, i) h^{n-2i}, n ≥ 1.
pub fn lucas_explicit(params: &FamilyParams, n: u64) -> Polynomial {
    assert!(n >= 1, "explicit formula requires n >= 1");
    let pows = power_table(params.h(), n as usize);
    let mut acc = Polynomial::zero();
    for i in 0..=n / 2 {
        let c = lucas_term_coeff(n, i);
        acc = &acc + &pows[(n - 2 * i) as usize].scale(&c);
    }
    acc
}

/// The integer (n/(n-i))·C(n-i, i), evaluated as n·C(n-i, i)/(n-i) so every
/// intermediate stays integral; a nonzero remainder is a hard internal
/// error. The 0/0 instance at n = i = 0 takes the convention value 2, the
/// unique choice consistent with L_{h,0} = 2.
pub(crate) fn lucas_term_coeff(n: u64, i: u64) -> BigInt {
    if n == 0 && i == 0 {
        return BigInt::from(2);
    }
    if i > n {
        return BigInt::zero();
    }
    let b = binomial(n - i, i as i64);
    if b.is_zero() {
        return b;
    }
    let num = BigInt::from(n) * b;
    let den = BigInt::from(n - i);
    let (q, r) = num_integer_div_rem(&num, &den);
    assert!(
        r.is_zero(),
        "n*C(n-i,i) not divisible by n-i at n={n}, i={i}"
    );
    q
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// All powers h^0..h^max, computed once.
pub(crate) fn power_table(h: &Polynomial, max: usize) -> Vec<Polynomial> {
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(Polynomial::one());
    for k in 1..=max {
        let next = &pows[k - 1] * h;
        pows.push(next);
    }
    pows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(text: &str) -> FamilyParams {
        FamilyParams::new(Polynomial::parse(text).unwrap())
    }

    fn p(text: &str) -> Polynomial {
        Polynomial::parse(text).unwrap()
    }

    #[test]
    fn fib_seeds_and_small_values() {
        let x = params("x");
        assert_eq!(fib(&x, 0), Polynomial::zero());
        assert_eq!(fib(&x, 1), Polynomial::one());
        assert_eq!(fib(&x, 5), p("x^4+3x^2+1"));
    }

    #[test]
    fn fib_specializes_to_integer_sequences() {
        let one = params("1");
        assert_eq!(fib(&one, 10), Polynomial::constant(55));
        // Pell numbers at h = 2
        let two = params("2");
        let pell = [1u64, 2, 5, 12, 29, 70, 169, 408, 985, 2378];
        for (k, &expect) in pell.iter().enumerate() {
            assert_eq!(fib(&two, k as u64 + 1), Polynomial::constant(expect as i64));
        }
    }

    #[test]
    fn lucas_seeds_and_small_values() {
        let x = params("x");
        assert_eq!(lucas(&x, 0), Polynomial::constant(2));
        assert_eq!(lucas(&x, 1), p("x"));
        assert_eq!(lucas(&x, 4), p("x^4+4x^2+2"));
        assert_eq!(lucas(&params("1"), 5), Polynomial::constant(11));
    }

    #[test]
    fn explicit_formulas_small_values() {
        let x = params("x");
        assert_eq!(fib_explicit(&x, 1), Polynomial::one());
        assert_eq!(fib_explicit(&x, 7), p("x^6+5x^4+6x^2+1"));
        assert_eq!(lucas_explicit(&x, 2), p("x^2+2"));
        assert_eq!(lucas_explicit(&x, 6), p("x^6+6x^4+9x^2+2"));
    }

    #[test]
    fn explicit_matches_recurrence_over_sample_set() {
        for h in ["0", "1", "2", "x", "x^2+1", "3x"] {
            let params = params(h);
            for n in 1..=30 {
                assert_eq!(fib_explicit(&params, n), fib(&params, n), "fib h={h} n={n}");
                assert_eq!(
                    lucas_explicit(&params, n),
                    lucas(&params, n),
                    "lucas h={h} n={n}"
                );
            }
        }
    }

    #[test]
    fn lucas_is_fib_neighbor_sum() {
        for h in ["0", "1", "x", "x^2+1", "3x"] {
            let params = params(h);
            for n in 1..=25 {
                let sum = &fib(&params, n - 1) + &fib(&params, n + 1);
                assert_eq!(lucas(&params, n), sum, "h={h} n={n}");
            }
        }
    }

    #[test]
    fn degree_law_for_nonconstant_h() {
        for h in ["x", "x^2+1", "3x"] {
            let params = params(h);
            let dh = params.h().degree().unwrap();
            let lead = params.h().leading_coeff().unwrap().clone();
            for n in 1..=12u64 {
                let f = fib(&params, n);
                assert_eq!(f.degree(), Some((n as usize - 1) * dh));
                assert_eq!(*f.leading_coeff().unwrap(), lead.pow((n - 1) as u32));
            }
        }
    }

    #[test]
    fn lucas_term_coeff_is_integral() {
        for n in 1..=40u64 {
            for i in 0..=n / 2 {
                // the assert inside lucas_term_coeff is the check
                let _ = lucas_term_coeff(n, i);
            }
        }
        assert_eq!(lucas_term_coeff(0, 0), BigInt::from(2));
        assert_eq!(lucas_term_coeff(8, 4), BigInt::from(2));
    }

    #[test]
    fn recurrence_stress_large_n() {
        // two rolling values, no recursion: n = 10^4 must just work
        let f = fib(&params("1"), 10_000);
        assert_eq!(f.degree(), Some(0));
        assert!(f.coeffs()[0].to_string().len() > 2000);
    }
}
