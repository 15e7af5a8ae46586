//! The identity catalog for the incomplete families.
//!
//! Every identity is stored in denominator-cleared form: both sides are
//! integer polynomials, multiplied through by the exact clearing factor
//! where the original statement carries a rational prefactor (h²+4 for the
//! derivative identity, 2(h²+4) for the Fibonacci weighted/row sums, 2 for
//! the Lucas weighted/row sums). An identity holds at a grid point iff the
//! two returned polynomials are equal, so falsification is decidable.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::families::{lucas_term_coeff, power_table, FamilyParams};
use crate::incomplete::{fib_inc_tbl, lucas_inc_tbl};
use crate::polynomial::{binomial, Polynomial};

/// Cap on stored counterexamples per report, to bound output size.
pub const MAX_COUNTEREXAMPLES: usize = 16;

/// Every verifiable identity of the incomplete families, in catalog order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// F^{l+1}_{n+2} = h·F^{l+1}_{n+1} + F^l_n
    FibRecShift,
    /// F^l_{n+2} = h·F^l_{n+1} + F^l_n - C(n-1-l, l)·h^{n-1-2l}
    FibRecNonhom,
    /// Σ_i C(s,i)·F^{l+i}_{n+i}·h^i = F^{l+s}_{n+2s}
    FibBinomSum,
    /// Σ_{i<s} F^l_{n+i}·h^{s-1-i} = F^{l+1}_{n+s+1} - h^s·F^{l+1}_{n+1}
    FibGeomSum,
    /// (h²+4)·F'_n = h'·(n·L_n - h·F_n)
    DerivFib,
    /// 2(h²+4)·Σ_i i·C(n-1-i,i)·h^{n-1-2i} = ((h²+4)n - 4)·F_n - n·h·L_n
    WeightedSumFib,
    /// 2(h²+4)·Σ_l F^l_n = 4F_n + nhL_n (n even) | (h²+8)F_n + nhL_n (n odd)
    RowSumFib,
    /// L^l_n = F^{l-1}_{n-1} + F^l_{n+1}
    LucasFromFib,
    /// L^{l+1}_{n+2} = h·L^{l+1}_{n+1} + L^l_n
    LucasRecShift,
    /// L^l_{n+2} = h·L^l_{n+1} + L^l_n - (n/(n-l))·C(n-l,l)·h^{n-2l}
    LucasRecNonhom,
    /// h·L^l_n = F^l_{n+2} - F^{l-2}_{n-2}
    HLucasDiff,
    /// Σ_i C(s,i)·L^{l+i}_{n+i}·h^i = L^{l+s}_{n+2s}
    LucasBinomSum,
    /// Σ_{i<s} L^l_{n+i}·h^{s-1-i} = L^{l+1}_{n+s+1} - h^s·L^{l+1}_{n+1}
    LucasGeomSum,
    /// 2·Σ_i i·(n/(n-i))·C(n-i,i)·h^{n-2i} = n·(L_n - h·F_n)
    WeightedSumLucas,
    /// 2·Σ_l L^l_n = 2L_n + nhF_n (n even) | L_n + nhF_n (n odd)
    RowSumLucas,
    /// F^{⌊(n-3)/2⌋}_n = F_n - nh/2 (n even) | F_n - 1 (n odd)
    SpecialFibPenult,
    /// L^{⌊(n-2)/2⌋}_n = L_n - 2 (n even) | L_n - nh (n odd)
    SpecialLucasPenult,
    /// L_n = F_{n-1} + F_{n+1}
    LucasCompleteRelation,
}

/// Which of (n, l, s) an identity takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    N,
    Nl,
    Nls,
}

use IdentityId::*;

impl IdentityId {
    /// The full catalog, in sweep/report order.
    pub const ALL: [IdentityId; 18] = [
        FibRecShift,
        FibRecNonhom,
        FibBinomSum,
        FibGeomSum,
        DerivFib,
        WeightedSumFib,
        RowSumFib,
        LucasFromFib,
        LucasRecShift,
        LucasRecNonhom,
        HLucasDiff,
        LucasBinomSum,
        LucasGeomSum,
        WeightedSumLucas,
        RowSumLucas,
        SpecialFibPenult,
        SpecialLucasPenult,
        LucasCompleteRelation,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FibRecShift => "FIB_REC_SHIFT",
            FibRecNonhom => "FIB_REC_NONHOM",
            FibBinomSum => "FIB_BINOM_SUM",
            FibGeomSum => "FIB_GEOM_SUM",
            DerivFib => "DERIV_FIB",
            WeightedSumFib => "WEIGHTED_SUM_FIB",
            RowSumFib => "ROW_SUM_FIB",
            LucasFromFib => "LUCAS_FROM_FIB",
            LucasRecShift => "LUCAS_REC_SHIFT",
            LucasRecNonhom => "LUCAS_REC_NONHOM",
            HLucasDiff => "H_LUCAS_DIFF",
            LucasBinomSum => "LUCAS_BINOM_SUM",
            LucasGeomSum => "LUCAS_GEOM_SUM",
            WeightedSumLucas => "WEIGHTED_SUM_LUCAS",
            RowSumLucas => "ROW_SUM_LUCAS",
            SpecialFibPenult => "SPECIAL_FIB_PENULT",
            SpecialLucasPenult => "SPECIAL_LUCAS_PENULT",
            LucasCompleteRelation => "LUCAS_COMPLETE_RELATION",
        }
    }

    pub fn from_tag(tag: &str) -> Option<IdentityId> {
        IdentityId::ALL.into_iter().find(|id| id.tag() == tag)
    }

    pub fn arity(self) -> Arity {
        match self {
            FibBinomSum | FibGeomSum | LucasBinomSum | LucasGeomSum => Arity::Nls,
            FibRecShift | FibRecNonhom | LucasFromFib | LucasRecShift | LucasRecNonhom
            | HLucasDiff => Arity::Nl,
            _ => Arity::N,
        }
    }

    /// Human-readable domain constraint, as enforced by [`identity_sides`].
    pub fn requirement(self) -> &'static str {
        match self {
            FibRecShift => "n >= 2l + 2",
            FibRecNonhom => "n >= 2l + 1",
            FibBinomSum => "2l + s <= n - 1",
            FibGeomSum => "n >= 2l + 2 and s >= 1",
            DerivFib | WeightedSumFib | RowSumFib | LucasCompleteRelation => "n >= 1",
            LucasFromFib => "n >= 1 and 2l <= n",
            LucasRecShift => "n >= 2l + 1",
            LucasRecNonhom => "n >= 2l",
            HLucasDiff => "n >= 2l + 1",
            LucasBinomSum => "2l + s <= n",
            LucasGeomSum => "n >= 2l + 1 and s >= 1",
            WeightedSumLucas | RowSumLucas => "n >= 1",
            SpecialFibPenult => "n >= 3",
            SpecialLucasPenult => "n >= 2",
        }
    }

    // written to mirror the requirement strings above
    #[allow(clippy::int_plus_one)]
    fn in_domain(self, n: u64, l: u64, s: u64) -> bool {
        match self {
            FibRecShift => n >= 2 * l + 2,
            FibRecNonhom => n >= 2 * l + 1,
            FibBinomSum => 2 * l + s + 1 <= n,
            FibGeomSum => n >= 2 * l + 2 && s >= 1,
            DerivFib | WeightedSumFib | RowSumFib | LucasCompleteRelation => n >= 1,
            LucasFromFib => n >= 1 && 2 * l <= n,
            LucasRecShift => n >= 2 * l + 1,
            LucasRecNonhom => n >= 2 * l,
            HLucasDiff => n >= 2 * l + 1,
            LucasBinomSum => 2 * l + s <= n,
            LucasGeomSum => n >= 2 * l + 1 && s >= 1,
            WeightedSumLucas | RowSumLucas => n >= 1,
            SpecialFibPenult => n >= 3,
            SpecialLucasPenult => n >= 2,
        }
    }

    /// Every admissible grid point with n ≤ n_max, in deterministic order
    /// (n ascending, then l, then s). The two geometric sums have no
    /// intrinsic bound on s, so their s range is capped at n_max - n + 1,
    /// keeping the highest touched index at n_max + 2.
    pub fn grid(self, n_max: u64) -> Vec<IdentityArgs> {
        let mut out = Vec::new();
        let n_lo = match self {
            LucasRecNonhom | LucasBinomSum => 0,
            _ => 1,
        };
        for n in n_lo..=n_max {
            match self.arity() {
                Arity::N => {
                    if self.in_domain(n, 0, 0) {
                        out.push(IdentityArgs::n(n));
                    }
                }
                Arity::Nl => {
                    for l in 0..=n / 2 {
                        if self.in_domain(n, l, 0) {
                            out.push(IdentityArgs::nl(n, l));
                        }
                    }
                }
                Arity::Nls => {
                    let s_cap = match self {
                        FibGeomSum | LucasGeomSum => n_max - n + 1,
                        _ => n, // binomial sums are intrinsically bounded
                    };
                    for l in 0..=n / 2 {
                        for s in 0..=s_cap {
                            if self.in_domain(n, l, s) {
                                out.push(IdentityArgs::nls(n, l, s));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One grid point; `l` and `s` are present according to the identity arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityArgs {
    pub n: u64,
    pub l: Option<u64>,
    pub s: Option<u64>,
}

impl IdentityArgs {
    pub fn n(n: u64) -> Self {
        IdentityArgs {
            n,
            l: None,
            s: None,
        }
    }

    pub fn nl(n: u64, l: u64) -> Self {
        IdentityArgs {
            n,
            l: Some(l),
            s: None,
        }
    }

    pub fn nls(n: u64, l: u64, s: u64) -> Self {
        IdentityArgs {
            n,
            l: Some(l),
            s: Some(s),
        }
    }
}

impl std::fmt::Display for IdentityArgs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}", self.n)?;
        if let Some(l) = self.l {
            write!(f, ", l={l}")?;
        }
        if let Some(s) = self.s {
            write!(f, ", s={s}")?;
        }
        write!(f, ")")
    }
}

/// Arguments outside an identity's stated domain or arity.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("identity {id}: arguments {args} violate `{requirement}`")]
pub struct ConstraintViolation {
    pub id: &'static str,
    pub args: String,
    pub requirement: &'static str,
}

/// Evaluates both cleared sides of `id` at one grid point. The returned
/// polynomials are equal iff the identity holds there.
pub fn identity_sides(
    id: IdentityId,
    params: &FamilyParams,
    args: IdentityArgs,
) -> Result<(Polynomial, Polynomial), ConstraintViolation> {
    check_args(id, args)?;
    let max_exp = (args.n + 2 * args.s.unwrap_or(0) + 4) as usize;
    let pows = power_table(params.h(), max_exp);
    Ok(eval_sides(id, &pows, args))
}

fn check_args(id: IdentityId, args: IdentityArgs) -> Result<(), ConstraintViolation> {
    let violation = || ConstraintViolation {
        id: id.tag(),
        args: args.to_string(),
        requirement: id.requirement(),
    };
    let arity_ok = match id.arity() {
        Arity::N => args.l.is_none() && args.s.is_none(),
        Arity::Nl => args.l.is_some() && args.s.is_none(),
        Arity::Nls => args.l.is_some() && args.s.is_some(),
    };
    if !arity_ok {
        return Err(ConstraintViolation {
            id: id.tag(),
            args: args.to_string(),
            requirement: match id.arity() {
                Arity::N => "takes n only",
                Arity::Nl => "takes n and l",
                Arity::Nls => "takes n, l and s",
            },
        });
    }
    if id.in_domain(args.n, args.l.unwrap_or(0), args.s.unwrap_or(0)) {
        Ok(())
    } else {
        Err(violation())
    }
}

/// Core evaluator against a shared power table (`pows[k] = h^k`, covering
/// every exponent the point can touch).
fn eval_sides(id: IdentityId, pows: &[Polynomial], args: IdentityArgs) -> (Polynomial, Polynomial) {
    let h = &pows[1];
    let n = args.n as i64;
    let l = args.l.unwrap_or(0) as i64;
    let s = args.s.unwrap_or(0) as i64;

    let fi = |nn: i64, ll: i64| fib_inc_tbl(pows, nn, ll);
    let li = |nn: i64, ll: i64| lucas_inc_tbl(pows, nn, ll);
    let fib_full = |nn: i64| fi(nn, if nn > 0 { (nn - 1) / 2 } else { 0 });
    let lucas_full = |nn: i64| li(nn, if nn > 0 { nn / 2 } else { 0 });
    let big = |v: i64| num_bigint::BigInt::from(v);

    match id {
        FibRecShift => {
            let lhs = fi(n + 2, l + 1);
            let rhs = h * fi(n + 1, l + 1) + fi(n, l);
            (lhs, rhs)
        }
        FibRecNonhom => {
            let lhs = fi(n + 2, l);
            let forcing = pows[(n - 1 - 2 * l) as usize].scale(&binomial((n - 1 - l) as u64, l));
            let rhs = h * fi(n + 1, l) + fi(n, l) - forcing;
            (lhs, rhs)
        }
        FibBinomSum => {
            let mut lhs = Polynomial::zero();
            for i in 0..=s {
                let term = (fi(n + i, l + i) * &pows[i as usize]).scale(&binomial(s as u64, i));
                lhs = &lhs + &term;
            }
            (lhs, fi(n + 2 * s, l + s))
        }
        FibGeomSum => {
            let mut lhs = Polynomial::zero();
            for i in 0..s {
                lhs = &lhs + &(fi(n + i, l) * &pows[(s - 1 - i) as usize]);
            }
            let rhs = fi(n + s + 1, l + 1) - &pows[s as usize] * fi(n + 1, l + 1);
            (lhs, rhs)
        }
        DerivFib => {
            let h2p4 = h * h + Polynomial::constant(4);
            let f = fib_full(n);
            let lu = lucas_full(n);
            let lhs = &h2p4 * f.derivative();
            let rhs = h.derivative() * (lu.scale(&big(n)) - h * &f);
            (lhs, rhs)
        }
        WeightedSumFib => {
            let h2p4 = h * h + Polynomial::constant(4);
            let mut sum = Polynomial::zero();
            for i in 0..=(n - 1) / 2 {
                let c = binomial((n - 1 - i) as u64, i) * big(i);
                sum = &sum + &pows[(n - 1 - 2 * i) as usize].scale(&c);
            }
            let lhs = h2p4.scale(&big(2)) * sum;
            let f = fib_full(n);
            let lu = lucas_full(n);
            let rhs =
                (h2p4.scale(&big(n)) - Polynomial::constant(4)) * &f - (h * lu).scale(&big(n));
            (lhs, rhs)
        }
        RowSumFib => {
            let h2p4 = h * h + Polynomial::constant(4);
            let mut sum = Polynomial::zero();
            for ll in 0..=(n - 1) / 2 {
                sum = &sum + &fi(n, ll);
            }
            let lhs = h2p4.scale(&big(2)) * sum;
            let f = fib_full(n);
            let nh_lucas = (h * lucas_full(n)).scale(&big(n));
            let rhs = if n % 2 == 0 {
                f.scale(&big(4)) + nh_lucas
            } else {
                (h * h + Polynomial::constant(8)) * &f + nh_lucas
            };
            (lhs, rhs)
        }
        LucasFromFib => (li(n, l), fi(n - 1, l - 1) + fi(n + 1, l)),
        LucasRecShift => {
            let lhs = li(n + 2, l + 1);
            let rhs = h * li(n + 1, l + 1) + li(n, l);
            (lhs, rhs)
        }
        LucasRecNonhom => {
            let lhs = li(n + 2, l);
            let forcing = pows[(n - 2 * l) as usize].scale(&lucas_term_coeff(n as u64, l as u64));
            let rhs = h * li(n + 1, l) + li(n, l) - forcing;
            (lhs, rhs)
        }
        HLucasDiff => (h * li(n, l), fi(n + 2, l) - fi(n - 2, l - 2)),
        LucasBinomSum => {
            let mut lhs = Polynomial::zero();
            for i in 0..=s {
                let term = (li(n + i, l + i) * &pows[i as usize]).scale(&binomial(s as u64, i));
                lhs = &lhs + &term;
            }
            (lhs, li(n + 2 * s, l + s))
        }
        LucasGeomSum => {
            let mut lhs = Polynomial::zero();
            for i in 0..s {
                lhs = &lhs + &(li(n + i, l) * &pows[(s - 1 - i) as usize]);
            }
            let rhs = li(n + s + 1, l + 1) - &pows[s as usize] * li(n + 1, l + 1);
            (lhs, rhs)
        }
        WeightedSumLucas => {
            let mut sum = Polynomial::zero();
            for i in 0..=n / 2 {
                let c = lucas_term_coeff(n as u64, i as u64) * big(i);
                sum = &sum + &pows[(n - 2 * i) as usize].scale(&c);
            }
            let lhs = sum.scale(&big(2));
            let rhs = (lucas_full(n) - h * fib_full(n)).scale(&big(n));
            (lhs, rhs)
        }
        RowSumLucas => {
            let mut sum = Polynomial::zero();
            for ll in 0..=n / 2 {
                sum = &sum + &li(n, ll);
            }
            let lhs = sum.scale(&big(2));
            let nh_fib = (h * fib_full(n)).scale(&big(n));
            let rhs = if n % 2 == 0 {
                lucas_full(n).scale(&big(2)) + nh_fib
            } else {
                lucas_full(n) + nh_fib
            };
            (lhs, rhs)
        }
        SpecialFibPenult => {
            let lhs = fi(n, (n - 3) / 2);
            let rhs = if n % 2 == 0 {
                fib_full(n) - h.scale(&big(n / 2))
            } else {
                fib_full(n) - Polynomial::one()
            };
            (lhs, rhs)
        }
        SpecialLucasPenult => {
            let lhs = li(n, (n - 2) / 2);
            let rhs = if n % 2 == 0 {
                lucas_full(n) - Polynomial::constant(2)
            } else {
                lucas_full(n) - h.scale(&big(n))
            };
            (lhs, rhs)
        }
        LucasCompleteRelation => (lucas_full(n), fib_full(n - 1) + fib_full(n + 1)),
    }
}

/// Outcome of a grid sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    AllPass,
    Falsified,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::AllPass => "all_pass",
            Status::Falsified => "falsified",
        }
    }
}

/// A failing grid point with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub args: IdentityArgs,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

/// Result of sweeping one identity over its admissible grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub h_text: String,
    pub n_max: u64,
    /// Grid points evaluated (an empty grid reports AllPass vacuously).
    pub points: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::AllPass
    }
}

/// Sweeps `id` over every admissible (n, l, s) with n ≤ n_max and reports
/// pass/fail plus counterexamples (capped at [`MAX_COUNTEREXAMPLES`]).
/// Falsification is a report outcome, not an error.
pub fn verify_identity_range(id: IdentityId, params: &FamilyParams, n_max: u64) -> IdentityReport {
    assert!(n_max >= 1, "n_max must be positive");
    let pows = power_table(params.h(), (3 * n_max + 4) as usize);
    let grid = id.grid(n_max);
    let (status, counterexamples) = sweep(&grid, |args| eval_sides(id, &pows, args));
    IdentityReport {
        identity: id,
        h_text: params.h().to_text(),
        n_max,
        points: grid.len(),
        status,
        counterexamples,
    }
}

fn sweep(
    grid: &[IdentityArgs],
    mut sides: impl FnMut(IdentityArgs) -> (Polynomial, Polynomial),
) -> (Status, Vec<Counterexample>) {
    let mut counterexamples = Vec::new();
    let mut all_pass = true;
    for &args in grid {
        let (lhs, rhs) = sides(args);
        if lhs != rhs {
            all_pass = false;
            if counterexamples.len() < MAX_COUNTEREXAMPLES {
                counterexamples.push(Counterexample { args, lhs, rhs });
            }
        }
    }
    let status = if all_pass {
        Status::AllPass
    } else {
        Status::Falsified
    };
    (status, counterexamples)
}

impl Serialize for IdentityArgs {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut len = 1;
        if self.l.is_some() {
            len += 1;
        }
        if self.s.is_some() {
            len += 1;
        }
        let mut st = serializer.serialize_struct("args", len)?;
        st.serialize_field("n", &self.n)?;
        if let Some(l) = self.l {
            st.serialize_field("l", &l)?;
        }
        if let Some(s) = self.s {
            st.serialize_field("s", &s)?;
        }
        st.end()
    }
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("counterexample", 3)?;
        st.serialize_field("args", &self.args)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.end()
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("report", 5)?;
        st.serialize_field("identity", self.identity.tag())?;
        st.serialize_field("h", &self.h_text)?;
        st.serialize_field("n_max", &self.n_max)?;
        st.serialize_field("status", self.status.as_str())?;
        st.serialize_field("counterexamples", &self.counterexamples)?;
        st.end()
    }
}
