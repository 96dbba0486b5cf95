//! Exact arithmetic kernel: rationals, sparse polynomials in up to two
//! variables, unreduced rational functions and truncated power series.

mod json;
mod poly;
mod ratfun;
mod series;

pub use json::{poly_from_json, poly_to_json, ratfun_from_json, ratfun_to_json};
pub use poly::{MPoly, Mono, NotDivisible, Ring};
pub use ratfun::RatFun;
pub use series::{series_expand, TruncSeries};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// `sum of var^k` for `k = lo, lo + step, ..., <= hi`; zero when `hi < lo`.
pub fn geometric_sum(var: Ring, lo: u32, hi: u32, step: u32) -> MPoly {
    assert!(step > 0, "step must be positive");
    let mut out = MPoly::zero(var);
    if hi < lo {
        return out;
    }
    let mut k = lo;
    while k <= hi {
        out = &out + &MPoly::var_pow(var, k);
        k = match k.checked_add(step) {
            Some(k) => k,
            None => break,
        };
    }
    out
}

/// Polynomial quotient of two polynomials, if exact.
pub fn poly_exact_div(a: &MPoly, b: &MPoly) -> Result<MPoly, NotDivisible> {
    a.exact_div(b)
}
