//! Gaussian binomials: Poincare polynomials of Grassmannians in `t`, their
//! Hodge-Deligne polynomials in `uv`, and the invariant / anti-invariant
//! parts of `P^{g-2} x P^{g-2}` under the factor swap.

use crate::error::{Error, Result};
use crate::exact::{MPoly, RatFun, Ring};

/// `Gr(k, n)`: `k`-planes in an `n`-dimensional space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannSpec {
    k: u32,
    n: u32,
}

impl GrassmannSpec {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(GrassmannSpec { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.k * (self.n - self.k)
    }
}

/// `prod_{i=1..k} (x^{n-k+i} - 1) / (x^i - 1)`, divided exactly; `x_pow(m)`
/// yields `x^m`.
fn gaussian_binomial(
    spec: GrassmannSpec,
    x_pow: impl Fn(u32) -> MPoly,
    ring: Ring,
) -> Result<MPoly> {
    let one = MPoly::one(ring);
    let mut num = one.clone();
    let mut den = one.clone();
    for i in 1..=spec.k {
        num = &num * &(&x_pow(spec.n - spec.k + i) - &one);
        den = &den * &(&x_pow(i) - &one);
    }
    num.exact_div(&den)
        .map_err(|_| Error::FormulaNotPolynomial {
            what: format!("Gaussian binomial for Gr({}, {})", spec.k, spec.n),
        })
}

/// Poincare polynomial of `Gr(k, n)` in `t`.
pub fn grassmann_poincare(spec: GrassmannSpec) -> Result<MPoly> {
    gaussian_binomial(spec, |m| MPoly::var_pow(Ring::T, 2 * m), Ring::T)
}

/// Hodge-Deligne polynomial of `Gr(k, n)`, a polynomial in `uv`.
pub fn grassmann_e(spec: GrassmannSpec) -> Result<MPoly> {
    gaussian_binomial(spec, MPoly::uv_pow, Ring::Uv)
}

/// `E(P^n) = 1 + uv + ... + (uv)^n`; zero for `n < 0`.
pub fn projective_e(n: i64) -> MPoly {
    let mut out = MPoly::zero(Ring::Uv);
    for k in 0..=n {
        out = &out + &MPoly::uv_pow(k as u32);
    }
    out
}

/// Invariant and anti-invariant parts of `E(P^{g-2} x P^{g-2})` under the
/// swap of factors:
///
/// ```text
/// E+ = ((uv)^g - 1)((uv)^{g-1} - 1) / ((uv - 1)((uv)^2 - 1))
/// E- = uv ((uv)^{g-1} - 1)((uv)^{g-2} - 1) / ((uv - 1)((uv)^2 - 1))
/// ```
pub fn pp_pair_e_split(g: u32) -> Result<(RatFun, RatFun)> {
    if g < 3 {
        return Err(Error::GenusOutOfRange { g, min: 3 });
    }
    let one = MPoly::one(Ring::Uv);
    let qm1 = |k: u32| &MPoly::uv_pow(k) - &one;
    let den = &qm1(1) * &qm1(2);
    let plus = RatFun::new(&qm1(g) * &qm1(g - 1), den.clone());
    let minus = RatFun::new(&MPoly::uv_pow(1) * &(&qm1(g - 1) * &qm1(g - 2)), den);
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: u32, n: u32) -> GrassmannSpec {
        GrassmannSpec::new(k, n).unwrap()
    }

    fn q_poly(cs: &[i64]) -> MPoly {
        MPoly::from_coeffs(Ring::Q, cs).embed_q()
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GrassmannSpec::new(0, 3).is_err());
        assert!(GrassmannSpec::new(4, 3).is_err());
    }

    #[test]
    fn poincare_small_cases() {
        assert_eq!(
            grassmann_poincare(gr(2, 3)).unwrap(),
            MPoly::from_coeffs(Ring::T, &[1, 0, 1, 0, 1])
        );
        assert_eq!(grassmann_poincare(gr(3, 3)).unwrap(), MPoly::one(Ring::T));
        // (1-t^8)(1-t^6)/((1-t^2)(1-t^4)) by long division
        assert_eq!(
            grassmann_poincare(gr(2, 4)).unwrap(),
            MPoly::from_coeffs(Ring::T, &[1, 0, 1, 0, 2, 0, 1, 0, 1])
        );
    }

    #[test]
    fn e_small_cases() {
        assert_eq!(grassmann_e(gr(2, 3)).unwrap(), q_poly(&[1, 1, 1]));
        assert_eq!(grassmann_e(gr(3, 3)).unwrap(), MPoly::one(Ring::Uv));
        assert_eq!(grassmann_e(gr(3, 4)).unwrap(), q_poly(&[1, 1, 1, 1]));
    }

    #[test]
    fn pp_split_genus_three() {
        let (p, m) = pp_pair_e_split(3).unwrap();
        assert_eq!(p.to_poly().unwrap(), q_poly(&[1, 1, 1]));
        assert_eq!(m.to_poly().unwrap(), q_poly(&[0, 1]));
        assert_eq!(&p + &m, RatFun::from_poly(q_poly(&[1, 2, 1])));
    }

    #[test]
    fn pp_split_minus_vanishes_at_origin() {
        for g in 3..8 {
            let (_, m) = pp_pair_e_split(g).unwrap();
            assert!(num_traits::Zero::is_zero(
                &m.to_poly().unwrap().constant_term()
            ));
        }
    }

    #[test]
    fn projective_e_matches_grassmannian_of_lines() {
        for n in 1..6 {
            assert_eq!(projective_e(n as i64 - 1), grassmann_e(gr(1, n)).unwrap());
        }
        assert!(projective_e(-1).is_zero());
    }
}
