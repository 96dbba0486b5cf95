//! Univariate power series truncated at a fixed order.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{MPoly, Ring};
use super::ratfun::RatFun;
use super::BigRat;
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `x^k` for `k <= order`; everything above
/// `order` is unknown and never read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    var: Ring,
    order: usize,
    coeffs: Vec<BigRat>,
}

impl TruncSeries {
    pub fn zero(var: Ring, order: usize) -> Self {
        assert_eq!(var.nvars(), 1, "series need a univariate ring");
        TruncSeries {
            var,
            order,
            coeffs: vec![BigRat::zero(); order + 1],
        }
    }

    pub fn one(var: Ring, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = BigRat::one();
        s
    }

    pub fn from_coeffs(var: Ring, order: usize, coeffs: Vec<BigRat>) -> Self {
        let mut s = Self::zero(var, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_ints(var: Ring, order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            var,
            order,
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_poly(p: &MPoly, order: usize) -> Self {
        let var = if p.ring().nvars() == 1 {
            p.ring()
        } else {
            Ring::T
        };
        assert!(p.ring().nvars() == 1 || p.is_constant());
        let mut s = Self::zero(var, order);
        for (m, c) in p.terms() {
            let k = m.0[0] as usize;
            if k <= order {
                s.coeffs[k] = c.clone();
            }
        }
        s
    }

    pub fn var(&self) -> Ring {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRat {
        assert!(
            k <= self.order,
            "coefficient {k} beyond order {}",
            self.order
        );
        &self.coeffs[k]
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.var, other.var, "series in different variables");
        assert_eq!(
            self.order, other.order,
            "series truncated at different orders"
        );
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let inv0 = a0.recip();
        let mut b = vec![BigRat::zero(); self.order + 1];
        b[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = BigRat::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[n - i];
                }
            }
            b[n] = -(acc * &inv0);
        }
        Ok(TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: b,
        })
    }

    /// Polynomial made of the stored coefficients.
    pub fn to_poly(&self) -> MPoly {
        MPoly::from_terms(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ([k as u32, 0], c.clone())),
        )
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check(rhs);
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check(rhs);
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// Truncated convolution.
impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check(rhs);
        let n = self.order;
        let mut out = vec![BigRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries {
            var: self.var,
            order: n,
            coeffs: out,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Power series of a univariate rational function through degree `order`.
///
/// A denominator vanishing at zero is accepted only when the same power of
/// the variable also divides the numerator, so that it can be cancelled.
pub fn series_expand(f: &RatFun, order: usize) -> Result<TruncSeries> {
    let var = f.ring();
    if var.nvars() != 1 {
        return Err(Error::WrongRing {
            expected: Ring::T,
            found: var,
        });
    }
    if f.num().is_zero() {
        return Ok(TruncSeries::zero(var, order));
    }
    let k = f.den().low_degree().unwrap_or(0);
    let m = f.num().low_degree().unwrap_or(0);
    let (num, den) = if k > 0 {
        if m < k {
            return Err(Error::NotExpandable);
        }
        let xk = MPoly::var_pow(var, k);
        (
            f.num().exact_div(&xk).expect("monomial divides"),
            f.den().exact_div(&xk).expect("monomial divides"),
        )
    } else {
        (f.num().clone(), f.den().clone())
    };
    let inv = TruncSeries::from_poly(&den, order)
        .with_var(var)
        .inverse()?;
    Ok(&TruncSeries::from_poly(&num, order).with_var(var) * &inv)
}

impl TruncSeries {
    fn with_var(mut self, var: Ring) -> Self {
        self.var = var;
        self
    }
}
