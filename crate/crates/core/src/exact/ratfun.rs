//! Unreduced rational functions. Nothing here ever computes a multivariate gcd;
//! equality is decided by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{MPoly, NotDivisible, Ring};
use super::BigRat;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    /// # Panics
    /// Panics if `den` is zero.
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFun { num, den }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let ring = p.ring();
        RatFun {
            num: p,
            den: MPoly::one(ring),
        }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::from_poly(MPoly::zero(ring))
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_poly(MPoly::one(ring))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn ring(&self) -> Ring {
        if self.num.is_constant() {
            self.den.ring()
        } else {
            self.num.ring()
        }
    }

    pub fn scale(&self, c: &BigRat) -> RatFun {
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> RatFun {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// `num1 * den2 - num2 * den1`; zero iff the two fractions are equal.
    pub fn cross_difference(&self, other: &RatFun) -> MPoly {
        &self.num * &other.den - &other.num * &self.den
    }

    /// Equality as fractions.
    pub fn equals(&self, other: &RatFun) -> bool {
        self.cross_difference(other).is_zero()
    }

    /// The quotient `num / den` if it is a polynomial.
    pub fn to_poly(&self) -> Result<MPoly, NotDivisible> {
        self.num.exact_div(&self.den)
    }

    pub fn swap_uv(&self) -> RatFun {
        RatFun {
            num: self.num.swap_uv(),
            den: self.den.swap_uv(),
        }
    }

    /// Substitute `u = v = t`.
    pub fn substitute_diagonal(&self) -> Result<RatFun> {
        let den = self.den.diagonal();
        if den.is_zero() {
            return Err(Error::DiagonalPole);
        }
        Ok(RatFun::new(self.num.diagonal(), den))
    }

    /// Value at `t = 1` of a univariate function after cancelling the gcd of
    /// numerator and denominator.
    pub fn limit_at_one(&self) -> Result<BigRat> {
        for p in [&self.num, &self.den] {
            if p.ring().nvars() != 1 && !p.is_constant() {
                return Err(Error::WrongRing {
                    expected: Ring::T,
                    found: p.ring(),
                });
            }
        }
        if self.num.is_zero() {
            return Ok(BigRat::zero());
        }
        let g = self.num.gcd(&self.den);
        let num = self.num.exact_div(&g).expect("gcd divides numerator");
        let den = self.den.exact_div(&g).expect("gcd divides denominator");
        let one = BigRat::one();
        let d = den.eval1(&one);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(num.eval1(&one) / d)
    }

    /// Evaluate at a point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRat, y: &BigRat) -> Option<BigRat> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x, y) / d)
        }
    }

    /// Sum of fractions whose denominators all divide `common`, written over
    /// `common`. Fails if some denominator does not divide it.
    pub fn combine_over(terms: &[RatFun], common: &MPoly) -> Result<RatFun, NotDivisible> {
        let mut num = MPoly::zero(common.ring());
        for term in terms {
            let cofactor = common.exact_div(&term.den)?;
            num = &num + &(&term.num * &cofactor);
        }
        Ok(RatFun::new(num, common.clone()))
    }

    /// Sum of many fractions; denominators are multiplied out without any
    /// cancellation.
    pub fn sum<'a, I>(ring: Ring, items: I) -> RatFun
    where
        I: IntoIterator<Item = &'a RatFun>,
    {
        items
            .into_iter()
            .fold(RatFun::zero(ring), |acc, x| &acc + x)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RatFun {}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        // skip the cross terms when one side is a polynomial over 1
        if rhs.den.is_constant() && rhs.den.constant_term().is_one() {
            return RatFun {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        if self.den.is_constant() && self.den.constant_term().is_one() {
            return RatFun {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        RatFun {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
