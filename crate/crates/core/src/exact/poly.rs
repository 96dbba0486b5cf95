//! Sparse polynomials in at most two variables with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// The variable set a polynomial lives over.
///
/// `Uv` is the bivariate Hodge ring with `u < v`. `T` and `Q` are standalone
/// univariate rings; `q` is never silently identified with `uv`, use
/// [`MPoly::embed_q`] for that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Uv,
    T,
    Q,
}

impl Ring {
    pub fn nvars(self) -> usize {
        match self {
            Ring::Uv => 2,
            Ring::T | Ring::Q => 1,
        }
    }

    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            Ring::Uv => &["u", "v"],
            Ring::T => &["t"],
            Ring::Q => &["q"],
        }
    }
}

/// Exponent vector. The second slot is always zero in a univariate ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u32; 2]);

impl Mono {
    pub const ONE: Mono = Mono([0, 0]);

    pub fn total(self) -> u64 {
        self.0[0] as u64 + self.0[1] as u64
    }

    fn mul(self, other: Mono) -> Mono {
        let e0 = self.0[0]
            .checked_add(other.0[0])
            .expect("exponent overflow");
        let e1 = self.0[1]
            .checked_add(other.0[1])
            .expect("exponent overflow");
        Mono([e0, e1])
    }

    fn divides(self, other: Mono) -> bool {
        self.0[0] <= other.0[0] && self.0[1] <= other.0[1]
    }

    fn div(self, by: Mono) -> Mono {
        Mono([self.0[0] - by.0[0], self.0[1] - by.0[1]])
    }

    /// Pure lexicographic comparison with `u > v`; used to pick leading terms
    /// during division.
    fn lex_cmp(self, other: Mono) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Graded order: total degree first, then the `u` exponent.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.0[0].cmp(&other.0[0]))
            .then(self.0[1].cmp(&other.0[1]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The quotient of an exact division attempt was not a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("quotient is not a polynomial")
    }
}

impl std::error::Error for NotDivisible {}

/// Sparse polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    ring: Ring,
    terms: BTreeMap<Mono, BigRat>,
}

impl MPoly {
    pub fn zero(ring: Ring) -> Self {
        MPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, BigRat::one())
    }

    pub fn constant(ring: Ring, c: BigRat) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Mono::ONE, c);
        p
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Self::constant(ring, BigRat::from_integer(BigInt::from(c)))
    }

    /// Single term `c * x^e0 * y^e1`. In a univariate ring `e1` must be zero.
    pub fn monomial(ring: Ring, exps: [u32; 2], c: BigRat) -> Self {
        assert!(
            ring.nvars() == 2 || exps[1] == 0,
            "second exponent given for univariate ring {ring:?}"
        );
        let mut p = Self::zero(ring);
        p.add_term(Mono(exps), c);
        p
    }

    pub fn t() -> Self {
        Self::monomial(Ring::T, [1, 0], BigRat::one())
    }

    pub fn q() -> Self {
        Self::monomial(Ring::Q, [1, 0], BigRat::one())
    }

    pub fn u() -> Self {
        Self::monomial(Ring::Uv, [1, 0], BigRat::one())
    }

    pub fn v() -> Self {
        Self::monomial(Ring::Uv, [0, 1], BigRat::one())
    }

    /// `(uv)^k`.
    pub fn uv_pow(k: u32) -> Self {
        Self::monomial(Ring::Uv, [k, k], BigRat::one())
    }

    /// `x^k` in a univariate ring.
    pub fn var_pow(ring: Ring, k: u32) -> Self {
        assert_eq!(ring.nvars(), 1, "var_pow needs a univariate ring");
        Self::monomial(ring, [k, 0], BigRat::one())
    }

    /// Build from explicit `(exponents, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = ([u32; 2], BigRat)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert!(ring.nvars() == 2 || e[1] == 0);
            p.add_term(Mono(e), c);
        }
        p
    }

    /// Dense univariate constructor, `coeffs[k]` is the coefficient of `x^k`.
    pub fn from_coeffs(ring: Ring, coeffs: &[i64]) -> Self {
        assert_eq!(ring.nvars(), 1);
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| ([k as u32, 0], BigRat::from_integer(BigInt::from(c)))),
        )
    }

    fn add_term(&mut self, m: Mono, c: BigRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Mono::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded order (total degree, then `u` exponent).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigRat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: [u32; 2]) -> BigRat {
        self.terms
            .get(&Mono(exps))
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    pub fn constant_term(&self) -> BigRat {
        self.coeff([0, 0])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total()).max()
    }

    /// Degree in a univariate ring, or the maximal exponent of `u` in `Uv`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0[0]).max()
    }

    /// Smallest exponent occurring (univariate use).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0[0]).min()
    }

    /// Coefficients `0..=degree` of a univariate polynomial.
    pub fn dense_coeffs(&self) -> Vec<BigRat> {
        assert_eq!(
            self.ring.nvars(),
            1,
            "dense_coeffs on a bivariate polynomial"
        );
        let deg = match self.degree() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![BigRat::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.0[0] as usize] = c.clone();
        }
        out
    }

    /// Resolve the ring two operands share. A constant adopts the other
    /// operand's ring; otherwise the rings must match.
    fn common_ring(&self, other: &MPoly) -> Ring {
        if self.ring == other.ring || other.is_constant() {
            self.ring
        } else if self.is_constant() {
            other.ring
        } else {
            panic!(
                "variable mismatch: {:?} polynomial combined with {:?} polynomial",
                self.ring, other.ring
            )
        }
    }

    pub fn scale(&self, c: &BigRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.ring);
        }
        MPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MPoly {
        self.scale(&BigRat::from_integer(BigInt::from(c)))
    }

    /// Multiply by a monomial with coefficient one.
    pub fn shift(&self, exps: [u32; 2]) -> MPoly {
        let m = Mono(exps);
        MPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exchange `u` and `v`. Identity on univariate rings.
    pub fn swap_uv(&self) -> MPoly {
        if self.ring != Ring::Uv {
            return self.clone();
        }
        MPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono([m.0[1], m.0[0]]), c.clone()))
                .collect(),
        }
    }

    /// Embedding `q^k -> (uv)^k`.
    pub fn embed_q(&self) -> MPoly {
        assert!(
            self.ring == Ring::Q || self.is_constant(),
            "embed_q expects a polynomial in q"
        );
        MPoly {
            ring: Ring::Uv,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono([m.0[0], m.0[0]]), c.clone()))
                .collect(),
        }
    }

    /// Substitute `u = v = t`.
    pub fn diagonal(&self) -> MPoly {
        assert!(
            self.ring == Ring::Uv || self.is_constant(),
            "diagonal substitution expects a polynomial in u, v"
        );
        let mut out = MPoly::zero(Ring::T);
        for (m, c) in &self.terms {
            let e = m.0[0].checked_add(m.0[1]).expect("exponent overflow");
            out.add_term(Mono([e, 0]), c.clone());
        }
        out
    }

    /// Substitute `t^2 -> uv` in an even polynomial in `t`.
    ///
    /// Returns `None` if an odd power of `t` occurs.
    pub fn even_t_to_uv(&self) -> Option<MPoly> {
        assert!(self.ring == Ring::T || self.is_constant());
        let mut out = MPoly::zero(Ring::Uv);
        for (m, c) in &self.terms {
            if m.0[0] % 2 != 0 {
                return None;
            }
            let k = m.0[0] / 2;
            out.add_term(Mono([k, k]), c.clone());
        }
        Some(out)
    }

    /// Keep only terms of total degree `<= max_total`.
    pub fn truncate_total(&self, max_total: u64) -> MPoly {
        MPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() <= max_total)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at a point; the second coordinate is ignored for univariate rings.
    pub fn eval(&self, x: &BigRat, y: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            term *= pow_rat(x, m.0[0]);
            if m.0[1] > 0 {
                term *= pow_rat(y, m.0[1]);
            }
            acc += term;
        }
        acc
    }

    /// Evaluate a univariate polynomial.
    pub fn eval1(&self, x: &BigRat) -> BigRat {
        self.eval(x, &BigRat::zero())
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn leading_lex(&self) -> Option<(Mono, &BigRat)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.lex_cmp(*b.0))
            .map(|(m, c)| (*m, c))
    }

    /// Exact division.
    ///
    /// Repeatedly cancels the lexicographically leading term (`u > v`) of the
    /// running remainder against the divisor's. With a single divisor this
    /// terminates with a zero remainder exactly when `other` divides `self`;
    /// it is the same computation as long division in the last variable with
    /// coefficients required to stay polynomial.
    ///
    /// # Panics
    /// Panics if `other` is zero.
    pub fn exact_div(&self, other: &MPoly) -> Result<MPoly, NotDivisible> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let ring = self.common_ring(other);
        let (lead_m, lead_c) = other.leading_lex().expect("nonzero divisor");
        let lead_inv = lead_c.recip();
        // remainder keyed by the raw exponent array, whose Ord is lex
        let mut rem: BTreeMap<[u32; 2], BigRat> =
            self.terms.iter().map(|(m, c)| (m.0, c.clone())).collect();
        let mut quot = MPoly::zero(ring);
        while let Some((&m, c)) = rem.iter().next_back() {
            let m = Mono(m);
            if !lead_m.divides(m) {
                return Err(NotDivisible);
            }
            let qm = m.div(lead_m);
            let qc = c * &lead_inv;
            for (dm, dc) in &other.terms {
                let key = dm.mul(qm).0;
                let delta = -(dc * &qc);
                use std::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Division with remainder in a univariate ring.
    pub fn div_rem(&self, other: &MPoly) -> (MPoly, MPoly) {
        assert_eq!(self.ring.nvars(), 1);
        assert!(!other.is_zero(), "division by the zero polynomial");
        let ring = self.common_ring(other);
        let (lead_m, lead_c) = other.leading_lex().expect("nonzero divisor");
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        rem.ring = ring;
        let mut quot = MPoly::zero(ring);
        loop {
            let (m, c) = match rem.leading_lex() {
                Some((m, c)) if lead_m.divides(m) => (m, c.clone()),
                _ => break,
            };
            let qm = m.div(lead_m);
            let qc = c * &lead_inv;
            for (dm, dc) in &other.terms {
                rem.add_term(dm.mul(qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        (quot, rem)
    }

    /// Monic greatest common divisor of two univariate polynomials.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.ring.nvars(), 1);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading_lex() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

fn pow_rat(x: &BigRat, e: u32) -> BigRat {
    num_traits::pow(x.clone(), e as usize)
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let ring = self.common_ring(rhs);
        let mut out = self.clone();
        out.ring = ring;
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let ring = self.common_ring(rhs);
        let mut out = self.clone();
        out.ring = ring;
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let ring = self.common_ring(rhs);
        let mut out = MPoly::zero(ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Graded order, explicit `+`/`-` separators, `*` between factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.ring.var_names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Mono::ONE {
                factors.push(abs.to_string());
            }
            for (k, name) in names.iter().enumerate() {
                match m.0[k] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(cs: &[i64]) -> MPoly {
        MPoly::from_coeffs(Ring::T, cs)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&t(&[1, 1]) * &t(&[1, -1]), t(&[1, 0, -1]));
    }

    #[test]
    fn multiplicative_identity_and_annihilator() {
        let p = (MPoly::one(Ring::Uv) + MPoly::u()) * (MPoly::one(Ring::Uv) + MPoly::v());
        assert_eq!(&p * &MPoly::one(Ring::Uv), p);
        assert!((&p * &MPoly::zero(Ring::Uv)).is_zero());
    }

    #[test]
    fn geometric_factor_division() {
        let q = t(&[1, 0, 0, 0, -1]).exact_div(&t(&[1, 0, -1])).unwrap();
        assert_eq!(q, t(&[1, 0, 1]));
    }

    #[test]
    fn bivariate_non_divisible() {
        let one = MPoly::one(Ring::Uv);
        let a = (&one + &MPoly::u()).pow(2) * (&one + &MPoly::v()).pow(2);
        let b = &one + &MPoly::uv_pow(1);
        assert_eq!(a.exact_div(&b), Err(NotDivisible));
    }

    #[test]
    fn self_division() {
        let p = (MPoly::u() - MPoly::v().pow(3)).pow(3);
        assert_eq!(p.exact_div(&p).unwrap(), MPoly::one(Ring::Uv));
    }

    #[test]
    fn constants_adopt_ring() {
        let s = &MPoly::from_int(Ring::Q, 2) + &MPoly::t();
        assert_eq!(s.ring(), Ring::T);
    }

    #[test]
    #[should_panic(expected = "variable mismatch")]
    fn mixing_rings_panics() {
        let _ = &MPoly::t() + &MPoly::q();
    }

    #[test]
    fn q_is_not_uv_until_embedded() {
        let e = MPoly::q().pow(3).embed_q();
        assert_eq!(e, MPoly::uv_pow(3));
    }

    #[test]
    fn display_graded() {
        let p = t(&[1, 0, -2, 0, 1]);
        assert_eq!(p.to_string(), "1 - 2*t^2 + t^4");
        let b = MPoly::u() * MPoly::v() + MPoly::from_int(Ring::Uv, 3);
        assert_eq!(b.to_string(), "3 + u*v");
    }

    #[test]
    fn gcd_univariate() {
        // (t-1)^2 (t+2) and (t-1)(t+3)
        let a = t(&[-1, 1]).pow(2) * t(&[2, 1]);
        let b = t(&[-1, 1]) * t(&[3, 1]);
        assert_eq!(a.gcd(&b), t(&[-1, 1]));
    }
}
