//! Betti numbers along the blow-up chain `M2 -> K -> K_sigma -> K_eps = S`.
//!
//! Everything is a polynomial (or series) in `t`. The equivariant series of
//! the semistable locus is corrected by the two Kirwan blow-ups to give
//! `P(M2)`; one more blow-up gives Kirwan's `K`, and two blow-downs give
//! `K_sigma` and Seshadri's `S`.
//!
//! Each closed formula is kept as a list of unreduced fractions. The
//! polynomial is obtained by clearing the denominator
//! `(1 - t^2)(1 - t^4)(1 + t^2)` and dividing exactly, which also certifies
//! that the formula is a polynomial at all. The same fractions expanded as
//! power series give an independent route to every coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{geometric_sum, series_expand, BigRat, MPoly, RatFun, Ring, TruncSeries};
use crate::grassmann::{grassmann_poincare, GrassmannSpec};

/// Spaces with a Betti table. `Rss` and `R1ss` are equivariant series of
/// the semistable locus and of its first blow-up, truncated at `6g - 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Rss,
    R1ss,
    M2,
    K,
    Ksigma,
    S,
}

impl Space {
    pub const ALL: [Space; 6] = [
        Space::Rss,
        Space::R1ss,
        Space::M2,
        Space::K,
        Space::Ksigma,
        Space::S,
    ];

    /// The smooth or orbifold compact spaces, whose tables are polynomials.
    pub const COMPACT: [Space; 4] = [Space::M2, Space::K, Space::Ksigma, Space::S];

    pub fn as_str(self) -> &'static str {
        match self {
            Space::Rss => "Rss",
            Space::R1ss => "R1ss",
            Space::M2 => "M2",
            Space::K => "K",
            Space::Ksigma => "Ksigma",
            Space::S => "S",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown space {s:?}")))
    }
}

/// Betti numbers of one space in one genus, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareTable {
    pub genus: u32,
    pub space: Space,
    pub betti: Vec<BigInt>,
}

impl PoincareTable {
    /// `6g - 6`, the real dimension of the compact spaces.
    pub fn top_degree(g: u32) -> usize {
        6 * g as usize - 6
    }

    fn from_coeffs(g: u32, space: Space, coeffs: &[BigRat]) -> Result<Self> {
        let what = || format!("P({space}) for g = {g}");
        let len = Self::top_degree(g) + 1;
        let mut betti = vec![BigInt::zero(); len];
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegral {
                    what: what(),
                    degree: k,
                });
            }
            if c.is_negative() {
                return Err(Error::NegativeBetti {
                    what: what(),
                    degree: k,
                });
            }
            if k < len {
                betti[k] = c.to_integer();
            } else if !c.is_zero() {
                return Err(Error::WrongDegree {
                    what: what(),
                    expected: len - 1,
                    found: coeffs.len() - 1,
                });
            }
        }
        Ok(PoincareTable {
            genus: g,
            space,
            betti,
        })
    }

    fn from_poly(g: u32, space: Space, p: &MPoly) -> Result<Self> {
        let coeffs = p.dense_coeffs();
        let expected = Self::top_degree(g);
        if coeffs.len() != expected + 1 {
            return Err(Error::WrongDegree {
                what: format!("P({space}) for g = {g}"),
                expected,
                found: coeffs.len().saturating_sub(1),
            });
        }
        Self::from_coeffs(g, space, &coeffs)
    }

    pub fn is_palindromic(&self) -> bool {
        self.betti.iter().eq(self.betti.iter().rev())
    }

    pub fn to_poly(&self) -> MPoly {
        MPoly::from_terms(
            Ring::T,
            self.betti
                .iter()
                .enumerate()
                .map(|(k, b)| ([k as u32, 0], BigRat::from_integer(b.clone()))),
        )
    }

    pub fn to_json(&self) -> Value {
        let betti: Vec<Value> = self.betti.iter().map(bigint_json).collect();
        json!({
            "genus": self.genus,
            "space": self.space.as_str(),
            "betti": betti,
        })
    }

    /// CSV rows `genus,space,degree,betti`, without the header.
    pub fn csv_rows(&self) -> impl Iterator<Item = String> + '_ {
        self.betti
            .iter()
            .enumerate()
            .map(move |(k, b)| format!("{},{},{},{}", self.genus, self.space, k, b))
    }
}

/// Exact JSON number for an arbitrary-size integer.
pub(crate) fn bigint_json(b: &BigInt) -> Value {
    serde_json::from_str(&b.to_string()).expect("integer literal is valid JSON")
}

fn check_genus(g: u32) -> Result<()> {
    if g < 3 {
        return Err(Error::GenusOutOfRange { g, min: 3 });
    }
    Ok(())
}

fn tp(k: u32) -> MPoly {
    MPoly::var_pow(Ring::T, k)
}

/// `t^lo + t^{lo+2} + ... + t^hi`, empty when `hi < lo`. Bounds may be
/// negative at small genus.
fn even_sum(lo: i64, hi: i64) -> MPoly {
    if hi < lo || hi < 0 {
        return MPoly::zero(Ring::T);
    }
    geometric_sum(Ring::T, lo.max(0) as u32, hi as u32, 2)
}

fn c(x: i64) -> MPoly {
    MPoly::from_int(Ring::T, x)
}

fn pow2(e: u32) -> BigRat {
    BigRat::from_integer(BigInt::one() << e)
}

fn half() -> BigRat {
    BigRat::new(BigInt::one(), BigInt::from(2))
}

fn frac(num: MPoly, den: MPoly) -> RatFun {
    RatFun::new(num, den)
}

fn one_minus(k: u32) -> MPoly {
    &c(1) - &tp(k)
}

/// `((1+t^3)^{2g} - t^{2g+2}(1+t)^{2g}) / ((1-t^2)(1-t^4))`.
fn equivariant_term(g: u32) -> RatFun {
    let n = 2 * g;
    let num = (&c(1) + &tp(3)).pow(n) - &tp(2 * g + 2) * &(&c(1) + &tp(1)).pow(n);
    frac(num, &one_minus(2) * &one_minus(4))
}

/// Correction from blowing up along the orbit of the `SL(2)`-fixed locus.
fn first_blowup_terms(g: u32) -> Vec<RatFun> {
    let g = g as i64;
    let w = pow2(2 * g as u32);
    vec![
        frac(even_sum(2, 6 * g - 2), one_minus(4)).scale(&w),
        frac(
            -(&tp((4 * g - 2) as u32) * &even_sum(0, 2 * g - 2)),
            one_minus(2),
        )
        .scale(&w),
    ]
}

/// Correction from blowing up along the proper transform of the
/// `C^*`-fixed locus.
fn second_blowup_terms(g: u32) -> Vec<RatFun> {
    let gi = g as i64;
    let w = pow2(2 * g);
    let outer = even_sum(2, 4 * gi - 6);
    let inner = even_sum(2, 2 * gi - 2);
    let plus = (&c(1) + &tp(1)).pow(2 * g);
    let minus = (&c(1) - &tp(1)).pow(2 * g);
    let lead = &tp(2 * g - 2) * &even_sum(0, 2 * gi - 4);
    vec![
        frac(&outer * &plus, one_minus(2)).scale(&half()),
        frac(&outer * &minus, &c(1) + &tp(2)).scale(&half()),
        frac(&outer * &inner, one_minus(4)).scale(&w),
        frac(-(&lead * &plus), one_minus(2)),
        frac(-(&lead * &inner), one_minus(2)).scale(&w),
    ]
}

/// The displayed summands of `P(M2)`: equivariant series plus both blow-up
/// corrections, as unreduced fractions.
pub fn m2_terms(g: u32) -> Result<Vec<RatFun>> {
    check_genus(g)?;
    let mut terms = vec![equivariant_term(g)];
    terms.extend(first_blowup_terms(g));
    terms.extend(second_blowup_terms(g));
    Ok(terms)
}

/// Grassmannian Poincare polynomial kept as the raw fraction of products.
fn grassmann_fraction(k: u32, n: u32) -> RatFun {
    let mut num = c(1);
    let mut den = c(1);
    for i in 1..=k {
        num = &num * &one_minus(2 * (n - k + i));
        den = &den * &one_minus(2 * i);
    }
    frac(num, den)
}

/// Summands of `P(space)` with every Grassmannian left as an unreduced
/// fraction, following the displayed closed formulas. This route never
/// touches the chain of polynomial corrections.
pub fn raw_terms(g: u32, space: Space) -> Result<Vec<RatFun>> {
    check_genus(g)?;
    let gi = g as i64;
    let w = pow2(2 * g);
    let gr2 = grassmann_fraction(2, g);
    let gr3 = grassmann_fraction(3, g);
    let mut terms = match space {
        Space::Rss => return Ok(vec![equivariant_term(g)]),
        Space::R1ss => {
            let mut t = vec![equivariant_term(g)];
            t.extend(first_blowup_terms(g));
            return Ok(t);
        }
        _ => m2_terms(g)?,
    };
    match space {
        Space::M2 => {}
        Space::K => {
            let factor = &(&c(1) + &tp(2) + &tp(4)) * &even_sum(2, 2 * gi - 4);
            terms.push((&gr2 * &RatFun::from_poly(factor)).scale(&w));
        }
        Space::Ksigma | Space::S => {
            // P(K_sigma) = P(M2) + 2^{2g} P(Gr(2,g)) (t^6 - t^{2g-2}) / (1 - t^2)
            let tail = frac(&tp(6) - &tp(2 * g - 2), one_minus(2));
            terms.push((&gr2 * &tail).scale(&w));
            if space == Space::S {
                let f = RatFun::from_poly(even_sum(2, 10));
                terms.push((&gr3 * &f).scale(&(-w)));
            }
        }
        Space::Rss | Space::R1ss => unreachable!(),
    }
    Ok(terms)
}

/// Clear the common denominator `(1-t^2)(1-t^4)(1+t^2)` of a list of
/// fractions and divide exactly.
fn certify(terms: &[RatFun], what: &str) -> Result<MPoly> {
    let common = &(&one_minus(2) * &one_minus(4)) * &(&c(1) + &tp(2));
    RatFun::combine_over(terms, &common)
        .and_then(|f| f.to_poly())
        .map_err(|_| Error::FormulaNotPolynomial {
            what: what.to_string(),
        })
}

/// Sum of the series expansions of a list of fractions.
pub fn expand_terms(terms: &[RatFun], order: usize) -> Result<TruncSeries> {
    let mut acc = TruncSeries::zero(Ring::T, order);
    for term in terms {
        acc = &acc + &series_expand(term, order)?;
    }
    Ok(acc)
}

/// Equivariant Poincare series of the semistable locus through degree `order`.
pub fn equivariant_series(g: u32, order: usize) -> Result<TruncSeries> {
    check_genus(g)?;
    series_expand(&equivariant_term(g), order)
}

/// Equivariant Poincare series after the first blow-up.
pub fn first_blowup_series(g: u32, order: usize) -> Result<TruncSeries> {
    check_genus(g)?;
    expand_terms(&raw_terms(g, Space::R1ss)?, order)
}

/// All four polynomials of the chain, with the three blow-up corrections.
#[derive(Debug, Clone)]
pub struct PoincareChain {
    pub genus: u32,
    pub m2: MPoly,
    pub k: MPoly,
    pub ksigma: MPoly,
    pub s: MPoly,
    /// `P(K) - P(M2)`
    pub k_correction: MPoly,
    /// `P(K) - P(K_sigma)`
    pub sigma_correction: MPoly,
    /// `P(K_sigma) - P(S)`
    pub eps_correction: MPoly,
}

impl PoincareChain {
    pub fn compute(g: u32) -> Result<Self> {
        check_genus(g)?;
        let gi = g as i64;
        let w = pow2(2 * g);
        let gr2 = grassmann_poincare(GrassmannSpec::new(2, g)?)?;
        let gr3 = grassmann_poincare(GrassmannSpec::new(3, g)?)?;

        let m2 = certify(&m2_terms(g)?, &format!("P(M2) for g = {g}"))?;
        let k_correction =
            (&(&(&c(1) + &tp(2) + &tp(4)) * &gr2) * &even_sum(2, 2 * gi - 4)).scale(&w);
        let sigma_correction = (&(&even_sum(0, 2 * gi - 4) * &gr2) * &(&tp(2) + &tp(4))).scale(&w);
        let eps_correction = (&gr3 * &even_sum(2, 10)).scale(&w);

        let k = &m2 + &k_correction;
        let ksigma = &k - &sigma_correction;
        let s = &ksigma - &eps_correction;
        Ok(PoincareChain {
            genus: g,
            m2,
            k,
            ksigma,
            s,
            k_correction,
            sigma_correction,
            eps_correction,
        })
    }

    pub fn poly(&self, space: Space) -> Option<&MPoly> {
        match space {
            Space::M2 => Some(&self.m2),
            Space::K => Some(&self.k),
            Space::Ksigma => Some(&self.ksigma),
            Space::S => Some(&self.s),
            Space::Rss | Space::R1ss => None,
        }
    }

    pub fn table(&self, space: Space) -> Result<PoincareTable> {
        let p = self
            .poly(space)
            .ok_or_else(|| Error::Parse(format!("{space} is not part of the chain")))?;
        PoincareTable::from_poly(self.genus, space, p)
    }
}

/// `P(M2)`, the partial desingularization.
pub fn partial_desing_poincare(g: u32) -> Result<PoincareTable> {
    PoincareChain::compute(g)?.table(Space::M2)
}

/// `P(K)`, Kirwan's desingularization.
pub fn full_desing_poincare(g: u32) -> Result<PoincareTable> {
    PoincareChain::compute(g)?.table(Space::K)
}

/// `P(K_sigma)`, after contracting the first extremal ray.
pub fn sigma_contraction_poincare(g: u32) -> Result<PoincareTable> {
    PoincareChain::compute(g)?.table(Space::Ksigma)
}

/// `P(S)`. The chain result is checked against the closed formula assembled
/// from raw fractions; a disagreement is an error.
pub fn seshadri_poincare(g: u32) -> Result<PoincareTable> {
    let chain = PoincareChain::compute(g)?;
    let closed = seshadri_closed(g)?;
    if closed != chain.s {
        return Err(Error::FormulaMismatch {
            what: format!("P(S) for g = {g}"),
        });
    }
    chain.table(Space::S)
}

/// `P(S)` from the one-shot closed formula, summed as fractions and divided.
pub fn seshadri_closed(g: u32) -> Result<MPoly> {
    closed_poly(g, Space::S)
}

/// `P(space)` from [`raw_terms`], summed as fractions and divided exactly.
pub fn closed_poly(g: u32, space: Space) -> Result<MPoly> {
    let terms = raw_terms(g, space)?;
    RatFun::sum(Ring::T, &terms)
        .to_poly()
        .map_err(|_| Error::FormulaNotPolynomial {
            what: format!("closed formula for P({space}), g = {g}"),
        })
}

/// Table for any space; the equivariant ones are truncated at `6g - 6`.
pub fn poincare_table(g: u32, space: Space) -> Result<PoincareTable> {
    match space {
        Space::Rss | Space::R1ss => {
            let order = PoincareTable::top_degree(g.max(3));
            let s = expand_terms(&raw_terms(g, space)?, order)?;
            PoincareTable::from_coeffs(g, space, s.coeffs())
        }
        Space::S => seshadri_poincare(g),
        _ => PoincareChain::compute(g)?.table(space),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    fn b(t: &PoincareTable, k: usize) -> i64 {
        i64::try_from(&t.betti[k]).unwrap()
    }

    #[test]
    fn genus_two_rejected() {
        assert_eq!(
            partial_desing_poincare(2),
            Err(Error::GenusOutOfRange { g: 2, min: 3 })
        );
        assert!(equivariant_series(2, 4).is_err());
    }

    #[test]
    fn equivariant_prefix() {
        assert_eq!(
            ints(&equivariant_series(3, 4).unwrap()),
            vec![1, 0, 1, 6, 2]
        );
        assert_eq!(ints(&equivariant_series(4, 3).unwrap())[3], 8);
    }

    #[test]
    fn first_blowup_low_degrees() {
        let s = ints(&first_blowup_series(3, 4).unwrap());
        assert_eq!(&s[..3], &[1, 0, 65]);
    }

    #[test]
    fn genus_three_second_betti() {
        let chain = PoincareChain::compute(3).unwrap();
        let b2: Vec<i64> = Space::COMPACT
            .iter()
            .map(|&s| b(&chain.table(s).unwrap(), 2))
            .collect();
        assert_eq!(b2, vec![66, 130, 66, 2]);
    }

    #[test]
    fn seshadri_genus_three_ends() {
        let t = seshadri_poincare(3).unwrap();
        assert_eq!(t.betti.len(), 13);
        assert_eq!(b(&t, 0), 1);
        assert_eq!(b(&t, 12), 1);
        assert!(t.is_palindromic());
    }

    #[test]
    fn sigma_genus_four_palindromic() {
        let t = sigma_contraction_poincare(4).unwrap();
        assert_eq!(t.betti.len(), 19);
        assert!(t.is_palindromic());
    }

    #[test]
    fn space_names_roundtrip() {
        for s in Space::ALL {
            assert_eq!(s.as_str().parse::<Space>().unwrap(), s);
        }
        assert!("Gr(2,3)".parse::<Space>().is_err());
    }

    #[test]
    fn csv_and_json_shape() {
        let t = seshadri_poincare(3).unwrap();
        let rows: Vec<String> = t.csv_rows().collect();
        assert_eq!(rows.first().unwrap(), "3,S,0,1");
        assert_eq!(rows.last().unwrap(), "3,S,12,1");
        assert_eq!(
            t.to_json().to_string(),
            r#"{"genus":3,"space":"S","betti":[1,0,2,6,17,6,96,6,17,6,2,0,1]}"#
        );
    }
}
