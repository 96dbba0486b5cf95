//! Stringy E-function of the moduli space `M0`, computed from the
//! stratification of Kirwan's desingularization by the three exceptional
//! divisors, together with its closed form, the intersection cohomology
//! E-polynomial, and the stringy Euler number.
//!
//! All E-polynomials live in `Ring::Uv`. Those that depend on `uv` only are
//! still written bivariately so they multiply directly against the strata
//! that depend on `u` and `v` separately.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{series_expand, BigRat, MPoly, RatFun, Ring};
use crate::grassmann::{grassmann_e, pp_pair_e_split, projective_e, GrassmannSpec};
use crate::report::{Entry, VerificationReport};

/// Discrepancy coefficients of the three exceptional divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiscrepancySpec {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
}

impl DiscrepancySpec {
    pub fn as_array(&self) -> [u32; 3] {
        [self.a1, self.a2, self.a3]
    }
}

/// `(3g - 1, g - 2, 2g - 2)`.
pub fn discrepancy_coeffs(g: u32) -> Result<DiscrepancySpec> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { g, min: 2 });
    }
    Ok(DiscrepancySpec {
        a1: 3 * g - 1,
        a2: g - 2,
        a3: 2 * g - 2,
    })
}

/// A locally closed stratum: points lying on exactly the divisors in the
/// subset. The empty subset is the open part `M0^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumId(u8);

impl StratumId {
    pub const OPEN: StratumId = StratumId(0);

    /// All eight strata, open part first, then by size.
    pub const ALL: [StratumId; 8] = [
        StratumId(0b000),
        StratumId(0b001),
        StratumId(0b010),
        StratumId(0b100),
        StratumId(0b011),
        StratumId(0b101),
        StratumId(0b110),
        StratumId(0b111),
    ];

    /// From divisor indices in `1..=3`.
    pub fn new(divisors: &[u8]) -> Result<Self> {
        let mut mask = 0u8;
        for &i in divisors {
            if !(1..=3).contains(&i) {
                return Err(Error::Parse(format!("divisor index {i} outside 1..=3")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(StratumId(mask))
    }

    pub fn contains(self, i: u8) -> bool {
        (1..=3).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn divisors(self) -> impl Iterator<Item = u8> {
        (1..=3).filter(move |&i| self.contains(i))
    }

    pub fn is_open(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.divisors().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", ds.join(","))
    }
}

fn check_genus(g: u32, min: u32) -> Result<()> {
    if g < min {
        return Err(Error::GenusOutOfRange { g, min });
    }
    Ok(())
}

fn q(k: u32) -> MPoly {
    MPoly::uv_pow(k)
}

fn one() -> MPoly {
    MPoly::one(Ring::Uv)
}

fn qm1(k: u32) -> MPoly {
    &q(k) - &one()
}

fn pow2(e: u32) -> BigRat {
    BigRat::from_integer(BigInt::one() << e)
}

fn half() -> BigRat {
    BigRat::new(BigInt::one(), BigInt::from(2))
}

/// `(1 - u)^g (1 - v)^g` and `(1 + u)^g (1 + v)^g`.
fn jacobian_factors(g: u32) -> (MPoly, MPoly) {
    let (u, v) = (MPoly::u(), MPoly::v());
    let minus = (&one() - &u).pow(g) * (&one() - &v).pow(g);
    let plus = (&one() + &u).pow(g) * (&one() + &v).pow(g);
    (minus, plus)
}

/// `((1 - u^2 v)^g (1 - u v^2)^g - (uv)^{g+1} (1-u)^g (1-v)^g) / ((1-uv)(1-(uv)^2))`
fn leading_term(g: u32) -> RatFun {
    let (u, v) = (MPoly::u(), MPoly::v());
    let (minus, _) = jacobian_factors(g);
    let a = (&one() - &(&u.pow(2) * &v)).pow(g);
    let b = (&one() - &(&u * &v.pow(2))).pow(g);
    let num = &(&a * &b) - &(&q(g + 1) * &minus);
    RatFun::new(num, &(&one() - &q(1)) * &(&one() - &q(2)))
}

fn closed_denominator() -> MPoly {
    &(&one() - &q(1)) * &(&one() - &q(2))
}

/// Leading term minus `prefactor * ((1-u)^g(1-v)^g / (1-uv) + sign (1+u)^g(1+v)^g / (1+uv))`,
/// over the common denominator `(1-uv)(1-(uv)^2)`.
fn two_term_form(g: u32, prefactor: &MPoly, sign: i64) -> RatFun {
    let (minus, plus) = jacobian_factors(g);
    let terms = [
        leading_term(g),
        RatFun::new(-(prefactor * &minus), &one() - &q(1)),
        RatFun::new((prefactor * &plus).scale_int(-sign), &one() + &q(1)),
    ];
    RatFun::combine_over(&terms, &closed_denominator())
        .expect("denominators divide (1-uv)(1-(uv)^2)")
}

/// `E(M0^s)`, the open stratum. Certified to be a polynomial.
pub fn smooth_part_e(g: u32) -> Result<MPoly> {
    check_genus(g, 3)?;
    let f = two_term_form(g, &MPoly::constant(Ring::Uv, half()), 1);
    f.to_poly().map_err(|_| Error::FormulaNotPolynomial {
        what: format!("E(M0^s) for g = {g}"),
    })
}

/// Denominator `(uv)^{a_i + 1} - 1` of the weight of divisor `i`.
fn weight_denominator(d: &DiscrepancySpec, i: u8) -> MPoly {
    let a = match i {
        1 => d.a1,
        2 => d.a2,
        3 => d.a3,
        _ => unreachable!("divisor index checked by StratumId"),
    };
    qm1(a + 1)
}

/// `prod_{i in I} (uv - 1) / ((uv)^{a_i + 1} - 1)`, kept unexpanded.
pub fn batyrev_weight(id: StratumId, g: u32) -> Result<RatFun> {
    check_genus(g, 3)?;
    let d = discrepancy_coeffs(g)?;
    let mut num = one();
    let mut den = one();
    for i in id.divisors() {
        num = &num * &qm1(1);
        den = &den * &weight_denominator(&d, i);
    }
    Ok(RatFun::new(num, den))
}

/// E-polynomial of a boundary stratum, from the fiber structure over the
/// Grassmannians and the Jacobian.
pub fn stratum_e(id: StratumId, g: u32) -> Result<RatFun> {
    check_genus(g, 3)?;
    let n = pow2(2 * g);
    let gr2 = grassmann_e(GrassmannSpec::new(2, g)?)?;
    let gr3 = grassmann_e(GrassmannSpec::new(3, g)?)?;
    // (uv)^{g-2} - 1 over uv - 1
    let short = projective_e(g as i64 - 3);
    let mask = id.0;
    let p = match mask {
        0b000 => return Err(Error::EmptyStratum),
        // 2^{2g} ((uv)^5 - (uv)^2) E(Gr(3,g))
        0b001 => (&(&q(5) - &q(2)) * &gr3).scale(&n),
        // P^{g-2} x P^{g-2} bundle over Jac minus the 2-torsion points, mod Z2
        0b010 => {
            let (plus_part, minus_part) = pp_pair_e_split(g)?;
            let plus_part = plus_part
                .to_poly()
                .map_err(|_| Error::FormulaNotPolynomial {
                    what: "E(P^{g-2} x P^{g-2})^+".into(),
                })?;
            let minus_part = minus_part
                .to_poly()
                .map_err(|_| Error::FormulaNotPolynomial {
                    what: "E(P^{g-2} x P^{g-2})^-".into(),
                })?;
            let (jm, jp) = jacobian_factors(g);
            let (jm, jp) = (jm.scale(&half()), jp.scale(&half()));
            let inv = &(&jm + &jp) - &MPoly::constant(Ring::Uv, n);
            let anti = &jm - &jp;
            &(&inv * &plus_part) + &(&anti * &minus_part)
        }
        // 2^{2g} (uv)^g E(Gr(2,g))
        0b100 => (&q(g) * &gr2).scale(&n),
        // 2^{2g} ((uv)^2 + (uv)^3 + (uv)^4) E(Gr(3,g))
        0b011 => (&(&(&q(2) + &q(3)) + &q(4)) * &gr3).scale(&n),
        // 2^{2g} (uv)^2 ((uv)^{g-2} - 1)/(uv - 1) E(Gr(2,g))
        0b101 => (&(&q(2) * &short) * &gr2).scale(&n),
        // 2^{2g} (1 + uv) (uv)^{g-2} E(Gr(2,g))
        0b110 => (&(&(&one() + &q(1)) * &q(g - 2)) * &gr2).scale(&n),
        // 2^{2g} (1 + uv) ((uv)^{g-2} - 1)/(uv - 1) E(Gr(2,g))
        0b111 => (&(&(&one() + &q(1)) * &short) * &gr2).scale(&n),
        _ => unreachable!(),
    };
    Ok(RatFun::from_poly(p))
}

/// E-polynomial of any stratum, the open one included.
fn any_stratum_e(id: StratumId, g: u32) -> Result<MPoly> {
    if id.is_open() {
        return smooth_part_e(g);
    }
    Ok(stratum_e(id, g)?
        .to_poly()
        .expect("boundary strata are built as polynomials"))
}

/// `sum_I E(D_I) * weight(I)` over the eight strata, written over the product
/// of the three weight denominators.
pub fn stringy_e_sum(g: u32) -> Result<RatFun> {
    check_genus(g, 3)?;
    let d = discrepancy_coeffs(g)?;
    let common = (1..=3u8).fold(one(), |acc, i| &acc * &weight_denominator(&d, i));
    let mut terms = Vec::with_capacity(8);
    for id in StratumId::ALL {
        let w = batyrev_weight(id, g)?;
        let e = any_stratum_e(id, g)?;
        terms.push(RatFun::new(&e * w.num(), w.den().clone()));
    }
    Ok(RatFun::combine_over(&terms, &common).expect("weight denominators divide their product"))
}

/// Closed two-term form of the stringy E-function.
pub fn stringy_e_closed(g: u32) -> Result<RatFun> {
    check_genus(g, 2)?;
    Ok(two_term_form(g, &q(g - 1).scale(&half()), -1))
}

/// E-polynomial of the middle perversity intersection cohomology of `M0`.
/// Differs from [`stringy_e_closed`] by the sign `(-1)^{g-1}` on the last
/// term.
pub fn intersection_e(g: u32) -> Result<MPoly> {
    check_genus(g, 3)?;
    let sign = if g % 2 == 1 { 1 } else { -1 };
    two_term_form(g, &q(g - 1).scale(&half()), sign)
        .to_poly()
        .map_err(|_| Error::FormulaNotPolynomial {
            what: format!("IE(M0) for g = {g}"),
        })
}

/// Where a stringy Euler number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerSource {
    /// Limit of the closed form along `u = v = t -> 1`.
    Limit,
    /// Genus 2, where `M0` is `P^3`.
    ProjectiveSpace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerNumber {
    pub genus: u32,
    pub value: BigRat,
    pub source: EulerSource,
}

/// Stringy Euler number `lim_{u,v -> 1} E_st(M0)`.
pub fn stringy_euler(g: u32) -> Result<EulerNumber> {
    check_genus(g, 2)?;
    if g == 2 {
        return Ok(EulerNumber {
            genus: 2,
            value: BigRat::from_integer(BigInt::from(4)),
            source: EulerSource::ProjectiveSpace,
        });
    }
    let value = stringy_e_closed(g)?.substitute_diagonal()?.limit_at_one()?;
    Ok(EulerNumber {
        genus: g,
        value,
        source: EulerSource::Limit,
    })
}

/// Compare the `q^g` coefficient of `1/4 * 1/(1 - 4q)` with the stringy
/// Euler number.
pub fn generating_function_entry(g: u32) -> Result<Entry> {
    check_genus(g, 2)?;
    let f = RatFun::new(
        MPoly::constant(Ring::Q, BigRat::new(BigInt::one(), BigInt::from(4))),
        MPoly::from_coeffs(Ring::Q, &[1, -4]),
    );
    let series = series_expand(&f, g as usize)?;
    let coeff = series.coeff(g as usize).clone();
    let e = stringy_euler(g)?;
    let pass = coeff == e.value;
    Ok(Entry::new(
        "generating_function",
        g,
        pass,
        (!pass).then(|| {
            format!(
                "series coefficient {coeff}, stringy Euler number {}",
                e.value
            )
        }),
    ))
}

/// Check the generating function against `e_g` for every `g` in `2..=gmax`.
pub fn euler_generating_check(gmax: u32) -> Result<VerificationReport> {
    check_genus(gmax, 2)?;
    let mut report = VerificationReport::default();
    for g in 2..=gmax {
        report.push(generating_function_entry(g)?);
    }
    Ok(report)
}

/// Intersection numbers on the first exceptional divisor: curve classes
/// `(epsilon, sigma, gamma)` against divisor classes `(h, x, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingTable {
    pub entries: [[i64; 3]; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    Epsilon,
    Sigma,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorClass {
    H,
    X,
    E,
}

impl PairingTable {
    pub fn get(&self, curve: CurveClass, divisor: DivisorClass) -> i64 {
        self.entries[curve as usize][divisor as usize]
    }

    pub fn determinant(&self) -> i64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

pub fn ns_pairing() -> PairingTable {
    PairingTable {
        entries: [[0, 0, -1], [0, 1, 2], [1, 0, 0]],
    }
}

/// Value at `u = v = 0`, if the denominator does not vanish there.
pub fn value_at_origin(f: &RatFun) -> Option<BigRat> {
    f.eval(&BigRat::zero(), &BigRat::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> BigRat {
        BigRat::from_integer(BigInt::from(x))
    }

    fn q_poly(cs: &[i64]) -> MPoly {
        MPoly::from_coeffs(Ring::Q, cs).embed_q()
    }

    #[test]
    fn discrepancies() {
        let d = |g| discrepancy_coeffs(g).unwrap().as_array();
        assert_eq!(d(3), [8, 1, 4]);
        assert_eq!(d(4), [11, 2, 6]);
        assert_eq!(d(5), [14, 3, 8]);
        assert!(discrepancy_coeffs(1).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(
            batyrev_weight(StratumId::OPEN, 5).unwrap(),
            RatFun::one(Ring::Uv)
        );
        assert_eq!(
            batyrev_weight(StratumId::new(&[1]).unwrap(), 3).unwrap(),
            RatFun::new(qm1(1), qm1(9))
        );
        assert_eq!(
            batyrev_weight(StratumId::new(&[2, 3]).unwrap(), 3).unwrap(),
            RatFun::new(qm1(1).pow(2), &qm1(2) * &qm1(5))
        );
    }

    #[test]
    fn stratum_ids() {
        assert!(StratumId::new(&[4]).is_err());
        assert_eq!(StratumId::new(&[3, 1]).unwrap().to_string(), "{1,3}");
        assert_eq!(StratumId::OPEN.to_string(), "{}");
        assert_eq!(stratum_e(StratumId::OPEN, 3), Err(Error::EmptyStratum));
    }

    #[test]
    fn smooth_part_at_origin_and_symmetric() {
        for g in 3..6 {
            let e = smooth_part_e(g).unwrap();
            assert_eq!(e.constant_term(), BigRat::zero());
            assert_eq!(e.swap_uv(), e);
        }
    }

    #[test]
    fn genus_three_strata() {
        let s1 = stratum_e(StratumId::new(&[1]).unwrap(), 3).unwrap();
        assert_eq!(s1, RatFun::from_poly(q_poly(&[0, 0, -64, 0, 0, 64])));
        let s3 = stratum_e(StratumId::new(&[3]).unwrap(), 3).unwrap();
        assert_eq!(s3, RatFun::from_poly(q_poly(&[0, 0, 0, 64, 64, 64])));
    }

    #[test]
    fn stratum_two_depends_on_u_and_v_separately() {
        let s = stratum_e(StratumId::new(&[2]).unwrap(), 4)
            .unwrap()
            .to_poly()
            .unwrap();
        assert!(s.terms().any(|(m, _)| m.0[0] != m.0[1]));
        for id in StratumId::ALL
            .into_iter()
            .skip(1)
            .filter(|id| id.0 != 0b010)
        {
            let p = stratum_e(id, 4).unwrap().to_poly().unwrap();
            assert!(p.terms().all(|(m, _)| m.0[0] == m.0[1]), "stratum {id}");
        }
    }

    #[test]
    fn stratum_one_two_vanishes_at_origin() {
        for g in 3..7 {
            let s = stratum_e(StratumId::new(&[1, 2]).unwrap(), g).unwrap();
            assert_eq!(value_at_origin(&s), Some(BigRat::zero()));
        }
    }

    #[test]
    fn stringy_sum_at_origin() {
        assert_eq!(value_at_origin(&stringy_e_sum(3).unwrap()), Some(int(1)));
        for g in 2..7 {
            assert_eq!(value_at_origin(&stringy_e_closed(g).unwrap()), Some(int(1)));
        }
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(stringy_euler(2).unwrap().value, int(4));
        assert_eq!(
            stringy_euler(2).unwrap().source,
            EulerSource::ProjectiveSpace
        );
        assert_eq!(stringy_euler(3).unwrap().value, int(16));
        assert_eq!(stringy_euler(4).unwrap().value, int(64));
        assert!(stringy_euler(1).is_err());
    }

    #[test]
    fn generating_check_small() {
        let r = euler_generating_check(4).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.entries().len(), 3);
        let r = euler_generating_check(2).unwrap();
        assert_eq!(r.entries().len(), 1);
        assert!(r.all_pass());
    }

    #[test]
    fn pairing() {
        let p = ns_pairing();
        assert_eq!(p.get(CurveClass::Epsilon, DivisorClass::E), -1);
        assert_eq!(p.get(CurveClass::Sigma, DivisorClass::X), 1);
        // expand along the first row: only the (epsilon, e) entry is nonzero,
        // (-1) * det[[0,1],[1,0]] = (-1)(-1) = 1
        assert_eq!(p.determinant(), 1);
    }
}
