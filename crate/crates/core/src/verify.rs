//! The identity suite behind `modinv verify`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::Result;
use crate::exact::{poly_to_json, BigRat, MPoly, RatFun};
use crate::grassmann::{grassmann_e, pp_pair_e_split, projective_e, GrassmannSpec};
use crate::kirwan::{closed_poly, expand_terms, raw_terms, PoincareChain, PoincareTable, Space};
use crate::report::{Entry, VerificationReport};
use crate::stringy::{
    discrepancy_coeffs, generating_function_entry, intersection_e, smooth_part_e, stratum_e,
    stringy_e_closed, stringy_e_sum, stringy_euler, StratumId,
};

fn poly_witness(p: &MPoly) -> String {
    poly_to_json(p).to_string()
}

/// Turn an evaluation error into a failing entry.
fn guarded(identity: &str, g: u32, f: impl FnOnce() -> Result<Entry>) -> Entry {
    f().unwrap_or_else(|e| Entry::failed(identity, g, e.to_string()))
}

fn check_discrepancy(g: u32) -> Result<Entry> {
    let d = discrepancy_coeffs(g)?.as_array();
    let mut ok = d == [3 * g - 1, g - 2, 2 * g - 2];
    if g == 3 {
        // the corrected genus-3 divisor 8 D1 + D2 + 4 D3
        ok &= d == [8, 1, 4];
    }
    Ok(Entry::check("discrepancy", g, ok, || format!("{d:?}")))
}

fn check_theorem(g: u32, closed: &RatFun) -> Result<Entry> {
    let sum = stringy_e_sum(g)?;
    let diff = sum.cross_difference(closed);
    Ok(Entry::check("thm6.1", g, diff.is_zero(), || {
        poly_witness(&diff)
    }))
}

fn check_symmetry(g: u32, closed: &RatFun) -> Entry {
    let diff = closed.cross_difference(&closed.swap_uv());
    Entry::check("uv_symmetry", g, diff.is_zero(), || poly_witness(&diff))
}

fn check_parity(g: u32, closed: &RatFun) -> Result<Vec<Entry>> {
    let divisible = closed.to_poly().is_ok();
    let even = g.is_multiple_of(2);
    let parity = Entry::check("parity_polynomial", g, divisible == even, || {
        format!("polynomial = {divisible} for g = {g}")
    });
    let ie = intersection_e(g)?;
    let equal = closed.equals(&RatFun::from_poly(ie));
    let cmp = Entry::check("ie_comparison", g, equal == even, || {
        format!("E_st == IE is {equal} for g = {g}")
    });
    Ok(vec![parity, cmp])
}

fn check_polynomiality(g: u32) -> Vec<Entry> {
    vec![
        guarded("smooth_part_polynomial", g, || {
            let e = smooth_part_e(g)?;
            Ok(Entry::check(
                "smooth_part_polynomial",
                g,
                e.swap_uv() == e,
                || "E(M0^s) not symmetric in u, v".into(),
            ))
        }),
        guarded("ie_polynomial", g, || {
            let e = intersection_e(g)?;
            Ok(Entry::check("ie_polynomial", g, e.swap_uv() == e, || {
                "IE(M0) not symmetric in u, v".into()
            }))
        }),
    ]
}

fn check_euler(g: u32) -> Result<Entry> {
    let e = stringy_euler(g)?;
    let expected = BigRat::from_integer(BigInt::from(4).pow(g - 1));
    Ok(Entry::check("euler", g, e.value == expected, || {
        format!("got {}, expected {expected}", e.value)
    }))
}

fn table_entry(chain: &PoincareChain, space: Space) -> Entry {
    let g = chain.genus;
    let id = format!("poincare_{space}");
    match chain.table(space) {
        Err(e) => Entry::failed(&id, g, e.to_string()),
        Ok(t) => {
            let ok = t.is_palindromic() && t.betti[0].is_one();
            Entry::check(&id, g, ok, || {
                let betti: Vec<String> = t.betti.iter().map(|b| b.to_string()).collect();
                format!("betti = [{}]", betti.join(","))
            })
        }
    }
}

fn check_chain(chain: &PoincareChain) -> Result<Entry> {
    let g = chain.genus;
    let raw = |s| closed_poly(g, s);
    let (m2, k, ks, s) = (
        raw(Space::M2)?,
        raw(Space::K)?,
        raw(Space::Ksigma)?,
        raw(Space::S)?,
    );
    let checks = [
        ("P(K) - P(M2)", &k - &m2, &chain.k_correction),
        ("P(K) - P(K_sigma)", &k - &ks, &chain.sigma_correction),
        ("P(K_sigma) - P(S)", &ks - &s, &chain.eps_correction),
    ];
    for (name, diff, expected) in checks {
        if &diff != expected {
            return Ok(Entry::failed(
                "chain_consistency",
                g,
                format!("{name}: {}", poly_witness(&(&diff - expected))),
            ));
        }
    }
    Ok(Entry::passed("chain_consistency", g))
}

fn check_series_oracle(chain: &PoincareChain) -> Result<Entry> {
    let g = chain.genus;
    let order = 6 * g as usize;
    for space in Space::COMPACT {
        let series = expand_terms(&raw_terms(g, space)?, order)?;
        let poly = chain.poly(space).expect("compact space");
        for k in 0..=order {
            let from_poly = poly.coeff([k as u32, 0]);
            let from_series = series.coeff(k);
            let tail_ok = k <= PoincareTable::top_degree(g) || from_series.is_zero();
            if &from_poly != from_series || !tail_ok {
                return Ok(Entry::failed(
                    "series_oracle",
                    g,
                    format!("P({space}) degree {k}: polynomial {from_poly}, series {from_series}"),
                ));
            }
        }
    }
    Ok(Entry::passed("series_oracle", g))
}

fn check_pp_split(g: u32) -> Result<Entry> {
    let (plus, minus) = pp_pair_e_split(g)?;
    let polys = plus.to_poly().is_ok() && minus.to_poly().is_ok();
    let square = RatFun::from_poly(projective_e(g as i64 - 2).pow(2));
    let diff = (&plus + &minus).cross_difference(&square);
    Ok(Entry::check(
        "pp_pair_split",
        g,
        polys && diff.is_zero(),
        || {
            if polys {
                poly_witness(&diff)
            } else {
                "E+ or E- is not a polynomial".into()
            }
        },
    ))
}

fn check_stratum_three(g: u32) -> Result<Entry> {
    let id = "stratum3_inclusion_exclusion";
    let n = BigRat::from_integer(BigInt::one() << (2 * g));
    let s3 = stratum_e(StratumId::new(&[3])?, g)?;
    let gr2 = grassmann_e(GrassmannSpec::new(2, g)?)?;
    let direct = (&MPoly::uv_pow(g) * &gr2).scale(&n);
    // fiber P^2 x P^{g-2} minus (P^2 x P^{g-3} union P^1 x P^{g-2})
    let pe = |k: i64| projective_e(k);
    let gi = g as i64;
    let fiber = &(&(&pe(2) * &pe(gi - 2)) - &(&pe(2) * &pe(gi - 3))) - &(&pe(1) * &pe(gi - 2))
        + &(&pe(1) * &pe(gi - 3));
    let by_fiber = (&fiber * &gr2).scale(&n);
    let d1 = s3.cross_difference(&RatFun::from_poly(direct));
    let d2 = s3.cross_difference(&RatFun::from_poly(by_fiber));
    Ok(Entry::check(id, g, d1.is_zero() && d2.is_zero(), || {
        format!(
            "direct: {}, fiber: {}",
            poly_witness(&d1),
            poly_witness(&d2)
        )
    }))
}

/// Every check for one genus. Genus 2 only has the Euler number and the
/// generating function.
pub fn checks_for_genus(g: u32) -> Vec<Entry> {
    let mut out = vec![
        guarded("euler", g, || check_euler(g)),
        guarded("generating_function", g, || generating_function_entry(g)),
    ];
    if g < 3 {
        return out;
    }
    out.push(guarded("discrepancy", g, || check_discrepancy(g)));
    match stringy_e_closed(g) {
        Ok(closed) => {
            out.push(guarded("thm6.1", g, || check_theorem(g, &closed)));
            out.push(check_symmetry(g, &closed));
            match check_parity(g, &closed) {
                Ok(es) => out.extend(es),
                Err(e) => out.push(Entry::failed("parity_polynomial", g, e.to_string())),
            }
        }
        Err(e) => out.push(Entry::failed("thm6.1", g, e.to_string())),
    }
    out.extend(check_polynomiality(g));
    match PoincareChain::compute(g) {
        Ok(chain) => {
            for space in Space::COMPACT {
                out.push(table_entry(&chain, space));
            }
            out.push(guarded("chain_consistency", g, || check_chain(&chain)));
            out.push(guarded("series_oracle", g, || check_series_oracle(&chain)));
        }
        Err(e) => out.push(Entry::failed("poincare_chain", g, e.to_string())),
    }
    out.push(guarded("pp_pair_split", g, || check_pp_split(g)));
    out.push(guarded("stratum3_inclusion_exclusion", g, || {
        check_stratum_three(g)
    }));
    out
}

/// Run the suite over `lo..=hi`, one worker per genus. Entries come back
/// sorted by `(identity, genus)`.
pub fn run(lo: u32, hi: u32) -> VerificationReport {
    let per_genus: Vec<Vec<Entry>> = (lo..=hi).into_par_iter().map(checks_for_genus).collect();
    let mut report: VerificationReport = per_genus.into_iter().flatten().collect();
    report.sort();
    report
}

/// Convenience for callers that want the suite for a single genus.
pub fn run_genus(g: u32) -> VerificationReport {
    run(g, g)
}
