//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;

use modinv::exact::{poly_exact_div, series_expand, BigRat, MPoly, RatFun, Ring};
use modinv::grassmann::{grassmann_e, pp_pair_e_split, projective_e, GrassmannSpec};
use modinv::kirwan::{equivariant_series, expand_terms, raw_terms, PoincareChain, Space};
use modinv::stringy::{
    discrepancy_coeffs, intersection_e, stratum_e, stringy_e_closed, stringy_e_sum, stringy_euler,
    StratumId,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn int(x: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(x))
}

fn four_pow(k: u32) -> BigRat {
    BigRat::from_integer(BigInt::from(4).pow(k))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn stringy_euler_numbers() -> Outcome {
    for g in 2..=12 {
        let e = stringy_euler(g).map_err(|e| e.to_string())?;
        ensure(e.value == four_pow(g - 1), || {
            format!("g={g}: got {}", e.value)
        })?;
    }
    Ok(())
}

fn closed_form_identity() -> Outcome {
    for g in 3..=8 {
        let sum = stringy_e_sum(g).map_err(|e| e.to_string())?;
        let closed = stringy_e_closed(g).map_err(|e| e.to_string())?;
        ensure(sum.equals(&closed), || {
            format!("g={g}: stratum sum differs from closed form")
        })?;
    }
    Ok(())
}

fn parity_dichotomy() -> Outcome {
    for g in 3..=8 {
        let closed = stringy_e_closed(g).map_err(|e| e.to_string())?;
        let ie = intersection_e(g).map_err(|e| e.to_string())?;
        let div = poly_exact_div(closed.num(), closed.den());
        let equal = closed.equals(&RatFun::from_poly(ie.clone()));
        if g % 2 == 0 {
            let p = div.map_err(|_| format!("g={g}: closed form not divisible"))?;
            ensure(p == ie && equal, || {
                format!("g={g}: polynomial differs from IE")
            })?;
        } else {
            ensure(div.is_err(), || {
                format!("g={g}: closed form unexpectedly divisible")
            })?;
            ensure(!equal, || format!("g={g}: closed form equals IE"))?;
        }
    }
    Ok(())
}

fn generating_function() -> Outcome {
    let f = RatFun::new(
        MPoly::constant(Ring::Q, BigRat::new(BigInt::from(1), BigInt::from(4))),
        &MPoly::one(Ring::Q) - &MPoly::q().scale_int(4),
    );
    let s = series_expand(&f, 12).map_err(|e| e.to_string())?;
    for g in 2..=12u32 {
        let e = stringy_euler(g).map_err(|e| e.to_string())?;
        ensure(s.coeff(g as usize) == &e.value, || {
            format!("g={g}: series {} vs e_g {}", s.coeff(g as usize), e.value)
        })?;
    }
    Ok(())
}

fn poincare_tables() -> Outcome {
    for g in 3..=10u32 {
        let chain = PoincareChain::compute(g).map_err(|e| e.to_string())?;
        let order = 6 * g as usize;
        for space in Space::COMPACT {
            let t = chain
                .table(space)
                .map_err(|e| format!("g={g} {space}: {e}"))?;
            ensure(t.betti.len() == 6 * g as usize - 5, || {
                format!("g={g} {space}: degree")
            })?;
            ensure(t.is_palindromic(), || {
                format!("g={g} {space}: not palindromic")
            })?;
            ensure(t.betti[0] == BigInt::from(1), || {
                format!("g={g} {space}: b0")
            })?;
            ensure(
                t.betti.iter().all(|b| b.sign() != num_bigint::Sign::Minus),
                || format!("g={g} {space}: negative Betti number"),
            )?;
            let terms = raw_terms(g, space).map_err(|e| e.to_string())?;
            let oracle = expand_terms(&terms, order).map_err(|e| e.to_string())?;
            for k in 0..=order {
                let expect = t
                    .betti
                    .get(k)
                    .map(|b| BigRat::from_integer(b.clone()))
                    .unwrap_or_else(|| int(0));
                ensure(oracle.coeff(k) == &expect, || {
                    format!(
                        "g={g} {space}: degree {k} oracle {} table {expect}",
                        oracle.coeff(k)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn genus_three_values() -> Outcome {
    let chain = PoincareChain::compute(3).map_err(|e| e.to_string())?;
    for (space, b2) in [
        (Space::M2, 66),
        (Space::K, 130),
        (Space::Ksigma, 66),
        (Space::S, 2),
    ] {
        let t = chain.table(space).map_err(|e| e.to_string())?;
        ensure(t.betti[2] == BigInt::from(b2), || {
            format!("b2({space}) = {}", t.betti[2])
        })?;
    }
    let s = equivariant_series(3, 4).map_err(|e| e.to_string())?;
    let want: Vec<BigRat> = [1, 0, 1, 6, 2].into_iter().map(int).collect();
    ensure(s.coeffs() == &want[..], || "equivariant prefix".into())
}

fn discrepancy() -> Outcome {
    let d = discrepancy_coeffs(3).map_err(|e| e.to_string())?;
    ensure(d.as_array() == [8, 1, 4], || {
        format!("got {:?}", d.as_array())
    })
}

fn identity_suite() -> Outcome {
    for g in 3..=10u32 {
        let (plus, minus) = pp_pair_e_split(g).map_err(|e| e.to_string())?;
        let p = projective_e(g as i64 - 2);
        ensure((&plus + &minus).equals(&RatFun::from_poly(&p * &p)), || {
            format!("g={g}: E+ + E-")
        })?;

        let gr = grassmann_e(GrassmannSpec::new(2, g).unwrap()).map_err(|e| e.to_string())?;
        let weight = MPoly::constant(Ring::Uv, BigRat::from_integer(BigInt::from(1) << (2 * g)));
        let direct = &(&weight * &MPoly::uv_pow(g)) * &gr;
        let pe = |n: i64| projective_e(n);
        let fiber = &(&(&pe(2) * &pe(g as i64 - 2)) - &(&pe(2) * &pe(g as i64 - 3)))
            - &(&(&pe(1) * &pe(g as i64 - 2)) - &(&pe(1) * &pe(g as i64 - 3)));
        let by_parts = &(&weight * &fiber) * &gr;
        let stratum = stratum_e(StratumId::new(&[3]).unwrap(), g).map_err(|e| e.to_string())?;
        ensure(stratum.equals(&RatFun::from_poly(direct.clone())), || {
            format!("g={g}: stratum 3")
        })?;
        ensure(direct == by_parts, || {
            format!("g={g}: fiber inclusion-exclusion")
        })?;
    }
    Ok(())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_modinv");
    let run = || {
        Command::new(bin)
            .args(["verify", "--genus-range", "3..6"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || {
        format!(
            "exit {:?}/{:?}: {}",
            a.status.code(),
            b.status.code(),
            String::from_utf8_lossy(&a.stderr)
        )
    })?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "reports differ".into()
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "stringy Euler number 4^(g-1), g=2..12",
            stringy_euler_numbers,
        ),
        (
            "stratum sum equals closed form, g=3..8",
            closed_form_identity,
        ),
        (
            "even genus polynomial equal to IE, odd genus not",
            parity_dichotomy,
        ),
        (
            "generating function 1/4 / (1-4q), g=2..12",
            generating_function,
        ),
        (
            "Poincare tables against series oracle, g=3..10",
            poincare_tables,
        ),
        ("genus-3 spot values", genus_three_values),
        ("discrepancy (8,1,4) at g=3", discrepancy),
        (
            "E+ + E- and stratum {3} fiber identity, g=3..10",
            identity_suite,
        ),
        ("verify 3..6 byte-identical across runs", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS {} {name} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
