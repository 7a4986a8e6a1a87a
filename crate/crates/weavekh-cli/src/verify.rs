//! The `verify` command: oracle suites and structural identities, one
//! pass/fail line per check, exit 4 on any failure.

use serde_json::json;

use weavekh::diagram::{signature_alternating, signature_closed_form, weaving_braid};
use weavekh::gaussfit::{analyze_line, density_integral};
use weavekh::hecke::{rows, verify_row};
use weavekh::jones::{jones_from_row, jones_w3, kauffman_oracle, MAX_ORACLE_CROSSINGS};
use weavekh::khovanov::table_for;
use weavekh::laurent::LaurentPoly;

use crate::output::{with_meta, CliError};

struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Check {
    fn pass(name: &'static str, cases: usize) -> Self {
        Check {
            name,
            cases,
            failure: None,
        }
    }

    fn fail(name: &'static str, cases: usize, why: String) -> Self {
        Check {
            name,
            cases,
            failure: Some(why),
        }
    }
}

fn check_recursion_oracle(n_max: u32, inject_fault: bool) -> Check {
    let name = "hecke recursion vs H3 oracle";
    let cap = n_max.min(30);
    let mut cases = 0;
    for n in 1..=cap {
        let ok = verify_row(n) != (inject_fault && n == cap);
        cases += 1;
        if !ok {
            return Check::fail(name, cases, format!("row {n} disagrees with the oracle"));
        }
    }
    Check::pass(name, cases)
}

fn check_coefficient_facts(n_max: u32) -> Check {
    let name = "C121/degree/coefficient facts";
    let mut cases = 0;
    for row in rows().take(n_max as usize) {
        let n = row.n() as i64;
        cases += 1;
        let bound = |p: &LaurentPoly, b: i64| p.max_deg().is_none_or(|d| d <= b);
        let sign = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let top = row.c1().coeff(2 * n - 1) + row.c12().coeff(2 * n - 2);
        let ok = row.c121().is_zero()
            && bound(row.c0(), 2 * n - 1)
            && bound(row.c1(), 2 * n - 1)
            && bound(row.c2(), 2 * n - 2)
            && bound(row.c12(), 2 * n - 2)
            && bound(row.c21(), 2 * n - 3)
            && row.c0().coeff(0).bits() == 0
            && (n < 2 || row.c0().coeff(1) == sign(n - 2).into())
            && row.c1().coeff(0) == sign(n - 1).into()
            && top.bits() == 0;
        if !ok {
            return Check::fail(name, cases, format!("row n = {n} violates a stated fact"));
        }
    }
    Check::pass(name, cases)
}

fn check_bracket(n_max: u32) -> Check {
    let name = "jones closed form vs kauffman bracket";
    let cap = n_max.min(MAX_ORACLE_CROSSINGS as u32 / 2);
    let mut cases = 0;
    for n in 1..=cap {
        if n % 3 == 0 {
            continue;
        }
        cases += 1;
        let bracket = match kauffman_oracle(&weaving_braid(3, n)) {
            Ok(p) => p,
            Err(e) => return Check::fail(name, cases, e.to_string()),
        };
        if bracket != jones_w3(n).v {
            return Check::fail(name, cases, format!("mismatch at n = {n}"));
        }
    }
    Check::pass(name, cases)
}

fn check_khovanov_structure(n_max: u32) -> Check {
    let name = "euler characteristic, support lines, knight pairing";
    let mut cases = 0;
    for row in rows().take(n_max as usize) {
        if row.n() % 3 == 0 {
            continue;
        }
        cases += 1;
        let jones = jones_from_row(&row);
        let table = match table_for(&jones) {
            Ok(t) => t,
            Err(e) => return Check::fail(name, cases, e.to_string()),
        };
        if let Err(e) = table
            .check_support()
            .and_then(|()| table.check_euler(&jones.v))
            .and_then(|()| table.check_knight_move())
        {
            return Check::fail(name, cases, e.to_string());
        }
    }
    Check::pass(name, cases)
}

fn check_signatures() -> Check {
    let name = "signature: diagram route vs closed form (3 <= p <= 8)";
    let mut cases = 0;
    for p in 3..=8 {
        for q in 1..=20 {
            cases += 1;
            let sig = signature_alternating(&weaving_braid(p, q));
            if sig != signature_closed_form(p, q) {
                return Check::fail(name, cases, format!("mismatch at p = {p}, q = {q}"));
            }
        }
    }
    Check::pass(name, cases)
}

fn check_normalization(n_max: u32) -> Check {
    let name = "normalization: sum of masses and density integral";
    let mut cases = 0;
    for row in rows().take(n_max as usize) {
        // n = 1 has a single point and n = 2 a constant line; neither fits
        if row.n() % 3 == 0 || row.n() <= 2 {
            continue;
        }
        cases += 1;
        let run = || -> Result<(f64, f64), CliError> {
            let jones = jones_from_row(&row);
            let table = table_for(&jones)?;
            let (nb, fit) = analyze_line(row.n(), table.betti_line())?;
            let mass: f64 = nb.points.iter().map(|p| p.1).sum();
            Ok((mass, density_integral(&fit)))
        };
        match run() {
            Ok((mass, integral)) => {
                if (mass - 1.0).abs() >= 1e-12 || (integral - 1.0).abs() >= 1e-9 {
                    return Check::fail(
                        name,
                        cases,
                        format!("n = {}: mass {mass}, integral {integral}", row.n()),
                    );
                }
            }
            Err(e) => return Check::fail(name, cases, e.to_string()),
        }
    }
    Check::pass(name, cases)
}

pub fn cmd_verify(
    json_format: bool,
    no_meta: bool,
    n_max: u32,
    inject_fault: bool,
) -> Result<(), CliError> {
    let checks = vec![
        check_recursion_oracle(n_max, inject_fault),
        check_coefficient_facts(n_max),
        check_bracket(n_max),
        check_khovanov_structure(n_max),
        check_signatures(),
        check_normalization(n_max),
    ];
    let all_passed = checks.iter().all(|c| c.failure.is_none());

    if json_format {
        let report = json!({
            "n_max": n_max,
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.failure.is_none(),
                "detail": c.failure,
            })).collect::<Vec<_>>(),
            "all_passed": all_passed,
        });
        println!("{}", with_meta(report, no_meta));
    } else {
        for c in &checks {
            match &c.failure {
                None => println!("ok   {} ({} cases)", c.name, c.cases),
                Some(why) => println!("FAIL {} ({} cases): {}", c.name, c.cases, why),
            }
        }
        println!(
            "{}",
            if all_passed {
                "all checks passed"
            } else {
                "verification FAILED"
            }
        );
    }

    if all_passed {
        Ok(())
    } else {
        Err(CliError::VerifyFailed("one or more checks failed".into()))
    }
}
