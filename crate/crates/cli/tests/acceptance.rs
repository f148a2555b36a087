//! Acceptance suite: each criterion is evaluated at its stated tolerance and
//! time limit and printed as one PASS/FAIL line. Run with
//! `cargo test -p qtbraid-cli --test acceptance`.

use std::time::{Duration, Instant};

use qtbraid::braidrep::{
    braided_r, c_r_map, check_braid_relations, check_braided_ybe, check_hexagon,
    check_module_morphism, ModuleAction,
};
use qtbraid::groupalg::{
    check_algebraic_ybe, check_hopf_axioms, check_quasi_cocommutative, check_quasitriangular,
    universal_r, GroupSpec,
};
use qtbraid::linalg::{regular_representation, Matrix};
use qtbraid::quantum::{
    bell_matrix, concurrence, kl_entangling_test, verify_bell_actions, verify_bell_matrix_actions,
};
use qtbraid::scalar::Cyclotomic;
use qtbraid_cli::{cmd_check, CheckInputs, Form, Selector, Settings, Status};

/// Criteria that cannot hold as stated; see README.
const UNATTAINABLE: &[u32] = &[10];

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn spec(orders: &[u32]) -> GroupSpec {
    GroupSpec::new(orders.to_vec()).unwrap()
}

fn halves(rows: &[&[i64]]) -> Matrix {
    Matrix::from_int_rows(rows).unwrap().scale(&Cyclotomic::ratio(1, 2))
}

/// Ordered order lists with entries ≥ 2 and product ≤ max.
fn specs_up_to(max: u32) -> Vec<GroupSpec> {
    fn extend(prefix: &mut Vec<u32>, product: u32, max: u32, out: &mut Vec<GroupSpec>) {
        if !prefix.is_empty() {
            out.push(GroupSpec::new(prefix.clone()).unwrap());
        }
        for o in 2..=max / product {
            prefix.push(o);
            extend(prefix, product * o, max, out);
            prefix.pop();
        }
    }
    let mut out = vec![spec(&[1])];
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

fn c1() -> Outcome {
    let s = spec(&[2]);
    let gamma = regular_representation(&s).image_of_tensor(&universal_r(&s)).unwrap();
    let expected = halves(&[&[1, 1, 1, -1], &[1, 1, -1, 1], &[1, -1, 1, 1], &[-1, 1, 1, 1]]);
    outcome(gamma == expected, "Gamma(R) for Z/2 equals the displayed matrix entrywise")
}

fn c2() -> Outcome {
    let r = braided_r(&spec(&[2]));
    let expected = halves(&[&[1, 1, 1, -1], &[1, -1, 1, 1], &[1, 1, -1, 1], &[-1, 1, 1, 1]]);
    outcome(*r.matrix() == expected, "R' for Z/2 equals the displayed matrix entrywise")
}

fn c3() -> Outcome {
    outcome(check_braided_ybe(&braided_r(&spec(&[2]))), "braided YBE for Z/2, exact 8x8")
}

fn c4() -> Outcome {
    let r = braided_r(&spec(&[2]));
    let actions = verify_bell_actions(&r).unwrap();
    let exact = actions.iter().all(|o| o.pass);
    let conc: Vec<f64> = actions.iter().map(|o| concurrence(&o.image).unwrap()).collect();
    let maximal = conc.iter().all(|c| (c - 1.0).abs() < 1e-12);
    outcome(exact && maximal, format!("signs exact: {exact}; concurrences {conc:?}"))
}

fn c5() -> Outcome {
    let mut failed = Vec::new();
    for orders in [&[2][..], &[3], &[4], &[5], &[2, 2], &[2, 3]] {
        let s = spec(orders);
        let r = universal_r(&s);
        let ok = check_quasi_cocommutative(&s, &r).unwrap()
            && check_quasitriangular(&s, &r).unwrap()
            && check_algebraic_ybe(&s, &r).unwrap();
        if !ok {
            failed.push(orders.to_vec());
        }
    }
    outcome(failed.is_empty(), format!("six specs; failures {failed:?}"))
}

fn c6() -> Outcome {
    let mut ok = true;
    for orders in [&[2][..], &[3]] {
        let s = spec(orders);
        let reg = ModuleAction::regular(&s);
        let r = universal_r(&s);
        let c = c_r_map(&reg, &reg, &r).unwrap();
        ok &= check_module_morphism(&c, &reg, &reg).unwrap();
        ok &= check_hexagon(&reg, &reg, &reg, &r).unwrap();
        // with U = V = W every C is R' and the identity is the braided YBE
        let rp = braided_r(&s);
        ok &= c == *rp.matrix() && check_braided_ybe(&rp);
    }
    outcome(ok, "module morphism and hexagon on regular modules over Z/2 and Z/3")
}

fn c7() -> Outcome {
    let n4 = check_braid_relations(4, &braided_r(&spec(&[2])));
    let n3 = check_braid_relations(3, &braided_r(&spec(&[3])));
    outcome(n4 && n3, format!("N=4 over Z/2: {n4}; N=3 over Z/3: {n3}"))
}

fn c8() -> Outcome {
    let mut failed = Vec::new();
    for s in specs_up_to(6) {
        let gamma = regular_representation(&s).image_of_tensor(&universal_r(&s)).unwrap();
        let rp = braided_r(&s);
        if !(gamma.is_unitary(0.0) && rp.matrix().is_unitary(0.0)) {
            failed.push(s.orders().to_vec());
        }
    }
    outcome(failed.is_empty(), format!("all specs with d <= 6; failures {failed:?}"))
}

fn c9() -> Outcome {
    let values: Vec<Cyclotomic> = (0..4).map(|k| Cyclotomic::root_of_unity(4, k)).collect();
    let mut cases = 0;
    let mut mismatches = 0;
    for a in &values {
        for b in &values {
            for c in &values {
                for d in &values {
                    let (entangled, _) = kl_entangling_test(a, b, c, d).unwrap();
                    if entangled != (a * b != c * d) {
                        mismatches += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    outcome(cases == 256 && mismatches == 0, format!("{cases} cases, {mismatches} mismatches"))
}

fn c10() -> Outcome {
    let rays = verify_bell_matrix_actions(&bell_matrix()).unwrap();
    let ok = rays.iter().all(|o| o.pass && (o.concurrence - 1.0).abs() < 1e-12);
    let bad: Vec<String> = rays
        .iter()
        .filter(|o| !o.pass || (o.concurrence - 1.0).abs() >= 1e-12)
        .map(|o| o.describe())
        .collect();
    outcome(ok, if bad.is_empty() { "all four rays".to_string() } else { bad.join("; ") })
}

fn c11() -> Outcome {
    let specs = specs_up_to(12);
    let failed: Vec<Vec<u32>> = specs
        .iter()
        .filter(|s| !check_hopf_axioms(s))
        .map(|s| s.orders().to_vec())
        .collect();
    outcome(failed.is_empty(), format!("{} specs; failures {failed:?}", specs.len()))
}

fn c12() -> Outcome {
    let settings = Settings {
        form: Form::Literal,
        ..Settings::default()
    };
    let run = |orders: &[u32]| {
        cmd_check("check --which ybe --form literal-eq17", &settings, &spec(orders), &[Selector::Ybe], &CheckInputs::default())
            .unwrap()
    };
    let r22 = run(&[2, 2]);
    let r2 = run(&[2]);
    let c22 = r22.check("algebraic-ybe").unwrap();
    let c2 = r2.check("algebraic-ybe").unwrap();
    let ok = c22.status == Status::Recorded
        && matches!(c22.result, Some(Status::Pass | Status::Fail))
        && c2.status == Status::Recorded
        && c2.result == Some(Status::Pass);
    outcome(ok, format!("(2,2) recorded {:?}; (2) recorded {:?}", c22.result, c2.result))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "regular-representation image of R over Z/2", 1, c1),
        (2, "braided R' over Z/2", 1, c2),
        (3, "braided YBE over Z/2", 1, c3),
        (4, "Bell-state actions of R'", 1, c4),
        (5, "quasitriangular axioms and algebraic YBE", 60, c5),
        (6, "module morphism and hexagon", 30, c6),
        (7, "braid relations", 30, c7),
        (8, "unitarity of Gamma(R) and R'", 10, c8),
        (9, "Kauffman-Lomonaco entangling sweep", 5, c9),
        (10, "Bell matrix basis actions", 1, c10),
        (11, "Hopf axioms up to group order 12", 10, c11),
        (12, "literal single-fraction form is recorded", 10, c12),
    ];
    let mut failures = Vec::new();
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let pass = out.pass && in_time;
        println!(
            "criterion {n:>2} {} {name} ({:.3} s of {limit} s): {}{}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail,
            if in_time { "" } else { " [over time limit]" }
        );
        if !pass {
            failures.push(n);
        }
    }
    if failures != UNATTAINABLE {
        eprintln!("unexpected set of failing criteria: {failures:?} (expected {UNATTAINABLE:?})");
        std::process::exit(1);
    }
    println!("acceptance: {} of 12 pass; failing {failures:?} as expected", 12 - failures.len());
}
