//! Acceptance run: one line per criterion.
//!
//! Two sub-claims are known to be false and are reported as FAIL without
//! failing the run: `rs` does not keep the Knuth class of the row word, and
//! the row comparison of neighbouring selections is not strict at
//! zero-length selections. Both have small counterexamples, checked below.
//! Everything else must hold exactly.

use std::process::ExitCode;
use std::time::Instant;

use rigged::bijection::{phi, psi};
use rigged::paths::{Path, RectangleSeq, Weight};
use rigged::promotion::{r_matrix, rho, rho_bar, rhobb_sequence, rs, RemovalCell, SlideRules};
use rigged::rigged::RiggedConfiguration;
use rigged::verify::{self, Report, SuiteSpec};
use rigged::young::{insert, reverse_slide, Cell, Tableau, TieRule};
use rigged::{Error, Undefined};

struct Outcome {
    pass: bool,
    /// A failure of a claim known to be false; does not fail the run.
    refuted: bool,
    detail: String,
}

fn ok(pass: bool, detail: String) -> Outcome {
    Outcome { pass, refuted: false, detail }
}

fn path(n: usize, s: &str) -> Path {
    Path::parse(n, s).expect("literal path")
}

fn first(r: &Report) -> String {
    r.discrepancies.first().map(|d| format!("; first: {} {}", d.input.to_json(), d.detail)).unwrap_or_default()
}

fn suite() -> SuiteSpec {
    SuiteSpec::default_suite(8)
}

fn main_diagram() -> Outcome {
    let s = suite();
    let r = verify::check_main_diagram(&s);
    let running = path(3, "22/44 ⊗ 12/23/34 ⊗ 12/23");
    let covered = s.instances.contains(&(3, running.shape()));
    ok(r.passed() && covered, format!("{} over {} shapes{}", r.summary(), s.instances.len(), first(&r)))
}

fn goldens() -> Outcome {
    let mut bad: Vec<&str> = vec![];
    let mut check = |name, cond: bool| {
        if !cond {
            bad.push(name);
        }
    };

    let p = path(3, "12/23 ⊗ 12 ⊗ 1/2/4");
    check("path content", p.content() == vec![3, 4, 1, 1]);
    check("row and column words", p.row_word().to_string() == "231212421" && p.col_word().to_string() == "213212421");

    let rc = RiggedConfiguration::new(
        3,
        RectangleSeq::new([(2, 2), (1, 2), (3, 1)]),
        vec![vec![(2, -1)], vec![(1, 1)], vec![(1, -1)]],
    );
    check(
        "vacancies and weight",
        rc.as_ref().is_ok_and(|rc| {
            (rc.vacancy(1, 2), rc.vacancy(2, 1), rc.vacancy(3, 1)) == (-1, 1, 0)
                && rc.weight() == Weight { fundamental: vec![-1, 3, 0], total_area: 9 }
        }),
    );

    let s = Tableau::parse("1223/2355/4466/5677").expect("literal");
    let (slid, route) = reverse_slide(&s);
    let expect: Vec<Cell> = [(4, 3), (3, 3), (2, 3), (2, 2), (1, 2), (1, 1)].iter().map(|&(i, j)| Cell::new(i, j)).collect();
    check("reverse slide route", route.0 == expect && slid.to_string() == "·123/2235/4456/5667");

    let lp = path(4, "33/55 ⊗ 23/34/45 ⊗ 23/34");
    let s1 = lp.ls().ok();
    check("ls splits the head", s1 == Some(path(4, "3/5 ⊗ 3/5 ⊗ 23/34/45 ⊗ 23/34")));
    let s2 = s1.and_then(|x| x.lb().ok());
    check("lb splits the column", s2 == Some(path(4, "5 ⊗ 3 ⊗ 3/5 ⊗ 23/34/45 ⊗ 23/34")));
    let s3 = s2.and_then(|x| x.lh().ok());
    check("lh returns 5", s3.as_ref().map(|x| x.0) == Some(5));
    let s4 = s3.and_then(|x| x.1.lh().ok());
    check("lh returns 3", s4 == Some((3, path(4, "3/5 ⊗ 23/34/45 ⊗ 23/34"))));
    check("rs of a two-factor path", rs(&path(4, "23/34/45 ⊗ 23/34")).ok() == Some(path(4, "23/34/45 ⊗ 3/4 ⊗ 2/3")));
    check(
        "R swaps the first two factors",
        r_matrix(&path(4, "23/34/45 ⊗ 3/4 ⊗ 2/3"), &[1, 0, 2]).ok() == Some(path(4, "3/4 ⊗ 23/34/45 ⊗ 2/3")),
    );
    check("R of two rectangles", r_matrix(&path(4, "23/34/45 ⊗ 2/3"), &[1, 0]).ok() == Some(path(4, "3/5 ⊗ 22/33/44")));

    let sq = path(7, "1234/2445/3666/5778");
    let parts = |rc: &RiggedConfiguration| rc.levels().iter().map(|nu| nu.parts()).collect::<Vec<_>>();
    let image = phi(&sq);
    let all_singular =
        (1..=7).all(|a| image.level(a).strings().iter().all(|s| image.is_singular(a, s)));
    let expect_parts: Vec<Vec<usize>> =
        vec![vec![3], vec![3, 2], vec![3, 3, 1], vec![4, 3, 1], vec![3, 3], vec![3], vec![1]];
    check("Φ of the 4x4 square", parts(&image) == expect_parts && all_singular);
    check("Ψ of the 4x4 square", psi(&sq.factors()[0], 7).ok() == Some(image));
    check("ρ of the square", rho(&sq).ok() == Some(path(7, "1134/2245/3466/5677")));
    check("ρ̄ selection lengths", rhobb_sequence(&sq).ok() == Some(vec![1, 3, 3, 3, 3, 3, 3]));

    // the configuration is given by colabels; read as labels it is not valid
    let bar = RiggedConfiguration::from_colabels(3, RectangleSeq::new([(2, 2)]), vec![vec![], vec![(2, 0)], vec![(2, 0)]]);
    check(
        "ρ̄ undefined",
        bar.is_ok_and(|rc| matches!(rho_bar(&rc), Err(Error::Undefined(Undefined::RhoBarIllDefined { .. })))),
    );
    check("ρ undefined", rho(&path(3, "11/44")) == Err(Error::Undefined(Undefined::NotInDomRho)));

    ok(bad.is_empty(), if bad.is_empty() { "all goldens match".into() } else { format!("mismatches: {bad:?}") })
}

fn area_maps() -> Outcome {
    let r = verify::check_area_maps(3, 3);
    ok(r.passed(), format!("{}{}", r.summary(), first(&r)))
}

fn crystal() -> Outcome {
    let s = suite();
    let r = verify::check_crystal(&s);
    let a = verify::check_affine(&s);
    ok(r.passed() && a.passed(), format!("{}; {}{}{}", r.summary(), a.summary(), first(&r), first(&a)))
}

fn r_matrix_and_rs() -> Outcome {
    let s = suite();
    let r = verify::check_rmatrix(&s);
    let k = verify::check_rs_knuth(&s);
    if !r.passed() {
        return ok(false, format!("{}{}", r.summary(), first(&r)));
    }
    // rs(12) = 2 ⊗ 1 at rank 1, and P(12) != P(21)
    let witness = rs(&path(1, "12")).ok() == Some(path(1, "2 ⊗ 1"))
        && insert(&path(1, "12").row_word()) != insert(&path(1, "2 ⊗ 1").row_word());
    Outcome {
        pass: k.passed(),
        refuted: !k.passed() && witness,
        detail: format!(
            "{}; rs keeps the row-word Knuth class: {} of {} paths differ (12 -> 2 ⊗ 1 at n=1)",
            r.summary(),
            k.discrepancies.len(),
            k.cases
        ),
    }
}

fn highest_weight() -> Outcome {
    let r = verify::check_highest_weight(&suite());
    ok(r.passed(), format!("{}{}", r.summary(), first(&r)))
}

fn structure() -> Outcome {
    let s = suite();
    let r = verify::check_structure(&s);
    let red = verify::check_reductions(&s);
    let bij = verify::check_bijection(&s);
    let strict = verify::check_row_order_strict(&s);
    let detail = format!(
        "{}; {}; {}; strict row order: {} violations",
        r.summary(),
        red.summary(),
        bij.summary(),
        strict.discrepancies.len()
    );
    if !(r.passed() && red.passed() && bij.passed()) {
        return ok(false, format!("{detail}{}{}{}", first(&r), first(&red), first(&bij)));
    }
    let witness = verify::check_row_order_strict(&SuiteSpec::single(1, RectangleSeq::new([(2, 2)])))
        .discrepancies
        .iter()
        .any(|d| d.input == rigged::document::Document::from(&path(1, "11/22")));
    Outcome { pass: strict.passed(), refuted: !strict.passed() && witness, detail }
}

fn mutations() -> Outcome {
    let mut lines = vec![];
    let mut all_caught = true;
    for (name, rules) in [
        ("tie rule left", SlideRules { tie: TieRule::Left, removal: RemovalCell::Corner }),
        ("removal cell bottom-left", SlideRules { tie: TieRule::Above, removal: RemovalCell::BottomLeft }),
    ] {
        let r = verify::check_main_diagram(&suite().with_rules(rules));
        all_caught &= !r.passed();
        lines.push(format!("{name}: {} discrepancies", r.discrepancies.len()));
    }
    ok(all_caught, lines.join("; "))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("main diagram, exhaustive", main_diagram),
        ("golden values", goldens),
        ("area oracle", area_maps),
        ("crystal isomorphism", crystal),
        ("R-matrix and rs", r_matrix_and_rs),
        ("highest weight correspondence", highest_weight),
        ("structural properties", structure),
        ("mutation sensitivity", mutations),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.refuted { " [refuted claim, counterexample confirmed]" } else { "" };
        println!("criterion {} ({name}): {verdict}{note} in {:.1?}: {}", i + 1, t.elapsed(), o.detail);
        if !o.pass && !o.refuted {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
