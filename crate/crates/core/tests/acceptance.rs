//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only,
//! each with a wall-clock limit. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jwdyck::projector::{verify_blob_identities, verify_projector};
use jwdyck::scalar::{qint, qint_b, LaurentPoly};
use jwdyck::tiling::{admissible, enumerate_tilings, gf, gf_a, gf_b, tiling_weight, DyckTile, Tiling};
use jwdyck::{coeff_recursive, jw_morrison, jw_wenzl, Diagram, DottedPath, DyckPath, Element, Flavor, Scalar};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = Result<(), String>;

fn q(n: i64) -> Scalar {
    Scalar::from_poly(qint(n).unwrap())
}

fn qs(n: i64) -> Scalar {
    Scalar::from_poly(qint_b(n).unwrap())
}

fn frac(num: &[Scalar], den: &[Scalar]) -> Scalar {
    let prod = |xs: &[Scalar]| xs.iter().fold(Scalar::one(), |a, x| &a * x);
    prod(num).div(&prod(den)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn word(flavor: Flavor, n: usize, w: &[usize]) -> Element {
    w.iter().fold(Element::identity(flavor, n), |acc, &i| {
        acc.mul(&Element::generator(flavor, n, i).unwrap()).unwrap()
    })
}

fn combination(flavor: Flavor, n: usize, terms: &[(Scalar, &[usize])]) -> Element {
    terms.iter().fold(Element::zero(flavor, n), |acc, (c, w)| {
        acc.add(&word(flavor, n, w).scalar_mul(c)).unwrap()
    })
}

fn same_projection(name: &str, expected: &Element, flavor: Flavor, n: usize) -> Outcome {
    for (method, got) in [("wenzl", jw_wenzl(flavor, n)), ("morrison", jw_morrison(flavor, n))] {
        let got = got.map_err(|e| e.to_string())?;
        ensure(&got == expected, || format!("{name} by {method}: got {}", got.to_text()))?;
        ensure(got.len() == expected.len(), || format!("{name}: term count {}", got.len()))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let one = Scalar::one();
    let p2 = combination(Flavor::A, 2, &[(one.clone(), &[]), (frac(&[], &[q(2)]), &[1])]);
    same_projection("P2", &p2, Flavor::A, 2)?;
    let p3 = combination(
        Flavor::A,
        3,
        &[
            (one.clone(), &[]),
            (frac(&[q(2)], &[q(3)]), &[1]),
            (frac(&[q(2)], &[q(3)]), &[2]),
            (frac(&[], &[q(3)]), &[1, 2]),
            (frac(&[], &[q(3)]), &[2, 1]),
        ],
    );
    ensure(p3.len() == 5, || "P3 display has five distinct diagrams".into())?;
    same_projection("P3", &p3, Flavor::A, 3)?;
    let q1 = combination(Flavor::B, 1, &[(one.clone(), &[]), (frac(&[], &[qs(1)]), &[0])]);
    same_projection("Q1", &q1, Flavor::B, 1)?;
    let q2 = combination(
        Flavor::B,
        2,
        &[
            (one, &[]),
            (frac(&[], &[qs(1)]), &[0]),
            (frac(&[qs(1)], &[qs(2)]), &[1]),
            (frac(&[], &[qs(2)]), &[1, 0]),
            (frac(&[], &[qs(2)]), &[0, 1]),
            (frac(&[], &[qs(2), qs(1)]), &[0, 1, 0]),
        ],
    );
    ensure(q2.len() == 6, || "Q2 display has six distinct diagrams".into())?;
    same_projection("Q2", &q2, Flavor::B, 2)
}

fn criterion_2a() -> Outcome {
    let e1: Diagram = "(1,2)(3,4)(5,6)".parse().unwrap();
    let target = frac(&[q(2)], &[q(3)]);
    let rec = coeff_recursive(Flavor::A, &e1).map_err(|e| e.to_string())?;
    let til = gf(Flavor::A, &e1.to_path());
    let proj = jw_wenzl(Flavor::A, 3).unwrap().coeff(&e1).unwrap();
    ensure(rec == target && til == target && proj == target, || {
        format!("recursive {rec}, tiling {til}, projector {proj}")
    })
}

fn criterion_2b() -> Outcome {
    let mu: DyckPath = "URURURURUR".parse().unwrap();
    let all = enumerate_tilings(&mu);
    let designated = [
        (
            vec![(1, 2, "UR"), (1, 6, "UR"), (2, 5, ""), (3, 4, ""), (3, 6, ""), (4, 5, "")],
            frac(&[q(3)], &[q(2), q(4), q(5)]),
        ),
        (
            vec![(1, 2, ""), (1, 4, "UR"), (1, 8, ""), (2, 3, ""), (2, 7, ""), (3, 4, "UR")],
            frac(&[], &[q(2), q(3), q(4)]),
        ),
    ];
    for (tiles, target) in designated {
        let tiles = tiles
            .into_iter()
            .map(|(h, x, w)| DyckTile::new(h, x, w.parse().unwrap()))
            .collect();
        let t = Tiling::new(mu.clone(), tiles);
        ensure(all.contains(&t), || format!("tiling {t:?} not enumerated"))?;
        let w = tiling_weight(&t, Flavor::A);
        ensure(w == target, || format!("weight {w}, expected {target}"))?;
    }
    Ok(())
}

fn criterion_2c() -> Outcome {
    let mu: DyckPath = "URURUR".parse().unwrap();
    let count = enumerate_tilings(&mu).len();
    ensure(count == 2, || format!("{count} tilings"))?;
    let z = gf_a(&mu);
    ensure(z == frac(&[q(2)], &[q(3)]), || format!("Z = {z}"))
}

fn criterion_2d() -> Outcome {
    let d: Diagram = "(1,2)(3,6)*(4,5)(7,8)".parse().unwrap();
    let target = frac(&[q(2), qs(1)], &[qs(4), qs(2)]);
    let rec = coeff_recursive(Flavor::B, &d).map_err(|e| e.to_string())?;
    let proj = jw_wenzl(Flavor::B, 4).unwrap().coeff(&d).unwrap();
    let p = d.to_path();
    let zb = gf_b(&p);
    ensure(rec == target && proj == target && zb == target, || {
        format!("recursive {rec}, projector {proj}, Z^B {zb}")
    })?;
    let all = enumerate_tilings(p.path());
    let kept = all.iter().filter(|t| admissible(t, p.dotted())).count();
    ensure((kept, all.len()) == (2, 3), || format!("{kept} admissible of {}", all.len()))
}

fn criterion_3() -> Outcome {
    let mu: DyckPath = "URURURURUR".parse().unwrap();
    let tilings = enumerate_tilings(&mu);
    ensure(tilings.len() == 12, || format!("{} tilings", tilings.len()))?;
    let total = tilings.iter().fold(Scalar::zero(), |a, t| &a + &tiling_weight(t, Flavor::A));
    let d = Diagram::from_path(&DottedPath::undotted(mu));
    let rec = coeff_recursive(Flavor::A, &d).map_err(|e| e.to_string())?;
    ensure(total == rec, || format!("sum {total} vs coefficient {rec}"))
}

/// Tiling generating function equals the recursion for every diagram up to
/// `max_n`, and both projector recurrences agree with it up to `jw_max_n`.
fn equivalence(flavor: Flavor, max_n: usize, jw_max_n: usize) -> Outcome {
    for n in 1..=max_n {
        let projections = if n <= jw_max_n {
            let w = jw_wenzl(flavor, n).map_err(|e| e.to_string())?;
            let m = jw_morrison(flavor, n).map_err(|e| e.to_string())?;
            ensure(w == m, || format!("wenzl and morrison differ at n = {n}"))?;
            Some(w)
        } else {
            None
        };
        for d in Diagram::all(flavor, n) {
            let rec = coeff_recursive(flavor, &d).map_err(|e| e.to_string())?;
            let z = gf(flavor, &d.to_path());
            ensure(z == rec, || format!("{d}: gf {z} vs recursion {rec}"))?;
            if let Some(p) = &projections {
                let c = p.coeff(&d).unwrap();
                ensure(c == rec, || format!("{d}: projector {c} vs recursion {rec}"))?;
            }
        }
        if let Some(p) = &projections {
            let count = Diagram::all(flavor, n).len();
            ensure(p.len() == count, || format!("n = {n}: {} nonzero terms of {count}", p.len()))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (flavor, max) in [(Flavor::A, 6), (Flavor::B, 4)] {
        for n in 1..=max {
            let r = verify_projector(&jw_wenzl(flavor, n).unwrap());
            let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
            ensure(failed.is_empty(), || format!("{flavor}{n}: {failed:?}"))?;
        }
    }
    for n in 1..=3 {
        let checks = verify_blob_identities(&jw_wenzl(Flavor::B, n).unwrap()).map_err(|e| e.to_string())?;
        ensure(checks.len() == 2 && checks.iter().all(|c| c.passed), || format!("n = {n}: {checks:?}"))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let two = qint(2).unwrap();
    for n in 2..=32 {
        let lhs = &two * &qint_b(n).unwrap();
        let rhs = &qint_b(n + 1).unwrap() + &qint_b(n - 1).unwrap();
        ensure(lhs == rhs, || format!("[2][{n}]_s"))?;
    }
    for n in 0..=32 {
        let p = qint(n).unwrap();
        ensure(p.invert_q() == p, || format!("[{n}] is not bar invariant"))?;
    }
    let poly = proptest::collection::vec((-3i64..=3, -3i32..=3, -2i32..=2), 0..4).prop_map(LaurentPoly::from_terms);
    let den = poly.clone().prop_filter("nonzero", |d| !d.is_zero());
    let scalar = (poly, den).prop_map(|(n, d)| Scalar::from_parts(n, d).unwrap());
    let triple = (scalar.clone(), scalar.clone(), scalar);
    let mut runner = TestRunner::deterministic();
    for k in 0..1000 {
        let (a, b, c) = triple.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-&a)).is_zero()
            && (&a * &Scalar::one()) == a
            && (a.is_zero() || (&a * &a.inv().unwrap()).is_one());
        ensure(ok, || format!("sample {k}: {a}, {b}, {c}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in 1..=7 {
        for i in 1..=n {
            let g = Diagram::g(Flavor::A, n, i).map_err(|e| e.to_string())?;
            let c = coeff_recursive(Flavor::A, &g).map_err(|e| e.to_string())?;
            ensure(c == frac(&[q(i as i64)], &[q(n as i64)]), || format!("g({n},{i}): {c}"))?;
        }
    }
    for n in 1..=4 {
        let p = jw_wenzl(Flavor::B, n).unwrap();
        for i in 0..=n {
            let g = Diagram::g(Flavor::B, n, i).map_err(|e| e.to_string())?;
            let c = p.coeff(&g).unwrap();
            ensure(c == frac(&[qs(i as i64)], &[qs(n as i64)]), || format!("g_B({n},{i}): {c}"))?;
        }
    }
    Ok(())
}

struct Criterion {
    label: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { label: "1 projection tables P2 P3 Q1 Q2", limit: secs(1), run: criterion_1 },
        Criterion { label: "2 coefficient of e1 in P3 by three methods", limit: secs(1), run: criterion_2a },
        Criterion { label: "2 weights of two designated tilings of (UR)^5", limit: secs(1), run: criterion_2b },
        Criterion { label: "2 generating function of URURUR", limit: secs(1), run: criterion_2c },
        Criterion { label: "2 dotted coefficient of (1,2)(3,6)*(4,5)(7,8)", limit: secs(1), run: criterion_2d },
        Criterion { label: "3 tiling census of (UR)^5", limit: secs(1), run: criterion_3 },
        Criterion { label: "4 type A equivalence n <= 8", limit: secs(300), run: || equivalence(Flavor::A, 8, 6) },
        Criterion { label: "5 type B equivalence n <= 5", limit: secs(600), run: || equivalence(Flavor::B, 5, 4) },
        Criterion { label: "6 projector properties", limit: secs(120), run: criterion_6 },
        Criterion { label: "7 scalar identities", limit: secs(1), run: criterion_7 },
        Criterion { label: "8 g-family law", limit: secs(30), run: criterion_8 },
    ];
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= c.limit => Ok(()),
            Ok(()) => Err(format!("too slow, limit {:?}", c.limit)),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("PASS criterion {} ({:.2} s)", c.label, elapsed.as_secs_f64()),
            Err(e) => {
                all_ok = false;
                println!("FAIL criterion {} ({:.2} s): {e}", c.label, elapsed.as_secs_f64());
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
