//! Named pass/fail checks and the suites that produce them.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::diagram::{Diagram, Flavor};
use crate::projector::{coeff_recursive, jw_morrison, jw_wenzl, verify_blob_identities, verify_projector, Element};
use crate::scalar::{dotted_loop_value, qratio, qratio_b, quantum, quantum_b, Scalar};
use crate::tiling::{admissible, enumerate_tilings, gf, gf_a, gf_b, tiling_weight, DottedPath, DyckPath, DyckTile, Tiling};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            expected: None,
            actual: None,
            elapsed: Duration::ZERO,
        }
    }

    fn compare<T: PartialEq + Serialize>(name: impl Into<String>, expected: &T, actual: &T) -> Self {
        Self {
            name: name.into(),
            passed: expected == actual,
            expected: serde_json::to_value(expected).ok(),
            actual: serde_json::to_value(actual).ok(),
            elapsed: Duration::ZERO,
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// JSON form; wall-clock times are included only on request so that
    /// repeated runs stay byte-identical by default.
    pub fn to_json(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = serde_json::to_value(c).expect("check serializes");
                if timings {
                    v["wall_ms"] = Value::from(c.elapsed.as_secs_f64() * 1e3);
                }
                v
            })
            .collect();
        serde_json::json!({
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.failures().count(),
            "checks": checks,
        })
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}", c.name));
            if timings {
                out.push_str(&format!(" ({:.1} ms)", c.elapsed.as_secs_f64() * 1e3));
            }
            out.push('\n');
            if !c.passed {
                if let Some(e) = &c.expected {
                    out.push_str(&format!("  expected: {e}\n"));
                }
                if let Some(a) = &c.actual {
                    out.push_str(&format!("  actual:   {a}\n"));
                }
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Projector,
    Equivalence,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "relations" => Ok(Suite::Relations),
            "projector" => Ok(Suite::Projector),
            "equivalence" => Ok(Suite::Equivalence),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?} (expected relations, projector, equivalence or all)")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Projector => "projector",
            Suite::Equivalence => "equivalence",
            Suite::All => "all",
        })
    }
}

pub fn run_suite(suite: Suite, flavor: Flavor, max_n: usize) -> Report {
    let mut report = Report::default();
    if matches!(suite, Suite::Relations | Suite::All) {
        report.extend(relations(flavor, max_n));
    }
    if matches!(suite, Suite::Projector | Suite::All) {
        report.extend(projector_suite(flavor, max_n));
    }
    if matches!(suite, Suite::Equivalence | Suite::All) {
        report.extend(equivalence(flavor, max_n, max_n));
    }
    report
}

fn gen(flavor: Flavor, n: usize, i: usize) -> Element {
    Element::generator(flavor, n, i).expect("generator index in range")
}

fn product(factors: &[&Element]) -> Element {
    let (first, rest) = factors.split_first().expect("nonempty product");
    rest.iter()
        .fold((*first).clone(), |acc, x| acc.mul(x).expect("matching algebra"))
}

/// The defining relations of the algebra on `n` strands for every
/// `n <= max_n`, checked by diagram composition.
pub fn relations(flavor: Flavor, max_n: usize) -> Report {
    let mut report = Report::default();
    let minus_two = Scalar::from_poly(-quantum(2));
    for n in 2..=max_n {
        let start = Instant::now();
        let mut ok = true;
        for i in 1..n {
            let e = gen(flavor, n, i);
            ok &= product(&[&e, &e]) == e.scalar_mul(&minus_two);
            if i + 1 < n {
                let f = gen(flavor, n, i + 1);
                ok &= product(&[&e, &f, &e]) == e;
                ok &= product(&[&f, &e, &f]) == f;
            }
            for j in i + 2..n {
                let f = gen(flavor, n, j);
                ok &= product(&[&e, &f]) == product(&[&f, &e]);
            }
        }
        report
            .checks
            .push(CheckResult::new(format!("relations-{flavor}-n{n}"), ok).timed(start));
    }
    if flavor == Flavor::B {
        for n in 1..=max_n {
            let start = Instant::now();
            let e0 = gen(flavor, n, 0);
            let mut ok = product(&[&e0, &e0]) == e0.scalar_mul(&Scalar::from_poly(-quantum_b(1)));
            if n >= 2 {
                let e1 = gen(flavor, n, 1);
                ok &= product(&[&e1, &e0, &e1]) == e1.scalar_mul(&Scalar::from_poly(dotted_loop_value()));
            }
            for i in 2..n {
                let e = gen(flavor, n, i);
                ok &= product(&[&e0, &e]) == product(&[&e, &e0]);
            }
            report
                .checks
                .push(CheckResult::new(format!("blob-relations-n{n}"), ok).timed(start));
        }
    }
    report
}

fn g_ratio(flavor: Flavor, i: usize, n: usize) -> Scalar {
    match flavor {
        Flavor::A => qratio(i, n),
        Flavor::B => qratio_b(i, n),
    }
}

/// Projector properties, agreement of the two recurrences, and the
/// coefficients of the `g_{n,i}` family, for `n <= max_n`.
pub fn projector_suite(flavor: Flavor, max_n: usize) -> Report {
    let mut report = Report::default();
    let lo = match flavor {
        Flavor::A => 1,
        Flavor::B => 0,
    };
    for n in 1..=max_n {
        let start = Instant::now();
        let p = jw_wenzl(flavor, n).expect("n in range");
        let m = jw_morrison(flavor, n).expect("n in range");
        report
            .checks
            .push(CheckResult::new(format!("wenzl-equals-morrison-{flavor}-n{n}"), p == m).timed(start));

        let start = Instant::now();
        let r = verify_projector(&p);
        for c in r.checks {
            report
                .checks
                .push(CheckResult::new(format!("projector-{flavor}-n{n}-{}", c.name), c.passed));
        }
        if let Some(last) = report.checks.last_mut() {
            last.elapsed = start.elapsed();
        }

        let start = Instant::now();
        let mut ok = true;
        for i in lo..=n {
            let g = Diagram::g(flavor, n, i).expect("i in range");
            let want = g_ratio(flavor, i, n);
            ok &= p.coeff(&g).expect("valid diagram") == want;
            ok &= coeff_recursive(flavor, &g).expect("valid diagram") == want;
        }
        report
            .checks
            .push(CheckResult::new(format!("g-family-{flavor}-n{n}"), ok).timed(start));

        if flavor == Flavor::B {
            let start = Instant::now();
            for c in verify_blob_identities(&p).expect("type B, n >= 1") {
                report
                    .checks
                    .push(CheckResult::new(format!("blob-identity-n{n}-{}", c.name), c.passed).timed(start));
            }
        }
    }
    report
}

/// For every basis diagram with `n <= max_n`, the tiling generating function
/// equals the recursive coefficient; for `n <= jw_max_n` both also equal the
/// coefficient read off the projection.
pub fn equivalence(flavor: Flavor, max_n: usize, jw_max_n: usize) -> Report {
    let mut report = Report::default();
    for n in 1..=max_n {
        let start = Instant::now();
        let all = Diagram::all(flavor, n);
        let jw = (n <= jw_max_n).then(|| jw_wenzl(flavor, n).expect("n in range"));
        let mut mismatched = Vec::new();
        for d in &all {
            let rec = coeff_recursive(flavor, d).expect("valid diagram");
            let mut ok = gf(flavor, &d.to_path()) == rec;
            if let Some(p) = &jw {
                ok &= p.coeff(d).expect("valid diagram") == rec;
            }
            if !ok {
                mismatched.push(d.to_string());
            }
        }
        let label = if jw.is_some() { "gf-recursive-projector" } else { "gf-recursive" };
        let mut c = CheckResult::new(format!("equivalence-{flavor}-n{n}-{label}"), mismatched.is_empty()).timed(start);
        c.expected = Some(Value::from(format!("{} diagrams agree", all.len())));
        c.actual = Some(if mismatched.is_empty() {
            Value::from(format!("{} diagrams agree", all.len()))
        } else {
            Value::from(mismatched)
        });
        report.checks.push(c);
    }
    report
}

fn d(s: &str) -> Diagram {
    s.parse().expect("well-formed diagram literal")
}

fn prod_scalars(xs: &[Scalar]) -> Scalar {
    xs.iter().fold(Scalar::one(), |acc, x| &acc * x)
}

/// Element from `(coefficient, generator word)` pairs; the empty word is the
/// identity.
fn from_words(flavor: Flavor, n: usize, terms: &[(Scalar, &[usize])]) -> Element {
    let mut out = Element::zero(flavor, n);
    for (c, word) in terms {
        let gens: Vec<Element> = word.iter().map(|&i| gen(flavor, n, i)).collect();
        let refs: Vec<&Element> = gens.iter().collect();
        let x = if refs.is_empty() {
            Element::identity(flavor, n)
        } else {
            product(&refs)
        };
        out = out.add(&x.scalar_mul(c)).expect("matching algebra");
    }
    out
}

fn compare_element(report: &mut Report, name: &str, expected: &Element, flavor: Flavor, n: usize) {
    for (method, p) in [("wenzl", jw_wenzl(flavor, n)), ("morrison", jw_morrison(flavor, n))] {
        let start = Instant::now();
        let p = p.expect("n in range");
        report
            .checks
            .push(CheckResult::compare(format!("{name}-{method}"), expected, &p).timed(start));
    }
}

/// One named check per worked example, against hard-coded targets.
pub fn reproduce_paper() -> Report {
    let mut r = Report::default();
    let one = Scalar::one;

    let p2 = from_words(Flavor::A, 2, &[(one(), &[]), (qratio(1, 2), &[1])]);
    compare_element(&mut r, "p2", &p2, Flavor::A, 2);
    let p3 = from_words(
        Flavor::A,
        3,
        &[
            (one(), &[]),
            (qratio(2, 3), &[1]),
            (qratio(2, 3), &[2]),
            (qratio(1, 3), &[2, 1]),
            (qratio(1, 3), &[1, 2]),
        ],
    );
    compare_element(&mut r, "p3", &p3, Flavor::A, 3);

    let start = Instant::now();
    let e1 = d("(1,2)(3,4)(5,6)");
    let target = qratio(2, 3);
    r.checks.push(
        CheckResult::compare("example-2.6-recursive", &target, &coeff_recursive(Flavor::A, &e1).expect("type A")).timed(start),
    );
    let start = Instant::now();
    r.checks
        .push(CheckResult::compare("example-2.6-tiling", &target, &gf_a(e1.to_path().path())).timed(start));
    let start = Instant::now();
    let p = jw_wenzl(Flavor::A, 3).expect("n in range");
    r.checks
        .push(CheckResult::compare("example-2.6-projector", &target, &p.coeff(&e1).expect("type A")).timed(start));

    let five_peaks: DyckPath = "URURURURUR".parse().expect("Dyck word");
    let start = Instant::now();
    let tilings = enumerate_tilings(&five_peaks);
    r.checks
        .push(CheckResult::compare("fig-2-tiling-count", &12usize, &tilings.len()).timed(start));
    let start = Instant::now();
    let total = tilings
        .iter()
        .fold(Scalar::zero(), |acc, t| &acc + &tiling_weight(t, Flavor::A));
    let rec = coeff_recursive(Flavor::A, &Diagram::from_path(&DottedPath::undotted(five_peaks.clone()))).expect("type A");
    r.checks
        .push(CheckResult::compare("fig-2-sum-equals-coefficient", &rec, &total).timed(start));

    // the two highlighted tilings as (h, start_x, profile) triples
    let designated = [
        (
            "example-3.3-d1",
            vec![(1, 2, "UR"), (1, 6, "UR"), (2, 5, ""), (3, 4, ""), (3, 6, ""), (4, 5, "")],
            qratio(3, 1).div(&prod_scalars(&[qratio(2, 1), qratio(4, 1), qratio(5, 1)])),
        ),
        (
            "example-3.3-d2",
            vec![(1, 2, ""), (1, 4, "UR"), (1, 8, ""), (2, 3, ""), (2, 7, ""), (3, 4, "UR")],
            Scalar::one().div(&prod_scalars(&[qratio(2, 1), qratio(3, 1), qratio(4, 1)])),
        ),
    ];
    for (name, tiles, target) in designated {
        let start = Instant::now();
        let target = target.expect("nonzero denominator");
        let tiles = tiles
            .into_iter()
            .map(|(h, x, w)| DyckTile::new(h, x, w.parse().expect("Dyck word")))
            .collect();
        let wanted = Tiling::new(five_peaks.clone(), tiles);
        let found = tilings.contains(&wanted);
        let mut c = CheckResult::compare(name, &target, &tiling_weight(&wanted, Flavor::A)).timed(start);
        c.passed &= found;
        r.checks.push(c);
    }

    let mu: DyckPath = "URURUR".parse().expect("Dyck word");
    let start = Instant::now();
    r.checks
        .push(CheckResult::compare("example-3.4-count", &2usize, &enumerate_tilings(&mu).len()).timed(start));
    let start = Instant::now();
    r.checks
        .push(CheckResult::compare("example-3.4-Z", &qratio(2, 3), &gf_a(&mu)).timed(start));

    let q1 = from_words(Flavor::B, 1, &[(one(), &[]), (qratio_b(0, 1), &[0])]);
    compare_element(&mut r, "q1", &q1, Flavor::B, 1);
    let q2 = from_words(
        Flavor::B,
        2,
        &[
            (one(), &[]),
            (qratio_b(0, 1), &[0]),
            (qratio_b(1, 2), &[1]),
            (qratio_b(0, 2), &[1, 0]),
            (qratio_b(0, 2), &[0, 1]),
            (&qratio_b(0, 2) * &qratio_b(0, 1), &[0, 1, 0]),
        ],
    );
    compare_element(&mut r, "q2", &q2, Flavor::B, 2);

    let ex47 = d("(1,2)(3,6)*(4,5)(7,8)");
    let target_b = &(&Scalar::from_poly(quantum(2)) * &qratio_b(1, 4)) * &qratio_b(0, 2);
    let start = Instant::now();
    r.checks.push(
        CheckResult::compare("example-4.7-recursive", &target_b, &coeff_recursive(Flavor::B, &ex47).expect("type B"))
            .timed(start),
    );
    let start = Instant::now();
    let q4 = jw_wenzl(Flavor::B, 4).expect("n in range");
    r.checks.push(
        CheckResult::compare("example-4.7-projector", &target_b, &q4.coeff(&ex47).expect("type B")).timed(start),
    );

    let p52 = ex47.to_path();
    let start = Instant::now();
    r.checks
        .push(CheckResult::compare("example-5.2-ZB", &target_b, &gf_b(&p52)).timed(start));
    let start = Instant::now();
    let all = enumerate_tilings(p52.path());
    let kept = all.iter().filter(|t| admissible(t, p52.dotted())).count();
    r.checks
        .push(CheckResult::compare("example-5.2-admissible", &(2usize, 3usize), &(kept, all.len())).timed(start));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        let r = reproduce_paper();
        assert!(r.passed(), "{}", r.to_text(false));
        assert_eq!(r.checks.len(), 21);
    }

    #[test]
    fn small_suites() {
        assert!(run_suite(Suite::All, Flavor::A, 4).passed());
        assert!(run_suite(Suite::All, Flavor::B, 3).passed());
        assert!(run_suite(Suite::All, Flavor::A, 1).passed());
    }

    #[test]
    fn deterministic_json() {
        let a = serde_json::to_string(&reproduce_paper().to_json(false)).unwrap();
        let b = serde_json::to_string(&reproduce_paper().to_json(false)).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("wall_ms"));
        assert!(serde_json::to_string(&reproduce_paper().to_json(true)).unwrap().contains("wall_ms"));
    }

    #[test]
    fn failing_check_is_reported() {
        let mut r = Report::default();
        r.checks.push(CheckResult::compare("x", &1usize, &2usize));
        assert!(!r.passed());
        assert!(r.to_text(false).contains("FAIL x\n  expected: 1\n  actual:   2\n"));
    }
}
