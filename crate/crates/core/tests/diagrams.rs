use jwdyck::report::relations;
use jwdyck::{compose, Diagram, Element, Flavor, Scalar};

fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn central_binomial(n: u64) -> u64 {
    (0..n).fold(1, |c, k| c * (2 * (2 * k + 1)) / (k + 1))
}

#[test]
fn type_a_counts_are_catalan() {
    for n in 0..=10 {
        assert_eq!(Diagram::all(Flavor::A, n).len() as u64, catalan(n as u64), "n = {n}");
    }
}

#[test]
fn type_b_counts_are_central_binomial() {
    for n in 0..=6 {
        assert_eq!(Diagram::all(Flavor::B, n).len() as u64, central_binomial(n as u64), "n = {n}");
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for flavor in [Flavor::A, Flavor::B] {
        let all = Diagram::all(flavor, 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn folding_round_trip() {
    for (flavor, max) in [(Flavor::A, 8), (Flavor::B, 5)] {
        for n in 0..=max {
            for d in Diagram::all(flavor, n) {
                let p = d.to_path();
                assert_eq!(p.path().size(), n);
                assert_eq!(Diagram::from_path(&p), d);
            }
        }
    }
}

#[test]
fn text_round_trip() {
    for d in Diagram::all(Flavor::B, 4) {
        let back: Diagram = d.to_string().parse().unwrap();
        assert_eq!(back, d);
    }
}

/// `(ab)c = a(bc)` for every triple of basis diagrams, tracking loop factors.
#[test]
fn composition_is_associative() {
    for (flavor, n) in [(Flavor::A, 4), (Flavor::B, 2), (Flavor::B, 3)] {
        let all = Diagram::all(flavor, n);
        for a in &all {
            for b in &all {
                let (s_ab, ab) = compose(a, b).unwrap();
                for c in all.iter().step_by(3) {
                    let (s_abc, left) = compose(&ab, c).unwrap();
                    let (s_bc, bc) = compose(b, c).unwrap();
                    let (s_a_bc, right) = compose(a, &bc).unwrap();
                    assert_eq!(left, right);
                    assert_eq!(&s_ab * &s_abc, &s_bc * &s_a_bc, "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn element_product_is_associative() {
    let gens: Vec<Element> = (0..4).map(|i| Element::generator(Flavor::B, 4, i).unwrap()).collect();
    let x = gens[0].add(&gens[2]).unwrap();
    let y = gens[1].scalar_mul(&Scalar::from_int(3)).add(&gens[3]).unwrap();
    let z = gens[2].sub(&gens[0]).unwrap();
    assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
}

#[test]
fn defining_relations_hold() {
    for flavor in [Flavor::A, Flavor::B] {
        let r = relations(flavor, 6);
        assert!(!r.checks.is_empty());
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
