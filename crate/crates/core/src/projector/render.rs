use std::collections::{HashMap, VecDeque};

use super::Element;
use crate::diagram::{compose_raw, Diagram, Flavor};
use crate::scalar::Scalar;

/// Shortest generator word for every diagram reachable from the identity by
/// multiplying generators on the right without picking up a scalar.
fn words(flavor: Flavor, n: usize) -> HashMap<Diagram, Vec<usize>> {
    let lo = match flavor {
        Flavor::A => 1,
        Flavor::B => 0,
    };
    let gens: Vec<Diagram> = (lo..n)
        .map(|i| Diagram::generator(flavor, n, i).expect("index in range"))
        .collect();
    let id = Diagram::identity(n);
    let mut out = HashMap::from([(id.clone(), Vec::new())]);
    let mut queue = VecDeque::from([id]);
    while let Some(d) = queue.pop_front() {
        let word = out[&d].clone();
        for (k, g) in gens.iter().enumerate() {
            let Ok((factor, next)) = compose_raw(&d, g) else {
                continue;
            };
            if factor.is_one() && !out.contains_key(&next) {
                let mut w = word.clone();
                w.push(lo + k);
                out.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    out
}

/// Coefficient prefix for a term: empty for one, `-` for minus one, and
/// parenthesized when it is a bare sum.
fn coeff_prefix(c: &Scalar, latex: bool) -> String {
    if c.is_one() {
        return String::new();
    }
    if (-c).is_one() {
        return "-".to_string();
    }
    let body = if latex { c.to_latex() } else { c.to_text() };
    if c.denominator().is_one() && c.numerator().len() > 1 && !body.starts_with('[') {
        format!("({body})")
    } else if latex {
        body
    } else {
        format!("{body} ")
    }
}

fn diagram_name(d: &Diagram, word: Option<&Vec<usize>>, latex: bool) -> String {
    match (word, latex) {
        (Some(w), true) if w.is_empty() => "\\mathbf{1}".to_string(),
        (Some(w), false) if w.is_empty() => "1".to_string(),
        (Some(w), true) => w.iter().map(|i| format!("e_{{{i}}}")).collect(),
        (Some(w), false) => w.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(" "),
        (None, true) => {
            let arcs: String = d
                .arcs()
                .iter()
                .map(|&(a, b)| {
                    let dot = if d.is_dotted((a, b)) { "^{\\bullet}" } else { "" };
                    format!("({a},{b}){dot}")
                })
                .collect();
            format!("\\langle {arcs}\\rangle")
        }
        (None, false) => format!("<{d}>"),
    }
}

impl Element {
    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let words = words(self.flavor(), self.n());
        // shortest words first, diagrams without a word last
        let mut terms: Vec<_> = self.terms().iter().collect();
        terms.sort_by_key(|(d, _)| words.get(*d).map_or((usize::MAX, Vec::new()), |w| (w.len(), w.clone())));
        let mut out = String::new();
        for (k, (d, c)) in terms.into_iter().enumerate() {
            let coeff = coeff_prefix(c, latex);
            let body = diagram_name(d, words.get(d), latex);
            match coeff.strip_prefix('-') {
                Some(rest) if k > 0 => out.push_str(&format!(" - {rest}{body}")),
                _ if k > 0 => out.push_str(&format!(" + {coeff}{body}")),
                _ => out.push_str(&format!("{coeff}{body}")),
            }
        }
        out
    }

    /// One term per diagram, written as a generator word when one is known
    /// and as its arc list otherwise. Coefficients use quantum integers when
    /// they factor that way and raw polynomial fractions otherwise.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    /// Plain-text counterpart of [`Element::to_latex`], e.g. `1 + 1/[2] e1`.
    pub fn to_text(&self) -> String {
        self.render(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projector::jw_wenzl;

    #[test]
    fn p2() {
        let p2 = jw_wenzl(Flavor::A, 2).unwrap();
        assert_eq!(p2.to_latex(), "\\mathbf{1} + \\frac{1}{[2]}e_{1}");
        assert_eq!(p2.to_text(), "1 + 1/[2] e1");
    }

    #[test]
    fn q1() {
        let q1 = jw_wenzl(Flavor::B, 1).unwrap();
        assert_eq!(q1.to_latex(), "\\mathbf{1} + \\frac{1}{[1]_s}e_{0}");
        assert_eq!(q1.to_text(), "1 + 1/[1]_s e0");
    }

    #[test]
    fn p3_text() {
        let p3 = jw_wenzl(Flavor::A, 3).unwrap();
        assert_eq!(p3.to_text(), "1 + [2]/[3] e1 + [2]/[3] e2 + 1/[3] e1 e2 + 1/[3] e2 e1");
    }

    #[test]
    fn words_cover_every_diagram() {
        assert_eq!(words(Flavor::A, 4).len(), 14);
        assert_eq!(words(Flavor::B, 3).len(), 20);
    }
}
