use std::fmt;
use std::str::FromStr;

use super::{Element, ProjectorError};
use crate::diagram::{Diagram, Flavor};
use crate::scalar::{qratio, qratio_b, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Wenzl,
    Morrison,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Wenzl => "wenzl",
            Method::Morrison => "morrison",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wenzl" => Ok(Method::Wenzl),
            "morrison" => Ok(Method::Morrison),
            _ => Err(format!("unknown method {s:?} (expected wenzl or morrison)")),
        }
    }
}

fn ratio(flavor: Flavor, a: usize, b: usize) -> Scalar {
    match flavor {
        Flavor::A => qratio(a, b),
        Flavor::B => qratio_b(a, b),
    }
}

/// Type A starts from `P^(1) = 1`, type B from `Q^(0) = 1` on zero strands.
fn start(flavor: Flavor, n: usize) -> Result<(usize, Element), ProjectorError> {
    match flavor {
        Flavor::A if n == 0 => Err(ProjectorError::OutOfRange { flavor, n }),
        Flavor::A => Ok((1, Element::identity(flavor, 1))),
        Flavor::B => Ok((0, Element::identity(flavor, 0))),
    }
}

/// `P^(k+1) = P^(k) + ([k]/[k+1]) P^(k) e_k P^(k)`, with `P^(k)` extended by
/// one strand before multiplying.
pub fn jw_wenzl(flavor: Flavor, n: usize) -> Result<Element, ProjectorError> {
    let (mut k, mut p) = start(flavor, n)?;
    while k < n {
        let ext = p.extend(k + 1)?;
        let e = Element::generator(flavor, k + 1, k)?;
        let sandwich = ext.mul(&e)?.mul(&ext)?;
        p = ext.add(&sandwich.scalar_mul(&ratio(flavor, k, k + 1)))?;
        k += 1;
    }
    Ok(p)
}

/// `P^(k+1) = P^(k) * sum_i ([i]/[k+1]) g_{k+1,i}`; the type B sum starts at
/// `i = 0`.
pub fn jw_morrison(flavor: Flavor, n: usize) -> Result<Element, ProjectorError> {
    let (mut k, mut p) = start(flavor, n)?;
    let lo = match flavor {
        Flavor::A => 1,
        Flavor::B => 0,
    };
    while k < n {
        let m = k + 1;
        let terms = (lo..=m)
            .map(|i| Ok((Diagram::g(flavor, m, i)?, ratio(flavor, i, m))))
            .collect::<Result<Vec<_>, ProjectorError>>()?;
        let g = Element::from_terms(flavor, m, terms)?;
        p = p.extend(m)?.mul(&g)?;
        k = m;
    }
    Ok(p)
}

pub fn jw(flavor: Flavor, n: usize, method: Method) -> Result<Element, ProjectorError> {
    match method {
        Method::Wenzl => jw_wenzl(flavor, n),
        Method::Morrison => jw_morrison(flavor, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn p2_and_p3() {
        let p2 = jw_wenzl(Flavor::A, 2).unwrap();
        assert_eq!(p2.len(), 2);
        assert_eq!(p2.coeff(&d("(1,4)(2,3)")).unwrap(), Scalar::one());
        assert_eq!(p2.coeff(&d("(1,2)(3,4)")).unwrap(), qratio(1, 2));

        let p3 = jw_wenzl(Flavor::A, 3).unwrap();
        assert_eq!(p3.len(), 5);
        let e1 = Diagram::generator(Flavor::A, 3, 1).unwrap();
        let e2 = Diagram::generator(Flavor::A, 3, 2).unwrap();
        assert_eq!(p3.coeff(&e1).unwrap(), qratio(2, 3));
        assert_eq!(p3.coeff(&e2).unwrap(), qratio(2, 3));
        // e_1 e_2 and e_2 e_1
        assert_eq!(p3.coeff(&d("(1,2)(3,6)(4,5)")).unwrap(), qratio(1, 3));
        assert_eq!(p3.coeff(&d("(1,4)(2,3)(5,6)")).unwrap(), qratio(1, 3));
        assert_eq!(jw_morrison(Flavor::A, 3).unwrap(), p3);
    }

    #[test]
    fn q1() {
        let q1 = jw_wenzl(Flavor::B, 1).unwrap();
        let e0 = Diagram::generator(Flavor::B, 1, 0).unwrap();
        assert_eq!(q1.coeff(&Diagram::identity(1)).unwrap(), Scalar::one());
        assert_eq!(q1.coeff(&e0).unwrap(), qratio_b(0, 1));
        assert_eq!(q1.len(), 2);
        assert_eq!(jw_morrison(Flavor::B, 1).unwrap(), q1);
    }

    #[test]
    fn range() {
        assert!(matches!(jw_wenzl(Flavor::A, 0), Err(ProjectorError::OutOfRange { .. })));
        assert_eq!(jw_wenzl(Flavor::B, 0).unwrap(), Element::identity(Flavor::B, 0));
    }

    #[test]
    fn method_names() {
        assert_eq!("morrison".parse::<Method>().unwrap(), Method::Morrison);
        assert_eq!(Method::Wenzl.to_string(), "wenzl");
        assert!("other".parse::<Method>().is_err());
    }
}
