use serde::Serialize;

use super::{Element, ProjectorError};
use crate::diagram::{Diagram, Flavor};
use crate::scalar::qratio_b;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectorReport {
    pub flavor: Flavor,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl ProjectorReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn holds(r: Result<bool, ProjectorError>) -> bool {
    r.unwrap_or(false)
}

/// Checks `E E = E`, `e_i E = E e_i = 0` for every generator, and that the
/// identity coefficient is one.
pub fn verify_projector(e: &Element) -> ProjectorReport {
    let (flavor, n) = (e.flavor(), e.n());
    let mut checks = vec![Check::new("idempotent", holds(e.mul(e).map(|ee| &ee == e)))];
    let lo = match flavor {
        Flavor::A => 1,
        Flavor::B => 0,
    };
    for i in lo..n {
        let g = Element::generator(flavor, n, i);
        let left = g.as_ref().map_err(Clone::clone).and_then(|g| g.mul(e)).map(|x| x.is_zero());
        let right = g.as_ref().map_err(Clone::clone).and_then(|g| e.mul(g)).map(|x| x.is_zero());
        checks.push(Check::new(format!("e{i}*E=0"), holds(left)));
        checks.push(Check::new(format!("E*e{i}=0"), holds(right)));
    }
    let id = e.coeff(&Diagram::identity(n)).map(|c| c.is_one());
    checks.push(Check::new("identity-coefficient", holds(id)));
    ProjectorReport { flavor, n, checks }
}

/// For a type B projection `Q` on `n >= 1` strands, checks inside the
/// algebra on `n+1` strands that `(e_n Q)^2 = -([n+1]_s/[n]_s) e_n Q` and
/// `(Q e_n Q)^2 = -([n+1]_s/[n]_s) Q e_n Q`.
pub fn verify_blob_identities(q: &Element) -> Result<Vec<Check>, ProjectorError> {
    let n = q.n();
    if q.flavor() != Flavor::B || n == 0 {
        return Err(ProjectorError::OutOfRange { flavor: q.flavor(), n });
    }
    let ext = q.extend(n + 1)?;
    let e = Element::generator(Flavor::B, n + 1, n)?;
    let k = -&qratio_b(n + 1, n);
    let eq = e.mul(&ext)?;
    let first = eq.mul(&eq)? == eq.scalar_mul(&k);
    let qeq = ext.mul(&eq)?;
    let second = qeq.mul(&qeq)? == qeq.scalar_mul(&k);
    Ok(vec![
        Check::new(format!("(e{n}Q)^2"), first),
        Check::new(format!("(Qe{n}Q)^2"), second),
    ])
}
