//! Temperley–Lieb diagrams of types A and B in folded form.
//!
//! An `n`-strand diagram is stored as a non-crossing perfect matching on the
//! points `1..=2n`: bottom point `b_k` is `k` and top point `t_k` is
//! `2n + 1 - k`. Labelling left endpoints `U` and right endpoints `R` reads off
//! the corresponding Dyck path. Type-B dots sit on outermost arcs only.

mod compose;
mod parse;

use std::fmt;

use crate::tiling::{DottedPath, DyckPath, PathError, Step};

pub use compose::compose;
pub(crate) use compose::compose_raw;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Flavor {
    A,
    B,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::A => "A",
            Flavor::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("expected {expected} arcs for {n} strands, found {found}")]
    ArcCount { n: usize, expected: usize, found: usize },
    #[error("point {point} out of range 1..={max}")]
    PointOutOfRange { point: u32, max: u32 },
    #[error("point {0} used by more than one arc")]
    RepeatedPoint(u32),
    #[error("arcs ({0},{1}) and ({2},{3}) cross")]
    Crossing(u32, u32, u32, u32),
    #[error("dot on ({0},{1}) which is not an arc of the diagram")]
    DotNotArc(u32, u32),
    #[error("dotted arc ({0},{1}) is nested inside another arc")]
    DotNotOutermost(u32, u32),
    #[error("type A diagram carries dots")]
    DotsInTypeA,
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {i} out of range for a type {flavor} generator on {n} strands")]
    IndexOutOfRange { flavor: Flavor, n: usize, i: usize },
    #[error("position {0} is not an innermost cap")]
    NotInnermost(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Path(#[from] PathError),
}

/// A basis diagram: `n` strands, `n` arcs `(i, j)` with `i < j`, sorted by
/// `i`, and a sorted list of dotted arcs.
///
/// Ordering is by strand count, then arc list, then dot list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    arcs: Vec<(u32, u32)>,
    dots: Vec<(u32, u32)>,
}

impl Diagram {
    /// Validates and normalizes a diagram. Arc endpoints may be given in
    /// either order.
    pub fn new(n: usize, arcs: Vec<(u32, u32)>, dots: Vec<(u32, u32)>) -> Result<Self, DiagramError> {
        let mut arcs: Vec<(u32, u32)> = arcs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let mut dots: Vec<(u32, u32)> = dots.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        arcs.sort_unstable();
        dots.sort_unstable();
        dots.dedup();
        if arcs.len() != n {
            return Err(DiagramError::ArcCount {
                n,
                expected: n,
                found: arcs.len(),
            });
        }
        let max = 2 * n as u32;
        let mut partner = vec![0u32; 2 * n + 1];
        for &(a, b) in &arcs {
            for p in [a, b] {
                if p == 0 || p > max {
                    return Err(DiagramError::PointOutOfRange { point: p, max });
                }
                if partner[p as usize] != 0 || a == b {
                    return Err(DiagramError::RepeatedPoint(p));
                }
            }
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        let depth = nesting_depth(&partner).map_err(|(a, b, c, d)| DiagramError::Crossing(a, b, c, d))?;
        for &(a, b) in &dots {
            if partner[a as usize] != b {
                return Err(DiagramError::DotNotArc(a, b));
            }
            if depth[a as usize] != 0 {
                return Err(DiagramError::DotNotOutermost(a, b));
            }
        }
        Ok(Self { n, arcs, dots })
    }

    /// Construction without validation for callers that preserve the
    /// invariants by construction.
    fn from_sorted(n: usize, mut arcs: Vec<(u32, u32)>, mut dots: Vec<(u32, u32)>) -> Self {
        arcs.sort_unstable();
        dots.sort_unstable();
        debug_assert!(Self::new(n, arcs.clone(), dots.clone()).is_ok());
        Self { n, arcs, dots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn dots(&self) -> &[(u32, u32)] {
        &self.dots
    }

    pub fn has_dots(&self) -> bool {
        !self.dots.is_empty()
    }

    pub fn is_dotted(&self, arc: (u32, u32)) -> bool {
        self.dots.binary_search(&arc).is_ok()
    }

    /// `partner[p]` is the other endpoint of the arc at `p` (index 0 unused).
    pub fn partners(&self) -> Vec<u32> {
        let mut partner = vec![0u32; 2 * self.n + 1];
        for &(a, b) in &self.arcs {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        partner
    }

    /// Arcs nested inside no other arc.
    pub fn outermost_arcs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        let mut p = 1;
        let partner = self.partners();
        while p as usize <= 2 * self.n {
            let q = partner[p as usize];
            out.push((p, q));
            p = q + 1;
        }
        out
    }

    /// `n` vertical strands: arcs `(k, 2n+1-k)`.
    pub fn identity(n: usize) -> Self {
        let m = 2 * n as u32;
        Self {
            n,
            arcs: (1..=n as u32).map(|k| (k, m + 1 - k)).collect(),
            dots: Vec::new(),
        }
    }

    /// The generator `e_i`; `e_0` (type B) is the identity with a dot on the
    /// first strand.
    pub fn generator(flavor: Flavor, n: usize, i: usize) -> Result<Self, DiagramError> {
        let lo = if flavor == Flavor::B { 0 } else { 1 };
        if i < lo || i >= n {
            return Err(DiagramError::IndexOutOfRange { flavor, n, i });
        }
        let m = 2 * n as u32;
        if i == 0 {
            let mut d = Self::identity(n);
            d.dots.push((1, m));
            return Ok(d);
        }
        let i = i as u32;
        let mut arcs = vec![(i, i + 1), (m - i, m - i + 1)];
        arcs.extend((1..=n as u32).filter(|&k| k != i && k != i + 1).map(|k| (k, m + 1 - k)));
        Ok(Self::from_sorted(n, arcs, Vec::new()))
    }

    /// The diagram `g_{n,i}`: a cap at bottom positions `(i, i+1)`, a cup at
    /// the top right, and the remaining points joined in order. `g_{n,n}` is
    /// the identity; `g_{n,0}` is `g_{n,1}` with the bottom cap dotted.
    pub fn g(flavor: Flavor, n: usize, i: usize) -> Result<Self, DiagramError> {
        let lo = if flavor == Flavor::B { 0 } else { 1 };
        if i < lo || i > n || n == 0 {
            return Err(DiagramError::IndexOutOfRange { flavor, n, i });
        }
        if i == n {
            return Ok(Self::identity(n));
        }
        if i == 0 {
            let mut d = Self::g(Flavor::A, n, 1)?;
            d.dots.push((1, 2));
            return Ok(d);
        }
        let m = 2 * n as u32;
        let nn = n as u32;
        let i = i as u32;
        let mut arcs = vec![(i, i + 1), (nn + 1, nn + 2)];
        let rest = (1..=nn).filter(|&k| k != i && k != i + 1);
        arcs.extend(rest.enumerate().map(|(j, k)| (k, m - j as u32)));
        Ok(Self::from_sorted(n, arcs, Vec::new()))
    }

    /// Folds the diagram to its Dyck path; dotted arcs become dotted pairs.
    pub fn to_path(&self) -> DottedPath {
        let partner = self.partners();
        let steps = (1..=2 * self.n)
            .map(|p| if (partner[p] as usize) > p { Step::U } else { Step::R })
            .collect();
        let path = DyckPath::new(steps).expect("non-crossing matching folds to a Dyck path");
        DottedPath::new(path, self.dots.clone()).expect("dotted arcs are outermost")
    }

    /// Inverse of [`Diagram::to_path`].
    pub fn from_path(p: &DottedPath) -> Self {
        let path = p.path();
        Self::from_sorted(path.size(), path.matching(), p.dotted().to_vec())
    }

    /// Removal sites for the coefficient recurrence: every `i <= n` with an
    /// undotted arc `(i, i+1)`, plus `0` when `(1, 2)` is dotted.
    pub fn innermost_caps(&self) -> Vec<usize> {
        let partner = self.partners();
        let mut out = Vec::new();
        for (i, &p) in partner.iter().enumerate().take(self.n + 1).skip(1) {
            if p as usize == i + 1 {
                let arc = (i as u32, i as u32 + 1);
                if !self.is_dotted(arc) {
                    out.push(i);
                } else if i == 1 {
                    out.push(0);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Deletes the innermost cap at `i` (the dotted `(1,2)` for `i = 0`) and
    /// relabels, giving an `(n-1)`-strand diagram.
    pub fn remove_cap(&self, i: usize) -> Result<Self, DiagramError> {
        if !self.innermost_caps().contains(&i) {
            return Err(DiagramError::NotInnermost(i));
        }
        let a = i.max(1) as u32;
        let shift = |p: u32| if p > a + 1 { p - 2 } else { p };
        let relabel = |&(x, y): &(u32, u32)| (shift(x), shift(y));
        let arcs = self.arcs.iter().filter(|&&arc| arc != (a, a + 1)).map(relabel).collect();
        let dots = self.dots.iter().filter(|&&arc| arc != (a, a + 1)).map(relabel).collect();
        Ok(Self::from_sorted(self.n - 1, arcs, dots))
    }

    /// Adds vertical strands on the right up to `m` strands.
    pub fn extend(&self, m: usize) -> Result<Self, DiagramError> {
        if m < self.n {
            return Err(DiagramError::SizeMismatch(self.n, m));
        }
        let (n, d) = (self.n as u32, 2 * (m - self.n) as u32);
        let shift = |p: u32| if p > n { p + d } else { p };
        let relabel = |&(x, y): &(u32, u32)| (shift(x), shift(y));
        let mm = 2 * m as u32;
        let mut arcs: Vec<_> = self.arcs.iter().map(relabel).collect();
        arcs.extend((n + 1..=m as u32).map(|k| (k, mm + 1 - k)));
        let dots = self.dots.iter().map(relabel).collect();
        Ok(Self::from_sorted(m, arcs, dots))
    }

    /// Every basis diagram on `n` strands in canonical order. Type B adds
    /// each subset of outermost arcs as dotted.
    pub fn all(flavor: Flavor, n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for path in DyckPath::all(n) {
            let base = Self::from_path(&DottedPath::undotted(path));
            match flavor {
                Flavor::A => out.push(base),
                Flavor::B => {
                    let outer = base.outermost_arcs();
                    for mask in 0u64..(1 << outer.len()) {
                        let dots = (0..outer.len()).filter(|k| mask >> k & 1 == 1).map(|k| outer[k]).collect();
                        out.push(Self::from_sorted(n, base.arcs.clone(), dots));
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn check_flavor(&self, flavor: Flavor) -> Result<(), DiagramError> {
        if flavor == Flavor::A && self.has_dots() {
            return Err(DiagramError::DotsInTypeA);
        }
        Ok(())
    }
}

/// Nesting depth at every left endpoint, or the first crossing found.
fn nesting_depth(partner: &[u32]) -> Result<Vec<u32>, (u32, u32, u32, u32)> {
    let mut depth = vec![0u32; partner.len()];
    let mut stack: Vec<u32> = Vec::new();
    for p in 1..partner.len() as u32 {
        let q = partner[p as usize];
        if q > p {
            depth[p as usize] = stack.len() as u32;
            stack.push(p);
        } else {
            let top = stack.pop().expect("right endpoint after its partner");
            if top != q {
                return Err((top, partner[top as usize], q, p));
            }
        }
    }
    Ok(depth)
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.arcs {
            write!(f, "({a},{b})")?;
            if self.is_dotted((a, b)) {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram[{}; {self}]", self.n)
    }
}
