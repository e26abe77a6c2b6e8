//! Linear combinations of diagrams and the Jones–Wenzl projections.

mod element;
mod jw;
mod render;
mod recursive;
mod verify;

pub use element::Element;
pub use jw::{jw, jw_morrison, jw_wenzl, Method};
pub use recursive::{coeff_recursive, CoeffCache};
pub use verify::{verify_blob_identities, verify_projector, Check, ProjectorReport};

use crate::diagram::{DiagramError, Flavor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjectorError {
    #[error("flavor mismatch: {0} vs {1}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("no type {flavor} projection on {n} strands")]
    OutOfRange { flavor: Flavor, n: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
