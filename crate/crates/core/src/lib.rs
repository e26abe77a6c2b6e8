pub mod diagram;
pub mod projector;
pub mod report;
pub mod scalar;
pub mod tiling;

pub use diagram::{compose, Diagram, DiagramError, Flavor};
pub use projector::{coeff_recursive, jw_morrison, jw_wenzl, Element, Method, ProjectorError};
pub use scalar::{LaurentPoly, Scalar, ScalarError};
pub use tiling::{DottedPath, DyckPath, PathError};
