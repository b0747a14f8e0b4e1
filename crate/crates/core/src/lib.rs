pub mod error;
pub mod fixtures;
pub mod inequalities;
pub mod lp;
pub mod minors;
pub mod random;
pub mod realization;
pub mod series;
pub mod subdivision;
pub mod subset;
pub mod tropfn;

pub use error::{Error, Result};
pub use minors::{Mode, SeriesMatrix};
pub use series::{Coefficient, PuiseuxPoly, Rational};
pub use subdivision::{CubeSubdivision, Edge, MatroidCellReport};
pub use subset::Subset;
pub use tropfn::{PluckerVector, ScalingVector, SetFunction, TropValue};
pub use inequalities::{IneqMode, IneqTriple, QuadCoeffs, RationalMatrix};
pub use realization::{Membership, MinorTable, RealizationCertificate};
pub use subdivision::Characterizations;
