//! Exact computations in the spherical Hecke algebra and the Whittaker module
//! of a split reductive group over a local function field.

pub mod cyclotomic;
pub mod error;
pub mod grassmannian;
pub mod hecke;
pub mod laurent;
pub mod rank1;
pub mod rep_ring;
pub mod root_datum;
pub mod whittaker;

pub use cyclotomic::{CharValue, Cyclotomic, SqrtQValue};
pub use error::{Error, Result};
pub use grassmannian::{CohomologyPrediction, DrinfeldStratum, MvBound};
pub use hecke::{Basis, BasisElement, HeckeAlgebra};
pub use laurent::{Laurent, LaurentPoly, RatLaurent};
pub use rank1::{Eq2Entry, Eq2Report, Rank1Cell, Rank1Oracle};
pub use rep_ring::{RepRing, TorusPoint, WeightMultiplicityTable};
pub use root_datum::{Coweight, HalfWeight, RootDatum, WeylElement};
pub use whittaker::{CsReport, WhittakerElement, WhittakerModule, WhittakerValueRow};
