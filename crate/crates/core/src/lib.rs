//! Quaternionic slice-regular power series: the star algebra, slice
//! splitting, regular Mobius maps, and numerical checks of
//! Borel-Caratheodory and Bohr-type inequalities.

pub mod error;
pub mod mobius;
pub mod quaternion;
pub mod rng;
pub mod series;
pub mod slice;
pub mod star;
pub mod theorems;

pub use error::{Error, Result};
pub use mobius::{cayley_map, dieudonne_det, disk_map, MobiusMap};
pub use quaternion::{orthogonal_unit, root_of_unity, Quaternion, UnitImaginary};
pub use series::{coefficients_by_contour, QSeries};
pub use slice::{extend, extend_from_slice, split, split_star, SliceSeries, SplitPair};
pub use star::{
    pointwise_star, quotient_eval, regular_conjugate, regular_reciprocal, star_product, symmetrization, twist_map,
};
