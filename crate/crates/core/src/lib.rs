//! Flat `{0, α}`-sets of complex unit vectors built from bipartite
//! distance-regular graphs of diameter four, with exact verification of every
//! step: the graphs and their group actions, distance-regularity, spectra,
//! pairwise angles, size bounds, and the classification of arrays whose sets
//! meet the flat bounds.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod construction;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod formats;
pub mod graphs;
pub mod groups;
pub mod linalg;
pub mod optimality;
pub mod report;
pub mod spectra;

pub use construction::{godsil_roy, FlatVectorSet};
pub use error::{Error, Result};
pub use families::{run_family, Family, FamilyRun, RunOptions};
