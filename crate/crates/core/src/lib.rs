//! Isomorphic embedding of `A x B` rectangular grids into `k`-ary `n`-cubes.
//!
//! Rows of the grid run along cube dimension 0 and columns follow a reflected
//! base-`k` Gray code through the remaining dimensions, so every grid edge
//! lands on a cube edge whenever `A <= k` and `B <= k^(n-1)`. The [`verify`]
//! module checks that claim independently for any map, including maps read
//! from JSON.
//!
//! ```
//! use cubegrid::{embed_grid, verify, CubeSpec, GridSpec};
//!
//! let grid = GridSpec::new(3, 9).unwrap();
//! let cube = CubeSpec::new(4, 3).unwrap();
//! let map = embed_grid(&grid, &cube).unwrap();
//! assert!(verify::verify(&map).isomorphic);
//! ```

pub mod cli;
pub mod document;
pub mod dot;
pub mod embedding;
pub mod error;
pub mod graycode;
pub mod topology;
pub mod verify;

pub use document::MapDocument;
pub use embedding::{
    check_fit, embed_grid, inflate_k, labelled_view, EmbeddingMap, GridSpec, LabelledPoint,
};
pub use error::{Error, Result};
pub use graycode::{BitString, LabelPartition};
pub use topology::{Coordinate, CubeSpec, CubeStats};
pub use verify::{EmbeddingReport, OracleOutcome};
