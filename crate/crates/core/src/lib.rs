//! Evidence distances and ranking of basic belief assignments.
//!
//! The crate covers the classical Dempster–Shafer toolkit needed to compare
//! bodies of evidence on an *ordered* frame of discernment (for example the
//! linguistic grades `Poor < Low < Middle < High < Perfect`):
//!
//! - [`Frame`], [`FocalSet`] and [`Bba`]: validated mass functions.
//! - [`combination`]: Dempster's rule and the conflict coefficient.
//! - [`pignistic`]: the pignistic transformation and the distance between
//!   betting commitments.
//! - [`distance`]: Jousselme's distance, the ordinal correlation matrix and the
//!   ranking evidence distance (RED), which weights pignistic differences by
//!   how close the grades are to each other.
//! - [`ranking`]: ordering candidates by their distance to a reference.
//! - [`document`], [`repro`] and [`cli`]: the JSON evidence format, the
//!   embedded benchmark harness and the command-line front end.
//!
//! ```
//! use evrank::{Bba, Frame, distance::red_distance};
//!
//! let frame = Frame::new(["Poor", "Low", "Middle", "High", "Perfect"]).unwrap();
//! let poor = Bba::from_indices(&frame, &[(&[1][..], 1.0)]).unwrap();
//! let low = Bba::from_indices(&frame, &[(&[2][..], 1.0)]).unwrap();
//! let middle = Bba::from_indices(&frame, &[(&[3][..], 1.0)]).unwrap();
//!
//! assert!((red_distance(&poor, &low).unwrap() - 0.5).abs() < 1e-12);
//! assert!(red_distance(&poor, &low).unwrap() < red_distance(&poor, &middle).unwrap());
//! ```

pub mod bba;
pub mod cli;
pub mod combination;
pub mod distance;
pub mod document;
mod error;
pub mod frame;
pub mod pignistic;
pub mod ranking;
pub mod repro;
pub mod table;

pub use bba::{Bba, MASS_SUM_TOLERANCE};
pub use error::{Error, Result};
pub use frame::{Element, FocalSet, Frame, MAX_FRAME_SIZE};
