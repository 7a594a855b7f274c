//! Tilings of the constant-weight Hamming space `H_q(n,w)` by mutually
//! disjoint optimal constant-weight codes.
//!
//! The crate is organised bottom-up:
//!
//! * [`hamming`]: words, codes, tilings, canonical enumeration and ranking.
//! * [`bounds`] and [`clique`]: upper bounds, exact values and a brute-force
//!   optimum oracle.
//! * [`algebra`]: finite fields and orthogonal arrays.
//! * [`designs`]: Steiner systems, resolutions, large sets, H-designs and the
//!   shipped catalog, on top of an exact-cover search.
//! * [`colorings`]: almost-regular edge-colorings and strong colorings.
//! * [`construct`]: every tiling builder.
//! * [`verify`]: independent certification of tilings and designs.
//! * [`cert`]: the JSON certificate format.
//! * [`acceptance`]: the acceptance matrix shared by the test suite and the
//!   command line.

pub mod acceptance;
pub mod algebra;
pub mod bounds;
pub mod catalog;
pub mod cert;
pub mod clique;
pub mod colorings;
pub mod construct;
pub mod designs;
pub mod error;
pub mod hamming;
pub mod verify;

pub use error::{Error, Result};
pub use hamming::{
    hamming_distance, min_distance, ConstantWeightCode, Params, Space, Tiling, Word,
};
