//! Walks on ordinals below epsilon_0 and their higher-dimensional versions.
//!
//! Ordinals are Cantor normal forms ([`ordinal`]). A C-sequence ([`clubs`])
//! assigns clubs to C-indices; classical walks ([`walks_classic`]) and signed
//! higher walk trees ([`walks_higher`]) run along it, and [`norders`] turns
//! rho functions into hypertournaments.

pub mod clubs;
pub mod error;
pub mod export;
pub mod formal_sum;
pub mod norders;
pub mod ordinal;
pub mod sample;
pub mod walks_classic;
pub mod walks_higher;

pub use clubs::{parse_selector, Club, CSeq};
pub use error::{Error, Result};
pub use formal_sum::FormalSum;
pub use ordinal::{ord, Ordinal};
pub use walks_higher::SignedWalkTree;
