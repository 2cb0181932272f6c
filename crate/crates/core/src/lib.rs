//! Bideterminant straightening on the coordinate rings of `GL(n)`, `O(n)` and
//! the orthogonal similitude group `GO(n)`, with exact verification on rational
//! group points.

pub mod cli;
pub mod combination;
pub mod driver;
pub mod error;
pub mod gl_straighten;
pub mod golden;
pub mod group_oracle;
pub mod on_straighten;
pub mod polyring;
pub mod scalar;
pub mod tableaux;

pub use error::{Error, Result};
