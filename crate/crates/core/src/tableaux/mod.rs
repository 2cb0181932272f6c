//! Alphabet, partitions, tableaux and the standardness predicates.

mod letter;
mod partition;
mod standard;
mod tableau;

pub use letter::{alphabet, bar, letters, IndexLetter};
pub use partition::Partition;
pub use standard::{
    enumerate_gl_standard, enumerate_on_standard, first_row_violation, is_gl_standard, is_on_standard,
    on_standard_report, Condition, ONStandardReport, Violation,
};
pub use tableau::Tableau;

/// Parse a tableau in the text format, e.g. `1b 2b; 1 2; 2`.
pub fn parse_tableau(s: &str) -> crate::Result<Tableau> {
    s.parse()
}
