use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Result};

/// A partition `λ1 >= λ2 >= ... >= λk > 0`. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return domain(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Build from column lengths (the conjugate).
    pub fn from_columns(cols: &[usize]) -> Result<Partition> {
        Ok(Partition::new(cols.to_vec())?.conjugate())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Strict dominance `self ◁ other`.
    pub fn dominance_lt(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return domain("dominance is only defined for partitions of equal size");
        }
        if self == other {
            return Ok(false);
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The fixed total order on shapes: size first, then reverse lexicographic
    /// order on conjugates. This refines dominance.
    pub fn shape_cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.conjugate().parts.cmp(&self.conjugate().parts))
    }

    pub fn shape_order_lt(&self, other: &Partition) -> bool {
        self.shape_cmp(other) == Ordering::Less
    }

    /// All partitions of `r` in decreasing lexicographic order.
    pub fn all_of(r: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(r, r, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2, 1]).dominance_lt(&p(&[4, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_lt(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_lt(&p(&[2, 2])).unwrap());
        assert!(p(&[3, 1]).dominance_lt(&p(&[2])).is_err());
    }

    #[test]
    fn shape_order_examples() {
        assert!(p(&[1]).shape_order_lt(&p(&[2])));
        assert!(p(&[2, 2, 1]).shape_order_lt(&p(&[4, 1])));
        assert!(p(&[2, 2]).shape_order_lt(&p(&[3, 1])));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|r| Partition::all_of(r).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
