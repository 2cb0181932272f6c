use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the ordered alphabet `1b < 1 < 2b < 2 < ... < mb < m (< 0)`.
///
/// Internally `kb` is stored as `2k-2`, `k` as `2k-1` and `0` as `255`, so the
/// derived order is the alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexLetter(u8);

const ZERO_CODE: u8 = u8::MAX;

impl IndexLetter {
    pub const ZERO: IndexLetter = IndexLetter(ZERO_CODE);

    /// The barred letter `kb`, `k >= 1`.
    pub fn barred(k: usize) -> IndexLetter {
        assert!((1..=120).contains(&k), "letter index out of range");
        IndexLetter((2 * k - 2) as u8)
    }

    /// The unbarred letter `k`, `k >= 1`.
    pub fn plain(k: usize) -> IndexLetter {
        assert!((1..=120).contains(&k), "letter index out of range");
        IndexLetter((2 * k - 1) as u8)
    }

    pub fn is_zero(self) -> bool {
        self.0 == ZERO_CODE
    }

    pub fn is_barred(self) -> bool {
        !self.is_zero() && self.0 % 2 == 0
    }

    /// `k` for `kb` and `k`; 0 for the zero letter.
    pub fn index(self) -> usize {
        if self.is_zero() {
            0
        } else {
            self.0 as usize / 2 + 1
        }
    }

    pub fn bar(self) -> IndexLetter {
        if self.is_zero() {
            self
        } else {
            IndexLetter(self.0 ^ 1)
        }
    }

    /// Zero-based position inside `alphabet(n)`.
    pub fn position(self, n: usize) -> usize {
        if self.is_zero() {
            n - 1
        } else {
            self.0 as usize
        }
    }

    /// Inverse of [`IndexLetter::position`].
    pub fn from_position(pos: usize, n: usize) -> IndexLetter {
        if n % 2 == 1 && pos == n - 1 {
            IndexLetter::ZERO
        } else {
            IndexLetter(pos as u8)
        }
    }

    /// Whether the letter belongs to the alphabet of dimension `n`.
    pub fn in_alphabet(self, n: usize) -> bool {
        if self.is_zero() {
            n % 2 == 1
        } else {
            self.index() <= n / 2
        }
    }
}

/// The ordered alphabet for `O(n)`; requires `n >= 3`.
pub fn alphabet(n: usize) -> Result<Vec<IndexLetter>> {
    if n < 3 {
        return Err(Error::InvalidDimension(n, 3));
    }
    Ok(letters(n))
}

/// The first `n` letters, for any `n >= 1` (used by the `GL(n)` code paths).
pub fn letters(n: usize) -> Vec<IndexLetter> {
    (0..n).map(|p| IndexLetter::from_position(p, n)).collect()
}

pub fn bar(i: IndexLetter) -> IndexLetter {
    i.bar()
}

impl fmt::Display for IndexLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else if self.is_barred() {
            write!(f, "{}b", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for IndexLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for IndexLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(IndexLetter::ZERO);
        }
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(Error::Parse(format!("bad letter {s:?}")));
        }
        let k: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if k > 120 {
            return Err(Error::Parse(format!("letter {s:?} out of range")));
        }
        Ok(if barred { IndexLetter::barred(k) } else { IndexLetter::plain(k) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> IndexLetter {
        s.parse().unwrap()
    }

    #[test]
    fn alphabet_examples() {
        assert_eq!(alphabet(4).unwrap(), vec![l("1b"), l("1"), l("2b"), l("2")]);
        assert_eq!(alphabet(5).unwrap(), vec![l("1b"), l("1"), l("2b"), l("2"), l("0")]);
        assert_eq!(alphabet(3).unwrap(), vec![l("1b"), l("1"), l("0")]);
        assert_eq!(alphabet(2), Err(Error::InvalidDimension(2, 3)));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar(l("2b")), l("2"));
        assert_eq!(bar(bar(l("3"))), l("3"));
        assert_eq!(bar(l("0")), l("0"));
    }

    #[test]
    fn bar_is_involution_and_positions_roundtrip() {
        for n in 3..=10 {
            let a = alphabet(n).unwrap();
            assert_eq!(a.len(), n);
            assert_eq!(a.contains(&IndexLetter::ZERO), n % 2 == 1);
            for (p, &i) in a.iter().enumerate() {
                assert_eq!(bar(bar(i)), i);
                assert!(a.contains(&bar(i)));
                assert_eq!(i.position(n), p);
                assert!(i.in_alphabet(n));
            }
            assert!(a.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_roundtrip() {
        for i in letters(11) {
            assert_eq!(l(&i.to_string()), i);
        }
        for bad in ["", "b", "0b", "01", "x", "-1", "2bb"] {
            assert!(bad.parse::<IndexLetter>().is_err(), "{bad}");
        }
    }
}
