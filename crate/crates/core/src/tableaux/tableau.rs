use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::letter::{letters, IndexLetter};
use super::partition::Partition;
use crate::error::{domain, Error, Result};

/// A filled Young diagram, stored column by column.
///
/// The empty tableau is allowed; its bideterminant is the constant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    cols: Vec<Vec<IndexLetter>>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau { cols: Vec::new() }
    }

    /// Columns must have weakly decreasing, positive lengths.
    pub fn from_columns(cols: Vec<Vec<IndexLetter>>) -> Result<Tableau> {
        if cols.iter().any(|c| c.is_empty()) {
            return domain("tableau has an empty column");
        }
        if cols.windows(2).any(|w| w[0].len() < w[1].len()) {
            return domain("column lengths are not weakly decreasing");
        }
        Ok(Tableau { cols })
    }

    pub fn from_rows(rows: Vec<Vec<IndexLetter>>) -> Result<Tableau> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = Partition::new(lens)
            .map_err(|_| Error::Parse("rows do not form a partition shape".into()))?;
        let cols = shape
            .conjugate()
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &h)| (0..h).map(|i| rows[i][j]).collect())
            .collect();
        Ok(Tableau { cols })
    }

    /// The tableau `T^λ`: row `k` is filled with the `k`-th letter.
    pub fn basic(shape: &Partition, n: usize) -> Result<Tableau> {
        if shape.len() > n {
            return domain(format!("shape {shape} has more than {n} rows"));
        }
        let a = letters(n);
        let cols = shape.conjugate().parts().iter().map(|&h| a[..h].to_vec()).collect();
        Ok(Tableau { cols })
    }

    pub fn shape(&self) -> Partition {
        Partition::from_columns(&self.col_lengths()).expect("valid column lengths")
    }

    pub fn col_lengths(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn num_rows(&self) -> usize {
        self.cols.first().map_or(0, |c| c.len())
    }

    pub fn columns(&self) -> &[Vec<IndexLetter>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<IndexLetter>> {
        self.cols
    }

    /// Column `j`, zero-based.
    pub fn column(&self, j: usize) -> &[IndexLetter] {
        &self.cols[j]
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<IndexLetter> {
        self.cols.get(col).and_then(|c| c.get(row)).copied()
    }

    pub fn rows(&self) -> Vec<Vec<IndexLetter>> {
        (0..self.num_rows())
            .map(|i| self.cols.iter().take_while(|c| c.len() > i).map(|c| c[i]).collect())
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = IndexLetter> + '_ {
        self.cols.iter().flatten().copied()
    }

    pub fn is_column_strict(&self) -> bool {
        self.cols.iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn uses_only(&self, n: usize) -> bool {
        let a = letters(n);
        self.entries().all(|i| a.contains(&i))
    }

    /// `T ≺ T'`: decided at the right-most differing column, by the top-most
    /// differing entry.
    pub fn prec(&self, other: &Tableau) -> Result<Ordering> {
        if self.col_lengths() != other.col_lengths() {
            return domain("tableau comparison needs equal shapes");
        }
        Ok(self.prec_unchecked(other))
    }

    fn prec_unchecked(&self, other: &Tableau) -> Ordering {
        for (a, b) in self.cols.iter().zip(&other.cols).rev() {
            if let Some((x, y)) = a.iter().zip(b).find(|(x, y)| x != y) {
                return x.cmp(y);
            }
        }
        Ordering::Equal
    }

    /// Remove `i` from column 1 and `ī` from column 2 of a two-column tableau.
    pub fn delete_pair(&self, i: IndexLetter) -> Result<Tableau> {
        if self.cols.len() != 2 {
            return domain("delete_pair needs a two-column tableau");
        }
        let (Some(p), Some(q)) = (
            self.cols[0].iter().position(|&x| x == i),
            self.cols[1].iter().position(|&x| x == i.bar()),
        ) else {
            return domain(format!("pair {i},{} does not occur", i.bar()));
        };
        let mut c1 = self.cols[0].clone();
        let mut c2 = self.cols[1].clone();
        c1.remove(p);
        c2.remove(q);
        let cols = [c1, c2].into_iter().filter(|c| !c.is_empty()).collect();
        Tableau::from_columns(cols)
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Result<Tableau> {
        Tableau::from_columns(idx.iter().map(|&j| self.cols[j].clone()).collect())
    }
}

impl Ord for Tableau {
    /// Shape order first, then `≺`.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.col_lengths(), other.col_lengths());
        if a != b {
            return self.shape().shape_cmp(&other.shape());
        }
        self.prec_unchecked(other)
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                let cells: Vec<&str> = row.split_whitespace().collect();
                if cells.is_empty() {
                    return Err(Error::Parse(format!("empty row in {s:?}")));
                }
                cells.into_iter().map(str::parse).collect::<Result<Vec<IndexLetter>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let x = t("1b 2b; 1 2; 2");
        assert_eq!(x.col_lengths(), vec![3, 2]);
        assert_eq!(x.to_string(), "1b 2b; 1 2; 2");
        assert_eq!(t("  1b   2b ;1 2;2 ").to_string(), "1b 2b; 1 2; 2");
        assert!("1; 1 2".parse::<Tableau>().is_err());
        assert!("1;;2".parse::<Tableau>().is_err());
        assert!("1 x".parse::<Tableau>().is_err());
        assert_eq!(t("").to_string(), "");
    }

    #[test]
    fn basic_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(Tableau::basic(&p(&[2, 1]), 3).unwrap(), t("1b 1b; 1"));
        assert_eq!(Tableau::basic(&p(&[1, 1, 1]), 6).unwrap(), t("1b; 1; 2b"));
        assert_eq!(Tableau::basic(&p(&[1]), 4).unwrap(), t("1b"));
        assert!(Tableau::basic(&p(&[1, 1, 1, 1]), 3).is_err());
    }

    #[test]
    fn prec_examples() {
        let a = t("1b; 1");
        assert_eq!(a.prec(&a).unwrap(), Ordering::Equal);
        assert_eq!(a.prec(&t("1b; 2b")).unwrap(), Ordering::Less);
        // column 2 decides even though column 1 differs too
        assert_eq!(t("2 1; 2b 2").prec(&t("1b 1; 1 2b")).unwrap(), Ordering::Greater);
        assert!(a.prec(&t("1b")).is_err());
    }

    #[test]
    fn delete_pair_examples() {
        let x = Tableau::from_columns(vec![
            vec!["1b".parse().unwrap(), "2b".parse().unwrap()],
            vec!["2".parse().unwrap(), "3".parse().unwrap()],
        ])
        .unwrap();
        assert_eq!(x.delete_pair("2b".parse().unwrap()).unwrap(), t("1b 3"));
        let y = t("1b 1; 2b 2; 3b 3");
        for i in ["1b", "2b", "3b"] {
            assert!(y.delete_pair(i.parse().unwrap()).is_ok());
        }
        assert!(y.delete_pair("1".parse().unwrap()).is_err());
    }
}
