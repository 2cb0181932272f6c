use std::fmt;

use super::letter::{letters, IndexLetter};
use super::partition::Partition;
use super::tableau::Tableau;

/// `GL(n)`-standard: at most `n` rows, rows weakly increase, columns strictly increase.
pub fn is_gl_standard(t: &Tableau, n: usize) -> bool {
    t.num_rows() <= n && t.is_column_strict() && first_row_violation(t).is_none()
}

/// Left-most adjacent column pair `(c, c+1)` with a row where the entries
/// decrease, and the top-most such row. Zero-based.
pub fn first_row_violation(t: &Tableau) -> Option<(usize, usize)> {
    let cols = t.columns();
    for c in 0..cols.len().saturating_sub(1) {
        let (a, b) = (&cols[c], &cols[c + 1]);
        if let Some(r) = (0..b.len()).find(|&r| a[r] > b[r]) {
            return Some((c, r));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Not `GL(n)`-standard.
    Gl,
    /// `λ'1 + λ'2 > n`.
    Colsum,
    Os1,
    Os2,
    Os3,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Gl => "GL",
            Condition::Colsum => "COLSUM",
            Condition::Os1 => "OS1",
            Condition::Os2 => "OS2",
            Condition::Os3 => "OS3",
        };
        f.write_str(s)
    }
}

/// One failed condition. `witness` is the index `i` of the condition (0 for
/// `Gl` and `Colsum`); `column` is the column `b` of an OS3 witness, zero-based.
/// Positions are zero-based `(row, col)` cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: usize,
    pub column: Option<usize>,
    pub positions: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ONStandardReport {
    pub standard: bool,
    pub violations: Vec<Violation>,
    /// `alpha[i-1]` counts entries `<= i` in column 1.
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl ONStandardReport {
    /// The violation the straightening driver acts on: lowest condition kind,
    /// then smallest witness, then smallest column.
    pub fn first(&self) -> Option<&Violation> {
        self.violations
            .iter()
            .min_by_key(|v| (v.condition, v.witness, v.column))
    }
}

fn count_le(col: &[IndexLetter], i: usize) -> usize {
    let top = IndexLetter::plain(i);
    col.iter().filter(|&&x| x <= top).count()
}

/// Full `O(n)`-standardness report. Non-`GL(n)`-standard input gets a single
/// `Gl` violation and no OS checks.
pub fn on_standard_report(t: &Tableau, n: usize) -> ONStandardReport {
    let m = n / 2;
    let empty: &[IndexLetter] = &[];
    let c1 = if t.num_cols() > 0 { t.column(0) } else { empty };
    let c2 = if t.num_cols() > 1 { t.column(1) } else { empty };
    let alpha: Vec<usize> = (1..=m).map(|i| count_le(c1, i)).collect();
    let beta: Vec<usize> = (1..=m).map(|i| count_le(c2, i)).collect();
    let mut violations = Vec::new();

    if !is_gl_standard(t, n) {
        let positions = first_row_violation(t).map(|(c, r)| vec![(r, c), (r, c + 1)]).unwrap_or_default();
        violations.push(Violation { condition: Condition::Gl, witness: 0, column: None, positions });
        return ONStandardReport { standard: false, violations, alpha, beta };
    }
    if c1.len() + c2.len() > n {
        violations.push(Violation { condition: Condition::Colsum, witness: 0, column: None, positions: vec![] });
    }
    // `T(row, col)` with one-based row; rows outside the column read as None.
    let at = |row: usize, col: usize| -> Option<IndexLetter> {
        if row == 0 {
            None
        } else {
            t.get(row - 1, col)
        }
    };
    for i in 1..=m {
        let (a, b) = (alpha[i - 1], beta[i - 1]);
        let (ib, ip) = (IndexLetter::barred(i), IndexLetter::plain(i));
        if a + b > 2 * i {
            let mut positions: Vec<(usize, usize)> = (0..a).map(|r| (r, 0)).collect();
            positions.extend((0..b).map(|r| (r, 1)));
            violations.push(Violation { condition: Condition::Os1, witness: i, column: None, positions });
            continue;
        }
        if a + b != 2 * i {
            continue;
        }
        if a > b {
            if at(a, 0) == Some(ip) && at(b, 1) == Some(ib) && at(a - 1, 0) != Some(ib) {
                violations.push(Violation {
                    condition: Condition::Os2,
                    witness: i,
                    column: None,
                    positions: vec![(a - 1, 0), (b - 1, 1)],
                });
            }
        } else if a == b && at(i, 0) == Some(ib) {
            for col in 1..t.num_cols() {
                if at(i, col) == Some(ip) && at(i - 1, col) != Some(ib) {
                    violations.push(Violation {
                        condition: Condition::Os3,
                        witness: i,
                        column: Some(col),
                        positions: vec![(i - 1, 0), (i - 1, col)],
                    });
                }
            }
        }
    }
    ONStandardReport { standard: violations.is_empty(), violations, alpha, beta }
}

pub fn is_on_standard(t: &Tableau, n: usize) -> bool {
    on_standard_report(t, n).standard
}

/// All `GL(n)`-standard tableaux of the given shape, in `≺` order.
pub fn enumerate_gl_standard(shape: &Partition, n: usize) -> Vec<Tableau> {
    if shape.len() > n {
        return Vec::new();
    }
    let alpha = letters(n);
    let heights = shape.conjugate().parts().to_vec();
    let mut out = Vec::new();
    let mut cols: Vec<Vec<IndexLetter>> = Vec::new();
    fill_columns(&alpha, &heights, &mut cols, &mut out);
    out.sort_by(|a, b| a.prec(b).expect("same shape"));
    out
}

fn fill_columns(
    alpha: &[IndexLetter],
    heights: &[usize],
    cols: &mut Vec<Vec<IndexLetter>>,
    out: &mut Vec<Tableau>,
) {
    let j = cols.len();
    if j == heights.len() {
        out.push(Tableau::from_columns(cols.clone()).expect("valid shape"));
        return;
    }
    let mut cur = Vec::with_capacity(heights[j]);
    fill_cells(alpha, heights, cols, &mut cur, out);
}

fn fill_cells(
    alpha: &[IndexLetter],
    heights: &[usize],
    cols: &mut Vec<Vec<IndexLetter>>,
    cur: &mut Vec<IndexLetter>,
    out: &mut Vec<Tableau>,
) {
    let j = cols.len();
    let r = cur.len();
    if r == heights[j] {
        cols.push(cur.clone());
        fill_columns(alpha, heights, cols, out);
        cols.pop();
        return;
    }
    for &x in alpha {
        if r > 0 && x <= cur[r - 1] {
            continue;
        }
        if j > 0 && x < cols[j - 1][r] {
            continue;
        }
        // leave room for the cells below
        if alpha.iter().filter(|&&y| y > x).count() < heights[j] - r - 1 {
            break;
        }
        cur.push(x);
        fill_cells(alpha, heights, cols, cur, out);
        cur.pop();
    }
}

/// All `O(n)`-standard tableaux of the given shape, in `≺` order. Empty when
/// the shape violates `λ'1 + λ'2 <= n`.
pub fn enumerate_on_standard(shape: &Partition, n: usize) -> Vec<Tableau> {
    let conj = shape.conjugate();
    let colsum: usize = conj.parts().iter().take(2).sum();
    if colsum > n {
        return Vec::new();
    }
    enumerate_gl_standard(shape, n)
        .into_iter()
        .filter(|t| is_on_standard(t, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn gl_examples() {
        assert!(is_gl_standard(&t("1b 1; 1"), 3));
        assert!(!is_gl_standard(&t("1 1b"), 3));
        assert!(!is_gl_standard(&t("1b; 1b"), 3));
        assert!(!is_gl_standard(&t("1b; 1; 2b; 2"), 3));
    }

    #[test]
    fn on_report_examples() {
        let r = on_standard_report(&t("1 2; 2b 3; 2"), 7);
        assert!(r.standard, "{r:?}");

        let r = on_standard_report(&t("1b 2b; 2b 2; 2"), 6);
        assert!(!r.standard);
        assert_eq!((r.alpha[1], r.beta[1]), (3, 2));
        let v = r.first().unwrap();
        assert_eq!((v.condition, v.witness), (Condition::Os1, 2));

        let r = on_standard_report(&t("1b 2b; 1; 2"), 7);
        let v = r.first().unwrap();
        assert_eq!((v.condition, v.witness), (Condition::Os2, 2));

        let r = on_standard_report(&t("1 1; 2b 2; 3"), 6);
        let v = r.first().unwrap();
        assert_eq!((v.condition, v.witness, v.column), (Condition::Os3, 2, Some(1)));
    }

    #[test]
    fn os3_in_first_row() {
        assert!(!is_on_standard(&t("1b 1"), 3));
        assert!(is_on_standard(&t("1b 1b"), 3));
        assert_eq!(enumerate_on_standard(&Partition::new(vec![2]).unwrap(), 3).len(), 5);
    }

    #[test]
    fn colsum_and_gl_flags() {
        let r = on_standard_report(&t("1b 1b; 1 1"), 3);
        assert_eq!(r.first().unwrap().condition, Condition::Colsum);
        let r = on_standard_report(&t("1 1b"), 3);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].condition, Condition::Gl);
    }

    #[test]
    fn enumerate_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let one = enumerate_on_standard(&p(&[1]), 4);
        assert_eq!(one, vec![t("1b"), t("1"), t("2b"), t("2")]);
        assert!(enumerate_on_standard(&p(&[1, 1, 1, 1]), 3).is_empty());
    }
}
