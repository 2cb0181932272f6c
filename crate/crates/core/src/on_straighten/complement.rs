//! Complementary minors on `O(n)` and the reduction of tall two-column shapes.

use crate::combination::{normalize_columns, sort_with_sign, TermKey};
use crate::error::{domain, Result};
use crate::tableaux::{letters, IndexLetter, Tableau};

type Column = Vec<IndexLetter>;

/// `[S:T] = sign · det · γ^(k-n) · [left:right]` for single columns of
/// length `k`; on `O(n)` the `γ` factor is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub sign: i32,
    pub left: Column,
    pub right: Column,
}

fn complement_of(col: &[IndexLetter], n: usize) -> (i32, Column) {
    let mut out: Column = letters(n).into_iter().filter(|x| !col.contains(x)).map(|x| x.bar()).collect();
    let sign = sort_with_sign(&mut out).expect("bar is injective");
    (sign, out)
}

fn position_sum(col: &[IndexLetter], n: usize) -> usize {
    col.iter().map(|x| x.position(n) + 1).sum()
}

/// Replace a pair of columns by their barred complements.
pub fn one_column_complement(s: &[IndexLetter], t: &[IndexLetter], n: usize) -> Result<Complement> {
    if s.len() != t.len() || s.len() > n {
        return domain("complement needs columns of equal length at most n");
    }
    let a = letters(n);
    if let Some(x) = s.iter().chain(t).find(|x| !a.contains(x)) {
        return domain(format!("letter {x} is not in the alphabet"));
    }
    let (mut s, mut t) = (s.to_vec(), t.to_vec());
    let (Some(x), Some(y)) = (sort_with_sign(&mut s), sort_with_sign(&mut t)) else {
        return domain("complement of a column with a repeated entry");
    };
    let (cs, left) = complement_of(&s, n);
    let (ct, right) = complement_of(&t, n);
    let parity = if (position_sum(&s, n) + position_sum(&t, n)) % 2 == 0 { 1 } else { -1 };
    Ok(Complement { sign: x * y * cs * ct * parity, left, right })
}

/// For a two-column `[S:T]` with `λ'1 + λ'2 > n`, the single term equal to it on
/// `O(n)` (or on `GO(n)` when `go` is set, with the `γ` power it needs).
pub fn reduce_tall_shape(s: &Tableau, t: &Tableau, n: usize, go: bool) -> Result<(i32, TermKey)> {
    if s.num_cols() != 2 || s.col_lengths() != t.col_lengths() {
        return domain("reduce_tall_shape needs two-column tableaux of equal shape");
    }
    let (k1, k2) = (s.column(0).len(), s.column(1).len());
    if k1 + k2 <= n {
        return domain(format!("column lengths {k1}+{k2} do not exceed n={n}"));
    }
    let c1 = one_column_complement(s.column(0), t.column(0), n)?;
    let c2 = one_column_complement(s.column(1), t.column(1), n)?;
    let gamma = if go { (k1 + k2 - n) as u32 } else { 0 };
    let (sign, key) = normalize_columns(vec![(c2.left, c2.right), (c1.left, c1.right)], gamma)?
        .ok_or_else(|| crate::Error::Domain("complement has a repeated entry".into()))?;
    Ok((sign * c1.sign * c2.sign, key))
}
