use std::collections::HashMap;

use super::matrix::Matrix;
use super::poly::Polynomial;
use crate::error::{domain, Result};
use crate::scalar::Scalar;
use crate::tableaux::{letters, IndexLetter, Tableau};

fn has_repeat(xs: &[IndexLetter]) -> bool {
    xs.iter().enumerate().any(|(k, x)| xs[..k].contains(x))
}

/// Determinant of the submatrix of `X` on the given rows and columns.
pub fn minor<C: Scalar>(rows: &[IndexLetter], cols: &[IndexLetter]) -> Result<Polynomial<C>> {
    if rows.len() != cols.len() {
        return domain("minor needs as many rows as columns");
    }
    if rows.len() > 63 {
        return domain("minor too large");
    }
    if has_repeat(rows) || has_repeat(cols) {
        return Ok(Polynomial::zero());
    }
    let mut memo = HashMap::new();
    Ok(minor_rec(rows, cols, 0, &mut memo))
}

/// Laplace expansion along the columns; `used` marks rows taken by earlier columns.
fn minor_rec<C: Scalar>(
    rows: &[IndexLetter],
    cols: &[IndexLetter],
    used: u64,
    memo: &mut HashMap<u64, Polynomial<C>>,
) -> Polynomial<C> {
    let k = used.count_ones() as usize;
    if k == cols.len() {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut acc = Polynomial::zero();
    let mut free_before = 0;
    for (r, &row) in rows.iter().enumerate() {
        if used & (1 << r) != 0 {
            continue;
        }
        let rest = minor_rec(rows, cols, used | (1 << r), memo);
        let mut term = &Polynomial::var(row, cols[k]) * &rest;
        if free_before % 2 == 1 {
            term = -&term;
        }
        acc = &acc + &term;
        free_before += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// `[S:T]`, the product of the column minors.
pub fn bideterminant<C: Scalar>(s: &Tableau, t: &Tableau) -> Result<Polynomial<C>> {
    if s.col_lengths() != t.col_lengths() {
        return domain("bideterminant needs tableaux of equal shape");
    }
    let mut acc = Polynomial::one();
    for (a, b) in s.columns().iter().zip(t.columns()) {
        acc = &acc * &minor(a, b)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// The `n x n` determinant of `X`.
pub fn det_poly<C: Scalar>(n: usize) -> Polynomial<C> {
    let a = letters(n);
    minor(&a, &a).expect("square")
}

/// `γ = Σ_i X(i,1)X(ī,1b)`.
pub fn gamma_poly<C: Scalar>(n: usize) -> Polynomial<C> {
    let (one, one_b) = (IndexLetter::plain(1), IndexLetter::barred(1));
    let mut acc = Polynomial::zero();
    for i in letters(n) {
        acc = &acc + &(&Polynomial::var(i, one) * &Polynomial::var(i.bar(), one_b));
    }
    acc
}

/// Value of a single minor at a matrix indexed by alphabet positions.
pub fn eval_minor<C: Scalar>(a: &Matrix<C>, rows: &[IndexLetter], cols: &[IndexLetter]) -> C {
    let n = a.rows();
    let rp: Vec<usize> = rows.iter().map(|x| x.position(n)).collect();
    let cp: Vec<usize> = cols.iter().map(|x| x.position(n)).collect();
    a.submatrix(&rp, &cp).det()
}

/// Value of `[S:T]` at a matrix, without expanding the polynomial.
pub fn eval_bideterminant<C: Scalar>(a: &Matrix<C>, s: &Tableau, t: &Tableau) -> C {
    let mut acc = C::one();
    for (x, y) in s.columns().iter().zip(t.columns()) {
        acc = acc * eval_minor(a, x, y);
        if acc.is_zero() {
            break;
        }
    }
    acc
}
