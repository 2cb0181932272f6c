//! Mead's two-column straightening and the resulting `GL(n)` straightening.

use crate::combination::{Combination, TermKey};
use crate::driver::{straighten, Mode, StraightenOptions};
use crate::error::{domain, Result};
use crate::scalar::Scalar;
use crate::tableaux::{first_row_violation, IndexLetter, Tableau};

type Column = Vec<IndexLetter>;

/// Result of one Mead expansion of a two-column `[S:T]`:
/// `[S:T] = head + drop`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeadStep<C: Scalar> {
    /// Violating row `t`, one-based.
    pub row: usize,
    /// Same-shape terms `a_U [U:T]`, every `U ≻ S`.
    pub head: Combination<C>,
    /// Terms from the row expansion, all of smaller shape.
    pub drop: Combination<C>,
}

fn sign_of(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn scalar_sign<C: Scalar>(s: i64) -> C {
    C::from_i64(s)
}

/// All `size`-subsets of `0..n` as sorted index vectors.
pub(crate) fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < size - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(0, n, size, &mut cur, &mut out);
    out
}

/// All `size`-subsets of `items`, each in the original order.
pub fn subsets_of<T: Copy>(items: &[T], size: usize) -> Vec<Vec<T>> {
    subsets(items.len(), size).into_iter().map(|ix| ix.into_iter().map(|i| items[i]).collect()).collect()
}

/// Mead's expansion on raw columns. `t` is the zero-based violating row.
fn mead_expand<C: Scalar>(
    s1: &[IndexLetter],
    s2: &[IndexLetter],
    a: &[IndexLetter],
    b: &[IndexLetter],
    t: usize,
) -> Result<(Combination<C>, Combination<C>)> {
    let (k, l) = (s1.len(), s2.len());
    let mut head = Combination::zero();
    let mut drop = Combination::zero();

    // Column expansion along the first k columns of H. One-based H rows:
    // top p -> p, bottom p -> k + p. Rows 1..=t are forced into R; the pool
    // is top t+1..=k together with bottom 1..=t+1.
    let pool: Vec<(usize, IndexLetter)> = (t..k)
        .map(|p| (p + 1, s1[p]))
        .chain((0..=t).map(|p| (k + p + 1, s2[p])))
        .collect();
    let base: usize = (1..=t).sum();
    let full: usize = (1..=k).sum();
    for chosen in subsets(pool.len(), k - t) {
        if chosen.iter().enumerate().all(|(x, &c)| c == x) {
            continue;
        }
        let mut c1: Column = s1[..t].to_vec();
        let mut c2: Column = Vec::with_capacity(l);
        let mut rsum = base;
        for (x, &(pos, letter)) in pool.iter().enumerate() {
            if chosen.contains(&x) {
                c1.push(letter);
                rsum += pos;
            } else {
                c2.push(letter);
            }
        }
        c2.extend_from_slice(&s2[t + 1..]);
        let coef = scalar_sign::<C>(-sign_of(rsum + full));
        head.add_columns(coef, 0, vec![(c1, a.to_vec()), (c2, b.to_vec())])?;
    }

    // Row expansion along Q = top 1..=t and bottom t+2..=l (one-based).
    let qsum: usize = (1..=t).sum::<usize>() + (t + 2..=l).map(|p| k + p).sum::<usize>();
    for ca in subsets(k, t) {
        for cb in subsets(l, l - t - 1) {
            let csum: usize = ca.iter().map(|q| q + 1).sum::<usize>() + cb.iter().map(|q| k + q + 1).sum::<usize>();
            let m1 = (s1[..t].to_vec(), ca.iter().map(|&q| a[q]).collect::<Column>());
            let m2 = (s2[t + 1..].to_vec(), cb.iter().map(|&q| b[q]).collect::<Column>());
            let rows: Column = s1[t..].iter().chain(&s2[..=t]).copied().collect();
            let cols: Column = (0..k)
                .filter(|q| !ca.contains(q))
                .map(|q| a[q])
                .chain((0..l).filter(|q| !cb.contains(q)).map(|q| b[q]))
                .collect();
            let coef = scalar_sign::<C>(sign_of(qsum + csum));
            drop.add_columns(coef, 0, vec![m1, m2, (rows, cols)])?;
        }
    }
    Ok((head, drop))
}

/// One Mead expansion of a two-column `[S:T]` whose left tableau has a row
/// violation.
pub fn two_column_straighten<C: Scalar>(s: &Tableau, t: &Tableau) -> Result<MeadStep<C>> {
    if s.num_cols() != 2 || s.col_lengths() != t.col_lengths() {
        return domain("two_column_straighten needs two-column tableaux of equal shape");
    }
    if !s.is_column_strict() || !t.is_column_strict() {
        return domain("two_column_straighten needs strictly increasing columns");
    }
    let Some((_, row)) = first_row_violation(s) else {
        return domain("left tableau has no row violation");
    };
    let (head, drop) = mead_expand(s.column(0), s.column(1), t.column(0), t.column(1), row)?;
    Ok(MeadStep { row: row + 1, head, drop })
}

/// Multiply a combination on column pair `(c, d)` of `[S:T]` back into the
/// remaining columns. `local` must be an expansion of `[S_c S_d : T_c T_d]`.
pub(crate) fn embed<C: Scalar>(
    s: &Tableau,
    t: &Tableau,
    replaced: &[usize],
    local: &Combination<C>,
    gamma_shift: u32,
) -> Result<Combination<C>> {
    let last = replaced.iter().copied().max();
    let mut out = Combination::zero();
    for (key, c) in local.iter() {
        let mut new = key.left.columns().iter().cloned().zip(key.right.columns().iter().cloned());
        let mut cols: Vec<(Column, Column)> = Vec::with_capacity(s.num_cols() + 1);
        // local columns go back where the replaced ones were; extras follow the last
        for j in 0..s.num_cols() {
            if Some(j) == last {
                cols.extend(new.by_ref());
            } else if replaced.contains(&j) {
                cols.extend(new.next());
            } else {
                cols.push((s.column(j).to_vec(), t.column(j).to_vec()));
            }
        }
        out.add_columns(c.clone(), key.gamma_pow + gamma_shift, cols)?;
    }
    Ok(out)
}

/// One Mead step on the left-most violating column pair of `[S:T]`,
/// returned as a full expansion of `[S:T]` together with the pair and row.
pub fn gl_step<C: Scalar>(s: &Tableau, t: &Tableau) -> Result<Option<(usize, usize, Combination<C>)>> {
    let Some((c, row)) = first_row_violation(s) else {
        return Ok(None);
    };
    let (head, drop) = mead_expand::<C>(s.column(c), s.column(c + 1), t.column(c), t.column(c + 1), row)?;
    let mut local = head;
    local.add_scaled(&drop, &C::one());
    Ok(Some((c, row + 1, embed(s, t, &[c, c + 1], &local, 0)?)))
}

/// Write `[S:T]` as a combination of bideterminants with both tableaux
/// `GL(n)`-standard. The identity holds in the polynomial ring.
pub fn gl_straighten<C: Scalar>(s: &Tableau, t: &Tableau, n: usize) -> Result<Combination<C>> {
    let opts = StraightenOptions::new(Mode::Gl, n);
    Ok(straighten::<C>(s, t, &opts)?.result)
}

/// For a two-column `GL(n)`-standard `S` with `ī, i` in row `t` (one-based),
/// return `[S*:T] - [S:T]`, where `S*` swaps that pair.
pub fn one_switch_expand<C: Scalar>(s: &Tableau, t: &Tableau, row: usize) -> Result<Combination<C>> {
    if s.num_cols() != 2 || s.col_lengths() != t.col_lengths() || row == 0 {
        return domain("one_switch_expand needs two-column tableaux of equal shape");
    }
    let r = row - 1;
    let (Some(x), Some(y)) = (s.get(r, 0), s.get(r, 1)) else {
        return domain("row out of range");
    };
    if x.is_zero() || !x.is_barred() || y != x.bar() {
        return domain(format!("row {row} does not hold a pair ib, i"));
    }
    let mut cols = s.columns().to_vec();
    cols[0][r] = y;
    cols[1][r] = x;
    let pairs: Vec<(Column, Column)> = cols.into_iter().zip(t.columns().iter().cloned()).collect();
    let Some((sign, key)) = crate::combination::normalize_columns(pairs, 0)? else {
        return domain("switched tableau has a repeated entry");
    };
    let star = key.left;
    let (head, drop) = mead_expand::<C>(
        star.column(0),
        star.column(1),
        key.right.column(0),
        key.right.column(1),
        first_row_violation(&star).map(|v| v.1).ok_or_else(|| {
            crate::error::Error::Domain("switched tableau is row-standard".into())
        })?,
    )?;
    let mut out = head;
    out.add_scaled(&drop, &C::one());
    if sign < 0 {
        out = out.scale(&-C::one());
    }
    let s_key = TermKey::new(s.clone(), t.clone(), 0);
    if out.coefficient(&s_key) != C::one() {
        return domain("one-switch expansion does not contain +[S:T]");
    }
    out.add(s_key, -C::one());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::bideterminant;
    use crate::scalar::Rational;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(2, 3).len(), 0);
    }

    #[test]
    fn example_identity_holds_symbolically() {
        let (s, tt) = (t("1 1; 2 2b; 3"), t("1b 1; 2b 2; 3"));
        let step = two_column_straighten::<Rational>(&s, &tt).unwrap();
        assert_eq!(step.row, 2);
        let mut all = step.head.clone();
        all.add_scaled(&step.drop, &Rational::one());
        assert_eq!(all.to_polynomial(6).unwrap(), bideterminant(&s, &tt).unwrap());
        for (k, _) in step.head.iter() {
            assert_eq!(k.left.prec(&s).unwrap(), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn rejects_standard_input() {
        assert!(two_column_straighten::<Rational>(&t("1b 1; 1 2"), &t("1b 1; 1 2")).is_err());
    }
}
