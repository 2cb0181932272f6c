//! Rewriting a two-column bideterminant whose left tableau fails OS1, OS2 or OS3.

use crate::combination::Combination;
use crate::driver::Mode;
use crate::error::{domain, Error, Result};
use crate::gl_straighten::{one_switch_expand, subsets};
use crate::scalar::Scalar;
use crate::tableaux::{letters, on_standard_report, Condition, IndexLetter, Tableau};

use super::relation::{lift_sign, relation_rhs, RelationSpec};

/// `[S:T] = heads + switch + relsum`. `heads` holds the same-shape terms
/// `[U:T]`, `U ≻ S`; `switch` the OS3 one-switch part; `relsum` the
/// relation-sum part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixResult<C: Scalar> {
    pub condition: Condition,
    pub witness: usize,
    pub heads: Combination<C>,
    pub switch: Combination<C>,
    pub relsum: Combination<C>,
}

impl<C: Scalar> FixResult<C> {
    pub fn total(&self) -> Combination<C> {
        let mut out = self.heads.clone();
        out.add_scaled(&self.switch, &C::one());
        out.add_scaled(&self.relsum, &C::one());
        out
    }

    /// Terms whose shape differs from `S`.
    pub fn lower(&self, s: &Tableau) -> Combination<C> {
        let mut out = Combination::zero();
        for (k, c) in self.total().iter() {
            if k.left.col_lengths() != s.col_lengths() {
                out.add(k.clone(), c.clone());
            }
        }
        out
    }
}

fn check_mode(mode: Mode) -> Result<bool> {
    match mode {
        Mode::Gl => domain("OS fixes need mode on or go"),
        Mode::On => Ok(false),
        Mode::Go => Ok(true),
    }
}

fn check_violation(s: &Tableau, t: &Tableau, j: usize, n: usize, cond: Condition) -> Result<()> {
    if s.num_cols() != 2 || s.col_lengths() != t.col_lengths() {
        return domain("OS fixes need two-column tableaux of equal shape");
    }
    if !s.is_column_strict() || !t.is_column_strict() {
        return domain("OS fixes need strictly increasing columns");
    }
    let found = on_standard_report(s, n)
        .violations
        .iter()
        .any(|v| v.condition == cond && v.witness == j);
    if !found {
        return domain(format!("{cond} is not violated at j={j}"));
    }
    Ok(())
}

struct Replacement<C: Scalar> {
    /// `σ0 · Σ_d 𝒮_d`.
    relsum: Combination<C>,
    /// Every `[U:T]` except the tuples in `skip`, negated.
    others: Combination<C>,
}

/// Replace the pairs `i, ī` (`i ∈ A`) of `S` by pairs drawn from `ℐ − forbidden`.
fn replacement_sum<C: Scalar>(
    s: &Tableau,
    t: &Tableau,
    j: usize,
    n: usize,
    go: bool,
    drop_from_c: Option<IndexLetter>,
    skip: &[Vec<IndexLetter>],
) -> Result<Replacement<C>> {
    let (s1, s2) = (s.column(0), s.column(1));
    let top = IndexLetter::plain(j);
    let small: Vec<IndexLetter> = letters(n).into_iter().filter(|&x| x <= top).collect();
    let a: Vec<IndexLetter> = small.iter().copied().filter(|x| s1.contains(x) && s2.contains(&x.bar())).collect();
    let mut c: Vec<IndexLetter> =
        small.iter().copied().filter(|x| !s1.contains(x) && !s2.contains(&x.bar())).collect();
    if let Some(x) = drop_from_c {
        c.retain(|&y| y != x);
    }
    let ps: Vec<usize> = a.iter().map(|x| s1.iter().position(|y| y == x).unwrap()).collect();
    let qs: Vec<usize> = a.iter().map(|x| s2.iter().position(|&y| y == x.bar()).unwrap()).collect();
    let sigma = lift_sign(&ps, s1.len()) * lift_sign(&qs, s2.len());
    let s0 = (
        (0..s1.len()).filter(|p| !ps.contains(p)).map(|p| s1[p]).collect(),
        (0..s2.len()).filter(|q| !qs.contains(q)).map(|q| s2[q]).collect(),
    );
    let spec = RelationSpec::new(s0, t.clone(), a.len(), c.clone(), n)?;
    let relsum = relation_rhs(&spec)?.to_combination::<C>(go)?.scale(&C::from_i64(sigma as i64));

    let pool: Vec<IndexLetter> = letters(n).into_iter().filter(|x| !c.contains(x)).collect();
    let mut others = Combination::zero();
    for idx in subsets(pool.len(), a.len()) {
        let tuple: Vec<IndexLetter> = idx.iter().map(|&x| pool[x]).collect();
        if tuple == a || skip.contains(&tuple) {
            continue;
        }
        let (mut u1, mut u2) = (s1.to_vec(), s2.to_vec());
        for (k, &x) in tuple.iter().enumerate() {
            u1[ps[k]] = x;
            u2[qs[k]] = x.bar();
        }
        others.add_columns(
            -C::one(),
            0,
            vec![(u1, t.column(0).to_vec()), (u2, t.column(1).to_vec())],
        )?;
    }
    Ok(Replacement { relsum, others })
}

/// `S` fails OS1 at `j`: `[S:T] = -Σ_{U≠S} [U:T] + s`.
pub fn fix_os1<C: Scalar>(s: &Tableau, t: &Tableau, j: usize, n: usize, mode: Mode) -> Result<FixResult<C>> {
    let go = check_mode(mode)?;
    check_violation(s, t, j, n, Condition::Os1)?;
    let r = replacement_sum::<C>(s, t, j, n, go, None, &[])?;
    Ok(FixResult { condition: Condition::Os1, witness: j, heads: r.others, switch: Combination::zero(), relsum: r.relsum })
}

/// `S` fails OS2 at `j`: as OS1, with `j̄` allowed as a replacement.
pub fn fix_os2<C: Scalar>(s: &Tableau, t: &Tableau, j: usize, n: usize, mode: Mode) -> Result<FixResult<C>> {
    let go = check_mode(mode)?;
    check_violation(s, t, j, n, Condition::Os2)?;
    let r = replacement_sum::<C>(s, t, j, n, go, Some(IndexLetter::barred(j)), &[])?;
    Ok(FixResult { condition: Condition::Os2, witness: j, heads: r.others, switch: Combination::zero(), relsum: r.relsum })
}

/// `S` fails OS3 at `j` in columns 1 and 2:
/// `[S:T] = ½(s - Σ_{U≠S,S*} [U:T] - ([S*:T] - [S:T]))`.
pub fn fix_os3<C: Scalar>(s: &Tableau, t: &Tableau, j: usize, n: usize, mode: Mode) -> Result<FixResult<C>> {
    let go = check_mode(mode)?;
    let half = C::half().ok_or_else(|| Error::Coefficient("1/2".into()))?;
    check_violation(s, t, j, n, Condition::Os3)?;
    let (jb, jp) = (IndexLetter::barred(j), IndexLetter::plain(j));
    let s1 = s.column(0);
    let mut star: Vec<IndexLetter> =
        letters(n).into_iter().filter(|&x| x <= jp && s1.contains(&x) && s.column(1).contains(&x.bar())).collect();
    for x in star.iter_mut() {
        if *x == jb {
            *x = jp;
        }
    }
    let r = replacement_sum::<C>(s, t, j, n, go, Some(jp), &[star])?;
    let switch = one_switch_expand::<C>(s, t, j)?;
    Ok(FixResult {
        condition: Condition::Os3,
        witness: j,
        heads: r.others.scale(&half),
        switch: switch.scale(&-half.clone()),
        relsum: r.relsum.scale(&half),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn fixes_reject_wrong_condition() {
        let (s, tt) = (t("1b 2b; 2b 2; 2"), t("1 2; 2b 3; 3b"));
        assert!(fix_os1::<Rational>(&s, &tt, 2, 6, Mode::On).is_ok());
        assert!(fix_os1::<Rational>(&s, &tt, 1, 6, Mode::On).is_err());
        assert!(fix_os2::<Rational>(&s, &tt, 2, 6, Mode::On).is_err());
        assert!(fix_os1::<Rational>(&s, &tt, 2, 6, Mode::Gl).is_err());
    }

    #[test]
    fn os3_needs_one_half() {
        let (s, tt) = (t("1 1; 2b 2; 3"), t("1b 1; 2b 2; 3"));
        assert!(fix_os3::<Rational>(&s, &tt, 2, 6, Mode::On).is_ok());
        assert!(matches!(
            fix_os3::<crate::scalar::Fp<2>>(&s, &tt, 2, 6, Mode::On),
            Err(Error::Coefficient(_))
        ));
    }

    #[test]
    fn heads_are_later_than_s() {
        let (s, tt) = (t("1b 2b; 2b 2; 2"), t("1 2; 2b 3; 3b"));
        let f = fix_os1::<Rational>(&s, &tt, 2, 6, Mode::On).unwrap();
        for (k, _) in f.heads.iter() {
            assert!(k.left > s);
        }
    }
}
