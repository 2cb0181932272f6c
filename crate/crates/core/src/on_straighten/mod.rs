//! Straightening on `O(n)` and on the similitude group `GO(n)`.

mod complement;
mod fixes;
mod relation;

pub use complement::{one_column_complement, reduce_tall_shape, Complement};
pub use fixes::{fix_os1, fix_os2, fix_os3, FixResult};
pub use relation::{relation_lhs, relation_rhs, verify_relation, RelationSpec, SdExpansion, SdTerm};

use crate::combination::{Combination, TermKey};
use crate::driver::{straighten, Mode, StepKind, StepOutcome, StraightenOptions, Straightened};
use crate::error::{domain, Error, Result};
use crate::gl_straighten::{embed, gl_step};
use crate::scalar::Scalar;
use crate::tableaux::{on_standard_report, Condition, Tableau};

/// Expand `γ^k [S:T]` once at the first violation of the left tableau.
pub(crate) fn on_left_step<C: Scalar>(key: &TermKey, n: usize, go: bool) -> Result<StepOutcome<C>> {
    let (s, t, g) = (&key.left, &key.right, key.gamma_pow);
    let report = on_standard_report(s, n);
    let v = report.first().ok_or_else(|| Error::Domain("left tableau is already standard".into()))?;
    let mode = if go { Mode::Go } else { Mode::On };
    match v.condition {
        Condition::Gl => {
            let (_, row, comb) = gl_step::<C>(s, t)?.ok_or_else(|| Error::Domain("no row violation".into()))?;
            let main = if g == 0 { comb } else { shift_gamma(&comb, g) };
            Ok(StepOutcome { kind: StepKind::Gl, witness: row, main, relsum: Combination::zero() })
        }
        Condition::Colsum => {
            let (sign, local) = reduce_tall_shape(&s.select_columns(&[0, 1])?, &t.select_columns(&[0, 1])?, n, go)?;
            let local = Combination::single(C::from_i64(sign as i64), local);
            let main = embed(s, t, &[0, 1], &local, g)?;
            Ok(StepOutcome { kind: StepKind::Colsum, witness: 0, main, relsum: Combination::zero() })
        }
        Condition::Os1 | Condition::Os2 | Condition::Os3 => {
            let b = v.column.unwrap_or(1);
            let (ss, tt) = (s.select_columns(&[0, b])?, t.select_columns(&[0, b])?);
            let j = v.witness;
            let (kind, fix) = match v.condition {
                Condition::Os1 => (StepKind::Os1, fix_os1::<C>(&ss, &tt, j, n, mode)?),
                Condition::Os2 => (StepKind::Os2, fix_os2::<C>(&ss, &tt, j, n, mode)?),
                _ => (StepKind::Os3, fix_os3::<C>(&ss, &tt, j, n, mode)?),
            };
            let mut local = fix.heads;
            local.add_scaled(&fix.switch, &C::one());
            let main = embed(s, t, &[0, b], &local, g)?;
            let relsum = embed(s, t, &[0, b], &fix.relsum, g)?;
            Ok(StepOutcome { kind, witness: j, main, relsum })
        }
    }
}

fn shift_gamma<C: Scalar>(c: &Combination<C>, g: u32) -> Combination<C> {
    let mut out = Combination::zero();
    for (k, v) in c.iter() {
        let mut k = k.clone();
        k.gamma_pow += g;
        out.add(k, v.clone());
    }
    out
}

/// Write `[S:T]` as a combination of `γ^k [S':T']` with `S'`, `T'`
/// `O(n)`-standard; the identity holds on `O(n)` (`mode` on, always `k = 0`)
/// or on `GO(n)` (`mode` go).
pub fn on_straighten<C: Scalar>(s: &Tableau, t: &Tableau, n: usize, mode: Mode) -> Result<Combination<C>> {
    Ok(on_straighten_with::<C>(s, t, &StraightenOptions::new(mode, n))?.result)
}

/// As [`on_straighten`], with caps and tracing.
pub fn on_straighten_with<C: Scalar>(s: &Tableau, t: &Tableau, opts: &StraightenOptions) -> Result<Straightened<C>> {
    if opts.mode == Mode::Gl {
        return domain("on_straighten needs mode on or go");
    }
    straighten::<C>(s, t, opts)
}
