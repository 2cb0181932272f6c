//! The rewriting loop shared by `GL(n)`, `O(n)` and `GO(n)` straightening.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combination::{normalize_columns, Combination, TermKey};
use crate::error::{domain, Error, Result};
use crate::gl_straighten::gl_step;
use crate::on_straighten::on_left_step;
use crate::scalar::Scalar;
use crate::tableaux::{is_gl_standard, is_on_standard, letters, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Gl,
    On,
    Go,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Gl => "gl",
            Mode::On => "on",
            Mode::Go => "go",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Mode::Gl),
            "on" => Ok(Mode::On),
            "go" => Ok(Mode::Go),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StraightenOptions {
    pub mode: Mode,
    pub n: usize,
    /// Refuse once the pending plus finished term count exceeds this.
    pub max_terms: Option<usize>,
    /// Maximum number of rewrite steps.
    pub fuel: usize,
    pub trace: bool,
}

impl StraightenOptions {
    pub fn new(mode: Mode, n: usize) -> StraightenOptions {
        StraightenOptions { mode, n, max_terms: None, fuel: 2_000_000, trace: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Gl,
    Colsum,
    Os1,
    Os2,
    Os3,
    Relsum,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Gl => "GL",
            StepKind::Colsum => "COLSUM",
            StepKind::Os1 => "OS1",
            StepKind::Os2 => "OS2",
            StepKind::Os3 => "OS3",
            StepKind::Relsum => "RELSUM",
        })
    }
}

/// One rewrite: the kind, the witness index, and the number of pending terms
/// before and after.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub kind: StepKind,
    pub witness: usize,
    pub before: usize,
    pub after: usize,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tj={}\t{}\t{}", self.kind, self.witness, self.before, self.after)
    }
}

/// Expansion of one non-standard term, already multiplied by its `γ` power.
/// `relsum` holds the relation-sum part of an OS fix, kept apart for tracing.
pub(crate) struct StepOutcome<C: Scalar> {
    pub kind: StepKind,
    pub witness: usize,
    pub main: Combination<C>,
    pub relsum: Combination<C>,
}

pub struct Straightened<C: Scalar> {
    pub result: Combination<C>,
    pub trace: Vec<TraceLine>,
    pub steps: usize,
}

/// Work-list order: larger shapes first, then `≺` on the left and right
/// tableaux. Every rewrite only produces keys that come later.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Pending(TermKey);

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        if a.left.col_lengths() != b.left.col_lengths() {
            return b.left.shape().shape_cmp(&a.left.shape());
        }
        a.cmp(b)
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_standard(t: &Tableau, mode: Mode, n: usize) -> bool {
    match mode {
        Mode::Gl => is_gl_standard(t, n),
        Mode::On | Mode::Go => is_on_standard(t, n),
    }
}

fn left_step<C: Scalar>(key: &TermKey, mode: Mode, n: usize) -> Result<StepOutcome<C>> {
    match mode {
        Mode::Gl => {
            let (_, row, comb) = gl_step::<C>(&key.left, &key.right)?
                .ok_or_else(|| Error::Domain("GL step on a standard tableau".into()))?;
            let mut main = Combination::zero();
            for (k, c) in comb.iter() {
                let mut k = k.clone();
                k.gamma_pow += key.gamma_pow;
                main.add(k, c.clone());
            }
            Ok(StepOutcome { kind: StepKind::Gl, witness: row, main, relsum: Combination::zero() })
        }
        Mode::On | Mode::Go => on_left_step(key, n, mode == Mode::Go),
    }
}

/// Check the input and bring it to column-sorted form.
fn initial<C: Scalar>(s: &Tableau, t: &Tableau, n: usize) -> Result<Combination<C>> {
    if s.col_lengths() != t.col_lengths() {
        return domain("tableaux have different shapes");
    }
    if s.num_rows() > n {
        return domain(format!("shape has {} rows, more than n={n}", s.num_rows()));
    }
    let a = letters(n);
    if let Some(x) = s.entries().chain(t.entries()).find(|x| !a.contains(x)) {
        return domain(format!("letter {x} is not in the alphabet for n={n}"));
    }
    let cols = s.columns().iter().cloned().zip(t.columns().iter().cloned()).collect();
    let mut out = Combination::zero();
    if let Some((sign, key)) = normalize_columns(cols, 0)? {
        out.add(key, C::from_i64(sign as i64));
    }
    Ok(out)
}

/// Straighten `[S:T]` into standard bideterminants for the given mode.
pub fn straighten<C: Scalar>(s: &Tableau, t: &Tableau, opts: &StraightenOptions) -> Result<Straightened<C>> {
    let mut start = Combination::zero();
    start.add_scaled(&initial::<C>(s, t, opts.n)?, &C::one());
    straighten_combination(&start, opts)
}

/// Straighten every term of a combination.
pub fn straighten_combination<C: Scalar>(
    input: &Combination<C>,
    opts: &StraightenOptions,
) -> Result<Straightened<C>> {
    let n = opts.n;
    if opts.mode != Mode::Gl && n < 3 {
        return Err(Error::InvalidDimension(n, 3));
    }
    let mut work: BTreeMap<Pending, C> = BTreeMap::new();
    for (k, c) in input.iter() {
        push(&mut work, Pending(k.clone()), c.clone());
    }
    let mut result = Combination::zero();
    let mut trace = Vec::new();
    let mut steps = 0;
    while let Some((Pending(key), coef)) = work.pop_first() {
        let left_ok = is_standard(&key.left, opts.mode, n);
        if left_ok && is_standard(&key.right, opts.mode, n) {
            result.add(key, coef);
            continue;
        }
        steps += 1;
        if steps > opts.fuel {
            return Err(Error::FuelExhausted(opts.fuel));
        }
        let outcome = if left_ok {
            let o = left_step::<C>(&key.transpose(), opts.mode, n)?;
            StepOutcome { main: o.main.transpose(), relsum: o.relsum.transpose(), ..o }
        } else {
            left_step::<C>(&key, opts.mode, n)?
        };
        let popped = Pending(key);
        for part in [&outcome.main, &outcome.relsum] {
            for (k, _) in part.iter() {
                if Pending(k.clone()) <= popped {
                    return Err(Error::InductionViolation(format!(
                        "{} step on [{} : {}] produced [{} : {}]",
                        outcome.kind, popped.0.left, popped.0.right, k.left, k.right
                    )));
                }
            }
        }
        let before = work.len() + 1;
        for (k, c) in outcome.main.iter() {
            push(&mut work, Pending(k.clone()), c.clone() * coef.clone());
        }
        let mid = work.len();
        if opts.trace {
            trace.push(TraceLine { kind: outcome.kind, witness: outcome.witness, before, after: mid });
        }
        if !outcome.relsum.is_empty() {
            for (k, c) in outcome.relsum.iter() {
                push(&mut work, Pending(k.clone()), c.clone() * coef.clone());
            }
            if opts.trace {
                trace.push(TraceLine { kind: StepKind::Relsum, witness: outcome.witness, before: mid, after: work.len() });
            }
        }
        if let Some(cap) = opts.max_terms {
            let count = work.len() + result.len();
            if count > cap {
                return Err(Error::CapExceeded { what: "terms".into(), count, cap });
            }
        }
    }
    Ok(Straightened { result, trace, steps })
}

fn push<C: Scalar>(work: &mut BTreeMap<Pending, C>, key: Pending, coef: C) {
    if coef.is_zero() {
        return;
    }
    match work.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coef);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coef;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}
