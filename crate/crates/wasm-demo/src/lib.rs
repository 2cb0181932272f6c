//! Browser bindings for three operations: straighten, enumerate and the
//! standardness report. The plain functions are usable without a browser.

use orthostraight::cli::{cmd_enumerate, cmd_straighten, JobConfig, Outcome};
use orthostraight::driver::Mode;
use orthostraight::scalar::CoeffDomain;
use orthostraight::tableaux::{alphabet, is_gl_standard, on_standard_report, Tableau};
use wasm_bindgen::prelude::*;

/// Largest `n` the page accepts; keeps a stray input from hanging the tab.
pub const MAX_N: usize = 12;
const MAX_TERMS: usize = 20_000;

fn config(n: usize, mode: &str, coeff: &str) -> Result<JobConfig, String> {
    if n > MAX_N {
        return Err(format!("n={n} is above the demo limit {MAX_N}"));
    }
    let mode: Mode = mode.parse().map_err(|e| format!("{e}"))?;
    let coeff: CoeffDomain = coeff.parse().map_err(|e| format!("{e}"))?;
    if mode != Mode::Gl && n < 3 {
        return Err(format!("mode {mode} needs n >= 3"));
    }
    if n == 0 {
        return Err("n must be positive".into());
    }
    Ok(JobConfig { n, mode, coeff, seed: 1, points: 0, max_terms: Some(MAX_TERMS), trace: true })
}

fn finish(out: Outcome) -> Result<String, String> {
    if out.code == 0 {
        Ok(if out.stderr.is_empty() { out.stdout } else { format!("{}{}", out.stdout, out.stderr) })
    } else {
        Err(out.stderr.trim_end().to_string())
    }
}

/// Certificate lines, followed by the rewrite trace.
pub fn straighten_text(left: &str, right: &str, n: usize, mode: &str, coeff: &str) -> Result<String, String> {
    finish(cmd_straighten(&config(n, mode, coeff)?, left, right))
}

/// One standard tableau per line, then `count=`.
pub fn enumerate_text(shape: &str, n: usize, mode: &str) -> Result<String, String> {
    finish(cmd_enumerate(&config(n, mode, "q")?, shape))
}

/// Which standardness conditions a tableau meets, with every failed one.
pub fn report_text(tableau: &str, n: usize) -> Result<String, String> {
    if !(3..=MAX_N).contains(&n) {
        return Err(format!("n must lie in 3..={MAX_N}"));
    }
    let t: Tableau = tableau.parse().map_err(|e| format!("{e}"))?;
    if !t.uses_only(n) {
        let letters: Vec<String> = alphabet(n).map_err(|e| e.to_string())?.iter().map(|x| x.to_string()).collect();
        return Err(format!("entries must come from {}", letters.join(" ")));
    }
    let rep = on_standard_report(&t, n);
    let mut out = format!("tableau {t}\nshape {}\n", t.shape());
    out.push_str(&format!("GL({n})-standard: {}\n", if is_gl_standard(&t, n) { "yes" } else { "no" }));
    out.push_str(&format!("O({n})-standard: {}\n", if rep.standard { "yes" } else { "no" }));
    if !rep.alpha.is_empty() {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        out.push_str(&format!("alpha {}\nbeta {}\n", join(&rep.alpha), join(&rep.beta)));
    }
    for v in &rep.violations {
        let cells: Vec<String> = v.positions.iter().map(|(r, c)| format!("({},{})", r + 1, c + 1)).collect();
        out.push_str(&format!("violation {} i={}", v.condition, v.witness));
        if let Some(c) = v.column {
            out.push_str(&format!(" column={}", c + 1));
        }
        if !cells.is_empty() {
            out.push_str(&format!(" cells {}", cells.join(" ")));
        }
        out.push('\n');
    }
    if let Some(v) = rep.first() {
        out.push_str(&format!("next rewrite: {} at i={}\n", v.condition, v.witness));
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn straighten(left: &str, right: &str, n: usize, mode: &str, coeff: &str) -> Result<String, JsValue> {
    straighten_text(left, right, n, mode, coeff).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn enumerate(shape: &str, n: usize, mode: &str) -> Result<String, JsValue> {
    enumerate_text(shape, n, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn standardness_report(tableau: &str, n: usize) -> Result<String, JsValue> {
    report_text(tableau, n).map_err(|e| JsValue::from_str(&e))
}
