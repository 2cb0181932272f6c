#![allow(dead_code)]

use orthostraight::combination::{sort_columns, Combination, TermKey};
use orthostraight::group_oracle::GroupPoint;
use orthostraight::scalar::{Rational, Scalar};
use orthostraight::tableaux::{
    bar, enumerate_on_standard, letters, on_standard_report, IndexLetter, Partition, Tableau,
};

pub fn t(s: &str) -> Tableau {
    s.parse().unwrap()
}

pub fn l(s: &str) -> IndexLetter {
    s.parse().unwrap()
}

/// `out - [S:T]`, with the column-sort sign of the input applied.
pub fn residual<C: Scalar>(out: &Combination<C>, s: &Tableau, tt: &Tableau) -> Combination<C> {
    let mut d = out.clone();
    let (sign, a, b) = sort_columns(s, tt).unwrap();
    if sign != 0 {
        d.add(TermKey::new(a, b, 0), C::from_i64(-(sign as i64)));
    }
    d
}

pub fn vanishes_at(c: &Combination<Rational>, points: &[GroupPoint<Rational>]) -> bool {
    points.iter().all(|p| c.evaluate(&p.matrix).is_zero())
}

/// Every filling of the shape from the alphabet, by brute force.
pub fn all_fillings(shape: &Partition, n: usize) -> Vec<Tableau> {
    let alpha = letters(n);
    let cells: usize = shape.size();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        let mut k = 0;
        let rows: Vec<Vec<IndexLetter>> = shape
            .parts()
            .iter()
            .map(|&len| {
                let r = idx[k..k + len].iter().map(|&i| alpha[i]).collect();
                k += len;
                r
            })
            .collect();
        out.push(Tableau::from_rows(rows).unwrap());
        let mut p = 0;
        loop {
            if p == cells {
                return out;
            }
            idx[p] += 1;
            if idx[p] < alpha.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

/// The exhaustive checks on letters, partitions and tableaux; returns the
/// failures found.
pub fn tableau_invariants() -> Vec<String> {
    let mut bad = Vec::new();
    for n in 3..=10 {
        for &x in &letters(n) {
            if bar(bar(x)) != x {
                bad.push(format!("bar twice of {x} for n={n}"));
            }
        }
    }
    for r in 0..=12 {
        for p in Partition::all_of(r) {
            if p.conjugate().conjugate() != p {
                bad.push(format!("conjugate twice of {p}"));
            }
        }
    }
    for r in 1..=8 {
        let ps = Partition::all_of(r);
        for a in &ps {
            if a.dominance_lt(a).unwrap() {
                bad.push(format!("dominance reflexive at {a}"));
            }
            for b in &ps {
                let ab = a.dominance_lt(b).unwrap();
                if ab && b.dominance_lt(a).unwrap() {
                    bad.push(format!("dominance symmetric at {a},{b}"));
                }
                if ab && !a.shape_order_lt(b) {
                    bad.push(format!("shape order does not refine dominance at {a},{b}"));
                }
                let (x, y) = (a.shape_order_lt(b), b.shape_order_lt(a));
                if (a == b && (x || y)) || (a != b && x == y) {
                    bad.push(format!("shape order not strict total at {a},{b}"));
                }
                for c in &ps {
                    if ab && b.dominance_lt(c).unwrap() && !a.dominance_lt(c).unwrap() {
                        bad.push(format!("dominance not transitive at {a},{b},{c}"));
                    }
                    if x && b.shape_order_lt(c) && !a.shape_order_lt(c) {
                        bad.push(format!("shape order not transitive at {a},{b},{c}"));
                    }
                }
            }
        }
        let small = Partition::new(vec![1]).unwrap();
        let big = Partition::new(vec![1, 1]).unwrap();
        if !small.shape_order_lt(&big) {
            bad.push("shape order does not start with size".into());
        }
    }
    let shape = Partition::new(vec![2, 2]).unwrap();
    let all: Vec<Tableau> = all_fillings(&shape, 4).into_iter().filter(|t| t.is_column_strict()).collect();
    for a in &all {
        for b in &all {
            let ab = a.prec(b).unwrap();
            if (a == b) != ab.is_eq() || ab != b.prec(a).unwrap().reverse() {
                bad.push(format!("prec not a strict total order at {a} / {b}"));
            }
        }
    }
    for r in 1..=6 {
        for lambda in Partition::all_of(r) {
            let cols = lambda.conjugate().parts().to_vec();
            for j in 1..cols.len() {
                for i in 0..j {
                    let mut moved = cols.clone();
                    moved[i] += 1;
                    moved[j] -= 1;
                    if moved.windows(2).any(|w| w[0] < w[1]) {
                        continue;
                    }
                    let mu = Partition::from_columns(&moved.into_iter().filter(|&c| c > 0).collect::<Vec<_>>()).unwrap();
                    if !mu.dominance_lt(&lambda).unwrap() {
                        bad.push(format!("moving a bottom entry of column {j} into column {i} of {lambda} gives {mu}"));
                    }
                }
            }
        }
    }
    for n in 3..=6 {
        for r in 0..=5 {
            for shape in Partition::all_of(r) {
                let brute: Vec<Tableau> = all_fillings(&shape, n)
                    .into_iter()
                    .filter(|t| on_standard_report(t, n).standard)
                    .collect();
                let mut brute_sorted = brute.clone();
                brute_sorted.sort_by(|a, b| a.prec(b).unwrap());
                let got = enumerate_on_standard(&shape, n);
                if got != brute_sorted {
                    bad.push(format!("enumeration of shape {shape} n={n}: {} vs brute force {}", got.len(), brute.len()));
                }
                for x in &brute {
                    if !orthostraight::tableaux::is_gl_standard(x, n) {
                        bad.push(format!("O(n)-standard but not GL-standard: {x}"));
                    }
                }
            }
        }
    }
    bad
}
