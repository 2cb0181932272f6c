use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combination::{Combination, TermKey};
use crate::driver::{straighten, Mode, StraightenOptions};
use crate::error::{Error, Result};
use crate::polyring::{Matrix, Polynomial};
use crate::scalar::{Fp, Rational, Scalar, MERSENNE61};
use crate::tableaux::{enumerate_on_standard, is_on_standard, letters, Partition, Tableau};

use super::points::{random_go_point_in, random_on_point_in, Component, GroupPoint};

/// `true` iff `p` vanishes at every point.
pub fn verify_on_group<C: Scalar>(p: &Polynomial<C>, points: &[GroupPoint<C>]) -> bool {
    points.iter().all(|g| p.evaluate(&g.matrix).is_zero())
}

/// Rank of the `polys × points` evaluation matrix.
pub fn evaluation_rank<C: Scalar>(polys: &[Polynomial<C>], points: &[GroupPoint<C>]) -> usize {
    let m = Matrix::from_fn(polys.len(), points.len(), |r, c| polys[r].evaluate(&points[c].matrix));
    m.rank()
}

/// Rank of a value matrix: first modulo `2^61 - 1`, exactly only when that
/// falls short of full row rank.
pub fn value_rank<C: Scalar>(values: &Matrix<C>) -> usize {
    if let Some(r) = values.map(|v| v.to_ratio().and_then(|q| Fp::<MERSENNE61>::from_ratio(&q))) {
        let rank = r.rank();
        if rank == values.rows() {
            return rank;
        }
    }
    values.rank()
}

/// One basis element `γ^k [S:T]`.
pub type BasisElement = TermKey;

/// The standard set: `O(n)`-standard pairs with `|λ| <= r` (mode on), or
/// `γ^k [S:T]` with `2k + |λ| = r` (mode go).
pub fn standard_set(n: usize, r: usize, mode: Mode) -> Vec<BasisElement> {
    let mut out = Vec::new();
    let sizes: Vec<(u32, usize)> = match mode {
        Mode::Go => (0..=r / 2).map(|k| (k as u32, r - 2 * k)).collect(),
        _ => (0..=r).map(|s| (0, s)).collect(),
    };
    for (k, size) in sizes {
        for shape in Partition::all_of(size) {
            let tabs = enumerate_on_standard(&shape, n);
            for s in &tabs {
                for t in &tabs {
                    out.push(TermKey::new(s.clone(), t.clone(), k));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    /// Maximum degree (mode on) or exact graded degree (mode go).
    pub r: usize,
    pub mode: Mode,
    /// Points per batch; defaults to the basis size plus a margin.
    pub num_points: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    pub spanning_samples: usize,
}

impl SuiteConfig {
    pub fn new(n: usize, r: usize, mode: Mode) -> SuiteConfig {
        SuiteConfig { n, r, mode, num_points: None, seed: 1, cap: 2000, spanning_samples: 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub n: usize,
    pub r: usize,
    pub mode: Mode,
    pub domain: String,
    pub expected: usize,
    pub rank: usize,
    pub rank_second: usize,
    pub points: usize,
    /// `(k, |λ|, count)` per block.
    pub listing: Vec<(u32, usize, usize)>,
    pub residuals_zero: usize,
    pub samples: usize,
    pub graded_ok: bool,
}

impl BasisReport {
    pub fn pass(&self) -> bool {
        self.rank == self.expected
            && self.rank_second == self.expected
            && self.residuals_zero == self.samples
            && self.graded_ok
    }
}

impl fmt::Display for BasisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis n={} mode={} degree={} coeff={}", self.n, self.mode, self.r, self.domain)?;
        for (k, size, count) in &self.listing {
            writeln!(f, "block k={k} size={size} count={count}")?;
        }
        writeln!(f, "points per batch={}", self.points)?;
        writeln!(f, "independence rank={} expected={}", self.rank, self.expected)?;
        writeln!(f, "independence second batch rank={} expected={}", self.rank_second, self.expected)?;
        writeln!(f, "spanning residuals_zero={}/{}", self.residuals_zero, self.samples)?;
        if self.mode == Mode::Go {
            writeln!(f, "grading {}", if self.graded_ok { "ok" } else { "broken" })?;
        }
        writeln!(f, "{}", if self.pass() { "PASS" } else { "FAIL" })
    }
}

const MULTIPLIERS: [(i64, i64); 6] = [(2, 1), (3, 1), (1, 2), (-2, 3), (5, 1), (3, 4)];

/// Point number `i` of the batch with this seed: alternating components in
/// mode on, cycling multipliers other than 1 in mode go.
fn batch_point(n: usize, mode: Mode, seed: u64, i: u64, range: i64) -> Result<GroupPoint<Rational>> {
    let s = seed.wrapping_mul(1_000_003).wrapping_add(i);
    match mode {
        Mode::Go => {
            let (a, b) = MULTIPLIERS[i as usize % MULTIPLIERS.len()];
            random_go_point_in(n, s, &Rational::new(a.into(), b.into()), range)
        }
        _ => {
            let comp = if i % 2 == 0 { Component::Plus } else { Component::Minus };
            random_on_point_in(n, s, comp, range)
        }
    }
}

/// A batch of rational points; half from each component, with multipliers
/// other than 1 in mode go.
pub fn point_batch(n: usize, mode: Mode, count: usize, seed: u64, range: i64) -> Result<Vec<GroupPoint<Rational>>> {
    (0..count as u64).map(|i| batch_point(n, mode, seed, i, range)).collect()
}

/// Points in the evaluation domain `E`, skipping those that do not reduce and
/// repeats. Fails with a seeding error if too few survive.
fn points_in<E: Scalar>(n: usize, mode: Mode, count: usize, seed: u64, range: i64) -> Result<Vec<GroupPoint<E>>> {
    let mut out: Vec<GroupPoint<E>> = Vec::with_capacity(count);
    let budget = 40 * count + 100;
    let mut tried = 0;
    let mut i = 0u64;
    while out.len() < count {
        if tried >= budget {
            return Err(Error::Seeding(tried));
        }
        let p = batch_point(n, mode, seed, i, range)?;
        i += 1;
        tried += 1;
        if let Some(p) = p.reduce::<E>() {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn value_matrix<E: Scalar>(set: &[BasisElement], points: &[GroupPoint<E>]) -> Matrix<E> {
    let cols: Vec<Vec<E>> = points
        .iter()
        .map(|p| set.iter().map(|k| Combination::single(E::one(), k.clone()).evaluate(&p.matrix)).collect())
        .collect();
    Matrix::from_fn(set.len(), points.len(), |r, c| cols[c][r].clone())
}

fn random_column(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<crate::tableaux::IndexLetter> {
    let mut a = letters(n);
    a.shuffle(rng);
    let mut c: Vec<_> = a.into_iter().take(len).collect();
    c.sort();
    c
}

/// A random column-strict tableau of a random shape with `size` boxes and at
/// most `n` rows.
pub fn random_tableau_pair(rng: &mut ChaCha8Rng, n: usize, size: usize) -> (Tableau, Tableau) {
    let shapes: Vec<Partition> = Partition::all_of(size).into_iter().filter(|p| p.len() <= n).collect();
    let shape = shapes[rng.gen_range(0..shapes.len())].clone();
    let cols = shape.conjugate().parts().to_vec();
    let mk = |rng: &mut ChaCha8Rng| {
        Tableau::from_columns(cols.iter().map(|&l| random_column(rng, n, l)).collect()).expect("valid shape")
    };
    let s = mk(rng);
    let t = mk(rng);
    (s, t)
}

/// Certify independence of the standard set by evaluation rank at two point
/// batches, and spanning by straightening random non-standard pairs.
pub fn basis_suite<C: Scalar>(cfg: &SuiteConfig) -> Result<BasisReport> {
    if C::one().to_ratio().is_some() {
        run_suite::<C, Rational>(cfg, |c| c.to_ratio())
    } else {
        run_suite::<C, C>(cfg, |c| Some(c.clone()))
    }
}

fn run_suite<C: Scalar, E: Scalar>(cfg: &SuiteConfig, conv: impl Fn(&C) -> Option<E>) -> Result<BasisReport> {
    let n = cfg.n;
    if n < 3 {
        return Err(Error::InvalidDimension(n, 3));
    }
    if cfg.mode == Mode::Gl {
        return crate::error::domain("basis suite needs mode on or go");
    }
    let set = standard_set(n, cfg.r, cfg.mode);
    if set.len() > cfg.cap {
        return Err(Error::CapExceeded { what: "standard bideterminants".into(), count: set.len(), cap: cfg.cap });
    }
    let mut listing: Vec<(u32, usize, usize)> = Vec::new();
    for k in &set {
        let key = (k.gamma_pow, k.left.size());
        match listing.last_mut() {
            Some(last) if (last.0, last.1) == key => last.2 += 1,
            _ => listing.push((key.0, key.1, 1)),
        }
    }
    let npts = cfg.num_points.unwrap_or(set.len() + 8);

    let mut range = 3;
    let mut ranks = (0, 0);
    let mut batch = Vec::new();
    for attempt in 0..3u64 {
        let b1 = points_in::<E>(n, cfg.mode, npts, cfg.seed.wrapping_add(attempt * 101), range)?;
        let b2 = points_in::<E>(n, cfg.mode, npts, cfg.seed.wrapping_add(attempt * 101 + 50_000), range)?;
        ranks = (value_rank(&value_matrix(&set, &b1)), value_rank(&value_matrix(&set, &b2)));
        batch = b1;
        if ranks.0 == set.len() && ranks.1 == set.len() {
            break;
        }
        range *= 2;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let mut residuals_zero = 0;
    let mut graded_ok = true;
    let opts = StraightenOptions::new(cfg.mode, n);
    for _ in 0..cfg.spanning_samples {
        let size = if cfg.mode == Mode::Go { cfg.r } else { rng.gen_range(1..=cfg.r.max(1)) };
        let mut pair = random_tableau_pair(&mut rng, n, size);
        for _ in 0..20 {
            if !(is_on_standard(&pair.0, n) && is_on_standard(&pair.1, n)) {
                break;
            }
            pair = random_tableau_pair(&mut rng, n, size);
        }
        let out = straighten::<C>(&pair.0, &pair.1, &opts)?.result;
        let mut diff: Combination<E> = Combination::single(E::one(), TermKey::new(pair.0.clone(), pair.1.clone(), 0));
        for (k, c) in out.iter() {
            let c = conv(c).ok_or_else(|| Error::Coefficient(c.to_string()))?;
            diff.add(k.clone(), -c);
            if 2 * k.gamma_pow as usize + k.left.size() != size && cfg.mode == Mode::Go {
                graded_ok = false;
            }
            if !(is_on_standard(&k.left, n) && is_on_standard(&k.right, n)) {
                graded_ok = false;
            }
        }
        if batch.iter().all(|p| diff.evaluate(&p.matrix).is_zero()) {
            residuals_zero += 1;
        }
    }

    Ok(BasisReport {
        n,
        r: cfg.r,
        mode: cfg.mode,
        domain: C::domain_name(),
        expected: set.len(),
        rank: ranks.0,
        rank_second: ranks.1,
        points: npts,
        listing,
        residuals_zero,
        samples: cfg.spanning_samples,
        graded_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_set_sizes() {
        assert_eq!(standard_set(3, 2, Mode::On).len(), 44);
        let go = standard_set(4, 2, Mode::Go);
        assert!(go.iter().all(|k| 2 * k.gamma_pow as usize + k.left.size() == 2));
        assert!(go.iter().any(|k| k.gamma_pow == 1 && k.left.is_empty()));
    }

    #[test]
    fn rank_of_constant_and_det() {
        let pts = point_batch(3, Mode::On, 4, 9, 3).unwrap();
        let one = Polynomial::<Rational>::one();
        assert_eq!(evaluation_rank(&[one.clone()], &pts), 1);
        let d = crate::polyring::det_poly::<Rational>(3);
        let polys = [&d - &one, &d + &one];
        assert_eq!(evaluation_rank(&polys, &pts), 2);
        assert!(verify_on_group(&(&(&d * &d) - &one), &pts));
        assert!(!verify_on_group(&(&d - &one), &pts));
    }

    #[test]
    fn reduced_batches_meet_both_components() {
        use crate::scalar::Fp;
        let pts = points_in::<Fp<5>>(3, Mode::On, 10, 1, 3).unwrap();
        let minus = pts.iter().filter(|p| p.det == -Fp::<5>::one()).count();
        assert!(minus >= 2 && minus <= 8, "{minus}");
    }

    #[test]
    fn degree_two_basis_on_o3() {
        let r = basis_suite::<Rational>(&SuiteConfig::new(3, 2, Mode::On)).unwrap();
        assert_eq!((r.rank, r.rank_second, r.expected), (44, 44, 44));
        assert!(r.pass());
    }
}
