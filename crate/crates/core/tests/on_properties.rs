mod common;

use common::{all_fillings, residual, t, vanishes_at};
use orthostraight::combination::Combination;
use orthostraight::driver::{straighten, Mode, StraightenOptions};
use orthostraight::group_oracle::{point_batch, random_tableau_pair};
use orthostraight::on_straighten::{fix_os1, fix_os2, fix_os3, on_straighten, FixResult};
use orthostraight::scalar::{Dyadic, Fp, Rational, Scalar};
use orthostraight::tableaux::{is_gl_standard, is_on_standard, Partition, letters, on_standard_report, Condition, IndexLetter, Tableau};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pair(seed: u64, n: usize, size: usize) -> (Tableau, Tableau) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tableau_pair(&mut rng, n, size)
}

fn same_shape(f: &FixResult<Rational>, s: &Tableau) -> Vec<(Tableau, Rational)> {
    f.total()
        .iter()
        .filter(|(k, _)| k.left.col_lengths() == s.col_lengths())
        .map(|(k, c)| (k.left.clone(), c.clone()))
        .collect()
}

fn fix(s: &Tableau, tt: &Tableau, n: usize, mode: Mode) -> Option<FixResult<Rational>> {
    if s.num_cols() != 2 {
        return None;
    }
    let rep = on_standard_report(s, n);
    let v = rep.first()?;
    match v.condition {
        Condition::Os1 => fix_os1(s, tt, v.witness, n, mode).ok(),
        Condition::Os2 => fix_os2(s, tt, v.witness, n, mode).ok(),
        Condition::Os3 if v.column == Some(1) => fix_os3(s, tt, v.witness, n, mode).ok(),
        _ => None,
    }
}

/// A column-strict tableau of the given column lengths with no pair `i, ī`.
fn pairless(rng: &mut ChaCha8Rng, n: usize, cols: &[usize]) -> Option<Tableau> {
    let mut pool: Vec<IndexLetter> = letters(n).into_iter().filter(|x| !x.is_zero() && !x.is_barred()).collect();
    for x in letters(n) {
        if !x.is_zero() && x.is_barred() && rng.gen_bool(0.5) {
            let i = pool.iter().position(|&y| y == x.bar())?;
            pool[i] = x;
        }
    }
    pool.sort();
    if pool.len() < cols[0] {
        return None;
    }
    let out: Vec<Vec<IndexLetter>> = cols.iter().map(|&k| pool[..k].to_vec()).collect();
    Tableau::from_columns(out).ok()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn straightening_is_sound(seed in any::<u64>(), n in 3usize..=6, size in 1usize..=4) {
        let (s, tt) = pair(seed, n, size);
        let out = on_straighten::<Rational>(&s, &tt, n, Mode::On).unwrap();
        for (k, c) in out.iter() {
            prop_assert!(is_on_standard(&k.left, n) && is_on_standard(&k.right, n));
            prop_assert!(c.is_dyadic());
            prop_assert_eq!(k.gamma_pow, 0);
        }
        prop_assert!(vanishes_at(&residual(&out, &s, &tt), &point_batch(n, Mode::On, 4, seed, 3).unwrap()));
    }

    #[test]
    fn dyadic_and_prime_fields_agree(seed in any::<u64>(), n in 3usize..=5, size in 1usize..=3) {
        let (s, tt) = pair(seed, n, size);
        let q = on_straighten::<Rational>(&s, &tt, n, Mode::On).unwrap();
        let d = on_straighten::<Dyadic>(&s, &tt, n, Mode::On).unwrap();
        let f5 = on_straighten::<Fp<5>>(&s, &tt, n, Mode::On).unwrap();
        let f7 = on_straighten::<Fp<7>>(&s, &tt, n, Mode::On).unwrap();
        let reduce = |c: &Combination<Rational>| -> (Combination<Fp<5>>, Combination<Fp<7>>) {
            let (mut a, mut b) = (Combination::zero(), Combination::zero());
            for (k, v) in c.iter() {
                a.add(k.clone(), Fp::<5>::from_ratio(v).unwrap());
                b.add(k.clone(), Fp::<7>::from_ratio(v).unwrap());
            }
            (a, b)
        };
        prop_assert_eq!(d.certificate(), q.certificate());
        let (a, b) = reduce(&q);
        prop_assert_eq!(a, f5);
        prop_assert_eq!(b, f7);
    }

    #[test]
    fn go_output_is_graded(seed in any::<u64>(), n in 3usize..=5, size in 1usize..=3) {
        let (s, tt) = pair(seed, n, size);
        let out = on_straighten::<Rational>(&s, &tt, n, Mode::Go).unwrap();
        for (k, _) in out.iter() {
            prop_assert_eq!(k.graded_degree(), size);
            prop_assert!(is_on_standard(&k.left, n) && is_on_standard(&k.right, n));
        }
        prop_assert!(vanishes_at(&residual(&out, &s, &tt), &point_batch(n, Mode::Go, 3, seed, 3).unwrap()));
    }
}

/// Two-column `GL(n)`-standard tableaux failing OS1, OS2 or OS3 (in column 2).
fn os_violators(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for r in 2..=5 {
        for shape in Partition::all_of(r) {
            if shape.parts()[0] != 2 {
                continue;
            }
            for s in all_fillings(&shape, n) {
                if is_gl_standard(&s, n) && fix(&s, &s, n, Mode::On).is_some() {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn other_right(rng: &mut ChaCha8Rng, s: &Tableau, n: usize) -> Tableau {
    loop {
        let (_, t2) = random_tableau_pair(rng, n, s.size());
        if t2.col_lengths() == s.col_lengths() {
            return t2;
        }
    }
}

#[test]
fn fix_heads_do_not_depend_on_t() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [4, 5] {
        let all = os_violators(n);
        assert!(all.len() > 10, "{}", all.len());
        for s in all.iter().step_by(3) {
            let (t1, t2) = (other_right(&mut rng, s, n), other_right(&mut rng, s, n));
            let (a, b) = (fix(s, &t1, n, Mode::On).unwrap(), fix(s, &t2, n, Mode::On).unwrap());
            assert_eq!(same_shape(&a, s), same_shape(&b, s), "S={s}");
            for (k, _) in a.heads.iter() {
                assert!(k.left > *s);
                assert_eq!(k.right, t1);
            }
        }
    }
}

#[test]
fn relation_terms_vanish_without_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    for n in [4, 5, 6] {
        let points = point_batch(n, Mode::On, 3, 4, 3).unwrap();
        for s in os_violators(n).iter().step_by(7) {
            if let Some(tt) = pairless(&mut rng, n, &s.col_lengths()) {
                let f = fix(s, &tt, n, Mode::On).unwrap();
                assert!(vanishes_at(&f.relsum, &points), "S={s} T={tt}");
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn basic_right_tableau_can_leave_lower_terms() {
    let (s, tl) = (t("1b 1; 1"), t("1b 1b; 1"));
    assert_eq!(Tableau::basic(&s.shape(), 3).unwrap(), tl);
    let f = fix_os1::<Rational>(&s, &tl, 1, 3, Mode::On).unwrap();
    let lower = f.lower(&s);
    let points = point_batch(3, Mode::On, 4, 1, 3).unwrap();
    assert!(vanishes_at(&residual(&f.total(), &s, &tl), &points));
    assert!(!vanishes_at(&lower, &points));
}

#[test]
fn fuel_never_runs_out_on_the_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let n = rng.gen_range(3..=6);
        let size = rng.gen_range(1..=5);
        let (s, tt) = random_tableau_pair(&mut rng, n, size);
        for mode in [Mode::On, Mode::Go] {
            let mut opts = StraightenOptions::new(mode, n);
            opts.fuel = 200_000;
            straighten::<Rational>(&s, &tt, &opts).unwrap_or_else(|e| panic!("{s} {tt} {mode}: {e}"));
        }
    }
}
