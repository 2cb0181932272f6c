mod common;

use common::l;
use orthostraight::driver::Mode;
use orthostraight::gl_straighten::subsets_of;
use orthostraight::group_oracle::{
    evaluation_rank, point_batch, random_go_point, random_on_point, random_so_point, verify_on_group, Component,
    FormMatrix, GroupPoint,
};
use orthostraight::polyring::{bideterminant, det_poly, eval_minor, gamma_poly, minor, Matrix, Polynomial};
use orthostraight::scalar::{Rational, Scalar};
use orthostraight::tableaux::{letters, Tableau};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn points_preserve_the_form(seed in any::<u64>(), n in 3usize..=6, minus in any::<bool>()) {
        let comp = if minus { Component::Minus } else { Component::Plus };
        let g = random_on_point(n, seed, comp).unwrap();
        let j = FormMatrix::<Rational>::new(n).j;
        prop_assert_eq!(g.matrix.transpose().mul(&j).mul(&g.matrix), j);
        prop_assert_eq!(g.det.clone(), if minus { -Rational::one() } else { Rational::one() });
    }
}

#[test]
fn gamma_is_multiplicative() {
    for n in 3..=6 {
        let gp = gamma_poly::<Rational>(n);
        for seed in 0..6u64 {
            let a = random_go_point(n, seed, &q(2, 1)).unwrap();
            let b = random_go_point(n, seed + 100, &q(-1, 3)).unwrap();
            let ab = a.compose(&b).unwrap();
            assert_eq!(gp.evaluate(&ab.matrix), gp.evaluate(&a.matrix) * gp.evaluate(&b.matrix));
            assert_eq!(ab.gamma, a.gamma.clone() * b.gamma.clone());
        }
    }
}

#[test]
fn binet_cauchy_for_one_column() {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let alpha = letters(n);
    for seed in 0..3u64 {
        let g = random_so_point(n, seed).unwrap();
        let a = random_matrix(&mut rng, n);
        let ga = g.matrix.mul(&a);
        for k in 1..=2 {
            let cols = subsets_of(&alpha, k);
            for s in &cols {
                for t in &cols {
                    let lhs = eval_minor(&ga, s, t);
                    let rhs = cols
                        .iter()
                        .map(|u| eval_minor(&g.matrix, s, u) * eval_minor(&a, u, t))
                        .fold(Rational::zero(), |x, y| x + y);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn minors_are_alternating_and_multilinear() {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let rows = [l("1b"), l("2"), l("2b")];
    let cols = [l("1"), l("2b"), l("2")];
    let p = minor::<Rational>(&rows, &cols).unwrap();
    let swapped = minor::<Rational>(&[rows[1], rows[0], rows[2]], &cols).unwrap();
    assert_eq!(-&p, swapped);
    let swapped = minor::<Rational>(&rows, &[cols[0], cols[2], cols[1]]).unwrap();
    assert_eq!(-&p, swapped);
    assert!(minor::<Rational>(&[rows[0], rows[0], rows[2]], &cols).unwrap().is_zero());
    for _ in 0..10 {
        let a = random_matrix(&mut rng, n);
        let b = random_matrix(&mut rng, n);
        let c = q(rng.gen_range(-5..=5), 1);
        // replace row 1b by c*a + b row-wise
        let r = l("1b").position(n);
        let mix = Matrix::from_fn(n, n, |i, j| if i == r { c.clone() * a.get(i, j).clone() + b.get(i, j).clone() } else { a.get(i, j).clone() });
        let base_b = Matrix::from_fn(n, n, |i, j| if i == r { b.get(i, j).clone() } else { a.get(i, j).clone() });
        assert_eq!(p.evaluate(&mix), c.clone() * p.evaluate(&a) + p.evaluate(&base_b));
    }
    assert_eq!(p.homogeneous_degree(), Some(3));
    assert!(p.terms().all(|(_, c)| c.is_integer()));
}

#[test]
fn bideterminants_are_homogeneous() {
    for (s, t) in [("1b 1; 2", "1 2b; 2"), ("1b 2b 1; 1 2", "1b 1 2; 2b 2"), ("2", "2b")] {
        let (s, t): (Tableau, Tableau) = (s.parse().unwrap(), t.parse().unwrap());
        let p = bideterminant::<Rational>(&s, &t).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(s.size() as u32));
    }
}

#[test]
fn rank_grows_then_stabilizes() {
    let n = 3;
    let polys: Vec<Polynomial<Rational>> = {
        let a = letters(n);
        let mut out = vec![Polynomial::one()];
        for i in &a {
            for j in &a {
                out.push(Polynomial::var(*i, *j));
            }
        }
        out
    };
    let points = point_batch(n, Mode::On, 14, 7, 3).unwrap();
    let ranks: Vec<usize> = (1..=points.len()).map(|k| evaluation_rank(&polys, &points[..k])).collect();
    assert!(ranks.windows(2).all(|w| w[0] <= w[1]));
    // 1 and the 9 entries are independent on O(3)
    assert_eq!(*ranks.last().unwrap(), 10);
    let other = point_batch(n, Mode::On, 14, 99, 3).unwrap();
    assert_eq!(evaluation_rank(&polys, &other), 10);
}

#[test]
fn det_squared_is_one_on_the_group() {
    for n in 3..=5 {
        let d = det_poly::<Rational>(n);
        let mut dd = d.pow(2);
        dd.add_term(orthostraight::polyring::Monomial::one(), -Rational::one());
        let pts: Vec<GroupPoint<Rational>> = point_batch(n, Mode::On, 4, 1, 3).unwrap();
        assert!(verify_on_group(&dd, &pts));
        assert!(!verify_on_group(&d, &pts));
    }
}
