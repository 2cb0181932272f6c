use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::polyring::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::tableaux::IndexLetter;

/// The matrix `J` of the form `⟨x,y⟩ = Σ x_i y_ī`, indexed by alphabet position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix<C: Scalar> {
    pub j: Matrix<C>,
}

impl<C: Scalar> FormMatrix<C> {
    pub fn new(n: usize) -> FormMatrix<C> {
        let j = Matrix::from_fn(n, n, |r, c| {
            let x = IndexLetter::from_position(r, n);
            if x.bar().position(n) == c {
                C::one()
            } else {
                C::zero()
            }
        });
        FormMatrix { j }
    }
}

/// A point `g` with `gᵀJg = γJ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPoint<C: Scalar> {
    pub matrix: Matrix<C>,
    pub det: C,
    pub gamma: C,
}

impl<C: Scalar> GroupPoint<C> {
    /// Validate a matrix and record its determinant and multiplier.
    pub fn new(matrix: Matrix<C>) -> Result<GroupPoint<C>> {
        let n = matrix.rows();
        if n < 3 || matrix.cols() != n {
            return Err(Error::InvalidDimension(n, 3));
        }
        let j = FormMatrix::<C>::new(n).j;
        let m = matrix.transpose().mul(&j).mul(&matrix);
        let gamma = m.get(IndexLetter::barred(1).position(n), IndexLetter::plain(1).position(n)).clone();
        if gamma.is_zero() || m != j.scale(&gamma) {
            return Err(Error::NotOnGroup("gᵀJg is not a nonzero multiple of J".into()));
        }
        let det = matrix.det();
        if det.clone() * det.clone() != gamma.pow(n as u32) {
            return Err(Error::NotOnGroup("det² differs from γⁿ".into()));
        }
        Ok(GroupPoint { matrix, det, gamma })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Product `self · other`.
    pub fn compose(&self, other: &GroupPoint<C>) -> Result<GroupPoint<C>> {
        GroupPoint::new(self.matrix.mul(&other.matrix))
    }
}

impl GroupPoint<Rational> {
    /// Image in another domain, if every entry has one there.
    pub fn reduce<C: Scalar>(&self) -> Option<GroupPoint<C>> {
        let m = self.matrix.map(C::from_ratio)?;
        GroupPoint::new(m).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Plus,
    Minus,
}

/// `(I - A)(I + A)^{-1}`, or `None` when `I + A` is singular.
pub fn cayley(a: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    let i = Matrix::identity(a.rows());
    Some(i.sub(a).mul(&i.add(a).inverse()?))
}

const MAX_ATTEMPTS: usize = 64;

/// Numerators in `-range..=range`, denominators in `1..=range`.
fn small_rational(rng: &mut ChaCha8Rng, range: i64) -> Rational {
    let num = rng.gen_range(-range..=range);
    let den = rng.gen_range(1..=range);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A random `J`-skew matrix `A = JK`, `K` skew-symmetric.
fn random_skew(n: usize, rng: &mut ChaCha8Rng, range: i64) -> Matrix<Rational> {
    let mut k = Matrix::<Rational>::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            let v = small_rational(rng, range);
            k.set(r, c, v.clone());
            k.set(c, r, -v);
        }
    }
    FormMatrix::<Rational>::new(n).j.mul(&k)
}

/// A random point of `SO(n, Q)` by the Cayley transform; `range` bounds the
/// numerators and denominators of the parameters.
pub fn random_so_point_in(n: usize, seed: u64, range: i64) -> Result<GroupPoint<Rational>> {
    if n < 3 {
        return Err(Error::InvalidDimension(n, 3));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let a = random_skew(n, &mut rng, range.max(1));
        if let Some(g) = cayley(&a) {
            return GroupPoint::new(g);
        }
    }
    Err(Error::Seeding(MAX_ATTEMPTS))
}

pub fn random_so_point(n: usize, seed: u64) -> Result<GroupPoint<Rational>> {
    random_so_point_in(n, seed, 3)
}

/// The fixed determinant `-1` element: `v0 -> -v0` for odd `n`, the swap
/// `v1b <-> v1` for even `n`.
pub fn minus_element(n: usize) -> Result<GroupPoint<Rational>> {
    let m = if n % 2 == 1 {
        Matrix::from_fn(n, n, |r, c| {
            if r != c {
                Rational::zero()
            } else if r == n - 1 {
                -Rational::one()
            } else {
                Rational::one()
            }
        })
    } else {
        let (p, q) = (IndexLetter::barred(1).position(n), IndexLetter::plain(1).position(n));
        Matrix::from_fn(n, n, |r, c| {
            let src = if r == p { q } else if r == q { p } else { r };
            if c == src {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    };
    GroupPoint::new(m)
}

pub fn random_on_point_in(n: usize, seed: u64, component: Component, range: i64) -> Result<GroupPoint<Rational>> {
    let g = random_so_point_in(n, seed, range)?;
    match component {
        Component::Plus => Ok(g),
        Component::Minus => g.compose(&minus_element(n)?),
    }
}

pub fn random_on_point(n: usize, seed: u64, component: Component) -> Result<GroupPoint<Rational>> {
    random_on_point_in(n, seed, component, 3)
}

/// `ξ(c)`: `c` on the barred basis vectors, 1 elsewhere.
pub fn xi(n: usize, c: &Rational) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |r, col| {
        if r != col {
            Rational::zero()
        } else if IndexLetter::from_position(r, n).is_barred() {
            c.clone()
        } else {
            Rational::one()
        }
    })
}

/// A point of `GO(n, Q)` with multiplier `c` (even `n`) or `c²` (odd `n`).
/// The component is chosen by the parity of `seed`.
pub fn random_go_point_in(n: usize, seed: u64, c: &Rational, range: i64) -> Result<GroupPoint<Rational>> {
    if c.is_zero() {
        return domain("similitude multiplier must be nonzero");
    }
    let comp = if seed % 2 == 0 { Component::Plus } else { Component::Minus };
    let g = random_on_point_in(n, seed, comp, range)?;
    let m = if n % 2 == 0 { g.matrix.mul(&xi(n, c)) } else { g.matrix.scale(c) };
    GroupPoint::new(m)
}

pub fn random_go_point(n: usize, seed: u64, c: &Rational) -> Result<GroupPoint<Rational>> {
    random_go_point_in(n, seed, c, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{det_poly, gamma_poly};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn form_matrix_is_an_involution() {
        for n in 3..7 {
            let j = FormMatrix::<Rational>::new(n).j;
            assert_eq!(j.mul(&j), Matrix::identity(n));
            assert_eq!(j.transpose(), j);
        }
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        let g = cayley(&Matrix::zeros(4, 4)).unwrap();
        assert_eq!(g, Matrix::identity(4));
    }

    #[test]
    fn so_points_have_det_one() {
        for n in 3..7 {
            let g = random_so_point(n, 7).unwrap();
            assert_eq!(g.det, Rational::one());
            assert_eq!(g.gamma, Rational::one());
            assert_eq!(random_so_point(n, 7).unwrap(), g);
        }
    }

    #[test]
    fn minus_points() {
        let m = minus_element(3).unwrap();
        assert_eq!(m.det, -Rational::one());
        assert_eq!(m.matrix.get(2, 2), &-Rational::one());
        let m = minus_element(4).unwrap();
        assert_eq!(m.det, -Rational::one());
        assert_eq!(m.matrix.get(0, 1), &Rational::one());
        for n in 3..7 {
            let g = random_on_point(n, 3, Component::Minus).unwrap();
            assert_eq!(det_poly::<Rational>(n).evaluate(&g.matrix), -Rational::one());
        }
    }

    #[test]
    fn go_points() {
        let g = GroupPoint::new(xi(4, &q(3, 1))).unwrap();
        assert_eq!(gamma_poly::<Rational>(4).evaluate(&g.matrix), q(3, 1));
        let g = GroupPoint::new(Matrix::<Rational>::identity(3).scale(&q(2, 1))).unwrap();
        assert_eq!(gamma_poly::<Rational>(3).evaluate(&g.matrix), q(4, 1));
        assert!(random_go_point(4, 1, &Rational::zero()).is_err());
        let g = random_go_point(5, 2, &q(1, 1)).unwrap();
        assert_eq!(g.gamma, Rational::one());
    }

    #[test]
    fn rejects_non_group_matrix() {
        let m = Matrix::from_fn(3, 3, |r, c| if r == c || (r, c) == (0, 2) { q(1, 1) } else { q(0, 1) });
        assert!(GroupPoint::new(m).is_err());
    }
}
