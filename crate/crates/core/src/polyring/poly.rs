use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tableaux::IndexLetter;

/// The indeterminate `X(row, col)`. Ordered by row letter, then column letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub row: IndexLetter,
    pub col: IndexLetter,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{})", self.row, self.col)
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    powers: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { powers: vec![(v, 1)] }
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|p| p.1).sum()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.powers
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut a, mut b) = (self.powers.iter().peekable(), other.powers.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    Ordering::Less => powers.push(*a.next().unwrap()),
                    Ordering::Greater => powers.push(*b.next().unwrap()),
                    Ordering::Equal => {
                        powers.push((x.0, x.1 + y.1));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => powers.push(*a.next().unwrap()),
                (None, Some(_)) => powers.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        Monomial { powers }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree, then the exponent of the first
    /// variable where the two differ (larger exponent is larger).
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (x, y) in self.powers.iter().zip(&other.powers) {
                match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match x.1.cmp(&y.1) {
                        Ordering::Equal => {}
                        o => return o,
                    },
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Sparse polynomial in the `X(i,j)`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<C: Scalar> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn var(row: IndexLetter, col: IndexLetter) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(Var { row, col }), C::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    /// `Some(d)` if every term has degree `d`; the zero polynomial gives `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let lo = self.terms.keys().next()?.degree();
        let hi = self.terms.keys().next_back()?.degree();
        (lo == hi).then_some(lo)
    }

    /// Substitute `X(i,j) -> a(i,j)`; the matrix is indexed by alphabet positions.
    pub fn evaluate(&self, a: &Matrix<C>) -> C {
        let n = a.rows();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in m.powers() {
                let entry = a.get(x.row.position(n), x.col.position(n));
                v = v * entry.pow(*e);
            }
            acc += v;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// One term per line, leading (graded-lex largest) term first.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            if m.powers().is_empty() {
                out.push_str(&format!("{c}\n"));
            } else {
                out.push_str(&format!("{c} * {m}\n"));
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.serialize().trim_end().replace('\n', " + "))
    }
}

impl<'a, C: Scalar> Add for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, o: &'a Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Sub for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, o: &'a Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Mul for &'a Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, o: &'a Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&(-C::one()))
    }
}
