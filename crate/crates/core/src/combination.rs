//! Formal linear combinations of `γ^k [S:T]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::polyring::{bideterminant, eval_bideterminant, gamma_poly, Matrix, Polynomial};
use crate::scalar::Scalar;
use crate::tableaux::{IndexLetter, Tableau};

/// Key of a term: the tableau pair and the power of `γ`.
///
/// Ordered by shape, then left tableau under `≺`, then right tableau, then the
/// `γ` exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TermKey {
    pub left: Tableau,
    pub right: Tableau,
    pub gamma_pow: u32,
}

impl TermKey {
    pub fn new(left: Tableau, right: Tableau, gamma_pow: u32) -> TermKey {
        TermKey { left, right, gamma_pow }
    }

    pub fn transpose(&self) -> TermKey {
        TermKey { left: self.right.clone(), right: self.left.clone(), gamma_pow: self.gamma_pow }
    }

    /// `2 * gamma_pow + |shape|`.
    pub fn graded_degree(&self) -> usize {
        2 * self.gamma_pow as usize + self.left.size()
    }
}

/// One term `coef * γ^gamma_pow * [left:right]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BidetTerm<C: Scalar> {
    pub coef: C,
    pub gamma_pow: u32,
    pub left: Tableau,
    pub right: Tableau,
}

/// Canonically merged combination: no duplicate keys, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Combination<C: Scalar> {
    terms: BTreeMap<TermKey, C>,
}

impl<C: Scalar> Default for Combination<C> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> Combination<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(coef: C, key: TermKey) -> Self {
        let mut c = Self::zero();
        c.add(key, coef);
        c
    }

    /// `+[left:right]`.
    pub fn bideterminant(left: Tableau, right: Tableau) -> Self {
        Self::single(C::one(), TermKey::new(left, right, 0))
    }

    pub fn add(&mut self, key: TermKey, coef: C) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn add_scaled(&mut self, other: &Combination<C>, k: &C) {
        for (key, c) in &other.terms {
            self.add(key.clone(), c.clone() * k.clone());
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, k);
        out
    }

    /// Add `coef * γ^gamma_pow * Π [l_i : r_i]` given as unsorted, possibly
    /// ragged column pairs. Vanishing products are dropped.
    pub fn add_columns(
        &mut self,
        coef: C,
        gamma_pow: u32,
        cols: Vec<(Vec<IndexLetter>, Vec<IndexLetter>)>,
    ) -> Result<()> {
        if let Some((sign, key)) = normalize_columns(cols, gamma_pow)? {
            let c = if sign < 0 { -coef } else { coef };
            self.add(key, c);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &TermKey) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> Vec<BidetTerm<C>> {
        self.terms
            .iter()
            .map(|(k, c)| BidetTerm {
                coef: c.clone(),
                gamma_pow: k.gamma_pow,
                left: k.left.clone(),
                right: k.right.clone(),
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add(k.transpose(), c.clone());
        }
        out
    }

    /// `Σ coef γ^k [S:T]` as a polynomial.
    pub fn to_polynomial(&self, n: usize) -> Result<Polynomial<C>> {
        let gamma = gamma_poly::<C>(n);
        let mut acc = Polynomial::zero();
        for (k, c) in &self.terms {
            let p = &bideterminant::<C>(&k.left, &k.right)? * &gamma.pow(k.gamma_pow);
            acc = &acc + &p.scale(c);
        }
        Ok(acc)
    }

    /// Value at a matrix indexed by alphabet positions.
    pub fn evaluate(&self, a: &Matrix<C>) -> C {
        let g = gamma_value(a);
        let mut acc = C::zero();
        for (k, c) in &self.terms {
            acc += c.clone() * g.pow(k.gamma_pow) * eval_bideterminant(a, &k.left, &k.right);
        }
        acc
    }

    /// Certificate text: `coef<TAB>gamma_pow<TAB>left<TAB>right` per line.
    pub fn certificate(&self) -> String {
        let mut out = String::new();
        for (k, c) in &self.terms {
            out.push_str(&format!("{c}\t{}\t{}\t{}\n", k.gamma_pow, k.left, k.right));
        }
        out
    }

    /// Parse a certificate produced by [`Combination::certificate`].
    pub fn parse_certificate(text: &str) -> Result<Self> {
        let mut out = Self::zero();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 4 {
                return Err(Error::Parse(format!("certificate line needs 4 fields: {line:?}")));
            }
            let q = crate::scalar::parse_rational(f[0])
                .ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", f[0])))?;
            let coef = C::from_ratio(&q).ok_or_else(|| Error::Coefficient(f[0].into()))?;
            let gamma_pow = f[1].parse().map_err(|_| Error::Parse(format!("bad gamma power {:?}", f[1])))?;
            let (left, right): (Tableau, Tableau) = (f[2].parse()?, f[3].parse()?);
            if left.col_lengths() != right.col_lengths() {
                return domain("certificate term with mismatched shapes");
            }
            out.add(TermKey::new(left, right, gamma_pow), coef);
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Display for Combination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.certificate())
    }
}

/// `γ(a) = Σ_i a(i,1) a(ī,1b)`.
pub fn gamma_value<C: Scalar>(a: &Matrix<C>) -> C {
    let n = a.rows();
    let (one, one_b) = (IndexLetter::plain(1).position(n), IndexLetter::barred(1).position(n));
    let mut acc = C::zero();
    for i in crate::tableaux::letters(n) {
        acc += a.get(i.position(n), one).clone() * a.get(i.bar().position(n), one_b).clone();
    }
    acc
}

/// Sort a column, returning the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(col: &mut [IndexLetter]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..col.len() {
        let mut j = i;
        while j > 0 && col[j - 1] > col[j] {
            col.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && col[j - 1] == col[j] {
            return None;
        }
    }
    Some(sign)
}

/// Turn column pairs into a canonical term: sort each column (tracking the
/// determinant sign), drop empty pairs, and order columns by decreasing length.
pub fn normalize_columns(
    cols: Vec<(Vec<IndexLetter>, Vec<IndexLetter>)>,
    gamma_pow: u32,
) -> Result<Option<(i32, TermKey)>> {
    let mut sign = 1;
    let mut pairs = Vec::with_capacity(cols.len());
    for (mut a, mut b) in cols {
        if a.len() != b.len() {
            return domain("column pair of unequal lengths");
        }
        if a.is_empty() {
            continue;
        }
        match (sort_with_sign(&mut a), sort_with_sign(&mut b)) {
            (Some(x), Some(y)) => sign *= x * y,
            _ => return Ok(None),
        }
        pairs.push((a, b));
    }
    pairs.sort_by(|x, y| y.0.len().cmp(&x.0.len()));
    let (l, r): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let key = TermKey::new(Tableau::from_columns(l)?, Tableau::from_columns(r)?, gamma_pow);
    Ok(Some((sign, key)))
}

/// Column-sort a pair of tableaux: sign 0 when a column repeats an entry.
pub fn sort_columns(s: &Tableau, t: &Tableau) -> Result<(i32, Tableau, Tableau)> {
    if s.col_lengths() != t.col_lengths() {
        return domain("sort_columns needs tableaux of equal shape");
    }
    let cols = s.columns().iter().cloned().zip(t.columns().iter().cloned()).collect();
    Ok(match normalize_columns(cols, 0)? {
        Some((sign, key)) => (sign, key.left, key.right),
        None => (0, s.clone(), t.clone()),
    })
}
