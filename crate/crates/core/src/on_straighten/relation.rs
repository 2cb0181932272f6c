//! The relation sums `L̃ = Σ_d 𝒮_d` that hold on `O(n)`.

use crate::combination::Combination;
use crate::error::{domain, Result};
use crate::gl_straighten::subsets;
use crate::group_oracle::GroupPoint;
use crate::scalar::Scalar;
use crate::tableaux::{letters, IndexLetter, Tableau};

type Column = Vec<IndexLetter>;

/// Input to a relation sum: rows `(i_s, ī_s)` are stacked on top of the ragged
/// two-column remainder `s0`, against the two-column right tableau `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub s0: (Column, Column),
    pub t: Tableau,
    pub a: usize,
    /// Excluded letters, sorted.
    pub c: Vec<IndexLetter>,
    pub n: usize,
}

impl RelationSpec {
    pub fn new(s0: (Column, Column), t: Tableau, a: usize, mut c: Vec<IndexLetter>, n: usize) -> Result<Self> {
        c.sort();
        c.dedup();
        let spec = RelationSpec { s0, t, a, c, n };
        spec.check()?;
        Ok(spec)
    }

    fn check(&self) -> Result<()> {
        if self.a == 0 {
            return domain("relation sum needs a >= 1");
        }
        if self.c.len() >= self.a {
            return domain(format!("|C| = {} must be less than a = {}", self.c.len(), self.a));
        }
        if self.t.num_cols() != 2 {
            return domain("relation sum needs a two-column right tableau");
        }
        let (l1, l2) = (self.t.column(0).len(), self.t.column(1).len());
        if self.a > l2 || self.s0.0.len() + self.a != l1 || self.s0.1.len() + self.a != l2 {
            return domain("remainder and right tableau lengths do not match a");
        }
        Ok(())
    }

    fn right_columns(&self) -> (Column, Column) {
        (self.t.column(0).to_vec(), self.t.column(1).to_vec())
    }

    fn stacked(&self, top: &[IndexLetter]) -> (Column, Column) {
        let mut c1: Column = top.to_vec();
        c1.extend_from_slice(&self.s0.0);
        let mut c2: Column = top.iter().map(|x| x.bar()).collect();
        c2.extend_from_slice(&self.s0.1);
        (c1, c2)
    }
}

/// One term `sign [rows (i_s, ī_s) atop S0 : (T,E)]` of `𝒮_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdTerm {
    pub sign: i32,
    /// The stacked letters `i_1 < … < i_{a-d}`, all in `C`.
    pub top: Vec<IndexLetter>,
    pub e: Vec<IndexLetter>,
    pub left: (Column, Column),
    pub right: (Column, Column),
}

/// `blocks[d-1]` lists the terms of `𝒮_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdExpansion {
    pub blocks: Vec<Vec<SdTerm>>,
}

impl SdExpansion {
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| b.is_empty())
    }

    /// Merge into a canonical combination. With `go`, the terms of `𝒮_d` are
    /// weighted by `γ^d`.
    pub fn to_combination<C: Scalar>(&self, go: bool) -> Result<Combination<C>> {
        let mut out = Combination::zero();
        for (d, block) in self.blocks.iter().enumerate() {
            let g = if go { d as u32 + 1 } else { 0 };
            for term in block {
                out.add_columns(
                    C::from_i64(term.sign as i64),
                    g,
                    vec![
                        (term.left.0.clone(), term.right.0.clone()),
                        (term.left.1.clone(), term.right.1.clone()),
                    ],
                )?;
            }
        }
        Ok(out)
    }
}

/// Sign of the permutation listing `first` (positions, in the given order)
/// and then the remaining positions of `0..len` in increasing order.
pub(crate) fn lift_sign(first: &[usize], len: usize) -> i32 {
    let mut perm: Vec<usize> = first.to_vec();
    perm.extend((0..len).filter(|p| !first.contains(p)));
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The right-hand side `Σ_d 𝒮_d`.
pub fn relation_rhs(spec: &RelationSpec) -> Result<SdExpansion> {
    spec.check()?;
    let (t1, t2) = spec.right_columns();
    // Letters e with e in column 1 and ē in column 2 of T.
    let pairs: Vec<(IndexLetter, usize, usize)> = t1
        .iter()
        .enumerate()
        .filter_map(|(p, &e)| t2.iter().position(|&x| x == e.bar()).map(|q| (e, p, q)))
        .collect();
    let mut blocks = Vec::with_capacity(spec.a);
    for d in 1..=spec.a {
        let mut block = Vec::new();
        let free = spec.a - d;
        if spec.c.len() >= free {
            for es in subsets(pairs.len(), d) {
                let e: Vec<IndexLetter> = es.iter().map(|&x| pairs[x].0).collect();
                let ps: Vec<usize> = es.iter().map(|&x| pairs[x].1).collect();
                let qs: Vec<usize> = es.iter().map(|&x| pairs[x].2).collect();
                let eps = lift_sign(&ps, t1.len()) * lift_sign(&qs, t2.len());
                let sign = eps * if free % 2 == 0 { 1 } else { -1 };
                let r1: Column = (0..t1.len()).filter(|p| !ps.contains(p)).map(|p| t1[p]).collect();
                let r2: Column = (0..t2.len()).filter(|q| !qs.contains(q)).map(|q| t2[q]).collect();
                for top in subsets(spec.c.len(), free) {
                    let top: Vec<IndexLetter> = top.iter().map(|&x| spec.c[x]).collect();
                    block.push(SdTerm {
                        sign,
                        left: spec.stacked(&top),
                        top,
                        e: e.clone(),
                        right: (r1.clone(), r2.clone()),
                    });
                }
            }
        }
        blocks.push(block);
    }
    Ok(SdExpansion { blocks })
}

/// The left-hand side `Σ_{i_1<…<i_a ∈ ℐ−C} [stacked : T]`.
pub fn relation_lhs<C: Scalar>(spec: &RelationSpec) -> Result<Combination<C>> {
    spec.check()?;
    let pool: Vec<IndexLetter> = letters(spec.n).into_iter().filter(|x| !spec.c.contains(x)).collect();
    let (t1, t2) = spec.right_columns();
    let mut out = Combination::zero();
    for idx in subsets(pool.len(), spec.a) {
        let top: Vec<IndexLetter> = idx.iter().map(|&x| pool[x]).collect();
        let (c1, c2) = spec.stacked(&top);
        out.add_columns(C::one(), 0, vec![(c1, t1.clone()), (c2, t2.clone())])?;
    }
    Ok(out)
}

/// Check `lhs = rhs` exactly at every point. Points must lie on `O(n)` unless
/// `go` is set, in which case the `γ^d` weights are used.
pub fn verify_relation<C: Scalar>(spec: &RelationSpec, points: &[GroupPoint<C>], go: bool) -> Result<bool> {
    let mut diff = relation_lhs::<C>(spec)?;
    diff.add_scaled(&relation_rhs(spec)?.to_combination::<C>(go)?, &-C::one());
    for p in points {
        if p.matrix.rows() != spec.n {
            return domain("point dimension does not match n");
        }
        if !go && !p.gamma.is_one() {
            return Err(crate::Error::NotOnGroup("point is not orthogonal".into()));
        }
        if !diff.evaluate(&p.matrix).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> IndexLetter {
        s.parse().unwrap()
    }

    #[test]
    fn lift_signs() {
        assert_eq!(lift_sign(&[], 3), 1);
        assert_eq!(lift_sign(&[0], 3), 1);
        assert_eq!(lift_sign(&[1], 3), -1);
        assert_eq!(lift_sign(&[2, 0], 3), 1);
        assert_eq!(lift_sign(&[0, 2, 1], 3), -1);
        assert_eq!(lift_sign(&[1, 2], 3), 1);
    }

    #[test]
    fn no_pairs_in_t_gives_zero() {
        let spec = RelationSpec::new((vec![], vec![]), "1 3b; 2 4b".parse().unwrap(), 2, vec![], 8).unwrap();
        assert!(relation_rhs(&spec).unwrap().is_empty());
    }

    #[test]
    fn empty_c_keeps_only_top_block() {
        let spec = RelationSpec::new((vec![], vec![]), "1b 1; 2b 2".parse().unwrap(), 2, vec![], 4).unwrap();
        let rhs = relation_rhs(&spec).unwrap();
        assert!(rhs.blocks[0].is_empty());
        assert_eq!(rhs.blocks[1].len(), 1);
    }

    #[test]
    fn bad_c_is_rejected() {
        let t: Tableau = "1b 1; 2b 2".parse().unwrap();
        assert!(RelationSpec::new((vec![], vec![]), t, 2, vec![l("3"), l("4")], 8).is_err());
    }
}
