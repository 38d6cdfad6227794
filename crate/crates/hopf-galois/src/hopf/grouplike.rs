//! Group-like elements as characters of the dual algebra.
//!
//! `g = Σ g_k e_k` is group-like iff `f_k ↦ g_k` is an algebra map `C* → k`.
//! Characters are found by fixing the values of the dual basis one at a time:
//! each value is a root of the minimal polynomial of `f_b` modulo the ideal
//! built so far, and a branch dies when that ideal becomes everything.

use super::{AlgebraStr, CoalgebraStr};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{Mat, QuotientSpace, Subspace};
use crate::poly::roots_in_field;
use crate::scalar::Scalar;

const MAX_DIM: usize = 256;

pub fn is_group_like(c: &CoalgebraStr, g: &[Scalar]) -> bool {
    let x = sparse::from_dense(g);
    c.eps(&x).is_one() && c.delta(&x) == sparse::tensor(&x, &x, c.dim)
}

fn dual_algebra(c: &CoalgebraStr) -> AlgebraStr {
    let n = c.dim;
    let mut mult: Vec<Acc> = (0..n * n).map(|_| Acc::new()).collect();
    for (k, d) in c.comult.iter().enumerate() {
        for (p, x) in d {
            mult[*p].add(k, x.clone());
        }
    }
    AlgebraStr {
        field: c.field,
        dim: n,
        mult: mult.into_iter().map(Acc::finish).collect(),
        unit: sparse::from_dense(&c.counit),
    }
}

/// Monic minimal polynomial of `x` in `D/I`, ascending coefficients.
fn min_poly(d: &AlgebraStr, q: &QuotientSpace, x: &SVec) -> Vec<Scalar> {
    let f = d.field;
    let mut power = d.unit.clone();
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    loop {
        let y = q.project(&sparse::to_dense(&power, d.dim, f));
        if !images.is_empty() {
            let m = Mat::from_rows(f, images.clone()).unwrap().transpose();
            if let Some(c) = m.solve(&y) {
                let mut out: Vec<Scalar> = c.iter().map(|v| -v).collect();
                out.push(f.one());
                return out;
            }
        }
        images.push(y);
        power = d.mul(&power, x);
    }
}

fn search(d: &AlgebraStr, ideal: Subspace, b: usize, out: &mut Vec<Vec<Scalar>>) -> Result<()> {
    let n = d.dim;
    let f = d.field;
    if ideal.dim() == n {
        return Ok(());
    }
    if b == n {
        if ideal.dim() != n - 1 {
            return Err(Error::Internal(
                "character branch did not reach codimension one".into(),
            ));
        }
        let q = QuotientSpace::new(ideal);
        let one = q.project(&d.unit_dense());
        let k = one.iter().position(|v| !v.is_zero()).unwrap();
        let g = (0..n)
            .map(|i| {
                let y = q.project(&sparse::to_dense(&sparse::unit(i, f), n, f));
                y[k].div(&one[k]).unwrap()
            })
            .collect();
        out.push(g);
        return Ok(());
    }
    let q = QuotientSpace::new(ideal.clone());
    let x = sparse::unit(b, f);
    let mp = min_poly(d, &q, &x);
    for lambda in roots_in_field(&mp)? {
        let shifted = sparse::axpy(&x, &-&lambda, &d.unit);
        let mut gens = ideal.sparse_vectors();
        gens.push(shifted);
        let next = d.generated_ideal(&gens, true, true);
        search(d, next, b + 1, out)?;
    }
    Ok(())
}

/// All group-like elements of `c`, in the order of the character search.
pub fn find_group_likes(c: &CoalgebraStr) -> Result<Vec<Vec<Scalar>>> {
    if c.dim > MAX_DIM {
        return Err(Error::SolverScope(format!(
            "dimension {} exceeds {MAX_DIM}",
            c.dim
        )));
    }
    let d = dual_algebra(c);
    let mut out = Vec::new();
    search(&d, Subspace::zero(c.field, c.dim), 0, &mut out)?;
    for g in &out {
        if !is_group_like(c, g) {
            return Err(Error::Internal(
                "character does not give a group-like element".into(),
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{dual_hopf, tests::kz2};
    use crate::scalar::Field;

    #[test]
    fn group_likes_of_kz2() {
        let h = kz2();
        let g = find_group_likes(h.coalg()).unwrap();
        let f = Field::Q;
        assert_eq!(g.len(), 2);
        assert!(g.contains(&vec![f.one(), f.zero()]));
        assert!(g.contains(&vec![f.zero(), f.one()]));
    }

    #[test]
    fn group_likes_of_dual_kz2_are_characters() {
        let d = dual_hopf(&kz2()).unwrap();
        let g = find_group_likes(d.coalg()).unwrap();
        let f = Field::Q;
        assert_eq!(g.len(), 2);
        assert!(g.contains(&vec![f.one(), f.one()]));
        assert!(g.contains(&vec![f.one(), f.int(-1)]));
    }
}
