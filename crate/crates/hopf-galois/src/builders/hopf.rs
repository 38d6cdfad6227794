use super::GroupTable;
use crate::error::{Error, Result};
use crate::hopf::{AlgebraStr, CoalgebraStr, HopfAlgebra};
use crate::linalg::sparse::{self, SVec};
use crate::linalg::Mat;
use crate::scalar::Field;

/// `k[G]` on the group basis: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable, field: Field) -> HopfAlgebra {
    let n = g.order;
    let alg = AlgebraStr::from_fn(field, n, sparse::unit(g.identity, field), |a, b| {
        sparse::unit(g.mul(a, b), field)
    });
    let comult = (0..n).map(|a| sparse::unit(a * n + a, field)).collect();
    let coalg = CoalgebraStr::new(field, n, comult, vec![field.one(); n]).unwrap();
    let antipode = Mat::from_fn(field, n, n, |i, j| {
        if i == g.inv(j) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(alg, coalg, antipode).unwrap()
}

/// `k[G]*` on the basis `δ_g`.
pub fn dual_group_algebra(g: &GroupTable, field: Field) -> HopfAlgebra {
    let n = g.order;
    let alg = AlgebraStr::from_fn(
        field,
        n,
        (0..n).map(|i| (i, field.one())).collect(),
        |a, b| {
            if a == b {
                sparse::unit(a, field)
            } else {
                Vec::new()
            }
        },
    );
    let comult = (0..n)
        .map(|x| {
            let mut terms: Vec<usize> = (0..n).map(|h| h * n + g.mul(g.inv(h), x)).collect();
            terms.sort_unstable();
            terms.into_iter().map(|p| (p, field.one())).collect()
        })
        .collect();
    let counit = (0..n)
        .map(|x| {
            if x == g.identity {
                field.one()
            } else {
                field.zero()
            }
        })
        .collect();
    let coalg = CoalgebraStr::new(field, n, comult, counit).unwrap();
    let antipode = Mat::from_fn(field, n, n, |i, j| {
        if i == g.inv(j) {
            field.one()
        } else {
            field.zero()
        }
    });
    HopfAlgebra::new(alg, coalg, antipode).unwrap()
}

/// Basis labels of the circle Hopf algebra, in index order.
pub const CIRCLE_BASIS: [&str; 8] = ["1", "t", "c", "s", "c²-s²", "tc", "ts", "t(c²-s²)"];

/// Indices into [`CIRCLE_BASIS`].
pub mod circle {
    pub const ONE: usize = 0;
    pub const T: usize = 1;
    pub const C: usize = 2;
    pub const S: usize = 3;
    pub const D: usize = 4;
    pub const TC: usize = 5;
    pub const TS: usize = 6;
    pub const TD: usize = 7;
}

// Basis element `t^a x` with `x ∈ {1, c, s, d}` coded as 0..4.
fn split(i: usize) -> (usize, usize) {
    match i {
        0 => (0, 0),
        1 => (1, 0),
        2..=4 => (0, i - 1),
        _ => (1, i - 4),
    }
}

fn join(a: usize, x: usize) -> usize {
    match (a, x) {
        (0, 0) => 0,
        (1, 0) => 1,
        (0, x) => x + 1,
        (_, x) => x + 4,
    }
}

/// Products of `{1, c, s, d}` as `(coefficient numerator, denominator, x)` terms.
fn core_product(x: usize, y: usize) -> Vec<(i64, i64, usize)> {
    const ONE: usize = 0;
    const C: usize = 1;
    const S: usize = 2;
    const D: usize = 3;
    match (x, y) {
        (ONE, y) => vec![(1, 1, y)],
        (x, ONE) => vec![(1, 1, x)],
        (C, C) => vec![(1, 2, ONE), (1, 2, D)],
        (S, S) => vec![(1, 2, ONE), (-1, 2, D)],
        (C, S) | (S, C) => vec![],
        (C, D) | (D, C) => vec![(1, 1, C)],
        (S, D) | (D, S) => vec![(-1, 1, S)],
        _ => vec![(1, 1, ONE)],
    }
}

/// The circle Hopf algebra over `Q` or `Q(i)` on the basis `1, t, c, s, c²−s², tc, ts, t(c²−s²)`.
pub fn circle_hopf(field: Field) -> Result<HopfAlgebra> {
    if !matches!(field, Field::Q | Field::Qi) {
        return Err(Error::Input(format!(
            "the circle Hopf algebra is built over Q or Qi, not {}",
            field.label()
        )));
    }
    let f = field;
    let alg = AlgebraStr::from_fn(f, 8, sparse::unit(0, f), |i, j| {
        let ((a, x), (b, y)) = (split(i), split(j));
        // (t^a x)(t^b y) = t^{a+b} σ^b(x) y with σ(s) = −s
        let sign = if b == 1 && x == 2 { -1 } else { 1 };
        let mut out: SVec = core_product(x, y)
            .into_iter()
            .map(|(n, d, z)| (join((a + b) % 2, z), f.ratio(sign * n, d)))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    });
    let n = 8;
    let pair = |i: usize, j: usize| i * n + j;
    let comult: Vec<SVec> = (0..8)
        .map(|i| {
            let (a, x) = split(i);
            let (c, s) = (join(a, 1), join(a, 2));
            let mut v: SVec = match x {
                1 => vec![(pair(c, c), f.one()), (pair(s, s), f.int(-1))],
                2 => vec![(pair(s, c), f.one()), (pair(c, s), f.one())],
                _ => vec![(pair(i, i), f.one())],
            };
            v.sort_by_key(|(k, _)| *k);
            v
        })
        .collect();
    let counit = (0..8)
        .map(|i| if split(i).1 == 2 { f.zero() } else { f.one() })
        .collect();
    let coalg = CoalgebraStr::new(f, 8, comult, counit)?;
    let antipode = Mat::from_fn(f, 8, 8, |r, c| match (r == c, c) {
        (true, 3) => f.int(-1),
        (true, _) => f.one(),
        _ => f.zero(),
    });
    HopfAlgebra::new(alg, coalg, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{dual_hopf, find_group_likes, opposite, verify_structure, Structure};

    fn ok(h: &HopfAlgebra) -> bool {
        verify_structure(Structure::Hopf(h)).unwrap().ok
    }

    #[test]
    fn group_algebras_verify() {
        for g in [
            GroupTable::cyclic(2),
            GroupTable::klein(),
            GroupTable::s3(),
            GroupTable::d8(),
        ] {
            let h = group_algebra(&g, Field::Q);
            assert!(ok(&h));
            assert!(ok(&dual_group_algebra(&g, Field::Q)));
            assert_eq!(dual_group_algebra(&g, Field::Q), dual_hopf(&h).unwrap());
        }
    }

    #[test]
    fn s3_antipode_is_inverse_permutation() {
        let g = GroupTable::s3();
        let h = group_algebra(&g, Field::Q);
        for x in 0..6 {
            assert_eq!(
                h.s(&sparse::unit(x, Field::Q)),
                sparse::unit(g.inv(x), Field::Q)
            );
        }
        let op = opposite(&h).unwrap();
        assert!(ok(&op));
        assert_eq!(opposite(&op).unwrap(), h);
        assert_eq!(dual_hopf(&dual_hopf(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn dual_group_algebra_unit_and_counit() {
        let g = GroupTable::cyclic(2);
        let d = dual_group_algebra(&g, Field::Q);
        assert_eq!(d.unit(), &vec![(0, Field::Q.one()), (1, Field::Q.one())]);
        assert_eq!(d.coalg().counit, vec![Field::Q.one(), Field::Q.zero()]);
    }

    #[test]
    fn circle_verifies_with_dual() {
        for f in [Field::Q, Field::Qi] {
            let h = circle_hopf(f).unwrap();
            assert!(ok(&h));
            assert!(ok(&dual_hopf(&h).unwrap()));
            assert!(!h.alg().is_commutative());
        }
        assert!(circle_hopf(Field::Fp(5)).is_err());
    }

    #[test]
    fn circle_relations() {
        let f = Field::Q;
        let h = circle_hopf(f).unwrap();
        let e = |i| sparse::unit(i, f);
        let c2 = h.mul(&e(circle::C), &e(circle::C));
        let s2 = h.mul(&e(circle::S), &e(circle::S));
        let sum = sparse::axpy(&c2, &f.one(), &s2);
        assert_eq!(sum, e(circle::ONE));
        assert!(h.mul(&e(circle::C), &e(circle::S)).is_empty());
        let ts = h.mul(&e(circle::T), &e(circle::S));
        let st = h.mul(&e(circle::S), &e(circle::T));
        assert_eq!(ts, sparse::scale(&st, &f.int(-1)));
        assert_eq!(h.mul(&e(circle::T), &e(circle::T)), e(circle::ONE));
    }

    #[test]
    fn circle_group_likes() {
        let q = find_group_likes(circle_hopf(Field::Q).unwrap().coalg()).unwrap();
        assert_eq!(q.len(), 4);
        let h = circle_hopf(Field::Qi).unwrap();
        let g = find_group_likes(h.coalg()).unwrap();
        assert_eq!(g.len(), 8);
        let i = Field::Qi.i().unwrap();
        // u = c − i s
        let mut u = vec![Field::Qi.zero(); 8];
        u[circle::C] = Field::Qi.one();
        u[circle::S] = -&i;
        assert!(g.contains(&u));
        let us = sparse::from_dense(&u);
        let u2 = h.mul(&us, &us);
        let u4 = h.mul(&u2, &u2);
        assert_ne!(u2, sparse::unit(0, Field::Qi));
        assert_eq!(u4, sparse::unit(0, Field::Qi));
        let t = sparse::unit(circle::T, Field::Qi);
        let u3 = h.mul(&u2, &us);
        assert_eq!(h.mul(&h.mul(&t, &us), &t), u3);
    }
}
