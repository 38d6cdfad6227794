use super::{coinvariants, mul_tensor, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{verify_structure, AlgebraStr, CoalgebraStr, HopfAlgebra, Structure};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{kernel_of_columns, Mat};
use crate::scalar::Scalar;

/// Largest `dim A` accepted by [`ell_construction`].
pub const ELL_DIM_CAP: usize = 16;

/// `L(A,H) = (A⊗A^op)^{co H}` with its basis inside `A⊗A`.
#[derive(Clone, Debug)]
pub struct Ell {
    pub hopf: HopfAlgebra,
    pub basis: Vec<SVec>,
    /// `h[1]h[2] = ε(h)1` on every basis vector of `H`.
    pub translation_identity: bool,
}

/// `τ(e_h) = can⁻¹(1⊗e_h) = e_h[1] ⊗ e_h[2]` in `A⊗A`, for `A^{co H} = k`.
pub fn translation_map(a: &ComoduleAlgebra) -> Result<Vec<SVec>> {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    if n > ELL_DIM_CAP {
        return Err(Error::Guard { needed: n, cap: ELL_DIM_CAP });
    }
    if coinvariants(a, None)?.dim() != 1 {
        return Err(Error::Precondition("coinvariants are not the ground field".into()));
    }
    let mut can = Mat::zeros(f, n * m, n * n);
    for x in 0..n {
        for y in 0..n {
            for (r, d) in &a.coaction[y] {
                for (i, z) in a.alg.mul_basis(x, r / m) {
                    let row = i * m + r % m;
                    let cur = can.get(row, x * n + y).clone();
                    can.set(row, x * n + y, &cur + &(d * z));
                }
            }
        }
    }
    let inv = can
        .inverse()
        .ok_or_else(|| Error::Precondition("A is not H-Galois over k".into()))?;
    Ok((0..m)
        .map(|h| {
            let rhs = sparse::to_dense(&sparse::tensor(&a.alg.unit, &sparse::unit(h, f), m), n * m, f);
            sparse::from_dense(&inv.apply(&rhs))
        })
        .collect())
}

/// Coordinates of `v` on echelon rows with the given pivots, checked by reconstruction.
fn coords(basis: &[SVec], pivots: &[usize], v: &SVec) -> Result<SVec> {
    let c: SVec = pivots
        .iter()
        .enumerate()
        .filter_map(|(i, p)| sparse::get(v, *p).map(|x| (i, x.clone())))
        .collect();
    let mut acc = Acc::new();
    for (i, x) in &c {
        acc.add_scaled(x, &basis[*i]);
    }
    if acc.finish() != *v {
        return Err(Error::Internal("vector leaves L(A,H)".into()));
    }
    Ok(c)
}

/// Coordinates of `v ∈ L⊗L`.
fn coords2(basis: &[SVec], pivots: &[usize], amb: usize, v: &SVec) -> Result<SVec> {
    let d = basis.len();
    let mut c = Acc::new();
    for (i, p) in pivots.iter().enumerate() {
        for (j, q) in pivots.iter().enumerate() {
            if let Some(x) = sparse::get(v, p * amb + q) {
                c.add(i * d + j, x.clone());
            }
        }
    }
    let c = c.finish();
    let mut acc = Acc::new();
    for (ij, x) in &c {
        acc.add_scaled(x, &sparse::tensor(&basis[ij / d], &basis[ij % d], amb));
    }
    if acc.finish() != *v {
        return Err(Error::Internal("coproduct leaves L(A,H)⊗L(A,H)".into()));
    }
    Ok(c)
}

/// `c` with `x = c·1_A`.
fn scalar_of(a: &AlgebraStr, x: &SVec) -> Result<Scalar> {
    let (p, u) = &a.unit[0];
    let c = sparse::get(x, *p).cloned().unwrap_or_else(|| a.field.zero());
    let c = c.div(u).ok_or_else(|| Error::Internal("unit has a zero pivot".into()))?;
    if sparse::scale(&a.unit, &c) != *x {
        return Err(Error::Internal("counit value is not a scalar".into()));
    }
    Ok(c)
}

/// Builds `L(A,H)` with `(x⊗y)(x'⊗y') = xx'⊗y'y`, `Δ(x⊗y) = x₀⊗τ(x₁)⊗y`,
/// `ε(x⊗y) = xy` and `S(x⊗y) = y₀⊗y₁[1] x y₁[2]`.
pub fn ell_construction(a: &ComoduleAlgebra) -> Result<Ell> {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    let tau = translation_map(a)?;
    let nn = n * n;
    let cols: Vec<SVec> = (0..nn)
        .map(|xy| {
            let (x, y) = (xy / n, xy % n);
            let mut acc = Acc::new();
            for (r, c) in &a.coaction[x] {
                for (s, d) in &a.coaction[y] {
                    let cd = c * d;
                    for (k, z) in a.hopf.alg().mul_basis(r % m, s % m) {
                        acc.add(((r / m) * n + s / m) * m + k, &cd * z);
                    }
                }
            }
            for (k, z) in a.hopf.unit() {
                acc.add(xy * m + k, -z);
            }
            acc.finish()
        })
        .collect();
    let l = kernel_of_columns(f, nn * m, &cols);
    let basis = l.sparse_vectors();
    let piv = l.pivots().to_vec();
    let d = basis.len();

    let op = a.alg.opposite();
    let mut mult = Vec::with_capacity(d * d);
    for x in &basis {
        for y in &basis {
            mult.push(coords(&basis, &piv, &mul_tensor(&a.alg, &op, x, y))?);
        }
    }
    let unit = coords(&basis, &piv, &sparse::tensor(&a.alg.unit, &a.alg.unit, n))?;
    let alg = AlgebraStr::new(f, d, mult, unit)?;

    let mut comult = Vec::with_capacity(d);
    let mut counit = Vec::with_capacity(d);
    let mut anti = Mat::zeros(f, d, d);
    for (i, v) in basis.iter().enumerate() {
        let mut delta = Acc::new();
        let mut prod = Acc::new();
        let mut s = Acc::new();
        for (p, c) in v {
            let (x, y) = (p / n, p % n);
            for (r, e) in &a.coaction[x] {
                let ce = c * e;
                for (t, w) in &tau[r % m] {
                    delta.add((((r / m) * n + t / n) * n + t % n) * n + y, &ce * w);
                }
            }
            prod.add_scaled(c, a.alg.mul_basis(x, y));
            for (r, e) in &a.coaction[y] {
                let ce = c * e;
                for (t, w) in &tau[r % m] {
                    let mid = a.alg.mul(&a.alg.mul(&sparse::unit(t / n, f), &sparse::unit(x, f)), &sparse::unit(t % n, f));
                    s.add_scaled(&(&ce * w), &sparse::tensor(&sparse::unit(r / m, f), &mid, n));
                }
            }
        }
        comult.push(coords2(&basis, &piv, nn, &delta.finish())?);
        counit.push(scalar_of(&a.alg, &prod.finish())?);
        for (j, x) in coords(&basis, &piv, &s.finish())? {
            anti.set(j, i, x);
        }
    }
    let coalg = CoalgebraStr::new(f, d, comult, counit)?;
    let hopf = HopfAlgebra::new(alg, coalg, anti)?;
    let report = verify_structure(Structure::Hopf(&hopf))?;
    if !report.ok {
        return Err(Error::Internal(format!("L(A,H) fails verification: {:?}", report.violations)));
    }
    let translation_identity = tau.iter().enumerate().all(|(h, t)| {
        let mut acc = Acc::new();
        for (p, c) in t {
            acc.add_scaled(c, a.alg.mul_basis(p / n, p % n));
        }
        acc.finish() == sparse::scale(&a.alg.unit, &a.hopf.coalg().counit[h])
    });
    Ok(Ell { hopf, basis, translation_identity })
}

#[cfg(test)]
mod tests {
    use super::super::tests::graded;
    use super::*;
    use crate::builders::{circle_hopf, group_algebra, GroupTable};
    use crate::hopf::find_group_likes;
    use crate::scalar::Field;

    #[test]
    fn group_algebra_gives_itself() {
        let g = GroupTable::s3();
        let h = group_algebra(&g, Field::Q);
        let e = ell_construction(&ComoduleAlgebra::regular(&h)).unwrap();
        assert_eq!(e.hopf.dim(), 6);
        assert!(e.translation_identity);
        assert_eq!(find_group_likes(e.hopf.coalg()).unwrap().len(), 6);
        assert!(!e.hopf.alg().is_commutative());
        let f = Field::Q;
        for x in 0..6 {
            let gx = sparse::tensor(&sparse::unit(x, f), &sparse::unit(g.inv(x), f), 6);
            assert!(e.basis.contains(&gx));
        }
    }

    #[test]
    fn circle_gives_dimension_eight() {
        let h = circle_hopf(Field::Q).unwrap();
        let e = ell_construction(&ComoduleAlgebra::regular(&h)).unwrap();
        assert_eq!(e.hopf.dim(), 8);
        assert!(e.translation_identity);
    }

    #[test]
    fn graded_galois_object() {
        let e = ell_construction(&graded(1)).unwrap();
        assert_eq!(e.hopf.dim(), 2);
        let err = ell_construction(&graded(0)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
