use std::fmt;

use super::sparse::{from_dense, SVec};
use super::{Echelon, Mat};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A subspace of `k^n` in canonical RREF form, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub(crate) fn from_rref_unchecked(basis: Mat, pivots: Vec<usize>) -> Subspace {
        Subspace { basis, pivots }
    }

    /// Row space of `m`.
    pub fn from_mat(m: &Mat) -> Subspace {
        let r = m.rref();
        Subspace {
            basis: r.mat,
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vs: &[Vec<Scalar>]) -> Subspace {
        Subspace::from_mat(&Mat::from_row_vecs(field, ambient, vs.to_vec()))
    }

    pub fn span_sparse(field: Field, ambient: usize, vs: &[SVec]) -> Subspace {
        let mut e = Echelon::new(field, ambient);
        e.extend(vs);
        e.to_subspace()
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            basis: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            basis: Mat::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: Field, ambient: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<SVec> = idx.iter().map(|&i| vec![(i, field.one())]).collect();
        Subspace::span_sparse(field, ambient, &vs)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn basis(&self) -> &Mat {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn sparse_vectors(&self) -> Vec<SVec> {
        (0..self.dim())
            .map(|i| from_dense(self.basis.row(i)))
            .collect()
    }

    fn check(&self, o: &Subspace) -> Result<()> {
        if self.ambient() != o.ambient() {
            return Err(Error::Dimension(format!(
                "ambient {} vs {}",
                self.ambient(),
                o.ambient()
            )));
        }
        if self.field() != o.field() {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field(),
                o.field()
            )));
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    rest[j] = &rest[j] - &(ci * b);
                }
            }
        }
        rest.iter().all(Scalar::is_zero).then_some(c)
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_sparse(&self, v: &SVec) -> bool {
        let mut dense = vec![self.field().zero(); self.ambient()];
        for (i, x) in v {
            dense[*i] = x.clone();
        }
        self.contains_vec(&dense)
    }

    /// `o ⊆ self`.
    pub fn contains(&self, o: &Subspace) -> bool {
        self.check(o).is_ok() && (0..o.dim()).all(|i| self.contains_vec(o.basis.row(i)))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace> {
        self.check(o)?;
        Ok(Subspace::from_mat(&self.basis.vstack(&o.basis)))
    }

    /// Intersection by the kernel method: solve `Σ cᵢaᵢ = Σ dⱼbⱼ`.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace> {
        self.check(o)?;
        let (f, n, da) = (self.field(), self.ambient(), self.dim());
        if da == 0 || o.dim() == 0 {
            return Ok(Subspace::zero(f, n));
        }
        let stacked = self.basis.vstack(&o.basis.scale(&f.int(-1))).transpose();
        let ker = stacked.kernel();
        let vs: Vec<Vec<Scalar>> = (0..ker.rows())
            .map(|r| {
                let c = &ker.row(r)[..da];
                (0..n)
                    .map(|j| {
                        let mut s = f.zero();
                        for (i, ci) in c.iter().enumerate() {
                            if !ci.is_zero() {
                                s = &s + &(ci * self.basis.get(i, j));
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(Subspace::span(f, n, &vs))
    }

    /// `{f : f|_W = 0}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        Subspace::from_mat(&self.basis.kernel())
    }

    /// Image under the linear map `m` (shape out × ambient).
    pub fn image(&self, m: &Mat) -> Subspace {
        Subspace::from_mat(&self.basis.mul(&m.transpose()))
    }

    /// A vector in `self` not in `o`, if any.
    pub fn witness_outside(&self, o: &Subspace) -> Option<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .find(|v| !o.contains_vec(v))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} in k^{}", self.dim(), self.ambient())
    }
}

/// `k^n / kernel`, with the section on the non-pivot coordinates of the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    kernel: Subspace,
    free: Vec<usize>,
    section: Mat,
    projection: Mat,
}

impl QuotientSpace {
    pub fn new(kernel: Subspace) -> QuotientSpace {
        let (f, n) = (kernel.field(), kernel.ambient());
        let free: Vec<usize> = (0..n).filter(|c| !kernel.pivots.contains(c)).collect();
        let q = free.len();
        let mut section = Mat::zeros(f, n, q);
        let mut projection = Mat::zeros(f, q, n);
        for (k, &c) in free.iter().enumerate() {
            section.set(c, k, f.one());
            projection.set(k, c, f.one());
        }
        for (i, &p) in kernel.pivots.iter().enumerate() {
            for (k, &c) in free.iter().enumerate() {
                projection.set(k, p, -kernel.basis.get(i, c));
            }
        }
        QuotientSpace {
            kernel,
            free,
            section,
            projection,
        }
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
    pub fn dim(&self) -> usize {
        self.free.len()
    }
    pub fn ambient(&self) -> usize {
        self.kernel.ambient()
    }
    pub fn field(&self) -> Field {
        self.kernel.field()
    }
    pub fn section(&self) -> &Mat {
        &self.section
    }
    pub fn projection(&self) -> &Mat {
        &self.projection
    }
    /// Ambient coordinates chosen as the quotient basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn project_sparse(&self, v: &SVec) -> SVec {
        let f = self.field();
        let mut out = super::sparse::Acc::new();
        for (j, x) in v {
            for k in 0..self.dim() {
                let p = self.projection.get(k, *j);
                if !p.is_zero() {
                    out.add(k, p * x);
                }
            }
        }
        let _ = f;
        out.finish()
    }

    /// Sparse columns of the projection matrix, for repeated use.
    pub fn projection_columns(&self) -> Vec<SVec> {
        (0..self.ambient())
            .map(|j| from_dense(&self.projection.col(j)))
            .collect()
    }

    pub fn lift(&self, y: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Subspace {
        Subspace::from_mat(&Mat::from_ints(Field::Q, rows))
    }

    #[test]
    fn sum_and_intersection_of_coordinate_spaces() {
        let e1 = q(&[&[1, 0, 0]]);
        let e2 = q(&[&[0, 1, 0]]);
        assert_eq!(e1.sum(&e2).unwrap(), q(&[&[1, 0, 0], &[0, 1, 0]]));
        let a = q(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = q(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), e2);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(matches!(
            q(&[&[1, 0]]).sum(&q(&[&[1, 0, 0]])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn annihilators() {
        assert_eq!(q(&[&[1, 0]]).annihilator(), q(&[&[0, 1]]));
        assert_eq!(
            Subspace::zero(Field::Q, 3).annihilator(),
            Subspace::full(Field::Q, 3)
        );
        assert_eq!(
            q(&[&[1, 1, 0], &[0, 1, 1]]).annihilator(),
            q(&[&[1, -1, 1]])
        );
    }

    #[test]
    fn quotient_by_first_axis() {
        let qs = QuotientSpace::new(q(&[&[1, 0, 0]]));
        assert_eq!(qs.dim(), 2);
        assert_eq!(qs.free_columns(), &[1, 2]);
        assert_eq!(
            qs.projection().mul(qs.section()),
            Mat::identity(Field::Q, 2)
        );
        assert_eq!(Subspace::from_mat(&qs.projection().kernel()), *qs.kernel());
    }

    #[test]
    fn quotient_projection_kills_kernel() {
        let k = q(&[&[1, 2, 0, 1], &[0, 0, 1, -1]]);
        let qs = QuotientSpace::new(k.clone());
        for v in k.vectors() {
            assert!(qs.project(&v).iter().all(Scalar::is_zero));
        }
        assert_eq!(
            qs.projection().mul(qs.section()),
            Mat::identity(Field::Q, 2)
        );
    }
}
