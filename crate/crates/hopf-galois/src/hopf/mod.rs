//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure constants.

mod convolution;
mod dual;
mod grouplike;
mod verify;

pub use convolution::{Convolution, LinMap};
pub use dual::{dual_hopf, opposite};
pub use grouplike::{find_group_likes, is_group_like};
pub use verify::{verify_structure, Structure, StructureReport, Violation};

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{Echelon, Mat, SparseMap, Subspace};
use crate::scalar::{Field, Scalar};

/// Multiplication table `mult[i·dim + j] = e_i·e_j` and unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraStr {
    pub field: Field,
    pub dim: usize,
    pub mult: Vec<SVec>,
    pub unit: SVec,
}

/// Comultiplication `comult[i] = Δ(e_i)` in `k^{dim²}` and counit row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraStr {
    pub field: Field,
    pub dim: usize,
    pub comult: Vec<SVec>,
    pub counit: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub alg: AlgebraStr,
    pub coalg: CoalgebraStr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bi: Bialgebra,
    pub antipode: Mat,
}

impl AlgebraStr {
    pub fn new(field: Field, dim: usize, mult: Vec<SVec>, unit: SVec) -> Result<AlgebraStr> {
        if mult.len() != dim * dim {
            return Err(Error::Dimension(format!(
                "mult has {} entries, expected {}",
                mult.len(),
                dim * dim
            )));
        }
        let bad = mult
            .iter()
            .chain(std::iter::once(&unit))
            .flatten()
            .find(|(i, x)| *i >= dim || x.field() != field);
        if let Some((i, x)) = bad {
            return Err(Error::Input(format!(
                "structure constant ({i}, {x}) out of range or field"
            )));
        }
        Ok(AlgebraStr {
            field,
            dim,
            mult,
            unit,
        })
    }

    /// Builds the multiplication table from a product function on basis indices.
    pub fn from_fn(
        field: Field,
        dim: usize,
        unit: SVec,
        f: impl Fn(usize, usize) -> SVec,
    ) -> AlgebraStr {
        let mult = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        AlgebraStr {
            field,
            dim,
            mult,
            unit,
        }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(&(a * b), self.mul_basis(*i, *j));
            }
        }
        acc.finish()
    }

    pub fn mul_dense(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        sparse::to_dense(
            &self.mul(&sparse::from_dense(x), &sparse::from_dense(y)),
            self.dim,
            self.field,
        )
    }

    pub fn unit_dense(&self) -> Vec<Scalar> {
        sparse::to_dense(&self.unit, self.dim, self.field)
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &SVec) -> Mat {
        let cols = (0..self.dim)
            .map(|j| self.mul(x, &sparse::unit(j, self.field)))
            .collect();
        SparseMap::new(self.field, self.dim, cols).to_dense()
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &SVec) -> Mat {
        let cols = (0..self.dim)
            .map(|j| self.mul(&sparse::unit(j, self.field), x))
            .collect();
        SparseMap::new(self.field, self.dim, cols).to_dense()
    }

    /// Product in `A⊗A` (componentwise).
    pub fn tensor_mul(&self, x: &SVec, y: &SVec) -> SVec {
        let n = self.dim;
        let mut acc = Acc::new();
        for (p, a) in x {
            for (q, b) in y {
                let l = self.mul_basis(p / n, q / n);
                let r = self.mul_basis(p % n, q % n);
                if l.is_empty() || r.is_empty() {
                    continue;
                }
                acc.add_scaled(&(a * b), &sparse::tensor(l, r, n));
            }
        }
        acc.finish()
    }

    /// Smallest unital subalgebra containing `gens`.
    pub fn generated_subalgebra(&self, gens: &[SVec]) -> Subspace {
        let mut ech = Echelon::new(self.field, self.dim);
        let mut basis: Vec<SVec> = Vec::new();
        let mut queue: Vec<SVec> = std::iter::once(self.unit.clone())
            .chain(gens.iter().cloned())
            .collect();
        while let Some(v) = queue.pop() {
            if !ech.insert(&v) {
                continue;
            }
            for w in basis.iter().chain(std::iter::once(&v)) {
                queue.push(self.mul(&v, w));
                queue.push(self.mul(w, &v));
            }
            basis.push(v);
        }
        ech.to_subspace()
    }

    /// Smallest subspace containing `gens` and closed under the requested multiplications by `A`.
    pub fn generated_ideal(&self, gens: &[SVec], left: bool, right: bool) -> Subspace {
        let mut ech = Echelon::new(self.field, self.dim);
        let mut queue: Vec<SVec> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if !ech.insert(&v) {
                continue;
            }
            for i in 0..self.dim {
                let e = sparse::unit(i, self.field);
                if left {
                    queue.push(self.mul(&e, &v));
                }
                if right {
                    queue.push(self.mul(&v, &e));
                }
            }
        }
        ech.to_subspace()
    }

    /// Whether `s` contains 1 and is closed under products of basis vectors.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let vs = s.sparse_vectors();
        s.contains_sparse(&self.unit)
            && vs
                .iter()
                .all(|x| vs.iter().all(|y| s.contains_sparse(&self.mul(x, y))))
    }

    /// Multiplication with the factors swapped.
    pub fn opposite(&self) -> AlgebraStr {
        AlgebraStr::from_fn(self.field, self.dim, self.unit.clone(), |i, j| {
            self.mul_basis(j, i).clone()
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Tensor product algebra `A⊗B`, basis index `i·dim B + j`.
    pub fn tensor(&self, o: &AlgebraStr) -> AlgebraStr {
        let m = o.dim;
        AlgebraStr::from_fn(
            self.field,
            self.dim * m,
            sparse::tensor(&self.unit, &o.unit, m),
            |p, q| sparse::tensor(self.mul_basis(p / m, q / m), o.mul_basis(p % m, q % m), m),
        )
    }
}

impl CoalgebraStr {
    pub fn new(
        field: Field,
        dim: usize,
        comult: Vec<SVec>,
        counit: Vec<Scalar>,
    ) -> Result<CoalgebraStr> {
        if comult.len() != dim || counit.len() != dim {
            return Err(Error::Dimension(format!(
                "coalgebra tensors do not match dim {dim}"
            )));
        }
        if comult
            .iter()
            .flatten()
            .any(|(i, x)| *i >= dim * dim || x.field() != field)
            || counit.iter().any(|x| x.field() != field)
        {
            return Err(Error::Input(
                "comultiplication constant out of range or field".into(),
            ));
        }
        Ok(CoalgebraStr {
            field,
            dim,
            comult,
            counit,
        })
    }

    pub fn delta(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (i, a) in x {
            acc.add_scaled(a, &self.comult[*i]);
        }
        acc.finish()
    }

    pub fn eps(&self, x: &SVec) -> Scalar {
        let mut s = self.field.zero();
        for (i, a) in x {
            s = &s + &(a * &self.counit[*i]);
        }
        s
    }

    /// `(Δ⊗id)Δ(e_i)` in `k^{dim³}`.
    pub fn delta2(&self, i: usize) -> SVec {
        let n = self.dim;
        let mut acc = Acc::new();
        for (p, c) in &self.comult[i] {
            for (q, d) in &self.comult[p / n] {
                acc.add(q * n + p % n, c * d);
            }
        }
        acc.finish()
    }

    /// `C⊗D` with basis index `i·dim D + j` and `Δ(c⊗d) = c₁⊗d₁⊗c₂⊗d₂`.
    pub fn tensor(&self, o: &CoalgebraStr) -> CoalgebraStr {
        let (n, m) = (self.dim, o.dim);
        let nm = n * m;
        let mut comult = Vec::with_capacity(nm);
        let mut counit = Vec::with_capacity(nm);
        for i in 0..n {
            for j in 0..m {
                let mut acc = Acc::new();
                for (p, x) in &self.comult[i] {
                    for (q, y) in &o.comult[j] {
                        acc.add(((p / n) * m + q / m) * nm + (p % n) * m + q % m, x * y);
                    }
                }
                comult.push(acc.finish());
                counit.push(&self.counit[i] * &o.counit[j]);
            }
        }
        CoalgebraStr {
            field: self.field,
            dim: nm,
            comult,
            counit,
        }
    }

    /// Smallest `W` with `Δ(x) ∈ V⊗W`: spans of the right tensor factors.
    pub fn right_coefficients(&self, x: &SVec) -> Vec<SVec> {
        coefficient_rows(&self.delta(x), self.dim, self.dim, false)
    }

    /// Smallest `W` with `Δ(x) ∈ W⊗V`.
    pub fn left_coefficients(&self, x: &SVec) -> Vec<SVec> {
        coefficient_rows(&self.delta(x), self.dim, self.dim, true)
    }
}

/// Splits `t ∈ k^a ⊗ k^b` into slices: rows `t[i][·]` (right factors) or columns.
pub fn coefficient_rows(t: &SVec, a: usize, b: usize, left: bool) -> Vec<SVec> {
    let mut rows: Vec<Acc> = (0..if left { b } else { a }).map(|_| Acc::new()).collect();
    for (p, c) in t {
        let (i, j) = (p / b, p % b);
        if left {
            rows[j].add(i, c.clone());
        } else {
            rows[i].add(j, c.clone());
        }
    }
    rows.into_iter()
        .map(Acc::finish)
        .filter(|r| !r.is_empty())
        .collect()
}

impl Bialgebra {
    pub fn new(alg: AlgebraStr, coalg: CoalgebraStr) -> Result<Bialgebra> {
        if alg.dim != coalg.dim || alg.field != coalg.field {
            return Err(Error::Dimension(format!(
                "algebra part has dim {} over {}, coalgebra part dim {} over {}",
                alg.dim, alg.field, coalg.dim, coalg.field
            )));
        }
        Ok(Bialgebra { alg, coalg })
    }
}

impl HopfAlgebra {
    pub fn new(alg: AlgebraStr, coalg: CoalgebraStr, antipode: Mat) -> Result<HopfAlgebra> {
        let bi = Bialgebra::new(alg, coalg)?;
        if antipode.rows() != bi.alg.dim || antipode.cols() != bi.alg.dim {
            return Err(Error::Dimension("antipode shape".into()));
        }
        Ok(HopfAlgebra { bi, antipode })
    }

    pub fn dim(&self) -> usize {
        self.bi.alg.dim
    }
    pub fn field(&self) -> Field {
        self.bi.alg.field
    }
    pub fn alg(&self) -> &AlgebraStr {
        &self.bi.alg
    }
    pub fn coalg(&self) -> &CoalgebraStr {
        &self.bi.coalg
    }
    pub fn unit(&self) -> &SVec {
        &self.bi.alg.unit
    }
    pub fn mul(&self, x: &SVec, y: &SVec) -> SVec {
        self.bi.alg.mul(x, y)
    }
    pub fn delta(&self, x: &SVec) -> SVec {
        self.bi.coalg.delta(x)
    }
    pub fn eps(&self, x: &SVec) -> Scalar {
        self.bi.coalg.eps(x)
    }

    pub fn s(&self, x: &SVec) -> SVec {
        sparse::from_dense(
            &self
                .antipode
                .apply(&sparse::to_dense(x, self.dim(), self.field())),
        )
    }

    pub fn antipode_inverse(&self) -> Result<Mat> {
        self.antipode.inverse().ok_or(Error::AntipodeNotInvertible)
    }

    /// The adjoint action `h·k = h₁ k S(h₂)`, as `action[h·dim + k]`.
    pub fn adjoint_action(&self) -> Vec<SVec> {
        let n = self.dim();
        let f = self.field();
        let mut out = Vec::with_capacity(n * n);
        for h in 0..n {
            for k in 0..n {
                let mut acc = Acc::new();
                for (p, c) in &self.coalg().comult[h] {
                    let left = self.mul(&sparse::unit(p / n, f), &sparse::unit(k, f));
                    acc.add_scaled(c, &self.mul(&left, &self.s(&sparse::unit(p % n, f))));
                }
                out.push(acc.finish());
            }
        }
        out
    }
}
