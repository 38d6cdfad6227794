use super::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::AlgebraStr;
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, kernel_of_columns, Echelon, Mat, SparseQuotient, Subspace};
use crate::par;
use crate::scalar::Field;
use crate::subobjects::GeneralizedQuotient;

/// `S ⊗_B A` for subalgebras `B ⊆ S ⊆ A`.
///
/// Elements of `S⊗A` are written on `ℓ_k ⊗ e_c` with index `k·dim A + c`,
/// where `ℓ_k` runs over the echelon basis of `S`.
#[derive(Clone, Debug)]
pub struct RelativeTensor {
    field: Field,
    dim_a: usize,
    alg: AlgebraStr,
    left: Vec<SVec>,
    slot: Vec<Option<usize>>,
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    /// Quotient of `S⊗A` by `ℓβ⊗a − ℓ⊗βa`.
    Materialized(SparseQuotient),
    /// `A = ⊕ B m_j`; `parts[c][j]` is the `B`-coefficient of `m_j` in `e_c`.
    Free { basis: Vec<SVec>, parts: Vec<Vec<SVec>> },
}

/// A greedy basis `m_j` with `A = ⊕ B m_j` among the standard basis vectors.
pub fn find_relative_basis(alg: &AlgebraStr, b: &Subspace) -> Option<Vec<SVec>> {
    let (n, f) = (alg.dim, alg.field);
    if b.dim() == 0 || n % b.dim() != 0 {
        return None;
    }
    let bs = b.sparse_vectors();
    let mut ech = Echelon::new(f, n);
    let mut out = Vec::new();
    for c in 0..n {
        if ech.rank() == n {
            break;
        }
        let e = sparse::unit(c, f);
        let mut next = ech.clone();
        if bs.iter().all(|beta| next.insert(&alg.mul(beta, &e))) {
            ech = next;
            out.push(e);
        }
    }
    (ech.rank() == n).then_some(out)
}

impl RelativeTensor {
    /// Uses a relative basis when one is found, otherwise the quotient presentation.
    pub fn new(alg: &AlgebraStr, left: &Subspace, b: &Subspace) -> Result<RelativeTensor> {
        match find_relative_basis(alg, b) {
            Some(m) => RelativeTensor::with_basis(alg, left, b, m),
            None => RelativeTensor::materialized(alg, left, b),
        }
    }

    fn base(alg: &AlgebraStr, left: &Subspace, b: &Subspace) -> Result<RelativeTensor> {
        let (n, f) = (alg.dim, alg.field);
        if left.ambient() != n || b.ambient() != n {
            return Err(Error::Dimension(format!("subspaces must live in A of dim {n}")));
        }
        if !left.contains(b) {
            return Err(Error::Input("B is not contained in S".into()));
        }
        let ls = left.sparse_vectors();
        for (k, l) in ls.iter().enumerate() {
            for (j, beta) in b.sparse_vectors().iter().enumerate() {
                if !left.contains_sparse(&alg.mul(l, beta)) {
                    return Err(Error::Condition { name: "S is a right B-module".into(), witness: vec![k, j] });
                }
            }
        }
        let mut slot = vec![None; n];
        for (i, &p) in left.pivots().iter().enumerate() {
            slot[p] = Some(i);
        }
        let repr = Repr::Free { basis: vec![], parts: vec![] };
        Ok(RelativeTensor { field: f, dim_a: n, alg: alg.clone(), left: ls, slot, repr })
    }

    pub fn materialized(alg: &AlgebraStr, left: &Subspace, b: &Subspace) -> Result<RelativeTensor> {
        let mut t = RelativeTensor::base(alg, left, b)?;
        let (n, s) = (alg.dim, t.left.len());
        guard(s * n)?;
        let bs = b.sparse_vectors();
        let rels: Vec<Vec<SVec>> = par::map_range(s, |k| {
            let mut out = Vec::new();
            for beta in &bs {
                let lb = t.left_coords(&alg.mul(&t.left[k], beta));
                for c in 0..n {
                    let mut acc = Acc::new();
                    for (i, x) in &lb {
                        acc.add(i * n + c, x.clone());
                    }
                    for (d, x) in alg.mul(beta, &sparse::unit(c, alg.field)) {
                        acc.add(k * n + d, -x);
                    }
                    out.push(acc.finish());
                }
            }
            out
        });
        let mut ech = Echelon::new(alg.field, s * n);
        for r in rels.iter().flatten() {
            ech.insert(r);
        }
        t.repr = Repr::Materialized(SparseQuotient::new(ech));
        Ok(t)
    }

    /// Uses `A = ⊕ B m_j`, checked by inverting `B^{#m} → A`.
    pub fn with_basis(alg: &AlgebraStr, left: &Subspace, b: &Subspace, basis: Vec<SVec>) -> Result<RelativeTensor> {
        let mut t = RelativeTensor::base(alg, left, b)?;
        let (n, f) = (alg.dim, alg.field);
        let bs = b.sparse_vectors();
        let nb = bs.len();
        if nb * basis.len() != n {
            return Err(Error::Input(format!("{} relative basis vectors over B of dim {nb} cannot span A of dim {n}", basis.len())));
        }
        let cols: Vec<SVec> = basis.iter().flat_map(|m| bs.iter().map(move |beta| alg.mul(beta, m))).collect();
        let mut map = Mat::zeros(f, n, n);
        for (col, v) in cols.iter().enumerate() {
            for (r, x) in v {
                map.set(*r, col, x.clone());
            }
        }
        let inv = map.inverse().ok_or_else(|| Error::Input("A is not free over B on the given basis".into()))?;
        let parts = (0..n)
            .map(|c| {
                (0..basis.len())
                    .map(|j| {
                        let mut acc = Acc::new();
                        for (i, beta) in bs.iter().enumerate() {
                            acc.add_scaled(inv.get(j * nb + i, c), beta);
                        }
                        acc.finish()
                    })
                    .collect()
            })
            .collect();
        t.repr = Repr::Free { basis, parts };
        Ok(t)
    }

    fn left_coords(&self, v: &SVec) -> SVec {
        v.iter().filter_map(|(p, x)| self.slot[*p].map(|i| (i, x.clone()))).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            Repr::Materialized(q) => q.dim(),
            Repr::Free { basis, .. } => self.left.len() * basis.len(),
        }
    }

    /// Dimension of `S⊗A`, the space holding representatives.
    pub fn ambient(&self) -> usize {
        self.left.len() * self.dim_a
    }

    pub fn left_basis(&self) -> &[SVec] {
        &self.left
    }

    pub fn relative_basis(&self) -> Option<&[SVec]> {
        match &self.repr {
            Repr::Free { basis, .. } => Some(basis),
            Repr::Materialized(_) => None,
        }
    }

    /// A representative in `S⊗A` of the `i`-th basis vector.
    pub fn lift(&self, i: usize) -> SVec {
        match &self.repr {
            Repr::Materialized(q) => q.lift(i),
            Repr::Free { basis, .. } => {
                let (k, j) = (i / basis.len(), i % basis.len());
                basis[j].iter().map(|(c, x)| (k * self.dim_a + c, x.clone())).collect()
            }
        }
    }

    /// Class of `x ∈ S⊗A`.
    pub fn project(&self, x: &SVec) -> SVec {
        match &self.repr {
            Repr::Materialized(q) => q.project(x),
            Repr::Free { basis, parts } => {
                let nm = basis.len();
                let mut acc = Acc::new();
                for (p, x) in x {
                    let (k, c) = (p / self.dim_a, p % self.dim_a);
                    for (j, part) in parts[c].iter().enumerate() {
                        if part.is_empty() {
                            continue;
                        }
                        for (i, y) in self.left_coords(&self.alg.mul(&self.left[k], part)) {
                            acc.add(i * nm + j, x * &y);
                        }
                    }
                }
                acc.finish()
            }
        }
    }
}

/// `A □_Q H = ker((id⊗π)δ⊗id − id⊗(π⊗id)Δ)` inside `A⊗H`.
pub fn cotensor(a: &ComoduleAlgebra, q: &GeneralizedQuotient) -> Result<Subspace> {
    let (n, m, qd) = (a.dim(), a.hopf.dim(), q.dim());
    guard(n * m)?;
    let pi = q.pi_columns();
    let cols: Vec<SVec> = par::map_range(n * m, |xh| {
        let (x, h) = (xh / m, xh % m);
        let mut acc = Acc::new();
        for (p, c) in &a.coaction[x] {
            for (y, d) in &pi[p % m] {
                acc.add(((p / m) * qd + y) * m + h, c * d);
            }
        }
        for (r, c) in &a.hopf.coalg().comult[h] {
            for (y, d) in &pi[r / m] {
                acc.add((x * qd + y) * m + r % m, -(c * d));
            }
        }
        acc.finish()
    });
    Ok(kernel_of_columns(a.field(), n * qd * m, &cols))
}
