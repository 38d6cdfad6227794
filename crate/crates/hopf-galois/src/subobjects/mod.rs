//! Coideal subalgebras, right ideal coideals and generalized quotients of a
//! finite-dimensional Hopf algebra, with the closures and correspondences
//! between them.

mod groups;
mod perp;
mod scan;
mod takeuchi;

pub use groups::{group_subobjects, GroupSubobjects};
pub use perp::{dual_quotient, perp_transport, Shape};
pub use scan::{enumerate_subspaces, scan_generalized, GeneralizedScan, SCAN_CAP};
pub use takeuchi::{takeuchi_check, TakeuchiReport};

use crate::error::{Error, Result};
use crate::hopf::{AlgebraStr, CoalgebraStr, HopfAlgebra};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{kernel_of_columns, Echelon, QuotientSpace, Subspace};
use crate::scalar::Scalar;

/// A unital subalgebra `K` with `Δ(K) ⊆ H⊗K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    pub space: Subspace,
}

/// A right ideal `I` with `ε(I) = 0` and `Δ(I) ⊆ I⊗H + H⊗I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightIdealCoideal {
    pub space: Subspace,
}

/// `Q = H/I` with the coalgebra and right `H`-module structure induced through
/// the lexicographic section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedQuotient {
    pub ideal: RightIdealCoideal,
    pub q: QuotientSpace,
    /// `comult[k]` in `Q⊗Q`, index `i·dim Q + j`.
    pub comult: Vec<SVec>,
    pub counit: Vec<Scalar>,
    /// `action[k·dim H + h] = q_k · e_h`.
    pub action: Vec<SVec>,
    pi: Vec<SVec>,
}

fn cond(name: &str, witness: Vec<usize>) -> Error {
    Error::Condition {
        name: name.into(),
        witness,
    }
}

fn first_bad(vs: &[SVec], mut ok: impl FnMut(&SVec) -> bool) -> Option<usize> {
    vs.iter().position(|v| !ok(v))
}

fn all_in(s: &Subspace, vs: &[SVec]) -> bool {
    vs.iter().all(|v| s.contains_sparse(v))
}

pub fn is_left_ideal(a: &AlgebraStr, s: &Subspace) -> bool {
    let vs = s.sparse_vectors();
    (0..a.dim).all(|i| {
        vs.iter()
            .all(|v| s.contains_sparse(&a.mul(&sparse::unit(i, a.field), v)))
    })
}

pub fn is_right_ideal(a: &AlgebraStr, s: &Subspace) -> bool {
    let vs = s.sparse_vectors();
    (0..a.dim).all(|i| {
        vs.iter()
            .all(|v| s.contains_sparse(&a.mul(v, &sparse::unit(i, a.field))))
    })
}

pub fn is_ideal(a: &AlgebraStr, s: &Subspace) -> bool {
    is_left_ideal(a, s) && is_right_ideal(a, s)
}

pub fn is_subalgebra(a: &AlgebraStr, s: &Subspace) -> bool {
    a.is_subalgebra(s)
}

/// `Δ(S) ⊆ C⊗S`.
pub fn is_left_coideal(c: &CoalgebraStr, s: &Subspace) -> bool {
    s.sparse_vectors()
        .iter()
        .all(|v| all_in(s, &c.right_coefficients(v)))
}

/// `Δ(S) ⊆ S⊗C`.
pub fn is_right_coideal(c: &CoalgebraStr, s: &Subspace) -> bool {
    s.sparse_vectors()
        .iter()
        .all(|v| all_in(s, &c.left_coefficients(v)))
}

pub fn is_subcoalgebra(c: &CoalgebraStr, s: &Subspace) -> bool {
    is_left_coideal(c, s) && is_right_coideal(c, s)
}

/// `ε(S) = 0` and `Δ(S) ⊆ S⊗C + C⊗S`, i.e. `(π⊗π)Δ(S) = 0` for `π: C → C/S`.
pub fn is_coideal(c: &CoalgebraStr, s: &Subspace) -> bool {
    let vs = s.sparse_vectors();
    if vs.iter().any(|v| !c.eps(v).is_zero()) {
        return false;
    }
    let q = QuotientSpace::new(s.clone());
    let pi = q.projection_columns();
    vs.iter()
        .all(|v| tensor_project(&c.delta(v), c.dim, &pi, q.dim()).is_empty())
}

/// `(π⊗π)(t)` for `t ∈ k^n⊗k^n`, given the sparse columns of `π`.
fn tensor_project(t: &SVec, n: usize, pi: &[SVec], qd: usize) -> SVec {
    let mut acc = Acc::new();
    for (p, x) in t {
        let (l, r) = (&pi[p / n], &pi[p % n]);
        if l.is_empty() || r.is_empty() {
            continue;
        }
        acc.add_scaled(x, &sparse::tensor(l, r, qd));
    }
    acc.finish()
}

/// Whether `h₁ k S(h₂) ∈ K` for all `h ∈ H`, `k ∈ K`.
pub fn is_normal(h: &HopfAlgebra, s: &Subspace) -> bool {
    let n = h.dim();
    let ad = h.adjoint_action();
    s.sparse_vectors().iter().all(|v| {
        (0..n).all(|x| {
            let mut acc = Acc::new();
            for (k, c) in v {
                acc.add_scaled(c, &ad[x * n + k]);
            }
            s.contains_sparse(&acc.finish())
        })
    })
}

impl CoidealSubalgebra {
    pub fn new(h: &HopfAlgebra, space: Subspace) -> Result<CoidealSubalgebra> {
        if space.ambient() != h.dim() {
            return Err(Error::Dimension(format!(
                "subspace of k^{} in H of dim {}",
                space.ambient(),
                h.dim()
            )));
        }
        if !space.contains_sparse(h.unit()) {
            return Err(cond("contains unit", vec![]));
        }
        let vs = space.sparse_vectors();
        for (i, x) in vs.iter().enumerate() {
            if let Some(j) = first_bad(&vs, |y| space.contains_sparse(&h.mul(x, y))) {
                return Err(cond("closed under multiplication", vec![i, j]));
            }
            if !all_in(&space, &h.coalg().right_coefficients(x)) {
                return Err(cond("left coideal", vec![i]));
            }
        }
        Ok(CoidealSubalgebra { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

impl RightIdealCoideal {
    pub fn new(h: &HopfAlgebra, space: Subspace) -> Result<RightIdealCoideal> {
        if space.ambient() != h.dim() {
            return Err(Error::Dimension(format!(
                "subspace of k^{} in H of dim {}",
                space.ambient(),
                h.dim()
            )));
        }
        let vs = space.sparse_vectors();
        if let Some(i) = first_bad(&vs, |v| h.eps(v).is_zero()) {
            return Err(cond("counit vanishes", vec![i]));
        }
        for (i, v) in vs.iter().enumerate() {
            if let Some(j) = (0..h.dim())
                .find(|&j| !space.contains_sparse(&h.mul(v, &sparse::unit(j, h.field()))))
            {
                return Err(cond("right ideal", vec![i, j]));
            }
        }
        if !is_coideal(h.coalg(), &space) {
            return Err(cond("coideal", vec![]));
        }
        Ok(RightIdealCoideal { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

impl GeneralizedQuotient {
    pub fn new(h: &HopfAlgebra, ideal: RightIdealCoideal) -> Result<GeneralizedQuotient> {
        let (n, f) = (h.dim(), h.field());
        let q = QuotientSpace::new(ideal.space.clone());
        let qd = q.dim();
        let pi = q.projection_columns();
        let free = q.free_columns().to_vec();
        let comult: Vec<SVec> = free
            .iter()
            .map(|&c| tensor_project(&h.coalg().comult[c], n, &pi, qd))
            .collect();
        let counit: Vec<Scalar> = free.iter().map(|&c| h.coalg().counit[c].clone()).collect();
        let mut action = Vec::with_capacity(qd * n);
        for &c in &free {
            for j in 0..n {
                action.push(project_with(&pi, h.alg().mul_basis(c, j)));
            }
        }
        let out = GeneralizedQuotient {
            ideal,
            q,
            comult,
            counit,
            action,
            pi,
        };
        for i in 0..n {
            let e = sparse::unit(i, f);
            if tensor_project(&h.delta(&e), n, &out.pi, qd) != out.delta(&out.pi[i]) {
                return Err(Error::Internal(format!(
                    "projection is not a coalgebra map at e_{i}"
                )));
            }
            if out.eps(&out.pi[i]) != h.coalg().counit[i] {
                return Err(Error::Internal(format!(
                    "projection does not preserve the counit at e_{i}"
                )));
            }
            for j in 0..n {
                if out.act(&out.pi[i], j) != project_with(&out.pi, h.alg().mul_basis(i, j)) {
                    return Err(Error::Internal(format!(
                        "projection is not right H-linear at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    /// `π(x)` in quotient coordinates.
    pub fn pi(&self, x: &SVec) -> SVec {
        project_with(&self.pi, x)
    }

    /// Sparse columns of `π`.
    pub fn pi_columns(&self) -> &[SVec] {
        &self.pi
    }

    pub fn delta(&self, y: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (k, c) in y {
            acc.add_scaled(c, &self.comult[*k]);
        }
        acc.finish()
    }

    pub fn eps(&self, y: &SVec) -> Scalar {
        let f = self.q.field();
        y.iter()
            .fold(f.zero(), |s, (k, c)| &s + &(c * &self.counit[*k]))
    }

    /// `y · e_h`.
    pub fn act(&self, y: &SVec, h: usize) -> SVec {
        let n = self.q.ambient();
        let mut acc = Acc::new();
        for (k, c) in y {
            acc.add_scaled(c, &self.action[k * n + h]);
        }
        acc.finish()
    }

    pub fn coalgebra(&self) -> CoalgebraStr {
        CoalgebraStr {
            field: self.q.field(),
            dim: self.dim(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }
}

fn project_with(pi: &[SVec], x: &SVec) -> SVec {
    let mut acc = Acc::new();
    for (i, c) in x {
        acc.add_scaled(c, &pi[*i]);
    }
    acc.finish()
}

/// Least left coideal subalgebra containing `seed`.
pub fn close_coideal_subalgebra(h: &HopfAlgebra, seed: &Subspace) -> Result<CoidealSubalgebra> {
    let mut ech = Echelon::new(h.field(), h.dim());
    let mut basis: Vec<SVec> = Vec::new();
    let mut queue: Vec<SVec> = seed.sparse_vectors();
    queue.push(h.unit().clone());
    queue.reverse();
    while let Some(v) = queue.pop() {
        if !ech.insert(&v) {
            continue;
        }
        queue.extend(h.coalg().right_coefficients(&v));
        for w in basis.iter().chain(std::iter::once(&v)) {
            queue.push(h.mul(&v, w));
            queue.push(h.mul(w, &v));
        }
        basis.push(v);
    }
    CoidealSubalgebra::new(h, ech.to_subspace())
}

/// Least subcoalgebra containing `seed`.
pub fn close_subcoalgebra(c: &CoalgebraStr, seed: &Subspace) -> Subspace {
    let mut ech = Echelon::new(c.field, c.dim);
    let mut queue = seed.sparse_vectors();
    while let Some(v) = queue.pop() {
        if ech.insert(&v) {
            queue.extend(c.right_coefficients(&v));
            queue.extend(c.left_coefficients(&v));
        }
    }
    ech.to_subspace()
}

/// Least unital subalgebra containing `seed`.
pub fn close_subalgebra(a: &AlgebraStr, seed: &Subspace) -> Subspace {
    a.generated_subalgebra(&seed.sparse_vectors())
}

/// `H/K⁺H`.
pub fn k_plus_h(h: &HopfAlgebra, k: &CoidealSubalgebra) -> Result<GeneralizedQuotient> {
    let f = h.field();
    let mut ech = Echelon::new(f, h.dim());
    for v in k.space.sparse_vectors() {
        let plus = sparse::axpy(&v, &-h.eps(&v), h.unit());
        for j in 0..h.dim() {
            ech.insert(&h.mul(&plus, &sparse::unit(j, f)));
        }
    }
    let ideal = RightIdealCoideal::new(h, ech.to_subspace())
        .map_err(|e| Error::Internal(format!("K⁺H is not a right ideal coideal: {e}")))?;
    GeneralizedQuotient::new(h, ideal)
}

/// `H^{co Q} = {x : (id⊗π)Δx = x⊗π(1)}`.
pub fn h_coinvariants(h: &HopfAlgebra, q: &GeneralizedQuotient) -> Result<CoidealSubalgebra> {
    let (n, qd) = (h.dim(), q.dim());
    let one = q.pi(h.unit());
    let cols: Vec<SVec> = (0..n)
        .map(|i| {
            let mut acc = Acc::new();
            for (p, c) in &h.coalg().comult[i] {
                let r = &q.pi_columns()[p % n];
                if !r.is_empty() {
                    acc.add_scaled(c, &sparse::tensor(&sparse::unit(p / n, h.field()), r, qd));
                }
            }
            acc.add_scaled(
                &-h.field().one(),
                &sparse::tensor(&sparse::unit(i, h.field()), &one, qd),
            );
            acc.finish()
        })
        .collect();
    let space = kernel_of_columns(h.field(), n * qd, &cols);
    CoidealSubalgebra::new(h, space).map_err(|e| Error::Internal(format!("coinvariants: {e}")))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::builders::{circle, circle_hopf, group_algebra, GroupTable};
    use crate::scalar::Field;

    pub fn span(h: &HopfAlgebra, vs: &[SVec]) -> Subspace {
        Subspace::span_sparse(h.field(), h.dim(), vs)
    }

    fn e(i: usize) -> SVec {
        sparse::unit(i, Field::Q)
    }

    #[test]
    fn unit_seed_closes_to_scalars() {
        let h = circle_hopf(Field::Q).unwrap();
        let k = close_coideal_subalgebra(&h, &Subspace::zero(Field::Q, 8)).unwrap();
        assert_eq!(k.space, span(&h, &[e(0)]));
        let q = k_plus_h(&h, &k).unwrap();
        assert_eq!(q.dim(), 8);
        assert_eq!(h_coinvariants(&h, &q).unwrap(), k);
    }

    #[test]
    fn whole_algebra_gives_ground_field_quotient() {
        let h = circle_hopf(Field::Q).unwrap();
        let k = CoidealSubalgebra::new(&h, Subspace::full(Field::Q, 8)).unwrap();
        let q = k_plus_h(&h, &k).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(h_coinvariants(&h, &q).unwrap(), k);
    }

    #[test]
    fn circle_closure_of_d() {
        let h = circle_hopf(Field::Q).unwrap();
        let k = close_coideal_subalgebra(&h, &span(&h, &[e(circle::D)])).unwrap();
        assert_eq!(k.dim(), 2);
        let c2 = h.mul(&e(circle::C), &e(circle::C));
        let s2 = h.mul(&e(circle::S), &e(circle::S));
        assert!(k.space.contains_sparse(&c2) && k.space.contains_sparse(&s2));
        let q = k_plus_h(&h, &k).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(h_coinvariants(&h, &q).unwrap(), k);
    }

    #[test]
    fn circle_closure_of_ct_st_contains_d() {
        let h = circle_hopf(Field::Q).unwrap();
        let k = close_coideal_subalgebra(&h, &span(&h, &[e(circle::TC), e(circle::TS)])).unwrap();
        assert!(k.space.contains_sparse(&e(circle::D)));
        assert_eq!(k.dim(), 4);
    }

    #[test]
    fn closure_is_idempotent_and_extensive() {
        let h = circle_hopf(Field::Q).unwrap();
        let seed = span(&h, &[e(circle::C)]);
        let k = close_coideal_subalgebra(&h, &seed).unwrap();
        assert!(k.space.contains(&seed));
        assert_eq!(close_coideal_subalgebra(&h, &k.space).unwrap(), k);
    }

    #[test]
    fn subcoalgebra_of_group_like() {
        let h = circle_hopf(Field::Q).unwrap();
        let g = span(&h, &[e(circle::TD)]);
        assert_eq!(close_subcoalgebra(h.coalg(), &g), g);
        let c = close_subcoalgebra(h.coalg(), &span(&h, &[e(circle::C)]));
        assert_eq!(c, span(&h, &[e(circle::C), e(circle::S)]));
    }

    #[test]
    fn predicates_on_group_algebra() {
        let g = GroupTable::s3();
        let h = group_algebra(&g, Field::Q);
        let f = Field::Q;
        let sub = g.generated(&[1]);
        let ks = span(&h, &sub.iter().map(|&x| e(x)).collect::<Vec<_>>());
        assert!(is_subalgebra(h.alg(), &ks) && is_subcoalgebra(h.coalg(), &ks));
        assert!(!is_normal(&h, &ks));
        let a3 = span(
            &h,
            &g.generated(&[3]).iter().map(|&x| e(x)).collect::<Vec<_>>(),
        );
        assert!(is_normal(&h, &a3));
        let aug: Vec<SVec> = (1..6).map(|x| vec![(0, f.int(-1)), (x, f.one())]).collect();
        let aug = span(&h, &aug);
        assert!(is_ideal(h.alg(), &aug) && is_coideal(h.coalg(), &aug));
        assert!(!is_left_coideal(h.coalg(), &aug));
        let bad = RightIdealCoideal::new(&h, ks).unwrap_err();
        assert!(matches!(bad, Error::Condition { ref name, .. } if name == "counit vanishes"));
    }
}
