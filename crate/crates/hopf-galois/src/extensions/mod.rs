//! Comodule and module algebras over a finite-dimensional Hopf algebra and
//! the Galois theory of the extensions they define.
//!
//! Tensors `A⊗H` use the index `a·dim H + h`; actions `H⊗A → A` are stored as
//! `action[h·dim A + a] = e_h · e_a`.

mod can;
mod coext;
mod crossed;
mod ell;
mod tensor;

pub use can::{
    can_full, can_full_on, can_q, can_s, closed_q, closed_s, extension_connection, phi, psi, q_certificate,
    s_certificate, CanReport, ExtensionConnection, Psi, QCertificate, SCertificate, CONNECTION_CAP,
};
pub use coext::{coextension_can, ModuleCoalgebra};
pub use crossed::{cleft_witness_check, crossed_product, smash_product, CleftReport, CrossedData};
pub use ell::{ell_construction, translation_map, Ell, ELL_DIM_CAP};
pub use tensor::{cotensor, find_relative_basis, RelativeTensor};

use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, AlgebraStr, HopfAlgebra};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{kernel_of_columns, Subspace};
use crate::par;
use crate::scalar::Field;
use crate::subobjects::GeneralizedQuotient;

fn cond(name: &str, witness: Vec<usize>) -> Error {
    Error::Condition { name: name.into(), witness }
}

/// Product in `A⊗B` without materializing its structure constants.
pub(crate) fn mul_tensor(a: &AlgebraStr, b: &AlgebraStr, x: &SVec, y: &SVec) -> SVec {
    let m = b.dim;
    let mut acc = Acc::new();
    for (p, s) in x {
        for (q, t) in y {
            let l = a.mul_basis(p / m, q / m);
            let r = b.mul_basis(p % m, q % m);
            if !l.is_empty() && !r.is_empty() {
                acc.add_scaled(&(s * t), &sparse::tensor(l, r, m));
            }
        }
    }
    acc.finish()
}

/// `Σ cᵢ · table[i·stride + j]` over the terms `(i, cᵢ)` of `x`.
fn apply_table(table: &[SVec], stride: usize, j: usize, x: &SVec) -> SVec {
    let mut acc = Acc::new();
    for (i, c) in x {
        acc.add_scaled(c, &table[i * stride + j]);
    }
    acc.finish()
}

/// A right `H`-comodule algebra `δ: A → A⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub alg: AlgebraStr,
    pub hopf: HopfAlgebra,
    /// `coaction[a] = δ(e_a)`.
    pub coaction: Vec<SVec>,
}

impl ComoduleAlgebra {
    /// Checks that `δ` is a unital algebra map, coassociative and counital.
    pub fn new(alg: AlgebraStr, hopf: HopfAlgebra, coaction: Vec<SVec>) -> Result<ComoduleAlgebra> {
        let (n, m) = (alg.dim, hopf.dim());
        if alg.field != hopf.field() {
            return Err(Error::FieldMismatch(format!("algebra over {}, Hopf algebra over {}", alg.field, hopf.field())));
        }
        if coaction.len() != n || coaction.iter().flatten().any(|(p, x)| *p >= n * m || x.field() != alg.field) {
            return Err(Error::Dimension(format!("coaction must give {n} vectors in A⊗H of dim {}", n * m)));
        }
        let a = ComoduleAlgebra { alg, hopf, coaction };
        a.check()?;
        Ok(a)
    }

    fn check(&self) -> Result<()> {
        let (n, m, f) = (self.alg.dim, self.hopf.dim(), self.field());
        if self.delta(&self.alg.unit) != sparse::tensor(&self.alg.unit, self.hopf.unit(), m) {
            return Err(cond("coaction preserves unit", vec![]));
        }
        let bad = par::find_first(n, |i| {
            (0..n).any(|j| {
                let lhs = self.delta(self.alg.mul_basis(i, j));
                lhs != mul_tensor(&self.alg, self.hopf.alg(), &self.coaction[i], &self.coaction[j])
            })
        });
        if let Some(i) = bad {
            let j = (0..n)
                .find(|&j| {
                    self.delta(self.alg.mul_basis(i, j))
                        != mul_tensor(&self.alg, self.hopf.alg(), &self.coaction[i], &self.coaction[j])
                })
                .unwrap();
            return Err(cond("coaction is multiplicative", vec![i, j]));
        }
        let bad = par::find_first(n, |i| {
            let mut left = Acc::new();
            let mut right = Acc::new();
            let mut counit = Acc::new();
            for (p, x) in &self.coaction[i] {
                let (a, h) = (p / m, p % m);
                for (q, y) in &self.coaction[a] {
                    left.add((q * m) + h, x * y);
                }
                for (r, y) in &self.hopf.coalg().comult[h] {
                    right.add(a * m * m + r, x * y);
                }
                counit.add(a, x * &self.hopf.coalg().counit[h]);
            }
            left.finish() != right.finish() || counit.finish() != sparse::unit(i, f)
        });
        if let Some(i) = bad {
            return Err(cond("coassociativity and counit", vec![i]));
        }
        Ok(())
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(h: &HopfAlgebra) -> ComoduleAlgebra {
        ComoduleAlgebra { alg: h.alg().clone(), hopf: h.clone(), coaction: h.coalg().comult.clone() }
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn delta(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (i, c) in x {
            acc.add_scaled(c, &self.coaction[*i]);
        }
        acc.finish()
    }

    /// The left `H*`-module algebra `f·a = a₀ f(a₁)`.
    pub fn to_module(&self) -> Result<ModuleAlgebra> {
        let (n, m) = (self.dim(), self.hopf.dim());
        let mut action = vec![Acc::new(); m * n];
        for (a, d) in self.coaction.iter().enumerate() {
            for (p, x) in d {
                action[(p % m) * n + a].add(p / m, x.clone());
            }
        }
        ModuleAlgebra::new(self.alg.clone(), dual_hopf(&self.hopf)?, action.into_iter().map(Acc::finish).collect())
    }
}

/// A left `H`-module algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub alg: AlgebraStr,
    pub hopf: HopfAlgebra,
    pub action: Vec<SVec>,
}

impl ModuleAlgebra {
    /// Checks the module axioms, `h·1 = ε(h)1` and measuring `h·(ab) = (h₁·a)(h₂·b)`.
    pub fn new(alg: AlgebraStr, hopf: HopfAlgebra, action: Vec<SVec>) -> Result<ModuleAlgebra> {
        let (n, m) = (alg.dim, hopf.dim());
        if alg.field != hopf.field() {
            return Err(Error::FieldMismatch(format!("algebra over {}, Hopf algebra over {}", alg.field, hopf.field())));
        }
        if action.len() != n * m || action.iter().flatten().any(|(p, x)| *p >= n || x.field() != alg.field) {
            return Err(Error::Dimension(format!("action must have {} entries in A of dim {n}", n * m)));
        }
        let out = ModuleAlgebra { alg, hopf, action };
        out.check()?;
        Ok(out)
    }

    fn check(&self) -> Result<()> {
        let (n, m, f) = (self.alg.dim, self.hopf.dim(), self.alg.field);
        for a in 0..n {
            let e = sparse::unit(a, f);
            if self.act_vec(self.hopf.unit(), &e) != e {
                return Err(cond("unit acts trivially", vec![a]));
            }
        }
        for h in 0..m {
            let expect = sparse::scale(&self.alg.unit, &self.hopf.coalg().counit[h]);
            if self.act(h, &self.alg.unit) != expect {
                return Err(cond("h·1 = ε(h)1", vec![h]));
            }
        }
        let witness = |name: &str, bad: Vec<Option<Vec<usize>>>| match bad.into_iter().flatten().next() {
            Some(w) => Err(cond(name, w)),
            None => Ok(()),
        };
        let module = par::map_range(m, |h| {
            for k in 0..m {
                let hk = self.hopf.alg().mul_basis(h, k);
                for a in 0..n {
                    let e = sparse::unit(a, f);
                    if self.act(h, &self.act(k, &e)) != self.act_vec(hk, &e) {
                        return Some(vec![h, k, a]);
                    }
                }
            }
            None
        });
        witness("module associativity", module)?;
        let measuring = par::map_range(m * n, |ha| {
            let (h, a) = (ha / n, ha % n);
            let ea = sparse::unit(a, f);
            let delta = &self.hopf.coalg().comult[h];
            for b in 0..n {
                let eb = sparse::unit(b, f);
                let lhs = self.act(h, self.alg.mul_basis(a, b));
                let mut rhs = Acc::new();
                for (p, x) in delta {
                    rhs.add_scaled(x, &self.alg.mul(&self.act(p / m, &ea), &self.act(p % m, &eb)));
                }
                if lhs != rhs.finish() {
                    return Some(vec![h, a, b]);
                }
            }
            None
        });
        witness("measuring", measuring)
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// `e_h · x`.
    pub fn act(&self, h: usize, x: &SVec) -> SVec {
        let n = self.alg.dim;
        let mut acc = Acc::new();
        for (a, c) in x {
            acc.add_scaled(c, &self.action[h * n + a]);
        }
        acc.finish()
    }

    /// `y · x` for `y ∈ H`.
    pub fn act_vec(&self, y: &SVec, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (h, c) in y {
            acc.add_scaled(c, &self.act(*h, x));
        }
        acc.finish()
    }

    /// The right `H*`-comodule algebra `δ(a) = Σᵢ (eᵢ·a) ⊗ fᵢ`.
    pub fn to_comodule(&self) -> Result<ComoduleAlgebra> {
        let (n, m) = (self.dim(), self.hopf.dim());
        let coaction = (0..n)
            .map(|a| {
                let mut acc = Acc::new();
                for h in 0..m {
                    for (b, x) in &self.action[h * n + a] {
                        acc.add(b * m + h, x.clone());
                    }
                }
                acc.finish()
            })
            .collect();
        ComoduleAlgebra::new(self.alg.clone(), dual_hopf(&self.hopf)?, coaction)
    }

    /// `A^K = {a : k·a = ε(k)a for k ∈ K}`.
    pub fn invariants(&self, k: &Subspace) -> Subspace {
        let (n, f) = (self.dim(), self.field());
        let ks = k.sparse_vectors();
        let eps: Vec<_> = ks.iter().map(|v| self.hopf.eps(v)).collect();
        let cols: Vec<SVec> = par::map_range(n, |a| {
            let e = sparse::unit(a, f);
            let mut acc = Acc::new();
            for (i, v) in ks.iter().enumerate() {
                let d = sparse::axpy(&self.act_vec(v, &e), &-&eps[i], &e);
                for (b, x) in d {
                    acc.add(i * n + b, x);
                }
            }
            acc.finish()
        });
        kernel_of_columns(f, n * ks.len(), &cols)
    }
}

/// `A^{co Q} = {a : (id⊗π)δ(a) = a⊗π(1)}`; `None` means `Q = H`.
pub fn coinvariants(a: &ComoduleAlgebra, q: Option<&GeneralizedQuotient>) -> Result<Subspace> {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    let units: Vec<SVec>;
    let (pi, qd): (&[SVec], usize) = match q {
        Some(q) => (q.pi_columns(), q.dim()),
        None => {
            units = (0..m).map(|h| sparse::unit(h, f)).collect();
            (&units, m)
        }
    };
    let one = apply_table(pi, 1, 0, a.hopf.unit());
    let cols: Vec<SVec> = par::map_range(n, |i| {
        let mut acc = Acc::new();
        for (p, x) in &a.coaction[i] {
            acc.add_scaled(x, &sparse::tensor(&sparse::unit(p / m, f), &pi[p % m], qd));
        }
        acc.add_scaled(&-f.one(), &sparse::tensor(&sparse::unit(i, f), &one, qd));
        acc.finish()
    });
    let space = kernel_of_columns(f, n * qd, &cols);
    if !a.alg.is_subalgebra(&space) {
        return Err(Error::Internal("coinvariants are not a subalgebra".into()));
    }
    Ok(space)
}
