use super::can::CanReport;
use crate::error::{Error, Result};
use crate::hopf::{CoalgebraStr, HopfAlgebra};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, kernel_of_columns, sparse_rank, Echelon, QuotientSpace};
use crate::par;
use crate::subobjects::CoidealSubalgebra;

/// A left `H`-module coalgebra: `Δ(h·c) = h₁·c₁ ⊗ h₂·c₂` and `ε(h·c) = ε(h)ε(c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra {
    pub coalg: CoalgebraStr,
    pub hopf: HopfAlgebra,
    /// `action[h·dim C + c] = e_h · e_c`.
    pub action: Vec<SVec>,
}

impl ModuleCoalgebra {
    pub fn new(coalg: CoalgebraStr, hopf: HopfAlgebra, action: Vec<SVec>) -> Result<ModuleCoalgebra> {
        let (n, m) = (coalg.dim, hopf.dim());
        if coalg.field != hopf.field() {
            return Err(Error::FieldMismatch(format!("coalgebra over {}, Hopf algebra over {}", coalg.field, hopf.field())));
        }
        if action.len() != n * m || action.iter().flatten().any(|(i, x)| *i >= n || x.field() != coalg.field) {
            return Err(Error::Dimension(format!("action must have {} entries in C of dim {n}", n * m)));
        }
        let mc = ModuleCoalgebra { coalg, hopf, action };
        if let Some(w) = mc.violation() {
            return Err(Error::Input(format!("not a module coalgebra: {w}")));
        }
        Ok(mc)
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &HopfAlgebra) -> ModuleCoalgebra {
        let action = h.alg().mult.clone();
        ModuleCoalgebra { coalg: h.coalg().clone(), hopf: h.clone(), action }
    }

    fn violation(&self) -> Option<String> {
        let (n, m, f) = (self.coalg.dim, self.hopf.dim(), self.coalg.field);
        let e = |i: usize| sparse::unit(i, f);
        if let Some(c) = (0..n).find(|&c| self.act_vec(self.hopf.unit(), &e(c)) != e(c)) {
            return Some(format!("unit acts nontrivially on e_{c}"));
        }
        let bad = par::map_range(m, |h| {
            for k in 0..m {
                let hk = self.hopf.alg().mul_basis(h, k);
                if let Some(c) = (0..n).find(|&c| self.act(h, &self.act(k, &e(c))) != self.act_vec(hk, &e(c))) {
                    return Some(format!("module associativity at ({h}, {k}, {c})"));
                }
            }
            for c in 0..n {
                let hc = self.act(h, &e(c));
                let mut rhs = Acc::new();
                for (p, x) in &self.hopf.coalg().comult[h] {
                    for (q, y) in &self.coalg.comult[c] {
                        let l = self.act(p / m, &e(q / n));
                        let r = self.act(p % m, &e(q % n));
                        rhs.add_scaled(&(x * y), &sparse::tensor(&l, &r, n));
                    }
                }
                if self.coalg.delta(&hc) != rhs.finish() {
                    return Some(format!("comultiplicativity at ({h}, {c})"));
                }
                if self.coalg.eps(&hc) != &self.hopf.coalg().counit[h] * &self.coalg.counit[c] {
                    return Some(format!("counit at ({h}, {c})"));
                }
            }
            None
        });
        bad.into_iter().flatten().next()
    }

    pub fn act(&self, h: usize, x: &SVec) -> SVec {
        let n = self.coalg.dim;
        let mut acc = Acc::new();
        for (c, s) in x {
            acc.add_scaled(s, &self.action[h * n + c]);
        }
        acc.finish()
    }

    pub fn act_vec(&self, y: &SVec, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (h, s) in y {
            acc.add_scaled(s, &self.act(*h, x));
        }
        acc.finish()
    }
}

/// `can_K: K⊗C → C□_{C^K}C`, `k⊗c ↦ k·c₁ ⊗ c₂`, with `C^K = C/K⁺C`.
pub fn coextension_can(mc: &ModuleCoalgebra, k: &CoidealSubalgebra) -> Result<CanReport> {
    let (n, f) = (mc.coalg.dim, mc.coalg.field);
    if k.space.ambient() != mc.hopf.dim() {
        return Err(Error::Dimension("K must be a subspace of H".into()));
    }
    guard(n * n)?;
    let ks = k.space.sparse_vectors();
    let mut plus = Echelon::new(f, n);
    for v in &ks {
        let vp = sparse::axpy(v, &-mc.hopf.eps(v), mc.hopf.unit());
        for c in 0..n {
            plus.insert(&mc.act_vec(&vp, &sparse::unit(c, f)));
        }
    }
    let q = QuotientSpace::new(plus.to_subspace());
    let (qd, pi) = (q.dim(), q.projection_columns());
    let cot_cols: Vec<SVec> = par::map_range(n * n, |xz| {
        let (x, z) = (xz / n, xz % n);
        let mut acc = Acc::new();
        for (p, c) in &mc.coalg.comult[x] {
            for (y, d) in &pi[p % n] {
                acc.add(((p / n) * qd + y) * n + z, c * d);
            }
        }
        for (p, c) in &mc.coalg.comult[z] {
            for (y, d) in &pi[p / n] {
                acc.add((x * qd + y) * n + p % n, -(c * d));
            }
        }
        acc.finish()
    });
    let cot = kernel_of_columns(f, n * qd * n, &cot_cols);
    let cols: Vec<SVec> = par::map_range(ks.len() * n, |i| {
        let (v, c) = (&ks[i / n], i % n);
        let mut acc = Acc::new();
        for (p, x) in &mc.coalg.comult[c] {
            acc.add_scaled(x, &sparse::tensor(&mc.act_vec(v, &sparse::unit(p / n, f)), &sparse::unit(p % n, f), n));
        }
        acc.finish()
    });
    if let Some(i) = cols.iter().position(|c| !cot.contains_sparse(c)) {
        return Err(Error::Internal(format!("can_K leaves the cotensor at basis vector {i}")));
    }
    Ok(CanReport::from_rank(cols.len(), cot.dim(), sparse_rank(f, n * n, &cols)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{circle, circle_hopf, group_algebra, GroupTable};
    use crate::linalg::Subspace;
    use crate::scalar::Field;
    use crate::subobjects::{close_coideal_subalgebra, scan_generalized};

    #[test]
    fn extremes_on_circle() {
        let f = Field::Q;
        let h = circle_hopf(f).unwrap();
        let mc = ModuleCoalgebra::new(h.coalg().clone(), h.clone(), h.alg().mult.clone()).unwrap();
        let one = CoidealSubalgebra::new(&h, Subspace::span_sparse(f, 8, &[h.unit().clone()])).unwrap();
        let r = coextension_can(&mc, &one).unwrap();
        assert!(r.bijective && r.domain_dim == 8);
        let all = CoidealSubalgebra::new(&h, Subspace::full(f, 8)).unwrap();
        let r = coextension_can(&mc, &all).unwrap();
        assert!(r.bijective && r.codomain_dim == 64);
        let seed = Subspace::span_sparse(f, 8, &[sparse::unit(circle::D, f)]);
        let k = close_coideal_subalgebra(&h, &seed).unwrap();
        assert!(coextension_can(&mc, &k).unwrap().bijective);
    }

    #[test]
    fn every_coideal_subalgebra_of_small_group_algebra() {
        let f = Field::fp(2).unwrap();
        let h = group_algebra(&GroupTable::cyclic(4), f);
        let mc = ModuleCoalgebra::regular(&h);
        for k in scan_generalized(&h).unwrap().subs {
            assert!(coextension_can(&mc, &k).unwrap().bijective);
        }
    }

    #[test]
    fn trivial_action_is_not_a_module_coalgebra() {
        let f = Field::Q;
        let h = group_algebra(&GroupTable::cyclic(2), f);
        let zero = vec![vec![]; 4];
        let err = ModuleCoalgebra::new(h.coalg().clone(), h.clone(), zero).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }
}
