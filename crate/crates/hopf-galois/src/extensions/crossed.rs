use serde::Serialize;

use super::{cond, ComoduleAlgebra, ModuleAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{verify_structure, AlgebraStr, Convolution, HopfAlgebra, LinMap, Structure};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, Mat};
use crate::par;

/// A weak action `H⊗B → B` with a cocycle `σ: H⊗H → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedData {
    pub b: AlgebraStr,
    pub hopf: HopfAlgebra,
    /// `action[h·dim B + b] = e_h · e_b`.
    pub action: Vec<SVec>,
    /// `cocycle[h·dim H + k] = σ(e_h, e_k)`.
    pub cocycle: Vec<SVec>,
}

impl CrossedData {
    /// The trivial cocycle `σ(h, k) = ε(h)ε(k)1`.
    pub fn smash(m: &ModuleAlgebra) -> CrossedData {
        let (n, eps) = (m.hopf.dim(), &m.hopf.coalg().counit);
        let cocycle = (0..n * n).map(|i| sparse::scale(&m.alg.unit, &(&eps[i / n] * &eps[i % n]))).collect();
        CrossedData { b: m.alg.clone(), hopf: m.hopf.clone(), action: m.action.clone(), cocycle }
    }

    fn act(&self, h: usize, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (a, c) in x {
            acc.add_scaled(c, &self.action[h * self.b.dim + a]);
        }
        acc.finish()
    }

    fn act_vec(&self, y: &SVec, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (h, c) in y {
            acc.add_scaled(c, &self.act(*h, x));
        }
        acc.finish()
    }

    /// `σ(x, y)` for `x, y ∈ H`.
    fn sigma(&self, x: &SVec, y: &SVec) -> SVec {
        let m = self.hopf.dim();
        let mut acc = Acc::new();
        for (h, c) in x {
            for (k, d) in y {
                acc.add_scaled(&(c * d), &self.cocycle[h * m + k]);
            }
        }
        acc.finish()
    }

    /// Normality, measuring, the cocycle and twisted-module conditions, and
    /// convolution invertibility of `σ`.
    pub fn check(&self) -> Result<()> {
        let (nb, m, f) = (self.b.dim, self.hopf.dim(), self.b.field);
        if self.hopf.field() != f {
            return Err(Error::FieldMismatch(format!("B over {f}, H over {}", self.hopf.field())));
        }
        if self.action.len() != m * nb || self.cocycle.len() != m * m {
            return Err(Error::Dimension(format!("action needs {} entries and cocycle {}", m * nb, m * m)));
        }
        if self.action.iter().chain(&self.cocycle).flatten().any(|(i, x)| *i >= nb || x.field() != f) {
            return Err(Error::Input("action or cocycle entry out of range or field".into()));
        }
        let one = self.hopf.unit();
        let eh = |h: usize| sparse::unit(h, f);
        let eps = |h: usize| &self.hopf.coalg().counit[h];
        for b in 0..nb {
            if self.act_vec(one, &eh(b)) != eh(b) {
                return Err(cond("normality", vec![b]));
            }
        }
        for h in 0..m {
            let e1 = sparse::scale(&self.b.unit, eps(h));
            if self.act(h, &self.b.unit) != e1
                || self.sigma(&eh(h), one) != e1
                || self.sigma(one, &eh(h)) != e1
            {
                return Err(cond("normality", vec![h]));
            }
        }
        let first = |name: &str, bad: Vec<Option<Vec<usize>>>| match bad.into_iter().flatten().next() {
            Some(w) => Err(cond(name, w)),
            None => Ok(()),
        };
        let delta = |h: usize| &self.hopf.coalg().comult[h];
        first(
            "measuring",
            par::map_range(m * nb, |ha| {
                let (h, a) = (ha / nb, ha % nb);
                (0..nb).find_map(|b| {
                    let mut rhs = Acc::new();
                    for (p, x) in delta(h) {
                        rhs.add_scaled(x, &self.b.mul(&self.act(p / m, &eh(a)), &self.act(p % m, &eh(b))));
                    }
                    (self.act(h, self.b.mul_basis(a, b)) != rhs.finish()).then(|| vec![h, a, b])
                })
            }),
        )?;
        first(
            "cocycle",
            par::map_range(m * m, |hk| {
                let (h, k) = (hk / m, hk % m);
                (0..m).find_map(|l| {
                    let mut lhs = Acc::new();
                    let mut rhs = Acc::new();
                    for (p, x) in delta(h) {
                        for (q, y) in delta(k) {
                            let xy = x * y;
                            for (r, z) in delta(l) {
                                let inner = self.act(p / m, &self.cocycle[(q / m) * m + r / m]);
                                let kl = self.hopf.alg().mul_basis(q % m, r % m);
                                lhs.add_scaled(&(&xy * z), &self.b.mul(&inner, &self.sigma(&eh(p % m), kl)));
                            }
                            let hk2 = self.hopf.alg().mul_basis(p % m, q % m);
                            rhs.add_scaled(&xy, &self.b.mul(&self.cocycle[(p / m) * m + q / m], &self.sigma(hk2, &eh(l))));
                        }
                    }
                    (lhs.finish() != rhs.finish()).then(|| vec![h, k, l])
                })
            }),
        )?;
        first(
            "twisted module",
            par::map_range(m * m, |hk| {
                let (h, k) = (hk / m, hk % m);
                (0..nb).find_map(|b| {
                    let mut lhs = Acc::new();
                    let mut rhs = Acc::new();
                    for (p, x) in delta(h) {
                        for (q, y) in delta(k) {
                            let xy = x * y;
                            let inner = self.act(p / m, &self.act(q / m, &eh(b)));
                            lhs.add_scaled(&xy, &self.b.mul(&inner, &self.cocycle[(p % m) * m + q % m]));
                            let hk2 = self.hopf.alg().mul_basis(p % m, q % m);
                            rhs.add_scaled(&xy, &self.b.mul(&self.cocycle[(p / m) * m + q / m], &self.act_vec(hk2, &eh(b))));
                        }
                    }
                    (lhs.finish() != rhs.finish()).then(|| vec![h, k, b])
                })
            }),
        )?;
        guard(m * m * nb)?;
        let hh = self.hopf.coalg().tensor(self.hopf.coalg());
        let mut mat = Mat::zeros(f, nb, m * m);
        for (j, v) in self.cocycle.iter().enumerate() {
            for (i, x) in v {
                mat.set(*i, j, x.clone());
            }
        }
        if Convolution::new(&hh, &self.b).inverse(&mat).is_none() {
            return Err(Error::CocycleNotInvertible);
        }
        Ok(())
    }
}

/// `B #_σ H` with `(a#h)(b#k) = a(h₁·b)σ(h₂,k₁) # h₃k₂` and coaction `a#h₁ ⊗ h₂`.
pub fn crossed_product(d: &CrossedData) -> Result<ComoduleAlgebra> {
    d.check()?;
    let (nb, m, f) = (d.b.dim, d.hopf.dim(), d.b.field);
    let n = nb * m;
    let mult: Vec<SVec> = par::map_range(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let (a, h, b, k) = (i / m, i % m, j / m, j % m);
        let mut acc = Acc::new();
        let eb = sparse::unit(b, f);
        for (p, x) in &d.hopf.coalg().delta2(h) {
            let (h1, h2, h3) = (p / (m * m), (p / m) % m, p % m);
            let left = d.b.mul(&sparse::unit(a, f), &d.act(h1, &eb));
            for (q, y) in &d.hopf.coalg().comult[k] {
                let (k1, k2) = (q / m, q % m);
                let bpart = d.b.mul(&left, &d.cocycle[h2 * m + k1]);
                let hpart = d.hopf.alg().mul_basis(h3, k2);
                acc.add_scaled(&(x * y), &sparse::tensor(&bpart, hpart, m));
            }
        }
        acc.finish()
    });
    let unit = sparse::tensor(&d.b.unit, d.hopf.unit(), m);
    let alg = AlgebraStr::new(f, n, mult, unit)?;
    if n <= 64 && !verify_structure(Structure::Algebra(&alg))?.ok {
        return Err(Error::Internal("crossed product is not associative".into()));
    }
    let coaction = (0..n)
        .map(|i| {
            let (b, h) = (i / m, i % m);
            let mut acc = Acc::new();
            for (p, x) in &d.hopf.coalg().comult[h] {
                acc.add((b * m + p / m) * m + p % m, x.clone());
            }
            acc.finish()
        })
        .collect();
    ComoduleAlgebra::new(alg, d.hopf.clone(), coaction)
}

pub fn smash_product(m: &ModuleAlgebra) -> Result<ComoduleAlgebra> {
    crossed_product(&CrossedData::smash(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleftReport {
    pub colinear: bool,
    pub inverse: Option<LinMap>,
}

impl CleftReport {
    pub fn cleft(&self) -> bool {
        self.colinear && self.inverse.is_some()
    }
}

#[derive(Serialize)]
struct CleftSummary {
    colinear: bool,
    invertible: bool,
}

impl Serialize for CleftReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CleftSummary { colinear: self.colinear, invertible: self.inverse.is_some() }.serialize(s)
    }
}

/// Checks `δγ = (γ⊗id)Δ` for `γ: H → A` and solves for its convolution inverse.
pub fn cleft_witness_check(a: &ComoduleAlgebra, gamma: &LinMap) -> Result<CleftReport> {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    if gamma.rows() != n || gamma.cols() != m {
        return Err(Error::Dimension(format!("γ must be {n}×{m}")));
    }
    let g: Vec<SVec> = (0..m).map(|h| sparse::from_dense(&gamma.col(h))).collect();
    let colinear = (0..m).all(|h| {
        let mut rhs = Acc::new();
        for (p, x) in &a.hopf.coalg().comult[h] {
            rhs.add_scaled(x, &sparse::tensor(&g[p / m], &sparse::unit(p % m, f), m));
        }
        a.delta(&g[h]) == rhs.finish()
    });
    guard(n * m)?;
    let inverse = Convolution::new(a.hopf.coalg(), &a.alg).inverse(gamma);
    Ok(CleftReport { colinear, inverse })
}
