use serde::Serialize;

use super::{sweedler_coring, ACoring};
use crate::builders::{group_algebra, GroupTable};
use crate::error::{Error, Result};
use crate::extensions::{CanReport, ModuleAlgebra, RelativeTensor};
use crate::hopf::AlgebraStr;
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, kernel_of_columns, sparse_rank, Mat, Subspace};
use crate::par;
use crate::scalar::Field;

/// Largest dimension for the basis-pair zero-divisor scan.
pub const DOMAIN_SCAN_CAP: usize = 64;
/// Largest `|A|` for the exhaustive unit scan over a finite field.
const EXHAUSTIVE_CAP: u64 = 4096;

/// How a domain claim was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomainCertificate {
    /// Every nonzero element of a finite `A` acts invertibly.
    Exhaustive,
    /// No product of two basis vectors vanishes.
    BasisScan,
}

/// Zero-divisor scan: exhaustive when `A` is finite and small, basis pairs otherwise.
pub fn domain_check(a: &AlgebraStr) -> Result<DomainCertificate> {
    let n = a.dim;
    if n > DOMAIN_SCAN_CAP {
        return Err(Error::Guard { needed: n, cap: DOMAIN_SCAN_CAP });
    }
    for x in 0..n {
        for y in 0..n {
            if a.mul_basis(x, y).is_empty() {
                return Err(Error::ZeroDivisor(format!("e_{x}·e_{y} = 0")));
            }
        }
    }
    let size = match a.field {
        Field::Fp(p) => p.checked_pow(n as u32).filter(|s| *s <= EXHAUSTIVE_CAP),
        _ => None,
    };
    let Some(size) = size else {
        return Ok(DomainCertificate::BasisScan);
    };
    let Field::Fp(p) = a.field else { unreachable!() };
    let element = |k: usize| -> SVec {
        let mut k = k as u64 + 1;
        let mut v = Vec::new();
        for i in 0..n {
            if !k.is_multiple_of(p) {
                v.push((i, a.field.int((k % p) as i64)));
            }
            k /= p;
        }
        v
    };
    let bad = par::find_first(size as usize - 1, |k| {
        let v = element(k);
        let cols: Vec<SVec> = (0..n).map(|j| a.mul(&v, &sparse::unit(j, a.field))).collect();
        sparse_rank(a.field, n, &cols) < n
    });
    match bad {
        Some(k) => Err(Error::ZeroDivisor(format!("{:?} is a zero divisor", element(k)))),
        None => Ok(DomainCertificate::Exhaustive),
    }
}

/// Basis elements of `H` that act injectively on `A` and have nonzero counit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoActionCert {
    pub basis: Vec<usize>,
}

impl MonoActionCert {
    /// Certificate on the standard basis of `H`.
    pub fn standard(m: &ModuleAlgebra) -> Result<MonoActionCert> {
        let cert = MonoActionCert { basis: (0..m.hopf.dim()).collect() };
        cert.verify(m)?;
        Ok(cert)
    }

    pub fn verify(&self, m: &ModuleAlgebra) -> Result<()> {
        let (n, dim_h, f) = (m.dim(), m.hopf.dim(), m.field());
        let mut seen = self.basis.clone();
        seen.sort_unstable();
        if seen != (0..dim_h).collect::<Vec<_>>() {
            return Err(Error::Input("certificate must list every standard basis index of H once".into()));
        }
        for &h in &self.basis {
            if m.hopf.coalg().counit[h].is_zero() {
                return Err(Error::NotMonoAction(format!("ε(e_{h}) = 0, so e_{h}·1 = 0")));
            }
            let cols: Vec<SVec> = (0..n).map(|a| m.act(h, &sparse::unit(a, f))).collect();
            let ker = kernel_of_columns(f, n, &cols);
            if let Some(v) = ker.sparse_vectors().first() {
                return Err(Error::NotMonoAction(format!("e_{h} kills {v:?}")));
            }
        }
        Ok(())
    }
}

/// `Hom(K, A)` for a right coideal subalgebra `K ⊆ H` with
/// `(a·φ)(k) = aφ(k)`, `(φ·a)(k) = φ(k₁)(k₂·a)`, `ε(φ) = φ(1)` and
/// `Δ = α⁻¹∘Hom(m, A)`, `α(φ⊗ψ)(k⊗k') = φ(k₁)(k₂·ψ(k'))`.
///
/// Basis `φ_{i,a}: k_j ↦ δ_ij e_a` at index `i·dim A + a`, with `k_i` the
/// echelon basis of `K`. No domain or mono-action check is made.
pub fn hom_coring_on(m: &ModuleAlgebra, k: &Subspace) -> Result<ACoring> {
    let (n, dh, f) = (m.dim(), m.hopf.dim(), m.field());
    if k.ambient() != dh {
        return Err(Error::Dimension("K must be a subspace of H".into()));
    }
    let r = k.dim();
    let d = r * n;
    guard(d * d * d)?;
    let kb = k.sparse_vectors();
    let piv = k.pivots().to_vec();
    let coords = |v: &SVec| -> Result<SVec> {
        let c: SVec = piv.iter().enumerate().filter_map(|(i, p)| sparse::get(v, *p).map(|x| (i, x.clone()))).collect();
        let mut acc = Acc::new();
        for (i, x) in &c {
            acc.add_scaled(x, &kb[*i]);
        }
        if acc.finish() != *v {
            return Err(Error::Input("K is not a right coideal subalgebra".into()));
        }
        Ok(c)
    };
    // Δ(k_j) = Σ_i k_i ⊗ w[j][i]
    let mut w: Vec<Vec<SVec>> = Vec::with_capacity(r);
    for kj in &kb {
        let delta = m.hopf.delta(kj);
        let mut by_second: Vec<Acc> = (0..dh).map(|_| Acc::new()).collect();
        for (p, c) in &delta {
            by_second[p % dh].add(p / dh, c.clone());
        }
        let mut row: Vec<Acc> = (0..r).map(|_| Acc::new()).collect();
        for (s, acc) in by_second.into_iter().enumerate() {
            for (i, x) in coords(&acc.finish())? {
                row[i].add(s, x);
            }
        }
        w.push(row.into_iter().map(Acc::finish).collect());
    }
    let hom_index = |j: usize, v: &SVec| -> SVec { v.iter().map(|(c, x)| (j * n + c, x.clone())).collect() };
    let mut left = Vec::with_capacity(n * d);
    for b in 0..n {
        for i in 0..r {
            for a in 0..n {
                left.push(hom_index(i, m.alg.mul_basis(b, a)));
            }
        }
    }
    let mut right = Vec::with_capacity(d * n);
    for i in 0..r {
        for a in 0..n {
            for b in 0..n {
                let mut acc = Acc::new();
                for j in 0..r {
                    let v = m.alg.mul(&sparse::unit(a, f), &m.act_vec(&w[j][i], &sparse::unit(b, f)));
                    for (c, x) in v {
                        acc.add(j * n + c, x);
                    }
                }
                right.push(acc.finish());
            }
        }
    }
    let one = coords(m.hopf.unit())?;
    let counit = (0..d)
        .map(|ia| sparse::get(&one, ia / n).map(|u| sparse::scale(&sparse::unit(ia % n, f), u)).unwrap_or_default())
        .collect();
    // α on K⊗K, into Hom(K⊗K, A) at index (j·r + l)·n + c
    let rows = r * r * n;
    let alpha: Vec<SVec> = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let (i, a, i2, a2) = (x / n, x % n, y / n, y % n);
        let mut acc = Acc::new();
        for (j, wj) in w.iter().enumerate() {
            let v = m.alg.mul(&sparse::unit(a, f), &m.act_vec(&wj[i], &sparse::unit(a2, f)));
            for (c, z) in v {
                acc.add((j * r + i2) * n + c, z);
            }
        }
        acc.finish()
    });
    let mut prods = Vec::with_capacity(r * r);
    for kj in &kb {
        for kl in &kb {
            prods.push(coords(&m.hopf.mul(kj, kl))?);
        }
    }
    let mut alpha_mat = Mat::zeros(f, rows, d * d);
    for (col, v) in alpha.iter().enumerate() {
        for (row, x) in v {
            alpha_mat.set(*row, col, x.clone());
        }
    }
    if alpha_mat.rank() != rows {
        return Err(Error::Precondition("α is not surjective onto Hom(K⊗K, A)".into()));
    }
    let comult = (0..d)
        .map(|x| {
            let (i, a) = (x / n, x % n);
            let mut rhs = vec![f.zero(); rows];
            for (jl, c) in prods.iter().enumerate() {
                if let Some(z) = sparse::get(c, i) {
                    rhs[jl * n + a] = z.clone();
                }
            }
            alpha_mat
                .solve(&rhs)
                .map(|s| sparse::from_dense(&s))
                .ok_or_else(|| Error::Internal("φ∘m has no α-preimage".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let coring = ACoring::new(m.alg.clone(), d, left, right, comult, counit)?;
    let rel = coring.balancing()?;
    let alpha_map = |v: &SVec| {
        let mut acc = Acc::new();
        for (i, c) in v {
            acc.add_scaled(c, &alpha[*i]);
        }
        acc.finish()
    };
    if rel.reduced_rows().iter().any(|row| !alpha_map(row).is_empty()) {
        return Err(Error::Internal("α is not balanced over A".into()));
    }
    if d * d - rel.rank() != rows {
        return Err(Error::Precondition("α is not injective on Hom(K,A)⊗_A Hom(K,A)".into()));
    }
    Ok(coring)
}

/// `Hom(H, A)` for a domain `A` on which `H` acts through monomorphisms.
pub fn hom_coring(m: &ModuleAlgebra, cert: &MonoActionCert) -> Result<ACoring> {
    domain_check(&m.alg)?;
    cert.verify(m)?;
    hom_coring_on(m, &Subspace::full(m.field(), m.hopf.dim()))
}

/// `Map(G, E)` for `G` acting on `E` by automorphisms.
pub fn map_coring(g: &GroupTable, e: &ModuleAlgebra) -> Result<ACoring> {
    if e.hopf != group_algebra(g, e.field()) {
        return Err(Error::Input("the acting Hopf algebra is not k[G] for the given group".into()));
    }
    hom_coring_on(e, &Subspace::full(e.field(), g.order))
}

/// `can: A⊗_{base} A → Hom(K, A)`, `a⊗a' ↦ (k ↦ a(k·a'))`.
pub fn can_k(m: &ModuleAlgebra, k: &Subspace, base: &Subspace) -> Result<(CanReport, RelativeTensor, Vec<SVec>)> {
    let (n, f) = (m.dim(), m.field());
    let t = RelativeTensor::new(&m.alg, &Subspace::full(f, n), base)?;
    let kb = k.sparse_vectors();
    let cols: Vec<SVec> = par::map_range(t.dim(), |i| {
        let mut acc = Acc::new();
        for (p, c) in &t.lift(i) {
            for (j, kj) in kb.iter().enumerate() {
                let v = m.alg.mul(&sparse::unit(p / n, f), &m.act_vec(kj, &sparse::unit(p % n, f)));
                for (e, z) in v {
                    acc.add(j * n + e, c * &z);
                }
            }
        }
        acc.finish()
    });
    let rank = sparse_rank(f, kb.len() * n, &cols);
    Ok((CanReport::from_rank(t.dim(), kb.len() * n, rank), t, cols))
}

/// `E⊗_k E → Map(G, E)`, `e₁⊗e₂ ↦ (g ↦ e₁g(e₂))`, over the ground field.
pub fn field_ext_galois_check(m: &ModuleAlgebra) -> Result<CanReport> {
    let f = m.field();
    let ground = Subspace::span_sparse(f, m.dim(), std::slice::from_ref(&m.alg.unit));
    Ok(can_k(m, &Subspace::full(f, m.hopf.dim()), &ground)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoringCan {
    #[serde(flatten)]
    pub can: CanReport,
    /// `can` commutes with the comultiplications and counits.
    pub coring_morphism: bool,
    pub domain: DomainCertificate,
}

/// `can: A⊗_{A^H} A → Hom(H, A)` and its coring-morphism property.
pub fn coring_can(m: &ModuleAlgebra, cert: &MonoActionCert) -> Result<CoringCan> {
    let domain = domain_check(&m.alg)?;
    cert.verify(m)?;
    let f = m.field();
    let full = Subspace::full(f, m.hopf.dim());
    let hom = hom_coring_on(m, &full)?;
    let b = m.invariants(&full);
    let (sweedler, _) = sweedler_coring(&m.alg, &b)?;
    let (can, _, cols) = can_k(m, &full, &b)?;
    let coring_morphism = sweedler.is_morphism_to(&hom, &cols)?;
    Ok(CoringCan { can, coring_morphism, domain })
}

#[cfg(test)]
mod tests {
    use super::super::tests::quadratic;
    use super::*;
    use crate::builders::finite_field_ext;
    use crate::scalar::Field;

    /// `Q[x]/(x² − 2)` with `Z2` acting by `x ↦ ±x`.
    pub fn sign_module(sign: i64) -> ModuleAlgebra {
        let f = Field::Q;
        let a = quadratic(f, 2);
        let h = group_algebra(&GroupTable::cyclic(2), f);
        let action = vec![sparse::unit(0, f), sparse::unit(1, f), sparse::unit(0, f), sparse::scale(&sparse::unit(1, f), &f.int(sign))];
        ModuleAlgebra::new(a, h, action).unwrap()
    }

    #[test]
    fn domain_scans() {
        assert_eq!(domain_check(&quadratic(Field::Q, 2)).unwrap(), DomainCertificate::BasisScan);
        assert!(matches!(domain_check(&quadratic(Field::Q, 0)), Err(Error::ZeroDivisor(_))));
        let e = finite_field_ext(2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(domain_check(e.algebra()).unwrap(), DomainCertificate::Exhaustive);
        // x² − 1 = (x − 1)(x + 1) passes the basis scan but not the exhaustive one
        assert!(matches!(domain_check(&quadratic(Field::Fp(3), 1)), Err(Error::ZeroDivisor(_))));
    }

    #[test]
    fn hom_coring_of_quadratic_extension() {
        let m = sign_module(-1);
        let cert = MonoActionCert::standard(&m).unwrap();
        let k = hom_coring(&m, &cert).unwrap();
        assert_eq!(k.dim, 4);
        assert_eq!(k.balanced_dim().unwrap(), 8);
        let c = coring_can(&m, &cert).unwrap();
        assert!(c.can.bijective && c.coring_morphism);
        let t = coring_can(&sign_module(1), &cert).unwrap();
        assert!(!t.can.bijective && t.coring_morphism);
        assert_eq!((t.can.domain_dim, t.can.codomain_dim), (2, 4));
    }

    #[test]
    fn trivial_hopf_algebra_gives_a() {
        let f = Field::Q;
        let m = ModuleAlgebra::new(quadratic(f, 2), group_algebra(&GroupTable::trivial(), f), vec![sparse::unit(0, f), sparse::unit(1, f)]).unwrap();
        let k = hom_coring(&m, &MonoActionCert::standard(&m).unwrap()).unwrap();
        assert_eq!(k.dim, 2);
        assert_eq!(k.counit, vec![sparse::unit(0, f), sparse::unit(1, f)]);
    }

    #[test]
    fn mono_action_failure_has_witness() {
        let f = Field::Q;
        let a = quadratic(f, 2);
        let h = crate::builders::dual_group_algebra(&GroupTable::cyclic(2), f);
        // δ_e acts as the identity, δ_g as zero
        let action = vec![sparse::unit(0, f), sparse::unit(1, f), vec![], vec![]];
        let m = ModuleAlgebra::new(a, h, action).unwrap();
        assert!(matches!(MonoActionCert::standard(&m), Err(Error::NotMonoAction(_))));
    }

    #[test]
    fn map_coring_and_galois_checks() {
        for (p, poly, n) in [(2, vec![1, 1, 1], 2usize), (2, vec![1, 1, 0, 1], 3)] {
            let e = finite_field_ext(p, &poly).unwrap();
            let k = map_coring(&e.group, &e.module).unwrap();
            assert_eq!(k.dim, n * n);
            assert!(field_ext_galois_check(&e.module).unwrap().bijective);
            let c = coring_can(&e.module, &MonoActionCert::standard(&e.module).unwrap()).unwrap();
            assert!(c.can.bijective && c.coring_morphism);
            let ground = Subspace::span_sparse(e.field(), n, &[e.algebra().unit.clone()]);
            let (sw, _) = sweedler_coring(e.algebra(), &ground).unwrap();
            let (_, _, cols) = can_k(&e.module, &Subspace::full(e.field(), n), &ground).unwrap();
            assert!(sw.is_morphism_to(&k, &cols).unwrap());
        }
        let f = Field::Q;
        let nil = ModuleAlgebra::new(quadratic(f, 0), group_algebra(&GroupTable::trivial(), f), vec![sparse::unit(0, f), sparse::unit(1, f)]).unwrap();
        assert!(!field_ext_galois_check(&nil).unwrap().bijective);
    }
}
