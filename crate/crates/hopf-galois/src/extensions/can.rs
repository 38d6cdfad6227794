use serde::Serialize;

use super::tensor::{cotensor, RelativeTensor};
use super::{coinvariants, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::lattice::{FinitePoset, GaloisConn};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, sparse_rank, Subspace};
use crate::par;
use crate::subobjects::{close_coideal_subalgebra, h_coinvariants, k_plus_h, CoidealSubalgebra, GeneralizedQuotient};

/// Rank verdict for a linear map between finite-dimensional spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanReport {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

impl CanReport {
    pub fn from_rank(domain_dim: usize, codomain_dim: usize, rank: usize) -> CanReport {
        let injective = rank == domain_dim;
        let surjective = rank == codomain_dim;
        CanReport { domain_dim, codomain_dim, rank, injective, surjective, bijective: injective && surjective }
    }
}

/// `x⊗y ↦ x y₀ ⊗ π(y₁)` on a representative in `S⊗A`, with `π` given by sparse columns.
fn can_rep(a: &ComoduleAlgebra, t: &RelativeTensor, x: &SVec, pi: Option<(&[SVec], usize)>) -> SVec {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    let mut acc = Acc::new();
    for (p, c) in x {
        let l = &t.left_basis()[p / n];
        for (r, d) in &a.coaction[p % n] {
            let prod = a.alg.mul(l, &sparse::unit(r / m, f));
            let cd = c * d;
            match pi {
                None => {
                    for (i, z) in prod {
                        acc.add(i * m + r % m, &cd * &z);
                    }
                }
                Some((cols, qd)) => {
                    let right = &cols[r % m];
                    for (i, z) in &prod {
                        for (j, w) in right {
                            acc.add(i * qd + j, &(&cd * z) * w);
                        }
                    }
                }
            }
        }
    }
    acc.finish()
}

fn can_columns(a: &ComoduleAlgebra, t: &RelativeTensor, pi: Option<(&[SVec], usize)>) -> Vec<SVec> {
    par::map_range(t.dim(), |i| can_rep(a, t, &t.lift(i), pi))
}

fn check_coinvariant_subalgebra(a: &ComoduleAlgebra, b: &Subspace) -> Result<()> {
    let m = a.hopf.dim();
    if b.ambient() != a.dim() {
        return Err(Error::Dimension(format!("B lives in k^{}, A has dim {}", b.ambient(), a.dim())));
    }
    for (i, v) in b.sparse_vectors().iter().enumerate() {
        if a.delta(v) != sparse::tensor(v, a.hopf.unit(), m) {
            return Err(Error::Precondition(format!("basis vector {i} of B is not coinvariant: {v:?}")));
        }
    }
    if !a.alg.is_subalgebra(b) {
        return Err(Error::Precondition("B is not a unital subalgebra".into()));
    }
    Ok(())
}

/// `can: A⊗_B A → A⊗H`.
pub fn can_full(a: &ComoduleAlgebra, b: &Subspace) -> Result<CanReport> {
    check_coinvariant_subalgebra(a, b)?;
    let t = RelativeTensor::new(&a.alg, &Subspace::full(a.field(), a.dim()), b)?;
    can_full_on(a, &t)
}

/// `can` on an explicitly presented `A⊗_B A`.
pub fn can_full_on(a: &ComoduleAlgebra, t: &RelativeTensor) -> Result<CanReport> {
    let cod = a.dim() * a.hopf.dim();
    guard(cod)?;
    let cols = can_columns(a, t, None);
    Ok(CanReport::from_rank(t.dim(), cod, sparse_rank(a.field(), cod, &cols)))
}

/// `can_Q: A⊗_{A^{co Q}} A → A⊗Q`.
pub fn can_q(a: &ComoduleAlgebra, q: &GeneralizedQuotient) -> Result<CanReport> {
    let b = coinvariants(a, Some(q))?;
    let t = RelativeTensor::new(&a.alg, &Subspace::full(a.field(), a.dim()), &b)?;
    let cod = a.dim() * q.dim();
    guard(cod)?;
    let cols = can_columns(a, &t, Some((q.pi_columns(), q.dim())));
    Ok(CanReport::from_rank(t.dim(), cod, sparse_rank(a.field(), cod, &cols)))
}

/// `ψ(S) = H/K_S⁺H` with `K_S` the coideal subalgebra generated by the right
/// coefficients of `δ(S)`.
#[derive(Clone, Debug)]
pub struct Psi {
    pub coideal: CoidealSubalgebra,
    pub quotient: GeneralizedQuotient,
}

pub fn psi(a: &ComoduleAlgebra, s: &Subspace) -> Result<Psi> {
    let (n, m) = (a.dim(), a.hopf.dim());
    if s.ambient() != n {
        return Err(Error::Dimension(format!("S lives in k^{}, A has dim {n}", s.ambient())));
    }
    if !a.alg.is_subalgebra(s) {
        return Err(Error::Input("S is not a unital subalgebra".into()));
    }
    let coeffs: Vec<SVec> = s
        .sparse_vectors()
        .iter()
        .flat_map(|v| crate::hopf::coefficient_rows(&a.delta(v), n, m, false))
        .collect();
    let w = Subspace::span_sparse(a.field(), m, &coeffs);
    let coideal = close_coideal_subalgebra(&a.hopf, &w)?;
    let quotient = k_plus_h(&a.hopf, &coideal)?;
    Ok(Psi { coideal, quotient })
}

/// `φ(Q) = A^{co Q}`.
pub fn phi(a: &ComoduleAlgebra, q: &GeneralizedQuotient) -> Result<Subspace> {
    coinvariants(a, Some(q))
}

/// `can_S: S⊗_B A → A□_{ψ(S)}H` for `B = A^{co H}`.
pub fn can_s(a: &ComoduleAlgebra, s: &Subspace) -> Result<CanReport> {
    let b = coinvariants(a, None)?;
    if !s.contains(&b) {
        return Err(Error::Input("S does not contain the coinvariants".into()));
    }
    let p = psi(a, s)?;
    let cot = cotensor(a, &p.quotient)?;
    let t = RelativeTensor::new(&a.alg, s, &b)?;
    let cols = can_columns(a, &t, None);
    if let Some(i) = cols.iter().position(|c| !cot.contains_sparse(c)) {
        return Err(Error::Internal(format!("can_S leaves the cotensor at basis vector {i}")));
    }
    let rank = sparse_rank(a.field(), a.dim() * a.hopf.dim(), &cols);
    Ok(CanReport::from_rank(t.dim(), cot.dim(), rank))
}

/// `ψφ(Q) = Q`.
pub fn closed_q(a: &ComoduleAlgebra, q: &GeneralizedQuotient) -> Result<bool> {
    Ok(psi(a, &phi(a, q)?)?.quotient.ideal == q.ideal)
}

/// `φψ(S) = S`.
pub fn closed_s(a: &ComoduleAlgebra, s: &Subspace) -> Result<bool> {
    Ok(phi(a, &psi(a, s)?.quotient)? == *s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QCertificate {
    /// `can_full` over `A^{co H}` is bijective.
    pub a_galois: bool,
    pub q_galois: bool,
    pub closed: bool,
    /// `None` when the tensor presentation exceeds the dimension guard.
    pub delta_tensor_injective: Option<bool>,
    /// `q_galois ⇒ closed`, checked when `can_full` is surjective.
    pub galois_implies_closed: Option<bool>,
}

/// `x⊗y ↦ x₀y₀ ⊗ (x₁ ⊗_K y₁)` on `A⊗_{A^{co Q}}A → A⊗(H⊗_K H)`, `K = H^{co Q}`,
/// which is `δ⊗δ` followed by `(A⊗H)⊗_{A⊗K}(A⊗H) ≅ A⊗(H⊗_K H)`.
fn delta_tensor_injective(a: &ComoduleAlgebra, q: &GeneralizedQuotient, b: &Subspace) -> Result<bool> {
    let (n, m, f) = (a.dim(), a.hopf.dim(), a.field());
    let k = h_coinvariants(&a.hopf, q)?;
    let th = RelativeTensor::new(a.hopf.alg(), &Subspace::full(f, m), &k.space)?;
    let ta = RelativeTensor::new(&a.alg, &Subspace::full(f, n), b)?;
    let td = th.dim();
    let table: Vec<SVec> = par::map_range(m * m, |i| th.project(&sparse::unit(i, f)));
    let cols: Vec<SVec> = par::map_range(ta.dim(), |i| {
        let mut acc = Acc::new();
        for (p, c) in ta.lift(i) {
            let (x, y) = (p / n, p % n);
            for (r, d) in &a.coaction[x] {
                for (s, e) in &a.coaction[y] {
                    let prod = a.alg.mul_basis(r / m, s / m);
                    let right = &table[(r % m) * m + s % m];
                    let cde = &(&c * d) * e;
                    for (u, z) in prod {
                        for (v, w) in right {
                            acc.add(u * td + v, &(&cde * z) * w);
                        }
                    }
                }
            }
        }
        acc.finish()
    });
    Ok(sparse_rank(f, n * td, &cols) == ta.dim())
}

pub fn q_certificate(a: &ComoduleAlgebra, q: &GeneralizedQuotient) -> Result<QCertificate> {
    let b_h = coinvariants(a, None)?;
    let full = can_full(a, &b_h)?;
    let q_galois = can_q(a, q)?.bijective;
    let closed = closed_q(a, q)?;
    let b = phi(a, q)?;
    let delta_tensor_injective = match delta_tensor_injective(a, q, &b) {
        Ok(v) => Some(v),
        Err(Error::Guard { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(QCertificate {
        a_galois: full.bijective,
        q_galois,
        closed,
        delta_tensor_injective,
        galois_implies_closed: full.surjective.then_some(!q_galois || closed),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SCertificate {
    pub can_s: CanReport,
    pub closed: bool,
    /// For `H`-Galois `A`: `can_S` bijective ⇔ closed.
    pub agrees: Option<bool>,
}

pub fn s_certificate(a: &ComoduleAlgebra, s: &Subspace) -> Result<SCertificate> {
    let b = coinvariants(a, None)?;
    let galois = can_full(a, &b)?.bijective;
    let can_s = can_s(a, s)?;
    let closed = closed_s(a, s)?;
    let agrees = galois.then_some(can_s.bijective == closed);
    Ok(SCertificate { can_s, closed, agrees })
}

pub const CONNECTION_CAP: usize = 256;

/// The Galois connection `(φ, ψ)` restricted to candidate lists closed under both maps.
///
/// `P` holds quotients with `Q₁ ≤ Q₂ ⇔ I₂ ⊆ I₁`, `Q` holds subalgebras ordered by inclusion.
#[derive(Clone, Debug)]
pub struct ExtensionConnection {
    pub conn: GaloisConn,
    pub quots: Vec<GeneralizedQuotient>,
    pub subs: Vec<Subspace>,
    pub closed_quots: Vec<usize>,
    pub closed_subs: Vec<usize>,
}

pub fn extension_connection(
    a: &ComoduleAlgebra,
    subs: Vec<Subspace>,
    quots: Vec<GeneralizedQuotient>,
) -> Result<ExtensionConnection> {
    let mut subs: Vec<Subspace> = dedup(subs, |x, y| x == y);
    let mut quots = dedup(quots, |x, y| x.ideal == y.ideal);
    let (mut phi_map, mut psi_map) = (Vec::new(), Vec::new());
    loop {
        let mut grew = false;
        while phi_map.len() < quots.len() {
            let s = phi(a, &quots[phi_map.len()])?;
            let idx = subs.iter().position(|x| *x == s).unwrap_or_else(|| {
                subs.push(s);
                grew = true;
                subs.len() - 1
            });
            phi_map.push(idx);
        }
        while psi_map.len() < subs.len() {
            let q = psi(a, &subs[psi_map.len()])?.quotient;
            let idx = quots.iter().position(|x| x.ideal == q.ideal).unwrap_or_else(|| {
                quots.push(q);
                grew = true;
                quots.len() - 1
            });
            psi_map.push(idx);
        }
        if subs.len() > CONNECTION_CAP || quots.len() > CONNECTION_CAP {
            return Err(Error::EnumerationCap(CONNECTION_CAP));
        }
        if !grew && phi_map.len() == quots.len() {
            break;
        }
    }
    let qlabels = (0..quots.len()).map(|i| format!("Q{i}")).collect();
    let p = FinitePoset::from_fn(qlabels, |x, y| quots[x].ideal.space.contains(&quots[y].ideal.space))?;
    let slabels = (0..subs.len()).map(|i| format!("S{i}")).collect();
    let q = FinitePoset::from_fn(slabels, |x, y| subs[y].contains(&subs[x]))?;
    let conn = GaloisConn::new(p, q, phi_map, psi_map)?;
    let (closed_quots, closed_subs) = conn.closed_elements();
    Ok(ExtensionConnection { conn, quots, subs, closed_quots, closed_subs })
}

fn dedup<T>(xs: Vec<T>, eq: impl Fn(&T, &T) -> bool) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for x in xs {
        if !out.iter().any(|y| eq(y, &x)) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::tests::graded;
    use super::*;
    use crate::builders::{circle, circle_hopf, group_algebra, GroupTable};
    use crate::scalar::Field;
    use crate::subobjects::{group_subobjects, RightIdealCoideal};

    #[test]
    fn regular_extension_is_galois() {
        let h = circle_hopf(Field::Q).unwrap();
        let a = ComoduleAlgebra::regular(&h);
        let b = coinvariants(&a, None).unwrap();
        let r = can_full(&a, &b).unwrap();
        assert!(r.bijective);
        assert_eq!((r.domain_dim, r.rank), (64, 64));
    }

    #[test]
    fn strongly_graded_iff_bijective() {
        for (l, ok) in [(1, true), (0, false)] {
            let a = graded(l);
            let b = coinvariants(&a, None).unwrap();
            let r = can_full(&a, &b).unwrap();
            assert_eq!(r.bijective, ok);
            if !ok {
                assert!(!r.surjective);
            }
        }
    }

    #[test]
    fn non_coinvariant_base_is_a_precondition_error() {
        let a = graded(1);
        let err = can_full(&a, &Subspace::full(Field::Q, 2)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn psi_extremes() {
        let h = circle_hopf(Field::Q).unwrap();
        let a = ComoduleAlgebra::regular(&h);
        let top = psi(&a, &Subspace::full(Field::Q, 8)).unwrap();
        assert_eq!((top.coideal.dim(), top.quotient.dim()), (8, 1));
        let b = coinvariants(&a, None).unwrap();
        let bottom = psi(&a, &b).unwrap();
        assert_eq!((bottom.coideal.dim(), bottom.quotient.dim()), (1, 8));
        let bad = Subspace::span_sparse(Field::Q, 8, &[sparse::unit(circle::C, Field::Q)]);
        assert!(matches!(psi(&a, &bad).unwrap_err(), Error::Input(_)));
    }

    #[test]
    fn regular_closedness_matches_can_q() {
        let g = GroupTable::s3();
        let h = group_algebra(&g, Field::Q);
        let a = ComoduleAlgebra::regular(&h);
        let subs = group_subobjects(&g, Field::Q).unwrap();
        for ideal in subs.group_algebra_ideals {
            let q = GeneralizedQuotient::new(&h, RightIdealCoideal::new(&h, ideal).unwrap()).unwrap();
            let c = q_certificate(&a, &q).unwrap();
            assert!(c.a_galois && c.q_galois && c.closed);
            assert_eq!(c.delta_tensor_injective, Some(true));
            assert_eq!(c.galois_implies_closed, Some(true));
        }
    }

    #[test]
    fn graded_connection_matches_subgroup_sums() {
        let a = graded(1);
        let h = a.hopf.clone();
        let subs = group_subobjects(&GroupTable::cyclic(2), Field::Q).unwrap();
        let quots: Vec<_> = subs
            .group_algebra_ideals
            .iter()
            .map(|i| GeneralizedQuotient::new(&h, RightIdealCoideal::new(&h, i.clone()).unwrap()).unwrap())
            .collect();
        let ec = extension_connection(&a, vec![], quots).unwrap();
        assert!(ec.conn.is_adjoint());
        let trivial = Subspace::coordinate(Field::Q, 2, &[0]);
        assert_eq!(ec.subs[ec.conn.phi[0]], trivial);
        assert_eq!(ec.subs[ec.conn.phi[1]], Subspace::full(Field::Q, 2));
        assert_eq!(ec.closed_quots.len(), 2);
    }

    #[test]
    fn can_s_extremes() {
        let a = graded(1);
        let b = coinvariants(&a, None).unwrap();
        let r = can_s(&a, &b).unwrap();
        assert!(r.bijective);
        let r = can_s(&a, &Subspace::full(Field::Q, 2)).unwrap();
        assert!(r.bijective);
        assert_eq!(r.codomain_dim, 4);
        let c = s_certificate(&a, &b).unwrap();
        assert!(c.closed && c.agrees == Some(true));
    }
}
