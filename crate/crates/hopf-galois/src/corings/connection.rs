use serde::Serialize;

use super::hom::{can_k, domain_check, hom_coring_on, MonoActionCert};
use crate::error::{Error, Result};
use crate::extensions::{CanReport, ModuleAlgebra};
use crate::hopf::HopfAlgebra;
use crate::lattice::{FinitePoset, GaloisConn};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{kernel_of_columns, Echelon, Subspace};
use crate::par;
use crate::subobjects::is_right_coideal;

/// Largest number of elements on either side of a connection.
const CONNECTION_CAP: usize = 256;

/// Least right coideal subalgebra of `H` containing `seed`.
pub fn close_right_coideal_subalgebra(h: &HopfAlgebra, seed: &Subspace) -> Subspace {
    let mut ech = Echelon::new(h.field(), h.dim());
    let mut basis: Vec<SVec> = Vec::new();
    let mut queue: Vec<SVec> = seed.sparse_vectors();
    queue.push(h.unit().clone());
    queue.reverse();
    while let Some(v) = queue.pop() {
        if !ech.insert(&v) {
            continue;
        }
        queue.extend(h.coalg().left_coefficients(&v));
        for w in basis.iter().chain(std::iter::once(&v)) {
            queue.push(h.mul(&v, w));
            queue.push(h.mul(w, &v));
        }
        basis.push(v);
    }
    ech.to_subspace()
}

/// `Ψ(S) = H ∩ Cent_{A#H}(S#1)`: all `k` with `(k₁·s)#k₂ = s#k` for `s ∈ S`.
pub fn psi_centralizer(m: &ModuleAlgebra, s: &Subspace) -> Result<Subspace> {
    let (n, dh, f) = (m.dim(), m.hopf.dim(), m.field());
    let ss = s.sparse_vectors();
    let cols: Vec<SVec> = par::map_range(dh, |k| {
        let mut acc = Acc::new();
        for (j, x) in ss.iter().enumerate() {
            let base = j * n * dh;
            for (p, c) in &m.hopf.delta(&sparse::unit(k, f)) {
                for (a, z) in m.act(p / dh, x) {
                    acc.add(base + a * dh + p % dh, c * &z);
                }
            }
            for (a, z) in x {
                acc.add(base + a * dh + k, -z);
            }
        }
        acc.finish()
    });
    let k = kernel_of_columns(f, ss.len() * n * dh, &cols);
    if !m.hopf.alg().is_subalgebra(&k) || !is_right_coideal(m.hopf.coalg(), &k) {
        return Err(Error::Internal("Ψ(S) is not a right coideal subalgebra".into()));
    }
    Ok(k)
}

/// `(Φ, Ψ)` between right coideal subalgebras of `H` and subalgebras of `A`.
///
/// `P` holds coideal subalgebras and `Q` subalgebras, both ordered by inclusion;
/// the candidate lists are extended until both maps land inside them.
#[derive(Clone, Debug)]
pub struct ModuleConnection {
    pub conn: GaloisConn,
    pub ks: Vec<Subspace>,
    pub subs: Vec<Subspace>,
    pub closed_ks: Vec<usize>,
    pub closed_subs: Vec<usize>,
}

pub fn module_algebra_connection(m: &ModuleAlgebra, subs: Vec<Subspace>, ks: Vec<Subspace>) -> Result<ModuleConnection> {
    let mut ks = dedup(ks);
    let mut subs = dedup(subs);
    if let Some(i) = ks.iter().position(|k| !m.hopf.alg().is_subalgebra(k) || !is_right_coideal(m.hopf.coalg(), k)) {
        return Err(Error::Condition { name: "right coideal subalgebra".into(), witness: vec![i] });
    }
    if let Some(i) = subs.iter().position(|s| !m.alg.is_subalgebra(s)) {
        return Err(Error::Condition { name: "subalgebra".into(), witness: vec![i] });
    }
    let (mut phi, mut psi) = (Vec::new(), Vec::new());
    loop {
        let mut grew = false;
        while phi.len() < ks.len() {
            phi.push(insert(&mut subs, m.invariants(&ks[phi.len()]), &mut grew));
        }
        while psi.len() < subs.len() {
            psi.push(insert(&mut ks, psi_centralizer(m, &subs[psi.len()])?, &mut grew));
        }
        if ks.len() > CONNECTION_CAP || subs.len() > CONNECTION_CAP {
            return Err(Error::EnumerationCap(CONNECTION_CAP));
        }
        if !grew && phi.len() == ks.len() {
            break;
        }
    }
    let p = FinitePoset::from_fn((0..ks.len()).map(|i| format!("K{i}")).collect(), |x, y| ks[y].contains(&ks[x]))?;
    let q = FinitePoset::from_fn((0..subs.len()).map(|i| format!("S{i}")).collect(), |x, y| subs[y].contains(&subs[x]))?;
    let conn = GaloisConn::new(p, q, phi, psi)?;
    let (closed_ks, closed_subs) = conn.closed_elements();
    Ok(ModuleConnection { conn, ks, subs, closed_ks, closed_subs })
}

fn insert(xs: &mut Vec<Subspace>, x: Subspace, grew: &mut bool) -> usize {
    xs.iter().position(|y| *y == x).unwrap_or_else(|| {
        xs.push(x);
        *grew = true;
        xs.len() - 1
    })
}

fn dedup(xs: Vec<Subspace>) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    for x in xs {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// One coideal subalgebra `K` and its quotient coring `Hom(K, A) = Hom(H, A)/J_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportEntry {
    pub k_dim: usize,
    /// `dim J_K`, `J_K = K^⊥⊗A`.
    pub kernel_dim: usize,
    /// `dim A^K`.
    pub phi_dim: usize,
    /// `ΨΦ(K) = K`.
    pub closed: bool,
    /// `A⊗_{A^K} A → Hom(K, A)`.
    pub can: CanReport,
    /// `can_K` bijective implies `K` closed.
    pub certified: bool,
    /// `Hom(K, A)` passed the coring verifier; `None` when it exceeds the dimension cap.
    pub coring_verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoringTransport {
    pub entries: Vec<TransportEntry>,
    /// `J_{K₁∩K₂} = J_{K₁} + J_{K₂}` whenever `K₁∩K₂` is a candidate.
    pub meets_preserved: bool,
    /// Distinct candidates give distinct quotient corings.
    pub injective: bool,
    /// `A^K = A^{K'}` with both `can` maps bijective forces `K = K'`.
    pub mono_coring: bool,
}

/// `K ↦ Hom(K, A)` on candidate right coideal subalgebras, with closedness certificates.
pub fn coring_connection_transport(m: &ModuleAlgebra, cert: &MonoActionCert, candidates: &[Subspace]) -> Result<CoringTransport> {
    domain_check(&m.alg)?;
    cert.verify(m)?;
    let (n, dh, f) = (m.dim(), m.hopf.dim(), m.field());
    let ks = dedup(candidates.to_vec());
    let j_of = |k: &Subspace| -> Subspace {
        let vs: Vec<SVec> = k
            .annihilator()
            .sparse_vectors()
            .iter()
            .flat_map(|v| (0..n).map(move |a| v.iter().map(|(h, c)| (h * n + a, c.clone())).collect::<SVec>()))
            .collect();
        Subspace::span_sparse(f, dh * n, &vs)
    };
    let js: Vec<Subspace> = ks.iter().map(j_of).collect();
    let mut entries = Vec::with_capacity(ks.len());
    let mut phis = Vec::with_capacity(ks.len());
    for k in &ks {
        if !m.hopf.alg().is_subalgebra(k) || !is_right_coideal(m.hopf.coalg(), k) {
            return Err(Error::Input("candidate is not a right coideal subalgebra".into()));
        }
        let phi = m.invariants(k);
        let closed = psi_centralizer(m, &phi)? == *k;
        let (can, _, _) = can_k(m, k, &phi)?;
        let coring_verified = match hom_coring_on(m, k) {
            Ok(_) => Some(true),
            Err(Error::Guard { .. }) => None,
            Err(Error::Precondition(_) | Error::Condition { .. }) => Some(false),
            Err(e) => return Err(e),
        };
        entries.push(TransportEntry {
            k_dim: k.dim(),
            kernel_dim: (dh - k.dim()) * n,
            phi_dim: phi.dim(),
            closed,
            certified: !can.bijective || closed,
            can,
            coring_verified,
        });
        phis.push(phi);
    }
    let mut meets_preserved = true;
    let mut injective = true;
    let mut mono_coring = true;
    for i in 0..ks.len() {
        for j in i + 1..ks.len() {
            injective &= js[i] != js[j];
            if entries[i].can.bijective && entries[j].can.bijective && phis[i] == phis[j] {
                mono_coring = false;
            }
            let meet = ks[i].intersect(&ks[j])?;
            if let Some(l) = ks.iter().position(|k| *k == meet) {
                meets_preserved &= js[l] == js[i].sum(&js[j])?;
            }
        }
    }
    Ok(CoringTransport { entries, meets_preserved, injective, mono_coring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{finite_field_ext, paper_example, GroupTable};

    fn subgroup_span(g: &GroupTable, f: crate::scalar::Field, elems: &[usize]) -> Subspace {
        Subspace::span_sparse(f, g.order, &elems.iter().map(|&x| sparse::unit(x, f)).collect::<Vec<_>>())
    }

    #[test]
    fn example_round_trip() {
        let ex = paper_example().unwrap();
        let m = &ex.module;
        let f = m.field();
        let full = Subspace::full(f, m.hopf.dim());
        assert_eq!(m.invariants(&full), ex.b);
        assert_eq!(psi_centralizer(m, &ex.b).unwrap(), full);
        let c = module_algebra_connection(m, vec![ex.b.clone()], vec![]).unwrap();
        assert!(c.conn.law_failures().is_empty());
        let bi = c.subs.iter().position(|s| *s == ex.b).unwrap();
        assert!(c.closed_subs.contains(&bi));
    }

    #[test]
    fn trivial_subalgebra() {
        let ex = paper_example().unwrap();
        let m = &ex.module;
        let f = m.field();
        let one = Subspace::span_sparse(f, m.hopf.dim(), &[m.hopf.unit().clone()]);
        assert_eq!(m.invariants(&one).dim(), m.dim());
        let psi_a = psi_centralizer(m, &Subspace::full(f, m.dim())).unwrap();
        assert!(psi_a.contains(&one));
    }

    #[test]
    fn fixed_field_centralizer() {
        let e = finite_field_ext(2, &[1, 1, 1]).unwrap();
        let f = e.field();
        let psi = psi_centralizer(&e.module, &e.fixed_field()).unwrap();
        assert_eq!(psi, Subspace::full(f, 2));
        let psi_e = psi_centralizer(&e.module, &Subspace::full(f, 2)).unwrap();
        assert_eq!(psi_e, subgroup_span(&e.group, f, &[0]));
    }

    #[test]
    fn right_coideal_closure() {
        let ex = paper_example().unwrap();
        let h = &ex.module.hopf;
        let f = h.field();
        let seed = Subspace::span_sparse(f, h.dim(), &[sparse::unit(crate::builders::circle::C, f)]);
        let k = close_right_coideal_subalgebra(h, &seed);
        assert!(is_right_coideal(h.coalg(), &k) && h.alg().is_subalgebra(&k));
        assert!(k.dim() >= 3);
    }

    #[test]
    fn gf16_transport() {
        let e = finite_field_ext(2, &[1, 1, 0, 0, 1]).unwrap();
        let f = e.field();
        let g = &e.group;
        let ks = vec![subgroup_span(g, f, &[0]), subgroup_span(g, f, &[0, 2]), subgroup_span(g, f, &[0, 1, 2, 3])];
        let cert = MonoActionCert::standard(&e.module).unwrap();
        let t = coring_connection_transport(&e.module, &cert, &ks).unwrap();
        assert!(t.meets_preserved && t.injective && t.mono_coring);
        let dims: Vec<_> = t.entries.iter().map(|x| (x.k_dim, x.phi_dim, x.kernel_dim)).collect();
        assert_eq!(dims, vec![(1, 4, 12), (2, 2, 8), (4, 1, 0)]);
        for x in &t.entries {
            assert!(x.closed && x.can.bijective && x.certified);
            assert_eq!(x.coring_verified, Some(true));
        }
        let c = module_algebra_connection(&e.module, vec![], ks).unwrap();
        assert_eq!((c.ks.len(), c.subs.len()), (3, 3));
        assert_eq!(c.closed_ks.len(), 3);
    }

    #[test]
    fn left_only_candidate_rejected() {
        let e = finite_field_ext(2, &[1, 1, 1]).unwrap();
        let f = e.field();
        let bad = Subspace::span_sparse(f, 2, &[sparse::unit(1, f)]);
        assert!(matches!(module_algebra_connection(&e.module, vec![], vec![bad]), Err(Error::Condition { .. })));
    }
}
