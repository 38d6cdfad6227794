use serde::Serialize;

use super::{CompleteLattice, FinitePoset};
use crate::error::{Error, Result};

/// Antitone maps `phi: P → Q`, `psi: Q → P` with `p ≤ ψφ(p)` and `q ≤ φψ(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisConn {
    pub p: FinitePoset,
    pub q: FinitePoset,
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adjoint {
    Conn(GaloisConn),
    /// `phi` does not send the supremum of `witness` to the infimum of its image.
    NotReflected {
        witness: Vec<usize>,
    },
}

fn antitone_witness(a: &FinitePoset, b: &FinitePoset, f: &[usize]) -> Option<(usize, usize)> {
    (0..a.len())
        .flat_map(|i| (0..a.len()).map(move |j| (i, j)))
        .find(|&(i, j)| a.le(i, j) && !b.le(f[j], f[i]))
}

impl GaloisConn {
    pub fn new(
        p: FinitePoset,
        q: FinitePoset,
        phi: Vec<usize>,
        psi: Vec<usize>,
    ) -> Result<GaloisConn> {
        if phi.len() != p.len() || psi.len() != q.len() {
            return Err(Error::Dimension("maps do not match the posets".into()));
        }
        if phi.iter().any(|&x| x >= q.len()) || psi.iter().any(|&x| x >= p.len()) {
            return Err(Error::Input("map value out of range".into()));
        }
        let cond = |name: &str, w: (usize, usize)| Error::Condition {
            name: name.into(),
            witness: vec![w.0, w.1],
        };
        if let Some(w) = antitone_witness(&p, &q, &phi) {
            return Err(cond("phi antitone", w));
        }
        if let Some(w) = antitone_witness(&q, &p, &psi) {
            return Err(cond("psi antitone", w));
        }
        if let Some(i) = (0..p.len()).find(|&i| !p.le(i, psi[phi[i]])) {
            return Err(cond("p <= psi(phi(p))", (i, psi[phi[i]])));
        }
        if let Some(j) = (0..q.len()).find(|&j| !q.le(j, phi[psi[j]])) {
            return Err(cond("q <= phi(psi(q))", (j, phi[psi[j]])));
        }
        Ok(GaloisConn { p, q, phi, psi })
    }

    /// Fixed points of `ψφ` in `P` and of `φψ` in `Q`.
    pub fn closed_elements(&self) -> (Vec<usize>, Vec<usize>) {
        let cp = (0..self.p.len())
            .filter(|&i| self.psi[self.phi[i]] == i)
            .collect();
        let cq = (0..self.q.len())
            .filter(|&j| self.phi[self.psi[j]] == j)
            .collect();
        (cp, cq)
    }

    /// `φ(p) ≥ q ⇔ p ≤ ψ(q)` for all pairs.
    pub fn is_adjoint(&self) -> bool {
        (0..self.p.len()).all(|i| {
            (0..self.q.len()).all(|j| self.q.le(j, self.phi[i]) == self.p.le(i, self.psi[j]))
        })
    }

    /// Names of the failed identities among `φψφ = φ`, `ψφψ = ψ` and the closed-set bijection.
    pub fn law_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if (0..self.p.len()).any(|i| self.phi[self.psi[self.phi[i]]] != self.phi[i]) {
            out.push("phi psi phi = phi");
        }
        if (0..self.q.len()).any(|j| self.psi[self.phi[self.psi[j]]] != self.psi[j]) {
            out.push("psi phi psi = psi");
        }
        let (cp, cq) = self.closed_elements();
        let mut image: Vec<usize> = cp.iter().map(|&i| self.phi[i]).collect();
        image.sort_unstable();
        if image != cq || cq.iter().any(|&j| !cp.contains(&self.psi[j])) {
            out.push("closed sets in bijection");
        }
        if !self.is_adjoint() {
            out.push("adjointness");
        }
        out
    }
}

/// Builds `ψ(q) = ⋁{p : φ(p) ≥ q}` and checks that it is a right adjoint.
pub fn adjoint_from(phi: &[usize], p: &CompleteLattice, q: &FinitePoset) -> Result<Adjoint> {
    if phi.len() != p.len() || phi.iter().any(|&x| x >= q.len()) {
        return Err(Error::Dimension("phi does not map P into Q".into()));
    }
    if let Some((i, j)) = antitone_witness(&p.poset, q, phi) {
        return Err(Error::Condition {
            name: "phi antitone".into(),
            witness: vec![i, j],
        });
    }
    let mut psi = Vec::with_capacity(q.len());
    for j in 0..q.len() {
        let pj: Vec<usize> = (0..p.len()).filter(|&i| q.le(j, phi[i])).collect();
        let s = p.sup(&pj);
        if !q.le(j, phi[s]) {
            return Ok(Adjoint::NotReflected { witness: pj });
        }
        psi.push(s);
    }
    GaloisConn::new(p.poset.clone(), q.clone(), phi.to_vec(), psi).map(Adjoint::Conn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::tests::{diamond, five};

    fn conn(a: Adjoint) -> GaloisConn {
        match a {
            Adjoint::Conn(c) => c,
            other => panic!("expected a connection, got {other:?}"),
        }
    }

    #[test]
    fn chain_into_diamond() {
        // P = {0 < x < 1}, Q = {0 < a, b < 1}
        let p = CompleteLattice::new(FinitePoset::chain(3)).unwrap();
        let q = diamond().poset;
        let g = conn(adjoint_from(&[3, 1, 0], &p, &q).unwrap());
        assert_eq!(g.psi, vec![2, 1, 0, 0]);
        assert_eq!(g.closed_elements(), (vec![0, 1, 2], vec![0, 1, 3]));
        assert!(g.law_failures().is_empty());
    }

    #[test]
    fn flip_of_two_chain_is_self_adjoint() {
        let p = CompleteLattice::new(FinitePoset::chain(2)).unwrap();
        let g = conn(adjoint_from(&[1, 0], &p, &p.poset).unwrap());
        assert_eq!(g.psi, vec![1, 0]);
        assert_eq!(g.closed_elements(), (vec![0, 1], vec![0, 1]));
    }

    #[test]
    fn unreflected_supremum_is_reported() {
        // a, b ↦ 1 but a ∨ b ↦ 0
        let p = diamond();
        let q = FinitePoset::chain(2);
        let out = adjoint_from(&[1, 1, 1, 0], &p, &q).unwrap();
        assert_eq!(
            out,
            Adjoint::NotReflected {
                witness: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn non_antitone_map_is_an_input_error() {
        let p = CompleteLattice::new(FinitePoset::chain(2)).unwrap();
        let err = adjoint_from(&[0, 1], &p, &p.poset).unwrap_err();
        assert_eq!(
            err,
            Error::Condition {
                name: "phi antitone".into(),
                witness: vec![0, 1]
            }
        );
    }

    #[test]
    fn identity_order_reversal_on_m3() {
        let m3 = five(false);
        let dual = m3.poset.dual();
        let g = conn(adjoint_from(&[0, 1, 2, 3, 4], &m3, &dual).unwrap());
        let (cp, cq) = g.closed_elements();
        assert_eq!((cp.len(), cq.len()), (5, 5));
    }
}
