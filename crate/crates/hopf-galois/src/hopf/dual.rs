use super::{AlgebraStr, CoalgebraStr, HopfAlgebra};
use crate::error::Result;
use crate::linalg::sparse::{self, Acc};

/// The dual Hopf algebra on the dual basis `f_i` (same index order).
///
/// `f_i f_j = Σ_k Δ_k^{ij} f_k`, unit `ε`, `Δ(f_k) = Σ m_{ij}^k f_i⊗f_j`,
/// counit `f_i ↦ unit_i`, antipode `Sᵀ`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    h.antipode_inverse()?;
    let (n, f) = (h.dim(), h.field());
    let mut mult: Vec<Acc> = (0..n * n).map(|_| Acc::new()).collect();
    for (k, d) in h.coalg().comult.iter().enumerate() {
        for (p, x) in d {
            mult[*p].add(k, x.clone());
        }
    }
    let mut comult: Vec<Acc> = (0..n).map(|_| Acc::new()).collect();
    for (p, prod) in h.alg().mult.iter().enumerate() {
        for (k, x) in prod {
            comult[*k].add(p, x.clone());
        }
    }
    let alg = AlgebraStr::new(
        f,
        n,
        mult.into_iter().map(Acc::finish).collect(),
        sparse::from_dense(&h.coalg().counit),
    )?;
    let counit = sparse::to_dense(h.unit(), n, f);
    let coalg = CoalgebraStr::new(f, n, comult.into_iter().map(Acc::finish).collect(), counit)?;
    HopfAlgebra::new(alg, coalg, h.antipode.transpose())
}

/// `H^op`: reversed multiplication, same comultiplication, antipode `S⁻¹`.
pub fn opposite(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let s_inv = h.antipode_inverse()?;
    HopfAlgebra::new(h.alg().opposite(), h.coalg().clone(), s_inv)
}
