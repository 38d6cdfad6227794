use serde::Serialize;

use super::{
    is_coideal, is_ideal, is_left_coideal, is_left_ideal, is_right_coideal, is_right_ideal,
    is_subalgebra, is_subcoalgebra, GeneralizedQuotient, RightIdealCoideal,
};
use crate::error::{Error, Result};
use crate::hopf::{dual_hopf, HopfAlgebra};
use crate::linalg::Subspace;

/// Kinds of subspace exchanged by `X ↦ X^⊥`.
///
/// With `(fg)(x) = f(x₁)g(x₂)` on `H*`, left coideals pair with left ideals,
/// right coideals with right ideals, coideals with subalgebras and
/// subcoalgebras with ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Subalgebra,
    LeftIdeal,
    RightIdeal,
    Ideal,
    Subcoalgebra,
    LeftCoideal,
    RightCoideal,
    Coideal,
    LeftCoidealSubalgebra,
    RightCoidealSubalgebra,
    LeftIdealCoideal,
    RightIdealCoideal,
}

impl Shape {
    pub fn perp(self) -> Shape {
        use Shape::*;
        match self {
            Subalgebra => Coideal,
            Coideal => Subalgebra,
            LeftIdeal => LeftCoideal,
            LeftCoideal => LeftIdeal,
            RightIdeal => RightCoideal,
            RightCoideal => RightIdeal,
            Ideal => Subcoalgebra,
            Subcoalgebra => Ideal,
            LeftCoidealSubalgebra => LeftIdealCoideal,
            LeftIdealCoideal => LeftCoidealSubalgebra,
            RightCoidealSubalgebra => RightIdealCoideal,
            RightIdealCoideal => RightCoidealSubalgebra,
        }
    }

    pub fn holds(self, h: &HopfAlgebra, s: &Subspace) -> bool {
        use Shape::*;
        let (a, c) = (h.alg(), h.coalg());
        match self {
            Subalgebra => is_subalgebra(a, s),
            LeftIdeal => is_left_ideal(a, s),
            RightIdeal => is_right_ideal(a, s),
            Ideal => is_ideal(a, s),
            Subcoalgebra => is_subcoalgebra(c, s),
            LeftCoideal => is_left_coideal(c, s),
            RightCoideal => is_right_coideal(c, s),
            Coideal => is_coideal(c, s),
            LeftCoidealSubalgebra => is_left_coideal(c, s) && is_subalgebra(a, s),
            RightCoidealSubalgebra => is_right_coideal(c, s) && is_subalgebra(a, s),
            LeftIdealCoideal => is_left_ideal(a, s) && is_coideal(c, s),
            RightIdealCoideal => is_right_ideal(a, s) && is_coideal(c, s),
        }
    }
}

/// `X^⊥ ⊆ H*` on the dual basis, checked to have shape `shape.perp()`.
///
/// Since the double dual is `H` in the same coordinates, applying this to
/// `dual_hopf(h)` transports back.
pub fn perp_transport(h: &HopfAlgebra, x: &Subspace, shape: Shape) -> Result<(Subspace, Shape)> {
    if x.ambient() != h.dim() {
        return Err(Error::Dimension(format!(
            "subspace of k^{} in H of dim {}",
            x.ambient(),
            h.dim()
        )));
    }
    let dual = dual_hopf(h)?;
    let y = x.annihilator();
    let target = shape.perp();
    if !target.holds(&dual, &y) {
        return Err(Error::TransportViolation(format!(
            "annihilator of a {shape:?} (dim {}) is not a {target:?} of the dual",
            x.dim()
        )));
    }
    Ok((y, target))
}

/// `H*/K^⊥` for a right coideal subalgebra `K ⊆ H`, a generalized quotient of `H*`.
pub fn dual_quotient(h: &HopfAlgebra, k: &Subspace) -> Result<GeneralizedQuotient> {
    let (y, _) = perp_transport(h, k, Shape::RightCoidealSubalgebra)?;
    let dual = dual_hopf(h)?;
    GeneralizedQuotient::new(&dual, RightIdealCoideal { space: y })
}
