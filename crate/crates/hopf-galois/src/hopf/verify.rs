use serde::Serialize;

use super::{AlgebraStr, Bialgebra, CoalgebraStr, HopfAlgebra};
use crate::error::Result;
use crate::linalg::sparse::{self, Acc, SVec};
use crate::par;

/// What to verify.
#[derive(Clone, Copy, Debug)]
pub enum Structure<'a> {
    Algebra(&'a AlgebraStr),
    Coalgebra(&'a CoalgebraStr),
    Bialgebra(&'a Bialgebra),
    Hopf(&'a HopfAlgebra),
}

/// A failed axiom together with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl StructureReport {
    fn from(violations: Vec<Violation>) -> StructureReport {
        StructureReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

fn v(axiom: &'static str, witness: Vec<usize>) -> Violation {
    Violation { axiom, witness }
}

/// Checks every axiom on every basis tuple and reports all violations.
pub fn verify_structure(s: Structure<'_>) -> Result<StructureReport> {
    let out = match s {
        Structure::Algebra(a) => algebra_violations(a),
        Structure::Coalgebra(c) => coalgebra_violations(c),
        Structure::Bialgebra(b) => {
            let b = Bialgebra::new(b.alg.clone(), b.coalg.clone())?;
            bialgebra_violations(&b)
        }
        Structure::Hopf(h) => {
            let b = Bialgebra::new(h.bi.alg.clone(), h.bi.coalg.clone())?;
            let mut out = bialgebra_violations(&b);
            out.extend(antipode_violations(h));
            out
        }
    };
    Ok(StructureReport::from(out))
}

pub(crate) fn algebra_violations(a: &AlgebraStr) -> Vec<Violation> {
    let n = a.dim;
    let f = a.field;
    let mut out: Vec<Violation> = par::map_range(n, |i| {
        let mut bad = Vec::new();
        for j in 0..n {
            let ij = a.mul_basis(i, j);
            for k in 0..n {
                let left = a.mul(ij, &sparse::unit(k, f));
                let right = a.mul(&sparse::unit(i, f), a.mul_basis(j, k));
                if left != right {
                    bad.push(v("associativity", vec![i, j, k]));
                }
            }
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect();
    for i in 0..n {
        let e = sparse::unit(i, f);
        if a.mul(&a.unit, &e) != e {
            out.push(v("left unit", vec![i]));
        }
        if a.mul(&e, &a.unit) != e {
            out.push(v("right unit", vec![i]));
        }
    }
    out
}

fn eps_left(c: &CoalgebraStr, t: &SVec) -> SVec {
    let n = c.dim;
    let mut acc = Acc::new();
    for (p, x) in t {
        acc.add(p % n, &c.counit[p / n] * x);
    }
    acc.finish()
}

fn eps_right(c: &CoalgebraStr, t: &SVec) -> SVec {
    let n = c.dim;
    let mut acc = Acc::new();
    for (p, x) in t {
        acc.add(p / n, &c.counit[p % n] * x);
    }
    acc.finish()
}

/// `(id⊗Δ)Δ(e_i)` in `k^{dim³}`.
pub(crate) fn delta2_right(c: &CoalgebraStr, i: usize) -> SVec {
    let n = c.dim;
    let mut acc = Acc::new();
    for (p, x) in &c.comult[i] {
        for (q, y) in &c.comult[p % n] {
            acc.add((p / n) * n * n + q, x * y);
        }
    }
    acc.finish()
}

pub(crate) fn coalgebra_violations(c: &CoalgebraStr) -> Vec<Violation> {
    let n = c.dim;
    let f = c.field;
    par::map_range(n, |i| {
        let mut bad = Vec::new();
        if c.delta2(i) != delta2_right(c, i) {
            bad.push(v("coassociativity", vec![i]));
        }
        let e = sparse::unit(i, f);
        if eps_left(c, &c.comult[i]) != e {
            bad.push(v("left counit", vec![i]));
        }
        if eps_right(c, &c.comult[i]) != e {
            bad.push(v("right counit", vec![i]));
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect()
}

fn bialgebra_violations(b: &Bialgebra) -> Vec<Violation> {
    let (a, c) = (&b.alg, &b.coalg);
    let n = a.dim;
    let f = a.field;
    let mut out = algebra_violations(a);
    out.extend(coalgebra_violations(c));
    let compat: Vec<Violation> = par::map_range(n, |i| {
        let mut bad = Vec::new();
        for j in 0..n {
            let prod = a.mul_basis(i, j);
            if c.delta(prod) != a.tensor_mul(&c.comult[i], &c.comult[j]) {
                bad.push(v("comultiplication is multiplicative", vec![i, j]));
            }
            if c.eps(prod) != &c.counit[i] * &c.counit[j] {
                bad.push(v("counit is multiplicative", vec![i, j]));
            }
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect();
    out.extend(compat);
    if c.delta(&a.unit) != sparse::tensor(&a.unit, &a.unit, n) {
        out.push(v("comultiplication preserves unit", vec![]));
    }
    if !c.eps(&a.unit).is_one() {
        out.push(v("counit preserves unit", vec![]));
    }
    let _ = f;
    out
}

fn antipode_violations(h: &HopfAlgebra) -> Vec<Violation> {
    let n = h.dim();
    let f = h.field();
    par::map_range(n, |i| {
        let mut left = Acc::new();
        let mut right = Acc::new();
        for (p, x) in &h.coalg().comult[i] {
            let (l, r) = (sparse::unit(p / n, f), sparse::unit(p % n, f));
            left.add_scaled(x, &h.mul(&h.s(&l), &r));
            right.add_scaled(x, &h.mul(&l, &h.s(&r)));
        }
        let target = sparse::scale(h.unit(), &h.coalg().counit[i]);
        let mut bad = Vec::new();
        if left.finish() != target {
            bad.push(v("left antipode", vec![i]));
        }
        if right.finish() != target {
            bad.push(v("right antipode", vec![i]));
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tests::kz2;

    #[test]
    fn group_algebra_of_z2_verifies() {
        let h = kz2();
        assert!(verify_structure(Structure::Hopf(&h)).unwrap().ok);
    }

    #[test]
    fn broken_unit_and_antipode_are_reported() {
        let mut h = kz2();
        h.antipode = crate::linalg::Mat::zeros(h.field(), 2, 2);
        let r = verify_structure(Structure::Hopf(&h)).unwrap();
        assert!(!r.ok);
        assert!(r.violations.iter().all(|x| x.axiom.contains("antipode")));
        assert_eq!(r.violations.len(), 4);
    }
}
