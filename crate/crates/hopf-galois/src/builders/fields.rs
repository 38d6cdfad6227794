use super::hopf::group_algebra;
use super::GroupTable;
use crate::error::{Error, Result};
use crate::extensions::{ComoduleAlgebra, ModuleAlgebra};
use crate::hopf::AlgebraStr;
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{Echelon, Subspace};
use crate::poly::gfp;
use crate::scalar::{Field, Scalar};

/// Largest degree accepted by the irreducibility scan.
pub const MAX_EXT_DEGREE: usize = 6;

/// `E = GF(p)[x]/(f)` with its Frobenius group `G = ⟨x ↦ x^p⟩`.
#[derive(Clone, Debug)]
pub struct FieldExtension {
    pub p: u64,
    /// Monic, ascending coefficients.
    pub poly: Vec<u64>,
    pub degree: usize,
    pub group: GroupTable,
    /// `E` as a `k[G]`-module algebra; `σ^g` acts as group element `g`.
    pub module: ModuleAlgebra,
    /// `E` as a `k[G]*`-comodule algebra.
    pub comodule: ComoduleAlgebra,
}

impl FieldExtension {
    pub fn field(&self) -> Field {
        Field::Fp(self.p)
    }

    pub fn algebra(&self) -> &AlgebraStr {
        &self.module.alg
    }

    /// `σ^g(x)`.
    pub fn frobenius(&self, g: usize, x: &SVec) -> SVec {
        self.module.act(g, x)
    }

    /// `E^G`.
    pub fn fixed_field(&self) -> Subspace {
        self.module.invariants(&Subspace::full(self.field(), self.degree))
    }
}

fn to_svec(c: &[u64], f: Field) -> SVec {
    c.iter()
        .enumerate()
        .filter(|(_, x)| **x != 0)
        .map(|(i, x)| (i, f.int(*x as i64)))
        .collect()
}

fn residues(v: &SVec, n: usize) -> Vec<u64> {
    let mut out = vec![0; n];
    for (i, x) in v {
        out[*i] = x.residue().unwrap_or(0);
    }
    gfp::trim(out)
}

/// Builds `GF(p^n)` from an irreducible `poly` of degree `n ≤ 6` over `GF(p)`.
pub fn finite_field_ext(p: u64, poly: &[u64]) -> Result<FieldExtension> {
    let f = Field::fp(p)?;
    let poly = gfp::trim(poly.iter().map(|c| c % p).collect());
    if poly.len() < 2 {
        return Err(Error::Input("polynomial must have positive degree".into()));
    }
    let n = poly.len() - 1;
    if n > MAX_EXT_DEGREE {
        return Err(Error::Input(format!("degree {n} exceeds the irreducibility scan limit {MAX_EXT_DEGREE}")));
    }
    let lead = Scalar::Fp(*poly.last().unwrap(), p).inv().unwrap().residue().unwrap();
    let poly: Vec<u64> = poly.iter().map(|c| c * lead % p).collect();
    if let Some(g) = gfp::find_factor(&poly, p) {
        return Err(Error::Input(format!("polynomial is reducible over GF({p}): factor {g:?}")));
    }
    let alg = AlgebraStr::from_fn(f, n, sparse::unit(0, f), |a, b| {
        let mut m = vec![0; a + b + 1];
        m[a + b] = 1;
        to_svec(&gfp::rem(&m, &poly, p), f)
    });
    // σ on the power basis
    let x = to_svec(&gfp::rem(&[0, 1], &poly, p), f);
    let mut xp = alg.unit.clone();
    for _ in 0..p {
        xp = alg.mul(&xp, &x);
    }
    let mut sigma = vec![alg.unit.clone()];
    for j in 1..n {
        sigma.push(alg.mul(&sigma[j - 1], &xp));
    }
    let apply = |op: &[SVec], v: &SVec| {
        let mut acc = Acc::new();
        for (i, c) in v {
            acc.add_scaled(c, &op[*i]);
        }
        acc.finish()
    };
    let mut powers: Vec<Vec<SVec>> = vec![(0..n).map(|j| sparse::unit(j, f)).collect()];
    for g in 1..n {
        let next = powers[g - 1].iter().map(|v| apply(&sigma, v)).collect();
        powers.push(next);
    }
    if powers[n - 1].iter().map(|v| apply(&sigma, v)).ne(powers[0].iter().cloned()) {
        return Err(Error::Internal("Frobenius does not have order dividing n".into()));
    }
    let group = GroupTable::cyclic(n);
    let action = powers.into_iter().flatten().collect();
    let module = ModuleAlgebra::new(alg, group_algebra(&group, f), action)?;
    let comodule = module.to_comodule()?;
    Ok(FieldExtension { p, poly, degree: n, group, module, comodule })
}

/// `x^k` in `E`, as residues.
pub fn power_residues(e: &FieldExtension, k: usize) -> Vec<u64> {
    let f = e.field();
    let x = to_svec(&gfp::rem(&[0, 1], &e.poly, e.p), f);
    let v = (0..k).fold(e.algebra().unit.clone(), |acc, _| e.algebra().mul(&acc, &x));
    residues(&v, e.degree)
}

/// A `G`-graded algebra as a `k[G]`-comodule algebra, `δ(a) = a⊗g` for `a ∈ A_g`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub group: GroupTable,
    /// Degree of each basis vector.
    pub degrees: Vec<usize>,
    pub comodule: ComoduleAlgebra,
}

impl GradedAlgebra {
    /// `A_g`.
    pub fn component(&self, g: usize) -> Subspace {
        let f = self.comodule.field();
        let vs: Vec<SVec> = (0..self.degrees.len())
            .filter(|&i| self.degrees[i] == g)
            .map(|i| sparse::unit(i, f))
            .collect();
        Subspace::span_sparse(f, self.degrees.len(), &vs)
    }

    /// `A_g·A_h = A_{gh}` for all `g, h`; the first failing pair otherwise.
    pub fn strong_grading_witness(&self) -> Option<(usize, usize)> {
        let a = &self.comodule.alg;
        let (n, f) = (a.dim, a.field);
        let ord = self.group.order;
        for g in 0..ord {
            for h in 0..ord {
                let mut ech = Echelon::new(f, n);
                for x in (0..n).filter(|&i| self.degrees[i] == g) {
                    for y in (0..n).filter(|&i| self.degrees[i] == h) {
                        ech.insert(a.mul_basis(x, y));
                    }
                }
                if ech.rank() != self.component(self.group.mul(g, h)).dim() {
                    return Some((g, h));
                }
            }
        }
        None
    }

    pub fn is_strongly_graded(&self) -> bool {
        self.strong_grading_witness().is_none()
    }
}

/// Grades `alg` by assigning each basis vector a group element.
pub fn graded_algebra(g: &GroupTable, alg: AlgebraStr, degrees: Vec<usize>) -> Result<GradedAlgebra> {
    let (n, f) = (alg.dim, alg.field);
    if degrees.len() != n || degrees.iter().any(|&d| d >= g.order) {
        return Err(Error::Dimension(format!("need {n} degrees in 0..{}", g.order)));
    }
    for x in 0..n {
        for y in 0..n {
            let want = g.mul(degrees[x], degrees[y]);
            if alg.mul_basis(x, y).iter().any(|(i, _)| degrees[*i] != want) {
                return Err(Error::Condition { name: "grading".into(), witness: vec![x, y] });
            }
        }
    }
    let m = g.order;
    let coaction = (0..n).map(|x| sparse::unit(x * m + degrees[x], f)).collect();
    let comodule = ComoduleAlgebra::new(alg, group_algebra(g, f), coaction)?;
    Ok(GradedAlgebra { group: g.clone(), degrees, comodule })
}

/// `k[x]/(x² − λ)` graded by `Z2` with `x` odd.
pub fn z2_quadratic(field: Field, lambda: Scalar) -> Result<GradedAlgebra> {
    let alg = AlgebraStr::from_fn(field, 2, sparse::unit(0, field), |a, b| match (a, b) {
        (1, 1) => sparse::scale(&sparse::unit(0, field), &lambda),
        _ => sparse::unit(a + b, field),
    });
    graded_algebra(&GroupTable::cyclic(2), alg, vec![0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::dual_group_algebra;
    use crate::extensions::{can_full, coinvariants};

    #[test]
    fn gf4() {
        let e = finite_field_ext(2, &[1, 1, 1]).unwrap();
        assert_eq!(e.degree, 2);
        assert_eq!(e.group.order, 2);
        assert_eq!(e.fixed_field().dim(), 1);
        // σ(x) = x² = x + 1
        let f = e.field();
        assert_eq!(e.frobenius(1, &sparse::unit(1, f)), to_svec(&[1, 1], f));
        assert_eq!(e.comodule.hopf, dual_group_algebra(&e.group, f));
        assert_eq!(coinvariants(&e.comodule, None).unwrap(), e.fixed_field());
    }

    #[test]
    fn gf8_is_galois() {
        let e = finite_field_ext(2, &[1, 1, 0, 1]).unwrap();
        assert_eq!(e.group.order, 3);
        let b = coinvariants(&e.comodule, None).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(can_full(&e.comodule, &b).unwrap().bijective);
        assert_eq!(power_residues(&e, 7), vec![1]);
    }

    #[test]
    fn gf9_frobenius_has_order_two() {
        let e = finite_field_ext(3, &[1, 0, 1]).unwrap();
        let f = e.field();
        let x = sparse::unit(1, f);
        assert_eq!(e.frobenius(1, &x), sparse::scale(&x, &f.int(-1)));
        assert_eq!(e.fixed_field().dim(), 1);
    }

    #[test]
    fn reducible_polynomial_rejected() {
        assert!(matches!(finite_field_ext(2, &[1, 0, 1]), Err(Error::Input(_))));
        assert!(matches!(finite_field_ext(5, &[1, 0, 1]), Err(Error::Input(_))));
        assert!(finite_field_ext(4, &[1, 1, 1]).is_err());
    }

    #[test]
    fn quadratic_gradings() {
        let f = Field::Q;
        let a = z2_quadratic(f, f.one()).unwrap();
        assert!(a.is_strongly_graded());
        let b = coinvariants(&a.comodule, None).unwrap();
        assert!(can_full(&a.comodule, &b).unwrap().bijective);
        let z = z2_quadratic(f, f.zero()).unwrap();
        assert_eq!(z.strong_grading_witness(), Some((1, 1)));
        let b = coinvariants(&z.comodule, None).unwrap();
        assert!(!can_full(&z.comodule, &b).unwrap().bijective);
    }

    #[test]
    fn trivial_grading_and_violation() {
        let f = Field::Q;
        let alg = z2_quadratic(f, f.one()).unwrap().comodule.alg;
        let t = graded_algebra(&GroupTable::trivial(), alg.clone(), vec![0, 0]).unwrap();
        assert_eq!(coinvariants(&t.comodule, None).unwrap().dim(), 2);
        let err = graded_algebra(&GroupTable::cyclic(2), alg, vec![1, 0]).unwrap_err();
        assert!(matches!(err, Error::Condition { ref name, .. } if name == "grading"));
    }
}
