//! Corings over a finite-dimensional base algebra `A`.
//!
//! A coring is stored on a `k`-basis with its two `A`-actions and a
//! comultiplication written in `K⊗K`; the balanced tensor `K⊗_A K` is the
//! quotient by `(x·a)⊗y − x⊗(a·y)`. The Sweedler coring, `Map(G,E)` and
//! `Hom(K,A)` are built on top, together with the module-algebra connection
//! `(Φ, Ψ)`, its coring extension `(Θ, Υ)` and the congruence/submonoid
//! bridges for `Map(G,E)`.

mod bridges;
mod connection;
mod hom;

pub use bridges::{congruence_submonoid_bridges, BridgeReport, CongruenceBridge, SubmonoidBridge};
pub use connection::{
    close_right_coideal_subalgebra, coring_connection_transport, module_algebra_connection, psi_centralizer, CoringTransport, ModuleConnection,
    TransportEntry,
};
pub use hom::{
    can_k, coring_can, domain_check, field_ext_galois_check, hom_coring, hom_coring_on, map_coring, CoringCan,
    DomainCertificate, MonoActionCert, DOMAIN_SCAN_CAP,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::RelativeTensor;
use crate::hopf::AlgebraStr;
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{guard, Echelon, Subspace};
use crate::par;

/// An `A`-coring on a `k`-basis `e_0, …, e_{d−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ACoring {
    pub base: AlgebraStr,
    pub dim: usize,
    /// `left[a·d + x] = e_a · e_x`.
    pub left: Vec<SVec>,
    /// `right[x·n + a] = e_x · e_a`.
    pub right: Vec<SVec>,
    /// A representative of `Δ(e_x)` in `K⊗K`, index `x·d + y`.
    pub comult: Vec<SVec>,
    /// `ε(e_x) ∈ A`.
    pub counit: Vec<SVec>,
}

/// Outcome of [`ACoring::check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoringReport {
    pub ok: bool,
    /// Name and basis witness of each failed axiom.
    pub violations: Vec<(String, Vec<usize>)>,
}

fn apply(table: &[SVec], stride: usize, slot: usize, x: &SVec, left: bool) -> SVec {
    let mut acc = Acc::new();
    for (i, c) in x {
        let idx = if left { slot * stride + i } else { i * stride + slot };
        acc.add_scaled(c, &table[idx]);
    }
    acc.finish()
}

impl ACoring {
    /// Builds and verifies a coring; the first failed axiom is reported by name.
    pub fn new(
        base: AlgebraStr,
        dim: usize,
        left: Vec<SVec>,
        right: Vec<SVec>,
        comult: Vec<SVec>,
        counit: Vec<SVec>,
    ) -> Result<ACoring> {
        let n = base.dim;
        if left.len() != n * dim || right.len() != n * dim || comult.len() != dim || counit.len() != dim {
            return Err(Error::Dimension(format!("coring data must describe a {dim}-dim bimodule over a {n}-dim algebra")));
        }
        let k = ACoring { base, dim, left, right, comult, counit };
        let report = k.check()?;
        if let Some((name, witness)) = report.violations.into_iter().next() {
            return Err(Error::Condition { name, witness });
        }
        Ok(k)
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim
    }

    /// `a·x` for `a ∈ A`, `x ∈ K`.
    pub fn act_left(&self, a: &SVec, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (b, c) in a {
            acc.add_scaled(c, &apply(&self.left, self.dim, *b, x, true));
        }
        acc.finish()
    }

    /// `x·a`.
    pub fn act_right(&self, x: &SVec, a: &SVec) -> SVec {
        let n = self.base.dim;
        let mut acc = Acc::new();
        for (b, c) in a {
            acc.add_scaled(c, &apply(&self.right, n, *b, x, false));
        }
        acc.finish()
    }

    pub fn delta(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (i, c) in x {
            acc.add_scaled(c, &self.comult[*i]);
        }
        acc.finish()
    }

    pub fn eps(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (i, c) in x {
            acc.add_scaled(c, &self.counit[*i]);
        }
        acc.finish()
    }

    /// Relations `(e_x·e_a)⊗e_y − e_x⊗(e_a·e_y)` spanning the kernel of `K⊗K → K⊗_A K`.
    pub fn balancing(&self) -> Result<Echelon> {
        let (d, n, f) = (self.dim, self.base.dim, self.base.field);
        guard(d * d)?;
        let rows: Vec<Vec<SVec>> = par::map_range(d * n, |xa| {
            let (x, a) = (xa / n, xa % n);
            (0..d)
                .map(|y| {
                    let l = sparse::tensor(&self.right[x * n + a], &sparse::unit(y, f), d);
                    let r = sparse::tensor(&sparse::unit(x, f), &self.left[a * d + y], d);
                    sparse::sub(&l, &r, f)
                })
                .collect()
        });
        let mut ech = Echelon::new(f, d * d);
        ech.extend(rows.iter().flatten());
        Ok(ech)
    }

    /// `dim_k K⊗_A K`.
    pub fn balanced_dim(&self) -> Result<usize> {
        Ok(self.dim * self.dim - self.balancing()?.rank())
    }

    /// All coring axioms, each with a basis witness on failure.
    pub fn check(&self) -> Result<CoringReport> {
        let (d, n, f) = (self.dim, self.base.dim, self.base.field);
        guard(d * d * d)?;
        let mut violations: Vec<(String, Vec<usize>)> = Vec::new();
        let e = |i: usize| sparse::unit(i, f);
        let ea = |i: usize| sparse::unit(i, f);
        fn push(violations: &mut Vec<(String, Vec<usize>)>, name: &str, w: Option<Vec<usize>>) {
            if let Some(w) = w {
                violations.push((name.to_string(), w));
            }
        }
        let unit = &self.base.unit;
        push(&mut violations, "left unit", (0..d).find(|&x| self.act_left(unit, &e(x)) != e(x)).map(|x| vec![x]));
        push(&mut violations, "right unit", (0..d).find(|&x| self.act_right(&e(x), unit) != e(x)).map(|x| vec![x]));
        let first = |v: Vec<Option<Vec<usize>>>| v.into_iter().flatten().next();
        push(
            &mut violations,
            "left associativity",
            first(par::map_range(n * n, |ab| {
                let (a, b) = (ab / n, ab % n);
                (0..d)
                    .find(|&x| self.act_left(&ea(a), &self.act_left(&ea(b), &e(x))) != self.act_left(self.base.mul_basis(a, b), &e(x)))
                    .map(|x| vec![a, b, x])
            })),
        );
        push(
            &mut violations,
            "right associativity",
            first(par::map_range(n * n, |ab| {
                let (a, b) = (ab / n, ab % n);
                (0..d)
                    .find(|&x| self.act_right(&self.act_right(&e(x), &ea(a)), &ea(b)) != self.act_right(&e(x), self.base.mul_basis(a, b)))
                    .map(|x| vec![a, b, x])
            })),
        );
        push(
            &mut violations,
            "bimodule",
            first(par::map_range(n * n, |ab| {
                let (a, b) = (ab / n, ab % n);
                (0..d)
                    .find(|&x| self.act_right(&self.act_left(&ea(a), &e(x)), &ea(b)) != self.act_left(&ea(a), &self.act_right(&e(x), &ea(b))))
                    .map(|x| vec![a, b, x])
            })),
        );
        if !violations.is_empty() {
            return Ok(CoringReport { ok: false, violations });
        }
        let rel = self.balancing()?;
        let left2 = |a: &SVec, t: &SVec| {
            let mut acc = Acc::new();
            for (p, c) in t {
                acc.add_scaled(c, &sparse::tensor(&self.act_left(a, &e(p / d)), &e(p % d), d));
            }
            acc.finish()
        };
        let right2 = |t: &SVec, a: &SVec| {
            let mut acc = Acc::new();
            for (p, c) in t {
                acc.add_scaled(c, &sparse::tensor(&e(p / d), &self.act_right(&e(p % d), a), d));
            }
            acc.finish()
        };
        let mut bil = None;
        let mut eps_bil = None;
        'outer: for a in 0..n {
            for x in 0..d {
                let l = sparse::sub(&self.delta(&self.act_left(&ea(a), &e(x))), &left2(&ea(a), &self.comult[x]), f);
                let r = sparse::sub(&self.delta(&self.act_right(&e(x), &ea(a))), &right2(&self.comult[x], &ea(a)), f);
                if !rel.contains(&l) || !rel.contains(&r) {
                    bil = Some(vec![a, x]);
                    break 'outer;
                }
                if eps_bil.is_none()
                    && (self.eps(&self.act_left(&ea(a), &e(x))) != self.base.mul(&ea(a), &self.counit[x])
                        || self.eps(&self.act_right(&e(x), &ea(a))) != self.base.mul(&self.counit[x], &ea(a)))
                {
                    eps_bil = Some(vec![a, x]);
                }
            }
        }
        push(&mut violations, "comultiplication is A-bilinear", bil);
        push(&mut violations, "counit is A-bilinear", eps_bil);
        push(
            &mut violations,
            "counit",
            (0..d)
                .find(|&x| {
                    let (mut l, mut r) = (Acc::new(), Acc::new());
                    for (p, c) in &self.comult[x] {
                        l.add_scaled(c, &self.act_left(&self.counit[p / d], &e(p % d)));
                        r.add_scaled(c, &self.act_right(&e(p / d), &self.counit[p % d]));
                    }
                    l.finish() != e(x) || r.finish() != e(x)
                })
                .map(|x| vec![x]),
        );
        if violations.is_empty() {
            let rows = rel.reduced_rows();
            let mut rel3 = Echelon::new(f, d * d * d);
            for r in &rows {
                for z in 0..d {
                    rel3.insert(&sparse::tensor(r, &e(z), d));
                    rel3.insert(&sparse::tensor(&e(z), r, d * d));
                }
            }
            push(
                &mut violations,
                "coassociativity",
                (0..d)
                    .find(|&x| {
                        let (mut l, mut r) = (Acc::new(), Acc::new());
                        for (p, c) in &self.comult[x] {
                            l.add_scaled(c, &sparse::tensor(&self.comult[p / d], &e(p % d), d));
                            r.add_scaled(c, &sparse::tensor(&e(p / d), &self.comult[p % d], d * d));
                        }
                        !rel3.contains(&sparse::sub(&l.finish(), &r.finish(), f))
                    })
                    .map(|x| vec![x]),
            );
        }
        Ok(CoringReport { ok: violations.is_empty(), violations })
    }

    /// `f: self → other` (columns in `other`) is `A`-bilinear, counital and comultiplicative.
    pub fn is_morphism_to(&self, other: &ACoring, f: &[SVec]) -> Result<bool> {
        let (d, d2, n, fl) = (self.dim, other.dim, self.base.dim, self.base.field);
        if other.base != self.base || f.len() != d {
            return Err(Error::Dimension("morphism data does not match the corings".into()));
        }
        let map = |x: &SVec| {
            let mut acc = Acc::new();
            for (i, c) in x {
                acc.add_scaled(c, &f[*i]);
            }
            acc.finish()
        };
        for a in 0..n {
            let ea = sparse::unit(a, fl);
            for x in 0..d {
                let ex = sparse::unit(x, fl);
                if map(&self.act_left(&ea, &ex)) != other.act_left(&ea, &f[x]) || map(&self.act_right(&ex, &ea)) != other.act_right(&f[x], &ea) {
                    return Ok(false);
                }
            }
        }
        if (0..d).any(|x| other.eps(&f[x]) != self.counit[x]) {
            return Ok(false);
        }
        let rel = other.balancing()?;
        for x in 0..d {
            let mut ff = Acc::new();
            for (p, c) in &self.comult[x] {
                ff.add_scaled(c, &sparse::tensor(&f[p / d], &f[p % d], d2));
            }
            if !rel.contains(&sparse::sub(&other.delta(&f[x]), &ff.finish(), fl)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `C` is an `A`-subbimodule with `Δ(C)` in the image of `C⊗C`.
    pub fn is_subcoring(&self, c: &Subspace) -> Result<bool> {
        if !self.is_subbimodule(c) {
            return Ok(false);
        }
        let d = self.dim;
        let mut ech = self.balancing()?;
        let basis = c.sparse_vectors();
        for x in &basis {
            for y in &basis {
                ech.insert(&sparse::tensor(x, y, d));
            }
        }
        Ok(basis.iter().all(|x| ech.contains(&self.delta(x))))
    }

    /// `I` is an `A`-subbimodule in `ker ε` with `Δ(I) ⊆ I⊗K + K⊗I` in `K⊗_A K`.
    pub fn is_coideal(&self, i: &Subspace) -> Result<bool> {
        let basis = i.sparse_vectors();
        if !self.is_subbimodule(i) || basis.iter().any(|x| !self.eps(x).is_empty()) {
            return Ok(false);
        }
        let (d, f) = (self.dim, self.base.field);
        let mut ech = self.balancing()?;
        for x in &basis {
            for y in 0..d {
                ech.insert(&sparse::tensor(x, &sparse::unit(y, f), d));
                ech.insert(&sparse::tensor(&sparse::unit(y, f), x, d));
            }
        }
        Ok(basis.iter().all(|x| ech.contains(&self.delta(x))))
    }

    pub fn is_subbimodule(&self, c: &Subspace) -> bool {
        let f = self.base.field;
        c.sparse_vectors().iter().all(|x| {
            (0..self.base.dim).all(|a| {
                let ea = sparse::unit(a, f);
                c.contains_sparse(&self.act_left(&ea, x)) && c.contains_sparse(&self.act_right(x, &ea))
            })
        })
    }
}

/// The Sweedler coring `A⊗_B A` with `Δ(x⊗y) = (x⊗1)⊗_A(1⊗y)` and `ε(x⊗y) = xy`.
pub fn sweedler_coring(a: &AlgebraStr, b: &Subspace) -> Result<(ACoring, RelativeTensor)> {
    if !a.is_subalgebra(b) {
        return Err(Error::Input("B is not a subalgebra of A".into()));
    }
    let (n, f) = (a.dim, a.field);
    let t = RelativeTensor::new(a, &Subspace::full(f, n), b)?;
    let d = t.dim();
    guard(d * d)?;
    let lifts: Vec<SVec> = (0..d).map(|i| t.lift(i)).collect();
    let on_lift = |x: &SVec, g: &dyn Fn(usize, usize) -> SVec| {
        let mut acc = Acc::new();
        for (p, c) in x {
            acc.add_scaled(c, &g(p / n, p % n));
        }
        acc.finish()
    };
    let mut left = Vec::with_capacity(n * d);
    for b in 0..n {
        for x in &lifts {
            left.push(t.project(&on_lift(x, &|u, v| sparse::tensor(a.mul_basis(b, u), &sparse::unit(v, f), n))));
        }
    }
    let mut right = Vec::with_capacity(n * d);
    for x in &lifts {
        for b in 0..n {
            right.push(t.project(&on_lift(x, &|u, v| sparse::tensor(&sparse::unit(u, f), a.mul_basis(v, b), n))));
        }
    }
    let comult = lifts
        .iter()
        .map(|x| {
            on_lift(x, &|u, v| {
                let l = t.project(&sparse::tensor(&sparse::unit(u, f), &a.unit, n));
                let r = t.project(&sparse::tensor(&a.unit, &sparse::unit(v, f), n));
                sparse::tensor(&l, &r, d)
            })
        })
        .collect();
    let counit = lifts.iter().map(|x| on_lift(x, &|u, v| a.mul_basis(u, v).clone())).collect();
    Ok((ACoring::new(a.clone(), d, left, right, comult, counit)?, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::finite_field_ext;
    use crate::scalar::Field;

    pub fn quadratic(field: Field, lambda: i64) -> AlgebraStr {
        AlgebraStr::from_fn(field, 2, sparse::unit(0, field), |a, b| match (a, b) {
            (1, 1) => sparse::scale(&sparse::unit(0, field), &field.int(lambda)),
            _ => sparse::unit(a + b, field),
        })
    }

    #[test]
    fn sweedler_over_itself_is_a() {
        let a = quadratic(Field::Q, 2);
        let (k, _) = sweedler_coring(&a, &Subspace::full(Field::Q, 2)).unwrap();
        assert_eq!(k.dim, 2);
        assert_eq!(k.balanced_dim().unwrap(), 2);
    }

    #[test]
    fn sweedler_of_field_extensions() {
        let e = finite_field_ext(2, &[1, 1, 1]).unwrap();
        let f = e.field();
        let (k, _) = sweedler_coring(e.algebra(), &Subspace::span_sparse(f, 2, &[e.algebra().unit.clone()])).unwrap();
        assert_eq!(k.dim, 4);
        let a = quadratic(Field::Q, 2);
        let (k, _) = sweedler_coring(&a, &Subspace::span_sparse(Field::Q, 2, std::slice::from_ref(&a.unit))).unwrap();
        assert_eq!(k.dim, 4);
        assert!(k.check().unwrap().ok);
    }

    #[test]
    fn broken_counit_is_named() {
        let a = quadratic(Field::Q, 2);
        let (mut k, _) = sweedler_coring(&a, &Subspace::span_sparse(Field::Q, 2, std::slice::from_ref(&a.unit))).unwrap();
        k.counit[0] = sparse::scale(&k.counit[0], &Field::Q.int(2));
        let err = ACoring::new(k.base, k.dim, k.left, k.right, k.comult, k.counit).unwrap_err();
        assert!(matches!(err, Error::Condition { .. }));
    }

    #[test]
    fn not_a_subalgebra() {
        let a = quadratic(Field::Q, 2);
        let x = Subspace::span_sparse(Field::Q, 2, &[sparse::unit(1, Field::Q)]);
        assert!(matches!(sweedler_coring(&a, &x), Err(Error::Input(_))));
    }
}
