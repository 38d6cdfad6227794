use super::{AlgebraStr, CoalgebraStr};
use crate::linalg::sparse::{self, Acc};
use crate::linalg::Mat;

/// A linear map `C → A`, stored as a `dim A × dim C` matrix.
pub type LinMap = Mat;

/// The convolution algebra `Hom(C, A)` with `(f∗g)(c) = f(c₁)g(c₂)`.
#[derive(Clone, Copy, Debug)]
pub struct Convolution<'a> {
    pub coalg: &'a CoalgebraStr,
    pub alg: &'a AlgebraStr,
}

impl<'a> Convolution<'a> {
    pub fn new(coalg: &'a CoalgebraStr, alg: &'a AlgebraStr) -> Convolution<'a> {
        Convolution { coalg, alg }
    }

    /// The unit `u∘ε`.
    pub fn unit(&self) -> LinMap {
        let f = self.alg.field;
        Mat::from_fn(f, self.alg.dim, self.coalg.dim, |i, j| {
            let u = sparse::get(&self.alg.unit, i)
                .cloned()
                .unwrap_or_else(|| f.zero());
            &u * &self.coalg.counit[j]
        })
    }

    fn column(m: &LinMap, j: usize) -> sparse::SVec {
        sparse::from_dense(&m.col(j))
    }

    pub fn mul(&self, f: &LinMap, g: &LinMap) -> LinMap {
        let n = self.coalg.dim;
        let fcols: Vec<_> = (0..n).map(|j| Self::column(f, j)).collect();
        let gcols: Vec<_> = (0..n).map(|j| Self::column(g, j)).collect();
        let cols = (0..n)
            .map(|c| {
                let mut acc = Acc::new();
                for (p, x) in &self.coalg.comult[c] {
                    acc.add_scaled(x, &self.alg.mul(&fcols[p / n], &gcols[p % n]));
                }
                acc.finish()
            })
            .collect();
        crate::linalg::SparseMap::new(self.alg.field, self.alg.dim, cols).to_dense()
    }

    /// Solves `f∗g = u∘ε` and keeps `g` only if also `g∗f = u∘ε`.
    pub fn inverse(&self, f: &LinMap) -> Option<LinMap> {
        let (m, d) = (self.coalg.dim, self.alg.dim);
        let field = self.alg.field;
        let fcols: Vec<_> = (0..m).map(|j| Self::column(f, j)).collect();
        // unknown g[t][b] sits at column b·d + t; equation (c, s) at row c·d + s
        let mut sys = Mat::zeros(field, m * d, m * d);
        for c in 0..m {
            for (p, x) in &self.coalg.comult[c] {
                let (a, b) = (p / m, p % m);
                for t in 0..d {
                    let prod = self.alg.mul(&fcols[a], &sparse::unit(t, field));
                    for (s, y) in prod {
                        let (r, col) = (c * d + s, b * d + t);
                        let cur = sys.get(r, col).clone();
                        sys.set(r, col, &cur + &(x * &y));
                    }
                }
            }
        }
        let unit = self.unit();
        let rhs: Vec<_> = (0..m * d).map(|r| unit.get(r % d, r / d).clone()).collect();
        let sol = sys.solve(&rhs)?;
        let g = Mat::from_fn(field, d, m, |t, b| sol[b * d + t].clone());
        (self.mul(f, &g) == unit && self.mul(&g, f) == unit).then_some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::dual_hopf;
    use crate::hopf::tests::kz2;
    use crate::scalar::Field;

    #[test]
    fn identity_times_antipode_is_unit() {
        let h = kz2();
        let conv = Convolution::new(h.coalg(), h.alg());
        let id = Mat::identity(Field::Q, 2);
        assert_eq!(conv.mul(&id, &h.antipode), conv.unit());
        assert_eq!(conv.inverse(&id).unwrap(), h.antipode);
    }

    #[test]
    fn projection_onto_delta_g_has_no_inverse() {
        let d = dual_hopf(&kz2()).unwrap();
        let conv = Convolution::new(d.coalg(), d.alg());
        let mut f = Mat::zeros(Field::Q, 2, 2);
        f.set(1, 1, Field::Q.one());
        assert!(conv.inverse(&f).is_none());
    }
}
