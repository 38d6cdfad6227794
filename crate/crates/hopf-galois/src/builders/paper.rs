use serde::Serialize;

use super::hopf::{circle, circle_hopf};
use crate::error::{Error, Result};
use crate::extensions::ModuleAlgebra;
use crate::hopf::{AlgebraStr, HopfAlgebra};
use crate::linalg::sparse::{self, Acc, SVec};
use crate::linalg::{Echelon, Mat, Subspace};
use crate::par;
use crate::scalar::{Field, Scalar};
use crate::subobjects::{close_coideal_subalgebra, CoidealSubalgebra};

/// Generator data for a left `H`-action, extended to all of `A` by measuring.
#[derive(Clone, Debug)]
pub struct GeneratorAction<'a> {
    pub alg: &'a AlgebraStr,
    pub hopf: &'a HopfAlgebra,
    pub a_gens: Vec<SVec>,
    /// `words[a]` lists generator indices whose product is `e_a`.
    pub words: Vec<Vec<usize>>,
    /// Basis indices of algebra generators of `H` whose coproducts stay among them.
    pub h_gens: Vec<usize>,
    /// `values[g][x] = e_{h_gens[g]} · a_gens[x]`.
    pub values: Vec<Vec<SVec>>,
}

fn apply_op(op: &[SVec], x: &SVec) -> SVec {
    let mut acc = Acc::new();
    for (a, c) in x {
        acc.add_scaled(c, &op[*a]);
    }
    acc.finish()
}

/// Extends generator values to an action table `[h·dim A + a]`.
///
/// Each generator of `H` acts on a word by `g·(xw) = (g₁·x)(g₂·w)`; the action
/// of the remaining basis of `H` comes from products of generators. The result
/// is not verified here.
pub fn extend_action(spec: &GeneratorAction) -> Result<Vec<SVec>> {
    let (alg, h) = (spec.alg, spec.hopf);
    let (n, m, f) = (alg.dim, h.dim(), alg.field);
    let ng = spec.h_gens.len();
    if spec.words.len() != n || spec.values.len() != ng || spec.values.iter().any(|v| v.len() != spec.a_gens.len()) {
        return Err(Error::Dimension("generator action data has the wrong shape".into()));
    }
    for (a, w) in spec.words.iter().enumerate() {
        let prod = w.iter().fold(alg.unit.clone(), |acc, &x| alg.mul(&acc, &spec.a_gens[x]));
        if prod != sparse::unit(a, f) {
            return Err(Error::Input(format!("word for basis element {a} does not multiply to it")));
        }
    }
    let slot = |i: usize| spec.h_gens.iter().position(|&g| g == i);
    let mut split = Vec::with_capacity(ng);
    for &g in &spec.h_gens {
        let mut terms = Vec::new();
        for (p, x) in &h.coalg().comult[g] {
            match (slot(p / m), slot(p % m)) {
                (Some(l), Some(r)) => terms.push((l, r, x.clone())),
                _ => return Err(Error::Input(format!("Δ(e_{g}) leaves the span of the generators"))),
            }
        }
        split.push(terms);
    }
    let eps: Vec<Scalar> = spec.h_gens.iter().map(|&g| h.coalg().counit[g].clone()).collect();
    let gen_ops: Vec<Vec<SVec>> = {
        let cols: Vec<Vec<SVec>> = par::map_range(n, |a| {
            let w = &spec.words[a];
            // vals[g] = e_g · (product of the current suffix)
            let mut vals: Vec<SVec> = eps.iter().map(|e| sparse::scale(&alg.unit, e)).collect();
            for &x in w.iter().rev() {
                vals = (0..ng)
                    .map(|g| {
                        let mut acc = Acc::new();
                        for (l, r, c) in &split[g] {
                            acc.add_scaled(c, &alg.mul(&spec.values[*l][x], &vals[*r]));
                        }
                        acc.finish()
                    })
                    .collect();
            }
            vals
        });
        (0..ng).map(|g| cols.iter().map(|v| v[g].clone()).collect()).collect()
    };
    let identity: Vec<SVec> = (0..n).map(|a| sparse::unit(a, f)).collect();
    let mut ech = Echelon::new(f, m);
    let mut found: Vec<(SVec, Vec<SVec>)> = Vec::new();
    let mut queue = vec![(h.unit().clone(), identity)];
    while let Some((v, op)) = queue.pop() {
        if found.len() == m {
            break;
        }
        if !ech.insert(&v) {
            continue;
        }
        for (g, &hg) in spec.h_gens.iter().enumerate() {
            let gv = h.mul(&sparse::unit(hg, f), &v);
            let gop: Vec<SVec> = op.iter().map(|x| apply_op(&gen_ops[g], x)).collect();
            queue.insert(0, (gv, gop));
        }
        found.push((v, op));
    }
    if found.len() != m {
        return Err(Error::Input("the generators do not generate H".into()));
    }
    let mut words = Mat::zeros(f, m, m);
    for (j, (v, _)) in found.iter().enumerate() {
        for (i, x) in v {
            words.set(*i, j, x.clone());
        }
    }
    let inv = words.inverse().ok_or_else(|| Error::Internal("word basis is singular".into()))?;
    let mut action = vec![SVec::new(); m * n];
    for hb in 0..m {
        for a in 0..n {
            let mut acc = Acc::new();
            for (j, (_, op)) in found.iter().enumerate() {
                acc.add_scaled(inv.get(j, hb), &op[a]);
            }
            action[hb * n + a] = acc.finish();
        }
    }
    Ok(action)
}

/// Index of `J^a X^b Z^c` in the monomial basis of the example algebra.
pub fn mono(a: usize, b: usize, c: usize) -> usize {
    ((a % 2) * 4 + b % 4) * 16 + c % 16
}

pub fn mono_label(i: usize) -> String {
    let (a, b, c) = (i / 64, (i / 16) % 4, i % 16);
    let mut parts = Vec::new();
    let pow = |g: &str, e: usize| if e == 1 { g.to_string() } else { format!("{g}^{e}") };
    if a > 0 {
        parts.push(pow("J", a));
    }
    if b > 0 {
        parts.push(pow("X", b));
    }
    if c > 0 {
        parts.push(pow("Z", c));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("")
    }
}

/// `k⟨J,X,Z⟩/(XZ = iZX, X⁴ = Z¹⁶ = 1, J² = −1, J central)` over `Q(i)`, dim 128.
pub fn paper_algebra() -> AlgebraStr {
    let f = Field::Qi;
    let i = f.i().unwrap();
    AlgebraStr::from_fn(f, 128, sparse::unit(0, f), |x, y| {
        let (a, b, c) = (x / 64, (x / 16) % 4, x % 16);
        let (a2, b2, c2) = (y / 64, (y / 16) % 4, y % 16);
        // Z^c X^b2 = q^{-c·b2} X^b2 Z^c, and J² = −1
        let mut coef = i.pow(((4 - (c * b2) % 4) % 4) as u64);
        if a + a2 == 2 {
            coef = -coef;
        }
        vec![(mono(a + a2, b + b2, c + c2), coef)]
    })
}

/// Values of `c, s, t` on `J, X, Z`.
fn generator_values(printed: bool) -> Vec<Vec<SVec>> {
    let f = Field::Qi;
    let i = f.i().unwrap();
    let (j, x, z) = (mono(1, 0, 0), mono(0, 1, 0), mono(0, 0, 1));
    let e = |k: usize| sparse::unit(k, f);
    let s_z = if printed { vec![(z, f.int(-1))] } else { vec![(mono(1, 0, 1), i)] };
    vec![
        vec![e(j), e(x), vec![]],
        vec![vec![], vec![], s_z],
        vec![vec![(j, f.int(-1))], e(x), e(z)],
    ]
}

fn build_action(alg: &AlgebraStr, h: &HopfAlgebra, printed: bool) -> Result<Vec<SVec>> {
    let f = Field::Qi;
    let a_gens = vec![sparse::unit(mono(1, 0, 0), f), sparse::unit(mono(0, 1, 0), f), sparse::unit(mono(0, 0, 1), f)];
    let words = (0..128)
        .map(|k| {
            let (a, b, c) = (k / 64, (k / 16) % 4, k % 16);
            [vec![0; a], vec![1; b], vec![2; c]].concat()
        })
        .collect();
    extend_action(&GeneratorAction {
        alg,
        hopf: h,
        a_gens,
        words,
        h_gens: vec![circle::C, circle::S, circle::T],
        values: generator_values(printed),
    })
}

/// The 128-dimensional example with its circle Hopf action.
#[derive(Clone, Debug)]
pub struct PaperExample {
    pub module: ModuleAlgebra,
    /// `B = ⟨X, Z⁴⟩`.
    pub b: Subspace,
    /// `1, J, Z, JZ, Z², JZ², Z³, JZ³`.
    pub relative_basis: Vec<SVec>,
}

/// Builds the example with `c, s, t` acting through the rotation `Z ↦ JZ` and
/// the reflection `J ↦ −J` of `D8`, so that `s·Z = iJZ`.
pub fn paper_example() -> Result<PaperExample> {
    let f = Field::Qi;
    let h = circle_hopf(f)?;
    let alg = paper_algebra();
    let action = build_action(&alg, &h, false)?;
    let module = ModuleAlgebra::new(alg, h, action)?;
    let b_vecs: Vec<SVec> = (0..4)
        .flat_map(|x| (0..4).map(move |y| sparse::unit(mono(0, x, 4 * y), f)))
        .collect();
    let b = Subspace::span_sparse(f, 128, &b_vecs);
    let relative_basis = (0..4).flat_map(|c| (0..2).map(move |a| sparse::unit(mono(a, 0, c), f))).collect();
    Ok(PaperExample { module, b, relative_basis })
}

/// The action read off the printed table (`s·Z = −Z`), which violates `ts = −st`.
pub fn printed_table_action() -> Result<ModuleAlgebra> {
    let h = circle_hopf(Field::Qi)?;
    let alg = paper_algebra();
    let action = build_action(&alg, &h, true)?;
    ModuleAlgebra::new(alg, h, action)
}

/// The matrix `M` as printed after normalising the can table.
pub const PRINTED_M: [[i64; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, 1, 0, 0, -1, -1, 0, 0],
    [0, 0, -1, -1, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, -1, 0, 0, -1, 1, 0, 0],
    [0, 0, -1, -1, 0, 0, 1, -1],
    [1, 1, 0, 0, 1, -1, 0, 0],
];

/// The printed can table with each column divided by `1⊗m_j`.
pub const TABLE_M: [[i64; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
    [1, 1, 0, 0, -1, -1, 0, 0],
    [0, 0, -1, -1, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, -1, 0, 0, -1, 1, 0, 0],
    [0, 0, -1, 1, 0, 0, 1, -1],
    [1, -1, 0, 0, 1, -1, 0, 0],
];

pub const M_ROWS: [&str; 8] = ["1", "t", "c", "s", "c²", "ct", "st", "c²t"];
pub const M_COLS: [&str; 8] = ["1", "J", "Z", "JZ", "Z²", "JZ²", "Z³", "JZ³"];

/// `can(1⊗m_j)(h_i) = h_i·m_j = C_ij(J) m_j`, evaluated at `J = ±i`.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedCan {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// `C(J = i)`, as strings.
    pub plus: Vec<Vec<String>>,
    /// `C(J = −i)`.
    pub minus: Vec<Vec<String>>,
    pub det_plus: String,
    pub det_minus: String,
    /// Both determinants are nonzero, so `can` is bijective.
    pub bijective: bool,
    #[serde(skip)]
    pub plus_mat: Mat,
    #[serde(skip)]
    pub minus_mat: Mat,
}

pub fn reduced_can(ex: &PaperExample) -> Result<ReducedCan> {
    let m = &ex.module;
    let (h, f) = (&m.hopf, m.field());
    let i = f.i().unwrap();
    let e = |k: usize| sparse::unit(k, f);
    let (c, s, t) = (e(circle::C), e(circle::S), e(circle::T));
    let c2 = h.mul(&c, &c);
    let rows = [h.unit().clone(), t.clone(), c.clone(), s.clone(), c2.clone(), h.mul(&c, &t), h.mul(&s, &t), h.mul(&c2, &t)];
    let j = e(mono(1, 0, 0));
    let mut plus = Mat::zeros(f, 8, 8);
    let mut minus = Mat::zeros(f, 8, 8);
    for (r, hv) in rows.iter().enumerate() {
        for (col, mj) in ex.relative_basis.iter().enumerate() {
            let v = m.act_vec(hv, mj);
            let jm = m.alg.mul(&j, mj);
            let (p, u) = &mj[0];
            let (q, w) = &jm[0];
            let alpha = sparse::get(&v, *p).cloned().unwrap_or_else(|| f.zero()).div(u).unwrap();
            let beta = sparse::get(&v, *q).cloned().unwrap_or_else(|| f.zero()).div(w).unwrap();
            if sparse::axpy(&sparse::scale(mj, &alpha), &beta, &jm) != v {
                return Err(Error::Internal(format!("h_{r}·m_{col} is not a k[J]-multiple of m_{col}")));
            }
            plus.set(r, col, &alpha + &(&beta * &i));
            minus.set(r, col, &alpha - &(&beta * &i));
        }
    }
    let (dp, dm) = (plus.det(), minus.det());
    let show = |x: &Mat| (0..8).map(|r| (0..8).map(|c| x.get(r, c).to_string()).collect()).collect();
    Ok(ReducedCan {
        rows: M_ROWS.iter().map(|s| s.to_string()).collect(),
        cols: M_COLS.iter().map(|s| s.to_string()).collect(),
        plus: show(&plus),
        minus: show(&minus),
        det_plus: dp.to_string(),
        det_minus: dm.to_string(),
        bijective: !dp.is_zero() && !dm.is_zero(),
        plus_mat: plus,
        minus_mat: minus,
    })
}

/// Coideal subalgebras of the circle Hopf algebra drawn in the lattice figure,
/// with the subalgebras of `A` they fix.
pub const FIGURE: [(&str, &[usize], &str); 8] = [
    ("1", &[], "A"),
    ("⟨t⟩", &[circle::T], "⟨X,Z⟩"),
    ("⟨(c²-s²)t⟩", &[circle::TD], "⟨X,JZ⟩"),
    ("⟨c²-s²⟩", &[circle::D], "⟨J,X,Z²⟩"),
    ("⟨c²-s²,t⟩", &[circle::D, circle::T], "⟨X,Z²⟩"),
    ("⟨c,s⟩", &[circle::C, circle::S], "⟨J,X,Z⁴⟩"),
    ("⟨ct,st⟩", &[circle::TC, circle::TS], "⟨X,JZ²⟩"),
    ("H", &[0, 1, 2, 3, 4, 5, 6, 7], "B"),
];

/// Covering pairs `(smaller, larger)` of subalgebras in the figure, as indices into [`FIGURE`].
pub const FIGURE_COVERS: [(usize, usize); 11] =
    [(4, 1), (4, 2), (4, 3), (5, 3), (6, 3), (7, 4), (7, 5), (7, 6), (1, 0), (2, 0), (3, 0)];

/// Generators of the figure's subalgebras as `(a, b, c)` exponents of `J^a X^b Z^c`.
fn figure_generators(k: usize) -> Vec<(usize, usize, usize)> {
    match k {
        0 => vec![(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        1 => vec![(0, 1, 0), (0, 0, 1)],
        2 => vec![(0, 1, 0), (1, 0, 1)],
        3 => vec![(1, 0, 0), (0, 1, 0), (0, 0, 2)],
        4 => vec![(0, 1, 0), (0, 0, 2)],
        5 => vec![(1, 0, 0), (0, 1, 0), (0, 0, 4)],
        6 => vec![(0, 1, 0), (1, 0, 2)],
        _ => vec![(0, 1, 0), (0, 0, 4)],
    }
}

/// The figure's pairs `(K, subalgebra generated by the listed elements)`.
pub fn figure_pairs(ex: &PaperExample) -> Result<Vec<(CoidealSubalgebra, Subspace)>> {
    let (h, f) = (&ex.module.hopf, ex.module.field());
    (0..FIGURE.len())
        .map(|k| {
            let seed: Vec<SVec> = FIGURE[k].1.iter().map(|&x| sparse::unit(x, f)).collect();
            let kk = close_coideal_subalgebra(h, &Subspace::span_sparse(f, 8, &seed))?;
            let gens: Vec<SVec> = figure_generators(k).into_iter().map(|(a, b, c)| sparse::unit(mono(a, b, c), f)).collect();
            Ok((kk, ex.module.alg.generated_subalgebra(&gens)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{coinvariants, ModuleAlgebra};
    use crate::hopf::verify_structure;
    use crate::hopf::Structure;

    #[test]
    fn algebra_relations() {
        let a = paper_algebra();
        let f = Field::Qi;
        let e = |x, y, z| sparse::unit(mono(x, y, z), f);
        let (j, x, z) = (e(1, 0, 0), e(0, 1, 0), e(0, 0, 1));
        assert_eq!(a.mul(&x, &z), sparse::scale(&a.mul(&z, &x), &f.i().unwrap()));
        assert_eq!(a.mul(&j, &j), sparse::scale(&a.unit, &f.int(-1)));
        assert_eq!(a.mul(&j, &z), a.mul(&z, &j));
        let x4 = (0..4).fold(a.unit.clone(), |p, _| a.mul(&p, &x));
        assert_eq!(x4, a.unit);
        assert!(!a.is_commutative());
        assert_eq!(mono_label(mono(1, 2, 3)), "JX^2Z^3");
    }

    #[test]
    fn printed_table_is_not_a_module() {
        let err = printed_table_action().unwrap_err();
        assert!(matches!(err, Error::Condition { ref name, .. } if name == "module associativity"));
    }

    #[test]
    fn example_verifies() {
        let ex = paper_example().unwrap();
        let m = &ex.module;
        let f = Field::Qi;
        let i = f.i().unwrap();
        let e = |x, y, z| sparse::unit(mono(x, y, z), f);
        assert_eq!(m.dim(), 128);
        assert_eq!(m.act(circle::C, &e(0, 0, 1)), vec![]);
        assert_eq!(m.act(circle::S, &e(0, 0, 1)), sparse::scale(&e(1, 0, 1), &i));
        assert_eq!(m.act(circle::C, &e(0, 0, 2)), sparse::scale(&e(0, 0, 2), &f.int(-1)));
        assert_eq!(m.act(circle::T, &e(1, 0, 0)), sparse::scale(&e(1, 0, 0), &f.int(-1)));
        let inv = m.invariants(&Subspace::full(f, 8));
        assert_eq!(inv, ex.b);
        assert_eq!(inv.dim(), 16);
        assert!(verify_structure(Structure::Algebra(&m.alg)).unwrap().ok);
    }

    #[test]
    fn table_rows_agree_at_j_equals_i() {
        // the printed table matches the action on the component J = i
        let ex = paper_example().unwrap();
        let m = &ex.module;
        let f = Field::Qi;
        let i = f.i().unwrap();
        let at_i = |v: &SVec| -> SVec {
            let mut acc = Acc::new();
            for (k, x) in v {
                let (a, rest) = (k / 64, k % 64);
                acc.add(rest, if a == 1 { x * &i } else { x.clone() });
            }
            acc.finish()
        };
        let z = |c| sparse::unit(mono(0, 0, c), f);
        let h = &m.hopf;
        let c2 = h.mul(&sparse::unit(circle::C, f), &sparse::unit(circle::C, f));
        let s2 = h.mul(&sparse::unit(circle::S, f), &sparse::unit(circle::S, f));
        let rows: [(SVec, [i64; 4]); 4] = [
            (sparse::unit(circle::C, f), [0, -1, 0, 1]),
            (sparse::unit(circle::S, f), [-1, 0, 1, 0]),
            (c2, [0, 1, 0, 1]),
            (s2, [1, 0, 1, 0]),
        ];
        for (hv, expect) in rows {
            for (k, c) in [1, 2, 3, 4].into_iter().enumerate() {
                let got = at_i(&m.act_vec(&hv, &z(c)));
                assert_eq!(got, sparse::scale(&at_i(&z(c)), &f.int(expect[k])), "{hv:?} on Z^{c}");
            }
        }
    }

    #[test]
    fn reduced_matrix_matches_can_table() {
        let ex = paper_example().unwrap();
        let r = reduced_can(&ex).unwrap();
        assert!(r.bijective);
        let f = Field::Qi;
        let mut diffs = Vec::new();
        for (row, vals) in PRINTED_M.iter().enumerate() {
            for (col, v) in vals.iter().enumerate() {
                if *r.plus_mat.get(row, col) != f.int(*v) {
                    diffs.push((row, col));
                }
            }
        }
        assert_eq!(diffs, vec![(6, 3), (7, 1)]);
        let table: Vec<&[i64]> = TABLE_M.iter().map(|r| &r[..]).collect();
        assert_eq!(r.plus_mat, Mat::from_ints(f, &table));
        assert!(!Mat::from_ints(f, &PRINTED_M.iter().map(|r| &r[..]).collect::<Vec<_>>()).det().is_zero());
    }

    #[test]
    fn comodule_coinvariants_are_b() {
        let ex = paper_example().unwrap();
        let a = ex.module.to_comodule().unwrap();
        assert_eq!(coinvariants(&a, None).unwrap(), ex.b);
        let _ = ModuleAlgebra::clone(&ex.module);
    }

    #[test]
    fn figure_invariants() {
        let ex = paper_example().unwrap();
        let pairs = figure_pairs(&ex).unwrap();
        let dims: Vec<usize> = pairs.iter().map(|(k, _)| k.dim()).collect();
        assert_eq!(dims, vec![1, 2, 2, 2, 4, 4, 4, 8]);
        for (idx, (k, sub)) in pairs.iter().enumerate() {
            assert_eq!(ex.module.invariants(&k.space), *sub, "{}", FIGURE[idx].2);
        }
        assert_eq!(pairs[3].1.dim(), 64);
        for (lo, hi) in FIGURE_COVERS {
            let (a, b) = (&pairs[lo].1, &pairs[hi].1);
            assert!(a.sparse_vectors().iter().all(|v| b.contains_sparse(v)));
            assert!(a.dim() < b.dim());
        }
    }
}
