mod common;

use hopf_galois::builders::{circle_hopf, dual_group_algebra, group_algebra, GroupTable};
use hopf_galois::hopf::{dual_hopf, find_group_likes, Convolution, HopfAlgebra};
use hopf_galois::lattice::{adjoint_from, Adjoint, GaloisConn};
use hopf_galois::linalg::sparse;
use hopf_galois::par::{with_exec, Exec};
use hopf_galois::subobjects::{h_coinvariants, k_plus_h, CoidealSubalgebra};
use hopf_galois::{Field, Mat, Scalar, Subspace};
use proptest::prelude::*;

fn mat(f: Field, rows: usize, cols: usize, entries: &[i64]) -> Mat {
    Mat::from_fn(f, rows, cols, |i, j| f.int(entries[(i * cols + j) % entries.len()]))
}

fn subspace(f: Field, n: usize, entries: &[i64], k: usize) -> Subspace {
    Subspace::from_mat(&mat(f, k, n, entries))
}

fn hopf(which: u8) -> HopfAlgebra {
    let f = Field::Q;
    match which % 5 {
        0 => group_algebra(&GroupTable::s3(), f),
        1 => dual_group_algebra(&GroupTable::s3(), f),
        2 => group_algebra(&GroupTable::cyclic(4), f),
        3 => dual_group_algebra(&GroupTable::klein(), f),
        _ => circle_hopf(f).unwrap(),
    }
}

fn apply(m: &Mat, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    sparse::from_dense(&m.apply(&sparse::to_dense(&v.to_vec(), m.cols(), m.field())))
}

fn connection(masks_p: &[u8], masks_q: &[u8], steps: &[(usize, usize)]) -> Option<GaloisConn> {
    let p = common::closure_lattice(masks_p, 12)?;
    let q = common::closure_lattice(masks_q, 12)?;
    let phi = common::sup_to_inf(&p, &q, steps);
    match adjoint_from(&phi, &p, &q.poset).unwrap() {
        Adjoint::Conn(c) => Some(c),
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subspace_lattice_is_modular(a in prop::collection::vec(-2i64..3, 8), b in prop::collection::vec(-2i64..3, 8), c in prop::collection::vec(-2i64..3, 8), k in 1usize..3) {
        let f = Field::Q;
        let (u, v, w) = (subspace(f, 4, &a, k), subspace(f, 4, &b, k), subspace(f, 4, &c, k));
        let lhs = u.intersect(&v.sum(&w).unwrap()).unwrap();
        let rhs = u.intersect(&v).unwrap().sum(&u.intersect(&w).unwrap()).unwrap();
        prop_assert!(lhs.contains(&rhs));
        let uw = u.sum(&w).unwrap();
        prop_assert_eq!(uw.intersect(&v.sum(&w).unwrap()).unwrap(), uw.intersect(&v).unwrap().sum(&w).unwrap());
    }

    #[test]
    fn annihilator_is_an_order_reversing_involution(a in prop::collection::vec(-3i64..4, 10), b in prop::collection::vec(-3i64..4, 5), k in 0usize..3) {
        let f = Field::Q;
        let u = subspace(f, 5, &a, k);
        let v = u.sum(&subspace(f, 5, &b, 1)).unwrap();
        prop_assert_eq!(u.annihilator().annihilator(), u.clone());
        prop_assert!(u.annihilator().contains(&v.annihilator()));
        prop_assert_eq!(u.dim() + u.annihilator().dim(), 5);
    }

    #[test]
    fn rref_is_idempotent(a in prop::collection::vec(-4i64..5, 12), p in prop::sample::select(vec![0u64, 3, 7])) {
        let f = if p == 0 { Field::Q } else { Field::fp(p).unwrap() };
        let m = mat(f, 3, 4, &a);
        let r = m.rref();
        prop_assert_eq!(r.mat.rref(), r);
    }

    #[test]
    fn kron_rank_is_multiplicative(a in prop::collection::vec(-2i64..3, 6), b in prop::collection::vec(-2i64..3, 6)) {
        let f = Field::Qi;
        let (x, y) = (mat(f, 2, 3, &a), mat(f, 3, 2, &b));
        prop_assert_eq!(x.kron(&y).rank(), x.rank() * y.rank());
    }

    #[test]
    fn antipode_reverses_products(which in 0u8..5, i in 0usize..8, j in 0usize..8) {
        let h = hopf(which);
        let (i, j) = (i % h.dim(), j % h.dim());
        let f = h.field();
        let (x, y) = (sparse::unit(i, f), sparse::unit(j, f));
        let s = &h.antipode;
        prop_assert_eq!(apply(s, &h.mul(&x, &y)), h.mul(&apply(s, &y), &apply(s, &x)));
    }

    #[test]
    fn convolution_is_associative_and_unital(which in 0u8..5, a in prop::collection::vec(-2i64..3, 11), b in prop::collection::vec(-2i64..3, 13), c in prop::collection::vec(-2i64..3, 7)) {
        let h = hopf(which);
        let (n, f) = (h.dim(), h.field());
        let conv = Convolution::new(h.coalg(), h.alg());
        let (x, y, z) = (mat(f, n, n, &a), mat(f, n, n, &b), mat(f, n, n, &c));
        prop_assert_eq!(conv.mul(&conv.mul(&x, &y), &z), conv.mul(&x, &conv.mul(&y, &z)));
        let u = conv.unit();
        prop_assert_eq!(conv.mul(&u, &x), x.clone());
        prop_assert_eq!(conv.mul(&x, &u), x);
    }

    #[test]
    fn double_dual_is_the_identity(which in 0u8..5) {
        let h = hopf(which);
        prop_assert_eq!(dual_hopf(&dual_hopf(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn group_likes_form_a_group(which in 0u8..5) {
        let h = hopf(which);
        let f = h.field();
        let gs: Vec<_> = find_group_likes(h.coalg()).unwrap().iter().map(|g| sparse::from_dense(g)).collect();
        prop_assert!(gs.contains(h.unit()));
        for x in &gs {
            prop_assert!(gs.contains(&apply(&h.antipode, x)));
            for y in &gs {
                prop_assert!(gs.contains(&h.mul(x, y)));
            }
        }
        prop_assert!(gs.iter().all(|g| g.iter().all(|(_, c)| *c != f.zero())));
    }

    #[test]
    fn takeuchi_on_cyclic_groups(n in 1usize..9) {
        let g = GroupTable::cyclic(n);
        let f = Field::Q;
        let h = group_algebra(&g, f);
        for sub in g.subgroups() {
            let vs: Vec<_> = sub.iter().map(|&x| sparse::unit(x, f)).collect();
            let k = CoidealSubalgebra::new(&h, Subspace::span_sparse(f, n, &vs)).unwrap();
            let q = k_plus_h(&h, &k).unwrap();
            prop_assert_eq!(q.dim(), n / sub.len());
            prop_assert_eq!(h_coinvariants(&h, &q).unwrap().space, k.space);
        }
    }

    #[test]
    fn parallel_and_sequential_agree(which in 0u8..5, a in prop::collection::vec(-2i64..3, 9)) {
        let h = hopf(which);
        let n = h.dim();
        let run = |exec| with_exec(exec, || {
            let m = mat(h.field(), n, n, &a).kron(&h.antipode);
            (m.rank(), m.rref(), find_group_likes(h.coalg()).unwrap())
        });
        prop_assert_eq!(run(Exec::Sequential), run(Exec::Parallel));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjoint_from_builds_the_unique_right_adjoint(
        mp in prop::collection::vec(0u8..16, 0..6),
        mq in prop::collection::vec(0u8..16, 0..6),
        steps in prop::collection::vec((0usize..12, 0usize..12), 0..5),
    ) {
        let Some(c) = connection(&mp, &mq, &steps) else { return Ok(()) };
        let (p, q) = (&c.p, &c.q);
        for i in 0..p.len() {
            for j in 0..q.len() {
                prop_assert_eq!(q.le(j, c.phi[i]), p.le(i, c.psi[j]));
            }
        }
        // any right adjoint sends q to the largest p with q ≤ φ(p)
        for j in 0..q.len() {
            let above: Vec<usize> = (0..p.len()).filter(|&i| q.le(j, c.phi[i])).collect();
            prop_assert_eq!(p.sup(&above), Some(c.psi[j]));
        }
        prop_assert!(c.law_failures().is_empty());
    }

    #[test]
    fn phi_reflects_suprema_and_closed_sets_are_complete(
        mp in prop::collection::vec(0u8..16, 0..5),
        mq in prop::collection::vec(0u8..16, 0..5),
        steps in prop::collection::vec((0usize..12, 0usize..12), 0..5),
    ) {
        let Some(c) = connection(&mp, &mq, &steps) else { return Ok(()) };
        let (p, q) = (&c.p, &c.q);
        let n = p.len();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let img: Vec<usize> = set.iter().map(|&i| c.phi[i]).collect();
            prop_assert_eq!(q.inf(&img), Some(c.phi[p.sup(&set).unwrap()]));
        }
        let (cp, _) = c.closed_elements();
        for a in &cp {
            for b in &cp {
                let meet = p.inf(&[*a, *b]).unwrap();
                prop_assert!(cp.contains(&meet));
                let upper: Vec<usize> = cp.iter().copied().filter(|&x| p.le(*a, x) && p.le(*b, x)).collect();
                let least = upper.iter().copied().find(|&x| upper.iter().all(|&y| p.le(x, y)));
                prop_assert!(least.is_some());
            }
        }
    }
}
