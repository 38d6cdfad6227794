use serde::Serialize;

use super::hom::map_coring;
use crate::builders::GroupTable;
use crate::error::{Error, Result};
use crate::extensions::ModuleAlgebra;
use crate::lattice::FinitePoset;
use crate::linalg::sparse::{self, SVec};
use crate::linalg::Subspace;

/// Largest group for the submonoid scan.
const SUBMONOID_CAP: usize = 12;
/// Largest group for the congruence scan.
const CONGRUENCE_CAP: usize = 8;

/// Submonoids `G₀ ⊆ G` against coideals of `Map(G, E)`:
/// `ξ(G₀) = ker(Map(G,E) → Map(G₀,E))`, `θ(I) = ⋂_{f∈I} ker f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmonoidBridge {
    pub submonoids: Vec<Vec<usize>>,
    /// `θξ = id` on every submonoid.
    pub theta_xi_id: bool,
    /// `ξθ(I) ⊇ I` on every candidate coideal.
    pub xi_theta_ge: bool,
    /// Each `ξ(G₀)` is a coideal.
    pub coideals: bool,
    pub dot: String,
}

/// Congruences `~` on `G` against subcorings of `Map(G, E)`:
/// `C_~` holds the functions constant on classes, `x ~_C y` iff `f(x) = f(y)` for `f ∈ C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceBridge {
    pub congruences: Vec<Vec<Vec<usize>>>,
    /// `θ_{C_θ} = θ`.
    pub theta_round_trip: bool,
    /// `C ⊆ C_{θ_C}` on every candidate.
    pub c_le_closure: bool,
    /// Whether each `C_θ` is closed under both `E`-actions and `Δ`.
    pub subcoring: Vec<bool>,
    pub dot: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub order: usize,
    pub submonoids: SubmonoidBridge,
    pub congruences: CongruenceBridge,
}

fn label(set: &[usize]) -> String {
    let xs: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", xs.join(","))
}

fn submonoids(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order;
    let others: Vec<usize> = (0..n).filter(|&x| x != g.identity).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut set = vec![g.identity];
        set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| *x));
        set.sort_unstable();
        if set.iter().all(|&x| set.iter().all(|&y| set.binary_search(&g.mul(x, y)).is_ok())) {
            out.push(set);
        }
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    // restricted growth strings
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur[i] = c;
            go(i + 1, max.max(c), cur, out);
        }
    }
    if n > 0 {
        go(1, 0, &mut cur, &mut out);
    }
    out
}

fn congruences(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order;
    let mut out: Vec<Vec<usize>> = set_partitions(n)
        .into_iter()
        .filter(|cls| {
            (0..n).all(|x| {
                (0..n).all(|y| cls[x] != cls[y] || (0..n).all(|z| cls[g.mul(x, z)] == cls[g.mul(y, z)] && cls[g.mul(z, x)] == cls[g.mul(z, y)]))
            })
        })
        .collect();
    out.sort_by_key(|c| std::cmp::Reverse(c.iter().max().copied().unwrap_or(0)));
    out
}

fn classes(cls: &[usize]) -> Vec<Vec<usize>> {
    let k = cls.iter().max().map_or(0, |m| m + 1);
    (0..k).map(|c| (0..cls.len()).filter(|&x| cls[x] == c).collect()).collect()
}

/// Value of `φ` at `g`, as a vector in `E`.
fn block(v: &SVec, g: usize, n: usize) -> SVec {
    v.iter().filter(|(i, _)| i / n == g).map(|(i, c)| (i % n, c.clone())).collect()
}

/// Both bridges for `Map(G, E)` with `G` acting on `E` through `e`.
pub fn congruence_submonoid_bridges(g: &GroupTable, e: &ModuleAlgebra) -> Result<BridgeReport> {
    let (ord, n, f) = (g.order, e.dim(), e.field());
    if ord > SUBMONOID_CAP {
        return Err(Error::EnumerationCap(SUBMONOID_CAP));
    }
    let k = map_coring(g, e)?;
    let d = ord * n;
    let xi = |g0: &[usize]| -> Subspace {
        let vs: Vec<SVec> = (0..ord).filter(|x| !g0.contains(x)).flat_map(|x| (0..n).map(move |a| sparse::unit(x * n + a, f))).collect();
        Subspace::span_sparse(f, d, &vs)
    };
    let theta = |i: &Subspace| -> Vec<usize> {
        let vs = i.sparse_vectors();
        (0..ord).filter(|&x| vs.iter().all(|v| block(v, x, n).is_empty())).collect()
    };
    let monoids = submonoids(g);
    let xis: Vec<Subspace> = monoids.iter().map(|m| xi(m)).collect();
    let theta_xi_id = monoids.iter().zip(&xis).all(|(m, x)| theta(x) == *m);
    let mut candidates = xis.clone();
    candidates.push(Subspace::zero(f, d));
    candidates.extend(xis.iter().map(|x| Subspace::span_sparse(f, d, &x.sparse_vectors().into_iter().take(1).collect::<Vec<_>>())));
    let xi_theta_ge = candidates.iter().all(|i| xi(&theta(i)).contains(i));
    let mut coideals = true;
    for x in &xis {
        coideals &= k.is_coideal(x)?;
    }
    let labels: Vec<String> = monoids.iter().map(|m| label(m)).collect();
    let poset = FinitePoset::from_fn(labels, |a, b| monoids[a].iter().all(|x| monoids[b].contains(x)))?;
    let submonoids = SubmonoidBridge { submonoids: monoids, theta_xi_id, xi_theta_ge, coideals, dot: poset.export_dot("submonoids") };

    if ord > CONGRUENCE_CAP {
        return Err(Error::EnumerationCap(CONGRUENCE_CAP));
    }
    let cong = congruences(g);
    let c_of = |cls: &[usize]| -> Subspace {
        let vs: Vec<SVec> = classes(cls)
            .iter()
            .flat_map(|c| (0..n).map(move |a| c.iter().map(|&x| (x * n + a, f.one())).collect::<SVec>()))
            .collect();
        Subspace::span_sparse(f, d, &vs)
    };
    let theta_c = |c: &Subspace| -> Vec<usize> {
        let vs = c.sparse_vectors();
        let mut cls = vec![usize::MAX; ord];
        let mut next = 0;
        for x in 0..ord {
            if cls[x] != usize::MAX {
                continue;
            }
            for y in x..ord {
                if cls[y] == usize::MAX && vs.iter().all(|v| block(v, x, n) == block(v, y, n)) {
                    cls[y] = next;
                }
            }
            next += 1;
        }
        cls
    };
    let cs: Vec<Subspace> = cong.iter().map(|c| c_of(c)).collect();
    let theta_round_trip = cong.iter().zip(&cs).all(|(c, s)| theta_c(s) == *c);
    let mut cands = cs.clone();
    cands.push(Subspace::span_sparse(f, d, &[(0..ord).map(|x| (x * n, f.one())).collect()]));
    cands.push(Subspace::full(f, d));
    let c_le_closure = cands.iter().all(|c| c_of(&theta_c(c)).contains(c));
    let subcoring = cs.iter().map(|c| k.is_subcoring(c)).collect::<Result<Vec<_>>>()?;
    let labels: Vec<String> = cong
        .iter()
        .map(|c| classes(c).iter().map(|cl| cl.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join("|"))
        .collect();
    // finer ≤ coarser
    let poset = FinitePoset::from_fn(labels, |a, b| (0..ord).all(|x| (0..ord).all(|y| cong[a][x] != cong[a][y] || cong[b][x] == cong[b][y])))?;
    let congruences = CongruenceBridge {
        congruences: cong.iter().map(|c| classes(c)).collect(),
        theta_round_trip,
        c_le_closure,
        subcoring,
        dot: poset.export_dot("congruences"),
    };
    Ok(BridgeReport { order: ord, submonoids, congruences })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{finite_field_ext, group_algebra};
    use crate::hopf::AlgebraStr;
    use crate::scalar::Field;

    fn trivial_on_k(g: &GroupTable) -> ModuleAlgebra {
        let f = Field::Q;
        let k = AlgebraStr::from_fn(f, 1, sparse::unit(0, f), |_, _| sparse::unit(0, f));
        ModuleAlgebra::new(k, group_algebra(g, f), vec![sparse::unit(0, f); g.order]).unwrap()
    }

    #[test]
    fn partitions_are_bell_numbers() {
        let counts: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn trivial_group() {
        let r = congruence_submonoid_bridges(&GroupTable::trivial(), &trivial_on_k(&GroupTable::trivial())).unwrap();
        assert_eq!(r.submonoids.submonoids, vec![vec![0]]);
        assert!(r.submonoids.theta_xi_id && r.submonoids.xi_theta_ge && r.submonoids.coideals);
        assert_eq!(r.congruences.congruences.len(), 1);
    }

    #[test]
    fn z2_on_gf4() {
        let e = finite_field_ext(2, &[1, 1, 1]).unwrap();
        let r = congruence_submonoid_bridges(&e.group, &e.module).unwrap();
        assert_eq!(r.submonoids.submonoids.len(), 2);
        assert!(r.submonoids.theta_xi_id && r.submonoids.xi_theta_ge && r.submonoids.coideals);
        assert_eq!(r.congruences.congruences.len(), 2);
        assert!(r.congruences.theta_round_trip && r.congruences.c_le_closure);
        // constants on all of G are not closed under the twisted right action
        assert_eq!(r.congruences.subcoring, vec![true, false]);
        assert!(r.submonoids.dot.contains("digraph"));
    }

    #[test]
    fn s3_submonoids_are_subgroups() {
        let g = GroupTable::s3();
        let r = congruence_submonoid_bridges(&g, &trivial_on_k(&g)).unwrap();
        assert_eq!(r.submonoids.submonoids.len(), 6);
        assert_eq!(r.submonoids.submonoids.len(), g.subgroups().len());
        assert!(r.submonoids.theta_xi_id && r.submonoids.xi_theta_ge && r.submonoids.coideals);
        // congruences of a group are its normal subgroups
        assert_eq!(r.congruences.congruences.len(), 3);
        assert!(r.congruences.theta_round_trip && r.congruences.c_le_closure);
        assert!(r.congruences.subcoring.iter().all(|&b| b));
    }
}
