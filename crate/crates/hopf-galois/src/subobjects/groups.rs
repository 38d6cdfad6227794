use serde::Serialize;

use super::{GeneralizedQuotient, RightIdealCoideal};
use crate::builders::{dual_group_algebra, group_algebra, GroupTable};
use crate::error::{Error, Result};
use crate::lattice::FinitePoset;
use crate::linalg::sparse::{self, SVec};
use crate::linalg::Subspace;
use crate::scalar::Field;

/// Subgroups of `G` with the matching generalized quotients of `k[G]` and `k[G]*`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSubobjects {
    pub subgroups: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub subgroup_poset: FinitePoset,
    /// `ker(k[G] → k[G₀\G])`, i.e. `k[G₀]⁺k[G]`.
    #[serde(skip)]
    pub group_algebra_ideals: Vec<Subspace>,
    /// `span{δ_g : g ∉ G₀}`.
    #[serde(skip)]
    pub dual_ideals: Vec<Subspace>,
    /// Quotients ordered by `Q₁ ≤ Q₂ ⇔ I₂ ⊆ I₁`.
    pub group_algebra_poset: FinitePoset,
    pub dual_poset: FinitePoset,
    /// `G₀ ⊆ G₁ ⇔ Q(G₁) ≤ Q(G₀)` in `k[G]`.
    pub group_algebra_anti_isomorphic: bool,
    /// `G₀ ⊆ G₁ ⇔ Q(G₀) ≤ Q(G₁)` in `k[G]*`.
    pub dual_isomorphic: bool,
}

fn quotient_poset(labels: &[String], ideals: &[Subspace]) -> Result<FinitePoset> {
    FinitePoset::from_fn(labels.to_vec(), |a, b| ideals[a].contains(&ideals[b]))
}

pub fn group_subobjects(g: &GroupTable, field: Field) -> Result<GroupSubobjects> {
    let n = g.order;
    let subgroups = g.subgroups();
    let labels: Vec<String> = subgroups.iter().map(|s| g.subgroup_label(s)).collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
    let subgroup_poset =
        FinitePoset::from_fn(labels.clone(), |a, b| subset(&subgroups[a], &subgroups[b]))?;

    let kg = group_algebra(g, field);
    let kg_dual = dual_group_algebra(g, field);
    let mut group_algebra_ideals = Vec::new();
    let mut dual_ideals = Vec::new();
    for s in &subgroups {
        let mut gens: Vec<SVec> = Vec::new();
        for x in 0..n {
            for &k in s {
                let y = g.mul(k, x);
                if y != x {
                    gens.push(sparse::sub(
                        &sparse::unit(y, field),
                        &sparse::unit(x, field),
                        field,
                    ));
                }
            }
        }
        let ideal = Subspace::span_sparse(field, n, &gens);
        let outside: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        let dual = Subspace::coordinate(field, n, &outside);
        for (h, space) in [(&kg, &ideal), (&kg_dual, &dual)] {
            let ric = RightIdealCoideal::new(h, space.clone())
                .map_err(|e| Error::Internal(format!("subgroup {s:?}: {e}")))?;
            GeneralizedQuotient::new(h, ric)?;
        }
        group_algebra_ideals.push(ideal);
        dual_ideals.push(dual);
    }
    let group_algebra_poset = quotient_poset(&labels, &group_algebra_ideals)?;
    let dual_poset = quotient_poset(&labels, &dual_ideals)?;
    let m = subgroups.len();
    let pairs = || (0..m).flat_map(|a| (0..m).map(move |b| (a, b)));
    let group_algebra_anti_isomorphic =
        pairs().all(|(a, b)| subgroup_poset.le(a, b) == group_algebra_poset.le(b, a));
    let dual_isomorphic = pairs().all(|(a, b)| subgroup_poset.le(a, b) == dual_poset.le(a, b));
    Ok(GroupSubobjects {
        subgroups,
        labels,
        subgroup_poset,
        group_algebra_ideals,
        dual_ideals,
        group_algebra_poset,
        dual_poset,
        group_algebra_anti_isomorphic,
        dual_isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let s = group_subobjects(&GroupTable::trivial(), Field::Q).unwrap();
        assert_eq!(s.subgroups.len(), 1);
        assert_eq!(s.group_algebra_ideals[0].dim(), 0);
    }

    #[test]
    fn s3_and_d8() {
        let s = group_subobjects(&GroupTable::s3(), Field::Q).unwrap();
        assert_eq!(s.subgroups.len(), 6);
        assert!(s.group_algebra_anti_isomorphic && s.dual_isomorphic);
        for (sub, i) in s.subgroups.iter().zip(&s.group_algebra_ideals) {
            assert_eq!(i.dim(), 6 - 6 / sub.len());
        }
        let d = group_subobjects(&GroupTable::d8(), Field::Q).unwrap();
        assert_eq!(d.subgroups.len(), 10);
        assert!(d.group_algebra_anti_isomorphic && d.dual_isomorphic);
    }
}
