//! Incremental sparse row echelon form, for large sparse spans and ranks.

use std::collections::BTreeMap;

use super::sparse::{axpy, SVec};
use super::{Mat, Subspace};
use crate::scalar::{Field, Scalar};

/// Rows with distinct leading indices, each normalized to leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new(field: Field, ambient: usize) -> Echelon {
        Echelon {
            field,
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Reduces `v` against the current rows; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut cur = v.clone();
        let mut k = 0;
        while k < cur.len() {
            let (idx, c) = (cur[k].0, cur[k].1.clone());
            match self.rows.get(&idx) {
                Some(row) => cur = axpy(&cur, &-&c, row),
                None => k += 1,
            }
        }
        cur
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.first().cloned() else {
            return false;
        };
        let inv = c.inv().unwrap();
        self.rows
            .insert(lead, r.iter().map(|(i, x)| (*i, x * &inv)).collect());
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SVec>) {
        for v in vs {
            self.insert(v);
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    /// Fully reduced rows in pivot order.
    pub fn reduced_rows(&self) -> Vec<SVec> {
        let mut done: BTreeMap<usize, SVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let hits: Vec<(usize, Scalar)> = r
                .iter()
                .filter(|(i, _)| *i != p && done.contains_key(i))
                .cloned()
                .collect();
            for (i, c) in hits {
                r = axpy(&r, &-&c, &done[&i]);
            }
            done.insert(p, r);
        }
        done.into_values().collect()
    }

    pub fn to_subspace(&self) -> Subspace {
        let rows = self
            .reduced_rows()
            .iter()
            .map(|r| super::sparse::to_dense(r, self.ambient, self.field))
            .collect();
        let basis = Mat::from_row_vecs(self.field, self.ambient, rows);
        Subspace::from_rref_unchecked(basis, self.pivots())
    }
}

/// Kernel of the map whose `j`-th column is `cols[j] ∈ k^rows`.
///
/// Each column is tagged with `e_j` past index `rows`; echelon rows whose lead
/// lands in the tag part are exactly the kernel relations.
pub fn kernel_of_columns(field: Field, rows: usize, cols: &[SVec]) -> Subspace {
    let mut e = Echelon::new(field, rows + cols.len());
    for (j, c) in cols.iter().enumerate() {
        let mut v = c.clone();
        v.push((rows + j, field.one()));
        e.insert(&v);
    }
    let tails: Vec<SVec> = e
        .rows
        .range(rows..)
        .map(|(_, r)| r.iter().map(|(i, x)| (i - rows, x.clone())).collect())
        .collect();
    Subspace::span_sparse(field, cols.len(), &tails)
}

/// `k^n / W` with `W` in echelon form; quotient coordinates are the non-pivot indices.
#[derive(Clone, Debug)]
pub struct SparseQuotient {
    ech: Echelon,
    free: Vec<usize>,
    slot: Vec<Option<usize>>,
}

impl SparseQuotient {
    pub fn new(ech: Echelon) -> SparseQuotient {
        let n = ech.ambient;
        let free: Vec<usize> = (0..n).filter(|i| !ech.rows.contains_key(i)).collect();
        let mut slot = vec![None; n];
        for (k, &c) in free.iter().enumerate() {
            slot[c] = Some(k);
        }
        SparseQuotient { ech, free, slot }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient(&self) -> usize {
        self.ech.ambient
    }

    pub fn relations(&self) -> &Echelon {
        &self.ech
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Coordinates of the class of `v`.
    pub fn project(&self, v: &SVec) -> SVec {
        self.ech
            .reduce(v)
            .into_iter()
            .map(|(i, x)| (self.slot[i].unwrap(), x))
            .collect()
    }

    /// The representative `e_{free[k]}` of the `k`-th quotient basis vector.
    pub fn lift(&self, k: usize) -> SVec {
        vec![(self.free[k], self.ech.field.one())]
    }
}

/// Rank of a set of sparse vectors.
pub fn sparse_rank(field: Field, ambient: usize, vs: &[SVec]) -> usize {
    let mut e = Echelon::new(field, ambient);
    e.extend(vs);
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sparse::from_dense;

    #[test]
    fn matches_dense_rref() {
        let f = Field::Q;
        let m = Mat::from_ints(
            f,
            &[&[0, 2, 4, 1], &[1, 1, 0, 0], &[1, 3, 4, 1], &[0, 0, 1, 1]],
        );
        let mut e = Echelon::new(f, 4);
        for i in 0..4 {
            e.insert(&from_dense(m.row(i)));
        }
        assert_eq!(e.rank(), 3);
        assert_eq!(e.to_subspace(), Subspace::from_mat(&m));
    }

    #[test]
    fn kernel_of_columns_matches_dense_kernel() {
        let f = Field::Q;
        let m = Mat::from_ints(f, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let cols: Vec<SVec> = (0..4).map(|j| from_dense(&m.col(j))).collect();
        let k = kernel_of_columns(f, 3, &cols);
        assert_eq!(k, Subspace::from_mat(&m.kernel()));
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn sparse_quotient_projects_onto_free_columns() {
        let f = Field::Q;
        let mut e = Echelon::new(f, 3);
        e.insert(&vec![(0, f.one()), (2, f.int(-1))]);
        let q = SparseQuotient::new(e);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&vec![(0, f.int(3))]), vec![(1, f.int(3))]);
        assert_eq!(q.lift(0), vec![(1, f.one())]);
    }
}
