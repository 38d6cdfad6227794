//! Sorted sparse vectors and column-sparse linear maps.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no zero values.
pub type SVec = Vec<(usize, Scalar)>;

/// Accumulates index/value contributions into an [`SVec`].
#[derive(Default, Clone, Debug)]
pub struct Acc {
    map: BTreeMap<usize, Scalar>,
}

impl Acc {
    pub fn new() -> Acc {
        Acc::default()
    }

    pub fn add(&mut self, idx: usize, v: Scalar) {
        if v.is_zero() {
            return;
        }
        match self.map.get_mut(&idx) {
            Some(x) => *x = &*x + &v,
            None => {
                self.map.insert(idx, v);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, x: &SVec) {
        if c.is_zero() {
            return;
        }
        for (i, v) in x {
            self.add(*i, c * v);
        }
    }

    pub fn finish(self) -> SVec {
        self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

pub fn from_dense(v: &[Scalar]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SVec, n: usize, field: Field) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn unit(i: usize, field: Field) -> SVec {
    vec![(i, field.one())]
}

pub fn scale(v: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// `a + c·b`.
pub fn axpy(a: &SVec, c: &Scalar, b: &SVec) -> SVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sub(a: &SVec, b: &SVec, field: Field) -> SVec {
    axpy(a, &field.int(-1), b)
}

pub fn get(v: &SVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |(i, _)| *i)
        .ok()
        .map(|k| &v[k].1)
}

/// Tensor product of coordinate vectors, index `i·n + j`.
pub fn tensor(a: &SVec, b: &SVec, n: usize) -> SVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * n + j, x * y));
        }
    }
    out
}

/// A linear map stored by sparse columns: column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMap {
    pub field: Field,
    pub rows: usize,
    pub cols: Vec<SVec>,
}

impl SparseMap {
    pub fn new(field: Field, rows: usize, cols: Vec<SVec>) -> SparseMap {
        SparseMap { field, rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new();
        for (j, c) in x {
            acc.add_scaled(c, &self.cols[*j]);
        }
        acc.finish()
    }

    pub fn apply_dense(&self, x: &[Scalar]) -> Vec<Scalar> {
        to_dense(&self.apply(&from_dense(x)), self.rows, self.field)
    }

    pub fn to_dense(&self) -> super::Mat {
        let mut m = super::Mat::zeros(self.field, self.rows, self.cols.len());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn from_dense(m: &super::Mat) -> SparseMap {
        let cols = (0..m.cols()).map(|j| from_dense(&m.col(j))).collect();
        SparseMap::new(m.field(), m.rows(), cols)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMap) -> SparseMap {
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        SparseMap::new(self.field, self.rows, cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_merges_and_cancels() {
        let f = Field::Q;
        let a = vec![(0, f.int(1)), (2, f.int(3))];
        let b = vec![(1, f.int(5)), (2, f.int(1))];
        assert_eq!(
            axpy(&a, &f.int(-3), &b),
            vec![(0, f.int(1)), (1, f.int(-15))]
        );
    }

    #[test]
    fn tensor_index_convention() {
        let f = Field::Q;
        let t = tensor(&unit(1, f), &unit(2, f), 3);
        assert_eq!(t, vec![(5, f.one())]);
    }
}
