use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix over one field. Maps act as `y = M·x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan reduction of `rows` in place; returns the pivot columns.
/// Nonzero rows end up first, in pivot order.
pub(crate) fn reduce_rows(rows: &mut Vec<Vec<Scalar>>, ncols: usize, stop_at: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols.min(stop_at) {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        let nz: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &nz {
            rows[r][j] = &rows[r][j] * &inv;
        }
        let pivot_row: Vec<(usize, Scalar)> = nz.iter().map(|&j| (j, rows[r][j].clone())).collect();
        par::for_each_mut(rows, |i, row| {
            if i == r || row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for (j, v) in &pivot_row {
                row[*j] = &row[*j] - &(&f * v);
            }
        });
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and foreign-field entries.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::Dimension(format!(
                    "row {i} has length {} (expected {c})",
                    row.len()
                )));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "entry {x} is over {} not {field}",
                        x.field()
                    )));
                }
                data.push(x);
            }
        }
        Ok(Mat {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Like [`Mat::from_rows`] but with an explicit column count (for zero rows).
    pub fn from_row_vecs(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Mat {
        if rows.is_empty() {
            return Mat::zeros(field, 0, cols);
        }
        let m = Mat::from_rows(field, rows).expect("well-formed rows");
        assert_eq!(m.cols, cols);
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix of small integers, convenient in tests.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Mat {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Mat::from_rows(field, v).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        s = &s + &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Mat { data, ..*self }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Mat { data, ..*self }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { data, ..*self }
    }

    /// Kronecker product; the basis `e_i⊗e_j` is indexed `i·n + j`.
    pub fn kron(&self, o: &Mat) -> Mat {
        Mat::from_fn(
            self.field,
            self.rows * o.rows,
            self.cols * o.cols,
            |i, j| {
                let a = self.get(i / o.rows, j / o.cols);
                if a.is_zero() {
                    return self.field.zero();
                }
                a * o.get(i % o.rows, j % o.cols)
            },
        )
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        Mat::from_fn(self.field, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn rref(&self) -> Rref {
        let mut rows = self.row_vecs();
        let pivots = reduce_rows(&mut rows, self.cols, self.cols);
        rows.truncate(pivots.len());
        let rank = pivots.len();
        Rref {
            mat: Mat::from_row_vecs(self.field, self.cols, rows),
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Basis of the null space, one row per free column, in column order.
    pub fn kernel(&self) -> Mat {
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.mat.get(i, f);
                }
                v
            })
            .collect();
        Mat::from_row_vecs(self.field, self.cols, rows)
    }

    /// A particular solution of `M·x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        let pivots = reduce_rows(&mut rows, self.cols + 1, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = reduce_rows(&mut rows, 2 * n, n);
        if pivots.len() < n {
            return None;
        }
        let out = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Mat::from_row_vecs(self.field, n, out))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            det = &det * &rows[c][c];
            let inv = rows[c][c].inv().unwrap();
            let pivot_row: Vec<(usize, Scalar)> = (c..n)
                .filter(|&j| !rows[c][j].is_zero())
                .map(|j| (j, rows[c][j].clone()))
                .collect();
            let (head, tail) = rows.split_at_mut(c + 1);
            let _ = head;
            par::for_each_mut(tail, |_, row| {
                if row[c].is_zero() {
                    return;
                }
                let f = &row[c] * &inv;
                for (j, v) in &pivot_row {
                    row[*j] = &row[*j] - &(&f * v);
                }
            });
        }
        det
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_dependent_rows() {
        let id = Mat::identity(Field::Q, 3);
        let r = id.rref();
        assert_eq!((r.mat.clone(), r.rank), (id, 3));
        let m = Mat::from_ints(Field::Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.mat, Mat::from_ints(Field::Q, &[&[1, 2]]));
    }

    #[test]
    fn rref_over_gf7_matches_determinant() {
        let f = Field::Fp(7);
        let m = Mat::from_ints(f, &[&[3, 1], &[1, 2]]);
        assert_eq!(m.det(), f.int(5));
        let r = m.rref();
        assert_eq!(r.mat, Mat::identity(f, 2));
    }

    #[test]
    fn mixed_field_rows_are_rejected() {
        let rows = vec![vec![Field::Q.one(), Field::Fp(5).one()]];
        assert!(matches!(
            Mat::from_rows(Field::Q, rows),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn kron_of_scalars() {
        let a = Mat::from_ints(Field::Q, &[&[2]]);
        let b = Mat::from_ints(Field::Q, &[&[3]]);
        assert_eq!(a.kron(&b), Mat::from_ints(Field::Q, &[&[6]]));
    }

    #[test]
    fn solve_singular_consistent_system() {
        let m = Mat::from_ints(Field::Q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let rhs: Vec<Scalar> = [6, 12, 2].iter().map(|&x| Field::Q.int(x)).collect();
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.apply(&x), rhs);
        let bad: Vec<Scalar> = [6, 11, 2].iter().map(|&x| Field::Q.int(x)).collect();
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn inverse_and_kernel() {
        let m = Mat::from_ints(Field::Q, &[&[2, 1], &[1, 1]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat::identity(Field::Q, 2));
        let s = Mat::from_ints(Field::Q, &[&[1, 1, 0], &[0, 1, 1]]);
        let k = s.kernel();
        assert_eq!(k, Mat::from_ints(Field::Q, &[&[1, -1, 1]]));
        assert!(s.mul(&k.transpose()).is_zero());
    }
}
