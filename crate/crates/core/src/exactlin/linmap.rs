use crate::error::{Error, Result};

use super::field::{Field, Scalar};
use super::subspace::Subspace;

/// A linear map between coordinate spaces. Column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

fn check_dim(op: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { op, expected, got });
    }
    Ok(())
}

impl LinMap {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> LinMap {
        LinMap {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> LinMap {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinMap {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<LinMap> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            check_dim("from_rows", cols, row.len())?;
            data.extend(row);
        }
        LinMap::from_data(field, nrows, cols, data)
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<LinMap> {
        let cols = columns.len();
        let mut m = LinMap::zeros(field, rows, cols);
        for (c, col) in columns.iter().enumerate() {
            check_dim("from_columns", rows, col.len())?;
            for (r, v) in col.iter().enumerate() {
                m.data[r * cols + c] = v.clone();
            }
        }
        m.validate()?;
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> LinMap {
        let cols = rows.first().map_or(0, |r| r.len());
        LinMap::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    fn from_data(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<LinMap> {
        check_dim("from_data", rows * cols, data.len())?;
        let m = LinMap {
            field,
            rows,
            cols,
            data,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        if let Some(bad) = self.data.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::Parse(format!("{bad} is not in {:?}", self.field)));
        }
        Ok(())
    }

    /// The `n×1` column vector `e_i`.
    pub fn basis_vector(field: Field, n: usize, i: usize) -> LinMap {
        let mut v = LinMap::zeros(field, n, 1);
        v.data[i] = field.one();
        v
    }

    /// The map sending `e_j` to `e_{images[j]}`.
    pub fn permutation(field: Field, rows: usize, images: &[usize]) -> LinMap {
        let mut m = LinMap::zeros(field, rows, images.len());
        for (c, &r) in images.iter().enumerate() {
            m.data[r * images.len() + c] = field.one();
        }
        m
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn same_field(&self, other: &LinMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinMap) -> Result<LinMap> {
        self.same_field(rhs)?;
        check_dim("compose", self.cols, rhs.rows)?;
        let f = self.field;
        let mut out = LinMap::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !f.is_zero(b) {
                        let idx = r * rhs.cols + c;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composes a chain applied right to left: `chain(&[a, b, c]) = a∘b∘c`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::Wiring("empty composition chain".into()))?;
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_dim("apply", self.cols, v.len())?;
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    fn zip_with(&self, other: &LinMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinMap> {
        self.same_field(other)?;
        check_dim("elementwise rows", self.rows, other.rows)?;
        check_dim("elementwise cols", self.cols, other.cols)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(LinMap { data, ..*self })
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        let f = self.field;
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        let f = self.field;
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let f = self.field;
        LinMap {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn kron(&self, other: &LinMap) -> Result<LinMap> {
        self.same_field(other)?;
        let f = self.field;
        let (br, bc) = (other.rows, other.cols);
        Ok(LinMap::from_fn(
            f,
            self.rows * br,
            self.cols * bc,
            |r, c| {
                let a = self.get(r / br, c / bc);
                if f.is_zero(a) {
                    return f.zero();
                }
                f.mul(a, other.get(r % br, c % bc))
            },
        ))
    }

    /// Kronecker product of a list of factors, left to right.
    pub fn kron_all(field: Field, factors: &[&LinMap]) -> Result<LinMap> {
        factors
            .iter()
            .try_fold(LinMap::identity(field, 1), |acc, m| acc.kron(m))
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[LinMap]) -> Result<LinMap> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.field != field {
                return Err(Error::FieldMismatch(field, b.field));
            }
            check_dim("vstack", cols, b.cols)?;
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(LinMap {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn hstack(field: Field, rows: usize, blocks: &[LinMap]) -> Result<LinMap> {
        let ts: Vec<LinMap> = blocks.iter().map(LinMap::transpose).collect();
        Ok(LinMap::vstack(field, rows, &ts)?.transpose())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == LinMap::identity(self.field, self.rows)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (LinMap, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for k in 0..m.cols {
                let v = f.mul(m.get(r, k), &inv);
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for k in 0..m.cols {
                    let v = f.sub(m.get(i, k), &f.mul(&factor, m.get(r, k)));
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space, with basis in reduced column echelon form.
    pub fn kernel(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut span = LinMap::zeros(f, self.cols, free.len());
        for (k, &j) in free.iter().enumerate() {
            span.set(j, k, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                span.set(p, k, f.neg(r.get(i, j)));
            }
        }
        Subspace::span(&span)
    }

    pub fn invert(&self) -> Result<LinMap> {
        if !self.is_square() {
            return Err(Error::SingularMap(format!(
                "{}x{} map is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = LinMap::hstack(
            self.field,
            n,
            &[self.clone(), LinMap::identity(self.field, n)],
        )?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMap(format!("rank {} < {n}", self.rank())));
        }
        Ok(LinMap::from_fn(self.field, n, n, |i, j| {
            r.get(i, n + j).clone()
        }))
    }

    /// `self^k` for square maps; negative powers use `inverse`.
    pub fn pow(&self, k: i32, inverse: &LinMap) -> Result<LinMap> {
        let base = if k < 0 { inverse } else { self };
        (0..k.unsigned_abs()).try_fold(LinMap::identity(self.field, self.rows), |acc, _| {
            base.compose(&acc)
        })
    }

    /// Columns where the two maps differ.
    pub fn differing_columns(&self, other: &LinMap) -> Result<Vec<usize>> {
        self.same_field(other)?;
        check_dim("compare rows", self.rows, other.rows)?;
        check_dim("compare cols", self.cols, other.cols)?;
        Ok((0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
            .collect())
    }

    /// The columns `cols` of `self`, in that order.
    pub fn select_columns(&self, cols: &[usize]) -> LinMap {
        LinMap::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    /// The rows `rows` of `self`, in that order.
    pub fn select_rows(&self, rows: &[usize]) -> LinMap {
        LinMap::from_fn(self.field, rows.len(), self.cols, |r, c| {
            self.get(rows[r], c).clone()
        })
    }

    /// Same entries, read in row-major order, laid out as `rows × cols`.
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<LinMap> {
        check_dim("reshape", self.rows * self.cols, rows * cols)?;
        Ok(LinMap {
            field: self.field,
            rows,
            cols,
            data: self.data.clone(),
        })
    }
}
