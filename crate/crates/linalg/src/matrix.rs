use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{check_field, format_vector, Field, LinalgError, Scalar, Subspace};

/// Dense row-major matrix over a single exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed so that a matrix with no
    /// rows still has a width.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            check_field(field, &row)?;
            data.extend(row);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, rows).expect("rectangular integer matrix")
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    out[(i, j)].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        check_field(self.field, v)?;
        Ok((0..self.rows).map(|i| crate::dot(self.field, self.row(i), v)).collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vstack of widths {} and {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `self` to the left of `other`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "hstack of heights {} and {}",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Reduced row echelon form.
    ///
    /// Pivots are chosen in the leftmost column that still has a nonzero
    /// entry, taking the first such row, and leading entries are scaled to 1,
    /// so the result is the unique RREF. Over `Q` the elimination runs on
    /// integer rows with fraction-free Gauss-Jordan steps (Bareiss update with
    /// exact division by the previous pivot); denominators only appear in the
    /// final normalisation.
    pub fn rref(&self) -> Rref {
        match self.field {
            Field::Rational => self.rref_fraction_free(),
            Field::Prime(_) => self.rref_field(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    fn rref_fraction_free(&self) -> Rref {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..m).map(|i| integer_row(self.row(i))).collect();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (before, rest) = a.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
            let piv = pivot_row[c].clone();
            for row in before.iter_mut().chain(after.iter_mut()) {
                let f = std::mem::take(&mut row[c]);
                for (j, x) in row.iter_mut().enumerate() {
                    if j == c {
                        continue;
                    }
                    let mut v = &piv * &*x;
                    if !f.is_zero() && !pivot_row[j].is_zero() {
                        v -= &f * &pivot_row[j];
                    }
                    *x = exact_div(v, &prev);
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        let mut out = Matrix::zeros(Field::Rational, m, n);
        for (i, &c) in pivots.iter().enumerate() {
            let lead = a[i][c].clone();
            for j in 0..n {
                if !a[i][j].is_zero() {
                    out[(i, j)] = Scalar::Rational(BigRational::new(a[i][j].clone(), lead.clone()));
                }
            }
        }
        Rref { matrix: out, pivots }
    }

    fn rref_field(&self) -> Rref {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].inv().expect("nonzero pivot");
            for x in a.row_mut(r) {
                *x = &*x * &inv;
            }
            let pivot_row = a.row(r).to_vec();
            for i in 0..m {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = -&a[(i, c)];
                crate::axpy(a.row_mut(i), &f, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: a, pivots }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Kernel `{v : self * v = 0}` as a canonical subspace.
    pub fn nullspace(&self) -> Subspace {
        let rref = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![self.field.zero(); n];
            v[free] = self.field.one();
            for (i, &p) in rref.pivots.iter().enumerate() {
                v[p] = -&rref.matrix[(i, free)];
            }
            basis.push(v);
        }
        Subspace::span(self.field, n, basis).expect("kernel vectors are well formed")
    }

    /// Column space, as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        let cols = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(self.field, self.rows, cols).expect("columns are well formed")
    }

    /// One solution of `self * x = target`, with every free variable set to
    /// zero, or `None` when `target` is outside the column space.
    pub fn solve(&self, target: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if target.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "system has {} equations, target has {} entries",
                self.rows,
                target.len()
            )));
        }
        check_field(self.field, target)?;
        let column = Matrix::from_fn(self.field, self.rows, 1, |i, _| target[i].clone());
        let aug = self.hstack(&column)?;
        let rref = aug.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in rref.pivots.iter().enumerate() {
            x[p] = rref.matrix[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| rref.matrix[(i, n + j)].clone()))
    }
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        let r = x.as_rational().expect("rational row");
        lcm = lcm.lcm(r.denom());
    }
    row.iter()
        .map(|x| {
            let r = x.as_rational().expect("rational row");
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return v;
    }
    let (q, rem) = v.div_rem(d);
    debug_assert!(rem.is_zero(), "fraction-free step produced a non-exact division");
    q
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}; {}x{}]", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " {}", format_vector(self.row(i)))?;
        }
        Ok(())
    }
}
