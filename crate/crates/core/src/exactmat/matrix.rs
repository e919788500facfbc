use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Field, Scalar};
use crate::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// The field is stored alongside the entries so that empty matrices (zero rows
/// or zero columns, which occur constantly for zero-dimensional vertex spaces)
/// still know where they live.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row-major entries, checking length and field.
    pub fn from_entries(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(format!("entry over {} in a matrix over {field}", bad.field())));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from explicit rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("row of length {} in a matrix with {cols} columns", r.len())));
        }
        Matrix::from_entries(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer rows");
                r.iter().map(|&x| field.from_i64(x)).collect()
            })
            .collect();
        Matrix::from_rows(field, cols, data).expect("integer rows are well formed")
    }

    /// A single column vector.
    pub fn column(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_entries(field, v.len(), 1, v.to_vec()).expect("column vector")
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!("{} vs {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        Matrix { entries, ..self.clone() }
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "submatrix out of range");
        let mut out = Matrix::zeros(self.field, nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Assembles a block matrix. Blocks in one grid row must agree on their
    /// row count, blocks in one grid column on their column count.
    pub fn block(field: Field, grid: &[Vec<Matrix>]) -> Result<Matrix> {
        let ncols = grid.first().map_or(0, Vec::len);
        if grid.iter().any(|row| row.len() != ncols) {
            return Err(Error::RaggedBlocks("grid rows have different lengths".into()));
        }
        let mut heights = Vec::with_capacity(grid.len());
        for (bi, row) in grid.iter().enumerate() {
            let h = row.first().map_or(0, Matrix::rows);
            if row.iter().any(|m| m.rows != h) {
                return Err(Error::RaggedBlocks(format!("block row {bi} has mixed heights")));
            }
            heights.push(h);
        }
        let mut widths = Vec::with_capacity(ncols);
        for bj in 0..ncols {
            let w = grid[0][bj].cols;
            if grid.iter().any(|row| row[bj].cols != w) {
                return Err(Error::RaggedBlocks(format!("block column {bj} has mixed widths")));
            }
            widths.push(w);
        }
        for m in grid.iter().flatten() {
            if m.field != field {
                return Err(Error::FieldMismatch(format!("block over {} in grid over {field}", m.field)));
            }
        }
        let mut out = Matrix::zeros(field, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (row, h) in grid.iter().zip(&heights) {
            let mut c0 = 0;
            for (m, w) in row.iter().zip(&widths) {
                out.paste(r0, c0, m);
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, parts: &[Matrix]) -> Result<Matrix> {
        if parts.is_empty() {
            return Ok(Matrix::zeros(field, 0, cols));
        }
        let grid: Vec<Vec<Matrix>> = parts.iter().map(|m| vec![m.clone()]).collect();
        let out = Matrix::block(field, &grid)?;
        if out.cols != cols {
            return Err(Error::DimensionMismatch(format!("expected {cols} columns, found {}", out.cols)));
        }
        Ok(out)
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    ///
    /// Among the candidate pivots in a column the entry of smallest bit size is
    /// chosen, which keeps rational entries short on the inputs that occur here.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pick = (row..m.rows)
                .filter(|&i| !m.get(i, col).is_zero())
                .min_by_key(|&i| m.get(i, col).bit_size());
            let Some(p) = pick else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let pv = m.get(row, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    ///
    /// Each basis vector has a one in its own free coordinate and zeros in the
    /// other free coordinates.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Echelon { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Rows spanning the left null space `{w : w * self = 0}`. Composing with
    /// this matrix is a cokernel projection for `self`.
    pub fn cokernel_projection(&self) -> Matrix {
        let basis = self.transpose().kernel_basis();
        let n = basis.len();
        Matrix::from_entries(self.field, n, self.rows, basis.into_iter().flatten().collect())
            .expect("kernel vectors have the row count as length")
    }

    /// One solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        if let Some(bad) = b.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(format!("{} vs {}", bad.field(), self.field)));
        }
        let aug = Matrix::block(self.field, &[vec![self.clone(), Matrix::column(self.field, b)]])?;
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let aug = Matrix::block(self.field, &[vec![self.clone(), Matrix::identity(self.field, n)]])?;
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        Ok(Some(reduced.submatrix(0, n, n, n)))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(n: i64) -> Scalar {
        Q.from_i64(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(Q, 3, 2).rank(), 0);
        assert_eq!(Matrix::identity(Q, 4).rank(), 4);
        // proportional columns, eliminated by hand: rank 1
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4], &[3, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(Q, 2, 2).kernel_basis().len(), 2);
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], q(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let x = Matrix::identity(Q, 2).solve(&[q(3), q(5)]).unwrap().unwrap();
        assert_eq!(x, [q(3), q(5)]);
        let a = Matrix::from_i64(Q, &[&[1, 1]]);
        let x = a.solve(&[q(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], q(2));
        let a = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert_eq!(a.solve(&[q(0), q(1)]).unwrap(), None);
        assert!(matches!(a.solve(&[q(0)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn block_examples() {
        let i1 = Matrix::identity(Q, 1);
        let z = Matrix::zeros(Q, 1, 1);
        let m = Matrix::block(Q, &[vec![i1.clone(), z.clone()], vec![z.clone(), i1.clone()]]).unwrap();
        assert_eq!(m, Matrix::identity(Q, 2));
        assert_eq!(Matrix::block(Q, &[vec![i1.clone()]]).unwrap(), i1);
        let a = Matrix::zeros(Q, 1, 2);
        let b = Matrix::identity(Q, 2);
        assert_eq!(Matrix::block(Q, &[vec![a.clone()], vec![b.clone()]]).unwrap().shape(), (3, 2));
        assert!(matches!(
            Matrix::block(Q, &[vec![a], vec![i1]]),
            Err(Error::RaggedBlocks(_))
        ));
    }

    #[test]
    fn inverse_and_cokernel() {
        let a = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().unwrap(), None);

        let h = Matrix::from_i64(Q, &[&[1], &[2], &[3]]);
        let p = h.cokernel_projection();
        assert_eq!(p.shape(), (2, 3));
        assert!(p.mul(&h).unwrap().is_zero());
        assert_eq!(p.rank(), 2);
    }

    #[test]
    fn prime_field_rank() {
        let f = Field::prime(2).unwrap();
        // [[1,1],[1,1]] has rank 1 everywhere, [[1,1],[1,0]] rank 2
        assert_eq!(Matrix::from_i64(f, &[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(Matrix::from_i64(f, &[&[1, 1], &[1, 0]]).rank(), 2);
        // over GF(2), 2 == 0
        assert_eq!(Matrix::from_i64(f, &[&[2, 4]]).rank(), 0);
    }
}
