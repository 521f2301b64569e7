//! Exact integer matrices: determinants, rank, unimodularity, adjugates,
//! and Smith normal form with accumulated unimodular transforms.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = Int::from(*v);
            }
        }
        m
    }

    pub fn from_big_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        IntMatrix { rows: r, cols: c, data }
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

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc += Rat::from_integer(self[(i, k)].clone()) * &v[k];
                }
                acc
            })
            .collect()
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut a: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
                a[i][k] = Int::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        let d = self.det()?;
        Ok(d.abs().is_one())
    }

    /// Rank over the rationals, computed exactly.
    pub fn rank(&self) -> usize {
        rational_rank(
            &(0..self.rows)
                .map(|i| self.row(i).iter().map(|v| Rat::from_integer(v.clone())).collect())
                .collect::<Vec<Vec<Rat>>>(),
        )
    }

    /// Adjugate matrix: adj(A)[i][j] = cofactor C_ji, so A * adj(A) = det(A) * I.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut adj = Self::zero(n, n);
        if n == 0 {
            return Ok(adj);
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = minor.det()?;
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[(j, i)] = if sign > 0 { c } else { -c };
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut m = Self::zero(self.rows - 1, self.cols - 1);
        let mut r = 0;
        for i in 0..self.rows {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..self.cols {
                if j == skip_col {
                    continue;
                }
                m[(r, c)] = self[(i, j)].clone();
                c += 1;
            }
            r += 1;
        }
        m
    }

    /// Exact integer inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let d = self.det()?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d));
        }
        let adj = self.adjugate()?;
        Ok(if d.is_one() { adj } else { adj.neg() })
    }

    pub fn neg(&self) -> IntMatrix {
        let mut m = self.clone();
        for v in &mut m.data {
            *v = -std::mem::take(v);
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form S = U * A * V with unimodular transforms U, V and
/// diagonal S whose entries form a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let rows = a.rows();
    let cols = a.cols();
    let mut w = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let swap_rows = |w: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize| {
        for c in 0..w.cols() {
            let tmp = w[(i, c)].clone();
            w[(i, c)] = w[(j, c)].clone();
            w[(j, c)] = tmp;
        }
        for c in 0..u.cols() {
            let tmp = u[(i, c)].clone();
            u[(i, c)] = u[(j, c)].clone();
            u[(j, c)] = tmp;
        }
    };
    let swap_cols = |w: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize| {
        for r in 0..w.rows() {
            let tmp = w[(r, i)].clone();
            w[(r, i)] = w[(r, j)].clone();
            w[(r, j)] = tmp;
        }
        for r in 0..v.rows() {
            let tmp = v[(r, i)].clone();
            v[(r, i)] = v[(r, j)].clone();
            v[(r, j)] = tmp;
        }
    };
    // row_i -= q * row_j
    let add_row = |w: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize, q: &Int| {
        for c in 0..w.cols() {
            let t = &w[(j, c)] * q;
            w[(i, c)] -= t;
        }
        for c in 0..u.cols() {
            let t = &u[(j, c)] * q;
            u[(i, c)] -= t;
        }
    };
    // col_i -= q * col_j
    let add_col = |w: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize, q: &Int| {
        for r in 0..w.rows() {
            let t = &w[(r, j)] * q;
            w[(r, i)] -= t;
        }
        for r in 0..v.rows() {
            let t = &v[(r, j)] * q;
            v[(r, i)] -= t;
        }
    };
    let negate_row = |w: &mut IntMatrix, u: &mut IntMatrix, i: usize| {
        for c in 0..w.cols() {
            w[(i, c)] = -std::mem::take(&mut w[(i, c)]);
        }
        for c in 0..u.cols() {
            u[(i, c)] = -std::mem::take(&mut u[(i, c)]);
        }
    };

    let dim = rows.min(cols);
    for d in 0..dim {
        'pivot: loop {
            // Smallest-magnitude nonzero entry in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in d..rows {
                for j in d..cols {
                    if !w[(i, j)].is_zero()
                        && pivot
                            .map(|(pi, pj)| w[(i, j)].abs() < w[(pi, pj)].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'pivot; // trailing block is zero
            };
            if pi != d {
                swap_rows(&mut w, &mut u, d, pi);
            }
            if pj != d {
                swap_cols(&mut w, &mut v, d, pj);
            }
            // Reduce the pivot column.
            let mut dirty = false;
            for i in d + 1..rows {
                if !w[(i, d)].is_zero() {
                    let q = div_round(&w[(i, d)], &w[(d, d)]);
                    add_row(&mut w, &mut u, i, d, &q);
                    if !w[(i, d)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Reduce the pivot row.
            for j in d + 1..cols {
                if !w[(d, j)].is_zero() {
                    let q = div_round(&w[(d, j)], &w[(d, d)]);
                    add_col(&mut w, &mut v, j, d, &q);
                    if !w[(d, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Enforce the divisibility chain: pivot must divide everything below-right.
            for i in d + 1..rows {
                for j in d + 1..cols {
                    if !(&w[(i, j)] % &w[(d, d)]).is_zero() {
                        let one = Int::one();
                        add_row(&mut w, &mut u, d, i, &-one);
                        continue 'pivot;
                    }
                }
            }
            if w[(d, d)].is_negative() {
                negate_row(&mut w, &mut u, d);
            }
            break 'pivot;
        }
    }
    SmithNormalForm { s: w, u, v }
}

/// Quotient rounding to nearest, which keeps remainders at most |b|/2.
fn div_round(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    let doubled = (&r * 2i32).abs();
    if doubled > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank of a rational matrix by exact Gaussian elimination.
pub fn rational_rank(m: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        match (rank..rows).find(|&i| !a[i][col].is_zero()) {
            None => {
                col += 1;
            }
            Some(p) => {
                a.swap(rank, p);
                let pivot = a[rank][col].clone();
                for i in rank + 1..rows {
                    if a[i][col].is_zero() {
                        continue;
                    }
                    let f = &a[i][col] / &pivot;
                    for j in col..cols {
                        let t = &a[rank][j] * &f;
                        a[i][j] -= t;
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Solves a square rational linear system A x = b exactly.
/// Returns None when the system is singular.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pivot = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &pivot;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let t = &m[col][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn determinants() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), int(1));
        assert_eq!(
            IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]).det().unwrap(),
            int(1)
        );
        assert_eq!(
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]).det().unwrap(),
            int(2)
        );
        assert_eq!(
            IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).det().unwrap(),
            int(-2)
        );
        assert_eq!(
            IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]])
                .det()
                .unwrap(),
            int(-2)
        );
        assert!(IntMatrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn unimodularity() {
        assert!(IntMatrix::identity(3).is_unimodular().unwrap());
        assert!(IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]])
            .is_unimodular()
            .unwrap());
        assert!(!IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]])
            .is_unimodular()
            .unwrap());
    }

    #[test]
    fn inverse_of_unimodular() {
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), IntMatrix::identity(2));
        let b = IntMatrix::from_rows(&[vec![2, 3, 1], vec![1, 2, 1], vec![1, 1, 1]]);
        assert_eq!(b.det().unwrap(), int(1));
        assert_eq!(b.mul(&b.inverse_unimodular().unwrap()), IntMatrix::identity(3));
    }

    fn check_snf(a: IntMatrix, expect_diag: &[i64]) {
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s, "U*A*V must equal S");
        assert!(snf.u.is_unimodular().unwrap());
        assert!(snf.v.is_unimodular().unwrap());
        let dim = a.rows().min(a.cols());
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "off-diagonal entry at {i},{j}");
                }
            }
        }
        for (i, want) in expect_diag.iter().enumerate() {
            assert_eq!(snf.s[(i, i)], int(*want), "diagonal entry {i}");
        }
        for i in 0..dim.saturating_sub(1) {
            if !snf.s[(i + 1, i + 1)].is_zero() {
                assert!(
                    (&snf.s[(i + 1, i + 1)] % &snf.s[(i, i)]).is_zero(),
                    "divisibility chain broken at {i}"
                );
            }
        }
    }

    #[test]
    fn smith_normal_forms() {
        check_snf(IntMatrix::from_rows(&[vec![1, 0], vec![0, 5]]), &[1, 5]);
        check_snf(IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]), &[2, 2]);
        check_snf(IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]), &[1, 2]);
        check_snf(
            IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]),
            &[2, 2, 156],
        );
        check_snf(IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]), &[0, 0]);
        check_snf(IntMatrix::from_rows(&[vec![6, 10], vec![15, 4]]), &[1, 126]);
    }

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::identity(4).rank(), 4);
        assert_eq!(IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(IntMatrix::zero(3, 3).rank(), 0);
    }
}
