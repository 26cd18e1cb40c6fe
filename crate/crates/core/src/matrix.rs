use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m[(p, i)] = 1;
        }
        m
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

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Multiplicative order, if it is at most `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<i64> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k * n + k] == 0 {
                match (k + 1..n).find(|&i| a[i * n + k] != 0) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i * n + j]
                        .checked_mul(a[k * n + k])
                        .and_then(|x| x.checked_sub(a[i * n + k].checked_mul(a[k * n + j])?))
                        .ok_or(Error::Overflow("determinant"))?;
                    a[i * n + j] = v / prev;
                }
            }
            prev = a[k * n + k];
        }
        i64::try_from(sign * a[n * n - 1]).map_err(|_| Error::Overflow("determinant"))
    }

    /// Exact inverse over the rationals.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<Ratio<i128>>>> {
        assert!(self.is_square());
        let n = self.rows;
        let zero = Ratio::from_integer(0i128);
        let one = Ratio::from_integer(1i128);
        let mut a: Vec<Vec<Ratio<i128>>> = (0..n)
            .map(|i| {
                let mut r: Vec<_> = self.row(i).iter().map(|&x| Ratio::from_integer(x as i128)).collect();
                r.extend((0..n).map(|j| if i == j { one } else { zero }));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&i| a[i][col] != zero)?;
            a.swap(col, piv);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for i in 0..n {
                if i != col && a[i][col] != zero {
                    let f = a[i][col];
                    for j in 0..2 * n {
                        let t = a[col][j] * f;
                        a[i][j] -= t;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        let inv = self.rational_inverse()?;
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, r) in inv.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if !x.is_integer() {
                    return None;
                }
                out[(i, j)] = i64::try_from(x.to_integer()).ok()?;
            }
        }
        Some(out)
    }

    /// Inverse transpose of a unimodular matrix.
    pub fn contragredient(&self) -> Option<Matrix> {
        self.inverse().map(|m| m.transpose())
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(a: &[i64], c: i64) -> Vec<i64> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// Express `target` as a rational combination of `basis` (linearly independent columns).
pub fn solve_in_span(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<Ratio<i128>>> {
    let k = basis.len();
    let n = target.len();
    let zero = Ratio::from_integer(0i128);
    let mut a: Vec<Vec<Ratio<i128>>> = (0..n)
        .map(|i| {
            let mut r: Vec<_> = basis.iter().map(|b| Ratio::from_integer(b[i] as i128)).collect();
            r.push(Ratio::from_integer(target[i] as i128));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| a[i][col] != zero) else { return None };
        a.swap(row, p);
        let pv = a[row][col];
        for x in a[row].iter_mut() {
            *x /= pv;
        }
        for i in 0..n {
            if i != row && a[i][col] != zero {
                let f = a[i][col];
                for j in 0..=k {
                    let t = a[row][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| r[k] != zero) {
        return None;
    }
    Some((0..k).map(|c| a[c][k]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_rows(&[vec![0, 1], vec![-1, -1]]);
        assert_eq!(m.det().unwrap(), 1);
        assert_eq!(m.order(12), Some(3));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let a = Matrix::from_rows(&[vec![3, -1], vec![-1, 3]]);
        assert_eq!(a.det().unwrap(), 8);
        assert!(a.inverse().is_none());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = Matrix::from_rows(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(m.det().unwrap(), -1);
    }

    #[test]
    fn span_solve() {
        let basis = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let c = solve_in_span(&basis, &[1, 0, -1]).unwrap();
        assert_eq!(c, vec![Ratio::from_integer(1), Ratio::from_integer(1)]);
        assert!(solve_in_span(&basis, &[1, 0, 0]).is_none());
    }
}
