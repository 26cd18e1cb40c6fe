//! Smith normal form over the integers with unimodular transforms.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct Smith {
    /// Left transform, `left * a * right = diag`.
    pub left: Matrix,
    pub right: Matrix,
    /// Diagonal entries, nonnegative and successively dividing.
    pub diagonal: Vec<i64>,
}

struct Work {
    a: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
    v: Vec<Vec<i128>>,
}

fn ck(x: Option<i128>) -> Result<i128> {
    x.filter(|v| v.abs() < (1i128 << 62)).ok_or(Error::Overflow("smith normal form"))
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        for r in self.v.iter_mut() {
            r.swap(i, j);
        }
    }

    /// row_i -= f * row_j
    fn row_op(&mut self, i: usize, j: usize, f: i128) -> Result<()> {
        for c in 0..self.a[0].len() {
            self.a[i][c] = ck(self.a[i][c].checked_sub(ck(f.checked_mul(self.a[j][c]))?))?;
        }
        for c in 0..self.u[0].len() {
            self.u[i][c] = ck(self.u[i][c].checked_sub(ck(f.checked_mul(self.u[j][c]))?))?;
        }
        Ok(())
    }

    /// col_i -= f * col_j
    fn col_op(&mut self, i: usize, j: usize, f: i128) -> Result<()> {
        for r in 0..self.a.len() {
            self.a[r][i] = ck(self.a[r][i].checked_sub(ck(f.checked_mul(self.a[r][j]))?))?;
        }
        for r in 0..self.v.len() {
            self.v[r][i] = ck(self.v[r][i].checked_sub(ck(f.checked_mul(self.v[r][j]))?))?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -*x;
        }
    }
}

fn to_matrix(rows: &[Vec<i128>]) -> Result<Matrix> {
    let data = rows
        .iter()
        .flatten()
        .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("smith normal form")))
        .collect::<Result<Vec<_>>>()?;
    let r = rows.len();
    let c = rows.first().map_or(0, |x| x.len());
    Ok(Matrix::from_flat(r, c, data))
}

pub fn smith(a: &Matrix) -> Result<Smith> {
    let (m, n) = (a.rows(), a.cols());
    let id = |k: usize| -> Vec<Vec<i128>> {
        (0..k).map(|i| (0..k).map(|j| (i == j) as i128).collect()).collect()
    };
    let mut w = Work {
        a: (0..m).map(|i| a.row(i).iter().map(|&x| x as i128).collect()).collect(),
        u: id(m),
        v: id(n),
    };
    let k = m.min(n);
    for t in 0..k {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best = None;
        for i in t..m {
            for j in t..n {
                let x = w.a[i][j].abs();
                if x != 0 && best.map_or(true, |(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if w.a[i][t] != 0 {
                    let f = w.a[i][t].div_euclid(w.a[t][t]);
                    w.row_op(i, t, f)?;
                    if w.a[i][t] != 0 {
                        w.swap_rows(t, i);
                        changed = true;
                    }
                }
            }
            for j in t + 1..n {
                if w.a[t][j] != 0 {
                    let f = w.a[t][j].div_euclid(w.a[t][t]);
                    w.col_op(j, t, f)?;
                    if w.a[t][j] != 0 {
                        w.swap_cols(t, j);
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // divisibility of the remaining block
            let p = w.a[t][t];
            let bad = (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| w.a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    w.row_op(t, i, -1)?;
                }
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_row(t);
        }
    }
    let diagonal = (0..k)
        .map(|i| i64::try_from(w.a[i][i]).map_err(|_| Error::Overflow("smith normal form")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Smith { left: to_matrix(&w.u)?, right: to_matrix(&w.v)?, diagonal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &Matrix) -> Smith {
        let s = smith(a).unwrap();
        let d = s.left.mul(a).mul(&s.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(d[(i, j)], want, "{a}");
            }
        }
        for w in s.diagonal.windows(2) {
            assert!(w[0] == 0 && w[1] == 0 || w[0] != 0 && w[1] % w[0] == 0);
        }
        assert_eq!(s.left.det().unwrap().abs(), 1);
        assert_eq!(s.right.det().unwrap().abs(), 1);
        s
    }

    #[test]
    fn coxeter_gl2() {
        let s = check(&Matrix::from_rows(&[vec![3, -1], vec![-1, 3]]));
        assert_eq!(s.diagonal, vec![1, 8]);
    }

    #[test]
    fn needs_divisibility_fix() {
        let s = check(&Matrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal, vec![1, 6]);
        let s = check(&Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.diagonal, vec![2, 6, 12]);
    }

    #[test]
    fn rectangular() {
        let s = check(&Matrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1]]));
        assert_eq!(s.diagonal, vec![1, 1]);
        let s = check(&Matrix::from_rows(&[vec![2], vec![0]]));
        assert_eq!(s.diagonal, vec![2]);
    }
}
