//! Dense matrices over `Q(q)`.

use std::fmt;

use crate::ring::RatFunc;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Gauss-Jordan inverse of a square matrix.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let piv = a.get(c, c).inv()?;
            a.scale_row(c, &piv);
            inv.scale_row(c, &piv);
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                a.axpy_row(r, c, &f);
                inv.axpy_row(r, c, &f);
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> RatFunc {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = RatFunc::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return RatFunc::zero();
            };
            if p != c {
                a.swap_rows(c, p);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det = &det * &piv;
            let pinv = piv.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c) * &pinv;
                a.axpy_row(r, c, &f);
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row(&mut self, i: usize, k: &RatFunc) {
        for c in 0..self.cols {
            let v = self.get(i, c) * k;
            self.set(i, c, v);
        }
    }

    /// `row_r -= f * row_c`
    fn axpy_row(&mut self, r: usize, c: usize, f: &RatFunc) {
        for k in 0..self.cols {
            let b = self.get(c, k);
            if b.is_zero() {
                continue;
            }
            let v = self.get(r, k) - &(f * b);
            self.set(r, k, v);
        }
    }
}

/// Greedy selection of linearly independent rows, scanning top to bottom.
pub fn independent_rows(m: &Mat) -> Vec<usize> {
    let mut reduced: Vec<(usize, Vec<RatFunc>)> = Vec::new();
    let mut chosen = Vec::new();
    for r in 0..m.rows() {
        let mut v = m.row(r).to_vec();
        for (pc, pr) in &reduced {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(pr) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pc].inv().expect("nonzero");
            let v: Vec<RatFunc> = v.iter().map(|x| x * &inv).collect();
            reduced.push((pc, v));
            chosen.push(r);
        }
    }
    chosen
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: i64) -> RatFunc {
        RatFunc::from_int(k)
    }

    #[test]
    fn inverse_and_det() {
        let q = RatFunc::q_pow(1);
        let m = Mat::from_rows(vec![vec![q.clone(), r(1)], vec![r(1), q.clone()]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(m.det(), &(&q * &q) - &r(1));
        let sing = Mat::from_rows(vec![vec![q.clone(), r(1)], vec![&q * &q, q.clone()]]);
        assert!(sing.inverse().is_none());
        assert!(sing.det().is_zero());
    }

    #[test]
    fn greedy_rows() {
        let q = RatFunc::q_pow(1);
        let m = Mat::from_rows(vec![
            vec![r(0), r(0)],
            vec![q.clone(), r(1)],
            vec![&q * &r(2), r(2)],
            vec![r(0), r(3)],
        ]);
        assert_eq!(independent_rows(&m), vec![1, 3]);
    }
}
