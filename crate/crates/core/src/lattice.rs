//! Small exact linear algebra over `Z` and `Q` for root-system bookkeeping.

use num_rational::Ratio;

pub type Q64 = Ratio<i64>;

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries
/// only, each dividing the next).
pub fn elementary_divisors(mat: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = false;
        while !done {
            done = true;
            for i in t + 1..rows {
                let f = a[i][t] / a[t][t];
                if f != 0 {
                    for j in t..cols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    a.swap(t, i);
                    done = false;
                }
            }
            for j in t + 1..cols {
                let f = a[t][j] / a[t][t];
                if f != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= f * row[t];
                    }
                }
                if a[t][j] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    done = false;
                }
            }
            if done {
                // enforce divisibility into the rest of the block
                'outer: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if a[i][j] % a[t][t] != 0 {
                            for k in t..cols {
                                let v = a[i][k];
                                a[t][k] += v;
                            }
                            done = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        divisors.push(a[t][t].abs() as i64);
        t += 1;
    }
    divisors
}

/// Rank over `Q`.
pub fn rank(mat: &[Vec<i64>]) -> usize {
    elementary_divisors(mat).len()
}

/// Inverse of a square integer matrix over `Q`; `None` if singular.
pub fn inverse(mat: &[Vec<i64>]) -> Option<Vec<Vec<Q64>>> {
    let n = mat.len();
    let mut a: Vec<Vec<Q64>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| Q64::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Q64>> = (0..n)
        .map(|i| (0..n).map(|j| Q64::from_integer((i == j) as i64)).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != Q64::from_integer(0))?;
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c];
        for j in 0..n {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for r in 0..n {
            if r != c && a[r][c] != Q64::from_integer(0) {
                let f = a[r][c];
                for j in 0..n {
                    let (x, y) = (a[c][j], inv[c][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Solves `mat * x = b` over `Q` for square invertible `mat`.
pub fn solve(inv: &[Vec<Q64>], b: &[i64]) -> Vec<Q64> {
    inv.iter()
        .map(|row| {
            row.iter()
                .zip(b)
                .fold(Q64::from_integer(0), |acc, (m, &v)| acc + *m * v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_form_of_cartan_matrices() {
        assert_eq!(elementary_divisors(&[vec![2]]), vec![2]);
        let a2 = vec![vec![2, -1], vec![-1, 2]];
        assert_eq!(elementary_divisors(&a2), vec![1, 3]);
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(elementary_divisors(&d4), vec![1, 1, 2, 2]);
    }

    #[test]
    fn rank_of_degenerate() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![2, 0], vec![0, 2], vec![2, 2]]), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![2, -1], vec![-3, 2]];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0][0], Q64::from_integer(2));
        assert_eq!(inv[1][0], Q64::from_integer(3));
        assert!(inverse(&[vec![1, 2], vec![2, 4]]).is_none());
    }
}
