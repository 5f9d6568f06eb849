//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rational::Rational;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Rational>>) -> usize {
    rref(rows).1.len()
}

pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for j in c..n {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    det
}

/// Unique solution of the square system `a x = b`, if `a` is nonsingular.
pub fn solve(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    let (rows, pivots) = rref(aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of `{x : rows x = 0}`.
pub fn null_space(rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(m(&[&[1, 2], &[3, 4]])), int(-2));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(determinant(m(&[&[2, 0, 0], &[0, 3, 0], &[1, 1, 1]])), int(6));
    }

    #[test]
    fn solve_and_null_space() {
        let x = solve(m(&[&[2, 1], &[1, 3]]), vec![int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        assert!(solve(m(&[&[1, 1], &[2, 2]]), vec![int(1), int(2)]).is_none());
        let ns = null_space(m(&[&[1, -1, 0]]), 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&[int(1), int(-1), int(0)], v).is_zero());
        }
        assert_eq!(rank(m(&[&[1, 2], &[2, 4], &[0, 0]])), 1);
    }
}
