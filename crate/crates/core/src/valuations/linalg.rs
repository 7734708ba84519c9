//! Exact rational linear algebra: determinants by fraction-free elimination
//! and solving (possibly overdetermined) systems by row reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A rational matrix together with a right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Result<Self> {
        if matrix.len() != rhs.len() {
            return Err(Error::SizeMismatch { expected: matrix.len(), actual: rhs.len() });
        }
        if let Some(cols) = matrix.first().map(Vec::len) {
            if let Some(bad) = matrix.iter().find(|row| row.len() != cols) {
                return Err(Error::SizeMismatch { expected: cols, actual: bad.len() });
            }
        }
        Ok(LinearSystem { matrix, rhs })
    }

    /// Homogeneous system with the given coefficients.
    pub fn homogeneous(matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        let rhs = vec![BigRational::zero(); matrix.len()];
        LinearSystem::new(matrix, rhs)
    }

    /// Integer matrix, homogeneous right-hand side.
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        let matrix = rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        LinearSystem::homogeneous(matrix)
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[BigRational] {
        &self.rhs
    }
}

/// Determinant of the coefficient matrix.
///
/// Rows are scaled to integers, the integer determinant is computed with
/// Bareiss' fraction-free elimination (every division is exact), and the
/// scaling is undone at the end.
pub fn determinant(sys: &LinearSystem) -> Result<BigRational> {
    let n = sys.rows();
    if n != sys.cols() && n != 0 {
        return Err(Error::NonSquare { rows: n, cols: sys.cols() });
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = sys
        .matrix
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    Ok(BigRational::new(bareiss(&mut a), scale))
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// A solution of the system, or `None` if it is inconsistent. Free
/// variables are set to zero.
pub fn solve(sys: &LinearSystem) -> Option<Vec<BigRational>> {
    let cols = sys.cols();
    let mut rows: Vec<Vec<BigRational>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        q(n, 1)
    }

    /// Leibniz expansion, independent of elimination.
    fn leibniz(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        crate::patterns::Permutation::all(n)
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p.image()[i] > p.image()[j])
                    .count();
                let prod = (0..n).fold(BigRational::one(), |acc, i| acc * &m[i][p.image()[i] - 1]);
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    #[test]
    fn small_determinants() {
        let id = LinearSystem::from_integers(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(determinant(&id).unwrap(), int(1));
        let diag = LinearSystem::from_integers(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(determinant(&diag).unwrap(), int(6));
        let swap = LinearSystem::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&swap).unwrap(), int(-1));
        let singular = LinearSystem::from_integers(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(determinant(&singular).unwrap(), int(0));
        let empty = LinearSystem::from_integers(&[]).unwrap();
        assert_eq!(determinant(&empty).unwrap(), int(1));
    }

    #[test]
    fn rational_determinant() {
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(1, 4), q(1, 5)]];
        let sys = LinearSystem::homogeneous(m.clone()).unwrap();
        assert_eq!(determinant(&sys).unwrap(), leibniz(&m));
        assert_eq!(determinant(&sys).unwrap(), q(1, 10) - q(1, 12));
    }

    #[test]
    fn bareiss_matches_leibniz_on_pseudo_random_matrices() {
        let mut seed: i64 = 12345;
        let mut next = || {
            seed = (seed * 1103515245 + 12345) % 2147483648;
            (seed % 11) - 5
        };
        for n in 1..=6 {
            for _ in 0..20 {
                let m: Vec<Vec<BigRational>> =
                    (0..n).map(|_| (0..n).map(|_| q(next(), next().abs() + 1)).collect()).collect();
                let sys = LinearSystem::homogeneous(m.clone()).unwrap();
                assert_eq!(determinant(&sys).unwrap(), leibniz(&m));
            }
        }
    }

    #[test]
    fn non_square_is_rejected() {
        let sys = LinearSystem::from_integers(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(determinant(&sys), Err(Error::NonSquare { rows: 2, cols: 3 }));
        assert!(LinearSystem::from_integers(&[vec![1, 2], vec![3]]).is_err());
        assert!(LinearSystem::new(vec![vec![int(1)]], vec![]).is_err());
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // x + y = 3, x - y = 1, 2x = 4
        let sys = LinearSystem::new(
            vec![vec![int(1), int(1)], vec![int(1), int(-1)], vec![int(2), int(0)]],
            vec![int(3), int(1), int(4)],
        )
        .unwrap();
        assert_eq!(solve(&sys), Some(vec![int(2), int(1)]));
    }

    #[test]
    fn detects_inconsistency() {
        let sys = LinearSystem::new(vec![vec![int(1)], vec![int(1)]], vec![int(1), int(2)]).unwrap();
        assert_eq!(solve(&sys), None);
    }

    #[test]
    fn free_variables_are_zero() {
        let sys = LinearSystem::new(vec![vec![int(1), int(1)]], vec![q(1, 2)]).unwrap();
        assert_eq!(solve(&sys), Some(vec![q(1, 2), int(0)]));
    }
}
