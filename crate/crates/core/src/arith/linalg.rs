//! Dense exact linear algebra over `Scalar`, sized for root data and pairing matrices.

use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    let mut out = vec![vec![Scalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// `x^T B y`.
pub fn bilinear(b: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    dot(x, &mat_vec(b, y))
}

/// Row-reduces in place and returns the pivot columns.
pub fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let piv = row_reduce(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coefficients `c` with `Σ c_j cols[j] = target`, if `target` lies in the span.
/// The columns must be linearly independent.
pub fn solve_in_span(cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = cols.len();
    let n = target.len();
    let mut aug: Matrix = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).chain([target[i].clone()]).collect())
        .collect();
    let piv = row_reduce(&mut aug);
    if piv.contains(&k) {
        return None;
    }
    let mut sol = vec![Scalar::zero(); k];
    for (r, &c) in piv.iter().enumerate() {
        sol[c] = aug[r][k].clone();
    }
    Some(sol)
}

/// If `a` is a permutation matrix, the map `π` with `a e_i = e_{π(i)}`.
pub fn as_permutation(a: &Matrix) -> Option<Vec<usize>> {
    let n = a.len();
    let mut perm = vec![usize::MAX; n];
    for j in 0..n {
        let mut hit = None;
        for i in 0..n {
            let x = &a[i][j];
            if x.is_zero() {
                continue;
            }
            if !x.is_one() || hit.is_some() {
                return None;
            }
            hit = Some(i);
        }
        perm[j] = hit?;
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::{frac, int, ints};

    #[test]
    fn inverse_of_rotation_like() {
        let a = vec![ints(&[2, 1]), ints(&[1, 1])];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert!(inverse(&vec![ints(&[1, 2]), ints(&[2, 4])]).is_none());
    }

    #[test]
    fn span_solve() {
        let cols = vec![ints(&[1, -1, 0]), ints(&[0, 1, -1])];
        assert_eq!(solve_in_span(&cols, &ints(&[1, 0, -1])), Some(ints(&[1, 1])));
        assert_eq!(solve_in_span(&cols, &ints(&[1, 1, 1])), None);
        let half = solve_in_span(&[ints(&[2, 0])], &ints(&[1, 0])).unwrap();
        assert_eq!(half, vec![frac(1, 2)]);
    }

    #[test]
    fn permutation_detection() {
        let a = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(as_permutation(&a), Some(vec![1, 0]));
        assert_eq!(as_permutation(&vec![ints(&[0, 1]), ints(&[-1, 0])]), None);
        assert_eq!(rank(&[ints(&[1, 2]), ints(&[2, 4]), ints(&[0, 1])]), 2);
        assert_eq!(int(0), Scalar::zero());
    }
}
