use num_traits::{One, Zero};

use super::gaussian::GaussianRational;

/// Inverse of a square matrix by Gauss–Jordan elimination, or `None` if it is
/// singular.
pub fn invert_matrix(m: &[Vec<GaussianRational>]) -> Option<Vec<Vec<GaussianRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<GaussianRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix expected");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { GaussianRational::one() } else { GaussianRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let d = &f * &a[col][j];
                    a[r][j] -= &d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn antidiagonal_and_singular() {
        let m = vec![vec![q(0, 1), q(2, 1)], vec![q(1, 1), q(0, 1)]];
        let inv = invert_matrix(&m).unwrap();
        assert_eq!(inv, vec![vec![q(0, 1), q(1, 1)], vec![q(1, 2), q(0, 1)]]);
        assert!(invert_matrix(&[vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).is_none());
    }
}
