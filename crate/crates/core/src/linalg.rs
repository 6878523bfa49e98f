//! Small exact rational linear algebra over `Ratio<i64>`.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Gram matrix of integer vectors under the standard dot product.
pub fn gram(vectors: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    vectors
        .iter()
        .map(|u| {
            vectors
                .iter()
                .map(|v| rat(u.iter().zip(v).map(|(a, b)| a * b).sum()))
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` if singular.
pub fn invert(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Coefficients of `x` in the (linearly independent) `basis`, or `None` when
/// `x` is outside its real span.
pub fn expand(basis: &[Vec<i64>], gram_inv: &[Vec<Rational>], x: &[i64]) -> Option<Vec<Rational>> {
    let rhs: Vec<Rational> = basis
        .iter()
        .map(|b| rat(b.iter().zip(x).map(|(p, q)| p * q).sum()))
        .collect();
    let coeffs: Vec<Rational> = gram_inv
        .iter()
        .map(|row| row.iter().zip(&rhs).map(|(g, r)| g * r).sum())
        .collect();
    let back = (0..x.len()).all(|k| {
        let s: Rational = basis.iter().zip(&coeffs).map(|(b, c)| c * rat(b[k])).sum();
        s == rat(x[k])
    });
    back.then_some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_cartan_like_matrix() {
        let g = gram(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let inv = invert(&g).unwrap();
        // [[2,-1],[-1,2]]^{-1} = 1/3 [[2,1],[1,2]]
        assert_eq!(inv[0][0], Rational::new(2, 3));
        assert_eq!(inv[0][1], Rational::new(1, 3));
    }

    #[test]
    fn expansion_outside_span() {
        let basis = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let inv = invert(&gram(&basis)).unwrap();
        assert!(expand(&basis, &inv, &[1, 0, 0]).is_none());
        assert_eq!(
            expand(&basis, &inv, &[1, 0, -1]).unwrap(),
            vec![rat(1), rat(1)]
        );
    }

    #[test]
    fn singular_matrix() {
        let g = gram(&[vec![1, 1], vec![2, 2]]);
        assert!(invert(&g).is_none());
    }
}
