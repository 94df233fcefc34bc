use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exact determinant of a square matrix given as rows.
///
/// Orders up to 3 use the closed cofactor formulas; larger matrices are
/// scaled row-wise to integers and reduced with Bareiss' fraction-free
/// elimination.
pub fn det(matrix: &[Vec<Rational>]) -> Result<Rational> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Empty("determinant of a 0x0 matrix"));
    }
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() });
    }
    Ok(match n {
        1 => matrix[0][0].clone(),
        2 => det2(&matrix[0][0], &matrix[0][1], &matrix[1][0], &matrix[1][1]),
        3 => {
            let m = matrix;
            &m[0][0] * det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2])
                - &m[0][1] * det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2])
                + &m[0][2] * det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1])
        }
        _ => bareiss(matrix),
    })
}

fn det2(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Rational {
    a * d - b * c
}

fn bareiss(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    // Clear denominators row by row; det(M) = det(scaled) / prod(scales).
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
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
    let mut d = a[n - 1][n - 1].clone();
    if negate {
        d = -d;
    }
    Rational::from_bigints(d, scale).expect("row scales are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect()
    }

    /// Leibniz expansion over all permutations; independent of both code paths.
    fn leibniz(a: &[Vec<Rational>]) -> Rational {
        fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
            if n == 0 {
                return vec![(vec![], false)];
            }
            let mut out = Vec::new();
            for (p, odd) in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    // inserting at `pos` creates (len - pos) inversions
                    let flips = (p.len() - pos) % 2 == 1;
                    out.push((q, odd ^ flips));
                }
            }
            out
        }
        perms(a.len())
            .into_iter()
            .map(|(p, odd)| {
                let t: Rational = p.iter().enumerate().map(|(i, &j)| a[i][j].clone()).product();
                if odd {
                    -t
                } else {
                    t
                }
            })
            .sum()
    }

    #[test]
    fn small_examples() {
        assert_eq!(det(&m(&[&[1, 0], &[0, 1]])).unwrap(), r(1));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), r(-1));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])).unwrap(), r(-2));
        assert_eq!(det(&m(&[&[5]])).unwrap(), r(5));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(det(&[]), Err(Error::Empty(_))));
        assert!(matches!(
            det(&m(&[&[1, 2], &[3]])),
            Err(Error::NotSquare { rows: 2, cols: 1 })
        ));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let a = m(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(det(&a).unwrap(), r(1));
        let singular = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[1, 0, 1, 0]]);
        assert_eq!(det(&singular).unwrap(), r(0));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn square(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        proptest::collection::vec(proptest::collection::vec(rational(), n), n)
    }

    proptest! {
        #[test]
        fn matches_leibniz(a in (1usize..=5).prop_flat_map(square)) {
            prop_assert_eq!(det(&a).unwrap(), leibniz(&a));
        }

        #[test]
        fn row_swap_negates(a in square(3), i in 0usize..3, j in 0usize..3) {
            prop_assume!(i != j);
            let mut b = a.clone();
            b.swap(i, j);
            prop_assert_eq!(det(&b).unwrap(), -det(&a).unwrap());
        }

        #[test]
        fn linear_in_first_row(a in square(3), b in proptest::collection::vec(rational(), 3), c in rational()) {
            let mut sum = a.clone();
            let mut other = a.clone();
            other[0] = b.clone();
            for k in 0..3 {
                sum[0][k] = &a[0][k] + &(&c * &b[k]);
            }
            prop_assert_eq!(det(&sum).unwrap(), det(&a).unwrap() + c * det(&other).unwrap());
        }
    }
}
