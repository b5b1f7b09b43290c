//! Fraction-free exact linear algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<Rational>>;

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "Bareiss division must be exact");
    q
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = to_big(m);
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(&v, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}

/// Determinants of the leading `k x k` blocks, `k = 1..=n`.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let block: IntMatrix = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&block)
        })
        .collect()
}

/// True iff the symmetric matrix is negative definite (Sylvester: the
/// leading minors alternate in sign starting negative).
pub fn is_negative_definite(m: &[Vec<i64>]) -> bool {
    leading_principal_minors(m).iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d < &BigInt::zero()
        } else {
            d > &BigInt::zero()
        }
    })
}

/// Exact inverse by fraction-free Gauss-Jordan elimination on `[M | I]`.
pub fn inverse(m: &[Vec<i64>]) -> Result<RatMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = to_big(m)
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(&v, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::new(a[i][n + j].clone(), a[i][i].clone()))
                .collect()
        })
        .collect())
}

pub fn mul_int_rat(a: &[Vec<i64>], b: &[Vec<Rational>]) -> RatMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (&x, brow)| acc + &brow[j] * BigInt::from(x))
                })
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &[Vec<Rational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

/// Converts a rational matrix to integers, failing on the first
/// non-integral entry.
pub fn to_integer_matrix(m: &[Vec<Rational>], what: &'static str) -> Result<IntMatrix> {
    use num_traits::ToPrimitive;
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    x.is_integer()
                        .then(|| x.to_integer().to_i64())
                        .flatten()
                        .ok_or_else(|| Error::NonInteger {
                            what,
                            row: i,
                            col: j,
                            value: x.to_string(),
                        })
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}
