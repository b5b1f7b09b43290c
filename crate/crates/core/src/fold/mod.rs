//! Folding the exceptional lattice of `C^2/H` along the action of `G/H`,
//! and the checks relating the result to the decomposition matrix of the
//! induced characters.

mod lattice;
mod verify;

pub use lattice::{lattice_from_characters, IntersectionLattice};
pub use verify::{verify_pair, Convention, FoldResult, Verdicts};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_arith::linalg::{IntMatrix, RatMatrix};
use crate::exact_arith::Rational;
use crate::{Error, Result};

/// Sum of the translates `sum_g sigma_g(e_i)` as an integer vector.
fn orbit_sum(lat: &IntersectionLattice, i: usize) -> Vec<i64> {
    let mut v = vec![0; lat.len()];
    for sigma in lat.action() {
        v[sigma[i]] += 1;
    }
    v
}

fn bilinear(b: &IntMatrix, u: &[i64], v: &[i64]) -> i64 {
    u.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| x * b[i].iter().zip(v).map(|(y, z)| y * z).sum::<i64>())
        .sum()
}

/// `(1/n) (sum_g sigma_g e_i)^T B (sum_g sigma_g e_j)` for basis positions
/// `i`, `j`.
pub fn pushforward_entry(lat: &IntersectionLattice, i: usize, j: usize) -> Rational {
    let n = lat.quotient_order() as i64;
    let value = bilinear(lat.pairing(), &orbit_sum(lat, i), &orbit_sum(lat, j));
    Rational::new(BigInt::from(value), BigInt::from(n))
}

/// `P` over orbits, using the given representative of each orbit.
pub fn pushforward_pairing_with(lat: &IntersectionLattice, reps: &[usize]) -> RatMatrix {
    reps.iter()
        .map(|&i| reps.iter().map(|&j| pushforward_entry(lat, i, j)).collect())
        .collect()
}

/// `P` over orbits with smallest representatives; every entry must be an
/// integer.
pub fn pushforward_pairing(lat: &IntersectionLattice) -> Result<IntMatrix> {
    let reps: Vec<usize> = lat.orbits().iter().map(|o| o[0]).collect();
    let p = pushforward_pairing_with(lat, &reps);
    crate::exact_arith::linalg::to_integer_matrix(&p, "pushforward pairing")
}

/// `f(O) = n / |O|`.
pub fn weights(lat: &IntersectionLattice) -> Result<Vec<u64>> {
    let n = lat.quotient_order();
    lat.orbits()
        .iter()
        .enumerate()
        .map(|(orbit, o)| {
            if !n.is_multiple_of(o.len()) {
                return Err(Error::OrbitSize {
                    orbit,
                    size: o.len(),
                    n,
                });
            }
            Ok((n / o.len()) as u64)
        })
        .collect()
}

/// The two weightings of the pushed-forward pairing `P[i][j] / (f_i f_j)`:
/// `row` multiplies by `f_i`, giving `P[i][j] / f_j`, and `column`
/// multiplies by `f_j`.
pub fn weighted_d(p: &RatMatrix, f: &[u64]) -> (RatMatrix, RatMatrix) {
    let by = |k: usize| Rational::from_integer(BigInt::from(f[k]));
    let row = p
        .iter()
        .map(|r| r.iter().enumerate().map(|(j, x)| x / by(j)).collect())
        .collect();
    let column = p
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|x| x / by(i)).collect())
        .collect();
    (row, column)
}

/// `c[O1][O2] = sum_{j in O2} a[r][j]` for the representative `r` of `O1`.
pub fn slodowy_c_with(a: &IntMatrix, orbits: &[Vec<usize>], reps: &[usize]) -> IntMatrix {
    reps.iter()
        .map(|&r| orbits.iter().map(|o| o.iter().map(|&j| a[r][j]).sum()).collect())
        .collect()
}

/// Orbit-summed McKay matrix; checks every choice of representative.
pub fn slodowy_c(a: &IntMatrix, orbits: &[Vec<usize>]) -> Result<IntMatrix> {
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let c = slodowy_c_with(a, orbits, &reps);
    for (k, o) in orbits.iter().enumerate() {
        for &r in o {
            let row = slodowy_c_with(a, orbits, &[r]);
            if row[0] != c[k] {
                return Err(Error::RepresentativeDependence { orbit: k });
            }
        }
    }
    Ok(c)
}

/// `2I + M` over the rationals.
pub(crate) fn two_plus(m: &RatMatrix) -> RatMatrix {
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    if i == j {
                        x + Rational::from_integer(BigInt::from(2))
                    } else {
                        x.clone()
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn rational_matrix(m: &IntMatrix) -> RatMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect()
}

pub(crate) fn is_integral(m: &RatMatrix) -> bool {
    m.iter().flatten().all(|x| x.denom().is_one() || x.numer().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(b: IntMatrix, action: Vec<Vec<usize>>) -> IntersectionLattice {
        IntersectionLattice::new((1..=b.len()).collect(), b, action).unwrap()
    }

    fn a3() -> IntMatrix {
        vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]
    }

    fn d4() -> IntMatrix {
        vec![
            vec![-2, 0, 0, 1],
            vec![0, -2, 0, 1],
            vec![0, 0, -2, 1],
            vec![1, 1, 1, -2],
        ]
    }

    #[test]
    fn trivial_quotient_gives_b() {
        let lat = lattice(a3(), vec![vec![0, 1, 2]]);
        assert_eq!(pushforward_pairing(&lat).unwrap(), a3());
        assert_eq!(weights(&lat).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn a3_folds_by_the_flip() {
        let lat = lattice(a3(), vec![vec![0, 1, 2], vec![2, 1, 0]]);
        assert_eq!(lat.orbits(), &[vec![0, 2], vec![1]]);
        let p = pushforward_pairing(&lat).unwrap();
        assert_eq!(p, vec![vec![-2, 2], vec![2, -4]]);
        let f = weights(&lat).unwrap();
        assert_eq!(f, vec![1, 2]);
        let (row, column) = weighted_d(&rational_matrix(&p), &f);
        assert_eq!(row, rational_matrix(&vec![vec![-2, 1], vec![2, -2]]));
        assert_eq!(column, rational_matrix(&vec![vec![-2, 2], vec![1, -2]]));
    }

    #[test]
    fn d4_folds_by_triality() {
        let lat = lattice(d4(), vec![vec![0, 1, 2, 3], vec![1, 2, 0, 3], vec![2, 0, 1, 3]]);
        assert_eq!(lat.orbits(), &[vec![0, 1, 2], vec![3]]);
        let p = pushforward_pairing(&lat).unwrap();
        assert_eq!(p, vec![vec![-2, 3], vec![3, -6]]);
        let f = weights(&lat).unwrap();
        assert_eq!(f, vec![1, 3]);
        let (row, _) = weighted_d(&rational_matrix(&p), &f);
        assert_eq!(row, rational_matrix(&vec![vec![-2, 1], vec![3, -2]]));
        // the McKay matrix of D4 is B + 2I
        let a: IntMatrix = (0..4)
            .map(|i| (0..4).map(|j| d4()[i][j] + 2 * i64::from(i == j)).collect())
            .collect();
        assert_eq!(slodowy_c(&a, lat.orbits()).unwrap(), vec![vec![0, 1], vec![3, 0]]);
    }

    #[test]
    fn representative_dependence_is_detected() {
        let a = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 0, 0]];
        let orbits = vec![vec![0, 2], vec![1]];
        assert!(matches!(
            slodowy_c(&a, &orbits),
            Err(Error::RepresentativeDependence { orbit: 0 })
        ));
    }

    #[test]
    fn action_must_preserve_the_pairing() {
        let bad = IntersectionLattice::new(vec![1, 2, 3], a3(), vec![vec![0, 1, 2], vec![1, 0, 2]]);
        assert!(!bad.unwrap().preserves_pairing());
    }
}
