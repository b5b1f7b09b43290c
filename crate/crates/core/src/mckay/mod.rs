//! McKay matrices, the intersection form of the minimal resolution, and
//! recognition of Cartan matrices.

mod classify;
mod diagram;

use serde::Serialize;

pub use classify::{
    classify_cartan, is_cartan_shape, match_permutation, CartanKind, Classification, DynkinType, Family,
};
pub use diagram::render_dynkin;

use crate::chars::{CharacterTable, ClassFunction};
use crate::exact_arith::linalg::{self, IntMatrix, RatMatrix};
use crate::{Error, Result};

/// `a[i][j] = <chi_nat chi_i, chi_j>` over the listed irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayMatrix {
    /// Table indices of the rows.
    pub index: Vec<usize>,
    pub degrees: Vec<u64>,
    pub entries: IntMatrix,
}

impl McKayMatrix {
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `2I - A`.
    pub fn cartan(&self) -> IntMatrix {
        two_minus(&self.entries)
    }
}

/// `2I - M`.
pub fn two_minus(m: &IntMatrix) -> IntMatrix {
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { 2 - x } else { -x })
                .collect()
        })
        .collect()
}

fn integer_product(f: &ClassFunction, chi: &ClassFunction, row: usize, col: usize) -> Result<i64> {
    let ip = f.inner_product(chi)?;
    ip.to_i64().ok_or_else(|| Error::NonInteger {
        what: "McKay multiplicity",
        row,
        col,
        value: ip.to_string(),
    })
}

fn pairing_matrix(table: &CharacterTable, f: &ClassFunction, index: &[usize]) -> Result<IntMatrix> {
    if f.classes().group_id() != table.classes().group_id() {
        return Err(Error::GroupMismatch);
    }
    index
        .iter()
        .enumerate()
        .map(|(r, &i)| {
            let left = f.tensor(table.irreducible(i))?;
            index
                .iter()
                .enumerate()
                .map(|(c, &j)| integer_product(&left, table.irreducible(j), r, c))
                .collect()
        })
        .collect()
}

pub fn mckay_matrix(table: &CharacterTable, chi_nat: &ClassFunction, include_trivial: bool) -> Result<McKayMatrix> {
    let index: Vec<usize> = if include_trivial {
        (0..table.len()).collect()
    } else {
        table.nontrivial().collect()
    };
    let entries = pairing_matrix(table, chi_nat, &index)?;
    let degrees = index.iter().map(|&i| table.degrees()[i]).collect();
    Ok(McKayMatrix {
        index,
        degrees,
        entries,
    })
}

/// `B[i][j] = <(chi_nat - 2) chi_i, chi_j>` over the nontrivial irreducibles.
pub fn intersection_matrix_b(table: &CharacterTable, chi_nat: &ClassFunction) -> Result<IntMatrix> {
    let index: Vec<usize> = table.nontrivial().collect();
    pairing_matrix(table, &chi_nat.minus_constant(2), &index)
}

/// The exact inverse `X` of `B`; column `j` holds the coordinates of the
/// dual class `E_j*`.
pub fn dual_basis(b: &IntMatrix) -> Result<RatMatrix> {
    linalg::inverse(b)
}

/// Row-major integer matrix together with its row labels.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixJson {
    pub labels: Vec<String>,
    pub rows: IntMatrix,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog_group;
    use crate::chars::GroupCharacters;
    use crate::exact_arith::linalg::{is_identity, is_negative_definite, mul_int_rat};
    use crate::exact_arith::rational;
    use std::sync::Arc;

    fn chars(name: &str) -> GroupCharacters {
        GroupCharacters::compute(Arc::new(build_catalog_group(name).unwrap())).unwrap()
    }

    #[test]
    fn c2() {
        let g = chars("C:2");
        let a = mckay_matrix(&g.table, &g.natural, false).unwrap();
        assert_eq!(a.entries, vec![vec![0]]);
        assert_eq!(a.cartan(), vec![vec![2]]);
        assert_eq!(intersection_matrix_b(&g.table, &g.natural).unwrap(), vec![vec![-2]]);
    }

    #[test]
    fn c4_chain() {
        let g = chars("C:4");
        let a = mckay_matrix(&g.table, &g.natural, false).unwrap();
        let classified = classify_cartan(&a.cartan());
        assert_eq!(classified.dynkin, Some(DynkinType::finite(Family::A, 3)));
        // each row meets exactly the neighbours tau_{k +- 1}
        let total: i64 = a.entries.iter().flatten().sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn q8_is_d4() {
        let g = chars("Q8");
        let b = intersection_matrix_b(&g.table, &g.natural).unwrap();
        // the 2-dimensional character sits last and meets each leaf once
        assert_eq!(
            b,
            vec![
                vec![-2, 0, 0, 1],
                vec![0, -2, 0, 1],
                vec![0, 0, -2, 1],
                vec![1, 1, 1, -2],
            ]
        );
        assert!(is_negative_definite(&b));
        let x = dual_basis(&b).unwrap();
        assert!(is_identity(&mul_int_rat(&b, &x)));
        assert_eq!(x[3][3], rational(-2, 1));
    }

    #[test]
    fn affine_null_vector_2t() {
        let g = chars("2T");
        let a = mckay_matrix(&g.table, &g.natural, true).unwrap();
        let m = a.cartan();
        for row in &m {
            let s: i64 = row.iter().zip(&a.degrees).map(|(x, &d)| x * d as i64).sum();
            assert_eq!(s, 0);
        }
        assert_eq!(classify_cartan(&m).dynkin, Some(DynkinType::affine(Family::E, 6)));
    }
}
