//! Per-group and per-pair verification reports, as printed by
//! `mckay verify-all`.

use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{build_catalog_group, pair_data, CatalogEntry, Expected, PairEntry, PairSource};
use crate::chars::{CharacterTable, GroupCharacters};
use crate::exact_arith::linalg::{inverse, is_identity, is_negative_definite, mul_int_rat, IntMatrix};
use crate::exact_arith::{rational, Cyclotomic};
use crate::fold::{verify_pair, FoldResult};
use crate::mckay::{classify_cartan, intersection_matrix_b, mckay_matrix, Classification, DynkinType};
use crate::Result;

/// Row and column orthogonality, exactly.
pub fn table_orthogonal(t: &CharacterTable) -> bool {
    let cls = t.classes();
    let rows = t.irreducibles().iter().enumerate().all(|(i, a)| {
        t.irreducibles().iter().enumerate().all(|(j, b)| {
            a.inner_product(b)
                .map(|v| v.to_i64() == Some((i == j) as i64))
                .unwrap_or(false)
        })
    });
    let m = cls.field_order();
    let order = cls.group_order() as i64;
    let cols = (0..cls.len()).all(|c| {
        (0..cls.len()).all(|d| {
            let mut s = Cyclotomic::zero(m).expect("valid order");
            for chi in t.irreducibles() {
                s = &s + &(chi.value(c) * &chi.value(d).conj());
            }
            let expected = if c == d {
                rational(order, cls.size(c) as i64)
            } else {
                rational(0, 1)
            };
            s.to_rational() == Some(expected)
        })
    });
    rows && cols
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    pub classes: usize,
    pub degrees: Vec<u64>,
    pub dixon_prime: u64,
    #[serde(rename = "two_I_minus_A")]
    pub cartan: IntMatrix,
    pub classification: Classification,
    pub affine_classification: Classification,
    #[serde(rename = "B")]
    pub b: IntMatrix,
    pub checks: GroupChecks,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupChecks {
    pub orthogonality: bool,
    pub degree_sum: bool,
    pub row_dims_balance: bool,
    pub mckay_symmetric: bool,
    pub ade_type: bool,
    pub affine_type: bool,
    pub affine_null_vector: bool,
    pub b_symmetric: bool,
    pub b_negative_definite: bool,
    pub dual_basis: bool,
}

impl GroupChecks {
    pub fn all(&self) -> bool {
        self.orthogonality
            && self.degree_sum
            && self.row_dims_balance
            && self.mckay_symmetric
            && self.ade_type
            && self.affine_type
            && self.affine_null_vector
            && self.b_symmetric
            && self.b_negative_definite
            && self.dual_basis
    }
}

impl GroupReport {
    pub fn pass(&self) -> bool {
        self.checks.all()
    }
}

/// Characters and McKay data of a catalog group, checked against the
/// entry's expectations. Build or validation errors propagate.
pub fn verify_group(entry: &CatalogEntry) -> Result<GroupReport> {
    let g = GroupCharacters::compute(Arc::new(entry.build()?))?;
    let t = &g.table;
    let a = mckay_matrix(t, &g.natural, false)?;
    let full = mckay_matrix(t, &g.natural, true)?;
    let cartan = a.cartan();
    let affine = full.cartan();
    let classification = classify_cartan(&cartan);
    let affine_classification = classify_cartan(&affine);
    let b = intersection_matrix_b(t, &g.natural)?;

    let degree_sum = t.degrees().iter().map(|d| d * d).sum::<u64>() == g.group.len() as u64;
    let row_dims_balance = full
        .entries
        .iter()
        .zip(&full.degrees)
        .all(|(row, &d)| row.iter().zip(&full.degrees).map(|(&x, &e)| x * e as i64).sum::<i64>() == 2 * d as i64);
    let symmetric = |m: &IntMatrix| (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == m[j][i]));
    let affine_null_vector = affine
        .iter()
        .all(|row| row.iter().zip(&full.degrees).map(|(&x, &d)| x * d as i64).sum::<i64>() == 0);
    let b_is_a_minus_two =
        (0..b.len()).all(|i| (0..b.len()).all(|j| b[i][j] == a.entries[i][j] - 2 * i64::from(i == j)));
    let dual_basis = inverse(&b).map(|x| is_identity(&mul_int_rat(&b, &x))).unwrap_or(false);
    let expected_affine = DynkinType::affine(entry.expected_type.family, entry.expected_type.rank);

    let checks = GroupChecks {
        orthogonality: table_orthogonal(t),
        degree_sum,
        row_dims_balance,
        mckay_symmetric: symmetric(&full.entries),
        ade_type: classification.dynkin == Some(entry.expected_type),
        affine_type: affine_classification.dynkin == Some(expected_affine),
        affine_null_vector,
        b_symmetric: symmetric(&b) && b_is_a_minus_two,
        b_negative_definite: is_negative_definite(&b),
        dual_basis,
    };
    Ok(GroupReport {
        name: entry.name.clone(),
        order: g.group.len(),
        classes: g.classes.len(),
        degrees: t.degrees().to_vec(),
        dixon_prime: t.dixon_trace().prime,
        cartan,
        classification,
        affine_classification,
        b,
        checks,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub g: String,
    pub h: String,
    pub source: &'static str,
    /// Accepted types of `2I - C`, empty when there is no expectation.
    pub expected: Vec<String>,
    pub expected_ok: bool,
    pub result: FoldResult,
}

impl PairReport {
    pub fn pass(&self) -> bool {
        self.expected_ok && self.result.verdicts.identities_hold()
    }
}

pub fn expected_ok(expected: &Expected, result: &FoldResult) -> bool {
    match expected {
        Expected::Any => true,
        Expected::Types(types) => {
            result.verdicts.finite_type && result.cartan.dynkin.is_some_and(|t| types.contains(&t))
        }
    }
}

pub fn verify_pair_entry(entry: &PairEntry) -> Result<PairReport> {
    let g = Arc::new(build_catalog_group(&entry.g)?);
    let data = pair_data(g, &entry.h_generators)?;
    let result = verify_pair(&data.pair, &data.h, &data.g)?;
    let expected = match &entry.expected {
        Expected::Any => Vec::new(),
        Expected::Types(ts) => ts.iter().map(|t| t.to_string()).collect(),
    };
    Ok(PairReport {
        g: entry.g.clone(),
        h: entry.h.clone(),
        source: match entry.source {
            PairSource::Standard => "standard",
            PairSource::Discovered => "discovered",
        },
        expected,
        expected_ok: expected_ok(&entry.expected, &result),
        result,
    })
}
