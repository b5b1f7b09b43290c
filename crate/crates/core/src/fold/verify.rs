use serde::{Serialize, Serializer};

use super::{
    is_integral, lattice_from_characters, pushforward_entry, pushforward_pairing_with, rational_matrix, slodowy_c_with,
    two_plus, weighted_d, weights,
};
use crate::chars::{conjugate_character, induce, restrict, ClassFunction, GroupCharacters};
use crate::exact_arith::linalg::{IntMatrix, RatMatrix};
use crate::exact_arith::Rational;
use crate::group::NormalPair;
use crate::mckay::{classify_cartan, mckay_matrix, two_minus, Classification};
use crate::{Error, Result};

/// Which weighting of `P` satisfies `2I - C = -D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Row,
    Column,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub main_identity: bool,
    #[serde(rename = "two_I_minus_C_eq_minus_D")]
    pub convention: Convention,
    /// Both weightings agree, which happens when all weights are equal.
    pub conventions_coincide: bool,
    pub consistency_square: bool,
    pub finite_type: bool,
    pub mackey: bool,
    pub frobenius: bool,
    pub ind_constant_on_orbits: bool,
    pub b_invariant: bool,
    pub homomorphism: bool,
    pub representative_independent: bool,
    pub weights_divide: bool,
    pub integrality: bool,
    /// Only present for `G = H`: `P = B` and `C = A`.
    pub degenerate: Option<bool>,
}

impl Verdicts {
    /// Every identity holds. Whether `2I - C` is of finite type is not
    /// part of this; it depends on the pair.
    pub fn identities_hold(&self) -> bool {
        self.main_identity
            && self.convention != Convention::Fail
            && self.consistency_square
            && self.mackey
            && self.frobenius
            && self.ind_constant_on_orbits
            && self.b_invariant
            && self.homomorphism
            && self.representative_independent
            && self.weights_divide
            && self.integrality
            && self.degenerate != Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FoldResult {
    /// Orbits of character-table indices of `H`.
    pub orbits: Vec<Vec<usize>>,
    /// Degree of the characters in each orbit.
    pub degrees: Vec<u64>,
    pub n: usize,
    pub f: Vec<u64>,
    #[serde(rename = "P", serialize_with = "ser_rat")]
    pub p: RatMatrix,
    /// `D` under the matched convention (row weighting when neither holds).
    #[serde(rename = "D", serialize_with = "ser_rat")]
    pub d: RatMatrix,
    #[serde(rename = "D_row", serialize_with = "ser_rat")]
    pub d_row: RatMatrix,
    #[serde(rename = "D_column", serialize_with = "ser_rat")]
    pub d_column: RatMatrix,
    #[serde(rename = "C")]
    pub c: IntMatrix,
    #[serde(rename = "two_I_minus_C")]
    pub cartan_matrix: IntMatrix,
    pub cartan: Classification,
    pub verdicts: Verdicts,
    pub failures: Vec<String>,
}

impl FoldResult {
    /// `degree,f` node labels for diagrams.
    pub fn node_labels(&self) -> Vec<String> {
        self.degrees
            .iter()
            .zip(&self.f)
            .map(|(d, f)| format!("{d},f{f}"))
            .collect()
    }
}

fn rat_value(x: &Rational) -> serde_json::Value {
    if x.is_integer() {
        let n = x.to_integer();
        match i64::try_from(&n) {
            Ok(v) => v.into(),
            Err(_) => n.to_string().into(),
        }
    } else {
        x.to_string().into()
    }
}

fn ser_rat<S: Serializer>(m: &RatMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Value>> = m.iter().map(|r| r.iter().map(rat_value).collect()).collect();
    rows.serialize(s)
}

fn neg(m: &RatMatrix) -> RatMatrix {
    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

fn sum_all(fs: impl IntoIterator<Item = Result<ClassFunction>>) -> Result<ClassFunction> {
    let mut it = fs.into_iter();
    let mut acc = it.next().expect("at least one coset")?;
    for f in it {
        acc = acc.add(&f?)?;
    }
    Ok(acc)
}

/// Folds the lattice of `H` along `G/H` and checks it against the
/// characters of `G`. Identity failures are reported in the verdicts and
/// `failures`, not as errors.
pub fn verify_pair(pair: &NormalPair, h: &GroupCharacters, g: &GroupCharacters) -> Result<FoldResult> {
    if h.group.id() != pair.h().id() || g.group.id() != pair.g().id() {
        return Err(Error::GroupMismatch);
    }
    let mut failures = Vec::new();
    let table_h = &h.table;
    let lat = lattice_from_characters(pair, table_h, &h.natural)?;
    let n = pair.index();

    let b_invariant = lat.preserves_pairing();
    if !b_invariant {
        failures.push("action does not preserve B".to_string());
    }

    let action = lat.action();
    let mut homomorphism = true;
    for (a, row) in pair.quotient_mult().iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            // conjugating characters is a right action: tau^(xy) = (tau^x)^y
            if (0..lat.len()).any(|x| action[c][x] != action[b][action[a][x]]) {
                homomorphism = false;
                failures.push(format!("action is not compatible with the quotient at ({a}, {b})"));
            }
        }
    }

    let orbits = lat.orbits().to_vec();
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let weights_divide = orbits.iter().all(|o| n.is_multiple_of(o.len()));
    let f = weights(&lat)?;
    let p = pushforward_pairing_with(&lat, &reps);
    let (d_row, d_column) = weighted_d(&p, &f);

    let a = mckay_matrix(table_h, &h.natural, false)?.entries;
    let c = slodowy_c_with(&a, &orbits, &reps);

    let mut representative_independent = true;
    for (k, ok) in orbits.iter().enumerate() {
        for &r in ok {
            if slodowy_c_with(&a, &orbits, &[r])[0] != c[k] {
                representative_independent = false;
                failures.push(format!("C row {k} depends on the representative {r}"));
            }
            for (l, ol) in orbits.iter().enumerate() {
                for &s in ol {
                    if pushforward_entry(&lat, r, s) != p[k][l] {
                        representative_independent = false;
                        failures.push(format!("P ({k}, {l}) depends on representatives ({r}, {s})"));
                    }
                }
            }
        }
    }

    let cartan_matrix = two_minus(&c);
    let minus_cartan = neg(&rational_matrix(&cartan_matrix));
    let row_ok = d_row == minus_cartan;
    let column_ok = d_column == minus_cartan;
    let convention = match (row_ok, column_ok) {
        (true, _) => Convention::Row,
        (false, true) => Convention::Column,
        _ => Convention::Fail,
    };
    if convention == Convention::Fail {
        failures.push("2I - C differs from -D under both weightings".to_string());
    }
    let d = if convention == Convention::Column {
        d_column.clone()
    } else {
        d_row.clone()
    };
    let consistency_square = rational_matrix(&c) == two_plus(&d);
    let integrality = is_integral(&p) && is_integral(&d);
    if !integrality {
        failures.push("P or D has a non-integer entry".to_string());
    }

    let cartan = classify_cartan(&cartan_matrix);
    let finite_type = cartan.is_finite();

    // character side
    let induced: Vec<ClassFunction> = (0..table_h.len())
        .map(|i| induce(pair, table_h.irreducible(i)))
        .collect::<Result<_>>()?;
    let chi_g_minus_two = g.natural.minus_constant(2);
    let mut main_identity = true;
    for (k, &r) in reps.iter().enumerate() {
        let left = chi_g_minus_two.tensor(&induced[lat.labels()[r]])?;
        for (l, &s) in reps.iter().enumerate() {
            let value = left.inner_product(&induced[lat.labels()[s]])?;
            if value.to_rational().as_ref() != Some(&p[k][l]) {
                main_identity = false;
                failures.push(format!(
                    "main identity at ({k}, {l}): lattice {}, characters {value}",
                    p[k][l]
                ));
            }
        }
    }

    let mut ind_constant_on_orbits = true;
    for (k, o) in orbits.iter().enumerate() {
        let first = &induced[lat.labels()[o[0]]];
        if o.iter().any(|&r| &induced[lat.labels()[r]] != first) {
            ind_constant_on_orbits = false;
            failures.push(format!("induction is not constant on orbit {k}"));
        }
    }

    let mut mackey = true;
    for (i, tau) in table_h.irreducibles().iter().enumerate() {
        let lhs = restrict(pair, &induced[i])?;
        let rhs = sum_all(pair.coset_reps().iter().map(|&x| conjugate_character(pair, tau, x)))?;
        if lhs != rhs {
            mackey = false;
            failures.push(format!("Mackey fails for irreducible {i} of H"));
        }
    }

    let mut frobenius = true;
    let restricted: Vec<ClassFunction> = g
        .table
        .irreducibles()
        .iter()
        .map(|rho| restrict(pair, rho))
        .collect::<Result<_>>()?;
    for (i, tau) in table_h.irreducibles().iter().enumerate() {
        for (j, rho) in g.table.irreducibles().iter().enumerate() {
            if induced[i].inner_product(rho)? != tau.inner_product(&restricted[j])? {
                frobenius = false;
                failures.push(format!("Frobenius reciprocity fails for ({i}, {j})"));
            }
        }
    }

    let degenerate = (n == 1).then(|| rational_matrix(lat.pairing()) == p && c == a);
    if degenerate == Some(false) {
        failures.push("trivial fold does not reproduce (B, A)".to_string());
    }

    let label_orbits: Vec<Vec<usize>> = orbits
        .iter()
        .map(|o| o.iter().map(|&r| lat.labels()[r]).collect())
        .collect();
    let degrees = label_orbits.iter().map(|o| table_h.degrees()[o[0]]).collect();

    let verdicts = Verdicts {
        main_identity,
        convention,
        conventions_coincide: d_row == d_column,
        consistency_square,
        finite_type,
        mackey,
        frobenius,
        ind_constant_on_orbits,
        b_invariant,
        homomorphism,
        representative_independent,
        weights_divide,
        integrality,
        degenerate,
    };
    Ok(FoldResult {
        orbits: label_orbits,
        degrees,
        n,
        f,
        p,
        d,
        d_row,
        d_column,
        c,
        cartan_matrix,
        cartan,
        verdicts,
        failures,
    })
}
