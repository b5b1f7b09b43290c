use num_bigint::BigInt;

use super::{CharacterTable, ClassFunction};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::group::NormalPair;
use crate::{Error, Result};

fn check_h(pair: &NormalPair, f: &ClassFunction) -> Result<()> {
    if f.classes().group_id() != pair.h().id() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

fn check_g(pair: &NormalPair, f: &ClassFunction) -> Result<()> {
    if f.classes().group_id() != pair.g().id() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// Frobenius formula `Ind(tau)(g) = (1/|H|) sum_{x in G} tau°(x g x^-1)`,
/// grouped by conjugates: each `y` in the class of `g` is hit `|C_G(g)|`
/// times.
pub fn induce(pair: &NormalPair, tau: &ClassFunction) -> Result<ClassFunction> {
    check_h(pair, tau)?;
    let g_cls = pair.g_classes();
    let h_cls = pair.h_classes();
    let m = g_cls.field_order();
    let order_g = pair.g().len();
    let order_h = pair.h().len();
    let mut values = Vec::with_capacity(g_cls.len());
    for c in 0..g_cls.len() {
        let mut acc = Cyclotomic::zero(m)?;
        for &y in g_cls.class(c) {
            // H is normal: a class lies entirely inside or outside it
            let Some(hy) = pair.g_to_h(y) else { break };
            acc = &acc + &tau.value(h_cls.class_of(hy)).embed(m)?;
        }
        let factor = Rational::new(BigInt::from(order_g), BigInt::from(order_h * g_cls.size(c)));
        values.push(acc.scale(&factor));
    }
    ClassFunction::new(g_cls.clone(), values)
}

pub fn restrict(pair: &NormalPair, rho: &ClassFunction) -> Result<ClassFunction> {
    check_g(pair, rho)?;
    let g_cls = pair.g_classes();
    let h_cls = pair.h_classes();
    let values = (0..h_cls.len())
        .map(|c| {
            let x = pair.h_to_g(h_cls.representative(c));
            rho.value(g_cls.class_of(x)).clone()
        })
        .collect();
    ClassFunction::new(h_cls.clone(), values)
}

/// `tau^g(h) = tau(g h g^-1)` for a `G`-element `g`.
pub fn conjugate_character(pair: &NormalPair, tau: &ClassFunction, g: usize) -> Result<ClassFunction> {
    check_h(pair, tau)?;
    let h_cls = pair.h_classes();
    let values = (0..h_cls.len())
        .map(|c| {
            let y = pair.conjugate_in_h(g, h_cls.representative(c))?;
            Ok(tau.value(h_cls.class_of(y)).clone())
        })
        .collect::<Result<_>>()?;
    ClassFunction::new(h_cls.clone(), values)
}

/// The permutation `i -> j` of irreducibles with `chi_i^g = chi_j`.
pub fn conjugation_permutation(pair: &NormalPair, table_h: &CharacterTable, g: usize) -> Result<Vec<usize>> {
    table_h
        .irreducibles()
        .iter()
        .map(|chi| {
            let conj = conjugate_character(pair, chi, g)?;
            table_h
                .position(&conj)
                .ok_or_else(|| Error::Dixon("conjugate of an irreducible is not in the table".into()))
        })
        .collect()
}

/// Orbits of `G/H` on the nontrivial irreducibles of `H`, each sorted and
/// ordered by smallest member.
pub fn irr_orbits(pair: &NormalPair, table_h: &CharacterTable) -> Result<Vec<Vec<usize>>> {
    let perms = pair
        .coset_reps()
        .iter()
        .map(|&g| conjugation_permutation(pair, table_h, g))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = vec![false; table_h.len()];
    let mut orbits = Vec::new();
    for start in table_h.nontrivial() {
        if seen[start] {
            continue;
        }
        let mut orbit: Vec<usize> = perms.iter().map(|p| p[start]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &i in &orbit {
            seen[i] = true;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}
