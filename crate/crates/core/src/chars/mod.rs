//! Character theory: tables, inner products, decompositions, and the
//! passage between a normal subgroup and its ambient group.

mod class_function;
pub mod dixon;
mod induction;

use std::sync::Arc;

use serde::Serialize;

pub use class_function::ClassFunction;
pub use dixon::{character_table, DixonTrace};
pub use induction::{conjugate_character, conjugation_permutation, induce, irr_orbits, restrict};

use crate::exact_arith::Cyclotomic;
use crate::group::{ClassData, FiniteMatrixGroup};
use crate::{Error, Result};

/// The irreducible characters of a group. Row 0 is the trivial character;
/// the rest follow by ascending degree, then lexicographically by values.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Arc<ClassData>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    trace: DixonTrace,
}

impl CharacterTable {
    pub(crate) fn from_parts(
        classes: Arc<ClassData>,
        irreducibles: Vec<ClassFunction>,
        degrees: Vec<u64>,
        trace: DixonTrace,
    ) -> Self {
        CharacterTable {
            classes,
            irreducibles,
            degrees,
            trace,
        }
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    /// Indices of the nontrivial irreducibles.
    pub fn nontrivial(&self) -> std::ops::Range<usize> {
        1..self.len()
    }

    pub fn dixon_trace(&self) -> &DixonTrace {
        &self.trace
    }

    /// Index of an irreducible character equal to `f`, if any.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|chi| chi == f)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            classes: [
                self.classes.sizes().iter().map(|&s| s as u64).collect(),
                self.classes.representative_orders().iter().map(|&o| o as u64).collect(),
            ],
            irreducibles: self.irreducibles.iter().map(|chi| chi.values().to_vec()).collect(),
            degrees: self.degrees.clone(),
        }
    }
}

/// `{"classes": [sizes, representative orders], "irreducibles": [...], "degrees": [...]}`.
#[derive(Serialize, Debug, Clone)]
pub struct TableJson {
    pub classes: [Vec<u64>; 2],
    pub irreducibles: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<u64>,
}

/// Integer multiplicities over the irreducibles of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    pub multiplicities: Vec<i64>,
}

impl VirtualCharacter {
    pub fn recompose(&self, table: &CharacterTable) -> ClassFunction {
        let mut acc = ClassFunction::constant(table.classes().clone(), 0);
        for (chi, &k) in table.irreducibles().iter().zip(&self.multiplicities) {
            if k != 0 {
                acc = acc.add(&chi.scale(k)).expect("same group");
            }
        }
        acc
    }
}

/// Trace of a representative matrix, class by class.
pub fn natural_character(g: &FiniteMatrixGroup, cls: &Arc<ClassData>) -> Result<ClassFunction> {
    if cls.group_id() != g.id() {
        return Err(Error::GroupMismatch);
    }
    let values = (0..cls.len())
        .map(|c| g.element(cls.representative(c)).trace())
        .collect();
    ClassFunction::new(cls.clone(), values)
}

pub fn inner_product(f1: &ClassFunction, f2: &ClassFunction) -> Result<Cyclotomic> {
    f1.inner_product(f2)
}

pub fn tensor(f1: &ClassFunction, f2: &ClassFunction) -> Result<ClassFunction> {
    f1.tensor(f2)
}

/// Multiplicities `<f, chi_i>`, rejecting any non-integer inner product.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<VirtualCharacter> {
    let multiplicities = table
        .irreducibles()
        .iter()
        .enumerate()
        .map(|(index, chi)| {
            let ip = f.inner_product(chi)?;
            ip.to_i64().ok_or(Error::NotVirtualCharacter {
                index,
                value: ip.to_string(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(VirtualCharacter { multiplicities })
}

/// A group with its classes, character table and natural character.
#[derive(Clone, Debug)]
pub struct GroupCharacters {
    pub group: Arc<FiniteMatrixGroup>,
    pub classes: Arc<ClassData>,
    pub table: CharacterTable,
    pub natural: ClassFunction,
}

impl GroupCharacters {
    pub fn new(group: Arc<FiniteMatrixGroup>, classes: Arc<ClassData>) -> Result<Self> {
        let table = character_table(&group, &classes)?;
        let natural = natural_character(&group, &classes)?;
        Ok(GroupCharacters {
            group,
            classes,
            table,
            natural,
        })
    }

    pub fn compute(group: Arc<FiniteMatrixGroup>) -> Result<Self> {
        let classes = Arc::new(crate::group::conjugacy_classes(&group));
        Self::new(group, classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog_group, catalog_entry, pair_data, PairData};
    use crate::exact_arith::rational;
    use crate::group::normal_pair;

    fn chars(name: &str) -> GroupCharacters {
        GroupCharacters::compute(Arc::new(build_catalog_group(name).unwrap())).unwrap()
    }

    fn int(m: u32, n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(m, n).unwrap()
    }

    fn assert_orthogonal(t: &CharacterTable) {
        let cls = t.classes();
        for (i, a) in t.irreducibles().iter().enumerate() {
            for (j, b) in t.irreducibles().iter().enumerate() {
                assert_eq!(a.inner_product(b).unwrap().to_i64(), Some((i == j) as i64));
            }
        }
        let order = cls.group_order() as i64;
        let m = cls.field_order();
        for c in 0..cls.len() {
            for d in 0..cls.len() {
                let mut s = Cyclotomic::zero(m).unwrap();
                for chi in t.irreducibles() {
                    s = &s + &(chi.value(c) * &chi.value(d).conj());
                }
                let expected = if c == d {
                    Cyclotomic::from_rational(m, &rational(order, cls.size(c) as i64)).unwrap()
                } else {
                    Cyclotomic::zero(m).unwrap()
                };
                assert_eq!(s, expected);
            }
        }
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum, order as u64);
    }

    #[test]
    fn c2_table() {
        let g = chars("C:2");
        assert_eq!(g.table.degrees(), &[1, 1]);
        let rows: Vec<Vec<i64>> = g
            .table
            .irreducibles()
            .iter()
            .map(|chi| chi.values().iter().map(|v| v.to_i64().unwrap()).collect())
            .collect();
        assert_eq!(rows, vec![vec![1, 1], vec![1, -1]]);
        let square = g.natural.tensor(&g.natural).unwrap();
        assert_eq!(square.values(), &[int(2, 4), int(2, 4)]);
        let sign = g.table.irreducible(1);
        assert_eq!(&sign.tensor(sign).unwrap(), g.table.irreducible(0));
        assert_eq!(&g.natural.tensor(g.table.irreducible(0)).unwrap(), &g.natural);
    }

    #[test]
    fn q8_and_2i_degrees() {
        let q8 = chars("Q8");
        assert_eq!(q8.table.degrees(), &[1, 1, 1, 1, 2]);
        assert_orthogonal(&q8.table);
        let two_i = chars("2I");
        assert_eq!(two_i.table.degrees(), &[1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(two_i.table.dixon_trace().prime, 61);
        assert_orthogonal(&two_i.table);
    }

    #[test]
    fn orthogonality_across_catalog() {
        for name in ["C:5", "C:12", "BD:12", "BD:24", "2T", "2O"] {
            assert_orthogonal(&chars(name).table);
        }
    }

    #[test]
    fn natural_character_values() {
        let q8 = chars("Q8");
        let nat = &q8.natural;
        assert_eq!(nat.value(0), &int(4, 2));
        // -I is the other central class
        assert_eq!(nat.value(1), &int(4, -2));
        assert!(nat.is_real());
        let triv = ClassFunction::trivial(q8.classes.clone());
        assert!(nat.inner_product(&triv).unwrap().is_zero());
        assert_eq!(triv.inner_product(&triv).unwrap().to_i64(), Some(1));
        let c4 = chars("C:4");
        let a = c4.group.generators()[0];
        assert!(c4.natural.value(c4.classes.class_of(a)).is_zero());
    }

    #[test]
    fn decompositions() {
        let q8 = chars("Q8");
        let d = decompose(&q8.natural, &q8.table).unwrap();
        assert_eq!(d.multiplicities, vec![0, 0, 0, 0, 1]);
        let shifted = decompose(&q8.natural.minus_constant(2), &q8.table).unwrap();
        assert_eq!(shifted.multiplicities, vec![-2, 0, 0, 0, 1]);
        assert_eq!(shifted.recompose(&q8.table), q8.natural.minus_constant(2));

        let c4 = chars("C:4");
        let a = c4.group.generators()[0];
        let tau = |k: u32| {
            let mut values = vec![int(4, 0); 4];
            for j in 0..4u32 {
                let c = c4.classes.class_of(c4.group.pow(a, j));
                values[c] = Cyclotomic::root_of_unity(4, (j * k) as i64).unwrap();
            }
            let f = ClassFunction::new(c4.classes.clone(), values).unwrap();
            c4.table.position(&f).unwrap()
        };
        let product = c4.natural.tensor(c4.table.irreducible(tau(1))).unwrap();
        let d = decompose(&product, &c4.table).unwrap();
        let mut expected = vec![0; 4];
        expected[tau(0)] = 1;
        expected[tau(2)] = 1;
        assert_eq!(d.multiplicities, expected);

        let c2 = chars("C:2");
        let mut delta = vec![int(2, 0); 2];
        delta[0] = int(2, 1);
        let delta = ClassFunction::new(c2.classes.clone(), delta).unwrap();
        assert!(matches!(
            decompose(&delta, &c2.table),
            Err(Error::NotVirtualCharacter { index: 0, .. })
        ));
    }

    #[test]
    fn group_mismatch() {
        let a = chars("C:4");
        let b = chars("C:4");
        assert!(matches!(a.natural.inner_product(&b.natural), Err(Error::GroupMismatch)));
    }

    #[test]
    fn dixon_lift_reduces_back() {
        for name in ["2T", "2I", "BD:20"] {
            let g = chars(name);
            let trace = g.table.dixon_trace();
            for (chi, modular) in g.table.irreducibles().iter().zip(&trace.values_mod_p) {
                for (v, &x) in chi.values().iter().zip(modular) {
                    assert_eq!(dixon::reduce_mod_p(v, trace.root).unwrap().value(), x);
                }
            }
        }
    }

    fn q8_over_c4() -> (PairData, Vec<usize>) {
        let g = Arc::new(build_catalog_group("Q8").unwrap());
        let data = pair_data(g, &catalog_entry("C:4").unwrap().generators).unwrap();
        // tau_k(a) = i^k for the generator a = diag(i, -i)
        let h = &data.h;
        let a = h.group.index_of(&catalog_entry("C:4").unwrap().generators[0]).unwrap();
        let taus = (0..4u32)
            .map(|k| {
                let mut values = vec![int(4, 0); 4];
                for j in 0..4u32 {
                    values[h.classes.class_of(h.group.pow(a, j))] =
                        Cyclotomic::root_of_unity(4, (j * k) as i64).unwrap();
                }
                let f = ClassFunction::new(h.classes.clone(), values).unwrap();
                h.table.position(&f).unwrap()
            })
            .collect();
        (data, taus)
    }

    #[test]
    fn induction_from_c4() {
        let (data, tau) = q8_over_c4();
        let pair = &data.pair;
        let faithful = data.h.table.irreducible(tau[1]);
        let ind = induce(pair, faithful).unwrap();
        assert_eq!(data.g.table.position(&ind), Some(4));
        assert_eq!(ind.integer_degree(), Some(2));

        let triv = ClassFunction::trivial(pair.g_classes().clone());
        assert_eq!(
            restrict(pair, &triv).unwrap(),
            ClassFunction::trivial(pair.h_classes().clone())
        );
        assert_eq!(restrict(pair, &data.g.natural).unwrap(), data.h.natural);

        let j = pair.coset_reps()[1];
        let conj = conjugate_character(pair, faithful, j).unwrap();
        assert_eq!(&conj, data.h.table.irreducible(tau[3]));
        let same = conjugate_character(pair, faithful, 0).unwrap();
        assert_eq!(&same, faithful);
        assert_eq!(conjugation_permutation(pair, &data.h.table, j).unwrap()[tau[2]], tau[2]);

        let mut expected = vec![vec![tau[1], tau[3]], vec![tau[2]]];
        for o in &mut expected {
            o.sort_unstable();
        }
        expected.sort();
        assert_eq!(irr_orbits(pair, &data.h.table).unwrap(), expected);
        assert!(matches!(induce(pair, &data.g.natural), Err(Error::GroupMismatch)));
    }

    #[test]
    fn induction_from_q8_to_2t() {
        let g = Arc::new(build_catalog_group("2T").unwrap());
        let data = pair_data(g, &catalog_entry("Q8").unwrap().generators).unwrap();
        let pair = &data.pair;
        assert_eq!(pair.index(), 3);
        let ind = induce(pair, data.h.table.irreducible(1)).unwrap();
        assert_eq!(ind.integer_degree(), Some(3));
        let d = decompose(&ind, &data.g.table).unwrap();
        let three = data.g.table.degrees().iter().position(|&d| d == 3).unwrap();
        let mut expected = vec![0; data.g.table.len()];
        expected[three] = 1;
        assert_eq!(d.multiplicities, expected);
        assert_eq!(irr_orbits(pair, &data.h.table).unwrap(), vec![vec![1, 2, 3], vec![4]]);
    }

    #[test]
    fn trivial_quotient_has_singleton_orbits() {
        let g = Arc::new(build_catalog_group("BD:12").unwrap());
        let all: Vec<usize> = (0..g.len()).collect();
        let pair = normal_pair(g.clone(), &all).unwrap();
        let h = GroupCharacters::new(pair.h().clone(), pair.h_classes().clone()).unwrap();
        let orbits = irr_orbits(&pair, &h.table).unwrap();
        assert!(orbits.iter().all(|o| o.len() == 1));
        assert_eq!(orbits.len(), h.table.len() - 1);
    }
}
