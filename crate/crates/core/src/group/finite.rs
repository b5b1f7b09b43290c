use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;

use super::Mat2;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 10_000;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 2048;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A finite subgroup of `SL_2(Q(zeta_m))`, enumerated by breadth-first
/// closure. Element 0 is the identity.
#[derive(Debug)]
pub struct FiniteMatrixGroup {
    id: u64,
    field_order: u32,
    elements: Vec<Mat2>,
    lookup: HashMap<Mat2, usize>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
    /// `right_gen[k][x]` is the index of `x * g_k`.
    right_gen: Vec<Vec<usize>>,
    /// BFS tree: `parent[x] = (y, k)` with `x = y * g_k`.
    parent: Vec<Option<(usize, usize)>>,
    table: Option<Vec<u32>>,
    element_orders: Vec<u32>,
    exponent: u32,
}

impl FiniteMatrixGroup {
    pub fn closure(generators: &[Mat2], cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let m0 = generators.iter().fold(1u32, |acc, g| acc.lcm(&g.order()));
        let gens: Vec<Mat2> = generators.iter().map(|g| g.embed(m0)).collect::<Result<_>>()?;
        for (index, g) in gens.iter().enumerate() {
            if g.det().to_i64() != Some(1) {
                return Err(Error::NonUnimodular { index });
            }
        }

        let identity = Mat2::identity(m0)?;
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut parent = vec![None];
        let mut right_gen = vec![Vec::new(); gens.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let y = &elements[x] * g;
                let idx = match lookup.get(&y) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= cap {
                            return Err(Error::ClosureCapExceeded { cap });
                        }
                        lookup.insert(y.clone(), i);
                        elements.push(y);
                        parent.push(Some((x, k)));
                        queue.push_back(i);
                        i
                    }
                };
                // BFS visits x in index order, so this stays aligned.
                debug_assert_eq!(right_gen[k].len(), x);
                right_gen[k].push(idx);
            }
        }
        let generator_indices = gens.iter().map(|g| lookup[g]).collect();

        let mut group = FiniteMatrixGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            field_order: m0,
            inverse: Vec::new(),
            elements,
            lookup,
            generators: generator_indices,
            right_gen,
            parent,
            table: None,
            element_orders: Vec::new(),
            exponent: 1,
        };
        group.build_table();
        group.inverse = (0..group.len())
            .map(|x| {
                group
                    .lookup
                    .get(&group.elements[x].adjugate())
                    .copied()
                    .ok_or(Error::NotASubgroup)
            })
            .collect::<Result<_>>()?;
        group.element_orders = (0..group.len()).map(|x| group.compute_order(x)).collect();
        group.exponent = group.element_orders.iter().fold(1, |a, b| a.lcm(b));

        let m = m0.lcm(&group.exponent);
        if m != m0 {
            group.field_order = m;
            group.elements = group.elements.iter().map(|e| e.embed(m)).collect::<Result<_>>()?;
            group.lookup = group
                .elements
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, e)| (e, i))
                .collect();
        }
        Ok(group)
    }

    fn build_table(&mut self) {
        let n = self.len();
        if n > TABLE_LIMIT {
            return;
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        // parents precede children in BFS order
        for b in 1..n {
            let (pb, k) = self.parent[b].expect("non-identity has a parent");
            for a in 0..n {
                let ap = table[a * n + pb] as usize;
                table[a * n + b] = self.right_gen[k][ap] as u32;
            }
        }
        self.table = Some(table);
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Unique id of this group instance, used to match class functions.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The cyclotomic order `m` shared by every entry and character value.
    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat2 {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_order(&self, i: usize) -> u32 {
        self.element_orders[i]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.table {
            return t[a * self.len() + b] as usize;
        }
        let mut word = Vec::new();
        let mut x = b;
        while let Some((p, k)) = self.parent[x] {
            word.push(k);
            x = p;
        }
        word.iter().rev().fold(a, |acc, &k| self.right_gen[k][acc])
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn pow(&self, x: usize, e: u32) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Index of a matrix in the group, if present.
    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        if self.field_order.is_multiple_of(m.order()) {
            let e = m.embed(self.field_order).ok()?;
            return self.lookup.get(&e).copied();
        }
        let common = self.field_order.lcm(&m.order());
        let target = m.embed(common).ok()?;
        self.elements
            .iter()
            .position(|e| e.embed(common).is_ok_and(|e| e == target))
    }

    /// Subgroup generated by the given elements, as sorted indices.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        member[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in seeds {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff the index set contains the identity and is closed under
    /// products and inverses.
    pub fn is_subgroup(&self, indices: &[usize]) -> bool {
        let mut member = vec![false; self.len()];
        for &i in indices {
            if i >= self.len() {
                return false;
            }
            member[i] = true;
        }
        member[0]
            && indices
                .iter()
                .all(|&a| member[self.inverse[a]] && indices.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Builds the subgroup on the given element indices as a group in its
    /// own right, together with the embedding of its elements into `self`.
    pub fn subgroup(&self, indices: &[usize]) -> Result<(FiniteMatrixGroup, Vec<usize>)> {
        if !self.is_subgroup(indices) {
            return Err(Error::NotASubgroup);
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // greedy generating set in index order
        let mut gens: Vec<usize> = Vec::new();
        let mut span = vec![0usize];
        for &x in &sorted {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated_subgroup(&gens);
            }
        }
        if gens.is_empty() {
            gens.push(0);
        }
        let mats: Vec<Mat2> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        let sub = FiniteMatrixGroup::closure(&mats, sorted.len().max(1) + 1)?;
        let sub_to_self = sub
            .elements
            .iter()
            .map(|e| self.index_of(e).ok_or(Error::NotMember))
            .collect::<Result<Vec<_>>>()?;
        Ok((sub, sub_to_self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Cyclotomic;

    fn quaternion_gens() -> Vec<Mat2> {
        let zero = Cyclotomic::zero(4).unwrap();
        let one = Cyclotomic::one(4).unwrap();
        vec![
            Mat2::diagonal_root(4, 1).unwrap(),
            Mat2::new(zero.clone(), one.clone(), -&one, zero).unwrap(),
        ]
    }

    #[test]
    fn cyclic_of_order_three() {
        let g = FiniteMatrixGroup::closure(&[Mat2::diagonal_root(3, 1).unwrap()], DEFAULT_CAP).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.exponent(), 3);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn quaternion_group_is_closed() {
        let g = FiniteMatrixGroup::closure(&quaternion_gens(), DEFAULT_CAP).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.exponent(), 4);
        for a in 0..8 {
            assert_eq!(g.inv(g.inv(a)), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..8 {
                let prod = g.element(a) * g.element(b);
                assert_eq!(g.index_of(&prod), Some(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn word_multiplication_matches_table() {
        let mut g = FiniteMatrixGroup::closure(&quaternion_gens(), DEFAULT_CAP).unwrap();
        let table: Vec<usize> = (0..64).map(|i| g.mul(i / 8, i % 8)).collect();
        g.table = None;
        let words: Vec<usize> = (0..64).map(|i| g.mul(i / 8, i % 8)).collect();
        assert_eq!(table, words);
    }

    #[test]
    fn exponent_extends_the_field() {
        // entries in Q, but -1 itself forces nothing; a 3-cycle with
        // rational entries needs zeta_3 for its eigenvalues
        let one = Cyclotomic::one(1).unwrap();
        let zero = Cyclotomic::zero(1).unwrap();
        let r = Mat2::new(zero, -&one, one.clone(), -&one).unwrap();
        let g = FiniteMatrixGroup::closure(&[r], DEFAULT_CAP).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.field_order(), 3);
    }

    #[test]
    fn errors() {
        let two = Cyclotomic::from_integer(1, 2).unwrap();
        let zero = Cyclotomic::zero(1).unwrap();
        let half = Cyclotomic::from_rational(1, &crate::exact_arith::rational(1, 2)).unwrap();
        let bad = Mat2::new(two.clone(), zero.clone(), zero.clone(), two.clone()).unwrap();
        assert!(matches!(
            FiniteMatrixGroup::closure(&[bad], DEFAULT_CAP),
            Err(Error::NonUnimodular { index: 0 })
        ));
        // infinite order unimodular matrix
        let shear = Mat2::new(
            Cyclotomic::one(1).unwrap(),
            Cyclotomic::one(1).unwrap(),
            zero.clone(),
            Cyclotomic::one(1).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            FiniteMatrixGroup::closure(&[shear], 50),
            Err(Error::ClosureCapExceeded { cap: 50 })
        ));
        let diag = Mat2::new(two, zero.clone(), zero, half).unwrap();
        assert!(FiniteMatrixGroup::closure(&[diag], 50).is_err());
        assert!(matches!(FiniteMatrixGroup::closure(&[], 50), Err(Error::NoGenerators)));
    }

    #[test]
    fn subgroup_extraction() {
        let g = FiniteMatrixGroup::closure(&quaternion_gens(), DEFAULT_CAP).unwrap();
        let i = g.generators()[0];
        let c4 = g.generated_subgroup(&[i]);
        assert_eq!(c4.len(), 4);
        assert!(g.is_subgroup(&c4));
        let (h, emb) = g.subgroup(&c4).unwrap();
        assert_eq!(h.len(), 4);
        let mut e = emb.clone();
        e.sort();
        assert_eq!(e, c4);
        assert!(!g.is_subgroup(&[0, i]));
        assert!(matches!(g.subgroup(&[0, i]), Err(Error::NotASubgroup)));
    }
}
