use std::collections::BTreeSet;
use std::sync::Arc;

use super::{conjugacy_classes, ClassData, FiniteMatrixGroup, Mat2};
use crate::{Error, Result};

/// `gHg^-1 = H` for every generator `g`; errors if `h` is not a subgroup.
pub fn is_normal_subgroup(g: &FiniteMatrixGroup, h: &[usize]) -> Result<bool> {
    if !g.is_subgroup(h) {
        return Err(Error::NotASubgroup);
    }
    let mut member = vec![false; g.len()];
    for &x in h {
        member[x] = true;
    }
    Ok(g.generators()
        .iter()
        .all(|&s| h.iter().all(|&x| member[g.conjugate(s, x)])))
}

/// A normal subgroup `H` of `G` together with the quotient `G/H`, given by
/// coset representatives and a multiplication table.
#[derive(Debug, Clone)]
pub struct NormalPair {
    g: Arc<FiniteMatrixGroup>,
    h: Arc<FiniteMatrixGroup>,
    g_classes: Arc<ClassData>,
    h_classes: Arc<ClassData>,
    h_indices: Vec<usize>,
    h_to_g: Vec<usize>,
    g_to_h: Vec<Option<usize>>,
    coset_reps: Vec<usize>,
    coset_of: Vec<usize>,
    quotient_mult: Vec<Vec<usize>>,
}

impl NormalPair {
    pub fn g(&self) -> &Arc<FiniteMatrixGroup> {
        &self.g
    }

    pub fn h(&self) -> &Arc<FiniteMatrixGroup> {
        &self.h
    }

    pub fn g_classes(&self) -> &Arc<ClassData> {
        &self.g_classes
    }

    pub fn h_classes(&self) -> &Arc<ClassData> {
        &self.h_classes
    }

    /// Sorted indices of `H` inside `G`.
    pub fn h_indices(&self) -> &[usize] {
        &self.h_indices
    }

    /// Index in `G` of element `i` of `H`.
    pub fn h_to_g(&self, i: usize) -> usize {
        self.h_to_g[i]
    }

    pub fn g_to_h(&self, x: usize) -> Option<usize> {
        self.g_to_h[x]
    }

    /// `n = |G/H|`.
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn quotient_mult(&self) -> &[Vec<usize>] {
        &self.quotient_mult
    }

    /// Element of `H` obtained by conjugating `H`-element `h` with the
    /// `G`-element `x`: `x h x^-1`.
    pub fn conjugate_in_h(&self, x: usize, h: usize) -> Result<usize> {
        let y = self.g.conjugate(x, self.h_to_g[h]);
        self.g_to_h[y].ok_or(Error::NotNormal)
    }
}

pub fn normal_pair(g: Arc<FiniteMatrixGroup>, h_indices: &[usize]) -> Result<NormalPair> {
    if !is_normal_subgroup(&g, h_indices)? {
        return Err(Error::NotNormal);
    }
    let mut h_sorted = h_indices.to_vec();
    h_sorted.sort_unstable();
    h_sorted.dedup();
    let (h, h_to_g) = g.subgroup(&h_sorted)?;
    let mut g_to_h = vec![None; g.len()];
    for (i, &x) in h_to_g.iter().enumerate() {
        g_to_h[x] = Some(i);
    }

    let mut coset_of = vec![usize::MAX; g.len()];
    let mut coset_reps = Vec::new();
    for x in 0..g.len() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = coset_reps.len();
        coset_reps.push(x);
        for &y in &h_sorted {
            coset_of[g.mul(x, y)] = c;
        }
    }
    let quotient_mult = coset_reps
        .iter()
        .map(|&a| coset_reps.iter().map(|&b| coset_of[g.mul(a, b)]).collect())
        .collect();

    let g_classes = Arc::new(conjugacy_classes(&g));
    let h_classes = Arc::new(conjugacy_classes(&h));
    Ok(NormalPair {
        g,
        h: Arc::new(h),
        g_classes,
        h_classes,
        h_indices: h_sorted,
        h_to_g,
        g_to_h,
        coset_reps,
        coset_of,
        quotient_mult,
    })
}

/// Locates the subgroup generated by the given matrices inside `G`.
pub fn subgroup_from_generators(g: &FiniteMatrixGroup, generators: &[Mat2]) -> Result<Vec<usize>> {
    let seeds = generators
        .iter()
        .map(|m| g.index_of(m).ok_or(Error::NotMember))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.generated_subgroup(&seeds))
}

/// All normal subgroups, ordered by size and then by element indices.
///
/// Every normal subgroup is a join of normal closures of conjugacy classes,
/// so the lattice is explored by repeatedly joining found subgroups with
/// classes.
pub fn normal_subgroups(g: &FiniteMatrixGroup) -> Vec<Vec<usize>> {
    let cls = conjugacy_classes(g);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![0usize];
    found.insert(trivial.clone());
    let mut stack = vec![trivial];
    while let Some(n) = stack.pop() {
        let mut member = vec![false; g.len()];
        for &x in &n {
            member[x] = true;
        }
        for class in cls.classes() {
            if member[class[0]] {
                continue;
            }
            let mut seeds = n.clone();
            seeds.extend_from_slice(class);
            let joined = g.generated_subgroup(&seeds);
            if found.insert(joined.clone()) {
                stack.push(joined);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Cyclotomic;
    use crate::group::DEFAULT_CAP;

    fn q8() -> Arc<FiniteMatrixGroup> {
        let zero = Cyclotomic::zero(4).unwrap();
        let one = Cyclotomic::one(4).unwrap();
        Arc::new(
            FiniteMatrixGroup::closure(
                &[
                    Mat2::diagonal_root(4, 1).unwrap(),
                    Mat2::new(zero.clone(), one.clone(), -&one, zero).unwrap(),
                ],
                DEFAULT_CAP,
            )
            .unwrap(),
        )
    }

    #[test]
    fn center_and_index_two_are_normal() {
        let g = q8();
        let minus_one = g.pow(g.generators()[0], 2);
        assert!(is_normal_subgroup(&g, &[0, minus_one]).unwrap());
        let c4 = g.generated_subgroup(&[g.generators()[0]]);
        assert!(is_normal_subgroup(&g, &c4).unwrap());
        assert!(is_normal_subgroup(&g, &[0, g.generators()[0]]).is_err());
    }

    #[test]
    fn quotient_of_q8_by_c4() {
        let g = q8();
        let c4 = g.generated_subgroup(&[g.generators()[0]]);
        let pair = normal_pair(g.clone(), &c4).unwrap();
        assert_eq!(pair.index(), 2);
        assert_eq!(pair.coset_reps()[0], 0);
        assert_eq!(pair.quotient_mult(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn normal_subgroups_of_cyclic_and_quaternion() {
        let c4 = FiniteMatrixGroup::closure(&[Mat2::diagonal_root(4, 1).unwrap()], DEFAULT_CAP).unwrap();
        let sizes: Vec<usize> = normal_subgroups(&c4).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 4]);

        let g = q8();
        let sizes: Vec<usize> = normal_subgroups(&g).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4, 8]);
    }
}
