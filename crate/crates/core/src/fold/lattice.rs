use crate::chars::{conjugation_permutation, CharacterTable, ClassFunction};
use crate::exact_arith::linalg::IntMatrix;
use crate::group::NormalPair;
use crate::mckay::intersection_matrix_b;
use crate::{Error, Result};

/// The lattice spanned by the exceptional curves `E_tau`, `tau` nontrivial,
/// with its intersection form and one basis permutation per coset of `H`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    labels: Vec<usize>,
    pairing: IntMatrix,
    action: Vec<Vec<usize>>,
    orbits: Vec<Vec<usize>>,
}

impl IntersectionLattice {
    /// `labels[i]` is the character-table index behind basis vector `i`.
    pub fn new(labels: Vec<usize>, pairing: IntMatrix, action: Vec<Vec<usize>>) -> Result<Self> {
        let r = labels.len();
        if pairing.len() != r || pairing.iter().any(|row| row.len() != r) {
            return Err(Error::Parse("pairing does not match the basis".into()));
        }
        if action.is_empty() {
            return Err(Error::Parse("action needs at least the identity".into()));
        }
        for sigma in &action {
            let mut seen = vec![false; r];
            if sigma.len() != r || !sigma.iter().all(|&x| x < r && !std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Parse("action entry is not a permutation".into()));
            }
        }
        let mut orbit_of = vec![usize::MAX; r];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..r {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            // closing under the listed permutations gives the orbit even when
            // they only generate the action
            let mut orbit = vec![start];
            orbit_of[start] = orbits.len();
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for sigma in &action {
                    let y = sigma[x];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = orbits.len();
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(IntersectionLattice {
            labels,
            pairing,
            action,
            orbits,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// Number of listed permutations, one per coset.
    pub fn quotient_order(&self) -> usize {
        self.action.len()
    }

    /// Orbits in basis positions, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// `B[s(i)][s(j)] == B[i][j]` for every listed permutation.
    pub fn preserves_pairing(&self) -> bool {
        let b = &self.pairing;
        self.action
            .iter()
            .all(|s| (0..self.len()).all(|i| (0..self.len()).all(|j| b[s[i]][s[j]] == b[i][j])))
    }
}

/// Pairing from the characters of `H`, action by conjugating characters
/// with each coset representative.
pub fn lattice_from_characters(
    pair: &NormalPair,
    table_h: &CharacterTable,
    chi_nat_h: &ClassFunction,
) -> Result<IntersectionLattice> {
    let b = intersection_matrix_b(table_h, chi_nat_h)?;
    let labels: Vec<usize> = table_h.nontrivial().collect();
    let action = pair
        .coset_reps()
        .iter()
        .map(|&g| {
            let perm = conjugation_permutation(pair, table_h, g)?;
            if perm[0] != 0 {
                return Err(Error::Dixon("conjugation moved the trivial character".into()));
            }
            Ok(labels.iter().map(|&i| perm[i] - 1).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    IntersectionLattice::new(labels, b, action)
}
