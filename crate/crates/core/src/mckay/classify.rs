use std::fmt;

use serde::{Serialize, Serializer};

use crate::exact_arith::linalg::{transpose, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.letter())
    }
}

/// A Dynkin type. For affine types `rank` is the rank of the underlying
/// finite type, so the matrix has `rank + 1` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
    pub affine: bool,
}

impl DynkinType {
    pub fn finite(family: Family, rank: usize) -> Self {
        DynkinType {
            family,
            rank,
            affine: false,
        }
    }

    pub fn affine(family: Family, rank: usize) -> Self {
        DynkinType {
            family,
            rank,
            affine: true,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.rank + usize::from(self.affine)
    }

    /// Parses `"E6"`, `"B3"`, `"A3^(1)"`.
    pub fn parse(s: &str) -> Option<Self> {
        let (body, affine) = match s.strip_suffix("^(1)") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let mut chars = body.chars();
        let family = Family::from_letter(chars.next()?)?;
        let rank: usize = chars.as_str().parse().ok()?;
        let t = DynkinType { family, rank, affine };
        t.matrix().map(|_| t)
    }

    /// The standard Cartan matrix in the row convention: `M[i][j] = -2`
    /// means node `i` is the shorter root of a double edge.
    pub fn matrix(&self) -> Option<IntMatrix> {
        let r = self.rank;
        if self.affine {
            affine_matrix(self.family, r)
        } else {
            finite_matrix(self.family, r)
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)?;
        if self.affine {
            write!(f, "^(1)")?;
        }
        Ok(())
    }
}

fn chain(n: usize) -> IntMatrix {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn link(m: &mut IntMatrix, i: usize, j: usize) {
    m[i][j] = -1;
    m[j][i] = -1;
}

/// Appends a node joined by a simple edge to `at`.
fn grow(m: &IntMatrix, at: usize) -> IntMatrix {
    let n = m.len();
    let mut out: IntMatrix = m
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.push(0);
            r
        })
        .collect();
    let mut last = vec![0; n + 1];
    last[n] = 2;
    out.push(last);
    link(&mut out, n, at);
    out
}

fn finite_matrix(family: Family, r: usize) -> Option<IntMatrix> {
    let m = match family {
        Family::A if r >= 1 => chain(r),
        Family::B if r >= 2 => {
            let mut m = chain(r);
            m[r - 1][r - 2] = -2;
            m
        }
        Family::C if r >= 2 => {
            let mut m = chain(r);
            m[r - 2][r - 1] = -2;
            m
        }
        // chain 0..r-2 with the last node on r-3
        Family::D if r >= 4 => grow(&chain(r - 1), r - 3),
        // chain of length r-1 with the extra node on the third
        Family::E if (6..=8).contains(&r) => grow(&chain(r - 1), 2),
        Family::F if r == 4 => {
            let mut m = chain(4);
            m[1][2] = -2;
            m
        }
        Family::G if r == 2 => vec![vec![2, -1], vec![-3, 2]],
        _ => return None,
    };
    Some(m)
}

fn affine_matrix(family: Family, r: usize) -> Option<IntMatrix> {
    let m = match family {
        Family::A if r == 1 => vec![vec![2, -2], vec![-2, 2]],
        Family::A if r >= 2 => {
            let mut m = chain(r + 1);
            link(&mut m, 0, r);
            m
        }
        Family::D if r >= 4 => grow(&finite_matrix(Family::D, r)?, 1),
        Family::E if r == 6 => {
            // the branch node of E6 is 5, hanging off 2; extend it
            grow(&finite_matrix(Family::E, 6)?, 5)
        }
        Family::E if r == 7 => grow(&finite_matrix(Family::E, 7)?, 0),
        Family::E if r == 8 => grow(&finite_matrix(Family::E, 8)?, 6),
        _ => return None,
    };
    Some(m)
}

/// The candidate types with a given number of nodes, in search order.
fn candidates(size: usize) -> Vec<DynkinType> {
    let mut out = Vec::new();
    let finite = [(Family::A, 1), (Family::B, 2), (Family::C, 3), (Family::D, 4)];
    for (f, min) in finite {
        if size >= min {
            out.push(DynkinType::finite(f, size));
        }
    }
    if (6..=8).contains(&size) {
        out.push(DynkinType::finite(Family::E, size));
    }
    if size == 4 {
        out.push(DynkinType::finite(Family::F, 4));
    }
    if size == 2 {
        out.push(DynkinType::finite(Family::G, 2));
    }
    if size >= 2 {
        out.push(DynkinType::affine(Family::A, size - 1));
    }
    if size >= 5 {
        out.push(DynkinType::affine(Family::D, size - 1));
    }
    if (7..=9).contains(&size) {
        out.push(DynkinType::affine(Family::E, size - 1));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CartanKind {
    Finite,
    Affine,
    Unknown,
}

/// Outcome of matching a matrix against the Dynkin catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: CartanKind,
    pub dynkin: Option<DynkinType>,
    /// `permutation[i]` is the catalog node matched by row `i`, so
    /// `M[i][j] == T[p[i]][p[j]]`.
    pub permutation: Option<Vec<usize>>,
    /// Type of the transpose; differs from `dynkin` only for `B_n`/`C_n`,
    /// `n >= 3`.
    pub transpose: Option<DynkinType>,
}

impl Classification {
    fn unknown() -> Self {
        Classification {
            kind: CartanKind::Unknown,
            dynkin: None,
            permutation: None,
            transpose: None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind == CartanKind::Finite
    }

    /// `["B", "C"]` when the type sits in the B/C family, else the letter.
    pub fn family_pair(&self) -> Vec<Family> {
        let mut out: Vec<Family> = self.dynkin.iter().map(|t| t.family).collect();
        if let Some(t) = self.dynkin {
            if matches!(t.family, Family::B | Family::C) {
                out = vec![Family::B, Family::C];
            }
        }
        out
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: CartanKind,
            name: Option<String>,
            family: Option<Family>,
            rank: Option<usize>,
            families: Vec<Family>,
            permutation: &'a Option<Vec<usize>>,
            transpose: Option<String>,
        }
        Repr {
            kind: self.kind,
            name: self.dynkin.map(|t| t.to_string()),
            family: self.dynkin.map(|t| t.family),
            rank: self.dynkin.map(|t| t.rank),
            families: self.family_pair(),
            permutation: &self.permutation,
            transpose: self.transpose.map(|t| t.to_string()),
        }
        .serialize(s)
    }
}

/// Diagonal 2, nonpositive off-diagonal, symmetric zero pattern.
pub fn is_cartan_shape(m: &IntMatrix) -> bool {
    let n = m.len();
    (0..n).all(|i| {
        m[i].len() == n && m[i][i] == 2 && (0..n).all(|j| i == j || (m[i][j] <= 0 && (m[i][j] == 0) == (m[j][i] == 0)))
    })
}

fn signature(m: &IntMatrix, i: usize) -> (Vec<i64>, Vec<i64>) {
    let mut row = m[i].clone();
    let mut col: Vec<i64> = m.iter().map(|r| r[i]).collect();
    row.sort_unstable();
    col.sort_unstable();
    (row, col)
}

/// Finds `p` with `m[i][j] == t[p[i]][p[j]]` by backtracking over rows,
/// pruning on sorted row and column contents.
pub fn match_permutation(m: &IntMatrix, t: &IntMatrix) -> Option<Vec<usize>> {
    let n = m.len();
    if t.len() != n {
        return None;
    }
    let sig_m: Vec<_> = (0..n).map(|i| signature(m, i)).collect();
    let sig_t: Vec<_> = (0..n).map(|i| signature(t, i)).collect();
    let mut p = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        m: &IntMatrix,
        t: &IntMatrix,
        sig_m: &[(Vec<i64>, Vec<i64>)],
        sig_t: &[(Vec<i64>, Vec<i64>)],
        p: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = m.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sig_m[i] != sig_t[cand] {
                continue;
            }
            let ok = (0..i).all(|j| m[i][j] == t[cand][p[j]] && m[j][i] == t[p[j]][cand]);
            if !ok {
                continue;
            }
            p[i] = cand;
            used[cand] = true;
            if go(i + 1, m, t, sig_m, sig_t, p, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    go(0, m, t, &sig_m, &sig_t, &mut p, &mut used).then_some(p)
}

fn find_type(m: &IntMatrix) -> Option<(DynkinType, Vec<usize>)> {
    candidates(m.len()).into_iter().find_map(|t| {
        let reference = t.matrix()?;
        match_permutation(m, &reference).map(|p| (t, p))
    })
}

/// Matches `m` against the finite and affine Dynkin catalogs. Anything
/// without Cartan shape, or without a match, is `Unknown`.
pub fn classify_cartan(m: &IntMatrix) -> Classification {
    if m.is_empty() || !is_cartan_shape(m) {
        return Classification::unknown();
    }
    let Some((t, p)) = find_type(m) else {
        return Classification::unknown();
    };
    let transpose = find_type(&transpose(m)).map(|(t, _)| t);
    Classification {
        kind: if t.affine {
            CartanKind::Affine
        } else {
            CartanKind::Finite
        },
        dynkin: Some(t),
        permutation: Some(p),
        transpose,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(f: Family, r: usize) -> DynkinType {
        DynkinType::finite(f, r)
    }

    #[test]
    fn a1() {
        let c = classify_cartan(&vec![vec![2]]);
        assert_eq!(c.dynkin, Some(finite(Family::A, 1)));
        assert_eq!(c.permutation, Some(vec![0]));
    }

    #[test]
    fn g2_and_its_transpose() {
        let m = vec![vec![2, -1], vec![-3, 2]];
        let c = classify_cartan(&m);
        assert_eq!(c.dynkin, Some(finite(Family::G, 2)));
        assert_eq!(c.transpose, Some(finite(Family::G, 2)));
        let t = classify_cartan(&transpose(&m));
        assert_eq!(t.dynkin, Some(finite(Family::G, 2)));
        assert_eq!(t.permutation, Some(vec![1, 0]));
    }

    #[test]
    fn b_and_c_are_transposes() {
        let b3 = finite(Family::B, 3).matrix().unwrap();
        let c = classify_cartan(&b3);
        assert_eq!(c.dynkin, Some(finite(Family::B, 3)));
        assert_eq!(c.transpose, Some(finite(Family::C, 3)));
        assert_eq!(c.family_pair(), vec![Family::B, Family::C]);
        let c2 = classify_cartan(&vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(c2.dynkin, Some(finite(Family::B, 2)));
    }

    #[test]
    fn shuffled_e8() {
        let e8 = finite(Family::E, 8).matrix().unwrap();
        let perm = [5, 2, 7, 0, 3, 1, 6, 4];
        let shuffled: IntMatrix = (0..8).map(|i| (0..8).map(|j| e8[perm[i]][perm[j]]).collect()).collect();
        let c = classify_cartan(&shuffled);
        assert_eq!(c.dynkin, Some(finite(Family::E, 8)));
        let p = c.permutation.unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(shuffled[i][j], e8[p[i]][p[j]]);
            }
        }
    }

    #[test]
    fn affine_types() {
        for t in [
            DynkinType::affine(Family::A, 1),
            DynkinType::affine(Family::A, 5),
            DynkinType::affine(Family::D, 4),
            DynkinType::affine(Family::D, 7),
            DynkinType::affine(Family::E, 6),
            DynkinType::affine(Family::E, 7),
            DynkinType::affine(Family::E, 8),
        ] {
            let c = classify_cartan(&t.matrix().unwrap());
            assert_eq!(c.dynkin, Some(t), "{t}");
            assert_eq!(c.kind, CartanKind::Affine);
        }
    }

    #[test]
    fn every_finite_type_has_positive_determinant() {
        use crate::exact_arith::linalg::determinant;
        for size in 1..=10 {
            for t in candidates(size).into_iter().filter(|t| !t.affine) {
                let d = determinant(&t.matrix().unwrap());
                assert!(d > 0.into(), "{t}");
            }
            for t in candidates(size).into_iter().filter(|t| t.affine) {
                assert_eq!(determinant(&t.matrix().unwrap()), 0.into(), "{t}");
            }
        }
    }

    #[test]
    fn non_cartan_is_unknown() {
        assert_eq!(classify_cartan(&vec![vec![1]]).kind, CartanKind::Unknown);
        assert_eq!(
            classify_cartan(&vec![vec![2, -1], vec![0, 2]]).kind,
            CartanKind::Unknown
        );
        // a triangle with a double edge is Cartan-shaped but in no catalog
        let m = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(classify_cartan(&m).kind, CartanKind::Unknown);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["A1", "B2", "C5", "D4", "E8", "F4", "G2", "A3^(1)", "E6^(1)"] {
            assert_eq!(DynkinType::parse(s).unwrap().to_string(), s);
        }
        assert!(DynkinType::parse("E9").is_none());
        assert!(DynkinType::parse("D3").is_none());
    }
}
