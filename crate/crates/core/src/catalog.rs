//! The finite subgroups of `SL2(C)` shipped with the crate and the normal
//! pairs between them.
//!
//! `BD:N` is the binary dihedral group of order `N` (so `BD:8` is the
//! quaternion group `Q8`).

use std::sync::Arc;

use crate::chars::GroupCharacters;
use crate::exact_arith::{rational, Cyclotomic};
use crate::group::{
    conjugacy_classes, normal_pair, normal_subgroups, subgroup_from_generators, FiniteMatrixGroup, Mat2, NormalPair,
    DEFAULT_CAP,
};
use crate::mckay::{DynkinType, Family};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Cyclic(u32),
    BinaryDihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

/// A named group with generators and the data it must reproduce.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub generators: Vec<Mat2>,
    pub expected_order: usize,
    pub expected_classes: usize,
    /// Type of `2I - A` over the nontrivial irreducibles.
    pub expected_type: DynkinType,
}

fn parse_name(name: &str) -> Result<Kind> {
    let unknown = || Error::UnknownCatalogName(name.to_string());
    let upper = name.trim().to_ascii_uppercase();
    let kind = match upper.as_str() {
        "Q8" => Kind::BinaryDihedral(8),
        "2T" => Kind::Tetrahedral,
        "2O" => Kind::Octahedral,
        "2I" => Kind::Icosahedral,
        s => {
            let (kind, rest) = if let Some(rest) = s.strip_prefix("BD") {
                (Kind::BinaryDihedral as fn(u32) -> Kind, rest)
            } else if let Some(rest) = s.strip_prefix('C') {
                (Kind::Cyclic as fn(u32) -> Kind, rest)
            } else {
                return Err(unknown());
            };
            let rest = rest.strip_prefix(':').unwrap_or(rest);
            let k: u32 = rest.parse().map_err(|_| unknown())?;
            kind(k)
        }
    };
    match kind {
        Kind::Cyclic(n) if !(2..=crate::exact_arith::MAX_ORDER).contains(&n) => Err(unknown()),
        Kind::BinaryDihedral(n) if n < 8 || n % 4 != 0 || n / 2 > crate::exact_arith::MAX_ORDER => Err(unknown()),
        k => Ok(k),
    }
}

fn canonical_name(kind: Kind) -> String {
    match kind {
        Kind::Cyclic(n) => format!("C:{n}"),
        Kind::BinaryDihedral(n) => format!("BD:{n}"),
        Kind::Tetrahedral => "2T".into(),
        Kind::Octahedral => "2O".into(),
        Kind::Icosahedral => "2I".into(),
    }
}

fn int(m: u32, n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(m, n).expect("supported order")
}

/// `[[0, 1], [-1, 0]]`, the quaternion `j`.
fn quaternion_j() -> Mat2 {
    Mat2::new(int(4, 0), int(4, 1), int(4, -1), int(4, 0)).expect("valid entries")
}

/// `(1 + i + j + k) / 2`.
fn tetrahedral_generator() -> Mat2 {
    let half = rational(1, 2);
    let i = Cyclotomic::root_of_unity(4, 1).unwrap();
    let one = int(4, 1);
    let a = (&one + &i).scale(&half);
    let c = (&i - &one).scale(&half);
    let d = (&one - &i).scale(&half);
    Mat2::new(a.clone(), a, c, d).expect("valid entries")
}

/// The icosian `(phi^-1 + phi i + j) / 2` with `phi = -z5^2 - z5^3`.
fn icosahedral_generator() -> Mat2 {
    let m = 20;
    let half = rational(1, 2);
    let z5 = |k| Cyclotomic::root_of_unity(5, k).unwrap().embed(m).unwrap();
    let phi = -&(&z5(2) + &z5(3));
    let phi_inv = &phi - &int(m, 1);
    let i = Cyclotomic::root_of_unity(4, 1).unwrap().embed(m).unwrap();
    let phi_i = &phi * &i;
    let a = (&phi_inv + &phi_i).scale(&half);
    let d = (&phi_inv - &phi_i).scale(&half);
    Mat2::new(a, int(m, 1).scale(&half), int(m, -1).scale(&half), d).expect("valid entries")
}

fn entry_for(kind: Kind) -> CatalogEntry {
    let i_gen = Mat2::diagonal_root(4, 1).expect("valid order");
    let (generators, order, classes, ty) = match kind {
        Kind::Cyclic(n) => (
            vec![Mat2::diagonal_root(n, 1).expect("valid order")],
            n as usize,
            n as usize,
            DynkinType::finite(Family::A, n as usize - 1),
        ),
        Kind::BinaryDihedral(order) => {
            let n = order / 4;
            (
                vec![Mat2::diagonal_root(2 * n, 1).expect("valid order"), quaternion_j()],
                order as usize,
                n as usize + 3,
                DynkinType::finite(Family::D, n as usize + 2),
            )
        }
        Kind::Tetrahedral => (
            vec![i_gen, tetrahedral_generator()],
            24,
            7,
            DynkinType::finite(Family::E, 6),
        ),
        Kind::Octahedral => (
            vec![
                i_gen,
                tetrahedral_generator(),
                Mat2::diagonal_root(8, 1).expect("valid order"),
            ],
            48,
            8,
            DynkinType::finite(Family::E, 7),
        ),
        Kind::Icosahedral => (
            vec![i_gen, icosahedral_generator()],
            120,
            9,
            DynkinType::finite(Family::E, 8),
        ),
    };
    CatalogEntry {
        name: canonical_name(kind),
        generators,
        expected_order: order,
        expected_classes: classes,
        expected_type: ty,
    }
}

/// Looks up a catalog entry by name (`C:6`, `BD:12`, `Q8`, `2T`, ...).
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    parse_name(name).map(entry_for)
}

/// Canonical spelling of a catalog name.
pub fn canonical(name: &str) -> Result<String> {
    parse_name(name).map(canonical_name)
}

impl CatalogEntry {
    /// Closes the generators and checks order and class count.
    pub fn build(&self) -> Result<FiniteMatrixGroup> {
        let g = FiniteMatrixGroup::closure(&self.generators, DEFAULT_CAP)?;
        let fail = |reason: String| Error::CatalogValidation {
            name: self.name.clone(),
            reason,
        };
        if g.len() != self.expected_order {
            return Err(fail(format!("order {} instead of {}", g.len(), self.expected_order)));
        }
        let classes = conjugacy_classes(&g).len();
        if classes != self.expected_classes {
            return Err(fail(format!("{classes} classes instead of {}", self.expected_classes)));
        }
        Ok(g)
    }
}

pub fn build_catalog_group(name: &str) -> Result<FiniteMatrixGroup> {
    catalog_entry(name)?.build()
}

/// The groups checked by `verify-all`: `C:2..C:12`, `BD:8..BD:24`, `2T`,
/// `2O`, `2I`.
pub fn shipped_groups() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (2..=12).map(|n| entry_for(Kind::Cyclic(n))).collect();
    out.extend((2..=6).map(|n| entry_for(Kind::BinaryDihedral(4 * n))));
    out.extend([Kind::Tetrahedral, Kind::Octahedral, Kind::Icosahedral].map(entry_for));
    out
}

/// What the fold of a pair must produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    /// `2I - C` has one of these finite types (both members of the B/C
    /// family for a B/C fold).
    Types(Vec<DynkinType>),
    /// No expectation on `2I - C` beyond the fold identities.
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSource {
    Standard,
    Discovered,
}

/// A normal pair `H <= G`, with `H` given by generators inside `G`.
#[derive(Clone, Debug)]
pub struct PairEntry {
    pub g: String,
    pub h: String,
    pub h_generators: Vec<Mat2>,
    pub expected: Expected,
    pub source: PairSource,
}

impl PairEntry {
    pub fn label(&self) -> String {
        format!("{} > {}", self.g, self.h)
    }
}

fn bc(rank: usize) -> Expected {
    Expected::Types(vec![
        DynkinType::finite(Family::B, rank),
        DynkinType::finite(Family::C, rank),
    ])
}

/// The folds to BCFG: `BD:4n > C:2n` (`n = 2..6`), `BD:8n > BD:4n`
/// (`n = 2, 3`), `2T > Q8`, `2O > 2T`.
pub fn standard_pairs() -> Vec<PairEntry> {
    let mut out = Vec::new();
    for n in 2..=6u32 {
        out.push(PairEntry {
            g: format!("BD:{}", 4 * n),
            h: format!("C:{}", 2 * n),
            h_generators: entry_for(Kind::Cyclic(2 * n)).generators,
            expected: bc(n as usize),
            source: PairSource::Standard,
        });
    }
    for n in 2..=3u32 {
        out.push(PairEntry {
            g: format!("BD:{}", 8 * n),
            h: format!("BD:{}", 4 * n),
            h_generators: entry_for(Kind::BinaryDihedral(4 * n)).generators,
            expected: bc(n as usize + 1),
            source: PairSource::Standard,
        });
    }
    out.push(PairEntry {
        g: "2T".into(),
        h: "BD:8".into(),
        h_generators: entry_for(Kind::BinaryDihedral(8)).generators,
        expected: Expected::Types(vec![DynkinType::finite(Family::G, 2)]),
        source: PairSource::Standard,
    });
    out.push(PairEntry {
        g: "2O".into(),
        h: "2T".into(),
        h_generators: entry_for(Kind::Tetrahedral).generators,
        expected: Expected::Types(vec![DynkinType::finite(Family::F, 4)]),
        source: PairSource::Standard,
    });
    out
}

/// Names a subgroup of `SL2(C)` by its isomorphism type.
fn subgroup_name(g: &FiniteMatrixGroup, h: &[usize]) -> String {
    let order = h.len();
    let max_order = h.iter().map(|&x| g.element_order(x) as usize).max().unwrap_or(1);
    let abelian = h.iter().all(|&x| h.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    if abelian {
        // finite abelian subgroups of SL2 are cyclic
        format!("C:{order}")
    } else if max_order * 2 == order {
        format!("BD:{order}")
    } else {
        match order {
            24 => "2T".into(),
            48 => "2O".into(),
            _ => "2I".into(),
        }
    }
}

/// Every nontrivial normal subgroup of every shipped group, as pairs named
/// `G > H`. Names that repeat within one group get `#k` suffixes.
pub fn discovered_pairs() -> Result<Vec<PairEntry>> {
    let mut out = Vec::new();
    for entry in shipped_groups() {
        let g = entry.build()?;
        let subgroups: Vec<Vec<usize>> = normal_subgroups(&g).into_iter().filter(|h| h.len() > 1).collect();
        let names: Vec<String> = subgroups.iter().map(|h| subgroup_name(&g, h)).collect();
        let mut seen: std::collections::BTreeMap<&str, usize> = Default::default();
        for (h, name) in subgroups.iter().zip(&names) {
            let repeats = names.iter().filter(|n| *n == name).count();
            let label = if repeats > 1 {
                let k = seen.entry(name).or_default();
                *k += 1;
                format!("{name}#{}", *k - 1)
            } else {
                name.clone()
            };
            let (sub, _) = g.subgroup(h)?;
            let gens = sub.generators().iter().map(|&x| sub.element(x).clone()).collect();
            out.push(PairEntry {
                g: entry.name.clone(),
                h: label,
                h_generators: gens,
                expected: Expected::Any,
                source: PairSource::Discovered,
            });
        }
    }
    Ok(out)
}

/// Standard pairs followed by the discovered pairs that are not already
/// standard.
pub fn all_pairs() -> Result<Vec<PairEntry>> {
    let standard = standard_pairs();
    let mut keys = Vec::new();
    for p in &standard {
        let g = build_catalog_group(&p.g)?;
        keys.push((p.g.clone(), subgroup_from_generators(&g, &p.h_generators)?));
    }
    let mut out = standard;
    for p in discovered_pairs()? {
        let g = build_catalog_group(&p.g)?;
        let key = (p.g.clone(), subgroup_from_generators(&g, &p.h_generators)?);
        if !keys.contains(&key) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Groups, pair and characters of both sides, ready for `verify_pair`.
pub struct PairData {
    pub pair: NormalPair,
    pub g: GroupCharacters,
    pub h: GroupCharacters,
}

/// Builds `H` inside `G` from generators, checking membership and
/// normality.
pub fn pair_data(g: Arc<FiniteMatrixGroup>, h_generators: &[Mat2]) -> Result<PairData> {
    let h_indices = subgroup_from_generators(&g, h_generators)?;
    let pair = normal_pair(g, &h_indices)?;
    let gc = GroupCharacters::new(pair.g().clone(), pair.g_classes().clone())?;
    let hc = GroupCharacters::new(pair.h().clone(), pair.h_classes().clone())?;
    Ok(PairData { pair, g: gc, h: hc })
}
