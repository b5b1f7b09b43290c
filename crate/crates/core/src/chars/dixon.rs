//! Dixon's character table algorithm.
//!
//! The central characters `omega_chi(C_k) = |C_k| chi(g_k) / chi(1)` are the
//! common eigenvectors of the class-sum matrices. Over `GF(p)` with
//! `p = 1 mod m` these split completely, so the table is found by refining
//! eigenspaces one class matrix at a time and lifting the modular values
//! back to `Q(zeta_m)` through eigenvalue multiplicities.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{CharacterTable, ClassFunction};
use crate::exact_arith::{is_prime, prime_factors, Cyclotomic, PrimeFieldElement as Fp, Rational};
use crate::group::{class_matrix, ClassData, FiniteMatrixGroup};
use crate::{Error, Result};

/// Largest prime considered when searching for the Dixon modulus.
pub const PRIME_SEARCH_BOUND: u64 = 1_000_000;

/// Smallest prime `p = 1 (mod m)` with `p > 2 sqrt(order)`.
pub fn dixon_prime(m: u64, order: u64) -> Result<u64> {
    let mut p = m + 1;
    while p <= PRIME_SEARCH_BOUND {
        if p * p > 4 * order && is_prime(p) {
            return Ok(p);
        }
        p += m;
    }
    Err(Error::NoSuitablePrime {
        modulus: m,
        lower: (2.0 * (order as f64).sqrt()) as u64,
        bound: PRIME_SEARCH_BOUND,
    })
}

/// An element of multiplicative order exactly `m` in `GF(p)`.
pub fn root_of_order(m: u64, p: u64) -> Fp {
    let factors = prime_factors(p - 1);
    let generator = (2..p)
        .map(|g| Fp::new(g as i64, p))
        .find(|g| factors.iter().all(|q| g.pow((p - 1) / q).value() != 1))
        .expect("prime fields have primitive roots");
    generator.pow((p - 1) / m)
}

/// Image of a cyclotomic integer under `zeta_m -> w`.
pub fn reduce_mod_p(x: &Cyclotomic, w: Fp) -> Option<Fp> {
    let p = w.modulus();
    let den = big_mod(x.denominator(), p);
    let den = Fp::new(den as i64, p).inv()?;
    let mut acc = Fp::zero(p);
    let mut wj = Fp::one(p);
    for n in x.numerators() {
        acc = acc + Fp::new(big_mod(n, p) as i64, p) * wj;
        wj = wj * w;
    }
    Some(acc * den)
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits")
}

type FpMatrix = Vec<Vec<Fp>>;

/// Reduced row echelon form of the given rows; returns the nonzero rows and
/// their pivot columns.
fn rref(mut rows: FpMatrix) -> (FpMatrix, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = rows[r][j];
                    rows[i][j] = rows[i][j] - f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : A x = 0}`.
fn nullspace(a: FpMatrix, p: u64) -> FpMatrix {
    let n = a.first().map_or(0, Vec::len);
    let (r, pivots) = rref(a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Fp::zero(p); n];
            v[f] = Fp::one(p);
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f];
            }
            v
        })
        .collect()
}

/// Characteristic polynomial via reduction to upper Hessenberg form;
/// coefficients lowest degree first.
fn charpoly(mut h: FpMatrix, p: u64) -> Vec<Fp> {
    let n = h.len();
    for m in 1..n {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot_inv = h[m][m - 1].inv().expect("nonzero pivot");
        for i in m + 1..n {
            let u = h[i][m - 1] * pivot_inv;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h[m][j];
                h[i][j] = h[i][j] - u * v;
            }
            for row in h.iter_mut() {
                let v = row[i];
                row[m] = row[m] + u * v;
            }
        }
    }
    let mut polys: Vec<Vec<Fp>> = vec![vec![Fp::one(p)]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut pk = vec![Fp::zero(p); k + 1];
        for (d, c) in prev.iter().enumerate() {
            pk[d + 1] = pk[d + 1] + *c;
            pk[d] = pk[d] - h[k - 1][k - 1] * *c;
        }
        let mut t = Fp::one(p);
        for i in (1..k).rev() {
            t = t * h[i][i - 1];
            let coef = t * h[i - 1][k - 1];
            if coef.is_zero() {
                continue;
            }
            for (d, c) in polys[i - 1].iter().enumerate() {
                pk[d] = pk[d] - coef * *c;
            }
        }
        polys.push(pk);
    }
    polys.pop().expect("nonempty")
}

fn eval(poly: &[Fp], x: Fp) -> Fp {
    poly.iter().rev().fold(Fp::zero(x.modulus()), |acc, &c| acc * x + c)
}

/// Splits the subspace spanned by `basis` (RREF rows) into eigenspaces of
/// the class matrix `mat` acting on column vectors.
fn split(basis: &[Vec<Fp>], pivots: &[usize], mat: &FpMatrix, p: u64) -> Result<Vec<FpMatrix>> {
    let d = basis.len();
    let r = mat.len();
    // restriction in the coordinates read off the pivot columns
    let images: Vec<Vec<Fp>> = basis
        .iter()
        .map(|w| {
            (0..r)
                .map(|j| (0..r).fold(Fp::zero(p), |acc, k| acc + mat[j][k] * w[k]))
                .collect()
        })
        .collect();
    let restricted: FpMatrix = (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
    let poly = charpoly(restricted.clone(), p);
    let mut spaces = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        let lambda = Fp::new(lambda as i64, p);
        if !eval(&poly, lambda).is_zero() {
            continue;
        }
        let shifted: FpMatrix = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { x - lambda } else { x })
                    .collect()
            })
            .collect();
        let coords = nullspace(shifted, p);
        total += coords.len();
        let ambient: FpMatrix = coords
            .iter()
            .map(|x| {
                (0..r)
                    .map(|k| (0..d).fold(Fp::zero(p), |acc, t| acc + x[t] * basis[t][k]))
                    .collect()
            })
            .collect();
        spaces.push(ambient);
        if total == d {
            break;
        }
    }
    if total != d {
        return Err(Error::Dixon("class matrix is not diagonalizable over GF(p)".into()));
    }
    Ok(spaces)
}

/// Modular data retained from the computation, aligned with the final
/// table order.
#[derive(Clone, Debug)]
pub struct DixonTrace {
    pub prime: u64,
    /// The image of `zeta_m` in `GF(p)`.
    pub root: Fp,
    pub values_mod_p: Vec<Vec<u64>>,
}

pub fn character_table(g: &FiniteMatrixGroup, cls: &Arc<ClassData>) -> Result<CharacterTable> {
    if cls.group_id() != g.id() {
        return Err(Error::GroupMismatch);
    }
    let r = cls.len();
    let order = g.len() as u64;
    let m = cls.field_order() as u64;
    let p = dixon_prime(m, order)?;
    let w = root_of_order(m, p);

    let identity: FpMatrix = (0..r)
        .map(|i| (0..r).map(|j| Fp::new((i == j) as i64, p)).collect())
        .collect();
    let mut spaces: Vec<FpMatrix> = vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat: FpMatrix = class_matrix(g, cls, i)
            .into_iter()
            .map(|row| row.into_iter().map(|x| Fp::new((x % p) as i64, p)).collect())
            .collect();
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = rref(space);
            next.extend(split(&basis, &pivots, &mat, p)?);
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Dixon("class matrices failed to separate characters".into()));
    }

    let size = |k: usize| Fp::new(cls.size(k) as i64, p);
    let sqrt_order = (order as f64).sqrt().floor() as u64 + 1;
    let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<u64>)> = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        let v0 = v[0]
            .inv()
            .ok_or_else(|| Error::Dixon("eigenvector vanishes at identity".into()))?;
        let omega: Vec<Fp> = v.iter().map(|&x| x * v0).collect();
        let s = (0..r).fold(Fp::zero(p), |acc, k| {
            acc + omega[k] * omega[cls.inverse_class(k)] / size(k)
        });
        let d2 = Fp::new(order as i64, p) / s;
        let degree = (1..=sqrt_order)
            .find(|&d| d * d <= order && Fp::new((d * d) as i64, p) == d2)
            .ok_or_else(|| Error::Dixon("no integer degree matches".into()))?;
        let dp = Fp::new(degree as i64, p);
        let modular: Vec<Fp> = (0..r).map(|k| omega[k] * dp / size(k)).collect();
        let values = (0..r)
            .map(|k| lift_value(cls, k, &modular, w, m as u32, degree))
            .collect::<Result<Vec<_>>>()?;
        rows.push((degree, values, modular.iter().map(|x| x.value()).collect()));
    }

    let is_trivial = |vals: &[Cyclotomic]| vals.iter().all(|v| v.to_i64() == Some(1));
    rows.sort_by(|a, b| {
        is_trivial(&b.1)
            .cmp(&is_trivial(&a.1))
            .then(a.0.cmp(&b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    let degree_sum: u64 = rows.iter().map(|row| row.0 * row.0).sum();
    if degree_sum != order {
        return Err(Error::Dixon(format!(
            "sum of squared degrees {degree_sum} differs from group order {order}"
        )));
    }

    let degrees = rows.iter().map(|row| row.0).collect();
    let trace = DixonTrace {
        prime: p,
        root: w,
        values_mod_p: rows.iter().map(|row| row.2.clone()).collect(),
    };
    let irreducibles = rows
        .into_iter()
        .map(|row| ClassFunction::new(cls.clone(), row.1))
        .collect::<Result<_>>()?;
    Ok(CharacterTable::from_parts(cls.clone(), irreducibles, degrees, trace))
}

/// Recovers `chi(g)` from `chi(g^j) mod p` by counting how often each
/// eigenvalue `zeta_o^l` occurs in the representing matrix of `g`.
fn lift_value(cls: &ClassData, k: usize, modular: &[Fp], w: Fp, m: u32, degree: u64) -> Result<Cyclotomic> {
    let p = w.modulus();
    let o = cls.representative_order(k);
    let z = w.pow((m / o) as u64);
    let z_inv = z.inv().expect("root of unity is nonzero");
    let o_inv = Fp::new(o as i64, p).inv().expect("p does not divide o");
    let mut value = Cyclotomic::zero(m)?;
    let mut count = 0u64;
    for l in 0..o {
        let step = z_inv.pow(l as u64);
        let mut acc = Fp::zero(p);
        let mut zj = Fp::one(p);
        for j in 0..o {
            acc = acc + modular[cls.power_class(k, j)] * zj;
            zj = zj * step;
        }
        let mult = (acc * o_inv).value();
        if mult > degree {
            return Err(Error::Dixon(format!(
                "eigenvalue multiplicity {mult} exceeds degree {degree}"
            )));
        }
        count += mult;
        if mult > 0 {
            let term =
                Cyclotomic::root_of_unity(m, (l * (m / o)) as i64)?.scale(&Rational::from_integer(BigInt::from(mult)));
            value = &value + &term;
        }
    }
    if count != degree {
        return Err(Error::Dixon(
            "eigenvalue multiplicities do not sum to the degree".into(),
        ));
    }
    Ok(value)
}
