use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::RatPoly;
use super::{Rational, MAX_ORDER};
use crate::{Error, Result};

struct FieldData {
    phi: usize,
    /// Coefficients of the cyclotomic polynomial, lowest degree first.
    poly: Vec<BigInt>,
    /// `powers[k]` is `x^k mod Phi_m` for `0 <= k < m`.
    powers: Vec<Vec<BigInt>>,
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<FieldData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn check_order(m: u64) -> Result<u32> {
    if m == 0 || m > MAX_ORDER as u64 {
        return Err(Error::UnsupportedOrder(m));
    }
    Ok(m as u32)
}

fn field(m: u32) -> Result<Arc<FieldData>> {
    let m = check_order(m as u64)?;
    if let Some(f) = field_cache().lock().unwrap().get(&m) {
        return Ok(f.clone());
    }
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let div = field(d)?;
            num = exact_div_monic(&num, &div.poly);
        }
    }
    let poly = num;
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi];
    if phi > 0 {
        cur[0] = BigInt::one();
    }
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x, then eliminate x^phi using the monic relation
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &poly[i];
            }
        }
    }
    let data = Arc::new(FieldData { phi, poly, powers });
    field_cache().lock().unwrap().insert(m, data.clone());
    Ok(data)
}

/// Long division of `num` by a monic polynomial; the remainder must vanish.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `m`-th cyclotomic polynomial, lowest-degree coefficient first.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<BigInt>> {
    Ok(field(m)?.poly.clone())
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of `Q(zeta_m)` in canonical power-basis form.
///
/// Coefficients are stored over a common positive denominator; the
/// representation is normalized so that `gcd(den, nums) = 1` and the zero
/// element has `den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    den: BigInt,
    nums: Vec<BigInt>,
}

impl Cyclotomic {
    fn from_parts(order: u32, nums: Vec<BigInt>, den: BigInt) -> Self {
        let mut c = Cyclotomic { order, den, nums };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.nums.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for n in &self.nums {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for n in self.nums.iter_mut() {
                *n = &*n / &g;
            }
            self.den = &self.den / &g;
        }
    }

    fn data(&self) -> Arc<FieldData> {
        field(self.order).expect("order validated at construction")
    }

    pub fn zero(m: u32) -> Result<Self> {
        let f = field(m)?;
        Ok(Cyclotomic {
            order: m,
            den: BigInt::one(),
            nums: vec![BigInt::zero(); f.phi],
        })
    }

    pub fn one(m: u32) -> Result<Self> {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: u32, n: i64) -> Result<Self> {
        Self::from_rational(m, &Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(m: u32, q: &Rational) -> Result<Self> {
        let mut z = Self::zero(m)?;
        z.nums[0] = q.numer().clone();
        z.den = q.denom().clone();
        z.normalize();
        Ok(z)
    }

    /// `zeta_m^k`, with `k` reduced modulo `m`.
    pub fn root_of_unity(m: u32, k: i64) -> Result<Self> {
        let f = field(m)?;
        let e = k.rem_euclid(m as i64) as usize;
        Ok(Cyclotomic {
            order: m,
            den: BigInt::one(),
            nums: f.powers[e].clone(),
        })
    }

    /// Builds `sum_j coeffs[j] * zeta_m^j` for arbitrary exponents.
    pub fn from_terms(m: u32, terms: &[(u64, Rational)]) -> Result<Self> {
        let mut acc = Self::zero(m)?;
        for (e, q) in terms {
            let t = Self::root_of_unity(m, (*e % m as u64) as i64)?.scale(q);
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.nums.len()
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.nums
            .iter()
            .map(|n| Rational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn coeff(&self, j: usize) -> Rational {
        Rational::new(self.nums[j].clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.nums.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.nums.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(0))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_rational() && self.den.is_one() {
            Some(self.nums[0].clone())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// True iff all power-basis coefficients are integers. Algebraic integers
    /// of `Q(zeta_m)` are exactly these elements.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.nums
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let nums = self.nums.iter().map(|n| n * q.numer()).collect();
        Self::from_parts(self.order, nums, &self.den * q.denom())
    }

    /// Applies the Galois automorphism `zeta_m -> zeta_m^k`.
    ///
    /// `k` must be coprime to `m`; only then is the map a field automorphism.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.order as i64;
        let f = self.data();
        let mut out = vec![BigInt::zero(); f.phi];
        for (j, n) in self.nums.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let e = (j as i64 * k).rem_euclid(m) as usize;
            for (o, p) in out.iter_mut().zip(&f.powers[e]) {
                if !p.is_zero() {
                    *o += n * p;
                }
            }
        }
        Self::from_parts(self.order, out, self.den.clone())
    }

    /// Complex conjugation, `zeta_m -> zeta_m^(m-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Re-expresses this element in `Q(zeta_target)`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(Error::NotDivisible {
                from: self.order,
                to: target,
            });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let f = field(target)?;
        let step = (target / self.order) as usize;
        let mut out = vec![BigInt::zero(); f.phi];
        for (j, n) in self.nums.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[j * step]) {
                if !p.is_zero() {
                    *o += n * p;
                }
            }
        }
        Ok(Self::from_parts(target, out, self.den.clone()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &Self, subtract: bool) -> Self {
        let (nums, den) = if self.den == other.den {
            let nums = self
                .nums
                .iter()
                .zip(&other.nums)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect();
            (nums, self.den.clone())
        } else {
            let nums = self
                .nums
                .iter()
                .zip(&other.nums)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if subtract {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            (nums, &self.den * &other.den)
        };
        Self::from_parts(self.order, nums, den)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let f = self.data();
        let phi = f.phi;
        let m = self.order as usize;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.nums.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.nums.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigInt> = conv[..phi].to_vec();
        for (k, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[k % m]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        Self::from_parts(self.order, out, &self.den * &other.den)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial. Returns `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let f = self.data();
        let a = RatPoly::new(self.coeffs());
        let modulus = RatPoly::from_integers(&f.poly);
        let (g, s, _) = RatPoly::ext_gcd(&a, &modulus);
        // Phi_m is irreducible, so the gcd is a nonzero constant.
        let c = g.coeffs().first()?.clone();
        let s = s.scale(&(Rational::one() / c));
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(f.phi, Rational::zero());
        Some(Self::from_rational_coeffs(self.order, &coeffs))
    }

    fn from_rational_coeffs(order: u32, coeffs: &[Rational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let nums = coeffs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        Self::from_parts(order, nums, den)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        self.checked_mul(&inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order).expect("valid order");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerical value under `zeta_m -> exp(2 pi i / m)`. Only for sanity
    /// checks; never for deciding equality.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let m = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, n) in self.nums.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let c = n.to_f64().unwrap_or(f64::NAN) / den;
            let theta = 2.0 * std::f64::consts::PI * j as f64 / m;
            re += c * theta.cos();
            im += c * theta.sin();
        }
        (re, im)
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> Vec<(usize, Rational)> {
        self.nums
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_zero())
            .map(|(j, n)| (j, Rational::new(n.clone(), self.den.clone())))
            .collect()
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then lexicographic on power-basis coefficients.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| {
            for (a, b) in self.nums.iter().zip(&other.nums) {
                let ord = (a * &other.den).cmp(&(b * &self.den));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                assert_eq!(
                    self.order, rhs.order,
                    "cyclotomic order mismatch; embed operands first"
                );
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, false));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, true));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_unchecked(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            den: self.den.clone(),
            nums: self.nums.iter().map(|n| -n).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, q)) in terms.iter().enumerate() {
            let neg = q.is_negative();
            let mag = q.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}^{}", self.order, e)?,
                (_, false) => write!(f, "{mag}*z{}^{}", self.order, e)?,
            }
        }
        Ok(())
    }
}

/// JSON integer that falls back to a decimal string outside the `i64` range.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicJson {
    m: u32,
    terms: Vec<(u64, JsonInt, JsonInt)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .into_iter()
            .map(|(e, q)| (e as u64, JsonInt::from_big(q.numer()), JsonInt::from_big(q.denom())))
            .collect();
        CyclotomicJson { m: self.order, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CyclotomicJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (e, n, q) in &raw.terms {
            let n = n.to_big().map_err(D::Error::custom)?;
            let q = q.to_big().map_err(D::Error::custom)?;
            if q.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((*e, Rational::new(n, q)));
        }
        Cyclotomic::from_terms(raw.m, &terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent route: Phi_m as the product of (x - zeta^k) over
    /// primitive k, evaluated numerically and rounded.
    fn phi_numeric(m: u32) -> Vec<i64> {
        let mut re = vec![1.0f64];
        let mut im = vec![0.0f64];
        for k in 1..=m {
            if num_integer::gcd(k, m) != 1 {
                continue;
            }
            let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            let (cr, ci) = (-t.cos(), -t.sin());
            let mut nre = vec![0.0; re.len() + 1];
            let mut nim = vec![0.0; im.len() + 1];
            for i in 0..re.len() {
                nre[i + 1] += re[i];
                nim[i + 1] += im[i];
                nre[i] += re[i] * cr - im[i] * ci;
                nim[i] += re[i] * ci + im[i] * cr;
            }
            re = nre;
            im = nim;
        }
        re.iter().map(|x| x.round() as i64).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
    }

    #[test]
    fn cyclotomic_polynomials_match_numeric_product() {
        for m in 1..=60 {
            let exact = cyclotomic_polynomial(m).unwrap();
            assert_eq!(exact.len() - 1, euler_phi(m) as usize);
            assert_eq!(exact, ints(&phi_numeric(m)), "m = {m}");
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(Cyclotomic::zero(0), Err(Error::UnsupportedOrder(0))));
        assert!(cyclotomic_polynomial(MAX_ORDER + 1).is_err());
    }

    #[test]
    fn basic_identities() {
        let i = Cyclotomic::root_of_unity(4, 1).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from_integer(4, -1).unwrap());

        let z3 = Cyclotomic::root_of_unity(3, 1).unwrap();
        let s = &(&Cyclotomic::one(3).unwrap() + &z3) + &(&z3 * &z3);
        assert!(s.is_zero());

        let one = Cyclotomic::one(8).unwrap();
        let a = &one + &Cyclotomic::root_of_unity(8, 1).unwrap();
        let b = &one + &Cyclotomic::root_of_unity(8, 7).unwrap();
        let prod = &a * &b;
        let expected = &(&Cyclotomic::from_integer(8, 2).unwrap() + &Cyclotomic::root_of_unity(8, 1).unwrap())
            + &Cyclotomic::root_of_unity(8, 7).unwrap();
        assert_eq!(prod, expected);
        let (re, im) = prod.to_complex();
        assert!((re - (2.0 + 2f64.sqrt())).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn conjugation_examples() {
        let z8 = Cyclotomic::root_of_unity(8, 1).unwrap();
        assert_eq!(z8.conj(), Cyclotomic::root_of_unity(8, 7).unwrap());
        let q = Cyclotomic::from_rational(8, &rational(3, 2)).unwrap();
        assert_eq!(q.conj(), q);
        let r = &Cyclotomic::root_of_unity(5, 1).unwrap() + &Cyclotomic::root_of_unity(5, 4).unwrap();
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn embed_examples() {
        let z2 = Cyclotomic::root_of_unity(2, 1).unwrap();
        assert_eq!(z2.embed(4).unwrap(), Cyclotomic::root_of_unity(4, 2).unwrap());
        assert_eq!(z2.embed(4).unwrap(), Cyclotomic::from_integer(4, -1).unwrap());
        let half = Cyclotomic::from_rational(1, &rational(1, 2)).unwrap();
        assert_eq!(
            half.embed(8).unwrap(),
            Cyclotomic::from_rational(8, &rational(1, 2)).unwrap()
        );
        let z3 = Cyclotomic::root_of_unity(3, 1).unwrap();
        assert_eq!(z3.embed(12).unwrap(), Cyclotomic::root_of_unity(12, 4).unwrap());
        assert!(matches!(z3.embed(8), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(
            Cyclotomic::root_of_unity(4, 2).unwrap(),
            Cyclotomic::from_integer(4, -1).unwrap()
        );
        assert_eq!(Cyclotomic::root_of_unity(1, 0).unwrap(), Cyclotomic::one(1).unwrap());
        assert_eq!(
            Cyclotomic::root_of_unity(8, 9).unwrap(),
            Cyclotomic::root_of_unity(8, 1).unwrap()
        );
        assert_eq!(
            Cyclotomic::root_of_unity(8, -1).unwrap(),
            Cyclotomic::root_of_unity(8, 7).unwrap()
        );
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = Cyclotomic::one(4).unwrap();
        let b = Cyclotomic::one(8).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::OrderMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn inverse_of_golden_ratio() {
        let z5 = |k| Cyclotomic::root_of_unity(5, k).unwrap();
        let phi = -(&z5(2) + &z5(3));
        let inv = phi.inv().unwrap();
        assert_eq!(&inv, &(&phi - &Cyclotomic::one(5).unwrap()));
        assert!(Cyclotomic::zero(5).unwrap().inv().is_none());
    }

    #[test]
    fn json_shape() {
        let x = &Cyclotomic::root_of_unity(8, 3).unwrap().scale(&rational(-1, 2))
            + &Cyclotomic::from_integer(8, 2).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"m":8,"terms":[[0,2,1],[3,-1,2]]}"#);
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        // exponents past phi(m) are reduced on input
        let y: Cyclotomic = serde_json::from_str(r#"{"m":4,"terms":[[2,1,1]]}"#).unwrap();
        assert_eq!(y, Cyclotomic::from_integer(4, -1).unwrap());
    }

    #[test]
    fn display() {
        let x = &Cyclotomic::root_of_unity(12, 5).unwrap() - &Cyclotomic::from_rational(12, &rational(1, 3)).unwrap();
        // zeta^5 = zeta^3 - zeta modulo x^4 - x^2 + 1
        assert_eq!(x.to_string(), "-1/3 - z12^1 + z12^3");
    }
}
