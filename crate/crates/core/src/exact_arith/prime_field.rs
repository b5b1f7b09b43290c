use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of `GF(p)`, `p` prime and below `2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u64) -> Self {
        debug_assert!(modulus > 1 && modulus < (1 << 32));
        PrimeFieldElement {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Self::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = Self::one(self.modulus);
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(self.modulus - 2))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.modulus - 1;
        let mut order = n;
        for q in prime_factors(n) {
            while order.is_multiple_of(q) && self.pow(order / q).value == 1 {
                order /= q;
            }
        }
        Some(order)
    }

    fn check(self, other: Self) {
        debug_assert_eq!(self.modulus, other.modulus, "prime field mismatch");
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        let v = self.value + rhs.value;
        PrimeFieldElement {
            value: if v >= self.modulus { v - self.modulus } else { v },
            modulus: self.modulus,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        PrimeFieldElement {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Div for PrimeFieldElement {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_7() {
        let a = PrimeFieldElement::new(3, 7);
        let b = PrimeFieldElement::new(-2, 7);
        assert_eq!(b.value(), 5);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a * b).value(), 1);
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!((a / a).value(), 1);
        assert!(PrimeFieldElement::zero(7).inv().is_none());
    }

    #[test]
    fn orders() {
        assert_eq!(PrimeFieldElement::new(3, 7).multiplicative_order(), Some(6));
        assert_eq!(PrimeFieldElement::new(2, 7).multiplicative_order(), Some(3));
        assert_eq!(PrimeFieldElement::new(6, 7).multiplicative_order(), Some(2));
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for p in [2u64, 3, 61, 73, 97] {
            for v in 1..p {
                let x = PrimeFieldElement::new(v as i64, p);
                assert_eq!((x * x.inv().unwrap()).value(), 1);
            }
        }
    }
}
