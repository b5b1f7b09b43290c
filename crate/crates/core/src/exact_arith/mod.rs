//! Exact arithmetic: rationals, cyclotomic fields and prime fields.
//!
//! Every character value and matrix entry in this crate lives in some
//! `Q(zeta_m)`. Elements are kept in the power basis `1, zeta, ..,
//! zeta^(phi(m)-1)` reduced modulo the cyclotomic polynomial, so structural
//! equality is field equality.

mod cyclotomic;
pub mod linalg;
pub mod poly;
mod prime_field;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use prime_field::PrimeFieldElement;
pub(crate) use prime_field::{is_prime, prime_factors};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Largest supported cyclotomic order.
pub const MAX_ORDER: u32 = 1000;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn cyc_add(a: &Cyclotomic, b: &Cyclotomic) -> crate::Result<Cyclotomic> {
    a.checked_add(b)
}

pub fn cyc_mul(a: &Cyclotomic, b: &Cyclotomic) -> crate::Result<Cyclotomic> {
    a.checked_mul(b)
}

pub fn cyc_neg(a: &Cyclotomic) -> Cyclotomic {
    -a
}

pub fn cyc_conj(a: &Cyclotomic) -> Cyclotomic {
    a.conj()
}

pub fn embed(a: &Cyclotomic, m_target: u32) -> crate::Result<Cyclotomic> {
    a.embed(m_target)
}

pub fn root_of_unity(m: u32, k: i64) -> crate::Result<Cyclotomic> {
    Cyclotomic::root_of_unity(m, k)
}
