use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exact_arith::Cyclotomic;
use crate::Result;

/// A 2x2 matrix over `Q(zeta_m)`, entries in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat2 {
    entries: [Cyclotomic; 4],
}

impl Mat2 {
    /// Builds a matrix, embedding all entries into the smallest common field.
    pub fn new(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Result<Self> {
        let m = [&a, &b, &c, &d].iter().fold(1u32, |acc, x| acc.lcm(&x.order()));
        Ok(Mat2 {
            entries: [a.embed(m)?, b.embed(m)?, c.embed(m)?, d.embed(m)?],
        })
    }

    pub fn identity(m: u32) -> Result<Self> {
        let one = Cyclotomic::one(m)?;
        let zero = Cyclotomic::zero(m)?;
        Ok(Mat2 {
            entries: [one.clone(), zero.clone(), zero, one],
        })
    }

    /// `diag(zeta_m^k, zeta_m^-k)`.
    pub fn diagonal_root(m: u32, k: i64) -> Result<Self> {
        let zero = Cyclotomic::zero(m)?;
        Ok(Mat2 {
            entries: [
                Cyclotomic::root_of_unity(m, k)?,
                zero.clone(),
                zero,
                Cyclotomic::root_of_unity(m, -k)?,
            ],
        })
    }

    pub fn order(&self) -> u32 {
        self.entries[0].order()
    }

    pub fn entries(&self) -> &[Cyclotomic; 4] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[2 * row + col]
    }

    pub fn embed(&self, m: u32) -> Result<Self> {
        Ok(Mat2 {
            entries: [
                self.entries[0].embed(m)?,
                self.entries[1].embed(m)?,
                self.entries[2].embed(m)?,
                self.entries[3].embed(m)?,
            ],
        })
    }

    pub fn det(&self) -> Cyclotomic {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.entries[0] + &self.entries[3]
    }

    /// The adjugate; equals the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        let [a, b, c, d] = &self.entries;
        Mat2 {
            entries: [d.clone(), -b, -c, a.clone()],
        }
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = &self.entries;
        b.is_zero() && c.is_zero() && a.to_i64() == Some(1) && d.to_i64() == Some(1)
    }
}

impl std::ops::Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Mat2 {
            entries: [
                &(a * e) + &(b * g),
                &(a * f) + &(b * h),
                &(c * e) + &(d * g),
                &(c * f) + &(d * h),
            ],
        }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units() {
        let i = Mat2::diagonal_root(4, 1).unwrap();
        let zero = Cyclotomic::zero(4).unwrap();
        let one = Cyclotomic::one(4).unwrap();
        let j = Mat2::new(zero.clone(), one.clone(), -&one, zero).unwrap();
        let minus_one = {
            let id = Mat2::identity(4).unwrap();
            Mat2::new(
                -id.entry(0, 0),
                id.entry(0, 1).clone(),
                id.entry(1, 0).clone(),
                -id.entry(1, 1),
            )
            .unwrap()
        };
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&(&i * &j) * &(&i * &j), minus_one);
        assert_eq!(i.det(), one);
        assert_eq!(&i * &i.adjugate(), Mat2::identity(4).unwrap());
        assert!(i.trace().is_zero());
    }

    #[test]
    fn mixed_entry_orders_are_aligned() {
        let m = Mat2::new(
            Cyclotomic::root_of_unity(3, 1).unwrap(),
            Cyclotomic::zero(1).unwrap(),
            Cyclotomic::zero(4).unwrap(),
            Cyclotomic::root_of_unity(3, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(m.order(), 12);
        assert_eq!(m.det().to_i64(), Some(1));
    }
}
