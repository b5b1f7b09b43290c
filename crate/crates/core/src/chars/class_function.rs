use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact_arith::{Cyclotomic, Rational};
use crate::group::ClassData;
use crate::{Error, Result};

/// A function on conjugacy classes with values in `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ClassData>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.classes.group_id() == other.classes.group_id() && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    /// Values are embedded into the group's common cyclotomic field.
    pub fn new(classes: Arc<ClassData>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::Parse(format!(
                "class function has {} values for {} classes",
                values.len(),
                classes.len()
            )));
        }
        let m = classes.field_order();
        let values = values.into_iter().map(|v| v.embed(m)).collect::<Result<_>>()?;
        Ok(ClassFunction { classes, values })
    }

    pub fn constant(classes: Arc<ClassData>, c: i64) -> Self {
        let v = Cyclotomic::from_integer(classes.field_order(), c).expect("valid field order");
        let values = vec![v; classes.len()];
        ClassFunction { classes, values }
    }

    pub fn trivial(classes: Arc<ClassData>) -> Self {
        Self::constant(classes, 1)
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.classes.group_id() != other.classes.group_id() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// `(1/|G|) sum_C |C| f1(C) conj(f2(C))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.check_same(other)?;
        let m = self.classes.field_order();
        let mut acc = Cyclotomic::zero(m)?;
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            let size = Rational::from_integer(BigInt::from(self.classes.size(c)));
            acc = &acc + &(a * &b.conj()).scale(&size);
        }
        let order = Rational::from_integer(BigInt::from(self.classes.group_order()));
        Ok(acc.scale(&(Rational::from_integer(BigInt::from(1)) / order)))
    }

    /// Inner product that must be a rational integer.
    pub fn integer_inner_product(&self, other: &Self) -> Result<i64> {
        let ip = self.inner_product(other)?;
        ip.to_i64().ok_or_else(|| Error::NotVirtualCharacter {
            index: 0,
            value: ip.to_string(),
        })
    }

    /// Pointwise product.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a * b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, k: i64) -> Self {
        let q = Rational::from_integer(BigInt::from(k));
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.scale(&q)).collect(),
        }
    }

    /// `f - k * 1`.
    pub fn minus_constant(&self, k: i64) -> Self {
        let c = Self::constant(self.classes.clone(), k);
        self.zip_with(&c, |a, b| a - b)
    }

    pub fn conj(&self) -> Self {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// True iff every value is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| &v.conj() == v)
    }

    /// Degree as an integer, when the identity value is one.
    pub fn integer_degree(&self) -> Option<i64> {
        self.values[0].to_integer().and_then(|d| d.to_i64())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}
