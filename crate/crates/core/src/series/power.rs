use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Formal power series known through `x^order`. Binary operations keep the
/// smaller order of their operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(), order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coefficients().to_vec(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn x(order: usize) -> Self {
        Self::from_integers(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * by).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let s = (1..=n).fold(BigRational::zero(), |acc, k| acc + &self.coeffs[k] * &out[n - k]);
            out.push(-s * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.reciprocal()?)
    }

    /// Square root with constant term 1, by Newton iteration doubling the
    /// known precision each step.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let half = BigRational::new(1.into(), 2.into());
        let mut root = Self::one(0);
        let mut known = 0;
        while known < order {
            known = (2 * known + 1).min(order);
            let target = self.truncate(known);
            let root_here = root.truncate_or_extend(known);
            root = (&root_here + &target.checked_div(&root_here)?).scale(&half);
        }
        Ok(root.truncate_or_extend(order))
    }

    fn truncate_or_extend(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    /// Divides by `x`; the result is known to one order less.
    pub fn divide_by_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("series has a non-zero constant term".into()));
        }
        if self.order() == 0 {
            return Err(Error::Precondition("series of order 0 cannot be divided by x".into()));
        }
        Ok(PowerSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition("inner series has a non-zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone(), order);
        }
        Ok(acc)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

/// A list of `[numerator, denominator]` decimal string pairs.
impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.numer().to_string(), c.denom().to_string()])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn geometric_series() {
        let s = PowerSeries::from_integers(&[1, -1], 6).reciprocal().unwrap();
        assert_eq!(ints(&s), vec![1; 7]);
        assert_eq!(PowerSeries::x(3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn sqrt_of_one_minus_four_x() {
        let s = PowerSeries::from_integers(&[1, -4], 8).sqrt().unwrap();
        assert_eq!(ints(&s), vec![1, -2, -2, -4, -10, -28, -84, -264, -858]);
        assert_eq!(&s * &s, PowerSeries::from_integers(&[1, -4], 8));
        assert_eq!(PowerSeries::from_integers(&[2, 1], 3).sqrt(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn order_is_minimum_of_operands() {
        let a = PowerSeries::from_integers(&[1, 2, 3], 5);
        let b = PowerSeries::from_integers(&[1, 1], 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(ints(&(&a * &b)), vec![1, 3, 5, 3]);
        assert_eq!(a.divide_by_x(), Err(Error::Precondition("series has a non-zero constant term".into())));
        assert_eq!(ints(&PowerSeries::x(4).divide_by_x().unwrap()), vec![1, 0, 0, 0]);
    }

    #[test]
    fn composition() {
        // 1/(1 - t) at t = x/(1 - x) is (1 - x)/(1 - 2x)
        let geo = PowerSeries::from_integers(&[1, -1], 6).reciprocal().unwrap();
        let d = &PowerSeries::x(6) * &geo;
        let composed = geo.compose(&d).unwrap();
        assert_eq!(ints(&composed), vec![1, 1, 2, 4, 8, 16, 32]);
        assert!(geo.compose(&geo).is_err());
    }

    #[test]
    fn serializes_as_string_pairs() {
        let s = PowerSeries::new(vec![BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into())], 1);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"[["1","2"],["-3","1"]]"#);
    }
}
