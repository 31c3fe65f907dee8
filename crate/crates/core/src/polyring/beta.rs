use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial in `β` with integer coefficients, stored densely by degree.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct BetaPoly {
    coeffs: Vec<BigInt>,
}

impl BetaPoly {
    pub fn zero() -> Self {
        BetaPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree as usize];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs
            .get(degree as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// `(degree, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u32, c))
    }

    /// Drops every term of degree above `cap`.
    pub fn truncate(&mut self, cap: u32) {
        self.coeffs.truncate(cap as usize + 1);
        let trimmed = Self::from_coeffs(std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    pub fn truncated(mut self, cap: Option<u32>) -> Self {
        if let Some(cap) = cap {
            self.truncate(cap);
        }
        self
    }

    pub fn mul_capped(&self, other: &Self, cap: Option<u32>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(cap) = cap {
            len = len.min(cap as usize + 1);
        }
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplies by `β^k`.
    pub fn shift(&self, k: u32, cap: Option<u32>) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs).truncated(cap)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl AddAssign<&BetaPoly> for BetaPoly {
    fn add_assign(&mut self, other: &BetaPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Add for &BetaPoly {
    type Output = BetaPoly;

    fn add(self, other: &BetaPoly) -> BetaPoly {
        let mut out = self.clone();
        out += other;
        out
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;

    fn neg(self) -> BetaPoly {
        BetaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &BetaPoly {
    type Output = BetaPoly;

    fn sub(self, other: &BetaPoly) -> BetaPoly {
        self + &(-other)
    }
}

impl Mul for &BetaPoly {
    type Output = BetaPoly;

    fn mul(self, other: &BetaPoly) -> BetaPoly {
        self.mul_capped(other, None)
    }
}

impl One for BetaPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Mul for BetaPoly {
    type Output = BetaPoly;

    fn mul(self, other: BetaPoly) -> BetaPoly {
        &self * &other
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let (sign, mag) = if c < &BigInt::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => f.write_str("b")?,
                _ => write!(f, "b^{d}")?,
            }
        }
        Ok(())
    }
}
