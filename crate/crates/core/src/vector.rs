//! Dense rational vectors.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use crate::rational::{format_rational, rat_int, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    pub coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zeros(n: usize) -> Self {
        Self { coords: vec![Rational::zero(); n] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self { coords: v.iter().map(|&x| rat_int(x)).collect() }
    }

    /// The vector `v / den`.
    pub fn from_scaled(v: &[i64], den: i64) -> Self {
        Self { coords: v.iter().map(|&x| crate::rat(x, den)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn dot(&self, other: &Self) -> Rational {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(to_f64).collect()
    }

    /// Integer coordinates if every entry is integral.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(crate::rational::to_i64_exact).collect()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        RationalVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        RationalVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}
