//! Scalars and coordinate vectors.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision integer.
pub type Int = BigInt;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair of machine integers.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Rational with denominator one.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(Int::from(value))
}

/// Greatest common divisor of a list of integers (non-negative; zero for an
/// empty or all-zero list).
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values.into_iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// Least common multiple of the denominators of a list of rationals.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integral vector of a lattice `Z^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<Int>);

impl IntVector {
    pub fn new(entries: Vec<Int>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(alloc::vec![Int::zero(); len])
    }

    /// The `i`-th standard basis vector of `Z^len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Int::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Int> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Non-negative gcd of the entries.
    pub fn content(&self) -> Int {
        gcd_all(&self.0)
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector(self.0.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn dot(&self, other: &IntVector) -> Int {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational point.
    pub fn pair(&self, point: &RatVector) -> Rat {
        debug_assert_eq!(self.len(), point.len());
        self.0
            .iter()
            .zip(point.entries())
            .map(|(a, b)| b * a)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, factor: &Int) -> IntVector {
        IntVector(self.0.iter().map(|a| a * factor).collect())
    }

    /// Divides by the content. Zero vectors are returned unchanged.
    pub fn primitive_part(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVector(self.0.iter().map(|a| a / &g).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: Int) -> IntVector {
        let mut entries = self.0.clone();
        entries.push(last);
        IntVector(entries)
    }
}

impl Index<usize> for IntVector {
    type Output = Int;

    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Rational point of `Q^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<Rat>);

impl RatVector {
    pub fn new(entries: Vec<Rat>) -> Self {
        RatVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        RatVector(entries.iter().map(|&x| rat_int(x)).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_fracs(entries: &[(i64, i64)]) -> Self {
        RatVector(entries.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        RatVector(alloc::vec![Rat::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVector) -> Rat {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rat) -> RatVector {
        RatVector(self.0.iter().map(|a| a * factor).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: Rat) -> RatVector {
        let mut entries = self.0.clone();
        entries.push(last);
        RatVector(entries)
    }

    /// Drops the last coordinate.
    pub fn truncated(&self) -> RatVector {
        RatVector(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    /// Smallest positive integer multiple of this vector, made primitive.
    ///
    /// Returns `(u, t)` with `u` primitive, `t > 0` and `self = t * u`, or
    /// `None` for the zero vector.
    pub fn primitive_direction(&self) -> Option<(IntVector, Rat)> {
        if self.is_zero() {
            return None;
        }
        let scaled = self.clear_denominators();
        let u = scaled.primitive_part();
        let (i, ui) = u
            .entries()
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_zero())
            .expect("nonzero vector");
        let t = &self.0[i] / Rat::from_integer(ui.clone());
        debug_assert!(t.is_positive());
        Some((u, t))
    }

    /// Integral positive multiple (by the lcm of denominators).
    pub fn clear_denominators(&self) -> IntVector {
        let l = lcm_denominators(&self.0);
        IntVector(
            self.0
                .iter()
                .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
                .collect(),
        )
    }
}

impl Index<usize> for RatVector {
    type Output = Rat;

    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}
