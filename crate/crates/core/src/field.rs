//! Scalar fields: the rationals and prime fields `F_p`.

use std::fmt::{self, Debug};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field operations on an associated element type.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn integer(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn format(&self, a: &Self::Elem) -> String;

    /// `acc += a * b`.
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn zeros(&self, n: usize) -> Vec<Self::Elem> {
        vec![self.zero(); n]
    }
}

/// The rational numbers, with arbitrary-precision entries.
#[derive(Copy, Clone, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn integer(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn mul_add_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            *acc = BigRational::from_integer(acc.numer() + a.numer() * b.numer());
        } else {
            *acc += a * b;
        }
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
}

/// The prime field `F_p`, `p < 2³¹`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn integer(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn mul_add_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Characteristic selector used at API boundaries: `0` is the rationals.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Characteristic> {
        if p == 0 || is_prime(p) && p < 1 << 31 {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidArgument(format!("characteristic must be 0 or a prime, got {p}")))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Whether `p` divides `n` (never true in characteristic zero).
    pub fn divides(self, n: u64) -> bool {
        self.0 != 0 && n.is_multiple_of(self.0)
    }

    pub fn divides_big(self, n: &BigInt) -> bool {
        self.0 != 0 && (n.abs() % BigInt::from(self.0)).is_zero()
    }

    /// Run `visitor` with the concrete field of this characteristic.
    pub fn visit<V: FieldVisitor>(self, visitor: V) -> V::Output {
        if self.0 == 0 {
            visitor.visit(Rationals)
        } else {
            visitor.visit(PrimeField { p: self.0 })
        }
    }
}

impl fmt::Debug for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Characteristic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Characteristic> {
        let p = s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("bad characteristic {s:?}")))?;
        Characteristic::new(p)
    }
}

/// Generic callback over the two field implementations.
pub trait FieldVisitor {
    type Output;
    fn visit<F: Field>(self, field: F) -> Self::Output;
}
