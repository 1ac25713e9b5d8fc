//! Exact scalars: big integers, rationals, prime fields and p-adic valuations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// Trial-division primality test; every prime in scope is desk-sized.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut f = 3u64;
    while f.saturating_mul(f) <= p {
        if p % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Largest `v` with `p^v | a`.
pub fn p_adic_valuation(a: &ExactInt, p: u64) -> Result<u32> {
    if !a.is_positive() {
        return Err(Error::domain(format!("valuation of non-positive integer {a}")));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let p = BigInt::from(p);
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        a = q;
        v += 1;
    }
}

/// The ground field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime field, validating primality.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::domain(format!("{p} is not prime")))
        }
    }

    /// Zero for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn from_characteristic(c: u64) -> Result<Field> {
        if c == 0 {
            Ok(Field::Rationals)
        } else {
            Field::prime(c)
        }
    }

    pub fn zero(&self) -> FieldValue {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldValue {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldValue {
        match self {
            Field::Rationals => FieldValue::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => FieldValue::Residue {
                p: *p,
                value: n.rem_euclid(*p as i64) as u64,
            },
        }
    }

    pub fn from_bigint(&self, n: &ExactInt) -> FieldValue {
        match self {
            Field::Rationals => FieldValue::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                FieldValue::Residue {
                    p: *p,
                    value: r.to_u64().expect("residue fits in u64"),
                }
            }
        }
    }

    /// Reduce a rational into this field; fails if the denominator vanishes mod p.
    pub fn from_rational(&self, r: &ExactRat) -> Result<FieldValue> {
        match self {
            Field::Rationals => Ok(FieldValue::Rational(r.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                num.div(&den)
            }
        }
    }

    /// All nonzero elements of a prime field, in increasing residue order.
    pub fn units(&self) -> Result<Vec<FieldValue>> {
        match self {
            Field::Rationals => Err(Error::domain("the rationals have infinitely many units")),
            Field::Prime(p) => Ok((1..*p).map(|v| FieldValue::Residue { p: *p, value: v }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(ExactRat),
    Residue { p: u64, value: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl FieldValue {
    pub fn field(&self) -> Field {
        match self {
            FieldValue::Rational(_) => Field::Rationals,
            FieldValue::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_zero(),
            FieldValue::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Rational(r) => r.is_one(),
            FieldValue::Residue { value, p } => *value == 1 % *p,
        }
    }

    fn check_same(&self, other: &FieldValue) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "mixed fields {} and {}",
                self.field(),
                other.field()
            )))
        }
    }

    pub fn add(&self, other: &FieldValue) -> Result<FieldValue> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a + b),
            (FieldValue::Residue { p, value: a }, FieldValue::Residue { value: b, .. }) => {
                FieldValue::Residue { p: *p, value: (a + b) % p }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> FieldValue {
        match self {
            FieldValue::Rational(a) => FieldValue::Rational(-a),
            FieldValue::Residue { p, value } => FieldValue::Residue {
                p: *p,
                value: (p - value) % p,
            },
        }
    }

    pub fn sub(&self, other: &FieldValue) -> Result<FieldValue> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldValue) -> Result<FieldValue> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(a * b),
            (FieldValue::Residue { p, value: a }, FieldValue::Residue { value: b, .. }) => {
                FieldValue::Residue { p: *p, value: mul_mod(*a, *b, *p) }
            }
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<FieldValue> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(format!("inverse in {}", self.field())));
        }
        Ok(match self {
            FieldValue::Rational(a) => FieldValue::Rational(a.recip()),
            FieldValue::Residue { p, value } => FieldValue::Residue {
                p: *p,
                value: pow_mod(*value, p - 2, *p),
            },
        })
    }

    pub fn div(&self, other: &FieldValue) -> Result<FieldValue> {
        self.check_same(other)?;
        self.mul(&other.inv()?)
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn pow(&self, exp: i64) -> Result<FieldValue> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(match base {
            FieldValue::Rational(a) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= &a;
                }
                FieldValue::Rational(acc)
            }
            FieldValue::Residue { p, value } => FieldValue::Residue {
                p,
                value: pow_mod(value, e, p),
            },
        })
    }

    /// Multiplicative order, or `None` for zero and for rationals of infinite order.
    pub fn multiplicative_order(&self) -> Option<u64> {
        match self {
            FieldValue::Rational(a) => {
                if a.is_one() {
                    Some(1)
                } else if *a == -BigRational::one() {
                    Some(2)
                } else {
                    None
                }
            }
            FieldValue::Residue { p, value } => {
                if *value == 0 {
                    return None;
                }
                let mut acc = *value;
                let mut k = 1;
                while acc != 1 % p {
                    acc = mul_mod(acc, *value, *p);
                    k += 1;
                }
                Some(k)
            }
        }
    }

    /// The value as a rational number, if it lives in the rationals.
    pub fn as_rational(&self) -> Option<&ExactRat> {
        match self {
            FieldValue::Rational(r) => Some(r),
            FieldValue::Residue { .. } => None,
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => write!(f, "{r}"),
            FieldValue::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
