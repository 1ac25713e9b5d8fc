//! Signed integer combinations of Weyl characters `chi(lambda)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::scalars::ExactInt;

/// A finite combination `sum_lambda c_lambda chi(lambda)` over dominant weights.
///
/// Keys are kept in shifted form `lambda + rho`, which is strictly dominant;
/// the public accessors hand out the unshifted `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiSum {
    rho: Weight,
    terms: BTreeMap<Weight, ExactInt>,
}

/// `chi(mu)`: zero for dot-singular `mu`, otherwise `(-1)^{l(w)} chi(lambda)`
/// with `mu = w . lambda` and `lambda` dominant.
pub fn chi_of(system: &RootSystem, mu: &Weight) -> Result<ChiSum> {
    let mut out = ChiSum::zero(system);
    let nu = mu.add(system.rho());
    if let Some((sign, dominant)) = system.dominant_reduce(&nu)? {
        out.terms.insert(dominant, BigInt::from(sign));
    }
    Ok(out)
}

impl ChiSum {
    pub fn zero(system: &RootSystem) -> Self {
        ChiSum {
            rho: system.rho().clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * chi(lambda)` for a dominant `lambda`.
    pub fn single(system: &RootSystem, lambda: &Weight, coeff: ExactInt) -> Result<Self> {
        if !system.is_dominant(lambda) {
            return Err(Error::domain(format!("{lambda} is not dominant")));
        }
        let mut out = ChiSum::zero(system);
        if !coeff.is_zero() {
            out.terms.insert(lambda.add(system.rho()), coeff);
        }
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms `(lambda, coefficient)` in increasing order of `lambda + rho`.
    pub fn iter(&self) -> impl Iterator<Item = (Weight, &ExactInt)> + '_ {
        self.terms.iter().map(|(k, c)| (k.sub(&self.rho), c))
    }

    pub fn coefficient(&self, lambda: &Weight) -> ExactInt {
        if lambda.len() != self.rho.len() {
            return BigInt::zero();
        }
        self.terms
            .get(&lambda.add(&self.rho))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_compatible(&self, other: &ChiSum) -> Result<()> {
        if self.rho == other.rho {
            Ok(())
        } else {
            Err(Error::domain("character sums over different root systems"))
        }
    }

    pub fn add_assign(&mut self, other: &ChiSum) -> Result<()> {
        self.check_compatible(other)?;
        for (k, c) in &other.terms {
            let entry = self.terms.entry(k.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(k);
            }
        }
        Ok(())
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &ChiSum, coeff: &ExactInt) -> Result<()> {
        self.add_assign(&other.scale(coeff))
    }

    pub fn add(&self, other: &ChiSum) -> Result<ChiSum> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn scale(&self, coeff: &ExactInt) -> ChiSum {
        if coeff.is_zero() {
            return ChiSum {
                rho: self.rho.clone(),
                terms: BTreeMap::new(),
            };
        }
        ChiSum {
            rho: self.rho.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * coeff)).collect(),
        }
    }

    pub fn neg(&self) -> ChiSum {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for ChiSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.abs();
            if mag == BigInt::from(1) {
                write!(f, "{sign}chi{lambda}")?;
            } else {
                write!(f, "{sign}{mag}chi{lambda}")?;
            }
        }
        Ok(())
    }
}
