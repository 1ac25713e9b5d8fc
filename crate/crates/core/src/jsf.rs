//! Jantzen sum formula for Weyl modules `Delta_q(lambda)` in all parameter
//! regimes, and the resulting simplicity test.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::charwts::{chi_of, ChiSum};
use crate::error::{Error, Result};
use crate::rootdata::{Root, RootSystem, Weight};
use crate::scalars::{is_prime, p_adic_valuation, ExactInt, FieldValue};

/// How `q` sits in the field. Only `ell = ord(q^2)` matters for the formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QClass {
    One,
    RootOfUnity(u64),
    NonRoot,
}

/// Characteristic of the field together with the class of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamRegime {
    characteristic: u64,
    q_class: QClass,
}

impl ParamRegime {
    pub fn new(characteristic: u64, q_class: QClass) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::domain(format!("characteristic {characteristic} is not prime")));
        }
        if let QClass::RootOfUnity(ell) = q_class {
            if ell < 2 {
                return Err(Error::domain(format!(
                    "ord(q^2) = {ell} is excluded; need ell >= 2"
                )));
            }
        }
        Ok(ParamRegime {
            characteristic,
            q_class,
        })
    }

    /// Classify a concrete `q`. Returns `Ok(None)` for the excluded value
    /// `q = -1` (in characteristic other than 2).
    pub fn from_q(q: &FieldValue) -> Result<Option<Self>> {
        if q.is_zero() {
            return Err(Error::domain("q must be invertible"));
        }
        let characteristic = q.field().characteristic();
        if q.is_one() {
            return Ok(Some(ParamRegime::new(characteristic, QClass::One)?));
        }
        let q2 = q.mul(q)?;
        if q2.is_one() {
            return Ok(None);
        }
        let class = match q2.multiplicative_order() {
            Some(ell) => QClass::RootOfUnity(ell),
            None => QClass::NonRoot,
        };
        Ok(Some(ParamRegime::new(characteristic, class)?))
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn q_class(&self) -> QClass {
        self.q_class
    }

    /// Step size of the inner sum: `ell` at a root of unity, `p` for `q = 1`
    /// in characteristic `p`, and `None` where the formula vanishes.
    pub fn step(&self) -> Option<u64> {
        match (self.characteristic, self.q_class) {
            (_, QClass::NonRoot) | (0, QClass::One) => None,
            (_, QClass::RootOfUnity(ell)) => Some(ell),
            (p, QClass::One) => Some(p),
        }
    }

    /// Positive characteristic with a non-root of unity: simplicity is read off
    /// the generic case of the criteria rather than proven by the formula.
    pub fn relies_on_nonroot_reading(&self) -> bool {
        self.characteristic != 0 && self.q_class == QClass::NonRoot
    }

    fn coefficient(&self, k: i64) -> Result<ExactInt> {
        let k = BigInt::from(k);
        Ok(match (self.characteristic, self.q_class) {
            (0, _) => BigInt::from(1),
            (p, QClass::RootOfUnity(_)) => BigInt::from(p).pow(p_adic_valuation(&k, p)?),
            (p, QClass::One) => BigInt::from(p_adic_valuation(&k, p)? + 1),
            (_, QClass::NonRoot) => unreachable!("generic regimes have no terms"),
        })
    }
}

impl fmt::Display for ParamRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "char {}, ", self.characteristic)?;
        match self.q_class {
            QClass::One => write!(f, "q = 1"),
            QClass::RootOfUnity(ell) => write!(f, "ord(q^2) = {ell}"),
            QClass::NonRoot => write!(f, "q not a root of unity"),
        }
    }
}

/// One `(alpha, k)` summand before cancellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsfTerm {
    pub root: Root,
    pub k: i64,
    pub coefficient: ExactInt,
    /// `lambda + rho - k * step * alpha`.
    pub shifted: Weight,
    /// `chi(lambda - k * step * alpha)`, empty when dot-singular.
    pub chi: ChiSum,
}

impl JsfTerm {
    pub fn is_singular(&self) -> bool {
        self.chi.is_empty()
    }
}

/// Outcome of evaluating the sum formula for one dominant weight.
///
/// `sum` is the right-hand side without the leading minus sign of the usual
/// statement; `simple` holds exactly when it vanishes.
#[derive(Clone, Debug)]
pub struct JsfReport {
    pub weight: Weight,
    pub regime: ParamRegime,
    pub sum: ChiSum,
    pub terms: Vec<JsfTerm>,
    pub simple: bool,
}

impl JsfReport {
    /// Terms whose character is nonzero.
    pub fn regular_terms(&self) -> impl Iterator<Item = &JsfTerm> {
        self.terms.iter().filter(|t| !t.is_singular())
    }
}

pub fn jsf_sum(system: &RootSystem, lambda: &Weight, regime: ParamRegime) -> Result<JsfReport> {
    if !system.is_dominant(lambda) {
        return Err(Error::domain(format!(
            "{lambda} is not a dominant weight of {}",
            system.lie_type()
        )));
    }
    let mut sum = ChiSum::zero(system);
    let mut terms = Vec::new();
    if let Some(step) = regime.step() {
        let step = step as i64;
        let shifted = lambda.add(system.rho());
        for alpha in system.positive_roots() {
            let bound = system
                .pairing_int(&shifted, alpha)
                .expect("lambda + rho pairs integrally with coroots");
            let mut k = 1;
            while k * step < bound {
                let moved = shifted.sub_root_multiple(alpha, k * step);
                let chi = chi_of(system, &moved.sub(system.rho()))?;
                let coefficient = regime.coefficient(k)?;
                sum.add_scaled(&chi, &coefficient)?;
                terms.push(JsfTerm {
                    root: alpha.clone(),
                    k,
                    coefficient,
                    shifted: moved,
                    chi,
                });
                k += 1;
            }
        }
    }
    let simple = sum.is_empty();
    Ok(JsfReport {
        weight: lambda.clone(),
        regime,
        sum,
        terms,
        simple,
    })
}

pub fn is_simple_weyl(system: &RootSystem, lambda: &Weight, regime: ParamRegime) -> Result<bool> {
    Ok(jsf_sum(system, lambda, regime)?.simple)
}
