//! Weyl factors of `V^{(x)d}` and of the mixed tensor space
//! `V^{(x)r} (x) (V*)^{(x)s}`, and the semisimplicity test for their
//! endomorphism algebras.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charwts::{chi_of, ChiSum};
use crate::error::{Error, Result};
use crate::jsf::{jsf_sum, JsfReport, ParamRegime};
use crate::rootdata::{LieKind, RootSystem, Weight};
use crate::scalars::ExactInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorShape {
    Power(usize),
    Mixed { r: usize, s: usize },
}

impl TensorShape {
    /// Number of tensor factors.
    pub fn degree(&self) -> usize {
        match *self {
            TensorShape::Power(d) => d,
            TensorShape::Mixed { r, s } => r + s,
        }
    }
}

impl fmt::Display for TensorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorShape::Power(d) => write!(f, "d={d}"),
            TensorShape::Mixed { r, s } => write!(f, "(r,s)=({r},{s})"),
        }
    }
}

/// Highest weights of the Weyl factors of a tensor space, with multiplicity.
#[derive(Clone, Debug)]
pub struct WeylMultiset {
    system: RootSystem,
    factors: BTreeMap<Weight, ExactInt>,
    shape: TensorShape,
}

impl WeylMultiset {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn shape(&self) -> TensorShape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in descending lexicographic order of coordinates.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &ExactInt)> {
        self.factors.iter().rev()
    }

    pub fn multiplicity(&self, lambda: &Weight) -> ExactInt {
        self.factors.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        self.factors.contains_key(lambda)
    }

    /// `sum mult^2`, the dimension of the endomorphism algebra.
    pub fn end_dim(&self) -> ExactInt {
        self.factors.values().map(|m| m * m).sum()
    }

    /// `sum mult * dim Delta(lambda)`.
    pub fn total_dimension(&self) -> Result<ExactInt> {
        let mut total = BigInt::zero();
        for (lambda, m) in &self.factors {
            total += m * self.system.weyl_dimension(lambda)?;
        }
        Ok(total)
    }
}

fn tensor_with(system: &RootSystem, current: &ChiSum, weights: &[(Weight, u32)]) -> Result<ChiSum> {
    let mut next = ChiSum::zero(system);
    for (lambda, c) in current.iter() {
        for (mu, mult) in weights {
            let chi = chi_of(system, &lambda.add(mu))?;
            next.add_scaled(&chi, &(c * BigInt::from(*mult)))?;
        }
    }
    Ok(next)
}

fn finish(system: &RootSystem, sum: ChiSum, shape: TensorShape) -> WeylMultiset {
    assert!(
        sum.is_nonnegative(),
        "negative Weyl multiplicity in {shape} for {}",
        system.lie_type()
    );
    let factors = sum.iter().map(|(w, c)| (w, c.clone())).collect();
    WeylMultiset {
        system: system.clone(),
        factors,
        shape,
    }
}

pub fn weyl_factors_tensor_power(system: &RootSystem, d: usize) -> Result<WeylMultiset> {
    if d < 1 {
        return Err(Error::domain("tensor power d must be at least 1"));
    }
    let zero = Weight::zero(system.rank());
    let mut sum = ChiSum::single(system, &zero, BigInt::from(1))?;
    for _ in 0..d {
        sum = tensor_with(system, &sum, system.vector_rep_weights())?;
    }
    Ok(finish(system, sum, TensorShape::Power(d)))
}

/// Type A only: `r` copies of `V` followed by `s` copies of the dual.
pub fn weyl_factors_mixed(system: &RootSystem, r: usize, s: usize) -> Result<WeylMultiset> {
    if system.kind() != LieKind::A {
        return Err(Error::domain(format!(
            "mixed tensor spaces need type A, got {}",
            system.lie_type()
        )));
    }
    if r + s < 1 {
        return Err(Error::domain("mixed tensor space needs r + s >= 1"));
    }
    let m = system.rank();
    let dual: Vec<(Weight, u32)> = (0..m)
        .map(|i| (Weight::zero(m).sub(&Weight::unit(m, i)), 1))
        .collect();
    let mut sum = ChiSum::single(system, &Weight::zero(m), BigInt::from(1))?;
    for _ in 0..r {
        sum = tensor_with(system, &sum, system.vector_rep_weights())?;
    }
    for _ in 0..s {
        sum = tensor_with(system, &sum, &dual)?;
    }
    Ok(finish(system, sum, TensorShape::Mixed { r, s }))
}

#[derive(Clone, Debug)]
pub struct EndVerdict {
    pub semisimple: bool,
    /// First non-simple factor in descending lexicographic order.
    pub witness: Option<(Weight, JsfReport)>,
    pub end_dim: ExactInt,
}

pub fn analyze_endomorphism(ws: &WeylMultiset, regime: ParamRegime) -> Result<EndVerdict> {
    if ws.system.kind() == LieKind::B && regime.characteristic() == 2 {
        return Err(Error::Unsupported(
            "type B tilting modules are not treated in characteristic 2".into(),
        ));
    }
    let mut witness = None;
    for (lambda, _) in ws.iter() {
        let report = jsf_sum(&ws.system, lambda, regime)?;
        if !report.simple {
            witness = Some((lambda.clone(), report));
            break;
        }
    }
    Ok(EndVerdict {
        semisimple: witness.is_none(),
        witness,
        end_dim: ws.end_dim(),
    })
}

impl EndVerdict {
    pub fn witness_weight(&self) -> Option<&Weight> {
        self.witness.as_ref().map(|(w, _)| w)
    }
}
