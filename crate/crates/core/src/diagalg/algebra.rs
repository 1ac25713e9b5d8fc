use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Field, FieldValue};

use super::brauer::{BrauerDiagram, WalledDiagram};
use super::perm::{Perm, SignedPerm};

/// A finite linear combination of basis objects; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<B: Ord> {
    field: Field,
    terms: BTreeMap<B, FieldValue>,
}

impl<B: Ord + Clone> Element<B> {
    pub fn zero(field: Field) -> Self {
        Element {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(b: B, coeff: FieldValue) -> Self {
        let mut out = Element::zero(coeff.field());
        if !coeff.is_zero() {
            out.terms.insert(b, coeff);
        }
        out
    }

    pub fn basis(b: B, field: Field) -> Self {
        Element::single(b, field.one())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &FieldValue)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &B) -> FieldValue {
        self.terms.get(b).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, b: B, coeff: &FieldValue) -> Result<()> {
        if coeff.field() != self.field {
            return Err(Error::domain(format!(
                "coefficient over {} added to an element over {}",
                coeff.field(),
                self.field
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&b) {
            Some(c) => {
                *c = c.add(coeff)?;
                if c.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, coeff.clone());
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Element<B>) -> Result<Element<B>> {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element<B>) -> Result<Element<B>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element<B> {
        Element {
            field: self.field,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &FieldValue) -> Result<Element<B>> {
        let mut out = Element::zero(self.field);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), &c.mul(s)?)?;
        }
        Ok(out)
    }
}

impl<B: Ord + fmt::Display> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){b}")?;
        }
        Ok(())
    }
}

/// An associative unital algebra with a distinguished finite basis.
pub trait BasedAlgebra: Sync {
    type Basis: Clone + Ord + fmt::Debug + fmt::Display + Send + Sync;

    fn field(&self) -> Field;

    /// Exact basis size, computed without enumerating.
    fn basis_len(&self) -> u128;

    fn basis(&self) -> Vec<Self::Basis>;

    fn unit(&self) -> Self::Basis;

    fn mul_basis(&self, x: &Self::Basis, y: &Self::Basis) -> Result<Element<Self::Basis>>;

    fn mul(&self, x: &Element<Self::Basis>, y: &Element<Self::Basis>) -> Result<Element<Self::Basis>> {
        if x.field() != self.field() || y.field() != self.field() {
            return Err(Error::domain("element over a different field"));
        }
        let mut out = Element::zero(self.field());
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let coeff = ca.mul(cb)?;
                for (c, cc) in self.mul_basis(a, b)?.iter() {
                    out.add_term(c.clone(), &coeff.mul(cc)?)?;
                }
            }
        }
        Ok(out)
    }

    fn one(&self) -> Element<Self::Basis> {
        Element::basis(self.unit(), self.field())
    }
}

fn check_q(q: &FieldValue) -> Result<FieldValue> {
    if q.is_zero() {
        return Err(Error::domain("Hecke parameter q must be invertible"));
    }
    q.sub(&q.inv()?)
}

/// Iwahori-Hecke algebra of type `A_{d-1}` in the basis `{H_w : w in S_d}`.
#[derive(Clone, Debug)]
pub struct HeckeA {
    d: usize,
    q: FieldValue,
    q_minus_inv: FieldValue,
}

impl HeckeA {
    pub fn new(d: usize, q: FieldValue) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("Hecke algebra needs d >= 1"));
        }
        let q_minus_inv = check_q(&q)?;
        Ok(HeckeA { d, q, q_minus_inv })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &FieldValue {
        &self.q
    }

    /// `H_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<Element<Perm>> {
        Ok(Element::basis(Perm::identity(self.d).mul_simple(i)?, self.field()))
    }

    fn mul_generator(&self, x: &Element<Perm>, i: usize) -> Result<Element<Perm>> {
        let mut out = Element::zero(self.field());
        for (w, c) in x.iter() {
            let ws = w.mul_simple(i)?;
            if w.has_descent(i) {
                out.add_term(w.clone(), &c.mul(&self.q_minus_inv)?)?;
            }
            out.add_term(ws, c)?;
        }
        Ok(out)
    }
}

impl BasedAlgebra for HeckeA {
    type Basis = Perm;

    fn field(&self) -> Field {
        self.q.field()
    }

    fn basis_len(&self) -> u128 {
        (1..=self.d as u128).product()
    }

    fn basis(&self) -> Vec<Perm> {
        Perm::all(self.d)
    }

    fn unit(&self) -> Perm {
        Perm::identity(self.d)
    }

    fn mul_basis(&self, x: &Perm, y: &Perm) -> Result<Element<Perm>> {
        if x.degree() != self.d || y.degree() != self.d {
            return Err(Error::domain("permutation of the wrong degree"));
        }
        let mut acc = Element::basis(x.clone(), self.field());
        for i in y.reduced_word() {
            acc = self.mul_generator(&acc, i)?;
        }
        Ok(acc)
    }
}

/// Iwahori-Hecke algebra of type `B_d` with equal parameters.
#[derive(Clone, Debug)]
pub struct HeckeB {
    d: usize,
    q: FieldValue,
    q_minus_inv: FieldValue,
}

impl HeckeB {
    pub fn new(d: usize, q: FieldValue) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("Hecke algebra needs d >= 1"));
        }
        let q_minus_inv = check_q(&q)?;
        Ok(HeckeB { d, q, q_minus_inv })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> &FieldValue {
        &self.q
    }

    /// `H_i` for `0 <= i < d`; `H_0` is the sign-change generator.
    pub fn generator(&self, i: usize) -> Result<Element<SignedPerm>> {
        Ok(Element::basis(SignedPerm::identity(self.d).mul_simple(i)?, self.field()))
    }

    fn mul_generator(&self, x: &Element<SignedPerm>, i: usize) -> Result<Element<SignedPerm>> {
        let mut out = Element::zero(self.field());
        for (w, c) in x.iter() {
            let ws = w.mul_simple(i)?;
            if w.has_descent(i) {
                out.add_term(w.clone(), &c.mul(&self.q_minus_inv)?)?;
            }
            out.add_term(ws, c)?;
        }
        Ok(out)
    }
}

impl BasedAlgebra for HeckeB {
    type Basis = SignedPerm;

    fn field(&self) -> Field {
        self.q.field()
    }

    fn basis_len(&self) -> u128 {
        (1u128 << self.d) * (1..=self.d as u128).product::<u128>()
    }

    fn basis(&self) -> Vec<SignedPerm> {
        SignedPerm::all(self.d)
    }

    fn unit(&self) -> SignedPerm {
        SignedPerm::identity(self.d)
    }

    fn mul_basis(&self, x: &SignedPerm, y: &SignedPerm) -> Result<Element<SignedPerm>> {
        if x.degree() != self.d || y.degree() != self.d {
            return Err(Error::domain("signed permutation of the wrong degree"));
        }
        let mut acc = Element::basis(x.clone(), self.field());
        for i in y.reduced_word() {
            acc = self.mul_generator(&acc, i)?;
        }
        Ok(acc)
    }
}

/// Brauer algebra `B_d(delta)`.
#[derive(Clone, Debug)]
pub struct Brauer {
    d: usize,
    delta: FieldValue,
}

impl Brauer {
    pub fn new(d: usize, delta: FieldValue) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("Brauer algebra needs d >= 1"));
        }
        Ok(Brauer { d, delta })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn delta(&self) -> &FieldValue {
        &self.delta
    }
}

impl BasedAlgebra for Brauer {
    type Basis = BrauerDiagram;

    fn field(&self) -> Field {
        self.delta.field()
    }

    fn basis_len(&self) -> u128 {
        BrauerDiagram::count(self.d)
    }

    fn basis(&self) -> Vec<BrauerDiagram> {
        BrauerDiagram::enumerate(self.d)
    }

    fn unit(&self) -> BrauerDiagram {
        BrauerDiagram::identity(self.d)
    }

    fn mul_basis(&self, x: &BrauerDiagram, y: &BrauerDiagram) -> Result<Element<BrauerDiagram>> {
        if x.degree() != self.d {
            return Err(Error::domain("diagram of the wrong degree"));
        }
        let (z, loops) = x.compose(y)?;
        Ok(Element::single(z, self.delta.pow(loops as i64)?))
    }
}

/// Walled Brauer algebra `B_{r,s}(delta)`.
#[derive(Clone, Debug)]
pub struct WalledBrauer {
    r: usize,
    s: usize,
    delta: FieldValue,
}

impl WalledBrauer {
    pub fn new(r: usize, s: usize, delta: FieldValue) -> Result<Self> {
        if r + s < 1 {
            return Err(Error::domain("walled Brauer algebra needs r + s >= 1"));
        }
        Ok(WalledBrauer { r, s, delta })
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.r, self.s)
    }

    pub fn delta(&self) -> &FieldValue {
        &self.delta
    }
}

impl BasedAlgebra for WalledBrauer {
    type Basis = WalledDiagram;

    fn field(&self) -> Field {
        self.delta.field()
    }

    fn basis_len(&self) -> u128 {
        WalledDiagram::count(self.r, self.s)
    }

    fn basis(&self) -> Vec<WalledDiagram> {
        WalledDiagram::enumerate(self.r, self.s)
    }

    fn unit(&self) -> WalledDiagram {
        WalledDiagram::identity(self.r, self.s).expect("r + s >= 1")
    }

    fn mul_basis(&self, x: &WalledDiagram, y: &WalledDiagram) -> Result<Element<WalledDiagram>> {
        if x.sizes() != (self.r, self.s) {
            return Err(Error::domain("walled diagram of the wrong shape"));
        }
        let (z, loops) = x.compose(y)?;
        Ok(Element::single(z, self.delta.pow(loops as i64)?))
    }
}

/// Which algebra, with its size and parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDescriptor {
    HeckeA { d: usize, q: FieldValue },
    HeckeB { d: usize, q: FieldValue },
    Brauer { d: usize, delta: FieldValue },
    WalledBrauer { r: usize, s: usize, delta: FieldValue },
}

impl AlgebraDescriptor {
    pub fn field(&self) -> Field {
        match self {
            AlgebraDescriptor::HeckeA { q, .. } | AlgebraDescriptor::HeckeB { q, .. } => q.field(),
            AlgebraDescriptor::Brauer { delta, .. } | AlgebraDescriptor::WalledBrauer { delta, .. } => {
                delta.field()
            }
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            AlgebraDescriptor::HeckeA { .. } => "hecke-a",
            AlgebraDescriptor::HeckeB { .. } => "hecke-b",
            AlgebraDescriptor::Brauer { .. } => "brauer",
            AlgebraDescriptor::WalledBrauer { .. } => "walled-brauer",
        }
    }

    pub fn basis_len(&self) -> u128 {
        match *self {
            AlgebraDescriptor::HeckeA { d, .. } => (1..=d as u128).product(),
            AlgebraDescriptor::HeckeB { d, .. } => (1u128 << d) * (1..=d as u128).product::<u128>(),
            AlgebraDescriptor::Brauer { d, .. } => BrauerDiagram::count(d),
            AlgebraDescriptor::WalledBrauer { r, s, .. } => WalledDiagram::count(r, s),
        }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        match self {
            AlgebraDescriptor::HeckeA { d, q } => write!(f, "H^A_{d}(q={q}) over {field}"),
            AlgebraDescriptor::HeckeB { d, q } => write!(f, "H^B_{d}(q={q}) over {field}"),
            AlgebraDescriptor::Brauer { d, delta } => write!(f, "B_{d}(delta={delta}) over {field}"),
            AlgebraDescriptor::WalledBrauer { r, s, delta } => {
                write!(f, "B_{{{r},{s}}}(delta={delta}) over {field}")
            }
        }
    }
}
