use crate::error::{Error, Result};
use crate::scalars::Field;

use super::algebra::Element;
use super::brauer::{BrauerDiagram, WalledDiagram};
use super::perm::Perm;

fn sign(field: Field, length: usize) -> crate::scalars::FieldValue {
    field.from_int(if length % 2 == 0 { 1 } else { -1 })
}

/// `e_d = sum_w (-1)^{l(w)} w` in the group algebra of `S_d`.
pub fn antisymmetrizer(d: usize, field: Field) -> Result<Element<Perm>> {
    if d < 1 {
        return Err(Error::domain("antisymmetrizer needs d >= 1"));
    }
    let mut out = Element::zero(field);
    for w in Perm::all(d) {
        out.add_term(w.clone(), &sign(field, w.length()))?;
    }
    Ok(out)
}

/// `e_{r,s} = sum_x (-1)^{l(x)} x` over all walled diagrams.
pub fn walled_kernel_element(r: usize, s: usize, field: Field) -> Result<Element<WalledDiagram>> {
    if r + s < 1 {
        return Err(Error::domain("walled kernel element needs r + s >= 1"));
    }
    let mut out = Element::zero(field);
    for x in WalledDiagram::enumerate(r, s) {
        let len = x.sign_length();
        out.add_term(x, &sign(field, len))?;
    }
    Ok(out)
}

/// `E_d`, the sum of all Brauer diagrams.
///
/// With `sigma_i u_i = u_i` and `delta = -n`, the symplectic action sends
/// `sigma_i` to minus the flip, and the kernel at `n = 2d - 2` is spanned by
/// the sum with all coefficients `+1`: it is the element with
/// `E sigma_i = E` and `E u_i = 0`.
pub fn brauer_kernel_element(d: usize, field: Field) -> Result<Element<BrauerDiagram>> {
    if d < 1 {
        return Err(Error::domain("Brauer kernel element needs d >= 1"));
    }
    let mut out = Element::zero(field);
    for x in BrauerDiagram::enumerate(d) {
        out.add_term(x, &field.one())?;
    }
    Ok(out)
}
