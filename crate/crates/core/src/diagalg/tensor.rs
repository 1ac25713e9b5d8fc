use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Field, FieldValue};

use super::algebra::Element;
use super::brauer::{BrauerDiagram, WalledDiagram};
use super::perm::Perm;

/// Default bound on the number of matrix entries of a tensor-space operator.
pub const DEFAULT_TENSOR_CAP: usize = 1_000_000;

fn tensor_dim(n: usize, k: usize, cap: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::domain("tensor space needs n >= 1"));
    }
    let dim = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(n));
    match dim {
        Some(dim) if dim.checked_mul(dim).is_some_and(|e| e <= cap) => Ok(dim),
        _ => Err(Error::Resource(format!(
            "operator on ({n})^{k} exceeds {cap} entries"
        ))),
    }
}

/// Add `coeff` times the operator of `x` on `(K^n)^{(x)d}`: bottom points
/// read the input labels, top points write the output, cups force equal
/// labels and caps sum over a free label.
fn add_diagram(out: &mut Matrix, x: &BrauerDiagram, n: usize, coeff: &FieldValue) -> Result<()> {
    let d = x.degree();
    let dim = out.rows();
    let caps: Vec<(usize, usize)> = (d..2 * d)
        .filter(|&p| x.partner(p) >= d && x.partner(p) > p)
        .map(|p| (p - d, x.partner(p) - d))
        .collect();
    let cap_count = caps.len() as u32;
    let mut digits = vec![0usize; d];
    let mut outd = vec![0usize; d];
    for input in 0..dim {
        let mut rest = input;
        for j in (0..d).rev() {
            digits[j] = rest % n;
            rest /= n;
        }
        let mut ok = true;
        for i in 0..d {
            let j = x.partner(i);
            if j < d {
                if digits[i] != digits[j] {
                    ok = false;
                    break;
                }
            } else {
                outd[j - d] = digits[i];
            }
        }
        if !ok {
            continue;
        }
        for free in 0..n.pow(cap_count) {
            let mut f = free;
            for &(a, b) in &caps {
                outd[a] = f % n;
                outd[b] = f % n;
                f /= n;
            }
            let o = outd.iter().fold(0usize, |acc, &v| acc * n + v);
            let updated = out.get(o, input).add(coeff)?;
            out.set(o, input, updated);
        }
    }
    Ok(())
}

fn operator<'a>(
    field: Field,
    d: usize,
    n: usize,
    cap: usize,
    terms: impl Iterator<Item = (BrauerDiagram, &'a FieldValue)>,
) -> Result<Matrix> {
    let dim = tensor_dim(n, d, cap)?;
    let mut out = Matrix::zeros(field, dim, dim);
    for (x, c) in terms {
        add_diagram(&mut out, &x, n, c)?;
    }
    Ok(out)
}

/// Operator of a Brauer algebra element on `(K^n)^{(x)d}` with `delta = n`.
/// Acting as a right module: the operator of `xy` is that of `y` after `x`.
pub fn act_brauer_on_tensor(el: &Element<BrauerDiagram>, d: usize, n: usize, cap: usize) -> Result<Matrix> {
    if el.iter().any(|(x, _)| x.degree() != d) {
        return Err(Error::domain(format!("element is not in degree {d}")));
    }
    operator(el.field(), d, n, cap, el.iter().map(|(x, c)| (x.clone(), c)))
}

/// Operator of a walled Brauer element on `V^{(x)r} (x) (V*)^{(x)s}`, `dim V = n`.
pub fn act_walled_on_tensor(el: &Element<WalledDiagram>, r: usize, s: usize, n: usize, cap: usize) -> Result<Matrix> {
    if el.iter().any(|(x, _)| x.sizes() != (r, s)) {
        return Err(Error::domain(format!("element is not in B_{{{r},{s}}}")));
    }
    operator(el.field(), r + s, n, cap, el.iter().map(|(x, c)| (x.diagram().clone(), c)))
}

/// Place-permutation action of a group algebra element of `S_d` on `(K^n)^{(x)d}`.
pub fn act_symmetric_on_tensor(el: &Element<Perm>, d: usize, n: usize, cap: usize) -> Result<Matrix> {
    if el.iter().any(|(w, _)| w.degree() != d) {
        return Err(Error::domain(format!("element is not in degree {d}")));
    }
    operator(el.field(), d, n, cap, el.iter().map(|(w, c)| (BrauerDiagram::from_perm(w), c)))
}
