use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::FieldValue;

use super::algebra::{AlgebraDescriptor, BasedAlgebra, Brauer, HeckeA, HeckeB, WalledBrauer};

/// Default bound on the basis size for trace-form computations.
pub const DEFAULT_BASIS_CAP: usize = 2000;

type Sparse = Vec<(usize, FieldValue)>;

fn check_cap(len: u128, cap: usize) -> Result<usize> {
    if len > cap as u128 {
        return Err(Error::Resource(format!("basis of size {len} exceeds the cap {cap}")));
    }
    Ok(len as usize)
}

/// Basis and the full table `products[i * N + j] = a_i a_j` in basis indices.
fn multiplication_table<A: BasedAlgebra>(alg: &A, cap: usize) -> Result<(Vec<A::Basis>, Vec<Sparse>)> {
    let n = check_cap(alg.basis_len(), cap)?;
    let basis = alg.basis();
    debug_assert_eq!(basis.len(), n);
    let index: BTreeMap<&A::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut products = Vec::with_capacity(n * n);
    for a in &basis {
        for b in &basis {
            let prod = alg.mul_basis(a, b)?;
            products.push(prod.iter().map(|(c, v)| (index[c], v.clone())).collect());
        }
    }
    Ok((basis, products))
}

/// Gram matrix of the trace form `<a, b> = tr(R_{ab})` in the standard basis.
pub fn gram_matrix_of<A: BasedAlgebra>(alg: &A, cap: usize) -> Result<Matrix> {
    let (basis, products) = multiplication_table(alg, cap)?;
    let n = basis.len();
    let field = alg.field();
    // traces[c] = tr(R_{a_c}) = sum_k [a_k a_c]_{a_k}
    let mut traces = vec![field.zero(); n];
    for (c, trace) in traces.iter_mut().enumerate() {
        for k in 0..n {
            if let Some((_, v)) = products[k * n + c].iter().find(|(idx, _)| *idx == k) {
                *trace = trace.add(v)?;
            }
        }
    }
    let mut gram = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = field.zero();
            for (c, v) in &products[i * n + j] {
                if !traces[*c].is_zero() {
                    acc = acc.add(&v.mul(&traces[*c])?)?;
                }
            }
            gram.set(i, j, acc);
        }
    }
    Ok(gram)
}

/// Matrix of right multiplication by the basis element `a`: column `j` holds `a_j a`.
pub fn regular_right_matrix_of<A: BasedAlgebra>(alg: &A, a: &A::Basis, cap: usize) -> Result<Matrix> {
    let n = check_cap(alg.basis_len(), cap)?;
    let basis = alg.basis();
    let index: BTreeMap<&A::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut out = Matrix::zeros(alg.field(), n, n);
    for (j, b) in basis.iter().enumerate() {
        for (c, v) in alg.mul_basis(b, a)?.iter() {
            out.set(index[c], j, v.clone());
        }
    }
    Ok(out)
}

macro_rules! dispatch {
    ($desc:expr, $alg:ident => $body:expr) => {
        match $desc {
            AlgebraDescriptor::HeckeA { d, q } => {
                let $alg = HeckeA::new(*d, q.clone())?;
                $body
            }
            AlgebraDescriptor::HeckeB { d, q } => {
                let $alg = HeckeB::new(*d, q.clone())?;
                $body
            }
            AlgebraDescriptor::Brauer { d, delta } => {
                let $alg = Brauer::new(*d, delta.clone())?;
                $body
            }
            AlgebraDescriptor::WalledBrauer { r, s, delta } => {
                let $alg = WalledBrauer::new(*r, *s, delta.clone())?;
                $body
            }
        }
    };
}

pub fn gram_matrix(desc: &AlgebraDescriptor, cap: usize) -> Result<Matrix> {
    dispatch!(desc, alg => gram_matrix_of(&alg, cap))
}

pub fn gram_determinant(desc: &AlgebraDescriptor, cap: usize) -> Result<FieldValue> {
    gram_matrix(desc, cap)?.determinant()
}

/// Semisimple exactly when the trace form is nondegenerate.
pub fn is_semisimple_gram(desc: &AlgebraDescriptor, cap: usize) -> Result<bool> {
    Ok(!gram_determinant(desc, cap)?.is_zero())
}
