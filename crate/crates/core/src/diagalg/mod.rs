//! Hecke algebras of types A and B, Brauer and walled Brauer algebras over
//! exact fields: multiplication, kernel elements of the Schur-Weyl actions,
//! tensor-space operators and the trace-form Gram matrix.

mod algebra;
mod brauer;
mod gram;
mod kernel;
mod perm;
mod tensor;

pub use algebra::{AlgebraDescriptor, BasedAlgebra, Brauer, Element, HeckeA, HeckeB, WalledBrauer};
pub use brauer::{BrauerDiagram, WalledDiagram};
pub use gram::{
    gram_determinant, gram_matrix, gram_matrix_of, is_semisimple_gram, regular_right_matrix_of,
    DEFAULT_BASIS_CAP,
};
pub use kernel::{antisymmetrizer, brauer_kernel_element, walled_kernel_element};
pub use perm::{Perm, SignedPerm};
pub use tensor::{act_brauer_on_tensor, act_symmetric_on_tensor, act_walled_on_tensor, DEFAULT_TENSOR_CAP};

#[cfg(test)]
mod tests;
