//! Exact-arithmetic invariants of simple Cuntz-Krieger algebras and unital
//! Exel-Laca algebras.
//!
//! A simple Cuntz-Krieger algebra is classified by the pair
//! `(K_0, [1])` together with `K_1`, all of which are computed here as
//! cokernels and kernels of integer matrices derived from the defining
//! {0,1} matrix.  A unital Exel-Laca algebra given by an infinite matrix
//! that is right stable is described by a finite seed `(K, A_K, C_K)` plus
//! a tail rule; its K-groups and strong/weak extension groups are again
//! integer-matrix cokernels and kernels at a stabilization level.
//!
//! The [`reciprocal`] module realizes the reciprocal dual of such an
//! Exel-Laca algebra as an explicit `(K+2) x (K+2)` Cuntz-Krieger matrix and
//! verifies the duality numerically, and decides isomorphism of simple
//! Cuntz-Krieger algebras via the complete invariant
//! `(coker(I - A^t), coker[I - A^t | 1])`.
//!
//! All arithmetic is exact over unbounded integers; there is no floating
//! point anywhere in this crate.

pub mod abelian;
pub mod corpus;
pub mod document;
pub mod intmat;
pub mod invariants;
pub mod reciprocal;
pub mod report;
pub mod zomat;

pub use abelian::{groups_isomorphic, pairs_equivalent, ElementOrder, FgAbelianGroup, MarkedGroup};
pub use intmat::{
    cokernel_presentation, image_membership, kernel_basis, smith_normal_form, CokernelQuotient,
    IntMatrix, KernelBasis, SnfResult,
};
pub use zomat::{
    validate_ck, CkMatrix, MatrixError, SeedError, StableSeed, TailRule, ZeroOneMatrix,
};
