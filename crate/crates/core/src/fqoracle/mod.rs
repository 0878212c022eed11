//! Brute-force group computations over prime fields `F_q`, `q ≤ 7`.
//!
//! Matrices are small fixed arrays. `UT_n` and `GL_n` are enumerated outright
//! under size guards. Superclass functions of `UT_n` are stored by their
//! values on superclasses, and induction to `GL_n` is evaluated only on the
//! unipotent classes `J_λ`.

mod classfn;
mod field;
mod groups;
mod induce;

pub use classfn::{
    coset_permutation_character, inner_product_ut, psi_mesa_check, ClassFnUT, UnipClassFn, MAX_SCF_SIZE,
};
pub use field::{jordan, superclass_label, Fq, Mat, MAX_MATRIX_SIZE};
pub use groups::{
    flags, for_each_gl, for_each_gl_with_first_row, for_each_ut, gl_order, hessenberg_count, q_factorial,
    superclass_representative, superclass_sizes, ut_order, FLAG_LIMIT, GL_DEFAULT_LIMIT, GL_EXTENDED_LIMIT,
    UT_LIMIT,
};
pub use induce::{induce_to_gl, induce_trivial_from_pattern, InductionCounts};
