//! Exact computational algebra for Macaulay inverse systems.
//!
//! The library works with finitely generated inverse systems inside
//! `F* = (S*)^r`, where `S* = K[x_1, ..., x_n]` carries the contraction
//! action of `S = K[y_1, ..., y_n]`.  Everything is computed over the
//! rationals with no floating point: subspaces are held in reduced row
//! echelon form, so equality of spans is literal equality of bases.
//!
//! The main pipeline is:
//!
//! * [`poly`] — monomials, polynomials, dual elements, contraction;
//! * [`invsys`] — closures of generator tuples under contraction, degree and
//!   power layers, Hilbert and Loewy functions of the apolar module;
//! * [`kunte`] — encoding matrices, transpose duality, the symmetric-matrix
//!   certificate for self-duality, direct sums;
//! * [`decomp`] — the symmetric (Iarrobino) decomposition of the associated
//!   graded module, and a combinatorial feasibility solver for candidate
//!   decompositions;
//! * [`macaulay`] — binomial representations and the Macaulay growth bound;
//! * [`tensor`] — multiplication-matrix structure tensors, a commuting-pencil
//!   (Strassen) check, and a Gram-symmetry check for certified modules;
//! * [`classify`] — the census of local Hilbert functions of self-dual
//!   modules of a given length.

pub mod classify;
pub mod cli;
pub mod decomp;
pub mod exact;
pub mod invsys;
pub mod kunte;
pub mod macaulay;
pub mod parse;
pub mod poly;
pub mod tensor;
