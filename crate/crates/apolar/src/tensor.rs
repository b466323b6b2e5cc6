//! Structure tensors of apolar modules and the two checks that connect
//! them to module theory: 1-genericity with Strassen's commutation
//! equations, and partial symmetry for self-dual modules.
//!
//! The module `M ≅ W*` carries commuting multiplication operators by the
//! variables; their matrices in the dual basis of `W`'s canonical basis are
//! the transposed contraction matrices.  Stacked with the identity (the
//! action of 1) they form the slices of the structure tensor.  Conversely,
//! a tensor with an invertible slice whose adjusted slices all commute is
//! "generic and abelian" — the computable footprint of being a structure
//! tensor; the negative-control tests exercise the failure reports.

use crate::exact::{mat_identity, mat_inverse, mat_is_symmetric, mat_mul, Matrix, Rational};
use crate::invsys::InverseSystem;
use crate::kunte::{gram_matrix, Certification, KunteError};
use crate::poly::Monomial;
use num_traits::Zero;
use std::fmt;

/// Errors from tensor construction and the symmetry check.
#[derive(Debug)]
pub enum TensorError {
    /// A tensor needs at least one slice.
    EmptyTensor,
    /// Slices must be square and of equal size.
    ShapeMismatch { detail: String },
    /// The underlying certificate machinery refused (e.g. no self-duality
    /// certificate for the symmetry check).
    Kunte(KunteError),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::EmptyTensor => write!(f, "a structure tensor needs at least one slice"),
            TensorError::ShapeMismatch { detail } => write!(f, "slice shape mismatch: {detail}"),
            TensorError::Kunte(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TensorError {}

impl From<KunteError> for TensorError {
    fn from(e: KunteError) -> Self {
        TensorError::Kunte(e)
    }
}

/// Matrices of the multiplication by `y_1, ..., y_n` on `M ≅ W*` in the
/// dual basis of `W`'s canonical basis — the transposes of the contraction
/// matrices, so row `j` is the coordinate vector of `y_i ∘ b_j`.
pub fn multiplication_matrices(system: &InverseSystem) -> Vec<Matrix> {
    let dim = system.total_dim();
    (0..system.num_vars())
        .map(|var| {
            let op = Monomial::single(system.num_vars(), var, 1);
            system
                .basis()
                .basis()
                .iter()
                .map(|row| {
                    let image = system.contract_vector(row, &op);
                    system
                        .basis()
                        .coordinates(&image)
                        .expect("the closure is contraction-stable")
                })
                .collect::<Vec<Vec<Rational>>>()
        })
        .map(|m| {
            debug_assert_eq!(m.len(), dim);
            m
        })
        .collect()
}

/// A structure tensor presented by its slices: `dim_A` square matrices of
/// equal size acting `B* → C`.  For tensors of modules, slice 0 is the
/// identity (multiplication by 1) and the rest are the variable actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    slices: Vec<Matrix>,
}

impl StructureTensor {
    /// Wrap hand-built slices (used for negative controls); validates that
    /// all slices are square and of equal size.
    pub fn from_slices(slices: Vec<Matrix>) -> Result<Self, TensorError> {
        if slices.is_empty() {
            return Err(TensorError::EmptyTensor);
        }
        let dim = slices[0].len();
        for (j, slice) in slices.iter().enumerate() {
            if slice.len() != dim {
                return Err(TensorError::ShapeMismatch {
                    detail: format!("slice {j} has {} rows, slice 0 has {dim}", slice.len()),
                });
            }
            for (r, row) in slice.iter().enumerate() {
                if row.len() != dim {
                    return Err(TensorError::ShapeMismatch {
                        detail: format!(
                            "slice {j} row {r} has {} entries, expected {dim}",
                            row.len()
                        ),
                    });
                }
            }
        }
        Ok(StructureTensor { dim, slices })
    }

    /// The structure tensor of an apolar module: identity followed by the
    /// variable multiplication matrices.
    pub fn of_module(system: &InverseSystem) -> StructureTensor {
        let dim = system.total_dim();
        let mut slices = vec![mat_identity(dim)];
        slices.extend(multiplication_matrices(system));
        StructureTensor { dim, slices }
    }

    /// Number of slices (`dim_A`).
    pub fn dim_a(&self) -> usize {
        self.slices.len()
    }

    /// Size of each slice (`dim_B = dim_C`).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slices(&self) -> &[Matrix] {
        &self.slices
    }
}

/// Verdict of [`strassen_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrassenOutcome {
    /// Some slice combination is invertible and the adjusted slices
    /// pairwise commute.  `witness_slice` names the invertible slice, or is
    /// `None` when only the sum of all slices was invertible.
    GenericAndAbelian { witness_slice: Option<usize> },
    /// No slice and not even the slice sum is invertible.
    NotGeneric,
    /// Adjusted slices `first` and `second` fail to commute.
    NonCommutingPair { first: usize, second: usize },
}

impl fmt::Display for StrassenOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrassenOutcome::GenericAndAbelian { witness_slice: Some(i) } => {
                write!(f, "GENERIC_AND_ABELIAN (invertible slice {i})")
            }
            StrassenOutcome::GenericAndAbelian { witness_slice: None } => {
                write!(f, "GENERIC_AND_ABELIAN (invertible slice sum)")
            }
            StrassenOutcome::NotGeneric => write!(f, "NOT_GENERIC"),
            StrassenOutcome::NonCommutingPair { first, second } => {
                write!(f, "NON_COMMUTING_PAIR ({first}, {second})")
            }
        }
    }
}

/// Check 1-genericity and Strassen's commutation equations: find an
/// invertible slice `t(α)` (slice 0 works for module tensors; otherwise
/// each slice and finally the slice sum is tried), form the adjusted slices
/// `S_j · t(α)^{-1}`, and test pairwise commutativity exactly.
pub fn strassen_check(tensor: &StructureTensor) -> StrassenOutcome {
    let witness = tensor
        .slices()
        .iter()
        .enumerate()
        .find_map(|(i, s)| mat_inverse(s).map(|inv| (Some(i), inv)))
        .or_else(|| {
            let mut sum = vec![vec![Rational::zero(); tensor.dim()]; tensor.dim()];
            for slice in tensor.slices() {
                for (acc, row) in sum.iter_mut().zip(slice) {
                    for (a, x) in acc.iter_mut().zip(row) {
                        *a += x;
                    }
                }
            }
            mat_inverse(&sum).map(|inv| (None, inv))
        });
    let Some((witness_slice, inv)) = witness else {
        return StrassenOutcome::NotGeneric;
    };
    let adjusted: Vec<Matrix> = tensor.slices().iter().map(|s| mat_mul(s, &inv)).collect();
    for i in 0..adjusted.len() {
        for j in i + 1..adjusted.len() {
            if mat_mul(&adjusted[i], &adjusted[j]) != mat_mul(&adjusted[j], &adjusted[i]) {
                return StrassenOutcome::NonCommutingPair { first: i, second: j };
            }
        }
    }
    StrassenOutcome::GenericAndAbelian { witness_slice }
}

/// Verdict of [`symmetry_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryOutcome {
    /// Every slice is self-adjoint for the certificate pairing.
    AllSlicesSelfAdjoint,
    /// The named slice is not self-adjoint.
    AsymmetricSlice { slice: usize },
}

impl fmt::Display for SymmetryOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryOutcome::AllSlicesSelfAdjoint => write!(f, "ALL_SLICES_SELF_ADJOINT"),
            SymmetryOutcome::AsymmetricSlice { slice } => {
                write!(f, "ASYMMETRIC_SLICE ({slice})")
            }
        }
    }
}

/// Check that every slice is self-adjoint with respect to the self-duality
/// pairing of a certified module — the computable meaning of the tensor
/// lying in `A ⊗ S²(B)`.
///
/// The slices act on `M ≅ W*` in the dual basis while the Gram matrix `G`
/// lives on `W`'s canonical basis, so self-adjointness of a slice `S = Cᵀ`
/// (with `C` the contraction matrix) reads `S·G` symmetric: `S·G = Cᵀ·G`,
/// which the balanced pairing makes equal to `G·C`.
pub fn symmetry_check(
    tensor: &StructureTensor,
    cert: &Certification,
) -> Result<SymmetryOutcome, TensorError> {
    let gram = gram_matrix(cert)?;
    if tensor.dim() != gram.len() {
        return Err(TensorError::ShapeMismatch {
            detail: format!(
                "tensor slices are {}x{} but the certified module has length {}",
                tensor.dim(),
                tensor.dim(),
                gram.len()
            ),
        });
    }
    for (j, slice) in tensor.slices().iter().enumerate() {
        if !mat_is_symmetric(&mat_mul(slice, &gram)) {
            return Ok(SymmetryOutcome::AsymmetricSlice { slice: j });
        }
    }
    Ok(SymmetryOutcome::AllSlicesSelfAdjoint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rank;
    use crate::kunte::{certify_self_dual, EncodingMatrix};
    use crate::parse::parse_dual_element;

    fn module(rows: &[&str], vars: usize) -> InverseSystem {
        let gens = rows
            .iter()
            .map(|r| parse_dual_element(r, Some(vars)).unwrap())
            .collect();
        InverseSystem::closure(gens).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| crate::exact::rat(x)).collect())
            .collect()
    }

    #[test]
    fn single_chain_action_is_a_jordan_block() {
        let w = module(&["x1"], 1);
        let mats = multiplication_matrices(&w);
        assert_eq!(mats.len(), 1);
        assert_eq!(mats[0], m(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn constants_carry_the_zero_action() {
        let w = module(&["1"], 1);
        let mats = multiplication_matrices(&w);
        assert_eq!(mats, vec![m(&[&[0]])]);
    }

    #[test]
    fn two_chain_action_is_rank_three_nilpotent() {
        let w = module(&["x1^2, 0", "0, x1"], 1);
        assert_eq!(w.total_dim(), 5);
        let mats = multiplication_matrices(&w);
        let t = &mats[0];
        assert_eq!(rank(t, 5), 3);
        let t3 = mat_mul(&mat_mul(t, t), t);
        assert!(t3.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn multiplication_matrices_commute() {
        let w = module(&["x1^2+x2^2, x1^3+x2^2", "x1^3+x2^2, x1^5+x2^4"], 2);
        let mats = multiplication_matrices(&w);
        for a in &mats {
            for b in &mats {
                assert_eq!(mat_mul(a, b), mat_mul(b, a));
            }
        }
    }

    #[test]
    fn module_tensor_is_generic_and_abelian() {
        let w = module(&["x1^2"], 1);
        let t = StructureTensor::of_module(&w);
        assert_eq!(t.dim_a(), 2);
        assert_eq!(t.slices()[0], mat_identity(3));
        assert_eq!(
            strassen_check(&t),
            StrassenOutcome::GenericAndAbelian { witness_slice: Some(0) }
        );
    }

    #[test]
    fn non_commuting_control_is_reported() {
        let slices = vec![
            mat_identity(2),
            m(&[&[0, 1], &[0, 0]]),
            m(&[&[0, 0], &[1, 0]]),
        ];
        let t = StructureTensor::from_slices(slices).unwrap();
        assert_eq!(
            strassen_check(&t),
            StrassenOutcome::NonCommutingPair { first: 1, second: 2 }
        );
    }

    #[test]
    fn degenerate_tensor_is_not_generic() {
        let t = StructureTensor::from_slices(vec![m(&[&[1, 0], &[0, 0]])]).unwrap();
        assert_eq!(strassen_check(&t), StrassenOutcome::NotGeneric);
    }

    #[test]
    fn ragged_slices_are_rejected() {
        assert!(matches!(
            StructureTensor::from_slices(vec![]),
            Err(TensorError::EmptyTensor)
        ));
        let bad = StructureTensor::from_slices(vec![mat_identity(2), mat_identity(3)]);
        assert!(matches!(bad, Err(TensorError::ShapeMismatch { .. })));
    }

    #[test]
    fn chain_slices_are_self_adjoint_for_the_natural_pairing() {
        let n = EncodingMatrix::from_entry_strings(1, &[&["x1^2"]]).unwrap();
        let cert = certify_self_dual(&n).unwrap();
        let t = StructureTensor::of_module(cert.system());
        assert_eq!(
            symmetry_check(&t, &cert).unwrap(),
            SymmetryOutcome::AllSlicesSelfAdjoint
        );
    }

    #[test]
    fn curated_module_slices_are_self_adjoint() {
        let n = EncodingMatrix::from_entry_strings(
            2,
            &[&["x1^3+x2^3", "x1*x2"], &["x1*x2", "x2"]],
        )
        .unwrap();
        let cert = certify_self_dual(&n).unwrap();
        let t = StructureTensor::of_module(cert.system());
        assert_eq!(
            symmetry_check(&t, &cert).unwrap(),
            SymmetryOutcome::AllSlicesSelfAdjoint
        );
    }

    #[test]
    fn symmetry_check_requires_a_certificate() {
        let n = EncodingMatrix::from_entry_strings(2, &[&["x1", "x2"], &["0", "0"]]).unwrap();
        let cert = certify_self_dual(&n).unwrap();
        let t = StructureTensor::of_module(cert.system());
        assert!(matches!(
            symmetry_check(&t, &cert),
            Err(TensorError::Kunte(KunteError::NotCertified { .. }))
        ));
    }

    #[test]
    fn asymmetric_foreign_slice_is_reported() {
        let n = EncodingMatrix::from_entry_strings(1, &[&["x1"]]).unwrap();
        let cert = certify_self_dual(&n).unwrap();
        let t = StructureTensor::from_slices(vec![m(&[&[1, 0], &[1, 0]])]).unwrap();
        assert_eq!(
            symmetry_check(&t, &cert).unwrap(),
            SymmetryOutcome::AsymmetricSlice { slice: 0 }
        );
    }
}
