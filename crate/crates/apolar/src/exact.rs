//! Exact linear algebra over the rationals.
//!
//! All subspace computations in this crate go through [`Subspace`], which
//! stores a basis in reduced row echelon form: pivots are 1, pivot columns
//! are cleared above and below, rows are ordered by pivot column, zero rows
//! are dropped.  RREF is a canonical form, so two subspaces are equal as
//! sets of vectors exactly when their stored bases are equal field by field.
//! That property is what lets the rest of the crate compare kernels, layers
//! and annihilators by plain `==`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Exact scalar type: arbitrary-precision rationals, always reduced, with
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer as a [`Rational`].
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for the fraction `numer/denom` as a [`Rational`].
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Errors raised by subspace constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A spanning set contained vectors of unequal lengths.
    RaggedInput { expected: usize, found: usize },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::RaggedInput { expected, found } => write!(
                f,
                "ragged spanning set: expected vectors of length {expected}, found length {found}"
            ),
        }
    }
}

impl std::error::Error for ExactError {}

/// Reduce `rows` to reduced row echelon form in place and drop zero rows.
///
/// Returns the pivot columns in increasing order.
fn rref(rows: &mut Vec<Vec<Rational>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..width {
        let Some(src) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, src);
        let inv = rows[next_row][col].recip();
        for entry in rows[next_row].iter_mut() {
            *entry *= &inv;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    let delta = &factor * &rows[next_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

/// Rank of a spanning set, i.e. the dimension of its span.
pub fn rank(vectors: &[Vec<Rational>], ambient_dim: usize) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    rref(&mut rows, ambient_dim).len()
}

/// A linear subspace of `Q^n`, stored as a canonical RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// RREF rows; invariant: pivots are 1, pivot columns strictly increase,
    /// every pivot column is zero in all other rows, no zero rows.
    basis: Vec<Vec<Rational>>,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace of `Q^ambient_dim`.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The full space `Q^ambient_dim`.
    pub fn full(ambient_dim: usize) -> Self {
        let basis: Vec<Vec<Rational>> = (0..ambient_dim)
            .map(|i| {
                let mut row = vec![Rational::zero(); ambient_dim];
                row[i] = Rational::one();
                row
            })
            .collect();
        Subspace {
            ambient_dim,
            pivots: (0..ambient_dim).collect(),
            basis,
        }
    }

    /// Span of the given vectors.  Rejects ragged input.
    pub fn from_spanning(
        ambient_dim: usize,
        vectors: Vec<Vec<Rational>>,
    ) -> Result<Self, ExactError> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(ExactError::RaggedInput {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let mut rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = rref(&mut rows, ambient_dim);
        Ok(Subspace {
            ambient_dim,
            basis: rows,
            pivots,
        })
    }

    /// Span of the coordinate axes listed in `coords`.
    pub fn coordinate_span(ambient_dim: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let mut pivots: Vec<usize> = coords.into_iter().collect();
        pivots.sort_unstable();
        pivots.dedup();
        let basis = pivots
            .iter()
            .map(|&i| {
                let mut row = vec![Rational::zero(); ambient_dim];
                row[i] = Rational::one();
                row
            })
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Reduce `vector` against the basis; the result is zero iff the vector
    /// lies in the subspace.
    pub fn reduce(&self, vector: &[Rational]) -> Vec<Rational> {
        assert_eq!(vector.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut v = vector.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in p..self.ambient_dim {
                    let delta = &factor * &row[c];
                    v[c] -= delta;
                }
            }
        }
        v
    }

    /// Membership test for a single vector.
    pub fn contains_vector(&self, vector: &[Rational]) -> bool {
        self.reduce(vector).iter().all(|x| x.is_zero())
    }

    /// Inclusion test `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|row| self.contains_vector(row))
    }

    /// Coordinates of `vector` with respect to the RREF basis.
    ///
    /// Returns `None` when the vector is outside the subspace.  Because the
    /// basis is in RREF, the coefficient of row `i` is just the vector's
    /// entry at that row's pivot column.
    pub fn coordinates(&self, vector: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(vector) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| vector[p].clone()).collect())
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch"
        );
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient_dim, rows).expect("rows share ambient length")
    }

    /// Intersection, computed through orthogonal complements:
    /// `A ∩ B = (A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch"
        );
        self.perp().sum(&other.perp()).perp()
    }

    /// Orthogonal complement with respect to the standard coordinate pairing.
    pub fn perp(&self) -> Subspace {
        let n = self.ambient_dim;
        let mut kernel = Vec::with_capacity(n - self.basis.len());
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                if p < free && !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            kernel.push(v);
        }
        Subspace::from_spanning(n, kernel).expect("kernel vectors share ambient length")
    }

    /// Basis of the same subspace in *anti-lex* echelon form: each row has a
    /// distinct rightmost nonzero coordinate (its anti-pivot, normalized to 1
    /// and zero in every other row), and rows come sorted by anti-pivot.
    ///
    /// When the coordinates are ordered by some filtration, intersections
    /// with coordinate prefixes read off directly: the rows with anti-pivot
    /// below a boundary are a basis of the intersection with that prefix.
    pub fn antilex_basis(&self) -> Vec<(usize, Vec<Rational>)> {
        let width = self.ambient_dim;
        let mut reversed: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|row| row.iter().rev().cloned().collect())
            .collect();
        let pivots = rref(&mut reversed, width);
        let mut rows: Vec<(usize, Vec<Rational>)> = reversed
            .into_iter()
            .zip(pivots)
            .map(|(row, p)| (width - 1 - p, row.into_iter().rev().collect()))
            .collect();
        rows.sort_by_key(|&(anti, _)| anti);
        rows
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subspace of Q^{}, dim {}", self.ambient_dim, self.dim())?;
        for row in &self.basis {
            let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", entries.join(", "))?;
        }
        Ok(())
    }
}

/// Dense rational matrix as rows; used for multiplication operators and
/// Gram matrices.
pub type Matrix = Vec<Vec<Rational>>;

/// The `n × n` identity matrix.
pub fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            row
        })
        .collect()
}

/// Matrix product `a · b`.  Panics on shape mismatch.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    assert!(a.iter().all(|row| row.len() == inner), "shape mismatch");
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|arow| {
            (0..cols)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for (k, aik) in arow.iter().enumerate() {
                        if !aik.is_zero() && !b[k][j].is_zero() {
                            acc += aik * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Transpose of a rectangular matrix.
pub fn mat_transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn mat_inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    // Invertible iff the left block carries a full set of pivots.
    if pivots.len() < n || pivots[..n.min(pivots.len())] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Whether a square matrix equals its transpose.
pub fn mat_is_symmetric(a: &Matrix) -> bool {
    let n = a.len();
    a.iter().all(|row| row.len() == n)
        && (0..n).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecr(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_canonicalizes_span() {
        let a = Subspace::from_spanning(3, vec![vecr(&[1, 2, 3]), vecr(&[2, 4, 6])]).unwrap();
        assert_eq!(a.dim(), 1);
        let b = Subspace::from_spanning(3, vec![vecr(&[3, 6, 9])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rref_pivots_are_one_and_cleared() {
        let s = Subspace::from_spanning(
            4,
            vec![vecr(&[0, 2, 1, 0]), vecr(&[1, 1, 0, 1]), vecr(&[1, 3, 1, 1])],
        )
        .unwrap();
        assert_eq!(s.dim(), 2);
        for (row, &p) in s.basis().iter().zip(&s.pivots) {
            assert!(row[p].is_one());
            for other in s.basis() {
                if !std::ptr::eq(other, row) {
                    assert!(other[p].is_zero());
                }
            }
        }
    }

    #[test]
    fn ragged_input_rejected() {
        let err = Subspace::from_spanning(3, vec![vecr(&[1, 0, 0]), vecr(&[1, 0])]).unwrap_err();
        assert_eq!(err, ExactError::RaggedInput { expected: 3, found: 2 });
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        // Two planes in Q^3 meeting in a line.
        let a = Subspace::from_spanning(3, vec![vecr(&[1, 0, 0]), vecr(&[0, 1, 0])]).unwrap();
        let b = Subspace::from_spanning(3, vec![vecr(&[0, 1, 0]), vecr(&[0, 0, 1])]).unwrap();
        let s = a.sum(&b);
        let i = a.intersect(&b);
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vector(&vecr(&[0, 5, 0])));
        assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
    }

    #[test]
    fn perp_dimension_and_double_perp() {
        let a = Subspace::from_spanning(
            5,
            vec![vecr(&[1, 2, 0, 0, 1]), vecr(&[0, 1, 1, 0, 0])],
        )
        .unwrap();
        let p = a.perp();
        assert_eq!(a.dim() + p.dim(), 5);
        assert_eq!(p.perp(), a);
        for u in a.basis() {
            for v in p.basis() {
                let dot: Rational = u.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn coordinates_recover_membership() {
        let a = Subspace::from_spanning(3, vec![vecr(&[1, 1, 0]), vecr(&[0, 0, 1])]).unwrap();
        let v = vecr(&[2, 2, 5]);
        let coords = a.coordinates(&v).unwrap();
        let mut rebuilt = vec![Rational::zero(); 3];
        for (c, row) in coords.iter().zip(a.basis()) {
            for (r, x) in rebuilt.iter_mut().zip(row) {
                *r += c * x;
            }
        }
        assert_eq!(rebuilt, v);
        assert!(a.coordinates(&vecr(&[1, 0, 0])).is_none());
    }

    #[test]
    fn matrix_inverse_roundtrip() {
        let m = vec![vecr(&[2, 1]), vecr(&[1, 1])];
        let inv = mat_inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), mat_identity(2));
        let singular = vec![vecr(&[1, 2]), vecr(&[2, 4])];
        assert!(mat_inverse(&singular).is_none());
    }

    #[test]
    fn antilex_basis_reads_off_prefix_intersections() {
        // span{(1,1,0), (0,1,1)} meets the prefix {x3 = 0} in span{(1,1,0)}
        // and the prefix {x2 = x3 = 0} trivially.
        let a = Subspace::from_spanning(3, vec![vecr(&[1, 1, 0]), vecr(&[0, 1, 1])]).unwrap();
        let rows = a.antilex_basis();
        assert_eq!(rows.len(), 2);
        // Anti-pivots are distinct, sorted, normalized to 1, and cleared in
        // the other rows.
        assert!(rows[0].0 < rows[1].0);
        for (i, (anti, row)) in rows.iter().enumerate() {
            assert_eq!(row[*anti], Rational::one());
            assert!(row[*anti + 1..].iter().all(|x| x.is_zero()));
            for (j, (_, other)) in rows.iter().enumerate() {
                if i != j {
                    assert!(other[*anti].is_zero());
                }
            }
            assert!(a.contains_vector(row));
        }
        // Prefix dimensions: 0 coords -> 0, 1 -> 0, 2 -> 1, 3 -> 2.
        let prefix_dim =
            |n: usize| -> usize { rows.iter().filter(|&&(anti, _)| anti < n).count() };
        assert_eq!(prefix_dim(0), 0);
        assert_eq!(prefix_dim(1), 0);
        assert_eq!(prefix_dim(2), 1);
        assert_eq!(prefix_dim(3), 2);
    }
}
