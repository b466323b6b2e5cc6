//! Finitely generated inverse systems `W = S·f_1 + ... + S·f_l ⊆ F*` and
//! the layer computations on them.
//!
//! Everything lives in a finite coordinate grid: `W` is spanned by
//! contractions of the generators, and a contraction of `x^b` is supported
//! on divisors of `x^b`, so one coordinate per (divisor of a generator
//! term, slot) pair suffices.  The grid is sorted by degree, which makes
//! every degree layer a coordinate *prefix* — that is what keeps the layer
//! and lattice computations cheap.  The apolar module of the generator
//! tuple is `M = F / W^⊥ ≅ W*`; its Hilbert and Loewy functions are read
//! off `W` as follows:
//!
//! * `dim (0 : m^k)_M = dim W - dim m^k W`, so the Loewy layers of `M` are
//!   the first differences of `total_dim - dim power_layer(W, k)`;
//! * elements of `W` of degree < `k` are exactly the elements killed by all
//!   operators of degree ≥ `k`, so `dim {f ∈ W : deg f ≤ k}` is
//!   `dim (0 : m^{k+1})_W`, and the first differences of the degree layers
//!   give the Hilbert function of `W* ≅ M`.
//!
//! For self-dual modules the two sequences coincide; in general `hilbert`
//! is the Hilbert function of `M ≅ W*` and `loewy` its Loewy (annihilator
//! layer) function.

use crate::exact::{Rational, Subspace};
use crate::poly::{DualElement, Monomial, Polynomial};
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Errors raised when building an inverse system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvSysError {
    /// No generators were supplied.
    NoGenerators,
    /// Every generator was the zero element.
    AllGeneratorsZero,
    /// Generators disagree in variable count or slot count.
    ShapeMismatch { detail: String },
}

impl fmt::Display for InvSysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvSysError::NoGenerators => write!(f, "an inverse system needs at least one generator"),
            InvSysError::AllGeneratorsZero => {
                write!(f, "all generators are zero; the inverse system would be the zero module")
            }
            InvSysError::ShapeMismatch { detail } => write!(f, "generator shape mismatch: {detail}"),
        }
    }
}

impl std::error::Error for InvSysError {}

/// A local Hilbert function (or Loewy function): finitely many positive
/// values indexed from 0.  Ordered lexicographically so sequences can key
/// ordered maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    /// Wrap a computed sequence.  Layer computations only ever produce
    /// positive entries, which this asserts.
    pub fn new(values: Vec<usize>) -> Self {
        assert!(!values.is_empty(), "a Hilbert function has at least one value");
        assert!(
            values.iter().all(|&v| v > 0),
            "Hilbert function entries are positive on the support range"
        );
        HilbertFunction(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at `k`, zero beyond the socle degree.
    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    /// Largest degree with a nonzero value.
    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    /// Total dimension `Σ h(k)`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Insert every divisor of `m` (componentwise exponent box) into `out`.
fn divisors_into(m: &Monomial, out: &mut BTreeSet<Monomial>) {
    let bounds = m.exponents();
    let mut current = vec![0u32; bounds.len()];
    loop {
        out.insert(Monomial::from_exponents(current.clone()));
        // Odometer over the exponent box.
        let mut pos = 0;
        loop {
            if pos == bounds.len() {
                return;
            }
            if current[pos] < bounds[pos] {
                current[pos] += 1;
                break;
            }
            current[pos] = 0;
            pos += 1;
        }
    }
}

/// Provenance tag on a spanning vector of the closure: the spanning element
/// is `operator ∘ generators[generator]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTag {
    pub operator: Monomial,
    pub generator: usize,
}

/// The closure of a generator tuple under contraction, with its canonical
/// basis and coordinate grid.
#[derive(Debug, Clone)]
pub struct InverseSystem {
    num_vars: usize,
    rank: usize,
    generators: Vec<DualElement>,
    /// Socle degree `d` of the apolar module; equals the maximum generator
    /// degree.
    socle_degree: usize,
    /// Coordinate grid: the divisor closure of the generator support,
    /// sorted ascending by (degree, lex).  Coordinate `(monomial i, slot s)`
    /// has index `i * rank + s`, so lower-degree coordinates form a prefix.
    monomials: Vec<Monomial>,
    monomial_index: HashMap<Monomial, usize>,
    /// First coordinate index past the degree-`k` prefix, for `k = 0..=d`.
    degree_boundary: Vec<usize>,
    /// Spanning vectors `operator ∘ generator` (nonzero ones only), in
    /// ascending operator order per generator, with their tags.
    spanning: Vec<(SpanningTag, Vec<Rational>)>,
    basis: Subspace,
    /// Anti-lex basis of `W` (see [`Subspace::antilex_basis`]); degree
    /// layers and the Hilbert function read off it directly.
    antilex: Vec<(usize, Vec<Rational>)>,
    /// `power[k] = m^k W`, for `k = 0..=d`; `m^(d+1) W = 0`.
    power: Vec<Subspace>,
}

impl InverseSystem {
    /// Close a generator tuple under contraction by all of `S`.
    ///
    /// Operators are applied in ascending degree order (breadth-first);
    /// since contraction strictly drops degree, operators of degree beyond
    /// the generator degree contribute nothing and the grid is finite.
    pub fn closure(generators: Vec<DualElement>) -> Result<Self, InvSysError> {
        if generators.is_empty() {
            return Err(InvSysError::NoGenerators);
        }
        let num_vars = generators[0].num_vars();
        let rank = generators[0].rank();
        for (i, g) in generators.iter().enumerate() {
            if g.num_vars() != num_vars {
                return Err(InvSysError::ShapeMismatch {
                    detail: format!(
                        "generator {} has {} variables, generator 0 has {}",
                        i + 1,
                        g.num_vars(),
                        num_vars
                    ),
                });
            }
            if g.rank() != rank {
                return Err(InvSysError::ShapeMismatch {
                    detail: format!(
                        "generator {} has {} slots, generator 0 has {}",
                        i + 1,
                        g.rank(),
                        rank
                    ),
                });
            }
        }
        let max_degree = generators.iter().map(DualElement::degree).max().unwrap_or(-1);
        if max_degree < 0 {
            return Err(InvSysError::AllGeneratorsZero);
        }
        let socle_degree = max_degree as usize;

        // The grid is the divisor closure of the generator support: every
        // contraction of a generator is supported there, and it is usually
        // far smaller than the full degree-bounded monomial box.
        let mut grid = BTreeSet::new();
        for generator in &generators {
            for comp in generator.components() {
                for (m, _) in comp.terms() {
                    divisors_into(m, &mut grid);
                }
            }
        }
        let monomials: Vec<Monomial> = grid.into_iter().collect();
        let monomial_index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let ambient_dim = monomials.len() * rank;
        let degree_boundary = (0..=socle_degree)
            .map(|k| rank * monomials.iter().take_while(|m| m.degree() <= k).count())
            .collect();

        let mut system = InverseSystem {
            num_vars,
            rank,
            generators,
            socle_degree,
            monomials,
            monomial_index,
            degree_boundary,
            spanning: Vec::new(),
            basis: Subspace::zero(ambient_dim),
            antilex: Vec::new(),
            power: Vec::new(),
        };

        let mut vectors = Vec::new();
        for (g, generator) in system.generators.iter().enumerate() {
            let gen_degree = generator.degree();
            // Grid order is ascending by degree, so this applies operators
            // breadth-first: degree 0, then 1, and so on.
            for op in &system.monomials {
                if (op.degree() as i64) > gen_degree {
                    continue;
                }
                let image = generator.contract(op);
                if image.is_zero() {
                    continue;
                }
                let vec = system.to_vector(&image);
                system.spanning.push((
                    SpanningTag {
                        operator: op.clone(),
                        generator: g,
                    },
                    vec.clone(),
                ));
                vectors.push(vec);
            }
        }
        system.basis = Subspace::from_spanning(ambient_dim, vectors)
            .expect("spanning vectors share the grid dimension");
        system.antilex = system.basis.antilex_basis();

        // m^k W is spanned by the spanning vectors whose operator has degree
        // at least k (y^a ∘ (m ∘ f) = (a·m) ∘ f); accumulate from the top
        // degree down so each layer extends the previous one.
        let mut power = vec![Subspace::zero(ambient_dim); socle_degree + 1];
        let mut acc: Vec<Vec<Rational>> = Vec::new();
        for k in (0..=socle_degree).rev() {
            for (tag, vec) in &system.spanning {
                if tag.operator.degree() == k {
                    acc.push(vec.clone());
                }
            }
            power[k] = Subspace::from_spanning(ambient_dim, acc.clone())
                .expect("spanning vectors share the grid dimension");
        }
        debug_assert_eq!(power[0], system.basis, "m^0 W is W itself");
        system.power = power;
        Ok(system)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of slots `r` of the ambient free module.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[DualElement] {
        &self.generators
    }

    /// `dim_K W`, which equals the length of the apolar module.
    pub fn total_dim(&self) -> usize {
        self.basis.dim()
    }

    /// Socle degree `d`: the largest `k` with `m^k`-layer nonzero.
    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    /// The canonical basis of `W` in the coordinate grid.
    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    /// The coordinate grid monomials, ascending.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Spanning vectors with their `operator ∘ generator` provenance tags.
    pub fn spanning(&self) -> &[(SpanningTag, Vec<Rational>)] {
        &self.spanning
    }

    pub fn ambient_dim(&self) -> usize {
        self.monomials.len() * self.rank
    }

    /// Grid coordinates of a dual element.
    ///
    /// Panics if the element has monomials outside the grid; closure images
    /// never do.
    pub fn to_vector(&self, f: &DualElement) -> Vec<Rational> {
        assert_eq!(f.rank(), self.rank, "slot count mismatch");
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (slot, comp) in f.components().iter().enumerate() {
            for (m, c) in comp.terms() {
                let i = *self
                    .monomial_index
                    .get(m)
                    .expect("monomial outside the coordinate grid");
                v[i * self.rank + slot] = c.clone();
            }
        }
        v
    }

    /// Inverse of [`Self::to_vector`].
    pub fn from_vector(&self, v: &[Rational]) -> DualElement {
        assert_eq!(v.len(), self.ambient_dim(), "grid dimension mismatch");
        let components = (0..self.rank)
            .map(|slot| {
                let terms = self
                    .monomials
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !v[i * self.rank + slot].is_zero())
                    .map(|(i, m)| (m.clone(), v[i * self.rank + slot].clone()))
                    .collect();
                Polynomial::from_terms(self.num_vars, terms)
            })
            .collect();
        DualElement::new(self.num_vars, components)
    }

    /// Contraction `y^op ∘ v` directly on grid coordinates.
    pub fn contract_vector(&self, v: &[Rational], op: &Monomial) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim()];
        for (i, m) in self.monomials.iter().enumerate() {
            let Some(target) = m.checked_sub(op) else {
                continue;
            };
            let j = self.monomial_index[&target];
            for slot in 0..self.rank {
                if !v[i * self.rank + slot].is_zero() {
                    out[j * self.rank + slot] = v[i * self.rank + slot].clone();
                }
            }
        }
        out
    }

    /// Membership test for a dual element.
    pub fn contains(&self, f: &DualElement) -> bool {
        if f.rank() != self.rank || f.num_vars() != self.num_vars {
            return false;
        }
        // Anything supported outside the grid is outside W.
        for comp in f.components() {
            for (m, _) in comp.terms() {
                if !self.monomial_index.contains_key(m) {
                    return false;
                }
            }
        }
        self.basis.contains_vector(&self.to_vector(f))
    }

    /// Number of coordinates in the degree-`k` prefix of the grid.
    fn boundary(&self, k: i64) -> usize {
        if k < 0 {
            0
        } else if k >= self.socle_degree as i64 {
            self.ambient_dim()
        } else {
            self.degree_boundary[k as usize]
        }
    }

    /// `{f ∈ W : deg f ≤ k}` as a subspace of the grid.  Empty for `k < 0`,
    /// all of `W` from the socle degree up.
    ///
    /// The grid is degree-sorted, so this is the intersection of `W` with a
    /// coordinate prefix: the anti-lex basis rows supported in the prefix.
    pub fn degree_layer(&self, k: i64) -> Subspace {
        let boundary = self.boundary(k);
        let rows: Vec<Vec<Rational>> = self
            .antilex
            .iter()
            .filter(|&&(anti, _)| anti < boundary)
            .map(|(_, row)| row.clone())
            .collect();
        Subspace::from_spanning(self.ambient_dim(), rows)
            .expect("anti-lex rows share the grid dimension")
    }

    /// `m^k W`: the span of `y^a ∘ w` over `w ∈ W` and operators of degree
    /// at least `k`.
    pub fn power_layer(&self, k: usize) -> Subspace {
        if k > self.socle_degree {
            return Subspace::zero(self.ambient_dim());
        }
        self.power[k].clone()
    }

    /// `dim m^k W` without cloning the layer.
    pub fn power_dim(&self, k: usize) -> usize {
        if k > self.socle_degree {
            0
        } else {
            self.power[k].dim()
        }
    }

    /// `dim {f ∈ W : deg f ≤ k}` without materializing the layer.
    pub fn degree_dim(&self, k: i64) -> usize {
        let boundary = self.boundary(k);
        self.antilex
            .iter()
            .take_while(|&&(anti, _)| anti < boundary)
            .count()
    }

    /// Intersection of an arbitrary subspace of the grid with the degree-`k`
    /// layer `{f : deg f ≤ k}`.
    pub fn degree_slice(&self, sub: &Subspace, k: i64) -> Subspace {
        assert_eq!(sub.ambient_dim(), self.ambient_dim(), "grid mismatch");
        let boundary = self.boundary(k);
        let rows = sub
            .antilex_basis()
            .into_iter()
            .filter(|&(anti, _)| anti < boundary)
            .map(|(_, row)| row)
            .collect();
        Subspace::from_spanning(self.ambient_dim(), rows)
            .expect("anti-lex rows share the grid dimension")
    }

    /// Dimensions of all degree slices of a subspace at once:
    /// `result[k] = dim (sub ∩ {deg ≤ k})` for `k = 0..=socle_degree`.
    pub fn degree_profile(&self, sub: &Subspace) -> Vec<usize> {
        assert_eq!(sub.ambient_dim(), self.ambient_dim(), "grid mismatch");
        let mut hist = vec![0usize; self.socle_degree + 1];
        for (anti, _) in sub.antilex_basis() {
            hist[self.monomials[anti / self.rank].degree()] += 1;
        }
        for k in 1..=self.socle_degree {
            hist[k] += hist[k - 1];
        }
        hist
    }

    /// Hilbert function of the apolar module `M ≅ W*`: first differences of
    /// the degree-layer dimensions of `W`, i.e. the histogram of anti-lex
    /// basis rows by the degree of their anti-pivot coordinate.
    pub fn hilbert(&self) -> HilbertFunction {
        let mut values = vec![0usize; self.socle_degree + 1];
        for &(anti, _) in &self.antilex {
            values[self.monomials[anti / self.rank].degree()] += 1;
        }
        HilbertFunction::new(values)
    }

    /// Loewy function of `M`: first differences of the annihilator-layer
    /// dimensions `dim (0 : m^k)_M = total_dim - dim m^k W`, which telescope
    /// to `dim m^k W - dim m^(k+1) W`.
    pub fn loewy(&self) -> HilbertFunction {
        let values = (0..=self.socle_degree)
            .map(|k| self.power_dim(k) - self.power_dim(k + 1))
            .collect();
        HilbertFunction::new(values)
    }
}
