//! Polynomials in divided-power position: the dual ring `S* = K[x_1..x_n]`
//! carries a contraction action of `S = K[y_1..y_n]`,
//!
//! ```text
//! y^a ∘ x^b = x^(b-a)   when b ≥ a componentwise, 0 otherwise,
//! ```
//!
//! extended linearly.  There are no factorials anywhere: contraction is the
//! normalized action, so it stays exact over Q in every characteristic-zero
//! computation here.  Tuples of such polynomials ([`DualElement`]) are the
//! elements of `F* = (S*)^r` on which inverse systems are built; contraction
//! acts componentwise on them.

use crate::exact::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Names for the first few variables accepted on input (`x,y,z,w,u,v` for
/// `x1..x6`).  Output always uses indexed names.
pub const VARIABLE_ALIASES: [char; 6] = ['x', 'y', 'z', 'w', 'u', 'v'];

/// A monomial exponent vector.  Comparison is graded lexicographic with
/// `x1 > x2 > ...`: lower total degree sorts first, and within a degree the
/// monomial with the larger exponent on the earliest differing variable
/// sorts last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1` in `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// `x_{var}^{exp}` (zero-based variable index).
    pub fn single(num_vars: usize, var: usize, exp: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[var] = exp;
        Monomial { exponents }
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Product of monomials (exponent vectors add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exponents.len(), other.exponents.len());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference `self - op`, or `None` when some exponent of
    /// `op` exceeds the corresponding exponent of `self`.  This is exactly
    /// the support condition of contraction.
    pub fn checked_sub(&self, op: &Monomial) -> Option<Monomial> {
        assert_eq!(self.exponents.len(), op.exponents.len());
        let mut exponents = Vec::with_capacity(self.exponents.len());
        for (b, a) in self.exponents.iter().zip(&op.exponents) {
            if b < a {
                return None;
            }
            exponents.push(b - a);
        }
        Some(Monomial { exponents })
    }

    /// Re-embed into a larger variable set, sending `x_i` to `x_{i+offset}`.
    pub fn embed(&self, num_vars: usize, offset: usize) -> Monomial {
        assert!(offset + self.exponents.len() <= num_vars);
        let mut exponents = vec![0; num_vars];
        exponents[offset..offset + self.exponents.len()].copy_from_slice(&self.exponents);
        Monomial { exponents }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials in `num_vars` variables of degree at most `max_degree`,
/// sorted ascending in the monomial order.  This is the coordinate grid used
/// for every subspace computation on an inverse system.
pub fn monomials_up_to(num_vars: usize, max_degree: usize) -> Vec<Monomial> {
    let mut all = Vec::new();
    let mut current = vec![0u32; num_vars];
    loop {
        all.push(Monomial::from_exponents(current.clone()));
        // Odometer over exponent vectors with total degree ≤ max_degree.
        let mut i = 0;
        loop {
            if i == num_vars {
                let mut sorted = all;
                sorted.sort();
                return sorted;
            }
            current[i] += 1;
            if current.iter().map(|&e| e as usize).sum::<usize>() <= max_degree {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

/// A polynomial in `S*` with rational coefficients.  The term map never
/// stores a zero coefficient, so equality of polynomials is equality of the
/// maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::from_terms(m.num_vars(), vec![(m, Rational::from_integer(1.into()))])
    }

    /// Build from a term list, merging duplicates and dropping zeros.
    pub fn from_terms(num_vars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), num_vars, "monomial arity mismatch");
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial {
            num_vars,
            terms: map,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, with the `-1` sentinel for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.num_vars, other.num_vars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            num_vars: self.num_vars,
            terms,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Contraction `y^op ∘ self`: shift every surviving monomial down by
    /// `op`, keeping its coefficient.
    pub fn contract(&self, op: &Monomial) -> Polynomial {
        assert_eq!(op.num_vars(), self.num_vars);
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| m.checked_sub(op).map(|m2| (m2, c.clone())))
                .collect(),
        }
    }

    /// Re-embed into a larger variable set, sending `x_i` to `x_{i+offset}`.
    pub fn embed(&self, num_vars: usize, offset: usize) -> Polynomial {
        Polynomial {
            num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(num_vars, offset), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in descending graded-lex order, `+`/`-`
    /// separators, no spaces, unit coefficients omitted, indexed variable
    /// names.  Parsing this form reproduces the polynomial bit for bit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            let unit = magnitude == Rational::from_integer(1.into());
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// An element of `F* = (S*)^r`: one polynomial per slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualElement {
    num_vars: usize,
    components: Vec<Polynomial>,
}

impl DualElement {
    pub fn new(num_vars: usize, components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "a dual element needs at least one slot");
        for c in &components {
            assert_eq!(c.num_vars(), num_vars, "component arity mismatch");
        }
        DualElement {
            num_vars,
            components,
        }
    }

    pub fn zero(num_vars: usize, rank: usize) -> Self {
        DualElement::new(num_vars, vec![Polynomial::zero(num_vars); rank])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of slots `r`.
    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, slot: usize) -> &Polynomial {
        &self.components[slot]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Maximum component degree, `-1` for the zero element.
    pub fn degree(&self) -> i64 {
        self.components.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    /// Componentwise contraction `y^op ∘ self`.
    pub fn contract(&self, op: &Monomial) -> DualElement {
        DualElement {
            num_vars: self.num_vars,
            components: self.components.iter().map(|c| c.contract(op)).collect(),
        }
    }

    pub fn add(&self, other: &DualElement) -> DualElement {
        assert_eq!(self.rank(), other.rank(), "slot count mismatch");
        DualElement {
            num_vars: self.num_vars,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> DualElement {
        DualElement {
            num_vars: self.num_vars,
            components: self.components.iter().map(|c| c.scale(factor)).collect(),
        }
    }
}

impl fmt::Display for DualElement {
    /// Comma-separated component polynomials in slot order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The perfect pairing between the free module `F = S^r` and `F* = (S*)^r`:
/// the basis monomial `y^op e_slot` pairs with `f` to the coefficient of
/// `x^op` in slot `slot` of `f`.  On basis monomials of both sides this is
/// the Kronecker pairing `⟨y^a e_s, x^b e_l⟩ = δ_{s,l} δ_{a,b}`.
pub fn pairing(op: &Monomial, slot: usize, f: &DualElement) -> Rational {
    assert!(slot < f.rank(), "slot out of range");
    f.component(slot).coefficient(op)
}
