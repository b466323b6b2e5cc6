//! Binomial representations and the Macaulay growth bound.
//!
//! Every positive integer `a` has a unique representation at index `s ≥ 1`
//!
//! ```text
//! a = C(a_s, s) + C(a_{s-1}, s-1) + ... + C(a_k, k),
//!     a_s > a_{s-1} > ... > a_k ≥ k ≥ 1,
//! ```
//!
//! found greedily from the top index down.  The bound operator shifts every
//! binomial up by one in both arguments:
//!
//! ```text
//! a^<s> = C(a_s + 1, s + 1) + ... + C(a_k + 1, k + 1),
//! ```
//!
//! and a sequence `h` can be the Hilbert function of a finite-length module
//! only if `h(r+1) ≤ h(r)^<r>` for every `r ≥ 1` (the step from degree 0 is
//! unconstrained).  Binomials are computed with big integers throughout, so
//! there is no overflow regime.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Errors for the representation constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MacaulayError {
    /// The represented value must be at least 1.
    ValueOutOfRange,
    /// The representation index must be at least 1.
    IndexOutOfRange,
}

impl fmt::Display for MacaulayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MacaulayError::ValueOutOfRange => write!(f, "the represented value must be positive"),
            MacaulayError::IndexOutOfRange => write!(f, "the representation index must be at least 1"),
        }
    }
}

impl std::error::Error for MacaulayError {}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// The binomial representation of a positive integer at a fixed index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    index: usize,
    /// `(a_i, i)` pairs, from `i = index` downward; `a_i` strictly
    /// decreasing and `a_i ≥ i`.
    terms: Vec<(u64, usize)>,
}

impl MacaulayRep {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn terms(&self) -> &[(u64, usize)] {
        &self.terms
    }

    /// Re-evaluate the represented value.
    pub fn value(&self) -> u64 {
        self.terms
            .iter()
            .map(|&(a, i)| binom(a, i as u64))
            .sum::<BigInt>()
            .to_u64()
            .expect("representation values fit u64 by construction")
    }

    /// The Macaulay bound `a^<s>`: every binomial shifted up by one in both
    /// arguments.
    pub fn bound(&self) -> u64 {
        self.terms
            .iter()
            .map(|&(a, i)| binom(a + 1, i as u64 + 1))
            .sum::<BigInt>()
            .to_u64()
            .expect("bound values fit u64 for u64 inputs")
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (a, i)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({a},{i})")?;
        }
        Ok(())
    }
}

/// Largest `x ≥ k` with `C(x, k) ≤ cap`, given `cap ≥ 1`.
fn greedy_top(cap: &BigInt, k: u64) -> u64 {
    // Exponential bracket then bisection; C(x, k) is strictly increasing
    // in x for x ≥ k.
    let mut lo = k; // C(k, k) = 1 ≤ cap
    let mut hi = k + 1;
    while binom(hi, k) <= *cap {
        lo = hi;
        hi *= 2;
    }
    // Invariant: C(lo, k) ≤ cap < C(hi, k).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binom(mid, k) <= *cap {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy binomial representation of `a ≥ 1` at index `s ≥ 1`.
pub fn macaulay_rep(a: u64, s: usize) -> Result<MacaulayRep, MacaulayError> {
    if a == 0 {
        return Err(MacaulayError::ValueOutOfRange);
    }
    if s == 0 {
        return Err(MacaulayError::IndexOutOfRange);
    }
    let mut remaining = BigInt::from(a);
    let mut terms = Vec::new();
    let mut previous_top: Option<u64> = None;
    for i in (1..=s).rev() {
        if remaining.is_zero() {
            break;
        }
        let top = greedy_top(&remaining, i as u64);
        remaining -= binom(top, i as u64);
        if let Some(prev) = previous_top {
            debug_assert!(top < prev, "greedy tops strictly decrease");
        }
        previous_top = Some(top);
        terms.push((top, i));
    }
    debug_assert!(remaining.is_zero(), "index-1 term absorbs any remainder");
    let rep = MacaulayRep { index: s, terms };
    debug_assert_eq!(rep.value(), a);
    Ok(rep)
}

/// The Macaulay bound `a^<s>` in one call.
pub fn macaulay_bound(a: u64, s: usize) -> Result<u64, MacaulayError> {
    Ok(macaulay_rep(a, s)?.bound())
}

/// A reason a sequence cannot be the Hilbert function of a finite-length
/// module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    /// A positive value follows a zero.
    ZerosTail { index: usize },
    /// A value above 1 follows a value of 1 at some positive degree.
    OnesTail { index: usize },
    /// Growth from `index - 1` to `index` exceeds the Macaulay bound.
    MacaulayBound { index: usize, value: usize, limit: u64 },
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceViolation::ZerosTail { index } => {
                write!(f, "h({index}) is positive after a zero value")
            }
            SequenceViolation::OnesTail { index } => {
                write!(f, "h({index}) exceeds 1 after a value of 1 in positive degree")
            }
            SequenceViolation::MacaulayBound { index, value, limit } => write!(
                f,
                "h({index}) = {value} exceeds the Macaulay bound {limit} allowed by h({})",
                index - 1
            ),
        }
    }
}

/// Check the necessary conditions for `h` to be the Hilbert function of a
/// finite-length module: no value after a zero, no value above 1 after a 1
/// in positive degree, and Macaulay growth `h(r+1) ≤ h(r)^<r>` for `r ≥ 1`.
///
/// The step `h(0) → h(1)` is exempt from the growth bound: modules may need
/// arbitrarily many generators.  Checks run left to right and the first
/// violated condition (in the order zeros, ones, growth) is reported.
pub fn sequence_admissible(h: &[usize]) -> Result<(), SequenceViolation> {
    let mut seen_one_positive = false;
    for i in 1..h.len() {
        if h[i - 1] == 0 {
            if h[i] > 0 {
                return Err(SequenceViolation::ZerosTail { index: i });
            }
            continue;
        }
        if i >= 2 && h[i - 1] == 1 {
            seen_one_positive = true;
        }
        if seen_one_positive && h[i] > 1 {
            return Err(SequenceViolation::OnesTail { index: i });
        }
        if i >= 2 {
            let limit = macaulay_bound(h[i - 1] as u64, i - 1)
                .expect("positive value and positive index are in range");
            if (h[i] as u64) > limit {
                return Err(SequenceViolation::MacaulayBound {
                    index: i,
                    value: h[i],
                    limit,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_representation_and_bound() {
        // 10 at index 3: C(5,3) = 10, so 10^<3> = C(6,4) = 15.
        let rep = macaulay_rep(10, 3).unwrap();
        assert_eq!(rep.terms(), &[(5, 3)]);
        assert_eq!(rep.bound(), 15);
        // 4 at index 2: C(3,2) + C(1,1), bound C(4,3) + C(2,2) = 5.
        let rep = macaulay_rep(4, 2).unwrap();
        assert_eq!(rep.terms(), &[(3, 2), (1, 1)]);
        assert_eq!(rep.value(), 4);
        assert_eq!(rep.bound(), 5);
    }

    #[test]
    fn representation_shape_invariants() {
        for a in 1..200 {
            for s in 1..8 {
                let rep = macaulay_rep(a, s).unwrap();
                assert_eq!(rep.value(), a, "round trip at a={a}, s={s}");
                // Strictly decreasing tops, indices contiguous from s down.
                for pair in rep.terms().windows(2) {
                    assert!(pair[0].0 > pair[1].0);
                    assert_eq!(pair[0].1, pair[1].1 + 1);
                }
                for &(top, i) in rep.terms() {
                    assert!(top >= i as u64);
                    assert!(i >= 1);
                }
                assert_eq!(rep.terms()[0].1, s);
            }
        }
    }

    #[test]
    fn bound_corollaries() {
        // a ≤ r gives a^<r> = a; and (r+1)^<r> = r + 2.
        for r in 1..12 {
            for a in 1..=r {
                assert_eq!(macaulay_bound(a as u64, r).unwrap(), a as u64);
            }
            assert_eq!(macaulay_bound(r as u64 + 1, r).unwrap(), r as u64 + 2);
        }
    }

    #[test]
    fn bound_is_monotone_in_value() {
        for s in 1..6 {
            let mut previous = 0;
            for a in 1..300 {
                let b = macaulay_bound(a, s).unwrap();
                assert!(b >= previous, "bound monotone at a={a}, s={s}");
                previous = b;
            }
        }
    }

    #[test]
    fn growth_filter_on_sequences() {
        assert!(sequence_admissible(&[1, 3, 2, 1]).is_ok());
        assert!(sequence_admissible(&[1, 6, 1]).is_ok());
        // (1,2,4,...) needs h(2) ≤ 2^<1> = 3.
        assert_eq!(
            sequence_admissible(&[1, 2, 4, 1]),
            Err(SequenceViolation::MacaulayBound {
                index: 2,
                value: 4,
                limit: 3
            })
        );
        // h(0) → h(1) is exempt: many generators are fine.
        assert!(sequence_admissible(&[1, 17]).is_ok());
    }

    #[test]
    fn tail_lemmas() {
        assert_eq!(
            sequence_admissible(&[1, 2, 0, 1]),
            Err(SequenceViolation::ZerosTail { index: 3 })
        );
        assert_eq!(
            sequence_admissible(&[2, 1, 3]),
            Err(SequenceViolation::OnesTail { index: 2 })
        );
        // A 1 at degree 0 constrains nothing.
        assert!(sequence_admissible(&[1, 5, 3]).is_ok());
        // Ones may continue indefinitely.
        assert!(sequence_admissible(&[3, 1, 1, 1]).is_ok());
    }

    #[test]
    fn rejects_out_of_range_inputs() {
        assert_eq!(macaulay_rep(0, 3).unwrap_err(), MacaulayError::ValueOutOfRange);
        assert_eq!(macaulay_rep(5, 0).unwrap_err(), MacaulayError::IndexOutOfRange);
    }
}
