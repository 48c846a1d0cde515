use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Sub};

/// A non-negative edge weight or distance; `+∞` marks absence.
///
/// Edge weights of an input graph are strictly positive and finite; distances
/// may be zero (from a vertex to itself) or `+∞` (no walk exists).
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub const ZERO: Weight = Weight(0.0);
    pub const INFINITY: Weight = Weight(f64::INFINITY);

    /// Wraps `v`, rejecting NaN and negative values.
    pub fn new(v: f64) -> Option<Weight> {
        (v >= 0.0).then_some(Weight(v))
    }

    /// Wraps a value known to be non-negative and not NaN.
    #[inline]
    pub(crate) const fn raw(v: f64) -> Weight {
        Weight(v)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    #[inline]
    pub fn double(self) -> Weight {
        Weight(self.0 + self.0)
    }
}

impl Eq for Weight {}

// agrees with the derived `PartialOrd`: weights are never NaN
#[allow(clippy::derive_ord_xor_partial_ord)]
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("weights are never NaN")
    }
}

impl Add for Weight {
    type Output = Weight;
    #[inline]
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

/// Saturating at zero is not needed: callers only subtract an edge weight
/// from a beer distance over the same edge, which is never smaller.
impl Sub for Weight {
    type Output = Weight;
    #[inline]
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Weight {
    /// `inf` for `+∞`, otherwise the shortest round-trip decimal (`2.0`, `0.75`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{:?}", self.0)
        }
    }
}

impl From<Weight> for f64 {
    fn from(w: Weight) -> f64 {
        w.0
    }
}

/// Relative comparison used by the verification harness: `|a-b| <= tol*max(1,|a|,|b|)`,
/// with `+∞` equal only to `+∞`.
pub fn approx_eq(a: Weight, b: Weight, tol: f64) -> bool {
    match (a.is_finite(), b.is_finite()) {
        (false, false) => true,
        (true, true) => {
            let scale = 1f64.max(a.0.abs()).max(b.0.abs());
            (a.0 - b.0).abs() <= tol * scale
        }
        _ => false,
    }
}
