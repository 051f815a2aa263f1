//! Polygonal-number series and representability checks.
//!
//! The series `S = Σ_j x^{p_j}` over the m-gonal numbers `p_j` (including
//! `p_0 = 0`) raised to the k-th power counts ordered k-tuples of polygonal
//! numbers by their sum. Every coefficient up to a bound being positive
//! means every number up to that bound is a sum of at most k of them.
//!
//! The unordered view expands `Π_p 1/(1 - x^p z)` and reads the
//! coefficient of `z^k`, which counts multisets of exactly k parts.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{BiPoly, Count, IntPoly};

/// `j`-th `m`-gonal number, `((m-2) j^2 - (m-4) j) / 2`.
///
/// For `m = 3` this is `j(j+1)/2`, for `m = 4` it is `j^2`.
pub fn polygonal_number(sides: u64, j: u64) -> u64 {
    assert!(sides >= 3, "polygons have at least three sides");
    let (m, j) = (i128::from(sides), i128::from(j));
    let twice = (m - 2) * j * j - (m - 4) * j;
    u64::try_from(twice / 2).expect("polygonal number fits in u64")
}

/// m-gonal numbers `0, 1, m, ...` not exceeding `bound`.
pub fn polygonal_numbers(sides: u64, bound: u64) -> impl Iterator<Item = u64> {
    (0u64..)
        .map(move |j| polygonal_number(sides, j))
        .take_while(move |&p| p <= bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonalSpec {
    sides: u64,
    bound: usize,
}

impl PolygonalSpec {
    pub fn new(sides: u64, bound: usize) -> Result<Self> {
        if sides < 3 {
            return Err(Error::InvalidQuery(format!(
                "polygonal numbers need at least 3 sides, got {sides}"
            )));
        }
        Ok(Self { sides, bound })
    }

    pub fn sides(&self) -> u64 {
        self.sides
    }

    pub fn bound(&self) -> usize {
        self.bound
    }
}

/// `Σ x^{p_j}` over every polygonal `p_j <= bound`, truncated at `bound`.
pub fn polygonal_series(spec: &PolygonalSpec) -> IntPoly {
    IntPoly::from_exponents(polygonal_numbers(spec.sides, spec.bound as u64).map(|p| p as usize))
        .truncate(spec.bound)
        .expect("fresh polynomial accepts any bound")
}

/// `polygonal_series^k` truncated at `bound`: the coefficient of `x^N` is the
/// number of ordered k-tuples of m-gonal numbers (0 allowed) summing to `N`.
pub fn ordered_representation_counts(sides: u64, k: u32, bound: usize) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::InvalidQuery("power must be at least 1".into()));
    }
    let series = polygonal_series(&PolygonalSpec::new(sides, bound)?);
    series.pow(k, None)
}

/// Outcome of a positivity scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Every exponent in the scanned range has a positive coefficient.
    Complete,
    /// Smallest exponent whose coefficient is not positive.
    FirstGap(usize),
}

/// Smallest `0 <= e <= upto` whose coefficient in `p` is not positive.
///
/// `upto` may not exceed the truncation bound of `p`, since coefficients
/// past it are unknown.
pub fn check_all_positive(p: &IntPoly, upto: usize) -> Result<Coverage> {
    if let Some(bound) = p.bound() {
        if upto > bound {
            return Err(Error::BoundMismatch {
                left: Some(bound),
                right: Some(upto),
            });
        }
    }
    let gap = (0..=upto).find(|&e| p.coeff(e as i64) <= Count::zero());
    Ok(gap.map_or(Coverage::Complete, Coverage::FirstGap))
}

/// Strictly ascending set of allowed part values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    parts: Vec<u64>,
}

impl PartSet {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidQuery(
                "parts must be strictly ascending".into(),
            ));
        }
        Ok(Self { parts })
    }

    /// m-gonal numbers up to `bound`, including 0.
    pub fn polygonal(sides: u64, bound: u64) -> Result<Self> {
        PolygonalSpec::new(sides, bound as usize)?;
        Self::new(polygonal_numbers(sides, bound).collect())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    fn expansion(&self, k: usize, bound: usize) -> BiPoly {
        let mut grid = BiPoly::one(bound, k);
        for &p in self.parts.iter().take_while(|&&p| p <= bound as u64) {
            grid.mul_geometric(p as usize, 1)
                .expect("z exponent is 1, never (0, 0)");
        }
        grid
    }
}

/// Number of multisets of exactly `k` values from `parts` summing to `N`:
/// the coefficient of `x^N z^k` in `Π_p 1/(1 - x^p z)`.
///
/// With 0 in `parts` this is the number of ways to write `N` with at most
/// `k` nonzero parts.
pub fn count_partitions_with_parts(parts: &PartSet, k: usize, sum: u64) -> Count {
    parts.expansion(k, sum as usize).get(sum as usize, k)
}

/// [`count_partitions_with_parts`] for every `N <= bound` at once.
pub fn unordered_representation_counts(parts: &PartSet, k: usize, bound: usize) -> IntPoly {
    parts.expansion(k, bound).x_series_at(k)
}
