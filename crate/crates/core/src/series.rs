//! Dense polynomial and truncated power-series arithmetic over exact integers.
//!
//! [`IntPoly`] is univariate; the exponent of the formal variable is the
//! index into the coefficient vector. A polynomial may carry an inclusive
//! truncation bound, in which case it stands for a power series known only
//! up to that exponent. Arithmetic between two truncated values with
//! different bounds is rejected instead of being silently re-truncated.
//!
//! [`BiPoly`] is a bounded grid in two formal variables, enough to expand
//! products of factors `1/(1 - x^a y^b)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact integer used for every coefficient and count.
pub type Count = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<Count>,
    bound: Option<usize>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![Count::one()])
    }

    /// Untruncated polynomial from its coefficients, lowest exponent first.
    pub fn from_coeffs(coeffs: Vec<Count>) -> Self {
        let mut p = Self {
            coeffs,
            bound: None,
        };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Count::from(c)).collect())
    }

    /// `c * x^e`.
    pub fn monomial(e: usize, c: impl Into<Count>) -> Self {
        let mut coeffs = vec![Count::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Sum of `x^e` over the given exponents; repeated exponents accumulate.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut coeffs: Vec<Count> = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Count::zero());
            }
            coeffs[e] += 1;
        }
        Self::from_coeffs(coeffs)
    }

    /// Drop every exponent above `bound` and remember the bound.
    ///
    /// Fails if `self` is already truncated below `bound`.
    pub fn truncate(mut self, bound: usize) -> Result<Self> {
        let bound = target_bound(self.bound, Some(bound))?.expect("bound requested");
        self.coeffs.truncate(bound + 1);
        self.bound = Some(bound);
        self.trim();
        Ok(self)
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients up to the degree; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Count] {
        &self.coeffs
    }

    /// Coefficient of `x^e`; zero for negative `e` or `e` past the degree.
    pub fn coeff(&self, e: i64) -> Count {
        usize::try_from(e)
            .ok()
            .and_then(|e| self.coeffs.get(e))
            .cloned()
            .unwrap_or_default()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let bound = combine_bounds(self.bound, other.bound)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Count::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = Self { coeffs, bound };
        p.trim();
        Ok(p)
    }

    /// Exact product, optionally truncated at `bound` (inclusive).
    pub fn checked_mul(&self, other: &Self, bound: Option<usize>) -> Result<Self> {
        let bound = target_bound(combine_bounds(self.bound, other.bound)?, bound)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self {
                coeffs: Vec::new(),
                bound,
            });
        }
        // Outer loop over the operand with fewer nonzero terms.
        let (sparse, dense) = if nonzeros(&self.coeffs) <= nonzeros(&other.coeffs) {
            (self, other)
        } else {
            (other, self)
        };
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = bound.map_or(full, |b| full.min(b + 1));
        let mut coeffs = vec![Count::zero(); len];
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in dense.coeffs.iter().take(len - i).enumerate() {
                if a.is_one() {
                    coeffs[i + j] += b;
                } else {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let mut p = Self { coeffs, bound };
        p.trim();
        Ok(p)
    }

    /// `self^k`, with `self^0 = 1`, optionally truncated at `bound`.
    pub fn pow(&self, k: u32, bound: Option<usize>) -> Result<Self> {
        let bound = target_bound(self.bound, bound)?;
        let mut acc = match bound {
            Some(b) => Self::one().truncate(b)?,
            None => Self::one(),
        };
        for _ in 0..k {
            acc = self.checked_mul(&acc, bound)?;
        }
        Ok(acc)
    }

    /// Power series `self / (1 - x)^k` up to `bound`, computed as `k`
    /// successive running prefix sums of the coefficients.
    pub fn div_by_one_minus_x_pow(&self, k: u32, bound: usize) -> Result<Self> {
        let bound = target_bound(self.bound, Some(bound))?.expect("bound requested");
        let mut coeffs: Vec<Count> = (0..=bound as i64).map(|e| self.coeff(e)).collect();
        for _ in 0..k {
            let mut running = Count::zero();
            for c in coeffs.iter_mut() {
                running += &*c;
                *c = running.clone();
            }
        }
        let mut p = Self {
            coeffs,
            bound: Some(bound),
        };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn nonzeros(coeffs: &[Count]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

fn combine_bounds(left: Option<usize>, right: Option<usize>) -> Result<Option<usize>> {
    match (left, right) {
        (Some(l), Some(r)) if l != r => Err(Error::BoundMismatch {
            left: Some(l),
            right: Some(r),
        }),
        _ => Ok(left.or(right)),
    }
}

/// Bound of a result whose operands are known up to `operand`, when the
/// caller asks for `requested`. Asking for more than the operands know fails.
fn target_bound(operand: Option<usize>, requested: Option<usize>) -> Result<Option<usize>> {
    match (operand, requested) {
        (Some(o), Some(r)) if r > o => Err(Error::BoundMismatch {
            left: Some(o),
            right: Some(r),
        }),
        (o, None) => Ok(o),
        (_, r) => Ok(r),
    }
}

/// Bivariate grid of coefficients, `grid[i][j]` for `x^i y^j`, with both
/// exponents bounded inclusively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    grid: Vec<Count>,
    bound_x: usize,
    bound_y: usize,
}

impl BiPoly {
    /// The constant `1`, truncated at `(bound_x, bound_y)`.
    pub fn one(bound_x: usize, bound_y: usize) -> Self {
        let mut grid = vec![Count::zero(); (bound_x + 1) * (bound_y + 1)];
        grid[0] = Count::one();
        Self {
            grid,
            bound_x,
            bound_y,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.bound_x, self.bound_y)
    }

    /// Coefficient of `x^i y^j`; zero outside the grid.
    pub fn get(&self, i: usize, j: usize) -> Count {
        if i > self.bound_x || j > self.bound_y {
            return Count::zero();
        }
        self.grid[self.index(i, j)].clone()
    }

    /// Multiply in place by `1 / (1 - x^a y^b)`.
    ///
    /// `(a, b)` must not be `(0, 0)`; that factor has no power series.
    pub fn mul_geometric(&mut self, a: usize, b: usize) -> Result<()> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidSystem(
                "factor 1/(1 - x^0 y^0) has no series expansion".into(),
            ));
        }
        // Ascending order lets each cell see already-updated predecessors,
        // which accounts for every power of the geometric factor.
        for i in a..=self.bound_x {
            for j in b..=self.bound_y {
                let src = self.index(i - a, j - b);
                if self.grid[src].is_zero() {
                    continue;
                }
                let add = self.grid[src].clone();
                let dst = self.index(i, j);
                self.grid[dst] += add;
            }
        }
        Ok(())
    }

    /// The coefficient of `y^j`, as a series in `x` truncated at the x bound.
    pub fn x_series_at(&self, j: usize) -> IntPoly {
        let coeffs = (0..=self.bound_x).map(|i| self.get(i, j)).collect();
        let mut p = IntPoly::from_coeffs(coeffs);
        p.bound = Some(self.bound_x);
        p
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.bound_y + 1) + j
    }
}
