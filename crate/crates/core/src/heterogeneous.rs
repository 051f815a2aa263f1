//! Pools of unlike dice.
//!
//! Each die is a multiset of nonnegative face marks. The general engine
//! multiplies the per-die generating polynomials; dice with consecutive
//! faces `1..=m_i` also admit a closed form, expanding the numerator
//! `x^k Π (1 - x^{m_i})` and dividing by `(1 - x)^k` through binomials.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::homogeneous::binomial;
use crate::series::{Count, IntPoly};

/// One die: a nonempty multiset of face marks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDie {
    marks: Vec<u64>,
}

impl MarkedDie {
    pub fn new(marks: Vec<u64>) -> Result<Self> {
        if marks.is_empty() {
            return Err(Error::InvalidDie("a die needs at least one face".into()));
        }
        Ok(Self { marks })
    }

    /// Die with faces `lo, lo+1, ..., hi`.
    pub fn range(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidDie(format!("empty face range {lo}..{hi}")));
        }
        Self::new((lo..=hi).collect())
    }

    /// Standard die with faces `1..=m`.
    pub fn standard(m: u64) -> Result<Self> {
        Self::range(1, m)
    }

    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    pub fn face_count(&self) -> usize {
        self.marks.len()
    }

    pub fn max_mark(&self) -> u64 {
        *self.marks.iter().max().expect("nonempty")
    }

    /// `Some(m)` when the faces are exactly `1..=m`, each once.
    pub fn standard_faces(&self) -> Option<u64> {
        let mut sorted = self.marks.clone();
        sorted.sort_unstable();
        sorted
            .iter()
            .enumerate()
            .all(|(i, &mark)| mark == i as u64 + 1)
            .then_some(sorted.len() as u64)
    }

    fn polynomial(&self) -> IntPoly {
        IntPoly::from_exponents(self.marks.iter().map(|&m| m as usize))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicePool {
    dice: Vec<MarkedDie>,
}

impl DicePool {
    pub fn new(dice: Vec<MarkedDie>) -> Result<Self> {
        if dice.is_empty() {
            return Err(Error::InvalidDie("a pool needs at least one die".into()));
        }
        Ok(Self { dice })
    }

    /// `n` copies of one die.
    pub fn repeated(die: MarkedDie, n: usize) -> Result<Self> {
        Self::new(vec![die; n])
    }

    pub fn dice(&self) -> &[MarkedDie] {
        &self.dice
    }

    pub fn len(&self) -> usize {
        self.dice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dice.is_empty()
    }

    pub fn max_sum(&self) -> u64 {
        self.dice.iter().map(MarkedDie::max_mark).sum()
    }

    /// Number of distinct outcomes, the product of face counts.
    pub fn outcomes(&self) -> Count {
        self.dice
            .iter()
            .map(|d| Count::from(d.face_count()))
            .product()
    }

    /// Face counts when every die is standard (`1..=m_i`).
    pub fn standard_face_counts(&self) -> Option<Vec<u64>> {
        self.dice.iter().map(MarkedDie::standard_faces).collect()
    }

    fn generating_polynomial(&self, bound: Option<usize>) -> IntPoly {
        self.dice.iter().fold(IntPoly::one(), |acc, die| {
            acc.checked_mul(&die.polynomial(), bound)
                .expect("bounds are consistent")
        })
    }
}

/// Coefficient of `x^N` in `Π_die Σ_mark x^mark`. Repeated marks on a die
/// count once per face.
pub fn hetero_count_product(pool: &DicePool, sum: u64) -> Count {
    if sum > pool.max_sum() {
        return Count::zero();
    }
    pool.generating_polynomial(Some(sum as usize))
        .coeff(sum as i64)
}

/// Every sum with a nonzero count, ascending.
pub fn hetero_distribution(pool: &DicePool) -> Vec<(u64, Count)> {
    pool.generating_polynomial(None)
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as u64, c.clone()))
        .collect()
}

/// Signed monomials `±x^e` of an expanded product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedExponentList {
    terms: Vec<(i8, u64)>,
}

impl SignedExponentList {
    /// Expand `x^shift Π (1 - x^{m_i})` term by term: `2^k` entries, no merging.
    pub fn expand(face_counts: &[u64], shift: u64) -> Self {
        let mut terms = vec![(1i8, shift)];
        for &m in face_counts {
            let negated: Vec<_> = terms.iter().map(|&(s, e)| (-s, e + m)).collect();
            terms.extend(negated);
        }
        Self { terms }
    }

    /// Combine equal exponents, dropping the ones that cancel. Result is
    /// sorted by exponent and carries integer multiplicities.
    pub fn merged(&self) -> Vec<(i64, u64)> {
        let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
        for &(s, e) in &self.terms {
            *acc.entry(e).or_default() += i64::from(s);
        }
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(e, c)| (c, e))
            .collect()
    }

    pub fn terms(&self) -> &[(i8, u64)] {
        &self.terms
    }
}

/// Count for `k` standard dice with `face_counts[i]` faces, by
/// `Σ sign · C(N - e + k - 1, k - 1)` over numerator terms with `e <= N`.
pub fn hetero_count_closed_form(face_counts: &[u64], sum: u64) -> Result<Count> {
    if face_counts.is_empty() {
        return Err(Error::InvalidDie("a pool needs at least one die".into()));
    }
    if face_counts.contains(&0) {
        return Err(Error::InvalidDie("a die needs at least one face".into()));
    }
    let k = face_counts.len() as u64;
    let numerator = SignedExponentList::expand(face_counts, k);
    let mut total = Count::zero();
    for (mult, e) in numerator.merged() {
        if e > sum {
            break;
        }
        total += binomial(sum - e + k - 1, k as i64 - 1) * mult;
    }
    Ok(total)
}
