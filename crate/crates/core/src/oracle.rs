//! Exhaustive enumerators used as ground truth at small scale.
//!
//! These walk the full search space and share no code with the engines
//! they check. A hard outcome budget turns accidental exponential blowups
//! into [`Error::BudgetExceeded`].

use crate::error::{Error, Result};
use crate::heterogeneous::DicePool;
use crate::polygonal::PartSet;
use crate::regula::{LinearSystem2, Mode};
use crate::series::Count;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn space(radices: impl IntoIterator<Item = u128>) -> u128 {
    radices
        .into_iter()
        .fold(1u128, |acc, r| acc.saturating_mul(r))
}

/// Advance a mixed-radix counter; false once it wraps to all zeros.
fn odometer_step(digits: &mut [usize], radices: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// Count face choices (one per die, order matters) whose marks sum to `N`.
pub fn brute_dice(pool: &DicePool, sum: u64, budget: u128) -> Result<Count> {
    let radices: Vec<usize> = pool.dice().iter().map(|d| d.face_count()).collect();
    check_budget(space(radices.iter().map(|&r| r as u128)), budget)?;
    let mut digits = vec![0usize; radices.len()];
    let mut hits = 0u64;
    loop {
        let total: u64 = pool
            .dice()
            .iter()
            .zip(&digits)
            .map(|(die, &d)| die.marks()[d])
            .sum();
        if total == sum {
            hits += 1;
        }
        if !odometer_step(&mut digits, &radices) {
            break;
        }
    }
    Ok(Count::from(hits))
}

/// Count k-tuples (`ordered`) or k-multisets of values from `parts`
/// summing to `N`.
pub fn brute_partitions(
    parts: &PartSet,
    k: usize,
    sum: u64,
    ordered: bool,
    budget: u128,
) -> Result<Count> {
    let usable: Vec<u64> = parts
        .parts()
        .iter()
        .copied()
        .filter(|&p| p <= sum)
        .collect();
    if k == 0 {
        return Ok(Count::from(u8::from(sum == 0)));
    }
    if usable.is_empty() {
        return Ok(Count::from(0));
    }
    let radices = vec![usable.len(); k];
    check_budget(space(radices.iter().map(|&r| r as u128)), budget)?;
    let mut digits = vec![0usize; k];
    let mut hits = 0u64;
    loop {
        let nondecreasing = digits.windows(2).all(|w| w[0] <= w[1]);
        if ordered || nondecreasing {
            let total: u64 = digits.iter().map(|&d| usable[d]).sum();
            if total == sum {
                hits += 1;
            }
        }
        if !odometer_step(&mut digits, &radices) {
            break;
        }
    }
    Ok(Count::from(hits))
}

/// Count assignments satisfying both equations by nested bounded loops.
///
/// Each unknown is bounded by `n / a_i` or `ν / α_i` (whichever coefficient
/// is nonzero, the tighter one if both are).
pub fn brute_regula(sys: &LinearSystem2, budget: u128) -> Result<Count> {
    let (n, nu) = sys.targets();
    let low = match sys.mode() {
        Mode::Nonnegative => 0,
        Mode::Positive => 1,
    };
    let highs: Vec<u64> = sys
        .generators()
        .iter()
        .map(|&(a, b)| {
            let by_a = (a > 0).then(|| n / a);
            let by_b = (b > 0).then(|| nu / b);
            match (by_a, by_b) {
                (Some(x), Some(y)) => x.min(y),
                (x, y) => x.or(y).expect("(0, 0) generators are rejected"),
            }
        })
        .collect();
    if highs.iter().any(|&h| h < low) {
        return Ok(Count::from(0));
    }
    let radices: Vec<usize> = highs.iter().map(|&h| (h - low + 1) as usize).collect();
    check_budget(space(radices.iter().map(|&r| r as u128)), budget)?;
    let mut digits = vec![0usize; radices.len()];
    let mut hits = 0u64;
    loop {
        let (mut x, mut y) = (0u64, 0u64);
        for (&(a, b), &d) in sys.generators().iter().zip(&digits) {
            let p = low + d as u64;
            x += a * p;
            y += b * p;
        }
        if (x, y) == (n, nu) {
            hits += 1;
        }
        if !odometer_step(&mut digits, &radices) {
            break;
        }
    }
    Ok(Count::from(hits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heterogeneous::MarkedDie;

    #[test]
    fn dice_examples() {
        let two = DicePool::repeated(MarkedDie::standard(6).unwrap(), 2).unwrap();
        assert_eq!(brute_dice(&two, 7, DEFAULT_BUDGET).unwrap(), 6.into());
        let pair = DicePool::repeated(MarkedDie::new(vec![3, 4]).unwrap(), 2).unwrap();
        assert_eq!(brute_dice(&pair, 7, DEFAULT_BUDGET).unwrap(), 2.into());
        let one = DicePool::repeated(MarkedDie::standard(6).unwrap(), 1).unwrap();
        assert_eq!(brute_dice(&one, 0, DEFAULT_BUDGET).unwrap(), 0.into());
    }

    #[test]
    fn budget_enforced() {
        let pool = DicePool::repeated(MarkedDie::standard(10).unwrap(), 8).unwrap();
        assert!(matches!(
            brute_dice(&pool, 40, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded {
                needed: 100_000_000,
                ..
            })
        ));
        let tri = PartSet::polygonal(3, 100).unwrap();
        assert!(brute_partitions(&tri, 6, 100, true, 1000).is_err());
    }

    #[test]
    fn partition_examples() {
        let tri = PartSet::polygonal(3, 100).unwrap();
        assert_eq!(
            brute_partitions(&tri, 3, 5, true, DEFAULT_BUDGET).unwrap(),
            3.into()
        );
        assert_eq!(
            brute_partitions(&tri, 3, 5, false, DEFAULT_BUDGET).unwrap(),
            1.into()
        );
        assert_eq!(
            brute_partitions(&tri, 1, 6, true, DEFAULT_BUDGET).unwrap(),
            1.into()
        );
        assert_eq!(
            brute_partitions(&tri, 1, 7, false, DEFAULT_BUDGET).unwrap(),
            0.into()
        );
        assert_eq!(
            brute_partitions(&tri, 0, 0, false, DEFAULT_BUDGET).unwrap(),
            1.into()
        );
    }

    #[test]
    fn regula_examples() {
        let s = LinearSystem2::new(vec![(1, 1)], (3, 3), Mode::Nonnegative).unwrap();
        assert_eq!(brute_regula(&s, DEFAULT_BUDGET).unwrap(), 1.into());
        let s = LinearSystem2::new(vec![(2, 0), (0, 2)], (4, 6), Mode::Nonnegative).unwrap();
        assert_eq!(brute_regula(&s, DEFAULT_BUDGET).unwrap(), 1.into());
        let s = LinearSystem2::new(vec![(2, 1), (3, 1)], (4, 1), Mode::Positive).unwrap();
        assert_eq!(brute_regula(&s, DEFAULT_BUDGET).unwrap(), 0.into());
    }
}
