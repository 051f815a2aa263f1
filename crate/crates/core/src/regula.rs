//! Solutions of two simultaneous linear equations over the nonnegative
//! (or positive) integers:
//!
//! ```text
//! a_1 p_1 + a_2 p_2 + ... = n
//! α_1 p_1 + α_2 p_2 + ... = ν
//! ```
//!
//! The count is the coefficient of `x^n y^ν` in `Π_i 1/(1 - x^{a_i} y^{α_i})`,
//! expanded on a dense `(n+1) × (ν+1)` grid one generator at a time.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{BiPoly, Count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Unknowns range over `0, 1, 2, ...`.
    #[default]
    Nonnegative,
    /// Unknowns range over `1, 2, 3, ...`.
    Positive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem2 {
    generators: Vec<(u64, u64)>,
    targets: (u64, u64),
    mode: Mode,
}

impl LinearSystem2 {
    /// `generators[i] = (a_i, α_i)` are the coefficients of the i-th unknown.
    pub fn new(generators: Vec<(u64, u64)>, targets: (u64, u64), mode: Mode) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidSystem(
                "at least one unknown is required".into(),
            ));
        }
        if let Some(i) = generators.iter().position(|&g| g == (0, 0)) {
            return Err(Error::InvalidSystem(format!(
                "unknown #{} has coefficients (0, 0) and is unbounded",
                i + 1
            )));
        }
        Ok(Self {
            generators,
            targets,
            mode,
        })
    }

    pub fn generators(&self) -> &[(u64, u64)] {
        &self.generators
    }

    pub fn targets(&self) -> (u64, u64) {
        self.targets
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        Self {
            mode,
            ..self.clone()
        }
    }

    /// Targets of the equivalent nonnegative problem, `None` if infeasible.
    ///
    /// Positive mode substitutes `p_i = 1 + p_i'`, which lowers the targets
    /// by `(Σ a_i, Σ α_i)`.
    pub fn nonnegative_targets(&self) -> Option<(u64, u64)> {
        match self.mode {
            Mode::Nonnegative => Some(self.targets),
            Mode::Positive => {
                let (sa, sb) = self
                    .generators
                    .iter()
                    .fold((0u64, 0u64), |(x, y), &(a, b)| (x + a, y + b));
                Some((
                    self.targets.0.checked_sub(sa)?,
                    self.targets.1.checked_sub(sb)?,
                ))
            }
        }
    }

    fn offset(&self) -> u64 {
        match self.mode {
            Mode::Nonnegative => 0,
            Mode::Positive => 1,
        }
    }
}

/// Exact number of solutions under the system's mode.
pub fn rv_count_solutions(sys: &LinearSystem2) -> Count {
    let Some((n, nu)) = sys.nonnegative_targets() else {
        return Count::zero();
    };
    let mut grid = BiPoly::one(n as usize, nu as usize);
    for &(a, alpha) in &sys.generators {
        grid.mul_geometric(a as usize, alpha as usize)
            .expect("(0, 0) generators are rejected at construction");
    }
    grid.get(n as usize, nu as usize)
}

/// Explicit solutions in lexicographic order, at most `cap` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Vec<u64>>,
    /// Set when more than `cap` solutions exist.
    pub truncated: bool,
}

/// List solutions (one value per unknown) lexicographically, stopping
/// after `cap`.
///
/// A reachability table for every suffix of the generator list prunes dead
/// branches, so the work is proportional to the output plus the table.
pub fn rv_enumerate_solutions(sys: &LinearSystem2, cap: usize) -> Enumeration {
    let mut out = Enumeration {
        solutions: Vec::new(),
        truncated: false,
    };
    let Some((n, nu)) = sys.nonnegative_targets() else {
        return out;
    };
    let (n, nu) = (n as usize, nu as usize);
    let gens = &sys.generators;
    // reach[i][u][v]: generators i.. can make exactly (u, v).
    let width = nu + 1;
    let mut reach = vec![vec![false; (n + 1) * width]; gens.len() + 1];
    reach[gens.len()][0] = true;
    for i in (0..gens.len()).rev() {
        let (a, b) = (gens[i].0 as usize, gens[i].1 as usize);
        for u in 0..=n {
            for v in 0..=nu {
                let mut ok = reach[i + 1][u * width + v];
                if !ok && u >= a && v >= b {
                    ok = reach[i][(u - a) * width + (v - b)];
                }
                reach[i][u * width + v] = ok;
            }
        }
    }

    let mut current = Vec::with_capacity(gens.len());
    let offset = sys.offset();
    descend(
        gens,
        &reach,
        width,
        0,
        (n, nu),
        offset,
        &mut current,
        cap,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    gens: &[(u64, u64)],
    reach: &[Vec<bool>],
    width: usize,
    i: usize,
    (u, v): (usize, usize),
    offset: u64,
    current: &mut Vec<u64>,
    cap: usize,
    out: &mut Enumeration,
) {
    if out.truncated {
        return;
    }
    if i == gens.len() {
        if out.solutions.len() == cap {
            out.truncated = true;
        } else {
            out.solutions.push(current.clone());
        }
        return;
    }
    let (a, b) = (gens[i].0 as usize, gens[i].1 as usize);
    let mut p = 0usize;
    while let (Some(ru), Some(rv)) = (u.checked_sub(p * a), v.checked_sub(p * b)) {
        if reach[i + 1][ru * width + rv] {
            current.push(p as u64 + offset);
            descend(
                gens,
                reach,
                width,
                i + 1,
                (ru, rv),
                offset,
                current,
                cap,
                out,
            );
            current.pop();
            if out.truncated {
                return;
            }
        }
        p += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(gens: &[(u64, u64)], targets: (u64, u64)) -> LinearSystem2 {
        LinearSystem2::new(gens.to_vec(), targets, Mode::Nonnegative).unwrap()
    }

    #[test]
    fn rejects_malformed() {
        assert!(LinearSystem2::new(vec![], (1, 1), Mode::Nonnegative).is_err());
        assert!(LinearSystem2::new(vec![(1, 1), (0, 0)], (1, 1), Mode::Nonnegative).is_err());
    }

    #[test]
    fn single_generator() {
        assert_eq!(rv_count_solutions(&sys(&[(1, 1)], (3, 3))), 1.into());
        assert_eq!(rv_count_solutions(&sys(&[(1, 1)], (3, 4))), 0.into());
        assert_eq!(
            rv_enumerate_solutions(&sys(&[(1, 1)], (3, 3)), 10).solutions,
            vec![vec![3]]
        );
    }

    #[test]
    fn decoupled() {
        let s = sys(&[(1, 0), (0, 1)], (2, 3));
        assert_eq!(rv_count_solutions(&s), 1.into());
        assert_eq!(rv_enumerate_solutions(&s, 10).solutions, vec![vec![2, 3]]);
    }

    #[test]
    fn positive_mode_shift() {
        let s = LinearSystem2::new(vec![(1, 1)], (3, 3), Mode::Positive).unwrap();
        assert_eq!(rv_count_solutions(&s), 1.into());
        assert_eq!(rv_enumerate_solutions(&s, 5).solutions, vec![vec![3]]);
        let s = LinearSystem2::new(vec![(2, 1), (3, 1)], (4, 1), Mode::Positive).unwrap();
        assert_eq!(s.nonnegative_targets(), None);
        assert_eq!(rv_count_solutions(&s), 0.into());
        assert!(rv_enumerate_solutions(&s, 5).solutions.is_empty());
    }

    #[test]
    fn enumeration_order_and_cap() {
        // p + q = 3 with no second constraint beyond 0 = 0.
        let s = sys(&[(1, 0), (1, 0)], (3, 0));
        let all = rv_enumerate_solutions(&s, 100);
        assert_eq!(
            all.solutions,
            vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]
        );
        assert!(!all.truncated);
        let two = rv_enumerate_solutions(&s, 2);
        assert_eq!(two.solutions, vec![vec![0, 3], vec![1, 2]]);
        assert!(two.truncated);
        let exact = rv_enumerate_solutions(&s, 4);
        assert!(!exact.truncated);
        assert_eq!(rv_count_solutions(&s), 4.into());
    }

    #[test]
    fn classic_coins_and_heads() {
        // 3p + 2q + r = 20 and p + q + r = 10 force q = 10 - 2p, r = p, p in 0..=5.
        let s = sys(&[(3, 1), (2, 1), (1, 1)], (20, 10));
        let e = rv_enumerate_solutions(&s, 1000);
        assert_eq!(Count::from(e.solutions.len()), rv_count_solutions(&s));
        for sol in &e.solutions {
            assert_eq!(3 * sol[0] + 2 * sol[1] + sol[2], 20);
            assert_eq!(sol[0] + sol[1] + sol[2], 10);
        }
        assert_eq!(e.solutions.len(), 6);
    }
}
