//! Number of ordered ways `n` identical dice with faces `1..=m` sum to `N`.
//!
//! Four engines compute the same quantity by unrelated routes:
//!
//! - [`count_poly`]: coefficient of `x^N` in `(x + x^2 + ... + x^m)^n`
//! - [`count_table_add_die`]: table built by adding one die at a time
//! - [`count_lambda_recurrence`]: same-dice recurrence in the offset `λ = N - n`
//! - [`count_closed_form`]: alternating binomial sum
//!
//! Agreement between them (and with [`crate::oracle::brute_dice`]) is the
//! main correctness check of the crate.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{Count, IntPoly};

/// `n` dice with faces `1..=m`, target sum `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomoQuery {
    dice: u32,
    faces: u32,
    sum: u64,
}

impl HomoQuery {
    pub fn new(dice: u32, faces: u32, sum: u64) -> Result<Self> {
        if dice == 0 {
            return Err(Error::InvalidQuery(
                "number of dice must be at least 1".into(),
            ));
        }
        if faces == 0 {
            return Err(Error::InvalidQuery(
                "number of faces must be at least 1".into(),
            ));
        }
        Ok(Self { dice, faces, sum })
    }

    pub fn dice(&self) -> u32 {
        self.dice
    }

    pub fn faces(&self) -> u32 {
        self.faces
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// Largest reachable sum, `m * n`.
    pub fn max_sum(&self) -> u64 {
        u64::from(self.dice) * u64::from(self.faces)
    }

    /// Offset above the minimum sum, `N - n`; negative below the support.
    pub fn lambda(&self) -> i64 {
        self.sum as i64 - i64::from(self.dice)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Poly,
    AddDie,
    Lambda,
    Closed,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Poly, Engine::AddDie, Engine::Lambda, Engine::Closed];

    pub fn name(&self) -> &'static str {
        match self {
            Engine::Poly => "poly",
            Engine::AddDie => "add-die",
            Engine::Lambda => "lambda",
            Engine::Closed => "closed",
        }
    }

    pub fn count(&self, q: &HomoQuery) -> Result<Count> {
        match self {
            Engine::Poly => Ok(count_poly(q)),
            Engine::AddDie => Ok(count_add_die(q)),
            Engine::Lambda => count_lambda_recurrence(q),
            Engine::Closed => Ok(count_closed_form(q)),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown engine `{s}`")))
    }
}

/// Coefficient of `x^N` in `(x + ... + x^m)^n`.
pub fn count_poly(q: &HomoQuery) -> Count {
    if q.sum < u64::from(q.dice) || q.sum > q.max_sum() {
        return Count::zero();
    }
    let die = IntPoly::from_exponents(1..=q.faces as usize);
    die.pow(q.dice, Some(q.sum as usize))
        .expect("untruncated base accepts any bound")
        .coeff(q.sum as i64)
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
///
/// Multiplicative formula with a running exact division, so no factorial
/// table is ever materialized.
pub fn binomial(a: u64, b: i64) -> Count {
    if b < 0 || b as u64 > a {
        return Count::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = Count::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Alternating binomial sum
/// `Σ_j (-1)^j C(n, j) C(n + λ - jm - 1, λ - jm)` over `j` with `λ - jm >= 0`.
pub fn count_closed_form(q: &HomoQuery) -> Count {
    let lambda = q.lambda();
    if lambda < 0 {
        return Count::zero();
    }
    let n = i64::from(q.dice);
    let m = i64::from(q.faces);
    let mut total = Count::zero();
    let mut j = 0i64;
    while j <= n && lambda - j * m >= 0 {
        let rest = lambda - j * m;
        let term = binomial(n as u64, j) * binomial((n + rest - 1) as u64, rest);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        j += 1;
    }
    debug_assert!(!total.is_negative());
    total
}

/// One step of the λ-recurrence: `numerator / λ = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaStep {
    pub lambda: u64,
    pub numerator: Count,
    pub value: Count,
}

/// Every step of the λ-recurrence from `λ = 1` up to the query's offset.
///
/// With `v(λ) = (n + λ)^(n)`, `v(0) = 1` and `v(λ) = 0` for `λ < 0`:
///
/// ```text
/// λ v(λ) = (n+λ-1) v(λ-1) - (mn+m-λ) v(λ-m) + (mn-n+m+1-λ) v(λ-m-1)
/// ```
///
/// Intermediate right-hand sides may be negative; each must be divisible
/// by `λ` exactly, otherwise [`Error::Indivisible`] is returned.
pub fn lambda_recurrence_trace(q: &HomoQuery) -> Result<Vec<LambdaStep>> {
    let lambda = q.lambda();
    if lambda <= 0 {
        return Ok(Vec::new());
    }
    let n = i64::from(q.dice);
    let m = i64::from(q.faces);
    let mut values: Vec<Count> = Vec::with_capacity(lambda as usize + 1);
    values.push(Count::one());
    let mut steps = Vec::with_capacity(lambda as usize);
    let at = |values: &[Count], l: i64| -> Count {
        if l < 0 {
            Count::zero()
        } else {
            values[l as usize].clone()
        }
    };
    for l in 1..=lambda {
        let numerator = Count::from(n + l - 1) * at(&values, l - 1)
            - Count::from(m * n + m - l) * at(&values, l - m)
            + Count::from(m * n - n + m + 1 - l) * at(&values, l - m - 1);
        let (value, rem) = numerator.div_rem(&Count::from(l));
        if !rem.is_zero() {
            return Err(Error::Indivisible {
                lambda: l as u64,
                numerator: numerator.to_string(),
            });
        }
        values.push(value.clone());
        steps.push(LambdaStep {
            lambda: l as u64,
            numerator,
            value,
        });
    }
    Ok(steps)
}

pub fn count_lambda_recurrence(q: &HomoQuery) -> Result<Count> {
    let lambda = q.lambda();
    if lambda < 0 {
        return Ok(Count::zero());
    }
    let value = lambda_recurrence_trace(q)?
        .pop()
        .map_or_else(Count::one, |s| s.value);
    assert!(
        !value.is_negative(),
        "λ-recurrence produced a negative count"
    );
    Ok(value)
}

fn count_add_die(q: &HomoQuery) -> Count {
    count_table_add_die(q.faces, q.dice, q.sum).get(q.sum, q.dice)
}

/// Table of counts for `1..=n_max` dice and sums `0..=sum_max`, faces `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    faces: u32,
    n_max: u32,
    sum_max: u64,
    // rows[N][n - 1]
    rows: Vec<Vec<Count>>,
}

impl CountTable {
    pub fn faces(&self) -> u32 {
        self.faces
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn sum_max(&self) -> u64 {
        self.sum_max
    }

    /// Count for sum `N` with `n` dice; zero anywhere outside the table.
    pub fn get(&self, sum: u64, dice: u32) -> Count {
        if dice == 0 || dice > self.n_max || sum > self.sum_max {
            return Count::zero();
        }
        self.rows[sum as usize][dice as usize - 1].clone()
    }

    /// Counts for sum `N`, one per `n = 1..=n_max`.
    pub fn row(&self, sum: u64) -> &[Count] {
        &self.rows[sum as usize]
    }

    /// Sum of column `n` over every tabulated `N`.
    pub fn column_sum(&self, dice: u32) -> Count {
        (0..=self.sum_max).map(|s| self.get(s, dice)).sum()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_schema()).expect("table serializes")
    }

    /// JSON form with counts as decimal strings, one row per `N = 1..=N_max`.
    /// Keys are emitted in sorted order, so parsing and re-emitting is stable.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("table serializes")
    }

    /// CSV with header `N,n=1,...,n=n_max` and one row per `N = 1..=N_max`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N");
        for n in 1..=self.n_max {
            out.push_str(&format!(",n={n}"));
        }
        out.push('\n');
        for sum in 1..=self.sum_max {
            out.push_str(&sum.to_string());
            for c in self.row(sum) {
                out.push(',');
                out.push_str(&c.to_string());
            }
            out.push('\n');
        }
        out
    }

    fn to_schema(&self) -> TableJson {
        TableJson {
            m: self.faces,
            n_max: self.n_max,
            sum_max: self.sum_max,
            rows: (1..=self.sum_max)
                .map(|sum| TableRowJson {
                    sum,
                    counts: self.row(sum).iter().map(|c| c.to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct TableJson {
    m: u32,
    n_max: u32,
    #[serde(rename = "N_max")]
    sum_max: u64,
    rows: Vec<TableRowJson>,
}

#[derive(Serialize)]
struct TableRowJson {
    #[serde(rename = "N")]
    sum: u64,
    counts: Vec<String>,
}

/// Build the full table with the add-a-die recurrence
///
/// ```text
/// (N)^(n) = (N-1)^(n) + (N-1)^(n-1) - (N-1-m)^(n-1)
/// ```
///
/// seeded by the single-die column (1 for `1 <= N <= m`). Lookups outside
/// the table are zero. Columns are filled in increasing `n`, each top to
/// bottom, so every read hits a finished cell.
pub fn count_table_add_die(faces: u32, n_max: u32, sum_max: u64) -> CountTable {
    let width = n_max as usize;
    let mut rows = vec![vec![Count::zero(); width]; sum_max as usize + 1];
    let cell = |rows: &[Vec<Count>], sum: i64, dice: usize| -> Count {
        if sum < 0 || dice == 0 {
            Count::zero()
        } else {
            rows[sum as usize][dice - 1].clone()
        }
    };
    for dice in 1..=width {
        for sum in 1..=sum_max as i64 {
            let value = if dice == 1 {
                if sum <= i64::from(faces) {
                    Count::one()
                } else {
                    Count::zero()
                }
            } else {
                cell(&rows, sum - 1, dice) + cell(&rows, sum - 1, dice - 1)
                    - cell(&rows, sum - 1 - i64::from(faces), dice - 1)
            };
            rows[sum as usize][dice - 1] = value;
        }
    }
    CountTable {
        faces,
        n_max,
        sum_max,
        rows,
    }
}
