use diceways_core::homogeneous::count_table_add_die;
use diceways_core::oracle::brute_dice;
use diceways_core::polygonal::unordered_representation_counts;
use diceways_core::{
    check_all_positive, hetero_count_closed_form, hetero_count_product, hetero_distribution,
    ordered_representation_counts, rv_count_solutions, rv_enumerate_solutions,
    verify_against_golden, Count, Coverage, DicePool, Engine, Error, HomoQuery, LinearSystem2,
    MarkedDie, Mode, PartSet, TableId,
};
use serde_json::{json, Value};

use crate::{Command, EngineChoice, Format, TableFormat, EXIT_FAILED_CHECK, EXIT_USAGE};

/// Everything a command produced; `main` writes it out.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Self {
            stderr: format!("error: {err}\n"),
            code: EXIT_USAGE,
            ..Self::default()
        }
    }

    fn fail(mut self, msg: impl std::fmt::Display) -> Self {
        self.stderr.push_str(&format!("{msg}\n"));
        self.code = EXIT_FAILED_CHECK;
        self
    }

    fn note(mut self, msg: impl std::fmt::Display) -> Self {
        self.stderr.push_str(&format!("{msg}\n"));
        self
    }
}

fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Count {
            dice,
            faces,
            sum,
            engine,
            oracle,
            oracle_budget,
            format,
        } => count(
            dice,
            faces,
            sum,
            engine,
            oracle.then_some(oracle_budget),
            format,
        ),
        Command::Table {
            faces,
            max_dice,
            max_sum,
            format,
        } => table(faces, max_dice, max_sum, format),
        Command::Hetero { dice, sum, format } => hetero(dice, sum, format),
        Command::PolygonalCheck {
            sides,
            power,
            upto,
            unordered,
            format,
        } => polygonal_check(sides, power, upto, unordered, format),
        Command::Virgins {
            generators,
            targets,
            positive,
            list,
            format,
        } => virgins(generators, targets, positive, list, format),
        Command::VerifyPaper { table } => verify(&table),
    }
}

fn count(
    dice: u32,
    faces: u32,
    sum: u64,
    choice: EngineChoice,
    oracle_budget: Option<u128>,
    format: Format,
) -> Outcome {
    let query = match HomoQuery::new(dice, faces, sum) {
        Ok(q) => q,
        Err(e) => return Outcome::usage(e),
    };
    let engines: Vec<Engine> = match choice {
        EngineChoice::Poly => vec![Engine::Poly],
        EngineChoice::AddDie => vec![Engine::AddDie],
        EngineChoice::Lambda => vec![Engine::Lambda],
        EngineChoice::Closed => vec![Engine::Closed],
        EngineChoice::All => Engine::ALL.to_vec(),
    };
    let mut results: Vec<(Engine, Count)> = Vec::new();
    let mut errors = Vec::new();
    for e in engines {
        match e.count(&query) {
            Ok(c) => results.push((e, c)),
            Err(err) => errors.push(format!("engine {e} failed: {err}")),
        }
    }

    let oracle = match oracle_budget {
        None => None,
        Some(budget) => {
            let die = MarkedDie::standard(u64::from(faces)).expect("faces >= 1");
            let pool = DicePool::repeated(die, dice as usize).expect("dice >= 1");
            Some(brute_dice(&pool, sum, budget))
        }
    };

    let stdout = match format {
        Format::Plain => results.iter().map(|(_, c)| format!("{c}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("engine,count\n");
            for (e, c) in &results {
                s.push_str(&format!("{e},{c}\n"));
            }
            if let Some(Ok(c)) = &oracle {
                s.push_str(&format!("oracle,{c}\n"));
            }
            s
        }
        Format::Json => {
            let engines: Vec<Value> = results
                .iter()
                .map(|(e, c)| json!({"engine": e.name(), "count": c.to_string()}))
                .collect();
            let mut v = json!({
                "dice": dice,
                "faces": faces,
                "sum": sum,
                "engines": engines,
            });
            if let Some(Ok(c)) = &oracle {
                v["oracle"] = json!(c.to_string());
            }
            emit_json(&v)
        }
    };
    let mut out = Outcome::ok(stdout);

    for err in errors {
        out = out.fail(err);
    }
    if results.windows(2).any(|w| w[0].1 != w[1].1) {
        let detail: Vec<String> = results.iter().map(|(e, c)| format!("{e}={c}")).collect();
        out = out.fail(format!("engines disagree: {}", detail.join(", ")));
    }
    match oracle {
        Some(Ok(expected)) => {
            for (e, c) in &results {
                if *c != expected {
                    out = out.fail(format!("engine {e} gave {c}, oracle enumerated {expected}"));
                }
            }
            if out.code == 0 {
                out = out.note(format!("oracle: {expected} (agrees)"));
            }
        }
        Some(Err(Error::BudgetExceeded { needed, budget })) => {
            out = out.note(format!(
                "oracle skipped: {needed} outcomes exceed budget {budget}"
            ));
        }
        Some(Err(e)) => out = out.fail(format!("oracle failed: {e}")),
        None => {}
    }
    out
}

fn table(faces: u32, max_dice: u32, max_sum: u64, format: TableFormat) -> Outcome {
    let t = count_table_add_die(faces, max_dice, max_sum);
    Outcome::ok(match format {
        TableFormat::Csv => t.to_csv(),
        TableFormat::Json => emit_json(&t.to_json_value()),
    })
}

fn hetero(dice: Vec<MarkedDie>, sum: Option<u64>, format: Format) -> Outcome {
    let pool = match DicePool::new(dice) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let closed_faces = pool.standard_face_counts();
    let dice_json: Vec<Value> = pool.dice().iter().map(|d| json!(d.marks())).collect();

    if let Some(sum) = sum {
        let count = hetero_count_product(&pool, sum);
        let stdout = match format {
            Format::Plain => format!("{count}\n"),
            Format::Csv => format!("N,count\n{sum},{count}\n"),
            Format::Json => emit_json(&json!({
                "dice": dice_json,
                "sum": sum,
                "count": count.to_string(),
            })),
        };
        let mut out = Outcome::ok(stdout);
        if let Some(faces) = closed_faces {
            let closed = hetero_count_closed_form(&faces, sum).expect("standard faces are valid");
            if closed != count {
                out = out.fail(format!("closed form gave {closed}, product gave {count}"));
            }
        }
        return out;
    }

    let dist = hetero_distribution(&pool);
    let total: Count = dist.iter().map(|(_, c)| c).sum();
    let stdout = match format {
        Format::Plain => {
            let mut s: String = dist.iter().map(|(n, c)| format!("{n} {c}\n")).collect();
            s.push_str(&format!("total {total}\n"));
            s
        }
        Format::Csv => {
            let mut s = String::from("N,count\n");
            for (n, c) in &dist {
                s.push_str(&format!("{n},{c}\n"));
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = dist
                .iter()
                .map(|(n, c)| json!({"N": n, "count": c.to_string()}))
                .collect();
            emit_json(&json!({
                "dice": dice_json,
                "distribution": rows,
                "total": total.to_string(),
            }))
        }
    };
    let mut out = Outcome::ok(stdout);
    if total != pool.outcomes() {
        out = out.fail(format!(
            "distribution total {total} differs from outcome count {}",
            pool.outcomes()
        ));
    }
    if let Some(faces) = closed_faces {
        for (n, c) in &dist {
            let closed = hetero_count_closed_form(&faces, *n).expect("standard faces are valid");
            if closed != *c {
                out = out.fail(format!(
                    "at N={n}: closed form gave {closed}, product gave {c}"
                ));
            }
        }
    }
    out
}

fn polygonal_check(
    sides: u64,
    power: u32,
    upto: usize,
    unordered: bool,
    format: Format,
) -> Outcome {
    let series = if unordered {
        match PartSet::polygonal(sides, upto as u64) {
            Ok(parts) => unordered_representation_counts(&parts, power as usize, upto),
            Err(e) => return Outcome::usage(e),
        }
    } else {
        match ordered_representation_counts(sides, power, upto) {
            Ok(p) => p,
            Err(e) => return Outcome::usage(e),
        }
    };
    let coverage = check_all_positive(&series, upto).expect("series is expanded to upto");
    let stdout = match format {
        Format::Plain | Format::Csv => match coverage {
            Coverage::Complete => format!("all exponents 0..{upto} representable\n"),
            Coverage::FirstGap(g) => format!("first gap: {g}\n"),
        },
        Format::Json => {
            let gap = match coverage {
                Coverage::Complete => Value::Null,
                Coverage::FirstGap(g) => json!(g),
            };
            emit_json(&json!({
                "sides": sides,
                "power": power,
                "upto": upto,
                "unordered": unordered,
                "complete": coverage == Coverage::Complete,
                "first_gap": gap,
            }))
        }
    };
    Outcome::ok(stdout)
}

fn virgins(
    generators: Vec<(u64, u64)>,
    targets: (u64, u64),
    positive: bool,
    list: Option<usize>,
    format: Format,
) -> Outcome {
    let mode = if positive {
        Mode::Positive
    } else {
        Mode::Nonnegative
    };
    let sys = match LinearSystem2::new(generators, targets, mode) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let count = rv_count_solutions(&sys);
    let listing = list.map(|cap| (cap, rv_enumerate_solutions(&sys, cap)));

    let stdout = match format {
        Format::Plain => {
            let mut s = format!("{count}\n");
            if let Some((cap, e)) = &listing {
                for sol in &e.solutions {
                    let vals: Vec<String> = sol.iter().map(u64::to_string).collect();
                    s.push_str(&vals.join(" "));
                    s.push('\n');
                }
                if e.truncated {
                    s.push_str(&format!("... truncated at {cap}\n"));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = format!("count\n{count}\n");
            if let Some((_, e)) = &listing {
                let header: Vec<String> = (1..=sys.generators().len())
                    .map(|i| format!("p{i}"))
                    .collect();
                s.push_str(&header.join(","));
                s.push('\n');
                for sol in &e.solutions {
                    let vals: Vec<String> = sol.iter().map(u64::to_string).collect();
                    s.push_str(&vals.join(","));
                    s.push('\n');
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "generators": sys.generators().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "targets": [targets.0, targets.1],
                "mode": if positive { "positive" } else { "nonnegative" },
                "count": count.to_string(),
            });
            if let Some((_, e)) = &listing {
                v["solutions"] = json!(e.solutions);
                v["truncated"] = json!(e.truncated);
            }
            emit_json(&v)
        }
    };
    let mut out = Outcome::ok(stdout);
    if let Some((cap, e)) = &listing {
        let listed = Count::from(e.solutions.len());
        let consistent = if e.truncated {
            e.solutions.len() == *cap && count > listed
        } else {
            count == listed
        };
        if !consistent {
            out = out.fail(format!(
                "listed {} solutions but counted {count}",
                e.solutions.len()
            ));
        }
    }
    out
}

fn verify(table: &str) -> Outcome {
    let ids: Vec<TableId> = if table == "all" {
        TableId::ALL.to_vec()
    } else {
        match table.parse::<TableId>() {
            Ok(id) => vec![id],
            Err(e) => return Outcome::usage(e),
        }
    };
    let prefixed = ids.len() > 1;
    let mut out = Outcome::default();
    for id in ids {
        let report = match verify_against_golden(id) {
            Ok(r) => r,
            Err(e) => return out.fail(e),
        };
        let summary = report.summary();
        if prefixed {
            out.stdout.push_str(&format!("{id}: {summary}\n"));
        } else {
            out.stdout.push_str(&format!("{summary}\n"));
        }
        if !report.is_clean() {
            out = out.fail(format!("{id}: verification failed"));
        }
    }
    out
}
