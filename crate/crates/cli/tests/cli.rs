use std::process::{Command, Output};

use diceways_core::heterogeneous::{DicePool, MarkedDie};
use diceways_core::oracle::{brute_dice, brute_regula, DEFAULT_BUDGET};
use diceways_core::regula::{LinearSystem2, Mode};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diceways"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn count_examples() {
    let out = run(&["count", "--dice", "6", "--faces", "6", "--sum", "25"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "2856\n"));
    let out = run(&["count", "--dice", "3", "--faces", "6", "--sum", "2"]);
    assert_eq!(stdout(&out), "0\n");
    let out = run(&[
        "count", "--dice", "2", "--faces", "6", "--sum", "7", "--engine", "all",
    ]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "6\n6\n6\n6\n"));
}

#[test]
fn count_with_oracle() {
    let out = run(&[
        "count", "--dice", "4", "--faces", "5", "--sum", "11", "--engine", "all", "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("agrees"));
    let out = run(&[
        "count",
        "--dice",
        "4",
        "--faces",
        "5",
        "--sum",
        "11",
        "--oracle",
        "--oracle-budget",
        "10",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped"));
}

#[test]
fn count_formats() {
    let out = run(&[
        "count", "--dice", "2", "--faces", "6", "--sum", "7", "--engine", "all", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&out),
        "engine,count\npoly,6\nadd-die,6\nlambda,6\nclosed,6\n"
    );
    let out = run(&[
        "count", "--dice", "30", "--faces", "10", "--sum", "150", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let count = v["engines"][0]["count"].as_str().unwrap();
    assert!(count.parse::<u64>().is_err(), "exceeds 64 bits: {count}");
    assert!(count.parse::<num_bigint::BigUint>().is_ok());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--dice", "0", "--faces", "6", "--sum", "3"][..],
        &["count", "--dice", "2", "--faces", "6"],
        &[
            "count", "--dice", "2", "--faces", "6", "--sum", "3", "--engine", "fast",
        ],
        &["table", "--faces", "6", "--max-dice", "0", "--max-sum", "5"],
        &["hetero", "--die", "x..3"],
        &["hetero"],
        &[
            "polygonal-check",
            "--sides",
            "2",
            "--power",
            "3",
            "--upto",
            "10",
        ],
        &["virgins", "--gen", "1", "--targets", "3:3"],
        &["virgins", "--gen", "0:0", "--targets", "3:3"],
        &["verify-paper", "--table", "nope"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn table_small_cases() {
    let out = run(&["table", "--faces", "1", "--max-dice", "3", "--max-sum", "3"]);
    assert_eq!(stdout(&out), "N,n=1,n=2,n=3\n1,1,0,0\n2,0,1,0\n3,0,0,1\n");

    // Two-faced dice against enumeration of coin tuples.
    let out = run(&["table", "--faces", "2", "--max-dice", "3", "--max-sum", "6"]);
    let text = stdout(&out);
    let rows: Vec<Vec<u64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let sum = row[0];
        for (n, &cell) in row.iter().enumerate().skip(1) {
            let pool = DicePool::repeated(MarkedDie::standard(2).unwrap(), n).unwrap();
            let brute = brute_dice(&pool, sum, DEFAULT_BUDGET).unwrap();
            assert_eq!(brute, cell.into(), "N={sum} n={n}");
        }
    }
}

#[test]
fn hetero_examples() {
    let out = run(&["hetero", "--die", "1..6", "--die", "1..8", "--die", "1..12"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 25);
    assert_eq!(text.lines().last(), Some("total 576"));
    assert_eq!(text.lines().nth(11), Some("14 47"));
    let out = run(&[
        "hetero", "--die", "1..6", "--die", "1..8", "--die", "1..12", "--sum", "14",
    ]);
    assert_eq!(stdout(&out), "47\n");
    let out = run(&["hetero", "--die", "5", "--sum", "5"]);
    assert_eq!(stdout(&out), "1\n");
    let out = run(&["hetero", "--die", "2,4"]);
    assert_eq!(stdout(&out), "2 1\n4 1\ntotal 2\n");
}

#[test]
fn polygonal_examples() {
    let out = run(&[
        "polygonal-check",
        "--sides",
        "3",
        "--power",
        "3",
        "--upto",
        "1000",
    ]);
    assert_eq!(stdout(&out), "all exponents 0..1000 representable\n");
    let out = run(&[
        "polygonal-check",
        "--sides",
        "4",
        "--power",
        "4",
        "--upto",
        "1000",
    ]);
    assert_eq!(stdout(&out), "all exponents 0..1000 representable\n");
    let out = run(&[
        "polygonal-check",
        "--sides",
        "4",
        "--power",
        "3",
        "--upto",
        "10",
    ]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "first gap: 7\n"));
    let out = run(&[
        "polygonal-check",
        "--sides",
        "4",
        "--power",
        "3",
        "--upto",
        "10",
        "--unordered",
    ]);
    assert_eq!(stdout(&out), "first gap: 7\n");
}

#[test]
fn virgins_examples() {
    assert_eq!(
        stdout(&run(&["virgins", "--gen", "1:1", "--targets", "3:3"])),
        "1\n"
    );
    assert_eq!(
        stdout(&run(&["virgins", "--gen", "1:1", "--targets", "3:4"])),
        "0\n"
    );

    let out = run(&[
        "virgins",
        "--gen",
        "3:1",
        "--gen",
        "2:1",
        "--gen",
        "1:3",
        "--targets",
        "20:10",
        "--list",
        "100",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let sys =
        LinearSystem2::new(vec![(3, 1), (2, 1), (1, 3)], (20, 10), Mode::Nonnegative).unwrap();
    let brute = brute_regula(&sys, DEFAULT_BUDGET).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), brute.to_string());
    assert_eq!(lines.count().to_string(), brute.to_string());

    let out = run(&[
        "virgins",
        "--gen",
        "1:0",
        "--gen",
        "1:0",
        "--targets",
        "3:0",
        "--list",
        "2",
    ]);
    assert_eq!(stdout(&out), "4\n0 3\n1 2\n... truncated at 2\n");
    assert_eq!(code(&out), 0);
    let out = run(&["virgins", "--gen", "1:1", "--targets", "3:3", "--positive"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn verify_paper_runs() {
    let out = run(&["verify-paper", "--table", "s22"]);
    assert_eq!(
        (code(&out), stdout(&out).as_str()),
        (0, "24/24 entries match; total 576\n")
    );
    let out = run(&["verify-paper", "--table", "table1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "287/288 printed entries match; 1 known erratum confirmed at (N=26,n=8): printed 12588, computed 125588\n"
    );
    assert_eq!(code(&run(&["verify-paper"])), 0);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "table",
            "--faces",
            "6",
            "--max-dice",
            "8",
            "--max-sum",
            "36",
            "--format",
            "json",
        ][..],
        &[
            "hetero", "--die", "1..6", "--die", "0,3,3", "--format", "json",
        ],
        &[
            "virgins",
            "--gen",
            "2:1",
            "--gen",
            "1:2",
            "--targets",
            "12:12",
            "--list",
            "50",
        ],
        &["verify-paper"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for args in [
        &[
            "table",
            "--faces",
            "6",
            "--max-dice",
            "8",
            "--max-sum",
            "36",
            "--format",
            "json",
        ][..],
        &[
            "count", "--dice", "3", "--faces", "6", "--sum", "10", "--engine", "all", "--format",
            "json",
        ],
        &[
            "hetero", "--die", "1..6", "--die", "1..8", "--format", "json",
        ],
        &[
            "polygonal-check",
            "--sides",
            "5",
            "--power",
            "5",
            "--upto",
            "100",
            "--format",
            "json",
        ],
        &[
            "virgins",
            "--gen",
            "1:2",
            "--gen",
            "2:1",
            "--targets",
            "9:9",
            "--list",
            "5",
            "--format",
            "json",
        ],
    ] {
        let text = stdout(&run(args));
        let v: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn table_json_schema() {
    let text = stdout(&run(&[
        "table",
        "--faces",
        "6",
        "--max-dice",
        "2",
        "--max-sum",
        "12",
        "--format",
        "json",
    ]));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["m"], 6);
    assert_eq!(v["n_max"], 2);
    assert_eq!(v["N_max"], 12);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[6]["N"], 7);
    assert_eq!(rows[6]["counts"], serde_json::json!(["0", "6"]));
}
