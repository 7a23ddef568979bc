use std::process::Command;

use sincpow_cli::{
    report_exit_code, run_command, write_series, OutputFormat, EXIT_COUNTEREXAMPLE, EXIT_OK,
    EXIT_USAGE,
};
use sincpow_core::identities::{Case, IdentityReport};
use sincpow_core::series::cardinal_series;
use sincpow_core::{parse_rational, Cardinal};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sincpow").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn triangle_commands() {
    assert_eq!(ok(&["cfn", "--n", "4", "--k", "1"]), "0\n");
    assert_eq!(ok(&["cfn", "--n", "3", "--k", "1"]), "1/4\n");
    assert_eq!(ok(&["cfn", "--n", "5", "--k", "3", "--scaled"]), "10\n");
    assert_eq!(ok(&["stirling2", "--n", "4", "--k", "2"]), "7\n");
    assert_eq!(
        ok(&["weighted", "--n", "2", "--k", "1", "--r", "-1/2"]),
        "0\n"
    );
    assert_eq!(
        ok(&["weighted", "--n", "2", "--k", "1", "--r", "3/7"]),
        "13/7\n"
    );
}

#[test]
fn bell_command() {
    assert_eq!(
        ok(&["bell", "--n", "4", "--k", "2", "--args", "0,-1/3,0"]),
        "1/3\n"
    );
    for method in ["recurrence", "cfn", "stirling"] {
        assert_eq!(
            ok(&[
                "bell",
                "--n",
                "4",
                "--k",
                "2",
                "--sinc-args",
                "--method",
                method
            ]),
            "1/3\n"
        );
        assert_eq!(
            ok(&[
                "bell",
                "--n",
                "7",
                "--k",
                "3",
                "--sinc-args",
                "--method",
                method
            ]),
            "0\n"
        );
    }
    let (code, _, err) = run(&[
        "bell", "--n", "4", "--k", "2", "--args", "0,1", "--method", "cfn",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--sinc-args"));
    let (code, _, _) = run(&["bell", "--n", "4", "--k", "2"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["bell", "--n", "2", "--k", "3", "--sinc-args"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn series_csv_rows() {
    let out = ok(&[
        "series",
        "--function",
        "sinc",
        "--exponent",
        "2",
        "--order",
        "4",
        "--method",
        "cfn",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "power,coefficient\n0,1\n2,-1/3\n4,2/45\n");
}

#[test]
fn series_methods_agree() {
    for function in ["sinc", "sinhc"] {
        for exponent in ["-3/2", "0", "4", "5/3"] {
            let outputs: Vec<String> = ["cfn", "stirling", "oracle"]
                .iter()
                .filter(|m| !(exponent == "0" && **m == "stirling"))
                .map(|m| {
                    ok(&[
                        "series",
                        "--function",
                        function,
                        "--exponent",
                        exponent,
                        "--order",
                        "12",
                        "--method",
                        m,
                    ])
                })
                .collect();
            assert!(
                outputs.windows(2).all(|w| w[0] == w[1]),
                "{function} {exponent}"
            );
        }
    }
    let (code, _, err) = run(&[
        "series",
        "--function",
        "sinc",
        "--exponent",
        "0",
        "--order",
        "4",
        "--method",
        "stirling",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("l >= 1"));
}

#[test]
fn exp_sinc_json() {
    let out = ok(&[
        "series",
        "--function",
        "exp-sinc",
        "--order",
        "6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 6);
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "0", "-1/6", "0", "1/45", "0", "-107/45360"]);
}

#[test]
fn series_requires_exponent_for_cardinals() {
    let (code, _, err) = run(&["series", "--function", "sinhc", "--order", "4"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--exponent"));
}

#[test]
fn verify_identities() {
    for id in ["parity", "ts-relations", "alt-sum", "odd-blocks", "symfun"] {
        let out = ok(&["verify", "--identity", id, "--max", "8"]);
        assert!(out.starts_with(&format!("{id}: verified")), "{out}");
    }
    let out = ok(&["verify", "--identity", "alt-sum", "--max", "12"]);
    assert!(out.contains("verified"));
    let (code, _, err) = run(&["verify", "--identity", "odd-blocks", "--max", "13"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("capped"));
}

#[test]
fn counterexample_maps_to_exit_one() {
    let mut report = IdentityReport {
        identity_id: "demo".into(),
        ranges: vec![],
        verified: 3,
        out_of_range: vec![Case {
            relation: "x=0",
            indices: vec![("k", 2)],
            lhs: parse_rational("5").unwrap(),
            rhs: parse_rational("0").unwrap(),
        }],
        counterexamples: vec![],
    };
    assert_eq!(report_exit_code(&report), EXIT_OK);
    report.counterexamples.push(report.out_of_range[0].clone());
    assert_eq!(report_exit_code(&report), EXIT_COUNTEREXAMPLE);
}

#[test]
fn eval_rows() {
    let out = ok(&[
        "eval",
        "--function",
        "sinc",
        "--exponent",
        "-1",
        "--z",
        "1.0",
        "--order",
        "24",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "order,partial_sum,reference,abs_error");
    assert_eq!(lines.len(), 13);
    let last: Vec<f64> = lines[12].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(last[0], 24.0);
    assert!(last[3] < 1e-10);
    let (code, _, _) = run(&[
        "eval",
        "--function",
        "sinc",
        "--exponent",
        "-1",
        "--z",
        "4",
        "--order",
        "8",
    ]);
    assert_eq!(code, EXIT_USAGE);
    ok(&[
        "eval",
        "--function",
        "sinhc",
        "--exponent",
        "1/2",
        "--z",
        "-2.5",
        "--order",
        "8",
    ]);
}

#[test]
fn usage_errors() {
    for argv in [
        &["frobnicate"][..],
        &["cfn", "--n", "4"],
        &["cfn", "--n", "4", "--k", "1", "--bogus"],
        &["weighted", "--n", "3", "--k", "1", "--r", "0.5"],
        &["series", "--function", "cosc", "--order", "3"],
        &["cfn", "--n", "2", "--k", "3", "--scaled"],
    ] {
        let (code, out, err) = run(argv);
        assert_eq!(code, EXIT_USAGE, "{argv:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn plain_format() {
    let mut out = Vec::new();
    write_series(
        &mut out,
        &cardinal_series(Cardinal::Sinc, 5),
        OutputFormat::Plain,
    )
    .unwrap();
    assert_eq!(
        String::from_utf8(out).unwrap(),
        "z^0\t1\nz^2\t-1/6\nz^4\t1/120\n"
    );
}

#[test]
fn binary_is_deterministic_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sincpow");
    let args = [
        "series",
        "--function",
        "sinc",
        "--exponent",
        "-1/2",
        "--order",
        "10",
        "--method",
        "stirling",
        "--format",
        "json",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
    let verify = Command::new(bin)
        .args(["verify", "--identity", "alt-sum", "--max", "12"])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(EXIT_OK));
}
