//! Expressions shared by the golden-transcript test and the acceptance run.

pub struct Case {
    pub args: &'static [&'static str],
    pub expr: &'static str,
    pub text: &'static str,
}

const D3: &[&str] = &["--dim", "3"];

pub const EVAL_CASES: &[Case] = &[
    Case {
        args: D3,
        expr: "eps*eps",
        text: "1",
    },
    Case {
        args: D3,
        expr: "e1^e2 | e2^e3",
        text: "eps·e2",
    },
    Case {
        args: &["--dim", "3", "--metric", "3,0"],
        expr: "star(e1^e2)",
        text: "e3",
    },
    Case {
        args: D3,
        expr: "star_eps(e1)",
        text: "eps·e2^e3",
    },
    Case {
        args: D3,
        expr: "e2^e1",
        text: "-e1^e2",
    },
    Case {
        args: D3,
        expr: "e1*e2 + e2*e1",
        text: "0",
    },
    Case {
        args: D3,
        expr: "e1*e2",
        text: "e1^e2",
    },
    Case {
        args: D3,
        expr: "(e1 + e2)*(rev(e1) - e2)",
        text: "-2·e1^e2",
    },
    Case {
        args: D3,
        expr: "f2",
        text: "-e1^e3",
    },
    Case {
        args: D3,
        expr: "f1**f1",
        text: "e1^e2^e3",
    },
    Case {
        args: D3,
        expr: "(e1^e2^e3) ** (e2 + eps*e1^e3)",
        text: "e2 + eps·e1^e3",
    },
    Case {
        args: D3,
        expr: "bracket(e1, e2, e3)",
        text: "eps",
    },
    Case {
        args: D3,
        expr: "bracket(e2, e1, e3)",
        text: "-eps",
    },
    Case {
        args: D3,
        expr: "bracket(e1 + e2, e2, e3)",
        text: "eps",
    },
    Case {
        args: D3,
        expr: "lc(e1, e1^e2)",
        text: "e2",
    },
    Case {
        args: D3,
        expr: "lc(e1^e2, e1^e2)",
        text: "-1",
    },
    Case {
        args: D3,
        expr: "rev(e1^e2 + e1)",
        text: "e1 - e1^e2",
    },
    Case {
        args: D3,
        expr: "gi(e1 + e1^e2)",
        text: "-e1 + e1^e2",
    },
    Case {
        args: D3,
        expr: "conj(e1^e2^e3 + e1)",
        text: "-e1 + e1^e2^e3",
    },
    Case {
        args: D3,
        expr: "grade(1 + e1 + eps*e1^e2, 1, achiral)",
        text: "e1",
    },
    Case {
        args: D3,
        expr: "grade(1 + e1 + eps*e1^e2, 2, chiral)",
        text: "eps·e1^e2",
    },
    Case {
        args: D3,
        expr: "qstar_lo(1)",
        text: "e1^e2^e3",
    },
    Case {
        args: D3,
        expr: "qstar_up(e1^e2)",
        text: "e3",
    },
    Case {
        args: D3,
        expr: "qstar_up_eps(e1)",
        text: "eps·e2^e3",
    },
    Case {
        args: D3,
        expr: "qstar_lo_eps(e1^e2^e3)",
        text: "eps",
    },
    Case {
        args: D3,
        expr: "d(x3^3*e1^e2)",
        text: "3*x3^2·e1^e2^e3",
    },
    Case {
        args: D3,
        expr: "delta(x1*x2*e1^e2)",
        text: "-x1·e1 + x2·e2",
    },
    Case {
        args: D3,
        expr: "lap((x1^2 + x2*x3)*e1^e2)",
        text: "2·e1^e2",
    },
    Case {
        args: D3,
        expr: "lap(x1^2*x2)",
        text: "2*x2",
    },
    Case {
        args: D3,
        expr: "e1 | e2",
        text: "0",
    },
    Case {
        args: D3,
        expr: "-e1 + 2/3*e2",
        text: "-e1 + 2/3·e2",
    },
    Case {
        args: D3,
        expr: "(1 + eps)*(1 + eps) - 2*(1 + eps)",
        text: "0",
    },
    Case {
        args: D3,
        expr: "(x1 + eps*x2)*e1",
        text: "(x1+x2·eps)·e1",
    },
    Case {
        args: &["--dim", "3", "--orient", "-"],
        expr: "eps*e2",
        text: "-eps·e2",
    },
    Case {
        args: &["--metric", "1,1"],
        expr: "e2*e2",
        text: "-1",
    },
    Case {
        args: &["--metric", "2,0"],
        expr: "e1 | e2",
        text: "eps",
    },
    Case {
        args: &["--metric", "1,3"],
        expr: "star(e1)",
        text: "e2^e3^e4",
    },
    Case {
        args: &["--metric", "1,2"],
        expr: "star(e2^e3)",
        text: "e1",
    },
    Case {
        args: &["--metric", "2,1;1,2"],
        expr: "e1*e2",
        text: "1 + e1^e2",
    },
];

/// Inputs that must fail with exit status 1 and report this byte offset.
pub const PARSE_ERRORS: &[(&str, usize)] = &[
    ("e1 ^", 4),
    ("(e1 + e2", 0),
    ("e1 + e2)", 7),
    ("e1 e2", 3),
    ("star e1", 5),
    ("foo(e1)", 0),
    ("e1 $ e2", 3),
    ("2/ 3", 1),
    ("lc(e1)", 0),
    ("grade(e1, x)", 10),
    ("", 0),
    ("e1 +", 4),
    ("bracket()", 8),
    ("e1 ** ** e2", 6),
    ("x1^", 3),
];

/// Command line for a case, with the program name left out.
pub fn command(case: &Case, json: bool) -> Vec<String> {
    let mut v = vec!["eval".to_string()];
    v.extend(case.args.iter().map(|s| s.to_string()));
    if json {
        v.extend(["--format".to_string(), "json".to_string()]);
    }
    v.push(case.expr.to_string());
    v
}

pub fn transcript_line(case: &Case, json: bool, output: &str) -> String {
    let cmd = command(case, json);
    let (expr, flags) = cmd.split_last().expect("expression present");
    format!("$ counterspace {} '{}'\n{}", flags.join(" "), expr, output)
}

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the built binary with `COUNTERSPACE_FORMAT` controlled by `env_format`.
pub fn run_bin(args: &[String], env_format: Option<&str>) -> Output {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_counterspace"));
    cmd.args(args).env_remove("COUNTERSPACE_FORMAT");
    if let Some(f) = env_format {
        cmd.env("COUNTERSPACE_FORMAT", f);
    }
    let out = cmd.output().expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Builds the eval transcript in the given format.
pub fn eval_transcript(json: bool) -> (String, Vec<String>) {
    let mut transcript = String::new();
    let mut problems = Vec::new();
    for case in EVAL_CASES {
        let out = run_bin(&command(case, json), None);
        if out.code != 0 {
            problems.push(format!("{:?} exited {}: {}", case.expr, out.code, out.stderr));
        }
        transcript.push_str(&transcript_line(case, json, &out.stdout));
    }
    (transcript, problems)
}

/// Token lists obtained by deleting one token from `src`, each paired with
/// whether the deletion may still parse (a function name before `(`, or a
/// unary minus).
pub fn single_deletions(src: &str) -> Vec<(String, bool)> {
    use counterspace::expr::{tokenize, TokenKind};
    let tokens = tokenize(src).expect("corpus lexes");
    (0..tokens.len())
        .map(|i| {
            let t = &tokens[i];
            let next_is_paren = tokens.get(i + 1).map(|n| n.kind == TokenKind::LParen).unwrap_or(false);
            let unary_minus = t.text == "-"
                && (i == 0
                    || matches!(
                        tokens[i - 1].kind,
                        TokenKind::Operator | TokenKind::LParen | TokenKind::Comma
                    ));
            let may_parse = (t.kind == TokenKind::Ident && next_is_paren) || unary_minus;
            let rest: Vec<&str> = tokens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t.text.as_str())
                .collect();
            (rest.join(" "), may_parse)
        })
        .collect()
}

/// Checks the deletion corpus; returns offending mutants.
pub fn deletion_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for case in EVAL_CASES {
        for (mutant, may_parse) in single_deletions(case.expr) {
            if !may_parse && counterspace::expr::parse_str(&mutant).is_ok() {
                bad.push(format!("{:?} -> {:?} parsed", case.expr, mutant));
            }
        }
    }
    bad
}
