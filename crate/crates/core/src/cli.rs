//! Command-line front end shared by the `counterspace` binary and tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::expr::{eval_str, render, Env, Format, Orientation};
use crate::forms::derham_sequence;
use crate::linalg::RatMatrix;
use crate::metric::MetricContext;
use crate::multivector::Chirality;
use crate::rep::{conjugate_metric_rep, rep_anticommutator, rho, witt_gram_matrix, CliffordRep2x2, RepGenerator};
use crate::ring::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "counterspace",
    version,
    about = "Exact extended Grassmann and Clifford algebra calculator"
)]
struct Cli {
    /// Dimension n of the underlying space.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Signature "p,q" or a symmetric matrix "a,b;c,d" (default: Euclidean).
    #[arg(long, global = true, allow_hyphen_values = true)]
    metric: Option<String>,
    /// Orientation used when displaying eps parts.
    #[arg(long, global = true, default_value = "+", value_parser = ["+", "-"], allow_hyphen_values = true)]
    orient: String,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "star(e1^e2)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the 2×2 representation generators and check their anticommutators.
    Rep,
    /// Print the Gram matrix of the Witt basis.
    Witt,
    /// Print the chirality of each degree in the de Rham sequence.
    Derham,
}

struct Usage(String);

fn context(cli: &Cli) -> std::result::Result<MetricContext, Usage> {
    let ctx = match (&cli.metric, cli.dim) {
        (Some(m), _) => MetricContext::parse(m).map_err(|e| Usage(e.to_string()))?,
        (None, Some(n)) => {
            if !(1..=crate::blade::MAX_DIM).contains(&n) {
                return Err(Usage(Error::UnsupportedDimension(n).to_string()));
            }
            MetricContext::euclidean(n)
        }
        (None, None) => return Err(Usage("--dim or --metric is required".into())),
    };
    if let Some(n) = cli.dim {
        if n != ctx.dim() {
            return Err(Usage(format!(
                "--dim {n} does not match the {}-dimensional metric",
                ctx.dim()
            )));
        }
    }
    Ok(ctx)
}

fn chirality_name(c: Chirality) -> &'static str {
    match c {
        Chirality::Achiral => "achiral",
        Chirality::Chiral => "chiral",
        Chirality::Both => "both",
    }
}

fn matrix_json(m: &RatMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    json!(rows)
}

fn rep_text(m: &CliffordRep2x2) -> String {
    let e = m.entries();
    format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
}

fn rep_report(ctx: &MetricContext, format: Format) -> Result<String> {
    let n = ctx.dim();
    let mut generators = vec![
        ("eps".to_string(), rho(&RepGenerator::Eps, n)?),
        ("1".to_string(), rho(&RepGenerator::One, n)?),
        ("1ring".to_string(), rho(&RepGenerator::OneRing, n)?),
    ];
    for i in 1..=n {
        generators.push((format!("e{i}"), rho(&RepGenerator::Basis(i), n)?));
    }
    for i in 1..=n {
        generators.push((format!("ering{i}"), rho(&RepGenerator::BasisRing(i), n)?));
    }
    let one = rho(&RepGenerator::One, n)?;
    let one_ring = rho(&RepGenerator::OneRing, n)?;
    let eps = rho(&RepGenerator::Eps, n)?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let two_g = ctx.g().get(i - 1, j - 1) * Rational::from_integer(2.into());
            let a = rho(&RepGenerator::Basis(i), n)?;
            let b = rho(&RepGenerator::Basis(j), n)?;
            let ar = rho(&RepGenerator::BasisRing(i), n)?;
            let br = rho(&RepGenerator::BasisRing(j), n)?;
            let ac = |x, y| rep_anticommutator(x, y, ctx);
            checks.push((format!("{{e{i},e{j}}} = {two_g}·1"), ac(&a, &b)? == one.scale(&two_g)));
            checks.push((
                format!("{{ering{i},ering{j}}} = {two_g}·1ring"),
                ac(&ar, &br)? == one_ring.scale(&two_g),
            ));
            checks.push((
                format!("{{e{i},ering{j}}} = 0"),
                ac(&a, &br)? == CliffordRep2x2::zero(n),
            ));
        }
    }
    checks.push(("eps^2 = 1".into(), eps.mul(&eps, ctx)? == CliffordRep2x2::identity(n)));
    let (lhs, rhs) = conjugate_metric_rep(ctx)?;
    checks.push(("rho(g) = rho(eps) rho(gring) rho(eps)^-1".into(), lhs == rhs));
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (name, m) in &generators {
                out.push_str(&format!("rho({name}) = {}\n", rep_text(m)));
            }
            for (name, ok) in &checks {
                out.push_str(&format!("{name}: {}\n", if *ok { "ok" } else { "FAIL" }));
            }
            out
        }
        Format::Json => {
            let gens: Vec<_> = generators
                .iter()
                .map(|(name, m)| json!({"name": name, "entries": m.entries().iter().map(|e| e.to_string()).collect::<Vec<_>>()}))
                .collect();
            let checks: Vec<_> = checks
                .iter()
                .map(|(name, ok)| json!({"name": name, "ok": ok}))
                .collect();
            format!("{}\n", json!({"dim": n, "generators": gens, "checks": checks}))
        }
    })
}

fn witt_report(n: usize, format: Format) -> Result<String> {
    let m = witt_gram_matrix(n)?;
    Ok(match format {
        Format::Text => m.to_string(),
        Format::Json => format!("{}\n", json!({"dim": n, "gram": matrix_json(&m)})),
    })
}

fn derham_report(n: usize, format: Format) -> String {
    let seq = derham_sequence(n);
    match format {
        Format::Text => seq
            .iter()
            .map(|(k, c)| format!("{k} {}\n", chirality_name(*c)))
            .collect(),
        Format::Json => {
            let items: Vec<_> = seq
                .iter()
                .map(|(k, c)| json!({"degree": k, "chirality": chirality_name(*c)}))
                .collect();
            format!("{}\n", json!({"dim": n, "sequence": items}))
        }
    }
}

/// Runs the CLI on `args` (program name first). `env_format` is the value of
/// `COUNTERSPACE_FORMAT`, which takes precedence over `--format`. Returns the
/// exit code.
pub fn run<I, S>(args: I, env_format: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let format = match env_format {
        None => cli.format,
        Some(v) => match FormatArg::from_str(v, true) {
            Ok(f) => f,
            Err(_) => {
                let _ = writeln!(err, "error: COUNTERSPACE_FORMAT must be text or json, got {v:?}");
                return EXIT_USAGE;
            }
        },
    };
    let format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let ctx = match context(&cli) {
        Ok(ctx) => ctx,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let n = ctx.dim();
    let result = match &cli.command {
        Command::Eval { expr } => {
            let mut env = Env::new(ctx);
            if cli.orient == "-" {
                env.orientation = Orientation::Negative;
            }
            eval_str(expr, &env).map(|v| format!("{}\n", render(&v, format, n)))
        }
        Command::Rep => rep_report(&ctx, format),
        Command::Witt => witt_report(n, format),
        Command::Derham => Ok(derham_report(n, format)),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_EVAL
        }
    }
}
