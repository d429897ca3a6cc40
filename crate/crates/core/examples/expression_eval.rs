//! Parsing and evaluating expressions, rendered as text and JSON.
use counterspace::expr::{eval_str, render, Env, Format};
use counterspace::MetricContext;

fn main() -> counterspace::Result<()> {
    let env = Env::new(MetricContext::euclidean(3));
    for src in [
        "star(e1^e2)",
        "e1^e2 | e2^e3",
        "f1 ** f2 + f2 ** f1",
        "lap((x1^2 + x2*x3)*e1^e2)",
        "bracket(e1, e3, e2)",
    ] {
        let v = eval_str(src, &env)?;
        println!(
            "{src:<28} {:<16} {}",
            render(&v, Format::Text, 3),
            render(&v, Format::Json, 3)
        );
    }
    match eval_str("e1 ^ ^ e2", &env) {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
