//! 2×2 matrices over Cl(p,q) representing the extended algebra.
use counterspace::rep::{conjugate_metric_rep, rep_anticommutator, rho, RepGenerator};
use counterspace::MetricContext;

fn main() -> counterspace::Result<()> {
    let ctx = MetricContext::from_signature(1, 1)?;
    let n = ctx.dim();
    for (name, g) in [
        ("eps", RepGenerator::Eps),
        ("e1", RepGenerator::Basis(1)),
        ("ering2", RepGenerator::BasisRing(2)),
    ] {
        let m = rho(&g, n)?;
        let [a, b, c, d] = m.entries();
        println!("rho({name}) = [[{a}, {b}], [{c}, {d}]]");
    }
    let e2 = rho(&RepGenerator::Basis(2), n)?;
    let [a, b, c, d] = rep_anticommutator(&e2, &e2, &ctx)?.entries().clone();
    println!("{{e2, e2}} = [[{a}, {b}], [{c}, {d}]]");
    let (lhs, rhs) = conjugate_metric_rep(&ctx)?;
    println!("rho(g) =\n{lhs}rho(eps) rho(gring) rho(eps)^-1 =\n{rhs}");
    Ok(())
}
