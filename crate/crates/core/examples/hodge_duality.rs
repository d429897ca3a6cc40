//! The Hodge star turns wedges into regressive products and back.
use counterspace::hodge::hodge_star;
use counterspace::regressive::regressive;
use counterspace::{ExtendedMultivector as Mv, MetricContext};

fn main() -> counterspace::Result<()> {
    let ctx = MetricContext::from_signature(1, 3)?;
    let n = ctx.dim();
    let (x, w) = (Mv::from_indices(n, &[1])?, Mv::from_indices(n, &[2, 3])?);
    let star = |m: &Mv| hodge_star(m, false, &ctx);
    print!("metric:\n{}", ctx.g());
    println!("*e1 = {}", star(&x)?);
    println!("*(e2^e3) = {}", star(&w)?);
    println!("(*e1) | (*e2^e3) = {}", regressive(&star(&x)?, &star(&w)?)?);
    println!("*(e1^e2^e3)      = {}", star(&x.wedge(&w)?)?);
    println!("chiral star of 1 = {}", hodge_star(&Mv::one(n), true, &ctx)?);
    Ok(())
}
