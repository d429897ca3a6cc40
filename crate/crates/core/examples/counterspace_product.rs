//! The counterspace Clifford product and its contractions.
use counterspace::hodge::{counterspace_contraction, counterspace_product, counterspace_unit, Side};
use counterspace::regressive::cobasis;
use counterspace::{ExtendedMultivector as Mv, MetricContext};

fn main() -> counterspace::Result<()> {
    for ctx in [MetricContext::euclidean(3), MetricContext::lorentzian(2)] {
        let n = ctx.dim();
        let unit = counterspace_unit(&ctx)?;
        let (p, q) = ctx.signature().expect("diagonal metric");
        println!("signature ({p},{q}), unit = {unit}");
        for i in 1..=n {
            for j in 1..=n {
                let (fi, fj) = (cobasis(n, i, false)?, cobasis(n, j, false)?);
                println!("  f{i} ** f{j} = {}", counterspace_product(&fi, &fj, &ctx)?);
            }
        }
        let v = Mv::basis(n, 1)?;
        println!(
            "  e1 contracted with the unit = {}",
            counterspace_contraction(Side::Right, &v, &unit, &ctx)?
        );
    }
    Ok(())
}
