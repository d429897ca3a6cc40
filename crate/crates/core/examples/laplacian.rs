//! d, the codifferential and the Laplacian on a 2-form in R^3.
use counterspace::forms::{codifferential, d, laplacian};
use counterspace::{MetricContext, PolyForm, Polynomial};

fn main() -> counterspace::Result<()> {
    let ctx = MetricContext::euclidean(3);
    let f: Polynomial = "x1^2*x3 + x2*x3^3 + x1*x2".parse()?;
    let psi = PolyForm::from_indices(3, &[1, 2])?.mul_ring(&f);
    println!("psi          = {psi}");
    println!("d psi        = {}", d(&psi));
    println!("delta psi    = {}", codifferential(&psi, &ctx)?);
    println!("delta d psi  = {}", codifferential(&d(&psi), &ctx)?);
    println!("d delta psi  = {}", d(&codifferential(&psi, &ctx)?));
    println!("lap psi      = {}", laplacian(&psi, &ctx)?);
    Ok(())
}
