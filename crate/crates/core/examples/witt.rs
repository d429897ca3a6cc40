//! Witt basis of V ⊕ V̊ and its split-signature Gram matrix.
use counterspace::rep::{witt_basis, witt_gram_matrix, witt_metric};

fn main() -> counterspace::Result<()> {
    let n = 3;
    let (x1, x1n) = witt_basis(1, n)?;
    println!("g(xi_1, xi_1) = {}", witt_metric(&x1, &x1)?);
    println!("g(xi_4, xi_4) = {}", witt_metric(&x1n, &x1n)?);
    println!("g(xi_1, xi_4) = {}", witt_metric(&x1, &x1n)?);
    print!("Gram matrix for n = {n}:\n{}", witt_gram_matrix(n)?);
    Ok(())
}
