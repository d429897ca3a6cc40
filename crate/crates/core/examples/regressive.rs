//! Regressive product, brackets and the cobasis in three dimensions.
use counterspace::regressive::{bracket, cobasis, regressive, regressive_all};
use counterspace::ExtendedMultivector as Mv;

fn main() -> counterspace::Result<()> {
    let n = 3;
    let e = |ix: &[usize]| Mv::from_indices(n, ix);
    let meet = regressive(&e(&[1, 2])?, &e(&[2, 3])?)?;
    println!("(e1^e2) | (e2^e3) = {meet}");
    println!("e1 | volume = {}", regressive(&e(&[1])?, &Mv::volume(n))?);
    println!("[e2, e1, e3] = {}", bracket(&[e(&[2])?, e(&[1])?, e(&[3])?])?);
    let f: Vec<Mv> = (1..=n).map(|i| cobasis(n, i, false)).collect::<Result<_, _>>()?;
    for i in 1..=n {
        println!("f1 | ... | f{i} = {}", regressive_all(&f[..i])?);
    }
    Ok(())
}
