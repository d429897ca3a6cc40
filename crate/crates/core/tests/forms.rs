mod common;

use common::*;
use counterspace::forms::{codifferential, d, derham_chirality, derham_sequence, dx, laplacian, PolyForm};
use counterspace::multivector::Chirality;
use counterspace::poly::Polynomial;
use counterspace::regressive::regressive;
use counterspace::{rat, MetricContext};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn x(i: usize) -> Polynomial {
    Polynomial::var(i)
}

fn c(n: i64) -> Polynomial {
    Polynomial::constant(rat(n))
}

fn form(n: usize, ix: &[usize], f: &Polynomial) -> PolyForm {
    PolyForm::from_indices(n, ix).unwrap().mul_ring(f)
}

/// Every monomial of degree ≤ 4 in three variables, each with its own
/// coefficient, so no derivative can vanish by accident.
fn generic_f() -> Polynomial {
    let mut f = Polynomial::zero();
    let mut k = 1;
    for a in 0..=4u32 {
        for b in 0..=(4 - a) {
            for cc in 0..=(4 - a - b) {
                f = f + Polynomial::monomial(rat(k), vec![a, b, cc]);
                k += 1;
            }
        }
    }
    f
}

use num_traits::Zero;

fn p(f: &Polynomial, ix: &[usize]) -> Polynomial {
    ix.iter().fold(f.clone(), |acc, &i| acc.derivative(i))
}

#[test]
fn d_examples() {
    let f = c(3) * x(3).pow(4) - x(3);
    let psi = form(3, &[1, 2], &f);
    assert_eq!(d(&psi), form(3, &[1, 2, 3], &p(&f, &[3])));
    assert_eq!(d(&psi), form(3, &[3, 1, 2], &p(&f, &[3])));
    assert!(d(&PolyForm::one(3).mul_ring(&c(5))).is_zero());
    assert_eq!(d(&form(3, &[2], &x(1))), form(3, &[1, 2], &c(1)));
}

#[test]
fn codifferential_examples() {
    let ctx = MetricContext::euclidean(3);
    let f = generic_f();
    let psi = form(3, &[1, 2], &f);
    let expected = form(3, &[2], &p(&f, &[1])) - form(3, &[1], &p(&f, &[2]));
    assert_eq!(codifferential(&psi, &ctx).unwrap(), expected);
    assert!(codifferential(&PolyForm::one(3).mul_ring(&f), &ctx).unwrap().is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let w = random_form(&mut rng, 3, 3, 3);
        let dd = codifferential(&codifferential(&w, &ctx).unwrap(), &ctx).unwrap();
        assert!(dd.is_zero());
    }
}

#[test]
fn worked_example_end_to_end() {
    let ctx = MetricContext::euclidean(3);
    let f = generic_f();
    let psi = form(3, &[1, 2], &f);
    let d_psi = d(&psi);
    assert_eq!(d_psi, form(3, &[1, 2, 3], &p(&f, &[3])));
    let delta_psi = codifferential(&psi, &ctx).unwrap();
    assert_eq!(delta_psi, form(3, &[2], &p(&f, &[1])) - form(3, &[1], &p(&f, &[2])));
    let delta_d = codifferential(&d_psi, &ctx).unwrap();
    assert_eq!(
        delta_d,
        form(3, &[2, 3], &p(&f, &[1, 3])) + form(3, &[3, 1], &p(&f, &[2, 3])) + form(3, &[1, 2], &p(&f, &[3, 3]))
    );
    let d_delta = d(&delta_psi);
    assert_eq!(
        d_delta,
        form(3, &[1, 2], &p(&f, &[1, 1])) - form(3, &[2, 1], &p(&f, &[2, 2])) + form(3, &[3, 2], &p(&f, &[1, 3]))
            - form(3, &[3, 1], &p(&f, &[2, 3]))
    );
    let lap = laplacian(&psi, &ctx).unwrap();
    assert_eq!(lap, d_delta + delta_d);
    assert_eq!(
        lap,
        form(3, &[1, 2], &(p(&f, &[1, 1]) + p(&f, &[2, 2]) + p(&f, &[3, 3])))
    );
    let instance = x(1).pow(2) + x(2) * x(3);
    assert_eq!(
        laplacian(&form(3, &[1, 2], &instance), &ctx).unwrap(),
        form(3, &[1, 2], &c(2))
    );
}

#[test]
fn laplacian_of_functions_is_the_sum_of_second_partials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        let ctx = MetricContext::euclidean(n);
        for _ in 0..10 {
            let f = random_poly(&mut rng, n, 4, 4);
            let expected = (1..=n).fold(Polynomial::zero(), |acc, i| acc + p(&f, &[i, i]));
            let got = laplacian(&PolyForm::one(n).mul_ring(&f), &ctx).unwrap();
            assert_eq!(got, PolyForm::one(n).mul_ring(&expected));
        }
    }
    assert!(
        laplacian(&PolyForm::one(3).mul_ring(&c(9)), &MetricContext::euclidean(3))
            .unwrap()
            .is_zero()
    );
}

#[test]
fn d_leibniz_over_wedge() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=4 {
        for k in 0..=n {
            for l in 0..=n {
                let w = random_homogeneous_form(&mut rng, n, k, 2);
                let z = random_homogeneous_form(&mut rng, n, l, 2);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let lhs = d(&w.wedge(&z).unwrap());
                let rhs = d(&w).wedge(&z).unwrap() + w.wedge(&d(&z)).unwrap().scale(&rat(sign));
                assert_eq!(lhs, rhs, "n={n} k={k} l={l}");
            }
        }
    }
}

/// `δ` acts on `ψ∨φ` as a derivation from the right:
/// `δ(ψ∨φ) = (-1)^{n-l}(δψ)∨φ + ψ∨(δφ)` for `φ` of grade `l`.
#[test]
fn codifferential_leibniz_over_regressive() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=4 {
        for (name, ctx) in test_metrics(n) {
            for k in 0..=n {
                for l in 0..=n {
                    let w = random_homogeneous_form(&mut rng, n, k, 2);
                    let z = random_homogeneous_form(&mut rng, n, l, 2);
                    let sign = if (n - l) % 2 == 0 { 1 } else { -1 };
                    let lhs = codifferential(&regressive(&w, &z).unwrap(), &ctx).unwrap();
                    let rhs = regressive(&codifferential(&w, &ctx).unwrap(), &z)
                        .unwrap()
                        .scale(&rat(sign))
                        + regressive(&w, &codifferential(&z, &ctx).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{name} n={n} k={k} l={l}");
                }
            }
        }
    }
}

/// The left-derivation form with sign `(-1)^{n-k}` is not an identity for
/// this `δ`: one concrete counterexample in Euclidean `ℝ²`, where the sign
/// coincides with `(-1)^k`.
#[test]
fn left_leibniz_form_has_a_counterexample() {
    let ctx = MetricContext::euclidean(2);
    let w = form(2, &[1], &x(1));
    let z = form(2, &[1, 2], &x(1));
    let lhs = codifferential(&regressive(&w, &z).unwrap(), &ctx).unwrap();
    let k = 1;
    let sign = if (2 - k) % 2 == 0 { 1 } else { -1 };
    let rhs = regressive(&codifferential(&w, &ctx).unwrap(), &z).unwrap()
        + regressive(&w, &codifferential(&z, &ctx).unwrap())
            .unwrap()
            .scale(&rat(sign));
    assert_ne!(lhs, rhs);
}

#[test]
fn nilpotency_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=4 {
        let ctx = MetricContext::lorentzian(n);
        for _ in 0..10 {
            let w = random_form(&mut rng, n, 3, 3);
            assert!(d(&d(&w)).is_zero());
            assert!(codifferential(&codifferential(&w, &ctx).unwrap(), &ctx)
                .unwrap()
                .is_zero());
        }
    }
}

#[test]
fn laplacian_commutes_with_d_and_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 2..=3 {
        let ctx = MetricContext::euclidean(n);
        for _ in 0..10 {
            let w = random_form(&mut rng, n, 3, 3);
            let lw = laplacian(&w, &ctx).unwrap();
            assert_eq!(laplacian(&d(&w), &ctx).unwrap(), d(&lw));
            assert_eq!(
                laplacian(&codifferential(&w, &ctx).unwrap(), &ctx).unwrap(),
                codifferential(&lw, &ctx).unwrap()
            );
        }
    }
}

#[test]
fn d_and_delta_shift_grades() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for n in 1..=4 {
        let ctx = MetricContext::euclidean(n);
        for k in 0..=n {
            let w = random_homogeneous_form(&mut rng, n, k, 3);
            let dw = d(&w);
            assert!(dw.is_zero() || dw.homogeneous_grade() == Some(k + 1));
            let sw = codifferential(&w, &ctx).unwrap();
            assert!(sw.is_zero() || (k > 0 && sw.homogeneous_grade() == Some(k - 1)));
            let mut iter = w.clone();
            for _ in 0..(n - k + 1) {
                iter = d(&iter);
            }
            assert!(iter.is_zero());
        }
    }
}

#[test]
fn d_is_eps_linear() {
    let psi = form(3, &[2], &(x(1) * x(3)));
    assert_eq!(d(&psi.chirality_flip()), d(&psi).chirality_flip());
    assert_eq!(dx(3, 2).unwrap(), PolyForm::from_indices(3, &[2]).unwrap());
}

#[test]
fn derham_chirality_examples() {
    for n in 1..=6 {
        let top = derham_chirality(n, n).unwrap();
        assert_eq!(
            top,
            if n % 2 == 0 {
                Chirality::Chiral
            } else {
                Chirality::Achiral
            }
        );
        assert_eq!(derham_chirality(1, n).unwrap(), Chirality::Achiral);
        assert_eq!(derham_sequence(n).len(), n + 1);
    }
    assert!(derham_chirality(4, 3).is_err());
}
