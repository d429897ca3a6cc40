#![allow(dead_code)]

pub mod corpus;

use counterspace::forms::PolyForm;
use counterspace::poly::Polynomial;
use counterspace::{rat, ExtendedMultivector, Hyperbolic, MetricContext, Rational};
use num_traits::{One, Zero};
use rand::Rng;

pub type Mv = ExtendedMultivector;

pub fn e(n: usize, ix: &[usize]) -> Mv {
    Mv::from_indices(n, ix).unwrap()
}

pub fn eps_mv(n: usize) -> Mv {
    Mv::eps(n)
}

pub fn h(a: i64, b: i64) -> Hyperbolic<Rational> {
    Hyperbolic::new(rat(a), rat(b))
}

/// Sign of a sequence of distinct integers by counting inversions.
pub fn inversion_sign(seq: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Leibniz expansion over all permutations.
pub fn det_leibniz(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut total = Rational::zero();
    for p in permutations(n) {
        let mut term = Rational::from_integer(inversion_sign(&p).into());
        for (i, &j) in p.iter().enumerate() {
            term *= &m[i][j];
        }
        total += term;
    }
    total
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out.extend(subsets(&items[1..], k));
    out
}

pub fn all_index_sets(n: usize) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (1..=n).collect();
    (0..=n).flat_map(|k| subsets(&idx, k)).collect()
}

fn minus(a: &[usize], s: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| !s.contains(x)).collect()
}

fn unit_row(n: usize, i: usize) -> Vec<Rational> {
    (1..=n).map(|j| if i == j { rat(1) } else { rat(0) }).collect()
}

/// The bracket of covectors `e^{s1},…,e^{sn}` as a plain determinant;
/// the caller multiplies by `eps`.
fn bracket_det(n: usize, factors: &[usize]) -> Rational {
    let rows: Vec<Vec<Rational>> = factors.iter().map(|&i| unit_row(n, i)).collect();
    det_leibniz(&rows)
}

/// `A ∨ B = Σ_(A) [A_(1), B] A_(2)` with `A_(1)` of grade `n - l`, where the
/// split `A = A_(1) ∧ A_(2)` carries the sign of the shuffle.
pub fn split_sum_regressive(n: usize, a: &[usize], b: &[usize]) -> Mv {
    let mut out = Mv::zero(n);
    if a.len() + b.len() < n {
        return out;
    }
    let first_grade = n - b.len();
    for s in subsets(a, first_grade) {
        let rest = minus(a, &s);
        let shuffle: Vec<usize> = s.iter().chain(&rest).copied().collect();
        let sign = inversion_sign(&shuffle);
        let factors: Vec<usize> = s.iter().chain(b).copied().collect();
        let det = bracket_det(n, &factors);
        if det.is_zero() {
            continue;
        }
        let coeff = Hyperbolic::new(rat(0), det * rat(sign));
        out = out + e(n, &rest).mul_coefficient(&coeff);
    }
    out
}

/// Linear extension of a blade oracle to whole multivectors.
pub fn bilinear_oracle(psi: &Mv, phi: &Mv, f: impl Fn(&[usize], &[usize]) -> Mv) -> Mv {
    let mut out = Mv::zero(psi.dim());
    for (a, ca) in psi.terms() {
        for (b, cb) in phi.terms() {
            let r = f(&a.indices(), &b.indices());
            out = out + r.mul_coefficient(&(ca.clone() * cb.clone()));
        }
    }
    out
}

/// The Gram determinant `det(g(e^{a_i}, e^{c_j}))` from a metric matrix.
fn gram(g: &[Vec<Rational>], a: &[usize], c: &[usize]) -> Rational {
    let m: Vec<Vec<Rational>> = a
        .iter()
        .map(|&i| c.iter().map(|&j| g[i - 1][j - 1].clone()).collect())
        .collect();
    if m.is_empty() {
        return rat(1);
    }
    det_leibniz(&m)
}

pub fn metric_rows(ctx: &MetricContext) -> Vec<Vec<Rational>> {
    let n = ctx.dim();
    (0..n)
        .map(|i| (0..n).map(|j| ctx.g().get(i, j).clone()).collect())
        .collect()
}

fn reversion_sign(k: usize) -> i64 {
    if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `A ⌟ B = Σ_{C ⊂ B, |C| = |A|} sign(C, B∖C) ⟨rev A, C⟩ (B∖C)` by Laplace
/// expansion of the Gram determinant.
pub fn contraction_oracle(g: &[Vec<Rational>], n: usize, a: &[usize], b: &[usize]) -> Mv {
    let mut out = Mv::zero(n);
    if a.len() > b.len() {
        return out;
    }
    for c in subsets(b, a.len()) {
        let rest = minus(b, &c);
        let shuffle: Vec<usize> = c.iter().chain(&rest).copied().collect();
        let coeff = gram(g, a, &c) * rat(inversion_sign(&shuffle) * reversion_sign(a.len()));
        if coeff.is_zero() {
            continue;
        }
        out = out + e(n, &rest).scale(&coeff);
    }
    out
}

/// `⋆A = rev(A) ⌟ η` for metrics with `|det g| = 1`.
pub fn star_oracle(ctx: &MetricContext, a: &[usize]) -> Mv {
    let n = ctx.dim();
    let full: Vec<usize> = (1..=n).collect();
    contraction_oracle(&metric_rows(ctx), n, a, &full).scale(&rat(reversion_sign(a.len())))
}

pub fn star_oracle_mv(ctx: &MetricContext, psi: &Mv) -> Mv {
    let mut out = Mv::zero(psi.dim());
    for (a, c) in psi.terms() {
        out = out + star_oracle(ctx, &a.indices()).mul_coefficient(c);
    }
    out
}

/// Inverse of [`star_oracle`] for diagonal `±1` metrics, where `⋆` sends
/// each blade to a signed complementary blade.
pub fn star_inverse_oracle(ctx: &MetricContext, psi: &Mv) -> Mv {
    let n = ctx.dim();
    let mut out = Mv::zero(n);
    for (b, c) in psi.terms() {
        let comp: Vec<usize> = (1..=n).filter(|i| !b.indices().contains(i)).collect();
        let image = star_oracle(ctx, &comp);
        let coeff = image.coefficient(*b).a;
        assert!(!coeff.is_zero(), "star oracle must be a signed permutation");
        out = out + e(n, &comp).mul_coefficient(c).scale(&(Rational::one() / coeff));
    }
    out
}

/// Clifford product of basis blades for a diagonal metric: concatenate,
/// bubble sort, and collapse equal neighbours to `g^{ii}`.
pub fn clifford_blade_oracle(g: &[Vec<Rational>], n: usize, a: &[usize], b: &[usize]) -> Mv {
    let mut seq: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut coeff = rat(1);
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < seq.len() {
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                coeff = -coeff;
                changed = true;
            } else if seq[i] == seq[i + 1] {
                coeff *= &g[seq[i] - 1][seq[i] - 1];
                seq.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    e(n, &seq).scale(&coeff)
}

pub fn clifford_oracle(ctx: &MetricContext, psi: &Mv, phi: &Mv) -> Mv {
    let g = metric_rows(ctx);
    bilinear_oracle(psi, phi, |a, b| clifford_blade_oracle(&g, ctx.dim(), a, b))
}

/// `ψ ∗ φ = ⋆⁻¹[(⋆ψ)(⋆φ)]` entirely through the oracles above.
pub fn counterspace_oracle(ctx: &MetricContext, psi: &Mv, phi: &Mv) -> Mv {
    let p = clifford_oracle(ctx, &star_oracle_mv(ctx, psi), &star_oracle_mv(ctx, phi));
    star_inverse_oracle(ctx, &p)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = rng.gen_range(1..=3);
    Rational::new(num.into(), den.into())
}

/// A multivector with up to `terms` random blades and random hyperbolic
/// coefficients.
pub fn random_mv<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Mv {
    let mut out = Mv::zero(n);
    for _ in 0..terms {
        let mask: usize = rng.gen_range(0..(1 << n));
        let ix: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let c = Hyperbolic::new(random_rational(rng), random_rational(rng));
        out = out + e(n, &ix).mul_coefficient(&c);
    }
    out
}

/// A random polynomial in `x1..xn` of total degree at most `deg`.
pub fn random_poly<R: Rng>(rng: &mut R, n: usize, deg: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut budget = rng.gen_range(0..=deg);
        while budget > 0 {
            exps[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        p = p + Polynomial::monomial(random_rational(rng), exps);
    }
    p
}

/// A random polynomial form with achiral and chiral coefficients.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, deg: u32, terms: usize) -> PolyForm {
    let mut out = PolyForm::zero(n);
    for _ in 0..terms {
        let mask: usize = rng.gen_range(0..(1 << n));
        let ix: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let a = random_poly(rng, n, deg, 2);
        let b = if rng.gen_bool(0.3) {
            random_poly(rng, n, deg, 1)
        } else {
            Polynomial::zero()
        };
        out = out
            + PolyForm::from_indices(n, &ix)
                .unwrap()
                .mul_coefficient(&Hyperbolic::new(a, b));
    }
    out
}

/// A random homogeneous form of grade `k`.
pub fn random_homogeneous_form<R: Rng>(rng: &mut R, n: usize, k: usize, deg: u32) -> PolyForm {
    let idx: Vec<usize> = (1..=n).collect();
    let blades = subsets(&idx, k);
    let mut out = PolyForm::zero(n);
    for _ in 0..2 {
        let ix = &blades[rng.gen_range(0..blades.len())];
        let a = random_poly(rng, n, deg, 2);
        out = out + PolyForm::from_indices(n, ix).unwrap().mul_ring(&a);
    }
    out
}

pub fn test_metrics(n: usize) -> Vec<(&'static str, MetricContext)> {
    vec![
        ("euclidean", MetricContext::euclidean(n)),
        ("lorentzian", MetricContext::lorentzian(n)),
    ]
}
