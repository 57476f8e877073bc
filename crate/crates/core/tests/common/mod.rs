#![allow(dead_code)]

use morin_core::{MapGerm, Polynomial, Rational, RationalMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rational_in(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let q = rng.gen_range(1..=3);
    let p = rng.gen_range(-bound * q..=bound * q);
    Rational::new(p, q)
}

pub fn invertible_matrix(rng: &mut ChaCha8Rng, size: usize) -> RationalMatrix {
    loop {
        let rows = (0..size)
            .map(|_| (0..size).map(|_| rational_in(rng, 3)).collect())
            .collect();
        let m = RationalMatrix::from_rows(rows).unwrap();
        if !m.determinant().unwrap().is_zero() {
            return m;
        }
    }
}

/// Random polynomial in the context variables `vars` with monomials of
/// total degree in `lo..=hi`.
pub fn random_form(
    rng: &mut ChaCha8Rng,
    like: &Polynomial,
    vars: &[usize],
    lo: u32,
    hi: u32,
    terms: usize,
) -> Polynomial {
    let ctx = like.context();
    let mut p = Polynomial::zero(ctx);
    if vars.is_empty() {
        return p;
    }
    for _ in 0..terms {
        let deg = rng.gen_range(lo..=hi);
        let mut e = vec![0u32; ctx.len()];
        for _ in 0..deg {
            e[vars[rng.gen_range(0..vars.len())]] += 1;
        }
        let c = Rational::from(rng.gen_range(-3i64..=3));
        p = p + Polynomial::monomial(ctx, e, c);
    }
    p
}

/// Random linear change of source and target coordinates.
pub fn linear_change(g: &MapGerm, rng: &mut ChaCha8Rng) -> MapGerm {
    let ctx = g.context();
    let src = g.source_vars();
    let a = invertible_matrix(rng, src.len());
    let phi: Vec<Polynomial> = (0..src.len())
        .map(|i| {
            src.iter()
                .enumerate()
                .fold(Polynomial::zero(ctx), |acc, (j, &v)| {
                    acc + Polynomial::var(ctx, v).scale(a.get(i, j))
                })
        })
        .collect();
    let t = invertible_matrix(rng, g.n());
    g.compose_source(&phi, None)
        .unwrap()
        .target_change(&t)
        .unwrap()
}

/// Random triangular change xᵢ ↦ xᵢ + hᵢ(xᵢ₊₁, …) with deg hᵢ in 2..=3,
/// and likewise on the target. The germ is kept to the jet the classifier
/// reads.
pub fn unipotent_change(g: &MapGerm, rng: &mut ChaCha8Rng) -> MapGerm {
    let ctx = g.context();
    let src = g.source_vars();
    let jet = g.n() as u32 + 1;
    let phi: Vec<Polynomial> = (0..src.len())
        .map(|i| {
            Polynomial::var(ctx, src[i])
                + random_form(rng, &g.components()[0], &src[i + 1..], 2, 3, 2)
        })
        .collect();
    let moved = g.compose_source(&phi, Some(jet)).unwrap();
    let f = moved.components().to_vec();
    let n = f.len();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut gj = f[j].clone();
        for _ in 0..2 {
            if j + 1 >= n {
                break;
            }
            let a = rng.gen_range(j + 1..n);
            let b = rng.gen_range(j + 1..n);
            let c = Rational::from(rng.gen_range(-3i64..=3));
            gj = gj + f[a].mul_truncated(&f[b], jet).scale(&c);
            if rng.gen_bool(0.5) {
                let d = rng.gen_range(j + 1..n);
                gj = gj + f[a].mul_truncated(&f[b], jet).mul_truncated(&f[d], jet);
            }
        }
        out.push(gj.truncate(jet));
    }
    MapGerm::new(ctx, out).unwrap()
}
