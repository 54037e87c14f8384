//! Naive loop oracles and seeded instance generators shared by the
//! integration targets. Nothing here goes through the library kernels.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xlab_core::{random_polynomial, BivariatePolynomial, GroundSet, Rational};

pub fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Term-by-term evaluation with repeated multiplication.
pub fn eval(g: &BivariatePolynomial, x: &Rational, y: &Rational) -> Rational {
    let mut total = Rational::zero();
    for (i, j, c) in g.terms() {
        let mut t = c.clone();
        for _ in 0..i {
            t = t * x;
        }
        for _ in 0..j {
            t = t * y;
        }
        total = total + t;
    }
    total
}

pub fn naive_quotient_set(g: &BivariatePolynomial, a: &GroundSet) -> Vec<Rational> {
    let mut out = BTreeSet::new();
    for a1 in a.iter() {
        for a2 in a.iter() {
            for b1 in a.iter() {
                for b2 in a.iter() {
                    if b1 != b2 {
                        let num = eval(g, a1, b1) - eval(g, a2, b2);
                        out.insert(num.checked_div(&(b2 - b1)).unwrap());
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Abscissas where line pairs cross, counted over ordered quadruples.
pub fn naive_histogram(g: &BivariatePolynomial, a: &GroundSet) -> Vec<(Rational, u64)> {
    let mut out = BTreeMap::new();
    for a1 in a.iter() {
        for a2 in a.iter() {
            for b1 in a.iter() {
                for b2 in a.iter() {
                    if b1 != b2 {
                        let num = eval(g, a1, b1) - eval(g, a2, b2);
                        *out.entry(num.checked_div(&(b1 - b2)).unwrap()).or_insert(0u64) += 1;
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Lines `y = b x - g(a, b)` for `(a, b)` in `A x A`, one per pair.
pub fn naive_lines(g: &BivariatePolynomial, a: &GroundSet) -> Vec<(Rational, Rational)> {
    let mut lines = Vec::new();
    for x in a.iter() {
        for b in a.iter() {
            lines.push((b.clone(), -eval(g, x, b)));
        }
    }
    lines
}

pub fn naive_energy(lines: &[(Rational, Rational)], xs: &[Rational]) -> u128 {
    let mut total = 0u128;
    for x in xs {
        let mut col: BTreeMap<Rational, u128> = BTreeMap::new();
        for (s, c) in lines {
            *col.entry(s * x + c).or_insert(0) += 1;
        }
        total += col.values().map(|n| n * n).sum::<u128>();
    }
    total
}

pub fn naive_incidences(lines: &[(Rational, Rational)], points: &[(Rational, Rational)]) -> u64 {
    let distinct: BTreeSet<_> = points.iter().cloned().collect();
    let mut count = 0;
    for (x, y) in &distinct {
        for (s, c) in lines {
            if &(s * x + c) == y {
                count += 1;
            }
        }
    }
    count
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Distinct rationals `p/q` with small numerators and denominators.
pub fn random_set(rng: &mut ChaCha8Rng, size: usize) -> GroundSet {
    let mut vals = BTreeSet::new();
    while vals.len() < size {
        let p = rng.gen_range(-30i64..=30);
        let q = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(2i64..=5) };
        vals.insert(Rational::normalize(p, q).unwrap());
    }
    GroundSet::new(vals).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::normalize(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=7)).unwrap()
}

pub fn random_g(rng: &mut ChaCha8Rng, require_x: bool) -> BivariatePolynomial {
    random_polynomial(rng, 4, 4, 5, require_x)
}
