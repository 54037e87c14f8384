//! Ground-set and polynomial generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::ground::GroundSet;
use crate::poly::BivariatePolynomial;

/// Recipe for a ground set. Serialized with a `kind` tag, e.g.
/// `{"kind": "arithmetic", "start": "1", "step": "1", "size": 5}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SetSpec {
    Arithmetic { start: Rational, step: Rational, size: usize },
    Geometric { start: Rational, ratio: Rational, size: usize },
    /// Distinct integers drawn without replacement from `low..=high`.
    UniformRandomInteger { low: i64, high: i64, size: usize, seed: u64 },
    Explicit { values: Vec<Rational> },
}

impl SetSpec {
    pub fn arithmetic(start: i64, step: i64, size: usize) -> Self {
        SetSpec::Arithmetic { start: start.into(), step: step.into(), size }
    }

    pub fn size(&self) -> usize {
        match self {
            SetSpec::Arithmetic { size, .. }
            | SetSpec::Geometric { size, .. }
            | SetSpec::UniformRandomInteger { size, .. } => *size,
            SetSpec::Explicit { values } => values.len(),
        }
    }

    /// Same family at a different size. Explicit sets are truncated to their
    /// `size` smallest elements.
    pub fn with_size(&self, n: usize) -> Result<Self> {
        let mut out = self.clone();
        match &mut out {
            SetSpec::Arithmetic { size, .. }
            | SetSpec::Geometric { size, .. }
            | SetSpec::UniformRandomInteger { size, .. } => *size = n,
            SetSpec::Explicit { values } => {
                if n > values.len() {
                    return Err(Error::InvalidSet(format!("explicit set has {} elements, need {n}", values.len())));
                }
                values.sort();
                values.truncate(n);
            }
        }
        Ok(out)
    }

    pub fn with_seed(&self, new_seed: u64) -> Self {
        let mut out = self.clone();
        if let SetSpec::UniformRandomInteger { seed, .. } = &mut out {
            *seed = new_seed;
        }
        out
    }
}

pub fn generate_set(spec: &SetSpec) -> Result<GroundSet> {
    let size = spec.size();
    if size == 0 {
        return Err(Error::InvalidSet("size must be at least 1".into()));
    }
    let values: Vec<Rational> = match spec {
        SetSpec::Arithmetic { start, step, size } => {
            if step.is_zero() && *size > 1 {
                return Err(Error::InvalidSet("arithmetic step 0 repeats elements".into()));
            }
            (0..*size as i64).map(|k| start + &(step * &Rational::integer(k))).collect()
        }
        SetSpec::Geometric { start, ratio, size } => {
            let one = Rational::one();
            if *size > 1 && (ratio.is_zero() || *ratio == one || start.is_zero()) {
                return Err(Error::InvalidSet(format!("geometric ratio {ratio} from {start} repeats elements")));
            }
            let mut v = Vec::with_capacity(*size);
            let mut cur = start.clone();
            for _ in 0..*size {
                v.push(cur.clone());
                cur = &cur * ratio;
            }
            v
        }
        SetSpec::UniformRandomInteger { low, high, size, seed } => {
            if high < low {
                return Err(Error::InvalidSet(format!("empty range [{low}, {high}]")));
            }
            let span = (*high as i128 - *low as i128 + 1) as u128;
            if span < *size as u128 {
                return Err(Error::InvalidSet(format!("range [{low}, {high}] has fewer than {size} integers")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let span = usize::try_from(span).map_err(|_| Error::InvalidSet("range too wide".into()))?;
            sample(&mut rng, span, *size).into_iter().map(|k| Rational::integer(*low + k as i64)).collect()
        }
        SetSpec::Explicit { values } => values.clone(),
    };
    GroundSet::new(values).map_err(|e| Error::InvalidSet(e.to_string()))
}

/// Random polynomial with integer coefficients in `-coef..=coef`, total degree
/// at most `max_degree`, and at most `max_terms` terms. When `require_x` is set
/// at least one term carries a positive power of `x`.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    max_degree: u32,
    max_terms: usize,
    coef: i64,
    require_x: bool,
) -> BivariatePolynomial {
    loop {
        let terms = rng.gen_range(1..=max_terms.max(1));
        let mut g = BivariatePolynomial::zero();
        for _ in 0..terms {
            let deg = rng.gen_range(0..=max_degree);
            let i = rng.gen_range(0..=deg);
            let c = rng.gen_range(-coef..=coef);
            g = g + BivariatePolynomial::monomial(Rational::integer(c), i, deg - i);
        }
        if !g.is_zero() && (!require_x || g.depends_on_x()) {
            return g;
        }
    }
}
