//! Perpendicular bisectors of a grid `A x A` and their crossings with the
//! y-axis.
//!
//! For `p = (x1, y1)` and `q = (x2, y2)` with `y1 != y2`, the bisector meets
//! `x = 0` at `((x2^2 - x1^2) + (y2^2 - y1^2)) / (2 (y2 - y1))`, which is the
//! difference quotient of `-(x^2 + y^2) / 2`. [`intercept_polynomial`] returns
//! that polynomial so the intercept set can be checked against the quotient-set
//! machinery.

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::ground::GroundSet;
use crate::poly::BivariatePolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanarPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanarPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        PlanarPoint::new(Rational::integer(x), Rational::integer(y))
    }
}

/// y-axis crossing of the perpendicular bisector of `p` and `q`, from the
/// closed form.
pub fn bisector_y_intercept(p: &PlanarPoint, q: &PlanarPoint) -> Result<Rational> {
    if p.y == q.y {
        return Err(Error::DegeneratePair);
    }
    let num = (&q.x * &q.x - &p.x * &p.x) + (&q.y * &q.y - &p.y * &p.y);
    let den = Rational::integer(2) * (&q.y - &p.y);
    let value = num.checked_div(&den)?;
    debug_assert_eq!(Some(&value), bisector_y_intercept_constructive(p, q).ok().as_ref());
    Ok(value)
}

/// Same crossing built from the midpoint and the negative-reciprocal slope.
pub fn bisector_y_intercept_constructive(p: &PlanarPoint, q: &PlanarPoint) -> Result<Rational> {
    if p.y == q.y {
        return Err(Error::DegeneratePair);
    }
    let half = Rational::normalize(1, 2)?;
    let mid_x = (&p.x + &q.x) * &half;
    let mid_y = (&p.y + &q.y) * &half;
    // Direction of pq is (dx, dy); the bisector has slope -dx/dy.
    let slope = -(&q.x - &p.x).checked_div(&(&q.y - &p.y))?;
    Ok(mid_y - slope * mid_x)
}

/// `-(x^2 + y^2) / 2`.
pub fn intercept_polynomial() -> BivariatePolynomial {
    let c = Rational::normalize(-1, 2).expect("nonzero denominator");
    BivariatePolynomial::monomial(c.clone(), 2, 0) + BivariatePolynomial::monomial(c, 0, 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BisectorSummary {
    pub set_size: usize,
    /// Unordered pairs of distinct grid points.
    pub pairs_considered: u64,
    /// Pairs sharing a y-coordinate; their bisector never crosses the y-axis
    /// at a single point.
    pub pairs_skipped: u64,
    pub intercept_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisectorIntercepts {
    pub values: Vec<Rational>,
    pub summary: BisectorSummary,
}

/// All distinct y-axis crossings of bisectors of pairs in `A x A`.
pub fn bisector_intercept_set(set: &GroundSet) -> BisectorIntercepts {
    let grid: Vec<PlanarPoint> = set
        .iter()
        .flat_map(|x| set.iter().map(move |y| PlanarPoint::new(x.clone(), y.clone())))
        .collect();
    let (values, skipped) = (0..grid.len())
        .into_par_iter()
        .fold(
            || (FxHashSet::default(), 0u64),
            |(mut acc, mut skipped), i| {
                for q in &grid[i + 1..] {
                    match bisector_y_intercept(&grid[i], q) {
                        Ok(v) => {
                            acc.insert(v);
                        }
                        Err(_) => skipped += 1,
                    }
                }
                (acc, skipped)
            },
        )
        .reduce(
            || (FxHashSet::default(), 0u64),
            |(mut a, sa), (b, sb)| {
                a.extend(b);
                (a, sa + sb)
            },
        );
    let mut values: Vec<Rational> = values.into_iter().collect();
    values.sort();
    let n = grid.len() as u64;
    let summary = BisectorSummary {
        set_size: set.len(),
        pairs_considered: n * n.saturating_sub(1) / 2,
        pairs_skipped: skipped,
        intercept_count: values.len(),
    };
    BisectorIntercepts { values, summary }
}
