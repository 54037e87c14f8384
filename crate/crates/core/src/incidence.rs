//! The dual line family `l_{a,b}: y = b x - g(a, b)` and exact counts over its
//! arrangement: vertical sections, intersection points with multiplicities,
//! rich points, restricted energy and point-line incidences.

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::bisector::PlanarPoint;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::ground::GroundSet;
use crate::parallel::ComputeOptions;
use crate::poly::BivariatePolynomial;
use crate::scaled::{common_scale, fits_small, key_to_rational, max_bits, reduce, ExactInt};

/// Where a line instance came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LineSource {
    /// The pair `(a, b)` of the dual construction.
    Pair(Rational, Rational),
    /// Position in a caller-supplied list.
    Explicit(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub slope: Rational,
    pub intercept: Rational,
    pub tags: Vec<LineSource>,
}

impl Line {
    pub fn multiplicity(&self) -> u64 {
        self.tags.len() as u64
    }

    pub fn y_at(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    pub fn contains(&self, p: &PlanarPoint) -> bool {
        self.y_at(&p.x) == p.y
    }
}

/// Distinct non-vertical lines with multiplicities, sorted by
/// `(slope, intercept)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineMultiset {
    lines: Vec<Line>,
    total_weight: u64,
}

impl LineMultiset {
    fn from_instances(instances: impl IntoIterator<Item = (Rational, Rational, LineSource)>) -> Self {
        let mut merged: BTreeMap<(Rational, Rational), Vec<LineSource>> = BTreeMap::new();
        let mut total_weight = 0;
        for (slope, intercept, tag) in instances {
            merged.entry((slope, intercept)).or_default().push(tag);
            total_weight += 1;
        }
        let lines = merged
            .into_iter()
            .map(|((slope, intercept), tags)| Line { slope, intercept, tags })
            .collect();
        LineMultiset { lines, total_weight }
    }

    /// Lines `y = slope x + intercept`, one instance per entry.
    pub fn from_equations(equations: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        Self::from_instances(equations.into_iter().enumerate().map(|(k, (s, c))| (s, c, LineSource::Explicit(k))))
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    /// Number of line instances, counted with multiplicity.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.lines.iter().map(Line::multiplicity).max().unwrap_or(0)
    }

    /// Lines whose multiplicity exceeds `cap`.
    pub fn multiplicity_violations(&self, cap: u64) -> Vec<&Line> {
        self.lines.iter().filter(|l| l.multiplicity() > cap).collect()
    }

    /// `sum over distinct lines of multiplicity^2`: the number of ordered
    /// instance pairs lying on a common line.
    pub fn square_weight(&self) -> u128 {
        self.lines.iter().map(|l| (l.multiplicity() as u128).pow(2)).sum()
    }

    pub fn slope_class_count(&self) -> usize {
        let mut n = 0;
        for (k, l) in self.lines.iter().enumerate() {
            if k == 0 || self.lines[k - 1].slope != l.slope {
                n += 1;
            }
        }
        n
    }

    /// `y -> n(x, y)` along the vertical line through `x`.
    pub fn vertical_section(&self, x: &Rational) -> BTreeMap<Rational, u64> {
        let mut out = BTreeMap::new();
        for l in &self.lines {
            *out.entry(l.y_at(x)).or_insert(0) += l.multiplicity();
        }
        out
    }

    /// Every point where at least two lines of distinct slope meet, with
    /// `n(x, y)`; sorted by `(x, y)`.
    pub fn intersection_points(&self, opts: &ComputeOptions) -> Result<Vec<PointMultiplicity>> {
        let values = self.lines.iter().flat_map(|l| [&l.slope, &l.intercept]);
        let (lcm, scaled) = common_scale(values);
        let slopes: Vec<&BigInt> = scaled.iter().step_by(2).collect();
        let intercepts: Vec<&BigInt> = scaled.iter().skip(1).step_by(2).collect();
        let sb = max_bits(slopes.iter().copied());
        let cb = max_bits(intercepts.iter().copied());
        // Largest intermediates: B_i C_j - B_j C_i and lcm (B_i - B_j).
        let small = fits_small(sb + cb + 2) && fits_small(lcm.bits() + sb + 2);
        let mults: Vec<u64> = self.lines.iter().map(Line::multiplicity).collect();
        let mut classes = Vec::with_capacity(self.lines.len());
        for (k, l) in self.lines.iter().enumerate() {
            let next = match k {
                0 => 0,
                _ if self.lines[k - 1].slope == l.slope => classes[k - 1],
                _ => classes[k - 1] + 1,
            };
            classes.push(next);
        }
        opts.install(|| {
            if small {
                let kernel = ArrangementKernel::<i128>::new(&slopes, &intercepts, &lcm, &mults, &classes);
                kernel.run(opts.memory_cap)
            } else {
                let kernel = ArrangementKernel::<BigInt>::new(&slopes, &intercepts, &lcm, &mults, &classes);
                kernel.run(opts.memory_cap)
            }
        })
    }

    /// `sum_{x in xs} sum_y n(x, y)^2` over all crossings of the vertical
    /// lines, including crossings with a single line of multiplicity `m`
    /// (each contributes `m^2`).
    pub fn energy_restricted(&self, xs: &[Rational], opts: &ComputeOptions) -> Result<u128> {
        if xs.is_empty() {
            return Ok(0);
        }
        let points = self.intersection_points(opts)?;
        Ok(energy_from_points(&points, xs, self.square_weight()))
    }

    /// `|R_t|` over the intersection points.
    pub fn rich_points(&self, t: u64, opts: &ComputeOptions) -> Result<RichPointReport> {
        let points = self.intersection_points(opts)?;
        RichPointReport::from_points(&points, t, self.total_weight)
    }

    /// Exact incidence count between a point set and the line multiset.
    pub fn incidences(&self, points: &[PlanarPoint]) -> IncidenceReport {
        let mut by_slope: BTreeMap<&Rational, FxHashMap<&Rational, u64>> = BTreeMap::new();
        for l in &self.lines {
            by_slope.entry(&l.slope).or_default().insert(&l.intercept, l.multiplicity());
        }
        let mut distinct: Vec<&PlanarPoint> = points.iter().collect();
        distinct.sort();
        distinct.dedup();
        let count = distinct
            .par_iter()
            .map(|p| {
                by_slope
                    .iter()
                    .map(|(slope, intercepts)| {
                        let c = &p.y - *slope * &p.x;
                        intercepts.get(&c).copied().unwrap_or(0)
                    })
                    .sum::<u64>()
            })
            .sum();
        let n = distinct.len() as f64;
        let m = self.total_weight as f64;
        IncidenceReport {
            points: distinct.len(),
            lines: self.total_weight,
            incidences: count,
            reference: (n * m).powf(2.0 / 3.0) + n + m,
        }
    }
}

/// The dual family `{ y = b x - g(a, b) : a in A, b in B }`.
pub fn build_lines(g: &BivariatePolynomial, a_set: &GroundSet, b_set: &GroundSet) -> Result<LineMultiset> {
    if a_set.is_empty() || b_set.is_empty() {
        return Err(Error::EmptySet);
    }
    let instances = a_set.iter().flat_map(|a| {
        b_set.iter().map(move |b| (b.clone(), -g.evaluate(a, b), LineSource::Pair(a.clone(), b.clone())))
    });
    Ok(LineMultiset::from_instances(instances))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointMultiplicity {
    pub x: Rational,
    pub y: Rational,
    /// `n(x, y)`: line instances through the point.
    pub count: u64,
    /// Ordered instance pairs through the point that lie on the same line,
    /// `sum of multiplicity^2` over the lines through it. `count^2 -
    /// same_line_pairs` is the number of ordered distinct-slope pairs.
    pub same_line_pairs: u64,
}

impl PointMultiplicity {
    pub fn distinct_slope_pairs(&self) -> u64 {
        self.count * self.count - self.same_line_pairs
    }
}

/// Restricted energy from materialized points; `xs` is treated as a set and
/// `square_weight` is the sum of squared line multiplicities.
pub fn energy_from_points(points: &[PointMultiplicity], xs: &[Rational], square_weight: u128) -> u128 {
    let mut xs: Vec<&Rational> = xs.iter().collect();
    xs.sort();
    xs.dedup();
    xs.iter()
        .map(|x| {
            let lo = points.partition_point(|p| &p.x < *x);
            let hi = points.partition_point(|p| &p.x <= *x);
            let section = &points[lo..hi];
            let covered: u128 = section.iter().map(|p| p.same_line_pairs as u128).sum();
            let squares: u128 = section.iter().map(|p| (p.count as u128).pow(2)).sum();
            squares + (square_weight - covered)
        })
        .sum()
}

/// Writes points as CSV with columns `x, y, n`.
pub fn write_points_csv<W: Write>(points: &[PointMultiplicity], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "n"])?;
    for p in points {
        w.write_record([p.x.to_string(), p.y.to_string(), p.count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RichPointReport {
    pub threshold: u64,
    pub count: u64,
    /// `|R_t| t^3 / W^2` with `W` the total line weight.
    pub bound_ratio: Rational,
}

impl RichPointReport {
    pub fn from_points(points: &[PointMultiplicity], t: u64, total_weight: u64) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidThreshold(t));
        }
        let count = points.iter().filter(|p| p.count >= t).count() as u64;
        let w = BigInt::from(total_weight);
        let bound_ratio = if total_weight == 0 {
            Rational::zero()
        } else {
            Rational::normalize(BigInt::from(count) * BigInt::from(t).pow(3), &w * &w)?
        };
        Ok(RichPointReport { threshold: t, count, bound_ratio })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidenceReport {
    pub points: usize,
    pub lines: u64,
    pub incidences: u64,
    /// `n^(2/3) m^(2/3) + n + m`, for comparison only.
    pub reference: f64,
}

/// Per-point accumulator while scanning one base line: summed multiplicity of
/// partner lines, their summed squares, and the lowest partner index.
type Partial = (u64, u64, usize);

struct ArrangementKernel<'a, T> {
    slopes: Vec<T>,
    intercepts: Vec<T>,
    lcm: T,
    mults: &'a [u64],
    classes: &'a [usize],
}

impl<'a, T: ExactInt> ArrangementKernel<'a, T> {
    fn new(slopes: &[&BigInt], intercepts: &[&BigInt], lcm: &BigInt, mults: &'a [u64], classes: &'a [usize]) -> Self {
        ArrangementKernel {
            slopes: slopes.iter().map(|v| T::from_big(v)).collect(),
            intercepts: intercepts.iter().map(|v| T::from_big(v)).collect(),
            lcm: T::from_big(lcm),
            mults,
            classes,
        }
    }

    /// Each point is emitted by the lowest-indexed line through it, which sees
    /// every other line through the point while scanning its partners.
    fn points_on(&self, i: usize) -> Vec<((T, T), (T, T), u64, u64)> {
        let (bi, ci) = (&self.slopes[i], &self.intercepts[i]);
        let mut local: FxHashMap<((T, T), (T, T)), Partial> = FxHashMap::default();
        for j in 0..self.slopes.len() {
            if self.classes[j] == self.classes[i] {
                continue;
            }
            let (bj, cj) = (&self.slopes[j], &self.intercepts[j]);
            let dslope = bi.clone() - bj.clone();
            let x = reduce(cj.clone() - ci.clone(), dslope.clone());
            let y = reduce(bi.clone() * cj.clone() - bj.clone() * ci.clone(), self.lcm.clone() * dslope);
            let m = self.mults[j];
            let e = local.entry((x, y)).or_insert((0, 0, usize::MAX));
            e.0 += m;
            e.1 += m * m;
            e.2 = e.2.min(j);
        }
        let mi = self.mults[i];
        local
            .into_iter()
            .filter(|(_, (_, _, lowest))| *lowest > i)
            .map(|((x, y), (sum, squares, _))| (x, y, mi + sum, mi * mi + squares))
            .collect()
    }

    fn run(&self, cap: usize) -> Result<Vec<PointMultiplicity>> {
        let raw: Vec<_> = (0..self.slopes.len())
            .into_par_iter()
            .map(|i| self.points_on(i))
            .try_fold(Vec::new, |mut acc, mut pts| {
                acc.append(&mut pts);
                if acc.len() > cap {
                    Err(Error::ResourceCap { cap })
                } else {
                    Ok(acc)
                }
            })
            .try_reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                if a.len() > cap {
                    Err(Error::ResourceCap { cap })
                } else {
                    Ok(a)
                }
            })?;
        let mut points: Vec<PointMultiplicity> = raw
            .into_iter()
            .map(|(x, y, count, same_line_pairs)| PointMultiplicity {
                x: key_to_rational(x),
                y: key_to_rational(y),
                count,
                same_line_pairs,
            })
            .collect();
        points.par_sort_unstable_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
        Ok(points)
    }
}
