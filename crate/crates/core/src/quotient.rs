//! Quotient sets `X = {(g(a1,b1) - g(a2,b2)) / (b2 - b1)}`, the quadruple
//! histogram over intersection abscissas, and the numeric check of the
//! incidence argument bounding `|X|` from below.
//!
//! Two sign conventions meet here. `X` divides by `b2 - b1`; the line pair
//! `l_{a1,b1}, l_{a2,b2}` meets at abscissa `(g(a1,b1) - g(a2,b2)) / (b1 - b2)`.
//! The histogram support is therefore `-X`.

use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::generate::{generate_set, SetSpec};
use crate::ground::GroundSet;
use crate::incidence::build_lines;
use crate::parallel::ComputeOptions;
use crate::poly::{degeneracy_test, BivariatePolynomial};
use crate::scaled::{common_scale, fits_small, key_to_rational, max_bits, reduce, ExactInt};

/// Largest `|A|` for which [`verify_chain`] also materializes the arrangement
/// and cross-checks the energy.
pub const ENERGY_CROSS_CHECK_LIMIT: usize = 24;

/// Distinct quotient values in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSet {
    values: Vec<Rational>,
}

impl QuotientSet {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.values.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &QuotientSet) -> bool {
        self.values.iter().all(|v| other.contains(v))
    }

    pub fn negated(&self) -> Vec<Rational> {
        self.values.iter().rev().map(|v| -v).collect()
    }
}

/// `Q(x)` for every abscissa `x` hit by a distinct-slope line pair, sorted by
/// `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrupleHistogram {
    entries: Vec<(Rational, u64)>,
}

impl QuadrupleHistogram {
    pub fn entries(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    pub fn support(&self) -> Vec<Rational> {
        self.entries.iter().map(|(x, _)| x.clone()).collect()
    }

    pub fn get(&self, x: &Rational) -> u64 {
        self.entries.binary_search_by(|(k, _)| k.cmp(x)).map(|i| self.entries[i].1).unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, q)| q).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Quadruples `(a1, a2, b1, b2)` with `b1 != b2`: `n^3 (n - 1)`.
pub fn quadruple_count(n: usize) -> u64 {
    let n = n as u64;
    n.pow(3) * n.saturating_sub(1)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Convention {
    /// Divide by `b2 - b1`.
    Quotient,
    /// Divide by `b1 - b2`.
    Abscissa,
}

/// `L g(a_i, a_j)` and `L a_j` for the common denominator `L`.
struct ValueTable<T> {
    n: usize,
    values: Vec<T>,
    slopes: Vec<T>,
}

enum Table {
    Small(ValueTable<i128>),
    Big(ValueTable<BigInt>),
}

impl Table {
    fn new(g: &BivariatePolynomial, set: &GroundSet) -> Table {
        let elems = set.values();
        let grid: Vec<Rational> =
            elems.iter().flat_map(|a| elems.iter().map(move |b| g.evaluate(a, b))).collect();
        let (_, scaled) = common_scale(grid.iter().chain(elems));
        let (values, slopes) = scaled.split_at(grid.len());
        let bits = max_bits(values).max(max_bits(slopes));
        let n = elems.len();
        if fits_small(bits + 1) {
            Table::Small(ValueTable::from_big(n, values, slopes))
        } else {
            Table::Big(ValueTable::from_big(n, values, slopes))
        }
    }
}

impl<T: ExactInt> ValueTable<T> {
    fn from_big(n: usize, values: &[BigInt], slopes: &[BigInt]) -> Self {
        ValueTable { n, values: values.iter().map(T::from_big).collect(), slopes: slopes.iter().map(T::from_big).collect() }
    }

    fn slope_pairs(&self) -> impl ParallelIterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).into_par_iter().map(move |p| (p / n, p % n)).filter(|(j1, j2)| j1 != j2)
    }

    /// Calls `f` with the reduced key of every quadruple sharing slopes `(j1, j2)`.
    #[inline]
    fn for_each_key(&self, (j1, j2): (usize, usize), conv: Convention, mut f: impl FnMut((T, T))) {
        let n = self.n;
        let den = match conv {
            Convention::Quotient => self.slopes[j2].clone() - self.slopes[j1].clone(),
            Convention::Abscissa => self.slopes[j1].clone() - self.slopes[j2].clone(),
        };
        for i1 in 0..n {
            let v1 = &self.values[i1 * n + j1];
            for i2 in 0..n {
                let num = v1.clone() - self.values[i2 * n + j2].clone();
                f(reduce(num, den.clone()));
            }
        }
    }

    fn distinct(&self, conv: Convention, cap: usize) -> Result<Vec<Rational>> {
        let set = self
            .slope_pairs()
            .try_fold(FxHashSet::default, |mut acc, pair| {
                self.for_each_key(pair, conv, |k| {
                    acc.insert(k);
                });
                if acc.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
                Ok(acc)
            })
            .try_reduce(FxHashSet::default, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                big.extend(small);
                if big.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
                Ok(big)
            })?;
        let mut out: Vec<Rational> = set.into_iter().map(key_to_rational).collect();
        out.par_sort_unstable();
        Ok(out)
    }

    fn histogram(&self, cap: usize) -> Result<Vec<(Rational, u64)>> {
        let map = self
            .slope_pairs()
            .try_fold(FxHashMap::default, |mut acc, pair| {
                self.for_each_key(pair, Convention::Abscissa, |k| {
                    *acc.entry(k).or_insert(0u64) += 1;
                });
                if acc.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
                Ok(acc)
            })
            .try_reduce(FxHashMap::default, |a, b| {
                let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                for (k, v) in small {
                    *big.entry(k).or_insert(0) += v;
                }
                if big.len() > cap {
                    return Err(Error::ResourceCap { cap });
                }
                Ok(big)
            })?;
        let mut out: Vec<(Rational, u64)> = map.into_iter().map(|(k, v)| (key_to_rational(k), v)).collect();
        out.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// Exact quotient set of `g` over `A`; empty when `|A| < 2`.
pub fn quotient_set(g: &BivariatePolynomial, set: &GroundSet, opts: &ComputeOptions) -> Result<QuotientSet> {
    if set.len() < 2 {
        return Ok(QuotientSet { values: Vec::new() });
    }
    let table = Table::new(g, set);
    let values = opts.install(|| match &table {
        Table::Small(t) => t.distinct(Convention::Quotient, opts.memory_cap),
        Table::Big(t) => t.distinct(Convention::Quotient, opts.memory_cap),
    })?;
    Ok(QuotientSet { values })
}

/// `Q(x)` for every intersection abscissa; empty when `|A| < 2`.
pub fn quadruple_histogram(
    g: &BivariatePolynomial,
    set: &GroundSet,
    opts: &ComputeOptions,
) -> Result<QuadrupleHistogram> {
    if set.len() < 2 {
        return Ok(QuadrupleHistogram { entries: Vec::new() });
    }
    let table = Table::new(g, set);
    let entries = opts.install(|| match &table {
        Table::Small(t) => t.histogram(opts.memory_cap),
        Table::Big(t) => t.histogram(opts.memory_cap),
    })?;
    let hist = QuadrupleHistogram { entries };
    let expected = quadruple_count(set.len());
    if hist.total() != expected {
        return Err(Error::ConservationFailure(format!(
            "histogram total {} != |A|^3(|A|-1) = {expected}",
            hist.total()
        )));
    }
    Ok(hist)
}

pub fn write_histogram_csv<W: Write>(hist: &QuadrupleHistogram, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "Q"])?;
    for (x, q) in hist.entries() {
        w.write_record([x.to_string(), q.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// One-column CSV of rational values.
pub fn write_values_csv<W: Write>(header: &str, values: &[Rational], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([header])?;
    for v in values {
        w.write_record([v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreconditionFlags {
    /// `0 in X`.
    pub zero_in_x: bool,
    /// `|X| <= |A|^2 / (4 d^2)`.
    pub size_condition: bool,
    /// Both conditions of the energy bound hold for `X` itself.
    pub energy_hypotheses_hold: bool,
}

/// Every link of the chain
/// `|A|^4 / 2 <= n^3 (n-1) = sum Q(x) <= sum_x sum_y n(x,y)^2 <= C |A|^3 |X|^(1/2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub set_size: usize,
    pub degree: u32,
    pub quotient_size: usize,
    pub quadruple_total: u64,
    pub quadruple_expected: u64,
    /// `quadruple_total >= |A|^4 / 2`.
    pub quadruple_floor_holds: bool,
    /// `sum over distinct lines of multiplicity^2`.
    pub line_square_weight: u128,
    pub max_line_multiplicity: u64,
    pub multiplicity_within_degree: bool,
    /// `sum over x in supp(Q), all y, of n(x,y)^2`.
    pub energy: u128,
    /// Same sum with `x = 0` removed.
    pub energy_nonzero: u128,
    pub nonzero_support_size: usize,
    /// Energy recomputed from the materialized arrangement, for small `|A|`.
    pub energy_materialized: Option<u128>,
    /// `energy / (|A|^3 |X|^(1/2))`; the measured constant `C`.
    pub lemma_ratio: Option<f64>,
    pub lemma_ratio_nonzero: Option<f64>,
    /// `(quadruple_total / (C |A|^3))^2` with the measured `C`.
    pub implied_lower_bound: Option<f64>,
    /// `|X| / |A|^2`.
    pub growth_ratio: Option<f64>,
    pub flags: PreconditionFlags,
    /// `quadruple_total <= energy` and `implied_lower_bound <= |X|`.
    pub chain_holds: bool,
}

/// Computes every quantity of the lower-bound argument for `g` over `A`.
///
/// The energy comes from the identity `sum_y n(x,y)^2 = S + Q(x)`, where `S` is
/// the line square weight: ordered instance pairs through a point either share
/// a line or have distinct slopes. For `|A| <=` [`ENERGY_CROSS_CHECK_LIMIT`] it
/// is recomputed from the materialized intersection points and the two must
/// agree.
pub fn verify_chain(
    g: &BivariatePolynomial,
    set: &GroundSet,
    degree: u32,
    opts: &ComputeOptions,
) -> Result<ChainReport> {
    let verdict = degeneracy_test(g);
    if verdict.degenerate {
        return Err(Error::HypothesisViolated(verdict.describe()));
    }
    if g.total_degree() != Some(degree) {
        return Err(Error::HypothesisViolated(format!(
            "declared degree {degree} differs from total degree {:?} of {g}",
            g.total_degree()
        )));
    }
    let n = set.len();
    let x = quotient_set(g, set, opts)?;
    let hist = quadruple_histogram(g, set, opts)?;
    if hist.support() != x.negated() {
        return Err(Error::ConservationFailure("histogram support is not -X".into()));
    }
    let lines = build_lines(g, set, set)?;
    let square = lines.square_weight();
    let total = hist.total();
    let support = hist.support();
    let energy = support.len() as u128 * square + total as u128;
    let zero = Rational::zero();
    let energy_nonzero = if hist.get(&zero) > 0 || x.contains(&zero) {
        energy - square - hist.get(&zero) as u128
    } else {
        energy
    };
    let nonzero_support_size = support.iter().filter(|v| !v.is_zero()).count();

    let energy_materialized = if n <= ENERGY_CROSS_CHECK_LIMIT {
        let e = lines.energy_restricted(&support, opts)?;
        if e != energy {
            return Err(Error::ConservationFailure(format!(
                "materialized energy {e} != line-pair energy {energy}"
            )));
        }
        Some(e)
    } else {
        None
    };

    let cube = (n as f64).powi(3);
    let ratio = |e: u128, size: usize| (size > 0).then(|| e as f64 / (cube * (size as f64).sqrt()));
    let lemma_ratio = ratio(energy, x.len());
    let implied_lower_bound = lemma_ratio.map(|c| (total as f64 / (c * cube)).powi(2));
    let d2 = (degree as u64).pow(2).max(1);
    let zero_in_x = x.contains(&zero);
    let size_condition = (x.len() as u64) * 4 * d2 <= (n as u64).pow(2);
    let quadruple_expected = quadruple_count(n);
    Ok(ChainReport {
        set_size: n,
        degree,
        quotient_size: x.len(),
        quadruple_total: total,
        quadruple_expected,
        quadruple_floor_holds: 2 * total >= (n as u64).pow(4) || n < 2,
        line_square_weight: square,
        max_line_multiplicity: lines.max_multiplicity(),
        multiplicity_within_degree: lines.max_multiplicity() <= degree as u64,
        energy,
        energy_nonzero,
        nonzero_support_size,
        energy_materialized,
        lemma_ratio,
        lemma_ratio_nonzero: ratio(energy_nonzero, nonzero_support_size),
        implied_lower_bound,
        growth_ratio: (n > 0).then(|| x.len() as f64 / (n as f64).powi(2)),
        flags: PreconditionFlags { zero_in_x, size_condition, energy_hypotheses_hold: !zero_in_x && size_condition },
        chain_holds: total as u128 <= energy
            && implied_lower_bound.is_none_or(|b| b <= x.len() as f64 * (1.0 + 1e-12)),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub size: usize,
    pub quotient_size: usize,
    pub ln_size: f64,
    pub ln_quotient_size: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    /// Least-squares slope of `ln |X|` against `ln |A|`.
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanOptions {
    pub compute: ComputeOptions,
    /// Permit `g` independent of `x`.
    pub allow_degenerate: bool,
}

/// Ordinary least squares `y = slope x + intercept`.
pub fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// `|X|` over a family of ground sets and the fitted growth exponent.
pub fn exponent_scan(
    g: &BivariatePolynomial,
    family: &SetSpec,
    sizes: &[usize],
    opts: &ScanOptions,
) -> Result<ScanReport> {
    if sizes.len() < 2 {
        return Err(Error::TooFewSizes);
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::SizesNotIncreasing);
    }
    if sizes[0] < 2 {
        return Err(Error::InvalidSet("scan sizes must be at least 2".into()));
    }
    let verdict = degeneracy_test(g);
    if verdict.degenerate && !opts.allow_degenerate {
        return Err(Error::HypothesisViolated(verdict.describe()));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let set = generate_set(&family.with_size(size)?)?;
        let q = quotient_set(g, &set, &opts.compute)?;
        rows.push(ScanRow {
            size,
            quotient_size: q.len(),
            ln_size: (size as f64).ln(),
            ln_quotient_size: (q.len() as f64).ln(),
        });
    }
    if rows.iter().any(|r| r.quotient_size == 0) {
        return Err(Error::HypothesisViolated("empty quotient set; growth exponent undefined".into()));
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.ln_size, r.ln_quotient_size)).collect();
    let (slope, intercept) = fit_line(&pts);
    Ok(ScanReport { rows, slope, intercept })
}

pub fn write_scan_csv<W: Write>(scan: &ScanReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["size", "quotient_size", "ln_size", "ln_quotient_size"])?;
    for r in &scan.rows {
        w.write_record([
            r.size.to_string(),
            r.quotient_size.to_string(),
            r.ln_size.to_string(),
            r.ln_quotient_size.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn strs(v: &[Rational]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn y2() -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(&[(1, 0, 2)])
    }

    #[test]
    fn quotient_examples() {
        let opts = ComputeOptions::default();
        let q = quotient_set(&y2(), &GroundSet::range(1, 3), &opts).unwrap();
        assert_eq!(strs(q.values()), ["-5", "-4", "-3"]);
        let q = quotient_set(&BivariatePolynomial::x(), &GroundSet::range(1, 3), &opts).unwrap();
        assert_eq!(strs(q.values()), ["-2", "-1", "-1/2", "0", "1/2", "1", "2"]);
        assert!(quotient_set(&BivariatePolynomial::x(), &GroundSet::range(1, 1), &opts).unwrap().is_empty());
    }

    #[test]
    fn histogram_examples() {
        let opts = ComputeOptions::default();
        let h = quadruple_histogram(&BivariatePolynomial::x(), &GroundSet::range(0, 2), &opts).unwrap();
        assert_eq!(h.entries(), &[(r("-1"), 2), (r("0"), 4), (r("1"), 2)]);
        assert_eq!(h.total(), 8);
        let h = quadruple_histogram(&y2(), &GroundSet::range(1, 2), &opts).unwrap();
        assert_eq!(h.entries(), &[(r("3"), 8)]);
        assert!(quadruple_histogram(&y2(), &GroundSet::range(4, 1), &opts).unwrap().is_empty());
    }

    #[test]
    fn big_integer_path_matches_small_path() {
        // Large elements force the BigInt table; scaling the set by k scales
        // X of g = x by 1 (differences over differences).
        let opts = ComputeOptions::default();
        let big: Vec<Rational> = (1..=5).map(|k| Rational::integer(k) * r("1000000000000000000000000000000000000000")).collect();
        let big = GroundSet::new(big).unwrap();
        let small = GroundSet::range(1, 5);
        let g = BivariatePolynomial::x();
        assert_eq!(quotient_set(&g, &big, &opts).unwrap(), quotient_set(&g, &small, &opts).unwrap());
        let cubic = BivariatePolynomial::from_int_terms(&[(1, 3, 3), (1, 1, 0)]);
        let q = quotient_set(&cubic, &big, &opts).unwrap();
        let h = quadruple_histogram(&cubic, &big, &opts).unwrap();
        assert_eq!(h.support(), q.negated());
    }

    #[test]
    fn chain_example() {
        let rep = verify_chain(&BivariatePolynomial::x(), &GroundSet::range(0, 2), 1, &ComputeOptions::default()).unwrap();
        assert_eq!((rep.quotient_size, rep.quadruple_total, rep.energy), (3, 8, 20));
        assert_eq!(rep.energy_materialized, Some(20));
        let ratio = rep.lemma_ratio.unwrap();
        assert!((ratio - 20.0 / (8.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!(rep.flags.zero_in_x);
        assert!(!rep.flags.size_condition);
        // Removing x = 0 drops S = 4 plus Q(0) = 4.
        assert_eq!(rep.energy_nonzero, 12);
        assert!(rep.chain_holds);
    }

    #[test]
    fn chain_rejects_degenerate_and_wrong_degree() {
        let err = verify_chain(&y2(), &GroundSet::range(1, 4), 2, &ComputeOptions::default()).unwrap_err();
        assert!(err.to_string().starts_with("theorem hypotheses violated"));
        assert!(matches!(
            verify_chain(&BivariatePolynomial::x(), &GroundSet::range(1, 4), 3, &ComputeOptions::default()),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn chain_singleton() {
        let rep = verify_chain(&BivariatePolynomial::x(), &GroundSet::range(5, 1), 1, &ComputeOptions::default()).unwrap();
        assert_eq!((rep.quotient_size, rep.quadruple_total, rep.energy), (0, 0, 0));
        assert_eq!(rep.lemma_ratio, None);
    }

    #[test]
    fn scan_argument_errors() {
        let fam = SetSpec::arithmetic(1, 1, 2);
        let opts = ScanOptions::default();
        let x = BivariatePolynomial::x();
        assert_eq!(exponent_scan(&x, &fam, &[8], &opts).unwrap_err(), Error::TooFewSizes);
        assert_eq!(exponent_scan(&x, &fam, &[8, 8], &opts).unwrap_err(), Error::SizesNotIncreasing);
        assert!(matches!(exponent_scan(&y2(), &fam, &[4, 8], &opts), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn scan_degenerate_case() {
        let allow = ScanOptions { allow_degenerate: true, ..ScanOptions::default() };
        let fam = SetSpec::arithmetic(1, 1, 2);
        // |X| = 2n - 3; small sizes bias the fit upward (closed-form fit 1.19840).
        let rep = exponent_scan(&y2(), &fam, &[4, 8, 16, 32], &allow).unwrap();
        assert_eq!(rep.rows.iter().map(|r| r.quotient_size).collect::<Vec<_>>(), [5, 13, 29, 61]);
        assert!((rep.slope - 1.1983969005013047).abs() < 1e-9, "slope {}", rep.slope);
        let rep = exponent_scan(&y2(), &fam, &[8, 16, 32, 64], &allow).unwrap();
        assert!((0.9..=1.1).contains(&rep.slope), "slope {}", rep.slope);
    }

    #[test]
    fn scan_tight_case() {
        let x = BivariatePolynomial::x();
        let fam = SetSpec::arithmetic(1, 1, 2);
        // |(A-A)/(A-A)| = 1 + 2 #{coprime (p, q) in [1, n)^2}: 15, 71, 287, 1231.
        let rep = exponent_scan(&x, &fam, &[4, 8, 16, 32], &ScanOptions::default()).unwrap();
        assert_eq!(rep.rows.iter().map(|r| r.quotient_size).collect::<Vec<_>>(), [15, 71, 287, 1231]);
        assert!((rep.slope - 2.1091333159798813).abs() < 1e-9, "slope {}", rep.slope);
        let rep = exponent_scan(&x, &fam, &[8, 16, 32, 64], &ScanOptions::default()).unwrap();
        assert!((1.8..=2.1).contains(&rep.slope), "slope {}", rep.slope);
    }

    #[test]
    fn least_squares_exact_line() {
        let (s, c) = fit_line(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]);
        assert!((s - 2.0).abs() < 1e-12 && (c - 1.0).abs() < 1e-12);
    }

    #[test]
    fn memory_cap_aborts() {
        let opts = ComputeOptions::default().with_memory_cap(5);
        let err = quotient_set(&BivariatePolynomial::x(), &GroundSet::range(1, 6), &opts).unwrap_err();
        assert_eq!(err, Error::ResourceCap { cap: 5 });
    }
}
