//! Sparse exact polynomials.
//!
//! [`BivariatePolynomial`] is the map `g(x, y)` under study. [`MultiPoly`] is a
//! small-arity companion used to state and check the divisibility hypothesis
//! `(y2 - y1) | g(x1, y1) - g(x2, y2)` in four variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// One entry of the JSON term-list format `{"c": "p/q", "i": int, "j": int}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub c: Rational,
    pub i: u32,
    pub j: u32,
}

/// `g(x, y) = sum c_ij x^i y^j` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Term>", into = "Vec<Term>")]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c x^i y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePolynomial { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Builds from a term list; repeated exponent pairs are rejected and zero
    /// coefficients dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for Term { c, i, j } in terms {
            if map.insert((i, j), c).is_some() {
                return Err(Error::DuplicateTerm { i, j });
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BivariatePolynomial { terms: map })
    }

    /// Shorthand for tests and generators: `(coefficient, i, j)` triples with
    /// integer coefficients, summed.
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        terms
            .iter()
            .map(|&(c, i, j)| Self::monomial(Rational::integer(c), i, j))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms().map(|(i, j, c)| Term { c: c.clone(), i, j }).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `i + j` over stored terms; `None` marks the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// True when some term carries a positive power of `x`.
    pub fn depends_on_x(&self) -> bool {
        self.terms.keys().any(|&(i, _)| i > 0)
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let max_i = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let xp = powers(x, max_i);
        let yp = powers(y, max_j);
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * &xp[i as usize] * &yp[j as usize])
            .sum()
    }

    /// Maps `x -> var x_var`, `y -> var y_var` in a polynomial ring over `names`.
    pub fn embed(&self, names: &[&str], x_var: usize, y_var: usize) -> MultiPoly {
        let n = names.len();
        let mut out = MultiPoly::zero(names);
        for (i, j, c) in self.terms() {
            let mut e = vec![0u32; n];
            e[x_var] += i;
            e[y_var] += j;
            out.add_term(e, c.clone());
        }
        out
    }
}

fn powers(base: &Rational, max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(Rational::one());
    for k in 0..max as usize {
        let next = &out[k] * base;
        out.push(next);
    }
    out
}

impl TryFrom<Vec<Term>> for BivariatePolynomial {
    type Error = Error;
    fn try_from(terms: Vec<Term>) -> Result<Self> {
        Self::from_terms(terms)
    }
}

impl From<BivariatePolynomial> for Vec<Term> {
    fn from(g: BivariatePolynomial) -> Self {
        g.to_terms()
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(mut self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        for (k, c) in rhs.terms {
            let sum = match self.terms.remove(&k) {
                Some(old) => old + c,
                None => c,
            };
            if !sum.is_zero() {
                self.terms.insert(k, sum);
            }
        }
        self
    }
}

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        self + (-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out = out + BivariatePolynomial::monomial(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, vars: &[(&str, u32)]) -> fmt::Result {
    let negative = c < &Rational::zero();
    let abs = if negative { -c } else { c.clone() };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    let vars: Vec<_> = vars.iter().filter(|(_, e)| *e > 0).collect();
    let unit = abs == Rational::one();
    if !unit || vars.is_empty() {
        write!(f, "{abs}")?;
        if !vars.is_empty() {
            write!(f, "*")?;
        }
    }
    for (k, (name, e)) in vars.iter().enumerate() {
        if k > 0 {
            write!(f, "*")?;
        }
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            write_monomial(f, k == 0, c, &[("x", i), ("y", j)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial over a small fixed list of named variables.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    names: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(names: &[&str]) -> Self {
        MultiPoly { names: names.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn var(names: &[&str], idx: usize) -> Self {
        let mut e = vec![0; names.len()];
        e[idx] = 1;
        let mut p = Self::zero(names);
        p.add_term(e, Rational::one());
        p
    }

    pub fn constant(names: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(names);
        p.add_term(vec![0; names.len()], c);
        p
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.arity(), "exponent vector arity");
        let sum = match self.terms.remove(&exponents) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exponents, sum);
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = Self { names: self.names.clone(), terms: BTreeMap::new() };
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch(point.len(), self.arity()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| e.iter().zip(point).fold(c.clone(), |acc, (&k, v)| acc * v.pow(k)))
            .sum())
    }

    fn check_arity(&self, other: &MultiPoly) {
        assert_eq!(self.names, other.names, "polynomials over different variable lists");
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::integer(-1))
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        let mut out = MultiPoly { names: self.names.clone(), terms: BTreeMap::new() };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<(&str, u32)> = self.names.iter().map(|s| s.as_str()).zip(e.iter().copied()).collect();
            write_monomial(f, k == 0, c, &vars)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Divides `h` by a polynomial `divisor` that is linear, with constant
/// coefficient, in its highest-indexed variable `v`.
///
/// Returns `(quotient, remainder)` with `h = divisor * quotient + remainder`
/// and `remainder` free of `v`.
pub fn divide_by_linear(h: &MultiPoly, divisor: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    h.check_arity(divisor);
    let lead = (0..divisor.arity())
        .rev()
        .find(|&v| divisor.degree_in(v) > 0)
        .ok_or(Error::ConstantDivisor)?;

    let mut lead_terms = divisor.terms.iter().filter(|(e, _)| e[lead] > 0);
    let (lead_exp, alpha) = lead_terms.next().ok_or(Error::ConstantDivisor)?;
    let is_pure_linear = lead_exp.iter().enumerate().all(|(k, &d)| d == u32::from(k == lead));
    if !is_pure_linear || lead_terms.next().is_some() {
        return Err(Error::NonLinearDivisor);
    }

    let names: Vec<&str> = h.names.iter().map(|s| s.as_str()).collect();
    let mut quotient = MultiPoly::zero(&names);
    let mut rest = h.clone();
    loop {
        let next = rest
            .terms
            .iter()
            .filter(|(e, _)| e[lead] > 0)
            .max_by_key(|(e, _)| e[lead])
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((mut e, c)) = next else { break };
        e[lead] -= 1;
        let mut step = MultiPoly::zero(&names);
        step.add_term(e, c.checked_div(alpha)?);
        rest = &rest - &(divisor * &step);
        quotient = &quotient + &step;
    }
    Ok((quotient, rest))
}

pub const FOUR_VARS: [&str; 4] = ["x1", "x2", "y1", "y2"];
const REDUCED_VARS: [&str; 3] = ["x1", "x2", "y"];

/// `g(x1, y1) - g(x2, y2)` over `(x1, x2, y1, y2)`.
pub fn difference_polynomial(g: &BivariatePolynomial) -> MultiPoly {
    &g.embed(&FOUR_VARS, 0, 2) - &g.embed(&FOUR_VARS, 1, 3)
}

/// `y2 - y1` over `(x1, x2, y1, y2)`.
pub fn slope_gap() -> MultiPoly {
    &MultiPoly::var(&FOUR_VARS, 3) - &MultiPoly::var(&FOUR_VARS, 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegeneracyWitness {
    /// Nonzero `g(x1, y) - g(x2, y)`: substituting `y2 := y1` does not
    /// annihilate the difference, so `y2 - y1` is not a factor.
    Reduced(MultiPoly),
    /// Explicit `q` with `(y2 - y1) * q = g(x1, y1) - g(x2, y2)`.
    Quotient(MultiPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyVerdict {
    pub degenerate: bool,
    pub depends_on_x: bool,
    pub witness: DegeneracyWitness,
}

impl DegeneracyVerdict {
    pub fn describe(&self) -> String {
        match &self.witness {
            DegeneracyWitness::Reduced(p) => {
                format!("g(x1,y) - g(x2,y) = {p} is nonzero; g depends on x")
            }
            DegeneracyWitness::Quotient(q) => {
                format!("g(x1,y1) - g(x2,y2) = (y2 - y1) * ({q}); g is independent of x")
            }
        }
    }
}

impl Serialize for DegeneracyVerdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (kind, poly) = match &self.witness {
            DegeneracyWitness::Reduced(p) => ("reduced_difference", p.to_string()),
            DegeneracyWitness::Quotient(q) => ("divisibility_quotient", q.to_string()),
        };
        let mut s = serializer.serialize_struct("DegeneracyVerdict", 5)?;
        s.serialize_field("degenerate", &self.degenerate)?;
        s.serialize_field("depends_on_x", &self.depends_on_x)?;
        s.serialize_field("witness_kind", kind)?;
        s.serialize_field("witness", &poly)?;
        s.serialize_field("explanation", &self.describe())?;
        s.end()
    }
}

/// Decides whether `y2 - y1` divides `g(x1, y1) - g(x2, y2)`.
///
/// The divisor is monic and linear in `y2`, so divisibility holds iff the
/// substitution `y2 := y1` kills the difference, i.e. iff `g(x1, y) - g(x2, y)`
/// is the zero polynomial.
pub fn degeneracy_test(g: &BivariatePolynomial) -> DegeneracyVerdict {
    let reduced = &g.embed(&REDUCED_VARS, 0, 2) - &g.embed(&REDUCED_VARS, 1, 2);
    let depends_on_x = g.depends_on_x();
    if !reduced.is_zero() {
        return DegeneracyVerdict { degenerate: false, depends_on_x, witness: DegeneracyWitness::Reduced(reduced) };
    }
    // g = sum_j c_j y^j, and (y1^j - y2^j) / (y2 - y1) = -sum_k y1^k y2^(j-1-k).
    let mut quotient = MultiPoly::zero(&FOUR_VARS);
    for (_, j, c) in g.terms() {
        for k in 0..j {
            quotient.add_term(vec![0, 0, k, j - 1 - k], -c);
        }
    }
    DegeneracyVerdict { degenerate: true, depends_on_x, witness: DegeneracyWitness::Quotient(quotient) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn four(terms: &[(i64, [u32; 4])]) -> MultiPoly {
        let mut p = MultiPoly::zero(&FOUR_VARS);
        for (c, e) in terms {
            p.add_term(e.to_vec(), Rational::integer(*c));
        }
        p
    }

    #[test]
    fn evaluate_examples() {
        let xy = BivariatePolynomial::from_int_terms(&[(1, 1, 1)]);
        assert_eq!(xy.evaluate(&r("2"), &r("3")), r("6"));
        let y2 = BivariatePolynomial::from_int_terms(&[(1, 0, 2)]);
        assert_eq!(y2.evaluate(&r("5"), &r("-2")), r("4"));
        let g = BivariatePolynomial::from_int_terms(&[(1, 2, 0), (1, 0, 1)]);
        assert_eq!(g.evaluate(&r("1/2"), &r("1/3")), r("7/12"));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(BivariatePolynomial::from_int_terms(&[(1, 3, 2)]).total_degree(), Some(5));
        assert_eq!(BivariatePolynomial::constant(r("7")).total_degree(), Some(0));
        assert_eq!(BivariatePolynomial::zero().total_degree(), None);
        assert_eq!(BivariatePolynomial::from_int_terms(&[(1, 2, 0), (-1, 2, 0)]).total_degree(), None);
    }

    #[test]
    fn term_list_json() {
        let g: BivariatePolynomial =
            serde_json::from_str(r#"[{"c":"1/2","i":2,"j":0},{"c":"-3","i":0,"j":1},{"c":"0","i":5,"j":5}]"#).unwrap();
        assert_eq!(g.to_string(), "1/2*x^2 - 3*y");
        assert_eq!(g.total_degree(), Some(2));
        let dup = serde_json::from_str::<BivariatePolynomial>(r#"[{"c":"1","i":1,"j":0},{"c":"2","i":1,"j":0}]"#);
        assert!(dup.unwrap_err().to_string().contains("duplicate term"));
        let unknown = serde_json::from_str::<BivariatePolynomial>(r#"[{"c":"1","i":1,"j":0,"k":3}]"#);
        assert!(unknown.is_err());
        let back: BivariatePolynomial = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn degeneracy_examples() {
        let y2 = degeneracy_test(&BivariatePolynomial::from_int_terms(&[(1, 0, 2)]));
        assert!(y2.degenerate);
        assert!(!y2.depends_on_x);
        let x = degeneracy_test(&BivariatePolynomial::x());
        assert!(!x.degenerate);
        let xy = degeneracy_test(&BivariatePolynomial::from_int_terms(&[(1, 1, 1)]));
        assert!(!xy.degenerate);
        match xy.witness {
            DegeneracyWitness::Reduced(p) => assert_eq!(p.to_string(), "x1*y - x2*y"),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn degenerate_certificate_multiplies_back() {
        let g = BivariatePolynomial::from_int_terms(&[(3, 0, 4), (-2, 0, 1), (5, 0, 0)]);
        let v = degeneracy_test(&g);
        let DegeneracyWitness::Quotient(q) = &v.witness else { panic!("expected quotient") };
        assert_eq!(&slope_gap() * q, difference_polynomial(&g));
    }

    #[test]
    fn divide_examples() {
        let l = slope_gap();
        let h = four(&[(1, [0, 0, 2, 0]), (-1, [0, 0, 0, 2])]);
        let (q, rem) = divide_by_linear(&h, &l).unwrap();
        assert_eq!(q, four(&[(-1, [0, 0, 0, 1]), (-1, [0, 0, 1, 0])]));
        assert!(rem.is_zero());

        let h = four(&[(1, [1, 0, 0, 0]), (-1, [0, 1, 0, 0])]);
        let (q, rem) = divide_by_linear(&h, &l).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, h);

        let x1y1 = four(&[(1, [1, 0, 1, 0])]);
        let (q, rem) = divide_by_linear(&(&l * &x1y1), &l).unwrap();
        assert_eq!(q, x1y1);
        assert!(rem.is_zero());
    }

    #[test]
    fn divide_rejects_bad_divisors() {
        let h = four(&[(1, [1, 0, 0, 0])]);
        let c = MultiPoly::constant(&FOUR_VARS, r("3"));
        assert_eq!(divide_by_linear(&h, &c).unwrap_err(), Error::ConstantDivisor);
        let sq = four(&[(1, [0, 0, 0, 2])]);
        assert_eq!(divide_by_linear(&h, &sq).unwrap_err(), Error::NonLinearDivisor);
        let mixed = four(&[(1, [1, 0, 0, 1])]);
        assert_eq!(divide_by_linear(&h, &mixed).unwrap_err(), Error::NonLinearDivisor);
    }

    fn small_poly() -> impl Strategy<Value = BivariatePolynomial> {
        prop::collection::vec((-5i64..=5, 0u32..=3, 0u32..=3), 0..6).prop_map(|ts| {
            ts.into_iter()
                .map(|(c, i, j)| BivariatePolynomial::monomial(Rational::integer(c), i, j))
                .fold(BivariatePolynomial::zero(), |a, b| a + b)
        })
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(p, q)| Rational::normalize(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn evaluation_is_additive(g in small_poly(), h in small_poly(), x in small_rat(), y in small_rat()) {
            let sum = g.clone() + h.clone();
            prop_assert_eq!(sum.evaluate(&x, &y), g.evaluate(&x, &y) + h.evaluate(&x, &y));
            let prod = &g * &h;
            prop_assert_eq!(prod.evaluate(&x, &y), g.evaluate(&x, &y) * h.evaluate(&x, &y));
        }

        #[test]
        fn degenerate_iff_no_x(g in small_poly()) {
            let v = degeneracy_test(&g);
            prop_assert_eq!(v.degenerate, !g.depends_on_x());
            prop_assert_eq!(v.depends_on_x, g.depends_on_x());
        }

        #[test]
        fn division_reconstructs(g in small_poly(), extra in small_poly()) {
            let h = &difference_polynomial(&g) + &extra.embed(&FOUR_VARS, 1, 3);
            let l = slope_gap();
            let (q, rem) = divide_by_linear(&h, &l).unwrap();
            prop_assert_eq!(&(&l * &q) + &rem, h);
            prop_assert_eq!(rem.degree_in(3), 0);
        }
    }
}
