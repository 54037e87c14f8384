use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Finite set of distinct rationals, stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet(Vec<Rational>);

impl GroundSet {
    /// Rejects repeated elements; order of `values` is irrelevant.
    pub fn new(values: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut values: Vec<Rational> = values.into_iter().collect();
        values.sort();
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        Ok(GroundSet(values))
    }

    /// `{start, start+1, ..., start+len-1}`.
    pub fn range(start: i64, len: usize) -> Self {
        GroundSet((0..len as i64).map(|k| Rational::integer(start + k)).collect())
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        GroundSet::new(values.iter().map(|&v| Rational::integer(v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &GroundSet) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a GroundSet {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
