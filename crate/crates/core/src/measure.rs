//! Finitely supported rational measures on a translate of a lattice.
//!
//! Support points are integer coordinate vectors in a fixed lattice basis
//! (simple roots for `Root`, fundamental weights for `Weight`); the measure
//! lives on `base + lattice`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeKind {
    /// Coordinates in the simple-root basis.
    Root,
    /// Coordinates in the fundamental-weight basis.
    Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMeasure {
    pub kind: LatticeKind,
    pub base: Vec<Rational>,
    entries: BTreeMap<Vec<i64>, Rational>,
}

impl LatticeMeasure {
    pub fn new(kind: LatticeKind, base: Vec<Rational>) -> Self {
        Self { kind, base, entries: BTreeMap::new() }
    }

    /// Measure on the untranslated lattice of rank `dim`.
    pub fn zero(kind: LatticeKind, dim: usize) -> Self {
        Self::new(kind, vec![Rational::zero(); dim])
    }

    pub fn delta(kind: LatticeKind, point: Vec<i64>) -> Self {
        let mut m = Self::zero(kind, point.len());
        m.add_at(point, Rational::from_integer(1.into()));
        m
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn get(&self, coords: &[i64]) -> Rational {
        self.entries.get(coords).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `value` at `coords`, dropping the entry if it cancels to zero.
    pub fn add_at(&mut self, coords: Vec<i64>, value: Rational) {
        debug_assert_eq!(coords.len(), self.dim());
        if value.is_zero() {
            return;
        }
        match self.entries.entry(coords) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn set(&mut self, coords: Vec<i64>, value: Rational) {
        if value.is_zero() {
            self.entries.remove(&coords);
        } else {
            self.entries.insert(coords, value);
        }
    }

    pub fn entries(&self) -> &BTreeMap<Vec<i64>, Rational> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mass(&self) -> Rational {
        self.entries.values().sum()
    }

    /// Lexicographically largest support point.
    pub fn lex_max(&self) -> Option<(&Vec<i64>, &Rational)> {
        self.entries.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.kind, self.base.clone());
        if !c.is_zero() {
            for (k, v) in &self.entries {
                out.entries.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// Shifts every support point by the lattice vector `t`.
    pub fn translate(&self, t: &[i64]) -> Self {
        let mut out = Self::new(self.kind, self.base.clone());
        for (k, v) in &self.entries {
            out.entries.insert(k.iter().zip(t).map(|(a, b)| a + b).collect(), v.clone());
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<(), CoreError> {
        if self.kind != other.kind {
            return Err(CoreError::LatticeMismatch(format!("{:?} vs {:?}", self.kind, other.kind)));
        }
        if self.dim() != other.dim() {
            return Err(CoreError::Dimension { expected: self.dim(), got: other.dim() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_compatible(other)?;
        if self.base != other.base {
            return Err(CoreError::LatticeMismatch("different translates".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_at(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    /// Convolution; the result lives on the translate `base_f + base_g`.
    pub fn convolve(&self, other: &Self) -> Result<Self, CoreError> {
        self.check_compatible(other)?;
        let base = self.base.iter().zip(&other.base).map(|(a, b)| a + b).collect();
        let mut out = Self::new(self.kind, base);
        for (ka, va) in &self.entries {
            for (kb, vb) in &other.entries {
                let k: Vec<i64> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_at(k, va * vb);
            }
        }
        Ok(out)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(k, v)| serde_json::json!({"coords": k, "value": format_rational(v)}))
            .collect();
        let base: Vec<String> = self.base.iter().map(format_rational).collect();
        serde_json::json!({"base": base, "entries": entries})
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("measure serializes")
    }

    /// Parses the `{"base": [...], "entries": [...]}` form; the lattice kind is not part of the wire format.
    pub fn from_json(s: &str, kind: LatticeKind) -> Result<Self, CoreError> {
        #[derive(Deserialize)]
        struct Entry {
            coords: Vec<i64>,
            value: String,
        }
        #[derive(Deserialize)]
        struct Wire {
            base: Vec<String>,
            entries: Vec<Entry>,
        }
        let w: Wire = serde_json::from_str(s).map_err(|e| CoreError::Json(e.to_string()))?;
        let base = w.base.iter().map(|b| parse_rational(b)).collect::<Result<Vec<_>, _>>()?;
        let mut m = Self::new(kind, base);
        for e in w.entries {
            if e.coords.len() != m.dim() {
                return Err(CoreError::Dimension { expected: m.dim(), got: e.coords.len() });
            }
            m.add_at(e.coords, parse_rational(&e.value)?);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    fn sample() -> LatticeMeasure {
        let mut m = LatticeMeasure::zero(LatticeKind::Root, 2);
        m.add_at(vec![0, 0], rat(1, 2));
        m.add_at(vec![1, -1], rat(-1, 3));
        m.add_at(vec![2, 0], rat_int(4));
        m
    }

    #[test]
    fn delta_is_identity() {
        let f = sample();
        let d = LatticeMeasure::delta(LatticeKind::Root, vec![0, 0]);
        assert_eq!(d.convolve(&f).unwrap(), f);
        let shifted = LatticeMeasure::delta(LatticeKind::Root, vec![1, 2]).convolve(&f).unwrap();
        assert_eq!(shifted, f.translate(&[1, 2]));
    }

    #[test]
    fn mass_multiplies() {
        let f = sample();
        let g = sample().translate(&[-3, 1]);
        assert_eq!(f.convolve(&g).unwrap().mass(), f.mass() * g.mass());
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut m = sample();
        m.add_at(vec![0, 0], rat(-1, 2));
        assert_eq!(m.len(), 2);
        assert_eq!(m.get(&[0, 0]), rat_int(0));
    }

    #[test]
    fn rejects_mixed_lattices() {
        let a = sample();
        let b = LatticeMeasure::delta(LatticeKind::Weight, vec![0, 0]);
        assert!(a.convolve(&b).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut m = sample();
        m.base = vec![rat(1, 2), rat_int(0)];
        let s = m.to_json();
        assert_eq!(
            s,
            r#"{"base":["1/2","0"],"entries":[{"coords":[0,0],"value":"1/2"},{"coords":[1,-1],"value":"-1/3"},{"coords":[2,0],"value":"4"}]}"#
        );
        assert_eq!(LatticeMeasure::from_json(&s, LatticeKind::Root).unwrap(), m);
    }
}
