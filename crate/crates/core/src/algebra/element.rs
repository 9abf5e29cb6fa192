use std::collections::{btree_map, BTreeMap, BTreeSet};

use crate::diagrams::{CanonicalKey, Kind};
use crate::error::{Error, Result};

/// A finite integer combination of diagrams of one kind. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    kind: Kind,
    terms: BTreeMap<CanonicalKey, i64>,
}

impl ModuleElement {
    pub fn zero(kind: Kind) -> Self {
        ModuleElement { kind, terms: BTreeMap::new() }
    }

    pub fn basis(key: CanonicalKey) -> Self {
        let mut u = ModuleElement::zero(key.kind());
        u.terms.insert(key, 1);
        u
    }

    pub fn from_terms(kind: Kind, terms: impl IntoIterator<Item = (CanonicalKey, i64)>) -> Result<Self> {
        let mut u = ModuleElement::zero(kind);
        for (k, c) in terms {
            if k.kind() != kind {
                return Err(Error::KindMismatch { expected: kind, found: k.kind() });
            }
            u.add_term(k, c);
        }
        Ok(u)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, CanonicalKey, i64> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &CanonicalKey) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// Sum of absolute coefficients.
    pub fn mass(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Adds `coefficient · [key]`. Panics if the key has another kind.
    pub fn add_term(&mut self, key: CanonicalKey, coefficient: i64) {
        assert_eq!(key.kind(), self.kind, "diagram kind does not match module kind");
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, factor: i64) -> Self {
        if factor == 0 {
            return ModuleElement::zero(self.kind);
        }
        ModuleElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    /// Chord counts present among the terms.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(CanonicalKey::chord_count).collect()
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        ModuleElement {
            kind: self.kind,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.chord_count() == degree)
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }
}

impl FromIterator<(CanonicalKey, i64)> for ModuleElement {
    /// Panics on an empty iterator (the kind would be unknown) or mixed kinds.
    fn from_iter<I: IntoIterator<Item = (CanonicalKey, i64)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let kind = iter.peek().expect("empty iterator has no kind").0.kind();
        let mut u = ModuleElement::zero(kind);
        for (k, c) in iter {
            u.add_term(k, c);
        }
        u
    }
}

/// `alpha · u + beta · v`.
pub fn combine(alpha: i64, u: &ModuleElement, beta: i64, v: &ModuleElement) -> Result<ModuleElement> {
    if u.kind != v.kind {
        return Err(Error::KindMismatch { expected: u.kind, found: v.kind });
    }
    let mut out = u.scaled(alpha);
    for (k, c) in &v.terms {
        out.add_term(k.clone(), beta * c);
    }
    Ok(out)
}
