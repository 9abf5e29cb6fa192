//! Deciding equality in the quotient by four-term relations.
//!
//! Relations are homogeneous, so an element is split by chord count and each
//! graded piece is tested for membership in the integer span of the
//! generators of that degree.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::diagrams::{enumerate, CanonicalKey, Kind};
use crate::intlinalg::{solve_diophantine, IntMatrix, Lattice};

use super::{combine, generate_4t_with, FramedMove, ModuleElement};

/// Coefficient ring for span membership.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Ring {
    #[default]
    Integers,
    /// Diagnostic only.
    Rationals,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientAnswer {
    Equal,
    NotEqual,
    /// The degree is above [`max_degree`] for this kind.
    Undecided { degree: usize },
}

/// Largest degree for which spans are materialized.
pub fn max_degree(kind: Kind) -> usize {
    match kind {
        Kind::Framed => 4,
        Kind::Double => 5,
        Kind::Linear => 4,
        Kind::DoubleLinear => 4,
    }
}

/// The span of all four-term generators of one kind and degree.
#[derive(Clone, Debug)]
pub struct RelationSpan {
    kind: Kind,
    degree: usize,
    index: HashMap<CanonicalKey, usize>,
    /// Distinct nonzero generators up to sign, as sparse rows.
    generators: Vec<Vec<(usize, i64)>>,
    lattice: Lattice,
}

impl RelationSpan {
    /// `None` above [`max_degree`].
    pub fn new(kind: Kind, degree: usize) -> Option<Self> {
        RelationSpan::with_rule(kind, degree, FramedMove::default())
    }

    pub fn with_rule(kind: Kind, degree: usize, rule: FramedMove) -> Option<Self> {
        if degree > max_degree(kind) {
            return None;
        }
        let basis = enumerate(kind, degree);
        let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut rows: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
        for g in generate_4t_with(kind, degree, rule) {
            let mut row: Vec<(usize, i64)> = g.element.terms().map(|(k, c)| (index[k], *c)).collect();
            row.sort_unstable();
            if row.first().is_some_and(|&(_, c)| c < 0) {
                row.iter_mut().for_each(|e| e.1 = -e.1);
            }
            if !row.is_empty() {
                rows.insert(row);
            }
        }
        let generators: Vec<_> = rows.into_iter().collect();
        let mut lattice = Lattice::new(basis.len());
        for row in &generators {
            lattice.insert_sparse(row.iter().map(|&(i, c)| (i, BigInt::from(c))).collect());
        }
        Some(RelationSpan { kind, degree, index, generators, lattice })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of diagrams of this degree.
    pub fn dimension(&self) -> usize {
        self.index.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    fn vector(&self, u: &ModuleElement) -> Vec<BigInt> {
        assert_eq!(u.kind(), self.kind, "element kind");
        let mut v = vec![BigInt::from(0); self.index.len()];
        for (k, c) in u.terms() {
            let i = *self
                .index
                .get(k)
                .unwrap_or_else(|| panic!("{k} is not of degree {}", self.degree));
            v[i] = BigInt::from(*c);
        }
        v
    }

    /// Whether a homogeneous element of this degree lies in the span.
    pub fn contains(&self, u: &ModuleElement, ring: Ring) -> bool {
        let v = self.vector(u);
        match ring {
            Ring::Integers => self.lattice.contains(&v),
            Ring::Rationals => self.lattice.spans_rationally(&v),
        }
    }

    /// Integer coefficients expressing `u` through the generator rows, found
    /// by solving the Diophantine system directly.
    pub fn certificate(&self, u: &ModuleElement) -> Option<Vec<BigInt>> {
        let a = self.generator_matrix().transpose();
        solve_diophantine(&a, &self.vector(u)).expect("dimensions agree")
    }

    /// Generators as dense rows (columns indexed like [`enumerate`]).
    pub fn generator_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.generators.len(), self.index.len());
        for (i, row) in self.generators.iter().enumerate() {
            for &(j, c) in row {
                m[(i, j)] = BigInt::from(c);
            }
        }
        m
    }
}

/// Exact decision of `u == v` modulo four-term relations, over the integers.
pub fn quotient_equal(u: &ModuleElement, v: &ModuleElement) -> QuotientAnswer {
    quotient_equal_over(u, v, Ring::Integers)
}

pub fn quotient_equal_over(u: &ModuleElement, v: &ModuleElement, ring: Ring) -> QuotientAnswer {
    let diff = combine(1, u, -1, v).expect("elements of one kind");
    let mut spans: BTreeMap<usize, RelationSpan> = BTreeMap::new();
    for degree in diff.degrees() {
        let part = diff.homogeneous_part(degree);
        if degree < 2 {
            // no relations: the part itself must vanish, and it does not
            return QuotientAnswer::NotEqual;
        }
        let span = match spans.get(&degree) {
            Some(s) => s,
            None => match RelationSpan::new(diff.kind(), degree) {
                Some(s) => spans.entry(degree).or_insert(s),
                None => return QuotientAnswer::Undecided { degree },
            },
        };
        if !span.contains(&part, ring) {
            return QuotientAnswer::NotEqual;
        }
    }
    QuotientAnswer::Equal
}
