//! Triangle presentations `<g_1, g_2, ... | r_1, r_2, ...>` of a countable
//! group: every relator is `g_i`, `g_i g_j` or `g_i g_j g_k` with strictly
//! increasing indices, and every generator occurs in finitely many relators.

mod sequence;
mod stream;
mod validate;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Elem, Group};

pub use sequence::GeneratorSequence;
pub use stream::{build_presentation, m_of, MFunction, RelationStream, DEFAULT_M_HORIZON};
pub use validate::{check_incidence, validate_presentation, CheckOutcome, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("rounds must be at least 1, got {0}")]
    InvalidRounds(usize),
    #[error("generator indices start at 1, got {0}")]
    InvalidIndex(usize),
    #[error("m certification did not complete within {0} rounds")]
    HorizonExceeded(usize),
    #[error("no relation with label {0}")]
    UnknownRelation(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    Unit,
    Pair,
    Triple,
}

impl RelationKind {
    pub fn arity(self) -> usize {
        match self {
            RelationKind::Unit => 1,
            RelationKind::Pair => 2,
            RelationKind::Triple => 3,
        }
    }

    pub fn from_arity(n: usize) -> Option<Self> {
        match n {
            1 => Some(RelationKind::Unit),
            2 => Some(RelationKind::Pair),
            3 => Some(RelationKind::Triple),
            _ => None,
        }
    }
}

/// The relator `g_{indices[0]} g_{indices[1]} ...` labeled `r_label`.
///
/// Fields are public so that malformed relations can be forged and rejected
/// by [`validate_presentation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub label: usize,
    pub kind: RelationKind,
    pub indices: Vec<usize>,
}

impl Relation {
    pub fn new(label: usize, indices: Vec<usize>) -> Option<Self> {
        let kind = RelationKind::from_arity(indices.len())?;
        Some(Self { label, kind, indices })
    }

    pub fn contains(&self, n: usize) -> bool {
        self.indices.contains(&n)
    }

    /// Arity matches the kind and indices are positive and strictly increasing.
    pub fn is_well_formed(&self) -> bool {
        self.indices.len() == self.kind.arity()
            && self.indices.first().is_some_and(|&i| i >= 1)
            && self.indices.windows(2).all(|w| w[0] < w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePresentation {
    /// Value of every generator that occurs in some relation.
    pub generator_values: BTreeMap<usize, Elem>,
    pub relations: Vec<Relation>,
    /// Generator indices consumed by Triple relations.
    pub type3_used: BTreeSet<usize>,
    pub rounds_completed: usize,
}

impl TrianglePresentation {
    pub fn from_relations(group: &Group, relations: Vec<Relation>, rounds_completed: usize) -> Self {
        let seq = GeneratorSequence::new(group.order());
        let mut generator_values = BTreeMap::new();
        let mut type3_used = BTreeSet::new();
        for r in &relations {
            for &n in &r.indices {
                generator_values.entry(n).or_insert_with(|| seq.term(n));
                if r.kind == RelationKind::Triple {
                    type3_used.insert(n);
                }
            }
        }
        Self { generator_values, relations, type3_used, rounds_completed }
    }

    pub fn relation(&self, label: usize) -> Result<&Relation, PresentationError> {
        label
            .checked_sub(1)
            .and_then(|i| self.relations.get(i))
            .filter(|r| r.label == label)
            .or_else(|| self.relations.iter().find(|r| r.label == label))
            .ok_or(PresentationError::UnknownRelation(label))
    }

    /// Largest generator index occurring in any relation.
    pub fn max_index(&self) -> usize {
        self.generator_values.keys().next_back().copied().unwrap_or(0)
    }

    pub fn value(&self, n: usize) -> Option<Elem> {
        self.generator_values.get(&n).copied()
    }
}

/// Ordered product of the generator values of relation `r_label`.
pub fn relator_image(group: &Group, p: &TrianglePresentation, label: usize) -> Result<Elem, PresentationError> {
    let r = p.relation(label)?;
    let seq = GeneratorSequence::new(group.order());
    Ok(group.product_of(r.indices.iter().map(|&n| p.value(n).unwrap_or_else(|| seq.term(n)))))
}
