//! Countable groups given by element enumeration and multiplication.
//!
//! Every group enumerates its elements as `0, 1, 2, ...` with the identity at
//! index 0, and the enumeration index doubles as the element id. Finite groups
//! are materialized as Cayley tables; the integers and products involving them
//! are computed on the fly.

mod catalog;
mod table;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use table::{CayleyTable, MAX_FINITE_ORDER, MAX_TABLE_ORDER};

/// Element id, equal to the element's enumeration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub usize);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(q) => Some(q),
            Order::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociativeTable { a: usize, b: usize, c: usize },
    #[error("index 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group of order {order} exceeds the supported limit {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// Description of a group, as stored in group spec files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Table { order: usize, table: Vec<Vec<usize>> },
    Cyclic { n: usize },
    Symmetric { n: usize },
    Dihedral { n: usize },
    Quaternion8,
    Integers,
    Product { factors: Vec<GroupSpec> },
}

impl GroupSpec {
    /// Canonical compact JSON text of the spec.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("group spec serializes")
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        make_group(self)
    }
}

/// A countable group: identity, multiplication, inverse, labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group {
    Finite(CayleyTable),
    /// The integers under addition, enumerated `0, 1, -1, 2, -2, ...`.
    Integers,
    /// Direct product with at least one infinite factor; finite products are
    /// flattened into a [`CayleyTable`].
    Product(Box<Group>, Box<Group>),
}

/// Instantiates and validates the group described by `spec`.
pub fn make_group(spec: &GroupSpec) -> Result<Group, GroupError> {
    match spec {
        GroupSpec::Table { order, table } => {
            if *order != table.len() {
                return Err(GroupError::MalformedTable(format!(
                    "declared order {order} but table has {} rows",
                    table.len()
                )));
            }
            Ok(Group::Finite(CayleyTable::from_rows(table, Vec::new())?))
        }
        GroupSpec::Cyclic { n } => catalog::cyclic(*n).map(Group::Finite),
        GroupSpec::Symmetric { n } => catalog::symmetric(*n).map(Group::Finite),
        GroupSpec::Dihedral { n } => catalog::dihedral(*n).map(Group::Finite),
        GroupSpec::Quaternion8 => catalog::quaternion8().map(Group::Finite),
        GroupSpec::Integers => Ok(Group::Integers),
        GroupSpec::Product { factors } => {
            let mut groups = factors.iter().map(make_group);
            let first = groups
                .next()
                .ok_or_else(|| GroupError::InvalidParameter("product needs at least one factor".into()))??;
            groups.try_fold(first, |acc, g| Group::product(acc, g?))
        }
    }
}

impl Group {
    fn product(a: Group, b: Group) -> Result<Group, GroupError> {
        match (&a, &b) {
            (Group::Finite(x), Group::Finite(y)) => catalog::finite_product(x, y).map(Group::Finite),
            _ => Ok(Group::Product(Box::new(a), Box::new(b))),
        }
    }

    pub fn order(&self) -> Order {
        match self {
            Group::Finite(t) => Order::Finite(t.order()),
            Group::Integers | Group::Product(..) => Order::Infinite,
        }
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    /// Element with enumeration index `i`.
    pub fn enumerate(&self, i: usize) -> Elem {
        if let Order::Finite(q) = self.order() {
            assert!(i < q, "enumeration index {i} out of range for order {q}");
        }
        Elem(i)
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Group::Finite(t) => t.multiply(a, b),
            Group::Integers => int_elem(int_value(a) + int_value(b)),
            Group::Product(x, y) => {
                let (a1, a2) = unpair(x, y, a);
                let (b1, b2) = unpair(x, y, b);
                pair(x, y, x.multiply(a1, b1), y.multiply(a2, b2))
            }
        }
    }

    pub fn invert(&self, a: Elem) -> Elem {
        match self {
            Group::Finite(t) => t.invert(a),
            Group::Integers => int_elem(-int_value(a)),
            Group::Product(x, y) => {
                let (a1, a2) = unpair(x, y, a);
                pair(x, y, x.invert(a1), y.invert(a2))
            }
        }
    }

    pub fn label(&self, a: Elem) -> String {
        match self {
            Group::Finite(t) => t.label(a).to_string(),
            Group::Integers => int_value(a).to_string(),
            Group::Product(x, y) => {
                let (a1, a2) = unpair(x, y, a);
                format!("({}, {})", x.label(a1), y.label(a2))
            }
        }
    }

    /// Product of a word of elements, left to right.
    pub fn product_of(&self, word: impl IntoIterator<Item = Elem>) -> Elem {
        word.into_iter().fold(self.identity(), |acc, x| self.multiply(acc, x))
    }

    /// Checks identity, inverse and associativity laws; exhaustive for
    /// order <= 12, otherwise over the first `sample` elements.
    pub fn check_axioms(&self, sample: usize) -> Result<(), GroupError> {
        let n = match self.order() {
            Order::Finite(q) if q <= 12 => q,
            Order::Finite(q) => q.min(sample),
            Order::Infinite => sample,
        };
        let e = self.identity();
        for a in (0..n).map(Elem) {
            if self.multiply(e, a) != a || self.multiply(a, e) != a {
                return Err(GroupError::NoIdentity);
            }
            if self.multiply(a, self.invert(a)) != e || self.multiply(self.invert(a), a) != e {
                return Err(GroupError::MissingInverse(a.0));
            }
            for b in (0..n).map(Elem) {
                let ab = self.multiply(a, b);
                for c in (0..n).map(Elem) {
                    if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)) {
                        return Err(GroupError::NonAssociativeTable { a: a.0, b: b.0, c: c.0 });
                    }
                }
            }
        }
        Ok(())
    }
}

fn int_value(a: Elem) -> i64 {
    let i = a.0 as i64;
    if i % 2 == 1 {
        (i + 1) / 2
    } else {
        -(i / 2)
    }
}

fn int_elem(v: i64) -> Elem {
    if v > 0 {
        Elem((2 * v - 1) as usize)
    } else {
        Elem((-2 * v) as usize)
    }
}

fn pair(x: &Group, y: &Group, a: Elem, b: Elem) -> Elem {
    match (x.order(), y.order()) {
        (Order::Finite(qa), _) => Elem(a.0 + qa * b.0),
        (Order::Infinite, Order::Finite(qb)) => Elem(b.0 + qb * a.0),
        (Order::Infinite, Order::Infinite) => {
            let s = a.0 + b.0;
            Elem(s * (s + 1) / 2 + b.0)
        }
    }
}

fn unpair(x: &Group, y: &Group, c: Elem) -> (Elem, Elem) {
    match (x.order(), y.order()) {
        (Order::Finite(qa), _) => (Elem(c.0 % qa), Elem(c.0 / qa)),
        (Order::Infinite, Order::Finite(qb)) => (Elem(c.0 / qb), Elem(c.0 % qb)),
        (Order::Infinite, Order::Infinite) => {
            let s = diagonal_of(c.0);
            let b = c.0 - s * (s + 1) / 2;
            (Elem(s - b), Elem(b))
        }
    }
}

/// Largest `s` with `s(s+1)/2 <= c`.
pub(crate) fn diagonal_of(c: usize) -> usize {
    let mut s = (((8 * c + 1) as f64).sqrt() as usize).saturating_sub(1) / 2;
    while (s + 1) * (s + 2) / 2 <= c {
        s += 1;
    }
    while s * (s + 1) / 2 > c {
        s -= 1;
    }
    s
}
