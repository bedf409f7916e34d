//! Dense Cayley tables for finite groups.

use super::{Elem, GroupError};

/// Largest order accepted for a user-supplied multiplication table.
/// Associativity is checked exhaustively, so the cost is cubic in the order.
pub const MAX_TABLE_ORDER: usize = 512;

/// Largest order of any finite group materialized as a table.
pub const MAX_FINITE_ORDER: usize = 2048;

/// A validated multiplication table with identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    products: Vec<u32>,
    inverses: Vec<u32>,
    labels: Vec<String>,
}

impl CayleyTable {
    /// Validates a raw `q x q` table: shape, identity at 0, inverses, associativity.
    pub fn from_rows(rows: &[Vec<usize>], labels: Vec<String>) -> Result<Self, GroupError> {
        let q = rows.len();
        if q == 0 {
            return Err(GroupError::MalformedTable("table is empty".into()));
        }
        if q > MAX_TABLE_ORDER {
            return Err(GroupError::TooLarge { order: q, limit: MAX_TABLE_ORDER });
        }
        let mut products = Vec::with_capacity(q * q);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(GroupError::MalformedTable(format!("row {a} has {} entries, expected {q}", row.len())));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= q {
                    return Err(GroupError::MalformedTable(format!("entry ({a},{b}) = {c} is out of range 0..{q}")));
                }
                products.push(c as u32);
            }
        }
        let table = Self::assemble(q, products, labels)?;
        table.check_associative()?;
        Ok(table)
    }

    /// Builds a table from a multiplication closure known to satisfy the group
    /// axioms (catalog groups). Identity and inverses are still verified.
    pub(crate) fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        if order > MAX_FINITE_ORDER {
            return Err(GroupError::TooLarge { order, limit: MAX_FINITE_ORDER });
        }
        let mut products = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                products.push(mul(a, b) as u32);
            }
        }
        Self::assemble(order, products, labels)
    }

    fn assemble(q: usize, products: Vec<u32>, labels: Vec<String>) -> Result<Self, GroupError> {
        for a in 0..q {
            if products[a] as usize != a || products[a * q] as usize != a {
                return Err(GroupError::NoIdentity);
            }
        }
        let mut inverses = Vec::with_capacity(q);
        for a in 0..q {
            let row = &products[a * q..(a + 1) * q];
            let inv = row
                .iter()
                .position(|&c| c == 0)
                .filter(|&b| products[b * q + a] == 0)
                .ok_or(GroupError::MissingInverse(a))?;
            inverses.push(inv as u32);
        }
        let labels = if labels.len() == q {
            labels
        } else {
            (0..q).map(|a| if a == 0 { "e".to_string() } else { format!("t{a}") }).collect()
        };
        Ok(Self { order: q, products, inverses, labels })
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let q = self.order;
        for a in 0..q {
            for b in 0..q {
                let ab = self.products[a * q + b] as usize;
                for c in 0..q {
                    let bc = self.products[b * q + c] as usize;
                    if self.products[ab * q + c] != self.products[a * q + bc] {
                        return Err(GroupError::NonAssociativeTable { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn multiply(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.products[a.0 * self.order + b.0] as usize)
    }

    #[inline]
    pub fn invert(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.0] as usize)
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a.0]
    }

    /// Row-major copy of the table, as accepted by [`CayleyTable::from_rows`].
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.products.chunks(self.order).map(|r| r.iter().map(|&c| c as usize).collect()).collect()
    }
}
