use crate::group::{Elem, Order};

/// The generator sequence `g_1, g_2, ...` in which every element recurs
/// infinitely often.
///
/// Block `k` (for `k >= 1`) lists the first `min(k, |G|)` elements in
/// enumeration order; the sequence is the concatenation of blocks `1, 2, 3, ...`.
/// Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSequence {
    order: Order,
}

impl GeneratorSequence {
    pub fn new(order: Order) -> Self {
        Self { order }
    }

    pub fn block_len(&self, k: usize) -> usize {
        match self.order {
            Order::Finite(q) => k.min(q),
            Order::Infinite => k,
        }
    }

    /// Index of the first term of block `k`.
    pub fn block_start(&self, k: usize) -> usize {
        debug_assert!(k >= 1);
        let before = k - 1;
        match self.order {
            Order::Finite(q) if before > q => q * (q + 1) / 2 + (before - q) * q + 1,
            _ => before * k / 2 + 1,
        }
    }

    /// Block number and position within the block of index `n`.
    pub fn locate(&self, n: usize) -> (usize, usize) {
        assert!(n >= 1, "generator indices start at 1");
        let triangular = |n: usize| {
            // least k with k(k+1)/2 >= n
            let k = crate::group::diagonal_of(n - 1) + 1;
            (k, n - 1 - (k - 1) * k / 2)
        };
        match self.order {
            Order::Finite(q) if n > q * (q + 1) / 2 => {
                let m = n - q * (q + 1) / 2 - 1;
                (q + 1 + m / q, m % q)
            }
            _ => triangular(n),
        }
    }

    /// Value of `g_n`.
    pub fn term(&self, n: usize) -> Elem {
        Elem(self.locate(n).1)
    }

    /// Index of element `v` inside block `k`, if the block contains it.
    pub fn index_in_block(&self, v: Elem, k: usize) -> Option<usize> {
        (v.0 < self.block_len(k)).then(|| self.block_start(k) + v.0)
    }

    /// First block that contains `v`.
    pub fn first_block_of(&self, v: Elem) -> usize {
        v.0 + 1
    }

    /// `g_1 .. g_count`.
    pub fn prefix(&self, count: usize) -> Vec<Elem> {
        (1..=count).map(|n| self.term(n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_prefix() {
        let s = GeneratorSequence::new(Order::Finite(2));
        let got: Vec<usize> = s.prefix(7).into_iter().map(|e| e.0).collect();
        assert_eq!(got, [0, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn trivial_prefix() {
        let s = GeneratorSequence::new(Order::Finite(1));
        assert!(s.prefix(4).iter().all(|&e| e == Elem(0)));
    }

    #[test]
    fn integers_prefix() {
        // enumeration 0, 1, -1, ... so ids 0, 0, 1, 0, 1, 2 read as 0, 0, 1, 0, 1, -1
        let s = GeneratorSequence::new(Order::Infinite);
        let got: Vec<usize> = s.prefix(6).into_iter().map(|e| e.0).collect();
        assert_eq!(got, [0, 0, 1, 0, 1, 2]);
    }

    #[test]
    fn block_starts_agree_with_locate() {
        for order in [Order::Finite(1), Order::Finite(3), Order::Finite(8), Order::Infinite] {
            let s = GeneratorSequence::new(order);
            for k in 1..60 {
                let start = s.block_start(k);
                assert_eq!(s.locate(start), (k, 0));
                assert_eq!(s.block_start(k + 1) - start, s.block_len(k));
            }
        }
    }
}
