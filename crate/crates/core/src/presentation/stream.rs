use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{GeneratorSequence, PresentationError, Relation, RelationKind, TrianglePresentation};
use crate::group::{diagonal_of, Elem, Group, Order};

/// Per-element pools of sequence indices that have not yet been taken for a
/// given role. Blocks are materialized lazily, one element at a time.
#[derive(Debug, Default, Clone)]
struct OccurrencePool {
    free: HashMap<Elem, BTreeSet<usize>>,
    next_block: HashMap<Elem, usize>,
}

impl OccurrencePool {
    /// Removes and returns the least free index `> bound` whose value is `v`.
    fn take_least_above(&mut self, seq: &GeneratorSequence, v: Elem, bound: usize) -> usize {
        let free = self.free.entry(v).or_default();
        if let Some(&n) = free.range(bound + 1..).next() {
            free.remove(&n);
            return n;
        }
        let next = self.next_block.entry(v).or_insert_with(|| seq.first_block_of(v));
        loop {
            let n = seq.index_in_block(v, *next).expect("element occurs in every block from its first one on");
            *next += 1;
            if n > bound {
                return n;
            }
            free.insert(n);
        }
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Usage {
    count: u32,
    triples: u32,
    last_label: usize,
}

/// Deterministic, append-only emission of the relation stream.
///
/// Round `i` emits, in order: the Unit relation `(g_i)` when `g_i = e`; the
/// Pair relation `(g_i, g_j)` with `j` the least fresh index `> i` valued
/// `g_i^-1`; and, when the `i`-th identity `ab = c` of the identity stream
/// exists, the Triple relation on the least Triple-fresh indices valued
/// `a, b, c^-1` in increasing order.
#[derive(Debug, Clone)]
pub struct RelationStream<'g> {
    group: &'g Group,
    seq: GeneratorSequence,
    pair_targets: OccurrencePool,
    triple_slots: OccurrencePool,
    relations: Vec<Relation>,
    rounds: usize,
    usage: HashMap<usize, Usage>,
}

impl<'g> RelationStream<'g> {
    pub fn new(group: &'g Group) -> Self {
        Self {
            group,
            seq: GeneratorSequence::new(group.order()),
            pair_targets: OccurrencePool::default(),
            triple_slots: OccurrencePool::default(),
            relations: Vec::new(),
            rounds: 0,
            usage: HashMap::new(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn sequence(&self) -> &GeneratorSequence {
        &self.seq
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The `i`-th identity `(a, b)` with `ab = c` (1-based): row-major over
    /// the table for finite groups, Cantor diagonal for infinite ones.
    pub fn identity_pair(&self, i: usize) -> Option<(Elem, Elem)> {
        let c = i.checked_sub(1)?;
        match self.group.order() {
            Order::Finite(q) => (c < q * q).then(|| (Elem(c / q), Elem(c % q))),
            Order::Infinite => {
                let s = diagonal_of(c);
                let a = c - s * (s + 1) / 2;
                Some((Elem(a), Elem(s - a)))
            }
        }
    }

    fn emit(&mut self, kind: RelationKind, indices: Vec<usize>) {
        let label = self.relations.len() + 1;
        for &n in &indices {
            let u = self.usage.entry(n).or_default();
            u.count += 1;
            u.last_label = label;
            if kind == RelationKind::Triple {
                u.triples += 1;
            }
        }
        self.relations.push(Relation { label, kind, indices });
    }

    /// Runs one more round of the stream.
    pub fn advance(&mut self) {
        let i = self.rounds + 1;
        let g = self.group;
        let value = self.seq.term(i);
        if value == g.identity() {
            self.emit(RelationKind::Unit, vec![i]);
        }
        let j = self.pair_targets.take_least_above(&self.seq, g.invert(value), i);
        self.emit(RelationKind::Pair, vec![i, j]);
        if let Some((a, b)) = self.identity_pair(i) {
            let c_inv = g.invert(g.multiply(a, b));
            let first = self.triple_slots.take_least_above(&self.seq, a, 0);
            let second = self.triple_slots.take_least_above(&self.seq, b, first);
            let third = self.triple_slots.take_least_above(&self.seq, c_inv, second);
            self.emit(RelationKind::Triple, vec![first, second, third]);
        }
        self.rounds = i;
    }

    pub fn advance_to(&mut self, rounds: usize) {
        while self.rounds < rounds {
            self.advance();
        }
    }

    /// Whether the stream has certified that `g_n` occurs in no later relation.
    ///
    /// Unit and Pair-source roles are settled at round `n`; Pair targets are
    /// always chosen by earlier sources. A Triple role is settled once `g_n`
    /// was consumed by a Triple, or, for finite groups, once all `|G|^2`
    /// identities have been emitted.
    pub fn is_certified(&self, n: usize) -> bool {
        if self.rounds < n {
            return false;
        }
        let consumed = self.usage.get(&n).is_some_and(|u| u.triples > 0);
        consumed
            || match self.group.order() {
                Order::Finite(q) => self.rounds >= q * q,
                Order::Infinite => false,
            }
    }

    /// Last relation label containing `g_n` so far, or 1 when none.
    fn current_m(&self, n: usize) -> usize {
        self.usage.get(&n).map_or(1, |u| u.last_label)
    }

    /// Advances until `m(n)` is certified, never past `horizon` rounds.
    pub fn m_of(&mut self, n: usize, horizon: usize) -> Result<usize, PresentationError> {
        if n == 0 {
            return Err(PresentationError::InvalidIndex(n));
        }
        while !self.is_certified(n) {
            if self.rounds >= horizon {
                return Err(PresentationError::HorizonExceeded(horizon));
            }
            self.advance();
        }
        Ok(self.current_m(n))
    }

    /// Certifies `m(1..=count)`.
    pub fn m_function(&mut self, count: usize, horizon: usize) -> Result<MFunction, PresentationError> {
        let mut values = BTreeMap::new();
        for n in 1..=count {
            values.insert(n, self.m_of(n, horizon)?);
        }
        Ok(MFunction { values, horizon: self.rounds })
    }

    /// Certifies `m` at every index in `indices`.
    pub fn m_function_for(
        &mut self,
        indices: impl IntoIterator<Item = usize>,
        horizon: usize,
    ) -> Result<MFunction, PresentationError> {
        let mut values = BTreeMap::new();
        for n in indices {
            values.insert(n, self.m_of(n, horizon)?);
        }
        Ok(MFunction { values, horizon: self.rounds })
    }

    /// Snapshot of the relations emitted so far.
    pub fn presentation(&self) -> TrianglePresentation {
        TrianglePresentation::from_relations(self.group, self.relations.clone(), self.rounds)
    }

    /// Snapshot truncated to the first `count` relations, advancing as needed.
    pub fn first_relations(&mut self, count: usize) -> TrianglePresentation {
        while self.relations.len() < count {
            self.advance();
        }
        TrianglePresentation::from_relations(self.group, self.relations[..count].to_vec(), self.rounds)
    }
}

/// `m(n)`: the largest relation label containing `g_n` (1 if none), for
/// every certified index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFunction {
    pub values: BTreeMap<usize, usize>,
    /// Rounds simulated when the last value was certified.
    pub horizon: usize,
}

impl MFunction {
    pub fn get(&self, n: usize) -> Option<usize> {
        self.values.get(&n).copied()
    }
}

/// Default round budget for certifying `m`.
pub const DEFAULT_M_HORIZON: usize = 2_000_000;

/// Certifies `m(n)` by simulating a fresh stream.
pub fn m_of(group: &Group, n: usize, horizon: usize) -> Result<usize, PresentationError> {
    RelationStream::new(group).m_of(n, horizon)
}

/// Runs rounds `1..=rounds` of the stream.
pub fn build_presentation(group: &Group, rounds: usize) -> Result<TrianglePresentation, PresentationError> {
    if rounds == 0 {
        return Err(PresentationError::InvalidRounds(rounds));
    }
    let mut stream = RelationStream::new(group);
    stream.advance_to(rounds);
    Ok(stream.presentation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupSpec};

    fn idx(p: &TrianglePresentation) -> Vec<Vec<usize>> {
        p.relations.iter().map(|r| r.indices.clone()).collect()
    }

    #[test]
    fn z2_first_round() {
        let g = make_group(&GroupSpec::Cyclic { n: 2 }).unwrap();
        let p = build_presentation(&g, 1).unwrap();
        assert_eq!(idx(&p), [vec![1], vec![1, 2], vec![1, 2, 4]]);
    }

    #[test]
    fn trivial_first_rounds() {
        let g = make_group(&GroupSpec::Cyclic { n: 1 }).unwrap();
        let p = build_presentation(&g, 2).unwrap();
        // the single identity e*e=e takes indices 1, 2, 3; round 2 has no Triple
        assert_eq!(idx(&p), [vec![1], vec![1, 2], vec![1, 2, 3], vec![2], vec![2, 3]]);
    }

    #[test]
    fn z2_m_of_one() {
        let g = make_group(&GroupSpec::Cyclic { n: 2 }).unwrap();
        assert_eq!(m_of(&g, 1, 100).unwrap(), 3);
    }

    #[test]
    fn trivial_m_of_three_reaches_round_two_pair() {
        let g = make_group(&GroupSpec::Cyclic { n: 1 }).unwrap();
        // (g_2, g_3) is r_5
        assert!(m_of(&g, 3, 100).unwrap() >= 5);
    }

    #[test]
    fn horizon_is_enforced() {
        let g = Group::Integers;
        assert_eq!(m_of(&g, 50, 10), Err(PresentationError::HorizonExceeded(10)));
        assert_eq!(m_of(&g, 0, 10), Err(PresentationError::InvalidIndex(0)));
    }

    #[test]
    fn rounds_must_be_positive() {
        let g = Group::Integers;
        assert_eq!(build_presentation(&g, 0).unwrap_err(), PresentationError::InvalidRounds(0));
    }

    #[test]
    fn cantor_identity_stream() {
        let g = Group::Integers;
        let s = RelationStream::new(&g);
        let pairs: Vec<(usize, usize)> =
            (1..=6).map(|i| s.identity_pair(i).map(|(a, b)| (a.0, b.0)).unwrap()).collect();
        assert_eq!(pairs, [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn stream_is_append_only() {
        let g = make_group(&GroupSpec::Symmetric { n: 3 }).unwrap();
        let short = build_presentation(&g, 40).unwrap();
        let long = build_presentation(&g, 90).unwrap();
        assert_eq!(short.relations[..], long.relations[..short.relations.len()]);
    }
}
