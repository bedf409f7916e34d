//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! Relators are positive words in the generators. Each generator `g` owns two
//! columns, `2(g-1)` for `g` and `2(g-1)+1` for `g^-1`, so `col ^ 1` is the
//! inverse column.

use std::collections::BTreeMap;
use std::rc::Rc;

use super::VerifyError;
use crate::presentation::TrianglePresentation;

const UNDEF: u32 = u32::MAX;

/// Relator of a [`PresentationSlice`], keeping its source label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceRelator {
    pub label: usize,
    pub word: Vec<usize>,
}

/// Finite truncation: generators `g_1..g_N` and the relators mentioning only them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationSlice {
    pub generators: usize,
    pub relators: Vec<SliceRelator>,
}

impl PresentationSlice {
    pub fn new(generators: usize, relators: Vec<SliceRelator>) -> Result<Self, VerifyError> {
        if generators == 0 {
            return Err(VerifyError::InvalidSlice("no generators".into()));
        }
        if let Some(r) = relators.iter().find(|r| r.word.is_empty() || r.word.iter().any(|&g| g == 0 || g > generators))
        {
            return Err(VerifyError::InvalidSlice(format!(
                "relator r_{} {:?} leaves generators 1..={generators}",
                r.label, r.word
            )));
        }
        Ok(Self { generators, relators })
    }

    /// Keeps the relations of `p` whose indices are all `<= generators`.
    pub fn from_presentation(p: &TrianglePresentation, generators: usize) -> Result<Self, VerifyError> {
        let relators = p
            .relations
            .iter()
            .filter(|r| r.indices.iter().all(|&i| i <= generators))
            .map(|r| SliceRelator { label: r.label, word: r.indices.clone() })
            .collect();
        Self::new(generators, relators)
    }

    /// Same generators, only the first `count` relators.
    pub fn truncated(&self, count: usize) -> Self {
        Self { generators: self.generators, relators: self.relators[..count.min(self.relators.len())].to_vec() }
    }
}

/// Coset definition strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Scan-and-fill every relator at each coset in order, then fill the row.
    #[default]
    Hlt,
    /// Fill the first gap, then process all consequences before the next definition.
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStatus {
    Closed,
    Overflowed,
}

/// Result of an enumeration. On closure `rows` holds the standardized table
/// (cosets renumbered in definition order, coset 0 the subgroup).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub status: TableStatus,
    pub generators: usize,
    /// Live cosets (the presented group's order when closed).
    pub coset_count: usize,
    /// Cosets ever defined.
    pub cosets_defined: usize,
    pub deductions: usize,
    rows: Vec<u32>,
}

impl CosetTable {
    pub fn is_closed(&self) -> bool {
        self.status == TableStatus::Closed
    }

    /// Order of the presented group, only when the table closed.
    pub fn order(&self) -> Option<usize> {
        self.is_closed().then_some(self.coset_count)
    }

    fn width(&self) -> usize {
        2 * self.generators
    }

    /// `coset . g` (generator `g >= 1`, or its inverse when `inverse`).
    pub fn act(&self, coset: usize, g: usize, inverse: bool) -> Option<usize> {
        if !self.is_closed() || coset >= self.coset_count || g == 0 || g > self.generators {
            return None;
        }
        let col = 2 * (g - 1) + usize::from(inverse);
        Some(self.rows[coset * self.width() + col] as usize)
    }

    /// Closed-table invariants: total, mutually inverse actions, and every
    /// relator traces a closed path at every coset.
    pub fn is_consistent_with(&self, slice: &PresentationSlice) -> bool {
        if !self.is_closed() || slice.generators != self.generators {
            return false;
        }
        let w = self.width();
        let n = self.coset_count;
        for c in 0..n {
            for x in 0..w {
                let d = self.rows[c * w + x] as usize;
                if d >= n || self.rows[d * w + (x ^ 1)] as usize != c {
                    return false;
                }
            }
            for r in &slice.relators {
                let end = r.word.iter().fold(c, |cur, &g| self.rows[cur * w + 2 * (g - 1)] as usize);
                if end != c {
                    return false;
                }
            }
        }
        true
    }
}

/// Runs Todd–Coxeter with the default strategy.
pub fn coset_enumerate(slice: &PresentationSlice, max_cosets: usize) -> Result<CosetTable, VerifyError> {
    coset_enumerate_with(slice, max_cosets, Strategy::default())
}

pub fn coset_enumerate_with(
    slice: &PresentationSlice,
    max_cosets: usize,
    strategy: Strategy,
) -> Result<CosetTable, VerifyError> {
    if slice.generators == 0 {
        return Err(VerifyError::InvalidSlice("no generators".into()));
    }
    if max_cosets == 0 {
        return Err(VerifyError::InvalidSlice("max_cosets must be at least 1".into()));
    }
    let mut e = Enumerator::new(slice, max_cosets);
    let outcome = match strategy {
        Strategy::Hlt => e.run_hlt(),
        Strategy::Felsch => e.run_felsch(),
    };
    Ok(match outcome {
        Ok(()) => e.into_closed_table(),
        Err(Overflow) => CosetTable {
            status: TableStatus::Overflowed,
            generators: slice.generators,
            coset_count: e.live,
            cosets_defined: e.defined(),
            deductions: e.deduction_count,
            rows: Vec::new(),
        },
    })
}

struct Overflow;

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    relators: Rc<Vec<Vec<usize>>>,
    /// For each column, every (relator, position) where it occurs.
    occurrences: Vec<Vec<(usize, usize)>>,
    max_cosets: usize,
    live: usize,
    deduction_stack: Vec<(u32, usize)>,
    deduction_count: usize,
    record_deductions: bool,
}

impl Enumerator {
    fn new(slice: &PresentationSlice, max_cosets: usize) -> Self {
        let width = 2 * slice.generators;
        let relators: Vec<Vec<usize>> =
            slice.relators.iter().map(|r| r.word.iter().map(|&g| 2 * (g - 1)).collect()).collect();
        let mut occurrences = vec![Vec::new(); width];
        for (ri, w) in relators.iter().enumerate() {
            for (pos, &x) in w.iter().enumerate() {
                occurrences[x].push((ri, pos));
            }
        }
        Self {
            width,
            table: vec![UNDEF; width],
            parent: vec![0],
            relators: Rc::new(relators),
            occurrences,
            max_cosets,
            live: 1,
            deduction_stack: Vec::new(),
            deduction_count: 0,
            record_deductions: false,
        }
    }

    fn defined(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.width + x]
    }

    #[inline]
    fn put(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.width + x] = d;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn push_deduction(&mut self, c: u32, x: usize) {
        self.deduction_count += 1;
        if self.record_deductions {
            self.deduction_stack.push((c, x));
        }
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.put(c, x, d);
        self.put(d, x ^ 1, c);
        self.push_deduction(c, x);
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Overflow> {
        if self.defined() >= self.max_cosets {
            return Err(Overflow);
        }
        let d = self.defined() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.width));
        self.live += 1;
        self.set(c, x, d);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            queue.push(kill);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.width {
                let d = self.get(dead, x);
                if d == UNDEF {
                    continue;
                }
                self.put(d, x ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x, &mut queue);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                    }
                }
            }
        }
    }

    /// Traces `word` (read cyclically from `start`) at coset `alpha`. Gaps of
    /// length one are closed by deduction; longer gaps are filled with new
    /// cosets when `fill` is set and left alone otherwise.
    fn scan(&mut self, alpha: u32, relator: usize, start: usize, fill: bool) -> Result<(), Overflow> {
        let relators = Rc::clone(&self.relators);
        let word = &relators[relator];
        let n = word.len() as isize;
        let letter = |k: isize| -> usize { word[(start + k as usize) % word.len()] };
        let (mut f, mut i, mut b, mut j) = (alpha, 0isize, alpha, n - 1);
        loop {
            while i <= j {
                let next = self.get(f, letter(i));
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let prev = self.get(b, letter(j) ^ 1);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.set(f, letter(i), b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, letter(i))?;
        }
    }

    fn run_hlt(&mut self) -> Result<(), Overflow> {
        let mut c = 0u32;
        while (c as usize) < self.defined() {
            for r in 0..self.relators.len() {
                if !self.alive(c) {
                    break;
                }
                self.scan(c, r, 0, true)?;
            }
            for x in 0..self.width {
                if !self.alive(c) {
                    break;
                }
                if self.get(c, x) == UNDEF {
                    self.define(c, x)?;
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self) -> Result<(), Overflow> {
        while let Some((c, x)) = self.deduction_stack.pop() {
            if !self.alive(c) {
                continue;
            }
            for k in 0..self.occurrences[x].len() {
                if !self.alive(c) {
                    break;
                }
                let (r, pos) = self.occurrences[x][k];
                self.scan(c, r, pos, false)?;
            }
            let d = self.get(c, x);
            if d != UNDEF && self.alive(d) {
                for k in 0..self.occurrences[x ^ 1].len() {
                    if !self.alive(d) {
                        break;
                    }
                    let (r, pos) = self.occurrences[x ^ 1][k];
                    self.scan(d, r, pos, false)?;
                }
            }
        }
        Ok(())
    }

    fn run_felsch(&mut self) -> Result<(), Overflow> {
        self.record_deductions = true;
        let mut c = 0u32;
        while (c as usize) < self.defined() {
            let mut x = 0;
            while x < self.width && self.alive(c) {
                if self.get(c, x) == UNDEF {
                    self.define(c, x)?;
                    self.process_deductions()?;
                }
                x += 1;
            }
            c += 1;
        }
        Ok(())
    }

    fn into_closed_table(self) -> CosetTable {
        let mut renumber = vec![UNDEF; self.defined()];
        let mut order = BTreeMap::new();
        for c in 0..self.defined() as u32 {
            if self.parent[c as usize] == c {
                let id = order.len() as u32;
                renumber[c as usize] = id;
                order.insert(id, c);
            }
        }
        let mut rows = Vec::with_capacity(order.len() * self.width);
        for &c in order.values() {
            for x in 0..self.width {
                let d = self.get(c, x);
                rows.push(if d == UNDEF { UNDEF } else { renumber[d as usize] });
            }
        }
        CosetTable {
            status: TableStatus::Closed,
            generators: self.width / 2,
            coset_count: order.len(),
            cosets_defined: self.defined(),
            deductions: self.deduction_count,
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slice(generators: usize, words: &[&[usize]]) -> PresentationSlice {
        let relators = words.iter().enumerate().map(|(i, w)| SliceRelator { label: i + 1, word: w.to_vec() }).collect();
        PresentationSlice::new(generators, relators).unwrap()
    }

    fn order(s: &PresentationSlice, strategy: Strategy) -> Option<usize> {
        coset_enumerate_with(s, 10_000, strategy).unwrap().order()
    }

    #[test]
    fn killed_generators() {
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(order(&slice(1, &[&[1]]), strategy), Some(1));
            assert_eq!(order(&slice(2, &[&[1], &[2]]), strategy), Some(1));
        }
    }

    #[test]
    fn cyclic_groups() {
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(order(&slice(1, &[&[1, 1, 1]]), strategy), Some(3));
            assert_eq!(order(&slice(1, &[&[1, 1]]), strategy), Some(2));
        }
    }

    #[test]
    fn classic_presentations() {
        // <a, b | a^2, b^3, (ab)^2> = S3 ; as positive words
        let s3 = slice(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        // <a, b | a^4, b^2, abab> = D4
        let d4 = slice(2, &[&[1, 1, 1, 1], &[2, 2], &[1, 2, 1, 2]]);
        // <i, j | i^4, i^2 j^-2, j^-1 i j i> written positively with j^-1 = j^3
        let q8 = slice(2, &[&[1, 1, 1, 1], &[1, 1, 2, 2], &[2, 2, 2, 1, 2, 1]]);
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(order(&s3, strategy), Some(6));
            assert_eq!(order(&d4, strategy), Some(8));
            assert_eq!(order(&q8, strategy), Some(8));
        }
    }

    #[test]
    fn free_group_overflows() {
        let t = coset_enumerate(&slice(1, &[]), 50).unwrap();
        assert_eq!(t.status, TableStatus::Overflowed);
        assert_eq!(t.order(), None);
    }

    #[test]
    fn closed_tables_are_consistent() {
        let s = slice(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        for strategy in [Strategy::Hlt, Strategy::Felsch] {
            let t = coset_enumerate_with(&s, 1000, strategy).unwrap();
            assert!(t.is_consistent_with(&s));
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let s = slice(2, &[&[1, 1, 1, 1], &[2, 2], &[1, 2, 1, 2]]);
        assert_eq!(coset_enumerate(&s, 1000).unwrap(), coset_enumerate(&s, 1000).unwrap());
    }

    #[test]
    fn invalid_slices() {
        assert!(PresentationSlice::new(0, vec![]).is_err());
        assert!(PresentationSlice::new(2, vec![SliceRelator { label: 1, word: vec![3] }]).is_err());
    }
}
