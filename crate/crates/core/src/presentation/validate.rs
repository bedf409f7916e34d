use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{GeneratorSequence, MFunction, RelationKind, TrianglePresentation};
use crate::group::Group;

/// Result of one named check, with the first counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    fn run(name: &'static str, first_failure: Option<String>) -> Self {
        Self { name, counterexample: first_failure }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "pass {}", c.name)?,
                Some(why) => writeln!(f, "FAIL {}: {why}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Checks the structural invariants of a triangle presentation and the
/// relator law against `group`.
pub fn validate_presentation(p: &TrianglePresentation, group: &Group) -> ValidationReport {
    let seq = GeneratorSequence::new(group.order());
    let mut checks = Vec::new();

    checks.push(CheckOutcome::run(
        "form",
        p.relations
            .iter()
            .find(|r| !r.is_well_formed())
            .map(|r| format!("r_{} = {:?} {:?}", r.label, r.kind, r.indices)),
    ));

    checks.push(CheckOutcome::run(
        "labels",
        p.relations
            .iter()
            .enumerate()
            .find(|(i, r)| r.label != i + 1)
            .map(|(i, r)| format!("position {} carries label {}", i + 1, r.label)),
    ));

    let mut occurrences: HashMap<usize, (usize, usize)> = HashMap::new();
    for r in &p.relations {
        for &n in &r.indices {
            let e = occurrences.entry(n).or_default();
            e.0 += 1;
            if r.kind == RelationKind::Triple {
                e.1 += 1;
            }
        }
    }
    let mut sorted: Vec<_> = occurrences.iter().collect();
    sorted.sort();
    checks.push(CheckOutcome::run(
        "at-most-four",
        sorted.iter().find(|(_, (all, _))| *all > 4).map(|(n, (all, _))| format!("g_{n} occurs in {all} relations")),
    ));
    checks.push(CheckOutcome::run(
        "one-triple",
        sorted
            .iter()
            .find(|(_, (_, triples))| *triples > 1)
            .map(|(n, (_, t))| format!("g_{n} occurs in {t} Triple relations")),
    ));

    let value = |n: usize| p.value(n).unwrap_or_else(|| seq.term(n));
    checks.push(CheckOutcome::run(
        "relator-law",
        p.relations.iter().find_map(|r| {
            let image = group.product_of(r.indices.iter().map(|&n| value(n)));
            (image != group.identity()).then(|| {
                let vals: Vec<String> = r.indices.iter().map(|&n| group.label(value(n))).collect();
                format!("r_{} {:?} evaluates to {} via [{}]", r.label, r.indices, group.label(image), vals.join(", "))
            })
        }),
    ));

    checks.push(CheckOutcome::run(
        "generator-values",
        p.generator_values.iter().find(|(&n, &v)| n == 0 || seq.term(n) != v).map(|(n, v)| {
            format!("g_{n} recorded as {} but the sequence gives {}", group.label(*v), n_term(&seq, group, *n))
        }),
    ));

    let triples: BTreeSet<usize> =
        p.relations.iter().filter(|r| r.kind == RelationKind::Triple).flat_map(|r| r.indices.iter().copied()).collect();
    checks.push(CheckOutcome::run(
        "type3-used",
        (triples != p.type3_used).then(|| {
            let diff: Vec<_> = triples.symmetric_difference(&p.type3_used).take(5).collect();
            format!("Triple members and recorded set differ at {diff:?}")
        }),
    ));

    ValidationReport { checks }
}

fn n_term(seq: &GeneratorSequence, group: &Group, n: usize) -> String {
    if n == 0 {
        "nothing (index 0)".into()
    } else {
        group.label(seq.term(n))
    }
}

/// Incidence law: `m(i) >= n` for every relation `r_n` containing `g_i`.
pub fn check_incidence(p: &TrianglePresentation, m: &MFunction) -> CheckOutcome {
    let failure = p.relations.iter().find_map(|r| {
        r.indices.iter().find_map(|&i| match m.get(i) {
            None => Some(format!("m({i}) is not certified")),
            Some(mi) if mi < r.label => Some(format!("m({i}) = {mi} < {} for r_{}", r.label, r.label)),
            Some(_) => None,
        })
    });
    CheckOutcome::run("incidence", failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, GroupSpec};
    use crate::presentation::{build_presentation, Relation};

    fn z2() -> Group {
        make_group(&GroupSpec::Cyclic { n: 2 }).unwrap()
    }

    #[test]
    fn built_presentation_passes() {
        let g = z2();
        let p = build_presentation(&g, 20).unwrap();
        let report = validate_presentation(&p, &g);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn decreasing_pair_fails_form() {
        let g = z2();
        let p = TrianglePresentation::from_relations(&g, vec![Relation::new(1, vec![2, 1]).unwrap()], 0);
        let report = validate_presentation(&p, &g);
        assert!(!report.check("form").unwrap().passed());
    }

    #[test]
    fn unit_on_nontrivial_value_fails_law() {
        let g = z2();
        // value(g_3) = a
        let p = TrianglePresentation::from_relations(&g, vec![Relation::new(1, vec![3]).unwrap()], 0);
        let report = validate_presentation(&p, &g);
        assert!(report.check("form").unwrap().passed());
        assert!(!report.check("relator-law").unwrap().passed());
    }

    #[test]
    fn overused_generator_is_reported() {
        let g = make_group(&GroupSpec::Cyclic { n: 1 }).unwrap();
        let rels = (1..=5).map(|l| Relation::new(l, vec![1]).unwrap()).collect();
        let p = TrianglePresentation::from_relations(&g, rels, 0);
        let report = validate_presentation(&p, &g);
        assert_eq!(report.check("at-most-four").unwrap().counterexample.as_deref(), Some("g_1 occurs in 5 relations"));
    }

    #[test]
    fn incidence_needs_certified_values() {
        let g = z2();
        let p = build_presentation(&g, 3).unwrap();
        let mut stream = crate::presentation::RelationStream::new(&g);
        let m = stream.m_function(p.max_index(), 10_000).unwrap();
        assert!(check_incidence(&p, &m).passed());
        let empty = MFunction { values: Default::default(), horizon: 0 };
        assert!(!check_incidence(&p, &empty).passed());
    }
}
