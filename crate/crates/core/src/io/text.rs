//! Line-oriented presentation text:
//!
//! ```text
//! gen 1 = a
//! gen 2 = e
//! rel 1: g2
//! rel 2: g1 g3
//! ```

use super::IoError;
use crate::group::Group;
use crate::presentation::{Relation, TrianglePresentation};

/// Contents of a presentation text file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationText {
    /// Generator index and element label, increasing by index.
    pub generators: Vec<(usize, String)>,
    pub relations: Vec<Relation>,
}

impl PresentationText {
    pub fn from_presentation(p: &TrianglePresentation, group: &Group) -> Self {
        Self {
            generators: p.generator_values.iter().map(|(&n, &v)| (n, group.label(v))).collect(),
            relations: p.relations.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, label) in &self.generators {
            out.push_str(&format!("gen {n} = {label}\n"));
        }
        for r in &self.relations {
            let word: Vec<String> = r.indices.iter().map(|i| format!("g{i}")).collect();
            out.push_str(&format!("rel {}: {}\n", r.label, word.join(" ")));
        }
        out
    }

    /// Rebuilds the presentation over `group`, checking every generator
    /// label against the value the generator sequence assigns.
    pub fn to_presentation(&self, group: &Group, rounds_completed: usize) -> Result<TrianglePresentation, IoError> {
        let p = TrianglePresentation::from_relations(group, self.relations.clone(), rounds_completed);
        let expected = PresentationText::from_presentation(&p, group);
        if expected.generators != self.generators {
            return Err(IoError::Presentation("generator labels do not match the group".into()));
        }
        Ok(p)
    }
}

pub fn presentation_to_text(p: &TrianglePresentation, group: &Group) -> String {
    PresentationText::from_presentation(p, group).to_text()
}

fn err(line: usize, column: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, column, message: message.into() }
}

fn parse_index(text: &str, line: usize, column: usize) -> Result<usize, IoError> {
    text.parse().map_err(|_| err(line, column, format!("expected an index, found {text:?}")))
}

pub fn parse_presentation_text(text: &str) -> Result<PresentationText, IoError> {
    let mut generators = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        if raw.trim().is_empty() {
            continue;
        }
        if let Some(rest) = raw.strip_prefix("gen ") {
            if !relations.is_empty() {
                return Err(err(line, 1, "generator after relations"));
            }
            let (n, label) = rest.split_once(" = ").ok_or_else(|| err(line, 5, "expected `gen <n> = <label>`"))?;
            let n = parse_index(n, line, 5)?;
            if generators.last().is_some_and(|&(m, _)| m >= n) {
                return Err(err(line, 5, "generator indices must increase"));
            }
            generators.push((n, label.to_string()));
        } else if let Some(rest) = raw.strip_prefix("rel ") {
            let (label, word) = rest.split_once(": ").ok_or_else(|| err(line, 5, "expected `rel <n>: <word>`"))?;
            let label = parse_index(label, line, 5)?;
            let indices = word
                .split(' ')
                .map(|g| {
                    g.strip_prefix('g')
                        .ok_or_else(|| err(line, 1, format!("expected a generator, found {g:?}")))
                        .and_then(|i| parse_index(i, line, 1))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let r = Relation::new(label, indices).ok_or_else(|| err(line, 1, "relators have length 1 to 3"))?;
            if !r.is_well_formed() {
                return Err(err(line, 1, "indices must be positive and strictly increasing"));
            }
            if label != relations.len() + 1 {
                return Err(err(line, 5, format!("expected relation {}", relations.len() + 1)));
            }
            relations.push(r);
        } else {
            return Err(err(line, 1, "expected `gen` or `rel`"));
        }
    }
    Ok(PresentationText { generators, relations })
}
