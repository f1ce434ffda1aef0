//! Line-oriented presentation files.
//!
//! ```text
//! # braid monoid on three strands
//! generators = s1 s2
//! weight s1 = 1
//! relation: s1 s2 s1 = s2 s1 s2
//! complement-left: s1 s2 -> s2 s1
//! complement-right: s1 s2 -> s2 s1
//! delta = s1 s2 s1
//! ```
//!
//! Weights default to 1. A side with no explicit `complement-*` entries is
//! derived from the relations. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{Alphabet, PositiveWord};

use super::complement::ComplementTable;
use super::monoid::ComplementedMonoid;
use super::presentation::MonoidPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: MonoidPresentation,
    pub left: Option<ComplementTable>,
    pub right: Option<ComplementTable>,
    pub delta: Option<PositiveWord>,
}

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut weights: Vec<(usize, String, u64)> = Vec::new();
        let mut relations: Vec<(usize, String, String)> = Vec::new();
        let mut left: Vec<(usize, String)> = Vec::new();
        let mut right: Vec<(usize, String)> = Vec::new();
        let mut delta: Option<(usize, String)> = None;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("relation:") {
                let (l, r) = rest.split_once('=').ok_or_else(|| format_err(line_no, "relation needs `=`"))?;
                relations.push((line_no, l.trim().to_string(), r.trim().to_string()));
            } else if let Some(rest) = line.strip_prefix("complement-left:") {
                left.push((line_no, rest.trim().to_string()));
            } else if let Some(rest) = line.strip_prefix("complement-right:") {
                right.push((line_no, rest.trim().to_string()));
            } else if let Some((key, value)) = line.split_once('=') {
                let key = key.trim();
                let value = value.trim();
                if key == "generators" {
                    if alphabet.is_some() {
                        return Err(format_err(line_no, "generators given twice"));
                    }
                    let a = Alphabet::new(value.split_whitespace()).map_err(|e| format_err(line_no, e.to_string()))?;
                    alphabet = Some(a);
                } else if key == "delta" {
                    delta = Some((line_no, value.to_string()));
                } else if let Some(name) = key.strip_prefix("weight ") {
                    let w: u64 = value.parse().map_err(|_| format_err(line_no, format!("bad weight `{value}`")))?;
                    weights.push((line_no, name.trim().to_string(), w));
                } else {
                    return Err(format_err(line_no, format!("unknown key `{key}`")));
                }
            } else {
                return Err(format_err(line_no, format!("unrecognised line `{line}`")));
            }
        }

        let alphabet = alphabet.ok_or_else(|| format_err(0, "missing `generators =` line"))?;
        let at = |line: usize| move |e: Error| format_err(line, e.to_string());
        let mut w = vec![1u64; alphabet.len()];
        for (line, name, value) in weights {
            let g = alphabet.index_of(&name).ok_or_else(|| format_err(line, format!("unknown generator `{name}`")))?;
            w[g] = value;
        }
        let mut rels = Vec::new();
        for (line, l, r) in &relations {
            rels.push((alphabet.parse_positive(l).map_err(at(*line))?, alphabet.parse_positive(r).map_err(at(*line))?));
        }
        let table = |entries: &[(usize, String)]| -> Result<Option<ComplementTable>> {
            if entries.is_empty() {
                return Ok(None);
            }
            let mut t = ComplementTable::new(alphabet.len());
            for (line, entry) in entries {
                let (pair, word) = entry.split_once("->").ok_or_else(|| format_err(*line, "complement needs `->`"))?;
                let names: Vec<&str> = pair.split_whitespace().collect();
                let [x, y] = names[..] else {
                    return Err(format_err(*line, "complement needs two generators"));
                };
                let gx = alphabet.index_of(x).ok_or_else(|| format_err(*line, format!("unknown generator `{x}`")))?;
                let gy = alphabet.index_of(y).ok_or_else(|| format_err(*line, format!("unknown generator `{y}`")))?;
                let word = alphabet.parse_positive(word.trim()).map_err(at(*line))?;
                t.set(gx, gy, word).map_err(at(*line))?;
            }
            t.validate().map_err(at(entries[0].0))?;
            Ok(Some(t))
        };
        let left = table(&left)?;
        let right = table(&right)?;
        let delta = match delta {
            Some((line, d)) => Some(alphabet.parse_positive(&d).map_err(at(line))?),
            None => None,
        };
        let presentation = MonoidPresentation::new(alphabet, w, rels)?;
        Ok(PresentationFile { presentation, left, right, delta })
    }

    /// Explicit tables where given, derived ones elsewhere.
    pub fn monoid(&self) -> Result<ComplementedMonoid> {
        let left = match &self.left {
            Some(t) => t.clone(),
            None => ComplementTable::derive_left(&self.presentation)?,
        };
        let right = match &self.right {
            Some(t) => t.clone(),
            None => ComplementTable::derive_right(&self.presentation)?,
        };
        ComplementedMonoid::new(self.presentation.clone(), left, right)
    }

    pub fn to_text(&self) -> String {
        let p = &self.presentation;
        let a = p.alphabet();
        let mut out = String::new();
        let _ = writeln!(out, "generators = {}", a.names().join(" "));
        for g in 0..a.len() {
            if p.weight(g) != 1 {
                let _ = writeln!(out, "weight {} = {}", a.name(g), p.weight(g));
            }
        }
        for (l, r) in p.relations() {
            let _ = writeln!(out, "relation: {} = {}", a.format_positive(l), a.format_positive(r));
        }
        for (key, table) in [("complement-left", &self.left), ("complement-right", &self.right)] {
            if let Some(t) = table {
                for x in 0..a.len() {
                    for y in 0..a.len() {
                        if x != y {
                            if let Some(w) = t.get(x, y) {
                                let _ = writeln!(out, "{key}: {} {} -> {}", a.name(x), a.name(y), a.format_positive(w));
                            }
                        }
                    }
                }
            }
        }
        if let Some(d) = &self.delta {
            let _ = writeln!(out, "delta = {}", a.format_positive(d));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B3: &str = "# braid monoid\ngenerators = s1 s2\nrelation: s1 s2 s1 = s2 s1 s2\ndelta = s1 s2 s1\n";

    #[test]
    fn parses_b3() {
        let f = PresentationFile::parse(B3).unwrap();
        assert_eq!(f.presentation.generator_count(), 2);
        assert_eq!(f.delta, Some(PositiveWord(vec![0, 1, 0])));
        let m = f.monoid().unwrap();
        assert_eq!(m.left_table().get(0, 1), Some(&PositiveWord(vec![1, 0])));
    }

    #[test]
    fn round_trip_with_tables_and_weights() {
        let text = "generators = a b\nweight b = 2\nrelation: a a b = b a a\ncomplement-left: a b -> a b\ncomplement-left: b a -> a a\ndelta = a a b\n";
        let f = PresentationFile::parse(text).unwrap();
        assert_eq!(f.presentation.weights(), &[1, 2]);
        let again = PresentationFile::parse(&f.to_text()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn reports_line_numbers() {
        let err = PresentationFile::parse("generators = a b\nrelation: a = c\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        let err = PresentationFile::parse("generators = a b\nfrobnicate\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        let err = PresentationFile::parse("relation: a = b\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 0, .. }));
        let err = PresentationFile::parse("generators = a b\ncomplement-left: a b -> b\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let err = PresentationFile::parse("generators = a b\nrelation: a a = b\n").unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { .. }));
    }
}
