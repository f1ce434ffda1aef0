use crate::error::{Error, Result};
use crate::words::PositiveWord;

use super::presentation::MonoidPresentation;

/// A complement `f: S × S → S*` with `f(x,x) = ε`.
///
/// Off-diagonal entries may be undefined; an undefined pair means the two
/// letters have no common multiple and blocks reversing. Entries come in
/// pairs: `f(x,y)` is defined iff `f(y,x)` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementTable {
    size: usize,
    entries: Vec<Option<PositiveWord>>,
}

impl ComplementTable {
    /// Table with only the diagonal defined.
    pub fn new(size: usize) -> Self {
        let mut entries = vec![None; size * size];
        for x in 0..size {
            entries[x * size + x] = Some(PositiveWord::empty());
        }
        ComplementTable { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&PositiveWord> {
        self.entries[x * self.size + y].as_ref()
    }

    pub fn set(&mut self, x: usize, y: usize, word: PositiveWord) -> Result<()> {
        if x >= self.size || y >= self.size {
            return Err(Error::IndexOutOfRange { index: x.max(y) + 1, max: self.size });
        }
        if let Some(m) = word.max_index() {
            if m >= self.size {
                return Err(Error::IndexOutOfRange { index: m + 1, max: self.size });
            }
        }
        if x == y && !word.is_empty() {
            return Err(Error::InvalidComplement(format!("f({x},{x}) must be empty")));
        }
        self.entries[x * self.size + y] = Some(word);
        Ok(())
    }

    /// Set `f(x,y)` and `f(y,x)` together.
    pub fn set_pair(&mut self, x: usize, y: usize, xy: PositiveWord, yx: PositiveWord) -> Result<()> {
        self.set(x, y, xy)?;
        self.set(y, x, yx)
    }

    /// Checks the pairing invariant.
    pub fn validate(&self) -> Result<()> {
        for x in 0..self.size {
            for y in 0..self.size {
                if self.get(x, y).is_some() != self.get(y, x).is_some() {
                    return Err(Error::InvalidComplement(format!(
                        "entry ({x},{y}) defined without its partner ({y},{x})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Relations `x f(x,y) = y f(y,x)` of the monoid `M_L^f`, one per unordered pair.
    pub fn left_relations(&self) -> Vec<(PositiveWord, PositiveWord)> {
        self.pairs()
            .map(|(x, y, xy, yx)| (PositiveWord::letter(x).concat(xy), PositiveWord::letter(y).concat(yx)))
            .collect()
    }

    /// Relations `f(y,x) x = f(x,y) y` of the monoid `M_R^f`, one per unordered pair.
    pub fn right_relations(&self) -> Vec<(PositiveWord, PositiveWord)> {
        self.pairs()
            .map(|(x, y, xy, yx)| (yx.concat(&PositiveWord::letter(x)), xy.concat(&PositiveWord::letter(y))))
            .collect()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize, &PositiveWord, &PositiveWord)> {
        (0..self.size).flat_map(move |x| {
            (x + 1..self.size).filter_map(move |y| match (self.get(x, y), self.get(y, x)) {
                (Some(a), Some(b)) => Some((x, y, a, b)),
                _ => None,
            })
        })
    }

    /// Read a left complement off relations `x·u = y·v` with distinct heads.
    ///
    /// Each unordered head pair may occur in at most one relation.
    pub fn derive_left(p: &MonoidPresentation) -> Result<Self> {
        Self::derive(p, false, |w| (w.letters().first().copied(), PositiveWord(w.letters().get(1..).unwrap_or(&[]).to_vec())))
    }

    /// Read a right complement off relations `u·x = v·y` with distinct tails.
    pub fn derive_right(p: &MonoidPresentation) -> Result<Self> {
        Self::derive(p, true, |w| {
            let n = w.len();
            (w.letters().last().copied(), PositiveWord(w.letters()[..n.saturating_sub(1)].to_vec()))
        })
    }

    fn derive<F>(p: &MonoidPresentation, right: bool, split: F) -> Result<Self>
    where
        F: Fn(&PositiveWord) -> (Option<usize>, PositiveWord),
    {
        let n = p.generator_count();
        let mut table = ComplementTable::new(n);
        for (l, r) in p.relations() {
            let (Some(x), lrest) = split(l) else {
                return Err(Error::InvalidComplement("relation with an empty side".into()));
            };
            let (Some(y), rrest) = split(r) else {
                return Err(Error::InvalidComplement("relation with an empty side".into()));
            };
            if x == y {
                return Err(Error::InvalidComplement(format!(
                    "relation with equal boundary letters `{}`; an explicit table is required",
                    p.alphabet().name(x)
                )));
            }
            if table.get(x, y).is_some() {
                return Err(Error::InvalidComplement(format!(
                    "pair ({}, {}) bounds more than one relation; an explicit table is required",
                    p.alphabet().name(x),
                    p.alphabet().name(y)
                )));
            }
            if right {
                // u·x = v·y means g(y,x) = u and g(x,y) = v
                table.set_pair(y, x, lrest, rrest)?;
            } else {
                table.set_pair(x, y, lrest, rrest)?;
            }
        }
        Ok(table)
    }
}
