//! Subword reversing.
//!
//! Left reversing rewrites `x^{-1} y` into `f(x,y) f(y,x)^{-1}` until the word
//! has the shape `u v^{-1}`; right reversing rewrites `y x^{-1}` into
//! `g(x,y)^{-1} g(y,x)` until the shape is `u^{-1} v`. Both processes are
//! confluent with a strategy-independent step count, so the default engine
//! always rewrites the leftmost available pattern.

use crate::words::{Letter, PositiveWord, SignedWord};

use super::complement::ComplementTable;

/// Default reversal step budget.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Result of a reversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReversalOutcome {
    /// Terminal word `u v^{-1}` (left) or `u^{-1} v` (right).
    Converged { u: PositiveWord, v: PositiveWord, steps: u64 },
    /// A pattern `(x, y)` whose complement is undefined was reached; the
    /// complement of the input is infinite.
    Blocked { x: usize, y: usize, steps: u64 },
    /// The step budget ran out.
    Diverged { cap: u64 },
}

impl ReversalOutcome {
    pub fn converged(&self) -> Option<(&PositiveWord, &PositiveWord)> {
        match self {
            ReversalOutcome::Converged { u, v, .. } => Some((u, v)),
            _ => None,
        }
    }

    pub fn steps(&self) -> Option<u64> {
        match self {
            ReversalOutcome::Converged { steps, .. } | ReversalOutcome::Blocked { steps, .. } => Some(*steps),
            ReversalOutcome::Diverged { .. } => None,
        }
    }
}

fn is_pattern(side: Side, a: Letter, b: Letter) -> bool {
    match side {
        Side::Left => a.inverted && !b.inverted,
        Side::Right => !a.inverted && b.inverted,
    }
}

/// Replacement for the pattern starting with `a` followed by `b`, or the
/// undefined pair.
fn replacement(side: Side, table: &ComplementTable, a: Letter, b: Letter) -> Result<Vec<Letter>, (usize, usize)> {
    let (x, y) = match side {
        Side::Left => (a.generator, b.generator),
        Side::Right => (b.generator, a.generator),
    };
    let (Some(xy), Some(yx)) = (table.get(x, y), table.get(y, x)) else {
        return Err((x, y));
    };
    let mut out = Vec::with_capacity(xy.len() + yx.len());
    match side {
        Side::Left => {
            // f(x,y) f(y,x)^{-1}
            out.extend(xy.letters().iter().map(|&g| Letter::pos(g)));
            out.extend(yx.letters().iter().rev().map(|&g| Letter::neg(g)));
        }
        Side::Right => {
            // g(x,y)^{-1} g(y,x)
            out.extend(xy.letters().iter().rev().map(|&g| Letter::neg(g)));
            out.extend(yx.letters().iter().map(|&g| Letter::pos(g)));
        }
    }
    Ok(out)
}

fn split_terminal(side: Side, word: &[Letter], steps: u64) -> ReversalOutcome {
    let boundary = word
        .iter()
        .position(|l| match side {
            Side::Left => l.inverted,
            Side::Right => !l.inverted,
        })
        .unwrap_or(word.len());
    let (head, tail) = word.split_at(boundary);
    let (u, v) = match side {
        Side::Left => (
            PositiveWord(head.iter().map(|l| l.generator).collect()),
            PositiveWord(tail.iter().rev().map(|l| l.generator).collect()),
        ),
        Side::Right => (
            PositiveWord(head.iter().rev().map(|l| l.generator).collect()),
            PositiveWord(tail.iter().map(|l| l.generator).collect()),
        ),
    };
    ReversalOutcome::Converged { u, v, steps }
}

/// Reverse with the leftmost pattern rewritten first.
pub fn reverse(word: &SignedWord, side: Side, table: &ComplementTable, cap: u64) -> ReversalOutcome {
    let mut w: Vec<Letter> = word.letters().to_vec();
    let mut steps = 0u64;
    let mut i = 0usize;
    loop {
        while i + 1 < w.len() && !is_pattern(side, w[i], w[i + 1]) {
            i += 1;
        }
        if i + 1 >= w.len() {
            return split_terminal(side, &w, steps);
        }
        if steps == cap {
            return ReversalOutcome::Diverged { cap };
        }
        match replacement(side, table, w[i], w[i + 1]) {
            Ok(rep) => {
                w.splice(i..i + 2, rep);
                steps += 1;
                i = i.saturating_sub(1);
            }
            Err((x, y)) => return ReversalOutcome::Blocked { x, y, steps },
        }
    }
}

pub fn reverse_left(word: &SignedWord, f: &ComplementTable, cap: u64) -> ReversalOutcome {
    reverse(word, Side::Left, f, cap)
}

pub fn reverse_right(word: &SignedWord, g: &ComplementTable, cap: u64) -> ReversalOutcome {
    reverse(word, Side::Right, g, cap)
}

/// Reverse with a caller-chosen strategy: `choose` receives the start
/// positions of all current patterns and returns an index into that list.
pub fn reverse_with<F>(
    word: &SignedWord,
    side: Side,
    table: &ComplementTable,
    cap: u64,
    mut choose: F,
) -> ReversalOutcome
where
    F: FnMut(&[usize]) -> usize,
{
    let mut w: Vec<Letter> = word.letters().to_vec();
    let mut steps = 0u64;
    let mut positions = Vec::new();
    loop {
        positions.clear();
        positions.extend((0..w.len().saturating_sub(1)).filter(|&i| is_pattern(side, w[i], w[i + 1])));
        if positions.is_empty() {
            return split_terminal(side, &w, steps);
        }
        if steps == cap {
            return ReversalOutcome::Diverged { cap };
        }
        let i = positions[choose(&positions) % positions.len()];
        match replacement(side, table, w[i], w[i + 1]) {
            Ok(rep) => {
                w.splice(i..i + 2, rep);
                steps += 1;
            }
            Err((x, y)) => return ReversalOutcome::Blocked { x, y, steps },
        }
    }
}
