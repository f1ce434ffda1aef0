//! Exhaustive enumeration of small monoid elements, used as a brute-force
//! oracle for divisibility, lcms, gcds and cancellativity.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::PositiveWord;

use super::monoid::ComplementedMonoid;
use super::presentation::{congruence_class, shortlex_min, MonoidPresentation};

/// All elements of norm at most `bound`, with a partial multiplication table.
#[derive(Clone, Debug)]
pub struct Ball {
    bound: u64,
    elements: Vec<PositiveWord>,
    norms: Vec<u64>,
    members: HashMap<Vec<usize>, usize>,
    /// `table[i * len + j]` is the index of `e_i e_j` when its norm is within the bound.
    table: Vec<Option<usize>>,
    left_div: Vec<bool>,
    right_div: Vec<bool>,
}

/// Elements in nondecreasing norm order, canonical words shortlex-least in their class.
pub fn enumerate_ball(p: &MonoidPresentation, bound: u64, limit: usize) -> Result<Ball> {
    let mut elements = vec![PositiveWord::empty()];
    let mut norms = vec![0u64];
    let mut members: HashMap<Vec<usize>, usize> = HashMap::new();
    members.insert(Vec::new(), 0);
    for norm in 1..=bound {
        let mut layer: Vec<(PositiveWord, Vec<PositiveWord>)> = Vec::new();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        for x in 0..p.generator_count() {
            let wx = p.weight(x);
            if wx > norm {
                continue;
            }
            for i in 0..elements.len() {
                if norms[i] != norm - wx {
                    continue;
                }
                let mut cand = elements[i].0.clone();
                cand.push(x);
                if seen.contains_key(&cand) {
                    continue;
                }
                let class = congruence_class(p.relations(), &PositiveWord(cand), limit)?;
                for w in &class {
                    seen.insert(w.0.clone(), ());
                }
                layer.push((shortlex_min(&class), class));
            }
        }
        layer.sort_by(|a, b| a.0.shortlex_cmp(&b.0));
        for (rep, class) in layer {
            let idx = elements.len();
            for w in class {
                members.insert(w.0, idx);
            }
            elements.push(rep);
            norms.push(norm);
        }
        if members.len() > limit {
            return Err(Error::Budget(format!("ball of norm {bound} exceeds {limit} words")));
        }
    }
    let n = elements.len();
    let mut table = vec![None; n * n];
    for i in 0..n {
        for j in 0..n {
            if norms[i] + norms[j] <= bound {
                let w = elements[i].concat(&elements[j]);
                table[i * n + j] = members.get(w.letters()).copied();
            }
        }
    }
    let mut left_div = vec![false; n * n];
    let mut right_div = vec![false; n * n];
    for i in 0..n {
        for k in 0..n {
            if let Some(j) = table[i * n + k] {
                left_div[i * n + j] = true;
                right_div[k * n + j] = true;
            }
        }
    }
    Ok(Ball { bound, elements, norms, members, table, left_div, right_div })
}

impl Ball {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PositiveWord] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PositiveWord {
        &self.elements[i]
    }

    pub fn norm(&self, i: usize) -> u64 {
        self.norms[i]
    }

    pub fn index_of(&self, w: &PositiveWord) -> Option<usize> {
        self.members.get(w.letters()).copied()
    }

    pub fn multiply(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i * self.len() + j]
    }

    /// `e_i ≤_L e_j`.
    pub fn left_divides(&self, i: usize, j: usize) -> bool {
        self.left_div[i * self.len() + j]
    }

    /// `e_i ≤_R e_j`.
    pub fn right_divides(&self, i: usize, j: usize) -> bool {
        self.right_div[i * self.len() + j]
    }

    fn least(&self, candidates: &[usize], le: impl Fn(usize, usize) -> bool) -> Option<usize> {
        candidates.iter().copied().find(|&c| candidates.iter().all(|&d| le(c, d)))
    }

    fn greatest(&self, candidates: &[usize], le: impl Fn(usize, usize) -> bool) -> Option<usize> {
        candidates.iter().copied().find(|&c| candidates.iter().all(|&d| le(d, c)))
    }

    /// `≤_L`-least common upper bound inside the ball; `None` when there is no
    /// common upper bound or no least one.
    pub fn brute_join_left(&self, i: usize, j: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.len()).filter(|&k| self.left_divides(i, k) && self.left_divides(j, k)).collect();
        self.least(&ubs, |a, b| self.left_divides(a, b))
    }

    /// `≤_L`-greatest common lower bound.
    pub fn brute_meet_left(&self, i: usize, j: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.len()).filter(|&k| self.left_divides(k, i) && self.left_divides(k, j)).collect();
        self.greatest(&lbs, |a, b| self.left_divides(a, b))
    }

    pub fn brute_join_right(&self, i: usize, j: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.len()).filter(|&k| self.right_divides(i, k) && self.right_divides(j, k)).collect();
        self.least(&ubs, |a, b| self.right_divides(a, b))
    }

    pub fn brute_meet_right(&self, i: usize, j: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.len()).filter(|&k| self.right_divides(k, i) && self.right_divides(k, j)).collect();
        self.greatest(&lbs, |a, b| self.right_divides(a, b))
    }

    /// First `(a, b, c)` with `ab ≡ ac` and `b ≠ c`.
    pub fn left_cancellation_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for b in 0..n {
                if let Some(p) = self.multiply(a, b) {
                    if let Some(&c) = seen.get(&p) {
                        return Some((a, c, b));
                    }
                    seen.insert(p, b);
                }
            }
        }
        None
    }

    /// First `(a, b, c)` with `ba ≡ ca` and `b ≠ c`.
    pub fn right_cancellation_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for b in 0..n {
                if let Some(p) = self.multiply(b, a) {
                    if let Some(&c) = seen.get(&p) {
                        return Some((a, c, b));
                    }
                    seen.insert(p, b);
                }
            }
        }
        None
    }
}

/// Disagreements between the reversing engine and the brute-force ball.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub elements: usize,
    pub pairs: usize,
    /// `(i, j)` where the engine and the ball disagree, per operation.
    pub join_left: Vec<(usize, usize)>,
    pub meet_left: Vec<(usize, usize)>,
    pub join_right: Vec<(usize, usize)>,
    pub meet_right: Vec<(usize, usize)>,
    /// Pairs whose meet the engine cannot compute because an lcm is missing.
    pub meet_unavailable: usize,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.join_left.is_empty()
            && self.meet_left.is_empty()
            && self.join_right.is_empty()
            && self.meet_right.is_empty()
            && self.meet_unavailable == 0
            && self.left_cancellative
            && self.right_cancellative
    }
}

/// Ball index of an engine result; `None` for a missing lcm or one outside the ball.
fn locate(ball: &Ball, r: Result<PositiveWord>) -> Result<Option<usize>> {
    match r {
        Ok(w) => Ok(ball.index_of(&w)),
        Err(Error::NoCommonMultiple) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Compares joins and meets on both sides for every pair of ball elements,
/// and checks cancellativity of all products inside the ball.
pub fn compare_with_ball(m: &ComplementedMonoid, ball: &Ball) -> Result<OracleReport> {
    let n = ball.len();
    let mut report = OracleReport { elements: n, pairs: n * n, ..OracleReport::default() };
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (ball.element(i), ball.element(j));
            if locate(ball, m.join_left(u, v))? != ball.brute_join_left(i, j) {
                report.join_left.push((i, j));
            }
            match m.meet_left(u, v) {
                Err(Error::NoCommonMultiple) => report.meet_unavailable += 1,
                r => {
                    if locate(ball, r)? != ball.brute_meet_left(i, j) {
                        report.meet_left.push((i, j));
                    }
                }
            }
            if locate(ball, m.join_right(u, v))? != ball.brute_join_right(i, j) {
                report.join_right.push((i, j));
            }
            match m.meet_right(u, v) {
                Err(Error::NoCommonMultiple) => report.meet_unavailable += 1,
                r => {
                    if locate(ball, r)? != ball.brute_meet_right(i, j) {
                        report.meet_right.push((i, j));
                    }
                }
            }
        }
    }
    report.left_cancellative = ball.left_cancellation_failure().is_none();
    report.right_cancellative = ball.right_cancellation_failure().is_none();
    Ok(report)
}
