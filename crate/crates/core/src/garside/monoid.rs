use crate::error::{Error, Result};
use crate::words::{Alphabet, PositiveWord, SignedWord};

use super::complement::ComplementTable;
use super::presentation::{words_equivalent, MonoidPresentation, DEFAULT_CLASS_LIMIT};
use super::reversing::{reverse, ReversalOutcome, Side, DEFAULT_CAP};

/// A homogeneous presentation together with a left complement `f` and a
/// right complement `g`, plus the reversal budget used by every operation.
#[derive(Clone, Debug)]
pub struct ComplementedMonoid {
    presentation: MonoidPresentation,
    left: ComplementTable,
    right: ComplementTable,
    cap: u64,
    class_limit: usize,
}

impl ComplementedMonoid {
    pub fn new(presentation: MonoidPresentation, left: ComplementTable, right: ComplementTable) -> Result<Self> {
        let n = presentation.generator_count();
        if left.size() != n || right.size() != n {
            return Err(Error::Mismatch(format!(
                "complement tables of size {}/{} for {} generators",
                left.size(),
                right.size(),
                n
            )));
        }
        left.validate()?;
        right.validate()?;
        Ok(ComplementedMonoid { presentation, left, right, cap: DEFAULT_CAP, class_limit: DEFAULT_CLASS_LIMIT })
    }

    /// Both tables read off the relations.
    pub fn derived(presentation: MonoidPresentation) -> Result<Self> {
        let left = ComplementTable::derive_left(&presentation)?;
        let right = ComplementTable::derive_right(&presentation)?;
        Self::new(presentation, left, right)
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap.max(1);
        self
    }

    pub fn with_class_limit(mut self, limit: usize) -> Self {
        self.class_limit = limit;
        self
    }

    pub fn presentation(&self) -> &MonoidPresentation {
        &self.presentation
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.presentation.alphabet()
    }

    pub fn left_table(&self) -> &ComplementTable {
        &self.left
    }

    pub fn right_table(&self) -> &ComplementTable {
        &self.right
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn class_limit(&self) -> usize {
        self.class_limit
    }

    pub fn norm(&self, w: &PositiveWord) -> u64 {
        self.presentation.norm(w)
    }

    pub fn reverse(&self, word: &SignedWord, side: Side) -> ReversalOutcome {
        let table = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        reverse(word, side, table, self.cap)
    }

    fn converged(&self, outcome: ReversalOutcome) -> Result<Option<(PositiveWord, PositiveWord)>> {
        match outcome {
            ReversalOutcome::Converged { u, v, .. } => Ok(Some((u, v))),
            ReversalOutcome::Blocked { .. } => Ok(None),
            ReversalOutcome::Diverged { cap } => Err(Error::Diverged { cap }),
        }
    }

    /// `(C_L(u,v), C_L(v,u))`, so that `u·C_L(u,v) ≡ v·C_L(v,u)`; `None` when
    /// the complement is infinite.
    pub fn left_complements(&self, u: &PositiveWord, v: &PositiveWord) -> Result<Option<(PositiveWord, PositiveWord)>> {
        let w = u.inverse().concat(&v.to_signed());
        self.converged(self.reverse(&w, Side::Left))
    }

    /// `(p, q)` with `p·u ≡ q·v` the right lcm, from right-reversing `v u^{-1}`.
    pub fn right_complements(&self, u: &PositiveWord, v: &PositiveWord) -> Result<Option<(PositiveWord, PositiveWord)>> {
        let w = v.to_signed().concat(&u.inverse());
        // v u^{-1} -> a^{-1} b gives a·v ≡ b·u
        Ok(self.converged(self.reverse(&w, Side::Right))?.map(|(a, b)| (b, a)))
    }

    /// `u ≤_L v`: some `c` has `u·c ≡ v`.
    pub fn left_divides(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        Ok(matches!(self.left_complements(u, v)?, Some((_, q)) if q.is_empty()))
    }

    /// `u ≤_R v`: some `c` has `c·u ≡ v`.
    pub fn right_divides(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        Ok(matches!(self.right_complements(u, v)?, Some((_, q)) if q.is_empty()))
    }

    /// `d \ u` when `d ≤_L u`.
    pub fn left_quotient(&self, d: &PositiveWord, u: &PositiveWord) -> Result<Option<PositiveWord>> {
        Ok(match self.left_complements(d, u)? {
            Some((c, q)) if q.is_empty() => Some(c),
            _ => None,
        })
    }

    /// `u / d` when `d ≤_R u`.
    pub fn right_quotient(&self, u: &PositiveWord, d: &PositiveWord) -> Result<Option<PositiveWord>> {
        Ok(match self.right_complements(d, u)? {
            Some((c, q)) if q.is_empty() => Some(c),
            _ => None,
        })
    }

    /// Representative `u·C_L(u,v)` of `u ∨_L v`.
    pub fn join_left(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        let (cu, _) = self.left_complements(u, v)?.ok_or(Error::NoCommonMultiple)?;
        Ok(u.concat(&cu))
    }

    /// Representative of `u ∨_R v`.
    pub fn join_right(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        let (p, _) = self.right_complements(u, v)?.ok_or(Error::NoCommonMultiple)?;
        Ok(p.concat(u))
    }

    /// `u ∧_L v = (u ∨_L v) /_R ((u \ v) ∨_R (v \ u))`.
    pub fn meet_left(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        let (cu, cv) = self.left_complements(u, v)?.ok_or(Error::NoCommonMultiple)?;
        let join = u.concat(&cu);
        let k = self.join_right(&cu, &cv)?;
        self.right_quotient(&join, &k)?
            .ok_or_else(|| Error::NotGarside("right lcm of the complements does not divide the join".into()))
    }

    /// `u ∧_R v`, mirror of [`meet_left`](Self::meet_left).
    pub fn meet_right(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        let (p, q) = self.right_complements(u, v)?.ok_or(Error::NoCommonMultiple)?;
        let join = p.concat(u);
        let k = self.join_left(&p, &q)?;
        self.left_quotient(&k, &join)?
            .ok_or_else(|| Error::NotGarside("left lcm of the complements does not divide the join".into()))
    }

    /// Reversing-based equality: `u^{-1} v` left-reverses and `u v^{-1}`
    /// right-reverses to the empty word.
    pub fn equivalent_by_reversing(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        if self.norm(u) != self.norm(v) {
            return Ok(false);
        }
        let left = match self.left_complements(u, v)? {
            Some((a, b)) => a.is_empty() && b.is_empty(),
            None => false,
        };
        if !left {
            return Ok(false);
        }
        Ok(match self.right_complements(u, v)? {
            Some((a, b)) => a.is_empty() && b.is_empty(),
            None => false,
        })
    }

    /// Exact equality in the presented monoid by congruence-class search.
    pub fn equivalent_exact(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        if self.norm(u) != self.norm(v) {
            return Ok(false);
        }
        words_equivalent(self.presentation.relations(), u, v, self.class_limit)
    }

    pub fn canonical(&self, w: &PositiveWord) -> Result<PositiveWord> {
        self.presentation.canonical(w, self.class_limit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3() -> ComplementedMonoid {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let rel = (a.parse_positive("s1 s2 s1").unwrap(), a.parse_positive("s2 s1 s2").unwrap());
        ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![rel]).unwrap()).unwrap()
    }

    fn w(m: &ComplementedMonoid, s: &str) -> PositiveWord {
        m.alphabet().parse_positive(s).unwrap()
    }

    #[test]
    fn divisibility_examples() {
        let m = b3();
        let d = w(&m, "s1 s2 s1");
        assert!(m.left_divides(&d, &d).unwrap());
        assert_eq!(m.left_complements(&d, &d).unwrap(), Some((PositiveWord::empty(), PositiveWord::empty())));
        assert!(m.left_divides(&w(&m, "s1"), &d).unwrap());
        assert!(!m.left_divides(&w(&m, "s1"), &w(&m, "s2")).unwrap());
        assert!(m.right_divides(&w(&m, "s2"), &w(&m, "s2 s1 s2")).unwrap());
        assert!(m.right_divides(&w(&m, "s1"), &w(&m, "s2 s1 s2")).unwrap());
        assert!(!m.right_divides(&w(&m, "s1"), &w(&m, "s1 s2")).unwrap());
    }

    #[test]
    fn join_examples() {
        let m = b3();
        assert_eq!(m.join_left(&w(&m, "s1"), &w(&m, "s2")).unwrap(), w(&m, "s1 s2 s1"));
        let u = w(&m, "s1 s2 s2");
        assert_eq!(m.join_left(&u, &u).unwrap(), u);
        assert_eq!(m.join_left(&u, &PositiveWord::empty()).unwrap(), u);
        assert!(m.equivalent_exact(&m.join_right(&w(&m, "s1"), &w(&m, "s2")).unwrap(), &w(&m, "s1 s2 s1")).unwrap());
    }

    #[test]
    fn meet_examples() {
        let m = b3();
        assert_eq!(m.meet_left(&w(&m, "s1"), &w(&m, "s2")).unwrap(), PositiveWord::empty());
        let u = w(&m, "s1 s2 s2");
        assert!(m.equivalent_exact(&m.meet_left(&u, &u).unwrap(), &u).unwrap());
        let g = m.meet_left(&w(&m, "s1 s2"), &w(&m, "s1 s1")).unwrap();
        assert!(m.equivalent_exact(&g, &w(&m, "s1")).unwrap());
        let r = m.meet_right(&w(&m, "s2 s1"), &w(&m, "s1 s1")).unwrap();
        assert!(m.equivalent_exact(&r, &w(&m, "s1")).unwrap());
    }

    #[test]
    fn reversing_equality_matches_exact() {
        let m = b3();
        let pairs = [("s1 s2 s1", "s2 s1 s2", true), ("s1 s2", "s2 s1", false), ("s1 s2 s1 s1", "s2 s1 s2 s1", true)];
        for (a, b, expected) in pairs {
            assert_eq!(m.equivalent_by_reversing(&w(&m, a), &w(&m, b)).unwrap(), expected);
            assert_eq!(m.equivalent_exact(&w(&m, a), &w(&m, b)).unwrap(), expected);
        }
    }

    #[test]
    fn free_monoid_has_no_common_multiples() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let m = ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![]).unwrap()).unwrap();
        let (x, y) = (PositiveWord::letter(0), PositiveWord::letter(1));
        assert_eq!(m.left_complements(&x, &y).unwrap(), None);
        assert_eq!(m.join_left(&x, &y), Err(Error::NoCommonMultiple));
        assert!(!m.left_divides(&y, &PositiveWord(vec![0, 1])).unwrap());
        assert!(m.left_divides(&x, &PositiveWord(vec![0, 1])).unwrap());
    }
}
