use crate::words::{PositiveWord, SignedWord};

use super::complement::ComplementTable;
use super::presentation::{words_equivalent, DEFAULT_CLASS_LIMIT};
use super::reversing::{reverse, ReversalOutcome, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleStatus {
    /// Both sides agree by reversing to the empty word.
    Pass,
    /// Both sides agree, found by congruence-class search.
    PassByEnumeration,
    /// The hypothesis complement is infinite or a table entry is undefined.
    Vacuous,
    /// The two sides are distinct in the monoid.
    Fail { lhs: PositiveWord, rhs: PositiveWord },
    /// A reversal or class search ran out of budget.
    Diverged,
}

impl TripleStatus {
    pub fn is_ok(&self) -> bool {
        matches!(self, TripleStatus::Pass | TripleStatus::PassByEnumeration | TripleStatus::Vacuous)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCheck {
    pub triple: (usize, usize, usize),
    pub status: TripleStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub side: Side,
    pub triples: Vec<TripleCheck>,
}

impl CoherenceReport {
    /// No failure and no divergence.
    pub fn passed(&self) -> bool {
        self.triples.iter().all(|t| t.status.is_ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = &TripleCheck> {
        self.triples.iter().filter(|t| matches!(t.status, TripleStatus::Fail { .. }))
    }

    pub fn diverged(&self) -> bool {
        self.triples.iter().any(|t| t.status == TripleStatus::Diverged)
    }

    pub fn count(&self, pred: impl Fn(&TripleStatus) -> bool) -> usize {
        self.triples.iter().filter(|t| pred(&t.status)).count()
    }
}

enum Complement {
    Finite(PositiveWord, PositiveWord),
    Infinite,
    Diverged,
}

fn complement(word: SignedWord, side: Side, table: &ComplementTable, cap: u64) -> Complement {
    match reverse(&word, side, table, cap) {
        ReversalOutcome::Converged { u, v, .. } => Complement::Finite(u, v),
        ReversalOutcome::Blocked { .. } => Complement::Infinite,
        ReversalOutcome::Diverged { .. } => Complement::Diverged,
    }
}

/// `C_L(u, v)` from left-reversing `u^{-1} v`.
fn c_left(u: &PositiveWord, v: &PositiveWord, f: &ComplementTable, cap: u64) -> Complement {
    complement(u.inverse().concat(&v.to_signed()), Side::Left, f, cap)
}

/// `C_R(u, v)` from right-reversing `v u^{-1}` to `C_R(u,v)^{-1} C_R(v,u)`.
fn c_right(u: &PositiveWord, v: &PositiveWord, g: &ComplementTable, cap: u64) -> Complement {
    complement(v.to_signed().concat(&u.inverse()), Side::Right, g, cap)
}

fn compare(
    lhs: PositiveWord,
    rhs: PositiveWord,
    side: Side,
    table: &ComplementTable,
    relations: &[(PositiveWord, PositiveWord)],
    cap: u64,
    class_limit: usize,
) -> TripleStatus {
    let by_reversing = match side {
        Side::Left => c_left(&lhs, &rhs, table, cap),
        Side::Right => c_right(&lhs, &rhs, table, cap),
    };
    if let Complement::Finite(a, b) = by_reversing {
        if a.is_empty() && b.is_empty() {
            return TripleStatus::Pass;
        }
    }
    match words_equivalent(relations, &lhs, &rhs, class_limit) {
        Ok(true) => TripleStatus::PassByEnumeration,
        Ok(false) => TripleStatus::Fail { lhs, rhs },
        Err(_) => TripleStatus::Diverged,
    }
}

/// `C_L(f(x,y), f(x,z)) ≡ C_L(f(y,x), f(y,z))` in `M_L^f` for every ordered triple.
pub fn check_coherence_left(f: &ComplementTable, cap: u64) -> CoherenceReport {
    check_coherence_left_with(f, cap, DEFAULT_CLASS_LIMIT)
}

pub fn check_coherence_left_with(f: &ComplementTable, cap: u64, class_limit: usize) -> CoherenceReport {
    let relations = f.left_relations();
    let n = f.size();
    let mut triples = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let status = left_triple(f, &relations, (x, y, z), cap, class_limit);
                triples.push(TripleCheck { triple: (x, y, z), status });
            }
        }
    }
    CoherenceReport { side: Side::Left, triples }
}

fn left_triple(
    f: &ComplementTable,
    relations: &[(PositiveWord, PositiveWord)],
    (x, y, z): (usize, usize, usize),
    cap: u64,
    class_limit: usize,
) -> TripleStatus {
    let (Some(fxy), Some(fxz), Some(fyx), Some(fyz)) = (f.get(x, y), f.get(x, z), f.get(y, x), f.get(y, z)) else {
        return TripleStatus::Vacuous;
    };
    let lhs = match c_left(fxy, fxz, f, cap) {
        Complement::Finite(a, _) => a,
        Complement::Infinite => return TripleStatus::Vacuous,
        Complement::Diverged => return TripleStatus::Diverged,
    };
    let rhs = match c_left(fyx, fyz, f, cap) {
        Complement::Finite(a, _) => a,
        Complement::Infinite => return TripleStatus::Fail { lhs, rhs: PositiveWord::empty() },
        Complement::Diverged => return TripleStatus::Diverged,
    };
    compare(lhs, rhs, Side::Left, f, relations, cap, class_limit)
}

/// `C_R(g(z,x), g(y,x)) ≡ C_R(g(z,y), g(x,y))` in `M_R^g` for every ordered triple.
pub fn check_coherence_right(g: &ComplementTable, cap: u64) -> CoherenceReport {
    check_coherence_right_with(g, cap, DEFAULT_CLASS_LIMIT)
}

pub fn check_coherence_right_with(g: &ComplementTable, cap: u64, class_limit: usize) -> CoherenceReport {
    let relations = g.right_relations();
    let n = g.size();
    let mut triples = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let status = right_triple(g, &relations, (x, y, z), cap, class_limit);
                triples.push(TripleCheck { triple: (x, y, z), status });
            }
        }
    }
    CoherenceReport { side: Side::Right, triples }
}

fn right_triple(
    g: &ComplementTable,
    relations: &[(PositiveWord, PositiveWord)],
    (x, y, z): (usize, usize, usize),
    cap: u64,
    class_limit: usize,
) -> TripleStatus {
    let (Some(gzx), Some(gyx), Some(gzy), Some(gxy)) = (g.get(z, x), g.get(y, x), g.get(z, y), g.get(x, y)) else {
        return TripleStatus::Vacuous;
    };
    let lhs = match c_right(gzx, gyx, g, cap) {
        Complement::Finite(a, _) => a,
        Complement::Infinite => return TripleStatus::Vacuous,
        Complement::Diverged => return TripleStatus::Diverged,
    };
    let rhs = match c_right(gzy, gxy, g, cap) {
        Complement::Finite(a, _) => a,
        Complement::Infinite => return TripleStatus::Fail { lhs, rhs: PositiveWord::empty() },
        Complement::Diverged => return TripleStatus::Diverged,
    };
    compare(lhs, rhs, Side::Right, g, relations, cap, class_limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn b3() -> ComplementTable {
        let mut f = ComplementTable::new(2);
        f.set_pair(0, 1, PositiveWord(vec![1, 0]), PositiveWord(vec![0, 1])).unwrap();
        f
    }

    /// f(a,b)=b, f(b,a)=a, f(b,c)=c, f(c,b)=b, f(a,c)=b, f(c,a)=b.
    pub(crate) fn incoherent_fixture() -> ComplementTable {
        let mut f = ComplementTable::new(3);
        f.set_pair(0, 1, PositiveWord(vec![1]), PositiveWord(vec![0])).unwrap();
        f.set_pair(1, 2, PositiveWord(vec![2]), PositiveWord(vec![1])).unwrap();
        f.set_pair(0, 2, PositiveWord(vec![1]), PositiveWord(vec![1])).unwrap();
        f
    }

    #[test]
    fn braid_table_is_coherent() {
        let l = check_coherence_left(&b3(), 10_000);
        assert_eq!(l.triples.len(), 8);
        assert!(l.passed());
        let r = check_coherence_right(&b3(), 10_000);
        assert_eq!(r.triples.len(), 8);
        assert!(r.passed());
    }

    #[test]
    fn single_letter_is_vacuous() {
        let f = ComplementTable::new(1);
        assert!(check_coherence_left(&f, 10).passed());
        assert!(check_coherence_right(&f, 10).passed());
    }

    #[test]
    fn pinned_incoherent_table() {
        let f = incoherent_fixture();
        assert!(check_coherence_left(&f, 10_000).failures().count() > 0);
        assert!(check_coherence_right(&f, 10_000).failures().count() > 0);
    }

    fn random_table(rng: &mut ChaCha8Rng, n: usize) -> ComplementTable {
        let mut f = ComplementTable::new(n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    let len = rng.gen_range(1..=2);
                    f.set(x, y, PositiveWord((0..len).map(|_| rng.gen_range(0..n)).collect())).unwrap();
                }
            }
        }
        f
    }

    #[test]
    fn random_search_finds_incoherent_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut left = 0;
        let mut right = 0;
        for _ in 0..200 {
            let f = random_table(&mut rng, 3);
            if check_coherence_left_with(&f, 2_000, 5_000).failures().count() > 0 {
                left += 1;
            }
            if check_coherence_right_with(&f, 2_000, 5_000).failures().count() > 0 {
                right += 1;
            }
        }
        assert!(left > 0 && right > 0, "left {left}, right {right}");
    }

    #[test]
    fn commuting_table_is_coherent() {
        let mut f = ComplementTable::new(3);
        for x in 0..3 {
            for y in 0..3 {
                if x != y {
                    f.set(x, y, PositiveWord::letter(y)).unwrap();
                }
            }
        }
        assert!(check_coherence_left(&f, 1000).passed());
        assert!(check_coherence_right(&f, 1000).passed());
    }
}
