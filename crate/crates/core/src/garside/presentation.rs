use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::words::{Alphabet, PositiveWord};

/// Upper bound on the size of a congruence class explored by breadth-first search.
pub const DEFAULT_CLASS_LIMIT: usize = 200_000;

/// A positive monoid presentation with positive generator weights.
///
/// Every relation must be weight-homogeneous, so the weight sum is a norm
/// invariant under the relations and every congruence class is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    alphabet: Alphabet,
    weights: Vec<u64>,
    relations: Vec<(PositiveWord, PositiveWord)>,
}

impl MonoidPresentation {
    pub fn new(
        alphabet: Alphabet,
        weights: Vec<u64>,
        relations: Vec<(PositiveWord, PositiveWord)>,
    ) -> Result<Self> {
        if weights.len() != alphabet.len() {
            return Err(Error::Mismatch(format!(
                "{} weights for {} generators",
                weights.len(),
                alphabet.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidAlphabet(format!(
                "generator `{}` has weight 0",
                alphabet.name(i)
            )));
        }
        let p = MonoidPresentation { alphabet, weights, relations };
        for (index, (l, r)) in p.relations.iter().enumerate() {
            for w in [l, r] {
                if let Some(m) = w.max_index() {
                    if m >= p.alphabet.len() {
                        return Err(Error::IndexOutOfRange { index: m + 1, max: p.alphabet.len() });
                    }
                }
            }
            let (left, right) = (p.norm(l), p.norm(r));
            if left != right {
                return Err(Error::NotHomogeneous { index, left, right });
            }
        }
        Ok(p)
    }

    /// All generators of weight 1.
    pub fn unit_weights(alphabet: Alphabet, relations: Vec<(PositiveWord, PositiveWord)>) -> Result<Self> {
        let weights = vec![1; alphabet.len()];
        Self::new(alphabet, weights, relations)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, generator: usize) -> u64 {
        self.weights[generator]
    }

    pub fn relations(&self) -> &[(PositiveWord, PositiveWord)] {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    /// Sum of letter weights.
    pub fn norm(&self, word: &PositiveWord) -> u64 {
        word.letters().iter().map(|&g| self.weights[g]).sum()
    }

    /// Congruence class of `word` under the defining relations.
    pub fn class_of(&self, word: &PositiveWord, limit: usize) -> Result<Vec<PositiveWord>> {
        congruence_class(&self.relations, word, limit)
    }

    /// Shortlex-least member of the congruence class.
    pub fn canonical(&self, word: &PositiveWord, limit: usize) -> Result<PositiveWord> {
        let class = self.class_of(word, limit)?;
        Ok(shortlex_min(&class))
    }

    pub fn equivalent(&self, u: &PositiveWord, v: &PositiveWord, limit: usize) -> Result<bool> {
        words_equivalent(&self.relations, u, v, limit)
    }

    /// Generators whose class contains only one-letter words, one per class.
    pub fn atoms(&self, limit: usize) -> Result<Vec<usize>> {
        let mut atoms = Vec::new();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for x in 0..self.alphabet.len() {
            if seen.contains_key(&x) {
                continue;
            }
            let class = self.class_of(&PositiveWord::letter(x), limit)?;
            if class.iter().all(|w| w.len() == 1) {
                for w in &class {
                    seen.insert(w.letters()[0], x);
                }
                atoms.push(x);
            }
        }
        Ok(atoms)
    }
}

pub(crate) fn shortlex_min(words: &[PositiveWord]) -> PositiveWord {
    words
        .iter()
        .min_by(|a, b| a.shortlex_cmp(b))
        .cloned()
        .unwrap_or_default()
}

/// Breadth-first closure of `word` under single applications of `relations`
/// in both directions.
pub fn congruence_class(
    relations: &[(PositiveWord, PositiveWord)],
    word: &PositiveWord,
    limit: usize,
) -> Result<Vec<PositiveWord>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.0.clone());
    queue.push_back(word.0.clone());
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        for (l, r) in relations {
            for (from, to) in [(l, r), (r, l)] {
                let from = from.letters();
                if from.is_empty() || from.len() > w.len() {
                    continue;
                }
                for p in 0..=w.len() - from.len() {
                    if &w[p..p + from.len()] == from {
                        let mut next = Vec::with_capacity(w.len() - from.len() + to.len());
                        next.extend_from_slice(&w[..p]);
                        next.extend_from_slice(to.letters());
                        next.extend_from_slice(&w[p + from.len()..]);
                        if seen.insert(next.clone()) {
                            if seen.len() > limit {
                                return Err(Error::Budget(format!(
                                    "congruence class exceeds {limit} words"
                                )));
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        out.push(PositiveWord(w));
    }
    Ok(out)
}

pub(crate) fn words_equivalent(
    relations: &[(PositiveWord, PositiveWord)],
    u: &PositiveWord,
    v: &PositiveWord,
    limit: usize,
) -> Result<bool> {
    if u == v {
        return Ok(true);
    }
    Ok(congruence_class(relations, u, limit)?.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3() -> MonoidPresentation {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let rel = (a.parse_positive("s1 s2 s1").unwrap(), a.parse_positive("s2 s1 s2").unwrap());
        MonoidPresentation::unit_weights(a, vec![rel]).unwrap()
    }

    #[test]
    fn norm_examples() {
        let p = b3();
        assert_eq!(p.norm(&PositiveWord::empty()), 0);
        assert_eq!(p.norm(&p.alphabet().parse_positive("s1 s2 s1").unwrap()), 3);
    }

    #[test]
    fn rejects_inhomogeneous_relation() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let rel = (PositiveWord(vec![0, 0]), PositiveWord(vec![1]));
        assert_eq!(
            MonoidPresentation::unit_weights(a.clone(), vec![rel.clone()]),
            Err(Error::NotHomogeneous { index: 0, left: 2, right: 1 })
        );
        assert!(MonoidPresentation::new(a, vec![1, 2], vec![rel]).is_ok());
    }

    #[test]
    fn class_of_delta_in_b3() {
        let p = b3();
        let delta = p.alphabet().parse_positive("s1 s2 s1").unwrap();
        let mut class = p.class_of(&delta, 100).unwrap();
        class.sort();
        assert_eq!(class, vec![PositiveWord(vec![0, 1, 0]), PositiveWord(vec![1, 0, 1])]);
        assert_eq!(p.canonical(&PositiveWord(vec![1, 0, 1]), 100).unwrap(), PositiveWord(vec![0, 1, 0]));
    }

    #[test]
    fn atom_detection() {
        assert_eq!(b3().atoms(100).unwrap(), vec![0, 1]);
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        let rel = (PositiveWord(vec![2]), PositiveWord(vec![0, 1]));
        let p = MonoidPresentation::new(a, vec![1, 1, 2], vec![rel]).unwrap();
        assert_eq!(p.atoms(100).unwrap(), vec![0, 1]);
    }

    #[test]
    fn class_budget_is_enforced() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let rel = (PositiveWord(vec![0, 1]), PositiveWord(vec![1, 0]));
        let p = MonoidPresentation::unit_weights(a, vec![rel]).unwrap();
        let w = PositiveWord(vec![0, 0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(p.class_of(&w, 1000).unwrap().len(), 70);
        assert!(matches!(p.class_of(&w, 10), Err(Error::Budget(_))));
    }
}
