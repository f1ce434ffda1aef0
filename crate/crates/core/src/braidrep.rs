//! Braid words, the Artin-type action of `B_n` on `H_1 ∗ … ∗ H_n`, Markov
//! moves and braid triviality.
//!
//! With `h_k = φ_k(h)`, the generator `σ_k` acts by
//!
//! ```text
//! φ_k(y)     ↦ h_k^{-1} φ_{k+1}(y) h_k
//! φ_{k+1}(y) ↦ h_k φ_k(y) h_k^{-1}
//! φ_j(y)     ↦ φ_j(y)                      (j ≠ k, k+1)
//! ```
//!
//! and `σ_k^{-1}` by
//!
//! ```text
//! φ_k(y)     ↦ h_{k+1}^{-1} φ_{k+1}(y) h_{k+1}
//! φ_{k+1}(y) ↦ h_{k+1} φ_k(y) h_{k+1}^{-1}
//! ```
//!
//! `apply_braid` is a homomorphism: `ρ(β₁β₂) = ρ(β₁) ∘ ρ(β₂)`, so the
//! rightmost letter acts first.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::freeprod::{BaseGroup, DistinguishedElement, FreeProduct, FreeProductElement, Syllable};
use crate::garside::GarsideStructure;
use crate::words::{free_reduce, Alphabet, Letter, SignedWord};

/// Name prefix of braid generators.
pub const BRAID_PREFIX: &str = "s";

/// `s1 … s{n-1}`.
pub fn braid_alphabet(n: usize) -> Result<Alphabet> {
    Alphabet::numbered(BRAID_PREFIX, n.saturating_sub(1))
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}`; generator index `k-1` stands for `σ_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: SignedWord,
}

impl BraidWord {
    pub fn new(strands: usize, word: SignedWord) -> Result<Self> {
        if strands == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        if let Some(m) = word.max_index() {
            if m + 1 >= strands {
                return Err(Error::IndexOutOfRange { index: m + 1, max: strands - 1 });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, SignedWord::empty())
    }

    /// From signed 1-based indices: `2` is `σ_2`, `-1` is `σ_1^{-1}`.
    pub fn from_indices(strands: usize, indices: &[i64]) -> Result<Self> {
        let mut letters = Vec::with_capacity(indices.len());
        for &i in indices {
            if i == 0 {
                return Err(Error::IndexOutOfRange { index: 0, max: strands.saturating_sub(1) });
            }
            let g = (i.unsigned_abs() - 1) as usize;
            letters.push(if i > 0 { Letter::pos(g) } else { Letter::neg(g) });
        }
        Self::new(strands, SignedWord(letters))
    }

    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let a = braid_alphabet(strands)?;
        Self::new(strands, a.parse_signed(text)?)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &SignedWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, word: self.word.inverse() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.same_strands(other)?;
        Ok(BraidWord { strands: self.strands, word: self.word.concat(&other.word) })
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        BraidWord { strands: self.strands, word: self.word.pow(k) }
    }

    pub fn free_reduced(&self) -> BraidWord {
        BraidWord { strands: self.strands, word: free_reduce(&self.word) }
    }

    /// Exponent sum, i.e. the image in `Z` of the abelianisation.
    pub fn exponent_sum(&self) -> i64 {
        self.word.letters().iter().map(|l| l.sign()).sum()
    }

    /// Permutation of strands: `perm[i]` is where a strand starting at `i` ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for l in self.word.letters() {
            let k = l.generator;
            for p in pos.iter_mut() {
                if *p == k {
                    *p = k + 1;
                } else if *p == k + 1 {
                    *p = k;
                }
            }
        }
        pos
    }

    /// Number of cycles of the strand permutation, i.e. components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut c = s;
                while !seen[c] {
                    seen[c] = true;
                    c = perm[c];
                }
            }
        }
        cycles
    }

    fn same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::Mismatch(format!("braids on {} and {} strands", self.strands, other.strands)));
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match braid_alphabet(self.strands) {
            Ok(a) => write!(f, "{}", a.display_signed(&self.word)),
            Err(_) => write!(f, "{}", self.word),
        }
    }
}

/// `α^{-1} β α`, freely reduced.
pub fn markov_conjugate(beta: &BraidWord, alpha: &BraidWord) -> Result<BraidWord> {
    Ok(alpha.inverse().concat(beta)?.concat(alpha)?.free_reduced())
}

/// `β σ_n^{±1}` in `B_{n+1}`.
pub fn markov_stabilize(beta: &BraidWord, positive: bool) -> BraidWord {
    let n = beta.strands;
    let mut word = beta.word.clone();
    word.push(if positive { Letter::pos(n - 1) } else { Letter::neg(n - 1) });
    BraidWord { strands: n + 1, word }
}

fn braid_structures() -> &'static Mutex<HashMap<usize, Arc<GarsideStructure>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GarsideStructure>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The positive braid monoid on `n` strands with its Garside structure, built once per `n`.
pub fn braid_structure(n: usize) -> Result<Arc<GarsideStructure>> {
    if let Some(s) = braid_structures().lock().map_err(|_| poisoned())?.get(&n) {
        return Ok(Arc::clone(s));
    }
    let s = Arc::new(GarsideStructure::braid(n, BRAID_PREFIX)?);
    let mut cache = braid_structures().lock().map_err(|_| poisoned())?;
    Ok(Arc::clone(cache.entry(n).or_insert(s)))
}

fn poisoned() -> Error {
    Error::Io("braid structure cache poisoned".into())
}

/// Whether `β = 1` in `B_n`, by the fraction normal form.
pub fn braid_is_trivial(beta: &BraidWord) -> Result<bool> {
    if beta.strands < 2 {
        return Ok(true);
    }
    braid_structure(beta.strands)?.is_trivial(&beta.word)
}

/// Whether two braid words are equal in `B_n`.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    braid_is_trivial(&a.inverse().concat(b)?)
}

/// The Artin-type representation `ρ: B_n → Aut(H_1 ∗ … ∗ H_n)` of `(H, h)`.
#[derive(Clone, Debug)]
pub struct ArtinRepresentation {
    group: FreeProduct,
    h: SignedWord,
    h_inv: SignedWord,
}

impl ArtinRepresentation {
    pub fn new(base: Arc<dyn BaseGroup>, h: &DistinguishedElement, strands: usize) -> Result<Self> {
        let h_word = base.normal_form(h.word())?;
        let h_inv = base.normal_form(&h_word.inverse())?;
        let group = FreeProduct::new(base, strands)?;
        Ok(ArtinRepresentation { group, h: h_word, h_inv })
    }

    /// `h` given as a word over the base alphabet.
    pub fn from_word(base: Arc<dyn BaseGroup>, h: &SignedWord, strands: usize) -> Result<Self> {
        let d = DistinguishedElement::new(base.as_ref(), h)?;
        Self::new(base, &d, strands)
    }

    pub fn group(&self) -> &FreeProduct {
        &self.group
    }

    pub fn strands(&self) -> usize {
        self.group.rank()
    }

    pub fn base(&self) -> &Arc<dyn BaseGroup> {
        self.group.base()
    }

    /// Base normal form of `h`.
    pub fn h_word(&self) -> &SignedWord {
        &self.h
    }

    /// `h_i = φ_i(h)`.
    pub fn h_element(&self, i: usize) -> Result<FreeProductElement> {
        self.group.inject(i, &self.h)
    }

    fn conjugated(&self, left: &SignedWord, y: &SignedWord, right: &SignedWord) -> Result<SignedWord> {
        self.group.base().normal_form(&left.concat(y).concat(right))
    }

    /// `τ_k(g)` for `positive`, otherwise `τ_k^{-1}(g)`.
    pub fn apply_generator(&self, k: usize, positive: bool, g: &FreeProductElement) -> Result<FreeProductElement> {
        let n = self.strands();
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange { index: k, max: n.saturating_sub(1) });
        }
        if g.rank() != n {
            return Err(Error::Mismatch(format!("element of rank {} acted on by B_{n}", g.rank())));
        }
        let mut stack: Vec<Syllable> = Vec::with_capacity(g.len() + 4);
        let (h, hi) = (&self.h, &self.h_inv);
        for s in g.syllables() {
            let y = &s.word;
            match (s.factor == k, s.factor == k + 1, positive) {
                (true, _, true) => {
                    self.group.push_syllable(&mut stack, k, hi)?;
                    self.group.push_syllable(&mut stack, k + 1, y)?;
                    self.group.push_syllable(&mut stack, k, h)?;
                }
                (_, true, true) => {
                    let w = self.conjugated(h, y, hi)?;
                    self.group.push_syllable(&mut stack, k, &w)?;
                }
                (true, _, false) => {
                    let w = self.conjugated(hi, y, h)?;
                    self.group.push_syllable(&mut stack, k + 1, &w)?;
                }
                (_, true, false) => {
                    self.group.push_syllable(&mut stack, k + 1, h)?;
                    self.group.push_syllable(&mut stack, k, y)?;
                    self.group.push_syllable(&mut stack, k + 1, hi)?;
                }
                _ => self.group.push_syllable(&mut stack, s.factor, y)?,
            }
        }
        Ok(self.group.element_of_stack(stack))
    }

    /// `ρ(β)(g)`, applying the rightmost letter first.
    pub fn apply_braid(&self, beta: &BraidWord, g: &FreeProductElement) -> Result<FreeProductElement> {
        if beta.strands() != self.strands() {
            return Err(Error::Mismatch(format!(
                "braid on {} strands acting on a free product of rank {}",
                beta.strands(),
                self.strands()
            )));
        }
        let mut acc = g.clone();
        for l in beta.letters().iter().rev() {
            acc = self.apply_generator(l.generator + 1, !l.inverted, &acc)?;
        }
        Ok(acc)
    }

    /// `ρ(β)` on every generator `φ_i(x)`.
    pub fn images(&self, beta: &BraidWord) -> Result<Vec<FreeProductElement>> {
        self.group.generators()?.iter().map(|g| self.apply_braid(beta, g)).collect()
    }

    /// Whether `ρ(β)` fixes every generator.
    pub fn acts_trivially(&self, beta: &BraidWord) -> Result<bool> {
        for g in self.group.generators()? {
            if self.apply_braid(beta, &g)? != g {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the normal form relative to `H_1 ∗ (H_2 ∗ … ∗ H_n)` starts with
    /// `h_1^{-1}` and ends with `h_1`.
    pub fn has_boundary_shape(&self, u: &FreeProductElement) -> bool {
        match u.boundary_syllables() {
            (Some(first), Some(last)) => {
                u.len() >= 2 && first.factor == 1 && first.word == self.h_inv && last.factor == 1 && last.word == self.h
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeprod::{CyclicGroup, IntegerGroup};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn a1() -> SignedWord {
        SignedWord(vec![Letter::pos(0)])
    }

    fn rep(base: Arc<dyn BaseGroup>, n: usize) -> ArtinRepresentation {
        ArtinRepresentation::from_word(base, &a1(), n).unwrap()
    }

    fn z(n: usize) -> ArtinRepresentation {
        rep(Arc::new(IntegerGroup::new()), n)
    }

    fn zk(k: u64, n: usize) -> ArtinRepresentation {
        rep(Arc::new(CyclicGroup::new(k).unwrap()), n)
    }

    fn b(n: usize, idx: &[i64]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    fn random_element(r: &ArtinRepresentation, rng: &mut ChaCha8Rng, len: usize) -> FreeProductElement {
        let g = r.group();
        let gens = g.generators().unwrap();
        let mut acc = g.identity();
        for _ in 0..len {
            let x = &gens[rng.gen_range(0..gens.len())];
            let x = if rng.gen_bool(0.5) { x.clone() } else { g.inverse(x).unwrap() };
            acc = g.multiply(&acc, &x).unwrap();
        }
        acc
    }

    #[test]
    fn fixes_other_factors() {
        let r = z(4);
        let g = r.group();
        let x3 = g.inject(3, &a1()).unwrap();
        let x4 = g.inject(4, &a1()).unwrap();
        assert_eq!(r.apply_generator(1, true, &x3).unwrap(), x3);
        assert_eq!(r.apply_generator(1, false, &x4).unwrap(), x4);
    }

    #[test]
    fn sigma1_on_h1() {
        let r = z(2);
        let g = r.group();
        let (h1, h2) = (r.h_element(1).unwrap(), r.h_element(2).unwrap());
        let expected = g.product([&g.inverse(&h1).unwrap(), &h2, &h1]).unwrap();
        assert_eq!(r.apply_generator(1, true, &h1).unwrap(), expected);
        assert_eq!(g.format_element(&expected), "a_1^-1 a_2 a_1");
    }

    #[test]
    fn sigma1_squared_closed_form() {
        let r = z(2);
        let g = r.group();
        let (h1, h2) = (r.h_element(1).unwrap(), r.h_element(2).unwrap());
        let h21 = g.multiply(&h2, &h1).unwrap();
        let expected = g.product([&g.inverse(&h21).unwrap(), &h1, &h21]).unwrap();
        assert_eq!(r.apply_braid(&b(2, &[1, 1]), &h1).unwrap(), expected);
        assert_eq!(r.apply_braid(&BraidWord::identity(2).unwrap(), &h1).unwrap(), h1);
    }

    #[test]
    fn closed_forms_up_to_ten() {
        for r in [z(2), zk(3, 2)] {
            let g = r.group();
            let (h1, h2) = (r.h_element(1).unwrap(), r.h_element(2).unwrap());
            let h21 = g.multiply(&h2, &h1).unwrap();
            let odd_core = g.product([&g.inverse(&h1).unwrap(), &h2, &h1]).unwrap();
            for l in 1..=10i64 {
                let c = g.power(&h21, l).unwrap();
                let ci = g.inverse(&c).unwrap();
                let even = r.apply_braid(&b(2, &[1]).pow(2 * l), &h1).unwrap();
                assert_eq!(even, g.product([&ci, &h1, &c]).unwrap());
                let odd = r.apply_braid(&b(2, &[1]).pow(2 * l + 1), &h1).unwrap();
                assert_eq!(odd, g.product([&ci, &odd_core, &c]).unwrap());
            }
        }
    }

    #[test]
    fn braid_relations_on_generators() {
        for n in 2..=5 {
            for r in [z(n), zk(2, n), zk(5, n)] {
                for g in r.group().generators().unwrap() {
                    for k in 1..n {
                        for l in 1..n {
                            let kl = [k as i64, l as i64];
                            if k + 1 == l {
                                let lhs = r.apply_braid(&b(n, &[kl[0], kl[1], kl[0]]), &g).unwrap();
                                let rhs = r.apply_braid(&b(n, &[kl[1], kl[0], kl[1]]), &g).unwrap();
                                assert_eq!(lhs, rhs);
                            } else if k + 1 < l {
                                let lhs = r.apply_braid(&b(n, &kl), &g).unwrap();
                                let rhs = r.apply_braid(&b(n, &[kl[1], kl[0]]), &g).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_contract_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for r in [z(4), zk(2, 4), zk(5, 3)] {
            let n = r.strands();
            for _ in 0..100 {
                let g = random_element(&r, &mut rng, 8);
                let k = rng.gen_range(1..n);
                let there = r.apply_generator(k, true, &g).unwrap();
                assert_eq!(r.apply_generator(k, false, &there).unwrap(), g);
                let back = r.apply_generator(k, false, &g).unwrap();
                assert_eq!(r.apply_generator(k, true, &back).unwrap(), g);
            }
        }
    }

    #[test]
    fn homomorphism_order() {
        // ρ(σ1σ2)(h_1) = τ_1(τ_2(h_1)) = τ_1(h_1)
        let r = z(3);
        let h1 = r.h_element(1).unwrap();
        assert_eq!(r.apply_braid(&b(3, &[1, 2]), &h1).unwrap(), r.apply_generator(1, true, &h1).unwrap());
        assert_ne!(r.apply_braid(&b(3, &[2, 1]), &h1).unwrap(), r.apply_generator(1, true, &h1).unwrap());
    }

    #[test]
    fn errors() {
        let r = z(3);
        let h1 = r.h_element(1).unwrap();
        assert!(matches!(r.apply_generator(3, true, &h1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(r.apply_braid(&b(2, &[1]), &h1), Err(Error::Mismatch(_))));
        assert!(BraidWord::from_indices(3, &[3]).is_err());
        assert!(BraidWord::parse(3, "s1 s3").is_err());
    }

    #[test]
    fn triviality_examples() {
        assert!(braid_is_trivial(&BraidWord::parse(3, "s1 s2 s1 s2^-1 s1^-1 s2^-1").unwrap()).unwrap());
        assert!(!braid_is_trivial(&BraidWord::parse(3, "s1").unwrap()).unwrap());
        assert!(!braid_is_trivial(&BraidWord::parse(3, "s1 s2 s1^-1 s2^-1").unwrap()).unwrap());
        assert!(braid_is_trivial(&BraidWord::parse(4, "s1 s3 s1^-1 s3^-1").unwrap()).unwrap());
        assert!(braid_is_trivial(&BraidWord::identity(1).unwrap()).unwrap());
    }

    #[test]
    fn markov_moves() {
        let s1 = BraidWord::parse(3, "s1").unwrap();
        assert_eq!(markov_conjugate(&s1, &BraidWord::identity(3).unwrap()).unwrap(), s1);
        assert_eq!(
            markov_conjugate(&s1, &BraidWord::parse(3, "s2").unwrap()).unwrap(),
            BraidWord::parse(3, "s2^-1 s1 s2").unwrap()
        );
        let cube = BraidWord::parse(3, "s1^3").unwrap();
        assert_eq!(markov_conjugate(&cube, &s1).unwrap(), cube);
        let b2 = BraidWord::parse(2, "s1").unwrap();
        assert_eq!(markov_stabilize(&b2, true), BraidWord::parse(3, "s1 s2").unwrap());
        assert_eq!(markov_stabilize(&b2, false), BraidWord::parse(3, "s1 s2^-1").unwrap());
        assert_eq!(markov_stabilize(&BraidWord::identity(1).unwrap(), true), BraidWord::parse(2, "s1").unwrap());
        assert!(markov_conjugate(&b2, &s1).is_err());
    }

    #[test]
    fn permutation_cycles() {
        assert_eq!(BraidWord::identity(4).unwrap().closure_components(), 4);
        assert_eq!(BraidWord::parse(2, "s1^3").unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse(3, "s1 s2").unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse(3, "s1^2 s2^-2").unwrap().closure_components(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn action_respects_free_group_product(
            idx in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..6),
            seed in any::<u64>(),
        ) {
            let r = zk(3, 4);
            let g = r.group();
            let beta = b(4, &idx);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_element(&r, &mut rng, 5);
            let y = random_element(&r, &mut rng, 5);
            let lhs = r.apply_braid(&beta, &g.multiply(&x, &y).unwrap()).unwrap();
            let rhs = g.multiply(&r.apply_braid(&beta, &x).unwrap(), &r.apply_braid(&beta, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_braid_undoes_action(idx in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..8)) {
            let r = z(4);
            let beta = b(4, &idx);
            for gen in r.group().generators().unwrap() {
                let there = r.apply_braid(&beta, &gen).unwrap();
                prop_assert_eq!(r.apply_braid(&beta.inverse(), &there).unwrap(), gen);
            }
        }
    }
}
