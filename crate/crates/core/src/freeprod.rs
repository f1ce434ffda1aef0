//! Free products `H_1 ∗ … ∗ H_n` of copies of a base group with a solvable
//! word problem.
//!
//! Elements are stored in normal form: alternating syllables, each holding
//! the canonical base-group normal form of a nontrivial element. Equality is
//! therefore syntactic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::garside::{ComplementedMonoid, GarsideStructure, MonoidPresentation};
use crate::words::{free_reduce, Alphabet, Letter, SignedWord};

/// A group with a canonical-form procedure for signed words.
///
/// Implementations must satisfy `word_problem(u, v) == (normal_form(u) ==
/// normal_form(v))` and `normal_form(ε) = ε`.
pub trait BaseGroup: fmt::Debug + Send + Sync {
    fn alphabet(&self) -> &Alphabet;

    fn normal_form(&self, word: &SignedWord) -> Result<SignedWord>;

    /// Defining relators of a group presentation.
    fn relators(&self) -> Vec<SignedWord>;

    /// Short label used in reports, e.g. `Z` or `Z/3`.
    fn label(&self) -> String;

    fn word_problem(&self, u: &SignedWord, v: &SignedWord) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    fn is_trivial(&self, word: &SignedWord) -> Result<bool> {
        Ok(self.normal_form(word)?.is_empty())
    }

    /// `Some(k)` when the group is known to be finite cyclic of order `k`.
    fn torsion_order(&self) -> Option<u64> {
        None
    }

    /// A complemented positive monoid whose group of fractions is this
    /// group, when one is known.
    fn garside_monoid(&self) -> Option<ComplementedMonoid> {
        None
    }
}

/// The infinite cyclic group `⟨a⟩`; normal form `a^k`.
#[derive(Debug, Clone)]
pub struct IntegerGroup {
    alphabet: Alphabet,
}

impl IntegerGroup {
    pub fn new() -> Self {
        IntegerGroup { alphabet: Alphabet::new(["a"]).expect("static alphabet") }
    }
}

impl Default for IntegerGroup {
    fn default() -> Self {
        Self::new()
    }
}

impl BaseGroup for IntegerGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn normal_form(&self, word: &SignedWord) -> Result<SignedWord> {
        check_letters(word, 1)?;
        Ok(SignedWord::power_of(0, word.exponent_sum(0)))
    }

    fn relators(&self) -> Vec<SignedWord> {
        Vec::new()
    }

    fn label(&self) -> String {
        "Z".into()
    }

    fn garside_monoid(&self) -> Option<ComplementedMonoid> {
        let p = MonoidPresentation::unit_weights(self.alphabet.clone(), Vec::new()).ok()?;
        ComplementedMonoid::derived(p).ok()
    }
}

/// `ℤ/kℤ = ⟨a | a^k⟩`; normal form `a^r` with `0 ≤ r < k`.
#[derive(Debug, Clone)]
pub struct CyclicGroup {
    order: u64,
    alphabet: Alphabet,
}

impl CyclicGroup {
    pub fn new(order: u64) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidAlphabet(format!("cyclic group order must be ≥ 2, got {order}")));
        }
        Ok(CyclicGroup { order, alphabet: Alphabet::new(["a"]).expect("static alphabet") })
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

impl BaseGroup for CyclicGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn normal_form(&self, word: &SignedWord) -> Result<SignedWord> {
        check_letters(word, 1)?;
        let r = word.exponent_sum(0).rem_euclid(self.order as i64);
        Ok(SignedWord::power_of(0, r))
    }

    fn relators(&self) -> Vec<SignedWord> {
        vec![SignedWord::power_of(0, self.order as i64)]
    }

    fn label(&self) -> String {
        format!("Z/{}", self.order)
    }

    fn torsion_order(&self) -> Option<u64> {
        Some(self.order)
    }
}

/// The group of fractions of a verified Garside monoid, with the fraction
/// normal form `a^{-1} b` as canonical form.
#[derive(Debug, Clone)]
pub struct GarsideGroup {
    structure: Arc<GarsideStructure>,
    label: String,
}

impl GarsideGroup {
    pub fn new(structure: Arc<GarsideStructure>, label: impl Into<String>) -> Self {
        GarsideGroup { structure, label: label.into() }
    }

    pub fn structure(&self) -> &Arc<GarsideStructure> {
        &self.structure
    }
}

impl BaseGroup for GarsideGroup {
    fn alphabet(&self) -> &Alphabet {
        self.structure.alphabet()
    }

    fn normal_form(&self, word: &SignedWord) -> Result<SignedWord> {
        check_letters(word, self.alphabet().len())?;
        Ok(self.structure.group_normal_form(word)?.to_signed())
    }

    fn relators(&self) -> Vec<SignedWord> {
        self.structure
            .presentation()
            .relations()
            .iter()
            .map(|(l, r)| free_reduce(&l.to_signed().concat(&r.inverse())))
            .collect()
    }

    fn label(&self) -> String {
        self.label.clone()
    }

    fn garside_monoid(&self) -> Option<ComplementedMonoid> {
        Some(self.structure.monoid().clone())
    }
}

fn check_letters(word: &SignedWord, size: usize) -> Result<()> {
    match word.max_index() {
        Some(m) if m >= size => Err(Error::IndexOutOfRange { index: m + 1, max: size }),
        _ => Ok(()),
    }
}

/// A nontrivial element `h` of the base group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedElement {
    word: SignedWord,
    order_hint: Option<u64>,
}

impl DistinguishedElement {
    pub fn new(base: &dyn BaseGroup, word: &SignedWord) -> Result<Self> {
        let nf = base.normal_form(word)?;
        if nf.is_empty() {
            return Err(Error::TrivialDistinguished);
        }
        Ok(DistinguishedElement { word: nf, order_hint: None })
    }

    pub fn with_order_hint(mut self, order: u64) -> Self {
        self.order_hint = Some(order);
        self
    }

    /// Base-group normal form of `h`.
    pub fn word(&self) -> &SignedWord {
        &self.word
    }

    pub fn order_hint(&self) -> Option<u64> {
        self.order_hint
    }
}

/// One syllable `φ_factor(word)` with `word` a nontrivial base normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: usize,
    pub word: SignedWord,
}

/// Normal form of an element of the free product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeProductElement {
    rank: usize,
    syllables: Vec<Syllable>,
}

impl FreeProductElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// First and last syllables of the normal form.
    pub fn boundary_syllables(&self) -> (Option<&Syllable>, Option<&Syllable>) {
        (self.syllables.first(), self.syllables.last())
    }
}

/// The ambient group `G = H_1 ∗ … ∗ H_n`.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    base: Arc<dyn BaseGroup>,
    rank: usize,
    copies: Alphabet,
}

impl FreeProduct {
    pub fn new(base: Arc<dyn BaseGroup>, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let copies = copies_alphabet(base.alphabet(), rank)?;
        Ok(FreeProduct { base, rank, copies })
    }

    pub fn base(&self) -> &Arc<dyn BaseGroup> {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Alphabet of generator copies `x_i`, in factor-major order.
    pub fn copies_alphabet(&self) -> &Alphabet {
        &self.copies
    }

    pub fn identity(&self) -> FreeProductElement {
        FreeProductElement { rank: self.rank, syllables: Vec::new() }
    }

    fn check_factor(&self, factor: usize) -> Result<()> {
        if factor == 0 || factor > self.rank {
            Err(Error::IndexOutOfRange { index: factor, max: self.rank })
        } else {
            Ok(())
        }
    }

    fn check_element(&self, g: &FreeProductElement) -> Result<()> {
        if g.rank != self.rank {
            return Err(Error::Mismatch(format!(
                "element of rank {} used in free product of rank {}",
                g.rank, self.rank
            )));
        }
        Ok(())
    }

    /// `φ_factor(w)` in normal form.
    pub fn inject(&self, factor: usize, word: &SignedWord) -> Result<FreeProductElement> {
        self.check_factor(factor)?;
        let nf = self.base.normal_form(word)?;
        let syllables = if nf.is_empty() { Vec::new() } else { vec![Syllable { factor, word: nf }] };
        Ok(FreeProductElement { rank: self.rank, syllables })
    }

    /// Append `φ_factor(word)` to a normal-form syllable stack, merging with
    /// the last syllable when the factors agree.
    pub(crate) fn push_syllable(&self, stack: &mut Vec<Syllable>, factor: usize, word: &SignedWord) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        match stack.last_mut() {
            Some(last) if last.factor == factor => {
                let merged = self.base.normal_form(&last.word.concat(word))?;
                if merged.is_empty() {
                    stack.pop();
                } else {
                    last.word = merged;
                }
            }
            _ => stack.push(Syllable { factor, word: word.clone() }),
        }
        Ok(())
    }

    pub(crate) fn element_of_stack(&self, syllables: Vec<Syllable>) -> FreeProductElement {
        FreeProductElement { rank: self.rank, syllables }
    }

    pub fn multiply(&self, g1: &FreeProductElement, g2: &FreeProductElement) -> Result<FreeProductElement> {
        self.check_element(g1)?;
        self.check_element(g2)?;
        let mut stack = g1.syllables.clone();
        for s in &g2.syllables {
            self.push_syllable(&mut stack, s.factor, &s.word)?;
        }
        Ok(self.element_of_stack(stack))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a, I>(&self, factors: I) -> Result<FreeProductElement>
    where
        I: IntoIterator<Item = &'a FreeProductElement>,
    {
        let mut acc = self.identity();
        for g in factors {
            acc = self.multiply(&acc, g)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self, g: &FreeProductElement) -> Result<FreeProductElement> {
        self.check_element(g)?;
        let mut syllables = Vec::with_capacity(g.syllables.len());
        for s in g.syllables.iter().rev() {
            syllables.push(Syllable { factor: s.factor, word: self.base.normal_form(&s.word.inverse())? });
        }
        Ok(self.element_of_stack(syllables))
    }

    pub fn power(&self, g: &FreeProductElement, k: i64) -> Result<FreeProductElement> {
        let base = if k < 0 { self.inverse(g)? } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    pub fn equals(&self, g1: &FreeProductElement, g2: &FreeProductElement) -> Result<bool> {
        self.check_element(g1)?;
        self.check_element(g2)?;
        Ok(g1 == g2)
    }

    /// Generators `φ_i(x)` for every factor `i` and base generator `x`.
    pub fn generators(&self) -> Result<Vec<FreeProductElement>> {
        let mut out = Vec::new();
        for i in 1..=self.rank {
            for x in 0..self.base.alphabet().len() {
                out.push(self.inject(i, &SignedWord(vec![Letter::pos(x)]))?);
            }
        }
        Ok(out)
    }

    /// Index of `φ_factor(x)` in [`copies_alphabet`](Self::copies_alphabet).
    pub fn copy_index(&self, factor: usize, generator: usize) -> usize {
        (factor - 1) * self.base.alphabet().len() + generator
    }

    /// Signed word over the copies alphabet spelling the normal form.
    pub fn to_word(&self, g: &FreeProductElement) -> SignedWord {
        let mut out = SignedWord::empty();
        for s in &g.syllables {
            for l in s.word.letters() {
                out.push(Letter { generator: self.copy_index(s.factor, l.generator), inverted: l.inverted });
            }
        }
        out
    }

    /// Evaluate a signed word over the copies alphabet.
    pub fn from_word(&self, word: &SignedWord) -> Result<FreeProductElement> {
        let s = self.base.alphabet().len();
        let mut stack = Vec::new();
        for l in word.letters() {
            if l.generator >= s * self.rank {
                return Err(Error::IndexOutOfRange { index: l.generator + 1, max: s * self.rank });
            }
            let factor = l.generator / s + 1;
            let letter = SignedWord(vec![Letter { generator: l.generator % s, inverted: l.inverted }]);
            let nf = self.base.normal_form(&letter)?;
            self.push_syllable(&mut stack, factor, &nf)?;
        }
        Ok(self.element_of_stack(stack))
    }

    pub fn parse_element(&self, text: &str) -> Result<FreeProductElement> {
        let w = self.copies.parse_signed(text)?;
        self.from_word(&w)
    }

    pub fn format_element(&self, g: &FreeProductElement) -> String {
        self.copies.display_signed(&self.to_word(g))
    }
}

/// `{name}_{i}` for every factor `i` and base generator name.
pub fn copies_alphabet(base: &Alphabet, rank: usize) -> Result<Alphabet> {
    Alphabet::new((1..=rank).flat_map(|i| base.names().iter().map(move |n| format!("{n}_{i}"))))
}
