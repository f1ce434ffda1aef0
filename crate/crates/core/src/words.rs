//! Alphabets, positive and signed words, free reduction and the shared
//! text syntax.
//!
//! Words are index sequences into an [`Alphabet`]; the alphabet is only
//! consulted when parsing or printing. The text grammar is a sequence of
//! whitespace separated tokens `name` or `name^k` with `k` a nonzero decimal
//! integer, expanded eagerly into `|k|` letters.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Characters that may not appear in generator names.
pub const RESERVED: &[char] = &['^', '-', '(', ')', ',', ';', '#', '=', ':'];

/// An ordered finite set of generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet { names: Vec::new(), lookup: HashMap::new() };
        for name in names {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty generator name".into()));
            }
            if name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
                return Err(Error::InvalidAlphabet(format!("illegal character in `{name}`")));
            }
            if out.lookup.contains_key(&name) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
            out.lookup.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        Ok(out)
    }

    /// `prefix1 … prefix{count}`.
    pub fn numbered(prefix: &str, count: usize) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    fn parse_tokens(&self, text: &str) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, exp)) => {
                    let k: i64 =
                        exp.parse().map_err(|_| Error::MalformedExponent(token.to_string()))?;
                    if k == 0 || exp.starts_with('+') {
                        return Err(Error::MalformedExponent(token.to_string()));
                    }
                    (name, k)
                }
            };
            let index =
                self.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            out.push((index, exp));
        }
        Ok(out)
    }

    pub fn parse_signed(&self, text: &str) -> Result<SignedWord> {
        let mut letters = Vec::new();
        for (index, exp) in self.parse_tokens(text)? {
            let letter = if exp > 0 { Letter::pos(index) } else { Letter::neg(index) };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(SignedWord(letters))
    }

    pub fn parse_positive(&self, text: &str) -> Result<PositiveWord> {
        let mut letters = Vec::new();
        for (index, exp) in self.parse_tokens(text)? {
            if exp < 0 {
                return Err(Error::NegativeExponent(text.to_string()));
            }
            letters.extend(std::iter::repeat_n(index, exp as usize));
        }
        Ok(PositiveWord(letters))
    }

    /// Serializes with run-length compression; the empty word prints as "".
    pub fn format_signed(&self, word: &SignedWord) -> String {
        let mut parts = Vec::new();
        let letters = word.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let run = (j - i) as i64;
            let name = self.name(letters[i].generator);
            let exp = if letters[i].inverted { -run } else { run };
            parts.push(if exp == 1 { name.to_string() } else { format!("{name}^{exp}") });
            i = j;
        }
        parts.join(" ")
    }

    pub fn format_positive(&self, word: &PositiveWord) -> String {
        self.format_signed(&word.to_signed())
    }

    /// Like [`format_positive`](Self::format_positive) but prints `ε` for the empty word.
    pub fn display_positive(&self, word: &PositiveWord) -> String {
        if word.is_empty() {
            "ε".to_string()
        } else {
            self.format_positive(word)
        }
    }

    pub fn display_signed(&self, word: &SignedWord) -> String {
        if word.is_empty() {
            "ε".to_string()
        } else {
            self.format_signed(word)
        }
    }
}

/// A generator index together with an exponent sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverted: bool,
}

impl Letter {
    pub const fn pos(generator: usize) -> Self {
        Letter { generator, inverted: false }
    }

    pub const fn neg(generator: usize) -> Self {
        Letter { generator, inverted: true }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, inverted: !self.inverted }
    }

    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }
}

/// A word in the free monoid on an alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord(pub Vec<usize>);

impl PositiveWord {
    pub fn empty() -> Self {
        PositiveWord(Vec::new())
    }

    pub fn letter(generator: usize) -> Self {
        PositiveWord(vec![generator])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PositiveWord(v)
    }

    pub fn pow(&self, k: usize) -> PositiveWord {
        PositiveWord(self.0.repeat(k))
    }

    pub fn reversed(&self) -> PositiveWord {
        PositiveWord(self.0.iter().rev().copied().collect())
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord(self.0.iter().map(|&g| Letter::pos(g)).collect())
    }

    /// The inverse word `w^{-1}` as a signed word.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|&g| Letter::neg(g)).collect())
    }

    /// Shortlex order: length first, then lexicographic on indices.
    pub fn shortlex_cmp(&self, other: &PositiveWord) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }
}

impl From<Vec<usize>> for PositiveWord {
    fn from(v: Vec<usize>) -> Self {
        PositiveWord(v)
    }
}

/// A word over generators and their formal inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(pub Vec<Letter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `g^k` for a single generator; `k` may be negative.
    pub fn power_of(generator: usize, k: i64) -> Self {
        let letter = if k >= 0 { Letter::pos(generator) } else { Letter::neg(generator) };
        SignedWord(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend(&mut self, other: &SignedWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// Reverse the word and invert every letter.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> SignedWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        SignedWord(base.0.repeat(k.unsigned_abs() as usize))
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverted)
    }

    pub fn as_positive(&self) -> Option<PositiveWord> {
        self.is_positive().then(|| PositiveWord(self.0.iter().map(|l| l.generator).collect()))
    }

    /// Sum of exponents of `generator`.
    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.0.iter().filter(|l| l.generator == generator).map(|l| l.sign()).sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Replace every letter `x` by `image(x)` (and `x^{-1}` by its inverse),
    /// then freely reduce.
    pub fn substitute<F>(&self, mut image: F) -> SignedWord
    where
        F: FnMut(usize) -> SignedWord,
    {
        let mut out = Vec::new();
        for l in &self.0 {
            let w = image(l.generator);
            if l.inverted {
                out.extend(w.0.iter().rev().map(|x| x.inverse()));
            } else {
                out.extend_from_slice(&w.0);
            }
        }
        free_reduce(&SignedWord(out))
    }
}

impl From<&PositiveWord> for SignedWord {
    fn from(w: &PositiveWord) -> Self {
        w.to_signed()
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverted { format!("x{}^-1", l.generator) } else { format!("x{}", l.generator) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Iterated cancellation of adjacent `x x^{-1}` and `x^{-1} x`.
pub fn free_reduce(word: &SignedWord) -> SignedWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.letters() {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    SignedWord(stack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn cancels_adjacent_pair() {
        let a = xy();
        let w = a.parse_signed("x x^-1 y").unwrap();
        assert_eq!(free_reduce(&w), a.parse_signed("y").unwrap());
    }

    #[test]
    fn empty_is_fixed() {
        assert_eq!(free_reduce(&SignedWord::empty()), SignedWord::empty());
    }

    #[test]
    fn nested_cancellation() {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let w = a.parse_signed("s1 s2 s2^-1 s1^-1").unwrap();
        assert!(free_reduce(&w).is_empty());
    }

    #[test]
    fn parses_signed_tokens() {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let w = a.parse_signed("s1 s2^-1").unwrap();
        assert_eq!(w.letters(), &[Letter::pos(0), Letter::neg(1)]);
    }

    #[test]
    fn expands_exponents() {
        let a = Alphabet::new(["a"]).unwrap();
        assert_eq!(a.parse_positive("a^3").unwrap(), PositiveWord(vec![0, 0, 0]));
        assert_eq!(a.parse_positive("").unwrap(), PositiveWord::empty());
        assert!(a.parse_signed("   ").unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        let a = xy();
        assert_eq!(a.parse_signed("z"), Err(Error::UnknownGenerator("z".into())));
        assert!(matches!(a.parse_signed("x^0"), Err(Error::MalformedExponent(_))));
        assert!(matches!(a.parse_signed("x^"), Err(Error::MalformedExponent(_))));
        assert!(matches!(a.parse_signed("x^2a"), Err(Error::MalformedExponent(_))));
        assert!(matches!(a.parse_positive("x^-2"), Err(Error::NegativeExponent(_))));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(["a^"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert!(Alphabet::new(["s-1"]).is_err());
    }

    #[test]
    fn serializer_compresses_runs() {
        let a = xy();
        let w = a.parse_signed("x x x y^-1 y^-1 x").unwrap();
        assert_eq!(a.format_signed(&w), "x^3 y^-2 x");
        assert_eq!(a.format_signed(&SignedWord::empty()), "");
    }

    fn random_name(rng: &mut ChaCha8Rng) -> String {
        const CHARS: &[u8] = b"abcxyzABs0123_.";
        let len = rng.gen_range(1..5);
        (0..len).map(|_| CHARS[rng.gen_range(0..CHARS.len())] as char).collect()
    }

    #[test]
    fn round_trip_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let size = rng.gen_range(1..6);
            let mut names = Vec::new();
            while names.len() < size {
                let n = random_name(&mut rng);
                if !names.contains(&n) {
                    names.push(n);
                }
            }
            let alphabet = Alphabet::new(names).unwrap();
            let len = rng.gen_range(0..12);
            let w = SignedWord(
                (0..len)
                    .map(|_| Letter { generator: rng.gen_range(0..size), inverted: rng.gen_bool(0.5) })
                    .collect(),
            );
            let text = alphabet.format_signed(&w);
            assert_eq!(alphabet.parse_signed(&text).unwrap(), w, "text {text:?}");
            if let Some(p) = w.as_positive() {
                assert_eq!(alphabet.parse_positive(&alphabet.format_positive(&p)).unwrap(), p);
            }
        }
    }

    fn signed_word() -> impl Strategy<Value = SignedWord> {
        prop::collection::vec((0usize..3, any::<bool>()), 0..24)
            .prop_map(|v| SignedWord(v.into_iter().map(|(g, i)| Letter { generator: g, inverted: i }).collect()))
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent(w in signed_word()) {
            let once = free_reduce(&w);
            prop_assert_eq!(free_reduce(&once), once.clone());
            prop_assert!(once.letters().windows(2).all(|p| p[0] != p[1].inverse()));
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(w in signed_word()) {
            prop_assert!(free_reduce(&w.concat(&w.inverse())).is_empty());
        }
    }
}
