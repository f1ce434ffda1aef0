use crate::error::{Error, Result};
use crate::words::{Alphabet, PositiveWord, SignedWord};

use super::certificate::{verify_garside, GarsideCertificate};
use super::monoid::ComplementedMonoid;
use super::presentation::MonoidPresentation;
use super::reversing::{ReversalOutcome, Side};

/// Greedy factors of a monoid element: each is a nonempty divisor of `Δ`
/// in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GreedyForm {
    pub factors: Vec<PositiveWord>,
}

impl GreedyForm {
    pub fn word(&self) -> PositiveWord {
        PositiveWord(self.factors.iter().flat_map(|f| f.letters().iter().copied()).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// `a^{-1} b` with `a ∧_L b = 1`, both parts greedy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FractionForm {
    pub denominator: GreedyForm,
    pub numerator: GreedyForm,
}

impl FractionForm {
    pub fn to_signed(&self) -> SignedWord {
        self.denominator.word().inverse().concat(&self.numerator.word().to_signed())
    }

    pub fn is_identity(&self) -> bool {
        self.denominator.is_empty() && self.numerator.is_empty()
    }
}

/// A monoid with a verified Garside element.
#[derive(Clone, Debug)]
pub struct GarsideStructure {
    monoid: ComplementedMonoid,
    certificate: GarsideCertificate,
}

impl GarsideStructure {
    /// Fails with [`Error::NotGarside`] naming the first failed condition.
    pub fn new(monoid: ComplementedMonoid, delta: PositiveWord) -> Result<Self> {
        let certificate = verify_garside(&monoid, &delta)?;
        if let Some(c) = certificate.first_failure() {
            return Err(Error::NotGarside(format!("{}: {}", c.condition.label(), c.detail)));
        }
        Ok(GarsideStructure { monoid, certificate })
    }

    /// Complements derived from the relations.
    pub fn from_presentation(presentation: MonoidPresentation, delta: PositiveWord) -> Result<Self> {
        Self::new(ComplementedMonoid::derived(presentation)?, delta)
    }

    /// Positive braid monoid on `n` strands with `s_i` named `{prefix}{i}`.
    pub fn braid(n: usize, prefix: &str) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexOutOfRange { index: n, max: 2 });
        }
        let alphabet = Alphabet::numbered(prefix, n - 1)?;
        let mut relations = Vec::new();
        for i in 0..n - 1 {
            for j in i + 1..n - 1 {
                if j == i + 1 {
                    relations.push((PositiveWord(vec![i, j, i]), PositiveWord(vec![j, i, j])));
                } else {
                    relations.push((PositiveWord(vec![i, j]), PositiveWord(vec![j, i])));
                }
            }
        }
        // (s1 … s_{n-1})(s1 … s_{n-2}) … (s1)
        let delta = PositiveWord((1..n).flat_map(|k| 0..n - k).collect());
        Self::from_presentation(MonoidPresentation::unit_weights(alphabet, relations)?, delta)
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.monoid = self.monoid.with_cap(cap);
        self
    }

    pub fn monoid(&self) -> &ComplementedMonoid {
        &self.monoid
    }

    pub fn presentation(&self) -> &MonoidPresentation {
        self.monoid.presentation()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.monoid.alphabet()
    }

    pub fn certificate(&self) -> &GarsideCertificate {
        &self.certificate
    }

    pub fn delta(&self) -> &PositiveWord {
        &self.certificate.delta
    }

    /// Canonical word of a divisor of `Δ`, if `w` is one.
    pub fn divisor_canonical(&self, w: &PositiveWord) -> Option<&PositiveWord> {
        self.certificate.left_divisors.canonical_of(w)
    }

    fn canonical_divisor(&self, w: &PositiveWord) -> Result<PositiveWord> {
        match self.divisor_canonical(w) {
            Some(c) => Ok(c.clone()),
            None => Err(Error::NotGarside("head is not a divisor of delta".into())),
        }
    }

    pub fn left_divides(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        self.monoid.left_divides(u, v)
    }

    pub fn join_left(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        self.monoid.join_left(u, v)
    }

    pub fn meet_left(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        self.monoid.meet_left(u, v)
    }

    pub fn join_right(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        self.monoid.join_right(u, v)
    }

    pub fn meet_right(&self, u: &PositiveWord, v: &PositiveWord) -> Result<PositiveWord> {
        self.monoid.meet_right(u, v)
    }

    /// Monoid equality.
    pub fn equivalent(&self, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
        self.monoid.equivalent_by_reversing(u, v)
    }

    /// `w = π(w)·π(∂w)·…` with `π(a) = Δ ∧_L a`.
    pub fn greedy_normal_form(&self, w: &PositiveWord) -> Result<GreedyForm> {
        let delta = self.delta();
        let mut rest = w.clone();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            let head = self.monoid.meet_left(delta, &rest)?;
            if head.is_empty() {
                return Err(Error::NotGarside("delta and a nonempty element have trivial meet".into()));
            }
            rest = self
                .monoid
                .left_quotient(&head, &rest)?
                .ok_or_else(|| Error::NotGarside("meet does not divide its argument".into()))?;
            factors.push(self.canonical_divisor(&head)?);
        }
        Ok(GreedyForm { factors })
    }

    /// Canonical form of a positive word: its greedy factors concatenated.
    pub fn monoid_normal_form(&self, w: &PositiveWord) -> Result<PositiveWord> {
        Ok(self.greedy_normal_form(w)?.word())
    }

    /// Right-reverse to `u^{-1}v`, cancel `u ∧_L v`, normalise both parts.
    pub fn group_normal_form(&self, w: &SignedWord) -> Result<FractionForm> {
        let (u, v) = match self.monoid.reverse(w, Side::Right) {
            ReversalOutcome::Converged { u, v, .. } => (u, v),
            ReversalOutcome::Blocked { .. } => return Err(Error::NoCommonMultiple),
            ReversalOutcome::Diverged { cap } => return Err(Error::Diverged { cap }),
        };
        let d = self.monoid.meet_left(&u, &v)?;
        let missing = || Error::NotGarside("meet does not divide its argument".into());
        let a = self.monoid.left_quotient(&d, &u)?.ok_or_else(missing)?;
        let b = self.monoid.left_quotient(&d, &v)?.ok_or_else(missing)?;
        Ok(FractionForm { denominator: self.greedy_normal_form(&a)?, numerator: self.greedy_normal_form(&b)? })
    }

    pub fn group_equal(&self, w1: &SignedWord, w2: &SignedWord) -> Result<bool> {
        Ok(self.group_normal_form(w1)? == self.group_normal_form(w2)?)
    }

    pub fn is_trivial(&self, w: &SignedWord) -> Result<bool> {
        Ok(self.group_normal_form(w)?.is_identity())
    }

    /// `τ` extended letterwise; every letter must be an atom.
    pub fn apply_tau(&self, w: &PositiveWord) -> Result<PositiveWord> {
        w.letters()
            .iter()
            .map(|&x| {
                self.certificate.tau.get(x).copied().flatten().ok_or_else(|| {
                    Error::Mismatch(format!("tau undefined on `{}`", self.alphabet().name(x)))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(PositiveWord)
    }
}
