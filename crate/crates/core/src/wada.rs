//! Wada representations `B_n → Aut(F_n)` of types (1), (2) and (3), with
//! executable checks of the equivalences and non-equivalences between them.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braidrep::BraidWord;
use crate::error::{Error, Result};
use crate::linkinv::{abelianized_matrix, smith_normal_form, Fingerprint, GroupPresentation, IntegerMatrix};
use crate::words::{free_reduce, Alphabet, Letter, SignedWord};

/// Generator prefix of `F_n`.
pub const FREE_PREFIX: &str = "x";

pub fn free_alphabet(n: usize) -> Result<Alphabet> {
    Alphabet::numbered(FREE_PREFIX, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WadaKind {
    /// `x_k ↦ x_k^{-h} x_{k+1} x_k^h`, `x_{k+1} ↦ x_k`; `h ≠ 0`.
    Type1(i64),
    /// `x_k ↦ x_k x_{k+1}^{-1} x_k`, `x_{k+1} ↦ x_k`.
    Type2,
    /// `x_k ↦ x_k^2 x_{k+1}`, `x_{k+1} ↦ x_{k+1}^{-1} x_k^{-1} x_{k+1}`.
    Type3,
}

impl fmt::Display for WadaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WadaKind::Type1(h) => write!(f, "type1(h={h})"),
            WadaKind::Type2 => write!(f, "type2"),
            WadaKind::Type3 => write!(f, "type3"),
        }
    }
}

/// An endomorphism of `F_n` given by the images of `x_1, …, x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMorphism {
    images: Vec<SignedWord>,
}

impl FreeMorphism {
    pub fn identity(n: usize) -> Self {
        FreeMorphism { images: (0..n).map(|i| SignedWord(vec![Letter::pos(i)])).collect() }
    }

    /// Images are freely reduced; letters must lie in `0..images.len()`.
    pub fn new(images: Vec<SignedWord>) -> Result<Self> {
        let n = images.len();
        for w in &images {
            if let Some(m) = w.max_index() {
                if m >= n {
                    return Err(Error::IndexOutOfRange { index: m + 1, max: n });
                }
            }
        }
        Ok(FreeMorphism { images: images.iter().map(free_reduce).collect() })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[SignedWord] {
        &self.images
    }

    pub fn apply(&self, w: &SignedWord) -> SignedWord {
        w.substitute(|g| self.images[g].clone())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMorphism) -> FreeMorphism {
        FreeMorphism { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// Exponent-sum matrix; column `j` is `[φ(x_j)]`.
    pub fn abelianized(&self) -> IntegerMatrix {
        let n = self.rank();
        let mut m = IntegerMatrix::zeros(n, n);
        for (j, w) in self.images.iter().enumerate() {
            for i in 0..n {
                m.set(i, j, BigInt::from(w.exponent_sum(i)));
            }
        }
        m
    }
}

fn x(i: usize) -> SignedWord {
    SignedWord(vec![Letter::pos(i)])
}

fn xp(i: usize, e: i64) -> SignedWord {
    SignedWord::power_of(i, e)
}

fn cat(parts: &[SignedWord]) -> SignedWord {
    let mut out = SignedWord::empty();
    for p in parts {
        out.extend(p);
    }
    free_reduce(&out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WadaRep {
    kind: WadaKind,
    n: usize,
}

impl WadaRep {
    pub fn new(kind: WadaKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        if kind == WadaKind::Type1(0) {
            return Err(Error::TrivialDistinguished);
        }
        Ok(WadaRep { kind, n })
    }

    pub fn kind(&self) -> WadaKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `ρ(σ_k^{±1})` with `1 ≤ k ≤ n − 1`.
    pub fn generator(&self, k: usize, positive: bool) -> Result<FreeMorphism> {
        if k == 0 || k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, max: self.n.saturating_sub(1) });
        }
        let (a, b) = (k - 1, k);
        let (ia, ib) = match (self.kind, positive) {
            (WadaKind::Type1(h), true) => (cat(&[xp(a, -h), x(b), xp(a, h)]), x(a)),
            (WadaKind::Type1(h), false) => (x(b), cat(&[xp(b, h), x(a), xp(b, -h)])),
            (WadaKind::Type2, true) => (cat(&[x(a), xp(b, -1), x(a)]), x(a)),
            (WadaKind::Type2, false) => (x(b), cat(&[x(b), xp(a, -1), x(b)])),
            (WadaKind::Type3, true) => (cat(&[xp(a, 2), x(b)]), cat(&[xp(b, -1), xp(a, -1), x(b)])),
            (WadaKind::Type3, false) => (cat(&[x(a), xp(b, -1), xp(a, -1)]), cat(&[x(a), xp(b, 2)])),
        };
        let mut m = FreeMorphism::identity(self.n);
        m.images[a] = ia;
        m.images[b] = ib;
        Ok(m)
    }

    /// `ρ(β)`, the rightmost letter acting first.
    pub fn braid(&self, beta: &BraidWord) -> Result<FreeMorphism> {
        self.same_rank(beta)?;
        let mut acc = FreeMorphism::identity(self.n);
        for l in beta.letters() {
            acc = acc.compose(&self.generator(l.generator + 1, !l.inverted)?);
        }
        Ok(acc)
    }

    fn same_rank(&self, beta: &BraidWord) -> Result<()> {
        if beta.strands() != self.n {
            return Err(Error::Mismatch(format!("braid on {} strands acting on F_{}", beta.strands(), self.n)));
        }
        Ok(())
    }
}

/// `ρ(σ_k^{±1})(w)`, freely reduced.
pub fn wada_apply(rep: &WadaRep, k: usize, positive: bool, w: &SignedWord) -> Result<SignedWord> {
    Ok(rep.generator(k, positive)?.apply(w))
}

/// `ρ(β)(w)`.
pub fn apply_braid(rep: &WadaRep, beta: &BraidWord, w: &SignedWord) -> Result<SignedWord> {
    let mut acc = free_reduce(w);
    for l in beta.letters().iter().rev() {
        acc = wada_apply(rep, l.generator + 1, !l.inverted, &acc)?;
    }
    Ok(acc)
}

/// Matrix of `ρ(β)` on `H_1(F_n) = ℤ^n`; column `j` is `[ρ(β)(x_j)]`.
pub fn abelianized_action(rep: &WadaRep, beta: &BraidWord) -> Result<IntegerMatrix> {
    rep.same_rank(beta)?;
    let mut acc = IntegerMatrix::identity(rep.rank());
    for l in beta.letters() {
        let g = rep.generator(l.generator + 1, !l.inverted)?.abelianized();
        acc = acc.mul(&g).expect("square matrices of equal size");
    }
    Ok(acc)
}

/// Whether `φ^{-1} ∘ from(σ_k) ∘ φ = to(σ_{μ(k)})` for every `k`, with `φ_inv`
/// certified as a two-sided inverse of `φ` on the generators.
pub fn is_intertwiner(
    from: &WadaRep,
    to: &WadaRep,
    phi: &FreeMorphism,
    phi_inv: &FreeMorphism,
    mu: impl Fn(usize) -> usize,
) -> Result<bool> {
    let n = from.rank();
    if to.rank() != n || phi.rank() != n || phi_inv.rank() != n {
        return Err(Error::Mismatch("intertwiner ranks differ".into()));
    }
    if !phi.compose(phi_inv).is_identity() || !phi_inv.compose(phi).is_identity() {
        return Ok(false);
    }
    for k in 1..n {
        let lhs = phi_inv.compose(&from.generator(k, true)?).compose(phi);
        if lhs != to.generator(mu(k), true)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x_i ↦ x_i^{-1}`, an involution.
pub fn inversion_witness(n: usize) -> FreeMorphism {
    FreeMorphism { images: (0..n).map(|i| xp(i, -1)).collect() }
}

/// `ρ_h^{(1)}` and `ρ_{-h}^{(1)}` are intertwined by the inversion witness.
pub fn check_inversion_witness(h: i64, n: usize) -> Result<bool> {
    let phi = inversion_witness(n);
    is_intertwiner(&WadaRep::new(WadaKind::Type1(h), n)?, &WadaRep::new(WadaKind::Type1(-h), n)?, &phi, &phi, |k| k)
}

/// `y_i = x_1^2 … x_{i-1}^2 x_i` for `i = 1..=n` (0-based in the result).
pub fn y_words(n: usize) -> Vec<SignedWord> {
    (0..n)
        .map(|i| {
            let mut parts: Vec<SignedWord> = (0..i).map(|j| xp(j, 2)).collect();
            parts.push(x(i));
            cat(&parts)
        })
        .collect()
}

/// `φ(x_i) = y_{n-i+1}` together with its inverse.
pub fn equivalence_witness_23(n: usize) -> (FreeMorphism, FreeMorphism) {
    let y = y_words(n);
    let phi = FreeMorphism { images: (0..n).map(|i| y[n - 1 - i].clone()).collect() };
    // x_i = (x_1^2 … x_{i-1}^2)^{-1} y_i, written over the letters y_j.
    let mut over_y = Vec::with_capacity(n);
    let mut squares = SignedWord::empty();
    for i in 0..n {
        let xi = cat(&[squares.inverse(), x(i)]);
        squares = cat(&[squares.clone(), xi.clone(), xi.clone()]);
        over_y.push(xi);
    }
    // φ^{-1}(y_m) = x_{n-m+1}.
    let y_to_x = FreeMorphism { images: (0..n).map(|m| x(n - 1 - m)).collect() };
    let phi_inv = FreeMorphism { images: over_y.iter().map(|w| y_to_x.apply(w)).collect() };
    (phi, phi_inv)
}

/// `ρ^{(3)}(σ_k)(y_i)` is `y_{k+1}` for `i = k`, `y_{k+1} y_k^{-1} y_{k+1}` for `i = k + 1`
/// and `y_i` otherwise.
pub fn check_y_table(n: usize) -> Result<bool> {
    let rep = WadaRep::new(WadaKind::Type3, n)?;
    let y = y_words(n);
    for k in 1..n {
        let g = rep.generator(k, true)?;
        for i in 0..n {
            let expect = if i == k - 1 {
                y[k].clone()
            } else if i == k {
                cat(&[y[k].clone(), y[k - 1].inverse(), y[k].clone()])
            } else {
                y[i].clone()
            };
            if g.apply(&y[i]) != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ρ^{(3)}` and `ρ^{(2)} ∘ μ` with `μ(σ_i) = σ_{n-i}` are intertwined by the `y` witness.
pub fn check_equivalence_witness_23(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n, max: usize::MAX });
    }
    let (phi, phi_inv) = equivalence_witness_23(n);
    let from = WadaRep::new(WadaKind::Type3, n)?;
    let to = WadaRep::new(WadaKind::Type2, n)?;
    Ok(check_y_table(n)? && is_intertwiner(&from, &to, &phi, &phi_inv, |i| n - i)?)
}

/// `x_n^h … x_2^h x_1^h`.
pub fn invariant_word(h: i64, n: usize) -> SignedWord {
    cat(&(0..n).rev().map(|i| xp(i, h)).collect::<Vec<_>>())
}

/// Generators `x_j` (`j ≠ i, i+1`) and `x_{i+1}^h x_i^h` of the claimed fixed
/// subgroup of `ρ_h^{(1)}(σ_i)`.
pub fn stabilizer_generators(h: i64, n: usize, i: usize) -> Vec<SignedWord> {
    let mut out: Vec<SignedWord> = (0..n).filter(|&j| j + 1 != i && j != i).map(x).collect();
    out.push(cat(&[xp(i, h), xp(i - 1, h)]));
    out
}

/// Maximal runs `(generator, exponent)` of a reduced word.
fn syllables(w: &SignedWord) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = Vec::new();
    for l in free_reduce(w).letters() {
        match out.last_mut() {
            Some((g, e)) if *g == l.generator => *e += l.sign(),
            _ => out.push((l.generator, l.sign())),
        }
    }
    out
}

/// Membership in `⟨x_n^h … x_1^h⟩` read off the reduced form: exponents are
/// `±h`, each `x_i^h` is followed by `x_{i-1}^h` unless `i = 1` and preceded by
/// `x_{i+1}^h` unless `i = n`, and dually for `x_i^{-h}`.
pub fn in_invariant_subgroup(w: &SignedWord, h: i64, n: usize) -> bool {
    let s = syllables(w);
    let last = n - 1;
    for (idx, &(g, e)) in s.iter().enumerate() {
        if e.abs() != h.abs() {
            return false;
        }
        let prev = idx.checked_sub(1).map(|p| s[p]);
        let next = s.get(idx + 1).copied();
        let (after, before) = if e == h {
            (g.checked_sub(1).map(|d| (d, e)), (g < last).then(|| (g + 1, e)))
        } else {
            ((g < last).then(|| (g + 1, e)), g.checked_sub(1).map(|d| (d, e)))
        };
        if after.is_some() && next != after {
            return false;
        }
        if before.is_some() && prev != before {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubgroupReport {
    pub h: i64,
    pub n: usize,
    /// Every claimed generator of each `F_n^{⟨σ_i⟩}` is fixed by `σ_i`.
    pub stabilizers_fixed: bool,
    /// `(x_n^h … x_1^h)^r` is fixed by every `σ_i` for `|r| ≤ 3`.
    pub invariant_fixed: bool,
    pub samples: usize,
    /// Sampled words outside `⟨x_n^h … x_1^h⟩` that some `σ_i` moves.
    pub moved: usize,
    /// Sampled words inside the subgroup that every `σ_i` fixes.
    pub members: usize,
    pub members_fixed: usize,
}

impl FixedSubgroupReport {
    pub fn passed(&self) -> bool {
        self.stabilizers_fixed
            && self.invariant_fixed
            && self.moved + self.members == self.samples
            && self.members_fixed == self.members
    }
}

fn random_reduced(rng: &mut ChaCha8Rng, n: usize, max_syllables: usize, max_exp: i64) -> SignedWord {
    let count = rng.gen_range(1..=max_syllables);
    let mut w = SignedWord::empty();
    for _ in 0..count {
        let e = rng.gen_range(1..=max_exp) * if rng.gen_bool(0.5) { 1 } else { -1 };
        w.extend(&xp(rng.gen_range(0..n), e));
    }
    free_reduce(&w)
}

/// A sample biased towards near-misses of the invariant subgroup.
fn sample(rng: &mut ChaCha8Rng, h: i64, n: usize) -> SignedWord {
    let c = invariant_word(h, n);
    match rng.gen_range(0..4) {
        0 => random_reduced(rng, n, 8, h.abs() + 1),
        1 => c.pow(rng.gen_range(-3..=3)),
        2 => {
            let base = c.pow(rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 });
            let mut letters = base.letters().to_vec();
            let pos = rng.gen_range(0..=letters.len());
            letters.insert(pos, Letter { generator: rng.gen_range(0..n), inverted: rng.gen_bool(0.5) });
            free_reduce(&SignedWord(letters))
        }
        _ => {
            let syl: Vec<SignedWord> = (0..rng.gen_range(1..=2 * n)).map(|_| xp(rng.gen_range(0..n), h)).collect();
            cat(&syl)
        }
    }
}

/// Fixed-subgroup checks for `ρ_h^{(1)}`; the converse direction is sampled.
pub fn fixed_subgroup_checks(h: i64, n: usize, samples: usize, seed: u64) -> Result<FixedSubgroupReport> {
    let rep = WadaRep::new(WadaKind::Type1(h), n)?;
    if n < 2 {
        return Err(Error::IndexOutOfRange { index: n, max: usize::MAX });
    }
    let gens: Vec<FreeMorphism> = (1..n).map(|i| rep.generator(i, true)).collect::<Result<_>>()?;
    let mut stabilizers_fixed = true;
    for i in 1..n {
        for w in stabilizer_generators(h, n, i) {
            stabilizers_fixed &= gens[i - 1].apply(&w) == w;
        }
    }
    let c = invariant_word(h, n);
    let invariant_fixed = (-3..=3).all(|r| {
        let w = c.pow(r);
        gens.iter().all(|g| g.apply(&w) == w)
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut moved, mut members, mut members_fixed) = (0, 0, 0);
    for _ in 0..samples {
        let w = sample(&mut rng, h, n);
        let fixed = gens.iter().all(|g| g.apply(&w) == w);
        if in_invariant_subgroup(&w, h, n) {
            members += 1;
            members_fixed += usize::from(fixed);
        } else if !fixed {
            moved += 1;
        }
    }
    Ok(FixedSubgroupReport { h, n, stabilizers_fixed, invariant_fixed, samples, moved, members, members_fixed })
}

/// `H_1` of `⟨x_1, …, x_n | x_n^k … x_1^k⟩`.
pub fn cyclic_relator_fingerprint(k: i64, n: usize) -> Result<Fingerprint> {
    let p = GroupPresentation::new(free_alphabet(n)?, [invariant_word(k, n)])?;
    Ok(smith_normal_form(&abelianized_matrix(&p)))
}

/// Whether the matrix has exactly one `1` in every row and column and zeros elsewhere.
pub fn is_permutation_matrix(m: &IntegerMatrix) -> bool {
    let (one, zero) = (BigInt::from(1), BigInt::from(0));
    if m.rows() != m.cols() {
        return false;
    }
    let rows_ok = (0..m.rows()).all(|i| {
        let r = m.row(i);
        r.iter().filter(|v| **v == one).count() == 1 && r.iter().all(|v| *v == one || *v == zero)
    });
    let cols_ok = (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| *m.get(i, j) == one).count() == 1);
    rows_ok && cols_ok
}
