use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::words::PositiveWord;

use super::coherence::{check_coherence_left_with, check_coherence_right_with, CoherenceReport};
use super::monoid::ComplementedMonoid;
use super::presentation::{congruence_class, shortlex_min, words_equivalent};

/// Seed of the random words used to test `wΔ ≡ Δτ(w)`.
const TAU_SAMPLE_SEED: u64 = 0x7a75;
const TAU_SAMPLES: usize = 100;
const TAU_SAMPLE_MAX_LEN: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    C1,
    C2,
    C3,
    /// `L(Δ) = R(Δ)`.
    BalancedDivisors,
    /// `A·Δ = Δ·A` on the atom set `A`.
    AtomsCommute,
    /// `aΔ ≡ Δτ(a)` with `τ` a permutation of atoms.
    TauPermutation,
    /// `wΔ ≡ Δτ(w)` on random positive words.
    TauConjugation,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::C3 => "C3",
            Condition::BalancedDivisors => "balanced-divisors",
            Condition::AtomsCommute => "atoms-commute",
            Condition::TauPermutation => "tau-permutation",
            Condition::TauConjugation => "tau-conjugation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub passed: bool,
    pub detail: String,
}

/// Divisors of `Δ` on one side, as canonical words.
///
/// `members` maps every word of every divisor class to the index of its
/// canonical representative in `canonical`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    pub canonical: Vec<PositiveWord>,
    members: HashMap<Vec<usize>, usize>,
}

impl DivisorSet {
    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn index_of(&self, word: &PositiveWord) -> Option<usize> {
        self.members.get(word.letters()).copied()
    }

    pub fn contains(&self, word: &PositiveWord) -> bool {
        self.members.contains_key(word.letters())
    }

    pub fn canonical_of(&self, word: &PositiveWord) -> Option<&PositiveWord> {
        self.index_of(word).map(|i| &self.canonical[i])
    }

    pub fn as_set(&self) -> BTreeSet<PositiveWord> {
        self.canonical.iter().cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarsideCertificate {
    pub delta: PositiveWord,
    pub atoms: Vec<usize>,
    pub left_divisors: DivisorSet,
    pub right_divisors: DivisorSet,
    /// `tau[a]` for every atom `a`, indexed by generator; `None` where undefined.
    pub tau: Vec<Option<usize>>,
    pub left_coherence: CoherenceReport,
    pub right_coherence: CoherenceReport,
    pub checks: Vec<ConditionCheck>,
}

impl GarsideCertificate {
    /// Every condition holds.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, condition: Condition) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| c.condition == condition)
    }

    pub fn holds(&self, condition: Condition) -> bool {
        self.check(condition).is_some_and(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// `τ` on atoms as a full permutation, when it is one.
    pub fn tau_permutation(&self) -> Option<Vec<usize>> {
        if !self.holds(Condition::TauPermutation) {
            return None;
        }
        Some(self.tau.iter().enumerate().map(|(i, t)| t.unwrap_or(i)).collect())
    }
}

/// Divisors of `delta` read off prefixes (left) or suffixes (right) of its class.
fn divisors(monoid: &ComplementedMonoid, class: &[PositiveWord], left: bool) -> Result<DivisorSet> {
    let mut pieces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for w in class {
        let l = w.letters();
        for k in 0..=l.len() {
            pieces.insert(if left { l[..k].to_vec() } else { l[k..].to_vec() });
        }
    }
    let relations = monoid.presentation().relations();
    let mut members: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut canonical = Vec::new();
    for piece in &pieces {
        if members.contains_key(piece) {
            continue;
        }
        let cls = congruence_class(relations, &PositiveWord(piece.clone()), monoid.class_limit())?;
        let idx = canonical.len();
        canonical.push(shortlex_min(&cls));
        for m in cls {
            members.insert(m.0, idx);
        }
    }
    // fixed order: shortlex on representatives
    let mut order: Vec<usize> = (0..canonical.len()).collect();
    order.sort_by(|&a, &b| canonical[a].shortlex_cmp(&canonical[b]));
    let mut remap = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let canonical = order.iter().map(|&i| canonical[i].clone()).collect();
    for v in members.values_mut() {
        *v = remap[*v];
    }
    Ok(DivisorSet { canonical, members })
}

fn equivalent(monoid: &ComplementedMonoid, u: &PositiveWord, v: &PositiveWord) -> Result<bool> {
    if monoid.norm(u) != monoid.norm(v) {
        return Ok(false);
    }
    if matches!(monoid.equivalent_by_reversing(u, v), Ok(true)) {
        return Ok(true);
    }
    monoid.equivalent_exact(u, v)
}

fn display(monoid: &ComplementedMonoid, w: &PositiveWord) -> String {
    monoid.alphabet().display_positive(w)
}

fn display_set(monoid: &ComplementedMonoid, s: &DivisorSet) -> String {
    let items: Vec<String> = s.canonical.iter().map(|w| display(monoid, w)).collect();
    format!("{{{}}}", items.join(", "))
}

/// Runs the Garside criterion and the Garside-element conditions on `delta`.
pub fn verify_garside(monoid: &ComplementedMonoid, delta: &PositiveWord) -> Result<GarsideCertificate> {
    let p = monoid.presentation();
    let n = p.generator_count();
    if let Some(m) = delta.max_index() {
        if m >= n {
            return Err(Error::IndexOutOfRange { index: m + 1, max: n });
        }
    }
    let mut checks = Vec::new();

    let atoms = p.atoms(monoid.class_limit())?;
    checks.push(ConditionCheck {
        condition: Condition::C1,
        passed: n > 0 && !atoms.is_empty(),
        detail: format!("homogeneous, {} generators, {} atoms", n, atoms.len()),
    });

    let left_coherence = check_coherence_left_with(monoid.left_table(), monoid.cap(), monoid.class_limit());
    let right_coherence = check_coherence_right_with(monoid.right_table(), monoid.cap(), monoid.class_limit());
    let mut c2 = Vec::new();
    if let Some(t) = left_coherence.triples.iter().find(|t| !t.status.is_ok()) {
        c2.push(format!("left coherence fails at {:?}: {:?}", t.triple, t.status));
    }
    if let Some(t) = right_coherence.triples.iter().find(|t| !t.status.is_ok()) {
        c2.push(format!("right coherence fails at {:?}: {:?}", t.triple, t.status));
    }
    let base = p.relations();
    let sets = [
        ("left complement", monoid.left_table().left_relations()),
        ("right complement", monoid.right_table().right_relations()),
    ];
    for (name, rels) in &sets {
        for (l, r) in rels {
            if !words_equivalent(base, l, r, monoid.class_limit())? {
                c2.push(format!("{name} relation {} = {} does not hold", display(monoid, l), display(monoid, r)));
            }
        }
        for (l, r) in base {
            if !words_equivalent(rels, l, r, monoid.class_limit())? {
                c2.push(format!("relation {} = {} is not derivable from the {name}", display(monoid, l), display(monoid, r)));
            }
        }
    }
    checks.push(ConditionCheck {
        condition: Condition::C2,
        passed: c2.is_empty(),
        detail: if c2.is_empty() {
            format!("{} left and {} right triples coherent; complements present the monoid", left_coherence.triples.len(), right_coherence.triples.len())
        } else {
            c2.join("; ")
        },
    });

    let class = congruence_class(base, delta, monoid.class_limit())?;
    let left_divisors = divisors(monoid, &class, true)?;
    let right_divisors = divisors(monoid, &class, false)?;
    let missing: Vec<String> = atoms
        .iter()
        .filter(|&&a| !left_divisors.contains(&PositiveWord::letter(a)))
        .map(|&a| p.alphabet().name(a).to_string())
        .collect();
    let sides_equal = left_divisors.as_set() == right_divisors.as_set();
    checks.push(ConditionCheck {
        condition: Condition::C3,
        passed: missing.is_empty() && sides_equal,
        detail: if !sides_equal || !missing.is_empty() {
            let mut parts = Vec::new();
            if !sides_equal {
                parts.push(format!(
                    "L(Δ)≠R(Δ): L = {} vs R = {}",
                    display_set(monoid, &left_divisors),
                    display_set(monoid, &right_divisors)
                ));
            }
            if !missing.is_empty() {
                parts.push(format!("atoms not left dividing delta: {}", missing.join(" ")));
            }
            parts.join("; ")
        } else {
            format!("|L| = |R| = {}", left_divisors.len())
        },
    });
    checks.push(ConditionCheck {
        condition: Condition::BalancedDivisors,
        passed: sides_equal,
        detail: format!("|L| = {}, |R| = {}", left_divisors.len(), right_divisors.len()),
    });

    // τ(a) is the atom b with aΔ ≡ Δb; σ(b) is the atom a with Δb ≡ aΔ.
    let mut tau = vec![None; n];
    let mut covered = vec![false; n];
    for &a in &atoms {
        let lhs = PositiveWord::letter(a).concat(delta);
        let cls = congruence_class(base, &lhs, monoid.class_limit())?;
        for &b in &atoms {
            let rhs = delta.concat(&PositiveWord::letter(b));
            if cls.contains(&rhs) {
                tau[a] = Some(b);
                covered[b] = true;
                break;
            }
        }
    }
    let undefined: Vec<&str> = atoms.iter().filter(|&&a| tau[a].is_none()).map(|&a| p.alphabet().name(a)).collect();
    let uncovered: Vec<&str> = atoms.iter().filter(|&&b| !covered[b]).map(|&b| p.alphabet().name(b)).collect();
    checks.push(ConditionCheck {
        condition: Condition::AtomsCommute,
        passed: undefined.is_empty() && uncovered.is_empty(),
        detail: if undefined.is_empty() && uncovered.is_empty() {
            "A.delta = delta.A".to_string()
        } else {
            format!("no match for a.delta with a in [{}]; none for delta.b with b in [{}]", undefined.join(" "), uncovered.join(" "))
        },
    });
    let images: BTreeSet<usize> = tau.iter().flatten().copied().collect();
    let permutation = undefined.is_empty() && images.len() == atoms.len();
    checks.push(ConditionCheck {
        condition: Condition::TauPermutation,
        passed: permutation,
        detail: if permutation {
            let parts: Vec<String> = atoms
                .iter()
                .map(|&a| format!("{}->{}", p.alphabet().name(a), p.alphabet().name(tau[a].unwrap_or(a))))
                .collect();
            format!("tau = {}", parts.join(" "))
        } else {
            "tau is not a permutation of the atoms".to_string()
        },
    });

    // extend τ letterwise over the atoms and test conjugation on random words
    let conj = if permutation {
        let mut rng = ChaCha8Rng::seed_from_u64(TAU_SAMPLE_SEED);
        let mut bad = None;
        for _ in 0..TAU_SAMPLES {
            let len = rng.gen_range(0..=TAU_SAMPLE_MAX_LEN);
            let w = PositiveWord((0..len).map(|_| atoms[rng.gen_range(0..atoms.len())]).collect());
            let tw = PositiveWord(w.letters().iter().map(|&a| tau[a].unwrap_or(a)).collect());
            if !equivalent(monoid, &w.concat(delta), &delta.concat(&tw))? {
                bad = Some(w);
                break;
            }
        }
        match bad {
            None => ConditionCheck {
                condition: Condition::TauConjugation,
                passed: true,
                detail: format!("{TAU_SAMPLES} random words"),
            },
            Some(w) => ConditionCheck {
                condition: Condition::TauConjugation,
                passed: false,
                detail: format!("w.delta differs from delta.tau(w) for w = {}", display(monoid, &w)),
            },
        }
    } else {
        ConditionCheck { condition: Condition::TauConjugation, passed: false, detail: "tau undefined".into() }
    };
    checks.push(conj);

    Ok(GarsideCertificate {
        delta: delta.clone(),
        atoms,
        left_divisors,
        right_divisors,
        tau,
        left_coherence,
        right_coherence,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::presentation::MonoidPresentation;
    use crate::words::Alphabet;

    fn b3() -> ComplementedMonoid {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let rel = (a.parse_positive("s1 s2 s1").unwrap(), a.parse_positive("s2 s1 s2").unwrap());
        ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![rel]).unwrap()).unwrap()
    }

    #[test]
    fn braid_monoid_certificate() {
        let m = b3();
        let cert = verify_garside(&m, &PositiveWord(vec![0, 1, 0])).unwrap();
        assert!(cert.passed(), "{:?}", cert.first_failure());
        assert_eq!(cert.left_divisors.len(), 6);
        assert_eq!(cert.left_divisors.as_set(), cert.right_divisors.as_set());
        assert_eq!(cert.tau_permutation(), Some(vec![1, 0]));
    }

    #[test]
    fn one_letter_monoid() {
        let a = Alphabet::new(["a"]).unwrap();
        let m = ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![]).unwrap()).unwrap();
        let cert = verify_garside(&m, &PositiveWord(vec![0])).unwrap();
        assert!(cert.passed());
        assert_eq!(cert.left_divisors.canonical, vec![PositiveWord::empty(), PositiveWord(vec![0])]);
        assert_eq!(cert.tau_permutation(), Some(vec![0]));
    }

    #[test]
    fn free_monoid_fails_c3_and_balance_together() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let m = ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![]).unwrap()).unwrap();
        let cert = verify_garside(&m, &PositiveWord(vec![0, 1])).unwrap();
        assert!(!cert.passed());
        assert!(!cert.holds(Condition::C3));
        assert_eq!(
            cert.left_divisors.canonical,
            vec![PositiveWord::empty(), PositiveWord(vec![0]), PositiveWord(vec![0, 1])]
        );
        assert_eq!(
            cert.right_divisors.canonical,
            vec![PositiveWord::empty(), PositiveWord(vec![1]), PositiveWord(vec![0, 1])]
        );
        for c in [Condition::BalancedDivisors, Condition::AtomsCommute, Condition::TauPermutation] {
            assert!(!cert.holds(c), "{c:?}");
        }
    }

    #[test]
    fn wrong_delta_fails() {
        let cert = verify_garside(&b3(), &PositiveWord(vec![0, 1])).unwrap();
        assert!(!cert.holds(Condition::C3));
        assert!(!cert.holds(Condition::BalancedDivisors));
    }

    #[test]
    fn delta_squared_has_trivial_tau() {
        let cert = verify_garside(&b3(), &PositiveWord(vec![0, 1, 0, 0, 1, 0])).unwrap();
        assert!(cert.passed(), "{:?}", cert.first_failure());
        assert_eq!(cert.tau_permutation(), Some(vec![0, 1]));
    }
}
