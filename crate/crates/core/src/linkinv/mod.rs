//! The groups `Γ_{(H,h)}(β)` of braid closures and their abelianized fingerprints.
//!
//! `Γ(β)` is the quotient of `G = H_1 ∗ … ∗ H_n` by `g = ρ(β)(g)`. Imposing
//! the relation on the generators `φ_i(x)` suffices because `ρ(β)` is an
//! automorphism. Its abelianization is computed exactly by Smith normal form,
//! which gives an invariant of the closed link.

pub mod markov;
pub mod snf;

use std::sync::Arc;

use num_bigint::BigInt;

use crate::braidrep::{ArtinRepresentation, BraidWord};
use crate::error::{Error, Result};
use crate::freeprod::BaseGroup;
use crate::words::{free_reduce, Alphabet, Letter, SignedWord};

pub use markov::{run_markov_harness, MarkovCase, MarkovConfig, MarkovReport};
pub use snf::{smith_diagonal, smith_normal_form, Fingerprint, IntegerMatrix};

/// A finite group presentation; relators are freely reduced, nonempty and distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Alphabet,
    relators: Vec<SignedWord>,
}

impl GroupPresentation {
    pub fn new(generators: Alphabet, relators: impl IntoIterator<Item = SignedWord>) -> Result<Self> {
        let mut p = GroupPresentation { generators, relators: Vec::new() };
        for r in relators {
            p.push(r)?;
        }
        Ok(p)
    }

    pub fn generators(&self) -> &Alphabet {
        &self.generators
    }

    pub fn relators(&self) -> &[SignedWord] {
        &self.relators
    }

    /// Adds the free reduction of `r` unless it is empty or already present.
    pub fn push(&mut self, r: SignedWord) -> Result<()> {
        if let Some(m) = r.max_index() {
            if m >= self.generators.len() {
                return Err(Error::IndexOutOfRange { index: m + 1, max: self.generators.len() });
            }
        }
        let r = free_reduce(&r);
        if !r.is_empty() && !self.relators.contains(&r) {
            self.relators.push(r);
        }
        Ok(())
    }

    pub fn display(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| self.generators.display_signed(r)).collect();
        format!("< {} | {} >", self.generators.names().join(", "), rels.join(", "))
    }
}

/// Presentation of `Γ(β)` over the copies alphabet of `rep`.
pub fn gamma_presentation(rep: &ArtinRepresentation, beta: &BraidWord) -> Result<GroupPresentation> {
    let g = rep.group();
    let base = rep.base();
    let s = base.alphabet().len();
    let mut p = GroupPresentation::new(g.copies_alphabet().clone(), [])?;
    for i in 1..=g.rank() {
        for r in base.relators() {
            p.push(r.substitute(|x| SignedWord(vec![Letter::pos(g.copy_index(i, x))])))?;
        }
    }
    for i in 1..=g.rank() {
        for x in 0..s {
            let letter = SignedWord(vec![Letter::pos(g.copy_index(i, x))]);
            let image = rep.apply_braid(beta, &g.from_word(&letter)?)?;
            p.push(letter.inverse().concat(&g.to_word(&image)))?;
        }
    }
    Ok(p)
}

/// Entry `(r, g)` is the exponent sum of generator `g` in relator `r`.
pub fn abelianized_matrix(p: &GroupPresentation) -> IntegerMatrix {
    let cols = p.generators().len();
    let mut m = IntegerMatrix::zeros(p.relators().len(), cols);
    for (i, r) in p.relators().iter().enumerate() {
        for l in r.letters() {
            let v = m.get(i, l.generator) + BigInt::from(l.sign());
            m.set(i, l.generator, v);
        }
    }
    m
}

/// `H_1(Γ_{(H,h)}(β))`.
pub fn fingerprint(base: Arc<dyn BaseGroup>, h: &SignedWord, beta: &BraidWord) -> Result<Fingerprint> {
    let rep = ArtinRepresentation::from_word(base, h, beta.strands())?;
    fingerprint_with(&rep, beta)
}

pub fn fingerprint_with(rep: &ArtinRepresentation, beta: &BraidWord) -> Result<Fingerprint> {
    Ok(smith_normal_form(&abelianized_matrix(&gamma_presentation(rep, beta)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidrep::markov_stabilize;
    use crate::freeprod::{CyclicGroup, IntegerGroup};
    use proptest::prelude::*;

    fn z() -> Arc<dyn BaseGroup> {
        Arc::new(IntegerGroup::new())
    }

    fn zk(k: u64) -> Arc<dyn BaseGroup> {
        Arc::new(CyclicGroup::new(k).unwrap())
    }

    fn a() -> SignedWord {
        SignedWord::power_of(0, 1)
    }

    fn b(n: usize, idx: &[i64]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    fn fp(torsion: &[i64], rank: usize) -> Fingerprint {
        Fingerprint { torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(), rank }
    }

    #[test]
    fn trivial_braid_gives_free_group() {
        for n in 1..=5 {
            let rep = ArtinRepresentation::from_word(z(), &a(), n).unwrap();
            let p = gamma_presentation(&rep, &BraidWord::identity(n).unwrap()).unwrap();
            assert!(p.relators().is_empty());
            assert_eq!(p.generators().len(), n);
            assert_eq!(fingerprint(z(), &a(), &BraidWord::identity(n).unwrap()).unwrap(), fp(&[], n));
        }
    }

    #[test]
    fn single_crossing_relators() {
        let rep = ArtinRepresentation::from_word(z(), &a(), 2).unwrap();
        let p = gamma_presentation(&rep, &b(2, &[1])).unwrap();
        let gens = p.generators();
        let shown: Vec<String> = p.relators().iter().map(|r| gens.format_signed(r)).collect();
        let expect = [gens.parse_signed("a_1^-2 a_2 a_1").unwrap(), gens.parse_signed("a_2^-1 a_1").unwrap()];
        assert_eq!(p.relators(), &expect, "{shown:?}");
        assert_eq!(smith_normal_form(&abelianized_matrix(&p)), fp(&[], 1));
    }

    #[test]
    fn trefoil() {
        assert_eq!(fingerprint(z(), &a(), &b(2, &[1, 1, 1])).unwrap(), fp(&[], 1));
        assert_eq!(fingerprint(zk(2), &a(), &b(2, &[1, 1, 1])).unwrap(), fp(&[2], 0));
        assert_eq!(fingerprint(zk(3), &a(), &b(2, &[1, 1, 1])).unwrap(), fp(&[3], 0));
    }

    #[test]
    fn hopf_link_and_unlinks() {
        assert_eq!(fingerprint(z(), &a(), &b(2, &[1, 1])).unwrap(), fp(&[], 2));
        assert_eq!(fingerprint(zk(2), &a(), &b(2, &[1, 1])).unwrap(), fp(&[2, 2], 0));
        assert_eq!(fingerprint(z(), &a(), &b(3, &[1, -2])).unwrap(), fp(&[], 1));
    }

    #[test]
    fn base_relators_are_copied() {
        let rep = ArtinRepresentation::from_word(zk(3), &a(), 2).unwrap();
        let p = gamma_presentation(&rep, &BraidWord::identity(2).unwrap()).unwrap();
        let gens = p.generators();
        assert_eq!(p.relators(), &[gens.parse_signed("a_1^3").unwrap(), gens.parse_signed("a_2^3").unwrap()]);
    }

    #[test]
    fn abelianization_examples() {
        let gens = Alphabet::new(["a", "b"]).unwrap();
        let comm = gens.parse_signed("a b a^-1 b^-1").unwrap();
        let m = abelianized_matrix(&GroupPresentation::new(gens.clone(), [comm]).unwrap());
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert!(m.row(0).iter().all(|v| *v == BigInt::from(0)));
        let m = abelianized_matrix(&GroupPresentation::new(gens, []).unwrap());
        assert_eq!((m.rows(), m.cols()), (0, 2));
        let gens = Alphabet::numbered("x", 4).unwrap();
        let r = gens.parse_signed("x4^3 x3^3 x2^3 x1^3").unwrap();
        let m = abelianized_matrix(&GroupPresentation::new(gens, [r]).unwrap());
        assert!(m.row(0).iter().all(|v| *v == BigInt::from(3)));
    }

    #[test]
    fn nontrivial_torsion_base_with_larger_h() {
        let h = SignedWord::power_of(0, 2);
        let f = fingerprint(zk(4), &h, &b(3, &[1, 2, 1, 2])).unwrap();
        assert_eq!(f, fingerprint(zk(4), &h, &markov_stabilize(&b(3, &[1, 2, 1, 2]), false)).unwrap());
    }

    fn braid_strategy() -> impl Strategy<Value = BraidWord> {
        (2usize..=4).prop_flat_map(|n| {
            proptest::collection::vec((1..n as i64, any::<bool>()), 0..=8).prop_map(move |v| {
                let idx: Vec<i64> = v.into_iter().map(|(i, s)| if s { i } else { -i }).collect();
                BraidWord::from_indices(n, &idx).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn free_rank_counts_components(beta in braid_strategy()) {
            let f = fingerprint(z(), &a(), &beta).unwrap();
            prop_assert!(f.is_free());
            prop_assert_eq!(f.rank, beta.closure_components());
        }

        #[test]
        fn inverse_braid_has_same_fingerprint(beta in braid_strategy(), k in 2u64..=3) {
            prop_assert_eq!(
                fingerprint(zk(k), &a(), &beta).unwrap(),
                fingerprint(zk(k), &a(), &beta.inverse()).unwrap()
            );
        }
    }
}
