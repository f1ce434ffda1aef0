//! The Garside structure on `G ⋊_ρ B_n` for a Garside base `H` with Garside
//! element `h` spelled by a positive word `D`.
//!
//! Generators are the atoms `S` of the base monoid followed by braid letters
//! `t1 … t{n-1}`. Relations are the base relations, the braid relations,
//! `t_i x = x t_i` for `i ≥ 2`, and `x t1 D t1 = t1 D t1 τ(x)` where
//! `xD ≡ Dτ(x)`.

use std::sync::Arc;

use crate::braidrep::{ArtinRepresentation, BraidWord};
use crate::error::{Error, Result};
use crate::freeprod::{BaseGroup, FreeProductElement, GarsideGroup};
use crate::garside::{
    verify_garside, ComplementTable, ComplementedMonoid, GarsideCertificate, GarsideStructure, MonoidPresentation,
};
use crate::words::{Alphabet, Letter, PositiveWord, SignedWord};

/// Name prefix of the braid letters of the semidirect product.
pub const BRAID_LETTER: &str = "t";

/// Base data for the construction: a Garside monoid `M` and a Garside element `D` of it.
#[derive(Clone, Debug)]
pub struct SemidirectInstance {
    base: Arc<GarsideStructure>,
    d: PositiveWord,
    strands: usize,
    tau: Vec<usize>,
    monoid: ComplementedMonoid,
    delta: PositiveWord,
}

/// `τ` on `S` from left-reversing `D^{-1} x D` to `(τ(x), ε)`.
pub fn compute_tau(base: &GarsideStructure) -> Result<Vec<usize>> {
    let d = base.delta();
    let s = base.alphabet().len();
    let mut tau = Vec::with_capacity(s);
    for x in 0..s {
        let xd = PositiveWord::letter(x).concat(d);
        let (p, q) = base.monoid().left_complements(d, &xd)?.ok_or(Error::NoCommonMultiple)?;
        if !q.is_empty() {
            return Err(Error::NotGarside(format!("D does not left divide {} D", base.alphabet().name(x))));
        }
        let image = match p.letters() {
            [y] => *y,
            _ => {
                return Err(Error::NotGarside(format!(
                    "conjugate of `{}` by D is not a generator",
                    base.alphabet().name(x)
                )))
            }
        };
        tau.push(image);
    }
    let mut seen = vec![false; s];
    for &y in &tau {
        if seen[y] {
            return Err(Error::NotGarside("tau does not permute S".into()));
        }
        seen[y] = true;
    }
    if base.certificate().tau.iter().enumerate().any(|(x, t)| *t != Some(tau[x])) {
        return Err(Error::NotGarside("tau from reversing disagrees with the certificate".into()));
    }
    Ok(tau)
}

/// `(D t1 … t{n-1})^n` over the combined generator indices.
pub fn garside_delta(d: &PositiveWord, s: usize, strands: usize) -> PositiveWord {
    let mut block = d.clone();
    block.0.extend(s..s + strands - 1);
    block.pow(strands)
}

fn inverse_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Presentation with generators `S ∪ {t1 … t{n-1}}`, weights `ν` on `S` and 1 on braid letters.
pub fn build_presentation(
    base: &MonoidPresentation,
    d: &PositiveWord,
    tau: &[usize],
    strands: usize,
) -> Result<MonoidPresentation> {
    let s = base.generator_count();
    let t = |i: usize| s + i - 1;
    let mut names: Vec<String> = base.alphabet().names().to_vec();
    names.extend((1..strands).map(|i| format!("{BRAID_LETTER}{i}")));
    let alphabet = Alphabet::new(names)?;
    let mut weights = base.weights().to_vec();
    weights.extend(std::iter::repeat_n(1, strands - 1));
    let mut relations: Vec<(PositiveWord, PositiveWord)> = base.relations().to_vec();
    for i in 1..strands {
        for j in i + 1..strands {
            if j == i + 1 {
                relations.push((PositiveWord(vec![t(i), t(j), t(i)]), PositiveWord(vec![t(j), t(i), t(j)])));
            } else {
                relations.push((PositiveWord(vec![t(i), t(j)]), PositiveWord(vec![t(j), t(i)])));
            }
        }
    }
    for i in 2..strands {
        for x in 0..s {
            relations.push((PositiveWord(vec![t(i), x]), PositiveWord(vec![x, t(i)])));
        }
    }
    if strands >= 2 {
        let sds = t1_d_t1(d, s);
        for (x, &tx) in tau.iter().enumerate().take(s) {
            relations.push((PositiveWord::letter(x).concat(&sds), sds.concat(&PositiveWord::letter(tx))));
        }
    }
    MonoidPresentation::new(alphabet, weights, relations)
}

fn t1_d_t1(d: &PositiveWord, s: usize) -> PositiveWord {
    PositiveWord::letter(s).concat(d).concat(&PositiveWord::letter(s))
}

/// The complements `F` (left) and `G` (right) on `S ∪ {t1 … t{n-1}}`.
pub fn build_complement_tables(
    f: &ComplementTable,
    g: &ComplementTable,
    tau: &[usize],
    d: &PositiveWord,
    strands: usize,
) -> Result<(ComplementTable, ComplementTable)> {
    let s = f.size();
    let size = s + strands - 1;
    let t = |i: usize| s + i - 1;
    let letter = PositiveWord::letter;
    let tau_inv = inverse_permutation(tau);
    let sds = t1_d_t1(d, s);
    let mut big_f = ComplementTable::new(size);
    let mut big_g = ComplementTable::new(size);
    for x in 0..s {
        for y in 0..s {
            if x != y {
                if let Some(w) = f.get(x, y) {
                    big_f.set(x, y, w.clone())?;
                }
                if let Some(w) = g.get(x, y) {
                    big_g.set(x, y, w.clone())?;
                }
            }
        }
    }
    for x in 0..s {
        if strands >= 2 {
            big_f.set(x, t(1), sds.clone())?;
            big_f.set(t(1), x, d.concat(&letter(t(1))).concat(&letter(tau[x])))?;
            big_g.set(t(1), x, sds.clone())?;
            big_g.set(x, t(1), letter(tau_inv[x]).concat(&letter(t(1))).concat(d))?;
        }
        for i in 2..strands {
            big_f.set(x, t(i), letter(t(i)))?;
            big_f.set(t(i), x, letter(x))?;
            big_g.set(x, t(i), letter(x))?;
            big_g.set(t(i), x, letter(t(i)))?;
        }
    }
    for i in 1..strands {
        for j in 1..strands {
            if i == j {
                continue;
            }
            if i.abs_diff(j) == 1 {
                big_f.set(t(i), t(j), PositiveWord(vec![t(j), t(i)]))?;
                // G(σ_j, σ_i) = σ_i σ_j
                big_g.set(t(j), t(i), PositiveWord(vec![t(i), t(j)]))?;
            } else {
                big_f.set(t(i), t(j), letter(t(j)))?;
                big_g.set(t(j), t(i), letter(t(j)))?;
            }
        }
    }
    big_f.validate()?;
    big_g.validate()?;
    Ok((big_f, big_g))
}

impl SemidirectInstance {
    /// `base` must be a Garside monoid with Garside element `d`, every generator an atom.
    pub fn new(base: ComplementedMonoid, d: PositiveWord, strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::IndexOutOfRange { index: strands, max: 2 });
        }
        if d.is_empty() {
            return Err(Error::TrivialDistinguished);
        }
        let structure = GarsideStructure::new(base, d.clone())?;
        let s = structure.alphabet().len();
        if structure.certificate().atoms.len() != s {
            return Err(Error::NotGarside("every base generator must be an atom".into()));
        }
        let tau = compute_tau(&structure)?;
        let presentation = build_presentation(structure.presentation(), &d, &tau, strands)?;
        let (f, g) = build_complement_tables(
            structure.monoid().left_table(),
            structure.monoid().right_table(),
            &tau,
            &d,
            strands,
        )?;
        let monoid = ComplementedMonoid::new(presentation, f, g)?.with_cap(structure.monoid().cap());
        let delta = garside_delta(&d, s, strands);
        Ok(SemidirectInstance { base: Arc::new(structure), d, strands, tau, monoid, delta })
    }

    /// From a base group, rejecting groups that are not Garside.
    pub fn from_group(group: &dyn BaseGroup, d: &SignedWord, strands: usize) -> Result<Self> {
        if let Some(k) = group.torsion_order() {
            return Err(Error::NotGarside(format!("{} has elements of order {k}", group.label())));
        }
        let monoid = group
            .garside_monoid()
            .ok_or_else(|| Error::NotGarside(format!("no Garside monoid known for {}", group.label())))?;
        let d = d.as_positive().ok_or_else(|| Error::Mismatch("D must be a positive word".into()))?;
        Self::new(monoid, d, strands)
    }

    pub fn base(&self) -> &Arc<GarsideStructure> {
        &self.base
    }

    pub fn d(&self) -> &PositiveWord {
        &self.d
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn monoid(&self) -> &ComplementedMonoid {
        &self.monoid
    }

    pub fn presentation(&self) -> &MonoidPresentation {
        self.monoid.presentation()
    }

    pub fn delta(&self) -> &PositiveWord {
        &self.delta
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.monoid.alphabet()
    }

    fn s(&self) -> usize {
        self.base.alphabet().len()
    }

    /// Index of `t_i`.
    pub fn braid_letter(&self, i: usize) -> usize {
        self.s() + i - 1
    }

    /// `U = t1 D t1 t2 … t{n-1}`.
    pub fn u_word(&self) -> PositiveWord {
        let mut u = t1_d_t1(&self.d, self.s());
        u.0.extend((2..self.strands).map(|i| self.braid_letter(i)));
        u
    }

    /// `τ̃`: braid letters fixed, `x ↦ τ^n(x)`.
    pub fn tilde_tau(&self, generator: usize) -> PositiveWord {
        if generator >= self.s() {
            return PositiveWord::letter(generator);
        }
        let mut x = generator;
        for _ in 0..self.strands {
            x = self.tau[x];
        }
        PositiveWord::letter(x)
    }

    /// Image of `Δ_B = (β_1 … β_n)^n` under `β_1 ↦ D`, `β_i ↦ t_{i-1}`.
    pub fn artin_b_delta_image(&self) -> PositiveWord {
        let mut out = PositiveWord::empty();
        for _ in 0..self.strands {
            for b in 1..=self.strands {
                if b == 1 {
                    out = out.concat(&self.d);
                } else {
                    out.0.push(self.braid_letter(b - 1));
                }
            }
        }
        out
    }

    /// `φ(φ_i(y)) = t_{i-1}^{-1} … t_1^{-1} D^{i-1} y D^{1-i} t_1 … t_{i-1}`.
    pub fn embed_copy(&self, i: usize, y: &SignedWord) -> SignedWord {
        let mut t_run = SignedWord::empty();
        for j in 1..i {
            t_run.push(Letter::pos(self.braid_letter(j)));
        }
        let dp = self.d.to_signed().pow(i as i64 - 1);
        t_run.inverse().concat(&dp).concat(y).concat(&dp.inverse()).concat(&t_run)
    }

    /// `φ` on an element of `H_1 ∗ … ∗ H_n`, syllable by syllable.
    pub fn embed(&self, g: &FreeProductElement) -> SignedWord {
        let mut out = SignedWord::empty();
        for s in g.syllables() {
            out.extend(&self.embed_copy(s.factor, &s.word));
        }
        out
    }

    /// The base group as a free-product factor.
    pub fn base_group(&self) -> Arc<dyn BaseGroup> {
        Arc::new(GarsideGroup::new(Arc::clone(&self.base), "H"))
    }

    pub fn certificate(&self) -> Result<GarsideCertificate> {
        verify_garside(&self.monoid, &self.delta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct SemidirectReport {
    pub certificate: GarsideCertificate,
    pub checks: Vec<AuxCheck>,
}

impl SemidirectReport {
    pub fn passed(&self) -> bool {
        self.certificate.passed() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &AuxCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the Garside criterion on the instance and the identities of its proof.
pub fn verify_semidirect(inst: &SemidirectInstance) -> Result<SemidirectReport> {
    let certificate = inst.certificate()?;
    let mut checks = Vec::new();
    if !certificate.passed() {
        return Ok(SemidirectReport { certificate, checks });
    }
    let structure = GarsideStructure::new(inst.monoid.clone(), inst.delta.clone())?;
    let a = inst.alphabet();
    let delta = inst.delta();
    let s = inst.s();
    let n = inst.strands;
    let mut push = |name: String, passed: bool| checks.push(AuxCheck { name, passed });

    push("homogeneous presentation".into(), true);
    push("Delta_B maps to Delta".into(), inst.artin_b_delta_image() == *delta);

    let u = inst.u_word();
    let du = inst.d.concat(&u.pow(n - 1));
    push(format!("Delta = D U^{}", n - 1), structure.equivalent(delta, &du)?);
    for x in 0..s {
        let lhs = PositiveWord::letter(x).concat(&u);
        let rhs = u.concat(&PositiveWord::letter(inst.tau[x]));
        push(format!("{} U = U tau({})", a.name(x), a.name(x)), structure.equivalent(&lhs, &rhs)?);
    }
    for i in 1..n {
        let t = PositiveWord::letter(inst.braid_letter(i));
        let ok = structure.equivalent(&t.concat(delta), &delta.concat(&t))?;
        push(format!("{} Delta = Delta {}", a.name(s + i - 1), a.name(s + i - 1)), ok);
    }
    for x in 0..s {
        let lhs = PositiveWord::letter(x).concat(delta);
        let rhs = delta.concat(&inst.tilde_tau(x));
        push(format!("{} Delta = Delta tilde_tau({})", a.name(x), a.name(x)), structure.equivalent(&lhs, &rhs)?);
    }
    for g in 0..a.len() {
        let ok = certificate.tau[g] == inst.tilde_tau(g).letters().first().copied();
        push(format!("certificate tau agrees with tilde_tau on {}", a.name(g)), ok);
    }

    // the action of B_n on G matches conjugation by braid letters in the semidirect product
    let rep = ArtinRepresentation::from_word(inst.base_group(), &inst.d.to_signed(), n)?;
    let fp = rep.group();
    let mut conj_ok = true;
    let mut inverse_ok = true;
    for i in 1..=n {
        for x in 0..s {
            let y = SignedWord(vec![Letter::pos(x)]);
            let gen = fp.inject(i, &y)?;
            let image = inst.embed(&gen);
            for k in 1..n {
                for positive in [true, false] {
                    let tk = SignedWord(vec![if positive {
                        Letter::pos(inst.braid_letter(k))
                    } else {
                        Letter::neg(inst.braid_letter(k))
                    }]);
                    let lhs = tk.concat(&image).concat(&tk.inverse());
                    let rhs = inst.embed(&rep.apply_generator(k, positive, &gen)?);
                    if !structure.group_equal(&lhs, &rhs)? {
                        conj_ok = false;
                    }
                }
            }
            // ψ∘φ = id: the braid part acts through ρ
            let back: Vec<i64> = (1..i).rev().map(|j| -(j as i64)).collect();
            let h1 = rep.h_element(1)?;
            let hp = fp.power(&h1, i as i64 - 1)?;
            let core = fp.product([&hp, &fp.inject(1, &y)?, &fp.inverse(&hp)?])?;
            let psi_phi = rep.apply_braid(&BraidWord::from_indices(n, &back)?, &core)?;
            if psi_phi != gen {
                inverse_ok = false;
            }
        }
    }
    push("conjugation by t_k matches the braid action".into(), conj_ok);
    push("psi(phi(phi_i(x))) = phi_i(x)".into(), inverse_ok);
    Ok(SemidirectReport { certificate, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeprod::{CyclicGroup, IntegerGroup};
    use crate::words::Alphabet;

    fn z_instance(k: usize, n: usize) -> SemidirectInstance {
        let z = IntegerGroup::new();
        SemidirectInstance::from_group(&z, &SignedWord::power_of(0, k as i64), n).unwrap()
    }

    fn b3_monoid() -> ComplementedMonoid {
        let a = Alphabet::new(["s1", "s2"]).unwrap();
        let rel = (a.parse_positive("s1 s2 s1").unwrap(), a.parse_positive("s2 s1 s2").unwrap());
        ComplementedMonoid::derived(MonoidPresentation::unit_weights(a, vec![rel]).unwrap()).unwrap()
    }

    fn rel_text(inst: &SemidirectInstance) -> Vec<String> {
        let a = inst.alphabet();
        inst.presentation()
            .relations()
            .iter()
            .map(|(l, r)| format!("{} = {}", a.format_positive(l), a.format_positive(r)))
            .collect()
    }

    #[test]
    fn presentations() {
        assert_eq!(rel_text(&z_instance(1, 2)), vec!["a t1 a t1 = t1 a t1 a"]);
        assert_eq!(rel_text(&z_instance(2, 2)), vec!["a t1 a^2 t1 = t1 a^2 t1 a"]);
        let r3 = rel_text(&z_instance(1, 3));
        assert!(r3.contains(&"t1 t2 t1 = t2 t1 t2".to_string()));
        assert!(r3.contains(&"t2 a = a t2".to_string()));
    }

    #[test]
    fn tables() {
        let inst = z_instance(1, 3);
        let (a, t1, t2) = (0, 1, 2);
        let f = inst.monoid().left_table();
        let g = inst.monoid().right_table();
        assert_eq!(f.get(a, t1), Some(&PositiveWord(vec![t1, a, t1])));
        assert_eq!(f.get(t1, a), Some(&PositiveWord(vec![a, t1, a])));
        assert_eq!(f.get(t2, a), Some(&PositiveWord(vec![a])));
        assert_eq!(f.get(t1, t2), Some(&PositiveWord(vec![t2, t1])));
        assert_eq!(g.get(t1, a), Some(&PositiveWord(vec![t1, a, t1])));
        assert_eq!(g.get(a, t1), Some(&PositiveWord(vec![a, t1, a])));
        let inst = z_instance(1, 4);
        assert_eq!(inst.monoid().left_table().get(1, 3), Some(&PositiveWord(vec![3])));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(z_instance(3, 2).tau(), &[0]);
        let b = SemidirectInstance::new(b3_monoid(), PositiveWord(vec![0, 1, 0]), 2).unwrap();
        assert_eq!(b.tau(), &[1, 0]);
        assert_eq!(b.tilde_tau(0), PositiveWord(vec![0]));
        assert_eq!(b.tilde_tau(2), PositiveWord(vec![2]));
        let b = SemidirectInstance::new(b3_monoid(), PositiveWord(vec![0, 1, 0, 0, 1, 0]), 2).unwrap();
        assert_eq!(b.tau(), &[0, 1]);
    }

    #[test]
    fn deltas() {
        let f = |inst: &SemidirectInstance| inst.alphabet().format_positive(inst.delta());
        assert_eq!(f(&z_instance(1, 2)), "a t1 a t1");
        assert_eq!(f(&z_instance(1, 3)), "a t1 t2 a t1 t2 a t1 t2");
        assert_eq!(f(&z_instance(2, 2)), "a^2 t1 a^2 t1");
    }

    #[test]
    fn norm_of_relation_sides() {
        let inst = z_instance(1, 2);
        let w = inst.alphabet().parse_positive("a t1 a t1").unwrap();
        assert_eq!(inst.monoid().norm(&w), 4);
    }

    #[test]
    fn garside_for_integer_base() {
        for (k, n) in [(1, 2), (1, 3), (2, 2)] {
            let report = verify_semidirect(&z_instance(k, n)).unwrap();
            assert!(report.passed(), "k={k} n={n}: {:?} {:?}", report.certificate.first_failure(), report.failed_checks().collect::<Vec<_>>());
        }
    }

    #[test]
    fn garside_for_braid_base() {
        for d in [vec![0, 1, 0], vec![0, 1, 0, 0, 1, 0]] {
            let inst = SemidirectInstance::new(b3_monoid(), PositiveWord(d), 2).unwrap();
            let report = verify_semidirect(&inst).unwrap();
            assert!(report.passed(), "{:?} {:?}", report.certificate.first_failure(), report.failed_checks().collect::<Vec<_>>());
        }
    }

    #[test]
    fn cyclic_base_is_rejected() {
        let z2 = CyclicGroup::new(2).unwrap();
        assert!(matches!(
            SemidirectInstance::from_group(&z2, &SignedWord::power_of(0, 1), 2),
            Err(Error::NotGarside(_))
        ));
    }
}
