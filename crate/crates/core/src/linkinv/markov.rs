//! Randomized Markov-invariance harness for fingerprints.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::braidrep::{markov_conjugate, markov_stabilize, BraidWord};
use crate::error::{Error, Result};
use crate::freeprod::{BaseGroup, CyclicGroup, IntegerGroup};
use crate::words::SignedWord;

use super::{fingerprint, Fingerprint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovConfig {
    pub cases: usize,
    pub seed: u64,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub max_strands: usize,
    pub max_braid_len: usize,
    pub max_conjugator_len: usize,
}

impl Default for MarkovConfig {
    fn default() -> Self {
        MarkovConfig { cases: 100, seed: 0, jobs: 0, max_strands: 4, max_braid_len: 8, max_conjugator_len: 4 }
    }
}

/// One sampled `(H, β, α, ±)` together with the fingerprints of every move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovCase {
    pub index: usize,
    pub base: String,
    pub beta: BraidWord,
    pub alpha: BraidWord,
    pub positive: bool,
    pub original: Fingerprint,
    pub conjugated: Fingerprint,
    pub stabilized: Fingerprint,
    pub inverted: Fingerprint,
}

impl MarkovCase {
    pub fn passed(&self) -> bool {
        self.conjugated == self.original && self.stabilized == self.original && self.inverted == self.original
    }
}

impl fmt::Display for MarkovCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case {} {}: H={} n={} beta=\"{}\" alpha=\"{}\" stab={} fingerprint {}",
            self.index,
            if self.passed() { "pass" } else { "FAIL" },
            self.base,
            self.beta.strands(),
            self.beta,
            self.alpha,
            if self.positive { "+" } else { "-" },
            self.original
        )?;
        if !self.passed() {
            write!(f, " conj {} stab {} inv {}", self.conjugated, self.stabilized, self.inverted)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovReport {
    pub cases: Vec<MarkovCase>,
}

impl MarkovReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(MarkovCase::passed)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed()).count()
    }
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Result<BraidWord> {
    let len = rng.gen_range(0..=max_len);
    let idx: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_indices(n, &idx)
}

fn run_case(config: &MarkovConfig, index: usize) -> Result<MarkovCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let base: Arc<dyn BaseGroup> = match rng.gen_range(0..3) {
        0 => Arc::new(IntegerGroup::new()),
        1 => Arc::new(CyclicGroup::new(2)?),
        _ => Arc::new(CyclicGroup::new(3)?),
    };
    let n = rng.gen_range(2..=config.max_strands);
    let beta = random_braid(&mut rng, n, config.max_braid_len)?;
    let alpha = random_braid(&mut rng, n, config.max_conjugator_len)?;
    let positive = rng.gen_bool(0.5);
    let h = SignedWord::power_of(0, 1);
    let fp = |b: &BraidWord| fingerprint(Arc::clone(&base), &h, b);
    Ok(MarkovCase {
        index,
        base: base.label(),
        original: fp(&beta)?,
        conjugated: fp(&markov_conjugate(&beta, &alpha)?)?,
        stabilized: fp(&markov_stabilize(&beta, positive))?,
        inverted: fp(&beta.inverse())?,
        beta,
        alpha,
        positive,
    })
}

/// Cases are independent; case `i` draws from stream `i` of the seeded generator,
/// so the report does not depend on the worker count.
pub fn run_markov_harness(config: &MarkovConfig) -> Result<MarkovReport> {
    if config.max_strands < 2 {
        return Err(Error::IndexOutOfRange { index: config.max_strands, max: usize::MAX });
    }
    let work = || (0..config.cases).into_par_iter().map(|i| run_case(config, i)).collect::<Result<Vec<_>>>();
    let cases = if config.jobs == 0 {
        work()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(work)?
    };
    Ok(MarkovReport { cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_harness_passes_and_is_deterministic() {
        let config = MarkovConfig { cases: 20, seed: 7, jobs: 1, ..MarkovConfig::default() };
        let one = run_markov_harness(&config).unwrap();
        assert!(one.passed(), "{:?}", one.cases.iter().find(|c| !c.passed()));
        let many = run_markov_harness(&MarkovConfig { jobs: 4, ..config.clone() }).unwrap();
        assert_eq!(one, many);
        assert!(one.cases.iter().enumerate().all(|(i, c)| c.index == i));
        let other = run_markov_harness(&MarkovConfig { seed: 8, ..config }).unwrap();
        assert_ne!(one.cases[0..5], other.cases[0..5]);
    }

    #[test]
    fn detects_a_tampered_fingerprint() {
        let config = MarkovConfig { cases: 1, seed: 1, jobs: 1, ..MarkovConfig::default() };
        let mut report = run_markov_harness(&config).unwrap();
        report.cases[0].stabilized.rank += 1;
        assert!(!report.passed());
        assert_eq!(report.failures(), 1);
        assert!(report.cases[0].to_string().contains("FAIL"));
    }
}
