//! Seeded noisy-channel simulation.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{CodeError, SkewRsCode};
use crate::decoder::Branch;
use crate::field::SkewField;

/// Counts for one error weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WeightStats {
    pub trials: usize,
    /// Exact recovery of both error and message.
    pub successes: usize,
    /// The decoder reported a failure.
    pub detected_failures: usize,
    /// The decoder returned a valid correction other than the injected error.
    pub miscorrections: usize,
    pub echelon_branch: usize,
}

impl WeightStats {
    fn merge(&mut self, other: &WeightStats) {
        self.trials += other.trials;
        self.successes += other.successes;
        self.detected_failures += other.detected_failures;
        self.miscorrections += other.miscorrections;
        self.echelon_branch += other.echelon_branch;
    }
}

#[derive(Clone, Debug, Default)]
pub struct TrialStats {
    pub per_weight: BTreeMap<usize, WeightStats>,
    pub wall_time: Duration,
}

impl TrialStats {
    fn total(&self) -> WeightStats {
        let mut acc = WeightStats::default();
        for w in self.per_weight.values() {
            acc.merge(w);
        }
        acc
    }

    pub fn trials(&self) -> usize {
        self.total().trials
    }

    pub fn successes(&self) -> usize {
        self.total().successes
    }

    pub fn failures(&self) -> usize {
        let t = self.total();
        t.trials - t.successes
    }

    pub fn echelon_branch_count(&self) -> usize {
        self.total().echelon_branch
    }

    pub fn render(&self) -> String {
        let total = self.total();
        let mut out = format!(
            "trials = {}\nsuccesses = {}\nfailures = {}\nechelon_branch = {}\nwall_time = {}\n",
            total.trials,
            total.successes,
            total.trials - total.successes,
            total.echelon_branch,
            crate::dispatch::format_duration(self.wall_time),
        );
        for (w, s) in &self.per_weight {
            out.push_str(&format!(
                "weight {w}: trials = {}, successes = {}, detected_failures = {}, miscorrections = {}, echelon_branch = {}\n",
                s.trials, s.successes, s.detected_failures, s.miscorrections, s.echelon_branch
            ));
        }
        out
    }
}

/// A random error vector of exactly `weight` nonzero coordinates.
pub fn random_error<F: SkewField>(
    code: &SkewRsCode<F>,
    weight: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<F::Elem> {
    let field = code.field();
    let mut e = vec![field.zero(); code.length()];
    for k in index::sample(rng, code.length(), weight) {
        e[k] = field.random_nonzero(rng);
    }
    e
}

pub fn random_message<F: SkewField>(code: &SkewRsCode<F>, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..code.dimension()).map(|_| code.field().random(rng)).collect()
}

/// Run `trials` encode/corrupt/decode rounds, trial `i` using weight
/// `weights[i % weights.len()]` and its own stream of the seeded generator,
/// so results do not depend on scheduling.
pub fn simulate<F: SkewField>(
    code: &SkewRsCode<F>,
    trials: usize,
    weights: &[usize],
    seed: u64,
) -> Result<TrialStats, CodeError> {
    let n = code.length();
    if let Some(&w) = weights.iter().find(|&&w| w > n) {
        return Err(CodeError::InvalidWeight { weight: w, n });
    }
    if weights.is_empty() {
        return Ok(TrialStats::default());
    }
    let start = Instant::now();
    let field = code.field();
    let per_weight = (0..trials)
        .into_par_iter()
        .map(|i| {
            let weight = weights[i % weights.len()];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let m = random_message(code, &mut rng);
            let c = code.encode_vector(&m).expect("message has the code dimension");
            let e = random_error(code, weight, &mut rng);
            let y: Vec<F::Elem> = c.iter().zip(&e).map(|(a, b)| field.add(a, b)).collect();
            let report = code.decode(&y).expect("length n");
            let mut s = WeightStats { trials: 1, ..Default::default() };
            if report.branch == Some(Branch::Echelon) {
                s.echelon_branch = 1;
            }
            match &report.correction {
                Some(fix) if fix.error == e && fix.message == code.ring().poly(m) => s.successes = 1,
                Some(_) => s.miscorrections = 1,
                None => s.detected_failures = 1,
            }
            (weight, s)
        })
        .fold(BTreeMap::new, |mut acc: BTreeMap<usize, WeightStats>, (w, s)| {
            acc.entry(w).or_default().merge(&s);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, s) in b {
                a.entry(w).or_default().merge(&s);
            }
            a
        });
    Ok(TrialStats { per_weight, wall_time: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn small_code() -> SkewRsCode<FiniteField> {
        let f = FiniteField::with_modulus_text(2, Some(12), "a^12 + a^7 + a^6 + a^5 + a^3 + a + 1", "a", 10)
            .unwrap();
        let a = f.generator();
        SkewRsCode::new(f, a, 0, 5).unwrap()
    }

    #[test]
    fn deterministic_and_complete() {
        let code = small_code();
        let a = simulate(&code, 300, &[0, 1, 2], 7).unwrap();
        let b = simulate(&code, 300, &[0, 1, 2], 7).unwrap();
        assert_eq!(a.per_weight, b.per_weight);
        assert_eq!(a.trials(), 300);
        assert_eq!(a.successes(), 300);
        assert_eq!(a.per_weight[&0].echelon_branch + a.per_weight[&1].echelon_branch, 0);
    }

    #[test]
    fn weight_beyond_capability_is_fully_accounted() {
        let code = small_code();
        let stats = simulate(&code, 200, &[3], 1).unwrap();
        let w = stats.per_weight[&3];
        assert_eq!(w.trials, w.successes + w.detected_failures + w.miscorrections);
        assert!(simulate(&code, 1, &[7], 1).is_err());
    }
}
