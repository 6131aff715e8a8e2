//! Randomized soundness sweep over semigroup rings of bounded genus.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use hilbound_core::{NumericalSemigroup, Rational};

use crate::instance::{monomial, Generator, InstanceFile, ModuleName, ModuleSpec, OptionsSpec};
use crate::report::{run, Outcome, Overrides, RunError};

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub count: u32,
    pub seed: u64,
    pub genus_max: u32,
    pub overrides: Overrides,
}

fn instance_rng(seed: u64, index: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn random_semigroup(rng: &mut ChaCha8Rng, genus_max: u32) -> Vec<u32> {
    let m = rng.gen_range(1..=genus_max + 1);
    if m == 1 {
        return vec![1];
    }
    for _ in 0..64 {
        let mut gens = vec![m];
        let extra = rng.gen_range(1..=3);
        for _ in 0..extra {
            gens.push(rng.gen_range(m + 1..=2 * m + genus_max));
        }
        gens.sort_unstable();
        gens.dedup();
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            if s.genus() as u32 <= genus_max {
                return s.minimal_generators().to_vec();
            }
        }
    }
    // Maximal embedding dimension, genus m - 1.
    (m..2 * m).collect()
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    let c = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

/// Monomials and binomials with exponents among the small positive elements of `s`.
fn random_generators(rng: &mut ChaCha8Rng, s: &NumericalSemigroup, count: usize) -> Vec<Generator> {
    let members: Vec<u32> = s.elements_below(s.conductor() + 2 * s.multiplicity() + 10).filter(|&e| e > 0).collect();
    let small = &members[..members.len().min(8)];
    (0..count)
        .map(|_| {
            let e = *small.choose(rng).expect("nonempty");
            if rng.gen_bool(0.4) {
                let higher: Vec<u32> = members.iter().copied().filter(|&f| f > e).collect();
                let f = *higher.choose(rng).expect("members extend past e");
                vec![(1.into(), 1.into(), e), (coefficient(rng).into(), 1.into(), f)]
            } else {
                monomial(e)
            }
        })
        .collect()
}

/// The `index`-th instance of the sweep with the given seed.
pub fn generate(seed: u64, index: u32, genus_max: u32) -> InstanceFile {
    let mut rng = instance_rng(seed, index);
    let semigroup = random_semigroup(&mut rng, genus_max);
    let s = NumericalSemigroup::from_generators(&semigroup).expect("valid semigroup");
    let n_gens = rng.gen_range(1..=3);
    let ideal = random_generators(&mut rng, &s, n_gens);
    let module = match rng.gen_range(0..4) {
        0 | 1 => ModuleSpec::Named(ModuleName::Ring),
        2 => ModuleSpec::Generators(s.minimal_generators().iter().map(|&e| monomial(e)).collect()),
        _ => {
            // A fractional ideal that need not lie in A.
            let n = rng.gen_range(1..=2);
            let gens = (0..n).map(|_| monomial(rng.gen_range(0..=s.conductor() + 1))).collect();
            ModuleSpec::Generators(gens)
        }
    };
    InstanceFile {
        id: format!("search-{seed}-{index:04}"),
        semigroup,
        ideal,
        module,
        lift: rng.gen_range(0..=2),
        options: OptionsSpec { seed: Some(seed ^ index as u64), ..OptionsSpec::default() },
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NearMiss {
    pub instance: String,
    pub bound: &'static str,
    pub slack: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub instance: String,
    pub violations: Vec<String>,
    /// The smallest failing sub-instance found by dropping generators.
    pub minimized: InstanceFile,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchSummary {
    pub count: u32,
    pub seed: u64,
    pub genus_max: u32,
    pub analyzed: u32,
    pub skipped: BTreeMap<String, String>,
    pub errors: BTreeMap<String, String>,
    pub violations: Vec<Violation>,
    /// Number of applicable evaluations per bound.
    pub applicable: BTreeMap<&'static str, u32>,
    /// Number of instances attaining each bound.
    pub equality: BTreeMap<&'static str, u32>,
    pub near_misses: Vec<NearMiss>,
}

impl SearchSummary {
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }
}

/// Drops ideal and module generators one at a time while the failure persists.
fn minimize(instance: &InstanceFile, overrides: &Overrides) -> InstanceFile {
    let fails = |inst: &InstanceFile| matches!(run(inst, overrides), Ok(o) if !o.passed());
    let mut best = instance.clone();
    loop {
        let mut candidates = Vec::new();
        for i in 0..best.ideal.len() {
            if best.ideal.len() > 1 {
                let mut c = best.clone();
                c.ideal.remove(i);
                candidates.push(c);
            }
        }
        if let ModuleSpec::Generators(g) = &best.module {
            for i in 0..g.len() {
                if g.len() > 1 {
                    let mut c = best.clone();
                    if let ModuleSpec::Generators(h) = &mut c.module {
                        h.remove(i);
                    }
                    candidates.push(c);
                }
            }
        }
        if best.lift > 0 {
            let mut c = best.clone();
            c.lift -= 1;
            candidates.push(c);
        }
        match candidates.into_iter().find(|c| fails(c)) {
            Some(c) => best = c,
            None => break,
        }
    }
    best.id = format!("{}-minimized", instance.id);
    best
}

/// Runs the sweep. Instances are analyzed in parallel; aggregation follows instance order.
pub fn search(config: &SearchConfig) -> (SearchSummary, Vec<Outcome>) {
    let instances: Vec<InstanceFile> = (0..config.count).map(|i| generate(config.seed, i, config.genus_max)).collect();
    let results: Vec<Result<Outcome, RunError>> = instances.par_iter().map(|inst| run(inst, &config.overrides)).collect();

    let mut summary = SearchSummary { count: config.count, seed: config.seed, genus_max: config.genus_max, ..Default::default() };
    let mut outcomes = Vec::new();
    let mut misses = Vec::new();
    for (inst, result) in instances.iter().zip(results) {
        let outcome = match result {
            Ok(o) => o,
            // Inputs rejected during validation are not counted.
            Err(e) if e.exit_code() == 2 => {
                summary.skipped.insert(inst.id.clone(), e.to_string());
                continue;
            }
            Err(e) => {
                summary.errors.insert(inst.id.clone(), e.to_string());
                continue;
            }
        };
        summary.analyzed += 1;
        for entry in outcome.bounds.entries.iter().filter(|e| e.applicable) {
            *summary.applicable.entry(entry.id).or_default() += 1;
            if entry.equality == Some(true) {
                *summary.equality.entry(entry.id).or_default() += 1;
            } else if let (Some(l), Some(r)) = (&entry.lhs, &entry.rhs) {
                misses.push(NearMiss { instance: inst.id.clone(), bound: entry.id, slack: r - l });
            }
        }
        if !outcome.passed() {
            summary.violations.push(Violation {
                instance: inst.id.clone(),
                violations: outcome.violations.clone(),
                minimized: minimize(inst, &config.overrides),
            });
        }
        outcomes.push(outcome);
    }
    misses.retain(|m| m.slack > Rational::ZERO);
    misses.sort_by(|a, b| a.slack.cmp(&b.slack).then_with(|| a.instance.cmp(&b.instance)).then(a.bound.cmp(b.bound)));
    misses.truncate(20);
    summary.near_misses = misses;
    (summary, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic_and_bounded() {
        for i in 0..40 {
            let a = generate(5, i, 6);
            assert_eq!(a, generate(5, i, 6));
            let s = NumericalSemigroup::from_generators(&a.semigroup).unwrap();
            assert!(s.genus() <= 6);
        }
        assert!((0..20).all(|i| generate(1, i, 0).semigroup == vec![1]));
    }
}
