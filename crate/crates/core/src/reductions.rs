//! Superficial elements, reduction numbers and the largest `b` with `IM ⊆ 𝔪^b M`.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{FractionalModule, PowerCache};
use crate::rational::Rational;
use crate::valuation::SeriesElement;

/// A superficial element together with the range over which it was verified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperficialCertificate {
    pub element: SeriesElement,
    pub valuation: u32,
    /// Threshold `c` in `(I^{n+1}M : x) ∩ I^c M = I^n M`.
    pub c: u32,
    /// Largest `n` for which the identity was checked.
    pub verified_to: u32,
    pub trials_used: u32,
    pub seed: u64,
    /// `r_(x)(I, M)`.
    pub reduction_number: u32,
}

fn trial_rng(seed: u64, trial: u32) -> ChaCha8Rng {
    let mixed = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .rotate_left(17)
        ^ (trial as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// A random combination of `gens` with coefficients in `{-r, ..., r} \ {0}`.
fn random_combination(gens: &[SeriesElement], r: i64, rng: &mut ChaCha8Rng) -> SeriesElement {
    if gens.len() == 1 {
        return gens[0].clone();
    }
    let mut acc = SeriesElement::polynomial([]);
    for g in gens {
        let mut c = rng.gen_range(-r..r);
        if c >= 0 {
            c += 1;
        }
        acc = acc.add(&g.shifted(0, &Rational::from_int(c)));
    }
    acc
}

fn principal(ring: &crate::NumericalSemigroup, x: &SeriesElement) -> Result<FractionalModule> {
    FractionalModule::from_generators(ring, core::slice::from_ref(x))
}

/// Checks `(I^{n+1} M : x) ∩ I^c M = I^n M` for `c <= n <= verified_to`.
pub fn verify_superficial(cache: &mut PowerCache, x: &SeriesElement, c: u32, verified_to: u32) -> Result<bool> {
    let ring = cache.ideal().semigroup().clone();
    let xa = principal(&ring, x)?;
    let ic = cache.get(c)?;
    for n in c..=verified_to {
        let upper = cache.get(n + 1)?;
        let lower = cache.get(n)?;
        if ic.colon(&upper, &xa)? != lower {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r_(x)(I, M)`: the least `n` with `I^{n+1} M = x I^n M`.
pub fn reduction_number(cache: &mut PowerCache, x: &SeriesElement, n_max: u32) -> Result<u32> {
    for n in 0..=n_max {
        let upper = cache.get(n + 1)?;
        if cache.get(n)?.scaled(x)? == upper {
            return Ok(n);
        }
    }
    Err(Error::ScanExhausted { limit: n_max })
}

/// Searches random combinations of the generators of `I` for an element
/// that is superficial, verified with `c = pn` up to `pn + b + 4`.
pub fn find_superficial(cache: &mut PowerCache, pn: u32, b: u32, trials: u32, seed: u64) -> Result<SuperficialCertificate> {
    let gens = cache.ideal().minimal_generators()?;
    let verified_to = pn + b + 4;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let x = random_combination(&gens, 3 + trial as i64, &mut rng);
        let Some(v) = x.valuation() else { continue };
        if v != cache.ideal().min_valuation() {
            continue;
        }
        if verify_superficial(cache, &x, pn, verified_to)? {
            let r = reduction_number(cache, &x, verified_to)?;
            return Ok(SuperficialCertificate {
                element: x,
                valuation: v,
                c: pn,
                verified_to,
                trials_used: trial + 1,
                seed,
                reduction_number: r,
            });
        }
    }
    Err(Error::SearchExhausted { trials })
}

/// `(e_1, e_2)` from `sum_j ℓ(I^{j+1}M / x I^j M)` and its `j`-weighted version.
pub fn e_from_reduction(cache: &mut PowerCache, x: &SeriesElement, r: u32) -> Result<(i64, i64)> {
    let mut e1 = 0i64;
    let mut e2 = 0i64;
    for j in 0..r {
        let upper = cache.get(j + 1)?;
        let shifted = cache.get(j)?.scaled(x)?;
        let len = upper.length_quotient(&shifted)? as i64;
        e1 += len;
        e2 += j as i64 * len;
    }
    Ok((e1, e2))
}

/// Independent superficial certificates, one per sample seed.
pub fn sample_certificates(
    cache: &mut PowerCache,
    pn: u32,
    b: u32,
    samples: u32,
    trials: u32,
    seed: u64,
) -> Result<Vec<SuperficialCertificate>> {
    (0..samples)
        .map(|s| find_superficial(cache, pn, b, trials, seed.wrapping_add((s as u64) << 32)))
        .collect()
}

/// Minimum of `r_(x)` over sampled superficial elements: an upper estimate of `r(I, M)`.
pub fn min_reduction_number(certificates: &[SuperficialCertificate]) -> Option<u32> {
    certificates.iter().map(|c| c.reduction_number).min()
}

/// The largest `b >= 1` with `I M ⊆ 𝔪^b M`.
pub fn largest_b(ideal: &FractionalModule, module: &FractionalModule) -> Result<u32> {
    let maximal = FractionalModule::maximal_ideal(ideal.semigroup());
    let im = ideal.product(module)?;
    let mut powers = PowerCache::new(&maximal, module);
    let mut b = 1;
    while powers.get(b + 1)?.contains_module(&im)? {
        b += 1;
    }
    Ok(b)
}
