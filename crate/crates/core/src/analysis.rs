//! Full analysis of a pair `(I, M)`: every invariant used by the bound checks.

use alloc::boxed::Box;
use alloc::vec::Vec;

use serde::Serialize;

use crate::checks::{run_checks, Check};
use crate::error::{Error, Result};
use crate::graded::{graded_invariants, GradedInvariants, RatliffRush};
use crate::hilbert::{hilbert_numerator, HilbertData};
use crate::module::{FractionalModule, PowerCache};
use crate::reductions::{e_from_reduction, largest_b, min_reduction_number, sample_certificates, SuperficialCertificate};

/// Tunable limits of an analysis run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisOptions {
    pub n_max: u32,
    pub trials: u32,
    pub samples: u32,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { n_max: 64, trials: 32, samples: 8, seed: 0 }
    }
}

/// `r_(x)` and the reduction sums for one certified superficial element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionSample {
    pub reduction_number: u32,
    pub e1: i64,
    pub e2: i64,
}

/// Quantities that only make sense when `M ≅ A` in dimension one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    /// `ℓ(A / ~I)`.
    pub length_rr_quotient: i64,
    /// `μ(~I)`.
    pub mu_rr: u32,
    /// `ℓ(A / Ī)`.
    pub integral_colength: i64,
    pub rr_is_maximal: bool,
    pub square_is_maximal_times_ideal: bool,
    pub ideal_is_maximal: bool,
    /// `I^n = 𝔪^n` for `n = 2..=5`.
    pub powers_match_maximal: Vec<bool>,
    pub depth_g_maximal: u32,
}

/// Everything the bound and characterization evaluators need.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceInvariants {
    pub semigroup: Vec<u32>,
    pub conductor: u32,
    pub d: u32,
    pub lift: u32,
    pub b: u32,
    pub e: [i64; 3],
    pub pn: u32,
    pub hilbert: HilbertData,
    pub graded: GradedInvariants,
    /// `ℓ(M / IM)`.
    pub length_m_im: i64,
    pub mu_ideal: u32,
    pub mu_maximal: u32,
    pub mu_module: u32,
    pub ideal_min_valuation: u32,
    pub semigroup_is_regular: bool,
    /// `e_0(𝔪^b, M)`.
    pub e0_mb: i64,
    /// `e_0(𝔪, M)` and `e_1(𝔪, M)`.
    pub e0_m: i64,
    pub e1_m: i64,
    /// Minimum of `r_(x)` over the sampled superficial elements.
    pub r_sampled: Option<u32>,
    pub reductions: Vec<ReductionSample>,
    pub certificates: Vec<SuperficialCertificate>,
    pub ring: Option<RingInvariants>,
    /// The dimension-one instance this one was lifted from.
    #[serde(skip)]
    pub base: Option<Box<InstanceInvariants>>,
}

impl InstanceInvariants {
    pub fn e0(&self) -> i64 {
        self.e[0]
    }

    pub fn e1(&self) -> i64 {
        self.e[1]
    }

    pub fn e2(&self) -> i64 {
        self.e[2]
    }

    /// `M ≅ A`, i.e. `M` is cyclic.
    pub fn module_is_ring(&self) -> bool {
        self.mu_module == 1
    }

    /// Adjoins `k` analytically independent variables to `A` and to `I`.
    ///
    /// The Hilbert numerator, coefficients, lengths and reduction numbers are
    /// kept; `μ(I)` and `μ(𝔪)` grow by `k`; the graded invariants shift. A new
    /// variable lies in `I` but not in `𝔪^2`, so `b` drops to 1.
    pub fn lift(&self, k: u32) -> InstanceInvariants {
        if k == 0 {
            return self.clone();
        }
        let hilbert = self.hilbert.lift(k);
        let mut out = self.clone();
        out.d += k;
        out.lift += k;
        out.pn = hilbert.pn;
        out.hilbert = hilbert;
        out.graded = self.graded.lift(k);
        out.mu_ideal += k;
        out.mu_maximal += k;
        if out.b != 1 {
            out.b = 1;
            out.e0_mb = out.e0_m;
        }
        out.ring = None;
        out.base = Some(Box::new(match &self.base {
            Some(b) => (**b).clone(),
            None => self.clone(),
        }));
        out
    }
}

/// An analyzed instance with its structural self-checks.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub invariants: InstanceInvariants,
    pub checks: Vec<Check>,
}

fn power_equal(cache_a: &mut PowerCache, cache_b: &mut PowerCache, n: u32) -> Result<bool> {
    Ok(cache_a.get(n)? == cache_b.get(n)?)
}

/// Analyzes `(I, M)` in dimension one; `lift` then adjoins that many variables.
pub fn analyze(ideal: &FractionalModule, module: &FractionalModule, lift: u32, opts: &AnalysisOptions) -> Result<Analysis> {
    let ring = ideal.semigroup().clone();
    if ideal.min_valuation() == 0 {
        return Err(Error::NotPrimary);
    }
    let a = FractionalModule::ring(&ring);
    if !a.contains_module(ideal)? {
        return Err(Error::NotPrimary);
    }
    let maximal = FractionalModule::maximal_ideal(&ring);

    let b = largest_b(ideal, module)?;
    let mut cache = PowerCache::new(ideal, module);
    let hilbert = hilbert_numerator(&mut cache, (b + 2).max(4), opts.n_max)?;
    let pn = hilbert.pn;

    let certificates = sample_certificates(&mut cache, pn, b, opts.samples, opts.trials, opts.seed)?;
    let mut reductions = Vec::with_capacity(certificates.len());
    for c in &certificates {
        let (e1, e2) = e_from_reduction(&mut cache, &c.element, c.reduction_number)?;
        reductions.push(ReductionSample { reduction_number: c.reduction_number, e1, e2 });
    }

    let mut rr = RatliffRush::new(&mut cache, pn, opts.n_max);
    let graded = graded_invariants(&mut rr, &hilbert)?;

    let mu_module = module.mu()?;
    let mu_ideal = ideal.mu()?;
    let mu_maximal = ring.embedding_dimension() as u32;

    let mut m_cache = PowerCache::new(&maximal, module);
    let m_hilbert = hilbert_numerator(&mut m_cache, 4, opts.n_max)?;
    let mb = maximal.power_times(b, &a)?;
    let mut mb_cache = PowerCache::new(&mb, module);
    let mb_hilbert = hilbert_numerator(&mut mb_cache, 4, opts.n_max)?;

    let ring_invariants = if mu_module == 1 {
        let rr_i = rr.closure(1)?;
        let m_module = m_cache.get(1)?;
        let mut powers_match = Vec::new();
        for n in 2..=5 {
            powers_match.push(power_equal(rr.cache(), &mut m_cache, n)?);
        }
        let im = rr.cache().get(1)?;
        let i2m = rr.cache().get(2)?;
        let mut m_rr = RatliffRush::new(&mut m_cache, m_hilbert.pn, opts.n_max);
        let m_graded = graded_invariants(&mut m_rr, &m_hilbert)?;
        Some(RingInvariants {
            length_rr_quotient: module.length_quotient(&rr_i)? as i64,
            mu_rr: rr_i.mu()?,
            integral_colength: ideal.integral_closure_colength() as i64,
            rr_is_maximal: rr_i == m_module,
            square_is_maximal_times_ideal: i2m == maximal.product(&im)?,
            ideal_is_maximal: im == m_module,
            powers_match_maximal: powers_match,
            depth_g_maximal: m_graded.depth,
        })
    } else {
        None
    };

    let invariants = InstanceInvariants {
        semigroup: ring.minimal_generators().to_vec(),
        conductor: ring.conductor(),
        d: 1,
        lift: 0,
        b,
        e: hilbert.e,
        pn,
        length_m_im: hilbert.h[0],
        hilbert,
        graded,
        mu_ideal,
        mu_maximal,
        mu_module,
        ideal_min_valuation: ideal.min_valuation(),
        semigroup_is_regular: ring.conductor() == 0,
        e0_mb: mb_hilbert.e0(),
        e0_m: m_hilbert.e0(),
        e1_m: m_hilbert.e1(),
        r_sampled: min_reduction_number(&certificates),
        reductions,
        certificates,
        ring: ring_invariants,
        base: None,
    };
    let checks = run_checks(&invariants, &mut cache)?;
    Ok(Analysis { invariants: invariants.lift(lift), checks })
}
