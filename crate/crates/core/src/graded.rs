//! Ratliff–Rush closures and invariants of the associated graded module `G_I(M)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::module::{FractionalModule, PowerCache};

/// An `a`-invariant: the top nonvanishing degree of a local cohomology module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AInvariant {
    MinusInfinity,
    Finite(i64),
}

impl AInvariant {
    pub fn finite(self) -> Option<i64> {
        match self {
            AInvariant::MinusInfinity => None,
            AInvariant::Finite(v) => Some(v),
        }
    }

    pub fn shifted(self, by: i64) -> AInvariant {
        match self {
            AInvariant::MinusInfinity => AInvariant::MinusInfinity,
            AInvariant::Finite(v) => AInvariant::Finite(v + by),
        }
    }

    /// True when the invariant is at most `bound` (always true for `-inf`).
    pub fn at_most(self, bound: i64) -> bool {
        self.finite().is_none_or(|v| v <= bound)
    }
}

impl fmt::Display for AInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AInvariant::MinusInfinity => f.write_str("-inf"),
            AInvariant::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for AInvariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            AInvariant::MinusInfinity => serializer.serialize_str("-inf"),
            AInvariant::Finite(v) => serializer.serialize_i64(*v),
        }
    }
}

/// Invariants of `G_I(M)` for `d = 1`, or their image under a dimension lift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedInvariants {
    pub dim: u32,
    pub depth: u32,
    /// `a_0, ..., a_dim`.
    pub a: Vec<AInvariant>,
    pub reg: i64,
    /// `ℓ(H^0(G_I(M))_n)` for `n = 0..=pn`.
    pub h0_lengths: Vec<i64>,
    /// `ℓ(G_I(M)_n / H^0(G_I(M))_n)` for `n = 0..=pn`.
    pub gbar_h: Vec<i64>,
    /// Maximal generating degree of `G_I(M)`.
    pub delta: u32,
}

impl GradedInvariants {
    pub fn a_invariant(&self, i: usize) -> AInvariant {
        self.a.get(i).copied().unwrap_or(AInvariant::MinusInfinity)
    }

    /// Adjoins `k` variables: depth grows by `k`, `a_{i+k} = a_i - k`, regularity is unchanged.
    pub fn lift(&self, k: u32) -> GradedInvariants {
        let mut a = vec![AInvariant::MinusInfinity; k as usize];
        a.extend(self.a.iter().map(|x| x.shifted(-(k as i64))));
        let gbar_h = if k == 0 {
            self.gbar_h.clone()
        } else {
            let mut h: Vec<i64> = self.gbar_h.iter().zip(&self.h0_lengths).map(|(g, z)| g + z).collect();
            for _ in 0..k {
                for n in 1..h.len() {
                    h[n] += h[n - 1];
                }
            }
            h
        };
        GradedInvariants {
            dim: self.dim + k,
            depth: self.depth + k,
            a,
            reg: self.reg,
            h0_lengths: if k == 0 { self.h0_lengths.clone() } else { vec![0; self.h0_lengths.len()] },
            gbar_h,
            delta: self.delta,
        }
    }
}

/// Ratliff–Rush closures `~(I^n M)` for a fixed pair, memoized.
///
/// The colons `I^{n+l} M : I^l` increase with `l` and are constant once
/// `n + l` reaches the reduction number, which equals the postulation number
/// in dimension one. The scan starts there and stops at the first pair of
/// equal consecutive colons.
pub struct RatliffRush<'a> {
    cache: &'a mut PowerCache,
    ideal_powers: PowerCache,
    stable_from: u32,
    l_max: u32,
    closures: Vec<Option<FractionalModule>>,
}

impl<'a> RatliffRush<'a> {
    pub fn new(cache: &'a mut PowerCache, stable_from: u32, l_max: u32) -> Self {
        let ring = FractionalModule::ring(cache.ideal().semigroup());
        let ideal_powers = PowerCache::new(cache.ideal(), &ring);
        RatliffRush { cache, ideal_powers, stable_from, l_max, closures: Vec::new() }
    }

    pub fn cache(&mut self) -> &mut PowerCache {
        self.cache
    }

    /// `~(I^n M)`.
    pub fn closure(&mut self, n: u32) -> Result<FractionalModule> {
        if let Some(Some(m)) = self.closures.get(n as usize) {
            return Ok(m.clone());
        }
        let m = self.compute(n)?;
        if self.closures.len() <= n as usize {
            self.closures.resize(n as usize + 1, None);
        }
        self.closures[n as usize] = Some(m.clone());
        Ok(m)
    }

    fn compute(&mut self, n: u32) -> Result<FractionalModule> {
        let base = self.cache.base().clone();
        if n == 0 {
            // M : I^l contains M and lies inside M, so it is M itself.
            return Ok(base);
        }
        let mut l = self.stable_from.saturating_sub(n).max(1);
        let mut prev = self.colon(&base, n, l)?;
        loop {
            if l >= self.l_max {
                return Err(Error::NonStabilizing { what: "Ratliff-Rush colon", limit: self.l_max });
            }
            l += 1;
            let next = self.colon(&base, n, l)?;
            if next == prev {
                return Ok(next);
            }
            prev = next;
        }
    }

    fn colon(&mut self, base: &FractionalModule, n: u32, l: u32) -> Result<FractionalModule> {
        let target = self.cache.get(n + l)?;
        let il = self.ideal_powers.get(l)?;
        base.colon(&target, &il)
    }

    /// `ℓ((~(I^{n+1} M) ∩ I^n M) / I^{n+1} M)`.
    pub fn h0_piece(&mut self, n: u32) -> Result<i64> {
        let rr = self.closure(n + 1)?;
        let lower = self.cache.get(n)?;
        let upper = self.cache.get(n + 1)?;
        let meet = rr.intersection(&lower)?;
        Ok(meet.length_quotient(&upper)? as i64)
    }
}

/// Invariants of `G_I(M)` in dimension one from the Hilbert data and the `H^0` pieces.
pub fn graded_invariants(rr: &mut RatliffRush<'_>, hdata: &HilbertData) -> Result<GradedInvariants> {
    let pn = hdata.pn;
    let mut h0 = Vec::with_capacity(pn as usize + 1);
    for n in 0..=pn {
        h0.push(rr.h0_piece(n)?);
    }
    let a0 = match h0.iter().rposition(|&v| v != 0) {
        Some(n) => AInvariant::Finite(n as i64),
        None => AInvariant::MinusInfinity,
    };
    let a1 = pn as i64 - 1;
    if let AInvariant::Finite(v) = a0 {
        if v >= a1 {
            return Err(Error::InvariantViolation(format!("a0 = {v} is not below a1 = {a1}")));
        }
    }
    let gbar_h = h0.iter().enumerate().map(|(n, z)| hdata.value(n as u32) - z).collect();
    Ok(GradedInvariants {
        dim: 1,
        depth: if h0.iter().all(|&v| v == 0) { 1 } else { 0 },
        a: vec![a0, AInvariant::Finite(a1)],
        reg: pn as i64,
        h0_lengths: h0,
        gbar_h,
        delta: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_numerator;
    use crate::semigroup::NumericalSemigroup;

    fn analyze(gens: &[u32], ideal: &[u32], module_is_m: bool) -> (HilbertData, GradedInvariants, FractionalModule) {
        let s = NumericalSemigroup::from_generators(gens).unwrap();
        let i = FractionalModule::monomial_ideal(&s, ideal).unwrap();
        let m = if module_is_m { FractionalModule::maximal_ideal(&s) } else { FractionalModule::ring(&s) };
        let mut cache = PowerCache::new(&i, &m);
        let h = hilbert_numerator(&mut cache, 4, 64).unwrap();
        let mut rr = RatliffRush::new(&mut cache, h.pn, 64);
        let g = graded_invariants(&mut rr, &h).unwrap();
        let closure = rr.closure(1).unwrap();
        (h, g, closure)
    }

    #[test]
    fn cusp_is_cohen_macaulay() {
        let (_, g, closure) = analyze(&[2, 3], &[2, 3], false);
        assert_eq!(g.a, vec![AInvariant::MinusInfinity, AInvariant::Finite(0)]);
        assert_eq!(g.reg, 1);
        assert_eq!(g.depth, 1);
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(closure, FractionalModule::maximal_ideal(&s));

        let (_, g, _) = analyze(&[2, 3], &[2, 3], true);
        assert_eq!(g.reg, 0);
        assert_eq!(g.depth, 1);
    }

    #[test]
    fn t3_a_three() {
        let (h, g, closure) = analyze(&[3, 4, 5], &[3, 4], false);
        assert_eq!(h.pn, 2);
        assert_eq!(g.h0_lengths, vec![1, 0, 0]);
        assert_eq!(g.a, vec![AInvariant::Finite(0), AInvariant::Finite(1)]);
        assert_eq!(g.reg, 2);
        assert_eq!(g.depth, 0);
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(closure, FractionalModule::maximal_ideal(&s));

        let lifted = g.lift(1);
        assert_eq!(lifted.depth, 1);
        assert_eq!(lifted.reg, 2);
        assert_eq!(lifted.a_invariant(1), AInvariant::Finite(-1));
        assert_eq!(lifted.a_invariant(2), AInvariant::Finite(0));
        assert_eq!(lifted.lift(2), g.lift(3));
    }
}
