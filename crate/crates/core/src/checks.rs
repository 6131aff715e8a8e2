//! Structural identities that every analyzed instance must satisfy.
//!
//! A failing check means either an engine bug or a genuine counterexample, so
//! callers surface them loudly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::analysis::InstanceInvariants;
use crate::error::Result;
use crate::hilbert::hilbert_samuel;
use crate::module::PowerCache;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub holds: bool,
    pub detail: String,
}

struct Collector(Vec<Check>);

impl Collector {
    fn check(&mut self, id: &'static str, holds: bool, detail: impl FnOnce() -> String) {
        let detail = if holds { String::new() } else { detail() };
        self.0.push(Check { id, holds, detail });
    }
}

/// Runs the structural suite on a dimension-one analysis.
pub fn run_checks(inv: &InstanceInvariants, cache: &mut PowerCache) -> Result<Vec<Check>> {
    let mut out = Collector(Vec::new());
    let h = &inv.hilbert;
    let g = &inv.graded;
    let (e0, b, pn) = (inv.e0(), inv.b as i64, inv.pn as i64);
    let base = cache.base().clone();

    let mut partial = true;
    for n in 0..=inv.pn + 1 {
        if hilbert_samuel(cache, n)? != h.samuel(n) {
            partial = false;
        }
    }
    out.check("partial_sums", partial, || "ℓ(M/I^{n+1}M) differs from the sum of H".into());

    out.check("hilbert_at_most_e0", h.h.iter().all(|&v| v <= e0), || format!("H = {:?}, e0 = {e0}", h.h));
    out.check("e0_is_min_valuation", e0 == inv.ideal_min_valuation as i64, || {
        format!("e0 = {e0}, min v(I) = {}", inv.ideal_min_valuation)
    });

    let mut lengths_ok = true;
    for c in &inv.certificates {
        let xm = base.scaled(&c.element)?;
        let len = base.length_quotient(&xm)? as i64;
        lengths_ok &= c.valuation as i64 == e0 && len == e0;
    }
    out.check("superficial_length", lengths_ok, || "ℓ(M/xM) or v(x) differs from e0".into());

    out.check("e0_of_maximal_power", inv.e0_mb == b * inv.e0_m, || {
        format!("e0(m^b, M) = {}, b e0(m, M) = {}", inv.e0_mb, b * inv.e0_m)
    });

    let strict = e0 != inv.e0_mb;
    out.check("gbar_zero_at_least_b", g.gbar_h[0] >= b, || format!("gbar(0) = {}", g.gbar_h[0]));
    out.check("gbar_zero_at_least_b_plus_one", !strict || g.gbar_h[0] > b, || {
        format!("gbar(0) = {}, e0 differs from e0(m^b, M)", g.gbar_h[0])
    });
    out.check("gbar_strictly_increasing", g.gbar_h.windows(2).all(|w| w[0] < w[1]), || {
        format!("gbar = {:?}", g.gbar_h)
    });

    let a0 = g.a_invariant(0);
    let a1 = g.a_invariant(1).finite().unwrap_or(i64::MIN);
    out.check("a0_below_a1", a0.finite().is_none_or(|v| v < a1), || format!("a0 = {a0}, a1 = {a1}"));
    out.check("reg_is_pn", g.reg == pn && a1 == pn - 1, || format!("reg = {}, pn = {pn}", g.reg));

    let lower = |extra: i64| (0..=inv.pn as usize).all(|n| h.h[n] >= n as i64 + b + extra + g.h0_lengths[n]);
    out.check("hilbert_lower_bound", lower(0), || format!("H = {:?}, h0 = {:?}", h.h, g.h0_lengths));
    out.check("hilbert_lower_bound_strict", !strict || lower(1), || {
        format!("H = {:?}, h0 = {:?}", h.h, g.h0_lengths)
    });
    let shape = |extra: i64| (0..=inv.pn as usize).all(|n| g.gbar_h[n] == n as i64 + b + extra);
    out.check("pn_at_most_e0_minus_b", pn <= e0 - b && (pn != e0 - b || shape(0)), || {
        format!("pn = {pn}, e0 - b = {}", e0 - b)
    });
    out.check("pn_at_most_e0_minus_b_minus_one", !strict || (pn < e0 - b && (pn != e0 - b - 1 || shape(1))), || {
        format!("pn = {pn}, e0 - b - 1 = {}", e0 - b - 1)
    });

    let stable = h.h.iter().skip(inv.pn as usize).all(|&v| v == e0);
    let h0_vanish = g.h0_lengths.iter().enumerate().all(|(n, &z)| a0.finite().is_some_and(|a| n as i64 <= a) || z == 0);
    out.check("grothendieck_serre", stable && h0_vanish, || {
        format!("H = {:?}, h0 = {:?}, a0 = {a0}", h.h, g.h0_lengths)
    });

    let sums_ok = inv.reductions.iter().all(|r| r.e1 == inv.e1() && r.e2 == inv.e2());
    out.check("reduction_sums", sums_ok, || format!("{:?} against e = {:?}", inv.reductions, inv.e));
    let r_ok = inv.reductions.iter().all(|r| r.reduction_number == inv.pn);
    out.check("reduction_number_is_pn", r_ok, || format!("{:?}, pn = {pn}", inv.reductions));

    if g.depth == 1 {
        if let Some(c) = inv.certificates.first() {
            let xm = base.scaled(&c.element)?;
            let mut quotient = Vec::new();
            for n in 0..=inv.pn + 1 {
                let lo = cache.get(n)?.sum(&xm)?;
                let hi = cache.get(n + 1)?.sum(&xm)?;
                quotient.push(lo.length_quotient(&hi)? as i64);
            }
            let mut q = h.q.clone();
            q.resize(quotient.len(), 0);
            out.check("regular_element_numerator", q == quotient, || {
                format!("Q = {q:?}, Hilbert function of M/xM = {quotient:?}")
            });
        }
    }
    Ok(out.0)
}
