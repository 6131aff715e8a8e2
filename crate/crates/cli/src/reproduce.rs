//! Golden reproductions of the classical examples.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use hilbound_core::hilbert::binomial;

use crate::corpus;
use crate::report::{run, Outcome, Overrides, RunError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    /// The maximal ideal of `k[[t^2, t^3]]`, on the ring and on `𝔪`.
    H4,
    T3,
    RvSharp,
    B2Lift,
}

impl FromStr for Example {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "h4" => Ok(Example::H4),
            "t3" => Ok(Example::T3),
            "rv-sharp" => Ok(Example::RvSharp),
            "b2-lift" => Ok(Example::B2Lift),
            _ => Err(format!("unknown example `{s}` (expected h4, t3, rv-sharp or b2-lift)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Reproduction {
    pub assertions: Vec<Assertion>,
}

impl Reproduction {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, what: impl Into<String>, expected: T, actual: T) {
        self.assertions.push(Assertion {
            what: what.into(),
            ok: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.ok)
    }
}

fn entry_equality(o: &Outcome, id: &str) -> Option<bool> {
    o.bounds.entry(id).and_then(|e| e.equality)
}

fn cusp_pair(r: &mut Reproduction, o: &Outcome, tag: &str, e1: i64, pn: u32) {
    let inv = o.invariants();
    r.eq(format!("{tag}: e0"), 2, inv.e0());
    r.eq(format!("{tag}: e1"), e1, inv.e1());
    r.eq(format!("{tag}: pn"), pn, inv.pn);
    r.eq(format!("{tag}: reg"), pn as i64, inv.graded.reg);
    r.eq(format!("{tag}: depth"), 1, inv.graded.depth);
    let c = o.bounds.characterization("e1_module_equality").expect("always evaluated");
    r.eq(format!("{tag}: equality characterization applicable"), false, c.applicable);
    r.eq(format!("{tag}: e1 = C(e0-b+1,2) + b - l(M/IM)"), true, c.conditions[0].holds);
}

fn t3_checks(r: &mut Reproduction, o: &Outcome, a: u32, lift: u32) {
    let inv = o.invariants();
    let e0 = a as i64;
    r.eq("l(A/I)", 2, inv.length_m_im);
    r.eq("e0", e0, inv.e0());
    r.eq("e1", binomial(e0, 2) - 1, inv.e1());
    r.eq("mu(I)", 2 + lift, inv.mu_ideal);
    r.eq("mu(m)", 3 + lift, inv.mu_maximal);
}

/// Rebuilds the example, analyzes it and compares against the known values.
pub fn reproduce(example: Example, a: u32, d: u32, overrides: &Overrides) -> Result<Reproduction, RunError> {
    let mut r = Reproduction::default();
    match example {
        Example::H4 => {
            let ring = run(&corpus::cusp(false), overrides)?;
            let module = run(&corpus::cusp(true), overrides)?;
            cusp_pair(&mut r, &ring, "(m, A)", 1, 1);
            cusp_pair(&mut r, &module, "(m, m)", 0, 0);
        }
        Example::T3 => {
            let o = run(&corpus::t3(a, 0), overrides)?;
            t3_checks(&mut r, &o, a, 0);
            r.eq("equality in e1 <= C(e0-b+1,2) + b - l(M/IM)", Some(true), entry_equality(&o, "e1_module"));
            let t2 = o.bounds.characterization("rossi_valla_extremal").expect("always evaluated");
            r.eq("extremal hypothesis", true, t2.conditions[0].holds);
            for c in &t2.consequences {
                r.eq(c.label, true, c.holds);
            }
            r.eq("depth G(I)", 0, o.invariants().graded.depth);
            let ring = o.invariants().ring.as_ref().expect("M = A");
            r.eq("I^n = m^n for n = 2..5", vec![true; 4], ring.powers_match_maximal.clone());
        }
        Example::RvSharp => {
            let o = run(&corpus::rv_sharp(a), overrides)?;
            r.eq("e1(m)", a as i64 - 1, o.invariants().e1());
            r.eq("mu(m)", a, o.invariants().mu_maximal);
            r.eq("equality in the Rossi-Valla bound", Some(true), entry_equality(&o, "e1_rossi_valla"));
        }
        Example::B2Lift => {
            let lift = d.saturating_sub(1);
            let o = run(&corpus::t3(a, lift), overrides)?;
            t3_checks(&mut r, &o, a, lift);
            let inv = o.invariants();
            r.eq("d", d, inv.d);
            r.eq("e2", binomial(inv.e0() - inv.b as i64 + 1, 3), inv.e2());
            r.eq("equality in e2 <= C(e0-b+1,3)", Some(true), entry_equality(&o, "e2_module"));
            let b2 = o.bounds.characterization("e2_module_equality").expect("always evaluated");
            r.eq("e2 characterization applicable", true, b2.applicable);
            for c in &b2.conditions {
                r.eq(c.label, true, c.holds);
            }
            r.eq("agreement with the dimension-one conditions", Some(true), b2.base_agreement);
        }
    }
    Ok(r)
}
