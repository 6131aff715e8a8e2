//! Upper bounds on Hilbert coefficients and the equality characterizations,
//! evaluated exactly on an analyzed instance.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::analysis::{InstanceInvariants, RingInvariants};
use crate::error::{Error, Result};
use crate::hilbert::binomial;
use crate::rational::Rational;

/// A named boolean.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub label: &'static str,
    pub holds: bool,
}

fn clause(label: &'static str, holds: bool) -> Clause {
    Clause { label, holds }
}

/// One inequality `lhs <= rhs`. Non-applicable entries carry no verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    pub reason: String,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    /// Necessary consequences of equality, checked only when equality holds.
    pub implications: Vec<Clause>,
    /// Set when the instance cannot certify every hypothesis of the statement.
    pub hypotheses_approximated: bool,
}

impl BoundEntry {
    fn skip(id: &'static str, statement: &'static str, reason: String) -> Self {
        BoundEntry {
            id,
            statement,
            applicable: false,
            reason,
            lhs: None,
            rhs: None,
            holds: None,
            equality: None,
            implications: Vec::new(),
            hypotheses_approximated: false,
        }
    }

    fn compare(id: &'static str, statement: &'static str, lhs: Rational, rhs: Rational) -> Self {
        BoundEntry {
            id,
            statement,
            applicable: true,
            reason: String::from("hypotheses hold"),
            holds: Some(lhs <= rhs),
            equality: Some(lhs == rhs),
            lhs: Some(lhs),
            rhs: Some(rhs),
            implications: Vec::new(),
            hypotheses_approximated: false,
        }
    }

    fn ints(id: &'static str, statement: &'static str, lhs: i64, rhs: i64) -> Self {
        Self::compare(id, statement, Rational::from_int(lhs), Rational::from_int(rhs))
    }

    /// False only for an applicable entry whose inequality or implications fail.
    pub fn is_sound(&self) -> bool {
        self.holds != Some(false) && self.implications.iter().all(|c| c.holds)
    }
}

/// A set of conditions that must agree, with consequences of any of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub id: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    pub reason: String,
    pub conditions: Vec<Clause>,
    pub all_equivalent: bool,
    pub consequences: Vec<Clause>,
    /// Member-wise agreement with the dimension-one instance before lifting.
    pub base_agreement: Option<bool>,
    pub violation: bool,
}

impl Characterization {
    fn new(id: &'static str, statement: &'static str, gate: Gate, conditions: Vec<Clause>) -> Self {
        let all_equivalent = conditions.windows(2).all(|w| w[0].holds == w[1].holds);
        let (applicable, reason) = gate.into_parts();
        Characterization {
            id,
            statement,
            applicable,
            reason,
            conditions,
            all_equivalent,
            consequences: Vec::new(),
            base_agreement: None,
            violation: applicable && !all_equivalent,
        }
    }

    fn any_condition(&self) -> bool {
        self.conditions.iter().any(|c| c.holds)
    }

    fn with_consequences(mut self, consequences: Vec<Clause>) -> Self {
        if self.applicable && self.any_condition() {
            self.violation |= consequences.iter().any(|c| !c.holds);
            self.consequences = consequences;
        }
        self
    }
}

/// Everything evaluated on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub characterizations: Vec<Characterization>,
}

impl BoundReport {
    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn characterization(&self, id: &str) -> Option<&Characterization> {
        self.characterizations.iter().find(|c| c.id == id)
    }

    /// Ids of failing entries and violated characterizations.
    pub fn violations(&self) -> Vec<&'static str> {
        let bad_entries = self.entries.iter().filter(|e| !e.is_sound()).map(|e| e.id);
        let bad_chars = self.characterizations.iter().filter(|c| c.violation).map(|c| c.id);
        bad_entries.chain(bad_chars).collect()
    }
}

/// Hypotheses of a statement, each with a name for the report.
struct Gate(Vec<(&'static str, bool)>);

impl Gate {
    fn new(hyps: &[(&'static str, bool)]) -> Self {
        Gate(hyps.to_vec())
    }

    fn holds(&self) -> bool {
        self.0.iter().all(|&(_, ok)| ok)
    }

    fn into_parts(self) -> (bool, String) {
        let failed: Vec<&str> = self.0.iter().filter(|&&(_, ok)| !ok).map(|&(name, _)| name).collect();
        if failed.is_empty() {
            (true, String::from("hypotheses hold"))
        } else {
            (false, format!("fails: {}", failed.join(", ")))
        }
    }

    fn entry(self, id: &'static str, statement: &'static str, build: impl FnOnce() -> Result<BoundEntry>) -> Result<BoundEntry> {
        if self.holds() {
            build()
        } else {
            Ok(BoundEntry::skip(id, statement, self.into_parts().1))
        }
    }
}

fn ring_part(inv: &InstanceInvariants) -> Result<&RingInvariants> {
    inv.ring.as_ref().ok_or(Error::MissingInvariant("ring invariants"))
}

fn sampled_r(inv: &InstanceInvariants) -> Result<u32> {
    inv.r_sampled.ok_or(Error::MissingInvariant("r_sampled"))
}

/// `Q` compared as a polynomial: trailing zeros are ignored.
fn same_numerator(q: &[i64], expected: &[i64]) -> bool {
    fn strip(v: &[i64]) -> &[i64] {
        let end = v.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        &v[..end]
    }
    strip(q) == strip(expected)
}

/// `[l, second, 1, ..., 1]` with ones in degrees `2..=top`.
fn numerator_shape(l: i64, second: i64, top: i64) -> Vec<i64> {
    let mut v = vec![l, second];
    v.extend((2..=top).map(|_| 1));
    v
}

/// Evaluates every inequality on `inv`.
pub fn evaluate_bounds(inv: &InstanceInvariants) -> Result<Vec<BoundEntry>> {
    let (e0, e1, e2) = (inv.e0(), inv.e1(), inv.e2());
    let b = inv.b as i64;
    let d = inv.d as i64;
    let l = inv.length_m_im;
    let mu_m = inv.mu_maximal as i64;
    let is_ring = inv.module_is_ring();
    let one = inv.d == 1;
    let g = &inv.graded;
    let pn = inv.graded.reg;
    let mut out = Vec::new();

    let mut eh11 = BoundEntry::ints(
        "e1_module",
        "e1(I,M) <= C(e0-b+1,2) + b - l(M/IM)",
        e1,
        binomial(e0 - b + 1, 2) + b - l,
    );
    if one && eh11.equality == Some(true) {
        eh11.implications = vec![
            clause("a0 <= 0", g.a_invariant(0).at_most(0)),
            clause("reg = pn = e0-b or e0 in {b, b+1}", pn == e0 - b || e0 == b || e0 == b + 1),
            clause("H(n) = b+n for 1 <= n < pn", (1..pn).all(|n| inv.hilbert.value(n as u32) == b + n)),
        ];
    }
    out.push(eh11);

    let strict = inv.e0() > inv.e0_mb;
    out.push(Gate::new(&[("d = 1", one), ("e0 > e0(m^b,M)", strict)]).entry(
        "e1_module_strict",
        "e1(I,M) <= C(e0-b,2) + b + 1 - l(M/IM)",
        || {
            let mut entry = BoundEntry::ints(
                "e1_module_strict",
                "e1(I,M) <= C(e0-b,2) + b + 1 - l(M/IM)",
                e1,
                binomial(e0 - b, 2) + b + 1 - l,
            );
            if entry.equality == Some(true) {
                entry.implications = vec![
                    clause("a0 <= 0", g.a_invariant(0).at_most(0)),
                    clause("reg = pn = e0-b-1 or e0 in {b+1, b+2}", pn == e0 - b - 1 || e0 == b + 1 || e0 == b + 2),
                    clause("H(n) = b+n+1 for 1 <= n < pn", (1..pn).all(|n| inv.hilbert.value(n as u32) == b + n + 1)),
                ];
            }
            Ok(entry)
        },
    )?);

    out.push(Gate::new(&[("b >= 2", b >= 2)]).entry("e1_deep", "e1(I,M) <= C(e0-b,2)", || {
        Ok(BoundEntry::ints("e1_deep", "e1(I,M) <= C(e0-b,2)", e1, binomial(e0 - b, 2)))
    })?);

    let mu_i = inv.mu_ideal as i64;
    out.push(Gate::new(&[("M = A", is_ring)]).entry(
        "e1_rossi_valla",
        "e1(I) <= C(e0,2) - C(mu(I)-d,2) - l(A/I) + 1",
        || {
            Ok(BoundEntry::ints(
                "e1_rossi_valla",
                "e1(I) <= C(e0,2) - C(mu(I)-d,2) - l(A/I) + 1",
                e1,
                binomial(e0, 2) - binomial(mu_i - d, 2) - l + 1,
            ))
        },
    )?);

    let closure_statement = "e1(I) <= C(e0,2) - C(mu(~I)-1,2) - l(A/~I) + 1";
    out.push(Gate::new(&[("M = A", is_ring), ("d = 1", one)]).entry("e1_rossi_valla_closure", closure_statement, || {
        let r = ring_part(inv)?;
        Ok(BoundEntry::ints(
            "e1_rossi_valla_closure",
            closure_statement,
            e1,
            binomial(e0, 2) - binomial(r.mu_rr as i64 - 1, 2) - r.length_rr_quotient + 1,
        ))
    })?);

    let elias_statement = "e1(I) <= (e0(m)-1)(e0(I) - b e0(m)) + e1(m)";
    let elias_rhs = (inv.e0_m - 1) * (e0 - b * inv.e0_m) + inv.e1_m;
    out.push(
        Gate::new(&[("M = A", is_ring), ("d = 1", one)])
            .entry("e1_elias", elias_statement, || Ok(BoundEntry::ints("e1_elias", elias_statement, e1, elias_rhs)))?,
    );

    let c2 = binomial(e0 - b + 1, 2);
    let mu_term = binomial(mu_m - d, 2);
    let embedding_rhs = c2.div_euclid(2 * b - 1) - mu_term;
    let embedding_statement = "e1(I) <= floor(C(e0-b+1,2)/(2b-1)) - C(mu(m)-d,2)";
    out.push(Gate::new(&[("M = A", is_ring)]).entry("e1_embedding", embedding_statement, || {
        Ok(BoundEntry::ints("e1_embedding", embedding_statement, e1, embedding_rhs))
    })?);

    let third_statement = "floor(C(e0-b+1,2)/3) <= C(e0-b,2)";
    out.push(Gate::new(&[("b >= 2", b >= 2)]).entry("e1_third_vs_deep", third_statement, || {
        Ok(BoundEntry::ints("e1_third_vs_deep", third_statement, c2.div_euclid(3), binomial(e0 - b, 2)))
    })?);

    let half = Rational::new(binomial(e0 - b, 2), 2) - Rational::from_int(mu_term);
    let half_statement = "e1(I) <= C(e0-b,2)/2 - C(mu(m)-d,2)";
    let half_gate = [("M = A", is_ring), ("b >= 2", b >= 2), ("e0 >= b+5", e0 >= b + 5)];
    out.push(Gate::new(&half_gate).entry("e1_half", half_statement, || {
        Ok(BoundEntry::compare("e1_half", half_statement, Rational::from_int(e1), half.clone()))
    })?);
    let strength_statement = "floor(C(e0-b+1,2)/(2b-1)) - C(mu(m)-d,2) <= C(e0-b,2)/2 - C(mu(m)-d,2)";
    out.push(Gate::new(&half_gate[1..]).entry("e1_half_strength", strength_statement, || {
        Ok(BoundEntry::compare("e1_half_strength", strength_statement, Rational::from_int(embedding_rhs), half.clone()))
    })?);

    let survey = Gate::new(&[("M = A", is_ring), ("d = 1", one)]);
    let survey_ok = survey.holds();
    let reason = survey.into_parts().1;
    let mut push_survey = |id: &'static str, statement: &'static str, rhs: Option<i64>, approx: bool| {
        out.push(match rhs {
            Some(rhs) => {
                let mut entry = BoundEntry::ints(id, statement, e1, rhs);
                entry.hypotheses_approximated = approx;
                entry
            }
            None => BoundEntry::skip(id, statement, reason.clone()),
        });
    };
    let ring = if survey_ok { Some(ring_part(inv)?) } else { None };
    push_survey(
        "e1_survey_rossi_valla",
        "e1(I) <= C(e0,2) - C(mu(I)-1,2) - l(A/I) + 1",
        ring.map(|_| binomial(e0, 2) - binomial(mu_i - 1, 2) - l + 1),
        false,
    );
    push_survey(
        "e1_survey_rossi_valla_closure",
        closure_statement,
        ring.map(|r| binomial(e0, 2) - binomial(r.mu_rr as i64 - 1, 2) - r.length_rr_quotient + 1),
        false,
    );
    push_survey("e1_survey_elias", elias_statement, ring.map(|_| elias_rhs), false);
    push_survey(
        "e1_survey_integral_closure",
        "e1(I) <= C(e0 - l(A/Ibar) + 1, 2)",
        ring.map(|r| binomial(e0 - r.integral_colength + 1, 2)),
        true,
    );
    push_survey(
        "e1_survey_embedding",
        "e1(I) <= C(e0,2) - C(mu(m)-1,2)",
        ring.map(|_| binomial(e0, 2) - binomial(mu_m - 1, 2)),
        false,
    );

    let higher = inv.d >= 2;
    let e2_statement = "e2(I,M) <= C(e0-b+1,3)";
    out.push(Gate::new(&[("d >= 2", higher)]).entry("e2_module", e2_statement, || {
        Ok(BoundEntry::ints("e2_module", e2_statement, e2, binomial(e0 - b + 1, 3)))
    })?);
    out.push(Gate::new(&[("d >= 2", higher)]).entry("e2_nonnegative", "0 <= e2(I,M)", || {
        Ok(BoundEntry::ints("e2_nonnegative", "0 <= e2(I,M)", 0, e2))
    })?);

    let r_statement = "r(I,M) <= e0 - b";
    out.push(Gate::new(&[("d = 1", one)]).entry("reduction_sampled", r_statement, || {
        Ok(BoundEntry::ints("reduction_sampled", r_statement, sampled_r(inv)? as i64, e0 - b))
    })?);
    let max_certified = inv.certificates.iter().map(|c| c.reduction_number as i64).max();
    out.push(Gate::new(&[("d = 1", one)]).entry("reduction_certified", "r_(x)(I,M) <= e0 - b", || {
        let r = max_certified.ok_or(Error::MissingInvariant("certificates"))?;
        Ok(BoundEntry::ints("reduction_certified", "r_(x)(I,M) <= e0 - b", r, e0 - b))
    })?);

    let e2_r_statement = "e2(I,M) <= (max(1,r)-1) e1(I,M)";
    out.push(Gate::new(&[("d = 1", one)]).entry("e2_reduction_sampled", e2_r_statement, || {
        let r = sampled_r(inv)?.max(1) as i64;
        Ok(BoundEntry::ints("e2_reduction_sampled", e2_r_statement, e2, (r - 1) * e1))
    })?);
    let min_certified = inv.certificates.iter().map(|c| c.reduction_number.max(1) as i64).min();
    out.push(Gate::new(&[("d = 1", one)]).entry("e2_reduction_certified", "e2(I,M) <= (max(1,r_(x))-1) e1(I,M)", || {
        let r = min_certified.ok_or(Error::MissingInvariant("certificates"))?;
        Ok(BoundEntry::ints("e2_reduction_certified", "e2(I,M) <= (max(1,r_(x))-1) e1(I,M)", e2, (r - 1) * e1))
    })?);

    let e2e1_statement = "e2(I,M) <= (e0-b-1) e1(I,M)";
    out.push(Gate::new(&[("d >= 2", higher), ("e0 >= b+1", e0 > b)]).entry("e2_e1", e2e1_statement, || {
        Ok(BoundEntry::ints("e2_e1", e2e1_statement, e2, (e0 - b - 1) * e1))
    })?);

    let e2_emb_statement = "e2(I) <= 3/(2b-1) C(e0-b+1,3) - (e0-b-1) C(mu(m)-d,2)";
    let e2_emb_gate = [("M = A", is_ring), ("d >= 2", higher), ("e0 >= b+1", e0 > b)];
    out.push(Gate::new(&e2_emb_gate).entry("e2_embedding", e2_emb_statement, || {
        let rhs = Rational::new(3 * binomial(e0 - b + 1, 3), 2 * b - 1) - Rational::from_int((e0 - b - 1) * mu_term);
        Ok(BoundEntry::compare("e2_embedding", e2_emb_statement, Rational::from_int(e2), rhs))
    })?);

    Ok(out)
}

/// Conditions of the characterization of equality in `e1 <= C(e0-b+1,2) + b - l(M/IM)` at `d = 1`.
fn module_equality_conditions(inv: &InstanceInvariants) -> Vec<Clause> {
    let (e0, e1) = (inv.e0(), inv.e1());
    let (b, l, reg) = (inv.b as i64, inv.length_m_im, inv.graded.reg);
    vec![
        clause("e1 = C(e0-b+1,2) + b - l(M/IM)", e1 == binomial(e0 - b + 1, 2) + b - l),
        clause(
            "Q = l + (b+1-l) z + z^2 + ... + z^(e0-b)",
            same_numerator(&inv.hilbert.q, &numerator_shape(l, b + 1 - l, e0 - b)),
        ),
        clause("a0 <= 0 and reg = e0-b", inv.graded.a_invariant(0).at_most(0) && reg == e0 - b),
        clause("reg = C(e0-b+2,2) + b - e1 - l(M/IM) - 1", reg == binomial(e0 - b + 2, 2) + b - e1 - l - 1),
    ]
}

/// Evaluates every equality characterization on `inv`.
pub fn evaluate_characterizations(inv: &InstanceInvariants) -> Result<Vec<Characterization>> {
    let (e0, e1, e2) = (inv.e0(), inv.e1(), inv.e2());
    let (b, l, reg) = (inv.b as i64, inv.length_m_im, inv.graded.reg);
    let d = inv.d as i64;
    let one = inv.d == 1;
    let mut out = Vec::new();

    let eh11_equal = e1 == binomial(e0 - b + 1, 2) + b - l;
    let h3 = Characterization::new(
        "e1_module_equality",
        "equality in e1 <= C(e0-b+1,2) + b - l(M/IM)",
        Gate::new(&[("d = 1", one), ("e0 >= b+2", e0 >= b + 2)]),
        module_equality_conditions(inv),
    )
    .with_consequences(vec![clause("b = 1", b == 1), clause("e0 = e0(m,M)", e0 == inv.e0_m)]);
    out.push(h3);

    out.push(
        Characterization::new(
            "e1_module_equality_forces_b_one",
            "e0 > b and equality in e1 <= C(e0-b+1,2) + b - l(M/IM) force b = 1",
            Gate::new(&[("e0 > b", e0 > b)]),
            vec![clause("e1 = C(e0-b+1,2) + b - l(M/IM)", eh11_equal)],
        )
        .with_consequences(vec![clause("b = 1", b == 1)]),
    );

    out.push(Characterization::new(
        "e1_module_strict_equality",
        "equality in e1 <= C(e0-b,2) + b + 1 - l(M/IM)",
        Gate::new(&[("d = 1", one), ("e0 > e0(m^b,M)", e0 > inv.e0_mb), ("e0 >= b+3", e0 >= b + 3)]),
        vec![
            clause("e1 = C(e0-b,2) + b + 1 - l(M/IM)", e1 == binomial(e0 - b, 2) + b + 1 - l),
            clause(
                "Q = l + (b+2-l) z + z^2 + ... + z^(e0-b-1)",
                same_numerator(&inv.hilbert.q, &numerator_shape(l, b + 2 - l, e0 - b - 1)),
            ),
            clause("a0 <= 0 and reg = e0-b-1", inv.graded.a_invariant(0).at_most(0) && reg == e0 - b - 1),
            clause("reg = C(e0-b+1,2) + b - e1 - l(M/IM)", reg == binomial(e0 - b + 1, 2) + b - e1 - l),
        ],
    ));

    let extremal_gate = Gate::new(&[("M = A", inv.module_is_ring()), ("d = 1", one), ("e0 >= 3", e0 >= 3)]);
    let extremal_ok = extremal_gate.holds();
    let hypothesis = e1 == binomial(e0, 2) + 1 - l;
    let mut extremal = Characterization::new(
        "rossi_valla_extremal",
        "e1(I) = C(e0,2) + 1 - l(A/I) determines I and A",
        extremal_gate,
        vec![clause("e1 = C(e0,2) + 1 - l(A/I)", hypothesis)],
    );
    if extremal_ok && hypothesis {
        let r = ring_part(inv)?;
        let mu_m = inv.mu_maximal;
        extremal = extremal.with_consequences(vec![
            clause("~I = m", r.rr_is_maximal),
            clause("I^2 = m I", r.square_is_maximal_times_ideal),
            clause("mu(I) = 2", inv.mu_ideal == 2),
            clause("mu(m) in {2, 3}", mu_m == 2 || mu_m == 3),
            clause(
                "mu(m) = 2 implies I = m and G(m) Cohen-Macaulay",
                mu_m != 2 || (r.ideal_is_maximal && r.depth_g_maximal == 1),
            ),
            clause(
                "mu(m) = 3 implies I^n = m^n for n = 2..5, l(A/I) = 2, depth G(I) = 0",
                mu_m != 3 || (r.powers_match_maximal.iter().all(|&x| x) && l == 2 && inv.graded.depth == 0),
            ),
        ]);
    }
    out.push(extremal);

    let higher = inv.d >= 2;
    let depth_ok = inv.graded.depth as i64 >= d - 1;
    let mut b2 = Characterization::new(
        "e2_module_equality",
        "equality in e2 <= C(e0-b+1,3)",
        Gate::new(&[("d >= 2", higher), ("e0 >= b+2", e0 >= b + 2)]),
        vec![
            clause("e2 = C(e0-b+1,3)", e2 == binomial(e0 - b + 1, 3)),
            clause(
                "Q = l + (b+1-l) z + z^2 + ... + z^(e0-b)",
                same_numerator(&inv.hilbert.q, &numerator_shape(l, b + 1 - l, e0 - b)),
            ),
            clause("depth >= d-1 and e1 = C(e0-b+1,2) + b - l(M/IM)", depth_ok && eh11_equal),
            clause(
                "depth >= d-1, reg = e0-b and a_(d-1) <= 1-d",
                depth_ok && reg == e0 - b && inv.graded.a_invariant(inv.d as usize - 1).at_most(1 - d),
            ),
            clause(
                "depth >= d-1 and reg = C(e0-b+2,2) + b - e1 - l(M/IM) - 1",
                depth_ok && reg == binomial(e0 - b + 2, 2) + b - e1 - l - 1,
            ),
        ],
    )
    .with_consequences(vec![clause("b = 1", b == 1)]);
    if let Some(base) = inv.base.as_deref() {
        if higher && base.b == inv.b && base.e0() >= base.b as i64 + 2 {
            let h3 = module_equality_conditions(base);
            let expected = [h3[0].holds, h3[1].holds, h3[0].holds, h3[2].holds, h3[3].holds];
            let agrees = b2.conditions.iter().zip(expected).all(|(c, h)| c.holds == h);
            b2.base_agreement = Some(agrees);
            b2.violation |= !agrees;
        }
    }
    out.push(b2);

    let regular_shape = inv.semigroup_is_regular
        && inv.module_is_ring()
        && inv.mu_ideal == 1
        && inv.ideal_min_valuation as i64 == b;
    out.push(Characterization::new(
        "regular_degenerate",
        "e0 = b exactly when M = A is regular and I = (x^b)",
        Gate::new(&[("d = 1", one)]),
        vec![clause("e0 = b", e0 == b), clause("A regular, M = A, I = (x^b)", regular_shape)],
    ));

    Ok(out)
}

/// Evaluates all bounds and characterizations.
pub fn evaluate(inv: &InstanceInvariants) -> Result<BoundReport> {
    Ok(BoundReport { entries: evaluate_bounds(inv)?, characterizations: evaluate_characterizations(inv)? })
}
