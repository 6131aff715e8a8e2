//! Truncated power series over the rationals and valuation-ordered linear algebra.
//!
//! Everything here works modulo a power `t^T`: a [`SeriesElement`] carries the
//! order below which its coefficients are known, an [`EchelonSpace`] is a
//! subspace of `Q[[t]] / t^T` kept in reduced row echelon form keyed by
//! valuation, and [`KernelBuilder`] finds linear dependencies while carrying a
//! payload along, which is how colons and intersections are computed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;

/// Sparse coefficient vector indexed by exponent.
pub type Terms = BTreeMap<u32, Rational>;

/// `target += coeff * t^shift * src`, dropping exponents at or above `bound`.
pub(crate) fn axpy(target: &mut Terms, coeff: &Rational, src: &Terms, shift: u32, bound: Option<u32>) {
    if coeff.is_zero() {
        return;
    }
    for (&e, c) in src {
        let e = e + shift;
        if bound.is_some_and(|b| e >= b) {
            break;
        }
        let delta = coeff * c;
        match target.get_mut(&e) {
            Some(slot) => {
                let sum = &*slot + &delta;
                if sum.is_zero() {
                    target.remove(&e);
                } else {
                    *slot = sum;
                }
            }
            None => {
                target.insert(e, delta);
            }
        }
    }
}

pub(crate) fn scale(terms: &mut Terms, coeff: &Rational) {
    for c in terms.values_mut() {
        *c = &*c * coeff;
    }
}

pub(crate) fn truncate_terms(terms: &mut Terms, bound: u32) {
    let _ = terms.split_off(&bound);
}

/// Product of two sparse polynomials, truncated at `bound` when given.
pub(crate) fn mul_terms(a: &Terms, b: &Terms, bound: Option<u32>) -> Terms {
    let mut out = Terms::new();
    for (&e, c) in a {
        if bound.is_some_and(|t| e >= t) {
            break;
        }
        axpy(&mut out, c, b, e, bound);
    }
    out
}

/// An element of `Q[[t]]` known modulo `t^T`, or exactly when `truncation` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesElement {
    terms: Terms,
    truncation: Option<u32>,
}

impl SeriesElement {
    /// An exact polynomial. Zero coefficients are discarded.
    pub fn polynomial<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut out = Terms::new();
        for (e, c) in terms {
            let mut single = Terms::new();
            single.insert(0, Rational::ONE);
            axpy(&mut out, &c, &single, e, None);
        }
        SeriesElement { terms: out, truncation: None }
    }

    pub fn monomial(exponent: u32, coeff: Rational) -> Self {
        Self::polynomial([(exponent, coeff)])
    }

    /// The class of zero modulo `t^truncation`.
    pub fn zero_mod(truncation: u32) -> Self {
        SeriesElement { terms: Terms::new(), truncation: Some(truncation) }
    }

    pub(crate) fn from_terms(terms: Terms, truncation: Option<u32>) -> Self {
        let mut s = SeriesElement { terms, truncation };
        s.terms.retain(|_, c| !c.is_zero());
        if let Some(t) = truncation {
            truncate_terms(&mut s.terms, t);
        }
        s
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    /// The same element viewed modulo `t^t` (no-op if already coarser).
    pub fn truncated(&self, t: u32) -> Self {
        let t = self.truncation.map_or(t, |own| own.min(t));
        Self::from_terms(self.terms.clone(), Some(t))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// True when no known coefficient is nonzero (zero modulo `t^T`, or exactly zero).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// A lower bound on the true valuation that is valid even for zero classes.
    fn valuation_floor(&self) -> Option<u32> {
        self.valuation().or(self.truncation)
    }

    pub fn mul(&self, other: &SeriesElement) -> SeriesElement {
        let trunc = match (self.truncation, other.truncation) {
            (None, None) => None,
            (Some(a), None) => Some(a + other.valuation_floor().unwrap_or(0)),
            (None, Some(b)) => Some(b + self.valuation_floor().unwrap_or(0)),
            (Some(a), Some(b)) => Some(
                (a + other.valuation_floor().unwrap_or(b)).min(b + self.valuation_floor().unwrap_or(a)),
            ),
        };
        let (trunc, terms) = if self.is_zero() && self.truncation.is_none()
            || other.is_zero() && other.truncation.is_none()
        {
            (None, Terms::new())
        } else {
            (trunc, mul_terms(&self.terms, &other.terms, trunc))
        };
        SeriesElement::from_terms(terms, trunc)
    }

    /// Multiplication by `c * t^s`.
    pub fn shifted(&self, s: u32, c: &Rational) -> SeriesElement {
        let mut out = Terms::new();
        axpy(&mut out, c, &self.terms, s, None);
        SeriesElement::from_terms(out, self.truncation.map(|t| t + s))
    }

    pub fn add(&self, other: &SeriesElement) -> SeriesElement {
        self.combine(other, &Rational::ONE)
    }

    pub fn sub(&self, other: &SeriesElement) -> SeriesElement {
        self.combine(other, &Rational::from_int(-1))
    }

    fn combine(&self, other: &SeriesElement, c: &Rational) -> SeriesElement {
        let trunc = match (self.truncation, other.truncation) {
            (None, b) => b,
            (a, None) => a,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let mut terms = self.terms.clone();
        axpy(&mut terms, c, &other.terms, 0, trunc);
        SeriesElement::from_terms(terms, trunc)
    }
}

/// A standard basis of a module over `k[[S]]`: its valuations, shifted by `S`,
/// cover every valuation of the module below `certified_up_to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardBasis {
    elements: Vec<SeriesElement>,
    certified_up_to: u32,
}

impl StandardBasis {
    pub fn elements(&self) -> &[SeriesElement] {
        &self.elements
    }

    pub fn certified_up_to(&self) -> u32 {
        self.certified_up_to
    }

    pub fn valuations(&self) -> Vec<u32> {
        self.elements.iter().filter_map(SeriesElement::valuation).collect()
    }

    pub(crate) fn from_parts(elements: Vec<SeriesElement>, certified_up_to: u32) -> Self {
        StandardBasis { elements, certified_up_to }
    }
}

/// Cancels the lowest term of `f` against `S`-shifts of basis elements until
/// it vanishes modulo `t^T` or its valuation is not reachable from the basis.
///
/// Ties go to the basis element with the smallest index.
pub fn reduce(f: &SeriesElement, basis: &StandardBasis, ring: &NumericalSemigroup) -> Result<SeriesElement> {
    let original = f.truncation;
    let mut trunc = f.truncation;
    let mut terms = f.terms.clone();
    loop {
        let Some((&e, lead)) = terms.iter().next() else { break };
        let hit = basis.elements.iter().find(|b| {
            b.valuation().is_some_and(|v| v <= e && ring.contains((e - v) as i64))
        });
        let Some(b) = hit else { break };
        let v = b.valuation().expect("checked above");
        let s = e - v;
        let c = lead / b.leading_coefficient().expect("nonzero");
        if let Some(bt) = b.truncation {
            let reach = bt + s;
            trunc = Some(trunc.map_or(reach, |t| t.min(reach)));
        }
        axpy(&mut terms, &-c, &b.terms, s, trunc);
        if let Some(t) = trunc {
            truncate_terms(&mut terms, t);
        }
    }
    if terms.is_empty() {
        if let (Some(t), Some(orig)) = (trunc, original) {
            if t < orig {
                return Err(Error::PrecisionExhausted { truncation: t });
            }
        } else if let (Some(t), None) = (trunc, original) {
            return Err(Error::PrecisionExhausted { truncation: t });
        }
    }
    Ok(SeriesElement { terms, truncation: trunc })
}

/// Computes a standard basis of the `k[[S]]`-module generated by `generators`,
/// certified below `t^T`.
///
/// Every generator must be known modulo at least `t^T`.
pub fn standard_basis(generators: &[SeriesElement], ring: &NumericalSemigroup, t: u32) -> Result<StandardBasis> {
    let mut space = EchelonSpace::new(t);
    for g in generators {
        if let Some(gt) = g.truncation {
            if gt < t {
                return Err(Error::PrecisionExhausted { truncation: gt });
            }
        }
        let Some(v) = g.valuation() else { continue };
        for s in ring.elements_below(t.saturating_sub(v)) {
            let mut shifted = Terms::new();
            axpy(&mut shifted, &Rational::ONE, &g.terms, s, Some(t));
            space.insert(shifted);
        }
    }
    Ok(space.standard_basis(ring))
}

/// One term `coeff * t^shift * spanning_set[generator]` of a solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTerm {
    pub generator: usize,
    pub shift: u32,
    pub coeff: Rational,
}

/// Expresses `target` modulo `t^T` as a combination of `S`-shifts of
/// `spanning_set`, or returns `None` if no combination exists.
pub fn truncated_solve(
    target: &SeriesElement,
    spanning_set: &[SeriesElement],
    ring: &NumericalSemigroup,
    t: u32,
) -> Option<Vec<SolutionTerm>> {
    let mut kb = KernelBuilder::new();
    let index = |i: usize, s: u32| (i as u32) * t + s;
    for (i, g) in spanning_set.iter().enumerate() {
        let Some(v) = g.valuation() else { continue };
        for s in ring.elements_below(t.saturating_sub(v)) {
            let mut key = Terms::new();
            axpy(&mut key, &Rational::ONE, &g.terms, s, Some(t));
            let mut payload = Terms::new();
            payload.insert(index(i, s), Rational::ONE);
            kb.push(key, payload);
        }
    }
    let mut key = target.terms.clone();
    truncate_terms(&mut key, t);
    let (rest, payload) = kb.reduce(key, Terms::new());
    if !rest.is_empty() {
        return None;
    }
    Some(
        payload
            .into_iter()
            .map(|(idx, c)| SolutionTerm {
                generator: (idx / t) as usize,
                shift: idx % t,
                coeff: -c,
            })
            .collect(),
    )
}

/// A subspace of `Q[[t]] / t^bound` in reduced row echelon form.
///
/// Rows are keyed by their valuation (pivot), normalized to leading
/// coefficient 1, and vanish at every other pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonSpace {
    bound: u32,
    rows: BTreeMap<u32, Terms>,
}

impl EchelonSpace {
    pub fn new(bound: u32) -> Self {
        EchelonSpace { bound, rows: BTreeMap::new() }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn has_pivot(&self, e: u32) -> bool {
        self.rows.contains_key(&e)
    }

    pub fn rows(&self) -> impl Iterator<Item = (u32, &Terms)> + '_ {
        self.rows.iter().map(|(&k, v)| (k, v))
    }

    /// Reduces `v` (already truncated below `bound`) against the rows.
    pub fn reduce_in_place(&self, v: &mut Terms) {
        let hits: Vec<u32> = v.keys().copied().filter(|e| self.rows.contains_key(e)).collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                axpy(v, &-c, &self.rows[&p], 0, Some(self.bound));
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Terms) -> bool {
        truncate_terms(&mut v, self.bound);
        self.reduce_in_place(&mut v);
        let Some((&lead, c)) = v.iter().next() else { return false };
        let inv = c.recip();
        scale(&mut v, &inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&lead).cloned() {
                axpy(row, &-c, &v, 0, Some(self.bound));
            }
        }
        self.rows.insert(lead, v);
        true
    }

    /// Smallest `c` such that every exponent in `[c, bound)` is a pivot.
    pub fn tail_start(&self) -> u32 {
        let mut c = self.bound;
        while c > 0 && self.rows.contains_key(&(c - 1)) {
            c -= 1;
        }
        c
    }

    /// Shrinks `bound` to [`tail_start`](Self::tail_start), valid when the
    /// space is known to contain `t^bound Q[[t]]`.
    pub fn absorb_tail(&mut self) {
        let c = self.tail_start();
        let _ = self.rows.split_off(&c);
        for row in self.rows.values_mut() {
            truncate_terms(row, c);
        }
        self.bound = c;
    }

    /// Extends the space to a larger bound, adding the monomials in between.
    pub fn extend_bound_with_tail(&self, bound: u32) -> EchelonSpace {
        let mut out = self.clone();
        if bound > self.bound {
            out.bound = bound;
            for e in self.bound..bound {
                out.rows.insert(e, Terms::from([(e, Rational::ONE)]));
            }
        }
        out
    }

    /// Extracts a standard basis: rows whose valuation is not an `S`-shift of
    /// an earlier kept valuation.
    pub fn standard_basis(&self, ring: &NumericalSemigroup) -> StandardBasis {
        let mut kept: Vec<u32> = Vec::new();
        let mut elements = Vec::new();
        for (&p, row) in &self.rows {
            if kept.iter().any(|&k| ring.contains(p as i64 - k as i64)) {
                continue;
            }
            kept.push(p);
            elements.push(SeriesElement { terms: row.clone(), truncation: Some(self.bound) });
        }
        StandardBasis { elements, certified_up_to: self.bound }
    }
}

/// Incremental Gaussian elimination that records linear dependencies.
///
/// Each pushed row is a `(key, payload)` pair. Rows are eliminated on the key;
/// whenever a key reduces to zero the correspondingly combined payload is
/// recorded as a kernel element.
#[derive(Clone, Debug, Default)]
pub struct KernelBuilder {
    pivots: BTreeMap<u32, (Terms, Terms)>,
    kernel: Vec<Terms>,
}

impl KernelBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn reduce(&self, mut key: Terms, mut payload: Terms) -> (Terms, Terms) {
        let mut cursor = 0u32;
        loop {
            let next = key.range(cursor..).map(|(&k, _)| k).find(|k| self.pivots.contains_key(k));
            let Some(p) = next else { break };
            let c = key[&p].clone();
            let (pk, pp) = &self.pivots[&p];
            axpy(&mut key, &-c.clone(), pk, 0, None);
            axpy(&mut payload, &-c, pp, 0, None);
            cursor = p + 1;
        }
        (key, payload)
    }

    pub fn push(&mut self, key: Terms, payload: Terms) {
        let (mut key, mut payload) = self.reduce(key, payload);
        match key.iter().next() {
            None => {
                if !payload.is_empty() {
                    self.kernel.push(payload);
                }
            }
            Some((&lead, c)) => {
                let inv = c.recip();
                scale(&mut key, &inv);
                scale(&mut payload, &inv);
                self.pivots.insert(lead, (key, payload));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn into_kernel(self) -> Vec<Terms> {
        self.kernel
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn s345() -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap()
    }

    fn mono(e: u32) -> SeriesElement {
        SeriesElement::monomial(e, q(1))
    }

    fn basis_of(gens: &[SeriesElement], t: u32) -> StandardBasis {
        standard_basis(gens, &s345(), t).unwrap()
    }

    #[test]
    fn reduce_single_cancellation() {
        let b = basis_of(&[mono(3)], 20);
        let f = SeriesElement::polynomial([(3, q(1)), (4, q(1))]).truncated(20);
        let r = reduce(&f, &b, &s345()).unwrap();
        assert_eq!(r.terms(), &Terms::from([(4, q(1))]));
    }

    #[test]
    fn reduce_against_binomial() {
        let b = StandardBasis::from_parts(
            vec![SeriesElement::polynomial([(3, q(1)), (4, q(1))]).truncated(20)],
            20,
        );
        let r = reduce(&mono(3).truncated(20), &b, &s345()).unwrap();
        assert_eq!(r.terms(), &Terms::from([(4, q(-1))]));
    }

    #[test]
    fn reduce_by_shift_to_zero() {
        let b = basis_of(&[mono(3)], 20);
        let f = SeriesElement::monomial(6, q(2)).truncated(20);
        let r = reduce(&f, &b, &s345()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn reduce_reports_lost_precision() {
        let b = StandardBasis::from_parts(vec![mono(3).truncated(5)], 5);
        let f = SeriesElement::monomial(6, q(2)).truncated(20);
        assert_eq!(reduce(&f, &b, &s345()), Err(Error::PrecisionExhausted { truncation: 8 }));
    }

    #[test]
    fn standard_basis_examples() {
        assert_eq!(basis_of(&[mono(3), mono(4)], 30).valuations(), vec![3, 4]);
        let cancel = SeriesElement::polynomial([(3, q(1)), (4, q(1))]);
        assert_eq!(basis_of(&[cancel, mono(3)], 30).valuations(), vec![3, 4]);
        let s23 = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(standard_basis(&[mono(2)], &s23, 30).unwrap().valuations(), vec![2]);
    }

    #[test]
    fn standard_basis_rejects_short_generators() {
        let g = mono(3).truncated(10);
        assert_eq!(
            standard_basis(&[g], &s345(), 30),
            Err(Error::PrecisionExhausted { truncation: 10 })
        );
    }

    #[test]
    fn truncated_solve_examples() {
        let span = [mono(6), mono(7), mono(8)];
        let sol = truncated_solve(&mono(9), &span, &s345(), 30).unwrap();
        assert_eq!(sol, vec![SolutionTerm { generator: 0, shift: 3, coeff: q(1) }]);

        assert!(truncated_solve(&mono(5), &[mono(3), mono(4)], &s345(), 30).is_none());

        let zero = SeriesElement::polynomial([]);
        assert_eq!(truncated_solve(&zero, &[mono(3)], &s345(), 30), Some(vec![]));
    }

    #[test]
    fn echelon_tail_absorption() {
        let mut sp = EchelonSpace::new(10);
        for e in [3u32, 6, 7, 8, 9] {
            sp.insert(Terms::from([(e, q(1)), (e.max(4) + 1, q(2))]));
        }
        assert_eq!(sp.dimension(), 5);
        let mut canon = sp.clone();
        canon.absorb_tail();
        assert_eq!(canon.bound(), 6);
        assert_eq!(canon.pivots().collect::<Vec<_>>(), vec![3]);
        // t^3 + 2 t^5, and t^5 lies in a gap of the value set.
        assert_eq!(canon.rows().next().unwrap().1, &Terms::from([(3, q(1)), (5, q(2))]));
    }

    #[test]
    fn series_product_tracks_truncation() {
        let a = SeriesElement::polynomial([(1, q(1)), (2, q(1))]).truncated(5);
        let b = SeriesElement::polynomial([(2, q(3))]);
        let p = a.mul(&b);
        assert_eq!(p.truncation(), Some(7));
        assert_eq!(p.terms(), &Terms::from([(3, q(3)), (4, q(3))]));
    }
}
