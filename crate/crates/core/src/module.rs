//! Finitely generated `k[[S]]`-submodules of `k[[t]]`.
//!
//! A nonzero module `M` always contains `t^N k[[t]]` for some `N`, so it is
//! stored as the subspace `M / t^N` in canonical echelon form, with `N` the
//! conductor of its value set. Two modules are equal exactly when their
//! canonical forms are.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;
use crate::valuation::{axpy, mul_terms, EchelonSpace, KernelBuilder, SeriesElement, StandardBasis, Terms};

/// The set of valuations of a module: a finite sporadic part plus `[conductor, inf)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueSet {
    pub sporadic: Vec<u32>,
    pub conductor: u32,
}

impl ValueSet {
    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.sporadic.binary_search(&n).is_ok()
    }

    pub fn min(&self) -> u32 {
        self.sporadic.first().copied().unwrap_or(self.conductor)
    }

    /// Members strictly below `bound`.
    pub fn below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }
}

struct ModuleData {
    ring: Arc<NumericalSemigroup>,
    space: EchelonSpace,
    generators: Vec<SeriesElement>,
}

/// A nonzero finitely generated `k[[S]]`-submodule of `k[[t]]`.
///
/// Cloning is cheap; values are immutable and safe to share across threads.
#[derive(Clone)]
pub struct FractionalModule {
    inner: Arc<ModuleData>,
}

impl PartialEq for FractionalModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.space == other.inner.space && *self.inner.ring == *other.inner.ring)
    }
}

impl Eq for FractionalModule {}

impl fmt::Debug for FractionalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FractionalModule")
            .field("value_set", &self.value_set())
            .field("generators", &self.inner.generators)
            .finish()
    }
}

impl FractionalModule {
    /// The module generated by `generators` over `k[[S]]`.
    pub fn from_generators(ring: &NumericalSemigroup, generators: &[SeriesElement]) -> Result<Self> {
        Self::build(Arc::new(ring.clone()), generators)
    }

    /// An ideal of `k[[S]]`: like [`from_generators`](Self::from_generators)
    /// but every exponent must lie in `S`.
    pub fn ideal(ring: &NumericalSemigroup, generators: &[SeriesElement]) -> Result<Self> {
        for g in generators {
            if let Some(&e) = g.terms().keys().find(|&&e| !ring.contains(e as i64)) {
                return Err(Error::NotInRing { exponent: e });
            }
        }
        Self::from_generators(ring, generators)
    }

    /// The ideal generated by the monomials `t^e`.
    pub fn monomial_ideal(ring: &NumericalSemigroup, exponents: &[u32]) -> Result<Self> {
        let gens: Vec<_> = exponents.iter().map(|&e| SeriesElement::monomial(e, Rational::ONE)).collect();
        Self::ideal(ring, &gens)
    }

    /// `A = k[[S]]` as a module over itself.
    pub fn ring(ring: &NumericalSemigroup) -> Self {
        Self::monomial_ideal(ring, &[0]).expect("1 generates A")
    }

    /// The maximal ideal, generated by `t^s` for the minimal generators `s`.
    pub fn maximal_ideal(ring: &NumericalSemigroup) -> Self {
        Self::monomial_ideal(ring, ring.minimal_generators()).expect("generators lie in S")
    }

    fn build(ring: Arc<NumericalSemigroup>, generators: &[SeriesElement]) -> Result<Self> {
        let nonzero: Vec<&SeriesElement> = generators.iter().filter(|g| !g.is_zero()).collect();
        let Some(vmin) = nonzero.iter().filter_map(|g| g.valuation()).min() else {
            return Err(Error::ZeroModule);
        };
        let bound = vmin + ring.conductor();
        let mut space = EchelonSpace::new(bound);
        for g in &nonzero {
            if let Some(t) = g.truncation() {
                if t < bound {
                    return Err(Error::PrecisionExhausted { truncation: t });
                }
            }
            let v = g.valuation().expect("nonzero");
            for s in ring.elements_below(bound.saturating_sub(v)) {
                let mut row = Terms::new();
                axpy(&mut row, &Rational::ONE, g.terms(), s, Some(bound));
                space.insert(row);
            }
        }
        Ok(Self::from_space(ring, space))
    }

    /// Wraps a space that is known to be an `A`-module containing `t^bound k[[t]]`.
    fn from_space(ring: Arc<NumericalSemigroup>, mut space: EchelonSpace) -> Self {
        space.absorb_tail();
        let bound = space.bound();
        let m = ring.multiplicity();
        let mut kept: Vec<u32> = Vec::new();
        let mut generators = Vec::new();
        for e in (0..bound + m).filter(|&e| e >= bound || space.has_pivot(e)) {
            if kept.iter().any(|&k| ring.contains(e as i64 - k as i64)) {
                continue;
            }
            kept.push(e);
            let terms = if e < bound {
                space.rows().find(|&(p, _)| p == e).map(|(_, r)| r.clone()).expect("pivot row")
            } else {
                Terms::from([(e, Rational::ONE)])
            };
            generators.push(SeriesElement::from_terms(terms, None));
        }
        FractionalModule { inner: Arc::new(ModuleData { ring, space, generators }) }
    }

    fn derived(&self, space: EchelonSpace) -> Self {
        Self::from_space(self.inner.ring.clone(), space)
    }

    fn same_ring(&self, other: &FractionalModule) -> Result<()> {
        if Arc::ptr_eq(&self.inner.ring, &other.inner.ring) || *self.inner.ring == *other.inner.ring {
            Ok(())
        } else {
            Err(Error::InvariantViolation("modules over different semigroup rings".into()))
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.inner.ring
    }

    /// A generating set over `A`: one element per minimal generator of the value set.
    pub fn generators(&self) -> &[SeriesElement] {
        &self.inner.generators
    }

    /// Every `n` at or above this value is a valuation, and `t^n k[[t]]` lies in the module.
    pub fn conductor(&self) -> u32 {
        self.inner.space.bound()
    }

    /// Smallest valuation of a nonzero element.
    pub fn min_valuation(&self) -> u32 {
        self.inner.space.pivots().next().unwrap_or(self.conductor())
    }

    pub fn value_set(&self) -> ValueSet {
        ValueSet { sporadic: self.inner.space.pivots().collect(), conductor: self.conductor() }
    }

    pub fn has_valuation(&self, n: u32) -> bool {
        n >= self.conductor() || self.inner.space.has_pivot(n)
    }

    /// The module modulo its conductor, in canonical echelon form.
    pub fn space(&self) -> &EchelonSpace {
        &self.inner.space
    }

    pub fn standard_basis(&self) -> StandardBasis {
        let sb = self.inner.space.standard_basis(&self.inner.ring);
        let mut elements = sb.elements().to_vec();
        let bound = self.conductor();
        for g in &self.inner.generators {
            if g.valuation().is_some_and(|v| v >= bound) {
                elements.push(g.truncated(bound + self.inner.ring.multiplicity()));
            }
        }
        StandardBasis::from_parts(elements, bound)
    }

    /// Residue of `f` modulo the module's echelon form; empty iff `f` is a member.
    fn residue(&self, f: &Terms) -> Terms {
        let mut r = f.clone();
        let _ = r.split_off(&self.conductor());
        self.inner.space.reduce_in_place(&mut r);
        r
    }

    pub fn contains_element(&self, f: &SeriesElement) -> Result<bool> {
        if let Some(t) = f.truncation() {
            if t < self.conductor() {
                return Err(Error::PrecisionExhausted { truncation: t });
            }
        }
        Ok(self.residue(f.terms()).is_empty())
    }

    /// True when `other` is a submodule of `self`.
    pub fn contains_module(&self, other: &FractionalModule) -> Result<bool> {
        self.same_ring(other)?;
        if other.conductor() < self.conductor()
            && (other.conductor()..self.conductor()).any(|e| !self.has_valuation(e))
        {
            return Ok(false);
        }
        Ok(other.inner.generators.iter().all(|g| self.residue(g.terms()).is_empty()))
    }

    /// `M + N`.
    pub fn sum(&self, other: &FractionalModule) -> Result<FractionalModule> {
        self.same_ring(other)?;
        let bound = self.conductor().min(other.conductor());
        let mut space = EchelonSpace::new(bound);
        for (_, row) in self.inner.space.rows().chain(other.inner.space.rows()) {
            space.insert(row.clone());
        }
        Ok(self.derived(space))
    }

    /// `M N`.
    pub fn product(&self, other: &FractionalModule) -> Result<FractionalModule> {
        self.same_ring(other)?;
        // Put the side with fewer generators on the right.
        let (rows_of, gens_of) = if self.inner.generators.len() <= other.inner.generators.len() {
            (other, self)
        } else {
            (self, other)
        };
        let bound = rows_of.conductor() + gens_of.min_valuation();
        let mut space = EchelonSpace::new(bound);
        for g in &gens_of.inner.generators {
            for (_, row) in rows_of.inner.space.rows() {
                space.insert(mul_terms(row, g.terms(), Some(bound)));
            }
        }
        Ok(self.derived(space))
    }

    /// `x M` for a nonzero element `x`.
    pub fn scaled(&self, x: &SeriesElement) -> Result<FractionalModule> {
        let Some(v) = x.valuation() else { return Err(Error::ZeroModule) };
        let bound = self.conductor() + v;
        if let Some(t) = x.truncation() {
            if t < bound {
                return Err(Error::PrecisionExhausted { truncation: t });
            }
        }
        let mut space = EchelonSpace::new(bound);
        for (_, row) in self.inner.space.rows() {
            space.insert(mul_terms(row, x.terms(), Some(bound)));
        }
        Ok(self.derived(space))
    }

    /// `{ f in self : f J subset N }`.
    pub fn colon(&self, target: &FractionalModule, by: &FractionalModule) -> Result<FractionalModule> {
        self.same_ring(target)?;
        self.same_ring(by)?;
        let nb = target.conductor();
        let k = self.conductor().max(nb.saturating_sub(by.min_valuation()));
        let gens = &by.inner.generators;
        let mut kb = KernelBuilder::new();
        let basis = self
            .inner
            .space
            .rows()
            .map(|(_, r)| r.clone())
            .chain((self.conductor()..k).map(|e| Terms::from([(e, Rational::ONE)])));
        for f in basis {
            let mut key = Terms::new();
            for (j, g) in gens.iter().enumerate() {
                let prod = mul_terms(&f, g.terms(), Some(nb));
                let res = target.residue(&prod);
                let offset = j as u32 * nb;
                key.extend(res.into_iter().map(|(e, c)| (e + offset, c)));
            }
            kb.push(key, f);
        }
        let mut space = EchelonSpace::new(k);
        for f in kb.into_kernel() {
            space.insert(f);
        }
        Ok(self.derived(space))
    }

    /// `M ∩ N`.
    pub fn intersection(&self, other: &FractionalModule) -> Result<FractionalModule> {
        let unit = Self::build(self.inner.ring.clone(), &[SeriesElement::monomial(0, Rational::ONE)])?;
        self.colon(other, &unit)
    }

    /// `ℓ(M / N)` for `N ⊆ M`, computed as `|v(M) \ v(N)|`.
    pub fn length_quotient(&self, sub: &FractionalModule) -> Result<u32> {
        if !self.contains_module(sub)? {
            return Err(Error::NotContained);
        }
        Ok(self.value_gap_count(sub))
    }

    /// `|v(M) \ v(N)|` without the containment check.
    pub(crate) fn value_gap_count(&self, sub: &FractionalModule) -> u32 {
        (0..sub.conductor()).filter(|&e| self.has_valuation(e) && !sub.has_valuation(e)).count() as u32
    }

    /// `μ(M) = ℓ(M / 𝔪 M)`.
    pub fn mu(&self) -> Result<u32> {
        Ok(self.minimal_generators()?.len() as u32)
    }

    /// A minimal generating set: one element for each valuation in `v(M) \ v(𝔪M)`.
    pub fn minimal_generators(&self) -> Result<Vec<SeriesElement>> {
        let mm = FractionalModule::maximal_ideal(self.semigroup()).product(self)?;
        Ok(self
            .inner
            .generators
            .iter()
            .filter(|g| !mm.has_valuation(g.valuation().expect("nonzero")))
            .cloned()
            .collect())
    }

    /// `ℓ(A / Ī)` where `Ī` consists of all ring elements of valuation at least `min v(I)`.
    pub fn integral_closure_colength(&self) -> u32 {
        let e = self.min_valuation();
        self.semigroup().elements_below(e).count() as u32
    }

    /// `I^n M`, computed by repeated multiplication.
    pub fn power_times(&self, n: u32, module: &FractionalModule) -> Result<FractionalModule> {
        let mut acc = module.clone();
        for _ in 0..n {
            acc = self.product(&acc)?;
        }
        Ok(acc)
    }
}

/// Memoized powers `I^n M`.
#[derive(Clone, Debug)]
pub struct PowerCache {
    ideal: FractionalModule,
    powers: Vec<FractionalModule>,
}

impl PowerCache {
    pub fn new(ideal: &FractionalModule, module: &FractionalModule) -> Self {
        PowerCache { ideal: ideal.clone(), powers: alloc::vec![module.clone()] }
    }

    pub fn ideal(&self) -> &FractionalModule {
        &self.ideal
    }

    pub fn base(&self) -> &FractionalModule {
        &self.powers[0]
    }

    /// `I^n M`.
    pub fn get(&mut self, n: u32) -> Result<FractionalModule> {
        while self.powers.len() <= n as usize {
            let next = self.ideal.product(self.powers.last().expect("nonempty"))?;
            self.powers.push(next);
        }
        Ok(self.powers[n as usize].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mono(e: u32) -> SeriesElement {
        SeriesElement::monomial(e, q(1))
    }

    #[test]
    fn product_of_t3_t4_squared() {
        let s = sg(&[3, 4, 5]);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        let i2 = i.product(&i).unwrap();
        assert_eq!(i2.value_set(), ValueSet { sporadic: vec![], conductor: 6 });
        let a = FractionalModule::ring(&s);
        assert_eq!(i.power_times(2, &a).unwrap(), i2);
        assert_eq!(i.power_times(0, &a).unwrap(), a);
    }

    #[test]
    fn sum_and_identity() {
        let s = sg(&[3, 4, 5]);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        assert_eq!(i.sum(&i).unwrap(), i);
        let a = FractionalModule::ring(&s);
        assert_eq!(a.product(&i).unwrap(), i);
    }

    #[test]
    fn maximal_ideal_cube() {
        let s = sg(&[2, 3]);
        let m = FractionalModule::maximal_ideal(&s);
        let a = FractionalModule::ring(&s);
        let m3 = m.power_times(3, &a).unwrap();
        assert_eq!(m3.value_set(), ValueSet { sporadic: vec![], conductor: 6 });
    }

    #[test]
    fn lengths() {
        let s = sg(&[3, 4, 5]);
        let a = FractionalModule::ring(&s);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        assert_eq!(a.length_quotient(&i).unwrap(), 2);
        let t3 = FractionalModule::monomial_ideal(&s, &[3]).unwrap();
        assert_eq!(a.length_quotient(&t3).unwrap(), 3);
        assert_eq!(i.length_quotient(&a), Err(Error::NotContained));

        let s23 = sg(&[2, 3]);
        let a = FractionalModule::ring(&s23);
        assert_eq!(a.length_quotient(&FractionalModule::maximal_ideal(&s23)).unwrap(), 1);
    }

    #[test]
    fn membership() {
        let s = sg(&[3, 4, 5]);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        assert!(!i.contains_element(&mono(5)).unwrap());
        let i2 = i.product(&i).unwrap();
        assert!(i2.contains_element(&mono(9)).unwrap());
        assert!(i.contains_element(&SeriesElement::polynomial([])).unwrap());
    }

    #[test]
    fn colon_recovers_maximal_ideal() {
        let s = sg(&[3, 4, 11]);
        let a = FractionalModule::ring(&s);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        let i2 = i.product(&i).unwrap();
        let c = a.colon(&i2, &i).unwrap();
        assert_eq!(c, FractionalModule::maximal_ideal(&s));
    }

    #[test]
    fn trivial_colons() {
        let s = sg(&[3, 5, 7]);
        let m = FractionalModule::monomial_ideal(&s, &[3, 5]).unwrap();
        let a = FractionalModule::ring(&s);
        assert_eq!(m.colon(&m, &a).unwrap(), m);
        let x = SeriesElement::polynomial([(5, q(2)), (6, q(-1))]);
        let xm = m.scaled(&x).unwrap();
        let xa = FractionalModule::ideal(&s, &[x.clone()]).unwrap();
        assert_eq!(m.colon(&xm, &xa).unwrap(), m);
        assert_eq!(xa.product(&m).unwrap(), xm);
    }

    #[test]
    fn length_of_principal_quotient_is_valuation() {
        let s = sg(&[4, 6, 9]);
        let a = FractionalModule::ring(&s);
        let x = SeriesElement::polynomial([(6, q(1)), (9, q(3)), (10, q(1))]);
        let xa = a.scaled(&x).unwrap();
        assert_eq!(a.length_quotient(&xa).unwrap(), 6);
    }

    #[test]
    fn integral_closure_colengths() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap().integral_closure_colength(), 1);
        assert_eq!(FractionalModule::maximal_ideal(&s).integral_closure_colength(), 1);
        let s23 = sg(&[2, 3]);
        assert_eq!(FractionalModule::monomial_ideal(&s23, &[4, 6]).unwrap().integral_closure_colength(), 3);
    }

    #[test]
    fn mu_examples() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(FractionalModule::maximal_ideal(&s).mu().unwrap(), 3);
        assert_eq!(FractionalModule::ring(&s).mu().unwrap(), 1);
        assert_eq!(FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap().mu().unwrap(), 2);
    }

    #[test]
    fn cancellation_needs_completion() {
        // (t^4 + t^5, t^4) over <4,5,6,7> contains t^5 although no generator has valuation 5.
        let s = sg(&[4, 5, 6, 7]);
        let gens = [SeriesElement::polynomial([(4, q(1)), (5, q(1))]), mono(4)];
        let i = FractionalModule::ideal(&s, &gens).unwrap();
        assert!(i.has_valuation(5));
        assert_eq!(i, FractionalModule::monomial_ideal(&s, &[4, 5]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let s = sg(&[2, 3]);
        assert_eq!(FractionalModule::monomial_ideal(&s, &[1]), Err(Error::NotInRing { exponent: 1 }));
        assert_eq!(FractionalModule::from_generators(&s, &[]), Err(Error::ZeroModule));
    }
}
