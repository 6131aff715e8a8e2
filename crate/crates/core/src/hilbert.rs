//! Hilbert functions, Hilbert series numerators and Hilbert coefficients.

use alloc::format;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{FractionalModule, PowerCache};

/// `C(n, k)` with the convention `C(n, k) = 0` whenever `n < k` (including negative `n`).
pub fn binomial(n: i64, k: u32) -> i64 {
    if n < k as i64 {
        return 0;
    }
    let k = (k as i64).min(n - k as i64);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// The binomial polynomial `x (x-1) ... (x-k+1) / k!` evaluated at any integer `x`.
pub fn binomial_poly(x: i64, k: u32) -> i64 {
    let mut acc: i128 = 1;
    for i in 0..k as i64 {
        acc = acc * (x - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `e_i = sum_j C(j, i) Q_j`, the `i`-th derivative of `Q` at 1 divided by `i!`.
pub fn hilbert_coefficient(q: &[i64], i: u32) -> i64 {
    q.iter().enumerate().map(|(j, &c)| binomial(j as i64, i) * c).sum()
}

/// Hilbert data of a pair `(I, M)`, possibly after a formal dimension lift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Formal dimension.
    pub d: u32,
    /// `H(0), ..., H(n)` for the computed range.
    pub h: Vec<i64>,
    /// Numerator of the Hilbert series over `(1 - z)^d`.
    pub q: Vec<i64>,
    /// Postulation number.
    pub pn: u32,
    /// `e_0, e_1, e_2`.
    pub e: [i64; 3],
}

impl HilbertData {
    pub fn from_numerator(q: Vec<i64>, d: u32, len: usize) -> Self {
        let mut h: Vec<i64> = (0..len).map(|n| q.get(n).copied().unwrap_or(0)).collect();
        for _ in 0..d {
            for n in 1..h.len() {
                h[n] += h[n - 1];
            }
        }
        let e = [hilbert_coefficient(&q, 0), hilbert_coefficient(&q, 1), hilbert_coefficient(&q, 2)];
        let mut data = HilbertData { d, h, q, pn: 0, e };
        data.pn = data.postulation_number();
        data
    }

    pub fn e0(&self) -> i64 {
        self.e[0]
    }

    pub fn e1(&self) -> i64 {
        self.e[1]
    }

    pub fn e2(&self) -> i64 {
        self.e[2]
    }

    /// The Hilbert polynomial at `n`: `sum_j Q_j C(n - j + d - 1, d - 1)` as a polynomial in `n`.
    pub fn hilbert_polynomial(&self, n: i64) -> i64 {
        self.q
            .iter()
            .enumerate()
            .map(|(j, &c)| c * binomial_poly(n - j as i64 + self.d as i64 - 1, self.d - 1))
            .sum()
    }

    /// `H(n)`, extending past the stored range through the polynomial.
    pub fn value(&self, n: u32) -> i64 {
        match self.h.get(n as usize) {
            Some(&v) => v,
            None => self.hilbert_polynomial(n as i64),
        }
    }

    fn postulation_number(&self) -> u32 {
        let top = self.q.len() as i64;
        let mut pn = 0u32;
        for n in 0..=top.max(0) {
            let v = self.q_series_value(n as u32);
            if v != self.hilbert_polynomial(n) {
                pn = n as u32 + 1;
            }
        }
        pn
    }

    fn q_series_value(&self, n: u32) -> i64 {
        self.q
            .iter()
            .enumerate()
            .take_while(|&(j, _)| j as u32 <= n)
            .map(|(j, &c)| c * binomial(n as i64 - j as i64 + self.d as i64 - 1, self.d - 1))
            .sum()
    }

    /// `ℓ(M / I^{n+1} M)` for `d = 1` data, i.e. the partial sums of `H`.
    pub fn samuel(&self, n: u32) -> i64 {
        (0..=n).map(|k| self.value(k)).sum()
    }

    /// Adjoins `k` analytically independent variables: `Q` and `e` stay, `d` grows.
    pub fn lift(&self, k: u32) -> HilbertData {
        HilbertData::from_numerator(self.q.clone(), self.d + k, self.h.len())
    }
}

/// `ℓ(I^n M / I^{n+1} M)`.
pub fn hilbert_function(cache: &mut PowerCache, n: u32) -> Result<i64> {
    let lower = cache.get(n)?;
    let upper = cache.get(n + 1)?;
    Ok(lower.value_gap_count(&upper) as i64)
}

/// `ℓ(M / I^{n+1} M)`.
pub fn hilbert_samuel(cache: &mut PowerCache, n: u32) -> Result<i64> {
    let base = cache.base().clone();
    let power = cache.get(n + 1)?;
    Ok(base.length_quotient(&power)? as i64)
}

/// Computes `H` until it has equalled `e_0 = min v(I)` for `window`
/// consecutive values and reads off the numerator, postulation number and
/// coefficients.
///
/// Every module here has rank one, so `e_0(I, M) = ℓ(M/xM) = v(x)` for `x` of
/// minimal valuation, and `H(n) = e_0` implies `I^{n+1}M = x I^n M`, after
/// which `H` is constant. Plateaus below `e_0` do occur and are not mistaken
/// for stabilization.
pub fn hilbert_numerator(cache: &mut PowerCache, window: u32, n_max: u32) -> Result<HilbertData> {
    let window = window.max(1);
    let e0 = cache.ideal().min_valuation() as i64;
    let mut h: Vec<i64> = Vec::new();
    let mut run_start = 0usize;
    loop {
        let n = h.len() as u32;
        if n > n_max {
            return Err(Error::NonStabilizing { what: "Hilbert function", limit: n_max });
        }
        let v = hilbert_function(cache, n)?;
        if v > e0 {
            return Err(Error::InvariantViolation(format!("H({n}) = {v} exceeds e0 = {e0}")));
        }
        if v != e0 || h.last() != Some(&v) {
            run_start = h.len();
        }
        h.push(v);
        if v == e0 && h.len() - run_start >= window as usize {
            break;
        }
    }
    let pn = run_start;
    let mut q = Vec::with_capacity(pn + 1);
    for j in 0..=pn {
        let prev = if j == 0 { 0 } else { h[j - 1] };
        q.push(h[j] - prev);
    }
    let data = HilbertData::from_numerator(q, 1, h.len());
    if data.h != h || data.pn as usize != pn {
        return Err(Error::InvariantViolation("Hilbert numerator does not reproduce H".into()));
    }
    Ok(data)
}

/// Convenience wrapper computing [`hilbert_numerator`] for `(I, M)` from scratch.
pub fn hilbert_data(ideal: &FractionalModule, module: &FractionalModule, window: u32, n_max: u32) -> Result<HilbertData> {
    let mut cache = PowerCache::new(ideal, module);
    hilbert_numerator(&mut cache, window, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::semigroup::NumericalSemigroup;
    use crate::valuation::SeriesElement;
    use alloc::vec;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(-3, 2), 0);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial_poly(-1, 2), 1);
        assert_eq!(binomial_poly(5, 0), 1);
    }

    #[test]
    fn coefficients_of_numerators() {
        assert_eq!(hilbert_coefficient(&[2, 0, 1], 2), 1);
        assert_eq!(hilbert_coefficient(&[1, 1], 0), 2);
        assert_eq!(hilbert_coefficient(&[1, 1], 5), 0);
    }

    #[test]
    fn cusp_maximal_ideal() {
        let s = sg(&[2, 3]);
        let m = FractionalModule::maximal_ideal(&s);
        let a = FractionalModule::ring(&s);
        let data = hilbert_data(&m, &a, 4, 64).unwrap();
        assert_eq!(data.q, vec![1, 1]);
        assert_eq!(data.pn, 1);
        assert_eq!(data.e, [2, 1, 0]);
        assert_eq!(&data.h[..4], &[1, 2, 2, 2]);

        let on_m = hilbert_data(&m, &m, 4, 64).unwrap();
        assert_eq!(on_m.pn, 0);
        assert_eq!(on_m.e, [2, 0, 0]);
        assert!(on_m.h.iter().all(|&v| v == 2));
    }

    #[test]
    fn regular_parameter_ideal() {
        let s = NumericalSemigroup::naturals();
        let i = FractionalModule::monomial_ideal(&s, &[1]).unwrap();
        let a = FractionalModule::ring(&s);
        let data = hilbert_data(&i, &a, 4, 64).unwrap();
        assert_eq!(data.q, vec![1]);
        assert_eq!(data.pn, 0);
        assert_eq!(data.e, [1, 0, 0]);
    }

    #[test]
    fn t3_with_a_three() {
        let s = sg(&[3, 4, 5]);
        let i = FractionalModule::monomial_ideal(&s, &[3, 4]).unwrap();
        let a = FractionalModule::ring(&s);
        let mut cache = PowerCache::new(&i, &a);
        let data = hilbert_numerator(&mut cache, 4, 64).unwrap();
        assert_eq!(data.q, vec![2, 0, 1]);
        assert_eq!(data.e, [3, 2, 1]);
        assert_eq!(&data.h[..3], &[2, 2, 3]);
        for n in 0..6 {
            assert_eq!(hilbert_samuel(&mut cache, n).unwrap(), data.samuel(n));
        }
        assert_eq!(hilbert_samuel(&mut cache, 5).unwrap(), 6 * 3 - 2);
    }

    #[test]
    fn plateau_below_multiplicity() {
        let s = sg(&[6, 7, 8, 9, 10, 11]);
        let gens = [
            SeriesElement::monomial(11, Rational::ONE),
            SeriesElement::polynomial([(12, Rational::ONE), (23, Rational::ONE)]),
        ];
        let i = FractionalModule::ideal(&s, &gens).unwrap();
        let data = hilbert_data(&i, &FractionalModule::ring(&s), 4, 64).unwrap();
        assert_eq!(&data.h[..7], &[10, 10, 10, 10, 10, 11, 11]);
        assert_eq!(data.pn, 5);
        assert_eq!(data.e0(), 11);
    }

    #[test]
    fn lifts_compose() {
        let data = HilbertData::from_numerator(vec![2, 0, 1], 1, 10);
        let once = data.lift(1);
        assert_eq!(once.d, 2);
        assert_eq!(once.e, [3, 2, 1]);
        assert_eq!(once.lift(1), data.lift(2));
        assert_eq!(data.lift(2).h[..4], [2, 6, 13, 23]);
        for n in 0..10 {
            assert_eq!(once.value(n), once.h[n as usize]);
        }
        let trivial = HilbertData::from_numerator(vec![1], 1, 5).lift(3);
        assert_eq!(trivial.e, [1, 0, 0]);
    }

    #[test]
    fn postulation_after_lift() {
        // Q = [1, 1] at d = 2: H = 1, 3, 5, ... agrees with 2n + 1 from n = 0.
        let data = HilbertData::from_numerator(vec![1, 1], 2, 6);
        assert_eq!(data.pn, 0);
        let t3 = HilbertData::from_numerator(vec![2, 0, 1], 2, 6);
        assert_eq!(t3.pn, 1);
    }
}
