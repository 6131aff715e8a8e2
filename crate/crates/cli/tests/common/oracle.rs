//! Dense truncated linear algebra over Q, independent of the engine's value-set
//! machinery: `ℓ(M / I^n M)` as a difference of ranks of spanning sets in
//! `k[[t]] / t^T`.

use hilbound::instance::{elements, InstanceFile, ModuleSpec};
use hilbound_core::{NumericalSemigroup, Rational};

type Row = Vec<Rational>;

/// Row-reduced basis of a subspace of `Q^width`.
struct Basis {
    width: usize,
    rows: Vec<(usize, Row)>,
}

impl Basis {
    fn new(width: usize) -> Self {
        Basis { width, rows: Vec::new() }
    }

    fn insert(&mut self, mut v: Row) {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for j in *p..self.width {
                    if !r[j].is_zero() {
                        v[j] = &v[j] - &(&c * &r[j]);
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut().skip(p) {
                *x = &*x * &inv;
            }
            self.rows.push((p, v));
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn dense(terms: &[(u32, Rational)], width: usize) -> Row {
    let mut row = vec![Rational::ZERO; width];
    for (e, c) in terms {
        if (*e as usize) < width {
            row[*e as usize] = &row[*e as usize] + c;
        }
    }
    row
}

fn multiply(a: &Row, b: &[(u32, Rational)], width: usize) -> Row {
    let mut out = vec![Rational::ZERO; width];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (e, c) in b {
            let k = i + *e as usize;
            if k < width {
                out[k] = &out[k] + &(x * c);
            }
        }
    }
    out
}

type Poly = Vec<(u32, Rational)>;

fn polys(gens: Vec<hilbound_core::SeriesElement>) -> Vec<Poly> {
    gens.iter().map(|g| g.terms().iter().map(|(e, c)| (*e, c.clone())).collect()).collect()
}

fn valuation(p: &Poly) -> u32 {
    p.iter().filter(|(_, c)| !c.is_zero()).map(|(e, _)| *e).min().expect("nonzero generator")
}

/// `ℓ(M / I^n M)` for `n = 1..=count`.
pub fn samuel_lengths(instance: &InstanceFile, count: usize) -> Vec<i64> {
    let s = NumericalSemigroup::from_generators(&instance.semigroup).unwrap();
    let ideal = polys(elements(&instance.ideal).unwrap());
    let module = match &instance.module {
        ModuleSpec::Named(_) => vec![vec![(0, Rational::ONE)]],
        ModuleSpec::Generators(g) => polys(elements(g).unwrap()),
    };
    let c = s.conductor();
    let vi = ideal.iter().map(valuation).min().unwrap();
    let vm = module.iter().map(valuation).min().unwrap();
    let top = |n: usize| (vm + n as u32 * vi + c) as usize;

    // M modulo t^{T_0}; t^{T_0} k[[t]] lies in M.
    let t0 = top(0);
    let mut basis = Basis::new(t0);
    for g in &module {
        for e in (0..t0 as u32).filter(|&e| s.contains(e as i64)) {
            let shifted: Poly = g.iter().map(|(f, x)| (f + e, x.clone())).collect();
            basis.insert(dense(&shifted, t0));
        }
    }
    // t^{T_0} k[[t]] ⊆ M, so dim M / t^T grows by one per extra exponent.
    let dim_m = |t: usize| (basis.rank() + t - t0) as i64;
    let mut current: Vec<Row> = basis.rows.iter().map(|(_, r)| r.clone()).collect();
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        let t = top(n);
        let mut next = Basis::new(t);
        for row in &current {
            for f in &ideal {
                next.insert(multiply(row, f, t));
            }
        }
        out.push(dim_m(t) - next.rank() as i64);
        current = next.rows.into_iter().map(|(_, r)| r).collect();
    }
    out
}
