//! Numerical semigroups `S = <s_1, ..., s_k>` and their basic arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup: a submonoid of the naturals with finite complement.
///
/// Immutable after construction. Two semigroups compare equal when they
/// have the same gaps, regardless of the generating set they were built from.
#[derive(Clone, Debug, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    minimal_generators: Vec<u32>,
    frobenius: i64,
    conductor: u32,
    gaps: Vec<u32>,
    #[serde(skip)]
    member_below_conductor: Vec<bool>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds `<gens>`. Zeros are ignored; the remaining generators must be coprime.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        let mut generators: Vec<u32> = gens.iter().copied().filter(|&g| g > 0).collect();
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let g = generators.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }

        // Apery set with respect to the smallest generator via shortest paths
        // on residues; the Frobenius number is its maximum minus that generator.
        let m = generators[0] as usize;
        let apery = shortest_residue_paths(m, &generators);
        let max_apery = *apery.iter().max().expect("m >= 1");
        let frobenius = max_apery as i64 - m as i64;
        let conductor = (frobenius + 1) as u32;

        let mut member = vec![false; conductor as usize];
        for (n, slot) in member.iter_mut().enumerate() {
            *slot = apery[n % m] <= n as u64;
        }
        let gaps = (0..conductor).filter(|&n| !member[n as usize]).collect();

        let mut s = NumericalSemigroup {
            generators,
            minimal_generators: Vec::new(),
            frobenius,
            conductor,
            gaps,
            member_below_conductor: member,
        };
        s.minimal_generators = s.compute_minimal_generators();
        Ok(s)
    }

    /// The regular case `S = N`.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// The minimal generating set; its size is the embedding dimension.
    pub fn minimal_generators(&self) -> &[u32] {
        &self.minimal_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest gap, or `-1` when `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n >= self.conductor as i64 {
            return true;
        }
        self.member_below_conductor[n as usize]
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    /// Elements of `S` strictly below `bound`, ascending.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&n| self.contains(n as i64))
    }

    /// Least element of `S` in each residue class modulo `m`.
    pub fn apery_set(&self, m: u32) -> Result<Vec<u32>> {
        if m == 0 || !self.contains(m as i64) {
            return Err(Error::NotMember { value: m });
        }
        let mut out = vec![u32::MAX; m as usize];
        let mut remaining = m as usize;
        let mut n = 0u32;
        while remaining > 0 {
            let r = (n % m) as usize;
            if out[r] == u32::MAX && self.contains(n as i64) {
                out[r] = n;
                remaining -= 1;
            }
            n += 1;
        }
        Ok(out)
    }

    fn compute_minimal_generators(&self) -> Vec<u32> {
        let mut minimal: Vec<u32> = Vec::new();
        for &g in &self.generators {
            // g is redundant iff g = a + b with a, b nonzero members.
            let redundant = (1..g).any(|a| self.contains(a as i64) && self.contains((g - a) as i64));
            if !redundant {
                minimal.push(g);
            }
        }
        minimal
    }
}

/// `dist[r]` = least element of the monoid generated by `gens` congruent to `r` mod `m`.
fn shortest_residue_paths(m: usize, gens: &[u32]) -> Vec<u64> {
    let mut dist = vec![u64::MAX; m];
    let mut done = vec![false; m];
    dist[0] = 0;
    for _ in 0..m {
        let mut best = None;
        for r in 0..m {
            if !done[r] && dist[r] != u64::MAX && best.is_none_or(|b: usize| dist[r] < dist[b]) {
                best = Some(r);
            }
        }
        let Some(u) = best else { break };
        done[u] = true;
        for &g in gens {
            let v = (u + g as usize) % m;
            let cand = dist[u] + g as u64;
            if cand < dist[v] {
                dist[v] = cand;
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.gaps(), &[1]);
        assert!(!s.contains(1));
        assert!(s.contains(5));
        assert_eq!(s.multiplicity(), 2);
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(s.apery_set(1), Err(Error::NotMember { value: 1 }));
    }

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.gaps(), &[1, 2]);
        assert!(!s.contains(2));
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(s.embedding_dimension(), 3);
    }

    #[test]
    fn multiplicity_examples() {
        let s = NumericalSemigroup::from_generators(&[5, 6, 7, 8, 9]).unwrap();
        assert_eq!(s.multiplicity(), 5);
    }

    #[test]
    fn not_coprime() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCoprime { gcd: 2 })
        );
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyGenerators));
    }

    #[test]
    fn naturals_have_no_gaps() {
        let s = NumericalSemigroup::naturals();
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert!(s.contains(0));
        assert!(!s.contains(-1));
    }

    #[test]
    fn frobenius_beyond_product_of_two_smallest() {
        // <4, 6, 101>: every odd number below 101 is a gap.
        let s = NumericalSemigroup::from_generators(&[4, 6, 101]).unwrap();
        assert!(s.frobenius() > 24);
        assert!(!s.contains(99));
        // 103 = 101 + 2 needs the gap 2.
        assert_eq!(s.frobenius(), 103);
    }

    #[test]
    fn redundant_generators_are_dropped_from_minimal_set() {
        let s = NumericalSemigroup::from_generators(&[2, 3, 4, 5, 6]).unwrap();
        assert_eq!(s.minimal_generators(), &[2, 3]);
        assert_eq!(s, NumericalSemigroup::from_generators(&[2, 3]).unwrap());
    }
}
