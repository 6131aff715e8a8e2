//! The JSON instance format.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use hilbound_core::{AnalysisOptions, FractionalModule, NumericalSemigroup, Rational, SeriesElement};

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed instance: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid coefficient `{0}`")]
    Coefficient(String),
    #[error("zero denominator in generator {0}")]
    ZeroDenominator(usize),
    #[error("invalid {what}: {source}")]
    Algebra { what: &'static str, source: hilbound_core::Error },
}

/// An integer written either as a JSON number or as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Integer {
    Small(i64),
    Big(String),
}

impl Integer {
    fn to_bigint(&self) -> Result<BigInt, InstanceError> {
        match self {
            Integer::Small(v) => Ok(BigInt::from(*v)),
            Integer::Big(s) => BigInt::from_str(s.trim()).map_err(|_| InstanceError::Coefficient(s.clone())),
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

/// `[numerator, denominator, exponent]`.
pub type Term = (Integer, Integer, u32);

/// A polynomial generator as a list of terms.
pub type Generator = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Named(ModuleName),
    Generators(Vec<Generator>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleName {
    Ring,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl OptionsSpec {
    pub fn resolve(&self) -> AnalysisOptions {
        let d = AnalysisOptions::default();
        AnalysisOptions {
            n_max: self.n_max.unwrap_or(d.n_max),
            trials: self.trials.unwrap_or(d.trials),
            samples: self.samples.unwrap_or(d.samples),
            seed: self.seed.unwrap_or(d.seed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub id: String,
    pub semigroup: Vec<u32>,
    pub ideal: Vec<Generator>,
    pub module: ModuleSpec,
    #[serde(default)]
    pub lift: u32,
    #[serde(default)]
    pub options: OptionsSpec,
}

/// The ring, ideal and module described by an instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ring: NumericalSemigroup,
    pub ideal: FractionalModule,
    pub module: FractionalModule,
}

pub fn monomial(e: u32) -> Generator {
    vec![(1.into(), 1.into(), e)]
}

fn element(g: &Generator, index: usize) -> Result<SeriesElement, InstanceError> {
    let mut terms = Vec::with_capacity(g.len());
    for (num, den, e) in g {
        let den = den.to_bigint()?;
        if den == BigInt::from(0) {
            return Err(InstanceError::ZeroDenominator(index));
        }
        terms.push((*e, Rational::from_bigints(num.to_bigint()?, den)));
    }
    Ok(SeriesElement::polynomial(terms))
}

/// Parses generators without building a module.
pub fn elements(gens: &[Generator]) -> Result<Vec<SeriesElement>, InstanceError> {
    gens.iter().enumerate().map(|(i, g)| element(g, i)).collect()
}

impl InstanceFile {
    pub fn read(path: &Path) -> Result<Self, InstanceError> {
        let text = fs::read_to_string(path).map_err(|source| InstanceError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        Ok(serde_json::from_str(text)?)
    }

    /// An instance with monomial generators.
    pub fn monomial(id: impl Into<String>, semigroup: &[u32], ideal: &[u32], module: Option<&[u32]>, lift: u32) -> Self {
        InstanceFile {
            id: id.into(),
            semigroup: semigroup.to_vec(),
            ideal: ideal.iter().map(|&e| monomial(e)).collect(),
            module: match module {
                None => ModuleSpec::Named(ModuleName::Ring),
                Some(m) => ModuleSpec::Generators(m.iter().map(|&e| monomial(e)).collect()),
            },
            lift,
            options: OptionsSpec::default(),
        }
    }

    pub fn build(&self) -> Result<Instance, InstanceError> {
        let algebra = |what| move |source| InstanceError::Algebra { what, source };
        let ring = NumericalSemigroup::from_generators(&self.semigroup).map_err(algebra("semigroup"))?;
        let ideal = FractionalModule::ideal(&ring, &elements(&self.ideal)?).map_err(algebra("ideal"))?;
        let module = match &self.module {
            ModuleSpec::Named(ModuleName::Ring) => FractionalModule::ring(&ring),
            ModuleSpec::Generators(g) => FractionalModule::from_generators(&ring, &elements(g)?).map_err(algebra("module"))?,
        };
        Ok(Instance { ring, ideal, module })
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("instance serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_integers() {
        let text = r#"{"id":"x","semigroup":[2,3],"ideal":[[[1,1,2],["-3","2",3]]],"module":"ring"}"#;
        let inst = InstanceFile::parse(text).unwrap();
        assert_eq!(inst.lift, 0);
        let built = inst.build().unwrap();
        assert_eq!(built.ideal.min_valuation(), 2);
        assert_eq!(InstanceFile::parse(&inst.to_json()).unwrap(), inst);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = InstanceFile::monomial("bad", &[4, 6], &[4], None, 0);
        assert!(matches!(bad.build(), Err(InstanceError::Algebra { what: "semigroup", .. })));
        let outside = InstanceFile::monomial("gap", &[2, 3], &[1], None, 0);
        assert!(matches!(outside.build(), Err(InstanceError::Algebra { what: "ideal", .. })));
        assert!(InstanceFile::parse(r#"{"id":"x","semigroup":[2,3],"ideal":[],"module":"field"}"#).is_err());
        let zero = r#"{"id":"x","semigroup":[2,3],"ideal":[[[1,0,2]]],"module":"ring"}"#;
        assert!(matches!(InstanceFile::parse(zero).unwrap().build(), Err(InstanceError::ZeroDenominator(0))));
    }
}
