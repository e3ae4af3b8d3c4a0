//! JSON documents read and written by the command-line tool.
//!
//! Every document carries an optional `"format": 1` field; other versions
//! are rejected. Polynomials are ascending coefficient arrays and
//! arbitrarily large integers are decimal strings.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::IntPoly;
use crate::ans::AbstractSystem;
use crate::automata::{Dfa, DfaJson};
use crate::error::{Error, Result};
use crate::hd0l::{Hd0lVerdict, Morphism, WordVerdict};
use crate::linrec::{GrowthVerdict, LinearRecurrence, PrimeVerdict, ResidueProfile};
use crate::positional::{bertrand_from_dbeta, BertrandSpec, PositionalSystem};
use crate::upset::{DecisionVerdict, UpSet};

/// The schema version written and accepted.
pub const FORMAT: u32 = 1;

/// Scale terms used to fit the recurrence of a Bertrand system.
pub const BERTRAND_DEPTH: usize = 64;

fn check_format(format: Option<u32>) -> Result<()> {
    match format {
        None | Some(FORMAT) => Ok(()),
        Some(v) => Err(Error::InvalidSystem(format!("unsupported format version {v}"))),
    }
}

/// `{"coeffs":[1,1],"initial":[1,2]}` with `coeffs` ordered `a_1..a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub coeffs: Vec<i64>,
    pub initial: Vec<i64>,
}

impl RecurrenceJson {
    pub fn to_recurrence(&self) -> Result<LinearRecurrence> {
        check_format(self.format)?;
        LinearRecurrence::from_i64(&self.coeffs, &self.initial)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BertrandJson {
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnsJson {
    pub language: DfaJson,
}

/// A numeration system file in one of its three shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemJson {
    Linear {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        format: Option<u32>,
        recurrence: RecurrenceJson,
        #[serde(rename = "C")]
        digit_bound: usize,
        language: DfaJson,
    },
    Bertrand {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        format: Option<u32>,
        bertrand: BertrandJson,
    },
    Ans {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        format: Option<u32>,
        ans: AnsJson,
    },
}

/// A loaded numeration system.
#[derive(Clone, Debug)]
pub enum System {
    Positional(PositionalSystem),
    Abstract(AbstractSystem),
}

impl System {
    pub fn language(&self) -> &Dfa {
        match self {
            System::Positional(s) => s.language(),
            System::Abstract(s) => s.language(),
        }
    }
}

impl SystemJson {
    pub fn to_system(&self) -> Result<System> {
        self.to_system_with_depth(BERTRAND_DEPTH)
    }

    /// As [`SystemJson::to_system`], fitting a Bertrand scale on `depth` terms.
    pub fn to_system_with_depth(&self, depth: usize) -> Result<System> {
        match self {
            SystemJson::Linear { format, recurrence, digit_bound, language } => {
                check_format(*format)?;
                let r = recurrence.to_recurrence()?;
                Ok(System::Positional(PositionalSystem::new(r, *digit_bound, &language.to_dfa()?)?))
            }
            SystemJson::Bertrand { format, bertrand } => {
                check_format(*format)?;
                let spec = BertrandSpec::new(bertrand.preperiod.clone(), bertrand.period.clone())?;
                Ok(System::Positional(bertrand_from_dbeta(&spec, depth)?))
            }
            SystemJson::Ans { format, ans } => {
                check_format(*format)?;
                Ok(System::Abstract(AbstractSystem::new(&ans.language.to_dfa()?)?))
            }
        }
    }
}

/// `{"g":{"a":"ab","b":"a"},"f":{"a":"0","b":"1"},"start":"a"}`; a missing
/// `f` is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<u32>,
    pub g: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<BTreeMap<String, String>>,
    pub start: String,
}

impl MorphismJson {
    /// `(f, g, a)`.
    pub fn to_morphisms(&self) -> Result<(Morphism, Morphism, char)> {
        check_format(self.format)?;
        let g = Morphism::parse(self.g.iter().map(|(k, v)| (k.as_str(), v.as_str())))?;
        let f = match &self.f {
            Some(f) => Morphism::parse(f.iter().map(|(k, v)| (k.as_str(), v.as_str())))?,
            None => Morphism::identity(g.domain()),
        };
        let mut chars = self.start.chars();
        let (Some(a), None) = (chars.next(), chars.next()) else {
            return Err(Error::InvalidMorphism(format!("start `{}` is not a single letter", self.start)));
        };
        Ok((f, g, a))
    }
}

/// Reads and parses a JSON file.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Reads a system file.
pub fn load_system(path: &Path) -> Result<System> {
    read_json::<SystemJson>(path)?.to_system()
}

/// Ascending coefficients of `p`.
pub fn poly_to_json(p: &IntPoly) -> Result<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().ok_or_else(|| Error::BoundTooLarge(format!("coefficient {c}"))))
        .collect()
}

pub fn poly_from_json(coeffs: &[i64]) -> IntPoly {
    IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Output of `rep` and `val`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub format: u32,
    pub n: String,
    pub word: String,
}

/// Output of `residues`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduesJson {
    pub format: u32,
    pub modulus: u64,
    pub preperiod: Vec<u64>,
    pub period: Vec<u64>,
    pub recurring_count: usize,
}

impl From<&ResidueProfile> for ResiduesJson {
    fn from(p: &ResidueProfile) -> Self {
        ResiduesJson {
            format: FORMAT,
            modulus: p.modulus,
            preperiod: p.preperiod_values.clone(),
            period: p.period_values.clone(),
            recurring_count: p.recurring_count,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PrimeVerdictJson {
    Divergent { p: u64 },
    Bounded { p: u64, a: Vec<i64>, b: Vec<i64> },
}

/// Output of `criterion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionJson {
    pub format: u32,
    pub reciprocal_poly: Vec<i64>,
    pub primes: Vec<PrimeVerdictJson>,
    pub satisfied: bool,
}

impl CriterionJson {
    pub fn new(v: &GrowthVerdict) -> Result<Self> {
        let primes = v
            .primes
            .iter()
            .map(|(p, verdict)| {
                Ok(match verdict {
                    PrimeVerdict::Divergent => PrimeVerdictJson::Divergent { p: *p },
                    PrimeVerdict::Bounded { a, b } => {
                        PrimeVerdictJson::Bounded { p: *p, a: poly_to_json(a)?, b: poly_to_json(b)? }
                    }
                })
            })
            .collect::<Result<_>>()?;
        Ok(CriterionJson {
            format: FORMAT,
            reciprocal_poly: poly_to_json(&v.reciprocal_poly)?,
            primes,
            satisfied: v.diverges_for_all_m,
        })
    }
}

/// Output of `bounds`; big values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub format: u32,
    pub states: usize,
    /// `(p, s)` pairs for the primes dividing the last coefficient.
    pub exponents: Vec<(u64, u32)>,
    pub period_bound: String,
    pub preperiod_bound: String,
}

/// An ultimately periodic set as two bit strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpSetJson {
    pub preperiod: String,
    pub period: String,
}

impl From<&UpSet> for UpSetJson {
    fn from(up: &UpSet) -> Self {
        let bits = |b: &[bool]| b.iter().map(|&x| if x { '1' } else { '0' }).collect();
        UpSetJson { preperiod: bits(up.preperiod()), period: bits(up.period()) }
    }
}

impl UpSetJson {
    pub fn to_up_set(&self) -> Result<UpSet> {
        UpSet::parse(&self.preperiod, &self.period)
    }
}

/// A decision outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VerdictJson {
    UltimatelyPeriodic { set: UpSetJson },
    NotUltimatelyPeriodic { period_bound: String, preperiod_bound: String },
    Inapplicable { reason: String },
}

impl From<&DecisionVerdict> for VerdictJson {
    fn from(v: &DecisionVerdict) -> Self {
        match v {
            DecisionVerdict::UltimatelyPeriodic { up } => VerdictJson::UltimatelyPeriodic { set: up.into() },
            DecisionVerdict::NotUltimatelyPeriodic { period_bound, preperiod_bound } => {
                VerdictJson::NotUltimatelyPeriodic {
                    period_bound: period_bound.to_string(),
                    preperiod_bound: preperiod_bound.to_string(),
                }
            }
            DecisionVerdict::Inapplicable { reason } => VerdictJson::Inapplicable { reason: reason.clone() },
        }
    }
}

/// Output of `decide`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionJson {
    pub format: u32,
    #[serde(flatten)]
    pub verdict: VerdictJson,
}

/// Output of `ans-enumerate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationJson {
    pub format: u32,
    pub words: Vec<RepresentationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WordVerdictJson {
    UltimatelyPeriodic { preperiod: usize, period: usize },
    NotUltimatelyPeriodic,
    Inapplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterVerdictJson {
    pub letter: String,
    #[serde(flatten)]
    pub verdict: VerdictJson,
}

/// Output of `hd0l-decide`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hd0lJson {
    pub format: u32,
    pub letters: Vec<LetterVerdictJson>,
    pub overall: WordVerdictJson,
}

impl From<&Hd0lVerdict> for Hd0lJson {
    fn from(v: &Hd0lVerdict) -> Self {
        let overall = match &v.overall {
            WordVerdict::UltimatelyPeriodic { preperiod, period } => {
                WordVerdictJson::UltimatelyPeriodic { preperiod: *preperiod, period: *period }
            }
            WordVerdict::NotUltimatelyPeriodic => WordVerdictJson::NotUltimatelyPeriodic,
            WordVerdict::Inapplicable { reason } => WordVerdictJson::Inapplicable { reason: reason.clone() },
        };
        Hd0lJson {
            format: FORMAT,
            letters: v
                .letters
                .iter()
                .map(|(b, verdict)| LetterVerdictJson { letter: b.clone(), verdict: verdict.into() })
                .collect(),
            overall,
        }
    }
}
