//! Structured outcomes of inclusion and equality checks.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "subset")]
    Subset,
    #[serde(rename = "equal")]
    Equal,
}

/// One side of a compared relation: an ideal, or a finite set of jumping
/// numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Ideal(MonomialIdeal),
    Spectrum(#[serde(with = "rational::vec_as_string")] Vec<Rational>),
}

impl Side {
    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        match self {
            Side::Ideal(i) => Some(i),
            Side::Spectrum(_) => None,
        }
    }

    fn contains(&self, w: &Witness) -> Option<bool> {
        match (self, w) {
            (Side::Ideal(i), Witness::Monomial(m)) => i.contains_monomial(m).ok(),
            (Side::Spectrum(s), Witness::Value(v)) => Some(s.contains(v)),
            _ => None,
        }
    }
}

/// An element of `lhs \ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Monomial(ExponentVector),
    Value(#[serde(with = "rational::as_string")] Rational),
}

impl Witness {
    pub fn monomial(&self) -> Option<&ExponentVector> {
        match self {
            Witness::Monomial(m) => Some(m),
            Witness::Value(_) => None,
        }
    }
}

/// Outcome of a check.
///
/// `lhs` and `rhs` are the two sides of the relation that decided the
/// verdict (the first failing one, or the last one checked). When
/// `holds` is false, `counterexample` lies in `lhs` but not in `rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub relation: Relation,
    /// Which relation of a multi-step check the sides belong to.
    pub stage: String,
    pub lhs: Side,
    pub rhs: Side,
    pub parameters: BTreeMap<String, String>,
    pub counterexample: Option<Witness>,
    /// Extra facts recorded by a check (e.g. whether an inclusion is strict).
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, String>,
}

/// One inclusion (or equality) of ideals, before it is folded into a
/// [`Verdict`].
pub(crate) struct Step {
    pub stage: String,
    pub relation: Relation,
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
}

impl Step {
    pub fn subset(stage: impl Into<String>, lhs: MonomialIdeal, rhs: MonomialIdeal) -> Self {
        Step {
            stage: stage.into(),
            relation: Relation::Subset,
            lhs,
            rhs,
        }
    }

    pub fn equal(stage: impl Into<String>, lhs: MonomialIdeal, rhs: MonomialIdeal) -> Self {
        Step {
            stage: stage.into(),
            relation: Relation::Equal,
            lhs,
            rhs,
        }
    }

    /// `(swapped, m)`: `m` lies in `lhs \ rhs`, or in `rhs \ lhs` when swapped.
    fn failure(&self) -> Result<Option<(bool, ExponentVector)>> {
        if let Some(m) = self.rhs.first_generator_outside(&self.lhs)? {
            return Ok(Some((false, m)));
        }
        if self.relation == Relation::Equal {
            if let Some(m) = self.lhs.first_generator_outside(&self.rhs)? {
                return Ok(Some((true, m)));
            }
        }
        Ok(None)
    }
}

impl Verdict {
    /// Folds the steps in order; the first failing step decides.
    pub(crate) fn from_steps(
        name: &str,
        parameters: BTreeMap<String, String>,
        steps: Vec<Step>,
    ) -> Result<Verdict> {
        assert!(!steps.is_empty(), "a verdict needs at least one step");
        let count = steps.len();
        for (i, step) in steps.into_iter().enumerate() {
            let failure = step.failure()?;
            if failure.is_none() && i + 1 < count {
                continue;
            }
            let (lhs, rhs, counterexample) = match failure {
                None => (step.lhs, step.rhs, None),
                Some((false, m)) => (step.lhs, step.rhs, Some(m)),
                // rhs ⊄ lhs: orient so the counterexample lies in lhs \ rhs.
                Some((true, m)) => (step.rhs, step.lhs, Some(m)),
            };
            return Ok(Verdict {
                name: name.to_string(),
                holds: counterexample.is_none(),
                relation: step.relation,
                stage: step.stage,
                lhs: Side::Ideal(lhs),
                rhs: Side::Ideal(rhs),
                parameters,
                counterexample: counterexample.map(Witness::Monomial),
                observations: BTreeMap::new(),
            });
        }
        unreachable!()
    }

    /// A single inclusion (`lhs ⊆ rhs`) or equality of two ideals.
    pub fn compare(
        name: &str,
        relation: Relation,
        lhs: MonomialIdeal,
        rhs: MonomialIdeal,
    ) -> Result<Verdict> {
        let step = Step {
            stage: name.to_string(),
            relation,
            lhs,
            rhs,
        };
        Verdict::from_steps(name, BTreeMap::new(), vec![step])
    }

    /// Equality of two finite sets of rationals.
    pub(crate) fn from_spectra(
        name: &str,
        parameters: BTreeMap<String, String>,
        stage: &str,
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
    ) -> Verdict {
        let missing = |a: &[Rational], b: &[Rational]| a.iter().find(|x| !b.contains(x)).cloned();
        let (lhs, rhs, counterexample) = match (missing(&lhs, &rhs), missing(&rhs, &lhs)) {
            (Some(x), _) => (lhs, rhs, Some(x)),
            (None, Some(x)) => (rhs, lhs, Some(x)),
            (None, None) => (lhs, rhs, None),
        };
        Verdict {
            name: name.to_string(),
            holds: counterexample.is_none(),
            relation: Relation::Equal,
            stage: stage.to_string(),
            lhs: Side::Spectrum(lhs),
            rhs: Side::Spectrum(rhs),
            parameters,
            counterexample: counterexample.map(Witness::Value),
            observations: BTreeMap::new(),
        }
    }

    /// `holds == false` iff there is a counterexample, and it lies in
    /// `lhs \ rhs`.
    pub fn is_consistent(&self) -> bool {
        match &self.counterexample {
            None => self.holds,
            Some(w) => {
                !self.holds
                    && self.lhs.contains(w) == Some(true)
                    && self.rhs.contains(w) == Some(false)
            }
        }
    }

    pub fn observe(&mut self, key: &str, value: impl ToString) {
        self.observations.insert(key.to_string(), value.to_string());
    }
}

pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}
