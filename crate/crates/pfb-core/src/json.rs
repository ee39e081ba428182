//! JSON data-transfer shapes for the wire formats: terms as
//! `{"gamma": <row-major bits>, "eta": <bits>, "coeff": "num/den"}`,
//! tableaux as `{"shape": [...], "rows": [[...], ...]}`, and the composite
//! basis / transition reports. All shapes deserialize back to the same
//! structures so emitted output round-trips.

use std::str::FromStr;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, CliffordExponent, GrassmannExponent, Monomial};
use crate::basis::{BasisChecks, BasisReport, LeadingMonomial, TransitionReport};
use crate::error::{Error, Result};
use crate::tableaux::Tableau;

/// One monomial term of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// Row-major bit string of length m·p.
    pub gamma: String,
    /// Bit string of length p.
    pub eta: String,
    /// Exact rational, always as numerator/denominator.
    pub coeff: String,
}

pub fn coeff_to_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn coeff_from_string(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| {
        BigInt::from_str(t).map_err(|_| Error::invalid(format!("bad integer `{}` in coefficient", t)))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(Error::invalid("zero denominator in coefficient"));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub fn element_to_terms(x: &AlgebraElement) -> Vec<TermJson> {
    x.terms()
        .map(|(mono, c)| TermJson {
            gamma: mono.gamma.to_row_major_bits(),
            eta: mono.eta.to_bit_string(),
            coeff: coeff_to_string(c),
        })
        .collect()
}

pub fn element_from_terms(m: usize, p: usize, terms: &[TermJson]) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(m, p)?;
    for term in terms {
        let mono = Monomial::new(
            GrassmannExponent::from_row_major_bits(&term.gamma, m, p)?,
            CliffordExponent::from_bit_string(&term.eta, p)?,
        )?;
        out.accumulate(mono, coeff_from_string(&term.coeff)?);
    }
    Ok(out)
}

/// A tableau with its (redundant, human-friendly) shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        Self {
            shape: t.shape().parts().to_vec(),
            rows: t.rows().to_vec(),
        }
    }
}

impl TryFrom<&TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: &TableauJson) -> Result<Tableau> {
        let t = Tableau::new(j.rows.clone())?;
        if t.shape().parts() != j.shape.as_slice() {
            return Err(Error::invalid(format!(
                "declared shape {:?} does not match the rows",
                j.shape
            )));
        }
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingJson {
    pub gamma: String,
    pub eta: String,
}

impl From<&LeadingMonomial> for LeadingJson {
    fn from(lm: &LeadingMonomial) -> Self {
        Self {
            gamma: lm.gamma.to_row_major_bits(),
            eta: lm.eta.to_bit_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVectorJson {
    pub tableau: TableauJson,
    pub weight: Vec<usize>,
    pub leading: LeadingJson,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReportJson {
    pub m: usize,
    pub p: usize,
    pub mu: Vec<usize>,
    pub vectors: Vec<BasisVectorJson>,
    pub checks: BasisChecks,
}

impl From<&BasisReport> for BasisReportJson {
    fn from(report: &BasisReport) -> Self {
        Self {
            m: report.m,
            p: report.p,
            mu: report.mu.counts().to_vec(),
            vectors: report
                .entries
                .iter()
                .map(|entry| BasisVectorJson {
                    tableau: (&entry.tableau).into(),
                    weight: entry.weight.counts().to_vec(),
                    leading: (&entry.leading).into(),
                    terms: element_to_terms(&entry.omega),
                })
                .collect(),
            checks: report.checks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionChecksJson {
    pub diag_ones: bool,
    pub triangular: bool,
    pub support_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionReportJson {
    pub m: usize,
    pub p: usize,
    pub mu: Vec<usize>,
    pub tableaux: Vec<TableauJson>,
    /// Row = probing tableau, column = vector, entries as exact rationals.
    pub matrix: Vec<Vec<String>>,
    pub checks: TransitionChecksJson,
}

impl From<&TransitionReport> for TransitionReportJson {
    fn from(report: &TransitionReport) -> Self {
        Self {
            m: report.m,
            p: report.p,
            mu: report.mu.counts().to_vec(),
            tableaux: report.tableaux.iter().map(Into::into).collect(),
            matrix: report
                .matrix
                .iter()
                .map(|row| row.iter().map(coeff_to_string).collect())
                .collect(),
            checks: TransitionChecksJson {
                diag_ones: report.diag_ones,
                triangular: report.triangular,
                support_ok: report.support_ok,
            },
        }
    }
}
