//! Cohomology tables for the two models and their comparison.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::bicomplex::cyclic_bicomplex;
use super::complex::{CochainComplex, CohomologyGroup};
use super::mixed::{mixed_of_cyclic, MixedComplex};
use crate::cyclic::ParaCyclicModule;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Bicomplex,
    Mixed,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Bicomplex => "bicomplex",
            Model::Mixed => "mixed",
        })
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bicomplex" => Ok(Model::Bicomplex),
            "mixed" => Ok(Model::Mixed),
            other => Err(Error::Parse(format!("unknown model '{other}'"))),
        }
    }
}

/// `dim HC^n` for `n < top`; degrees above `stable_range` are affected by
/// the truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub model: Model,
    pub degrees: Vec<usize>,
    pub stable_range: i64,
}

impl CohomologyTable {
    pub fn is_stable(&self, n: usize) -> bool {
        (n as i64) <= self.stable_range
    }

    pub fn stable_degrees(&self) -> &[usize] {
        let k = (self.stable_range + 1).clamp(0, self.degrees.len() as i64) as usize;
        &self.degrees[..k]
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<10} {:>6}  dim", "model", "degree")?;
        for (n, d) in self.degrees.iter().enumerate() {
            let flag = if self.is_stable(n) { "" } else { "  (truncation-affected)" };
            writeln!(f, "{:<10} {:>6}  {}{}", self.model.to_string(), n, d, flag)?;
        }
        Ok(())
    }
}

/// Certified degrees for top degree `top`.
pub fn stable_range(top: usize) -> i64 {
    top as i64 - 2
}

/// The cochain complex computing cyclic cohomology in one model.
#[derive(Clone, Debug)]
pub struct CyclicCohomology<F: Field> {
    pub model: Model,
    pub complex: CochainComplex<F>,
    pub stable_range: i64,
}

impl<F: Field> CyclicCohomology<F> {
    pub fn new(x: &ParaCyclicModule<F>, model: Model) -> Result<Self> {
        let complex = match model {
            Model::Bicomplex => cyclic_bicomplex(x)?.total_cochains(),
            Model::Mixed => mixed_of_cyclic(x)?.total_cochains(),
        };
        Ok(CyclicCohomology { model, complex, stable_range: stable_range(x.top()) })
    }

    pub fn from_mixed(m: &MixedComplex<F>) -> Self {
        CyclicCohomology { model: Model::Mixed, complex: m.total_cochains(), stable_range: stable_range(m.top()) }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if (n as i64) > self.stable_range {
            return Err(Error::OutOfStableRange { degree: n, stable: self.stable_range });
        }
        Ok(())
    }

    /// `HC^n` with representatives; block 0 of a total cochain is a cochain
    /// on `X_n` in both models.
    pub fn group(&self, n: usize) -> Result<CohomologyGroup<F>> {
        self.guard(n)?;
        Ok(self.complex.cohomology(n))
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        self.guard(n)?;
        Ok(self.complex.cohomology_dim(n))
    }

    pub fn table(&self, parallel: bool) -> CohomologyTable {
        CohomologyTable { model: self.model, degrees: self.complex.cohomology_dims(parallel), stable_range: self.stable_range }
    }
}

/// Hochschild cohomology dimensions `HH^n`, `n < top`.
pub fn hochschild_dims<F: Field>(x: &ParaCyclicModule<F>, parallel: bool) -> Result<Vec<usize>> {
    Ok(mixed_of_cyclic(x)?.hochschild_cochains().cohomology_dims(parallel))
}

pub fn cohomology_table<F: Field>(x: &ParaCyclicModule<F>, model: Model, parallel: bool) -> Result<CohomologyTable> {
    Ok(CyclicCohomology::new(x, model)?.table(parallel))
}

/// Requires equal dimensions in the common stable range.
pub fn compare_tables(a: &CohomologyTable, b: &CohomologyTable) -> Report {
    let mut r = Report::new();
    let range = a.stable_range.min(b.stable_range);
    for n in 0..=range.max(-1) {
        let n = n as usize;
        let (x, y) = (a.degrees.get(n), b.degrees.get(n));
        r.require(x == y, format!("{} and {} models agree", a.model, b.model), || {
            format!("degree {n}: {x:?} vs {y:?}")
        });
    }
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelComparison {
    pub bicomplex: CohomologyTable,
    pub mixed: CohomologyTable,
    pub report: Report,
}

impl ModelComparison {
    pub fn agrees(&self) -> bool {
        self.report.is_empty()
    }
}

pub fn compare_models<F: Field>(x: &ParaCyclicModule<F>, parallel: bool) -> Result<ModelComparison> {
    let bicomplex = cohomology_table(x, Model::Bicomplex, parallel)?;
    let mixed = cohomology_table(x, Model::Mixed, parallel)?;
    let report = compare_tables(&bicomplex, &mixed);
    Ok(ModelComparison { bicomplex, mixed, report })
}
