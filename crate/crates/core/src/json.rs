//! JSON mirrors of the text formats, plus the interval-partition certificate
//! emitted for sdepth computations.
//!
//! Monomials are written in the same `x^2*y` syntax as the text formats;
//! poset points (`g`, interval ends) are raw exponent vectors.

use serde::{Deserialize, Serialize};

use crate::decomposition::{StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::filtration::{FiltrationStep, PrimeFiltration};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::{CharacteristicPoset, Interval, IntervalPartition, SdepthResult, SearchLimits};
use crate::simplicial::SimplicialComplex;
use crate::text::parse_monomial;
use crate::vars::{VarSubset, VariableSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub offset: String,
    pub free: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub spaces: Vec<SpaceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub offset: String,
    pub prime: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub steps: Vec<StepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lower: Vec<u32>,
    pub upper: Vec<u32>,
}

/// An optimal interval partition with the data needed to re-check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    pub g: Vec<u32>,
    pub value: usize,
    pub intervals: Vec<IntervalJson>,
    pub decomposition: DecompositionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

/// Any JSON input accepted by `verify`, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum JsonDocument {
    Ideal(IdealJson),
    Decomposition(DecompositionJson),
    Filtration(FiltrationJson),
    Certificate(CertificateJson),
    Complex(ComplexJson),
}

impl JsonDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

fn names_of(set: VarSubset, vars: &VariableSet) -> Vec<String> {
    set.names(vars).into_iter().map(String::from).collect()
}

fn subset_of(names: &[String], vars: &VariableSet) -> Result<VarSubset> {
    names
        .iter()
        .try_fold(VarSubset::EMPTY, |s, n| Ok(s.insert(vars.index_of(n)?)))
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        Self {
            vars: ideal.vars().names().to_vec(),
            gens: ideal
                .generators()
                .iter()
                .map(|g| g.display(ideal.vars()).to_string())
                .collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        ideal_from(&self.vars, &self.gens)
    }
}

fn ideal_from(vars: &[String], gens: &[String]) -> Result<MonomialIdeal> {
    let vars = VariableSet::new(vars.iter().cloned())?;
    let gens = gens
        .iter()
        .map(|g| parse_monomial(&vars, g))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(vars, gens)
}

impl DecompositionJson {
    pub fn from_decomposition(d: &StanleyDecomposition) -> Self {
        let base = IdealJson::from_ideal(d.ideal());
        let vars = d.ideal().vars();
        Self {
            vars: base.vars,
            gens: base.gens,
            spaces: d
                .spaces()
                .iter()
                .map(|s| SpaceJson {
                    offset: s.offset().display(vars).to_string(),
                    free: names_of(s.free_vars(), vars),
                })
                .collect(),
        }
    }

    pub fn to_decomposition(&self) -> Result<StanleyDecomposition> {
        let ideal = ideal_from(&self.vars, &self.gens)?;
        let spaces = self
            .spaces
            .iter()
            .map(|s| {
                Ok(StanleySpace::new(
                    parse_monomial(ideal.vars(), &s.offset)?,
                    subset_of(&s.free, ideal.vars())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        StanleyDecomposition::new(ideal, spaces)
    }
}

impl FiltrationJson {
    pub fn from_filtration(f: &PrimeFiltration) -> Self {
        let base = IdealJson::from_ideal(f.ideal());
        let vars = f.ideal().vars();
        Self {
            vars: base.vars,
            gens: base.gens,
            steps: f
                .steps()
                .iter()
                .map(|s| StepJson {
                    offset: s.offset().display(vars).to_string(),
                    prime: names_of(s.prime(), vars),
                })
                .collect(),
        }
    }

    pub fn to_filtration(&self) -> Result<PrimeFiltration> {
        let ideal = ideal_from(&self.vars, &self.gens)?;
        let steps = self
            .steps
            .iter()
            .map(|s| {
                Ok(FiltrationStep::new(
                    parse_monomial(ideal.vars(), &s.offset)?,
                    subset_of(&s.prime, ideal.vars())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeFiltration::new(ideal, steps)
    }
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        Self {
            vertices: c.vertices().names().to_vec(),
            facets: c.facets().iter().map(|f| names_of(*f, c.vertices())).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let vars = VariableSet::new(self.vertices.iter().cloned())?;
        let facets = self
            .facets
            .iter()
            .map(|f| subset_of(f, &vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::new(vars, facets))
    }
}

impl CertificateJson {
    pub fn new(ideal: &MonomialIdeal, result: &SdepthResult, decomposition: &StanleyDecomposition) -> Self {
        let base = IdealJson::from_ideal(ideal);
        Self {
            vars: base.vars,
            gens: base.gens,
            g: result.g.exponents().to_vec(),
            value: result.value,
            intervals: result
                .partition
                .intervals
                .iter()
                .map(|iv| IntervalJson {
                    lower: iv.lower.exponents().to_vec(),
                    upper: iv.upper.exponents().to_vec(),
                })
                .collect(),
            decomposition: DecompositionJson::from_decomposition(decomposition),
        }
    }

    pub fn partition(&self) -> IntervalPartition {
        IntervalPartition {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval::new(Monomial::new(iv.lower.clone()), Monomial::new(iv.upper.clone())))
                .collect(),
        }
    }

    /// Re-checks every claim: `g`, the partition, its value, and that the
    /// embedded decomposition is valid, equals the one the partition induces
    /// and has the claimed sdepth.
    pub fn check(&self, limits: &SearchLimits) -> Result<StanleyDecomposition> {
        let ideal = ideal_from(&self.vars, &self.gens)?;
        let poset = CharacteristicPoset::new(&ideal, limits)?;
        if poset.g().exponents() != self.g.as_slice() {
            return Err(Error::InvalidPartition(format!(
                "certificate g = {:?}, but the generators give {:?}",
                self.g,
                poset.g().exponents()
            )));
        }
        let partition = self.partition();
        let induced = poset.partition_to_decomposition(&partition)?;
        let value = poset.partition_value(&partition).unwrap_or(0);
        if value != self.value {
            return Err(Error::InvalidPartition(format!(
                "certificate claims value {}, partition achieves {value}",
                self.value
            )));
        }
        let embedded = self.decomposition.to_decomposition()?;
        if embedded != induced {
            return Err(Error::InvalidDecomposition(
                "embedded decomposition differs from the one induced by the partition".into(),
            ));
        }
        Ok(induced)
    }
}
