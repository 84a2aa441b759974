//! JSON serialization of structure tensors as sparse coordinate lists.
//!
//! A coefficient is either a rational string such as `"-3/2"` or, over a
//! cyclotomic field, a list of rational strings giving coordinates in the
//! power basis 1, q, q², ….

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use scalar_ring::{cyclotomic_field, CyclotomicField, FieldElement};

use crate::algebra::StructureTensors;
use crate::{HopfAlgebraData, HopfError};

/// A serialized field element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Rational(String),
    Coords(Vec<String>),
}

impl Coefficient {
    pub fn encode(x: &FieldElement) -> Self {
        match x.to_rational() {
            Some(r) => Coefficient::Rational(r.to_string()),
            None => Coefficient::Coords(x.coords().iter().map(|c| c.to_string()).collect()),
        }
    }

    pub fn decode(&self, field: &Arc<CyclotomicField>) -> Result<FieldElement, HopfError> {
        match self {
            Coefficient::Rational(s) => Ok(FieldElement::parse_rational(s)?),
            Coefficient::Coords(cs) => {
                let coords = cs
                    .iter()
                    .map(|c| FieldElement::parse_rational(c).map(|x| x.to_rational().cloned().unwrap_or_default()))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(field.element(coords))
            }
        }
    }
}

/// The on-disk document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfDocument {
    pub name: String,
    /// Order n of the coefficient field ℚ(ζ_n); 1 means ℚ.
    pub cyclotomic_order: u32,
    pub dimension: usize,
    pub labels: Vec<String>,
    pub degree: Vec<i64>,
    pub parity: Vec<u8>,
    /// Entries (i, j, k, c): e_i · e_j has coefficient c on e_k.
    pub mult: Vec<(usize, usize, usize, Coefficient)>,
    pub unit: Vec<(usize, Coefficient)>,
    /// Entries (k, i, j, c): Δ(e_k) has coefficient c on e_i ⊗ e_j.
    pub comult: Vec<(usize, usize, usize, Coefficient)>,
    pub counit: Vec<(usize, Coefficient)>,
    /// Entries (j, i, c): S(e_j) has coefficient c on e_i.
    pub antipode: Vec<(usize, usize, Coefficient)>,
}

impl HopfDocument {
    pub fn from_algebra(h: &HopfAlgebraData) -> Self {
        let d = h.dim();
        let enc = Coefficient::encode;
        Self {
            name: h.name().to_string(),
            cyclotomic_order: h.field().order(),
            dimension: d,
            labels: h.labels().to_vec(),
            degree: (0..d).map(|i| h.degree(i)).collect(),
            parity: h.parities().to_vec(),
            mult: (0..d)
                .flat_map(|i| (0..d).map(move |j| (i, j)))
                .flat_map(|(i, j)| h.mult_basis(i, j).iter().map(move |(k, c)| (i, j, *k, enc(c))))
                .collect(),
            unit: h.unit_sparse().iter().map(|(k, c)| (*k, enc(c))).collect(),
            comult: (0..d).flat_map(|k| h.comult_basis(k).iter().map(move |(i, j, c)| (k, *i, *j, enc(c)))).collect(),
            counit: (0..d).filter(|&k| !h.counit_basis(k).is_zero()).map(|k| (k, enc(h.counit_basis(k)))).collect(),
            antipode: (0..d).flat_map(|j| h.antipode_basis(j).iter().map(move |(i, c)| (j, *i, enc(c)))).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<HopfAlgebraData, HopfError> {
        let d = self.dimension;
        let field = cyclotomic_field(self.cyclotomic_order)?;
        let check =
            |i: usize| if i < d { Ok(i) } else { Err(HopfError::Shape(format!("basis index {i} out of range"))) };
        let mut mult = vec![Vec::new(); d * d];
        for (i, j, k, c) in &self.mult {
            mult[check(*i)? * d + check(*j)?].push((check(*k)?, c.decode(&field)?));
        }
        let mut comult = vec![Vec::new(); d];
        for (k, i, j, c) in &self.comult {
            comult[check(*k)?].push((check(*i)?, check(*j)?, c.decode(&field)?));
        }
        let mut counit = vec![FieldElement::zero(); d];
        for (k, c) in &self.counit {
            counit[check(*k)?] = c.decode(&field)?;
        }
        let mut antipode = vec![Vec::new(); d];
        for (j, i, c) in &self.antipode {
            antipode[check(*j)?].push((check(*i)?, c.decode(&field)?));
        }
        let unit =
            self.unit.iter().map(|(k, c)| Ok((check(*k)?, c.decode(&field)?))).collect::<Result<_, HopfError>>()?;
        HopfAlgebraData::new(StructureTensors {
            name: self.name.clone(),
            field,
            labels: self.labels.clone(),
            degree: self.degree.clone(),
            parity: self.parity.clone(),
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }
}

/// Serializes an algebra to pretty JSON.
pub fn to_json(h: &HopfAlgebraData) -> String {
    serde_json::to_string_pretty(&HopfDocument::from_algebra(h)).expect("serializable document")
}

/// Parses a JSON document into a validated algebra.
pub fn from_json(text: &str) -> Result<HopfAlgebraData, HopfError> {
    let doc: HopfDocument = serde_json::from_str(text)?;
    doc.to_algebra()
}

/// Resolves `ext:n` / `taft:n` presets, otherwise reads a JSON file at the given path.
pub fn load_algebra(spec: &str) -> Result<HopfAlgebraData, HopfError> {
    match crate::presets::preset(spec) {
        Err(HopfError::UnknownPreset(_)) => {
            let text = std::fs::read_to_string(spec).map_err(|e| HopfError::Io(format!("{spec}: {e}")))?;
            from_json(&text)
        }
        other => other,
    }
}
