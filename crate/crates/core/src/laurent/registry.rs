//! Registry of hermitian forms known not to be extended from the integers.

use std::path::Path;

use serde_json::Value;
use thiserror::Error;

use super::{ht_matrix_a, HermitianLambdaForm};
use crate::wire::{self, WireError};

/// Identifier of the built-in rank-4 non-extended form.
pub const HT_AXIOM_ID: &str = "ht-A";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub id: String,
    pub form: HermitianLambdaForm,
}

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("cannot read axiom file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed axiom file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("axiom file: {0}")]
    Wire(#[from] WireError),
    #[error("duplicate axiom id {0:?}")]
    DuplicateId(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomRegistry {
    axioms: Vec<Axiom>,
}

impl Default for AxiomRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl AxiomRegistry {
    pub fn builtin() -> Self {
        AxiomRegistry { axioms: vec![Axiom { id: HT_AXIOM_ID.to_string(), form: ht_matrix_a() }] }
    }

    pub fn empty() -> Self {
        AxiomRegistry { axioms: Vec::new() }
    }

    /// Parses `{"axioms": [{"id": ..., "lambda_gram": [[poly, ...], ...]}, ...]}`.
    pub fn from_json(v: &Value) -> Result<Self, RegistryError> {
        let list = v
            .get("axioms")
            .and_then(Value::as_array)
            .ok_or_else(|| WireError::Shape("expected an \"axioms\" array".into()))?;
        let mut reg = AxiomRegistry::empty();
        for item in list {
            let id = item
                .get("id")
                .and_then(Value::as_str)
                .ok_or_else(|| WireError::Shape("axiom without a string \"id\"".into()))?;
            let form = wire::lambda_form_from_json(item)?;
            reg.insert(id, form)?;
        }
        Ok(reg)
    }

    pub fn from_file(path: &Path) -> Result<Self, RegistryError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&serde_json::from_str(&text)?)
    }

    pub fn insert(&mut self, id: &str, form: HermitianLambdaForm) -> Result<(), RegistryError> {
        if self.get(id).is_some() {
            return Err(RegistryError::DuplicateId(id.to_string()));
        }
        self.axioms.push(Axiom { id: id.to_string(), form });
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&HermitianLambdaForm> {
        self.axioms.iter().find(|a| a.id == id).map(|a| &a.form)
    }

    pub fn axioms(&self) -> &[Axiom] {
        &self.axioms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn builtin_contains_a() {
        assert_eq!(AxiomRegistry::builtin().get(HT_AXIOM_ID), Some(&ht_matrix_a()));
    }

    #[test]
    fn loads_from_json() {
        let v = json!({"axioms": [{"id": "unit", "lambda_gram": [[{"poly": {"0": 1}}]]}]});
        let reg = AxiomRegistry::from_json(&v).unwrap();
        assert_eq!(reg.axioms().len(), 1);
        assert_eq!(reg.get("unit").unwrap().rank(), 1);
        assert!(reg.get(HT_AXIOM_ID).is_none());
    }

    #[test]
    fn rejects_duplicates() {
        let entry = json!({"id": "x", "lambda_gram": [[{"poly": {"0": 1}}]]});
        let v = json!({"axioms": [entry.clone(), entry]});
        assert!(matches!(AxiomRegistry::from_json(&v), Err(RegistryError::DuplicateId(_))));
    }
}
