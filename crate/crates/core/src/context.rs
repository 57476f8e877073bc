//! Ordered variable declarations shared by every polynomial in a computation.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Source,
    Parameter,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
    roles: Vec<Role>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, Role)>) -> Result<Ctx, AlgebraError> {
        let mut names = Vec::new();
        let mut roles = Vec::new();
        for (name, role) in vars {
            let name = name.into();
            if names.contains(&name) {
                return Err(AlgebraError::DuplicateVariable(name));
            }
            names.push(name);
            roles.push(role);
        }
        Ok(Arc::new(VariableContext { names, roles }))
    }

    /// Context with source variables only.
    pub fn sources<S: AsRef<str>>(names: &[S]) -> Result<Ctx, AlgebraError> {
        Self::new(names.iter().map(|n| (n.as_ref().to_string(), Role::Source)))
    }

    pub fn with_parameters<S: AsRef<str>, T: AsRef<str>>(
        sources: &[S],
        params: &[T],
    ) -> Result<Ctx, AlgebraError> {
        Self::new(
            sources
                .iter()
                .map(|n| (n.as_ref().to_string(), Role::Source))
                .chain(params.iter().map(|n| (n.as_ref().to_string(), Role::Parameter))),
        )
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn role(&self, i: usize) -> Role {
        self.roles[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.roles[i] == Role::Source
    }

    /// Context indices of the source variables, in context order.
    pub fn source_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_source(i)).collect()
    }

    pub fn parameter_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_source(i)).collect()
    }

    pub fn source_count(&self) -> usize {
        self.roles.iter().filter(|r| **r == Role::Source).count()
    }
}

pub(crate) fn same_context(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(VariableContext::sources(&["x", "x"]).is_err());
    }

    #[test]
    fn roles_split() {
        let c = VariableContext::with_parameters(&["x1", "x2"], &["a1"]).unwrap();
        assert_eq!(c.source_indices(), vec![0, 1]);
        assert_eq!(c.parameter_indices(), vec![2]);
        assert_eq!(c.index_of("a1").unwrap(), 2);
        assert!(c.index_of("b").is_err());
    }
}
