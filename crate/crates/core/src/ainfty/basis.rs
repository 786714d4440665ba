use std::collections::HashMap;

use super::{Label, StructureError};

/// An ordered, named basis with integer internal degrees (0 unless graded).
#[derive(Clone, Debug)]
pub struct Basis {
    names: Vec<String>,
    degrees: Vec<i64>,
    lookup: HashMap<String, Label>,
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.degrees == other.degrees
    }
}

impl Eq for Basis {}

impl Basis {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, StructureError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let degrees = vec![0; names.len()];
        Self::with_degrees(names, degrees)
    }

    pub fn with_degrees(names: Vec<String>, degrees: Vec<i64>) -> Result<Self, StructureError> {
        if names.len() != degrees.len() {
            return Err(StructureError::Invalid(format!(
                "{} names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        let mut lookup = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i as Label).is_some() {
                return Err(StructureError::DuplicateName(n.clone()));
            }
        }
        Ok(Basis {
            names,
            degrees,
            lookup,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, l: Label) -> &str {
        &self.names[l as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, l: Label) -> i64 {
        self.degrees[l as usize]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.iter().any(|&d| d != 0)
    }

    pub fn index_of(&self, name: &str) -> Option<Label> {
        self.lookup.get(name).copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        0..self.names.len() as Label
    }

    pub fn contains(&self, l: Label) -> bool {
        (l as usize) < self.names.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees.iter().copied().min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.degrees.iter().copied().max()
    }

    /// Dual basis: `x` becomes `x*` with negated degree, and `x*` becomes `x`,
    /// so dualizing twice returns the original names.
    pub fn dual(&self) -> Basis {
        let names = self
            .names
            .iter()
            .map(|n| match n.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{n}*"),
            })
            .collect();
        let degrees: Vec<i64> = self.degrees.iter().map(|d| -d).collect();
        Basis::with_degrees(names, degrees.clone()).unwrap_or_else(|_| {
            // Mixed plain and starred names can collide; star everything instead.
            let names = self.names.iter().map(|n| format!("{n}*")).collect();
            Basis::with_degrees(names, degrees).expect("starred names stay distinct")
        })
    }

    pub fn render(&self, word: &[Label]) -> String {
        let parts: Vec<&str> = word.iter().map(|&l| self.name(l)).collect();
        format!("({})", parts.join(","))
    }
}
