use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Total order on monomials of a fixed arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher total degree wins, ties broken by
    /// the smaller exponent on the last variable where the monomials differ.
    GrevLex,
    /// Plain lexicographic in variable order.
    Lex,
    /// Elimination order: the exponents on variables `split..` are compared
    /// first (grevlex within the block), ties fall back to grevlex on the
    /// leading `0..split` block. A leading monomial free of the dominant
    /// block certifies the whole polynomial is.
    Block { split: usize },
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split } => write!(f, "block({split})"),
        }
    }
}

/// Named, ordered polynomial variables plus the monomial order used for
/// canonical forms. Shared behind an `Arc` by every value built over it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
    order: MonomialOrder,
}

impl VariableContext {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidInstance(
                "variable context must name at least one variable".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidInstance("empty variable name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split == 0 || split >= names.len() {
                return Err(Error::InvalidInstance(format!(
                    "block order split {split} out of range for {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(VariableContext { names, order }))
    }

    pub fn grevlex<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>> {
        Self::new(
            names.into_iter().map(Into::into).collect(),
            MonomialOrder::GrevLex,
        )
    }

    pub fn lex<S: Into<String>>(names: Vec<S>) -> Result<Arc<Self>> {
        Self::new(
            names.into_iter().map(Into::into).collect(),
            MonomialOrder::Lex,
        )
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.names.clone(), order)
    }

    /// Append a fresh variable (derived from `stem`, adjusted to avoid
    /// collisions) and switch to a block order whose dominant block is the
    /// new variable. Returns the extended context and the new index.
    pub fn extended_for_elimination(&self, stem: &str) -> Result<(Arc<Self>, usize)> {
        let mut fresh = stem.to_string();
        let mut tick = 0u32;
        while self.names.contains(&fresh) {
            tick += 1;
            fresh = format!("{stem}{tick}");
        }
        let mut names = self.names.clone();
        names.push(fresh);
        let split = self.names.len();
        let ctx = Self::new(names, MonomialOrder::Block { split })?;
        Ok((ctx, split))
    }
}

/// Contexts agree when they name the same variables in the same order under
/// the same monomial order.
pub fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
