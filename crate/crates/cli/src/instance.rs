//! Instance files: the JSON serialization of a morphism over an affine
//! chart, plus parsers for point and curve arguments.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use pseudobundle_core::{
    parse_polynomial, parse_rational, Ideal, MonomialOrder, MorphismInstance, PolyMatrix,
    Polynomial, Rational, RationalCurve, UniPoly, VariableContext,
};

use crate::{CliError, CliResult};

/// On-disk instance schema:
/// `{ "variables": ["x","y"], "ambient_ideal": [], "matrix": [["x","y"]] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub variables: Vec<String>,
    #[serde(default)]
    pub ambient_ideal: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

impl InstanceFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| {
            CliError::Usage(format!(
                "{} is not a valid instance file: {e}",
                path.display()
            ))
        })
    }

    /// Validate and parse into a morphism instance under the given order.
    pub fn build(&self, order: MonomialOrder) -> CliResult<MorphismInstance> {
        let context = VariableContext::new(self.variables.clone(), order)?;
        if self.matrix.is_empty() || self.matrix[0].is_empty() {
            return Err(CliError::Usage("matrix must be nonempty".into()));
        }
        let width = self.matrix[0].len();
        if self.matrix.iter().any(|row| row.len() != width) {
            return Err(CliError::Usage("matrix rows have unequal lengths".into()));
        }
        let ambient = self
            .ambient_ideal
            .iter()
            .map(|text| parse_in(text, &context))
            .collect::<CliResult<Vec<_>>>()?;
        let rows = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|text| parse_in(text, &context)).collect())
            .collect::<CliResult<Vec<Vec<_>>>>()?;
        let ideal = Ideal::new(&context, ambient)?;
        let matrix = PolyMatrix::from_rows(&context, rows)?;
        Ok(MorphismInstance::new(ideal, matrix)?)
    }
}

fn parse_in(text: &str, context: &Arc<VariableContext>) -> CliResult<Polynomial> {
    parse_polynomial(text, context)
        .map_err(|e| CliError::Usage(format!("while parsing `{text}`: {e}")))
}

pub fn order_from_name(name: &str) -> CliResult<MonomialOrder> {
    match name {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(CliError::Usage(format!(
            "unknown order `{other}` (expected grevlex or lex)"
        ))),
    }
}

/// Loads, validates, and rejects instances whose base variety is empty.
pub fn load_instance(
    path: &Path,
    order: MonomialOrder,
    budget: u64,
) -> CliResult<MorphismInstance> {
    let instance = InstanceFile::load(path)?.build(order)?;
    instance.ensure_nonempty(budget)?;
    Ok(instance)
}

/// Comma-separated rational coordinates, e.g. `"1,1/2"`.
pub fn parse_point(text: &str, arity: usize) -> CliResult<Vec<Rational>> {
    let coords = text
        .split(',')
        .map(|c| {
            parse_rational(c).map_err(|e| CliError::Usage(format!("bad coordinate `{c}`: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if coords.len() != arity {
        return Err(CliError::Usage(format!(
            "expected {arity} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

/// Comma-separated univariate polynomials in `t`, e.g. `"t,2*t"`.
pub fn parse_curve(text: &str, arity: usize) -> CliResult<RationalCurve> {
    let t_context = VariableContext::grevlex(vec!["t"]).expect("single-variable context is valid");
    let components = text
        .split(',')
        .map(|c| {
            let poly = parse_polynomial(c, &t_context)
                .map_err(|e| CliError::Usage(format!("bad curve component `{c}`: {e}")))?;
            Ok(UniPoly::from_polynomial(&poly)?)
        })
        .collect::<CliResult<Vec<_>>>()?;
    if components.len() != arity {
        return Err(CliError::Usage(format!(
            "expected {arity} curve components, got {}",
            components.len()
        )));
    }
    Ok(RationalCurve::new(components)?)
}
