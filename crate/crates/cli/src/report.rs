//! Machine-readable report schema. Polynomials, rationals, and Betti
//! numbers travel as texts in the same grammar the instance files use, so
//! reports re-parse cleanly.

use serde::{Deserialize, Serialize};

use pseudobundle_core::{format_rational, Stratification};

use crate::instance::InstanceFile;

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ReportFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratification: Option<StrataSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SampleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber: Option<FiberSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nash: Option<NashSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<JacobiSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<TimingSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StratumEntry {
    pub kernel_dim: usize,
    pub generators: Vec<String>,
    pub is_empty: bool,
    pub empty_difference: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrataSection {
    pub strata: Vec<StratumEntry>,
    pub k_min: usize,
    pub k_max: usize,
    pub generic_rank_value: usize,
    pub generic_rank_certified: bool,
    pub quasifib_dim: i64,
    pub quasifib_vacuous: bool,
}

impl StrataSection {
    pub fn from_stratification(strat: &Stratification) -> Self {
        StrataSection {
            strata: strat
                .strata()
                .iter()
                .map(|s| StratumEntry {
                    kernel_dim: s.kernel_dim,
                    generators: s.ideal.generators().iter().map(|g| g.to_string()).collect(),
                    is_empty: s.is_empty,
                    empty_difference: s.empty_difference,
                })
                .collect(),
            k_min: strat.k_min(),
            k_max: strat.k_max(),
            generic_rank_value: strat.generic_rank().value,
            generic_rank_certified: strat.generic_rank().certified,
            quasifib_dim: strat.quasifib_dim(),
            quasifib_vacuous: strat.quasifib_vacuous(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleSection {
    pub samples: usize,
    pub seed: u64,
    pub passes: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiberSection {
    pub point: Vec<String>,
    pub fiber_dim: usize,
    pub stratum: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NashSection {
    pub curve: Vec<String>,
    pub base_point: Vec<String>,
    pub plane_dim: usize,
    /// Column subsets labelling the Plücker coordinates, in order.
    pub plucker_subsets: Vec<Vec<usize>>,
    pub plucker: Vec<String>,
    pub basis: Vec<Vec<String>>,
    pub in_kernel: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BettiRow {
    pub degree: usize,
    pub symmetric_product: String,
    pub product_model: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JacobiSection {
    pub genus: u32,
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map_degree: Option<u32>,
    pub betti_rows: Vec<BettiRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_identity_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree_through: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abel_jacobi_qf_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holomorphic_maps_qf_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inclusion_equiv_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_plane_dim: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BudgetSection {
    pub gb_budget: u64,
    pub gb_steps: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TimingSection {
    pub total_ms: u128,
}

pub fn rationals_to_texts(values: &[pseudobundle_core::Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}
