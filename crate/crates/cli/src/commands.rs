//! Subcommand drivers: run the computation, print the human-readable
//! table to stdout, and return the machine report for optional JSON
//! output.

use std::path::Path;
use std::time::Instant;

use pseudobundle_core::{
    format_rational, jacobi, limit_kernel_along_curve, limit_plane_in_kernel_check, stratify,
    MonomialOrder, Stratification, StratifyOptions,
};

use crate::instance::{load_instance, parse_curve, parse_point, InstanceFile};
use crate::report::{
    rationals_to_texts, BettiRow, BudgetSection, FiberSection, JacobiSection, NashSection,
    ReportFile, SampleSection, StrataSection, TimingSection,
};
use crate::{CliError, CliResult};

pub struct StratifyArgs {
    pub file: std::path::PathBuf,
    pub order: MonomialOrder,
    pub order_name: String,
    pub gb_budget: u64,
    pub samples: Option<usize>,
    pub seed: u64,
    pub assume_irreducible: bool,
    pub no_timings: bool,
}

pub fn run_stratify(args: &StratifyArgs) -> CliResult<ReportFile> {
    let started = Instant::now();
    let echo = InstanceFile::load(&args.file)?;
    let instance = load_instance(&args.file, args.order, args.gb_budget)?;
    let options = StratifyOptions {
        budget: args.gb_budget,
        assume_irreducible: args.assume_irreducible,
    };
    let strat = stratify(&instance, &options)?;

    print_instance_header(&echo, &args.order_name);
    print_stratification(&strat);
    println!("gb budget: {} (used {})", args.gb_budget, strat.gb_steps());

    let mut report = ReportFile {
        instance: Some(echo),
        order: Some(args.order_name.clone()),
        stratification: Some(StrataSection::from_stratification(&strat)),
        budget: Some(BudgetSection {
            gb_budget: args.gb_budget,
            gb_steps: strat.gb_steps(),
        }),
        ..ReportFile::default()
    };

    if let Some(samples) = args.samples {
        let outcome = strat.sample_check(&instance, samples, args.seed)?;
        println!(
            "sampling: {} points, {} passed, {} failed (seed {})",
            outcome.samples, outcome.passes, outcome.failures, args.seed
        );
        if let Some(point) = &outcome.counterexample {
            println!(
                "  first counterexample: ({})",
                rationals_to_texts(point).join(", ")
            );
        }
        report.sampling = Some(SampleSection {
            samples: outcome.samples,
            seed: args.seed,
            passes: outcome.passes,
            failures: outcome.failures,
            counterexample: outcome.counterexample.as_deref().map(rationals_to_texts),
        });
    }

    if !args.no_timings {
        report.timing = Some(TimingSection {
            total_ms: started.elapsed().as_millis(),
        });
    }
    Ok(report)
}

pub struct FiberArgs {
    pub file: std::path::PathBuf,
    pub point: String,
    pub order: MonomialOrder,
    pub order_name: String,
    pub gb_budget: u64,
    pub no_timings: bool,
}

pub fn run_fiber(args: &FiberArgs) -> CliResult<ReportFile> {
    let started = Instant::now();
    let echo = InstanceFile::load(&args.file)?;
    let instance = load_instance(&args.file, args.order, args.gb_budget)?;
    let point = parse_point(&args.point, instance.context().arity())?;
    let options = StratifyOptions {
        budget: args.gb_budget,
        assume_irreducible: false,
    };
    let strat = stratify(&instance, &options)?;
    let stratum = strat.stratum_of_point(&instance, &point)?;
    let fiber_dim = instance.fiber_dim_at(&point)?;

    print_instance_header(&echo, &args.order_name);
    println!("point: ({})", rationals_to_texts(&point).join(", "));
    println!("fiber dimension: {fiber_dim}");
    println!("stratum: kernel dimension {stratum}");

    let mut report = ReportFile {
        instance: Some(echo),
        order: Some(args.order_name.clone()),
        fiber: Some(FiberSection {
            point: rationals_to_texts(&point),
            fiber_dim,
            stratum,
        }),
        budget: Some(BudgetSection {
            gb_budget: args.gb_budget,
            gb_steps: strat.gb_steps(),
        }),
        ..ReportFile::default()
    };
    if !args.no_timings {
        report.timing = Some(TimingSection {
            total_ms: started.elapsed().as_millis(),
        });
    }
    Ok(report)
}

pub struct NashArgs {
    pub file: std::path::PathBuf,
    pub curve: String,
    pub order: MonomialOrder,
    pub order_name: String,
    pub gb_budget: u64,
    pub no_timings: bool,
}

pub fn run_nash(args: &NashArgs) -> CliResult<ReportFile> {
    let started = Instant::now();
    let echo = InstanceFile::load(&args.file)?;
    let instance = load_instance(&args.file, args.order, args.gb_budget)?;
    let curve = parse_curve(&args.curve, instance.context().arity())?;
    let limit = limit_kernel_along_curve(&instance, &curve)?;
    let in_kernel = limit_plane_in_kernel_check(&instance, &limit)?;

    print_instance_header(&echo, &args.order_name);
    let curve_texts: Vec<String> = curve.components().iter().map(|c| c.to_string()).collect();
    println!("curve: ({})", curve_texts.join(", "));
    println!(
        "base point: ({})",
        rationals_to_texts(&limit.base_point).join(", ")
    );
    println!("limit plane dimension: {}", limit.plane_dim());
    let subsets = limit.plucker.column_subsets();
    let plucker_texts: Vec<String> = limit
        .plucker
        .coords()
        .iter()
        .zip(&subsets)
        .map(|(c, s)| {
            let label: Vec<String> = s.iter().map(|i| i.to_string()).collect();
            format!("p{{{}}} = {}", label.join(","), format_rational(c))
        })
        .collect();
    println!("Plücker coordinates: {}", plucker_texts.join(", "));
    println!("limit basis:");
    for row in &limit.basis {
        println!("  ({})", rationals_to_texts(row).join(", "));
    }
    println!("inclusion in kernel at base point: {in_kernel}");

    let mut report = ReportFile {
        instance: Some(echo),
        order: Some(args.order_name.clone()),
        nash: Some(NashSection {
            curve: curve_texts,
            base_point: rationals_to_texts(&limit.base_point),
            plane_dim: limit.plane_dim(),
            plucker_subsets: subsets,
            plucker: rationals_to_texts(limit.plucker.coords()),
            basis: limit.basis.iter().map(|r| rationals_to_texts(r)).collect(),
            in_kernel,
        }),
        ..ReportFile::default()
    };
    if !args.no_timings {
        report.timing = Some(TimingSection {
            total_ms: started.elapsed().as_millis(),
        });
    }
    Ok(report)
}

pub struct JacobiArgs {
    pub genus: u32,
    pub degree: u32,
    pub map_degree: Option<u32>,
    pub no_timings: bool,
}

pub fn run_jacobi(args: &JacobiArgs) -> CliResult<ReportFile> {
    let started = Instant::now();
    let (g, d) = (args.genus, args.degree);
    let bounds = jacobi::bounds_report(g, d, args.map_degree)?;
    let sp = jacobi::symmetric_product_poincare(g, d)?;
    let model = jacobi::torus_poincare(g)?.mul(&jacobi::projective_space_poincare(d - g)?);

    let in_bundle_range = d as i64 >= 2 * g as i64 - 1;
    let product_identity_holds = if in_bundle_range {
        Some(jacobi::mattuck_product_check(g, d)?)
    } else {
        None
    };
    let comparison = if !in_bundle_range {
        Some(jacobi::betti_agreement_range(g, d)?)
    } else {
        None
    };

    println!("genus {g}, degree {d}");
    println!("deg | b_j(Sp^{d}M) | b_j(J(M) x CP^{})", d - g);
    let top = sp.degree().max(model.degree());
    let mut betti_rows = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let a = sp.coeff(j);
        let b = model.coeff(j);
        println!("{j:>3} | {a:>10} | {b:>10}");
        betti_rows.push(BettiRow {
            degree: j,
            symmetric_product: a.to_string(),
            product_model: b.to_string(),
        });
    }
    match product_identity_holds {
        Some(true) => println!("product identity holds (projective-bundle range)"),
        Some(false) => println!("product identity FAILS despite d >= 2g - 1"),
        None => {}
    }
    if let Some(cmp) = &comparison {
        match cmp.first_divergence {
            Some(j) => println!(
                "Betti numbers agree through degree {}; first divergence at {j}",
                cmp.agree_through
            ),
            None => println!("Betti numbers agree in every degree"),
        }
    }
    print_bound(
        "quasifibration dim of the degree map",
        bounds.abel_jacobi_qf_dim,
    );
    print_bound(
        "quasifibration dim on holomorphic spheres",
        bounds.holomorphic_maps_qf_dim,
    );
    print_bound(
        "holomorphic vs continuous spheres up to dim",
        bounds.inclusion_equiv_dim,
    );
    print_bound("generic kernel-plane dimension", bounds.generic_plane_dim);

    let mut report = ReportFile {
        jacobi: Some(JacobiSection {
            genus: g,
            degree: d,
            map_degree: args.map_degree,
            betti_rows,
            product_identity_holds,
            agree_through: comparison.as_ref().map(|c| c.agree_through),
            first_divergence: comparison.as_ref().and_then(|c| c.first_divergence),
            abel_jacobi_qf_dim: bounds.abel_jacobi_qf_dim,
            holomorphic_maps_qf_dim: bounds.holomorphic_maps_qf_dim,
            inclusion_equiv_dim: bounds.inclusion_equiv_dim,
            generic_plane_dim: bounds.generic_plane_dim,
        }),
        ..ReportFile::default()
    };
    if !args.no_timings {
        report.timing = Some(TimingSection {
            total_ms: started.elapsed().as_millis(),
        });
    }
    Ok(report)
}

fn print_bound(label: &str, value: Option<i64>) {
    match value {
        Some(v) => println!("{label}: {v}"),
        None => println!("{label}: not applicable"),
    }
}

pub fn run_demo_smooth(n_max: u32) -> CliResult<()> {
    if n_max < 1 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let rows = crate::demo::rows(n_max);
    println!("d(u) = exp(-1/u^2) sin(1/u); rank drops to zero on X = {{0}} ∪ {{1/(pi n)}}");
    println!(
        "{:>3} | {:>12} | {:>10} | {:>12} | {:>12}",
        "n", "u_n=1/(pi n)", "|d(u_n)|", "midpoint", "|d(mid)|"
    );
    for row in &rows {
        println!(
            "{:>3} | {:>12.8} | {:>10} | {:>12.8} | {:>12}",
            row.n,
            row.node,
            row.node_magnitude,
            row.midpoint,
            crate::demo::format_magnitude(row.midpoint_log10),
        );
    }
    let all_guarded = rows.iter().all(crate::demo::node_within_guard);
    let all_positive = rows.iter().all(crate::demo::midpoint_positive);
    println!(
        "rank-drop pattern: {} zeros on X interleaved with {} strictly positive midpoints",
        rows.len(),
        rows.len()
    );
    println!(
        "every neighbourhood of X contains midpoints with d != 0, so no neighbourhood \
         deformation-retracts onto X"
    );
    if !(all_guarded && all_positive) {
        return Err(CliError::Usage(
            "demo assertion failed: node values are not dominated by midpoint values".into(),
        ));
    }
    Ok(())
}

fn print_instance_header(echo: &InstanceFile, order_name: &str) {
    println!(
        "instance: {}x{} polynomial matrix over Q[{}]",
        echo.matrix.len(),
        echo.matrix.first().map(|r| r.len()).unwrap_or(0),
        echo.variables.join(", ")
    );
    if echo.ambient_ideal.is_empty() {
        println!("ambient ideal: (0)  [affine space]");
    } else {
        println!("ambient ideal: ({})", echo.ambient_ideal.join(", "));
    }
    println!("order: {order_name}");
}

fn print_stratification(strat: &Stratification) {
    println!("stratification by kernel dimension");
    for stratum in strat.strata() {
        let ideal_text = if stratum.ideal.generators().is_empty() {
            "V(0)".to_string()
        } else {
            let gens: Vec<String> = stratum
                .ideal
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect();
            format!("V({})", gens.join(", "))
        };
        let mut labels = Vec::new();
        if stratum.kernel_dim == strat.k_min() {
            labels.push("= X");
        }
        if stratum.is_empty {
            labels.push("empty");
        } else if stratum.empty_difference {
            labels.push("no points of exactly this kernel dimension");
        }
        let suffix = if labels.is_empty() {
            String::new()
        } else {
            format!("  [{}]", labels.join("; "))
        };
        println!("  dim >= {}: {}{}", stratum.kernel_dim, ideal_text, suffix);
    }
    println!("k_min = {}, k_max = {}", strat.k_min(), strat.k_max());
    let generic = strat.generic_rank();
    println!(
        "generic rank: {} ({})",
        generic.value,
        if generic.certified {
            "certified"
        } else {
            "not certified: base may be reducible"
        }
    );
    let vacuous = if strat.quasifib_vacuous() {
        "  [vacuous]"
    } else {
        ""
    };
    println!(
        "quasifibration bound for the projectivized kernel: {}{}",
        strat.quasifib_dim(),
        vacuous
    );
}

/// Serialize the machine report to a file, newline-terminated.
pub fn write_json(report: &ReportFile, path: &Path) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Usage(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}
