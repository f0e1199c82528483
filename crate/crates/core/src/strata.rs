//! Rank stratification of the base variety by minor ideals: the nested
//! chain of loci where the kernel of the morphism jumps in dimension,
//! together with the minimal kernel dimension, a generic-rank verdict, and
//! the quasifibration bound `2k - 1` for the projectivized kernel.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, DEFAULT_STEP_BUDGET};
use crate::linalg::PolyMatrix;
use crate::poly::{format_rational, same_context, Polynomial};
use crate::Rational;

/// A morphism of trivialized bundles over an affine chart: an `m x n`
/// polynomial matrix (source rank `n`, target rank `m`) together with the
/// ambient ideal cutting out the base variety (zero ideal = affine space).
#[derive(Debug, Clone)]
pub struct MorphismInstance {
    ambient: Ideal,
    matrix: PolyMatrix,
}

impl MorphismInstance {
    pub fn new(ambient: Ideal, matrix: PolyMatrix) -> Result<Self> {
        if !same_context(ambient.context(), matrix.context()) {
            return Err(Error::ContextMismatch);
        }
        Ok(MorphismInstance { ambient, matrix })
    }

    pub fn over_affine_space(matrix: PolyMatrix) -> Self {
        let ambient = Ideal::zero(matrix.context());
        MorphismInstance { ambient, matrix }
    }

    pub fn ambient(&self) -> &Ideal {
        &self.ambient
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn context(&self) -> &std::sync::Arc<crate::poly::VariableContext> {
        self.matrix.context()
    }

    /// Rank of the source bundle.
    pub fn source_rank(&self) -> usize {
        self.matrix.cols()
    }

    /// Rank of the target bundle.
    pub fn target_rank(&self) -> usize {
        self.matrix.rows()
    }

    /// Fails with [`Error::EmptyVariety`] when the ambient ideal is the
    /// unit ideal.
    pub fn ensure_nonempty(&self, budget: u64) -> Result<()> {
        if self.ambient.is_unit(budget)? {
            return Err(Error::EmptyVariety);
        }
        Ok(())
    }

    /// The ideal whose zero set is the locus of rank at most `r`: ambient
    /// generators plus all `(r+1) x (r+1)` minors. For `r = min(m, n)` the
    /// ambient ideal itself.
    pub fn minor_ideal(&self, r: usize) -> Result<Ideal> {
        let bound = self.matrix.rows().min(self.matrix.cols());
        if r > bound {
            return Err(Error::MinorSize {
                size: r,
                rows: self.matrix.rows(),
                cols: self.matrix.cols(),
            });
        }
        if r == bound {
            return Ok(self.ambient.clone());
        }
        let minors = self.matrix.minors(r + 1)?;
        Ok(self.assemble_stratum_ideal(minors))
    }

    /// Ambient generators followed by the given minors, zeros and exact
    /// duplicates dropped.
    fn assemble_stratum_ideal(&self, minors: Vec<Polynomial>) -> Ideal {
        let mut gens: Vec<Polynomial> = self
            .ambient
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        for minor in minors {
            if !minor.is_zero() && !gens.contains(&minor) {
                gens.push(minor);
            }
        }
        Ideal::new(self.context(), gens).expect("generators share the instance context")
    }

    /// Checks that every ambient generator vanishes at the point.
    pub fn ensure_on_variety(&self, point: &[Rational]) -> Result<()> {
        if point.len() != self.context().arity() {
            return Err(Error::ArityMismatch {
                expected: self.context().arity(),
                got: point.len(),
            });
        }
        for g in self.ambient.generators() {
            let value = g.evaluate(point)?;
            if !value.is_zero() {
                return Err(Error::PointNotOnVariety {
                    generator: g.to_string(),
                    value: format_rational(&value),
                });
            }
        }
        Ok(())
    }

    /// Kernel dimension of the evaluated matrix at a point of the variety.
    pub fn fiber_dim_at(&self, point: &[Rational]) -> Result<usize> {
        self.ensure_on_variety(point)?;
        let evaluated = self.matrix.evaluate(point)?;
        Ok(self.matrix.cols() - evaluated.rank())
    }

    /// Largest `r` such that some `r x r` minor does not vanish on the
    /// variety (`0` when the whole matrix vanishes on it), plus the
    /// reduction steps spent deciding.
    fn max_rank_on_variety(&self, budget: u64) -> Result<(usize, u64)> {
        let mut steps = 0;
        for r in (1..=self.matrix.rows().min(self.matrix.cols())).rev() {
            for minor in self.matrix.minors(r)? {
                let (vanishes, used) = self.ambient.radical_contains_counted(&minor, budget)?;
                steps += used;
                if !vanishes {
                    return Ok((r, steps));
                }
            }
        }
        Ok((0, steps))
    }
}

/// Knobs for [`stratify`].
#[derive(Debug, Clone)]
pub struct StratifyOptions {
    /// S-polynomial reduction budget per basis computation.
    pub budget: u64,
    /// Caller-asserted irreducibility of the base variety; upgrades the
    /// generic-rank verdict to certified.
    pub assume_irreducible: bool,
}

impl Default for StratifyOptions {
    fn default() -> Self {
        StratifyOptions {
            budget: DEFAULT_STEP_BUDGET,
            assume_irreducible: false,
        }
    }
}

/// One level of the filtration: the locus where the kernel dimension is at
/// least `kernel_dim`.
#[derive(Debug, Clone)]
pub struct Stratum {
    pub kernel_dim: usize,
    pub ideal: Ideal,
    /// Zero set is empty.
    pub is_empty: bool,
    /// Zero set coincides with the next stratum's (the open part of this
    /// level is empty).
    pub empty_difference: bool,
}

/// Generic-rank verdict: the candidate value is always the minimal kernel
/// dimension; `certified` records whether density of the open stratum is
/// actually established (affine ambient, caller-asserted irreducibility,
/// or an empty next stratum).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericRank {
    pub value: usize,
    pub certified: bool,
}

/// The computed filtration, from the dense bottom level up to the first
/// empty one.
#[derive(Debug, Clone)]
pub struct Stratification {
    strata: Vec<Stratum>,
    k_min: usize,
    k_max: usize,
    generic_rank: GenericRank,
    quasifib_dim: i64,
    gb_steps: u64,
}

impl Stratification {
    /// Strata for kernel dimensions `k_min ..= n + 1`; the final entry is
    /// the terminal empty level.
    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, kernel_dim: usize) -> Option<&Stratum> {
        kernel_dim
            .checked_sub(self.k_min)
            .and_then(|i| self.strata.get(i))
    }

    /// Minimal kernel dimension over the variety.
    pub fn k_min(&self) -> usize {
        self.k_min
    }

    /// Largest kernel dimension attained.
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn generic_rank(&self) -> GenericRank {
        self.generic_rank
    }

    /// `2 k_min - 1`; `-1` is reported as a vacuous bound, never clamped.
    pub fn quasifib_dim(&self) -> i64 {
        self.quasifib_dim
    }

    pub fn quasifib_vacuous(&self) -> bool {
        self.quasifib_dim < 0
    }

    /// Total S-polynomial reductions spent building this stratification.
    pub fn gb_steps(&self) -> u64 {
        self.gb_steps
    }

    /// Kernel dimension at the point, cross-checked against the stratum
    /// ideals: the point must satisfy its own stratum's generators and, if
    /// a deeper nonempty stratum exists, violate some generator of it.
    pub fn stratum_of_point(
        &self,
        instance: &MorphismInstance,
        point: &[Rational],
    ) -> Result<usize> {
        let dim = instance.fiber_dim_at(point)?;
        let stratum = self.stratum(dim).ok_or_else(|| {
            Error::InvalidInstance(format!(
                "fiber dimension {dim} outside the stratification range"
            ))
        })?;
        for g in stratum.ideal.generators() {
            if !g.evaluate(point)?.is_zero() {
                return Err(Error::InvalidInstance(format!(
                    "stratum {dim} generator `{g}` does not vanish at the point"
                )));
            }
        }
        if dim < self.k_max {
            let next = self.stratum(dim + 1).expect("next stratum exists");
            let escapes = next
                .ideal
                .generators()
                .iter()
                .map(|g| g.evaluate(point).map(|v| !v.is_zero()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .any(|b| b);
            if !escapes {
                return Err(Error::InvalidInstance(format!(
                    "point satisfies stratum {} but fiber dimension is {dim}",
                    dim + 1
                )));
            }
        }
        Ok(dim)
    }

    /// Random-point consistency check over an affine ambient: every sample
    /// must have fiber dimension at least `k_min` and satisfy the
    /// biconditional "point in stratum i's zero set iff fiber dimension is
    /// at least i" on every level.
    pub fn sample_check(
        &self,
        instance: &MorphismInstance,
        sample_count: usize,
        seed: u64,
    ) -> Result<SampleReport> {
        if !instance.ambient().is_zero_ideal() {
            return Err(Error::InvalidInstance(
                "random sampling requires an affine ambient; supply explicit points".into(),
            ));
        }
        let arity = instance.context().arity();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points: Vec<Vec<Rational>> = (0..sample_count)
            .map(|_| {
                (0..arity)
                    .map(|_| {
                        Rational::new(
                            rng.gen_range(-9i64..=9).into(),
                            rng.gen_range(1i64..=5).into(),
                        )
                    })
                    .collect()
            })
            .collect();
        self.check_points(instance, &points)
    }

    /// The same consistency check over caller-supplied points (which must
    /// lie on the variety).
    pub fn check_points(
        &self,
        instance: &MorphismInstance,
        points: &[Vec<Rational>],
    ) -> Result<SampleReport> {
        let mut report = SampleReport {
            samples: points.len(),
            passes: 0,
            failures: 0,
            counterexample: None,
        };
        for point in points {
            if self.point_consistent(instance, point)? {
                report.passes += 1;
            } else {
                report.failures += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(point.clone());
                }
            }
        }
        Ok(report)
    }

    fn point_consistent(&self, instance: &MorphismInstance, point: &[Rational]) -> Result<bool> {
        let dim = instance.fiber_dim_at(point)?;
        if dim < self.k_min {
            return Ok(false);
        }
        for stratum in &self.strata {
            let mut on_stratum = true;
            for g in stratum.ideal.generators() {
                if !g.evaluate(point)?.is_zero() {
                    on_stratum = false;
                    break;
                }
            }
            if on_stratum != (dim >= stratum.kernel_dim) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Outcome of a sampling run; failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: usize,
    pub passes: usize,
    pub failures: usize,
    pub counterexample: Option<Vec<Rational>>,
}

/// Minimal kernel dimension `n - r_max` without building the full
/// stratification.
pub fn minimal_kernel_dim(instance: &MorphismInstance, budget: u64) -> Result<usize> {
    instance.ensure_nonempty(budget)?;
    let (r_max, _) = instance.max_rank_on_variety(budget)?;
    Ok(instance.source_rank() - r_max)
}

/// Computes the full filtration of the base variety by kernel dimension.
///
/// Levels run from `k_min` (the whole variety) through `n` and a terminal
/// empty level at `n + 1`, each cut out by the ambient ideal plus the
/// minors of the complementary size.
pub fn stratify(instance: &MorphismInstance, options: &StratifyOptions) -> Result<Stratification> {
    let budget = options.budget;
    instance.ensure_nonempty(budget)?;
    let n = instance.source_rank();

    let (r_max, mut gb_steps) = instance.max_rank_on_variety(budget)?;
    let k_min = n - r_max;

    let mut levels: Vec<(usize, Ideal)> = Vec::new();
    for kernel_dim in k_min..=n {
        levels.push((kernel_dim, instance.minor_ideal(n - kernel_dim)?));
    }
    let terminal = instance.assemble_stratum_ideal(vec![Polynomial::one(instance.context())]);
    levels.push((n + 1, terminal));

    let mut empties = Vec::with_capacity(levels.len());
    for (_, ideal) in &levels {
        let basis = ideal.basis(budget)?;
        gb_steps += basis.steps();
        empties.push(basis.is_unit());
    }
    let k_max = levels
        .iter()
        .zip(&empties)
        .filter(|(_, empty)| !**empty)
        .map(|((dim, _), _)| *dim)
        .max()
        .expect("the bottom stratum is the nonempty variety");

    let mut strata = Vec::with_capacity(levels.len());
    for idx in 0..levels.len() {
        let empty_difference = if empties[idx] {
            true
        } else if empties[idx + 1] {
            false
        } else {
            let (same, steps) = levels[idx]
                .1
                .same_variety_counted(&levels[idx + 1].1, budget)?;
            gb_steps += steps;
            same
        };
        strata.push(Stratum {
            kernel_dim: levels[idx].0,
            ideal: levels[idx].1.clone(),
            is_empty: empties[idx],
            empty_difference,
        });
    }

    let certified = instance.ambient().is_zero_ideal()
        || options.assume_irreducible
        || strata.get(1).map(|s| s.is_empty).unwrap_or(true);

    Ok(Stratification {
        strata,
        k_min,
        k_max,
        generic_rank: GenericRank {
            value: k_min,
            certified,
        },
        quasifib_dim: 2 * k_min as i64 - 1,
        gb_steps,
    })
}
