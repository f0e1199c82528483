//! Limits of kernel planes along rational curves: where the kernel jumps,
//! the kernel planes of nearby points accumulate onto a well-defined plane
//! inside the bigger kernel at the limit point. This module computes that
//! plane exactly, in Plücker coordinates and as an explicit basis, and
//! checks the inclusion into the kernel at the base point.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{unipoly_det, RationalMatrix, UnivariateMatrix};
use crate::poly::UniPoly;
use crate::strata::MorphismInstance;
use crate::Rational;

/// Polynomial arc `t -> (c_1(t), ..., c_n(t))`; the base point is the
/// value at `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCurve {
    components: Vec<UniPoly>,
}

impl RationalCurve {
    pub fn new(components: Vec<UniPoly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInstance("curve needs components".into()));
        }
        if components.iter().all(|c| c.is_constant()) {
            return Err(Error::InvalidInstance(
                "curve is constant in every coordinate".into(),
            ));
        }
        Ok(RationalCurve { components })
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn base_point(&self) -> Vec<Rational> {
        self.components.iter().map(|c| c.at_zero()).collect()
    }
}

/// Plücker coordinates of a `k`-plane in an `n`-dimensional space: the
/// maximal minors of any basis matrix, indexed by `k`-element column
/// subsets in lexicographic order and normalized so the first nonzero
/// coordinate is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerVector {
    plane_dim: usize,
    ambient_dim: usize,
    coords: Vec<Rational>,
}

impl PluckerVector {
    /// From the rows of a `k x n` basis matrix; fails when the rows are
    /// dependent (all maximal minors vanish).
    pub fn from_basis(rows: &[Vec<Rational>]) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::InvalidInstance("empty basis".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) || n < k {
            return Err(Error::InvalidInstance("ragged or overwide basis".into()));
        }
        let mut coords = Vec::new();
        for subset in (0..n).combinations(k) {
            coords.push(rational_det(k, &|i, j| rows[i][subset[j]].clone()));
        }
        Self::normalized(k, n, coords)
    }

    fn normalized(plane_dim: usize, ambient_dim: usize, mut coords: Vec<Rational>) -> Result<Self> {
        let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(Error::InvalidInstance(
                "all Plücker coordinates vanish: basis is degenerate".into(),
            ));
        };
        let inv = coords[first].recip();
        for c in coords.iter_mut() {
            *c = &*c * &inv;
        }
        Ok(PluckerVector {
            plane_dim,
            ambient_dim,
            coords,
        })
    }

    pub fn plane_dim(&self) -> usize {
        self.plane_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The column subsets labelling [`PluckerVector::coords`], in order.
    pub fn column_subsets(&self) -> Vec<Vec<usize>> {
        (0..self.ambient_dim).combinations(self.plane_dim).collect()
    }
}

fn rational_det(n: usize, entry: &dyn Fn(usize, usize) -> Rational) -> Rational {
    match n {
        0 => Rational::from_integer(1.into()),
        1 => entry(0, 0),
        _ => {
            let mut det = Rational::zero();
            for j in 0..n {
                let minor =
                    rational_det(n - 1, &|r, c| entry(r + 1, if c < j { c } else { c + 1 }));
                let term = entry(0, j) * minor;
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
    }
}

/// Limit of kernel planes along a curve: Plücker coordinates, an explicit
/// basis whose pivot submatrix is the identity, and the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitPlane {
    pub plucker: PluckerVector,
    pub basis: Vec<Vec<Rational>>,
    pub base_point: Vec<Rational>,
}

impl LimitPlane {
    pub fn plane_dim(&self) -> usize {
        self.basis.len()
    }
}

/// Plücker coordinates of the kernel of a rational matrix, which must have
/// the expected dimension.
pub fn kernel_plucker(matrix: &RationalMatrix, expect_k: usize) -> Result<PluckerVector> {
    let kernel = matrix.kernel_basis();
    if kernel.len() != expect_k {
        return Err(Error::KernelDimMismatch {
            expected: expect_k,
            actual: kernel.len(),
        });
    }
    PluckerVector::from_basis(&kernel)
}

/// Kernel plane limit along a curve into the instance's base variety.
///
/// The kernel of the substituted matrix is computed over the rational
/// function field; each maximal minor of the cleared kernel-basis matrix is
/// a polynomial in the parameter, and the limit is read off at the minimal
/// parameter valuation. The basis is normalized so that the submatrix on
/// the lexicographically least valuation-minimal column subset is the
/// identity before evaluating at the base point.
pub fn limit_kernel_along_curve(
    instance: &MorphismInstance,
    curve: &RationalCurve,
) -> Result<LimitPlane> {
    let base_point = curve.base_point();
    instance.ensure_on_variety(&base_point)?;

    let substituted: UnivariateMatrix = instance.matrix().substitute_curve(curve.components())?;
    let kernel = substituted.kernel_basis();
    let k = kernel.len();
    if k == 0 {
        return Err(Error::DegenerateCurve);
    }
    let n = instance.source_rank();

    // minors of the k x n kernel-basis matrix, per column subset
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let minors: Vec<UniPoly> = subsets
        .iter()
        .map(|subset| unipoly_det(k, &|i, j| kernel[i][subset[j]].clone()))
        .collect();
    let valuation = minors
        .iter()
        .filter_map(|m| m.valuation())
        .min()
        .expect("kernel basis has full row rank over the function field");

    // limit Plücker coordinates: coefficient of t^valuation in each minor
    let coords: Vec<Rational> = minors.iter().map(|m| m.coeff(valuation)).collect();
    let pivot_idx = coords
        .iter()
        .position(|c| !c.is_zero())
        .expect("some minor attains the minimal valuation");
    let plucker = PluckerVector::normalized(k, n, coords)?;
    let pivot_subset = &subsets[pivot_idx];

    // Cramer: (adj(B_S) B)_{i j} is, up to sign, a maximal minor of B, so
    // its valuation is at least the minimum; dividing by det(B_S) and
    // letting t -> 0 reduces to extracting t^valuation coefficients.
    let det_pivot = unipoly_det(k, &|i, j| kernel[i][pivot_subset[j]].clone());
    debug_assert_eq!(det_pivot.valuation(), Some(valuation));
    let unit = det_pivot.coeff(valuation);
    let unit_inv = unit.recip();
    let adjugate: Vec<Vec<UniPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    // cofactor C_{j i} of the pivot submatrix
                    let minor = unipoly_det(k - 1, &|r, c| {
                        let rr = if r < j { r } else { r + 1 };
                        let cc = if c < i { c } else { c + 1 };
                        kernel[rr][pivot_subset[cc]].clone()
                    });
                    if (i + j) % 2 == 0 {
                        minor
                    } else {
                        minor.neg()
                    }
                })
                .collect()
        })
        .collect();
    let mut basis = Vec::with_capacity(k);
    for adj_row in &adjugate {
        let row: Vec<Rational> = (0..n)
            .map(|j| {
                let mut entry = UniPoly::zero();
                for (adj, kernel_row) in adj_row.iter().zip(&kernel) {
                    entry = entry.add(&adj.mul(&kernel_row[j]));
                }
                debug_assert!(entry.valuation().is_none_or(|v| v >= valuation));
                entry.coeff(valuation) * &unit_inv
            })
            .collect();
        basis.push(row);
    }
    debug_assert!(pivot_subset.iter().enumerate().all(|(i, &col)| {
        basis.iter().enumerate().all(|(r, row)| {
            if r == i {
                row[col].is_one()
            } else {
                row[col].is_zero()
            }
        })
    }));

    Ok(LimitPlane {
        plucker,
        basis,
        base_point,
    })
}

/// Whether every basis vector of the limit plane is annihilated by the
/// matrix evaluated at the base point — the limit plane must inject into
/// the kernel there.
pub fn limit_plane_in_kernel_check(
    instance: &MorphismInstance,
    limit: &LimitPlane,
) -> Result<bool> {
    let evaluated = instance.matrix().evaluate(&limit.base_point)?;
    for vector in &limit.basis {
        let image = evaluated.mul_vector(vector)?;
        if !image.iter().all(Rational::is_zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groebner::Ideal;
    use crate::linalg::PolyMatrix;
    use crate::poly::{parse_polynomial, VariableContext};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ctx() -> Arc<VariableContext> {
        VariableContext::grevlex(vec!["x", "y"]).unwrap()
    }

    fn pair_instance() -> MorphismInstance {
        let c = ctx();
        let matrix = PolyMatrix::from_rows(
            &c,
            vec![vec![
                parse_polynomial("x", &c).unwrap(),
                parse_polynomial("y", &c).unwrap(),
            ]],
        )
        .unwrap();
        MorphismInstance::over_affine_space(matrix)
    }

    fn line_curve(a: i64, b: i64) -> RationalCurve {
        // (a t, b t)
        let t = UniPoly::parameter();
        RationalCurve::new(vec![t.scale(&rat(a, 1)), t.scale(&rat(b, 1))]).unwrap()
    }

    #[test]
    fn kernel_plucker_examples() {
        let row = RationalMatrix::from_rows(vec![vec![rat(3, 1), rat(4, 1)]]).unwrap();
        let p = kernel_plucker(&row, 1).unwrap();
        assert_eq!(p.coords(), &[rat(1, 1), rat(-3, 4)]);

        let zero = RationalMatrix::from_rows(vec![vec![rat(0, 1), rat(0, 1)]]).unwrap();
        let full = kernel_plucker(&zero, 2).unwrap();
        assert_eq!(full.coords(), &[rat(1, 1)]);

        match kernel_plucker(&RationalMatrix::identity(2), 1) {
            Err(Error::KernelDimMismatch {
                expected: 1,
                actual: 0,
            }) => {}
            other => panic!("expected kernel dimension mismatch, got {other:?}"),
        }
    }

    #[test]
    fn limits_along_lines() {
        let inst = pair_instance();
        // along (t, c t) the kernel is spanned by (-c, 1) for every t != 0,
        // so the limit is that same line
        for c in [-2i64, -1, 1, 2, 3] {
            let limit = limit_kernel_along_curve(&inst, &line_curve(1, c)).unwrap();
            assert_eq!(limit.plane_dim(), 1);
            assert_eq!(limit.base_point, vec![rat(0, 1), rat(0, 1)]);
            let expected = PluckerVector::from_basis(&[vec![rat(-c, 1), rat(1, 1)]]).unwrap();
            assert_eq!(limit.plucker, expected);
            assert!(limit_plane_in_kernel_check(&inst, &limit).unwrap());
        }
    }

    #[test]
    fn limit_along_parabola_is_vertical() {
        let inst = pair_instance();
        let t = UniPoly::parameter();
        let curve = RationalCurve::new(vec![t.clone(), t.mul(&t)]).unwrap();
        let limit = limit_kernel_along_curve(&inst, &curve).unwrap();
        assert_eq!(limit.basis, vec![vec![rat(0, 1), rat(1, 1)]]);
        assert_eq!(limit.plucker.coords(), &[rat(0, 1), rat(1, 1)]);
        assert!(limit_plane_in_kernel_check(&inst, &limit).unwrap());
        // the stored coordinates agree with the stored basis
        assert_eq!(
            PluckerVector::from_basis(&limit.basis).unwrap(),
            limit.plucker
        );
    }

    #[test]
    fn distinct_directions_give_distinct_limits() {
        let inst = pair_instance();
        let one = limit_kernel_along_curve(&inst, &line_curve(1, 1)).unwrap();
        let two = limit_kernel_along_curve(&inst, &line_curve(1, 2)).unwrap();
        assert_ne!(one.plucker, two.plucker);
    }

    #[test]
    fn adversarial_plane_fails_inclusion() {
        let c = ctx();
        let matrix = PolyMatrix::from_rows(
            &c,
            vec![vec![
                parse_polynomial("1", &c).unwrap(),
                parse_polynomial("0", &c).unwrap(),
            ]],
        )
        .unwrap();
        let inst = MorphismInstance::over_affine_space(matrix);
        let plane = LimitPlane {
            plucker: PluckerVector::from_basis(&[vec![rat(1, 1), rat(0, 1)]]).unwrap(),
            basis: vec![vec![rat(1, 1), rat(0, 1)]],
            base_point: vec![rat(0, 1), rat(0, 1)],
        };
        assert!(!limit_plane_in_kernel_check(&inst, &plane).unwrap());
    }

    #[test]
    fn off_variety_base_point_is_rejected() {
        let c = ctx();
        let matrix = PolyMatrix::from_rows(
            &c,
            vec![vec![
                parse_polynomial("x", &c).unwrap(),
                parse_polynomial("y", &c).unwrap(),
            ]],
        )
        .unwrap();
        let ambient = Ideal::new(&c, vec![parse_polynomial("x", &c).unwrap()]).unwrap();
        let inst = MorphismInstance::new(ambient, matrix).unwrap();
        let t = UniPoly::parameter();
        let curve = RationalCurve::new(vec![UniPoly::one().add(&t), t.clone()]).unwrap();
        assert!(matches!(
            limit_kernel_along_curve(&inst, &curve),
            Err(Error::PointNotOnVariety { .. })
        ));
    }

    #[test]
    fn injective_along_curve_is_degenerate() {
        let c = ctx();
        let matrix = PolyMatrix::from_rows(
            &c,
            vec![
                vec![
                    parse_polynomial("1", &c).unwrap(),
                    parse_polynomial("0", &c).unwrap(),
                ],
                vec![
                    parse_polynomial("0", &c).unwrap(),
                    parse_polynomial("1", &c).unwrap(),
                ],
            ],
        )
        .unwrap();
        let inst = MorphismInstance::over_affine_space(matrix);
        assert!(matches!(
            limit_kernel_along_curve(&inst, &line_curve(1, 1)),
            Err(Error::DegenerateCurve)
        ));
    }

    #[test]
    fn open_stratum_limit_matches_pointwise_kernel() {
        let inst = pair_instance();
        // base point (1, 2) lies in the open stratum
        let t = UniPoly::parameter();
        let curve = RationalCurve::new(vec![
            UniPoly::one().add(&t),
            UniPoly::constant(rat(2, 1)).add(&t.scale(&rat(3, 1))),
        ])
        .unwrap();
        let limit = limit_kernel_along_curve(&inst, &curve).unwrap();
        let pointwise = inst
            .matrix()
            .evaluate(&limit.base_point)
            .unwrap()
            .kernel_basis();
        // compare as subspaces via reduced echelon forms
        let mut echelon = limit.basis.clone();
        crate::linalg::test_support::rref_for_tests(&mut echelon);
        assert_eq!(echelon, pointwise);
    }

    #[test]
    fn limit_dimension_bounded_by_fiber_dimension() {
        let inst = pair_instance();
        for curve in [line_curve(1, 2), line_curve(2, -3)] {
            let limit = limit_kernel_along_curve(&inst, &curve).unwrap();
            let fiber = inst.fiber_dim_at(&limit.base_point).unwrap();
            assert!(limit.plane_dim() <= fiber);
        }
    }

    #[test]
    fn inclusion_holds_along_random_curves() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        // Random polynomial arcs through the origin (a point of the deeper
        // stratum in both instances): the limit plane always lands inside
        // the kernel at the base point, and its dimension never exceeds
        // the fiber dimension there.
        let c = ctx();
        let sym = MorphismInstance::over_affine_space(
            PolyMatrix::from_rows(
                &c,
                vec![
                    vec![
                        parse_polynomial("x", &c).unwrap(),
                        parse_polynomial("y", &c).unwrap(),
                    ],
                    vec![
                        parse_polynomial("y", &c).unwrap(),
                        parse_polynomial("x", &c).unwrap(),
                    ],
                ],
            )
            .unwrap(),
        );
        let instances = [pair_instance(), sym];
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for _ in 0..40 {
            let components: Vec<UniPoly> = (0..2)
                .map(|_| {
                    UniPoly::from_coeffs(vec![
                        Rational::zero(),
                        rat(rng.gen_range(-4i64..=4), 1),
                        rat(rng.gen_range(-4i64..=4), 1),
                    ])
                })
                .collect();
            let Ok(curve) = RationalCurve::new(components) else {
                continue; // all-constant draw
            };
            for inst in &instances {
                match limit_kernel_along_curve(inst, &curve) {
                    Ok(limit) => {
                        assert!(limit_plane_in_kernel_check(inst, &limit).unwrap());
                        let fiber = inst.fiber_dim_at(&limit.base_point).unwrap();
                        assert!(limit.plane_dim() <= fiber);
                    }
                    Err(Error::DegenerateCurve) => {}
                    Err(other) => panic!("unexpected error {other:?}"),
                }
            }
        }
    }

    #[test]
    fn quadratic_plucker_relation_small_case() {
        // 2-plane in 4-space: p01 p23 - p02 p13 + p03 p12 = 0
        let basis = vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 1)],
            vec![rat(0, 1), rat(1, 1), rat(3, 1), rat(2, 1)],
        ];
        let p = PluckerVector::from_basis(&basis).unwrap();
        let c = p.coords();
        // subsets in lex order: 01, 02, 03, 12, 13, 23
        let relation = &c[0] * &c[5] - &c[1] * &c[4] + &c[2] * &c[3];
        assert!(relation.is_zero());
    }
}
