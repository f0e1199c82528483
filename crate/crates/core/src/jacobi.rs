//! Betti-number bookkeeping for symmetric products of a compact Riemann
//! surface and the associated degree-to-Jacobian map: Poincaré polynomials,
//! the product identity in the projective-bundle range, the range of
//! homology agreement below it, and the dimension-bound formulas.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Guards against accidental parameter blow-up; arithmetic itself is
/// arbitrary precision.
pub const MAX_GENUS: u32 = 8;
pub const MAX_DEGREE: u32 = 32;

/// Integer-coefficient polynomial in one variable recording Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coeffs: Vec<BigInt>,
}

impl PoincarePolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PoincarePolynomial { coeffs };
        while matches!(p.coeffs.last(), Some(c) if c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn one() -> Self {
        PoincarePolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Betti number `b_j` (zero beyond the top degree).
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PoincarePolynomial { coeffs: Vec::new() };
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial::from_coeffs(coeffs)
    }

    pub fn evaluate(&self, at: i64) -> BigInt {
        let at = BigInt::from(at);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &at + c;
        }
        acc
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{deg}")?,
                _ => write!(f, "{c}*t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// `C(n, k)` for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_range(g: u32, d: u32) -> Result<()> {
    if g > MAX_GENUS || d > MAX_DEGREE {
        return Err(Error::OutOfRange(format!(
            "genus <= {MAX_GENUS} and degree <= {MAX_DEGREE} supported, got g={g}, d={d}"
        )));
    }
    Ok(())
}

/// Betti numbers of the `d`-th symmetric product of a genus-`g` surface:
/// `b_j` is the number of ways `j = a + 2c` with `a + c <= d`, weighted by
/// `C(2g, a)` — the coefficient of `x^d` in
/// `(1 + x t)^{2g} / ((1 - x)(1 - x t^2))`.
pub fn symmetric_product_poincare(g: u32, d: u32) -> Result<PoincarePolynomial> {
    check_range(g, d)?;
    let mut coeffs = vec![BigInt::zero(); 2 * d as usize + 1];
    for a in 0..=(2 * g).min(d) {
        for c in 0..=(d - a) {
            coeffs[(a + 2 * c) as usize] += binomial(2 * g as u64, a as u64);
        }
    }
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

/// Betti numbers of a `g`-dimensional complex torus: `(1 + t)^{2g}`.
pub fn torus_poincare(g: u32) -> Result<PoincarePolynomial> {
    check_range(g, 0)?;
    let coeffs = (0..=2 * g as u64)
        .map(|j| binomial(2 * g as u64, j))
        .collect();
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

/// Betti numbers of complex projective `n`-space: `1 + t^2 + ... + t^{2n}`.
pub fn projective_space_poincare(n: u32) -> Result<PoincarePolynomial> {
    if n > MAX_DEGREE {
        return Err(Error::OutOfRange(format!(
            "projective dimension <= {MAX_DEGREE} supported, got {n}"
        )));
    }
    let mut coeffs = vec![BigInt::zero(); 2 * n as usize + 1];
    for i in 0..=n as usize {
        coeffs[2 * i] = BigInt::one();
    }
    Ok(PoincarePolynomial::from_coeffs(coeffs))
}

/// In the projective-bundle range `d >= 2g - 1`, the symmetric product
/// fibers over the torus with projective-space fibers, so its Poincaré
/// polynomial factors exactly.
pub fn mattuck_product_check(g: u32, d: u32) -> Result<bool> {
    if (d as i64) < 2 * g as i64 - 1 {
        return Err(Error::OutOfRange(format!(
            "product identity requires d >= 2g - 1, got g={g}, d={d}"
        )));
    }
    let sp = symmetric_product_poincare(g, d)?;
    let product = torus_poincare(g)?.mul(&projective_space_poincare(d - g)?);
    Ok(sp == product)
}

/// Degree-by-degree comparison of the symmetric product's Betti numbers
/// against the torus-times-projective-space model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiComparison {
    /// Largest `j` with agreement in all degrees `<= j`.
    pub agree_through: usize,
    /// First degree where the two sides differ, if any.
    pub first_divergence: Option<usize>,
    /// Rows `(degree, symmetric product side, product side)`.
    pub rows: Vec<(usize, BigInt, BigInt)>,
}

/// Compares Betti numbers in the strictly-smaller-degree range
/// `g <= d <= 2g - 2`, where the map is no longer a fiber bundle but
/// homology still agrees through dimension `2(d - g) + 1`.
pub fn betti_agreement_range(g: u32, d: u32) -> Result<BettiComparison> {
    if !(g <= d && d as i64 <= 2 * g as i64 - 2) {
        return Err(Error::OutOfRange(format!(
            "comparison range is g <= d <= 2g - 2, got g={g}, d={d}"
        )));
    }
    let sp = symmetric_product_poincare(g, d)?;
    let product = torus_poincare(g)?.mul(&projective_space_poincare(d - g)?);
    let top = sp.degree().max(product.degree());
    let mut rows = Vec::with_capacity(top + 1);
    let mut first_divergence = None;
    for j in 0..=top {
        let a = sp.coeff(j);
        let b = product.coeff(j);
        if a != b && first_divergence.is_none() {
            first_divergence = Some(j);
        }
        rows.push((j, a, b));
    }
    let agree_through = match first_divergence {
        Some(0) => 0, // degree zero always agrees for these spaces
        Some(j) => j - 1,
        None => top,
    };
    Ok(BettiComparison {
        agree_through,
        first_divergence,
        rows,
    })
}

/// The dimension bounds attached to a `(g, d, k)` triple. `None` marks an
/// inapplicable entry for the given parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub genus: u32,
    pub degree: u32,
    pub map_degree: Option<u32>,
    /// Quasifibration dimension `2(d - g) + 1` of the degree-to-Jacobian
    /// map in the range `g <= d <= 2g - 2`.
    pub abel_jacobi_qf_dim: Option<i64>,
    /// Quasifibration dimension `2(d - g) - 1` for the induced map on
    /// based holomorphic spheres, same range.
    pub holomorphic_maps_qf_dim: Option<i64>,
    /// Dimension through which holomorphic spheres approximate continuous
    /// ones: `2(d - g) - 1` in range, `(2(d - g) - 1) k` above it.
    pub inclusion_equiv_dim: Option<i64>,
    /// Generic kernel-plane dimension `d - g + 1` of the underlying
    /// pseudo-bundle in the range `g <= d <= 2g - 2`.
    pub generic_plane_dim: Option<i64>,
}

pub fn bounds_report(g: u32, d: u32, map_degree: Option<u32>) -> Result<BoundsReport> {
    check_range(g, d)?;
    if d < g {
        return Err(Error::OutOfRange(format!(
            "degree {d} below genus {g}: the map to the Jacobian cannot be surjective"
        )));
    }
    let in_range = d as i64 <= 2 * g as i64 - 2;
    let gap = (d - g) as i64;
    let abel_jacobi_qf_dim = in_range.then_some(2 * gap + 1);
    let holomorphic_maps_qf_dim = in_range.then_some(2 * gap - 1);
    let inclusion_equiv_dim = match map_degree {
        Some(k) if k >= 1 && in_range => Some(2 * gap - 1),
        Some(k) if k >= 1 => Some((2 * gap - 1) * k as i64),
        _ => None,
    };
    let generic_plane_dim = in_range.then_some(gap + 1);
    Ok(BoundsReport {
        genus: g,
        degree: d,
        map_degree,
        abel_jacobi_qf_dim,
        holomorphic_maps_qf_dim,
        inclusion_equiv_dim,
        generic_plane_dim,
    })
}
