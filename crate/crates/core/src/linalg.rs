//! Exact linear algebra: fraction-free rank, rational kernels, minors of
//! polynomial matrices, and kernels over the univariate rational function
//! field.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{same_context, Polynomial, UniPoly, VariableContext};
use crate::Rational;

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInstance(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidInstance(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInstance("ragged matrix rows".into()));
        }
        Self::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vector(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Exact rank by fraction-free Bareiss elimination with full pivoting
    /// (first nonzero entry in row-major scan of the remaining block).
    pub fn rank(&self) -> usize {
        // Scale each row to integers first; row scaling preserves rank.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let lcm = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                self.row(i)
                    .iter()
                    .map(|e| e.numer() * (&lcm / e.denom()))
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for step in 0..self.rows.min(self.cols) {
            let pivot = (step..self.rows)
                .flat_map(|i| (step..self.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero());
            let Some((pi, pj)) = pivot else {
                break;
            };
            m.swap(step, pi);
            if pj != step {
                for row in m.iter_mut() {
                    row.swap(step, pj);
                }
            }
            for i in (step + 1)..self.rows {
                for j in (step + 1)..self.cols {
                    let num = &m[i][j] * &m[step][step] - &m[i][step] * &m[step][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    m[i][j] = num / &prev;
                }
                m[i][step] = BigInt::zero();
            }
            prev = m[step][step].clone();
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel in reduced row echelon form (each vector
    /// carries a leading 1 that is zero in every other vector); empty when
    /// the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut work: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref(&mut work);
        let pivot_set: Vec<Option<usize>> = {
            let mut by_col = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                by_col[col] = Some(row);
            }
            by_col
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -work[row][free].clone();
            }
            basis.push(v);
        }
        if !basis.is_empty() {
            rref(&mut basis);
        }
        basis
    }
}

/// In-place reduced row echelon form over the rationals; returns the pivot
/// columns in order.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for entry in m[row][col..].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_row: Vec<Rational> = m[row][col..].to_vec();
        for (i, other) in m.iter_mut().enumerate() {
            if i == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (entry, p) in other[col..].iter_mut().zip(&pivot_row) {
                *entry -= p * &factor;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Matrix of multivariate polynomials over a shared context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    context: Arc<VariableContext>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        context: &Arc<VariableContext>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInstance(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidInstance(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !same_context(e.context(), context) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(PolyMatrix {
            context: Arc::clone(context),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(context: &Arc<VariableContext>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInstance("ragged matrix rows".into()));
        }
        Self::new(context, m, n, rows.into_iter().flatten().collect())
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// All `r x r` minors as expanded polynomials, enumerated in
    /// lexicographic order of (row subset, column subset). `r = 0` yields
    /// the single empty minor `1`.
    pub fn minors(&self, r: usize) -> Result<Vec<Polynomial>> {
        if r > self.rows.min(self.cols) {
            return Err(Error::MinorSize {
                size: r,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if r == 0 {
            return Ok(vec![Polynomial::one(&self.context)]);
        }
        let mut minors = Vec::new();
        for row_set in (0..self.rows).combinations(r) {
            for col_set in (0..self.cols).combinations(r) {
                minors.push(self.submatrix_det(&row_set, &col_set));
            }
        }
        Ok(minors)
    }

    fn submatrix_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        poly_det(
            rows.len(),
            &|i, j| self.entry(rows[i], cols[j]).clone(),
            &self.context,
        )
    }

    /// Entrywise exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<RationalMatrix> {
        let mut values = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            values.push(e.evaluate(point)?);
        }
        RationalMatrix::new(self.rows, self.cols, values)
    }

    /// Entrywise substitution of a rational curve, producing a matrix of
    /// univariate polynomials in the curve parameter.
    pub fn substitute_curve(&self, curve: &[UniPoly]) -> Result<UnivariateMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.substitute_curve(curve)?);
        }
        UnivariateMatrix::new(self.rows, self.cols, entries)
    }
}

/// Cofactor-expansion determinant of an abstractly indexed square matrix.
fn poly_det(
    n: usize,
    entry: &dyn Fn(usize, usize) -> Polynomial,
    context: &Arc<VariableContext>,
) -> Polynomial {
    match n {
        0 => Polynomial::one(context),
        1 => entry(0, 0),
        _ => {
            let mut det = Polynomial::zero(context);
            for j in 0..n {
                let minor = poly_det(
                    n - 1,
                    &|r, c| entry(r + 1, if c < j { c } else { c + 1 }),
                    context,
                );
                let term = &entry(0, j) * &minor;
                det = if j % 2 == 0 {
                    &det + &term
                } else {
                    &det - &term
                };
            }
            det
        }
    }
}

/// Matrix of univariate polynomials in a curve parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<UniPoly>,
}

impl UnivariateMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<UniPoly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInstance(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidInstance(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(UnivariateMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.cols + j]
    }

    /// Basis of the right kernel over the rational function field, with
    /// denominators cleared so every entry is a polynomial, each vector of
    /// content one, and the pivot entry of each vector (its echelon
    /// coordinate) carrying a positive leading coefficient.
    pub fn kernel_basis(&self) -> Vec<Vec<UniPoly>> {
        let mut work: Vec<Vec<RatFn>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| RatFn::from_poly(self.entry(i, j).clone()))
                    .collect()
            })
            .collect();
        let pivots = rref_ratfn(&mut work);
        let pivot_set: Vec<Option<usize>> = {
            let mut by_col = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                by_col[col] = Some(row);
            }
            by_col
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![RatFn::zero(); self.cols];
            v[free] = RatFn::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = work[row][free].neg();
            }
            basis.push(normalize_kernel_vector(v, free));
        }
        basis
    }
}

fn normalize_kernel_vector(v: Vec<RatFn>, pivot: usize) -> Vec<UniPoly> {
    // Clear denominators with their monic lcm, then divide out the monic
    // content; both factors are monic so the pivot entry keeps a positive
    // leading coefficient, enforced again for safety.
    let mut common = UniPoly::one();
    for entry in &v {
        if entry.is_zero() {
            continue;
        }
        let g = UniPoly::gcd(&common, &entry.den);
        common = common.mul(&entry.den.div_exact(&g).expect("gcd divides"));
    }
    let mut cleared: Vec<UniPoly> = v
        .iter()
        .map(|e| {
            if e.is_zero() {
                UniPoly::zero()
            } else {
                e.num.mul(&common.div_exact(&e.den).expect("lcm clears"))
            }
        })
        .collect();
    let mut content = UniPoly::zero();
    for entry in &cleared {
        content = UniPoly::gcd(&content, entry);
    }
    if !content.is_zero() && !content.is_constant() {
        for entry in cleared.iter_mut() {
            *entry = entry.div_exact(&content).expect("content divides");
        }
    }
    let lead_sign_negative = cleared[pivot]
        .leading_coeff()
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if lead_sign_negative {
        for entry in cleared.iter_mut() {
            *entry = entry.neg();
        }
    }
    cleared
}

/// Rational function in one parameter: `num / den` with `den` monic and
/// `gcd(num, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RatFn {
    num: UniPoly,
    den: UniPoly,
}

impl RatFn {
    fn zero() -> Self {
        RatFn {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    fn one() -> Self {
        RatFn {
            num: UniPoly::one(),
            den: UniPoly::one(),
        }
    }

    fn from_poly(p: UniPoly) -> Self {
        RatFn {
            num: p,
            den: UniPoly::one(),
        }
    }

    fn canonical(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFn::zero();
        }
        let g = UniPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading_coeff().expect("nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFn { num, den }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn sub(&self, other: &RatFn) -> Self {
        RatFn::canonical(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    fn mul(&self, other: &RatFn) -> Self {
        RatFn::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatFn::canonical(self.den.clone(), self.num.clone())
    }
}

/// Reduced row echelon form over the rational function field.
fn rref_ratfn(m: &mut [Vec<RatFn>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for entry in m[row][col..].iter_mut() {
            *entry = entry.mul(&inv);
        }
        let pivot_row: Vec<RatFn> = m[row][col..].to_vec();
        for (i, other) in m.iter_mut().enumerate() {
            if i == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (entry, p) in other[col..].iter_mut().zip(&pivot_row) {
                *entry = entry.sub(&p.mul(&factor));
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}


/// Determinant of a square matrix of univariate polynomials by cofactor
/// expansion.
pub(crate) fn unipoly_det(n: usize, entry: &dyn Fn(usize, usize) -> UniPoly) -> UniPoly {
    match n {
        0 => UniPoly::one(),
        1 => entry(0, 0),
        _ => {
            let mut det = UniPoly::zero();
            for j in 0..n {
                let minor = unipoly_det(n - 1, &|r, c| entry(r + 1, if c < j { c } else { c + 1 }));
                let term = entry(0, j).mul(&minor);
                det = if j % 2 == 0 {
                    det.add(&term)
                } else {
                    det.sub(&term)
                };
            }
            det
        }
    }
}
