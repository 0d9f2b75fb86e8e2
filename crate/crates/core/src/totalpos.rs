//! Totally positive factorizations of the compact transfer matrices.
//!
//! The degree split `T″ = N + t·B` of a compact graph's transfer matrix is
//! also a product of elementary `GL_{r+1}` matrices: `N = I - F⁻¹` with
//! `F = f_{i₁}⋯f_{i_r}` a product of unit lower bidiagonal factors, and
//! `B = D·E` with `D` diagonal and `E` a product of upper bidiagonal factors.
//! The factor index sequences σ (for `F`) and τ (for `E`) are rearrangements
//! of `(r, …, 1)` that flip the maximal ascending / descending segments of
//! the path (see [`sigma_perm`], [`tau_perm`]).
//!
//! Multiplying out gives the single matrix `P = F·D·E` with
//! `I - t·P = F·(I - T″)`, so closed-walk series on the compact graph become
//! first-row sums of `(I - t·P)⁻¹`: the walk generating function at vertex 1
//! is the sum of `(I - t·P)⁻¹_{1,a}` over `a = 1 … min(a₁+1, r+1)`, where
//! `a₁` is the start index of the first ascending segment (no ascending
//! segment: all `r+1` columns).  Equivalently it is the `(1,1)` entry of
//! `(I - t·P′)⁻¹` for the conjugate `P′ = D·E·F = F⁻¹PF`.
//!
//! `P` is totally nonnegative whenever the weights evaluate positive:
//! [`check_total_positivity`] verifies minors exactly over big rationals.
//! [`network_dot`] draws the planar wiring network of the factorization.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Signed;

use crate::compact::step_runs;
use crate::error::{Error, Result};
use crate::graphs::TransferMatrix;
use crate::laurent::{VarId, VarRegistry};
use crate::matrix::Matrix;
use crate::qsystem::MotzkinPath;
use crate::series::TSeries;
use crate::{ZPoly, ZSeries};

/// Index endpoints `(start, end)` of the maximal ascending segments of the
/// path (segments of at least two entries, 1-based, in increasing order).
pub fn ascending_segments(m: &MotzkinPath) -> Vec<(usize, usize)> {
    step_runs(m.entries(), 1)
        .into_iter()
        .map(|(a, i)| (a, a + i - 1))
        .collect()
}

/// Index endpoints `(start, end)` of the maximal descending segments of the
/// path (segments of at least two entries, 1-based, in increasing order).
pub fn descending_segments(m: &MotzkinPath) -> Vec<(usize, usize)> {
    step_runs(m.entries(), -1)
        .into_iter()
        .map(|(a, i)| (a, a + i - 1))
        .collect()
}

/// Reverse the values inside `[lo, hi]` of a one-line sequence: each entry
/// `v ∈ [lo, hi]` becomes `lo + hi - v`.
fn flip_values(seq: &mut [usize], lo: usize, hi: usize) {
    for v in seq.iter_mut() {
        if *v >= lo && *v <= hi {
            *v = lo + hi - *v;
        }
    }
}

fn rearranged(m: &MotzkinPath, segments: &[(usize, usize)]) -> Vec<usize> {
    let mut seq: Vec<usize> = (1..=m.rank()).rev().collect();
    for &(lo, hi) in segments {
        flip_values(&mut seq, lo, hi);
    }
    seq
}

/// One-line index sequence for the lower factor product `F = f_{i₁}⋯f_{i_r}`:
/// the reversal `(r, …, 1)` with each maximal ascending segment of the path
/// flipped back to increasing order.
pub fn sigma_perm(m: &MotzkinPath) -> Vec<usize> {
    rearranged(m, &ascending_segments(m))
}

/// One-line index sequence for the upper factor product `E = e_{j₁}⋯e_{j_r}`:
/// the reversal `(r, …, 1)` with each maximal descending segment of the path
/// flipped back to increasing order.
pub fn tau_perm(m: &MotzkinPath) -> Vec<usize> {
    rearranged(m, &descending_segments(m))
}

/// Unit lower bidiagonal factor `f_i = I + E_{i+1,i}` of size `(r+1)²`
/// (`1 ≤ i ≤ r`).
pub fn elementary_f(r: usize, i: usize) -> Matrix<ZPoly> {
    assert!((1..=r).contains(&i), "factor index out of range");
    let mut m: Matrix<ZPoly> = Matrix::identity(r + 1);
    m[(i, i - 1)] = ZPoly::one();
    m
}

/// Upper bidiagonal factor `e_i = I + ν·E_{i,i+1}` of size `(r+1)²`
/// (`1 ≤ i ≤ r`).
pub fn elementary_e(r: usize, i: usize, nu: &ZPoly) -> Matrix<ZPoly> {
    assert!((1..=r).contains(&i), "factor index out of range");
    let mut m: Matrix<ZPoly> = Matrix::identity(r + 1);
    m[(i - 1, i)] = nu.clone();
    m
}

/// Diagonal matrix `D = diag(μ₁, …, μ_{r+1})`.
pub fn diagonal_d(mu: &[ZPoly]) -> Matrix<ZPoly> {
    Matrix::from_fn(mu.len(), mu.len(), |i, j| {
        if i == j {
            mu[i].clone()
        } else {
            ZPoly::zero()
        }
    })
}

/// Elementary-matrix factorization of a compact transfer matrix.
///
/// Holds the factor products `F`, `D`, `E` for a path `m` with weights
/// `y₁ … y_{2r+1}`, built with parameters `μ_i = y_{2i-1}` and
/// `ν_i = y_{2i}/y_{2i-1}` (so every `ν` is a Laurent monomial whenever the
/// weights are).
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    /// Factor indices of `F` (leftmost factor first).
    pub sigma: Vec<usize>,
    /// Factor indices of `E` (leftmost factor first).
    pub tau: Vec<usize>,
    /// Diagonal parameters `μ_i = y_{2i-1}`.
    pub mu: Vec<ZPoly>,
    /// Upper parameters `ν_i = y_{2i}/y_{2i-1}`.
    pub nu: Vec<ZPoly>,
    /// Lower unitriangular product `F = f_{σ₁}⋯f_{σ_r}`.
    pub f: Matrix<ZPoly>,
    /// Diagonal `D`.
    pub d: Matrix<ZPoly>,
    /// Upper unitriangular product `E = e_{τ₁}⋯e_{τ_r}`.
    pub e: Matrix<ZPoly>,
    /// Start index of the first maximal ascending segment, if any.
    pub first_ascent: Option<usize>,
}

/// Build the elementary factorization for a path and its `2r+1` weights.
///
/// The weights must be invertible monomials (variables, or the unit monomials
/// of a seed); otherwise the `ν` parameters fall outside the Laurent ring and
/// the factorization does not exist.
pub fn factorization(m: &MotzkinPath, weights: &[ZPoly]) -> Result<Factorization> {
    let r = m.rank();
    if weights.len() != 2 * r + 1 {
        return Err(Error::Invalid(format!(
            "need {} weights for rank {}, got {}",
            2 * r + 1,
            r,
            weights.len()
        )));
    }
    let mu: Vec<ZPoly> = (0..=r).map(|i| weights[2 * i].clone()).collect();
    let mut nu = Vec::with_capacity(r);
    for i in 1..=r {
        let inv = weights[2 * i - 2].invert().ok_or_else(|| {
            Error::NotMonomial(format!("weight y{} is not invertible", 2 * i - 1))
        })?;
        nu.push(weights[2 * i - 1].mul(&inv));
    }
    let sigma = sigma_perm(m);
    let tau = tau_perm(m);
    let mut f: Matrix<ZPoly> = Matrix::identity(r + 1);
    for &i in &sigma {
        f = f.mul(&elementary_f(r, i));
    }
    let mut e: Matrix<ZPoly> = Matrix::identity(r + 1);
    for &j in &tau {
        e = e.mul(&elementary_e(r, j, &nu[j - 1]));
    }
    let first_ascent = ascending_segments(m).first().map(|&(a, _)| a);
    Ok(Factorization {
        sigma,
        tau,
        mu: mu.clone(),
        nu,
        f,
        d: diagonal_d(&mu),
        e,
        first_ascent,
    })
}

impl Factorization {
    /// Matrix size minus one (the rank `r`).
    pub fn rank(&self) -> usize {
        self.f.rows() - 1
    }

    /// Strictly lower part `N = I - F⁻¹`: the degree-zero (ascending-edge)
    /// part of the compact transfer matrix.
    pub fn lower(&self) -> Matrix<ZPoly> {
        let n = self.f.rows();
        Matrix::<ZPoly>::identity(n).sub(&self.f.invert_unit_lower())
    }

    /// Upper part `B = D·E`: the degree-one (loop and descending-edge) part
    /// of the compact transfer matrix.
    pub fn upper(&self) -> Matrix<ZPoly> {
        self.d.mul(&self.e)
    }

    /// The compact transfer matrix `T″ = N + t·B` assembled from the factors.
    pub fn transfer(&self) -> TransferMatrix {
        TransferMatrix::from_parts(self.lower(), self.upper())
    }

    /// The network matrix `P = F·D·E` (no `t`; walk series use `I - t·P`).
    pub fn network_matrix(&self) -> Matrix<ZPoly> {
        self.f.mul(&self.d).mul(&self.e)
    }

    /// The conjugate network matrix `P′ = D·E·F = F⁻¹·P·F`.
    pub fn conjugate_matrix(&self) -> Matrix<ZPoly> {
        self.d.mul(&self.e).mul(&self.f)
    }

    /// Number of leading first-row entries of `(I - t·P)⁻¹` that sum to the
    /// compact graph's closed-walk series at vertex 1: `min(a₁+1, r+1)` for
    /// `a₁` the start of the first ascending segment, all `r+1` columns when
    /// the path has no ascending segment.  (These are exactly the unit
    /// entries of the first column of `F`.)
    pub fn resolvent_columns(&self) -> usize {
        match self.first_ascent {
            Some(a1) => (a1 + 1).min(self.rank() + 1),
            None => self.rank() + 1,
        }
    }

    /// Walk series `Σ_a (I - t·P)⁻¹_{1,a}` over the leading
    /// [`resolvent_columns`][Self::resolvent_columns] columns, with
    /// coefficients up to `t^order`; coefficient `n` is the corresponding
    /// first-row sum of `Pⁿ`.
    pub fn network_resolvent(&self, order: usize) -> ZSeries {
        let p = self.network_matrix();
        let cols = self.resolvent_columns();
        let n = p.rows();
        let mut u: Vec<ZPoly> = (0..n)
            .map(|a| if a < cols { ZPoly::one() } else { ZPoly::zero() })
            .collect();
        let mut coeffs = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            coeffs.push(u[0].clone());
            u = p.mul_vec(&u);
        }
        TSeries::from_coeffs(coeffs)
    }
}

/// Check that a factorization reproduces a transfer matrix degree by degree:
/// `T.t0 == N` and `T.t1 == B`.
pub fn decomposition_matches(fact: &Factorization, tm: &TransferMatrix) -> Result<()> {
    if tm.t0 != fact.lower() {
        return Err(Error::DecompositionMismatch(
            "degree-zero part differs from I - F^-1".into(),
        ));
    }
    if tm.t1 != fact.upper() {
        return Err(Error::DecompositionMismatch(
            "degree-one part differs from D*E".into(),
        ));
    }
    Ok(())
}

/// Check the network form of the walk series for one path, up to `t^order`:
/// the gauge identity `I - t·P = F·(I - T″)` split by `t`-degree
/// (`F⁻¹ = I - N` and `P = F·B`), with `T″` built independently from the
/// compact graph, and the column-sum series against the compact resolvent.
pub fn verify_resolvent_theorem(
    m: &MotzkinPath,
    weights: &[ZPoly],
    order: usize,
) -> Result<bool> {
    let tm = TransferMatrix::from_graph(&crate::compact::build_compact_direct(m, weights)?);
    let fact = factorization(m, weights)?;
    let n = m.rank() + 1;
    let ident: Matrix<ZPoly> = Matrix::identity(n);
    if fact.f.mul(&ident.sub(&tm.t0)) != ident {
        return Ok(false);
    }
    if fact.f.mul(&tm.t1) != fact.network_matrix() {
        return Ok(false);
    }
    Ok(fact.network_resolvent(order) == tm.resolvent(0, 0, order)?)
}

/// Check total nonnegativity of a matrix at a rational evaluation point:
/// every minor of size at most `k_max` must be `≥ 0`.
///
/// Entries are evaluated exactly (big rationals), and each minor is expanded
/// exactly, so a reported violation is a genuine negative minor.  Runtime
/// grows exponentially with the matrix size; ranks used here (`r ≤ 6`) are
/// comfortable.
pub fn check_total_positivity(
    p: &Matrix<ZPoly>,
    point: &HashMap<VarId, BigRational>,
    registry: &VarRegistry,
    k_max: usize,
) -> Result<()> {
    let n = p.rows();
    assert_eq!(n, p.cols(), "minors need a square matrix");
    let eval: Vec<BigRational> = {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(p[(i, j)].eval_rational(point, registry)?);
            }
        }
        v
    };
    let k_max = k_max.min(n);
    let masks: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    for rows in &masks {
        let k = rows.len();
        if k == 0 || k > k_max {
            continue;
        }
        for cols in &masks {
            if cols.len() != k {
                continue;
            }
            let sub: Matrix<BigRational> =
                Matrix::from_fn(k, k, |i, j| eval[rows[i] * n + cols[j]].clone());
            let det = sub.det_expansion();
            if det.is_negative() {
                return Err(Error::PositivityViolation(format!(
                    "minor rows {rows:?} cols {cols:?} = {det}"
                )));
            }
        }
    }
    Ok(())
}

/// Render the planar wiring network of `P = F·D·E` as Graphviz DOT.
///
/// Horizontal rails `1 … r+1` pass through one column per elementary factor:
/// each `f_i` column adds a rail-`i` → rail-`i+1` crossing, the diagonal
/// column weights rail `i` by `μ_i`, and each `e_j` column adds a
/// rail-`j+1` → rail-`j` crossing weighted `ν_j`.  Output is deterministic.
pub fn network_dot(fact: &Factorization, registry: &VarRegistry) -> String {
    let r = fact.rank();
    let ncols = 2 * r + 2; // source, f columns, d column, e columns
    let mut out = String::new();
    out.push_str("digraph network {\n  rankdir=LR;\n  node [shape=point];\n");
    for c in 0..=ncols {
        out.push_str("  { rank=same;");
        for v in 1..=r + 1 {
            out.push_str(&format!(" c{c}v{v};"));
        }
        out.push_str(" }\n");
    }
    let mut edge = |c: usize, from: usize, to: usize, label: Option<String>| {
        out.push_str(&format!("  c{c}v{from} -> c{}v{to}", c + 1));
        if let Some(l) = label {
            out.push_str(&format!(" [label=\"{l}\"]"));
        }
        out.push_str(";\n");
    };
    for (c, &i) in fact.sigma.iter().enumerate() {
        for v in 1..=r + 1 {
            edge(c, v, v, None);
        }
        edge(c, i, i + 1, None);
    }
    let dcol = r;
    for v in 1..=r + 1 {
        edge(dcol, v, v, Some(fact.mu[v - 1].format(registry)));
    }
    for (k, &j) in fact.tau.iter().enumerate() {
        let c = r + 1 + k;
        for v in 1..=r + 1 {
            edge(c, v, v, None);
        }
        edge(c, j + 1, j, Some(fact.nu[j - 1].format(registry)));
    }
    out.push_str("}\n");
    out
}
