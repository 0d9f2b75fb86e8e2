//! The quadratic recurrence, its seeds on Motzkin paths, conserved
//! quantities, and hard-particle partition functions.
//!
//! The family `R_{α,n}` (`1 ≤ α ≤ r`, `n ∈ ℤ`) satisfies
//!
//! ```text
//! R_{α,n+1} R_{α,n-1} = R_{α,n}^2 + R_{α+1,n} R_{α-1,n},
//! R_{0,n} = R_{r+1,n} = 1.
//! ```
//!
//! A seed assigns independent variables to `R_{α,m_α}` and `R_{α,m_α+1}`
//! where `m = (m_1 … m_r)` is a Motzkin path (adjacent entries differ by at
//! most one).  Every other `R` value is then a Laurent polynomial in the seed
//! variables, computed here by exact division with full memoization
//! ([`SeedContext::compute_r`]).
//!
//! The same numbers are organized by two classical identities, both
//! machine-checked in this crate: a Hankel-type determinant expresses
//! `R_{α,n}` through the `α = 1` row, and maximal minors of the
//! `(r+1) × (r+2)` sliding-window matrix give quantities `c_p` independent of
//! the window position.  The `c_p` in turn are partition functions of hard
//! particles on a fixed graph `G_r` with `2r+1` vertices, evaluated at weights
//! that are explicit Laurent monomials in the seed variables.

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::laurent::{VarId, VarRegistry};
use crate::matrix::{det_bareiss, Matrix};
use crate::ring::Ring;
use crate::{ZFrac, ZPoly};
use std::collections::HashMap;

// ---------------------------------------------------------------------------
// Motzkin paths
// ---------------------------------------------------------------------------

/// A sequence `(m_1 … m_r)` of integers whose adjacent entries differ by at
/// most one.  Seeds of the recurrence are indexed by these paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotzkinPath(Vec<i64>);

impl MotzkinPath {
    /// Validate and wrap a sequence of heights.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::MotzkinViolation("path must have rank at least 1".into()));
        }
        for w in entries.windows(2) {
            if (w[0] - w[1]).abs() > 1 {
                return Err(Error::MotzkinViolation(format!(
                    "adjacent heights {} and {} differ by more than one",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self(entries))
    }

    /// The flat path `(0 … 0)` of the given rank.
    pub fn flat(r: usize) -> Self {
        Self(vec![0; r])
    }

    /// Rank `r` (number of entries).
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Height `m_α` (`α` is 1-based).
    pub fn get(&self, alpha: usize) -> i64 {
        self.0[alpha - 1]
    }

    /// All heights.
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Minimum height.
    pub fn min(&self) -> i64 {
        *self.0.iter().min().expect("nonempty path")
    }

    /// Whether the path lies in the fundamental domain (minimum height zero).
    pub fn is_fundamental(&self) -> bool {
        self.min() == 0
    }

    /// The path with `m_α` shifted by `delta`, if still Motzkin.
    pub fn mutated(&self, alpha: usize, delta: i64) -> Result<Self> {
        let mut e = self.0.clone();
        e[alpha - 1] += delta;
        Self::new(e)
    }
}

impl std::fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All Motzkin paths of rank `r` with minimum height zero, in lexicographic
/// order.  There are `3^(r-1)` of them.
pub fn fundamental_domain(r: usize) -> Vec<MotzkinPath> {
    assert!(r >= 1, "rank must be at least 1");
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (0..r as i64).map(|h| vec![h]).collect();
    // Depth-first in lexicographic order: extend by -1, 0, +1.
    stack.reverse();
    while let Some(prefix) = stack.pop() {
        if prefix.len() == r {
            if prefix.iter().min() == Some(&0) {
                out.push(MotzkinPath(prefix));
            }
            continue;
        }
        let last = *prefix.last().expect("nonempty prefix");
        for d in [1, 0, -1] {
            let h = last + d;
            if h >= 0 {
                let mut next = prefix.clone();
                next.push(h);
                stack.push(next);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Seeds and memoized computation
// ---------------------------------------------------------------------------

fn var_name(alpha: usize, n: i64) -> String {
    if n < 0 {
        format!("R{alpha}_m{}", -n)
    } else {
        format!("R{alpha}_{n}")
    }
}

/// A seed of the recurrence together with a memo table of every `R` value
/// computed from it.
///
/// The seed introduces variables `R_{α,m_α}` and `R_{α,m_α+1}` for
/// `α = 1 … r` (named `R{α}_{n}` by default) and computes any other
/// `R_{α,n}` as a Laurent polynomial in them.
#[derive(Debug, Clone)]
pub struct SeedContext {
    r: usize,
    path: MotzkinPath,
    registry: VarRegistry,
    /// `vars[α-1] = [id of R_{α,m_α}, id of R_{α,m_α+1}]`.
    vars: Vec<[VarId; 2]>,
    memo: HashMap<(usize, i64), ZPoly>,
}

impl SeedContext {
    /// Seed with default variable names.
    pub fn new(path: MotzkinPath) -> Self {
        let r = path.rank();
        let names: Vec<[String; 2]> = (1..=r)
            .map(|a| {
                let m = path.get(a);
                [var_name(a, m), var_name(a, m + 1)]
            })
            .collect();
        Self::with_names(path, names).expect("default names are distinct and valid")
    }

    /// Seed with caller-chosen variable names (two per column, lower shift
    /// first).  Names must be distinct.
    pub fn with_names(path: MotzkinPath, names: Vec<[String; 2]>) -> Result<Self> {
        let r = path.rank();
        if names.len() != r {
            return Err(Error::Invalid(format!(
                "expected {r} name pairs, got {}",
                names.len()
            )));
        }
        let mut registry = VarRegistry::new();
        let mut vars = Vec::with_capacity(r);
        for pair in &names {
            let before = registry.len();
            let lo = registry.intern(&pair[0]);
            let hi = registry.intern(&pair[1]);
            if registry.len() != before + 2 {
                return Err(Error::Invalid(format!(
                    "duplicate seed variable name in pair ({}, {})",
                    pair[0], pair[1]
                )));
            }
            vars.push([lo, hi]);
        }
        let mut ctx = Self {
            r,
            path,
            registry,
            vars,
            memo: HashMap::new(),
        };
        for a in 1..=r {
            let m = ctx.path.get(a);
            let lo = ZPoly::var(ctx.vars[a - 1][0]);
            let hi = ZPoly::var(ctx.vars[a - 1][1]);
            ctx.memo.insert((a, m), lo);
            ctx.memo.insert((a, m + 1), hi);
        }
        Ok(ctx)
    }

    /// Rank of the underlying path.
    pub fn rank(&self) -> usize {
        self.r
    }

    /// The seed's Motzkin path.
    pub fn path(&self) -> &MotzkinPath {
        &self.path
    }

    /// Variable registry (for formatting and evaluation points).
    pub fn registry(&self) -> &VarRegistry {
        &self.registry
    }

    /// Seed variable id for column `α`; `upper` picks `R_{α,m_α+1}`.
    pub fn seed_var(&self, alpha: usize, upper: bool) -> VarId {
        self.vars[alpha - 1][usize::from(upper)]
    }

    /// Parse a polynomial against this seed's registry.
    pub fn parse_poly(&mut self, s: &str) -> Result<ZPoly> {
        ZPoly::parse(s, &mut self.registry)
    }

    /// Compute `R_{α,n}` as a Laurent polynomial in the seed variables.
    ///
    /// `α = 0` and `α = r+1` give the boundary value `1`.  The recurrence is
    /// applied towards larger `n` above the seed window and towards smaller
    /// `n` below it; each step divides exactly (the Laurent property, enforced
    /// rather than assumed).
    pub fn compute_r(&mut self, alpha: usize, n: i64) -> Result<ZPoly> {
        if alpha == 0 || alpha == self.r + 1 {
            return Ok(ZPoly::one());
        }
        if alpha > self.r + 1 {
            return Err(Error::Invalid(format!(
                "row index {alpha} out of range for rank {}",
                self.r
            )));
        }
        if let Some(p) = self.memo.get(&(alpha, n)) {
            return Ok(p.clone());
        }
        let m = self.path.get(alpha);
        let value = if n > m + 1 {
            // Forward: R_{α,n} = (R_{α,n-1}^2 + R_{α+1,n-1} R_{α-1,n-1}) / R_{α,n-2}.
            let a = self.compute_r(alpha, n - 1)?;
            let b = self.compute_r(alpha + 1, n - 1)?;
            let c = self.compute_r(alpha.wrapping_sub(1), n - 1)?;
            let d = self.compute_r(alpha, n - 2)?;
            a.square().add(&b.mul(&c)).exact_div(&d)?
        } else {
            // Backward: R_{α,n} = (R_{α,n+1}^2 + R_{α+1,n+1} R_{α-1,n+1}) / R_{α,n+2}.
            let a = self.compute_r(alpha, n + 1)?;
            let b = self.compute_r(alpha + 1, n + 1)?;
            let c = self.compute_r(alpha.wrapping_sub(1), n + 1)?;
            let d = self.compute_r(alpha, n + 2)?;
            a.square().add(&b.mul(&c)).exact_div(&d)?
        };
        self.memo.insert((alpha, n), value.clone());
        Ok(value)
    }

    /// `R_{α,n}` through the Hankel-type determinant over the first row:
    /// `det_{1≤i,j≤α} R_{1, n+i+j-α-1}`.
    pub fn det_formula_r(&mut self, alpha: usize, n: i64) -> Result<ZPoly> {
        let a = alpha as i64;
        let mut entries = Vec::with_capacity(alpha * alpha);
        for i in 1..=a {
            for j in 1..=a {
                entries.push(self.compute_r(1, n + i + j - a - 1)?);
            }
        }
        let m = Matrix::from_fn(alpha, alpha, |i, j| entries[i * alpha + j].clone());
        det_bareiss(&m)
    }

    /// Conserved quantity `c_p` computed at window position `n`: the maximal
    /// minor of the `(r+1) × (r+2)` matrix `(R_{1,n+i+j-2})` obtained by
    /// deleting column `r+2-p`.  Independent of `n`; `c_0 = c_{r+1} = 1`.
    pub fn conserved_c(&mut self, p: usize, n: i64) -> Result<ZPoly> {
        let r = self.r;
        if p > r + 1 {
            return Err(Error::Invalid(format!(
                "conserved index {p} out of range for rank {r}"
            )));
        }
        let skip = r + 2 - p; // 1-based column to delete
        let mut cols: Vec<i64> = (1..=(r + 2) as i64).collect();
        cols.remove(skip - 1);
        let mut entries = Vec::with_capacity((r + 1) * (r + 1));
        for i in 1..=(r + 1) as i64 {
            for &j in &cols {
                entries.push(self.compute_r(1, n + i + j - 2)?);
            }
        }
        let m = Matrix::from_fn(r + 1, r + 1, |i, j| entries[i * (r + 1) + j].clone());
        det_bareiss(&m)
    }

    /// Conserved quantity `c_p`, checked to be identical at window positions
    /// `n = 0, 1, 2`.
    pub fn conserved_c_checked(&mut self, p: usize) -> Result<ZPoly> {
        let c0 = self.conserved_c(p, 0)?;
        for n in [1, 2] {
            let cn = self.conserved_c(p, n)?;
            if cn != c0 {
                return Err(Error::ConservationViolation(format!(
                    "c_{p} differs between window positions 0 and {n}"
                )));
            }
        }
        Ok(c0)
    }

    /// The `2r+1` weights attached to this seed, as Laurent monomials in the
    /// seed variables.
    ///
    /// With `λ_{α,n} = R_{α,n+1}/R_{α,n}` and `μ_{α,n} = R_{α,n}/R_{α-1,n}`
    /// (boundary rows count as `1`), and the path extended by `m_0 = m_1`,
    /// `m_{r+1} = m_r`:
    ///
    /// ```text
    /// y_{2α-1} = λ_{α,m_α} / λ_{α-1,m_{α-1}}                  (1 ≤ α ≤ r+1)
    /// y_{2α}   = (μ_{α+1,m_α+1} / μ_{α,m_α}) · f₁ · f₂        (1 ≤ α ≤ r)
    /// ```
    ///
    /// where `f₁ = λ_{α+1,m_{α+1}}/λ_{α+1,m_α}` when `m_α = m_{α+1}+1`
    /// (else `1`) and `f₂ = λ_{α-1,m_α}/λ_{α-1,m_{α-1}}` when
    /// `m_{α-1} = m_α+1` (else `1`).  Every out-of-window `R` cancels, and
    /// the result is checked to be a monomial with coefficient one.
    pub fn weights(&mut self) -> Result<Vec<ZPoly>> {
        let r = self.r;
        // Extended path m_0 … m_{r+1} (1-based indexing into this vector).
        let mut m = Vec::with_capacity(r + 2);
        m.push(self.path.get(1));
        m.extend_from_slice(self.path.entries());
        m.push(self.path.get(r));
        let mext = |a: usize| m[a];

        let mut out = Vec::with_capacity(2 * r + 1);
        for alpha in 1..=r {
            // y_{2α-1}
            let odd = self
                .lambda(alpha, mext(alpha))?
                .div(&self.lambda(alpha - 1, mext(alpha - 1))?)?;
            out.push(frac_to_monomial(odd, &format!("y_{}", 2 * alpha - 1))?);
            // y_{2α}
            let mut even = self
                .mu(alpha + 1, mext(alpha) + 1)?
                .div(&self.mu(alpha, mext(alpha))?)?;
            if mext(alpha) == mext(alpha + 1) + 1 {
                let f1 = self
                    .lambda(alpha + 1, mext(alpha + 1))?
                    .div(&self.lambda(alpha + 1, mext(alpha))?)?;
                even = even.mul(&f1);
            }
            if mext(alpha - 1) == mext(alpha) + 1 {
                let f2 = self
                    .lambda(alpha - 1, mext(alpha))?
                    .div(&self.lambda(alpha - 1, mext(alpha - 1))?)?;
                even = even.mul(&f2);
            }
            out.push(frac_to_monomial(even, &format!("y_{}", 2 * alpha))?);
        }
        // y_{2r+1} (odd index α = r+1).
        let last = self
            .lambda(r + 1, mext(r + 1))?
            .div(&self.lambda(r, mext(r))?)?;
        out.push(frac_to_monomial(last, &format!("y_{}", 2 * r + 1))?);
        Ok(out)
    }

    fn lambda(&mut self, alpha: usize, n: i64) -> Result<ZFrac> {
        if alpha == 0 || alpha == self.r + 1 {
            return Ok(Frac::one());
        }
        Ok(Frac::new(
            self.compute_r(alpha, n + 1)?,
            self.compute_r(alpha, n)?,
        ))
    }

    fn mu(&mut self, alpha: usize, n: i64) -> Result<ZFrac> {
        Ok(Frac::new(
            self.compute_r(alpha, n)?,
            self.compute_r(alpha - 1, n)?,
        ))
    }

    /// The weight family at sliding shift `k` (flat seeds):
    ///
    /// ```text
    /// y_{2α-1,k} = R_{α-1,k} R_{α,k+1} / (R_{α,k} R_{α-1,k+1})
    /// y_{2α,k}   = R_{α-1,k} R_{α+1,k+1} / (R_{α,k} R_{α,k+1})
    /// ```
    ///
    /// For `k ≠ 0` these are genuine ratios of Laurent polynomials, so they
    /// are returned as exact fractions.
    pub fn weights_shifted(&mut self, k: i64) -> Result<Vec<ZFrac>> {
        let r = self.r;
        let mut out = Vec::with_capacity(2 * r + 1);
        for alpha in 1..=r {
            let odd = Frac::new(
                self.compute_r(alpha - 1, k)?.mul(&self.compute_r(alpha, k + 1)?),
                self.compute_r(alpha, k)?.mul(&self.compute_r(alpha - 1, k + 1)?),
            );
            out.push(odd);
            let even = Frac::new(
                self.compute_r(alpha - 1, k)?.mul(&self.compute_r(alpha + 1, k + 1)?),
                self.compute_r(alpha, k)?.mul(&self.compute_r(alpha, k + 1)?),
            );
            out.push(even);
        }
        let last = Frac::new(
            self.compute_r(r, k)?.mul(&self.compute_r(r + 1, k + 1)?),
            self.compute_r(r + 1, k)?.mul(&self.compute_r(r, k + 1)?),
        );
        out.push(last);
        Ok(out)
    }
}

fn frac_to_monomial(f: ZFrac, what: &str) -> Result<ZPoly> {
    let p = f
        .to_poly()
        .map_err(|_| Error::NotMonomial(format!("{what} does not reduce to a Laurent polynomial")))?;
    match p.as_monomial() {
        Some((_, c)) if c == &num_bigint::BigInt::from(1) => Ok(p),
        _ => Err(Error::NotMonomial(format!(
            "{what} is not a single monomial with coefficient one"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Cluster mutation
// ---------------------------------------------------------------------------

/// Direction of a seed mutation: shift one height of the path up or down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `m_α → m_α + 1` (the window slides up).
    Forward,
    /// `m_α → m_α - 1` (the window slides down).
    Backward,
}

/// A cluster: a Motzkin path together with the values of its `2r` seed
/// quantities, expressed in some ambient ring of Laurent polynomials.
///
/// Starting from [`Cluster::from_seed`] the values are the seed variables
/// themselves; each [`mutate`][Cluster::mutate] replaces one value using the
/// exchange relation, with an exact division witnessing the Laurent property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    path: MotzkinPath,
    /// `vals[α-1] = [value of R_{α,m_α}, value of R_{α,m_α+1}]`.
    vals: Vec<[ZPoly; 2]>,
}

impl Cluster {
    /// The identity cluster of a seed (values are the variables).
    pub fn from_seed(ctx: &SeedContext) -> Self {
        Self {
            path: ctx.path().clone(),
            vals: (1..=ctx.rank())
                .map(|a| {
                    [
                        ZPoly::var(ctx.seed_var(a, false)),
                        ZPoly::var(ctx.seed_var(a, true)),
                    ]
                })
                .collect(),
        }
    }

    /// The path currently indexing the cluster.
    pub fn path(&self) -> &MotzkinPath {
        &self.path
    }

    /// Value of `R_{α,n}` for `n` in the current window `{m_α, m_α+1}`.
    pub fn value(&self, alpha: usize, n: i64) -> Option<&ZPoly> {
        let m = self.path.get(alpha);
        if n == m {
            Some(&self.vals[alpha - 1][0])
        } else if n == m + 1 {
            Some(&self.vals[alpha - 1][1])
        } else {
            None
        }
    }

    /// Value of `R_{α,n}` where boundary rows give `1`.
    fn value_ext(&self, alpha: usize, n: i64) -> Result<ZPoly> {
        if alpha == 0 || alpha == self.path.rank() + 1 {
            return Ok(ZPoly::one());
        }
        self.value(alpha, n).cloned().ok_or_else(|| {
            Error::Invalid(format!("R_{{{alpha},{n}}} is outside the cluster window"))
        })
    }

    /// Exchange one seed quantity using the recurrence.
    ///
    /// Forward at `α` requires the raised path to stay Motzkin and replaces
    /// `R_{α,m_α}` by `R_{α,m_α+2} = (R_{α,m_α+1}^2 +
    /// R_{α+1,m_α+1} R_{α-1,m_α+1}) / R_{α,m_α}`; backward is symmetric.
    /// The division is by the leaving value and is checked exact.
    pub fn mutate(&self, alpha: usize, dir: Direction) -> Result<Cluster> {
        let delta = match dir {
            Direction::Forward => 1,
            Direction::Backward => -1,
        };
        let new_path = self.path.mutated(alpha, delta)?;
        let m = self.path.get(alpha);
        let mut vals = self.vals.clone();
        match dir {
            Direction::Forward => {
                let hi = self.value_ext(alpha, m + 1)?;
                let up = self.value_ext(alpha + 1, m + 1)?;
                let down = self.value_ext(alpha.wrapping_sub(1), m + 1)?;
                let leaving = self.value_ext(alpha, m)?;
                let entering = hi.square().add(&up.mul(&down)).exact_div(&leaving)?;
                vals[alpha - 1] = [hi, entering];
            }
            Direction::Backward => {
                let lo = self.value_ext(alpha, m)?;
                let up = self.value_ext(alpha + 1, m)?;
                let down = self.value_ext(alpha.wrapping_sub(1), m)?;
                let leaving = self.value_ext(alpha, m + 1)?;
                let entering = lo.square().add(&up.mul(&down)).exact_div(&leaving)?;
                vals[alpha - 1] = [entering, lo];
            }
        }
        Ok(Cluster {
            path: new_path,
            vals,
        })
    }
}

/// Drive a cluster from the seed of `ctx` to the target path by greedy
/// single-height mutations, returning the final cluster (whose values are
/// Laurent polynomials in the variables of `ctx`).
pub fn mutate_to_path(ctx: &SeedContext, target: &MotzkinPath) -> Result<Cluster> {
    if target.rank() != ctx.rank() {
        return Err(Error::Invalid("target path has a different rank".into()));
    }
    let mut cluster = Cluster::from_seed(ctx);
    // Repeatedly fix the leftmost height that differs, stepping towards the
    // target; a height may overshoot the Motzkin condition only if a
    // neighbour still needs adjusting first, so sweep until stable.
    let mut guard = 0usize;
    while cluster.path() != target {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::Invalid(
                "mutation schedule failed to reach the target path".into(),
            ));
        }
        let mut progressed = false;
        for alpha in 1..=target.rank() {
            let cur = cluster.path().get(alpha);
            let want = target.get(alpha);
            if cur == want {
                continue;
            }
            let dir = if want > cur {
                Direction::Forward
            } else {
                Direction::Backward
            };
            if let Ok(next) = cluster.mutate(alpha, dir) {
                cluster = next;
                progressed = true;
            }
        }
        if !progressed {
            return Err(Error::Invalid(
                "no admissible mutation towards the target path".into(),
            ));
        }
    }
    Ok(cluster)
}

// ---------------------------------------------------------------------------
// Hard particles
// ---------------------------------------------------------------------------

/// The fixed graph `G_r` on `2r+1` vertices carrying the hard-particle model
/// whose partition functions are the conserved quantities.
///
/// Edges: `(1,2)`, `(2r,2r+1)`, and for each `1 ≤ i ≤ r-1` the triangle
/// `(2i,2i+1)`, `(2i,2i+2)`, `(2i+1,2i+2)`.  For `r = 0` the graph is a
/// single vertex.
#[derive(Debug, Clone)]
pub struct HardParticleGraph {
    /// Number of vertices (`2r+1`, or `1` when `r = 0`).
    pub vertices: usize,
    /// Edges as 1-based vertex pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

/// Build `G_r`.
pub fn hard_particle_graph(r: usize) -> HardParticleGraph {
    if r == 0 {
        return HardParticleGraph {
            vertices: 1,
            edges: Vec::new(),
        };
    }
    let mut edges = vec![(1, 2)];
    for i in 1..r {
        edges.push((2 * i, 2 * i + 1));
        edges.push((2 * i, 2 * i + 2));
        edges.push((2 * i + 1, 2 * i + 2));
    }
    edges.push((2 * r, 2 * r + 1));
    edges.sort_unstable();
    edges.dedup();
    HardParticleGraph {
        vertices: 2 * r + 1,
        edges,
    }
}

/// Partition functions `Z_0 … Z_{r+1}` of `m` hard particles on `G_r` with
/// vertex weights `y_1 … y_{2r+1}`, by the three-term recursion
///
/// ```text
/// Z_m(G_r) = Z_m(G_{r-1}) + y_{2r+1} Z_{m-1}(G_{r-1}) + y_{2r} Z_{m-1}(G_{r-2}).
/// ```
pub fn hard_particle_z<T: Ring>(r: usize, y: &[T]) -> Vec<T> {
    assert!(y.len() >= 2 * r + 1, "need 2r+1 vertex weights");
    // zs[k] = partition vector of G_k, indices m = 0 ..= k+1.
    let mut z0 = vec![T::ring_one(), y[0].clone()];
    if r == 0 {
        return z0;
    }
    let mut z1 = vec![
        T::ring_one(),
        y[0].ring_add(&y[1]).ring_add(&y[2]),
        y[0].ring_mul(&y[2]),
    ];
    if r == 1 {
        return z1;
    }
    for k in 2..=r {
        let at = |v: &Vec<T>, m: i64| -> T {
            if m < 0 || m as usize >= v.len() {
                T::ring_zero()
            } else {
                v[m as usize].clone()
            }
        };
        let mut zk = Vec::with_capacity(k + 2);
        for m in 0..=(k + 1) as i64 {
            let a = at(&z1, m);
            let b = y[2 * k].ring_mul(&at(&z1, m - 1));
            let c = y[2 * k - 1].ring_mul(&at(&z0, m - 1));
            zk.push(a.ring_add(&b).ring_add(&c));
        }
        z0 = std::mem::replace(&mut z1, zk);
    }
    z1
}

/// Brute-force oracle: partition functions by direct enumeration of
/// independent vertex subsets of the graph.  Exponential; intended for
/// `r ≤ 5`.
pub fn independent_set_z<T: Ring>(g: &HardParticleGraph, y: &[T]) -> Vec<T> {
    let n = g.vertices;
    assert!(n <= 20, "brute-force enumeration limited to small graphs");
    assert!(y.len() >= n);
    let mut adj = vec![0u32; n + 1];
    for &(a, b) in &g.edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut out = vec![T::ring_zero(); n + 1];
    let mut max_card = 0usize;
    for mask in 0u32..(1 << n) {
        // Vertex i (1-based) is bit i-1… keep bits aligned by shifting.
        let occupied = mask << 1;
        let mut ok = true;
        for v in 1..=n {
            if occupied & (1 << v) != 0 && adj[v] & occupied != 0 {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let card = mask.count_ones() as usize;
        max_card = max_card.max(card);
        let mut w = T::ring_one();
        for v in 1..=n {
            if occupied & (1 << v) != 0 {
                w = w.ring_mul(&y[v - 1]);
            }
        }
        out[card] = out[card].ring_add(&w);
    }
    out.truncate(max_card + 1);
    out
}

// ---------------------------------------------------------------------------
// Seed files
// ---------------------------------------------------------------------------

/// Parse a seed description of the form
///
/// ```text
/// # comment
/// R 1 0 = a
/// R 1 1 = b
/// ```
///
/// one line per seed variable.  The rank and Motzkin path are inferred: each
/// column `α = 1 … r` must appear with exactly two consecutive shifts
/// `{m_α, m_α+1}`, and the inferred path must be Motzkin.
pub fn parse_seed_file(text: &str) -> Result<SeedContext> {
    let mut entries: HashMap<usize, Vec<(i64, String)>> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("seed line {}: {msg}", lineno + 1));
        let (lhs, name) = line
            .split_once('=')
            .ok_or_else(|| err("expected `R <alpha> <n> = <name>`"))?;
        let name = name.trim();
        if name.is_empty()
            || !name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
            || name.chars().next().map(|c| c.is_ascii_digit()) == Some(true)
        {
            return Err(err(&format!("bad variable name `{name}`")));
        }
        let fields: Vec<&str> = lhs.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "R" {
            return Err(err("expected `R <alpha> <n> = <name>`"));
        }
        let alpha: usize = fields[1]
            .parse()
            .map_err(|_| err(&format!("bad column index `{}`", fields[1])))?;
        let n: i64 = fields[2]
            .parse()
            .map_err(|_| err(&format!("bad shift `{}`", fields[2])))?;
        if alpha == 0 {
            return Err(err("column indices start at 1"));
        }
        entries.entry(alpha).or_default().push((n, name.to_string()));
    }
    if entries.is_empty() {
        return Err(Error::Parse("seed file has no variable lines".into()));
    }
    let r = *entries.keys().max().expect("nonempty");
    let mut heights = Vec::with_capacity(r);
    let mut names = Vec::with_capacity(r);
    for alpha in 1..=r {
        let mut col = entries.remove(&alpha).ok_or_else(|| {
            Error::Parse(format!("missing seed variables for column {alpha}"))
        })?;
        col.sort();
        if col.len() != 2 || col[1].0 != col[0].0 + 1 {
            return Err(Error::Parse(format!(
                "column {alpha} needs exactly the two consecutive shifts m and m+1"
            )));
        }
        heights.push(col[0].0);
        names.push([col[0].1.clone(), col[1].1.clone()]);
    }
    let path = MotzkinPath::new(heights)?;
    SeedContext::with_names(path, names)
}
