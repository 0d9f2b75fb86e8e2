//! Weighted rooted trees attached to Motzkin paths and their path models.
//!
//! To each Motzkin path `m` of rank `r` a rooted tree `Γ_m` on `2r+2`
//! vertices is attached ([`build_gamma`]), plus a set of one-way descending
//! shortcut edges.  Edges pointing away from the root carry `t`-degree `0`
//! and weight `1`; edges towards the root carry `t`-degree `1` and one of the
//! `2r+1` skeleton weights.  The generating function of closed walks counted
//! by their descents — the `(0,0)` entry of the resolvent
//! `(I - T_m)^{-1}` of the transfer matrix ([`TransferMatrix::resolvent`]) —
//! reproduces the recurrence family `R_{1,n}` when the weights are the seed
//! weights of `m` ([`crate::qsystem::SeedContext::weights`]), and windows of
//! those coefficients assemble into determinants giving every `R_{α,n}`
//! ([`lgv_determinant`]), mirroring the non-intersecting-path picture
//! ([`lattice_paths`], [`disjoint_pairs`]).
//!
//! The same resolvents have finite continued-fraction expansions
//! ([`ContinuedFraction`]), related by two local rearrangement moves
//! ([`rearrange_r1`], [`rearrange_r2`]); and mutations of the underlying path
//! act on the weights by explicit subtraction-free formulas
//! ([`mutate_weights`]).

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::laurent::{VarId, VarRegistry};
use crate::matrix::{det_bareiss, Matrix};
use crate::qsystem::{MotzkinPath, SeedContext};
use crate::series::TSeries;
use crate::{ZFrac, ZPoly, ZSeries};

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Vertex label of a rooted tree: spine vertices get integers `0, 1, …`,
/// interior pendant vertices get the primed label of their attachment point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// Spine (and boundary) vertices.
    Num(u32),
    /// Pendant attached to the spine vertex with the same number.
    Primed(u32),
}

impl std::fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VertexLabel::Num(k) => write!(f, "{k}"),
            VertexLabel::Primed(k) => write!(f, "{k}'"),
        }
    }
}

/// A directed weighted edge; `t_deg` is `1` for descents (towards the root)
/// and `0` for ascents (weight `1`).
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    /// Source vertex position.
    pub from: usize,
    /// Target vertex position.
    pub to: usize,
    /// Power of `t` carried by the step.
    pub t_deg: u8,
    /// Multiplicative weight of the step.
    pub weight: ZPoly,
}

/// A vertex-labeled weighted digraph with a distinguished root, in canonical
/// vertex order (construction order; positions index matrices).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph {
    /// Labels in canonical position order.
    pub labels: Vec<VertexLabel>,
    /// All edges (loops allowed).
    pub edges: Vec<Edge>,
    /// Position of the root vertex.
    pub root: usize,
}

impl WeightedDigraph {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Position of a label, if present.
    pub fn position_of(&self, label: VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| *l == label)
    }

    /// Weight of the unique `t`-degree-1 edge between two labels.
    fn down_edge_weight(&self, from: VertexLabel, to: VertexLabel) -> Result<ZPoly> {
        let f = self
            .position_of(from)
            .ok_or_else(|| Error::Invalid(format!("no vertex labeled {from}")))?;
        let t = self
            .position_of(to)
            .ok_or_else(|| Error::Invalid(format!("no vertex labeled {to}")))?;
        let mut found = None;
        for e in &self.edges {
            if e.from == f && e.to == t && e.t_deg == 1 {
                if found.is_some() {
                    return Err(Error::Invalid(format!(
                        "multiple descents from {from} to {to}"
                    )));
                }
                found = Some(e.weight.clone());
            }
        }
        found.ok_or_else(|| Error::Invalid(format!("no descent from {from} to {to}")))
    }

    /// Graphviz rendering with deterministic vertex and edge order.
    pub fn to_dot(&self, registry: &VarRegistry) -> String {
        let mut out = String::from("digraph {\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            let shape = if i == self.root {
                " shape=doublecircle"
            } else {
                ""
            };
            out.push_str(&format!("  v{i} [label=\"{l}\"{shape}];\n"));
        }
        for e in &self.edges {
            let label = if e.t_deg == 1 {
                format!("t*({})", e.weight.format(registry))
            } else {
                e.weight.format(registry)
            };
            out.push_str(&format!("  v{} -> v{} [label=\"{label}\"];\n", e.from, e.to));
        }
        out.push_str("}\n");
        out
    }
}

struct Run {
    /// Length of the maximal strictly-descending run.
    k: usize,
    /// Whether the separation before this run is an ascent (else flat).
    asc_before: bool,
}

/// Split the path into maximal runs of consecutive unit descents; the
/// separations between runs are flat or ascending steps.
fn descending_runs(m: &MotzkinPath) -> Vec<Run> {
    let e = m.entries();
    let r = e.len();
    let mut runs = Vec::new();
    let mut start = 0usize;
    while start < r {
        let mut end = start;
        while end + 1 < r && e[end + 1] == e[end] - 1 {
            end += 1;
        }
        let asc_before = start > 0 && e[start] == e[start - 1] + 1;
        runs.push(Run {
            k: end - start + 1,
            asc_before,
        });
        start = end + 1;
    }
    runs
}

/// Build the rooted tree `Γ_m` with the given skeleton weights
/// (`weights[i-1]` is the weight of the descent whose upper endpoint sits at
/// canonical position `i`).
///
/// Each maximal descending run of length `k` contributes a ladder piece with
/// pendants at its interior levels plus `k(k-1)/2` one-way descending
/// shortcuts; consecutive pieces share two vertices, with the earlier piece's
/// top vertex becoming a pendant at a flat separation and staying on the
/// spine at an ascent.
pub fn build_gamma(m: &MotzkinPath, weights: &[ZPoly]) -> Result<WeightedDigraph> {
    let r = m.rank();
    if weights.len() != 2 * r + 1 {
        return Err(Error::Invalid(format!(
            "expected {} skeleton weights, got {}",
            2 * r + 1,
            weights.len()
        )));
    }
    struct VInfo {
        down: Option<usize>,
        pendant_partner: Option<usize>,
    }
    let mut v: Vec<VInfo> = Vec::with_capacity(2 * r + 2);
    let mut pieces: Vec<(usize, usize)> = Vec::new(); // (k, position of local vertex 1)
    let mut prev_top = 0usize;
    let mut prev_under = 0usize;
    for (idx, run) in descending_runs(m).iter().enumerate() {
        let s1;
        if idx == 0 {
            v.push(VInfo {
                down: None,
                pendant_partner: None,
            });
            v.push(VInfo {
                down: Some(0),
                pendant_partner: None,
            });
            s1 = 1;
        } else if run.asc_before {
            // The previous top joins the spine; its edge stays vertical.
            s1 = prev_top;
        } else {
            // Flat separation: the previous top becomes a pendant of the
            // vertex below it.
            v[prev_top].pendant_partner = Some(prev_under);
            s1 = prev_under;
        }
        pieces.push((run.k, s1));
        let mut prev_spine = s1;
        for _level in 2..=run.k {
            let s = v.len();
            v.push(VInfo {
                down: Some(prev_spine),
                pendant_partner: None,
            });
            v.push(VInfo {
                down: Some(s),
                pendant_partner: Some(s),
            });
            prev_spine = s;
        }
        let under = v.len();
        v.push(VInfo {
            down: Some(prev_spine),
            pendant_partner: None,
        });
        let top = v.len();
        v.push(VInfo {
            down: Some(under),
            pendant_partner: None,
        });
        prev_top = top;
        prev_under = under;
    }
    debug_assert_eq!(v.len(), 2 * r + 2);

    // Labels: integers in position order for spine vertices, primes for
    // pendants (carrying their attachment's number).
    let mut labels: Vec<VertexLabel> = Vec::with_capacity(v.len());
    let mut next = 0u32;
    for info in &v {
        match info.pendant_partner {
            Some(p) => {
                let VertexLabel::Num(k) = labels[p] else {
                    return Err(Error::DecompositionMismatch(
                        "pendant attached to a non-spine vertex".into(),
                    ));
                };
                labels.push(VertexLabel::Primed(k));
            }
            None => {
                labels.push(VertexLabel::Num(next));
                next += 1;
            }
        }
    }

    // Skeleton descents (weight index = canonical position of the upper
    // endpoint) and their unit ascents.
    let mut edges = Vec::with_capacity(3 * (2 * r + 1));
    for (pos, info) in v.iter().enumerate().skip(1) {
        let tgt = info.down.expect("every non-root vertex has a descent");
        edges.push(Edge {
            from: pos,
            to: tgt,
            t_deg: 1,
            weight: weights[pos - 1].clone(),
        });
        edges.push(Edge {
            from: tgt,
            to: pos,
            t_deg: 0,
            weight: ZPoly::one(),
        });
    }
    let mut g = WeightedDigraph {
        labels,
        edges,
        root: 0,
    };

    // One-way descending shortcuts inside each run piece.
    for (k, s1) in pieces {
        if k < 2 {
            continue;
        }
        let VertexLabel::Num(base) = g.labels[s1] else {
            return Err(Error::DecompositionMismatch(
                "piece base vertex is not on the spine".into(),
            ));
        };
        for a in 3..=k + 1 {
            for b in 1..=a - 2 {
                let ua = base + a as u32 - 1;
                let ub = base + b as u32 - 1;
                let w = extra_weight(&g, ua, ub)?;
                let from = g
                    .position_of(VertexLabel::Num(ua))
                    .expect("spine label exists");
                let to = g
                    .position_of(VertexLabel::Num(ub))
                    .expect("spine label exists");
                g.edges.push(Edge {
                    from,
                    to,
                    t_deg: 1,
                    weight: w,
                });
            }
        }
    }
    Ok(g)
}

/// Weight of the descending shortcut from spine label `a` to spine label `b`
/// (`a > b`): the product of the spine descent weights between them divided
/// by the pendant weights at the interior levels,
///
/// ```text
/// y_{a,b} = Π_{b ≤ i < a} w(i+1 → i)  /  Π_{b < i < a} w(i' → i).
/// ```
///
/// These weights intertwine: `y_{a,b} y_{a',b'} = y_{a,b'} y_{a',b}`.
pub fn extra_weight(g: &WeightedDigraph, a: u32, b: u32) -> Result<ZPoly> {
    if a <= b {
        return Err(Error::Invalid("shortcut weight needs a > b".into()));
    }
    let mut num = ZPoly::one();
    let mut den = ZPoly::one();
    for i in b..a {
        num = num.mul(&g.down_edge_weight(VertexLabel::Num(i + 1), VertexLabel::Num(i))?);
        if i > b {
            den = den.mul(&g.down_edge_weight(VertexLabel::Primed(i), VertexLabel::Num(i))?);
        }
    }
    num.exact_div(&den)
}

// ---------------------------------------------------------------------------
// Transfer matrices and resolvents
// ---------------------------------------------------------------------------

/// The transfer matrix of a weighted digraph split by `t`-degree:
/// `T = T₀ + t T₁` with `(T_k)_{i,j}` the total weight of degree-`k` edges
/// `j → i`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferMatrix {
    /// Degree-zero part (ascents).
    pub t0: Matrix<ZPoly>,
    /// Degree-one part (descents).
    pub t1: Matrix<ZPoly>,
}

impl TransferMatrix {
    /// Read the transfer matrix off a graph.
    pub fn from_graph(g: &WeightedDigraph) -> Self {
        let n = g.vertex_count();
        let mut t0: Matrix<ZPoly> = Matrix::zeros(n, n);
        let mut t1: Matrix<ZPoly> = Matrix::zeros(n, n);
        for e in &g.edges {
            let tgt = if e.t_deg == 0 { &mut t0 } else { &mut t1 };
            tgt[(e.to, e.from)] = tgt[(e.to, e.from)].add(&e.weight);
        }
        Self { t0, t1 }
    }

    /// Assemble from explicit parts.
    pub fn from_parts(t0: Matrix<ZPoly>, t1: Matrix<ZPoly>) -> Self {
        assert_eq!(t0.rows(), t0.cols());
        assert_eq!(t1.rows(), t1.cols());
        assert_eq!(t0.rows(), t1.rows());
        Self { t0, t1 }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.t0.rows()
    }

    /// Series coefficients of `((I - T₀ - t T₁)^{-1})_{i,j}` up to `t^order`.
    ///
    /// Requires `T₀` strictly lower triangular in the canonical vertex order
    /// (so that walks of bounded descent count are finite), otherwise
    /// [`Error::NotNilpotent`].
    pub fn resolvent(&self, i: usize, j: usize, order: usize) -> Result<ZSeries> {
        if !self.t0.is_strictly_lower() {
            return Err(Error::NotNilpotent);
        }
        let n = self.dim();
        let mut e = vec![ZPoly::zero(); n];
        e[j] = ZPoly::one();
        let mut x = Matrix::solve_unit_lower(&self.t0, &e);
        let mut coeffs = vec![x[i].clone()];
        for _ in 0..order {
            let v = self.t1.mul_vec(&x);
            x = Matrix::solve_unit_lower(&self.t0, &v);
            coeffs.push(x[i].clone());
        }
        Ok(TSeries::from_coeffs(coeffs))
    }

    /// All resolvent coefficient matrices `M_0 … M_order` with
    /// `(I - T₀ - t T₁)^{-1} = Σ_k M_k t^k`.
    pub fn resolvent_matrix(&self, order: usize) -> Result<Vec<Matrix<ZPoly>>> {
        if !self.t0.is_strictly_lower() {
            return Err(Error::NotNilpotent);
        }
        let n = self.dim();
        let mut out = vec![Matrix::zeros(n, n); order + 1];
        for j in 0..n {
            let mut e = vec![ZPoly::zero(); n];
            e[j] = ZPoly::one();
            let mut x = Matrix::solve_unit_lower(&self.t0, &e);
            for (k, m) in out.iter_mut().enumerate() {
                if k > 0 {
                    let v = self.t1.mul_vec(&x);
                    x = Matrix::solve_unit_lower(&self.t0, &v);
                }
                for i in 0..n {
                    m[(i, j)] = x[i].clone();
                }
            }
        }
        Ok(out)
    }
}

/// Coefficients of a polynomial in `t` (viewed as one of the registry
/// variables): entry `k` collects the terms with `t`-exponent `k`, with `t`
/// divided out.  Fails on negative `t`-exponents.
pub fn t_coefficients(p: &ZPoly, t: VarId) -> Result<Vec<ZPoly>> {
    let mut buckets: Vec<ZPoly> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exp(t);
        if e < 0 {
            return Err(Error::Invalid("negative power of the series parameter".into()));
        }
        let e = e as usize;
        if buckets.len() <= e {
            buckets.resize(e + 1, ZPoly::zero());
        }
        let reduced = m.div(&crate::laurent::Monomial::var(t, e as i32));
        buckets[e] = buckets[e].add(&ZPoly::term(reduced, c.clone()));
    }
    if buckets.is_empty() {
        buckets.push(ZPoly::zero());
    }
    Ok(buckets)
}

/// Determinant `det(I - T(-t))` of a transfer matrix with the sign of the
/// descent weights flipped, as a polynomial in the variable `t`; returns its
/// `t`-coefficients.  For the flat-path tree these are exactly the
/// hard-particle partition functions `Z_0 … Z_{r+1}` (and zero beyond).
pub fn signed_transfer_det(tm: &TransferMatrix, t: VarId) -> Result<Vec<ZPoly>> {
    let n = tm.dim();
    let tp = ZPoly::var(t);
    let m = Matrix::from_fn(n, n, |i, j| {
        let mut e = if i == j { ZPoly::one() } else { ZPoly::zero() };
        e = e.sub(&tm.t0[(i, j)]);
        e = e.add(&tp.mul(&tm.t1[(i, j)]));
        e
    });
    t_coefficients(&m.det_expansion(), t)
}

// ---------------------------------------------------------------------------
// Continued fractions
// ---------------------------------------------------------------------------

/// One level of a finite continued fraction
/// `L = 1 / (1 - t·Σ constants - t·descend·L_next)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CfLevel {
    /// Weights summed in the level's linear term.
    pub constants: Vec<ZPoly>,
    /// Weight multiplying the next level (`None` on the last level).
    pub descend: Option<ZPoly>,
}

/// A finite continued fraction with an optional affine head:
/// the value is `1 + t·head·L_1` when a head is present, else `L_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuedFraction {
    /// Optional affine head weight.
    pub head: Option<ZPoly>,
    /// Levels from outermost to innermost.
    pub levels: Vec<CfLevel>,
}

/// The ladder continued fraction of the flat-path tree:
/// `1/(1 - t y₁/(1 - t y₂/(1 - t y₃ - t y₄/(… /(1 - t y_{2r+1})))))`.
pub fn cf_ladder(r: usize, weights: &[ZPoly]) -> ContinuedFraction {
    assert!(weights.len() >= 2 * r + 1);
    if r == 0 {
        return ContinuedFraction {
            head: None,
            levels: vec![CfLevel {
                constants: vec![weights[0].clone()],
                descend: None,
            }],
        };
    }
    let mut levels = vec![
        CfLevel {
            constants: vec![],
            descend: Some(weights[0].clone()),
        },
        CfLevel {
            constants: vec![],
            descend: Some(weights[1].clone()),
        },
    ];
    for j in 3..=r + 1 {
        levels.push(CfLevel {
            constants: vec![weights[2 * j - 4].clone()],
            descend: Some(weights[2 * j - 3].clone()),
        });
    }
    levels.push(CfLevel {
        constants: vec![weights[2 * r].clone()],
        descend: None,
    });
    ContinuedFraction { head: None, levels }
}

/// The compact continued fraction with one `t` per level:
/// `1 + t y₁/(1 - t y₁ - t y₂/(1 - t y₃ - t y₄/(…/(1 - t y_{2r+1}))))`.
pub fn cf_compact(r: usize, weights: &[ZPoly]) -> ContinuedFraction {
    assert!(weights.len() >= 2 * r + 1);
    let mut levels = Vec::with_capacity(r + 1);
    for j in 1..=r {
        levels.push(CfLevel {
            constants: vec![weights[2 * j - 2].clone()],
            descend: Some(weights[2 * j - 1].clone()),
        });
    }
    levels.push(CfLevel {
        constants: vec![weights[2 * r].clone()],
        descend: None,
    });
    ContinuedFraction {
        head: Some(weights[0].clone()),
        levels,
    }
}

/// Evaluate a continued fraction as a truncated series in `t`.
pub fn eval_cf(cf: &ContinuedFraction, order: usize) -> Result<ZSeries> {
    if cf.levels.is_empty() {
        let mut s = TSeries::one(order);
        if let Some(h) = &cf.head {
            s = s.add(&TSeries::one(order).mul_poly(h).shift(1));
        }
        return Ok(s);
    }
    if cf.levels.last().map(|l| l.descend.is_some()) == Some(true) {
        return Err(Error::Invalid(
            "last continued-fraction level cannot descend further".into(),
        ));
    }
    let mut inner: Option<ZSeries> = None;
    for level in cf.levels.iter().rev() {
        let mut denom_sub = ZPoly::zero();
        for c in &level.constants {
            denom_sub = denom_sub.add(c);
        }
        // 1 - t·Σc - t·d·inner
        let mut den = TSeries::one(order).sub(&TSeries::one(order).mul_poly(&denom_sub).shift(1));
        if let Some(d) = &level.descend {
            let prev = inner.take().expect("descend implies an inner level");
            den = den.sub(&prev.mul_poly(d).shift(1));
        }
        inner = Some(den.inverse()?);
    }
    let l1 = inner.expect("at least one level");
    match &cf.head {
        Some(h) => Ok(TSeries::one(order).add(&l1.mul_poly(h).shift(1))),
        None => Ok(l1),
    }
}

/// First rearrangement move: `1/(1 - t a · L) = 1 + t a / (1 - t a - …)`,
/// turning a headless fraction whose first level is a bare descent into a
/// headed one, with the descent weight joining the next level's constants.
pub fn rearrange_r1(cf: &ContinuedFraction) -> Result<ContinuedFraction> {
    if cf.head.is_some() {
        return Err(Error::CaseMismatch("fraction already has a head".into()));
    }
    let Some(first) = cf.levels.first() else {
        return Err(Error::CaseMismatch("no levels to rearrange".into()));
    };
    if !first.constants.is_empty() || first.descend.is_none() || cf.levels.len() < 2 {
        return Err(Error::CaseMismatch(
            "first level must be a bare descent onto a deeper level".into(),
        ));
    }
    let a = first.descend.clone().expect("checked above");
    let mut levels = cf.levels[1..].to_vec();
    levels[0].constants.push(a.clone());
    Ok(ContinuedFraction {
        head: Some(a),
        levels,
    })
}

/// Second rearrangement move, applied at `idx` when level `idx+1` is last:
///
/// ```text
/// t a + t b/(1 - t c)  =  t a' / (1 - t b' / (1 - t c'))
/// with a' = a + b,  b' = b c / (a+b),  c' = a c / (a+b),
/// ```
///
/// replacing two levels by three.  The divisions must be exact in the
/// Laurent ring, otherwise [`Error::NonExactWeight`].
pub fn rearrange_r2(cf: &ContinuedFraction, idx: usize) -> Result<ContinuedFraction> {
    if idx + 2 != cf.levels.len() {
        return Err(Error::CaseMismatch(
            "rearrangement applies at the second-to-last level".into(),
        ));
    }
    let lvl = &cf.levels[idx];
    let last = &cf.levels[idx + 1];
    if lvl.constants.is_empty() || lvl.descend.is_none() || last.descend.is_some() {
        return Err(Error::CaseMismatch(
            "need constants and a descent onto a terminal level".into(),
        ));
    }
    let mut a = ZPoly::zero();
    for c in &lvl.constants {
        a = a.add(c);
    }
    let b = lvl.descend.clone().expect("checked above");
    let mut c = ZPoly::zero();
    for w in &last.constants {
        c = c.add(w);
    }
    let s = a.add(&b);
    let b2 = b
        .mul(&c)
        .exact_div(&s)
        .map_err(|_| Error::NonExactWeight("b·c is not divisible by a+b".into()))?;
    let c2 = a
        .mul(&c)
        .exact_div(&s)
        .map_err(|_| Error::NonExactWeight("a·c is not divisible by a+b".into()))?;
    let mut levels = cf.levels[..idx].to_vec();
    levels.push(CfLevel {
        constants: vec![],
        descend: Some(s),
    });
    levels.push(CfLevel {
        constants: vec![],
        descend: Some(b2),
    });
    levels.push(CfLevel {
        constants: vec![c2],
        descend: None,
    });
    Ok(ContinuedFraction {
        head: cf.head.clone(),
        levels,
    })
}

// ---------------------------------------------------------------------------
// Weight mutation
// ---------------------------------------------------------------------------

/// Transform the weight vector under the path mutation `m → m + ε_α`.
///
/// Requires `m_{α-1} = m_α` (vacuous at `α = 1`) and `m_α ≤ m_{α+1}`
/// (vacuous at `α = r`).  With `s = y_{2α-1} + y_{2α}`:
///
/// ```text
/// y'_{2α-1} = s,
/// y'_{2α}   = y_{2α} y_{2α+1} / s,
/// y'_{2α+1} = y_{2α-1} y_{2α+1} / s,
/// y'_{2α+2} = y_{2α+2} y_{2α-1} / s   (only when m_α = m_{α+1} and α < r),
/// ```
///
/// all other weights unchanged.  Results are exact fractions (the divisions
/// need not stay Laurent).
pub fn mutate_weights(
    m: &MotzkinPath,
    alpha: usize,
    weights: &[ZPoly],
) -> Result<Vec<ZFrac>> {
    let r = m.rank();
    if alpha == 0 || alpha > r {
        return Err(Error::Invalid(format!("mutation point {alpha} out of range")));
    }
    if weights.len() != 2 * r + 1 {
        return Err(Error::Invalid("weight vector has the wrong length".into()));
    }
    if alpha > 1 && m.get(alpha - 1) != m.get(alpha) {
        return Err(Error::CaseMismatch(format!(
            "mutation at {alpha} needs m_{} = m_{}",
            alpha - 1,
            alpha
        )));
    }
    let extend_last = alpha < r && m.get(alpha) == m.get(alpha + 1);
    if alpha < r && m.get(alpha) > m.get(alpha + 1) {
        return Err(Error::CaseMismatch(format!(
            "mutation at {alpha} needs m_{} ≤ m_{}",
            alpha,
            alpha + 1
        )));
    }
    debug_assert!(m.mutated(alpha, 1).is_ok(), "case conditions imply validity");
    let w = |i: usize| Frac::from_poly(weights[i - 1].clone()); // 1-based
    let s = w(2 * alpha - 1).add(&w(2 * alpha));
    let mut out: Vec<ZFrac> = weights
        .iter()
        .map(|p| Frac::from_poly(p.clone()))
        .collect();
    out[2 * alpha - 2] = s.clone();
    out[2 * alpha - 1] = w(2 * alpha).mul(&w(2 * alpha + 1)).div(&s)?;
    out[2 * alpha] = w(2 * alpha - 1).mul(&w(2 * alpha + 1)).div(&s)?;
    if extend_last {
        out[2 * alpha + 1] = w(2 * alpha + 2).mul(&w(2 * alpha - 1)).div(&s)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Determinants of resolvent windows
// ---------------------------------------------------------------------------

/// The `α × α` determinant of shifted resolvent coefficients of `Γ_m`:
/// `det( Z_{0,0}(n + i + j - α - 1) )_{1≤i,j≤α}` where `Z_{0,0}(k)` is the
/// `t^k` coefficient of the root resolvent.  Multiplied by `R_{1,m_1}^α`
/// this equals `R_{α,n+m_1}`.  Requires `n ≥ α - 1`.
pub fn lgv_determinant(ctx: &mut SeedContext, alpha: usize, n: i64) -> Result<ZPoly> {
    if n < alpha as i64 - 1 {
        return Err(Error::Invalid(format!(
            "window determinant needs n ≥ α-1 (got α={alpha}, n={n})"
        )));
    }
    let weights = ctx.weights()?;
    let g = build_gamma(&ctx.path().clone(), &weights)?;
    let tm = TransferMatrix::from_graph(&g);
    let max_idx = (n + alpha as i64 - 1) as usize;
    let z = tm.resolvent(g.root, g.root, max_idx)?;
    let a = alpha as i64;
    let mat = Matrix::from_fn(alpha, alpha, |i, j| {
        let idx = n + (i as i64 + 1) + (j as i64 + 1) - a - 1;
        z.coeff(idx as usize).clone()
    });
    det_bareiss(&mat)
}

// ---------------------------------------------------------------------------
// Path enumeration
// ---------------------------------------------------------------------------

/// Exhaustively enumerate walks from `from` to `to` using exactly `downs`
/// degree-one steps; returns the number of walks and the sum of their weight
/// products.  This is the defining expansion of the resolvent coefficient.
pub fn enumerate_paths(
    g: &WeightedDigraph,
    from: usize,
    to: usize,
    downs: usize,
) -> (u64, ZPoly) {
    assert!(downs <= 8, "path enumeration limited to few descents");
    assert!(g.vertex_count() <= 24, "path enumeration limited to small graphs");
    let mut by_source: Vec<Vec<&Edge>> = vec![Vec::new(); g.vertex_count()];
    for e in &g.edges {
        by_source[e.from].push(e);
    }
    fn dfs(
        by_source: &[Vec<&Edge>],
        at: usize,
        to: usize,
        left: usize,
        acc: &ZPoly,
        count: &mut u64,
        total: &mut ZPoly,
    ) {
        if at == to && left == 0 {
            *count += 1;
            *total = total.add(acc);
            // Walks may not return with no descents left, so stop here.
            return;
        }
        for e in &by_source[at] {
            if e.t_deg as usize > left {
                continue;
            }
            let next = acc.mul(&e.weight);
            dfs(by_source, e.to, to, left - e.t_deg as usize, &next, count, total);
        }
    }
    let mut count = 0u64;
    let mut total = ZPoly::zero();
    dfs(
        &by_source,
        from,
        to,
        downs,
        &ZPoly::one(),
        &mut count,
        &mut total,
    );
    (count, total)
}

/// A two-dimensional rendering of a flat-path walk: lattice points visited
/// (including the midpoints of horizontal pendant bounces) and the walk's
/// weight.
#[derive(Debug, Clone)]
pub struct LatticePath {
    /// Visited lattice points in order, starting at `(start_x, 0)`.
    pub points: Vec<(i64, i64)>,
    /// Product of step weights.
    pub weight: ZPoly,
}

/// Enumerate the flat-path tree walks as two-dimensional lattice paths from
/// `(start_x, 0)` back to height `0` with exactly `downs` weighted steps.
///
/// Heights `0 … r+2` are the spine levels; steps are NE `(+1,+1)`, SE
/// `(+1,-1)` (weighted), and at heights `2 … r` a horizontal double step
/// `(+2,0)` through a pendant (weighted).  Every path ends at
/// `(start_x + 2·downs, 0)`.
pub fn lattice_paths(r: usize, weights: &[ZPoly], start_x: i64, downs: usize) -> Vec<LatticePath> {
    assert!(weights.len() >= 2 * r + 1);
    // Descent weight by upper height: position of the upper label in the
    // canonical order of the flat-path tree.
    let se_weight = |h: i64| -> ZPoly {
        let h = h as usize;
        if h == 1 {
            weights[0].clone()
        } else if h <= r {
            weights[2 * h - 3].clone() // y_{2h-2}
        } else if h == r + 1 {
            weights[2 * r - 1].clone() // y_{2r}
        } else {
            weights[2 * r].clone() // y_{2r+1}
        }
    };
    let pend_weight = |h: i64| -> ZPoly { weights[2 * h as usize - 2].clone() }; // y_{2h-1}
    let mut out = Vec::new();
    let mut stack: Vec<(i64, i64, usize, Vec<(i64, i64)>, ZPoly)> =
        vec![(start_x, 0, 0, vec![(start_x, 0)], ZPoly::one())];
    while let Some((x, h, used, pts, w)) = stack.pop() {
        if h == 0 && used == downs {
            out.push(LatticePath {
                points: pts,
                weight: w,
            });
            continue;
        }
        if used >= downs && h == 0 {
            continue;
        }
        // NE
        if h + 1 <= (r + 2) as i64 && used < downs {
            let mut p = pts.clone();
            p.push((x + 1, h + 1));
            stack.push((x + 1, h + 1, used, p, w.clone()));
        } else if h + 1 <= (r + 2) as i64 && used == downs {
            // No future descent could bring the walk back down.
        }
        // SE
        if h >= 1 && used < downs {
            let mut p = pts.clone();
            p.push((x + 1, h - 1));
            stack.push((x + 1, h - 1, used + 1, p, w.mul(&se_weight(h))));
        }
        // Horizontal pendant bounce
        if h >= 2 && h <= r as i64 && used < downs {
            let mut p = pts.clone();
            p.push((x + 1, h));
            p.push((x + 2, h));
            stack.push((x + 2, h, used + 1, p, w.mul(&pend_weight(h))));
        }
    }
    out.sort_by(|a, b| a.points.cmp(&b.points));
    out
}

/// Indices of vertex-disjoint pairs (no shared lattice point) between two
/// path families.
pub fn disjoint_pairs(a: &[LatticePath], b: &[LatticePath]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, p) in a.iter().enumerate() {
        let set: std::collections::HashSet<&(i64, i64)> = p.points.iter().collect();
        for (j, q) in b.iter().enumerate() {
            if q.points.iter().all(|pt| !set.contains(pt)) {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsystem::fundamental_domain;

    fn y_weights(n: usize) -> (VarRegistry, Vec<ZPoly>) {
        let mut reg = VarRegistry::new();
        let ys = (1..=n)
            .map(|i| ZPoly::var(reg.intern(&format!("y{i}"))))
            .collect();
        (reg, ys)
    }

    fn labels_of(g: &WeightedDigraph) -> Vec<String> {
        g.labels.iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn flat_path_trees_have_ladder_shape() {
        let (_, y) = y_weights(3);
        let g1 = build_gamma(&MotzkinPath::flat(1), &y).unwrap();
        assert_eq!(labels_of(&g1), vec!["0", "1", "2", "3"]);
        assert_eq!(g1.edges.len(), 6, "three descents and three ascents");

        let (_, y) = y_weights(5);
        let g2 = build_gamma(&MotzkinPath::flat(2), &y).unwrap();
        assert_eq!(labels_of(&g2), vec!["0", "1", "2", "2'", "3", "4"]);
        // Skeleton: descent from position p has weight y_p.
        let w = g2
            .down_edge_weight(VertexLabel::Primed(2), VertexLabel::Num(2))
            .unwrap();
        assert_eq!(w, y[2], "pendant at level 2 carries y3");
        let w = g2
            .down_edge_weight(VertexLabel::Num(3), VertexLabel::Num(2))
            .unwrap();
        assert_eq!(w, y[3], "spine descent 3→2 carries y4");
    }

    #[test]
    fn ascending_path_gives_a_chain_and_descending_adds_shortcuts() {
        let (_, y) = y_weights(5);
        let chain = build_gamma(&MotzkinPath::new(vec![0, 1]).unwrap(), &y).unwrap();
        assert_eq!(labels_of(&chain), vec!["0", "1", "2", "3", "4", "5"]);
        assert_eq!(chain.edges.len(), 10, "pure chain, no shortcuts");

        let ladder = build_gamma(&MotzkinPath::new(vec![1, 0]).unwrap(), &y).unwrap();
        assert_eq!(labels_of(&ladder), vec!["0", "1", "2", "2'", "3", "4"]);
        let extras: Vec<&Edge> = ladder.edges.iter().skip(10).collect();
        assert_eq!(extras.len(), 1);
        let e = extras[0];
        assert_eq!(ladder.labels[e.from], VertexLabel::Num(3));
        assert_eq!(ladder.labels[e.to], VertexLabel::Num(1));
        // y_{3,1} = y2 y4 / y3.
        assert_eq!(
            e.weight,
            y[1].mul(&y[3]).exact_div(&y[2]).unwrap()
        );
    }

    #[test]
    fn large_mixed_path_fixture() {
        // m = (2,1,2,2,2,1,0,0,1): runs (12)(3)(4)(567)(8)(9) with
        // separations asc, flat, flat, flat, asc.
        let m = MotzkinPath::new(vec![2, 1, 2, 2, 2, 1, 0, 0, 1]).unwrap();
        let (_, y) = y_weights(19);
        let g = build_gamma(&m, &y).unwrap();
        assert_eq!(
            labels_of(&g),
            vec![
                "0", "1", "2", "2'", "3", "4", "5", "5'", "6", "6'", "7", "7'", "8", "8'", "9",
                "9'", "10", "11", "12", "13"
            ]
        );
        // Skeleton descents in position order, by (upper, lower) label.
        let skeleton: Vec<(String, String)> = g
            .edges
            .iter()
            .filter(|e| e.t_deg == 1)
            .take(19)
            .map(|e| (g.labels[e.from].to_string(), g.labels[e.to].to_string()))
            .collect();
        let expect: Vec<(String, String)> = [
            ("1", "0"),
            ("2", "1"),
            ("2'", "2"),
            ("3", "2"),
            ("4", "3"),
            ("5", "4"),
            ("5'", "5"),
            ("6", "5"),
            ("6'", "6"),
            ("7", "6"),
            ("7'", "7"),
            ("8", "7"),
            ("8'", "8"),
            ("9", "8"),
            ("9'", "9"),
            ("10", "9"),
            ("11", "10"),
            ("12", "11"),
            ("13", "12"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(skeleton, expect);
        // Shortcut edges and their weights.
        let shortcuts: Vec<(u32, u32, ZPoly)> = g
            .edges
            .iter()
            .skip(2 * 19)
            .map(|e| {
                let VertexLabel::Num(a) = g.labels[e.from] else { panic!() };
                let VertexLabel::Num(b) = g.labels[e.to] else { panic!() };
                (a, b, e.weight.clone())
            })
            .collect();
        let yw = |i: usize| y[i - 1].clone();
        let expect_shortcuts = vec![
            (3u32, 1u32, yw(2).mul(&yw(4)).exact_div(&yw(3)).unwrap()),
            (8, 6, yw(10).mul(&yw(12)).exact_div(&yw(11)).unwrap()),
            (
                9,
                6,
                yw(10)
                    .mul(&yw(12))
                    .mul(&yw(14))
                    .exact_div(&yw(11).mul(&yw(13)))
                    .unwrap(),
            ),
            (9, 7, yw(12).mul(&yw(14)).exact_div(&yw(13)).unwrap()),
        ];
        assert_eq!(shortcuts, expect_shortcuts);
    }

    #[test]
    fn shortcut_weights_intertwine() {
        let m = MotzkinPath::new(vec![2, 1, 2, 2, 2, 1, 0, 0, 1]).unwrap();
        let (_, y) = y_weights(19);
        let g = build_gamma(&m, &y).unwrap();
        // y_{9,7} y_{8,6} = y_{9,6} y_{8,7} (the last one is a bare spine
        // descent, the degenerate case of the formula).
        let lhs = extra_weight(&g, 9, 7)
            .unwrap()
            .mul(&extra_weight(&g, 8, 6).unwrap());
        let rhs = extra_weight(&g, 9, 6)
            .unwrap()
            .mul(&extra_weight(&g, 8, 7).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transfer_matrix_splits_by_degree() {
        let (_, y) = y_weights(3);
        let g = build_gamma(&MotzkinPath::flat(1), &y).unwrap();
        let tm = TransferMatrix::from_graph(&g);
        assert!(tm.t0.is_strictly_lower(), "ascents point up in position order");
        assert_eq!(tm.t1[(0, 1)], y[0]);
        assert_eq!(tm.t1[(1, 2)], y[1]);
        assert_eq!(tm.t1[(2, 3)], y[2]);
        assert_eq!(tm.t0[(1, 0)], ZPoly::one());
    }

    #[test]
    fn resolvent_counts_weighted_descending_walks() {
        let (_, y) = y_weights(5);
        let g = build_gamma(&MotzkinPath::flat(2), &y).unwrap();
        let tm = TransferMatrix::from_graph(&g);
        let z = tm.resolvent(g.root, g.root, 3).unwrap();
        assert!(z.coeff(0).is_one());
        assert_eq!(*z.coeff(1), y[0], "one bounce through the first descent");
        for d in 0..=3usize {
            let (count, total) = enumerate_paths(&g, g.root, g.root, d);
            assert_eq!(total, *z.coeff(d), "walk sum at {d} descents");
            if d > 0 {
                assert!(count > 0);
            }
        }
    }

    #[test]
    fn pendant_root_shifts_the_resolvent() {
        // The root hangs below vertex 1 by a single edge pair, so
        // Z_{0,0} = 1 + t y1 Z_{1,1}.
        let (_, y) = y_weights(5);
        let g = build_gamma(&MotzkinPath::flat(2), &y).unwrap();
        let tm = TransferMatrix::from_graph(&g);
        let z00 = tm.resolvent(0, 0, 5).unwrap();
        let z11 = tm.resolvent(1, 1, 5).unwrap();
        let rhs = TSeries::one(5).add(&z11.mul_poly(&y[0]).shift(1));
        assert_eq!(z00, rhs.truncated(5));
    }

    #[test]
    fn root_resolvent_generates_the_recurrence_row() {
        for r in 1..=2usize {
            for path in fundamental_domain(r) {
                let mut ctx = SeedContext::new(path.clone());
                let weights = ctx.weights().unwrap();
                let g = build_gamma(&path, &weights).unwrap();
                let tm = TransferMatrix::from_graph(&g);
                let z = tm.resolvent(g.root, g.root, 5).unwrap();
                let m1 = path.get(1);
                let head = ctx.compute_r(1, m1).unwrap();
                for n in 0..=5i64 {
                    assert_eq!(
                        head.mul(z.coeff(n as usize)),
                        ctx.compute_r(1, n + m1).unwrap(),
                        "R_{{1,{}}} from walks on the tree of {path}",
                        n + m1
                    );
                }
            }
        }
    }

    #[test]
    fn signed_determinant_lists_partition_functions() {
        for r in 1..=3usize {
            let (mut reg, y) = y_weights(2 * r + 1);
            let t = reg.intern("t");
            let g = build_gamma(&MotzkinPath::flat(r), &y).unwrap();
            let tm = TransferMatrix::from_graph(&g);
            let det = signed_transfer_det(&tm, t).unwrap();
            let z = crate::qsystem::hard_particle_z(r, &y);
            assert!(det.len() <= r + 2, "no terms beyond the packing bound");
            for (m, zm) in z.iter().enumerate() {
                let got = det.get(m).cloned().unwrap_or_else(ZPoly::zero);
                assert_eq!(got, *zm, "t^{m} coefficient at rank {r}");
            }
        }
    }

    #[test]
    fn ladder_fraction_equals_the_root_resolvent() {
        for r in 1..=3usize {
            let (_, y) = y_weights(2 * r + 1);
            let g = build_gamma(&MotzkinPath::flat(r), &y).unwrap();
            let tm = TransferMatrix::from_graph(&g);
            let z = tm.resolvent(g.root, g.root, 6).unwrap();
            let cf = cf_ladder(r, &y);
            assert_eq!(eval_cf(&cf, 6).unwrap(), z, "rank {r}");
        }
    }

    #[test]
    fn first_rearrangement_produces_the_compact_fraction() {
        for r in 1..=3usize {
            let (_, y) = y_weights(2 * r + 1);
            let cf = cf_ladder(r, &y);
            let re = rearrange_r1(&cf).unwrap();
            assert_eq!(re, cf_compact(r, &y), "structural equality at rank {r}");
            assert_eq!(
                eval_cf(&re, 6).unwrap(),
                eval_cf(&cf, 6).unwrap(),
                "value preserved at rank {r}"
            );
        }
    }

    #[test]
    fn second_rearrangement_exact_and_inexact() {
        let mut reg = VarRegistry::new();
        let x = ZPoly::var(reg.intern("x"));
        let z = ZPoly::var(reg.intern("z"));
        // a = x, b = x, c = 2z: divisions are exact, (a',b',c') = (2x, z, z).
        let cf = ContinuedFraction {
            head: None,
            levels: vec![
                CfLevel {
                    constants: vec![x.clone()],
                    descend: Some(x.clone()),
                },
                CfLevel {
                    constants: vec![z.scale(&num_bigint::BigInt::from(2))],
                    descend: None,
                },
            ],
        };
        let re = rearrange_r2(&cf, 0).unwrap();
        assert_eq!(re.levels.len(), 3);
        assert_eq!(re.levels[0].descend, Some(x.scale(&num_bigint::BigInt::from(2))));
        assert_eq!(re.levels[1].descend, Some(z.clone()));
        assert_eq!(re.levels[2].constants, vec![z.clone()]);
        assert_eq!(eval_cf(&re, 8).unwrap(), eval_cf(&cf, 8).unwrap());

        // Generic weights do not divide: a = x, b = z.
        let bad = ContinuedFraction {
            head: None,
            levels: vec![
                CfLevel {
                    constants: vec![x.clone()],
                    descend: Some(z.clone()),
                },
                CfLevel {
                    constants: vec![x.clone()],
                    descend: None,
                },
            ],
        };
        assert!(matches!(
            rearrange_r2(&bad, 0),
            Err(Error::NonExactWeight(_))
        ));
        assert!(matches!(rearrange_r2(&cf, 1), Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn compact_fraction_generates_the_recurrence_row() {
        for r in 1..=2usize {
            let mut ctx = SeedContext::new(MotzkinPath::flat(r));
            let y = ctx.weights().unwrap();
            let cf = cf_compact(r, &y);
            let s = eval_cf(&cf, 6).unwrap();
            let head = ctx.compute_r(1, 0).unwrap();
            for n in 0..=6i64 {
                assert_eq!(
                    head.mul(s.coeff(n as usize)),
                    ctx.compute_r(1, n).unwrap(),
                    "rank {r}, coefficient t^{n}"
                );
            }
        }
    }

    #[test]
    fn weight_mutation_agrees_with_the_mutated_seed() {
        // Raising a seed at any admissible point: the locally transformed
        // weights must match the weights of the raised seed rewritten in the
        // old seed's variables.
        for r in 1..=3usize {
            for path in fundamental_domain(r) {
                let mut ctx = SeedContext::new(path.clone());
                let y = ctx.weights().unwrap();
                for alpha in 1..=r {
                    let Ok(mutated) = mutate_weights(&path, alpha, &y) else {
                        continue;
                    };
                    let raised_path = path.mutated(alpha, 1).unwrap();
                    // Raised-seed variables as values over the old seed, in
                    // the raised registry's interning order.
                    let mut vals = Vec::new();
                    for b in 1..=r {
                        let mb = raised_path.get(b);
                        vals.push(Frac::from_poly(ctx.compute_r(b, mb).unwrap()));
                        vals.push(Frac::from_poly(ctx.compute_r(b, mb + 1).unwrap()));
                    }
                    let mut raised = SeedContext::new(raised_path);
                    let y_raised = raised.weights().unwrap();
                    for (i, w) in y_raised.iter().enumerate() {
                        let expect = substitute_monomial_frac(w, &vals);
                        assert_eq!(
                            mutated[i],
                            expect,
                            "weight {} after raising {path} at {alpha}",
                            i + 1
                        );
                    }
                }
            }
        }
    }

    /// Express a unit monomial in the raised seed's two variables as a
    /// fraction over the original seed.
    fn substitute_monomial_frac(w: &ZPoly, vals: &[ZFrac]) -> ZFrac {
        let (mono, c) = w.as_monomial().expect("weights are monomials");
        assert!(c == &num_bigint::BigInt::from(1));
        let mut acc = Frac::one();
        for (v, e) in mono.iter() {
            acc = acc.mul(&vals[v.0 as usize].powi(e).unwrap());
        }
        acc
    }

    #[test]
    fn window_determinants_reproduce_higher_rows() {
        for path in [MotzkinPath::flat(2), MotzkinPath::new(vec![1, 0]).unwrap()] {
            let mut ctx = SeedContext::new(path.clone());
            let m1 = path.get(1);
            let head = ctx.compute_r(1, m1).unwrap();
            for alpha in 1..=2usize {
                for n in (alpha as i64 - 1)..=3 {
                    let det = lgv_determinant(&mut ctx, alpha, n).unwrap();
                    assert_eq!(
                        det.mul(&head.pow(alpha as u32)),
                        ctx.compute_r(alpha, n + m1).unwrap(),
                        "window determinant α={alpha}, n={n}, path {path}"
                    );
                }
            }
        }
        let mut ctx = SeedContext::new(MotzkinPath::flat(2));
        assert!(lgv_determinant(&mut ctx, 2, 0).is_err(), "window too small");
    }

    #[test]
    fn lattice_paths_match_graph_walks() {
        let r = 2usize;
        let (_, y) = y_weights(5);
        let g = build_gamma(&MotzkinPath::flat(r), &y).unwrap();
        let tm = TransferMatrix::from_graph(&g);
        let z = tm.resolvent(g.root, g.root, 4).unwrap();
        for d in 0..=4usize {
            let paths = lattice_paths(r, &y, 0, d);
            let mut total = ZPoly::zero();
            for p in &paths {
                assert_eq!(*p.points.last().unwrap(), (2 * d as i64, 0));
                total = total.add(&p.weight);
            }
            assert_eq!(total, *z.coeff(d), "lattice walk sum at {d} descents");
        }
    }

    #[test]
    fn vertex_disjoint_pair_fixture() {
        // Rank 2, window α=2, n=3: the two families start at x = 0 (four
        // descents) and x = 2 (two descents); exactly six vertex-disjoint
        // pairs, whose weight sum is the 2×2 window determinant.
        let mut ctx = SeedContext::new(MotzkinPath::flat(2));
        let y = ctx.weights().unwrap();
        let a = lattice_paths(2, &y, 0, 4);
        let b = lattice_paths(2, &y, 2, 2);
        let pairs = disjoint_pairs(&a, &b);
        assert_eq!(pairs.len(), 6, "six non-crossing configurations");
        let mut total = ZPoly::zero();
        for (i, j) in &pairs {
            total = total.add(&a[*i].weight.mul(&b[*j].weight));
        }
        let det = lgv_determinant(&mut ctx, 2, 3).unwrap();
        assert_eq!(total, det, "disjoint pairs sum to the determinant");
        let head = ctx.compute_r(1, 0).unwrap();
        assert_eq!(
            det.mul(&head.pow(2)),
            ctx.compute_r(2, 3).unwrap(),
            "and the determinant gives R_{{2,3}}"
        );
    }

    #[test]
    fn mutation_case_conditions_are_enforced() {
        let (_, y) = y_weights(5);
        // m = (0,1): mutation at 2 needs m_1 = m_2 — mismatch.
        let m = MotzkinPath::new(vec![0, 1]).unwrap();
        assert!(matches!(
            mutate_weights(&m, 2, &y),
            Err(Error::CaseMismatch(_))
        ));
        // m = (1,0): mutation at 1 needs m_1 ≤ m_2 — mismatch.
        let m = MotzkinPath::new(vec![1, 0]).unwrap();
        assert!(matches!(
            mutate_weights(&m, 1, &y),
            Err(Error::CaseMismatch(_))
        ));
        // m = (0,1): mutation at 1 is case (i): y5 untouched.
        let m = MotzkinPath::new(vec![0, 1]).unwrap();
        let out = mutate_weights(&m, 1, &y).unwrap();
        assert_eq!(out[4], Frac::from_poly(y[4].clone()));
        // m = (0,0): mutation at 1 is case (ii): y4 transformed.
        let m = MotzkinPath::flat(2);
        let out2 = mutate_weights(&m, 1, &y).unwrap();
        assert_ne!(out2[3], Frac::from_poly(y[3].clone()));
        // Raising (1,0) at α=2 approaches from a descent — not covered by
        // the forward formulas.
        let m = MotzkinPath::new(vec![1, 0]).unwrap();
        assert!(matches!(
            mutate_weights(&m, 2, &y),
            Err(Error::CaseMismatch(_))
        ));
        // At the right edge only the flat-entry condition remains.
        let m = MotzkinPath::flat(2);
        assert!(mutate_weights(&m, 2, &y).is_ok());
    }

    #[test]
    fn dot_output_is_deterministic_and_labeled() {
        let (reg, y) = y_weights(5);
        let g = build_gamma(&MotzkinPath::flat(2), &y).unwrap();
        let dot = g.to_dot(&reg);
        assert!(dot.contains("v3 [label=\"2'\"]"));
        assert!(dot.contains("v1 -> v0 [label=\"t*(1*y1)\"]"));
        assert!(dot.contains("v0 -> v1 [label=\"1\"]"));
        assert_eq!(dot, g.to_dot(&reg), "stable output");
    }
}
