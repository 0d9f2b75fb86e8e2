//! Compactified path graphs.
//!
//! Merging the canonical vertex pairs of a rooted tree `Γ_m` halves it to a
//! graph on `r+1` vertices ([`compactify`]): each pair's internal descent
//! becomes a loop, pendant-style pairs merge exactly, and runs of spine-spine
//! pairs (the ascending stretches of `m`) contribute signed degree-zero "web"
//! edges correcting for the folded geometry.  The same graph has a direct
//! description off the path ([`build_compact_direct`]): loops `t·y_{2i-1}`,
//! descents `t·y_{2i}`, unit ascents, descending shortcuts for every maximal
//! descending segment and signed webs for every maximal ascending segment.
//! Closed walks at the merged vertex `1` (which absorbs the root and the
//! spine vertex above it) match the tree's closed walks at its label-`1`
//! vertex, and the full root resolvent follows from the pendant shift
//! `Z_{0,0} = 1 + t·y₁·Z_{1,1}` — so walk generating functions can be
//! computed on half the vertices.
//!
//! For the flat seed, the resolvent expands into an explicit positive sum of
//! multinomials over compositions ([`closed_flat_expansion`]), giving every
//! `R_{1,n+1}` without recursion.

use crate::comb::{binomial, multinomial};
use crate::error::{Error, Result};
use crate::graphs::{build_gamma, enumerate_paths, Edge, TransferMatrix, VertexLabel, WeightedDigraph};
use crate::laurent::Monomial;
use crate::qsystem::{MotzkinPath, SeedContext};
use crate::ZPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Result of merging the vertex pairs of a rooted tree: the half-size graph
/// and, per new vertex, the pair of old labels it absorbs.
#[derive(Debug, Clone, PartialEq)]
pub struct Compactified {
    /// The merged graph on `r+1` vertices labeled `1 … r+1`.
    pub graph: WeightedDigraph,
    /// Old labels merged into new vertex `j` (index `j-1`).
    pub merged: Vec<[VertexLabel; 2]>,
}

/// Merge consecutive canonical vertex pairs `(2j-2, 2j-1) → j` of a rooted
/// tree.
///
/// Each pair's internal descent becomes a loop `t·w` at the merged vertex and
/// its internal ascent disappears; edges between pairs keep their degree and
/// weight.  Interior pairs of two spine vertices fold a vertical stretch, and
/// every maximal run of `k` such pairs additionally receives a web of
/// degree-zero edges `p-1+j → p-1+j+2+a` with weight `(-1)^{a+1}`
/// (`0 ≤ j ≤ k-1`, `0 ≤ a ≤ k-1-j`, run at new vertices `p … p+k-1`), which
/// cancels the walks with no counterpart on the unmerged tree.  The resolvent
/// at merged vertex `1` then equals the tree's resolvent at its label-`1`
/// vertex.
pub fn compactify(g: &WeightedDigraph) -> Result<Compactified> {
    let n = g.vertex_count();
    if n % 2 != 0 || n < 2 {
        return Err(Error::DecompositionMismatch(
            "pair merging needs an even number of vertices".into(),
        ));
    }
    let half = n / 2;
    let pair_of = |pos: usize| pos / 2;
    let mut merged = Vec::with_capacity(half);
    for j in 0..half {
        merged.push([g.labels[2 * j], g.labels[2 * j + 1]]);
    }

    // Classify pairs: the first and last pairs and spine-pendant pairs merge
    // flat; interior spine-spine pairs are vertical.
    let mut vertical = vec![false; half];
    for (j, pair) in merged.iter().enumerate() {
        if j == 0 || j == half - 1 {
            continue;
        }
        match pair {
            [VertexLabel::Num(_), VertexLabel::Primed(_)] => {}
            [VertexLabel::Num(_), VertexLabel::Num(_)] => vertical[j] = true,
            _ => {
                return Err(Error::DecompositionMismatch(format!(
                    "unexpected pair ({}, {})",
                    pair[0], pair[1]
                )))
            }
        }
    }

    let labels: Vec<VertexLabel> = (1..=half as u32).map(VertexLabel::Num).collect();
    let mut edges: Vec<Edge> = Vec::new();
    // Loops from the internal descents, in pair order.
    for j in 0..half {
        let mut found = None;
        for e in &g.edges {
            if e.t_deg == 1 && e.from == 2 * j + 1 && e.to == 2 * j {
                found = Some(e.weight.clone());
            }
        }
        let w = found.ok_or_else(|| {
            Error::DecompositionMismatch(format!("pair {} has no internal descent", j + 1))
        })?;
        edges.push(Edge {
            from: j,
            to: j,
            t_deg: 1,
            weight: w,
        });
    }
    // Edges between pairs keep degree and weight.
    for e in &g.edges {
        let (pf, pt) = (pair_of(e.from), pair_of(e.to));
        if pf == pt {
            continue;
        }
        edges.push(Edge {
            from: pf,
            to: pt,
            t_deg: e.t_deg,
            weight: e.weight.clone(),
        });
    }
    // Signed webs over maximal vertical runs.
    let mut j = 1;
    while j < half {
        if !vertical[j] {
            j += 1;
            continue;
        }
        let start = j; // 0-based index of first vertical pair; new label p = start+1
        while j < half && vertical[j] {
            j += 1;
        }
        let k = j - start;
        for off in 0..k {
            for a in 0..k - off {
                let from = start - 1 + off; // new label p-1+off
                let to = from + 2 + a;
                let sign = if a % 2 == 0 { -1 } else { 1 };
                edges.push(Edge {
                    from,
                    to,
                    t_deg: 0,
                    weight: ZPoly::int(sign),
                });
            }
        }
    }

    Ok(Compactified {
        graph: WeightedDigraph {
            labels,
            edges,
            root: 0,
        },
        merged,
    })
}

/// Plain-text merge table, one `new: old ~ old` line per vertex.
pub fn merge_map_text(c: &Compactified) -> String {
    let mut out = String::new();
    for (j, pair) in c.merged.iter().enumerate() {
        out.push_str(&format!("{}: {} ~ {}\n", j + 1, pair[0], pair[1]));
    }
    out
}

/// Maximal runs of consecutive steps of the given direction (`-1` descents,
/// `+1` ascents): returns `(α, i)` pairs, the 1-based start index and the
/// number of entries covered (always ≥ 2).
pub(crate) fn step_runs(entries: &[i64], dir: i64) -> Vec<(usize, usize)> {
    let r = entries.len();
    let mut out = Vec::new();
    let mut s = 0;
    while s + 1 < r {
        if entries[s + 1] - entries[s] == dir {
            let mut e = s + 1;
            while e + 1 < r && entries[e + 1] - entries[e] == dir {
                e += 1;
            }
            out.push((s + 1, e - s + 1));
            s = e;
        } else {
            s += 1;
        }
    }
    out
}

/// Build the compact graph of a path directly: vertices `1 … r+1` with loops
/// `t·y_{2i-1}`, descents `i+1 → i` of weight `t·y_{2i}`, unit ascents, plus
///
/// * for each maximal descending segment of `i ≥ 2` entries starting at `α`:
///   descending shortcuts `α+p → α+q` (`0 < q+1 < p ≤ i`) weighted
///   `t·Π_{j=α+q}^{α+p-1} y_{2j} / Π_{j=α+q+1}^{α+p-1} y_{2j-1}`;
/// * for each maximal ascending segment of `i ≥ 2` entries starting at `α`:
///   web edges `α+q → α+p` (`q+2 ≤ p ≤ i`) with constant weight
///   `(-1)^{p-q-1}` and degree zero.
///
/// This equals [`compactify`] applied to the tree of the same path with the
/// same weights.
pub fn build_compact_direct(m: &MotzkinPath, weights: &[ZPoly]) -> Result<WeightedDigraph> {
    let r = m.rank();
    if weights.len() != 2 * r + 1 {
        return Err(Error::Invalid(format!(
            "expected {} skeleton weights, got {}",
            2 * r + 1,
            weights.len()
        )));
    }
    let y = |i: usize| weights[i - 1].clone(); // 1-based
    let labels: Vec<VertexLabel> = (1..=(r + 1) as u32).map(VertexLabel::Num).collect();
    let mut edges = Vec::new();
    for i in 1..=r + 1 {
        edges.push(Edge {
            from: i - 1,
            to: i - 1,
            t_deg: 1,
            weight: y(2 * i - 1),
        });
    }
    for i in 1..=r {
        edges.push(Edge {
            from: i,
            to: i - 1,
            t_deg: 1,
            weight: y(2 * i),
        });
        edges.push(Edge {
            from: i - 1,
            to: i,
            t_deg: 0,
            weight: ZPoly::one(),
        });
    }
    let entries = m.entries();
    for (alpha, i) in step_runs(entries, -1) {
        for p in 2..=i {
            for q in 0..=p - 2 {
                let mut num = ZPoly::one();
                let mut den = ZPoly::one();
                for j in alpha + q..=alpha + p - 1 {
                    num = num.mul(&y(2 * j));
                    if j > alpha + q {
                        den = den.mul(&y(2 * j - 1));
                    }
                }
                edges.push(Edge {
                    from: alpha + p - 1,
                    to: alpha + q - 1,
                    t_deg: 1,
                    weight: num.exact_div(&den)?,
                });
            }
        }
    }
    for (alpha, i) in step_runs(entries, 1) {
        for q in 0..=i - 2 {
            for p in q + 2..=i {
                let sign = if (p - q - 1) % 2 == 0 { 1 } else { -1 };
                edges.push(Edge {
                    from: alpha + q - 1,
                    to: alpha + p - 1,
                    t_deg: 0,
                    weight: ZPoly::int(sign),
                });
            }
        }
    }
    Ok(WeightedDigraph {
        labels,
        edges,
        root: 0,
    })
}

/// The vertical chain on `2k+2` vertices `0 … 2k+1` (bottom to top): descents
/// `i+1 → i` with weight `y_{i+1}` and unit ascents.  This is the tree shape
/// of a fully ascending path segment, rooted at the bottom.
pub fn build_vertical_chain(k: usize, weights: &[ZPoly]) -> Result<WeightedDigraph> {
    let n = 2 * k + 2;
    if weights.len() != n - 1 {
        return Err(Error::Invalid(format!(
            "a chain on {n} vertices needs {} weights, got {}",
            n - 1,
            weights.len()
        )));
    }
    let labels: Vec<VertexLabel> = (0..n as u32).map(VertexLabel::Num).collect();
    let mut edges = Vec::new();
    for i in 0..n - 1 {
        edges.push(Edge {
            from: i + 1,
            to: i,
            t_deg: 1,
            weight: weights[i].clone(),
        });
        edges.push(Edge {
            from: i,
            to: i + 1,
            t_deg: 0,
            weight: ZPoly::one(),
        });
    }
    Ok(WeightedDigraph {
        labels,
        edges,
        root: 0,
    })
}

/// The merged form of [`build_vertical_chain`]: vertices `2i+1` and `2i+2`
/// collapse to `i+1` (`i = 0 … k-1`), leaving `k+2` vertices `0 … k+1`.
/// Each merged vertex keeps a loop `t·y_{2i+2}`, the surviving descents
/// `j+1 → j` carry `t·y_{2j+1}`, ascents stay unit, and the signed web edges
/// `j → j+2+a` with weight `(-1)^{a+1}` (`0 ≤ j ≤ k-1`, `0 ≤ a ≤ k-1-j`)
/// cancel the walks that the merge would otherwise create.
pub fn build_vertical_chain_compact(k: usize, weights: &[ZPoly]) -> Result<WeightedDigraph> {
    if weights.len() != 2 * k + 1 {
        return Err(Error::Invalid(format!(
            "a merged chain of {k} pairs needs {} weights, got {}",
            2 * k + 1,
            weights.len()
        )));
    }
    let labels: Vec<VertexLabel> = (0..(k + 2) as u32).map(VertexLabel::Num).collect();
    let mut edges = Vec::new();
    for j in 0..=k {
        edges.push(Edge {
            from: j + 1,
            to: j,
            t_deg: 1,
            weight: weights[2 * j].clone(),
        });
        edges.push(Edge {
            from: j,
            to: j + 1,
            t_deg: 0,
            weight: ZPoly::one(),
        });
    }
    for j in 1..=k {
        edges.push(Edge {
            from: j,
            to: j,
            t_deg: 1,
            weight: weights[2 * j - 1].clone(),
        });
    }
    for j in 0..k {
        for a in 0..=k - 1 - j {
            let sign = if a % 2 == 0 { -1 } else { 1 };
            edges.push(Edge {
                from: j,
                to: j + 2 + a,
                t_deg: 0,
                weight: ZPoly::int(sign),
            });
        }
    }
    Ok(WeightedDigraph {
        labels,
        edges,
        root: 0,
    })
}

/// Check that merging a vertical chain preserves its bottom-vertex walk
/// series up to `t^order`, by two independent routes: the resolvent series of
/// both graphs, and direct walk enumeration with a fixed descent count.
pub fn verify_chain_merge(k: usize, weights: &[ZPoly], order: usize) -> Result<bool> {
    let tall = build_vertical_chain(k, weights)?;
    let flat = build_vertical_chain_compact(k, weights)?;
    let za = TransferMatrix::from_graph(&tall).resolvent(0, 0, order)?;
    let zb = TransferMatrix::from_graph(&flat).resolvent(0, 0, order)?;
    if za != zb {
        return Ok(false);
    }
    for d in 0..=order {
        let (_, wa) = enumerate_paths(&tall, 0, 0, d);
        let (_, wb) = enumerate_paths(&flat, 0, 0, d);
        if &wa != za.coeff(d) || &wb != zb.coeff(d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check that the tree of a path and its merged graph generate the same walk
/// series at vertex `1` up to `t^order` (the merged vertex `1` absorbs the
/// tree's root and its label-`1` vertex, so the comparison point on the tree
/// is the vertex labeled `1`).
pub fn verify_resolvent_equality(
    m: &MotzkinPath,
    weights: &[ZPoly],
    order: usize,
) -> Result<bool> {
    let tree = build_gamma(m, weights)?;
    let pos = tree
        .position_of(VertexLabel::Num(1))
        .ok_or_else(|| Error::Invalid("tree has no vertex labeled 1".into()))?;
    let za = TransferMatrix::from_graph(&tree).resolvent(pos, pos, order)?;
    let merged = compactify(&tree)?;
    let zb = TransferMatrix::from_graph(&merged.graph).resolvent(0, 0, order)?;
    Ok(za == zb)
}

/// Run `f` over all weak compositions of `total` into `parts` parts.
fn for_each_composition(total: i64, parts: usize, f: &mut impl FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, left: i64, remaining: usize, f: &mut impl FnMut(&[i64])) {
        if remaining == 1 {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=left {
            buf.push(v);
            rec(buf, left - v, remaining - 1, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(parts);
    rec(&mut buf, total, parts, f);
}

/// The recursion-free expansion of `R_{1,n+1}` over a flat seed: a sum over
/// weak compositions `(p_1, …, p_{2r+1})` of `n`, each contributing
///
/// ```text
/// C(p_1+p_2, p_1) · Π_{ℓ=1}^{r} M(p_{2ℓ}, p_{2ℓ+1}, p_{2ℓ+2})
///   · Π_i R_{i,0}^{p_{2i+2}+p_{2i+1}-p_{2i}-p_{2i-1}}
///   · Π_i R_{i,1}^{p_{2i-1}+p_{2i-2}-p_{2i+1}-p_{2i}}
/// ```
///
/// with `p_0 = 1`, `p_j = 0` beyond `2r+1`, and `M(u,v,w)` the multinomial
/// `(u+v+w-1)! / (u-1)! v! w!` when `u > 0`, else `1` if `v = w = 0` and `0`
/// otherwise.  The sum is manifestly subtraction-free and equals the value
/// produced by the recurrence.
pub fn closed_flat_expansion(ctx: &mut SeedContext, n: i64) -> Result<ZPoly> {
    let r = ctx.rank();
    if !ctx.path().entries().iter().all(|&e| e == 0) {
        return Err(Error::Invalid(
            "the closed expansion applies to the flat seed".into(),
        ));
    }
    if n < 0 {
        return Err(Error::Invalid("expansion needs n ≥ 0".into()));
    }
    let mut total = ZPoly::zero();
    for_each_composition(n, 2 * r + 1, &mut |p1based: &[i64]| {
        // `p[j]` below is `p_j` with the boundary conventions folded in.
        let p = |j: i64| -> i64 {
            if j == 0 {
                1
            } else if j >= 1 && (j as usize) <= 2 * r + 1 {
                p1based[j as usize - 1]
            } else {
                0
            }
        };
        let mut coeff: BigInt = binomial(p(1) + p(2), p(1));
        for l in 1..=r as i64 {
            let (u, v, w) = (p(2 * l), p(2 * l + 1), p(2 * l + 2));
            let m = if u == 0 {
                if v == 0 && w == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                multinomial(u + v + w - 1, &[u - 1, v])
            };
            coeff *= m;
            if coeff.is_zero() {
                break;
            }
        }
        if coeff.is_zero() {
            return;
        }
        let mut mono = Monomial::one();
        for i in 1..=r as i64 {
            let e0 = p(2 * i + 2) + p(2 * i + 1) - p(2 * i) - p(2 * i - 1);
            let e1 = p(2 * i - 1) + p(2 * i - 2) - p(2 * i + 1) - p(2 * i);
            let lo = ctx.seed_var(i as usize, false);
            let hi = ctx.seed_var(i as usize, true);
            mono = mono
                .mul(&Monomial::var(lo, e0 as i32))
                .mul(&Monomial::var(hi, e1 as i32));
        }
        total = total.add(&ZPoly::term(mono, coeff));
    });
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_gamma, TransferMatrix};
    use crate::laurent::VarRegistry;
    use crate::qsystem::fundamental_domain;
    use crate::series::TSeries;

    fn y_weights(n: usize) -> (VarRegistry, Vec<ZPoly>) {
        let mut reg = VarRegistry::new();
        let ys = (1..=n)
            .map(|i| ZPoly::var(reg.intern(&format!("y{i}"))))
            .collect();
        (reg, ys)
    }

    #[test]
    fn flat_tree_merges_to_a_loop_chain() {
        let (_, y) = y_weights(5);
        let g = build_gamma(&MotzkinPath::flat(2), &y).unwrap();
        let c = compactify(&g).unwrap();
        assert_eq!(c.graph.vertex_count(), 3);
        let direct = build_compact_direct(&MotzkinPath::flat(2), &y).unwrap();
        assert_eq!(
            TransferMatrix::from_graph(&c.graph),
            TransferMatrix::from_graph(&direct)
        );
        // Loops carry the odd weights, descents the even ones.
        let tm = TransferMatrix::from_graph(&c.graph);
        assert_eq!(tm.t1[(0, 0)], y[0]);
        assert_eq!(tm.t1[(1, 1)], y[2]);
        assert_eq!(tm.t1[(2, 2)], y[4]);
        assert_eq!(tm.t1[(0, 1)], y[1]);
        assert_eq!(tm.t1[(1, 2)], y[3]);
        assert_eq!(tm.t0[(1, 0)], ZPoly::one());
    }

    #[test]
    fn merge_map_fixture() {
        let m = MotzkinPath::new(vec![2, 1, 2, 2, 2, 1, 0, 0, 1]).unwrap();
        let (_, y) = y_weights(19);
        let g = build_gamma(&m, &y).unwrap();
        let c = compactify(&g).unwrap();
        let pairs: Vec<(String, String)> = c
            .merged
            .iter()
            .map(|p| (p[0].to_string(), p[1].to_string()))
            .collect();
        let expect: Vec<(String, String)> = [
            ("0", "1"),
            ("2", "2'"),
            ("3", "4"),
            ("5", "5'"),
            ("6", "6'"),
            ("7", "7'"),
            ("8", "8'"),
            ("9", "9'"),
            ("10", "11"),
            ("12", "13"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(pairs, expect);
        let text = merge_map_text(&c);
        assert!(text.starts_with("1: 0 ~ 1\n2: 2 ~ 2'\n"));
        assert!(text.ends_with("10: 12 ~ 13\n"));
    }

    #[test]
    fn ascending_web_fixture() {
        // m = (0,1,2): one ascending stretch, web edges 1→3 (-1), 1→4 (+1),
        // 2→4 (-1).
        let m = MotzkinPath::new(vec![0, 1, 2]).unwrap();
        let (_, y) = y_weights(7);
        let g = build_gamma(&m, &y).unwrap();
        let c = compactify(&g).unwrap();
        let webs: Vec<(u32, u32, ZPoly)> = c
            .graph
            .edges
            .iter()
            .filter(|e| e.t_deg == 0 && e.to > e.from + 1)
            .map(|e| {
                let VertexLabel::Num(a) = c.graph.labels[e.from] else { panic!() };
                let VertexLabel::Num(b) = c.graph.labels[e.to] else { panic!() };
                (a, b, e.weight.clone())
            })
            .collect();
        let expect = vec![
            (1u32, 3u32, ZPoly::int(-1)),
            (1, 4, ZPoly::int(1)),
            (2, 4, ZPoly::int(-1)),
        ];
        assert_eq!(webs, expect);
        let direct = build_compact_direct(&m, &y).unwrap();
        assert_eq!(
            TransferMatrix::from_graph(&c.graph),
            TransferMatrix::from_graph(&direct)
        );
    }

    #[test]
    fn merged_graph_matches_direct_construction_everywhere() {
        for r in 1..=3usize {
            let (_, y) = y_weights(2 * r + 1);
            for m in fundamental_domain(r) {
                let g = build_gamma(&m, &y).unwrap();
                let c = compactify(&g).unwrap();
                let direct = build_compact_direct(&m, &y).unwrap();
                assert_eq!(
                    TransferMatrix::from_graph(&c.graph),
                    TransferMatrix::from_graph(&direct),
                    "merged vs direct at {m}"
                );
            }
        }
    }

    #[test]
    fn first_spine_resolvent_survives_the_merge() {
        // The merged vertex 1 absorbs the root and the spine vertex above
        // it, so closed walks at merged vertex 1 match closed walks of the
        // tree at label 1 (position 1), with the root bounce turned into a
        // loop.  This holds for arbitrary symbolic weights.
        for m in [
            MotzkinPath::flat(2),
            MotzkinPath::new(vec![1, 0]).unwrap(),
            MotzkinPath::new(vec![0, 1]).unwrap(),
            MotzkinPath::new(vec![0, 1, 2]).unwrap(),
            MotzkinPath::new(vec![0, 1, 2, 3]).unwrap(),
            MotzkinPath::new(vec![1, 0, 1]).unwrap(),
        ] {
            let (_, y) = y_weights(2 * m.rank() + 1);
            let g = build_gamma(&m, &y).unwrap();
            let c = compactify(&g).unwrap();
            let big = TransferMatrix::from_graph(&g).resolvent(1, 1, 5).unwrap();
            let small = TransferMatrix::from_graph(&c.graph)
                .resolvent(0, 0, 5)
                .unwrap();
            assert_eq!(big, small, "resolvent preserved for {m}");
            // Via the pendant-root shift, the full root resolvent is
            // 1 + t y1 times the merged one.
            let root = TransferMatrix::from_graph(&g)
                .resolvent(g.root, g.root, 5)
                .unwrap();
            let lift = TSeries::one(5).add(&small.mul_poly(&y[0]).shift(1));
            assert_eq!(root, lift.truncated(5), "head restores the root at {m}");
        }
    }

    #[test]
    fn prefix_assembles_the_full_series() {
        // For a seed with m_1 > 0 the series of all R_{1,n} splits into an
        // explicit prefix plus the resolvent of the tree.
        for path in [
            MotzkinPath::new(vec![1, 0]).unwrap(),
            MotzkinPath::new(vec![2, 1]).unwrap(),
        ] {
            let mut ctx = SeedContext::new(path.clone());
            let y = ctx.weights().unwrap();
            let g = build_gamma(&path, &y).unwrap();
            let order = 6usize;
            let m1 = path.get(1) as usize;
            let z = TransferMatrix::from_graph(&g)
                .resolvent(g.root, g.root, order - m1)
                .unwrap();
            let head = ctx.compute_r(1, m1 as i64).unwrap();
            let mut rhs = vec![ZPoly::zero(); order + 1];
            for (i, c) in rhs.iter_mut().enumerate().take(m1) {
                *c = ctx.compute_r(1, i as i64).unwrap();
            }
            for k in 0..=order - m1 {
                rhs[k + m1] = head.mul(z.coeff(k));
            }
            let lhs: Vec<ZPoly> = (0..=order as i64)
                .map(|n| ctx.compute_r(1, n).unwrap())
                .collect();
            assert_eq!(TSeries::from_coeffs(lhs), TSeries::from_coeffs(rhs));
        }
    }

    #[test]
    fn closed_expansion_matches_the_recurrence() {
        for r in 1..=2usize {
            let mut ctx = SeedContext::new(MotzkinPath::flat(r));
            for n in 0..=4i64 {
                let closed = closed_flat_expansion(&mut ctx, n).unwrap();
                let rec = ctx.compute_r(1, n + 1).unwrap();
                assert_eq!(closed, rec, "rank {r}, R_{{1,{}}}", n + 1);
                assert!(closed.is_positive(), "subtraction-free sum");
            }
        }
    }

    #[test]
    fn closed_expansion_needs_a_flat_seed() {
        let mut ctx = SeedContext::new(MotzkinPath::new(vec![1, 0]).unwrap());
        assert!(closed_flat_expansion(&mut ctx, 1).is_err());
    }

    #[test]
    fn chain_merge_preserves_the_bottom_series() {
        // k = 0: both graphs are the bare two-vertex chain.
        let (_, y) = y_weights(1);
        assert!(verify_chain_merge(0, &y, 8).unwrap());
        let (_, y) = y_weights(3);
        assert!(verify_chain_merge(1, &y, 8).unwrap());
        for k in 2..=3 {
            let (_, y) = y_weights(2 * k + 1);
            assert!(verify_chain_merge(k, &y, 6).unwrap(), "merge fails at k={k}");
        }
    }

    #[test]
    fn chain_merge_needs_the_signed_webs() {
        let (_, y) = y_weights(5);
        let tall = build_vertical_chain(2, &y).unwrap();
        let mut flat = build_vertical_chain_compact(2, &y).unwrap();
        flat.edges.retain(|e| !(e.t_deg == 0 && e.to > e.from + 1));
        let za = TransferMatrix::from_graph(&tall).resolvent(0, 0, 4).unwrap();
        let zb = TransferMatrix::from_graph(&flat).resolvent(0, 0, 4).unwrap();
        assert_ne!(za, zb, "stripping the web edges must change the series");
    }

    #[test]
    fn chain_shapes_at_one_merge() {
        let (_, y) = y_weights(3);
        let tall = build_vertical_chain(1, &y).unwrap();
        assert_eq!(tall.vertex_count(), 4);
        assert_eq!(tall.edges.len(), 6);
        let flat = build_vertical_chain_compact(1, &y).unwrap();
        assert_eq!(flat.vertex_count(), 3);
        let webs: Vec<_> = flat
            .edges
            .iter()
            .filter(|e| e.t_deg == 0 && e.to > e.from + 1)
            .collect();
        assert_eq!(webs.len(), 1);
        assert_eq!((webs[0].from, webs[0].to), (0, 2));
        assert_eq!(webs[0].weight, ZPoly::int(-1));
        let loops: Vec<_> = flat.edges.iter().filter(|e| e.from == e.to).collect();
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].weight, y[1]);
    }

    #[test]
    fn tree_and_merged_graph_agree_at_vertex_one() {
        for r in 1..=2 {
            let (_, y) = y_weights(2 * r + 1);
            for m in fundamental_domain(r) {
                assert!(
                    verify_resolvent_equality(&m, &y, 5).unwrap(),
                    "equality fails at {m}"
                );
            }
        }
        let (_, y) = y_weights(7);
        let m = MotzkinPath::new(vec![2, 1, 0]).unwrap();
        assert!(verify_resolvent_equality(&m, &y, 5).unwrap());
    }

    #[test]
    fn merging_rejects_malformed_graphs() {
        // A single vertex with no pair structure.
        let g = WeightedDigraph {
            labels: vec![VertexLabel::Num(0)],
            edges: vec![],
            root: 0,
        };
        assert!(compactify(&g).is_err());
        // Two vertices but no internal descent.
        let g = WeightedDigraph {
            labels: vec![VertexLabel::Num(0), VertexLabel::Num(1)],
            edges: vec![Edge {
                from: 0,
                to: 1,
                t_deg: 0,
                weight: ZPoly::one(),
            }],
            root: 0,
        };
        assert!(matches!(
            compactify(&g),
            Err(Error::DecompositionMismatch(_))
        ));
    }
}
