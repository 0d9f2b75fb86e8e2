//! Named verification suites.
//!
//! Each suite re-derives a family of identities from scratch at a
//! configurable rank and series order and reports one [`CheckOutcome`] per
//! identity.  Suites cover the recurrence layer (`qsys`), the rank-two
//! closed forms (`rank2`), path models and continued fractions (`paths`),
//! merged graphs (`compact`), and the elementary-matrix networks
//! (`totalpos`).  Checks are independent and may run on a small worker pool
//! ([`VerifyConfig::jobs`]); results always come back in catalog order.

use std::collections::{HashMap, VecDeque};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::compact::{
    build_compact_direct, closed_flat_expansion, compactify, verify_chain_merge,
    verify_resolvent_equality,
};
use crate::frac::Frac;
use crate::graphs::{
    build_gamma, cf_compact, cf_ladder, disjoint_pairs, eval_cf, lattice_paths, lgv_determinant,
    mutate_weights, rearrange_r1, signed_transfer_det, TransferMatrix,
};
use crate::laurent::{VarId, VarRegistry};
use crate::qsystem::{
    fundamental_domain, hard_particle_graph, hard_particle_z, independent_set_z, MotzkinPath,
    SeedContext,
};
use crate::rank2::{AffinePair, Rank2};
use crate::totalpos::{
    check_total_positivity, decomposition_matches, factorization, sigma_perm, tau_perm,
    verify_resolvent_theorem,
};
use crate::{ZFrac, ZPoly};

/// A named family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Every suite below.
    All,
    /// Recurrence values, conserved quantities, weights, positivity.
    Qsys,
    /// Rank-two affine closed forms and linearizations.
    Rank2,
    /// Tree graphs, continued fractions, transfer determinants, lattice paths.
    Paths,
    /// Merged graphs and the flat closed expansion.
    Compact,
    /// Elementary-matrix factorizations and network matrices.
    Totalpos,
}

impl Suite {
    /// Parse a suite name as used on the command line.
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "all" => Some(Self::All),
            "qsys" => Some(Self::Qsys),
            "rank2" => Some(Self::Rank2),
            "paths" => Some(Self::Paths),
            "compact" => Some(Self::Compact),
            "totalpos" => Some(Self::Totalpos),
            _ => None,
        }
    }

    /// Canonical name.
    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::Qsys => "qsys",
            Self::Rank2 => "rank2",
            Self::Paths => "paths",
            Self::Compact => "compact",
            Self::Totalpos => "totalpos",
        }
    }
}

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    /// Check name, `suite/what-it-checks`.
    pub name: String,
    /// Whether the identity held everywhere it was tested.
    pub passed: bool,
    /// What was covered on success; what diverged on failure.
    pub detail: String,
}

/// Scope and parallelism for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Largest rank exercised (individual checks clamp further where an
    /// exhaustive sweep would leave desk scale).
    pub rank: usize,
    /// Series truncation order.
    pub order: usize,
    /// Worker threads (1 = run checks sequentially).
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            rank: 3,
            order: 6,
            jobs: 1,
        }
    }
}

type Task = Box<dyn FnOnce() -> std::result::Result<String, String> + Send>;

/// Run one suite (or all of them) and report per-check outcomes in a fixed
/// catalog order.
pub fn run_suite(suite: Suite, cfg: VerifyConfig) -> Vec<CheckOutcome> {
    let rank = cfg.rank.max(1);
    let order = cfg.order;
    let mut tasks: Vec<(String, Task)> = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Qsys) {
        qsys_checks(&mut tasks, rank, order);
    }
    if want(Suite::Rank2) {
        rank2_checks(&mut tasks, rank, order);
    }
    if want(Suite::Paths) {
        paths_checks(&mut tasks, rank, order);
    }
    if want(Suite::Compact) {
        compact_checks(&mut tasks, rank, order);
    }
    if want(Suite::Totalpos) {
        totalpos_checks(&mut tasks, rank, order);
    }
    run_tasks(tasks, cfg.jobs)
}

fn run_tasks(tasks: Vec<(String, Task)>, jobs: usize) -> Vec<CheckOutcome> {
    let n = tasks.len();
    let queue: Mutex<VecDeque<(usize, String, Task)>> = Mutex::new(
        tasks
            .into_iter()
            .enumerate()
            .map(|(i, (name, task))| (i, name, task))
            .collect(),
    );
    let results: Vec<Mutex<Option<CheckOutcome>>> = (0..n).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1).min(n.max(1)) {
            s.spawn(|| loop {
                let item = queue.lock().unwrap().pop_front();
                let Some((idx, name, task)) = item else {
                    break;
                };
                let outcome = match task() {
                    Ok(detail) => CheckOutcome {
                        name,
                        passed: true,
                        detail,
                    },
                    Err(detail) => CheckOutcome {
                        name,
                        passed: false,
                        detail,
                    },
                };
                *results[idx].lock().unwrap() = Some(outcome);
            });
        }
    });
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every task ran"))
        .collect()
}

fn push(tasks: &mut Vec<(String, Task)>, name: &str, task: Task) {
    tasks.push((name.to_string(), task));
}

fn err<T>(e: impl std::fmt::Display) -> std::result::Result<T, String> {
    Err(e.to_string())
}

/// Symbolic weight variables `y1 … yn` in a fresh registry.
fn y_vars(n: usize) -> (VarRegistry, Vec<ZPoly>) {
    let mut reg = VarRegistry::new();
    let ys = (1..=n)
        .map(|i| ZPoly::var(reg.intern(&format!("y{i}"))))
        .collect();
    (reg, ys)
}

fn qsys_checks(tasks: &mut Vec<(String, Task)>, rank: usize, order: usize) {
    let r_dom = rank.min(3);
    push(
        tasks,
        "qsys/window-determinants-match-recurrence",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    for alpha in 1..=r {
                        let ma = m.get(alpha);
                        for n in ma..=ma + 2 {
                            let det = match ctx.det_formula_r(alpha, n) {
                                Ok(v) => v,
                                Err(e) => return err(format!("{m} α={alpha} n={n}: {e}")),
                            };
                            let rec = ctx.compute_r(alpha, n).map_err(|e| e.to_string())?;
                            if det != rec {
                                return err(format!("determinant ≠ recurrence at {m} α={alpha} n={n}"));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(format!("{count} window determinants, rank ≤ {r_dom}"))
        }),
    );
    push(
        tasks,
        "qsys/conserved-quantities-shift-invariant",
        Box::new(move || {
            // Exhaustive over seeds at rank ≤ 2; the flat-seed check below
            // covers rank 3 (its `conserved_c_checked` calls re-verify the
            // window shift there).
            let r_cap = r_dom.min(2);
            let mut count = 0usize;
            for r in 1..=r_cap {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    for p in 0..=r + 1 {
                        ctx.conserved_c_checked(p)
                            .map_err(|e| format!("{m} c_{p}: {e}"))?;
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} conserved quantities, every seed of rank ≤ {r_cap}"))
        }),
    );
    push(
        tasks,
        "qsys/flat-conserved-are-hard-particle-sums",
        Box::new(move || {
            for r in 1..=r_dom {
                let mut ctx = SeedContext::new(MotzkinPath::flat(r));
                let y = ctx.weights().map_err(|e| e.to_string())?;
                let z = hard_particle_z(r, &y);
                for p in 0..=r + 1 {
                    let c = ctx.conserved_c_checked(p).map_err(|e| e.to_string())?;
                    if z[p] != c {
                        return err(format!("Z_{p} ≠ c_{p} at rank {r}"));
                    }
                }
            }
            Ok(format!("c_p = Z_p(y) on flat seeds, rank ≤ {r_dom}"))
        }),
    );
    push(
        tasks,
        "qsys/hard-particle-recursion-vs-brute-force",
        Box::new(move || {
            let r_top = rank.min(5);
            for r in 1..=r_top {
                let (_, y) = y_vars(2 * r + 1);
                let fast = hard_particle_z(r, &y);
                let slow = independent_set_z(&hard_particle_graph(r), &y);
                if fast != slow {
                    return err(format!("partition vectors differ at rank {r}"));
                }
            }
            Ok(format!("exhaustive independent sets up to rank {r_top}"))
        }),
    );
    push(
        tasks,
        "qsys/values-are-positive-laurent",
        Box::new(move || {
            let r_wide = rank.min(4);
            let mut count = 0usize;
            for r in 1..=r_wide {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    for alpha in 1..=r {
                        let ma = m.get(alpha);
                        for n in ma - 2..=ma + order.min(4) as i64 {
                            let v = ctx.compute_r(alpha, n).map_err(|e| e.to_string())?;
                            if !v.is_positive() {
                                return err(format!("negative term in R at {m} α={alpha} n={n}"));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(format!("{count} values positive, rank ≤ {r_wide}"))
        }),
    );
}

fn rank2_checks(tasks: &mut Vec<(String, Task)>, _rank: usize, order: usize) {
    let n_max = order.max(4) as i64;
    push(
        tasks,
        "rank2/closed-forms-match-recursion",
        Box::new(move || {
            let top = n_max.min(5);
            for base in [0, 1] {
                let mut sys = Rank2::new(AffinePair::B1C4, base).map_err(|e| e.to_string())?;
                for n in 0..=top {
                    let closed = sys.closed_form(n).map_err(|e| e.to_string())?;
                    let rec = sys.iterate(2 * n + 2 * base).map_err(|e| e.to_string())?;
                    if closed != rec {
                        return err(format!("closed form diverges at n={n}, seed base {base}"));
                    }
                }
            }
            Ok(format!("(1,4) even subsequence, both seeds, n ≤ {top}"))
        }),
    );
    push(
        tasks,
        "rank2/conserved-quantities-stay-on-orbit",
        Box::new(move || {
            for pair in [AffinePair::B2C2, AffinePair::B1C4] {
                let sys = Rank2::new(pair, 0).map_err(|e| e.to_string())?;
                sys.conserved().map_err(|e| e.to_string())?;
            }
            crate::rank2::orbit_conserved_pair().map_err(|e| e.to_string())?;
            Ok("conserved values and the paired orbit quantity".to_string())
        }),
    );
    push(
        tasks,
        "rank2/linear-series-solves-the-recursion",
        Box::new(move || {
            // (2,2) linearizes the full sequence; (1,4) its even subsequence.
            for pair in [AffinePair::B2C2, AffinePair::B1C4] {
                let mut sys = Rank2::new(pair, 0).map_err(|e| e.to_string())?;
                let series = sys.linear_series(n_max as usize).map_err(|e| e.to_string())?;
                for (k, v) in series.iter().enumerate() {
                    let idx = match pair {
                        AffinePair::B2C2 => k as i64,
                        _ => 2 * k as i64,
                    };
                    let direct = sys.iterate(idx).map_err(|e| e.to_string())?;
                    if v != &direct {
                        return err(format!("{pair:?} series diverges at term {k}"));
                    }
                }
            }
            Ok(format!("two affine pairs, {n_max} terms each"))
        }),
    );
    push(
        tasks,
        "rank2/weight-relations",
        Box::new(move || {
            let sys = Rank2::new(AffinePair::B2C2, 0).map_err(|e| e.to_string())?;
            let [y1, y2, y3] = sys.weights().map_err(|e| e.to_string())?;
            if !y1.mul(&y3).is_one() {
                return err("(2,2): y1*y3 ≠ 1");
            }
            let sys = Rank2::new(AffinePair::B2C2, 0).map_err(|e| e.to_string())?;
            let c = sys.conserved().map_err(|e| e.to_string())?;
            if y1.add(&y2).add(&y3) != c {
                return err("(2,2): y1+y2+y3 ≠ c");
            }
            let sys = Rank2::new(AffinePair::B1C4, 0).map_err(|e| e.to_string())?;
            let [y1, y2, y3] = sys.weights().map_err(|e| e.to_string())?;
            if y1.mul(&y3) != ZPoly::one().add(&y2) {
                return err("(1,4): y1*y3 ≠ 1 + y2");
            }
            Ok("weight products and sums for both cases".to_string())
        }),
    );
}

fn paths_checks(tasks: &mut Vec<(String, Task)>, rank: usize, order: usize) {
    let r_dom = rank.min(3);
    push(
        tasks,
        "paths/root-series-generates-the-values",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    let y = ctx.weights().map_err(|e| e.to_string())?;
                    let g = build_gamma(&m, &y).map_err(|e| e.to_string())?;
                    let z = TransferMatrix::from_graph(&g)
                        .resolvent(0, 0, order)
                        .map_err(|e| e.to_string())?;
                    let m1 = m.get(1);
                    let head = ctx.compute_r(1, m1).map_err(|e| e.to_string())?;
                    for n in 0..=order {
                        let expect = ctx.compute_r(1, n as i64 + m1).map_err(|e| e.to_string())?;
                        if head.mul(z.coeff(n)) != expect {
                            return err(format!("series ≠ values at {m} n={n}"));
                        }
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} coefficients, rank ≤ {r_dom}, order {order}"))
        }),
    );
    push(
        tasks,
        "paths/ladder-fraction-equals-the-root-series",
        Box::new(move || {
            for r in 1..=rank {
                let (_, y) = y_vars(2 * r + 1);
                let g = build_gamma(&MotzkinPath::flat(r), &y).map_err(|e| e.to_string())?;
                let z = TransferMatrix::from_graph(&g)
                    .resolvent(0, 0, order)
                    .map_err(|e| e.to_string())?;
                let cf = eval_cf(&cf_ladder(r, &y), order).map_err(|e| e.to_string())?;
                if z != cf {
                    return err(format!("ladder fraction diverges at rank {r}"));
                }
            }
            Ok(format!("ranks ≤ {rank}, order {order}"))
        }),
    );
    push(
        tasks,
        "paths/rearrangement-preserves-the-fraction",
        Box::new(move || {
            for r in 1..=rank {
                let (_, y) = y_vars(2 * r + 1);
                let ladder = cf_ladder(r, &y);
                let rearranged = rearrange_r1(&ladder).map_err(|e| e.to_string())?;
                if rearranged != cf_compact(r, &y) {
                    return err(format!("rearranged fraction has the wrong shape at rank {r}"));
                }
                let a = eval_cf(&ladder, order).map_err(|e| e.to_string())?;
                let b = eval_cf(&rearranged, order).map_err(|e| e.to_string())?;
                if a != b {
                    return err(format!("rearranged fraction changes value at rank {r}"));
                }
            }
            Ok(format!("ranks ≤ {rank}, order {order}"))
        }),
    );
    push(
        tasks,
        "paths/signed-determinant-lists-partition-functions",
        Box::new(move || {
            let r_top = rank.min(4);
            for r in 1..=r_top {
                let (mut reg, y) = y_vars(2 * r + 1);
                let t = reg.intern("t");
                let g = build_gamma(&MotzkinPath::flat(r), &y).map_err(|e| e.to_string())?;
                let coeffs = signed_transfer_det(&TransferMatrix::from_graph(&g), t)
                    .map_err(|e| e.to_string())?;
                let z = hard_particle_z(r, &y);
                if coeffs != z {
                    return err(format!("det coefficients ≠ partition vector at rank {r}"));
                }
            }
            Ok(format!("tree determinants up to rank {r_top}"))
        }),
    );
    push(
        tasks,
        "paths/weight-mutation-matches-the-raised-seed",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    let y = ctx.weights().map_err(|e| e.to_string())?;
                    for alpha in 1..=r {
                        let Ok(mutated) = mutate_weights(&m, alpha, &y) else {
                            continue;
                        };
                        let raised_path = m.mutated(alpha, 1).map_err(|e| e.to_string())?;
                        let mut vals = Vec::new();
                        for b in 1..=r {
                            let mb = raised_path.get(b);
                            for n in [mb, mb + 1] {
                                let v = ctx.compute_r(b, n).map_err(|e| e.to_string())?;
                                vals.push(Frac::from_poly(v));
                            }
                        }
                        let mut raised = SeedContext::new(raised_path);
                        let y_raised = raised.weights().map_err(|e| e.to_string())?;
                        for (i, w) in y_raised.iter().enumerate() {
                            let expect = monomial_over_values(w, &vals)?;
                            if mutated[i] != expect {
                                return err(format!("weight {} wrong raising {m} at {alpha}", i + 1));
                            }
                            count += 1;
                        }
                    }
                }
            }
            Ok(format!("{count} transformed weights, rank ≤ {r_dom}"))
        }),
    );
    push(
        tasks,
        "paths/disjoint-lattice-pairs-give-the-determinant",
        Box::new(move || {
            let m = MotzkinPath::flat(2);
            let mut ctx = SeedContext::new(m);
            let y = ctx.weights().map_err(|e| e.to_string())?;
            let fam_a = lattice_paths(2, &y, 0, 4);
            let fam_b = lattice_paths(2, &y, 2, 2);
            let pairs = disjoint_pairs(&fam_a, &fam_b);
            if pairs.len() != 6 {
                return err(format!("expected 6 vertex-disjoint pairs, found {}", pairs.len()));
            }
            let mut total = ZPoly::zero();
            for &(i, j) in &pairs {
                total = total.add(&fam_a[i].weight.mul(&fam_b[j].weight));
            }
            let det = lgv_determinant(&mut ctx, 2, 3).map_err(|e| e.to_string())?;
            if total != det {
                return err("pair weights do not sum to the determinant");
            }
            let head = ctx.compute_r(1, 0).map_err(|e| e.to_string())?;
            let expect = ctx.compute_r(2, 3).map_err(|e| e.to_string())?;
            if det.mul(&head.pow(2)) != expect {
                return err("determinant does not reproduce the recurrence value");
            }
            Ok("6 disjoint pairs = determinant = recurrence value".to_string())
        }),
    );
}

/// Express a unit monomial over substituted variable values.
fn monomial_over_values(w: &ZPoly, vals: &[ZFrac]) -> std::result::Result<ZFrac, String> {
    let (mono, c) = w
        .as_monomial()
        .ok_or_else(|| "weight is not a monomial".to_string())?;
    if c != &BigInt::from(1) {
        return Err("weight has a non-unit coefficient".to_string());
    }
    let mut acc: ZFrac = Frac::one();
    for (v, e) in mono.iter() {
        let p = vals[v.0 as usize].powi(e).map_err(|e| e.to_string())?;
        acc = acc.mul(&p);
    }
    Ok(acc)
}

fn compact_checks(tasks: &mut Vec<(String, Task)>, rank: usize, order: usize) {
    let r_dom = rank.min(3);
    push(
        tasks,
        "compact/merge-equals-direct-construction",
        Box::new(move || {
            let r_wide = rank.min(4);
            let mut count = 0usize;
            for r in 1..=r_wide {
                let (_, y) = y_vars(2 * r + 1);
                for m in fundamental_domain(r) {
                    let tree = build_gamma(&m, &y).map_err(|e| e.to_string())?;
                    let merged = compactify(&tree).map_err(|e| e.to_string())?;
                    let direct = build_compact_direct(&m, &y).map_err(|e| e.to_string())?;
                    if TransferMatrix::from_graph(&merged.graph)
                        != TransferMatrix::from_graph(&direct)
                    {
                        return err(format!("merged graph differs from direct at {m}"));
                    }
                    count += 1;
                }
            }
            Ok(format!("{count} paths, rank ≤ {r_wide}, symbolic weights"))
        }),
    );
    push(
        tasks,
        "compact/merge-preserves-the-series",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                let (_, y) = y_vars(2 * r + 1);
                for m in fundamental_domain(r) {
                    if !verify_resolvent_equality(&m, &y, order).map_err(|e| e.to_string())? {
                        return err(format!("series changes under merging at {m}"));
                    }
                    count += 1;
                }
            }
            Ok(format!("{count} paths, order {order}"))
        }),
    );
    push(
        tasks,
        "compact/vertical-chain-merge",
        Box::new(move || {
            let k_top = rank.min(3);
            for k in 0..=k_top {
                let (_, y) = y_vars(2 * k + 1);
                let ord = if k <= 1 { order.max(8) } else { order.min(6) };
                if !verify_chain_merge(k, &y, ord).map_err(|e| e.to_string())? {
                    return err(format!("chain merge changes the series at k={k}"));
                }
            }
            Ok(format!("chains k ≤ {k_top}, double-checked by walk enumeration"))
        }),
    );
    push(
        tasks,
        "compact/flat-closed-expansion",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                let mut ctx = SeedContext::new(MotzkinPath::flat(r));
                for n in 0..=order.min(4) as i64 {
                    let sum = closed_flat_expansion(&mut ctx, n).map_err(|e| e.to_string())?;
                    let rec = ctx.compute_r(1, n + 1).map_err(|e| e.to_string())?;
                    if sum != rec {
                        return err(format!("closed expansion ≠ recurrence at rank {r}, n={n}"));
                    }
                    if !sum.is_positive() {
                        return err(format!("closed expansion not positive at rank {r}, n={n}"));
                    }
                    count += 1;
                }
            }
            Ok(format!("{count} values, rank ≤ {r_dom}"))
        }),
    );
    push(
        tasks,
        "compact/negative-webs-cancel-in-the-series",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    let y = ctx.weights().map_err(|e| e.to_string())?;
                    let g = build_compact_direct(&m, &y).map_err(|e| e.to_string())?;
                    let z = TransferMatrix::from_graph(&g)
                        .resolvent(0, 0, order)
                        .map_err(|e| e.to_string())?;
                    for n in 0..=order {
                        if !z.coeff(n).is_positive() {
                            return err(format!("negative term survives at {m} order {n}"));
                        }
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} coefficients positive despite signed edges"))
        }),
    );
    push(
        tasks,
        "compact/signed-determinant-lists-conserved-quantities",
        Box::new(move || {
            let r_top = rank.min(2);
            let mut count = 0usize;
            for r in 1..=r_top {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    let y = ctx.weights().map_err(|e| e.to_string())?;
                    let g = build_compact_direct(&m, &y).map_err(|e| e.to_string())?;
                    let mut reg = ctx.registry().clone();
                    let t = reg.intern("t");
                    let coeffs = signed_transfer_det(&TransferMatrix::from_graph(&g), t)
                        .map_err(|e| e.to_string())?;
                    for p in 0..=r + 1 {
                        let c = ctx.conserved_c_checked(p).map_err(|e| e.to_string())?;
                        if coeffs[p] != c {
                            return err(format!("det coefficient {p} ≠ c_{p} at {m}"));
                        }
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} coefficients, every seed of rank ≤ {r_top}"))
        }),
    );
}

fn totalpos_checks(tasks: &mut Vec<(String, Task)>, rank: usize, order: usize) {
    let r_dom = rank.min(3);
    push(
        tasks,
        "totalpos/rearranged-sequences-fixture",
        Box::new(move || {
            let m = MotzkinPath::new(vec![2, 1, 2, 2, 2, 1, 0, 0, 1]).map_err(|e| e.to_string())?;
            if sigma_perm(&m) != [8, 9, 7, 6, 5, 4, 2, 3, 1] {
                return err("σ differs from the rank-9 fixture");
            }
            if tau_perm(&m) != [9, 8, 5, 6, 7, 4, 3, 1, 2] {
                return err("τ differs from the rank-9 fixture");
            }
            for r in 1..=rank {
                let rev: Vec<usize> = (1..=r).rev().collect();
                let flat = MotzkinPath::flat(r);
                if sigma_perm(&flat) != rev || tau_perm(&flat) != rev {
                    return err(format!("flat path sequences differ at rank {r}"));
                }
            }
            Ok("rank-9 fixture and flat reversals".to_string())
        }),
    );
    push(
        tasks,
        "totalpos/factor-split-matches-the-graph",
        Box::new(move || {
            let r_wide = rank.min(4);
            let mut count = 0usize;
            for r in 1..=r_wide {
                let (_, y) = y_vars(2 * r + 1);
                for m in fundamental_domain(r) {
                    let tm = TransferMatrix::from_graph(
                        &build_compact_direct(&m, &y).map_err(|e| e.to_string())?,
                    );
                    let fact = factorization(&m, &y).map_err(|e| e.to_string())?;
                    decomposition_matches(&fact, &tm).map_err(|e| format!("{m}: {e}"))?;
                    count += 1;
                }
            }
            Ok(format!("{count} paths, rank ≤ {r_wide}, symbolic weights"))
        }),
    );
    push(
        tasks,
        "totalpos/network-resolvent-theorem",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                let (_, y) = y_vars(2 * r + 1);
                for m in fundamental_domain(r) {
                    if !verify_resolvent_theorem(&m, &y, order).map_err(|e| e.to_string())? {
                        return err(format!("network theorem fails at {m}"));
                    }
                    count += 1;
                }
            }
            Ok(format!("{count} paths, order {order}"))
        }),
    );
    push(
        tasks,
        "totalpos/conjugate-network-corner",
        Box::new(move || {
            for r in 1..=r_dom {
                let (_, y) = y_vars(2 * r + 1);
                for m in fundamental_domain(r) {
                    let fact = factorization(&m, &y).map_err(|e| e.to_string())?;
                    let pp = fact.conjugate_matrix();
                    let conj = fact
                        .f
                        .invert_unit_lower()
                        .mul(&fact.network_matrix())
                        .mul(&fact.f);
                    if pp != conj {
                        return err(format!("conjugacy fails at {m}"));
                    }
                    let mut u: Vec<ZPoly> = vec![ZPoly::zero(); r + 1];
                    u[0] = ZPoly::one();
                    let mut ok = true;
                    for n in 0..=order {
                        if &u[0] != fact.network_resolvent(order).coeff(n) {
                            ok = false;
                            break;
                        }
                        u = pp.mul_vec(&u);
                    }
                    if !ok {
                        return err(format!("conjugate corner series differs at {m}"));
                    }
                }
            }
            Ok(format!("conjugacy and corner series, rank ≤ {r_dom}"))
        }),
    );
    push(
        tasks,
        "totalpos/minors-nonnegative-at-positive-points",
        Box::new(move || {
            let mut count = 0usize;
            for r in 1..=r_dom {
                for m in fundamental_domain(r) {
                    let mut ctx = SeedContext::new(m.clone());
                    let y = ctx.weights().map_err(|e| e.to_string())?;
                    let fact = factorization(&m, &y).map_err(|e| e.to_string())?;
                    let p = fact.network_matrix();
                    for scale in [1u32, 2] {
                        let point: HashMap<VarId, BigRational> = (0..ctx.registry().len() as u32)
                            .map(|v| {
                                let val = BigRational::new(
                                    BigInt::from(v + 1 + scale),
                                    BigInt::from(v + scale),
                                );
                                (VarId(v), val)
                            })
                            .collect();
                        check_total_positivity(&p, &point, ctx.registry(), r + 1)
                            .map_err(|e| format!("{m}: {e}"))?;
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} matrices, all minors checked exactly"))
        }),
    );
}
