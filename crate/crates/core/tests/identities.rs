//! Cross-module identities at moderate scope: each test ties at least two
//! formulations together (recurrence values, hard-particle sums, path
//! series, compactified graphs, network factorizations) with exact
//! arithmetic throughout.

use std::collections::HashMap;

use qpaths::compact::{build_compact_direct, verify_resolvent_equality};
use qpaths::graphs::{build_gamma, signed_transfer_det, TransferMatrix};
use qpaths::qsystem::{hard_particle_z, MotzkinPath, SeedContext};
use qpaths::totalpos::verify_resolvent_theorem;
use qpaths::{TSeries, VarRegistry, ZPoly};

/// Fresh registry with `n` weight atoms `y1 … yn`.
fn y_weights(n: usize) -> (VarRegistry, Vec<ZPoly>) {
    let mut registry = VarRegistry::new();
    let weights = (1..=n)
        .map(|i| ZPoly::var(registry.intern(&format!("y{i}"))))
        .collect();
    (registry, weights)
}

/// The walk series of the flat-seed tree is the ratio of two hard-particle
/// polynomials: the numerator drops the vertex matching `y1`, and every
/// particle weight enters with a minus sign.
#[test]
fn heap_series_is_a_ratio_of_hard_particle_polynomials() {
    let order = 8usize;
    for r in 1..=3usize {
        let (_, y) = y_weights(2 * r + 1);
        let tree = build_gamma(&MotzkinPath::flat(r), &y).unwrap();
        let walks = TransferMatrix::from_graph(&tree)
            .resolvent(tree.root, tree.root, order)
            .unwrap();

        let z_full = hard_particle_z(r, &y);
        let mut y_cut = y.clone();
        y_cut[0] = ZPoly::zero();
        let z_cut = hard_particle_z(r, &y_cut);
        let sign = |p: usize, z: &ZPoly| if p % 2 == 0 { z.clone() } else { z.neg() };
        let num: Vec<ZPoly> = z_cut.iter().enumerate().map(|(p, z)| sign(p, z)).collect();
        let den: Vec<ZPoly> = z_full.iter().enumerate().map(|(p, z)| sign(p, z)).collect();

        let quot = TSeries::from_coeffs(num)
            .truncated(order)
            .div(&TSeries::from_coeffs(den).truncated(order))
            .unwrap();
        for k in 0..=order {
            assert_eq!(walks.coeff(k), quot.coeff(k), "rank {r}, order {k}");
        }
    }
}

/// Reflecting time through the seed window (`n ↦ 1−n` on a flat seed)
/// is the same as swapping the two variables of every column.
#[test]
fn time_reflection_swaps_the_seed_halves() {
    for r in 1..=3usize {
        let mut ctx = SeedContext::new(MotzkinPath::flat(r));
        let swap: HashMap<_, _> = (1..=r)
            .flat_map(|beta| {
                let lo = ctx.seed_var(beta, false);
                let hi = ctx.seed_var(beta, true);
                [(lo, ZPoly::var(hi)), (hi, ZPoly::var(lo))]
            })
            .collect();
        for alpha in 1..=r {
            for n in 2..=4i64 {
                let reflected = ctx.compute_r(alpha, 1 - n).unwrap();
                let swapped = ctx
                    .compute_r(alpha, n)
                    .unwrap()
                    .substitute(&swap, ctx.registry())
                    .unwrap();
                assert_eq!(reflected, swapped, "rank {r} α={alpha} n={n}");
            }
        }
    }
}

/// The weight family may be read off at either window position `k = 0`
/// or `k = 1`; the hard-particle sums built from it do not depend on
/// that choice, even though the individual weights do.
#[test]
fn shifted_weight_families_give_the_same_partition_sums() {
    for r in 1..=3usize {
        let mut ctx = SeedContext::new(MotzkinPath::flat(r));
        let y0 = ctx.weights_shifted(0).unwrap();
        let y1 = ctx.weights_shifted(1).unwrap();
        assert_ne!(y0, y1, "rank {r}: families should differ weight-wise");
        let z0 = hard_particle_z(r, &y0);
        let z1 = hard_particle_z(r, &y1);
        for p in 0..=r + 1 {
            assert_eq!(z0[p], z1[p], "rank {r} Z_{p}");
        }
    }
}

/// The signed determinant of a compactified graph's transfer matrix lists
/// the conserved quantities of its seed — including shifted, non-flat
/// seeds where they are no longer plain hard-particle sums.
#[test]
fn signed_determinants_list_conserved_quantities_beyond_flat_seeds() {
    for heights in [vec![0, 1, 2], vec![1, 0, 1]] {
        let m = MotzkinPath::new(heights).unwrap();
        let r = m.rank();
        let mut ctx = SeedContext::new(m.clone());
        let y = ctx.weights().unwrap();
        let g = build_compact_direct(&m, &y).unwrap();
        let mut registry = ctx.registry().clone();
        let t = registry.intern("t");
        let coeffs = signed_transfer_det(&TransferMatrix::from_graph(&g), t).unwrap();
        assert_eq!(coeffs.len(), r + 2);
        for p in 0..=r + 1 {
            let c = ctx.conserved_c_checked(p).unwrap();
            assert_eq!(coeffs[p], c, "seed {m} coefficient {p}");
        }
    }
}

/// One pass over rank-4 seeds (beyond the exhaustive rank-3 sweeps):
/// recurrence values, tree series, compactified series, and network series
/// all agree.
#[test]
fn every_formulation_agrees_on_rank_four_seeds() {
    let order = 4usize;
    for heights in [vec![0, 1, 2, 3], vec![2, 1, 0, 0]] {
        let m = MotzkinPath::new(heights).unwrap();
        let mut ctx = SeedContext::new(m.clone());
        let y = ctx.weights().unwrap();

        // Tree series times the head value generates the recurrence row.
        let tree = build_gamma(&m, &y).unwrap();
        let z = TransferMatrix::from_graph(&tree)
            .resolvent(tree.root, tree.root, order)
            .unwrap();
        let m1 = m.get(1);
        let head = ctx.compute_r(1, m1).unwrap();
        for n in 0..=order {
            let expect = ctx.compute_r(1, n as i64 + m1).unwrap();
            assert_eq!(head.mul(z.coeff(n)), expect, "seed {m} n={n}");
        }

        // Merging preserves the series, and the factorized network
        // reproduces it through the corrected column sum.
        assert!(verify_resolvent_equality(&m, &y, order).unwrap(), "merge at {m}");
        assert!(verify_resolvent_theorem(&m, &y, order).unwrap(), "network at {m}");
    }
}
