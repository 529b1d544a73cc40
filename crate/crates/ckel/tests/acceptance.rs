//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line.  Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; the test harness reports the same outcomes.

mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ckel::abelian::{pairs_equivalent, FgAbelianGroup};
use ckel::document::InputDocument;
use ckel::intmat::{determinant, image_membership, kernel_basis, smith_normal_form};
use ckel::invariants::{
    ck_k_theory, express_in_lattice, ext_groups_el, ext_strong_level, k_groups_el, six_term_check,
    stabilization_check, strong_relations,
};
use ckel::reciprocal::{
    ck_complete_invariant, double_hat_check, dual_swap_matrix, hat_of_finite,
    reciprocal_dual_matrix, verify_duality,
};
use ckel::report::compare_report;
use ckel::zomat::{validate_ck, CkMatrix, StableSeed, ZeroOneMatrix};
use ckel::IntMatrix;

fn pass(criterion: &str, detail: &str) {
    println!("criterion {criterion}: PASS - {detail}");
}

fn separating_matrix() -> CkMatrix {
    validate_ck(&ZeroOneMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]]).unwrap())
        .unwrap()
}

/// The random Cuntz-Krieger batch shared by criteria 4, 5, 6, 7, 8 and 10.
fn random_ck_batch() -> Vec<CkMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    (0..50)
        .map(|_| {
            let size = rng.gen_range(2..=6);
            common::random_ck(&mut rng, size)
        })
        .collect()
}

/// All corpus seeds: all-ones, hat over the fixed matrix, hats over the
/// random batch, and the ten hand-written explicit seeds.
fn corpus_seeds() -> Vec<StableSeed> {
    let mut seeds = vec![StableSeed::all_ones(), hat_of_finite(&separating_matrix())];
    seeds.extend(random_ck_batch().iter().map(hat_of_finite));
    seeds.extend(common::explicit_drs_seeds());
    seeds
}

#[test]
fn criterion_01_o_infinity_example() {
    let seed = StableSeed::all_ones();
    let (strong, zero, weak) = ext_groups_el(&seed).unwrap();
    assert!(strong.group().is_trivial(), "Ext_s^1 must vanish");
    assert!(strong.mark_is_zero());
    assert_eq!(zero.rank(), 0, "Ext_s^0 must vanish");
    assert!(weak.is_trivial());

    let (k0, k1) = k_groups_el(&seed).unwrap();
    assert_eq!(k0.group(), &FgAbelianGroup::free(1), "K_0 must be Z");
    assert!(
        k0.quotient_by_element().is_trivial(),
        "the unit class must generate K_0"
    );
    assert_eq!(k1.rank(), 0, "K_1 must vanish");

    let dual = reciprocal_dual_matrix(&seed).unwrap();
    let (dual_k0, dual_k1) = ck_k_theory(&dual);
    assert!(dual_k0.group().is_trivial());
    assert!(dual_k0.mark_is_zero());
    assert_eq!(dual_k1.rank(), 0);
    pass(
        "1",
        "all-ones seed: K = (Z, generator, 0), Ext = (0, 0, 0), dual in the trivial class",
    );
}

#[test]
fn criterion_02_p_infinity_example() {
    let seed = StableSeed::p_infinity();
    let z2 = FgAbelianGroup::free(2);
    let e_basis =
        |n: usize| IntMatrix::from_fn(n, 2, |i, j| BigInt::from(i64::from(i == n - 2 + j)));
    let shift = IntMatrix::from_rows(vec![vec![0, 0], vec![1, 0]]);
    let mut tower = Vec::new();
    for n in 4..=8 {
        let (strong, zero) = ext_strong_level(&seed, n).unwrap();
        assert_eq!(strong.group(), &z2, "strong cokernel at level {n}");
        assert_eq!(zero.rank(), 2, "strong kernel rank at level {n}");

        let kernel = kernel_basis(&strong_relations(&seed.expand(n).unwrap()));
        let basis = e_basis(n);
        for j in 0..2 {
            assert!(
                kernel.contains(&basis.column(j)),
                "basis vector at level {n}"
            );
        }
        for v in kernel.vectors() {
            assert!(
                image_membership(&basis, v).is_some(),
                "kernel lattice exceeds the coordinate basis at level {n}"
            );
        }
        if n < 8 {
            let source = e_basis(n + 1);
            let dropped: Vec<Vec<BigInt>> =
                (0..2).map(|j| source.column(j)[..n].to_vec()).collect();
            let l =
                express_in_lattice(&basis, &dropped).expect("restriction must land in the lattice");
            assert_eq!(l, shift, "restriction matrix at level {n}");
            tower.push(l);
        }
    }
    for pair in tower.windows(2) {
        assert!(
            pair[0].mul(&pair[1]).is_zero(),
            "composed restriction must vanish"
        );
    }
    pass(
        "2",
        "levels 4..8 give Z^2 with rank-2 kernel; the kernel tower map is a nilpotent shift",
    );
}

#[test]
fn criterion_03_separating_example() {
    let a = separating_matrix();
    let b = validate_ck(
        &ZeroOneMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 1, 0]]).unwrap(),
    )
    .unwrap();
    let ia = ck_complete_invariant(&a);
    let ib = ck_complete_invariant(&b);
    assert_eq!(
        (ia.g1.clone(), ia.g2.clone()),
        (FgAbelianGroup::cyclic(2), FgAbelianGroup::trivial())
    );
    assert_eq!(
        (ib.g1.clone(), ib.g2.clone()),
        (FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(2))
    );

    let doc_a =
        InputDocument::from_json(r#"{"kind":"ck","matrix":[[1,1,1],[1,1,1],[1,0,0]]}"#).unwrap();
    let doc_b =
        InputDocument::from_json(r#"{"kind":"ck","matrix":[[1,1,1],[1,1,0],[1,1,0]]}"#).unwrap();
    let report = compare_report(&doc_a, &doc_b).unwrap();
    assert_eq!(report.verdict, Some(false));
    assert_eq!(
        report.details["conclusion"],
        serde_json::json!("not isomorphic")
    );
    pass(
        "3",
        "invariant pairs (Z/2, 0) vs (Z/2, Z/2); compare reports not isomorphic",
    );
}

#[test]
fn criterion_04_double_dual_suite() {
    let start = std::time::Instant::now();
    let mut matrices = vec![separating_matrix()];
    matrices.extend(random_ck_batch());
    let count = matrices.len();
    for (idx, a) in matrices.iter().enumerate() {
        let report = double_hat_check(a);
        assert!(
            report.pair_match,
            "pair mismatch for batch matrix {idx}: {a}"
        );
        assert!(
            report.rank_match,
            "rank mismatch for batch matrix {idx}: {a}"
        );
        assert!(
            report.determinant_identity,
            "determinant identity fails for batch matrix {idx}: {a}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 10,
        "double-dual suite took {elapsed:?}, budget is 10 s"
    );
    pass(
        "4",
        &format!("{count} matrices pass the three double-dual checks in {elapsed:?}"),
    );
}

#[test]
fn criterion_05_duality_instances() {
    let seeds = corpus_seeds();
    let count = seeds.len();
    for (idx, seed) in seeds.iter().enumerate() {
        let report = verify_duality(seed).unwrap_or_else(|e| panic!("seed {idx}: {e}"));
        assert!(
            report.verdict(),
            "duality verdict false for corpus seed {idx}"
        );
    }
    pass(
        "5",
        &format!("duality verdict true for all {count} corpus seeds"),
    );
}

#[test]
fn criterion_06_stabilization_isomorphisms() {
    let seeds = corpus_seeds();
    let count = seeds.len();
    for (idx, seed) in seeds.iter().enumerate() {
        for n in seed.k()..=seed.k() + 3 {
            let report = stabilization_check(seed, n).unwrap_or_else(|e| panic!("seed {idx}: {e}"));
            assert!(
                report.dc_at_level,
                "corpus seed {idx} misses the diagonal condition at {n}"
            );
            for check in &report.checks {
                assert!(
                    check.well_defined,
                    "seed {idx} level {n}: {} not well defined",
                    check.map
                );
                assert!(
                    check.square_commutes,
                    "seed {idx} level {n}: {} square does not commute",
                    check.map
                );
                assert_eq!(
                    check.isomorphism,
                    Some(true),
                    "seed {idx} level {n}: {} is not an isomorphism",
                    check.map
                );
            }
        }
    }
    pass(
        "6",
        &format!("all four maps are isomorphisms with commuting squares on {count} seeds"),
    );
}

#[test]
fn criterion_07_six_term_exactness() {
    let mut seeds = corpus_seeds();
    seeds.push(StableSeed::p_infinity());
    let count = seeds.len();
    for (idx, seed) in seeds.iter().enumerate() {
        for n in seed.k()..=seed.k() + 2 {
            let report = six_term_check(seed, n).unwrap_or_else(|e| panic!("seed {idx}: {e}"));
            assert!(
                report.exact(),
                "six-term sequence not exact for seed {idx} at level {n}"
            );
            assert!(
                report.factorization_identity,
                "factorization identity fails for seed {idx} at level {n}"
            );
        }
    }
    pass(
        "7",
        &format!("exact at every node with the factorization identity on {count} seeds"),
    );
}

#[test]
fn criterion_08_rank_identities() {
    let batch = random_ck_batch();
    for a in batch.iter().chain([separating_matrix()].iter()) {
        let (k0, k1) = ck_k_theory(a);
        assert_eq!(
            k0.group().free_rank(),
            k1.rank(),
            "finite matrix ranks must agree for {a}"
        );
        let seed = hat_of_finite(a);
        let (hk0, hk1) = k_groups_el(&seed).unwrap();
        assert_eq!(
            hk0.group().free_rank(),
            hk1.rank() + 1,
            "dual seed rank gap must be one for {a}"
        );
    }
    pass(
        "8",
        "rank K_0 - rank K_1 is 1 on every hat seed and 0 on every finite matrix",
    );
}

#[test]
fn criterion_09_engine_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut oracle_checked = 0usize;
    let mut saturation_checked = 0usize;
    for _ in 0..500 {
        let m = common::random_matrix(&mut rng, 10, 20);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d, "U*M*V != D for {m}");
        assert_eq!(determinant(&snf.u).abs(), BigInt::from(1));
        assert_eq!(determinant(&snf.v).abs(), BigInt::from(1));
        let diag: Vec<BigInt> = (0..m.rows().min(m.cols()))
            .map(|i| snf.d.get(i, i).clone())
            .collect();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(!w[0].is_zero(), "zero before nonzero in {diag:?}");
                use num_integer::Integer;
                assert!(w[1].mod_floor(&w[0]).is_zero(), "chain broken in {diag:?}");
            }
        }
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        if m.rows() <= 6 && m.cols() <= 6 {
            let expected = common::minor_invariant_factors(&m);
            assert_eq!(
                snf.invariant_factors(),
                expected,
                "minors oracle disagrees for {m}"
            );
            oracle_checked += 1;
        }
        if m.rows() > 0 && m.cols() > 0 {
            if let Some(v) = common::rational_kernel_vector(&m, &mut rng) {
                assert!(
                    kernel_basis(&m).contains(&v),
                    "kernel not saturated for {m}"
                );
                saturation_checked += 1;
            }
        }
    }
    pass(
        "9",
        &format!(
            "500 matrices pass; {oracle_checked} matched the minors oracle, {saturation_checked} saturation witnesses"
        ),
    );
}

#[test]
fn criterion_10_dual_swap_invariance() {
    let seeds = corpus_seeds();
    let count = seeds.len();
    for (idx, seed) in seeds.iter().enumerate() {
        let dual = reciprocal_dual_matrix(seed).unwrap();
        let swap = dual_swap_matrix(seed).unwrap();
        let (k0_d, k1_d) = ck_k_theory(&dual);
        let (k0_s, k1_s) = ck_k_theory(&swap);
        assert!(
            pairs_equivalent(&k0_d, &k0_s),
            "swap changes the invariant pair for corpus seed {idx}"
        );
        assert_eq!(
            k1_d.rank(),
            k1_s.rank(),
            "swap changes the kernel rank for seed {idx}"
        );
    }
    pass(
        "10",
        &format!("row/column swap preserves the invariant pair on {count} seeds"),
    );
}
