//! The bundled regression corpus of worked examples: the all-ones matrix
//! (whose dual lands in the trivial-K-theory class), the dual of a finite
//! Cuntz-Krieger matrix and its double dual, the shifted-diagonal family
//! without the diagonal condition, the separating pair of 3x3 matrices,
//! and the structural-property classifications of the canonical families.
//!
//! `run_corpus` evaluates every case and returns one pass/fail outcome per
//! name, sorted by name; the `paper-examples` subcommand prints them.

use num_bigint::BigInt;

use crate::abelian::{pairs_equivalent, FgAbelianGroup};
use crate::intmat::{image_membership, kernel_basis, IntMatrix};
use crate::invariants::{
    ck_k_theory, express_in_lattice, ext_groups_el, ext_strong_level, k_groups_el, six_term_check,
    stabilization_check, strong_relations,
};
use crate::reciprocal::{
    ck_complete_invariant, ck_isomorphic, double_hat_check, dual_swap_matrix, hat_of_finite,
    reciprocal_dual_matrix,
};
use crate::zomat::{
    validate_ck, CkMatrix, ExplicitTail, StableSeed, TailCertificate, TailRule, ZeroOneMatrix,
};

#[derive(Clone, Debug)]
pub struct CorpusOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn outcome(name: &'static str, pass: bool, detail: impl Into<String>) -> CorpusOutcome {
    CorpusOutcome {
        name,
        pass,
        detail: detail.into(),
    }
}

fn separating_matrix() -> CkMatrix {
    validate_ck(&ZeroOneMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]]).unwrap())
        .unwrap()
}

fn check_dual_of_all_ones() -> CorpusOutcome {
    let name = "dual-of-all-ones";
    let seed = StableSeed::all_ones();
    let Ok((k0, k1)) = k_groups_el(&seed) else {
        return outcome(name, false, "k-groups not computable");
    };
    let Ok((strong, zero, weak)) = ext_groups_el(&seed) else {
        return outcome(name, false, "ext groups not computable");
    };
    let Ok(duality) = verify(&seed) else {
        return outcome(name, false, "duality check failed to run");
    };
    let pass = k0.group() == &FgAbelianGroup::free(1)
        && k0.quotient_by_element().is_trivial()
        && k1.rank() == 0
        && strong.group().is_trivial()
        && zero.rank() == 0
        && weak.is_trivial()
        && duality;
    outcome(
        name,
        pass,
        "K = (Z marked at a generator, 0); Ext = (0, 0, 0); dual has the trivial pair",
    )
}

fn verify(seed: &StableSeed) -> Result<bool, ()> {
    crate::reciprocal::verify_duality(seed)
        .map(|r| r.verdict())
        .map_err(|_| ())
}

fn check_double_dual() -> CorpusOutcome {
    let name = "double-dual-of-3x3";
    let a = separating_matrix();
    let report = double_hat_check(&a);
    // displayed (N+3)-pattern of the double dual
    let dd = &report.double_dual;
    let n = a.size();
    let mut pattern_ok = dd.size() == n + 3;
    if pattern_ok {
        for i in 0..n {
            for j in 0..n {
                pattern_ok &= dd.get(i, j) == a.get(i, j);
            }
            pattern_ok &= dd.get(i, n) == 1 && dd.get(i, n + 1) == 1 && dd.get(i, n + 2) == 0;
        }
        for j in 0..n + 3 {
            pattern_ok &= dd.get(n, j) == u8::from(j != n + 2);
            pattern_ok &= dd.get(n + 1, j) == 1;
            pattern_ok &= dd.get(n + 2, j) == u8::from(j >= n);
        }
    }
    let iso = ck_isomorphic(&a, dd);
    outcome(
        name,
        report.all_pass() && pattern_ok && iso,
        "double dual reproduces the matrix pattern, the K-pair, and the determinant identity",
    )
}

fn check_p_infinity_tower() -> CorpusOutcome {
    let name = "p-infinity-strong-tower";
    let seed = StableSeed::p_infinity();
    let e_basis =
        |n: usize| IntMatrix::from_fn(n, 2, |i, j| BigInt::from(i64::from(i == n - 2 + j)));
    let shift = IntMatrix::from_rows(vec![vec![0, 0], vec![1, 0]]);
    let mut pass = true;
    for n in 4..=8 {
        let Ok((strong, zero)) = ext_strong_level(&seed, n) else {
            return outcome(name, false, "level not computable");
        };
        pass &= strong.group() == &FgAbelianGroup::free(2) && zero.rank() == 2;
        let Ok(level) = seed.expand(n) else {
            return outcome(name, false, "level not expandable");
        };
        let ker = kernel_basis(&strong_relations(&level));
        let basis = e_basis(n);
        pass &= (0..2).all(|j| ker.contains(&basis.column(j)));
        pass &= ker
            .vectors()
            .iter()
            .all(|v| image_membership(&basis, v).is_some());
        if n < 8 {
            let source = e_basis(n + 1);
            let dropped: Vec<Vec<BigInt>> =
                (0..2).map(|j| source.column(j)[..n].to_vec()).collect();
            match express_in_lattice(&basis, &dropped) {
                Some(l) => pass &= l == shift && l.mul(&l).is_zero(),
                None => pass = false,
            }
        }
    }
    outcome(
        name,
        pass,
        "levels 4..8 give (Z^2, rank-2 kernel); the kernel tower map is the nilpotent shift",
    )
}

fn check_separating_pair() -> CorpusOutcome {
    let name = "separating-3x3-pair";
    let a = separating_matrix();
    let b = validate_ck(
        &ZeroOneMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 1, 0]]).unwrap(),
    )
    .unwrap();
    let ia = ck_complete_invariant(&a);
    let ib = ck_complete_invariant(&b);
    let pass = ia.g1 == FgAbelianGroup::cyclic(2)
        && ia.g2.is_trivial()
        && ib.g1 == FgAbelianGroup::cyclic(2)
        && ib.g2 == FgAbelianGroup::cyclic(2)
        && ia.direct_sum_ok
        && ib.direct_sum_ok
        && !ck_isomorphic(&a, &b);
    outcome(
        name,
        pass,
        "invariants (Z/2, 0) vs (Z/2, Z/2): the matrix and its transpose are not isomorphic",
    )
}

fn check_family_properties() -> CorpusOutcome {
    let name = "family-classification";
    let all_ones = StableSeed::all_ones().check_properties(4);
    let hat = hat_of_finite(&separating_matrix()).check_properties(4);
    let p_inf = StableSeed::p_infinity().check_properties(4);
    let pass = match (all_ones, hat, p_inf) {
        (Ok(a), Ok(h), Ok(p)) => {
            a.drs
                && a.certificate == TailCertificate::DrsLiAllLevels
                && a.levels.iter().all(|l| l.irreducible)
                && h.drs
                && h.certificate == TailCertificate::DrsLiAllLevels
                && h.levels.iter().all(|l| l.irreducible)
                && p.rs
                && !p.dc
                && !p.drs
                && p.certificate == TailCertificate::RsLiNotDc
        }
        _ => false,
    };
    outcome(
        name,
        pass,
        "all-ones and hat seeds are (DRS)+(LI); the shifted-diagonal family is (RS) but not (DC)",
    )
}

fn check_drs_without_li() -> CorpusOutcome {
    let name = "diagonal-stability-without-irreducibility";
    let corner = ZeroOneMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let tail = TailRule::Explicit(ExplicitTail {
        rows: vec![
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1, 1],
            vec![0, 0, 1, 1, 1, 1],
        ],
        c: vec![1, 1, 1],
        assumed_drs: true,
    });
    let pass = match StableSeed::new(3, corner, vec![0, 0, 1], tail) {
        Ok(seed) => match seed.check_properties(3) {
            Ok(report) => report.drs && report.levels.iter().all(|l| !l.irreducible),
            Err(_) => false,
        },
        Err(_) => false,
    };
    outcome(
        name,
        pass,
        "two isolated loops beside a growing block: diagonally right stable, never irreducible",
    )
}

fn check_dual_swap() -> CorpusOutcome {
    let name = "dual-swap-same-pair";
    let mut pass = true;
    for seed in [StableSeed::all_ones(), hat_of_finite(&separating_matrix())] {
        let (Ok(dual), Ok(swap)) = (reciprocal_dual_matrix(&seed), dual_swap_matrix(&seed)) else {
            return outcome(name, false, "dual construction failed");
        };
        let (k0_d, k1_d) = ck_k_theory(&dual);
        let (k0_s, k1_s) = ck_k_theory(&swap);
        pass &= pairs_equivalent(&k0_d, &k0_s) && k1_d.rank() == k1_s.rank();
    }
    outcome(
        name,
        pass,
        "exchanging the last two rows and columns of the dual keeps the invariant pair",
    )
}

fn check_six_term() -> CorpusOutcome {
    let name = "six-term-exactness";
    let seeds = [
        StableSeed::all_ones(),
        hat_of_finite(&separating_matrix()),
        StableSeed::p_infinity(),
    ];
    let mut pass = true;
    for seed in &seeds {
        for n in seed.k()..=seed.k() + 2 {
            match six_term_check(seed, n) {
                Ok(r) => pass &= r.exact() && r.factorization_identity,
                Err(_) => pass = false,
            }
        }
    }
    outcome(
        name,
        pass,
        "exact at every node, including the factorization identity, for all bundled seeds",
    )
}

fn check_stabilization() -> CorpusOutcome {
    let name = "stabilization-maps";
    let mut pass = true;
    for seed in [StableSeed::all_ones(), hat_of_finite(&separating_matrix())] {
        for n in seed.k()..=seed.k() + 3 {
            match stabilization_check(&seed, n) {
                Ok(r) => pass &= r.dc_at_level && r.all_well_defined() && r.all_isomorphisms(),
                Err(_) => pass = false,
            }
        }
    }
    match stabilization_check(&StableSeed::p_infinity(), 4) {
        Ok(r) => pass &= !r.dc_at_level && r.all_well_defined(),
        Err(_) => pass = false,
    }
    outcome(
        name,
        pass,
        "corner and restriction maps are isomorphisms under the diagonal condition",
    )
}

fn check_duality_instances() -> CorpusOutcome {
    let name = "duality-instances";
    let bases = [
        vec![vec![1u8, 1], vec![1, 1]],
        vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]],
        vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
        vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 1, 1, 0],
        ],
    ];
    let mut pass = true;
    for rows in bases {
        let Ok(base) = ZeroOneMatrix::new(rows) else {
            return outcome(name, false, "bad base matrix");
        };
        let Ok(ck) = validate_ck(&base) else {
            return outcome(name, false, "base matrix is not Cuntz-Krieger data");
        };
        pass &= verify(&hat_of_finite(&ck)).unwrap_or(false);
    }
    pass &= verify(&StableSeed::all_ones()).unwrap_or(false);
    outcome(
        name,
        pass,
        "strong-extension pair equals the dual matrix K-pair on every bundled seed",
    )
}

/// Runs every corpus case, sorted by name.
pub fn run_corpus() -> Vec<CorpusOutcome> {
    let mut outcomes = vec![
        check_dual_of_all_ones(),
        check_double_dual(),
        check_p_infinity_tower(),
        check_separating_pair(),
        check_family_properties(),
        check_drs_without_li(),
        check_dual_swap(),
        check_six_term(),
        check_stabilization(),
        check_duality_instances(),
    ];
    outcomes.sort_by_key(|o| o.name);
    outcomes
}
