//! Shared oracles and generators for the integration suites.
//!
//! Everything here is deliberately independent of the implementation paths
//! it checks: invariant factors come from gcds of minors, kernel vectors
//! from rational elimination, and random inputs from a fixed-seed RNG.

// not every test binary uses every helper; index loops and the literal
// seed table read better than the lint suggestions here
#![allow(dead_code)]
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use ckel::zomat::{validate_ck, CkMatrix, ExplicitTail, StableSeed, TailRule, ZeroOneMatrix};
use ckel::IntMatrix;

/// Determinant-divisor oracle: the product of the first `k` invariant
/// factors equals the gcd of all `k x k` minors.  Returns the nonzero
/// invariant factors.
pub fn minor_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let max = m.rows().min(m.cols());
    let mut factors = Vec::new();
    let mut previous = BigInt::one();
    for k in 1..=max {
        let mut g = BigInt::zero();
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let minor = IntMatrix::from_fn(k, k, |i, j| m.get(rows[i], cols[j]).clone());
                g = g.gcd(&ckel::intmat::determinant(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &previous);
        previous = g;
    }
    factors
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// A random integer kernel vector of `m`, found by rational Gaussian
/// elimination with random free coordinates and denominators cleared.
/// Returns `None` when the kernel is trivial or the random coordinates
/// happen to produce zero.
pub fn rational_kernel_vector(m: &IntMatrix, rng: &mut impl Rng) -> Option<Vec<BigInt>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(m.get(i, j).clone()))
                .collect()
        })
        .collect();

    let mut pivot_col_of_row = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(swap) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, swap);
        let inv = a[pivot_row][col].clone();
        for entry in a[pivot_row].iter_mut() {
            *entry /= inv.clone();
        }
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for cidx in 0..cols {
                    let delta = &factor * &a[pivot_row][cidx];
                    a[r][cidx] -= delta;
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    if free_cols.is_empty() {
        return None;
    }
    let mut solution = vec![BigRational::zero(); cols];
    for &c in &free_cols {
        solution[c] = BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3)));
    }
    for (row, &col) in pivot_cols.iter().enumerate() {
        let mut value = BigRational::zero();
        for &f in &free_cols {
            value -= &a[row][f] * &solution[f];
        }
        solution[col] = value;
    }
    if solution.iter().all(Zero::is_zero) {
        return None;
    }
    let denominator_lcm = solution
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let cleared: Vec<BigInt> = solution
        .iter()
        .map(|q| q.numer() * (&denominator_lcm / q.denom()))
        .collect();
    debug_assert!(m.mul_vec(&cleared).iter().all(Zero::is_zero));
    Some(cleared)
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(0..=max_dim);
    let cols = rng.gen_range(0..=max_dim);
    IntMatrix::from_fn(rows, cols, |_, _| {
        BigInt::from(rng.gen_range(-bound..=bound))
    })
}

/// Random unimodular matrix built from elementary row operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();
    if n < 2 {
        return IntMatrix::from_rows(rows);
    }
    for _ in 0..3 * n {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    rows.swap(i, j);
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                for v in rows[i].iter_mut() {
                    *v = -v.clone();
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                if i != j {
                    let q = BigInt::from(rng.gen_range(-2i64..=2));
                    let src = rows[j].clone();
                    for (dst, s) in rows[i].iter_mut().zip(src) {
                        *dst += &q * s;
                    }
                }
            }
        }
    }
    IntMatrix::from_rows(rows)
}

/// Random irreducible non-permutation {0,1} matrix of the given size.
pub fn random_ck(rng: &mut impl Rng, size: usize) -> CkMatrix {
    loop {
        let mut rows: Vec<Vec<u8>> = (0..size)
            .map(|_| (0..size).map(|_| u8::from(rng.gen_bool(0.5))).collect())
            .collect();
        for row in rows.iter_mut() {
            if row.iter().all(|&v| v == 0) {
                let j = rng.gen_range(0..size);
                row[j] = 1;
            }
        }
        for j in 0..size {
            if (0..size).all(|i| rows[i][j] == 0) {
                let i = rng.gen_range(0..size);
                rows[i][j] = 1;
            }
        }
        let Ok(matrix) = ZeroOneMatrix::new(rows) else {
            continue;
        };
        if let Ok(ck) = validate_ck(&matrix) {
            return ck;
        }
    }
}

/// Ten hand-written explicit-tail seeds asserting the diagonal condition,
/// covering four levels past the corner.  Vertex 1 is a hub in each (first
/// corner row and column are ones, `c_1 = 1`, every tail row points back
/// at it), which keeps every covered level irreducible.
pub fn explicit_drs_seeds() -> Vec<StableSeed> {
    // (corner rows, corner c, tail rows, tail c)
    let table: Vec<(Vec<Vec<u8>>, Vec<u8>, Vec<Vec<u8>>, Vec<u8>)> = vec![
        (
            vec![vec![1, 1], vec![1, 0]],
            vec![1, 0],
            vec![
                vec![1, 0, 1],
                vec![1, 1, 0, 0],
                vec![1, 0, 0, 0, 1],
                vec![1, 0, 1, 0, 0, 0],
            ],
            vec![1, 0, 1, 0],
        ),
        (
            vec![vec![1, 1], vec![1, 1]],
            vec![1, 1],
            vec![
                vec![1, 0, 0],
                vec![1, 0, 0, 1],
                vec![1, 1, 0, 0, 0],
                vec![1, 0, 0, 1, 0, 1],
            ],
            vec![0, 1, 0, 1],
        ),
        (
            vec![vec![1, 1], vec![1, 0]],
            vec![1, 1],
            vec![
                vec![1, 1, 0],
                vec![1, 0, 1, 1],
                vec![1, 0, 0, 0, 1],
                vec![1, 1, 0, 0, 0, 0],
            ],
            vec![0, 1, 1, 0],
        ),
        (
            vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0]],
            vec![1, 0, 0],
            vec![
                vec![1, 0, 0, 1],
                vec![1, 0, 1, 0, 0],
                vec![1, 1, 0, 0, 0, 1],
                vec![1, 0, 0, 0, 1, 0, 0],
            ],
            vec![1, 0, 1, 0],
        ),
        (
            vec![vec![1, 1, 1], vec![1, 0, 1], vec![1, 1, 1]],
            vec![1, 1, 0],
            vec![
                vec![1, 0, 1, 0],
                vec![1, 1, 0, 0, 1],
                vec![1, 0, 0, 1, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 1],
            ],
            vec![0, 1, 0, 1],
        ),
        (
            vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]],
            vec![1, 0, 1],
            vec![
                vec![1, 0, 0, 0],
                vec![1, 0, 0, 1, 1],
                vec![1, 1, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 1, 1],
            ],
            vec![0, 1, 0, 1],
        ),
        (
            vec![
                vec![1, 1, 1, 1],
                vec![1, 0, 0, 1],
                vec![1, 0, 1, 0],
                vec![1, 1, 0, 0],
            ],
            vec![1, 0, 0, 0],
            vec![
                vec![1, 0, 0, 0, 1],
                vec![1, 0, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0, 1],
                vec![1, 1, 0, 0, 1, 0, 0, 0],
            ],
            vec![1, 0, 1, 0],
        ),
        (
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 0, 0],
                vec![1, 0, 1, 0],
                vec![1, 0, 0, 1],
            ],
            vec![1, 1, 0, 0],
            vec![
                vec![1, 0, 0, 0, 0],
                vec![1, 0, 0, 1, 0, 1],
                vec![1, 1, 0, 0, 0, 0, 0],
                vec![1, 0, 1, 0, 0, 0, 0, 1],
            ],
            vec![0, 1, 0, 1],
        ),
        (
            vec![vec![1, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
            vec![1, 1, 1],
            vec![
                vec![1, 0, 0, 1],
                vec![1, 0, 0, 0, 1],
                vec![1, 1, 0, 0, 0, 1],
                vec![1, 0, 0, 1, 0, 0, 1],
            ],
            vec![1, 1, 1, 1],
        ),
        (
            vec![vec![1, 1], vec![1, 1]],
            vec![1, 0],
            vec![
                vec![1, 1, 1],
                vec![1, 0, 0, 0],
                vec![1, 0, 1, 0, 1],
                vec![1, 1, 0, 0, 0, 0],
            ],
            vec![1, 0, 1, 0],
        ),
    ];

    table
        .into_iter()
        .enumerate()
        .map(|(idx, (corner, c, rows, tail_c))| {
            let corner = ZeroOneMatrix::new(corner).unwrap_or_else(|e| panic!("seed {idx}: {e}"));
            let k = corner.size();
            let tail = TailRule::Explicit(ExplicitTail {
                rows,
                c: tail_c,
                assumed_drs: true,
            });
            StableSeed::new(k, corner, c, tail).unwrap_or_else(|e| panic!("seed {idx}: {e}"))
        })
        .collect()
}

/// The full corpus used by the duality and stabilization suites: the all-ones
/// seed, hat seeds over the fixed matrix and the random batch, and the
/// hand-written explicit seeds.
pub fn corpus_seeds(rng: &mut impl Rng, random_hats: usize) -> Vec<StableSeed> {
    let mut seeds = vec![StableSeed::all_ones()];
    let fixed = validate_ck(
        &ZeroOneMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]]).unwrap(),
    )
    .unwrap();
    seeds.push(ckel::reciprocal::hat_of_finite(&fixed));
    for _ in 0..random_hats {
        let size = rng.gen_range(2..=6);
        seeds.push(ckel::reciprocal::hat_of_finite(&random_ck(rng, size)));
    }
    seeds.extend(explicit_drs_seeds());
    seeds
}
