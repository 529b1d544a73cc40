//! Exact integer dense-matrix algebra.
//!
//! The whole crate reduces to four operations implemented here on matrices
//! of unbounded integers: Smith normal form with unimodular transforms,
//! saturated kernel bases, cokernel presentations of finitely generated
//! abelian groups, and image-membership solving.
//!
//! The Smith normal form `D = U * M * V` uses the classical elimination with
//! the nonzero entry of smallest absolute value as pivot, which keeps
//! coefficient growth harmless at the sizes that occur here (a few dozen
//! rows at most).  Empty dimensions are legal throughout: the cokernel of an
//! `r x 0` matrix is `Z^r` and the kernel of a `0 x c` matrix is `Z^c`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::abelian::FgAbelianGroup;

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from rows of any integer-like entries.
    ///
    /// Panics when the rows are ragged.
    pub fn from_rows<T>(rows: Vec<Vec<T>>) -> Self
    where
        T: Into<BigInt>,
    {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            entries.extend(row.into_iter().map(Into::into));
        }
        IntMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_columns(ambient: usize, columns: &[Vec<BigInt>]) -> Self {
        for col in columns {
            assert_eq!(col.len(), ambient, "column length mismatch");
        }
        IntMatrix::from_fn(ambient, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * rhs.get(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                self.entries[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    /// `[self | col]`, one extra column on the right.
    pub fn with_column(&self, col: &[BigInt]) -> IntMatrix {
        assert_eq!(col.len(), self.rows, "column length mismatch");
        IntMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                col[i].clone()
            }
        })
    }

    /// `[self | rhs]`, horizontal concatenation.
    pub fn hstack(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        IntMatrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = self.get(src, j) * q;
            self.entries[dst * self.cols + j] += t;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = self.get(i, src) * q;
            self.entries[i * self.cols + dst] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Smith normal form `u * m * v = d` with all transforms unimodular.
///
/// `d` is diagonal with nonnegative entries, the nonzero entries form a
/// divisibility chain and come first.  The inverse transforms are carried
/// along because cokernel projections need `u_inv` columns as generator
/// lifts.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// Nonzero diagonal entries, including trivial factors equal to 1.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct SnfState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn row_swap(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += q * row[src]
    fn row_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_row_multiple(dst, src, q);
        self.u.add_row_multiple(dst, src, q);
        let neg = -q;
        self.u_inv.add_col_multiple(src, dst, &neg);
    }

    /// col[dst] += q * col[src]
    fn col_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_col_multiple(dst, src, q);
        self.v.add_col_multiple(dst, src, q);
        let neg = -q;
        self.v_inv.add_row_multiple(src, dst, &neg);
    }

    fn row_negate(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

fn min_abs_pivot(d: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..d.rows() {
        for j in from..d.cols() {
            let e = d.get(i, j);
            if e.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d.get(bi, bj).abs() <= e.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Total on all integer matrices, including empty ones.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows();
    let cols = m.cols();
    let mut st = SnfState {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };

    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_pivot(&st.d, k) else {
            break;
        };
        st.row_swap(k, pi);
        st.col_swap(k, pj);

        // Clear row k and column k.  Truncated division leaves remainders
        // strictly smaller than the pivot, so swapping a remainder into the
        // pivot position makes progress and the loop terminates.
        loop {
            let mut residue = None;
            for i in k + 1..rows {
                if st.d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(st.d.get(i, k) / st.d.get(k, k));
                if !q.is_zero() {
                    st.row_add(i, k, &q);
                }
                if !st.d.get(i, k).is_zero() {
                    residue = Some(i);
                }
            }
            if let Some(i) = residue {
                st.row_swap(k, i);
                continue;
            }
            let mut residue = None;
            for j in k + 1..cols {
                if st.d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(st.d.get(k, j) / st.d.get(k, k));
                if !q.is_zero() {
                    st.col_add(j, k, &q);
                }
                if !st.d.get(k, j).is_zero() {
                    residue = Some(j);
                }
            }
            match residue {
                // Swapping a remainder into the pivot column dirties it;
                // the next pass re-clears with a strictly smaller pivot.
                Some(j) => st.col_swap(k, j),
                None => break,
            }
        }

        // Divisibility fix: fold a non-divisible entry into the pivot row and
        // re-run the clearing pass; the pivot strictly shrinks each time.
        let pivot = st.d.get(k, k).clone();
        let offender = (k + 1..rows)
            .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !st.d.get(i, j).mod_floor(&pivot).is_zero());
        if let Some((i, _)) = offender {
            st.row_add(k, i, &BigInt::one());
            continue;
        }

        if st.d.get(k, k).is_negative() {
            st.row_negate(k);
        }
        k += 1;
    }

    SnfResult {
        rank: k,
        u: st.u,
        d: st.d,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
    }
}

/// Basis of the integer kernel lattice of a matrix.
///
/// The basis is saturated: every integer vector annihilated by the matrix is
/// an integer combination of the basis vectors.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    ambient: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl KernelBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// The basis vectors as matrix columns (`ambient x rank`).
    pub fn as_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient, &self.vectors)
    }

    /// Whether `v` lies in the lattice spanned by the basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        image_membership(&self.as_matrix(), v).is_some()
    }
}

pub fn kernel_basis(m: &IntMatrix) -> KernelBasis {
    let snf = smith_normal_form(m);
    let vectors = (snf.rank..m.cols()).map(|j| snf.v.column(j)).collect();
    KernelBasis {
        ambient: m.cols(),
        vectors,
    }
}

/// The group `Z^rows / image(m)` together with enough of the Smith data to
/// project any integer vector to canonical coordinates.
///
/// Canonical coordinates list one entry per torsion factor (reduced into
/// `[0, factor)`, factors of 1 dropped) followed by one entry per free
/// generator.
#[derive(Clone, Debug)]
pub struct CokernelQuotient {
    group: FgAbelianGroup,
    ambient: usize,
    u: IntMatrix,
    u_inv: IntMatrix,
    /// Invariant factor of each transformed coordinate; 0 marks a free one.
    factors: Vec<BigInt>,
}

impl CokernelQuotient {
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of canonical coordinates (torsion plus free).
    pub fn num_coordinates(&self) -> usize {
        self.group.torsion().len() + self.group.free_rank()
    }

    fn coordinate_positions(&self) -> impl Iterator<Item = usize> + '_ {
        let torsion = self
            .factors
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero() && !f.is_one())
            .map(|(i, _)| i);
        let free = self
            .factors
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_zero())
            .map(|(i, _)| i);
        torsion.chain(free)
    }

    /// Canonical coordinates of the class of `w`.
    pub fn class_of(&self, w: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(w.len(), self.ambient, "vector length mismatch");
        let t = self.u.mul_vec(w);
        self.coordinate_positions()
            .map(|i| {
                let f = &self.factors[i];
                if f.is_zero() {
                    t[i].clone()
                } else {
                    t[i].mod_floor(f)
                }
            })
            .collect()
    }

    pub fn is_zero_class(&self, w: &[BigInt]) -> bool {
        self.class_of(w).iter().all(Zero::is_zero)
    }

    /// One ambient lift per canonical coordinate; the class of the `i`-th
    /// lift is the `i`-th canonical generator.
    pub fn generator_lifts(&self) -> Vec<Vec<BigInt>> {
        self.coordinate_positions()
            .map(|i| self.u_inv.column(i))
            .collect()
    }
}

pub fn cokernel_presentation(m: &IntMatrix) -> CokernelQuotient {
    let snf = smith_normal_form(m);
    let ambient = m.rows();
    let mut factors = vec![BigInt::zero(); ambient];
    for (i, factor) in factors.iter_mut().enumerate().take(snf.rank) {
        *factor = snf.d.get(i, i).clone();
    }
    let torsion: Vec<BigInt> = factors
        .iter()
        .filter(|f| !f.is_zero() && !f.is_one())
        .cloned()
        .collect();
    let group = FgAbelianGroup::new(ambient - snf.rank, torsion);
    CokernelQuotient {
        group,
        ambient,
        u: snf.u,
        u_inv: snf.u_inv,
        factors,
    }
}

/// Solves `m * x = b` over the integers.
///
/// Returns a witness when `b` is in the image and `None` otherwise.  The
/// answer is definite either way.  Panics when `b` has the wrong length.
pub fn image_membership(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(
        b.len(),
        m.rows(),
        "dimension mismatch: expected {} entries",
        m.rows()
    );
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let d = snf.d.get(i, i);
            let (q, r) = ci.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Signed determinant by the Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
