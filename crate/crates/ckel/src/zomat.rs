//! {0,1} matrices and finitely described infinite matrices.
//!
//! A `ZeroOneMatrix` is a finite square matrix over {0,1} with no zero row
//! or column (the standing assumption for Cuntz-Krieger data).  An infinite
//! matrix is represented by a [`StableSeed`]: a base level `K`, the `K x K`
//! corner `A_K`, the row-type vector `c` (`c_i = 1` when row `i` has
//! cofinitely many ones, `c_i = 0` when it has finitely many), and a tail
//! rule producing every later row.  Right stability pins down the columns
//! beyond the corner: `A(i, n+1) = c_i` for `i <= n`.  The tail rule is
//! one of three closed-form families or an explicit finite list of rows,
//! so every level matrix `A_n` the rest of the crate needs is computable,
//! and the structural conditions (diagonal condition, local irreducibility)
//! are either certified in closed form or checked level by level.
//!
//! Levels and indices are 1-based in reports and errors, matching the
//! written convention for these matrices; storage is 0-based.

use std::fmt;

use thiserror::Error;

use crate::intmat::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must be square, row {row} has {len} entries but there are {size} rows")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("entry ({row},{col}) is {value}, expected 0 or 1")]
    BadEntry { row: usize, col: usize, value: u8 },
    #[error("matrix is empty")]
    Empty,
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("matrix is not irreducible")]
    NotIrreducible,
    #[error("matrix is a permutation matrix")]
    IsPermutation,
}

/// Finite square {0,1} matrix with no zero rows or columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroOneMatrix {
    size: usize,
    entries: Vec<u8>,
}

impl ZeroOneMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, MatrixError> {
        let size = rows.len();
        if size == 0 {
            return Err(MatrixError::Empty);
        }
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(MatrixError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    size,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(MatrixError::BadEntry {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                    });
                }
                entries.push(v);
            }
        }
        let m = ZeroOneMatrix { size, entries };
        for i in 0..size {
            if (0..size).all(|j| m.get(i, j) == 0) {
                return Err(MatrixError::ZeroRow(i + 1));
            }
        }
        for j in 0..size {
            if (0..size).all(|i| m.get(i, j) == 0) {
                return Err(MatrixError::ZeroColumn(j + 1));
            }
        }
        Ok(m)
    }

    pub fn all_ones(size: usize) -> Self {
        assert!(size > 0);
        ZeroOneMatrix {
            size,
            entries: vec![1; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        self.entries[i * self.size..(i + 1) * self.size].to_vec()
    }

    pub fn rows_vec(&self) -> Vec<Vec<u8>> {
        (0..self.size).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![0u8; self.size * self.size];
        for i in 0..self.size {
            for j in 0..self.size {
                entries[j * self.size + i] = self.get(i, j);
            }
        }
        ZeroOneMatrix {
            size: self.size,
            entries,
        }
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, self.size, |i, j| self.get(i, j).into())
    }

    /// Strong connectivity of the digraph with an edge `i -> j` whenever
    /// the entry `(i,j)` is 1.
    pub fn is_irreducible(&self) -> bool {
        let forward = |i: usize, j: usize| self.get(i, j) == 1;
        let backward = |i: usize, j: usize| self.get(j, i) == 1;
        self.reaches_all(forward) && self.reaches_all(backward)
    }

    fn reaches_all(&self, edge: impl Fn(usize, usize) -> bool) -> bool {
        let mut seen = vec![false; self.size];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            let next: Vec<usize> = (0..self.size).filter(|&j| !seen[j] && edge(i, j)).collect();
            for j in next {
                seen[j] = true;
                stack.push(j);
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Exactly one 1 in every row and every column.
    pub fn is_permutation(&self) -> bool {
        let one_per_row =
            (0..self.size).all(|i| (0..self.size).filter(|&j| self.get(i, j) == 1).count() == 1);
        let one_per_col =
            (0..self.size).all(|j| (0..self.size).filter(|&i| self.get(i, j) == 1).count() == 1);
        one_per_row && one_per_col
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// A {0,1} matrix validated as irreducible and not a permutation, i.e. the
/// defining data of a simple purely infinite Cuntz-Krieger algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CkMatrix(ZeroOneMatrix);

impl CkMatrix {
    pub fn matrix(&self) -> &ZeroOneMatrix {
        &self.0
    }
}

impl std::ops::Deref for CkMatrix {
    type Target = ZeroOneMatrix;

    fn deref(&self) -> &ZeroOneMatrix {
        &self.0
    }
}

impl fmt::Display for CkMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn validate_ck(m: &ZeroOneMatrix) -> Result<CkMatrix, MatrixError> {
    if !m.is_irreducible() {
        return Err(MatrixError::NotIrreducible);
    }
    if m.is_permutation() {
        return Err(MatrixError::IsPermutation);
    }
    Ok(CkMatrix(m.clone()))
}

impl TryFrom<ZeroOneMatrix> for CkMatrix {
    type Error = MatrixError;

    fn try_from(m: ZeroOneMatrix) -> Result<Self, MatrixError> {
        validate_ck(&m)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("c vector has {len} entries, expected {expected}")]
    BadCLength { len: usize, expected: usize },
    #[error("c entry {index} is {value}, expected 0 or 1")]
    BadCEntry { index: usize, value: u8 },
    #[error("no c_i = 1 among levels 1..={k}")]
    NoCofiniteRow { k: usize },
    #[error("base level K must be at least 1")]
    BadBaseLevel,
    #[error("tail does not cover level {0}")]
    TailNotCovered(usize),
    #[error("tail row for level {level} has {len} entries, expected {level}")]
    BadTailRow { level: usize, len: usize },
    #[error("tail declares {rows} rows but {cs} c values")]
    TailLengthMismatch { rows: usize, cs: usize },
    #[error("seed data does not match the {family} family: {detail}")]
    FamilyMismatch {
        family: &'static str,
        detail: String,
    },
    #[error("declared diagonally-right-stable tail but entry ({level},{level}) is {entry} while c_{level} = {c}")]
    DiagonalContradiction { level: usize, entry: u8, c: u8 },
    #[error("level {level} of the expanded matrix is invalid: {source}")]
    BadLevel { level: usize, source: MatrixError },
}

/// Tail rule producing row `n+1` and `c_{n+1}` for levels beyond the corner.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TailRule {
    /// Every row is all ones and every `c_i = 1` (the all-ones infinite
    /// matrix, base level 1).
    AllOnes,
    /// The dual pattern over a finite base matrix `A` of size `N`: the
    /// corner is `[[A^t | 1], [1 ... 1 | 1]]` with `K = N + 1`, every later
    /// row is `(1, ..., 1, 0, ..., 0)` with ones through column `N + 1`,
    /// and `c = (0, ..., 0, 1)`.
    Hat(CkMatrix),
    /// Base level 2 with corner `I_2`, `c = (1, 1)`; row `n` has ones at
    /// columns `n-2` and `n` for `n >= 3`.  Right stable but the diagonal
    /// condition fails at every level.
    PInfinity,
    /// Explicit rows for finitely many levels beyond the corner.
    Explicit(ExplicitTail),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExplicitTail {
    /// Row of level `K+1+i` at index `i`, full length `K+1+i`.
    pub rows: Vec<Vec<u8>>,
    /// Declared `c` value of each explicit row.
    pub c: Vec<u8>,
    /// Whether the seed asserts the diagonal condition beyond the covered
    /// depth; recorded in every report that relies on it.
    pub assumed_drs: bool,
}

/// How strongly the seed's tail certifies diagonal right stability and
/// local irreducibility.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DrsCertification {
    /// Closed-form family for which both hold at every level.
    ClosedForm,
    /// Explicit tail whose document asserts the hypothesis.
    Declared,
    /// Closed-form family known to violate the diagonal condition.
    RefutedDiagonal,
    /// Explicit tail without an assertion.
    Unchecked,
}

impl DrsCertification {
    pub fn certified_or_asserted(self) -> bool {
        matches!(
            self,
            DrsCertification::ClosedForm | DrsCertification::Declared
        )
    }
}

/// Finite description `(K, A_K, C_K, tail)` of an infinite right-stable
/// {0,1} matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableSeed {
    k: usize,
    a_k: ZeroOneMatrix,
    c: Vec<u8>,
    tail: TailRule,
}

/// A level matrix together with the row-type vector at that level.
#[derive(Clone, Debug)]
pub struct Level {
    pub matrix: ZeroOneMatrix,
    pub c: Vec<u8>,
}

impl StableSeed {
    pub fn new(
        k: usize,
        a_k: ZeroOneMatrix,
        c: Vec<u8>,
        tail: TailRule,
    ) -> Result<Self, SeedError> {
        if k == 0 {
            return Err(SeedError::BadBaseLevel);
        }
        if a_k.size() != k {
            return Err(SeedError::FamilyMismatch {
                family: "seed",
                detail: format!("corner is {}x{} but K = {}", a_k.size(), a_k.size(), k),
            });
        }
        if c.len() != k {
            return Err(SeedError::BadCLength {
                len: c.len(),
                expected: k,
            });
        }
        for (i, &v) in c.iter().enumerate() {
            if v > 1 {
                return Err(SeedError::BadCEntry {
                    index: i + 1,
                    value: v,
                });
            }
        }
        if !c.contains(&1) {
            return Err(SeedError::NoCofiniteRow { k });
        }
        let seed = StableSeed { k, a_k, c, tail };
        seed.validate_tail()?;
        Ok(seed)
    }

    /// The all-ones infinite matrix as a seed.
    pub fn all_ones() -> Self {
        StableSeed::new(1, ZeroOneMatrix::all_ones(1), vec![1], TailRule::AllOnes)
            .expect("canonical all-ones seed")
    }

    /// The two-cofinite-rows example with the shifted diagonal tail.
    pub fn p_infinity() -> Self {
        let corner = ZeroOneMatrix::new(vec![vec![1, 0], vec![0, 1]]).expect("I_2");
        StableSeed::new(2, corner, vec![1, 1], TailRule::PInfinity).expect("canonical seed")
    }

    fn validate_tail(&self) -> Result<(), SeedError> {
        match &self.tail {
            TailRule::AllOnes => {
                let ok = (0..self.k).all(|i| (0..self.k).all(|j| self.a_k.get(i, j) == 1))
                    && self.c.iter().all(|&v| v == 1);
                if !ok {
                    return Err(SeedError::FamilyMismatch {
                        family: "all-ones",
                        detail: "corner and c must be all ones".into(),
                    });
                }
            }
            TailRule::Hat(base) => {
                let n = base.size();
                if self.k != n + 1 {
                    return Err(SeedError::FamilyMismatch {
                        family: "hat",
                        detail: format!("K = {} but base has size {}", self.k, n),
                    });
                }
                let expected = hat_corner(base);
                if self.a_k != expected {
                    return Err(SeedError::FamilyMismatch {
                        family: "hat",
                        detail: "corner must be [[A^t | 1], [1 ... 1 | 1]]".into(),
                    });
                }
                let c_ok = self.c[..n].iter().all(|&v| v == 0) && self.c[n] == 1;
                if !c_ok {
                    return Err(SeedError::FamilyMismatch {
                        family: "hat",
                        detail: "c must be (0, ..., 0, 1)".into(),
                    });
                }
            }
            TailRule::PInfinity => {
                let corner = ZeroOneMatrix::new(vec![vec![1, 0], vec![0, 1]]).expect("I_2");
                if self.k != 2 || self.a_k != corner || self.c != vec![1, 1] {
                    return Err(SeedError::FamilyMismatch {
                        family: "p-infinity",
                        detail: "seed must be K=2, corner I_2, c=(1,1)".into(),
                    });
                }
            }
            TailRule::Explicit(tail) => {
                if tail.rows.len() != tail.c.len() {
                    return Err(SeedError::TailLengthMismatch {
                        rows: tail.rows.len(),
                        cs: tail.c.len(),
                    });
                }
                for (i, row) in tail.rows.iter().enumerate() {
                    let level = self.k + 1 + i;
                    if row.len() != level {
                        return Err(SeedError::BadTailRow {
                            level,
                            len: row.len(),
                        });
                    }
                    for (j, &v) in row.iter().enumerate() {
                        if v > 1 {
                            return Err(SeedError::Matrix(MatrixError::BadEntry {
                                row: level,
                                col: j + 1,
                                value: v,
                            }));
                        }
                    }
                    if tail.c[i] > 1 {
                        return Err(SeedError::BadCEntry {
                            index: level,
                            value: tail.c[i],
                        });
                    }
                    if tail.assumed_drs && row[level - 1] != tail.c[i] {
                        return Err(SeedError::DiagonalContradiction {
                            level,
                            entry: row[level - 1],
                            c: tail.c[i],
                        });
                    }
                }
                // every covered level must still be a legal {0,1} matrix
                if let Some(max) = self.max_covered_when_explicit() {
                    for n in self.k..=max {
                        self.expand(n)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn max_covered_when_explicit(&self) -> Option<usize> {
        match &self.tail {
            TailRule::Explicit(tail) => Some(self.k + tail.rows.len()),
            _ => None,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Short human-readable identifier used in reports.
    pub fn describe(&self) -> String {
        match &self.tail {
            TailRule::AllOnes => format!("all-ones (K={})", self.k),
            TailRule::Hat(base) => format!("hat of {}x{} (K={})", base.size(), base.size(), self.k),
            TailRule::PInfinity => format!("p-infinity (K={})", self.k),
            TailRule::Explicit(t) => format!(
                "explicit tail (K={}, covers {})",
                self.k,
                self.k + t.rows.len()
            ),
        }
    }

    pub fn corner(&self) -> &ZeroOneMatrix {
        &self.a_k
    }

    pub fn c(&self) -> &[u8] {
        &self.c
    }

    pub fn tail(&self) -> &TailRule {
        &self.tail
    }

    /// Whether the tail produces level `n`.
    pub fn covers(&self, n: usize) -> bool {
        n >= self.k
            && match &self.tail {
                TailRule::Explicit(tail) => n <= self.k + tail.rows.len(),
                _ => true,
            }
    }

    /// Largest covered level, `None` for the unbounded families.
    pub fn max_covered(&self) -> Option<usize> {
        self.max_covered_when_explicit()
    }

    fn tail_row(&self, level: usize) -> Result<(Vec<u8>, u8), SeedError> {
        debug_assert!(level > self.k);
        match &self.tail {
            TailRule::AllOnes => Ok((vec![1; level], 1)),
            TailRule::Hat(base) => {
                let mut row = vec![0; level];
                for entry in row.iter_mut().take(base.size() + 1) {
                    *entry = 1;
                }
                Ok((row, 0))
            }
            TailRule::PInfinity => {
                let mut row = vec![0; level];
                row[level - 3] = 1;
                row[level - 1] = 1;
                Ok((row, 0))
            }
            TailRule::Explicit(tail) => match tail.rows.get(level - self.k - 1) {
                Some(row) => Ok((row.clone(), tail.c[level - self.k - 1])),
                None => Err(SeedError::TailNotCovered(level)),
            },
        }
    }

    /// The level-`n` matrix `A_n` and row-type vector `(c_1, ..., c_n)`.
    ///
    /// Column `m+1` of each extension step is `(c_1, ..., c_m)` by right
    /// stability; row `m+1` comes from the tail rule.
    pub fn expand(&self, n: usize) -> Result<Level, SeedError> {
        if n < self.k {
            return Err(SeedError::TailNotCovered(n));
        }
        let mut rows = self.a_k.rows_vec();
        let mut c = self.c.clone();
        for level in self.k + 1..=n {
            for (i, row) in rows.iter_mut().enumerate() {
                row.push(c[i]);
            }
            let (row, cv) = self.tail_row(level)?;
            rows.push(row);
            c.push(cv);
        }
        let matrix =
            ZeroOneMatrix::new(rows).map_err(|source| SeedError::BadLevel { level: n, source })?;
        Ok(Level { matrix, c })
    }

    pub fn certification(&self) -> DrsCertification {
        match &self.tail {
            TailRule::AllOnes | TailRule::Hat(_) => DrsCertification::ClosedForm,
            TailRule::PInfinity => DrsCertification::RefutedDiagonal,
            TailRule::Explicit(tail) => {
                if tail.assumed_drs {
                    DrsCertification::Declared
                } else {
                    DrsCertification::Unchecked
                }
            }
        }
    }

    /// Re-declare an explicit tail as diagonally right stable.  Returns
    /// `false` when the tail is a closed-form family (nothing to assume)
    /// or the explicit data contradicts the diagonal condition.
    pub fn assume_drs_li(&mut self) -> bool {
        if !matches!(self.tail, TailRule::Explicit(_)) {
            return false;
        }
        let mut assumed = self.clone();
        if let TailRule::Explicit(t) = &mut assumed.tail {
            t.assumed_drs = true;
        }
        if assumed.validate_tail().is_err() {
            return false;
        }
        *self = assumed;
        true
    }

    /// Level-by-level property check down to depth `m` past the base level.
    pub fn check_properties(&self, depth: usize) -> Result<PropertyReport, SeedError> {
        let top = match self.max_covered() {
            Some(max) => max.min(self.k + depth),
            None => self.k + depth,
        };
        let deepest = self.expand(if self.covers(top + 1) { top + 1 } else { top })?;
        let mut levels = Vec::new();
        for n in self.k..=top {
            let level = self.expand(n)?;
            let dc = if deepest.matrix.size() > n {
                // diagonal condition at n: entry (n+1, n+1) equals c_{n+1}
                Some(deepest.matrix.get(n, n) == deepest.c[n])
            } else {
                None
            };
            levels.push(LevelCheck {
                level: n,
                irreducible: level.matrix.is_irreducible(),
                dc,
            });
        }

        let certificate = match &self.tail {
            TailRule::AllOnes | TailRule::Hat(_) => TailCertificate::DrsLiAllLevels,
            TailRule::PInfinity => TailCertificate::RsLiNotDc,
            TailRule::Explicit(tail) => TailCertificate::ExplicitDepth {
                assumed_drs: tail.assumed_drs,
            },
        };
        let dc_checked = levels.iter().all(|l| l.dc.unwrap_or(true));
        let dc = match certificate {
            TailCertificate::DrsLiAllLevels => true,
            TailCertificate::RsLiNotDc => false,
            TailCertificate::ExplicitDepth { .. } => dc_checked,
        };
        let li_up_to = levels.iter().rev().find(|l| l.irreducible).map(|l| l.level);
        let li_from = levels
            .iter()
            .rev()
            .take_while(|l| l.irreducible)
            .last()
            .map(|l| l.level);
        Ok(PropertyReport {
            k: self.k,
            rsf: true,
            rs: true,
            dc,
            drs: dc,
            li_up_to,
            li_from,
            levels,
            certificate,
        })
    }
}

/// The corner block `[[A^t | 1], [1 ... 1 | 1]]` of the hat family.
pub fn hat_corner(base: &ZeroOneMatrix) -> ZeroOneMatrix {
    let n = base.size();
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<u8> = (0..n).map(|j| base.get(j, i)).collect();
        row.push(1);
        rows.push(row);
    }
    rows.push(vec![1; n + 1]);
    ZeroOneMatrix::new(rows).expect("hat corner has no zero rows or columns")
}

/// Per-level outcome of the structural checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LevelCheck {
    pub level: usize,
    pub irreducible: bool,
    /// Diagonal condition at this level; `None` when the next level is not
    /// covered so the diagonal entry is unknown.
    pub dc: Option<bool>,
}

/// What the tail rule guarantees without any depth limit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TailCertificate {
    /// Diagonal right stability and local irreducibility hold at every
    /// level (all-ones and hat families).
    DrsLiAllLevels,
    /// Right stable and locally irreducible, diagonal condition fails at
    /// every level.
    RsLiNotDc,
    /// Properties known only to the covered depth; `assumed_drs` records a
    /// declared assumption beyond it.
    ExplicitDepth { assumed_drs: bool },
}

impl fmt::Display for TailCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailCertificate::DrsLiAllLevels => write!(f, "closed-form: (DRS)+(LI) hold for all n"),
            TailCertificate::RsLiNotDc => write!(f, "closed-form: (RS)+(LI), not (DC)"),
            TailCertificate::ExplicitDepth { assumed_drs: true } => {
                write!(f, "checked to covered depth; (DRS)+(LI) assumed beyond")
            }
            TailCertificate::ExplicitDepth { assumed_drs: false } => {
                write!(f, "checked to covered depth only")
            }
        }
    }
}

/// Structural report for a seed: row semi-finiteness and right stability
/// hold by representation, the diagonal condition and irreducibility are
/// checked per level and certified by the tail family where possible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropertyReport {
    pub k: usize,
    pub rsf: bool,
    pub rs: bool,
    pub dc: bool,
    pub drs: bool,
    /// Largest checked level with an irreducible matrix.
    pub li_up_to: Option<usize>,
    /// Start of the final run of irreducible levels among those checked.
    pub li_from: Option<usize>,
    pub levels: Vec<LevelCheck>,
    pub certificate: TailCertificate,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zo(rows: Vec<Vec<u8>>) -> ZeroOneMatrix {
        ZeroOneMatrix::new(rows).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_data() {
        assert_eq!(
            ZeroOneMatrix::new(vec![vec![1, 1], vec![1]]),
            Err(MatrixError::NotSquare {
                row: 2,
                len: 1,
                size: 2
            })
        );
        assert_eq!(
            ZeroOneMatrix::new(vec![vec![1, 2], vec![1, 1]]),
            Err(MatrixError::BadEntry {
                row: 1,
                col: 2,
                value: 2
            })
        );
        assert_eq!(
            ZeroOneMatrix::new(vec![vec![0, 0], vec![1, 1]]),
            Err(MatrixError::ZeroRow(1))
        );
        assert_eq!(
            ZeroOneMatrix::new(vec![vec![0, 1], vec![0, 1]]),
            Err(MatrixError::ZeroColumn(1))
        );
    }

    #[test]
    fn irreducibility() {
        assert!(zo(vec![vec![1]]).is_irreducible());
        assert!(zo(vec![vec![1, 1], vec![1, 1]]).is_irreducible());
        assert!(!zo(vec![vec![1, 0], vec![0, 1]]).is_irreducible());
        assert!(zo(vec![vec![0, 1], vec![1, 0]]).is_irreducible());
    }

    #[test]
    fn permutation() {
        assert!(zo(vec![vec![0, 1], vec![1, 0]]).is_permutation());
        assert!(!zo(vec![vec![1, 1], vec![1, 1]]).is_permutation());
        assert!(zo(vec![vec![1]]).is_permutation());
    }

    #[test]
    fn ck_validation() {
        assert!(validate_ck(&zo(vec![vec![1, 1], vec![1, 1]])).is_ok());
        assert_eq!(
            validate_ck(&zo(vec![vec![0, 1], vec![1, 0]])).unwrap_err(),
            MatrixError::IsPermutation
        );
        assert_eq!(
            validate_ck(&zo(vec![vec![1, 0], vec![0, 1]])).unwrap_err(),
            MatrixError::NotIrreducible
        );
        let a = zo(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]]);
        assert!(validate_ck(&a).is_ok());
    }

    #[test]
    fn all_ones_expansion() {
        let seed = StableSeed::all_ones();
        let level = seed.expand(3).unwrap();
        assert_eq!(level.matrix, ZeroOneMatrix::all_ones(3));
        assert_eq!(level.c, vec![1, 1, 1]);
    }

    #[test]
    fn hat_expansion() {
        let base = validate_ck(&ZeroOneMatrix::all_ones(2)).unwrap();
        let corner = hat_corner(&base);
        let seed = StableSeed::new(3, corner, vec![0, 0, 1], TailRule::Hat(base)).unwrap();
        let level = seed.expand(4).unwrap();
        assert_eq!(
            level.matrix,
            zo(vec![
                vec![1, 1, 1, 0],
                vec![1, 1, 1, 0],
                vec![1, 1, 1, 1],
                vec![1, 1, 1, 0],
            ])
        );
        assert_eq!(level.c, vec![0, 0, 1, 0]);
    }

    #[test]
    fn p_infinity_expansion() {
        let seed = StableSeed::p_infinity();
        let level = seed.expand(5).unwrap();
        assert_eq!(
            level.matrix,
            zo(vec![
                vec![1, 0, 1, 1, 1],
                vec![0, 1, 1, 1, 1],
                vec![1, 0, 1, 0, 0],
                vec![0, 1, 0, 1, 0],
                vec![0, 0, 1, 0, 1],
            ])
        );
        assert_eq!(level.c, vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn tower_coherence() {
        let base = validate_ck(&zo(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]])).unwrap();
        let corner = hat_corner(&base);
        let seeds = [
            StableSeed::all_ones(),
            StableSeed::p_infinity(),
            StableSeed::new(4, corner, vec![0, 0, 0, 1], TailRule::Hat(base)).unwrap(),
        ];
        for seed in &seeds {
            for n in seed.k()..seed.k() + 4 {
                let small = seed.expand(n).unwrap();
                let big = seed.expand(n + 1).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(small.matrix.get(i, j), big.matrix.get(i, j));
                    }
                }
                assert_eq!(&big.c[..n], &small.c[..]);
            }
        }
    }

    #[test]
    fn hat_c_has_single_one_at_base_level() {
        let base = validate_ck(&ZeroOneMatrix::all_ones(2)).unwrap();
        let seed =
            StableSeed::new(3, hat_corner(&base), vec![0, 0, 1], TailRule::Hat(base)).unwrap();
        let ones: Vec<usize> = seed
            .c()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(ones, vec![seed.k()]);
    }

    #[test]
    fn all_ones_properties() {
        let report = StableSeed::all_ones().check_properties(3).unwrap();
        assert!(report.rs && report.dc && report.drs);
        assert_eq!(report.certificate, TailCertificate::DrsLiAllLevels);
        assert!(report
            .levels
            .iter()
            .all(|l| l.irreducible && l.dc == Some(true)));
    }

    #[test]
    fn hat_properties() {
        let base = validate_ck(&zo(vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 0, 0]])).unwrap();
        let seed =
            StableSeed::new(4, hat_corner(&base), vec![0, 0, 0, 1], TailRule::Hat(base)).unwrap();
        let report = seed.check_properties(3).unwrap();
        assert!(report.drs);
        assert_eq!(report.certificate, TailCertificate::DrsLiAllLevels);
        assert!(report
            .levels
            .iter()
            .all(|l| l.irreducible && l.dc == Some(true)));
    }

    #[test]
    fn p_infinity_properties() {
        let report = StableSeed::p_infinity().check_properties(6).unwrap();
        assert!(report.rs);
        assert!(!report.dc);
        assert!(!report.drs);
        assert_eq!(report.certificate, TailCertificate::RsLiNotDc);
        assert!(report.levels.iter().all(|l| l.dc == Some(false)));
        // irreducible from level 4 on; levels 2 and 3 are not
        assert_eq!(report.li_from, Some(4));
        for l in &report.levels {
            assert_eq!(l.irreducible, l.level >= 4, "level {}", l.level);
        }
    }

    #[test]
    fn drs_without_li() {
        // two isolated loops next to an all-ones block: diagonally right
        // stable but never irreducible
        let corner = zo(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let tail = TailRule::Explicit(ExplicitTail {
            rows: vec![
                vec![0, 0, 1, 1],
                vec![0, 0, 1, 1, 1],
                vec![0, 0, 1, 1, 1, 1],
            ],
            c: vec![1, 1, 1],
            assumed_drs: true,
        });
        let seed = StableSeed::new(3, corner, vec![0, 0, 1], tail).unwrap();
        let report = seed.check_properties(3).unwrap();
        assert!(report.drs);
        assert!(report.levels.iter().all(|l| !l.irreducible));
        assert_eq!(report.li_up_to, None);
    }

    #[test]
    fn explicit_tail_boundaries() {
        let corner = zo(vec![vec![1, 1], vec![1, 1]]);
        let tail = TailRule::Explicit(ExplicitTail {
            rows: vec![vec![1, 0, 1]],
            c: vec![1],
            assumed_drs: true,
        });
        let seed = StableSeed::new(2, corner, vec![1, 1], tail).unwrap();
        assert!(seed.covers(3));
        assert!(!seed.covers(4));
        assert_eq!(seed.expand(4).unwrap_err(), SeedError::TailNotCovered(4));
    }

    #[test]
    fn explicit_diagonal_contradiction_is_rejected() {
        let corner = zo(vec![vec![1, 1], vec![1, 1]]);
        let tail = TailRule::Explicit(ExplicitTail {
            rows: vec![vec![1, 0, 0]],
            c: vec![1],
            assumed_drs: true,
        });
        assert_eq!(
            StableSeed::new(2, corner, vec![1, 1], tail).unwrap_err(),
            SeedError::DiagonalContradiction {
                level: 3,
                entry: 0,
                c: 1
            }
        );
    }

    #[test]
    fn seed_requires_a_cofinite_row() {
        let corner = zo(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(
            StableSeed::new(
                2,
                corner,
                vec![0, 0],
                TailRule::Explicit(ExplicitTail {
                    rows: vec![],
                    c: vec![],
                    assumed_drs: false,
                })
            )
            .unwrap_err(),
            SeedError::NoCofiniteRow { k: 2 }
        );
    }
}
