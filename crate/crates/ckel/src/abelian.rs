//! Finitely generated abelian groups, marked elements, and the two-group
//! invariant that compares marked pairs.
//!
//! A group is stored in its normal form (free rank plus ascending
//! divisibility chain of invariant factors), so isomorphism is equality.
//! A marked group keeps its raw presentation `(M, v)` alongside the
//! canonical coordinates of the marked element; the quotient by the element
//! is then the cokernel of `[M | v]`, one extra relation column.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::intmat::{cokernel_presentation, CokernelQuotient, IntMatrix};

/// Normal form of a finitely generated abelian group.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    /// Factors equal to 1 are dropped; the rest must form an ascending
    /// divisibility chain of integers at least 2.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        let torsion: Vec<BigInt> = torsion.into_iter().filter(|d| !d.is_one()).collect();
        for d in &torsion {
            assert!(*d >= BigInt::from(2), "torsion factor {d} below 2");
        }
        for w in torsion.windows(2) {
            assert!(
                w[1].mod_floor(&w[0]).is_zero(),
                "torsion chain broken: {} does not divide {}",
                w[0],
                w[1]
            );
        }
        FgAbelianGroup { free_rank, torsion }
    }

    pub fn trivial() -> Self {
        FgAbelianGroup::new(0, vec![])
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup::new(rank, vec![])
    }

    pub fn cyclic(order: u64) -> Self {
        FgAbelianGroup::new(0, vec![BigInt::from(order)])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Normal form of the direct sum; the merged torsion chain is recovered
    /// by diagonalizing the block-diagonal relation matrix.
    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let all: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let n = all.len();
        let diag = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                all[i].clone()
            } else {
                BigInt::zero()
            }
        });
        let merged = cokernel_presentation(&diag).group().torsion().to_vec();
        FgAbelianGroup::new(self.free_rank + other.free_rank, merged)
    }
}

/// Groups in normal form are isomorphic exactly when they are equal.
pub fn groups_isomorphic(g: &FgAbelianGroup, h: &FgAbelianGroup) -> bool {
    g == h
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" (+) "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseGroupError {
    #[error("unrecognized group term {0:?}")]
    BadTerm(String),
    #[error("torsion factors do not form a divisibility chain")]
    BadChain,
}

impl FromStr for FgAbelianGroup {
    type Err = ParseGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(FgAbelianGroup::trivial());
        }
        let mut free_rank = 0usize;
        let mut torsion: Vec<BigInt> = Vec::new();
        for term in s.split(" (+) ") {
            let term = term.trim();
            if term == "Z" {
                free_rank += 1;
            } else if let Some(r) = term.strip_prefix("Z^") {
                free_rank += r
                    .parse::<usize>()
                    .map_err(|_| ParseGroupError::BadTerm(term.to_string()))?;
            } else if let Some(d) = term.strip_prefix("Z/") {
                let d = d
                    .parse::<BigInt>()
                    .map_err(|_| ParseGroupError::BadTerm(term.to_string()))?;
                if d < BigInt::from(2) {
                    return Err(ParseGroupError::BadTerm(term.to_string()));
                }
                torsion.push(d);
            } else {
                return Err(ParseGroupError::BadTerm(term.to_string()));
            }
        }
        for w in torsion.windows(2) {
            if !w[1].mod_floor(&w[0]).is_zero() {
                return Err(ParseGroupError::BadChain);
            }
        }
        Ok(FgAbelianGroup::new(free_rank, torsion))
    }
}

/// Order of a group element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// A finitely generated abelian group with a distinguished element, both
/// remembered through the presentation they came from.
#[derive(Clone, Debug)]
pub struct MarkedGroup {
    quotient: CokernelQuotient,
    element: Vec<BigInt>,
    relations: IntMatrix,
    raw: Vec<BigInt>,
}

impl MarkedGroup {
    /// Group `Z^rows / image(relations)` marked with the class of `marked`.
    pub fn from_presentation(relations: IntMatrix, marked: Vec<BigInt>) -> Self {
        assert_eq!(
            marked.len(),
            relations.rows(),
            "marked vector length mismatch"
        );
        let quotient = cokernel_presentation(&relations);
        let element = quotient.class_of(&marked);
        MarkedGroup {
            quotient,
            element,
            relations,
            raw: marked,
        }
    }

    pub fn group(&self) -> &FgAbelianGroup {
        self.quotient.group()
    }

    /// Canonical coordinates of the marked element: one entry per torsion
    /// factor (reduced mod that factor) followed by one per free generator.
    pub fn element(&self) -> &[BigInt] {
        &self.element
    }

    pub fn presentation(&self) -> (&IntMatrix, &[BigInt]) {
        (&self.relations, &self.raw)
    }

    pub fn quotient_data(&self) -> &CokernelQuotient {
        &self.quotient
    }

    pub fn mark_is_zero(&self) -> bool {
        self.element.iter().all(Zero::is_zero)
    }

    /// Smallest `n >= 1` with `n * element == 0`, infinite when a free
    /// coordinate is nonzero.
    pub fn element_order(&self) -> ElementOrder {
        let torsion = self.group().torsion();
        let (tor_coords, free_coords) = self.element.split_at(torsion.len());
        if free_coords.iter().any(|x| !x.is_zero()) {
            return ElementOrder::Infinite;
        }
        let mut order = BigInt::one();
        for (d, x) in torsion.iter().zip(tor_coords) {
            let coord_order = d / d.gcd(x);
            order = order.lcm(&coord_order);
        }
        ElementOrder::Finite(order)
    }

    /// The group modulo the cyclic subgroup generated by the marked element,
    /// realized by adjoining the raw vector as an extra relation column.
    pub fn quotient_by_element(&self) -> FgAbelianGroup {
        cokernel_presentation(&self.relations.with_column(&self.raw))
            .group()
            .clone()
    }

    /// `(group, group / <element>)`.
    pub fn pair_invariant(&self) -> (FgAbelianGroup, FgAbelianGroup) {
        (self.group().clone(), self.quotient_by_element())
    }
}

/// Componentwise agreement of the two-group invariants.
///
/// For the marked groups arising from Cuntz-Krieger data this decides the
/// isomorphism class of the pair; for arbitrary marked pairs it is only a
/// necessary condition.
pub fn pairs_equivalent(p: &MarkedGroup, q: &MarkedGroup) -> bool {
    let (pg, pq) = p.pair_invariant();
    let (qg, qq) = q.pair_invariant();
    groups_isomorphic(&pg, &qg) && groups_isomorphic(&pq, &qq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn isomorphism_is_normal_form_equality() {
        assert!(groups_isomorphic(
            &FgAbelianGroup::free(1),
            &FgAbelianGroup::free(1)
        ));
        assert!(groups_isomorphic(
            &FgAbelianGroup::cyclic(2),
            &FgAbelianGroup::cyclic(2)
        ));
        assert!(!groups_isomorphic(
            &FgAbelianGroup::cyclic(2),
            &FgAbelianGroup::trivial()
        ));
        assert!(!groups_isomorphic(
            &FgAbelianGroup::free(1),
            &FgAbelianGroup::cyclic(2)
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(1).to_string(), "Z");
        assert_eq!(FgAbelianGroup::free(3).to_string(), "Z^3");
        assert_eq!(
            FgAbelianGroup::new(2, vec![big(2), big(6)]).to_string(),
            "Z^2 (+) Z/2 (+) Z/6"
        );
    }

    #[test]
    fn rendering_round_trips() {
        let samples = [
            FgAbelianGroup::trivial(),
            FgAbelianGroup::free(1),
            FgAbelianGroup::free(5),
            FgAbelianGroup::cyclic(2),
            FgAbelianGroup::new(1, vec![big(3), big(12)]),
        ];
        for g in samples {
            assert_eq!(g.to_string().parse::<FgAbelianGroup>().unwrap(), g);
        }
    }

    #[test]
    fn direct_sum_renormalizes() {
        // Z/2 + Z/3 = Z/6, and Z/2 + Z/2 stays a chain
        let s = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(3));
        assert_eq!(s, FgAbelianGroup::cyclic(6));
        let t = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(2));
        assert_eq!(t, FgAbelianGroup::new(0, vec![big(2), big(2)]));
        let u =
            FgAbelianGroup::new(1, vec![big(4)]).direct_sum(&FgAbelianGroup::new(2, vec![big(6)]));
        assert_eq!(u, FgAbelianGroup::new(3, vec![big(2), big(12)]));
    }

    fn ck_marked(rows: Vec<Vec<i64>>, v: Vec<i64>) -> MarkedGroup {
        MarkedGroup::from_presentation(
            IntMatrix::from_rows(rows),
            v.into_iter().map(BigInt::from).collect(),
        )
    }

    #[test]
    fn order_of_zero_is_one() {
        let p = ck_marked(vec![vec![2]], vec![0]);
        assert_eq!(p.element_order(), ElementOrder::Finite(big(1)));
        assert!(p.mark_is_zero());
    }

    #[test]
    fn order_two_class() {
        // class of (1,1,1) in coker(I_3 - A^t) = Z/2 for the separating example
        let p = ck_marked(
            vec![vec![0, -1, -1], vec![-1, 0, 0], vec![-1, -1, 1]],
            vec![1, 1, 1],
        );
        assert_eq!(p.group(), &FgAbelianGroup::cyclic(2));
        assert_eq!(p.element_order(), ElementOrder::Finite(big(2)));
    }

    #[test]
    fn free_generator_has_infinite_order() {
        let p = ck_marked(vec![Vec::new()], vec![1]);
        assert_eq!(p.group(), &FgAbelianGroup::free(1));
        assert_eq!(p.element_order(), ElementOrder::Infinite);
    }

    #[test]
    fn quotient_by_generator_of_z() {
        let p = ck_marked(vec![Vec::new()], vec![1]);
        assert!(p.quotient_by_element().is_trivial());
    }

    #[test]
    fn separating_pair_invariants() {
        // A = [[1,1,1],[1,1,1],[1,0,0]] and B = A^t give (Z/2, 0) and (Z/2, Z/2)
        let a = ck_marked(
            vec![vec![0, -1, -1], vec![-1, 0, 0], vec![-1, -1, 1]],
            vec![1, 1, 1],
        );
        let b = ck_marked(
            vec![vec![0, -1, -1], vec![-1, 0, -1], vec![-1, 0, 1]],
            vec![1, 1, 1],
        );
        assert_eq!(
            a.pair_invariant(),
            (FgAbelianGroup::cyclic(2), FgAbelianGroup::trivial())
        );
        assert_eq!(
            b.pair_invariant(),
            (FgAbelianGroup::cyclic(2), FgAbelianGroup::cyclic(2))
        );
        assert!(!pairs_equivalent(&a, &b));
        assert!(pairs_equivalent(&a, &a));
    }

    #[test]
    fn negated_mark_is_equivalent() {
        let g = ck_marked(vec![vec![4, 0], vec![0, 0]], vec![1, 2]);
        let neg = ck_marked(vec![vec![4, 0], vec![0, 0]], vec![-1, -2]);
        assert!(pairs_equivalent(&g, &neg));
    }

    mod properties {
        use proptest::prelude::*;

        use super::*;

        fn chain() -> impl Strategy<Value = Vec<BigInt>> {
            proptest::collection::vec(2u64..=6, 0..4).prop_map(|steps| {
                let mut factors = Vec::new();
                let mut current = BigInt::from(1);
                for step in steps {
                    current *= BigInt::from(step);
                    factors.push(current.clone());
                }
                factors
            })
        }

        proptest! {
            #[test]
            fn rendering_round_trips(rank in 0usize..4, torsion in chain()) {
                let g = FgAbelianGroup::new(rank, torsion);
                prop_assert_eq!(g.to_string().parse::<FgAbelianGroup>().unwrap(), g);
            }

            #[test]
            fn direct_sum_is_commutative_and_ranked(
                rank_a in 0usize..3, torsion_a in chain(),
                rank_b in 0usize..3, torsion_b in chain(),
            ) {
                let a = FgAbelianGroup::new(rank_a, torsion_a);
                let b = FgAbelianGroup::new(rank_b, torsion_b);
                let ab = a.direct_sum(&b);
                prop_assert_eq!(&ab, &b.direct_sum(&a));
                prop_assert_eq!(ab.free_rank(), a.free_rank() + b.free_rank());
                prop_assert_eq!(ab.torsion_order(), a.torsion_order() * b.torsion_order());
            }
        }
    }
}
