//! The symbolic lattice of equivariant monomial-prime sums.
//!
//! For arity n, the primes are p_i = (x_{jk} : 1 ≤ j ≤ n−i) for
//! i = 0,…,n (so p_n = 0 and p_0 is generated by every variable). Every
//! proper equivariant ideal is a finite sum Σ p_{i_t}^{a_t} with a unique
//! canonical form: indices strictly decreasing, exponents strictly
//! increasing, dominated terms dropped (p_i^a ⊆ p_j^b exactly when j ≤ i
//! and b ≤ a). A truncated monomial realization provides an independent
//! membership oracle for every lattice law.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum IdealError {
    #[error("index {0} out of range 0..={1}")]
    IndexOutOfRange(u32, u32),
    #[error("exponent must be ≥ 1")]
    ZeroExponent,
    #[error("mixed arities: {0} vs {1}")]
    ArityMismatch(usize, usize),
}

/// An equivariant ideal of the arity-n polynomial ring in canonical form.
///
/// `Sum` terms are (index, exponent) pairs with indices strictly decreasing
/// and exponents strictly increasing; the empty sum is the zero ideal.
/// `Unit` is the whole ring, kept out of the classified lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PIdeal {
    Unit { n: usize },
    Sum { n: usize, terms: Vec<(u32, u32)> },
}

impl PIdeal {
    pub fn zero(n: usize) -> Self {
        PIdeal::Sum { n, terms: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        PIdeal::Unit { n }
    }

    /// The prime p_i (the zero ideal when i = n).
    pub fn prime(n: usize, i: u32) -> Result<Self, IdealError> {
        canonicalize(n, &[(i, 1)])
    }

    pub fn arity(&self) -> usize {
        match self {
            PIdeal::Unit { n } | PIdeal::Sum { n, .. } => *n,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PIdeal::Sum { terms, .. } if terms.is_empty())
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, PIdeal::Unit { .. })
    }

    /// Canonical terms; empty for the zero ideal. Panics on the unit ideal,
    /// which has no classified term form.
    pub fn terms(&self) -> &[(u32, u32)] {
        match self {
            PIdeal::Sum { terms, .. } => terms,
            PIdeal::Unit { .. } => panic!("unit ideal has no term form"),
        }
    }
}

impl fmt::Display for PIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PIdeal::Unit { .. } => write!(f, "unit"),
            PIdeal::Sum { terms, .. } => {
                write!(f, "[")?;
                for (t, (i, a)) in terms.iter().enumerate() {
                    if t > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "({i},{a})")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl Serialize for PIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PIdeal::Unit { .. } => s.serialize_str("unit"),
            PIdeal::Sum { terms, .. } => {
                let mut seq = s.serialize_seq(Some(terms.len()))?;
                for (i, a) in terms {
                    seq.serialize_element(&[i, a])?;
                }
                seq.end()
            }
        }
    }
}

/// Canonicalize a raw list of (index, exponent) power terms.
///
/// Terms with index n are dropped (p_n = 0); a term is dropped whenever
/// another kept term dominates it (smaller-or-equal index and exponent).
pub fn canonicalize(n: usize, raw: &[(u32, u32)]) -> Result<PIdeal, IdealError> {
    for &(i, a) in raw {
        if i as usize > n {
            return Err(IdealError::IndexOutOfRange(i, n as u32));
        }
        if a == 0 {
            return Err(IdealError::ZeroExponent);
        }
    }
    let live: Vec<(u32, u32)> = raw.iter().copied().filter(|&(i, _)| (i as usize) < n).collect();
    let mut kept: Vec<(u32, u32)> = Vec::new();
    for &(i, a) in &live {
        // p_i^a ⊆ p_j^b iff j ≤ i and b ≤ a: skip dominated, evict what the
        // new term dominates.
        if live.iter().any(|&(j, b)| (j, b) != (i, a) && j <= i && b <= a && !(j == i && b == a)) {
            continue;
        }
        if !kept.contains(&(i, a)) {
            kept.push((i, a));
        }
    }
    // Duplicates of an undominated term: the filter above keeps them all
    // equal, and `contains` dedup'd. Sort into canonical order.
    kept.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    // Canonical form sanity: strictly decreasing indices force strictly
    // increasing exponents once domination is gone.
    debug_assert!(kept.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 < w[1].1));
    Ok(PIdeal::Sum { n, terms: kept })
}

/// I + J, canonicalized. The unit ideal absorbs.
pub fn sum(i: &PIdeal, j: &PIdeal) -> Result<PIdeal, IdealError> {
    if i.arity() != j.arity() {
        return Err(IdealError::ArityMismatch(i.arity(), j.arity()));
    }
    if i.is_unit() || j.is_unit() {
        return Ok(PIdeal::unit(i.arity()));
    }
    let mut raw = i.terms().to_vec();
    raw.extend_from_slice(j.terms());
    canonicalize(i.arity(), &raw)
}

/// Is J ⊆ I? Every term of J must be dominated by a term of I.
pub fn contains(i: &PIdeal, j: &PIdeal) -> Result<bool, IdealError> {
    if i.arity() != j.arity() {
        return Err(IdealError::ArityMismatch(i.arity(), j.arity()));
    }
    match (i, j) {
        (PIdeal::Unit { .. }, _) => Ok(true),
        (_, PIdeal::Unit { .. }) => Ok(false),
        (PIdeal::Sum { terms: ti, .. }, PIdeal::Sum { terms: tj, .. }) => {
            Ok(tj.iter().all(|&(ij, aj)| ti.iter().any(|&(ii, ai)| ii <= ij && ai <= aj)))
        }
    }
}

/// √I: the prime at the smallest occurring index (zero for zero, unit for
/// unit).
pub fn radical(i: &PIdeal) -> PIdeal {
    match i {
        PIdeal::Unit { n } => PIdeal::unit(*n),
        PIdeal::Sum { n, terms } => match terms.iter().map(|&(idx, _)| idx).min() {
            None => PIdeal::zero(*n),
            Some(min) => PIdeal::Sum { n: *n, terms: vec![(min, 1)] },
        },
    }
}

/// Is I prime? Exactly the single first-power terms and the zero ideal.
pub fn is_prime(i: &PIdeal) -> bool {
    match i {
        PIdeal::Unit { .. } => false,
        PIdeal::Sum { terms, .. } => {
            terms.is_empty() || (terms.len() == 1 && terms[0].1 == 1)
        }
    }
}

/// The full prime chain 0 = p_n ⊊ p_{n−1} ⊊ ⋯ ⊊ p_0, length n+1.
pub fn prime_chain(n: usize) -> Vec<PIdeal> {
    (0..=n as u32).rev().map(|i| PIdeal::prime(n, i).expect("index in range")).collect()
}

// ---------------------------------------------------------------------------
// Monomial realization
// ---------------------------------------------------------------------------

/// A monomial in the truncated variable grid x_{ij}: exponent by (row,
/// column), 1-based, zero entries absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub BTreeMap<(u32, u32), u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(row: u32, col: u32) -> Self {
        Monomial(BTreeMap::from([((row, col), 1)]))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    /// Total exponent over rows 1..=row.
    pub fn degree_in_rows_up_to(&self, row: u32) -> u32 {
        self.0.iter().filter(|((r, _), _)| *r <= row).map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&key, &e) in &other.0 {
            *out.entry(key).or_insert(0) += e;
        }
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (idx, ((r, c), e)) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "x[{r},{c}]")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial membership: m ∈ Σ p_{i_t}^{a_t} iff some term satisfies
/// deg of m within rows 1..=n−i_t ≥ a_t (sums of monomial ideals test
/// termwise on monomials).
pub fn monomial_in(ideal: &PIdeal, m: &Monomial) -> bool {
    match ideal {
        PIdeal::Unit { .. } => true,
        PIdeal::Sum { n, terms } => terms
            .iter()
            .any(|&(i, a)| m.degree_in_rows_up_to(*n as u32 - i) >= a),
    }
}

/// All monomials of degree ≤ max_deg in the n×k variable grid, in
/// deterministic order.
pub fn monomials_up_to(n: usize, k: usize, max_deg: u32) -> Vec<Monomial> {
    let vars: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|r| (1..=k as u32).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<((u32, u32), u32)> = Vec::new();
    fn rec(
        pos: usize,
        remaining: u32,
        vars: &[(u32, u32)],
        current: &mut Vec<((u32, u32), u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == vars.len() {
            out.push(Monomial(current.iter().copied().collect()));
            return;
        }
        for e in 0..=remaining {
            if e > 0 {
                current.push((vars[pos], e));
            }
            rec(pos + 1, remaining - e, vars, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(0, max_deg, &vars, &mut current, &mut out);
    out.sort();
    out
}

/// The truncated realization: monomials of degree ≤ max_deg lying in I.
pub fn monomial_realize(ideal: &PIdeal, k: usize, max_deg: u32) -> BTreeSet<Monomial> {
    monomials_up_to(ideal.arity(), k, max_deg)
        .into_iter()
        .filter(|m| monomial_in(ideal, m))
        .collect()
}

/// Every canonical proper ideal of arity n with all exponents ≤ max_exp
/// (zero included, unit excluded), in deterministic order.
pub fn enumerate_canonical(n: usize, max_exp: u32) -> Vec<PIdeal> {
    // Choose a strictly decreasing index sequence and a strictly increasing
    // exponent sequence of equal length.
    let mut out = vec![PIdeal::zero(n)];
    let indices: Vec<u32> = (0..n as u32).rev().collect(); // n−1, …, 0 descending
    fn rec(
        n: usize,
        start: usize,
        indices: &[u32],
        min_exp: u32,
        max_exp: u32,
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<PIdeal>,
    ) {
        for pos in start..indices.len() {
            for e in min_exp..=max_exp {
                current.push((indices[pos], e));
                out.push(PIdeal::Sum { n, terms: current.clone() });
                rec(n, pos + 1, indices, e + 1, max_exp, current, out);
                current.pop();
            }
        }
    }
    let mut current = Vec::new();
    rec(n, 0, &indices, 1, max_exp, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_examples() {
        let n = 2;
        assert_eq!(canonicalize(n, &[(1, 3), (0, 1)]).unwrap().terms(), &[(0, 1)]);
        assert_eq!(
            canonicalize(n, &[(1, 1), (0, 3)]).unwrap().terms(),
            &[(1, 1), (0, 3)]
        );
        assert!(canonicalize(n, &[]).unwrap().is_zero());
        // p_n = 0 drops out.
        assert_eq!(canonicalize(n, &[(2, 5), (0, 1)]).unwrap().terms(), &[(0, 1)]);
        assert_eq!(
            canonicalize(n, &[(3, 1)]),
            Err(IdealError::IndexOutOfRange(3, 2))
        );
        assert_eq!(canonicalize(n, &[(0, 0)]), Err(IdealError::ZeroExponent));
    }

    #[test]
    fn canonicalize_is_idempotent_exhaustively() {
        for n in 1..=3 {
            for ideal in enumerate_canonical(n, 3) {
                let again = canonicalize(n, ideal.terms()).unwrap();
                assert_eq!(again, ideal);
            }
        }
    }

    #[test]
    fn sum_examples() {
        let n = 2;
        let p1 = PIdeal::prime(n, 1).unwrap();
        let p0_cubed = canonicalize(n, &[(0, 3)]).unwrap();
        let zero = PIdeal::zero(n);
        assert_eq!(sum(&p1, &zero).unwrap(), p1);
        assert_eq!(sum(&p1, &p0_cubed).unwrap().terms(), &[(1, 1), (0, 3)]);
        assert_eq!(sum(&p1, &p1).unwrap(), p1);
        let unit = PIdeal::unit(n);
        assert_eq!(sum(&p1, &unit).unwrap(), unit);
    }

    #[test]
    fn contains_examples() {
        let n = 2;
        let p0 = PIdeal::prime(n, 0).unwrap();
        let p1 = PIdeal::prime(n, 1).unwrap();
        let p0_cubed = canonicalize(n, &[(0, 3)]).unwrap();
        assert_eq!(contains(&p0, &p1), Ok(true));
        assert_eq!(contains(&p1, &p0_cubed), Ok(false));
        assert_eq!(contains(&p1, &p1), Ok(true));
        assert_eq!(contains(&PIdeal::unit(n), &p0), Ok(true));
        assert_eq!(contains(&p0, &PIdeal::unit(n)), Ok(false));
    }

    #[test]
    fn radical_examples() {
        let n = 2;
        assert_eq!(
            radical(&canonicalize(n, &[(0, 3)]).unwrap()),
            PIdeal::prime(n, 0).unwrap()
        );
        assert_eq!(
            radical(&canonicalize(n, &[(1, 2), (0, 5)]).unwrap()),
            PIdeal::prime(n, 0).unwrap()
        );
        assert_eq!(radical(&PIdeal::zero(n)), PIdeal::zero(n));
    }

    #[test]
    fn is_prime_examples() {
        let n = 2;
        assert!(is_prime(&PIdeal::prime(n, 1).unwrap()));
        assert!(!is_prime(&canonicalize(n, &[(0, 2)]).unwrap()));
        assert!(!is_prime(&canonicalize(n, &[(1, 1), (0, 3)]).unwrap()));
        assert!(is_prime(&PIdeal::zero(n)));
        assert!(!is_prime(&PIdeal::unit(n)));
    }

    #[test]
    fn prime_chain_shape() {
        let chain = prime_chain(1);
        assert_eq!(chain.len(), 2);
        assert!(chain[0].is_zero());
        assert_eq!(chain[1].terms(), &[(0, 1)]);
        let chain = prime_chain(3);
        assert_eq!(chain.len(), 4);
        for w in chain.windows(2) {
            assert_eq!(contains(&w[1], &w[0]), Ok(true));
            assert_eq!(contains(&w[0], &w[1]), Ok(false));
        }
    }

    #[test]
    fn monomial_realize_examples() {
        assert!(monomial_realize(&PIdeal::zero(2), 2, 2).is_empty());
        let p0 = PIdeal::prime(2, 0).unwrap();
        let deg1: Vec<Monomial> =
            monomial_realize(&p0, 3, 1).into_iter().collect();
        assert_eq!(deg1.len(), 2 * 3); // all k·n variables
        assert!(deg1.iter().all(|m| m.degree() == 1));
        // p_1^2 with n=2, k=1, D=2: only x_{11}^2.
        let p1_sq = canonicalize(2, &[(1, 2)]).unwrap();
        let got = monomial_realize(&p1_sq, 1, 2);
        let expect: BTreeSet<Monomial> =
            [Monomial(BTreeMap::from([((1, 1), 2)]))].into_iter().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn canonical_witness_for_non_domination() {
        // x_{n,1}^3 ∈ p_0^3 but ∉ p_1, witnessing that [(1,1),(0,3)] does
        // not collapse.
        let n = 2;
        let m = Monomial(BTreeMap::from([((2, 1), 3)]));
        let p0_cubed = canonicalize(n, &[(0, 3)]).unwrap();
        let p1 = PIdeal::prime(n, 1).unwrap();
        assert!(monomial_in(&p0_cubed, &m));
        assert!(!monomial_in(&p1, &m));
    }

    #[test]
    fn serializes_as_pairs() {
        let i = canonicalize(2, &[(1, 1), (0, 3)]).unwrap();
        assert_eq!(serde_json::to_string(&i).unwrap(), "[[1,1],[0,3]]");
        assert_eq!(serde_json::to_string(&PIdeal::zero(2)).unwrap(), "[]");
        assert_eq!(i.to_string(), "[(1,1),(0,3)]");
    }

    #[test]
    fn enumerate_canonical_counts() {
        // n=1: zero plus (0,e) for e ≤ 3.
        assert_eq!(enumerate_canonical(1, 3).len(), 4);
        // Every enumerated ideal is in canonical form already.
        for n in 1..=3 {
            for i in enumerate_canonical(n, 3) {
                assert_eq!(canonicalize(n, i.terms()).unwrap(), i);
            }
        }
    }
}
