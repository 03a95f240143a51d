//! Enhanced Hilbert series as truncated exponential generating functions in
//! the doubly-indexed variables t_{ij}, and the Grothendieck classes of
//! truncated modules as a free rank-(n+1) module over the tensor-symmetric
//! functions.
//!
//! The series of a module records Tr(c_μ | M)·t^μ/μ! over cycle-type tuples
//! μ; variable row i corresponds to tuple component i (the graded piece
//! V_{(n−i+1)}).  The class of a module is a vector of n+1 symmetric-function
//! coefficients (p_0, …, p_n), with series p_0 + Σ_d p_d·exp(T_d).

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};
use thiserror::Error;

use crate::linalg::{rank, sparse_row};
use crate::partition::{factorial, lambda_factorial, partition_tuples_up_to, CycleTypeTuple};
use crate::symfunc::{SymFuncError, TensorSymElt};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HilbertError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
    #[error("truncation too small: need at least {needed}, have {have}")]
    TruncationTooSmall { needed: u32, have: u32 },
    #[error("level {d} outside 0..={n}")]
    LevelOutOfRange { d: usize, n: usize },
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

/// A finitely supported exponent matrix: entry (i, j) ↦ e_{ij} records the
/// exponent of the variable t_{ij} (row i ≥ 1, part j ≥ 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ExpMatrix {
    entries: BTreeMap<(u32, u32), u32>,
}

impl ExpMatrix {
    pub fn empty() -> Self {
        ExpMatrix::default()
    }

    pub fn variable(i: u32, j: u32) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((i, j), 1);
        ExpMatrix { entries }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((u32, u32), u32)>) -> Self {
        let entries = entries.into_iter().filter(|&(_, e)| e > 0).collect();
        ExpMatrix { entries }
    }

    /// e_{ij} = the multiplicity of the part j in the i-th cycle type, so
    /// that t^μ = Π t_{ij}^{e_{ij}}.
    pub fn from_cycle_type(mu: &CycleTypeTuple) -> Self {
        let mut entries = BTreeMap::new();
        for (i, comp) in mu.components().iter().enumerate() {
            for &j in comp.parts() {
                *entries.entry((i as u32 + 1, j)).or_insert(0) += 1;
            }
        }
        ExpMatrix { entries }
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u32> {
        &self.entries
    }

    /// size(e) = Σ j·e_{ij}: the size of the underlying cycle type.
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|(&(_, j), &e)| j * e).sum()
    }

    pub fn max_row(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    fn mul(&self, other: &ExpMatrix) -> ExpMatrix {
        let mut entries = self.entries.clone();
        for (&key, &e) in &other.entries {
            *entries.entry(key).or_insert(0) += e;
        }
        ExpMatrix { entries }
    }
}

impl fmt::Display for ExpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        for (pos, (&(i, j), &e)) in self.entries.iter().enumerate() {
            if pos > 0 {
                write!(f, "·")?;
            }
            write!(f, "t[{i},{j}]")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A truncated exponential generating function: a finite rational linear
/// combination of exponent matrices of size ≤ `trunc`, over `arity` variable
/// rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EGFSeries {
    arity: usize,
    trunc: u32,
    terms: BTreeMap<ExpMatrix, BigRational>,
}

impl EGFSeries {
    pub fn zero(arity: usize, trunc: u32) -> Self {
        EGFSeries { arity, trunc, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, trunc: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExpMatrix::empty(), BigRational::one());
        EGFSeries { arity, trunc, terms }
    }

    /// Merges duplicate keys; drops zero coefficients and any exponent of
    /// size beyond the truncation or with a row beyond the arity.
    pub fn from_terms(
        arity: usize,
        trunc: u32,
        entries: impl IntoIterator<Item = (ExpMatrix, BigRational)>,
    ) -> Self {
        let mut terms: BTreeMap<ExpMatrix, BigRational> = BTreeMap::new();
        for (key, coeff) in entries {
            if key.size() > trunc || key.max_row() as usize > arity || coeff.is_zero() {
                continue;
            }
            let slot = terms.entry(key).or_insert_with(BigRational::zero);
            *slot += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        EGFSeries { arity, trunc, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<ExpMatrix, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &ExpMatrix) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    fn check_compatible(&self, other: &EGFSeries) -> Result<(), HilbertError> {
        if self.arity != other.arity {
            return Err(HilbertError::ArityMismatch { left: self.arity, right: other.arity });
        }
        if self.trunc != other.trunc {
            return Err(HilbertError::TruncationMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &EGFSeries) -> Result<EGFSeries, HilbertError> {
        self.check_compatible(other)?;
        Ok(EGFSeries::from_terms(
            self.arity,
            self.trunc,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, v)| (k.clone(), v.clone())),
        ))
    }

    pub fn scale(&self, c: &BigRational) -> EGFSeries {
        EGFSeries::from_terms(
            self.arity,
            self.trunc,
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)),
        )
    }

    /// The truncated product of formal series: exponents add, coefficients
    /// multiply, and everything of size beyond the truncation is dropped.
    pub fn multiply(&self, other: &EGFSeries) -> Result<EGFSeries, HilbertError> {
        self.check_compatible(other)?;
        let mut terms = Vec::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                if ka.size() + kb.size() > self.trunc {
                    continue;
                }
                terms.push((ka.mul(kb), va * vb));
            }
        }
        Ok(EGFSeries::from_terms(self.arity, self.trunc, terms))
    }
}

impl fmt::Display for EGFSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (key, coeff)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            if coeff.is_one() {
                write!(f, "{key}")?;
            } else {
                write!(f, "({coeff})·{key}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for EGFSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        struct Term<'a>(&'a ExpMatrix, &'a BigRational);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let exponents: Vec<(u32, u32, u32)> =
                    self.0.entries().iter().map(|(&(i, j), &e)| (i, j, e)).collect();
                let mut st = serializer.serialize_struct("Term", 3)?;
                st.serialize_field("exponents", &exponents)?;
                st.serialize_field("num", &self.1.numer().to_string())?;
                st.serialize_field("den", &self.1.denom().to_string())?;
                st.end()
            }
        }
        for (key, coeff) in &self.terms {
            seq.serialize_element(&Term(key, coeff))?;
        }
        seq.end()
    }
}

/// The truncated expansion of exp(T_d), T_d = Σ_{i ≤ d, j} t_{ij}: the
/// enhanced Hilbert series of the level-d coefficient ring.  The coefficient
/// of an exponent matrix supported in rows ≤ d is Π 1/e_{ij}!.
pub fn exp_t(n: usize, d: usize, trunc: u32) -> Result<EGFSeries, HilbertError> {
    if d == 0 || d > n {
        return Err(HilbertError::LevelOutOfRange { d, n });
    }
    let terms = partition_tuples_up_to(d, trunc).into_iter().map(|mu| {
        let key = ExpMatrix::from_cycle_type(&CycleTypeTuple(mu));
        let denom: u128 = key.entries().values().map(|&e| factorial(e)).product();
        (key, BigRational::new(BigInt::one(), BigInt::from(denom)))
    });
    Ok(EGFSeries::from_terms(n, trunc, terms))
}

/// The enhanced Hilbert series Σ_μ Tr(c_μ)·t^μ/μ! of the class `x`, truncated
/// at total size `trunc`.
pub fn hseries_of_symelt(x: &TensorSymElt, trunc: u32) -> EGFSeries {
    let n = x.arity();
    let terms = partition_tuples_up_to(n, trunc).into_iter().filter_map(|mu| {
        let mu = CycleTypeTuple(mu);
        let trace = x.trace_at(&mu);
        if trace.is_zero() {
            return None;
        }
        let coeff = trace / BigRational::from_integer(lambda_factorial(&mu).into());
        Some((ExpMatrix::from_cycle_type(&mu), coeff))
    });
    EGFSeries::from_terms(n, trunc, terms)
}

/// A Grothendieck class of a truncated module: coefficients (p_0, …, p_n)
/// over the tensor-symmetric functions, coordinate d recording the level-d
/// free part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    coeffs: Vec<TensorSymElt>,
}

impl KClass {
    pub fn zero(n: usize, degree_bound: u32) -> Self {
        KClass { coeffs: vec![TensorSymElt::zero(n, degree_bound); n + 1] }
    }

    /// The class of the level-d coefficient ring itself (d = 0 is the ground
    /// field).
    pub fn basis(n: usize, d: usize, degree_bound: u32) -> Result<Self, HilbertError> {
        if d > n {
            return Err(HilbertError::LevelOutOfRange { d, n });
        }
        let mut out = KClass::zero(n, degree_bound);
        out.coeffs[d] = TensorSymElt::unit(n, degree_bound);
        Ok(out)
    }

    pub fn from_coefficients(coeffs: Vec<TensorSymElt>) -> Result<Self, HilbertError> {
        let n = coeffs.len().saturating_sub(1);
        for c in &coeffs {
            if c.arity() != n {
                return Err(HilbertError::ArityMismatch { left: n, right: c.arity() });
            }
            if c.degree_bound() != coeffs[0].degree_bound() {
                return Err(HilbertError::TruncationMismatch {
                    left: coeffs[0].degree_bound(),
                    right: c.degree_bound(),
                });
            }
        }
        if coeffs.is_empty() {
            return Err(HilbertError::LevelOutOfRange { d: 0, n: 0 });
        }
        Ok(KClass { coeffs })
    }

    /// The number of variable rows n (one less than the coordinate count).
    pub fn arity(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree_bound(&self) -> u32 {
        self.coeffs[0].degree_bound()
    }

    pub fn coefficients(&self) -> &[TensorSymElt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TensorSymElt::is_zero)
    }

    pub fn add(&self, other: &KClass) -> Result<KClass, HilbertError> {
        if self.arity() != other.arity() {
            return Err(HilbertError::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_, _>>()?;
        Ok(KClass { coeffs })
    }
}

impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// The module action of the ground symmetric functions: scale every
/// coordinate, using [v]·[A_d ⊗ W] = [A_d ⊗ (V ⊗ W)].
pub fn kclass_scale(k: &KClass, v: &TensorSymElt) -> Result<KClass, HilbertError> {
    let coeffs = k
        .coeffs
        .iter()
        .map(|c| c.multiply(v))
        .collect::<Result<_, _>>()?;
    Ok(KClass { coeffs })
}

/// The enhanced Hilbert series of a class: p_0 + Σ_{d=1}^n p_d·exp(T_d) at
/// the series level.
pub fn hseries_of_class(k: &KClass, trunc: u32) -> Result<EGFSeries, HilbertError> {
    let n = k.arity();
    let mut out = hseries_of_symelt(&k.coeffs[0], trunc);
    for d in 1..=n {
        if k.coeffs[d].is_zero() {
            continue;
        }
        let factor = hseries_of_symelt(&k.coeffs[d], trunc).multiply(&exp_t(n, d, trunc)?)?;
        out = out.add(&factor)?;
    }
    Ok(out)
}

/// Certifies that the class-to-series map is injective on classes whose
/// coefficients live in degree ≤ g, by an exact rank computation on the
/// series coefficients of the spanning classes s_λ·[A_d].  Requires the
/// truncation to separate: trunc ≥ 2g + n.
pub fn independence_certificate(n: usize, g: u32, trunc: u32) -> Result<bool, HilbertError> {
    let needed = 2 * g + n as u32;
    if trunc < needed {
        return Err(HilbertError::TruncationTooSmall { needed, have: trunc });
    }
    let mut series = Vec::new();
    for lambda in partition_tuples_up_to(n, g) {
        let poly = hseries_of_symelt(&TensorSymElt::schur(lambda, g), trunc);
        series.push(poly.clone());
        for d in 1..=n {
            series.push(poly.multiply(&exp_t(n, d, trunc)?)?);
        }
    }
    let mut columns: BTreeMap<ExpMatrix, usize> = BTreeMap::new();
    for s in &series {
        for key in s.terms().keys() {
            let next = columns.len();
            columns.entry(key.clone()).or_insert(next);
        }
    }
    let count = series.len();
    let rows = series.into_iter().map(|s| {
        sparse_row(
            s.terms()
                .iter()
                .map(|(k, v)| (columns[k], v.clone()))
                .collect::<Vec<_>>(),
        )
    });
    Ok(rank(rows) == count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Partition, PartitionTuple};

    fn ptuple(parts: Vec<Vec<u32>>) -> PartitionTuple {
        PartitionTuple::new(parts.into_iter().map(Partition::new).collect())
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn exp_t_low_order_coefficients() {
        let e = exp_t(1, 1, 3).unwrap();
        assert_eq!(e.coefficient(&ExpMatrix::empty()), rat(1, 1));
        assert_eq!(e.coefficient(&ExpMatrix::variable(1, 1)), rat(1, 1));
        let t11_t12 =
            ExpMatrix::from_entries([((1, 1), 1), ((1, 2), 1)]);
        assert_eq!(e.coefficient(&t11_t12), rat(1, 1));
        let t11_sq = ExpMatrix::from_entries([((1, 1), 2)]);
        assert_eq!(e.coefficient(&t11_sq), rat(1, 2));
    }

    #[test]
    fn exp_t_supports_only_low_rows() {
        let e = exp_t(2, 1, 3).unwrap();
        assert!(e.terms().keys().all(|k| k.max_row() <= 1));
        assert_eq!(e.coefficient(&ExpMatrix::variable(2, 1)), rat(0, 1));
        // Level 2 does include the second row.
        let e2 = exp_t(2, 2, 3).unwrap();
        assert_eq!(e2.coefficient(&ExpMatrix::variable(2, 1)), rat(1, 1));
        assert!(matches!(exp_t(2, 0, 3), Err(HilbertError::LevelOutOfRange { .. })));
        assert!(matches!(exp_t(2, 3, 3), Err(HilbertError::LevelOutOfRange { .. })));
    }

    #[test]
    fn exp_t_coefficients_are_multiplicity_factorials() {
        let e = exp_t(2, 2, 4).unwrap();
        for (key, coeff) in e.terms() {
            let denom: u128 = key.entries().values().map(|&x| factorial(x)).product();
            assert_eq!(*coeff, BigRational::new(BigInt::one(), BigInt::from(denom)));
        }
        // Every support of size ≤ trunc over rows ≤ d appears.
        assert_eq!(
            e.terms().len(),
            partition_tuples_up_to(2, 4).len()
        );
    }

    #[test]
    fn hseries_of_single_box() {
        let x = TensorSymElt::schur(ptuple(vec![vec![1], vec![]]), 3);
        let h = hseries_of_symelt(&x, 3);
        let expected = EGFSeries::from_terms(
            2,
            3,
            [(ExpMatrix::variable(1, 1), rat(1, 1))],
        );
        assert_eq!(h, expected);
    }

    #[test]
    fn hseries_of_sign_representation() {
        let x = TensorSymElt::schur(ptuple(vec![vec![1, 1]]), 3);
        let h = hseries_of_symelt(&x, 3);
        let t11_sq = ExpMatrix::from_entries([((1, 1), 2)]);
        assert_eq!(h.coefficient(&t11_sq), rat(1, 2));
        assert_eq!(h.coefficient(&ExpMatrix::variable(1, 2)), rat(-1, 1));
        assert_eq!(h.terms().len(), 2);
    }

    #[test]
    fn hseries_of_zero_is_zero() {
        assert!(hseries_of_symelt(&TensorSymElt::zero(2, 3), 3).is_zero());
    }

    #[test]
    fn class_of_coefficient_rings() {
        for n in 1..=2usize {
            for d in 1..=n {
                let k = KClass::basis(n, d, 3).unwrap();
                assert_eq!(hseries_of_class(&k, 3).unwrap(), exp_t(n, d, 3).unwrap());
            }
            let ground = KClass::basis(n, 0, 3).unwrap();
            assert_eq!(hseries_of_class(&ground, 3).unwrap(), EGFSeries::one(n, 3));
        }
        assert!(hseries_of_class(&KClass::zero(2, 3), 3).unwrap().is_zero());
    }

    #[test]
    fn polynomial_part_passes_through() {
        let v = TensorSymElt::schur(ptuple(vec![vec![1], vec![]]), 3);
        let k = kclass_scale(&KClass::basis(2, 0, 3).unwrap(), &v).unwrap();
        assert_eq!(hseries_of_class(&k, 3).unwrap(), hseries_of_symelt(&v, 3));
    }

    #[test]
    fn series_product_identities() {
        let e = exp_t(1, 1, 4).unwrap();
        assert_eq!(e.multiply(&EGFSeries::one(1, 4)).unwrap(), e);
        let sq = e.multiply(&e).unwrap();
        assert_eq!(sq.coefficient(&ExpMatrix::variable(1, 1)), rat(2, 1));
        // exp(T_1)² = Σ 2^{Σ e_ij}/e!·t^e: spot-check t[1,1]^2 → 4/2.
        let t11_sq = ExpMatrix::from_entries([((1, 1), 2)]);
        assert_eq!(sq.coefficient(&t11_sq), rat(2, 1));
        assert!(EGFSeries::zero(1, 4).multiply(&e).unwrap().is_zero());
        assert!(matches!(
            e.multiply(&EGFSeries::one(2, 4)),
            Err(HilbertError::ArityMismatch { .. })
        ));
        assert!(matches!(
            e.multiply(&EGFSeries::one(1, 3)),
            Err(HilbertError::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn kclass_module_axioms() {
        let unit = TensorSymElt::unit(2, 4);
        let v = TensorSymElt::schur(ptuple(vec![vec![1], vec![]]), 4);
        let w = TensorSymElt::schur(ptuple(vec![vec![], vec![1]]), 4);
        let k = KClass::basis(2, 1, 4).unwrap();
        assert_eq!(kclass_scale(&k, &unit).unwrap(), k);
        let scaled = kclass_scale(&k, &v).unwrap();
        assert_eq!(scaled.coefficients()[1], v);
        assert!(scaled.coefficients()[0].is_zero());
        assert!(scaled.coefficients()[2].is_zero());
        // Bilinearity: (K·v)·w = K·(v·w) and K·(v+w) = K·v + K·w.
        let lhs = kclass_scale(&kclass_scale(&k, &v).unwrap(), &w).unwrap();
        let rhs = kclass_scale(&k, &v.multiply(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let sum = kclass_scale(&k, &v.add(&w).unwrap()).unwrap();
        assert_eq!(
            sum,
            kclass_scale(&k, &v).unwrap().add(&kclass_scale(&k, &w).unwrap()).unwrap()
        );
    }

    #[test]
    fn hseries_is_multiplicative() {
        // hs(x·y) = hs(x)·hs(y) for everything of degree ≤ 2, arity ≤ 2.
        for n in 1..=2usize {
            let bound = 4u32;
            let tuples: Vec<PartitionTuple> = partition_tuples_up_to(n, 2);
            for lam in &tuples {
                for kap in &tuples {
                    let x = TensorSymElt::schur(lam.clone(), bound);
                    let y = TensorSymElt::schur(kap.clone(), bound);
                    let product = hseries_of_symelt(&x.multiply(&y).unwrap(), bound);
                    let factored =
                        hseries_of_symelt(&x, bound).multiply(&hseries_of_symelt(&y, bound));
                    assert_eq!(product, factored.unwrap(), "λ={lam} κ={kap}");
                }
            }
        }
    }

    #[test]
    fn class_scaling_matches_series_product() {
        let v = TensorSymElt::schur(ptuple(vec![vec![2], vec![]]), 4);
        for d in 0..=2usize {
            let k = KClass::basis(2, d, 4).unwrap();
            let scaled = hseries_of_class(&kclass_scale(&k, &v).unwrap(), 4).unwrap();
            let factored = hseries_of_class(&k, 4)
                .unwrap()
                .multiply(&hseries_of_symelt(&v, 4))
                .unwrap();
            assert_eq!(scaled, factored, "d={d}");
        }
    }

    #[test]
    fn traces_times_multiplicity_factorials_are_integers() {
        let x = TensorSymElt::schur(ptuple(vec![vec![2, 1], vec![1]]), 5);
        let h = hseries_of_symelt(&x, 5);
        assert!(!h.is_zero());
        for (key, coeff) in h.terms() {
            let mult: u128 = key.entries().values().map(|&e| factorial(e)).product();
            let scaled = coeff * BigRational::from_integer(BigInt::from(mult));
            assert!(scaled.is_integer(), "coefficient {coeff} of {key}");
        }
    }

    #[test]
    fn independence_certificates() {
        assert!(independence_certificate(1, 0, 2).unwrap());
        assert!(independence_certificate(2, 0, 2).unwrap());
        assert!(independence_certificate(2, 1, 4).unwrap());
        assert_eq!(
            independence_certificate(2, 1, 3),
            Err(HilbertError::TruncationTooSmall { needed: 4, have: 3 })
        );
    }

    #[test]
    fn serialization_format() {
        let x = TensorSymElt::schur(ptuple(vec![vec![1, 1]]), 2);
        let h = hseries_of_symelt(&x, 2);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"[{"exponents":[[1,1,2]],"num":"1","den":"2"},{"exponents":[[1,2,1]],"num":"-1","den":"1"}]"#
        );
        let k = KClass::basis(1, 1, 2).unwrap();
        assert_eq!(serde_json::to_string(&k).unwrap(), r#"[[],[{"tuple":[[]],"num":"1","den":"1"}]]"#);
    }

    #[test]
    fn display_is_readable() {
        let x = TensorSymElt::schur(ptuple(vec![vec![1, 1]]), 2);
        let h = hseries_of_symelt(&x, 2);
        assert_eq!(h.to_string(), "(1/2)·t[1,1]^2 + (-1)·t[1,2]");
        assert_eq!(EGFSeries::zero(1, 2).to_string(), "0");
        assert_eq!(EGFSeries::one(1, 2).to_string(), "1");
    }
}
