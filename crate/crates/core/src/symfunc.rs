//! The ring Λ^⊗n of n-tuples of symmetric functions in the Schur basis,
//! truncated by total degree.
//!
//! Elements are finite Q-linear combinations of basis symbols s_λ, where λ
//! ranges over n-tuples of partitions with Σ|λ^i| at most a fixed degree
//! bound.  Products are computed componentwise by the Littlewood–Richardson
//! rule; terms that overflow the bound are silently dropped, which keeps the
//! truncated ring closed and matches the truncation of the exponential
//! generating functions built on top of it.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num::{BigRational, One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use thiserror::Error;

use crate::partition::{lr_expand, mn_character, CycleTypeTuple, Partition, PartitionTuple};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SymFuncError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("degree-bound mismatch: {left} vs {right}")]
    BoundMismatch { left: u32, right: u32 },
}

/// An element of Λ^⊗n in the Schur basis, truncated at a total degree bound.
///
/// Invariants: no stored zero coefficients, and every stored key λ satisfies
/// Σ|λ^i| ≤ `degree_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSymElt {
    arity: usize,
    degree_bound: u32,
    terms: BTreeMap<PartitionTuple, BigRational>,
}

impl TensorSymElt {
    pub fn zero(arity: usize, degree_bound: u32) -> Self {
        TensorSymElt { arity, degree_bound, terms: BTreeMap::new() }
    }

    /// The multiplicative unit s_{(∅,…,∅)}.
    pub fn unit(arity: usize, degree_bound: u32) -> Self {
        Self::schur(PartitionTuple::empty(arity), degree_bound)
    }

    /// The basis element s_λ (zero if λ overflows the bound).
    pub fn schur(lambda: PartitionTuple, degree_bound: u32) -> Self {
        Self::from_terms(
            lambda.arity(),
            degree_bound,
            [(lambda, BigRational::one())],
        )
    }

    /// Builds an element from (key, coefficient) pairs, merging duplicates and
    /// dropping zero coefficients and keys above the degree bound.
    pub fn from_terms(
        arity: usize,
        degree_bound: u32,
        entries: impl IntoIterator<Item = (PartitionTuple, BigRational)>,
    ) -> Self {
        let mut terms: BTreeMap<PartitionTuple, BigRational> = BTreeMap::new();
        for (key, coeff) in entries {
            assert_eq!(key.arity(), arity, "key arity differs from element arity");
            if key.total_size() > degree_bound || coeff.is_zero() {
                continue;
            }
            let slot = terms.entry(key).or_insert_with(BigRational::zero);
            *slot += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        TensorSymElt { arity, degree_bound, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> &BTreeMap<PartitionTuple, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &PartitionTuple) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    fn compatible(&self, other: &TensorSymElt) -> Result<(), SymFuncError> {
        if self.arity != other.arity {
            return Err(SymFuncError::ArityMismatch { left: self.arity, right: other.arity });
        }
        if self.degree_bound != other.degree_bound {
            return Err(SymFuncError::BoundMismatch {
                left: self.degree_bound,
                right: other.degree_bound,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorSymElt) -> Result<TensorSymElt, SymFuncError> {
        self.compatible(other)?;
        Ok(Self::from_terms(
            self.arity,
            self.degree_bound,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, c)| (k.clone(), c.clone())),
        ))
    }

    pub fn sub(&self, other: &TensorSymElt) -> Result<TensorSymElt, SymFuncError> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> TensorSymElt {
        Self::from_terms(
            self.arity,
            self.degree_bound,
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)),
        )
    }

    /// Componentwise Littlewood–Richardson product, truncated at the degree
    /// bound.
    pub fn multiply(&self, other: &TensorSymElt) -> Result<TensorSymElt, SymFuncError> {
        self.compatible(other)?;
        let mut out: BTreeMap<PartitionTuple, BigRational> = BTreeMap::new();
        for (left, cl) in &self.terms {
            for (right, cr) in &other.terms {
                if left.total_size() + right.total_size() > self.degree_bound {
                    continue;
                }
                let coeff = cl * cr;
                let expansions: Vec<Vec<(Partition, u64)>> = (0..self.arity)
                    .map(|i| lr_expand(left.component(i), right.component(i)))
                    .collect();
                for combo in expansions.iter().multi_cartesian_product() {
                    let mut mult = coeff.clone();
                    let mut components = Vec::with_capacity(self.arity);
                    for (nu, c) in &combo {
                        mult *= BigRational::from_integer((*c).into());
                        components.push(nu.clone());
                    }
                    let key = PartitionTuple::new(components);
                    let slot = out.entry(key).or_insert_with(BigRational::zero);
                    *slot += mult;
                }
                // Arity 0 has an empty product of expansions: the single
                // empty combination is the unit key.
                if self.arity == 0 {
                    let slot = out.entry(PartitionTuple::empty(0)).or_insert_with(BigRational::zero);
                    *slot += coeff;
                }
            }
        }
        Ok(Self::from_terms(
            self.arity,
            self.degree_bound,
            out.into_iter(),
        ))
    }

    /// Σ over stored keys λ with |λ^i| = |μ^i| for all i of
    /// coeff(λ)·Π_i χ^{λ^i}(μ^i).  Keys with mismatched component sizes (or an
    /// element of different arity) contribute 0.
    pub fn trace_at(&self, mu: &CycleTypeTuple) -> BigRational {
        if mu.arity() != self.arity {
            return BigRational::zero();
        }
        let mut out = BigRational::zero();
        'keys: for (key, coeff) in &self.terms {
            let mut character = 1i64;
            for i in 0..self.arity {
                let lam = key.component(i);
                let m = mu.components()[i].clone();
                if lam.size() != m.size() {
                    continue 'keys;
                }
                character *= mn_character(lam, &m)
                    .expect("component sizes match, so the character is defined");
            }
            out += coeff * BigRational::from_integer(character.into());
        }
        out
    }
}

impl fmt::Display for TensorSymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if coeff.is_one() {
                write!(f, "s{key}")?;
            } else {
                write!(f, "({coeff})·s{key}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for TensorSymElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term<'a> {
            tuple: &'a PartitionTuple,
            num: String,
            den: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (key, coeff) in &self.terms {
            seq.serialize_element(&Term {
                tuple: key,
                num: coeff.numer().to_string(),
                den: coeff.denom().to_string(),
            })?;
        }
        seq.end()
    }
}
