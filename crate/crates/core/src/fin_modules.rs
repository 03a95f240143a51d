//! Dimension-level theory of modules over the weighted-injection category:
//! principal projectives, simple modules supported at a single object,
//! isotypic projective covers, and the Day tensor product.
//!
//! Everything here is a dimension function or character count; the concrete
//! vector-space realizations live in [`crate::model`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{binomial, factorial, hook_dimension, CompositionTuple, PartitionTuple};
use crate::weighted_cat::{enumerate_homs, CatError, CategoryFlavor, WeightedInjection};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ModuleError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error(transparent)]
    Category(#[from] CatError),
}

/// An atom of a module spec: a principal projective 𝒫_a (dimension
/// |Hom(a,−)|) or the simple module M_λ supported at the single object
/// (|λ^1|,…,|λ^n|).
///
/// Serializes as a tagged union: `{"principal": [1,0]}` / `{"simple": [[2,1],[]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleAtom {
    Principal(CompositionTuple),
    Simple(PartitionTuple),
}

impl ModuleAtom {
    pub fn arity(&self) -> usize {
        match self {
            ModuleAtom::Principal(a) => a.arity(),
            ModuleAtom::Simple(l) => l.arity(),
        }
    }

    fn dim_at(&self, c: &CompositionTuple) -> Result<u64, ModuleError> {
        match self {
            ModuleAtom::Principal(a) => principal_dim(a, c),
            ModuleAtom::Simple(l) => simple_dim(l, c),
        }
    }
}

/// A finite formal sum of atoms with nonnegative multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    arity: usize,
    terms: Vec<(ModuleAtom, u64)>,
}

impl ModuleSpec {
    pub fn zero(arity: usize) -> Self {
        ModuleSpec { arity, terms: Vec::new() }
    }

    pub fn principal(a: CompositionTuple) -> Self {
        let arity = a.arity();
        ModuleSpec { arity, terms: vec![(ModuleAtom::Principal(a), 1)] }
    }

    pub fn simple(lambda: PartitionTuple) -> Self {
        let arity = lambda.arity();
        ModuleSpec { arity, terms: vec![(ModuleAtom::Simple(lambda), 1)] }
    }

    /// The monoidal unit: the principal projective at the empty object.
    pub fn unit(arity: usize) -> Self {
        Self::principal(CompositionTuple::zero(arity))
    }

    pub fn plus(mut self, atom: ModuleAtom, multiplicity: u64) -> Self {
        assert_eq!(atom.arity(), self.arity, "atom arity differs from spec arity");
        if multiplicity > 0 {
            self.terms.push((atom, multiplicity));
        }
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(ModuleAtom, u64)] {
        &self.terms
    }

    /// The dimension of the spec evaluated at the object c.
    pub fn dim_at(&self, c: &CompositionTuple) -> Result<u64, ModuleError> {
        check_arity(self.arity, c.arity())?;
        let mut out = 0;
        for (atom, mult) in &self.terms {
            out += mult * atom.dim_at(c)?;
        }
        Ok(out)
    }
}

fn check_arity(left: usize, right: usize) -> Result<(), ModuleError> {
    if left != right {
        return Err(ModuleError::ArityMismatch { left, right });
    }
    Ok(())
}

/// |Hom(a,s)| with a process-wide memo table; the hom sets are re-enumerated
/// heavily by the Day tensor dimension counts.
fn hom_count(a: &CompositionTuple, s: &CompositionTuple) -> Result<u64, ModuleError> {
    static CACHE: OnceLock<RwLock<HashMap<(CompositionTuple, CompositionTuple), u64>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (a.clone(), s.clone());
    if let Some(v) = cache.read().expect("hom-count cache poisoned").get(&key) {
        return Ok(*v);
    }
    let count = enumerate_homs(CategoryFlavor::fi(), a, s)?.len() as u64;
    cache.write().expect("hom-count cache poisoned").insert(key, count);
    Ok(count)
}

/// dim 𝒫_a(s) = |Hom(a,s)|.
pub fn principal_dim(a: &CompositionTuple, s: &CompositionTuple) -> Result<u64, ModuleError> {
    check_arity(a.arity(), s.arity())?;
    hom_count(a, s)
}

/// dim M_λ(b) = Π_i hook_dimension(λ^i) when b_i = |λ^i| for every i, else 0.
pub fn simple_dim(lambda: &PartitionTuple, b: &CompositionTuple) -> Result<u64, ModuleError> {
    check_arity(lambda.arity(), b.arity())?;
    if lambda.size_vector() != *b {
        return Ok(0);
    }
    Ok(hook_product(lambda))
}

fn hook_product(lambda: &PartitionTuple) -> u64 {
    lambda.components().iter().map(hook_dimension).product()
}

/// The multiplicity of M_λ inside the permutation module on Hom(a,s) for
/// a = (|λ^i|).  The automorphism group Π S_{a_i} acts freely on injections
/// by precomposition, so the multiplicity is hook-dim(λ)·|Hom(a,s)| / Π a_i!.
pub fn isotypic_projective_dim(
    lambda: &PartitionTuple,
    s: &CompositionTuple,
) -> Result<u64, ModuleError> {
    let a = lambda.size_vector();
    check_arity(a.arity(), s.arity())?;
    let total = hook_product(lambda) as u128 * hom_count(&a, s)? as u128;
    let aut: u128 = a.entries().iter().map(|&e| factorial(e)).product();
    assert!(
        total % aut == 0,
        "free automorphism action forces divisibility of {total} by {aut}"
    );
    Ok((total / aut) as u64)
}

/// The weight profile of the image of f: entry i counts image elements of
/// weight i+1.
fn image_profile(f: &WeightedInjection) -> CompositionTuple {
    let mut counts = vec![0u32; f.target().arity()];
    for (_, _, tw, _) in f.pairs() {
        counts[(tw - 1) as usize] += 1;
    }
    CompositionTuple::new(counts)
}

/// dim (M ⊗ N)(c) for the Day tensor product induced by disjoint union.
pub fn day_tensor_dim(
    m: &ModuleSpec,
    n: &ModuleSpec,
    c: &CompositionTuple,
) -> Result<u64, ModuleError> {
    check_arity(m.arity(), n.arity())?;
    check_arity(m.arity(), c.arity())?;
    let mut out = 0;
    for (left, lm) in m.terms() {
        for (right, rm) in n.terms() {
            out += lm * rm * atom_day_dim(left, right, c)?;
        }
    }
    Ok(out)
}

fn atom_day_dim(
    left: &ModuleAtom,
    right: &ModuleAtom,
    c: &CompositionTuple,
) -> Result<u64, ModuleError> {
    match (left, right) {
        (ModuleAtom::Principal(a), ModuleAtom::Principal(b)) => {
            // A morphism out of a⊔b is a morphism f out of a together with a
            // morphism out of b into the complement of the image of f, so the
            // evaluation of 𝒫_a ⊗ 𝒫_b at c decomposes over f.
            let mut out = 0;
            for f in enumerate_homs(CategoryFlavor::fi(), a, c)? {
                let rest = c
                    .checked_sub(&image_profile(&f))
                    .expect("image profile is bounded by the target");
                out += hom_count(b, &rest)?;
            }
            Ok(out)
        }
        (ModuleAtom::Principal(a), ModuleAtom::Simple(l)) => principal_times_simple(a, l, c),
        (ModuleAtom::Simple(l), ModuleAtom::Principal(a)) => principal_times_simple(a, l, c),
        (ModuleAtom::Simple(l), ModuleAtom::Simple(k)) => {
            // Both factors are torsion, supported at single objects.  All
            // evaluations away from the exact sum of the supports die against
            // the structure maps; at the sum, the coend is the free orbit
            // space of the automorphism actions: a product of binomials times
            // the two simple dimensions.
            let sl = l.size_vector();
            let sk = k.size_vector();
            if sl.add(&sk) != *c {
                return Ok(0);
            }
            let mut out = hook_product(l) * hook_product(k);
            for i in 0..c.arity() {
                out *= binomial(c.entries()[i], sl.entries()[i]);
            }
            Ok(out)
        }
    }
}

/// dim (𝒫_a ⊗ M_λ)(c): the shift decomposition ⊕_f M_λ(c − profile(im f))
/// leaves only the morphisms whose image complement is exactly the support
/// of M_λ.
fn principal_times_simple(
    a: &CompositionTuple,
    lambda: &PartitionTuple,
    c: &CompositionTuple,
) -> Result<u64, ModuleError> {
    let support = lambda.size_vector();
    let Some(profile) = c.checked_sub(&support) else {
        return Ok(0);
    };
    let mut matching = 0;
    for f in enumerate_homs(CategoryFlavor::fi(), a, c)? {
        if image_profile(&f) == profile {
            matching += 1;
        }
    }
    Ok(matching * hook_product(lambda))
}
