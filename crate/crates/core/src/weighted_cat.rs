//! The weight-filtered combinatorial categories on composition tuples.
//!
//! Objects are canonical weighted sets: a tuple a = (a_1,…,a_n) stands for
//! the set with a_i elements of weight i, elements named (weight, index)
//! with 1-based indices. Morphisms are injections that do not decrease
//! weights; the flavor `Cd(d)` additionally requires the image to cover
//! every target element of weight < d (so `Cd(1)` is the plain injection
//! category), and `Fb` restricts to bijections.

use crate::partition::{dominance_leq, CompositionTuple};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CatError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("parameter d={0} outside 1..={1}")]
    FlavorOutOfRange(u32, usize),
    #[error("morphisms are not composable: target of inner ≠ source of outer")]
    NotComposable,
    #[error("invalid morphism data: {0}")]
    InvalidMorphism(String),
}

/// Which category the morphisms live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CategoryFlavor {
    /// Weight-non-decreasing bijections.
    Fb,
    /// Weight-non-decreasing injections covering all target weights < d.
    Cd(u32),
}

impl CategoryFlavor {
    /// The plain weighted injection category (no coverage condition).
    pub fn fi() -> Self {
        CategoryFlavor::Cd(1)
    }

    fn check(self, arity: usize) -> Result<(), CatError> {
        if let CategoryFlavor::Cd(d) = self {
            if d == 0 || d as usize > arity.max(1) {
                return Err(CatError::FlavorOutOfRange(d, arity));
            }
        }
        Ok(())
    }
}

/// A weight-non-decreasing injection between canonical weighted sets.
///
/// `images[pos]` is the target element (weight, index) assigned to the
/// source element at flattened position `pos`, where source elements are
/// ordered by (weight, index).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedInjection {
    source: CompositionTuple,
    target: CompositionTuple,
    images: Vec<(u32, u32)>,
}

impl WeightedInjection {
    /// Validate and build a morphism from explicit image data.
    pub fn new(
        source: CompositionTuple,
        target: CompositionTuple,
        images: Vec<(u32, u32)>,
    ) -> Result<Self, CatError> {
        if source.arity() != target.arity() {
            return Err(CatError::ArityMismatch(source.arity(), target.arity()));
        }
        if images.len() != source.total() as usize {
            return Err(CatError::InvalidMorphism(format!(
                "expected {} images, got {}",
                source.total(),
                images.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for (pos, &(j, q)) in images.iter().enumerate() {
            let (i, _) = element_at(&source, pos);
            if j < i {
                return Err(CatError::InvalidMorphism(format!(
                    "weight decreases: source weight {i} mapped to target weight {j}"
                )));
            }
            if j == 0 || j > target.arity() as u32 || q == 0 || q > target.weight_count(j) {
                return Err(CatError::InvalidMorphism(format!(
                    "target element ({j},{q}) out of range"
                )));
            }
            if !seen.insert((j, q)) {
                return Err(CatError::InvalidMorphism(format!(
                    "target element ({j},{q}) hit twice"
                )));
            }
        }
        Ok(WeightedInjection { source, target, images })
    }

    pub fn identity(a: &CompositionTuple) -> Self {
        let images = (0..a.total() as usize).map(|pos| element_at(a, pos)).collect();
        WeightedInjection { source: a.clone(), target: a.clone(), images }
    }

    pub fn source(&self) -> &CompositionTuple {
        &self.source
    }

    pub fn target(&self) -> &CompositionTuple {
        &self.target
    }

    /// Image of source element (weight w, index p), both 1-based.
    pub fn image_of(&self, w: u32, p: u32) -> (u32, u32) {
        self.images[flat_position(&self.source, w, p)]
    }

    /// Image by flattened source position.
    pub fn image_at(&self, pos: usize) -> (u32, u32) {
        self.images[pos]
    }

    /// (source-weight, source-index, target-weight, target-index) rows in
    /// canonical source order — the serialized form.
    pub fn pairs(&self) -> Vec<(u32, u32, u32, u32)> {
        self.images
            .iter()
            .enumerate()
            .map(|(pos, &(j, q))| {
                let (i, p) = element_at(&self.source, pos);
                (i, p, j, q)
            })
            .collect()
    }

    pub fn is_bijection(&self) -> bool {
        self.source.total() == self.target.total()
    }

    /// Target elements not hit by the morphism, in (weight, index) order.
    pub fn uncovered_targets(&self) -> Vec<(u32, u32)> {
        let hit: BTreeSet<(u32, u32)> = self.images.iter().copied().collect();
        let mut out = Vec::new();
        for w in 1..=self.target.arity() as u32 {
            for q in 1..=self.target.weight_count(w) {
                if !hit.contains(&(w, q)) {
                    out.push((w, q));
                }
            }
        }
        out
    }

    /// Does the image cover every target element of weight < d?
    pub fn covers_below(&self, d: u32) -> bool {
        self.uncovered_targets().iter().all(|&(w, _)| w >= d)
    }

    /// Is this morphism valid in the given flavor?
    pub fn in_flavor(&self, flavor: CategoryFlavor) -> bool {
        match flavor {
            CategoryFlavor::Fb => self.is_bijection(),
            CategoryFlavor::Cd(d) => self.covers_below(d),
        }
    }

    /// Disjoint union f ⊔ g: (source_f + source_g) → (target_f + target_g),
    /// with g's element indices shifted past f's.
    pub fn disjoint_union(&self, g: &WeightedInjection) -> Result<WeightedInjection, CatError> {
        if self.source.arity() != g.source.arity() {
            return Err(CatError::ArityMismatch(self.source.arity(), g.source.arity()));
        }
        let source = self.source.add(&g.source);
        let target = self.target.add(&g.target);
        let mut images = Vec::with_capacity(source.total() as usize);
        for w in 1..=source.arity() as u32 {
            for p in 1..=self.source.weight_count(w) {
                images.push(self.image_of(w, p));
            }
            for p in 1..=g.source.weight_count(w) {
                let (j, q) = g.image_of(w, p);
                images.push((j, q + self.target.weight_count(j)));
            }
        }
        // Re-sort into canonical source order happens naturally: weights
        // ascend and indices ascend within each weight by construction.
        WeightedInjection::new(source, target, images)
    }
}

impl Serialize for WeightedInjection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs = self.pairs();
        let mut seq = s.serialize_seq(Some(pairs.len()))?;
        for (a, b, c, d) in pairs {
            seq.serialize_element(&[a, b, c, d])?;
        }
        seq.end()
    }
}

/// (weight, index) of the element of `a` at flattened position `pos`, where
/// elements are ordered by (weight, index).
pub fn element_at(a: &CompositionTuple, pos: usize) -> (u32, u32) {
    let mut rem = pos as u32;
    for w in 1..=a.arity() as u32 {
        let count = a.weight_count(w);
        if rem < count {
            return (w, rem + 1);
        }
        rem -= count;
    }
    panic!("position {pos} out of range for {a}");
}

/// Flattened position of element (weight w, index p) of `a`.
pub fn flat_position(a: &CompositionTuple, w: u32, p: u32) -> usize {
    let before: u32 = (1..w).map(|v| a.weight_count(v)).sum();
    (before + p - 1) as usize
}

/// g ∘ f for f: a → b and g: b → c.
pub fn compose(
    g: &WeightedInjection,
    f: &WeightedInjection,
) -> Result<WeightedInjection, CatError> {
    if f.target != g.source {
        return Err(CatError::NotComposable);
    }
    let images = (0..f.images.len())
        .map(|pos| {
            let (j, q) = f.images[pos];
            g.image_of(j, q)
        })
        .collect();
    WeightedInjection::new(f.source.clone(), g.target.clone(), images)
}

/// Does a morphism b → a exist in the flavor?
///
/// The injection flavor reduces to the reversal-dominance predicate
/// τ(b) ⊴ τ(a); bijections additionally need |b| = |a|; coverage flavors
/// with d ≥ 2 fall back to enumeration with early exit.
pub fn hom_exists(
    flavor: CategoryFlavor,
    b: &CompositionTuple,
    a: &CompositionTuple,
) -> Result<bool, CatError> {
    if b.arity() != a.arity() {
        return Err(CatError::ArityMismatch(b.arity(), a.arity()));
    }
    flavor.check(a.arity())?;
    match flavor {
        CategoryFlavor::Fb => {
            Ok(b.total() == a.total() && dominance_leq(&b.reversed(), &a.reversed()).unwrap())
        }
        CategoryFlavor::Cd(1) => Ok(dominance_leq(&b.reversed(), &a.reversed()).unwrap()),
        CategoryFlavor::Cd(_) => {
            Ok(enumerate_impl(flavor, b, a, true).into_iter().next().is_some())
        }
    }
}

/// Complete, duplicate-free, lexicographically ordered list of morphisms
/// b → a in the flavor. Source elements are assigned in (weight, index)
/// order and candidate targets tried in (weight, index) order.
pub fn enumerate_homs(
    flavor: CategoryFlavor,
    b: &CompositionTuple,
    a: &CompositionTuple,
) -> Result<Vec<WeightedInjection>, CatError> {
    if b.arity() != a.arity() {
        return Err(CatError::ArityMismatch(b.arity(), a.arity()));
    }
    flavor.check(a.arity())?;
    Ok(enumerate_impl(flavor, b, a, false))
}

fn enumerate_impl(
    flavor: CategoryFlavor,
    b: &CompositionTuple,
    a: &CompositionTuple,
    stop_at_first: bool,
) -> Vec<WeightedInjection> {
    if flavor == CategoryFlavor::Fb && b.total() != a.total() {
        return Vec::new();
    }
    let total = b.total() as usize;
    // Target elements in canonical order.
    let targets: Vec<(u32, u32)> = (1..=a.arity() as u32)
        .flat_map(|w| (1..=a.weight_count(w)).map(move |q| (w, q)))
        .collect();
    let mut used = vec![false; targets.len()];
    let mut images: Vec<(u32, u32)> = Vec::with_capacity(total);
    let mut out = Vec::new();
    let required_cover = match flavor {
        CategoryFlavor::Cd(d) => d,
        CategoryFlavor::Fb => 1,
    };
    fn rec(
        pos: usize,
        total: usize,
        b: &CompositionTuple,
        a: &CompositionTuple,
        targets: &[(u32, u32)],
        used: &mut Vec<bool>,
        images: &mut Vec<(u32, u32)>,
        required_cover: u32,
        stop_at_first: bool,
        out: &mut Vec<WeightedInjection>,
    ) {
        if pos == total {
            // Coverage check: every unused target must have weight ≥ d.
            let ok = targets
                .iter()
                .zip(used.iter())
                .all(|(&(w, _), &u)| u || w >= required_cover);
            if ok {
                out.push(WeightedInjection {
                    source: b.clone(),
                    target: a.clone(),
                    images: images.clone(),
                });
            }
            return;
        }
        let (i, _) = element_at(b, pos);
        for (t, &(j, _)) in targets.iter().enumerate() {
            if used[t] || j < i {
                continue;
            }
            used[t] = true;
            images.push(targets[t]);
            rec(pos + 1, total, b, a, targets, used, images, required_cover, stop_at_first, out);
            images.pop();
            used[t] = false;
            if stop_at_first && !out.is_empty() {
                return;
            }
        }
    }
    rec(
        0,
        total,
        b,
        a,
        &targets,
        &mut used,
        &mut images,
        required_cover,
        stop_at_first,
        &mut out,
    );
    out
}

/// The finite set of objects b with Hom_{C_d}(b, a) nonempty.
///
/// Coverage forces |b| ≥ (number of weight < d targets) and injectivity
/// forces |b| ≤ |a|, so scanning all tuples of total ≤ |a| is complete.
pub fn inward_objects(d: u32, a: &CompositionTuple) -> Result<BTreeSet<CompositionTuple>, CatError> {
    CategoryFlavor::Cd(d).check(a.arity())?;
    let mut out = BTreeSet::new();
    for total in 0..=a.total() {
        for b in crate::partition::compositions_of_total(a.arity(), total) {
            if hom_exists(CategoryFlavor::Cd(d), &b, a)? {
                out.insert(b);
            }
        }
    }
    Ok(out)
}
