//! A finite flag model: a concrete graded vector space with a full flag of
//! "row" subspaces, truncated polynomial and tensor modules over it, and the
//! linear maps induced by weighted injections.
//!
//! The model has `n` rows of `k` basis vectors e_{rc} (r ∈ 1..=n,
//! c ∈ 1..=k); the flag subspace V_m is spanned by the rows ≤ m.  A
//! weight-i element of a composition tuple contributes a tensor factor
//! V_{n−i+1} (for the modules W_a and Q_a = A ⊗ W_a) or V/V_{n−i} (for the
//! modules T_{d,a}).  The polynomial coefficients live in A = C[x_{rc}] on
//! the same index grid, graded so that x_{rc} and e_{rc} share the weight
//! with a single 1 in entry (r,c).
//!
//! Everything is exact: maps carry integer entries and ranks are computed by
//! fraction-free elimination over the rationals.

use std::collections::HashMap;
use std::sync::Arc;

use num::BigRational;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::ideal::Monomial;
use crate::linalg::{rank, sparse_row, SparseRow};
use crate::partition::CompositionTuple;
use crate::weighted_cat::{
    element_at, enumerate_homs, flat_position, CatError, CategoryFlavor, WeightedInjection,
};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ModelError {
    #[error("model too small: {0}")]
    ModelTooSmall(String),
    #[error("degree truncation too small: need at least {needed}, have {have}")]
    TruncationTooSmall { needed: u32, have: u32 },
    #[error("invalid morphism for this construction: {0}")]
    InvalidMorphism(String),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Category(#[from] CatError),
}

/// The ambient truncated flag: n rows of k columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagModel {
    pub n: usize,
    pub k: usize,
}

impl FlagModel {
    pub fn new(n: usize, k: usize) -> Result<Self, ModelError> {
        if n == 0 || k == 0 {
            return Err(ModelError::ModelTooSmall(format!(
                "need n ≥ 1 and k ≥ 1, got n={n}, k={k}"
            )));
        }
        Ok(FlagModel { n, k })
    }

    fn check_arity(&self, a: &CompositionTuple) -> Result<(), ModelError> {
        if a.arity() != self.n {
            return Err(ModelError::ArityMismatch { left: self.n, right: a.arity() });
        }
        Ok(())
    }
}

/// An n×k matrix of nonnegative integers: the weight of a basis vector,
/// monomial, or pure tensor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightMatrix {
    n: usize,
    k: usize,
    entries: Vec<u32>,
}

impl WeightMatrix {
    pub fn zero(model: &FlagModel) -> Self {
        WeightMatrix { n: model.n, k: model.k, entries: vec![0; model.n * model.k] }
    }

    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.entries[(row as usize - 1) * self.k + (col as usize - 1)]
    }

    pub fn add_unit(&mut self, row: u32, col: u32) {
        self.entries[(row as usize - 1) * self.k + (col as usize - 1)] += 1;
    }

    fn sub_unit(&mut self, row: u32, col: u32) {
        self.entries[(row as usize - 1) * self.k + (col as usize - 1)] -= 1;
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn add_monomial(&mut self, m: &Monomial) {
        for (&(r, c), &e) in &m.0 {
            self.entries[(r as usize - 1) * self.k + (c as usize - 1)] += e;
        }
    }
}

/// The weight λ(a) of the canonical generator ε_a: row r carries a single 1
/// in each of the first a_{n−r+1} columns.
pub fn lambda_weight(model: &FlagModel, a: &CompositionTuple) -> Result<WeightMatrix, ModelError> {
    model.check_arity(a)?;
    let mut w = WeightMatrix::zero(model);
    for r in 1..=model.n as u32 {
        let count = a.entries()[model.n - r as usize];
        if count as usize > model.k {
            return Err(ModelError::ModelTooSmall(format!(
                "λ(a) needs {count} columns in row {r}, the model has {}",
                model.k
            )));
        }
        for c in 1..=count {
            w.add_unit(r, c);
        }
    }
    Ok(w)
}

/// One tensor factor: the subspace spanned by rows 1..=m, or the quotient by
/// it (rows m+1..=n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Sub(u32),
    Quot(u32),
}

impl Factor {
    /// Inclusive row range of the factor's basis.
    fn rows(&self, n: usize) -> (u32, u32) {
        match *self {
            Factor::Sub(m) => (1, m),
            Factor::Quot(m) => (m + 1, n as u32),
        }
    }
}

/// Rows ≥ `min_row` polynomial coefficients truncated at total degree
/// `max_deg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyPart {
    pub min_row: u32,
    pub max_deg: u32,
}

/// A truncated module with an explicit ordered basis: an optional polynomial
/// coefficient part tensored with a list of flag factors.
///
/// Basis elements are pairs (monomial, assignment), where the assignment
/// picks one basis vector (row, col) inside each factor.  The index order is
/// monomial-major with the factor assignments in mixed-radix order, so all
/// matrices built on these bases are reproducible.
#[derive(Debug, Clone)]
pub struct ModuleShape {
    n: usize,
    k: usize,
    factors: Vec<Factor>,
    poly: Option<PolyPart>,
    monomials: Vec<Monomial>,
    monomial_index: HashMap<Monomial, usize>,
}

impl PartialEq for ModuleShape {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.factors == other.factors
            && self.poly == other.poly
    }
}
impl Eq for ModuleShape {}

impl ModuleShape {
    fn build(model: &FlagModel, factors: Vec<Factor>, poly: Option<PolyPart>) -> ModuleShape {
        let monomials = match poly {
            Some(p) => poly_monomials(model.n, model.k, p.min_row, p.max_deg),
            None => vec![Monomial::one()],
        };
        let monomial_index =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        ModuleShape { n: model.n, k: model.k, factors, poly, monomials, monomial_index }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn poly(&self) -> Option<PolyPart> {
        self.poly
    }

    fn factor_dim(&self, f: Factor) -> usize {
        let (lo, hi) = f.rows(self.n);
        if hi < lo {
            0
        } else {
            (hi - lo + 1) as usize * self.k
        }
    }

    pub fn tensor_dim(&self) -> usize {
        self.factors.iter().map(|&f| self.factor_dim(f)).product()
    }

    pub fn dim(&self) -> usize {
        self.monomials.len() * self.tensor_dim()
    }

    /// Decodes a basis index into (monomial, factor assignment).
    pub fn decode(&self, idx: usize) -> (&Monomial, Vec<(u32, u32)>) {
        let tensor_dim = self.tensor_dim();
        let (mono_idx, mut rest) = (idx / tensor_dim, idx % tensor_dim);
        let mut assignment = vec![(0, 0); self.factors.len()];
        for pos in (0..self.factors.len()).rev() {
            let dim = self.factor_dim(self.factors[pos]);
            let local = rest % dim;
            rest /= dim;
            let (lo, _) = self.factors[pos].rows(self.n);
            assignment[pos] =
                (lo + (local / self.k) as u32, (local % self.k) as u32 + 1);
        }
        (&self.monomials[mono_idx], assignment)
    }

    /// Index of (monomial, assignment); None if the monomial overflows the
    /// truncation or any vector lies outside its factor.
    pub fn index_of(&self, mono: &Monomial, assignment: &[(u32, u32)]) -> Option<usize> {
        assert_eq!(assignment.len(), self.factors.len(), "assignment length mismatch");
        let mono_idx = *self.monomial_index.get(mono)?;
        let mut tensor_idx = 0usize;
        for (pos, &(r, c)) in assignment.iter().enumerate() {
            let (lo, hi) = self.factors[pos].rows(self.n);
            if r < lo || r > hi || c == 0 || c > self.k as u32 {
                return None;
            }
            let local = (r - lo) as usize * self.k + (c - 1) as usize;
            tensor_idx = tensor_idx * self.factor_dim(self.factors[pos]) + local;
        }
        Some(mono_idx * self.tensor_dim() + tensor_idx)
    }

    pub fn weight_of(&self, idx: usize) -> WeightMatrix {
        let (mono, assignment) = self.decode(idx);
        let model = FlagModel { n: self.n, k: self.k };
        let mut w = WeightMatrix::zero(&model);
        w.add_monomial(mono);
        for &(r, c) in &assignment {
            w.add_unit(r, c);
        }
        w
    }

    /// Number of basis elements of weight exactly `w`, counted directly from
    /// the factor structure (the monomial part of a weight is forced, so no
    /// full basis enumeration happens).
    pub fn weight_space_dim(&self, w: &WeightMatrix) -> u64 {
        assert_eq!((w.n, w.k), (self.n, self.k), "weight grid mismatch");
        let mut remaining = w.clone();
        self.count_weighted_assignments(0, &mut remaining)
    }

    fn count_weighted_assignments(&self, pos: usize, remaining: &mut WeightMatrix) -> u64 {
        if pos == self.factors.len() {
            // The residual weight must be realized by a single monomial of
            // the coefficient ring (or be zero when there is none).
            return match self.poly {
                None => u64::from(remaining.total() == 0),
                Some(p) => {
                    if remaining.total() > p.max_deg {
                        return 0;
                    }
                    for r in 1..p.min_row {
                        for c in 1..=self.k as u32 {
                            if remaining.get(r, c) > 0 {
                                return 0;
                            }
                        }
                    }
                    1
                }
            };
        }
        let (lo, hi) = self.factors[pos].rows(self.n);
        let mut count = 0;
        for r in lo..=hi {
            for c in 1..=self.k as u32 {
                if remaining.get(r, c) > 0 {
                    remaining.sub_unit(r, c);
                    count += self.count_weighted_assignments(pos + 1, remaining);
                    remaining.add_unit(r, c);
                }
            }
        }
        count
    }
}

/// All monomials on the variables x_{rc} with r ≥ min_row, of total degree
/// ≤ max_deg, in a fixed deterministic order.
fn poly_monomials(n: usize, k: usize, min_row: u32, max_deg: u32) -> Vec<Monomial> {
    let vars: Vec<(u32, u32)> = (min_row..=n as u32)
        .flat_map(|r| (1..=k as u32).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut current = Monomial::one();
    fn rec(
        vars: &[(u32, u32)],
        pos: usize,
        left: u32,
        current: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if pos == vars.len() {
            out.push(current.clone());
            return;
        }
        rec(vars, pos + 1, left, current, out);
        for e in 1..=left {
            current.0.insert(vars[pos], e);
            rec(vars, pos + 1, left - e, current, out);
        }
        current.0.remove(&vars[pos]);
    }
    rec(&vars, 0, max_deg, &mut current, &mut out);
    out.sort();
    out
}

/// The module W_a = ⊗_i V_{n−i+1}^{⊗a_i}.
pub fn w_shape(model: &FlagModel, a: &CompositionTuple) -> Result<ModuleShape, ModelError> {
    model.check_arity(a)?;
    Ok(ModuleShape::build(model, sub_factors(model, a), None))
}

/// The module Q_a^{≤D} = A^{≤D} ⊗ W_a.
pub fn q_shape(
    model: &FlagModel,
    a: &CompositionTuple,
    max_deg: u32,
) -> Result<ModuleShape, ModelError> {
    model.check_arity(a)?;
    Ok(ModuleShape::build(
        model,
        sub_factors(model, a),
        Some(PolyPart { min_row: 1, max_deg }),
    ))
}

/// The module T_{d,a} = ⊗_i (V/V_{n−i})^{⊗a_i}.
pub fn t_shape(model: &FlagModel, d: u32, a: &CompositionTuple) -> Result<ModuleShape, ModelError> {
    model.check_arity(a)?;
    check_level(model, d)?;
    let mut factors = Vec::new();
    for i in 1..=model.n as u32 {
        for _ in 0..a.weight_count(i) {
            factors.push(Factor::Quot(model.n as u32 - i));
        }
    }
    Ok(ModuleShape::build(model, factors, None))
}

fn sub_factors(model: &FlagModel, a: &CompositionTuple) -> Vec<Factor> {
    let mut factors = Vec::new();
    for i in 1..=model.n as u32 {
        for _ in 0..a.weight_count(i) {
            factors.push(Factor::Sub(model.n as u32 - i + 1));
        }
    }
    factors
}

fn check_level(model: &FlagModel, d: u32) -> Result<(), ModelError> {
    if d == 0 || d > model.n as u32 {
        return Err(ModelError::InvalidMorphism(format!(
            "level d={d} outside 1..={}",
            model.n
        )));
    }
    Ok(())
}

/// The factor assignment of the canonical generator ε_a: the weight-i
/// element at position p carries the basis vector e_{n−i+1, p}.
pub fn generator_assignment(a: &CompositionTuple) -> Vec<(u32, u32)> {
    let n = a.arity() as u32;
    (0..a.total() as usize)
        .map(|pos| {
            let (i, p) = element_at(a, pos);
            (n - i + 1, p)
        })
        .collect()
}

/// Basis index of ε_a (with trivial coefficient) inside a W- or Q-shape
/// built from a.
pub fn generator_index(shape: &ModuleShape, a: &CompositionTuple) -> Result<usize, ModelError> {
    shape
        .index_of(&Monomial::one(), &generator_assignment(a))
        .ok_or_else(|| {
            ModelError::ModelTooSmall(format!("the generator of W_{a} needs more columns"))
        })
}

/// A linear map between two truncated modules, stored column-sparse with
/// integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    source: Arc<ModuleShape>,
    target: Arc<ModuleShape>,
    cols: Vec<Vec<(usize, i64)>>,
}

impl LinMap {
    pub fn new(
        source: Arc<ModuleShape>,
        target: Arc<ModuleShape>,
        cols: Vec<Vec<(usize, i64)>>,
    ) -> Self {
        assert_eq!(cols.len(), source.dim(), "one column per source basis vector");
        let cols = cols.into_iter().map(normalize_column).collect();
        LinMap { source, target, cols }
    }

    pub fn identity(shape: Arc<ModuleShape>) -> Self {
        let cols = (0..shape.dim()).map(|i| vec![(i, 1)]).collect();
        LinMap { source: shape.clone(), target: shape, cols }
    }

    pub fn source(&self) -> &ModuleShape {
        &self.source
    }

    pub fn target(&self) -> &ModuleShape {
        &self.target
    }

    pub fn column(&self, idx: usize) -> &[(usize, i64)] {
        &self.cols[idx]
    }

    /// g ∘ f.
    pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap, ModelError> {
        if *f.target != *g.source {
            return Err(ModelError::InvalidMorphism(
                "inner shapes do not match under composition".into(),
            ));
        }
        let cols = f
            .cols
            .iter()
            .map(|col| {
                let mut out = Vec::new();
                for &(mid, c) in col {
                    for &(t, c2) in &g.cols[mid] {
                        out.push((t, c * c2));
                    }
                }
                normalize_column(out)
            })
            .collect();
        Ok(LinMap { source: f.source.clone(), target: g.target.clone(), cols })
    }

    /// Rows of the matrix (target-indexed), as exact sparse rows over the
    /// source coordinates.
    pub fn constraint_rows(&self) -> Vec<SparseRow> {
        let mut rows: HashMap<usize, Vec<(usize, BigRational)>> = HashMap::new();
        for (s, col) in self.cols.iter().enumerate() {
            for &(t, c) in col {
                rows.entry(t).or_default().push((s, BigRational::from_integer(c.into())));
            }
        }
        let mut keys: Vec<usize> = rows.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter().map(|t| sparse_row(rows.remove(&t).unwrap())).collect()
    }
}

fn normalize_column(mut col: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    col.sort_unstable_by_key(|&(t, _)| t);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(col.len());
    for (t, c) in col {
        match out.last_mut() {
            Some((lt, lc)) if *lt == t => *lc += c,
            _ => out.push((t, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

impl Serialize for LinMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut entries: Vec<(usize, usize, i64)> = Vec::new();
        for (s, col) in self.cols.iter().enumerate() {
            for &(t, c) in col {
                entries.push((t, s, c));
            }
        }
        let mut st = serializer.serialize_struct("LinMap", 3)?;
        st.serialize_field("rows", &self.target.dim())?;
        st.serialize_field("cols", &self.source.dim())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Precomputed slot data for a morphism σ: b → a: for each element of b the
/// flattened position of its image in a, plus the positions of the uncovered
/// elements of a.
struct SlotPlan {
    from: Vec<usize>,
    uncovered: Vec<usize>,
}

fn slot_plan(sigma: &WeightedInjection) -> SlotPlan {
    let a = sigma.target();
    let from = (0..sigma.source().total() as usize)
        .map(|pos| {
            let (j, q) = sigma.image_at(pos);
            flat_position(a, j, q)
        })
        .collect();
    let uncovered = sigma
        .uncovered_targets()
        .into_iter()
        .map(|(i, p)| flat_position(a, i, p))
        .collect();
    SlotPlan { from, uncovered }
}

/// The image of a Q_a basis element under f_σ: covered factors carry their
/// vectors to the matching slot of b; each uncovered factor's vector e_{rc}
/// multiplies the coefficient monomial by x_{rc}.
fn f_sigma_image(
    plan: &SlotPlan,
    mono: &Monomial,
    assignment: &[(u32, u32)],
) -> (Monomial, Vec<(u32, u32)>) {
    let mut out_mono = mono.clone();
    for &pos in &plan.uncovered {
        let (r, c) = assignment[pos];
        out_mono = out_mono.mul(&Monomial::variable(r, c));
    }
    let out_assignment = plan.from.iter().map(|&pos| assignment[pos]).collect();
    (out_mono, out_assignment)
}

fn check_fi_morphism(model: &FlagModel, sigma: &WeightedInjection) -> Result<(), ModelError> {
    model.check_arity(sigma.target())?;
    if !sigma.in_flavor(CategoryFlavor::fi()) {
        return Err(ModelError::InvalidMorphism(format!(
            "not a weighted injection of the right flavor: {sigma:?}"
        )));
    }
    Ok(())
}

/// The A-linear, equivariant map f_σ: Q_a^{≤D} → Q_b^{≤D+|a|−|b|} induced by
/// σ: b → a.  Every basis vector maps to a single basis vector with
/// coefficient 1.
pub fn build_f_sigma(
    model: &FlagModel,
    sigma: &WeightedInjection,
    max_deg: u32,
) -> Result<LinMap, ModelError> {
    check_fi_morphism(model, sigma)?;
    let a = sigma.target();
    let b = sigma.source();
    let source = Arc::new(q_shape(model, a, max_deg)?);
    let target = Arc::new(q_shape(model, b, max_deg + a.total() - b.total())?);
    let plan = slot_plan(sigma);
    let cols = (0..source.dim())
        .map(|idx| {
            let (mono, assignment) = source.decode(idx);
            let (out_mono, out_assignment) = f_sigma_image(&plan, mono, &assignment);
            let out_idx = target
                .index_of(&out_mono, &out_assignment)
                .expect("the degree bump keeps every image inside the truncation");
            vec![(out_idx, 1)]
        })
        .collect();
    Ok(LinMap::new(source, target, cols))
}

/// f_σ applied to the canonical generator ε_a alone.
pub fn f_sigma_generator_image(
    model: &FlagModel,
    sigma: &WeightedInjection,
) -> Result<(Monomial, Vec<(u32, u32)>), ModelError> {
    check_fi_morphism(model, sigma)?;
    let a = sigma.target();
    if a.entries().iter().any(|&e| e as usize > model.k) {
        return Err(ModelError::ModelTooSmall(format!(
            "the generator of W_{a} needs more columns than k={}",
            model.k
        )));
    }
    let plan = slot_plan(sigma);
    Ok(f_sigma_image(&plan, &Monomial::one(), &generator_assignment(a)))
}

/// dim Hom(Q_a, Q_b) in the truncated model: the dimension of the
/// λ(a)-weight space of Q_b^{≤D}.  Contract: equals |Hom(b, a)| in the
/// weighted injection category.
pub fn hom_dim_q(
    model: &FlagModel,
    a: &CompositionTuple,
    b: &CompositionTuple,
    max_deg: u32,
) -> Result<u64, ModelError> {
    model.check_arity(a)?;
    model.check_arity(b)?;
    let floor = a.entries().iter().chain(b.entries()).copied().max().unwrap_or(0) as usize + 1;
    if model.k < floor {
        return Err(ModelError::ModelTooSmall(format!(
            "hom dimensions need k ≥ {floor}, the model has k={}",
            model.k
        )));
    }
    if a.total() < b.total() {
        return Ok(0);
    }
    let needed = a.total() - b.total();
    if max_deg < needed {
        return Err(ModelError::TruncationTooSmall { needed, have: max_deg });
    }
    let shape = q_shape(model, b, max_deg)?;
    Ok(shape.weight_space_dim(&lambda_weight(model, a)?))
}

/// The map T_{d,a} → T_{d,b} induced contravariantly by ψ: b → a: covered
/// factors pass to the further quotient, and each uncovered factor is
/// contracted with the linear form ξ_d = e*_{n−d+1,1}.
pub fn build_td_morphism(
    model: &FlagModel,
    d: u32,
    psi: &WeightedInjection,
) -> Result<LinMap, ModelError> {
    model.check_arity(psi.target())?;
    check_level(model, d)?;
    if !psi.in_flavor(CategoryFlavor::Cd(d)) {
        return Err(ModelError::InvalidMorphism(format!(
            "not a level-{d} covering injection: {psi:?}"
        )));
    }
    let a = psi.target();
    let b = psi.source();
    let source = Arc::new(t_shape(model, d, a)?);
    let target = Arc::new(t_shape(model, d, b)?);
    let plan = slot_plan(psi);
    let xi = (model.n as u32 - d + 1, 1);
    let cols = (0..source.dim())
        .map(|idx| {
            let (_, assignment) = source.decode(idx);
            // ξ_d pairs each uncovered factor's vector against e_{n−d+1,1}.
            if plan.uncovered.iter().any(|&pos| assignment[pos] != xi) {
                return Vec::new();
            }
            let mut out_assignment = Vec::with_capacity(plan.from.len());
            for (pos_b, &pos_a) in plan.from.iter().enumerate() {
                let (j, _) = element_at(b, pos_b);
                let (r, c) = assignment[pos_a];
                if r <= model.n as u32 - j {
                    // The vector dies in the further quotient V/V_{n−j}.
                    return Vec::new();
                }
                out_assignment.push((r, c));
            }
            let out_idx = target
                .index_of(&Monomial::one(), &out_assignment)
                .expect("quotient survivors index into the target");
            vec![(out_idx, 1)]
        })
        .collect();
    Ok(LinMap::new(source, target, cols))
}

/// The one-step non-isomorphisms into a: bijections lowering a single
/// element's weight by one, and the injections omitting one weight-d
/// element.  Every non-isomorphism into a factors through one of these.
fn kernel_generator_morphisms(
    d: u32,
    a: &CompositionTuple,
) -> Result<Vec<WeightedInjection>, CatError> {
    let n = a.arity();
    let mut out = Vec::new();
    for i in 2..=n as u32 {
        if a.weight_count(i) == 0 {
            continue;
        }
        let mut entries = a.entries().to_vec();
        entries[i as usize - 1] -= 1;
        entries[i as usize - 2] += 1;
        let b = CompositionTuple::new(entries);
        out.extend(enumerate_homs(CategoryFlavor::Cd(d), &b, a)?);
    }
    if d <= n as u32 && a.weight_count(d) > 0 {
        let mut entries = a.entries().to_vec();
        entries[d as usize - 1] -= 1;
        let b = CompositionTuple::new(entries);
        out.extend(enumerate_homs(CategoryFlavor::Cd(d), &b, a)?);
    }
    Ok(out)
}

/// dim K_{d,a}: the joint kernel of all structure maps out of T_{d,a}
/// induced by non-isomorphisms, computed by exact rank over the one-step
/// generators.
pub fn kernel_intersection_dim(
    model: &FlagModel,
    d: u32,
    a: &CompositionTuple,
) -> Result<u64, ModelError> {
    model.check_arity(a)?;
    check_level(model, d)?;
    if model.k < 2 {
        return Err(ModelError::ModelTooSmall("kernel intersections need k ≥ 2".into()));
    }
    let shape = t_shape(model, d, a)?;
    let mut rows = Vec::new();
    for psi in kernel_generator_morphisms(d, a)? {
        rows.extend(build_td_morphism(model, d, &psi)?.constraint_rows());
    }
    Ok(shape.dim() as u64 - rank(rows) as u64)
}

/// The closed product form that `kernel_intersection_dim` is tested
/// against: k^{Σ_{i≠d} a_i}·(k−1)^{a_d}.
pub fn kernel_dim_formula(model: &FlagModel, d: u32, a: &CompositionTuple) -> u64 {
    let mut out = 1u64;
    for i in 1..=a.arity() as u32 {
        let base = if i == d { model.k as u64 - 1 } else { model.k as u64 };
        out *= base.pow(a.weight_count(i));
    }
    out
}

/// Which Lie-algebra generator set an equivariance check runs over.
///
/// `Parabolic` takes every elementary transformation e_{ct} ↦ e_{rs} with
/// r ≤ c (block upper triangular).  `FormStabilizer(d)` drops the generators
/// with output coordinate (n−d+1, 1): exactly those that fail to annihilate
/// the linear form ξ_d, which is the largest subalgebra under which the
/// ξ_d-contracted maps are equivariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieGenerators {
    Parabolic,
    FormStabilizer(u32),
}

fn elementary_pairs(
    model: &FlagModel,
    gens: LieGenerators,
) -> Vec<((u32, u32), (u32, u32))> {
    let mut out = Vec::new();
    let (n, k) = (model.n as u32, model.k as u32);
    let skip = match gens {
        LieGenerators::Parabolic => None,
        LieGenerators::FormStabilizer(d) => Some((n - d + 1, 1)),
    };
    for r in 1..=n {
        for s in 1..=k {
            if skip == Some((r, s)) {
                continue;
            }
            for c in r..=n {
                for t in 1..=k {
                    out.push(((r, s), (c, t)));
                }
            }
        }
    }
    out
}

/// The elementary transformation e_inp ↦ e_out acting as a derivation on a
/// basis element of the shape: one term per tensor slot carrying e_inp (the
/// term drops when the output row dies in a quotient factor), plus the
/// polynomial term with multiplicity given by the exponent of x_inp.
pub fn apply_elementary(
    shape: &ModuleShape,
    out: (u32, u32),
    inp: (u32, u32),
    idx: usize,
) -> Vec<(usize, i64)> {
    let (mono, assignment) = shape.decode(idx);
    let mut terms = Vec::new();
    for pos in 0..assignment.len() {
        if assignment[pos] != inp {
            continue;
        }
        let (lo, _) = shape.factors[pos].rows(shape.n);
        if out.0 < lo {
            continue;
        }
        let mut moved = assignment.clone();
        moved[pos] = out;
        let idx = shape
            .index_of(mono, &moved)
            .expect("a parabolic move stays inside the factor");
        terms.push((idx, 1));
    }
    if let Some(poly) = shape.poly {
        assert!(
            poly.min_row == 1 || out.0 >= poly.min_row,
            "elementary actions on a row-restricted coefficient ring must stay inside it"
        );
        let mult = mono.0.get(&inp).copied().unwrap_or(0);
        if mult > 0 {
            let mut moved = mono.clone();
            if mult == 1 {
                moved.0.remove(&inp);
            } else {
                moved.0.insert(inp, mult - 1);
            }
            *moved.0.entry(out).or_insert(0) += 1;
            let idx = shape
                .index_of(&moved, &assignment)
                .expect("the degree is unchanged by an elementary move");
            terms.push((idx, mult as i64));
        }
    }
    normalize_column(terms)
}

/// True iff the map commutes with every elementary generator in the set, on
/// every basis vector of its source.
pub fn lie_equivariance_check(model: &FlagModel, f: &LinMap, gens: LieGenerators) -> bool {
    let pairs = elementary_pairs(model, gens);
    for idx in 0..f.source().dim() {
        for &(out, inp) in &pairs {
            // E·f(v): push the column through the action on the target.
            let mut lhs = Vec::new();
            for &(t, c) in f.column(idx) {
                for (t2, c2) in apply_elementary(f.target(), out, inp, t) {
                    lhs.push((t2, c * c2));
                }
            }
            // f(E·v): act on the source basis vector, then map.
            let mut rhs = Vec::new();
            for (s, c) in apply_elementary(f.source(), out, inp, idx) {
                for &(t, c2) in f.column(s) {
                    rhs.push((t, c * c2));
                }
            }
            if normalize_column(lhs) != normalize_column(rhs) {
                return false;
            }
        }
    }
    true
}

/// One generator image inside a presentation: coefficient · monomial ⊗
/// (basis vector of a target block).
#[derive(Debug, Clone)]
pub struct PresentationEntry {
    pub monomial: Monomial,
    pub block: usize,
    pub index: usize,
    pub coeff: BigRational,
}

/// An A_d-linear presentation map F_1 → F_0 between finite sums of modules
/// A_d ⊗ U, recorded by the images of the source generators 1 ⊗ u.
///
/// A_d is the coefficient ring on the variables x_{rc} with r ≥ n−d+1; the
/// blocks U are tensor shapes without coefficients.
#[derive(Debug, Clone)]
pub struct Presentation {
    d: u32,
    source_blocks: Vec<ModuleShape>,
    target_blocks: Vec<ModuleShape>,
    entries: Vec<Vec<Vec<PresentationEntry>>>,
}

impl Presentation {
    /// `entries[α][u]` lists the image of generator u of source block α.
    pub fn new(
        model: &FlagModel,
        d: u32,
        source_blocks: Vec<ModuleShape>,
        target_blocks: Vec<ModuleShape>,
        entries: Vec<Vec<Vec<PresentationEntry>>>,
    ) -> Result<Self, ModelError> {
        check_level(model, d)?;
        let min_row = model.n as u32 - d + 1;
        if entries.len() != source_blocks.len() {
            return Err(ModelError::InvalidPresentation(
                "one entry table per source block".into(),
            ));
        }
        for (alpha, table) in entries.iter().enumerate() {
            if table.len() != source_blocks[alpha].dim() {
                return Err(ModelError::InvalidPresentation(format!(
                    "source block {alpha} has {} generators, table has {}",
                    source_blocks[alpha].dim(),
                    table.len()
                )));
            }
            for entry in table.iter().flatten() {
                if entry.block >= target_blocks.len()
                    || entry.index >= target_blocks[entry.block].dim()
                {
                    return Err(ModelError::InvalidPresentation(format!(
                        "entry targets block {} index {} out of range",
                        entry.block, entry.index
                    )));
                }
                if entry.monomial.0.iter().any(|(&(r, c), &e)| {
                    e > 0 && (r < min_row || r > model.n as u32 || c == 0 || c > model.k as u32)
                }) {
                    return Err(ModelError::InvalidPresentation(format!(
                        "monomial {} uses a variable outside the coefficient ring rows {min_row}..={}",
                        entry.monomial, model.n
                    )));
                }
            }
        }
        Ok(Presentation { d, source_blocks, target_blocks, entries })
    }

    /// The zero presentation onto the given free target.
    pub fn zero(
        model: &FlagModel,
        d: u32,
        target_blocks: Vec<ModuleShape>,
    ) -> Result<Self, ModelError> {
        Presentation::new(model, d, Vec::new(), target_blocks, Vec::new())
    }

    pub fn level(&self) -> u32 {
        self.d
    }

    pub fn source_blocks(&self) -> &[ModuleShape] {
        &self.source_blocks
    }

    pub fn target_blocks(&self) -> &[ModuleShape] {
        &self.target_blocks
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    /// Σ dim U over the target blocks: the presentation target after the
    /// coefficient ring is evaluated.
    pub evaluated_target_dim: usize,
    pub relation_rank: usize,
    pub cokernel_dim: usize,
}

/// The principal-part specialization: evaluate every coefficient variable at
/// the point dual to ξ_d (x_{n−d+1,1} ↦ 1, all other variables ↦ 0) and
/// return the cokernel of the evaluated presentation.  Right-exactness of
/// the evaluation makes this the specialization of the presented module.
pub fn phi_d_of_presentation(
    model: &FlagModel,
    pres: &Presentation,
) -> Result<PhiReport, ModelError> {
    check_level(model, pres.d)?;
    let unit = (model.n as u32 - pres.d + 1, 1);
    let mut offsets = Vec::with_capacity(pres.target_blocks.len());
    let mut total = 0usize;
    for block in &pres.target_blocks {
        offsets.push(total);
        total += block.dim();
    }
    let mut rows = Vec::new();
    for table in &pres.entries {
        for image in table {
            let evaluated: Vec<(usize, BigRational)> = image
                .iter()
                .filter(|e| e.monomial.0.iter().all(|(&v, &exp)| exp == 0 || v == unit))
                .map(|e| (offsets[e.block] + e.index, e.coeff.clone()))
                .collect();
            rows.push(sparse_row(evaluated));
        }
    }
    let relation_rank = rank(rows);
    Ok(PhiReport {
        evaluated_target_dim: total,
        relation_rank,
        cokernel_dim: total - relation_rank,
    })
}
