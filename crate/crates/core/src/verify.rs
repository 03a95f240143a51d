//! Named verification suites: each one checks a family of structural
//! identities exhaustively up to the bounds in a [`RunConfig`] and reports
//! one line per identity, with the first counterexample spelled out on
//! failure.
//!
//! The suites are shared by the acceptance tests and the `verify`
//! subcommand of the CLI; given an identical config (seed included) a suite
//! produces an identical report.

use std::collections::BTreeSet;

use num::{BigRational, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::fin_modules::{day_tensor_dim, ModuleError, ModuleSpec};
use crate::hilbert::{
    exp_t, hseries_of_class, hseries_of_symelt, independence_certificate, HilbertError, KClass,
};
use crate::ideal::{
    canonicalize, contains, enumerate_canonical, is_prime, monomial_realize, prime_chain,
    radical, sum, IdealError, Monomial, PIdeal,
};
use crate::model::{
    build_f_sigma, f_sigma_generator_image, hom_dim_q, kernel_dim_formula,
    kernel_intersection_dim, lambda_weight, lie_equivariance_check, phi_d_of_presentation,
    q_shape, w_shape, FlagModel, LieGenerators, LinMap, ModelError, Presentation,
    PresentationEntry,
};
use crate::partition::{
    binomial, compositions_up_to, dominance_leq, hook_dimension, lr_coefficient, lr_expand,
    mn_character, partition_tuples_up_to, partitions_of, CompositionTuple, Partition,
    PartitionError,
};
use crate::symfunc::{SymFuncError, TensorSymElt};
use crate::weighted_cat::{
    compose, enumerate_homs, hom_exists, inward_objects, CatError, CategoryFlavor,
    WeightedInjection,
};
use crate::RunConfig;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// One verified identity: pass/fail plus either the instance count or the
/// first counterexample.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl CheckReport {
    fn new(suite: &str) -> Self {
        CheckReport { suite: suite.to_string(), lines: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }
}

/// Accumulates one identity over many instances: remembers the count and the
/// first counterexample.
struct Tally {
    checked: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, first_failure: None }
    }

    fn record(&mut self, pass: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass && self.first_failure.is_none() {
            self.first_failure = Some(witness());
        }
    }

    fn into_line(self, name: &str) -> CheckLine {
        match self.first_failure {
            None => CheckLine {
                name: name.to_string(),
                pass: true,
                detail: format!("{} instances", self.checked),
            },
            Some(w) => CheckLine { name: name.to_string(), pass: false, detail: w },
        }
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &[
        "hom-equivalence",
        "hilbert-ad",
        "kernel-formula",
        "fsigma",
        "day",
        "ideal-lattice",
        "characters",
        "free-rank",
        "multiplicativity",
        "dominance",
        "phi",
        "prime-chain",
    ]
}

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    match name {
        "hom-equivalence" => suite_hom_equivalence(cfg),
        "hilbert-ad" => suite_hilbert_ad(cfg),
        "kernel-formula" => suite_kernel_formula(cfg),
        "fsigma" => suite_fsigma(cfg),
        "day" => suite_day(cfg),
        "ideal-lattice" => suite_ideal_lattice(cfg),
        "characters" => suite_characters(cfg),
        "free-rank" => suite_free_rank(cfg),
        "multiplicativity" => suite_multiplicativity(cfg),
        "dominance" => suite_dominance(cfg),
        "phi" => suite_phi(cfg),
        "prime-chain" => suite_prime_chain(cfg),
        other => Err(VerifyError::UnknownSuite(other.to_string())),
    }
}

fn ceiling_k(tuples: &[&CompositionTuple]) -> usize {
    tuples
        .iter()
        .flat_map(|t| t.entries())
        .copied()
        .max()
        .unwrap_or(0) as usize
        + 1
}

/// Hom-space equivalence: the λ(a)-weight space of Q_b has dimension
/// |Hom(b, a)|, and the f_σ generator images are a basis of it.
fn suite_hom_equivalence(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut dims = Tally::new();
    let mut bases = Tally::new();
    for n in 1..=cfg.n {
        let tuples = compositions_up_to(n, cfg.max_size);
        for a in &tuples {
            for b in &tuples {
                let model = FlagModel::new(n, ceiling_k(&[a, b]))?;
                let homs = enumerate_homs(CategoryFlavor::fi(), b, a)?;
                let dim = hom_dim_q(&model, a, b, a.total())?;
                dims.record(dim == homs.len() as u64, || {
                    format!("n={n} a={a} b={b}: weight space {dim} vs {} morphisms", homs.len())
                });
                if homs.is_empty() {
                    continue;
                }
                // Each image is a single basis vector of Q_b in weight λ(a);
                // distinctness plus the dimension match makes them a basis.
                let shape = q_shape(&model, b, a.total() - b.total())?;
                let lam = lambda_weight(&model, a)?;
                let mut indices = BTreeSet::new();
                let mut good = true;
                for sigma in &homs {
                    let (mono, assignment) = f_sigma_generator_image(&model, sigma)?;
                    match shape.index_of(&mono, &assignment) {
                        Some(idx) if shape.weight_of(idx) == lam => {
                            good &= indices.insert(idx);
                        }
                        _ => good = false,
                    }
                }
                bases.record(good && indices.len() as u64 == dim, || {
                    format!(
                        "n={n} a={a} b={b}: {} distinct images for weight space of dim {dim}",
                        indices.len()
                    )
                });
            }
        }
    }
    let mut report = CheckReport::new("hom-equivalence");
    report.lines.push(dims.into_line("weight-space dimension equals morphism count"));
    report.lines.push(bases.into_line("generator images form a weight-space basis"));
    Ok(report)
}

/// The series of the level-d coefficient ring is exp(T_d), term by term.
fn suite_hilbert_ad(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut tally = Tally::new();
    for n in 1..=cfg.n {
        for d in 1..=n {
            let class = KClass::basis(n, d, cfg.n_trunc)?;
            let series = hseries_of_class(&class, cfg.n_trunc)?;
            let expected = exp_t(n, d, cfg.n_trunc)?;
            tally.record(series == expected, || {
                format!("n={n} d={d}: series of the basis class differs from exp(T_{d})")
            });
        }
    }
    let mut report = CheckReport::new("hilbert-ad");
    report.lines.push(tally.into_line("class series of A_d equals exp(T_d)"));
    Ok(report)
}

/// The joint kernel of the non-isomorphism structure maps has the closed
/// product dimension.
fn suite_kernel_formula(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut tally = Tally::new();
    for n in 1..=cfg.n {
        for k in 2..=cfg.k {
            let model = FlagModel::new(n, k)?;
            for d in 1..=n as u32 {
                for a in compositions_up_to(n, cfg.max_size) {
                    let computed = kernel_intersection_dim(&model, d, &a)?;
                    let formula = kernel_dim_formula(&model, d, &a);
                    tally.record(computed == formula, || {
                        format!("n={n} k={k} d={d} a={a}: kernel {computed} vs formula {formula}")
                    });
                }
            }
        }
    }
    let mut report = CheckReport::new("kernel-formula");
    report.lines.push(tally.into_line("kernel dimension matches k^(Σa_i)·(k−1)^(a_d)"));
    Ok(report)
}

fn interleave(
    a: &CompositionTuple,
    a2: &CompositionTuple,
    v: &[(u32, u32)],
    v2: &[(u32, u32)],
) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(v.len() + v2.len());
    let (mut p, mut p2) = (0usize, 0usize);
    for i in 1..=a.arity() as u32 {
        for _ in 0..a.weight_count(i) {
            out.push(v[p]);
            p += 1;
        }
        for _ in 0..a2.weight_count(i) {
            out.push(v2[p2]);
            p2 += 1;
        }
    }
    out
}

/// Functoriality, identity, monoidality, and Lie equivariance of the induced
/// maps between truncated principal projectives.
fn suite_fsigma(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut identity = Tally::new();
    let mut functorial = Tally::new();
    let mut equivariant = Tally::new();
    let mut monoidal = Tally::new();
    for n in 1..=cfg.n {
        let model = FlagModel::new(n, cfg.k)?;
        let tuples = compositions_up_to(n, cfg.max_size);
        // Identity law.
        for a in &tuples {
            let id = WeightedInjection::identity(a);
            let map = build_f_sigma(&model, &id, 1)?;
            let shape = std::sync::Arc::new(q_shape(&model, a, 1)?);
            identity.record(map == LinMap::identity(shape), || {
                format!("n={n} a={a}: identity morphism does not induce the identity map")
            });
        }
        // Functoriality over all composable pairs, and equivariance of every
        // single induced map.
        for a in &tuples {
            for b in &tuples {
                let sigmas = enumerate_homs(CategoryFlavor::fi(), b, a)?;
                for sigma in &sigmas {
                    let f_sigma = build_f_sigma(&model, sigma, 1)?;
                    equivariant.record(
                        lie_equivariance_check(&model, &f_sigma, LieGenerators::Parabolic),
                        || format!("n={n} σ: {b}→{a} fails parabolic equivariance"),
                    );
                    for c in &tuples {
                        for pi in enumerate_homs(CategoryFlavor::fi(), c, b)? {
                            let direct =
                                build_f_sigma(&model, &compose(sigma, &pi)?, 1)?;
                            let f_pi =
                                build_f_sigma(&model, &pi, 1 + a.total() - b.total())?;
                            let chained = LinMap::compose(&f_pi, &f_sigma)?;
                            functorial.record(direct == chained, || {
                                format!("n={n} σ: {b}→{a}, π: {c}→{b}: composite mismatch")
                            });
                        }
                    }
                }
            }
        }
        // Monoidality: the disjoint union of morphisms acts as the product
        // of the separate actions, on every pair of coefficient-free basis
        // vectors.
        for a in &tuples {
            for a2 in &tuples {
                if a.total() + a2.total() > cfg.max_size {
                    continue;
                }
                for b in &tuples {
                    for b2 in &tuples {
                        for sigma in enumerate_homs(CategoryFlavor::fi(), b, a)? {
                            for pi in enumerate_homs(CategoryFlavor::fi(), b2, a2)? {
                                let union = sigma.disjoint_union(&pi)?;
                                check_monoidal(
                                    &model, &mut monoidal, &sigma, &pi, &union,
                                )?;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut report = CheckReport::new("fsigma");
    report.lines.push(identity.into_line("identity morphisms induce identity maps"));
    report.lines.push(functorial.into_line("composition of morphisms composes the maps"));
    report.lines.push(monoidal.into_line("disjoint unions act factorwise"));
    report.lines.push(equivariant.into_line("every induced map is Lie-equivariant"));
    Ok(report)
}

fn check_monoidal(
    model: &FlagModel,
    tally: &mut Tally,
    sigma: &WeightedInjection,
    pi: &WeightedInjection,
    union: &WeightedInjection,
) -> Result<(), VerifyError> {
    let (a, a2) = (sigma.target(), pi.target());
    let (b, b2) = (sigma.source(), pi.source());
    let f_union = build_f_sigma(model, union, 0)?;
    let f1 = build_f_sigma(model, sigma, 0)?;
    let f2 = build_f_sigma(model, pi, 0)?;
    let one = Monomial::one();
    for i1 in 0..f1.source().dim() {
        let (m1, v1) = f1.source().decode(i1);
        debug_assert_eq!(*m1, one);
        let col1 = f1.column(i1);
        let (im1, iv1) = f1.target().decode(col1[0].0);
        for i2 in 0..f2.source().dim() {
            let (_, v2) = f2.source().decode(i2);
            let col2 = f2.column(i2);
            let (im2, iv2) = f2.target().decode(col2[0].0);
            let joint = f_union
                .source()
                .index_of(&one, &interleave(a, a2, &v1, &v2))
                .expect("interleaved basis exists");
            let col = f_union.column(joint);
            let expected = f_union
                .target()
                .index_of(&im1.mul(im2), &interleave(b, b2, &iv1, &iv2))
                .expect("interleaved image exists");
            tally.record(col == [(expected, 1)], || {
                format!(
                    "σ: {b}→{a} ⊔ π: {b2}→{a2}: union image differs from factorwise image"
                )
            });
        }
    }
    Ok(())
}

/// Day convolution of principal projectives: the convolution dimension at
/// every object agrees with the principal projective of the summed base.
fn suite_day(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut tally = Tally::new();
    for n in 1..=cfg.n {
        let tuples = compositions_up_to(n, cfg.max_size);
        for a in &tuples {
            for b in &tuples {
                if a.total() + b.total() > cfg.max_size {
                    continue;
                }
                let pa = ModuleSpec::principal(a.clone());
                let pb = ModuleSpec::principal(b.clone());
                let joined = ModuleSpec::principal(a.add(b));
                for c in &tuples {
                    let convolved = day_tensor_dim(&pa, &pb, c)?;
                    let direct = joined.dim_at(c)?;
                    tally.record(convolved == direct, || {
                        format!("n={n} a={a} b={b} c={c}: convolution {convolved} vs {direct}")
                    });
                }
            }
        }
    }
    let mut report = CheckReport::new("day");
    report.lines.push(tally.into_line("P_a ⊗ P_b has the dimensions of P_(a+b)"));
    Ok(report)
}

/// The ideal lattice: canonical idempotence, join laws, primality
/// classification, and agreement with the truncated monomial realization.
fn suite_ideal_lattice(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut canonical = Tally::new();
    let mut laws = Tally::new();
    let mut primes = Tally::new();
    let mut realization = Tally::new();
    for n in 1..=cfg.n {
        let ideals = enumerate_canonical(n, cfg.max_size);
        let realize_deg = cfg.max_size + 1;
        let realizations: Vec<_> =
            ideals.iter().map(|i| monomial_realize(i, 2, realize_deg)).collect();
        for i in &ideals {
            canonical.record(canonicalize(n, i.terms())? == *i, || {
                format!("n={n} {i}: canonical form is not a fixed point")
            });
            let prime_by_form = (0..=n as u32).any(|w| {
                PIdeal::prime(n, w).map(|p| p == *i).unwrap_or(false)
            });
            primes.record(is_prime(i) == prime_by_form, || {
                format!("n={n} {i}: primality flag disagrees with the p_i classification")
            });
            laws.record(sum(i, i)? == *i, || format!("n={n} {i}: join not idempotent"));
            laws.record(radical(&radical(i)) == radical(i), || {
                format!("n={n} {i}: radical not idempotent")
            });
            laws.record(contains(&radical(i), i)?, || {
                format!("n={n} {i}: radical does not contain the ideal")
            });
        }
        for (i, ri) in ideals.iter().zip(&realizations) {
            for (j, rj) in ideals.iter().zip(&realizations) {
                let joined = sum(i, j)?;
                laws.record(joined == sum(j, i)?, || {
                    format!("n={n} {i} + {j}: join not commutative")
                });
                laws.record(
                    contains(&joined, i)? && contains(&joined, j)?,
                    || format!("n={n} {i} + {j}: join does not contain both"),
                );
                // Order and join agree with the monomial realization.
                realization.record(contains(i, j)? == ri.is_superset(rj), || {
                    format!("n={n} {i} ⊇ {j}: symbolic and monomial answers differ")
                });
                let joined_real = monomial_realize(&joined, 2, realize_deg);
                let unioned: BTreeSet<_> = ri.union(rj).cloned().collect();
                realization.record(joined_real == unioned, || {
                    format!("n={n} {i} + {j}: realization of the join is not the union")
                });
                for l in &ideals {
                    laws.record(sum(&joined, l)? == sum(i, &sum(j, l)?)?, || {
                        format!("n={n} ({i} + {j}) + {l}: join not associative")
                    });
                }
            }
        }
    }
    let mut report = CheckReport::new("ideal-lattice");
    report.lines.push(canonical.into_line("canonical forms are fixed points"));
    report.lines.push(laws.into_line("join/radical lattice laws"));
    report.lines.push(primes.into_line("primality classification matches p_i forms"));
    report.lines.push(realization.into_line("symbolic lattice matches monomial realization"));
    Ok(report)
}

/// Exact symmetric-group character identities: orthogonality both ways,
/// hook dimensions, sign values, and induced-dimension consistency of the
/// Littlewood–Richardson expansion.
fn suite_characters(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let max = cfg.n_trunc;
    let mut rows = Tally::new();
    let mut cols = Tally::new();
    let mut dims = Tally::new();
    let mut lr = Tally::new();
    for m in 0..=max {
        let parts = partitions_of(m);
        for lam in &parts {
            for kap in &parts {
                let mut inner = BigRational::zero();
                for mu in &parts {
                    let product = mn_character(lam, mu)? * mn_character(kap, mu)?;
                    inner += BigRational::new(product.into(), (mu.z() as i64).into());
                }
                let expected = if lam == kap { BigRational::one() } else { BigRational::zero() };
                rows.record(inner == expected, || {
                    format!("⟨χ^{lam}, χ^{kap}⟩ = {inner}")
                });
            }
        }
        for mu in &parts {
            for nu in &parts {
                let mut total = 0i64;
                for lam in &parts {
                    total += mn_character(lam, mu)? * mn_character(lam, nu)?;
                }
                let expected = if mu == nu { mu.z() as i64 } else { 0 };
                cols.record(total == expected, || {
                    format!("column orthogonality at μ={mu}, ν={nu}: {total}")
                });
            }
        }
        let ones = Partition::new(vec![1; m as usize]);
        for lam in &parts {
            let at_identity = mn_character(lam, &ones)?;
            dims.record(at_identity == hook_dimension(lam) as i64, || {
                format!("χ^{lam}(1^{m}) = {at_identity} vs hook dimension")
            });
        }
        // The sign character is the parity of the permutation.
        for mu in &parts {
            let value = mn_character(&ones, mu)?;
            let parity = if (m - mu.parts().len() as u32) % 2 == 0 { 1 } else { -1 };
            dims.record(value == parity, || format!("sign character at μ={mu}: {value}"));
        }
    }
    // LR expansion: symmetry, and the induced-dimension identity
    // Σ_ν c^ν_{λμ}·dim ν = C(|λ|+|μ|, |λ|)·dim λ·dim μ.
    for total in 0..=max {
        for asize in 0..=total {
            for lam in partitions_of(asize) {
                for mu in partitions_of(total - asize) {
                    let expansion = lr_expand(&lam, &mu);
                    let mut induced = 0u64;
                    for (nu, coeff) in &expansion {
                        lr.record(*coeff == lr_coefficient(&mu, &lam, nu), || {
                            format!("c^{nu}_({lam},{mu}) not symmetric")
                        });
                        induced += coeff * hook_dimension(nu);
                    }
                    let expected =
                        binomial(total, asize) * hook_dimension(&lam) * hook_dimension(&mu);
                    lr.record(induced == expected, || {
                        format!("Σ c·dim for λ={lam}, μ={mu}: {induced} vs {expected}")
                    });
                }
            }
        }
    }
    let mut report = CheckReport::new("characters");
    report.lines.push(rows.into_line("first orthogonality of characters"));
    report.lines.push(cols.into_line("second orthogonality of characters"));
    report.lines.push(dims.into_line("identity and sign column values"));
    report.lines.push(lr.into_line("LR symmetry and induced dimensions"));
    Ok(report)
}

/// The class-to-series map is injective on bounded-degree classes: the
/// free-rank certificate.
fn suite_free_rank(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut tally = Tally::new();
    for n in 1..=cfg.n {
        for g in 0..=1u32 {
            let ok = independence_certificate(n, g, cfg.n_trunc)?;
            tally.record(ok, || {
                format!("n={n} g={g}: spanning classes fail the rank certificate")
            });
        }
    }
    let mut report = CheckReport::new("free-rank");
    report.lines.push(tally.into_line("rank-(n+1) freeness certificate"));
    Ok(report)
}

/// hseries(x·y) = hseries(x)·hseries(y): exhaustively on Schur pairs and on
/// seeded random combinations one degree higher.
fn suite_multiplicativity(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut exhaustive = Tally::new();
    let mut random = Tally::new();
    for n in 1..=cfg.n.min(2) {
        let bound = 2 * cfg.max_size;
        for lam in partition_tuples_up_to(n, cfg.max_size) {
            for kap in partition_tuples_up_to(n, cfg.max_size) {
                let x = TensorSymElt::schur(lam.clone(), bound);
                let y = TensorSymElt::schur(kap.clone(), bound);
                let combined = hseries_of_symelt(&x.multiply(&y)?, bound);
                let factored =
                    hseries_of_symelt(&x, bound).multiply(&hseries_of_symelt(&y, bound))?;
                exhaustive.record(combined == factored, || {
                    format!("n={n} λ={lam} κ={kap}: series of the product differs")
                });
            }
        }
    }
    // Random linear combinations at one degree higher, for the configured
    // arity, seeded for reproducibility.
    let n = cfg.n;
    let degree = cfg.max_size + 1;
    let bound = 2 * degree;
    let pool = partition_tuples_up_to(n, degree);
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    let sample = |rng: &mut ChaCha20Rng| {
        let picks = rng.random_range(1..=2usize);
        let terms = (0..picks).map(|_| {
            let tuple = pool[rng.random_range(0..pool.len())].clone();
            let coeff = loop {
                let c = rng.random_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            (tuple, BigRational::from_integer(coeff.into()))
        });
        TensorSymElt::from_terms(n, bound, terms.collect::<Vec<_>>())
    };
    for trial in 0..100 {
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        let combined = hseries_of_symelt(&x.multiply(&y)?, bound);
        let factored = hseries_of_symelt(&x, bound).multiply(&hseries_of_symelt(&y, bound))?;
        random.record(combined == factored, || {
            format!("trial {trial}: series of the product differs for x={x}, y={y}")
        });
    }
    let mut report = CheckReport::new("multiplicativity");
    report.lines.push(exhaustive.into_line("multiplicative on all Schur pairs"));
    report.lines.push(random.into_line("multiplicative on seeded random pairs"));
    Ok(report)
}

/// The dominance criterion decides morphism existence, and inward sets are
/// finite and correct.
fn suite_dominance(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut fi = Tally::new();
    let mut others = Tally::new();
    let mut inwards = Tally::new();
    for n in 1..=cfg.n {
        let tuples = compositions_up_to(n, cfg.max_size);
        for a in &tuples {
            for b in &tuples {
                let enumerated = !enumerate_homs(CategoryFlavor::fi(), b, a)?.is_empty();
                let predicted = hom_exists(CategoryFlavor::fi(), b, a)?;
                let dominated = dominance_leq(&b.reversed(), &a.reversed())?;
                fi.record(predicted == enumerated && predicted == dominated, || {
                    format!(
                        "n={n} b={b} a={a}: dominance {dominated}, predicate {predicted}, enumeration {enumerated}"
                    )
                });
                let fb_enum = !enumerate_homs(CategoryFlavor::Fb, b, a)?.is_empty();
                others.record(hom_exists(CategoryFlavor::Fb, b, a)? == fb_enum, || {
                    format!("n={n} b={b} a={a}: bijection flavor predicate mismatch")
                });
                others.record(
                    b.total() == a.total() || !fb_enum,
                    || format!("n={n} b={b} a={a}: bijection between different sizes"),
                );
                for d in 1..=n as u32 {
                    let flavor = CategoryFlavor::Cd(d);
                    let cd_enum = !enumerate_homs(flavor, b, a)?.is_empty();
                    others.record(hom_exists(flavor, b, a)? == cd_enum, || {
                        format!("n={n} d={d} b={b} a={a}: covering flavor predicate mismatch")
                    });
                }
            }
            for d in 1..=n as u32 {
                let inward = inward_objects(d, a)?;
                let mut expected = BTreeSet::new();
                for total in 0..=a.total() {
                    for b in crate::partition::compositions_of_total(n, total) {
                        if hom_exists(CategoryFlavor::Cd(d), &b, a)? {
                            expected.insert(b);
                        }
                    }
                }
                let sound = inward == expected
                    && inward
                        .iter()
                        .map(|b| dominance_leq(&b.reversed(), &a.reversed()))
                        .collect::<Result<Vec<_>, _>>()?
                        .into_iter()
                        .all(|x| x);
                inwards.record(sound, || {
                    format!("n={n} d={d} a={a}: inward set has {} members", inward.len())
                });
            }
        }
    }
    let mut report = CheckReport::new("dominance");
    report.lines.push(fi.into_line("reversal dominance decides morphism existence"));
    report.lines.push(others.into_line("bijection and covering flavors agree with enumeration"));
    report.lines.push(inwards.into_line("inward sets are finite, dominated, and complete"));
    Ok(report)
}

/// The principal-part specialization: identity on free covers, zero on
/// explicit torsion.
fn suite_phi(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let mut free = Tally::new();
    let mut torsion = Tally::new();
    for n in 1..=cfg.n {
        let model = FlagModel::new(n, cfg.k)?;
        for d in 1..=n as u32 {
            for a in compositions_up_to(n, cfg.max_size) {
                let block = w_shape(&model, &a)?;
                let dim = block.dim();
                let report = phi_d_of_presentation(
                    &model,
                    &Presentation::zero(&model, d, vec![block])?,
                )?;
                free.record(report.cokernel_dim == dim, || {
                    format!(
                        "n={n} d={d} a={a}: free cover specializes to {} not {dim}",
                        report.cokernel_dim
                    )
                });
            }
            // The quotient by the full top graded row is torsion below the
            // level: its specialization vanishes.
            let unit = w_shape(&model, &CompositionTuple::zero(n))?;
            let min_row = n as u32 - d + 1;
            let sources = vec![unit.clone(); cfg.k];
            let entries = (1..=cfg.k as u32)
                .map(|c| {
                    vec![vec![PresentationEntry {
                        monomial: Monomial::variable(min_row, c),
                        block: 0,
                        index: 0,
                        coeff: BigRational::one(),
                    }]]
                })
                .collect();
            let pres = Presentation::new(&model, d, sources, vec![unit], entries)?;
            let report = phi_d_of_presentation(&model, &pres)?;
            torsion.record(report.cokernel_dim == 0, || {
                format!("n={n} d={d}: torsion quotient keeps dimension {}", report.cokernel_dim)
            });
        }
    }
    let mut report = CheckReport::new("phi");
    report.lines.push(free.into_line("specialization is the identity on free covers"));
    report.lines.push(torsion.into_line("specialization kills lower-level torsion"));
    Ok(report)
}

/// The prime ideals form one chain of length n.
fn suite_prime_chain(cfg: &RunConfig) -> Result<CheckReport, VerifyError> {
    let n = cfg.n;
    let chain = prime_chain(n);
    let mut report = CheckReport::new("prime-chain");
    let mut tally = Tally::new();
    tally.record(chain.len() == n + 1, || {
        format!("n={n}: chain has {} members", chain.len())
    });
    for p in &chain {
        tally.record(is_prime(p), || format!("n={n}: {p} not prime"));
    }
    for pair in chain.windows(2) {
        let ascending =
            contains(&pair[1], &pair[0]).unwrap_or(false) && pair[0] != pair[1];
        tally.record(ascending, || {
            format!("n={n}: {} ⊊ {} fails", pair[0], pair[1])
        });
    }
    // Completeness: every prime of the classification lies on the chain.
    for ideal in enumerate_canonical(n, 1) {
        tally.record(!is_prime(&ideal) || chain.contains(&ideal), || {
            format!("n={n}: prime {ideal} missing from the chain")
        });
    }
    let line = tally.into_line(&format!("single prime chain of length {n}"));
    report.lines.push(line);
    Ok(report)
}
