//! Cross-checks of library values against the independent oracles in
//! `support`: tabloid/Jacobi–Trudi characters, inner-product LR numbers,
//! induction convolution, and backtracking morphism counts.

mod support;

use flagmod_core::fin_modules::{
    day_tensor_dim, isotypic_projective_dim, principal_dim, simple_dim, ModuleSpec,
};
use flagmod_core::hilbert::{exp_t, hseries_of_symelt, ExpMatrix};
use flagmod_core::partition::{
    compositions_of_total, hook_dimension, lr_coefficient, lr_expand, mn_character,
    partition_tuples_up_to, partitions_of, CompositionTuple, CycleTypeTuple, Partition,
    PartitionTuple,
};
use flagmod_core::symfunc::TensorSymElt;
use flagmod_core::weighted_cat::{enumerate_homs, CategoryFlavor};
use flagmod_core::{BigInt, BigRational};
use support::{centralizer_order, count_weight_injections, CharacterOracle};

fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn factorial(m: u32) -> u64 {
    (1..=u64::from(m)).product()
}

#[test]
fn oracle_table_is_internally_consistent() {
    // Column orthogonality at the identity: Σ_λ χ^λ(1^m)² = m!, and the
    // first orthogonality relation Σ_μ χ^λ(μ)χ^κ(μ)/z_μ = δ_{λκ}.  Both
    // hold for the oracle on its own, before any library comparison.
    let oracle = CharacterOracle::up_to(6);
    for m in 1..=6u32 {
        let ones = Partition::new(vec![1; m as usize]);
        let shapes = partitions_of(m);
        let square_sum: i64 = shapes
            .iter()
            .map(|lam| {
                let dim = oracle.chi(lam, &ones);
                dim * dim
            })
            .sum();
        assert_eq!(square_sum, factorial(m) as i64);
        for lam in &shapes {
            for kappa in &shapes {
                let inner: BigRational = shapes
                    .iter()
                    .map(|mu| {
                        BigRational::new(
                            BigInt::from(oracle.chi(lam, mu) * oracle.chi(kappa, mu)),
                            BigInt::from(centralizer_order(mu)),
                        )
                    })
                    .sum();
                assert_eq!(inner, rational(i64::from(lam == kappa)));
            }
        }
    }
}

#[test]
fn characters_match_the_tabloid_route() {
    let oracle = CharacterOracle::up_to(6);
    for m in 1..=6u32 {
        let shapes = partitions_of(m);
        for lam in &shapes {
            for mu in &shapes {
                assert_eq!(
                    mn_character(lam, mu).unwrap(),
                    oracle.chi(lam, mu),
                    "character of {lam} at {mu}"
                );
            }
        }
        // The one-row shape carries the trivial representation.
        let row = Partition::new(vec![m]);
        for mu in &shapes {
            assert_eq!(mn_character(&row, mu).unwrap(), 1);
        }
    }
    let sign = Partition::new(vec![1, 1]);
    assert_eq!(mn_character(&sign, &Partition::new(vec![2])).unwrap(), -1);
    let hook = Partition::new(vec![2, 1]);
    assert_eq!(mn_character(&hook, &Partition::new(vec![1, 1, 1])).unwrap(), 2);
}

#[test]
fn hook_dimensions_are_identity_column_characters() {
    let oracle = CharacterOracle::up_to(6);
    for m in 1..=6u32 {
        let ones = Partition::new(vec![1; m as usize]);
        for lam in partitions_of(m) {
            assert_eq!(hook_dimension(&lam) as i64, oracle.chi(&lam, &ones), "dim {lam}");
        }
    }
    assert_eq!(hook_dimension(&Partition::new(vec![2, 1])), 2);
}

#[test]
fn lr_coefficients_match_character_inner_products() {
    let oracle = CharacterOracle::up_to(6);
    for p in 1..=5u32 {
        for q in 1..=(6 - p) {
            for lam in partitions_of(p) {
                for mu in partitions_of(q) {
                    let mut induced_dim = 0u64;
                    for nu in partitions_of(p + q) {
                        let coeff = lr_coefficient(&lam, &mu, &nu);
                        assert_eq!(
                            coeff as i64,
                            oracle.lr(&lam, &mu, &nu),
                            "c({lam},{mu};{nu})"
                        );
                        induced_dim += coeff * hook_dimension(&nu);
                    }
                    // The expansion exhausts the induced module.
                    let binom = factorial(p + q) / (factorial(p) * factorial(q));
                    assert_eq!(
                        induced_dim,
                        binom * hook_dimension(&lam) * hook_dimension(&mu)
                    );
                }
            }
        }
    }

    let one = Partition::new(vec![1]);
    assert_eq!(lr_coefficient(&one, &one, &Partition::new(vec![2])), 1);
    assert_eq!(lr_coefficient(&one, &one, &Partition::new(vec![1, 1])), 1);
    assert_eq!(lr_coefficient(&one, &one, &Partition::new(vec![3])), 0);
    let mut square = lr_expand(&one, &one);
    square.sort();
    assert_eq!(
        square,
        vec![(Partition::new(vec![1, 1]), 1), (Partition::new(vec![2]), 1)]
    );
}

#[test]
fn schur_products_match_induction_convolution() {
    let oracle = CharacterOracle::up_to(5);

    // Single-row-block case: the product trace at every cycle type equals
    // the convolution over cycle splittings.
    for p in 1..=4u32 {
        for q in 1..=(5 - p) {
            for lam in partitions_of(p) {
                for mu in partitions_of(q) {
                    let x = TensorSymElt::schur(PartitionTuple::new(vec![lam.clone()]), 6);
                    let y = TensorSymElt::schur(PartitionTuple::new(vec![mu.clone()]), 6);
                    let product = x.multiply(&y).unwrap();
                    for nu in partitions_of(p + q) {
                        let at = CycleTypeTuple(PartitionTuple::new(vec![nu.clone()]));
                        assert_eq!(
                            product.trace_at(&at),
                            rational(oracle.product_character(&lam, &mu, &nu)),
                            "trace of s[{lam}]·s[{mu}] at {nu}"
                        );
                    }
                }
            }
        }
    }

    // Multi-row-block case: traces factor through the components.
    for lam in partition_tuples_up_to(2, 2) {
        for mu in partition_tuples_up_to(2, 2) {
            let x = TensorSymElt::schur(lam.clone(), 6);
            let y = TensorSymElt::schur(mu.clone(), 6);
            let product = x.multiply(&y).unwrap();
            let totals: Vec<u32> = (0..2)
                .map(|i| lam.components()[i].size() + mu.components()[i].size())
                .collect();
            for nu0 in partitions_of(totals[0]) {
                for nu1 in partitions_of(totals[1]) {
                    let at = CycleTypeTuple(PartitionTuple::new(vec![nu0.clone(), nu1.clone()]));
                    let expected = oracle.product_character(
                        &lam.components()[0],
                        &mu.components()[0],
                        &nu0,
                    ) * oracle.product_character(
                        &lam.components()[1],
                        &mu.components()[1],
                        &nu1,
                    );
                    assert_eq!(product.trace_at(&at), rational(expected));
                }
            }
        }
    }

    // Pinned expansion: s_(1)·s_(1) = s_(2) + s_(1,1).
    let one = TensorSymElt::schur(PartitionTuple::new(vec![Partition::new(vec![1])]), 4);
    let square = one.multiply(&one).unwrap();
    let expected: Vec<(PartitionTuple, BigRational)> = vec![
        (PartitionTuple::new(vec![Partition::new(vec![1, 1])]), rational(1)),
        (PartitionTuple::new(vec![Partition::new(vec![2])]), rational(1)),
    ];
    let actual: Vec<(PartitionTuple, BigRational)> =
        square.terms().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
    assert_eq!(actual, expected);
}

#[test]
fn traces_are_characters() {
    let oracle = CharacterOracle::up_to(5);
    for m in 1..=5u32 {
        for lam in partitions_of(m) {
            let x = TensorSymElt::schur(PartitionTuple::new(vec![lam.clone()]), 5);
            for mu in partitions_of(m) {
                let at = CycleTypeTuple(PartitionTuple::new(vec![mu.clone()]));
                assert_eq!(x.trace_at(&at), rational(oracle.chi(&lam, &mu)));
            }
        }
    }
    // The two-row sign shape takes value −1 on a transposition.
    let sign = TensorSymElt::schur(PartitionTuple::new(vec![Partition::new(vec![1, 1])]), 2);
    let swap = CycleTypeTuple(PartitionTuple::new(vec![Partition::new(vec![2])]));
    assert_eq!(sign.trace_at(&swap), rational(-1));
}

#[test]
fn series_match_their_defining_expansions() {
    // exp of the level-1 generator: coefficient of t[1,1]·t[1,2] is
    // 1/(1!·1!) = 1.
    let series = exp_t(1, 1, 4).unwrap();
    let key = ExpMatrix::from_entries([((1, 1), 1), ((1, 2), 1)]);
    assert_eq!(series.coefficient(&key), rational(1));

    // Squaring doubles the linear coefficient.
    let square = series.multiply(&series).unwrap();
    assert_eq!(square.coefficient(&ExpMatrix::from_entries([((1, 1), 1)])), rational(2));

    // The sign representation: Σ_μ χ(μ)·t^μ/z-free normalization gives
    // t[1,1]²/2 − t[1,2].
    let sign = TensorSymElt::schur(PartitionTuple::new(vec![Partition::new(vec![1, 1])]), 2);
    let hs = hseries_of_symelt(&sign, 2);
    assert_eq!(
        hs.coefficient(&ExpMatrix::from_entries([((1, 1), 2)])),
        BigRational::new(BigInt::from(1), BigInt::from(2))
    );
    assert_eq!(hs.coefficient(&ExpMatrix::from_entries([((1, 2), 1)])), rational(-1));
    assert_eq!(hs.terms().len(), 2);
}

#[test]
fn series_of_products_multiply() {
    // With the product itself pinned to the convolution oracle above, the
    // series homomorphism property is checked on Schur pairs.
    let trunc = 6;
    for lam in partition_tuples_up_to(1, 2) {
        for mu in partition_tuples_up_to(1, 2) {
            let x = TensorSymElt::schur(lam.clone(), trunc);
            let y = TensorSymElt::schur(mu.clone(), trunc);
            let lhs = hseries_of_symelt(&x.multiply(&y).unwrap(), trunc);
            let rhs = hseries_of_symelt(&x, trunc)
                .multiply(&hseries_of_symelt(&y, trunc))
                .unwrap();
            assert_eq!(lhs, rhs, "series of s[{lam}]·s[{mu}]");
        }
    }
    for lam in partition_tuples_up_to(2, 2) {
        for mu in partition_tuples_up_to(2, 2) {
            let x = TensorSymElt::schur(lam.clone(), trunc);
            let y = TensorSymElt::schur(mu.clone(), trunc);
            let lhs = hseries_of_symelt(&x.multiply(&y).unwrap(), trunc);
            let rhs = hseries_of_symelt(&x, trunc)
                .multiply(&hseries_of_symelt(&y, trunc))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

fn cover_bound(flavor: CategoryFlavor, arity: u32) -> u32 {
    match flavor {
        CategoryFlavor::Fb => arity + 1,
        CategoryFlavor::Cd(d) => d,
    }
}

#[test]
fn hom_counts_match_backtracking_recount() {
    for n in 1..=2usize {
        let mut objects = Vec::new();
        for total in 0..=3u32 {
            objects.extend(compositions_of_total(n, total));
        }
        let mut flavors = vec![CategoryFlavor::fi(), CategoryFlavor::Fb];
        if n >= 2 {
            flavors.push(CategoryFlavor::Cd(2));
        }
        for flavor in flavors {
            for b in &objects {
                for a in &objects {
                    let counted = enumerate_homs(flavor, b, a).unwrap().len() as u64;
                    let recounted = count_weight_injections(
                        b.entries(),
                        a.entries(),
                        cover_bound(flavor, n as u32),
                    );
                    assert_eq!(counted, recounted, "{flavor:?} homs {b} -> {a}");
                }
            }
        }
    }

    let fi = CategoryFlavor::fi();
    let two_zero = CompositionTuple::new(vec![2, 0]);
    let one_one = CompositionTuple::new(vec![1, 1]);
    assert_eq!(enumerate_homs(fi, &two_zero, &one_one).unwrap().len(), 2);
    assert!(enumerate_homs(fi, &CompositionTuple::new(vec![0, 1]), &CompositionTuple::new(vec![1, 0]))
        .unwrap()
        .is_empty());
    assert_eq!(
        enumerate_homs(fi, &CompositionTuple::zero(2), &one_one).unwrap().len(),
        1
    );
    let pair = CompositionTuple::new(vec![2]);
    assert_eq!(enumerate_homs(CategoryFlavor::Fb, &pair, &pair).unwrap().len(), 2);
}

#[test]
fn module_dimensions_match_counting_oracles() {
    // Principal projectives: dimension = morphism count, recounted by
    // backtracking.
    for n in 1..=2usize {
        let mut objects = Vec::new();
        for total in 0..=3u32 {
            objects.extend(compositions_of_total(n, total));
        }
        for a in &objects {
            for s in &objects {
                assert_eq!(
                    principal_dim(a, s).unwrap(),
                    count_weight_injections(a.entries(), s.entries(), 1)
                );
            }
        }
    }
    let a = CompositionTuple::new(vec![1, 0]);
    let s = CompositionTuple::new(vec![1, 1]);
    assert_eq!(principal_dim(&a, &s).unwrap(), 2);

    // Simple modules: the hook-length dimension equals the identity-column
    // character.
    let oracle = CharacterOracle::up_to(4);
    let hook = PartitionTuple::new(vec![Partition::new(vec![2, 1])]);
    assert_eq!(simple_dim(&hook, &CompositionTuple::new(vec![3])).unwrap(), 2);
    for lam in partition_tuples_up_to(2, 3) {
        let sizes = lam.size_vector();
        let expected: i64 = lam
            .components()
            .iter()
            .map(|c| oracle.chi(c, &Partition::new(vec![1; c.size() as usize])))
            .product();
        assert_eq!(simple_dim(&lam, &sizes).unwrap() as i64, expected);
    }

    // Isotypic pieces of projectives: dim λ · |Hom| / |Aut|, all three
    // factors independently recomputed.
    for lam in partition_tuples_up_to(2, 3) {
        let sizes = lam.size_vector();
        let dim_lam: u64 = lam
            .components()
            .iter()
            .map(|c| oracle.chi(c, &Partition::new(vec![1; c.size() as usize])) as u64)
            .product();
        let aut: u64 = sizes.entries().iter().map(|&m| factorial(m)).product();
        for total in 0..=4u32 {
            for s in compositions_of_total(2, total) {
                let homs = count_weight_injections(sizes.entries(), s.entries(), 1);
                assert_eq!(
                    isotypic_projective_dim(&lam, &s).unwrap(),
                    dim_lam * homs / aut,
                    "isotypic dim of {lam} at {s}"
                );
            }
        }
    }
    let two = PartitionTuple::new(vec![Partition::new(vec![2])]);
    assert_eq!(isotypic_projective_dim(&two, &CompositionTuple::new(vec![3])).unwrap(), 3);
    let sign = PartitionTuple::new(vec![Partition::new(vec![1, 1])]);
    assert_eq!(isotypic_projective_dim(&sign, &CompositionTuple::new(vec![2])).unwrap(), 1);

    // Day convolution of principal projectives against the recount.
    let one = CompositionTuple::new(vec![1]);
    let pair = CompositionTuple::new(vec![2]);
    let product = day_tensor_dim(
        &ModuleSpec::principal(one.clone()),
        &ModuleSpec::principal(one.clone()),
        &pair,
    )
    .unwrap();
    assert_eq!(product, count_weight_injections(pair.entries(), pair.entries(), 1));
    assert_eq!(product, 2);
}
