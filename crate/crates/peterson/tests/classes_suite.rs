//! Peterson class structure checked independently of the library's caches:
//! Monk expansions are re-verified with direct Billey calls, product
//! identities are checked pointwise, and the basis matrices are audited for
//! triangularity across every family through rank five.

mod common;

use common::{all_subsets, seeded_rng, system};
use num::{BigInt, BigRational, One};
use peterson::{Peterson, RootSystem, TMonomial};
use proptest::prelude::*;
use rand::Rng;

/// The localization p_{v_K}(w_L) recomputed from raw Billey calls: class word
/// from the component classification, point word from the parabolic longest
/// element, no Peterson caches involved.
fn raw_localization(rs: &RootSystem, class: &[usize], point: &[usize]) -> TMonomial {
    let subset = rs.classify_subset(class).unwrap();
    let v = rs.element_of(&rs.coxeter_word(&subset)).unwrap();
    let w = rs.longest_element(point).unwrap();
    rs.billey_specialized(&v, &rs.canonical_word(&w)).unwrap()
}

#[test]
fn monk_expansions_hold_pointwise_for_every_pair_in_rank_three_and_d4() {
    for name in ["A3", "B3", "C3", "D4"] {
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        let subsets = all_subsets(rs.rank());
        for base in &subsets {
            for i in 1..=rs.rank() {
                let expansion = pet.monk(i, base).unwrap();
                for point in &subsets {
                    let lhs =
                        raw_localization(&rs, &[i], point).mul(&raw_localization(&rs, base, point));
                    let mut rhs = expansion
                        .diagonal()
                        .mul(&raw_localization(&rs, base, point));
                    for term in expansion.terms() {
                        let contribution =
                            raw_localization(&rs, term.subset.indices(), point).scale(&term.coeff);
                        rhs = rhs.checked_add(&contribution).unwrap();
                    }
                    assert_eq!(lhs, rhs, "{name}: i={i} K={base:?} L={point:?}");
                }
            }
        }
    }
}

#[test]
fn monk_coefficients_are_nonnegative_and_degree_zero() {
    for name in ["A3", "B3", "C3", "D4", "G2"] {
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        for base in all_subsets(rs.rank()) {
            for i in 1..=rs.rank() {
                let expansion = pet.monk(i, &base).unwrap();
                assert!(
                    expansion.diagonal().coeff() >= &BigRational::from_integer(BigInt::from(0))
                );
                for term in expansion.terms() {
                    assert!(
                        term.coeff >= BigRational::from_integer(BigInt::from(0)),
                        "{name}"
                    );
                    assert_eq!(term.subset.size(), base.len() + 1, "{name}");
                }
            }
        }
    }
}

#[test]
fn disconnected_products_factor_at_every_fixed_point() {
    for name in ["A4", "D4"] {
        let rs = system(name);
        let subsets = all_subsets(rs.rank());
        for j in &subsets {
            for k in &subsets {
                if j.is_empty() || k.is_empty() || j.iter().any(|i| k.contains(i)) {
                    continue;
                }
                let mut union: Vec<usize> = j.iter().chain(k.iter()).copied().collect();
                union.sort_unstable();
                let union_subset = rs.classify_subset(&union).unwrap();
                let disconnected = union_subset.components().iter().all(|c| {
                    c.index_map().iter().all(|i| j.contains(i))
                        || c.index_map().iter().all(|i| k.contains(i))
                });
                if !disconnected {
                    continue;
                }
                for point in &subsets {
                    let product =
                        raw_localization(&rs, j, point).mul(&raw_localization(&rs, k, point));
                    assert_eq!(
                        raw_localization(&rs, &union, point),
                        product,
                        "{name}: {j:?} {k:?} {point:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn basis_tables_are_triangular_with_positive_integer_diagonals_through_rank_five() {
    let mut names = vec!["G2".to_string(), "F4".to_string()];
    for n in 1..=5 {
        names.push(format!("A{n}"));
    }
    for n in 2..=5 {
        names.push(format!("B{n}"));
        names.push(format!("C{n}"));
    }
    for n in 4..=5 {
        names.push(format!("D{n}"));
    }
    for name in names {
        let rs = system(&name);
        let pet = Peterson::new(&rs).unwrap();
        let table = pet.basis_table();
        let subsets = table.subsets().to_vec();
        for (row, point) in subsets.iter().enumerate() {
            for (col, class) in subsets.iter().enumerate() {
                let entry = table.entry(row, col);
                let contained = class.indices().iter().all(|i| point.contains(*i));
                if !contained {
                    assert!(entry.is_zero(), "{name}: zero above the support");
                } else if row == col {
                    assert!(entry.coeff().is_integer(), "{name}");
                    assert!(
                        entry.coeff() > &BigRational::from_integer(BigInt::from(0)),
                        "{name}"
                    );
                    assert_eq!(entry.degree(), class.size(), "{name}");
                }
            }
        }
    }
}

#[test]
fn giambelli_constants_follow_the_component_family_rule() {
    // Connected components contribute |K|!, halved for a D component and
    // divided by three for an E component; components multiply.
    let cases = [
        (
            "A5",
            vec![1, 2, 3, 4, 5],
            BigRational::from_integer(BigInt::from(120)),
        ),
        (
            "B5",
            vec![2, 3, 4, 5],
            BigRational::from_integer(BigInt::from(24)),
        ),
        (
            "C5",
            vec![1, 2, 3, 4, 5],
            BigRational::from_integer(BigInt::from(120)),
        ),
        (
            "D5",
            vec![2, 3, 4, 5],
            BigRational::from_integer(BigInt::from(12)),
        ),
        (
            "D5",
            vec![1, 2, 3, 4, 5],
            BigRational::from_integer(BigInt::from(60)),
        ),
        (
            "E6",
            vec![1, 2, 3, 4, 5, 6],
            BigRational::from_integer(BigInt::from(240)),
        ),
        (
            "E6",
            vec![1, 3, 4, 5, 6],
            BigRational::from_integer(BigInt::from(120)),
        ),
        (
            "F4",
            vec![1, 2, 3, 4],
            BigRational::from_integer(BigInt::from(24)),
        ),
        ("G2", vec![1, 2], BigRational::from_integer(BigInt::from(2))),
        // {1,3,4,5} in D5 is A1 times the fork chain 4-3-5, an A3, so no
        // D-type halving applies.
        (
            "D5",
            vec![1, 3, 4, 5],
            BigRational::new(BigInt::from(6), BigInt::one()),
        ),
        (
            "B5",
            vec![1, 3, 4, 5],
            BigRational::from_integer(BigInt::from(6)),
        ),
        (
            "A5",
            vec![1, 3, 5],
            BigRational::from_integer(BigInt::from(1)),
        ),
    ];
    for (name, subset, expected) in cases {
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        let certificate = pet.giambelli(&subset).unwrap();
        assert_eq!(certificate.constant(), &expected, "{name} {subset:?}");
    }
}

#[test]
fn giambelli_identity_verified_from_raw_billey_calls() {
    for (name, subset) in [
        ("B4", vec![1, 2, 3, 4]),
        ("D4", vec![1, 2, 3, 4]),
        ("F4", vec![2, 3]),
    ] {
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        let constant = pet.giambelli(&subset).unwrap().constant().clone();
        for point in all_subsets(rs.rank()) {
            let mut product = TMonomial::one();
            for &i in &subset {
                product = product.mul(&raw_localization(&rs, &[i], &point));
            }
            let scaled = raw_localization(&rs, &subset, &point).scale(&constant);
            assert_eq!(scaled, product, "{name} at {point:?}");
        }
    }
}

#[test]
fn localization_zero_exactly_outside_the_support_cone() {
    let rs = system("B4");
    let pet = Peterson::new(&rs).unwrap();
    for class in all_subsets(4) {
        for point in all_subsets(4) {
            let value = pet.localization(&class, &point).unwrap();
            let contained = class.iter().all(|i| point.contains(i));
            assert_eq!(value.is_zero(), !contained, "K={class:?} L={point:?}");
            if contained {
                assert_eq!(value.degree(), class.len());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_localizations_match_raw_billey_calls(
        name in prop::sample::select(vec!["A4", "B4", "C4", "D4", "F4"]),
        seed in any::<u64>(),
    ) {
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        let mut rng = seeded_rng(seed);
        let subsets = all_subsets(rs.rank());
        let class = subsets[rng.random_range(0..subsets.len())].clone();
        let point = subsets[rng.random_range(0..subsets.len())].clone();
        prop_assert_eq!(
            pet.localization(&class, &point).unwrap(),
            raw_localization(&rs, &class, &point)
        );
    }

    #[test]
    fn random_monk_coefficients_clear_denominators_against_the_diagonal(
        name in prop::sample::select(vec!["A4", "B4", "C4", "D4"]),
        seed in any::<u64>(),
    ) {
        // c_{i,K}^J * p_{v_J}(w_J) is the integer monomial
        // (p_{s_i}(w_J) - p_{s_i}(w_K)) * p_{v_K}(w_J), so denominators always
        // divide the diagonal localization.
        let rs = system(name);
        let pet = Peterson::new(&rs).unwrap();
        let mut rng = seeded_rng(seed);
        let subsets = all_subsets(rs.rank());
        let base = subsets[rng.random_range(0..subsets.len())].clone();
        let i = rng.random_range(1..=rs.rank());
        let expansion = pet.monk(i, &base).unwrap();
        for term in expansion.terms() {
            let diag = pet
                .localization(term.subset.indices(), term.subset.indices())
                .unwrap();
            let cleared = &term.coeff * diag.coeff();
            prop_assert!(cleared.is_integer());
        }
    }
}
