mod common;

use common::{enumerate_pruned, enumerate_unpruned, table_of};
use leibniz::catalog::{self, golden_count, CorpusMode};
use leibniz::linalg::LinearMap;
use leibniz::{Field, Gf, LeibnizAlgebra, Rational};

fn sorted_tables<const P: u32>(dim: usize) -> Vec<Vec<u32>> {
    let c = catalog::enumerate_corpus::<Gf<P>>(dim).unwrap();
    assert_eq!(c.mode, CorpusMode::Exhaustive);
    let mut t: Vec<Vec<u32>> = c.algebras.iter().map(table_of).collect();
    let n = t.len();
    t.sort();
    t.dedup();
    assert_eq!(t.len(), n, "duplicate tables");
    t
}

#[test]
fn golden_counts_small() {
    for dim in 0..=2 {
        assert_eq!(Some(sorted_tables::<2>(dim).len()), golden_count(dim, 2));
        assert_eq!(Some(sorted_tables::<3>(dim).len()), golden_count(dim, 3));
        assert_eq!(Some(sorted_tables::<5>(dim).len()), golden_count(dim, 5));
    }
    assert_eq!(Some(sorted_tables::<2>(3).len()), golden_count(3, 2));
}

#[test]
fn golden_count_dim3_gf3() {
    assert_eq!(Some(sorted_tables::<3>(3).len()), golden_count(3, 3));
}

#[test]
fn pruned_reference_matches_unpruned_on_dim_two() {
    for p in [2, 3, 5] {
        for n in 0..=2 {
            assert_eq!(enumerate_pruned(p, n), enumerate_unpruned(p, n), "p = {p}, n = {n}");
        }
    }
}

#[test]
fn enumerator_matches_references() {
    assert_eq!(sorted_tables::<2>(2), enumerate_unpruned(2, 2));
    assert_eq!(sorted_tables::<3>(2), enumerate_unpruned(3, 2));
    assert_eq!(sorted_tables::<5>(2), enumerate_unpruned(5, 2));
    assert_eq!(sorted_tables::<2>(3), enumerate_pruned(2, 3));
}

#[test]
fn enumeration_order_is_lexicographic() {
    let c = catalog::enumerate_corpus::<Gf<3>>(2).unwrap();
    let t: Vec<Vec<u32>> = c.algebras.iter().map(table_of).collect();
    assert!(t.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn over_budget_is_rejected() {
    assert!(catalog::enumerate_corpus::<Gf<7>>(3).is_err());
    assert!(catalog::enumerate_corpus::<Gf<2>>(4).is_err());
    assert!(catalog::enumerate_corpus::<Rational>(1).is_err());
}

#[test]
fn random_extensions_are_deterministic_leibniz() {
    let a = catalog::random_extension_corpus::<Gf<3>>(1, 4, 100).unwrap();
    let b = catalog::random_extension_corpus::<Gf<3>>(1, 4, 100).unwrap();
    assert_eq!(a.len(), 100);
    assert_eq!(a.seed, Some(1));
    assert!(a.algebras.iter().all(|l| l.dim() == 4 && l.check_right_leibniz()));
    let ta: Vec<_> = a.algebras.iter().map(table_of).collect();
    let tb: Vec<_> = b.algebras.iter().map(table_of).collect();
    assert_eq!(ta, tb);
    let c = catalog::random_extension_corpus::<Gf<3>>(2, 4, 100).unwrap();
    assert_ne!(ta, c.algebras.iter().map(table_of).collect::<Vec<_>>());
}

#[test]
fn extension_rejects_non_leibniz() {
    let l = LeibnizAlgebra::<Rational>::abelian(1);
    let one = LinearMap::identity(1);
    let zero = LinearMap::from_images(1, vec![vec![Rational::from_i64(0)]]);
    // [a, x] = a, [x, a] = 0: the non-Lie almost abelian algebra
    let ext = catalog::one_dim_extension(&l, &one, &zero, &[Rational::from_i64(0)]).unwrap();
    assert!(!ext.is_lie() && ext.check_right_leibniz());
    // [a, x] = a, [x, a] = a fails at (x, a, x)
    assert!(catalog::one_dim_extension(&l, &one, &one, &[Rational::from_i64(0)]).is_err());
}

#[test]
fn catalog_annotations_verify() {
    fn check<F: Field>() {
        for e in catalog::catalog::<F>() {
            e.verify().unwrap_or_else(|err| panic!("{} over {}: {err}", e.name, F::spec()));
            assert!(e.algebra.check_right_leibniz(), "{}", e.name);
        }
    }
    check::<Rational>();
    check::<Gf<3>>();
    check::<Gf<5>>();
    check::<Gf<7>>();
}

#[test]
fn example_requires_odd_characteristic() {
    assert!(catalog::example::<Gf<2>>().is_err());
    assert!(catalog::example::<Gf<3>>().unwrap().check_right_leibniz());
    assert!(catalog::example::<Gf<5>>().unwrap().check_right_leibniz());
    assert_eq!(catalog::example::<Rational>().unwrap().table().entries().count(), 4);
}
