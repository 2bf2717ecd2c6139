mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{compositions, diagram_from_columns};
use schubert::perm::{oneline_to_code, permutations, Diagram};
use schubert::tableaux::{
    enumerate_column_strict, enumerate_fci, enumerate_perfect, greedy_tableau, theta,
    weigandt_fillings, DEFAULT_BUDGET,
};

fn grid(n: usize, mask: u32) -> Diagram {
    let cols: Vec<u32> = (0..n).map(|c| (mask >> (n * c)) & ((1 << n) - 1)).collect();
    diagram_from_columns(n, &cols)
}

fn set(n: usize, mask: u32) -> BTreeSet<usize> {
    (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn greedy_is_flagged_injective_and_attains_theta(d in 0u32..(1 << 25), s in 0u32..32) {
        let d = grid(5, d);
        let s = set(5, s);
        let pi = greedy_tableau(&d, &s);
        prop_assert!(pi.is_flagged());
        prop_assert!(pi.is_column_injective());
        prop_assert_eq!(pi.preimage(&s).len(), theta(&d, &s));
    }

    #[test]
    fn greedy_preimage_is_monotone(d in 0u32..(1 << 25), s in 0u32..32, extra in 0u32..32) {
        let d = grid(5, d);
        let small = set(5, s);
        let big = set(5, s | extra);
        let a = greedy_tableau(&d, &small).preimage(&small);
        let b = greedy_tableau(&d, &big).preimage(&big);
        prop_assert!(a.is_subset(&b));
    }

    #[test]
    fn greedy_union_law(d in 0u32..(1 << 25), s in 0u32..32, t in 0u32..32) {
        let d = grid(5, d);
        let t = t & !s;
        let (s, t, st) = (set(5, s), set(5, t), set(5, s | t));
        let first = greedy_tableau(&d, &s).preimage(&s);
        let rest = d.without(&first);
        let second = greedy_tableau(&rest, &t).preimage(&t);
        let whole = greedy_tableau(&d, &st).preimage(&st);
        let joined: BTreeSet<_> = first.union(&second).copied().collect();
        prop_assert_eq!(whole, joined);
    }
}

/// Diagrams of `[4]^2` with at most `k` boxes, sampled deterministically.
fn small_diagrams(k: u32) -> impl Iterator<Item = Diagram> {
    (0u32..(1 << 16))
        .filter(move |m| m.count_ones() <= k)
        .step_by(7)
        .map(|m| grid(4, m))
}

#[test]
fn greedy_is_optimal_among_fci() {
    for d in small_diagrams(5) {
        let all = enumerate_fci(&d, DEFAULT_BUDGET).unwrap();
        for s in 0..16 {
            let s = set(4, s);
            let best = theta(&d, &s);
            for tau in &all {
                assert!(
                    tau.preimage(&s).len() <= best,
                    "{d:?} {s:?}\n{}",
                    tau.render()
                );
            }
            assert!(all.iter().any(|tau| tau.preimage(&s).len() == best));
        }
    }
}

#[test]
fn perfect_iff_column_strict_iff_full_fci() {
    for d in small_diagrams(6) {
        let fci = enumerate_fci(&d, DEFAULT_BUDGET).unwrap();
        let full: BTreeSet<Vec<usize>> = fci
            .iter()
            .filter(|t| t.is_fully_labelled())
            .map(|t| t.content(4))
            .collect();
        for alpha in compositions(d.len(), 4) {
            let perfect = !enumerate_perfect(&d, &alpha, DEFAULT_BUDGET)
                .unwrap()
                .is_empty();
            let strict = !enumerate_column_strict(&d, Some(&alpha), DEFAULT_BUDGET)
                .unwrap()
                .is_empty();
            assert_eq!(perfect, strict, "{d:?} {alpha:?}");
            assert_eq!(perfect, full.contains(&alpha), "{d:?} {alpha:?}");
        }
    }
}

#[test]
fn perfect_tableaux_are_flagged_and_injective() {
    for d in small_diagrams(5) {
        for alpha in compositions(d.len(), 4) {
            for t in enumerate_perfect(&d, &alpha, DEFAULT_BUDGET).unwrap() {
                assert!(t.is_fully_labelled() && t.is_flagged() && t.is_column_injective());
                assert_eq!(t.content(4), alpha);
            }
        }
    }
}

#[test]
fn weigandt_contents_on_s5() {
    let table = schubert::oracle::all_schubert_polynomials(5).unwrap();
    for w in permutations(5) {
        let code = oneline_to_code(&w);
        let n132 = schubert::perm::count_132(&w) as usize;
        let contents: BTreeSet<Vec<usize>> = weigandt_fillings(&code)
            .iter()
            .map(|f| f.content(5))
            .collect();
        assert!(contents.len() > n132, "{w}");
        for c in contents {
            assert!(table[&w].coefficient(&c) > 0.into(), "{w} {c:?}");
        }
    }
}
