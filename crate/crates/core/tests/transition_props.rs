mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;

use common::compositions;
use schubert::oracle::{
    all_schubert_polynomials, coefficient_oracle, schubert_of_code, SparsePoly,
};
use schubert::perm::{
    code_to_oneline, dominant_component, grassmannian_code, is_vexillary, oneline_to_code,
    permutations, rothe_diagram, shape_and_flag, Cell, Code, OneLine, Partition,
};
use schubert::transition::{
    flagged_schur, kostka, leaf_paths, transition_children, transition_tree, verify_witness,
    RowCountMatrix, TREE_BUDGET,
};

fn widen_to(p: &SparsePoly, n: usize) -> SparsePoly {
    p.widen(n.max(p.nvars()))
}

#[test]
fn transition_identity_on_s5() {
    let n = 8;
    for w in permutations(5) {
        let code = oneline_to_code(&w);
        if is_vexillary(&code) {
            continue;
        }
        let ch = transition_children(&code).unwrap();
        let (del, r) = &ch.deletion;
        let mut rhs =
            SparsePoly::variable(*r, n).mul(&widen_to(&schubert_of_code(del).unwrap(), n));
        for (i, child) in &ch.marches {
            // the march child is w' composed with the transposition (i r)
            let wp = code_to_oneline(del).complete().embed(n);
            assert_eq!(
                oneline_to_code(&wp.swap_positions(*i, *r)),
                *child,
                "{w} march {i}"
            );
            rhs = rhs.add(&widen_to(&schubert_of_code(child).unwrap(), n));
        }
        assert_eq!(widen_to(&schubert_of_code(&code).unwrap(), n), rhs, "{w}");
    }
}

fn monomial_vec(exps: &[usize], l: usize) -> Vec<usize> {
    let mut v = exps.to_vec();
    v.resize(l, 0);
    v
}

#[test]
fn tree_of_53861247() {
    let w = OneLine::new(vec![5, 3, 8, 6, 1, 2, 4, 7]).unwrap();
    let code = oneline_to_code(&w);
    let expected: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![0, 0, 0, 1], vec![7, 3, 5, 4, 1, 2, 6, 8]),
        (vec![0, 0, 0, 1], vec![5, 7, 3, 4, 1, 2, 6, 8]),
        (vec![0, 0, 2, 1], vec![5, 3, 6, 4, 1, 2, 7, 8]),
        (vec![0, 0, 1, 1], vec![6, 3, 5, 4, 1, 2, 7, 8]),
        (vec![0, 0, 1, 1], vec![5, 6, 3, 4, 1, 2, 7, 8]),
        (vec![0, 0, 0, 0], vec![7, 4, 5, 3, 1, 2, 6, 8]),
        (vec![0, 0, 0, 0], vec![5, 7, 4, 3, 1, 2, 6, 8]),
        (vec![0, 0, 2, 0], vec![5, 4, 6, 3, 1, 2, 7, 8]),
        (vec![0, 0, 1, 0], vec![6, 4, 5, 3, 1, 2, 7, 8]),
        (vec![0, 0, 1, 0], vec![5, 6, 4, 3, 1, 2, 7, 8]),
    ];
    let mut want: Vec<(Vec<usize>, Code)> = expected
        .into_iter()
        .map(|(e, v)| (e, oneline_to_code(&OneLine::new(v).unwrap())))
        .collect();
    let mut got: Vec<(Vec<usize>, Code)> = leaf_paths(&code)
        .into_iter()
        .map(|(s, leaf)| (monomial_vec(&s.delwt(4), 4), leaf))
        .collect();
    want.sort();
    got.sort();
    assert_eq!(got, want);

    let tree = transition_tree(&code, TREE_BUDGET).unwrap();
    assert_eq!(tree.leaves().len(), 10);
    let text = tree.render();
    assert!(text.contains("leaf delwt=x3^2*x4"), "{text}");
    assert!(text.contains("--x4-->"), "{text}");
}

#[test]
fn flagged_schur_matches_vexillary_s5() {
    let table = all_schubert_polynomials(5).unwrap();
    for w in permutations(5) {
        let code = oneline_to_code(&w);
        if !is_vexillary(&code) {
            continue;
        }
        let (lambda, phi) = shape_and_flag(&code).unwrap();
        let p = flagged_schur(&lambda, &phi, 5).unwrap();
        assert_eq!(p, table[&w], "{w}");
    }
}

#[test]
fn kostka_matches_grassmannian_oracle() {
    for a in 0..=3 {
        for b in 0..=a {
            for c in 0..=b {
                let lambda = Partition::new(vec![a, b, c]).unwrap();
                let code = grassmannian_code(&lambda);
                let w = code_to_oneline(&code).complete();
                let l = code.len().max(1);
                for alpha in compositions(lambda.size(), l) {
                    let k = BigInt::from(kostka(&lambda, &alpha));
                    assert_eq!(
                        k,
                        coefficient_oracle(&w, &alpha).unwrap(),
                        "{lambda:?} {alpha:?}"
                    );
                }
            }
        }
    }
}

/// The row-constant tableau of shape `lambda`: row `i` holds only `i`.
fn row_constant(lambda: &Partition, l: usize) -> RowCountMatrix {
    let rows: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| vec![i + 1; p])
        .collect();
    RowCountMatrix::from_rows(&rows, l)
}

#[test]
fn generated_paths_verify() {
    for n in 2..=6 {
        for w in permutations(n) {
            let code = oneline_to_code(&w);
            let l = code.len();
            for (s, leaf) in leaf_paths(&code) {
                assert!(s.len() <= l * l);
                let (lambda, _) = shape_and_flag(&leaf).unwrap();
                let r = row_constant(&lambda, l);
                let alpha: Vec<usize> = s
                    .delwt(l)
                    .iter()
                    .zip(r.content())
                    .map(|(a, b)| a + b)
                    .collect();
                let v = verify_witness(&s, &r, &code, &alpha);
                assert!(v.accepted, "{w} {s} {v:?}");
                assert_eq!(v.leaf, Some(leaf));
            }
        }
    }
}

/// Edge-connected components of `D(w)` minus its dominant part that meet row `r`.
fn components_in_row(code: &Code, r: usize) -> usize {
    let d = rothe_diagram(code);
    let dom = dominant_component(&d);
    let cells: BTreeSet<Cell> = d.box_set().difference(&dom).copied().collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &start in cells.iter().filter(|c| c.0 == r) {
        if seen.contains(&start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some((a, b)) = stack.pop() {
            if !seen.insert((a, b)) {
                continue;
            }
            for nb in [
                (a + 1, b),
                (a.wrapping_sub(1), b),
                (a, b + 1),
                (a, b.wrapping_sub(1)),
            ] {
                if cells.contains(&nb) {
                    stack.push(nb);
                }
            }
        }
    }
    count
}

#[test]
fn marches_reduce_components_in_the_accessible_row() {
    for n in 2..=6 {
        for w in permutations(n) {
            let code = oneline_to_code(&w);
            let Ok(ch) = transition_children(&code) else {
                continue;
            };
            let r = ch.accessible_box.0;
            let before = components_in_row(&code, r);
            for (i, child) in &ch.marches {
                let after = components_in_row(child, r);
                assert!(after < before, "{w} march {i}: {before} -> {after}");
            }
        }
    }
}
