mod common;

use proptest::prelude::*;

use common::{compositions, diagram_from_columns};
use schubert::lp::{
    drive_to_vertex, is_vertex, rat, solve_feasibility, FeasibilityResult, LpInstance, Rational,
    Sense,
};
use schubert::schubitope::build_polytope;

fn binary_point(bits: u32, n: usize) -> Vec<Rational> {
    (0..n).map(|v| rat(i64::from(bits >> v & 1))).collect()
}

fn has_binary_point(lp: &LpInstance) -> bool {
    let n = lp.num_vars();
    (0u32..(1 << n)).any(|b| lp.check(&binary_point(b, n)).is_ok())
}

fn check_result(lp: &LpInstance, res: &FeasibilityResult) {
    if let FeasibilityResult::Feasible {
        point,
        is_vertex: v,
    } = res
    {
        assert!(lp.check(&point.values).is_ok(), "{lp}");
        assert!(point.values.iter().all(|x| *x >= rat(0)));
        if *v {
            assert!(is_vertex(lp, point));
        }
        let vx = drive_to_vertex(lp, point).unwrap();
        assert!(lp.check(&vx.values).is_ok());
        assert!(is_vertex(lp, &vx));
    }
}

#[test]
fn polytopes_on_3x3_match_binary_brute_force() {
    for mask in 0u32..(1 << 9) {
        let cols: Vec<u32> = (0..3).map(|c| (mask >> (3 * c)) & 7).collect();
        let d = diagram_from_columns(3, &cols);
        for alpha in compositions(d.len(), 3) {
            let lp = build_polytope(&d, &alpha);
            let res = solve_feasibility(&lp);
            assert_eq!(
                res.is_feasible(),
                has_binary_point(&lp),
                "{:?} {alpha:?}",
                d.box_set()
            );
            check_result(&lp, &res);
        }
    }
}

fn row_strategy(nvars: usize) -> impl Strategy<Value = (Vec<i64>, u8, i64)> {
    (prop::collection::vec(-2i64..=2, nvars), 0u8..3, -3i64..=4)
}

fn instance(nvars: usize, rows: &[(Vec<i64>, u8, i64)]) -> LpInstance {
    let mut lp = LpInstance::new((0..nvars).map(|v| format!("x{v}")).collect());
    for v in 0..nvars {
        lp.add_row(vec![(v, rat(1))], Sense::Le, rat(1));
    }
    for (coeffs, sense, rhs) in rows {
        let sense = [Sense::Le, Sense::Eq, Sense::Ge][*sense as usize];
        let c = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(v, &a)| (v, rat(a)))
            .collect();
        lp.add_row(c, sense, rat(*rhs));
    }
    lp
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_instances_are_sound(
        nvars in 1usize..=8,
        rows in prop::collection::vec(row_strategy(8), 0..8),
    ) {
        let rows: Vec<_> = rows.into_iter().map(|(mut c, s, b)| { c.truncate(nvars); (c, s, b) }).collect();
        let lp = instance(nvars, &rows);
        let res = solve_feasibility(&lp);
        check_result(&lp, &res);
        if has_binary_point(&lp) {
            prop_assert!(res.is_feasible());
        }
    }

    #[test]
    fn degenerate_duplicates_terminate(
        nvars in 1usize..=6,
        row in row_strategy(6),
        copies in 1usize..12,
    ) {
        let (mut c, s, _) = row;
        c.truncate(nvars);
        let rows = vec![(c, s, 0); copies];
        let lp = instance(nvars, &rows);
        let res = solve_feasibility(&lp);
        prop_assert!(res.is_feasible());
        check_result(&lp, &res);
    }
}

#[test]
fn empty_instance_is_feasible() {
    let lp = LpInstance::new(Vec::new());
    let res = solve_feasibility(&lp);
    assert!(res.is_feasible());
    assert!(res.point().unwrap().values.is_empty());
}

#[test]
fn classic_cycling_example_terminates() {
    // Beale's example as a feasibility system with its objective turned into a cut.
    let mut lp = LpInstance::new((1..=4).map(|v| format!("x{v}")).collect());
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    lp.add_row(
        vec![(0, r(1, 4)), (1, r(-8, 1)), (2, r(-1, 1)), (3, r(9, 1))],
        Sense::Le,
        rat(0),
    );
    lp.add_row(
        vec![(0, r(1, 2)), (1, r(-12, 1)), (2, r(-1, 2)), (3, r(3, 1))],
        Sense::Le,
        rat(0),
    );
    lp.add_row(vec![(2, rat(1))], Sense::Le, rat(1));
    lp.add_row(
        vec![(0, r(3, 4)), (1, r(-20, 1)), (2, r(1, 2)), (3, r(-6, 1))],
        Sense::Ge,
        r(1, 20),
    );
    let res = solve_feasibility(&lp);
    assert!(res.is_feasible());
    check_result(&lp, &res);
}
