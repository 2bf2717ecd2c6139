//! Schubitope membership and the polytopes that decide it.
//!
//! `alpha` lies in the Schubitope of `D` exactly when the tableau polytope
//! `P(D, alpha)` is nonempty, and for a Rothe diagram that can be checked on a
//! much smaller compressed polytope `Q` whose columns are classes of identical
//! diagram columns.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::flow::MaxFlow;
use crate::lp::{
    self, assert_integral_vertex, drive_to_vertex, rat, FeasibilityResult, LpInstance, Rational,
    Sense, WitnessPoint,
};
use crate::perm::{code_to_oneline, rothe_diagram, Code, Diagram};
use crate::tableaux::Tableau;

/// Largest grid accepted by [`schubitope_contains_direct`].
pub const DIRECT_MAX_N: usize = 18;

/// `theta^c_D(S)` for every column, with `S` and the columns as bitmasks over rows.
fn theta_mask(columns: &[u32], n: usize, s: u32) -> usize {
    let mut total = 0;
    for &col in columns {
        let mut open = 0usize;
        for r in 0..n {
            let bit = 1u32 << r;
            match (col & bit != 0, s & bit != 0) {
                (true, true) => total += 1,
                (false, true) => open += 1,
                (true, false) if open > 0 => {
                    open -= 1;
                    total += 1;
                }
                _ => {}
            }
        }
    }
    total
}

fn column_masks(d: &Diagram) -> Vec<u32> {
    let mut cols = vec![0u32; d.n()];
    for (r, c) in d.boxes() {
        cols[c - 1] |= 1 << (r - 1);
    }
    cols
}

/// Pads `alpha` to `n` entries; `None` if something nonzero sits past `n`.
fn fit(alpha: &[usize], n: usize) -> Option<Vec<usize>> {
    if alpha.iter().skip(n).any(|&a| a != 0) {
        return None;
    }
    let mut v = alpha.to_vec();
    v.resize(n, 0);
    Some(v)
}

/// Checks `sum alpha = #D` and `sum_{i in S} alpha_i <= theta_D(S)` over all `2^n` subsets.
pub fn schubitope_contains_direct(d: &Diagram, alpha: &[usize]) -> Result<bool> {
    let n = d.n();
    if n > DIRECT_MAX_N {
        return Err(Error::Budget {
            what: "subset enumeration grid size",
            size: n,
            limit: DIRECT_MAX_N,
        });
    }
    let Some(alpha) = fit(alpha, n) else {
        return Ok(false);
    };
    if alpha.iter().sum::<usize>() != d.len() {
        return Ok(false);
    }
    let cols = column_masks(d);
    for s in 0u32..(1 << n) {
        let need: usize = (0..n).filter(|i| s & (1 << i) != 0).map(|i| alpha[i]).sum();
        if need > theta_mask(&cols, n, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Name of the variable for label `i` in column `j`.
pub fn var_name(i: usize, j: usize) -> String {
    format!("a{i}_{j}")
}

/// Index of `alpha_{ij}` in column-major order.
pub fn var_index(n: usize, i: usize, j: usize) -> usize {
    (j - 1) * n + (i - 1)
}

/// `P(D, alpha)` in `n^2` variables: bounds, row sums, and column prefix flags.
pub fn build_polytope(d: &Diagram, alpha: &[usize]) -> LpInstance {
    build_compressed(&Compression::trivial(d), alpha)
}

/// Groups of identical columns of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compression {
    /// No box lies below this row.
    pub m: usize,
    /// Column classes `P_k`, each sorted.
    pub classes: Vec<Vec<usize>>,
    /// `p_k = min P_k`.
    pub representatives: Vec<usize>,
    /// `lambda_k = #P_k`.
    pub multiplicities: Vec<usize>,
    /// `R_k`, the rows of the boxes in each column of `P_k`.
    pub row_sets: Vec<Vec<usize>>,
}

impl Compression {
    /// One class per column of the grid, `m = n`.
    pub fn trivial(d: &Diagram) -> Self {
        let n = d.n();
        Compression {
            m: n,
            classes: (1..=n).map(|c| vec![c]).collect(),
            representatives: (1..=n).collect(),
            multiplicities: vec![1; n],
            row_sets: (1..=n).map(|c| d.column_rows(c)).collect(),
        }
    }

    /// Classes of `D(w)` read off the sorted values `w(1) < ... < w(L)` (after
    /// sorting): each value is a singleton class and each gap between
    /// consecutive values is an interval class. `m = L`.
    pub fn from_code(code: &Code) -> Self {
        let w = code_to_oneline(code);
        let l = w.len();
        let mut sorted = w.values().to_vec();
        sorted.sort_unstable();
        let mut classes = Vec::new();
        let mut prev = 0;
        for &v in &sorted {
            if v > prev + 1 {
                classes.push((prev + 1..v).collect::<Vec<_>>());
            }
            classes.push(vec![v]);
            prev = v;
        }
        let representatives: Vec<usize> = classes.iter().map(|p| p[0]).collect();
        let row_sets = representatives
            .iter()
            .map(|&p| {
                let mut seen = false;
                let mut rows = Vec::new();
                for r in 1..=l {
                    if w.at(r) > p && !seen {
                        rows.push(r);
                    }
                    // p is taken by row r, so later rows lose column p
                    if w.at(r) == p {
                        seen = true;
                    }
                }
                rows
            })
            .collect();
        Compression {
            m: l,
            multiplicities: classes.iter().map(Vec::len).collect(),
            classes,
            representatives,
            row_sets,
        }
    }

    /// `l`, the number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of boxes the compression stands for, `sum lambda_k #R_k`.
    pub fn size(&self) -> usize {
        self.multiplicities
            .iter()
            .zip(&self.row_sets)
            .map(|(l, r)| l * r.len())
            .sum()
    }

    /// True when this is a compression of `d`: no box below row `m`, every
    /// column of a class has row set `R_k`, and every nonempty column is covered.
    pub fn is_compression_of(&self, d: &Diagram) -> bool {
        if d.boxes().any(|(r, _)| r > self.m) {
            return false;
        }
        let mut covered = vec![false; d.n() + 1];
        for (k, class) in self.classes.iter().enumerate() {
            if self.multiplicities[k] != class.len() || self.representatives[k] != class[0] {
                return false;
            }
            for &c in class {
                let rows = if c <= d.n() {
                    d.column_rows(c)
                } else {
                    Vec::new()
                };
                if rows != self.row_sets[k] {
                    return false;
                }
                if c <= d.n() {
                    if covered[c] {
                        return false;
                    }
                    covered[c] = true;
                }
            }
        }
        (1..=d.n()).all(|c| covered[c] || d.column_rows(c).is_empty())
    }
}

/// `Q(D, C, alpha)` in `m * l` variables. Variable `(i, k)` is named after
/// label `i` and the representative column `p_k`, so the trivial compression
/// reproduces [`build_polytope`] exactly.
pub fn build_compressed(c: &Compression, alpha: &[usize]) -> LpInstance {
    let m = c.m;
    let l = c.len();
    let idx = |i: usize, k: usize| (k - 1) * m + (i - 1);
    let mut names = vec![String::new(); m * l];
    for k in 1..=l {
        for i in 1..=m {
            names[idx(i, k)] = var_name(i, c.representatives[k - 1]);
        }
    }
    let mut lp = LpInstance::new(names);
    for v in 0..m * l {
        lp.add_row(vec![(v, rat(-1))], Sense::Le, rat(0));
    }
    for v in 0..m * l {
        lp.add_row(vec![(v, rat(1))], Sense::Le, rat(1));
    }
    for i in 1..=m {
        let coeffs = (1..=l)
            .map(|k| (idx(i, k), rat(c.multiplicities[k - 1] as i64)))
            .collect();
        let a = alpha.get(i - 1).copied().unwrap_or(0);
        lp.add_row(coeffs, Sense::Eq, rat(a as i64));
    }
    for k in 1..=l {
        let rows = &c.row_sets[k - 1];
        for s in 1..=m {
            let coeffs = (1..=s).map(|i| (idx(i, k), rat(-1))).collect();
            let count = rows.iter().filter(|&&r| r <= s).count();
            lp.add_row(coeffs, Sense::Le, rat(-(count as i64)));
        }
    }
    lp
}

/// Decides `Q` by max flow. Label `i` sends `lambda_k x_ik` units into class
/// `k` at level `i`; the chain of class `k` can carry at most
/// `lambda_k #{r in R_k : r >= s}` units from level `s` downward, which is the
/// prefix condition. Returns `x_ik` on success.
pub fn compressed_flow(c: &Compression, alpha: &[usize]) -> Option<Vec<Rational>> {
    let m = c.m;
    let l = c.len();
    let total: usize = alpha.iter().sum();
    if alpha.len() > m || total != c.size() {
        return None;
    }
    let mut g = MaxFlow::new(2);
    let (source, sink) = (0, 1);
    let labels: Vec<usize> = (0..m).map(|_| g.add_node()).collect();
    for i in 0..m {
        let a = alpha.get(i).copied().unwrap_or(0);
        g.add_edge(source, labels[i], a as i64);
    }
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for k in 0..l {
        let rows = &c.row_sets[k];
        let Some(&top) = rows.last() else { continue };
        let lam = c.multiplicities[k] as i64;
        let chain: Vec<usize> = (0..top).map(|_| g.add_node()).collect();
        for s in 1..=top {
            let e = g.add_edge(labels[s - 1], chain[s - 1], lam);
            entries.insert((s, k + 1), e);
            if s > 1 {
                let below = rows.iter().filter(|&&r| r >= s).count() as i64;
                g.add_edge(chain[s - 1], chain[s - 2], lam * below);
            }
        }
        g.add_edge(chain[0], sink, lam * rows.len() as i64);
    }
    if g.max_flow(source, sink) != total as i64 {
        return None;
    }
    let mut x = vec![Rational::zero(); m * l];
    for (&(i, k), &e) in &entries {
        let lam = c.multiplicities[k - 1] as i64;
        x[(k - 1) * m + (i - 1)] = BigRational::new(g.flow(e).into(), lam.into());
    }
    Some(x)
}

/// Copies `x_ik` to every column of `P_k` to get a point of `P(D, alpha)` on an `n x n` grid.
pub fn expand(c: &Compression, n: usize, q: &[Rational]) -> WitnessPoint {
    let mut values = vec![Rational::zero(); n * n];
    for (k, class) in c.classes.iter().enumerate() {
        for &j in class {
            if j > n {
                continue;
            }
            for i in 1..=c.m.min(n) {
                values[var_index(n, i, j)] = q[k * c.m + (i - 1)].clone();
            }
        }
    }
    WitnessPoint { values }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompressionKind {
    #[default]
    Rothe,
    Trivial,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Engine {
    #[default]
    Flow,
    Simplex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecideOptions {
    pub compression: CompressionKind,
    pub engine: Engine,
}

/// Compression and content vector for a query, or `None` when `alpha` fails
/// the support or sum test outright.
fn prepare(
    code: &Code,
    alpha: &[usize],
    kind: CompressionKind,
) -> Option<(Compression, Vec<usize>)> {
    let l = code.len();
    let alpha = fit(alpha, l)?;
    if alpha.iter().sum::<usize>() != code.size() {
        return None;
    }
    let c = match kind {
        CompressionKind::Rothe => Compression::from_code(code),
        CompressionKind::Trivial => Compression::trivial(&rothe_diagram(code).tight()),
    };
    let alpha = fit(&alpha, c.m)?;
    Some((c, alpha))
}

/// The compressed instance `Q` a decision would solve, or `None` when `alpha`
/// is rejected before any LP is built.
pub fn compressed_instance(
    code: &Code,
    alpha: &[usize],
    kind: CompressionKind,
) -> Option<LpInstance> {
    prepare(code, alpha, kind).map(|(c, a)| build_compressed(&c, &a))
}

/// A point of `Q` if there is one.
fn solve_compressed(c: &Compression, alpha: &[usize], engine: Engine) -> Option<Vec<Rational>> {
    match engine {
        Engine::Flow => compressed_flow(c, alpha),
        Engine::Simplex => lp::solve_feasibility(&build_compressed(c, alpha))
            .point()
            .map(|p| p.values.clone()),
    }
}

/// Whether the coefficient of `x^alpha` in the Schubert polynomial of the
/// permutation with this code is nonzero.
pub fn decide_nonvanishing(code: &Code, alpha: &[usize]) -> bool {
    decide_nonvanishing_with(code, alpha, DecideOptions::default())
}

pub fn decide_nonvanishing_with(code: &Code, alpha: &[usize], opts: DecideOptions) -> bool {
    match prepare(code, alpha, opts.compression) {
        None => false,
        Some((c, alpha)) => solve_compressed(&c, &alpha, opts.engine).is_some(),
    }
}

/// Nonemptiness of `P(D, alpha)` for an arbitrary diagram.
pub fn decide_diagram(d: &Diagram, alpha: &[usize], engine: Engine) -> bool {
    let Some(alpha) = fit(alpha, d.n()) else {
        return false;
    };
    if alpha.iter().sum::<usize>() != d.len() {
        return false;
    }
    solve_compressed(&Compression::trivial(d), &alpha, engine).is_some()
}

/// Reads a column-strict tableau off an integral point of `P(D, alpha)`:
/// in each column the chosen labels are matched to the boxes in increasing order.
pub fn tableau_from_point(d: &Diagram, point: &WitnessPoint) -> Result<Tableau> {
    let n = d.n();
    let mut labels = BTreeMap::new();
    for j in 1..=n {
        let rows = d.column_rows(j);
        let chosen: Vec<usize> = (1..=n)
            .filter(|&i| point.values[var_index(n, i, j)].is_one())
            .collect();
        if chosen.len() != rows.len() {
            return Err(Error::InfeasiblePoint(j));
        }
        for (r, l) in rows.into_iter().zip(chosen) {
            labels.insert((r, j), Some(l));
        }
    }
    Tableau::new(d.clone(), labels)
}

/// Solves `P(D, alpha)` directly and turns the vertex into a tableau.
pub fn polytope_witness(d: &Diagram, alpha: &[usize]) -> Result<Option<Tableau>> {
    let Some(alpha) = fit(alpha, d.n()) else {
        return Ok(None);
    };
    if alpha.iter().sum::<usize>() != d.len() {
        return Ok(None);
    }
    let lp = build_polytope(d, &alpha);
    let res = lp::solve_feasibility(&lp);
    match assert_integral_vertex(&lp, &res)? {
        None => Ok(None),
        Some(p) => tableau_from_point(d, &p).map(Some),
    }
}

pub fn witness_perfect_tableau(code: &Code, alpha: &[usize]) -> Result<Option<Tableau>> {
    witness_with(code, alpha, DecideOptions::default())
}

/// Witness built from the compressed solution: expand to `P`, move to a
/// vertex, check it is integral, and read off the tableau.
pub fn witness_with(code: &Code, alpha: &[usize], opts: DecideOptions) -> Result<Option<Tableau>> {
    let Some((c, alpha_c)) = prepare(code, alpha, opts.compression) else {
        return Ok(None);
    };
    let Some(q) = solve_compressed(&c, &alpha_c, opts.engine) else {
        return Ok(None);
    };
    let d = rothe_diagram(code).tight();
    let n = d.n();
    let Some(alpha_p) = fit(&alpha_c, n) else {
        return Ok(None);
    };
    let lp = build_polytope(&d, &alpha_p);
    let expanded = expand(&c, n, &q);
    let vertex = drive_to_vertex(&lp, &expanded)?;
    let res = FeasibilityResult::Feasible {
        point: vertex,
        is_vertex: true,
    };
    let point = assert_integral_vertex(&lp, &res)?.expect("feasible result");
    tableau_from_point(&d, &point).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use crate::tableaux::theta;

    fn d31524() -> Diagram {
        rothe_diagram(&Code::new(vec![2, 0, 2]))
    }

    #[test]
    fn direct_examples() {
        assert!(schubitope_contains_direct(&d31524(), &[2, 1, 1]).unwrap());
        assert!(!schubitope_contains_direct(&d31524(), &[4, 0, 0]).unwrap());
        assert!(schubitope_contains_direct(&Diagram::empty(0), &[]).unwrap());
        assert!(schubitope_contains_direct(&Diagram::empty(19), &[]).is_err());
    }

    #[test]
    fn mask_theta_matches_words() {
        let d = d31524();
        let cols = column_masks(&d);
        for s in 0u32..32 {
            let set: BTreeSet<usize> = (1..=5).filter(|i| s & (1 << (i - 1)) != 0).collect();
            assert_eq!(theta_mask(&cols, 5, s), theta(&d, &set));
        }
    }

    #[test]
    fn worked_polytope() {
        let d = Diagram::new(2, [(1, 1), (1, 2), (2, 2)]).unwrap();
        let lp = build_polytope(&d, &[2, 1]);
        assert_eq!(lp.names(), &["a1_1", "a2_1", "a1_2", "a2_2"]);
        assert_eq!(lp.rows().len(), 3 * 4 + 2);
        let c_rhs: Vec<Rational> = lp.rows()[10..].iter().map(|r| r.rhs.clone()).collect();
        assert_eq!(c_rhs, vec![rat(-1), rat(-1), rat(-1), rat(-2)]);
        let c_rows: Vec<Vec<Rational>> = lp.rows()[10..].iter().map(|r| r.dense(4)).collect();
        let expect = [[-1, 0, 0, 0], [-1, -1, 0, 0], [0, 0, -1, 0], [0, 0, -1, -1]];
        for (row, e) in c_rows.iter().zip(expect) {
            assert_eq!(row, &e.iter().map(|&v| rat(v)).collect::<Vec<_>>());
        }
        let b: Vec<Vec<Rational>> = lp.rows()[8..10].iter().map(|r| r.dense(4)).collect();
        assert_eq!(b[0], vec![rat(1), rat(0), rat(1), rat(0)]);
        assert_eq!(lp.rows()[8].sense, Sense::Eq);
        let res = lp::solve_feasibility(&lp);
        let p = assert_integral_vertex(&lp, &res).unwrap().unwrap();
        assert_eq!(p.values, vec![rat(1), rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn empty_polytope_at_zero() {
        let d = Diagram::empty(2);
        let lp = build_polytope(&d, &[0, 0]);
        let p = lp::solve_feasibility(&lp);
        assert_eq!(p.point().unwrap().values, vec![rat(0); 4]);
    }

    #[test]
    fn polytope_of_31524_has_25_vars() {
        let d = d31524();
        let lp = build_polytope(&d, &[2, 1, 1, 0, 0]);
        assert_eq!(lp.num_vars(), 25);
        assert!(lp::solve_feasibility(&lp).is_feasible());
        assert!(!lp::solve_feasibility(&build_polytope(&d, &[4, 0, 0, 0, 0])).is_feasible());
    }

    #[test]
    fn rothe_compression_4252() {
        let code = Code::new(vec![4, 2, 5, 2]);
        let c = Compression::from_code(&code);
        assert_eq!(
            c.classes,
            vec![vec![1, 2], vec![3], vec![4], vec![5], vec![6, 7], vec![8]]
        );
        assert_eq!(c.m, 4);
        assert!(c.is_compression_of(&rothe_diagram(&code)));
        assert_eq!(c.row_sets[0], vec![1, 2, 3, 4]);
        assert_eq!(c.row_sets[4], vec![3]);
        assert_eq!(c.row_sets[1], vec![1]);
        assert!(c.row_sets[5].is_empty());
    }

    #[test]
    fn single_row_compression() {
        let c = Compression::from_code(&Code::new(vec![5]));
        assert_eq!(c.classes[0], vec![1, 2, 3, 4, 5]);
        assert_eq!(c.row_sets[0], vec![1]);
        assert_eq!(c.multiplicities[0], 5);
        let q = compressed_flow(&c, &[5]).unwrap();
        assert_eq!(q[0], rat(1));
        assert!(lp::solve_feasibility(&build_compressed(&c, &[5])).is_feasible());
    }

    #[test]
    fn compression_31524() {
        let code = Code::new(vec![2, 0, 2]);
        let c = Compression::from_code(&code);
        assert!(c.is_compression_of(&rothe_diagram(&code)));
        assert_eq!(c.classes, vec![vec![1], vec![2], vec![3], vec![4], vec![5]]);
    }

    #[test]
    fn trivial_compression_is_the_polytope() {
        let d = d31524();
        let a = [2, 1, 1, 0, 0];
        assert_eq!(
            build_compressed(&Compression::trivial(&d), &a),
            build_polytope(&d, &a)
        );
    }

    #[test]
    fn decide_examples() {
        let c = Code::new(vec![2, 0, 2]);
        assert!(decide_nonvanishing(&c, &[2, 1, 1]));
        assert!(!decide_nonvanishing(&c, &[4]));
        let w0 = Code::new(vec![3, 2, 1]);
        assert!(decide_nonvanishing(&w0, &[3, 2, 1]));
        assert!(!decide_nonvanishing(&w0, &[2, 2, 2]));
        assert!(decide_nonvanishing(
            &Code::new(vec![4, 2, 5, 2]),
            &[4, 2, 5, 2]
        ));
        assert!(decide_nonvanishing(&Code::identity(), &[]));
        assert!(!decide_nonvanishing(&Code::new(vec![1]), &[]));
        for engine in [Engine::Flow, Engine::Simplex] {
            for compression in [CompressionKind::Rothe, CompressionKind::Trivial] {
                let o = DecideOptions {
                    compression,
                    engine,
                };
                assert!(decide_nonvanishing_with(&c, &[2, 1, 1, 0, 0, 0], o));
                assert!(!decide_nonvanishing_with(&c, &[4], o));
            }
        }
    }

    #[test]
    fn witness_examples() {
        let c = Code::new(vec![2, 0, 2]);
        let t = witness_perfect_tableau(&c, &[2, 1, 1]).unwrap().unwrap();
        assert!(t.is_column_strict() && t.is_flagged());
        assert_eq!(t.content(3), vec![2, 1, 1]);
        assert!(witness_perfect_tableau(&c, &[4]).unwrap().is_none());
        let t = witness_perfect_tableau(&Code::new(vec![3, 2, 1]), &[3, 2, 1])
            .unwrap()
            .unwrap();
        assert!(t.labels().all(|((r, _), l)| l == Some(r)));
    }
}
