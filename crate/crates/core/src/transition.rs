//! Coefficients through the transition tree.
//!
//! At a non-vexillary `w` with accessible box `z = (r, c)` the Schubert
//! polynomial splits as `x_r S_{w'} + sum S_{w''}`: `w'` deletes `z`, and
//! each `w''` marches boxes up to a pivot row. Vexillary nodes are leaves whose
//! polynomial is a flagged Schur function, so a coefficient is a sum of
//! flagged Kostka numbers over root-to-leaf paths.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::SparsePoly;
use crate::perm::{
    accessible_box, code_to_oneline, is_vexillary, pivots, shape_and_flag, Cell, Code, Flag,
    Partition,
};

/// The two kinds of tree edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransitionStep {
    /// March to the pivot in `row`.
    March { row: usize },
    /// `times` consecutive deletions of the accessible box, all in `row`.
    Deletion { row: usize, times: usize },
}

impl fmt::Display for TransitionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionStep::March { row } => write!(f, "{row}"),
            TransitionStep::Deletion { row, times } => write!(f, "(x{row},{times})"),
        }
    }
}

/// A path from the root, written with runs of same-row deletions collapsed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransitionString {
    pub steps: Vec<TransitionStep>,
}

impl TransitionString {
    pub fn new(steps: Vec<TransitionStep>) -> Self {
        TransitionString { steps }
    }

    /// `h`, the number of entries.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Sum of `times * e_row` over deletion runs, as a length-`l` vector.
    pub fn delwt(&self, l: usize) -> Vec<usize> {
        let mut out = vec![0; l];
        for s in &self.steps {
            if let TransitionStep::Deletion { row, times } = *s {
                if row > out.len() {
                    out.resize(row, 0);
                }
                out[row - 1] += times;
            }
        }
        out
    }

    /// Appends a step, merging it into a preceding deletion run in the same row.
    pub fn push(&mut self, step: TransitionStep) {
        if let (
            Some(TransitionStep::Deletion { row, times }),
            TransitionStep::Deletion { row: r2, times: t2 },
        ) = (self.steps.last_mut(), step)
        {
            if *row == r2 {
                *times += t2;
                return;
            }
        }
        self.steps.push(step);
    }
}

impl fmt::Display for TransitionString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `r_{ij}` = number of `j`s in row `i` of a row-weak tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RowCountMatrix {
    pub r: Vec<Vec<usize>>,
}

impl RowCountMatrix {
    pub fn zeros(l: usize) -> Self {
        RowCountMatrix {
            r: vec![vec![0; l]; l],
        }
    }

    /// Encodes tableau rows (entries weakly increasing) into an `l x l` matrix.
    pub fn from_rows(rows: &[Vec<usize>], l: usize) -> Self {
        let mut m = Self::zeros(l);
        for (i, row) in rows.iter().enumerate() {
            for &e in row {
                m.r[i][e - 1] += 1;
            }
        }
        m
    }

    /// The tableau rows, trailing empty rows dropped.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .r
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(j, &k)| std::iter::repeat_n(j + 1, k))
                    .collect()
            })
            .collect();
        while out.last().is_some_and(|r| r.is_empty()) {
            out.pop();
        }
        out
    }

    pub fn content(&self) -> Vec<usize> {
        let l = self.r.len();
        (0..l)
            .map(|j| self.r.iter().map(|row| row[j]).sum())
            .collect()
    }
}

/// Children of a non-vexillary node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Children {
    pub accessible_box: Cell,
    /// Code after deleting the accessible box, and its row `r`.
    pub deletion: (Code, usize),
    /// One entry per pivot: the pivot row and the child code.
    pub marches: Vec<(usize, Code)>,
}

/// March child for pivot row `i`: `c_i + b` and `c_r - b` with
/// `b = c_r - ((w(i) - 1) - #{h < r : w(h) < w(i)})`.
pub fn march_child(code: &Code, z: Cell, i: usize) -> Code {
    let (r, _) = z;
    let w = code_to_oneline(code);
    let wi = w.at(i);
    let m = (1..r).filter(|&h| w.at(h) < wi).count();
    let cr = code.get(r);
    let b = cr + m + 1 - wi;
    let mut c = code.entries().to_vec();
    c[i - 1] += b;
    c[r - 1] -= b;
    Code::new(c)
}

pub fn transition_children(code: &Code) -> Result<Children> {
    if is_vexillary(code) {
        return Err(Error::VexillaryLeaf(code.entries().to_vec()));
    }
    let z = accessible_box(code).expect("a non-vexillary permutation has an accessible box");
    let r = z.0;
    let mut del = code.entries().to_vec();
    del[r - 1] -= 1;
    let marches = pivots(code, z)?
        .into_iter()
        .map(|(i, _)| (i, march_child(code, z, i)))
        .collect();
    Ok(Children {
        accessible_box: z,
        deletion: (Code::new(del), r),
        marches,
    })
}

/// Pads or trims `alpha` to `l` entries; `None` when a nonzero entry would be cut.
fn fit(alpha: &[usize], l: usize) -> Option<Vec<usize>> {
    if alpha.iter().skip(l).any(|&a| a != 0) {
        return None;
    }
    let mut v = alpha.to_vec();
    v.resize(l, 0);
    Some(v)
}

/// Number of semistandard tableaux of shape `lambda`, content `alpha`, with
/// entries of row `i` at most `phi_i`.
///
/// Rows are filled top to bottom; a row is its vector of label counts, and
/// the next row is admissible when `sum_{j' <= j} next_{j'} <= sum_{j' < j} prev_{j'}`.
pub fn flagged_kostka(lambda: &Partition, phi: &Flag, alpha: &[usize]) -> BigUint {
    let parts: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    if alpha.iter().sum::<usize>() != parts.iter().sum::<usize>() {
        return BigUint::zero();
    }
    let bounds: Vec<usize> = (0..parts.len())
        .map(|i| {
            phi.bounds()
                .get(i)
                .copied()
                .unwrap_or(alpha.len())
                .min(alpha.len())
        })
        .collect();
    let mut memo = HashMap::new();
    kostka_rows(&parts, &bounds, 0, None, alpha.to_vec(), &mut memo)
}

type KostkaMemo = HashMap<(usize, Vec<usize>, Vec<usize>), BigUint>;

fn kostka_rows(
    parts: &[usize],
    bounds: &[usize],
    i: usize,
    prev: Option<&[usize]>,
    remaining: Vec<usize>,
    memo: &mut KostkaMemo,
) -> BigUint {
    if i == parts.len() {
        return if remaining.iter().all(|&x| x == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = (
        i,
        prev.map(<[usize]>::to_vec).unwrap_or_default(),
        remaining.clone(),
    );
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    // prefix sums of the previous row, shifted: allowed[j] = sum_{j' < j} prev_{j'}
    let n = remaining.len();
    let cap: Vec<usize> = match prev {
        None => vec![usize::MAX; n],
        Some(p) => {
            let mut acc = 0;
            (0..n)
                .map(|j| {
                    let c = acc;
                    acc += p.get(j).copied().unwrap_or(0);
                    c
                })
                .collect()
        }
    };
    let mut rows = Vec::new();
    let mut cur = vec![0; n];
    fill_row(
        parts[i], bounds[i], &cap, &remaining, 0, 0, &mut cur, &mut rows,
    );
    let mut total = BigUint::zero();
    for row in rows {
        let rem: Vec<usize> = remaining.iter().zip(&row).map(|(a, b)| a - b).collect();
        total += kostka_rows(parts, bounds, i + 1, Some(&row), rem, memo);
    }
    memo.insert(key, total.clone());
    total
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    left: usize,
    bound: usize,
    cap: &[usize],
    remaining: &[usize],
    j: usize,
    prefix: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    if j >= bound {
        return;
    }
    let room = cap[j].saturating_sub(prefix);
    let most = left.min(remaining[j]).min(room);
    for k in (0..=most).rev() {
        cur[j] = k;
        fill_row(left - k, bound, cap, remaining, j + 1, prefix + k, cur, out);
    }
    cur[j] = 0;
}

/// Kostka number `K_{lambda,alpha}`: no flag beyond the number of labels.
pub fn kostka(lambda: &Partition, alpha: &[usize]) -> BigUint {
    let l = lambda.length();
    let phi = Flag::new(vec![alpha.len().max(1); l]).expect("constant flag");
    flagged_kostka(lambda, &phi, alpha)
}

/// Largest number of rows accepted by [`flagged_schur`].
pub const FLAGGED_SCHUR_MAX_ROWS: usize = 8;

fn complete_homogeneous(k: i64, m: usize, nvars: usize) -> SparsePoly {
    if k < 0 {
        return SparsePoly::zero(nvars);
    }
    let mut out = SparsePoly::zero(nvars);
    let mut e = vec![0u32; nvars];
    fn rec(out: &mut SparsePoly, e: &mut Vec<u32>, j: usize, m: usize, left: u32) {
        if j == m {
            if left == 0 {
                *out = out.add(&SparsePoly::monomial(e.clone()));
            }
            return;
        }
        for a in 0..=left {
            e[j] = a;
            rec(out, e, j + 1, m, left - a);
        }
        e[j] = 0;
    }
    rec(&mut out, &mut e, 0, m.min(nvars), k as u32);
    out
}

/// `det | h_{lambda_i - i + j}(phi_i) |` as a polynomial in `nvars` variables.
pub fn flagged_schur(lambda: &Partition, phi: &Flag, nvars: usize) -> Result<SparsePoly> {
    let parts: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let l = parts.len();
    if l > FLAGGED_SCHUR_MAX_ROWS {
        return Err(Error::Budget {
            what: "flagged Schur determinant rows",
            size: l,
            limit: FLAGGED_SCHUR_MAX_ROWS,
        });
    }
    let entry = |i: usize, j: usize| {
        complete_homogeneous(
            parts[i] as i64 - i as i64 + j as i64,
            phi.bounds()[i],
            nvars,
        )
    };
    let matrix: Vec<Vec<SparsePoly>> = (0..l)
        .map(|i| (0..l).map(|j| entry(i, j)).collect())
        .collect();
    let mut total = if l == 0 {
        SparsePoly::one(nvars)
    } else {
        SparsePoly::zero(nvars)
    };
    for perm in crate::perm::permutations(l).into_iter().filter(|_| l > 0) {
        let p = perm.values();
        let mut term = SparsePoly::one(nvars);
        for i in 0..l {
            term = term.mul(&matrix[i][p[i] - 1]);
            if term.is_zero() {
                break;
            }
        }
        total = if perm.length() % 2 == 0 {
            total.add(&term)
        } else {
            total.add(&term.neg())
        };
    }
    Ok(total)
}

/// Memoized coefficient counter. The table is keyed by `(code, alpha)` with
/// `alpha` cut to the code length, and may be shared between threads.
#[derive(Default)]
pub struct Counter {
    memo: DashMap<(Code, Vec<usize>), BigUint>,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn count(&self, code: &Code, alpha: &[usize]) -> BigUint {
        let Some(alpha) = fit(alpha, code.len()) else {
            return BigUint::zero();
        };
        if alpha.iter().sum::<usize>() != code.size() {
            return BigUint::zero();
        }
        let key = (code.clone(), alpha);
        if let Some(v) = self.memo.get(&key) {
            return v.value().clone();
        }
        let alpha = &key.1;
        let value = if is_vexillary(code) {
            let (lambda, phi) = shape_and_flag(code).expect("vexillary");
            flagged_kostka(&lambda, &phi, alpha)
        } else {
            let ch = transition_children(code).expect("non-vexillary");
            let (del, r) = &ch.deletion;
            let mut total = BigUint::zero();
            if alpha[r - 1] > 0 {
                let mut a = alpha.clone();
                a[r - 1] -= 1;
                total += self.count(del, &a);
            }
            for (_, child) in &ch.marches {
                total += self.count(child, alpha);
            }
            total
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// `c_{alpha,w}` for the permutation with this code.
pub fn count_coefficient(code: &Code, alpha: &[usize]) -> BigUint {
    Counter::new().count(code, alpha)
}

/// Why a candidate witness was turned down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    /// More than `L^2` steps.
    TooLong { h: usize, limit: usize },
    /// A step names a row outside `[L]` or deletes zero times.
    MalformedStep { step: usize },
    /// Two adjacent deletion runs use the same row.
    SplitRun { step: usize },
    /// The path tries to continue past a vexillary node.
    PastLeaf { step: usize },
    /// A deletion run whose row is not the accessible row.
    WrongRow { step: usize, accessible_row: usize },
    /// Fewer non-dominant boxes in the accessible row than the run needs.
    RunTooLong { step: usize },
    /// The march row is not a pivot of the accessible box.
    NotAPivot { step: usize },
    /// The path ends at a non-vexillary node.
    LeafNotVexillary,
    /// `R` is not `L x L`.
    MatrixShape,
    /// Row sums of `R` differ from the leaf shape.
    Shape,
    /// Some row uses a label above its flag.
    Flag,
    /// Columns of the decoded tableau are not strictly increasing.
    ColumnStrict,
    /// `delwt(S) + content(T)` differs from `alpha`.
    Content,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub accepted: bool,
    pub rejection: Option<Rejection>,
    /// Leaf reached by the path, when the path itself was valid.
    pub leaf: Option<Code>,
}

impl Verdict {
    fn reject(r: Rejection, leaf: Option<Code>) -> Self {
        Verdict {
            accepted: false,
            rejection: Some(r),
            leaf,
        }
    }
}

/// Checks the steps of `s` one by one from `code` and returns the node reached.
/// The final node is not required to be a leaf, so this also validates prefixes.
pub fn walk(code: &Code, s: &TransitionString) -> std::result::Result<Code, Rejection> {
    let l = code.len();
    let limit = l * l;
    if s.len() > limit {
        return Err(Rejection::TooLong { h: s.len(), limit });
    }
    let mut u = code.clone();
    for (t, step) in s.steps.iter().enumerate() {
        match *step {
            TransitionStep::Deletion { row, times } => {
                if row == 0 || row > l || times == 0 {
                    return Err(Rejection::MalformedStep { step: t });
                }
                if t > 0 {
                    if let TransitionStep::Deletion { row: prev, .. } = s.steps[t - 1] {
                        if prev == row {
                            return Err(Rejection::SplitRun { step: t });
                        }
                    }
                }
                if is_vexillary(&u) {
                    return Err(Rejection::PastLeaf { step: t });
                }
                let (r, _) = accessible_box(&u).expect("non-vexillary");
                if r != row {
                    return Err(Rejection::WrongRow {
                        step: t,
                        accessible_row: r,
                    });
                }
                let w = code_to_oneline(&u);
                let dominant = (1..=r).map(|i| w.at(i)).min().unwrap() - 1;
                if u.get(r) < dominant + times {
                    return Err(Rejection::RunTooLong { step: t });
                }
                for unit in 0..times {
                    // the run stops being a path if it lands on a leaf early
                    // or the accessible box leaves the row
                    if unit > 0 {
                        if is_vexillary(&u) {
                            return Err(Rejection::PastLeaf { step: t });
                        }
                        if accessible_box(&u).map(|z| z.0) != Some(row) {
                            return Err(Rejection::RunTooLong { step: t });
                        }
                    }
                    let mut c = u.entries().to_vec();
                    c[row - 1] -= 1;
                    u = Code::new(c);
                }
            }
            TransitionStep::March { row } => {
                if row == 0 || row > l {
                    return Err(Rejection::MalformedStep { step: t });
                }
                if is_vexillary(&u) {
                    return Err(Rejection::PastLeaf { step: t });
                }
                let z = accessible_box(&u).expect("non-vexillary");
                let w = code_to_oneline(&u);
                if row >= z.0 || row > w.len() {
                    return Err(Rejection::NotAPivot { step: t });
                }
                let northwest: Vec<Cell> = (1..z.0)
                    .map(|j| (j, w.at(j)))
                    .filter(|&(_, v)| v < z.1)
                    .collect();
                let x = (row, w.at(row));
                let is_pivot =
                    northwest.contains(&x) && !northwest.iter().any(|&(h, v)| h > x.0 && v > x.1);
                if !is_pivot {
                    return Err(Rejection::NotAPivot { step: t });
                }
                u = march_child(&u, z, row);
            }
        }
    }
    Ok(u)
}

/// Checks that `(S, R)` witnesses `c_{alpha,w} > 0`: `S` is a root-to-leaf
/// path, `R` encodes a flagged semistandard tableau of the leaf's shape, and
/// the deletion weight plus the tableau content is `alpha`.
pub fn verify_witness(
    s: &TransitionString,
    r: &RowCountMatrix,
    code: &Code,
    alpha: &[usize],
) -> Verdict {
    let l = code.len();
    let leaf = match walk(code, s) {
        Ok(u) => u,
        Err(e) => return Verdict::reject(e, None),
    };
    if !is_vexillary(&leaf) {
        return Verdict::reject(Rejection::LeafNotVexillary, Some(leaf));
    }
    let leaf_ret = Some(leaf.clone());
    if r.r.len() != l || r.r.iter().any(|row| row.len() != l) {
        return Verdict::reject(Rejection::MatrixShape, leaf_ret);
    }
    let (lambda, phi) = shape_and_flag(&leaf).expect("vexillary");
    for i in 0..l {
        let want = lambda.parts().get(i).copied().unwrap_or(0);
        if r.r[i].iter().sum::<usize>() != want {
            return Verdict::reject(Rejection::Shape, leaf_ret);
        }
        let bound = phi.bounds().get(i).copied().unwrap_or(0);
        if r.r[i]
            .iter()
            .enumerate()
            .any(|(j, &x)| x > 0 && j + 1 > bound)
        {
            return Verdict::reject(Rejection::Flag, leaf_ret);
        }
    }
    for i in 0..l.saturating_sub(1) {
        let mut upper = 0;
        let mut lower = 0;
        for j in 0..l {
            lower += r.r[i + 1][j];
            if lower > upper {
                return Verdict::reject(Rejection::ColumnStrict, leaf_ret);
            }
            upper += r.r[i][j];
        }
    }
    let Some(alpha) = fit(alpha, l) else {
        return Verdict::reject(Rejection::Content, leaf_ret);
    };
    let total: Vec<usize> = s
        .delwt(l)
        .iter()
        .zip(r.content())
        .map(|(a, b)| a + b)
        .collect();
    if total != alpha {
        return Verdict::reject(Rejection::Content, leaf_ret);
    }
    Verdict {
        accepted: true,
        rejection: None,
        leaf: leaf_ret,
    }
}

/// Every root-to-leaf string of the tree, with its leaf.
pub fn leaf_paths(code: &Code) -> Vec<(TransitionString, Code)> {
    let mut out = Vec::new();
    collect_paths(code, &mut TransitionString::default(), &mut out);
    out
}

fn collect_paths(u: &Code, path: &mut TransitionString, out: &mut Vec<(TransitionString, Code)>) {
    let Ok(ch) = transition_children(u) else {
        out.push((path.clone(), u.clone()));
        return;
    };
    let saved = path.clone();
    path.push(TransitionStep::Deletion {
        row: ch.deletion.1,
        times: 1,
    });
    collect_paths(&ch.deletion.0, path, out);
    for (i, child) in &ch.marches {
        *path = saved.clone();
        path.push(TransitionStep::March { row: *i });
        collect_paths(child, path, out);
    }
    *path = saved;
}

/// Edge label in the exported tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeLabel {
    Deletion { row: usize },
    March { row: usize },
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Deletion { row } => write!(f, "x{row}"),
            EdgeLabel::March { row } => write!(f, "{row}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub code: Code,
    pub permutation: String,
    pub edge: Option<EdgeLabel>,
    pub accessible_box: Option<Cell>,
    pub vexillary: bool,
    /// Deletion weight accumulated from the root.
    pub delwt: Vec<usize>,
    pub children: Vec<TreeNode>,
}

/// Default cap on the number of nodes in an exported tree.
pub const TREE_BUDGET: usize = 100_000;

/// The transition tree rooted at `code`.
pub fn transition_tree(code: &Code, budget: usize) -> Result<TreeNode> {
    let mut count = 0;
    build_tree(code, None, vec![0; code.len()], budget, &mut count)
}

fn build_tree(
    code: &Code,
    edge: Option<EdgeLabel>,
    delwt: Vec<usize>,
    budget: usize,
    count: &mut usize,
) -> Result<TreeNode> {
    *count += 1;
    if *count > budget {
        return Err(Error::Budget {
            what: "transition tree nodes",
            size: *count,
            limit: budget,
        });
    }
    let vex = is_vexillary(code);
    let mut node = TreeNode {
        code: code.clone(),
        permutation: code_to_oneline(code).complete().to_string(),
        edge,
        accessible_box: accessible_box(code),
        vexillary: vex,
        delwt: delwt.clone(),
        children: Vec::new(),
    };
    if vex {
        return Ok(node);
    }
    let ch = transition_children(code)?;
    let (del, r) = &ch.deletion;
    let mut dw = delwt.clone();
    dw[r - 1] += 1;
    node.children.push(build_tree(
        del,
        Some(EdgeLabel::Deletion { row: *r }),
        dw,
        budget,
        count,
    )?);
    for (i, child) in &ch.marches {
        node.children.push(build_tree(
            child,
            Some(EdgeLabel::March { row: *i }),
            delwt.clone(),
            budget,
            count,
        )?);
    }
    Ok(node)
}

impl TreeNode {
    pub fn leaves(&self) -> Vec<&TreeNode> {
        if self.children.is_empty() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    /// Indented text, one node per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let indent = "  ".repeat(depth);
        let edge = self.edge.map(|e| format!("--{e}--> ")).unwrap_or_default();
        let _ = write!(out, "{indent}{edge}{} code={}", self.permutation, self.code);
        if self.vexillary {
            let _ = write!(out, " leaf delwt={}", monomial(&self.delwt));
        } else if let Some((r, c)) = self.accessible_box {
            let _ = write!(out, " z=({r},{c})");
        }
        out.push('\n');
        for c in &self.children {
            c.render_into(depth + 1, out);
        }
    }
}

/// `x3^2*x4` style rendering of an exponent vector, `1` when empty.
pub fn monomial(exps: &[usize]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
