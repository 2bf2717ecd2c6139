//! Permutations, Lehmer codes, Rothe diagrams and the diagram landmarks
//! (essential set, dominant component, accessible box, pivots) that drive
//! both the vanishing decision and the transition recursion.
//!
//! Rows and columns are 1-indexed throughout, matching matrix coordinates on
//! the permutation's graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `(row, column)` position, 1-indexed.
pub type Cell = (usize, usize);

/// Lehmer code `(c_1, ..., c_L)` with trailing zeros stripped, so `c_L > 0`
/// whenever the code is nonempty. The empty code is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Code(Vec<usize>);

impl Code {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Code(entries)
    }

    pub fn identity() -> Self {
        Code(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `L`, the index of the last nonzero entry.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c_i` for 1-indexed `i`; zero past the end.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of boxes of the Rothe diagram, i.e. the length of the permutation.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Grid side used for the Rothe diagram: `L + max c_i`.
    pub fn ambient(&self) -> usize {
        self.len() + self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<usize>> for Code {
    fn from(v: Vec<usize>) -> Self {
        Code::new(v)
    }
}

impl From<Code> for Vec<usize> {
    fn from(c: Code) -> Self {
        c.0
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

pub(crate) fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One-line notation `(w(1), ..., w(m))` of a permutation or of a prefix of one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneLine(Vec<usize>);

impl OneLine {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &values {
            if v == 0 {
                return Err(Error::ZeroValue);
            }
            if !seen.insert(v) {
                return Err(Error::RepeatedValue(v));
            }
        }
        Ok(OneLine(values))
    }

    pub fn identity(n: usize) -> Self {
        OneLine((1..=n).collect())
    }

    /// The longest permutation `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        OneLine((1..=n).rev().collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)`, 1-indexed. Positions past the stored prefix are read from the
    /// minimal completion, so callers should `complete()` first when that matters.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// True when the values are exactly `{1, ..., len}`.
    pub fn is_permutation(&self) -> bool {
        self.0.iter().all(|&v| v <= self.0.len())
    }

    /// The minimal-length permutation extending this prefix: the missing
    /// values below the maximum are appended in increasing order.
    pub fn complete(&self) -> OneLine {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let present: BTreeSet<usize> = self.0.iter().copied().collect();
        let mut out = self.0.clone();
        out.extend((1..=max).filter(|v| !present.contains(v)));
        OneLine(out)
    }

    /// Pads with fixed points up to `n` (the embedding `S_m -> S_n`).
    pub fn embed(&self, n: usize) -> OneLine {
        let full = self.complete();
        let mut out = full.0;
        let m = out.len();
        out.extend(m + 1..=n.max(m));
        OneLine(out)
    }

    /// `w^{-1}` as a vector indexed by value (entry 0 unused). Requires a full permutation.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i + 1;
        }
        inv
    }

    /// Right multiplication by the transposition of positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> OneLine {
        let mut v = self.complete().0;
        let need = a.max(b);
        let m = v.len();
        v.extend(m + 1..=need.max(m));
        v.swap(a - 1, b - 1);
        OneLine(v)
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[j] < v[i] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for OneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "[{}]", join(&self.0))
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<OneLine> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![OneLine(cur.clone())];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(OneLine(cur.clone()));
    }
}

/// Prefix `(w(1), ..., w(L))` of the minimal permutation with the given code.
///
/// `w(i)` is the `(c_i + 1)`-th smallest value not already used, found by a
/// linear scan over the sorted used values.
pub fn code_to_oneline(code: &Code) -> OneLine {
    let mut used: Vec<usize> = Vec::with_capacity(code.len());
    let mut out = Vec::with_capacity(code.len());
    for &c in code.entries() {
        // candidate value is c + 1 + (number of used values below it)
        let mut value = c + 1;
        for &u in &used {
            if u <= value {
                value += 1;
            } else {
                break;
            }
        }
        let pos = used.partition_point(|&u| u < value);
        used.insert(pos, value);
        out.push(value);
    }
    OneLine(out)
}

/// Inverse of [`code_to_oneline`]: `c_i = (w(i) - 1) - #{j < i : w(j) < w(i)}`.
pub fn oneline_to_code(w: &OneLine) -> Code {
    let v = w.values();
    let entries = (0..v.len())
        .map(|i| v[i] - 1 - v[..i].iter().filter(|&&u| u < v[i]).count())
        .collect();
    Code::new(entries)
}

/// A finite set of boxes inside an `n x n` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    boxes: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new(n: usize, boxes: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let boxes: BTreeSet<Cell> = boxes.into_iter().collect();
        for &(r, c) in &boxes {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(Error::BoxOutOfRange(r, c, n));
            }
        }
        Ok(Diagram { n, boxes })
    }

    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            boxes: BTreeSet::new(),
        }
    }

    /// Rothe diagram `{(i, j) : j < w(i), i < w^{-1}(j)}` of a full permutation
    /// drawn in an `n x n` grid (`n >= len(w)`).
    pub fn rothe(w: &OneLine, n: usize) -> Self {
        let w = w.embed(n);
        let inv = w.inverse();
        let mut boxes = BTreeSet::new();
        for i in 1..=w.len() {
            for j in 1..w.at(i) {
                if i < inv[j] {
                    boxes.insert((i, j));
                }
            }
        }
        Diagram { n: w.len(), boxes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Boxes in English reading order (row by row, left to right).
    pub fn boxes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.boxes.iter().copied()
    }

    pub fn box_set(&self) -> &BTreeSet<Cell> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.boxes.contains(&cell)
    }

    /// Rows occupied in column `c`, increasing.
    pub fn column_rows(&self, c: usize) -> Vec<usize> {
        (1..=self.n).filter(|&r| self.contains((r, c))).collect()
    }

    /// `#{(i, c) in D : i <= s}`.
    pub fn column_prefix_count(&self, c: usize, s: usize) -> usize {
        (1..=s.min(self.n))
            .filter(|&r| self.contains((r, c)))
            .count()
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.boxes.iter().filter(|&&(i, _)| i == r).count()
    }

    /// Same boxes in the smallest square grid that holds them.
    pub fn tight(&self) -> Diagram {
        let n = self.boxes.iter().map(|&(r, c)| r.max(c)).max().unwrap_or(0);
        Diagram {
            n,
            boxes: self.boxes.clone(),
        }
    }

    pub fn without(&self, removed: &BTreeSet<Cell>) -> Diagram {
        Diagram {
            n: self.n,
            boxes: self.boxes.difference(removed).copied().collect(),
        }
    }

    /// Grid rendering: `#` for a box, `.` otherwise, one line per row.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in 1..=self.n {
            for c in 1..=self.n {
                out.push(if self.contains((r, c)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// `D(w)` for the minimal permutation with this code, in an `L + max c_i` grid.
pub fn rothe_diagram(code: &Code) -> Diagram {
    let n = code.ambient();
    let w = code_to_oneline(code);
    Diagram::rothe(&w, n)
}

/// Rothe diagram drawn together with the permutation's dots (`o`), and when
/// `rays` is set the struck cells (`-` east rays, `|` south rays, `+` both).
pub fn render_rothe(code: &Code, rays: bool) -> String {
    let n = code.ambient();
    let w = code_to_oneline(code).embed(n);
    let d = Diagram::rothe(&w, n);
    let inv = w.inverse();
    let mut out = String::new();
    for r in 1..=n {
        for c in 1..=n {
            let ch = if w.at(r) == c {
                'o'
            } else if d.contains((r, c)) {
                '#'
            } else if rays {
                let east = c > w.at(r);
                let south = r > inv[c];
                match (east, south) {
                    (true, true) => '+',
                    (true, false) => '-',
                    (false, true) => '|',
                    (false, false) => '.',
                }
            } else {
                '.'
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

/// `{(i, j) in D : (i+1, j) not in D and (i, j+1) not in D}`.
pub fn essential_set(d: &Diagram) -> BTreeSet<Cell> {
    d.boxes()
        .filter(|&(i, j)| !d.contains((i + 1, j)) && !d.contains((i, j + 1)))
        .collect()
}

/// The 4-connected component of `D` containing `(1, 1)`, empty if `(1, 1)` is not a box.
pub fn dominant_component(d: &Diagram) -> BTreeSet<Cell> {
    let mut seen = BTreeSet::new();
    if !d.contains((1, 1)) {
        return seen;
    }
    let mut stack = vec![(1, 1)];
    seen.insert((1, 1));
    while let Some((i, j)) = stack.pop() {
        let mut around = vec![(i + 1, j), (i, j + 1)];
        if i > 1 {
            around.push((i - 1, j));
        }
        if j > 1 {
            around.push((i, j - 1));
        }
        for cell in around {
            if d.contains(cell) && seen.insert(cell) {
                stack.push(cell);
            }
        }
    }
    seen
}

/// Accessible box read straight off the diagram: the southmost, then
/// eastmost, box of `Ess(w) \ Dom(w)`.
pub fn accessible_box_of_diagram(d: &Diagram) -> Option<Cell> {
    let dom = dominant_component(d);
    essential_set(d)
        .into_iter()
        .filter(|cell| !dom.contains(cell))
        .max()
}

/// Accessible box `z_w` computed from the code in `O(L^2)` steps.
///
/// Row `i` of `D(w)` ends at column `k_i`, the largest value below `w(i)`
/// not taken by an earlier row. The row leaves the dominant component exactly
/// when `k_i > min_{j<i} w(j)`; the answer is the last such row.
pub fn accessible_box(code: &Code) -> Option<Cell> {
    let w = code_to_oneline(code);
    let mut best = None;
    let mut prefix_min = usize::MAX;
    for i in 1..=w.len() {
        if i >= 2 {
            let earlier = &w.values()[..i - 1];
            let eastmost = (1..w.at(i)).rev().find(|j| !earlier.contains(j));
            if let Some(k) = eastmost {
                if k > prefix_min {
                    best = Some((i, k));
                }
            }
        }
        prefix_min = prefix_min.min(w.at(i));
    }
    best
}

/// Dots of `G(w)` strictly northwest of `z` that are maximally southeast
/// among those, returned as `(row, w(row))` in increasing row order.
pub fn pivots(code: &Code, z: Cell) -> Result<Vec<Cell>> {
    let w = code_to_oneline(code);
    let (r, c) = z;
    let northwest: Vec<Cell> = (1..r.min(w.len() + 1))
        .map(|j| (j, w.at(j)))
        .filter(|&(_, v)| v < c)
        .collect();
    if northwest.is_empty() {
        return Err(Error::NoPivot(z));
    }
    Ok(northwest
        .iter()
        .copied()
        .filter(|&(j, v)| !northwest.iter().any(|&(h, u)| h > j && u > v))
        .collect())
}

/// `#{(i, j, k) : i < j < k, w(i) < w(k) < w(j)}` by direct enumeration.
pub fn count_132(w: &OneLine) -> u64 {
    let v = w.values();
    let n = v.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if v[i] < v[k] && v[k] < v[j] {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Direct pattern check: no `i < j < k < l` with `w(j) < w(i) < w(l) < w(k)`.
pub fn avoids_2143(w: &OneLine) -> bool {
    let v = w.values();
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            if v[j] >= v[i] {
                continue;
            }
            for k in j + 1..n {
                if v[k] <= v[i] {
                    continue;
                }
                for l in k + 1..n {
                    if v[i] < v[l] && v[l] < v[k] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Vexillarity read off the code: for every `i < j`,
/// if `c_i > c_j` then at most `c_i - c_j` entries strictly between are below `c_j`,
/// and if `c_i <= c_j` then no entry strictly between is below `c_i`.
pub fn is_vexillary(code: &Code) -> bool {
    let c = code.entries();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let between = &c[i + 1..j];
            if c[i] > c[j] {
                if between.iter().filter(|&&x| x < c[j]).count() > c[i] - c[j] {
                    return false;
                }
            } else if between.iter().any(|&x| x < c[i]) {
                return false;
            }
        }
    }
    true
}

/// Weakly decreasing list of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Returns `None` unless the parts are weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        parts
            .windows(2)
            .all(|w| w[0] >= w[1])
            .then_some(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }
}

/// Weakly increasing row bounds for a flagged shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flag(Vec<usize>);

impl Flag {
    pub fn new(bounds: Vec<usize>) -> Option<Self> {
        (bounds.iter().all(|&b| b >= 1) && bounds.windows(2).all(|w| w[0] <= w[1]))
            .then_some(Flag(bounds))
    }

    pub fn bounds(&self) -> &[usize] {
        &self.0
    }
}

/// `(lambda(v), phi(v))` of a vexillary permutation: the code sorted
/// decreasingly, and the sorted `e_i = max{j >= i : c_j >= c_i}` over nonzero `c_i`.
pub fn shape_and_flag(code: &Code) -> Result<(Partition, Flag)> {
    if !is_vexillary(code) {
        return Err(Error::NotVexillary(code.entries().to_vec()));
    }
    let c = code.entries();
    let mut parts: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut flag: Vec<usize> = (0..c.len())
        .filter(|&i| c[i] > 0)
        .map(|i| (i..c.len()).rev().find(|&j| c[j] >= c[i]).unwrap() + 1)
        .collect();
    flag.sort_unstable();
    Ok((Partition(parts), Flag(flag)))
}

/// Code of the grassmannian permutation `w_lambda`: the parts in reverse.
pub fn grassmannian_code(lambda: &Partition) -> Code {
    Code::new(lambda.parts().iter().rev().copied().collect())
}
