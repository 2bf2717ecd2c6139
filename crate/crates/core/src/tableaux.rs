//! Tableaux on arbitrary diagrams: column words and `theta`, the greedy
//! tableau `pi_{D,S}`, brute-force enumeration, and the 132-fillings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{code_to_oneline, rothe_diagram, Cell, Code, Diagram};

/// Content vector `alpha`; entry `i - 1` counts label `i`.
pub type ContentVec = Vec<usize>;

/// A labelling `D -> [n] u {unlabelled}`; `None` is the unlabelled mark.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Diagram,
    labels: BTreeMap<Cell, Option<usize>>,
}

impl Tableau {
    pub fn new(shape: Diagram, labels: BTreeMap<Cell, Option<usize>>) -> Result<Self> {
        let same = labels.len() == shape.len() && shape.boxes().all(|b| labels.contains_key(&b));
        if !same {
            return Err(Error::LabelDomain);
        }
        Ok(Tableau { shape, labels })
    }

    pub fn from_fn(shape: Diagram, mut f: impl FnMut(Cell) -> Option<usize>) -> Self {
        let labels = shape.boxes().map(|b| (b, f(b))).collect();
        Tableau { shape, labels }
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn label(&self, cell: Cell) -> Option<usize> {
        self.labels.get(&cell).copied().flatten()
    }

    pub fn labels(&self) -> impl Iterator<Item = (Cell, Option<usize>)> + '_ {
        self.labels.iter().map(|(&c, &l)| (c, l))
    }

    pub fn is_fully_labelled(&self) -> bool {
        self.labels.values().all(|l| l.is_some())
    }

    /// Every label in row `r` is at most `r`.
    pub fn is_flagged(&self) -> bool {
        self.labels
            .iter()
            .all(|(&(r, _), l)| l.is_none_or(|l| l >= 1 && l <= r))
    }

    pub fn is_column_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.labels
            .iter()
            .all(|(&(_, c), l)| l.is_none_or(|l| seen.insert((c, l))))
    }

    /// Fully labelled with labels strictly increasing down each column.
    pub fn is_column_strict(&self) -> bool {
        if !self.is_fully_labelled() {
            return false;
        }
        let mut last: BTreeMap<usize, usize> = BTreeMap::new();
        for (&(_, c), l) in &self.labels {
            let l = l.unwrap();
            if let Some(&prev) = last.get(&c) {
                if l <= prev {
                    return false;
                }
            }
            last.insert(c, l);
        }
        true
    }

    /// Label counts, padded to at least `n` entries.
    pub fn content(&self, n: usize) -> ContentVec {
        let mut out = vec![0; n];
        for l in self.labels.values().flatten() {
            if *l > out.len() {
                out.resize(*l, 0);
            }
            out[l - 1] += 1;
        }
        out
    }

    /// `tau^{-1}(S)` as a set of boxes.
    pub fn preimage(&self, s: &BTreeSet<usize>) -> BTreeSet<Cell> {
        self.labels
            .iter()
            .filter(|(_, l)| l.is_some_and(|l| s.contains(&l)))
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn label_sum(&self) -> usize {
        self.labels.values().flatten().sum()
    }

    /// Grid text: labels as numbers, `.` for unlabelled, blank outside the shape.
    pub fn render(&self) -> String {
        let n = self.shape.n();
        let width = self
            .labels
            .values()
            .flatten()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in 1..=n {
            let mut line = String::new();
            for c in 1..=n {
                if width > 1 && c > 1 {
                    line.push(' ');
                }
                let cell = match self.labels.get(&(r, c)) {
                    None => " ".to_string(),
                    Some(None) => ".".to_string(),
                    Some(Some(l)) => l.to_string(),
                };
                line.push_str(&format!("{cell:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symbol {
    Open,
    Close,
    Star,
}

/// `word_{c,S}(D)`: symbols with the row that produced them, top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnWord {
    pub column: usize,
    pub symbols: Vec<(usize, Symbol)>,
}

impl ColumnWord {
    pub fn build(d: &Diagram, s: &BTreeSet<usize>, column: usize) -> Self {
        let symbols = (1..=d.n())
            .filter_map(|r| {
                let present = d.contains((r, column));
                let in_s = s.contains(&r);
                match (present, in_s) {
                    (false, true) => Some((r, Symbol::Open)),
                    (true, false) => Some((r, Symbol::Close)),
                    (true, true) => Some((r, Symbol::Star)),
                    (false, false) => None,
                }
            })
            .collect();
        ColumnWord { column, symbols }
    }

    /// For each `)` that is paired, the row of its `(`; stars are transparent.
    pub fn pairs(&self) -> BTreeMap<usize, usize> {
        let mut stack = Vec::new();
        let mut out = BTreeMap::new();
        for &(r, sym) in &self.symbols {
            match sym {
                Symbol::Open => stack.push(r),
                Symbol::Close => {
                    if let Some(s) = stack.pop() {
                        out.insert(r, s);
                    }
                }
                Symbol::Star => {}
            }
        }
        out
    }

    pub fn stars(&self) -> usize {
        self.symbols
            .iter()
            .filter(|(_, s)| *s == Symbol::Star)
            .count()
    }

    /// `theta^c_D(S)`.
    pub fn theta(&self) -> usize {
        self.stars() + self.pairs().len()
    }
}

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (_, s) in &self.symbols {
            f.write_str(match s {
                Symbol::Open => "(",
                Symbol::Close => ")",
                Symbol::Star => "★",
            })?;
        }
        Ok(())
    }
}

/// All column words of `D` for `S` together with `theta_D(S)`.
pub fn word_and_theta(d: &Diagram, s: &BTreeSet<usize>) -> (Vec<ColumnWord>, usize) {
    let words: Vec<ColumnWord> = (1..=d.n()).map(|c| ColumnWord::build(d, s, c)).collect();
    let theta = words.iter().map(ColumnWord::theta).sum();
    (words, theta)
}

pub fn theta(d: &Diagram, s: &BTreeSet<usize>) -> usize {
    word_and_theta(d, s).1
}

/// `pi_{D,S}`: stars keep their row, paired `)` take the row of their `(`.
pub fn greedy_tableau(d: &Diagram, s: &BTreeSet<usize>) -> Tableau {
    let mut labels = BTreeMap::new();
    for c in 1..=d.n() {
        let word = ColumnWord::build(d, s, c);
        let pairs = word.pairs();
        for &(r, sym) in &word.symbols {
            match sym {
                Symbol::Star => {
                    labels.insert((r, c), Some(r));
                }
                Symbol::Close => {
                    labels.insert((r, c), pairs.get(&r).copied());
                }
                Symbol::Open => {}
            }
        }
    }
    Tableau {
        shape: d.clone(),
        labels,
    }
}

/// `sum_{i in S} alpha_i <= #tau^{-1}(S)`.
pub fn exhausts(tau: &Tableau, alpha: &[usize], s: &BTreeSet<usize>) -> bool {
    let need: usize = s
        .iter()
        .map(|&i| alpha.get(i - 1).copied().unwrap_or(0))
        .sum();
    need <= tau.preimage(s).len()
}

/// Search-node limit for the brute-force enumerations.
pub const DEFAULT_BUDGET: usize = 5_000_000;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// flagged, column-injective, unlabelled allowed
    Fci,
    /// flagged, column-injective, fully labelled
    Perfect,
    /// fully labelled, strictly increasing down columns
    ColumnStrict,
}

struct Search<'a> {
    boxes: Vec<Cell>,
    stop_at_first: bool,
    mode: Mode,
    remaining: Option<Vec<usize>>,
    budget: usize,
    nodes: usize,
    current: Vec<Option<usize>>,
    used: BTreeSet<(usize, usize)>,
    above: BTreeMap<usize, usize>,
    shape: &'a Diagram,
    out: Vec<Tableau>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget {
                what: "tableau enumeration",
                size: self.nodes,
                limit: self.budget,
            });
        }
        if self.stop_at_first && !self.out.is_empty() {
            return Ok(());
        }
        if idx == self.boxes.len() {
            let labels = self
                .boxes
                .iter()
                .copied()
                .zip(self.current.iter().copied())
                .collect();
            self.out.push(Tableau {
                shape: self.shape.clone(),
                labels,
            });
            return Ok(());
        }
        let (r, c) = self.boxes[idx];
        let low = match self.mode {
            Mode::ColumnStrict => self.above.get(&c).map_or(1, |&l| l + 1),
            _ => 1,
        };
        for l in low..=r {
            if self.used.contains(&(c, l)) {
                continue;
            }
            if let Some(rem) = &self.remaining {
                if rem.get(l - 1).copied().unwrap_or(0) == 0 {
                    continue;
                }
            }
            if let Some(rem) = &mut self.remaining {
                rem[l - 1] -= 1;
            }
            self.used.insert((c, l));
            let prev_above = self.above.insert(c, l);
            self.current.push(Some(l));
            let res = self.run(idx + 1);
            self.current.pop();
            match prev_above {
                Some(p) => self.above.insert(c, p),
                None => self.above.remove(&c),
            };
            self.used.remove(&(c, l));
            if let Some(rem) = &mut self.remaining {
                rem[l - 1] += 1;
            }
            res?;
        }
        if self.mode == Mode::Fci {
            self.current.push(None);
            let res = self.run(idx + 1);
            self.current.pop();
            res?;
        }
        Ok(())
    }
}

fn search(
    d: &Diagram,
    alpha: Option<&[usize]>,
    mode: Mode,
    budget: usize,
    stop_at_first: bool,
) -> Result<Vec<Tableau>> {
    let remaining = match alpha {
        Some(a) => {
            if a.iter().skip(d.n()).any(|&x| x != 0) || a.iter().sum::<usize>() != d.len() {
                return Ok(Vec::new());
            }
            let mut v = a.to_vec();
            v.resize(d.n(), 0);
            v.truncate(d.n());
            Some(v)
        }
        None => None,
    };
    let mut s = Search {
        boxes: d.boxes().collect(),
        stop_at_first,
        mode,
        remaining,
        budget,
        nodes: 0,
        current: Vec::new(),
        used: BTreeSet::new(),
        above: BTreeMap::new(),
        shape: d,
        out: Vec::new(),
    };
    s.run(0)?;
    Ok(s.out)
}

/// Every flagged, column-injective, fully labelled tableau of shape `D` with content `alpha`.
/// Boxes are filled in reading order with labels tried in increasing order.
pub fn enumerate_perfect(d: &Diagram, alpha: &[usize], budget: usize) -> Result<Vec<Tableau>> {
    search(d, Some(alpha), Mode::Perfect, budget, false)
}

/// The first tableau [`enumerate_perfect`] would list, found without listing the rest.
pub fn find_perfect(d: &Diagram, alpha: &[usize], budget: usize) -> Result<Option<Tableau>> {
    Ok(search(d, Some(alpha), Mode::Perfect, budget, true)?.pop())
}

/// Flagged tableaux strictly increasing down columns, with content `alpha` when given.
pub fn enumerate_column_strict(
    d: &Diagram,
    alpha: Option<&[usize]>,
    budget: usize,
) -> Result<Vec<Tableau>> {
    search(d, alpha, Mode::ColumnStrict, budget, false)
}

/// Every flagged column-injective tableau of shape `D`, unlabelled boxes allowed.
pub fn enumerate_fci(d: &Diagram, budget: usize) -> Result<Vec<Tableau>> {
    search(d, None, Mode::Fci, budget, false)
}

/// The fillings `F_0, ..., F_N` of `D(w)`, `N = n_132(w)`.
///
/// `F_0` labels each box by its row. Step `i` lowers by one every box in the
/// run of column boxes ending at the `i`-th 132-box (reading order, repeats
/// kept), stopping below any different earlier 132-box of that column.
pub fn weigandt_fillings(code: &Code) -> Vec<Tableau> {
    let d = rothe_diagram(code);
    let w = code_to_oneline(code).embed(d.n());
    let v = w.values();
    let n = v.len();
    let mut marked: Vec<Cell> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if v[i] < v[k] && v[k] < v[j] {
                    marked.push((j + 1, v[k]));
                }
            }
        }
    }
    marked.sort();
    let mut labels: BTreeMap<Cell, usize> = d.boxes().map(|(r, c)| ((r, c), r)).collect();
    let snapshot = |labels: &BTreeMap<Cell, usize>| Tableau {
        shape: d.clone(),
        labels: labels.iter().map(|(&k, &l)| (k, Some(l))).collect(),
    };
    let mut out = vec![snapshot(&labels)];
    for i in 0..marked.len() {
        let (r, c) = marked[i];
        let stop = marked[..i]
            .iter()
            .filter(|&&(r2, c2)| c2 == c && r2 < r)
            .map(|&(r2, _)| r2)
            .max()
            .unwrap_or(0);
        let mut row = r;
        while row > stop && d.contains((row, c)) {
            *labels.get_mut(&(row, c)).unwrap() -= 1;
            row -= 1;
        }
        out.push(snapshot(&labels));
    }
    out
}
