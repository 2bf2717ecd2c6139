//! Phase-one simplex over exact rationals.
//!
//! Every row is turned into `a.x <= b` (equalities into two rows), a slack is
//! added, and rows with `b < 0` get an artificial. Bland's rule picks both the
//! entering column and, among ratio ties, the leaving row, so degenerate
//! instances cannot cycle.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::{FeasibilityResult, LpInstance, Rational, Sense, WitnessPoint};

struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.ncols
    }

    fn pivot(&mut self, p: usize, q: usize) {
        let piv = self.rows[p][q].clone();
        if !piv.is_one() {
            for v in self.rows[p].iter_mut() {
                if !v.is_zero() {
                    *v /= &piv;
                }
            }
        }
        let nz: Vec<usize> = (0..=self.ncols)
            .filter(|&k| !self.rows[p][k].is_zero())
            .collect();
        let prow = std::mem::take(&mut self.rows[p]);
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[q].clone();
            if factor.is_zero() {
                return;
            }
            for &k in &nz {
                let delta = &factor * &prow[k];
                row[k] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != p {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[p] = prow;
        self.basis[p] = q;
    }

    fn dump(&self, out: &mut String) {
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "  b{:<4} | {}", self.basis[i], cells.join(" "));
        }
        let cells: Vec<String> = self.obj.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  obj   | {}", cells.join(" "));
    }
}

pub fn solve_feasibility(instance: &LpInstance) -> FeasibilityResult {
    solve_feasibility_traced(instance, None)
}

/// Like [`solve_feasibility`], appending the tableau after every pivot to `trace`.
pub fn solve_feasibility_traced(
    instance: &LpInstance,
    mut trace: Option<&mut String>,
) -> FeasibilityResult {
    let n = instance.num_vars();
    let mut le: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for row in instance.rows() {
        let a = row.dense(n);
        let neg = || a.iter().map(|v| -v).collect::<Vec<_>>();
        match row.sense {
            Sense::Le => le.push((a.clone(), row.rhs.clone())),
            Sense::Ge => le.push((neg(), -row.rhs.clone())),
            Sense::Eq => {
                le.push((a.clone(), row.rhs.clone()));
                le.push((neg(), -row.rhs.clone()));
            }
        }
    }
    // rows implied by nonnegativity
    le.retain(|(a, b)| !(a.iter().all(|v| !v.is_positive()) && !b.is_negative()));

    let m = le.len();
    let n_art = le.iter().filter(|(_, b)| b.is_negative()).count();
    let ncols = n + m + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut obj = vec![Rational::zero(); ncols + 1];
    let mut next_art = n + m;
    for (i, (a, b)) in le.into_iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols + 1];
        if b.is_negative() {
            for (j, v) in a.into_iter().enumerate() {
                row[j] = -v;
            }
            row[n + i] = -Rational::one();
            row[next_art] = Rational::one();
            row[ncols] = -b;
            for k in 0..ncols + 1 {
                if k != next_art && !row[k].is_zero() {
                    obj[k] -= &row[k];
                }
            }
            basis.push(next_art);
            next_art += 1;
        } else {
            for (j, v) in a.into_iter().enumerate() {
                row[j] = v;
            }
            row[n + i] = Rational::one();
            row[ncols] = b;
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        obj,
        basis,
        ncols,
        first_artificial: n + m,
    };
    if let Some(tr) = trace.as_deref_mut() {
        let _ = writeln!(tr, "initial tableau ({m} rows, {ncols} columns)");
        t.dump(tr);
    }

    let mut step = 0usize;
    while let Some(q) = (0..t.first_artificial).find(|&j| t.obj[j].is_negative()) {
        let rhs = t.rhs();
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..m {
            let a = &t.rows[i][q];
            if !a.is_positive() {
                continue;
            }
            let ratio = &t.rows[i][rhs] / a;
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && t.basis[i] < t.basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        // phase one is bounded below by zero, so some row always limits the step
        let (p, _) = best.expect("phase-one objective cannot be unbounded");
        t.pivot(p, q);
        step += 1;
        if let Some(tr) = trace.as_deref_mut() {
            let _ = writeln!(tr, "pivot {step}: column {q} enters at row {p}");
            t.dump(tr);
        }
    }

    if !t.obj[t.rhs()].is_zero() {
        return FeasibilityResult::Infeasible;
    }
    let mut values = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            values[b] = t.rows[i][t.rhs()].clone();
        }
    }
    FeasibilityResult::Feasible {
        point: WitnessPoint { values },
        is_vertex: true,
    }
}
