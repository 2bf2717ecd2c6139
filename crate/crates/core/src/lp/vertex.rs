//! Vertex tests and pushing a feasible point onto a vertex.

use num_traits::{Signed, Zero};

use super::{LpInstance, Rational, Sense, WitnessPoint};
use crate::error::{Error, Result};

/// Reduced row echelon form that grows one row at a time.
struct Echelon {
    nvars: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn new(nvars: usize) -> Self {
        Echelon {
            nvars,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far.
    fn add(&mut self, mut v: Vec<Rational>) -> bool {
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[k] -= &f * x;
                }
            }
        }
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pc].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    row[k] -= &f * x;
                }
            }
        }
        self.rows.push((pc, v));
        true
    }

    /// A nonzero vector orthogonal to every row, if the rank is short.
    fn null_vector(&self) -> Option<Vec<Rational>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(pc, _)| *pc).collect();
        let free = (0..self.nvars).find(|j| !pivots.contains(j))?;
        let mut d = vec![Rational::zero(); self.nvars];
        d[free] = Rational::from_integer(1.into());
        for (pc, row) in &self.rows {
            d[*pc] = -row[free].clone();
        }
        Some(d)
    }
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[j] = Rational::from_integer(1.into());
    v
}

fn active_echelon(instance: &LpInstance, x: &[Rational]) -> Echelon {
    let n = instance.num_vars();
    let mut ech = Echelon::new(n);
    for row in instance.rows() {
        if row.is_tight(x) {
            ech.add(row.dense(n));
        }
    }
    for (j, v) in x.iter().enumerate() {
        if v.is_zero() {
            ech.add(unit(n, j));
        }
    }
    ech
}

/// True when the constraints tight at `point` (nonnegativity included) have full column rank.
pub fn is_vertex(instance: &LpInstance, point: &WitnessPoint) -> bool {
    active_echelon(instance, &point.values).rank() == instance.num_vars()
}

/// Largest step along `d` that keeps `x` feasible, with the constraint that stops it.
fn step_limit(
    instance: &LpInstance,
    x: &[Rational],
    d: &[Rational],
) -> Option<(Rational, Vec<Rational>)> {
    let n = instance.num_vars();
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut offer = |t: Rational, v: Vec<Rational>| {
        if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
            best = Some((t, v));
        }
    };
    for row in instance.rows() {
        let ad = row.eval(d);
        if ad.is_zero() {
            continue;
        }
        let slack = &row.rhs - row.eval(x);
        match row.sense {
            Sense::Le if ad.is_positive() => offer(slack / ad, row.dense(n)),
            Sense::Ge if ad.is_negative() => offer(slack / ad, row.dense(n)),
            // equalities are tight from the start, so d is orthogonal to them
            _ => {}
        }
    }
    for j in 0..n {
        if d[j].is_negative() {
            offer(-&x[j] / &d[j], unit(n, j));
        }
    }
    best
}

/// Moves a feasible point along null-space directions of its tight
/// constraints until it reaches a vertex. Each move makes one more
/// independent constraint tight.
pub fn drive_to_vertex(instance: &LpInstance, point: &WitnessPoint) -> Result<WitnessPoint> {
    instance.check(&point.values)?;
    let mut x = point.values.clone();
    let mut ech = active_echelon(instance, &x);
    while let Some(mut d) = ech.null_vector() {
        let hit = match step_limit(instance, &x, &d) {
            Some(h) => h,
            None => {
                for v in d.iter_mut() {
                    *v = -v.clone();
                }
                step_limit(instance, &x, &d).ok_or(Error::Unbounded)?
            }
        };
        let (t, row) = hit;
        for (xi, di) in x.iter_mut().zip(&d) {
            if !di.is_zero() {
                *xi += &t * di;
            }
        }
        let grew = ech.add(row);
        debug_assert!(grew);
    }
    Ok(WitnessPoint { values: x })
}
