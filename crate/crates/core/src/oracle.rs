//! Schubert polynomials by divided differences, used as a ground truth.
//!
//! Only practical for small `n` (the top polynomial has `n!`-ish terms
//! after a few steps), which is all the checks need.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::{code_to_oneline, permutations, Code, OneLine};

/// Largest `n` the divided-difference expansion is allowed to run on.
pub const ORACLE_MAX_N: usize = 9;

fn check_size(n: usize) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(Error::Budget {
            what: "Schubert polynomial size n",
            size: n,
            limit: ORACLE_MAX_N,
        });
    }
    Ok(())
}

/// Polynomial in `x_1, ..., x_n` with integer coefficients, keyed by exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: Vec<u32>) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        terms.insert(exponents, BigInt::one());
        SparsePoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `x^alpha`; entries of `alpha` past `nvars` must be zero
    /// for a nonzero answer.
    pub fn coefficient(&self, alpha: &[usize]) -> BigInt {
        if alpha.iter().skip(self.nvars).any(|&a| a != 0) {
            return BigInt::zero();
        }
        let mut key = vec![0u32; self.nvars];
        for (k, &a) in key.iter_mut().zip(alpha) {
            *k = a as u32;
        }
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at `x_1 = ... = x_n = 1`.
    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `extra` variables that do not occur.
    pub fn widen(&self, nvars: usize) -> SparsePoly {
        assert!(nvars >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mut k = k.clone();
                k.resize(nvars, 0);
                (k, v.clone())
            })
            .collect();
        SparsePoly { nvars, terms }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let nvars = self.nvars.max(other.nvars);
        let mut out = self.widen(nvars);
        for (k, v) in &other.terms {
            let mut k = k.clone();
            k.resize(nvars, 0);
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let nvars = self.nvars.max(other.nvars);
        let mut out = SparsePoly::zero(nvars);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut k = vec![0u32; nvars];
                for (i, e) in ka.iter().enumerate() {
                    k[i] += e;
                }
                for (i, e) in kb.iter().enumerate() {
                    k[i] += e;
                }
                out.add_term(k, va * vb);
            }
        }
        out
    }

    /// The constant polynomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> SparsePoly {
        SparsePoly::monomial(vec![0; nvars])
    }

    /// `x_i` (1-indexed) in `nvars` variables.
    pub fn variable(i: usize, nvars: usize) -> SparsePoly {
        let mut e = vec![0; nvars.max(i)];
        e[i - 1] = 1;
        SparsePoly::monomial(e)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = exps
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
            match (coeff.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", mono.join("*"))?,
                (false, true) => write!(f, "{coeff}")?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `(f - s_i f) / (x_i - x_{i+1})`, with `i` 1-indexed.
pub fn divided_difference(p: &SparsePoly, i: usize) -> SparsePoly {
    assert!(
        i >= 1 && i < p.nvars,
        "divided difference index out of range"
    );
    let (a, b) = (i - 1, i);
    let mut out = SparsePoly::zero(p.nvars);
    for (exps, coeff) in &p.terms {
        let (hi, lo) = (exps[a], exps[b]);
        if hi == lo {
            continue;
        }
        let (sign, big, small) = if hi > lo {
            (coeff.clone(), hi, lo)
        } else {
            (-coeff.clone(), lo, hi)
        };
        let d = big - small;
        for t in 0..d {
            let mut e = exps.clone();
            e[a] = small + d - 1 - t;
            e[b] = small + t;
            out.add_term(e, sign.clone());
        }
    }
    out
}

/// Which ascent to peel off when climbing towards the longest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// Schubert polynomial of a permutation (completed to a full one), in `n` variables.
pub fn schubert_polynomial(w: &OneLine) -> Result<SparsePoly> {
    schubert_polynomial_via(w, AscentChoice::First)
}

pub fn schubert_polynomial_via(w: &OneLine, choice: AscentChoice) -> Result<SparsePoly> {
    let w = w.complete();
    check_size(w.len())?;
    Ok(expand_from_top(&w, choice))
}

fn expand_from_top(w: &OneLine, choice: AscentChoice) -> SparsePoly {
    let n = w.len().max(1);
    let v = w.values();
    let ascents: Vec<usize> = (1..w.len()).filter(|&i| v[i - 1] < v[i]).collect();
    let pick = match choice {
        AscentChoice::First => ascents.first(),
        AscentChoice::Last => ascents.last(),
    };
    match pick {
        None => SparsePoly::monomial((0..n as u32).rev().collect()),
        Some(&i) => {
            let up = w.swap_positions(i, i + 1);
            divided_difference(&expand_from_top(&up, choice), i)
        }
    }
}

/// Schubert polynomial of the minimal permutation with this code.
pub fn schubert_of_code(code: &Code) -> Result<SparsePoly> {
    schubert_polynomial(&code_to_oneline(code))
}

/// `c_{alpha,w}` read off the expanded polynomial.
pub fn coefficient_oracle(w: &OneLine, alpha: &[usize]) -> Result<BigInt> {
    Ok(schubert_polynomial(w)?.coefficient(alpha))
}

/// `S_w(1, ..., 1)`.
pub fn principal_specialization(w: &OneLine) -> Result<BigInt> {
    Ok(schubert_polynomial(w)?.sum_of_coefficients())
}

/// Every Schubert polynomial of `S_n`, computed top-down so each step is a
/// single divided difference of an already known polynomial.
pub fn all_schubert_polynomials(n: usize) -> Result<HashMap<OneLine, SparsePoly>> {
    check_size(n)?;
    let mut by_length: Vec<OneLine> = permutations(n);
    by_length.sort_by_key(|w| std::cmp::Reverse(w.length()));
    let mut table: HashMap<OneLine, SparsePoly> = HashMap::new();
    for w in by_length {
        let v = w.values();
        let poly = match (1..n).find(|&i| v[i - 1] < v[i]) {
            None => SparsePoly::monomial((0..n.max(1) as u32).rev().collect()),
            Some(i) => divided_difference(&table[&w.swap_positions(i, i + 1)], i),
        };
        table.insert(w, poly);
    }
    Ok(table)
}
