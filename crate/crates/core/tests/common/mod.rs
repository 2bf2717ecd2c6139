#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schubert::perm::{Diagram, OneLine};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All vectors of `parts` nonnegative entries summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; parts];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// Uniform composition by stars and bars.
pub fn random_composition(rng: &mut impl Rng, total: usize, parts: usize) -> Vec<usize> {
    if parts == 0 {
        return Vec::new();
    }
    let mut bars: Vec<usize> = (0..parts - 1).map(|_| rng.gen_range(0..=total)).collect();
    bars.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for b in bars {
        out.push(b - prev);
        prev = b;
    }
    out.push(total - prev);
    out
}

/// Moves `moves` single units from a random row to a random earlier row.
pub fn push_north(rng: &mut impl Rng, base: &[usize], moves: usize) -> Vec<usize> {
    let mut a = base.to_vec();
    for _ in 0..moves {
        let from: Vec<usize> = (1..a.len()).filter(|&i| a[i] > 0).collect();
        if from.is_empty() {
            break;
        }
        let i = from[rng.gen_range(0..from.len())];
        let j = rng.gen_range(0..i);
        a[i] -= 1;
        a[j] += 1;
    }
    a
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> OneLine {
    let mut v: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    OneLine::new(v).unwrap()
}

pub fn random_diagram(rng: &mut impl Rng, n: usize, density: f64) -> Diagram {
    let boxes: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Diagram::new(n, boxes).unwrap()
}

/// Diagram whose column `c` has the rows in bitmask `cols[c - 1]`.
pub fn diagram_from_columns(n: usize, cols: &[u32]) -> Diagram {
    let mut boxes = Vec::new();
    for (c, &mask) in cols.iter().enumerate() {
        for r in 0..n {
            if mask & (1 << r) != 0 {
                boxes.push((r + 1, c + 1));
            }
        }
    }
    Diagram::new(n, boxes).unwrap()
}

pub fn row_counts(d: &Diagram) -> Vec<usize> {
    (1..=d.n()).map(|r| d.row_count(r)).collect()
}

/// One line per acceptance criterion, then fail the test if anything failed.
/// Prints the criterion line and returns whether it passed.
pub fn report(id: u32, title: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("criterion {id}: PASS  {title}");
    } else {
        println!(
            "criterion {id}: FAIL  {title} ({} problems)",
            failures.len()
        );
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
    }
    failures.is_empty()
}
