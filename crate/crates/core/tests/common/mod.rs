//! Brute-force oracles shared by the integration suites. None of them call
//! into the search code they check.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use stanley_core::random::variables;
use stanley_core::{Monomial, MonomialIdeal};

/// A generator list as raw exponent vectors, possibly non-minimal.
#[derive(Clone, Debug)]
pub struct RawIdeal {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl RawIdeal {
    pub fn random<R: Rng>(rng: &mut R, max_vars: usize, max_exp: u32, max_gens: usize) -> Self {
        let n = rng.random_range(1..=max_vars);
        loop {
            let k = rng.random_range(1..=max_gens);
            let gens: Vec<Vec<u32>> = (0..k)
                .map(|_| (0..n).map(|_| rng.random_range(0..=max_exp)).collect())
                .collect();
            if gens.iter().all(|g| g.iter().any(|&e| e > 0)) {
                return RawIdeal { n, gens };
            }
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(variables(self.n), self.gens.iter().cloned().map(Monomial::new)).unwrap()
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Generators not strictly divisible by another generator, deduplicated.
    pub fn minimal(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        for g in &self.gens {
            let dominated = self
                .gens
                .iter()
                .any(|h| h != g && h.iter().zip(g).all(|(a, b)| a <= b));
            if !dominated && !out.contains(g) {
                out.push(g.clone());
            }
        }
        out.sort();
        out
    }

    pub fn lcm(&self) -> Vec<u32> {
        let mut g = vec![0; self.n];
        for m in self.minimal() {
            for (a, b) in g.iter_mut().zip(&m) {
                *a = (*a).max(*b);
            }
        }
        g
    }

    /// Every exponent vector `0 <= e <= g` outside the ideal.
    pub fn poset_points(&self) -> Vec<Vec<u32>> {
        let g = self.lcm();
        box_points(&g).into_iter().filter(|e| !self.contains(e)).collect()
    }

    /// Minimal variable subsets meeting the support of every generator.
    pub fn minimal_primes(&self) -> Vec<u64> {
        let supports: Vec<u64> = self
            .gens
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | 1 << i))
            .collect();
        let covers: Vec<u64> = (0..1u64 << self.n)
            .filter(|p| supports.iter().all(|s| s & p != 0))
            .collect();
        let mut out: Vec<u64> = covers
            .iter()
            .copied()
            .filter(|p| !covers.iter().any(|q| q != p && q & p == *q))
            .collect();
        out.sort();
        out
    }
}

pub fn box_points(g: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in g {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Maximum over all interval partitions of the minimum of
/// `#{j : upper_j = g_j}`, by memoised exhaustive enumeration over covered sets.
/// Panics on more than 20 points.
pub fn oracle_sdepth(raw: &RawIdeal) -> usize {
    let g = raw.lcm();
    let pts = raw.poset_points();
    assert!(pts.len() <= 20, "oracle limited to 20 points");
    let m = pts.len();
    let rho = |d: &[u32]| d.iter().zip(&g).filter(|(a, b)| a == b).count();
    // Every interval of the poset as a point mask, with its value.
    let mut intervals: Vec<(u32, usize)> = Vec::new();
    for a in &pts {
        for b in &pts {
            if !leq(a, b) {
                continue;
            }
            let inside: Vec<usize> = (0..m).filter(|&k| leq(a, &pts[k]) && leq(&pts[k], b)).collect();
            let full = box_points(&b.iter().zip(a).map(|(x, y)| x - y).collect::<Vec<_>>()).len();
            if inside.len() == full {
                intervals.push((inside.iter().fold(0u32, |s, &k| s | 1 << k), rho(b)));
            }
        }
    }
    fn best(covered: u32, m: usize, intervals: &[(u32, usize)], memo: &mut HashMap<u32, Option<usize>>) -> Option<usize> {
        if covered.count_ones() as usize == m {
            return Some(usize::MAX);
        }
        if let Some(v) = memo.get(&covered) {
            return *v;
        }
        let first = (0..m).find(|k| covered & (1 << k) == 0).unwrap();
        let mut result: Option<usize> = None;
        for &(mask, value) in intervals {
            if mask & (1 << first) != 0 && mask & covered == 0 {
                if let Some(rest) = best(covered | mask, m, intervals, memo) {
                    let v = rest.min(value);
                    result = Some(result.map_or(v, |r: usize| r.max(v)));
                }
            }
        }
        memo.insert(covered, result);
        result
    }
    best(0, m, &intervals, &mut HashMap::new()).expect("singletons always partition")
}
