//! Stanley depth through interval partitions of the characteristic poset.
//!
//! For a monomial ideal `I` with `g` the componentwise maximum of its minimal
//! generators, the characteristic poset is the set of lattice points
//! `0 <= e <= g` with `x^e` outside `I`. For a partition of it into intervals
//! `[c, d]`, put `rho(d) = #{ j : d_j = g_j }`; `sdepth S/I` is the maximum
//! over partitions of `min rho(d)`. An interval `[c, d]` yields the spaces
//! `x^e K[Z]` with `Z = { j : d_j = g_j }`, one for each `e` in `[c, d]` that
//! agrees with `c` on `Z`.

use crate::decomposition::{describe, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VarSubset;

/// Dense point index used by the poset; the lattice box `[0, g]` must fit.
const MAX_INDEX_BOX: u128 = 1 << 24;
const ABSENT: u32 = u32::MAX;

/// Resource limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_poset_points: usize,
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_poset_points: 5000,
            max_nodes: 10_000_000,
        }
    }
}

/// Closed interval `[lower, upper]` of lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lower: Monomial,
    pub upper: Monomial,
}

impl Interval {
    pub fn new(lower: Monomial, upper: Monomial) -> Self {
        Self { lower, upper }
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        self.lower
            .exponents()
            .iter()
            .zip(self.upper.exponents())
            .zip(e)
            .all(|((&c, &d), &x)| c <= x && x <= d)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

/// The characteristic poset of `S/I` with respect to `g = lcm` of the generators.
#[derive(Clone, Debug)]
pub struct CharacteristicPoset {
    ideal: MonomialIdeal,
    g: Monomial,
    points: Vec<Monomial>,
    strides: Vec<usize>,
    dense: Vec<u32>,
}

impl CharacteristicPoset {
    /// Enumerates the poset. The unit ideal has an empty poset and is rejected.
    /// The zero ideal gives the single point `0` with `rho = n`.
    pub fn new(ideal: &MonomialIdeal, limits: &SearchLimits) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::domain(
                "the unit ideal has an empty characteristic poset (S/I = 0)",
            ));
        }
        let g = ideal.lcm_exponents();
        let n = g.num_vars();
        let size = g
            .exponents()
            .iter()
            .map(|&x| u128::from(x) + 1)
            .try_fold(1u128, u128::checked_mul)
            .unwrap_or(u128::MAX);
        if size > MAX_INDEX_BOX {
            return Err(Error::BoxTooLarge {
                size,
                limit: MAX_INDEX_BOX,
            });
        }
        let mut strides = vec![1usize; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (g.exponents()[j + 1] as usize + 1);
        }
        let mut dense = vec![ABSENT; size as usize];
        let mut points = Vec::new();
        let mut e = vec![0u32; n];
        enumerate(ideal, g.exponents(), 0, &mut e, &mut points, limits.max_poset_points)?;
        for (i, p) in points.iter().enumerate() {
            dense[flat(&strides, p.exponents())] = i as u32;
        }
        Ok(Self {
            ideal: ideal.clone(),
            g,
            points,
            strides,
            dense,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn g(&self) -> &Monomial {
        &self.g
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> &[Monomial] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `#{ j : d_j = g_j }`.
    pub fn rho(&self, d: &Monomial) -> usize {
        rho(self.g.exponents(), d.exponents())
    }

    /// `{ j : d_j = g_j }`.
    pub fn saturated_vars(&self, d: &Monomial) -> VarSubset {
        VarSubset::from_indices(
            self.g
                .exponents()
                .iter()
                .zip(d.exponents())
                .enumerate()
                .filter(|(_, (g, x))| g == x)
                .map(|(j, _)| j),
        )
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        if e.len() != self.g.num_vars() || e.iter().zip(self.g.exponents()).any(|(x, g)| x > g) {
            return None;
        }
        match self.dense[flat(&self.strides, e)] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    /// Indices of the points of `[c, d]` (all of which lie in the poset when `d` does).
    fn interval_points(&self, c: &[u32], d: &[u32], out: &mut Vec<usize>) {
        out.clear();
        let n = c.len();
        let mut e = c.to_vec();
        loop {
            out.push(self.dense[flat(&self.strides, &e)] as usize);
            let mut j = n;
            loop {
                if j == 0 {
                    return;
                }
                j -= 1;
                if e[j] < d[j] {
                    e[j] += 1;
                    break;
                }
                e[j] = c[j];
            }
        }
    }

    /// Checks that `partition` is an exact interval partition of this poset.
    pub fn check_partition(&self, partition: &IntervalPartition) -> Result<()> {
        let n = self.g.num_vars();
        let mut owner: Vec<Option<usize>> = vec![None; self.points.len()];
        let mut buf = Vec::new();
        for (k, iv) in partition.intervals.iter().enumerate() {
            if iv.lower.num_vars() != n || iv.upper.num_vars() != n {
                return Err(Error::InvalidPartition(format!(
                    "interval {k} has the wrong number of coordinates"
                )));
            }
            if !iv.lower.divides_unchecked(&iv.upper) {
                return Err(Error::InvalidPartition(format!(
                    "interval {k}: lower {:?} is not below upper {:?}",
                    iv.lower.exponents(),
                    iv.upper.exponents()
                )));
            }
            if self.index_of(iv.upper.exponents()).is_none() {
                return Err(Error::InvalidPartition(format!(
                    "interval {k}: upper {:?} is not in the poset",
                    iv.upper.exponents()
                )));
            }
            self.interval_points(iv.lower.exponents(), iv.upper.exponents(), &mut buf);
            for &p in &buf {
                if let Some(other) = owner[p] {
                    return Err(Error::InvalidPartition(format!(
                        "intervals {other} and {k} share the point {:?}",
                        self.points[p].exponents()
                    )));
                }
                owner[p] = Some(k);
            }
        }
        if let Some(p) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!(
                "point {:?} is not covered",
                self.points[p].exponents()
            )));
        }
        Ok(())
    }

    /// `min rho(upper)` over the intervals.
    pub fn partition_value(&self, partition: &IntervalPartition) -> Option<usize> {
        partition.intervals.iter().map(|iv| self.rho(&iv.upper)).min()
    }

    /// The Stanley decomposition induced by a valid partition; re-verified.
    pub fn partition_to_decomposition(&self, partition: &IntervalPartition) -> Result<StanleyDecomposition> {
        self.check_partition(partition)?;
        let mut spaces = Vec::new();
        for iv in &partition.intervals {
            let free = self.saturated_vars(&iv.upper);
            let c = iv.lower.exponents();
            let d = iv.upper.exponents();
            // vary only the non-saturated coordinates between c and d
            let top: Vec<u32> = (0..c.len())
                .map(|j| if free.contains(j) { c[j] } else { d[j] })
                .collect();
            let mut e = c.to_vec();
            loop {
                spaces.push(StanleySpace::new(Monomial::new(e.clone()), free));
                let mut j = e.len();
                let done = loop {
                    if j == 0 {
                        break true;
                    }
                    j -= 1;
                    if e[j] < top[j] {
                        e[j] += 1;
                        break false;
                    }
                    e[j] = c[j];
                };
                if done {
                    break;
                }
            }
        }
        let dec = StanleyDecomposition::new(self.ideal.clone(), spaces)?;
        let verdict = dec.verify()?;
        if !verdict.is_valid() {
            return Err(Error::TransformViolation(describe(&verdict, &self.ideal)));
        }
        Ok(dec)
    }

    /// Backtracking search for the best interval partition.
    pub fn sdepth(&self, limits: &SearchLimits) -> Result<SdepthResult> {
        let n = self.g.num_vars();
        let max_rho = self.points.iter().map(|p| self.rho(p)).max().unwrap_or(0);
        let mut nodes = 0u64;
        for t in (0..=max_rho.min(n)).rev() {
            if let Some(partition) = self.cover_with_threshold(t, limits.max_nodes, &mut nodes)? {
                return Ok(SdepthResult {
                    value: t,
                    g: self.g.clone(),
                    partition,
                    nodes,
                });
            }
        }
        unreachable!("singleton intervals always partition the poset")
    }

    /// Searches for a partition whose intervals all have `rho(upper) >= t`.
    ///
    /// The lexicographically least uncovered point `c` must be the lower end of
    /// its interval, since every point below it is lexicographically smaller
    /// and hence already covered. Candidate uppers are tried in decreasing
    /// lexicographic order.
    pub fn cover_with_threshold(&self, t: usize, max_nodes: u64, nodes: &mut u64) -> Result<Option<IntervalPartition>> {
        let g = self.g.exponents();
        let admissible: Vec<usize> = (0..self.points.len())
            .filter(|&i| rho(g, self.points[i].exponents()) >= t)
            .collect();
        let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let ups: Vec<u32> = admissible
                .iter()
                .rev()
                .filter(|&&d| p.divides_unchecked(&self.points[d]))
                .map(|&d| d as u32)
                .collect();
            if ups.is_empty() {
                // some point has no admissible interval above it at all
                return Ok(None);
            }
            candidates.push(ups);
        }
        let mut search = CoverSearch {
            poset: self,
            candidates,
            covered: vec![false; self.points.len()],
            chosen: Vec::new(),
            nodes,
            max_nodes,
        };
        if search.descend(0)? {
            let intervals = search
                .chosen
                .iter()
                .map(|&(c, d)| Interval::new(self.points[c].clone(), self.points[d].clone()))
                .collect();
            Ok(Some(IntervalPartition { intervals }))
        } else {
            Ok(None)
        }
    }
}

struct CoverSearch<'a, 'n> {
    poset: &'a CharacteristicPoset,
    candidates: Vec<Vec<u32>>,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    nodes: &'n mut u64,
    max_nodes: u64,
}

impl CoverSearch<'_, '_> {
    fn descend(&mut self, from: usize) -> Result<bool> {
        *self.nodes += 1;
        if *self.nodes > self.max_nodes {
            return Err(Error::NodeBudgetExhausted {
                limit: self.max_nodes,
            });
        }
        let Some(c) = (from..self.covered.len()).find(|&i| !self.covered[i]) else {
            return Ok(true);
        };
        let mut members = Vec::new();
        for k in 0..self.candidates[c].len() {
            let d = self.candidates[c][k] as usize;
            self.poset.interval_points(
                self.poset.points[c].exponents(),
                self.poset.points[d].exponents(),
                &mut members,
            );
            if members.iter().any(|&p| self.covered[p]) {
                continue;
            }
            for &p in &members {
                self.covered[p] = true;
            }
            self.chosen.push((c, d));
            if self.descend(c + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            // members may have been overwritten by deeper calls
            self.poset.interval_points(
                self.poset.points[c].exponents(),
                self.poset.points[d].exponents(),
                &mut members,
            );
            for &p in &members {
                self.covered[p] = false;
            }
        }
        Ok(false)
    }
}

/// An optimal interval partition and its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdepthResult {
    pub value: usize,
    pub g: Monomial,
    pub partition: IntervalPartition,
    /// Search nodes visited over all thresholds.
    pub nodes: u64,
}

/// `sdepth S/I` with an optimal partition as witness.
pub fn sdepth(ideal: &MonomialIdeal, limits: &SearchLimits) -> Result<SdepthResult> {
    CharacteristicPoset::new(ideal, limits)?.sdepth(limits)
}

/// Stanley decomposition attached to an interval partition of the poset of `ideal`.
pub fn partition_to_decomposition(
    ideal: &MonomialIdeal,
    partition: &IntervalPartition,
    limits: &SearchLimits,
) -> Result<StanleyDecomposition> {
    CharacteristicPoset::new(ideal, limits)?.partition_to_decomposition(partition)
}

fn rho(g: &[u32], d: &[u32]) -> usize {
    g.iter().zip(d).filter(|(a, b)| a == b).count()
}

fn flat(strides: &[usize], e: &[u32]) -> usize {
    strides.iter().zip(e).map(|(s, &x)| s * x as usize).sum()
}

fn enumerate(
    ideal: &MonomialIdeal,
    g: &[u32],
    j: usize,
    e: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
    limit: usize,
) -> Result<()> {
    if j == g.len() {
        if out.len() >= limit {
            return Err(Error::PosetTooLarge { limit });
        }
        out.push(Monomial::new(e.clone()));
        return Ok(());
    }
    for v in 0..=g[j] {
        e[j] = v;
        // later coordinates are zero here, and membership is upward closed
        if ideal.contains_exponents(e) {
            break;
        }
        enumerate(ideal, g, j + 1, e, out, limit)?;
    }
    e[j] = 0;
    Ok(())
}
