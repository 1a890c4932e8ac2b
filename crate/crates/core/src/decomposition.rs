//! Stanley decompositions of `S/I`: exact verification by box enumeration and
//! the transformation under localization.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::VarSubset;

/// Largest lattice box [`StanleyDecomposition::verify`] will enumerate.
pub const MAX_VERIFY_BOX: u128 = 50_000_000;

/// A Stanley space `u K[Z]`: the monomials `u v` with `v` supported on `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StanleySpace {
    offset: Monomial,
    free: VarSubset,
}

impl StanleySpace {
    pub fn new(offset: Monomial, free: VarSubset) -> Self {
        Self { offset, free }
    }

    pub fn offset(&self) -> &Monomial {
        &self.offset
    }

    pub fn free_vars(&self) -> VarSubset {
        self.free
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        if u.num_vars() != self.offset.num_vars() {
            return Err(Error::AmbientMismatch {
                expected: self.offset.num_vars(),
                found: u.num_vars(),
            });
        }
        Ok(self.contains_exponents(u.exponents()))
    }

    fn contains_exponents(&self, e: &[u32]) -> bool {
        self.offset.exponents().iter().zip(e).enumerate().all(|(j, (&o, &x))| {
            if self.free.contains(j) {
                x >= o
            } else {
                x == o
            }
        })
    }
}

/// Outcome of [`StanleyDecomposition::verify`]. Witnesses are the
/// lexicographically first offending monomial in the enumeration box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// A monomial lying in two spaces.
    Overlap(Monomial),
    /// A monomial outside the ideal and outside every space.
    Gap(Monomial),
    /// A monomial lying in a space and in the ideal.
    Leak(Monomial),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<&Monomial> {
        match self {
            Verdict::Valid => None,
            Verdict::Overlap(m) | Verdict::Gap(m) | Verdict::Leak(m) => Some(m),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Valid => "Valid",
            Verdict::Overlap(_) => "Overlap",
            Verdict::Gap(_) => "Gap",
            Verdict::Leak(_) => "Leak",
        }
    }
}

/// A claimed Stanley decomposition of `S/I`. Validity is checked by
/// [`verify`](Self::verify), never assumed.
#[derive(Clone, Debug)]
pub struct StanleyDecomposition {
    ideal: MonomialIdeal,
    spaces: Vec<StanleySpace>,
}

/// Direct sums are unordered.
impl PartialEq for StanleyDecomposition {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal && self.space_set() == other.space_set()
    }
}

impl Eq for StanleyDecomposition {}

impl StanleyDecomposition {
    pub fn new(ideal: MonomialIdeal, spaces: Vec<StanleySpace>) -> Result<Self> {
        let n = ideal.num_vars();
        for s in &spaces {
            if s.offset.num_vars() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: s.offset.num_vars(),
                });
            }
            if !s.free.is_subset(VarSubset::full(n)) {
                return Err(Error::InvalidIndex {
                    index: s.free.iter().last().unwrap_or(0),
                    len: n,
                });
            }
        }
        Ok(Self { ideal, spaces })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    pub fn space_set(&self) -> BTreeSet<&StanleySpace> {
        self.spaces.iter().collect()
    }

    /// Minimum space dimension.
    ///
    /// An empty list is only meaningful over the unit ideal, where it is the
    /// decomposition of the zero module; that case reports 0.
    pub fn sdepth(&self) -> Result<usize> {
        match self.spaces.iter().map(StanleySpace::dim).min() {
            Some(d) => Ok(d),
            None if self.ideal.is_unit() => Ok(0),
            None => Err(Error::domain(
                "an empty decomposition has no sdepth over a proper ideal",
            )),
        }
    }

    /// Per-coordinate bound `B_j = 1 + max` over generators and offsets.
    ///
    /// Above `B_j` every comparison with a generator or offset in coordinate
    /// `j` is saturated, so the box `[0, B]` decides the infinite partition
    /// condition.
    pub fn verification_box(&self) -> Vec<u32> {
        let mut bound = vec![0u32; self.ideal.num_vars()];
        let all = self
            .ideal
            .generators()
            .iter()
            .chain(self.spaces.iter().map(|s| &s.offset));
        for m in all {
            for (b, &e) in bound.iter_mut().zip(m.exponents()) {
                *b = (*b).max(e);
            }
        }
        bound.iter().map(|&b| b.saturating_add(1)).collect()
    }

    /// Checks that the spaces partition the monomials outside the ideal.
    pub fn verify(&self) -> Result<Verdict> {
        let bound = self.verification_box();
        let size = bound
            .iter()
            .map(|&b| u128::from(b) + 1)
            .try_fold(1u128, u128::checked_mul)
            .unwrap_or(u128::MAX);
        if size > MAX_VERIFY_BOX {
            return Err(Error::BoxTooLarge {
                size,
                limit: MAX_VERIFY_BOX,
            });
        }
        let n = bound.len();
        let mut e = vec![0u32; n];
        loop {
            let in_ideal = self.ideal.contains_exponents(&e);
            let mut hits = 0usize;
            for s in &self.spaces {
                if s.contains_exponents(&e) {
                    hits += 1;
                    if hits > 1 {
                        break;
                    }
                }
            }
            let witness = || Monomial::new(e.clone());
            if hits > 1 {
                return Ok(Verdict::Overlap(witness()));
            }
            if hits == 1 && in_ideal {
                return Ok(Verdict::Leak(witness()));
            }
            if hits == 0 && !in_ideal {
                return Ok(Verdict::Gap(witness()));
            }
            // odometer, last coordinate fastest: lexicographic order
            let mut j = n;
            loop {
                if j == 0 {
                    return Ok(Verdict::Valid);
                }
                j -= 1;
                if e[j] < bound[j] {
                    e[j] += 1;
                    break;
                }
                e[j] = 0;
            }
        }
    }

    /// Image under `x_index -> 1`: keeps the spaces with `x_index` free and
    /// drops that variable from each.
    ///
    /// The input must verify valid; the output is re-verified and a failure
    /// is reported as [`Error::TransformViolation`].
    pub fn localize(&self, index: usize) -> Result<StanleyDecomposition> {
        self.ideal.vars().check_index(index)?;
        let verdict = self.verify()?;
        if !verdict.is_valid() {
            return Err(Error::InvalidDecomposition(describe(&verdict, &self.ideal)));
        }
        let ideal = self.ideal.localize(index)?;
        let spaces = self
            .spaces
            .iter()
            .filter(|s| s.free.contains(index))
            .map(|s| {
                Ok(StanleySpace {
                    offset: s.offset.project_out(index)?,
                    free: s.free.remove(index).project_out(index),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let out = StanleyDecomposition { ideal, spaces };
        let verdict = out.verify()?;
        if !verdict.is_valid() {
            return Err(Error::TransformViolation(describe(&verdict, &out.ideal)));
        }
        Ok(out)
    }
}

/// `Gap at x*y` style description of a failed verdict.
pub fn describe(verdict: &Verdict, ideal: &MonomialIdeal) -> String {
    match verdict.witness() {
        Some(w) => format!("{} at {}", verdict.kind(), w.display(ideal.vars())),
        None => verdict.kind().to_string(),
    }
}
