//! Prime filtrations `I = I_0 ⊂ I_1 ⊂ ... ⊂ I_r = S` with cyclic quotients
//! `(S/P_j)(-a_j)`, their cleanness predicates, fdepth, and localization.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::decomposition::{StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::poset::SearchLimits;
use crate::vars::VarSubset;

/// One step: adjoin `x^offset`, with quotient `S/prime` shifted by `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationStep {
    offset: Monomial,
    prime: VarSubset,
}

impl FiltrationStep {
    pub fn new(offset: Monomial, prime: VarSubset) -> Self {
        Self { offset, prime }
    }

    pub fn offset(&self) -> &Monomial {
        &self.offset
    }

    pub fn prime(&self) -> VarSubset {
        self.prime
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepFailure {
    /// The offset already lies in the previous ideal, so the inclusion is not strict.
    NotStrict,
    /// `I_{j-1} : x^a` differs from the claimed prime.
    ColonMismatch { actual: MonomialIdeal },
    /// Offset or prime does not fit the ambient ring.
    Ambient,
    /// The chain stops before reaching the unit ideal.
    Unterminated,
}

/// Result of [`PrimeFiltration::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationVerdict {
    Valid,
    /// `index` is the failing step, or the number of steps for [`StepFailure::Unterminated`].
    BadStep { index: usize, reason: StepFailure },
}

impl FiltrationVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, FiltrationVerdict::Valid)
    }
}

impl fmt::Display for FiltrationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationVerdict::Valid => f.write_str("Valid"),
            FiltrationVerdict::BadStep { index, reason } => {
                write!(f, "BadStep({index}): ")?;
                match reason {
                    StepFailure::NotStrict => f.write_str("offset already in the previous ideal"),
                    StepFailure::ColonMismatch { actual } => {
                        write!(f, "colon ideal is {}, not the claimed prime", actual.display())
                    }
                    StepFailure::Ambient => f.write_str("offset or prime outside the ambient ring"),
                    StepFailure::Unterminated => f.write_str("chain does not reach the unit ideal"),
                }
            }
        }
    }
}

/// A claimed prime filtration of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFiltration {
    ideal: MonomialIdeal,
    steps: Vec<FiltrationStep>,
}

impl PrimeFiltration {
    pub fn new(ideal: MonomialIdeal, steps: Vec<FiltrationStep>) -> Result<Self> {
        let n = ideal.num_vars();
        for s in &steps {
            if s.offset.num_vars() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: s.offset.num_vars(),
                });
            }
        }
        Ok(Self { ideal, steps })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn steps(&self) -> &[FiltrationStep] {
        &self.steps
    }

    /// The chain `I_0, ..., I_r`, without any validity check.
    pub fn chain(&self) -> Result<Vec<MonomialIdeal>> {
        let mut chain = vec![self.ideal.clone()];
        for s in &self.steps {
            let next = chain.last().expect("non-empty").with_generator(&s.offset)?;
            chain.push(next);
        }
        Ok(chain)
    }

    /// Checks each step (`I_j = (I_{j-1}, x^a)`, `I_{j-1} : x^a = P_j`) and
    /// that the chain ends at `S`.
    pub fn verify(&self) -> FiltrationVerdict {
        let n = self.ideal.num_vars();
        let full = VarSubset::full(n);
        let mut current = self.ideal.clone();
        for (index, step) in self.steps.iter().enumerate() {
            let bad = |reason| FiltrationVerdict::BadStep { index, reason };
            if step.offset.num_vars() != n || !step.prime.is_subset(full) {
                return bad(StepFailure::Ambient);
            }
            if current.contains_unchecked(&step.offset) {
                return bad(StepFailure::NotStrict);
            }
            let colon = match current.colon(&step.offset) {
                Ok(c) => c,
                Err(_) => return bad(StepFailure::Ambient),
            };
            let prime = MonomialPrime::new(self.ideal.vars().clone(), step.prime)
                .expect("subset checked")
                .to_ideal();
            if colon != prime {
                return bad(StepFailure::ColonMismatch { actual: colon });
            }
            current = current
                .with_generator(&step.offset)
                .expect("ambient checked");
        }
        if current.is_unit() {
            FiltrationVerdict::Valid
        } else {
            FiltrationVerdict::BadStep {
                index: self.steps.len(),
                reason: StepFailure::Unterminated,
            }
        }
    }

    fn ensure_valid(&self) -> Result<()> {
        match self.verify() {
            FiltrationVerdict::Valid => Ok(()),
            bad => Err(Error::InvalidFiltration(bad.to_string())),
        }
    }

    /// `Supp`: the set of primes, sorted.
    pub fn support(&self) -> Vec<VarSubset> {
        let mut s: Vec<VarSubset> = self.steps.iter().map(|s| s.prime).collect();
        s.sort();
        s.dedup();
        s
    }

    /// `Supp = Min(S/I)`.
    pub fn is_clean(&self) -> Result<bool> {
        self.ensure_valid()?;
        let mut min: Vec<VarSubset> = self
            .ideal
            .minimal_primes_total()
            .iter()
            .map(MonomialPrime::support)
            .collect();
        min.sort();
        let supp = self.support();
        let clean = supp == min;

        // equivalently: Supp contains Min and has no containments
        let antichain = supp
            .iter()
            .all(|a| supp.iter().all(|b| a == b || !a.is_subset(*b)));
        let covers_min = min.iter().all(|m| supp.contains(m));
        debug_assert_eq!(clean, antichain && covers_min);
        Ok(clean)
    }

    /// For `i < j`, `P_i ⊆ P_j` implies `P_i = P_j`.
    pub fn is_pretty_clean(&self) -> Result<bool> {
        self.ensure_valid()?;
        let primes: Vec<VarSubset> = self.steps.iter().map(|s| s.prime).collect();
        Ok(primes.iter().enumerate().all(|(i, &p)| {
            primes[i + 1..]
                .iter()
                .all(|&q| p == q || !p.is_subset(q))
        }))
    }

    /// `min dim S/P_j`; `None` for the empty filtration of the unit ideal.
    pub fn fdepth(&self) -> Result<Option<usize>> {
        self.ensure_valid()?;
        let n = self.ideal.num_vars();
        Ok(self.steps.iter().map(|s| n - s.prime.len()).min())
    }

    /// The Stanley decomposition `⊕ x^{a_j} K[Z_j]`, `Z_j` the variables outside `P_j`.
    pub fn to_decomposition(&self) -> Result<StanleyDecomposition> {
        self.ensure_valid()?;
        let n = self.ideal.num_vars();
        let spaces = self
            .steps
            .iter()
            .map(|s| StanleySpace::new(s.offset.clone(), s.prime.complement(n)))
            .collect();
        StanleyDecomposition::new(self.ideal.clone(), spaces)
    }

    /// Image under `x_index -> 1`: steps whose prime contains `x_index` have
    /// zero quotient and are dropped; the rest are projected. The result is
    /// re-verified.
    pub fn localize(&self, index: usize) -> Result<PrimeFiltration> {
        self.ideal.vars().check_index(index)?;
        self.ensure_valid()?;
        let ideal = self.ideal.localize(index)?;
        let steps = self
            .steps
            .iter()
            .filter(|s| !s.prime.contains(index))
            .map(|s| {
                Ok(FiltrationStep {
                    offset: s.offset.project_out(index)?,
                    prime: s.prime.project_out(index),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let out = PrimeFiltration { ideal, steps };
        match out.verify() {
            FiltrationVerdict::Valid => Ok(out),
            bad => Err(Error::TransformViolation(bad.to_string())),
        }
    }
}

/// fdepth search result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdepthResult {
    pub value: usize,
    pub filtration: PrimeFiltration,
    /// Offsets were restricted to `a <= box_bound`.
    pub box_bound: Monomial,
    pub nodes: u64,
}

/// Maximum of `min dim S/P_j` over prime filtrations whose offsets lie in
/// the box `a <= g + slack`, `g` the lcm exponent of the minimal generators.
///
/// Thresholds are tried from `min dim S/P` over the minimal primes (an upper
/// bound, since every minimal prime occurs in every filtration) downwards.
/// For a fixed threshold `t`, the ideals from which `S` cannot be reached
/// using primes of dimension `>= t` are memoized.
pub fn fdepth(ideal: &MonomialIdeal, slack: u32, limits: &SearchLimits) -> Result<FdepthResult> {
    if ideal.is_unit() {
        return Err(Error::domain("fdepth of the zero module S/S is undefined"));
    }
    let n = ideal.num_vars();
    let box_bound = Monomial::new(
        ideal
            .lcm_exponents()
            .exponents()
            .iter()
            .map(|&g| g.checked_add(slack).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?,
    );
    let offsets = box_offsets(&box_bound, limits.max_poset_points)?;
    let upper = ideal
        .minimal_primes_total()
        .iter()
        .map(MonomialPrime::dim)
        .min()
        .unwrap_or(n);
    let mut nodes = 0u64;
    for t in (0..=upper).rev() {
        let mut search = FdepthSearch {
            offsets: &offsets,
            threshold: t,
            dead: HashSet::new(),
            colon_cache: HashMap::new(),
            path: Vec::new(),
            nodes: &mut nodes,
            max_nodes: limits.max_nodes,
        };
        if search.descend(ideal)? {
            let filtration = PrimeFiltration::new(ideal.clone(), search.path)?;
            debug_assert!(filtration.verify().is_valid());
            return Ok(FdepthResult {
                value: t,
                filtration,
                box_bound,
                nodes,
            });
        }
    }
    Err(Error::domain(format!(
        "no prime filtration with offsets inside the box {:?}",
        box_bound.exponents()
    )))
}

/// All exponent vectors `0 <= a <= bound`, in decreasing lexicographic order.
fn box_offsets(bound: &Monomial, limit: usize) -> Result<Vec<Monomial>> {
    let b = bound.exponents();
    let size = b
        .iter()
        .map(|&x| u128::from(x) + 1)
        .try_fold(1u128, u128::checked_mul)
        .unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::BoxTooLarge {
            size,
            limit: limit as u128,
        });
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut e = b.to_vec();
    loop {
        out.push(Monomial::new(e.clone()));
        let mut j = e.len();
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            if e[j] > 0 {
                e[j] -= 1;
                break;
            }
            e[j] = b[j];
        }
    }
}

struct FdepthSearch<'a, 'n> {
    offsets: &'a [Monomial],
    threshold: usize,
    dead: HashSet<MonomialIdeal>,
    colon_cache: HashMap<MonomialIdeal, Vec<(usize, VarSubset)>>,
    path: Vec<FiltrationStep>,
    nodes: &'n mut u64,
    max_nodes: u64,
}

impl FdepthSearch<'_, '_> {
    /// Offsets whose colon with `ideal` is a prime of dimension `>= threshold`.
    fn moves(&mut self, ideal: &MonomialIdeal) -> Vec<(usize, VarSubset)> {
        if let Some(m) = self.colon_cache.get(ideal) {
            return m.clone();
        }
        let n = ideal.num_vars();
        let moves: Vec<(usize, VarSubset)> = self
            .offsets
            .iter()
            .enumerate()
            .filter(|(_, a)| !ideal.contains_unchecked(a))
            .filter_map(|(k, a)| {
                let colon = ideal.colon(a).expect("ambient matches");
                colon
                    .as_prime()
                    .map(|p| (k, p.support()))
                    .filter(|(_, p)| n - p.len() >= self.threshold)
            })
            .collect();
        self.colon_cache.insert(ideal.clone(), moves.clone());
        moves
    }

    fn descend(&mut self, ideal: &MonomialIdeal) -> Result<bool> {
        if ideal.is_unit() {
            return Ok(true);
        }
        *self.nodes += 1;
        if *self.nodes > self.max_nodes {
            return Err(Error::NodeBudgetExhausted {
                limit: self.max_nodes,
            });
        }
        if self.dead.contains(ideal) {
            return Ok(false);
        }
        for (k, prime) in self.moves(ideal) {
            let a = &self.offsets[k];
            let next = ideal.with_generator(a)?;
            self.path.push(FiltrationStep::new(a.clone(), prime));
            if self.descend(&next)? {
                return Ok(true);
            }
            self.path.pop();
        }
        self.dead.insert(ideal.clone());
        Ok(false)
    }
}
