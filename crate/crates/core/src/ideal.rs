//! Monomial ideals in canonical minimal form, monomial primes, colon ideals
//! and the localization map that sends one variable to 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::vars::{VarSubset, VariableSet};

/// A monomial ideal, stored by its unique minimal monomial generating set.
///
/// Generators are kept in decreasing lexicographic order, so structural equality is ideal
/// equality. No generators means the zero ideal; the single generator `1`
/// means the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: VariableSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new<I>(vars: VariableSet, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let n = vars.len();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != n) {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: bad.num_vars(),
            });
        }
        Ok(Self {
            vars,
            gens: minimalize(gens),
        })
    }

    pub fn zero(vars: VariableSet) -> Self {
        Self {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: VariableSet) -> Self {
        let n = vars.len();
        Self {
            vars,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The squarefree ideal generated by the given variable subsets.
    pub fn from_supports<I>(vars: VariableSet, supports: I) -> Self
    where
        I: IntoIterator<Item = VarSubset>,
    {
        let n = vars.len();
        let gens = supports.into_iter().map(|s| Monomial::squarefree(n, s)).collect();
        Self {
            vars,
            gens: minimalize(gens),
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check(&self, u: &Monomial) -> Result<()> {
        if u.num_vars() == self.num_vars() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.num_vars(),
                found: u.num_vars(),
            })
        }
    }

    /// Monomial membership: some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check(u)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// Membership for a raw exponent slice of the right length.
    pub(crate) fn contains_exponents(&self, e: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(e).all(|(a, b)| a <= b))
    }

    /// `I : x^a`, generated by `u_i / gcd(u_i, x^a)`.
    pub fn colon(&self, a: &Monomial) -> Result<MonomialIdeal> {
        self.check(a)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.quotient_by_gcd(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        })
    }

    /// `I + (u)`.
    pub fn with_generator(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check(u)?;
        let mut gens = self.gens.clone();
        gens.push(u.clone());
        Ok(Self {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        })
    }

    /// `I subseteq J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.vars.ensure_same(&other.vars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Image of the ideal under `x_index -> 1`, living in the ring without that
    /// variable.
    pub fn localize(&self, index: usize) -> Result<MonomialIdeal> {
        let vars = self.vars.without(index)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.project_out(index))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            vars,
            gens: minimalize(gens),
        })
    }

    /// Localization by variable name.
    pub fn localize_var(&self, name: &str) -> Result<MonomialIdeal> {
        self.localize(self.vars.index_of(name)?)
    }

    /// Componentwise maximum of the minimal generators (`g` of the
    /// characteristic poset). The zero vector for the zero ideal.
    pub fn lcm_exponents(&self) -> Monomial {
        let mut g = vec![0u32; self.num_vars()];
        for gen in &self.gens {
            for (slot, &e) in g.iter_mut().zip(gen.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        Monomial::new(g)
    }

    /// Returns the prime if every minimal generator is a variable. The zero
    /// ideal is the prime on no variables; the unit ideal is not prime.
    pub fn as_prime(&self) -> Option<MonomialPrime> {
        let mut support = VarSubset::EMPTY;
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            support = support.union(g.support());
        }
        Some(MonomialPrime {
            vars: self.vars.clone(),
            support,
        })
    }

    /// The minimal primes of `S/I`: minimal transversals of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        if self.is_unit() {
            return Err(Error::domain("the unit ideal has no minimal primes"));
        }
        if self.is_zero() {
            return Err(Error::domain(
                "minimal primes requested for the zero ideal",
            ));
        }
        Ok(self.minimal_primes_total())
    }

    /// Like [`minimal_primes`](Self::minimal_primes) but total: the zero
    /// ideal gives the zero prime and the unit ideal gives nothing.
    pub(crate) fn minimal_primes_total(&self) -> Vec<MonomialPrime> {
        if self.is_unit() {
            return Vec::new();
        }
        let edges: Vec<VarSubset> = self.gens.iter().map(Monomial::support).collect();
        minimal_transversals(&edges)
            .into_iter()
            .map(|support| MonomialPrime {
                vars: self.vars.clone(),
                support,
            })
            .collect()
    }

    pub fn display(&self) -> IdealDisplay<'_> {
        IdealDisplay(self)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self.display(), self.vars)
    }
}

pub struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = self.0;
        if ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&ideal.vars))?;
        }
        f.write_str(")")
    }
}

/// Keeps only generators not divisible by another, deduplicated, in
/// decreasing lexicographic order of exponent vectors.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    // decreasing lexicographic order: x^2 before x*y before y
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A monomial prime ideal, generated by a subset of the variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    vars: VariableSet,
    support: VarSubset,
}

impl MonomialPrime {
    pub fn new(vars: VariableSet, support: VarSubset) -> Result<Self> {
        if !support.is_subset(vars.full()) {
            return Err(Error::InvalidIndex {
                index: support.iter().last().unwrap_or(0),
                len: vars.len(),
            });
        }
        Ok(Self { vars, support })
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn support(&self) -> VarSubset {
        self.support
    }

    /// Krull dimension of `S/P`.
    pub fn dim(&self) -> usize {
        self.vars.len() - self.support.len()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(
            self.vars.clone(),
            self.support.iter().map(VarSubset::singleton),
        )
    }

    /// The prime `P'` of the smaller ring with `P = P' S`, if `x_index` is not in `P`.
    pub fn localize(&self, index: usize) -> Result<Option<MonomialPrime>> {
        let vars = self.vars.without(index)?;
        if self.support.contains(index) {
            return Ok(None);
        }
        Ok(Some(MonomialPrime {
            vars,
            support: self.support.project_out(index),
        }))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal().display())
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ideal().display())
    }
}

/// Inclusion-minimal vertex sets meeting every edge, sorted.
///
/// An empty edge admits no transversal. No edges gives `{∅}`.
pub fn minimal_transversals(edges: &[VarSubset]) -> Vec<VarSubset> {
    let mut current = vec![VarSubset::EMPTY];
    for &edge in edges {
        let mut next = Vec::new();
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.insert(v)));
            }
        }
        current = minimal_sets(next);
    }
    current
}

/// Removes sets that strictly contain another, deduplicated and sorted.
pub(crate) fn minimal_sets(mut sets: Vec<VarSubset>) -> Vec<VarSubset> {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VarSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Removes sets strictly contained in another, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VarSubset>) -> Vec<VarSubset> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.bits()));
    sets.dedup();
    let mut kept: Vec<VarSubset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyzw() -> VariableSet {
        VariableSet::new(["x", "y", "z", "w"]).unwrap()
    }

    fn ideal(vars: &VariableSet, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vars.clone(), gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        // {x^2, x, xy} -> (x)
        assert_eq!(ideal(&v, &[&[2, 0], &[1, 0], &[1, 1]]), ideal(&v, &[&[1, 0]]));
        // {xy, xz} stays
        let v3 = VariableSet::new(["x", "y", "z"]).unwrap();
        assert_eq!(ideal(&v3, &[&[1, 1, 0], &[1, 0, 1]]).generators().len(), 2);
        assert!(ideal(&v, &[]).is_zero());
        // 1 among generators gives the unit ideal
        assert!(ideal(&v, &[&[3, 1], &[0, 0]]).is_unit());
    }

    #[test]
    fn membership() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let xy = ideal(&v, &[&[1, 1]]);
        assert!(!xy.contains(&Monomial::new(vec![1, 0])).unwrap());
        assert!(xy.contains(&Monomial::new(vec![2, 1])).unwrap());
        assert!(MonomialIdeal::unit(v.clone()).contains(&Monomial::one(2)).unwrap());
        assert!(!MonomialIdeal::zero(v.clone()).contains(&Monomial::new(vec![5, 5])).unwrap());
        assert!(xy.contains(&Monomial::one(3)).is_err());
    }

    #[test]
    fn colon_examples() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let x = Monomial::new(vec![1, 0]);
        assert_eq!(ideal(&v, &[&[1, 1]]).colon(&x).unwrap(), ideal(&v, &[&[0, 1]]));
        assert_eq!(
            ideal(&v, &[&[2, 0], &[1, 1]]).colon(&x).unwrap(),
            ideal(&v, &[&[1, 0], &[0, 1]])
        );
        let i = ideal(&v, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);

        // (xy, xz, xw) : x = (y, z, w)
        let w = xyzw();
        let i = ideal(&w, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(
            i.colon(&Monomial::new(vec![1, 0, 0, 0])).unwrap(),
            ideal(&w, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn as_prime_examples() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        let p = ideal(&v, &[&[1, 0], &[0, 1]]).as_prime().unwrap();
        assert_eq!(p.support(), VarSubset::from_indices([0, 1]));
        assert_eq!(p.dim(), 0);
        assert!(ideal(&v, &[&[1, 1]]).as_prime().is_none());
        let z = MonomialIdeal::zero(v.clone()).as_prime().unwrap();
        assert!(z.support().is_empty());
        assert!(MonomialIdeal::unit(v).as_prime().is_none());
    }

    #[test]
    fn minimal_primes_corner_cases() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        assert!(MonomialIdeal::unit(v.clone()).minimal_primes().is_err());
        assert!(MonomialIdeal::zero(v.clone()).minimal_primes().is_err());
        assert_eq!(MonomialIdeal::zero(v.clone()).minimal_primes_total().len(), 1);
    }

    #[test]
    fn localize_examples() {
        // (xyz), z -> 1 gives (xy)
        let v3 = VariableSet::new(["x", "y", "z"]).unwrap();
        let t = VariableSet::new(["x", "y"]).unwrap();
        assert_eq!(ideal(&v3, &[&[1, 1, 1]]).localize(2).unwrap(), ideal(&t, &[&[1, 1]]));
        // (xy, xz, xw), w -> 1 gives (x)
        let t3 = VariableSet::new(["x", "y", "z"]).unwrap();
        let i = ideal(&xyzw(), &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(i.localize_var("w").unwrap(), ideal(&t3, &[&[1, 0, 0]]));
        // (x^2 y, yz), z -> 1 gives (y)
        let i = ideal(&v3, &[&[2, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.localize(2).unwrap(), ideal(&t, &[&[0, 1]]));
        assert!(i.localize(3).is_err());
        assert!(i.localize_var("q").is_err());
    }

    #[test]
    fn display() {
        let v = VariableSet::new(["x", "y"]).unwrap();
        assert_eq!(ideal(&v, &[&[2, 0], &[1, 1]]).display().to_string(), "(x^2, x*y)");
        assert_eq!(MonomialIdeal::zero(v.clone()).display().to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(v).display().to_string(), "(1)");
    }
}
