//! Monomials as exponent vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::vars::{VarSubset, VariableSet};

/// A monomial `x^a`, stored as its exponent vector `a`.
///
/// The derived ordering is lexicographic on exponent vectors; it is the
/// canonical order used for ideal generators and poset points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_index` in `n` variables.
    pub fn var(n: usize, index: usize) -> Self {
        let mut e = vec![0; n];
        e[index] = 1;
        Monomial(e)
    }

    /// `prod_{j in s} x_j`.
    pub fn squarefree(n: usize, s: VarSubset) -> Self {
        Monomial((0..n).map(|j| u32::from(s.contains(j))).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> VarSubset {
        VarSubset::from_indices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.0.len() == other.0.len() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.0.len(),
                found: other.0.len(),
            })
        }
    }

    /// `self | other`, i.e. exponents componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a - a.min(b))
                .collect(),
        ))
    }

    /// Drops coordinate `index` (the projection `Z^n -> Z^{n-1}`).
    pub fn project_out(&self, index: usize) -> Result<Monomial> {
        if index >= self.0.len() {
            return Err(Error::InvalidIndex {
                index,
                len: self.0.len(),
            });
        }
        let mut e = self.0.clone();
        e.remove(index);
        Ok(Monomial(e))
    }

    /// Renders with the given variable names, e.g. `x^2*y` or `1`.
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, vars }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let name = self.vars.name(i).unwrap_or("?");
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        // over (x, y)
        assert!(m(&[0, 0]).divides(&m(&[2, 1])).unwrap());
        assert!(!m(&[1, 1]).divides(&m(&[1, 0])).unwrap());
        assert!(m(&[1, 0]).divides(&m(&[1, 1])).unwrap());
        assert_eq!(
            m(&[1, 0]).divides(&m(&[1, 0, 0])),
            Err(Error::AmbientMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 3])).unwrap(), m(&[1, 1]));
        assert_eq!(m(&[4, 2]).gcd(&Monomial::one(2)).unwrap(), Monomial::one(2));
        assert_eq!(m(&[2, 0]).lcm(&m(&[0, 1])).unwrap(), m(&[2, 1]));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            m(&[u32::MAX]).mul(&m(&[1])),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn display() {
        let v = VariableSet::new(["x", "y", "z"]).unwrap();
        assert_eq!(m(&[2, 1, 0]).display(&v).to_string(), "x^2*y");
        assert_eq!(Monomial::one(3).display(&v).to_string(), "1");
        assert_eq!(m(&[0, 0, 1]).display(&v).to_string(), "z");
    }
}
