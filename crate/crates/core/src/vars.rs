//! Ordered variable sets and subsets of their indices.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of variables; subsets are stored as 64-bit masks.
pub const MAX_VARS: usize = 64;

/// An ordered list of distinct variable names, the ambient ring `K[x_1, ..., x_n]`.
///
/// Cloning is cheap: the name list is shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Arc<[String]>,
}

impl VariableSet {
    /// Builds a variable set from names. Names must be distinct, non-empty identifiers.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: names.len(),
            });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.names.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index,
                len: self.len(),
            })
        }
    }

    /// The variable set with `index` removed, remaining order preserved.
    pub fn without(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, n)| n.clone())
            .collect();
        Ok(Self {
            names: names.into(),
        })
    }

    /// Errors unless `other` names the same variables in the same order.
    pub fn ensure_same(&self, other: &VariableSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VariableSetMismatch {
                left: self.names.join(" "),
                right: other.names.join(" "),
            })
        }
    }

    /// The subset of all variables.
    pub fn full(&self) -> VarSubset {
        VarSubset::full(self.len())
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// A subset of variable indices `{0, ..., n-1}`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSubset(u64);

impl VarSubset {
    pub const EMPTY: VarSubset = VarSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VarSubset(u64::MAX)
        } else {
            VarSubset((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        VarSubset(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VarSubset(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSubset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSubset) -> Self {
        VarSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSubset) -> Self {
        VarSubset(self.0 & other.0)
    }

    pub fn difference(self, other: VarSubset) -> Self {
        VarSubset(self.0 & !other.0)
    }

    pub fn insert(self, index: usize) -> Self {
        VarSubset(self.0 | (1u64 << index))
    }

    pub fn remove(self, index: usize) -> Self {
        VarSubset(self.0 & !(1u64 << index))
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        VarSubset(!self.0 & VarSubset::full(n).0)
    }

    /// Drops `index` and shifts higher indices down by one, matching
    /// [`VariableSet::without`].
    pub fn project_out(self, index: usize) -> Self {
        let low = self.0 & ((1u64 << index) - 1);
        let high = if index >= 63 { 0 } else { self.0 >> (index + 1) };
        VarSubset(low | (high << index))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Space-separated variable names.
    pub fn names(self, vars: &VariableSet) -> Vec<&str> {
        self.iter().filter_map(|i| vars.name(i)).collect()
    }
}

impl fmt::Debug for VarSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert_eq!(
            VariableSet::new(["x", "y", "x"]),
            Err(Error::DuplicateVariable("x".into()))
        );
        assert!(matches!(
            VariableSet::new(["x", ""]),
            Err(Error::InvalidVariableName(_))
        ));
        assert!(matches!(
            VariableSet::new(["2x"]),
            Err(Error::InvalidVariableName(_))
        ));
    }

    #[test]
    fn projection_preserves_order() {
        let v = VariableSet::new(["x", "y", "z", "w"]).unwrap();
        let t = v.without(1).unwrap();
        assert_eq!(t.names(), ["x", "z", "w"]);
        assert!(v.without(4).is_err());
    }

    #[test]
    fn project_out_shifts_higher_bits() {
        let s = VarSubset::from_indices([0, 2, 3]);
        assert_eq!(s.project_out(1), VarSubset::from_indices([0, 1, 2]));
        assert_eq!(s.project_out(2), VarSubset::from_indices([0, 2]));
        assert_eq!(s.project_out(0), VarSubset::from_indices([1, 2]));
        assert_eq!(VarSubset::full(64).project_out(63), VarSubset::full(63));
    }

    #[test]
    fn subset_algebra() {
        let a = VarSubset::from_indices([0, 1]);
        let b = VarSubset::from_indices([1, 2]);
        assert!(a.intersects(b));
        assert_eq!(a.difference(b), VarSubset::singleton(0));
        assert_eq!(a.complement(3), VarSubset::singleton(2));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(VarSubset::EMPTY.is_subset(a));
    }
}
