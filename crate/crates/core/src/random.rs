//! Random small instances for property sweeps.

use rand::Rng;

use crate::error::{Error, Result};
use crate::filtration::{FiltrationStep, PrimeFiltration};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::simplicial::SimplicialComplex;
use crate::vars::{VarSubset, VariableSet};

const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];

/// Shape of random monomial ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealShape {
    pub min_vars: usize,
    pub max_vars: usize,
    pub max_exponent: u32,
    pub max_generators: usize,
}

impl Default for IdealShape {
    fn default() -> Self {
        Self {
            min_vars: 1,
            max_vars: 4,
            max_exponent: 2,
            max_generators: 5,
        }
    }
}

/// `x y z w ...` for small `n`, otherwise `x1 ... xn`.
pub fn variables(n: usize) -> VariableSet {
    if n <= NAMES.len() {
        VariableSet::new(NAMES[..n].iter().copied()).expect("fixed names are valid")
    } else {
        VariableSet::indexed(n).expect("indexed names are valid")
    }
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, max_exponent: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.random_range(0..=max_exponent)).collect())
}

/// A proper, nonzero monomial ideal of the given shape.
pub fn random_ideal<R: Rng + ?Sized>(rng: &mut R, shape: &IdealShape) -> MonomialIdeal {
    let n = rng.random_range(shape.min_vars.max(1)..=shape.max_vars.max(shape.min_vars.max(1)));
    let count = rng.random_range(1..=shape.max_generators.max(1));
    let max_exp = shape.max_exponent.max(1);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| loop {
            let m = random_monomial(rng, n, max_exp);
            if !m.is_one() {
                break m;
            }
        })
        .collect();
    MonomialIdeal::new(variables(n), gens).expect("generators match the ambient")
}

/// A non-void complex on `min_vertices..=max_vertices` vertices.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, min_vertices: usize, max_vertices: usize) -> SimplicialComplex {
    let n = rng.random_range(min_vertices.max(1)..=max_vertices.max(min_vertices.max(1)));
    let vars = VariableSet::indexed(n).expect("indexed names are valid");
    let count = rng.random_range(1..=n + 1);
    let full = VarSubset::full(n).bits();
    let facets = (0..count)
        .map(|_| VarSubset::from_bits(rng.random_range(0..=full)))
        .collect();
    SimplicialComplex::new(vars, facets)
}

/// A valid prime filtration built by adjoining, at each step, a random
/// offset inside the box `a <= lcm` whose colon ideal is prime.
pub fn random_filtration<R: Rng + ?Sized>(rng: &mut R, ideal: &MonomialIdeal) -> Result<PrimeFiltration> {
    if ideal.is_unit() {
        return PrimeFiltration::new(ideal.clone(), Vec::new());
    }
    let g = ideal.lcm_exponents();
    let n = g.num_vars();
    let mut offsets = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        offsets.push(Monomial::new(e.clone()));
        let mut j = n;
        let done = loop {
            if j == 0 {
                break true;
            }
            j -= 1;
            if e[j] < g.exponents()[j] {
                e[j] += 1;
                break false;
            }
            e[j] = 0;
        };
        if done {
            break;
        }
    }
    let mut current = ideal.clone();
    let mut steps = Vec::new();
    while !current.is_unit() {
        let moves: Vec<(&Monomial, VarSubset)> = offsets
            .iter()
            .filter(|a| !current.contains_unchecked(a))
            .filter_map(|a| {
                let colon = current.colon(a).ok()?;
                colon.as_prime().map(|p| (a, p.support()))
            })
            .collect();
        if moves.is_empty() {
            return Err(Error::domain("no offset in the lcm box has a prime colon ideal"));
        }
        let (a, prime) = moves[rng.random_range(0..moves.len())];
        steps.push(FiltrationStep::new(a.clone(), prime));
        current = current.with_generator(a)?;
    }
    PrimeFiltration::new(ideal.clone(), steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_ideals_are_proper_and_nonzero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let i = random_ideal(&mut rng, &IdealShape::default());
            assert!(!i.is_unit() && !i.is_zero());
            assert!((1..=4).contains(&i.num_vars()));
            assert!(i.generators().len() <= 5);
        }
    }

    #[test]
    fn random_filtrations_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let i = random_ideal(&mut rng, &IdealShape::default());
            let f = random_filtration(&mut rng, &i).unwrap();
            assert!(f.verify().is_valid(), "{:?}", f);
        }
    }

    #[test]
    fn random_complexes_are_not_void() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            assert!(!random_complex(&mut rng, 1, 6).is_void());
        }
    }
}
