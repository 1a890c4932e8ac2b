//! Simplicial complexes, Stanley–Reisner ideals and links.
//!
//! Vertices are the variables of a [`VariableSet`]; removing vertices follows
//! the same order-preserving projection as localization, so the ring of a
//! link and the ring of a localized ideal coincide.

use crate::error::{Error, Result};
use crate::ideal::{maximal_sets, minimal_transversals, MonomialIdeal};
use crate::vars::{VarSubset, VariableSet};

/// A simplicial complex stored by its facets.
///
/// No facets is the void complex; the single facet `∅` is the empty complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VariableSet,
    facets: Vec<VarSubset>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces; non-maximal ones are dropped.
    pub fn new(vertices: VariableSet, faces: Vec<VarSubset>) -> Self {
        let full = vertices.full();
        let faces = faces.into_iter().map(|f| f.intersection(full)).collect();
        Self {
            vertices,
            facets: maximal_sets(faces),
        }
    }

    pub fn simplex(vertices: VariableSet) -> Self {
        let full = vertices.full();
        Self {
            vertices,
            facets: vec![full],
        }
    }

    pub fn vertices(&self) -> &VariableSet {
        &self.vertices
    }

    pub fn facets(&self) -> &[VarSubset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, f: VarSubset) -> bool {
        self.facets.iter().any(|&facet| f.is_subset(facet))
    }

    /// Maximum face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// `I_Δ`, generated by the minimal non-faces.
    ///
    /// A set is a non-face iff it meets the complement of every facet, so the
    /// minimal non-faces are the minimal transversals of the facet complements.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::domain(
                "the void complex has no Stanley-Reisner ring",
            ));
        }
        let n = self.vertices.len();
        let complements: Vec<VarSubset> = self.facets.iter().map(|f| f.complement(n)).collect();
        Ok(MonomialIdeal::from_supports(
            self.vertices.clone(),
            minimal_transversals(&complements),
        ))
    }

    /// The complex `Δ` with `I_Δ = ideal`: its facets are the complements of
    /// the minimal primes.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::domain("ideal is not squarefree"));
        }
        if ideal.is_unit() {
            return Err(Error::domain(
                "the unit ideal corresponds to the void complex",
            ));
        }
        let n = ideal.num_vars();
        let facets = ideal
            .minimal_primes_total()
            .iter()
            .map(|p| p.support().complement(n))
            .collect();
        Ok(Self::new(ideal.vars().clone(), facets))
    }

    /// `link_Δ(F)`: faces `G` disjoint from `F` with `G ∪ F ∈ Δ`, on the
    /// vertex set with `F` removed.
    pub fn link(&self, face: VarSubset) -> Result<SimplicialComplex> {
        if !face.is_subset(self.vertices.full()) || !self.is_face(face) {
            return Err(Error::domain(format!(
                "{{{}}} is not a face",
                face.names(&self.vertices).join(", ")
            )));
        }
        let mut vertices = self.vertices.clone();
        let mut facets: Vec<VarSubset> = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect();
        // remove from the highest index down so lower indices stay put
        let mut removed: Vec<usize> = face.iter().collect();
        removed.reverse();
        for v in removed {
            vertices = vertices.without(v)?;
            for f in &mut facets {
                *f = f.project_out(v);
            }
        }
        Ok(Self::new(vertices, facets))
    }

    /// Link of a single vertex, by index.
    pub fn vertex_link(&self, v: usize) -> Result<SimplicialComplex> {
        self.vertices.check_index(v)?;
        self.link(VarSubset::singleton(v))
    }

    /// `link(link(Δ, v_1), v_2) ...` taken one vertex at a time, last vertex
    /// first; names are tracked through each projection.
    pub fn iterated_link(&self, face: VarSubset) -> Result<SimplicialComplex> {
        let names: Vec<String> = face.names(&self.vertices).into_iter().map(String::from).collect();
        let mut current = self.clone();
        for name in names.iter().rev() {
            let v = current.vertices.index_of(name)?;
            current = current.vertex_link(v)?;
        }
        Ok(current)
    }

    /// Checks `φ(I_Δ) = I_{link_Δ({v})}` with `φ` sending `x_v` to 1.
    pub fn check_link_lemma(&self, v: usize) -> Result<bool> {
        self.vertices.check_index(v)?;
        if !self.is_face(VarSubset::singleton(v)) {
            return Err(Error::domain(format!(
                "vertex {} is not a face",
                self.vertices.name(v).unwrap_or("?")
            )));
        }
        let localized = self.stanley_reisner_ideal()?.localize(v)?;
        let link_ideal = self.vertex_link(v)?.stanley_reisner_ideal()?;
        Ok(localized == link_ideal)
    }
}
