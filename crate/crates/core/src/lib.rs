//! Exact arithmetic for monomial ideals: Stanley depth through interval
//! partitions of the characteristic poset, prime filtrations and fdepth,
//! Stanley–Reisner rings and links, and the localization map that sends one
//! variable to 1, together with the transformations it induces on Stanley
//! decompositions and prime filtrations.
//!
//! Everything is combinatorial and characteristic-free; the coefficient field
//! never appears.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod filtration;
pub mod ideal;
pub mod json;
pub mod monomial;
pub mod poset;
pub mod random;
pub mod simplicial;
pub mod text;
pub mod vars;

pub use decomposition::{StanleyDecomposition, StanleySpace, Verdict};
pub use error::{Error, Result};
pub use filtration::{fdepth, FdepthResult, FiltrationStep, FiltrationVerdict, PrimeFiltration, StepFailure};
pub use ideal::{MonomialIdeal, MonomialPrime};
pub use monomial::Monomial;
pub use poset::{
    partition_to_decomposition, sdepth, CharacteristicPoset, Interval, IntervalPartition, SdepthResult,
    SearchLimits,
};
pub use simplicial::SimplicialComplex;
pub use vars::{VarSubset, VariableSet};
