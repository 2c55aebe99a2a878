//! Canonical bases of level-2 irreducible modules of quantized `sl_infinity`
//! computed from two-row symbols, with the constructible characters and
//! families of Hecke algebras of types `B` and `D` that they determine.
//!
//! Everything is exact. Laurent polynomials and Fock vectors are generic
//! over a [`Coefficient`] ring; the aliases below fix the usual choices.

pub mod canonical_basis;
pub mod combinatorics;
pub mod cyclotomic;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod laurent;
pub mod quantum_action;
pub mod scalar;
pub mod verify;

pub use canonical_basis::{
    basis_matrix, c_set, canonical_vector, canonical_vector_of, psi_pairs, BasisMatrix, PairSet,
};
pub use combinatorics::{Bipartition, ContentMultiset, DPartition, Partition, Row, Symbol, Weight};
pub use error::{Error, Result};
pub use fock::FockVector;
pub use hecke::{
    admissible_involutions, constructible_b, constructible_d, families, involution_from_symbol,
    symbol_from_involution, z_data, AdmissibleInvolution, CharacterCombination, CharacterLabel,
    DTag, Family, WeylType, ZData,
};
pub use laurent::LaurentPoly;
pub use quantum_action::{monomial_oracle, MonomialWord, Operator, OperatorKind};
pub use scalar::Coefficient;

pub use num_bigint::BigInt;

pub type Rational = num_rational::Ratio<i64>;
pub type Laurent = LaurentPoly<i64>;
pub type BigLaurent = LaurentPoly<BigInt>;
pub type Fock = FockVector<i64>;
pub type BigFock = FockVector<BigInt>;
pub type Matrix = BasisMatrix<i64>;
pub type Constructible = CharacterCombination<Rational>;
