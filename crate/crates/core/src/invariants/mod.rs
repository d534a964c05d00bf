//! Finitely presented groups: groups of braid closures, Tietze moves,
//! abelianization, coset enumeration and homomorphism counts.

mod abelian;
mod braid_group;
mod coset;
mod finite;
mod presentation;
mod tietze;

pub use abelian::{abelianization, smith_diagonal, AbelianInvariants};
pub use braid_group::group_of_braid;
pub use coset::{todd_coxeter, CosetIndex};
pub use finite::{count_homs, FiniteGroupModel, HOM_BUDGET};
pub use presentation::GroupPresentation;
pub use tietze::tietze_simplify;
