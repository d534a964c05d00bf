//! Singular braid monoid toolkit.
//!
//! Braid words over σ_i^{±1}, τ_i^{±1}; exact equality in SB_n; the singular
//! pure braid group SP_n with its presentations and rewriting; free-group
//! representations of SB_n and the link invariants built from them.

pub mod error;
pub mod free;
pub mod invariants;
pub mod oracle;
pub mod purebraid;
pub mod relations;
pub mod represent;
pub mod sample;
pub mod singquandle;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use free::{FreeEndo, FreeWord};
pub use invariants::{
    abelianization, count_homs, group_of_braid, tietze_simplify, todd_coxeter, AbelianInvariants,
    CosetIndex, FiniteGroupModel, GroupPresentation,
};
pub use oracle::{
    artin_endo, braid_equal, desingularize, sb_equal, sg_identity_holds, to_tau_positive, Oracle,
    ZBnElement,
};
pub use purebraid::{
    camomile_check, center_identities, comb, conj_by_sigma, generator_union, pn_presentation,
    rs_rewrite, sp_generators, sp_presentation, sp_relations, PureGen, PureWord,
};
pub use relations::{sb_relations, BraidRelation};
pub use represent::{phi_letter, phi_word, rep_respects_relations, RepId, Representation};
pub use singquandle::{
    count_sq_colorings, enumerate_singquandles, fundamental_singquandle, sq_phi_word,
    FiniteSingquandle, SQPresentation, SQTerm,
};
pub use verify::{run_suite, InstanceResult, Suite};
pub use words::{parse_braid, BraidWord, Kind, Letter, Perm};
