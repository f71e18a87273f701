//! Braid groups: Garside and Birman–Ko–Lee normal forms, super summit sets,
//! Nielsen–Thurston classification, tubular decompositions and centralizer
//! generating sets.

pub mod braid;
pub mod cable;
pub mod centralizer;
pub mod classify;
pub mod config;
pub mod curves;
pub mod error;
pub mod garside;
pub mod perm;
pub mod sss;
pub mod tubular;

pub use braid::{delta_word, gamma_word, small_delta_word, BraidWord};
pub use cable::{cable, CablePattern};
pub use config::Limits;
pub use error::{BraidError, Result};
pub use garside::{bkl_normal_form, commutes, nf_equal, normal_form, BklNormalForm, GarsideNormalForm};
pub use perm::Permutation;
