//! Exact homomorphism counting into bipartite targets, biclique dominance analysis,
//! distinguishing and selector graph search, and brute-force gadget verification.

pub mod biclique;
pub mod canon;
pub mod classify;
pub mod compare;
pub mod count;
pub mod distinguish;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gadget;
pub mod graph;
pub mod oracle;
pub mod real;
pub mod ser;
pub mod structure;

pub use canon::{canonical_form, iso_colour_preserving, is_isomorphic};
pub use count::{count_bis, count_col, count_fixcol, count_inj_fixcol, surjections};
pub use error::{Error, Result};
pub use graph::{AnyGraph, Biclique, Graph, TwoColouredGraph};
