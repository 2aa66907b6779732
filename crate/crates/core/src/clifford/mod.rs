//! Ordinary character theory of permutation groups with exact cyclotomic
//! values, and constructive checks of Clifford-theoretic statements.

pub mod character;
pub mod constructions;
pub mod cyclotomic;
pub mod group;
pub mod lemmas;
pub mod perm;
mod table;
pub mod wreath;

pub use character::{
    character_table, extension_exists, induce, restrict, restrict_values, stabilizer_of_character, Character,
    Restriction, SubgroupEmbedding,
};
pub use cyclotomic::Cyc;
pub use group::{ConjugacyClass, PermGroup, DEFAULT_GROUP_CAP};
pub use lemmas::{verify_abelian_lemma, verify_lemma_equivalence, AbelianReport, EquivalenceReport};
pub use perm::Perm;
pub use wreath::{build_wreath, verify_wreath_theorem, wreath_extension_character, WreathReport};
