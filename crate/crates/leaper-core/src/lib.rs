//! Leaper graphs and grid embeddings: classification of (p, q)-leapers,
//! explicit path constructions, and the product/factor correspondence between
//! path pairs and grid embeddings, with an independent verification oracle.

mod bbox;
mod construct;
mod embed;
mod error;
mod leaper;
mod path;
mod vec;

pub use bbox::BoundingBox;
pub use construct::{
    derived_free_leaper, free_construction, halffree_construction, phi_embed, phi_map,
    Construction, PhiEmbedding,
};
pub use embed::{check_pair, factor, product, verify_embedding, GridEmbedding, VerificationReport};
pub use error::CoreError;
pub use leaper::{reduce, Leaper, LeaperClass};
pub use path::{difference_set, DiffSet, LeaperPath};
pub use vec::IntVec;
