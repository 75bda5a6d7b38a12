//! Drawing graphs with right-angle crossings: factorization of degree-bounded graphs,
//! a 2-bend layout for maximum degree 8, an exact drawing validator, generators for
//! dense drawable families and a small exhaustive search for straight-line drawings.

pub mod drawing;
pub mod factor;
pub mod generators;
pub mod geom;
pub mod graph;
pub mod layout;
pub mod oracle;
pub mod render;
pub mod validate;
