//! Group association schemes and their Terwilliger algebras over exact
//! arithmetic.
//!
//! The crate builds finite groups from compact spec strings or ingested
//! Cayley tables, forms their conjugacy-class association schemes, computes
//! Terwilliger algebras by exact rational closure, decides almost
//! commutativity by three equivalent criteria, and constructs the
//! non-primary Wedderburn ideal generators in `Q(zeta_p)`.

pub mod catalog;
pub mod group;
pub mod linalg;
pub mod scheme;
pub mod terwilliger;
pub mod wedderburn;

pub use group::{build_group, FamilyLabel, FiniteGroup};
pub use scheme::AssociationScheme;
pub use terwilliger::TerwilligerReport;
