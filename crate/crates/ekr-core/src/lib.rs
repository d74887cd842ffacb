//! Exact engine for Erdős–Ko–Rado questions about independent sets in trees:
//! graph families, exact enumeration and counting, maximum intersecting
//! families by branch-and-bound, and the shifting/compression constructions
//! behind the theorems, each exposed as an independently testable operation.

pub mod count;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod search;

pub use error::{Error, Result};
pub use family::{enumerate_r_sets, star_family, SetFamily, DEFAULT_ENUM_CAP};
pub use graph::{claw_shape, ClawShape, Graph, VertexMap};
pub use search::{ekr_verdict, max_intersecting, max_nonstar_intersecting, EkrVerdict, SearchLimits, Strictness};
pub use set::VertexSet;

pub mod set;
