//! M-respecting rotation–extension.
//!
//! A path is M-respecting when every edge of the matching `M` is either on the
//! path or disjoint from it. Rotations never break a matching edge, so the
//! Hamilton cycles found here contain all of `M`.

mod booster;
mod exact;
mod expander;
mod force;
mod kernel;
mod path;
mod search;

pub use booster::{find_booster, Booster, BoosterOutcome, BoosterReport};
pub use exact::{longest_m_respecting_path, EXACT_LONGEST_LIMIT};
pub use expander::{
    free_neighbourhood_size, is_m_respecting_expander, is_m_respecting_expander_with, ExpanderReport, Verification,
    DEFAULT_EXPANDER_SAMPLES, EXHAUSTIVE_EXPANDER_LIMIT,
};
pub use force::{posa_force, posa_force_with, cycle_through_forest};
pub use path::{rotation_closure, rotation_endpoint_set, ClosureMode, PathState, RotationClosure};
pub use search::{hamilton_with_matching, FailureKind, SearchFailure, SearchOptions, DEFAULT_BUDGET};
