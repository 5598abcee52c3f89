//! Monte-Carlo falsification of the bound and batch sweeps over parameter
//! grids.

mod falsify;
pub mod rng;
mod sweep;

pub use falsify::{
    falsify, falsify_partitioned, falsify_tuples, FalsifyConfig, FalsifyReport, SamplingMode,
    TupleSampler, Violation, MAX_STORED_VIOLATIONS, VIOLATION_TOL,
};
pub use sweep::{sweep, SweepRow, SweepSpec, SweepTable};
