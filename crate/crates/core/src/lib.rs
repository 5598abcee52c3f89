#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod coeffs;
pub mod error;
pub mod harness;
pub mod minda;
pub mod series;
