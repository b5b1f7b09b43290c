#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod chars;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod fold;
pub mod group;
pub mod mckay;
pub mod report;

pub use error::{Error, Result};
