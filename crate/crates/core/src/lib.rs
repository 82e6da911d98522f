//! Immediate-sublist recurrences, evaluated top-down and bottom-up.
//!
//! A function `h` on non-empty lists is an immediate-sublist recurrence when
//! `h [x] = f x` and, for longer inputs, `h xs = g (map h (subs xs))`, where
//! `subs xs` lists every way of deleting one element. Evaluated directly the
//! recursion solves the same sublists many times over. The bottom-up
//! evaluator instead keeps one level of the sublist lattice in a
//! [`BinomialTree`] and moves to the next level with [`level::up`], a
//! regrouping that hands the combiner exactly the sublist solutions it needs.
//!
//! ```
//! use sublists_core::instances::trace;
//! use sublists_core::solver::{bu, td};
//!
//! let xs: Vec<char> = "abc".chars().collect();
//! assert_eq!(td(2, &trace(), &xs).unwrap(), "((ab)(ac)(bc))");
//! assert_eq!(bu(2, &trace(), &xs).unwrap(), "((ab)(ac)(bc))");
//! ```
#![no_std]

extern crate alloc;

pub mod combinatorics;
pub mod error;
pub mod instances;
pub mod level;
pub mod solver;
pub mod tree;

pub use combinatorics::ShapeIndex;
pub use error::{Error, Result, UpFailure};
pub use level::{up, Level};
pub use solver::{Algorithm, Recurrence, RunStats, SublistProblem};
pub use tree::{BinomialTree, Turn};
