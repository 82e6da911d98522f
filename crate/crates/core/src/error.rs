use alloc::vec::Vec;
use core::fmt;

use crate::tree::Turn;

/// Which clause of `up` rejected its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpFailure {
    /// `up` was handed a bare tip; every clause expects a node.
    BareTip,
    /// Second clause: the recursive call on the left subtree returned a node,
    /// so there is no tip list to append to.
    LeftNotCollapsed,
    /// Fourth clause: the lifted left subtree and the right subtree do not
    /// have the same shape.
    ZipShape { path: Vec<Turn> },
}

impl fmt::Display for UpFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpFailure::BareTip => write!(f, "no clause matches a bare tip"),
            UpFailure::LeftNotCollapsed => {
                write!(f, "clause 2: lifting the left subtree did not yield a tip")
            }
            UpFailure::ZipShape { path } => {
                write!(f, "clause 4: lifted left subtree and right subtree differ in shape at ")?;
                crate::tree::fmt_path(f, path)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two trees passed to `zip_with` diverge; `path` leads from the root to
    /// the first position (left-first order) where their shapes differ.
    ShapeMismatch { path: Vec<Turn> },
    NotATip,
    NotSingleton { len: usize },
    /// `k` elements cannot be chosen from `n`.
    OutOfRange { k: usize, n: usize },
    Overflow,
    /// A tree does not have the `(k, n)` shape claimed for it.
    InvalidShape { k: usize, n: usize },
    MalformedLevel(UpFailure),
    LengthMismatch { expected: usize, actual: usize },
    EmptyInput,
    /// A built-in problem was given symbols where it reads numbers, or the
    /// other way round.
    WrongInputKind,
    /// A golden case names no known problem or combinatorial function.
    UnknownFixture,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { path } => {
                write!(f, "tree shapes differ at ")?;
                crate::tree::fmt_path(f, path)
            }
            Error::NotATip => write!(f, "expected a tip, found a node"),
            Error::NotSingleton { len } => {
                write!(f, "expected a singleton list, found length {len}")
            }
            Error::OutOfRange { k, n } => {
                write!(f, "cannot choose {k} elements from a list of length {n}")
            }
            Error::Overflow => write!(f, "arithmetic overflow"),
            Error::InvalidShape { k, n } => write!(f, "tree does not have shape ({k}, {n})"),
            Error::MalformedLevel(why) => write!(f, "malformed level: {why}"),
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected input of length {expected}, got {actual}")
            }
            Error::EmptyInput => write!(f, "input list is empty"),
            Error::WrongInputKind => write!(f, "input kind does not match the problem"),
            Error::UnknownFixture => write!(f, "unknown golden fixture"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
