//! The tip-valued binary tree and its generic combinators.
//!
//! All combinators recurse structurally. Trees built from an input of length
//! `n` have depth at most `n`, and inputs here stay well under a hundred
//! elements, so native recursion is used throughout.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A binary tree whose values live only at the tips.
///
/// `Node(l, r)` built by [`ch`](crate::combinatorics::ch) keeps every
/// combination that selects the head element in `l` and every combination
/// that skips it in `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "lowercase")
)]
pub enum BinomialTree<A> {
    Tip(A),
    Node(Box<BinomialTree<A>>, Box<BinomialTree<A>>),
}

/// One step on a root-to-subtree path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

pub(crate) fn fmt_path(f: &mut fmt::Formatter<'_>, path: &[Turn]) -> fmt::Result {
    if path.is_empty() {
        return write!(f, "root");
    }
    for turn in path {
        f.write_str(match turn {
            Turn::Left => "L",
            Turn::Right => "R",
        })?;
    }
    Ok(())
}

impl<A> BinomialTree<A> {
    pub fn tip(value: A) -> Self {
        BinomialTree::Tip(value)
    }

    pub fn node(left: Self, right: Self) -> Self {
        BinomialTree::Node(Box::new(left), Box::new(right))
    }

    pub fn is_tip(&self) -> bool {
        matches!(self, BinomialTree::Tip(_))
    }

    /// Applies `f` to every tip, left to right, keeping the shape.
    pub fn map<B, F>(&self, mut f: F) -> BinomialTree<B>
    where
        F: FnMut(&A) -> B,
    {
        fn go<A, B, F: FnMut(&A) -> B>(t: &BinomialTree<A>, f: &mut F) -> BinomialTree<B> {
            match t {
                BinomialTree::Tip(x) => BinomialTree::Tip(f(x)),
                BinomialTree::Node(l, r) => {
                    let l = go(l, f);
                    BinomialTree::node(l, go(r, f))
                }
            }
        }
        go(self, &mut f)
    }

    /// Consuming variant of [`map`](Self::map).
    pub fn into_map<B, F>(self, mut f: F) -> BinomialTree<B>
    where
        F: FnMut(A) -> B,
    {
        fn go<A, B, F: FnMut(A) -> B>(t: BinomialTree<A>, f: &mut F) -> BinomialTree<B> {
            match t {
                BinomialTree::Tip(x) => BinomialTree::Tip(f(x)),
                BinomialTree::Node(l, r) => {
                    let l = go(*l, f);
                    BinomialTree::node(l, go(*r, f))
                }
            }
        }
        go(self, &mut f)
    }

    /// Like [`into_map`](Self::into_map), stopping at the first failing tip.
    pub fn try_into_map<B, E, F>(self, mut f: F) -> core::result::Result<BinomialTree<B>, E>
    where
        F: FnMut(A) -> core::result::Result<B, E>,
    {
        fn go<A, B, E, F>(t: BinomialTree<A>, f: &mut F) -> core::result::Result<BinomialTree<B>, E>
        where
            F: FnMut(A) -> core::result::Result<B, E>,
        {
            Ok(match t {
                BinomialTree::Tip(x) => BinomialTree::Tip(f(x)?),
                BinomialTree::Node(l, r) => {
                    let l = go(*l, f)?;
                    BinomialTree::node(l, go(*r, f)?)
                }
            })
        }
        go(self, &mut f)
    }

    /// Combines two trees of identical shape tip by tip.
    ///
    /// Fails with [`Error::ShapeMismatch`] carrying the path to the leftmost
    /// position where one tree has a tip and the other a node.
    pub fn zip_with<B, C, F>(&self, other: &BinomialTree<B>, mut f: F) -> Result<BinomialTree<C>>
    where
        F: FnMut(&A, &B) -> C,
    {
        fn go<A, B, C, F: FnMut(&A, &B) -> C>(
            t: &BinomialTree<A>,
            u: &BinomialTree<B>,
            f: &mut F,
            path: &mut Vec<Turn>,
        ) -> Result<BinomialTree<C>> {
            match (t, u) {
                (BinomialTree::Tip(x), BinomialTree::Tip(y)) => Ok(BinomialTree::Tip(f(x, y))),
                (BinomialTree::Node(tl, tr), BinomialTree::Node(ul, ur)) => {
                    path.push(Turn::Left);
                    let l = go(tl, ul, f, path)?;
                    path.pop();
                    path.push(Turn::Right);
                    let r = go(tr, ur, f, path)?;
                    path.pop();
                    Ok(BinomialTree::node(l, r))
                }
                _ => Err(Error::ShapeMismatch { path: path.clone() }),
            }
        }
        go(self, other, &mut f, &mut Vec::new())
    }

    /// Borrows the value of a tip.
    pub fn as_tip(&self) -> Result<&A> {
        match self {
            BinomialTree::Tip(x) => Ok(x),
            BinomialTree::Node(..) => Err(Error::NotATip),
        }
    }

    /// Removes the tip constructor.
    pub fn un_tip(self) -> Result<A> {
        match self {
            BinomialTree::Tip(x) => Ok(x),
            BinomialTree::Node(..) => Err(Error::NotATip),
        }
    }

    /// Tip values in left-to-right order.
    pub fn tips(&self) -> Vec<&A> {
        fn go<'a, A>(t: &'a BinomialTree<A>, out: &mut Vec<&'a A>) {
            match t {
                BinomialTree::Tip(x) => out.push(x),
                BinomialTree::Node(l, r) => {
                    go(l, out);
                    go(r, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn tip_count(&self) -> usize {
        match self {
            BinomialTree::Tip(_) => 1,
            BinomialTree::Node(l, r) => l.tip_count() + r.tip_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            BinomialTree::Tip(_) => 0,
            BinomialTree::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// True when both trees have the same arrangement of nodes and tips.
    pub fn same_shape<B>(&self, other: &BinomialTree<B>) -> bool {
        match (self, other) {
            (BinomialTree::Tip(_), BinomialTree::Tip(_)) => true,
            (BinomialTree::Node(a, b), BinomialTree::Node(c, d)) => {
                a.same_shape(c) && b.same_shape(d)
            }
            _ => false,
        }
    }
}

impl<A: Clone> BinomialTree<A> {
    /// Owned copy of [`tips`](Self::tips).
    pub fn tip_values(&self) -> Vec<A> {
        self.tips().into_iter().cloned().collect()
    }
}

/// Takes the sole element of a one-element list.
pub fn extract_singleton<A>(xs: Vec<A>) -> Result<A> {
    let len = xs.len();
    let mut it = xs.into_iter();
    match (it.next(), it.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(Error::NotSingleton { len }),
    }
}

pub fn snoc<A>(mut ys: Vec<A>, z: A) -> Vec<A> {
    ys.push(z);
    ys
}

/// Applies `f` to `x` exactly `k` times.
pub fn iter_compose<A>(k: usize, mut f: impl FnMut(A) -> A, mut x: A) -> A {
    for _ in 0..k {
        x = f(x);
    }
    x
}

/// Fallible [`iter_compose`]; stops at the first error.
pub fn try_iter_compose<A, E>(
    k: usize,
    mut f: impl FnMut(A) -> core::result::Result<A, E>,
    mut x: A,
) -> core::result::Result<A, E> {
    for _ in 0..k {
        x = f(x)?;
    }
    Ok(x)
}
