//! Sublist and combination generators, and runtime checks for the `(k, n)`
//! shape indices of binomial trees.
//!
//! Generation order follows the append-based definitions exactly: every
//! combination that keeps the head comes before every combination that
//! drops it. Golden outputs depend on this order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tree::BinomialTree;

/// The claimed shape of a binomial tree: `k` elements chosen from `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeIndex {
    pub k: usize,
    pub n: usize,
}

impl ShapeIndex {
    pub const fn new(k: usize, n: usize) -> Self {
        ShapeIndex { k, n }
    }
}

fn prepend<A: Clone>(x: &A, rest: &[A]) -> Vec<A> {
    let mut v = Vec::with_capacity(rest.len() + 1);
    v.push(x.clone());
    v.extend_from_slice(rest);
    v
}

/// All immediate sublists of `xs`: for `abcde` this is
/// `abcd, abce, abde, acde, bcde`.
pub fn subs<A: Clone>(xs: &[A]) -> Vec<Vec<A>> {
    match xs.split_first() {
        None => Vec::new(),
        Some((x, rest)) => {
            let mut out: Vec<Vec<A>> = subs(rest).iter().map(|s| prepend(x, s)).collect();
            out.push(rest.to_vec());
            out
        }
    }
}

/// All `k`-element selections of `xs`, order preserved inside each one.
pub fn choose<A: Clone>(k: usize, xs: &[A]) -> Result<Vec<Vec<A>>> {
    if k > xs.len() {
        return Err(Error::OutOfRange { k, n: xs.len() });
    }
    Ok(choose_unchecked(k, xs))
}

fn choose_unchecked<A: Clone>(k: usize, xs: &[A]) -> Vec<Vec<A>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k == xs.len() {
        return vec![xs.to_vec()];
    }
    // 0 < k < len, so the head exists
    let (x, rest) = xs.split_first().expect("non-empty");
    let mut out: Vec<Vec<A>> = choose_unchecked(k - 1, rest)
        .iter()
        .map(|s| prepend(x, s))
        .collect();
    out.extend(choose_unchecked(k, rest));
    out
}

/// Tree-shaped [`choose`]: the same tips, with each node recording whether
/// the head element was kept (left) or dropped (right).
pub fn ch<A: Clone>(k: usize, xs: &[A]) -> Result<BinomialTree<Vec<A>>> {
    if k > xs.len() {
        return Err(Error::OutOfRange { k, n: xs.len() });
    }
    Ok(ch_unchecked(k, xs))
}

fn ch_unchecked<A: Clone>(k: usize, xs: &[A]) -> BinomialTree<Vec<A>> {
    if k == 0 {
        return BinomialTree::Tip(Vec::new());
    }
    if k == xs.len() {
        return BinomialTree::Tip(xs.to_vec());
    }
    let (x, rest) = xs.split_first().expect("non-empty");
    let kept = ch_unchecked(k - 1, rest).into_map(|s| prepend(x, &s));
    BinomialTree::node(kept, ch_unchecked(k, rest))
}

/// Whether `t` can be built with indices `idx` by the three constructor
/// rules: a tip has shape `(0, n)` or `(m, m)` with `m > 0`; a node has shape
/// `(k+1, n+1)` when its children have `(k, n)` and `(k+1, n)`.
pub fn check_shape<A>(t: &BinomialTree<A>, idx: ShapeIndex) -> bool {
    let ShapeIndex { k, n } = idx;
    match t {
        BinomialTree::Tip(_) => k == 0 || k == n,
        BinomialTree::Node(l, r) => {
            k >= 1
                && n >= 1
                && check_shape(l, ShapeIndex::new(k - 1, n - 1))
                && check_shape(r, ShapeIndex::new(k, n - 1))
        }
    }
}

pub fn bounded_holds(idx: ShapeIndex) -> bool {
    idx.k <= idx.n
}

/// Tip counts of `t`, its right child, that child's right child, and so on
/// down to the final tip.
pub fn spine_sizes<A>(t: &BinomialTree<A>) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut cur = t;
    loop {
        sizes.push(cur.tip_count());
        match cur {
            BinomialTree::Tip(_) => return sizes,
            BinomialTree::Node(_, r) => cur = r,
        }
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Err(Error::OutOfRange {
            k: k as usize,
            n: n as usize,
        });
    }
    let k = k.min(n - k);
    // C(n, i) grows with i up to n/2, so every partial product fits in u128
    // whenever the final value fits in u64.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}
