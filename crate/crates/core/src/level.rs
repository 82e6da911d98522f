//! Lifting one lattice level to the next.
//!
//! A level `k` for input `xs` is a binomial tree of shape `(k, n)` holding one
//! value per `k`-element sublist. [`up`] regroups the tips so that every tip
//! of the result is the list of level-`k` values a level-`k+1` entry needs,
//! in [`subs`](crate::combinatorics::subs) order:
//!
//! ```text
//! up (ch k xs) == map subs (ch (k+1) xs)      for 1 <= k < length xs
//! ```

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{check_shape, choose, subs, ShapeIndex};
use crate::error::{Error, Result, UpFailure};
use crate::tree::{snoc, BinomialTree};

fn malformed(why: UpFailure) -> Error {
    Error::MalformedLevel(why)
}

/// Lifts a level-`k` tree to level `k+1`.
///
/// Clauses are tried top to bottom; the first two shapes overlap with the
/// later ones and must win.
pub fn up<A: Clone>(t: &BinomialTree<A>) -> Result<BinomialTree<Vec<A>>> {
    use BinomialTree::{Node, Tip};

    let (left, right) = match t {
        Tip(_) => return Err(malformed(UpFailure::BareTip)),
        Node(l, r) => (&**l, &**r),
    };
    match (left, right) {
        (Tip(p), Tip(q)) => Ok(Tip(vec![p.clone(), q.clone()])),
        (t, Tip(q)) => match up(t)? {
            Tip(ys) => Ok(Tip(snoc(ys, q.clone()))),
            Node(..) => Err(malformed(UpFailure::LeftNotCollapsed)),
        },
        (Tip(p), u) => {
            let paired = u.map(|q| vec![p.clone(), q.clone()]);
            Ok(BinomialTree::node(paired, up(u)?))
        }
        (t, u) => {
            let lifted = up(t)?;
            let zipped = lifted
                .zip_with(u, |ys, z| snoc(ys.clone(), z.clone()))
                .map_err(|e| match e {
                    Error::ShapeMismatch { path } => malformed(UpFailure::ZipShape { path }),
                    other => other,
                })?;
            Ok(BinomialTree::node(zipped, up(u)?))
        }
    }
}

/// One bottom-up step: lift with [`up`], then combine every gathered list.
pub fn step<Y, G>(mut combine: G, t: &BinomialTree<Y>) -> Result<BinomialTree<Y>>
where
    Y: Clone,
    G: FnMut(&[Y]) -> Y,
{
    Ok(up(t)?.into_map(|ys| combine(&ys)))
}

/// List-level reference for what one lift must produce:
/// `map subs (choose (k+1) xs)`.
///
/// Only defined for `1 <= k < length xs`. No list function can meet this
/// for `k = 0`, since `choose 0` is `[[]]` whatever the input length.
pub fn upgrade_oracle<A: Clone>(k: usize, xs: &[A]) -> Result<Vec<Vec<Vec<A>>>> {
    if k == 0 || k >= xs.len() {
        return Err(Error::OutOfRange { k, n: xs.len() });
    }
    Ok(choose(k + 1, xs)?.iter().map(|c| subs(c)).collect())
}

/// A level tree together with the `(k, n)` index it has been checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level<Y> {
    tree: BinomialTree<Y>,
    index: ShapeIndex,
}

impl<Y> Level<Y> {
    pub fn new(tree: BinomialTree<Y>, index: ShapeIndex) -> Result<Self> {
        if index.k > index.n || !check_shape(&tree, index) {
            return Err(Error::InvalidShape {
                k: index.k,
                n: index.n,
            });
        }
        Ok(Level { tree, index })
    }

    pub fn tree(&self) -> &BinomialTree<Y> {
        &self.tree
    }

    pub fn index(&self) -> ShapeIndex {
        self.index
    }

    pub fn into_tree(self) -> BinomialTree<Y> {
        self.tree
    }

    /// The final level `(n, n)` is a single tip.
    pub fn is_complete(&self) -> bool {
        self.index.k == self.index.n
    }
}

impl<Y: Clone> Level<Y> {
    /// Applies [`step`], moving from index `(k, n)` to `(k+1, n)`.
    pub fn advance<G: FnMut(&[Y]) -> Y>(&self, combine: G) -> Result<Level<Y>> {
        let tree = step(combine, &self.tree)?;
        let index = ShapeIndex::new(self.index.k + 1, self.index.n);
        debug_assert!(check_shape(&tree, index));
        Ok(Level { tree, index })
    }
}
