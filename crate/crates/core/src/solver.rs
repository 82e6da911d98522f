//! Top-down and bottom-up evaluation of immediate-sublist recurrences.
//!
//! A recurrence is given by a base function `f` for singleton inputs and a
//! combiner `g` that receives the solutions of all immediate sublists in
//! [`subs`] order. [`td`] unfolds it naively and recomputes shared
//! sublists. [`bu`] builds the lattice one level at a time with [`step`],
//! so each sublist is solved once.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cell::Cell;
use core::fmt;

use crate::combinatorics::{ch, subs, ShapeIndex};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::tree::extract_singleton;

/// The two halves of a sublist recurrence.
pub trait Recurrence<X, Y> {
    fn base(&self, x: &X) -> Y;
    fn combine(&self, ys: &[Y]) -> Y;
}

impl<X, Y, R: Recurrence<X, Y> + ?Sized> Recurrence<X, Y> for &R {
    fn base(&self, x: &X) -> Y {
        (**self).base(x)
    }

    fn combine(&self, ys: &[Y]) -> Y {
        (**self).combine(ys)
    }
}

type BaseFn<X, Y> = Box<dyn Fn(&X) -> Y + Send + Sync>;
type CombineFn<Y> = Box<dyn Fn(&[Y]) -> Y + Send + Sync>;

/// A named recurrence built from closures.
pub struct SublistProblem<X, Y> {
    name: Cow<'static, str>,
    base: BaseFn<X, Y>,
    combine: CombineFn<Y>,
}

impl<X, Y> SublistProblem<X, Y> {
    pub fn new(
        name: impl Into<Cow<'static, str>>,
        base: impl Fn(&X) -> Y + Send + Sync + 'static,
        combine: impl Fn(&[Y]) -> Y + Send + Sync + 'static,
    ) -> Self {
        SublistProblem {
            name: name.into(),
            base: Box::new(base),
            combine: Box::new(combine),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl<X, Y> fmt::Debug for SublistProblem<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SublistProblem")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl<X, Y> Recurrence<X, Y> for SublistProblem<X, Y> {
    fn base(&self, x: &X) -> Y {
        (self.base)(x)
    }

    fn combine(&self, ys: &[Y]) -> Y {
        (self.combine)(ys)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "kebab-case")
)]
pub enum Algorithm {
    TopDown,
    BottomUp,
}

impl Algorithm {
    pub fn short_name(self) -> &'static str {
        match self {
            Algorithm::TopDown => "td",
            Algorithm::BottomUp => "bu",
        }
    }
}

/// Call counts from one instrumented run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunStats {
    pub algorithm: Algorithm,
    pub f_calls: u64,
    pub g_calls: u64,
    /// Largest tip count of any level tree; always 0 for top-down runs.
    pub peak_level_tips: usize,
}

fn check_len<X>(n: usize, xs: &[X]) -> Result<()> {
    if xs.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            actual: xs.len(),
        });
    }
    Ok(())
}

/// Naive top-down evaluation on an input of length exactly `n + 1`.
pub fn td<X, Y, P>(n: usize, p: &P, xs: &[X]) -> Result<Y>
where
    X: Clone,
    P: Recurrence<X, Y> + ?Sized,
{
    fn go<X: Clone, Y, P: Recurrence<X, Y> + ?Sized>(n: usize, p: &P, xs: &[X]) -> Y {
        if n == 0 {
            return p.base(&xs[0]);
        }
        let solved: Vec<Y> = subs(xs).iter().map(|s| go(n - 1, p, s)).collect();
        p.combine(&solved)
    }
    check_len(n, xs)?;
    Ok(go(n, p, xs))
}

/// [`td`] with the base function already applied to every input element:
/// `td n p xs == td_prime n p.combine (map p.base xs)`.
pub fn td_prime<Y, G>(n: usize, combine: G, ys: &[Y]) -> Result<Y>
where
    Y: Clone,
    G: Fn(&[Y]) -> Y,
{
    fn go<Y: Clone, G: Fn(&[Y]) -> Y>(n: usize, g: &G, ys: &[Y]) -> Y {
        if n == 0 {
            return ys[0].clone();
        }
        let solved: Vec<Y> = subs(ys).iter().map(|s| go(n - 1, g, s)).collect();
        g(&solved)
    }
    check_len(n, ys)?;
    Ok(go(n, &combine, ys))
}

/// Bottom-up evaluation, calling `observe` on every level from `(1, n+1)` up
/// to the final `(n+1, n+1)` tip.
pub fn bu_with_levels<X, Y, P, O>(n: usize, p: &P, xs: &[X], mut observe: O) -> Result<Y>
where
    Y: Clone,
    P: Recurrence<X, Y> + ?Sized,
    O: FnMut(&Level<Y>),
{
    check_len(n, xs)?;
    let ys: Vec<Y> = xs.iter().map(|x| p.base(x)).collect();
    let singletons = ch(1, &ys)?.try_into_map(extract_singleton)?;
    let mut level = Level::new(singletons, ShapeIndex::new(1, n + 1))?;
    observe(&level);
    for _ in 0..n {
        level = level.advance(|ys| p.combine(ys))?;
        observe(&level);
    }
    level.into_tree().un_tip()
}

/// Bottom-up evaluation on an input of length exactly `n + 1`.
pub fn bu<X, Y, P>(n: usize, p: &P, xs: &[X]) -> Result<Y>
where
    Y: Clone,
    P: Recurrence<X, Y> + ?Sized,
{
    bu_with_levels(n, p, xs, |_| {})
}

pub fn run<X, Y, P>(algo: Algorithm, n: usize, p: &P, xs: &[X]) -> Result<Y>
where
    X: Clone,
    Y: Clone,
    P: Recurrence<X, Y> + ?Sized,
{
    match algo {
        Algorithm::TopDown => td(n, p, xs),
        Algorithm::BottomUp => bu(n, p, xs),
    }
}

struct Counting<'a, P: ?Sized> {
    inner: &'a P,
    f_calls: Cell<u64>,
    g_calls: Cell<u64>,
}

impl<X, Y, P: Recurrence<X, Y> + ?Sized> Recurrence<X, Y> for Counting<'_, P> {
    fn base(&self, x: &X) -> Y {
        self.f_calls.set(self.f_calls.get() + 1);
        self.inner.base(x)
    }

    fn combine(&self, ys: &[Y]) -> Y {
        self.g_calls.set(self.g_calls.get() + 1);
        self.inner.combine(ys)
    }
}

/// Runs `algo` while counting calls to the base function and the combiner.
pub fn run_with_stats<X, Y, P>(
    algo: Algorithm,
    n: usize,
    p: &P,
    xs: &[X],
) -> Result<(Y, RunStats)>
where
    X: Clone,
    Y: Clone,
    P: Recurrence<X, Y> + ?Sized,
{
    let counting = Counting {
        inner: p,
        f_calls: Cell::new(0),
        g_calls: Cell::new(0),
    };
    let mut peak = 0;
    let value = match algo {
        Algorithm::TopDown => td(n, &counting, xs)?,
        Algorithm::BottomUp => bu_with_levels(n, &counting, xs, |lvl| {
            peak = peak.max(lvl.tree().tip_count());
        })?,
    };
    let stats = RunStats {
        algorithm: algo,
        f_calls: counting.f_calls.get(),
        g_calls: counting.g_calls.get(),
        peak_level_tips: peak,
    };
    Ok((value, stats))
}

/// Evaluates the recurrence on a non-empty input of any length.
pub fn solve<X, Y, P>(p: &P, xs: &[X], algo: Algorithm) -> Result<Y>
where
    X: Clone,
    Y: Clone,
    P: Recurrence<X, Y> + ?Sized,
{
    if xs.is_empty() {
        return Err(Error::EmptyInput);
    }
    run(algo, xs.len() - 1, p, xs)
}
