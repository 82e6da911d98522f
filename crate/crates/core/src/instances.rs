//! Built-in recurrences and the golden cases shared by tests and the CLI.
//!
//! None of these instances has a meaning of its own; each one is chosen to
//! stress a property of the evaluators:
//!
//! * `trace` renders the whole call structure as a bracketed string, so any
//!   change in the order a combiner sees its arguments changes the output.
//! * `modsum` is a numeric, order-sensitive combiner: one plus the sum of
//!   each value times its 1-based position, modulo 1 000 003.
//! * `maxmin` (max minus min) ignores argument order and serves as a control.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{ch, choose, spine_sizes, subs};
use crate::error::{Error, Result};
use crate::level::upgrade_oracle;
use crate::solver::{run_with_stats, Algorithm, RunStats, SublistProblem};

pub const MODSUM_MODULUS: u64 = 1_000_003;

pub fn trace() -> SublistProblem<char, String> {
    SublistProblem::new("trace", |c: &char| c.to_string(), |ys: &[String]| {
        let mut out = String::with_capacity(2 + ys.iter().map(String::len).sum::<usize>());
        out.push('(');
        for y in ys {
            out.push_str(y);
        }
        out.push(')');
        out
    })
}

pub fn modsum() -> SublistProblem<u64, u64> {
    SublistProblem::new("modsum", |x: &u64| x % MODSUM_MODULUS, |ys: &[u64]| {
        // each term is below 2^20 * ys.len(), far from u64::MAX
        ys.iter()
            .zip(1u64..)
            .fold(1, |acc, (y, w)| (acc + (y % MODSUM_MODULUS) * w) % MODSUM_MODULUS)
    })
}

pub fn maxmin() -> SublistProblem<u64, u64> {
    SublistProblem::new("maxmin", |x: &u64| *x, |ys: &[u64]| {
        let max = ys.iter().copied().max().unwrap_or(0);
        let min = ys.iter().copied().min().unwrap_or(0);
        max - min
    })
}

/// What kind of input list a built-in problem reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Symbols,
    Numbers,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(untagged)
)]
pub enum ProblemInput {
    Symbols(String),
    Numbers(Vec<u64>),
}

impl ProblemInput {
    pub fn len(&self) -> usize {
        match self {
            ProblemInput::Symbols(s) => s.chars().count(),
            ProblemInput::Numbers(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> InputKind {
        match self {
            ProblemInput::Symbols(_) => InputKind::Symbols,
            ProblemInput::Numbers(_) => InputKind::Numbers,
        }
    }

    /// `len` distinct symbols: `a, b, c, ...` or `1, 2, 3, ...`.
    pub fn distinct(kind: InputKind, len: usize) -> Self {
        match kind {
            InputKind::Symbols => ProblemInput::Symbols(alphabet_prefix(len)),
            InputKind::Numbers => ProblemInput::Numbers((1..=len as u64).collect()),
        }
    }
}

impl fmt::Display for ProblemInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemInput::Symbols(s) => f.write_str(s),
            ProblemInput::Numbers(v) => {
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// The first `len` letters `a, b, c, ...`, continuing past `z` into other
/// code points so every symbol stays distinct.
pub fn alphabet_prefix(len: usize) -> String {
    (0..len as u32)
        .map(|i| char::from_u32(u32::from(b'a') + i).unwrap_or('?'))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(untagged)
)]
pub enum Value {
    Text(String),
    Number(u64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Text(s) => f.write_str(s),
            Value::Number(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinProblem {
    Trace,
    ModSum,
    MaxMin,
}

impl BuiltinProblem {
    pub fn name(self) -> &'static str {
        match self {
            BuiltinProblem::Trace => "trace",
            BuiltinProblem::ModSum => "modsum",
            BuiltinProblem::MaxMin => "maxmin",
        }
    }

    pub fn input_kind(self) -> InputKind {
        match self {
            BuiltinProblem::Trace => InputKind::Symbols,
            BuiltinProblem::ModSum | BuiltinProblem::MaxMin => InputKind::Numbers,
        }
    }

    /// Whether permuting the combiner's arguments can change its result.
    pub fn order_sensitive(self) -> bool {
        !matches!(self, BuiltinProblem::MaxMin)
    }

    /// Solves `input` with `algo`, counting calls.
    pub fn run(self, algo: Algorithm, input: &ProblemInput) -> Result<(Value, RunStats)> {
        if input.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = input.len() - 1;
        match (self, input) {
            (BuiltinProblem::Trace, ProblemInput::Symbols(s)) => {
                let xs: Vec<char> = s.chars().collect();
                let (v, stats) = run_with_stats(algo, n, &trace(), &xs)?;
                Ok((Value::Text(v), stats))
            }
            (BuiltinProblem::ModSum, ProblemInput::Numbers(xs)) => {
                let (v, stats) = run_with_stats(algo, n, &modsum(), xs)?;
                Ok((Value::Number(v), stats))
            }
            (BuiltinProblem::MaxMin, ProblemInput::Numbers(xs)) => {
                let (v, stats) = run_with_stats(algo, n, &maxmin(), xs)?;
                Ok((Value::Number(v), stats))
            }
            _ => Err(Error::WrongInputKind),
        }
    }
}

pub fn builtin_problems() -> Vec<BuiltinProblem> {
    vec![
        BuiltinProblem::Trace,
        BuiltinProblem::ModSum,
        BuiltinProblem::MaxMin,
    ]
}

pub fn lookup(name: &str) -> Option<BuiltinProblem> {
    builtin_problems().into_iter().find(|p| p.name() == name)
}

/// Where a golden expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "lowercase")
)]
pub enum Provenance {
    /// Printed in the published derivation.
    Published,
    /// Computed by an independent reference evaluation.
    Derived,
    /// Forced directly by a definition.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(untagged)
)]
pub enum GoldenValue {
    Scalar(Value),
    Texts(Vec<String>),
    TextGroups(Vec<Vec<String>>),
    Sizes(Vec<usize>),
}

/// One fixture: either a built-in problem evaluated by one algorithm, or a
/// combinatorial function (`subs`, `choose`, `upgrade`, `spine_sizes`)
/// applied to a symbol string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GoldenCase {
    pub problem: String,
    pub input: ProblemInput,
    pub k: Option<usize>,
    pub algorithm: Option<Algorithm>,
    pub expected: GoldenValue,
    pub provenance: Provenance,
}

fn to_strings(groups: Vec<Vec<char>>) -> Vec<String> {
    groups.into_iter().map(|g| g.into_iter().collect()).collect()
}

impl GoldenCase {
    /// Recomputes the case with the library.
    pub fn evaluate(&self) -> Result<GoldenValue> {
        if let Some(problem) = lookup(&self.problem) {
            let algo = self.algorithm.ok_or(Error::UnknownFixture)?;
            return Ok(GoldenValue::Scalar(problem.run(algo, &self.input)?.0));
        }
        let xs: Vec<char> = match &self.input {
            ProblemInput::Symbols(s) => s.chars().collect(),
            ProblemInput::Numbers(_) => return Err(Error::WrongInputKind),
        };
        let k = self.k;
        match (self.problem.as_str(), k) {
            ("subs", None) => Ok(GoldenValue::Texts(to_strings(subs(&xs)))),
            ("choose", Some(k)) => Ok(GoldenValue::Texts(to_strings(choose(k, &xs)?))),
            ("upgrade", Some(k)) => Ok(GoldenValue::TextGroups(
                upgrade_oracle(k, &xs)?.into_iter().map(to_strings).collect(),
            )),
            ("spine_sizes", Some(k)) => Ok(GoldenValue::Sizes(spine_sizes(&ch(k, &xs)?))),
            _ => Err(Error::UnknownFixture),
        }
    }

    /// Path of the golden file holding this case, relative to the golden root.
    pub fn relative_path(&self) -> String {
        alloc::format!("{}/{}.jsonl", self.problem, self.input)
    }
}

fn texts(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

pub fn golden_suite() -> Vec<GoldenCase> {
    use Provenance::*;

    let sym = |s: &str| ProblemInput::Symbols(s.to_string());
    let num = |v: &[u64]| ProblemInput::Numbers(v.to_vec());
    let text = |s: &str| GoldenValue::Scalar(Value::Text(s.to_string()));
    let number = |x: u64| GoldenValue::Scalar(Value::Number(x));

    let evaluated = [
        ("trace", sym("a"), text("a"), Trivial),
        ("trace", sym("ab"), text("(ab)"), Derived),
        ("trace", sym("abc"), text("((ab)(ac)(bc))"), Derived),
        (
            "trace",
            sym("abcd"),
            text("(((ab)(ac)(bc))((ab)(ad)(bd))((ac)(ad)(cd))((bc)(bd)(cd)))"),
            Derived,
        ),
        ("modsum", num(&[3, 4]), number(12), Derived),
        ("modsum", num(&[1, 2, 3, 4, 5]), number(11704), Derived),
        ("modsum", num(&[5, 1, 9, 2]), number(773), Derived),
        ("maxmin", num(&[10, 20, 30]), number(10), Derived),
        ("maxmin", num(&[5, 1, 9, 2]), number(4), Derived),
    ];

    let mut cases = Vec::new();
    for (problem, input, expected, provenance) in evaluated {
        for algo in [Algorithm::TopDown, Algorithm::BottomUp] {
            cases.push(GoldenCase {
                problem: problem.to_string(),
                input: input.clone(),
                k: None,
                algorithm: Some(algo),
                expected: expected.clone(),
                provenance,
            });
        }
    }

    let combinatorial = [
        (
            "subs",
            "abcde",
            None,
            GoldenValue::Texts(texts(&["abcd", "abce", "abde", "acde", "bcde"])),
            Published,
        ),
        ("subs", "ab", None, GoldenValue::Texts(texts(&["a", "b"])), Trivial),
        (
            "choose",
            "abcde",
            Some(3),
            GoldenValue::Texts(texts(&[
                "abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde",
            ])),
            Published,
        ),
        ("choose", "xyz", Some(0), GoldenValue::Texts(texts(&[""])), Published),
        (
            "upgrade",
            "abcde",
            Some(2),
            GoldenValue::TextGroups(
                [
                    ["ab", "ac", "bc"],
                    ["ab", "ad", "bd"],
                    ["ab", "ae", "be"],
                    ["ac", "ad", "cd"],
                    ["ac", "ae", "ce"],
                    ["ad", "ae", "de"],
                    ["bc", "bd", "cd"],
                    ["bc", "be", "ce"],
                    ["bd", "be", "de"],
                    ["cd", "ce", "de"],
                ]
                .iter()
                .map(|g| texts(g))
                .collect(),
            ),
            Derived,
        ),
        (
            "spine_sizes",
            "abcde",
            Some(2),
            GoldenValue::Sizes(vec![10, 6, 3, 1]),
            Published,
        ),
        (
            "spine_sizes",
            "abcde",
            Some(3),
            GoldenValue::Sizes(vec![10, 4, 1]),
            Derived,
        ),
    ];
    for (problem, input, k, expected, provenance) in combinatorial {
        cases.push(GoldenCase {
            problem: problem.to_string(),
            input: sym(input),
            k,
            algorithm: None,
            expected,
            provenance,
        });
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert_eq!(builtin_problems().len(), 3);
        let trace = lookup("trace").unwrap();
        assert!(trace.order_sensitive());
        assert_eq!(trace.input_kind(), InputKind::Symbols);
        assert!(lookup("nope").is_none());
    }

    #[test]
    fn golden_cases_reproduce() {
        for case in golden_suite() {
            assert_eq!(case.evaluate().unwrap(), case.expected, "{case:?}");
        }
    }

    #[test]
    fn wrong_input_kind() {
        let input = ProblemInput::Symbols("abc".to_string());
        assert_eq!(
            BuiltinProblem::ModSum.run(Algorithm::TopDown, &input),
            Err(Error::WrongInputKind)
        );
        assert_eq!(
            BuiltinProblem::Trace.run(Algorithm::TopDown, &ProblemInput::Symbols(String::new())),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn modsum_is_order_sensitive() {
        let p = modsum();
        use crate::solver::Recurrence;
        assert_ne!(p.combine(&[1, 2]), p.combine(&[2, 1]));
        assert_eq!(p.combine(&[3, 4]), 12);
    }

    #[test]
    fn alphabet() {
        assert_eq!(alphabet_prefix(5), "abcde");
        assert_eq!(alphabet_prefix(0), "");
        assert_eq!(ProblemInput::distinct(InputKind::Numbers, 3).to_string(), "1,2,3");
    }
}
