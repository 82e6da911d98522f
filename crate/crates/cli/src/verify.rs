//! Exhaustive law checks over alphabet prefixes `ab`, `abc`, ... of the
//! configured maximum length.
//!
//! The lifting laws run against a pluggable lift function so that a
//! deliberately broken one can be shown to be caught.

use serde::Serialize;
use serde_json::{json, Value};

use sublists_core::combinatorics::{binomial, ch, check_shape, spine_sizes, subs, ShapeIndex};
use sublists_core::instances::{alphabet_prefix, builtin_problems, ProblemInput};
use sublists_core::level::{up, upgrade_oracle};
use sublists_core::tree::snoc;
use sublists_core::{Algorithm, BinomialTree, Error, UpFailure};

use crate::treedoc::{self, word_groups};

pub type LiftFn =
    fn(&BinomialTree<Vec<char>>) -> sublists_core::Result<BinomialTree<Vec<Vec<char>>>>;

/// Largest sweep length accepted; the top-down side grows factorially.
pub const MAX_SWEEP_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub k: Option<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawOutcome {
    pub law: String,
    pub cases: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl LawOutcome {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_len: usize,
    pub ok: bool,
    pub laws: Vec<LawOutcome>,
}

impl VerifyReport {
    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn first_failure(&self) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| !l.holds())
    }
}

struct Tally {
    law: String,
    cases: u64,
    failures: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn new(law: impl Into<String>) -> Self {
        Tally {
            law: law.into(),
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Counterexample) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn finish(self) -> LawOutcome {
        LawOutcome {
            law: self.law,
            cases: self.cases,
            failures: self.failures,
            counterexample: self.first,
        }
    }
}

fn lifted_doc(r: &sublists_core::Result<BinomialTree<Vec<Vec<char>>>>) -> Value {
    match r {
        Ok(t) => treedoc::to_value(&word_groups(t)),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn groups_doc(groups: &[Vec<Vec<char>>]) -> Value {
    let rendered: Vec<Vec<String>> = groups
        .iter()
        .map(|g| g.iter().map(|w| treedoc::word(w)).collect())
        .collect();
    json!(rendered)
}

pub struct Verifier {
    pub max_len: usize,
    pub lift: LiftFn,
}

impl Verifier {
    pub fn new(max_len: usize) -> Self {
        Verifier {
            max_len,
            lift: up::<Vec<char>>,
        }
    }

    pub fn with_lift(mut self, lift: LiftFn) -> Self {
        self.lift = lift;
        self
    }

    pub fn run(&self) -> VerifyReport {
        let mut laws = vec![
            self.lift_spec(),
            self.lift_tips(),
            self.final_lift(),
            self.shape_advance(),
            self.pascal_spine(),
        ];
        laws.extend(self.td_equals_bu());
        laws.sort_by(|a, b| a.law.cmp(&b.law));
        VerifyReport {
            max_len: self.max_len,
            ok: laws.iter().all(LawOutcome::holds),
            laws,
        }
    }

    fn words(&self, from: usize) -> impl Iterator<Item = Vec<char>> {
        (from..=self.max_len).map(|n| alphabet_prefix(n).chars().collect())
    }

    /// `lift (ch k xs) == map subs (ch (k+1) xs)` for `1 <= k < n`.
    fn lift_spec(&self) -> LawOutcome {
        let mut tally = Tally::new("lift-spec");
        for xs in self.words(2) {
            for k in 1..xs.len() {
                let lhs = (self.lift)(&ch(k, &xs).expect("k < n"));
                let rhs = ch(k + 1, &xs).expect("k < n").map(|c| subs(c));
                let ok = lhs.as_ref().is_ok_and(|t| *t == rhs);
                tally.record(ok, || Counterexample {
                    input: treedoc::word(&xs),
                    k: Some(k),
                    lhs: lifted_doc(&lhs),
                    rhs: treedoc::to_value(&word_groups(&rhs)),
                });
            }
        }
        tally.finish()
    }

    /// Tips of the lifted tree, read left to right, equal the list-level
    /// reference `map subs (choose (k+1) xs)`.
    fn lift_tips(&self) -> LawOutcome {
        let mut tally = Tally::new("lift-tips");
        for xs in self.words(2) {
            for k in 1..xs.len() {
                let lhs = (self.lift)(&ch(k, &xs).expect("k < n"));
                let rhs = upgrade_oracle(k, &xs).expect("1 <= k < n");
                let ok = lhs.as_ref().is_ok_and(|t| t.tip_values() == rhs);
                tally.record(ok, || Counterexample {
                    input: treedoc::word(&xs),
                    k: Some(k),
                    lhs: match &lhs {
                        Ok(t) => groups_doc(&t.tip_values()),
                        Err(e) => json!({ "error": e.to_string() }),
                    },
                    rhs: groups_doc(&rhs),
                });
            }
        }
        tally.finish()
    }

    /// `un_tip (lift (ch (n-1) xs)) == subs xs`.
    fn final_lift(&self) -> LawOutcome {
        let mut tally = Tally::new("final-lift");
        for xs in self.words(2) {
            let k = xs.len() - 1;
            let lifted = (self.lift)(&ch(k, &xs).expect("k < n"));
            let expected = subs(&xs);
            let got = lifted.clone().and_then(BinomialTree::un_tip);
            let ok = got.as_ref().is_ok_and(|v| *v == expected);
            tally.record(ok, || Counterexample {
                input: treedoc::word(&xs),
                k: Some(k),
                lhs: lifted_doc(&lifted),
                rhs: treedoc::to_value(&word_groups(&BinomialTree::tip(expected.clone()))),
            });
        }
        tally.finish()
    }

    /// The lifted tree has shape `(k+1, n)` and every tip holds `k+1` lists.
    fn shape_advance(&self) -> LawOutcome {
        let mut tally = Tally::new("shape-advance");
        for xs in self.words(2) {
            let n = xs.len();
            for k in 1..n {
                let lifted = (self.lift)(&ch(k, &xs).expect("k < n"));
                let ok = lifted.as_ref().is_ok_and(|t| {
                    check_shape(t, ShapeIndex::new(k + 1, n))
                        && t.tips().iter().all(|ys| ys.len() == k + 1)
                });
                tally.record(ok, || Counterexample {
                    input: treedoc::word(&xs),
                    k: Some(k),
                    lhs: lifted_doc(&lifted),
                    rhs: json!({ "shape": [k + 1, n] }),
                });
            }
        }
        tally.finish()
    }

    /// Right-spine tip counts of `ch k xs` are `C(n,k), C(n-1,k), ..., C(k,k)`.
    fn pascal_spine(&self) -> LawOutcome {
        let mut tally = Tally::new("pascal-spine");
        for xs in self.words(1) {
            let n = xs.len();
            for k in 1..=n {
                let got = spine_sizes(&ch(k, &xs).expect("k <= n"));
                let expected: Vec<usize> = (k..=n)
                    .rev()
                    .map(|m| binomial(m as u64, k as u64).expect("small") as usize)
                    .collect();
                tally.record(got == expected, || Counterexample {
                    input: treedoc::word(&xs),
                    k: Some(k),
                    lhs: json!(got),
                    rhs: json!(expected),
                });
            }
        }
        tally.finish()
    }

    fn td_equals_bu(&self) -> Vec<LawOutcome> {
        builtin_problems()
            .into_iter()
            .map(|problem| {
                let mut tally = Tally::new(format!("td-equals-bu/{}", problem.name()));
                for len in 1..=self.max_len {
                    let input = ProblemInput::distinct(problem.input_kind(), len);
                    let td = problem.run(Algorithm::TopDown, &input).map(|r| r.0);
                    let bu = problem.run(Algorithm::BottomUp, &input).map(|r| r.0);
                    let ok = matches!((&td, &bu), (Ok(a), Ok(b)) if a == b);
                    let doc = |r: &Result<_, Error>| match r {
                        Ok(v) => json!(v),
                        Err(e) => json!({ "error": e.to_string() }),
                    };
                    tally.record(ok, || Counterexample {
                        input: input.to_string(),
                        k: None,
                        lhs: doc(&td),
                        rhs: doc(&bu),
                    });
                }
                tally.finish()
            })
            .collect()
    }
}

/// A deliberately wrong lift: the fourth clause puts the right-hand element
/// at the front of each gathered list instead of the back. Used to show
/// that `verify` catches a single-clause fault.
#[doc(hidden)]
pub fn up_clause4_mutant<A: Clone>(
    t: &BinomialTree<A>,
) -> sublists_core::Result<BinomialTree<Vec<A>>> {
    use BinomialTree::{Node, Tip};

    let (left, right) = match t {
        Tip(_) => return Err(Error::MalformedLevel(UpFailure::BareTip)),
        Node(l, r) => (&**l, &**r),
    };
    match (left, right) {
        (Tip(p), Tip(q)) => Ok(Tip(vec![p.clone(), q.clone()])),
        (t, Tip(q)) => match up_clause4_mutant(t)? {
            Tip(ys) => Ok(Tip(snoc(ys, q.clone()))),
            Node(..) => Err(Error::MalformedLevel(UpFailure::LeftNotCollapsed)),
        },
        (Tip(p), u) => Ok(BinomialTree::node(
            u.map(|q| vec![p.clone(), q.clone()]),
            up_clause4_mutant(u)?,
        )),
        (t, u) => {
            let zipped = up_clause4_mutant(t)?.zip_with(u, |ys, z| {
                let mut v = vec![z.clone()];
                v.extend(ys.iter().cloned());
                v
            })?;
            Ok(BinomialTree::node(zipped, up_clause4_mutant(u)?))
        }
    }
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let width = report.laws.iter().map(|l| l.law.len()).max().unwrap_or(0);
    for law in &report.laws {
        let status = if law.holds() {
            "ok".to_string()
        } else {
            format!("FAILED ({} of {})", law.failures, law.cases)
        };
        out.push_str(&format!(
            "{:<width$}  {:>6} cases  {}\n",
            law.law, law.cases, status
        ));
    }
    match report.first_failure() {
        None => out.push_str(&format!(
            "all laws hold for inputs up to length {}\n",
            report.max_len
        )),
        Some(law) => {
            if let Some(cx) = &law.counterexample {
                out.push_str(&format!("counterexample for {}: input={}", law.law, cx.input));
                if let Some(k) = cx.k {
                    out.push_str(&format!(" k={k}"));
                }
                out.push('\n');
                out.push_str(&format!("  lhs: {}\n  rhs: {}\n", cx.lhs, cx.rhs));
            }
        }
    }
    out
}
