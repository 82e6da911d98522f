//! Acceptance suite. Each criterion prints one PASS/FAIL line with its case
//! count and elapsed time; any failure makes the process exit non-zero.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sublists_core::combinatorics::{binomial, ch, check_shape, choose, spine_sizes, subs, ShapeIndex};
use sublists_core::instances::{alphabet_prefix, builtin_problems, modsum, trace, ProblemInput};
use sublists_core::level::{up, upgrade_oracle};
use sublists_core::solver::{bu, bu_with_levels, run_with_stats, solve, td};
use sublists_core::{Algorithm, BinomialTree, Error};

type Outcome = Result<u64, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn strings(v: &[Vec<char>]) -> Vec<String> {
    v.iter().map(|s| s.iter().collect()).collect()
}

fn golden_values() -> Outcome {
    let xs = chars("abcde");
    ensure!(
        strings(&subs(&xs)) == ["abcd", "abce", "abde", "acde", "bcde"],
        "subs abcde"
    );
    ensure!(
        strings(&choose(3, &xs).unwrap())
            == ["abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde"],
        "choose 3 abcde"
    );
    let groups: Vec<Vec<String>> = upgrade_oracle(2, &xs)
        .unwrap()
        .iter()
        .map(|g| strings(g))
        .collect();
    ensure!(
        groups[..3] == [["ab", "ac", "bc"], ["ab", "ad", "bd"], ["ab", "ae", "be"]],
        "upgrade 2 abcde prefix: {:?}",
        &groups[..3]
    );
    ensure!(
        spine_sizes(&ch(2, &xs).unwrap()) == [10, 6, 3, 1],
        "spine of ch 2 abcde"
    );
    Ok(4)
}

fn lift_spec() -> Outcome {
    let mut cases = 0;
    for n in 2..=8 {
        let xs = chars(&alphabet_prefix(n));
        for k in 1..n {
            let lhs = up(&ch(k, &xs).unwrap()).map_err(|e| e.to_string())?;
            let rhs = ch(k + 1, &xs).unwrap().map(|c| subs(c));
            ensure!(lhs == rhs, "n={n} k={k}");
            cases += 1;
        }
    }
    Ok(cases)
}

fn td_equals_bu() -> Outcome {
    let mut cases = 0;
    for problem in builtin_problems() {
        for len in 1..=9 {
            let input = ProblemInput::distinct(problem.input_kind(), len);
            let a = problem.run(Algorithm::TopDown, &input).map_err(|e| e.to_string())?;
            let b = problem.run(Algorithm::BottomUp, &input).map_err(|e| e.to_string())?;
            ensure!(a.0 == b.0, "{} on {input}: {} vs {}", problem.name(), a.0, b.0);
            cases += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let p = modsum();
    for _ in 0..200 {
        let len = rng.gen_range(1..=8);
        let xs: Vec<u64> = (0..len).map(|_| rng.gen()).collect();
        let n = len - 1;
        ensure!(
            td(n, &p, &xs).unwrap() == bu(n, &p, &xs).unwrap(),
            "modsum on {xs:?}"
        );
        cases += 1;
    }
    Ok(cases)
}

fn final_lift() -> Outcome {
    let mut cases = 0;
    for n in 2..=8 {
        let xs = chars(&alphabet_prefix(n));
        let lifted = up(&ch(n - 1, &xs).unwrap()).map_err(|e| e.to_string())?;
        ensure!(lifted.un_tip().ok() == Some(subs(&xs)), "n={n}");
        cases += 1;
    }
    Ok(cases)
}

fn shapes() -> Outcome {
    let mut cases = 0;
    for n in 0..=10 {
        let xs = chars(&alphabet_prefix(n));
        for k in 0..=n {
            let tree = ch(k, &xs).unwrap();
            ensure!(check_shape(&tree, ShapeIndex::new(k, n)), "ch {k} of length {n}");
            cases += 1;
            if k >= 1 && k < n {
                let lifted = up(&tree).map_err(|e| e.to_string())?;
                ensure!(
                    check_shape(&lifted, ShapeIndex::new(k + 1, n))
                        && lifted.tips().iter().all(|ys| ys.len() == k + 1),
                    "lift of ch {k} of length {n}"
                );
                cases += 1;
            }
        }
    }
    for len in 1..=9 {
        let xs = chars(&alphabet_prefix(len));
        let n = len - 1;
        let mut step = 0;
        let mut last_is_tip = false;
        let mut ok = true;
        bu_with_levels(n, &trace(), &xs, |lvl| {
            ok &= check_shape(lvl.tree(), ShapeIndex::new(1 + step, 1 + n));
            last_is_tip = lvl.tree().is_tip();
            step += 1;
        })
        .map_err(|e| e.to_string())?;
        ensure!(ok && step == n + 1, "bu levels for length {len}");
        ensure!(last_is_tip, "bu final level for length {len} is not a tip");
        cases += 1;
    }
    Ok(cases)
}

fn cost_gap() -> Outcome {
    let mut cases = 0;
    let mut td_closed = 0u64;
    for n in 0..=8u64 {
        if n > 0 {
            td_closed = 1 + (n + 1) * td_closed;
        }
        let bu_closed: u64 = (2..=n + 1).map(|j| binomial(n + 1, j).unwrap()).sum();
        let xs: Vec<u64> = (1..=n + 1).collect();
        let (_, a) = run_with_stats(Algorithm::TopDown, n as usize, &modsum(), &xs).unwrap();
        let (_, b) = run_with_stats(Algorithm::BottomUp, n as usize, &modsum(), &xs).unwrap();
        ensure!(a.g_calls == td_closed, "td n={n}: {} vs {td_closed}", a.g_calls);
        ensure!(b.g_calls == bu_closed, "bu n={n}: {} vs {bu_closed}", b.g_calls);
        if n == 4 {
            ensure!((a.g_calls, b.g_calls) == (86, 26), "n=4 counts");
        }
        cases += 1;
    }
    Ok(cases)
}

fn random_tree(rng: &mut StdRng, depth: u32) -> BinomialTree<i64> {
    if depth == 0 || rng.gen_bool(0.3) {
        BinomialTree::tip(rng.gen_range(-1000..1000))
    } else {
        BinomialTree::node(random_tree(rng, depth - 1), random_tree(rng, depth - 1))
    }
}

fn naturality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut cases = 0;
    for _ in 0..150 {
        let t = random_tree(&mut rng, 8);
        let (a, b): (i64, i64) = (rng.gen_range(-50..50), rng.gen_range(1..9));
        let g = |x: &i64| x + a;
        let f = |x: &i64| x * b;
        ensure!(t.map(|x| *x) == t, "functor identity");
        ensure!(t.map(|x| f(&g(x))) == t.map(g).map(f), "functor composition");
        let h = |x: &i64| x ^ b;
        let lhs = t.map(|z| (g(z), h(z)));
        let rhs = t.map(g).zip_with(&t.map(h), |x, y| (*x, *y)).unwrap();
        ensure!(lhs == rhs, "zip naturality");
        cases += 3;
    }
    for _ in 0..150 {
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(1..n);
        let xs: Vec<char> = (0..n).map(|_| rng.gen_range(b'a'..=b'd') as char).collect();
        let salt: u32 = rng.gen();
        let f = |c: &Vec<char>| c.iter().fold(salt, |acc, x| acc.wrapping_mul(131) ^ *x as u32);
        let t = ch(k, &xs).unwrap();
        let lhs = up(&t.map(f)).unwrap();
        let rhs = up(&t).unwrap().map(|ys| ys.iter().map(f).collect::<Vec<_>>());
        ensure!(lhs == rhs, "up naturality on {xs:?} k={k}");
        cases += 1;
    }
    Ok(cases)
}

fn exit_code(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_sublists"))
        .args(args)
        .output()
        .ok()
        .and_then(|o| o.status.code())
}

fn error_paths() -> Outcome {
    let tip = BinomialTree::tip(1);
    let pair = BinomialTree::node(BinomialTree::tip(1), BinomialTree::tip(2));
    ensure!(
        matches!(tip.zip_with(&pair, |a, b| a + b), Err(Error::ShapeMismatch { .. })),
        "zip mismatch"
    );
    ensure!(pair.clone().un_tip() == Err(Error::NotATip), "un_tip on node");
    ensure!(
        choose(4, &chars("abc")) == Err(Error::OutOfRange { k: 4, n: 3 }),
        "choose out of range"
    );
    ensure!(
        ch(4, &chars("abc")) == Err(Error::OutOfRange { k: 4, n: 3 }),
        "ch out of range"
    );
    ensure!(
        upgrade_oracle(0, &chars("abc")) == Err(Error::OutOfRange { k: 0, n: 3 }),
        "upgrade k=0"
    );
    ensure!(
        solve(&trace(), &[], Algorithm::TopDown) == Err(Error::EmptyInput),
        "solve on empty input"
    );
    ensure!(
        matches!(up(&tip), Err(Error::MalformedLevel(_))),
        "up on a bare tip"
    );
    let usage = [
        &["run", "--problem", "trace", "--input", ""][..],
        &["run", "--problem", "nope", "--input", "abc"],
        &["dump", "--k", "5", "--input", "abc"],
        &["bench", "--max-len", "13"],
    ];
    for args in usage {
        ensure!(exit_code(args) == Some(2), "{args:?} should exit 2");
    }
    ensure!(
        exit_code(&["verify", "--max-len", "5", "--mutant", "up-clause4"]) == Some(1),
        "injected fault should exit 1"
    );
    ensure!(
        exit_code(&["run", "--problem", "trace", "--input", "abc"]) == Some(0),
        "healthy run should exit 0"
    );
    Ok(7 + usage.len() as u64 + 2)
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "published golden values", limit: Duration::from_secs(1), check: golden_values },
        Criterion { id: 2, name: "lift specification, lengths 2..8", limit: Duration::from_secs(10), check: lift_spec },
        Criterion { id: 3, name: "td equals bu", limit: Duration::from_secs(30), check: td_equals_bu },
        Criterion { id: 4, name: "final lift yields subs", limit: Duration::from_secs(5), check: final_lift },
        Criterion { id: 5, name: "shape indices", limit: Duration::from_secs(10), check: shapes },
        Criterion { id: 6, name: "call-count gap", limit: Duration::from_secs(10), check: cost_gap },
        Criterion { id: 7, name: "naturality", limit: Duration::from_secs(10), check: naturality },
        Criterion { id: 8, name: "error paths", limit: Duration::from_secs(30), check: error_paths },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > c.limit => Err(format!("took {elapsed:?}, limit {:?}", c.limit)),
            other => other,
        };
        match result {
            Ok(cases) => println!(
                "PASS  {}. {} ({cases} cases, {:.3}s)",
                c.id,
                c.name,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {}: {why}", c.id, c.name);
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
