//! Acceptance gate: one PASS/FAIL line per criterion. Exact equality is
//! required everywhere; the only tolerances are the wall-time budgets below.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use coxmask::dot::render_dot;
use coxmask::suite::Check;
use coxmask::{run_suite, SuiteConfig, SuiteReport};
use coxmask_core::oracle::constant_masks_by_enumeration;
use coxmask_core::relative::RelativeMask;
use coxmask_core::{
    greedy_constant_mask, match_interval, presets, CoxeterSystem, Element, Entry, Mask,
    ReducedExpression,
};
use petgraph::graph::DiGraph;

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

const PHI_CHECKS: [Check; 5] = [
    Check::Masks,
    Check::Relative,
    Check::Matching,
    Check::Mobius,
    Check::Acyclic,
];

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, Box<dyn Fn() -> Outcome>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coxmask(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_coxmask"))
        .args(args)
        .env_remove("COXMASK_MAX_LENGTH")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn suite(group: &str, max_length: usize, checks: &[Check]) -> Result<SuiteReport, String> {
    let report = run_suite(&SuiteConfig {
        group: group.parse().map_err(|e| format!("{e}"))?,
        max_length,
        checks: checks.to_vec(),
        jobs: 0,
    })
    .map_err(|e| e.to_string())?;
    ensure(report.pairs > 0, || format!("{group}: no pairs enumerated"))?;
    ensure(report.is_ok() && report.resource_errors() == 0, || {
        report.to_text()
    })?;
    Ok(report)
}

fn a4_constant_mask() -> Outcome {
    let sys = presets::system("A4").unwrap();
    let expr = ReducedExpression::new(&sys, vec![2, 3, 4, 1, 2, 3]).map_err(|e| e.to_string())?;
    let p = |w: &[usize]| sys.product_of_word(w).unwrap();
    let (mask, trace) =
        greedy_constant_mask(&sys, &expr, &p(&[1, 2, 1])).map_err(|e| e.to_string())?;
    ensure(mask == Mask::from_digits(&[1, 0, 0, 1, 1, 0]), || {
        format!("mask {mask:?}")
    })?;
    ensure(trace.remainder(5) == &p(&[2, 1]), || {
        "r5 is not s2 s1".into()
    })?;
    ensure(trace.remainder(4) == &p(&[2]), || "r4 is not s2".into())?;
    ensure(trace.remainder(1).is_identity(), || "r1 is not e".into())?;
    let text = coxmask(&[
        "constant-mask",
        "-g",
        "A4",
        "--word",
        "2 3 4 1 2 3",
        "--x",
        "1 2 1",
    ])?;
    ensure(
        text.starts_with("s2 s3 s4 s1 s2 s3\n1  0  0  1  1  0\n"),
        || text.clone(),
    )?;
    Ok("mask 1 0 0 1 1 0, r5 = s2 s1, r4 = s2, r1 = e".into())
}

const TABLE: [(&str, &str, &str); 10] = [
    ("0 0 0 1", "1 1 1 1", "s2 s1 s3 s2"),
    ("1 0 0 X^d", "1 1 1 0", "s2 s1 s3"),
    ("0 0 X 1", "1 1 0 1", "s2 s1 s2"),
    ("0 X 0 1", "1 0 1 1", "s2 s3 s2"),
    ("X 0 0 1", "0 1 1 1", "s1 s3 s2"),
    ("1 0 X X^d", "1 1 0 0", "s2 s1"),
    ("1 X 0 X^d", "1 0 1 0", "s2 s3"),
    ("X 0 X 1", "0 1 0 1", "s1 s2"),
    ("X X 0 1", "0 0 1 1", "s3 s2"),
    ("X X X 1", "0 0 0 1", "s2"),
];

fn interval_table() -> Outcome {
    let text = coxmask(&["interval", "--group", "A3", "2", "2 1 3 2"])?;
    let rows: Vec<(String, String, String)> = text
        .lines()
        .skip(1)
        .map(|line| {
            let (sigma, rest) = line
                .trim_start_matches("σ = ")
                .split_once("τ = ")
                .unwrap_or(("", ""));
            let cells: Vec<&str> = rest.split_whitespace().collect();
            let (tau, sub) = cells.split_at(4.min(cells.len()));
            (
                sigma.split_whitespace().collect::<Vec<_>>().join(" "),
                tau.join(" "),
                sub.join(" "),
            )
        })
        .collect();
    ensure(rows.len() == TABLE.len(), || {
        format!("{} rows\n{text}", rows.len())
    })?;
    for (k, ((s, t, sub), want)) in rows.iter().zip(TABLE).enumerate() {
        ensure((s.as_str(), t.as_str(), sub.as_str()) == want, || {
            format!("row {}: got ({s}, {t}, {sub}), want {want:?}", k + 1)
        })?;
    }
    Ok("10 rows match, X^d in rows 2, 6, 7".into())
}

fn five_pairs() -> Outcome {
    let text = coxmask(&["match", "--group", "A3", "2", "2 1 3 2"])?;
    let got: BTreeSet<(String, String)> = text
        .lines()
        .filter(|l| l.contains(" > "))
        .map(|l| {
            let pair = l.split("    [").next().unwrap();
            let (u, d) = pair.split_once(" > ").unwrap();
            (u.trim().to_string(), d.trim().to_string())
        })
        .collect();
    let want: BTreeSet<(String, String)> = [
        ("s2 s1 s3 s2", "s2 s1 s3"),
        ("s2 s3 s2", "s2 s3"),
        ("s2 s1 s2", "s2 s1"),
        ("s1 s3 s2", "s1 s2"),
        ("s3 s2", "s2"),
    ]
    .iter()
    .map(|(u, d)| (u.to_string(), d.to_string()))
    .collect();
    ensure(got == want, || format!("pairs {got:?}"))?;
    ensure(text.contains("unmatched: none"), || text.clone())?;
    Ok("5 pairs, 0 unmatched".into())
}

fn shifted_descents() -> Outcome {
    use Entry::{One as I, Zero as O, X};
    let sys = presets::system("A3").unwrap();
    let expr = ReducedExpression::new(&sys, vec![2, 1, 3, 2]).unwrap();
    let at4 = |entries: Vec<Entry>| {
        RelativeMask::from_entries(&sys, &expr, entries)
            .and_then(|rm| rm.is_shifted_descent(&sys, 4))
            .map_err(|e| e.to_string())
    };
    ensure(at4(vec![O, X, O, I])?, || {
        "(0,X,0,1): 4 not a shifted descent".into()
    })?;
    ensure(!at4(vec![X, O, O, I])?, || {
        "(X,0,0,1): 4 is a shifted descent".into()
    })?;
    Ok("(0,X,0,1) yes, (X,0,0,1) no".into())
}

fn exhaustive(groups: &[(&str, usize, Duration)], checks: &[Check]) -> Outcome {
    let mut notes = Vec::new();
    for &(group, max_length, budget) in groups {
        let start = Instant::now();
        let r = suite(group, max_length, checks)?;
        let took = start.elapsed();
        ensure(took <= budget, || {
            format!("{group} took {took:.1?}, budget {budget:?}")
        })?;
        notes.push(format!("{group} {} pairs {:.1?}", r.pairs, took));
    }
    Ok(notes.join(", "))
}

/// Up to `limit` reduced expressions of elements with length ≤ `max_len`,
/// spread evenly when there are more.
fn expressions(sys: &CoxeterSystem, max_len: usize, limit: usize) -> Vec<ReducedExpression> {
    let mut all = Vec::new();
    for w in sys.elements_up_to(max_len).unwrap() {
        for word in sys.reduced_words(&w, 10 * limit).unwrap() {
            all.push(ReducedExpression::new(sys, word).unwrap());
        }
    }
    if all.len() <= limit {
        return all;
    }
    let step = all.len() as f64 / limit as f64;
    (0..limit)
        .map(|k| all[(k as f64 * step) as usize].clone())
        .collect()
}

fn uniqueness() -> Outcome {
    let mut notes = Vec::new();
    for group in ["A3", "tA1"] {
        let sys = presets::system(group).unwrap();
        let exprs = expressions(&sys, 12, 500);
        let mut checked = 0;
        for expr in &exprs {
            let all = constant_masks_by_enumeration(&sys, expr).map_err(|e| e.to_string())?;
            let interval = sys
                .enumerate_interval(&sys.identity(), expr.element())
                .map_err(|e| e.to_string())?;
            let below: BTreeSet<&Element> = interval.elements().iter().collect();
            let found: BTreeSet<&Element> = all.keys().collect();
            ensure(found == below, || {
                format!(
                    "{group} {:?}: masks for {} elements, interval {}",
                    expr.letters(),
                    found.len(),
                    below.len()
                )
            })?;
            for (x, masks) in &all {
                let (greedy, _) = greedy_constant_mask(&sys, expr, x).map_err(|e| e.to_string())?;
                ensure(masks.as_slice() == [greedy], || {
                    format!(
                        "{group} {:?}: {} constant masks",
                        expr.letters(),
                        masks.len()
                    )
                })?;
                checked += 1;
            }
        }
        notes.push(format!(
            "{group} {} expressions {checked} masks",
            exprs.len()
        ));
    }
    Ok(notes.join(", "))
}

fn dot_determinism() -> Outcome {
    let sys = presets::system("A3").unwrap();
    let expr = ReducedExpression::new(&sys, vec![2, 1, 3, 2]).unwrap();
    let y = sys.product_of_word(&[2]).unwrap();
    let iv = sys.enumerate_interval(&y, expr.element()).unwrap();
    let m = match_interval(&sys, &y, &expr).unwrap();
    let first = render_dot(&sys, &iv, &m).map_err(|e| e.to_string())?;
    let second = render_dot(&sys, &iv, &m).map_err(|e| e.to_string())?;
    ensure(first == second, || "renders differ".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let files: Vec<Vec<u8>> = (0..2)
        .map(|k| {
            let path = dir.path().join(format!("run{k}.dot"));
            coxmask(&[
                "match",
                "-g",
                "A3",
                "2",
                "2 1 3 2",
                "--dot",
                path.to_str().unwrap(),
            ])?;
            std::fs::read(&path).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    ensure(files[0] == files[1], || "exported files differ".into())?;
    ensure(files[0] == first.as_bytes(), || {
        "CLI export differs from render".into()
    })?;

    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..iv.len()).map(|_| g.add_node(())).collect();
    let mut bold = 0;
    for line in first.lines().filter(|l| l.contains("->")) {
        let ids: Vec<usize> = line
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().unwrap())
            .collect();
        g.add_edge(nodes[ids[0]], nodes[ids[1]], ());
        bold += usize::from(line.contains("style=bold"));
    }
    ensure(bold == 5, || format!("{bold} bold edges"))?;
    ensure(!petgraph::algo::is_cyclic_directed(&g), || {
        "emitted digraph has a cycle".into()
    })?;
    Ok(format!(
        "{} bytes identical, {} edges, acyclic",
        first.len(),
        g.edge_count()
    ))
}

fn main() -> ExitCode {
    let finite = |g: &'static str| (g, 64, MINUTE);
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "A4 constant mask and trace",
            SECOND,
            Box::new(a4_constant_mask),
        ),
        (
            2,
            "relative-mask table of [s2, s2s1s3s2]",
            SECOND,
            Box::new(interval_table),
        ),
        (
            3,
            "matching of [s2, s2s1s3s2]",
            SECOND,
            Box::new(five_pairs),
        ),
        (4, "shifted descents", SECOND, Box::new(shifted_descents)),
        (
            5,
            "exhaustive finite groups",
            15 * MINUTE,
            Box::new(move || {
                exhaustive(
                    &[
                        finite("A3"),
                        finite("B3"),
                        finite("G2"),
                        finite("I2_5"),
                        finite("I2_7"),
                        ("H3", 64, 10 * MINUTE),
                    ],
                    &PHI_CHECKS,
                )
            }),
        ),
        (
            6,
            "affine groups up to length 8",
            10 * MINUTE,
            Box::new(|| {
                exhaustive(
                    &[("tA1", 8, 5 * MINUTE), ("tA2", 8, 5 * MINUTE)],
                    &PHI_CHECKS,
                )
            }),
        ),
        (
            7,
            "constant-mask uniqueness",
            5 * MINUTE,
            Box::new(uniqueness),
        ),
        (
            8,
            "bruhat_leq against subword search",
            2 * MINUTE,
            Box::new(|| {
                let groups = [("A3", 8, MINUTE), ("B3", 8, MINUTE), ("tA1", 8, MINUTE)];
                exhaustive(&groups, &[Check::Leq])
            }),
        ),
        (
            9,
            "largest-label matching agrees",
            5 * MINUTE,
            Box::new(move || {
                let groups = ["A3", "B2", "B3", "G2", "I2_5"].map(finite);
                exhaustive(&groups, &[Check::Rw])
            }),
        ),
        (
            10,
            "lifting property",
            MINUTE,
            Box::new(|| exhaustive(&[("A3", 8, MINUTE), ("tA1", 8, MINUTE)], &[Check::Lifting])),
        ),
        (
            11,
            "DOT determinism and acyclicity",
            10 * SECOND,
            Box::new(dot_determinism),
        ),
    ];

    let mut failed = 0;
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(note) if took > budget => Err(format!("{note}; took {took:.1?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(note) => println!("criterion {n:>2}: PASS  {name} ({note}) [{took:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {name} [{took:.2?}]");
                for line in why.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
