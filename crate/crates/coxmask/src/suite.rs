//! Exhaustive property checks over every pair `y ≤ w` up to a length bound.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use coxmask_core::oracle::{
    constant_masks_by_enumeration, leq_oracle, mobius_oracle, mobius_via_matching, ORACLE_MAX_LEN,
};
use coxmask_core::{
    acyclicity_check, apply_phi, defect_profile, evaluate_mask, find_move, greedy_constant_mask,
    interval_as_relative_masks, mask_join, match_interval, rw_match, xmask_of, CoxeterSystem,
    Element, Error as CoreError, HasseInterval, Mask, Matching, ReducedExpression, RelativeMask,
    DEFAULT_MAX_LENGTH,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::word::format_word;

const RESOURCE_LINES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Masks,
    Relative,
    Matching,
    Mobius,
    Acyclic,
    Rw,
    Lifting,
    Leq,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Masks,
        Check::Relative,
        Check::Matching,
        Check::Mobius,
        Check::Acyclic,
        Check::Rw,
        Check::Lifting,
        Check::Leq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Masks => "masks",
            Check::Relative => "relative",
            Check::Matching => "matching",
            Check::Mobius => "mobius",
            Check::Acyclic => "acyclic",
            Check::Rw => "rw",
            Check::Lifting => "lifting",
            Check::Leq => "leq",
        }
    }

    /// Comma-separated names; `all` selects every check, an empty string none.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(tok.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub group: GroupSpec,
    /// Longest `w` enumerated. Finite groups stop at the longest element.
    pub max_length: usize,
    pub checks: Vec<Check>,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub cases: u64,
    pub failures: u64,
    /// Cases abandoned on a length guard, overflow or precision error.
    pub resource_errors: u64,
}

/// Everything needed to reproduce a failing case from the command line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub check: Check,
    pub group: String,
    pub w: String,
    pub y: String,
    pub mask: Option<String>,
    pub position: Option<usize>,
    pub resource: bool,
    pub message: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.resource { "resource" } else { "FAIL" };
        write!(
            f,
            "{kind} {}: group {} y \"{}\" w \"{}\"",
            self.check, self.group, self.y, self.w
        )?;
        if let Some(mask) = &self.mask {
            write!(f, " mask [{mask}]")?;
        }
        if let Some(j) = self.position {
            write!(f, " position {j}")?;
        }
        write!(f, ": {}", self.message)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub group: String,
    pub max_length: usize,
    pub elements: usize,
    pub pairs: usize,
    pub checks: BTreeMap<Check, CheckCounts>,
    pub witnesses: Vec<Witness>,
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.failures).sum()
    }

    pub fn resource_errors(&self) -> u64 {
        self.checks.values().map(|c| c.resource_errors).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.failures() == 0
    }

    /// Line-oriented summary: one line per check, every failure witness, the
    /// first few resource errors, then totals.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "group {}, max length {}: {} elements, {} pairs\n",
            self.group, self.max_length, self.elements, self.pairs
        );
        for (check, c) in &self.checks {
            out += &format!(
                "{check:<9} {:>8} cases {:>6} failures {:>6} resource errors\n",
                c.cases, c.failures, c.resource_errors
            );
        }
        for w in self.witnesses.iter().filter(|w| !w.resource) {
            out += &format!("{w}\n");
        }
        let resource: Vec<&Witness> = self.witnesses.iter().filter(|w| w.resource).collect();
        for w in resource.iter().take(RESOURCE_LINES) {
            out += &format!("{w}\n");
        }
        if resource.len() > RESOURCE_LINES {
            out += &format!(
                "... {} more resource errors\n",
                resource.len() - RESOURCE_LINES
            );
        }
        out += &format!(
            "{} failures, {} resource errors in {:.2} s\n",
            self.failures(),
            self.resource_errors(),
            self.wall_time_secs
        );
        out
    }

    /// The report minus wall time, for comparing runs.
    pub fn fingerprint(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_secs = 0.0;
        serde_json::to_string(&copy).expect("report serializes")
    }
}

fn is_resource(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::MaxLength { .. } | CoreError::Overflow | CoreError::Precision { .. }
    )
}

#[derive(Debug)]
struct Problem {
    mask: Option<String>,
    position: Option<usize>,
    message: String,
    resource: bool,
}

impl From<CoreError> for Problem {
    fn from(e: CoreError) -> Self {
        Problem {
            mask: None,
            position: None,
            resource: is_resource(&e),
            message: e.to_string(),
        }
    }
}

fn fail(message: impl Into<String>) -> Problem {
    Problem {
        mask: None,
        position: None,
        message: message.into(),
        resource: false,
    }
}

fn at_mask(rm: &RelativeMask, position: Option<usize>, message: impl Into<String>) -> Problem {
    Problem {
        mask: Some(rm.labels().join(" ")),
        position,
        message: message.into(),
        resource: false,
    }
}

fn mask_text(m: &Mask) -> String {
    m.bits()
        .iter()
        .map(|&b| if b { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(" ")
}

type Outcome = std::result::Result<(), Problem>;

/// Shared, lazily computed data for one pair `y ≤ w`.
struct Case<'a> {
    sys: &'a CoxeterSystem,
    ball: &'a [Element],
    y: &'a Element,
    expr: ReducedExpression,
    interval: Option<HasseInterval>,
    matching: Option<Matching>,
}

impl Case<'_> {
    fn w(&self) -> &Element {
        self.expr.element()
    }

    fn interval(&mut self) -> std::result::Result<&HasseInterval, Problem> {
        if self.interval.is_none() {
            self.interval = Some(self.sys.enumerate_interval(self.y, self.expr.element())?);
        }
        Ok(self.interval.as_ref().unwrap())
    }

    fn matching(&mut self) -> std::result::Result<&Matching, Problem> {
        if self.matching.is_none() {
            self.matching = Some(match_interval(self.sys, self.y, &self.expr)?);
        }
        Ok(self.matching.as_ref().unwrap())
    }

    fn run(&mut self, check: Check) -> Outcome {
        match check {
            Check::Masks => self.masks(),
            Check::Relative => self.relative(),
            Check::Matching => self.matching_check(),
            Check::Mobius => self.mobius(),
            Check::Acyclic => self.acyclic(),
            Check::Rw => self.rw(),
            Check::Lifting => self.lifting(),
            Check::Leq => self.leq(),
        }
    }

    /// Greedy mask of `y` is constant and evaluates to `y`. Once per `w`
    /// (at `y = e`): full enumeration finds exactly the greedy masks, the
    /// greedy algorithm succeeds exactly on elements below `w`, and joins of
    /// constant masks stay constant and lie above both operands.
    fn masks(&mut self) -> Outcome {
        let (sys, y) = (self.sys, self.y);
        let (mask, trace) = greedy_constant_mask(sys, &self.expr, y)?;
        let profile = defect_profile(sys, &self.expr, &mask)?;
        if let Some(&(j, _)) = profile.defects().first() {
            return Err(Problem {
                mask: Some(mask_text(&mask)),
                position: Some(j),
                message: "greedy mask has a defect".into(),
                resource: false,
            });
        }
        if evaluate_mask(sys, &self.expr, &mask)?.element() != y
            || mask.count_ones() != y.length()
            || trace.remainder(trace.len()) != y
            || !trace.final_remainder().is_identity()
        {
            return Err(fail("greedy mask does not encode y"));
        }
        if !y.is_identity() || self.expr.len() > ORACLE_MAX_LEN {
            return Ok(());
        }
        let all = constant_masks_by_enumeration(sys, &self.expr)?;
        if all.len() != self.interval()?.len() {
            return Err(fail(format!(
                "{} elements carry constant masks, interval has {}",
                all.len(),
                self.interval()?.len()
            )));
        }
        for (x, masks) in &all {
            let (greedy, _) = greedy_constant_mask(sys, &self.expr, x)?;
            if masks.as_slice() != [greedy.clone()] {
                return Err(Problem {
                    mask: Some(mask_text(&greedy)),
                    position: None,
                    message: format!("{} constant masks found for one element", masks.len()),
                    resource: false,
                });
            }
        }
        let w = self.w().clone();
        for x in self.ball.iter().take_while(|x| x.length() <= w.length()) {
            let greedy = match greedy_constant_mask(sys, &self.expr, x) {
                Ok(_) => true,
                Err(CoreError::NotBelow(_)) => false,
                Err(e) => return Err(e.into()),
            };
            if greedy != sys.bruhat_leq(x, &w)? {
                return Err(fail("greedy algorithm and Bruhat order disagree"));
            }
        }
        let masks: Vec<&Mask> = all.values().flatten().collect();
        if masks.len() <= 64 {
            for (i, a) in masks.iter().enumerate() {
                for b in &masks[i + 1..] {
                    let join = mask_join(sys, &self.expr, a, b)?;
                    let top = evaluate_mask(sys, &self.expr, &join)?;
                    let below = |m: &Mask| -> std::result::Result<bool, CoreError> {
                        sys.bruhat_leq(evaluate_mask(sys, &self.expr, m)?.element(), top.element())
                    };
                    let message = if !defect_profile(sys, &self.expr, &join)?.is_empty() {
                        "join of constant masks has a defect"
                    } else if !below(a)? || !below(b)? {
                        "join evaluates below one of its operands"
                    } else {
                        continue;
                    };
                    return Err(Problem {
                        mask: Some(mask_text(&join)),
                        position: None,
                        message: message.into(),
                        resource: false,
                    });
                }
            }
        }
        Ok(())
    }

    fn relative(&mut self) -> Outcome {
        let (sys, y) = (self.sys, self.y);
        let map = interval_as_relative_masks(sys, y, &self.expr)?;
        if map.len() != self.interval()?.len() {
            return Err(fail("relative masks do not cover the interval"));
        }
        for (x, rm) in &map {
            if let Err(e) = rm.validate() {
                return Err(at_mask(rm, None, e.to_string()));
            }
            if rm.x_element() != x || rm.element() != y {
                return Err(at_mask(rm, None, "mask does not encode (x, y)"));
            }
            let (tau, _) = greedy_constant_mask(sys, &self.expr, x)?;
            if xmask_of(rm) != tau {
                return Err(at_mask(
                    rm,
                    None,
                    "X-mask differs from the constant mask of x",
                ));
            }
            let ones = rm
                .entries()
                .iter()
                .filter(|&&e| e == coxmask_core::Entry::One)
                .count();
            if ones != y.length() || rm.len() - rm.x_count() != x.length() {
                return Err(at_mask(rm, None, "entry counts do not match lengths"));
            }
        }
        Ok(())
    }

    /// Involution, validity, preserved prefixes, the cover property and
    /// completeness.
    fn matching_check(&mut self) -> Outcome {
        let (sys, y) = (self.sys, self.y);
        let map = interval_as_relative_masks(sys, y, &self.expr)?;
        for rm in map.values() {
            let mv = match find_move(sys, rm) {
                Err(CoreError::NoMove) => {
                    if !rm.is_all_ones() {
                        return Err(at_mask(rm, None, "no move on a mask with 0 or X entries"));
                    }
                    continue;
                }
                other => other?,
            };
            let j = Some(mv.position);
            let img = apply_phi(sys, rm)?;
            if let Err(e) = img.validate() {
                return Err(at_mask(rm, j, format!("image is invalid: {e}")));
            }
            if img.element() != y {
                return Err(at_mask(rm, j, "image encodes a different y"));
            }
            if (mv.position..=rm.len()).any(|k| img.prefix(k) != rm.prefix(k)) {
                return Err(at_mask(rm, j, "prefix products right of the move changed"));
            }
            let (a, b) = (xmask_of(rm), xmask_of(&img));
            let diff: Vec<usize> = (1..=rm.len()).filter(|&k| a.get(k) != b.get(k)).collect();
            if diff != [mv.position] {
                return Err(at_mask(rm, j, format!("X-mask changes at {diff:?}")));
            }
            let back = apply_phi(sys, &img)?;
            if back.entries() != rm.entries() {
                return Err(at_mask(rm, j, "phi is not an involution here"));
            }
            let (x, x2) = (rm.x_element(), img.x_element());
            let (upper, lower) = if x.length() > x2.length() {
                (x, x2)
            } else {
                (x2, x)
            };
            if !self.interval()?.is_cover(upper, lower) {
                return Err(at_mask(rm, j, "matched elements do not form a cover"));
            }
        }
        let w = self.w().clone();
        let top = y == &w;
        let m = self.matching()?;
        let complete = if top {
            m.unmatched() == [w] && m.pairs().is_empty()
        } else {
            m.unmatched().is_empty()
        };
        if !complete {
            return Err(fail(format!("{} elements unmatched", m.unmatched().len())));
        }
        Ok(())
    }

    fn mobius(&mut self) -> Outcome {
        let sign = if (self.w().length() - self.y.length()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let mu = mobius_oracle(self.interval()?);
        if mu != sign {
            return Err(fail(format!(
                "mobius recursion gives {mu}, expected {sign}"
            )));
        }
        let report = mobius_via_matching(self.sys, self.y, &self.expr)?;
        let delta = i64::from(self.y == self.w());
        if report.survivor_sum != delta || report.mobius != sign {
            return Err(fail(format!(
                "survivor sum {} (expected {delta})",
                report.survivor_sum
            )));
        }
        Ok(())
    }

    fn acyclic(&mut self) -> Outcome {
        self.interval()?;
        self.matching()?;
        let (Some(interval), Some(m)) = (&self.interval, &self.matching) else {
            unreachable!()
        };
        match acyclicity_check(interval, m)? {
            None => Ok(()),
            Some(cycle) => Err(fail(format!(
                "directed cycle through {} elements",
                cycle.len()
            ))),
        }
    }

    fn rw(&mut self) -> Outcome {
        let rw = rw_match(self.sys, self.y, &self.expr)?;
        let phi = self.matching()?;
        if rw.pair_set() != phi.pair_set() {
            let differ = rw.pair_set().symmetric_difference(&phi.pair_set()).count();
            return Err(fail(format!("{differ} pairs differ from the phi matching")));
        }
        Ok(())
    }

    /// For `y < w`, a right descent `s` of `w` that is an ascent of `y` gives
    /// `ys ≤ w` and `y ≤ ws`.
    fn lifting(&mut self) -> Outcome {
        let (sys, y) = (self.sys, self.y);
        let w = self.w();
        if y == w {
            return Ok(());
        }
        for s in w.right_descents() {
            if y.has_right_descent(s) {
                continue;
            }
            let ys = sys.mul_generator(y, s)?;
            let ws = sys.mul_generator(w, s)?;
            if !sys.bruhat_leq(&ys, w)? || !sys.bruhat_leq(y, &ws)? {
                return Err(Problem {
                    mask: None,
                    position: Some(s),
                    message: format!("lifting fails for s{s}"),
                    resource: false,
                });
            }
        }
        Ok(())
    }

    /// Once per `w`: the descent recursion against subword search for every
    /// enumerated `x` no longer than `w`.
    fn leq(&mut self) -> Outcome {
        if !self.y.is_identity() {
            return Ok(());
        }
        let w = self.w().clone();
        for x in self.ball.iter().take_while(|x| x.length() <= w.length()) {
            let fast = self.sys.bruhat_leq(x, &w)?;
            let slow = leq_oracle(self.sys, &self.expr, x)?;
            if fast != slow {
                let word = self.sys.canonical_word(x)?;
                return Err(fail(format!(
                    "x = \"{}\": bruhat_leq says {fast}, subword search says {slow}",
                    format_word(&word)
                )));
            }
        }
        Ok(())
    }
}

type CaseResult = Vec<(Check, std::result::Result<(), Witness>)>;

fn run_case(
    sys: &CoxeterSystem,
    ball: &[Element],
    group: &str,
    checks: &[Check],
    y: &Element,
    w: &Element,
) -> CaseResult {
    let words = sys
        .canonical_word(y)
        .and_then(|yw| Ok((yw, sys.canonical_word(w)?)));
    let witness = |check: Check, p: Problem, yw: &str, ww: &str| Witness {
        check,
        group: group.to_string(),
        w: ww.to_string(),
        y: yw.to_string(),
        mask: p.mask,
        position: p.position,
        resource: p.resource,
        message: p.message,
    };
    let (yw, ww) = match words {
        Ok(words) => words,
        Err(e) => {
            return checks
                .iter()
                .map(|&c| (c, Err(witness(c, e.clone().into(), "?", "?"))))
                .collect()
        }
    };
    let (ytext, wtext) = (format_word(&yw), format_word(&ww));
    let expr = match ReducedExpression::new(sys, ww) {
        Ok(expr) => expr,
        Err(e) => {
            return checks
                .iter()
                .map(|&c| (c, Err(witness(c, e.clone().into(), &ytext, &wtext))))
                .collect()
        }
    };
    let mut case = Case {
        sys,
        ball,
        y,
        expr,
        interval: None,
        matching: None,
    };
    checks
        .iter()
        .map(|&c| {
            let r = case.run(c).map_err(|p| witness(c, p, &ytext, &wtext));
            (c, r)
        })
        .collect()
}

/// Runs the selected checks on every pair `y ≤ w` with `l(w) ≤ max_length`.
/// The report is identical for any number of jobs, apart from wall time.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let guard = config.max_length.max(DEFAULT_MAX_LENGTH);
    let sys = config.group.system(guard)?;
    let group = config.group.to_string();
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");

    let ball = if checks.is_empty() {
        Vec::new()
    } else {
        sys.elements_up_to(config.max_length)?
    };
    let lower_sets: Vec<Vec<Element>> = pool.install(|| {
        ball.par_iter()
            .map(|w| {
                sys.enumerate_interval(&sys.identity(), w)
                    .map(|iv| iv.elements().to_vec())
            })
            .collect::<std::result::Result<_, _>>()
    })?;
    let pairs: Vec<(&Element, &Element)> = ball
        .iter()
        .zip(&lower_sets)
        .flat_map(|(w, ys)| ys.iter().map(move |y| (y, w)))
        .collect();

    let results: Vec<CaseResult> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(y, w)| run_case(&sys, &ball, &group, &checks, y, w))
            .collect()
    });

    let mut counts: BTreeMap<Check, CheckCounts> = checks
        .iter()
        .map(|&c| (c, CheckCounts::default()))
        .collect();
    let mut witnesses = Vec::new();
    for (check, r) in results.into_iter().flatten() {
        let c = counts.get_mut(&check).expect("selected check");
        c.cases += 1;
        if let Err(w) = r {
            if w.resource {
                c.resource_errors += 1;
            } else {
                c.failures += 1;
            }
            witnesses.push(w);
        }
    }
    witnesses.sort();

    Ok(SuiteReport {
        group,
        max_length: config.max_length,
        elements: ball.len(),
        pairs: pairs.len(),
        checks: counts,
        witnesses,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
