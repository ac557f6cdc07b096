//! Exhaustive verification of the structural claims about resolution quivers
//! over bounded families of admissible sequences.
//!
//! Every check returns a [`CheckOutcome`]; failures carry the input sequence
//! and the two conflicting values so they can be replayed from the CLI.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::quiver::{cycles_of, ResolutionQuiver};
use crate::retraction::{
    chain_cycle_summary, check_commuting_square, left_retract, pi, CycleSummary,
};
use crate::sequence::{AdmissibleSequence, Kind};
use crate::uniserial::{gamma, global_dim, simple_inj_dims, simple_proj_dims, HomDim};

/// Every valid sequence with `n <= n_max` and entries `<= c_max`, each once,
/// ordered by length and then lexicographically.
pub fn enumerate_admissible(
    n_max: usize,
    c_max: usize,
) -> impl Iterator<Item = AdmissibleSequence> {
    (1..=n_max).flat_map(move |n| enumerate_length(n, c_max))
}

fn enumerate_length(n: usize, c_max: usize) -> Vec<AdmissibleSequence> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend(n, c_max, &mut prefix, &mut out);
    out
}

// Depth-first over prefixes satisfying c_{i+1} >= c_i - 1; the cyclic closure
// and the kind rules are left to `validate` at the leaves.
fn extend(n: usize, c_max: usize, prefix: &mut Vec<usize>, out: &mut Vec<AdmissibleSequence>) {
    if prefix.len() == n {
        if let Ok(a) = AdmissibleSequence::from_entries(prefix) {
            out.push(a);
        }
        return;
    }
    let last = prefix.len() + 1 == n;
    let lo = match prefix.last() {
        Some(&prev) => prev.saturating_sub(1).max(1),
        None => 1,
    };
    for v in lo..=c_max {
        // Only the last entry (or a lone entry) may be 1.
        if v == 1 && !last {
            continue;
        }
        prefix.push(v);
        extend(n, c_max, prefix, out);
        prefix.pop();
    }
}

/// Claims checked by [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// All cycles of `R(A)` share one (size, weight) pair.
    UniformCycles,
    /// A loop forces every cycle to be a loop.
    LoopConsequence,
    /// One cycle per connected component.
    UniqueCyclePerComponent,
    /// `n * w(C) = sum of c_k over C`, by two routes.
    WeightIntegrality,
    /// `gamma(S_i) = S_{f(i)}` for cycle algebras.
    GammaMatchesF,
    /// Lifting by `n` keeps `f` and adds the size to each weight.
    Shift,
    /// `pi . f_A = f_{L(A)} . pi` for normalized sequences.
    CommutingSquare,
    /// `c'_{pi(i)} + i = k(n-1) + j` whenever `c_i + i = kn + j`.
    RetractionQuotients,
    /// Cycles of `R(A)` and `R(L(A))` correspond with equal sizes and weights.
    CycleBijection,
    /// `R(A)` and `R(L(A))` have the same number of components.
    ComponentCount,
    /// Retraction-chain cycle data equals the directly computed one.
    ChainMatchesDirect,
    /// Counting statements relating cyclic vertices to infinite dimensions.
    Corollaries,
    /// Line algebras have finite global dimension.
    LineFiniteGlobalDim,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::UniformCycles,
        Claim::LoopConsequence,
        Claim::UniqueCyclePerComponent,
        Claim::WeightIntegrality,
        Claim::GammaMatchesF,
        Claim::Shift,
        Claim::CommutingSquare,
        Claim::RetractionQuotients,
        Claim::CycleBijection,
        Claim::ComponentCount,
        Claim::ChainMatchesDirect,
        Claim::Corollaries,
        Claim::LineFiniteGlobalDim,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Claim::UniformCycles => "uniform_cycles",
            Claim::LoopConsequence => "loop_consequence",
            Claim::UniqueCyclePerComponent => "unique_cycle_per_component",
            Claim::WeightIntegrality => "weight_integrality",
            Claim::GammaMatchesF => "gamma_matches_f",
            Claim::Shift => "shift",
            Claim::CommutingSquare => "commuting_square",
            Claim::RetractionQuotients => "retraction_quotients",
            Claim::CycleBijection => "cycle_bijection",
            Claim::ComponentCount => "component_count",
            Claim::ChainMatchesDirect => "chain_matches_direct",
            Claim::Corollaries => "corollaries",
            Claim::LineFiniteGlobalDim => "line_finite_global_dim",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub claim: Claim,
    pub sequence: AdmissibleSequence,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    NotApplicable,
    Fail { expected: String, actual: String },
}

impl CheckOutcome {
    fn expect_eq<T: PartialEq + fmt::Debug>(expected: T, actual: T) -> Self {
        if expected == actual {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            }
        }
    }

    fn fail(expected: impl Into<String>, actual: impl Into<String>) -> Self {
        CheckOutcome::Fail {
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

/// Cycle (size, weight) pairs of `R(A)` in canonical cycle order.
fn cycle_pairs(a: &AdmissibleSequence) -> Vec<(usize, usize)> {
    crate::quiver::cycles(a)
        .into_iter()
        .map(|c| (c.size, c.weight))
        .collect()
}

/// (count, size, weight) from the direct decomposition, if all cycles agree.
pub fn direct_cycle_summary(a: &AdmissibleSequence) -> Option<CycleSummary> {
    let pairs = cycle_pairs(a);
    let (size, weight) = pairs[0];
    pairs
        .iter()
        .all(|&p| p == (size, weight))
        .then_some(CycleSummary {
            count: pairs.len(),
            size,
            weight,
        })
}

pub fn check_proposition_1_1(a: &AdmissibleSequence) -> CheckOutcome {
    let mut pairs = cycle_pairs(a);
    pairs.sort_unstable();
    pairs.dedup();
    if pairs.len() == 1 {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail("one (size, weight) pair", format!("{pairs:?}"))
    }
}

pub fn check_loop_consequence(a: &AdmissibleSequence) -> CheckOutcome {
    let sizes: Vec<usize> = crate::quiver::cycles(a).iter().map(|c| c.size).collect();
    if sizes.contains(&1) && sizes.iter().any(|&s| s != 1) {
        CheckOutcome::fail("all cycles are loops", format!("sizes {sizes:?}"))
    } else {
        CheckOutcome::Pass
    }
}

pub fn check_unique_cycle_per_component(a: &AdmissibleSequence) -> CheckOutcome {
    let q = ResolutionQuiver::of(a);
    let d = q.decompose();
    let mut per_component = vec![0usize; d.component_count()];
    for cyc in d.cycles() {
        let id = d.component_of(cyc[0]);
        if id >= per_component.len() || cyc.iter().any(|&v| d.component_of(v) != id) {
            return CheckOutcome::fail("cycle inside one component", format!("{cyc:?}"));
        }
        per_component[id] += 1;
    }
    if per_component.iter().any(|&k| k != 1) {
        return CheckOutcome::fail(
            "exactly one cycle per component",
            format!("{per_component:?}"),
        );
    }
    // Every vertex reaches a cycle in its own component within n steps.
    let n = q.n();
    for i in 1..=n {
        let mut v = i;
        for _ in 0..n {
            v = q.target(v);
        }
        if !d.is_cyclic(v) || d.component_of(v) != d.component_of(i) {
            return CheckOutcome::fail(
                format!("vertex {i} reaches its component's cycle"),
                format!("reached {v}"),
            );
        }
    }
    let cyclic_total: usize = d.cycles().iter().map(Vec::len).sum();
    CheckOutcome::expect_eq(d.cyclic_vertices().len(), cyclic_total)
}

pub fn check_weight_integrality(a: &AdmissibleSequence) -> CheckOutcome {
    for c in crate::quiver::cycles(a) {
        let total: usize = c.vertices.iter().map(|&v| a.c(v)).sum();
        if a.n() * c.weight != total {
            return CheckOutcome::fail(
                format!("n * w = {total} on {:?}", c.vertices),
                format!("{} * {}", a.n(), c.weight),
            );
        }
    }
    CheckOutcome::Pass
}

pub fn check_gamma_matches_f(a: &AdmissibleSequence) -> CheckOutcome {
    if !a.is_cycle() {
        return CheckOutcome::NotApplicable;
    }
    let f = ResolutionQuiver::of(a);
    let gammas: Vec<usize> = (1..=a.n())
        .map(|i| gamma(a, i).expect("cycle algebra"))
        .collect();
    CheckOutcome::expect_eq(f.table().to_vec(), gammas)
}

pub fn check_shift(a: &AdmissibleSequence) -> CheckOutcome {
    if !a.is_cycle() {
        return CheckOutcome::NotApplicable;
    }
    let lifted = a.lift(1).expect("cycle algebra");
    let f = ResolutionQuiver::of(a);
    let f_lift = ResolutionQuiver::of(&lifted);
    if f != f_lift {
        return CheckOutcome::expect_eq(f.table().to_vec(), f_lift.table().to_vec());
    }
    let expected: Vec<(Vec<usize>, usize)> = crate::quiver::cycles(a)
        .into_iter()
        .map(|c| (c.vertices, c.weight + c.size))
        .collect();
    let actual: Vec<(Vec<usize>, usize)> = crate::quiver::cycles(&lifted)
        .into_iter()
        .map(|c| (c.vertices, c.weight))
        .collect();
    CheckOutcome::expect_eq(expected, actual)
}

fn retraction_applies(a: &AdmissibleSequence) -> bool {
    a.is_cycle() && !a.is_self_injective() && a.is_normalized()
}

pub fn check_commuting_square_outcome(a: &AdmissibleSequence) -> CheckOutcome {
    if !retraction_applies(a) {
        return CheckOutcome::NotApplicable;
    }
    match check_commuting_square(a) {
        Ok(true) => CheckOutcome::Pass,
        Ok(false) => CheckOutcome::fail("pi . f_A = f_L . pi", "square does not commute"),
        Err(e) => CheckOutcome::fail("left retraction", e.to_string()),
    }
}

/// Quotients of `c_i + i` by `n` survive the retraction with `n - 1` in place of `n`.
pub fn check_retraction_quotients(a: &AdmissibleSequence) -> CheckOutcome {
    if !retraction_applies(a) {
        return CheckOutcome::NotApplicable;
    }
    let l = match left_retract(a) {
        Ok(l) => l,
        Err(e) => return CheckOutcome::fail("left retraction", e.to_string()),
    };
    let n = a.n();
    for i in 1..=n {
        let total = a.c(i) + i;
        let k = (total - 1) / n;
        let j = total - k * n;
        let lhs = l.c(pi(n, i)) + i;
        let rhs = k * (n - 1) + j;
        if lhs != rhs {
            return CheckOutcome::fail(format!("c'_{} + {i} = {rhs}", pi(n, i)), format!("{lhs}"));
        }
    }
    CheckOutcome::Pass
}

pub fn check_lemma_2_2(a: &AdmissibleSequence) -> CheckOutcome {
    if !retraction_applies(a) {
        return CheckOutcome::NotApplicable;
    }
    let n = a.n();
    let l = match left_retract(a) {
        Ok(l) => l,
        Err(e) => return CheckOutcome::fail("left retraction", e.to_string()),
    };

    // pi(x) = pi(y) iff x = y or {x, y} = {1, n}.
    for x in 1..=n {
        for y in 1..=n {
            let merged = x == y || (x.min(y) == 1 && x.max(y) == n);
            if (pi(n, x) == pi(n, y)) != merged {
                return CheckOutcome::fail(
                    format!("pi identifies only 1 and {n}"),
                    format!("pi({x}) vs pi({y})"),
                );
            }
        }
    }

    let da = ResolutionQuiver::of(a).decompose();
    if da.is_cyclic(1) && da.is_cyclic(n) {
        return CheckOutcome::fail("vertices 1 and n not both cyclic", "both cyclic");
    }

    // Push every cycle of R(A) through pi; it must land exactly on a cycle of R(L(A)).
    let cycles_a = cycles_of(a, &da);
    let cycles_l = crate::quiver::cycles(&l);
    let mut image: Vec<(Vec<usize>, usize)> = Vec::with_capacity(cycles_a.len());
    for c in &cycles_a {
        let mapped: Vec<usize> = c.vertices.iter().map(|&v| pi(n, v)).collect();
        let mut distinct = mapped.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != mapped.len() {
            return CheckOutcome::fail("pi injective on cycle vertices", format!("{mapped:?}"));
        }
        let Some(target) = cycles_l
            .iter()
            .find(|t| t.size == mapped.len() && mapped.iter().all(|v| t.vertices.contains(v)))
        else {
            return CheckOutcome::fail(
                format!("image of {:?} is a cycle of R(L(A))", c.vertices),
                format!("{mapped:?}"),
            );
        };
        if target.weight != c.weight {
            return CheckOutcome::fail(
                format!("weight {} on {:?}", c.weight, target.vertices),
                format!("{}", target.weight),
            );
        }
        image.push((target.vertices.clone(), target.weight));
    }
    image.sort();
    image.dedup();
    CheckOutcome::expect_eq(cycles_l.len(), image.len())
}

pub fn check_component_count(a: &AdmissibleSequence) -> CheckOutcome {
    if !retraction_applies(a) {
        return CheckOutcome::NotApplicable;
    }
    match left_retract(a) {
        Ok(l) => CheckOutcome::expect_eq(
            ResolutionQuiver::of(a).decompose().component_count(),
            ResolutionQuiver::of(&l).decompose().component_count(),
        ),
        Err(e) => CheckOutcome::fail("left retraction", e.to_string()),
    }
}

pub fn check_chain_matches_direct(a: &AdmissibleSequence) -> CheckOutcome {
    if !a.is_cycle() {
        return CheckOutcome::NotApplicable;
    }
    let direct = direct_cycle_summary(a);
    match chain_cycle_summary(a) {
        Ok(chain) => CheckOutcome::expect_eq(direct, Some(chain)),
        Err(e) => CheckOutcome::fail(format!("{direct:?}"), e.to_string()),
    }
}

/// Applies only to cycle algebras of infinite global dimension.
pub fn check_corollaries(a: &AdmissibleSequence) -> CheckOutcome {
    if !a.is_cycle() || !global_dim(a).is_infinite() {
        return CheckOutcome::NotApplicable;
    }
    let d = ResolutionQuiver::of(a).decompose();
    let pd = simple_proj_dims(a);
    let id = simple_inj_dims(a).expect("cycle algebra");
    let cyclic = d.cyclic_vertices().len();
    let pd_inf = pd.iter().filter(|x| x.is_infinite()).count();
    let id_inf = id.iter().filter(|x| x.is_infinite()).count();
    if cyclic != pd_inf || pd_inf != id_inf {
        return CheckOutcome::fail(
            "#cyclic = #{pd = inf} = #{id = inf}",
            format!("{cyclic}, {pd_inf}, {id_inf}"),
        );
    }
    for i in 1..=a.n() {
        if d.is_cyclic(i) != id[i - 1].is_infinite() {
            return CheckOutcome::fail(
                format!("vertex {i}: cyclic iff id S_{i} = inf"),
                format!("cyclic = {}, id = {}", d.is_cyclic(i), id[i - 1]),
            );
        }
    }
    CheckOutcome::Pass
}

pub fn check_line_finite_global_dim(a: &AdmissibleSequence) -> CheckOutcome {
    if a.kind() != Kind::Line {
        return CheckOutcome::NotApplicable;
    }
    match global_dim(a) {
        HomDim::Finite(_) => CheckOutcome::Pass,
        HomDim::Infinite => CheckOutcome::fail("finite", "inf"),
    }
}

pub fn check(claim: Claim, a: &AdmissibleSequence) -> CheckOutcome {
    match claim {
        Claim::UniformCycles => check_proposition_1_1(a),
        Claim::LoopConsequence => check_loop_consequence(a),
        Claim::UniqueCyclePerComponent => check_unique_cycle_per_component(a),
        Claim::WeightIntegrality => check_weight_integrality(a),
        Claim::GammaMatchesF => check_gamma_matches_f(a),
        Claim::Shift => check_shift(a),
        Claim::CommutingSquare => check_commuting_square_outcome(a),
        Claim::RetractionQuotients => check_retraction_quotients(a),
        Claim::CycleBijection => check_lemma_2_2(a),
        Claim::ComponentCount => check_component_count(a),
        Claim::ChainMatchesDirect => check_chain_matches_direct(a),
        Claim::Corollaries => check_corollaries(a),
        Claim::LineFiniteGlobalDim => check_line_finite_global_dim(a),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub c_max: usize,
    pub sequences: usize,
    pub line_sequences: usize,
    pub cycle_sequences: usize,
    pub claims: BTreeMap<Claim, ClaimTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn tally(&self, claim: Claim) -> ClaimTally {
        self.claims.get(&claim).copied().unwrap_or_default()
    }

    /// Fixed-width summary, one row per claim.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "bounds: n <= {}, c <= {}; sequences: {} ({} line, {} cycle)\n",
            self.n_max, self.c_max, self.sequences, self.line_sequences, self.cycle_sequences
        );
        out.push_str(&format!(
            "{:<28} {:>9} {:>9} {:>9}\n",
            "claim", "passed", "failed", "n/a"
        ));
        for (claim, t) in &self.claims {
            out.push_str(&format!(
                "{:<28} {:>9} {:>9} {:>9}\n",
                claim.name(),
                t.passed,
                t.failed,
                t.not_applicable
            ));
        }
        for cx in &self.counterexamples {
            out.push_str(&format!(
                "FAIL {} on ({}): expected {}, got {}\n",
                cx.claim, cx.sequence, cx.expected, cx.actual
            ));
        }
        out
    }
}

/// Runs every claim over the full enumeration. Sequences are checked in
/// parallel; the merged report is independent of scheduling.
pub fn run_suite(n_max: usize, c_max: usize) -> VerificationReport {
    let sequences: Vec<AdmissibleSequence> = enumerate_admissible(n_max, c_max).collect();
    let outcomes: Vec<Vec<(Claim, CheckOutcome)>> = sequences
        .par_iter()
        .map(|a| Claim::ALL.iter().map(|&c| (c, check(c, a))).collect())
        .collect();

    let mut claims: BTreeMap<Claim, ClaimTally> = Claim::ALL
        .iter()
        .map(|&c| (c, ClaimTally::default()))
        .collect();
    let mut counterexamples = Vec::new();
    for (a, results) in sequences.iter().zip(outcomes) {
        for (claim, outcome) in results {
            let t = claims.get_mut(&claim).expect("all claims registered");
            match outcome {
                CheckOutcome::Pass => t.passed += 1,
                CheckOutcome::NotApplicable => t.not_applicable += 1,
                CheckOutcome::Fail { expected, actual } => {
                    t.failed += 1;
                    counterexamples.push(Counterexample {
                        claim,
                        sequence: a.clone(),
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    counterexamples.sort();

    let line_sequences = sequences.iter().filter(|a| a.kind() == Kind::Line).count();
    VerificationReport {
        n_max,
        c_max,
        sequences: sequences.len(),
        line_sequences,
        cycle_sequences: sequences.len() - line_sequences,
        claims,
        counterexamples,
    }
}
