//! Left retractions of cycle algebras and the chain down to a self-injective algebra.
//!
//! For a normalized non-self-injective cycle sequence (`c_1 = p(A) = c_n - 1`)
//! the left retraction removes vertex `n`:
//!
//! ```text
//! c'_i = c_i - floor((c_i + i - 1) / n),   1 <= i <= n - 1.
//! ```
//!
//! Vertex `n` is merged into vertex `1` by `pi`, which maps cycles of `R(A)`
//! bijectively onto cycles of `R(L(A))` with the same sizes and weights.
//! Repeating this from a sequence with `p(A) > n(A)` ends at a constant
//! sequence, whose cycle data has a closed form. That gives a second route to
//! the cycle data of `R(A)`, independent of walking the functional graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::ResolutionQuiver;
use crate::sequence::AdmissibleSequence;

/// Rotates a non-self-injective cycle sequence into normalized form.
///
/// Returns the normalized sequence and the rotation `r` applied. Among all
/// admissible starting positions the smallest is chosen.
pub fn normalize(a: &AdmissibleSequence) -> Result<(AdmissibleSequence, usize)> {
    a.require_cycle()?;
    if a.is_self_injective() {
        return Err(Error::AlreadySelfInjective);
    }
    let p = a.p_min();
    let n = a.n();
    // 1-based position i with c_i = p and c_{i-1} = p + 1; rotate it to the front.
    let i = (1..=n)
        .find(|&i| a.c(i) == p && a.c_wrapped(i as i64 - 1) == p + 1)
        .ok_or_else(|| {
            Error::InternalInvariantViolated(format!("no normalizing rotation for {a}"))
        })?;
    let r = i - 1;
    Ok((a.rotate(r)?, r))
}

/// The admissible sequence of the left retraction `L(A)` of a normalized sequence.
pub fn left_retract(a: &AdmissibleSequence) -> Result<AdmissibleSequence> {
    a.require_cycle()?;
    if a.is_self_injective() {
        return Err(Error::AlreadySelfInjective);
    }
    if !a.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = a.n();
    let entries: Vec<usize> = (1..n).map(|i| a.c(i) - (a.c(i) + i - 1) / n).collect();
    AdmissibleSequence::from_entries(&entries).map_err(|e| {
        Error::InternalInvariantViolated(format!("left retraction of {a} is not admissible: {e}"))
    })
}

/// `pi(i) = i` for `i < n` and `pi(n) = 1`.
pub fn pi(n: usize, i: usize) -> usize {
    if i == n {
        1
    } else {
        i
    }
}

/// The table of `pi: {1..n} -> {1..n-1}`.
pub fn pi_map(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::PiDomainTooSmall(n));
    }
    Ok((1..=n).map(|i| pi(n, i)).collect())
}

/// Whether `pi . f_A = f_{L(A)} . pi` on every vertex.
pub fn check_commuting_square(a: &AdmissibleSequence) -> Result<bool> {
    let l = left_retract(a)?;
    let n = a.n();
    let fa = ResolutionQuiver::of(a);
    let fl = ResolutionQuiver::of(&l);
    Ok((1..=n).all(|i| pi(n, fa.target(i)) == fl.target(pi(n, i))))
}

/// Cycle data shared by every cycle of `R(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleSummary {
    pub count: usize,
    pub size: usize,
    pub weight: usize,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Closed-form cycle data of the self-injective sequence `(c, ..., c)` of length `n`.
pub fn selfinjective_cycle_data(n: usize, c: usize) -> CycleSummary {
    let g = gcd(n, c);
    CycleSummary {
        count: g,
        size: n / g,
        weight: c / g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StepKind {
    Lift { t: usize },
    Rotate { r: usize },
    Retract,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionStep {
    #[serde(flatten)]
    pub kind: StepKind,
    pub input: AdmissibleSequence,
    pub output: AdmissibleSequence,
}

/// Audited path from a cycle algebra to a self-injective one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionChain {
    pub steps: Vec<RetractionStep>,
    pub terminal: AdmissibleSequence,
    /// Lift multiple applied before the first retraction.
    pub lift: usize,
}

impl RetractionChain {
    pub fn retract_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Retract)
            .count()
    }
}

/// Lifts once if `p(A) <= n(A)` (self-injective inputs included), then
/// alternates normalization and left retraction until the sequence is
/// constant. Identity rotations are omitted.
pub fn retraction_chain(a: &AdmissibleSequence) -> Result<RetractionChain> {
    a.require_cycle()?;
    let mut steps = Vec::new();
    let mut current = a.clone();
    let mut lift = 0;
    if current.p_min() <= current.n() {
        lift = 1;
        let lifted = current.lift(1)?;
        steps.push(RetractionStep {
            kind: StepKind::Lift { t: 1 },
            input: current,
            output: lifted.clone(),
        });
        current = lifted;
    }

    let max_retractions = a.n() - 1;
    while !current.is_self_injective() {
        if current.p_min() <= current.n() || !current.is_cycle() {
            return Err(Error::InternalInvariantViolated(format!(
                "p(A) > n(A) fails at {current} in the chain of {a}"
            )));
        }
        let (normalized, r) = normalize(&current)?;
        if r != 0 {
            steps.push(RetractionStep {
                kind: StepKind::Rotate { r },
                input: current,
                output: normalized.clone(),
            });
        }
        let retracted = left_retract(&normalized)?;
        steps.push(RetractionStep {
            kind: StepKind::Retract,
            input: normalized,
            output: retracted.clone(),
        });
        current = retracted;
        if steps.iter().filter(|s| s.kind == StepKind::Retract).count() > max_retractions {
            return Err(Error::InternalInvariantViolated(format!(
                "more than {max_retractions} retractions for {a}"
            )));
        }
    }
    if !current.is_cycle() {
        return Err(Error::InternalInvariantViolated(format!(
            "chain of {a} ended at non-cycle {current}"
        )));
    }
    Ok(RetractionChain {
        steps,
        terminal: current,
        lift,
    })
}

/// Cycle data of `R(A)` obtained through the retraction chain: closed form at
/// the self-injective end, then each lift is undone by subtracting the size
/// from the weight.
pub fn chain_cycle_summary(a: &AdmissibleSequence) -> Result<CycleSummary> {
    let chain = retraction_chain(a)?;
    summary_from_chain(&chain)
}

pub fn summary_from_chain(chain: &RetractionChain) -> Result<CycleSummary> {
    let t = &chain.terminal;
    let c = t.c(1);
    if t.entries().iter().any(|&v| v != c) {
        return Err(Error::InternalInvariantViolated(format!(
            "terminal sequence {t} is not constant"
        )));
    }
    let mut data = selfinjective_cycle_data(t.n(), c);
    let undo = chain.lift * data.size;
    if data.weight < undo {
        return Err(Error::InternalInvariantViolated(format!(
            "terminal weight {} smaller than lift correction {undo}",
            data.weight
        )));
    }
    data.weight -= undo;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> AdmissibleSequence {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&seq("3,4,3,3")), Ok((seq("3,3,3,4"), 2)));
        assert_eq!(normalize(&seq("2,3")), Ok((seq("2,3"), 0)));
        assert_eq!(normalize(&seq("5,5,5")), Err(Error::AlreadySelfInjective));
        assert_eq!(normalize(&seq("2,2,1")), Err(Error::NotCycleAlgebra));
        // Two candidate positions (1 and 3); the smaller wins.
        assert_eq!(normalize(&seq("2,3,2,3")), Ok((seq("2,3,2,3"), 0)));
        assert_eq!(normalize(&seq("3,2,3,2")), Ok((seq("2,3,2,3"), 1)));
    }

    #[test]
    fn left_retract_examples() {
        assert_eq!(left_retract(&seq("3,3,3,4")), Ok(seq("3,2,2")));
        assert_eq!(left_retract(&seq("4,5")), Ok(seq("2")));
        // p <= n: accepted standalone, lands on the semisimple line algebra.
        assert_eq!(left_retract(&seq("2,3")), Ok(seq("1")));
        assert_eq!(left_retract(&seq("3,4,3,3")), Err(Error::NotNormalized));
        assert_eq!(left_retract(&seq("4,4")), Err(Error::AlreadySelfInjective));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_map(4), Ok(vec![1, 2, 3, 1]));
        assert_eq!(pi_map(2), Ok(vec![1, 1]));
        assert_eq!(pi_map(5).unwrap()[2], 3);
        assert_eq!(pi_map(1), Err(Error::PiDomainTooSmall(1)));
    }

    #[test]
    fn commuting_square_examples() {
        assert_eq!(check_commuting_square(&seq("3,3,3,4")), Ok(true));
        assert_eq!(check_commuting_square(&seq("4,5")), Ok(true));
        assert_eq!(check_commuting_square(&seq("2,3")), Ok(true));
    }

    #[test]
    fn closed_form_examples() {
        let d = |count, size, weight| CycleSummary {
            count,
            size,
            weight,
        };
        assert_eq!(selfinjective_cycle_data(6, 4), d(2, 3, 2));
        assert_eq!(selfinjective_cycle_data(2, 2), d(2, 1, 1));
        assert_eq!(selfinjective_cycle_data(1, 2), d(1, 1, 2));
        assert_eq!(
            ResolutionQuiver::of(&seq("4,4,4,4,4,4")).table(),
            &[5, 6, 1, 2, 3, 4]
        );
    }

    #[test]
    fn chain_examples() {
        let chain = retraction_chain(&seq("2,3")).unwrap();
        assert_eq!(chain.lift, 1);
        assert_eq!(chain.steps.len(), 2);
        assert_eq!(chain.steps[0].kind, StepKind::Lift { t: 1 });
        assert_eq!(chain.steps[0].output, seq("4,5"));
        assert_eq!(chain.steps[1].kind, StepKind::Retract);
        assert_eq!(chain.steps[1].output, seq("2"));
        assert_eq!(chain.terminal, seq("2"));

        let chain = retraction_chain(&seq("4,4")).unwrap();
        assert!(chain.steps.is_empty());
        assert_eq!(chain.terminal, seq("4,4"));
        assert_eq!(chain.lift, 0);

        let chain = retraction_chain(&seq("3,3,3,4")).unwrap();
        assert_eq!(chain.steps[0].output, seq("7,7,7,8"));
        assert_eq!(chain.retract_count(), 3);
        assert!(chain.terminal.is_self_injective());

        assert_eq!(
            retraction_chain(&seq("2,2,1")).unwrap_err(),
            Error::NotCycleAlgebra
        );
    }

    #[test]
    fn self_injective_with_small_p_is_lifted() {
        let chain = retraction_chain(&seq("2,2,2")).unwrap();
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.terminal, seq("5,5,5"));
        assert_eq!(
            chain_cycle_summary(&seq("2,2,2")),
            Ok(selfinjective_cycle_data(3, 2))
        );
    }

    #[test]
    fn summary_examples() {
        let d = |count, size, weight| CycleSummary {
            count,
            size,
            weight,
        };
        assert_eq!(chain_cycle_summary(&seq("2,3")), Ok(d(1, 1, 1)));
        assert_eq!(chain_cycle_summary(&seq("3,3")), Ok(d(1, 2, 3)));
        assert_eq!(chain_cycle_summary(&seq("4,4")), Ok(d(2, 1, 2)));
        assert_eq!(chain_cycle_summary(&seq("3,3,3,4")), Ok(d(1, 1, 1)));
    }

    #[test]
    fn chain_serializes_steps_in_order() {
        let chain = retraction_chain(&seq("2,3")).unwrap();
        let json = serde_json::to_string(&chain.steps).unwrap();
        assert_eq!(
            json,
            r#"[{"kind":"lift","t":1,"input":[2,3],"output":[4,5]},{"kind":"retract","input":[4,5],"output":[2]}]"#
        );
    }
}
