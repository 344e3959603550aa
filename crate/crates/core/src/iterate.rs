//! Picard iteration and the gap-sequence decay machinery.
//!
//! [`picard`] walks `x, Tx, T²x, …` until the orbit revisits a point
//! (fixed point or longer cycle) or a step budget runs out, recording
//! the exact gap sequence `p_m = d(x_m, x_{m+1})`.
//!
//! [`gap_condition`] finds the least `ρ` with
//! `p_m ≤ ρ · max(p_{m-n+1}, …, p_{m-1})` for every window, and
//! [`envelope_check`] verifies the geometric envelope
//! `p_m ≤ ρ^{(m−n+2)/(n−1)} · P` that this window condition implies.
//! The envelope exponent is fractional, so the inequality is decided
//! exactly by raising both sides to the `(n−1)`-th power — an exact
//! rational comparison with no irrational roots.

use num_traits::{One, Zero};

use crate::classify::{coefficient_calculus, Coefficient, CoefficientRule};
use crate::error::Error;
use crate::map::SelfMap;
use crate::rat::{format_rat, rat_to_f64, Rat};
use crate::space::FiniteMetricSpace;

/// Why an iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// The orbit reached a point with `T(p) = p`; `step` is the index
    /// at which `p` first appeared.
    FixedPoint { point: usize, step: usize },
    /// The orbit re-entered an earlier point, closing a cycle of
    /// length ≥ 2 that it first reached at `entry_step`.
    Cycle {
        prime_period: usize,
        entry_step: usize,
    },
    /// `max_steps` applications elapsed without a revisit.
    BudgetExhausted,
}

/// A Picard trace: the visited points, the exact gaps between
/// consecutive iterates, and why iteration stopped.
///
/// The full point sequence is kept (not just the gaps) so that any
/// property-test failure involving a trace can be replayed point by
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub points: Vec<usize>,
    pub gaps: Vec<Rat>,
    pub termination: Termination,
}

/// Iterates `start, T start, T² start, …`, recording each point and
/// each gap `d(x_m, x_{m+1})`, until a point repeats (the repeat is
/// included, so a fixed-point trace ends with a zero gap) or until
/// `max_steps` applications of the map.
pub fn picard(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    start: usize,
    max_steps: usize,
) -> Result<IterationTrace, Error> {
    if map.size() != space.len() {
        return Err(Error::MapSpaceMismatch {
            map: map.size(),
            space: space.len(),
        });
    }
    if start >= space.len() {
        return Err(Error::PointOutOfRange {
            index: start,
            size: space.len(),
        });
    }
    if max_steps == 0 {
        return Err(Error::ZeroMaxSteps);
    }
    let mut first_seen = vec![usize::MAX; space.len()];
    first_seen[start] = 0;
    let mut points = vec![start];
    let mut gaps = Vec::new();
    let mut cur = start;
    let mut termination = Termination::BudgetExhausted;
    for _ in 0..max_steps {
        let next = map.apply(cur);
        gaps.push(space.dist(cur, next).clone());
        points.push(next);
        if first_seen[next] != usize::MAX {
            let entry_step = first_seen[next];
            let prime_period = (points.len() - 1) - entry_step;
            termination = if prime_period == 1 {
                Termination::FixedPoint {
                    point: next,
                    step: entry_step,
                }
            } else {
                Termination::Cycle {
                    prime_period,
                    entry_step,
                }
            };
            break;
        }
        first_seen[next] = points.len() - 1;
        cur = next;
    }
    Ok(IterationTrace {
        points,
        gaps,
        termination,
    })
}

/// Result of fitting the window condition to a gap sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapAnalysis {
    /// Window parameter: each gap is compared against the previous
    /// `n−1` gaps.
    pub n: usize,
    /// Least `ρ` satisfying every window constraint, or
    /// [`Coefficient::Infinite`] when some positive gap follows a
    /// window of zero gaps (no finite `ρ` works).
    pub rho_min: Coefficient,
    /// `P`: the maximum of the first `n−1` gaps, seeding the envelope.
    pub head_max: Rat,
    /// Whether the geometric envelope holds at `rho_min` — checkable
    /// only when `rho_min` is finite and below 1.
    pub envelope_ok: bool,
}

/// Computes the minimal `ρ` with
/// `p_m ≤ ρ · max(p_{m−n+1}, …, p_{m−1})` for all `m ≥ n−1`, treating
/// `0/0` windows as unconstraining and `positive/0` as infeasible,
/// plus the head maximum `P` and an envelope verdict at that minimal
/// `ρ`.
pub fn gap_condition(gaps: &[Rat], n: usize) -> Result<GapAnalysis, Error> {
    if n < 2 {
        return Err(Error::ArityTooSmall { n });
    }
    if gaps.len() < n {
        return Err(Error::ShortGapSequence { len: gaps.len(), n });
    }
    let mut rho_min = Coefficient::Finite(Rat::zero());
    for m in (n - 1)..gaps.len() {
        let window_max = gaps[m - (n - 1)..m]
            .iter()
            .max()
            .expect("window is non-empty for n >= 2");
        let ratio = Coefficient::ratio(&gaps[m], window_max);
        if ratio > rho_min {
            rho_min = ratio;
        }
        if rho_min == Coefficient::Infinite {
            break;
        }
    }
    let head_max = gaps[..n - 1]
        .iter()
        .max()
        .expect("head is non-empty for n >= 2")
        .clone();
    let envelope_ok = match rho_min.as_rat() {
        Some(rho) if *rho < Rat::one() => envelope_check(gaps, n, rho, &head_max)?.holds,
        _ => false,
    };
    Ok(GapAnalysis {
        n,
        rho_min,
        head_max,
        envelope_ok,
    })
}

/// Outcome of testing the geometric envelope against a gap sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnvelopeCheck {
    pub holds: bool,
    /// Index of the first gap exceeding its envelope value, when any.
    pub first_violation: Option<usize>,
}

/// Verifies `p_m ≤ ρ^{(m−n+2)/(n−1)} · P` for every `m ≥ n−1`.
///
/// The right side involves a fractional power, irrational for most
/// rational `ρ`, so both sides are raised to the `(n−1)`-th power and
/// compared exactly: `p_m^{n−1} ≤ ρ^{m−n+2} · P^{n−1}`. Both sides are
/// non-negative, so the powered comparison is equivalent.
pub fn envelope_check(
    gaps: &[Rat],
    n: usize,
    rho: &Rat,
    head_max: &Rat,
) -> Result<EnvelopeCheck, Error> {
    if n < 2 {
        return Err(Error::ArityTooSmall { n });
    }
    if *rho < Rat::zero() || *rho >= Rat::one() {
        return Err(Error::RhoOutOfRange {
            rho: format_rat(rho),
        });
    }
    if gaps.len() < n {
        return Err(Error::ShortGapSequence { len: gaps.len(), n });
    }
    let power = (n - 1) as i32;
    let head_powered = head_max.pow(power);
    // ρ^{m-n+2}, advanced incrementally; the exponent is 1 at m = n−1.
    let mut rho_powered = rho.clone();
    for m in (n - 1)..gaps.len() {
        let lhs = gaps[m].pow(power);
        let rhs = &rho_powered * &head_powered;
        if lhs > rhs {
            return Ok(EnvelopeCheck {
                holds: false,
                first_violation: Some(m),
            });
        }
        rho_powered *= rho;
    }
    Ok(EnvelopeCheck {
        holds: true,
        first_violation: None,
    })
}

/// Certificate that a Picard trace decays as the fixed-point theorem
/// predicts for an n-point coefficient `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyCertificate {
    pub n: usize,
    pub lambda: Rat,
    /// Predicted decay rate `ρ = (n−1)λ/(n−1−λ)`.
    pub rho: Rat,
    /// True when the trace has fewer than `n` gaps, so no window
    /// constraint exists and the prediction holds vacuously.
    pub vacuous: bool,
    pub gap_analysis: Option<GapAnalysis>,
    /// Envelope verdict at the predicted `ρ` (not at `rho_min`).
    pub envelope: Option<EnvelopeCheck>,
    /// Whether the trace obeys the predicted decay: every window ratio
    /// is at most `ρ` and the geometric envelope holds at `ρ`.
    pub predicted_decay: bool,
    /// Informational upper bound on the total remaining movement
    /// `Σ_{j≥n−1} p_j ≤ P·ρ^{1/(n−1)}/(1−ρ^{1/(n−1)})`, evaluated in
    /// floating point for display; no tightness is claimed.
    pub tail_bound_hint: Option<f64>,
}

/// Runs [`gap_condition`] and [`envelope_check`] against the decay
/// rate `ρ` predicted for an n-point coefficient `λ < (n−1)/n`, and
/// reports whether the trace's gaps obey it. Traces with fewer than
/// `n` gaps satisfy the prediction vacuously.
pub fn cauchy_certificate(
    trace: &IterationTrace,
    n: usize,
    lambda: &Rat,
) -> Result<CauchyCertificate, Error> {
    let rho = coefficient_calculus(lambda, n, CoefficientRule::GapDecayRate)?;
    if trace.gaps.len() < n {
        return Ok(CauchyCertificate {
            n,
            lambda: lambda.clone(),
            rho,
            vacuous: true,
            gap_analysis: None,
            envelope: None,
            predicted_decay: true,
            tail_bound_hint: None,
        });
    }
    let analysis = gap_condition(&trace.gaps, n)?;
    let envelope = envelope_check(&trace.gaps, n, &rho, &analysis.head_max)?;
    let rho_within = analysis.rho_min <= Coefficient::Finite(rho.clone());
    let predicted_decay = rho_within && envelope.holds;
    let tail_bound_hint = {
        let r = rat_to_f64(&rho).powf(1.0 / (n as f64 - 1.0));
        Some(rat_to_f64(&analysis.head_max) * r / (1.0 - r))
    };
    Ok(CauchyCertificate {
        n,
        lambda: lambda.clone(),
        rho,
        vacuous: false,
        gap_analysis: Some(analysis),
        envelope: Some(envelope),
        predicted_decay,
        tail_bound_hint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::SelfMap;
    use crate::rat::{rat, rat_int};
    use crate::space::example_family;

    fn gaps(values: &[i64]) -> Vec<Rat> {
        values.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn family_trace_reaches_the_fixed_point() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        let trace = picard(&space, &map, 3, 100).unwrap();
        assert_eq!(trace.points, vec![3, 0, 1, 2, 2]);
        assert_eq!(trace.gaps, gaps(&[10, 1, 1, 0]));
        assert_eq!(
            trace.termination,
            Termination::FixedPoint { point: 2, step: 3 }
        );
    }

    #[test]
    fn identity_trace_is_immediate() {
        let (space, _) = example_family(4, &rat_int(10)).unwrap();
        let id = SelfMap::new(4, vec![0, 1, 2, 3]).unwrap();
        let trace = picard(&space, &id, 1, 10).unwrap();
        assert_eq!(trace.points, vec![1, 1]);
        assert_eq!(trace.gaps, gaps(&[0]));
        assert_eq!(
            trace.termination,
            Termination::FixedPoint { point: 1, step: 0 }
        );
    }

    #[test]
    fn swap_trace_detects_the_two_cycle() {
        let (space, _) = example_family(3, &rat_int(2)).unwrap();
        let swap = SelfMap::new(3, vec![1, 0, 2]).unwrap();
        let trace = picard(&space, &swap, 0, 10).unwrap();
        assert_eq!(trace.points, vec![0, 1, 0]);
        assert_eq!(trace.gaps, gaps(&[1, 1]));
        assert_eq!(
            trace.termination,
            Termination::Cycle {
                prime_period: 2,
                entry_step: 0
            }
        );
    }

    #[test]
    fn budget_cuts_the_walk_short() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        let trace = picard(&space, &map, 3, 2).unwrap();
        assert_eq!(trace.points, vec![3, 0, 1]);
        assert_eq!(trace.termination, Termination::BudgetExhausted);
        assert_eq!(trace.gaps.len(), trace.points.len() - 1);
    }

    #[test]
    fn picard_argument_errors() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        assert!(matches!(
            picard(&space, &map, 3, 0),
            Err(Error::ZeroMaxSteps)
        ));
        assert!(matches!(
            picard(&space, &map, 9, 5),
            Err(Error::PointOutOfRange { index: 9, size: 4 })
        ));
    }

    #[test]
    fn gap_condition_on_the_family_trace() {
        let analysis = gap_condition(&gaps(&[10, 1, 1, 0]), 4).unwrap();
        assert_eq!(analysis.rho_min, Coefficient::Finite(Rat::zero()));
        assert_eq!(analysis.head_max, rat_int(10));
        assert!(analysis.envelope_ok);
    }

    #[test]
    fn constant_gaps_need_rho_one() {
        let analysis = gap_condition(&gaps(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(analysis.rho_min, Coefficient::Finite(rat_int(1)));
        assert_eq!(analysis.head_max, rat_int(1));
        assert!(!analysis.envelope_ok);
    }

    #[test]
    fn halving_gaps_fit_rho_one_half() {
        let analysis = gap_condition(&gaps(&[8, 4, 2, 1]), 2).unwrap();
        assert_eq!(analysis.rho_min, Coefficient::Finite(rat(1, 2)));
        assert_eq!(analysis.head_max, rat_int(8));
        assert!(analysis.envelope_ok);
    }

    #[test]
    fn positive_gap_after_zero_window_is_infeasible() {
        let analysis = gap_condition(&gaps(&[0, 5]), 2).unwrap();
        assert_eq!(analysis.rho_min, Coefficient::Infinite);
        assert!(!analysis.envelope_ok);
    }

    #[test]
    fn gap_condition_window_errors() {
        assert!(matches!(
            gap_condition(&gaps(&[1, 2]), 4),
            Err(Error::ShortGapSequence { len: 2, n: 4 })
        ));
        assert!(matches!(
            gap_condition(&gaps(&[1, 2]), 1),
            Err(Error::ArityTooSmall { n: 1 })
        ));
    }

    #[test]
    fn envelope_rejects_rho_outside_unit_interval() {
        let g = gaps(&[1, 1]);
        assert!(matches!(
            envelope_check(&g, 2, &rat_int(1), &rat_int(1)),
            Err(Error::RhoOutOfRange { .. })
        ));
        assert!(matches!(
            envelope_check(&g, 2, &rat(-1, 2), &rat_int(1)),
            Err(Error::RhoOutOfRange { .. })
        ));
    }

    #[test]
    fn envelope_flags_the_first_violation() {
        let check = envelope_check(&gaps(&[1, 1, 1, 1, 1]), 2, &rat(1, 2), &rat_int(1)).unwrap();
        assert!(!check.holds);
        assert_eq!(check.first_violation, Some(1));
    }

    #[test]
    fn envelope_accepts_exact_geometric_decay() {
        let check = envelope_check(&gaps(&[8, 4, 2, 1]), 2, &rat(1, 2), &rat_int(8)).unwrap();
        assert!(check.holds);
        assert_eq!(check.first_violation, None);
    }

    #[test]
    fn envelope_uses_exact_powered_comparison_for_fractional_exponents() {
        // n = 3: the envelope at m = 2 is p_2 ≤ ρ^{1/2}·P; with ρ = 1/2,
        // P = 1 that is 0.7071…, so p_2 = 707/1000 passes and 708/1000
        // fails — a distinction floats at coarse precision could miss.
        let ok = vec![rat_int(1), rat_int(1), rat(707, 1000)];
        let bad = vec![rat_int(1), rat_int(1), rat(708, 1000)];
        assert!(
            envelope_check(&ok, 3, &rat(1, 2), &rat_int(1))
                .unwrap()
                .holds
        );
        let check = envelope_check(&bad, 3, &rat(1, 2), &rat_int(1)).unwrap();
        assert!(!check.holds);
        assert_eq!(check.first_violation, Some(2));
    }

    #[test]
    fn certificate_on_the_family_trace() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        let trace = picard(&space, &map, 3, 100).unwrap();
        let cert = cauchy_certificate(&trace, 4, &rat(5, 12)).unwrap();
        assert_eq!(cert.rho, rat(15, 31));
        assert!(!cert.vacuous);
        assert!(cert.predicted_decay);
        assert_eq!(
            cert.gap_analysis.as_ref().unwrap().rho_min,
            Coefficient::Finite(Rat::zero())
        );
        assert!(cert.envelope.unwrap().holds);
        let hint = cert.tail_bound_hint.unwrap();
        assert!(hint.is_finite() && hint > 0.0);
    }

    #[test]
    fn certificate_is_vacuous_on_short_traces() {
        let (space, _) = example_family(4, &rat_int(10)).unwrap();
        let constant = SelfMap::new(4, vec![2, 2, 2, 2]).unwrap();
        let trace = picard(&space, &constant, 0, 100).unwrap();
        assert_eq!(trace.gaps.len(), 2);
        let cert = cauchy_certificate(&trace, 4, &rat(5, 12)).unwrap();
        assert!(cert.vacuous);
        assert!(cert.predicted_decay);
        assert!(cert.gap_analysis.is_none());
    }

    #[test]
    fn certificate_rejects_lambda_outside_domain() {
        let (space, map) = example_family(4, &rat_int(10)).unwrap();
        let trace = picard(&space, &map, 3, 100).unwrap();
        assert!(matches!(
            cauchy_certificate(&trace, 4, &rat(3, 4)),
            Err(Error::CoefficientOutOfDomain { .. })
        ));
    }

    #[test]
    fn certificate_reports_failed_prediction_on_cycles() {
        let (space, _) = example_family(3, &rat_int(2)).unwrap();
        let shift = SelfMap::new(3, vec![1, 2, 0]).unwrap();
        let trace = picard(&space, &shift, 0, 100).unwrap();
        // gaps are (1, 2, 2, ...? ) — all positive, no decay
        let cert = cauchy_certificate(&trace, 2, &rat(1, 4)).unwrap();
        assert!(!cert.vacuous);
        assert!(!cert.predicted_decay);
    }
}
