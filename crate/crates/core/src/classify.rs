//! Contraction-class classifiers with exact minimal coefficients.
//!
//! Each classifier asks: what is the least coefficient for which the
//! class inequality holds on *every* admissible point tuple? Because
//! the inequality has the shape `left ≤ coeff · right`, the answer is
//! the maximum of `left/right` over all tuples, with two conventions:
//!
//! * `0/0` imposes no constraint and contributes ratio 0;
//! * `positive/0` makes the class infeasible — no finite coefficient
//!   works — reported as [`Coefficient::Infinite`].
//!
//! Membership then compares the minimal coefficient *strictly* against
//! the class bound (1/2 for the two-point self-distance condition,
//! `(n-1)/n` for the n-point condition, 1 for the total-pairwise
//! contraction): a map whose minimal coefficient equals the bound is a
//! non-member, because the classes are defined by half-open coefficient
//! intervals.
//!
//! Subset enumeration is lexicographic. Work is partitioned by leading
//! index and evaluated in parallel, then reduced with a deterministic
//! rule (largest ratio; ties broken toward the lexicographically
//! smallest witness), so reported witnesses are reproducible regardless
//! of thread scheduling. Within a partition, enumeration stops early
//! once an infeasible tuple appears — nothing can beat it.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Error;
use crate::map::SelfMap;
use crate::rat::{format_rat, rat, rat_int, Rat};
use crate::space::{total_pairwise_sum, FiniteMetricSpace};

/// A minimal class coefficient: an exact rational, or infinite when
/// some tuple has a positive left side against a zero right side.
///
/// The derived order places every finite value below `Infinite`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coefficient {
    Finite(Rat),
    Infinite,
}

impl Coefficient {
    /// Ratio of `numer` to `denom` under the classifier conventions:
    /// `0/0 → 0`, `positive/0 → Infinite`.
    pub fn ratio(numer: &Rat, denom: &Rat) -> Self {
        if denom.is_zero() {
            if numer.is_zero() {
                Coefficient::Finite(Rat::zero())
            } else {
                Coefficient::Infinite
            }
        } else {
            Coefficient::Finite(numer / denom)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Coefficient::Finite(_))
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Coefficient::Finite(r) => Some(r),
            Coefficient::Infinite => None,
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Finite(r) => write!(f, "{}", format_rat(r)),
            Coefficient::Infinite => write!(f, "infinite"),
        }
    }
}

/// The contraction classes this laboratory decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassName {
    /// `d(Tx,Ty) ≤ λ(d(x,Tx) + d(y,Ty))`, λ < 1/2, over all pairs.
    Kannan,
    /// `S(Tx₁,…,Txₙ) ≤ λ·Σ d(xᵢ,Txᵢ)`, λ < (n−1)/n, over all
    /// pairwise-distinct n-subsets.
    NPointKannan(usize),
    /// `S(Tx₁,…,Txₙ) ≤ α·S(x₁,…,xₙ)`, α < 1.
    TotalPairwise(usize),
    /// `S(Tx₁,…,Txₙ) ≤ G(d(x₁,Tx₁),…,d(xₙ,Txₙ))` for a caller-supplied
    /// combiner `G`. No coefficient bound; verdicts only.
    GKannan(usize),
    /// `S(Tx₁,…,Txₙ) ≤ Σ βᵢ(d(xᵢ,Txᵢ))·d(xᵢ,Txᵢ)` for caller-supplied
    /// weight functions `βᵢ`. No coefficient bound; verdicts only.
    BetaKannan(usize),
}

impl ClassName {
    /// The strict upper bound a minimal coefficient must stay below for
    /// membership; `None` for the verdict-only classes.
    pub fn bound(&self) -> Option<Rat> {
        match *self {
            ClassName::Kannan => Some(rat(1, 2)),
            ClassName::NPointKannan(n) => Some(rat(n as i64 - 1, n as i64)),
            ClassName::TotalPairwise(_) => Some(rat_int(1)),
            ClassName::GKannan(_) | ClassName::BetaKannan(_) => None,
        }
    }

    /// The tuple arity the class quantifies over.
    pub fn arity(&self) -> usize {
        match *self {
            ClassName::Kannan => 2,
            ClassName::NPointKannan(n)
            | ClassName::TotalPairwise(n)
            | ClassName::GKannan(n)
            | ClassName::BetaKannan(n) => n,
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassName::Kannan => write!(f, "kannan"),
            ClassName::NPointKannan(n) => write!(f, "npk({n})"),
            ClassName::TotalPairwise(n) => write!(f, "tpd({n})"),
            ClassName::GKannan(n) => write!(f, "g_kannan({n})"),
            ClassName::BetaKannan(n) => write!(f, "b_kannan({n})"),
        }
    }
}

/// Outcome of a coefficient classification: the exact minimal
/// coefficient, the class's strict bound, the resulting membership
/// verdict, and a tuple achieving the maximal ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub class_name: ClassName,
    pub min_coefficient: Coefficient,
    /// Strict upper bound for membership (`None` never occurs for the
    /// three coefficient classes produced here).
    pub bound: Option<Rat>,
    /// `min_coefficient < bound`, strictly.
    pub member: bool,
    /// Lexicographically smallest tuple achieving the maximal ratio,
    /// as ascending point indices.
    pub witness: Vec<usize>,
}

fn check_pair(space: &FiniteMetricSpace, map: &SelfMap) -> Result<(), Error> {
    if map.size() != space.len() {
        return Err(Error::MapSpaceMismatch {
            map: map.size(),
            space: space.len(),
        });
    }
    Ok(())
}

fn check_arity(space: &FiniteMetricSpace, n: usize) -> Result<(), Error> {
    if n < 2 || n > space.len() {
        return Err(Error::ArityOutOfRange {
            n,
            size: space.len(),
        });
    }
    Ok(())
}

/// Maximal ratio over all ascending `n`-subsets of `0..size`, with the
/// lexicographically smallest witness among argmax subsets.
///
/// Partitions by leading index run in parallel; each stops early once
/// it sees an infeasible tuple. The sequential fold over partition
/// results (in leading-index order) makes the overall witness
/// deterministic.
fn max_ratio_over_subsets<F>(size: usize, n: usize, ratio: F) -> (Coefficient, Vec<usize>)
where
    F: Fn(&[usize]) -> Coefficient + Sync,
{
    let per_partition: Vec<(Coefficient, Vec<usize>)> = (0..=size - n)
        .into_par_iter()
        .map(|lead| {
            let mut best: Option<(Coefficient, Vec<usize>)> = None;
            let mut tuple = Vec::with_capacity(n);
            for rest in (lead + 1..size).combinations(n - 1) {
                tuple.clear();
                tuple.push(lead);
                tuple.extend(rest);
                let r = ratio(&tuple);
                let infeasible = r == Coefficient::Infinite;
                if best.as_ref().is_none_or(|(b, _)| r > *b) {
                    best = Some((r, tuple.clone()));
                }
                if infeasible {
                    break;
                }
            }
            best.expect("each partition enumerates at least one subset")
        })
        .collect();
    per_partition
        .into_iter()
        .reduce(|acc, cand| if cand.0 > acc.0 { cand } else { acc })
        .expect("n <= size guarantees at least one partition")
}

fn report(
    class_name: ClassName,
    min_coefficient: Coefficient,
    witness: Vec<usize>,
) -> ClassificationReport {
    let bound = class_name.bound();
    let member = match (&min_coefficient, &bound) {
        (Coefficient::Finite(c), Some(b)) => c < b,
        _ => false,
    };
    ClassificationReport {
        class_name,
        min_coefficient,
        bound,
        member,
        witness,
    }
}

/// The ratio a pair contributes to the two-point self-distance
/// condition: `d(Tx,Ty) / (d(x,Tx) + d(y,Ty))`.
pub fn kannan_ratio(space: &FiniteMetricSpace, map: &SelfMap, x: usize, y: usize) -> Coefficient {
    let numer = space.dist(map.apply(x), map.apply(y));
    let denom = space.dist(x, map.apply(x)) + space.dist(y, map.apply(y));
    Coefficient::ratio(numer, &denom)
}

/// The ratio an ascending subset contributes to the n-point condition:
/// `S(images) / Σ d(xᵢ,Txᵢ)`. The image tuple is evaluated as a
/// multiset — collapsed points contribute zero distance.
pub fn npk_ratio(space: &FiniteMetricSpace, map: &SelfMap, subset: &[usize]) -> Coefficient {
    let images: Vec<usize> = subset.iter().map(|&i| map.apply(i)).collect();
    let numer = total_pairwise_sum(space, &images).expect("image tuple is valid");
    let denom: Rat = subset
        .iter()
        .map(|&i| space.dist(i, map.apply(i)))
        .fold(Rat::zero(), |acc, d| acc + d);
    Coefficient::ratio(&numer, &denom)
}

/// The ratio an ascending subset contributes to the total-pairwise
/// contraction: `S(images) / S(arguments)`. The denominator is positive
/// for distinct points, so this is always finite.
pub fn tpd_ratio(space: &FiniteMetricSpace, map: &SelfMap, subset: &[usize]) -> Coefficient {
    let images: Vec<usize> = subset.iter().map(|&i| map.apply(i)).collect();
    let numer = total_pairwise_sum(space, &images).expect("image tuple is valid");
    let denom = total_pairwise_sum(space, subset).expect("subset is valid");
    Coefficient::ratio(&numer, &denom)
}

/// Minimal coefficient for the two-point self-distance condition
/// `d(Tx,Ty) ≤ λ(d(x,Tx)+d(y,Ty))` over all unordered pairs; member
/// iff it is strictly below 1/2.
pub fn kannan_min_coefficient(
    space: &FiniteMetricSpace,
    map: &SelfMap,
) -> Result<ClassificationReport, Error> {
    check_pair(space, map)?;
    check_arity(space, 2)?;
    let (coeff, witness) = max_ratio_over_subsets(space.len(), 2, |pair| {
        kannan_ratio(space, map, pair[0], pair[1])
    });
    Ok(report(ClassName::Kannan, coeff, witness))
}

/// Minimal coefficient for the n-point condition
/// `S(Tx₁,…,Txₙ) ≤ λ·Σ d(xᵢ,Txᵢ)` over all pairwise-distinct
/// n-subsets; member iff strictly below `(n−1)/n`.
pub fn npk_min_coefficient(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    n: usize,
) -> Result<ClassificationReport, Error> {
    check_pair(space, map)?;
    check_arity(space, n)?;
    let (coeff, witness) =
        max_ratio_over_subsets(space.len(), n, |subset| npk_ratio(space, map, subset));
    Ok(report(ClassName::NPointKannan(n), coeff, witness))
}

/// Minimal coefficient for the total-pairwise contraction
/// `S(Tx₁,…,Txₙ) ≤ α·S(x₁,…,xₙ)`; member iff strictly below 1.
pub fn tpd_min_coefficient(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    n: usize,
) -> Result<ClassificationReport, Error> {
    check_pair(space, map)?;
    check_arity(space, n)?;
    let (coeff, witness) =
        max_ratio_over_subsets(space.len(), n, |subset| tpd_ratio(space, map, subset));
    Ok(report(ClassName::TotalPairwise(n), coeff, witness))
}

/// A failed instance of a verdict-only condition: the ordered point
/// assignment and the two sides of the inequality at it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionViolation {
    /// Point indices in the order they were assigned to positions
    /// `1..=n` of the condition.
    pub assignment: Vec<usize>,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Verdict for the combiner-based conditions: holds everywhere, or a
/// first violating assignment in deterministic enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVerdict {
    pub class_name: ClassName,
    pub holds: bool,
    pub violation: Option<ConditionViolation>,
}

/// Decides `S(Tx₁,…,Txₙ) ≤ G(d(x₁,Tx₁),…,d(xₙ,Txₙ))` for every
/// pairwise-distinct n-subset and every ordering of it.
///
/// All orderings are checked because `G` is a black box that may treat
/// its positions asymmetrically; for a symmetric `G` the extra
/// orderings are redundant but harmless. The left side depends only on
/// the subset (pairwise sums are order-free), so it is computed once
/// per subset.
///
/// Caller obligations, not machine-checkable for a black-box function:
/// `G(0,…,0) = 0` and continuity of `G` at the origin. `G` must map
/// into `[0, ∞)`; a negative return is a contract-violation error.
/// Enumeration is sequential — evaluating a caller's closure needs no
/// thread-safety promise from it.
pub fn classify_g_kannan<F>(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    n: usize,
    combiner: F,
) -> Result<ConditionVerdict, Error>
where
    F: Fn(&[Rat]) -> Rat,
{
    check_pair(space, map)?;
    check_arity(space, n)?;
    let class_name = ClassName::GKannan(n);
    for subset in (0..space.len()).combinations(n) {
        let images: Vec<usize> = subset.iter().map(|&i| map.apply(i)).collect();
        let lhs = total_pairwise_sum(space, &images).expect("image tuple is valid");
        for assignment in subset.iter().copied().permutations(n) {
            let args: Vec<Rat> = assignment
                .iter()
                .map(|&i| space.dist(i, map.apply(i)).clone())
                .collect();
            let rhs = combiner(&args);
            if rhs < Rat::zero() {
                return Err(Error::NegativeCombiner {
                    value: format_rat(&rhs),
                });
            }
            if lhs > rhs {
                return Ok(ConditionVerdict {
                    class_name,
                    holds: false,
                    violation: Some(ConditionViolation {
                        assignment,
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(ConditionVerdict {
        class_name,
        holds: true,
        violation: None,
    })
}

/// Decides `S(Tx₁,…,Txₙ) ≤ Σ βᵢ(d(xᵢ,Txᵢ))·d(xᵢ,Txᵢ)` for every
/// pairwise-distinct n-subset and every assignment of its points to
/// the `n` weight positions — the stronger, order-sensitive reading,
/// adopted because the weights may differ by position.
///
/// Caller obligations: each `βᵢ` maps `[0,∞)` into `[0,1)` with values
/// staying away from 1 in the limit; only non-negativity is enforced
/// here (a negative weight is a contract-violation error). Sequential
/// for the same reason as [`classify_g_kannan`].
pub fn classify_b_kannan(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    n: usize,
    betas: &[&dyn Fn(&Rat) -> Rat],
) -> Result<ConditionVerdict, Error> {
    check_pair(space, map)?;
    check_arity(space, n)?;
    if betas.len() != n {
        return Err(Error::BetaCountMismatch {
            betas: betas.len(),
            n,
        });
    }
    let class_name = ClassName::BetaKannan(n);
    for subset in (0..space.len()).combinations(n) {
        let images: Vec<usize> = subset.iter().map(|&i| map.apply(i)).collect();
        let lhs = total_pairwise_sum(space, &images).expect("image tuple is valid");
        for assignment in subset.iter().copied().permutations(n) {
            let mut rhs = Rat::zero();
            for (beta, &point) in betas.iter().zip(&assignment) {
                let t = space.dist(point, map.apply(point));
                let weight = beta(t);
                if weight < Rat::zero() {
                    return Err(Error::NegativeCombiner {
                        value: format_rat(&weight),
                    });
                }
                rhs += weight * t;
            }
            if lhs > rhs {
                return Ok(ConditionVerdict {
                    class_name,
                    holds: false,
                    violation: Some(ConditionViolation {
                        assignment,
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(ConditionVerdict {
        class_name,
        holds: true,
        violation: None,
    })
}

/// The closed-form coefficient transformations connecting the classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRule {
    /// A two-point coefficient `λ < 1/n` yields the n-point coefficient
    /// `λ(n−1)`, strictly below `(n−1)/n`.
    KannanToNPoint,
    /// An n-point coefficient `λ < (n−1)/n` yields the two-point
    /// coefficient `nλ/(2(n−1))`, strictly below 1/2. (As a class
    /// implication this needs every point to be an accumulation point,
    /// which is impossible in a finite space; the arithmetic transform
    /// is exposed on its own.)
    NPointToKannan,
    /// A total-pairwise coefficient `α < 1/(n+1)` yields the n-point
    /// coefficient `α(n−1)/(1−α)`, strictly below `(n−1)/n`.
    TpdToNPoint,
    /// An n-point coefficient `λ < (n−1)/n` yields the gap decay rate
    /// `ρ = (n−1)λ/(n−1−λ)`, strictly below 1.
    GapDecayRate,
}

impl CoefficientRule {
    pub fn name(&self) -> &'static str {
        match self {
            CoefficientRule::KannanToNPoint => "kannan_to_n_point",
            CoefficientRule::NPointToKannan => "n_point_to_kannan",
            CoefficientRule::TpdToNPoint => "tpd_to_n_point",
            CoefficientRule::GapDecayRate => "gap_decay_rate",
        }
    }

    /// Supremum of the rule's half-open input domain `[0, sup)`.
    pub fn domain_sup(&self, n: usize) -> Rat {
        let n = n as i64;
        match self {
            CoefficientRule::KannanToNPoint => rat(1, n),
            CoefficientRule::NPointToKannan | CoefficientRule::GapDecayRate => rat(n - 1, n),
            CoefficientRule::TpdToNPoint => rat(1, n + 1),
        }
    }

    /// Strict upper bound the output is guaranteed to stay below.
    pub fn target_bound(&self, n: usize) -> Rat {
        let n = n as i64;
        match self {
            CoefficientRule::KannanToNPoint | CoefficientRule::TpdToNPoint => rat(n - 1, n),
            CoefficientRule::NPointToKannan => rat(1, 2),
            CoefficientRule::GapDecayRate => rat_int(1),
        }
    }
}

impl fmt::Display for CoefficientRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Applies a coefficient transformation, enforcing its input domain.
pub fn coefficient_calculus(value: &Rat, n: usize, rule: CoefficientRule) -> Result<Rat, Error> {
    if n < 2 {
        return Err(Error::ArityTooSmall { n });
    }
    let sup = rule.domain_sup(n);
    if *value < Rat::zero() || *value >= sup {
        return Err(Error::CoefficientOutOfDomain {
            value: format_rat(value),
            sup: format_rat(&sup),
            rule: rule.name(),
        });
    }
    let n_rat = rat_int(n as i64);
    let n_minus_1 = rat_int(n as i64 - 1);
    Ok(match rule {
        CoefficientRule::KannanToNPoint => value * &n_minus_1,
        CoefficientRule::NPointToKannan => value * &n_rat / (rat_int(2) * &n_minus_1),
        CoefficientRule::TpdToNPoint => value * &n_minus_1 / (rat_int(1) - value),
        CoefficientRule::GapDecayRate => value * &n_minus_1 / (&n_minus_1 - value),
    })
}
