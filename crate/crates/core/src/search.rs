//! Seeded randomized search: instance generation, class-separation
//! mining, and property-test verification of the fixed-point theory.
//!
//! Everything here is a pure function of explicit seeds. A campaign
//! derives one sub-seed per trial, so trials are independent,
//! parallelizable, and individually replayable: every reported failure
//! carries the exact [`GeneratorConfig`] (with its derived seed) and
//! window arity needed to regenerate the instance.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{
    coefficient_calculus, kannan_min_coefficient, npk_min_coefficient, tpd_min_coefficient,
    ClassificationReport, Coefficient, CoefficientRule,
};
use crate::error::Error;
use crate::map::SelfMap;
use crate::rat::{rat, rat_int, Rat};
use crate::space::{example_family, metric_closure, FiniteMetricSpace};

/// Default denominator for random rational distances. A fixed modest
/// denominator keeps exact arithmetic bounded even after shortest-path
/// repair (path sums share the denominator).
pub const DEFAULT_DENOMINATOR: u64 = 840;

/// Default numerator ceiling for the closure scheme: raw entries range
/// over `(0, 4]`, wide enough that triangle violations (and hence real
/// repairs) are common.
pub const DEFAULT_MAX_NUMERATOR: u64 = 3360;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the per-trial sub-seed from a campaign seed. Deterministic
/// and well-mixed, so consecutive trials get decorrelated streams.
pub fn derive_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(seed).wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// How to build a random distance matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceScheme {
    /// Off-diagonal distances uniform over `{d/denominator : denominator ≤ d ≤ 2·denominator}`,
    /// i.e. rationals in `[1, 2]`. The triangle inequality is automatic
    /// (`max ≤ 2 ≤ min + min`), so no repair runs; the resulting spaces
    /// are nearly equilateral.
    #[serde(rename = "range_1_2")]
    Range1To2 {
        #[serde(default = "default_denominator")]
        denominator: u64,
    },
    /// Raw positive entries `p/denominator`, `1 ≤ p ≤ max_numerator`,
    /// repaired into a metric by shortest-path closure. Produces richer
    /// geometry than the range scheme; the two together reduce
    /// generation bias.
    Closure {
        #[serde(default = "default_denominator")]
        denominator: u64,
        #[serde(default = "default_max_numerator")]
        max_numerator: u64,
    },
    /// The deterministic worked family: `n` points, unit distances
    /// among the first `n−1`, distance `m > 1` to the last, with the
    /// shift-collapse map. Ignores `size`, `seed`, and the map scheme.
    ExampleFamily {
        n: usize,
        #[serde(with = "crate::rat::rat_serde")]
        m: Rat,
    },
}

fn default_denominator() -> u64 {
    DEFAULT_DENOMINATOR
}

fn default_max_numerator() -> u64 {
    DEFAULT_MAX_NUMERATOR
}

/// How to build a random self-map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapScheme {
    /// Every image drawn uniformly.
    UniformRandom,
    /// Each point is made fixed with probability 1/2, otherwise its
    /// image is uniform. Uniform maps on small spaces are rarely class
    /// members; biasing toward fixed points raises the rate of
    /// hypothesis-satisfying samples, which is what property tests
    /// need.
    FixedPointBiased,
}

/// A complete, reproducible recipe for one (space, map) instance:
/// the same config always yields the same pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub size: usize,
    pub scheme: SpaceScheme,
    pub map_scheme: MapScheme,
}

impl GeneratorConfig {
    /// Range scheme with default denominator and uniform maps.
    pub fn range(seed: u64, size: usize) -> Self {
        GeneratorConfig {
            seed,
            size,
            scheme: SpaceScheme::Range1To2 {
                denominator: DEFAULT_DENOMINATOR,
            },
            map_scheme: MapScheme::UniformRandom,
        }
    }

    /// Closure scheme with default parameters and uniform maps.
    pub fn closure(seed: u64, size: usize) -> Self {
        GeneratorConfig {
            seed,
            size,
            scheme: SpaceScheme::Closure {
                denominator: DEFAULT_DENOMINATOR,
                max_numerator: DEFAULT_MAX_NUMERATOR,
            },
            map_scheme: MapScheme::UniformRandom,
        }
    }

    /// The point count of the instance this config generates.
    pub fn effective_size(&self) -> usize {
        match &self.scheme {
            SpaceScheme::ExampleFamily { n, .. } => *n,
            _ => self.size,
        }
    }
}

fn range_space(rng: &mut ChaCha8Rng, size: usize, denominator: u64) -> FiniteMetricSpace {
    let denominator = denominator.max(1);
    let hi = denominator.saturating_mul(2);
    let mut dist = vec![vec![Rat::zero(); size]; size];
    for i in 0..size {
        for j in (i + 1)..size {
            let p = rng.gen_range(denominator..=hi);
            let d = Rat::new(p.into(), denominator.into());
            dist[i][j] = d.clone();
            dist[j][i] = d;
        }
    }
    FiniteMetricSpace::with_default_labels(dist)
        .expect("entries in [1,2] always satisfy the metric axioms")
}

fn closure_space(
    rng: &mut ChaCha8Rng,
    size: usize,
    denominator: u64,
    max_numerator: u64,
) -> FiniteMetricSpace {
    let denominator = denominator.max(1);
    let max_numerator = max_numerator.max(1);
    let mut raw = vec![vec![Rat::zero(); size]; size];
    for i in 0..size {
        for j in (i + 1)..size {
            let p = rng.gen_range(1..=max_numerator);
            let d = Rat::new(p.into(), denominator.into());
            raw[i][j] = d.clone();
            raw[j][i] = d;
        }
    }
    let repaired = metric_closure(&raw).expect("raw matrix is symmetric and positive");
    FiniteMetricSpace::with_default_labels(repaired)
        .expect("shortest-path closure of a positive matrix is a metric")
}

fn random_map(rng: &mut ChaCha8Rng, size: usize, scheme: MapScheme) -> SelfMap {
    let table: Vec<usize> = (0..size)
        .map(|i| match scheme {
            MapScheme::UniformRandom => rng.gen_range(0..size),
            MapScheme::FixedPointBiased => {
                if rng.gen_bool(0.5) {
                    i
                } else {
                    rng.gen_range(0..size)
                }
            }
        })
        .collect();
    SelfMap::new(size, table).expect("sampled images are in range")
}

/// Generates the instance a config describes. Deterministic: identical
/// configs yield identical pairs. The space draws precede the map
/// draws on a single seeded stream.
pub fn generate(config: &GeneratorConfig) -> Result<(FiniteMetricSpace, SelfMap), Error> {
    if let SpaceScheme::ExampleFamily { n, m } = &config.scheme {
        return example_family(*n, m);
    }
    if config.size < 2 {
        return Err(Error::GeneratorTooSmall { size: config.size });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let space = match &config.scheme {
        SpaceScheme::Range1To2 { denominator } => range_space(&mut rng, config.size, *denominator),
        SpaceScheme::Closure {
            denominator,
            max_numerator,
        } => closure_space(&mut rng, config.size, *denominator, *max_numerator),
        SpaceScheme::ExampleFamily { .. } => unreachable!("handled above"),
    };
    let map = random_map(&mut rng, config.size, config.map_scheme);
    Ok((space, map))
}

/// Where a separation witness came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// The deterministic worked family `E(n, m)`.
    Family {
        n: usize,
        #[serde(with = "crate::rat::rat_serde")]
        m: Rat,
    },
    /// A randomly generated instance; the config carries the derived
    /// seed, so it regenerates this exact instance.
    Generated { trial: u64, config: GeneratorConfig },
}

/// A map separating consecutive classes: an n-point member that is not
/// an (n−1)-point member, with both classification reports attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationWitness {
    pub source: WitnessSource,
    pub space: FiniteMetricSpace,
    pub map: SelfMap,
    /// The n-point report (member).
    pub member_report: ClassificationReport,
    /// The (n−1)-point report (non-member).
    pub non_member_report: ClassificationReport,
}

/// Searches for maps in the n-point class but outside the (n−1)-point
/// class. For `n ≥ 4` the worked family `E(n, n(n+1))` is injected
/// first as a guaranteed witness; `budget` random trials derived from
/// the template's seed follow. Every returned witness has been
/// verified by fresh classifier runs; an empty result is valid.
pub fn mine_separation(
    n: usize,
    budget: u64,
    template: &GeneratorConfig,
) -> Result<Vec<SeparationWitness>, Error> {
    if n < 3 {
        return Err(Error::SeparationArity { n });
    }
    if budget > 0 && template.effective_size() < n {
        return Err(Error::ArityOutOfRange {
            n,
            size: template.effective_size(),
        });
    }
    let mut witnesses = Vec::new();
    if n >= 4 {
        let m = rat_int((n * (n + 1)) as i64);
        let (space, map) = example_family(n, &m)?;
        let member_report = npk_min_coefficient(&space, &map, n)?;
        let non_member_report = npk_min_coefficient(&space, &map, n - 1)?;
        if member_report.member && !non_member_report.member {
            witnesses.push(SeparationWitness {
                source: WitnessSource::Family { n, m },
                space,
                map,
                member_report,
                non_member_report,
            });
        }
    }
    for trial in 0..budget {
        let config = GeneratorConfig {
            seed: derive_seed(template.seed, trial),
            ..template.clone()
        };
        let (space, map) = generate(&config)?;
        let member_report = npk_min_coefficient(&space, &map, n)?;
        if !member_report.member {
            continue;
        }
        let non_member_report = npk_min_coefficient(&space, &map, n - 1)?;
        if non_member_report.member {
            continue;
        }
        witnesses.push(SeparationWitness {
            source: WitnessSource::Generated { trial, config },
            space,
            map,
            member_report,
            non_member_report,
        });
    }
    Ok(witnesses)
}

/// The per-instance consequences of the fixed-point theory that
/// [`verify_theorems`] checks. Each claim is an implication; a verdict
/// is *applicable* when the hypothesis holds and *holds* when the
/// conclusion follows (vacuously true otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// n-point member without periodic points of prime period
    /// `2…n−1` ⇒ fixed points exist and number at most `n−1`.
    FixedPointExistence,
    /// n-point member ⇒ some periodic point has prime period in
    /// `{1, …, n−1}`.
    PrimePeriodExists,
    /// n-point member ⇒ no family of disjoint periodic orbits has
    /// prime periods summing to `n` (in particular, no periodic point
    /// of prime period `n`).
    OrbitSumExclusion,
    /// If some orbit converged to a fixed point `w` that equals none of
    /// its iterates, `w` would be the unique fixed point. On a finite
    /// space convergence means arrival — `w` *is* an iterate — so the
    /// hypothesis is unsatisfiable and the claim holds vacuously on
    /// every instance. (Weakening the hypothesis to "`w` appears only
    /// at arrival" would make the claim false: on `{a,b,c}` with
    /// `d(a,b)=1`, `d(a,c)=d(b,c)=10` and `T = {a→a, b→b, c→a}`, an
    /// n-point member with coefficient 1/5, the orbit of `c` reaches
    /// `a` without revisits, yet `b` is a second fixed point.)
    UniqueFixedPoint,
    /// Asymptotically regular map whose n-point coefficient is finite
    /// and below 1 (relaxed bound) ⇒ fixed points exist and number at
    /// most `n−1`.
    AsymptoticRegularCount,
    /// Two-point coefficient `λ < 1/n` ⇒ n-point coefficient is at
    /// most `λ(n−1)`.
    TwoPointImpliesNPoint,
    /// Total-pairwise coefficient `α < 1/(n+1)` ⇒ n-point coefficient
    /// is at most `α(n−1)/(1−α)`.
    TpdImpliesNPoint,
}

impl ClaimId {
    pub const ALL: [ClaimId; 7] = [
        ClaimId::FixedPointExistence,
        ClaimId::PrimePeriodExists,
        ClaimId::OrbitSumExclusion,
        ClaimId::UniqueFixedPoint,
        ClaimId::AsymptoticRegularCount,
        ClaimId::TwoPointImpliesNPoint,
        ClaimId::TpdImpliesNPoint,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::FixedPointExistence => "fixed_point_existence",
            ClaimId::PrimePeriodExists => "prime_period_exists",
            ClaimId::OrbitSumExclusion => "orbit_sum_exclusion",
            ClaimId::UniqueFixedPoint => "unique_fixed_point",
            ClaimId::AsymptoticRegularCount => "asymptotic_regular_count",
            ClaimId::TwoPointImpliesNPoint => "two_point_implies_n_point",
            ClaimId::TpdImpliesNPoint => "tpd_implies_n_point",
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One claim's verdict on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    /// Whether the claim's hypothesis held on this instance.
    pub applicable: bool,
    /// Whether the implication held (true whenever not applicable).
    pub holds: bool,
    /// Human-readable description of the violation, on failure only.
    pub witness: Option<String>,
}

/// All claim verdicts for one (space, map, n) instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub verdicts: Vec<ClaimVerdict>,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}

/// True iff some sub-multiset of `periods` sums exactly to `target`
/// (each cycle usable once — cycles are disjoint by construction).
fn subset_sums_to(periods: &[usize], target: usize) -> bool {
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for &p in periods {
        if p > target {
            continue;
        }
        for s in (p..=target).rev() {
            if reachable[s - p] {
                reachable[s] = true;
            }
        }
    }
    reachable[target]
}

fn verdict(claim: ClaimId, applicable: bool, conclusion: bool, witness: String) -> ClaimVerdict {
    let holds = !applicable || conclusion;
    ClaimVerdict {
        claim,
        applicable,
        holds,
        witness: (!holds).then_some(witness),
    }
}

/// Evaluates every claim of [`ClaimId`] on one instance. Total on
/// finite spaces: hypotheses that fail make a claim vacuously true,
/// recorded via `applicable`.
pub fn verify_theorems(
    space: &FiniteMetricSpace,
    map: &SelfMap,
    n: usize,
) -> Result<TheoremReport, Error> {
    let npk = npk_min_coefficient(space, map, n)?;
    let kannan = kannan_min_coefficient(space, map)?;
    let tpd = tpd_min_coefficient(space, map, n)?;
    let analysis = map.orbit_analysis();
    let fixed = analysis.fixed_points();
    let periods: Vec<usize> = analysis.cycles().iter().map(|c| c.prime_period()).collect();

    let count_ok = !fixed.is_empty() && fixed.len() < n;
    let count_witness = || {
        format!(
            "fixed point set {:?} has {} points; expected between 1 and {}",
            fixed,
            fixed.len(),
            n - 1
        )
    };

    let no_short_periods = !periods.iter().any(|&p| 2 <= p && p < n);
    let existence = verdict(
        ClaimId::FixedPointExistence,
        npk.member && no_short_periods,
        count_ok,
        count_witness(),
    );

    let small_period = periods.iter().any(|&p| p < n);
    let prime_period = verdict(
        ClaimId::PrimePeriodExists,
        npk.member,
        small_period,
        format!("cycle prime periods {periods:?} contain none below {n}"),
    );

    let orbit_sum = verdict(
        ClaimId::OrbitSumExclusion,
        npk.member,
        !subset_sums_to(&periods, n),
        format!("disjoint cycles with prime periods {periods:?} sum to {n}"),
    );

    // The hypothesis (an orbit converging to a fixed point it never
    // equals) cannot be satisfied on a finite space; see [`ClaimId`].
    let unique = ClaimVerdict {
        claim: ClaimId::UniqueFixedPoint,
        applicable: false,
        holds: true,
        witness: None,
    };

    let coeff_below_one = matches!(
        &npk.min_coefficient,
        Coefficient::Finite(c) if *c < rat_int(1)
    );
    let regular = verdict(
        ClaimId::AsymptoticRegularCount,
        map.is_asymptotically_regular() && coeff_below_one,
        count_ok,
        count_witness(),
    );

    let two_point = match kannan.min_coefficient.as_rat() {
        Some(lambda) if *lambda < rat(1, n as i64) => {
            let bound = coefficient_calculus(lambda, n, CoefficientRule::KannanToNPoint)?;
            let conclusion = npk.min_coefficient <= Coefficient::Finite(bound.clone());
            verdict(
                ClaimId::TwoPointImpliesNPoint,
                true,
                conclusion,
                format!(
                    "two-point coefficient {} predicts n-point bound {}, but n-point \
                     coefficient is {}",
                    kannan.min_coefficient,
                    Coefficient::Finite(bound),
                    npk.min_coefficient
                ),
            )
        }
        _ => verdict(ClaimId::TwoPointImpliesNPoint, false, true, String::new()),
    };

    let tpd_implies = match tpd.min_coefficient.as_rat() {
        Some(alpha) if *alpha < rat(1, n as i64 + 1) => {
            let bound = coefficient_calculus(alpha, n, CoefficientRule::TpdToNPoint)?;
            let conclusion = npk.min_coefficient <= Coefficient::Finite(bound.clone());
            verdict(
                ClaimId::TpdImpliesNPoint,
                true,
                conclusion,
                format!(
                    "total-pairwise coefficient {} predicts n-point bound {}, but n-point \
                     coefficient is {}",
                    tpd.min_coefficient,
                    Coefficient::Finite(bound),
                    npk.min_coefficient
                ),
            )
        }
        _ => verdict(ClaimId::TpdImpliesNPoint, false, true, String::new()),
    };

    Ok(TheoremReport {
        n,
        verdicts: vec![
            existence,
            prime_period,
            orbit_sum,
            unique,
            regular,
            two_point,
            tpd_implies,
        ],
    })
}

/// Parameters for a verification campaign over random instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub trials: u64,
    pub min_size: usize,
    pub max_size: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
}

impl CampaignConfig {
    fn validate(&self) -> Result<(), Error> {
        if self.trials == 0 {
            return Err(Error::ZeroTrials);
        }
        if self.min_size < 2 || self.min_size > self.max_size {
            return Err(Error::BadSizeRange {
                min: self.min_size,
                max: self.max_size,
            });
        }
        if self.min_n < 2
            || self.min_n > self.max_n
            || self.max_n > self.max_size
            || self.min_n > self.min_size
        {
            return Err(Error::BadArityRange {
                min: self.min_n,
                max: self.max_n,
            });
        }
        Ok(())
    }
}

/// Everything needed to regenerate and re-verify one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplaySpec {
    pub config: GeneratorConfig,
    pub n: usize,
}

/// Regenerates a replay spec's instance and re-runs every claim.
pub fn replay(spec: &ReplaySpec) -> Result<(FiniteMetricSpace, SelfMap, TheoremReport), Error> {
    let (space, map) = generate(&spec.config)?;
    let report = verify_theorems(&space, &map, spec.n)?;
    Ok((space, map, report))
}

/// Aggregate counts for one claim over a campaign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimStats {
    pub claim: ClaimId,
    /// Trials on which the claim's hypothesis held.
    pub applicable: u64,
    /// Trials on which the implication failed.
    pub failures: u64,
}

/// A failed claim with its replay recipe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignFailure {
    pub trial: u64,
    pub claim: ClaimId,
    pub witness: Option<String>,
    pub replay: ReplaySpec,
}

/// Aggregated outcome of a campaign. Deterministic in the config:
/// stats are ordered by [`ClaimId::ALL`] and failures by trial index,
/// so equal configs produce identical summaries byte for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub trials: u64,
    pub seed: u64,
    pub stats: Vec<ClaimStats>,
    pub failures: Vec<CampaignFailure>,
}

impl CampaignSummary {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_trial(cfg: &CampaignConfig, trial: u64) -> (ReplaySpec, TheoremReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, trial));
    let size = rng.gen_range(cfg.min_size..=cfg.max_size);
    let scheme = if rng.gen_bool(0.5) {
        SpaceScheme::Range1To2 {
            denominator: DEFAULT_DENOMINATOR,
        }
    } else {
        SpaceScheme::Closure {
            denominator: DEFAULT_DENOMINATOR,
            max_numerator: DEFAULT_MAX_NUMERATOR,
        }
    };
    let map_scheme = if rng.gen_bool(0.5) {
        MapScheme::UniformRandom
    } else {
        MapScheme::FixedPointBiased
    };
    let n = rng.gen_range(cfg.min_n..=cfg.max_n.min(size));
    let config = GeneratorConfig {
        seed: rng.gen::<u64>(),
        size,
        scheme,
        map_scheme,
    };
    let (space, map) = generate(&config).expect("campaign-drawn configs are valid");
    let report = verify_theorems(&space, &map, n).expect("campaign draws n within the size");
    (ReplaySpec { config, n }, report)
}

/// Runs `trials` independent instances (sizes, arities, and schemes
/// drawn per trial from the campaign seed), verifies every claim on
/// each, and aggregates. Trials run in parallel; aggregation follows
/// trial order, so the summary is deterministic.
pub fn campaign(cfg: &CampaignConfig) -> Result<CampaignSummary, Error> {
    cfg.validate()?;
    let outcomes: Vec<(ReplaySpec, TheoremReport)> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(cfg, trial))
        .collect();
    let mut stats: Vec<ClaimStats> = ClaimId::ALL
        .iter()
        .map(|&claim| ClaimStats {
            claim,
            applicable: 0,
            failures: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (trial, (replay, report)) in outcomes.into_iter().enumerate() {
        for (slot, verdict) in stats.iter_mut().zip(&report.verdicts) {
            debug_assert_eq!(slot.claim, verdict.claim);
            if verdict.applicable {
                slot.applicable += 1;
            }
            if !verdict.holds {
                slot.failures += 1;
                failures.push(CampaignFailure {
                    trial: trial as u64,
                    claim: verdict.claim,
                    witness: verdict.witness.clone(),
                    replay: replay.clone(),
                });
            }
        }
    }
    Ok(CampaignSummary {
        trials: cfg.trials,
        seed: cfg.seed,
        stats,
        failures,
    })
}
