//! Finite metric spaces with exact rational distances.
//!
//! A [`FiniteMetricSpace`] is an ordered list of labeled points together
//! with a symmetric distance matrix that satisfies the metric axioms.
//! Construction validates the axioms, so every value of the type is a
//! genuine metric space; downstream classifiers rely on that.

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::map::SelfMap;
use crate::rat::{format_rat, rat_int, Rat};

/// A single metric-axiom violation with an explicit witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricViolation {
    /// `d(i,i) != 0`.
    NonzeroDiagonal { i: usize },
    /// `d(i,j) != d(j,i)`.
    Asymmetric { i: usize, j: usize },
    /// `d(i,j) <= 0` for `i != j` (distinct points must be apart).
    NonpositiveOffDiagonal { i: usize, j: usize },
    /// `d(from,to) > d(from,via) + d(via,to)`.
    Triangle { from: usize, via: usize, to: usize },
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonzeroDiagonal { i } => write!(f, "nonzero diagonal at {i}"),
            Self::Asymmetric { i, j } => write!(f, "asymmetry at ({i},{j})"),
            Self::NonpositiveOffDiagonal { i, j } => {
                write!(f, "zero or negative off-diagonal at ({i},{j})")
            }
            Self::Triangle { from, via, to } => {
                write!(
                    f,
                    "triangle failure: d({from},{to}) > d({from},{via}) + d({via},{to})"
                )
            }
        }
    }
}

/// Result of checking a raw matrix against the metric axioms.
///
/// `is_valid()` holds exactly when `violations` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<MetricViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid metric");
        }
        let mut first = true;
        for v in &self.violations {
            if !first {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Checks that `matrix` is a metric: zero diagonal, symmetry, positive
/// off-diagonal entries, and the triangle inequality. Returns every
/// violation found, each with a witness index pair or triple.
///
/// Only a non-square matrix is a hard error; axiom failures are data.
pub fn validate_metric(matrix: &[Vec<Rat>]) -> Result<ValidationReport, Error> {
    let k = matrix.len();
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != k {
            return Err(Error::NonSquareMatrix {
                row,
                len: entries.len(),
                expected: k,
            });
        }
    }
    let mut violations = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        if !row[i].is_zero() {
            violations.push(MetricViolation::NonzeroDiagonal { i });
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if matrix[i][j] != matrix[j][i] {
                violations.push(MetricViolation::Asymmetric { i, j });
            }
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if matrix[i][j] <= Rat::zero() {
                violations.push(MetricViolation::NonpositiveOffDiagonal { i, j });
            }
        }
    }
    for from in 0..k {
        for to in (from + 1)..k {
            for via in 0..k {
                if via == from || via == to {
                    continue;
                }
                if matrix[from][to] > &matrix[from][via] + &matrix[via][to] {
                    violations.push(MetricViolation::Triangle { from, via, to });
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// A finite metric space: ordered point labels plus an exact distance
/// matrix. Immutable after construction; construction enforces the
/// metric axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMetricSpace {
    labels: Vec<String>,
    dist: Vec<Vec<Rat>>,
}

impl FiniteMetricSpace {
    /// Builds a space from labels and a distance matrix, validating the
    /// metric axioms. Labels must be distinct and match the matrix size.
    pub fn new(labels: Vec<String>, dist: Vec<Vec<Rat>>) -> Result<Self, Error> {
        if dist.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if labels.len() != dist.len() {
            return Err(Error::LabelCountMismatch {
                labels: labels.len(),
                size: dist.len(),
            });
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::DuplicateLabel(a.clone()));
            }
        }
        let report = validate_metric(&dist)?;
        if !report.is_valid() {
            return Err(Error::InvalidMetric(report));
        }
        Ok(Self { labels, dist })
    }

    /// Builds a space with labels `x1..xk`.
    pub fn with_default_labels(dist: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let labels = default_labels(dist.len());
        Self::new(labels, dist)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dist(&self, i: usize, j: usize) -> &Rat {
        &self.dist[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.dist
    }
}

/// Labels `x1..xk`, matching the worked family's naming.
pub fn default_labels(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("x{i}")).collect()
}

/// True iff the strong triangle inequality
/// `d(i,k) <= max(d(i,j), d(j,k))` holds for all triples.
pub fn is_ultrametric(space: &FiniteMetricSpace) -> bool {
    let k = space.len();
    for a in 0..k {
        for b in (a + 1)..k {
            for via in 0..k {
                if via == a || via == b {
                    continue;
                }
                let lhs = space.dist(a, b);
                if lhs > space.dist(a, via).max(space.dist(via, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Sum of all pairwise distances over a tuple of points, taken as a
/// multiset: repeated indices are allowed and repeated pairs contribute
/// zero. Needs at least two entries.
pub fn total_pairwise_sum(space: &FiniteMetricSpace, tuple: &[usize]) -> Result<Rat, Error> {
    if tuple.len() < 2 {
        return Err(Error::TupleTooShort { len: tuple.len() });
    }
    let size = space.len();
    for &i in tuple {
        if i >= size {
            return Err(Error::PointOutOfRange { index: i, size });
        }
    }
    let mut sum = Rat::zero();
    for (a, &i) in tuple.iter().enumerate() {
        for &j in &tuple[a + 1..] {
            sum += space.dist(i, j);
        }
    }
    Ok(sum)
}

/// All-pairs-shortest-path repair of a symmetric positive matrix into a
/// metric. Entries never increase, the result satisfies the triangle
/// inequality, and a matrix that already is a metric comes back unchanged.
///
/// A zero off-diagonal entry cannot be repaired (the two points would
/// have to merge) and is rejected, as are asymmetric or negative inputs.
pub fn metric_closure(raw: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>, Error> {
    let k = raw.len();
    for (row, entries) in raw.iter().enumerate() {
        if entries.len() != k {
            return Err(Error::NonSquareMatrix {
                row,
                len: entries.len(),
                expected: k,
            });
        }
    }
    for i in 0..k {
        if !raw[i][i].is_zero() {
            return Err(Error::NonzeroDiagonal { i });
        }
        for j in (i + 1)..k {
            if raw[i][j] != raw[j][i] {
                return Err(Error::AsymmetricInput { i, j });
            }
            if raw[i][j] < Rat::zero() {
                return Err(Error::NegativeEntry { i, j });
            }
            if raw[i][j].is_zero() {
                return Err(Error::UnrepairableZero { i, j });
            }
        }
    }
    let mut dist = raw.to_vec();
    for via in 0..k {
        for i in 0..k {
            for j in 0..k {
                let through = &dist[i][via] + &dist[via][j];
                if dist[i][j] > through {
                    dist[i][j] = through;
                }
            }
        }
    }
    Ok(dist)
}

/// The worked ultrametric family `E(n, M)` and its shift-collapse map.
///
/// Points `x1..xn` with `d(xi,xj) = 1` for distinct `i,j < n` and
/// `d = M > 1` whenever `xn` is involved. The map sends `xi -> x(i+1)`
/// for `i <= n-2`, fixes `x(n-1)`, and sends `xn` back to `x1`, so
/// `x(n-1)` is its unique fixed point.
pub fn example_family(n: usize, m: &Rat) -> Result<(FiniteMetricSpace, SelfMap), Error> {
    if n < 3 {
        return Err(Error::FamilyTooSmall { n });
    }
    if *m <= rat_int(1) {
        return Err(Error::FamilyScaleTooSmall { m: format_rat(m) });
    }
    let one = rat_int(1);
    let mut dist = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            dist[i][j] = if i.max(j) == n - 1 {
                m.clone()
            } else {
                one.clone()
            };
        }
    }
    let mut table: Vec<usize> = (0..n).map(|i| i + 1).collect();
    table[n - 2] = n - 2;
    table[n - 1] = 0;
    let space = FiniteMetricSpace::with_default_labels(dist)?;
    let map = SelfMap::new(n, table)?;
    Ok((space, map))
}
