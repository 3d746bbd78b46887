//! The metric induced by the norm, and Cauchy analysis of sequences in `S`.
//!
//! Since `x - y = x + y`, the distance `‖x - y‖` is 0 when `x = y` and 1
//! otherwise: the discrete metric. A sequence is Cauchy under it exactly when
//! it is eventually constant, and the constant value is its limit.

use std::fmt;

use thiserror::Error;

use crate::vector::{FinSupportVec, VectorError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("threshold {0} outside (0, 1]")]
    InvalidEpsilon(f64),
    #[error("sequence has no terms")]
    EmptySequence,
    #[error("line {line}: {source}")]
    Term { line: usize, source: VectorError },
    #[error("line {line}: `repeat` must be the final line")]
    TrailingTerms { line: usize },
    #[error("sequence must end with a `repeat` line")]
    MissingRepeat,
}

/// `‖x - y‖`.
pub fn distance(x: &FinSupportVec, y: &FinSupportVec) -> u8 {
    x.sub(y).norm()
}

/// A Cauchy threshold in `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Epsilon(f64);

impl Epsilon {
    /// Threshold used when none is given.
    pub const CANONICAL: Epsilon = Epsilon(0.5);

    pub fn new(value: f64) -> Result<Self, MetricError> {
        if value > 0.0 && value <= 1.0 {
            Ok(Epsilon(value))
        } else {
            Err(MetricError::InvalidEpsilon(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for Epsilon {
    fn default() -> Self {
        Epsilon::CANONICAL
    }
}

/// An infinite sequence given by a finite prefix whose last term repeats forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecSequence {
    terms: Vec<FinSupportVec>,
}

impl VecSequence {
    pub fn new(terms: Vec<FinSupportVec>) -> Result<Self, MetricError> {
        if terms.is_empty() {
            return Err(MetricError::EmptySequence);
        }
        Ok(VecSequence { terms })
    }

    /// The declared prefix.
    pub fn terms(&self) -> &[FinSupportVec] {
        &self.terms
    }

    /// Term `n` of the infinite sequence.
    pub fn term(&self, n: usize) -> &FinSupportVec {
        &self.terms[n.min(self.terms.len() - 1)]
    }

    /// Parses one vector literal per line, closed by a line reading `repeat`.
    /// Blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, MetricError> {
        let mut terms = Vec::new();
        let mut repeat_seen = false;
        for (k, line) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if repeat_seen {
                return Err(MetricError::TrailingTerms { line: line_no });
            }
            if line == "repeat" {
                repeat_seen = true;
                continue;
            }
            let term = line.parse().map_err(|source| MetricError::Term {
                line: line_no,
                source,
            })?;
            terms.push(term);
        }
        if !repeat_seen {
            return Err(MetricError::MissingRepeat);
        }
        VecSequence::new(terms)
    }
}

impl fmt::Display for VecSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for term in &self.terms {
            writeln!(f, "{term}")?;
        }
        writeln!(f, "repeat")
    }
}

/// Outcome of [`analyze_cauchy`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyVerdict {
    settled: Option<(usize, FinSupportVec)>,
}

impl CauchyVerdict {
    pub fn is_cauchy(&self) -> bool {
        self.settled.is_some()
    }

    /// Least index from which every term is equal.
    pub fn settle_index(&self) -> Option<usize> {
        self.settled.as_ref().map(|(k, _)| *k)
    }

    pub fn limit(&self) -> Option<&FinSupportVec> {
        self.settled.as_ref().map(|(_, v)| v)
    }
}

impl fmt::Display for CauchyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.settled {
            Some((k, limit)) => write!(f, "cauchy settle={k} limit={limit}"),
            None => write!(f, "not cauchy"),
        }
    }
}

/// Finds the least `N` with `d(x_m, x_n) < ε` for all `m, n ≥ N`.
///
/// Past the declared prefix every term equals the last one, so it suffices to
/// walk back from the end while terms stay within `ε` of the tail value. On
/// the discrete metric `d < ε` means `d = 0` for every `ε ∈ (0, 1]`, so the
/// verdict does not depend on `ε`.
pub fn analyze_cauchy(seq: &VecSequence, eps: Epsilon) -> CauchyVerdict {
    let terms = seq.terms();
    let tail = &terms[terms.len() - 1];
    let mut settle = terms.len() - 1;
    while settle > 0 && f64::from(distance(&terms[settle - 1], tail)) < eps.get() {
        settle -= 1;
    }
    CauchyVerdict {
        settled: Some((settle, tail.clone())),
    }
}
