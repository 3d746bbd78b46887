//! Linear operators on `S`, given by their images of the canonical basis.
//!
//! Every `x ∈ S` is a finite sum of basis vectors, so a linear `T` is fully
//! determined by its columns `T(e_i)`. Because each column is itself finitely
//! supported, `T x` always lands back in `S`.
//!
//! The norm `sup{‖Tx‖ : ‖x‖ = 1}` can only be 0 or 1. It is 1 as soon as one
//! column is non-zero, and that basis vector attains it.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroU64;

use thiserror::Error;

use crate::vector::{FinSupportVec, VectorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("line {line}: malformed column `{text}` (expected `i -> {{j1,...,jk}}`)")]
    Malformed { line: usize, text: String },
    #[error("line {line}: invalid column index `{token}`")]
    BadIndex { line: usize, token: String },
    #[error("line {line}: duplicate column {index}")]
    DuplicateColumn { line: usize, index: u64 },
    #[error("line {line}: {source}")]
    BadImage { line: usize, source: VectorError },
    #[error("unresolved at bound {0}")]
    Unresolved(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    /// Finitely many listed columns; every other column is zero.
    Explicit(BTreeMap<u64, FinSupportVec>),
    Identity,
    /// `e_1 ↦ 0`, `e_i ↦ e_{i-1}`.
    ShiftLeft,
    /// `e_i ↦ e_{i+1}`.
    ShiftRight,
}

/// Result of [`Operator::operator_norm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorNorm {
    pub norm: u8,
    pub witness: Option<FinSupportVec>,
    /// False when a rule operator looked zero only on the scanned columns.
    pub exact: bool,
}

impl fmt::Display for OperatorNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} witness=", self.norm)?;
        match &self.witness {
            Some(w) => write!(f, "{w}")?,
            None => f.write_str("none")?,
        }
        f.write_str(if self.exact { " exact" } else { " inexact" })
    }
}

impl Operator {
    pub fn zero() -> Self {
        Operator::Explicit(BTreeMap::new())
    }

    /// Builds an explicit operator; column keys must be at least 1.
    pub fn explicit<I>(columns: I) -> Result<Self, VectorError>
    where
        I: IntoIterator<Item = (u64, FinSupportVec)>,
    {
        let mut map = BTreeMap::new();
        for (i, image) in columns {
            if i == 0 {
                return Err(VectorError::InvalidBasisIndex(0));
            }
            map.insert(i, image);
        }
        Ok(Operator::Explicit(map))
    }

    pub fn is_rule(&self) -> bool {
        !matches!(self, Operator::Explicit(_))
    }

    /// `T(e_i)`, for `i ≥ 1`.
    pub fn column(&self, i: u64) -> FinSupportVec {
        debug_assert!(i >= 1);
        match self {
            Operator::Explicit(cols) => cols.get(&i).cloned().unwrap_or_default(),
            Operator::Identity => basis_vec(i),
            Operator::ShiftLeft if i == 1 => FinSupportVec::zero(),
            Operator::ShiftLeft => basis_vec(i - 1),
            Operator::ShiftRight => basis_vec(i + 1),
        }
    }

    /// `T x`, the GF(2) sum of the columns selected by `x`.
    pub fn apply(&self, x: &FinSupportVec) -> FinSupportVec {
        match self {
            Operator::Identity => x.clone(),
            Operator::Explicit(_) => x
                .support()
                .iter()
                .fold(FinSupportVec::zero(), |acc, &i| acc.add(&self.column(i))),
            // Shifts are injective on indices, so the column sum never cancels.
            Operator::ShiftRight => {
                FinSupportVec::from_support(x.support().iter().map(|&i| i + 1).collect())
                    .expect("shifted support stays canonical")
            }
            Operator::ShiftLeft => FinSupportVec::from_support(
                x.support()
                    .iter()
                    .filter(|&&i| i > 1)
                    .map(|&i| i - 1)
                    .collect(),
            )
            .expect("shifted support stays canonical"),
        }
    }

    /// True iff the columns at `1..=bound` are all zero.
    pub fn is_zero_up_to(&self, bound: NonZeroU64) -> bool {
        match self {
            Operator::Explicit(cols) => cols.range(..=bound.get()).all(|(_, c)| c.is_zero()),
            _ => (1..=bound.get()).all(|i| self.column(i).is_zero()),
        }
    }

    /// Smallest index whose column is non-zero, among the scanned columns.
    ///
    /// Explicit operators scan exactly their stored columns; rule operators
    /// scan `1..=bound`.
    fn first_nonzero_column(&self, bound: NonZeroU64) -> Option<u64> {
        match self {
            Operator::Explicit(cols) => cols.iter().find(|(_, c)| !c.is_zero()).map(|(&i, _)| i),
            _ => (1..=bound.get()).find(|&i| !self.column(i).is_zero()),
        }
    }

    /// `‖T‖` with the smallest attaining basis vector.
    pub fn operator_norm(&self, bound: NonZeroU64) -> OperatorNorm {
        match self.first_nonzero_column(bound) {
            Some(i) => OperatorNorm {
                norm: 1,
                witness: Some(basis_vec(i)),
                exact: true,
            },
            None => OperatorNorm {
                norm: 0,
                witness: None,
                exact: !self.is_rule(),
            },
        }
    }

    /// A unit vector `x̃` with `‖T x̃‖ = ‖T‖`.
    ///
    /// The zero operator attains its norm everywhere; `e_1` is returned. A
    /// rule operator that is zero on every scanned column is not assumed to
    /// be zero, and yields [`OperatorError::Unresolved`].
    pub fn attainment_witness(&self, bound: NonZeroU64) -> Result<FinSupportVec, OperatorError> {
        let norm = self.operator_norm(bound);
        match norm.witness {
            Some(w) => Ok(w),
            None if norm.exact => Ok(basis_vec(1)),
            None => Err(OperatorError::Unresolved(bound.get())),
        }
    }

    /// Parses the operator file format: a built-in name (`identity`,
    /// `shift_left`, `shift_right`) alone, or lines `i -> {j1,...,jk}`.
    /// Blank lines are ignored; omitted columns are zero.
    pub fn parse(text: &str) -> Result<Self, OperatorError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        if let [(_, only)] = lines.as_slice() {
            match *only {
                "identity" => return Ok(Operator::Identity),
                "shift_left" => return Ok(Operator::ShiftLeft),
                "shift_right" => return Ok(Operator::ShiftRight),
                _ => {}
            }
        }
        let mut cols = BTreeMap::new();
        for (line, text) in lines {
            let (lhs, rhs) = text
                .split_once("->")
                .ok_or_else(|| OperatorError::Malformed {
                    line,
                    text: text.to_string(),
                })?;
            let token = lhs.trim();
            let index = token
                .parse::<u64>()
                .ok()
                .filter(|&i| i >= 1 && token.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| OperatorError::BadIndex {
                    line,
                    token: token.to_string(),
                })?;
            let image = rhs
                .parse::<FinSupportVec>()
                .map_err(|source| OperatorError::BadImage { line, source })?;
            if cols.insert(index, image).is_some() {
                return Err(OperatorError::DuplicateColumn { line, index });
            }
        }
        Ok(Operator::Explicit(cols))
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Identity => writeln!(f, "identity"),
            Operator::ShiftLeft => writeln!(f, "shift_left"),
            Operator::ShiftRight => writeln!(f, "shift_right"),
            Operator::Explicit(cols) => {
                for (i, image) in cols {
                    writeln!(f, "{i} -> {image}")?;
                }
                Ok(())
            }
        }
    }
}

fn basis_vec(i: u64) -> FinSupportVec {
    FinSupportVec::basis(i).expect("basis index is at least 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> FinSupportVec {
        s.parse().unwrap()
    }

    fn nz(n: u64) -> NonZeroU64 {
        NonZeroU64::new(n).unwrap()
    }

    fn op(text: &str) -> Operator {
        Operator::parse(text).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Operator::Identity.apply(&v("{2,7}")), v("{2,7}"));
        assert_eq!(op("1 -> {1}\n2 -> {1}").apply(&v("{1,2}")), v("{}"));
        assert_eq!(Operator::ShiftRight.apply(&v("{1,3}")), v("{2,4}"));
        assert_eq!(Operator::ShiftLeft.apply(&v("{1,3}")), v("{2}"));
        for t in [
            Operator::Identity,
            Operator::ShiftLeft,
            Operator::ShiftRight,
            Operator::zero(),
        ] {
            assert!(t.apply(&v("{}")).is_zero());
        }
    }

    #[test]
    fn rule_columns_match_apply() {
        for t in [
            Operator::Identity,
            Operator::ShiftLeft,
            Operator::ShiftRight,
        ] {
            for i in 1..10 {
                let e = FinSupportVec::basis(i).unwrap();
                assert_eq!(t.apply(&e), t.column(i), "{t:?} e_{i}");
            }
        }
    }

    #[test]
    fn norm_examples() {
        let zero = Operator::zero().operator_norm(nz(5));
        assert_eq!(
            zero,
            OperatorNorm {
                norm: 0,
                witness: None,
                exact: true
            }
        );

        let id = Operator::Identity.operator_norm(nz(4));
        assert_eq!(id.to_string(), "1 witness={1} exact");

        let cancel = op("1 -> {1}\n2 -> {1}").operator_norm(nz(1));
        assert_eq!(cancel.norm, 1);
        assert_eq!(cancel.witness, Some(v("{1}")));
    }

    #[test]
    fn explicit_norm_ignores_bound() {
        let t = op("50 -> {1}");
        assert_eq!(t.operator_norm(nz(1)).witness, Some(v("{50}")));
        let zero_cols = op("3 -> {}\n4 -> {}");
        assert_eq!(zero_cols.operator_norm(nz(1)).norm, 0);
        assert!(zero_cols.operator_norm(nz(1)).exact);
    }

    #[test]
    fn shift_left_needs_bound_two() {
        let unresolved = Operator::ShiftLeft.operator_norm(nz(1));
        assert_eq!(
            unresolved,
            OperatorNorm {
                norm: 0,
                witness: None,
                exact: false
            }
        );
        assert_eq!(unresolved.to_string(), "0 witness=none inexact");
        assert_eq!(
            Operator::ShiftLeft.attainment_witness(nz(1)),
            Err(OperatorError::Unresolved(1))
        );
        assert_eq!(Operator::ShiftLeft.attainment_witness(nz(2)), Ok(v("{2}")));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(Operator::Identity.attainment_witness(nz(3)), Ok(v("{1}")));
        assert_eq!(Operator::zero().attainment_witness(nz(3)), Ok(v("{1}")));
        assert_eq!(op("3 -> {1,2}").attainment_witness(nz(1)), Ok(v("{3}")));
        assert_eq!(Operator::ShiftRight.attainment_witness(nz(1)), Ok(v("{1}")));
    }

    #[test]
    fn zero_up_to_examples() {
        assert!(Operator::zero().is_zero_up_to(nz(100)));
        assert!(!Operator::Identity.is_zero_up_to(nz(1)));
        assert!(Operator::ShiftLeft.is_zero_up_to(nz(1)));
        assert!(!Operator::ShiftLeft.is_zero_up_to(nz(2)));
        let t = op("50 -> {1}");
        assert!(t.is_zero_up_to(nz(10)));
        assert!(!t.is_zero_up_to(nz(50)));
    }

    #[test]
    fn parsing() {
        assert_eq!(op("identity"), Operator::Identity);
        assert_eq!(op("  shift_left \n"), Operator::ShiftLeft);
        assert_eq!(op("shift_right"), Operator::ShiftRight);
        assert_eq!(
            op("1 -> {1}\n2 -> {1}"),
            Operator::explicit([(1, v("{1}")), (2, v("{1}"))]).unwrap()
        );
        assert_eq!(op(""), Operator::zero());
        assert!(matches!(
            Operator::parse("2 -> {2,1}"),
            Err(OperatorError::BadImage { line: 1, .. })
        ));
        assert_eq!(
            Operator::parse("1 -> {1}\n1 -> {2}"),
            Err(OperatorError::DuplicateColumn { line: 2, index: 1 })
        );
        assert!(matches!(
            Operator::parse("0 -> {1}"),
            Err(OperatorError::BadIndex { .. })
        ));
        assert!(matches!(
            Operator::parse("+3 -> {1}"),
            Err(OperatorError::BadIndex { .. })
        ));
        assert!(matches!(
            Operator::parse("1 {1}"),
            Err(OperatorError::Malformed { .. })
        ));
        assert!(matches!(
            Operator::parse("identity\n1 -> {1}"),
            Err(OperatorError::Malformed { line: 1, .. })
        ));
        let t = op("4 -> {1,2}\n2 -> {}");
        assert_eq!(op(&t.to_string()), t);
        assert!(Operator::explicit([(0, v("{1}"))]).is_err());
    }
}
