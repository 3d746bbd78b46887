//! The parallelogram identity `‖x+y‖² + ‖x−y‖² = 2‖x‖² + 2‖y‖²` on `S`.
//!
//! Every norm is 0 or 1 and `x − y = x + y`, so both sides are small exact
//! integers. The identity holds exactly when at least one of `x`, `y` is zero.
//! It fails on every other pair, so the norm comes from no inner product.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::vector::{truncation, FinSupportVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelogramVerdict {
    pub x: FinSupportVec,
    pub y: FinSupportVec,
    /// `‖x+y‖² + ‖x−y‖²`
    pub lhs: u32,
    /// `2‖x‖² + 2‖y‖²`
    pub rhs: u32,
}

impl ParallelogramVerdict {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn class(&self) -> PairClass {
        PairClass::of(&self.x, &self.y)
    }
}

fn sides(x: &FinSupportVec, y: &FinSupportVec) -> (u32, u32) {
    let sq = |v: &FinSupportVec| u32::from(v.norm()).pow(2);
    (sq(&x.add(y)) + sq(&x.sub(y)), 2 * sq(x) + 2 * sq(y))
}

/// Evaluates both sides of the identity on one pair.
pub fn parallelogram(x: &FinSupportVec, y: &FinSupportVec) -> ParallelogramVerdict {
    let (lhs, rhs) = sides(x, y);
    ParallelogramVerdict {
        x: x.clone(),
        y: y.clone(),
        lhs,
        rhs,
    }
}

/// Every ordered pair from the truncation at `p`, `x`-major in rank order.
///
/// Materializes `4^p` verdicts; use [`parallelogram_summary`] for large `p`.
pub fn parallelogram_scan(p: u32) -> Vec<ParallelogramVerdict> {
    let table: Vec<FinSupportVec> = truncation(p).collect();
    table
        .iter()
        .flat_map(|x| table.iter().map(move |y| parallelogram(x, y)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairClass {
    BothZero,
    OneZero,
    EqualNonZero,
    DistinctNonZero,
}

impl PairClass {
    pub const ALL: [PairClass; 4] = [
        PairClass::BothZero,
        PairClass::OneZero,
        PairClass::EqualNonZero,
        PairClass::DistinctNonZero,
    ];

    pub fn of(x: &FinSupportVec, y: &FinSupportVec) -> PairClass {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => PairClass::BothZero,
            (true, false) | (false, true) => PairClass::OneZero,
            _ if x == y => PairClass::EqualNonZero,
            _ => PairClass::DistinctNonZero,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairClass::BothZero => "both-zero",
            PairClass::OneZero => "one-zero",
            PairClass::EqualNonZero => "equal-nonzero",
            PairClass::DistinctNonZero => "distinct-nonzero",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassTally {
    pub pairs: u64,
    pub holds: u64,
    /// Distinct `(lhs, rhs)` values seen.
    pub values: BTreeSet<(u32, u32)>,
}

impl ClassTally {
    fn merge(mut self, other: ClassTally) -> ClassTally {
        self.pairs += other.pairs;
        self.holds += other.holds;
        self.values.extend(other.values);
        self
    }
}

/// Streaming classification of all `4^p` pairs at truncation `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelogramSummary {
    pub truncation_p: u32,
    /// Indexed in [`PairClass::ALL`] order.
    pub classes: [ClassTally; 4],
}

impl ParallelogramSummary {
    pub fn pairs(&self) -> u64 {
        self.classes.iter().map(|c| c.pairs).sum()
    }

    pub fn holds(&self) -> u64 {
        self.classes.iter().map(|c| c.holds).sum()
    }

    pub fn class(&self, class: PairClass) -> &ClassTally {
        &self.classes[class as usize]
    }

    /// Pairs where the identity holds although `x = y = 0` is false.
    ///
    /// Non-zero means the claim "holds iff `x = y = 0`" is contradicted.
    pub fn iff_zero_discrepancies(&self) -> u64 {
        self.holds() - self.class(PairClass::BothZero).holds
    }

    /// True iff the identity holds on exactly the pairs with a zero member.
    pub fn holds_iff_some_zero(&self) -> bool {
        PairClass::ALL.iter().all(|&c| {
            let t = self.class(c);
            match c {
                PairClass::BothZero | PairClass::OneZero => t.holds == t.pairs,
                _ => t.holds == 0,
            }
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "parallelogram p={} pairs={} holds={} fails={}\n",
            self.truncation_p,
            self.pairs(),
            self.holds(),
            self.pairs() - self.holds()
        );
        for c in PairClass::ALL {
            let t = self.class(c);
            let values: Vec<String> = t.values.iter().map(|(l, r)| format!("{l}:{r}")).collect();
            out.push_str(&format!(
                "class {} pairs={} holds={} lhs:rhs={}\n",
                c.name(),
                t.pairs,
                t.holds,
                if values.is_empty() {
                    "-".to_string()
                } else {
                    values.join(",")
                }
            ));
        }
        let disc = self.iff_zero_discrepancies();
        if disc > 0 {
            out.push_str(&format!(
                "discrepancy holds-iff-both-zero: identity also holds on {disc} pairs with exactly one zero member\n"
            ));
        }
        out.push_str(&format!(
            "verdict {}\n",
            if self.holds_iff_some_zero() {
                "holds-iff-some-zero"
            } else {
                "unexpected"
            }
        ));
        out
    }
}

fn tally_row(x: &FinSupportVec, table: &[FinSupportVec]) -> [ClassTally; 4] {
    let mut classes: [ClassTally; 4] = Default::default();
    // both sides lie in 0..=4
    let mut seen = [[[false; 5]; 5]; 4];
    for y in table {
        let (lhs, rhs) = sides(x, y);
        let class = PairClass::of(x, y) as usize;
        let t = &mut classes[class];
        t.pairs += 1;
        t.holds += u64::from(lhs == rhs);
        seen[class][lhs as usize][rhs as usize] = true;
    }
    for (t, grid) in classes.iter_mut().zip(&seen) {
        for (lhs, row) in grid.iter().enumerate() {
            for (rhs, &hit) in row.iter().enumerate() {
                if hit {
                    t.values.insert((lhs as u32, rhs as u32));
                }
            }
        }
    }
    classes
}

/// Classifies every ordered pair at truncation `p` without materializing them.
pub fn parallelogram_summary(p: u32) -> ParallelogramSummary {
    let table: Vec<FinSupportVec> = truncation(p).collect();
    let classes =
        table
            .par_iter()
            .map(|x| tally_row(x, &table))
            .reduce(Default::default, |a, b| {
                let [a0, a1, a2, a3] = a;
                let [b0, b1, b2, b3] = b;
                [a0.merge(b0), a1.merge(b1), a2.merge(b2), a3.merge(b3)]
            });
    ParallelogramSummary {
        truncation_p: p,
        classes,
    }
}

impl fmt::Display for ParallelogramVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} lhs={} rhs={} {}",
            self.x,
            self.y,
            self.lhs,
            self.rhs,
            if self.holds() { "holds" } else { "fails" }
        )
    }
}
