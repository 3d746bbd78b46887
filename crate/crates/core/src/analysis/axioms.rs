//! Vector-space and norm axiom scans.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::gf2::Gf2;
use crate::vector::{truncation, FinSupportVec};

use super::DEFAULT_SEED;

/// The operations under test. [`Standard`] is the real arithmetic of `S`;
/// [`Faulty`] corrupts one operation so the harness can be shown to catch it.
pub trait Arithmetic: Sync {
    fn add(&self, x: &FinSupportVec, y: &FinSupportVec) -> FinSupportVec;
    fn scalar_mul(&self, alpha: Gf2, x: &FinSupportVec) -> FinSupportVec;
    fn norm(&self, x: &FinSupportVec) -> u8;

    fn field_add(&self, a: Gf2, b: Gf2) -> Gf2 {
        a + b
    }
    fn field_mul(&self, a: Gf2, b: Gf2) -> Gf2 {
        a * b
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Arithmetic for Standard {
    fn add(&self, x: &FinSupportVec, y: &FinSupportVec) -> FinSupportVec {
        x.add(y)
    }
    fn scalar_mul(&self, alpha: Gf2, x: &FinSupportVec) -> FinSupportVec {
        x.scalar_mul(alpha)
    }
    fn norm(&self, x: &FinSupportVec) -> u8 {
        x.norm()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Vector addition also sets index 1 (breaks identity and inverses).
    AddSetsFirst,
    /// Vector addition is a union instead of a symmetric difference.
    AddIsUnion,
    /// Scalar 0 acts as the identity.
    ScalarZeroIsIdentity,
    /// The norm of every vector is 1.
    NormAlwaysOne,
    /// The norm counts support elements.
    NormCountsSupport,
}

impl Fault {
    pub const ALL: [Fault; 5] = [
        Fault::AddSetsFirst,
        Fault::AddIsUnion,
        Fault::ScalarZeroIsIdentity,
        Fault::NormAlwaysOne,
        Fault::NormCountsSupport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::AddSetsFirst => "add-sets-first",
            Fault::AddIsUnion => "add-is-union",
            Fault::ScalarZeroIsIdentity => "scalar-zero-is-identity",
            Fault::NormAlwaysOne => "norm-always-one",
            Fault::NormCountsSupport => "norm-counts-support",
        }
    }

    pub fn from_name(name: &str) -> Option<Fault> {
        Fault::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Fault-injection arithmetic: [`Standard`] with one operation corrupted.
#[derive(Clone, Copy, Debug)]
pub struct Faulty(pub Fault);

impl Arithmetic for Faulty {
    fn add(&self, x: &FinSupportVec, y: &FinSupportVec) -> FinSupportVec {
        match self.0 {
            Fault::AddSetsFirst => {
                let sum = x.add(y);
                if sum.entry(1).bit() {
                    sum
                } else {
                    sum.add(&FinSupportVec::basis(1).expect("e_1"))
                }
            }
            Fault::AddIsUnion => {
                let mut s: Vec<u64> = x.support().iter().chain(y.support()).copied().collect();
                s.sort_unstable();
                s.dedup();
                FinSupportVec::from_support(s).expect("sorted and deduplicated")
            }
            _ => x.add(y),
        }
    }

    fn scalar_mul(&self, alpha: Gf2, x: &FinSupportVec) -> FinSupportVec {
        match self.0 {
            Fault::ScalarZeroIsIdentity => x.clone(),
            _ => x.scalar_mul(alpha),
        }
    }

    fn norm(&self, x: &FinSupportVec) -> u8 {
        match self.0 {
            Fault::NormAlwaysOne => 1,
            Fault::NormCountsSupport => x.support().len().min(u8::MAX as usize) as u8,
            _ => x.norm(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    AddIdentity,
    SelfInverse,
    ScalarCompatible,
    ScalarIdentity,
    DistributesOverVectorAdd,
    DistributesOverFieldAdd,
    PositiveDefinite,
    Homogeneous,
    Triangle,
    /// `‖x + y‖ < ‖x‖ + ‖y‖` for distinct non-zero `x`, `y`.
    StrictTriangle,
}

impl Axiom {
    pub const VECTOR_SPACE: [Axiom; 8] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::AddIdentity,
        Axiom::SelfInverse,
        Axiom::ScalarCompatible,
        Axiom::ScalarIdentity,
        Axiom::DistributesOverVectorAdd,
        Axiom::DistributesOverFieldAdd,
    ];

    pub const NORM: [Axiom; 4] = [
        Axiom::PositiveDefinite,
        Axiom::Homogeneous,
        Axiom::Triangle,
        Axiom::StrictTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "add-commutative",
            Axiom::AddAssociative => "add-associative",
            Axiom::AddIdentity => "add-identity",
            Axiom::SelfInverse => "self-inverse",
            Axiom::ScalarCompatible => "scalar-compatible",
            Axiom::ScalarIdentity => "scalar-identity",
            Axiom::DistributesOverVectorAdd => "distributes-over-vector-add",
            Axiom::DistributesOverFieldAdd => "distributes-over-field-add",
            Axiom::PositiveDefinite => "positive-definite",
            Axiom::Homogeneous => "homogeneous",
            Axiom::Triangle => "triangle",
            Axiom::StrictTriangle => "strict-triangle",
        }
    }

    /// Number of (scalar, vector) inputs.
    pub fn arity(self) -> (u32, u32) {
        match self {
            Axiom::AddCommutative => (0, 2),
            Axiom::AddAssociative => (0, 3),
            Axiom::AddIdentity => (0, 1),
            Axiom::SelfInverse => (0, 1),
            Axiom::ScalarCompatible => (2, 1),
            Axiom::ScalarIdentity => (0, 1),
            Axiom::DistributesOverVectorAdd => (1, 2),
            Axiom::DistributesOverFieldAdd => (2, 1),
            Axiom::PositiveDefinite => (0, 1),
            Axiom::Homogeneous => (1, 1),
            Axiom::Triangle => (0, 2),
            Axiom::StrictTriangle => (0, 2),
        }
    }

    /// Inputs outside the axiom's hypothesis are skipped, not counted.
    fn applies(self, v: &[&FinSupportVec]) -> bool {
        match self {
            Axiom::StrictTriangle => !v[0].is_zero() && !v[1].is_zero() && v[0] != v[1],
            _ => true,
        }
    }

    /// Evaluates the axiom on one input tuple.
    pub fn holds<A: Arithmetic + ?Sized>(self, ops: &A, s: &[Gf2], v: &[&FinSupportVec]) -> bool {
        let zero = FinSupportVec::zero();
        match self {
            Axiom::AddCommutative => ops.add(v[0], v[1]) == ops.add(v[1], v[0]),
            Axiom::AddAssociative => {
                ops.add(&ops.add(v[0], v[1]), v[2]) == ops.add(v[0], &ops.add(v[1], v[2]))
            }
            Axiom::AddIdentity => ops.add(v[0], &zero) == *v[0] && ops.add(&zero, v[0]) == *v[0],
            Axiom::SelfInverse => ops.add(v[0], v[0]) == zero,
            Axiom::ScalarCompatible => {
                ops.scalar_mul(s[0], &ops.scalar_mul(s[1], v[0]))
                    == ops.scalar_mul(ops.field_mul(s[0], s[1]), v[0])
            }
            Axiom::ScalarIdentity => ops.scalar_mul(Gf2::ONE, v[0]) == *v[0],
            Axiom::DistributesOverVectorAdd => {
                ops.scalar_mul(s[0], &ops.add(v[0], v[1]))
                    == ops.add(&ops.scalar_mul(s[0], v[0]), &ops.scalar_mul(s[0], v[1]))
            }
            Axiom::DistributesOverFieldAdd => {
                ops.scalar_mul(ops.field_add(s[0], s[1]), v[0])
                    == ops.add(&ops.scalar_mul(s[0], v[0]), &ops.scalar_mul(s[1], v[0]))
            }
            Axiom::PositiveDefinite => (ops.norm(v[0]) == 0) == (*v[0] == zero),
            Axiom::Homogeneous => {
                u32::from(ops.norm(&ops.scalar_mul(s[0], v[0])))
                    == u32::from(s[0].abs_val()) * u32::from(ops.norm(v[0]))
            }
            Axiom::Triangle => {
                u32::from(ops.norm(&ops.add(v[0], v[1])))
                    <= u32::from(ops.norm(v[0])) + u32::from(ops.norm(v[1]))
            }
            Axiom::StrictTriangle => {
                u32::from(ops.norm(&ops.add(v[0], v[1])))
                    < u32::from(ops.norm(v[0])) + u32::from(ops.norm(v[1]))
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inputs on which an axiom failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Counterexample {
    pub scalars: Vec<Gf2>,
    pub vectors: Vec<FinSupportVec>,
}

impl Counterexample {
    /// Re-evaluates `axiom` on these inputs; true if it still fails.
    pub fn refails<A: Arithmetic + ?Sized>(&self, axiom: Axiom, ops: &A) -> bool {
        let refs: Vec<&FinSupportVec> = self.vectors.iter().collect();
        !axiom.holds(ops, &self.scalars, &refs)
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.scalars {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        for v in &self.vectors {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    VectorSpace,
    Norm,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::VectorSpace => "vector-space",
            Suite::Norm => "norm",
        }
    }

    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            Suite::VectorSpace => &Axiom::VECTOR_SPACE,
            Suite::Norm => &Axiom::NORM,
        }
    }
}

/// Bounds on exhaustive enumeration. Above a bound the scan samples
/// `samples` seeded random tuples instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub single_max_p: u32,
    pub pair_max_p: u32,
    pub triple_max_p: u32,
    pub samples: u64,
    pub seed: u64,
    /// Counterexamples retained per axiom (the failure count is always exact).
    pub keep_counterexamples: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            single_max_p: 20,
            pair_max_p: 10,
            triple_max_p: 6,
            samples: 200_000,
            seed: DEFAULT_SEED,
            keep_counterexamples: 16,
        }
    }
}

impl ScanConfig {
    fn exhaustive(&self, p: u32, vectors: u32) -> bool {
        match vectors {
            0 | 1 => p <= self.single_max_p,
            2 => p <= self.pair_max_p,
            _ => p <= self.triple_max_p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub checks: u64,
    pub failures: u64,
    pub exhaustive: bool,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of a suite scan at truncation `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub suite: Suite,
    pub truncation_p: u32,
    pub results: Vec<AxiomResult>,
    /// Retained counterexamples, sorted by axiom then lexicographically.
    pub failures: Vec<(Axiom, Counterexample)>,
}

impl AxiomReport {
    pub fn checks_run(&self) -> u64 {
        self.results.iter().map(|r| r.checks).sum()
    }

    pub fn failure_count(&self) -> u64 {
        self.results.iter().map(|r| r.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    /// Line-oriented summary: a header, one line per axiom, then one
    /// `counterexample` line per retained failure.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {} p={} checks={} failures={}\n",
            self.suite.name(),
            self.truncation_p,
            self.checks_run(),
            self.failure_count()
        );
        for r in &self.results {
            out.push_str(&format!(
                "{} {} checks={} failures={} {}\n",
                r.axiom,
                if r.passed() { "pass" } else { "FAIL" },
                r.checks,
                r.failures,
                if r.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                }
            ));
        }
        for (axiom, ce) in &self.failures {
            out.push_str(&format!("counterexample {axiom} {ce}\n"));
        }
        out
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    kept: Vec<Counterexample>,
}

impl Tally {
    fn record(&mut self, ce: impl FnOnce() -> Counterexample, keep: usize) {
        self.failures += 1;
        if keep > 0 {
            self.kept.push(ce());
            if self.kept.len() >= 2 * keep {
                self.trim(keep);
            }
        }
    }

    fn trim(&mut self, keep: usize) {
        self.kept.sort();
        self.kept.dedup();
        self.kept.truncate(keep);
    }

    fn merge(mut self, other: Tally, keep: usize) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        self.kept.extend(other.kept);
        self.trim(keep);
        self
    }
}

fn scalars_of(bits: u64, count: u32) -> Vec<Gf2> {
    (0..count).map(|k| Gf2::new(bits >> k & 1 == 1)).collect()
}

fn check_one<A: Arithmetic + ?Sized>(
    ops: &A,
    axiom: Axiom,
    scalars: &[Gf2],
    vectors: &[&FinSupportVec],
    tally: &mut Tally,
    keep: usize,
) {
    if !axiom.applies(vectors) {
        return;
    }
    tally.checks += 1;
    if !axiom.holds(ops, scalars, vectors) {
        tally.record(
            || Counterexample {
                scalars: scalars.to_vec(),
                vectors: vectors.iter().map(|v| (*v).clone()).collect(),
            },
            keep,
        );
    }
}

fn scan_exhaustive<A: Arithmetic + ?Sized>(
    ops: &A,
    axiom: Axiom,
    table: &[FinSupportVec],
    p: u32,
    keep: usize,
) -> Tally {
    let (ns, nv) = axiom.arity();
    let mask = (1u64 << p) - 1;
    let total = 1u64 << (ns + p * nv);
    (0..total)
        .into_par_iter()
        .fold(Tally::default, |mut tally, code| {
            let scalars = scalars_of(code, ns);
            let rest = code >> ns;
            let vectors: Vec<&FinSupportVec> = (0..nv)
                .map(|j| &table[(rest >> (p * j) & mask) as usize])
                .collect();
            check_one(ops, axiom, &scalars, &vectors, &mut tally, keep);
            tally
        })
        .reduce(Tally::default, |a, b| a.merge(b, keep))
}

fn random_vector(rng: &mut ChaCha8Rng, p: u32) -> FinSupportVec {
    if p <= 64 {
        let mask = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        FinSupportVec::unrank(rng.gen::<u64>() & mask)
    } else {
        let support = (1..=u64::from(p)).filter(|_| rng.gen::<bool>()).collect();
        FinSupportVec::from_support(support).expect("ascending indices")
    }
}

fn scan_sampled<A: Arithmetic + ?Sized>(
    ops: &A,
    axiom: Axiom,
    p: u32,
    config: &ScanConfig,
) -> Tally {
    let (ns, nv) = axiom.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (axiom as u64).wrapping_mul(0x9e37_79b9));
    let mut tally = Tally::default();
    for _ in 0..config.samples {
        let scalars = scalars_of(rng.gen(), ns);
        let owned: Vec<FinSupportVec> = (0..nv).map(|_| random_vector(&mut rng, p)).collect();
        let vectors: Vec<&FinSupportVec> = owned.iter().collect();
        check_one(
            ops,
            axiom,
            &scalars,
            &vectors,
            &mut tally,
            config.keep_counterexamples,
        );
    }
    tally.trim(config.keep_counterexamples);
    tally
}

fn run_suite<A: Arithmetic + ?Sized>(
    ops: &A,
    suite: Suite,
    p: u32,
    config: &ScanConfig,
) -> AxiomReport {
    assert!(p >= 1, "truncation must be at least 1");
    let keep = config.keep_counterexamples.max(1);
    let config = ScanConfig {
        keep_counterexamples: keep,
        ..*config
    };
    let table: Vec<FinSupportVec> = if config.exhaustive(p, 1) {
        truncation(p).collect()
    } else {
        Vec::new()
    };
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for &axiom in suite.axioms() {
        let (_, nv) = axiom.arity();
        let exhaustive = config.exhaustive(p, nv);
        let tally = if exhaustive {
            scan_exhaustive(ops, axiom, &table, p, keep)
        } else {
            scan_sampled(ops, axiom, p, &config)
        };
        results.push(AxiomResult {
            axiom,
            checks: tally.checks,
            failures: tally.failures,
            exhaustive,
        });
        failures.extend(tally.kept.into_iter().map(|ce| (axiom, ce)));
    }
    AxiomReport {
        suite,
        truncation_p: p,
        results,
        failures,
    }
}

/// Checks the vector-space axioms of `S` on the truncation at `p`.
pub fn verify_vector_space_axioms(p: u32) -> AxiomReport {
    verify_vector_space_axioms_with(&Standard, p, &ScanConfig::default())
}

pub fn verify_vector_space_axioms_with<A: Arithmetic + ?Sized>(
    ops: &A,
    p: u32,
    config: &ScanConfig,
) -> AxiomReport {
    run_suite(ops, Suite::VectorSpace, p, config)
}

/// Checks the norm axioms, plus strictness of the triangle inequality for
/// distinct non-zero pairs, on the truncation at `p`.
pub fn verify_norm_axioms(p: u32) -> AxiomReport {
    verify_norm_axioms_with(&Standard, p, &ScanConfig::default())
}

pub fn verify_norm_axioms_with<A: Arithmetic + ?Sized>(
    ops: &A,
    p: u32,
    config: &ScanConfig,
) -> AxiomReport {
    run_suite(ops, Suite::Norm, p, config)
}
