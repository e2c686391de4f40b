//! Exact checks of the vanishing-free consequences of Skoda's theorem, and a
//! seeded randomized suite running them.
//!
//! Every check returns a [`Verdict`]; a failing verdict on valid input means
//! a bug somewhere in the stack, since each statement is a theorem.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal, MAX_DIM};
use crate::multiplier::{
    bounding_facets, integral_closure, jumping_length, jumping_numbers, mixed_multiplier_ideal,
    multiplier_ideal, multiplier_of_polytope,
};
use crate::staircase::{Grid, Staircase};
use crate::polytope::build;
use crate::rational::{self, int, rat, Rational};
use crate::verdict::{params, Step, Verdict};

fn same_dim(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    Ok(())
}

fn require_proper(a: &MonomialIdeal, what: &str) -> Result<()> {
    if !a.is_proper_nonzero() {
        return Err(Error::precondition(format!(
            "{what} must be neither zero nor the unit ideal"
        )));
    }
    Ok(())
}

fn to_u32(k: u64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::input("exponent too large"))
}

/// Skoda I: `J(b^j) = b · J(b^{j-1})` for every `n <= j <= m`.
pub fn check_skoda_i(b: &MonomialIdeal, m: u64) -> Result<Verdict> {
    b.require_nonzero()?;
    let n = b.ambient_dim() as u64;
    if m < n {
        return Err(Error::precondition(format!("Skoda's theorem needs m >= n = {n}, got m = {m}")));
    }
    let p = build(b)?;
    let j = |k: u64| multiplier_of_polytope(&p.scale(&Rational::from_integer(k.into()))?);
    let mut prev = j(n - 1)?;
    let mut steps = Vec::new();
    for k in n..=m {
        let cur = j(k)?;
        let rhs = b.multiply(&prev)?;
        steps.push(Step::equal(format!("J(b^{k}) = b·J(b^{})", k - 1), cur.clone(), rhs));
        prev = cur;
    }
    Verdict::from_steps(
        "skoda_i",
        params([("b", b.to_string()), ("m", m.to_string())]),
        steps,
    )
}

/// Skoda II: `J(a1^c · a2^d) = a1^{c-n+1} · J(a1^{n-1} · a2^d)` for `c >= n`.
pub fn check_skoda_ii(
    a1: &MonomialIdeal,
    a2: &MonomialIdeal,
    c: u64,
    d: &Rational,
) -> Result<Verdict> {
    same_dim(a1, a2)?;
    a1.require_nonzero()?;
    a2.require_nonzero()?;
    rational::require_positive(d, "d")?;
    let n = a1.ambient_dim() as u64;
    if c < n {
        return Err(Error::precondition(format!("Skoda's theorem needs c >= n = {n}, got c = {c}")));
    }
    let lhs = mixed_multiplier_ideal(&[(a1.clone(), int(c as i64)), (a2.clone(), d.clone())])?;
    let inner = mixed_multiplier_ideal(&[(a1.clone(), int(n as i64 - 1)), (a2.clone(), d.clone())])?;
    let rhs = a1.power(to_u32(c + 1 - n)?).multiply(&inner)?;
    Verdict::from_steps(
        "skoda_ii",
        params([
            ("a1", a1.to_string()),
            ("a2", a2.to_string()),
            ("c", c.to_string()),
            ("d", d.to_string()),
        ]),
        vec![Step::equal("J(a1^c·a2^d) = a1^(c-n+1)·J(a1^(n-1)·a2^d)", lhs, rhs)],
    )
}

/// Briançon–Skoda: `closure(b^m) ⊆ J(b^m) ⊆ b^{m+1-n}` for `m >= n`.
pub fn check_briancon_skoda(b: &MonomialIdeal, m: u64) -> Result<Verdict> {
    b.require_nonzero()?;
    let n = b.ambient_dim() as u64;
    if m < n {
        return Err(Error::precondition(format!("Briançon–Skoda needs m >= n = {n}, got m = {m}")));
    }
    let bm = b.power(to_u32(m)?);
    let closure = integral_closure(&bm)?;
    let j = multiplier_ideal(b, &int(m as i64))?;
    Verdict::from_steps(
        "briancon_skoda",
        params([("b", b.to_string()), ("m", m.to_string())]),
        vec![
            Step::subset("closure(b^m) ⊆ J(b^m)", closure, j.clone()),
            Step::subset("J(b^m) ⊆ b^(m+1-n)", j, b.power(to_u32(m + 1 - n)?)),
        ],
    )
}

/// Subadditivity: `J(a^c · b^d) ⊆ J(a^c) · J(b^d)`, and with `m` also
/// `J(a^{cm}) ⊆ J(a^c)^m`.
pub fn check_subadditivity(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    c: &Rational,
    d: &Rational,
    m: Option<u64>,
) -> Result<Verdict> {
    same_dim(a, b)?;
    rational::require_positive(c, "c")?;
    rational::require_positive(d, "d")?;
    let ja = multiplier_ideal(a, c)?;
    let jb = multiplier_ideal(b, d)?;
    let mixed = mixed_multiplier_ideal(&[(a.clone(), c.clone()), (b.clone(), d.clone())])?;
    let mut steps = vec![Step::subset("J(a^c·b^d) ⊆ J(a^c)·J(b^d)", mixed, ja.multiply(&jb)?)];
    let mut parameters = params([
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("c", c.to_string()),
        ("d", d.to_string()),
    ]);
    if let Some(m) = m {
        let m32 = to_u32(m)?;
        let lhs = multiplier_ideal(a, &(c * int(m as i64)))?;
        steps.push(Step::subset("J(a^(cm)) ⊆ J(a^c)^m", lhs, ja.power(m32)));
        parameters.insert("m".into(), m.to_string());
    }
    Verdict::from_steps("subadditivity", parameters, steps)
}

/// Restriction: `J((b|_Y)^c) ⊆ J(b^c)|_Y` for the coordinate subspace `Y`
/// spanned by `keep`. Records whether the inclusion is strict.
pub fn check_restriction(b: &MonomialIdeal, keep: &[usize], c: &Rational) -> Result<Verdict> {
    rational::require_positive(c, "c")?;
    let restricted = b.restrict(keep)?;
    if restricted.is_zero() {
        return Err(Error::precondition(
            "the subspace lies inside the zero locus of b (restriction is zero)",
        ));
    }
    let lhs = multiplier_ideal(&restricted, c)?;
    let rhs = multiplier_ideal(b, c)?.restrict(keep)?;
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let strict = lhs != rhs;
    let mut v = Verdict::from_steps(
        "restriction",
        params([
            ("b", b.to_string()),
            ("keep", format!("{sorted:?}")),
            ("c", c.to_string()),
        ]),
        vec![Step::subset("J((b|Y)^c) ⊆ J(b^c)|Y", lhs, rhs)],
    )?;
    v.observe("strict", strict);
    Ok(v)
}

/// For consecutive jumping numbers `ξ < ξ'` of `a` up to `n` (with `ξ_0 = 0`):
/// `b^m · J(a^ξ) ∩ J(a^ξ') ⊆ b^{m-n} · J(a^ξ')`, for `m > n`.
///
/// A spectrum can hold hundreds of jumps, so the pairs are compared in
/// height-function form on a grid containing every generator involved;
/// the verdict's sides are the ideals of the failing pair, or of the last
/// pair when all hold.
pub fn check_jump_lemma(a: &MonomialIdeal, b: &MonomialIdeal, m: u64) -> Result<Verdict> {
    same_dim(a, b)?;
    require_proper(a, "a")?;
    b.require_nonzero()?;
    let n = a.ambient_dim();
    let nn = n as u64;
    if m <= nn {
        return Err(Error::precondition(format!("the lemma needs m > n = {n}, got m = {m}")));
    }
    let mut values = vec![int(0)];
    values.extend(jumping_numbers(a, &int(nn as i64))?.values());
    let facets = bounding_facets(a)?;
    let bm = b.power(to_u32(m)?);
    let bmn = b.power(to_u32(m - nn)?);

    // J(a^c) for c <= n has generators with x_i-exponent at most
    // ceil(n·b_f / a_{f,i}) + 1; products add at most the exponents of b^m.
    let bm_max = bm.max_exponents();
    let sides: Vec<usize> = (0..n - 1)
        .map(|i| {
            let j_max = facets
                .iter()
                .filter(|(a, _)| a[i] > 0)
                .map(|(a, off)| (nn as i64 * off + a[i] - 1) / a[i] + 1)
                .max()
                .unwrap_or(0);
            bm_max[i] as usize + j_max as usize + 1
        })
        .collect();
    let grid = Grid::new(sides);
    let j = |c: &Rational| -> Result<Staircase> {
        let (num, den) = (
            c.numer().to_i128().ok_or(Error::Overflow("scaling facets"))?,
            c.denom().to_i128().ok_or(Error::Overflow("scaling facets"))?,
        );
        Ok(Staircase::multiplier(&facets, num, den, &grid))
    };

    let mut failing = None;
    let mut current = j(&values[0])?;
    for i in 0..values.len() - 1 {
        let next = j(&values[i + 1])?;
        let lhs = current.times(&bm).intersect(&next);
        let rhs = next.times(&bmn);
        let last = i + 2 == values.len();
        if !lhs.is_subset_of(&rhs) || last {
            failing = Some((i, lhs, rhs));
            if !last {
                break;
            }
        }
        current = next;
    }
    let (i, lhs, rhs) = failing.expect("at least one pair");
    let mut v = Verdict::from_steps(
        "jump_lemma",
        params([("a", a.to_string()), ("b", b.to_string()), ("m", m.to_string())]),
        vec![Step::subset(
            format!("ξ = {}, ξ' = {}", values[i], values[i + 1]),
            lhs.to_ideal(),
            rhs.to_ideal(),
        )],
    )?;
    v.observe("pairs", values.len() - 1);
    Ok(v)
}

/// `b^m ∩ (x^v) ⊆ b^{m-k} · (x^v)` with `k = ℓ(x^v) · n`, for `m >= k`.
pub fn check_uniform_artin_rees(v: &ExponentVector, b: &MonomialIdeal, m: u64) -> Result<Verdict> {
    if v.dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: b.ambient_dim(),
            found: v.dim(),
        });
    }
    b.require_nonzero()?;
    let n = b.ambient_dim() as u64;
    let ell = jumping_length(v)? as u64;
    let k = ell * n;
    if m < k {
        return Err(Error::precondition(format!(
            "uniform Artin–Rees needs m >= k = ℓ·n = {k}, got m = {m}"
        )));
    }
    let f = MonomialIdeal::principal(v.clone());
    let lhs = b.power(to_u32(m)?).intersect(&f)?;
    let rhs = b.power(to_u32(m - k)?).multiply(&f)?;
    let mut parameters = params([
        ("f", MonomialIdeal::principal(v.clone()).to_string()),
        ("b", b.to_string()),
        ("m", m.to_string()),
    ]);
    parameters.insert("k".into(), k.to_string());
    Verdict::from_steps(
        "uniform_artin_rees",
        parameters,
        vec![Step::subset("b^m ∩ (f) ⊆ b^(m-k)·(f)", lhs, rhs)],
    )
}

/// For `ξ ∈ (n-1, n-1+window]`: `ξ` is a jumping number iff `ξ + 1` is.
///
/// The left end is open. Skoda's theorem `J(a^c) = a·J(a^{c-1})` needs
/// `c >= n`, and the argument applies it at `c = ξ + 1 - ε`. At `ξ = n-1`
/// itself the statement can fail: for `(x^2, y^3)` the number 2 is a jump
/// (witness `x y^2`) while 1 is not. Whether `n-1` and `n` are jumps is
/// recorded as an observation.
pub fn check_periodicity(a: &MonomialIdeal, window: &Rational) -> Result<Verdict> {
    require_proper(a, "a")?;
    rational::require_positive(window, "window")?;
    let n = int(a.ambient_dim() as i64);
    let lo = &n - int(1);
    let hi = &lo + window;
    let bound = std::cmp::max(&lo + window * int(2), &n + window);
    let jumps = jumping_numbers(a, &bound)?.values();
    let shifted: Vec<Rational> = jumps
        .iter()
        .filter(|x| **x > lo && **x <= hi)
        .map(|x| x + int(1))
        .collect();
    let upper: Vec<Rational> = jumps
        .iter()
        .filter(|x| **x > n && **x <= &hi + int(1))
        .cloned()
        .collect();
    let mut v = Verdict::from_spectra(
        "periodicity",
        params([("a", a.to_string()), ("window", window.to_string())]),
        "{ξ+1 : ξ jump in (n-1, n-1+w]} = {jumps in (n, n+w]}",
        shifted,
        upper,
    );
    v.observe("n-1_is_jump", jumps.contains(&lo));
    v.observe("n_is_jump", jumps.contains(&n));
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    SkodaI,
    SkodaII,
    BrianconSkoda,
    Subadditivity,
    Restriction,
    JumpLemma,
    UniformArtinRees,
    Periodicity,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::SkodaI,
        Check::SkodaII,
        Check::BrianconSkoda,
        Check::Subadditivity,
        Check::Restriction,
        Check::JumpLemma,
        Check::UniformArtinRees,
        Check::Periodicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SkodaI => "skoda_i",
            Check::SkodaII => "skoda_ii",
            Check::BrianconSkoda => "briancon_skoda",
            Check::Subadditivity => "subadditivity",
            Check::Restriction => "restriction",
            Check::JumpLemma => "jump_lemma",
            Check::UniformArtinRees => "uniform_artin_rees",
            Check::Periodicity => "periodicity",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                Error::input(format!("unknown check {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parameters of a randomized run. The same config always yields the same
/// report.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub dims: Vec<usize>,
    pub max_gens: usize,
    pub max_exp: u32,
    pub checks: Vec<Check>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            cases: 100,
            dims: vec![2, 3],
            max_gens: 5,
            max_exp: 8,
            checks: Check::ALL.to_vec(),
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(Error::input("at least one dimension is required"));
        }
        if let Some(d) = self.dims.iter().find(|&&d| d == 0 || d > MAX_DIM) {
            return Err(Error::input(format!("dimension {d} outside 1..={MAX_DIM}")));
        }
        if self.max_gens == 0 {
            return Err(Error::input("max_gens must be at least 1"));
        }
        if self.max_exp == 0 || self.max_exp > crate::monomial::MAX_EXPONENT {
            return Err(Error::input("max_exp must be in 1..=64"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum Instance {
    SkodaI { b: MonomialIdeal, m: u64 },
    SkodaII { a1: MonomialIdeal, a2: MonomialIdeal, c: u64, d: Rational },
    BrianconSkoda { b: MonomialIdeal, m: u64 },
    Subadditivity { a: MonomialIdeal, b: MonomialIdeal, c: Rational, d: Rational, m: u64 },
    Restriction { b: MonomialIdeal, keep: Vec<usize>, c: Rational },
    JumpLemma { a: MonomialIdeal, b: MonomialIdeal, m: u64 },
    UniformArtinRees { v: ExponentVector, b: MonomialIdeal, m: u64 },
    Periodicity { a: MonomialIdeal },
    /// No admissible instance could be drawn (e.g. every coordinate subspace
    /// lies in the zero locus).
    Skipped,
}

impl Instance {
    fn run(&self) -> Option<Result<Verdict>> {
        Some(match self {
            Instance::SkodaI { b, m } => check_skoda_i(b, *m),
            Instance::SkodaII { a1, a2, c, d } => check_skoda_ii(a1, a2, *c, d),
            Instance::BrianconSkoda { b, m } => check_briancon_skoda(b, *m),
            Instance::Subadditivity { a, b, c, d, m } => check_subadditivity(a, b, c, d, Some(*m)),
            Instance::Restriction { b, keep, c } => check_restriction(b, keep, c),
            Instance::JumpLemma { a, b, m } => check_jump_lemma(a, b, *m),
            Instance::UniformArtinRees { v, b, m } => check_uniform_artin_rees(v, b, *m),
            Instance::Periodicity { a } => check_periodicity(a, &Rational::one()),
            Instance::Skipped => return None,
        })
    }
}

struct Sampler<'a> {
    rng: ChaCha8Rng,
    config: &'a SuiteConfig,
}

impl Sampler<'_> {
    fn dim(&mut self) -> usize {
        self.config.dims[self.rng.random_range(0..self.config.dims.len())]
    }

    /// Uniform generator count in `[1, max_gens]`, exponents uniform in
    /// `[0, max_exp]`.
    fn ideal(&mut self, n: usize) -> MonomialIdeal {
        let count = self.rng.random_range(1..=self.config.max_gens);
        let gens = (0..count)
            .map(|_| {
                ExponentVector::new(
                    (0..n)
                        .map(|_| self.rng.random_range(0..=self.config.max_exp))
                        .collect(),
                )
            })
            .collect();
        crate::monomial::minimalize(gens, n).expect("consistent dimensions")
    }

    /// Like [`Sampler::ideal`], redrawing unit ideals.
    fn proper_ideal(&mut self, n: usize) -> MonomialIdeal {
        loop {
            let a = self.ideal(n);
            if !a.is_unit() {
                return a;
            }
        }
    }

    fn pick<T: Clone>(&mut self, options: &[T]) -> T {
        options[self.rng.random_range(0..options.len())].clone()
    }

    fn instance(&mut self, check: Check) -> Instance {
        let n = self.dim();
        let nn = n as u64;
        let halves = [rat(1, 2), int(1), rat(3, 2)];
        match check {
            Check::SkodaI => {
                // The check walks every j in n..=m, so m = n + 2 covers the
                // equalities at n, n + 1 and n + 2.
                Instance::SkodaI {
                    b: self.proper_ideal(n),
                    m: nn + 2,
                }
            }
            Check::SkodaII => {
                let a1 = self.proper_ideal(n);
                let a2 = self.proper_ideal(n);
                let d = self.pick(&[rat(1, 2), int(1)]);
                Instance::SkodaII { a1, a2, c: nn, d }
            }
            Check::BrianconSkoda => Instance::BrianconSkoda {
                b: self.proper_ideal(n),
                m: nn,
            },
            Check::Subadditivity => {
                let a = self.proper_ideal(n);
                let b = self.proper_ideal(n);
                let c = self.pick(&halves);
                let d = self.pick(&halves);
                Instance::Subadditivity { a, b, c, d, m: 2 }
            }
            Check::Restriction => {
                let c = self.pick(&[rat(1, 2), int(1), rat(3, 2), int(2)]);
                // Redraw b until some proper coordinate subspace is not
                // contained in its zero locus.
                for _ in 0..RESTRICTION_ATTEMPTS {
                    let b = self.proper_ideal(n);
                    let mut subsets: Vec<u32> = (1..(1u32 << n) - 1).collect();
                    subsets.shuffle(&mut self.rng);
                    let keep = subsets
                        .into_iter()
                        .map(|s| (0..n).filter(|i| s & (1 << i) != 0).collect::<Vec<_>>())
                        .find(|keep| b.restrict(keep).map(|r| !r.is_zero()).unwrap_or(false));
                    if let Some(keep) = keep {
                        return Instance::Restriction { b, keep, c };
                    }
                }
                Instance::Skipped
            }
            Check::JumpLemma => {
                let a = self.proper_ideal(n);
                let b = self.proper_ideal(n);
                Instance::JumpLemma { a, b, m: nn + 1 }
            }
            Check::UniformArtinRees => {
                let v = loop {
                    let v = ExponentVector::new((0..n).map(|_| self.rng.random_range(0..=2)).collect());
                    if !v.is_zero() {
                        break v;
                    }
                };
                let b = self.proper_ideal(n);
                let ell = jumping_length(&v).expect("nonzero monomial") as u64;
                let m = ell * nn + self.rng.random_range(0..=1);
                Instance::UniformArtinRees { v, b, m }
            }
            Check::Periodicity => Instance::Periodicity {
                a: self.proper_ideal(n),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub cases: usize,
    pub held: usize,
    pub failed: usize,
    pub errors: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseFailure {
    pub check: Check,
    pub case: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictRestriction {
    pub case: usize,
    pub verdict: Verdict,
}

/// Draws of `b` before a restriction case is skipped.
const RESTRICTION_ATTEMPTS: usize = 64;

/// Most strict restriction witnesses kept in a report.
pub const MAX_STRICT_WITNESSES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub config: SuiteConfig,
    pub all_hold: bool,
    pub summaries: Vec<CheckSummary>,
    pub failures: Vec<CaseFailure>,
    /// Number of restriction cases whose inclusion was strict.
    pub restriction_strict_count: usize,
    /// The first few strict restriction instances, in case order.
    pub restriction_strict: Vec<StrictRestriction>,
}

/// Runs every selected check on `cases` random instances.
///
/// Instances are drawn sequentially from one ChaCha8 stream per check (so
/// selecting a subset of checks does not change the others' instances),
/// then evaluated in parallel and merged in case order.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let mut jobs: Vec<(Check, usize, Instance)> = Vec::new();
    for &check in &checks {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(check as u64);
        let mut sampler = Sampler { rng, config };
        for case in 0..config.cases {
            jobs.push((check, case, sampler.instance(check)));
        }
    }
    let outcomes: Vec<Option<Result<Verdict>>> = jobs.par_iter().map(|(_, _, inst)| inst.run()).collect();

    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|&check| CheckSummary {
            check,
            cases: config.cases,
            held: 0,
            failed: 0,
            errors: 0,
            skipped: 0,
        })
        .collect();
    let mut failures = Vec::new();
    let mut strict = Vec::new();
    let mut strict_count = 0;
    for ((check, case, _), outcome) in jobs.into_iter().zip(outcomes) {
        let summary = summaries
            .iter_mut()
            .find(|s| s.check == check)
            .expect("summary per check");
        match outcome {
            None => summary.skipped += 1,
            Some(Err(e)) => {
                summary.errors += 1;
                failures.push(CaseFailure {
                    check,
                    case,
                    verdict: None,
                    error: Some(e.to_string()),
                });
            }
            Some(Ok(v)) if !v.holds => {
                summary.failed += 1;
                failures.push(CaseFailure {
                    check,
                    case,
                    verdict: Some(v),
                    error: None,
                });
            }
            Some(Ok(v)) => {
                summary.held += 1;
                if v.observations.get("strict").map(String::as_str) == Some("true") {
                    strict_count += 1;
                    if strict.len() < MAX_STRICT_WITNESSES {
                        strict.push(StrictRestriction { case, verdict: v });
                    }
                }
            }
        }
    }
    Ok(Report {
        schema_version: "1",
        config: config.clone(),
        all_hold: failures.is_empty(),
        summaries,
        failures,
        restriction_strict_count: strict_count,
        restriction_strict: strict,
    })
}

/// `m` as a `u64`, for parsing CLI arguments into check parameters.
pub fn parse_count(text: &str) -> Result<u64> {
    let r = rational::parse_rational(text)?;
    if !r.is_integer() || r < int(0) {
        return Err(Error::input(format!("expected a nonnegative integer, got {text:?}")));
    }
    r.to_integer()
        .to_u64()
        .ok_or_else(|| Error::input(format!("integer too large: {text}")))
}
