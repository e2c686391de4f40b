//! Monomial ideals in `k[x_1, ..., x_n]` and their exact algebra.
//!
//! A monomial ideal is identified with the upward-closed set of exponent
//! vectors of its monomials, and stored through its minimal generators in
//! graded-lexicographic order. Because that representation is canonical,
//! structural equality of two [`MonomialIdeal`] values is ideal equality.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest ambient dimension accepted from user input.
pub const MAX_DIM: usize = 8;
/// Largest generator exponent accepted from user input.
pub const MAX_EXPONENT: u32 = 64;

/// A point of the exponent lattice, i.e. the monomial `x^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit_vector(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Exponent vector of the product of the two monomials.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn support_mask(&self) -> u32 {
        self.support().fold(0, |acc, i| acc | (1 << i))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Graded-lexicographic order: total degree first, then the larger power of
/// `x_1` (then `x_2`, ...) comes first, so `x^2 < xy < y^2`.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Calls `f` on every point of `[0, bounds_0] x ... x [0, bounds_{n-1}]`.
pub(crate) fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let n = bounds.len();
    let mut cur = vec![0u32; n];
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Minimal elements of an upward-closed set of exponents, searched inside a
/// box that is known to contain all of them.
///
/// `m` is minimal iff it satisfies `pred` and no `m - e_i` does.
pub(crate) fn minimal_points_in_box(
    bounds: &[u32],
    pred: impl Fn(&[u32]) -> bool,
) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut scratch = vec![0u32; bounds.len()];
    for_each_in_box(bounds, |m| {
        if !pred(m) {
            return;
        }
        scratch.copy_from_slice(m);
        for i in 0..m.len() {
            if m[i] == 0 {
                continue;
            }
            scratch[i] -= 1;
            let below = pred(&scratch);
            scratch[i] += 1;
            if below {
                return;
            }
        }
        out.push(ExponentVector(m.to_vec()));
    });
    out
}

/// A monomial ideal, stored as its minimal generators.
///
/// Serializes as its sorted array of generator exponent vectors.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ambient_dim: usize,
    generators: Vec<ExponentVector>,
    variable_names: Option<Vec<String>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.generators.hash(state);
    }
}

/// Ideal generated by `gens` with divisible generators dropped and the rest
/// put in canonical order.
pub fn minimalize(gens: Vec<ExponentVector>, n: usize) -> Result<MonomialIdeal> {
    if let Some(bad) = gens.iter().find(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    Ok(MonomialIdeal::from_generators(n, gens))
}

impl MonomialIdeal {
    /// Validated constructor for user-supplied data: enforces the desk-scale
    /// bounds on dimension and exponents, then minimalizes.
    pub fn new(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::input(format!(
                "ambient dimension must be in 1..={MAX_DIM}, got {n}"
            )));
        }
        for g in &gens {
            if let Some(&e) = g.entries().iter().find(|&&e| e > MAX_EXPONENT) {
                return Err(Error::input(format!(
                    "exponent {e} exceeds the bound {MAX_EXPONENT}"
                )));
            }
        }
        minimalize(gens, n)
    }

    /// Builds from vectors already known to have length `n`.
    pub(crate) fn from_generators(n: usize, mut gens: Vec<ExponentVector>) -> Self {
        debug_assert!(gens.iter().all(|g| g.dim() == n));
        gens.sort();
        gens.dedup();
        let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
        // Sorted by degree, so any divisor of g precedes it.
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal {
            ambient_dim: n,
            generators: kept,
            variable_names: None,
        }
    }

    /// Builds from a list that is already minimal; only sorts.
    pub(crate) fn from_minimal(n: usize, mut gens: Vec<ExponentVector>) -> Self {
        gens.sort();
        debug_assert!(gens.windows(2).all(|w| w[0] != w[1]));
        MonomialIdeal {
            ambient_dim: n,
            generators: gens,
            variable_names: None,
        }
    }

    pub fn from_vecs(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|g| ExponentVector(g.to_vec())).collect())
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            ambient_dim: n,
            generators: Vec::new(),
            variable_names: None,
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            ambient_dim: n,
            generators: vec![ExponentVector::zeros(n)],
            variable_names: None,
        }
    }

    /// The principal ideal `(x^v)`.
    pub fn principal(v: ExponentVector) -> Self {
        MonomialIdeal {
            ambient_dim: v.dim(),
            generators: vec![v],
            variable_names: None,
        }
    }

    /// `(x_1, ..., x_e)` in `n` variables.
    pub fn coordinate(n: usize, e: usize) -> Self {
        assert!(e <= n);
        if e == 0 {
            return Self::unit(n);
        }
        Self::from_generators(n, (0..e).map(|i| ExponentVector::unit_vector(n, i)).collect())
    }

    /// The maximal ideal of the origin.
    pub fn maximal(n: usize) -> Self {
        Self::coordinate(n, n)
    }

    pub fn with_variable_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: names.len(),
            });
        }
        self.variable_names = Some(names);
        Ok(self)
    }

    pub fn variable_names(&self) -> Option<&[String]> {
        self.variable_names.as_deref()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// Neither zero nor the unit ideal.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.ambient_dim != n {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            });
        }
        Ok(())
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.ambient_dim];
        for g in &self.generators {
            for (o, &e) in out.iter_mut().zip(g.entries()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn contains_monomial(&self, m: &ExponentVector) -> Result<bool> {
        self.check_dim(m.dim())?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    pub(crate) fn contains_exponents(&self, m: &[u32]) -> bool {
        self.generators
            .iter()
            .any(|g| g.entries().iter().zip(m).all(|(a, b)| a <= b))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_generator_outside(other)?.is_none())
    }

    /// A generator of `other` that is not in `self`, if any. This is the
    /// counterexample to `other ⊆ self`.
    pub fn first_generator_outside(&self, other: &MonomialIdeal) -> Result<Option<ExponentVector>> {
        self.check_dim(other.ambient_dim)?;
        Ok(other
            .generators
            .iter()
            .find(|g| !self.contains_exponents(g.entries()))
            .cloned())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient_dim)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.add(b));
            }
        }
        Ok(Self::from_generators(self.ambient_dim, gens))
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut result = Self::unit(self.ambient_dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.multiply(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base).expect("same dimension");
            }
        }
        result
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient_dim)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Ok(Self::from_generators(self.ambient_dim, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient_dim)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_generators(self.ambient_dim, gens))
    }

    /// Image of the ideal in `k[x_i : i ∈ keep]` after setting the other
    /// variables to zero. Indices are re-numbered in increasing order.
    pub fn restrict(&self, keep: &[usize]) -> Result<MonomialIdeal> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::input("restriction needs at least one variable"));
        }
        if let Some(&i) = keep.iter().find(|&&i| i >= self.ambient_dim) {
            return Err(Error::input(format!(
                "variable index {i} out of range for dimension {}",
                self.ambient_dim
            )));
        }
        let gens = self
            .generators
            .iter()
            .filter(|g| g.support().all(|i| keep.binary_search(&i).is_ok()))
            .map(|g| ExponentVector(keep.iter().map(|&i| g.0[i]).collect()))
            .collect();
        Ok(Self::from_generators(keep.len(), gens))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(ExponentVector::is_squarefree)
    }

    fn require_nontrivial_squarefree(&self) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::input("ideal is not squarefree"));
        }
        if !self.is_proper_nonzero() {
            return Err(Error::input("ideal must be neither zero nor the unit ideal"));
        }
        Ok(())
    }

    /// Minimal primes of a squarefree ideal, as variable subsets: the
    /// inclusion-minimal sets meeting the support of every generator.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        self.require_nontrivial_squarefree()?;
        let masks = self.minimal_prime_masks();
        let mut primes: Vec<Vec<usize>> = masks
            .into_iter()
            .map(|m| (0..self.ambient_dim).filter(|i| m & (1 << i) != 0).collect())
            .collect();
        primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(primes)
    }

    fn minimal_prime_masks(&self) -> Vec<u32> {
        let supports: Vec<u32> = self.generators.iter().map(|g| g.support_mask()).collect();
        let mut covers: Vec<u32> = (0u32..(1 << self.ambient_dim))
            .filter(|s| supports.iter().all(|g| g & s != 0))
            .collect();
        covers.sort_by_key(|s| s.count_ones());
        let mut minimal: Vec<u32> = Vec::new();
        for s in covers {
            // Skip s if it contains a smaller cover t.
            if !minimal.iter().any(|&t| t & !s == 0) {
                minimal.push(s);
            }
        }
        minimal
    }

    /// Largest codimension of a component of the zero locus.
    pub fn big_height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0))
    }

    /// `q^{(k)}`: the monomials `m` with `sum_{i ∈ S} m_i >= k` for every
    /// minimal prime `S`.
    pub fn symbolic_power(&self, k: u32) -> Result<MonomialIdeal> {
        self.require_nontrivial_squarefree()?;
        if k == 0 {
            return Err(Error::input("symbolic power index must be >= 1"));
        }
        let primes = self.minimal_prime_masks();
        let n = self.ambient_dim;
        // A coordinate outside every prime never helps; pin it to 0.
        let used = primes.iter().fold(0u32, |a, &p| a | p);
        let bounds: Vec<u32> = (0..n)
            .map(|i| if used & (1 << i) != 0 { k } else { 0 })
            .collect();
        let gens = minimal_points_in_box(&bounds, |m| {
            primes.iter().all(|&p| {
                let s: u64 = (0..n)
                    .filter(|i| p & (1 << i) != 0)
                    .map(|i| m[i] as u64)
                    .sum();
                s >= k as u64
            })
        });
        Ok(Self::from_minimal(n, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print_ideal(self))
    }
}
