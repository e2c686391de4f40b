//! Graded systems of monomial ideals and asymptotic multiplier ideals.
//!
//! A graded system `a_•` satisfies `a_k · a_l ⊆ a_{k+l}`. Its asymptotic
//! multiplier ideal `J(a_•^c)` is the common value of `J(a_p^{c/p})` for
//! sufficiently divisible `p`.
//!
//! Along `p = p0, 2p0, 4p0, ...` the sequence is monotone nondecreasing, and
//! its first repeated value is returned. A monotone sequence can repeat
//! before it reaches its limit: for weights `(2/3, 5/4)` and `c = 7/3`,
//! `p = 1` and `p = 2` both give `(x^2, y)` while the limit contains `x`. So
//! `p0` is chosen per kind so that `Newt(a_p) = p · Q` exactly, where `Q` is
//! the limit polyhedron; from there on every term equals the limit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{minimal_points_in_box, minimalize, ExponentVector, MonomialIdeal, MAX_DIM};
use crate::multiplier::multiplier_ideal;
use crate::polytope::build;
use crate::rational::{self, common_denominator, Rational};
use crate::verdict::{params, Step, Verdict};

pub const DEFAULT_P_MAX: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// `a_k = b^k`.
    Powers(MonomialIdeal),
    /// `a_k = q^{(k)}` for a squarefree `q`.
    Symbolic(MonomialIdeal),
    /// `a_k = (x^m : <w, m> >= k)` for rational weights `w >= 0`.
    WeightedValuation(Vec<Rational>),
    /// Stored terms `a_1, ..., a_len`.
    Explicit(Vec<MonomialIdeal>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSystem {
    kind: SystemKind,
    ambient_dim: usize,
}

impl GradedSystem {
    pub fn powers(base: MonomialIdeal) -> Result<Self> {
        base.require_nonzero()?;
        Ok(GradedSystem {
            ambient_dim: base.ambient_dim(),
            kind: SystemKind::Powers(base),
        })
    }

    pub fn symbolic(q: MonomialIdeal) -> Result<Self> {
        // Validates squarefree and nontrivial.
        q.minimal_primes()?;
        Ok(GradedSystem {
            ambient_dim: q.ambient_dim(),
            kind: SystemKind::Symbolic(q),
        })
    }

    pub fn weighted(weights: Vec<Rational>) -> Result<Self> {
        let n = weights.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::input(format!("weight vector length must be in 1..={MAX_DIM}")));
        }
        if weights.iter().any(Signed::is_negative) {
            return Err(Error::input("weights must be nonnegative"));
        }
        if weights.iter().all(Zero::is_zero) {
            return Err(Error::input("weights must not all vanish"));
        }
        Ok(GradedSystem {
            ambient_dim: n,
            kind: SystemKind::WeightedValuation(weights),
        })
    }

    /// An explicitly listed system; superadditivity is verified for every
    /// pair of stored indices.
    pub fn explicit(terms: Vec<MonomialIdeal>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::input("explicit graded system needs at least one term"));
        };
        let n = first.ambient_dim();
        for t in &terms {
            if t.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: t.ambient_dim(),
                });
            }
            t.require_nonzero()?;
        }
        let system = GradedSystem {
            ambient_dim: n,
            kind: SystemKind::Explicit(terms),
        };
        let len = system.stored_len().expect("explicit");
        if let Some((k, l)) = system.superadditivity_failure(len)? {
            return Err(Error::input(format!(
                "not a graded system: a_{k} · a_{l} ⊄ a_{}",
                k + l
            )));
        }
        Ok(system)
    }

    pub fn kind(&self) -> &SystemKind {
        &self.kind
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of stored terms for an explicit system.
    pub fn stored_len(&self) -> Option<u64> {
        match &self.kind {
            SystemKind::Explicit(t) => Some(t.len() as u64),
            _ => None,
        }
    }

    pub fn term(&self, k: u64) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::input("graded system terms are indexed from 1"));
        }
        let k32 = u32::try_from(k).map_err(|_| Error::input("term index too large"))?;
        match &self.kind {
            SystemKind::Powers(b) => Ok(b.power(k32)),
            SystemKind::Symbolic(q) => q.symbolic_power(k32),
            SystemKind::WeightedValuation(w) => Ok(weighted_term(w, k)),
            SystemKind::Explicit(terms) => terms
                .get((k - 1) as usize)
                .cloned()
                .ok_or_else(|| Error::input(format!("index {k} beyond the {} stored terms", terms.len()))),
        }
    }

    /// Least index `p0` such that `Newt(a_p) = p · Q` for every multiple `p`
    /// of `p0`, where `Q` is the limit of `Newt(a_p) / p`; the lcm of the
    /// vertex denominators of `Q`.
    ///
    /// For weights, `Q = {<w, x> >= 1}` has vertices `e_i / w_i`. For a
    /// squarefree `q`, `Q = {x(P) >= 1 for each minimal prime P}`, whose
    /// vertices are `a / b` for the bounding facets `<a, x> >= b` of the
    /// Newton polyhedron of the prime indicator vectors (blocker duality).
    /// Explicit systems have no known limit and start at 1.
    pub fn base_index(&self) -> Result<u64> {
        let lcm = |values: Vec<BigInt>| -> Result<u64> {
            let l = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v));
            l.to_u64().ok_or_else(|| Error::input("stabilization index too large"))
        };
        match &self.kind {
            SystemKind::Powers(_) | SystemKind::Explicit(_) => Ok(1),
            SystemKind::WeightedValuation(w) => lcm(
                w.iter()
                    .filter(|x| !x.is_zero())
                    .map(|x| x.numer().clone())
                    .collect(),
            ),
            SystemKind::Symbolic(q) => {
                let n = self.ambient_dim;
                let indicators = q
                    .minimal_primes()?
                    .iter()
                    .map(|prime| {
                        let mut v = vec![0u32; n];
                        for &i in prime {
                            v[i] = 1;
                        }
                        ExponentVector::new(v)
                    })
                    .collect();
                let blocker = build(&minimalize(indicators, n)?)?;
                lcm(blocker.bounding_facets().map(|f| BigInt::from(f.offset)).collect())
            }
        }
    }

    /// First pair `(k, l)` with `k + l <= up_to` and `a_k · a_l ⊄ a_{k+l}`.
    pub fn superadditivity_failure(&self, up_to: u64) -> Result<Option<(u64, u64)>> {
        let terms = (1..=up_to)
            .map(|k| self.term(k))
            .collect::<Result<Vec<_>>>()?;
        for k in 1..=up_to {
            for l in k..=up_to - k {
                let prod = terms[(k - 1) as usize].multiply(&terms[(l - 1) as usize])?;
                if !terms[(k + l - 1) as usize].contains_ideal(&prod)? {
                    return Ok(Some((k, l)));
                }
            }
        }
        Ok(None)
    }
}

/// Minimal monomials with `<w, m> >= k`; coordinate `i` ranges over
/// `0..=ceil(k / w_i)` (pinned to 0 when `w_i = 0`).
fn weighted_term(w: &[Rational], k: u64) -> MonomialIdeal {
    let d = common_denominator(w.iter());
    let iw: Vec<BigInt> = w.iter().map(|x| (x * &d).to_integer()).collect();
    let target = BigInt::from(k) * &d;
    let bounds: Vec<u32> = iw
        .iter()
        .map(|wi| {
            if wi.is_zero() {
                0
            } else {
                let b: BigInt = (&target + wi - 1) / wi;
                b.to_u32().expect("desk-scale weight bound")
            }
        })
        .collect();
    let gens = minimal_points_in_box(&bounds, |m| {
        let s: BigInt = iw
            .iter()
            .zip(m)
            .map(|(wi, &x)| wi * BigInt::from(x))
            .sum();
        s >= target
    });
    MonomialIdeal::from_minimal(w.len(), gens)
}

#[derive(Clone, Debug, Serialize)]
pub struct Asymptotic {
    pub ideal: MonomialIdeal,
    /// The index at which the value was seen for the second time.
    pub p_used: u64,
    /// `(p, J(a_p^{c/p}))` for each computed index.
    pub chain: Vec<(u64, MonomialIdeal)>,
}

/// `J(a_•^c)` along `p = p0, 2p0, 4p0, ... <= p_max` with `p0` the
/// [`GradedSystem::base_index`].
pub fn asymptotic_multiplier_ideal(
    system: &GradedSystem,
    c: &Rational,
    p_max: u64,
) -> Result<Asymptotic> {
    rational::require_positive(c, "exponent")?;
    let limit = match system.stored_len() {
        Some(len) => p_max.min(len),
        None => p_max,
    };
    let mut chain: Vec<(u64, MonomialIdeal)> = Vec::new();
    let mut p = system.base_index()?;
    while p <= limit {
        let term = system.term(p)?;
        let j = multiplier_ideal(&term, &(c / Rational::from_integer(BigInt::from(p))))?;
        if let Some((prev_p, prev)) = chain.last() {
            if !j.contains_ideal(prev)? {
                return Err(Error::Invariant(format!(
                    "J(a_{prev_p}^(c/{prev_p})) ⊄ J(a_{p}^(c/{p})) for c = {c}"
                )));
            }
            if *prev == j {
                chain.push((p, j.clone()));
                return Ok(Asymptotic {
                    ideal: j,
                    p_used: p,
                    chain,
                });
            }
        }
        chain.push((p, j));
        p *= 2;
    }
    Err(Error::NotStabilized { p_max, chain })
}

/// `a_l^m ⊆ a_{lm} ⊆ J(a_•^{lm}) ⊆ J(a_•^l)^m`.
pub fn growth_chain_check(system: &GradedSystem, l: u64, m: u64, p_max: u64) -> Result<Verdict> {
    if l == 0 || m == 0 {
        return Err(Error::input("growth chain needs l, m >= 1"));
    }
    let m32 = u32::try_from(m).map_err(|_| Error::input("m too large"))?;
    let a_l = system.term(l)?;
    let a_lm = system.term(l * m)?;
    let j_lm = asymptotic_multiplier_ideal(system, &Rational::from_integer((l * m).into()), p_max)?;
    let j_l = asymptotic_multiplier_ideal(system, &Rational::from_integer(l.into()), p_max)?;
    let steps = vec![
        Step::subset("a_l^m ⊆ a_lm", a_l.power(m32), a_lm.clone()),
        Step::subset("a_lm ⊆ J(a^lm)", a_lm, j_lm.ideal.clone()),
        Step::subset("J(a^lm) ⊆ J(a^l)^m", j_lm.ideal, j_l.ideal.power(m32)),
    ];
    let mut v = Verdict::from_steps(
        "growth_chain",
        params([("l", l.to_string()), ("m", m.to_string())]),
        steps,
    )?;
    v.observe("p_used_lm", j_lm.p_used);
    v.observe("p_used_l", j_l.p_used);
    Ok(v)
}

/// `q^{(e·m)} ⊆ q^m` with `e` the largest codimension of a component.
pub fn symbolic_power_theorem_check(q: &MonomialIdeal, m: u32) -> Result<Verdict> {
    let e = q.big_height()? as u32;
    let sym = q.symbolic_power(e * m.max(1))?;
    let sym = if m == 0 { MonomialIdeal::unit(q.ambient_dim()) } else { sym };
    let ord = q.power(m);
    let mut parameters: BTreeMap<String, String> = params([("m", m.to_string())]);
    parameters.insert("e".into(), e.to_string());
    Verdict::from_steps(
        "symbolic_power",
        parameters,
        vec![Step::subset("q^(em) ⊆ q^m", sym, ord)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ExponentVector;
    use crate::rational::{int, rat};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn terms() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(GradedSystem::powers(m.clone()).unwrap().term(3).unwrap(), m.power(3));
        let w = GradedSystem::weighted(vec![int(1), rat(2, 3)]).unwrap();
        // box enumeration of m1 + (2/3) m2 >= 2
        let mut brute = Vec::new();
        for a in 0..=2u32 {
            for b in 0..=3u32 {
                if 3 * a + 2 * b >= 6 {
                    brute.push(ExponentVector::new(vec![a, b]));
                }
            }
        }
        let brute = crate::monomial::minimalize(brute, 2).unwrap();
        assert_eq!(w.term(2).unwrap(), brute);
        assert_eq!(w.term(2).unwrap(), ideal(2, &[&[2, 0], &[1, 2], &[0, 3]]));
        let s = GradedSystem::symbolic(triangle()).unwrap();
        assert!(s.term(2).unwrap().contains_monomial(&ExponentVector::new(vec![1, 1, 1])).unwrap());
        assert!(s.term(0).is_err());
    }

    #[test]
    fn invalid_systems() {
        assert!(GradedSystem::weighted(vec![int(0), int(0)]).is_err());
        assert!(GradedSystem::weighted(vec![int(-1), int(1)]).is_err());
        assert!(GradedSystem::symbolic(ideal(2, &[&[2, 0]])).is_err());
        assert!(GradedSystem::powers(MonomialIdeal::zero(2)).is_err());
        // a_1 = (x), a_2 = (x^3): a_1^2 = (x^2) ⊄ a_2
        assert!(GradedSystem::explicit(vec![ideal(1, &[&[1]]), ideal(1, &[&[3]])]).is_err());
        let e = GradedSystem::explicit(vec![ideal(1, &[&[1]]), ideal(1, &[&[2]])]).unwrap();
        assert!(e.term(3).is_err());
    }

    #[test]
    fn superadditive_up_to_twelve() {
        let systems = [
            GradedSystem::powers(ideal(2, &[&[2, 0], &[0, 3]])).unwrap(),
            GradedSystem::symbolic(triangle()).unwrap(),
            GradedSystem::weighted(vec![int(1), rat(2, 3)]).unwrap(),
        ];
        for s in &systems {
            assert_eq!(s.superadditivity_failure(12).unwrap(), None);
        }
    }

    #[test]
    fn powers_stabilize_immediately() {
        let b = ideal(2, &[&[2, 0], &[0, 3]]);
        let s = GradedSystem::powers(b.clone()).unwrap();
        for c in [rat(5, 6), int(1), rat(7, 3)] {
            let a = asymptotic_multiplier_ideal(&s, &c, DEFAULT_P_MAX).unwrap();
            assert!(a.p_used <= 2);
            assert_eq!(a.ideal, multiplier_ideal(&b, &c).unwrap());
        }
    }

    #[test]
    fn weighted_closed_form() {
        let s = GradedSystem::weighted(vec![int(1), rat(2, 3)]).unwrap();
        for c in [int(1), int(2), rat(5, 2), int(4)] {
            let got = asymptotic_multiplier_ideal(&s, &c, DEFAULT_P_MAX).unwrap().ideal;
            // (m1+1) + (2/3)(m2+1) > c  <=>  3(m1+1) + 2(m2+1) > 3c
            let mut pts = Vec::new();
            for a in 0..12u32 {
                for b in 0..12u32 {
                    if rat(3 * (a as i64 + 1) + 2 * (b as i64 + 1), 1) > &c * int(3) {
                        pts.push(ExponentVector::new(vec![a, b]));
                    }
                }
            }
            assert_eq!(got, crate::monomial::minimalize(pts, 2).unwrap(), "c = {c}");
        }
    }

    #[test]
    fn symbolic_asymptotic_inside_q() {
        let s = GradedSystem::symbolic(triangle()).unwrap();
        let a = asymptotic_multiplier_ideal(&s, &int(2), DEFAULT_P_MAX).unwrap();
        assert!(triangle().contains_ideal(&a.ideal).unwrap());
    }

    #[test]
    fn non_stabilization_is_reported() {
        let s = GradedSystem::powers(ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        match asymptotic_multiplier_ideal(&s, &int(4), 1) {
            Err(Error::NotStabilized { chain, .. }) => assert_eq!(chain.len(), 1),
            other => panic!("expected non-stabilization, got {other:?}"),
        }
        // The first admissible index already exceeds p_max.
        let w = GradedSystem::weighted(vec![int(1), rat(2, 3)]).unwrap();
        assert!(matches!(
            asymptotic_multiplier_ideal(&w, &int(4), 1),
            Err(Error::NotStabilized { .. })
        ));
    }

    #[test]
    fn base_indices() {
        let b = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(GradedSystem::powers(b).unwrap().base_index().unwrap(), 1);
        let w = GradedSystem::weighted(vec![rat(2, 3), rat(5, 4), int(0)]).unwrap();
        assert_eq!(w.base_index().unwrap(), 10);
        // Q has the vertex (1/2, 1/2, 1/2).
        assert_eq!(GradedSystem::symbolic(triangle()).unwrap().base_index().unwrap(), 2);
        let smooth = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(GradedSystem::symbolic(smooth).unwrap().base_index().unwrap(), 1);
    }

    #[test]
    fn early_plateau_is_not_mistaken_for_the_limit() {
        // p = 1 and p = 2 both give (x^2, y); the limit contains x since
        // 2·(2/3) + 5/4 > 7/3.
        let w = vec![rat(2, 3), rat(5, 4)];
        let c = rat(7, 3);
        let s = GradedSystem::weighted(w).unwrap();
        let plateau = ideal(2, &[&[2, 0], &[0, 1]]);
        for p in [1u64, 2] {
            let j = multiplier_ideal(&s.term(p).unwrap(), &(&c / int(p as i64))).unwrap();
            assert_eq!(j, plateau);
        }
        let a = asymptotic_multiplier_ideal(&s, &c, DEFAULT_P_MAX).unwrap();
        assert_eq!(a.ideal, ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(a.p_used, 20);
    }

    #[test]
    fn symbolic_closed_form() {
        // J = { m : (m+1)(P) > c for every minimal prime P }.
        let q = triangle();
        let primes = q.minimal_primes().unwrap();
        let s = GradedSystem::symbolic(q).unwrap();
        for c in [rat(1, 2), int(1), rat(3, 2), int(2), rat(7, 3)] {
            let got = asymptotic_multiplier_ideal(&s, &c, DEFAULT_P_MAX).unwrap().ideal;
            let bounds = [6u32; 3];
            let want = minimal_points_in_box(&bounds, |m| {
                primes.iter().all(|p| {
                    let sum: i64 = p.iter().map(|&i| m[i] as i64 + 1).sum();
                    int(sum) > c
                })
            });
            assert_eq!(got, MonomialIdeal::from_minimal(3, want), "c = {c}");
        }
    }


    #[test]
    fn growth_chains() {
        let p = GradedSystem::powers(ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert!(growth_chain_check(&p, 1, 2, DEFAULT_P_MAX).unwrap().holds);
        let s = GradedSystem::symbolic(triangle()).unwrap();
        assert!(growth_chain_check(&s, 2, 2, DEFAULT_P_MAX).unwrap().holds);
        let w = GradedSystem::weighted(vec![int(1), int(1)]).unwrap();
        assert!(growth_chain_check(&w, 2, 3, DEFAULT_P_MAX).unwrap().holds);
    }

    #[test]
    fn symbolic_comparison() {
        let q = triangle();
        let v = symbolic_power_theorem_check(&q, 2).unwrap();
        assert!(v.holds);
        assert_eq!(v.parameters["e"], "2");
        assert!(symbolic_power_theorem_check(&MonomialIdeal::maximal(2), 3).unwrap().holds);
        // Without the factor e the inclusion fails at m = 2: xyz ∈ q^(2) \ q^2.
        let xyz = ExponentVector::new(vec![1, 1, 1]);
        assert!(q.symbolic_power(2).unwrap().contains_monomial(&xyz).unwrap());
        assert!(!q.power(2).contains_monomial(&xyz).unwrap());
        assert!(q.contains_monomial(&xyz).unwrap());
    }
}
