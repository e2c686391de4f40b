//! Multiplier ideals of monomial ideals and the invariants read off them.
//!
//! For a monomial ideal `a` and rational `c >= 0`, `J(a^c)` is generated by
//! the monomials `x^m` such that `m + (1,...,1)` lies in the interior of
//! `c · Newt(a)`. At a strictly positive point every coordinate facet is
//! automatically strict, so only the facets with positive offset are tested.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{minimal_points_in_box, ExponentVector, MonomialIdeal};
use crate::polytope::{build, NewtonPolytope};
use crate::rational::{self, common_denominator, Rational, Threshold};

fn to_i128(n: &BigInt) -> Result<i128> {
    n.to_i128().ok_or(Error::Overflow("evaluating a facet inequality"))
}

/// `J` of a scaled Newton polyhedron: monomials `m` with `m + 1` in the
/// interior of `scale · Newt`.
pub fn multiplier_of_polytope(p: &NewtonPolytope) -> Result<MonomialIdeal> {
    let n = p.ambient_dim();
    let c = p.scale_factor();
    let (num, den) = (to_i128(c.numer())?, to_i128(c.denom())?);
    let facets: Vec<(Vec<i128>, i128)> = p
        .bounding_facets()
        .map(|f| (f.normal.iter().map(|&a| a as i128).collect(), f.offset as i128))
        .collect();

    let mut bounds = vec![0u32; n];
    for (normal, offset) in &facets {
        for (i, &a) in normal.iter().enumerate() {
            if a > 0 {
                let v = rational::ceil_to_i64(&(c * BigInt::from(*offset) / BigInt::from(a)))? + 1;
                let v = u32::try_from(v.max(0)).map_err(|_| Error::Overflow("sizing the search box"))?;
                bounds[i] = bounds[i].max(v);
            }
        }
    }
    // den·<a, m+1> > num·b for every bounding facet.
    let gens = minimal_points_in_box(&bounds, |m| {
        facets.iter().all(|(normal, offset)| {
            let dot: i128 = normal
                .iter()
                .zip(m)
                .map(|(&a, &x)| a * (x as i128 + 1))
                .sum();
            den * dot > num * offset
        })
    });
    Ok(MonomialIdeal::from_minimal(n, gens))
}

/// The multiplier ideal `J(ideal^c)`.
pub fn multiplier_ideal(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    rational::require_nonnegative(c, "exponent")?;
    let p = build(ideal)?;
    multiplier_of_polytope(&p.scale(c)?)
}

fn validate_terms(terms: &[(MonomialIdeal, Rational)]) -> Result<usize> {
    let Some((first, _)) = terms.first() else {
        return Err(Error::input("mixed multiplier ideal needs at least one term"));
    };
    let n = first.ambient_dim();
    for (ideal, c) in terms {
        if ideal.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ideal.ambient_dim(),
            });
        }
        ideal.require_nonzero()?;
        rational::require_nonnegative(c, "exponent")?;
    }
    Ok(n)
}

fn cleared_exponents(terms: &[(MonomialIdeal, Rational)]) -> Result<(BigInt, Vec<u32>)> {
    let r = common_denominator(terms.iter().map(|(_, c)| c));
    let ks = terms
        .iter()
        .map(|(_, c)| {
            (c * &r)
                .to_integer()
                .to_u32()
                .ok_or(Error::Overflow("clearing exponent denominators"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((r, ks))
}

/// `J(a_1^{c_1} ··· a_t^{c_t})`.
///
/// With common denominator `r` and `c_i = k_i / r` this is
/// `J((a_1^{k_1} ··· a_t^{k_t})^{1/r})`; the Newton polyhedron of that
/// product is assembled as the Minkowski sum `Σ k_i · Newt(a_i)` so the
/// product ideal itself is never expanded.
pub fn mixed_multiplier_ideal(terms: &[(MonomialIdeal, Rational)]) -> Result<MonomialIdeal> {
    validate_terms(terms)?;
    if terms.len() == 1 {
        return multiplier_ideal(&terms[0].0, &terms[0].1);
    }
    let (r, ks) = cleared_exponents(terms)?;
    let mut acc: Option<NewtonPolytope> = None;
    for ((ideal, _), &k) in terms.iter().zip(&ks) {
        let p = build(ideal)?.scale(&Rational::from_integer(k.into()))?;
        acc = Some(match acc {
            None => p,
            Some(a) => a.minkowski_sum(&p)?,
        });
    }
    let sum = acc.expect("at least one term");
    multiplier_of_polytope(&sum.scale(&Rational::new(BigInt::one(), r))?)
}

/// Same value as [`mixed_multiplier_ideal`], computed by expanding the
/// product ideal `a_1^{k_1} ··· a_t^{k_t}` and taking its multiplier ideal
/// with exponent `1/r`.
pub fn mixed_multiplier_ideal_via_product(
    terms: &[(MonomialIdeal, Rational)],
) -> Result<MonomialIdeal> {
    let n = validate_terms(terms)?;
    let (r, ks) = cleared_exponents(terms)?;
    let mut product = MonomialIdeal::unit(n);
    for ((ideal, _), &k) in terms.iter().zip(&ks) {
        product = product.multiply(&ideal.power(k))?;
    }
    multiplier_ideal(&product, &Rational::new(BigInt::one(), r))
}

/// Log canonical threshold: the largest `t` with `(1,...,1) ∈ t · Newt(a)`.
pub fn lct(ideal: &MonomialIdeal) -> Result<Threshold> {
    let p = build(ideal)?;
    p.min_ratio(&vec![Rational::one(); ideal.ambient_dim()])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Jump {
    #[serde(with = "rational::as_string")]
    pub xi: Rational,
    /// A monomial that enters `J(a^c)` exactly when `c` drops below `xi`.
    pub witness: ExponentVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpingSpectrum {
    pub ideal: MonomialIdeal,
    #[serde(with = "rational::as_string")]
    pub bound: Rational,
    pub jumps: Vec<Jump>,
}

impl JumpingSpectrum {
    pub fn values(&self) -> Vec<Rational> {
        self.jumps.iter().map(|j| j.xi.clone()).collect()
    }
}

/// Bounding facets `<a, x> >= b` (with `b > 0`) as integer pairs.
pub(crate) fn bounding_facets(ideal: &MonomialIdeal) -> Result<Vec<(Vec<i64>, i64)>> {
    Ok(build(ideal)?
        .bounding_facets()
        .map(|f| (f.normal.clone(), f.offset))
        .collect())
}

/// All jumping numbers `ξ <= bound`, each with the smallest witness.
///
/// Every jumping number is `ξ(v) = min_f <a_f, v+1> / b_f` for some
/// `v ∈ N^n`. Put `s_i = max_{f, a_{f,i} > 0} floor(bound · b_f / a_{f,i})`.
/// Once `v_i >= s_i`, every facet involving `x_i` exceeds `bound`, so the
/// minimum (if `<= bound`) is attained at facets not involving `x_i` and
/// lowering `v_i` to `s_i` leaves `ξ(v)` unchanged. Hence the box
/// `[0, s_1] x ... x [0, s_n]` meets every value. Along the last coordinate
/// `ξ` is nondecreasing, so each column stops once it passes `bound`.
pub fn jumping_numbers(ideal: &MonomialIdeal, bound: &Rational) -> Result<JumpingSpectrum> {
    ideal.require_nonzero()?;
    if ideal.is_unit() {
        return Err(Error::input("the unit ideal has no jumping numbers"));
    }
    rational::require_positive(bound, "bound")?;
    let facets = bounding_facets(ideal)?;
    let n = ideal.ambient_dim();
    let (bn, bd) = (to_i128(bound.numer())?, to_i128(bound.denom())?);
    let mut sides = vec![0u32; n];
    for (normal, offset) in &facets {
        for (i, &a) in normal.iter().enumerate().filter(|(_, &a)| a > 0) {
            let s = (bn * *offset as i128).div_euclid(bd * a as i128);
            let s = u32::try_from(s).map_err(|_| Error::Overflow("sizing the search box"))?;
            sides[i] = sides[i].max(s);
        }
    }
    let facets: Vec<(Vec<i128>, i128)> = facets
        .iter()
        .map(|(a, b)| (a.iter().map(|&x| x as i128).collect(), *b as i128))
        .collect();
    // ξ(v) as an unreduced fraction (num, den).
    let xi = |v: &[u32]| -> (i128, i128) {
        let mut best = (1i128, 0i128);
        for (normal, offset) in &facets {
            let dot: i128 = normal.iter().zip(v).map(|(&a, &x)| a * (x as i128 + 1)).sum();
            if best.1 == 0 || dot * best.1 < best.0 * offset {
                best = (dot, *offset);
            }
        }
        best
    };
    let mut found: HashMap<(i128, i128), Vec<u32>> = HashMap::new();
    let (prefix, last) = sides.split_at(n - 1);
    let mut v = vec![0u32; n];
    crate::monomial::for_each_in_box(prefix, |p| {
        v[..n - 1].copy_from_slice(p);
        for t in 0..=last[0] {
            v[n - 1] = t;
            let (num, den) = xi(&v);
            if num * bd > bn * den {
                break;
            }
            let g = num.gcd(&den);
            let key = (num / g, den / g);
            match found.get_mut(&key) {
                Some(w) => {
                    if ExponentVector::new(v.clone()) < ExponentVector::new(w.clone()) {
                        w.copy_from_slice(&v);
                    }
                }
                None => {
                    found.insert(key, v.clone());
                }
            }
        }
    });
    let mut jumps: Vec<Jump> = found
        .into_iter()
        .map(|((num, den), w)| Jump {
            xi: Rational::new(BigInt::from(num), BigInt::from(den)),
            witness: ExponentVector::new(w),
        })
        .collect();
    jumps.sort_by(|a, b| a.xi.cmp(&b.xi));
    Ok(JumpingSpectrum {
        ideal: ideal.clone(),
        bound: bound.clone(),
        jumps,
    })
}

/// Number of jumping numbers `<= 1` of the principal ideal `(x^v)`.
pub fn jumping_length(v: &ExponentVector) -> Result<usize> {
    if v.is_zero() {
        return Err(Error::input("jumping length needs a nonconstant monomial"));
    }
    let spectrum = jumping_numbers(&MonomialIdeal::principal(v.clone()), &Rational::one())?;
    let values = spectrum.values();
    if values.last() != Some(&Rational::one()) {
        return Err(Error::Invariant(format!(
            "1 is not a jumping number of x^{:?}",
            v.entries()
        )));
    }
    Ok(values.len())
}

/// Integral closure: the ideal of all lattice points of `Newt(a)`.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let p = build(ideal)?;
    let facets: Vec<(Vec<i64>, i64)> = p
        .bounding_facets()
        .map(|f| (f.normal.clone(), f.offset))
        .collect();
    let bounds = ideal.max_exponents();
    let gens = minimal_points_in_box(&bounds, |m| {
        facets.iter().all(|(normal, offset)| {
            let dot: i64 = normal.iter().zip(m).map(|(&a, &x)| a * x as i64).sum();
            dot >= *offset
        })
    });
    Ok(MonomialIdeal::from_minimal(ideal.ambient_dim(), gens))
}

/// Sample points strictly between consecutive jumps, used to probe
/// constancy of `J(a^c)` on `[ξ, ξ')`.
pub fn interior_samples(lo: &Rational, hi: &Rational, count: usize) -> Vec<Rational> {
    let width = hi - lo;
    (1..=count)
        .map(|k| lo + &width * Rational::new(BigInt::from(k), BigInt::from(count + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    #[test]
    fn howald_example() {
        let a = ideal(2, &[&[4, 0], &[1, 2], &[0, 4]]);
        assert_eq!(
            multiplier_ideal(&a, &int(1)).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
    }

    #[test]
    fn two_squares() {
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            multiplier_ideal(&a, &rat(3, 2)).unwrap(),
            MonomialIdeal::maximal(2).power(2)
        );
    }

    #[test]
    fn maximal_ideal() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(multiplier_ideal(&m, &rat(5, 2)).unwrap(), m);
    }

    #[test]
    fn trivial_below_lct() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(multiplier_ideal(&a, &rat(1, 2)).unwrap().is_unit());
        assert!(multiplier_ideal(&a, &int(0)).unwrap().is_unit());
        assert!(multiplier_ideal(&a, &rat(-1, 2)).is_err());
        assert!(multiplier_ideal(&MonomialIdeal::zero(2), &int(1)).is_err());
    }

    #[test]
    fn mixed_terms() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(
            mixed_multiplier_ideal(&[(a.clone(), rat(3, 4))]).unwrap(),
            multiplier_ideal(&a, &rat(3, 4)).unwrap()
        );
        assert_eq!(
            mixed_multiplier_ideal(&[(a.clone(), int(1)), (m.clone(), int(1))]).unwrap(),
            multiplier_ideal(&a.multiply(&m).unwrap(), &int(1)).unwrap()
        );
        assert_eq!(
            mixed_multiplier_ideal(&[(a.clone(), rat(1, 2)), (a.clone(), rat(1, 3))]).unwrap(),
            multiplier_ideal(&a, &rat(5, 6)).unwrap()
        );
        assert!(mixed_multiplier_ideal(&[]).is_err());
        assert!(mixed_multiplier_ideal(&[(a, int(1)), (MonomialIdeal::maximal(3), int(1))]).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(lct(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), Threshold::Finite(rat(5, 6)));
        assert_eq!(lct(&ideal(2, &[&[9, 0], &[0, 10]])).unwrap(), Threshold::Finite(rat(19, 90)));
        assert_eq!(lct(&MonomialIdeal::unit(2)).unwrap(), Threshold::Infinite);
        assert!(lct(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn spectrum_of_two_three() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let s = jumping_numbers(&a, &rat(3, 2)).unwrap();
        // brute force ξ(v) = (3(v1+1) + 2(v2+1))/6 over a generous box
        let mut brute: Vec<Rational> = Vec::new();
        for v1 in 0..10i64 {
            for v2 in 0..10i64 {
                let xi = rat(3 * (v1 + 1) + 2 * (v2 + 1), 6);
                if xi <= rat(3, 2) && !brute.contains(&xi) {
                    brute.push(xi);
                }
            }
        }
        brute.sort();
        assert_eq!(s.values(), brute);
        assert_eq!(s.values(), vec![rat(5, 6), rat(7, 6), rat(4, 3), rat(3, 2)]);
        assert_eq!(s.jumps[0].witness, ExponentVector::new(vec![0, 0]));
        assert!(jumping_numbers(&MonomialIdeal::unit(2), &int(1)).is_err());
        assert!(jumping_numbers(&a, &int(0)).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(jumping_length(&ExponentVector::new(vec![1, 0])).unwrap(), 1);
        assert_eq!(jumping_length(&ExponentVector::new(vec![2, 0])).unwrap(), 2);
        assert_eq!(jumping_length(&ExponentVector::new(vec![1, 1])).unwrap(), 1);
        assert!(jumping_length(&ExponentVector::new(vec![0, 0])).is_err());
    }

    #[test]
    fn closures() {
        assert_eq!(
            integral_closure(&ideal(2, &[&[4, 0], &[0, 4]])).unwrap(),
            MonomialIdeal::maximal(2).power(4)
        );
        let m = MonomialIdeal::maximal(2);
        assert_eq!(integral_closure(&m).unwrap(), m);
        assert_eq!(
            integral_closure(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(),
            ideal(2, &[&[2, 0], &[1, 2], &[0, 3]])
        );
    }

    #[test]
    fn samples_lie_strictly_inside() {
        let s = interior_samples(&rat(5, 6), &rat(7, 6), 3);
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|x| *x > rat(5, 6) && *x < rat(7, 6)));
    }
}
