//! Newton polyhedra of monomial ideals.
//!
//! `Newt(a)` is the convex hull of the exponents of `a` plus the nonnegative
//! orthant. It is kept in H-representation: irredundant facets
//! `<normal, x> >= offset` with primitive nonnegative integer normals,
//! together with a rational scale factor so that `c · Newt(a)` is available
//! without touching the integer facet data.
//!
//! Facets are obtained from the homogenized cone
//! `C = cone{(1, g) : g generator} + cone{(0, e_i)}`: a valid inequality
//! `<a, x> >= b` is a point `(b, a)` of the dual cone
//! `{ (b, a) : <a, g> - b >= 0, a_i >= 0 }`, and the facets are its extreme
//! rays. Those are enumerated by the double-description method in exact
//! integer arithmetic. Membership has an independent route,
//! [`member_oracle`], which decides convex-combination feasibility by
//! Fourier–Motzkin elimination directly on the generators.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::elimination::System;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::rational::{self, common_denominator, Rational, Threshold};

/// The valid inequality `<normal, x> >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn new(normal: Vec<i64>, offset: i64) -> Self {
        Facet { normal, offset }
    }

    /// `<normal, p>` for a rational point.
    pub fn evaluate(&self, p: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(p)
            .fold(Rational::zero(), |acc, (&a, x)| acc + x * BigInt::from(a))
    }

    pub fn evaluate_int(&self, p: &[u32]) -> i64 {
        self.normal
            .iter()
            .zip(p)
            .map(|(&a, &x)| a * x as i64)
            .sum()
    }

    /// A coordinate facet `x_i >= 0`.
    pub fn is_coordinate(&self) -> bool {
        self.offset == 0 && self.normal.iter().filter(|&&a| a != 0).count() == 1
    }
}

// Coordinate facets first (in variable order), then by offset and normal.
impl Ord for Facet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.offset
            .cmp(&other.offset)
            .then_with(|| other.normal.cmp(&self.normal))
    }
}

impl PartialOrd for Facet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Closed,
    Interior,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonPolytope {
    ambient_dim: usize,
    /// The generating exponents (minimal generators of the source ideal).
    source_points: Vec<ExponentVector>,
    /// Source points that are vertices of the polyhedron.
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
    /// For each facet, a rational point violating only that facet.
    #[serde(skip)]
    witnesses: Vec<Vec<Rational>>,
    #[serde(with = "rational::as_string")]
    scale: Rational,
}

impl PartialEq for NewtonPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.facets == other.facets
            && self.scale == other.scale
    }
}

/// Builds `Newt(ideal)` at scale 1.
pub fn build(ideal: &MonomialIdeal) -> Result<NewtonPolytope> {
    ideal.require_nonzero()?;
    let n = ideal.ambient_dim();
    let points = ideal.generators().to_vec();
    let rays = double_description(n, &points);

    let mut facets = Vec::with_capacity(rays.len());
    for ray in rays {
        let (b, a) = ray.split_first().expect("ray has n+1 entries");
        if a.iter().all(Zero::is_zero) {
            // (b, 0) with b < 0 is the face at infinity t >= 0.
            continue;
        }
        let g = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let (offset, rem) = b.div_rem(&g);
        if !rem.is_zero() {
            return Err(Error::Invariant(format!(
                "facet offset {b} not divisible by normal content {g}"
            )));
        }
        let normal = a
            .iter()
            .map(|x| rational::to_i64(&(x / &g)))
            .collect::<Result<Vec<_>>>()?;
        let offset = rational::to_i64(&offset)?;
        if offset < 0 || normal.iter().any(|&x| x < 0) {
            return Err(Error::Invariant("facet with negative data".into()));
        }
        if offset == 0 && normal.iter().filter(|&&x| x != 0).count() != 1 {
            // Only coordinate hyperplanes can pass through the origin.
            return Err(Error::Invariant(format!(
                "non-coordinate facet through the origin: {normal:?}"
            )));
        }
        facets.push(Facet { normal, offset });
    }
    facets.sort();
    facets.dedup();

    let vertices: Vec<ExponentVector> = points
        .iter()
        .filter(|g| {
            let tight: Vec<&Facet> = facets
                .iter()
                .filter(|f| f.evaluate_int(g.entries()) == f.offset)
                .collect();
            rank(&tight.iter().map(|f| f.normal.clone()).collect::<Vec<_>>()) == n
        })
        .cloned()
        .collect();

    let witnesses = facets
        .iter()
        .map(|f| facet_witness(f, &facets, &vertices))
        .collect();

    Ok(NewtonPolytope {
        ambient_dim: n,
        source_points: points,
        vertices,
        facets,
        witnesses,
        scale: Rational::one(),
    })
}

/// Point obtained from a relative-interior point of `facet` by stepping a
/// little outward: it violates `facet` and strictly satisfies all others.
fn facet_witness(facet: &Facet, facets: &[Facet], vertices: &[ExponentVector]) -> Vec<Rational> {
    let n = facet.normal.len();
    let tight: Vec<&ExponentVector> = vertices
        .iter()
        .filter(|v| facet.evaluate_int(v.entries()) == facet.offset)
        .collect();
    let k = Rational::from_integer(BigInt::from(tight.len()));
    let mut z = vec![Rational::zero(); n];
    for v in &tight {
        for (zi, &e) in z.iter_mut().zip(v.entries()) {
            *zi += Rational::from_integer(BigInt::from(e)) / &k;
        }
    }
    for (i, &a) in facet.normal.iter().enumerate() {
        if a == 0 {
            z[i] += Rational::one();
        }
    }
    let mut eps: Option<Rational> = None;
    for other in facets.iter().filter(|f| *f != facet) {
        let dot: i64 = other.normal.iter().zip(&facet.normal).map(|(a, b)| a * b).sum();
        if dot > 0 {
            let slack = other.evaluate(&z) - Rational::from_integer(other.offset.into());
            let e = slack / Rational::from_integer(BigInt::from(2 * dot));
            eps = Some(match eps {
                Some(cur) if cur < e => cur,
                _ => e,
            });
        }
    }
    let eps = eps.unwrap_or_else(Rational::one);
    z.iter()
        .zip(&facet.normal)
        .map(|(zi, &a)| zi - &eps * BigInt::from(a))
        .collect()
}

/// Rank of an integer matrix (rows given), by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let (a, b) = (m[r][c].clone(), m[i][c].clone());
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = &*x * &a - y * &b;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Tight-constraint sets in the double-description method.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset(vec![0; bits.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &Bitset) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    tight: Bitset,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Extreme rays `(b, a)` of `{ <a, g> - b >= 0 for g in points, a >= 0 }`.
fn double_description(n: usize, points: &[ExponentVector]) -> Vec<Vec<BigInt>> {
    let d = n + 1;
    let total = n + points.len();
    // Row i < n is a_i >= 0; row n + j is the constraint of points[j].
    let row_value = |row: usize, v: &[BigInt]| -> BigInt {
        if row < n {
            v[row + 1].clone()
        } else {
            let g = &points[row - n];
            g.entries()
                .iter()
                .enumerate()
                .fold(-v[0].clone(), |acc, (i, &e)| acc + &v[i + 1] * BigInt::from(e))
        }
    };

    // The first n + 1 rows are linearly independent; their cone is simplicial.
    let g0 = &points[0];
    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    {
        let mut v = vec![BigInt::zero(); d];
        v[0] = -BigInt::one();
        let mut tight = Bitset::new(total);
        (0..n).for_each(|i| tight.insert(i));
        rays.push(Ray { v, tight });
    }
    for i in 0..n {
        let mut v = vec![BigInt::zero(); d];
        v[0] = BigInt::from(g0.entries()[i]);
        v[i + 1] = BigInt::one();
        let mut tight = Bitset::new(total);
        (0..n).filter(|&j| j != i).for_each(|j| tight.insert(j));
        tight.insert(n);
        rays.push(Ray { v: primitive(v), tight });
    }

    for row in (n + 1)..total {
        let values: Vec<BigInt> = rays.iter().map(|r| row_value(row, &r.v)).collect();
        if values.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&values) {
                if s.is_zero() {
                    r.tight.insert(row);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.intersect(&rays[q].tight);
                if common.count() + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&k| k != p && k != q)
                    .all(|k| !common.is_subset_of(&rays[k].tight));
                if !adjacent {
                    continue;
                }
                let sp = &values[p];
                let sq = -&values[q];
                let v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(vq, vp)| vq * sp + vp * &sq)
                    .collect();
                let mut tight = common;
                tight.insert(row);
                created.push(Ray { v: primitive(v), tight });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, s) in rays.into_iter().zip(values) {
            if s.is_negative() {
                continue;
            }
            if s.is_zero() {
                r.tight.insert(row);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

impl NewtonPolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with positive offset: the ones that are not coordinate
    /// hyperplanes through the origin.
    pub fn bounding_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| f.offset > 0)
    }

    pub fn source_points(&self) -> &[ExponentVector] {
        &self.source_points
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// For each facet, a point that lies outside the polyhedron only because
    /// of that facet (valid at scale 1).
    pub fn witnesses(&self) -> &[Vec<Rational>] {
        &self.witnesses
    }

    pub fn scale_factor(&self) -> &Rational {
        &self.scale
    }

    fn check_point(&self, p: &[Rational]) -> Result<()> {
        if p.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: p.len(),
            });
        }
        Ok(())
    }

    /// Membership of `p` in `scale · Newt`, closed or interior.
    pub fn member(&self, p: &[Rational], mode: Membership) -> Result<bool> {
        self.check_point(p)?;
        Ok(self.member_unchecked(&self.facets, p, mode))
    }

    fn member_unchecked(&self, facets: &[Facet], p: &[Rational], mode: Membership) -> bool {
        facets.iter().all(|f| {
            let lhs = f.evaluate(p);
            let rhs = &self.scale * BigInt::from(f.offset);
            match mode {
                Membership::Closed => lhs >= rhs,
                Membership::Interior => lhs > rhs,
            }
        })
    }

    /// Closed membership with facet `skip` removed from the description.
    pub fn member_without_facet(&self, p: &[Rational], skip: usize) -> Result<bool> {
        self.check_point(p)?;
        let facets: Vec<Facet> = self
            .facets
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, f)| f.clone())
            .collect();
        Ok(self.member_unchecked(&facets, p, Membership::Closed))
    }

    /// `c · self` (scales compose multiplicatively).
    pub fn scale(&self, c: &Rational) -> Result<NewtonPolytope> {
        rational::require_nonnegative(c, "scale factor")?;
        let mut out = self.clone();
        out.scale = &self.scale * c;
        Ok(out)
    }

    /// Minkowski sum of the two scaled polyhedra.
    ///
    /// With `r` the common denominator of both scales, `r · (sP ⊕ tQ)` is the
    /// Newton polyhedron of the integer point set `{rs·u + rt·w}` over vertex
    /// pairs; the result carries scale `1/r`.
    pub fn minkowski_sum(&self, other: &NewtonPolytope) -> Result<NewtonPolytope> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let r = common_denominator([&self.scale, &other.scale]);
        let k1 = integer_multiple(&self.scale, &r)?;
        let k2 = integer_multiple(&other.scale, &r)?;
        let mut points = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for u in &self.vertices {
            for w in &other.vertices {
                points.push(u.scale(k1).add(&w.scale(k2)));
            }
        }
        let ideal = MonomialIdeal::from_generators(self.ambient_dim, points);
        let mut sum = build(&ideal)?;
        sum.scale = Rational::new(BigInt::one(), r);
        Ok(sum)
    }

    /// `sup { t : p ∈ t · self }` for a strictly positive point `p`.
    pub fn min_ratio(&self, p: &[Rational]) -> Result<Threshold> {
        self.check_point(p)?;
        if p.iter().any(|x| !x.is_positive()) {
            return Err(Error::input("min_ratio needs a strictly positive point"));
        }
        if self.scale.is_zero() {
            return Ok(Threshold::Infinite);
        }
        let best = self
            .bounding_facets()
            .map(|f| f.evaluate(p) / (&self.scale * BigInt::from(f.offset)))
            .min();
        Ok(match best {
            Some(t) => Threshold::Finite(t),
            None => Threshold::Infinite,
        })
    }
}

fn integer_multiple(s: &Rational, r: &BigInt) -> Result<u32> {
    let k = s * r;
    debug_assert!(k.is_integer());
    let k = k.to_integer();
    u32::try_from(k).map_err(|_| Error::Overflow("clearing scale denominators"))
}

/// Closed membership `p ∈ Newt(ideal)` decided from scratch: is there
/// `λ >= 0` with `Σλ = 1` and `Σ λ_j g_j <= p`? Because of the orthant,
/// `Σλ = 1` may be relaxed to `Σλ >= 1`.
pub fn member_oracle(ideal: &MonomialIdeal, p: &[Rational]) -> Result<bool> {
    ideal.require_nonzero()?;
    if p.len() != ideal.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.ambient_dim(),
            found: p.len(),
        });
    }
    let gens = ideal.generators();
    let k = gens.len();
    let mut sys = System::new(k);
    for j in 0..k {
        let mut row = vec![Rational::zero(); k];
        row[j] = Rational::one();
        sys.push(row, Rational::zero());
    }
    sys.push(vec![Rational::one(); k], -Rational::one());
    for (i, pi) in p.iter().enumerate() {
        let row = gens
            .iter()
            .map(|g| -Rational::from_integer(BigInt::from(g.entries()[i])))
            .collect();
        sys.push(row, pi.clone());
    }
    Ok(sys.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    fn facet_set(p: &NewtonPolytope) -> Vec<(Vec<i64>, i64)> {
        let mut v: Vec<_> = p.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect();
        v.sort();
        v
    }

    fn sorted(mut v: Vec<(Vec<i64>, i64)>) -> Vec<(Vec<i64>, i64)> {
        v.sort();
        v
    }

    fn pt(v: &[Rational]) -> Vec<Rational> {
        v.to_vec()
    }

    #[test]
    fn segment_plus_orthant() {
        let p = build(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(
            facet_set(&p),
            sorted(vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![3, 2], 6)])
        );
    }

    #[test]
    fn three_generators() {
        let p = build(&ideal(2, &[&[4, 0], &[1, 2], &[0, 4]])).unwrap();
        assert_eq!(
            facet_set(&p),
            sorted(vec![
                (vec![1, 0], 0),
                (vec![0, 1], 0),
                (vec![2, 3], 8),
                (vec![2, 1], 4)
            ])
        );
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn principal_in_two_variables() {
        let p = build(&ideal(2, &[&[1, 0]])).unwrap();
        assert_eq!(facet_set(&p), sorted(vec![(vec![1, 0], 1), (vec![0, 1], 0)]));
    }

    #[test]
    fn unit_ideal_is_orthant() {
        let p = build(&MonomialIdeal::unit(3)).unwrap();
        assert_eq!(p.facets().len(), 3);
        assert!(p.facets().iter().all(Facet::is_coordinate));
        assert_eq!(p.min_ratio(&[int(1), int(1), int(1)]).unwrap(), Threshold::Infinite);
    }

    #[test]
    fn zero_ideal_rejected() {
        assert!(matches!(build(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal)));
        assert!(member_oracle(&MonomialIdeal::zero(2), &[int(1), int(1)]).is_err());
    }

    #[test]
    fn closed_versus_interior() {
        let p = build(&ideal(2, &[&[4, 0], &[1, 2], &[0, 4]])).unwrap();
        let q = pt(&[int(1), int(2)]);
        assert!(!p.member(&q, Membership::Interior).unwrap());
        assert!(p.member(&q, Membership::Closed).unwrap());
        for g in p.source_points() {
            let g: Vec<Rational> = g.entries().iter().map(|&e| int(e as i64)).collect();
            assert!(p.member(&g, Membership::Closed).unwrap());
        }
        assert!(p.member(&[int(1)], Membership::Closed).is_err());
    }

    #[test]
    fn oracle_examples() {
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(member_oracle(&a, &[int(1), rat(3, 2)]).unwrap());
        assert!(!member_oracle(&a, &[int(0), int(0)]).unwrap());
        assert!(member_oracle(&ideal(1, &[&[1]]), &[int(1)]).unwrap());
        assert!(member_oracle(&ideal(2, &[&[1, 0]]), &[int(1), int(0)]).unwrap());
    }

    #[test]
    fn scaling() {
        let p = build(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(p.scale(&int(1)).unwrap(), p);
        assert_eq!(p.scale(&int(2)).unwrap().scale(&rat(1, 2)).unwrap(), p);
        let s = p.scale(&rat(5, 6)).unwrap();
        let one = [int(1), int(1)];
        assert!(s.member(&one, Membership::Closed).unwrap());
        assert!(!s.member(&one, Membership::Interior).unwrap());
        assert!(p.scale(&rat(-1, 2)).is_err());
    }

    #[test]
    fn minkowski() {
        let x = build(&ideal(2, &[&[1, 0]])).unwrap();
        let y = build(&ideal(2, &[&[0, 1]])).unwrap();
        assert_eq!(x.minkowski_sum(&y).unwrap(), build(&ideal(2, &[&[1, 1]])).unwrap());
        let a = ideal(2, &[&[2, 0], &[0, 3]]);
        let pa = build(&a).unwrap();
        let aa = build(&a.multiply(&a).unwrap()).unwrap();
        assert_eq!(pa.minkowski_sum(&pa).unwrap(), aa);
        let unit = build(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(pa.minkowski_sum(&unit).unwrap(), pa);
        assert!(pa.minkowski_sum(&build(&MonomialIdeal::unit(3)).unwrap()).is_err());
    }

    #[test]
    fn rational_scales_in_minkowski() {
        // (1/2)P ⊕ (1/3)P = (5/6)P
        let pa = build(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        let s = pa
            .scale(&rat(1, 2))
            .unwrap()
            .minkowski_sum(&pa.scale(&rat(1, 3)).unwrap())
            .unwrap();
        let t = pa.scale(&rat(5, 6)).unwrap();
        for q in [[int(1), int(1)], [rat(5, 3), int(0)], [int(1), rat(1, 2)], [rat(1, 2), rat(5, 4)]] {
            assert_eq!(
                s.member(&q, Membership::Closed).unwrap(),
                t.member(&q, Membership::Closed).unwrap()
            );
        }
    }

    #[test]
    fn ratios() {
        let p = build(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(p.min_ratio(&[int(1), int(1)]).unwrap(), Threshold::Finite(rat(5, 6)));
        let q = build(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(q.min_ratio(&[int(1), int(1)]).unwrap(), Threshold::Finite(int(1)));
        assert!(p.min_ratio(&[int(0), int(1)]).is_err());
    }

    #[test]
    fn witnesses_certify_irredundancy() {
        let p = build(&ideal(3, &[&[3, 1, 0], &[0, 2, 2], &[1, 0, 4], &[2, 2, 2]])).unwrap();
        for (i, w) in p.witnesses().iter().enumerate() {
            assert!(!p.member(w, Membership::Closed).unwrap());
            assert!(p.member_without_facet(w, i).unwrap());
        }
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[]), 0);
    }
}
