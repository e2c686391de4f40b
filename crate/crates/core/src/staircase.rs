//! Dense height-function form of monomial ideals, for bulk inclusion tests.
//!
//! On a grid over the first `n - 1` coordinates, an ideal `I` is stored as
//! `h(e) = min { t : x^(e, t) ∈ I }`. When every generator of every ideal in
//! play has its first `n - 1` coordinates inside the grid, heights are
//! constant past the grid's far faces, so comparisons on the grid decide
//! inclusion exactly.

use crate::monomial::{ExponentVector, MonomialIdeal};

/// Height of a column containing no monomial of the ideal.
pub(crate) const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Grid {
    /// Number of cells along each of the first `n - 1` coordinates.
    sides: Vec<usize>,
    len: usize,
}

impl Grid {
    /// `sides[i]` cells along coordinate `i`; `sides.len() = n - 1`.
    pub fn new(sides: Vec<usize>) -> Grid {
        assert!(sides.iter().all(|&s| s > 0));
        let len = sides.iter().product();
        Grid { sides, len }
    }

    #[cfg(test)]
    fn dim(&self) -> usize {
        self.sides.len() + 1
    }

    fn index(&self, e: &[u32]) -> Option<usize> {
        let mut idx = 0;
        for (&x, &s) in e.iter().zip(&self.sides) {
            if x as usize >= s {
                return None;
            }
            idx = idx * s + x as usize;
        }
        Some(idx)
    }

    fn point(&self, mut idx: usize) -> Vec<u32> {
        let mut e = vec![0u32; self.sides.len()];
        for (x, &s) in e.iter_mut().zip(&self.sides).rev() {
            *x = (idx % s) as u32;
            idx /= s;
        }
        e
    }

    /// Row length of the innermost coordinate (1 when `n = 1`).
    fn row(&self) -> usize {
        self.sides.last().copied().unwrap_or(1)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Staircase {
    grid: Grid,
    heights: Vec<u32>,
}

impl Staircase {
    #[cfg(test)]
    pub fn from_ideal(ideal: &MonomialIdeal, grid: &Grid) -> Staircase {
        assert_eq!(ideal.ambient_dim(), grid.dim());
        let k = grid.sides.len();
        let mut heights = vec![NONE; grid.len];
        for g in ideal.generators() {
            let e = g.entries();
            let idx = grid.index(&e[..k]).expect("generator outside the grid");
            heights[idx] = heights[idx].min(e[k]);
        }
        let mut s = Staircase {
            grid: grid.clone(),
            heights,
        };
        s.close_upward();
        s
    }

    /// Propagates minima in increasing direction along every axis.
    #[cfg(test)]
    fn close_upward(&mut self) {
        let sides = &self.grid.sides;
        let mut stride = 1;
        for axis in (0..sides.len()).rev() {
            let side = sides[axis];
            let block = stride * side;
            for start in (0..self.grid.len).step_by(block) {
                for j in 1..side {
                    let (lo, hi) = self.heights[start..start + block].split_at_mut(j * stride);
                    let prev = &lo[(j - 1) * stride..];
                    for (h, &p) in hi[..stride].iter_mut().zip(prev) {
                        *h = (*h).min(p);
                    }
                }
            }
            stride = block;
        }
    }

    /// `J` of a scaled polyhedron from its bounding facets `<a, x> >= b`:
    /// column `e` holds the least `t` with `den·<a, (e, t) + 1> > num·b` for
    /// every facet.
    pub fn multiplier(facets: &[(Vec<i64>, i64)], num: i128, den: i128, grid: &Grid) -> Staircase {
        let k = grid.sides.len();
        // Per facet: the target num·b, the last-coordinate weight den·a_n,
        // and the running value den·sum_{i<k} a_i (e_i + 1).
        let targets: Vec<i128> = facets.iter().map(|(_, b)| num * *b as i128).collect();
        let weights: Vec<i128> = facets.iter().map(|(a, _)| den * a[k] as i128).collect();
        let steps: Vec<Vec<i128>> = facets
            .iter()
            .map(|(a, _)| a[..k].iter().map(|&x| den * x as i128).collect())
            .collect();
        let mut sums: Vec<i128> = steps.iter().map(|st| st.iter().sum()).collect();
        let mut e = vec![0usize; k];
        let mut heights = Vec::with_capacity(grid.len);
        for _ in 0..grid.len {
            let mut t: i128 = 0;
            for f in 0..facets.len() {
                let x = targets[f] - sums[f];
                if weights[f] == 0 {
                    if x >= 0 {
                        t = -1;
                        break;
                    }
                } else if x >= 0 {
                    t = t.max(x / weights[f]);
                }
            }
            heights.push(if t < 0 { NONE } else { t as u32 });
            // Advance the odometer, last coordinate fastest.
            for i in (0..k).rev() {
                if e[i] + 1 < grid.sides[i] {
                    e[i] += 1;
                    for (sum, st) in sums.iter_mut().zip(&steps) {
                        *sum += st[i];
                    }
                    break;
                }
                for (sum, st) in sums.iter_mut().zip(&steps) {
                    *sum -= st[i] * e[i] as i128;
                }
                e[i] = 0;
            }
        }
        Staircase {
            grid: grid.clone(),
            heights,
        }
    }

    /// The product of this ideal with `ideal`: for each generator `g`,
    /// `h(e) <- min(h(e), g_n + h_self(e - g'))` over `e >= g'`.
    pub fn times(&self, ideal: &MonomialIdeal) -> Staircase {
        let k = self.grid.sides.len();
        let row = self.grid.row();
        let outer_sides = &self.grid.sides[..k.saturating_sub(1)];
        let outer_grid = Grid::new(outer_sides.to_vec());
        let outer_points: Vec<Vec<u32>> = (0..outer_grid.len).map(|o| outer_grid.point(o)).collect();
        let mut out = vec![NONE; self.grid.len];
        for g in ideal.generators() {
            let e = g.entries();
            let shift = e[k];
            let (outer_g, inner_g) = match k {
                0 => (&e[..0], 0),
                _ => (&e[..k - 1], e[k - 1] as usize),
            };
            let Some(g_index) = outer_grid.index(outer_g) else {
                continue;
            };
            if inner_g >= row {
                continue;
            }
            for (o, point) in outer_points.iter().enumerate() {
                if point.iter().zip(outer_g).any(|(&d, &x)| d < x) {
                    continue;
                }
                // Row-major indices are linear, so the source row is o - index(g').
                let d0 = o * row;
                let s0 = (o - g_index) * row;
                let dst_row = &mut out[d0 + inner_g..d0 + row];
                let src_row = &self.heights[s0..s0 + row - inner_g];
                for (d, &s) in dst_row.iter_mut().zip(src_row) {
                    *d = (*d).min(s.saturating_add(shift));
                }
            }
        }
        Staircase {
            grid: self.grid.clone(),
            heights: out,
        }
    }

    pub fn intersect(&self, other: &Staircase) -> Staircase {
        assert_eq!(self.grid, other.grid);
        Staircase {
            grid: self.grid.clone(),
            heights: self
                .heights
                .iter()
                .zip(&other.heights)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Staircase) -> bool {
        assert_eq!(self.grid, other.grid);
        self.heights
            .iter()
            .zip(&other.heights)
            .all(|(&a, &b)| a >= b)
    }

    /// Minimal generators: columns whose height is finite and strictly below
    /// that of every predecessor column.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let k = self.grid.sides.len();
        let mut gens = Vec::new();
        for (idx, &h) in self.heights.iter().enumerate() {
            if h == NONE {
                continue;
            }
            let mut e = self.grid.point(idx);
            let corner = (0..k).all(|i| {
                if e[i] == 0 {
                    return true;
                }
                e[i] -= 1;
                let below = self.heights[self.grid.index(&e).expect("inside")];
                e[i] += 1;
                below > h
            });
            if corner {
                e.push(h);
                gens.push(ExponentVector::new(e));
            }
        }
        crate::monomial::minimalize(gens, k + 1).expect("consistent dimensions")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::multiplier_ideal;
    use crate::polytope::build;
    use crate::rational::rat;
    use num_traits::ToPrimitive;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    fn samples() -> Vec<MonomialIdeal> {
        vec![
            ideal(1, &[&[3]]),
            ideal(2, &[&[2, 0], &[0, 3]]),
            ideal(2, &[&[4, 0], &[1, 2], &[0, 4]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(3, &[&[3, 0, 1], &[0, 2, 2], &[1, 1, 0], &[0, 0, 4]]),
            ideal(3, &[&[2, 1, 3]]),
        ]
    }

    fn grid_for(n: usize, side: usize) -> Grid {
        Grid::new(vec![side; n - 1])
    }

    #[test]
    fn round_trip() {
        for a in samples() {
            let g = grid_for(a.ambient_dim(), 12);
            assert_eq!(Staircase::from_ideal(&a, &g).to_ideal(), a);
        }
    }

    #[test]
    fn products_and_intersections() {
        let all = samples();
        for a in &all {
            for b in all.iter().filter(|b| b.ambient_dim() == a.ambient_dim()) {
                let g = grid_for(a.ambient_dim(), 12);
                let sa = Staircase::from_ideal(a, &g);
                let sb = Staircase::from_ideal(b, &g);
                assert_eq!(sa.times(b).to_ideal(), a.multiply(b).unwrap());
                assert_eq!(sa.intersect(&sb).to_ideal(), a.intersect(b).unwrap());
                assert_eq!(sa.is_subset_of(&sb), b.contains_ideal(a).unwrap());
            }
        }
    }

    #[test]
    fn multiplier_columns() {
        for a in samples() {
            let p = build(&a).unwrap();
            let facets: Vec<(Vec<i64>, i64)> = p
                .bounding_facets()
                .map(|f| (f.normal.clone(), f.offset))
                .collect();
            for c in [rat(1, 2), rat(1, 1), rat(5, 3), rat(3, 1)] {
                let g = grid_for(a.ambient_dim(), 16);
                // An unreduced fraction must give the same columns.
                let (num, den) = (c.numer().to_i128().unwrap(), c.denom().to_i128().unwrap());
                let s = Staircase::multiplier(&facets, 2 * num, 2 * den, &g);
                assert_eq!(s.to_ideal(), multiplier_ideal(&a, &c).unwrap(), "{a} at {c}");
            }
        }
    }
}

