//! Exact Fourier–Motzkin elimination over the rationals.
//!
//! A [`System`] is a conjunction of rows `sum_j a_j x_j + c >= 0` (or `> 0`
//! when strict). Variables are eliminated in index order; Chernikov's
//! history rule and dominance pruning keep the intermediate systems small.
//! Back-substitution through the recorded stages produces a feasible point.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    constant: Rational,
    strict: bool,
    /// Original rows this one was combined from (sorted).
    history: Vec<usize>,
}

impl Row {
    fn value(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .fold(self.constant.clone(), |acc, (a, v)| acc + a * v)
    }

    /// Positive rescaling so that the first nonzero coefficient is ±1.
    fn normalize(&mut self) {
        let lead = self
            .coeffs
            .iter()
            .find(|a| !a.is_zero())
            .or(if self.constant.is_zero() { None } else { Some(&self.constant) })
            .map(|a| a.abs());
        if let Some(lead) = lead {
            if !lead.is_one() {
                for a in &mut self.coeffs {
                    *a /= &lead;
                }
                self.constant /= &lead;
            }
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn constant_holds(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }
}

fn merge_history(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

/// A system of linear inequalities in `nvars` rational unknowns.
#[derive(Clone, Debug)]
pub struct System {
    nvars: usize,
    rows: Vec<Row>,
}

/// Rows that bound one variable from below / above at a given stage.
struct Stage {
    lower: Vec<Row>,
    upper: Vec<Row>,
}

impl System {
    pub fn new(nvars: usize) -> Self {
        System {
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `coeffs · x + constant >= 0`.
    pub fn push(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        self.push_row(coeffs, constant, false);
    }

    /// Adds `coeffs · x + constant > 0`.
    pub fn push_strict(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        self.push_row(coeffs, constant, true);
    }

    fn push_row(&mut self, coeffs: Vec<Rational>, constant: Rational, strict: bool) {
        assert_eq!(coeffs.len(), self.nvars, "row length must equal variable count");
        let id = self.rows.len();
        self.rows.push(Row {
            coeffs,
            constant,
            strict,
            history: vec![id],
        });
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// A point satisfying every row, or `None` if the system is infeasible.
    ///
    /// Every derived row is a nonnegative combination of the input rows, so a
    /// derived contradiction proves infeasibility. A returned point is checked
    /// against the input rows; if the pruned run cannot produce a valid point
    /// the elimination is repeated without the history rule.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        match self.run(true) {
            Outcome::Point(x) => Some(x),
            Outcome::Infeasible => None,
            Outcome::Inconclusive => match self.run(false) {
                Outcome::Point(x) => Some(x),
                Outcome::Infeasible => None,
                Outcome::Inconclusive => {
                    unreachable!("exact elimination always yields a point or a contradiction")
                }
            },
        }
    }

    fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.rows.iter().all(|r| {
            let v = r.value(x);
            if r.strict {
                v.is_positive()
            } else {
                !v.is_negative()
            }
        })
    }

    fn run(&self, chernikov: bool) -> Outcome {
        let mut rows: Vec<Row> = self.rows.clone();
        for r in &mut rows {
            r.normalize();
        }
        let mut stages = Vec::with_capacity(self.nvars);
        for j in 0..self.nvars {
            match eliminate(rows, j, chernikov) {
                Some((stage, next)) => {
                    stages.push(stage);
                    rows = next;
                }
                None => return Outcome::Infeasible,
            }
        }
        if !rows.iter().all(Row::constant_holds) {
            return Outcome::Infeasible;
        }
        let mut x = vec![Rational::zero(); self.nvars];
        for j in (0..self.nvars).rev() {
            match pick_value(&stages[j], j, &x) {
                Some(v) => x[j] = v,
                None => return Outcome::Inconclusive,
            }
        }
        if self.satisfied_by(&x) {
            Outcome::Point(x)
        } else {
            Outcome::Inconclusive
        }
    }
}

enum Outcome {
    Point(Vec<Rational>),
    Infeasible,
    Inconclusive,
}

/// Eliminates variable `j`; returns the stage rows and the projected system,
/// or `None` when a contradiction has already surfaced.
fn eliminate(rows: Vec<Row>, j: usize, chernikov: bool) -> Option<(Stage, Vec<Row>)> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut rest = Vec::new();
    for r in rows {
        if r.coeffs[j].is_positive() {
            lower.push(r);
        } else if r.coeffs[j].is_negative() {
            upper.push(r);
        } else {
            rest.push(r);
        }
    }
    // Chernikov: after eliminating j+1 variables a row built from more than
    // j+2 originals is redundant.
    let history_cap = j + 2;
    for lo in &lower {
        for up in &upper {
            let history = merge_history(&lo.history, &up.history);
            if chernikov && history.len() > history_cap {
                continue;
            }
            let wl = -up.coeffs[j].clone();
            let wu = lo.coeffs[j].clone();
            let coeffs: Vec<Rational> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(a, b)| a * &wl + b * &wu)
                .collect();
            let constant = &lo.constant * &wl + &up.constant * &wu;
            let mut row = Row {
                coeffs,
                constant,
                strict: lo.strict || up.strict,
                history,
            };
            row.coeffs[j] = Rational::zero();
            row.normalize();
            rest.push(row);
        }
    }
    let next = prune(rest)?;
    Some((Stage { lower, upper }, next))
}

/// Drops trivially true rows and rows dominated by a row with the same
/// coefficients; `None` if a constant row is violated.
fn prune(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: HashMap<Vec<Rational>, Row> = HashMap::new();
    let mut order: Vec<Vec<Rational>> = Vec::new();
    for r in rows {
        if r.is_constant() {
            if !r.constant_holds() {
                return None;
            }
            continue;
        }
        match best.get_mut(&r.coeffs) {
            Some(existing) => {
                // Smaller constant is tighter; at equal constants strict wins.
                let tighter = r.constant < existing.constant
                    || (r.constant == existing.constant && r.strict && !existing.strict);
                if tighter {
                    *existing = r;
                }
            }
            None => {
                order.push(r.coeffs.clone());
                best.insert(r.coeffs.clone(), r);
            }
        }
    }
    Some(order.into_iter().map(|k| best.remove(&k).unwrap()).collect())
}

/// Chooses `x_j` given values for `x_{j+1..}`.
fn pick_value(stage: &Stage, j: usize, x: &[Rational]) -> Option<Rational> {
    // For a row a_j x_j + rest >= 0: x_j >= -rest/a_j if a_j > 0, else <=.
    let bound = |r: &Row| {
        let mut partial = x.to_vec();
        partial[j] = Rational::zero();
        -r.value(&partial) / &r.coeffs[j]
    };
    let mut lo: Option<(Rational, bool)> = None;
    for r in &stage.lower {
        let b = bound(r);
        lo = match lo {
            Some((v, s)) if v > b || (v == b && s) => Some((v, s)),
            Some((v, s)) if v == b => Some((v, s || r.strict)),
            _ => Some((b, r.strict)),
        };
    }
    let mut hi: Option<(Rational, bool)> = None;
    for r in &stage.upper {
        let b = bound(r);
        hi = match hi {
            Some((v, s)) if v < b || (v == b && s) => Some((v, s)),
            Some((v, s)) if v == b => Some((v, s || r.strict)),
            _ => Some((b, r.strict)),
        };
    }
    match (lo, hi) {
        (None, None) => Some(Rational::zero()),
        (Some((l, _)), None) => Some(l + Rational::one()),
        (None, Some((h, _))) => Some(h - Rational::one()),
        (Some((l, ls)), Some((h, hs))) => {
            if l < h {
                Some((l + h) / Rational::from_integer(2.into()))
            } else if l == h && !ls && !hs {
                Some(l)
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn interval_feasibility() {
        // 1 <= x <= 2
        let mut s = System::new(1);
        s.push(vec![int(1)], int(-1));
        s.push(vec![int(-1)], int(2));
        let p = s.solve().unwrap();
        assert!(p[0] >= int(1) && p[0] <= int(2));

        // x >= 2, x <= 1
        let mut s = System::new(1);
        s.push(vec![int(1)], int(-2));
        s.push(vec![int(-1)], int(1));
        assert!(!s.is_feasible());
    }

    #[test]
    fn strictness_matters() {
        // x >= 1 and x <= 1 feasible; x > 1 and x <= 1 not
        let mut s = System::new(1);
        s.push(vec![int(1)], int(-1));
        s.push(vec![int(-1)], int(1));
        assert_eq!(s.solve().unwrap(), vec![int(1)]);
        let mut s = System::new(1);
        s.push_strict(vec![int(1)], int(-1));
        s.push(vec![int(-1)], int(1));
        assert!(!s.is_feasible());
    }

    #[test]
    fn triangle() {
        // x, y >= 0, x + y <= 1, x - y > 1/2
        let mut s = System::new(2);
        s.push(vec![int(1), int(0)], int(0));
        s.push(vec![int(0), int(1)], int(0));
        s.push(vec![int(-1), int(-1)], int(1));
        s.push_strict(vec![int(1), int(-1)], rat(-1, 2));
        let p = s.solve().unwrap();
        assert!(&p[0] - &p[1] > rat(1, 2));
        s.push(vec![int(0), int(1)], rat(-1, 2)); // y >= 1/2 -> x > 1, contradiction
        assert!(!s.is_feasible());
    }

    #[test]
    fn empty_system_is_feasible() {
        assert!(System::new(3).is_feasible());
    }
}
