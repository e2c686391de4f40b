//! Exact multiplier ideals of monomial ideals.
//!
//! Howald's theorem turns the multiplier ideal `J(a^c)` of a monomial ideal
//! into a lattice-point question about the Newton polyhedron of `a`: `x^m`
//! lies in `J(a^c)` exactly when `m + (1,...,1)` is in the interior of
//! `c · Newt(a)`. This crate computes Newton polyhedra as exact
//! H-representations and derives from them multiplier ideals, log canonical
//! thresholds, jumping numbers, integral closures and asymptotic multiplier
//! ideals, together with executable checks of the theorems relating them.
//!
//! ```
//! use multideal::{lct, multiplier_ideal, parse_ideal, rat, Threshold};
//!
//! let a = parse_ideal("(x^2, y^3)", None).unwrap();
//! assert_eq!(lct(&a).unwrap(), Threshold::Finite(rat(5, 6)));
//!
//! let b = parse_ideal("(x^4, x*y^2, y^4)", None).unwrap();
//! let j = multiplier_ideal(&b, &rat(1, 1)).unwrap();
//! assert_eq!(j.to_string(), "(x^2, x*y, y^2)");
//! ```

pub mod asymptotic;
pub mod elimination;
pub mod error;
pub mod expr;
pub mod monomial;
pub mod multiplier;
pub mod polytope;
pub mod rational;
mod staircase;
pub mod theorems;
pub mod verdict;

pub use asymptotic::{
    asymptotic_multiplier_ideal, growth_chain_check, symbolic_power_theorem_check, Asymptotic,
    GradedSystem, SystemKind, DEFAULT_P_MAX,
};
pub use error::{Error, Result};
pub use expr::{parse_ideal, print_ideal};
pub use monomial::{minimalize, ExponentVector, MonomialIdeal, MAX_DIM, MAX_EXPONENT};
pub use multiplier::{
    integral_closure, jumping_length, jumping_numbers, lct, mixed_multiplier_ideal,
    mixed_multiplier_ideal_via_product, multiplier_ideal, Jump, JumpingSpectrum,
};
pub use polytope::{build, member_oracle, Facet, Membership, NewtonPolytope};
pub use rational::{format_rational, int, parse_rational, rat, Rational, Threshold};
pub use theorems::{
    check_briancon_skoda, check_jump_lemma, check_periodicity, check_restriction, check_skoda_i,
    check_skoda_ii, check_subadditivity, check_uniform_artin_rees, run_suite, Check, Report,
    SuiteConfig,
};
pub use verdict::{Relation, Side, Verdict, Witness};
