//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Every expected value below is computed independently of the code under
//! test: closed forms, brute-force lattice enumeration, or a second
//! algorithm.

use std::process::{Command, ExitCode};
use std::time::Instant;

use multideal::asymptotic::{asymptotic_multiplier_ideal, GradedSystem};
use multideal::expr::print_ideal_vectors;
use multideal::multiplier::interior_samples;
use multideal::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_vecs(n, gens).unwrap()
}

fn parse(text: &str) -> MonomialIdeal {
    parse_ideal(text, None).unwrap()
}

fn unit_or_power(base: &MonomialIdeal, exponent: i64) -> MonomialIdeal {
    if exponent <= 0 {
        MonomialIdeal::unit(base.ambient_dim())
    } else {
        base.power(exponent as u32)
    }
}

fn floor(c: &Rational) -> i64 {
    let f = c.floor().to_integer();
    i64::try_from(f).unwrap()
}

/// Minimal monomials `m` in the box `[0, bounds]` satisfying `pred`.
fn minimal_in_box(n: usize, bounds: &[u32], pred: impl Fn(&[u32]) -> bool) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut m = vec![0u32; n];
    loop {
        if pred(&m) {
            gens.push(ExponentVector::new(m.clone()));
        }
        let mut i = 0;
        while i < n && m[i] == bounds[i] {
            m[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        m[i] += 1;
    }
    minimalize(gens, n).unwrap()
}

fn random_ideal(rng: &mut ChaCha8Rng, dims: &[usize], max_gens: usize, max_exp: u32) -> MonomialIdeal {
    loop {
        let n = dims[rng.random_range(0..dims.len())];
        let k = rng.random_range(1..=max_gens);
        let gens = (0..k)
            .map(|_| ExponentVector::new((0..n).map(|_| rng.random_range(0..=max_exp)).collect()))
            .collect();
        let a = minimalize(gens, n).unwrap();
        if a.is_proper_nonzero() {
            return a;
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    rat(rng.random_range(1..=max_num), rng.random_range(1..=max_den))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn golden_values() -> Outcome {
    let mut count = 0;
    let mut eq = |what: String, got: MonomialIdeal, want: MonomialIdeal| -> std::result::Result<(), String> {
        count += 1;
        ensure!(got == want, "{what}: got {got}, expected {want}");
        Ok(())
    };

    ensure!(lct(&parse("(x^2,y^3)")).unwrap() == Threshold::Finite(rat(5, 6)), "lct(x^2,y^3) != 5/6");
    ensure!(lct(&parse("(x^2,y^2)")).unwrap() == Threshold::Finite(int(1)), "lct(x^2,y^2) != 1");

    let a = parse("(x^4,x*y^2,y^4)");
    eq("J((x^4,xy^2,y^4))".into(), multiplier_ideal(&a, &int(1)).unwrap(), parse("(x^2,x*y,y^2)"))?;
    let y = ExponentVector::new(vec![0, 1]);
    ensure!(!multiplier_ideal(&a, &int(1)).unwrap().contains_monomial(&y).unwrap(), "y in J(a)");
    for c in [rat(9, 10), rat(99, 100)] {
        ensure!(multiplier_ideal(&a, &c).unwrap().contains_monomial(&y).unwrap(), "y not in J(a^{c})");
    }

    let b = parse("(x^2,y^2)");
    let m2 = MonomialIdeal::maximal(2);
    for c in [rat(3, 5), int(1), rat(13, 10), int(2), rat(7, 2)] {
        let want = unit_or_power(&m2, floor(&(&c * int(2))) - 1);
        eq(format!("J((x^2,y^2)^{c})"), multiplier_ideal(&b, &c).unwrap(), want)?;
    }

    for n in [2usize, 3] {
        let m = MonomialIdeal::maximal(n);
        let nn = n as i64;
        for c in [int(nn), int(nn) + rat(1, 2), int(nn + 2), rat(17 * nn, 5)] {
            let want = m.power((floor(&c) + 1 - nn) as u32);
            eq(format!("J(m^{c}), n = {n}"), multiplier_ideal(&m, &c).unwrap(), want)?;
        }
        for c in [rat(1, 2), int(1), int(nn) - rat(1, 7)] {
            eq(format!("J(m^{c}), n = {n}"), multiplier_ideal(&m, &c).unwrap(), MonomialIdeal::unit(n))?;
        }
    }

    for e in 1..=3usize {
        let q = MonomialIdeal::coordinate(3, e);
        for l in 0..=5i64 {
            let want = unit_or_power(&q, l + 1 - e as i64);
            eq(format!("J(q^{l}), e = {e}"), multiplier_ideal(&q, &int(l)).unwrap(), want)?;
        }
    }

    for (p, q) in [(2u32, 3u32), (9, 10), (3, 30)] {
        let a = ideal(2, &[&[p, 0], &[0, q]]);
        let expected_lct = rat(1, p as i64) + rat(1, q as i64);
        ensure!(lct(&a).unwrap() == Threshold::Finite(expected_lct.clone()), "lct(x^{p},y^{q})");
        let mut want: Vec<Rational> = Vec::new();
        for v1 in 0..2 * p as i64 {
            for v2 in 0..2 * q as i64 {
                let xi = rat(v1 + 1, p as i64) + rat(v2 + 1, q as i64);
                if xi <= int(2) && !want.contains(&xi) {
                    want.push(xi);
                }
            }
        }
        want.sort();
        let got = jumping_numbers(&a, &int(2)).unwrap().values();
        ensure!(got == want, "jumps of (x^{p},y^{q}) in (0, 2]: {} computed, {} expected", got.len(), want.len());
        ensure!(got[0] == expected_lct, "first jump of (x^{p},y^{q})");
    }

    let q = parse("(x*y,y*z,x*z)");
    let xyz = ExponentVector::new(vec![1, 1, 1]);
    ensure!(q.symbolic_power(2).unwrap().contains_monomial(&xyz).unwrap(), "xyz not in q^(2)");
    ensure!(!q.power(2).contains_monomial(&xyz).unwrap(), "xyz in q^2");
    for m in 1..=4u32 {
        ensure!(q.power(m).contains_ideal(&q.symbolic_power(2 * m).unwrap()).unwrap(), "q^({}) not in q^{m}", 2 * m);
        let v = symbolic_power_theorem_check(&q, m).unwrap();
        ensure!(v.holds && v.is_consistent(), "symbolic power check fails at m = {m}");
    }
    Ok(format!("{count} ideal identities, lct and spectrum values"))
}

fn theorem_suites() -> Outcome {
    let report = run_suite(&SuiteConfig::default()).map_err(|e| e.to_string())?;
    for s in &report.summaries {
        println!(
            "    {:<20} held {:>3}  failed {:>3}  errors {:>3}  skipped {:>3}",
            s.check.name(),
            s.held,
            s.failed,
            s.errors,
            s.skipped
        );
    }
    let held: usize = report.summaries.iter().map(|s| s.held).sum();
    let total: usize = report.summaries.iter().map(|s| s.cases).sum();
    ensure!(report.all_hold, "{} failing cases, first: {:?}", report.failures.len(), report.failures.first());
    ensure!(held == total, "{held} of {total} cases held; the rest were skipped");
    for f in &report.failures {
        if let Some(v) = &f.verdict {
            ensure!(v.is_consistent(), "inconsistent verdict");
        }
    }
    Ok(format!("{held}/{total} verdicts hold (seed {})", report.config.seed))
}

fn oracle_equivalences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    // (a) Facet membership against the elimination oracle.
    let ideals = 10;
    let points_per_ideal = 1000;
    for _ in 0..ideals {
        let a = random_ideal(&mut rng, &[2, 3], 5, 8);
        let n = a.ambient_dim();
        let p = build(&a).unwrap();
        let vertices = p.vertices().to_vec();
        for i in 0..points_per_ideal {
            let point: Vec<Rational> = if i % 2 == 0 {
                (0..n).map(|_| rat(rng.random_range(0..=60), rng.random_range(1..=6))).collect()
            } else {
                // Near the boundary: a convex combination of two vertices, nudged.
                let u = &vertices[rng.random_range(0..vertices.len())];
                let v = &vertices[rng.random_range(0..vertices.len())];
                let t = rat(rng.random_range(0..=12), 12);
                (0..n)
                    .map(|j| {
                        let x = &t * int(u.entries()[j] as i64) + (int(1) - &t) * int(v.entries()[j] as i64);
                        let nudge = rat(rng.random_range(-2..=2), 24);
                        let y = x + nudge;
                        if y < int(0) {
                            int(0)
                        } else {
                            y
                        }
                    })
                    .collect()
            };
            let fast = p.member(&point, Membership::Closed).unwrap();
            let slow = member_oracle(&a, &point).unwrap();
            ensure!(fast == slow, "(a) {a} at {point:?}: facets say {fast}, oracle says {slow}");
        }
    }

    // (b) J(a^k) against the mixed ideal of k unit-coefficient copies.
    let mut b_cases = 0;
    for _ in 0..20 {
        let a = random_ideal(&mut rng, &[2, 3], 5, 8);
        for k in 1..=3i64 {
            let copies: Vec<(MonomialIdeal, Rational)> = (0..k).map(|_| (a.clone(), int(1))).collect();
            let mixed = mixed_multiplier_ideal(&copies).unwrap();
            ensure!(mixed == multiplier_ideal(&a, &int(k)).unwrap(), "(b) {a}, k = {k}");
            b_cases += 1;
        }
    }

    // (c) Asymptotic ideal of the powers of b against J(b^c).
    for _ in 0..20 {
        let b = random_ideal(&mut rng, &[2, 3], 5, 8);
        let c = random_rational(&mut rng, 12, 4);
        let system = GradedSystem::powers(b.clone()).unwrap();
        let asym = asymptotic_multiplier_ideal(&system, &c, DEFAULT_P_MAX).unwrap();
        ensure!(asym.ideal == multiplier_ideal(&b, &c).unwrap(), "(c) {b} at {c}");
    }

    // (d) Monomial valuation ideals against the closed form <w, m+1> > c.
    let weights = [
        vec![rat(1, 1), rat(1, 1)],
        vec![rat(1, 2), rat(1, 3)],
        vec![rat(2, 3), rat(5, 4)],
        vec![rat(1, 1), rat(1, 2), rat(1, 3)],
        vec![rat(3, 2), rat(1, 5), rat(2, 7)],
    ];
    let cs = [rat(1, 2), int(1), rat(7, 3), rat(9, 2)];
    for w in &weights {
        let n = w.len();
        let system = GradedSystem::weighted(w.clone()).unwrap();
        for c in &cs {
            let asym = asymptotic_multiplier_ideal(&system, c, DEFAULT_P_MAX).unwrap();
            let bounds: Vec<u32> = w.iter().map(|wi| (floor(&(c / wi)) + 1) as u32).collect();
            let want = minimal_in_box(n, &bounds, |m| {
                let value: Rational = w.iter().zip(m).map(|(wi, &mi)| wi * int(mi as i64 + 1)).sum();
                &value > c
            });
            ensure!(asym.ideal == want, "(d) w = {w:?}, c = {c}: got {}, expected {want}", asym.ideal);
        }
    }
    Ok(format!(
        "(a) {} points, (b) {b_cases} powers, (c) 20 systems, (d) {} valuations",
        ideals * points_per_ideal,
        weights.len() * cs.len()
    ))
}

fn spectrum_semantics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut jumps_seen = 0;
    for _ in 0..50 {
        let a = random_ideal(&mut rng, &[2, 3], 5, 8);
        let t = lct(&a).unwrap().finite().cloned().ok_or("proper ideal with infinite lct")?;
        let bound = &t + int(1);
        let values = jumping_numbers(&a, &bound).unwrap().values();
        ensure!(values.first() == Some(&t), "{a}: first jump differs from lct {t}");
        jumps_seen += values.len();
        let mut before = MonomialIdeal::unit(a.ambient_dim());
        let mut lo = int(0);
        for (i, xi) in values.iter().enumerate() {
            // Constant on (lo, xi): every sample equals the first.
            let samples = interior_samples(&lo, xi, 3);
            let first = multiplier_ideal(&a, &samples[0]).unwrap();
            for s in &samples[1..] {
                ensure!(multiplier_ideal(&a, s).unwrap() == first, "{a}: J changes inside ({lo}, {xi})");
            }
            if i > 0 {
                ensure!(first == before, "{a}: J at {lo} differs from J just above it");
            }
            let at = multiplier_ideal(&a, xi).unwrap();
            ensure!(first.contains_ideal(&at).unwrap() && first != at, "{a}: no strict drop at {xi}");
            before = at;
            lo = xi.clone();
        }
        // Constant from the last jump up to the bound.
        for s in interior_samples(&lo, &bound, 3) {
            ensure!(multiplier_ideal(&a, &s).unwrap() == before, "{a}: unlisted jump in ({lo}, {bound}]");
        }
    }
    Ok(format!("50 ideals, {jumps_seen} jumps"))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_multideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn determinism_and_round_trip() -> Outcome {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["lct", "(x^2,y^3)"],
        vec!["mult", "--c", "1", "(x^4,x*y^2,y^4)"],
        vec!["jumps", "--max", "1", "(x^9,y^10)"],
        vec!["--json", "jumps", "--max", "2", "(x^2*y,y^3*z,x*z^4)"],
        vec!["--json", "newton", "(x^4,x*y^2,y^4)"],
        vec!["--json", "mixed", "--term", "(x^2,y^3):1/2", "--term", "(x*y,y^4):2/3"],
        vec!["--json", "asym", "--system", "symbolic:(x*y,y*z,x*z)", "--c", "3"],
        vec!["--json", "check", "jump_lemma", "--m", "3", "(x^3,y^2)", "(x,y)"],
        vec!["--json", "suite", "--seed", "9", "--cases", "8"],
    ];
    for args in &invocations {
        let first = cli(args);
        let second = cli(args);
        ensure!(first.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&first.stderr));
        ensure!(first.stdout == second.stdout, "{args:?} printed different bytes on a rerun");
    }
    ensure!(cli(&["lct", "(x^2,y^3)"]).stdout == b"5/6\n", "lct output");
    ensure!(cli(&["mult", "--c", "1", "(x^4,x*y^2,y^4)"]).stdout == b"(x^2, x*y, y^2)\n", "mult output");
    ensure!(cli(&["jumps", "--max", "1", "(x^9,y^10)"]).stdout.starts_with(b"19/90\n"), "jumps output");

    let mut corpus: Vec<(String, Option<usize>)> = [
        "(x^2, y^3)",
        "(x^2,y^3)",
        "  ( x ^ 2 ,  y^3 ) ",
        "{[4,0],[1,2],[0,4]}",
        "{ [4, 0], [1, 2], [0, 4] }",
        "(x*y, y*z, x*z)",
        "(x*y*z*w)",
        "(x, y, z, w)",
        "(x^9, y^10)",
        "(x^4, x*y^2, y^4)",
        "(y^2*x, x^3)",
        "(x^2*x, y)",
        "(x1^2, x2^3)",
        "(x1*x5^2, x3^3)",
        "(x8)",
        "(x1, x2, x3, x4, x5, x6, x7, x8)",
        "(x1^64*x8^64)",
        "(1)",
        "(x, 1)",
        "(0)",
        "{}",
        "{[0,0,0]}",
        "{[3]}",
        "(x^64)",
        "(x^2, x^3, x*y)",
        "(z)",
        "(x*y^2*z^3*w^4, w^5)",
        "{[1,0,0,0,0],[0,0,0,0,7]}",
        "(x^0*y)",
        "(x*x*x, y*y)",
    ]
    .into_iter()
    .map(|s| (s.to_string(), None))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.random_range(1..=8);
        let k = rng.random_range(1..=6);
        let gens = (0..k)
            .map(|_| ExponentVector::new((0..n).map(|_| rng.random_range(0..=12)).collect()))
            .collect();
        let a = MonomialIdeal::new(n, gens).unwrap();
        corpus.push((a.to_string(), Some(n)));
        corpus.push((print_ideal_vectors(&a), None));
    }
    for (text, n) in &corpus {
        let a = parse_ideal(text, *n).map_err(|e| format!("{text:?}: {e}"))?;
        let dim = Some(a.ambient_dim());
        let printed = print_ideal(&a);
        let again = parse_ideal(&printed, dim).map_err(|e| format!("{printed:?}: {e}"))?;
        ensure!(again == a, "{text:?} -> {printed:?} does not parse back");
        ensure!(print_ideal(&again) == printed, "{text:?}: printing is not stable");
        let vectors = print_ideal_vectors(&a);
        ensure!(parse_ideal(&vectors, None).unwrap() == a, "{text:?} -> {vectors:?} does not parse back");
    }
    Ok(format!("{} invocations byte-identical, {} round-trip expressions", invocations.len(), corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        ("golden values", golden_values),
        ("theorem property suites", theorem_suites),
        ("oracle equivalences", oracle_equivalences),
        ("jumping-spectrum semantics", spectrum_semantics),
        ("determinism and round-trip", determinism_and_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
