//! `multideal`: multiplier ideals of monomial ideals from the command line.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use multideal::asymptotic::{asymptotic_multiplier_ideal, growth_chain_check, GradedSystem};
use multideal::expr::{default_names, print_monomial};
use multideal::theorems::parse_count;
use multideal::*;

/// Exact multiplier ideals, log canonical thresholds and jumping numbers of
/// monomial ideals.
#[derive(Parser)]
#[command(name = "multideal", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Number of variables; inferred from the expression when omitted.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Facets and vertices of the Newton polyhedron.
    Newton { ideal: String },
    /// Multiplier ideal J(a^c).
    Mult {
        #[arg(long)]
        c: String,
        ideal: String,
    },
    /// Mixed multiplier ideal J(a1^c1 ··· ak^ck).
    Mixed {
        /// `<ideal>:<p/q>`, repeated.
        #[arg(long = "term", required = true)]
        terms: Vec<String>,
    },
    /// Log canonical threshold.
    Lct { ideal: String },
    /// Jumping numbers in (0, max].
    Jumps {
        #[arg(long)]
        max: String,
        ideal: String,
    },
    /// Number of jumping numbers <= 1 of a monomial.
    Jlength { monomial: String },
    /// Integral closure.
    Intclose { ideal: String },
    /// Symbolic power of a squarefree ideal.
    Sympow {
        #[arg(long)]
        k: u32,
        ideal: String,
    },
    /// Asymptotic multiplier ideal of a graded system.
    Asym {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        c: String,
    },
    /// Verify one theorem on one instance.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Verify every theorem on seeded random instances.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Comma-separated ambient dimensions.
        #[arg(long, default_value = "2,3")]
        dims: String,
        /// Comma-separated check names; all when omitted.
        #[arg(long)]
        checks: Option<String>,
    },
}

#[derive(Args)]
struct SystemArg {
    /// `powers:<ideal>`, `symbolic:<ideal>` or `weight:<w1,w2,...>`.
    #[arg(long)]
    system: String,
    /// Largest index tried before giving up on stabilization.
    #[arg(long, default_value_t = DEFAULT_P_MAX)]
    pmax: u64,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// J(b^j) = b·J(b^(j-1)) for n <= j <= m.
    #[command(name = "skoda_i")]
    SkodaI {
        #[arg(long)]
        m: String,
        b: String,
    },
    /// J(a1^c·a2^d) = a1^(c-n+1)·J(a1^(n-1)·a2^d) for integer c >= n.
    #[command(name = "skoda_ii")]
    SkodaII {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        a1: String,
        a2: String,
    },
    /// closure(b^m) ⊆ J(b^m) ⊆ b^(m+1-n).
    #[command(name = "briancon_skoda")]
    BrianconSkoda {
        #[arg(long)]
        m: String,
        b: String,
    },
    /// J(a^c·b^d) ⊆ J(a^c)·J(b^d), and J(a^(cm)) ⊆ J(a^c)^m when m is given.
    #[command(name = "subadditivity")]
    Subadditivity {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        m: Option<String>,
        a: String,
        b: String,
    },
    /// J((b|Y)^c) ⊆ J(b^c)|Y for the coordinate subspace Y.
    #[command(name = "restriction")]
    Restriction {
        /// Comma-separated 0-based indices of the kept variables.
        #[arg(long)]
        keep: String,
        #[arg(long)]
        c: String,
        b: String,
    },
    /// b^m·J(a^ξ) ∩ J(a^ξ') ⊆ b^(m-n)·J(a^ξ') for consecutive jumps.
    #[command(name = "jump_lemma")]
    JumpLemma {
        #[arg(long)]
        m: String,
        a: String,
        b: String,
    },
    /// b^m ∩ (f) ⊆ b^(m-k)·(f) with k = ℓ(f)·n.
    #[command(name = "uniform_artin_rees")]
    UniformArtinRees {
        #[arg(long)]
        m: String,
        /// The monomial f.
        f: String,
        b: String,
    },
    /// ξ is a jump iff ξ+1 is, for ξ in (n-1, n-1+window].
    #[command(name = "periodicity")]
    Periodicity {
        #[arg(long, default_value = "1")]
        window: String,
        a: String,
    },
    /// a_l^m ⊆ a_lm ⊆ J(a^lm) ⊆ J(a^l)^m for a graded system.
    #[command(name = "growth_chain")]
    GrowthChain {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        l: String,
        #[arg(long)]
        m: String,
    },
    /// q^(e·m) ⊆ q^m for a squarefree ideal q.
    #[command(name = "symbolic_power")]
    SymbolicPower {
        #[arg(long)]
        m: String,
        q: String,
    },
}

/// What a command produced: text, JSON, and the exit status it implies.
struct Output {
    text: String,
    json: Value,
    status: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, status: 0 }
    }
}

const EXIT_VERDICT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NOT_STABILIZED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let (output, status) = match result {
        Ok(out) => {
            let body = if cli.json {
                let mut envelope = json!({ "schema_version": "1" });
                envelope["result"] = out.json;
                serde_json::to_string_pretty(&envelope).expect("serializable") + "\n"
            } else {
                out.text
            };
            (Some(body), out.status)
        }
        Err(e) => {
            let status = match e {
                Error::NotStabilized { .. } => EXIT_NOT_STABILIZED,
                _ => EXIT_INPUT,
            };
            if cli.json {
                let body = json!({ "schema_version": "1", "error": error_json(&e) });
                (Some(serde_json::to_string_pretty(&body).expect("serializable") + "\n"), status)
            } else {
                eprintln!("error: {e}");
                if let Error::NotStabilized { chain, .. } = &e {
                    for (p, ideal) in chain {
                        eprintln!("  p = {p}: {ideal}");
                    }
                }
                (None, status)
            }
        }
    };
    if let Some(body) = output {
        match &cli.out {
            Some(path) => {
                if let Err(e) = fs::write(path, body) {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            None => print!("{body}"),
        }
    }
    ExitCode::from(status)
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({ "message": e.to_string() });
    match e {
        Error::Syntax { position, .. } => v["position"] = json!(position),
        Error::NotStabilized { p_max, chain } => {
            v["p_max"] = json!(p_max);
            v["chain"] = json!(chain);
        }
        _ => {}
    }
    v
}

fn run(cli: &Cli) -> Result<Output> {
    let ideal = |text: &str| parse_ideal(text, cli.n);
    match &cli.command {
        Command::Newton { ideal: text } => {
            let a = ideal(text)?;
            let p = build(&a)?;
            let names = default_names(a.ambient_dim());
            let mut text = String::new();
            for f in p.facets() {
                text += &format!("{}\n", format_facet(f, &names));
            }
            let vertices: Vec<String> = p.vertices().iter().map(|v| print_monomial(v, &names)).collect();
            text += &format!("vertices: {}\n", vertices.join(", "));
            Ok(Output::ok(
                text,
                json!({ "ideal": a, "facets": p.facets(), "vertices": p.vertices() }),
            ))
        }
        Command::Mult { c, ideal: text } => {
            let a = ideal(text)?;
            let c = parse_rational(c)?;
            let j = multiplier_ideal(&a, &c)?;
            Ok(ideal_output(&j, json!({ "ideal": a, "c": format_rational(&c), "multiplier": j })))
        }
        Command::Mixed { terms } => {
            let parsed = terms
                .iter()
                .map(|t| {
                    let (i, c) = t
                        .rsplit_once(':')
                        .ok_or_else(|| Error::InvalidInput(format!("term {t:?} is not <ideal>:<p/q>")))?;
                    Ok((ideal(i)?, parse_rational(c)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let j = mixed_multiplier_ideal(&parsed)?;
            let terms_json: Vec<Value> = parsed
                .iter()
                .map(|(i, c)| json!({ "ideal": i, "c": format_rational(c) }))
                .collect();
            Ok(ideal_output(&j, json!({ "terms": terms_json, "multiplier": j })))
        }
        Command::Lct { ideal: text } => {
            let a = ideal(text)?;
            let t = lct(&a)?;
            Ok(Output::ok(format!("{t}\n"), json!({ "ideal": a, "lct": t })))
        }
        Command::Jumps { max, ideal: text } => {
            let a = ideal(text)?;
            let bound = parse_rational(max)?;
            let spectrum = jumping_numbers(&a, &bound)?;
            let text: String = spectrum.values().iter().map(|x| format!("{x}\n")).collect();
            Ok(Output::ok(text, json!(spectrum)))
        }
        Command::Jlength { monomial } => {
            let v = parse_monomial(monomial, cli.n)?;
            let len = jumping_length(&v)?;
            Ok(Output::ok(format!("{len}\n"), json!({ "monomial": v, "jumping_length": len })))
        }
        Command::Intclose { ideal: text } => {
            let a = ideal(text)?;
            let closure = integral_closure(&a)?;
            Ok(ideal_output(&closure, json!({ "ideal": a, "closure": closure })))
        }
        Command::Sympow { k, ideal: text } => {
            let q = ideal(text)?;
            let s = q.symbolic_power(*k)?;
            Ok(ideal_output(&s, json!({ "ideal": q, "k": k, "symbolic_power": s })))
        }
        Command::Asym { system, c } => {
            let s = parse_system(&system.system, cli.n)?;
            let c = parse_rational(c)?;
            let a = asymptotic_multiplier_ideal(&s, &c, system.pmax)?;
            Ok(Output::ok(
                format!("{}\nstabilized at p = {}\n", a.ideal, a.p_used),
                json!({ "system": system.system, "c": format_rational(&c), "asymptotic": a }),
            ))
        }
        Command::Check { check } => run_check(check, cli.n).map(verdict_output),
        Command::Suite {
            seed,
            cases,
            dims,
            checks,
        } => {
            let dims = dims
                .split(',')
                .map(|d| parse_count(d.trim()).map(|d| d as usize))
                .collect::<Result<Vec<_>>>()?;
            let checks = match checks {
                Some(list) => list.split(',').map(|c| c.trim().parse()).collect::<Result<Vec<Check>>>()?,
                None => Check::ALL.to_vec(),
            };
            let config = SuiteConfig {
                seed: *seed,
                cases: *cases,
                dims,
                checks,
                ..SuiteConfig::default()
            };
            let report = run_suite(&config)?;
            Ok(suite_output(&report))
        }
    }
}

fn run_check(check: &CheckCommand, n: Option<usize>) -> Result<Verdict> {
    let ideal = |text: &str| parse_ideal(text, n);
    match check {
        CheckCommand::SkodaI { m, b } => check_skoda_i(&ideal(b)?, parse_count(m)?),
        CheckCommand::SkodaII { c, d, a1, a2 } => {
            check_skoda_ii(&ideal(a1)?, &ideal(a2)?, parse_count(c)?, &parse_rational(d)?)
        }
        CheckCommand::BrianconSkoda { m, b } => check_briancon_skoda(&ideal(b)?, parse_count(m)?),
        CheckCommand::Subadditivity { c, d, m, a, b } => check_subadditivity(
            &ideal(a)?,
            &ideal(b)?,
            &parse_rational(c)?,
            &parse_rational(d)?,
            m.as_deref().map(parse_count).transpose()?,
        ),
        CheckCommand::Restriction { keep, c, b } => {
            let keep = keep
                .split(',')
                .map(|i| parse_count(i.trim()).map(|i| i as usize))
                .collect::<Result<Vec<_>>>()?;
            check_restriction(&ideal(b)?, &keep, &parse_rational(c)?)
        }
        CheckCommand::JumpLemma { m, a, b } => check_jump_lemma(&ideal(a)?, &ideal(b)?, parse_count(m)?),
        CheckCommand::UniformArtinRees { m, f, b } => {
            let b = ideal(b)?;
            let f = parse_monomial(f, Some(b.ambient_dim()))?;
            check_uniform_artin_rees(&f, &b, parse_count(m)?)
        }
        CheckCommand::Periodicity { window, a } => check_periodicity(&ideal(a)?, &parse_rational(window)?),
        CheckCommand::GrowthChain { system, l, m } => growth_chain_check(
            &parse_system(&system.system, n)?,
            parse_count(l)?,
            parse_count(m)?,
            system.pmax,
        ),
        CheckCommand::SymbolicPower { m, q } => {
            let m = u32::try_from(parse_count(m)?).map_err(|_| Error::InvalidInput("m too large".into()))?;
            symbolic_power_theorem_check(&ideal(q)?, m)
        }
    }
}

/// A single monomial, as `x^2*y`, `[2,1]`, or either wrapped as an ideal.
fn parse_monomial(text: &str, n: Option<usize>) -> Result<ExponentVector> {
    let t = text.trim();
    let wrapped = match t.chars().next() {
        Some('(') | Some('{') => t.to_string(),
        Some('[') => format!("{{{t}}}"),
        _ => format!("({t})"),
    };
    let ideal = parse_ideal(&wrapped, n)?;
    match ideal.generators() {
        [g] => Ok(g.clone()),
        _ => Err(Error::InvalidInput(format!("{text:?} is not a single monomial"))),
    }
}

fn parse_system(text: &str, n: Option<usize>) -> Result<GradedSystem> {
    let (kind, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("system {text:?} is not <kind>:<data>")))?;
    match kind {
        "powers" => GradedSystem::powers(parse_ideal(rest, n)?),
        "symbolic" => GradedSystem::symbolic(parse_ideal(rest, n)?),
        "weight" => {
            let weights = rest
                .split(',')
                .map(|w| parse_rational(w.trim()))
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = n {
                if weights.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: weights.len(),
                    });
                }
            }
            GradedSystem::weighted(weights)
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown system kind {kind:?}; expected powers, symbolic or weight"
        ))),
    }
}

/// `3*x + 2*y >= 6`.
fn format_facet(f: &Facet, names: &[String]) -> String {
    let terms: Vec<String> = f
        .normal
        .iter()
        .zip(names)
        .filter(|(&a, _)| a != 0)
        .map(|(&a, name)| if a == 1 { name.clone() } else { format!("{a}*{name}") })
        .collect();
    format!("{} >= {}", terms.join(" + "), f.offset)
}

fn ideal_output(ideal: &MonomialIdeal, json: Value) -> Output {
    Output::ok(format!("{ideal}\n"), json)
}

fn format_side(side: &Side) -> String {
    match side {
        Side::Ideal(i) => i.to_string(),
        Side::Spectrum(values) => {
            let v: Vec<String> = values.iter().map(format_rational).collect();
            format!("{{{}}}", v.join(", "))
        }
    }
}

fn format_witness(w: &Witness, names: &[String]) -> String {
    match w {
        Witness::Monomial(m) => print_monomial(m, names),
        Witness::Value(x) => format_rational(x),
    }
}

fn verdict_text(v: &Verdict) -> String {
    let relation = match v.relation {
        Relation::Subset => "⊆",
        Relation::Equal => "=",
    };
    let mut text = format!("{}: {}\n", v.name, if v.holds { "holds" } else { "FAILS" });
    text += &format!("  relation: {}\n", v.stage);
    text += &format!("  lhs {relation} rhs\n  lhs: {}\n  rhs: {}\n", format_side(&v.lhs), format_side(&v.rhs));
    for (k, value) in &v.parameters {
        text += &format!("  {k} = {value}\n");
    }
    for (k, value) in &v.observations {
        text += &format!("  [{k}] {value}\n");
    }
    if let Some(w) = &v.counterexample {
        let n = v.lhs.ideal().map(|i| i.ambient_dim()).unwrap_or(0);
        text += &format!("  counterexample: {}\n", format_witness(w, &default_names(n)));
    }
    text
}

fn verdict_output(v: Verdict) -> Output {
    Output {
        text: verdict_text(&v),
        json: json!(v),
        status: if v.holds { 0 } else { EXIT_VERDICT_FAILED },
    }
}

fn suite_output(report: &Report) -> Output {
    let c = &report.config;
    let dims: Vec<String> = c.dims.iter().map(usize::to_string).collect();
    let mut text = format!(
        "seed {}, {} cases per check, n in {{{}}}, <= {} generators, exponents <= {}\n",
        c.seed,
        c.cases,
        dims.join(","),
        c.max_gens,
        c.max_exp
    );
    for s in &report.summaries {
        text += &format!(
            "{:<20} held {:>4}  failed {:>4}  errors {:>4}  skipped {:>4}\n",
            s.check.name(),
            s.held,
            s.failed,
            s.errors,
            s.skipped
        );
    }
    if report.summaries.iter().any(|s| s.check == Check::Restriction) {
        text += &format!("restriction strict in {} cases\n", report.restriction_strict_count);
    }
    for f in &report.failures {
        text += &format!("\n{} case {}:\n", f.check, f.case);
        if let Some(v) = &f.verdict {
            text += &verdict_text(v);
        }
        if let Some(e) = &f.error {
            text += &format!("  error: {e}\n");
        }
    }
    text += if report.all_hold { "all verdicts hold\n" } else { "SOME VERDICTS FAILED\n" };
    Output {
        text,
        json: json!(report),
        status: if report.all_hold { 0 } else { EXIT_VERDICT_FAILED },
    }
}
