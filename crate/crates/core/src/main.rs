use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use starforge::algebra::rational::parse_rational;
use starforge::algebra::{Polynomial, Rational, Series};
use starforge::double::{double_structure_check, fd_axiom_check, r_matrix_check, FdHopf, PairedHopf};
use starforge::frt::{frt_relations, ybe_check};
use starforge::hopf::{hopf_axiom_check, twist_checks, Mode, Twist, UEnv};
use starforge::parse::parse_poly;
use starforge::report::Report;
use starforge::smash::{GroupModel, LambdaStar};
use starforge::starprod::{moyal_bracket, Moyal, StarProduct, SymplecticStructure, NU};
use starforge::verify::{self, Options, Suite};
use starforge::{shipped, Error};

#[derive(Parser)]
#[command(name = "starforge", version, about = "Exact star products, twists, Drinfeld doubles and FRT relations")]
struct Cli {
    /// machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Star products of two expressions
    #[command(subcommand)]
    Star(StarCmd),
    /// Enveloping algebras and twists
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Drinfeld doubles of group algebras
    #[command(subcommand)]
    Double(DoubleCmd),
    /// FRT quadratic algebras
    #[command(subcommand)]
    Frt(FrtCmd),
    /// Yang-Baxter check of an R-matrix
    Ybe(RArgs),
    /// Run an invariant suite: moyal, hopf, smash, double, frt or all
    Verify {
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// flip one entry of the Poisson tensor (moyal checks only)
        #[arg(long)]
        inject: bool,
    },
}

#[derive(Args)]
struct Pair {
    u: String,
    v: String,
    #[arg(long, default_value_t = 4)]
    order: usize,
}

#[derive(Subcommand)]
enum StarCmd {
    /// Moyal product on R^{2l} with coordinates x1..x(2l)
    Moyal {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[command(flatten)]
        pair: Pair,
    },
    /// Moyal bracket
    Bracket {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[command(flatten)]
        pair: Pair,
    },
    /// lambda-ordered product on T*G
    Lambda {
        #[arg(long, default_value = "heis3")]
        group: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1/2")]
        lambda: String,
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Hopf axioms of U_t g on PBW monomials
    Check {
        #[arg(long)]
        alg: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Cocycle, counit, QYBE and coassociativity of a twist
    Twist {
        #[arg(long)]
        alg: String,
        #[arg(long)]
        twist: String,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum DoubleCmd {
    /// Build D(kG) and check it
    Build {
        #[arg(long)]
        group: String,
        /// all, axioms, structure, rmatrix or none
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Print the canonical R-matrix and check it
    Rmatrix {
        #[arg(long)]
        group: String,
    },
}

#[derive(Args)]
struct RArgs {
    #[arg(long)]
    rmatrix: String,
}

#[derive(Subcommand)]
enum FrtCmd {
    /// Row-reduced FRT relations
    Relations(RArgs),
    /// Degree-d dimension against the commutative benchmark
    Flat {
        #[command(flatten)]
        r: RArgs,
        #[arg(long, default_value_t = 3)]
        degree: u32,
    },
}

enum Outcome {
    Pass,
    Fail,
}

fn emit(json: bool, text: String, value: serde_json::Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!("{text}");
    }
}

fn emit_report(json: bool, header: &str, r: &Report) -> Outcome {
    if json {
        println!("{}", r.to_json());
    } else {
        if !header.is_empty() {
            println!("{header}");
        }
        println!("{r}");
    }
    if r.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn series_json(s: &Series<Polynomial>) -> serde_json::Value {
    json!({
        "param": s.param(),
        "order": s.order(),
        "coefficients": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": s.to_string(),
    })
}

fn operands(star: &dyn StarProduct, pair: &Pair) -> starforge::Result<(Series<Polynomial>, Series<Polynomial>)> {
    let vars = star.vars();
    let u = parse_poly(&pair.u, vars, NU, pair.order)?.into_series(NU, pair.order);
    let v = parse_poly(&pair.v, vars, NU, pair.order)?.into_series(NU, pair.order);
    Ok((u, v))
}

fn rational(s: &str) -> starforge::Result<Rational> {
    parse_rational(s.trim()).ok_or_else(|| Error::Invalid(format!("not a rational number: `{s}`")))
}

struct BracketOf(SymplecticStructure);

impl StarProduct for BracketOf {
    fn vars(&self) -> &starforge::algebra::Vars {
        self.0.vars()
    }
    fn star(&self, u: &Polynomial, v: &Polynomial, order: usize) -> starforge::Result<Series<Polynomial>> {
        moyal_bracket(u, v, &self.0, order)
    }
}

fn run(cli: Cli) -> starforge::Result<Outcome> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Star(cmd) => {
            let (star, pair): (Box<dyn StarProduct>, Pair) = match cmd {
                StarCmd::Moyal { ell, pair } => (Box::new(Moyal(SymplecticStructure::standard(ell))), pair),
                StarCmd::Bracket { ell, pair } => (Box::new(BracketOf(SymplecticStructure::standard(ell))), pair),
                StarCmd::Lambda { group, n, lambda, pair } => {
                    let g = GroupModel::by_name(&group, n)?;
                    (Box::new(LambdaStar::new(g, rational(&lambda)?, pair.order)?), pair)
                }
            };
            let (u, v) = operands(star.as_ref(), &pair)?;
            let s = star.star_series(&u, &v)?;
            emit(json, s.to_string(), series_json(&s));
            Ok(Outcome::Pass)
        }
        Cmd::Hopf(HopfCmd::Check { alg, degree, order }) => {
            let env = UEnv::new(shipped::lie_algebra(&alg)?, Mode::Deformed, order);
            let header = format!("U_t {} at degree {degree}, order {order}", env.lie().name());
            Ok(emit_report(json, &header, &hopf_axiom_check(&env, degree)))
        }
        Cmd::Hopf(HopfCmd::Twist { alg, twist, order }) => {
            let env = UEnv::new(shipped::lie_algebra(&alg)?, Mode::Classical, order);
            let f = Twist::builtin(&env, &twist)?;
            let header = format!("F = {}", env.render(f.element()));
            Ok(emit_report(json, &header, &twist_checks(&env, &f)))
        }
        Cmd::Double(DoubleCmd::Build { group, check }) => {
            let g = shipped::finite_group(&group)?;
            let p = PairedHopf::canonical(FdHopf::group_algebra(&g))?;
            let d = p.double_hopf_unchecked();
            let mut report = Report::new();
            let (axioms, structure, rmatrix) = match check.as_str() {
                "all" => (true, true, true),
                "axioms" => (true, false, false),
                "structure" => (false, true, false),
                "rmatrix" => (false, false, true),
                "none" => (false, false, false),
                other => return Err(Error::Invalid(format!("unknown check `{other}`"))),
            };
            if axioms {
                report.extend("axioms", fd_axiom_check(&d));
            }
            if structure {
                report.extend("structure", double_structure_check(&p)?);
            }
            if rmatrix {
                report.extend("r_matrix", r_matrix_check(&p, &d));
            }
            let header = format!("{} of dimension {}: {}", d.name(), d.dim(), d.names().join(", "));
            Ok(emit_report(json, &header, &report))
        }
        Cmd::Double(DoubleCmd::Rmatrix { group }) => {
            let g = shipped::finite_group(&group)?;
            let p = PairedHopf::canonical(FdHopf::group_algebra(&g))?;
            let d = p.double_hopf_unchecked();
            let r = p.r_matrix();
            let rendered = d.render(&r);
            let report = r_matrix_check(&p, &d);
            if json {
                println!("{}", serde_json::to_string_pretty(&json!({"r": rendered, "report": report})).expect("json"));
                return Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail });
            }
            Ok(emit_report(false, &format!("R = {rendered}"), &report))
        }
        Cmd::Ybe(RArgs { rmatrix }) => {
            let r = shipped::r_matrix(&rmatrix)?;
            let (ok, detail) = match ybe_check(&r) {
                Ok(()) => (true, "R12 R13 R23 = R23 R13 R12".to_string()),
                Err(w) => (false, format!("entry ({}, {}): difference {}", w.row, w.col, w.difference)),
            };
            let mut report = Report::new();
            report.push("ybe", ok, detail);
            Ok(emit_report(json, "", &report))
        }
        Cmd::Frt(FrtCmd::Relations(RArgs { rmatrix })) => {
            let qa = frt_relations(&shipped::r_matrix(&rmatrix)?);
            let lines: Vec<String> = qa.render().lines().map(str::to_string).collect();
            let text = format!("{} relations\n{}", qa.relation_count(), lines.join("\n"));
            emit(json, text, json!({"generators": qa.generators(), "relations": lines}));
            Ok(Outcome::Pass)
        }
        Cmd::Frt(FrtCmd::Flat { r, degree }) => {
            let qa = frt_relations(&shipped::r_matrix(&r.rmatrix)?);
            let f = qa.flatness_dim(degree)?;
            let verdict = if f.is_flat() { "matches the commutative dimension" } else { "deficit: not a flat deformation" };
            let text = format!("degree {}: dim {} vs {} ({verdict})", f.degree, f.dim, f.benchmark);
            emit(json, text, json!({"degree": f.degree, "dim": f.dim, "benchmark": f.benchmark, "flat": f.is_flat()}));
            Ok(Outcome::Pass)
        }
        Cmd::Verify { suite, seed, inject } => {
            let suite: Suite = suite.parse()?;
            let report = verify::run(suite, &Options { seed, inject })?;
            Ok(emit_report(json, "", &report))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
