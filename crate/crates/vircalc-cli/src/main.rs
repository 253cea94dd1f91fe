use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vircalc::checks::{self, Suite};
use vircalc::descendent::{monomials_up_to_weight, DescendentPoly, Virasoro};
use vircalc::grasscalc::{self, FockOperator, FockParams, JackVariant};
use vircalc::quiver::{self, DgQuiver};
use vircalc::rational::{format_rational, int, parse_rational, rational_to_json};
use vircalc::symfunc::{self, format_basis_expansion, SymFunc};
use vircalc::{Error, Partition, Rational};

#[derive(Parser)]
#[command(name = "vircalc", version, about = "Exact symmetric-function, quiver and vertex-algebra computations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    P,
    M,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Schur,
    Wallcross,
}

#[derive(Clone, Copy, ValueEnum)]
enum JackArg {
    /// Jack parameter β²/2
    Half,
    /// Jack parameter 2/β²
    Inverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorArg {
    Displayed,
    Conjugate,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Schur function s_λ in the chosen basis.
    Schur {
        partition: String,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
    },
    /// Hall pairing <f, g>.
    Hall { f: String, g: String },
    /// Monic Jack polynomial P_λ at parameter α.
    Jack {
        partition: String,
        alpha: String,
        #[arg(long, value_enum, default_value = "p")]
        basis: Basis,
    },
    /// Euler form χ(d, d') of a quiver file or builtin name.
    Euler {
        quiver: String,
        d1: String,
        d2: String,
        /// Symmetrized form.
        #[arg(long)]
        sym: bool,
    },
    /// Checks [L_n, L_m] = (m-n) L_(n+m) on descendents of bounded weight.
    VirasoroBracket {
        quiver: String,
        #[arg(long, default_value_t = 3)]
        max_n: i64,
        #[arg(long, default_value_t = 4)]
        max_deg: u32,
    },
    /// Class of Gr(k, N).
    GrClass {
        k: i64,
        n: i64,
        #[arg(long, value_enum, default_value = "schur")]
        via: Via,
    },
    /// Integral of f over Gr(k, N).
    GrIntegral { k: i64, n: i64, f: String },
    /// Virasoro constraints on s_(N-k)^k.
    GrConstraints {
        k: i64,
        n: i64,
        #[arg(long, default_value_t = 6)]
        max_n: i64,
    },
    /// Integrals of all p_λ from the Virasoro recursion.
    GrRecursion {
        k: i64,
        n: i64,
        #[arg(long, default_value = "1")]
        norm: String,
    },
    /// Hecke operator H_n f.
    Hecke {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        f: String,
        /// Symmetrized operator.
        #[arg(long)]
        sym: bool,
    },
    /// Calogero-Sutherland operator.
    Cs { f: String },
    /// Checks the rectangular Jack singular vector of the Fock module.
    Singular {
        r: u32,
        s: u32,
        beta2: String,
        #[arg(long, value_enum, default_value = "half")]
        jack: JackArg,
        #[arg(long, value_enum, default_value = "displayed")]
        operator: OperatorArg,
    },
    /// Runs the identity suites.
    Selftest {
        #[arg(long, value_enum, default_value = "fast")]
        suite: SuiteArg,
    },
}

/// Output plus whether every checked identity held.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn value(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn parse_sym(s: &str) -> Result<SymFunc, Error> {
    Ok(SymFunc::parse(s)?)
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Ok(Partition::parse(s)?)
}

fn parse_q(s: &str) -> Result<Rational, Error> {
    Ok(parse_rational(s)?)
}

fn load_quiver(arg: &str) -> Result<DgQuiver, Error> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| Error::InvalidArgument(format!("{arg}: {e}")))?;
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| vircalc::error::ParseError::Json(format!("{arg}: {e}")))?;
        DgQuiver::from_json(&v)
    } else {
        Ok(quiver::builtin(arg)?)
    }
}

fn table_json(t: &BTreeMap<Partition, Rational>) -> Value {
    SymFunc::from_terms(t.clone()).to_json()
}

fn expansion(f: &SymFunc, basis: Basis) -> Outcome {
    match basis {
        Basis::P => Outcome::value(f.to_string(), f.to_json()),
        Basis::M => {
            let t = symfunc::monomial_expand(f);
            Outcome::value(format_basis_expansion(&t, "m"), table_json(&t))
        }
        Basis::Schur => {
            let t = symfunc::schur_expand(f);
            Outcome::value(format_basis_expansion(&t, "s"), table_json(&t))
        }
    }
}

fn aligned(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|(a, _)| a.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(a, b)| format!("{a:<w$}  {b}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Schur { partition, basis } => expansion(&symfunc::schur(&parse_partition(&partition)?), basis),
        Command::Hall { f, g } => {
            let v = symfunc::hall(&parse_sym(&f)?, &parse_sym(&g)?);
            Outcome::value(format_rational(&v), rational_to_json(&v))
        }
        Command::Jack { partition, alpha, basis } => {
            let a = parse_q(&alpha)?;
            if a == int(0) {
                return Err(Error::InvalidArgument("Jack parameter must be nonzero".into()));
            }
            expansion(&symfunc::jack(&parse_partition(&partition)?, &a)?, basis)
        }
        Command::Euler { quiver, d1, d2, sym } => {
            let q = load_quiver(&quiver)?;
            let (a, b) = (q.parse_dim(&d1)?, q.parse_dim(&d2)?);
            let v = if sym {
                quiver::euler_sym(&q, &a, &b)?
            } else {
                quiver::euler_form(&q, &a, &b)?
            };
            Outcome::value(v.to_string(), json!(v))
        }
        Command::VirasoroBracket { quiver, max_n, max_deg } => {
            let q = load_quiver(&quiver)?;
            if !q.is_quasi_smooth() {
                return Err(vircalc::error::QuiverError::NotQuasiSmooth.into());
            }
            let vir = Virasoro::new(&q);
            let mut cases = 0usize;
            let mut failures = Vec::new();
            for m in monomials_up_to_weight(q.num_vertices(), max_deg) {
                let f = DescendentPoly::monomial(m);
                for n in -1..=max_n {
                    for k in (n + 1)..=max_n {
                        cases += 1;
                        let lhs = &vir.l(n, &vir.l(k, &f)) - &vir.l(k, &vir.l(n, &f));
                        if lhs != vir.l(n + k, &f).scale(&int(k - n)) {
                            failures.push(format!("n={n} m={k} f={}", f.to_text(&q)));
                        }
                    }
                }
            }
            let ok = failures.is_empty();
            let mut text = format!(
                "{} [L_n, L_m] = (m-n) L_(n+m), -1 <= n < m <= {max_n}, weight <= {max_deg}: {cases} cases, {} failed",
                if ok { "PASS" } else { "FAIL" },
                failures.len()
            );
            for f in failures.iter().take(10) {
                text.push_str(&format!("\n  {f}"));
            }
            Outcome {
                text,
                json: json!({ "passed": ok, "cases": cases, "failures": failures }),
                ok,
            }
        }
        Command::GrClass { k, n, via } => {
            let x = match via {
                Via::Schur => grasscalc::gr_class_schur(k, n)?,
                Via::Wallcross => grasscalc::gr_class_wallcross(k, n)?,
            };
            Outcome::value(x.to_string(), x.to_json())
        }
        Command::GrIntegral { k, n, f } => {
            let v = grasscalc::gr_integral(k, n, &parse_sym(&f)?)?;
            Outcome::value(format_rational(&v), rational_to_json(&v))
        }
        Command::GrConstraints { k, n, max_n } => {
            let rep = grasscalc::constraint_check(k, n, max_n)?;
            let rows: Vec<(String, String)> = rep
                .residuals
                .iter()
                .map(|(i, r)| (format!("L_{i}"), if r.is_zero() { "0".to_string() } else { r.to_string() }))
                .collect();
            let json = json!({
                "k": k,
                "N": n,
                "passed": rep.passed(),
                "residuals": rep.residuals.iter().map(|(i, r)| json!({"n": i, "residual": r.to_json()})).collect::<Vec<_>>(),
            });
            Outcome {
                text: aligned(&rows),
                json,
                ok: rep.passed(),
            }
        }
        Command::GrRecursion { k, n, norm } => {
            let t = grasscalc::integrals_by_recursion(k, n, &parse_q(&norm)?)?;
            let rows: Vec<(String, String)> = t
                .iter()
                .map(|(l, v)| (SymFunc::p_lambda(l).to_string(), format_rational(v)))
                .collect();
            Outcome::value(aligned(&rows), table_json(&t))
        }
        Command::Hecke { n, f, sym } => {
            let f = parse_sym(&f)?;
            let v = if sym {
                grasscalc::hecke_sym(n, &f)
            } else {
                grasscalc::hecke(n, &f)
            };
            Outcome::value(v.to_string(), v.to_json())
        }
        Command::Cs { f } => {
            let v = grasscalc::calogero_sutherland(&parse_sym(&f)?);
            Outcome::value(v.to_string(), v.to_json())
        }
        Command::Singular { r, s, beta2, jack, operator } => {
            let params = FockParams::new(r, s, parse_q(&beta2)?)?;
            let variant = match jack {
                JackArg::Half => JackVariant::HalfBeta2,
                JackArg::Inverse => JackVariant::TwoOverBeta2,
            };
            let op = match operator {
                OperatorArg::Displayed => FockOperator::Displayed,
                OperatorArg::Conjugate => FockOperator::Conjugate,
            };
            let rep = grasscalc::singular_check_with(&params, variant, op)?;
            let mut rows = vec![
                ("vector".to_string(), rep.vector.to_string()),
                ("jack parameter".to_string(), format_rational(&rep.jack_alpha)),
            ];
            for (n, res) in &rep.residuals {
                rows.push((format!("L_{n}"), if res.is_zero() { "0".into() } else { res.to_string() }));
            }
            let json = json!({
                "r": r,
                "s": s,
                "beta2": rational_to_json(&params.beta2),
                "jack_parameter": rational_to_json(&rep.jack_alpha),
                "vector": rep.vector.to_json(),
                "passed": rep.passed(),
                "residuals": rep.residuals.iter().map(|(n, x)| json!({"n": n, "residual": x.to_json()})).collect::<Vec<_>>(),
            });
            Outcome {
                text: aligned(&rows),
                json,
                ok: rep.passed(),
            }
        }
        Command::Selftest { suite } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::Full => Suite::Full,
            };
            let criteria = checks::all_criteria(suite);
            let extra = checks::extra_invariants(suite);
            let mut lines = Vec::new();
            let mut items = Vec::new();
            for c in &criteria {
                lines.push(c.summary_line());
                for ch in c.checks.iter().filter(|ch| !ch.passed()) {
                    lines.push(format!("    {}: {}", ch.name, ch.failures.join("; ")));
                }
                for n in &c.notes {
                    lines.push(format!("    note: {n}"));
                }
                items.push(json!({
                    "id": c.id,
                    "title": c.title,
                    "passed": c.passed(),
                    "checks": c.checks.iter().map(check_json).collect::<Vec<_>>(),
                    "notes": c.notes,
                }));
            }
            for ch in &extra {
                lines.push(format!(
                    "[{}] {} ({} cases, {} failed)",
                    if ch.passed() { "PASS" } else { "FAIL" },
                    ch.name,
                    ch.cases,
                    ch.failed
                ));
            }
            let ok = criteria.iter().all(|c| c.passed()) && extra.iter().all(|c| c.passed());
            Outcome {
                text: lines.join("\n"),
                json: json!({
                    "passed": ok,
                    "criteria": items,
                    "invariants": extra.iter().map(check_json).collect::<Vec<_>>(),
                }),
                ok,
            }
        }
    })
}

fn check_json(c: &checks::Check) -> Value {
    json!({ "name": c.name, "passed": c.passed(), "cases": c.cases, "failed": c.failed, "failures": c.failures })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if !e.use_stderr() {
                // --help and --version
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let line: Vec<&str> = msg
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", line.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.json { out.json.to_string() } else { out.text };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = match &e {
                Error::Quiver(q) => format!(" [{}]", q.code()),
                _ => String::new(),
            };
            eprintln!("{e}{code}");
            ExitCode::from(2)
        }
    }
}
