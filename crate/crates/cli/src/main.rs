use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrpoly::double_sym::{classical_product, double_schur_n, Oracle};
use lrpoly::lr::{
    c_alternating, c_corollary, c_theorem, default_kostka_cap, kostka, kostka_tableaux, pieri_tableau,
    KostkaMethod, LrMethod,
};
use lrpoly::stable_ring::pieri_stable;
use lrpoly::verify::{self, Report, Suite};
use lrpoly::{APoly, Error, IntegerVector, Partition};

const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "lrpoly", version, about = "Littlewood-Richardson polynomials for double Schur functions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum LrChoice {
    Theorem,
    Corollary,
    Alternating,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PieriChoice {
    Stable,
    Tableau,
}

#[derive(Clone, Copy, ValueEnum)]
enum KostkaChoice {
    Recursion,
    Tableaux,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Pieri,
    Lr,
    Involutions,
    Ring,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficient of s_nu in s_lambda * s_mu.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, value_enum, default_value_t = LrChoice::Theorem)]
        method: LrChoice,
    },
    /// h_{p,e} * s_mu in the double Schur basis.
    Pieri {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value_t = PieriChoice::Stable)]
        method: PieriChoice,
    },
    /// s_lambda(x_1..x_n || a) as a polynomial.
    Schur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Coefficient of s_nu in h_kappa * s_mu; kappa may have zero or negative parts.
    Kostka {
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, value_enum, default_value_t = KostkaChoice::Recursion)]
        method: KostkaChoice,
        /// Plain-entry cap for the tableau method.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Classical Littlewood-Richardson coefficients (a = 0).
    Classical {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Print one coefficient instead of the whole product.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Run verification grids bounded by --max-weight.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteChoice::All)]
        suite: SuiteChoice,
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
        /// Seed for the randomized ring-axiom checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// psi on every bad tableau of shape lambda^omega: per-shape weight sums and any psi(psi(T)) != T.
    VerifyInvolutions {
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
        /// Bound on |mu|; defaults to --max-weight.
        #[arg(long)]
        max_mu: Option<usize>,
        /// Number of rows of lambda.
        #[arg(long, default_value_t = 2)]
        rows: usize,
        /// Extra headroom on the plain-entry cap.
        #[arg(long, default_value_t = 0)]
        extra_cap: u32,
    },
}

struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure(EXIT_USAGE, format!("not an integer: {x:?}"))))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    let v = parse_ints(s)?;
    if v.iter().any(|&x| x <= 0) {
        return Err(Failure(EXIT_USAGE, format!("partition parts must be positive: {s:?}")));
    }
    Ok(Partition::new(v.into_iter().map(|x| x as usize).collect())?)
}

fn apoly_out(p: &APoly, format: Format) -> String {
    match format {
        Format::Pretty => p.to_string(),
        Format::Json => serde_json::to_string(p).unwrap(),
    }
}

fn lr_method(m: LrChoice) -> Option<LrMethod> {
    match m {
        LrChoice::Theorem => Some(LrMethod::Theorem),
        LrChoice::Corollary => Some(LrMethod::Corollary),
        LrChoice::Alternating => Some(LrMethod::Alternating),
        LrChoice::Oracle => Some(LrMethod::Oracle),
        LrChoice::All => None,
    }
}

fn lr_value(m: LrMethod, l: &Partition, mu: &Partition, nu: &Partition) -> Result<APoly, Failure> {
    Ok(match m {
        LrMethod::Theorem => c_theorem(l, mu, nu),
        LrMethod::Corollary => c_corollary(l, mu, nu),
        LrMethod::Alternating => c_alternating(l, mu, nu),
        LrMethod::Oracle => Oracle::new().c_oracle(l, mu, nu)?,
    })
}

fn reports_out(reports: &[Report], format: Format) -> (String, bool) {
    let ok = reports.iter().all(Report::passed);
    let text = match format {
        Format::Pretty => {
            let mut lines: Vec<String> = reports.iter().map(Report::to_string).collect();
            lines.push(if ok { "PASS".into() } else { "FAIL".into() });
            lines.join("\n")
        }
        Format::Json => serde_json::to_string(&json!({ "passed": ok, "reports": reports })).unwrap(),
    };
    (text, ok)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let f = cli.format;
    match cli.cmd {
        Cmd::Lr { lambda, mu, nu, method } => {
            let (l, m, n) = (parse_partition(&lambda)?, parse_partition(&mu)?, parse_partition(&nu)?);
            if let Some(one) = lr_method(method) {
                return Ok(apoly_out(&lr_value(one, &l, &m, &n)?, f));
            }
            let mut values = Vec::new();
            for one in LrMethod::ALL {
                values.push((one.name(), lr_value(one, &l, &m, &n)?));
            }
            let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
            let text = match f {
                Format::Pretty => values.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    for (k, v) in &values {
                        obj.insert(k.to_string(), serde_json::to_value(v).unwrap());
                    }
                    obj.insert("agree".into(), Value::Bool(agree));
                    Value::Object(obj).to_string()
                }
            };
            if agree {
                Ok(text)
            } else {
                Err(Failure(EXIT_MISMATCH, format!("{text}\nmethods disagree")))
            }
        }
        Cmd::Pieri { p, e, mu, method } => {
            let m = parse_partition(&mu)?;
            let s = match method {
                PieriChoice::Stable => pieri_stable(p, e as i64, &m),
                PieriChoice::Tableau => pieri_tableau(p, e, &m)?,
            };
            Ok(match f {
                Format::Pretty => s.to_string(),
                Format::Json => serde_json::to_string(&s).unwrap(),
            })
        }
        Cmd::Schur { lambda, n } => {
            let l = parse_partition(&lambda)?;
            let x = double_schur_n(&l, n);
            Ok(match f {
                Format::Pretty => x.to_string(),
                Format::Json => serde_json::to_string(&x).unwrap(),
            })
        }
        Cmd::Kostka { kappa, mu, nu, method, cap } => {
            let k = IntegerVector::new(parse_ints(&kappa)?);
            let (m, n) = (parse_partition(&mu)?, parse_partition(&nu)?);
            let v = match (method, cap) {
                (KostkaChoice::Recursion, _) => kostka(&k, &m, &n, KostkaMethod::Recursion),
                (KostkaChoice::Tableaux, None) => kostka_tableaux(&k, &m, &n, default_kostka_cap(&k, &m, &n)),
                (KostkaChoice::Tableaux, Some(c)) => kostka_tableaux(&k, &m, &n, c),
            };
            Ok(apoly_out(&v, f))
        }
        Cmd::Classical { lambda, mu, nu } => {
            let (l, m) = (parse_partition(&lambda)?, parse_partition(&mu)?);
            let table = classical_product(&l, &m);
            if let Some(nu) = nu {
                let n = parse_partition(&nu)?;
                return Ok(table.get(&n).copied().unwrap_or(0).to_string());
            }
            Ok(match f {
                Format::Pretty => table.iter().map(|(n, c)| format!("{n}: {c}")).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    let rows: Vec<Value> = table.iter().map(|(n, c)| json!({ "nu": n, "coeff": c })).collect();
                    Value::Array(rows).to_string()
                }
            })
        }
        Cmd::Verify { suite, max_weight, seed } => {
            let s = match suite {
                SuiteChoice::Pieri => Suite::Pieri,
                SuiteChoice::Lr => Suite::Lr,
                SuiteChoice::Involutions => Suite::Involutions,
                SuiteChoice::Ring => Suite::Ring,
                SuiteChoice::All => Suite::All,
            };
            let (text, ok) = reports_out(&verify::run_suite(s, max_weight, seed), f);
            if ok {
                Ok(text)
            } else {
                Err(Failure(EXIT_MISMATCH, text))
            }
        }
        Cmd::VerifyInvolutions { max_weight, max_mu, rows, extra_cap } => {
            if rows == 0 {
                return Err(Failure(EXIT_USAGE, "--rows must be positive".into()));
            }
            let g = verify::psi_grid(max_weight, max_mu.unwrap_or(max_weight), rows, extra_cap);
            let reports = [g.involution, g.aggregate];
            let (summary, ok) = reports_out(&reports, f);
            let text = match f {
                Format::Pretty => {
                    let mut out = g.sums.join("\n");
                    if !out.is_empty() {
                        out.push('\n');
                    }
                    out + &summary
                }
                Format::Json => {
                    let mut v: Value = serde_json::from_str(&summary).unwrap();
                    v["sums"] = json!(g.sums);
                    v.to_string()
                }
            };
            if ok {
                Ok(text)
            } else {
                Err(Failure(EXIT_MISMATCH, text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("LRPOLY_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
            }
            _ => {
                eprintln!("LRPOLY_THREADS must be a positive integer");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    match run(cli) {
        Ok(text) => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            if code == EXIT_MISMATCH {
                let _ = writeln!(std::io::stdout(), "{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
