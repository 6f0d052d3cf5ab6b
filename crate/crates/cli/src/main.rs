mod args;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use recouple::exact::SurdValue;
use recouple::labels::{admissible_up_to, symmetry_orbit, SixJLabels};
use recouple::sixj::{
    c_alpha_auto_with, c_alpha_with, dim, sixj_with, threej_zero, EvalOptions, Method, MethodChoice, SixJCache,
};
use recouple::spn::{admissible_sp_labels, dim_sp, u_sp, SpLabels, SpMethod};
use recouple::Error;

use args::{reorder, Format, IntRange};
use output::Record;
use verify::{verify, Suite};

const CACHE_ENV: &str = "RECOUPLE_CACHE_SIZE";
const DEFAULT_CACHE: usize = 4096;

/// Exact 6j-symbols of SO(n) for symmetric irreps and recoupling
/// coefficients of Sp(2n) for antisymmetric irreps.
///
/// Labels follow the arrangement {a b e; d c f} and are passed after `--`
/// in the order `a b e d c f`.
#[derive(Parser, Debug)]
#[command(name = "recouple", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct SixJArgs {
    #[arg(long)]
    n: i64,
    /// auto, A, B, C, T3, StretchedE or NearStretchedE.
    #[arg(long, default_value = "auto")]
    method: String,
    /// exact, decimal:K or json.
    #[arg(long, default_value = "exact")]
    format: Format,
    /// Evaluate at n = 3, where the formulas are not guaranteed.
    #[arg(long)]
    allow_n3: bool,
    #[arg(last = true, num_args = 6, required = true, allow_hyphen_values = true, value_names = ["A", "B", "E", "D", "C", "F"])]
    labels: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Sixj,
    Calpha,
    SpU,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// The SO(n) 6j-symbol.
    Sixj(SixJArgs),
    /// The rational c-function behind the 6j-symbol.
    Calpha(SixJArgs),
    /// The 3j-symbol with zero magnetic labels.
    Threej {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "exact")]
        format: Format,
        #[arg(last = true, num_args = 3, required = true, allow_hyphen_values = true, value_names = ["L1", "L2", "L3"])]
        labels: Vec<i64>,
    },
    /// Dimension of the symmetric SO(n) irrep `l`.
    Dim {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        l: i64,
        #[arg(long, default_value = "exact")]
        format: Format,
    },
    /// Sp(2n) recoupling coefficient for antisymmetric irreps.
    SpU {
        #[arg(long)]
        n: i64,
        /// a, b or c.
        #[arg(long, default_value = "a")]
        method: String,
        #[arg(long, default_value = "exact")]
        format: Format,
        #[arg(last = true, num_args = 6, required = true, allow_hyphen_values = true, value_names = ["A", "B", "E", "D", "C", "F"])]
        labels: Vec<i64>,
    },
    /// Dimension of the antisymmetric Sp(2n) irrep with a column of height `v`.
    SpDim {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        v: i64,
        #[arg(long, default_value = "exact")]
        format: Format,
    },
    /// Runs an invariant suite over a range of labels.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// N, A..B or A,B,C.
        #[arg(long)]
        n: IntRange,
        #[arg(long, default_value_t = 4)]
        max_label: i64,
        #[arg(long, default_value = "exact")]
        format: Format,
    },
    /// Lists the symmetry orbit with the 6j-symbol of each member.
    Orbit {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "exact")]
        format: Format,
        #[arg(last = true, num_args = 6, required = true, allow_hyphen_values = true, value_names = ["A", "B", "E", "D", "C", "F"])]
        labels: Vec<i64>,
    },
    /// Evaluates every admissible label set in range, in lexicographic order.
    Sweep {
        #[arg(long, value_enum, default_value = "sixj")]
        kind: SweepKind,
        /// N, A..B or A,B,C.
        #[arg(long)]
        n: IntRange,
        /// Largest label; for sp-u the default is the full table.
        #[arg(long)]
        max_label: Option<i64>,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Parse(_) | Error::Parity(_) => Failure::Input(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Out = Result<Vec<String>, Failure>;

fn labels6(n: i64, l: &[i64]) -> SixJLabels {
    SixJLabels::new(n, [l[0], l[1], l[2], l[3], l[4], l[5]])
}

fn method_choice(s: &str) -> Result<MethodChoice, Failure> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(MethodChoice::Auto);
    }
    Ok(MethodChoice::Forced(s.parse::<Method>()?))
}

fn cache() -> Result<SixJCache, Failure> {
    let size = match std::env::var(CACHE_ENV) {
        Ok(v) => v.parse().map_err(|_| Failure::Input(format!("{CACHE_ENV}={v:?} is not a size")))?,
        Err(_) => DEFAULT_CACHE,
    };
    Ok(SixJCache::new(size))
}

fn sixj_record(x: &SixJLabels, choice: MethodChoice, opts: &EvalOptions) -> Result<Record, Failure> {
    let v = sixj_with(x, choice, opts)?;
    Ok(Record {
        kind: "sixj",
        n: x.n,
        labels: x.as_array().to_vec(),
        method_used: Some(v.method.to_string()),
        predicted_terms: Some(v.predicted_terms),
        value: v.value,
    })
}

fn cached_record(cache: &SixJCache, kind: &'static str, x: &SixJLabels) -> Result<Record, Failure> {
    let v = cache.sixj(x)?;
    Ok(Record {
        kind,
        n: x.n,
        labels: x.as_array().to_vec(),
        method_used: Some(v.method.to_string()),
        predicted_terms: Some(v.predicted_terms),
        value: v.value,
    })
}

fn calpha_record(x: &SixJLabels, choice: MethodChoice, opts: &EvalOptions) -> Result<Record, Failure> {
    let (c, predicted) = match choice {
        MethodChoice::Auto => {
            let (c, sel) = c_alpha_auto_with(x, opts)?;
            (c, Some(sel.predicted_terms))
        }
        MethodChoice::Forced(m) => (c_alpha_with(x, m, opts)?, None),
    };
    Ok(Record {
        kind: "calpha",
        n: x.n,
        labels: x.as_array().to_vec(),
        method_used: Some(c.method.to_string()),
        predicted_terms: predicted,
        value: SurdValue::rational(c.value),
    })
}

fn sp_record(x: &SpLabels, method: SpMethod) -> Result<Record, Failure> {
    let u = u_sp(x, method)?;
    Ok(Record {
        kind: "sp_u",
        n: x.n,
        labels: x.as_array().to_vec(),
        method_used: Some(method.name().to_string()),
        predicted_terms: None,
        value: u.value,
    })
}

fn scalar(kind: &'static str, n: i64, labels: Vec<i64>, value: SurdValue) -> Record {
    Record { kind, n, labels, method_used: None, predicted_terms: None, value }
}

fn sweep(kind: SweepKind, ns: &[i64], max: Option<i64>, format: Format) -> Out {
    let records: Vec<Result<Record, Failure>> = match kind {
        SweepKind::SpU => {
            let labels: Vec<SpLabels> = ns
                .iter()
                .filter(|&&n| n >= 1)
                .flat_map(|&n| admissible_sp_labels(n))
                .filter(|x| max.is_none_or(|m| x.as_array().iter().all(|&l| l <= m)))
                .collect();
            labels.par_iter().map(|x| sp_record(x, SpMethod::A)).collect()
        }
        SweepKind::Sixj | SweepKind::Calpha => {
            let max = max.unwrap_or(4);
            let labels: Vec<SixJLabels> = ns.iter().flat_map(|&n| admissible_up_to(n, max)).collect();
            let opts = EvalOptions::default();
            if kind == SweepKind::Sixj {
                let cache = cache()?;
                labels.par_iter().map(|x| cached_record(&cache, "sixj", x)).collect()
            } else {
                labels.par_iter().map(|x| calpha_record(x, MethodChoice::Auto, &opts)).collect()
            }
        }
    };
    records.into_iter().map(|r| r.map(|r| r.render_row(format))).collect()
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Sixj(a) | Cmd::Calpha(a) if a.n == 3 && !a.allow_n3 => {
            Err(Failure::Input("n = 3 needs --allow-n3".into()))
        }
        Cmd::Sixj(a) => {
            let opts = EvalOptions { allow_n3: a.allow_n3 };
            let r = sixj_record(&labels6(a.n, &a.labels), method_choice(&a.method)?, &opts)?;
            Ok(vec![r.render(a.format)])
        }
        Cmd::Calpha(a) => {
            let opts = EvalOptions { allow_n3: a.allow_n3 };
            let r = calpha_record(&labels6(a.n, &a.labels), method_choice(&a.method)?, &opts)?;
            Ok(vec![r.render(a.format)])
        }
        Cmd::Threej { n, format, labels } => {
            if labels.iter().any(|&l| l < 0) {
                return Err(Failure::Input("labels must be nonnegative".into()));
            }
            let v = threej_zero(n, labels[0], labels[1], labels[2])?;
            Ok(vec![scalar("threej", n, labels, v).render(format)])
        }
        Cmd::Dim { n, l, format } => {
            if n < 3 || l < 0 {
                return Err(Failure::Input(format!("dim needs n >= 3 and l >= 0, got n={n}, l={l}")));
            }
            Ok(vec![scalar("dim", n, vec![l], SurdValue::rational(dim(n, l))).render(format)])
        }
        Cmd::SpU { n, method, format, labels } => {
            let m = method.parse::<SpMethod>()?;
            Ok(vec![sp_record(&SpLabels::new(n, [labels[0], labels[1], labels[2], labels[3], labels[4], labels[5]]), m)?
                .render(format)])
        }
        Cmd::SpDim { n, v, format } => {
            Ok(vec![scalar("sp_dim", n, vec![v], SurdValue::rational(dim_sp(n, v)?)).render(format)])
        }
        Cmd::Verify { suite, n, max_label, format } => {
            let s = verify(suite, &n.0, max_label);
            println!("{}", s.render(format));
            if s.failures.is_empty() {
                Ok(Vec::new())
            } else {
                Err(Failure::Internal(format!("{} invariant violations", s.failures.len())))
            }
        }
        Cmd::Orbit { n, format, labels } => {
            let x = labels6(n, &labels);
            if n < 4 {
                return Err(Failure::Input(format!("SO(n) evaluators need n >= 4, got {n}")));
            }
            x.check_nonnegative()?;
            let cache = cache()?;
            symmetry_orbit(&x)?
                .iter()
                .map(|y| cached_record(&cache, "orbit", y).map(|r| r.render_row(format)))
                .collect()
        }
        Cmd::Sweep { kind, n, max_label, format, jobs } => match jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::Internal(e.to_string()))?
                .install(|| sweep(kind, &n.0, max_label, format)),
            None => sweep(kind, &n.0, max_label, format),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(reorder(std::env::args().collect())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(u8::try_from(code).unwrap_or(2));
        }
    };
    match run(cli.cmd) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
