//! `toc`: construct, verify and inspect tilings of `H_q(n,w)`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use toc_core::acceptance;
use toc_core::algebra::{build_oa, row_blocks};
use toc_core::bounds::{clique_oracle, exact_value, expected_tile_count};
use toc_core::catalog;
use toc_core::cert::{paper_style, Certificate, Manifest};
use toc_core::clique::DEFAULT_ORACLE_CAP;
use toc_core::colorings::baranyai;
use toc_core::construct::{construct, Method};
use toc_core::designs::{
    build_2resolvable_sqs16, build_lkts9, build_lsts, build_olkts9, build_opt, build_sts,
    DEFAULT_SEARCH_BUDGET,
};
use toc_core::verify::{verify_tiling, ExpectedSize};
use toc_core::{Error, Params};

/// Stdout writes that end the process quietly when the reader goes away.
macro_rules! out {
    ($($arg:tt)*) => {
        emit(format_args!($($arg)*))
    };
}

macro_rules! outln {
    ($($arg:tt)*) => {
        emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

fn emit(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("toc: {e}");
        std::process::exit(1);
    }
}

const EXIT_VERIFY: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "toc",
    version,
    about = "Tilings of H_q(n,w) by optimal constant-weight codes"
)]
struct Cli {
    /// Worker threads for verification (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    w: usize,
}

impl ParamArgs {
    fn params(self) -> Result<Params, Error> {
        Params::new(self.q, self.n, self.d, self.w)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a tiling; prints or writes its certificate.
    Construct {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the tiles as `pos.sym` lines instead of JSON.
        #[arg(long)]
        paper_style: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Verify a certificate file.
    Verify {
        cert: PathBuf,
        /// Take the optimal tile size from the clique oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        paper_style: bool,
    },
    /// Upper bound and exact value of A_q(n,d,w).
    Bound {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// An orthogonal array OA(t,k,g) as CSV.
    Oa {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        verify: bool,
        /// Print the row blocks by the last S columns instead.
        #[arg(long)]
        blocks: Option<usize>,
    },
    /// Edge-colorings of complete hypergraphs.
    Coloring {
        #[command(subcommand)]
        kind: ColoringCommand,
    },
    /// Steiner systems and large sets.
    Design {
        kind: DesignName,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Shipped catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Run the acceptance matrix.
    Acceptance {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ColoringCommand {
    /// Almost-regular coloring of λK_n^w by flow induction.
    Baranyai {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        #[arg(long)]
        ceil: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum DesignName {
    Sts,
    Lsts,
    Lkts,
    Olkts,
    Opt,
    Sqs16,
}

/// Failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Verification(_) | Error::Invariant(_) | Error::Catalog(_) => EXIT_VERIFY,
            Error::Parameter(_) | Error::Unsupported(_) | Error::Nonexistent(_) => EXIT_UNSUPPORTED,
            Error::Indeterminate(_) | Error::TooLarge { .. } => EXIT_INDETERMINATE,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json(v: &serde_json::Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn need_n(kind: &str, n: Option<usize>) -> Result<usize, Failure> {
    n.ok_or_else(|| Failure(EXIT_USAGE, format!("design {kind} needs --n")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct {
            p,
            method,
            out,
            paper_style: pretty,
            seed,
            budget,
        } => {
            let params = p.params()?;
            let m: Method = method.parse()?;
            let c = construct(&params, m)?;
            let mut manifest = Manifest::new(
                format!(
                    "construct --q {} --n {} --d {} --w {} --method {method}",
                    p.q, p.n, p.d, p.w
                ),
                Some(params),
                seed,
                budget,
            );
            manifest.output = out.as_ref().map(|o| o.display().to_string());
            let cert = Certificate::from_construction(&c, manifest);
            let text = if pretty {
                paper_style(&c.tiling)
            } else {
                cert.to_json_string() + "\n"
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Failure(EXIT_VERIFY, format!("{}: {e}", path.display())))?;
                    eprintln!(
                        "{}: {} tiles of {:?} via {:?}, verified",
                        params,
                        c.tiling.tile_count(),
                        c.tiling.tile_sizes(),
                        c.route.theorem
                    );
                }
                None => out!("{text}"),
            }
            Ok(())
        }
        Command::Verify {
            cert,
            oracle,
            paper_style: pretty,
        } => {
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", cert.display())))?;
            let tiling = Certificate::from_json_str(&text)?.to_tiling()?;
            if pretty {
                out!("{}", paper_style(&tiling));
            }
            let source = if oracle {
                ExpectedSize::Oracle
            } else {
                ExpectedSize::Formula
            };
            let v = verify_tiling(&tiling, source);
            print_json(&serde_json::to_value(&v).expect("verdict json"));
            if v.ok {
                Ok(())
            } else {
                Err(Failure(
                    EXIT_VERIFY,
                    format!("verification failed: {}", v.summary()),
                ))
            }
        }
        Command::Bound { p, oracle } => {
            let params = p.params()?;
            let b = exact_value(&params);
            let mut v = json!({
                "params": params,
                "upper": b.upper,
                "exact": b.exact,
                "source": b.source,
                "tile_count": expected_tile_count(&params),
            });
            if oracle {
                v["oracle"] = json!(clique_oracle(&params, DEFAULT_ORACLE_CAP)?);
            }
            print_json(&v);
            Ok(())
        }
        Command::Oa {
            t,
            k,
            g,
            verify,
            blocks,
        } => {
            let oa = build_oa(t, k, g)?;
            if verify {
                oa.verify_strength()?;
                eprintln!("OA({t},{k},{g}) has strength {t}");
            }
            match blocks {
                Some(s) => {
                    for b in row_blocks(&oa, s)? {
                        let key: Vec<String> = b.key.iter().map(u16::to_string).collect();
                        let rows: Vec<String> =
                            b.rows.iter().map(|r| (r + 1).to_string()).collect();
                        outln!("{}: rows {}", key.join(","), rows.join(" "));
                    }
                }
                None => out!("{}", oa.to_csv()),
            }
            Ok(())
        }
        Command::Coloring {
            kind: ColoringCommand::Baranyai { n, w, lambda, ceil },
        } => {
            print_json(&baranyai(n, w, lambda, ceil)?.to_json());
            Ok(())
        }
        Command::Design { kind, n } => {
            let v = match kind {
                DesignName::Sts => build_sts(need_n("sts", n)?)?.to_json(None),
                DesignName::Lsts => build_lsts(need_n("lsts", n)?)?.to_json(),
                DesignName::Lkts => build_lkts9()?.to_json(),
                DesignName::Olkts => build_olkts9()?.to_json(),
                DesignName::Opt => build_opt(need_n("opt", n)?)?.to_json(),
                DesignName::Sqs16 => {
                    let r = build_2resolvable_sqs16()?;
                    r.design.to_json(Some(&r))
                }
            };
            print_json(&v);
            Ok(())
        }
        Command::Catalog {
            action: CatalogCommand::List,
        } => {
            for e in catalog::list()? {
                outln!("{:<22} {:<10} {}", e.name, e.kind, e.description);
            }
            Ok(())
        }
        Command::Acceptance { only, json } => {
            let ids: Vec<u32> = if only.is_empty() {
                acceptance::CRITERIA.iter().map(|c| c.0).collect()
            } else {
                only
            };
            let mut results = Vec::new();
            for id in ids {
                let r = acceptance::run_criterion(id)?;
                if !json {
                    outln!("{}", r.line());
                }
                results.push(r);
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if json {
                print_json(&serde_json::to_value(&results).expect("results json"));
            } else {
                outln!(
                    "{} of {} criteria passed",
                    results.len() - failed,
                    results.len()
                );
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure(
                    EXIT_VERIFY,
                    format!("{failed} acceptance criteria failed"),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("toc: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("toc: {msg}");
            ExitCode::from(code)
        }
    }
}
