use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ekrcx::ekr::{chvatal_check, is_r_ekr, is_strict_r_ekr, Budget};
use ekrcx::homology::{depth, is_cohen_macaulay, is_sequentially_cm, reduced_betti, DepthMethod};
use ekrcx::io::{parse_cplx, parse_dimacs, write_cplx};
use ekrcx::shifting::{exterior_shift, ShiftConfig};
use ekrcx::{Face, Graph, SimplicialComplex};
use ekrcx_cli::campaign::{replay, run_campaign, CampaignConfig, Claim};
use ekrcx_cli::corpus::CorpusSpec;
use ekrcx_cli::error::CliError;
use ekrcx_cli::report::{read_reports, summarize, ReportSink, Verdict};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ekrcx", version, about = "Shifting, depth and EKR checks for simplicial complexes")]
struct Cli {
    /// Prime characteristic for shifting and homology.
    #[arg(long, global = true, env = "EKRCX_PRIME", default_value_t = 2_147_483_647)]
    prime: u64,
    /// Seed for the random generic matrix.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(long = "in", value_name = "PATH")]
    input: String,
}

impl Input {
    fn read(&self) -> Result<String, CliError> {
        if self.input == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::io("<stdin>", e))?;
            Ok(s)
        } else {
            std::fs::read_to_string(&self.input).map_err(|e| CliError::io(&self.input, e))
        }
    }

    fn complex(&self) -> Result<SimplicialComplex, CliError> {
        Ok(parse_cplx(&self.read()?)?)
    }

    fn graph(&self) -> Result<Graph, CliError> {
        Ok(parse_dimacs(&self.read()?)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exterior algebraic shift of a complex.
    Shift(Input),
    /// f-vector, indexed by face cardinality.
    Fvector(Input),
    /// Link of a face.
    Link {
        #[command(flatten)]
        input: Input,
        /// Face as space- or comma-separated vertices.
        #[arg(long)]
        face: String,
    },
    /// Alexander dual.
    Dual(Input),
    /// Reduced Betti numbers over GF(p).
    Homology(Input),
    /// Depth over GF(p), as a dimension.
    Depth {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Links)]
        method: Method,
    },
    /// Cohen-Macaulay test.
    Cm {
        #[command(flatten)]
        input: Input,
        /// Test sequential Cohen-Macaulayness instead.
        #[arg(long)]
        sequential: bool,
    },
    /// Graph utilities (DIMACS input).
    #[command(subcommand)]
    Graph(GraphCommand),
    /// EKR checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run a verification campaign and append JSONL records.
    Corpus {
        /// Claim id (see `ekrcx claims`).
        claim: String,
        /// Corpus family, e.g. `all-graphs:5`, `cycles:4..8`, `random:200:7:0.5:1`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (0 = one per core).
        #[arg(long, env = "EKRCX_WORKERS", default_value_t = 0)]
        workers: usize,
        /// Keep records already in `--out` and skip them.
        #[arg(long)]
        resume: bool,
        #[arg(long, default_value_t = 2000)]
        max_faces: usize,
    },
    /// List the known claim ids.
    Claims,
    /// Pass/fail/skip counts per claim.
    Summary(Input),
    /// Re-check every failing record in a report log.
    Replay(Input),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Links,
    Shift,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Independence complex, as `.cplx`.
    Ic(Input),
    /// Chordality test.
    Chordal(Input),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Is the complex r-EKR (t-intersecting with `--t`)?
    Ekr {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 2000)]
        max_faces: usize,
    },
    /// Is every maximum intersecting r-family a star?
    Strict {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 2000)]
        max_faces: usize,
    },
    /// Is some largest intersecting family of nonempty faces a star?
    Chvatal {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2000)]
        max_faces: usize,
    },
}

fn faces_json(faces: &[Face]) -> serde_json::Value {
    json!(faces.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
}

fn print_faces(faces: &[Face]) {
    for f in faces {
        if f.is_empty() {
            println!("0");
        } else {
            println!("{f}");
        }
    }
}

fn parse_face(text: &str) -> Result<Face, CliError> {
    let vs = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?} in --face")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Face::from_vertices(vs)?)
}

struct Ctx {
    shift: ShiftConfig,
    json: bool,
}

impl Ctx {
    fn emit(&self, value: serde_json::Value, text: impl FnOnce()) {
        if self.json {
            println!("{value}");
        } else {
            text();
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let ctx = Ctx {
        shift: ShiftConfig::new(cli.prime, cli.seed)?,
        json: cli.format == Format::Json,
    };
    let field = ctx.shift.field;
    match cli.command {
        Command::Shift(input) => {
            let res = exterior_shift(&input.complex()?, &ctx.shift)?;
            ctx.emit(
                json!({ "n": res.shifted.n(), "facets": faces_json(res.shifted.facets()), "retries_used": res.retries_used }),
                || print!("{}", write_cplx(&res.shifted)),
            );
        }
        Command::Fvector(input) => {
            let f = input.complex()?.f_vector();
            ctx.emit(json!(f.as_slice()), || println!("{f}"));
        }
        Command::Link { input, face } => {
            let link = input.complex()?.link(parse_face(&face)?)?;
            ctx.emit(json!({ "n": link.n(), "facets": faces_json(link.facets()) }), || {
                print!("{}", write_cplx(&link))
            });
        }
        Command::Dual(input) => {
            let dual = input.complex()?.alexander_dual();
            ctx.emit(json!({ "n": dual.n(), "facets": faces_json(dual.facets()) }), || {
                print!("{}", write_cplx(&dual))
            });
        }
        Command::Homology(input) => {
            let b = reduced_betti(&input.complex()?, field);
            ctx.emit(json!({ "prime": b.prime, "reduced_betti": b.dims }), || {
                for (i, d) in b.dims.iter().enumerate() {
                    println!("H~{}: {d}", i as isize - 1);
                }
            });
        }
        Command::Depth { input, method } => {
            let method = match method {
                Method::Links => DepthMethod::Links,
                Method::Shift => DepthMethod::Shift,
            };
            let d = depth(&input.complex()?, method, &ctx.shift)?.depth;
            ctx.emit(json!({ "depth": d }), || println!("{d}"));
        }
        Command::Cm { input, sequential } => {
            let delta = input.complex()?;
            let holds = if sequential {
                is_sequentially_cm(&delta, field)
            } else {
                is_cohen_macaulay(&delta, field).holds
            };
            ctx.emit(json!({ "holds": holds }), || println!("{holds}"));
        }
        Command::Graph(GraphCommand::Ic(input)) => {
            let ic = input.graph()?.independence_complex();
            ctx.emit(json!({ "n": ic.n(), "facets": faces_json(ic.facets()) }), || {
                print!("{}", write_cplx(&ic))
            });
        }
        Command::Graph(GraphCommand::Chordal(input)) => {
            let chordal = input.graph()?.is_chordal();
            ctx.emit(json!({ "chordal": chordal }), || println!("{chordal}"));
        }
        Command::Check(CheckCommand::Ekr { input, r, t, max_faces }) => {
            let v = is_r_ekr(&input.complex()?, r, t, &Budget::default().with_max_faces(max_faces))?;
            ctx.emit(
                json!({
                    "r": r, "t": t, "is_ekr": v.is_ekr, "star_bound": v.star_bound,
                    "star_core": v.best_star_core.to_vec(), "max_family_size": v.max_family_size,
                    "witness": faces_json(&v.witness),
                }),
                || {
                    println!("r-EKR: {}", v.is_ekr);
                    println!("star bound: {} (core {})", v.star_bound, v.best_star_core);
                    println!("max family: {}", v.max_family_size);
                    if !v.is_ekr {
                        println!("witness:");
                        print_faces(&v.witness);
                    }
                },
            );
            return Ok(u8::from(!v.is_ekr));
        }
        Command::Check(CheckCommand::Strict { input, r, max_faces }) => {
            let v = is_strict_r_ekr(&input.complex()?, r, &Budget::default().with_max_faces(max_faces))?;
            let bad = !v.strict;
            ctx.emit(
                json!({
                    "r": r, "is_ekr": v.ekr.is_ekr, "strict": v.strict,
                    "maximum_families": v.maximum_families,
                    "non_star": v.non_star.as_deref().map(faces_json),
                }),
                || {
                    println!("r-EKR: {}", v.ekr.is_ekr);
                    println!("strict: {}", v.strict);
                    println!("maximum families: {}", v.maximum_families);
                    if let Some(fam) = &v.non_star {
                        println!("non-star maximum family:");
                        print_faces(fam);
                    } else if !v.ekr.is_ekr {
                        println!("witness:");
                        print_faces(&v.ekr.witness);
                    }
                },
            );
            return Ok(u8::from(bad));
        }
        Command::Check(CheckCommand::Chvatal { input, max_faces }) => {
            let v = chvatal_check(&input.complex()?, &Budget::default().with_max_faces(max_faces))?;
            ctx.emit(
                json!({
                    "holds": v.holds, "star_size": v.star_size, "best_vertex": v.best_vertex,
                    "max_family_size": v.max_family_size, "witness": faces_json(&v.witness),
                }),
                || {
                    println!("holds: {}", v.holds);
                    println!("star at {}: {}", v.best_vertex, v.star_size);
                    println!("max family: {}", v.max_family_size);
                    if !v.holds {
                        println!("witness:");
                        print_faces(&v.witness);
                    }
                },
            );
            return Ok(u8::from(!v.holds));
        }
        Command::Corpus {
            claim,
            family,
            out,
            workers,
            resume,
            max_faces,
        } => {
            let claim: Claim = claim.parse()?;
            let spec: CorpusSpec = family.parse()?;
            let cfg = CampaignConfig {
                shift: ctx.shift,
                budget: Budget::default().with_max_faces(max_faces),
                workers,
            };
            let mut sink = ReportSink::open(&out, resume)?;
            let tally = run_campaign(claim, &spec, &cfg, &mut sink)?;
            ctx.emit(
                json!({
                    "claim": claim.id(), "family": spec.to_string(), "pass": tally.pass,
                    "fail": tally.fail, "skipped": tally.skipped, "already_present": sink.skipped_existing(),
                }),
                || {
                    println!(
                        "{claim} on {spec}: {} pass, {} fail, {} skipped ({} already present)",
                        tally.pass,
                        tally.fail,
                        tally.skipped,
                        sink.skipped_existing()
                    )
                },
            );
            return Ok(u8::from(tally.fail > 0));
        }
        Command::Claims => {
            ctx.emit(
                json!(Claim::ALL.iter().map(|c| json!({ "id": c.id(), "about": c.about() })).collect::<Vec<_>>()),
                || {
                    for c in Claim::ALL {
                        println!("{:<28} {}", c.id(), c.about());
                    }
                },
            );
        }
        Command::Summary(input) => {
            let reports = read_reports(input.input.as_ref())?;
            let table = summarize(&reports);
            let any_fail = table.values().any(|t| t.fail > 0);
            ctx.emit(json!(table), || {
                for (claim, t) in &table {
                    println!("{claim:<28} pass {:>6}  fail {:>6}  skipped {:>6}", t.pass, t.fail, t.skipped);
                }
            });
            return Ok(u8::from(any_fail));
        }
        Command::Replay(input) => {
            let reports = read_reports(input.input.as_ref())?;
            let cfg = CampaignConfig::default();
            let mut confirmed = 0;
            let mut refuted = Vec::new();
            for (i, rec) in reports.iter().enumerate() {
                if rec.verdict != Verdict::Fail {
                    continue;
                }
                if replay(rec, &cfg)? {
                    confirmed += 1;
                } else {
                    refuted.push(i + 1);
                }
            }
            ctx.emit(json!({ "confirmed": confirmed, "not_reproduced": refuted }), || {
                println!("failures confirmed: {confirmed}");
                for line in &refuted {
                    println!("line {line}: failure did not reproduce");
                }
            });
            return Ok(if refuted.is_empty() { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ekrcx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
