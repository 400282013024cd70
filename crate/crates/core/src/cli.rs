//! Command-line front end of the `cozero` binary.
//!
//! Exit codes: 0 on success, 1 when a report has mismatches or unexpected
//! inconclusive entries (or a certificate does not verify), 2 on usage
//! errors and bad ring descriptors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{
    cross_check_genus1, cross_check_planar, local_factors, reproduce_thm11, reproduce_thm12, verify_fixtures,
    ClassificationRecord, Classifier, GraphKind, Report,
};
use crate::genus::{exact_genus, verify_certificate, Budget, EmbeddingCertificate, GenusBound};
use crate::graph::SimpleGraph;
use crate::ring::{catalog, parse_ring_notation, FiniteRing, RingSpec};

/// Environment variable holding the default seed.
pub const SEED_ENV: &str = "COZERO_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "cozero",
    version,
    about = "Cozero-divisor graphs of finite rings and their genus"
)]
struct Cli {
    /// Worker threads (1 keeps scheduling sequential; output never depends on it).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect rings.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Build graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Genus bounds, exact search and certificate checks.
    #[command(subcommand)]
    Genus(GenusCmd),
    /// Classify the graph of one ring.
    Classify(ClassifyArgs),
    /// Reproduce a classification with an evidence report.
    Reproduce(ReproduceArgs),
    /// Verify certificates.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    /// Order, units and local factors of a ring.
    Show {
        /// Inline notation (e.g. `Z4xF8`) or path to a JSON ring descriptor.
        ring: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Local rings of the catalog.
    Catalog {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Build the cozero-divisor or reduced cozero-divisor graph of a ring.
    Build {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = Kind::Cozero)]
        kind: Kind,
        /// Output format.
        #[arg(long = "out", value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Graph JSON file (`{"labels": [...], "edges": [[u, v], ...]}`).
    #[arg(long = "in", conflicts_with = "ring")]
    input: Option<PathBuf>,
    /// Build the graph from a ring instead.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long, value_enum, default_value_t = Kind::Cozero)]
    kind: Kind,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Budget preset: quick, standard or slow.
    #[arg(long, default_value = "standard")]
    budget: String,
    /// Seed for the annealing heuristic (default: $COZERO_SEED or 1).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum GenusCmd {
    /// Lower bounds and a heuristic upper bound, without exact search.
    Bound {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Full pipeline including exact search; optionally writes the certificate.
    Search {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the embedding certificate here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check a certificate against a graph.
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Check a certificate against a graph (same as `genus verify`).
    Cert {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Rebuild every shipped fixture graph and check its certificate.
    Fixtures,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    ring: String,
    #[arg(long, value_enum, default_value_t = Kind::Cozero)]
    kind: Kind,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Do not use the shipped fixture certificates.
    #[arg(long)]
    no_fixtures: bool,
    /// Write the certificate to this file and record its path.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    #[arg(value_enum)]
    target: Target,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    no_fixtures: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write every emitted certificate into this directory.
    #[arg(long)]
    cert_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    #[value(name = "thm-1.2")]
    Thm12,
    #[value(name = "thm-1.1")]
    Thm11,
    Planar,
    Genus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Cozero,
    Reduced,
}

impl From<Kind> for GraphKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cozero => GraphKind::Cozero,
            Kind::Reduced => GraphKind::Reduced,
        }
    }
}

/// Failure of a command: usage problems map to exit code 2, failed checks
/// to exit code 1.
enum Failure {
    Usage(String),
    Check(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn load_ring(arg: &str) -> Result<FiniteRing, Failure> {
    let path = Path::new(arg);
    let spec: RingSpec = if arg.ends_with(".json") && path.is_file() {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text)?
    } else {
        parse_ring_notation(arg)?
    };
    Ok(spec.build()?)
}

fn load_graph(src: &GraphSource) -> Result<SimpleGraph, Failure> {
    match (&src.input, &src.ring) {
        (Some(path), _) => Ok(SimpleGraph::parse_json(&fs::read_to_string(path)?)?),
        (None, Some(ring)) => Ok(GraphKind::from(src.kind).build(&load_ring(ring)?)),
        (None, None) => Err(Failure::Usage("give a graph with --in or a ring with --ring".into())),
    }
}

fn load_budget(args: &BudgetArgs) -> Result<Budget, Failure> {
    let budget = Budget::preset(&args.budget)
        .ok_or_else(|| Failure::Usage(format!("unknown budget \"{}\" (quick, standard, slow)", args.budget)))?;
    let seed = match args.seed {
        Some(s) => s,
        None => match std::env::var(SEED_ENV) {
            Ok(v) => v
                .parse()
                .map_err(|_| Failure::Usage(format!("{SEED_ENV} is not an integer: {v}")))?,
            Err(_) => budget.seed,
        },
    };
    Ok(budget.with_seed(seed))
}

fn write_text(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn bound_table(g: &SimpleGraph, b: &GenusBound) -> String {
    let mut s = format!(
        "vertices {}  edges {}\nstatus {}\n",
        g.vertex_count(),
        g.edge_count(),
        b.status()
    );
    s += &format!("lower {}  ({})\n", b.lower, b.lower_evidence.summary());
    match (&b.upper, &b.upper_evidence) {
        (Some(u), Some(ev)) => s += &format!("upper {u}  ({})\n", ev.summary()),
        _ => s += "upper none\n",
    }
    s
}

fn record_table(r: &ClassificationRecord) -> String {
    let mut s = format!("ring {}  ({})\n", r.ring, r.kind);
    s += &format!("factors {}\n", r.factors.join(", "));
    s += &format!("vertices {}  edges {}\nstatus {}\n", r.vertices, r.edges, r.status);
    s += &format!("lower {}  ({})\n", r.lower, r.lower_evidence);
    match (&r.upper, &r.upper_evidence) {
        (Some(u), Some(ev)) => s += &format!("upper {u}  ({ev})\n"),
        _ => s += "upper none\n",
    }
    if let Some(w) = &r.warning {
        s += &format!("warning: {w}\n");
    }
    if let Some(p) = &r.certificate_path {
        s += &format!("certificate {p}\n");
    }
    s
}

fn cert_file_name(r: &ClassificationRecord) -> String {
    let clean: String = r
        .ring
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("{}_{}.json", clean.trim_matches('_'), r.kind)
}

fn ring_show(ring: &FiniteRing, format: Format) -> String {
    let factors = local_factors(ring).ok();
    if format == Format::Json {
        let parts: Vec<serde_json::Value> = factors
            .iter()
            .flatten()
            .map(|d| {
                serde_json::json!({
                    "name": d.name, "order": d.order, "is_field": d.is_field(),
                    "maximal_is_principal": d.maximal_is_principal, "eta": d.eta, "tier": d.tier,
                })
            })
            .collect();
        let doc = serde_json::json!({
            "ring": ring.name(), "order": ring.size(), "units": ring.units().len(),
            "local": ring.is_local(), "factors": parts, "spec": ring.spec(),
        });
        return serde_json::to_string_pretty(&doc).expect("json") + "\n";
    }
    let mut s = format!(
        "ring {}\norder {}  units {}  local {}\n",
        ring.name(),
        ring.size(),
        ring.units().len(),
        ring.is_local()
    );
    match factors {
        Some(parts) => {
            for d in parts {
                s += &format!(
                    "  {:<20} order {:<4} field {:<5} principal maximal {:<5} eta {}\n",
                    d.name,
                    d.order,
                    d.is_field(),
                    d.maximal_is_principal,
                    d.eta
                );
            }
        }
        None => s += "  (not split into local factors)\n",
    }
    s
}

fn exec(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Ring(RingCmd::Show { ring, format }) => {
            let r = load_ring(&ring)?;
            write!(out, "{}", ring_show(&r, format))?;
            Ok(0)
        }
        Command::Ring(RingCmd::Catalog { max_order, format }) => {
            let cat = catalog(max_order)?;
            if format == Format::Json {
                let rows: Vec<serde_json::Value> = cat
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "name": d.name, "order": d.order, "is_field": d.is_field(),
                            "maximal_is_principal": d.maximal_is_principal, "eta": d.eta, "tier": d.tier,
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
            } else {
                writeln!(
                    out,
                    "{:<20} {:>5}  {:<5} {:<9} {:>3}  tier",
                    "name", "order", "field", "principal", "eta"
                )?;
                for d in &cat {
                    writeln!(
                        out,
                        "{:<20} {:>5}  {:<5} {:<9} {:>3}  {:?}",
                        d.name,
                        d.order,
                        d.is_field(),
                        d.maximal_is_principal,
                        d.eta,
                        d.tier
                    )?;
                }
            }
            Ok(0)
        }
        Command::Graph(GraphCmd::Build {
            ring,
            kind,
            format,
            output,
        }) => {
            let g = GraphKind::from(kind).build(&load_ring(&ring)?);
            let text = match format {
                GraphFormat::Json => g.export_json() + "\n",
                GraphFormat::Dot => g.export_dot(),
            };
            write_text(output.as_deref(), &text, out)?;
            Ok(0)
        }
        Command::Genus(GenusCmd::Bound { source, budget, format }) => {
            let g = load_graph(&source)?;
            let budget = Budget {
                search_nodes: 0,
                ..load_budget(&budget)?
            };
            let b = exact_genus(&g, &budget);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&b)?)?,
                Format::Table => write!(out, "{}", bound_table(&g, &b))?,
            }
            Ok(0)
        }
        Command::Genus(GenusCmd::Search {
            source,
            budget,
            cert_out,
            format,
        }) => {
            let g = load_graph(&source)?;
            let b = exact_genus(&g, &load_budget(&budget)?);
            if let Some(path) = &cert_out {
                match b.certificate() {
                    Some(c) => fs::write(path, c.to_json())?,
                    None => return Err(Failure::Check("no whole-graph certificate to write".into())),
                }
            }
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&b)?)?,
                Format::Table => write!(out, "{}", bound_table(&g, &b))?,
            }
            Ok(0)
        }
        Command::Genus(GenusCmd::Verify { source, cert }) | Command::Verify(VerifyCmd::Cert { source, cert }) => {
            let g = load_graph(&source)?;
            let c = EmbeddingCertificate::from_json(&fs::read_to_string(&cert)?)?;
            match verify_certificate(&g, &c) {
                Ok(true) => {
                    writeln!(out, "genus {} verified", c.genus)?;
                    Ok(0)
                }
                Ok(false) => Err(Failure::Check(format!(
                    "certificate claims genus {} but the rotation does not give it",
                    c.genus
                ))),
                Err(e) => Err(Failure::Check(e.to_string())),
            }
        }
        Command::Verify(VerifyCmd::Fixtures) => {
            let mut failed = 0;
            for (entry, res) in verify_fixtures() {
                match res {
                    Ok(()) => writeln!(
                        out,
                        "ok      {} ({}) genus {}",
                        entry.ring, entry.kind, entry.certificate.genus
                    )?,
                    Err(e) => {
                        failed += 1;
                        writeln!(out, "FAILED  {e}")?;
                    }
                }
            }
            Ok(i32::from(failed > 0))
        }
        Command::Classify(args) => {
            let budget = load_budget(&args.budget)?;
            let classifier = Classifier {
                budget,
                use_fixtures: !args.no_fixtures,
            };
            let ring = load_ring(&args.ring)?;
            let mut rec = classifier.classify(&ring, args.kind.into());
            if let Some(path) = &args.cert_out {
                match rec.certificate() {
                    Some(c) => {
                        fs::write(path, c.to_json())?;
                        rec.certificate_path = Some(path.display().to_string());
                    }
                    None => return Err(Failure::Check("no whole-graph certificate to write".into())),
                }
            }
            match args.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rec)?)?,
                Format::Table => write!(out, "{}", record_table(&rec))?,
            }
            Ok(0)
        }
        Command::Reproduce(args) => {
            let budget = load_budget(&args.budget)?;
            let classifier = Classifier {
                budget,
                use_fixtures: !args.no_fixtures,
            };
            let mut report: Report = match args.target {
                Target::Thm12 => reproduce_thm12(&classifier),
                Target::Thm11 => reproduce_thm11(&classifier),
                Target::Planar => cross_check_planar(&classifier),
                Target::Genus1 => cross_check_genus1(&classifier),
            };
            if let Some(dir) = &args.cert_dir {
                fs::create_dir_all(dir)?;
                for e in &mut report.entries {
                    if let Some(c) = e.record.certificate() {
                        let path = dir.join(cert_file_name(&e.record));
                        fs::write(&path, c.to_json())?;
                        e.record.certificate_path = Some(path.display().to_string());
                    }
                }
            }
            let text = match args.format {
                Format::Json => report.to_json() + "\n",
                Format::Table => report.render_table(),
            };
            write_text(args.output.as_deref(), &text, out)?;
            Ok(i32::from(!report.is_success()))
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing all output
/// to `out`, and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            return 2;
        }
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = pool.install(|| exec(cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            1
        }
    }
}
