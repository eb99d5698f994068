use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use tqnet::chart::{render_svg, ChartOptions};
use tqnet::export::{read_tq_csv, tq_from_json, write_tq_csv, CsvForm};
use tqnet::parallel::{par_multiply, par_two_to_one_cols};
use tqnet::pajek::{parse_clu_str, parse_net_str};
use tqnet::temporalize::{temporalize_one_mode, temporalize_two_mode, Mode, Options};
use tqnet::netsjson;
use tqnet_core::{
    in_sum, normalize_rows, out_sum, top_links, top_loops, Combinatorial, MinPlus, Num, TemporalNetwork,
    TemporalQuantity, Time,
};

#[derive(Parser)]
#[command(name = "tqnet", version, about = "Temporal quantities and temporal networks")]
struct Cli {
    /// Suppress warnings about skipped data.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Temporalize a Pajek network with a year partition.
    Convert(ConvertArgs),
    /// Print the in-sum (or out-sum) of one node.
    Insum(InsumArgs),
    /// Multiply networks: A·B, A·B·C, or Aᵀ·A.
    Multiply(MultiplyArgs),
    /// Rank links or loops by total.
    Top(TopArgs),
    /// Aggregate a quantity into time bands.
    Recode(RecodeArgs),
    /// Draw a quantity as an SVG bar chart or export it as CSV.
    Chart(ChartArgs),
    /// Transpose, drop loops, normalize rows, or view as two-mode.
    Transform(TransformArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Instant,
    Cumulative,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemiringArg {
    Combinatorial,
    MinPlus,
}

#[derive(Args)]
struct ConvertArgs {
    /// Pajek .net file (`-` for stdin).
    #[arg(long)]
    net: PathBuf,
    /// Pajek .clu file with years.
    #[arg(long)]
    clu: PathBuf,
    #[arg(long, value_enum, default_value = "instant")]
    mode: ModeArg,
    /// Treat the network as one-mode and date links by their tail.
    #[arg(long)]
    one_mode: bool,
    #[arg(long, env = "TQNET_FIRST")]
    first: Option<Time>,
    #[arg(long, env = "TQNET_LAST")]
    last: Option<Time>,
    /// Output netsJSON file (`-` for stdout).
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct InsumArgs {
    /// netsJSON network.
    net: PathBuf,
    #[arg(long)]
    node: String,
    /// Sum the out-links of a row node instead.
    #[arg(long)]
    out_sum: bool,
    /// Normalize rows before summing (fractional counting).
    #[arg(long)]
    normalize: bool,
    /// Running total up to the end of the horizon.
    #[arg(long)]
    cumulate: bool,
    #[arg(long, conflicts_with = "cut_ge")]
    cut_gt: Option<f64>,
    #[arg(long)]
    cut_ge: Option<f64>,
    /// Also write the quantity as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write one CSV row per instant.
    #[arg(long, requires = "csv")]
    instants: bool,
}

#[derive(Args)]
struct MultiplyArgs {
    a: PathBuf,
    #[arg(required_unless_present = "two2one_cols")]
    b: Option<PathBuf>,
    c: Option<PathBuf>,
    /// Use Aᵀ in place of A.
    #[arg(long)]
    transpose_a: bool,
    /// Co-occurrence of the columns of A, Aᵀ·A, stored undirected.
    #[arg(long, conflicts_with_all = ["b", "transpose_a"])]
    two2one_cols: bool,
    #[arg(long, value_enum, default_value = "combinatorial")]
    semiring: SemiringArg,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct TopArgs {
    net: PathBuf,
    #[arg(long, conflicts_with = "loops")]
    links: bool,
    #[arg(long)]
    loops: bool,
    /// Minimal total.
    #[arg(long, default_value_t = 0.0)]
    thresh: f64,
    /// Remove loops from the network first.
    #[arg(long)]
    drop_loops: bool,
    /// Print at most this many rows.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct QuantitySource {
    /// CSV triples, a JSON triple array, or a netsJSON network (`-` for stdin).
    source: PathBuf,
    /// Take the in-sum of this node from a netsJSON network.
    #[arg(long)]
    node: Option<String>,
    /// With --node: take the out-sum instead.
    #[arg(long, requires = "node")]
    out_sum: bool,
}

#[derive(Args)]
struct RecodeArgs {
    #[command(flatten)]
    source: QuantitySource,
    /// Band boundaries p1,p2,...; band k covers [p_k, p_{k+1}).
    #[arg(long, value_delimiter = ',', required = true)]
    breaks: Vec<Time>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ChartArgs {
    #[command(flatten)]
    source: QuantitySource,
    #[arg(long, conflicts_with = "csv")]
    svg: Option<PathBuf>,
    /// Per-instant CSV instead of a chart.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    tmin: Option<Time>,
    #[arg(long, allow_negative_numbers = true)]
    tmax: Option<Time>,
    #[arg(long)]
    tqmax: Option<f64>,
    #[arg(long, default_value = "")]
    title: String,
    #[arg(long, default_value = "red")]
    fill: String,
    #[arg(long, default_value_t = 600)]
    width: u32,
    #[arg(long, default_value_t = 150)]
    height: u32,
}

#[derive(Args)]
struct TransformArgs {
    net: PathBuf,
    #[arg(long)]
    transpose: bool,
    #[arg(long)]
    del_loops: bool,
    #[arg(long)]
    normalize: bool,
    #[arg(long)]
    one2two: bool,
    #[arg(short, long)]
    output: PathBuf,
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn read_network(path: &Path) -> Result<TemporalNetwork> {
    netsjson::from_str(&read_text(path)?).with_context(|| format!("in {}", path.display()))
}

fn write_network(net: &TemporalNetwork, path: &Path) -> Result<()> {
    write_text(path, &netsjson::to_string(net)?)
}

fn network_line(net: &TemporalNetwork) -> String {
    let nodes = if net.is_two_mode() {
        format!("{}+{}", net.rows().len(), net.cols().len())
    } else {
        net.rows().len().to_string()
    };
    let h = net.horizon();
    format!("nodes {nodes}, links {}, horizon [{}, {}], kind {}", net.link_count(), h.first(), h.last(), net.kind().name())
}

fn node_sum(net: &TemporalNetwork, label: &str, out: bool) -> Result<TemporalQuantity> {
    let q = if out {
        let id = net.rows().id(label).map_err(|_| anyhow::anyhow!("unknown node label {label:?}"))?;
        out_sum(net, id)?
    } else {
        let id = net.cols().id(label).map_err(|_| anyhow::anyhow!("unknown node label {label:?}"))?;
        in_sum(net, id)?
    };
    Ok(q)
}

fn load_quantity(src: &QuantitySource) -> Result<TemporalQuantity> {
    let text = read_text(&src.source)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let Some(label) = &src.node else {
            bail!("{} is a network; select a node with --node", src.source.display());
        };
        let net = netsjson::from_str(&text)?;
        return node_sum(&net, label, src.out_sum);
    }
    if src.node.is_some() {
        bail!("--node applies to netsJSON networks only");
    }
    let q = if trimmed.starts_with('[') { tq_from_json(trimmed)? } else { read_tq_csv(text.as_bytes())? };
    Ok(q)
}

fn print_quantity(q: &TemporalQuantity) {
    println!("{q}");
    match q.summary() {
        Some(s) => println!(
            "summary: time [{}, {}), value [{}, {}]",
            s.min_time,
            s.max_time,
            Num(s.min_value),
            Num(s.max_value)
        ),
        None => println!("summary: empty"),
    }
    println!("total: {}", Num(q.total()));
}

fn csv_file(q: &TemporalQuantity, form: CsvForm, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_tq_csv(q, form, &mut buf)?;
    write_text(path, std::str::from_utf8(&buf)?)
}

fn convert(args: ConvertArgs, quiet: bool) -> Result<()> {
    let clock = Instant::now();
    let net = parse_net_str(&read_text(&args.net)?).with_context(|| format!("in {}", args.net.display()))?;
    let part = parse_clu_str(&read_text(&args.clu)?).with_context(|| format!("in {}", args.clu.display()))?;
    let mode = match args.mode {
        ModeArg::Instant => Mode::Instantaneous,
        ModeArg::Cumulative => Mode::Cumulative,
    };
    let opts = Options { mode, first: args.first, last: args.last };
    let (tnet, report) = if args.one_mode {
        temporalize_one_mode(&net, &part, opts)?
    } else {
        temporalize_two_mode(&net, &part, opts)?
    };
    write_network(&tnet, &args.output)?;
    if !quiet && !report.skipped.is_empty() {
        eprintln!("warning: {} links skipped (undated or outside the horizon)", report.skipped.len());
    }
    let line = format!("{}, skipped {}", network_line(&tnet), report.skipped.len());
    if args.output == Path::new("-") {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
    eprintln!("converted in {:.3} s", clock.elapsed().as_secs_f64());
    Ok(())
}

fn insum(args: InsumArgs) -> Result<()> {
    let mut net = read_network(&args.net)?;
    if args.normalize {
        net = normalize_rows(&net);
    }
    let mut q = node_sum(&net, &args.node, args.out_sum)?;
    if args.cumulate {
        q = q.cumulate(net.horizon())?;
    }
    if let Some(x) = args.cut_gt {
        q = q.cut_gt(x);
    }
    if let Some(x) = args.cut_ge {
        q = q.cut_ge(x);
    }
    print_quantity(&q);
    if let Some(path) = &args.csv {
        csv_file(&q, if args.instants { CsvForm::Instants } else { CsvForm::Triples }, path)?;
    }
    Ok(())
}

fn multiply_with<S>(args: &MultiplyArgs, sr: &S) -> Result<TemporalNetwork>
where
    S: tqnet_core::Semiring<Value = f64> + Sync,
{
    let a = read_network(&args.a)?;
    if args.two2one_cols {
        return Ok(par_two_to_one_cols(&a, sr, args.threads)?);
    }
    let a = if args.transpose_a { a.transpose() } else { a };
    let b = read_network(args.b.as_ref().expect("clap requires b"))?;
    let mut product = par_multiply(&a, &b, sr, args.threads)?;
    if let Some(c) = &args.c {
        product = par_multiply(&product, &read_network(c)?, sr, args.threads)?;
    }
    Ok(product)
}

fn multiply(args: MultiplyArgs) -> Result<()> {
    let clock = Instant::now();
    let product = match args.semiring {
        SemiringArg::Combinatorial => multiply_with(&args, &Combinatorial)?,
        SemiringArg::MinPlus => multiply_with(&args, &MinPlus)?,
    };
    let elapsed = clock.elapsed().as_secs_f64();
    write_network(&product, &args.output)?;
    let line = network_line(&product);
    if args.output == Path::new("-") {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
    eprintln!("{} edges computed in {elapsed:.3} s", product.link_count());
    Ok(())
}

fn top(args: TopArgs) -> Result<()> {
    let mut net = read_network(&args.net)?;
    if args.drop_loops && !net.is_two_mode() {
        net = net.without_loops()?;
    }
    let ranked = if args.loops { top_loops(&net, args.thresh) } else { top_links(&net, args.thresh) };
    let out = io::stdout();
    let mut out = out.lock();
    for (k, r) in ranked.iter().take(args.limit.unwrap_or(usize::MAX)).enumerate() {
        writeln!(out, "{}\t{}\t{}\t{}\t{}", k + 1, r.tail_label, r.head_label, Num(r.total), r.quantity)?;
    }
    Ok(())
}

fn recode(args: RecodeArgs) -> Result<()> {
    let q = load_quantity(&args.source)?;
    let banded = q.change_time(&args.breaks)?;
    println!("band\tfrom\tto\tvalue");
    for (k, w) in (1..).zip(args.breaks.windows(2)) {
        let value = banded.value_at(k).map_or_else(|| "-".to_string(), |v| Num(v).to_string());
        println!("{}\t{}\t{}\t{}", k, w[0], w[1], value);
    }
    println!("{banded}");
    if let Some(path) = &args.csv {
        csv_file(&banded, CsvForm::Triples, path)?;
    }
    Ok(())
}

fn chart(args: ChartArgs) -> Result<()> {
    let q = load_quantity(&args.source)?;
    if let Some(path) = &args.csv {
        return csv_file(&q, CsvForm::Instants, path);
    }
    let summary = q.summary();
    let tmin = args.tmin.or(summary.map(|s| s.min_time)).unwrap_or(0);
    let tmax = args.tmax.or(summary.map(|s| s.max_time + 1)).unwrap_or(tmin + 1);
    let opts = ChartOptions {
        tmin,
        tmax,
        tqmax: args.tqmax,
        width: args.width,
        height: args.height,
        title: args.title,
        fill: args.fill,
    };
    let svg = render_svg(&q, &opts)?;
    write_text(args.svg.as_deref().unwrap_or(Path::new("-")), &svg)
}

fn transform(args: TransformArgs) -> Result<()> {
    let mut net = read_network(&args.net)?;
    if args.del_loops {
        net = net.without_loops()?;
    }
    if args.transpose {
        net = net.transpose();
    }
    if args.normalize {
        net = normalize_rows(&net);
    }
    if args.one2two {
        net = net.to_two_mode()?;
    }
    write_network(&net, &args.output)?;
    let line = network_line(&net);
    if args.output == Path::new("-") {
        eprintln!("{line}");
    } else {
        println!("{line}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Convert(args) => convert(args, cli.quiet),
        Command::Insum(args) => insum(args),
        Command::Multiply(args) => multiply(args),
        Command::Top(args) => top(args),
        Command::Recode(args) => recode(args),
        Command::Chart(args) => chart(args),
        Command::Transform(args) => transform(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
