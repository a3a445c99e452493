mod graph_io;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use dpforge::{
    build_regular_dp, classic_hh, encode_graph6, enumerate_connected_regular, hh_dp_certificate, is_dp_bruteforce,
    modified_hh, survey_modified_hh, survey_regular_dp_of, verify_certificate, DegreeSequence,
    DpCertificate, Graph, HHOutcome, IsometryError, SurveyRow,
};

use graph_io::{emit, read_graph, render, InputFormat, OutputFormat};
use report::{Row, SurveyReport, VerifyBody, VerifyReport, SCHEMA_VERSION};

/// Largest order the regular survey runs without `--deep`.
const REGULAR_DEFAULT_CAP: usize = 10;
const REGULAR_DEEP_CAP: usize = 13;
const HH_DEFAULT_CAP: usize = 12;
const HH_DEEP_CAP: usize = 16;

#[derive(Parser)]
#[command(name = "dpforge", version, about = "Build and check distance-preserving graphs")]
struct Cli {
    /// Worker threads for surveys and brute-force checks.
    #[arg(long, global = true, env = "DPFORGE_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a graph by brute force or against a certificate.
    Verify(VerifyArgs),
    /// Reproduce a census table.
    #[command(subcommand)]
    Survey(Survey),
    /// Convert a graph between formats.
    Convert(ConvertArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "graph6")]
    format: OutputFormat,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the deletion certificate to this file.
    #[arg(long)]
    emit_certificate: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construct {
    /// An r-regular dp graph on n vertices.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Havel–Hakimi realization of a degree sequence.
    Hh {
        /// Weakly decreasing, comma separated, e.g. 3,2,2,2,1.
        #[arg(long, required_unless_present = "sequence_file", conflicts_with = "sequence_file")]
        sequence: Option<String>,
        /// One comma-separated sequence per line; prints one result line each.
        #[arg(long)]
        sequence_file: Option<PathBuf>,
        /// Never re-sort the residual sequence.
        #[arg(long)]
        modified: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Search every order exhaustively.
    #[arg(long, conflicts_with = "certificate", required_unless_present = "certificate")]
    brute: bool,
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// JSON report path, `-` for stdout (replaces the verdict line).
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 13)]
    max_brute_n: usize,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long, default_value_t = 5)]
    min_n: usize,
    /// JSON report path, `-` for stdout (replaces the table).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Lift the default size cap.
    #[arg(long)]
    deep: bool,
}

#[derive(Subcommand)]
enum Survey {
    /// Connected regular graphs and how many are dp.
    Regular {
        #[arg(long, default_value_t = REGULAR_DEFAULT_CAP)]
        max_n: usize,
        #[command(flatten)]
        common: SurveyArgs,
        /// Write each graph as DIR/<n>-<r>-<index>.g6.
        #[arg(long)]
        dump_graphs: Option<PathBuf>,
    },
    /// Graphical sequences and how many the modified loop realizes.
    Hh {
        #[arg(long, default_value_t = HH_DEFAULT_CAP)]
        max_n: usize,
        #[command(flatten)]
        common: SurveyArgs,
    },
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    #[arg(long, value_enum)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Maps to the process exit status.
enum Failure {
    /// Bad flags or unreadable input.
    Usage(anyhow::Error),
    /// The graph is not dp or the certificate is invalid.
    Negative,
    /// Inadmissible parameters or an algorithm that terminated unsuccessfully.
    Algorithm(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match cli.command {
        Command::Construct(c) => construct(c),
        Command::Verify(v) => verify(v),
        Command::Survey(s) => survey(s),
        Command::Convert(c) => convert(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Algorithm(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_certificate(path: Option<&Path>, cert: &DpCertificate) -> anyhow::Result<()> {
    if let Some(p) = path {
        fs::write(p, cert.to_text()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn construct(c: Construct) -> Outcome {
    match c {
        Construct::Regular { n, r, output } => {
            let built = build_regular_dp(n, r).map_err(|e| Failure::Algorithm(e.into()))?;
            emit(output.out.as_deref(), &render(built.graph(), output.format)?)?;
            write_certificate(output.emit_certificate.as_deref(), &built.certificate)?;
            Ok(())
        }
        Construct::Hh { sequence: Some(s), modified, output, .. } => {
            let d: DegreeSequence = s.parse().map_err(|e| anyhow!("bad --sequence {s:?}: {e}"))?;
            if output.emit_certificate.is_some() && !modified {
                return Err(Failure::Usage(anyhow!("--emit-certificate needs --modified")));
            }
            let out = realize(&d, modified);
            let Some(g) = out.graph.as_ref() else {
                return Err(Failure::Algorithm(anyhow!(
                    "Havel–Hakimi failed on {d} after {} iterations; residual {}",
                    out.iterations,
                    out.residual_display()
                )));
            };
            emit(output.out.as_deref(), &render(g, output.format)?)?;
            if let Some(path) = output.emit_certificate.as_deref() {
                let cert = hh_dp_certificate(&out).map_err(|e| Failure::Algorithm(anyhow!("no certificate: {e}")))?;
                write_certificate(Some(path), &cert)?;
            }
            Ok(())
        }
        Construct::Hh { sequence_file: Some(file), modified, output, .. } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let mut lines = String::new();
            let mut failed = false;
            for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                let d: DegreeSequence =
                    line.parse().map_err(|e| anyhow!("{}:{}: bad sequence {line:?}: {e}", file.display(), i + 1))?;
                let out = realize(&d, modified);
                match &out.graph {
                    Some(g) => lines += &format!("{d}\tsuccess\t{}\n", encode_graph6(g).map_err(anyhow::Error::from)?),
                    None => {
                        failed = true;
                        lines += &format!("{d}\tfailure\t{}\n", out.residual_display());
                    }
                }
            }
            emit(output.out.as_deref(), &lines)?;
            if failed {
                return Err(Failure::Algorithm(anyhow!("at least one sequence was not realized")));
            }
            Ok(())
        }
        Construct::Hh { .. } => unreachable!("clap requires one of --sequence and --sequence-file"),
    }
}

fn realize(d: &DegreeSequence, modified: bool) -> HHOutcome {
    if modified {
        modified_hh(d)
    } else {
        classic_hh(d)
    }
}

fn verify(v: VerifyArgs) -> Outcome {
    let g = read_graph(&v.input, v.input_format)?;
    let quiet = v.json.as_deref() == Some(Path::new("-"));
    let say = |line: String| {
        if !quiet {
            println!("{line}");
        }
    };
    let body = if let Some(path) = &v.certificate {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cert = DpCertificate::parse_text(&text).map_err(|e| anyhow!("malformed certificate: {e}"))?;
        let verdict = verify_certificate(&g, &cert).map_err(|e| anyhow!("certificate does not fit the graph: {e}"))?;
        if verdict.valid {
            say("certificate valid".into());
        } else {
            say(format!("certificate invalid, first failing order {}", verdict.first_failing_order.unwrap_or(0)));
        }
        VerifyBody::Certificate { valid: verdict.valid, first_failing_order: verdict.first_failing_order }
    } else {
        if g.n() > v.max_brute_n {
            return Err(Failure::Usage(anyhow!(
                "brute force is capped at n = {} (got {}); raise --max-brute-n",
                v.max_brute_n,
                g.n()
            )));
        }
        match is_dp_bruteforce(&g) {
            Ok(r) => {
                match r.first_failing_order {
                    None => say("dp".into()),
                    Some(k) => say(format!("not dp, first failing order {k}")),
                }
                VerifyBody::from_brute(&r)
            }
            Err(IsometryError::Disconnected) => {
                say("not dp, graph is disconnected".into());
                VerifyBody::Brute { is_dp: false, first_failing_order: None, witnesses: Vec::new() }
            }
            Err(e) => return Err(Failure::Usage(e.into())),
        }
    };
    let ok = matches!(body, VerifyBody::Brute { is_dp: true, .. } | VerifyBody::Certificate { valid: true, .. });
    if let Some(path) = &v.json {
        let report = VerifyReport { schema_version: SCHEMA_VERSION, n: g.n(), m: g.m(), connected: g.is_connected(), body };
        emit(Some(path), &(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)? + "\n"))?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn check_range(min_n: usize, max_n: usize, deep: bool, default_cap: usize, deep_cap: usize) -> Outcome {
    if min_n > max_n {
        return Err(Failure::Usage(anyhow!("--min-n {min_n} exceeds --max-n {max_n}")));
    }
    if max_n > deep_cap {
        return Err(Failure::Usage(anyhow!("--max-n is limited to {deep_cap}")));
    }
    if max_n > default_cap && !deep {
        return Err(Failure::Usage(anyhow!("--max-n above {default_cap} needs --deep")));
    }
    Ok(())
}

fn survey(s: Survey) -> Outcome {
    let (name, common, rows) = match s {
        Survey::Regular { max_n, common, dump_graphs } => {
            check_range(common.min_n, max_n, common.deep, REGULAR_DEFAULT_CAP, REGULAR_DEEP_CAP)?;
            if let Some(dir) = &dump_graphs {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut rows = Vec::new();
            for n in common.min_n..=max_n {
                let graphs = enumerate_connected_regular(n);
                if let Some(dir) = &dump_graphs {
                    dump(dir, n, &graphs)?;
                }
                rows.push(survey_regular_dp_of(n, &graphs));
            }
            ("regular", common, rows)
        }
        Survey::Hh { max_n, common } => {
            check_range(common.min_n, max_n, common.deep, HH_DEFAULT_CAP, HH_DEEP_CAP)?;
            let rows = (common.min_n..=max_n).map(survey_modified_hh).collect();
            ("hh", common, rows)
        }
    };
    let to_stdout = common.json.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        print!("{}", table(name, &rows));
    }
    if let Some(path) = &common.json {
        let report = SurveyReport { schema_version: SCHEMA_VERSION, survey: name, rows: rows.into_iter().map(Row::from).collect() };
        emit(Some(path), &(serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)? + "\n"))?;
    }
    Ok(())
}

fn dump(dir: &Path, n: usize, graphs: &[Graph]) -> anyhow::Result<()> {
    let mut index = 0;
    let mut last_degree = None;
    for g in graphs {
        let r = g.regular_degree().unwrap_or(0);
        if last_degree != Some(r) {
            index = 0;
            last_degree = Some(r);
        }
        let path = dir.join(format!("{n}-{r}-{index:05}.g6"));
        fs::write(&path, encode_graph6(g)? + "\n").with_context(|| format!("writing {}", path.display()))?;
        index += 1;
    }
    Ok(())
}

fn table(name: &str, rows: &[SurveyRow]) -> String {
    let headers = match name {
        "regular" => ["n", "connected regular", "dp", "% dp"],
        _ => ["n", "graphical sequences", "successes", "% successes"],
    };
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| [r.n.to_string(), r.total.to_string(), r.successes.to_string(), r.percentage_text()])
        .collect();
    let widths: Vec<usize> =
        (0..4).map(|i| cells.iter().map(|c| c[i].len()).chain([headers[i].len()]).max().unwrap_or(0)).collect();
    let line = |c: [&str; 4]| {
        let mut s = format!("{:<w$}", c[0], w = widths[0]);
        for i in 1..4 {
            s += &format!("  {:>w$}", c[i], w = widths[i]);
        }
        s + "\n"
    };
    let mut out = line(headers);
    for c in &cells {
        out += &line([c[0].as_str(), c[1].as_str(), c[2].as_str(), c[3].as_str()]);
    }
    out
}

fn convert(c: ConvertArgs) -> Outcome {
    let g = read_graph(&c.input, c.input_format)?;
    emit(c.out.as_deref(), &render(&g, c.format)?)?;
    Ok(())
}
