use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use dpforge::{decode_graph6, encode_graph6, parse_edge_list, write_dot, write_edge_list, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Graph6,
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edges,
}

fn detect(path: &Path) -> Result<InputFormat> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Ok(InputFormat::Graph6),
        Some("edges") | Some("txt") => Ok(InputFormat::Edges),
        _ => bail!("cannot tell the format of {} from its extension; pass --input-format", path.display()),
    }
}

pub fn read_graph(path: &Path, format: Option<InputFormat>) -> Result<Graph> {
    let format = match format {
        Some(f) => f,
        None => detect(path)?,
    };
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let graph = match format {
        InputFormat::Graph6 => {
            // First non-empty line; graph6 files may hold a header-free list.
            let line = bytes
                .split(|&b| b == b'\n')
                .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
                .find(|l| !l.is_empty())
                .unwrap_or_default();
            decode_graph6(line)?
        }
        InputFormat::Edges => parse_edge_list(std::str::from_utf8(&bytes).context("edge list is not UTF-8")?)?,
    };
    Ok(graph)
}

pub fn render(g: &Graph, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Graph6 => encode_graph6(g)? + "\n",
        OutputFormat::Edges => write_edge_list(g),
        OutputFormat::Dot => write_dot(g, "G"),
    })
}

/// Writes to `path`, or to stdout when `path` is `None` or `-`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}
