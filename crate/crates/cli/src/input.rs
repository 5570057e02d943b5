use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use czi_core::graph::{generate, parse_dimacs, parse_edge_list, parse_graph6};
use czi_core::{FamilySpec, Graph};

use crate::CliError;

/// Exactly one graph source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Graph file: .g6 (one graph per line), .col (DIMACS) or .txt (edge list).
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Family spec such as path:5, complete-multipartite:1,2,2 or thorn(cycle:4;2).
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
}

pub fn parse_family(spec: &str) -> Result<FamilySpec, CliError> {
    spec.parse::<FamilySpec>()
        .map_err(|e| CliError::Parse(format!("family {spec:?}: {e}")))
}

fn read_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let extension = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let parse: fn(&str) -> Result<Vec<Graph>, String> = match extension.as_deref() {
        Some("g6") => |text| {
            text.lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty())
                .map(|(i, line)| parse_graph6(line).map_err(|e| format!("line {}: {e}", i + 1)))
                .collect()
        },
        Some("col") => |text| {
            parse_dimacs(text)
                .map(|g| vec![g])
                .map_err(|e| e.to_string())
        },
        Some("txt") => |text| {
            parse_edge_list(text)
                .map(|g| vec![g])
                .map_err(|e| e.to_string())
        },
        _ => {
            return Err(CliError::Usage(format!(
                "cannot infer the format of {}; use .g6, .col or .txt",
                path.display()
            )))
        }
    };
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let graphs = parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(CliError::Parse(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

impl Source {
    pub fn graphs(&self) -> Result<Vec<Graph>, CliError> {
        match (&self.input, &self.family) {
            (Some(path), None) => read_file(path),
            (None, Some(spec)) => {
                let spec = parse_family(spec)?;
                let g = generate(&spec).map_err(|e| CliError::Parse(e.to_string()))?;
                Ok(vec![g])
            }
            _ => Err(CliError::Usage(
                "give exactly one of --input and --family".into(),
            )),
        }
    }
}
