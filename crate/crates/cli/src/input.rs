//! Reading graphs from files, or from the bundled set with an `@name` argument.

use std::path::{Path, PathBuf};

use homlab_core::graph::parse_any;
use homlab_core::{fixtures, AnyGraph, Graph, TwoColouredGraph};

use crate::error::{CliError, CliResult};

pub fn load(arg: &str) -> CliResult<AnyGraph> {
    if let Some(name) = arg.strip_prefix('@') {
        let text = fixtures::text(name).ok_or_else(|| CliError::Usage(format!("no bundled graph named `{name}`")))?;
        return parse_text(text, arg);
    }
    let text = std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.to_string(), source })?;
    parse_text(&text, arg)
}

fn parse_text(text: &str, path: &str) -> CliResult<AnyGraph> {
    parse_any(text).map_err(|source| CliError::Parse { path: path.to_string(), source })
}

fn kind(g: &AnyGraph) -> &'static str {
    match g {
        AnyGraph::Graph(_) => "graph",
        AnyGraph::Bigraph(_) => "bigraph",
    }
}

pub fn expect_bigraph(g: AnyGraph, what: &str) -> CliResult<TwoColouredGraph> {
    match g {
        AnyGraph::Bigraph(b) => Ok(b),
        other => Err(CliError::Usage(format!("{what} must be a bigraph, got a {}", kind(&other)))),
    }
}

pub fn expect_graph(g: AnyGraph, what: &str) -> CliResult<Graph> {
    match g {
        AnyGraph::Graph(b) => Ok(b),
        other => Err(CliError::Usage(format!("{what} must be a graph, got a {}", kind(&other)))),
    }
}

pub fn load_bigraph(arg: &str, what: &str) -> CliResult<TwoColouredGraph> {
    expect_bigraph(load(arg)?, what)
}

pub fn load_graph(arg: &str, what: &str) -> CliResult<Graph> {
    expect_graph(load(arg)?, what)
}

/// Where the verification suite reads its example targets from.
#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn bundled() -> Self {
        Fixtures { dir: None }
    }

    /// Read `<dir>/<name>.txt` instead of the bundled copies.
    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        Fixtures { dir: Some(dir.as_ref().to_path_buf()) }
    }

    pub fn load(&self, name: &str) -> CliResult<AnyGraph> {
        match &self.dir {
            None => load(&format!("@{name}")),
            Some(d) => load(&d.join(format!("{name}.txt")).to_string_lossy()),
        }
    }

    pub fn bigraph(&self, name: &str) -> CliResult<TwoColouredGraph> {
        expect_bigraph(self.load(name)?, name)
    }

    pub fn graph(&self, name: &str) -> CliResult<Graph> {
        expect_graph(self.load(name)?, name)
    }
}
