use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::trees::generate_trees;

/// What a single color must avoid (or contain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Graph(Graph),
    /// Any tree on `k` vertices.
    Trees(usize),
    /// `K_n`.
    Complete(usize),
}

impl Target {
    /// Concrete graphs of the family; a color hits the target if any one embeds.
    pub fn members(&self) -> Result<Vec<Graph>> {
        match self {
            Target::Graph(g) => Ok(vec![g.clone()]),
            Target::Trees(k) => generate_trees(*k),
            Target::Complete(n) => Ok(vec![Graph::complete(*n)]),
        }
    }

    /// Parses one item of the grammar `K<n> | P<n> | S<n> | tree<n> | file:<path>`.
    pub fn parse(item: &str) -> Result<Target> {
        let item = item.trim();
        if let Some(path) = item.strip_prefix("file:") {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
            return Ok(Target::Graph(Graph::parse_edge_list(&text)?));
        }
        let (kind, digits) = match item.find(|ch: char| ch.is_ascii_digit()) {
            Some(pos) => item.split_at(pos),
            None => return Err(Error::InvalidInput(format!("bad target {item:?}"))),
        };
        let n: usize = digits
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad target size in {item:?}")))?;
        if n == 0 {
            return Err(Error::InvalidInput(format!("target {item:?} has no vertices")));
        }
        match kind {
            "K" => Ok(Target::Complete(n)),
            "P" => Ok(Target::Graph(Graph::path(n))),
            "S" => Ok(Target::Graph(Graph::star(n))),
            "tree" => Ok(Target::Trees(n)),
            _ => Err(Error::InvalidInput(format!("unknown target kind {kind:?}"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Complete(n) => write!(f, "K{n}"),
            Target::Trees(k) => write!(f, "tree{k}"),
            Target::Graph(g) => {
                let n = g.n_vertices();
                if *g == Graph::path(n) {
                    write!(f, "P{n}")
                } else if *g == Graph::star(n) {
                    write!(f, "S{n}")
                } else {
                    write!(f, "G[")?;
                    for (i, (u, v)) in g.edges().iter().enumerate() {
                        if i > 0 {
                            f.write_str(" ")?;
                        }
                        write!(f, "{u}-{v}")?;
                    }
                    write!(f, "]/{n}")
                }
            }
        }
    }
}

/// One target per color, color `i` at position `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSpec {
    pub targets: Vec<Target>,
}

impl TargetSpec {
    pub fn new(targets: Vec<Target>) -> Self {
        TargetSpec { targets }
    }

    pub fn graphs(graphs: &[Graph]) -> Self {
        TargetSpec::new(graphs.iter().cloned().map(Target::Graph).collect())
    }

    /// Comma-separated list, one item per color.
    pub fn parse(spec: &str) -> Result<TargetSpec> {
        let targets = spec
            .split(',')
            .map(Target::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(TargetSpec { targets })
    }

    pub fn n_colors(&self) -> usize {
        self.targets.len()
    }

    pub(crate) fn expand(&self) -> Result<Vec<Vec<Graph>>> {
        self.targets.iter().map(Target::members).collect()
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.targets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
