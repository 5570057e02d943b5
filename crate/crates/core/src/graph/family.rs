//! Named graph families and the `kind:p1,p2,...` mini-grammar.
//!
//! ```text
//! path:5  cycle:6  complete:4  star:5           (star:n has order n)
//! complete-multipartite:1,2,2   multipartite:…  complete-bipartite:2,3
//! equal-multipartite:n,r        (r parts of size n)
//! caterpillar:2,0,1             (spine of 3, leaves per spine vertex)
//! thorn(cycle:4;2)              (m pendants on every base vertex)
//! thorn(path:3;1,0,2)           (per-vertex pendant counts)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Pendant vertices attached by the thorn construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pendants {
    Uniform(usize),
    PerVertex(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n-1}`; the parameter is the order.
    Star(usize),
    /// Part sizes, ascending.
    CompleteMultipartite(Vec<usize>),
    /// Leaf counts per spine vertex.
    Caterpillar(Vec<usize>),
    Thorn {
        base: Box<FamilySpec>,
        pendants: Pendants,
    },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamily(msg.into())
}

impl FamilySpec {
    pub fn complete_multipartite(mut sizes: Vec<usize>) -> Result<Self, GraphError> {
        sizes.sort_unstable();
        let spec = FamilySpec::CompleteMultipartite(sizes);
        spec.validate()?;
        Ok(spec)
    }

    pub fn thorn(base: FamilySpec, pendants: Pendants) -> Result<Self, GraphError> {
        let spec = FamilySpec::Thorn {
            base: Box::new(base),
            pendants,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) => {
                if *n == 0 {
                    return Err(invalid("order must be at least 1"));
                }
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs at least 3 vertices"));
                }
            }
            FamilySpec::CompleteMultipartite(sizes) => {
                if sizes.is_empty() || sizes.contains(&0) {
                    return Err(invalid("part sizes must be positive"));
                }
                if sizes.windows(2).any(|w| w[0] > w[1]) {
                    return Err(invalid("part sizes must be sorted ascending"));
                }
            }
            FamilySpec::Caterpillar(legs) => {
                if legs.is_empty() {
                    return Err(invalid("caterpillar spine must be non-empty"));
                }
            }
            FamilySpec::Thorn { base, pendants } => {
                if matches!(**base, FamilySpec::Thorn { .. }) {
                    return Err(invalid("thorn bases cannot themselves be thorn graphs"));
                }
                base.validate()?;
                if let Pendants::PerVertex(counts) = pendants {
                    if counts.len() != base.order() {
                        return Err(invalid(format!(
                            "{} pendant counts for a base of order {}",
                            counts.len(),
                            base.order()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n) => *n,
            FamilySpec::CompleteMultipartite(sizes) => sizes.iter().sum(),
            FamilySpec::Caterpillar(legs) => legs.len() + legs.iter().sum::<usize>(),
            FamilySpec::Thorn { base, pendants } => {
                let n = base.order();
                n + match pendants {
                    Pendants::Uniform(m) => n * m,
                    Pendants::PerVertex(counts) => counts.iter().sum(),
                }
            }
        }
    }
}

/// Builds the graph described by `spec`.
///
/// Vertex layout: paths and cycles run `0..n` in order; the star center is
/// `0`; multipartite parts occupy consecutive blocks in ascending size
/// order; caterpillar spine vertices come first, followed by each spine
/// vertex's leaves as one block. Thorn graphs keep base indices `0..n` and
/// append the pendants of base vertex `i` as a contiguous block, in `i`
/// order.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.order();
    let edges: Vec<(usize, usize)> = match spec {
        FamilySpec::Path(n) => (1..*n).map(|i| (i - 1, i)).collect(),
        FamilySpec::Cycle(n) => (0..*n).map(|i| (i, (i + 1) % n)).collect(),
        FamilySpec::Complete(n) => (0..*n)
            .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
            .collect(),
        FamilySpec::Star(n) => (1..*n).map(|i| (0, i)).collect(),
        FamilySpec::CompleteMultipartite(sizes) => {
            let mut part = Vec::with_capacity(n);
            for (p, &size) in sizes.iter().enumerate() {
                part.extend(std::iter::repeat_n(p, size));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
        FamilySpec::Caterpillar(legs) => {
            let spine = legs.len();
            let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
            let mut next = spine;
            for (s, &count) in legs.iter().enumerate() {
                for _ in 0..count {
                    edges.push((s, next));
                    next += 1;
                }
            }
            edges
        }
        FamilySpec::Thorn { base, pendants } => {
            let base_graph = generate(base)?;
            let base_order = base_graph.order();
            let mut edges = base_graph.edges().to_vec();
            let mut next = base_order;
            for v in 0..base_order {
                let count = match pendants {
                    Pendants::Uniform(m) => *m,
                    Pendants::PerVertex(counts) => counts[v],
                };
                for _ in 0..count {
                    edges.push((v, next));
                    next += 1;
                }
            }
            edges
        }
    };
    Graph::new(n, edges)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::CompleteMultipartite(sizes) => {
                write!(f, "complete-multipartite:{}", join(sizes))
            }
            FamilySpec::Caterpillar(legs) => write!(f, "caterpillar:{}", join(legs)),
            FamilySpec::Thorn { base, pendants } => match pendants {
                Pendants::Uniform(m) => write!(f, "thorn({base};{m})"),
                Pendants::PerVertex(counts) => write!(f, "thorn({base};{})", join(counts)),
            },
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>, GraphError> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

fn single(kind: &str, params: &[usize]) -> Result<usize, GraphError> {
    match params {
        [n] => Ok(*n),
        _ => Err(invalid(format!("{kind} takes exactly one parameter"))),
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix("thorn(") {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| invalid("thorn spec must end with ')'"))?;
            let (base, pendants) = inner
                .rsplit_once(';')
                .ok_or_else(|| invalid("thorn spec needs 'base;m'"))?;
            let base: FamilySpec = base.parse()?;
            let counts = parse_list(pendants)?;
            let pendants = match counts.as_slice() {
                [m] if base.order() != 1 => Pendants::Uniform(*m),
                _ => Pendants::PerVertex(counts),
            };
            return FamilySpec::thorn(base, pendants);
        }
        let (kind, params) = text
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected kind:params, got {text:?}")))?;
        let params = parse_list(params)?;
        let spec = match kind {
            "path" => FamilySpec::Path(single(kind, &params)?),
            "cycle" => FamilySpec::Cycle(single(kind, &params)?),
            "complete" => FamilySpec::Complete(single(kind, &params)?),
            "star" => FamilySpec::Star(single(kind, &params)?),
            "complete-multipartite" | "multipartite" => {
                return FamilySpec::complete_multipartite(params)
            }
            "complete-bipartite" => {
                if params.len() != 2 {
                    return Err(invalid("complete-bipartite takes exactly two part sizes"));
                }
                return FamilySpec::complete_multipartite(params);
            }
            "equal-multipartite" => match params.as_slice() {
                [n, r] => return FamilySpec::complete_multipartite(vec![*n; *r]),
                _ => return Err(invalid("equal-multipartite takes n,r")),
            },
            "caterpillar" => FamilySpec::Caterpillar(params),
            other => return Err(invalid(format!("unknown family kind {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
