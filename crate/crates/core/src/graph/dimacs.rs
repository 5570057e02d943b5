use super::{Graph, ParseError};

fn line_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// Parses DIMACS `.col` text: `c` comments, one `p edge <n> <m>` line, and
/// 1-based `e <u> <v>` edges. Repeated edges (common in published instances,
/// which often list both orientations) are merged; the declared edge count
/// is not checked.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        let number =
            |tokens: &mut std::str::SplitWhitespace, what: &str| -> Result<usize, ParseError> {
                let token = tokens
                    .next()
                    .ok_or_else(|| line_err(line_no, format!("missing {what}")))?;
                token
                    .parse::<usize>()
                    .map_err(|_| line_err(line_no, format!("non-integer {what} {token:?}")))
            };
        match kind {
            "c" => {}
            "p" => {
                if order.is_some() {
                    return Err(line_err(line_no, "duplicate problem line"));
                }
                let format = tokens.next().unwrap_or("");
                if format != "edge" && format != "col" {
                    return Err(line_err(line_no, format!("unsupported format {format:?}")));
                }
                let n = number(&mut tokens, "vertex count")?;
                number(&mut tokens, "edge count")?;
                if n == 0 {
                    return Err(ParseError::Empty);
                }
                order = Some(n);
            }
            "e" => {
                let n = order.ok_or_else(|| line_err(line_no, "edge before problem line"))?;
                let u = number(&mut tokens, "vertex")?;
                let v = number(&mut tokens, "vertex")?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(line_err(
                            line_no,
                            format!("vertex {vertex} out of range 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(line_err(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push(((u - 1).min(v - 1), (u - 1).max(v - 1)));
            }
            other => return Err(line_err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let order = order.ok_or(ParseError::Empty)?;
    edges.sort_unstable();
    edges.dedup();
    Graph::new(order, edges).map_err(|e| line_err(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_one_based_edges() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (3, 3));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn merges_repeated_edges() {
        let g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_dimacs("e 1 2\n"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 2 2\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\nx\n"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert_eq!(parse_dimacs("c nothing\n"), Err(ParseError::Empty));
    }
}
