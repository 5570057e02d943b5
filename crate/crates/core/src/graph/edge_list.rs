use super::{Graph, ParseError};

fn line_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// Parses whitespace-separated `u v` pairs, one per line, with an optional
/// `n=<k>` first line. Blank lines and `#` comments are skipped. Without the
/// header the order is one more than the largest vertex id.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if seen_content {
                return Err(line_err(line_no, "order header must be the first line"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| line_err(line_no, format!("invalid order {:?}", rest.trim())))?;
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let mut tokens = line.split_whitespace();
        let mut next_id = || -> Result<usize, ParseError> {
            let token = tokens
                .next()
                .ok_or_else(|| line_err(line_no, "expected two vertex ids"))?;
            token
                .parse::<usize>()
                .map_err(|_| line_err(line_no, format!("non-integer token {token:?}")))
        };
        let u = next_id()?;
        let v = next_id()?;
        if tokens.next().is_some() {
            return Err(line_err(line_no, "expected two vertex ids"));
        }
        if u == v {
            return Err(line_err(line_no, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(line_err(
                    line_no,
                    format!("vertex {} out of range for order {n}", u.max(v)),
                ));
            }
        }
        edges.push((u.min(v), u.max(v), line_no));
    }

    let order = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0),
    };
    if order == 0 {
        return Err(ParseError::Empty);
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
            let line = w[0].2.max(w[1].2);
            return Err(line_err(
                line,
                format!("duplicate edge {} {}", w[0].0, w[0].1),
            ));
        }
    }
    Graph::new(order, edges.into_iter().map(|(u, v, _)| (u, v)))
        .map_err(|e| line_err(0, e.to_string()))
}

/// Edge-list text with an `n=<k>` header, so isolated vertices survive.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_and_without_header() {
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((p3.order(), p3.size()), (3, 2));
        let g = parse_edge_list("n=4\n0 1\n").unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        let commented = parse_edge_list("# comment\n\n0 1 # trailing\n").unwrap();
        assert_eq!(commented.size(), 1);
        assert_eq!(parse_edge_list("n=1").unwrap().order(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 1\n1 0"),
            Err(ParseError::Line {
                line: 2,
                message: "duplicate edge 0 1".into()
            })
        );
        assert!(matches!(
            parse_edge_list("0 1\n2 2"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0 1\n1 3"),
            Err(ParseError::Line { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn=3"),
            Err(ParseError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert_eq!(parse_edge_list(""), Err(ParseError::Empty));
    }

    #[test]
    fn serializes_with_header() {
        let g = parse_edge_list("n=4\n2 1\n").unwrap();
        assert_eq!(to_edge_list(&g), "n=4\n1 2\n");
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
