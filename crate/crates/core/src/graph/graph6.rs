//! graph6 encoding: the order followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::{Graph, ParseError};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    match body.first() {
        None => return Err(err(skip, "missing order")),
        Some(b':') => return Err(err(skip, "sparse6 input is not supported")),
        Some(b'&') => return Err(err(skip, "digraph6 input is not supported")),
        Some(_) => {}
    }
    if let Some(pos) = body.iter().position(|b| !(BIAS..=BIAS + 63).contains(b)) {
        return Err(err(
            skip + pos,
            format!("byte 0x{:02x} out of range", body[pos]),
        ));
    }

    let (order, header_len) =
        decode_order(body).map_err(|pos| err(skip + pos, "truncated order"))?;
    if order == 0 {
        return Err(err(skip, "graph has no vertices"));
    }
    let bits = order * (order - 1) / 2;
    let data = &body[header_len..];
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(err(skip + body.len(), "truncated bit-vector"));
    }
    if data.len() > expected {
        return Err(err(skip + header_len + expected, "trailing data"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[k / 6] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(skip + header_len + k / 6, "nonzero padding bits"));
        }
    }
    Graph::new(order, edges).map_err(|e| err(skip, e.to_string()))
}

/// Returns the order and the number of header bytes, or the offset where
/// the header was cut short.
fn decode_order(body: &[u8]) -> Result<(usize, usize), usize> {
    let six = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    if body[0] != 126 {
        return Ok((usize::from(body[0] - BIAS), 1));
    }
    if body.get(1) == Some(&126) {
        if body.len() < 8 {
            return Err(body.len());
        }
        return Ok((six(&body[2..8]), 8));
    }
    if body.len() < 4 {
        return Err(body.len());
    }
    Ok((six(&body[1..4]), 4))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    let push_six = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_six(&mut out, n, 3);
    } else {
        out.push(126);
        out.push(126);
        push_six(&mut out, n, 6);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
