use crate::graph::Graph;
use crate::{Error, Result};

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Decodes one graph in graph6 format. An optional `>>graph6<<` header and a
/// single trailing newline are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(b">>graph6<<") {
        start = 10;
    }
    let mut end = text.len();
    if text[start..end].ends_with(b"\r\n") {
        end -= 2;
    } else if text[start..end].ends_with(b"\n") {
        end -= 1;
    }
    let body = &text[..end];
    let value = |i: usize| -> Result<usize> {
        match body.get(i) {
            None => Err(err(i, "truncated input")),
            Some(&b) if (OFFSET..=LONG).contains(&b) => Ok((b - OFFSET) as usize),
            Some(&b) => Err(err(i, format!("byte 0x{b:02x} outside the graph6 range"))),
        }
    };

    let mut pos = start;
    let n = if body.get(pos) == Some(&LONG) {
        if body.get(pos + 1) == Some(&LONG) {
            let mut n = 0usize;
            for k in 0..6 {
                n = (n << 6) | value(pos + 2 + k)?;
            }
            pos += 8;
            n
        } else {
            let mut n = 0usize;
            for k in 0..3 {
                n = (n << 6) | value(pos + 1 + k)?;
            }
            pos += 4;
            n
        }
    } else {
        let n = value(pos)?;
        if n == 63 {
            return Err(err(pos, "malformed size header"));
        }
        pos += 1;
        n
    };

    let bits = n * n.saturating_sub(1) / 2;
    let chars = bits.div_ceil(6);
    if body.len() < pos + chars {
        return Err(err(body.len(), format!("truncated bit stream: expected {chars} data bytes")));
    }
    if body.len() > pos + chars {
        return Err(err(pos + chars, "unexpected trailing bytes"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = value(pos + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let last = value(pos + chars - 1)?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(pos + chars - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` in graph6 format without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + OFFSET);
    } else if n <= MAX_MEDIUM {
        out.push(LONG);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([LONG, LONG]);
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}
