//! graph6 encoding (McKay's format) for graphs of up to 64 vertices.
//!
//! Header: one byte `63 + n` for `n <= 62`, otherwise `126` followed by three
//! 6-bit groups. Body: the upper triangle of the adjacency matrix read column
//! by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte
//! big-endian, each byte offset by 63.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_ORDER};

const HEADER: &[u8] = b">>graph6<<";

pub fn to_graph6(g: &SmallGraph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| 63 + x as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

pub fn to_graph6_string(g: &SmallGraph) -> String {
    // graph6 bytes are always printable ASCII
    String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

pub fn from_graph6(s: &[u8]) -> Result<SmallGraph> {
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let s = s.trim_ascii_end();
    let malformed = |why: &'static str| Error::Graph6(why);

    if s.is_empty() {
        return Err(malformed("empty input"));
    }
    if s.iter().any(|b| !(63..=126).contains(b)) {
        return Err(malformed("byte outside the printable range 63..=126"));
    }
    let (n, body) = if s[0] < 126 {
        ((s[0] - 63) as usize, &s[1..])
    } else {
        if s.len() < 4 || s[1] == 126 {
            return Err(malformed("unsupported or truncated long header"));
        }
        let n = s[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &s[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            what: "graph6",
            order: n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(malformed("truncated adjacency data"));
    }
    if body.len() > expected {
        return Err(malformed("trailing bytes after adjacency data"));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    SmallGraph::from_adjacency(adj)
}

/// Writes one graph6 line per graph.
pub fn write_graph6_lines<'a, W, I>(mut w: W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a SmallGraph>,
{
    for g in graphs {
        w.write_all(&to_graph6(g))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads newline-delimited graph6, skipping blank lines.
pub fn read_graph6_lines<R: BufRead>(r: R) -> Result<Vec<SmallGraph>> {
    let mut out = Vec::new();
    for line in r.split(b'\n') {
        let line = line?;
        if line.trim_ascii().is_empty() {
            continue;
        }
        out.push(from_graph6(line.trim_ascii())?);
    }
    Ok(out)
}
