//! The diagram literal format:
//! `k=<int> m=<int> : B1-T1 B2-B3* ...`
//! where each pair names two boundary points and a trailing `*` marks a
//! decorated strand. Bijective with valid diagrams.

use crate::diagram::{Diagram, Node, Strand};
use crate::error::Error;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

pub fn format_diagram(d: &Diagram) -> String {
    let mut out = format!("k={} m={} :", d.bottom_count(), d.top_count());
    for s in d.strands() {
        let node = |n: Node| match n {
            Node::Bottom(i) => format!("B{i}"),
            Node::Top(j) => format!("T{j}"),
        };
        write!(
            out,
            " {}-{}{}",
            node(s.ends.0),
            node(s.ends.1),
            if s.dotted { "*" } else { "" }
        )
        .expect("write to string");
    }
    out
}

pub fn parse_diagram(text: &str) -> Result<Diagram, Error> {
    let text = text.trim();
    let (header, body) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse("missing `:`".to_string()))?;
    let mut k: Option<u8> = None;
    let mut m: Option<u8> = None;
    for field in header.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field `{field}`")))?;
        let value: u8 = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad count `{value}`")))?;
        match key {
            "k" => k = Some(value),
            "m" => m = Some(value),
            _ => return Err(Error::Parse(format!("unknown header key `{key}`"))),
        }
    }
    let (k, m) = (
        k.ok_or_else(|| Error::Parse("missing k".to_string()))?,
        m.ok_or_else(|| Error::Parse("missing m".to_string()))?,
    );
    let mut strands = Vec::new();
    for pair in body.split_whitespace() {
        let (pair, dotted) = match pair.strip_suffix('*') {
            Some(p) => (p, true),
            None => (pair, false),
        };
        let (a, b) = pair
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("bad pair `{pair}`")))?;
        strands.push(Strand::new(parse_node(a)?, parse_node(b)?, dotted));
    }
    Diagram::new(k, m, strands)
}

fn parse_node(s: &str) -> Result<Node, Error> {
    let (side, idx) = s.split_at(1);
    let idx: u8 = idx
        .parse()
        .map_err(|_| Error::Parse(format!("bad endpoint `{s}`")))?;
    match side {
        "B" => Ok(Node::Bottom(idx)),
        "T" => Ok(Node::Top(idx)),
        _ => Err(Error::Parse(format!("bad endpoint `{s}`"))),
    }
}
