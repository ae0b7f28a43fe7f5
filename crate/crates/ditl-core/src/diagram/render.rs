//! Deterministic pictures of diagrams: ascii, TikZ, or SVG. Dots are drawn at
//! strand midpoints, matching the filled-circle style of the calculus.

use crate::diagram::{Diagram, Node, StrandKind};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Ascii,
    Tikz,
    Svg,
}

pub fn render(d: &Diagram, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => ascii(d),
        RenderFormat::Tikz => tikz(d),
        RenderFormat::Svg => svg(d),
    }
}

/// Character-grid picture. Bottom points sit on the last row, top points on
/// the first; through strands are drawn with `|`, `/`, `\`, arcs with
/// underscores, dots with `*`.
fn ascii(d: &Diagram) -> String {
    let cols = 4 * d.bottom_count().max(d.top_count()).max(1) as usize;
    let height = 6usize;
    let mut grid = vec![vec![b' '; cols]; height];
    let col_of = |n: Node| -> usize {
        match n {
            Node::Bottom(i) | Node::Top(i) => 4 * (i as usize - 1) + 1,
        }
    };
    for s in d.strands() {
        match s.kind() {
            StrandKind::Through(b, t) => {
                let (cb, ct) = (col_of(Node::Bottom(b)), col_of(Node::Top(t)));
                for (step, row) in (0..height).rev().enumerate() {
                    let c = cb as i64 + (ct as i64 - cb as i64) * step as i64 / (height as i64 - 1);
                    let ch = if ct == cb {
                        b'|'
                    } else if ct > cb {
                        b'/'
                    } else {
                        b'\\'
                    };
                    grid[row][c as usize] = ch;
                }
                if s.dotted {
                    grid[height / 2][(cb + ct) / 2] = b'*';
                }
            }
            StrandKind::BottomArc(a, b) => {
                let (ca, cb) = (col_of(Node::Bottom(a)), col_of(Node::Bottom(b)));
                grid[height - 1][ca] = b'|';
                grid[height - 1][cb] = b'|';
                for c in ca..=cb {
                    grid[height - 2][c] = if c == ca {
                        b'\\'
                    } else if c == cb {
                        b'/'
                    } else {
                        b'_'
                    };
                }
                if s.dotted {
                    grid[height - 2][(ca + cb) / 2] = b'*';
                }
            }
            StrandKind::TopArc(a, b) => {
                let (ca, cb) = (col_of(Node::Top(a)), col_of(Node::Top(b)));
                grid[0][ca] = b'|';
                grid[0][cb] = b'|';
                for c in ca..=cb {
                    grid[1][c] = if c == ca {
                        b'/'
                    } else if c == cb {
                        b'\\'
                    } else {
                        b'_'
                    };
                }
                if s.dotted {
                    grid[1][(ca + cb) / 2] = b'*';
                }
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.iter().map(|&b| b as char).collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn coords(d: &Diagram, n: Node) -> (f32, f32) {
    let _ = d;
    match n {
        Node::Bottom(i) => ((i as f32 - 1.0), 0.0),
        Node::Top(j) => ((j as f32 - 1.0), 2.0),
    }
}

fn mid_of(d: &Diagram, s: &crate::diagram::Strand) -> (f32, f32) {
    let (x0, y0) = coords(d, s.ends.0);
    let (x1, y1) = coords(d, s.ends.1);
    match s.kind() {
        StrandKind::Through(..) => ((x0 + x1) / 2.0, (y0 + y1) / 2.0),
        StrandKind::BottomArc(..) => ((x0 + x1) / 2.0, 0.75),
        StrandKind::TopArc(..) => ((x0 + x1) / 2.0, 1.25),
    }
}

fn tikz(d: &Diagram) -> String {
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    for s in d.strands() {
        let (x0, y0) = coords(d, s.ends.0);
        let (x1, y1) = coords(d, s.ends.1);
        let path = match s.kind() {
            StrandKind::Through(..) => {
                format!("\\draw ({x0:.2},{y0:.2}) -- ({x1:.2},{y1:.2});")
            }
            StrandKind::BottomArc(..) | StrandKind::TopArc(..) => {
                let bend = if matches!(s.kind(), StrandKind::BottomArc(..)) {
                    1.0
                } else {
                    -1.0
                };
                format!(
                    "\\draw ({x0:.2},{y0:.2}) .. controls ({x0:.2},{:.2}) and ({x1:.2},{:.2}) .. ({x1:.2},{y1:.2});",
                    y0 + bend,
                    y1 + bend
                )
            }
        };
        out.push_str(&path);
        out.push('\n');
        if s.dotted {
            let (mx, my) = mid_of(d, s);
            writeln!(out, "\\fill ({mx:.2},{my:.2}) circle (2.5pt);").expect("write");
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

fn svg(d: &Diagram) -> String {
    let unit = 30.0f32;
    let w = (d.bottom_count().max(d.top_count()).max(1) as f32) * unit + 20.0;
    let to_px = |(x, y): (f32, f32)| (10.0 + x * unit, 10.0 + (2.0 - y) * unit);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"80\" viewBox=\"0 0 {w:.0} 80\">\n"
    );
    let mut dots: Vec<(f32, f32)> = Vec::new();
    for s in d.strands() {
        let (x0, y0) = to_px(coords(d, s.ends.0));
        let (x1, y1) = to_px(coords(d, s.ends.1));
        match s.kind() {
            StrandKind::Through(..) => {
                writeln!(
                    out,
                    "  <path d=\"M {x0:.1} {y0:.1} L {x1:.1} {y1:.1}\" fill=\"none\" stroke=\"black\"/>"
                )
                .expect("write");
            }
            StrandKind::BottomArc(..) | StrandKind::TopArc(..) => {
                let bend = if matches!(s.kind(), StrandKind::BottomArc(..)) {
                    -unit
                } else {
                    unit
                };
                writeln!(
                    out,
                    "  <path d=\"M {x0:.1} {y0:.1} C {x0:.1} {:.1}, {x1:.1} {:.1}, {x1:.1} {y1:.1}\" fill=\"none\" stroke=\"black\"/>",
                    y0 + bend,
                    y1 + bend
                )
                .expect("write");
            }
        }
        if s.dotted {
            dots.push(to_px(mid_of(d, s)));
        }
    }
    for (x, y) in dots {
        writeln!(out, "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"3\"/>").expect("write");
    }
    out.push_str("</svg>\n");
    out
}
