//! Decorated crossingless diagrams: the basis objects of the dicyclic
//! Temperley-Lieb calculus.
//!
//! A diagram is a perfect crossingless matching of `k` bottom and `m` top
//! boundary points. Strands may carry a decoration (a dot, stored as a parity
//! bit since dots cancel in pairs); in a basis diagram every decorated strand
//! must be exposed to the left boundary and the total number of dots is even.

mod render;
mod text;

pub use render::{render, RenderFormat};
pub use text::{format_diagram, parse_diagram};

use crate::error::{DiagramDefect, Error};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A boundary point. `Bottom(i)` and `Top(j)` are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Node {
    Bottom(u8),
    Top(u8),
}

/// One strand: an unordered endpoint pair plus its decoration parity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Strand {
    /// Canonically `ends.0 <= ends.1`.
    pub ends: (Node, Node),
    pub dotted: bool,
}

impl Strand {
    pub fn new(a: Node, b: Node, dotted: bool) -> Self {
        let ends = if a <= b { (a, b) } else { (b, a) };
        Strand { ends, dotted }
    }

    pub(crate) fn kind(&self) -> StrandKind {
        match self.ends {
            (Node::Bottom(a), Node::Bottom(b)) => StrandKind::BottomArc(a, b),
            (Node::Top(a), Node::Top(b)) => StrandKind::TopArc(a, b),
            (Node::Bottom(b), Node::Top(t)) => StrandKind::Through(b, t),
            (Node::Top(_), Node::Bottom(_)) => unreachable!("canonical order"),
        }
    }
}

pub(crate) enum StrandKind {
    /// Arc between two bottom points, indices increasing.
    BottomArc(u8, u8),
    /// Arc between two top points, indices increasing.
    TopArc(u8, u8),
    /// Through strand bottom -> top.
    Through(u8, u8),
}

/// A decorated crossingless matching between `k` bottom and `m` top points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Diagram {
    k: u8,
    m: u8,
    strands: Vec<Strand>,
}

/// A diagram scaled by a power of the circle parameter, or zero. Composition
/// lands here: each closed loop of even decoration parity contributes one
/// factor of delta, and a loop with a surviving dot kills the composite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScaledDiagram {
    Zero,
    Scaled { delta_exponent: u32, diagram: Diagram },
}

impl ScaledDiagram {
    pub fn diagram(&self) -> Option<&Diagram> {
        match self {
            ScaledDiagram::Zero => None,
            ScaledDiagram::Scaled { diagram, .. } => Some(diagram),
        }
    }

    pub fn delta_exponent(&self) -> Option<u32> {
        match self {
            ScaledDiagram::Zero => None,
            ScaledDiagram::Scaled { delta_exponent, .. } => Some(*delta_exponent),
        }
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    /// Canonical order: boundary sizes, then the undecorated matching compared
    /// lexicographically as sorted endpoint pairs, then the decoration set as
    /// a bitmask over strands in left-to-right order.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.m)
            .cmp(&(other.k, other.m))
            .then_with(|| {
                let a = self.strands.iter().map(|s| s.ends);
                let b = other.strands.iter().map(|s| s.ends);
                a.cmp(b)
            })
            .then_with(|| self.dot_mask().cmp(&other.dot_mask()))
    }
}

impl Diagram {
    /// Canonicalize and validate.
    pub fn new(k: u8, m: u8, strands: Vec<Strand>) -> Result<Self, Error> {
        let mut strands = strands;
        strands.sort_by_key(|s| s.ends);
        let d = Diagram { k, m, strands };
        match d.defect() {
            None => Ok(d),
            Some(def) => Err(Error::InvalidDiagram(def)),
        }
    }

    pub fn identity(k: u8) -> Self {
        let strands = (1..=k)
            .map(|i| Strand::new(Node::Bottom(i), Node::Top(i), false))
            .collect();
        Diagram { k, m: k, strands }
    }

    pub fn bottom_count(&self) -> u8 {
        self.k
    }

    pub fn top_count(&self) -> u8 {
        self.m
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn is_decorated(&self) -> bool {
        self.strands.iter().any(|s| s.dotted)
    }

    pub fn dot_mask(&self) -> u64 {
        self.strands
            .iter()
            .enumerate()
            .fold(0, |acc, (i, s)| acc | ((s.dotted as u64) << i))
    }

    /// All four invariants; `None` when valid, otherwise the first defect in
    /// checking order.
    pub fn defect(&self) -> Option<DiagramDefect> {
        let total = self.k as usize + self.m as usize;
        if self.strands.len() * 2 != total {
            return Some(DiagramDefect::NotAMatching);
        }
        let mut seen = vec![false; total];
        for s in &self.strands {
            for n in [s.ends.0, s.ends.1] {
                let idx = match n {
                    Node::Bottom(i) if (1..=self.k).contains(&i) => i as usize - 1,
                    Node::Top(j) if (1..=self.m).contains(&j) => self.k as usize + j as usize - 1,
                    _ => return Some(DiagramDefect::NotAMatching),
                };
                if seen[idx] {
                    return Some(DiagramDefect::NotAMatching);
                }
                seen[idx] = true;
            }
        }
        // crossingless in the cyclic order B1..Bk, Tm..T1
        let pos = |n: Node| -> usize {
            match n {
                Node::Bottom(i) => i as usize - 1,
                Node::Top(j) => self.k as usize + (self.m as usize - j as usize),
            }
        };
        let mut intervals: Vec<(usize, usize)> = self
            .strands
            .iter()
            .map(|s| {
                let (p, q) = (pos(s.ends.0), pos(s.ends.1));
                if p < q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        intervals.sort_unstable();
        for (a, s) in intervals.iter().enumerate() {
            for t in &intervals[a + 1..] {
                if s.0 < t.0 && t.0 < s.1 && s.1 < t.1 {
                    return Some(DiagramDefect::Crossing);
                }
            }
        }
        if self.strands.iter().filter(|s| s.dotted).count() % 2 != 0 {
            return Some(DiagramDefect::OddDecorations);
        }
        let exposed = self.exposed_flags();
        for (s, e) in self.strands.iter().zip(&exposed) {
            if s.dotted && !e {
                return Some(DiagramDefect::UnexposedDecoration);
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.defect().is_none()
    }

    /// Exposure flag per strand, aligned with `strands()`.
    ///
    /// A strand is exposed when it can be isotoped to touch the left wall:
    /// the through strand of minimal bottom index; a bottom arc lying left of
    /// every through strand and not nested inside another bottom arc; dually
    /// for top arcs.
    pub fn exposed_flags(&self) -> Vec<bool> {
        let mut min_through_bottom: Option<u8> = None;
        let mut min_through_top: Option<u8> = None;
        for s in &self.strands {
            if let StrandKind::Through(b, t) = s.kind() {
                min_through_bottom = Some(min_through_bottom.map_or(b, |x| x.min(b)));
                min_through_top = Some(min_through_top.map_or(t, |x| x.min(t)));
            }
        }
        self.strands
            .iter()
            .map(|s| match s.kind() {
                StrandKind::Through(b, _) => Some(b) == min_through_bottom,
                StrandKind::BottomArc(a, b) => {
                    min_through_bottom.map_or(true, |t| b < t)
                        && !self.strands.iter().any(|o| match o.kind() {
                            StrandKind::BottomArc(c, d) => c < a && b < d,
                            _ => false,
                        })
                }
                StrandKind::TopArc(a, b) => {
                    min_through_top.map_or(true, |t| b < t)
                        && !self.strands.iter().any(|o| match o.kind() {
                            StrandKind::TopArc(c, d) => c < a && b < d,
                            _ => false,
                        })
                }
            })
            .collect()
    }

    /// Whether the strand with the given endpoints can reach the left wall.
    pub fn is_left_exposed(&self, ends: (Node, Node)) -> Result<bool, Error> {
        let ends = if ends.0 <= ends.1 {
            ends
        } else {
            (ends.1, ends.0)
        };
        let idx = self
            .strands
            .iter()
            .position(|s| s.ends == ends)
            .ok_or(Error::StrandNotInDiagram)?;
        Ok(self.exposed_flags()[idx])
    }

    /// Swap bottom and top boundaries, keeping decorations.
    pub fn vertical_flip(&self) -> Diagram {
        let strands = self
            .strands
            .iter()
            .map(|s| {
                let f = |n: Node| match n {
                    Node::Bottom(i) => Node::Top(i),
                    Node::Top(j) => Node::Bottom(j),
                };
                Strand::new(f(s.ends.0), f(s.ends.1), s.dotted)
            })
            .collect();
        let mut d = Diagram {
            k: self.m,
            m: self.k,
            strands,
        };
        d.strands.sort_by_key(|s| s.ends);
        debug_assert!(d.is_valid());
        d
    }

    /// Place `g` (undecorated) to the right of `self`, shifting indices.
    pub fn juxtapose_undecorated_right(&self, g: &Diagram) -> Result<Diagram, Error> {
        if g.is_decorated() {
            return Err(Error::JuxtaposeDecorated);
        }
        let mut strands = self.strands.clone();
        for s in &g.strands {
            let shift = |n: Node| match n {
                Node::Bottom(i) => Node::Bottom(i + self.k),
                Node::Top(j) => Node::Top(j + self.m),
            };
            strands.push(Strand::new(shift(s.ends.0), shift(s.ends.1), false));
        }
        Diagram::new(self.k + g.k, self.m + g.m, strands)
    }
}

/// Stack `top` over `bottom` (so the result is `top` after `bottom`), trace
/// composite strands, reduce decoration parities, and collect closed loops.
pub fn compose_diagrams(top: &Diagram, bottom: &Diagram) -> Result<ScaledDiagram, Error> {
    if bottom.m != top.k {
        return Err(Error::BoundaryMismatch {
            expected: bottom.m as usize,
            found: top.k as usize,
        });
    }
    let k = bottom.k as usize;
    let j = bottom.m as usize;
    let m = top.m as usize;
    // node ids: final bottom 0..k, interface k..k+j, final top k+j..k+j+m
    let total = k + j + m;
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); total];
    {
        let mut add_edge = |a: usize, b: usize, dotted: bool| {
            adj[a].push((b, dotted));
            adj[b].push((a, dotted));
        };
        for s in &bottom.strands {
            let map = |n: Node| match n {
                Node::Bottom(i) => i as usize - 1,
                Node::Top(i) => k + i as usize - 1,
            };
            add_edge(map(s.ends.0), map(s.ends.1), s.dotted);
        }
        for s in &top.strands {
            let map = |n: Node| match n {
                Node::Bottom(i) => k + i as usize - 1,
                Node::Top(i) => k + j + i as usize - 1,
            };
            add_edge(map(s.ends.0), map(s.ends.1), s.dotted);
        }
    }
    let boundary = |n: usize| n < k || n >= k + j;
    let as_node = |n: usize| -> Node {
        if n < k {
            Node::Bottom(n as u8 + 1)
        } else {
            Node::Top((n - k - j) as u8 + 1)
        }
    };
    let mut visited = vec![false; total];
    let mut strands = Vec::new();
    for start in (0..total).filter(|&n| boundary(n)) {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let (mut cur, d0) = adj[start][0];
        let mut parity = d0;
        let mut prev = start;
        while !boundary(cur) {
            visited[cur] = true;
            let (a, da) = adj[cur][0];
            let (b, db) = adj[cur][1];
            let (next, d) = if a == prev { (b, db) } else { (a, da) };
            prev = cur;
            cur = next;
            parity ^= d;
        }
        visited[cur] = true;
        strands.push(Strand::new(as_node(start), as_node(cur), parity));
    }
    let mut delta_exponent = 0u32;
    for start in k..k + j {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let (mut cur, d0) = adj[start][0];
        let mut parity = d0;
        let mut prev = start;
        while cur != start {
            visited[cur] = true;
            let (a, da) = adj[cur][0];
            let (b, db) = adj[cur][1];
            let (next, d) = if a == prev { (b, db) } else { (a, da) };
            prev = cur;
            cur = next;
            parity ^= d;
        }
        if parity {
            return Ok(ScaledDiagram::Zero);
        }
        delta_exponent += 1;
    }
    let diagram = Diagram::new(bottom.k, top.m, strands).map_err(|e| match e {
        Error::InvalidDiagram(d) => Error::CompositionClosure(d),
        other => other,
    })?;
    Ok(ScaledDiagram::Scaled {
        delta_exponent,
        diagram,
    })
}

/// All valid diagrams in `Hom(k, m)`, each exactly once, in canonical order.
/// Empty when `k + m` is odd.
pub fn enumerate_basis(k: u8, m: u8) -> Vec<Diagram> {
    let total = k as usize + m as usize;
    if total % 2 != 0 {
        return Vec::new();
    }
    if total == 0 {
        return vec![Diagram {
            k,
            m,
            strands: Vec::new(),
        }];
    }
    // linear positions around the boundary: B1..Bk then Tm..T1
    let as_node = |p: usize| -> Node {
        if p < k as usize {
            Node::Bottom(p as u8 + 1)
        } else {
            Node::Top((total - p) as u8)
        }
    };
    let mut matchings: Vec<Vec<(Node, Node)>> = Vec::new();
    let mut used = vec![false; total];
    let mut acc = Vec::new();
    noncrossing_backtrack(total, &mut used, &mut acc, &mut |pairs| {
        let mut shape: Vec<(Node, Node)> = pairs
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (as_node(p), as_node(q));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        shape.sort_unstable();
        matchings.push(shape);
    });
    matchings.sort_unstable();
    let mut out = Vec::new();
    for shape in matchings {
        let plain = Diagram {
            k,
            m,
            strands: shape
                .iter()
                .map(|&(a, b)| Strand::new(a, b, false))
                .collect(),
        };
        let exposed: Vec<usize> = plain
            .exposed_flags()
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.then_some(i))
            .collect();
        for mask in 0..(1u64 << exposed.len()) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            let mut d = plain.clone();
            for (bit, &si) in exposed.iter().enumerate() {
                d.strands[si].dotted = mask >> bit & 1 == 1;
            }
            debug_assert!(d.is_valid());
            out.push(d);
        }
    }
    out
}

/// Backtracking over noncrossing perfect matchings of `0..total`: always close
/// the leftmost open point. Its partner must be reachable without jumping an
/// already matched point, and must leave an even gap.
fn noncrossing_backtrack(
    total: usize,
    used: &mut Vec<bool>,
    acc: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    let Some(first) = (0..total).find(|&p| !used[p]) else {
        emit(acc);
        return;
    };
    used[first] = true;
    for q in first + 1..total {
        if used[q] {
            break;
        }
        if (q - first - 1) % 2 != 0 {
            continue;
        }
        used[q] = true;
        acc.push((first, q));
        noncrossing_backtrack(total, used, acc, emit);
        acc.pop();
        used[q] = false;
    }
    used[first] = false;
}

#[cfg(test)]
mod tests;
