//! Linear combinations of basis diagrams: the hom-spaces of the dicyclic
//! Temperley-Lieb category over an exact scalar ring, with a fixed circle
//! parameter delta.

use crate::diagram::{compose_diagrams, format_diagram, Diagram, Node, ScaledDiagram, Strand};
use crate::error::Error;
use crate::scalar::Ring;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// A finite linear combination of basis diagrams in `Hom(k, m)`.
///
/// Zero coefficients are dropped eagerly, so structural equality of the term
/// maps is the canonical equality test.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<R: Ring> {
    ring: R,
    k: u8,
    m: u8,
    delta: R::Elem,
    terms: BTreeMap<Diagram, R::Elem>,
}

impl<R: Ring> Element<R> {
    pub fn zero(ring: R, delta: R::Elem, k: u8, m: u8) -> Self {
        Element {
            ring,
            k,
            m,
            delta,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(ring: R, delta: R::Elem, d: Diagram, coeff: R::Elem) -> Self {
        let mut e = Element::zero(ring, delta, d.bottom_count(), d.top_count());
        e.add_term(d, coeff);
        e
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn bottom_count(&self) -> u8 {
        self.k
    }

    pub fn top_count(&self) -> u8 {
        self.m
    }

    pub fn delta(&self) -> &R::Elem {
        &self.delta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> R::Elem {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, d: Diagram, coeff: R::Elem) {
        debug_assert_eq!((d.bottom_count(), d.top_count()), (self.k, self.m));
        let ring = self.ring.clone();
        match self.terms.get_mut(&d) {
            Some(entry) => {
                *entry = ring.add(entry, &coeff);
                if ring.is_zero(entry) {
                    self.terms.remove(&d);
                }
            }
            None => {
                if !ring.is_zero(&coeff) {
                    self.terms.insert(d, coeff);
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compat(other)?;
        if (self.k, self.m) != (other.k, other.m) {
            return Err(Error::BoundaryMismatch {
                expected: self.k as usize,
                found: other.k as usize,
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_map(|r, c| r.neg(c))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.scale_map(|r, x| r.mul(x, c))
    }

    fn scale_map(&self, f: impl Fn(&R, &R::Elem) -> R::Elem) -> Self {
        let mut out = Element::zero(self.ring.clone(), self.delta.clone(), self.k, self.m);
        for (d, c) in &self.terms {
            let v = f(&self.ring, c);
            if !self.ring.is_zero(&v) {
                out.terms.insert(d.clone(), v);
            }
        }
        out
    }

    /// Composite `self . f` (apply `f` first). Boundary contract:
    /// `f.top_count() == self.bottom_count()`.
    pub fn multiply(&self, f: &Self) -> Result<Self, Error> {
        self.check_compat(f)?;
        if f.m != self.k {
            return Err(Error::BoundaryMismatch {
                expected: f.m as usize,
                found: self.k as usize,
            });
        }
        let ring = self.ring.clone();
        let mut out = Element::zero(ring.clone(), self.delta.clone(), f.k, self.m);
        for (dg, cg) in &self.terms {
            for (df, cf) in &f.terms {
                match compose_diagrams(dg, df)? {
                    ScaledDiagram::Zero => {}
                    ScaledDiagram::Scaled {
                        delta_exponent,
                        diagram,
                    } => {
                        let mut c = ring.mul(cg, cf);
                        if delta_exponent > 0 {
                            c = ring.mul(&c, &ring.pow(&self.delta, delta_exponent));
                        }
                        out.add_term(diagram, c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Monoidal product, fast path: bilinear juxtaposition, valid whenever the
    /// right factor is undecorated. Decorated right factors go through the
    /// matrix functor (see [`crate::functor::tensor`]).
    pub fn tensor_undecorated(&self, g: &Self) -> Result<Self, Error> {
        self.check_compat(g)?;
        let mut out = Element::zero(
            self.ring.clone(),
            self.delta.clone(),
            self.k + g.k,
            self.m + g.m,
        );
        for (df, cf) in &self.terms {
            for (dg, cg) in &g.terms {
                let d = df.juxtapose_undecorated_right(dg)?;
                out.add_term(d, self.ring.mul(cf, cg));
            }
        }
        Ok(out)
    }

    /// Diagram-wise vertical flip with unchanged coefficients; an
    /// anti-homomorphism.
    pub fn involution(&self) -> Self {
        let mut out = Element::zero(self.ring.clone(), self.delta.clone(), self.m, self.k);
        for (d, c) in &self.terms {
            out.terms.insert(d.vertical_flip(), c.clone());
        }
        out
    }

    /// Rotate the last bottom strand up: `Hom(k, m) -> Hom(k-1, m+1)`.
    pub fn bend_right(&self) -> Result<Self, Error> {
        if self.k == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let id1 = identity(self.ring.clone(), self.delta.clone(), 1);
        let whiskered = self.tensor_undecorated(&id1)?;
        let birth = cap(
            self.ring.clone(),
            self.delta.clone(),
            self.k as usize,
            self.k as usize + 1,
        )?;
        whiskered.multiply(&birth)
    }

    /// Inverse of [`Element::bend_right`]: `Hom(k, m) -> Hom(k+1, m-1)`.
    pub fn unbend_right(&self) -> Result<Self, Error> {
        if self.m == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let id1 = identity(self.ring.clone(), self.delta.clone(), 1);
        let whiskered = self.tensor_undecorated(&id1)?;
        let death = cup(
            self.ring.clone(),
            self.delta.clone(),
            self.m as usize,
            self.m as usize + 1,
        )?;
        death.multiply(&whiskered)
    }
}

/// The identity of `End(k)`.
pub fn identity<R: Ring>(ring: R, delta: R::Elem, k: u8) -> Element<R> {
    let one = ring.one();
    Element::from_diagram(ring, delta, Diagram::identity(k), one)
}

fn arc_positions(i: usize, k: usize) -> Result<(), Error> {
    if i < 1 || i + 1 > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: k.saturating_sub(1),
        });
    }
    Ok(())
}

/// Evaluation at spot `i`: `Hom(k, k-2)`, an arc joining bottom `i, i+1`.
pub fn cup<R: Ring>(ring: R, delta: R::Elem, i: usize, k: usize) -> Result<Element<R>, Error> {
    arc_positions(i, k)?;
    let mut strands = alloc::vec![Strand::new(
        Node::Bottom(i as u8),
        Node::Bottom(i as u8 + 1),
        false
    )];
    for j in 1..=k {
        if j == i || j == i + 1 {
            continue;
        }
        let t = if j < i { j } else { j - 2 };
        strands.push(Strand::new(Node::Bottom(j as u8), Node::Top(t as u8), false));
    }
    let d = Diagram::new(k as u8, k as u8 - 2, strands)?;
    let one = ring.one();
    Ok(Element::from_diagram(ring, delta, d, one))
}

/// Coevaluation at spot `i`: `Hom(k-2, k)`, an arc joining top `i, i+1`.
pub fn cap<R: Ring>(ring: R, delta: R::Elem, i: usize, k: usize) -> Result<Element<R>, Error> {
    let e = cup(ring, delta, i, k)?;
    Ok(e.involution())
}

/// The cup-cap generator `e_i` of `End(k)`.
pub fn cupcap<R: Ring>(ring: R, delta: R::Elem, i: usize, k: usize) -> Result<Element<R>, Error> {
    arc_positions(i, k)?;
    let mut strands = alloc::vec![
        Strand::new(Node::Bottom(i as u8), Node::Bottom(i as u8 + 1), false),
        Strand::new(Node::Top(i as u8), Node::Top(i as u8 + 1), false),
    ];
    for j in 1..=k {
        if j == i || j == i + 1 {
            continue;
        }
        strands.push(Strand::new(Node::Bottom(j as u8), Node::Top(j as u8), false));
    }
    let d = Diagram::new(k as u8, k as u8, strands)?;
    let one = ring.one();
    Ok(Element::from_diagram(ring, delta, d, one))
}

/// The decorated cup-cap generator at position 1 of `End(k)`.
pub fn decorated_cupcap<R: Ring>(ring: R, delta: R::Elem, k: usize) -> Result<Element<R>, Error> {
    if k < 2 {
        return Err(Error::IndexOutOfRange { index: 1, max: 0 });
    }
    let mut strands = alloc::vec![
        Strand::new(Node::Bottom(1), Node::Bottom(2), true),
        Strand::new(Node::Top(1), Node::Top(2), true),
    ];
    for j in 3..=k {
        strands.push(Strand::new(Node::Bottom(j as u8), Node::Top(j as u8), false));
    }
    let d = Diagram::new(k as u8, k as u8, strands)?;
    let one = ring.one();
    Ok(Element::from_diagram(ring, delta, d, one))
}

/// The crossing at spot `i`: `identity + e_i` as an element.
pub fn crossing<R: Ring>(ring: R, delta: R::Elem, i: usize, k: usize) -> Result<Element<R>, Error> {
    let id = identity(ring.clone(), delta.clone(), k as u8);
    let e = cupcap(ring, delta, i, k)?;
    id.add(&e)
}

/// Pretty-print an element, naming the standard generator diagrams. The
/// identity term is listed first, the rest follow canonical order.
pub fn format_element<R: Ring>(e: &Element<R>) -> String {
    if e.is_empty() {
        return String::from("0");
    }
    let ring = e.ring();
    let id = Diagram::identity(e.bottom_count());
    let mut ordered: Vec<(&Diagram, &R::Elem)> = e.terms().collect();
    if e.bottom_count() == e.top_count() {
        ordered.sort_by_key(|(d, _)| *d != &id);
    }
    let mut out = String::new();
    for (i, (d, c)) in ordered.into_iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let name = diagram_name(d);
        if ring.is_one(c) {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{} {}", ring.format(c), name));
        }
    }
    out
}

fn diagram_name(d: &Diagram) -> String {
    let k = d.bottom_count();
    if d.top_count() == k && k >= 1 {
        if *d == Diagram::identity(k) {
            return String::from("id");
        }
        let probe = crate::scalar::RationalField;
        let zero = crate::scalar::Rational::from_int(0);
        for i in 1..k as usize {
            if let Ok(e) = cupcap(probe, zero.clone(), i, k as usize) {
                if e.terms().next().map(|(dd, _)| dd) == Some(d) {
                    return format!("e{i}");
                }
            }
        }
        if let Ok(e) = decorated_cupcap(probe, zero, k as usize) {
            if e.terms().next().map(|(dd, _)| dd) == Some(d) {
                return String::from("e1bar");
            }
        }
    }
    format!("[{}]", format_diagram(d))
}

/// The full list of `Element` wrappers over a diagram basis of `Hom(k, m)`.
pub fn basis_elements<R: Ring>(ring: R, delta: R::Elem, k: u8, m: u8) -> Vec<Element<R>> {
    crate::diagram::enumerate_basis(k, m)
        .into_iter()
        .map(|d| Element::from_diagram(ring.clone(), delta.clone(), d, ring.one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Laurent, LaurentRing, Rational, RationalField};

    const Q: RationalField = RationalField;

    fn minus_two() -> Rational {
        Rational::from_int(-2)
    }

    fn q_delta() -> Laurent {
        // a generic circle parameter q + q^-1 exercises delta-independence
        LaurentRing.add(&Laurent::q_pow(1), &Laurent::q_pow(-1))
    }

    #[test]
    fn crossing_is_id_plus_cupcap() {
        let x = crossing(Q, minus_two(), 1, 2).unwrap();
        let id = identity(Q, minus_two(), 2);
        let e = cupcap(Q, minus_two(), 1, 2).unwrap();
        assert_eq!(x, id.add(&e).unwrap());
        assert_eq!(format_element(&x), "id + e1");
    }

    #[test]
    fn decorated_cupcap_squares_to_delta_generic() {
        let l = LaurentRing;
        let e1b = decorated_cupcap(l, q_delta(), 2).unwrap();
        let sq = e1b.multiply(&e1b).unwrap();
        assert_eq!(sq, e1b.scale(&q_delta()));
    }

    #[test]
    fn crossing_squares_to_identity_at_minus_two() {
        let x = crossing(Q, minus_two(), 1, 2).unwrap();
        assert_eq!(x.multiply(&x).unwrap(), identity(Q, minus_two(), 2));
    }

    #[test]
    fn quotient_relation() {
        let ev = cup(Q, minus_two(), 1, 2).unwrap();
        let e1b = decorated_cupcap(Q, minus_two(), 2).unwrap();
        let z = ev.multiply(&e1b).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn type_d_relations_generic_delta() {
        let l = LaurentRing;
        let d = q_delta();
        let k = 4usize;
        let mut gens: Vec<Element<LaurentRing>> = Vec::new();
        gens.push(decorated_cupcap(l, d.clone(), k).unwrap()); // index 0 = e1bar
        for i in 1..k {
            gens.push(cupcap(l, d.clone(), i, k).unwrap());
        }
        let connected = |a: usize, b: usize| -> bool {
            // node 0 is the fork attached to node 2; the rest form a path
            match (a.min(b), a.max(b)) {
                (0, 2) => true,
                (0, _) => false,
                (x, y) => y - x == 1,
            }
        };
        for a in 0..gens.len() {
            let sq = gens[a].multiply(&gens[a]).unwrap();
            assert_eq!(sq, gens[a].scale(&d));
            for b in 0..gens.len() {
                if a == b {
                    continue;
                }
                if connected(a, b) {
                    let aba = gens[a]
                        .multiply(&gens[b])
                        .unwrap()
                        .multiply(&gens[a])
                        .unwrap();
                    assert_eq!(aba, gens[a], "e{a} e{b} e{a} = e{a}");
                } else if (a.min(b), a.max(b)) == (0, 1) {
                    // the quotient: e1 e1bar = 0 = e1bar e1
                    let ab = gens[a].multiply(&gens[b]).unwrap();
                    assert!(ab.is_empty());
                } else {
                    let ab = gens[a].multiply(&gens[b]).unwrap();
                    let ba = gens[b].multiply(&gens[a]).unwrap();
                    assert_eq!(ab, ba, "e{a} e{b} commute");
                }
            }
        }
    }

    #[test]
    fn category_zigzags() {
        let d = q_delta();
        let l = LaurentRing;
        let ev_right = cup(l, d.clone(), 2, 3).unwrap(); // Hom(3,1), arc at (2,3)
        let coev_right = cap(l, d.clone(), 2, 3).unwrap(); // Hom(1,3)
        let ev_left = cup(l, d.clone(), 1, 3).unwrap();
        let coev_left = cap(l, d.clone(), 1, 3).unwrap();
        let id1 = identity(l, d.clone(), 1);
        assert_eq!(ev_left.multiply(&coev_right).unwrap(), id1);
        assert_eq!(ev_right.multiply(&coev_left).unwrap(), id1);
        let ev = cup(l, d.clone(), 1, 2).unwrap();
        let coev = cap(l, d.clone(), 1, 2).unwrap();
        let circle = ev.multiply(&coev).unwrap();
        assert_eq!(circle, identity(l, d.clone(), 0).scale(&d));
    }

    #[test]
    fn zigzags_through_decorated_cupcap() {
        // (id (x) ev) . (e1bar (x) id) . (id (x) coev) = id, and mirror
        let d = minus_two();
        let e1b3 = decorated_cupcap(Q, d.clone(), 2)
            .unwrap()
            .tensor_undecorated(&identity(Q, d.clone(), 1))
            .unwrap();
        let bottom = cap(Q, d.clone(), 2, 3).unwrap(); // Hom(1,3)
        let top = cup(Q, d.clone(), 2, 3).unwrap(); // Hom(3,1)
        let lhs = top.multiply(&e1b3).unwrap().multiply(&bottom).unwrap();
        assert_eq!(lhs, identity(Q, d.clone(), 1));
    }

    #[test]
    fn bend_right_round_trip() {
        let d = minus_two();
        for e in [
            cup(Q, d.clone(), 1, 2).unwrap(),
            decorated_cupcap(Q, d.clone(), 2).unwrap(),
            cupcap(Q, d.clone(), 1, 3).unwrap(),
        ] {
            let bent = e.bend_right().unwrap();
            assert_eq!(bent.unbend_right().unwrap(), e);
        }
        let bent = cup(Q, d.clone(), 1, 2).unwrap().bend_right().unwrap();
        assert_eq!(bent, identity(Q, d, 1));
    }

    #[test]
    fn involution_examples() {
        let d = minus_two();
        let e1b = decorated_cupcap(Q, d.clone(), 2).unwrap();
        assert_eq!(e1b.involution(), e1b);
        let ev = cup(Q, d.clone(), 1, 2).unwrap();
        assert_eq!(ev.involution(), cap(Q, d, 1, 2).unwrap());
    }
}
