//! The matrix functor: diagrams act on tensor powers of the defining
//! two-dimensional dicyclic representation.
//!
//! Conventions, in the basis `v1, v2` with tensor words ordered
//! lexicographically (`v1 (x) v1` first):
//!
//! * evaluation (plain cap)      `ev   = (0, 1, -1, 0)` as a row,
//! * coevaluation (plain cup)    `coev = (0, -1, 1, 0)^T` as a column,
//! * decorated evaluation        `(0, 1, 1, 0)`,
//! * decorated coevaluation      `(0, -1, -1, 0)^T`,
//! * a decoration on the exposed through strand acts by `diag(1, -1)`.
//!
//! The decorated cup-cap generator is then the 4x4 matrix with middle block
//! `[[-1,-1],[-1,-1]]`, the rescaled projector onto the sign line, and
//! every basis diagram evaluates by slicing into horizontal layers of these
//! pieces. Functoriality of the assignment is not assumed; the dual-path
//! test suites check it exhaustively at desk scale.

use crate::algebra::Element;
use crate::diagram::{enumerate_basis, Diagram, StrandKind};
use crate::error::Error;
use crate::matrix::{solve_in_span, Matrix};
use crate::scalar::{FpElem, LaurentRing, PrimeField, Ring};
use alloc::vec;
use alloc::vec::Vec;

/// A basis word of `V^{(x)k}`: bit 0 of the index encodes the last tensor
/// factor, `0 -> v1`, `1 -> v2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TensorIndex(pub usize);

impl TensorIndex {
    pub fn letter(self, factor: usize, k: usize) -> u8 {
        debug_assert!(factor < k);
        ((self.0 >> (k - 1 - factor)) & 1) as u8 + 1
    }

    pub fn from_word(word: &[u8]) -> Self {
        let mut idx = 0usize;
        for &w in word {
            debug_assert!(w == 1 || w == 2);
            idx = idx << 1 | (w as usize - 1);
        }
        TensorIndex(idx)
    }
}

/// One horizontal slice of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Layer {
    /// Contract strands `pos, pos+1` (1-based) with ev or its decorated form.
    Cap { pos: usize, dotted: bool },
    /// Insert strands at `pos, pos+1` with coev or its decorated form.
    Cup { pos: usize, dotted: bool },
    /// `diag(1,-1)` on the leftmost (first) strand.
    DotFirst,
}

/// Slice a diagram bottom-to-top: every bottom arc capped innermost-first,
/// then the decorated through strand's dot, then the top arcs.
fn layers_of(d: &Diagram) -> Vec<Layer> {
    let mut layers = Vec::new();
    // bottom arcs as (left, right) index pairs, plus through strands by
    // bottom index; peel innermost-leftmost arcs
    let mut bottom: Vec<(u8, u8, bool)> = Vec::new();
    let mut top: Vec<(u8, u8, bool)> = Vec::new();
    let mut through_dotted = false;
    for s in d.strands() {
        match s.kind() {
            StrandKind::BottomArc(a, b) => bottom.push((a, b, s.dotted)),
            StrandKind::TopArc(a, b) => top.push((a, b, s.dotted)),
            StrandKind::Through(..) => through_dotted |= s.dotted,
        }
    }
    layers.extend(peel_arcs(d.bottom_count(), &bottom, false));
    if through_dotted {
        layers.push(Layer::DotFirst);
    }
    let mut cups = peel_arcs(d.top_count(), &top, true);
    cups.reverse();
    layers.extend(cups);
    layers
}

/// Emit one Cap (or, mirrored, Cup) per arc, innermost-leftmost first, with
/// positions renumbered as earlier arcs disappear.
fn peel_arcs(count: u8, arcs: &[(u8, u8, bool)], as_cups: bool) -> Vec<Layer> {
    let mut alive: Vec<bool> = vec![true; count as usize + 1]; // 1-based
    let mut remaining: Vec<(u8, u8, bool)> = arcs.to_vec();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        // innermost arc = endpoints adjacent among alive points
        let idx = remaining
            .iter()
            .position(|&(a, b, _)| (a + 1..b).all(|p| !alive[p as usize]))
            .expect("noncrossing arcs always contain an innermost one");
        let (a, b, dotted) = remaining.remove(idx);
        let pos = (1..=a).filter(|&p| alive[p as usize]).count();
        alive[a as usize] = false;
        alive[b as usize] = false;
        out.push(if as_cups {
            Layer::Cup { pos, dotted }
        } else {
            Layer::Cap { pos, dotted }
        });
    }
    out
}

/// Apply a layer to a dense vector over `R`, returning the new vector and the
/// new strand count.
fn apply_layer<R: Ring>(
    ring: &R,
    layer: Layer,
    input: &[R::Elem],
    strands: usize,
) -> (Vec<R::Elem>, usize) {
    match layer {
        Layer::DotFirst => {
            let half = input.len() / 2;
            let mut out = input.to_vec();
            for e in out.iter_mut().skip(half) {
                *e = ring.neg(e);
            }
            (out, strands)
        }
        Layer::Cap { pos, dotted } => {
            let s = strands;
            let out_len = 1usize << (s - 2);
            let mut out = vec![ring.zero(); out_len];
            // weights on the contracted pair (b1, b2)
            // plain: (1,2) -> 1, (2,1) -> -1 ; dotted: both 1
            let right_bits = s - pos - 1; // factors right of the pair
            for (idx, val) in input.iter().enumerate() {
                if ring.is_zero(val) {
                    continue;
                }
                let b2 = idx >> right_bits & 1;
                let b1 = idx >> (right_bits + 1) & 1;
                let weight: i64 = match (b1, b2, dotted) {
                    (0, 1, false) => 1,
                    (1, 0, false) => -1,
                    (0, 1, true) | (1, 0, true) => 1,
                    _ => 0,
                };
                if weight == 0 {
                    continue;
                }
                let high = idx >> (right_bits + 2);
                let low = idx & ((1 << right_bits) - 1);
                let out_idx = high << right_bits | low;
                let term = if weight == 1 {
                    val.clone()
                } else {
                    ring.neg(val)
                };
                out[out_idx] = ring.add(&out[out_idx], &term);
            }
            (out, s - 2)
        }
        Layer::Cup { pos, dotted } => {
            let s = strands;
            let out_len = 1usize << (s + 2);
            let mut out = vec![ring.zero(); out_len];
            // inserted pair values: plain coev: (2,1) -> 1, (1,2) -> -1;
            // dotted: (1,2) -> -1, (2,1) -> -1
            for (idx, val) in input.iter().enumerate() {
                if ring.is_zero(val) {
                    continue;
                }
                // split idx into high (pos-1 leading factors) and low (rest)
                let low_bits = s - (pos - 1);
                let high = idx >> low_bits;
                let low = idx & ((1 << low_bits) - 1);
                for (b1, b2, w) in [(0usize, 1usize, -1i64), (1, 0, if dotted { -1 } else { 1 })] {
                    let out_idx = ((high << 2 | b1 << 1 | b2) << low_bits) | low;
                    let term = if w == 1 { val.clone() } else { ring.neg(val) };
                    out[out_idx] = ring.add(&out[out_idx], &term);
                }
            }
            (out, s + 2)
        }
    }
}

/// Evaluate a single diagram to its `2^m x 2^k` integer matrix (entries are
/// always -1, 0, or 1 for a basis diagram), mapped into `R`.
pub fn eval_diagram<R: Ring>(ring: &R, d: &Diagram) -> Matrix<R> {
    let k = d.bottom_count() as usize;
    let m = d.top_count() as usize;
    let layers = layers_of(d);
    let mut out = Matrix::zero(ring.clone(), 1 << m, 1 << k);
    for col in 0..1usize << k {
        let mut vec_in = vec![ring.zero(); 1 << k];
        vec_in[col] = ring.one();
        let mut strands = k;
        for &layer in &layers {
            let (next, s) = apply_layer(ring, layer, &vec_in, strands);
            vec_in = next;
            strands = s;
        }
        debug_assert_eq!(strands, m);
        for (row, v) in vec_in.into_iter().enumerate() {
            if !ring.is_zero(&v) {
                out.set(row, col, v);
            }
        }
    }
    out
}

/// Evaluate a linear combination. Requires the element's circle parameter to
/// be -2, the categorical dimension of the defining representation.
pub fn eval_element<R: Ring>(e: &Element<R>) -> Result<Matrix<R>, Error> {
    let ring = e.ring().clone();
    if *e.delta() != ring.from_int(-2) {
        return Err(Error::DeltaNotMinusTwo);
    }
    let mut acc = Matrix::zero(
        ring.clone(),
        1 << e.top_count() as usize,
        1 << e.bottom_count() as usize,
    );
    for (d, c) in e.terms() {
        let img = eval_diagram(&ring, d);
        acc = acc.add(&img.scale(c))?;
    }
    Ok(acc)
}

/// The pair of group generator matrices acting on `V`.
#[derive(Clone, Debug)]
pub struct GroupGenerators<R: Ring> {
    pub x: Matrix<R>,
    pub a: Matrix<R>,
}

/// Generators over the Laurent ring: `a = diag(q, q^-1)` covers every angle
/// at once.
pub fn generators_infinite() -> GroupGenerators<LaurentRing> {
    let l = LaurentRing;
    let x = crate::matrix::int_matrix(l, 2, 2, &[0, -1, 1, 0]);
    let mut a = Matrix::zero(l, 2, 2);
    a.set(0, 0, crate::scalar::Laurent::q_pow(1));
    a.set(1, 1, crate::scalar::Laurent::q_pow(-1));
    GroupGenerators { x, a }
}

/// Generators for the degree-`n` group over a prime field, `zeta` of exact
/// order `2n`.
pub fn generators_finite(field: PrimeField, zeta: FpElem) -> GroupGenerators<PrimeField> {
    let x = crate::matrix::int_matrix(field, 2, 2, &[0, -1, 1, 0]);
    let mut a = Matrix::zero(field, 2, 2);
    a.set(0, 0, zeta);
    a.set(
        1,
        1,
        field.inv(&zeta).expect("roots of unity are invertible"),
    );
    GroupGenerators { x, a }
}

impl<R: Ring> GroupGenerators<R> {
    /// `x^{(x)k}` and `a^{(x)k}`.
    pub fn tensor_power(&self, k: usize) -> Result<GroupGenerators<R>, Error> {
        let ring = self.x.ring.clone();
        let mut x = Matrix::identity(ring.clone(), 1);
        let mut a = Matrix::identity(ring, 1);
        for _ in 0..k {
            x = x.kronecker(&self.x)?;
            a = a.kronecker(&self.a)?;
        }
        Ok(GroupGenerators { x, a })
    }

    /// Presentation sanity for the constructed matrices: `x^4 = 1` and
    /// `x a x^{-1} = a^{-1}` (equivalently `x a = a^{-1} x`).
    pub fn satisfies_presentation(&self) -> Result<bool, Error> {
        let ring = self.x.ring.clone();
        let id = Matrix::identity(ring, self.x.rows);
        let x2 = self.x.mul(&self.x)?;
        let x4 = x2.mul(&x2)?;
        let xa = self.x.mul(&self.a)?;
        // a^{-1} for diag(q, q^-1)-shaped generators: swap diagonal entries
        let mut a_inv = self.a.clone();
        let (d0, d1) = (self.a.at(0, 0).clone(), self.a.at(1, 1).clone());
        a_inv.set(0, 0, d1);
        a_inv.set(1, 1, d0);
        let a_inv_x = a_inv.mul(&self.x)?;
        Ok(x4 == id && xa == a_inv_x)
    }
}

/// `x^{(x)m} M = M x^{(x)k}` and likewise for `a`: equivariance of a
/// `2^m x 2^k` matrix for the whole group.
pub fn check_equivariance<R: Ring>(
    m_mat: &Matrix<R>,
    k: usize,
    m: usize,
    gens: &GroupGenerators<R>,
) -> Result<bool, Error> {
    if m_mat.rows != 1 << m || m_mat.cols != 1 << k {
        return Err(Error::ShapeMismatch(alloc::format!(
            "expected {}x{}, found {}x{}",
            1usize << m,
            1usize << k,
            m_mat.rows,
            m_mat.cols
        )));
    }
    let top = gens.tensor_power(m)?;
    let bottom = gens.tensor_power(k)?;
    let x_ok = top.x.mul(m_mat)? == m_mat.mul(&bottom.x)?;
    let a_ok = top.a.mul(m_mat)? == m_mat.mul(&bottom.a)?;
    Ok(x_ok && a_ok)
}

/// Invert the functor on an equivariant matrix: the unique element whose
/// image is `target`. `Inconsistent` is a fullness-violation witness,
/// `NonUnique` a faithfulness-violation witness.
pub fn normal_form<R: Ring>(
    ring: &R,
    target: &Matrix<R>,
    k: u8,
    m: u8,
) -> Result<Element<R>, Error> {
    let basis = enumerate_basis(k, m);
    let images: Vec<Matrix<R>> = basis.iter().map(|d| eval_diagram(ring, d)).collect();
    let coeffs = solve_in_span(&images, target)?;
    let mut out = Element::zero(ring.clone(), ring.from_int(-2), k, m);
    for (d, c) in basis.into_iter().zip(coeffs) {
        out.add_term(d, c);
    }
    Ok(out)
}

/// Monoidal product with a decorated right factor, defined through the
/// faithful functor at delta = -2: evaluate both sides, take the Kronecker
/// product, and pull the result back to a linear combination of diagrams.
pub fn tensor<R: Ring>(f: &Element<R>, g: &Element<R>) -> Result<Element<R>, Error> {
    if g.terms().all(|(d, _)| !d.is_decorated()) {
        return f.tensor_undecorated(g);
    }
    let ring = f.ring().clone();
    if *f.delta() != ring.from_int(-2) {
        return Err(Error::UnsupportedTensor);
    }
    let fm = eval_element(f)?;
    let gm = eval_element(g)?;
    let prod = fm.kronecker(&gm)?;
    normal_form(
        &ring,
        &prod,
        f.bottom_count() + g.bottom_count(),
        f.top_count() + g.top_count(),
    )
}

/// Rotate the first bottom strand up: `Hom(k, m) -> Hom(k-1, m+1)`. The left
/// bend routes around the decorated wall, so it is defined through the
/// functor-backed tensor.
pub fn bend_left<R: Ring>(f: &Element<R>) -> Result<Element<R>, Error> {
    if f.bottom_count() == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let ring = f.ring().clone();
    let id1 = crate::algebra::identity(ring.clone(), f.delta().clone(), 1);
    let whiskered = tensor(&id1, f)?;
    let birth = crate::algebra::cap(
        ring,
        f.delta().clone(),
        1,
        f.bottom_count() as usize + 1,
    )?;
    whiskered.multiply(&birth)
}

/// Inverse of [`bend_left`]: `Hom(k, m) -> Hom(k+1, m-1)`.
pub fn unbend_left<R: Ring>(f: &Element<R>) -> Result<Element<R>, Error> {
    if f.top_count() == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let ring = f.ring().clone();
    let id1 = crate::algebra::identity(ring.clone(), f.delta().clone(), 1);
    let whiskered = tensor(&id1, f)?;
    let death = crate::algebra::cup(ring, f.delta().clone(), 1, f.top_count() as usize + 1)?;
    death.multiply(&whiskered)
}

/// Dimension of the commutant of `{x^{(x)k}, a^{(x)k}}` acting on `End(V^{(x)k})`
/// over the Laurent ring, computed structurally: `a`-equivariance forces the
/// weight-pattern zero structure, and `x^{(x)k}` is a signed permutation whose
/// orbit pairing on the surviving entry positions has one degree of freedom
/// per sign-consistent orbit.
pub fn equivariant_end_dimension(k: usize) -> u64 {
    // weights of tensor words under a = diag(q, q^-1): sum of (+1/-1) bits
    let dim = 1usize << k;
    let weight = |idx: usize| -> i64 {
        let ones = (idx as u64).count_ones() as i64; // bits set = v2 letters
        (k as i64 - ones) - ones
    };
    // x v1 = v2, x v2 = -v1: on words, sigma = bitwise complement with sign
    // (-1)^(number of v2 letters)
    let mask = dim - 1;
    let sigma = |idx: usize| -> usize { !idx & mask };
    let sign = |idx: usize| -> i64 {
        if (idx as u64).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let mut count = 0u64;
    let mut seen = alloc::collections::BTreeSet::new();
    for i in 0..dim {
        for j in 0..dim {
            if weight(i) != weight(j) || seen.contains(&(i, j)) {
                continue;
            }
            // orbit of (i,j) under (sigma, sigma); sign consistency requires
            // the product of sign ratios around the cycle to be 1
            let mut orbit = Vec::new();
            let mut p = (i, j);
            let mut ratio = 1i64;
            loop {
                orbit.push(p);
                ratio *= sign(p.0) * sign(p.1);
                p = (sigma(p.0), sigma(p.1));
                if p == (i, j) {
                    break;
                }
            }
            for q in &orbit {
                seen.insert(*q);
            }
            if ratio == 1 {
                count += 1;
            }
        }
    }
    count
}
