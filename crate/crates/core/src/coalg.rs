//! Coalgebra structure: difference operators, tensor products over the
//! base, comultiplication and counit.
//!
//! A tensor element with `k` legs stores a joint coefficient in `k + 1`
//! banks. Bank `j` is the seam between legs `j` and `j + 1` (bank 0 is the
//! left parameter of leg 1, bank `k` the right parameter of leg `k`), and
//! every component is kept as a left multiplier of the leg it governs, so
//! the legs of a product normalize independently.

use crate::nfcore::{reduce_word, Element, NMono, Session, Strategy};
use crate::scalars::{shift_add, shift_neg, CoeffFn, ShiftVector};
use std::collections::BTreeMap;

// ---- difference operators ----------------------------------------------

/// Finite sum of `f * T_alpha` with one-bank coefficients, acting on
/// functions of a single dynamical parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp {
    pub n: usize,
    pub terms: BTreeMap<ShiftVector, CoeffFn>,
}

impl DiffOp {
    pub fn zero(n: usize) -> Self {
        DiffOp {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        DiffOp::shift_op(n, vec![0; n])
    }

    pub fn shift_op(n: usize, alpha: ShiftVector) -> Self {
        let mut d = DiffOp::zero(n);
        d.terms.insert(alpha, CoeffFn::one(n, 1));
        d
    }

    pub fn func_op(n: usize, f: CoeffFn, alpha: ShiftVector) -> Self {
        let mut d = DiffOp::zero(n);
        if !f.is_zero() {
            d.terms.insert(alpha, f);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, alpha: ShiftVector, f: CoeffFn) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&alpha) {
            Some(old) => {
                *old = old.add(&f);
                if old.is_zero() {
                    self.terms.remove(&alpha);
                }
            }
            None => {
                self.terms.insert(alpha, f);
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.insert_add(a.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.insert_add(a.clone(), f.neg());
        }
        out
    }

    /// Operator composition `(f T_a)(g T_b) = f (T_a g) T_{a+b}`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero(self.n);
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                out.insert_add(shift_add(a, b), f.mul(&g.shift(0, a)));
            }
        }
        out
    }

    /// Pre-compose with a plain function: `D . g`.
    pub fn compose_func(&self, g: &CoeffFn) -> DiffOp {
        let mut out = DiffOp::zero(self.n);
        for (a, f) in &self.terms {
            out.insert_add(a.clone(), f.mul(&g.shift(0, a)));
        }
        out
    }

    /// Post-compose with a plain function: `g . D`.
    pub fn func_compose(&self, g: &CoeffFn) -> DiffOp {
        let mut out = DiffOp::zero(self.n);
        for (a, f) in &self.terms {
            out.insert_add(a.clone(), g.mul(f));
        }
        out
    }

    /// Apply to the constant function 1.
    pub fn apply_to_one(&self) -> CoeffFn {
        let mut f = CoeffFn::zero(self.n, 1);
        for g in self.terms.values() {
            f = f.add(g);
        }
        f
    }

    /// Antipode of the operator algebra: `S(f T_a) = T_{-a} . f`.
    pub fn antipode(&self) -> DiffOp {
        let mut out = DiffOp::zero(self.n);
        for (a, f) in &self.terms {
            let na = shift_neg(a);
            out.insert_add(na.clone(), f.shift(0, &na));
        }
        out
    }

    /// Star of the operator algebra: `(f T_a)^* = T_{-a} . conj(f)`; the
    /// shifts are real in this presentation.
    pub fn star(&self) -> DiffOp {
        let mut out = DiffOp::zero(self.n);
        for (a, f) in &self.terms {
            let na = shift_neg(a);
            out.insert_add(na.clone(), f.conjugate().shift(0, &na));
        }
        out
    }
}

// ---- tensor elements ----------------------------------------------------

/// Element of the `k`-fold tensor product of the algebra over the base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    pub n: usize,
    pub k: usize,
    /// leg monomials -> joint coefficient in `k + 1` banks
    pub terms: BTreeMap<Vec<NMono>, CoeffFn>,
}

impl TensorElement {
    pub fn zero(n: usize, k: usize) -> Self {
        TensorElement {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, k: usize) -> Self {
        let mut t = TensorElement::zero(n, k);
        t.terms
            .insert(vec![NMono::unit(n); k], CoeffFn::one(n, k + 1));
        t
    }

    pub fn scalar(n: usize, k: usize, c: CoeffFn) -> Self {
        assert_eq!(c.nbanks, k + 1);
        let mut t = TensorElement::zero(n, k);
        if !c.is_zero() {
            t.terms.insert(vec![NMono::unit(n); k], c);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, m: Vec<NMono>, c: CoeffFn) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old = old.add(&c);
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, sess: &Session, other: &TensorElement) -> TensorElement {
        assert_eq!(self.k, other.k);
        let n = self.n;
        let k = self.k;
        let mut out = TensorElement::zero(n, k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // bring the right coefficient across the left legs: bank j
                // is a left multiplier of leg j+1 and crosses only that leg
                let mut c2s = c2.clone();
                for j in 0..k {
                    let lw = m1[j].left_weight(n);
                    c2s = c2s.shift(j, &shift_neg(&lw));
                }
                let rw = m1[k - 1].right_weight(n);
                c2s = c2s.shift(k, &shift_neg(&rw));
                let base = c1.mul(&c2s);
                // legs normalize independently
                let mut partial: Vec<(CoeffFn, Vec<NMono>)> = vec![(base, Vec::new())];
                for j in 0..k {
                    let mut word = m1[j].word(n);
                    word.extend(m2[j].word(n));
                    let d = m1[j].d + m2[j].d;
                    let leg =
                        reduce_word(sess, j, j + 1, CoeffFn::one(n, k + 1), word, d, Strategy::Leftmost);
                    let mut next = Vec::new();
                    for (pc, pm) in &partial {
                        for (mt, ct) in &leg {
                            let mut nm = pm.clone();
                            nm.push(mt.clone());
                            next.push((pc.mul(ct), nm));
                        }
                    }
                    partial = next;
                }
                for (c, m) in partial {
                    out.insert_add(m, c);
                }
            }
        }
        out
    }

    /// Per-leg maximal inverse-determinant power.
    pub fn max_detinv_powers(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.k];
        for m in self.terms.keys() {
            for j in 0..self.k {
                d[j] = d[j].max(m[j].d);
            }
        }
        d
    }

    /// Multiply leg `j` (0-based) of every term by `det^(dmax - d_j)` after
    /// cancelling its inverse determinants, clearing them from that leg.
    pub fn clear_detinv_leg(&self, sess: &Session, j: usize, dmax: u32) -> TensorElement {
        let n = self.n;
        let det = crate::nfcore::element_det(sess);
        let mut det_pows = vec![Element::one(n)];
        for p in 1..=dmax {
            let prev = det_pows[(p - 1) as usize].clone();
            det_pows.push(crate::nfcore::mul(sess, &prev, &det));
        }
        let mut out = TensorElement::zero(n, self.k);
        for (m, c) in &self.terms {
            assert!(m[j].d <= dmax);
            let need = dmax - m[j].d;
            let mut bare = m[j].clone();
            bare.d = 0;
            let lw = bare.left_weight(n);
            let rw = bare.right_weight(n);
            for (dm, dc) in &det_pows[need as usize].terms {
                // the det power is central, so clearing term by term works;
                // its coefficient lives in the banks flanking leg j and
                // crosses only that leg's bare word
                let dcw = dc.map_banks(&[j, j + 1], self.k + 1);
                let dcs = dcw.shift(j, &shift_neg(&lw)).shift(j + 1, &shift_neg(&rw));
                let mut word = bare.word(n);
                word.extend(dm.word(n));
                let leg = reduce_word(
                    sess,
                    j,
                    j + 1,
                    c.mul(&dcs),
                    word,
                    0,
                    Strategy::Leftmost,
                );
                for (mt, ct) in leg {
                    let mut nm = m.clone();
                    nm[j] = mt;
                    out.insert_add(nm, ct);
                }
            }
        }
        out
    }

    /// Equality after clearing inverse determinants leg by leg.
    pub fn equal_mod_det(&self, sess: &Session, other: &TensorElement) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        for j in 0..self.k {
            let da = a.max_detinv_powers()[j];
            let db = b.max_detinv_powers()[j];
            let d = da.max(db);
            if d > 0 {
                a = a.clear_detinv_leg(sess, j, d);
                b = b.clear_detinv_leg(sess, j, d);
            }
        }
        a == b
    }
}

// ---- comultiplication ----------------------------------------------------

/// Iterated coproduct of a single generator: all paths `i -> j` of length
/// `k` through intermediate indices.
fn comult_gen(n: usize, k: usize, i: usize, j: usize) -> TensorElement {
    let mut out = TensorElement::zero(n, k);
    let mut path = vec![0usize; k + 1];
    path[0] = i;
    path[k] = j;
    fn rec(n: usize, k: usize, pos: usize, path: &mut Vec<usize>, out: &mut TensorElement) {
        if pos == k {
            let legs: Vec<NMono> = (0..k)
                .map(|l| {
                    let mut m = NMono::unit(n);
                    m.a[(path[l] - 1) * n + (path[l + 1] - 1)] = 1;
                    m
                })
                .collect();
            out.insert_add(legs, CoeffFn::one(n, k + 1));
            return;
        }
        for x in 1..=n {
            path[pos] = x;
            rec(n, k, pos + 1, path, out);
        }
    }
    rec(n, k, 1, &mut path, &mut out);
    out
}

/// Iterated coproduct sending the element into `k` tensor legs. The left
/// moment bank lands in bank 0, the right moment bank in bank `k`, and the
/// monomial expands multiplicatively.
pub fn comult_k(sess: &Session, x: &Element, k: usize) -> TensorElement {
    assert!(k >= 1);
    let n = sess.n;
    let mut out = TensorElement::zero(n, k);
    let mut detinv_tensor = TensorElement::zero(n, k);
    {
        let mut m = NMono::unit(n);
        m.d = 1;
        detinv_tensor
            .terms
            .insert(vec![m; k], CoeffFn::one(n, k + 1));
    }
    for (m, c) in &x.terms {
        let mut bank_map = vec![0; 2];
        bank_map[0] = 0;
        bank_map[1] = k;
        let mut acc = TensorElement::scalar(n, k, c.map_banks(&bank_map, k + 1));
        for (i, j) in m.word(n) {
            acc = acc.mul(sess, &comult_gen(n, k, i, j));
        }
        for _ in 0..m.d {
            acc = acc.mul(sess, &detinv_tensor);
        }
        out = out.add(&acc);
    }
    out
}

/// The coproduct into two legs.
pub fn comult(sess: &Session, x: &Element) -> TensorElement {
    comult_k(sess, x, 2)
}

/// Apply the coproduct to leg `leg` (1-based) of a tensor element,
/// producing one with an extra leg.
pub fn comult_leg(sess: &Session, t: &TensorElement, leg: usize) -> TensorElement {
    assert!(1 <= leg && leg <= t.k);
    let n = t.n;
    let k = t.k;
    let mut out = TensorElement::zero(n, k + 1);
    for (m, c) in &t.terms {
        // banks >= leg move up one place; the coefficient components keep
        // their roles as left multipliers of unchanged legs
        let bank_map: Vec<usize> = (0..=k).map(|b| if b < leg { b } else { b + 1 }).collect();
        let cw = c.map_banks(&bank_map, k + 2);
        // expand leg `leg` into two
        let mut leg_elem = Element::zero(n);
        leg_elem.terms.insert(m[leg - 1].clone(), CoeffFn::one(n, 2));
        let expanded = comult(sess, &leg_elem);
        for (em, ec) in &expanded.terms {
            let emb: Vec<usize> = vec![leg - 1, leg, leg + 1];
            let ecw = ec.map_banks(&emb, k + 2);
            let mut nm: Vec<NMono> = Vec::with_capacity(k + 1);
            nm.extend_from_slice(&m[..leg - 1]);
            nm.push(em[0].clone());
            nm.push(em[1].clone());
            nm.extend_from_slice(&m[leg..]);
            out.insert_add(nm, cw.mul(&ecw));
        }
    }
    out
}

/// Counit of an element, an operator on the base.
pub fn counit(sess: &Session, x: &Element) -> DiffOp {
    let n = sess.n;
    let mut out = DiffOp::zero(n);
    for (m, c) in &x.terms {
        if let Some(gamma) = diagonal_weight(n, m) {
            // both banks collapse to the operator variable
            let f = c.merge_banks(1, 0).map_banks(&[0, 0], 1);
            out.insert_add(shift_neg(&gamma), f);
        }
    }
    out
}

/// Weight of a diagonal monomial (`None` when any off-diagonal generator
/// occurs, in which case the counit kills the term).
fn diagonal_weight(n: usize, m: &NMono) -> Option<ShiftVector> {
    let mut gamma = vec![-(m.d as i64); n];
    for i in 1..=n {
        for j in 1..=n {
            let e = m.a[(i - 1) * n + (j - 1)];
            if e > 0 {
                if i != j {
                    return None;
                }
                gamma[i - 1] += e as i64;
            }
        }
    }
    Some(gamma)
}

/// Apply the counit to leg `leg` (1-based): the leg collapses, its two
/// seams merge, and the operator shift is absorbed by the grading.
pub fn counit_leg(sess: &Session, t: &TensorElement, leg: usize) -> TensorElement {
    assert!(1 <= leg && leg <= t.k);
    assert!(t.k >= 2);
    let n = t.n;
    let k = t.k;
    let _ = sess;
    let mut out = TensorElement::zero(n, k - 1);
    for (m, c) in &t.terms {
        if diagonal_weight(n, &m[leg - 1]).is_none() {
            continue;
        }
        // merge bank `leg` into bank `leg-1`, then renumber down
        let merged = c.merge_banks(leg, leg - 1);
        let bank_map: Vec<usize> = (0..=k)
            .map(|b| if b <= leg - 1 { b } else { b - 1 })
            .collect();
        let cw = merged.map_banks(&bank_map, k);
        let mut nm: Vec<NMono> = Vec::with_capacity(k - 1);
        nm.extend_from_slice(&m[..leg - 1]);
        nm.extend_from_slice(&m[leg..]);
        out.insert_add(nm, cw);
    }
    out
}

/// Convert a one-leg tensor back to an element.
pub fn tensor_to_element(t: &TensorElement) -> Element {
    assert_eq!(t.k, 1);
    let mut out = Element::zero(t.n);
    for (m, c) in &t.terms {
        out.insert_add(m[0].clone(), c.clone());
    }
    out
}

/// Embed an element as a one-leg tensor.
pub fn element_to_tensor(x: &Element) -> TensorElement {
    let mut out = TensorElement::zero(x.n, 1);
    for (m, c) in &x.terms {
        out.insert_add(vec![m.clone()], c.clone());
    }
    out
}

/// Apply a map to every leg coefficient-free monomial... the elementwise
/// star of a tensor: star each leg, conjugate the coefficient.
pub fn tensor_star(sess: &Session, t: &TensorElement) -> TensorElement {
    let n = t.n;
    let k = t.k;
    let mut out = TensorElement::zero(n, k);
    for (m, c) in &t.terms {
        // star of each leg monomial as an element of the algebra, with
        // coefficients in the banks flanking that leg
        let mut partial: Vec<(CoeffFn, Vec<NMono>)> = vec![(c.conjugate(), Vec::new())];
        for j in 0..k {
            let mut leg_elem = Element::zero(n);
            leg_elem.terms.insert(m[j].clone(), CoeffFn::one(n, 2));
            let starred = crate::hopf::star(sess, &leg_elem);
            let mut next = Vec::new();
            for (pc, pm) in &partial {
                for (sm, sc) in &starred.terms {
                    let scw = sc.map_banks(&[j, j + 1], k + 1);
                    let mut nm = pm.clone();
                    nm.push(sm.clone());
                    next.push((pc.mul(&scw), nm));
                }
            }
            partial = next;
        }
        for (cf, nm) in partial {
            out.insert_add(nm, cf);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nfcore::{element_det, mul, normal_form, Atom};
    use crate::scalars::{fn_h, shift_ones, shift_unit};

    fn quad(sess: &Session) -> Element {
        normal_form(sess, &[Atom::T(2, 1), Atom::T(1, 2)])
    }

    #[test]
    fn counit_axioms_on_generators_det_and_quadratic() {
        let sess = Session::new(2);
        let mut xs = vec![element_det(&sess), Element::det_inv(2), quad(&sess)];
        for i in 1..=2 {
            for j in 1..=2 {
                xs.push(Element::gen(2, i, j));
            }
        }
        for x in &xs {
            let ct = comult(&sess, x);
            let left = tensor_to_element(&counit_leg(&sess, &ct, 1));
            let right = tensor_to_element(&counit_leg(&sess, &ct, 2));
            assert_eq!(&left, x);
            assert_eq!(&right, x);
        }
    }

    #[test]
    fn comult_is_coassociative() {
        let sess = Session::new(2);
        let xs = vec![
            Element::gen(2, 1, 2),
            Element::gen(2, 2, 2),
            element_det(&sess),
            Element::det_inv(2),
            quad(&sess),
        ];
        for x in &xs {
            let ct = comult(&sess, x);
            assert_eq!(comult_leg(&sess, &ct, 1), comult_leg(&sess, &ct, 2));
        }
    }

    #[test]
    fn comult_of_product_is_product_of_comults() {
        let sess = Session::new(2);
        let x = Element::gen(2, 2, 1);
        let y = Element::gen(2, 1, 2);
        let lhs = comult(&sess, &mul(&sess, &x, &y));
        let rhs = comult(&sess, &x).mul(&sess, &comult(&sess, &y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_values() {
        let sess = Session::new(2);
        assert_eq!(
            counit(&sess, &element_det(&sess)),
            DiffOp::shift_op(2, vec![-1, -1])
        );
        assert_eq!(
            counit(&sess, &Element::det_inv(2)),
            DiffOp::shift_op(2, vec![1, 1])
        );
        for i in 1..=2 {
            for j in 1..=2 {
                let d = counit(&sess, &Element::gen(2, i, j));
                if i == j {
                    assert_eq!(d, DiffOp::shift_op(2, shift_neg(&shift_unit(2, i))));
                } else {
                    assert!(d.is_zero());
                }
            }
        }
    }

    #[test]
    fn counit_is_multiplicative() {
        let sess = Session::new(2);
        let x = element_det(&sess);
        let y = Element::gen(2, 1, 1);
        let lhs = counit(&sess, &mul(&sess, &x, &y));
        let rhs = counit(&sess, &x).compose(&counit(&sess, &y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn diffop_composition_law() {
        let n = 2;
        let f = fn_h(n, 1, 0, 1, 2);
        let g = fn_h(n, 1, 0, 2, 1);
        let a = vec![1, -1];
        let b = vec![0, 2];
        let d1 = DiffOp::func_op(n, f.clone(), a.clone());
        let d2 = DiffOp::func_op(n, g.clone(), b.clone());
        let want = DiffOp::func_op(n, f.mul(&g.shift(0, &a)), shift_add(&a, &b));
        assert_eq!(d1.compose(&d2), want);
        assert_eq!(DiffOp::identity(n).compose(&d1), d1);
        assert_eq!(d1.compose(&DiffOp::identity(n)), d1);
    }

    #[test]
    fn diffop_antipode_is_an_antihomomorphism() {
        let n = 2;
        let d1 = DiffOp::func_op(n, fn_h(n, 1, 0, 1, 2), vec![1, 0]);
        let d2 = DiffOp::func_op(n, fn_h(n, 1, 0, 2, 1), shift_ones(n));
        assert_eq!(
            d1.compose(&d2).antipode(),
            d2.antipode().compose(&d1.antipode())
        );
        assert_eq!(d1.antipode().antipode(), d1);
    }
}
