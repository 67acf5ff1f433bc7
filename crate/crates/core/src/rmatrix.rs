//! The dynamical R-matrix on C^n tensor C^n and its defining properties.

use crate::nfcore::{normal_form, Atom, Element, Session};
use crate::scalars::{fn_g, fn_h0, shift_unit, CoeffFn, ShiftVector};
use std::collections::BTreeMap;

/// Entry `R^{ab}_{xy}` as a function of one dynamical bank: the coefficient
/// of `v_x (x) v_y` in `R(v_a (x) v_b)`. Indices are 1-based.
pub fn entry(
    n: usize,
    nbanks: usize,
    bank: usize,
    a: usize,
    b: usize,
    x: usize,
    y: usize,
) -> CoeffFn {
    if a == b && x == a && y == a {
        return CoeffFn::q_pow(n, nbanks, 1);
    }
    if a != b && x == a && y == b {
        return if a < b {
            CoeffFn::one(n, nbanks)
        } else {
            fn_g(n, nbanks, bank, a, b)
        };
    }
    if a != b && x == b && y == a {
        return fn_h0(n, nbanks, bank, a, b);
    }
    CoeffFn::zero(n, nbanks)
}

/// Vector in the triple tensor product with one-bank coefficients, indexed
/// by basis triples.
type Vec3 = BTreeMap<[usize; 3], CoeffFn>;

fn insert3(v: &mut Vec3, k: [usize; 3], c: CoeffFn) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&k) {
        Some(old) => {
            *old = old.add(&c);
            if old.is_zero() {
                v.remove(&k);
            }
        }
        None => {
            v.insert(k, c);
        }
    }
}

/// Apply R on tensor legs `(p, q)` with the bank shifted by `-omega(index
/// of the spectator leg)` when `spectator` is set.
fn apply_r(n: usize, v: &Vec3, p: usize, q: usize, spectator: Option<usize>) -> Vec3 {
    let mut out = Vec3::new();
    for (idx, c) in v {
        let (a, b) = (idx[p], idx[q]);
        for x in 1..=n {
            for y in 1..=n {
                let mut e = entry(n, 1, 0, a, b, x, y);
                if e.is_zero() {
                    continue;
                }
                if let Some(s) = spectator {
                    let sh: ShiftVector = shift_unit(n, idx[s]).iter().map(|v| -v).collect();
                    e = e.shift(0, &sh);
                }
                let mut nidx = *idx;
                nidx[p] = x;
                nidx[q] = y;
                insert3(&mut out, nidx, c.mul(&e));
            }
        }
    }
    out
}

/// Verify the quantum dynamical Yang-Baxter equation with spectator-leg
/// shifts on all basis vectors. Returns the first failing basis triple.
pub fn verify_qdybe(n: usize) -> Option<[usize; 3]> {
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                let (lhs, rhs) = qdybe_sides(n, [a, b, c]);
                if lhs != rhs {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Both sides of the shifted Yang-Baxter identity applied to the basis
/// vector `v_a (x) v_b (x) v_c`, as coefficient maps over basis triples.
pub fn qdybe_sides(
    n: usize,
    [a, b, c]: [usize; 3],
) -> (
    BTreeMap<[usize; 3], CoeffFn>,
    BTreeMap<[usize; 3], CoeffFn>,
) {
    let mut start = Vec3::new();
    start.insert([a, b, c], CoeffFn::one(n, 1));
    // R12(l - h3) R13(l) R23(l - h1)
    let lhs = {
        let v = apply_r(n, &start, 1, 2, Some(0));
        let v = apply_r(n, &v, 0, 2, None);
        apply_r(n, &v, 0, 1, Some(2))
    };
    // R23(l) R13(l - h2) R12(l)
    let rhs = {
        let v = apply_r(n, &start, 0, 1, None);
        let v = apply_r(n, &v, 0, 2, Some(1));
        apply_r(n, &v, 1, 2, None)
    };
    (lhs, rhs)
}

/// The exchange relation instance for row pair `(a, c)` and column pair
/// `(b, d)`: the difference of the two sides, which must normalize to zero.
pub fn rll_relation(sess: &Session, a: usize, b: usize, c: usize, d: usize) -> Element {
    let n = sess.n;
    let mut lhs = Element::zero(n);
    let mut rhs = Element::zero(n);
    for x in 1..=n {
        for y in 1..=n {
            let rl = entry(n, 2, 0, x, y, a, c);
            if !rl.is_zero() {
                lhs = lhs.add(&normal_form(
                    sess,
                    &[Atom::Func(rl), Atom::T(x, b), Atom::T(y, d)],
                ));
            }
            let rr = entry(n, 2, 1, b, d, x, y);
            if !rr.is_zero() {
                rhs = rhs.add(&normal_form(
                    sess,
                    &[Atom::Func(rr), Atom::T(c, y), Atom::T(a, x)],
                ));
            }
        }
    }
    lhs.sub(&rhs)
}

/// All exchange relation instances normalize to zero; returns the first
/// failing index quadruple.
pub fn verify_rll(sess: &Session) -> Option<[usize; 4]> {
    let n = sess.n;
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    if !rll_relation(sess, a, b, c, d).is_zero() {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{fn_g, fn_h0, CoeffFn};

    #[test]
    fn entry_table() {
        let n = 3;
        for a in 1..=n {
            for b in 1..=n {
                for x in 1..=n {
                    for y in 1..=n {
                        let e = entry(n, 1, 0, a, b, x, y);
                        let want = if a == b && x == a && y == a {
                            CoeffFn::q_pow(n, 1, 1)
                        } else if a < b && (x, y) == (a, b) {
                            CoeffFn::one(n, 1)
                        } else if a > b && (x, y) == (a, b) {
                            fn_g(n, 1, 0, a, b)
                        } else if a != b && (x, y) == (b, a) {
                            fn_h0(n, 1, 0, a, b)
                        } else {
                            CoeffFn::zero(n, 1)
                        };
                        assert_eq!(e, want, "R^{{{a}{b}}}_{{{x}{y}}}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_invariance_zero_pattern() {
        // entries vanish unless e_x + e_y = e_a + e_b
        let n = 3;
        for a in 1..=n {
            for b in 1..=n {
                for x in 1..=n {
                    for y in 1..=n {
                        let mut lhs = [0i32; 3];
                        lhs[a - 1] += 1;
                        lhs[b - 1] += 1;
                        let mut rhs = [0i32; 3];
                        rhs[x - 1] += 1;
                        rhs[y - 1] += 1;
                        if lhs != rhs {
                            assert!(entry(n, 1, 0, a, b, x, y).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn qdybe_and_rll_small() {
        assert_eq!(verify_qdybe(2), None);
        assert_eq!(verify_rll(&crate::nfcore::Session::new(2)), None);
    }
}
