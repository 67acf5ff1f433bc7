//! Sparse multivariate polynomials over [`GaussRat`] with a graded
//! lexicographic term order and an exact multivariate gcd.

use super::gauss::GaussRat;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector. Ordered by total degree first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Box<[u32]>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0u32; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, v: usize, e: u32) -> Self {
        let mut m = vec![0u32; nvars];
        m[v] = e;
        Mono(m.into_boxed_slice())
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise division; `None` if any exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out.into_boxed_slice()))
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A sparse polynomial with a fixed number of variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, GaussRat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussRat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono::unit(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, GaussRat::from_int(1))
    }

    pub fn var(nvars: usize, v: usize, e: u32) -> Self {
        let mut p = Poly::zero(nvars);
        p.terms.insert(Mono::var(nvars, v, e), GaussRat::from_int(1));
        p
    }

    pub fn term(nvars: usize, m: Mono, c: GaussRat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_unit())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_unit() && c.is_one())
    }

    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Mono, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono, c: &GaussRat) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            out.insert_add(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Per-variable maximum exponent across all terms.
    fn max_exponents(&self) -> Vec<u32> {
        let mut maxs = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (s, &e) in maxs.iter_mut().zip(m.0.iter()) {
                *s = (*s).max(e);
            }
        }
        maxs
    }

    /// Exact division; `None` if the division leaves a remainder.
    pub fn exact_div(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        // cheap rejects before touching the remainder
        let (sm, om) = (self.leading().unwrap().0, other.leading().unwrap().0);
        if om.total_degree() > sm.total_degree() {
            return None;
        }
        let omax = other.max_exponents();
        if self
            .max_exponents()
            .iter()
            .zip(omax.iter())
            .any(|(a, b)| a < b)
        {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        let (lm, lc) = {
            let (m, c) = other.leading().unwrap();
            (m.clone(), c.clone())
        };
        let lc_inv = lc.inv();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&lm)?;
            let qc = &rc * &lc_inv;
            for (m, c) in &other.terms {
                rem.insert_add(m.mul(&qm), -(c * &qc));
            }
            quot.insert_add(qm, qc);
        }
        Some(quot)
    }

    /// Per-variable minimum exponent across all terms.
    pub fn min_exponents(&self) -> Mono {
        let mut mins = vec![u32::MAX; self.nvars];
        for m in self.terms.keys() {
            for (s, &e) in mins.iter_mut().zip(m.0.iter()) {
                *s = (*s).min(e);
            }
        }
        if self.is_zero() {
            return Mono::unit(self.nvars);
        }
        Mono(mins.into_boxed_slice())
    }

    pub(crate) fn div_mono(&self, m: &Mono) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.div(m).expect("monomial division"), c1.clone());
        }
        out
    }

    /// Complex-conjugate all coefficients.
    pub fn conj(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.conj();
        }
        out
    }

    /// Substitute `x_v -> x_v * x_0^{c_v}` for every listed pair. Variable 0
    /// is the clearing variable; the result is `(p, k)` with the true image
    /// equal to `x_0^k * p` (k <= 0 when negative powers were produced).
    pub fn subst_scale(&self, scales: &[(usize, i64)]) -> (Poly, i64) {
        if scales.iter().all(|&(_, c)| c == 0) {
            return (self.clone(), 0);
        }
        let mut staged: Vec<(Vec<u32>, i64, GaussRat)> = Vec::with_capacity(self.terms.len());
        let mut min_t = i64::MAX;
        for (m, c) in &self.terms {
            let mut t = m.0[0] as i64;
            for &(v, cv) in scales {
                t += cv * m.0[v] as i64;
            }
            min_t = min_t.min(t);
            staged.push((m.0.to_vec(), t, c.clone()));
        }
        if staged.is_empty() {
            return (Poly::zero(self.nvars), 0);
        }
        let off = min_t.min(0);
        let mut out = Poly::zero(self.nvars);
        for (mut exps, t, c) in staged {
            exps[0] = u32::try_from(t - off).expect("exponent overflow");
            out.insert_add(Mono(exps.into_boxed_slice()), c);
        }
        (out, off)
    }

    /// Substitute `x_from -> x_to` (exponents merge additively).
    pub fn merge_vars(&self, pairs: &[(usize, usize)]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.to_vec();
            for &(from, to) in pairs {
                let e = exps[from];
                exps[from] = 0;
                exps[to] += e;
            }
            out.insert_add(Mono(exps.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Remap variables through `map[old] = new` into a space with `new_nvars`
    /// variables. Panics if a used variable has no image.
    pub fn remap_vars(&self, map: &[Option<usize>], new_nvars: usize) -> Poly {
        let mut out = Poly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    exps[map[v].expect("variable out of range for remap")] += e;
                }
            }
            out.insert_add(Mono(exps.into_boxed_slice()), c.clone());
        }
        out
    }

    /// Divide by the leading coefficient so the grlex-leading term is monic.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                self.mul_scalar(&inv)
            }
        }
    }
}

// ---- multivariate gcd -------------------------------------------------

/// View `p` as univariate in `v` with polynomial coefficients.
fn coeffs_in(p: &Poly, v: usize) -> Vec<Poly> {
    let d = p.degree_in(v) as usize;
    let mut out = vec![Poly::zero(p.nvars); d + 1];
    for (m, c) in &p.terms {
        let e = m.0[v] as usize;
        let mut exps = m.0.to_vec();
        exps[v] = 0;
        out[e].insert_add(Mono(exps.into_boxed_slice()), c.clone());
    }
    out
}

/// Leading coefficient of `p` viewed as univariate in `v`.
fn lead_in(p: &Poly, v: usize) -> Poly {
    let d = p.degree_in(v);
    let mut out = Poly::zero(p.nvars);
    for (m, c) in &p.terms {
        if m.0[v] == d {
            let mut exps = m.0.to_vec();
            exps[v] = 0;
            out.insert_add(Mono(exps.into_boxed_slice()), c.clone());
        }
    }
    out
}

/// Remainder of `lb^k * a` by `b` in the variable `v`, for some `k >= 0`.
/// Sufficient for a pseudo remainder sequence with content stripping.
fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let db = b.degree_in(v);
    let lb = lead_in(b, v);
    // the canonical pseudo remainder is lc(b)^(delta+1) a mod b; keep track
    // of skipped multiplications so the power is exact
    let mut e = a.degree_in(v) as i64 - db as i64 + 1;
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = lead_in(&r, v);
        let shift = Poly::var(r.nvars, v, dr - db);
        r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
        e -= 1;
        debug_assert!(r.is_zero() || r.degree_in(v) < dr);
    }
    for _ in 0..e.max(0) {
        r = r.mul(&lb);
    }
    r
}

fn content_in(p: &Poly, v: usize) -> Poly {
    let cs = coeffs_in(p, v);
    let mut g = Poly::zero(p.nvars);
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() && !g.is_zero() {
            return Poly::one(p.nvars);
        }
    }
    if g.is_zero() {
        Poly::one(p.nvars)
    } else {
        g
    }
}

/// Greatest common divisor, normalized so the grlex-leading term is monic.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    // split off monomial content first
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let common = Mono(
        ma.0.iter()
            .zip(mb.0.iter())
            .map(|(x, y)| *x.min(y))
            .collect(),
    );
    let ra = a.div_mono(&ma);
    let rb = b.div_mono(&mb);
    let core = gcd_core(&ra, &rb);
    core.mul_mono(&common, &GaussRat::from_int(1)).monic()
}

fn gcd_core(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.nvars);
    }
    if a == b {
        return a.clone();
    }
    // cheap one-sided divisibility checks
    if b.exact_div(a).is_some() {
        return a.clone();
    }
    if a.exact_div(b).is_some() {
        return b.clone();
    }
    // pick the used variable with the smallest combined degree
    let mut main = None;
    for v in 0..a.nvars {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        if da > 0 && db > 0 {
            let score = da + db;
            if main.map(|(_, s)| score < s).unwrap_or(true) {
                main = Some((v, score));
            }
        }
    }
    let v = match main {
        Some((v, _)) => v,
        None => {
            // no shared variable: the gcd is the gcd of full contents
            for v in 0..a.nvars {
                if a.degree_in(v) > 0 {
                    return gcd_core(&content_in(a, v), b);
                }
            }
            return Poly::one(a.nvars);
        }
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cg = gcd(&ca, &cb);
    let pg = prs_gcd(&pa, &pb, v);
    cg.mul(&pg)
}

/// Primitive-part gcd of two polynomials primitive in `v`, by the
/// subresultant pseudo remainder sequence. Each remainder is divided by a
/// predicted factor instead of its full content, which keeps the chain
/// polynomial-time; only the final result is made primitive. Scalar
/// normalization along the way is harmless over the coefficient field.
fn prs_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let nvars = a.nvars;
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut lc = Poly::one(nvars);
    let mut h = Poly::one(nvars);
    loop {
        let delta = f.degree_in(v) - g.degree_in(v);
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            let c = content_in(&g, v);
            return g.exact_div(&c).expect("content divides").monic();
        }
        if r.degree_in(v) == 0 {
            return Poly::one(nvars);
        }
        let div = lc.mul(&h.pow(delta));
        f = g;
        g = r.exact_div(&div).expect("subresultant division").monic();
        lc = lead_in(&f, v);
        h = if delta == 0 {
            h
        } else if delta == 1 {
            lc.clone()
        } else {
            lc.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant normalizer division")
        };
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    write!(f, "*x{}^{}", v, e)?;
                }
            }
        }
        Ok(())
    }
}
