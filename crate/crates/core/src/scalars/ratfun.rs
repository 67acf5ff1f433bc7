//! Rational functions kept in partially factored form: a scalar times a
//! signed multiset of monic polynomial atoms (positive exponents make up
//! the numerator, negative ones the denominator). Everything the engine
//! builds is a product of small binomial atoms, so multiplication and
//! inversion reduce to exponent arithmetic and addition needs only exact
//! trial divisions, never a multivariate gcd.

use super::gauss::GaussRat;
use super::poly::Poly;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone)]
pub struct RatFn {
    nvars: usize,
    /// Zero exactly when the whole function is zero (the map is empty then).
    scale: GaussRat,
    /// Monic non-constant atoms with nonzero exponents.
    fac: BTreeMap<Poly, i64>,
}

fn gpow(c: &GaussRat, e: i64) -> GaussRat {
    let b = if e < 0 { c.inv() } else { c.clone() };
    let mut out = GaussRat::from_int(1);
    for _ in 0..e.unsigned_abs() {
        out = &out * &b;
    }
    out
}

/// Split a nonzero polynomial into scalar * monomial-atoms * one monic atom.
fn atomize(p: &Poly) -> (GaussRat, Vec<(Poly, i64)>) {
    debug_assert!(!p.is_zero());
    let mut atoms = Vec::new();
    let content = p.min_exponents();
    let core = if content.is_unit() {
        p.clone()
    } else {
        for (v, &e) in content.0.iter().enumerate() {
            if e > 0 {
                atoms.push((Poly::var(p.nvars, v, 1), e as i64));
            }
        }
        p.div_mono(&content)
    };
    let lc = core.leading().unwrap().1.clone();
    if !core.is_constant() {
        atoms.push((core.mul_scalar(&lc.inv()), 1));
    }
    (lc, atoms)
}

impl RatFn {
    pub fn zero(nvars: usize) -> Self {
        RatFn {
            nvars,
            scale: GaussRat::from_int(0),
            fac: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        RatFn {
            nvars,
            scale: GaussRat::from_int(1),
            fac: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussRat) -> Self {
        RatFn {
            nvars,
            scale: c,
            fac: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        if p.is_zero() {
            return RatFn::zero(p.nvars);
        }
        let (scale, atoms) = atomize(&p);
        let mut out = RatFn {
            nvars: p.nvars,
            scale,
            fac: BTreeMap::new(),
        };
        for (a, e) in atoms {
            out.push_atom(a, e);
        }
        out
    }

    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn::from_poly(num).div(&RatFn::from_poly(den))
    }

    fn push_atom(&mut self, atom: Poly, e: i64) {
        if e == 0 {
            return;
        }
        debug_assert!(!atom.is_constant());
        match self.fac.get_mut(&atom) {
            Some(old) => {
                *old += e;
                if *old == 0 {
                    self.fac.remove(&atom);
                }
            }
            None => {
                self.fac.insert(atom, e);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn is_one(&self) -> bool {
        if !self.scale.is_one() {
            return false;
        }
        if self.fac.is_empty() {
            return true;
        }
        // atoms with only one sign cannot cancel; mixed signs can hide a
        // cancellation across differently grouped composite atoms
        if self.fac.values().all(|&e| e > 0) || self.fac.values().all(|&e| e < 0) {
            return false;
        }
        self.num_poly() == self.den_poly()
    }

    /// Expanded numerator (scale times the positive-exponent atoms).
    pub fn num_poly(&self) -> Poly {
        let mut out = Poly::constant(self.nvars, self.scale.clone());
        for (a, &e) in &self.fac {
            if e > 0 {
                out = out.mul(&a.pow(u32::try_from(e).unwrap()));
            }
        }
        out
    }

    /// Expanded denominator (product of the negative-exponent atoms).
    pub fn den_poly(&self) -> Poly {
        let mut out = Poly::one(self.nvars);
        for (a, &e) in &self.fac {
            if e < 0 {
                out = out.mul(&a.pow(u32::try_from(-e).unwrap()));
            }
        }
        out
    }

    /// Hash of the denominator atom multiset. Summing fractions with equal
    /// fingerprints never needs a cross multiplication.
    pub fn den_fingerprint(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        for (a, &e) in &self.fac {
            if e < 0 {
                a.hash(&mut h);
                e.hash(&mut h);
            }
        }
        h.finish()
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.fac.keys().any(|a| a.degree_in(v) > 0)
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // pull out the common factor atom^min(e1,e2); what remains of each
        // side is a polynomial, and their sum is reduced against the shared
        // denominator atoms by exact trial division
        let mut common: BTreeMap<Poly, i64> = BTreeMap::new();
        let mut pa = Poly::constant(self.nvars, self.scale.clone());
        let mut pb = Poly::constant(self.nvars, other.scale.clone());
        let keys: Vec<&Poly> = self
            .fac
            .keys()
            .chain(other.fac.keys().filter(|k| !self.fac.contains_key(*k)))
            .collect();
        for atom in keys {
            let e1 = self.fac.get(atom).copied().unwrap_or(0);
            let e2 = other.fac.get(atom).copied().unwrap_or(0);
            let m = e1.min(e2);
            if m != 0 {
                common.insert(atom.clone(), m);
            }
            if e1 > m {
                pa = pa.mul(&atom.pow(u32::try_from(e1 - m).unwrap()));
            }
            if e2 > m {
                pb = pb.mul(&atom.pow(u32::try_from(e2 - m).unwrap()));
            }
        }
        let mut s = pa.add(&pb);
        if s.is_zero() {
            return RatFn::zero(self.nvars);
        }
        common.retain(|atom, e| {
            while *e < 0 {
                match s.exact_div(atom) {
                    Some(q) => {
                        s = q;
                        *e += 1;
                    }
                    None => break,
                }
            }
            *e != 0
        });
        let (sc, atoms) = atomize(&s);
        let mut out = RatFn {
            nvars: self.nvars,
            scale: sc,
            fac: common,
        };
        for (a, e) in atoms {
            out.push_atom(a, e);
        }
        out
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            nvars: self.nvars,
            scale: -self.scale.clone(),
            fac: self.fac.clone(),
        }
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::zero(self.nvars);
        }
        let mut out = self.clone();
        out.scale = &out.scale * &other.scale;
        for (a, &e) in &other.fac {
            out.push_atom(a.clone(), e);
        }
        out
    }

    pub fn inv(&self) -> RatFn {
        assert!(!self.is_zero(), "inverse of zero");
        RatFn {
            nvars: self.nvars,
            scale: self.scale.inv(),
            fac: self.fac.iter().map(|(a, &e)| (a.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &RatFn) -> RatFn {
        self.mul(&other.inv())
    }

    pub fn mul_scalar(&self, c: &GaussRat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero(self.nvars);
        }
        let mut out = self.clone();
        out.scale = &out.scale * c;
        out
    }

    /// Rebuild from transformed atoms; `f` maps an atom to its polynomial
    /// image times `x_0^k` (`None` exponent shift when not needed).
    fn map_atoms(&self, f: impl Fn(&Poly) -> (Poly, i64)) -> RatFn {
        if self.is_zero() {
            return RatFn::zero(self.nvars);
        }
        let mut out = RatFn {
            nvars: self.nvars,
            scale: self.scale.clone(),
            fac: BTreeMap::new(),
        };
        for (atom, &e) in &self.fac {
            let (img, k) = f(atom);
            if img.is_zero() {
                assert!(e > 0, "substitution hit a pole");
                return RatFn::zero(self.nvars);
            }
            if k != 0 {
                out.push_atom(Poly::var(img.nvars, 0, 1), k * e);
            }
            let (c, atoms) = atomize(&img);
            out.scale = &out.scale * &gpow(&c, e);
            for (a, ae) in atoms {
                out.push_atom(a, ae * e);
            }
        }
        out
    }

    pub fn conj(&self) -> RatFn {
        if self.is_zero() {
            return RatFn::zero(self.nvars);
        }
        let mut out = RatFn {
            nvars: self.nvars,
            scale: self.scale.conj(),
            fac: BTreeMap::new(),
        };
        for (atom, &e) in &self.fac {
            let (c, atoms) = atomize(&atom.conj());
            out.scale = &out.scale * &gpow(&c, e);
            for (a, ae) in atoms {
                out.push_atom(a, ae * e);
            }
        }
        out
    }

    /// Substitute `x_v -> x_v * x_0^{c_v}`; variable 0 absorbs the powers.
    pub fn subst_scale(&self, scales: &[(usize, i64)]) -> RatFn {
        self.map_atoms(|a| a.subst_scale(scales))
    }

    /// Substitute `x_from -> x_to`. Atoms can collapse or merge.
    pub fn merge_vars(&self, pairs: &[(usize, usize)]) -> RatFn {
        self.map_atoms(|a| (a.merge_vars(pairs), 0))
    }

    pub fn remap_vars(&self, map: &[Option<usize>], new_nvars: usize) -> RatFn {
        if self.is_zero() {
            return RatFn::zero(new_nvars);
        }
        let mut out = RatFn {
            nvars: new_nvars,
            scale: self.scale.clone(),
            fac: BTreeMap::new(),
        };
        for (atom, &e) in &self.fac {
            let img = atom.remap_vars(map, new_nvars);
            let (c, atoms) = atomize(&img);
            out.scale = &out.scale * &gpow(&c, e);
            for (a, ae) in atoms {
                out.push_atom(a, ae * e);
            }
        }
        out
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        if self.scale == other.scale && self.fac == other.fac {
            return true;
        }
        if self.scale.is_zero() || other.scale.is_zero() {
            return false;
        }
        self.div(other).is_one()
    }
}

impl Eq for RatFn {}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num_poly(), self.den_poly())
    }
}
