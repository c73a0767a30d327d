//! The quadratic extension GF(q^2) = GF(q)(alpha), alpha^2 = d, together
//! with the norm, the conjugation automorphism, squareness and the
//! unit-circle subgroups Q, Q0, Q1.

use crate::error::{Error, Result};
use crate::gf_base::{BaseElement, BaseField};

/// An element x + y*alpha of GF(q^2), stored coordinate-wise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtElement {
    pub x: BaseElement,
    pub y: BaseElement,
}

impl ExtElement {
    pub const ZERO: ExtElement = ExtElement {
        x: BaseElement::ZERO,
        y: BaseElement::ZERO,
    };

    pub fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

// Canonical order is y-major, matching the canonical element index.
impl Ord for ExtElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for ExtElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The two cosets of the unique index-2 subgroup of the norm-1 circle,
/// each stored sorted by canonical index.
#[derive(Debug, Clone)]
pub struct CircleSubgroups {
    pub circle: Vec<ExtElement>,
    pub q0: Vec<ExtElement>,
    pub q1: Vec<ExtElement>,
}

/// GF(q^2) with full discrete-log tables and a square bitmap.
#[derive(Debug, Clone)]
pub struct ExtField {
    base: BaseField,
    d: BaseElement,
    beta: ExtElement,
    omega: ExtElement,
    /// exp[k] = canonical index of beta^k.
    exp: Vec<u32>,
    /// log[i] = discrete log of the element with canonical index i.
    log: Vec<u32>,
    /// square[i] = true iff the element with index i is a nonzero square.
    square: Vec<bool>,
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl ExtField {
    /// Builds GF(q^2) over the given base field. `d_override` replaces the
    /// canonical smallest non-square as the defining constant.
    pub fn new(base: BaseField, d_override: Option<BaseElement>) -> Result<ExtField> {
        let d = match d_override {
            Some(d) => {
                if d.is_zero() || base.is_square(d)? {
                    return Err(Error::DIsASquare);
                }
                d
            }
            None => base.smallest_nonsquare(),
        };
        let mut field = ExtField {
            base,
            d,
            beta: ExtElement::ZERO,
            omega: ExtElement::ZERO,
            exp: Vec::new(),
            log: Vec::new(),
            square: Vec::new(),
        };
        field.beta = field.find_beta();
        field.build_tables();
        field.omega = field.from_log(field.q() - 1);
        Ok(field)
    }

    /// Convenience constructor from q.
    pub fn from_q(q: u64) -> Result<ExtField> {
        ExtField::new(BaseField::new(q)?, None)
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn d(&self) -> BaseElement {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.base.q()
    }

    /// Order of the extension field, q^2.
    pub fn order(&self) -> u64 {
        (self.q() as u64) * (self.q() as u64)
    }

    pub fn beta(&self) -> ExtElement {
        self.beta
    }

    /// The generator of the norm-1 circle, beta^(q-1); it has order q+1
    /// and is a square.
    pub fn omega(&self) -> ExtElement {
        self.omega
    }

    pub fn alpha(&self) -> ExtElement {
        ExtElement {
            x: self.base.zero(),
            y: self.base.one(),
        }
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement::ZERO
    }

    pub fn one(&self) -> ExtElement {
        self.embed(self.base.one())
    }

    pub fn embed(&self, b: BaseElement) -> ExtElement {
        ExtElement {
            x: b,
            y: self.base.zero(),
        }
    }

    pub fn make(&self, x: BaseElement, y: BaseElement) -> ExtElement {
        ExtElement { x, y }
    }

    /// Element from prime-subfield integer coordinates, mainly for tests
    /// and parsing.
    pub fn from_ints(&self, x: i64, y: i64) -> ExtElement {
        ExtElement {
            x: self.base.from_int(x),
            y: self.base.from_int(y),
        }
    }

    /// Canonical element index, y-major.
    pub fn index(&self, g: ExtElement) -> u32 {
        g.y.index() * self.q() + g.x.index()
    }

    pub fn from_index(&self, idx: u32) -> ExtElement {
        let q = self.q();
        assert!(idx < q * q);
        ExtElement {
            x: self.base.element(idx % q),
            y: self.base.element(idx / q),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElement> + '_ {
        (0..self.order() as u32).map(move |i| self.from_index(i))
    }

    fn find_beta(&self) -> ExtElement {
        let n = self.order() - 1;
        let factors = prime_factors(n);
        let one = self.one();
        for idx in 1..self.order() as u32 {
            let cand = self.from_index(idx);
            let primitive = factors.iter().all(|&r| self.pow_raw(cand, n / r) != one);
            if primitive {
                return cand;
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    /// Square-and-multiply, used before the log tables exist.
    fn pow_raw(&self, mut base: ExtElement, mut n: u64) -> ExtElement {
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let n = self.order() as usize;
        self.exp = vec![0; n - 1];
        self.log = vec![u32::MAX; n];
        self.square = vec![false; n];
        let mut cur = self.one();
        for k in 0..n - 1 {
            let idx = self.index(cur) as usize;
            self.exp[k] = idx as u32;
            self.log[idx] = k as u32;
            self.square[idx] = k % 2 == 0;
            cur = self.mul(cur, self.beta);
        }
        debug_assert_eq!(cur, self.one());
    }

    pub fn discrete_log(&self, g: ExtElement) -> Result<u32> {
        if g.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(self.log[self.index(g) as usize])
    }

    pub fn from_log(&self, k: u32) -> ExtElement {
        let m = (self.order() - 1) as u32;
        self.from_index(self.exp[(k % m) as usize])
    }

    pub fn add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        ExtElement {
            x: self.base.add(a.x, b.x),
            y: self.base.add(a.y, b.y),
        }
    }

    pub fn neg(&self, a: ExtElement) -> ExtElement {
        ExtElement {
            x: self.base.neg(a.x),
            y: self.base.neg(a.y),
        }
    }

    pub fn sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        self.add(a, self.neg(b))
    }

    /// (x1 + y1 a)(x2 + y2 a) = (x1 x2 + y1 y2 d) + (x1 y2 + x2 y1) a.
    pub fn mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let f = &self.base;
        ExtElement {
            x: f.add(f.mul(a.x, b.x), f.mul(f.mul(a.y, b.y), self.d)),
            y: f.add(f.mul(a.x, b.y), f.mul(a.y, b.x)),
        }
    }

    pub fn scale(&self, c: BaseElement, a: ExtElement) -> ExtElement {
        ExtElement {
            x: self.base.mul(c, a.x),
            y: self.base.mul(c, a.y),
        }
    }

    pub fn inv(&self, a: ExtElement) -> Result<ExtElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.base.inv(self.norm(a)).expect("nonzero norm");
        Ok(self.scale(n_inv, self.frobenius(a)))
    }

    pub fn div(&self, a: ExtElement, b: ExtElement) -> Result<ExtElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: ExtElement, n: u64) -> ExtElement {
        if a.is_zero() {
            return if n == 0 { self.one() } else { self.zero() };
        }
        let m = self.order() - 1;
        let k = (self.log[self.index(a) as usize] as u64 * (n % m)) % m;
        self.from_log(k as u32)
    }

    /// The norm down to GF(q): N(x + y a) = x^2 - y^2 d = g^(q+1).
    pub fn norm(&self, g: ExtElement) -> BaseElement {
        let f = &self.base;
        f.sub(
            f.mul(g.x, g.x),
            f.mul(f.mul(g.y, g.y), self.d),
        )
    }

    /// The conjugation x + y a -> x - y a, i.e. g -> g^q.
    pub fn frobenius(&self, g: ExtElement) -> ExtElement {
        ExtElement {
            x: g.x,
            y: self.base.neg(g.y),
        }
    }

    /// g -> g^(p^i); i ranges over 0..2e for the full Galois group.
    pub fn galois(&self, g: ExtElement, i: u32) -> ExtElement {
        let mut exp = 1u64;
        let m = self.order() - 1;
        for _ in 0..i {
            exp = exp * self.base.p() as u64 % m;
        }
        self.pow(g, exp)
    }

    /// Number of Galois exponents, 2e.
    pub fn galois_count(&self) -> u32 {
        2 * self.base.e()
    }

    /// True iff g is a nonzero square. Evaluated both through the discrete
    /// log and through squareness of the norm; the two routes must agree.
    pub fn is_square(&self, g: ExtElement) -> Result<bool> {
        if g.is_zero() {
            return Err(Error::NotAUnit);
        }
        let by_log = self.square[self.index(g) as usize];
        let by_norm = self.base.is_square(self.norm(g))?;
        assert_eq!(by_log, by_norm, "squareness criteria disagree");
        Ok(by_log)
    }

    /// Square test via the bitmap only; no cross-check, for hot paths.
    pub(crate) fn is_square_fast(&self, idx: u32) -> bool {
        self.square[idx as usize]
    }

    /// The circle Q of norm-1 elements with its canonical halves
    /// Q0 = squares of Q and Q1 = omega * Q0.
    pub fn circle_subgroups(&self) -> CircleSubgroups {
        let q = self.q();
        let mut circle = Vec::with_capacity(q as usize + 1);
        let mut q0 = Vec::with_capacity((q as usize).div_ceil(2));
        let mut q1 = Vec::with_capacity((q as usize).div_ceil(2));
        let mut cur = self.one();
        for k in 0..q + 1 {
            circle.push(cur);
            if k % 2 == 0 {
                q0.push(cur);
            } else {
                q1.push(cur);
            }
            cur = self.mul(cur, self.omega);
        }
        debug_assert_eq!(cur, self.one());
        circle.sort();
        q0.sort();
        q1.sort();
        CircleSubgroups { circle, q0, q1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(field: &ExtField, pairs: &[(i64, i64)]) -> BTreeSet<ExtElement> {
        pairs.iter().map(|&(x, y)| field.from_ints(x, y)).collect()
    }

    #[test]
    fn canonical_d_values() {
        assert_eq!(ExtField::from_q(29).unwrap().d().index(), 2);
        assert_eq!(ExtField::from_q(31).unwrap().d().index(), 3);
    }

    #[test]
    fn d_override() {
        let base = BaseField::new(31).unwrap();
        // 11 is a non-square mod 31
        let e = ExtField::new(base.clone(), Some(base.from_int(11))).unwrap();
        assert_eq!(e.d().index(), 11);
        assert_eq!(
            ExtField::new(BaseField::new(29).unwrap(), Some(BaseField::new(29).unwrap().from_int(4)))
                .unwrap_err(),
            Error::DIsASquare
        );
    }

    #[test]
    fn defining_relation_and_identity() {
        let e = ExtField::from_q(29).unwrap();
        let a = e.alpha();
        assert_eq!(e.mul(a, a), e.embed(e.d()));
        let g = e.from_ints(11, 17);
        assert_eq!(e.mul(e.one(), g), g);
        // (-3 + 2a)(-3 - 2a) = 9 - 4d = 9 - 8 = 1 for d = 2
        let p = e.from_ints(-3, 2);
        assert_eq!(e.mul(p, e.frobenius(p)), e.one());
    }

    #[test]
    fn norm_values() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(e.norm(e.from_ints(-3, 2)), e.base().one());
        assert_eq!(e.norm(e.alpha()), e.base().neg(e.d()));
        assert_eq!(e.norm(e.one()), e.base().one());
    }

    #[test]
    fn norm_agrees_with_power() {
        for q in [9u64, 13, 29] {
            let e = ExtField::from_q(q).unwrap();
            for g in e.elements().filter(|g| !g.is_zero()) {
                let via_pow = e.pow(g, q + 1);
                assert_eq!(via_pow, e.embed(e.norm(g)));
            }
        }
    }

    #[test]
    fn frobenius_is_an_involution_fixing_the_base() {
        let e = ExtField::from_q(27).unwrap();
        assert_eq!(e.frobenius(e.alpha()), e.neg(e.alpha()));
        for b in e.base().elements() {
            assert_eq!(e.frobenius(e.embed(b)), e.embed(b));
        }
        for g in e.elements() {
            assert_eq!(e.frobenius(e.frobenius(g)), g);
        }
    }

    #[test]
    fn alpha_square_iff_q_3_mod_4() {
        let e29 = ExtField::from_q(29).unwrap();
        assert!(!e29.is_square(e29.alpha()).unwrap());
        let e31 = ExtField::from_q(31).unwrap();
        assert!(e31.is_square(e31.alpha()).unwrap());
    }

    #[test]
    fn base_units_are_squares() {
        let e = ExtField::from_q(29).unwrap();
        for b in e.base().units() {
            assert!(e.is_square(e.embed(b)).unwrap());
        }
    }

    #[test]
    fn circle_structure() {
        for q in [9u64, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            let c = e.circle_subgroups();
            assert_eq!(c.circle.len() as u64, q + 1);
            assert_eq!(c.q0.len() as u64, q.div_ceil(2));
            assert_eq!(c.q1.len() as u64, q.div_ceil(2));
            // Q = Ker(N)
            let kernel: BTreeSet<_> = e
                .elements()
                .filter(|&g| !g.is_zero() && e.norm(g) == e.base().one())
                .collect();
            let circle: BTreeSet<_> = c.circle.iter().copied().collect();
            assert_eq!(kernel, circle);
            // Q0 = squares of circle elements
            let squares: BTreeSet<_> = c.circle.iter().map(|&g| e.mul(g, g)).collect();
            let q0: BTreeSet<_> = c.q0.iter().copied().collect();
            assert_eq!(squares, q0);
            assert!(q0.contains(&e.one()));
            // omega is a square
            assert!(e.is_square(e.omega()).unwrap());
        }
    }

    #[test]
    fn reference_q0_sets() {
        let e = ExtField::from_q(29).unwrap();
        let expected = set(
            &e,
            &[
                (-12, 12), (-12, -12), (-4, 14), (-4, -14), (-3, 2), (-3, -2),
                (1, 0), (2, 4), (2, -4), (7, 13), (7, -13), (10, 8), (10, -8),
                (14, 5), (14, -5),
            ],
        );
        let got: BTreeSet<_> = e.circle_subgroups().q0.into_iter().collect();
        assert_eq!(got, expected);

        let e = ExtField::from_q(31).unwrap();
        let mut expected = BTreeSet::new();
        for &(x, y) in &[(4i64, 6i64), (7, 4), (13, 5)] {
            for sx in [1i64, -1] {
                for sy in [1i64, -1] {
                    expected.insert(e.from_ints(sx * x, sy * y));
                }
            }
        }
        expected.insert(e.from_ints(1, 0));
        expected.insert(e.from_ints(-1, 0));
        expected.insert(e.from_ints(0, 14));
        expected.insert(e.from_ints(0, -14));
        let got: BTreeSet<_> = e.circle_subgroups().q0.into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn square_count_and_agreement() {
        for q in [9u64, 25, 29, 31] {
            let e = ExtField::from_q(q).unwrap();
            // is_square asserts the two criteria agree internally
            let squares = e
                .elements()
                .filter(|&g| !g.is_zero() && e.is_square(g).unwrap())
                .count() as u64;
            assert_eq!(squares, (q * q - 1) / 2);
        }
    }

    #[test]
    fn norm_is_multiplicative_and_surjective() {
        for q in [9u64, 13] {
            let e = ExtField::from_q(q).unwrap();
            let units: Vec<_> = e.elements().filter(|g| !g.is_zero()).collect();
            for &a in &units {
                for &b in &units {
                    assert_eq!(
                        e.norm(e.mul(a, b)),
                        e.base().mul(e.norm(a), e.norm(b))
                    );
                }
            }
            let image: BTreeSet<_> = units.iter().map(|&g| e.norm(g)).collect();
            assert_eq!(image.len() as u32, e.q() - 1);
        }
    }
}
