//! Exact arithmetic in GF(q) for odd prime powers q.
//!
//! Elements are stored as canonical indices: the coefficient tuple
//! (c0, ..., c_{e-1}) of an element (low degree first) is packed
//! big-endian, so that the numeric order of indices coincides with the
//! lexicographic order of coefficient tuples. Multiplication runs on
//! discrete-log tables, addition on a Zech-logarithm table.

use crate::error::{Error, Result};

/// Largest supported base-field order; keeps every lookup table in memory.
pub const MAX_Q: u64 = 1 << 13;

const SENTINEL: u32 = u32::MAX;

/// An element of GF(q), identified by its canonical coefficient-tuple index.
/// Index 0 is the zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseElement(pub u32);

impl BaseElement {
    pub const ZERO: BaseElement = BaseElement(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// GF(q) = GF(p^e) with a deterministic canonical construction: the
/// lexicographically smallest monic irreducible of degree e, and the
/// primitive element with the smallest coefficient tuple.
#[derive(Debug, Clone)]
pub struct BaseField {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus, low degree first, length e+1.
    irreducible: Vec<u32>,
    generator: BaseElement,
    /// exp[k] = index of generator^k, k in 0..q-1.
    exp: Vec<u32>,
    /// log[i] = discrete log of element i; log[0] is a sentinel.
    log: Vec<u32>,
    /// zech[k] = log(1 + generator^k), SENTINEL when the sum is zero.
    zech: Vec<u32>,
}

/// Splits q as p^e with p prime, or None.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    for cand in 2..=q {
        if cand * cand > q {
            p = q; // q itself is prime
            break;
        }
        if q.is_multiple_of(cand) {
            p = cand;
            break;
        }
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Some((p, e))
    } else {
        None
    }
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

/// Polynomial helpers over GF(p); vectors are low degree first.
mod poly {
    pub fn trim(v: &mut Vec<u32>) {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of a modulo the monic polynomial m.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
            let shift = r.len() - 1 - dm;
            let lead = *r.last().unwrap();
            if lead == 0 {
                r.pop();
                continue;
            }
            for i in 0..m.len() {
                let sub = (lead * m[i]) % p;
                r[shift + i] = (r[shift + i] + p * p - sub) % p;
            }
            trim(&mut r);
            if r.len() - 1 < dm {
                break;
            }
        }
        r
    }

    pub fn is_zero(a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }
}

impl BaseField {
    /// Builds GF(q) with the canonical modulus and generator.
    pub fn new(q: u64) -> Result<BaseField> {
        let (p, e) = prime_power(q).ok_or(Error::NotAnOddPrimePower(q))?;
        if p == 2 || e == 0 || q < 3 {
            return Err(Error::NotAnOddPrimePower(q));
        }
        if q > MAX_Q {
            return Err(Error::SizeLimitExceeded(q));
        }
        let p = p as u32;
        let q = q as u32;

        let irreducible = Self::canonical_irreducible(p, e);
        let mut field = BaseField {
            p,
            e,
            q,
            irreducible,
            generator: BaseElement(0),
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
        };
        field.generator = field.find_generator();
        field.build_tables();
        Ok(field)
    }

    /// Lexicographically smallest monic irreducible of degree e,
    /// found by trial division against every monic poly of degree <= e/2.
    fn canonical_irreducible(p: u32, e: u32) -> Vec<u32> {
        if e == 1 {
            return vec![0, 1]; // t
        }
        let pe = (p as u64).pow(e);
        for n in 0..pe {
            // c0 is the most significant digit of n, so increasing n walks
            // the coefficient tuples (c0, ..., c_{e-1}) in lex order
            let mut digits = vec![0u32; e as usize];
            let mut rest = n;
            for i in (0..e as usize).rev() {
                digits[i] = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            let mut cand = vec![0u32; e as usize + 1];
            cand[e as usize] = 1;
            cand[..e as usize].copy_from_slice(&digits);
            if Self::is_irreducible(&cand, p) {
                return cand;
            }
        }
        unreachable!("a monic irreducible of every degree exists")
    }

    fn is_irreducible(cand: &[u32], p: u32) -> bool {
        let e = cand.len() - 1;
        for deg in 1..=e / 2 {
            let count = (p as u64).pow(deg as u32);
            for n in 0..count {
                let mut div = vec![0u32; deg + 1];
                div[deg] = 1;
                let mut rest = n;
                for c in div.iter_mut().take(deg) {
                    *c = (rest % p as u64) as u32;
                    rest /= p as u64;
                }
                if poly::is_zero(&poly::rem(cand, &div, p)) {
                    return false;
                }
            }
        }
        true
    }

    fn digits_of(&self, idx: u32) -> Vec<u32> {
        let mut digits = vec![0u32; self.e as usize];
        let mut rest = idx;
        for i in (0..self.e as usize).rev() {
            digits[i] = rest % self.p;
            rest /= self.p;
        }
        // rest extraction is least-significant-first; positions reversed give
        // c0 as the most significant digit
        digits
    }

    fn index_of(&self, digits: &[u32]) -> u32 {
        let mut idx = 0u32;
        for &d in digits.iter() {
            idx = idx * self.p + d;
        }
        idx
    }

    /// Multiplication on coefficient tuples, used only while bootstrapping
    /// the log tables.
    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let da = self.digits_of(a);
        let db = self.digits_of(b);
        let prod = poly::mul(&da, &db, self.p);
        let mut red = poly::rem(&prod, &self.irreducible, self.p);
        red.resize(self.e as usize, 0);
        self.index_of(&red)
    }

    fn pow_raw(&self, mut base: u32, mut n: u64) -> u32 {
        let mut acc = self.index_of(&{
            let mut one = vec![0; self.e as usize];
            one[0] = 1;
            one
        });
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            n >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> BaseElement {
        let one = self.one().0;
        let factors = prime_factors(self.q as u64 - 1);
        for idx in 1..self.q {
            let primitive = factors
                .iter()
                .all(|&r| self.pow_raw(idx, (self.q as u64 - 1) / r) != one);
            if primitive {
                return BaseElement(idx);
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        self.exp = vec![0; q - 1];
        self.log = vec![SENTINEL; q];
        let mut cur = self.one().0;
        for k in 0..q - 1 {
            self.exp[k] = cur;
            self.log[cur as usize] = k as u32;
            cur = self.mul_raw(cur, self.generator.0);
        }
        debug_assert_eq!(cur, self.one().0);
        self.zech = vec![SENTINEL; q - 1];
        let one = self.one().0;
        for k in 0..q - 1 {
            let sum = self.add_digits(one, self.exp[k]);
            if sum != 0 {
                self.zech[k] = self.log[sum as usize];
            }
        }
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let da = self.digits_of(a);
        let db = self.digits_of(b);
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index_of(&sum)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low degree first.
    pub fn irreducible(&self) -> &[u32] {
        &self.irreducible
    }

    pub fn generator(&self) -> BaseElement {
        self.generator
    }

    pub fn zero(&self) -> BaseElement {
        BaseElement(0)
    }

    pub fn one(&self) -> BaseElement {
        let mut one = vec![0; self.e as usize];
        one[0] = 1;
        BaseElement(self.index_of(&one))
    }

    /// Embeds an integer as a prime-subfield constant.
    pub fn from_int(&self, v: i64) -> BaseElement {
        let c = v.rem_euclid(self.p as i64) as u32;
        let mut digits = vec![0; self.e as usize];
        digits[0] = c;
        BaseElement(self.index_of(&digits))
    }

    pub fn element(&self, idx: u32) -> BaseElement {
        assert!(idx < self.q, "element index out of range");
        BaseElement(idx)
    }

    pub fn elements(&self) -> impl Iterator<Item = BaseElement> {
        (0..self.q).map(BaseElement)
    }

    pub fn units(&self) -> impl Iterator<Item = BaseElement> {
        (1..self.q).map(BaseElement)
    }

    /// Coefficient tuple of x, low degree first.
    pub fn coefficients(&self, x: BaseElement) -> Vec<u32> {
        self.digits_of(x.0)
    }

    pub fn from_coefficients(&self, digits: &[u32]) -> BaseElement {
        assert_eq!(digits.len(), self.e as usize);
        assert!(digits.iter().all(|&d| d < self.p));
        BaseElement(self.index_of(digits))
    }

    /// Discrete log of a nonzero element with respect to the generator.
    pub fn discrete_log(&self, x: BaseElement) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(self.log[x.0 as usize])
    }

    pub fn from_log(&self, k: u32) -> BaseElement {
        BaseElement(self.exp[(k % (self.q - 1)) as usize])
    }

    pub fn add(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (ka, kb) = (self.log[a.0 as usize], self.log[b.0 as usize]);
        let m = (kb + self.q - 1 - ka) % (self.q - 1);
        match self.zech[m as usize] {
            SENTINEL => BaseElement(0),
            z => BaseElement(self.exp[((ka + z) % (self.q - 1)) as usize]),
        }
    }

    pub fn neg(&self, a: BaseElement) -> BaseElement {
        if a.is_zero() {
            return a;
        }
        let k = self.log[a.0 as usize];
        let half = (self.q - 1) / 2;
        BaseElement(self.exp[((k + half) % (self.q - 1)) as usize])
    }

    pub fn sub(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if a.is_zero() || b.is_zero() {
            return BaseElement(0);
        }
        let k = (self.log[a.0 as usize] + self.log[b.0 as usize]) % (self.q - 1);
        BaseElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: BaseElement) -> Result<BaseElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = (self.q - 1 - self.log[a.0 as usize]) % (self.q - 1);
        Ok(BaseElement(self.exp[k as usize]))
    }

    pub fn div(&self, a: BaseElement, b: BaseElement) -> Result<BaseElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: BaseElement, n: u64) -> BaseElement {
        if a.is_zero() {
            return if n == 0 { self.one() } else { BaseElement(0) };
        }
        let k = (self.log[a.0 as usize] as u64 * (n % (self.q as u64 - 1))) % (self.q as u64 - 1);
        BaseElement(self.exp[k as usize])
    }

    /// True iff x is a nonzero square, i.e. its discrete log is even.
    pub fn is_square(&self, x: BaseElement) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(self.log[x.0 as usize].is_multiple_of(2))
    }

    /// The non-square with the smallest coefficient tuple.
    pub fn smallest_nonsquare(&self) -> BaseElement {
        self.units()
            .find(|&x| !self.is_square(x).unwrap())
            .expect("half the units are non-squares")
    }

    pub fn multiplicative_order(&self, x: BaseElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.q as u64 - 1;
        let k = self.log[x.0 as usize] as u64;
        let g = gcd(n, k);
        Ok(n / g)
    }

    /// Symmetric integer lift of the canonical index, used for display:
    /// values above (q-1)/2 wrap to negatives. For prime fields this is the
    /// usual symmetric residue.
    pub fn symmetric_int(&self, x: BaseElement) -> i64 {
        let v = x.0 as i64;
        if v > (self.q as i64 - 1) / 2 {
            v - self.q as i64
        } else {
            v
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(BaseField::new(8).unwrap_err(), Error::NotAnOddPrimePower(8));
        assert_eq!(
            BaseField::new(15).unwrap_err(),
            Error::NotAnOddPrimePower(15)
        );
        assert_eq!(BaseField::new(1).unwrap_err(), Error::NotAnOddPrimePower(1));
        assert_eq!(
            BaseField::new(8193).unwrap_err(),
            Error::NotAnOddPrimePower(8193)
        );
        assert_eq!(
            BaseField::new(19683).unwrap_err(),
            Error::SizeLimitExceeded(19683)
        );
    }

    #[test]
    fn gf29_generator_is_two() {
        // 2 is the smallest primitive root mod 29 (checked by the order
        // search itself; pinned here as a regression value)
        let f = BaseField::new(29).unwrap();
        assert_eq!(f.p(), 29);
        assert_eq!(f.e(), 1);
        assert_eq!(f.generator(), f.from_int(2));
    }

    #[test]
    fn gf9_splits_as_3_squared() {
        let f = BaseField::new(9).unwrap();
        assert_eq!((f.p(), f.e()), (3, 2));
        assert_eq!(f.multiplicative_order(f.generator()).unwrap(), 8);
    }

    #[test]
    fn gf29_arith() {
        let f = BaseField::new(29).unwrap();
        assert_eq!(f.add(f.from_int(14), f.from_int(15)), f.zero());
        // 2 * 15 = 30 = 1 mod 29
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(15));
    }

    #[test]
    fn gf31_inverse_of_three() {
        // 3 * 21 = 63 = 1 mod 31
        let f = BaseField::new(31).unwrap();
        assert_eq!(f.mul(f.from_int(3), f.from_int(21)), f.one());
    }

    #[test]
    fn division_by_zero() {
        let f = BaseField::new(29).unwrap();
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
        assert_eq!(
            f.div(f.one(), f.zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn minus_one_square_iff_q_1_mod_4() {
        let f29 = BaseField::new(29).unwrap();
        assert!(f29.is_square(f29.from_int(-1)).unwrap());
        let f31 = BaseField::new(31).unwrap();
        assert!(!f31.is_square(f31.from_int(-1)).unwrap());
        assert!(!f29.is_square(f29.from_int(2)).unwrap());
    }

    #[test]
    fn smallest_nonsquares() {
        assert_eq!(
            BaseField::new(29).unwrap().smallest_nonsquare().index(),
            2
        );
        // 2 is a square mod 31, so the smallest non-square is 3
        assert_eq!(
            BaseField::new(31).unwrap().smallest_nonsquare().index(),
            3
        );
        assert_eq!(BaseField::new(3).unwrap().smallest_nonsquare().index(), 2);
    }

    #[test]
    fn zero_is_not_a_unit() {
        let f = BaseField::new(29).unwrap();
        assert_eq!(f.is_square(f.zero()).unwrap_err(), Error::NotAUnit);
    }

    #[test]
    fn square_counts_and_product_rule() {
        for q in [3u64, 5, 7, 9, 13, 25, 27, 29, 31, 49, 81] {
            let f = BaseField::new(q).unwrap();
            let squares: Vec<_> = f.units().filter(|&x| f.is_square(x).unwrap()).collect();
            assert_eq!(squares.len() as u32, (f.q() - 1) / 2, "q={q}");
            let n = f.smallest_nonsquare();
            for x in f.units() {
                let prod = f.mul(x, n);
                let expect = !f.is_square(x).unwrap();
                assert_eq!(f.is_square(prod).unwrap(), expect, "q={q}");
            }
            // -n is a square iff q = 3 mod 4, for every non-square n
            for x in f.units().filter(|&x| !f.is_square(x).unwrap()) {
                assert_eq!(f.is_square(f.neg(x)).unwrap(), q % 4 == 3, "q={q}");
            }
        }
    }

    #[test]
    fn coefficient_round_trip() {
        for q in [9u64, 27, 29, 49, 81] {
            let f = BaseField::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.from_coefficients(&f.coefficients(x)), x);
            }
        }
    }

    #[test]
    fn log_round_trip() {
        for q in [27u64, 29] {
            let f = BaseField::new(q).unwrap();
            for x in f.units() {
                assert_eq!(f.from_log(f.discrete_log(x).unwrap()), x);
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms_gf49(a in 0u32..49, b in 0u32..49, c in 0u32..49) {
            let f = BaseField::new(49).unwrap();
            let (a, b, c) = (f.element(a), f.element(b), f.element(c));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !b.is_zero() {
                prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
    }
}
