//! Exact arithmetic in GF(p) and GF(p^s).
//!
//! Elements are stored as the base-`p` packing of their coefficient vector in
//! the polynomial basis `1, x, ..., x^(s-1)` modulo the field's modulus, so the
//! packed value `sum c_i p^i` doubles as a total order on the field. Fields of
//! order up to [`TABLE_LIMIT`] carry exp/log tables for multiplication.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which discrete-log tables are built.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest supported characteristic (trial-division primality).
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// A field element, packed as `sum c_i p^i` over its coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf(pub(crate) u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn raw(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^s) with a fixed irreducible modulus and primitive
/// generator. Immutable after construction.
#[derive(Clone)]
pub struct Field {
    p: u64,
    s: u32,
    q: u64,
    /// Monic modulus, constant term first, length `s + 1`; empty when `s == 1`.
    modulus: Vec<u64>,
    generator: Gf,
    tables: Option<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.s == other.s
            && self.modulus == other.modulus
            && self.generator == other.generator
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.s)
        }
    }
}

impl Field {
    /// Builds GF(p^s) with the smallest monic irreducible modulus of degree
    /// `s` and the smallest primitive element, both in packed order.
    pub fn new(p: u64, s: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::Invalid("extension degree must be positive".into()));
        }
        let q = checked_pow(p, s)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, s })?;
        let modulus = if s == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, s)
        };
        let mut field = Field {
            p,
            s,
            q,
            modulus,
            generator: Gf::ONE,
            tables: None,
        };
        field.generator = field.find_primitive();
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        debug_assert_eq!(field.multiplicative_order(field.generator), q - 1);
        Ok(field)
    }

    /// Builds GF(p^s) with an explicit modulus (constant term first, monic,
    /// degree `s`). The modulus must be irreducible.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Invalid(
                "modulus must be monic with residues below p".into(),
            ));
        }
        let s = (modulus.len() - 1) as u32;
        if s == 1 {
            return Field::new(p, 1);
        }
        let q = checked_pow(p, s)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, s })?;
        if !poly::is_irreducible(modulus, p) {
            return Err(Error::Invalid("modulus is reducible".into()));
        }
        let mut field = Field {
            p,
            s,
            q,
            modulus: modulus.to_vec(),
            generator: Gf::ONE,
            tables: None,
        };
        field.generator = field.find_primitive();
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    /// Field order `q = p^s`.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> Gf {
        self.generator
    }

    pub fn is_prime_field(&self) -> bool {
        self.s == 1
    }

    /// All `q` elements in packed order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = Gf> + '_ {
        (0..self.q as u32).map(Gf)
    }

    /// Packed element, checked against the field order.
    pub fn element(&self, packed: u64) -> Result<Gf> {
        if packed < self.q {
            Ok(Gf(packed as u32))
        } else {
            Err(Error::InvalidElement(packed.to_string()))
        }
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, x: Gf) -> Vec<u64> {
        let mut v = x.0 as u64;
        (0..self.s)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Gf> {
        if coeffs.len() != self.s as usize {
            return Err(Error::LengthMismatch {
                expected: self.s as usize,
                got: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(c.to_string()));
        }
        Ok(Gf(pack(coeffs, self.p) as u32))
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            Gf(a.0 ^ b.0)
        } else if self.s == 1 {
            let t = a.0 as u64 + b.0 as u64;
            Gf(if t >= self.p { t - self.p } else { t } as u32)
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        if self.p == 2 {
            Gf(a.0 ^ b.0)
        } else if self.s == 1 {
            let (a, b) = (a.0 as u64, b.0 as u64);
            Gf(if a >= b { a - b } else { a + self.p - b } as u32)
        } else {
            self.digitwise(a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        self.sub(Gf::ZERO, a)
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        if let Some(t) = &self.tables {
            return Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]);
        }
        self.mul_slow(a, b)
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.is_zero() {
            Err(Error::InversionOfZero)
        } else {
            Ok(self.inv_nonzero(a))
        }
    }

    /// Inverse of an element known to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Gf) -> Gf {
        debug_assert!(!a.is_zero());
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize] as u64;
            return Gf(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize]);
        }
        self.pow(a, self.q - 2)
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Gf, mut e: u64) -> Gf {
        if e == 0 {
            return Gf::ONE;
        }
        if a.is_zero() {
            return Gf::ZERO;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize] as u128 * e as u128 % (self.q - 1) as u128;
            return Gf(t.exp[l as usize]);
        }
        let mut base = a;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x -> x^l`; a field automorphism when `l` is a power of `p`.
    pub fn frobenius(&self, x: Gf, l: u64) -> Gf {
        self.pow(x, l)
    }

    /// Multiplicative order of a nonzero element (0 for zero).
    pub fn multiplicative_order(&self, x: Gf) -> u64 {
        if x.is_zero() {
            return 0;
        }
        let mut ord = self.q - 1;
        for (l, _) in factorize(self.q - 1) {
            while ord.is_multiple_of(l) && self.pow(x, ord / l) == Gf::ONE {
                ord /= l;
            }
        }
        ord
    }

    /// An element of multiplicative order exactly `n`, namely
    /// `generator^((q-1)/n)`.
    pub fn element_of_order(&self, n: u64) -> Result<Gf> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::NoElementOfOrder { n, q: self.q });
        }
        let w = self.pow(self.generator, (self.q - 1) / n);
        if self.multiplicative_order(w) != n {
            return Err(Error::NoElementOfOrder { n, q: self.q });
        }
        Ok(w)
    }

    /// Order `l = p^(s/2)` of the subfield fixed by the hermitian conjugation,
    /// when `s` is even.
    pub fn conjugation_exponent(&self) -> Option<u64> {
        self.s.is_multiple_of(2).then(|| self.p.pow(self.s / 2))
    }

    /// Serialization header: `GF <p> <s> [c_0 ... c_s]`.
    pub fn header(&self) -> String {
        let mut out = format!("GF {} {}", self.p, self.s);
        for c in &self.modulus {
            out.push(' ');
            out.push_str(&c.to_string());
        }
        out
    }

    /// Element text: the residue for prime fields, comma-joined coefficients
    /// (constant first) otherwise.
    pub fn format_element(&self, x: Gf) -> String {
        if self.s == 1 {
            x.0.to_string()
        } else {
            self.coeffs(x)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Gf> {
        let bad = || Error::InvalidElement(text.to_string());
        if self.s == 1 {
            let v: u64 = text.trim().parse().map_err(|_| bad())?;
            return self.element(v).map_err(|_| bad());
        }
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs).map_err(|_| bad())
    }

    /// Parses a header line produced by [`Field::header`] and rebuilds the field.
    pub fn from_header(line: &str) -> Result<Field> {
        let mut it = line.split_whitespace();
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: msg.to_string(),
        };
        if it.next() != Some("GF") {
            return Err(bad("expected GF header"));
        }
        let nums = it
            .map(|t| t.parse::<u64>().map_err(|_| bad("non-numeric header field")))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() < 2 {
            return Err(bad("header needs p and s"));
        }
        let (p, s) = (nums[0], nums[1] as u32);
        let modulus = &nums[2..];
        if s == 1 {
            if !modulus.is_empty() {
                return Err(bad("prime field header carries no modulus"));
            }
            return Field::new(p, 1);
        }
        if modulus.len() != s as usize + 1 {
            return Err(bad("modulus length must be s + 1"));
        }
        let field = Field::with_modulus(p, modulus)?;
        Ok(field)
    }

    fn digitwise(&self, a: Gf, b: Gf, op: impl Fn(u64, u64, u64) -> u64) -> Gf {
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.s {
            out += op(x % self.p, y % self.p, self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Gf(out as u32)
    }

    fn mul_slow(&self, a: Gf, b: Gf) -> Gf {
        if self.s == 1 {
            return Gf((a.0 as u64 * b.0 as u64 % self.p) as u32);
        }
        if self.p == 2 {
            let s = self.s;
            let m = pack(&self.modulus, 2);
            let (mut x, mut y) = (a.0 as u64, b.0 as u64);
            let mut acc = 0u64;
            while y != 0 {
                if y & 1 == 1 {
                    acc ^= x;
                }
                y >>= 1;
                x <<= 1;
                if x >> s & 1 == 1 {
                    x ^= m;
                }
            }
            return Gf(acc as u32);
        }
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let r = poly::rem(&prod, &self.modulus, self.p);
        let mut digits = r;
        digits.resize(self.s as usize, 0);
        Gf(pack(&digits, self.p) as u32)
    }

    fn find_primitive(&self) -> Gf {
        if self.q == 2 {
            return Gf::ONE;
        }
        let factors = factorize(self.q - 1);
        (1..self.q as u32)
            .map(Gf)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&(l, _)| self.pow_slow(g, (self.q - 1) / l) != Gf::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn pow_slow(&self, a: Gf, mut e: u64) -> Gf {
        let mut base = a;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut exp = vec![0u32; 2 * q];
        let mut log = vec![0u32; q];
        let mut x = Gf::ONE;
        for (i, slot) in exp.iter_mut().enumerate().take(q - 1) {
            *slot = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        for i in q - 1..2 * q {
            exp[i] = exp[i - (q - 1)];
        }
        Tables { exp, log }
    }
}

fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn checked_pow(p: u64, s: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..s {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Smallest monic irreducible polynomial of degree `s` over GF(p), ordered by
/// the packed value of its lower coefficients.
fn smallest_irreducible(p: u64, s: u32) -> Vec<u64> {
    let count = p.pow(s);
    (0..count)
        .map(|v| {
            let mut f: Vec<u64> = (0..s).map(|i| v / p.pow(i) % p).collect();
            f.push(1);
            f
        })
        .find(|f| poly::is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

pub(crate) mod poly {
    //! Dense polynomials over GF(p), constant term first.

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        // p is prime
        let mut acc = 1u64;
        let (mut base, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = r[r.len() - 1] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - c * mi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Ben-Or test: `f` of degree `s` is irreducible iff it has no factor of
    /// degree `1..=s/2`, i.e. `gcd(x^(p^i) - x, f) = 1` for those `i`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let f = trim(f.to_vec());
        if f.len() < 2 {
            return false;
        }
        let s = f.len() - 1;
        if s == 1 {
            return true;
        }
        let mut h = vec![0u64, 1u64];
        for _ in 0..s / 2 {
            h = powmod(&h, p, &f, p);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(&f, &diff, p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic trial-division primality for `n <= 2^32 - 1`.
pub fn is_prime(n: u64) -> bool {
    if !(2..=MAX_PRIME).contains(&n) {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(l, _)| acc / l * (l - 1))
}

/// `Some((p, s))` when `q = p^s` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, s)] => Some((*p, *s)),
        _ => None,
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, n);
        }
        b = mul_mod(b, b, n);
        e >>= 1;
    }
    acc
}

/// Least `s >= 1` with `p^s = 1 (mod n)`: the smallest extension degree of
/// GF(p) containing an element of order `n`.
pub fn order_mod(p: u64, n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Invalid("length must be positive".into()));
    }
    if gcd(p, n) != 1 {
        return Err(Error::CharacteristicDividesLength { p, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let phi = euler_phi(n);
    let mut divisors: Vec<u64> = (1..)
        .take_while(|d| d * d <= phi)
        .filter(|d| phi.is_multiple_of(*d))
        .flat_map(|d| [d, phi / d])
        .collect();
    divisors.sort_unstable();
    divisors.dedup();
    let s = divisors
        .into_iter()
        .find(|&d| pow_mod(p, d, n) == 1)
        .expect("Euler: p^phi(n) = 1 mod n");
    Ok(s as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_mod_examples() {
        assert_eq!(order_mod(2, 7).unwrap(), 3);
        assert_eq!(order_mod(29, 7).unwrap(), 1);
        assert_eq!(order_mod(3, 400).unwrap(), 20);
        assert_eq!(order_mod(5, 1).unwrap(), 1);
        assert_eq!(
            order_mod(2, 10),
            Err(Error::CharacteristicDividesLength { p: 2, n: 10 })
        );
    }

    #[test]
    fn order_mod_is_least() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for n in 1..200u64 {
                let Ok(s) = order_mod(p, n) else {
                    assert_ne!(gcd(p, n), 1);
                    continue;
                };
                assert_eq!(pow_mod(p, s as u64, n), 1 % n);
                assert!((1..s).all(|m| pow_mod(p, m as u64, n) != 1 % n));
                assert_eq!(euler_phi(n) % s as u64, 0);
            }
        }
    }

    #[test]
    fn prime_field_generator() {
        let f = Field::new(11, 1).unwrap();
        assert_eq!(f.generator(), Gf(2));
        assert_eq!(f.add(Gf(5), Gf(9)), Gf(3));
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.generator(), Gf::ONE);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(Field::new(9, 1), Err(Error::NotPrime(9)));
        assert!(matches!(Field::new(2, 33), Err(Error::FieldTooLarge { .. })));
    }

    /// Exhaustive oracle: all monic cubics over GF(2) checked for roots.
    #[test]
    fn gf8_modulus_and_generator() {
        let f = Field::new(2, 3).unwrap();
        let irreducible: Vec<Vec<u64>> = (0..4u64)
            .map(|v| vec![v & 1, v >> 1 & 1, 0, 1])
            .chain((0..4u64).map(|v| vec![v & 1, v >> 1 & 1, 1, 1]))
            .filter(|c| (0..2u64).all(|x| (c[0] + c[1] * x + c[2] * x + c[3] * x) % 2 != 0))
            .collect();
        assert!(irreducible.contains(&f.modulus().to_vec()));
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f.multiplicative_order(f.generator()), 7);
        let nonzero: Vec<Gf> = f.elements().skip(1).collect();
        assert_eq!(
            nonzero
                .iter()
                .filter(|&&x| f.multiplicative_order(x) == 7)
                .count(),
            6
        );
        for &x in &nonzero {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Gf::ONE);
        }
    }

    #[test]
    fn element_of_order_examples() {
        let f = Field::new(11, 1).unwrap();
        assert_eq!(f.element_of_order(10).unwrap(), Gf(2));
        assert_eq!(f.element_of_order(1).unwrap(), Gf::ONE);
        assert!(matches!(
            f.element_of_order(3),
            Err(Error::NoElementOfOrder { .. })
        ));
        let g8 = Field::new(2, 3).unwrap();
        let w = g8.element_of_order(7).unwrap();
        assert_eq!(g8.multiplicative_order(w), 7);
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = Field::new(7, 2).unwrap();
        assert_eq!(f.inv(Gf::ZERO), Err(Error::InversionOfZero));
    }

    #[test]
    fn frobenius_twice_is_identity_in_gf121() {
        let f = Field::new(11, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.frobenius(f.frobenius(x, 11), 11), x);
        }
    }

    #[test]
    fn fermat_holds_exhaustively() {
        for (p, s) in [(2, 4), (3, 4), (5, 2), (13, 1), (2, 8), (7, 2)] {
            let f = Field::new(p, s).unwrap();
            let q = f.order();
            for x in f.elements().skip(1) {
                assert_eq!(f.pow(x, q - 1), Gf::ONE, "{f} at {x:?}");
            }
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = Field::new(3, 4).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(5) {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn header_roundtrip() {
        for (p, s) in [(11, 1), (2, 3), (3, 4), (11, 2)] {
            let f = Field::new(p, s).unwrap();
            assert_eq!(Field::from_header(&f.header()).unwrap(), f);
        }
        assert_eq!(Field::new(2, 3).unwrap().header(), "GF 2 3 1 1 0 1");
        assert_eq!(Field::new(11, 1).unwrap().header(), "GF 11 1");
    }
}
