//! Prime fields `F_p` and their extensions `F_{p^k}`.
//!
//! Every field is stored as an absolute extension of its prime field,
//! `F_p[X]/(f)` with `f` monic irreducible of degree `k`. An element is a
//! coefficient vector in the power basis `1, X, ..., X^{k-1}`, packed into a
//! single `u64` as `sum c_i p^i`. Fields built with [`extend_field`] also keep
//! the embedding of the field they were built from, which is how points and
//! polynomials over a base field are moved up into an extension.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{checked_pow, is_prime, pow_mod, prime_divisors};
use crate::error::FieldError;
use crate::limits::Limits;
use crate::poly::UniPoly;

const MAX_DEGREE: usize = 64;
const LOG_TABLE_LIMIT: u64 = 1 << 20;

/// An element of some [`Field`], packed as `sum c_i p^i`.
///
/// The packed value doubles as the element's position in the canonical
/// enumeration order of its field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub const fn from_index(index: u64) -> Self {
        FieldElement(index)
    }

    pub const fn index(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field handle. Cloning is cheap; handles are immutable.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

#[derive(Clone)]
struct Inner {
    p: u64,
    degree: u32,
    order: u64,
    seed: u64,
    /// Low coefficients `c_0..c_{k-1}` of the monic defining polynomial.
    modulus: Vec<u64>,
    powers: Vec<u64>,
    base: Option<BaseLink>,
    tables: Option<Tables>,
    /// Characteristic 2 only: `f - X^k` as a bit mask.
    modulus_bits: u64,
    lazy_reduction: bool,
}

#[derive(Clone)]
struct BaseLink {
    field: Field,
    generator_image: FieldElement,
}

#[derive(Clone)]
struct Tables {
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Builds `F_{p^k}` with the default [`Limits`].
pub fn make_field(p: u64, k: u32, seed: u64) -> Result<Field, FieldError> {
    make_field_with(p, k, seed, &Limits::default())
}

/// Builds `F_{p^k}`. The defining polynomial is the first irreducible
/// candidate produced by a ChaCha stream seeded from `(p, k, seed)`, so the
/// same arguments give the same field on every platform.
pub fn make_field_with(p: u64, k: u32, seed: u64, limits: &Limits) -> Result<Field, FieldError> {
    if p >= 1 << 31 {
        return Err(FieldError::CharacteristicTooLarge(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let order = checked_pow(p, k)
        .filter(|&q| q <= limits.arithmetic_cap)
        .ok_or(FieldError::CapExceeded { p, degree: k, cap: limits.arithmetic_cap })?;
    if k as usize >= MAX_DEGREE {
        return Err(FieldError::CapExceeded { p, degree: k, cap: limits.arithmetic_cap });
    }
    let modulus = if k == 1 { Vec::new() } else { find_defining_polynomial(p, k, seed) };
    Ok(Field { inner: Arc::new(Inner::new(p, k, order, seed, modulus, None)) })
}

/// Builds `F_{q^m}` over `base = F_q` with the default [`Limits`].
pub fn extend_field(base: &Field, m: u32, seed: u64) -> Result<Field, FieldError> {
    extend_field_with(base, m, seed, &Limits::default())
}

/// Builds `F_{q^m}` as an absolute extension of `F_p` and records an
/// embedding of `base` into it.
///
/// The base generator is sent to the smallest root of the base defining
/// polynomial that is compatible with the base's own stored embeddings, so
/// that embeddings along a tower compose to the embedding a direct
/// extension would choose.
pub fn extend_field_with(
    base: &Field,
    m: u32,
    seed: u64,
    limits: &Limits,
) -> Result<Field, FieldError> {
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if m == 1 {
        return Ok(base.clone());
    }
    let degree = base
        .degree()
        .checked_mul(m)
        .ok_or(FieldError::CapExceeded { p: base.characteristic(), degree: u32::MAX, cap: limits.arithmetic_cap })?;
    let plain = make_field_with(base.characteristic(), degree, seed, limits)?;
    let generator_image = canonical_generator_image(base, &plain)?;
    let mut inner = Arc::unwrap_or_clone(plain.inner);
    inner.base = Some(BaseLink { field: base.clone(), generator_image });
    Ok(Field { inner: Arc::new(inner) })
}

fn find_defining_polynomial(p: u64, k: u32, seed: u64) -> Vec<u64> {
    let prime = Field { inner: Arc::new(Inner::new(p, 1, p, seed, Vec::new(), None)) };
    let stream = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(p.rotate_left(17))
        .wrapping_add(u64::from(k).rotate_left(43));
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    loop {
        let mut coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if coeffs[0] == 0 {
            coeffs[0] = rng.gen_range(1..p);
        }
        let mut full: Vec<FieldElement> = coeffs.iter().map(|&c| FieldElement(c)).collect();
        full.push(prime.one());
        let candidate = UniPoly::new(&prime, full);
        if candidate.is_irreducible() {
            return coeffs;
        }
    }
}

fn canonical_generator_image(sub: &Field, target: &Field) -> Result<FieldElement, FieldError> {
    if sub.degree() == 1 {
        return Ok(FieldElement::ZERO);
    }
    let modulus = UniPoly::new(
        target,
        sub.defining_polynomial().into_iter().map(FieldElement).collect(),
    );
    let roots: Vec<FieldElement> = modulus.roots(target.seed()).into_iter().map(|(r, _)| r).collect();
    match &sub.inner.base {
        Some(link) if link.field.degree() > 1 => {
            let wanted = canonical_generator_image(&link.field, target)?;
            roots
                .into_iter()
                .find(|&r| horner(target, sub, link.generator_image, r) == wanted)
                .ok_or(FieldError::EmbeddingRootNotFound)
        }
        _ => roots.first().copied().ok_or(FieldError::EmbeddingRootNotFound),
    }
}

/// Evaluates the coefficient vector of `x ∈ source` at `image ∈ target`.
fn horner(target: &Field, source: &Field, x: FieldElement, image: FieldElement) -> FieldElement {
    if source.degree() == 1 {
        return x;
    }
    let coeffs = source.coefficients(x);
    coeffs
        .iter()
        .rev()
        .fold(FieldElement::ZERO, |acc, &c| target.add(target.mul(acc, image), FieldElement(c)))
}

impl Inner {
    fn new(p: u64, degree: u32, order: u64, seed: u64, modulus: Vec<u64>, base: Option<BaseLink>) -> Inner {
        let mut powers = Vec::with_capacity(degree as usize);
        let mut acc = 1u64;
        for i in 0..degree {
            powers.push(acc);
            if i + 1 < degree {
                acc *= p;
            }
        }
        let modulus_bits = if p == 2 { modulus.iter().enumerate().map(|(i, &c)| c << i).sum() } else { 0 };
        let bound = u128::from(degree) * 3 * u128::from(p - 1) * u128::from(p - 1);
        let lazy_reduction = bound < u128::from(u64::MAX);
        let mut inner =
            Inner { p, degree, order, seed, modulus, powers, base, tables: None, modulus_bits, lazy_reduction };
        if degree > 1 && order <= LOG_TABLE_LIMIT {
            inner.tables = Some(inner.build_tables());
        }
        inner
    }

    fn build_tables(&self) -> Tables {
        let q = self.order;
        let group = q - 1;
        let primes = prime_divisors(group);
        let generator = (1..q)
            .map(FieldElement)
            .find(|&g| primes.iter().all(|&r| self.pow_generic(g, group / r) != FieldElement(1)))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = alloc::vec![0u32; q as usize];
        let mut x = FieldElement(1);
        for i in 0..group {
            exp.push(x.0 as u32);
            log[x.0 as usize] = i as u32;
            x = self.mul_generic(x, generator);
        }
        for i in 0..group as usize {
            exp.push(exp[i]);
        }
        Tables { exp, log }
    }

    fn unpack(&self, mut x: u64, out: &mut [u64; MAX_DEGREE]) {
        for slot in out.iter_mut().take(self.degree as usize) {
            *slot = x % self.p;
            x /= self.p;
        }
    }

    fn pack(&self, digits: &[u64]) -> FieldElement {
        FieldElement(digits.iter().zip(&self.powers).map(|(d, w)| d * w).sum())
    }

    fn mul_generic(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p;
        let k = self.degree as usize;
        if k == 1 {
            return FieldElement(a.0 * b.0 % p);
        }
        if p == 2 {
            return self.mul_binary(a, b);
        }
        let mut da = [0u64; MAX_DEGREE];
        let mut db = [0u64; MAX_DEGREE];
        self.unpack(a.0, &mut da);
        self.unpack(b.0, &mut db);
        if self.lazy_reduction {
            return self.mul_lazy(&da, &db);
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = c * self.modulus[j] % p;
                prod[i - k + j] = (prod[i - k + j] + p - t) % p;
            }
            prod[i] = 0;
        }
        self.pack(&prod[..k])
    }

    /// Characteristic 2: the packed value is the coefficient bit vector.
    fn mul_binary(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let k = self.degree;
        let (mut x, y) = (a.0, b.0);
        let mut acc = 0u64;
        for i in 0..k {
            if y >> i & 1 == 1 {
                acc ^= x;
            }
            // x <- x * X mod f
            let carry = x >> (k - 1) & 1;
            x = (x << 1) & (self.order - 1);
            if carry == 1 {
                x ^= self.modulus_bits;
            }
        }
        FieldElement(acc)
    }

    /// Products accumulate unreduced; safe while `3k(p-1)^2` fits in a `u64`.
    fn mul_lazy(&self, da: &[u64; MAX_DEGREE], db: &[u64; MAX_DEGREE]) -> FieldElement {
        let p = self.p;
        let k = self.degree as usize;
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += da[i] * db[j];
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i] % p;
            if c != 0 {
                let neg = p - c;
                for j in 0..k {
                    prod[i - k + j] += neg * self.modulus[j];
                }
            }
        }
        let mut out = 0u64;
        for i in (0..k).rev() {
            out = out * p + prod[i] % p;
        }
        FieldElement(out)
    }

    fn pow_generic(&self, mut x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_generic(acc, x);
            }
            x = self.mul_generic(x, x);
            e >>= 1;
        }
        acc
    }
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    /// Absolute degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    /// Cardinality `q = p^k`.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn seed(&self) -> u64 {
        self.inner.seed
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.degree == 1
    }

    /// Field spec string `p^k` (just `p` for a prime field).
    pub fn spec(&self) -> String {
        if self.is_prime_field() {
            format!("{}", self.inner.p)
        } else {
            format!("{}^{}", self.inner.p, self.inner.degree)
        }
    }

    /// Full coefficient list (little-endian, monic) of the defining
    /// polynomial; `[0, 1]` for a prime field.
    pub fn defining_polynomial(&self) -> Vec<u64> {
        if self.is_prime_field() {
            return alloc::vec![0, 1];
        }
        let mut out = self.inner.modulus.clone();
        out.push(1);
        out
    }

    /// The field this one was built from by [`extend_field`], if any.
    pub fn base(&self) -> Option<&Field> {
        self.inner.base.as_ref().map(|link| &link.field)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The class of `X` in `F_p[X]/(f)`; `1` in a prime field.
    pub fn generator(&self) -> FieldElement {
        if self.is_prime_field() {
            FieldElement(1)
        } else {
            FieldElement(self.inner.p)
        }
    }

    /// Reduces an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u64)
    }

    /// Builds an element from power-basis coefficients; missing trailing
    /// coefficients are zero, extra ones are ignored.
    pub fn from_coefficients(&self, coeffs: &[u64]) -> FieldElement {
        let digits: Vec<u64> = (0..self.inner.degree as usize)
            .map(|i| coeffs.get(i).map_or(0, |c| c % self.inner.p))
            .collect();
        self.inner.pack(&digits)
    }

    pub fn coefficients(&self, x: FieldElement) -> Vec<u64> {
        let mut digits = [0u64; MAX_DEGREE];
        self.inner.unpack(x.0, &mut digits);
        digits[..self.inner.degree as usize].to_vec()
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.inner.order
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        let p = inner.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if inner.degree == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0u64);
        for w in &inner.powers {
            let d = x % p + y % p;
            out += if d >= p { d - p } else { d } * w;
            x /= p;
            y /= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        let p = inner.p;
        if p == 2 {
            return a;
        }
        if inner.degree == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut x, mut out) = (a.0, 0u64);
        for w in &inner.powers {
            let d = x % p;
            out += if d == 0 { 0 } else { p - d } * w;
            x /= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement(0)
                } else {
                    let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                    FieldElement(u64::from(t.exp[i]))
                }
            }
            None => self.inner.mul_generic(a, b),
        }
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        if let Some(t) = &self.inner.tables {
            if x.0 == 0 {
                return FieldElement(u64::from(e == 0));
            }
            let group = self.inner.order - 1;
            e %= group;
            let i = (t.log[x.0 as usize] as u64 * e) % group;
            return FieldElement(u64::from(t.exp[i as usize]));
        }
        if self.inner.degree == 1 {
            return FieldElement(pow_mod(x.0, e, self.inner.p));
        }
        self.inner.pow_generic(x, e)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: FieldElement) -> Option<FieldElement> {
        if x.0 == 0 {
            return None;
        }
        if let Some(t) = &self.inner.tables {
            let group = self.inner.order - 1;
            let i = (group - t.log[x.0 as usize] as u64) % group;
            return Some(FieldElement(u64::from(t.exp[i as usize])));
        }
        Some(self.pow(x, self.inner.order - 2))
    }

    /// `x^(p^iterate)`.
    pub fn frobenius(&self, x: FieldElement, iterate: u32) -> FieldElement {
        let steps = iterate % self.inner.degree;
        (0..steps).fold(x, |acc, _| self.pow(acc, self.inner.p))
    }

    /// Inverse of the absolute Frobenius: the unique `y` with `y^p = x`.
    pub fn pth_root(&self, x: FieldElement) -> FieldElement {
        if self.inner.degree == 1 {
            return x;
        }
        self.frobenius(x, self.inner.degree - 1)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: FieldElement) -> Option<u64> {
        if x.0 == 0 {
            return None;
        }
        let mut ord = self.inner.order - 1;
        for r in prime_divisors(ord) {
            while ord.is_multiple_of(r) && self.pow(x, ord / r) == self.one() {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// All elements in canonical order, unchecked against any cap.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.inner.order).map(FieldElement)
    }

    /// Elements with packed index in `range`.
    pub fn element_range(&self, range: Range<u64>) -> impl Iterator<Item = FieldElement> {
        let end = range.end.min(self.inner.order);
        (range.start.min(end)..end).map(FieldElement)
    }

    /// All `q` elements exactly once, in lexicographic order of the
    /// coefficient vector read from the top coefficient down.
    pub fn enumerate_elements(&self, limits: &Limits) -> Result<Vec<FieldElement>, FieldError> {
        if self.inner.order > limits.enumeration_cap {
            return Err(FieldError::CapExceeded {
                p: self.inner.p,
                degree: self.inner.degree,
                cap: limits.enumeration_cap,
            });
        }
        Ok(self.elements().collect())
    }

    /// Embedding of `sub` into `self`, following the chain of fields `self`
    /// was built from. The prime field embeds everywhere.
    pub fn embedding_from(&self, sub: &Field) -> Result<Embedding, FieldError> {
        let missing = FieldError::MissingEmbedding { small: sub.order(), large: self.order() };
        if sub.characteristic() != self.characteristic() {
            return Err(missing);
        }
        if sub.is_prime_field() {
            return Ok(Embedding { source: sub.clone(), target: self.clone(), generator_image: FieldElement::ZERO });
        }
        if sub == self {
            return Ok(Embedding { source: sub.clone(), target: self.clone(), generator_image: self.generator() });
        }
        let link = self.inner.base.as_ref().ok_or(missing)?;
        let lower = link.field.embedding_from(sub)?;
        let generator_image = horner(self, &link.field, lower.generator_image, link.generator_image);
        Ok(Embedding { source: sub.clone(), target: self.clone(), generator_image })
    }

    /// Human-readable element: an integer in a prime field, otherwise the
    /// little-endian coefficient tuple.
    pub fn format(&self, x: FieldElement) -> String {
        if self.is_prime_field() {
            return format!("{}", x.0);
        }
        let parts: Vec<String> = self.coefficients(x).iter().map(|c| format!("{c}")).collect();
        format!("({})", parts.join(","))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.spec())
    }
}

/// A ring embedding `source ↪ target`, determined by the image of the
/// source generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    generator_image: FieldElement,
}

impl Embedding {
    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn generator_image(&self) -> FieldElement {
        self.generator_image
    }

    pub fn apply(&self, x: FieldElement) -> FieldElement {
        horner(&self.target, &self.source, x, self.generator_image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn multiplication_matches_polynomial_product_mod_f() {
        for (p, k) in [(2u64, 5u32), (2, 17), (3, 4), (5, 3), (7, 6), (65_521, 2)] {
            let f = make_field(p, k, 1).unwrap();
            let prime = make_field(p, 1, 1).unwrap();
            let modulus = UniPoly::new(&prime, f.defining_polynomial().into_iter().map(FieldElement).collect());
            let as_poly = |x: FieldElement| UniPoly::new(&prime, f.coefficients(x).into_iter().map(FieldElement).collect());
            let mut rng = ChaCha8Rng::seed_from_u64(p + u64::from(k));
            for _ in 0..200 {
                let a = FieldElement(rng.gen_range(0..f.order()));
                let b = FieldElement(rng.gen_range(0..f.order()));
                let expected = as_poly(a).mul(&as_poly(b)).unwrap().rem(&modulus).unwrap();
                assert_eq!(as_poly(f.mul(a, b)), expected, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn prime_field_has_no_defining_polynomial() {
        let f7 = make_field(7, 1, 0).unwrap();
        assert_eq!(f7.order(), 7);
        assert!(f7.is_prime_field());
        assert_eq!(f7.base(), None);
        assert_eq!(f7.spec(), "7");
    }

    #[test]
    fn rejects_composite_and_oversized() {
        assert_eq!(make_field(4, 1, 0).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(make_field(1, 1, 0).unwrap_err(), FieldError::NotPrime(1));
        assert!(matches!(make_field(2, 49, 0), Err(FieldError::CapExceeded { .. })));
        assert_eq!(make_field(3, 0, 0).unwrap_err(), FieldError::ZeroDegree);
        let tight = Limits { arithmetic_cap: 100, ..Limits::default() };
        assert!(make_field_with(11, 2, 0, &tight).is_err());
        assert!(make_field_with(7, 2, 0, &tight).is_ok());
    }

    #[test]
    fn f9_quadratic_has_no_root_in_f3() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f = f9.defining_polynomial();
        assert_eq!(f.len(), 3);
        assert_eq!(f[2], 1);
        for t in 0..3u64 {
            assert_ne!((f[0] + f[1] * t + t * t) % 3, 0, "root {t} of {f:?}");
        }
    }

    #[test]
    fn frobenius_examples() {
        let f7 = make_field(7, 1, 0).unwrap();
        for x in f7.elements() {
            assert_eq!(f7.frobenius(x, 1), x);
        }
        let f9 = make_field(3, 2, 0).unwrap();
        let f = f9.defining_polynomial();
        for x in f9.elements().filter(|x| x.index() >= 3) {
            assert_eq!(f9.frobenius(x, 2), x);
            let y = f9.frobenius(x, 1);
            assert_ne!(y, x);
            // x and x^3 are the two roots of x's minimal polynomial
            let sum = f9.add(x, y);
            let prod = f9.mul(x, y);
            assert!(sum.index() < 3 && prod.index() < 3);
        }
        // the generator's conjugate is the other root of f
        let g = f9.generator();
        let c = f9.frobenius(g, 1);
        let value = |z: FieldElement| {
            let z2 = f9.mul(z, z);
            f9.add(f9.add(f9.from_int(f[0] as i64), f9.mul(f9.from_int(f[1] as i64), z)), z2)
        };
        assert_eq!(value(c), f9.zero());
    }

    #[test]
    fn enumeration_is_ordered_and_duplicate_free() {
        let f3 = make_field(3, 1, 0).unwrap();
        let lim = Limits::default();
        assert_eq!(f3.enumerate_elements(&lim).unwrap(), alloc::vec![FieldElement(0), FieldElement(1), FieldElement(2)]);
        let f9 = make_field(3, 2, 0).unwrap();
        let e9 = f9.enumerate_elements(&lim).unwrap();
        assert_eq!(e9.len(), 9);
        assert_eq!(e9[0], f9.zero());
        let f49 = make_field(7, 2, 0).unwrap();
        let e49: BTreeSet<_> = f49.enumerate_elements(&lim).unwrap().into_iter().collect();
        assert_eq!(e49.len(), 49);
        let small = Limits { enumeration_cap: 10, ..Limits::default() };
        assert!(f49.enumerate_elements(&small).is_err());
    }

    #[test]
    fn coefficient_round_trip() {
        let f = make_field(5, 3, 2).unwrap();
        for x in f.elements() {
            assert_eq!(f.from_coefficients(&f.coefficients(x)), x);
        }
    }

    #[test]
    fn table_and_generic_multiplication_agree() {
        let f = make_field(3, 4, 1).unwrap();
        assert!(f.inner.tables.is_some());
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(5) {
                assert_eq!(f.mul(a, b), f.inner.mul_generic(a, b));
            }
            assert_eq!(f.pow(a, 17), f.inner.pow_generic(a, 17));
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = make_field(65_537, 2, 0).unwrap();
        assert!(f.inner.tables.is_none());
        let x = f.from_coefficients(&[12, 345]);
        let inv = f.inv(x).unwrap();
        assert_eq!(f.mul(x, inv), f.one());
        assert_eq!(f.pow(x, f.order()), x);
    }

    #[test]
    fn characteristic_two() {
        let f = make_field(2, 5, 0).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, a), f.zero());
            assert_eq!(f.pow(a, 32), a);
        }
    }

    #[test]
    fn deterministic_defining_polynomials() {
        for (p, k) in [(2, 7), (3, 5), (7, 3), (101, 2)] {
            let a = make_field(p, k, 42).unwrap();
            let b = make_field(p, k, 42).unwrap();
            assert_eq!(a.defining_polynomial(), b.defining_polynomial());
        }
    }

    #[test]
    fn prime_subfield_embedding_into_f9() {
        let f3 = make_field(3, 1, 0).unwrap();
        let f9 = extend_field(&f3, 2, 0).unwrap();
        assert_eq!(f9.order(), 9);
        let e = f9.embedding_from(&f3).unwrap();
        for x in f3.elements() {
            assert_eq!(e.apply(x), x);
        }
    }

    #[test]
    fn f7_into_f343_image_is_a_subfield() {
        let f7 = make_field(7, 1, 0).unwrap();
        let big = extend_field(&f7, 3, 0).unwrap();
        let e = big.embedding_from(&f7).unwrap();
        let image: BTreeSet<_> = f7.elements().map(|x| e.apply(x)).collect();
        assert_eq!(image.len(), 7);
        for &a in &image {
            for &b in &image {
                assert!(image.contains(&big.add(a, b)));
                assert!(image.contains(&big.mul(a, b)));
            }
        }
    }

    #[test]
    fn f9_into_f81_preserves_operations() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f81 = extend_field(&f9, 2, 0).unwrap();
        assert_eq!(f81.degree(), 4);
        let e = f81.embedding_from(&f9).unwrap();
        let image: BTreeSet<_> = f9.elements().map(|x| e.apply(x)).collect();
        assert_eq!(image.len(), 9);
        for a in f9.elements() {
            for b in f9.elements() {
                assert_eq!(e.apply(f9.add(a, b)), f81.add(e.apply(a), e.apply(b)));
                assert_eq!(e.apply(f9.mul(a, b)), f81.mul(e.apply(a), e.apply(b)));
            }
        }
    }

    #[test]
    fn unrelated_fields_have_no_embedding() {
        let f9 = make_field(3, 2, 0).unwrap();
        let f27 = make_field(3, 3, 0).unwrap();
        assert!(matches!(f27.embedding_from(&f9), Err(FieldError::MissingEmbedding { .. })));
        let f5 = make_field(5, 1, 0).unwrap();
        assert!(f27.embedding_from(&f5).is_err());
    }
}
