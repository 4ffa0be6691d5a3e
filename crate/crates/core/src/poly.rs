//! Dense univariate polynomials over a [`Field`] and their complete
//! factorization (squarefree decomposition, distinct-degree split,
//! Cantor–Zassenhaus equal-degree split).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{lcm, prime_divisors};
use crate::error::PolyError;
use crate::field::{Embedding, Field, FieldElement};

const KARATSUBA_THRESHOLD: usize = 32;

/// A polynomial with little-endian coefficients and no trailing zeros.
#[derive(Clone)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

/// `unit * prod factor^multiplicity`, factors monic irreducible, pairwise
/// distinct, sorted by degree and then by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, u32)>,
}

/// A root together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: FieldElement,
    pub multiplicity: u32,
}

impl UniPoly {
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> UniPoly {
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: FieldElement) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    /// The variable itself.
    pub fn x(field: &Field) -> UniPoly {
        UniPoly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &Field, c: FieldElement, degree: usize) -> UniPoly {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        UniPoly::new(field, coeffs)
    }

    /// Integer coefficients reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.field.one())
    }

    fn same_field(&self, other: &UniPoly) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(UniPoly::new(f, coeffs))
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(UniPoly::new(f, coeffs))
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(&self.field));
        }
        let coeffs = mul_slices(&self.field, &self.coeffs, &other.coeffs);
        Ok(UniPoly::new(&self.field, coeffs))
    }

    pub fn scale(&self, c: FieldElement) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `Y^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder with `deg(remainder) < deg(divisor)`.
    pub fn divmod(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[dd];
        let lead_inv = if lead == f.one() { lead } else { f.inv(lead).expect("nonzero leading coefficient") };
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let factor = if lead == f.one() { c } else { f.mul(c, lead_inv) };
            quot[i - dd] = factor;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, b));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::new(f, quot), UniPoly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.divmod(divisor).expect("exact division");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, PolyError> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int((i as u64 % f.characteristic()) as i64), c))
            .collect();
        UniPoly::new(f, coeffs)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero")),
        }
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Image of the polynomial under a field embedding.
    pub fn map_into(&self, embedding: &Embedding) -> Result<UniPoly, PolyError> {
        if embedding.source() != &self.field {
            return Err(PolyError::FieldMismatch);
        }
        let coeffs = self.coeffs.iter().map(|&c| embedding.apply(c)).collect();
        Ok(UniPoly::new(embedding.target(), coeffs))
    }

    /// Reversed coefficient list: `Y^deg * f(1/Y)`.
    pub fn reversed(&self) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UniPoly::new(&self.field, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut acc = UniPoly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &UniPoly) -> Result<UniPoly, PolyError> {
        self.same_field(modulus)?;
        let dd = modulus.degree().ok_or(PolyError::DivisionByZero)?;
        let f = &self.field;
        let monic = modulus.monic();
        let reduce = |mut c: Vec<FieldElement>| {
            reduce_monic(f, &mut c, &monic.coeffs);
            c
        };
        let mut acc = reduce(vec![f.one()]);
        let mut base = reduce(self.coeffs.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = reduce(mul_slices(f, &acc, &base));
            }
            e >>= 1;
            if e > 0 {
                base = reduce(mul_slices(f, &base, &base));
            }
        }
        acc.truncate(dd);
        Ok(UniPoly::new(f, acc))
    }

    /// Polynomial whose `p`-th power is `self`; requires the derivative to vanish.
    fn pth_root(&self) -> UniPoly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        UniPoly::new(f, coeffs)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with
    /// `g` squarefree and the product of `g^e` equal to `self`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let p = self.field.characteristic() as u32;
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let d = f.derivative();
        if d.is_zero() {
            for (g, m) in f.pth_root().squarefree_decomposition() {
                out.push((g, m * p));
            }
            return out;
        }
        let mut c = f.gcd(&d).expect("same field");
        let mut w = f.exact_div(&c);
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c).expect("same field");
            let z = w.exact_div(&y);
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            c = c.exact_div(&y);
            w = y;
        }
        if !c.is_one() {
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Product of the distinct monic irreducible factors, and whether
    /// `self` already was squarefree.
    pub fn squarefree_part(&self) -> Result<(UniPoly, bool), PolyError> {
        let degree = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        let radical = self
            .squarefree_decomposition()
            .iter()
            .fold(UniPoly::one(&self.field), |acc, (g, _)| &acc * g);
        let flag = radical.degree() == Some(degree);
        Ok((radical, flag))
    }

    /// Complete factorization into monic irreducibles. Randomized splitting
    /// uses a ChaCha stream seeded by `seed`; the canonical sort makes the
    /// result independent of it.
    pub fn factor(&self, seed: u64) -> Result<Factorization, PolyError> {
        let unit = self.leading().ok_or(PolyError::ZeroPolynomial)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut merged: BTreeMap<FactorKey, (UniPoly, u32)> = BTreeMap::new();
        for (part, mult) in self.squarefree_decomposition() {
            for (chunk, d) in distinct_degree(&part) {
                let mut pieces = Vec::new();
                equal_degree(&chunk, d, &mut rng, &mut pieces);
                for piece in pieces {
                    merged
                        .entry(FactorKey::of(&piece))
                        .and_modify(|e| e.1 += mult)
                        .or_insert((piece, mult));
                }
            }
        }
        Ok(Factorization { unit, factors: merged.into_values().collect() })
    }

    /// Rabin's test: `Y^{q^d} ≡ Y (mod f)` and `gcd(Y^{q^{d/r}} - Y, f) = 1`
    /// for each prime `r | d`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let f = self.monic();
        let q = self.field.order();
        let x = UniPoly::x(&self.field);
        let mut powers = Vec::with_capacity(d + 1);
        let mut h = x.rem(&f).expect("nonzero");
        powers.push(h.clone());
        for _ in 0..d {
            h = h.pow_mod(q, &f).expect("nonzero");
            powers.push(h.clone());
        }
        if powers[d] != x.rem(&f).expect("nonzero") {
            return false;
        }
        prime_divisors(d as u64).into_iter().all(|r| {
            let g = (&powers[d / r as usize] - &x).gcd(&f).expect("same field");
            g.is_one()
        })
    }

    /// Distinct roots in the polynomial's own field, with multiplicities.
    pub fn roots(&self, seed: u64) -> Vec<(FieldElement, u32)> {
        let Ok(fact) = self.factor(seed) else { return Vec::new() };
        let mut out: Vec<(FieldElement, u32)> = fact
            .factors
            .iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, m)| (self.field.neg(g.coeff(0)), *m))
            .collect();
        out.sort();
        out
    }

    /// Renders with the given variable name; coefficients outside the prime
    /// subfield print as coefficient tuples.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = self.field.format(c);
            let term = match (i, c == self.field.one()) {
                (0, _) => coeff,
                (1, true) => String::from(var),
                (_, true) => format!("{var}^{i}"),
                (1, false) => format!("{coeff}*{var}"),
                (_, false) => format!("{coeff}*{var}^{i}"),
            };
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        out
    }
}

fn mul_slices(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() < KARATSUBA_THRESHOLD || b.len() < KARATSUBA_THRESHOLD {
        let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        return out;
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = mul_slices(f, a0, b0);
    let z2 = mul_slices(f, a1, b1);
    let sa = add_slices(f, a0, a1);
    let sb = add_slices(f, b0, b1);
    let mut z1 = mul_slices(f, &sa, &sb);
    for (i, &c) in z0.iter().enumerate() {
        z1[i] = f.sub(z1[i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] = f.sub(z1[i], c);
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &c) in z0.iter().enumerate() {
        out[i] = f.add(out[i], c);
    }
    for (i, &c) in z1.iter().enumerate() {
        if i + half < out.len() {
            out[i + half] = f.add(out[i + half], c);
        }
    }
    for (i, &c) in z2.iter().enumerate() {
        out[i + 2 * half] = f.add(out[i + 2 * half], c);
    }
    out
}

/// Reduces `c` modulo a monic polynomial in place, leaving at most
/// `deg` coefficients.
fn reduce_monic(f: &Field, c: &mut Vec<FieldElement>, modulus: &[FieldElement]) {
    let dd = modulus.len() - 1;
    while c.len() > dd {
        let top = c.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = c.len() - dd;
        for (j, &m) in modulus[..dd].iter().enumerate() {
            c[base + j] = f.sub(c[base + j], f.mul(top, m));
        }
    }
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

fn add_slices(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            f.add(x, y)
        })
        .collect()
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)` chunks.
fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field().clone();
    let q = field.order();
    let x = UniPoly::x(&field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest).expect("nonzero");
        let t = (&h - &x).gcd(&rest).expect("same field");
        if !t.is_one() {
            rest = rest.exact_div(&t);
            h = h.rem(&rest).expect("nonzero");
            out.push((t, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct degree-`d`
/// irreducibles. Odd `q` uses `a^{(q^d-1)/2} - 1`; characteristic 2 uses
/// the absolute trace `a + a^2 + ... + a^{2^{kd-1}}`.
fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UniPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.clone());
        return;
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let coeffs: Vec<FieldElement> = (0..n).map(|_| FieldElement::from_index(rng.gen_range(0..q))).collect();
        let a = UniPoly::new(&field, coeffs);
        if a.is_constant() {
            continue;
        }
        let probe = if field.characteristic() == 2 {
            let steps = field.degree() as usize * d;
            let mut term = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                term = (&term * &term).rem(f).expect("nonzero");
                acc = &acc + &term;
            }
            acc
        } else {
            let mut term = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                term = term.pow_mod(q, f).expect("nonzero");
                norm = (&norm * &term).rem(f).expect("nonzero");
            }
            &norm.pow_mod((q - 1) / 2, f).expect("nonzero") - &UniPoly::one(&field)
        };
        let g = probe.gcd(f).expect("same field");
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            equal_degree(&g, d, rng, out);
            equal_degree(&f.exact_div(&g), d, rng, out);
            return;
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct FactorKey {
    degree: usize,
    coeffs: Vec<u64>,
}

impl FactorKey {
    fn of(p: &UniPoly) -> FactorKey {
        FactorKey { degree: p.degree().unwrap_or(0), coeffs: p.coeffs.iter().map(|c| c.index()).collect() }
    }
}

impl Factorization {
    /// `unit * prod factor^multiplicity`.
    pub fn reconstruct(&self, field: &Field) -> UniPoly {
        self.factors.iter().fold(UniPoly::constant(field, self.unit), |acc, (g, m)| &acc * &g.pow(u64::from(*m)))
    }

    /// Factor degrees repeated by multiplicity, ascending.
    pub fn degree_multiset(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|(g, m)| core::iter::repeat_n(g.degree().unwrap_or(0) as u32, *m as usize))
            .collect();
        out.sort_unstable();
        out
    }

    /// Degree of the splitting field: lcm of the factor degrees.
    pub fn splitting_degree(&self) -> u64 {
        self.factors.iter().fold(1, |acc, (g, _)| lcm(acc, g.degree().unwrap_or(1) as u64))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// Roots of `f` in an extension `ext` of its field, reached through the
/// embedding stored in `ext`.
pub fn roots_in_field(f: &UniPoly, ext: &Field) -> Result<Vec<Root>, PolyError> {
    let embedding = ext.embedding_from(f.field())?;
    let lifted = f.map_into(&embedding)?;
    if lifted.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    Ok(lifted
        .roots(ext.seed())
        .into_iter()
        .map(|(value, multiplicity)| Root { value, multiplicity })
        .collect())
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly {}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UniPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        FactorKey::of(self).cmp(&FactorKey::of(other))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self.display_with("Y"), self.field)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("Y"))
    }
}

// Operator forms panic on a field mismatch; use the inherent methods to get
// a `Result` instead.
impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::add(self, rhs).expect("polynomials over different fields")
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::sub(self, rhs).expect("polynomials over different fields")
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::mul(self, rhs).expect("polynomials over different fields")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{extend_field, make_field};

    fn ints(f: &Field, c: &[i64]) -> UniPoly {
        UniPoly::from_ints(f, c)
    }

    #[test]
    fn gcd_example() {
        let f7 = make_field(7, 1, 0).unwrap();
        let g = ints(&f7, &[-1, 0, 1]).gcd(&ints(&f7, &[-1, 1])).unwrap();
        assert_eq!(g, ints(&f7, &[-1, 1]));
    }

    #[test]
    fn derivative_vanishes_when_characteristic_divides_exponent() {
        let f3 = make_field(3, 1, 0).unwrap();
        assert!(ints(&f3, &[-2, 0, 0, 1]).derivative().is_zero());
    }

    #[test]
    fn divmod_example() {
        let f5 = make_field(5, 1, 0).unwrap();
        let (q, r) = ints(&f5, &[1, 0, 0, 1]).divmod(&ints(&f5, &[1, 1])).unwrap();
        assert_eq!(q, ints(&f5, &[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &ints(&f5, &[1, 1]), ints(&f5, &[1, 0, 0, 1]));
    }

    #[test]
    fn errors() {
        let f5 = make_field(5, 1, 0).unwrap();
        let f7 = make_field(7, 1, 0).unwrap();
        assert_eq!(ints(&f5, &[1]).add(&ints(&f7, &[1])).unwrap_err(), PolyError::FieldMismatch);
        assert_eq!(ints(&f5, &[1, 1]).divmod(&UniPoly::zero(&f5)).unwrap_err(), PolyError::DivisionByZero);
        assert_eq!(UniPoly::zero(&f5).factor(0).unwrap_err(), PolyError::ZeroPolynomial);
        assert_eq!(UniPoly::zero(&f5).squarefree_part().unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn squarefree_part_examples() {
        let f5 = make_field(5, 1, 0).unwrap();
        // (Y-1)^2 (Y+1) = Y^3 - Y^2 - Y + 1
        let (rad, flag) = ints(&f5, &[1, -1, -1, 1]).squarefree_part().unwrap();
        assert_eq!(rad, ints(&f5, &[-1, 0, 1]));
        assert!(!flag);

        let f3 = make_field(3, 1, 0).unwrap();
        let (rad, flag) = ints(&f3, &[-1, 0, 0, 1]).squarefree_part().unwrap();
        assert_eq!(rad, ints(&f3, &[-1, 1]));
        assert!(!flag);

        let (rad, flag) = ints(&f3, &[0, -1, 1]).squarefree_part().unwrap();
        assert_eq!(rad, ints(&f3, &[0, -1, 1]));
        assert!(flag);
    }

    #[test]
    fn inseparable_power_in_extension_field() {
        // g^3 over F_9 with g having coefficients outside F_3
        let f9 = make_field(3, 2, 0).unwrap();
        let a = f9.generator();
        let g = UniPoly::new(&f9, vec![a, f9.one(), f9.one()]);
        let f = &g.pow(3) * &UniPoly::new(&f9, vec![f9.one(), f9.one()]);
        let fact = f.factor(3).unwrap();
        assert_eq!(fact.reconstruct(&f9), f);
        assert!(fact.factors.iter().any(|(_, m)| *m == 3));
    }

    #[test]
    fn factor_examples() {
        let f7 = make_field(7, 1, 0).unwrap();
        let fact = ints(&f7, &[-1, 0, 0, 1]).factor(0).unwrap();
        let expected = vec![(ints(&f7, &[3, 1]), 1), (ints(&f7, &[5, 1]), 1), (ints(&f7, &[6, 1]), 1)];
        assert_eq!(fact.factors, expected);

        let fact = ints(&f7, &[-3, 0, 0, 1]).factor(0).unwrap();
        assert_eq!(fact.factors.len(), 1);
        assert_eq!(fact.degree_multiset(), vec![3]);

        // Y^2 - Y - (t0^3 - t0) at t0 = 1 over F_3
        let f3 = make_field(3, 1, 0).unwrap();
        let fact = ints(&f3, &[0, -1, 1]).factor(0).unwrap();
        assert_eq!(fact.factors, vec![(ints(&f3, &[0, 1]), 1), (ints(&f3, &[-1, 1]), 1)]);
    }

    #[test]
    fn char_two_equal_degree_split() {
        let f4 = make_field(2, 2, 0).unwrap();
        // Y^4 - Y over F_4 splits completely into the four elements
        let f = UniPoly::new(&f4, vec![f4.zero(), f4.one(), f4.zero(), f4.zero(), f4.one()]);
        let fact = f.factor(9).unwrap();
        assert_eq!(fact.degree_multiset(), vec![1, 1, 1, 1]);
        // Y^15 - 1 over F_2: factors of degree 1, 2, 4, 4, 4
        let f2 = make_field(2, 1, 0).unwrap();
        let mut c = vec![0i64; 16];
        c[0] = 1;
        c[15] = 1;
        let fact = ints(&f2, &c).factor(1).unwrap();
        assert_eq!(fact.degree_multiset(), vec![1, 2, 4, 4, 4]);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let f = make_field(7, 2, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut rand_poly = |n: usize| {
            UniPoly::new(&f, (0..n).map(|_| FieldElement::from_index(rng.gen_range(0..49))).collect())
        };
        let a = rand_poly(70);
        let b = rand_poly(45);
        let fast = &a * &b;
        let mut slow = vec![FieldElement::ZERO; 70 + 45 - 1];
        for i in 0..a.coeffs.len() {
            for j in 0..b.coeffs.len() {
                slow[i + j] = f.add(slow[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
            }
        }
        assert_eq!(fast, UniPoly::new(&f, slow));
    }

    #[test]
    fn roots_in_extension() {
        let f3 = make_field(3, 1, 0).unwrap();
        let t = ints(&f3, &[1, -1, 0, 1]);
        assert!(roots_in_field(&t, &f3).unwrap().is_empty());
        let f27 = extend_field(&f3, 3, 0).unwrap();
        let roots = roots_in_field(&t, &f27).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.multiplicity == 1));

        let f7 = make_field(7, 1, 0).unwrap();
        let roots = roots_in_field(&ints(&f7, &[-1, 0, 1]), &f7).unwrap();
        let values: Vec<u64> = roots.iter().map(|r| r.value.index()).collect();
        assert_eq!(values, vec![1, 6]);

        let f9 = make_field(3, 2, 0).unwrap();
        let lone = make_field(3, 4, 0).unwrap();
        let poly = UniPoly::new(&f9, vec![f9.generator(), f9.one()]);
        assert!(roots_in_field(&poly, &lone).is_err());
    }

    #[test]
    fn repeated_roots_report_multiplicity() {
        let f5 = make_field(5, 1, 0).unwrap();
        let roots = roots_in_field(&ints(&f5, &[1, -1, -1, 1]), &f5).unwrap();
        assert_eq!(roots, vec![
            Root { value: FieldElement::from_index(1), multiplicity: 2 },
            Root { value: FieldElement::from_index(4), multiplicity: 1 },
        ]);
    }
}
