//! Named groups: cyclic and symmetric permutation groups, dihedral groups
//! `Z/p^m ⋊ Z/2`, Heisenberg (extra-special) groups of exponent `ℓ`, and
//! finite abelian groups `⊕ Z/n_i`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{close_group, FiniteGroup, Permutation, SymmetricUniverse, Universe};
use crate::arith::{checked_pow, is_prime};
use crate::error::GroupError;
use crate::limits::Limits;

/// `⟨(1 2 .. n)⟩` acting on `n` points.
pub fn cyclic(n: usize, limits: &Limits) -> Result<FiniteGroup<SymmetricUniverse>, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(String::from("cyclic group needs n >= 1")));
    }
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let gen = Permutation::from_images(images)?;
    close_group(&SymmetricUniverse::new(n), vec![gen], limits.group_cap)
}

/// The full symmetric group on `n` points.
pub fn symmetric(n: usize, limits: &Limits) -> Result<FiniteGroup<SymmetricUniverse>, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(String::from("symmetric group needs n >= 1")));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[1, 2]])?);
    }
    if n >= 3 {
        let long: Vec<u32> = (1..=n as u32).collect();
        gens.push(Permutation::from_cycles(n, &[&long])?);
    }
    close_group(&SymmetricUniverse::new(n), gens, limits.group_cap)
}

/// `(x, s)` with `x ∈ Z/p^m`, `s ∈ Z/2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DihedralElement {
    pub shift: u64,
    pub reflect: bool,
}

/// `Z/N ⋊ Z/2` with `(x, s)(x', s') = (x + (-1)^s x', s + s')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralUniverse {
    pub modulus: u64,
}

impl Universe for DihedralUniverse {
    type Element = DihedralElement;

    fn identity(&self) -> DihedralElement {
        DihedralElement { shift: 0, reflect: false }
    }

    fn compose(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        let n = self.modulus;
        let moved = if a.reflect { (n - b.shift % n) % n } else { b.shift % n };
        DihedralElement { shift: (a.shift + moved) % n, reflect: a.reflect ^ b.reflect }
    }

    fn inverse(&self, a: &DihedralElement) -> DihedralElement {
        if a.reflect {
            *a
        } else {
            DihedralElement { shift: (self.modulus - a.shift) % self.modulus, reflect: false }
        }
    }

    fn describe(&self) -> String {
        format!("dihedral group of order {}", 2 * self.modulus)
    }
}

/// The dihedral group `Z/p^m ⋊ Z/2` of order `2p^m`.
pub fn dihedral(p: u64, m: u32, limits: &Limits) -> Result<FiniteGroup<DihedralUniverse>, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let modulus = checked_pow(p, m).ok_or(GroupError::CapExceeded(limits.group_cap))?;
    if modulus.saturating_mul(2) > limits.group_cap as u64 {
        return Err(GroupError::CapExceeded(limits.group_cap));
    }
    let universe = DihedralUniverse { modulus };
    let gens = vec![
        DihedralElement { shift: 1 % modulus, reflect: false },
        DihedralElement { shift: 0, reflect: true },
    ];
    close_group(&universe, gens, limits.group_cap)
}

/// `(a, b, c) ∈ (Z/ℓ)^m × (Z/ℓ)^m × Z/ℓ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HeisenbergElement {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: u32,
}

/// Heisenberg group with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergUniverse {
    pub ell: u32,
    pub m: usize,
}

impl HeisenbergUniverse {
    fn dot(&self, x: &[u32], y: &[u32]) -> u32 {
        let ell = u64::from(self.ell);
        (x.iter().zip(y).map(|(&u, &v)| u64::from(u) * u64::from(v)).sum::<u64>() % ell) as u32
    }

    fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&u, &v)| (u + v) % self.ell).collect()
    }

    fn neg(&self, x: &[u32]) -> Vec<u32> {
        x.iter().map(|&u| (self.ell - u) % self.ell).collect()
    }

    /// Generators `(e_i, 0, 0)` and `(0, e_i, 0)`; their commutators give the center.
    pub fn standard_generators(&self) -> Vec<HeisenbergElement> {
        let mut gens = Vec::with_capacity(2 * self.m);
        for i in 0..self.m {
            let mut unit = vec![0u32; self.m];
            unit[i] = 1;
            gens.push(HeisenbergElement { a: unit.clone(), b: vec![0; self.m], c: 0 });
            gens.push(HeisenbergElement { a: vec![0; self.m], b: unit, c: 0 });
        }
        gens
    }

    pub fn central(&self, c: u32) -> HeisenbergElement {
        HeisenbergElement { a: vec![0; self.m], b: vec![0; self.m], c: c % self.ell }
    }
}

impl Universe for HeisenbergUniverse {
    type Element = HeisenbergElement;

    fn identity(&self) -> HeisenbergElement {
        self.central(0)
    }

    fn compose(&self, x: &HeisenbergElement, y: &HeisenbergElement) -> HeisenbergElement {
        HeisenbergElement {
            a: self.add(&x.a, &y.a),
            b: self.add(&x.b, &y.b),
            c: (x.c + y.c + self.dot(&x.a, &y.b)) % self.ell,
        }
    }

    fn inverse(&self, x: &HeisenbergElement) -> HeisenbergElement {
        HeisenbergElement {
            a: self.neg(&x.a),
            b: self.neg(&x.b),
            c: (2 * self.ell - x.c + self.dot(&x.a, &x.b)) % self.ell,
        }
    }

    fn describe(&self) -> String {
        format!("extra-special group of order {}^{}", self.ell, 2 * self.m + 1)
    }
}

fn odd_prime(what: &'static str, value: u64) -> Result<(), GroupError> {
    if value.is_multiple_of(2) || !is_prime(value) {
        return Err(GroupError::NotOddPrime { what, value });
    }
    Ok(())
}

/// The extra-special group of order `ℓ^{2m+1}` and exponent `ℓ`, realized
/// as a Heisenberg group on triples.
pub fn extra_special(ell: u64, m: usize, limits: &Limits) -> Result<FiniteGroup<HeisenbergUniverse>, GroupError> {
    odd_prime("extra-special group", ell)?;
    if m == 0 {
        return Err(GroupError::InvalidParameter(String::from("extra-special group needs m >= 1")));
    }
    let order = checked_pow(ell, 2 * m as u32 + 1).ok_or(GroupError::CapExceeded(limits.group_cap))?;
    if order > limits.group_cap as u64 {
        return Err(GroupError::CapExceeded(limits.group_cap));
    }
    let universe = HeisenbergUniverse { ell: ell as u32, m };
    let gens = universe.standard_generators();
    close_group(&universe, gens, limits.group_cap)
}

/// Brute-force certificate that a group is extra-special of exponent `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraSpecialCertificate {
    pub order: u64,
    pub center_order: u64,
    pub derived_order: u64,
    pub center_equals_derived: bool,
    pub exponent: u64,
}

impl ExtraSpecialCertificate {
    /// `|Z| = |G'| = ℓ`, `Z = G'`, exponent `ℓ`.
    pub fn holds_for(&self, ell: u64) -> bool {
        self.center_order == ell && self.derived_order == ell && self.center_equals_derived && self.exponent == ell
    }
}

impl<U: Universe> FiniteGroup<U> {
    pub fn certify_extra_special(&self) -> Result<ExtraSpecialCertificate, GroupError> {
        let center = self.center();
        let derived = self.derived_subgroup()?;
        let center_equals_derived = center.len() == derived.order() && center.iter().all(|z| derived.contains(z));
        Ok(ExtraSpecialCertificate {
            order: self.order() as u64,
            center_order: center.len() as u64,
            derived_order: derived.order() as u64,
            center_equals_derived,
            exponent: self.exponent(),
        })
    }
}

/// `⊕ Z/n_i`, written additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianUniverse {
    pub moduli: Vec<u64>,
}

impl AbelianUniverse {
    /// Order of an element: lcm over coordinates of `n_i / gcd(n_i, x_i)`.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        self.moduli
            .iter()
            .zip(x)
            .fold(1, |acc, (&n, &v)| crate::arith::lcm(acc, n / crate::arith::gcd(n, v % n)))
    }
}

impl Universe for AbelianUniverse {
    type Element = Vec<u64>;

    fn identity(&self) -> Vec<u64> {
        vec![0; self.moduli.len()]
    }

    fn compose(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        self.moduli.iter().zip(a.iter().zip(b)).map(|(&n, (&x, &y))| (x + y) % n).collect()
    }

    fn inverse(&self, a: &Vec<u64>) -> Vec<u64> {
        self.moduli.iter().zip(a).map(|(&n, &x)| (n - x % n) % n).collect()
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.moduli.iter().map(|n| format!("Z/{n}")).collect();
        parts.join(" x ")
    }
}
