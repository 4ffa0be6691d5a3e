//! Linear actions of finite groups on `F_q^n` (q prime) and the semidirect
//! products `W ⋊ E` they define.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::constructions::{HeisenbergElement, HeisenbergUniverse};
use super::{close_group, FiniteGroup, Universe};
use crate::arith::{checked_pow, is_prime, pow_mod};
use crate::error::GroupError;
use crate::limits::Limits;

/// A left action of a group universe on `F_q^n` by linear maps.
pub trait ModuleAction: Clone {
    type Acting: Universe;

    fn acting(&self) -> &Self::Acting;
    fn dimension(&self) -> usize;
    /// The prime `q`.
    fn modulus(&self) -> u32;
    fn act(&self, e: &<Self::Acting as Universe>::Element, w: &[u32]) -> Vec<u32>;
    fn describe(&self) -> String;

    /// Matrix of `e` in the standard basis (column `j` is the image of `e_j`).
    fn matrix(&self, e: &<Self::Acting as Universe>::Element) -> Matrix {
        let n = self.dimension();
        let mut m = Matrix::zero(n, self.modulus());
        for j in 0..n {
            let mut unit = vec![0u32; n];
            unit[j] = 1;
            for (i, v) in self.act(e, &unit).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }
}

/// Square matrix over a prime field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    q: u32,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(n: usize, q: u32) -> Matrix {
        Matrix { n, q, data: vec![0; n * n] }
    }

    pub fn identity(n: usize, q: u32) -> Matrix {
        let mut m = Matrix::zero(n, q);
        for i in 0..n {
            m.set(i, i, 1 % q);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v % self.q;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let (n, q) = (self.n, u64::from(self.q));
        let mut out = Matrix::zero(n, self.q);
        for i in 0..n {
            for k in 0..n {
                let a = u64::from(self.get(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = ((u64::from(out.data[idx]) + a * u64::from(other.get(k, j))) % q) as u32;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let q = u64::from(self.q);
        (0..self.n)
            .map(|i| {
                let s: u64 = (0..self.n).map(|j| u64::from(self.get(i, j)) * u64::from(v[j]) % q).sum();
                (s % q) as u32
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.n, self.q);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Outcome of an exhaustive search for proper nonzero invariant subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceScan {
    /// Subspaces examined before the search ended.
    pub scanned: u64,
    /// Row-reduced basis of the first invariant subspace found.
    pub invariant: Option<Vec<Vec<u32>>>,
}

impl SubspaceScan {
    pub fn is_irreducible(&self) -> bool {
        self.invariant.is_none()
    }
}

/// Number of proper nonzero subspaces of `F_q^n`: the sum of Gaussian
/// binomials `[n, d]_q` for `0 < d < n`.
pub fn proper_subspace_count(n: usize, q: u64) -> Option<u64> {
    let mut total: u128 = 0;
    for d in 1..n {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..d {
            num = num.checked_mul(u128::from(checked_pow(q, (n - i) as u32)?) - 1)?;
            den = den.checked_mul(u128::from(checked_pow(q, (i + 1) as u32)?) - 1)?;
        }
        total = total.checked_add(num / den)?;
    }
    u64::try_from(total).ok()
}

/// Enumerates every proper nonzero subspace of `F_q^n` in reduced row
/// echelon form and tests it against `matrices`. Stops at the first
/// invariant subspace.
pub fn invariant_subspace_scan(n: usize, q: u32, matrices: &[Matrix], cap: u64) -> Result<SubspaceScan, GroupError> {
    let total = proper_subspace_count(n, u64::from(q)).ok_or(GroupError::CapExceeded(cap as usize))?;
    if total > cap {
        return Err(GroupError::CapExceeded(cap as usize));
    }
    let mut scanned = 0u64;
    for d in 1..n {
        let mut pivots: Vec<usize> = (0..d).collect();
        loop {
            // free slots: (row, column) right of the row's pivot and not a pivot column
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| ((c + 1)..n).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
                .collect();
            let mut digits = vec![0u32; free.len()];
            loop {
                let mut rows = vec![vec![0u32; n]; d];
                for (r, &c) in pivots.iter().enumerate() {
                    rows[r][c] = 1;
                }
                for (&(r, j), &v) in free.iter().zip(&digits) {
                    rows[r][j] = v;
                }
                scanned += 1;
                if is_invariant(&rows, &pivots, matrices, q) {
                    return Ok(SubspaceScan { scanned, invariant: Some(rows) });
                }
                if !increment(&mut digits, q) {
                    break;
                }
            }
            if !next_combination(&mut pivots, n) {
                break;
            }
        }
    }
    Ok(SubspaceScan { scanned, invariant: None })
}

fn increment(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn is_invariant(rows: &[Vec<u32>], pivots: &[usize], matrices: &[Matrix], q: u32) -> bool {
    let q64 = u64::from(q);
    matrices.iter().all(|m| {
        rows.iter().all(|v| {
            let mut u = m.apply(v);
            for (row, &c) in rows.iter().zip(pivots) {
                let f = u64::from(u[c]);
                if f != 0 {
                    for (x, &y) in u.iter_mut().zip(row) {
                        *x = ((u64::from(*x) + (q64 - f) * u64::from(y)) % q64) as u32;
                    }
                }
            }
            u.iter().all(|&x| x == 0)
        })
    })
}

/// The Heisenberg group acting on `F_q^{(Z/ℓ)^m}`: `(a, b, c)` sends the basis
/// vector `e_x` to `ζ^{b·(x+a) - c} e_{x+a}`, with `ζ` the smallest element
/// of multiplicative order `ℓ` in `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergModule {
    universe: HeisenbergUniverse,
    q: u32,
    zeta: u32,
    zeta_powers: Vec<u32>,
    dim: usize,
}

/// Builds the `ℓ^m`-dimensional Heisenberg module over `F_q`.
pub fn heisenberg_module(ell: u64, m: usize, q: u64, limits: &Limits) -> Result<HeisenbergModule, GroupError> {
    if ell.is_multiple_of(2) || !is_prime(ell) {
        return Err(GroupError::NotOddPrime { what: "Heisenberg module", value: ell });
    }
    if q.is_multiple_of(2) || !is_prime(q) || q >= 1 << 31 {
        return Err(GroupError::NotOddPrime { what: "Heisenberg module coefficient field", value: q });
    }
    if m == 0 {
        return Err(GroupError::InvalidParameter(String::from("Heisenberg module needs m >= 1")));
    }
    if !(q - 1).is_multiple_of(ell) {
        return Err(GroupError::NoRootOfUnity { ell, q });
    }
    let dim = checked_pow(ell, m as u32)
        .filter(|&d| d.saturating_mul(d) <= limits.group_cap as u64)
        .ok_or(GroupError::CapExceeded(limits.group_cap))? as usize;
    let zeta = (2..q).find(|&x| pow_mod(x, ell, q) == 1).expect("ℓ | q - 1 gives a root of unity");
    let zeta_powers = (0..ell).map(|k| pow_mod(zeta, k, q) as u32).collect();
    Ok(HeisenbergModule { universe: HeisenbergUniverse { ell: ell as u32, m }, q: q as u32, zeta: zeta as u32, zeta_powers, dim })
}

impl HeisenbergModule {
    pub fn zeta(&self) -> u32 {
        self.zeta
    }

    pub fn ell(&self) -> u32 {
        self.universe.ell
    }

    fn index_digits(&self, mut idx: usize) -> Vec<u32> {
        let ell = self.universe.ell as usize;
        (0..self.universe.m)
            .map(|_| {
                let d = idx % ell;
                idx /= ell;
                d as u32
            })
            .collect()
    }

    fn digits_index(&self, digits: &[u32]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.universe.ell as usize + d as usize)
    }

    /// Checks `ρ(s)ρ(h) = ρ(sh)` for every generator `s` and every `h ∈ E`,
    /// and that `ρ(s)^ℓ = 1`, by matrix multiplication.
    pub fn verify_relations(&self, e: &FiniteGroup<HeisenbergUniverse>) -> bool {
        let ell = u64::from(self.universe.ell);
        let identity = Matrix::identity(self.dim, self.q);
        e.generators().iter().all(|s| {
            let ms = self.matrix(s);
            ms.pow(ell) == identity
                && e.elements()
                    .iter()
                    .all(|h| ms.mul(&self.matrix(h)) == self.matrix(&e.compose(s, h)))
        })
    }

    /// Whether the center `(0, 0, c)` acts as the scalar `ζ^{-c}`.
    pub fn center_is_scalar(&self) -> bool {
        let ell = self.universe.ell;
        (0..ell).all(|c| {
            let z = self.universe.central(c);
            let scalar = self.zeta_powers[((ell - c) % ell) as usize];
            let mut expected = Matrix::identity(self.dim, self.q);
            for i in 0..self.dim {
                expected.set(i, i, scalar);
            }
            self.matrix(&z) == expected
        })
    }

    /// Exhaustive search for a proper nonzero invariant subspace under the
    /// standard generators and the center.
    pub fn invariant_subspace_scan(&self, limits: &Limits) -> Result<SubspaceScan, GroupError> {
        let mut gens = self.universe.standard_generators();
        gens.push(self.universe.central(1));
        let matrices: Vec<Matrix> = gens.iter().map(|g| self.matrix(g)).collect();
        invariant_subspace_scan(self.dim, self.q, &matrices, limits.subspace_cap)
    }
}

impl ModuleAction for HeisenbergModule {
    type Acting = HeisenbergUniverse;

    fn acting(&self) -> &HeisenbergUniverse {
        &self.universe
    }

    fn dimension(&self) -> usize {
        self.dim
    }

    fn modulus(&self) -> u32 {
        self.q
    }

    fn act(&self, e: &HeisenbergElement, w: &[u32]) -> Vec<u32> {
        let ell = self.universe.ell;
        let q = u64::from(self.q);
        let mut out = vec![0u32; self.dim];
        for (x, &wx) in w.iter().enumerate() {
            if wx == 0 {
                continue;
            }
            let y: Vec<u32> = self.index_digits(x).iter().zip(&e.a).map(|(&u, &v)| (u + v) % ell).collect();
            let by: u64 = y.iter().zip(&e.b).map(|(&u, &v)| u64::from(u) * u64::from(v)).sum();
            let k = ((by + u64::from(ell - e.c % ell)) % u64::from(ell)) as usize;
            out[self.digits_index(&y)] = (u64::from(self.zeta_powers[k]) * u64::from(wx) % q) as u32;
        }
        out
    }

    fn describe(&self) -> String {
        format!("F_{}^{}", self.q, self.dim)
    }
}

/// A group acting trivially on `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialModule<U> {
    pub acting: U,
    pub dimension: usize,
    pub q: u32,
}

impl<U: Universe> ModuleAction for TrivialModule<U> {
    type Acting = U;

    fn acting(&self) -> &U {
        &self.acting
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn modulus(&self) -> u32 {
        self.q
    }

    fn act(&self, _e: &U::Element, w: &[u32]) -> Vec<u32> {
        w.to_vec()
    }

    fn describe(&self) -> String {
        format!("F_{}^{}", self.q, self.dimension)
    }
}

/// Pairs `(w, e)` with `(w, e)(w', e') = (w + e·w', ee')`.
#[derive(Clone, Debug)]
pub struct SemidirectUniverse<M> {
    module: M,
}

impl<M: ModuleAction> SemidirectUniverse<M> {
    pub fn new(module: M) -> Self {
        SemidirectUniverse { module }
    }

    pub fn module(&self) -> &M {
        &self.module
    }

    fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let q = self.module.modulus();
        x.iter().zip(y).map(|(&a, &b)| ((u64::from(a) + u64::from(b)) % u64::from(q)) as u32).collect()
    }

    /// `(e_i, 1)` for the standard basis of `W`.
    pub fn module_generators(&self) -> Vec<<Self as Universe>::Element> {
        let n = self.module.dimension();
        (0..n)
            .map(|i| {
                let mut unit = vec![0u32; n];
                unit[i] = 1;
                (unit, self.module.acting().identity())
            })
            .collect()
    }
}

impl<M: ModuleAction> Universe for SemidirectUniverse<M> {
    type Element = (Vec<u32>, <M::Acting as Universe>::Element);

    fn identity(&self) -> Self::Element {
        (vec![0; self.module.dimension()], self.module.acting().identity())
    }

    fn compose(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        let moved = self.module.act(&x.1, &y.0);
        (self.add(&x.0, &moved), self.module.acting().compose(&x.1, &y.1))
    }

    fn inverse(&self, x: &Self::Element) -> Self::Element {
        let e_inv = self.module.acting().inverse(&x.1);
        let q = self.module.modulus();
        let w: Vec<u32> = self.module.act(&e_inv, &x.0).into_iter().map(|v| (q - v) % q).collect();
        (w, e_inv)
    }

    fn describe(&self) -> String {
        format!("{} x| ({})", self.module.describe(), self.module.acting().describe())
    }
}

/// Closes `W ⋊ E` from the generators of `E` and a basis of `W`.
pub fn semidirect<M: ModuleAction>(
    module: M,
    e: &FiniteGroup<M::Acting>,
    limits: &Limits,
) -> Result<FiniteGroup<SemidirectUniverse<M>>, GroupError> {
    let w_order = checked_pow(u64::from(module.modulus()), module.dimension() as u32);
    let total = w_order.and_then(|w| w.checked_mul(e.order() as u64));
    if total.is_none_or(|t| t > limits.group_cap as u64) {
        return Err(GroupError::CapExceeded(limits.group_cap));
    }
    let universe = SemidirectUniverse::new(module);
    let w0 = vec![0u32; universe.module.dimension()];
    let mut gens: Vec<_> = e.generators().iter().map(|s| (w0.clone(), s.clone())).collect();
    gens.extend(universe.module_generators());
    close_group(&universe, gens, limits.group_cap)
}

impl<M: ModuleAction> FiniteGroup<SemidirectUniverse<M>> {
    /// The normal subgroup `W = {(w, 1)}`.
    pub fn module_subgroup(&self) -> Result<FiniteGroup<SemidirectUniverse<M>>, GroupError> {
        self.subgroup(self.universe().module_generators())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::extra_special;

    fn g1() -> (HeisenbergModule, FiniteGroup<HeisenbergUniverse>) {
        let lim = Limits::default();
        (heisenberg_module(3, 1, 7, &lim).unwrap(), extra_special(3, 1, &lim).unwrap())
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(proper_subspace_count(3, 7), Some(114));
        assert_eq!(proper_subspace_count(2, 2), Some(3));
        assert_eq!(proper_subspace_count(1, 5), Some(0));
    }

    #[test]
    fn module_3_1_7() {
        let (w, e) = g1();
        assert!(w.zeta() == 2 || w.zeta() == 4);
        assert_eq!(w.zeta(), 2);
        assert!(w.verify_relations(&e));
        assert!(w.center_is_scalar());
        let scan = w.invariant_subspace_scan(&Limits::default()).unwrap();
        assert_eq!(scan.scanned, 114);
        assert!(scan.is_irreducible());
    }

    #[test]
    fn module_errors() {
        let lim = Limits::default();
        assert_eq!(heisenberg_module(3, 1, 5, &lim).unwrap_err(), GroupError::NoRootOfUnity { ell: 3, q: 5 });
        assert!(heisenberg_module(2, 1, 7, &lim).is_err());
    }

    #[test]
    fn module_5_1_11_relations() {
        let lim = Limits::default();
        let w = heisenberg_module(5, 1, 11, &lim).unwrap();
        let e = extra_special(5, 1, &lim).unwrap();
        assert!(w.verify_relations(&e));
        assert!(w.center_is_scalar());
    }

    #[test]
    fn reducible_action_is_detected() {
        // diagonal action has invariant coordinate lines
        let mut m = Matrix::identity(2, 5);
        m.set(0, 0, 2);
        let scan = invariant_subspace_scan(2, 5, &[m], 1000).unwrap();
        assert!(!scan.is_irreducible());
        assert_eq!(scan.invariant.unwrap(), vec![vec![1, 0]]);
    }

    #[test]
    fn trivial_module_semidirect_is_e() {
        let lim = Limits::default();
        let e = extra_special(3, 1, &lim).unwrap();
        let trivial = TrivialModule { acting: e.universe().clone(), dimension: 0, q: 7 };
        assert_eq!(semidirect(trivial, &e, &lim).unwrap().order(), 27);
        let trivial = TrivialModule { acting: e.universe().clone(), dimension: 1, q: 7 };
        let g = semidirect(trivial, &e, &lim).unwrap();
        assert_eq!(g.order(), 189);
        assert!(g.is_abelian() == e.is_abelian());
    }

    #[test]
    fn semidirect_inverse() {
        let (w, _) = g1();
        let u = SemidirectUniverse::new(w);
        let x = (vec![1, 5, 3], HeisenbergElement { a: vec![1], b: vec![2], c: 1 });
        assert_eq!(u.compose(&x, &u.inverse(&x)), u.identity());
        assert_eq!(u.compose(&u.inverse(&x), &x), u.identity());
    }
}
