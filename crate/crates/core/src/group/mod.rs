//! Finite groups given by an element universe and a list of generators.
//!
//! A [`Universe`] supplies identity, composition and inversion on some
//! element type; [`FiniteGroup`] closes a generator list under composition
//! and answers brute-force questions about the result. Permutations,
//! Heisenberg triples, dihedral pairs, abelian vectors and semidirect
//! products `W ⋊ E` are the universes provided here.

mod any;
mod bound;
mod constructions;
mod module;
mod perm;

pub use any::AnyGroup;
pub use bound::{abelian_product_bound_check, BoundReport};
pub use constructions::{
    cyclic, dihedral, extra_special, symmetric, AbelianUniverse, DihedralElement, DihedralUniverse,
    ExtraSpecialCertificate, HeisenbergElement, HeisenbergUniverse,
};
pub use module::{
    heisenberg_module, semidirect, HeisenbergModule, Matrix, ModuleAction, SemidirectUniverse, SubspaceScan,
    TrivialModule,
};
pub use perm::{CycleType, Permutation, SymmetricUniverse};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{is_power_of, lcm, prime_divisors};
use crate::error::GroupError;

/// The set a group acts in, with its composition law.
pub trait Universe: Clone {
    type Element: Clone + Ord + fmt::Debug;

    fn identity(&self) -> Self::Element;
    fn compose(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;

    /// Cycle type of an element, for permutation universes only.
    fn cycle_type(&self, _a: &Self::Element) -> Option<CycleType> {
        None
    }

    /// Number of points permuted, for permutation universes only.
    fn permutation_degree(&self) -> Option<usize> {
        None
    }

    fn describe(&self) -> String;
}

/// A closed finite group. Elements are kept sorted, which is the canonical
/// element order; `orders[i]` is the order of `elements[i]`.
#[derive(Clone, Debug)]
pub struct FiniteGroup<U: Universe> {
    universe: U,
    generators: Vec<U::Element>,
    elements: Vec<U::Element>,
    orders: Vec<u64>,
}

/// Breadth-first closure of `generators` under composition.
pub fn close_group<U: Universe>(
    universe: &U,
    generators: Vec<U::Element>,
    cap: usize,
) -> Result<FiniteGroup<U>, GroupError> {
    let identity = universe.identity();
    let mut seen: BTreeSet<U::Element> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(x) = frontier.pop() {
        for g in &generators {
            let y = universe.compose(&x, g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::CapExceeded(cap));
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    let elements: Vec<U::Element> = seen.into_iter().collect();
    let orders = elements.iter().map(|x| order_by_chain(universe, x)).collect();
    Ok(FiniteGroup { universe: universe.clone(), generators, elements, orders })
}

fn order_by_chain<U: Universe>(universe: &U, x: &U::Element) -> u64 {
    let identity = universe.identity();
    let mut y = x.clone();
    let mut k = 1u64;
    while y != identity {
        y = universe.compose(&y, x);
        k += 1;
    }
    k
}

/// One conjugacy class of cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroupClass {
    /// Order of the subgroups in the class.
    pub order: u64,
    /// Number of cyclic subgroups in the class.
    pub size: u64,
    /// Index (in canonical element order) of a generator of one member.
    pub representative: usize,
}

/// Order-level invariants of a group, independent of its universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    /// Element order → number of elements of that order.
    pub order_counts: BTreeMap<u64, u64>,
    pub permutation_degree: Option<usize>,
    /// Cycle type → number of elements, for permutation groups.
    pub cycle_types: Option<BTreeMap<CycleType, u64>>,
    /// `None` when the group is above the class cap.
    pub cyclic_subgroup_classes: Option<Vec<CyclicSubgroupClass>>,
}

impl GroupInvariants {
    pub fn element_orders(&self) -> BTreeSet<u64> {
        self.order_counts.keys().copied().collect()
    }

    pub fn has_element_order(&self, d: u64) -> bool {
        self.order_counts.contains_key(&d)
    }

    /// Builds invariants for an abstract group known only through its
    /// element-order statistics.
    pub fn from_order_counts(label: String, order_counts: BTreeMap<u64, u64>) -> GroupInvariants {
        let order = order_counts.values().sum();
        let exponent = order_counts.keys().fold(1, |acc, &d| lcm(acc, d));
        GroupInvariants {
            label,
            order,
            exponent,
            order_counts,
            permutation_degree: None,
            cycle_types: None,
            cyclic_subgroup_classes: None,
        }
    }
}

impl<U: Universe> FiniteGroup<U> {
    pub fn universe(&self) -> &U {
        &self.universe
    }

    pub fn generators(&self) -> &[U::Element] {
        &self.generators
    }

    pub fn elements(&self) -> &[U::Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, x: &U::Element) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &U::Element) -> bool {
        self.index_of(x).is_some()
    }

    pub fn identity(&self) -> U::Element {
        self.universe.identity()
    }

    pub fn compose(&self, a: &U::Element, b: &U::Element) -> U::Element {
        self.universe.compose(a, b)
    }

    pub fn inverse(&self, a: &U::Element) -> U::Element {
        self.universe.inverse(a)
    }

    /// `h g h^{-1}`.
    pub fn conjugate(&self, g: &U::Element, by: &U::Element) -> U::Element {
        let u = &self.universe;
        u.compose(&u.compose(by, g), &u.inverse(by))
    }

    /// `a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: &U::Element, b: &U::Element) -> U::Element {
        let u = &self.universe;
        u.compose(&u.compose(&u.inverse(a), &u.inverse(b)), &u.compose(a, b))
    }

    pub fn power(&self, x: &U::Element, mut e: u64) -> U::Element {
        let u = &self.universe;
        let mut acc = u.identity();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = u.compose(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = u.compose(&base, &base);
            }
        }
        acc
    }

    /// Element order from the cached power-chain computation.
    pub fn element_order(&self, x: &U::Element) -> Option<u64> {
        self.index_of(x).map(|i| self.orders[i])
    }

    /// Element order by repeated squaring: start from `|G|` and strip prime
    /// factors while the power stays trivial.
    pub fn element_order_by_squaring(&self, x: &U::Element) -> u64 {
        let identity = self.identity();
        let mut ord = self.order() as u64;
        for r in prime_divisors(ord) {
            while ord.is_multiple_of(r) && self.power(x, ord / r) == identity {
                ord /= r;
            }
        }
        ord
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &d| lcm(acc, d))
    }

    /// Subgroup generated by `gens`, in the same universe.
    pub fn subgroup(&self, gens: Vec<U::Element>) -> Result<FiniteGroup<U>, GroupError> {
        if gens.iter().any(|g| !self.contains(g)) {
            return Err(GroupError::NotAnElement);
        }
        close_group(&self.universe, gens, self.order().max(1))
    }

    /// Whether every element of `sub` lies in `self`.
    pub fn contains_group(&self, sub: &FiniteGroup<U>) -> bool {
        sub.elements.iter().all(|x| self.contains(x))
    }

    /// Normality of a subgroup, checked on generators of both groups.
    pub fn is_normal(&self, sub: &FiniteGroup<U>) -> bool {
        self.contains_group(sub)
            && self
                .generators
                .iter()
                .all(|s| sub.generators.iter().all(|h| sub.contains(&self.conjugate(h, s))))
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: Vec<U::Element>) -> Result<FiniteGroup<U>, GroupError> {
        let mut current = self.subgroup(gens)?;
        loop {
            let mut extra = None;
            'search: for h in current.generators() {
                for s in &self.generators {
                    let c = self.conjugate(h, s);
                    if !current.contains(&c) {
                        extra = Some(c);
                        break 'search;
                    }
                }
            }
            match extra {
                None => return Ok(current),
                Some(c) => {
                    let mut gens = current.generators.clone();
                    gens.push(c);
                    current = self.subgroup(gens)?;
                }
            }
        }
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<U::Element> {
        self.elements
            .iter()
            .filter(|z| {
                self.generators
                    .iter()
                    .all(|g| self.universe.compose(z, g) == self.universe.compose(g, z))
            })
            .cloned()
            .collect()
    }

    /// Commutator subgroup: normal closure of commutators of generators.
    pub fn derived_subgroup(&self) -> Result<FiniteGroup<U>, GroupError> {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = self.commutator(a, b);
                if c != self.identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.normal_closure(gens)
    }

    /// Whether the group is abelian (generators commute pairwise).
    pub fn is_abelian(&self) -> bool {
        let u = &self.universe;
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| u.compose(a, b) == u.compose(b, a)))
    }

    /// The subgroup generated by all elements of `p`-power order, which is
    /// the subgroup generated by all Sylow `p`-subgroups. Normality is
    /// verified before returning.
    pub fn sylow_generated(&self, p: u64) -> Result<FiniteGroup<U>, GroupError> {
        if !crate::arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let mut current = self.subgroup(Vec::new())?;
        for (x, &ord) in self.elements.iter().zip(&self.orders) {
            if ord > 1 && is_power_of(ord, p) && !current.contains(x) {
                let mut gens = current.generators.clone();
                gens.push(x.clone());
                current = self.subgroup(gens)?;
            }
        }
        if !self.is_normal(&current) {
            return Err(GroupError::NotNormal);
        }
        Ok(current)
    }

    /// True iff no normal subgroup of `self` lies strictly between the
    /// trivial group and `sub`. Searches normal closures of the nontrivial
    /// elements of `sub`; limited to groups of at most `class_cap` elements.
    pub fn minimal_normal_check(&self, sub: &FiniteGroup<U>, class_cap: usize) -> Result<bool, GroupError> {
        if self.order() > class_cap {
            return Err(GroupError::CapExceeded(class_cap));
        }
        if !self.is_normal(sub) {
            return Err(GroupError::NotNormal);
        }
        if sub.order() == 1 {
            return Ok(false);
        }
        let mut covered: BTreeSet<U::Element> = BTreeSet::new();
        for x in sub.elements() {
            if *x == self.identity() || covered.contains(x) {
                continue;
            }
            let closure = self.normal_closure(vec![x.clone()])?;
            if closure.order() < sub.order() {
                return Ok(false);
            }
            // generators of <x> have the same normal closure
            let d = self.element_order(x).unwrap_or(1);
            let mut y = x.clone();
            for k in 1..=d {
                if crate::arith::gcd(k, d) == 1 {
                    covered.insert(y.clone());
                }
                y = self.universe.compose(&y, x);
            }
        }
        Ok(true)
    }

    /// Conjugacy classes of cyclic subgroups; `None` above `class_cap`.
    pub fn cyclic_subgroup_classes(&self, class_cap: usize) -> Option<Vec<CyclicSubgroupClass>> {
        if self.order() > class_cap {
            return None;
        }
        let n = self.order();
        // key[i]: smallest index among generators of <elements[i]>
        let mut key = vec![usize::MAX; n];
        for i in 0..n {
            if key[i] != usize::MAX {
                continue;
            }
            let x = &self.elements[i];
            let d = self.orders[i];
            let mut gens_idx = Vec::new();
            let mut y = x.clone();
            for k in 1..=d {
                if crate::arith::gcd(k, d) == 1 {
                    gens_idx.push(self.index_of(&y).expect("closed"));
                }
                y = self.universe.compose(&y, x);
            }
            let min = *gens_idx.iter().min().expect("nonempty");
            for j in gens_idx {
                key[j] = min;
            }
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            if key[i] != i {
                continue;
            }
            for s in &self.generators {
                let c = self.conjugate(&self.elements[i], s);
                let j = key[self.index_of(&c).expect("closed")];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: BTreeMap<usize, CyclicSubgroupClass> = BTreeMap::new();
        for i in 0..n {
            if key[i] != i {
                continue;
            }
            let root = find(&mut parent, i);
            classes
                .entry(root)
                .and_modify(|c| c.size += 1)
                .or_insert(CyclicSubgroupClass { order: self.orders[i], size: 1, representative: root });
        }
        Some(classes.into_values().collect())
    }

    /// Order, exponent, element-order and cycle-type statistics, and
    /// cyclic-subgroup classes when the group is at most `class_cap`.
    pub fn invariants(&self, class_cap: usize) -> GroupInvariants {
        let mut order_counts = BTreeMap::new();
        for &d in &self.orders {
            *order_counts.entry(d).or_insert(0u64) += 1;
        }
        let cycle_types = self.universe.permutation_degree().map(|_| {
            let mut types = BTreeMap::new();
            for x in &self.elements {
                if let Some(t) = self.universe.cycle_type(x) {
                    *types.entry(t).or_insert(0u64) += 1;
                }
            }
            types
        });
        GroupInvariants {
            label: self.universe.describe(),
            order: self.order() as u64,
            exponent: self.exponent(),
            order_counts,
            permutation_degree: self.universe.permutation_degree(),
            cycle_types,
            cyclic_subgroup_classes: self.cyclic_subgroup_classes(class_cap),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;

    fn s3() -> FiniteGroup<SymmetricUniverse> {
        symmetric(3, &Limits::default()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let u = SymmetricUniverse::new(3);
        let c3 = close_group(&u, vec![Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()], 100).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(s3().order(), 6);
        let err = close_group(&u, s3().generators().to_vec(), 5).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded(5));
    }

    #[test]
    fn s3_invariants() {
        let inv = s3().invariants(10_000);
        assert_eq!(inv.order, 6);
        assert_eq!(inv.exponent, 6);
        assert_eq!(inv.element_orders(), [1, 2, 3].into_iter().collect());
        let types: Vec<String> = inv.cycle_types.unwrap().keys().map(|t| alloc::format!("{t}")).collect();
        assert_eq!(types, vec!["1-1-1", "1-2", "3"]);
        let classes = inv.cyclic_subgroup_classes.unwrap();
        // trivial, the three order-2 subgroups (one class), A_3
        assert_eq!(classes.len(), 3);
        let sizes: Vec<(u64, u64)> = classes.iter().map(|c| (c.order, c.size)).collect();
        assert!(sizes.contains(&(2, 3)) && sizes.contains(&(3, 1)) && sizes.contains(&(1, 1)));
    }

    #[test]
    fn order_two_ways() {
        let g = symmetric(5, &Limits::default()).unwrap();
        for x in g.elements() {
            assert_eq!(g.element_order(x).unwrap(), g.element_order_by_squaring(x));
        }
    }

    #[test]
    fn sylow_generated_examples() {
        let g = s3();
        let a3 = g.sylow_generated(3).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.minimal_normal_check_in(&g));
        assert_eq!(g.sylow_generated(2).unwrap().order(), 6);
        let c6 = cyclic(6, &Limits::default()).unwrap();
        assert_eq!(c6.sylow_generated(5).unwrap().order(), 1);
        assert_eq!(c6.sylow_generated(4).unwrap_err(), GroupError::NotPrime(4));
    }

    #[test]
    fn minimal_normal_examples() {
        let g = s3();
        let a3 = g.sylow_generated(3).unwrap();
        assert!(g.minimal_normal_check(&a3, 10_000).unwrap());
        let d = dihedral(3, 2, &Limits::default()).unwrap();
        let rotations = d.subgroup(vec![DihedralElement { shift: 1, reflect: false }]).unwrap();
        assert_eq!(rotations.order(), 9);
        assert!(!d.minimal_normal_check(&rotations, 10_000).unwrap());
        let two = g.subgroup(vec![Permutation::from_cycles(3, &[&[1, 2]]).unwrap()]).unwrap();
        assert_eq!(g.minimal_normal_check(&two, 10_000).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn derived_and_center_of_s3() {
        let g = s3();
        assert_eq!(g.derived_subgroup().unwrap().order(), 3);
        assert_eq!(g.center().len(), 1);
        assert!(!g.is_abelian());
    }

    impl<U: Universe> FiniteGroup<U> {
        fn minimal_normal_check_in(&self, g: &FiniteGroup<U>) -> bool {
            g.minimal_normal_check(self, 10_000).unwrap()
        }
    }
}
