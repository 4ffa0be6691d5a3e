use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::Universe;
use crate::error::GroupError;

/// A permutation of `{0, .., n-1}` stored as its image list. Cycle notation
/// (parsing and display) is 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Permutation, GroupError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation of `{1..n}` from disjoint or overlapping cycles,
    /// composed left to right as written.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Permutation, GroupError> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..n as u32).collect();
            let mut seen = alloc::vec![false; n];
            for (k, &point) in cycle.iter().enumerate() {
                if point == 0 || point as usize > n {
                    return Err(GroupError::InvalidPermutation(format!("point {point} outside 1..={n}")));
                }
                if seen[point as usize - 1] {
                    return Err(GroupError::InvalidPermutation(format!("point {point} repeated in a cycle")));
                }
                seen[point as usize - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[point as usize - 1] = next - 1;
            }
            acc = Permutation(images).then(&acc);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn then(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Disjoint cycles (1-based), fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.0[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.0.len();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.0[i] as usize;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        CycleType::new(lengths)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multiset of cycle lengths (or of factor degrees), ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> CycleType {
        parts.sort_unstable();
        CycleType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// lcm of the parts: the order of any permutation of this type.
    pub fn order(&self) -> u64 {
        self.0.iter().fold(1, |acc, &d| crate::arith::lcm(acc, u64::from(d)))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| format!("{x}")).collect();
        f.write_str(&parts.join("-"))
    }
}

/// Permutations of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricUniverse {
    degree: usize,
}

impl SymmetricUniverse {
    pub fn new(degree: usize) -> SymmetricUniverse {
        SymmetricUniverse { degree }
    }
}

impl Universe for SymmetricUniverse {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn compose(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b)
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn cycle_type(&self, a: &Permutation) -> Option<CycleType> {
        Some(a.cycle_type())
    }

    fn permutation_degree(&self) -> Option<usize> {
        Some(self.degree)
    }

    fn describe(&self) -> String {
        format!("permutations of {} points", self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(format!("{p}"), "(1 2 3)(4 5)");
        assert_eq!(format!("{}", p.cycle_type()), "2-3");
        assert_eq!(p.cycle_type().order(), 6);
        assert_eq!(p.then(&p.inverse()), Permutation::identity(5));
    }

    #[test]
    fn invalid_permutations() {
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 1]]).is_err());
        assert!(Permutation::from_images(alloc::vec![0, 0, 1]).is_err());
    }

    #[test]
    fn cycle_type_counts_fixed_points() {
        let p = Permutation::from_cycles(4, &[&[2, 3]]).unwrap();
        assert_eq!(p.cycle_type().parts(), &[1, 1, 2]);
    }
}
