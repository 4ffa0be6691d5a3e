//! Randomized check that an abelian group generated by `r` elements of order
//! at most `δ` with product 1 has order at most `δ^{r-1}`.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::constructions::AbelianUniverse;
use super::{close_group, Universe};
use crate::arith::checked_pow;
use crate::error::GroupError;
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub delta: u64,
    pub r: u32,
    /// `δ^{r-1}`.
    pub bound: u64,
    pub trials: u32,
    /// Trials whose forced last generator had order above `δ`.
    pub rejected: u32,
    pub max_order: u64,
    pub holds: bool,
}

/// Each trial draws an ambient `⊕ Z/n_i` with `2 ≤ n_i ≤ δ` and up to `r`
/// summands, then `g_1..g_{r-1}` of order at most `δ`, sets
/// `g_r = -(g_1 + .. + g_{r-1})`, and closes `⟨g_1, .., g_r⟩`.
pub fn abelian_product_bound_check(
    delta: u64,
    r: u32,
    trials: u32,
    seed: u64,
    limits: &Limits,
) -> Result<BoundReport, GroupError> {
    if delta == 0 || r == 0 {
        return Err(GroupError::InvalidParameter(alloc::string::String::from("δ and r must be positive")));
    }
    let bound = checked_pow(delta, r - 1)
        .filter(|&b| b <= limits.group_cap as u64)
        .ok_or(GroupError::CapExceeded(limits.group_cap))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = BoundReport { delta, r, bound, trials, rejected: 0, max_order: 1, holds: true };
    if delta == 1 {
        return Ok(report);
    }
    for _ in 0..trials {
        let rank = rng.gen_range(1..=r as usize);
        let mut moduli = Vec::with_capacity(rank);
        let mut size = 1u64;
        for _ in 0..rank {
            let n = rng.gen_range(2..=delta);
            if size * n > limits.group_cap as u64 {
                break;
            }
            size *= n;
            moduli.push(n);
        }
        let universe = AbelianUniverse { moduli };
        let mut gens = Vec::with_capacity(r as usize);
        for _ in 1..r {
            gens.push(random_small_element(&universe, delta, &mut rng));
        }
        let sum = gens.iter().fold(universe.identity(), |acc, g| universe.compose(&acc, g));
        let last = universe.inverse(&sum);
        if universe.element_order(&last) > delta {
            report.rejected += 1;
            continue;
        }
        gens.push(last);
        let order = close_group(&universe, gens, limits.group_cap)?.order() as u64;
        report.max_order = report.max_order.max(order);
        if order > bound {
            report.holds = false;
        }
    }
    Ok(report)
}

fn random_small_element(universe: &AbelianUniverse, delta: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    for _ in 0..64 {
        let x: Vec<u64> = universe.moduli.iter().map(|&n| rng.gen_range(0..n)).collect();
        if universe.element_order(&x) <= delta {
            return x;
        }
    }
    // a single nonzero coordinate always has order at most δ
    let mut x = universe.identity();
    let i = rng.gen_range(0..x.len());
    x[i] = rng.gen_range(0..universe.moduli[i]);
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let lim = Limits::default();
        let r = abelian_product_bound_check(2, 3, 1000, 7, &lim).unwrap();
        assert!(r.holds);
        assert_eq!(r.bound, 4);
        assert_eq!(r.max_order, 4);
        let r = abelian_product_bound_check(3, 2, 1000, 7, &lim).unwrap();
        assert!(r.holds && r.max_order <= 3);
        let r = abelian_product_bound_check(5, 4, 1000, 7, &lim).unwrap();
        assert!(r.holds && r.max_order <= 125);
    }

    #[test]
    fn klein_group_exhaustive() {
        // every (a, b, a+b) in (Z/2)^2 generates a group of order at most 4
        let u = AbelianUniverse { moduli: alloc::vec![2, 2] };
        let mut best = 0;
        for a in 0..4u64 {
            for b in 0..4u64 {
                let x = alloc::vec![a & 1, a >> 1];
                let y = alloc::vec![b & 1, b >> 1];
                let z = u.inverse(&u.compose(&x, &y));
                let g = close_group(&u, alloc::vec![x, y, z], 16).unwrap();
                best = best.max(g.order());
            }
        }
        assert_eq!(best, 4);
    }
}
