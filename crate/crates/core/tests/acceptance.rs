//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tchebff_core::cover::{scan, BivariatePoly, PointLabel};
use tchebff_core::engine::check;
use tchebff_core::field::make_field;
use tchebff_core::group::{
    abelian_product_bound_check, close_group, cyclic, dihedral, extra_special, heisenberg_module, semidirect,
    symmetric, DihedralElement, Permutation,
};
use tchebff_core::{Cover, Limits, UniPoly, Verdict};

type Outcome = Result<(), String>;

/// Name, check and runtime budget.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn cover(p: u64, rows: &[&[i64]]) -> Cover {
    let f = make_field(p, 1, 0).unwrap();
    let rows = rows.iter().map(|r| UniPoly::from_ints(&f, r)).collect();
    Cover::new(BivariatePoly::new(&f, rows)).unwrap()
}

/// `Y^2 - Y - (T^3 - T)`.
fn artin_schreier() -> Cover {
    cover(3, &[&[0, 1, 0, -1], &[-1], &[1]])
}

/// `Y^n - T`.
fn kummer(p: u64, n: usize) -> Cover {
    let mut rows: Vec<&[i64]> = vec![&[0, -1]];
    rows.extend(std::iter::repeat_n(&[][..], n - 1));
    rows.push(&[1]);
    cover(p, &rows)
}

fn c1() -> Outcome {
    let lim = Limits::default();
    let c = artin_schreier();
    let z2 = cyclic(2, &lim).unwrap().invariants(lim.class_cap);
    let r1 = check(&c, Some(&z2), Some(1), &lim).map_err(|e| e.to_string())?;
    let s = scan(&c, 1).map_err(|e| e.to_string())?;
    let finite: Vec<_> = s.records.iter().filter(|r| !r.point.is_infinity()).collect();
    ensure(finite.len() == 3, || format!("{} finite points", finite.len()))?;
    ensure(finite.iter().all(|r| !r.ramified && r.order == 1), || "finite point not split".into())?;
    let inf = s.records.iter().find(|r| r.point.is_infinity()).ok_or("no infinity record")?;
    ensure(inf.ramified, || "infinity unramified".into())?;
    ensure(r1.verdicts.strict == Verdict::Fail, || format!("strict {}", r1.verdicts.strict))?;
    let r2 = check(&c, Some(&z2), Some(2), &lim).map_err(|e| e.to_string())?;
    ensure(r2.verdicts.existence == Verdict::Pass, || format!("existence at M=2 {}", r2.verdicts.existence))
}

fn c2() -> Outcome {
    let lim = Limits::default();
    for (c, n) in [(kummer(7, 3), 3usize), (kummer(5, 2), 2)] {
        let g = cyclic(n, &lim).unwrap().invariants(lim.class_cap);
        let r = check(&c, Some(&g), None, &lim).map_err(|e| e.to_string())?;
        ensure(r.observed_lcm() == g.exponent, || format!("lcm {} vs exp {}", r.observed_lcm(), g.exponent))?;
        ensure(r.verdicts.exponent_lcm == Verdict::Pass, || format!("exponent_lcm {}", r.verdicts.exponent_lcm))?;
    }
    Ok(())
}

fn c3() -> Outcome {
    let s = scan(&kummer(7, 3), 3).map_err(|e| e.to_string())?;
    let level: Vec<_> = s
        .records
        .iter()
        .filter(|r| r.m == 3 && matches!(r.point.label(), PointLabel::Finite(ref c) if c.iter().any(|&x| x != 0)))
        .collect();
    let ones = level.iter().filter(|r| !r.ramified && r.order == 1).count();
    let threes = level.iter().filter(|r| !r.ramified && r.order == 3).count();
    ensure(level.len() == 342 && ones == 114 && threes == 228, || {
        format!("{} points, {ones} of order 1, {threes} of order 3", level.len())
    })
}

fn c4() -> Outcome {
    let f3 = make_field(3, 1, 0).unwrap();
    let b = artin_schreier().branch_locus().clone();
    ensure(b.finite == UniPoly::from_ints(&f3, &[1, -1, 0, 1]) && b.infinity, || {
        format!("{} / {}", b.finite.display_with("T"), b.infinity)
    })?;
    let f7 = make_field(7, 1, 0).unwrap();
    let b = kummer(7, 3).branch_locus().clone();
    ensure(b.finite == UniPoly::x(&f7) && b.infinity, || format!("{} / {}", b.finite.display_with("T"), b.infinity))
}

fn c5() -> Outcome {
    let lim = Limits::default();
    for (ell, m) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2)] {
        let e = extra_special(ell, m, &lim).map_err(|e| e.to_string())?;
        let cert = e.certify_extra_special().map_err(|e| e.to_string())?;
        let order = ell.pow(2 * m as u32 + 1);
        ensure(cert.order == order && cert.holds_for(ell), || format!("({ell},{m}): {cert:?}"))?;
    }
    Ok(())
}

fn c6() -> Outcome {
    let lim = Limits::default();
    let e = extra_special(3, 1, &lim).map_err(|e| e.to_string())?;
    let w = heisenberg_module(3, 1, 7, &lim).map_err(|e| e.to_string())?;
    let sub = w.invariant_subspace_scan(&lim).map_err(|e| e.to_string())?;
    ensure(sub.scanned == 114 && sub.is_irreducible(), || format!("{} scanned, {:?}", sub.scanned, sub.invariant))?;
    let g = semidirect(w, &e, &lim).map_err(|e| e.to_string())?;
    ensure(g.order() == 9261, || format!("|G_1| = {}", g.order()))?;
    let orders: BTreeSet<u64> = g.element_orders().iter().copied().collect();
    let expected = g.exponent();
    for seed in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut gens = g.generators().to_vec();
        for _ in 0..2 {
            let a = &g.elements()[rng.gen_range(0..g.order())];
            gens.push(a.clone());
        }
        gens.shuffle(&mut rng);
        let h = close_group(g.universe(), gens, lim.group_cap).map_err(|e| e.to_string())?;
        let o: BTreeSet<u64> = h.element_orders().iter().copied().collect();
        ensure(h.order() == 9261 && o == orders && h.exponent() == expected, || format!("seed {seed} differs"))?;
    }
    ensure(expected == 21, || format!("exponent {expected}"))
}

fn c7() -> Outcome {
    let lim = Limits::default();
    let e = extra_special(3, 1, &lim).map_err(|e| e.to_string())?;
    let w = heisenberg_module(3, 1, 7, &lim).map_err(|e| e.to_string())?;
    let g = semidirect(w, &e, &lim).map_err(|e| e.to_string())?;
    let p3 = g.sylow_generated(3).map_err(|e| e.to_string())?;
    ensure(p3.order() == g.order(), || format!("3(G_1) has order {}", p3.order()))?;
    let p7 = g.sylow_generated(7).map_err(|e| e.to_string())?;
    let wsub = g.module_subgroup().map_err(|e| e.to_string())?;
    ensure(p7.order() == 343 && wsub.contains_group(&p7), || format!("7(G_1) has order {}", p7.order()))?;
    for p in [2u64, 5, 11] {
        let h = g.sylow_generated(p).map_err(|e| e.to_string())?;
        ensure(h.order() == 1, || format!("{p}(G_1) has order {}", h.order()))?;
    }
    let s3 = symmetric(3, &lim).map_err(|e| e.to_string())?;
    let a3 = s3.sylow_generated(3).map_err(|e| e.to_string())?;
    let even: BTreeSet<Permutation> =
        s3.elements().iter().filter(|x| x.cycle_type().parts().iter().all(|&l| l % 2 == 1)).cloned().collect();
    let got: BTreeSet<Permutation> = a3.elements().iter().cloned().collect();
    ensure(got == even && got.len() == 3, || format!("3(S_3) = {got:?}"))
}

fn c8() -> Outcome {
    let lim = Limits::default();
    let mut prev = 0;
    for m in 1..=6u32 {
        let g = dihedral(3, m, &lim).map_err(|e| e.to_string())?;
        let n = 3u64.pow(m);
        ensure(g.exponent() == 2 * n && g.exponent() > prev, || format!("m={m}: exponent {}", g.exponent()))?;
        prev = g.exponent();
        let s = DihedralElement { shift: 0, reflect: true };
        let class: BTreeSet<DihedralElement> = g.elements().iter().map(|x| g.conjugate(&s, x)).collect();
        ensure(class.len() as u64 == n, || format!("m={m}: class size {}", class.len()))?;
        ensure(class.iter().all(|x| g.element_order(x) == Some(2)), || format!("m={m}: reflection not involution"))?;
    }
    Ok(())
}

fn c9() -> Outcome {
    let lim = Limits::default();
    for (delta, r) in [(2u64, 3u32), (3, 3), (5, 4)] {
        let rep = abelian_product_bound_check(delta, r, 1000, 0xC0FFEE, &lim).map_err(|e| e.to_string())?;
        ensure(rep.holds && rep.max_order <= rep.bound, || format!("({delta},{r}): {rep:?}"))?;
    }
    Ok(())
}

/// Monic polynomials over `Z/p` as ascending coefficient vectors.
fn naive_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0; a.len().saturating_sub(db)];
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    (q, r)
}

fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    (0..p.pow(d as u32)).map(move |mut k| {
        let mut v: Vec<u64> = (0..d)
            .map(|_| {
                let c = k % p;
                k /= p;
                c
            })
            .collect();
        v.push(1);
        v
    })
}

/// Factorization by trial division: divide by every monic polynomial of
/// degree 1, 2, .. in turn while it divides.
fn trial_division(f: &[u64], p: u64) -> BTreeSet<(Vec<u64>, u32)> {
    let mut rest = f.to_vec();
    let mut out = BTreeSet::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.insert((rest.clone(), 1));
            break;
        }
        for g in monic_of_degree(d, p) {
            let mut mult = 0;
            loop {
                let (q, r) = naive_divmod(&rest, &g, p);
                if !r.is_empty() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.insert((g, mult));
            }
        }
        d += 1;
    }
    // A surviving cofactor may repeat an already recorded factor.
    let mut merged: std::collections::BTreeMap<Vec<u64>, u32> = Default::default();
    for (g, m) in out {
        *merged.entry(g).or_default() += m;
    }
    merged.into_iter().collect()
}

fn c10() -> Outcome {
    for p in [3u64, 5] {
        let f = make_field(p, 1, 0).unwrap();
        for d in 0..=4 {
            for coeffs in monic_of_degree(d, p) {
                let ints: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
                let poly = UniPoly::from_ints(&f, &ints);
                let got: BTreeSet<(Vec<u64>, u32)> = poly
                    .factor(0)
                    .map_err(|e| e.to_string())?
                    .factors
                    .iter()
                    .map(|(g, m)| (g.coeffs().iter().map(|&c| f.coefficients(c)[0]).collect(), *m))
                    .collect();
                let want = trial_division(&coeffs, p);
                ensure(got == want, || format!("F_{p}: {coeffs:?} gives {got:?}, oracle {want:?}"))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 strict failure, existence at M=2", c1, Duration::from_secs(1)),
        ("2 exponent equals lcm of witnessed orders", c2, Duration::from_secs(2)),
        ("3 Kummer densities 114/228 at m=3", c3, Duration::from_secs(5)),
        ("4 branch loci", c4, Duration::from_secs(1)),
        ("5 extra-special certificates", c5, Duration::from_secs(10)),
        ("6 irreducible module and |G_1| = 9261", c6, Duration::from_secs(30)),
        ("7 groups generated by Sylow subgroups", c7, Duration::from_secs(30)),
        ("8 dihedral exponent tower", c8, Duration::from_secs(10)),
        ("9 abelian product bound", c9, Duration::from_secs(30)),
        ("10 factorization matches trial division", c10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > budget {
            outcome = Err(format!("took {elapsed:.2?}, budget {budget:?}"));
        }
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
