//! Verdicts from scans: compares the Frobenius orders observed at unramified
//! points with the element orders of a declared group.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{checked_pow, lcm};
use crate::cover::{scan_with, specialize, Cover, FrobeniusRecord, PointLabel, ProjPoint, ScanResult};
use crate::error::EngineError;
use crate::field::extend_field_with;
use crate::group::{CycleType, GroupInvariants};
use crate::limits::Limits;

/// Verdicts compare element orders (and cycle types for permutation groups),
/// never conjugacy classes of cyclic subgroups.
pub const GRANULARITY_NOTE: &str = "verdicts compare element orders and cycle types; \
factorization patterns cannot separate classes of cyclic subgroups that share a cycle type";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "UNKNOWN",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        match s {
            "PASS" => Some(Verdict::Pass),
            "FAIL" => Some(Verdict::Fail),
            "UNKNOWN" => Some(Verdict::Unknown),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First unramified record realizing an order or a cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub m: u32,
    pub point: PointLabel,
    pub degrees: Vec<u32>,
}

impl Witness {
    fn of(r: &FrobeniusRecord) -> Witness {
        Witness { m: r.m, point: r.point.label(), degrees: r.degrees.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub existence: Verdict,
    pub strict: Verdict,
    pub order_subset: Verdict,
    pub exponent_lcm: Verdict,
}

impl Verdicts {
    pub fn any_fail(&self) -> bool {
        [self.existence, self.strict, self.order_subset, self.exponent_lcm].contains(&Verdict::Fail)
    }
}

/// Unramified order statistics at one extension degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFrequency {
    pub m: u32,
    pub points: u64,
    pub unramified: u64,
    /// Frobenius order → number of unramified points.
    pub order_counts: BTreeMap<u64, u64>,
}

/// The declared group as far as the verdicts need it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    pub element_orders: BTreeSet<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TchebReport {
    pub cover: String,
    pub field: String,
    pub group: Option<GroupSummary>,
    pub max_ext: u32,
    pub scanned_max_ext: u32,
    /// Suggested scan depth for the declared group; `None` without a group.
    pub default_max_ext: Option<u32>,
    /// Observed order → first witness in canonical scan order.
    pub witnesses: BTreeMap<u64, Witness>,
    pub observed_orders: BTreeSet<u64>,
    pub observed_cycle_types: BTreeSet<CycleType>,
    pub levels: Vec<LevelFrequency>,
    pub verdicts: Verdicts,
    pub truncated_at: Option<u32>,
    pub alarms: Vec<String>,
    pub note: String,
}

impl TchebReport {
    /// lcm of the observed unramified orders.
    pub fn observed_lcm(&self) -> u64 {
        self.observed_orders.iter().fold(1, |acc, &d| lcm(acc, d))
    }
}

/// Least `m` with `q^m ≥ 4·exp²`, lowered to the deepest level the
/// enumeration cap allows.
pub fn default_max_ext(q: u64, exponent: u64, limits: &Limits) -> u32 {
    let target = 4u128 * u128::from(exponent) * u128::from(exponent);
    let mut m = 1u32;
    loop {
        let size = checked_pow(q, m).map_or(u128::MAX, u128::from);
        if size >= target {
            break;
        }
        if checked_pow(q, m + 1).is_none_or(|s| s > limits.enumeration_cap) {
            break;
        }
        m += 1;
    }
    m
}

/// Scans `cover` up to `max_ext` (or the default depth for `group`) and
/// assembles the report.
pub fn check(
    cover: &Cover,
    group: Option<&GroupInvariants>,
    max_ext: Option<u32>,
    limits: &Limits,
) -> Result<TchebReport, EngineError> {
    let m = resolve_max_ext(cover, group, max_ext, limits);
    let scan = scan_with(cover, m, limits)?;
    Ok(assemble(cover, group, &scan, limits))
}

/// The explicit `max_ext`, else the default depth for the group, else 1.
pub fn resolve_max_ext(cover: &Cover, group: Option<&GroupInvariants>, max_ext: Option<u32>, limits: &Limits) -> u32 {
    max_ext.unwrap_or_else(|| group.map_or(1, |g| default_max_ext(cover.base().order(), g.exponent, limits)))
}

/// Deterministic fold of a scan into a report.
pub fn assemble(cover: &Cover, group: Option<&GroupInvariants>, scan: &ScanResult, limits: &Limits) -> TchebReport {
    let mut witnesses: BTreeMap<u64, Witness> = BTreeMap::new();
    let mut strict_orders = BTreeSet::new();
    let mut cycle_types = BTreeSet::new();
    let mut levels: Vec<LevelFrequency> = scan
        .levels
        .iter()
        .map(|l| LevelFrequency { m: l.m, points: l.points, unramified: 0, order_counts: BTreeMap::new() })
        .collect();
    for r in scan.records.iter().filter(|r| !r.ramified) {
        witnesses.entry(r.order).or_insert_with(|| Witness::of(r));
        if r.m == 1 {
            strict_orders.insert(r.order);
        }
        cycle_types.insert(CycleType::new(r.degrees.clone()));
        if let Some(level) = levels.iter_mut().find(|l| l.m == r.m) {
            level.unramified += 1;
            *level.order_counts.entry(r.order).or_insert(0) += 1;
        }
    }
    let observed_orders: BTreeSet<u64> = witnesses.keys().copied().collect();
    let level_one_scanned = scan.levels.first().is_some_and(|l| l.m == 1);
    let default_m = group.map(|g| default_max_ext(cover.base().order(), g.exponent, limits));
    let mut alarms = Vec::new();

    let verdicts = match group {
        None => Verdicts {
            existence: Verdict::Unknown,
            strict: Verdict::Unknown,
            order_subset: Verdict::Unknown,
            exponent_lcm: Verdict::Unknown,
        },
        Some(g) => {
            let orders = g.element_orders();
            let existence = if orders.iter().all(|d| observed_orders.contains(d)) {
                Verdict::Pass
            } else if scan.is_complete() && default_m.is_some_and(|d| scan.requested_max_ext >= d) {
                Verdict::Fail
            } else {
                Verdict::Unknown
            };
            let strict = if !level_one_scanned {
                Verdict::Unknown
            } else if orders.iter().all(|d| strict_orders.contains(d)) {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            let group_types = g.cycle_types.as_ref().filter(|_| g.permutation_degree == Some(cover.degree()));
            let mut subset_ok = true;
            for d in &observed_orders {
                if !orders.contains(d) {
                    subset_ok = false;
                }
                if g.exponent % d != 0 {
                    alarms.push(format!("observed order {d} does not divide the group exponent {}", g.exponent));
                }
            }
            if let Some(types) = group_types {
                for t in &cycle_types {
                    if !types.contains_key(t) {
                        subset_ok = false;
                        alarms.push(format!("observed cycle type {t} does not occur in the group"));
                    }
                }
            }
            let order_subset = if subset_ok { Verdict::Pass } else { Verdict::Fail };
            let observed_lcm = observed_orders.iter().fold(1, |acc, &d| lcm(acc, d));
            let exponent_lcm = match existence {
                Verdict::Pass if observed_lcm == g.exponent => Verdict::Pass,
                Verdict::Pass => Verdict::Fail,
                _ => Verdict::Unknown,
            };
            Verdicts { existence, strict, order_subset, exponent_lcm }
        }
    };

    TchebReport {
        cover: cover.label(),
        field: cover.base().spec(),
        group: group.map(|g| GroupSummary {
            label: g.label.clone(),
            order: g.order,
            exponent: g.exponent,
            element_orders: g.element_orders(),
        }),
        max_ext: scan.requested_max_ext,
        scanned_max_ext: scan.scanned_max_ext(),
        default_max_ext: default_m,
        witnesses,
        observed_orders,
        observed_cycle_types: cycle_types,
        levels,
        verdicts,
        truncated_at: scan.truncated_at,
        alarms,
        note: String::from(GRANULARITY_NOTE),
    }
}

/// Re-specializes every witness of `report` and checks its order.
pub fn verify_witnesses(cover: &Cover, report: &TchebReport, limits: &Limits) -> Result<(), EngineError> {
    let base = cover.base();
    for (&order, w) in &report.witnesses {
        let field = extend_field_with(base, w.m, base.seed(), limits)?;
        let point = match &w.point {
            PointLabel::Infinity => ProjPoint::infinity(&field),
            PointLabel::Finite(c) => ProjPoint::finite(&field, field.from_coefficients(c)),
        };
        let r = specialize(cover, &point)?;
        if r.ramified || r.order != order || r.degrees != w.degrees {
            return Err(EngineError::BadWitness { m: w.m, point: format!("{}", w.point), order });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageRow {
    pub cycle_type: CycleType,
    /// Number of group elements of this type (0 when absent from the group).
    pub group_count: u64,
    /// Number of unramified records of this type.
    pub observed: u64,
    pub first_witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageTable {
    pub rows: Vec<CoverageRow>,
    /// Types of the group never observed.
    pub gaps: Vec<CycleType>,
    /// Observed types that do not occur in the group.
    pub alarms: Vec<CycleType>,
    pub truncated_at: Option<u32>,
}

impl CoverageTable {
    pub fn is_covered(&self, t: &CycleType) -> bool {
        self.rows.iter().any(|r| &r.cycle_type == t && r.observed > 0)
    }
}

/// Which cycle types of a permutation group appear at unramified points.
pub fn cycle_type_coverage(
    cover: &Cover,
    group: &GroupInvariants,
    scan: &ScanResult,
) -> Result<CoverageTable, EngineError> {
    let types = group.cycle_types.as_ref().ok_or(EngineError::NotPermutationGroup)?;
    let n = group.permutation_degree.ok_or(EngineError::NotPermutationGroup)?;
    if n != cover.degree() {
        return Err(EngineError::DegreeMismatch { group: n, cover: cover.degree() });
    }
    let mut rows: BTreeMap<CycleType, CoverageRow> = types
        .iter()
        .map(|(t, &c)| (t.clone(), CoverageRow { cycle_type: t.clone(), group_count: c, observed: 0, first_witness: None }))
        .collect();
    for r in scan.records.iter().filter(|r| !r.ramified) {
        let t = CycleType::new(r.degrees.clone());
        let row = rows
            .entry(t.clone())
            .or_insert(CoverageRow { cycle_type: t, group_count: 0, observed: 0, first_witness: None });
        row.observed += 1;
        if row.first_witness.is_none() {
            row.first_witness = Some(Witness::of(r));
        }
    }
    let rows: Vec<CoverageRow> = rows.into_values().collect();
    let gaps = rows.iter().filter(|r| r.group_count > 0 && r.observed == 0).map(|r| r.cycle_type.clone()).collect();
    let alarms = rows.iter().filter(|r| r.group_count == 0).map(|r| r.cycle_type.clone()).collect();
    Ok(CoverageTable { rows, gaps, alarms, truncated_at: scan.truncated_at })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityBucket {
    pub order: u64,
    pub observed: u64,
    /// `observed / unramified`; `None` when the level has no unramified point.
    pub fraction: Option<f64>,
    /// Share of group elements of this order.
    pub expected: f64,
    pub deviation: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityLevel {
    pub m: u32,
    pub field_order: u64,
    pub unramified: u64,
    /// `c0 · q^{-m/2}`.
    pub tolerance: f64,
    pub buckets: Vec<DensityBucket>,
    pub max_deviation: Option<f64>,
    pub within_tolerance: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityTable {
    pub levels: Vec<DensityLevel>,
    pub max_deviation: Option<f64>,
    pub truncated_at: Option<u32>,
}

/// Per-level frequency of each Frobenius order among unramified points,
/// against the share of elements of that order in the group.
pub fn density_stats(group: &GroupInvariants, scan: &ScanResult, c0: f64) -> DensityTable {
    let mut levels = Vec::new();
    let mut overall: Option<f64> = None;
    for level in &scan.levels {
        let mut counts: BTreeMap<u64, u64> = group.order_counts.keys().map(|&d| (d, 0)).collect();
        let mut unramified = 0u64;
        for r in scan.records.iter().filter(|r| r.m == level.m && !r.ramified) {
            unramified += 1;
            *counts.entry(r.order).or_insert(0) += 1;
        }
        let buckets: Vec<DensityBucket> = counts
            .into_iter()
            .map(|(order, observed)| {
                let expected = group.order_counts.get(&order).copied().unwrap_or(0) as f64 / group.order as f64;
                let fraction = (unramified > 0).then(|| observed as f64 / unramified as f64);
                DensityBucket { order, observed, fraction, expected, deviation: fraction.map(|f| (f - expected).abs()) }
            })
            .collect();
        let max_deviation = buckets.iter().filter_map(|b| b.deviation).reduce(f64::max);
        let tolerance = c0 / libm::sqrt(level.field_order as f64);
        if let Some(d) = max_deviation {
            overall = Some(overall.map_or(d, |o| o.max(d)));
        }
        levels.push(DensityLevel {
            m: level.m,
            field_order: level.field_order,
            unramified,
            tolerance,
            within_tolerance: max_deviation.map(|d| d <= tolerance),
            buckets,
            max_deviation,
        });
    }
    DensityTable { levels, max_deviation: overall, truncated_at: scan.truncated_at }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trend {
    Constant,
    StrictlyIncreasing,
    Irregular,
}

impl Trend {
    pub fn of(values: &[u64]) -> Trend {
        if values.windows(2).all(|w| w[0] == w[1]) {
            Trend::Constant
        } else if values.windows(2).all(|w| w[0] < w[1]) {
            Trend::StrictlyIncreasing
        } else {
            Trend::Irregular
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Trend::Constant => "constant",
            Trend::StrictlyIncreasing => "strictly-increasing",
            Trend::Irregular => "irregular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub index: usize,
    pub group: String,
    pub exponent: u64,
    /// `None` for group-only levels.
    pub observed_lcm: Option<u64>,
    pub max_observed: Option<u64>,
    pub truncated_at: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerReport {
    pub levels: Vec<TowerLevel>,
    pub exponent_trend: Trend,
    /// Trend of the observed lcm over levels that carry a scan.
    pub observed_trend: Option<Trend>,
    /// Exponents grow at every level, so the limit group has no finite
    /// exponent visible at this depth.
    pub exponent_escapes: bool,
}

/// One tower level: a scan (or none, for group-only levels) and its group.
pub fn tower_report(levels: &[(Option<&ScanResult>, &GroupInvariants)]) -> TowerReport {
    let rows: Vec<TowerLevel> = levels
        .iter()
        .enumerate()
        .map(|(index, (scan, g))| {
            let orders: Option<Vec<u64>> =
                scan.map(|s| s.records.iter().filter(|r| !r.ramified).map(|r| r.order).collect());
            TowerLevel {
                index,
                group: g.label.clone(),
                exponent: g.exponent,
                observed_lcm: orders.as_ref().map(|o| o.iter().fold(1, |acc, &d| lcm(acc, d))),
                max_observed: orders.as_ref().map(|o| o.iter().copied().max().unwrap_or(0)),
                truncated_at: scan.and_then(|s| s.truncated_at),
            }
        })
        .collect();
    let exponents: Vec<u64> = rows.iter().map(|r| r.exponent).collect();
    let observed: Vec<u64> = rows.iter().filter_map(|r| r.observed_lcm).collect();
    let exponent_trend = Trend::of(&exponents);
    TowerReport {
        observed_trend: (!observed.is_empty()).then(|| Trend::of(&observed)),
        exponent_escapes: exponents.len() > 1 && exponent_trend == Trend::StrictlyIncreasing,
        exponent_trend,
        levels: rows,
    }
}

/// Checks that the lists of covers and groups line up before a tower run.
pub fn check_tower_lengths(covers: usize, groups: usize) -> Result<(), EngineError> {
    if covers != 0 && covers != groups {
        return Err(EngineError::LengthMismatch { covers, groups });
    }
    Ok(())
}
