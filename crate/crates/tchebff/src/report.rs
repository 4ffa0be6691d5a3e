//! Serialized forms of every command result: JSON documents under a
//! versioned schema, CSV record tables and TSV histograms.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tchebff_core::cover::{Cover, FrobeniusRecord, PointLabel, ScanResult};
use tchebff_core::engine::{
    CoverageTable, DensityTable, GroupSummary, LevelFrequency, TchebReport, TowerReport, Verdict, Verdicts, Witness,
};
use tchebff_core::group::{CycleType, GroupInvariants};

pub const SCHEMA: &str = "tchebff-report/1";

/// Common header around every JSON result.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Envelope<T> {
    pub schema: String,
    pub command: String,
    pub field: Option<String>,
    pub seed: u64,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, field: Option<String>, seed: u64, result: T) -> Self {
        Envelope { schema: SCHEMA.to_string(), command: command.to_string(), field, seed, result }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }
}

/// A point of `P^1`: little-endian coefficients over `F_p`, or `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point(pub PointLabel);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Tag(String),
    Coeffs(Vec<u64>),
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            PointLabel::Infinity => PointRepr::Tag("inf".to_string()),
            PointLabel::Finite(c) => PointRepr::Coeffs(c.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(d)? {
            PointRepr::Tag(t) if t == "inf" => Ok(Point(PointLabel::Infinity)),
            PointRepr::Tag(t) => Err(serde::de::Error::custom(format!("unknown point tag {t:?}"))),
            PointRepr::Coeffs(c) => Ok(Point(PointLabel::Finite(c))),
        }
    }
}

pub fn dash_joined(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join("-")
}

pub fn parse_cycle_type(s: &str) -> Result<CycleType, String> {
    if s.is_empty() {
        return Ok(CycleType::new(Vec::new()));
    }
    s.split('-')
        .map(|x| x.parse::<u32>().map_err(|_| format!("bad cycle type {s:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(CycleType::new)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RecordDto {
    pub m: u32,
    pub t0: Point,
    pub degrees: Vec<u32>,
    pub order: u64,
    pub ramified: bool,
    pub branch_point: bool,
    pub squarefree: bool,
    pub degenerate: bool,
}

impl From<&FrobeniusRecord> for RecordDto {
    fn from(r: &FrobeniusRecord) -> Self {
        RecordDto {
            m: r.m,
            t0: Point(r.point.label()),
            degrees: r.degrees.clone(),
            order: r.order,
            ramified: r.ramified,
            branch_point: r.branch_point,
            squarefree: r.squarefree,
            degenerate: r.degenerate,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LevelDto {
    pub m: u32,
    pub field_order: u64,
    pub points: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ScanDto {
    pub cover: String,
    pub max_ext: u32,
    pub scanned_max_ext: u32,
    pub truncated_at: Option<u32>,
    pub levels: Vec<LevelDto>,
    pub records: Vec<RecordDto>,
}

impl ScanDto {
    pub fn new(cover: &Cover, scan: &ScanResult) -> Self {
        ScanDto {
            cover: cover.label(),
            max_ext: scan.requested_max_ext,
            scanned_max_ext: scan.scanned_max_ext(),
            truncated_at: scan.truncated_at,
            levels: scan
                .levels
                .iter()
                .map(|l| LevelDto { m: l.m, field_order: l.field_order, points: l.points })
                .collect(),
            records: scan.records.iter().map(RecordDto::from).collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BranchDto {
    pub cover: String,
    pub degree: usize,
    /// Monic radical of the discriminant-type resultant, in `T`.
    pub finite: String,
    /// Roots of `finite` in the base field.
    pub finite_points: Vec<Point>,
    pub infinity: bool,
    pub resultant: String,
    pub irreducibility: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct WitnessDto {
    pub m: u32,
    pub t0: Point,
    pub degrees: Vec<u32>,
}

impl From<&Witness> for WitnessDto {
    fn from(w: &Witness) -> Self {
        WitnessDto { m: w.m, t0: Point(w.point.clone()), degrees: w.degrees.clone() }
    }
}

impl WitnessDto {
    fn to_witness(&self) -> Witness {
        Witness { m: self.m, point: self.t0.0.clone(), degrees: self.degrees.clone() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupSummaryDto {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    pub element_orders: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerdictsDto {
    pub existence: String,
    pub strict: String,
    pub order_subset: String,
    pub exponent_lcm: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LevelFrequencyDto {
    pub m: u32,
    pub points: u64,
    pub unramified: u64,
    pub order_counts: BTreeMap<u64, u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckDto {
    pub cover: String,
    pub base_field: String,
    pub group: Option<GroupSummaryDto>,
    pub max_ext: u32,
    pub scanned_max_ext: u32,
    pub default_max_ext: Option<u32>,
    pub verdicts: VerdictsDto,
    pub witnesses: BTreeMap<u64, WitnessDto>,
    pub observed_orders: Vec<u64>,
    pub observed_cycle_types: Vec<String>,
    pub levels: Vec<LevelFrequencyDto>,
    pub truncated_at: Option<u32>,
    pub alarms: Vec<String>,
    pub witnesses_verified: bool,
    pub note: String,
}

impl CheckDto {
    pub fn new(r: &TchebReport, witnesses_verified: bool) -> Self {
        let v = r.verdicts;
        CheckDto {
            cover: r.cover.clone(),
            base_field: r.field.clone(),
            group: r.group.as_ref().map(|g| GroupSummaryDto {
                label: g.label.clone(),
                order: g.order,
                exponent: g.exponent,
                element_orders: g.element_orders.iter().copied().collect(),
            }),
            max_ext: r.max_ext,
            scanned_max_ext: r.scanned_max_ext,
            default_max_ext: r.default_max_ext,
            verdicts: VerdictsDto {
                existence: v.existence.to_string(),
                strict: v.strict.to_string(),
                order_subset: v.order_subset.to_string(),
                exponent_lcm: v.exponent_lcm.to_string(),
            },
            witnesses: r.witnesses.iter().map(|(&d, w)| (d, WitnessDto::from(w))).collect(),
            observed_orders: r.observed_orders.iter().copied().collect(),
            observed_cycle_types: r.observed_cycle_types.iter().map(|t| t.to_string()).collect(),
            levels: r
                .levels
                .iter()
                .map(|l| LevelFrequencyDto {
                    m: l.m,
                    points: l.points,
                    unramified: l.unramified,
                    order_counts: l.order_counts.clone(),
                })
                .collect(),
            truncated_at: r.truncated_at,
            alarms: r.alarms.clone(),
            witnesses_verified,
            note: r.note.clone(),
        }
    }

    /// Rebuilds the in-memory report.
    pub fn to_report(&self) -> Result<TchebReport, String> {
        let verdict = |s: &str| Verdict::parse(s).ok_or_else(|| format!("bad verdict {s:?}"));
        let observed_cycle_types: BTreeSet<CycleType> =
            self.observed_cycle_types.iter().map(|s| parse_cycle_type(s)).collect::<Result<_, _>>()?;
        Ok(TchebReport {
            cover: self.cover.clone(),
            field: self.base_field.clone(),
            group: self.group.as_ref().map(|g| GroupSummary {
                label: g.label.clone(),
                order: g.order,
                exponent: g.exponent,
                element_orders: g.element_orders.iter().copied().collect(),
            }),
            max_ext: self.max_ext,
            scanned_max_ext: self.scanned_max_ext,
            default_max_ext: self.default_max_ext,
            witnesses: self.witnesses.iter().map(|(&d, w)| (d, w.to_witness())).collect(),
            observed_orders: self.observed_orders.iter().copied().collect(),
            observed_cycle_types,
            levels: self
                .levels
                .iter()
                .map(|l| LevelFrequency {
                    m: l.m,
                    points: l.points,
                    unramified: l.unramified,
                    order_counts: l.order_counts.clone(),
                })
                .collect(),
            verdicts: Verdicts {
                existence: verdict(&self.verdicts.existence)?,
                strict: verdict(&self.verdicts.strict)?,
                order_subset: verdict(&self.verdicts.order_subset)?,
                exponent_lcm: verdict(&self.verdicts.exponent_lcm)?,
            },
            truncated_at: self.truncated_at,
            alarms: self.alarms.clone(),
            note: self.note.clone(),
        })
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CoverageRowDto {
    pub cycle_type: String,
    pub group_count: u64,
    pub observed: u64,
    pub first_witness: Option<WitnessDto>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CoverageDto {
    pub cover: String,
    pub group: String,
    pub max_ext: u32,
    pub rows: Vec<CoverageRowDto>,
    pub gaps: Vec<String>,
    pub alarms: Vec<String>,
    pub truncated_at: Option<u32>,
}

impl CoverageDto {
    pub fn new(cover: &Cover, group: &GroupInvariants, max_ext: u32, t: &CoverageTable) -> Self {
        CoverageDto {
            cover: cover.label(),
            group: group.label.clone(),
            max_ext,
            rows: t
                .rows
                .iter()
                .map(|r| CoverageRowDto {
                    cycle_type: r.cycle_type.to_string(),
                    group_count: r.group_count,
                    observed: r.observed,
                    first_witness: r.first_witness.as_ref().map(WitnessDto::from),
                })
                .collect(),
            gaps: t.gaps.iter().map(|c| c.to_string()).collect(),
            alarms: t.alarms.iter().map(|c| c.to_string()).collect(),
            truncated_at: t.truncated_at,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DensityBucketDto {
    pub order: u64,
    pub observed: u64,
    pub fraction: Option<f64>,
    pub expected: f64,
    pub deviation: Option<f64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DensityLevelDto {
    pub m: u32,
    pub field_order: u64,
    pub unramified: u64,
    pub tolerance: f64,
    pub max_deviation: Option<f64>,
    pub within_tolerance: Option<bool>,
    pub buckets: Vec<DensityBucketDto>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DensityDto {
    pub cover: String,
    pub group: String,
    pub c0: f64,
    pub levels: Vec<DensityLevelDto>,
    pub max_deviation: Option<f64>,
    pub truncated_at: Option<u32>,
}

impl DensityDto {
    pub fn new(cover: &Cover, group: &GroupInvariants, c0: f64, t: &DensityTable) -> Self {
        DensityDto {
            cover: cover.label(),
            group: group.label.clone(),
            c0,
            levels: t
                .levels
                .iter()
                .map(|l| DensityLevelDto {
                    m: l.m,
                    field_order: l.field_order,
                    unramified: l.unramified,
                    tolerance: l.tolerance,
                    max_deviation: l.max_deviation,
                    within_tolerance: l.within_tolerance,
                    buckets: l
                        .buckets
                        .iter()
                        .map(|b| DensityBucketDto {
                            order: b.order,
                            observed: b.observed,
                            fraction: b.fraction,
                            expected: b.expected,
                            deviation: b.deviation,
                        })
                        .collect(),
                })
                .collect(),
            max_deviation: t.max_deviation,
            truncated_at: t.truncated_at,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TowerLevelDto {
    pub index: usize,
    pub cover: Option<String>,
    pub group: String,
    pub exponent: u64,
    pub observed_lcm: Option<u64>,
    pub max_observed: Option<u64>,
    pub truncated_at: Option<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TowerDto {
    pub max_ext: Option<u32>,
    pub levels: Vec<TowerLevelDto>,
    pub exponent_trend: String,
    pub observed_trend: Option<String>,
    pub exponent_escapes: bool,
}

impl TowerDto {
    pub fn new(t: &TowerReport, covers: &[String], max_ext: Option<u32>) -> Self {
        TowerDto {
            max_ext,
            levels: t
                .levels
                .iter()
                .map(|l| TowerLevelDto {
                    index: l.index,
                    cover: covers.get(l.index).cloned(),
                    group: l.group.clone(),
                    exponent: l.exponent,
                    observed_lcm: l.observed_lcm,
                    max_observed: l.max_observed,
                    truncated_at: l.truncated_at,
                })
                .collect(),
            exponent_trend: t.exponent_trend.as_str().to_string(),
            observed_trend: t.observed_trend.map(|x| x.as_str().to_string()),
            exponent_escapes: t.exponent_escapes,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassDto {
    pub order: u64,
    pub size: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupDto {
    pub label: String,
    pub order: u64,
    pub exponent: u64,
    pub order_counts: BTreeMap<u64, u64>,
    pub permutation_degree: Option<usize>,
    pub cycle_types: Option<BTreeMap<String, u64>>,
    /// `None` above the class cap.
    pub cyclic_subgroup_classes: Option<Vec<ClassDto>>,
}

impl From<&GroupInvariants> for GroupDto {
    fn from(g: &GroupInvariants) -> Self {
        GroupDto {
            label: g.label.clone(),
            order: g.order,
            exponent: g.exponent,
            order_counts: g.order_counts.clone(),
            permutation_degree: g.permutation_degree,
            cycle_types: g.cycle_types.as_ref().map(|t| t.iter().map(|(k, &v)| (k.to_string(), v)).collect()),
            cyclic_subgroup_classes: g
                .cyclic_subgroup_classes
                .as_ref()
                .map(|cs| cs.iter().map(|c| ClassDto { order: c.order, size: c.size }).collect()),
        }
    }
}

/// Columns `m, t0, degrees, order, ramified`.
pub fn write_records_csv<W: Write>(out: W, records: &[FrobeniusRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "t0", "degrees", "order", "ramified"])?;
    for r in records {
        w.write_record([
            r.m.to_string(),
            r.point.label().to_string(),
            dash_joined(&r.degrees),
            r.order.to_string(),
            r.ramified.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// `(m, order, count)` over unramified records, ordered by `m` then order.
pub fn histogram(records: &[FrobeniusRecord]) -> BTreeMap<(u32, u64), u64> {
    let mut h = BTreeMap::new();
    for r in records.iter().filter(|r| !r.ramified) {
        *h.entry((r.m, r.order)).or_insert(0) += 1;
    }
    h
}

pub fn write_histogram_tsv<W: Write>(out: W, records: &[FrobeniusRecord]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().delimiter(b'\t').from_writer(out);
    w.write_record(["m", "order", "count"])?;
    for ((m, order), count) in histogram(records) {
        w.write_record([m.to_string(), order.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
