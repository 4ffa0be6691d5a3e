use std::ops::Range;

use rayon::prelude::*;
use tchebff_core::cover::{plan_scan, Cover, FrobeniusRecord, ScanResult, Specializer};
use tchebff_core::{CoverError, Limits};

/// Smallest block of points handed to one task.
const MIN_CHUNK: u64 = 64;

/// Same records, in the same order, as the sequential scan; each level's
/// finite points are split into blocks specialized on the rayon pool.
pub fn par_scan(cover: &Cover, max_ext: u32, limits: &Limits) -> Result<ScanResult, CoverError> {
    let plan = plan_scan(cover, max_ext, limits)?;
    let mut per_level = Vec::with_capacity(plan.levels.len());
    for (_, field) in &plan.levels {
        let spec = Specializer::new(cover, field)?;
        let n = field.order();
        let chunk = (n / (rayon::current_num_threads() as u64 * 8)).max(MIN_CHUNK);
        let blocks: Vec<Range<u64>> = (0..n).step_by(chunk as usize).map(|s| s..(s + chunk).min(n)).collect();
        let mut recs: Vec<FrobeniusRecord> = blocks.into_par_iter().flat_map_iter(|r| spec.scan_range(r)).collect();
        recs.push(spec.at(None));
        per_level.push(recs);
    }
    Ok(ScanResult::from_levels(&plan, per_level))
}
