use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tchebff_core::cover::{build_cover, specialize, Cover, Irreducibility, ProjPoint, ScanResult};
use tchebff_core::engine::{
    assemble, check_tower_lengths, cycle_type_coverage, density_stats, resolve_max_ext, tower_report,
    verify_witnesses,
};
use tchebff_core::field::extend_field_with;
use tchebff_core::group::{AnyGroup, GroupInvariants};
use tchebff_core::{CoverError, EngineError, Field, FieldError, GroupError, Limits};
use thiserror::Error;

use crate::parallel::par_scan;
use crate::parse::{parse_field, parse_group, parse_point, parse_poly, ParseError};
use crate::report::{
    write_histogram_tsv, write_records_csv, BranchDto, CheckDto, CoverageDto, DensityDto, Envelope, GroupDto, Point,
    RecordDto, ScanDto, TowerDto,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tchebff", version, about = "Frobenius orders of covers of the projective line over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Base field, `p` or `p^k`.
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Cover polynomial in T and Y; repeat for `tower`.
    #[arg(long, global = true)]
    pub poly: Vec<String>,

    /// Group spec; repeat for `tower`.
    #[arg(long, global = true)]
    pub group: Vec<String>,

    /// Largest extension degree to scan (the point's field for `specialize`).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_ext: Option<u32>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Point for `specialize`: an integer, a coefficient tuple `(c0,c1,..)` or `inf`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub point: Option<String>,

    /// Density tolerance constant: deviations up to `c0 * q^(-m/2)` pass.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub c0: f64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    /// Branch locus of the cover.
    Branch,
    /// Frobenius data at one point.
    Specialize,
    /// Frobenius data at every point of P^1 over each extension.
    Scan,
    /// Existence, strict, order-subset and exponent verdicts.
    Check,
    /// Cycle types of a permutation group seen at unramified points.
    Coverage,
    /// Order frequencies against the group's element-order shares.
    Density,
    /// Exponents and observed orders along a sequence of covers or groups.
    Tower,
    /// Invariants of a group.
    Group,
}

impl Verb {
    fn name(self) -> &'static str {
        match self {
            Verb::Branch => "branch",
            Verb::Specialize => "specialize",
            Verb::Scan => "scan",
            Verb::Check => "check",
            Verb::Coverage => "coverage",
            Verb::Density => "density",
            Verb::Tower => "tower",
            Verb::Group => "group",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    TsvHistogram,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("cannot write output: {0}")]
    Io(String),
}

fn is_cap(e: &CliError) -> bool {
    let field_cap = |f: &FieldError| matches!(f, FieldError::CapExceeded { .. });
    match e {
        CliError::Parse(ParseError::Field(f)) | CliError::Field(f) => field_cap(f),
        CliError::Parse(ParseError::Group(GroupError::CapExceeded(_))) | CliError::Group(GroupError::CapExceeded(_)) => {
            true
        }
        CliError::Cover(CoverError::Field(f)) | CliError::Engine(EngineError::Field(f)) => field_cap(f),
        CliError::Engine(EngineError::Cover(CoverError::Field(f))) => field_cap(f),
        _ => false,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        if is_cap(self) {
            EXIT_CAP
        } else {
            EXIT_USAGE
        }
    }
}

/// Serialized output and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit: i32,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Context<'a> {
    cli: &'a Cli,
    limits: Limits,
}

impl Context<'_> {
    fn field(&self) -> Result<Field, CliError> {
        let spec = self.cli.field.as_deref().ok_or_else(|| usage("--field is required"))?;
        Ok(parse_field(spec, self.cli.seed, &self.limits)?)
    }

    fn cover_from(&self, field: &Field, src: &str) -> Result<Cover, CliError> {
        Ok(build_cover(&parse_poly(src, field)?, field)?)
    }

    fn single_cover(&self) -> Result<Cover, CliError> {
        let field = self.field()?;
        match self.cli.poly.as_slice() {
            [src] => self.cover_from(&field, src),
            [] => Err(usage("--poly is required")),
            _ => Err(usage("--poly may be given only once for this command")),
        }
    }

    fn optional_group(&self, degree: usize) -> Result<Option<AnyGroup>, CliError> {
        match self.cli.group.as_slice() {
            [] => Ok(None),
            [spec] => Ok(Some(parse_group(spec, degree, &self.limits)?)),
            _ => Err(usage("--group may be given only once for this command")),
        }
    }

    fn required_group(&self, degree: usize) -> Result<AnyGroup, CliError> {
        self.optional_group(degree)?.ok_or_else(|| usage("--group is required"))
    }

    fn invariants(&self, g: &AnyGroup) -> GroupInvariants {
        g.invariants(self.limits.class_cap)
    }

    fn envelope<T: serde::Serialize>(&self, field: Option<String>, result: T) -> String {
        Envelope::new(self.cli.verb.name(), field, self.cli.seed, result).to_json()
    }

    fn formats(&self, allowed: &[Format]) -> Result<(), CliError> {
        if allowed.contains(&self.cli.format) {
            Ok(())
        } else {
            Err(usage(format!("--format {:?} is not available for {}", self.cli.format, self.cli.verb.name())))
        }
    }

    fn records_output(&self, scan: &ScanResult, json: impl FnOnce() -> String) -> Result<String, CliError> {
        let mut buf = Vec::new();
        let io = |e: csv::Error| CliError::Io(e.to_string());
        match self.cli.format {
            Format::Json => return Ok(json()),
            Format::Csv => write_records_csv(&mut buf, &scan.records).map_err(io)?,
            Format::TsvHistogram => write_histogram_tsv(&mut buf, &scan.records).map_err(io)?,
        }
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }
}

fn truncation_exit(truncated: bool) -> i32 {
    if truncated {
        EXIT_CAP
    } else {
        EXIT_OK
    }
}

/// Runs one command, on a dedicated pool when `--threads` is given.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| usage(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| run_inner(cli))
        }
        None => run_inner(cli),
    }
}

fn run_inner(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context { cli, limits: Limits::default() };
    match cli.verb {
        Verb::Branch => branch(&ctx),
        Verb::Specialize => specialize_cmd(&ctx),
        Verb::Scan => scan_cmd(&ctx),
        Verb::Check => check_cmd(&ctx),
        Verb::Coverage => coverage_cmd(&ctx),
        Verb::Density => density_cmd(&ctx),
        Verb::Tower => tower_cmd(&ctx),
        Verb::Group => group_cmd(&ctx),
    }
}

fn branch(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json])?;
    let cover = ctx.single_cover()?;
    let b = cover.branch_locus();
    let base = cover.base();
    let finite_points = b
        .finite
        .roots(ctx.cli.seed)
        .into_iter()
        .map(|(x, _)| Point(ProjPoint::finite(base, x).label()))
        .collect();
    let dto = BranchDto {
        cover: cover.label(),
        degree: cover.degree(),
        finite: b.finite.display_with("T"),
        finite_points,
        infinity: b.infinity,
        resultant: b.resultant.display_with("T"),
        irreducibility: match cover.irreducibility() {
            Irreducibility::Certified => "certified",
            Irreducibility::Assumed => "assumed",
        }
        .to_string(),
    };
    Ok(Outcome { output: ctx.envelope(Some(base.spec()), dto), exit: EXIT_OK })
}

fn specialize_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json, Format::Csv])?;
    let cover = ctx.single_cover()?;
    let base = cover.base();
    let m = ctx.cli.max_ext.unwrap_or(1);
    let field = extend_field_with(base, m, base.seed(), &ctx.limits)?;
    let src = ctx.cli.point.as_deref().ok_or_else(|| usage("--point is required"))?;
    let point = ProjPoint { field: field.clone(), value: parse_point(src, &field)? };
    let record = specialize(&cover, &point)?;
    let output = match ctx.cli.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_records_csv(&mut buf, std::slice::from_ref(&record)).map_err(|e| CliError::Io(e.to_string()))?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
        _ => ctx.envelope(Some(base.spec()), RecordDto::from(&record)),
    };
    Ok(Outcome { output, exit: EXIT_OK })
}

fn scan_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    let cover = ctx.single_cover()?;
    let scan = par_scan(&cover, ctx.cli.max_ext.unwrap_or(1), &ctx.limits)?;
    let output = ctx.records_output(&scan, || ctx.envelope(Some(cover.base().spec()), ScanDto::new(&cover, &scan)))?;
    Ok(Outcome { output, exit: truncation_exit(!scan.is_complete()) })
}

fn check_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    let cover = ctx.single_cover()?;
    let group = ctx.optional_group(cover.degree())?;
    let inv = group.as_ref().map(|g| ctx.invariants(g));
    let m = resolve_max_ext(&cover, inv.as_ref(), ctx.cli.max_ext, &ctx.limits);
    let scan = par_scan(&cover, m, &ctx.limits)?;
    let report = assemble(&cover, inv.as_ref(), &scan, &ctx.limits);
    let verified = verify_witnesses(&cover, &report, &ctx.limits).is_ok();
    let exit = if report.verdicts.any_fail() || !verified {
        EXIT_FAIL
    } else {
        truncation_exit(report.truncated_at.is_some())
    };
    let output = ctx.records_output(&scan, || ctx.envelope(Some(cover.base().spec()), CheckDto::new(&report, verified)))?;
    Ok(Outcome { output, exit })
}

fn coverage_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json])?;
    let cover = ctx.single_cover()?;
    let inv = ctx.invariants(&ctx.required_group(cover.degree())?);
    let m = resolve_max_ext(&cover, Some(&inv), ctx.cli.max_ext, &ctx.limits);
    let scan = par_scan(&cover, m, &ctx.limits)?;
    let table = cycle_type_coverage(&cover, &inv, &scan)?;
    let dto = CoverageDto::new(&cover, &inv, m, &table);
    Ok(Outcome { output: ctx.envelope(Some(cover.base().spec()), dto), exit: truncation_exit(table.truncated_at.is_some()) })
}

fn density_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json, Format::TsvHistogram])?;
    let cover = ctx.single_cover()?;
    let inv = ctx.invariants(&ctx.required_group(cover.degree())?);
    let m = resolve_max_ext(&cover, Some(&inv), ctx.cli.max_ext, &ctx.limits);
    let scan = par_scan(&cover, m, &ctx.limits)?;
    let table = density_stats(&inv, &scan, ctx.cli.c0);
    let output = ctx.records_output(&scan, || {
        ctx.envelope(Some(cover.base().spec()), DensityDto::new(&cover, &inv, ctx.cli.c0, &table))
    })?;
    Ok(Outcome { output, exit: truncation_exit(table.truncated_at.is_some()) })
}

fn tower_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json])?;
    let cli = ctx.cli;
    check_tower_lengths(cli.poly.len(), cli.group.len())?;
    if cli.group.is_empty() {
        return Err(usage("tower needs at least one --group"));
    }
    let field = if cli.poly.is_empty() { None } else { Some(ctx.field()?) };
    let covers: Vec<Cover> = match &field {
        Some(f) => cli.poly.iter().map(|src| ctx.cover_from(f, src)).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let mut invariants = Vec::new();
    for (i, spec) in cli.group.iter().enumerate() {
        let degree = covers.get(i).map_or(0, Cover::degree);
        invariants.push(ctx.invariants(&parse_group(spec, degree, &ctx.limits)?));
    }
    let scans: Vec<ScanResult> = covers
        .iter()
        .zip(&invariants)
        .map(|(c, g)| par_scan(c, resolve_max_ext(c, Some(g), cli.max_ext, &ctx.limits), &ctx.limits))
        .collect::<Result<_, _>>()?;
    let levels: Vec<_> = invariants.iter().enumerate().map(|(i, g)| (scans.get(i), g)).collect();
    let report = tower_report(&levels);
    let labels: Vec<String> = covers.iter().map(Cover::label).collect();
    let truncated = scans.iter().any(|s| !s.is_complete());
    let dto = TowerDto::new(&report, &labels, cli.max_ext);
    Ok(Outcome { output: ctx.envelope(field.map(|f| f.spec()), dto), exit: truncation_exit(truncated) })
}

fn group_cmd(ctx: &Context) -> Result<Outcome, CliError> {
    ctx.formats(&[Format::Json])?;
    let g = ctx.required_group(0)?;
    let dto = GroupDto::from(&ctx.invariants(&g));
    Ok(Outcome { output: ctx.envelope(None, dto), exit: EXIT_OK })
}
