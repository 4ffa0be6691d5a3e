//! Covers of `P^1` over `F_q` given by `P(T, Y)`, their branch locus, and
//! specialization of `P(t0, Y)` at points of `P^1(F_{q^m})`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::arith::checked_pow;
use crate::error::CoverError;
use crate::field::{extend_field_with, Field, FieldElement};
use crate::limits::Limits;
use crate::poly::UniPoly;

/// `P(T, Y)` stored as its coefficients in `F_q[T]`, indexed by Y-degree.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    field: Field,
    rows: Vec<UniPoly>,
}

impl BivariatePoly {
    pub fn new(field: &Field, rows: Vec<UniPoly>) -> BivariatePoly {
        let mut p = BivariatePoly { field: field.clone(), rows };
        while p.rows.last().is_some_and(UniPoly::is_zero) {
            p.rows.pop();
        }
        p
    }

    pub fn zero(field: &Field) -> BivariatePoly {
        BivariatePoly { field: field.clone(), rows: Vec::new() }
    }

    pub fn constant(field: &Field, c: FieldElement) -> BivariatePoly {
        BivariatePoly::new(field, vec![UniPoly::constant(field, c)])
    }

    pub fn t(field: &Field) -> BivariatePoly {
        BivariatePoly::new(field, vec![UniPoly::x(field)])
    }

    pub fn y(field: &Field) -> BivariatePoly {
        BivariatePoly::new(field, vec![UniPoly::zero(field), UniPoly::one(field)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficient of `Y^j` as a polynomial in `T`.
    pub fn row(&self, j: usize) -> UniPoly {
        self.rows.get(j).cloned().unwrap_or_else(|| UniPoly::zero(&self.field))
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Largest T-degree over all coefficients.
    pub fn t_degree(&self) -> usize {
        self.rows.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> UniPoly {
        self.rows.last().cloned().unwrap_or_else(|| UniPoly::zero(&self.field))
    }

    pub fn add(&self, other: &BivariatePoly) -> BivariatePoly {
        let n = self.rows.len().max(other.rows.len());
        BivariatePoly::new(&self.field, (0..n).map(|j| &self.row(j) + &other.row(j)).collect())
    }

    pub fn sub(&self, other: &BivariatePoly) -> BivariatePoly {
        let n = self.rows.len().max(other.rows.len());
        BivariatePoly::new(&self.field, (0..n).map(|j| &self.row(j) - &other.row(j)).collect())
    }

    pub fn neg(&self) -> BivariatePoly {
        BivariatePoly::new(&self.field, self.rows.iter().map(|r| -r).collect())
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        if self.is_zero() || other.is_zero() {
            return BivariatePoly::zero(&self.field);
        }
        let mut rows = vec![UniPoly::zero(&self.field); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BivariatePoly::new(&self.field, rows)
    }

    pub fn pow(&self, mut e: u64) -> BivariatePoly {
        let mut acc = BivariatePoly::constant(&self.field, self.field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `∂P/∂Y`.
    pub fn derivative_y(&self) -> BivariatePoly {
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, r)| r.scale(f.from_int((j as u64 % f.characteristic()) as i64)))
            .collect();
        BivariatePoly::new(f, rows)
    }

    /// `S^D · P(1/S, Y)` with `D` the largest T-degree.
    pub fn reversed(&self) -> BivariatePoly {
        let d = self.t_degree();
        let rows = self
            .rows
            .iter()
            .map(|r| match r.degree() {
                None => r.clone(),
                Some(dj) => r.reversed().shift(d - dj),
            })
            .collect();
        BivariatePoly::new(&self.field, rows)
    }

    /// Resultant with respect to `Y`, an element of `F_q[T]`.
    pub fn resultant_y(&self, other: &BivariatePoly) -> UniPoly {
        let zero = UniPoly::zero(&self.field);
        let (Some(m), Some(n)) = (self.y_degree(), other.y_degree()) else {
            return zero;
        };
        let size = m + n;
        if size == 0 {
            return UniPoly::one(&self.field);
        }
        let mut matrix = vec![vec![zero.clone(); size]; size];
        for i in 0..n {
            for k in 0..=m {
                matrix[i][i + k] = self.rows[m - k].clone();
            }
        }
        for i in 0..m {
            for k in 0..=n {
                matrix[n + i][i + k] = other.rows[n - k].clone();
            }
        }
        bareiss_determinant(&self.field, matrix)
    }

    /// Canonical text form, parseable by the command-line grammar when all
    /// coefficients lie in the prime subfield.
    pub fn display(&self) -> String {
        let f = &self.field;
        let mut terms: Vec<String> = Vec::new();
        for (j, row) in self.rows.iter().enumerate().rev() {
            for (i, &c) in row.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut parts: Vec<String> = Vec::new();
                if c != f.one() || (i == 0 && j == 0) {
                    let coeffs = f.coefficients(c);
                    if coeffs.iter().skip(1).all(|&x| x == 0) {
                        parts.push(format!("{}", coeffs[0]));
                    } else {
                        parts.push(f.format(c));
                    }
                }
                match i {
                    0 => {}
                    1 => parts.push(String::from("T")),
                    _ => parts.push(format!("T^{i}")),
                }
                match j {
                    0 => {}
                    1 => parts.push(String::from("Y")),
                    _ => parts.push(format!("Y^{j}")),
                }
                terms.push(parts.join("*"));
            }
        }
        if terms.is_empty() {
            String::from("0")
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self.display(), self.field)
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Fraction-free Gaussian elimination over `F_q[T]`.
fn bareiss_determinant(field: &Field, mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = UniPoly::one(field);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UniPoly::zero(field);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = UniPoly::zero(field);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Whether `P` was certified irreducible over `F_q(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Certified,
    Assumed,
}

/// Branch data of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchLocus {
    /// Monic radical of `Res_Y(P, ∂P/∂Y) · lc(T)`.
    pub finite: UniPoly,
    /// Whether `S = 0` is branch-suspect for the reversed cover.
    pub infinity: bool,
    /// `Res_Y(P, ∂P/∂Y)` itself.
    pub resultant: UniPoly,
    /// Finite branch polynomial of the reversed cover, in `S = 1/T`.
    pub reversed_finite: UniPoly,
}

/// A cover `F/F_q(T)` presented by a polynomial `P(T, Y)`.
#[derive(Clone, Debug)]
pub struct Cover {
    base: Field,
    poly: BivariatePoly,
    reversed: BivariatePoly,
    branch: BranchLocus,
    irreducibility: Irreducibility,
}

const DIVISOR_CANDIDATE_CAP: u64 = 1 << 20;

/// Validates `P(T, Y)` over `base` and computes its branch locus.
pub fn build_cover(poly: &BivariatePoly, base: &Field) -> Result<Cover, CoverError> {
    if poly.field() != base {
        return Err(CoverError::Poly(crate::error::PolyError::FieldMismatch));
    }
    Cover::new(poly.clone())
}

impl Cover {
    pub fn new(poly: BivariatePoly) -> Result<Cover, CoverError> {
        let n = match poly.y_degree() {
            None => return Err(CoverError::ZeroPolynomial),
            Some(0) => return Err(CoverError::NoY),
            Some(n) => n,
        };
        let base = poly.field().clone();
        let (finite, resultant) = branch_polynomial(&poly)?;
        let reversed = poly.reversed();
        let (reversed_finite, _) = branch_polynomial(&reversed)?;
        let infinity = reversed_finite.eval(base.zero()).is_zero();
        let irreducibility = if n <= 3 { certify_irreducible(&poly)? } else { Irreducibility::Assumed };
        Ok(Cover {
            base,
            poly,
            reversed,
            branch: BranchLocus { finite, infinity, resultant, reversed_finite },
            irreducibility,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn reversed_poly(&self) -> &BivariatePoly {
        &self.reversed
    }

    /// `n = deg_Y P`.
    pub fn degree(&self) -> usize {
        self.poly.y_degree().expect("validated")
    }

    pub fn branch_locus(&self) -> &BranchLocus {
        &self.branch
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.irreducibility
    }

    /// Canonical text of `P`.
    pub fn label(&self) -> String {
        self.poly.display()
    }

    /// Branch data; computed once when the cover is built.
    pub fn compute_branch_locus(&self) -> BranchLocus {
        self.branch.clone()
    }
}

/// Monic radical of `Res_Y(P, P_Y) · lc(T)` together with the raw resultant.
fn branch_polynomial(poly: &BivariatePoly) -> Result<(UniPoly, UniPoly), CoverError> {
    let dy = poly.derivative_y();
    if dy.is_zero() {
        return Err(CoverError::NotSquarefree);
    }
    let resultant = poly.resultant_y(&dy);
    if resultant.is_zero() {
        return Err(CoverError::NotSquarefree);
    }
    let product = &resultant * &poly.leading_coefficient();
    let (radical, _) = product.squarefree_part()?;
    Ok((radical.monic(), resultant))
}

/// For `n ≤ 3`, `P` is reducible over `F_q(T)` exactly when it has a root
/// `c·u/v` with `u | a_0`, `v | a_n` monic and `c ∈ F_q^*`.
fn certify_irreducible(poly: &BivariatePoly) -> Result<Irreducibility, CoverError> {
    let field = poly.field();
    let n = poly.y_degree().expect("nonzero");
    if n == 1 {
        return Ok(Irreducibility::Certified);
    }
    let a0 = poly.row(0);
    if a0.is_zero() {
        return Err(CoverError::Reducible(String::from("0")));
    }
    let numerators = monic_divisors(&a0, field.seed());
    let denominators = monic_divisors(&poly.leading_coefficient(), field.seed());
    let (Some(numerators), Some(denominators)) = (numerators, denominators) else {
        return Ok(Irreducibility::Assumed);
    };
    let work = (numerators.len() as u64) * (denominators.len() as u64) * (field.order() - 1);
    if work > DIVISOR_CANDIDATE_CAP {
        return Ok(Irreducibility::Assumed);
    }
    for u in &numerators {
        for v in &denominators {
            if u.degree() > Some(0) && v.degree() > Some(0) && !u.gcd(v)?.is_one() {
                continue;
            }
            for c in field.elements().skip(1) {
                let cu = u.scale(c);
                let value = (0..=n).fold(UniPoly::zero(field), |acc, j| {
                    let term = &(&poly.row(j) * &cu.pow(j as u64)) * &v.pow((n - j) as u64);
                    &acc + &term
                });
                if value.is_zero() {
                    return Err(CoverError::Reducible(format!("({}) / ({})", cu.display_with("T"), v.display_with("T"))));
                }
            }
        }
    }
    Ok(Irreducibility::Certified)
}

/// All monic divisors of a nonzero polynomial, or `None` above a size cap.
fn monic_divisors(f: &UniPoly, seed: u64) -> Option<Vec<UniPoly>> {
    let fact = f.factor(seed).ok()?;
    let count = fact.factors.iter().try_fold(1u64, |acc, (_, m)| acc.checked_mul(u64::from(*m) + 1))?;
    if count > 4096 {
        return None;
    }
    let mut out = vec![UniPoly::one(f.field())];
    for (g, m) in &fact.factors {
        let mut next = Vec::with_capacity(out.len() * (*m as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = &acc * g;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    Some(out)
}

/// A point of `P^1` over some field: a finite value or `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    pub field: Field,
    pub value: Option<FieldElement>,
}

impl ProjPoint {
    pub fn finite(field: &Field, value: FieldElement) -> ProjPoint {
        ProjPoint { field: field.clone(), value: Some(value) }
    }

    pub fn infinity(field: &Field) -> ProjPoint {
        ProjPoint { field: field.clone(), value: None }
    }

    pub fn is_infinity(&self) -> bool {
        self.value.is_none()
    }

    pub fn label(&self) -> PointLabel {
        match self.value {
            None => PointLabel::Infinity,
            Some(x) => PointLabel::Finite(self.field.coefficients(x)),
        }
    }
}

/// Field-free description of a point: little-endian coefficients of a
/// finite value, or `∞`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    Finite(Vec<u64>),
    Infinity,
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Infinity => f.write_str("inf"),
            PointLabel::Finite(c) => {
                f.write_str("(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// One specialization: the factorization pattern of `P(t0, Y)` over
/// `F_{q^m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusRecord {
    pub m: u32,
    pub point: ProjPoint,
    /// Irreducible factor degrees repeated by multiplicity, ascending.
    pub degrees: Vec<u32>,
    /// lcm of the factor degrees.
    pub order: u64,
    pub ramified: bool,
    /// `t0` is a root of the branch polynomial, or `∞` with the flag set.
    pub branch_point: bool,
    pub squarefree: bool,
    /// `P(t0, Y)` has degree below 1.
    pub degenerate: bool,
}

/// Specializes one cover at points of one extension field.
pub struct Specializer<'a> {
    cover: &'a Cover,
    ext: Field,
    m: u32,
    rows: Vec<UniPoly>,
    branch: UniPoly,
    at_infinity: Vec<FieldElement>,
}

impl<'a> Specializer<'a> {
    pub fn new(cover: &'a Cover, ext: &Field) -> Result<Specializer<'a>, CoverError> {
        let base = cover.base();
        let embedding = ext.embedding_from(base).map_err(|_| CoverError::PointField)?;
        let rows = cover
            .poly
            .rows()
            .iter()
            .map(|r| r.map_into(&embedding))
            .collect::<Result<Vec<_>, _>>()?;
        let branch = cover.branch.finite.map_into(&embedding)?;
        let at_infinity = cover.reversed.rows().iter().map(|r| embedding.apply(r.coeff(0))).collect();
        Ok(Specializer { cover, ext: ext.clone(), m: ext.degree() / base.degree(), rows, branch, at_infinity })
    }

    pub fn field(&self) -> &Field {
        &self.ext
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// `P(t0, Y)` over the extension; `None` is `∞`.
    pub fn specialized_poly(&self, value: Option<FieldElement>) -> UniPoly {
        let coeffs = match value {
            Some(t) => self.rows.iter().map(|r| r.eval(t)).collect(),
            None => self.at_infinity.clone(),
        };
        UniPoly::new(&self.ext, coeffs)
    }

    pub fn at(&self, value: Option<FieldElement>) -> FrobeniusRecord {
        let g = self.specialized_poly(value);
        let branch_point = match value {
            Some(t) => self.branch.eval(t).is_zero(),
            None => self.cover.branch.infinity,
        };
        let point = ProjPoint { field: self.ext.clone(), value };
        if g.degree().unwrap_or(0) == 0 {
            return FrobeniusRecord {
                m: self.m,
                point,
                degrees: Vec::new(),
                order: 1,
                ramified: true,
                branch_point,
                squarefree: false,
                degenerate: true,
            };
        }
        let fact = g.factor(self.ext.seed()).expect("nonzero polynomial");
        let squarefree = fact.is_squarefree();
        FrobeniusRecord {
            m: self.m,
            point,
            degrees: fact.degree_multiset(),
            order: fact.splitting_degree(),
            ramified: branch_point || !squarefree,
            branch_point,
            squarefree,
            degenerate: false,
        }
    }

    /// Records for the finite points with packed index in `range`.
    pub fn scan_range(&self, range: Range<u64>) -> Vec<FrobeniusRecord> {
        self.ext.element_range(range).map(|t| self.at(Some(t))).collect()
    }
}

/// Specializes `cover` at a single point.
pub fn specialize(cover: &Cover, point: &ProjPoint) -> Result<FrobeniusRecord, CoverError> {
    if let Some(v) = point.value {
        if !point.field.contains(v) {
            return Err(CoverError::PointField);
        }
    }
    Ok(Specializer::new(cover, &point.field)?.at(point.value))
}

/// Per-extension bookkeeping of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanLevel {
    pub m: u32,
    pub field_order: u64,
    pub points: u64,
}

/// The extension fields a scan will visit, and where it stops.
#[derive(Clone, Debug)]
pub struct ScanPlan {
    pub levels: Vec<(u32, Field)>,
    pub requested_max_ext: u32,
    /// First extension degree skipped because of the enumeration cap.
    pub truncated_at: Option<u32>,
}

pub fn plan_scan(cover: &Cover, max_ext: u32, limits: &Limits) -> Result<ScanPlan, CoverError> {
    if max_ext == 0 {
        return Err(CoverError::ZeroExtension);
    }
    let base = cover.base();
    let mut levels = Vec::new();
    let mut truncated_at = None;
    for m in 1..=max_ext {
        let fits = checked_pow(base.order(), m).is_some_and(|q| q <= limits.enumeration_cap);
        if !fits {
            truncated_at = Some(m);
            break;
        }
        levels.push((m, extend_field_with(base, m, base.seed(), limits)?));
    }
    Ok(ScanPlan { levels, requested_max_ext: max_ext, truncated_at })
}

/// All records of a scan, in canonical order: by `m`, then finite points in
/// enumeration order, then `∞`.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub records: Vec<FrobeniusRecord>,
    pub levels: Vec<ScanLevel>,
    pub requested_max_ext: u32,
    pub truncated_at: Option<u32>,
}

impl ScanResult {
    pub fn is_complete(&self) -> bool {
        self.truncated_at.is_none()
    }

    /// Largest `m` fully scanned.
    pub fn scanned_max_ext(&self) -> u32 {
        self.levels.last().map_or(0, |l| l.m)
    }

    /// Assembles a result from per-level record lists produced in plan order.
    pub fn from_levels(plan: &ScanPlan, per_level: Vec<Vec<FrobeniusRecord>>) -> ScanResult {
        let mut records = Vec::new();
        let mut levels = Vec::new();
        for ((m, field), recs) in plan.levels.iter().zip(per_level) {
            levels.push(ScanLevel { m: *m, field_order: field.order(), points: recs.len() as u64 });
            records.extend(recs);
        }
        ScanResult { records, levels, requested_max_ext: plan.requested_max_ext, truncated_at: plan.truncated_at }
    }
}

/// One record per point of `P^1(F_{q^m})` for `m = 1..=max_ext`.
pub fn scan(cover: &Cover, max_ext: u32) -> Result<ScanResult, CoverError> {
    scan_with(cover, max_ext, &Limits::default())
}

pub fn scan_with(cover: &Cover, max_ext: u32, limits: &Limits) -> Result<ScanResult, CoverError> {
    let plan = plan_scan(cover, max_ext, limits)?;
    let mut per_level = Vec::with_capacity(plan.levels.len());
    for (_, field) in &plan.levels {
        let spec = Specializer::new(cover, field)?;
        let mut recs = spec.scan_range(0..field.order());
        recs.push(spec.at(None));
        per_level.push(recs);
    }
    Ok(ScanResult::from_levels(&plan, per_level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{extend_field, make_field};

    fn poly(field: &Field, terms: &[(i64, usize, usize)]) -> BivariatePoly {
        // (coefficient, T-degree, Y-degree)
        terms.iter().fold(BivariatePoly::zero(field), |acc, &(c, i, j)| {
            let mono = BivariatePoly::constant(field, field.from_int(c))
                .mul(&BivariatePoly::t(field).pow(i as u64))
                .mul(&BivariatePoly::y(field).pow(j as u64));
            acc.add(&mono)
        })
    }

    fn kummer7() -> Cover {
        let f7 = make_field(7, 1, 0).unwrap();
        Cover::new(poly(&f7, &[(1, 0, 3), (-1, 1, 0)])).unwrap()
    }

    fn artin3() -> Cover {
        let f3 = make_field(3, 1, 0).unwrap();
        Cover::new(poly(&f3, &[(1, 0, 2), (-1, 0, 1), (-1, 3, 0), (1, 1, 0)])).unwrap()
    }

    #[test]
    fn build_examples() {
        let k = kummer7();
        assert_eq!(k.degree(), 3);
        assert_eq!(k.irreducibility(), Irreducibility::Certified);
        let a = artin3();
        assert_eq!(a.degree(), 2);
        let f5 = make_field(5, 1, 0).unwrap();
        let sq = poly(&f5, &[(1, 0, 2), (-2, 0, 1), (1, 0, 0)]);
        assert_eq!(Cover::new(sq).unwrap_err(), CoverError::NotSquarefree);
        assert_eq!(Cover::new(BivariatePoly::zero(&f5)).unwrap_err(), CoverError::ZeroPolynomial);
        assert_eq!(Cover::new(poly(&f5, &[(1, 2, 0), (1, 0, 0)])).unwrap_err(), CoverError::NoY);
    }

    #[test]
    fn inseparable_polynomial_is_rejected() {
        let f3 = make_field(3, 1, 0).unwrap();
        let p = poly(&f3, &[(1, 0, 3), (-1, 1, 0)]);
        assert_eq!(Cover::new(p).unwrap_err(), CoverError::NotSquarefree);
    }

    #[test]
    fn reducible_polynomial_is_rejected() {
        let f5 = make_field(5, 1, 0).unwrap();
        // Y^2 - T^2 = (Y - T)(Y + T)
        let p = poly(&f5, &[(1, 0, 2), (-1, 2, 0)]);
        assert!(matches!(Cover::new(p), Err(CoverError::Reducible(_))));
        // T*Y^2 - 1 has no root c*u/v
        let p = poly(&f5, &[(1, 1, 2), (-1, 0, 0)]);
        assert_eq!(Cover::new(p).unwrap().irreducibility(), Irreducibility::Certified);
        // (T+1)Y - ... n = 1 is always fine; Y^4 - T is only assumed
        let p = poly(&f5, &[(1, 0, 4), (-1, 1, 0)]);
        assert_eq!(Cover::new(p).unwrap().irreducibility(), Irreducibility::Assumed);
    }

    #[test]
    fn branch_locus_examples() {
        let k = kummer7();
        let f7 = k.base().clone();
        assert_eq!(k.branch_locus().finite, UniPoly::from_ints(&f7, &[0, 1]));
        assert!(k.branch_locus().infinity);
        // disc(Y^3 - T) = -27 T^2; Res(P, P') = 27 T^2 up to sign
        assert_eq!(k.branch_locus().resultant.degree(), Some(2));

        let a = artin3();
        let f3 = a.base().clone();
        assert_eq!(a.branch_locus().finite, UniPoly::from_ints(&f3, &[1, -1, 0, 1]));
        assert!(a.branch_locus().infinity);

        let f5 = make_field(5, 1, 0).unwrap();
        let c = Cover::new(poly(&f5, &[(1, 0, 2), (-1, 1, 0)])).unwrap();
        assert_eq!(c.branch_locus().finite, UniPoly::from_ints(&f5, &[0, 1]));
        assert!(c.branch_locus().infinity);
    }

    #[test]
    fn unramified_at_infinity() {
        // (T - 1)Y^2 - (T + 1) over F_5: reversal (1 - S)Y^2 - (1 + S) is Y^2 - 1 at S = 0
        let f5 = make_field(5, 1, 0).unwrap();
        let c = Cover::new(poly(&f5, &[(1, 1, 2), (-1, 0, 2), (-1, 1, 0), (-1, 0, 0)])).unwrap();
        assert!(!c.branch_locus().infinity);
        let rec = specialize(&c, &ProjPoint::infinity(&f5)).unwrap();
        assert!(!rec.ramified);
        assert_eq!(rec.degrees, vec![1, 1]);
    }

    #[test]
    fn specialize_examples() {
        let k = kummer7();
        let f7 = k.base().clone();
        let r = specialize(&k, &ProjPoint::finite(&f7, f7.from_int(1))).unwrap();
        assert_eq!((r.degrees.clone(), r.order, r.ramified), (vec![1, 1, 1], 1, false));
        let r = specialize(&k, &ProjPoint::finite(&f7, f7.from_int(3))).unwrap();
        assert_eq!((r.degrees.clone(), r.order, r.ramified), (vec![3], 3, false));
        let r = specialize(&k, &ProjPoint::infinity(&f7)).unwrap();
        assert!(r.ramified && r.degenerate);

        let a = artin3();
        let f3 = a.base().clone();
        let r = specialize(&a, &ProjPoint::finite(&f3, f3.from_int(2))).unwrap();
        assert_eq!((r.degrees.clone(), r.order, r.ramified), (vec![1, 1], 1, false));
    }

    #[test]
    fn specialize_rejects_foreign_point() {
        let k = kummer7();
        let f5 = make_field(5, 1, 0).unwrap();
        assert_eq!(specialize(&k, &ProjPoint::finite(&f5, f5.one())).unwrap_err(), CoverError::PointField);
    }

    #[test]
    fn scan_examples() {
        let a = artin3();
        let s = scan(&a, 1).unwrap();
        assert_eq!(s.records.len(), 4);
        assert!(s.records[..3].iter().all(|r| !r.ramified && r.order == 1));
        assert!(s.records[3].ramified && s.records[3].point.is_infinity());

        let k = kummer7();
        let s = scan(&k, 1).unwrap();
        assert_eq!(s.records.len(), 8);
        let ramified: Vec<_> = s.records.iter().filter(|r| r.ramified).map(|r| r.point.label()).collect();
        assert_eq!(ramified, vec![PointLabel::Finite(vec![0]), PointLabel::Infinity]);
        let split: Vec<_> = s.records.iter().filter(|r| !r.ramified && r.order == 1).map(|r| r.point.label()).collect();
        assert_eq!(split, vec![PointLabel::Finite(vec![1]), PointLabel::Finite(vec![6])]);
        assert_eq!(s.records.iter().filter(|r| !r.ramified && r.order == 3).count(), 4);

        assert_eq!(scan(&k, 0).unwrap_err(), CoverError::ZeroExtension);
    }

    #[test]
    fn scan_truncates_at_the_enumeration_cap() {
        let k = kummer7();
        let limits = Limits { enumeration_cap: 60, ..Limits::default() };
        let s = scan_with(&k, 3, &limits).unwrap();
        assert_eq!(s.truncated_at, Some(3));
        assert_eq!(s.scanned_max_ext(), 2);
        assert_eq!(s.records.len(), 8 + 50);
    }

    #[test]
    fn extension_degree_of_records() {
        let a = artin3();
        let s = scan(&a, 2).unwrap();
        assert_eq!(s.records.len(), 4 + 10);
        assert!(s.records[4..].iter().all(|r| r.m == 2));
        // an order-2 point exists over F_9
        assert!(s.records[4..].iter().any(|r| !r.ramified && r.order == 2));
    }

    #[test]
    fn display_is_canonical() {
        let a = artin3();
        assert_eq!(a.label(), "Y^2 + 2*Y + 2*T^3 + T");
        let k = kummer7();
        assert_eq!(k.label(), "Y^3 + 6*T");
    }

    #[test]
    fn cover_over_extension_field() {
        let f3 = make_field(3, 1, 0).unwrap();
        let f9 = extend_field(&f3, 2, 0).unwrap();
        let c = Cover::new(poly(&f9, &[(1, 0, 2), (-1, 1, 0)])).unwrap();
        let s = scan(&c, 2).unwrap();
        assert_eq!(s.records.len(), 10 + 82);
        for r in &s.records {
            if !r.degenerate {
                assert_eq!(r.degrees.iter().sum::<u32>(), 2);
            }
        }
    }
}
