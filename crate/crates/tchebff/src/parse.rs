//! Text formats for fields, polynomials, groups and points.
//!
//! Polynomial grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := 'T' | 'Y' | integer | '(' expr ')'
//! ```

use tchebff_core::cover::BivariatePoly;
use tchebff_core::field::{make_field_with, Field, FieldElement};
use tchebff_core::group::{
    cyclic, dihedral, extra_special, heisenberg_module, semidirect, symmetric, AnyGroup, Permutation,
    SymmetricUniverse,
};
use tchebff_core::limits::Limits;
use tchebff_core::{FieldError, GroupError};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("the polynomial does not involve Y")]
    NoY,
    #[error("bad field spec {0:?}: expected p or p^k")]
    FieldSpec(String),
    #[error("bad group spec {0:?}")]
    GroupSpec(String),
    #[error("bad point {0:?}: expected an integer, a coefficient tuple or inf")]
    Point(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, message: message.into() }
}

/// `"7"` → `(7, 1)`, `"3^2"` → `(3, 2)`.
pub fn parse_field_spec(src: &str) -> Result<(u64, u32), ParseError> {
    let bad = || ParseError::FieldSpec(src.to_string());
    let s = src.trim();
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => (p.trim(), k.trim()),
        None => (s, "1"),
    };
    Ok((p.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?))
}

pub fn parse_field(src: &str, seed: u64, limits: &Limits) -> Result<Field, ParseError> {
    let (p, k) = parse_field_spec(src)?;
    Ok(make_field_with(p, k, seed, limits)?)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Field,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BivariatePoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BivariatePoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BivariatePoly, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.uint()?;
            if e > MAX_EXPONENT {
                return Err(syntax(start, format!("exponent {e} exceeds {MAX_EXPONENT}")));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| syntax(start, "exponent too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(syntax(start, "expected an unsigned integer"));
        }
        Ok(value)
    }

    /// Integer literal reduced modulo the characteristic digit by digit.
    fn integer(&mut self) -> FieldElement {
        let p = self.field.characteristic();
        let mut r: u64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            r = (r * 10 + u64::from(d - b'0')) % p;
            self.pos += 1;
        }
        self.field.from_int(r as i64)
    }

    fn atom(&mut self) -> Result<BivariatePoly, ParseError> {
        let f = self.field;
        match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                Ok(BivariatePoly::t(f))
            }
            Some(b'Y') => {
                self.pos += 1;
                Ok(BivariatePoly::y(f))
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.integer();
                Ok(BivariatePoly::constant(f, c))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(syntax(self.pos, format!("unclosed parenthesis opened at position {open}")));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected {:?}", c as char))),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses without checking that `Y` occurs.
pub fn parse_expr(src: &str, field: &Field) -> Result<BivariatePoly, ParseError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, field };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(out)
}

/// Parses a cover polynomial; it must have positive `Y`-degree.
pub fn parse_poly(src: &str, field: &Field) -> Result<BivariatePoly, ParseError> {
    let poly = parse_expr(src, field)?;
    match poly.y_degree() {
        Some(n) if n > 0 => Ok(poly),
        _ => Err(ParseError::NoY),
    }
}

/// `"3"`, `"(1,2)"` (little-endian coefficients) or `"inf"`; `None` is `∞`.
pub fn parse_point(src: &str, field: &Field) -> Result<Option<FieldElement>, ParseError> {
    let s = src.trim();
    if s == "inf" {
        return Ok(None);
    }
    let bad = || ParseError::Point(src.to_string());
    let body = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
    let coeffs: Vec<u64> = body.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let p = field.characteristic();
    if coeffs.len() > field.degree() as usize || coeffs.iter().any(|&c| c >= p) {
        return Err(bad());
    }
    Ok(Some(field.from_coefficients(&coeffs)))
}

fn nums(spec: &str, args: &str, count: usize) -> Result<Vec<u64>, ParseError> {
    let out: Vec<u64> = args
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| ParseError::GroupSpec(spec.to_string())))
        .collect::<Result<_, _>>()?;
    if out.len() != count {
        return Err(ParseError::GroupSpec(spec.to_string()));
    }
    Ok(out)
}

/// Named constructions (`cyclic:n`, `dihedral:p^m`, `sym:n`,
/// `extraspecial:l,m`, `semidirect:l,m,q`) or permutation generators in
/// cycle notation, `"(1 2 3)(4 5), (1 2)"`. Generators act on
/// `max(largest point, min_degree)` points.
pub fn parse_group(spec: &str, min_degree: usize, limits: &Limits) -> Result<AnyGroup, ParseError> {
    let s = spec.trim();
    let bad = || ParseError::GroupSpec(spec.to_string());
    if s.starts_with('(') {
        return parse_generators(s, min_degree, limits);
    }
    let (name, args) = s.split_once(':').ok_or_else(bad)?;
    let group = match name.trim() {
        "cyclic" => AnyGroup::Permutation(cyclic(nums(spec, args, 1)?[0] as usize, limits)?),
        "sym" => AnyGroup::Permutation(symmetric(nums(spec, args, 1)?[0] as usize, limits)?),
        "dihedral" => {
            let (p, m) = parse_field_spec(args).map_err(|_| bad())?;
            AnyGroup::Dihedral(dihedral(p, m, limits)?)
        }
        "extraspecial" => {
            let v = nums(spec, args, 2)?;
            AnyGroup::ExtraSpecial(extra_special(v[0], v[1] as usize, limits)?)
        }
        "semidirect" => {
            let v = nums(spec, args, 3)?;
            let e = extra_special(v[0], v[1] as usize, limits)?;
            let w = heisenberg_module(v[0], v[1] as usize, v[2], limits)?;
            AnyGroup::Semidirect(semidirect(w, &e, limits)?)
        }
        _ => return Err(bad()),
    };
    Ok(group)
}

fn parse_generators(s: &str, min_degree: usize, limits: &Limits) -> Result<AnyGroup, ParseError> {
    let bad = || ParseError::GroupSpec(s.to_string());
    let mut gens: Vec<Vec<Vec<u32>>> = Vec::new();
    for part in s.split(',') {
        let mut cycles = Vec::new();
        let mut rest = part.trim();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let (inner, tail) = body.split_once(')').ok_or_else(bad)?;
            let cycle: Vec<u32> =
                inner.split_whitespace().map(|x| x.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = tail.trim_start();
        }
        gens.push(cycles);
    }
    let largest = gens.iter().flatten().flatten().copied().max().unwrap_or(1) as usize;
    let n = largest.max(min_degree).max(1);
    let perms = gens
        .iter()
        .map(|cycles| {
            let refs: Vec<&[u32]> = cycles.iter().map(Vec::as_slice).collect();
            Permutation::from_cycles(n, &refs)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let g = tchebff_core::group::close_group(&SymmetricUniverse::new(n), perms, limits.group_cap)?;
    Ok(AnyGroup::Permutation(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        tchebff_core::field::make_field(p, 1, 0).unwrap()
    }

    #[test]
    fn field_specs() {
        assert_eq!(parse_field_spec("7").unwrap(), (7, 1));
        assert_eq!(parse_field_spec(" 3^2 ").unwrap(), (3, 2));
        assert!(parse_field_spec("x").is_err());
        assert!(parse_field("4", 0, &Limits::default()).is_err());
    }

    #[test]
    fn running_examples() {
        let p = parse_poly("Y^2 - Y - (T^3 - T)", &f(3)).unwrap();
        assert_eq!(p.display(), "Y^2 + 2*Y + 2*T^3 + T");
        assert_eq!(parse_poly("Y^3 - T", &f(7)).unwrap().display(), "Y^3 + 6*T");
        assert_eq!(parse_poly("T^2 + 1", &f(7)).unwrap_err(), ParseError::NoY);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_poly("Y^2 + * T", &f(5)).unwrap_err();
        assert_eq!(e, ParseError::Syntax { pos: 6, message: "unexpected '*'".into() });
        assert!(matches!(parse_poly("(Y + T", &f(5)), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_poly("Y T", &f(5)), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("Y^", &f(5)), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("Y^99999", &f(5)), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn integers_reduce() {
        let p = parse_poly("12345678901234567890123*Y", &f(7)).unwrap();
        assert_eq!(p.display(), "3*Y");
        assert_eq!(parse_poly("-Y + 7", &f(7)).unwrap().display(), "6*Y");
    }

    #[test]
    fn groups() {
        let lim = Limits::default();
        assert_eq!(parse_group("cyclic:2", 0, &lim).unwrap().order(), 2);
        assert_eq!(parse_group("dihedral:3^2", 0, &lim).unwrap().order(), 18);
        assert_eq!(parse_group("dihedral:5", 0, &lim).unwrap().order(), 10);
        assert_eq!(parse_group("sym:3", 0, &lim).unwrap().order(), 6);
        assert_eq!(parse_group("extraspecial:3,1", 0, &lim).unwrap().order(), 27);
        assert_eq!(parse_group("semidirect:3,1,7", 0, &lim).unwrap().order(), 9261);
        let g = parse_group("(1 2 3)(4 5), (1 2)", 0, &lim).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.permutation_degree(), Some(5));
        assert_eq!(parse_group("(1 2)", 3, &lim).unwrap().permutation_degree(), Some(3));
        assert!(parse_group("cyclic", 0, &lim).is_err());
        assert!(parse_group("(1 2", 0, &lim).is_err());
        assert!(parse_group("semidirect:3,1,5", 0, &lim).is_err());
    }

    #[test]
    fn points() {
        let f9 = tchebff_core::field::make_field(3, 2, 0).unwrap();
        assert_eq!(parse_point("inf", &f9).unwrap(), None);
        assert_eq!(parse_point("(1,2)", &f9).unwrap(), Some(f9.from_coefficients(&[1, 2])));
        assert_eq!(parse_point("2", &f9).unwrap(), Some(f9.from_int(2)));
        assert!(parse_point("(1,2,0)", &f9).is_err());
        assert!(parse_point("3", &f9).is_err());
    }
}
