//! Parser for polynomials written in TeX-like notation, e.g.
//! `18\cdot \Theta_6\cdot \Theta_{11}-43\cdot \Theta_1^3` or
//! `(Y_1-Y_{10})(Y_8-Y_9)`.
//!
//! Layout tokens (`\cr`, `\break`, `&`, `\quad`, `$`) are skipped. A
//! subscript of the form `{14^2}` is read as the variable with index 14
//! squared, which is how one printed generator writes `Y_{14}^2`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Which symbol names the variables and how its subscripts are numbered.
#[derive(Clone, Debug)]
pub struct VarScheme {
    /// Name as written, without the underscore: `"Y"`, `"\\Theta"`, `"F"`.
    pub symbol: String,
    pub count: usize,
    /// Smallest subscript; subscript `first` maps to variable 0.
    pub first: usize,
}

impl VarScheme {
    pub fn new(symbol: &str, count: usize, first: usize) -> Self {
        VarScheme {
            symbol: symbol.to_string(),
            count,
            first,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize, u32),
    Plus,
    Minus,
    Times,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
}

const SKIPPED: &[&str] = &[
    "\\cr", "\\break", "\\qquad", "\\quad", "\\left", "\\right", "\\,", "\\;", "\\!",
];

fn tokenize(src: &str, scheme: &VarScheme) -> Result<Vec<Tok>> {
    let b = src.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let err = |i: usize, what: &str| Error::Parse(format!("{what} at byte {i} in {src:?}"));
    let read_digits = |i: &mut usize| -> Option<u64> {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        (start != *i).then(|| src[start..*i].parse().expect("digits"))
    };
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() || c == b'$' || c == b'&' {
            i += 1;
            continue;
        }
        if let Some(s) = SKIPPED.iter().find(|s| src[i..].starts_with(**s)) {
            i += s.len();
            continue;
        }
        if src[i..].starts_with("\\cdot") {
            i += 5;
            out.push(Tok::Times);
            continue;
        }
        if src[i..].starts_with(&scheme.symbol) {
            i += scheme.symbol.len();
            while i < b.len() && b[i] == b' ' {
                i += 1;
            }
            if i >= b.len() || b[i] != b'_' {
                return Err(err(i, "expected subscript"));
            }
            i += 1;
            let (index, inner_exp) = if b.get(i) == Some(&b'{') {
                i += 1;
                let idx = read_digits(&mut i).ok_or_else(|| err(i, "expected index"))?;
                let mut e = 1;
                if b.get(i) == Some(&b'^') {
                    i += 1;
                    e = read_digits(&mut i).ok_or_else(|| err(i, "expected exponent"))? as u32;
                }
                if b.get(i) != Some(&b'}') {
                    return Err(err(i, "unclosed subscript"));
                }
                i += 1;
                (idx, e)
            } else if i < b.len() && b[i].is_ascii_digit() {
                i += 1;
                ((b[i - 1] - b'0') as u64, 1)
            } else {
                return Err(err(i, "bad subscript"));
            };
            let idx = index as usize;
            if idx < scheme.first || idx - scheme.first >= scheme.count {
                return Err(err(i, &format!("index {idx} out of range")));
            }
            out.push(Tok::Var(idx - scheme.first, inner_exp));
            continue;
        }
        match c {
            b'0'..=b'9' => {
                let v = read_digits(&mut i).expect("digit");
                out.push(Tok::Num(BigInt::from(v)));
                continue;
            }
            b'+' => out.push(Tok::Plus),
            b'-' => out.push(Tok::Minus),
            b'*' => out.push(Tok::Times),
            b'^' => out.push(Tok::Caret),
            b'(' => out.push(Tok::LParen),
            b')' => out.push(Tok::RParen),
            b'{' => out.push(Tok::LBrace),
            b'}' => out.push(Tok::RBrace),
            b',' => out.push(Tok::Comma),
            _ => return Err(err(i, &format!("unexpected character {:?}", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn fail<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at token {}", self.pos)))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = IntPoly::zero(self.nvars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    1
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Times) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(..)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let braced = self.peek() == Some(&Tok::LBrace);
        if braced {
            self.pos += 1;
        }
        let e = match self.peek() {
            Some(Tok::Num(n)) => u32::try_from(n).or_else(|_| self.fail("exponent too large"))?,
            _ => return self.fail("expected exponent"),
        };
        self.pos += 1;
        if braced {
            if self.peek() != Some(&Tok::RBrace) {
                return self.fail("expected }");
            }
            self.pos += 1;
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                IntPoly::constant(self.nvars, n)
            }
            Some(Tok::Var(i, inner)) => {
                self.pos += 1;
                IntPoly::var(self.nvars, i).pow(inner)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected )");
                }
                self.pos += 1;
                e
            }
            _ => return self.fail("expected factor"),
        };
        let e = self.exponent()?;
        Ok(base.pow(e))
    }
}

/// Parses a single polynomial.
pub fn parse_poly(src: &str, scheme: &VarScheme) -> Result<IntPoly> {
    let mut polys = parse_poly_list(src, scheme)?;
    if polys.len() != 1 {
        return Err(Error::Parse(format!("expected one polynomial, found {}", polys.len())));
    }
    Ok(polys.pop().expect("one"))
}

/// Parses a comma-separated list, optionally wrapped in one pair of parentheses.
/// Empty fields are skipped.
pub fn parse_poly_list(src: &str, scheme: &VarScheme) -> Result<Vec<IntPoly>> {
    let toks = tokenize(src, scheme)?;
    let mut out = Vec::new();
    for field in split_top_level(&toks)? {
        if field.is_empty() {
            continue;
        }
        let mut p = Parser {
            toks: field,
            pos: 0,
            nvars: scheme.count,
        };
        let poly = p.expr()?;
        if p.pos != field.len() {
            return p.fail("trailing input");
        }
        out.push(poly);
    }
    Ok(out)
}

fn split_top_level(toks: &[Tok]) -> Result<Vec<&[Tok]>> {
    let has_comma = toks.contains(&Tok::Comma);
    let inner = if has_comma && toks.first() == Some(&Tok::LParen) && toks.last() == Some(&Tok::RParen) {
        &toks[1..toks.len() - 1]
    } else {
        toks
    };
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (k, t) in inner.iter().enumerate() {
        match t {
            Tok::LParen => depth += 1,
            Tok::RParen => depth -= 1,
            Tok::Comma if depth == 0 => {
                out.push(&inner[start..k]);
                start = k + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse("unbalanced parentheses".into()));
        }
    }
    out.push(&inner[start..]);
    Ok(out)
}

/// Splits text of the form `&J_1=... &J_{2}=...` into `(1, "..."), (2, "...")`
/// using the label symbol (`"J"`); text before the first label is dropped.
pub fn split_labelled<'a>(src: &'a str, label: &str) -> Vec<(usize, &'a str)> {
    split_labelled_by(src, label, b'=')
}

/// As [`split_labelled`] with another separator after the label, e.g. `&`
/// for table rows `A_1&[..]`.
pub fn split_labelled_by<'a>(src: &'a str, label: &str, sep: u8) -> Vec<(usize, &'a str)> {
    let b = src.as_bytes();
    let pat = format!("{label}_");
    let mut marks: Vec<(usize, usize, usize)> = Vec::new();
    let mut from = 0;
    while let Some(off) = src[from..].find(&pat) {
        let start = from + off;
        let mut i = start + pat.len();
        let braced = b.get(i) == Some(&b'{');
        if braced {
            i += 1;
        }
        let ds = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let digits = &src[ds..i];
        if braced && b.get(i) == Some(&b'}') {
            i += 1;
        }
        while i < b.len() && b[i] == b' ' {
            i += 1;
        }
        if !digits.is_empty() && b.get(i) == Some(&sep) {
            marks.push((start, i + 1, digits.parse().expect("digits")));
        }
        from = i.max(start + 1);
    }
    marks
        .iter()
        .enumerate()
        .map(|(k, &(_, body, n))| {
            let end = marks.get(k + 1).map_or(src.len(), |m| m.0);
            (n, &src[body..end])
        })
        .collect()
}

/// Coefficients of a linear form, or `None` if the polynomial is not linear homogeneous.
pub fn linear_coefficients(p: &IntPoly) -> Option<Vec<BigInt>> {
    let mut v = vec![BigInt::zero(); p.nvars()];
    for (e, c) in p.terms() {
        let ones: Vec<usize> = e.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, _)| i).collect();
        if ones.len() != 1 || e[ones[0]] != 1 {
            return None;
        }
        v[ones[0]] = c.clone();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> VarScheme {
        VarScheme::new("Y", 14, 1)
    }

    #[test]
    fn parses_quadrics_with_line_breaks() {
        let p = parse_poly("Y_{9}Y_{13}-Y_{8}Y_{14}-\\cr&\\quad Y_{14^2}", &y()).unwrap();
        assert_eq!(p.len(), 3);
        let mut e = vec![0u8; 14];
        e[13] = 2;
        assert_eq!(p.coefficient(&e), BigInt::from(-1));
    }

    #[test]
    fn parses_theta_products() {
        let s = VarScheme::new("\\Theta", 15, 1);
        let p = parse_poly("18\\cdot \\Theta_6\\cdot \\Theta_{11}-43\\cdot \\Theta_1^3", &s).unwrap();
        let mut e = vec![0u8; 15];
        e[0] = 3;
        assert_eq!(p.coefficient(&e), BigInt::from(-43));
        assert_eq!(p.total_degree(), Some(3));
    }

    #[test]
    fn parses_products_of_sums() {
        let p = parse_poly("(Y_1-Y_2)(Y_1+Y_2)", &y()).unwrap();
        let q = parse_poly("Y_1^2-Y_2^{2}", &y()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parses_ideal_lists() {
        let l = parse_poly_list("(Y_1,Y_2,Y_3-Y_{11}+Y_{14},,-Y_{14}+Y_{13})", &y()).unwrap();
        assert_eq!(l.len(), 4);
        let c = linear_coefficients(&l[3]).unwrap();
        assert_eq!(c[12], BigInt::from(1));
        assert_eq!(c[13], BigInt::from(-1));
    }

    #[test]
    fn zero_based_scheme() {
        let s = VarScheme::new("F", 8, 0);
        let p = parse_poly("F_0^2+F_7^2", &s).unwrap();
        assert_eq!(p.nvars(), 8);
        assert!(parse_poly("F_8", &s).is_err());
    }

    #[test]
    fn splits_labelled_entries() {
        let src = "&J_1=Y_1-Y_2\\cr\n&J_{10}=Y_3\\cr&\\quad +Y_4\\cr";
        let parts = split_labelled(src, "J");
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].0, 10);
        let p = parse_poly(parts[1].1, &y()).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("Y_1 + ?", &y()).is_err());
        assert!(parse_poly("(Y_1", &y()).is_err());
    }
}
