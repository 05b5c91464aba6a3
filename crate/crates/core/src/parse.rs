//! Text grammar for polynomials, twisted 1-forms, vector fields, ideals and
//! matrices. Variables are x, y, z, w with aliases x0..x3 / x_0..x_3;
//! coefficients are integers or rationals p/q; `^` is exponentiation; `*` is
//! optional between factors; whitespace is ignored.

use crate::error::{Error, Result};
use crate::monomial::NVARS;
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    /// dx_i in form expressions
    Diff(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    forms: bool,
    toks: Vec<(Tok, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str, forms: bool) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
            forms,
            toks: Vec::new(),
        };
        lx.lex()?;
        Ok(lx.toks)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn lex(&mut self) -> Result<()> {
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    self.toks.push((Tok::Plus, start));
                    self.pos += 1;
                }
                b'-' => {
                    self.toks.push((Tok::Minus, start));
                    self.pos += 1;
                }
                b'*' => {
                    self.toks.push((Tok::Star, start));
                    self.pos += 1;
                }
                b'/' => {
                    self.toks.push((Tok::Slash, start));
                    self.pos += 1;
                }
                b'^' => {
                    self.toks.push((Tok::Caret, start));
                    self.pos += 1;
                }
                b'(' => {
                    self.toks.push((Tok::LParen, start));
                    self.pos += 1;
                }
                b')' => {
                    self.toks.push((Tok::RParen, start));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let mut end = self.pos;
                    while end < self.src.len() && self.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                    let n: BigInt = text.parse().unwrap();
                    self.toks.push((Tok::Num(n), start));
                    self.pos = end;
                }
                b'd' if self.forms => {
                    self.pos += 1;
                    let v = self.expect_var_letter()?;
                    self.toks.push((Tok::Diff(v), start));
                }
                b'x' => {
                    self.pos += 1;
                    // alias forms x0..x3 and x_0..x_3
                    let mut idx_pos = self.pos;
                    if idx_pos < self.src.len() && self.src[idx_pos] == b'_' {
                        idx_pos += 1;
                    }
                    if idx_pos < self.src.len() && (b'0'..=b'3').contains(&self.src[idx_pos]) {
                        let v = (self.src[idx_pos] - b'0') as usize;
                        self.pos = idx_pos + 1;
                        self.toks.push((Tok::Var(v), start));
                    } else if idx_pos > self.pos {
                        return Err(self.err("expected digit 0..3 after `x_`"));
                    } else {
                        self.toks.push((Tok::Var(0), start));
                    }
                    self.reject_trailing_digit()?;
                }
                b'y' => {
                    self.pos += 1;
                    self.toks.push((Tok::Var(1), start));
                    self.reject_trailing_digit()?;
                }
                b'z' => {
                    self.pos += 1;
                    self.toks.push((Tok::Var(2), start));
                    self.reject_trailing_digit()?;
                }
                b'w' => {
                    self.pos += 1;
                    self.toks.push((Tok::Var(3), start));
                    self.reject_trailing_digit()?;
                }
                _ => return Err(self.err(&format!("unexpected character `{}`", c as char))),
            }
        }
        Ok(())
    }

    fn expect_var_letter(&mut self) -> Result<usize> {
        if self.pos >= self.src.len() {
            return Err(self.err("expected variable after `d`"));
        }
        let v = match self.src[self.pos] {
            b'x' => 0,
            b'y' => 1,
            b'z' => 2,
            b'w' => 3,
            _ => return Err(self.err("expected one of x, y, z, w after `d`")),
        };
        self.pos += 1;
        Ok(v)
    }

    /// `y2` is almost always a typo for `y^2`; fail loudly instead of reading
    /// it as an implicit product with a number.
    fn reject_trailing_digit(&mut self) -> Result<()> {
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            return Err(self.err("digit directly after a variable; write `^` for powers"));
        }
        Ok(())
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

/// A parsed term of a form expression: polynomial in the ring variables times
/// at most one differential.
type FormPoly = Vec<(Poly, Option<usize>)>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    // expression := ['+'|'-'] term (('+'|'-') term)*
    fn expression(&mut self) -> Result<FormPoly> {
        let mut sign = Rat::from_integer(1.into());
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -sign;
                self.pos += 1;
            }
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term(sign)?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term(rat_int(1))?;
                    acc.extend(t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term(rat_int(-1))?;
                    acc.extend(t);
                }
                None => return Ok(acc),
                Some(Tok::RParen) => return Ok(acc),
                _ => return Err(self.err("expected `+`, `-`, or end of expression")),
            }
        }
    }

    // term := factor (['*'] factor)*
    fn term(&mut self, sign: Rat) -> Result<FormPoly> {
        let mut poly = Poly::constant(sign);
        let mut diff: Option<usize> = None;
        loop {
            match self.peek() {
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::Diff(_)) | Some(Tok::LParen) => {
                    let (f, d) = self.factor()?;
                    if let Some(d) = d {
                        if diff.is_some() {
                            return Err(self.err("two differentials in one term"));
                        }
                        diff = Some(d);
                    }
                    poly = poly.mul(&f);
                }
                Some(Tok::Star) => {
                    self.pos += 1;
                    let (f, d) = self.factor()?;
                    if let Some(d) = d {
                        if diff.is_some() {
                            return Err(self.err("two differentials in one term"));
                        }
                        diff = Some(d);
                    }
                    poly = poly.mul(&f);
                }
                _ => break,
            }
        }
        Ok(vec![(poly, diff)])
    }

    // factor := number ['/' number] | var ['^' number] | '(' expr ')' ['^' number] | diff
    fn factor(&mut self) -> Result<(Poly, Option<usize>)> {
        match self.bump() {
            Some(Tok::Num(n)) => {
                let mut val = Rat::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return Err(self.err("zero denominator"));
                            }
                            val /= Rat::from_integer(d);
                        }
                        _ => return Err(self.err("expected denominator after `/`")),
                    }
                }
                Ok((Poly::constant(val), None))
            }
            Some(Tok::Var(v)) => {
                let e = self.optional_exponent()?;
                Ok((Poly::var(v).pow(e), None))
            }
            Some(Tok::Diff(v)) => Ok((Poly::one(), Some(v))),
            Some(Tok::LParen) => {
                let inner = self.expression()?;
                match self.bump() {
                    Some(Tok::RParen) => {}
                    _ => return Err(self.err("expected `)`")),
                }
                let e = self.optional_exponent()?;
                // differentials are not allowed inside exponentiated groups
                let has_diff = inner.iter().any(|(_, d)| d.is_some());
                if has_diff {
                    if e != 1 {
                        return Err(self.err("cannot exponentiate a differential"));
                    }
                    if inner.iter().filter(|(_, d)| d.is_some()).count() != inner.len() {
                        return Err(self.err("mixed differential and scalar terms in a group"));
                    }
                    if inner.len() == 1 {
                        return Ok((inner[0].0.clone(), inner[0].1));
                    }
                    return Err(self.err("grouped differentials must be a single term"));
                }
                let mut p = Poly::zero();
                for (f, _) in inner {
                    p = p.add(&f);
                }
                Ok((p.pow(e), None))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn optional_exponent(&mut self) -> Result<u32> {
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    Ok(e)
                }
                _ => Err(self.err("expected integer exponent after `^`")),
            }
        } else {
            Ok(1)
        }
    }
}

fn parse_internal(text: &str, forms: bool) -> Result<FormPoly> {
    let toks = Lexer::run(text, forms)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty expression".to_string(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expression()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let terms = parse_internal(text, false)?;
    let mut out = Poly::zero();
    for (f, _) in terms {
        out = out.add(&f);
    }
    Ok(out)
}

/// Parses a 1-form expression `A0 dx + A1 dy + A2 dz + A3 dw` into its
/// coefficient quadruple. Scalar terms without a differential are rejected.
pub fn parse_form_expr(text: &str) -> Result<[Poly; NVARS]> {
    let terms = parse_internal(text, true)?;
    let mut coeffs = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
    for (f, d) in terms {
        match d {
            Some(i) => coeffs[i] = coeffs[i].add(&f),
            None => {
                if !f.is_zero() {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "term without a differential in a 1-form expression".to_string(),
                    });
                }
            }
        }
    }
    Ok(coeffs)
}

fn strip_comments(content: &str) -> impl Iterator<Item = &str> {
    content
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Ideal file: one generator per line; `#` comments and blank lines ignored.
pub fn parse_ideal_file(content: &str) -> Result<Vec<Poly>> {
    strip_comments(content).map(parse_poly).collect()
}

fn parse_labeled_quadruple(content: &str, labels: [&str; NVARS]) -> Result<Option<[Poly; NVARS]>> {
    let mut coeffs: [Option<Poly>; NVARS] = [None, None, None, None];
    let mut any = false;
    for line in strip_comments(content) {
        let Some(colon) = line.find(':') else {
            if any {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("expected `{}:`-style line", labels[0]),
                });
            }
            return Ok(None);
        };
        let (label, rest) = line.split_at(colon);
        let label = label.trim();
        let Some(idx) = labels.iter().position(|l| *l == label) else {
            if any {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown label `{label}`"),
                });
            }
            return Ok(None);
        };
        any = true;
        if coeffs[idx].is_some() {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("duplicate label `{label}`"),
            });
        }
        coeffs[idx] = Some(parse_poly(&rest[1..])?);
    }
    if !any {
        return Ok(None);
    }
    let mut out = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
    for (i, c) in coeffs.into_iter().enumerate() {
        out[i] = c.ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("missing label `{}`", labels[i]),
        })?;
    }
    Ok(Some(out))
}

/// Form file: either four `A0:`..`A3:` lines or a single dx/dy/dz/dw expression.
pub fn parse_form_file(content: &str) -> Result<[Poly; NVARS]> {
    if let Some(q) = parse_labeled_quadruple(content, ["A0", "A1", "A2", "A3"])? {
        return Ok(q);
    }
    let joined: String = strip_comments(content).collect::<Vec<_>>().join(" ");
    parse_form_expr(&joined)
}

/// Vector field file: four `F0:`..`F3:` lines.
pub fn parse_vf_file(content: &str) -> Result<[Poly; NVARS]> {
    parse_labeled_quadruple(content, ["F0", "F1", "F2", "F3"])?.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected F0:..F3: lines".to_string(),
    })
}

/// Matrix file: 4 lines of 4 whitespace-separated rationals.
pub fn parse_matrix_file(content: &str) -> Result<[[Rat; NVARS]; NVARS]> {
    let rows: Vec<&str> = strip_comments(content).collect();
    if rows.len() != NVARS {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected 4 matrix rows, found {}", rows.len()),
        });
    }
    let mut out: [[Rat; NVARS]; NVARS] = Default::default();
    for (i, row) in rows.iter().enumerate() {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != NVARS {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("row {i} has {} entries, expected 4", entries.len()),
            });
        }
        for (j, e) in entries.iter().enumerate() {
            let p = parse_poly(e)?;
            if p.is_zero() {
                out[i][j] = Rat::zero();
            } else if p.num_terms() == 1 && p.terms()[0].0.is_one() {
                out[i][j] = p.terms()[0].1.clone();
            } else {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("matrix entry `{e}` is not a rational number"),
                });
            }
        }
    }
    Ok(out)
}
