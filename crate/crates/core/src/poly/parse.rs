//! Text syntax for polynomials: rational coefficients, `+ - * ^`,
//! parentheses and juxtaposition, e.g. `t^2*v - 3/2*v^3` or `(t - v)(t + v)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{HPoly, UPoly, Vars, Q};
use crate::error::{Error, Result};

/// Sparse polynomial in two variables keyed by `(exp_x, exp_y)`.
pub type Sparse = BTreeMap<(usize, usize), Q>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexed {
    toks: Vec<(Tok, usize, usize)>,
    end: (usize, usize),
}

fn lex(text: &str, names: (&str, &str)) -> Result<Lexed> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let here = (line, col);
        let mut adv = 1;
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                toks.push((Tok::Num(s.parse().expect("digits")), here.0, here.1));
                adv = j - i;
            }
            '+' => toks.push((Tok::Plus, line, col)),
            '-' | '\u{2212}' => toks.push((Tok::Minus, line, col)),
            '*' => toks.push((Tok::Star, line, col)),
            '/' => toks.push((Tok::Slash, line, col)),
            '^' => toks.push((Tok::Caret, line, col)),
            '(' => toks.push((Tok::LParen, line, col)),
            ')' => toks.push((Tok::RParen, line, col)),
            c if c.is_alphabetic() => {
                let s = c.to_string();
                if s == names.0 {
                    toks.push((Tok::Var(0), line, col));
                } else if s == names.1 {
                    toks.push((Tok::Var(1), line, col));
                } else {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        message: format!(
                            "unknown variable '{c}' (expected {} or {})",
                            names.0, names.1
                        ),
                    });
                }
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character '{c}'"),
                })
            }
        }
        i += adv;
        col += adv;
    }
    Ok(Lexed {
        toks,
        end: (line, col),
    })
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn add(a: &mut Sparse, b: &Sparse, sign: i64) {
    for (k, v) in b {
        let e = a.entry(*k).or_insert_with(Q::zero);
        if sign > 0 {
            *e += v;
        } else {
            *e -= v;
        }
    }
    a.retain(|_, v| !v.is_zero());
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for ((i, j), x) in a {
        for ((k, l), y) in b {
            *out.entry((i + k, j + l)).or_insert_with(Q::zero) += x * y;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn constant(c: Q) -> Sparse {
    let mut s = Sparse::new();
    if !c.is_zero() {
        s.insert((0, 0), c);
    }
    s
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let (line, column) = match self.toks.get(self.pos) {
            Some((_, l, c)) => (*l, *c),
            None => self.end,
        };
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = Sparse::new();
        let mut sign = 1;
        if let Some(Tok::Plus | Tok::Minus) = self.peek() {
            if self.peek() == Some(&Tok::Minus) {
                sign = -1;
            }
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            add(&mut acc, &t, sign);
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen) => {
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.toks.get(self.pos) {
                Some((Tok::Num(n), _, _)) => {
                    n.to_usize().ok_or_else(|| self.err("exponent too large"))?
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            };
            self.pos += 1;
            let mut acc = constant(Q::one());
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Num(d)) => d.clone(),
                        _ => return Err(self.err("expected an integer denominator")),
                    };
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    self.pos += 1;
                    return Ok(constant(Q::new(n, d)));
                }
                Ok(constant(Q::from_integer(n)))
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                let mut s = Sparse::new();
                s.insert(if k == 0 { (1, 0) } else { (0, 1) }, Q::one());
                Ok(s)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                let f = self.factor()?;
                Ok(mul(&constant(-Q::one()), &f))
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse into a sparse polynomial in the given variable pair.
pub fn parse_sparse(text: &str, vars: Vars) -> Result<Sparse> {
    let lexed = lex(text, vars.names())?;
    if lexed.toks.is_empty() {
        return Err(Error::Parse {
            line: lexed.end.0,
            column: lexed.end.1,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        toks: lexed.toks,
        pos: 0,
        end: lexed.end,
    };
    let s = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(s)
}

/// Parse a binary form. `degree` fixes the degree of a zero form and is
/// checked against nonzero input.
pub fn parse_hpoly(text: &str, vars: Vars, degree: Option<usize>) -> Result<HPoly> {
    let s = parse_sparse(text, vars)?;
    let degs: Vec<usize> = s.keys().map(|(i, j)| i + j).collect();
    let d = match (degs.first(), degree) {
        (None, d) => return Ok(HPoly::zero(d.unwrap_or(0))),
        (Some(&d), _) => d,
    };
    if degs.iter().any(|&e| e != d) {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("'{text}' is not homogeneous"),
        });
    }
    if let Some(want) = degree {
        if want != d {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("'{text}' has degree {d}, expected {want}"),
            });
        }
    }
    let mut c = vec![Q::zero(); d + 1];
    for ((i, _), v) in s {
        c[i] = v;
    }
    HPoly::new(d, c)
}

/// Parse a binary form, accepting either `(t,v)` or `(s,u)` names.
pub fn parse_hpoly_any(text: &str, degree: Option<usize>) -> Result<HPoly> {
    if text.contains(['s', 'u']) && !text.contains(['t', 'v']) {
        parse_hpoly(text, Vars::SU, degree)
    } else {
        parse_hpoly(text, Vars::TV, degree)
    }
}

/// Parse a univariate polynomial in `var`.
pub fn parse_upoly(text: &str, var: &str) -> Result<UPoly> {
    let lexed = lex(text, (var, "\u{0}"))?;
    let mut p = Parser {
        toks: lexed.toks,
        pos: 0,
        end: lexed.end,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty polynomial"));
    }
    let s = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    let n = s.keys().map(|(i, _)| *i).max().unwrap_or(0);
    let mut c = vec![Q::zero(); n + 1];
    for ((i, _), v) in s {
        c[i] = v;
    }
    Ok(UPoly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qf;

    #[test]
    fn parses_forms() {
        let f = parse_hpoly("t^2*v - 3/2*v^3", Vars::TV, None).unwrap();
        assert_eq!(f.coeffs(), &[qf(-3, 2), Q::zero(), Q::one(), Q::zero()]);
        let g = parse_hpoly("(t - v)(t + v)", Vars::TV, None).unwrap();
        assert_eq!(g, HPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(parse_hpoly("0", Vars::TV, Some(3)).unwrap(), HPoly::zero(3));
        assert_eq!(
            parse_hpoly_any("s^2", None).unwrap(),
            HPoly::from_ints(&[0, 0, 1])
        );
    }

    #[test]
    fn round_trip_display() {
        let f = HPoly::from_coeffs(vec![qf(1, 3), Q::zero(), qf(-5, 2), Q::one()]);
        let text = f.fmt_vars(Vars::SU);
        assert_eq!(parse_hpoly(&text, Vars::SU, Some(3)).unwrap(), f);
    }

    #[test]
    fn errors_carry_position() {
        match parse_hpoly("t^2 +\n  v*x", Vars::TV, None) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_hpoly("t^2 + v", Vars::TV, None).is_err());
        assert!(parse_hpoly("(t", Vars::TV, None).is_err());
    }
}
