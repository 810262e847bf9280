//! Text syntax for polynomials and transfer matrices.
//!
//! Entries are rational expressions; `,` separates columns and `;` rows.
//! Decimal literals (`0.2`, `1e-7`) are read as exact rationals. `#` starts
//! a comment running to the end of the line.

use linf_core::param::ParamTransferMatrix;
use linf_core::poly::{BiPoly, Var};
use linf_core::transfer::{RationalFunction, TransferMatrix};
use linf_core::{BigInt, BigRational, Error, Result};
use num_traits::{One, Pow, Zero};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let lit: String = chars[start..i].iter().collect();
            col += i - start;
            let v = decimal_literal(&lit).ok_or_else(|| perr(l0, c0, format!("bad number {lit:?}")))?;
            out.push(Token { tok: Tok::Num(v), line: l0, column: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, column: c0 });
            continue;
        }
        if "+-*/^(),;".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line: l0, column: c0 });
            i += 1;
            col += 1;
            continue;
        }
        return Err(perr(l0, c0, format!("unexpected character {c:?}")));
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

/// `123`, `0.25`, `1.5e-3` as an exact rational.
fn decimal_literal(lit: &str) -> Option<BigRational> {
    let (mant, exp) = match lit.find(['e', 'E']) {
        Some(k) => (&lit[..k], lit[k + 1..].parse::<i64>().ok()?),
        None => (lit, 0),
    };
    let (int, frac) = match mant.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mant, ""),
    };
    if int.is_empty() && frac.is_empty() || frac.contains('.') {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let e = exp.checked_sub(frac.len() as i64)?;
    if e.unsigned_abs() > 100_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let p = Pow::pow(&ten, e.unsigned_abs());
    Some(if e >= 0 {
        BigRational::from_integer(digits * p)
    } else {
        BigRational::new(digits, p)
    })
}

/// A fraction of two polynomials in the two allowed variables.
#[derive(Clone, Debug)]
struct Frac {
    num: BiPoly,
    den: BiPoly,
}

impl Frac {
    fn poly(p: BiPoly) -> Self {
        let one = BiPoly::constant(p.vars()[0].clone(), p.vars()[1].clone(), BigRational::one());
        Frac { num: p, den: one }
    }

    fn add(&self, o: &Frac) -> Frac {
        if self.den == o.den {
            return Frac { num: &self.num + &o.num, den: self.den.clone() };
        }
        Frac { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    fn neg(&self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    fn inv(&self) -> Option<Frac> {
        (!self.num.is_zero()).then(|| Frac { num: self.den.clone(), den: self.num.clone() })
    }

    fn pow(&self, k: i64) -> Option<Frac> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let one = Frac::poly(BiPoly::constant(
            self.num.vars()[0].clone(),
            self.num.vars()[1].clone(),
            BigRational::one(),
        ));
        Some((0..k.unsigned_abs()).fold(one, |acc, _| acc.mul(&base)))
    }
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a [Var; 2],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        perr(t.line, t.column, message)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.at_sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.err_here(format!("expected {c:?}")))
        }
    }

    fn constant(&self, c: BigRational) -> Frac {
        Frac::poly(BiPoly::constant(self.vars[0].clone(), self.vars[1].clone(), c))
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = if self.at_sym('-') {
            self.next();
            self.term()?.neg()
        } else {
            if self.at_sym('+') {
                self.next();
            }
            self.term()?
        };
        loop {
            if self.at_sym('+') {
                self.next();
                acc = acc.add(&self.term()?);
            } else if self.at_sym('-') {
                self.next();
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.factor()?;
        loop {
            if self.at_sym('*') {
                self.next();
                acc = acc.mul(&self.factor()?);
            } else if self.at_sym('/') {
                self.next();
                let t = self.peek().clone();
                let d = self.factor()?;
                acc = acc.mul(&d.inv().ok_or_else(|| perr(t.line, t.column, "division by zero"))?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Frac> {
        if self.at_sym('-') {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if !self.at_sym('^') {
            return Ok(base);
        }
        self.next();
        let neg = if self.at_sym('-') {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let k = match &t.tok {
            Tok::Num(r) if r.is_integer() => r.to_integer().to_string().parse::<i64>().ok(),
            _ => None,
        }
        .filter(|k| *k <= 10_000)
        .ok_or_else(|| perr(t.line, t.column, "exponent must be a small integer"))?;
        base.pow(if neg { -k } else { k })
            .ok_or_else(|| perr(t.line, t.column, "negative power of zero"))
    }

    fn base(&mut self) -> Result<Frac> {
        let t = self.next();
        match t.tok {
            Tok::Num(r) => Ok(self.constant(r)),
            Tok::Ident(name) => {
                let v = Var::new(&name);
                if self.vars.contains(&v) {
                    Ok(Frac::poly(BiPoly::variable(self.vars[0].clone(), self.vars[1].clone(), &v)))
                } else {
                    Err(perr(t.line, t.column, format!("unknown variable {name:?}")))
                }
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::End => Err(perr(t.line, t.column, "unexpected end of input")),
            Tok::Sym(c) => Err(perr(t.line, t.column, format!("unexpected {c:?}"))),
        }
    }

    /// Rows of entries, each entry with the position it started at.
    fn matrix(&mut self) -> Result<Vec<Vec<(Frac, usize, usize)>>> {
        let mut rows = Vec::new();
        loop {
            let mut row = Vec::new();
            loop {
                let t = self.peek().clone();
                row.push((self.expr()?, t.line, t.column));
                if self.at_sym(',') {
                    self.next();
                } else {
                    break;
                }
            }
            rows.push(row);
            if self.at_sym(';') {
                self.next();
                if self.peek().tok == Tok::End {
                    break;
                }
            } else {
                break;
            }
        }
        if self.peek().tok != Tok::End {
            return Err(self.err_here("expected ',', ';' or end of input"));
        }
        let cols = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            let (_, line, column) = &bad[0];
            return Err(perr(*line, *column, format!("row has {} entries, expected {cols}", bad.len())));
        }
        Ok(rows)
    }
}

fn parse_with<T>(text: &str, vars: &[Var; 2], f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Err(perr(1, 1, "empty input"));
    }
    let mut p = Parser { toks, pos: 0, vars };
    f(&mut p)
}

/// Placeholder second variable when only `s` is in play; not a valid identifier.
fn no_param() -> Var {
    Var::new("'")
}

/// Polynomial in `x` and `y`; any division must leave a constant denominator.
pub fn parse_polynomial(text: &str, x: &Var, y: &Var) -> Result<BiPoly> {
    let vars = [x.clone(), y.clone()];
    parse_with(text, &vars, |p| {
        let e = p.expr()?;
        if p.peek().tok != Tok::End {
            return Err(p.err_here("trailing input"));
        }
        if e.den.total_degree() != Some(0) {
            return Err(perr(1, 1, "not a polynomial"));
        }
        let c = e.den.terms().values().next().cloned().unwrap_or_else(BigRational::zero);
        Ok(e.num.scale(&c.recip()))
    })
}

/// A transfer matrix in `s`.
pub fn parse_transfer_matrix(text: &str) -> Result<TransferMatrix> {
    let (s, p) = (Var::s(), no_param());
    let rows = parse_with(text, &[s.clone(), p], |p| p.matrix())?;
    let mut out = Vec::new();
    for row in rows {
        let mut r = Vec::new();
        for (f, line, column) in row {
            let num = f.num.eval_partial(&no_param(), &BigRational::zero()).map_err(|e| perr(line, column, e.to_string()))?;
            let den = f.den.eval_partial(&no_param(), &BigRational::zero()).map_err(|e| perr(line, column, e.to_string()))?;
            let rf = RationalFunction::new(&num.with_var(s.clone()), &den.with_var(s.clone()))
                .map_err(|e| perr(line, column, e.to_string()))?;
            r.push(rf);
        }
        out.push(r);
    }
    TransferMatrix::from_rows(out)
}

/// A transfer matrix in `s` whose coefficients are polynomial in `param`.
pub fn parse_param_matrix(text: &str, param: &Var) -> Result<ParamTransferMatrix> {
    if !param.name().chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        || [Var::s(), Var::w(), Var::g()].contains(param)
    {
        return Err(Error::Domain(format!("invalid parameter name {param}")));
    }
    let rows = parse_with(text, &[Var::s(), param.clone()], |p| p.matrix())?;
    let (nr, nc) = (rows.len(), rows[0].len());
    let entries = rows.into_iter().flatten().map(|(f, _, _)| (f.num, f.den)).collect();
    ParamTransferMatrix::new(nr, nc, param.clone(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use linf_core::poly::UniPoly;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn literals_are_exact() {
        assert_eq!(decimal_literal("0.2"), Some(q(1, 5)));
        assert_eq!(decimal_literal("1e-7"), Some(q(1, 10_000_000)));
        assert_eq!(decimal_literal("2.5E2"), Some(q(250, 1)));
        assert_eq!(decimal_literal(".5"), Some(q(1, 2)));
        assert_eq!(decimal_literal("1.2.3"), None);
    }

    #[test]
    fn scalar_entry() {
        let g = parse_transfer_matrix("1/(2*s^2+3*s+2)").unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 1));
        assert_eq!(g.entry(0, 0).den(), &UniPoly::new(Var::s(), vec![q(1, 1), q(3, 2), q(1, 1)]));
        assert_eq!(g.entry(0, 0).num(), &UniPoly::new(Var::s(), vec![q(1, 2)]));
    }

    #[test]
    fn matrix_layout() {
        let g = parse_transfer_matrix("1/(s+1), 0;\n 0, 2/(s+3)").unwrap();
        assert_eq!((g.rows(), g.cols()), (2, 2));
        assert!(g.entry(0, 1).is_zero());
        let zd = parse_transfer_matrix(
            "10*(s+1)/(s^2+0.2*s+100), 1/(s+1); (s+2)/(s^2+0.1*s+10), 5*(s+1)/((s+2)*(s+3))",
        )
        .unwrap();
        assert_eq!(zd.entry(0, 0).den().coeff(1), q(1, 5));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_transfer_matrix("1/(s+1),\n  2/(s+x)") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
        match parse_transfer_matrix("1, 2; 3") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (1, 7));
                assert!(message.contains("expected 2"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_transfer_matrix("1/(s-s)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_transfer_matrix(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_transfer_matrix("s^x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn polynomial_syntax() {
        let (w, g) = (Var::w(), Var::g());
        let p = parse_polynomial("4*g^2*w^4 + g^2*w^2 + 4*g^2 - 1", &w, &g).unwrap();
        let e = BiPoly::from_int_terms(w.clone(), g.clone(), &[(4, 4, 2), (1, 2, 2), (4, 0, 2), (-1, 0, 0)]);
        assert_eq!(p, e);
        assert!(parse_polynomial("1/w", &w, &g).is_err());
    }

    #[test]
    fn parametric_entries() {
        let x = Var::new("x");
        let g = parse_param_matrix("1/((s^2+2*x*s+1)*(s+1))", &x).unwrap();
        let spec = g.specialize(&q(1, 2)).unwrap();
        assert_eq!(spec.entry(0, 0).den(), &UniPoly::from_ints(Var::s(), &[1, 2, 2, 1]));
        assert!(parse_param_matrix("1/(s+y)", &x).is_err());
        assert!(parse_param_matrix("1/(s+1)", &Var::g()).is_err());
    }
}
