//! Text grammar for polynomials: parsing and canonical printing.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::field::Field;
use super::polynomial::{Polynomial, Ring};
use super::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(s[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(PolyError::Syntax { pos: i, msg: format!("unexpected character {:?}", c) });
        }
    }
    Ok(out)
}

/// A quotient of polynomials produced while parsing. `bound` records whether
/// a bound constant contributed, so a vanishing denominator can be blamed on it.
#[derive(Clone)]
struct Frac<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
    bound: Option<String>,
}

impl<F: Field> Frac<F> {
    fn poly(p: Polynomial<F>) -> Self {
        let den = p.ring().one();
        Frac { num: p, den, bound: None }
    }

    fn join(a: &Option<String>, b: &Option<String>) -> Option<String> {
        a.clone().or_else(|| b.clone())
    }

    fn add(&self, o: &Self) -> Self {
        let bound = Self::join(&self.bound, &o.bound);
        if self.den == o.den {
            return Frac { num: &self.num + &o.num, den: self.den.clone(), bound };
        }
        Frac { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den, bound }
    }

    fn neg(&self) -> Self {
        Frac { num: -&self.num, den: self.den.clone(), bound: self.bound.clone() }
    }

    fn mul(&self, o: &Self) -> Self {
        Frac { num: &self.num * &o.num, den: &self.den * &o.den, bound: Self::join(&self.bound, &o.bound) }
    }

    fn div(&self, o: &Self, pos: usize, allow_poly: bool) -> Result<Self, PolyError> {
        if o.num.is_zero() {
            return Err(match &o.bound {
                Some(name) => PolyError::ExcludedValue(name.clone()),
                None => PolyError::NonUnitDivision,
            });
        }
        let bound = Self::join(&self.bound, &o.bound);
        if let Some(c) = o.num.constant_value() {
            let inv = c.inv().ok_or(PolyError::NonUnitDivision)?;
            return Ok(Frac { num: (&self.num * &o.den).scale(&inv), den: self.den.clone(), bound });
        }
        if !allow_poly {
            if let Ok(q) = self.num.div_exact(&o.num) {
                return Ok(Frac { num: &q * &o.den, den: self.den.clone(), bound });
            }
            return Err(PolyError::Syntax { pos, msg: "division by a non-constant polynomial".into() });
        }
        Ok(Frac { num: &self.num * &o.den, den: &self.den * &o.num, bound })
    }

    fn pow(&self, e: u32) -> Self {
        Frac { num: self.num.pow(e), den: self.den.pow(e), bound: self.bound.clone() }
    }
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<Ring<F>>,
    bindings: &'a [(&'a str, F)],
    allow_poly_div: bool,
    len: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax { pos: self.here(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Frac<F>, PolyError> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac<F>, PolyError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.here();
                self.pos += 1;
                let rhs = self.factor()?;
                acc = acc.div(&rhs, pos, self.allow_poly_div)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Frac<F>, PolyError> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Frac<F>, PolyError> {
        let ctx = self.ring.ctx().clone();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Frac::poly(self.ring.constant(F::from_bigint(&ctx, &n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some((_, v)) = self.bindings.iter().find(|(b, _)| *b == name) {
                    let mut f = Frac::poly(self.ring.constant(v.clone()));
                    f.bound = Some(name);
                    return Ok(f);
                }
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Frac::poly(self.ring.var(i))),
                    None => Err(PolyError::UnknownVariable(name)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn run<F: Field>(
    text: &str,
    ring: &Arc<Ring<F>>,
    bindings: &[(&str, F)],
    allow_poly_div: bool,
) -> Result<Frac<F>, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring, bindings, allow_poly_div, len: text.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a polynomial in the variables of `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &Arc<Ring<F>>) -> Result<Polynomial<F>, PolyError> {
    parse_poly_with(text, ring, &[])
}

/// Like [`parse_poly`], with some identifiers bound to constants. A division
/// whose denominator vanishes because of a binding reports
/// [`PolyError::ExcludedValue`].
pub fn parse_poly_with<F: Field>(
    text: &str,
    ring: &Arc<Ring<F>>,
    bindings: &[(&str, F)],
) -> Result<Polynomial<F>, PolyError> {
    Ok(run(text, ring, bindings, false)?.num)
}

/// Parses a rational expression, returning numerator and denominator.
pub fn parse_fraction<F: Field>(text: &str, ring: &Arc<Ring<F>>) -> Result<(Polynomial<F>, Polynomial<F>), PolyError> {
    let f = run(text, ring, &[], true)?;
    Ok((f.num, f.den))
}

fn write_coeff<F: Field>(f: &mut fmt::Formatter<'_>, c: &F, has_mon: bool) -> fmt::Result {
    if has_mon && c.is_one() {
        return Ok(());
    }
    if c.is_compound() {
        write!(f, "({})", c)?;
    } else {
        write!(f, "{}", c)?;
    }
    if has_mon {
        f.write_str("*")?;
    }
    Ok(())
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let ring = self.ring();
        for (k, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            let c = if neg { t.coeff.neg() } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let has_mon = !t.mon.is_one();
            write_coeff(f, &c, has_mon)?;
            let mut first = true;
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(ring.name(i))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, Fp, MonomialOrder};
    use num_rational::BigRational;

    fn qring(names: &[&str]) -> Arc<Ring<BigRational>> {
        Ring::new(names, MonomialOrder::Grevlex, ())
    }

    #[test]
    fn expands_products() {
        let r = qring(&["a", "b", "c"]);
        let f = parse_poly("(a^2+b*c)*(2*a^2+b*c)", &r).unwrap();
        assert_eq!(f.to_string(), "2*a^4 + 3*a^2*b*c + b^2*c^2");
    }

    #[test]
    fn zero_and_constants() {
        let r = qring(&["x"]);
        assert!(parse_poly("0", &r).unwrap().is_zero());
        assert_eq!(parse_poly("-3/6", &r).unwrap().to_string(), "-1/2");
        assert_eq!(parse_poly("x - x", &r).unwrap().to_string(), "0");
    }

    #[test]
    fn divisor_quadric() {
        let r = qring(&["p_1356", "p_1456", "p_2456"]);
        let f = parse_poly("p_1456^2 + p_1356*p_2456", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "p_1456^2 + p_1356*p_2456");
    }

    #[test]
    fn errors() {
        let r = qring(&["x", "y"]);
        assert!(matches!(parse_poly("x + z", &r), Err(PolyError::UnknownVariable(v)) if v == "z"));
        assert!(matches!(parse_poly("x +* y", &r), Err(PolyError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("(x + y", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("x/0", &r), Err(PolyError::NonUnitDivision)));
        assert!(matches!(parse_poly("1/(x+1)", &r), Err(PolyError::Syntax { .. })));
        let f5: Arc<Ring<Fp>> = Ring::new(&["x"], MonomialOrder::Grevlex, 5);
        assert!(matches!(parse_poly("x/5", &f5), Err(PolyError::NonUnitDivision)));
    }

    #[test]
    fn bindings_and_excluded_values() {
        let r = qring(&["x"]);
        let f = parse_poly_with("x^2/(d+1) + d*x", &r, &[("d", rat(2, 1))]).unwrap();
        assert_eq!(f.to_string(), "1/3*x^2 + 2*x");
        let e = parse_poly_with("x/(d+1)", &r, &[("d", rat(-1, 1))]);
        assert!(matches!(e, Err(PolyError::ExcludedValue(d)) if d == "d"));
    }

    #[test]
    fn fractions_with_polynomial_denominators() {
        let r = qring(&["d", "x"]);
        let (n, d) = parse_fraction("x/(d+1) - x", &r).unwrap();
        assert_eq!(n.to_string(), "-d*x");
        assert_eq!(d.to_string(), "d + 1");
    }

    #[test]
    fn exact_polynomial_division_is_accepted() {
        let r = qring(&["x"]);
        assert_eq!(parse_poly("(x^2 - 1)/(x - 1)", &r).unwrap().to_string(), "x + 1");
    }
}
