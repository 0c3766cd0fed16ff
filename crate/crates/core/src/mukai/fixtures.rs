//! Printed affine equations of the fixed divisors, kept in their original
//! TeX notation, and a reader that turns them into polynomials.

use std::sync::Arc;

use num_rational::BigRational;

use crate::polycore::{format_rational, parse_poly_with, Field, PolyError, Polynomial, Ring};

use super::MukaiError;

/// `(item, equation)` pairs. Items 9 to 11 have no printed equation.
pub const PRINTED: [(usize, &str); 10] = [
    (
        1,
        r"0=p_{1456}^5 p_{2456}^2+2p_{1356}p_{1456}^3 p_{2456}^3+p_{1356}^2 p_{1456} p_{2456}^4-1/(d+1)p_{1456}^6+(
      2d^3+2d^2+d-2)/(d+1)p_{1356}p_{1456}^4p_{2456}+(2d^3-1)/(d+1)p_{1356}^2p_{1456}^2p_{2456}^2+(-
      2d^2-d)/(d+1)p_{1356}^3p_{2456}^3+(d^4+d^2+2d)p_{1356}^2p_{1456}^3+(-2d^3+2d)p_{1356}^
      3p_{1456}p_{2456}+(-d^4-2d^3-d^2)p_{1356}^4",
    ),
    (
        2,
        r"0= p_{1456}^4p_{2456}^3+2p_{1356}p_{1456}^2p_{2456}^4+p_{1356}^2p_{2456}^5\newline +(d-1)p_{1456}^5p_{2456}+(
      2d^2+4d-2)p_{1356}p_{1456}^3p_{2456}^2\newline
+(2d^2+3d-1)p_{1356}^2p_{1456}p_{2456}^3+(d^3-d^2-d)
      p_{1356}p_{1456}^4+(d^4+4d^3+d^2)p_{1356}^2p_{1456}^2p_{2456}+(d^3+d^2+d)p_{1356}^3p_{2456}^2+(d^5+
      3d^4+3d^3+d^2)p_{1356}^3p_{1456}",
    ),
    (
        3,
        r"0=p_{1456}^4p_{2456}^2+2p_{1356}p_{1456}^2p_{2456}^3+p_{1356}^2p_{2456}^4-p_{1456}^5+(2d^2+2d-2)
      p_{1356}p_{1456}^3p_{2456}+(2d^2+2d-1)p_{1356}^2p_{1456}p_{2456}^2+(d^4+2d^3+2d^2+d)p_{1356}^2p_{1456}
      ^2+(d^2+d)p_{1356}^3p_{2456}",
    ),
    (
        4,
        r"0=p_{1456}^4p_{2456}+2p_{1356}p_{1456}^2p_{2456}^2+p_{1356}^2p_{2456}^3\newline +(d^2-1)p_{1356}p_{1456}^3+(d^2-
      1)p_{1356}^2p_{1456}p_{2456}+(d^3+2d^2+d)p_{1356}^3",
    ),
    (5, r"0= p_{0125}^2 + p_{0124}p_{0135}"),
    (6, r"0=p_{1456}^3 p_{2456}+p_{1356}p_{1456}p_{2456}^2+d^2p_{1356}p_{1456}^2\newline -dp_{1356}^2p_{2456}"),
    (7, r"0 =p_{1456}^2 p_{2456}+p_{1356} p_{2456}^2+(d^2+d)p_{1356} p_{1456}"),
    (8, r"p_{1456}^2+p_{1356}p_{2456}"),
    (
        12,
        r"0= p_{0124}^2p_{0125}^5+2p_{0124}^3p_{0125}^3p_{0135}+p_{0124}^4p_{0125}p_{0135}^2\newline -1/(d+1)p_{0125}^6+(
     2d^3+2d^2+d-2)/(d+1)p_{0124}p_{0125}^4p_{0135}\newline +(2d^3-1)/(d+1)p_{0124}^2p_{0125}^2p_{0135}^2+(-
      2d^2-d)/(d+1)p_{0124}^3p_{0135}^3\newline +(d^4+d^2+2d)p_{0125}^3p_{0135}^2+(-2d^3+2d)
      p_{0124}p_{0125}p_{0135}^3\newline +(-d^4-2d^3-d^2)p_{0135}^4",
    ),
    (
        13,
        r"0=p_{0124}^2p_{0125}^2+p_{0124}^3p_{0135}+1/bp_{0125}^3+(d^2b+db+1)/b*p_{0124}p_{0125}p_{0135}+(d^3b+d^2b-d^2-d)/b*p_{0135}^2",
    ),
];

pub fn printed(item: usize) -> Option<&'static str> {
    PRINTED.iter().find(|(i, _)| *i == item).map(|(_, s)| *s)
}

#[derive(Clone, Debug, PartialEq)]
enum Piece {
    Num(String),
    Ident(String),
    Op(char),
}

/// Rewrites TeX-style juxtaposition (`2d^3p_{1356}`) into explicit syntax
/// (`2*d^3*p_1356`). Identifiers are `p_` followed by digits, or a single
/// parameter letter.
pub fn normalize(tex: &str) -> String {
    let flat: String =
        tex.replace(r"\newline", "").chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
    let body = flat.strip_prefix("0=").unwrap_or(&flat);
    let chars: Vec<char> = body.chars().collect();
    let mut pieces = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            pieces.push(Piece::Num(chars[start..i].iter().collect()));
        } else if c == 'p' && chars.get(i + 1) == Some(&'_') {
            let start = i;
            i += 2;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            pieces.push(Piece::Ident(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() {
            pieces.push(Piece::Ident(c.to_string()));
            i += 1;
        } else {
            pieces.push(Piece::Op(c));
            i += 1;
        }
    }
    let mut out = String::new();
    for (k, p) in pieces.iter().enumerate() {
        if k > 0 {
            let prev = &pieces[k - 1];
            let ends = matches!(prev, Piece::Num(_) | Piece::Ident(_) | Piece::Op(')'));
            let starts = matches!(p, Piece::Ident(_) | Piece::Op('('));
            if ends && starts {
                out.push('*');
            }
        }
        match p {
            Piece::Num(s) | Piece::Ident(s) => out.push_str(s),
            Piece::Op(c) => out.push(*c),
        }
    }
    out
}

/// The printed equation of `item` at the given parameter values, in `ring`.
/// Values where a printed coefficient has a pole give
/// [`PolyError::ExcludedValue`].
pub fn printed_equation<F: Field>(
    item: usize,
    ring: &Arc<Ring<F>>,
    d: &BigRational,
    b: Option<&BigRational>,
) -> Result<Polynomial<F>, MukaiError> {
    let text = printed(item).ok_or(MukaiError::UnknownItem(item))?;
    let ctx = ring.ctx();
    let conv =
        |q: &BigRational| F::from_rational(ctx, q).ok_or_else(|| MukaiError::NotRepresentable(format_rational(q)));
    let mut bindings = vec![("d", conv(d)?)];
    if let Some(b) = b {
        bindings.push(("b", conv(b)?));
    }
    match parse_poly_with(&normalize(text), ring, &bindings) {
        Ok(p) => Ok(p),
        Err(PolyError::UnknownVariable(v)) if v == "b" => Err(MukaiError::MissingPencil(item)),
        Err(e) => Err(e.into()),
    }
}
