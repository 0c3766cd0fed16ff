//! Exterior algebra of a rank-7 space with its torus grading.
//!
//! Basis vectors are `e_0..e_6`; the torus acts on `e_j` with weight `j - 3`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::polycore::{parse_rational, CoeffRing, Field, PolyError};

pub const RANK: usize = 7;
pub const TOP: u8 = 0b111_1111;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("grade {0} exceeds the rank")]
    GradeOverflow(usize),
    #[error("grades {0} and {1} are not complementary")]
    GradeMismatch(usize, usize),
    #[error("index {0} out of range")]
    BadIndex(usize),
    #[error("the zero form has no weight")]
    ZeroForm,
    #[error("terms of mixed torus weight")]
    MixedWeights,
    #[error("terms of mixed grade")]
    MixedGrades,
    #[error("malformed multivector text: {0}")]
    Syntax(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Index set as a bitmask: bit `i` set when `e_i` occurs.
pub type Blade = u8;

pub fn blade(indices: &[usize]) -> Blade {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn blade_indices(b: Blade) -> Vec<usize> {
    (0..RANK).filter(|&i| b & (1 << i) != 0).collect()
}

/// Sign of `e_A ∧ e_B` relative to `e_{A ∪ B}`; zero when the sets meet.
pub fn wedge_sign(a: Blade, b: Blade) -> i32 {
    if a & b != 0 {
        return 0;
    }
    // inversions: pairs (i in A, j in B) with i > j
    let mut inv = 0u32;
    for j in 0..RANK {
        if b & (1 << j) != 0 {
            inv += (a >> (j + 1)).count_ones();
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign that sorts an index list, or zero when an index repeats.
pub fn sort_sign(indices: &[usize]) -> i32 {
    let mut seen = 0u8;
    let mut inv = 0;
    for (k, &i) in indices.iter().enumerate() {
        if seen & (1 << i) != 0 {
            return 0;
        }
        seen |= 1 << i;
        inv += indices[k + 1..].iter().filter(|&&j| j < i).count();
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn blade_weight(b: Blade) -> i32 {
    blade_indices(b).iter().map(|&i| i as i32 - 3).sum()
}

/// Homogeneous element of `Λ^k C^7` with coefficients in `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiVector<C: CoeffRing> {
    grade: usize,
    terms: BTreeMap<Blade, C>,
}

impl<C: CoeffRing> MultiVector<C> {
    pub fn zero(grade: usize) -> Self {
        MultiVector { grade, terms: BTreeMap::new() }
    }

    /// `c * e_{i1} ∧ ... ∧ e_{ik}` for indices in any order.
    pub fn monomial(indices: &[usize], c: C) -> Result<Self, ExteriorError> {
        if indices.len() > RANK {
            return Err(ExteriorError::GradeOverflow(indices.len()));
        }
        if let Some(&i) = indices.iter().find(|&&i| i >= RANK) {
            return Err(ExteriorError::BadIndex(i));
        }
        let mut mv = Self::zero(indices.len());
        let s = sort_sign(indices);
        if s != 0 && !c.is_zero() {
            mv.terms.insert(blade(indices), if s < 0 { c.neg() } else { c });
        }
        Ok(mv)
    }

    /// Sum of `c * e_I` over the given index lists, all of one length.
    pub fn from_terms(grade: usize, terms: Vec<(Vec<usize>, C)>) -> Result<Self, ExteriorError> {
        let mut acc = Self::zero(grade);
        for (idx, c) in terms {
            if idx.len() != grade {
                return Err(ExteriorError::MixedGrades);
            }
            acc = acc.add(&Self::monomial(&idx, c)?);
        }
        Ok(acc)
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &C)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> Option<&C> {
        self.terms.get(&b)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.grade, other.grade, "adding multivectors of different grade");
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            let v = match terms.get(b) {
                Some(x) => x.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(b);
            } else {
                terms.insert(*b, v);
            }
        }
        MultiVector { grade: self.grade, terms }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|c| c.mul(s))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> MultiVector<D> {
        let terms = self.terms.iter().map(|(b, c)| (*b, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        MultiVector { grade: self.grade, terms }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        let grade = self.grade + other.grade;
        if grade > RANK {
            return Err(ExteriorError::GradeOverflow(grade));
        }
        let mut terms: BTreeMap<Blade, C> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let s = wedge_sign(*a, *b);
                if s == 0 {
                    continue;
                }
                let mut v = ca.mul(cb);
                if s < 0 {
                    v = v.neg();
                }
                let key = a | b;
                let nv = match terms.remove(&key) {
                    Some(old) => old.add(&v),
                    None => v,
                };
                if !nv.is_zero() {
                    terms.insert(key, nv);
                }
            }
        }
        Ok(MultiVector { grade, terms })
    }

    /// Common torus weight of all terms.
    pub fn torus_weight(&self) -> Result<i32, ExteriorError> {
        let mut ws = self.terms.keys().map(|&b| blade_weight(b));
        let w = ws.next().ok_or(ExteriorError::ZeroForm)?;
        if ws.all(|x| x == w) {
            Ok(w)
        } else {
            Err(ExteriorError::MixedWeights)
        }
    }

    /// Coefficient of `e_0 ∧ ... ∧ e_6` in `self ∧ other`.
    pub fn pairing(&self, other: &Self) -> Result<Option<C>, ExteriorError> {
        if self.grade + other.grade != RANK {
            return Err(ExteriorError::GradeMismatch(self.grade, other.grade));
        }
        let mut acc: Option<C> = None;
        for (a, ca) in &self.terms {
            let b = TOP ^ a;
            if let Some(cb) = other.terms.get(&b) {
                let mut v = ca.mul(cb);
                if wedge_sign(*a, b) < 0 {
                    v = v.neg();
                }
                acc = Some(match acc {
                    Some(x) => x.add(&v),
                    None => v,
                });
            }
        }
        Ok(acc)
    }
}

impl<F: Field> MultiVector<F> {
    /// Basis vector `e_i`.
    pub fn basis(i: usize, ctx: &F::Ctx) -> Result<Self, ExteriorError> {
        Self::monomial(&[i], F::one(ctx))
    }

    /// Pairing with an explicit zero when no terms meet.
    pub fn pair(&self, other: &Self, ctx: &F::Ctx) -> Result<F, ExteriorError> {
        Ok(self.pairing(other)?.unwrap_or_else(|| F::zero(ctx)))
    }
}

/// Parses the serialized form `c*e_0^e_5 - e_1^e_4 + ...`, where `^`
/// stands for the wedge product.
pub fn parse_multivector<F: Field>(text: &str, ctx: &F::Ctx) -> Result<MultiVector<F>, ExteriorError> {
    let bad = |m: &str| ExteriorError::Syntax(format!("{}: {:?}", m, text));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Err(bad("zero has no grade"));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (k, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && k > 0 {
            pieces.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if ch == '-' {
            neg = true;
        } else if ch != '+' {
            cur.push(ch);
        }
    }
    pieces.push((neg, cur));
    let mut terms = Vec::new();
    let mut grade = None;
    for (neg, piece) in pieces {
        let (coeff, blade_txt) = match piece.rfind('*') {
            Some(pos) => (parse_rational(&piece[..pos])?, &piece[pos + 1..]),
            None => (BigRational::from_integer(1.into()), piece.as_str()),
        };
        let idx = blade_txt
            .split('^')
            .map(|f| f.strip_prefix("e_").and_then(|d| d.parse::<usize>().ok()).ok_or_else(|| bad("bad basis factor")))
            .collect::<Result<Vec<_>, _>>()?;
        if *grade.get_or_insert(idx.len()) != idx.len() {
            return Err(ExteriorError::MixedGrades);
        }
        let mut c = F::from_rational(ctx, &coeff).ok_or(PolyError::NonUnitDivision)?;
        if neg {
            c = c.neg();
        }
        terms.push((idx, c));
    }
    MultiVector::from_terms(grade.unwrap(), terms)
}

impl<F: Field> fmt::Display for MultiVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<Blade> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&b| blade_indices(b));
        for (k, b) in keys.iter().enumerate() {
            let c = &self.terms[b];
            let neg = c.is_negative();
            let c = if neg { Field::neg(c) } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !c.is_one() {
                if c.is_compound() {
                    write!(f, "({})*", c)?;
                } else {
                    write!(f, "{}*", c)?;
                }
            }
            let names: Vec<String> = blade_indices(*b).iter().map(|i| format!("e_{}", i)).collect();
            f.write_str(&names.join("^"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
