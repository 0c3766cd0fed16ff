//! Weighted homogeneity and Kollár's upper bound on log canonical
//! thresholds of the fixed divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::linalg::kernel;
use crate::mukai::{divisor_table, DivisorKind, DivisorRecord};
use crate::polycore::{rat, Field, Polynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LctError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{weights} weights for {vars} variables")]
    Length { weights: usize, vars: usize },
    #[error("weights must be positive")]
    NotPositive,
}

/// Positive integer weights, one per variable, with gcd one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    /// Divides out the common factor.
    pub fn new(w: Vec<u64>) -> Result<Self, LctError> {
        if w.is_empty() || w.contains(&0) {
            return Err(LctError::NotPositive);
        }
        let g = w.iter().fold(0u64, |g, &x| g.gcd(&x));
        Ok(WeightVector(w.into_iter().map(|x| x / g).collect()))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check<F: Field>(f: &Polynomial<F>, w: &WeightVector) -> Result<(), LctError> {
    if f.is_zero() {
        return Err(LctError::ZeroPolynomial);
    }
    let vars = f.ring().nvars();
    if w.0.len() != vars {
        return Err(LctError::Length { weights: w.0.len(), vars });
    }
    Ok(())
}

fn monomial_weights<'a, F: Field>(f: &'a Polynomial<F>, w: &WeightVector) -> impl Iterator<Item = u64> + 'a {
    let w = w.0.clone();
    f.terms().iter().map(move |t| w.iter().enumerate().map(|(v, &x)| x * t.mon.exp(v) as u64).sum())
}

/// Lowest weight of a monomial of `f`.
pub fn weighted_degree<F: Field>(f: &Polynomial<F>, w: &WeightVector) -> Result<u64, LctError> {
    check(f, w)?;
    Ok(monomial_weights(f, w).min().unwrap())
}

pub fn is_weighted_homogeneous<F: Field>(f: &Polynomial<F>, w: &WeightVector) -> Result<bool, LctError> {
    let d = weighted_degree(f, w)?;
    Ok(monomial_weights(f, w).all(|x| x == d))
}

/// `Σ w_i / w(f)`.
pub fn kollar_bound<F: Field>(f: &Polynomial<F>, w: &WeightVector) -> Result<BigRational, LctError> {
    let d = weighted_degree(f, w)?;
    if d == 0 {
        // a nonzero constant term: the divisor misses the origin
        return Err(LctError::NotPositive);
    }
    Ok(BigRational::new(BigInt::from(w.sum()), BigInt::from(d)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightDetection {
    Unique(WeightVector),
    /// Every weight makes a monomial homogeneous.
    SingleMonomial,
    /// The homogeneity conditions leave more than one free direction.
    NotUnique {
        dim: usize,
    },
    /// No positive weight makes `f` homogeneous.
    None,
}

/// Solves for weights under which every monomial of `f` has the same degree.
pub fn find_weight_vector<F: Field>(f: &Polynomial<F>) -> Result<WeightDetection, LctError> {
    if f.is_zero() {
        return Err(LctError::ZeroPolynomial);
    }
    if f.len() == 1 {
        return Ok(WeightDetection::SingleMonomial);
    }
    let n = f.ring().nvars();
    let exps: Vec<Vec<i64>> = f.terms().iter().map(|t| (0..n).map(|v| t.mon.exp(v) as i64).collect()).collect();
    let rows: Vec<Vec<BigRational>> =
        exps[1..].iter().map(|e| e.iter().zip(&exps[0]).map(|(a, b)| rat(a - b, 1)).collect()).collect();
    let ker = kernel(&rows, n, &());
    match ker.len() {
        0 => Ok(WeightDetection::None),
        1 => Ok(positive_primitive(&ker[0]).map_or(WeightDetection::None, WeightDetection::Unique)),
        dim => Ok(WeightDetection::NotUnique { dim }),
    }
}

fn positive_primitive(v: &[BigRational]) -> Option<WeightVector> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let sign = if ints.iter().all(|x| x.is_positive()) {
        BigInt::one()
    } else if ints.iter().all(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        return None;
    };
    let w: Vec<u64> = ints.iter().map(|x| u64::try_from(x * &sign).ok()).collect::<Option<_>>()?;
    WeightVector::new(w).ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctBoundReport {
    pub weights: WeightVector,
    pub weighted_degree: u64,
    pub bound: BigRational,
    pub homogeneous: bool,
}

/// Bound from detected weights, or from unit weights when detection does not
/// single out a vector.
pub fn lct_bound<F: Field>(f: &Polynomial<F>) -> Result<LctBoundReport, LctError> {
    let weights = match find_weight_vector(f)? {
        WeightDetection::Unique(w) => w,
        _ => WeightVector::uniform(f.ring().nvars()),
    };
    bound_with(f, weights)
}

pub fn bound_with<F: Field>(f: &Polynomial<F>, weights: WeightVector) -> Result<LctBoundReport, LctError> {
    Ok(LctBoundReport {
        weighted_degree: weighted_degree(f, &weights)?,
        bound: kollar_bound(f, &weights)?,
        homogeneous: is_weighted_homogeneous(f, &weights)?,
        weights,
    })
}

/// Bounds as printed, by item. Item 3 is printed as 3/4 although its own
/// weights and degree give 6/10.
pub const PRINTED_BOUNDS: [(usize, i64, i64); 10] =
    [(1, 1, 2), (2, 6, 11), (3, 3, 4), (4, 2, 3), (5, 3, 2), (6, 6, 7), (7, 6, 5), (8, 3, 2), (12, 1, 2), (13, 1, 1)];

pub fn printed_bound(item: usize) -> Option<BigRational> {
    PRINTED_BOUNDS.iter().find(|r| r.0 == item).map(|&(_, n, d)| rat(n, d))
}

#[derive(Clone, Debug)]
pub struct LctRow {
    pub item: usize,
    pub targets: Vec<String>,
    pub report: LctBoundReport,
    pub printed: Option<BigRational>,
}

impl LctRow {
    pub fn agrees(&self) -> bool {
        self.printed.as_ref().is_none_or(|p| *p == self.report.bound)
    }
}

/// One row per divisor with an equation; items reported only for smoothness
/// are skipped.
pub fn divisor_lct_table<F: Field>(records: &[DivisorRecord<F>]) -> Result<Vec<LctRow>, LctError> {
    let specs = divisor_table();
    let mut rows = Vec::new();
    for r in records {
        let kind = specs.iter().find(|s| s.item == r.item).map(|s| s.kind);
        if kind == Some(DivisorKind::Smoothness) {
            continue;
        }
        rows.push(LctRow {
            item: r.item,
            targets: r.targets.clone(),
            report: lct_bound(&r.equation)?,
            printed: printed_bound(r.item),
        });
    }
    Ok(rows)
}

/// Smallest bound in the table, bounding the threshold of the invariant pair.
pub fn global_bound(rows: &[LctRow]) -> Option<BigRational> {
    rows.iter().map(|r| r.report.bound.clone()).min()
}

#[cfg(test)]
mod tests;
