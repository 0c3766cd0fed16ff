//! Exponent vectors and the term orders used throughout the engine.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// A power product, stored as a dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { deg: exps.iter().map(|&e| e as u32).sum(), exps: SmallVec::from_slice(exps) }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { deg: exps.iter().map(|&e| e as u32).sum(), exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { deg: exps.iter().map(|&e| e as u32).sum(), exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u16) -> Monomial {
        let exps: Exponents = self.exps.iter().map(|a| a * e).collect();
        Monomial { deg: self.deg * e as u32, exps }
    }

    /// Bit `i` is set when variable `i` (mod 64) occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    /// Re-index the exponent vector: variable `i` of `self` becomes
    /// variable `map[i]` of a ring with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Monomial { deg: self.deg, exps }
    }
}

/// Term orders. Every variant is a multiplicative well-order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, variable 0 largest.
    Grevlex,
    /// Pure lexicographic, variable 0 largest.
    Lex,
    /// Product order: grevlex on the flagged front variables, ties broken
    /// by grevlex on the remaining ones. Eliminates the front variables.
    Block { front: Vec<bool> },
}

impl MonomialOrder {
    pub fn block(nvars: usize, front: &[usize]) -> Self {
        let mut mask = vec![false; nvars];
        for &i in front {
            mask[i] = true;
        }
        MonomialOrder::Block { front: mask }
    }

    /// Whether this order eliminates exactly the given variable set.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        match self {
            MonomialOrder::Block { front } => front.iter().enumerate().all(|(i, &f)| f == vars.contains(&i)),
            MonomialOrder::Lex => {
                vars.is_empty() || {
                    let mut sorted = vars.to_vec();
                    sorted.sort_unstable();
                    sorted.iter().enumerate().all(|(k, &v)| k == v)
                }
            }
            MonomialOrder::Grevlex => vars.is_empty(),
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block { front } => {
                let mut da = 0u32;
                let mut db = 0u32;
                for i in 0..front.len() {
                    if front[i] {
                        da += a.exps[i] as u32;
                        db += b.exps[i] as u32;
                    }
                }
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..front.len()).rev() {
                    if front[i] && a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                let (ra, rb) = (a.deg - da, b.deg - db);
                if ra != rb {
                    return ra.cmp(&rb);
                }
                for i in (0..front.len()).rev() {
                    if !front[i] && a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { front } => {
                let idx: Vec<String> =
                    front.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i.to_string()).collect();
                format!("block[{}]", idx.join(","))
            }
        }
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    if a.deg != b.deg {
        return a.deg.cmp(&b.deg);
    }
    for i in (0..a.exps.len()).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x > y > z, x*z < y^2 in grevlex
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_front() {
        let o = MonomialOrder::block(3, &[2]);
        assert!(o.eliminates(&[2]));
        // any monomial containing z beats every monomial without it
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lcm_gcd_and_division() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert_eq!(a.lcm(&b).checked_div(&a), Some(m(&[0, 3, 0])));
        assert!(b.checked_div(&a).is_none());
        assert!(!a.is_coprime(&b));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }
}
