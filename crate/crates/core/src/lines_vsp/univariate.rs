//! Dense univariate polynomials, lowest degree first.

use crate::polycore::{Field, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Reads a polynomial in which only variable `var` occurs.
    pub fn from_poly(p: &Polynomial<F>, var: usize) -> Option<Self> {
        let n = p.ring().nvars();
        let ctx = p.ring().ctx();
        let deg = p.degree_in(var) as usize;
        let mut coeffs = vec![F::zero(ctx); deg + 1];
        for t in p.terms() {
            if (0..n).any(|v| v != var && t.mon.exp(v) != 0) {
                return None;
            }
            coeffs[t.mon.exp(var) as usize] = t.coeff.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lc(&self) -> &F {
        self.coeffs.last().expect("nonzero")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().unwrap();
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.mul(&inv)).collect() }
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul(&F::from_i64(&c.ctx(), k as i64))).collect();
        UniPoly::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let ctx = self.coeffs.first().or(other.coeffs.first()).map(|c| c.ctx());
        let Some(ctx) = ctx else { return self.clone() };
        let z = F::zero(&ctx);
        UniPoly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z).sub(other.coeffs.get(k).unwrap_or(&z))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly { coeffs: vec![] };
        }
        let ctx = self.coeffs[0].ctx();
        let mut out = vec![F::zero(&ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly { coeffs: vec![] }, self.clone());
        }
        let ctx = d.lc().ctx();
        let inv = d.lc().inv().unwrap();
        let mut q = vec![F::zero(&ctx); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let ctx = self.coeffs.first()?.ctx();
        Some(self.coeffs.iter().rev().fold(F::zero(&ctx), |acc, c| acc.mul(x).add(c)))
    }

    /// Square-free decomposition `f = c · Π g_i^i` by Yun's algorithm,
    /// returned as `(i, g_i)` with `g_i` monic and non-constant. Valid in
    /// characteristic zero or above the degree.
    pub fn squarefree(&self) -> Vec<(usize, Self)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divrem(&a0).0;
        let c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.divrem(&a).0;
            let c = d.divrem(&a).0;
            d = c.sub(&nb.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a));
            }
            b = nb;
            i += 1;
        }
        out
    }

    /// Multiplicities of the distinct roots over an algebraic closure,
    /// largest first.
    pub fn root_multiplicities(&self) -> Vec<u32> {
        let mut m: Vec<u32> = self
            .squarefree()
            .into_iter()
            .flat_map(|(i, g)| std::iter::repeat_n(i as u32, g.degree().unwrap()))
            .collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }
}
