use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder};
use super::PolyError;

/// Ordered variable names, a term order and the coefficient domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ring<F: Field> {
    names: Vec<String>,
    order: MonomialOrder,
    ctx: F::Ctx,
}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(names: &[S], order: MonomialOrder, ctx: F::Ctx) -> Arc<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if let MonomialOrder::Block { front } = &order {
            assert_eq!(front.len(), names.len(), "block order mask must cover every variable");
        }
        Arc::new(Ring { names, order, ctx })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Ring::new(&self.names, order, self.ctx.clone())
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial<F> {
        self.constant(F::one(&self.ctx))
    }

    pub fn constant(self: &Arc<Self>, c: F) -> Polynomial<F> {
        let terms = if c.is_zero() { vec![] } else { vec![Term { coeff: c, mon: Monomial::one(self.nvars()) }] };
        Polynomial { ring: self.clone(), terms }
    }

    pub fn int(self: &Arc<Self>, n: i64) -> Polynomial<F> {
        self.constant(F::from_i64(&self.ctx, n))
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial<F> {
        self.monomial(F::one(&self.ctx), Monomial::var(self.nvars(), i, 1))
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<Polynomial<F>, PolyError> {
        let i = self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.var(i))
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn monomial(self: &Arc<Self>, c: F, mon: Monomial) -> Polynomial<F> {
        debug_assert_eq!(mon.nvars(), self.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![Term { coeff: c, mon }] };
        Polynomial { ring: self.clone(), terms }
    }

    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Term<F: Field> {
    pub coeff: F,
    pub mon: Monomial,
}

/// Sparse polynomial; terms are nonzero and strictly decreasing in the ring order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<F: Field> Polynomial<F> {
    /// Builds a polynomial from arbitrary terms, combining and sorting them.
    pub fn from_terms(ring: &Arc<Ring<F>>, mut terms: Vec<Term<F>>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.mon, &a.mon));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusts the caller that `terms` are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<Ring<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mon.is_one())
    }

    pub fn constant_value(&self) -> Option<F> {
        match self.terms.as_slice() {
            [] => Some(F::zero(self.ring.ctx())),
            [t] if t.mon.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn lc(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|t| t.mon.exp(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => self.terms.iter().all(|t| t.mon.degree() == t0.mon.degree()),
        }
    }

    pub fn is_weighted_homogeneous(&self, weights: &[i64]) -> bool {
        let mut it = self.terms.iter().map(|t| t.mon.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(w0) => it.all(|w| w == w0),
        }
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.terms.iter().any(|t| t.mon.exp(i) > 0)).collect()
    }

    pub fn coefficient(&self, mon: &Monomial) -> F {
        self.terms.iter().find(|t| &t.mon == mon).map(|t| t.coeff.clone()).unwrap_or_else(|| F::zero(self.ring.ctx()))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &F::one(self.ring.ctx()), None))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &F::one(self.ring.ctx()).neg(), None))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_heap(other))
    }

    /// `self + c * mon * other` by a single merge pass.
    pub fn add_scaled(&self, other: &Self, c: &F, mon: Option<&Monomial>) -> Self {
        let terms = merge_scaled(&self.ring.order, &self.terms, &other.terms, c, mon);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mon: t.mon.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, c: &F, mon: &Monomial) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mon: t.mon.mul(mon) }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Product by heap-merging the term streams `f_i * g`.
    fn mul_heap(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (f, g) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if f.terms.len() == 1 {
            return g.mul_term(&f.terms[0].coeff, &f.terms[0].mon);
        }
        let order = &self.ring.order;
        // heap entries: (product monomial, i, j)
        let mut heap: Vec<(Monomial, usize, usize)> = Vec::with_capacity(f.terms.len());
        let greater = |a: &(Monomial, usize, usize), b: &(Monomial, usize, usize)| -> bool {
            match order.cmp(&a.0, &b.0) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => a.1 < b.1,
            }
        };
        for i in 0..f.terms.len() {
            heap_push(&mut heap, (f.terms[i].mon.mul(&g.terms[0].mon), i, 0), &greater);
        }
        let mut out: Vec<Term<F>> = Vec::new();
        while let Some((mon, i, j)) = heap_pop(&mut heap, &greater) {
            let c = f.terms[i].coeff.mul(&g.terms[j].coeff);
            match out.last_mut() {
                Some(last) if last.mon == mon => last.coeff = last.coeff.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(Term { coeff: c, mon });
                }
            }
            if j + 1 < g.terms.len() {
                heap_push(&mut heap, (f.terms[i].mon.mul(&g.terms[j + 1].mon), i, j + 1), &greater);
            }
        }
        if let Some(last) = out.last() {
            if last.coeff.is_zero() {
                out.pop();
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let ctx = self.ring.ctx();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mon.exp(var) > 0)
            .filter_map(|t| {
                let e = t.mon.exp(var);
                let c = t.coeff.mul(&F::from_i64(ctx, e as i64));
                if c.is_zero() {
                    return None;
                }
                let mut ex = t.mon.exponents().to_vec();
                ex[var] -= 1;
                Some(Term { coeff: c, mon: Monomial::from_exponents(&ex) })
            })
            .collect();
        // lowering one exponent preserves relative order only for some orders
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes variable `i` by `images[i]`, landing in `target`.
    pub fn substitute(&self, target: &Arc<Ring<F>>, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = target.zero();
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); images.len()];
        for t in &self.terms {
            let mut p = target.constant(t.coeff.clone());
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                p = &p * &cache[e as usize];
                if p.is_zero() {
                    break;
                }
            }
            acc = &acc + &p;
        }
        acc
    }

    /// Replaces the listed variables by scalars; the result stays in the same ring.
    pub fn specialize(&self, assignments: &[(usize, F)]) -> Self {
        let ctx = self.ring.ctx().clone();
        let images: Vec<Polynomial<F>> = (0..self.ring.nvars())
            .map(|i| match assignments.iter().find(|(v, _)| *v == i) {
                Some((_, c)) => self.ring.constant(c.clone()),
                None => self.ring.var(i),
            })
            .collect();
        let _ = ctx;
        self.substitute(&self.ring, &images)
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        let ctx = self.ring.ctx();
        let mut acc = F::zero(ctx);
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e > 0 {
                    v = v.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&v);
        }
        acc
    }

    /// Moves the polynomial into a ring with the same variables but another order.
    pub fn reorder(&self, ring: &Arc<Ring<F>>) -> Self {
        assert_eq!(ring.names(), self.ring.names());
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Re-indexes variables: variable `i` becomes variable `map[i]` of `ring`.
    pub fn remap(&self, ring: &Arc<Ring<F>>, map: &[usize]) -> Self {
        let n = ring.nvars();
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mon: t.mon.remap(map, n) }).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Moves into `ring`, matching variables by name.
    pub fn rename_into(&self, ring: &Arc<Ring<F>>) -> Result<Self, PolyError> {
        let map = self
            .ring
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if self.terms.iter().all(|t| t.mon.exp(i) == 0) {
                    return Ok(ring.index_of(n).unwrap_or(0));
                }
                ring.index_of(n).ok_or_else(|| PolyError::UnknownVariable(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.remap(ring, &map))
    }

    /// Homogenizes with respect to total degree using variable `h`.
    pub fn homogenize(&self, h: usize) -> Self {
        let d = match self.degree() {
            Some(d) => d,
            None => return self.clone(),
        };
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut ex = t.mon.exponents().to_vec();
                ex[h] += (d - t.mon.degree()) as u16;
                Term { coeff: t.coeff.clone(), mon: Monomial::from_exponents(&ex) }
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact division by `g`. Fails when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Result<Self, PolyError> {
        self.check_ring(g)?;
        let glm = g.lm().ok_or(PolyError::NonUnitDivision)?.clone();
        let ginv = g.lc().unwrap().inv().ok_or(PolyError::NonUnitDivision)?;
        let mut rem = self.clone();
        let mut quo: Vec<Term<F>> = Vec::new();
        while let Some(t) = rem.terms.first().cloned() {
            let m = t.mon.checked_div(&glm).ok_or(PolyError::NotDivisible)?;
            let c = t.coeff.mul(&ginv);
            rem = rem.add_scaled(g, &c.neg(), Some(&m));
            quo.push(Term { coeff: c, mon: m });
        }
        Ok(Polynomial::from_terms(&self.ring, quo))
    }

    /// The scalar multiple used as canonical representative of the line `F·self`:
    /// primitive integer content with positive leading coefficient over QQ,
    /// monic otherwise.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<F> = self.terms.iter().map(|t| t.coeff.clone()).collect();
        self.scale(&associate_factor(&coeffs))
    }

    /// Whether `self = c * other` for some nonzero scalar `c`.
    pub fn equals_up_to_scalar(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let a = self.lc().unwrap();
        let b = other.lc().unwrap();
        self.terms.iter().zip(&other.terms).all(|(s, o)| s.mon == o.mon && s.coeff.mul(b) == o.coeff.mul(a))
    }
}

/// Scalar factor bringing a coefficient vector to canonical form. Over the
/// rationals the result has coprime integer entries with positive first
/// entry; over other fields the first entry becomes one.
pub fn associate_factor<F: Field>(coeffs: &[F]) -> F {
    let ctx = coeffs[0].ctx();
    if F::characteristic(&ctx) == 0 {
        if let Some(qs) = as_rationals(coeffs) {
            let mut den_lcm = BigInt::one();
            let mut num_gcd = BigInt::zero();
            for q in &qs {
                den_lcm = den_lcm.lcm(q.denom());
                num_gcd = num_gcd.gcd(q.numer());
            }
            let mut f = BigRational::new(den_lcm, num_gcd);
            if Signed::is_negative(&qs[0]) {
                f = -f;
            }
            if let Some(x) = F::from_rational(&ctx, &f) {
                return x;
            }
        }
    }
    coeffs[0].inv().expect("nonzero coefficient")
}

fn as_rationals<F: Field>(coeffs: &[F]) -> Option<Vec<BigRational>> {
    coeffs.iter().map(|c| (c as &dyn std::any::Any).downcast_ref::<BigRational>().cloned()).collect()
}

/// `a + c * mon * b` on sorted term slices.
pub(crate) fn merge_scaled<F: Field>(
    order: &MonomialOrder,
    a: &[Term<F>],
    b: &[Term<F>],
    c: &F,
    mon: Option<&Monomial>,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shift = |t: &Term<F>| -> Term<F> {
        Term {
            coeff: t.coeff.mul(c),
            mon: match mon {
                Some(m) => t.mon.mul(m),
                None => t.mon.clone(),
            },
        }
    };
    let mut bj = b.first().map(&shift);
    while i < a.len() {
        match &bj {
            None => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            Some(tb) => match order.cmp(&a[i].mon, &tb.mon) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bj.take().unwrap());
                    j += 1;
                    bj = b.get(j).map(&shift);
                }
                Ordering::Equal => {
                    let s = a[i].coeff.add(&tb.coeff);
                    if !s.is_zero() {
                        out.push(Term { coeff: s, mon: a[i].mon.clone() });
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(&shift);
                }
            },
        }
    }
    if let Some(tb) = bj {
        out.push(tb);
        out.extend(b[j + 1..].iter().map(shift));
    }
    out
}

fn heap_push<T>(heap: &mut Vec<T>, item: T, greater: &impl Fn(&T, &T) -> bool) {
    heap.push(item);
    let mut k = heap.len() - 1;
    while k > 0 {
        let parent = (k - 1) / 2;
        if greater(&heap[k], &heap[parent]) {
            heap.swap(k, parent);
            k = parent;
        } else {
            break;
        }
    }
}

fn heap_pop<T>(heap: &mut Vec<T>, greater: &impl Fn(&T, &T) -> bool) -> Option<T> {
    if heap.is_empty() {
        return None;
    }
    let last = heap.len() - 1;
    heap.swap(0, last);
    let top = heap.pop();
    let n = heap.len();
    let mut k = 0;
    loop {
        let l = 2 * k + 1;
        let r = l + 1;
        let mut best = k;
        if l < n && greater(&heap[l], &heap[best]) {
            best = l;
        }
        if r < n && greater(&heap[r], &heap[best]) {
            best = r;
        }
        if best == k {
            break;
        }
        heap.swap(k, best);
        k = best;
    }
    top
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, F: Field> $tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            /// Panics on ring mismatch; use the `try_` variants at API boundaries.
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                $body(self, rhs).expect("polynomials from different rings")
            }
        }
        impl<F: Field> $tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                $body(&self, &rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, Polynomial::try_add);
binop!(Sub, sub, Polynomial::try_sub);
binop!(Mul, mul, Polynomial::try_mul);

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.neg(), mon: t.mon.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}
