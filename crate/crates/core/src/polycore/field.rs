//! Scalar domains: exact rationals, prime fields and quadratic extensions.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Arithmetic of a commutative field whose elements know their own domain.
///
/// Elements of prime fields carry their modulus, so binary operations never
/// need an external context. Constructors that cannot infer the domain take a
/// [`Field::Ctx`].
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// Fails when the denominator is not invertible in the field.
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Option<Self>;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic(ctx: &Self::Ctx) -> u64;

    /// Human readable domain name, e.g. `QQ` or `ZZ/32003`.
    fn domain_name(ctx: &Self::Ctx) -> String;

    /// Whether the element should be printed with a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    /// Square root inside the field, when one exists.
    fn sqrt(&self) -> Option<Self>;

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Whether a coefficient needs parentheses when printed as a factor.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Field for BigRational {
    type Ctx = ();

    fn ctx(&self) -> Self::Ctx {}
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_bigint(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(_: &(), q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn domain_name(_: &()) -> String {
        "QQ".to_string()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn sqrt(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

/// Element of the prime field `Z/p`, stored as a residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn new(v: u64, p: u32) -> Self {
        Fp { v: (v % p as u64) as u32, p }
    }

    pub fn from_signed(v: i64, p: u32) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u32, p }
    }

    pub fn value(&self) -> u32 {
        self.v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn legendre(&self) -> u32 {
        self.pow(((self.p - 1) / 2) as u64).v
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.p
    }
    fn zero(p: &u32) -> Self {
        Fp { v: 0, p: *p }
    }
    fn one(p: &u32) -> Self {
        Fp { v: 1 % *p, p: *p }
    }
    fn from_bigint(p: &u32, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(*p));
        Fp { v: r.to_u32().expect("residue fits u32"), p: *p }
    }
    fn from_rational(p: &u32, q: &BigRational) -> Option<Self> {
        let num = Self::from_bigint(p, q.numer());
        let den = Self::from_bigint(p, q.denom());
        den.inv().map(|d| num.mul(&d))
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v as u64 + rhs.v as u64;
        let p = self.p as u64;
        Fp { v: if s >= p { (s - p) as u32 } else { s as u32 }, p: self.p }
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.v + (self.p - rhs.v) };
        Fp { v, p: self.p }
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp { v: ((self.v as u64 * rhs.v as u64) % self.p as u64) as u32, p: self.p }
    }
    #[inline]
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        let (mut a, mut b) = (self.v as i64, self.p as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(Fp::from_signed(x0, self.p))
    }
    fn characteristic(p: &u32) -> u64 {
        *p as u64
    }
    fn domain_name(p: &u32) -> String {
        format!("ZZ/{}", p)
    }
    fn sqrt(&self) -> Option<Self> {
        if self.v == 0 || self.p == 2 {
            return Some(*self);
        }
        if self.legendre() != 1 {
            return None;
        }
        // Tonelli-Shanks
        let p = self.p as u64;
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::new(2, self.p);
        while z.legendre() == 1 {
            z = z.add(&Fp::one(&self.p));
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while !t.is_one() {
            let mut i = 0;
            let mut t2 = t;
            while !t2.is_one() {
                t2 = t2.mul(&t2);
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }
}

/// `a + b*sqrt(m)` in the quadratic extension `F[s]/(s^2 - m)`.
///
/// The extension is a field only when `m` is not a square in `F`; callers
/// establish that before constructing elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<F: Field> {
    pub a: F,
    pub b: F,
    pub m: F,
}

impl<F: Field> QuadExt<F> {
    pub fn embed(a: F, m: &F) -> Self {
        let ctx = a.ctx();
        QuadExt { a, b: F::zero(&ctx), m: m.clone() }
    }

    /// The generator `sqrt(m)`.
    pub fn root(m: &F) -> Self {
        let ctx = m.ctx();
        QuadExt { a: F::zero(&ctx), b: F::one(&ctx), m: m.clone() }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: self.b.neg(), m: self.m.clone() }
    }

    pub fn norm(&self) -> F {
        self.a.mul(&self.a).sub(&self.m.mul(&self.b).mul(&self.b))
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }
}

impl<F: Field> Debug for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("sqrt({})", self.m);
        let b = if self.b.is_one() { root } else { format!("{}*{}", self.b, root) };
        if self.a.is_zero() {
            write!(f, "{}", b)
        } else if self.b.is_negative() {
            write!(f, "{} - {}", self.a, b.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.a, b)
        }
    }
}

impl<F: Field> Field for QuadExt<F> {
    type Ctx = (F::Ctx, F);

    fn ctx(&self) -> Self::Ctx {
        (self.a.ctx(), self.m.clone())
    }
    fn zero(ctx: &Self::Ctx) -> Self {
        QuadExt::embed(F::zero(&ctx.0), &ctx.1)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        QuadExt::embed(F::one(&ctx.0), &ctx.1)
    }
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self {
        QuadExt::embed(F::from_bigint(&ctx.0, n), &ctx.1)
    }
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Option<Self> {
        F::from_rational(&ctx.0, q).map(|a| QuadExt::embed(a, &ctx.1))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.add(&rhs.a), b: self.b.add(&rhs.b), m: self.m.clone() }
    }
    fn sub(&self, rhs: &Self) -> Self {
        QuadExt { a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b), m: self.m.clone() }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let a = self.a.mul(&rhs.a).add(&self.m.mul(&self.b).mul(&rhs.b));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        QuadExt { a, b, m: self.m.clone() }
    }
    fn neg(&self) -> Self {
        QuadExt { a: self.a.neg(), b: self.b.neg(), m: self.m.clone() }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Some(QuadExt { a: c.a.mul(&n), b: c.b.mul(&n), m: self.m.clone() })
    }
    fn characteristic(ctx: &Self::Ctx) -> u64 {
        F::characteristic(&ctx.0)
    }
    fn domain_name(ctx: &Self::Ctx) -> String {
        format!("{}[sqrt({})]", F::domain_name(&ctx.0), ctx.1)
    }
    fn is_negative(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            false
        }
    }
    fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt() {
                return Some(QuadExt::embed(r, &self.m));
            }
            // a = m * c^2  =>  sqrt(a) = c*sqrt(m)
            let c2 = self.a.div(&self.m)?;
            let c = c2.sqrt()?;
            return Some(QuadExt { a: F::zero(&c.ctx()), b: c, m: self.m.clone() });
        }
        // (x + y s)^2 = a + b s  with  x^2 = (a + sqrt(norm)) / 2
        let two = F::from_i64(&self.a.ctx(), 2);
        let nr = self.norm().sqrt()?;
        for cand in [self.a.add(&nr), self.a.sub(&nr)] {
            let x2 = cand.div(&two)?;
            if let Some(x) = x2.sqrt() {
                if x.is_zero() {
                    continue;
                }
                let y = self.b.div(&two.mul(&x))?;
                let r = QuadExt { a: x, b: y, m: self.m.clone() };
                if r.mul(&r) == *self {
                    return Some(r);
                }
            }
        }
        None
    }
    fn is_compound(&self) -> bool {
        !self.b.is_zero()
    }
}

/// Runtime tag selecting the coefficient domain of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Prime(u32),
}

impl Domain {
    pub const DEFAULT_MODULUS: u32 = 32003;

    pub fn prime(p: u32) -> Result<Self, PolyError> {
        if is_prime(p as u64) {
            Ok(Domain::Prime(p))
        } else {
            Err(PolyError::NotPrime(p as u64))
        }
    }

    pub fn name(&self) -> String {
        match self {
            Domain::Rational => "QQ".into(),
            Domain::Prime(p) => format!("ZZ/{}", p),
        }
    }
}

impl Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Convenience constructor for rationals from small integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/m"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Syntax { pos: 0, msg: format!("not a rational number: {:?}", s) };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(PolyError::NonUnitDivision);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
