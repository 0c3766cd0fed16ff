use std::sync::Arc;

use crate::groebner::{GbConfig, Ideal};
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial, QuadExt, Ring, Term};

use super::univariate::UniPoly;
use super::{quartic_ring, ConicClass, ConicFactors, ConicPairReport, LinesError, PlaneQuartic};

/// Degree-two monomials of `F[a, b, c]` in decreasing order.
fn quadric_monomials<F: Field>(ring: &Arc<Ring<F>>) -> Vec<Monomial> {
    let mut mons: Vec<Monomial> = (0..3)
        .flat_map(|i| (i..3).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut e = [0u16; 3];
            e[i] += 1;
            e[j] += 1;
            Monomial::from_exponents(&e)
        })
        .collect();
    mons.sort_by(|x, y| ring.cmp(y, x));
    mons
}

/// Whether `p` is a homogeneous quadric in three variables.
fn is_conic<F: Field>(p: &Polynomial<F>) -> bool {
    p.ring().nvars() == 3 && p.degree() == Some(2) && p.is_homogeneous()
}

/// Determinant of the symmetric matrix of a conic, up to the factor 2.
pub fn conic_discriminant<F: Field>(q: &Polynomial<F>) -> F {
    let coef = |i: usize, j: usize| {
        let mut e = [0u16; 3];
        e[i] += 1;
        e[j] += 1;
        let c = q.coefficient(&Monomial::from_exponents(&e));
        if i == j {
            c.add(&c)
        } else {
            c
        }
    };
    let m: Vec<Vec<F>> = (0..3).map(|i| (0..3).map(|j| coef(i.min(j), i.max(j))).collect()).collect();
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]));
    m[0][0].mul(&minor(1, 2, 1, 2)).sub(&m[0][1].mul(&minor(1, 2, 0, 2))).add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

pub fn is_irreducible_conic<F: Field>(q: &Polynomial<F>) -> bool {
    is_conic(q) && !conic_discriminant(q).is_zero()
}

/// Square root of a polynomial up to a scalar: `Q` monic with `p = c·Q²`.
pub fn sqrt_poly<F: Field>(p: &Polynomial<F>) -> Option<Polynomial<F>> {
    let p = p.monic();
    let lt = p.leading_term()?;
    if lt.mon.exponents().iter().any(|e| e % 2 == 1) {
        return None;
    }
    let ring = p.ring();
    let half = Monomial::from_exponents(&lt.mon.exponents().iter().map(|e| e / 2).collect::<Vec<_>>());
    let lead = Term { coeff: F::one(ring.ctx()), mon: half.clone() };
    let two = F::from_i64(ring.ctx(), 2);
    let mut root = Polynomial::from_terms(ring, vec![lead]);
    for _ in 0..=p.len() + 8 {
        let r = &p - &(&root * &root);
        let Some(t) = r.leading_term() else { return Some(root) };
        let mon = t.mon.checked_div(&half)?;
        if ring.cmp(&mon, &half) != std::cmp::Ordering::Less {
            return None;
        }
        let coeff = t.coeff.div(&two)?;
        root = &root + &ring.monomial(coeff, mon);
    }
    None
}

enum Split<G: Field> {
    Found(Polynomial<G>, Polynomial<G>),
    None,
    /// A root of `x² = m` is needed and does not exist in the field.
    NeedRoot(G),
}

/// Tries `q = Q₁·Q₂` with `Q₁` monic of leading monomial `mons[lead]`,
/// trying leading monomials from the top.
fn split_over<G: Field>(q: &Polynomial<G>, cfg: &GbConfig) -> Result<Split<G>, LinesError> {
    let ring = q.ring();
    let ctx = ring.ctx();
    let mons = quadric_monomials(ring);
    for lead in 0..mons.len() {
        let nx = mons.len() - lead - 1;
        let names: Vec<String> = (0..nx).map(|k| format!("x{}", k)).chain((0..6).map(|k| format!("y{}", k))).collect();
        let u = Ring::new(&names, MonomialOrder::Grevlex, ctx.clone());
        let q1: Vec<Polynomial<G>> = (0..6)
            .map(|i| match i.cmp(&lead) {
                std::cmp::Ordering::Less => u.zero(),
                std::cmp::Ordering::Equal => u.one(),
                std::cmp::Ordering::Greater => u.var(i - lead - 1),
            })
            .collect();
        let y: Vec<Polynomial<G>> = (0..6).map(|j| u.var(nx + j)).collect();
        let mut eqs: std::collections::BTreeMap<Vec<u16>, Polynomial<G>> = std::collections::BTreeMap::new();
        for i in 0..6 {
            for j in 0..6 {
                let mon = mons[i].mul(&mons[j]);
                let e = eqs.entry(mon.exponents().to_vec()).or_insert_with(|| u.zero());
                *e = &*e + &(&q1[i] * &y[j]);
            }
        }
        let gens: Vec<Polynomial<G>> =
            eqs.into_iter().map(|(e, lhs)| &lhs - &u.constant(q.coefficient(&Monomial::from_exponents(&e)))).collect();
        let mut ideal = Ideal::new(&u, gens)?.groebner(cfg)?;
        if ideal.is_unit()? {
            continue;
        }
        // fix one variable at a time, from the last
        let mut values: Vec<Option<G>> = vec![None; u.nvars()];
        for v in (0..u.nvars()).rev() {
            let uni = min_poly(&ideal, v)?;
            let sq = uni.squarefree();
            let linear = sq.iter().find(|(_, g)| g.degree() == Some(1));
            let root = if let Some((_, g)) = linear {
                g.coeffs[0].neg()
            } else if let Some((_, g)) = sq.iter().find(|(_, g)| g.degree() == Some(2)) {
                // monic x² + p x + r
                let (p, r) = (&g.coeffs[1], &g.coeffs[0]);
                let disc = p.mul(p).sub(&r.mul(&G::from_i64(ctx, 4)));
                match disc.sqrt() {
                    Some(s) => s.sub(p).div(&G::from_i64(ctx, 2)).unwrap(),
                    None => return Ok(Split::NeedRoot(disc)),
                }
            } else {
                return Err(LinesError::Undetermined(format!("eliminant of degree {}", uni.degree().unwrap_or(0))));
            };
            ideal = ideal.with_gens([&u.var(v) - &u.constant(root.clone())])?.groebner(cfg)?;
            values[v] = Some(root);
        }
        let vals: Vec<G> = values.into_iter().map(|v| v.unwrap()).collect();
        let build = |coeffs: Vec<G>| {
            let terms = coeffs.into_iter().zip(&mons).map(|(c, m)| Term { coeff: c, mon: m.clone() }).collect();
            Polynomial::from_terms(ring, terms)
        };
        let c1: Vec<G> = q1.iter().map(|p| p.evaluate(&vals)).collect();
        let c2: Vec<G> = y.iter().map(|p| p.evaluate(&vals)).collect();
        let (f1, f2) = (build(c1), build(c2));
        if &(&f1 * &f2) != q {
            return Err(LinesError::Undetermined("product check failed".into()));
        }
        return Ok(Split::Found(f1, f2));
    }
    Ok(Split::None)
}

/// Largest degree tried for a minimal polynomial.
const MAX_MIN_POLY: usize = 24;

/// Minimal polynomial of variable `v` modulo a zero-dimensional ideal with
/// a basis: the first linear dependency among the normal forms of `v^k`.
fn min_poly<G: Field>(ideal: &Ideal<G>, v: usize) -> Result<UniPoly<G>, LinesError> {
    let ring = ideal.ring();
    let ctx = ring.ctx();
    let mut forms: Vec<Polynomial<G>> = vec![ideal.normal_form(&ring.one())?];
    let mut power = ring.one();
    for _ in 0..MAX_MIN_POLY {
        power = ideal.normal_form(&(&power * &ring.var(v)))?;
        forms.push(power.clone());
        let mut mons: Vec<Monomial> = forms.iter().flat_map(|f| f.terms().iter().map(|t| t.mon.clone())).collect();
        mons.sort_by(|x, y| ring.cmp(y, x));
        mons.dedup();
        // columns are the powers, rows the monomials
        let rows: Vec<Vec<G>> = mons.iter().map(|m| forms.iter().map(|f| f.coefficient(m)).collect()).collect();
        let ker = crate::linalg::kernel(&rows, forms.len(), ctx);
        if let Some(k) = ker.first() {
            return Ok(UniPoly::new(k.clone()));
        }
    }
    Err(LinesError::Undetermined(format!("no eliminant in {}", ring.name(v))))
}

fn embed<F: Field>(p: &Polynomial<F>, m: &F) -> Polynomial<QuadExt<F>> {
    let ctx = (p.ring().ctx().clone(), m.clone());
    let ring = Ring::new(p.ring().names(), p.ring().order().clone(), ctx);
    let terms =
        p.terms().iter().map(|t| Term { coeff: QuadExt::embed(t.coeff.clone(), m), mon: t.mon.clone() }).collect();
    Polynomial::from_terms(&ring, terms)
}

/// Factors a quartic as a product of two conics, over the base field or a
/// single quadratic extension. `Ok(None)` means no such factorization
/// exists over any extension.
pub fn conic_pair_split<F: Field>(q: &PlaneQuartic<F>, cfg: &GbConfig) -> Result<Option<ConicFactors<F>>, LinesError> {
    let p = q.poly.monic();
    match split_over(&p, cfg)? {
        Split::Found(a, b) => Ok(Some(ConicFactors::Base(a, b))),
        Split::None => Ok(None),
        Split::NeedRoot(m) => match split_over(&embed(&p, &m), cfg)? {
            Split::Found(a, b) => Ok(Some(ConicFactors::Extension { m, factors: (a, b) })),
            Split::None => Err(LinesError::Undetermined("no split after extension".into())),
            Split::NeedRoot(m2) => Err(LinesError::Undetermined(format!("second extension by sqrt({}) needed", m2))),
        },
    }
}

/// Linear changes of coordinates tried in order when projecting.
const CHANGES: [[[i64; 3]; 3]; 6] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 1], [0, 1, 2], [0, 0, 1]],
    [[1, 2, 0], [3, 1, 5], [2, 7, 1]],
    [[1, 0, 0], [5, 1, 0], [3, 11, 1]],
    [[2, 1, 3], [1, 4, 1], [7, 1, 2]],
    [[1, 3, 2], [2, 1, 9], [5, 13, 1]],
];

/// Local intersection multiplicities of two distinct irreducible conics,
/// largest first.
///
/// The conics are projected from a point off both of them; the resultant
/// in the projection direction is a binary quartic whose root
/// multiplicities are the local intersection numbers unless two
/// intersection points share a fibre. Several projections are compared
/// and the one separating the most roots is used.
pub fn tangency_profile<G: Field>(q1: &Polynomial<G>, q2: &Polynomial<G>) -> Result<Vec<u32>, LinesError> {
    if !is_conic(q1) || !is_conic(q2) {
        return Err(LinesError::NotConic);
    }
    if !is_irreducible_conic(q1) || !is_irreducible_conic(q2) {
        return Err(LinesError::ReducibleConic);
    }
    if q1.equals_up_to_scalar(q2) {
        return Err(LinesError::SameConic);
    }
    let ring = q1.ring();
    let ctx = ring.ctx();
    let mut best: Option<Vec<u32>> = None;
    for g in CHANGES {
        let images: Vec<Polynomial<G>> = g
            .iter()
            .map(|row| (0..3).fold(ring.zero(), |acc, k| &acc + &ring.var(k).scale(&G::from_i64(ctx, row[k]))))
            .collect();
        let (p1, p2) = (q1.substitute(ring, &images), q2.substitute(ring, &images));
        // coefficients of c², c, 1 as polynomials in a with b = 1
        let parts = |p: &Polynomial<G>| -> [UniPoly<G>; 3] {
            let mut out = [vec![G::zero(ctx); 3], vec![G::zero(ctx); 3], vec![G::zero(ctx); 3]];
            for t in p.terms() {
                out[2 - t.mon.exp(2) as usize][t.mon.exp(0) as usize] = t.coeff.clone();
            }
            out.map(UniPoly::new)
        };
        let [a1, b1, c1] = parts(&p1);
        let [a2, b2, c2] = parts(&p2);
        if a1.degree() != Some(0) || a2.degree() != Some(0) {
            continue;
        }
        let x = a1.mul(&c2).sub(&c1.mul(&a2));
        let y = a1.mul(&b2).sub(&b1.mul(&a2));
        let z = b1.mul(&c2).sub(&c1.mul(&b2));
        let res = x.mul(&x).sub(&y.mul(&z));
        if res.degree() != Some(4) {
            continue;
        }
        let prof = res.root_multiplicities();
        let done = prof.len() == 4;
        if best.as_ref().map(|b| prof.len() > b.len()).unwrap_or(true) {
            best = Some(prof);
        }
        if done {
            break;
        }
    }
    best.ok_or_else(|| LinesError::Undetermined("no admissible projection".into()))
}

fn class_of(profile: &[u32]) -> ConicClass {
    match profile {
        [2, 2] => ConicClass::TangentAtTwoPoints,
        [4] | [3, 1] => ConicClass::TangentAtOnePoint,
        _ => ConicClass::TransverseOrOther,
    }
}

fn classify_pair<G: Field>(f1: &Polynomial<G>, f2: &Polynomial<G>) -> Result<(ConicClass, Vec<u32>), LinesError> {
    if !is_irreducible_conic(f1) || !is_irreducible_conic(f2) {
        return Ok((ConicClass::TransverseOrOther, vec![]));
    }
    if f1.equals_up_to_scalar(f2) {
        return Ok((ConicClass::DoubleConic, vec![]));
    }
    let prof = tangency_profile(f1, f2)?;
    Ok((class_of(&prof), prof))
}

/// Double conic, tangent pair, other pair, or no conic splitting at all.
pub fn classify<F: Field>(q: &PlaneQuartic<F>, cfg: &GbConfig) -> Result<ConicPairReport<F>, LinesError> {
    if let Some(root) = sqrt_poly(&q.poly) {
        let class = if is_irreducible_conic(&root) { ConicClass::DoubleConic } else { ConicClass::TransverseOrOther };
        return Ok(ConicPairReport { class, factors: Some(ConicFactors::Base(root.clone(), root)), profile: vec![] });
    }
    let Some(factors) = conic_pair_split(q, cfg)? else {
        return Ok(ConicPairReport { class: ConicClass::Irreducible, factors: None, profile: vec![] });
    };
    let (class, profile) = match &factors {
        ConicFactors::Base(a, b) => classify_pair(a, b)?,
        ConicFactors::Extension { factors: (a, b), .. } => classify_pair(a, b)?,
    };
    Ok(ConicPairReport { class, factors: Some(factors), profile })
}

impl<F: Field> PlaneQuartic<F> {
    /// The quartic after the coordinate swap `b ↔ c`.
    pub fn swap_bc(&self) -> Self {
        let r = quartic_ring::<F>(self.poly.ring().ctx());
        let images = vec![r.var(0), r.var(2), r.var(1)];
        PlaneQuartic::new(self.poly.substitute(&r, &images)).expect("quartic")
    }
}
