use std::sync::Arc;

use crate::exterior::{blade_indices, MultiVector};
use crate::grassmann::PlueckerRing;
use crate::mukai::{linear_section, InvariantPlane, MukaiError};
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial, Ring, Term};

use super::{LinesError, PlaneQuartic};

/// The ring `F[a, b, c]` of plane quartics, graded reverse lexicographic.
pub fn quartic_ring<F: Field>(ctx: &F::Ctx) -> Arc<Ring<F>> {
    Ring::new(&["a", "b", "c"], MonomialOrder::Grevlex, ctx.clone())
}

/// `(a² + bc)(t a² + bc)`.
pub fn gamma_quartic<F: Field>(t: &F, ctx: &F::Ctx) -> PlaneQuartic<F> {
    let r = quartic_ring::<F>(ctx);
    let (a, b, c) = (r.var(0), r.var(1), r.var(2));
    let bc = &b * &c;
    let a2 = &a * &a;
    let p = &(&a2 + &bc) * &(&a2.scale(t) + &bc);
    PlaneQuartic::new(p).expect("quartic")
}

/// Skew-symmetric matrix of a 2-form, `M[i][j] = coefficient of e_i ∧ e_j`.
pub fn skew_matrix<F: Field>(w: &MultiVector<F>, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut m = vec![vec![F::zero(ctx); 7]; 7];
    for (b, c) in w.terms() {
        let idx = blade_indices(b);
        m[idx[0]][idx[1]] = c.clone();
        m[idx[1]][idx[0]] = c.neg();
    }
    m
}

/// Pfaffian of the principal submatrix on `idx`, by expansion along the first row.
pub fn pfaffian<F: Field>(m: &[Vec<Polynomial<F>>], idx: &[usize], ring: &Arc<Ring<F>>) -> Polynomial<F> {
    if idx.is_empty() {
        return ring.one();
    }
    let first = idx[0];
    let mut acc = ring.zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        if m[first][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let term = &m[first][j] * &pfaffian(m, &rest, ring);
        acc = if pos % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The plane quartic in `P(L*)` swept out by lines on the threefold.
///
/// `(a, b, c)` is the dual basis of the three forms of `plane`, in order.
/// A line of `G(4,7)` is a flag `T₀ ⊂ T₁ ⊂ W*` of dimensions 2 and 4 with
/// `ω(T₀, T₁) = 0` for all `ω ∈ L`; then `T₁` is isotropic for the pencil
/// `K = ker(a, b, c)`, which forces it to be the span of the kernels of
/// the forms in `K`. Such a `T₀` exists exactly when the remaining form
/// restricted to `T₁` is degenerate, i.e. has vanishing Pfaffian.
pub fn lines_quartic<F: Field>(plane: &InvariantPlane<F>, ctx: &F::Ctx) -> Result<PlaneQuartic<F>, LinesError> {
    let coords = PlueckerRing::<F>::new(4, 7, ctx.clone()).map_err(MukaiError::from)?;
    let (_, rank) = linear_section(plane, &coords)?;
    if rank != 21 {
        return Err(MukaiError::RankDeficient { expected: 21, found: rank }.into());
    }
    let r5 = Ring::new(&["a", "b", "c", "s", "t"], MonomialOrder::Grevlex, ctx.clone());
    let mats: Vec<Vec<Vec<F>>> = plane.forms.iter().map(|w| skew_matrix(w, ctx)).collect();
    let (a, b, c, s, t) = (r5.var(0), r5.var(1), r5.var(2), r5.var(3), r5.var(4));
    // s (b ω₋₁ − a ω₀) + t (c ω₀ − b ω₊₁)
    let entry = |i: usize, j: usize| {
        let al = &b.scale(&mats[0][i][j]) - &a.scale(&mats[1][i][j]);
        let be = &c.scale(&mats[1][i][j]) - &b.scale(&mats[2][i][j]);
        &(&s * &al) + &(&t * &be)
    };
    let pencil: Vec<Vec<Polynomial<F>>> = (0..7).map(|i| (0..7).map(|j| entry(i, j)).collect()).collect();
    let kernel: Vec<Polynomial<F>> = (0..7)
        .map(|i| {
            let rest: Vec<usize> = (0..7).filter(|&k| k != i).collect();
            let p = pfaffian(&pencil, &rest, &r5);
            if i % 2 == 0 {
                p
            } else {
                -p
            }
        })
        .collect();

    // the kernel curve is a cubic in (s, t); its four coefficient vectors span T₁
    let r3 = super::quartic::quartic_ring::<F>(ctx);
    let span: Vec<Vec<Polynomial<F>>> = (0..4)
        .map(|e| {
            kernel
                .iter()
                .map(|k| {
                    let terms = k
                        .terms()
                        .iter()
                        .filter(|tm| tm.mon.exp(3) as usize == 3 - e && tm.mon.exp(4) as usize == e)
                        .map(|tm| Term {
                            coeff: tm.coeff.clone(),
                            mon: Monomial::from_exponents(&[tm.mon.exp(0), tm.mon.exp(1), tm.mon.exp(2)]),
                        })
                        .collect();
                    Polynomial::from_terms(&r3, terms)
                })
                .collect()
        })
        .collect();

    // ω₀ restricted to T₁; it lies outside K wherever b ≠ 0
    let m0 = &mats[1];
    let applied: Vec<Vec<Polynomial<F>>> = span
        .iter()
        .map(|v| {
            (0..7)
                .map(|p| {
                    (0..7)
                        .fold(r3.zero(), |acc, q| if m0[p][q].is_zero() { acc } else { &acc + &v[q].scale(&m0[p][q]) })
                })
                .collect()
        })
        .collect();
    let gram = |i: usize, j: usize| (0..7).fold(r3.zero(), |acc, p| &acc + &(&span[i][p] * &applied[j][p]));
    let pf = &(&(&gram(0, 1) * &gram(2, 3)) - &(&gram(0, 2) * &gram(1, 3))) + &(&gram(0, 3) * &gram(1, 2));

    // the pencil basis degenerates along b = 0, contributing b⁸
    let bvar = r3.var(1);
    let mut q = pf;
    for _ in 0..8 {
        q = q.div_exact(&bvar).map_err(|_| LinesError::NotQuartic(q.to_string()))?;
    }
    PlaneQuartic::new(q)
}
