//! Three-dimensional spaces of 2-forms that seed the genus-12 threefolds.

use num_rational::BigRational;

use crate::exterior::{blade, MultiVector};
use crate::linalg::rank;
use crate::polycore::{format_rational, Field, Polynomial, Ring};

use super::MukaiError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Basis of torus weights −1, 0, +1, in that order.
    Torus,
    /// Invariant under the additive group acting through [`super::cplus_matrix`].
    Additive,
    Generic,
}

#[derive(Clone, Debug)]
pub struct InvariantPlane<F: Field> {
    pub forms: [MultiVector<F>; 3],
    pub symmetry: Symmetry,
    /// Parameter of the canonical torus family, when the plane comes from it.
    pub d: Option<BigRational>,
}

fn form<F: Field>(terms: &[(usize, usize, F)]) -> MultiVector<F> {
    MultiVector::from_terms(2, terms.iter().map(|(i, j, c)| (vec![*i, *j], c.clone())).collect())
        .expect("indices below seven")
}

/// The torus-invariant plane of the canonical family with parameter `d`:
///
/// * weight −1: `x0x5 + x1x4 + x2x3`
/// * weight  0: `−d x0x6 + x1x5 + x2x4`
/// * weight +1: `x1x6 + x2x5 + x3x4`
///
/// where `xixj` stands for `e_i ∧ e_j`.
pub fn canonical_plane<F: Field>(d: &BigRational, ctx: &F::Ctx) -> Result<InvariantPlane<F>, MukaiError> {
    let dv = F::from_rational(ctx, d).ok_or_else(|| MukaiError::NotRepresentable(format_rational(d)))?;
    let one = F::one(ctx);
    let minus = form(&[(0, 5, one.clone()), (1, 4, one.clone()), (2, 3, one.clone())]);
    let zero = form(&[(0, 6, dv.neg()), (1, 5, one.clone()), (2, 4, one.clone())]);
    let plus = form(&[(1, 6, one.clone()), (2, 5, one.clone()), (3, 4, one)]);
    Ok(InvariantPlane { forms: [minus, zero, plus], symmetry: Symmetry::Torus, d: Some(d.clone()) })
}

/// The plane in whose coordinates the fixed-divisor equations are tabulated:
///
/// * weight −1: `x0x5 + x1x4 + x2x3`
/// * weight  0: `−(1/d) x0x6 + x1x5 − d x2x4`
/// * weight +1: `x1x6 − d x2x5 − d x3x4`
///
/// It is `canonical_plane(1/d)` after the diagonal substitution
/// `e_i ↦ λ_i e_i` with `λ = (−1/d, −1/d, 1, 1, −d, −d, −d)`, so its modulus
/// is `−1/d`. Undefined at `d = 0`.
pub fn divisor_frame_plane<F: Field>(d: &BigRational, ctx: &F::Ctx) -> Result<InvariantPlane<F>, MukaiError> {
    let dv = F::from_rational(ctx, d).ok_or_else(|| MukaiError::NotRepresentable(format_rational(d)))?;
    let inv = dv.inv().ok_or_else(|| MukaiError::NotRepresentable(format!("1/{}", format_rational(d))))?;
    let one = F::one(ctx);
    let minus = form(&[(0, 5, one.clone()), (1, 4, one.clone()), (2, 3, one.clone())]);
    let zero = form(&[(0, 6, inv.neg()), (1, 5, one.clone()), (2, 4, dv.neg())]);
    let plus = form(&[(1, 6, one), (2, 5, dv.neg()), (3, 4, dv.neg())]);
    Ok(InvariantPlane { forms: [minus, zero, plus], symmetry: Symmetry::Torus, d: Some(d.clone()) })
}

/// A torus-invariant plane with arbitrary coefficients on the nine admissible
/// basis 2-forms. `minus`, `zero`, `plus` list coefficients on
/// `(x2x3, x1x4, x0x5)`, `(x2x4, x1x5, x0x6)` and `(x3x4, x2x5, x1x6)`.
pub fn torus_plane<F: Field>(minus: [F; 3], zero: [F; 3], plus: [F; 3]) -> InvariantPlane<F> {
    let [a, b, c] = minus;
    let [p, q, r] = zero;
    let [x, y, z] = plus;
    InvariantPlane {
        forms: [
            form(&[(2, 3, a), (1, 4, b), (0, 5, c)]),
            form(&[(2, 4, p), (1, 5, q), (0, 6, r)]),
            form(&[(3, 4, x), (2, 5, y), (1, 6, z)]),
        ],
        symmetry: Symmetry::Torus,
        d: None,
    }
}

/// The additive-group invariant plane.
pub fn additive_plane<F: Field>(ctx: &F::Ctx) -> InvariantPlane<F> {
    let c = |n: i64| F::from_i64(ctx, n);
    let w1 = form(&[(1, 6, c(1)), (2, 5, c(-5)), (3, 4, c(10)), (5, 6, c(1))]);
    let w2 =
        form(&[(0, 6, c(1)), (1, 5, c(-4)), (2, 4, c(5)), (3, 6, c(2)), (4, 5, c(-6)), (4, 6, c(1)), (5, 6, c(2))]);
    let w3 = form(&[
        (0, 5, c(1)),
        (1, 4, c(-5)),
        (2, 3, c(10)),
        (2, 6, c(1)),
        (3, 5, c(-2)),
        (3, 6, c(1)),
        (4, 5, c(-2)),
        (4, 6, c(1)),
        (5, 6, c(1)),
    ]);
    InvariantPlane { forms: [w1, w2, w3], symmetry: Symmetry::Additive, d: None }
}

fn coeff<F: Field>(w: &MultiVector<F>, i: usize, j: usize, ctx: &F::Ctx) -> F {
    w.coeff(blade(&[i, j])).cloned().unwrap_or_else(|| F::zero(ctx))
}

/// The square-root-free modulus of a torus-invariant plane,
/// `c₊(x2x5) c₀(x0x6) c₋(x1x4) / (c₊(x1x6) c₀(x2x4) c₋(x0x5))` where `c₋, c₀, c₊`
/// read coefficients of the forms of weight −1, 0, +1.
pub fn modulus_tau<F: Field>(plane: &InvariantPlane<F>, ctx: &F::Ctx) -> Result<F, MukaiError> {
    if plane.symmetry != Symmetry::Torus {
        return Err(MukaiError::NotTorusInvariant);
    }
    let [minus, zero, plus] = &plane.forms;
    let num = [coeff(plus, 2, 5, ctx), coeff(zero, 0, 6, ctx), coeff(minus, 1, 4, ctx)];
    let den = [coeff(plus, 1, 6, ctx), coeff(zero, 2, 4, ctx), coeff(minus, 0, 5, ctx)];
    if num.iter().chain(&den).any(|c| c.is_zero()) {
        return Err(MukaiError::ZeroCoefficient);
    }
    let n = num.iter().fold(F::one(ctx), |a, c| a.mul(c));
    let d = den.iter().fold(F::one(ctx), |a, c| a.mul(c));
    Ok(n.div(&d).unwrap())
}

impl<F: Field> InvariantPlane<F> {
    /// Whether the three forms are linearly independent.
    pub fn is_independent(&self, ctx: &F::Ctx) -> bool {
        let rows: Vec<Vec<F>> = self
            .forms
            .iter()
            .map(|w| {
                (0u8..128)
                    .filter(|m| m.count_ones() == 2)
                    .map(|b| w.coeff(b).cloned().unwrap_or_else(|| F::zero(ctx)))
                    .collect()
            })
            .collect();
        rank(&rows) == 3
    }

    /// The plane after `e_i ↦ λ_i e_i`.
    pub fn rescaled(&self, lambda: &[F]) -> Self {
        let forms = self.forms.clone().map(|w| {
            let terms = w
                .terms()
                .map(|(b, c)| {
                    let idx = crate::exterior::blade_indices(b);
                    let s = idx.iter().fold(c.clone(), |acc, &i| acc.mul(&lambda[i]));
                    (idx, s)
                })
                .collect();
            MultiVector::from_terms(2, terms).expect("grade two")
        });
        InvariantPlane { forms, symmetry: self.symmetry, d: None }
    }

    /// Torus weights of the three forms.
    pub fn weights(&self) -> Vec<Option<i32>> {
        self.forms.iter().map(|w| w.torus_weight().ok()).collect()
    }
}

/// The additive one-parameter group on `C^7`:
/// `M(t)_{ij} = C(6-i, j-i) t^(j-i)` for `i <= j`, zero below the diagonal.
/// Entries are polynomials in variable `t` of `ring`.
pub fn cplus_matrix<F: Field>(ring: &std::sync::Arc<Ring<F>>, t: usize) -> Vec<Vec<Polynomial<F>>> {
    let ctx = ring.ctx();
    (0..7)
        .map(|i| {
            (0..7)
                .map(|j| {
                    if j < i {
                        ring.zero()
                    } else {
                        let c = binomial((6 - i) as u64, (j - i) as u64);
                        ring.var(t).pow((j - i) as u32).scale(&F::from_i64(ctx, c as i64))
                    }
                })
                .collect()
        })
        .collect()
}

/// `M(t)` at a scalar value.
pub fn cplus_matrix_at<F: Field>(t: &F, ctx: &F::Ctx) -> Vec<Vec<F>> {
    (0..7)
        .map(|i| {
            (0..7)
                .map(|j| {
                    if j < i {
                        F::zero(ctx)
                    } else {
                        F::from_i64(ctx, binomial((6 - i) as u64, (j - i) as u64) as i64).mul(&t.pow((j - i) as u64))
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Induced action on 2-forms of the substitution `e_i ↦ Σ_j m[i][j] e_j`.
pub fn act_on_two_form<C: crate::polycore::CoeffRing>(
    m: &[Vec<C>],
    w: &MultiVector<C>,
) -> Result<MultiVector<C>, MukaiError> {
    let image = |i: usize| -> Result<MultiVector<C>, MukaiError> {
        let terms = (0..7).filter(|&j| !m[i][j].is_zero()).map(|j| (vec![j], m[i][j].clone())).collect();
        Ok(MultiVector::from_terms(1, terms)?)
    };
    let mut acc = MultiVector::zero(2);
    for (b, c) in w.terms() {
        let idx = crate::exterior::blade_indices(b);
        let prod = image(idx[0])?.wedge(&image(idx[1])?)?;
        acc = acc.add(&prod.scale(c));
    }
    Ok(acc)
}
