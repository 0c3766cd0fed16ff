use std::collections::BTreeMap;

use crate::exterior::{blade, blade_weight, wedge_sign, MultiVector, TOP};
use crate::grassmann::{echelon_basis, pluecker_ideal, solve_linear, GrassmannIdeal, LinearSection, PlueckerRing};
use crate::groebner::Ideal;
use crate::polycore::{Field, Monomial, Polynomial, Term};

use super::{InvariantPlane, MukaiError, Symmetry};

/// Coordinates kept free when solving the linear section, in priority order.
/// They carry the distinct torus weights 6, -6, 3, 4, 5, -5, -4, -3, so for
/// torus-invariant planes none of them is ever a pivot.
pub(crate) const PREFERRED_FREE: [&str; 8] =
    ["p_3456", "p_0123", "p_1356", "p_1456", "p_2456", "p_0124", "p_0125", "p_0135"];

/// A genus-12 threefold as a linear section of `G(4,7)` in 14 coordinates.
#[derive(Clone, Debug)]
pub struct V12<F: Field> {
    pub grass: GrassmannIdeal<F>,
    /// The 21 linear forms on `Λ^4`.
    pub forms: Vec<Polynomial<F>>,
    pub section: LinearSection<F>,
    /// Quadrics in the free coordinates of `section`.
    pub ideal: Ideal<F>,
}

/// Torus weight of the Plücker coordinate with the given index set.
pub fn coordinate_weight(indices: &[usize]) -> i32 {
    blade_weight(blade(indices))
}

/// The 21 forms `α ↦ ⟨α, ω ∧ e_i⟩` together with their rank.
pub fn linear_section<F: Field>(
    plane: &InvariantPlane<F>,
    coords: &PlueckerRing<F>,
) -> Result<(Vec<Polynomial<F>>, usize), MukaiError> {
    let ctx = coords.ring.ctx();
    let nv = coords.len();
    let mut forms = Vec::with_capacity(21);
    for w in &plane.forms {
        for i in 0..7 {
            let three = w.wedge(&MultiVector::basis(i, ctx)?)?;
            let terms: Vec<Term<F>> = three
                .terms()
                .map(|(b, c)| {
                    let a = TOP ^ b;
                    let idx = coords.index_of(&crate::exterior::blade_indices(a)).unwrap();
                    let v = if wedge_sign(a, b) < 0 { c.neg() } else { c.clone() };
                    Term { coeff: v, mon: Monomial::var(nv, idx, 1) }
                })
                .collect();
            forms.push(Polynomial::from_terms(&coords.ring, terms));
        }
    }
    let r = solve_linear(&coords.ring, &forms, &[]).rank;
    Ok((forms, r))
}

/// The Plücker quadrics restricted to the linear section, reduced to a
/// basis of their span.
pub fn v12_ideal<F: Field>(plane: &InvariantPlane<F>, ctx: &F::Ctx) -> Result<V12<F>, MukaiError> {
    let grass = pluecker_ideal::<F>(4, 7, ctx.clone())?;
    let (forms, rank) = linear_section(plane, &grass.coords)?;
    if rank != 21 {
        return Err(MukaiError::RankDeficient { expected: 21, found: rank });
    }
    let ring = &grass.coords.ring;
    let preferred: Vec<usize> = PREFERRED_FREE.iter().map(|n| ring.index_of(n).unwrap()).collect();
    let section = solve_linear(ring, &forms, &preferred);
    let pulled: Vec<Polynomial<F>> =
        grass.ideal.gens().iter().map(|q| section.pull(q)).filter(|q| !q.is_zero()).collect();
    let quadrics = echelon_basis(&section.ring, &pulled);
    let ideal = Ideal::new(&section.ring, quadrics)?;
    Ok(V12 { grass, forms, section, ideal })
}

/// Dimensions of the weight spaces of the 14 surviving coordinates.
pub fn fixed_divisor_spectrum<F: Field>(
    plane: &InvariantPlane<F>,
    ctx: &F::Ctx,
) -> Result<BTreeMap<i32, usize>, MukaiError> {
    if plane.symmetry != Symmetry::Torus {
        return Err(MukaiError::NotTorusInvariant);
    }
    let coords = PlueckerRing::<F>::new(4, 7, ctx.clone())?;
    let (forms, rank) = linear_section(plane, &coords)?;
    if rank != 21 {
        return Err(MukaiError::RankDeficient { expected: 21, found: rank });
    }
    let weight_of = |v: usize| coordinate_weight(&coords.subsets[v]);
    let mut by_weight: BTreeMap<i32, Vec<Polynomial<F>>> = BTreeMap::new();
    for f in forms.into_iter().filter(|f| !f.is_zero()) {
        let w = weight_of(f.support()[0]);
        if f.support().iter().any(|&v| weight_of(v) != w) {
            return Err(MukaiError::NotTorusInvariant);
        }
        by_weight.entry(w).or_default().push(f);
    }
    let mut out = BTreeMap::new();
    for v in 0..coords.len() {
        *out.entry(weight_of(v)).or_insert(0usize) += 1;
    }
    for (w, fs) in by_weight {
        let r = solve_linear(&coords.ring, &fs, &[]).rank;
        *out.get_mut(&w).unwrap() -= r;
    }
    out.retain(|_, n| *n > 0);
    Ok(out)
}
