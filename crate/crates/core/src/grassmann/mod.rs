//! Plücker embeddings of Grassmannians and loci cut out by exterior forms.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::exterior::{blade, blade_indices, sort_sign, wedge_sign, Blade, ExteriorError, MultiVector, RANK};
use crate::groebner::{GbError, Ideal};
use crate::linalg::{sparse_rref, SparseRow};
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial, Ring, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("need 1 <= k < n <= 8, got k={0}, n={1}")]
    OutOfRange(usize, usize),
    #[error("the zero form cuts out nothing meaningful")]
    ZeroForm,
    #[error("linear conditions have rank {found}, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// Coordinates `p_I` of `G(k, n)`, enumerated colexicographically.
#[derive(Clone, Debug)]
pub struct PlueckerRing<F: Field> {
    pub k: usize,
    pub n: usize,
    pub subsets: Vec<Vec<usize>>,
    pub ring: Arc<Ring<F>>,
    index: HashMap<Vec<usize>, usize>,
}

pub fn coordinate_name(indices: &[usize]) -> String {
    let digits: String = indices.iter().map(|i| char::from_digit(*i as u32, 10).unwrap()).collect();
    format!("p_{}", digits)
}

fn colex_subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next in colex: find first position that can be bumped
        let mut i = 0;
        while i < k && cur[i] + 1 == if i + 1 < k { cur[i + 1] } else { n } {
            i += 1;
        }
        if i == k {
            break;
        }
        cur[i] += 1;
        for (j, slot) in cur.iter_mut().enumerate().take(i) {
            *slot = j;
        }
    }
    out
}

impl<F: Field> PlueckerRing<F> {
    pub fn new(k: usize, n: usize, ctx: F::Ctx) -> Result<Self, GrassmannError> {
        if !(1 <= k && k < n && n <= 8) {
            return Err(GrassmannError::OutOfRange(k, n));
        }
        let subsets = colex_subsets(k, n);
        let names: Vec<String> = subsets.iter().map(|s| coordinate_name(s)).collect();
        let ring = Ring::new(&names, MonomialOrder::Grevlex, ctx);
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(PlueckerRing { k, n, subsets, ring, index })
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Variable index of a sorted tuple.
    pub fn index_of(&self, sorted: &[usize]) -> Option<usize> {
        self.index.get(sorted).copied()
    }

    /// `p` of an arbitrary tuple as `(sign, variable)`; sign 0 on repeats.
    pub fn signed_coordinate(&self, tuple: &[usize]) -> (i32, Option<usize>) {
        let s = sort_sign(tuple);
        if s == 0 {
            return (0, None);
        }
        let mut sorted = tuple.to_vec();
        sorted.sort_unstable();
        (s, self.index_of(&sorted))
    }

    /// The generic element `Σ p_I e_I` of `Λ^k`, for `n = 7`.
    pub fn generic_vector(&self) -> MultiVector<Polynomial<F>> {
        assert_eq!(self.n, RANK);
        let terms = self.subsets.iter().enumerate().map(|(i, s)| (s.clone(), self.ring.var(i))).collect();
        MultiVector::from_terms(self.k, terms).expect("subsets of the right size")
    }
}

/// Generators of the Plücker ideal in canonical form.
#[derive(Clone, Debug)]
pub struct GrassmannIdeal<F: Field> {
    pub coords: PlueckerRing<F>,
    pub ideal: Ideal<F>,
}

/// The quadratic shuffle relations, deduplicated by row reduction.
///
/// Columns are ordered by decreasing monomial, so the returned quadrics are
/// the reduced row echelon basis of their span: each has a distinct leading
/// monomial that appears in no other generator.
pub fn pluecker_ideal<F: Field>(k: usize, n: usize, ctx: F::Ctx) -> Result<GrassmannIdeal<F>, GrassmannError> {
    let coords = PlueckerRing::<F>::new(k, n, ctx.clone())?;
    let ring = coords.ring.clone();
    let nv = coords.len();
    let mut raw: Vec<Vec<(Monomial, i32)>> = Vec::new();
    for alpha in colex_subsets(k - 1, n) {
        for beta in colex_subsets(k + 1, n) {
            let mut acc: BTreeMap<Vec<u16>, i32> = BTreeMap::new();
            for j in 0..=k {
                let mut left = alpha.clone();
                left.push(beta[j]);
                let (s1, v1) = coords.signed_coordinate(&left);
                if s1 == 0 {
                    continue;
                }
                let right: Vec<usize> = beta.iter().enumerate().filter(|(t, _)| *t != j).map(|(_, b)| *b).collect();
                let (_, v2) = coords.signed_coordinate(&right);
                let sign = if j % 2 == 0 { s1 } else { -s1 };
                let mut e = vec![0u16; nv];
                e[v1.unwrap()] += 1;
                e[v2.unwrap()] += 1;
                *acc.entry(e).or_insert(0) += sign;
            }
            let rel: Vec<(Monomial, i32)> =
                acc.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (Monomial::from_exponents(&e), c)).collect();
            if !rel.is_empty() {
                raw.push(rel);
            }
        }
    }
    let gens = dedupe_quadrics(&ring, raw);
    let ideal = Ideal::new(&ring, gens)?;
    Ok(GrassmannIdeal { coords, ideal })
}

fn dedupe_quadrics<F: Field>(ring: &Arc<Ring<F>>, raw: Vec<Vec<(Monomial, i32)>>) -> Vec<Polynomial<F>> {
    let ctx = ring.ctx();
    let polys: Vec<Polynomial<F>> = raw
        .into_iter()
        .map(|r| {
            let terms = r.into_iter().map(|(mon, c)| Term { coeff: F::from_i64(ctx, c as i64), mon }).collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    echelon_basis(ring, &polys)
}

/// Reduced row echelon basis of the span of `polys`, with columns in
/// decreasing term order. Rows come back ascending by leading term.
pub fn echelon_basis<F: Field>(ring: &Arc<Ring<F>>, polys: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut mons: Vec<Monomial> = polys.iter().flat_map(|f| f.terms().iter().map(|t| t.mon.clone())).collect();
    mons.sort_by(|a, b| ring.cmp(b, a));
    mons.dedup();
    let col: HashMap<&Monomial, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<SparseRow<F>> = polys
        .iter()
        .map(|f| {
            let mut row: SparseRow<F> = f.terms().iter().map(|t| (col[&t.mon], t.coeff.clone())).collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    let mut out: Vec<Polynomial<F>> = sparse_rref(rows)
        .into_iter()
        .map(|row| {
            let terms = row.into_iter().map(|(c, v)| Term { coeff: v, mon: mons[c].clone() }).collect();
            Polynomial::from_sorted(ring, terms)
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
    out
}

/// The linear forms `α ↦ ⟨α ∧ ω, e_{T^c}⟩` on `Λ^4`: one per 6-subset, i.e.
/// the seven coordinates of `α ∧ ω ∈ Λ^6`. Identically zero forms are kept.
pub fn form_linear_conditions<F: Field>(
    omega: &MultiVector<F>,
    coords: &PlueckerRing<F>,
) -> Result<Vec<Polynomial<F>>, GrassmannError> {
    if omega.is_zero() {
        return Err(GrassmannError::ZeroForm);
    }
    assert_eq!((coords.k, coords.n), (4, RANK));
    let ring = &coords.ring;
    let mut forms: BTreeMap<Blade, Vec<Term<F>>> = BTreeMap::new();
    for (i, s) in coords.subsets.iter().enumerate() {
        let a = blade(s);
        for (b, c) in omega.terms() {
            let sign = wedge_sign(a, b);
            if sign == 0 {
                continue;
            }
            let v = if sign < 0 { c.neg() } else { c.clone() };
            forms.entry(a | b).or_default().push(Term { coeff: v, mon: Monomial::var(coords.len(), i, 1) });
        }
    }
    let sixes: Vec<Blade> = (0u8..128).filter(|m| m.count_ones() == 6).collect();
    Ok(sixes.into_iter().map(|b| Polynomial::from_terms(ring, forms.remove(&b).unwrap_or_default())).collect())
}

/// The Plücker ideal of `G(4,7)` together with the linear conditions of `ω`.
pub fn form_zero_locus<F: Field>(
    omega: &MultiVector<F>,
    grass: &GrassmannIdeal<F>,
) -> Result<Ideal<F>, GrassmannError> {
    let lin = form_linear_conditions(omega, &grass.coords)?;
    Ok(grass.ideal.with_gens(lin)?)
}

/// Result of solving linear equations for some coordinates and substituting.
#[derive(Clone, Debug)]
pub struct LinearSection<F: Field> {
    /// Ring of the surviving (free) coordinates.
    pub ring: Arc<Ring<F>>,
    /// Indices, in the ambient ring, of the free coordinates.
    pub free: Vec<usize>,
    /// For every ambient coordinate, its expression in the free ones.
    pub images: Vec<Polynomial<F>>,
    pub rank: usize,
}

impl<F: Field> LinearSection<F> {
    pub fn pull(&self, f: &Polynomial<F>) -> Polynomial<F> {
        f.substitute(&self.ring, &self.images)
    }
}

/// Solves the linear forms for as many coordinates as their rank allows,
/// keeping the `preferred` coordinates free whenever possible (earlier
/// entries have priority).
pub fn solve_linear<F: Field>(
    ambient: &Arc<Ring<F>>,
    forms: &[Polynomial<F>],
    preferred: &[usize],
) -> LinearSection<F> {
    let n = ambient.nvars();
    // column order: non-preferred ambient variables first, then preferred in
    // reverse priority, so pivots avoid preferred coordinates
    let mut col_of_var: Vec<usize> = vec![0; n];
    let mut var_of_col: Vec<usize> = Vec::with_capacity(n);
    for v in 0..n {
        if !preferred.contains(&v) {
            var_of_col.push(v);
        }
    }
    for &v in preferred.iter().rev() {
        var_of_col.push(v);
    }
    for (c, &v) in var_of_col.iter().enumerate() {
        col_of_var[v] = c;
    }
    let rows: Vec<SparseRow<F>> = forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            assert!(f.terms().iter().all(|t| t.mon.degree() == 1), "linear forms expected");
            let mut row: SparseRow<F> = f
                .terms()
                .iter()
                .map(|t| {
                    let v = (0..n).find(|&i| t.mon.exp(i) == 1).unwrap();
                    (col_of_var[v], t.coeff.clone())
                })
                .collect();
            row.sort_by_key(|e| e.0);
            row
        })
        .collect();
    let rref = sparse_rref(rows);
    let pivot_vars: Vec<usize> = rref.iter().map(|r| var_of_col[r[0].0]).collect();
    let free: Vec<usize> = (0..n).filter(|v| !pivot_vars.contains(v)).collect();
    let names: Vec<&str> = free.iter().map(|&v| ambient.name(v)).collect();
    let ring = Ring::new(&names, MonomialOrder::Grevlex, ambient.ctx().clone());
    let pos_in_free: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut images: Vec<Polynomial<F>> = (0..n)
        .map(|v| match pos_in_free.get(&v) {
            Some(&k) => ring.var(k),
            None => ring.zero(),
        })
        .collect();
    for row in &rref {
        let pv = var_of_col[row[0].0];
        let terms = row[1..]
            .iter()
            .map(|(c, val)| Term { coeff: val.neg(), mon: Monomial::var(free.len(), pos_in_free[&var_of_col[*c]], 1) })
            .collect();
        images[pv] = Polynomial::from_terms(&ring, terms);
    }
    LinearSection { ring, free, images, rank: rref.len() }
}

/// Wedge of four vectors of `F^7`, as a point of the Plücker coordinates.
pub fn decomposable_point<F: Field>(vectors: &[Vec<F>], coords: &PlueckerRing<F>) -> Vec<F> {
    let ctx = coords.ring.ctx().clone();
    let mut acc: MultiVector<F> = MultiVector::monomial(&[], F::one(&ctx)).unwrap();
    for v in vectors {
        let terms = v.iter().enumerate().map(|(i, c)| (vec![i], c.clone())).collect();
        acc = acc.wedge(&MultiVector::from_terms(1, terms).unwrap()).unwrap();
    }
    coords.subsets.iter().map(|s| acc.coeff(blade(s)).cloned().unwrap_or_else(|| F::zero(&ctx))).collect()
}

/// Inverse of [`coordinate_name`].
pub fn parse_coordinate_name(name: &str) -> Option<Vec<usize>> {
    let digits = name.strip_prefix("p_").or_else(|| name.strip_prefix('p'))?;
    let v: Option<Vec<usize>> = digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
    v.filter(|v| v.windows(2).all(|w| w[0] < w[1]))
}

pub fn blade_of_name(name: &str) -> Option<Blade> {
    parse_coordinate_name(name).map(|v| blade(&v))
}

pub fn name_of_blade(b: Blade) -> String {
    coordinate_name(&blade_indices(b))
}

#[cfg(test)]
mod tests;
