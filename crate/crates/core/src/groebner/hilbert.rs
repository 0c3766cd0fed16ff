//! Hilbert series of monomial ideals, and the dimension and degree they encode.

use crate::polycore::Field;

use super::{GbConfig, GbError, Ideal};

/// Numerical invariants of a homogeneous ideal's projective scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    /// Degree; `0` for the empty scheme.
    pub degree: i128,
    /// `N(t)` in `HS(t) = N(t) / (1-t)^nvars`, lowest power first.
    pub numerator: Vec<i128>,
    pub nvars: usize,
}

type Exps = Vec<u16>;

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u32).sum::<u32>(), g.clone()));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[shift + j] += y;
    }
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Numerator of the Hilbert series of the monomial ideal generated by `gens`.
fn numerator(gens: Vec<Exps>) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![];
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    if counts.iter().all(|&c| c <= 1) {
        // pairwise coprime generators: a complete intersection
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.iter().map(|&e| e as usize).sum::<usize>();
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] = -1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let x = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u16> = gens.iter().map(|g| g[x]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];

    let mut plus = gens.clone();
    let mut pivot = vec![0u16; n];
    pivot[x] = e;
    plus.push(pivot);
    let colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[x] = h[x].saturating_sub(e);
            h
        })
        .collect();
    let mut out = numerator(plus);
    poly_add_shifted(&mut out, &numerator(colon), e as usize);
    trim(out)
}

/// Dimension and degree from the Hilbert series of the lead-term ideal.
pub fn hilbert_dim_degree<F: Field>(ideal: &Ideal<F>, cfg: &GbConfig) -> Result<HilbertReport, GbError> {
    if !ideal.is_homogeneous() {
        return Err(GbError::NonHomogeneous);
    }
    let gb = ideal.groebner(cfg)?;
    let nvars = ideal.ring().nvars();
    let leads: Vec<Exps> = gb.basis().unwrap().iter().map(|g| g.lm().unwrap().exponents().to_vec()).collect();
    let num = numerator(leads);
    Ok(report_from_numerator(num, nvars))
}

pub(crate) fn report_from_numerator(num: Vec<i128>, nvars: usize) -> HilbertReport {
    if num.iter().all(|&c| c == 0) {
        return HilbertReport { dim: -1, degree: 0, numerator: vec![], nvars };
    }
    let mut q = num.clone();
    let mut k = 0usize;
    while q.iter().sum::<i128>() == 0 {
        // divide by (1 - t): prefix sums
        let mut acc = 0;
        let mut out = Vec::with_capacity(q.len());
        for c in &q {
            acc += c;
            out.push(acc);
        }
        q = trim(out);
        k += 1;
    }
    HilbertReport { dim: nvars as i64 - k as i64 - 1, degree: q.iter().sum(), numerator: num, nvars }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_ideal_is_projective_space() {
        let r = report_from_numerator(numerator(vec![]), 4);
        assert_eq!((r.dim, r.degree), (3, 1));
    }

    #[test]
    fn hypersurface_of_degree_three() {
        let r = report_from_numerator(numerator(vec![vec![3, 0, 0]]), 3);
        assert_eq!((r.dim, r.degree), (1, 3));
    }

    #[test]
    fn two_lines_in_the_plane_through_a_point() {
        // (x*y) in k[x,y,z]: two lines
        let r = report_from_numerator(numerator(vec![vec![1, 1, 0]]), 3);
        assert_eq!((r.dim, r.degree), (1, 2));
        // (x^2, x*y): a line with an embedded point; degree still 1
        let r = report_from_numerator(numerator(vec![vec![2, 0, 0], vec![1, 1, 0]]), 3);
        assert_eq!((r.dim, r.degree), (1, 1));
    }

    #[test]
    fn irrelevant_ideal_is_empty() {
        let r = report_from_numerator(numerator(vec![vec![1, 0], vec![0, 2]]), 2);
        assert_eq!(r.dim, -1);
        let r = report_from_numerator(numerator(vec![vec![0, 0]]), 2);
        assert_eq!((r.dim, r.degree), (-1, 0));
    }
}
