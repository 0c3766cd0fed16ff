//! Exact row reduction over a field, sparse and dense.

use std::collections::BTreeMap;

use crate::polycore::Field;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow<F> = Vec<(usize, F)>;

/// `a + c * b` on sparse rows.
fn axpy<F: Field>(a: &SparseRow<F>, c: &F, b: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon form of a sparse matrix. Rows come back sorted by
/// pivot column, each with pivot entry one. Zero rows are dropped.
pub fn sparse_rref<F: Field>(rows: Vec<SparseRow<F>>) -> Vec<SparseRow<F>> {
    let mut pivots: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        // forward-reduce against known pivots until the leading column is new
        loop {
            let Some((col, lead)) = row.first().cloned() else { break };
            match pivots.get(&col) {
                Some(p) => row = axpy(&row, &lead.neg(), p),
                None => {
                    let inv = lead.inv().expect("nonzero pivot");
                    for e in row.iter_mut() {
                        e.1 = e.1.mul(&inv);
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    // back substitution, from the rightmost pivot leftwards
    let cols: Vec<usize> = pivots.keys().copied().collect();
    for (k, &c) in cols.iter().enumerate().rev() {
        let row = pivots[&c].clone();
        for &c2 in &cols[..k] {
            let other = pivots.get(&c2).unwrap();
            if let Ok(pos) = other.binary_search_by_key(&c, |e| e.0) {
                let f = other[pos].1.neg();
                let updated = axpy(other, &f, &row);
                pivots.insert(c2, updated);
            }
        }
    }
    pivots.into_values().collect()
}

/// In-place dense RREF; returns the pivot columns.
pub fn dense_rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for v in m[r].iter_mut() {
            *v = v.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut m = m.to_vec();
    dense_rref(&mut m).len()
}

/// Basis of the right kernel `{x : m x = 0}` of a dense matrix with `ncols` columns.
pub fn kernel<F: Field>(m: &[Vec<F>], ncols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = dense_rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(ctx); ncols];
            v[f] = F::one(ctx);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a[r][f].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, Fp};
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![q(&[1, 2, 3]), q(&[2, 4, 6])];
        let k = kernel(&m, 3, &());
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: BigRational = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert_eq!(dot, rat(0, 1));
        }
    }

    #[test]
    fn sparse_matches_dense() {
        let dense = vec![q(&[0, 1, 1, 0]), q(&[1, 1, 0, 2]), q(&[1, 2, 1, 2]), q(&[3, 0, 0, 1])];
        let sparse: Vec<SparseRow<BigRational>> =
            dense.iter().map(|r| r.iter().cloned().enumerate().filter(|(_, v)| *v != rat(0, 1)).collect()).collect();
        let s = sparse_rref(sparse);
        let mut d = dense.clone();
        let piv = dense_rref(&mut d);
        assert_eq!(s.len(), piv.len());
        for (row, &pc) in s.iter().zip(&piv) {
            assert_eq!(row[0].0, pc);
            let k = piv.iter().position(|&c| c == pc).unwrap();
            let expanded: Vec<BigRational> =
                (0..4).map(|c| row.iter().find(|e| e.0 == c).map(|e| e.1.clone()).unwrap_or(rat(0, 1))).collect();
            assert_eq!(expanded, d[k]);
        }
    }

    #[test]
    fn rank_mod_p() {
        let m: Vec<Vec<Fp>> = vec![vec![Fp::new(1, 7), Fp::new(2, 7)], vec![Fp::new(3, 7), Fp::new(6, 7)]];
        assert_eq!(rank(&m), 1);
    }
}
