use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::groebner::GbConfig;
use crate::mukai::{divisor_affine_equation, divisor_frame_plane, v12_ideal, DivisorSpec};
use crate::polycore::{parse_poly, Fp, Monomial, MonomialOrder, Ring, Term};

fn xyz(text: &str) -> Polynomial<BigRational> {
    let r = Ring::new(&["x", "y", "z"], MonomialOrder::Grevlex, ());
    parse_poly(text, &r).unwrap()
}

fn small(text: &str) -> Polynomial<BigRational> {
    let r = Ring::new(&["p_1356", "p_1456", "p_2456"], MonomialOrder::Grevlex, ());
    parse_poly(text, &r).unwrap()
}

fn w(v: &[u64]) -> WeightVector {
    WeightVector::new(v.to_vec()).unwrap()
}

/// Item 1 at d = 2, from its printed coefficients.
const ITEM_ONE: &str = "p_1456^5*p_2456^2 + 2*p_1356*p_1456^3*p_2456^3 + p_1356^2*p_1456*p_2456^4 - 1/3*p_1456^6 \
    + 22/3*p_1356*p_1456^4*p_2456 + 5*p_1356^2*p_1456^2*p_2456^2 - 10/3*p_1356^3*p_2456^3 \
    + 24*p_1356^2*p_1456^3 - 12*p_1356^3*p_1456*p_2456 - 36*p_1356^4";

#[test]
fn degrees_and_bounds_on_small_examples() {
    let r = Ring::new(&["x", "y"], MonomialOrder::Grevlex, ());
    let cusp = parse_poly::<BigRational>("x^2 + y^3", &r).unwrap();
    assert_eq!(weighted_degree(&cusp, &w(&[3, 2])), Ok(6));
    assert_eq!(kollar_bound(&cusp, &w(&[3, 2])), Ok(rat(5, 6)));
    assert_eq!(find_weight_vector(&cusp), Ok(WeightDetection::Unique(w(&[3, 2]))));
    let quadric = small("p_1456^2 + p_1356*p_2456");
    assert_eq!(weighted_degree(&quadric, &WeightVector::uniform(3)), Ok(2));
    assert_eq!(kollar_bound(&quadric, &WeightVector::uniform(3)), Ok(rat(3, 2)));
}

#[test]
fn item_one_weights() {
    let f = small(ITEM_ONE);
    let WeightDetection::Unique(found) = find_weight_vector(&f).unwrap() else { panic!() };
    // (2, 1, 3) on (p_1456, p_2456, p_1356)
    assert_eq!(found.as_slice(), &[3, 2, 1]);
    assert_eq!(weighted_degree(&f, &found), Ok(12));
    assert_eq!(kollar_bound(&f, &found), Ok(rat(1, 2)));
    // the assignment (3, 2, 1) on (p_1456, p_2456, p_1356) does not make it homogeneous
    assert_eq!(is_weighted_homogeneous(&f, &w(&[1, 3, 2])), Ok(false));
}

#[test]
fn detection_edge_cases() {
    assert_eq!(find_weight_vector(&xyz("x^2 + y^2 + x^3")), Ok(WeightDetection::None));
    assert_eq!(find_weight_vector(&xyz("x*y^2*z")), Ok(WeightDetection::SingleMonomial));
    assert_eq!(find_weight_vector(&xyz("x^2 + y*z")), Ok(WeightDetection::NotUnique { dim: 2 }));
    // the kernel exists but has mixed signs
    assert_eq!(find_weight_vector(&xyz("x^2 + y^2*x^3 + z")), Ok(WeightDetection::None));
    let zero = &xyz("x") - &xyz("x");
    assert_eq!(find_weight_vector(&zero), Err(LctError::ZeroPolynomial));
    assert_eq!(weighted_degree(&zero, &w(&[1, 1, 1])), Err(LctError::ZeroPolynomial));
    assert_eq!(weighted_degree(&xyz("x"), &w(&[1, 1])), Err(LctError::Length { weights: 2, vars: 3 }));
    assert_eq!(WeightVector::new(vec![1, 0, 2]), Err(LctError::NotPositive));
    assert_eq!(w(&[4, 6, 2]).as_slice(), &[2, 3, 1]);
}

#[test]
fn lowest_weight_decides() {
    // not homogeneous: the degree is the smallest monomial weight
    let f = xyz("x^2 + y^2 + x^3");
    let r = bound_with(&f, WeightVector::uniform(3)).unwrap();
    assert_eq!(r.weighted_degree, 2);
    assert!(!r.homogeneous);
    assert_eq!(lct_bound(&f).unwrap().bound, rat(3, 2));
}

fn records<F: Field>(d: i64, ctx: &F::Ctx) -> Vec<DivisorRecord<F>> {
    let cfg = GbConfig::default().with_strategy("sugar").unwrap();
    let v = v12_ideal(&divisor_frame_plane::<F>(&rat(d, 1), ctx).unwrap(), ctx).unwrap();
    let specs: Vec<DivisorSpec> = divisor_table();
    specs.iter().map(|s| divisor_affine_equation(&v, s, Some(&rat(1, 1)), &cfg).unwrap()).collect()
}

fn expected() -> Vec<(usize, BigRational)> {
    [(1, 1, 2), (2, 6, 11), (3, 3, 5), (4, 2, 3), (5, 3, 2), (6, 6, 7), (7, 6, 5), (8, 3, 2), (12, 1, 2), (13, 1, 1)]
        .iter()
        .map(|&(i, n, d)| (i, rat(n, d)))
        .collect()
}

#[test]
fn table_at_two() {
    let rows = divisor_lct_table(&records::<BigRational>(2, &())).unwrap();
    let got: Vec<(usize, BigRational)> = rows.iter().map(|r| (r.item, r.report.bound.clone())).collect();
    assert_eq!(got, expected());
    assert!(rows.iter().all(|r| r.report.homogeneous));
    assert_eq!(global_bound(&rows), Some(rat(1, 2)));
    let disagree: Vec<usize> = rows.iter().filter(|r| !r.agrees()).map(|r| r.item).collect();
    assert_eq!(disagree, vec![3]);
    let three = &rows[2];
    assert_eq!((three.report.weights.sum(), three.report.weighted_degree), (6, 10));
    let weights: Vec<Vec<u64>> = rows.iter().map(|r| r.report.weights.as_slice().to_vec()).collect();
    assert_eq!(weights[9], vec![1, 2, 3]);
    assert_eq!(weights[4], vec![1, 1, 1]);
}

#[test]
fn table_is_independent_of_d() {
    let p = 32003;
    let rows = divisor_lct_table(&records::<Fp>(3, &p)).unwrap();
    let got: Vec<(usize, BigRational)> = rows.iter().map(|r| (r.item, r.report.bound.clone())).collect();
    assert_eq!(got, expected());
}

#[test]
fn empty_table() {
    let rows = divisor_lct_table::<BigRational>(&[]).unwrap();
    assert!(rows.is_empty());
    assert_eq!(global_bound(&rows), None);
}

fn poly_from(terms: &[([u16; 3], i64)]) -> Polynomial<BigRational> {
    let r = Ring::new(&["x", "y", "z"], MonomialOrder::Grevlex, ());
    let ts = terms.iter().map(|(e, c)| Term { coeff: rat(*c, 1), mon: Monomial::from_exponents(e) }).collect();
    Polynomial::from_terms(&r, ts)
}

fn monomials() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    prop::collection::vec(([0u16..5, 0u16..5, 0u16..5], 1i64..9), 1..6)
}

proptest! {
    #[test]
    fn bound_ignores_scalars(ms in monomials(), c in 1i64..50, ws in [1u64..6, 1u64..6, 1u64..6]) {
        let f = poly_from(&ms);
        let wv = WeightVector::new(ws.to_vec()).unwrap();
        prop_assume!(weighted_degree(&f, &wv).unwrap() > 0);
        prop_assert_eq!(kollar_bound(&f, &wv), kollar_bound(&f.scale(&rat(-c, 7)), &wv));
    }

    #[test]
    fn adding_monomials_is_monotone(ms in monomials(), extra in [0u16..5, 0u16..5, 0u16..5], ws in [1u64..6, 1u64..6, 1u64..6]) {
        let f = poly_from(&ms);
        let m = poly_from(&[(extra, 1)]);
        prop_assume!(f.terms().iter().all(|t| t.mon != m.terms()[0].mon));
        let wv = WeightVector::new(ws.to_vec()).unwrap();
        let g = &f + &m;
        let (df, dg) = (weighted_degree(&f, &wv).unwrap(), weighted_degree(&g, &wv).unwrap());
        prop_assert!(dg <= df);
        if weighted_degree(&m, &wv).unwrap() >= df {
            prop_assert_eq!(dg, df);
        }
        if dg > 0 {
            prop_assert!(kollar_bound(&g, &wv).unwrap() >= kollar_bound(&f, &wv).unwrap());
        }
    }

    #[test]
    fn detected_weights_are_sound(ws in [1u16..5, 1u16..5, 1u16..5], picks in prop::collection::vec([0u16..7, 0u16..7], 2..6)) {
        // monomials x^i y^j z^k of one weighted degree D, with k solved for
        let d = 6 * ws[0] * ws[1] * ws[2];
        let mut ms = Vec::new();
        for [i, j] in picks {
            let rest = d as i64 - (i * ws[0] + j * ws[1]) as i64;
            if rest >= 0 && rest % ws[2] as i64 == 0 {
                ms.push(([i, j, (rest / ws[2] as i64) as u16], 1));
            }
        }
        let f = poly_from(&ms);
        prop_assume!(f.len() >= 2);
        if let WeightDetection::Unique(found) = find_weight_vector(&f).unwrap() {
            prop_assert!(is_weighted_homogeneous(&f, &found).unwrap());
        }
    }
}
