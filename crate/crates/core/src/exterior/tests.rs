use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::polycore::rat;

type Mv = MultiVector<BigRational>;

fn e(indices: &[usize]) -> Mv {
    Mv::monomial(indices, rat(1, 1)).unwrap()
}

/// Oracle: sign of the permutation sorting `v`, by bubble sort.
fn bubble_sign(v: &[usize]) -> i64 {
    let mut v = v.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return 0;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

#[test]
fn basis_products() {
    assert_eq!(e(&[0]).wedge(&e(&[1])).unwrap(), e(&[0, 1]));
    assert_eq!(e(&[1]).wedge(&e(&[0])).unwrap(), e(&[0, 1]).neg());
    assert!(e(&[2]).wedge(&e(&[2])).unwrap().is_zero());
    assert_eq!(e(&[0, 1, 2, 3]).wedge(&e(&[4, 5, 6, 0])), Err(ExteriorError::GradeOverflow(8)));
}

#[test]
fn square_of_weight_zero_form() {
    // e_{-1}∧e_1 + e_{-2}∧e_2 + τ e_{-3}∧e_3 with τ = 1
    let w0 = e(&[2, 4]).add(&e(&[1, 5])).add(&e(&[0, 6]));
    let sq = w0.wedge(&w0).unwrap();
    let pairs = [[2, 4], [1, 5], [0, 6]];
    let mut expect = Mv::zero(4);
    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let cat = [pairs[a][0], pairs[a][1], pairs[b][0], pairs[b][1]];
            let mut sorted = cat.to_vec();
            sorted.sort_unstable();
            expect = expect.add(&Mv::monomial(&sorted, rat(bubble_sign(&cat), 1)).unwrap());
        }
    }
    assert_eq!(sq, expect);
    assert_eq!(sq.len(), 3);
    assert!(sq.terms().all(|(_, c)| *c == rat(2, 1)));
}

#[test]
fn torus_weights() {
    assert_eq!(e(&[0, 5]).torus_weight(), Ok(-1));
    assert_eq!(e(&[3, 4, 5, 6]).torus_weight(), Ok(6));
    let w0 = e(&[2, 4]).add(&e(&[1, 5])).add(&e(&[0, 6]).scale(&rat(-7, 1)));
    assert_eq!(w0.torus_weight(), Ok(0));
    assert_eq!(e(&[0, 1]).add(&e(&[0, 2])).torus_weight(), Err(ExteriorError::MixedWeights));
    assert_eq!(Mv::zero(2).torus_weight(), Err(ExteriorError::ZeroForm));
}

#[test]
fn pairings() {
    assert_eq!(e(&[0, 1, 2, 3]).pair(&e(&[4, 5, 6]), &()), Ok(rat(1, 1)));
    assert_eq!(e(&[0, 1, 2, 4]).pair(&e(&[3, 5, 6]), &()), Ok(rat(-1, 1)));
    assert_eq!(e(&[0, 1, 2, 4]).pair(&e(&[4, 5, 6]), &()), Ok(rat(0, 1)));
    assert_eq!(e(&[0, 1]).pair(&e(&[4, 5, 6]), &()), Err(ExteriorError::GradeMismatch(2, 3)));
}

fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u8..128).filter(|m| m.count_ones() as usize == k).map(blade_indices).collect()
}

#[test]
fn pairing_matrix_is_a_signed_permutation() {
    let fours = subsets(4);
    let threes = subsets(3);
    assert_eq!((fours.len(), threes.len()), (35, 35));
    for a in &fours {
        let row: Vec<BigRational> = threes.iter().map(|b| e(a).pair(&e(b), &()).unwrap()).collect();
        let nz: Vec<&BigRational> = row.iter().filter(|c| **c != rat(0, 1)).collect();
        assert_eq!(nz.len(), 1);
        assert!(*nz[0] == rat(1, 1) || *nz[0] == rat(-1, 1));
    }
    for b in &threes {
        let col = fours.iter().filter(|a| e(a).pair(&e(b), &()).unwrap() != rat(0, 1)).count();
        assert_eq!(col, 1);
    }
}

#[test]
fn text_round_trip() {
    let w = parse_multivector::<BigRational>("-2*e_0^e_6 + e_1^e_5 + 1/3*e_4^e_2", &()).unwrap();
    assert_eq!(w.to_string(), "-2*e_0^e_6 + e_1^e_5 - 1/3*e_2^e_4");
    assert_eq!(parse_multivector::<BigRational>(&w.to_string(), &()).unwrap(), w);
    assert!(parse_multivector::<BigRational>("e_0^e_1 + e_2", &()).is_err());
}

fn arb_mv(grade: usize) -> impl Strategy<Value = Mv> {
    let blades = subsets(grade);
    prop::collection::vec((0..blades.len(), -3i64..=3), 0..5).prop_map(move |ts| {
        let mut acc = Mv::zero(grade);
        for (k, c) in ts {
            acc = acc.add(&Mv::monomial(&blades[k], rat(c, 1)).unwrap());
        }
        acc
    })
}

fn arb_homogeneous(grade: usize) -> impl Strategy<Value = Mv> {
    let blades = subsets(grade);
    (0..blades.len(), 1i64..5).prop_map(move |(k, c)| Mv::monomial(&blades[k], rat(c, 1)).unwrap())
}

proptest! {
    #[test]
    fn graded_antisymmetry(a in arb_mv(2), b in arb_mv(3)) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        // (-1)^{2*3} = +1
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn odd_antisymmetry(a in arb_mv(1), b in arb_mv(3)) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
    }

    #[test]
    fn associativity(a in arb_mv(1), b in arb_mv(2), c in arb_mv(2)) {
        let l = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let r = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn weight_is_additive(a in arb_homogeneous(2), b in arb_homogeneous(2)) {
        let ab = a.wedge(&b).unwrap();
        if !ab.is_zero() {
            prop_assert_eq!(ab.torus_weight().unwrap(), a.torus_weight().unwrap() + b.torus_weight().unwrap());
        }
    }

    #[test]
    fn blade_sign_matches_bubble_sort(a in 0u8..128, b in 0u8..128) {
        let mut cat = blade_indices(a);
        cat.extend(blade_indices(b));
        prop_assert_eq!(wedge_sign(a, b) as i64, bubble_sign(&cat));
    }
}
