use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exterior::MultiVector;
use crate::groebner::GbConfig;
use crate::linalg::{kernel, rank};
use crate::mukai::{additive_plane, canonical_plane, InvariantPlane};
use crate::polycore::{parse_poly, rat, Field, Fp, QuadExt};

const P: u32 = 32003;

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn qq(text: &str) -> PlaneQuartic<BigRational> {
    PlaneQuartic::new(parse_poly(text, &quartic_ring::<BigRational>(&())).unwrap()).unwrap()
}

fn conic<F: Field>(text: &str, ctx: &F::Ctx) -> crate::polycore::Polynomial<F> {
    parse_poly(text, &quartic_ring::<F>(ctx)).unwrap()
}

#[test]
fn gamma_family_expansion() {
    let g2 = gamma_quartic(&rat(2, 1), &());
    assert_eq!(g2, qq("2*a^4 + 3*a^2*b*c + b^2*c^2"));
    let g1 = gamma_quartic(&rat(1, 1), &());
    assert_eq!(g1, qq("(a^2 + b*c)^2"));
    assert_eq!(gamma_quartic(&rat(0, 1), &()), qq("b*c*(a^2 + b*c)"));
}

#[test]
fn gamma_family_classification() {
    assert_eq!(classify(&gamma_quartic(&rat(1, 1), &()), &cfg()).unwrap().class, ConicClass::DoubleConic);
    for t in [2, 3, 5] {
        let q = gamma_quartic(&rat(t, 1), &());
        let r = classify(&q, &cfg()).unwrap();
        assert_eq!(r.class, ConicClass::TangentAtTwoPoints, "t = {}", t);
        assert_eq!(r.profile, vec![2, 2]);
        let Some(ConicFactors::Base(f1, f2)) = r.factors else { panic!("rational factors expected") };
        assert!((&f1 * &f2).equals_up_to_scalar(&q.poly));
    }
    let degenerate = classify(&gamma_quartic(&rat(0, 1), &()), &cfg()).unwrap();
    assert_eq!(degenerate.class, ConicClass::TransverseOrOther);
}

#[test]
fn split_of_gamma_two() {
    let Some(ConicFactors::Base(f1, f2)) = conic_pair_split(&gamma_quartic(&rat(2, 1), &()), &cfg()).unwrap() else {
        panic!()
    };
    let expect = [conic::<BigRational>("a^2 + b*c", &()), conic::<BigRational>("2*a^2 + b*c", &())];
    assert!(expect.iter().any(|e| e.equals_up_to_scalar(&f1)));
    assert!(expect.iter().any(|e| e.equals_up_to_scalar(&f2)));
    assert!(!f1.equals_up_to_scalar(&f2));
}

#[test]
fn osculating_pairs() {
    for text in ["32*a^4 + 16*a^2*b^2 - 8*a*b*c^2 + c^4", "(c^2 - a*b)^2 + a^4"] {
        let q = qq(text);
        let r = classify(&q, &cfg()).unwrap();
        assert_eq!(r.class, ConicClass::TangentAtOnePoint, "{}", text);
        assert_eq!(r.profile, vec![4]);
        let Some(ConicFactors::Extension { m, factors: (f1, f2) }) = r.factors else { panic!("extension expected") };
        assert!(m < rat(0, 1));
        let prod = &f1 * &f2;
        let lifted: Vec<QuadExt<BigRational>> =
            q.poly.terms().iter().map(|t| QuadExt::embed(t.coeff.clone(), &m)).collect();
        let lc = lifted[0].clone();
        assert_eq!(prod.len(), q.poly.len());
        for (t, c) in prod.terms().iter().zip(&lifted) {
            assert_eq!(t.coeff.mul(&lc), c.mul(prod.lc().unwrap()));
        }
    }
}

#[test]
fn square_roots_of_quartics() {
    let q = qq("(a^2 + b*c)^2");
    assert_eq!(sqrt_poly(&q.poly).unwrap(), conic::<BigRational>("a^2 + b*c", &()));
    assert!(sqrt_poly(&qq("2*a^4 + 3*a^2*b*c + b^2*c^2").poly).is_none());
    assert!(sqrt_poly(&qq("a^4 + b^4").poly).is_none());
}

#[test]
fn tangency_fixtures() {
    let a = conic::<BigRational>("a^2 + b*c", &());
    let b = conic::<BigRational>("2*a^2 + b*c", &());
    assert_eq!(tangency_profile(&a, &b).unwrap(), vec![2, 2]);
    let ctx = ((), rat(-1, 1));
    let i = QuadExt::root(&rat(-1, 1));
    let r = quartic_ring::<QuadExt<BigRational>>(&ctx);
    let base = conic::<QuadExt<BigRational>>("c^2 - a*b", &ctx);
    let a2 = &r.var(0) * &r.var(0);
    let q1 = &base + &a2.scale(&i);
    let q2 = &base - &a2.scale(&i);
    assert_eq!(tangency_profile(&q1, &q2).unwrap(), vec![4]);
    // transverse
    let c1 = conic::<BigRational>("a^2 + b^2 - c^2", &());
    let c2 = conic::<BigRational>("a^2 + 4*b^2 - 2*c^2", &());
    assert_eq!(tangency_profile(&c1, &c2).unwrap(), vec![1, 1, 1, 1]);
    // osculating at a single point with a transverse fourth
    let c3 = conic::<BigRational>("a*c - b^2", &());
    let c4 = conic::<BigRational>("a*c - b^2 + b*c", &());
    assert_eq!(tangency_profile(&c3, &c4).unwrap(), vec![3, 1]);
}

#[test]
fn tangency_rejects_bad_input() {
    let a = conic::<BigRational>("a^2 + b*c", &());
    assert!(matches!(tangency_profile(&a, &a.scale(&rat(3, 1))), Err(LinesError::SameConic)));
    assert!(matches!(tangency_profile(&a, &conic::<BigRational>("a*b", &())), Err(LinesError::ReducibleConic)));
    assert!(matches!(tangency_profile(&a, &conic::<BigRational>("a^3", &())), Err(LinesError::NotConic)));
    assert!(PlaneQuartic::new(conic::<BigRational>("a^3*b + c", &())).is_err());
}

#[test]
fn irreducible_quartic_has_no_conic_split() {
    let q = qq("a^4 + b^4 + c^4 + a*b*c^2");
    assert!(conic_pair_split(&q, &cfg()).unwrap().is_none());
    assert_eq!(classify(&q, &cfg()).unwrap().class, ConicClass::Irreducible);
}

#[test]
fn involution_preserves_classification() {
    for q in [gamma_quartic(&rat(3, 1), &()), qq("32*a^4 + 16*a^2*b^2 - 8*a*b*c^2 + c^4")] {
        let a = classify(&q, &cfg()).unwrap();
        let b = classify(&q.swap_bc(), &cfg()).unwrap();
        assert_eq!(a.class, b.class);
        assert_eq!(a.profile, b.profile);
    }
    let g = gamma_quartic(&rat(7, 1), &());
    assert_eq!(g.swap_bc(), g);
}

#[test]
fn lines_quartic_of_the_canonical_family() {
    let q2 = lines_quartic(&canonical_plane::<BigRational>(&rat(2, 1), &()).unwrap(), &()).unwrap();
    assert_eq!(q2, qq("4*a^2*c^2 + 10*a*b^2*c + b^4"));
    let r = classify(&q2, &cfg()).unwrap();
    assert_eq!((r.class, r.profile), (ConicClass::TangentAtTwoPoints, vec![2, 2]));
    let m = r.factors.unwrap().extension().unwrap().clone();
    assert!((m / rat(21, 1)).sqrt().is_some());

    let mu = lines_quartic(&canonical_plane::<BigRational>(&rat(-1, 1), &()).unwrap(), &()).unwrap();
    assert_eq!(mu, qq("(a*c - b^2)^2"));
    assert_eq!(classify(&mu, &cfg()).unwrap().class, ConicClass::DoubleConic);
}

#[test]
fn lines_quartic_mod_p() {
    for d in [2, 3, 5] {
        let q = lines_quartic(&canonical_plane::<Fp>(&rat(d, 1), &P).unwrap(), &P).unwrap();
        let r = classify(&q, &cfg()).unwrap();
        assert_eq!((r.class, r.profile), (ConicClass::TangentAtTwoPoints, vec![2, 2]), "d = {}", d);
    }
}

#[test]
fn lines_quartic_of_the_additive_plane() {
    let q = lines_quartic(&additive_plane::<BigRational>(&()), &()).unwrap();
    // the displayed quartic, in the order (a, c, b)
    assert_eq!(q.swap_bc(), qq("32*a^4 + 16*a^2*b^2 - 8*a*b*c^2 + c^4"));
    assert_eq!(classify(&q, &cfg()).unwrap().class, ConicClass::TangentAtOnePoint);
}

#[test]
fn lines_quartic_rescaling() {
    let plane = canonical_plane::<BigRational>(&rat(3, 1), &()).unwrap();
    let q = lines_quartic(&plane, &()).unwrap();
    let lambda = rat(5, 1);
    let mut moved = plane.clone();
    moved.forms[2] = moved.forms[2].scale(&lambda);
    let q2 = lines_quartic(&moved, &()).unwrap();
    let r = quartic_ring::<BigRational>(&());
    let images = vec![r.var(0), r.var(1), r.var(2).scale(&(rat(1, 1) / lambda))];
    assert!(q2.poly.equals_up_to_scalar(&q.poly.substitute(&r, &images)));
    assert_eq!(classify(&q2, &cfg()).unwrap().class, classify(&q, &cfg()).unwrap().class);
}

#[test]
fn degenerate_plane_is_rejected() {
    let one = rat(1, 1);
    let plane = InvariantPlane {
        forms: [
            MultiVector::monomial(&[0, 1], one.clone()).unwrap(),
            MultiVector::monomial(&[2, 3], one.clone()).unwrap(),
            MultiVector::monomial(&[4, 5], one).unwrap(),
        ],
        symmetry: crate::mukai::Symmetry::Generic,
        d: None,
    };
    assert!(matches!(lines_quartic(&plane, &()), Err(LinesError::Mukai(_))));
}

fn fpv(n: i64) -> Fp {
    Fp::from_signed(n, P)
}

fn dense(w: &MultiVector<Fp>) -> Vec<Vec<Fp>> {
    skew_matrix(w, &P)
}

fn lin(m1: &[Vec<Fp>], c1: &Fp, m2: &[Vec<Fp>], c2: &Fp) -> Vec<Vec<Fp>> {
    (0..7).map(|i| (0..7).map(|j| m1[i][j].mul(c1).add(&m2[i][j].mul(c2))).collect()).collect()
}

fn gram(m: &[Vec<Fp>], basis: &[Vec<Fp>]) -> Vec<Vec<Fp>> {
    basis
        .iter()
        .map(|u| {
            basis
                .iter()
                .map(|v| {
                    (0..7).fold(fpv(0), |acc, i| (0..7).fold(acc, |acc, j| acc.add(&u[i].mul(&m[i][j]).mul(&v[j]))))
                })
                .collect()
        })
        .collect()
}

fn wedge_all(vs: &[Vec<Fp>]) -> MultiVector<Fp> {
    let mut acc = MultiVector::monomial(&[], fpv(1)).unwrap();
    for v in vs {
        let terms = v.iter().enumerate().map(|(i, c)| (vec![i], *c)).collect();
        acc = acc.wedge(&MultiVector::from_terms(1, terms).unwrap()).unwrap();
    }
    acc
}

/// The pencil `K = ker(a, b, c)`, its common isotropic 4-space from numeric
/// kernels, and the Gram matrix of the middle form on it.
fn flag_data(plane: &InvariantPlane<Fp>, l: [Fp; 3]) -> (Vec<Vec<Fp>>, Vec<Vec<Fp>>) {
    let m: Vec<Vec<Vec<Fp>>> = plane.forms.iter().map(dense).collect();
    let [a, b, c] = l;
    let alpha = lin(&m[0], &b, &m[1], &a.neg());
    let beta = lin(&m[1], &c, &m[2], &b.neg());
    let mut kers = vec![];
    for x in 1..9 {
        let pm = lin(&alpha, &fpv(1), &beta, &fpv(x));
        let k = kernel(&pm, 7, &P);
        assert_eq!(k.len(), 1);
        kers.push(k[0].clone());
    }
    let mut rows = kers.clone();
    let pivots = crate::linalg::dense_rref(&mut rows);
    let t1: Vec<Vec<Fp>> = rows[..pivots.len()].to_vec();
    assert_eq!(t1.len(), 4);
    let g = gram(&m[1], &t1);
    (t1, g)
}

#[test]
fn points_of_the_quartic_carry_lines() {
    // the two conics are defined over F_p when d²(d + 1)(d + 5) is a square
    let d = (2..).find(|&d: &i64| fpv((d + 1) * (d + 5)).sqrt().is_some()).unwrap();
    let plane = canonical_plane::<Fp>(&rat(d, 1), &P).unwrap();
    let q = lines_quartic(&plane, &P).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut found = 0;
    while found < 3 {
        let b = Fp::new(rng.gen_range(1..P as u64), P);
        let roots: Vec<Fp> =
            (0..P as u64).map(|c| Fp::new(c, P)).filter(|c| q.poly.evaluate(&[fpv(1), b, *c]).is_zero()).collect();
        let Some(c) = roots.first().cloned() else { continue };
        found += 1;
        let (t1, g) = flag_data(&plane, [fpv(1), b, c]);
        // ω₀ on T₁ has rank two, so T₀ is its two-dimensional kernel
        assert_eq!(rank(&g), 2);
        let coeffs = kernel(&g, 4, &P);
        let t0: Vec<Vec<Fp>> = coeffs
            .iter()
            .map(|k| (0..7).map(|i| (0..4).fold(fpv(0), |acc, j| acc.add(&k[j].mul(&t1[j][i])))).collect())
            .collect();
        // A = T₁^⊥ ⊂ B = T₀^⊥
        let a_space = kernel(&t1, 7, &P);
        let b_space = kernel(&t0, 7, &P);
        assert_eq!((a_space.len(), b_space.len()), (3, 5));
        for v in &b_space {
            let mut u = a_space.clone();
            u.push(v.clone());
            if rank(&u) < 4 {
                continue;
            }
            let alpha = wedge_all(&u);
            for w in &plane.forms {
                assert!(alpha.wedge(w).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn generic_pencils_have_an_isotropic_four_space() {
    // the rank-one condition alone holds on an open set of the plane
    let plane = canonical_plane::<Fp>(&rat(2, 1), &P).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let l = [0, 1, 2].map(|_| Fp::new(rng.gen_range(1..P as u64), P));
        let (t1, g) = flag_data(&plane, l);
        let m: Vec<Vec<Vec<Fp>>> = plane.forms.iter().map(dense).collect();
        let k1 = lin(&m[0], &l[1], &m[1], &l[0].neg());
        assert!(gram(&k1, &t1).iter().flatten().all(|x| x.is_zero()));
        // off the quartic, no T₀ exists
        assert_eq!(rank(&g), 4);
    }
}

fn random_conic(rng: &mut ChaCha8Rng) -> crate::polycore::Polynomial<Fp> {
    let r = quartic_ring::<Fp>(&P);
    let mut p = r.zero();
    for i in 0..3 {
        for j in i..3 {
            let c = Fp::new(rng.gen_range(0..P as u64), P);
            p = &p + &(&r.var(i) * &r.var(j)).scale(&c);
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bezout_for_random_conics(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_conic(&mut rng), random_conic(&mut rng));
        prop_assume!(is_irreducible_conic(&a) && is_irreducible_conic(&b) && !a.equals_up_to_scalar(&b));
        let prof = tangency_profile(&a, &b).unwrap();
        prop_assert_eq!(prof.iter().sum::<u32>(), 4);
    }

    #[test]
    fn gamma_is_symmetric_under_swap(t in -50i64..50) {
        let g = gamma_quartic(&rat(t, 1), &());
        prop_assert_eq!(g.swap_bc(), g);
    }
}
