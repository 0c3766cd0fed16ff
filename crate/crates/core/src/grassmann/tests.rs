use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::groebner::{check_certificate, hilbert_dim_degree, GbConfig};
use crate::polycore::{parse_poly, Fp};

const P: u32 = 32003;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Oracle: degree of G(k,n) by the hook length formula on the k × (n-k) box.
fn grassmannian_degree(k: u64, n: u64) -> u64 {
    let m = n - k;
    let num: u128 = (1..=(k * m) as u128).product();
    let mut hooks: u128 = 1;
    for i in 0..k {
        for j in 0..m {
            hooks *= ((k - i) + (m - j) - 1) as u128;
        }
    }
    (num / hooks) as u64
}

#[test]
fn g24_single_relation() {
    let g = pluecker_ideal::<BigRational>(2, 4, ()).unwrap();
    assert_eq!(g.ideal.gens().len(), 1);
    let expect = parse_poly("p_01*p_23 - p_02*p_13 + p_03*p_12", &g.coords.ring).unwrap();
    assert!(g.ideal.gens()[0].equals_up_to_scalar(&expect));
}

#[test]
fn colex_names() {
    let r = PlueckerRing::<BigRational>::new(4, 7, ()).unwrap();
    let names: Vec<&str> = r.ring.names()[..6].iter().map(|s| s.as_str()).collect();
    assert_eq!(names, vec!["p_0123", "p_0124", "p_0134", "p_0234", "p_1234", "p_0125"]);
    assert_eq!(r.ring.names().last().unwrap(), "p_3456");
    assert_eq!(r.signed_coordinate(&[1, 0, 2, 3]), (-1, Some(0)));
    assert_eq!(parse_coordinate_name("p_0123"), Some(vec![0, 1, 2, 3]));
    assert_eq!(parse_coordinate_name("p0213"), None);
}

#[test]
fn relation_counts() {
    // dim Sym^2 minus dim of the degree-2 part of the coordinate ring
    assert_eq!(pluecker_ideal::<Fp>(2, 5, P).unwrap().ideal.gens().len(), 5);
    assert_eq!(pluecker_ideal::<Fp>(4, 7, P).unwrap().ideal.gens().len(), 140);
    assert_eq!(pluecker_ideal::<Fp>(3, 7, P).unwrap().ideal.gens().len(), 140);
    assert!(pluecker_ideal::<Fp>(1, 5, P).unwrap().ideal.is_zero());
    assert!(pluecker_ideal::<Fp>(0, 5, P).is_err());
    assert!(pluecker_ideal::<Fp>(5, 5, P).is_err());
    assert!(pluecker_ideal::<Fp>(2, 9, P).is_err());
}

#[test]
fn dimension_and_degree_of_small_grassmannians() {
    for (k, n) in [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (2, 7)] {
        let g = pluecker_ideal::<Fp>(k, n, P).unwrap();
        let h = hilbert_dim_degree(&g.ideal, &GbConfig::default()).unwrap();
        assert_eq!(h.dim, (k * (n - k)) as i64, "G({},{})", k, n);
        assert_eq!(h.degree as u64, grassmannian_degree(k as u64, n as u64), "G({},{})", k, n);
    }
}

#[test]
fn echelon_quadrics_are_a_groebner_basis() {
    for (k, n) in [(2, 5), (2, 6), (3, 6), (2, 7), (3, 7), (4, 7)] {
        let g = pluecker_ideal::<Fp>(k, n, P).unwrap();
        assert!(check_certificate(g.ideal.gens()), "G({},{})", k, n);
    }
}

#[test]
fn exact_and_modular_agree_on_g25() {
    let q = pluecker_ideal::<BigRational>(2, 5, ()).unwrap();
    let p = pluecker_ideal::<Fp>(2, 5, P).unwrap();
    let hq = hilbert_dim_degree(&q.ideal, &GbConfig::default()).unwrap();
    let hp = hilbert_dim_degree(&p.ideal, &GbConfig::default()).unwrap();
    assert_eq!((hq.dim, hq.degree), (6, 5));
    assert_eq!((hq.dim, hq.degree), (hp.dim, hp.degree));
}

fn random_vec(rng: &mut ChaCha8Rng) -> Vec<Fp> {
    (0..7).map(|_| Fp::new(rng.gen_range(0..P as u64), P)).collect()
}

#[test]
fn decomposable_points_satisfy_the_relations() {
    let g = pluecker_ideal::<Fp>(4, 7, P).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let vs: Vec<Vec<Fp>> = (0..4).map(|_| random_vec(&mut rng)).collect();
        let pt = decomposable_point(&vs, &g.coords);
        assert!(g.ideal.gens().iter().all(|q| q.evaluate(&pt).is_zero()));
    }
    let mut misses = 0;
    for _ in 0..200 {
        let pt: Vec<Fp> = (0..35).map(|_| Fp::new(rng.gen_range(0..P as u64), P)).collect();
        if g.ideal.gens().iter().all(|q| q.evaluate(&pt).is_zero()) {
            misses += 1;
        }
    }
    assert_eq!(misses, 0);
}

#[test]
fn solving_linear_forms_keeps_preferred_coordinates() {
    let r = Ring::<BigRational>::new(&["a", "b", "c", "d"], MonomialOrder::Grevlex, ());
    let forms = vec![parse_poly("a + b + c", &r).unwrap(), parse_poly("b - d", &r).unwrap()];
    let s = solve_linear(&r, &forms, &[1, 2]);
    assert_eq!(s.rank, 2);
    assert_eq!(s.ring.names(), &["b".to_string(), "c".to_string()]);
    assert_eq!(s.images[0].to_string(), "-b - c");
    assert_eq!(s.images[3].to_string(), "b");
    for f in &forms {
        assert!(s.pull(f).is_zero());
    }
}

#[test]
fn generic_form_cuts_seven_conditions() {
    let g = pluecker_ideal::<Fp>(4, 7, P).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut terms = vec![];
    for a in 0..7 {
        for b in a + 1..7 {
            terms.push((vec![a, b], Fp::new(rng.gen_range(1..P as u64), P)));
        }
    }
    let omega = MultiVector::from_terms(2, terms).unwrap();
    let lin = form_linear_conditions(&omega, &g.coords).unwrap();
    assert_eq!(lin.len(), 7);
    let s = solve_linear(&g.coords.ring, &lin, &[]);
    assert_eq!(s.rank, 7);
    assert!(form_linear_conditions(&MultiVector::<Fp>::zero(2), &g.coords).is_err());
}

#[test]
fn binomial_sanity() {
    assert_eq!(binomial(7, 4), 35);
    assert_eq!(grassmannian_degree(2, 4), 2);
    assert_eq!(grassmannian_degree(4, 7), 462);
}

#[test]
fn g47_dimension_and_degree() {
    let g = pluecker_ideal::<Fp>(4, 7, P).unwrap();
    let cfg = GbConfig::default().trusted(true).certified(false);
    let h = hilbert_dim_degree(&g.ideal, &cfg).unwrap();
    assert_eq!((h.dim, h.degree), (12, 462));
}

fn zero_locus_dim(omega: &MultiVector<Fp>) -> i64 {
    let g = pluecker_ideal::<Fp>(4, 7, P).unwrap();
    let lin = form_linear_conditions(omega, &g.coords).unwrap();
    let s = solve_linear(&g.coords.ring, &lin, &[]);
    let gens: Vec<Polynomial<Fp>> = g.ideal.gens().iter().map(|q| s.pull(q)).collect();
    let ideal = Ideal::new(&s.ring, gens).unwrap();
    hilbert_dim_degree(&ideal, &GbConfig::default().certified(false)).unwrap().dim
}

#[test]
fn zero_locus_of_generic_form_has_dimension_nine() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut terms = vec![];
    for a in 0..7 {
        for b in a + 1..7 {
            terms.push((vec![a, b], Fp::new(rng.gen_range(1..P as u64), P)));
        }
    }
    assert_eq!(zero_locus_dim(&MultiVector::from_terms(2, terms).unwrap()), 9);
}

#[test]
fn zero_locus_of_decomposable_form_is_larger() {
    let omega = MultiVector::monomial(&[0, 1], Fp::new(1, P)).unwrap();
    assert!(zero_locus_dim(&omega) >= 10);
}
