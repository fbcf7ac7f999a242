use chowkit::binary::{common_root_binary, resultant_bezout, resultant_sylvester, BinaryForm};
use chowkit::proportional::RatioTracker;
use chowkit::sample::{job_rng, ScalarSource, SmallRationals};
use chowkit::ternary::{planted_common_zero_quadrics, pfaffian_quadrics, resultant_quadrics, TernaryQuadric};
use chowkit::{Fp, PrimeField, Rational, Ring};
use num_traits::Zero;
use rand::Rng;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn form(c: &[i64]) -> BinaryForm<Rational> {
    BinaryForm::new(c.iter().map(|&x| q(x)).collect()).unwrap()
}

/// Form with roots `(s : t) = (r_i : 1)`.
fn with_roots(roots: &[i64]) -> BinaryForm<Rational> {
    roots.iter().fold(form(&[1]), |acc, &r| acc.mul(&form(&[1, -r])))
}

#[test]
fn worked_instance() {
    let f = form(&[1, 0, -1]);
    let g = form(&[1, 0, -4]);
    assert_eq!(resultant_sylvester(&f, &g).unwrap(), q(9));
    assert_eq!(resultant_bezout(&f, &g).unwrap(), q(-9));
}

// For monic forms with integer roots the resultant is the product of root differences.
#[test]
fn sylvester_matches_root_differences() {
    let mut rng = job_rng(21, 0);
    for d in 1..=6 {
        for _ in 0..20 {
            let a: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
            let b: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
            let prod: i64 = a.iter().flat_map(|x| b.iter().map(move |y| x - y)).product();
            let (f, g) = (with_roots(&a), with_roots(&b));
            assert_eq!(resultant_sylvester(&f, &g).unwrap(), q(prod), "roots {a:?} {b:?}");
            assert_eq!(common_root_binary(&f, &g).unwrap(), prod == 0);
        }
    }
}

#[test]
fn bezout_constant_per_degree() {
    let src = SmallRationals { bound: 3 };
    let mut rng = job_rng(22, 0);
    for d in 1..=8 {
        let mut t = RatioTracker::new();
        for _ in 0..40 {
            let f = BinaryForm::new(src.sample_vec(d + 1, &mut rng)).unwrap();
            let g = BinaryForm::new(src.sample_vec(d + 1, &mut rng)).unwrap();
            t.observe(&resultant_bezout(&f, &g).unwrap(), &resultant_sylvester(&f, &g).unwrap());
        }
        let c = t.finish(&format!("d = {d}")).unwrap();
        assert!(c == q(1) || c == q(-1), "d = {d}: c_d = {c}");
        if d == 2 {
            assert_eq!(c, q(-1));
        }
    }
}

#[test]
fn common_root_at_infinity() {
    // both forms vanish at (1 : 0)
    let f = form(&[0, 1, 1]);
    let g = form(&[0, 2, -3]);
    assert!(common_root_binary(&f, &g).unwrap());
    assert!(resultant_sylvester(&f, &g).unwrap().is_zero());
}

#[test]
fn ternary_planted_and_scaling() {
    let field = PrimeField::default_field();
    let mut rng = job_rng(23, 0);
    let mut ratio = RatioTracker::<Fp>::new();
    for _ in 0..30 {
        let p = [field.sample(&mut rng), field.sample(&mut rng), field.one()];
        let [a, b, c] = planted_common_zero_quadrics(&p, &field, &mut rng).unwrap();
        assert!(a.eval(&p).is_zero() && b.eval(&p).is_zero() && c.eval(&p).is_zero());
        assert!(pfaffian_quadrics(&a, &b, &c).unwrap().is_zero());
        assert!(resultant_quadrics(&a, &b, &c).unwrap().is_zero());

        let net: Vec<TernaryQuadric<Fp>> =
            (0..3).map(|_| TernaryQuadric::new(field.sample_vec(6, &mut rng)).unwrap()).collect();
        let (pf, det) = (
            pfaffian_quadrics(&net[0], &net[1], &net[2]).unwrap(),
            resultant_quadrics(&net[0], &net[1], &net[2]).unwrap(),
        );
        assert!(!det.is_zero());
        ratio.observe(&pf, &det);
        let l = field.sample_nonzero(&mut rng);
        let scaled = resultant_quadrics(&net[0], &net[1].scale(&l), &net[2]).unwrap();
        assert_eq!(scaled, det * l.pow(4));
    }
    ratio.finish("Pf / det").unwrap();
}
