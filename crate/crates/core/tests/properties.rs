use chowkit::exterior::ExtElement;
use chowkit::grassmann::{pluecker_coords, plucker_relations_check, StiefelMatrix};
use chowkit::{DenseMatrix, PrimeField, QMatrix, Rational, Ring};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn square(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-6i64..=6, n * n).prop_map(move |v| DenseMatrix::new(n, n, v.into_iter().map(q).collect()).unwrap())
}

fn skew(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-6i64..=6, n * n).prop_map(move |v| {
        DenseMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => q(v[i * n + j]),
            std::cmp::Ordering::Greater => -q(v[j * n + i]),
            std::cmp::Ordering::Equal => q(0),
        })
    })
}

fn homogeneous(generators: usize, degree: usize) -> impl Strategy<Value = ExtElement<Rational>> {
    let basis = chowkit::exterior::subsets(generators, degree);
    prop::collection::vec(-4i64..=4, basis.len()).prop_map(move |cs| {
        basis.iter().zip(cs).fold(ExtElement::zero(generators), |acc, (s, c)| {
            acc.add(&ExtElement::monomial(generators, s, q(c)).unwrap()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squares_to_determinant(m in (1usize..=4).prop_flat_map(|h| skew(2 * h))) {
        prop_assert!(m.is_alternating());
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(pf.clone() * pf, m.det().unwrap());
    }

    #[test]
    fn odd_skew_determinant_vanishes(m in (0usize..=3).prop_flat_map(|h| skew(2 * h + 1))) {
        prop_assert_eq!(m.det().unwrap(), q(0));
    }

    #[test]
    fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(square)) {
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn row_swap_negates_determinant(m in (2usize..=5).prop_flat_map(square)) {
        let mut s = m.clone();
        s.swap_rows(0, 1);
        prop_assert_eq!(s.det().unwrap(), -m.det().unwrap());
    }

    #[test]
    fn wedge_is_graded_commutative(
        (u, v, p, r) in (0usize..=3, 0usize..=3).prop_flat_map(|(p, r)| (homogeneous(5, p), homogeneous(5, r), Just(p), Just(r)))
    ) {
        let uv = u.wedge(&v).unwrap();
        let vu = v.wedge(&u).unwrap();
        let expected = if (p * r) % 2 == 0 { vu } else { vu.neg() };
        prop_assert_eq!(uv, expected);
    }

    #[test]
    fn wedge_is_associative(u in homogeneous(5, 1), v in homogeneous(5, 2), w in homogeneous(5, 1)) {
        let left = u.wedge(&v).unwrap().wedge(&w).unwrap();
        let right = u.wedge(&v.wedge(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pluecker_scales_by_determinant(
        (k1, n1, entries, g) in (1usize..=3).prop_flat_map(|k1| (k1 + 1..=6).prop_flat_map(move |n1| (
            Just(k1),
            Just(n1),
            prop::collection::vec(0i64..1000, k1 * n1),
            prop::collection::vec(0i64..1000, k1 * k1),
        )))
    ) {
        let f = PrimeField::new(1_000_003).unwrap();
        let m = DenseMatrix::new(k1, n1, entries.into_iter().map(|x| f.elem(x)).collect()).unwrap();
        let gm = DenseMatrix::new(k1, k1, g.into_iter().map(|x| f.elem(x)).collect()).unwrap();
        let s = StiefelMatrix::new(m);
        prop_assume!(s.is_ok());
        let s = s.unwrap();
        prop_assert!(plucker_relations_check(&s));
        let det = gm.det().unwrap();
        prop_assume!(det != f.zero());
        let moved = s.left_mul(&gm).unwrap();
        let before = pluecker_coords(&s);
        let after = pluecker_coords(&moved);
        for (x, y) in before.values().iter().zip(after.values()) {
            prop_assert_eq!(*x * det, *y);
        }
    }
}
