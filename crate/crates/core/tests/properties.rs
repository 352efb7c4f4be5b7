use proptest::prelude::*;
use resicode::qr::QrContext;
use resicode::residue::{jacobi, ResiduePartition};
use resicode::{Field, Poly};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u64, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64, 256])
        .prop_map(|q| Field::prime_power(q).unwrap())
}

fn poly_in(f: Field, max_len: usize) -> impl Strategy<Value = Poly> {
    let q = f.order() as u32;
    prop::collection::vec(0..q, 0..max_len)
        .prop_map(move |ix| Poly::from_indices(&f, &ix).unwrap())
}

fn field_and_polys() -> impl Strategy<Value = (Poly, Poly)> {
    field_strategy().prop_flat_map(|f| (poly_in(f.clone(), 12), poly_in(f, 8)))
}

proptest! {
    #[test]
    fn divrem_round_trip((a, b) in field_and_polys()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn reciprocal_is_an_involution((a, _) in field_and_polys()) {
        prop_assume!(!a.is_zero() && !a.coeff(0).is_zero());
        let rr = a.reciprocal().unwrap().reciprocal().unwrap();
        prop_assert_eq!(rr, a.monic());
    }

    #[test]
    fn field_axioms(f in field_strategy(), i in any::<u32>(), j in any::<u32>(), k in any::<u32>()) {
        let q = f.order() as u32;
        let (a, b, c) = (f.from_index(i % q).unwrap(), f.from_index(j % q).unwrap(), f.from_index(k % q).unwrap());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn descriptor_round_trip(f in field_strategy(), k in 1usize..4) {
        let ext = Field::extension(&f, k, None).unwrap();
        let parsed: Field = ext.to_string().parse().unwrap();
        prop_assert_eq!(parsed, ext);
    }

    #[test]
    fn complementary_exponent_sets(mask in any::<u32>()) {
        let f = Field::prime_power(16).unwrap();
        let theta = f.nth_primitive_root(15).unwrap();
        let (s, t): (Vec<u64>, Vec<u64>) = (0..15u64).partition(|i| mask >> i & 1 == 1);
        let prod = Poly::product_of_linear_factors(&theta, &s)
            .mul(&Poly::product_of_linear_factors(&theta, &t)).unwrap();
        prop_assert_eq!(prod, Poly::x_n_minus_one(&f, 15));
    }

    #[test]
    fn jacobi_is_multiplicative(a in -500i64..500, b in -500i64..500, q in (0i64..500).prop_map(|x| 2 * x + 1)) {
        prop_assert_eq!(jacobi(a * b, q).unwrap(), jacobi(a, q).unwrap() * jacobi(b, q).unwrap());
    }

    #[test]
    fn selector_complement_completes(index in 0u128..24192) {
        let ctx = QrContext::new(&[3, 7, 11], 4).unwrap();
        let sel = ctx.selector_at(index).unwrap();
        let g = ctx.build_generator(&sel).unwrap();
        let gc = ctx.build_generator(&sel.complement()).unwrap();
        let prod = g.mul(&gc).unwrap().mul(&Poly::from_ints(ctx.base(), &[-1, 1])).unwrap();
        prop_assert_eq!(prod, Poly::x_n_minus_one(ctx.base(), 231));
        prop_assert_eq!(ctx.selector_index(&sel).unwrap(), index);
    }
}

#[test]
fn multiplication_by_q_preserves_splits() {
    for (primes, q) in [(&[3u64, 5][..], 4u64), (&[7, 23], 2), (&[11, 23], 3), (&[3, 7, 11], 4)] {
        let n: u64 = primes.iter().product();
        let part = ResiduePartition::new(primes).unwrap();
        for c in &part.classes {
            for s in &c.splits {
                for half in [&s.plus, &s.minus] {
                    let mut image: Vec<u64> = half.iter().map(|&j| j * q % n).collect();
                    image.sort_unstable();
                    assert_eq!(&image, half);
                }
            }
        }
    }
}

#[test]
fn embedding_is_a_homomorphism() {
    let f16 = Field::prime_power(16).unwrap();
    let ext = Field::extension(&f16, 2, None).unwrap();
    for a in f16.elements() {
        for b in f16.elements() {
            let (ea, eb) = (ext.embed(&a).unwrap(), ext.embed(&b).unwrap());
            assert_eq!(&ea + &eb, ext.embed(&(&a + &b)).unwrap());
            assert_eq!(&ea * &eb, ext.embed(&(&a * &b)).unwrap());
        }
    }
}

#[test]
fn frobenius_matches_subfield_membership() {
    let f4 = Field::prime_power(4).unwrap();
    let ext = Field::extension(&f4, 3, None).unwrap();
    let mut inside = 0;
    for x in ext.elements() {
        let structural = x.in_subfield(4);
        assert_eq!(structural, x.is_frobenius_fixed(4));
        inside += structural as usize;
    }
    assert_eq!(inside, 4);
}

#[test]
fn primitive_elements_have_full_order() {
    for q in [2u64, 3, 4, 7, 8, 9, 16, 27, 32, 81, 103, 256, 1024, 65536] {
        let f = Field::prime_power(q).unwrap();
        assert_eq!(f.primitive_element().multiplicative_order(), Some(q as u128 - 1));
    }
}
