use resicode::{Error, Field, Poly};

fn tower() -> (Field, Field) {
    let f2 = Field::prime(2).unwrap();
    let f4 = Field::extension(&f2, 2, Some(&Poly::from_indices(&f2, &[1, 1, 1]).unwrap())).unwrap();
    let m = Poly::from_elements(&f4, vec![f4.primitive_element(), f4.one(), f4.one()]).unwrap();
    let f16 = Field::extension(&f4, 2, Some(&m)).unwrap();
    (f4, f16)
}

#[test]
fn parity_check_division() {
    let (f4, _) = tower();
    let g = Poly::parse_expanded(&f4, "1+a+x+a x+x^2+a x^4+x^6+x^7").unwrap();
    let (q, r) = Poly::x_n_minus_one(&f4, 15).divrem(&g).unwrap();
    assert!(r.is_zero());
    assert_eq!(q.render_expanded(), "a+a x+x^2+a x^3+x^4+x^5+a x^5+x^6+x^7+x^8");
    assert_eq!(Poly::one(&f4).divrem(&Poly::zero(&f4)).unwrap_err(), Error::DivisionByZero);
}

#[test]
fn reciprocals() {
    let (f4, _) = tower();
    let f = Poly::parse_expanded(&f4, "a+x").unwrap();
    let r = f.reciprocal().unwrap();
    assert_eq!(r.render_expanded(), "1+a+x");
    // root of f is a; root of f* must be a^-1
    let a = f4.primitive_element();
    assert!(r.eval(&a.inv().unwrap()).unwrap().is_zero());
    let f2 = Field::prime(2).unwrap();
    let x4 = Poly::parse_expanded(&f2, "1+x+x^4").unwrap();
    assert_eq!(x4.reciprocal().unwrap().render_expanded(), "1+x^3+x^4");
    assert!(!x4.is_self_reciprocal());
    assert!(Poly::parse_expanded(&f2, "1+x+x^2").unwrap().is_self_reciprocal());
    assert!(Poly::from_ints(&f2, &[-1, 1]).is_self_reciprocal());
    assert_eq!(Poly::x(&f2).reciprocal().unwrap_err(), Error::ZeroConstantTerm);
}

#[test]
fn linear_factor_products() {
    let (f4, f16) = tower();
    let b = f16.element(&[0, 1]).unwrap();
    let p = Poly::product_of_linear_factors(&b, &[6, 9]).coerce_to_base().unwrap();
    assert_eq!(p, Poly::parse_expanded(&f4, "1+a x+x^2").unwrap());
    assert_eq!(Poly::product_of_linear_factors(&b, &[]), Poly::one(&f16));
    let all: Vec<u64> = (0..15).collect();
    assert_eq!(Poly::product_of_linear_factors(&b, &all), Poly::x_n_minus_one(&f16, 15));
}

#[test]
fn roots_are_exactly_the_exponent_set() {
    let f = Field::prime_power(64).unwrap();
    let theta = f.nth_primitive_root(21).unwrap();
    let set = [1u64, 4, 5, 16, 20];
    let p = Poly::product_of_linear_factors(&theta, &set);
    for t in 0..42u64 {
        let zero = p.eval(&theta.pow(t as i128).unwrap()).unwrap().is_zero();
        assert_eq!(zero, set.contains(&(t % 21)), "t={t}");
    }
}

#[test]
fn gcd_and_irreducibility() {
    let f3 = Field::prime(3).unwrap();
    let a = Poly::parse_expanded(&f3, "1+x^2").unwrap();
    let b = Poly::parse_expanded(&f3, "2+x").unwrap();
    assert!(a.is_irreducible());
    assert_eq!(a.mul(&b).unwrap().gcd(&b).unwrap(), b);
    assert!(!a.mul(&b).unwrap().is_irreducible());
}
