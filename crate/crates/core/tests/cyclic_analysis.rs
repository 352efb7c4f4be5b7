use resicode::cyclic::{CyclicCode, DistanceMethod, DEFAULT_DISTANCE_BUDGET};
use resicode::matrix::{smallest_dependent_columns, Matrix};
use resicode::reference::quaternary_15_context;
use resicode::{Error, Field, Poly};

fn case_one_code() -> CyclicCode {
    let ctx = quaternary_15_context().unwrap();
    ctx.build_code(&ctx.selector(&[(15, 1), (5, 1), (3, 1)]).unwrap()).unwrap()
}

fn rows(m: &Matrix) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

#[test]
fn construction() {
    let code = case_one_code();
    assert_eq!((code.n(), code.k()), (15, 8));
    assert_eq!(code.generator().render_expanded(), "1+a+x+a x+x^2+a x^4+x^6+x^7");
    let f2 = Field::prime(2).unwrap();
    let full = CyclicCode::new(&f2, 5, Poly::one(&f2)).unwrap();
    assert_eq!(full.k(), 5);
    let parity = CyclicCode::new(&f2, 3, Poly::from_ints(&f2, &[1, 1])).unwrap();
    assert_eq!(parity.k(), 2);
    let bad = Poly::parse_expanded(&f2, "1+x+x^2").unwrap();
    assert_eq!(CyclicCode::new(&f2, 5, bad).unwrap_err(), Error::NotAGenerator { n: 5 });
    assert_eq!(CyclicCode::new(&f2, 4, Poly::one(&f2)).unwrap_err(), Error::RepeatedRoots { n: 4 });
}

#[test]
fn matrices() {
    let f2 = Field::prime(2).unwrap();
    let parity = CyclicCode::new(&f2, 3, Poly::from_ints(&f2, &[1, 1])).unwrap();
    assert_eq!(rows(parity.parity_check_matrix().unwrap()), vec![vec![1, 1, 1]]);
    assert_eq!(rows(parity.generator_matrix().unwrap()), vec![vec![1, 1, 0], vec![0, 1, 1]]);
    let id = CyclicCode::new(&f2, 3, Poly::one(&f2)).unwrap();
    assert_eq!(rows(id.generator_matrix().unwrap()), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(id.parity_check_matrix().unwrap().rows(), 0);

    let code = case_one_code();
    let (g, h) = (code.generator_matrix().unwrap(), code.parity_check_matrix().unwrap());
    assert_eq!((g.rows(), h.rows(), h.cols()), (8, 7, 15));
    assert!(g.mul_transpose(h).unwrap().is_zero());
    assert_eq!((g.rank(), h.rank()), (8, 7));
}

#[test]
fn duals() {
    let f2 = Field::prime(2).unwrap();
    let id = CyclicCode::new(&f2, 3, Poly::one(&f2)).unwrap();
    assert_eq!(id.dual_code().unwrap().k(), 0);
    let parity = CyclicCode::new(&f2, 3, Poly::from_ints(&f2, &[1, 1])).unwrap();
    let rep = parity.dual_code().unwrap();
    assert_eq!(rep.k(), 1);
    assert_eq!(rep.generator().render_expanded(), "1+x+x^2");
    let code = case_one_code();
    let dual = code.dual_code().unwrap();
    assert_eq!(dual.k(), 7);
    assert_eq!(dual.generator(), &code.parity_check_polynomial().reciprocal().unwrap());
}

#[test]
fn predicates() {
    let f2 = Field::prime(2).unwrap();
    let parity = CyclicCode::new(&f2, 3, Poly::from_ints(&f2, &[1, 1])).unwrap();
    assert!(parity.is_lcd() && parity.is_lcd_by_rank().unwrap());
    let code = case_one_code();
    assert!(!code.is_lcd() && !code.is_dual_containing());
    assert!(!code.is_lcd_by_rank().unwrap() && !code.is_dual_containing_by_matrix().unwrap());
    let full = CyclicCode::new(&f2, 7, Poly::one(&f2)).unwrap();
    assert!(full.is_dual_containing() && full.self_orthogonal_paper_sense());
}

#[test]
fn distances() {
    let code = case_one_code();
    let d = code.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap();
    assert_eq!((d.d, d.method, d.codewords_enumerated), (6, DistanceMethod::Exhaustive, 21845));
    assert!(d.d <= code.n() - code.k() + 1);
    assert_eq!(smallest_dependent_columns(code.parity_check_matrix().unwrap(), 6), Some(6));

    let ctx = quaternary_15_context().unwrap();
    let case_two = ctx.build_code(&ctx.selector(&[(3, 1), (5, -1), (3, 1)]).unwrap()).unwrap();
    assert_eq!(case_two.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap().d, 3);

    let f2 = Field::prime(2).unwrap();
    let rep = CyclicCode::new(&f2, 3, Poly::parse_expanded(&f2, "1+x+x^2").unwrap()).unwrap();
    assert_eq!(rep.minimum_distance(10).unwrap().d, 3);
    let zero = CyclicCode::new(&f2, 3, Poly::x_n_minus_one(&f2, 3)).unwrap();
    assert_eq!(zero.minimum_distance(10).unwrap_err(), Error::NoNonzeroCodewords);
}

#[test]
fn budget_refusal_is_explicit() {
    let code = case_one_code();
    let d = code.minimum_distance(100).unwrap();
    assert_eq!(d.method, DistanceMethod::BudgetExceeded);
    assert!(d.d >= 6 && !d.is_exact());
}

#[test]
fn summary_json() {
    let s = case_one_code().summary(None);
    let v = serde_json::to_value(&s).unwrap();
    assert_eq!(v["k"], 8);
    assert_eq!(v["flags"]["lcd"], false);
    assert_eq!(v["g"][7], serde_json::json!([1, 0]));
}
