use boubaker::polybasis::{boubaker_matrix, boubaker_polynomial, recurrence_check, BoubakerBasis};
use proptest::prelude::*;

#[test]
fn leading_coefficient_and_degree() {
    for n in 0..=40 {
        let p = boubaker_polynomial(n).unwrap();
        assert_eq!(p.degree(), Some(n));
        assert_eq!(p.coeffs()[n], 1.0);
    }
}

#[test]
fn m_is_unit_lower_triangular_with_parity_sparsity() {
    for n in 0..=20 {
        let basis = BoubakerBasis::new(n).unwrap();
        let m = basis.m_exact();
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row[i], 1);
            for (j, &v) in row.iter().enumerate() {
                if j > i || (i + j) % 2 == 1 {
                    assert_eq!(v, 0, "M[{i}][{j}] at N = {n}");
                }
            }
        }
        // triangular, so det is the diagonal product
        let f = boubaker_matrix(n).unwrap();
        assert_eq!(f, f.lower_triangle());
        assert_eq!(f.diagonal().product(), 1.0);
    }
}

#[test]
fn recurrence_holds_up_to_twenty() {
    for n in 0..=20 {
        assert!(recurrence_check(n).unwrap(), "N = {n}");
    }
}

#[test]
fn first_polynomials() {
    let shown: Vec<String> = (0..5).map(|n| boubaker_polynomial(n).unwrap().to_string()).collect();
    assert_eq!(shown, ["1", "x", "x^2 + 2", "x^3 + x", "x^4 - 2"]);
}

proptest! {
    #[test]
    fn eval_series_on_unit_vectors(n in 0usize..=15, xs in prop::collection::vec(0.0f64..=1.0, 100)) {
        let basis = BoubakerBasis::new(15).unwrap();
        let mut e = vec![0.0; 16];
        e[n] = 1.0;
        let p = boubaker_polynomial(n).unwrap();
        for x in xs {
            let want = p.eval(x);
            let got = basis.eval_series(&e, x).unwrap();
            prop_assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0));
        }
    }

    #[test]
    fn monomial_round_trip(c in prop::collection::vec(-10.0f64..10.0, 1..12)) {
        let basis = BoubakerBasis::new(c.len() - 1).unwrap();
        let a = basis.to_monomial(&c).unwrap();
        let back = basis.from_monomial(a.coeffs()).unwrap();
        for (x, y) in back.iter().zip(&c) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }
}
