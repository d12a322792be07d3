use proptest::prelude::*;
use unitrack::jets::Jet;

fn jet() -> impl Strategy<Value = Jet> {
    prop::collection::vec(-2.0f64..2.0, 1..9).prop_map(Jet::new)
}

fn unit_jet() -> impl Strategy<Value = Jet> {
    (
        prop::bool::ANY,
        0.5f64..2.0,
        prop::collection::vec(-2.0f64..2.0, 0..8),
    )
        .prop_map(|(neg, c0, rest)| {
            let mut coeffs = vec![if neg { -c0 } else { c0 }];
            coeffs.extend(rest);
            Jet::new(coeffs)
        })
}

fn close(a: &Jet, b: &Jet, tol: f64) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.order(), b.order());
    for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
        prop_assert!(
            (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())),
            "{:?} vs {:?}",
            a,
            b
        );
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_laws(a in jet(), b in jet(), c in jet()) {
        close(&(&a + &b), &(&b + &a), 1e-12)?;
        close(&(&a * &b), &(&b * &a), 1e-12)?;
        close(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 1e-12)?;
        close(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), 1e-12)?;
    }

    #[test]
    fn division_undoes_multiplication(a in jet(), b in unit_jet()) {
        let back = (&a * &b).div(&b).unwrap();
        close(&back, &a.truncate(a.order().min(b.order())), 1e-10)?;
    }

    #[test]
    fn sqrt_squares_back(a in unit_jet()) {
        let pos = if a.value() < 0.0 { -&a } else { a };
        let r = pos.sqrt().unwrap();
        close(&(&r * &r), &pos, 1e-10)?;
    }

    #[test]
    fn pythagoras(a in jet()) {
        let (s, c) = a.sin_cos();
        close(&(&(&s * &s) + &(&c * &c)), &Jet::one(a.order()), 1e-12)?;
    }

    #[test]
    fn exp_is_a_homomorphism(a in jet(), b in jet()) {
        close(&(&a + &b).exp(), &(&a.exp() * &b.exp()), 1e-10)?;
    }
}

#[test]
fn truncation_keeps_the_shorter_order() {
    let a = Jet::new(vec![1.0, 2.0, 3.0]);
    let b = Jet::new(vec![1.0, 1.0]);
    assert_eq!((&a * &b).order(), 1);
    assert_eq!((&a + &b).coeffs(), &[2.0, 3.0]);
}
