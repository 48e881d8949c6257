use std::sync::{Arc, OnceLock};

use gz_engine::arith::{frac, int, AffineLinearForm, Frf, Polynomial, Scalar, VariableLayout};
use gz_engine::groups::{ReflectionGroup, RootSystem};
use gz_engine::skew::SkewElement;
use proptest::prelude::*;

fn layout() -> VariableLayout {
    VariableLayout::flat(3)
}

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), -5i64..=5), 0..=max_terms).prop_map(|terms| {
        let terms = terms.into_iter().map(|(e, c)| (e, int(c))).collect::<Vec<_>>();
        Polynomial::from_terms(&layout(), terms).unwrap()
    })
}

/// A few root-like and shifted forms.
fn forms() -> Vec<AffineLinearForm> {
    let f = |c: [i64; 3], k: i64| AffineLinearForm::normalized(c.iter().map(|&x| int(x)).collect(), int(k)).unwrap().1;
    vec![f([1, -1, 0], 0), f([1, 0, -1], 1), f([0, 1, -1], -2), f([1, 1, 0], 0), f([0, 0, 1], 3)]
}

fn frf_strategy() -> impl Strategy<Value = Frf> {
    (poly_strategy(4), prop::collection::vec(0usize..5, 0..3)).prop_map(|(p, dens)| {
        let fs = forms();
        &Frf::from(p) * &Frf::recip_product(&layout(), dens.iter().map(|&i| &fs[i]))
    })
}

fn point_strategy() -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-20i64..20, 1i64..7), 3).prop_map(|v| v.into_iter().map(|(n, d)| frac(n, d)).collect())
}

proptest! {
    #![proptest_config(cases(128))]

    #[test]
    fn frf_ring_laws(a in frf_strategy(), b in frf_strategy(), c in frf_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Frf::one(&layout()), a.clone());
    }

    #[test]
    fn eval_commutes_with_arithmetic(a in frf_strategy(), b in frf_strategy(), x in point_strategy()) {
        if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
            prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
        }
    }

    #[test]
    fn translation_round_trip(a in frf_strategy(), c in point_strategy(), x in point_strategy()) {
        let neg: Vec<Scalar> = c.iter().map(|t| -t).collect();
        prop_assert_eq!(a.translate(&c).translate(&neg), a.clone());
        let shifted: Vec<Scalar> = x.iter().zip(&c).map(|(p, q)| p + q).collect();
        if let Ok(v) = a.eval(&shifted) {
            prop_assert_eq!(a.translate(&c).eval(&x).unwrap(), v);
        }
    }

    #[test]
    fn exact_divide_inverts_multiplication(p in poly_strategy(5), i in 0usize..5) {
        let l = &forms()[i];
        let lp = Polynomial::linear(&layout(), l.coeffs(), l.constant());
        let prod = &p * &lp;
        if !p.is_zero() {
            prop_assert_eq!(prod.exact_divide(l).unwrap(), p);
        }
    }

    #[test]
    fn taylor_agrees_with_value(a in frf_strategy(), x in point_strategy()) {
        if let Ok(v) = a.eval(&x) {
            let t = a.taylor(&x, 2).unwrap();
            prop_assert_eq!(t.as_constant().unwrap_or_else(|| t.eval(&[int(0), int(0), int(0)]).unwrap()), v);
        }
    }
}

fn s3() -> Arc<ReflectionGroup> {
    static G: OnceLock<Arc<ReflectionGroup>> = OnceLock::new();
    G.get_or_init(|| ReflectionGroup::generate(RootSystem::type_a_product(&[3]).unwrap()).unwrap()).clone()
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, failure_persistence: None, ..ProptestConfig::default() }
}

fn skew_strategy(group: Arc<ReflectionGroup>) -> impl Strategy<Value = SkewElement> {
    let order = group.order();
    prop::collection::vec((frf_strategy(), 0..order, prop::collection::vec(-1i64..=1, 3)), 1..3).prop_map(move |terms| {
        terms.into_iter().fold(SkewElement::zero(&group), |acc, (f, g, s)| {
            &acc + &SkewElement::term(&group, f, g, s.into_iter().map(int).collect())
        })
    })
}

proptest! {
    #![proptest_config(cases(100))]

    #[test]
    fn skew_product_is_associative(
        (a, b, c) in (skew_strategy(s3()), skew_strategy(s3()), skew_strategy(s3()))
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn action_is_a_homomorphism((a, b) in (skew_strategy(s3()), skew_strategy(s3())), f in frf_strategy()) {
        prop_assert_eq!((&a * &b).apply(&f), a.apply(&b.apply(&f)));
        prop_assert_eq!((&a + &b).apply(&f), &a.apply(&f) + &b.apply(&f));
    }

    #[test]
    fn group_action_on_functions(g in 0usize..6, h in 0usize..6, f in frf_strategy()) {
        let grp = s3();
        prop_assert_eq!(grp.act_frf(grp.mul(g, h), &f), grp.act_frf(g, &grp.act_frf(h, &f)));
        let sym = (0..6).fold(Frf::zero(&layout()), |acc, k| &acc + &grp.act_frf(k, &f));
        prop_assert_eq!(grp.act_frf(g, &sym), sym);
    }
}
