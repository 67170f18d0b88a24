use hml_core::hypergeometric::{hg_principal, hg_principal_via, hg_series, Route, SeriesConfig};
use hml_core::modular::{lambda, reduce_fundamental, theta_quartics, QuarticMethod, ReductionGroup};
use hml_core::monodromy::{group_membership, GroupId};
use hml_core::numcore::{c, moebius, rat};
use hml_core::{ComplexValue, HGParams, IntMat2, Mat2, Tau};
use proptest::prelude::*;

fn generator() -> impl Strategy<Value = IntMat2> {
    prop_oneof![Just(IntMat2::T), Just(IntMat2::new(1, -1, 0, 1)), Just(IntMat2::J), Just(IntMat2::W),]
}

fn word() -> impl Strategy<Value = IntMat2> {
    prop::collection::vec(generator(), 0..8).prop_map(|gs| gs.into_iter().fold(IntMat2::IDENTITY, |acc, g| acc * g))
}

fn tau() -> impl Strategy<Value = ComplexValue> {
    (-2.0f64..2.0, 0.3f64..3.0).prop_map(|(x, y)| c(x, y))
}

fn params() -> impl Strategy<Value = HGParams> {
    (1i64..12, 1i64..12, 1i64..6, 1i64..4).prop_filter_map("c must avoid the poles", |(a, b, cn, cd)| {
        HGParams::new(rat(a, 12), rat(b, 12), rat(cn, cd)).ok()
    })
}

proptest! {
    #[test]
    fn words_have_unit_determinant(g in word()) {
        prop_assert_eq!(g.det(), 1);
        prop_assert_eq!(g * g.inverse().unwrap(), IntMat2::IDENTITY);
    }

    #[test]
    fn action_is_a_homomorphism(g in word(), h in word(), t in tau()) {
        let direct = moebius(&Mat2::from(g * h), t).unwrap();
        let staged = moebius(&Mat2::from(g), moebius(&Mat2::from(h), t).unwrap()).unwrap();
        prop_assert!((direct - staged).norm() < 1e-9 * (1.0 + direct.norm()));
    }

    #[test]
    fn reduction_round_trips(t in tau(), cube in any::<bool>()) {
        let group = if cube { ReductionGroup::Gamma2CubeRoot } else { ReductionGroup::SL2Z };
        let tau = Tau::new(t).unwrap();
        let red = reduce_fundamental(tau, group).unwrap();
        prop_assert!(group.contains(red.tau0));
        prop_assert!(red.roundtrip_error(tau).unwrap() < 1e-12);
    }

    #[test]
    fn level_two_words_fix_lambda(k in prop::collection::vec(0usize..4, 1..5), t in tau()) {
        let gens = [IntMat2::new(1, 2, 0, 1), IntMat2::new(1, -2, 0, 1), IntMat2::new(1, 0, 2, 1), IntMat2::new(1, 0, -2, 1)];
        let g = k.iter().fold(IntMat2::IDENTITY, |acc, &i| acc * gens[i]);
        prop_assert!(group_membership(&g, GroupId::Gamma2).unwrap());
        let tau = Tau::new(t).unwrap();
        let image = tau.act(&g).unwrap();
        prop_assume!(image.im() > 0.3);
        let (l0, l1) = (lambda(tau).unwrap(), lambda(image).unwrap());
        prop_assert!((l0 - l1).norm() < 1e-9 * (1.0 + l0.norm()));
    }

    #[test]
    fn quartic_routes_agree(t in tau()) {
        let tau = Tau::new(t).unwrap();
        let direct = theta_quartics(tau, QuarticMethod::Direct).unwrap();
        let reduced = theta_quartics(tau, QuarticMethod::Reduced).unwrap();
        for k in 0..3 {
            prop_assert!((direct[k] - reduced[k]).norm() < 1e-10 * (1.0 + direct[k].norm()));
        }
        prop_assert!((direct[0] - direct[1] - direct[2]).norm() < 1e-10 * (1.0 + direct[0].norm()));
    }

    #[test]
    fn series_matches_continuation(p in params(), r in 0.05f64..0.75, arg in -3.1f64..3.1) {
        let z = ComplexValue::from_polar(r, arg);
        let series = hg_series(&p, z, &SeriesConfig::default()).unwrap();
        let ode = hg_principal_via(&p, z, Route::OdePath).unwrap();
        prop_assert!((series - ode).norm() < 1e-11 * (1.0 + series.norm()), "{series} vs {ode}");
    }

    #[test]
    fn routes_agree_past_the_unit_circle(p in params(), r in 1.3f64..4.0, arg in 0.2f64..3.0, flip in any::<bool>()) {
        let z = ComplexValue::from_polar(r, if flip { -arg } else { arg });
        let ode = hg_principal_via(&p, z, Route::OdePath).unwrap();
        let chosen = hg_principal(&p, z).unwrap();
        prop_assert!((ode - chosen).norm() < 1e-9 * (1.0 + ode.norm()), "{ode} vs {chosen}");
    }
}
