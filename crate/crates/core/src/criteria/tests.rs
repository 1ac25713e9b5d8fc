use proptest::prelude::*;

use super::*;
use crate::jsf::jsf_sum;

fn regime(p: u64, q: QClass) -> ParamRegime {
    ParamRegime::new(p, q).unwrap()
}

fn dp(p: u64, delta: i64) -> DeltaParams {
    DeltaParams::new(p, BigInt::from(delta)).unwrap()
}

#[test]
fn delta_params() {
    assert_eq!(dp(5, -3).delta_p(), 2);
    assert_eq!(dp(5, 12).delta_p(), 2);
    assert_eq!(dp(0, -3).delta_p(), 3);
    assert_eq!(dp(7, 0).delta_p(), 0);
    assert!(DeltaParams::new(6, BigInt::from(1)).is_err());
    let half = Field::Rationals
        .from_rational(&num_rational::BigRational::new(1.into(), 2.into()))
        .unwrap();
    assert!(DeltaParams::from_value(&half).is_err());
    let r = DeltaParams::from_value(&Field::prime(7).unwrap().from_int(-2)).unwrap();
    assert_eq!((r.characteristic(), r.delta_p()), (7, 5));
}

#[test]
fn hecke_examples() {
    assert!(hecke_a_criterion(3, regime(5, QClass::One)));
    assert!(!hecke_a_criterion(3, regime(3, QClass::One)));
    assert!(!hecke_a_criterion(2, regime(0, QClass::RootOfUnity(2))));
    assert!(hecke_a_criterion(2, regime(0, QClass::RootOfUnity(3))));
    assert!(hecke_a_criterion(9, regime(0, QClass::One)));
    assert!(hecke_a_criterion(9, regime(2, QClass::NonRoot)));
    assert!(!hecke_b_criterion(4, regime(7, QClass::RootOfUnity(3))));
}

#[test]
fn walled_examples() {
    assert!(walled_brauer_criterion(2, 1, &dp(5, 2)));
    assert!(!walled_brauer_criterion(2, 2, &dp(5, 2)));
    assert!(walled_brauer_criterion(3, 1, &dp(0, 0)));
    assert!(!walled_brauer_criterion(2, 2, &dp(0, 0)));
    assert!(walled_brauer_criterion(2, 1, &dp(3, 0)));
    assert!(!walled_brauer_criterion(3, 1, &dp(3, 0)));
    assert!(!walled_brauer_criterion(1, 1, &dp(2, 0)));
    // no wall crossing: a symmetric group algebra
    assert!(walled_brauer_criterion(4, 0, &dp(5, 1)));
    assert!(!walled_brauer_criterion(0, 5, &dp(5, 1)));
    assert!(walled_brauer_criterion(7, 0, &dp(0, 1)));
}

#[test]
fn brauer_examples() {
    assert!(brauer_criterion(3, &dp(7, 3)));
    assert!(!brauer_criterion(4, &dp(7, 3)));
    assert!(brauer_criterion(5, &dp(0, 0)));
    assert!(!brauer_criterion(2, &dp(0, 0)));
    assert!(brauer_criterion(2, &dp(0, -2)));
    assert!(!brauer_criterion(3, &dp(0, -2)));
    assert!(brauer_criterion(4, &dp(0, -1)));
    assert!(!brauer_criterion(5, &dp(0, -1)));
    assert!(brauer_criterion(4, &dp(0, 3)));
    assert!(!brauer_criterion(5, &dp(0, 3)));
    assert!(brauer_criterion(1, &dp(2, 1)));
    assert!(!brauer_criterion(2, &dp(2, 1)));
    // even delta_p: d <= min(delta_p + 1, p - delta_p + 3, p - 1)
    assert!(brauer_criterion(3, &dp(11, 2)));
    assert!(!brauer_criterion(4, &dp(11, 2)));
    assert!(brauer_criterion(4, &dp(7, 6)));
    assert!(!brauer_criterion(5, &dp(7, 6)));
    assert!(!brauer_criterion(5, &dp(5, 0)));
    assert!(brauer_criterion(3, &dp(5, 0)));
}

#[test]
fn brauer_grid_agrees_with_gram() {
    let cells = delta_grid(false, &[(1, 0), (2, 0), (3, 0)], &(-3..=4).collect::<Vec<_>>(), &[5]).unwrap();
    let reports = cross_validate(&cells, &[Engine::Gram], CrossOptions::default()).unwrap();
    assert_eq!(reports.len(), cells.len());
    for r in &reports {
        assert!(r.gram_verdict().is_some());
        assert!(r.agrees(), "{}", r.cell);
    }
}

#[test]
fn hecke_a_grid_agrees_with_gram() {
    let cells = hecke_grid(false, &[2, 3], &[5]).unwrap();
    // q = 1, 2, 3 in F_5 (4 = -1 skipped), then Q
    assert_eq!(cells.len(), 8);
    for r in cross_validate(&cells, &[Engine::Gram, Engine::Jsf], CrossOptions::default()).unwrap() {
        assert!(r.agrees(), "{}", r.cell);
        assert!(r.jsf_verdict().is_some());
    }
}

#[test]
fn walled_cell_with_both_engines() {
    let cell = AlgebraDescriptor::WalledBrauer {
        r: 2,
        s: 1,
        delta: Field::prime(5).unwrap().from_int(2),
    };
    let r = &cross_validate(&[cell], &[Engine::Gram, Engine::Jsf], CrossOptions { jobs: 1, ..Default::default() })
        .unwrap()[0];
    assert_eq!(r.closed_form, Some(true));
    assert_eq!(r.gram_verdict(), Some(true));
    assert_eq!(r.jsf_verdict(), Some(true));
    assert!(r.agrees());
}

#[test]
fn jsf_routes() {
    let f5 = Field::prime(5).unwrap();
    let walled = AlgebraDescriptor::WalledBrauer { r: 2, s: 2, delta: f5.from_int(2) };
    assert_eq!(jsf_route(&walled, 24).unwrap().0, JsfRoute::Mixed { rank: 7, r: 2, s: 2 });
    let brauer = AlgebraDescriptor::Brauer { d: 3, delta: f5.from_int(2) };
    // odd lift of 2 mod 5 that is at least 5
    assert_eq!(jsf_route(&brauer, 24).unwrap().0, JsfRoute::Power { kind: LieKind::B, rank: 3, d: 3 });
    let symplectic = AlgebraDescriptor::Brauer { d: 2, delta: Field::Rationals.from_int(-4) };
    assert_eq!(jsf_route(&symplectic, 24).unwrap().0, JsfRoute::Power { kind: LieKind::C, rank: 2, d: 2 });
    let type_d = AlgebraDescriptor::Brauer { d: 2, delta: Field::Rationals.from_int(4) };
    assert!(jsf_route(&type_d, 24).is_err());
    let odd_char2 = AlgebraDescriptor::Brauer { d: 2, delta: Field::prime(2).unwrap().from_int(1) };
    assert!(jsf_route(&odd_char2, 24).is_err());
    let minus_one = AlgebraDescriptor::HeckeA { d: 2, q: f5.from_int(-1) };
    assert!(jsf_route(&minus_one, 24).is_err());
    assert!(jsf_route(&walled, 5).is_err());
}

#[test]
fn engine_failures_are_recorded() {
    let cell = AlgebraDescriptor::Brauer { d: 4, delta: Field::Rationals.from_int(1) };
    let opts = CrossOptions { basis_cap: 50, ..Default::default() };
    let r = &cross_validate(&[cell], &[Engine::Gram], opts).unwrap()[0];
    assert!(matches!(r.gram, Some(Outcome::Failed(_))));
    assert!(r.agrees());
    assert!(cross_validate(&[], &[], CrossOptions::default()).is_err());
}

#[test]
fn transfer_for_brauer() {
    for delta in 1..=3 {
        let rep = transfer_check(|delta| AlgebraDescriptor::Brauer { d: 3, delta }, delta, &[101, 103], 2000).unwrap();
        assert!(rep.agrees(), "delta = {delta}");
    }
    // B_2(0) is not semisimple: det vanishes over Q and every F_p
    let rep = transfer_check(|delta| AlgebraDescriptor::Brauer { d: 2, delta }, 0, &[5, 7], 2000).unwrap();
    assert!(!rep.semisimple_q && rep.agrees());
    // 4 delta^2 at delta = 3 is 36: p = 3 divides it
    let rep = transfer_check(|delta| AlgebraDescriptor::Brauer { d: 2, delta }, 3, &[3, 5], 2000).unwrap();
    assert_eq!(rep.primes, vec![(3, true, false), (5, false, true)]);
    assert!(!rep.agrees());
}

// Outside the tested grids the type B statement breaks: with ord(q^2) = 4 we
// have q^4 = -1, which kills the factor 1 + q^4 of the Poincare polynomial.
#[test]
fn hecke_b_with_q4_minus_one() {
    let f = Field::prime(17).unwrap();
    let q = f.from_int(2);
    assert_eq!(q.pow(4).unwrap(), f.from_int(-1));
    let reg = ParamRegime::from_q(&q).unwrap().unwrap();
    assert_eq!(reg.q_class(), QClass::RootOfUnity(4));
    for d in 2..=3 {
        assert!(hecke_b_criterion(d, reg));
        let det = gram_determinant(&AlgebraDescriptor::HeckeB { d, q: q.clone() }, 2000).unwrap();
        assert!(det.is_zero(), "d = {d}");
        let det_a = gram_determinant(&AlgebraDescriptor::HeckeA { d, q: q.clone() }, 2000).unwrap();
        assert!(!det_a.is_zero());
    }
}

#[test]
fn walled_witness_weight() {
    // p = 7, delta_p = 3, (r, s) = (5, 1): lambda = 5 eps_1 - eps_3 in gl_3
    let sys = build_root_system(LieType::new(LieKind::A, 3).unwrap()).unwrap();
    let lambda = Weight::from_ints(&[5, 0, -1]);
    let ws = weyl_factors_mixed(&sys, 5, 1).unwrap();
    assert!(ws.contains(&lambda));
    let rep = jsf_sum(&sys, &lambda, regime(7, QClass::One)).unwrap();
    assert!(!rep.simple);
    assert!(rep
        .regular_terms()
        .any(|t| t.root.coords() == [1, 0, -1] && t.k == 1));
    assert!(!walled_brauer_criterion(5, 1, &dp(7, 3)));
}

#[test]
fn walled_boundary_witnesses() {
    // r eps_1 - s eps_n at r + s = p - delta_p + 2 and + 3
    let (p, d) = (7u64, 3usize);
    let sys = build_root_system(LieType::new(LieKind::A, d).unwrap()).unwrap();
    for t in [p as usize - d + 2, p as usize - d + 3] {
        for r in 2..t - 1 {
            let s = t - r;
            let mut coords = vec![0i64; d];
            coords[0] = r as i64;
            coords[d - 1] = -(s as i64);
            let lambda = Weight::from_ints(&coords);
            let rep = jsf_sum(&sys, &lambda, regime(p, QClass::One)).unwrap();
            assert!(!rep.simple, "({r},{s})");
            assert!(!walled_brauer_criterion(r, s, &dp(p, d as i64)));
        }
    }
}

#[test]
fn brauer_witness_weight() {
    // n = p = 7, type B_3, lambda = 4 eps_1 + 2 eps_2 + eps_3 inside V^{(x)7}
    let sys = build_root_system(LieType::new(LieKind::B, 3).unwrap()).unwrap();
    let lambda = Weight::from_ints(&[4, 2, 1]);
    let rep = jsf_sum(&sys, &lambda, regime(7, QClass::One)).unwrap();
    assert!(!rep.simple);
    let surviving: Vec<&[i64]> = rep.regular_terms().map(|t| t.root.coords()).collect();
    assert!(surviving.contains(&[1, 0, 1].as_slice()), "{surviving:?}");
    assert!(!brauer_criterion(7, &dp(7, 0)));
    assert!(brauer_criterion(5, &dp(7, 0)));
}

fn small_primes() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23])
}

proptest! {
    #[test]
    fn walled_is_symmetric(p in prop::sample::select(vec![0u64, 2, 3, 5, 7, 11]), delta in -30i64..30, r in 0usize..12, s in 0usize..12) {
        prop_assume!(r + s >= 1);
        let dp = dp(p, delta);
        prop_assert_eq!(walled_brauer_criterion(r, s, &dp), walled_brauer_criterion(s, r, &dp));
    }

    #[test]
    fn walled_failure_propagates(p in small_primes(), delta in -30i64..30, r in 1usize..12, s in 1usize..12) {
        let dp = dp(p, delta);
        if !walled_brauer_criterion(r, s, &dp) {
            prop_assert!(!walled_brauer_criterion(r + 1, s + 1, &dp));
        }
    }

    #[test]
    fn brauer_failure_propagates(p in small_primes(), delta in -30i64..30, d in 1usize..30) {
        let dp = dp(p, delta);
        if !brauer_criterion(d, &dp) {
            prop_assert!(!brauer_criterion(d + 2, &dp));
        }
    }

    #[test]
    fn subalgebra_obstructions(p in small_primes(), delta in -30i64..30, r in 1usize..30, s in 1usize..30) {
        let dp = dp(p, delta);
        if p as usize <= r.min(s) {
            prop_assert!(!walled_brauer_criterion(r, s, &dp));
        }
        if p as usize <= r {
            prop_assert!(!brauer_criterion(r, &dp));
        }
    }

    #[test]
    fn hecke_is_monotone(p in prop::sample::select(vec![0u64, 2, 3, 5, 7]), ell in 2u64..12, d in 1usize..14) {
        for class in [QClass::One, QClass::RootOfUnity(ell), QClass::NonRoot] {
            let reg = regime(p, class);
            if !hecke_a_criterion(d, reg) {
                prop_assert!(!hecke_a_criterion(d + 1, reg));
            }
        }
    }
}
