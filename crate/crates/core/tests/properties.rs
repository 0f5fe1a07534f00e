//! Randomized and exhaustive algebraic properties.

use proptest::prelude::*;
use toyqm::f5qm::{measure_prob, measure_vector, Observable};
use toyqm::projective::{enumerate_states, is_product, pairing, Bra, Ket, PairState, State};
use toyqm::spekkens::{Permutation, Relabel, SpekkensObservable};
use toyqm::F5;

fn unit() -> impl Strategy<Value = F5> {
    prop::sample::select(F5::UNITS.to_vec())
}

fn nonzero_ket4() -> impl Strategy<Value = Ket<4>> {
    prop::array::uniform4(-2i32..=2)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(Ket::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn canonicalize_is_scale_invariant_dim4(v in nonzero_ket4(), k in unit()) {
        let s = v.canonicalize().unwrap();
        prop_assert_eq!(v.scale(k).canonicalize().unwrap(), s);
        prop_assert_eq!(s.ket().leading(), Some(F5::ONE));
        prop_assert_eq!(s.ket().canonicalize().unwrap(), s);
    }
}

proptest! {
    #[test]
    fn arithmetic_agrees_with_integers_mod_5(a in any::<i32>(), b in any::<i32>()) {
        let (x, y) = (F5::new(a as i64), F5::new(b as i64));
        prop_assert_eq!(x + y, F5::new(a as i64 + b as i64));
        prop_assert_eq!(x - y, F5::new(a as i64 - b as i64));
        prop_assert_eq!(x * y, F5::new(a as i64 * b as i64));
        prop_assert!((-2..=2).contains(&x.value()));
        prop_assert_eq!(x.to_string().parse::<F5>().unwrap(), x);
    }

    #[test]
    fn pair_state_text_round_trips(v in nonzero_ket4()) {
        let s = v.canonicalize().unwrap();
        prop_assert_eq!(s.to_string().parse::<PairState>().unwrap(), s);
    }

    #[test]
    fn pair_pairing_is_bilinear(
        x in prop::array::uniform4(-2i32..=2),
        u in prop::array::uniform4(-2i32..=2),
        v in prop::array::uniform4(-2i32..=2),
        k in unit(),
    ) {
        let (x, u, v) = (Bra::new(x), Ket::new(u), Ket::new(v));
        prop_assert_eq!(pairing(&x, &(u + v)), pairing(&x, &u) + pairing(&x, &v));
        prop_assert_eq!(pairing(&x, &u.scale(k)), k * pairing(&x, &u));
    }

    #[test]
    fn relabelling_composes(p in prop::sample::select(Permutation::all()), q in prop::sample::select(Permutation::all())) {
        for o in SpekkensObservable::all() {
            prop_assert_eq!(o.relabel(&q).relabel(&p), o.relabel(&p.compose(&q)));
        }
    }
}

#[test]
fn pairing_is_bilinear_dim2_exhaustive() {
    let all: Vec<[i32; 2]> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| [a, b])).collect();
    for x in &all {
        let x = Bra::new(*x);
        for u in &all {
            for v in &all {
                let (u, v) = (Ket::new(*u), Ket::new(*v));
                assert_eq!(pairing(&x, &(u + v)), pairing(&x, &u) + pairing(&x, &v));
                for k in F5::ALL {
                    assert_eq!(pairing(&x, &u.scale(k)), k * pairing(&x, &u));
                }
            }
        }
    }
}

#[test]
fn measurement_is_projectively_well_defined() {
    for s in enumerate_states::<2>() {
        for o in Observable::all() {
            for k in F5::UNITS {
                assert_eq!(measure_vector(&o, &s.ket().scale(k)).unwrap(), measure_prob(&o, &s));
            }
        }
    }
}

#[test]
fn products_are_closed_under_scaling() {
    for s in enumerate_states::<4>() {
        for k in F5::UNITS {
            let t = State::new(s.ket().scale(k)).unwrap();
            assert_eq!(is_product(&t).is_some(), is_product(&s).is_some());
        }
    }
}
