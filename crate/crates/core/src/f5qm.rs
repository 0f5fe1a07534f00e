//! Quantum mechanics over F₅: observables, the abs-norm probability rule,
//! superposition, and single-subsystem collapse of two-system states.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::F5;
use crate::outcome::{prob, Axis, Outcome, OutcomeDistribution, Probability, Subsystem};
use crate::projective::{
    enumerate_states, kernel, pairing, tensor, tensor_bra, Bra, Ket, Named, PairState,
    SingleState, State,
};

/// An ordered pair of bras; the first belongs to outcome `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Observable {
    pub axis: Axis,
    pub plus: Bra<2>,
    pub minus: Bra<2>,
}

impl Observable {
    pub fn of(axis: Axis) -> Observable {
        let (p, m) = match axis {
            Axis::X => (Named::C, Named::D),
            Axis::Y => (Named::E, Named::F),
            Axis::Z => (Named::A, Named::B),
        };
        Observable { axis, plus: p.bra(), minus: m.bra() }
    }

    pub fn all() -> [Observable; 3] {
        Axis::ALL.map(Observable::of)
    }

    pub fn bra(&self, outcome: Outcome) -> &Bra<2> {
        match outcome {
            Outcome::Plus => &self.plus,
            Outcome::Minus => &self.minus,
        }
    }
}

/// Outcome probabilities for measuring `o` on a single-system state.
pub fn measure_prob(o: &Observable, psi: &SingleState) -> OutcomeDistribution {
    measure_vector(o, psi.ket()).expect("projective states are nonzero")
}

/// As [`measure_prob`], for an unnormalized representative.
pub fn measure_vector(o: &Observable, v: &Ket<2>) -> Result<OutcomeDistribution> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let w = |x: &Bra<2>| pairing(x, v).abs_norm();
    Ok(OutcomeDistribution::from_weights(w(&o.plus), w(&o.minus)))
}

/// The state on which `outcome` is certain: the kernel of the opposite bra.
pub fn eigenket(o: &Observable, outcome: Outcome) -> SingleState {
    kernel(o.bra(outcome.opposite())).expect("observable bras are nonzero")
}

/// `rep(u) + coeff · rep(v)` on canonical representatives, before canonicalization.
pub fn superpose_raw<const N: usize>(u: &State<N>, coeff: F5, v: &State<N>) -> Ket<N> {
    *u.ket() + v.ket().scale(coeff)
}

/// Projective class of `rep(u) + coeff · rep(v)`.
pub fn superpose<const N: usize>(u: &State<N>, coeff: F5, v: &State<N>) -> Result<State<N>> {
    if coeff.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    superpose_raw(u, coeff, v)
        .canonicalize()
        .map_err(|_| Error::ZeroSuperposition)
}

/// Joint outcome probabilities for measuring `o1` on subsystem 1 and `o2` on subsystem 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDistribution(BTreeMap<(Outcome, Outcome), Probability>);

impl JointDistribution {
    pub fn get(&self, s: Outcome, t: Outcome) -> Probability {
        self.0[&(s, t)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Outcome, Outcome), &Probability)> {
        self.0.iter()
    }

    pub fn marginal(&self, subsystem: Subsystem) -> OutcomeDistribution {
        let sum = |o: Outcome| -> Probability {
            self.0
                .iter()
                .filter(|((s, t), _)| match subsystem {
                    Subsystem::First => *s == o,
                    Subsystem::Second => *t == o,
                })
                .map(|(_, p)| *p)
                .sum()
        };
        OutcomeDistribution { p_plus: sum(Outcome::Plus), p_minus: sum(Outcome::Minus) }
    }
}

/// `P(s,t) = |⟨x_s ⊗ y_t|ψ⟩| / Σ |⟨x_s' ⊗ y_t'|ψ⟩|`.
pub fn joint_prob(o1: &Observable, o2: &Observable, psi: &PairState) -> JointDistribution {
    let mut weights = BTreeMap::new();
    for s in Outcome::ALL {
        for t in Outcome::ALL {
            let bra = tensor_bra(o1.bra(s), o2.bra(t));
            weights.insert((s, t), pairing(&bra, psi.ket()).abs_norm());
        }
    }
    // The four product bras span the dual space, so some weight is nonzero.
    let total: u32 = weights.values().sum();
    JointDistribution(weights.into_iter().map(|(k, w)| (k, prob(w, total))).collect())
}

/// Contracts `x` against the measured subsystem of `psi`, leaving a vector on the other.
pub fn partial_pairing(x: &Bra<2>, psi: &Ket<4>, subsystem: Subsystem) -> Ket<2> {
    let x = x.components();
    match subsystem {
        Subsystem::First => Ket([x[0] * psi[0] + x[1] * psi[2], x[0] * psi[1] + x[1] * psi[3]]),
        Subsystem::Second => Ket([x[0] * psi[0] + x[1] * psi[1], x[0] * psi[2] + x[1] * psi[3]]),
    }
}

fn residual_weights(psi: &PairState, subsystem: Subsystem, o: &Observable) -> [(Ket<2>, u32); 2] {
    Outcome::ALL.map(|out| {
        let r = partial_pairing(o.bra(out), psi.ket(), subsystem);
        let w = if r.is_zero() { 0 } else { 1 };
        (r, w)
    })
}

/// Measures `o` on one subsystem of `psi`. Returns the outcome probability and
/// the product post-measurement state `eigenket ⊗ residual` (or its mirror).
pub fn subsystem_collapse(
    psi: &PairState,
    subsystem: Subsystem,
    o: &Observable,
    outcome: Outcome,
) -> Result<(Probability, PairState)> {
    let [(r_plus, w_plus), (r_minus, w_minus)] = residual_weights(psi, subsystem, o);
    let (residual, weight) = match outcome {
        Outcome::Plus => (r_plus, w_plus),
        Outcome::Minus => (r_minus, w_minus),
    };
    if weight == 0 {
        return Err(Error::ImpossibleOutcome);
    }
    let eig = eigenket(o, outcome);
    let post = match subsystem {
        Subsystem::First => tensor(eig.ket(), &residual),
        Subsystem::Second => tensor(&residual, eig.ket()),
    };
    Ok((prob(weight, w_plus + w_minus), post.canonicalize()?))
}

/// One measurement setting in a collapse profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Setting {
    pub subsystem: Subsystem,
    pub axis: Axis,
    pub outcome: Outcome,
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.subsystem, self.axis, self.outcome)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollapseEntry {
    pub probability: Probability,
    pub post: PairState,
}

impl Serialize for CollapseEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(3))?;
        m.serialize_entry("probability", &self.probability.to_string())?;
        m.serialize_entry("post", &self.post)?;
        m.serialize_entry("factored", &self.post.factored())?;
        m.end()
    }
}

/// Every possible single-subsystem measurement result of a two-system state.
/// Impossible outcomes are absent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseProfile(pub BTreeMap<Setting, CollapseEntry>);

impl CollapseProfile {
    pub fn get(&self, subsystem: Subsystem, axis: Axis, outcome: Outcome) -> Option<&CollapseEntry> {
        self.0.get(&Setting { subsystem, axis, outcome })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Setting, &CollapseEntry)> {
        self.0.iter()
    }

    /// Post states reachable when measuring `axis` on `subsystem`.
    pub fn posts(&self, subsystem: Subsystem, axis: Axis) -> Vec<PairState> {
        self.0
            .iter()
            .filter(|(k, _)| k.subsystem == subsystem && k.axis == axis)
            .map(|(_, e)| e.post)
            .collect()
    }
}

impl Serialize for CollapseProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(&k.to_string(), v)?;
        }
        m.end()
    }
}

pub fn collapse_profile(psi: &PairState) -> CollapseProfile {
    let mut entries = BTreeMap::new();
    for subsystem in Subsystem::ALL {
        for o in Observable::all() {
            for outcome in Outcome::ALL {
                if let Ok((probability, post)) = subsystem_collapse(psi, subsystem, &o, outcome) {
                    entries.insert(
                        Setting { subsystem, axis: o.axis, outcome },
                        CollapseEntry { probability, post },
                    );
                }
            }
        }
    }
    CollapseProfile(entries)
}

/// A case where the marginal of [`joint_prob`] differs from the collapse rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarginalDisagreement {
    pub state: PairState,
    pub measured: u8,
    pub axis: Axis,
    pub other_axis: Axis,
    pub collapse_p_plus: String,
    pub marginal_p_plus: String,
}

/// Scans all of P³(F₅) for settings where the two two-system probability rules disagree.
pub fn marginal_disagreements() -> Vec<MarginalDisagreement> {
    let mut out = Vec::new();
    for psi in enumerate_states::<4>() {
        for subsystem in Subsystem::ALL {
            for o in Observable::all() {
                let [(_, wp), (_, wm)] = residual_weights(&psi, subsystem, &o);
                let collapse = OutcomeDistribution::from_weights(wp, wm);
                for other in Observable::all() {
                    let joint = match subsystem {
                        Subsystem::First => joint_prob(&o, &other, &psi),
                        Subsystem::Second => joint_prob(&other, &o, &psi),
                    };
                    let marginal = joint.marginal(subsystem);
                    if marginal != collapse {
                        out.push(MarginalDisagreement {
                            state: psi,
                            measured: subsystem.index(),
                            axis: o.axis,
                            other_axis: other.axis,
                            collapse_p_plus: collapse.p_plus.to_string(),
                            marginal_p_plus: marginal.p_plus.to_string(),
                        });
                    }
                }
            }
        }
    }
    out
}
