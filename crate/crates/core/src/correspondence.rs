//! The dictionary between the toy model and F₅ quantum mechanics, and the
//! entanglement classification built on it.
//!
//! Single systems map `1v2↔a, 3v4↔b, 1v3↔c, 2v4↔d, 2v3↔e, 1v4↔f`; pairs map
//! through the tensor product. A toy-model entangled state has an F₅ analog
//! when some entangled vector in P³(F₅) produces the same collapse profile:
//! the same possible outcomes, with the same probabilities, leading to the
//! same product states, for every observable on either subsystem.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f5qm::{collapse_profile, superpose, superpose_raw, CollapseEntry, CollapseProfile, Setting};
use crate::field::F5;
use crate::outcome::{Subsystem};
use crate::projective::{enumerate_states, is_product, tensor_states, Ket, Named, PairState, SingleState};
use crate::spekkens::{
    epistemic_states, measure_pair, sum_disjoint, EpistemicState, PairEpistemicState, Permutation,
    SpekkensObservable, SumVariant,
};

pub const REPORT_SCHEMA: &str = "toyqm-report/1";

fn named_of(e: EpistemicState) -> Named {
    match (e.lo().label(), e.hi().label()) {
        (1, 2) => Named::A,
        (3, 4) => Named::B,
        (1, 3) => Named::C,
        (2, 4) => Named::D,
        (2, 3) => Named::E,
        (1, 4) => Named::F,
        _ => unreachable!("epistemic states have two distinct labels in 1..=4"),
    }
}

pub fn ket_of(e: EpistemicState) -> SingleState {
    named_of(e).state()
}

pub fn epistemic_of(s: &SingleState) -> Result<EpistemicState> {
    epistemic_states()
        .into_iter()
        .find(|e| ket_of(*e) == *s)
        .ok_or(Error::NoProductImage)
}

pub fn pair_ket_of(e1: EpistemicState, e2: EpistemicState) -> PairState {
    tensor_states(&ket_of(e1), &ket_of(e2))
}

/// Inverse dictionary on P³(F₅); entangled vectors have no image.
pub fn pair_epistemic_of(s: &PairState) -> Result<(EpistemicState, EpistemicState)> {
    let (u, v) = is_product(s).ok_or(Error::NoProductImage)?;
    Ok((epistemic_of(&u)?, epistemic_of(&v)?))
}

/// F₅ coefficient for each coherent-sum variant: `+1, -1, +2, -2`.
pub fn coefficient(variant: SumVariant) -> F5 {
    match variant.index() {
        1 => F5::ONE,
        2 => F5::MINUS_ONE,
        3 => F5::TWO,
        _ => F5::MINUS_TWO,
    }
}

/// The sum of any two epistemic states, defined through `ket(e1) + λ·ket(e2)`.
pub fn extended_sum(e1: EpistemicState, variant: SumVariant, e2: EpistemicState) -> Result<EpistemicState> {
    let s = superpose(&ket_of(e1), coefficient(variant), &ket_of(e2))?;
    epistemic_of(&s)
}

/// The unnormalized F₅ vector behind [`extended_sum`].
pub fn extended_sum_raw(e1: EpistemicState, variant: SumVariant, e2: EpistemicState) -> Ket<2> {
    superpose_raw(&ket_of(e1), coefficient(variant), &ket_of(e2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumComparisonRow {
    pub left: EpistemicState,
    pub right: EpistemicState,
    pub variant: SumVariant,
    pub disjoint_rule: EpistemicState,
    pub induced_rule: EpistemicState,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumComparison {
    pub rows: Vec<SumComparisonRow>,
    pub disagreements: usize,
}

impl SumComparison {
    pub fn row(&self, left: EpistemicState, right: EpistemicState, variant: SumVariant) -> Option<&SumComparisonRow> {
        self.rows.iter().find(|r| r.left == left && r.right == right && r.variant == variant)
    }
}

/// Compares the toy model's coherent sums with the F₅-induced sums over
/// every ordered disjoint pair and every variant.
pub fn compare_sum_definitions() -> SumComparison {
    let mut rows = Vec::new();
    for left in epistemic_states() {
        let right = left.complement();
        for variant in SumVariant::ALL {
            let disjoint_rule = sum_disjoint(left, right, variant).expect("complements are disjoint");
            let induced_rule = extended_sum(left, variant, right).expect("distinct states never cancel");
            rows.push(SumComparisonRow {
                left,
                right,
                variant,
                disjoint_rule,
                induced_rule,
                agree: disjoint_rule == induced_rule,
            });
        }
    }
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    SumComparison { rows, disagreements }
}

/// The collapse profile of a toy-model pair state, written in F₅ vocabulary.
pub fn spekkens_profile(state: &PairEpistemicState) -> CollapseProfile {
    let mut entries = BTreeMap::new();
    for subsystem in Subsystem::ALL {
        for o in SpekkensObservable::all() {
            let axis = o.axis().expect("named observable");
            for r in measure_pair(state, subsystem, o) {
                entries.insert(
                    Setting { subsystem, axis, outcome: r.outcome },
                    CollapseEntry { probability: r.probability, post: pair_ket_of(r.collapsed.0, r.collapsed.1) },
                );
            }
        }
    }
    CollapseProfile(entries)
}

/// The 120 entangled vectors of P³(F₅), in enumeration order.
pub fn entangled_f5_states() -> Vec<PairState> {
    enumerate_states::<4>().into_iter().filter(|s| is_product(s).is_none()).collect()
}

pub fn find_f5_analogs(perm: &Permutation) -> Vec<PairState> {
    find_analogs_among(perm, &entangled_f5_states())
}

/// As [`find_f5_analogs`] over a caller-supplied candidate list; the result is sorted.
pub fn find_analogs_among(perm: &Permutation, candidates: &[PairState]) -> Vec<PairState> {
    let target = spekkens_profile(&PairEpistemicState::Entangled(*perm));
    let mut found: Vec<PairState> =
        candidates.iter().copied().filter(|s| collapse_profile(s) == target).collect();
    found.sort();
    found
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub perm: Permutation,
    pub even: bool,
    pub matched: bool,
    pub analogs: Vec<PairState>,
    pub profile: CollapseProfile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub schema: &'static str,
    pub rows: Vec<ClassificationRow>,
    pub matched: usize,
    pub unmatched: usize,
    /// Whether the matched permutations are exactly the odd ones.
    pub matched_are_odd: bool,
    /// Whether no F₅ state is an analog of two different permutations.
    pub analogs_disjoint: bool,
    /// Sorted distinct analog-list lengths among matched permutations.
    pub analog_counts: Vec<usize>,
    /// Number of distinct F₅ entangled states that are an analog of something.
    pub analog_states_total: usize,
}

impl ClassificationReport {
    pub fn row(&self, perm: &Permutation) -> Option<&ClassificationRow> {
        self.rows.iter().find(|r| r.perm == *perm)
    }
}

pub fn classify_all() -> ClassificationReport {
    classify_among(&entangled_f5_states())
}

/// Classification against an explicit candidate list; the report does not
/// depend on the candidates' order.
pub fn classify_among(candidates: &[PairState]) -> ClassificationReport {
    let rows: Vec<ClassificationRow> = Permutation::all()
        .into_iter()
        .map(|perm| {
            let analogs = find_analogs_among(&perm, candidates);
            ClassificationRow {
                perm,
                even: perm.is_even(),
                matched: !analogs.is_empty(),
                analogs,
                profile: spekkens_profile(&PairEpistemicState::Entangled(perm)),
            }
        })
        .collect();
    let matched = rows.iter().filter(|r| r.matched).count();
    let matched_are_odd = rows.iter().all(|r| r.matched == !r.even);
    let total_listed: usize = rows.iter().map(|r| r.analogs.len()).sum();
    let distinct: BTreeSet<PairState> = rows.iter().flat_map(|r| r.analogs.iter().copied()).collect();
    let analog_counts: BTreeSet<usize> =
        rows.iter().filter(|r| r.matched).map(|r| r.analogs.len()).collect();
    ClassificationReport {
        schema: REPORT_SCHEMA,
        matched,
        unmatched: rows.len() - matched,
        matched_are_odd,
        analogs_disjoint: distinct.len() == total_listed,
        analog_counts: analog_counts.into_iter().collect(),
        analog_states_total: distinct.len(),
        rows,
    }
}
