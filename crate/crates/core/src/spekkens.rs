//! Spekkens' toy model for one elementary system and for pairs of them.
//!
//! An elementary system has four ontic states. An epistemic state knows the
//! ontic state only up to a two-element support, which is what the knowledge
//! balance principle allows. Measurements reveal one bit and disturb the
//! ontic state so that no further knowledge accumulates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::outcome::{Axis, Outcome, OutcomeDistribution, Probability, Subsystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OnticState(u8);

impl OnticState {
    pub const ALL: [OnticState; 4] = [OnticState(1), OnticState(2), OnticState(3), OnticState(4)];

    pub fn new(label: u8) -> Result<Self> {
        if (1..=4).contains(&label) {
            Ok(OnticState(label))
        } else {
            Err(Error::Parse(format!("ontic label {label} out of range 1..=4")))
        }
    }

    pub fn label(self) -> u8 {
        self.0
    }
}

impl fmt::Display for OnticState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A two-element ontic support `a ∨ b`, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpistemicState {
    lo: OnticState,
    hi: OnticState,
}

impl EpistemicState {
    /// `a ∨ b` and `b ∨ a` are the same state; equal labels are rejected.
    pub fn new(a: OnticState, b: OnticState) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EpistemicState { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(EpistemicState { lo: b, hi: a }),
            std::cmp::Ordering::Equal => {
                Err(Error::Parse(format!("an epistemic state needs two distinct labels, got {a}v{a}")))
            }
        }
    }

    pub fn from_labels(a: u8, b: u8) -> Result<Self> {
        EpistemicState::new(OnticState::new(a)?, OnticState::new(b)?)
    }

    pub fn lo(self) -> OnticState {
        self.lo
    }

    pub fn hi(self) -> OnticState {
        self.hi
    }

    pub fn support(self) -> [OnticState; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(self, o: OnticState) -> bool {
        self.lo == o || self.hi == o
    }

    pub fn is_disjoint(self, other: EpistemicState) -> bool {
        !other.contains(self.lo) && !other.contains(self.hi)
    }

    /// The disjoint partner: the complementary support.
    pub fn complement(self) -> EpistemicState {
        let mut rest = OnticState::ALL.into_iter().filter(|o| !self.contains(*o));
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        EpistemicState { lo: a, hi: b }
    }

    fn from_set(set: &BTreeSet<OnticState>) -> Option<EpistemicState> {
        let v: Vec<_> = set.iter().copied().collect();
        match v.as_slice() {
            [a, b] => Some(EpistemicState { lo: *a, hi: *b }),
            _ => None,
        }
    }
}

impl fmt::Display for EpistemicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}v{}", self.lo, self.hi)
    }
}

/// Parses `"1v2"` (either label order).
impl FromStr for EpistemicState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected an epistemic state like 1v2, got {s:?}"));
        let (a, b) = s.trim().split_once(['v', 'V']).ok_or_else(bad)?;
        let a: u8 = a.trim().parse().map_err(|_| bad())?;
        let b: u8 = b.trim().parse().map_err(|_| bad())?;
        EpistemicState::from_labels(a, b)
    }
}

impl Serialize for EpistemicState {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The six epistemic states, grouped as disjoint pairs: `1v2, 3v4, 1v3, 2v4, 2v3, 1v4`.
pub fn epistemic_states() -> [EpistemicState; 6] {
    [(1, 2), (3, 4), (1, 3), (2, 4), (2, 3), (1, 4)]
        .map(|(a, b)| EpistemicState::from_labels(a, b).unwrap())
}

/// A yes/no question about the ontic state: a partition of the four labels
/// into an outcome-`+1` support and its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpekkensObservable {
    plus: EpistemicState,
}

impl SpekkensObservable {
    pub fn new(plus: EpistemicState) -> Self {
        SpekkensObservable { plus }
    }

    pub fn of(axis: Axis) -> Self {
        let (a, b) = match axis {
            Axis::X => (1, 3),
            Axis::Y => (2, 3),
            Axis::Z => (1, 2),
        };
        SpekkensObservable::new(EpistemicState::from_labels(a, b).unwrap())
    }

    pub fn all() -> [SpekkensObservable; 3] {
        Axis::ALL.map(SpekkensObservable::of)
    }

    pub fn plus_support(self) -> EpistemicState {
        self.plus
    }

    pub fn minus_support(self) -> EpistemicState {
        self.plus.complement()
    }

    pub fn support(self, outcome: Outcome) -> EpistemicState {
        match outcome {
            Outcome::Plus => self.plus_support(),
            Outcome::Minus => self.minus_support(),
        }
    }

    /// The named observable with exactly this outcome assignment, if any.
    pub fn axis(self) -> Option<Axis> {
        Axis::ALL.into_iter().find(|a| SpekkensObservable::of(*a) == self)
    }
}

impl fmt::Display for SpekkensObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis() {
            Some(a) => write!(f, "{a}"),
            None => write!(f, "{{{} | {}}}", self.plus_support(), self.minus_support()),
        }
    }
}

pub fn measure_epistemic(o: SpekkensObservable, e: EpistemicState) -> OutcomeDistribution {
    let count = |s: EpistemicState| e.support().iter().filter(|x| s.contains(**x)).count() as u32;
    OutcomeDistribution::from_weights(count(o.plus_support()), count(o.minus_support()))
}

pub fn ontic_outcome(o: SpekkensObservable, ontic: OnticState) -> Outcome {
    if o.plus_support().contains(ontic) {
        Outcome::Plus
    } else {
        Outcome::Minus
    }
}

/// Post-measurement ontic state: uniform over the outcome's support.
pub fn ontic_update<R: Rng + ?Sized>(o: SpekkensObservable, outcome: Outcome, rng: &mut R) -> OnticState {
    let s = o.support(outcome).support();
    s[rng.gen_range(0..2)]
}

pub fn collapse_epistemic(o: SpekkensObservable, outcome: Outcome) -> EpistemicState {
    o.support(outcome)
}

/// Exact per-step outcome distributions for a measurement sequence, tracking
/// the mixture over epistemic states that the update rule induces.
pub fn exact_sequence(initial: EpistemicState, observables: &[SpekkensObservable]) -> Vec<OutcomeDistribution> {
    let mut mixture: BTreeMap<EpistemicState, Probability> = BTreeMap::from([(initial, Probability::from(1))]);
    let mut out = Vec::with_capacity(observables.len());
    for &o in observables {
        let mut next: BTreeMap<EpistemicState, Probability> = BTreeMap::new();
        let mut p = [Probability::from(0); 2];
        for (e, w) in &mixture {
            let d = measure_epistemic(o, *e);
            for (i, outcome) in Outcome::ALL.into_iter().enumerate() {
                let q = *w * d.get(outcome);
                if q != Probability::from(0) {
                    p[i] += q;
                    *next.entry(collapse_epistemic(o, outcome)).or_default() += q;
                }
            }
        }
        out.push(OutcomeDistribution { p_plus: p[0], p_minus: p[1] });
        mixture = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepStats {
    pub observable: String,
    pub plus: u64,
    pub minus: u64,
    /// Trials whose outcome repeated the previous step's, when both steps measure the same observable.
    pub repeats: Option<u64>,
    pub exact_plus: String,
    pub exact_minus: String,
}

impl StepStats {
    pub fn freq_plus(&self) -> f64 {
        self.plus as f64 / (self.plus + self.minus) as f64
    }

    pub fn freq_minus(&self) -> f64 {
        self.minus as f64 / (self.plus + self.minus) as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub initial: EpistemicState,
    pub trials: u64,
    pub seed: u64,
    pub steps: Vec<StepStats>,
    /// Whether the tracked epistemic state kept a two-element support containing
    /// the ontic state at every step of every trial.
    pub knowledge_balance_held: bool,
}

/// Runs `trials` independent measurement sequences from `initial`, with the
/// ontic state drawn uniformly from its support and updated after each step.
pub fn simulate_sequence(
    initial: EpistemicState,
    observables: &[SpekkensObservable],
    trials: u64,
    seed: u64,
) -> Result<SimulationReport> {
    if trials == 0 {
        return Err(Error::Parse("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![[0u64; 2]; observables.len()];
    let mut repeats = vec![0u64; observables.len()];
    let mut balance = true;
    for _ in 0..trials {
        let mut ontic = initial.support()[rng.gen_range(0..2)];
        let mut known = initial;
        balance &= known.contains(ontic);
        let mut previous: Option<(SpekkensObservable, Outcome)> = None;
        for (step, &o) in observables.iter().enumerate() {
            let outcome = ontic_outcome(o, ontic);
            counts[step][(outcome == Outcome::Minus) as usize] += 1;
            if previous == Some((o, outcome)) {
                repeats[step] += 1;
            }
            ontic = ontic_update(o, outcome, &mut rng);
            known = collapse_epistemic(o, outcome);
            balance &= known.lo() != known.hi() && known.contains(ontic);
            previous = Some((o, outcome));
        }
    }
    let exact = exact_sequence(initial, observables);
    let steps = observables
        .iter()
        .enumerate()
        .map(|(i, o)| StepStats {
            observable: o.to_string(),
            plus: counts[i][0],
            minus: counts[i][1],
            repeats: (i > 0 && observables[i - 1] == *o).then_some(repeats[i]),
            exact_plus: exact[i].p_plus.to_string(),
            exact_minus: exact[i].p_minus.to_string(),
        })
        .collect();
    Ok(SimulationReport { initial, trials, seed, steps, knowledge_balance_held: balance })
}

/// A bijection of the ontic labels, written as its image tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 4]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([1, 2, 3, 4]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if !(1..=4).contains(&i) || seen[i as usize - 1] {
                return Err(Error::Parse(format!("not a permutation of 1..4: {images:?}")));
            }
            seen[i as usize - 1] = true;
        }
        Ok(Permutation(images))
    }

    /// The transposition of two labels.
    pub fn swap(a: u8, b: u8) -> Result<Self> {
        let mut images = [1, 2, 3, 4];
        OnticState::new(a)?;
        OnticState::new(b)?;
        images.swap(a as usize - 1, b as usize - 1);
        Ok(Permutation(images))
    }

    /// All 24 permutations in lexicographic order of image tuples.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        if let Ok(p) = Permutation::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    pub fn apply(&self, o: OnticState) -> OnticState {
        OnticState(self.0[o.0 as usize - 1])
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 4];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.map(|i| self.0[i as usize - 1]))
    }

    pub fn is_even(&self) -> bool {
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        inversions % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "perm:{a}{b}{c}{d}")
    }
}

/// Parses `"perm:2134"` (the `perm:` prefix is optional).
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().strip_prefix("perm:").unwrap_or(s.trim());
        let bad = || Error::Parse(format!("expected a permutation like perm:2134, got {s:?}"));
        let v: Vec<u8> = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let images: [u8; 4] = v.try_into().map_err(|_| bad())?;
        Permutation::new(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairOnticState(pub OnticState, pub OnticState);

/// Knowledge about a pair of elementary systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairEpistemicState {
    Product(EpistemicState, EpistemicState),
    /// Ontic support `{(i, perm(i))}`: one cell per row and column.
    Entangled(Permutation),
}

impl PairEpistemicState {
    pub fn support(&self) -> Vec<PairOnticState> {
        match self {
            PairEpistemicState::Product(e1, e2) => e1
                .support()
                .into_iter()
                .flat_map(|a| e2.support().into_iter().map(move |b| PairOnticState(a, b)))
                .collect(),
            PairEpistemicState::Entangled(p) => {
                OnticState::ALL.into_iter().map(|a| PairOnticState(a, p.apply(a))).collect()
            }
        }
    }

    pub fn is_entangled(&self) -> bool {
        matches!(self, PairEpistemicState::Entangled(_))
    }
}

impl fmt::Display for PairEpistemicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairEpistemicState::Product(a, b) => write!(f, "{a}|{b}"),
            PairEpistemicState::Entangled(p) => write!(f, "{p}"),
        }
    }
}

/// Parses `"1v2|1v3"` or `"perm:2134"`.
impl FromStr for PairEpistemicState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('|') {
            return Ok(PairEpistemicState::Product(a.parse()?, b.parse()?));
        }
        if s.starts_with("perm:") {
            return s.parse().map(PairEpistemicState::Entangled);
        }
        Err(Error::Parse(format!("expected 1v2|1v3 or perm:2134, got {s:?}")))
    }
}

/// All 36 product states and all 24 entangled states.
pub fn pair_states() -> (Vec<PairEpistemicState>, Vec<PairEpistemicState>) {
    let singles = epistemic_states();
    let products = singles
        .iter()
        .flat_map(|&a| singles.iter().map(move |&b| PairEpistemicState::Product(a, b)))
        .collect();
    let entangled = Permutation::all().into_iter().map(PairEpistemicState::Entangled).collect();
    (products, entangled)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub outcome: Outcome,
    pub probability: Probability,
    pub collapsed: (EpistemicState, EpistemicState),
}

/// Measures `o` on one member of a pair. Only the measured subsystem is
/// disturbed; the other is updated only through what the outcome reveals.
/// Zero-probability outcomes are omitted.
pub fn measure_pair(state: &PairEpistemicState, subsystem: Subsystem, o: SpekkensObservable) -> Vec<PairOutcome> {
    let support = state.support();
    let total = support.len() as u32;
    let mut out = Vec::new();
    for outcome in Outcome::ALL {
        let eig = o.support(outcome);
        let others: BTreeSet<OnticState> = support
            .iter()
            .filter_map(|&PairOnticState(a, b)| match subsystem {
                Subsystem::First => eig.contains(a).then_some(b),
                Subsystem::Second => eig.contains(b).then_some(a),
            })
            .collect();
        let hits = support
            .iter()
            .filter(|PairOnticState(a, b)| match subsystem {
                Subsystem::First => eig.contains(*a),
                Subsystem::Second => eig.contains(*b),
            })
            .count() as u32;
        if hits == 0 {
            continue;
        }
        let other = EpistemicState::from_set(&others)
            .expect("valid pair states induce two-element supports");
        let collapsed = match subsystem {
            Subsystem::First => (eig, other),
            Subsystem::Second => (other, eig),
        };
        out.push(PairOutcome { outcome, probability: Probability::new(hits, total), collapsed });
    }
    out
}

/// Coherent sum `(a∨b) +ₖ (c∨d)` of disjoint states, `k ∈ 1..=4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumVariant(u8);

impl SumVariant {
    pub const ALL: [SumVariant; 4] = [SumVariant(1), SumVariant(2), SumVariant(3), SumVariant(4)];

    pub fn new(k: u8) -> Result<Self> {
        if (1..=4).contains(&k) {
            Ok(SumVariant(k))
        } else {
            Err(Error::Parse(format!("sum variant must be 1..=4, got {k}")))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }
}

impl fmt::Display for SumVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{}", self.0)
    }
}

impl FromStr for SumVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        let k: u8 = t.parse().map_err(|_| Error::Parse(format!("bad sum variant {s:?}")))?;
        SumVariant::new(k)
    }
}

impl Serialize for SumVariant {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

/// `(a∨b) +₁ (c∨d) = a∨c`, `+₂ → b∨d`, `+₃ → b∨c`, `+₄ → a∨d`, with both
/// operands in canonical `a < b`, `c < d` order.
pub fn sum_disjoint(e1: EpistemicState, e2: EpistemicState, variant: SumVariant) -> Result<EpistemicState> {
    if !e1.is_disjoint(e2) {
        return Err(Error::NonDisjointSum);
    }
    let (a, b, c, d) = (e1.lo(), e1.hi(), e2.lo(), e2.hi());
    let (x, y) = match variant.0 {
        1 => (a, c),
        2 => (b, d),
        3 => (b, c),
        _ => (a, d),
    };
    EpistemicState::new(x, y)
}

/// Action of an ontic relabelling.
pub trait Relabel {
    fn relabel(&self, perm: &Permutation) -> Self;
}

impl Relabel for OnticState {
    fn relabel(&self, perm: &Permutation) -> Self {
        perm.apply(*self)
    }
}

impl Relabel for EpistemicState {
    fn relabel(&self, perm: &Permutation) -> Self {
        EpistemicState::new(perm.apply(self.lo), perm.apply(self.hi)).unwrap()
    }
}

impl Relabel for SpekkensObservable {
    fn relabel(&self, perm: &Permutation) -> Self {
        SpekkensObservable::new(self.plus.relabel(perm))
    }
}

/// Relabels both subsystems with the same permutation.
impl Relabel for PairEpistemicState {
    fn relabel(&self, perm: &Permutation) -> Self {
        match self {
            PairEpistemicState::Product(a, b) => PairEpistemicState::Product(a.relabel(perm), b.relabel(perm)),
            // {(π i, π σ i)} is the graph of π σ π⁻¹.
            PairEpistemicState::Entangled(s) => {
                PairEpistemicState::Entangled(perm.compose(s).compose(&perm.inverse()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::prob;

    fn e(s: &str) -> EpistemicState {
        s.parse().unwrap()
    }

    fn obs(a: Axis) -> SpekkensObservable {
        SpekkensObservable::of(a)
    }

    #[test]
    fn six_epistemic_states_in_disjoint_pairs() {
        let all = epistemic_states();
        assert_eq!(all.len(), 6);
        assert!(all.contains(&e("1v2")));
        for pair in all.chunks(2) {
            assert!(pair[0].is_disjoint(pair[1]));
            assert_eq!(pair[0].complement(), pair[1]);
        }
        assert_eq!(e("2v1"), e("1v2"));
        assert!("1v1".parse::<EpistemicState>().is_err());
        assert!("1v5".parse::<EpistemicState>().is_err());
    }

    #[test]
    fn observables_partition_labels() {
        assert_eq!(obs(Axis::X).plus_support(), e("1v3"));
        assert_eq!(obs(Axis::X).minus_support(), e("2v4"));
        assert_eq!(obs(Axis::Y).minus_support(), e("1v4"));
        assert_eq!(obs(Axis::Z).minus_support(), e("3v4"));
    }

    #[test]
    fn measure_epistemic_examples() {
        assert_eq!(measure_epistemic(obs(Axis::Z), e("1v2")), OutcomeDistribution::certain(Outcome::Plus));
        assert_eq!(measure_epistemic(obs(Axis::X), e("1v2")), OutcomeDistribution::from_weights(1, 1));
        assert_eq!(measure_epistemic(obs(Axis::X), e("2v4")), OutcomeDistribution::certain(Outcome::Minus));
    }

    #[test]
    fn ontic_outcome_tableaux() {
        let signs = |a: Axis| OnticState::ALL.map(|o| ontic_outcome(obs(a), o).sign());
        assert_eq!(signs(Axis::X), [1, -1, 1, -1]);
        assert_eq!(signs(Axis::Y), [-1, 1, 1, -1]);
        assert_eq!(signs(Axis::Z), [1, 1, -1, -1]);
    }

    #[test]
    fn ontic_update_is_uniform_on_outcome_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 100_000;
        let mut hits = BTreeMap::new();
        for _ in 0..n {
            *hits.entry(ontic_update(obs(Axis::X), Outcome::Plus, &mut rng)).or_insert(0u32) += 1;
        }
        assert_eq!(hits.keys().map(|o| o.label()).collect::<Vec<_>>(), vec![1, 3]);
        for c in hits.values() {
            assert!((*c as f64 / n as f64 - 0.5).abs() < 0.01);
        }
        for _ in 0..100 {
            let o = ontic_update(obs(Axis::Z), Outcome::Minus, &mut rng);
            assert!(e("3v4").contains(o));
        }
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse_epistemic(obs(Axis::X), Outcome::Plus), e("1v3"));
        assert_eq!(collapse_epistemic(obs(Axis::X), Outcome::Minus), e("2v4"));
        assert_eq!(collapse_epistemic(obs(Axis::Y), Outcome::Plus), e("2v3"));
    }

    #[test]
    fn simulation_examples() {
        let x = obs(Axis::X);
        let z = obs(Axis::Z);
        let r = simulate_sequence(e("1v2"), &[x, x], 10_000, 3).unwrap();
        assert_eq!(r.steps[1].repeats, Some(10_000));
        assert!(r.knowledge_balance_held);

        let r = simulate_sequence(e("1v2"), &[x, z], 100_000, 7).unwrap();
        assert!((r.steps[1].freq_plus() - 0.5).abs() < 0.01);
        assert!((r.steps[1].freq_minus() - 0.5).abs() < 0.01);
        assert_eq!(r.steps[1].exact_plus, "1/2");

        let r = simulate_sequence(e("1v2"), &[z], 100, 1).unwrap();
        assert_eq!(r.steps[0].freq_plus(), 1.0);
        assert!(simulate_sequence(e("1v2"), &[z], 0, 1).is_err());
    }

    #[test]
    fn simulation_is_seed_deterministic() {
        let seq = [obs(Axis::X), obs(Axis::Y), obs(Axis::Z)];
        let a = simulate_sequence(e("1v4"), &seq, 5_000, 42).unwrap();
        let b = simulate_sequence(e("1v4"), &seq, 5_000, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn repeatability_and_disturbance_exact() {
        for o in SpekkensObservable::all() {
            for s in epistemic_states() {
                let d = exact_sequence(s, &[o, o]);
                assert_eq!(d[0], d[1]);
                for outcome in Outcome::ALL {
                    let c = collapse_epistemic(o, outcome);
                    assert_eq!(measure_epistemic(o, c), OutcomeDistribution::certain(outcome));
                }
            }
            for o2 in SpekkensObservable::all() {
                if o == o2 {
                    continue;
                }
                for outcome in Outcome::ALL {
                    let d = exact_sequence(o2.support(outcome), &[o, o2]);
                    assert_eq!(d[1], OutcomeDistribution::from_weights(1, 1));
                }
            }
        }
    }

    #[test]
    fn pair_census() {
        let (products, entangled) = pair_states();
        assert_eq!((products.len(), entangled.len()), (36, 24));
        let id = PairEpistemicState::Entangled(Permutation::IDENTITY);
        assert!(entangled.contains(&id));
        let diag: Vec<_> = OnticState::ALL.iter().map(|&o| PairOnticState(o, o)).collect();
        assert_eq!(id.support(), diag);
        for s in entangled.iter().chain(&products) {
            let sup = s.support();
            assert_eq!(sup.len(), 4);
            if s.is_entangled() {
                let rows: BTreeSet<_> = sup.iter().map(|p| p.0).collect();
                let cols: BTreeSet<_> = sup.iter().map(|p| p.1).collect();
                assert_eq!((rows.len(), cols.len()), (4, 4));
            }
        }
    }

    #[test]
    fn measure_pair_examples() {
        let id = PairEpistemicState::Entangled(Permutation::IDENTITY);
        let half = prob(1, 2);
        let z = measure_pair(&id, Subsystem::First, obs(Axis::Z));
        assert_eq!(
            z,
            vec![
                PairOutcome { outcome: Outcome::Plus, probability: half, collapsed: (e("1v2"), e("1v2")) },
                PairOutcome { outcome: Outcome::Minus, probability: half, collapsed: (e("3v4"), e("3v4")) },
            ]
        );
        let x = measure_pair(&id, Subsystem::Second, obs(Axis::X));
        assert_eq!(x[0].collapsed, (e("1v3"), e("1v3")));
        assert_eq!(x[1].collapsed, (e("2v4"), e("2v4")));
        let prod = PairEpistemicState::Product(e("1v2"), e("1v3"));
        assert_eq!(
            measure_pair(&prod, Subsystem::First, obs(Axis::Z)),
            vec![PairOutcome { outcome: Outcome::Plus, probability: prob(1, 1), collapsed: (e("1v2"), e("1v3")) }]
        );
    }

    #[test]
    fn measure_pair_invariants() {
        let (products, entangled) = pair_states();
        for s in products.iter().chain(&entangled) {
            for sys in Subsystem::ALL {
                for o in SpekkensObservable::all() {
                    let r = measure_pair(s, sys, o);
                    assert_eq!(r.iter().map(|x| x.probability).sum::<Probability>(), prob(1, 1));
                    if s.is_entangled() {
                        assert!(r.iter().all(|x| x.probability == prob(1, 2)));
                    }
                }
            }
        }
    }

    #[test]
    fn entangled_collapse_uses_preimage_for_second_subsystem() {
        let s = PairEpistemicState::Entangled("perm:2341".parse().unwrap());
        let r = measure_pair(&s, Subsystem::Second, obs(Axis::Z));
        // Second coordinate in {1,2} comes from first coordinates {4,1}.
        assert_eq!(r[0].collapsed, (e("1v4"), e("1v2")));
    }

    #[test]
    fn sum_disjoint_examples() {
        let v = |k| SumVariant::new(k).unwrap();
        assert_eq!(sum_disjoint(e("1v2"), e("3v4"), v(1)).unwrap(), e("1v3"));
        assert_eq!(sum_disjoint(e("1v2"), e("3v4"), v(2)).unwrap(), e("2v4"));
        assert_eq!(sum_disjoint(e("1v2"), e("3v4"), v(3)).unwrap(), e("2v3"));
        assert_eq!(sum_disjoint(e("1v2"), e("3v4"), v(4)).unwrap(), e("1v4"));
        for k in SumVariant::ALL {
            assert_eq!(sum_disjoint(e("1v2"), e("1v3"), k), Err(Error::NonDisjointSum));
        }
        assert!(SumVariant::new(5).is_err());
    }

    #[test]
    fn relabel_examples() {
        let swap = Permutation::swap(1, 2).unwrap();
        assert_eq!(e("1v2").relabel(&swap), e("1v2"));
        assert_eq!(e("1v3").relabel(&swap), e("2v3"));
        for p in Permutation::all() {
            let image: BTreeSet<_> = epistemic_states().iter().map(|s| s.relabel(&p)).collect();
            assert_eq!(image.len(), 6);
        }
    }

    #[test]
    fn s4_covariance_exhaustive() {
        for p in Permutation::all() {
            for o in SpekkensObservable::all() {
                for s in epistemic_states() {
                    assert_eq!(measure_epistemic(o.relabel(&p), s.relabel(&p)), measure_epistemic(o, s));
                }
            }
        }
    }

    #[test]
    fn relabel_pair_matches_support_image() {
        let (products, entangled) = pair_states();
        for p in Permutation::all() {
            for s in products.iter().chain(&entangled) {
                let mut expected: Vec<_> =
                    s.support().iter().map(|x| PairOnticState(p.apply(x.0), p.apply(x.1))).collect();
                expected.sort();
                let mut got = s.relabel(&p).support();
                got.sort();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn permutation_basics() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
        for p in &all {
            assert_eq!(p.compose(&p.inverse()), Permutation::IDENTITY);
            assert_eq!(p.to_string().parse::<Permutation>().unwrap(), *p);
        }
        assert!("perm:1123".parse::<Permutation>().is_err());
        assert!(!Permutation::swap(1, 2).unwrap().is_even());
        assert_eq!(
            "1v2|1v3".parse::<PairEpistemicState>().unwrap(),
            PairEpistemicState::Product(e("1v2"), e("1v3"))
        );
    }
}
