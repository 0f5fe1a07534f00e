//! Self-verification suites: every reference table, identity and count,
//! re-derived from the implementation and compared exactly.

use std::fmt::{self, Display};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::correspondence::{
    classify_all, coefficient, compare_sum_definitions, entangled_f5_states, extended_sum,
    extended_sum_raw, ket_of,
};
use crate::f5qm::{
    collapse_profile, eigenket, joint_prob, marginal_disagreements, measure_prob, Observable,
};
use crate::field::F5;
use crate::outcome::{prob, Axis, Outcome, OutcomeDistribution, Subsystem};
use crate::projective::{
    enumerate_states, is_product, pairing, tensor, tensor_states, Bra, Ket, Named, PairState, State,
};
use crate::spekkens::{
    collapse_epistemic, epistemic_states, exact_sequence, measure_epistemic, pair_states,
    simulate_sequence, sum_disjoint, EpistemicState, Permutation, Relabel, SpekkensObservable,
    SumVariant,
};

/// Reference single-system data the suites are checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reference {
    pub kets: [[i8; 2]; 6],
    pub bras: [[i8; 2]; 6],
    /// Rows are bras `a..f`, columns kets `a..f`.
    pub pairing: [[i8; 6]; 6],
}

pub const EXPECTED: Reference = Reference {
    kets: [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2], [1, -2]],
    bras: [[1, 0], [0, 1], [-2, -2], [-2, 2], [-2, -1], [-2, 1]],
    pairing: [
        [1, 0, 1, 1, 1, 1],
        [0, 1, 1, -1, 2, -2],
        [-2, -2, 1, 0, -1, 2],
        [-2, 2, 0, 1, 2, -1],
        [-2, -1, 2, -1, 1, 0],
        [-2, 1, -1, 2, 0, 1],
    ],
};

/// Disagreements between the sum rules over the 24 ordered-pair/variant cases.
pub const SUM_RULE_DISAGREEMENTS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

impl Check {
    pub fn eq<T: PartialEq + fmt::Debug>(label: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            label: label.into(),
            passed: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        }
    }

    /// A reported finding with no expectation attached.
    pub fn info(label: impl Into<String>, value: impl fmt::Display) -> Check {
        Check { label: label.into(), expected: String::new(), actual: value.to_string(), passed: true }
    }

    pub fn holds(label: impl Into<String>, passed: bool) -> Check {
        Check { label: label.into(), expected: "true".into(), actual: passed.to_string(), passed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    /// What the suite reproduces.
    pub reference: &'static str,
    /// Informational suites report findings and never fail the run.
    pub informational: bool,
    pub checks: Vec<Check>,
}

impl SuiteResult {
    fn new(name: &'static str, reference: &'static str, checks: Vec<Check>) -> Self {
        SuiteResult { name, reference, informational: false, checks }
    }

    pub fn passed(&self) -> bool {
        self.informational || self.checks.iter().all(|c| c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.informational {
            "INFO"
        } else if self.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        write!(
            f,
            "[{tag}] {:<32} {}/{}  {}",
            self.name,
            self.pass_count(),
            self.checks.len(),
            self.reference
        )?;
        if self.informational {
            for c in &self.checks {
                write!(f, "\n       {}: {}", c.label, c.actual)?;
            }
        } else {
            for c in self.checks.iter().filter(|c| !c.passed) {
                write!(f, "\n       {}: expected {}, got {}", c.label, c.expected, c.actual)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyResult {
    pub schema: &'static str,
    pub suites: Vec<SuiteResult>,
}

impl VerifyResult {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

pub fn run_all(reference: &Reference) -> VerifyResult {
    let suites = vec![
        field_axioms(),
        named_kets(reference),
        derived_duals(reference),
        pairing_table(reference),
        census(),
        disjoint_sums(),
        basis_expansions(),
        pair_expansions(),
        mixed_sums(),
        induced_sums(),
        single_system_agreement(),
        collapse_agreement(),
        eigenket_certainty(),
        entangled_collapse_balance(),
        factor_free_decomposition(),
        no_simultaneous_superposition(),
        joint_product_factorization(),
        s4_covariance(),
        knowledge_balance(),
        repeatability(),
        disturbance(),
        monte_carlo_disturbance(),
        sum_comparison(),
        classification(),
        classification_findings(),
        probability_rule_comparison(),
    ];
    VerifyResult { schema: crate::correspondence::REPORT_SCHEMA, suites }
}

fn k(n: Named) -> Ket<2> {
    n.ket()
}

fn t(a: Named, b: Named) -> Ket<4> {
    tensor(&a.ket(), &b.ket())
}

fn e(s: &str) -> EpistemicState {
    s.parse().expect("literal epistemic state")
}

fn field_axioms() -> SuiteResult {
    let mut comm = true;
    let mut assoc = true;
    let mut dist = true;
    let mut norm = true;
    let mut closed = true;
    for a in F5::ALL {
        for b in F5::ALL {
            comm &= a + b == b + a && a * b == b * a;
            norm &= (a * b).abs_norm() == a.abs_norm() * b.abs_norm();
            closed &= F5::ALL.contains(&(a + b)) && F5::ALL.contains(&(a * b));
            for c in F5::ALL {
                assoc &= (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c);
                dist &= a * (b + c) == a * b + a * c;
            }
        }
    }
    let inverses = F5::UNITS.iter().all(|&a| {
        F5::ALL.iter().filter(|&&x| a * x == F5::ONE).count() == 1
            && a * a.inv().expect("unit") == F5::ONE
    });
    let roots: Vec<F5> = F5::ALL.into_iter().filter(|x| x.square() == F5::MINUS_ONE).collect();
    SuiteResult::new(
        "field-axioms",
        "F5 arithmetic, 2^2 = (-2)^2 = -1",
        vec![
            Check::holds("closure in balanced residues", closed),
            Check::holds("commutativity", comm),
            Check::holds("associativity", assoc),
            Check::holds("distributivity", dist),
            Check::holds("unique inverses", inverses),
            Check::holds("abs_norm multiplicative", norm),
            Check::eq("square roots of -1", vec![F5::MINUS_TWO, F5::TWO], roots),
        ],
    )
}

fn named_kets(reference: &Reference) -> SuiteResult {
    let checks = Named::ALL
        .iter()
        .zip(reference.kets)
        .map(|(n, r)| Check::eq(format!("|{n}>"), Ket::new(r.map(i32::from)), n.ket()))
        .collect();
    SuiteResult::new("named-kets", "the six P1(F5) states |a>..|f>", checks)
}

fn derived_duals(reference: &Reference) -> SuiteResult {
    let checks = Named::ALL
        .iter()
        .zip(reference.bras)
        .map(|(n, r)| Check::eq(format!("<{n}|"), Bra::new(r.map(i32::from)), n.bra()))
        .collect();
    SuiteResult::new("dual-derivation", "dual vectors <a|..<f| from annihilate-partner rule", checks)
}

fn pairing_table(reference: &Reference) -> SuiteResult {
    let mut checks = Vec::with_capacity(36);
    for (i, row) in Named::ALL.iter().enumerate() {
        for (j, col) in Named::ALL.iter().enumerate() {
            checks.push(Check::eq(
                format!("<{row}|{col}>"),
                F5::from(reference.pairing[i][j]),
                pairing(&row.bra(), &col.ket()),
            ));
        }
    }
    SuiteResult::new("pairing-table", "6x6 bra-ket pairing table", checks)
}

fn census() -> SuiteResult {
    let p3 = enumerate_states::<4>();
    let products = p3.iter().filter(|s| is_product(s).is_some()).count();
    let (sp_products, sp_entangled) = pair_states();
    SuiteResult::new(
        "census",
        "|P1| = 6, |P3| = 156 = 36 + 120, toy pairs 36 + 24",
        vec![
            Check::eq("P1(F5) states", 6, enumerate_states::<2>().len()),
            Check::eq("P3(F5) states", 156, p3.len()),
            Check::eq("P3 product states", 36, products),
            Check::eq("P3 entangled states", 120, p3.len() - products),
            Check::eq("toy-model product pairs", 36, sp_products.len()),
            Check::eq("toy-model entangled pairs", 24, sp_entangled.len()),
        ],
    )
}

fn disjoint_sums() -> SuiteResult {
    let expected = ["1v3", "2v4", "2v3", "1v4"];
    let checks = SumVariant::ALL
        .iter()
        .zip(expected)
        .map(|(v, want)| {
            Check::eq(format!("(1v2) {v} (3v4)"), Ok(e(want)), sum_disjoint(e("1v2"), e("3v4"), *v))
        })
        .collect();
    SuiteResult::new("disjoint-sums", "coherent sums of 1v2 and 3v4", checks)
}

fn basis_expansions() -> SuiteResult {
    use Named::*;
    let cases = [
        ("|c> = |a> + |b>", k(C), k(A) + k(B)),
        ("|d> = |a> - |b>", k(D), k(A) - k(B)),
        ("|e> = |a> + 2|b>", k(E), k(A) + F5::TWO * k(B)),
        ("|f> = |a> - 2|b>", k(F), k(A) - F5::TWO * k(B)),
    ];
    let checks = cases.into_iter().map(|(l, want, got)| Check::eq(l, want, got)).collect();
    SuiteResult::new("basis-expansions", "|c>..|f> as |a> + lambda|b>", checks)
}

fn pair_expansions() -> SuiteResult {
    use Named::*;
    let m2 = F5::MINUS_TWO;
    let aa = t(A, A);
    let bb = t(B, B);
    let cases = [
        ("aa+bb = -2(cc+dd)", aa + bb, m2 * (t(C, C) + t(D, D))),
        ("aa+bb = -2(ef+fe)", aa + bb, m2 * (t(E, F) + t(F, E))),
        ("aa-bb = -2(cd+dc)", aa - bb, m2 * (t(C, D) + t(D, C))),
        ("aa-bb = -2(ee+ff)", aa - bb, m2 * (t(E, E) + t(F, F))),
        ("aa+2bb = -2(ce+df)", aa + F5::TWO * bb, m2 * (t(C, E) + t(D, F))),
        ("aa+2bb = -2(ec+fd)", aa + F5::TWO * bb, m2 * (t(E, C) + t(F, D))),
        ("aa-2bb = -2(cf+de)", aa - F5::TWO * bb, m2 * (t(C, F) + t(D, E))),
        ("aa-2bb = -2(fc+ed)", aa - F5::TWO * bb, m2 * (t(F, C) + t(E, D))),
    ];
    let checks = cases.into_iter().map(|(l, lhs, rhs)| Check::eq(l, lhs, rhs)).collect();
    SuiteResult::new("pair-expansions", "a*a + lambda b*b in the c/d and e/f product bases", checks)
}

fn mixed_sums() -> SuiteResult {
    use Named::*;
    let cases = [
        ("|a> + |c> = 2|f>", k(A) + k(C), F5::TWO * k(F)),
        ("|a> - |c> = -|b>", k(A) - k(C), -k(B)),
        ("|a> + 2|c> = -2|d>", k(A) + F5::TWO * k(C), F5::MINUS_TWO * k(D)),
        ("|a> - 2|c> = -|e>", k(A) - F5::TWO * k(C), -k(E)),
    ];
    let checks = cases.into_iter().map(|(l, lhs, rhs)| Check::eq(l, lhs, rhs)).collect();
    SuiteResult::new("mixed-sums", "sums of non-orthogonal kets |a> and |c>", checks)
}

fn induced_sums() -> SuiteResult {
    let expected = ["1v4", "3v4", "2v4", "2v3"];
    let mut checks: Vec<Check> = SumVariant::ALL
        .iter()
        .zip(expected)
        .map(|(v, want)| {
            Check::eq(format!("(1v2) {v} (1v3)"), Ok(e(want)), extended_sum(e("1v2"), *v, e("1v3")))
        })
        .collect();
    checks.push(Check::eq(
        "variant coefficients",
        vec![F5::ONE, F5::MINUS_ONE, F5::TWO, F5::MINUS_TWO],
        SumVariant::ALL.iter().map(|v| coefficient(*v)).collect(),
    ));
    checks.push(Check::eq(
        "raw (1v2) +1 (1v3)",
        F5::TWO * Named::F.ket(),
        extended_sum_raw(e("1v2"), SumVariant::ALL[0], e("1v3")),
    ));
    SuiteResult::new("induced-sums", "sums of non-disjoint epistemic states via F5", checks)
}

fn single_system_agreement() -> SuiteResult {
    let mut checks = Vec::with_capacity(18);
    for s in epistemic_states() {
        for axis in Axis::ALL {
            checks.push(Check::eq(
                format!("{axis} on {s}"),
                measure_epistemic(SpekkensObservable::of(axis), s),
                measure_prob(&Observable::of(axis), &ket_of(s)),
            ));
        }
    }
    SuiteResult::new("single-system-agreement", "toy model and F5 QM predict identically", checks)
}

fn collapse_agreement() -> SuiteResult {
    let mut checks = Vec::new();
    for axis in Axis::ALL {
        for out in Outcome::ALL {
            checks.push(Check::eq(
                format!("{axis} {out}"),
                eigenket(&Observable::of(axis), out),
                ket_of(collapse_epistemic(SpekkensObservable::of(axis), out)),
            ));
        }
    }
    SuiteResult::new("collapse-agreement", "epistemic collapse maps to eigenkets", checks)
}

fn eigenket_certainty() -> SuiteResult {
    let mut checks = Vec::new();
    for o in Observable::all() {
        for out in Outcome::ALL {
            checks.push(Check::eq(
                format!("{} {out}", o.axis),
                OutcomeDistribution::certain(out),
                measure_prob(&o, &eigenket(&o, out)),
            ));
        }
    }
    SuiteResult::new("eigenket-certainty", "eigenkets give certain outcomes", checks)
}

fn entangled_collapse_balance() -> SuiteResult {
    let half = prob(1, 2);
    let checks = entangled_f5_states()
        .iter()
        .map(|psi| {
            let p = collapse_profile(psi);
            let ok = p.0.len() == 12 && p.iter().all(|(_, e)| e.probability == half);
            Check::holds(psi.to_string(), ok)
        })
        .collect();
    SuiteResult::new(
        "entangled-collapse-balance",
        "every entangled state gives 1/2,1/2 on every subsystem measurement",
        checks,
    )
}

/// A pair `(p, λ, q)` of product states with no common factor such that
/// `ψ ≐ p + λ q`.
pub fn factor_free_witness(psi: &PairState) -> Option<(PairState, F5, PairState)> {
    let singles = enumerate_states::<2>();
    let products: Vec<_> = singles
        .iter()
        .flat_map(|u| singles.iter().map(move |v| (*u, *v)))
        .collect();
    for &(u1, v1) in &products {
        for &(u2, v2) in &products {
            if u1 == u2 || v1 == v2 {
                continue;
            }
            let (p, q) = (tensor_states(&u1, &v1), tensor_states(&u2, &v2));
            for lambda in F5::UNITS {
                let sum = *p.ket() + q.ket().scale(lambda);
                if State::new(sum).ok() == Some(*psi) {
                    return Some((p, lambda, q));
                }
            }
        }
    }
    None
}

fn factor_free_decomposition() -> SuiteResult {
    let checks = entangled_f5_states()
        .iter()
        .map(|psi| Check::holds(psi.to_string(), factor_free_witness(psi).is_some()))
        .collect();
    SuiteResult::new(
        "factor-free-decomposition",
        "every entangled state is a sum of two product states without a common factor",
        checks,
    )
}

fn no_simultaneous_superposition() -> SuiteResult {
    use Named::*;
    let mut checks = Vec::new();
    let cc_dd = [tensor_states(&C.state(), &C.state()), tensor_states(&D.state(), &D.state())];
    let ee_ff = [tensor_states(&E.state(), &E.state()), tensor_states(&F.state(), &F.state())];
    for alpha in F5::ALL {
        for beta in F5::ALL {
            let v = alpha * t(A, A) + beta * t(B, B);
            let Ok(psi) = v.canonicalize() else { continue };
            let profile = collapse_profile(&psi);
            let both = Subsystem::ALL.iter().any(|&sys| {
                let mut x = profile.posts(sys, Axis::X);
                let mut y = profile.posts(sys, Axis::Y);
                x.sort();
                y.sort();
                let (mut want_x, mut want_y) = (cc_dd.to_vec(), ee_ff.to_vec());
                want_x.sort();
                want_y.sort();
                x == want_x && y == want_y
            });
            checks.push(Check::holds(format!("{alpha}*aa + {beta}*bb"), !both));
        }
    }
    SuiteResult::new(
        "no-simultaneous-superposition",
        "no alpha*aa + beta*bb collapses to {cc,dd} under X and {ee,ff} under Y",
        checks,
    )
}

fn joint_product_factorization() -> SuiteResult {
    let singles = enumerate_states::<2>();
    let mut checks = Vec::new();
    for u in &singles {
        for v in &singles {
            let psi = tensor_states(u, v);
            let ok = Observable::all().iter().all(|o1| {
                Observable::all().iter().all(|o2| {
                    let (d1, d2) = (measure_prob(o1, u), measure_prob(o2, v));
                    let j = joint_prob(o1, o2, &psi);
                    Outcome::ALL
                        .iter()
                        .all(|&s| Outcome::ALL.iter().all(|&t| j.get(s, t) == d1.get(s) * d2.get(t)))
                })
            });
            checks.push(Check::holds(psi.factored().unwrap_or_default(), ok));
        }
    }
    SuiteResult::new(
        "joint-product-factorization",
        "joint rule on product states equals the product of single-system rules",
        checks,
    )
}

fn s4_covariance() -> SuiteResult {
    let mut checks = Vec::with_capacity(432);
    for p in Permutation::all() {
        for o in SpekkensObservable::all() {
            for s in epistemic_states() {
                checks.push(Check::eq(
                    format!("{p} {o} {s}"),
                    measure_epistemic(o, s),
                    measure_epistemic(o.relabel(&p), s.relabel(&p)),
                ));
            }
        }
    }
    SuiteResult::new("s4-covariance", "relabelling ontic states preserves predictions", checks)
}

/// Runs `count` random measurement sequences and reports whether the
/// knowledge-balance invariant held at every step of each.
pub fn random_sequences_keep_balance(count: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states = epistemic_states();
    (0..count).all(|_| {
        let initial = states[rng.gen_range(0..states.len())];
        let len = rng.gen_range(1..=8);
        let seq: Vec<_> = (0..len).map(|_| SpekkensObservable::of(Axis::ALL[rng.gen_range(0..3)])).collect();
        simulate_sequence(initial, &seq, 1, rng.gen())
            .map(|r| r.knowledge_balance_held)
            .unwrap_or(false)
    })
}

fn knowledge_balance() -> SuiteResult {
    SuiteResult::new(
        "knowledge-balance",
        "epistemic support stays size 2 and contains the ontic state",
        vec![Check::holds("10000 random sequences", random_sequences_keep_balance(10_000, 2017))],
    )
}

fn repeatability() -> SuiteResult {
    let mut checks = Vec::new();
    for s in epistemic_states() {
        for o in SpekkensObservable::all() {
            for out in Outcome::ALL {
                if measure_epistemic(o, s).get(out) == prob(0, 1) {
                    continue;
                }
                checks.push(Check::eq(
                    format!("{o} {out} after {s}"),
                    OutcomeDistribution::certain(out),
                    measure_epistemic(o, collapse_epistemic(o, out)),
                ));
            }
        }
    }
    for axis in Axis::ALL {
        let o = SpekkensObservable::of(axis);
        let r = simulate_sequence(e("1v2"), &[o, o], 10_000, 5).expect("trials > 0");
        checks.push(Check::eq(format!("Monte Carlo {axis},{axis} repeats"), Some(10_000), r.steps[1].repeats));
    }
    SuiteResult::new("repeatability", "re-measuring gives the same outcome", checks)
}

fn disturbance() -> SuiteResult {
    let mut checks = Vec::new();
    for first in SpekkensObservable::all() {
        for second in SpekkensObservable::all() {
            if first == second {
                continue;
            }
            for out in Outcome::ALL {
                let d = exact_sequence(second.support(out), &[first, second]);
                checks.push(Check::eq(
                    format!("{first} then {second} from {}", second.support(out)),
                    OutcomeDistribution::from_weights(1, 1),
                    d[1],
                ));
            }
        }
    }
    SuiteResult::new("disturbance", "an intervening measurement randomizes the next one", checks)
}

fn monte_carlo_disturbance() -> SuiteResult {
    let seq = [SpekkensObservable::of(Axis::X), SpekkensObservable::of(Axis::Z)];
    let r = simulate_sequence(e("1v2"), &seq, 100_000, 7).expect("trials > 0");
    let z = &r.steps[1];
    SuiteResult::new(
        "monte-carlo-disturbance",
        "1v2 then X then Z: Z frequencies within 0.01 of 1/2 over 1e5 trials",
        vec![
            Check::holds(format!("+1 frequency {:.4}", z.freq_plus()), (z.freq_plus() - 0.5).abs() <= 0.01),
            Check::holds(format!("-1 frequency {:.4}", z.freq_minus()), (z.freq_minus() - 0.5).abs() <= 0.01),
        ],
    )
}

fn sum_comparison() -> SuiteResult {
    let c = compare_sum_definitions();
    let mut checks: Vec<Check> = SumVariant::ALL
        .iter()
        .map(|v| {
            let row = c.row(e("1v2"), e("3v4"), *v).expect("row exists");
            Check::holds(format!("(1v2) {v} (3v4) agrees"), row.agree)
        })
        .collect();
    let any_13_24 = SumVariant::ALL
        .iter()
        .any(|v| !c.row(e("1v3"), e("2v4"), *v).expect("row exists").agree);
    checks.push(Check::holds("(1v3, 2v4) has a disagreeing variant", any_13_24));
    checks.push(Check::eq("total disagreements", SUM_RULE_DISAGREEMENTS, c.disagreements));
    SuiteResult::new("sum-comparison", "toy-model sums versus F5-induced sums", checks)
}

fn classification() -> SuiteResult {
    let r = classify_all();
    let swap = Permutation::swap(1, 2).expect("valid labels");
    let target = PairState::new(Ket::new([1, 0, 0, 2])).expect("nonzero");
    SuiteResult::new(
        "classification",
        "12 of 24 entangled toy states have F5 analogs",
        vec![
            Check::eq("matched", 12, r.matched),
            Check::eq("unmatched", 12, r.unmatched),
            Check::holds(
                "identity unmatched",
                r.row(&Permutation::IDENTITY).is_some_and(|row| !row.matched),
            ),
            Check::holds(
                "perm:2134 has a*a+2b*b",
                r.row(&swap).is_some_and(|row| row.analogs.contains(&target)),
            ),
            Check::holds(
                "analogs are entangled",
                r.rows.iter().flat_map(|row| &row.analogs).all(|s| is_product(s).is_none()),
            ),
        ],
    )
}

fn classification_findings() -> SuiteResult {
    let r = classify_all();
    let mut suite = SuiteResult::new(
        "classification-findings",
        "structure of the matched set",
        vec![
            Check::info("matched permutations are exactly the odd ones", r.matched_are_odd),
            Check::info("analog lists pairwise disjoint", r.analogs_disjoint),
            Check::info("analog-list sizes among matched", format!("{:?}", r.analog_counts)),
            Check::info("distinct F5 analog states", r.analog_states_total),
        ],
    );
    suite.informational = true;
    suite
}

fn probability_rule_comparison() -> SuiteResult {
    let found = marginal_disagreements();
    let states: std::collections::BTreeSet<_> = found.iter().map(|d| d.state).collect();
    let mut suite = SuiteResult::new(
        "probability-rule-comparison",
        "joint-rule marginals versus the collapse rule on P3(F5)",
        vec![
            Check::info("settings where the rules disagree", found.len()),
            Check::info("states with a disagreement", states.len()),
        ],
    );
    suite.informational = true;
    suite
}
