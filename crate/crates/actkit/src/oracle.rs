//! Exhaustive enumeration of finite acts up to isomorphism, and the
//! brute-force suites that check the decomposition and cancellation
//! machinery against first principles at desk scale.
//!
//! Enumeration assigns a transformation of the carrier to each monoid
//! generator, propagates products through a precomputed derivation order,
//! and prunes as soon as a compatibility relation fails, rather than
//! scanning all `m^(m·n)` raw tables. Candidates are deduplicated by
//! canonical form, so the result is one representative per isomorphism
//! class, itself in canonical form.
//!
//! Suites iterate a deterministic instance order and collect violation
//! messages; identical inputs produce byte-identical reports apart from
//! the wall-time field.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::act::{self, FiniteAct};
use crate::canonical;
use crate::decompose;
use crate::error::ActError;
use crate::monoid::FiniteMonoid;
use crate::symbolic::{
    self, decide_cancellable, decide_internally_cancellable, sym_coproduct, sym_iso, Cardinal,
    CancellationVerdict, CancellationWitness, SymbolicAct,
};

/// Search budgets for the enumeration and the cancellation suites.
/// Exceeding a budget aborts with [`ActError::BudgetExceeded`] rather than
/// silently truncating.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Candidate generator assignments per enumeration.
    pub enumeration: u64,
    /// Triple (or decomposition-pair) checks per cancellation suite.
    pub triples: u64,
    /// Carrier bound for `brute_force_split` certification.
    pub split_bound: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: 10_000_000,
            triples: 1_000_000,
            split_bound: decompose::DEFAULT_SPLIT_BOUND,
        }
    }
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    suite: String,
    monoid: String,
    size_bound: usize,
    instances_checked: u64,
    counters: BTreeMap<String, u64>,
    violations: Vec<String>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
}

impl SuiteReport {
    fn new(suite: &str, monoid: String, size_bound: usize) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            monoid,
            size_bound,
            instances_checked: 0,
            counters: BTreeMap::new(),
            violations: Vec::new(),
            pass: true,
            wall_time_ms: None,
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.pass = self.violations.is_empty();
        self.wall_time_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    pub fn suite(&self) -> &str {
        &self.suite
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn instances_checked(&self) -> u64 {
        self.instances_checked
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    pub fn counters(&self) -> &BTreeMap<String, u64> {
        &self.counters
    }

    /// Drop the wall-time field so reports compare byte-for-byte.
    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = None;
        self
    }
}

enum Derivation {
    Identity,
    Generator(usize),
    /// element, generator slot: the element equals `prior · gens[slot]`
    Product(usize, usize),
}

struct GeneratorPlan {
    gens: Vec<usize>,
    /// Monoid elements in an order where derivation inputs come first.
    order: Vec<usize>,
    deriv: Vec<Derivation>,
}

fn generator_plan(m: &FiniteMonoid) -> GeneratorPlan {
    let n = m.size();
    let mut gens: Vec<usize> = Vec::new();
    loop {
        let mut deriv: Vec<Derivation> = (0..n).map(|_| Derivation::Identity).collect();
        let mut seen = vec![false; n];
        let mut order = vec![m.identity()];
        seen[m.identity()] = true;
        for (slot, &g) in gens.iter().enumerate() {
            if !seen[g] {
                seen[g] = true;
                deriv[g] = Derivation::Generator(slot);
                order.push(g);
            }
        }
        let mut i = 0;
        while i < order.len() {
            let e = order[i];
            for (slot, &g) in gens.iter().enumerate() {
                let p = m.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    deriv[p] = Derivation::Product(e, slot);
                    order.push(p);
                }
            }
            i += 1;
        }
        if order.len() == n {
            return GeneratorPlan { gens, order, deriv };
        }
        let next = (0..n).find(|&x| !seen[x]).expect("some element unseen");
        gens.push(next);
    }
}

/// Compute the transformations of every derivable monoid element given the
/// generator assignments made so far, checking all fully-determined
/// compatibility relations. Returns `None` on the first violation.
fn propagate(
    m: &FiniteMonoid,
    plan: &GeneratorPlan,
    assigned: &[Vec<usize>],
    carrier: usize,
) -> Option<Vec<Option<Vec<usize>>>> {
    let n = m.size();
    let mut sigma: Vec<Option<Vec<usize>>> = vec![None; n];
    for &e in &plan.order {
        sigma[e] = match plan.deriv[e] {
            Derivation::Identity => Some((0..carrier).collect()),
            Derivation::Generator(slot) => assigned.get(slot).cloned(),
            Derivation::Product(prior, slot) => match (&sigma[prior], assigned.get(slot)) {
                (Some(p), Some(g)) => Some(p.iter().map(|&a| g[a]).collect()),
                _ => None,
            },
        };
    }
    for s in 0..n {
        for t in 0..n {
            let (Some(fs), Some(ft), Some(fst)) = (&sigma[s], &sigma[t], &sigma[m.mul(s, t)])
            else {
                continue;
            };
            if (0..carrier).any(|a| fst[a] != ft[fs[a]]) {
                return None;
            }
        }
    }
    Some(sigma)
}

fn enumerate_exact_counted(
    monoid: &Arc<FiniteMonoid>,
    size: usize,
    plan: &GeneratorPlan,
    candidates: &mut u64,
    budget: u64,
) -> Result<BTreeMap<String, FiniteAct>, ActError> {
    fn dfs(
        monoid: &Arc<FiniteMonoid>,
        size: usize,
        plan: &GeneratorPlan,
        assigned: &mut Vec<Vec<usize>>,
        candidates: &mut u64,
        budget: u64,
        classes: &mut BTreeMap<String, FiniteAct>,
    ) -> Result<(), ActError> {
        if assigned.len() == plan.gens.len() {
            let sigma = match propagate(monoid, plan, assigned, size) {
                Some(sigma) => sigma,
                None => return Ok(()),
            };
            let n = monoid.size();
            let labels = (0..size).map(|a| format!("a{a}")).collect();
            let action = (0..size)
                .map(|a| {
                    (0..n)
                        .map(|s| sigma[s].as_ref().expect("closure complete")[a])
                        .collect()
                })
                .collect();
            let raw = FiniteAct::from_parts(Arc::clone(monoid), labels, action)
                .expect("relations verified");
            let canon = canonical::canonical_form(&raw);
            let key = canonical_core_string(&canon);
            classes.entry(key).or_insert_with(|| {
                act::validate_act(monoid, &canon).expect("canonical form is valid")
            });
            return Ok(());
        }
        let mut map = vec![0usize; size];
        loop {
            *candidates += 1;
            if *candidates > budget {
                return Err(ActError::BudgetExceeded { budget });
            }
            assigned.push(map.clone());
            let viable = propagate(monoid, plan, assigned, size).is_some();
            if viable {
                dfs(monoid, size, plan, assigned, candidates, budget, classes)?;
            }
            assigned.pop();
            // next map in lexicographic order
            let mut i = size;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                if map[i] + 1 < size {
                    map[i] += 1;
                    map[i + 1..].fill(0);
                    break;
                }
                if i == 0 {
                    return Ok(());
                }
            }
        }
    }

    let mut classes = BTreeMap::new();
    let mut assigned = Vec::new();
    dfs(
        monoid,
        size,
        plan,
        &mut assigned,
        candidates,
        budget,
        &mut classes,
    )?;
    Ok(classes)
}

fn canonical_core_string(doc: &crate::doc::ActDoc) -> String {
    #[derive(Serialize)]
    struct Core<'a> {
        elements: &'a [String],
        action: &'a [Vec<String>],
    }
    serde_json::to_string(&Core {
        elements: &doc.elements,
        action: &doc.action,
    })
    .expect("serializable")
}

/// One canonical representative per isomorphism class of acts with carrier
/// size between 1 and `max_size`, ordered by size then canonical form.
pub fn enumerate_acts(
    monoid: &Arc<FiniteMonoid>,
    max_size: usize,
    budgets: &Budgets,
) -> Result<Vec<FiniteAct>, ActError> {
    let plan = generator_plan(monoid);
    let mut candidates = 0u64;
    let mut out = Vec::new();
    for size in 1..=max_size {
        let classes =
            enumerate_exact_counted(monoid, size, &plan, &mut candidates, budgets.enumeration)?;
        out.extend(classes.into_values());
    }
    Ok(out)
}

/// Canonical representatives of exactly the given carrier size.
pub fn enumerate_acts_exact(
    monoid: &Arc<FiniteMonoid>,
    size: usize,
    budgets: &Budgets,
) -> Result<Vec<FiniteAct>, ActError> {
    let plan = generator_plan(monoid);
    let mut candidates = 0u64;
    let classes =
        enumerate_exact_counted(monoid, size, &plan, &mut candidates, budgets.enumeration)?;
    Ok(classes.into_values().collect())
}

fn act_tag(index: usize, act: &FiniteAct) -> String {
    format!("act#{index}(size {})", act.size())
}

/// For every enumerated act: the computed decomposition must partition the
/// carrier into action-closed blocks, each block must admit no brute-force
/// split, and the coproduct of the blocks must be isomorphic to the act.
pub fn verify_unique_decomposition(
    monoid: &Arc<FiniteMonoid>,
    max_size: usize,
    budgets: &Budgets,
) -> Result<SuiteReport, ActError> {
    let started = Instant::now();
    let mut report = SuiteReport::new("decomposition", monoid.descriptor(), max_size);
    let acts = enumerate_acts(monoid, max_size, budgets)?;
    for (i, act) in acts.iter().enumerate() {
        report.instances_checked += 1;
        let d = decompose::decompose(act);
        for v in decompose::verify_decomposition(act, d.components()) {
            report.violations.push(format!("{}: {v}", act_tag(i, act)));
        }
        let parts = d.components_as_acts();
        for (ci, part) in parts.iter().enumerate() {
            if decompose::brute_force_split(part, budgets.split_bound)?.is_some() {
                report.violations.push(format!(
                    "{}: component {ci} admits a further split",
                    act_tag(i, act)
                ));
            }
        }
        let rebuilt = act::coproduct(&parts).expect("components share the monoid");
        if act::find_isomorphism(act, &rebuilt)?.is_none() {
            report.violations.push(format!(
                "{}: reassembled coproduct is not isomorphic to the act",
                act_tag(i, act)
            ));
        }
    }
    Ok(report.finish(started))
}

/// For all triples `(A, {B, C})` of enumerated acts: `A⊔B ≅ A⊔C` must force
/// `B ≅ C`, and the signature shortcut must agree with explicit isomorphism
/// search on every triple. Reports the matched-triple count; a run with no
/// matched triple is itself a violation (vacuous check).
pub fn verify_finite_cancellation(
    monoid: &Arc<FiniteMonoid>,
    max_size: usize,
    budgets: &Budgets,
) -> Result<SuiteReport, ActError> {
    let started = Instant::now();
    let mut report = SuiteReport::new("cancellation", monoid.descriptor(), max_size);
    let acts = enumerate_acts(monoid, max_size, budgets)?;
    let sigs: Vec<decompose::IsoSignature> = acts.iter().map(decompose::iso_signature).collect();
    let mut matched = 0u64;
    let mut matched_nontrivial = 0u64;
    for (a, act_a) in acts.iter().enumerate() {
        for (b, act_b) in acts.iter().enumerate() {
            for (c, act_c) in acts.iter().enumerate().skip(b) {
                report.instances_checked += 1;
                if report.instances_checked > budgets.triples {
                    return Err(ActError::BudgetExceeded {
                        budget: budgets.triples,
                    });
                }
                let ab = act::coproduct(&[act_a.clone(), act_b.clone()]).expect("same monoid");
                let ac = act::coproduct(&[act_a.clone(), act_c.clone()]).expect("same monoid");
                let explicit = act::find_isomorphism(&ab, &ac)?.is_some();
                let shortcut = sigs[a].sum(&sigs[b]) == sigs[a].sum(&sigs[c]);
                if explicit != shortcut {
                    report.violations.push(format!(
                        "triple ({a},{b},{c}): signature method ({shortcut}) disagrees with explicit search ({explicit})"
                    ));
                }
                if explicit {
                    matched += 1;
                    if sigs[b] != sigs[a] {
                        matched_nontrivial += 1;
                    }
                    if act::find_isomorphism(act_b, act_c)?.is_none() {
                        report.violations.push(format!(
                            "triple ({a},{b},{c}): A⊔B ≅ A⊔C but B ≇ C"
                        ));
                    }
                }
            }
        }
    }
    report.counters.insert("matched_triples".into(), matched);
    report
        .counters
        .insert("matched_triples_b_not_iso_a".into(), matched_nontrivial);
    if matched == 0 {
        report
            .violations
            .push("no triple with A⊔B ≅ A⊔C: the check is vacuous".into());
    }
    if matched_nontrivial == 0 {
        report
            .violations
            .push("no matched triple with B ≇ A in scope".into());
    }
    Ok(report.finish(started))
}

/// For every enumerated act `A` and every ordered pair of two-block,
/// component-respecting splittings `A = C⊔D = E⊔F`: `C ≅ E` must force
/// `D ≅ F`.
pub fn verify_internal_cancellation(
    monoid: &Arc<FiniteMonoid>,
    max_size: usize,
    budgets: &Budgets,
) -> Result<SuiteReport, ActError> {
    let started = Instant::now();
    let mut report = SuiteReport::new("internal", monoid.descriptor(), max_size);
    let acts = enumerate_acts(monoid, max_size, budgets)?;
    for (i, act) in acts.iter().enumerate() {
        let parts = decompose::decompose(act).components_as_acts();
        let r = parts.len();
        if r < 2 {
            // a single component splits only trivially; nothing to check
            continue;
        }
        let union = |mask: u32| -> FiniteAct {
            let chosen: Vec<FiniteAct> = (0..r)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| parts[k].clone())
                .collect();
            act::coproduct(&chosen).expect("non-empty by mask choice")
        };
        let full = (1u32 << r) - 1;
        let halves: Vec<(FiniteAct, FiniteAct)> = (1..full)
            .map(|mask| (union(mask), union(full & !mask)))
            .collect();
        for (cd, (c_act, d_act)) in halves.iter().enumerate() {
            for (ef, (e_act, f_act)) in halves.iter().enumerate() {
                report.instances_checked += 1;
                if report.instances_checked > budgets.triples {
                    return Err(ActError::BudgetExceeded {
                        budget: budgets.triples,
                    });
                }
                if act::find_isomorphism(c_act, e_act)?.is_some()
                    && act::find_isomorphism(d_act, f_act)?.is_none()
                {
                    report.violations.push(format!(
                        "{}: splittings {cd} and {ef} have C ≅ E but D ≇ F",
                        act_tag(i, act)
                    ));
                }
            }
        }
    }
    Ok(report.finish(started))
}

pub(crate) fn random_symbolic(rng: &mut ChaCha8Rng) -> SymbolicAct {
    const ENTRY_IDS: [&str; 6] = ["t0", "t1", "t2", "t3", "t4", "t5"];
    const FAMILY_IDS: [&str; 2] = ["F0", "F1"];
    let random_card = |rng: &mut ChaCha8Rng| match rng.gen_range(0..6u32) {
        5 => Cardinal::Omega,
        k => Cardinal::Finite(k as u64 + 1),
    };
    loop {
        let n_entries = rng.gen_range(0..=3usize);
        let n_families = rng.gen_range(0..=2usize);
        if n_entries + n_families == 0 {
            continue;
        }
        let mut entries = BTreeMap::new();
        while entries.len() < n_entries {
            let id = ENTRY_IDS[rng.gen_range(0..ENTRY_IDS.len())];
            let card = random_card(rng);
            entries.entry(id.to_string()).or_insert(card);
        }
        let mut families = BTreeMap::new();
        while families.len() < n_families {
            let id = FAMILY_IDS[rng.gen_range(0..FAMILY_IDS.len())];
            let card = random_card(rng);
            families.entry(id.to_string()).or_insert(card);
        }
        return SymbolicAct::new(entries, families).expect("non-empty, positive");
    }
}

fn witness_reverifies(a: &SymbolicAct, verdict: &CancellationVerdict) -> bool {
    match verdict {
        CancellationVerdict::Cancellable { .. } => true,
        CancellationVerdict::NotCancellable { witness } => match witness {
            CancellationWitness::Coproduct { b, c } => {
                sym_iso(&sym_coproduct(a, b), &sym_coproduct(a, c)) && !sym_iso(b, c)
            }
            CancellationWitness::Internal { c, d, e, f } => {
                sym_iso(&sym_coproduct(c, d), a)
                    && sym_iso(&sym_coproduct(e, f), a)
                    && sym_iso(d, f)
                    && !sym_iso(c, e)
            }
        },
    }
}

/// Seeded randomized suite over symbolic acts: decider compositionality,
/// agreement of the internal and coproduct deciders, witness soundness,
/// and the fixed qualitative regression cases.
pub fn verify_symbolic_theorems(seed: u64, trials: u64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("symbolic", "symbolic".into(), 0);
    report.counters.insert("seed".into(), seed);
    report.counters.insert("trials".into(), trials);

    let mut check = |name: &str, ok: bool, report: &mut SuiteReport| {
        report.instances_checked += 1;
        if !ok {
            report.violations.push(format!("regression {name} failed"));
        }
    };
    let entry = |id: &str, c: Cardinal| SymbolicAct::of_entry(id, c).unwrap();

    // fixed qualitative cases
    let t_omega = entry("t", Cardinal::Omega);
    let v = decide_cancellable(&t_omega);
    check(
        "omega-fold class is not cancellable",
        !v.is_cancellable() && witness_reverifies(&t_omega, &v),
        &mut report,
    );
    let two_omega = sym_coproduct(&entry("b", Cardinal::Omega), &entry("c", Cardinal::Omega));
    let v = decide_cancellable(&two_omega);
    check(
        "two omega-fold classes are not cancellable",
        !v.is_cancellable() && witness_reverifies(&two_omega, &v),
        &mut report,
    );
    check(
        "a single indecomposable is cancellable",
        decide_cancellable(&entry("t", Cardinal::Finite(1))).is_cancellable(),
        &mut report,
    );
    let family = SymbolicAct::of_family("F", Cardinal::Finite(1)).unwrap();
    check(
        "pairwise non-isomorphic family is cancellable",
        decide_cancellable(&family).is_cancellable(),
        &mut report,
    );
    check(
        "free act over finite basis is cancellable",
        decide_cancellable(&symbolic::free_act_symbolic(Cardinal::Finite(3)).unwrap())
            .is_cancellable(),
        &mut report,
    );
    check(
        "free act over infinite basis is not cancellable",
        !decide_cancellable(&symbolic::free_act_symbolic(Cardinal::Omega).unwrap())
            .is_cancellable(),
        &mut report,
    );
    let fin = sym_coproduct(
        &entry("a", Cardinal::Finite(2)),
        &entry("b", Cardinal::Finite(7)),
    );
    check(
        "without families, cancellable iff finitely decomposable",
        symbolic::theorem_eq_predicate(&fin) == Some(true)
            && symbolic::theorem_eq_predicate(&entry("a", Cardinal::Omega)) == Some(false)
            && symbolic::theorem_eq_predicate(&family).is_none(),
        &mut report,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        report.instances_checked += 1;
        let a = random_symbolic(&mut rng);
        let b = random_symbolic(&mut rng);
        let va = decide_cancellable(&a);
        let vb = decide_cancellable(&b);
        let vab = decide_cancellable(&sym_coproduct(&a, &b));
        if vab.is_cancellable() != (va.is_cancellable() && vb.is_cancellable()) {
            report
                .violations
                .push(format!("trial {trial}: compositionality fails"));
        }
        let ia = decide_internally_cancellable(&a);
        if ia.is_cancellable() != va.is_cancellable() {
            report.violations.push(format!(
                "trial {trial}: internal and coproduct verdicts disagree"
            ));
        }
        for (tag, act, verdict) in [("A", &a, &va), ("B", &b, &vb)] {
            if !witness_reverifies(act, verdict) {
                report
                    .violations
                    .push(format!("trial {trial}: witness for {tag} does not verify"));
            }
        }
        if !witness_reverifies(&a, &ia) {
            report.violations.push(format!(
                "trial {trial}: internal witness for A does not verify"
            ));
        }
    }
    report.finish(started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builtin_monoid;

    fn arc(name: &str) -> Arc<FiniteMonoid> {
        Arc::new(builtin_monoid(name).unwrap())
    }

    #[test]
    fn trivial_monoid_has_one_class_per_size() {
        let m = arc("trivial");
        let acts = enumerate_acts(&m, 4, &Budgets::default()).unwrap();
        assert_eq!(acts.len(), 4);
        let sizes: Vec<usize> = acts.iter().map(FiniteAct::size).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4]);
    }

    #[test]
    fn z2_has_two_classes_of_size_two() {
        let m = arc("cyclic_group(2)");
        let acts = enumerate_acts_exact(&m, 2, &Budgets::default()).unwrap();
        assert_eq!(acts.len(), 2);
    }

    #[test]
    fn enumerated_acts_are_canonical_and_valid() {
        let m = arc("cyclic_group(2)");
        for act in enumerate_acts(&m, 3, &Budgets::default()).unwrap() {
            assert!(act.check().is_ok());
            let canon = canonical::canonical_form(&act);
            let reparsed = act::validate_act(&m, &canon).unwrap();
            assert_eq!(act, reparsed);
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let m = arc("cyclic_group(2)");
        let budgets = Budgets {
            enumeration: 1,
            ..Budgets::default()
        };
        assert_eq!(
            enumerate_acts(&m, 3, &budgets).unwrap_err(),
            ActError::BudgetExceeded { budget: 1 }
        );
    }

    #[test]
    fn decomposition_suite_passes_on_fixtures() {
        for name in ["trivial", "cyclic_group(2)", "cyclic_group(3)"] {
            let report =
                verify_unique_decomposition(&arc(name), 4, &Budgets::default()).unwrap();
            assert!(report.pass(), "{name}: {:?}", report.violations());
        }
        let report =
            verify_unique_decomposition(&arc("full_transformation(2)"), 3, &Budgets::default())
                .unwrap();
        assert!(report.pass(), "{:?}", report.violations());
    }

    #[test]
    fn cancellation_suite_passes_and_is_not_vacuous() {
        for name in ["trivial", "cyclic_group(2)"] {
            let report =
                verify_finite_cancellation(&arc(name), 3, &Budgets::default()).unwrap();
            assert!(report.pass(), "{name}: {:?}", report.violations());
            assert!(report.counters()["matched_triples"] > 0);
        }
    }

    #[test]
    fn internal_suite_passes_on_fixtures() {
        let report =
            verify_internal_cancellation(&arc("cyclic_group(2)"), 4, &Budgets::default()).unwrap();
        assert!(report.pass(), "{:?}", report.violations());
        let report =
            verify_internal_cancellation(&arc("trivial"), 5, &Budgets::default()).unwrap();
        assert!(report.pass(), "{:?}", report.violations());
    }

    #[test]
    fn symbolic_suite_is_deterministic() {
        let a = verify_symbolic_theorems(0, 50).without_timing();
        let b = verify_symbolic_theorems(0, 50).without_timing();
        assert!(a.pass(), "{:?}", a.violations());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn reports_serialize_with_expected_fields() {
        let report = verify_symbolic_theorems(1, 5);
        let json = serde_json::to_value(&report).unwrap();
        assert!(json.get("suite").is_some());
        assert!(json.get("pass").is_some());
        assert!(json.get("wall_time_ms").is_some());
        let stripped = serde_json::to_value(report.without_timing()).unwrap();
        assert!(stripped.get("wall_time_ms").is_none());
    }
}
