//! Finite right acts over a finite monoid: validation, constructors
//! (regular, free, projective, coproduct), morphisms, and isomorphism
//! search.
//!
//! A `FiniteAct` stores its carrier as labels plus a dense `m×n` action
//! table, `action[a][s] = a·s`. Both act axioms (`a·1 = a` and
//! `a·(st) = (a·s)·t`) are enforced at construction; every value is
//! immutable afterwards, so sharing across threads is safe.

use std::sync::Arc;

use crate::canonical;
use crate::doc::{ActDoc, MonoidRef};
use crate::error::ActError;
use crate::monoid::FiniteMonoid;

/// A finite right act over a shared [`FiniteMonoid`].
#[derive(Debug, Clone)]
pub struct FiniteAct {
    monoid: Arc<FiniteMonoid>,
    carrier: Vec<String>,
    action: Vec<Vec<usize>>,
}

impl PartialEq for FiniteAct {
    fn eq(&self, other: &Self) -> bool {
        self.same_monoid(other) && self.carrier == other.carrier && self.action == other.action
    }
}

impl Eq for FiniteAct {}

impl FiniteAct {
    /// Build from raw parts, validating both act axioms.
    pub fn from_parts(
        monoid: Arc<FiniteMonoid>,
        carrier: Vec<String>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self, ActError> {
        let m = carrier.len();
        let n = monoid.size();
        if m == 0 {
            return Err(ActError::EmptyAct);
        }
        for (i, a) in carrier.iter().enumerate() {
            if carrier[..i].contains(a) {
                return Err(ActError::MalformedDocument(format!("duplicate label '{a}'")));
            }
        }
        if action.len() != m || action.iter().any(|row| row.len() != n) {
            return Err(ActError::MalformedDocument(format!(
                "action table must be {m}x{n}"
            )));
        }
        for row in &action {
            for &v in row {
                if v >= m {
                    return Err(ActError::MalformedDocument(format!(
                        "action index {v} out of range for carrier of size {m}"
                    )));
                }
            }
        }
        let act = FiniteAct {
            monoid,
            carrier,
            action,
        };
        act.check()?;
        Ok(act)
    }

    /// Re-assert both act axioms on an already-constructed value.
    pub fn check(&self) -> Result<(), ActError> {
        let id = self.monoid.identity();
        for a in 0..self.size() {
            if self.action[a][id] != a {
                return Err(ActError::IdentityAxiomViolation {
                    point: self.carrier[a].clone(),
                });
            }
        }
        let n = self.monoid.size();
        for a in 0..self.size() {
            for s in 0..n {
                for t in 0..n {
                    if self.action[self.action[a][s]][t] != self.action[a][self.monoid.mul(s, t)] {
                        return Err(ActError::CompatibilityViolation {
                            point: self.carrier[a].clone(),
                            s: self.monoid.label(s).to_string(),
                            t: self.monoid.label(t).to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Carrier size.
    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    /// Carrier labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.carrier
    }

    /// Label of carrier point `a`.
    pub fn label(&self, a: usize) -> &str {
        &self.carrier[a]
    }

    /// Carrier index of a label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.carrier.iter().position(|c| c == label)
    }

    /// `a·s` by table lookup.
    pub fn apply(&self, a: usize, s: usize) -> usize {
        self.action[a][s]
    }

    /// The monoid acting on this carrier.
    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    /// True when both acts share one monoid (structurally).
    pub fn same_monoid(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || *self.monoid == *other.monoid
    }

    /// Serialize with the monoid inlined.
    pub fn to_doc(&self) -> ActDoc {
        ActDoc {
            monoid: MonoidRef::Inline(self.monoid.to_doc()),
            elements: self.carrier.clone(),
            action: self
                .action
                .iter()
                .map(|row| row.iter().map(|&v| self.carrier[v].clone()).collect())
                .collect(),
        }
    }

    /// Restrict to an action-closed subset of carrier indices.
    ///
    /// Callers must pass a subact; closure is a caller invariant.
    pub(crate) fn subact(&self, indices: &[usize]) -> FiniteAct {
        let pos = |x: usize| indices.iter().position(|&i| i == x).expect("closed subset");
        let carrier = indices.iter().map(|&i| self.carrier[i].clone()).collect();
        let action = indices
            .iter()
            .map(|&a| {
                (0..self.monoid.size())
                    .map(|s| pos(self.action[a][s]))
                    .collect()
            })
            .collect();
        FiniteAct {
            monoid: Arc::clone(&self.monoid),
            carrier,
            action,
        }
    }

    /// The orbit `aS` as a sorted set of carrier indices (contains `a`).
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = (0..self.monoid.size()).map(|s| self.action[a][s]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}

/// Validate an act document against a monoid.
///
/// The document's own `monoid` field is resolved by the caller; this checks
/// carrier labels and both act axioms, reporting the first violation in
/// index order.
pub fn validate_act(monoid: &Arc<FiniteMonoid>, doc: &ActDoc) -> Result<FiniteAct, ActError> {
    let m = doc.elements.len();
    if m == 0 {
        return Err(ActError::EmptyAct);
    }
    let n = monoid.size();
    if doc.action.len() != m || doc.action.iter().any(|row| row.len() != n) {
        return Err(ActError::MalformedDocument(format!(
            "action table must be {m}x{n}"
        )));
    }
    let mut action = vec![vec![0usize; n]; m];
    for (a, row) in doc.action.iter().enumerate() {
        for (s, label) in row.iter().enumerate() {
            action[a][s] = doc
                .elements
                .iter()
                .position(|e| e == label)
                .ok_or_else(|| ActError::UnknownLabel(label.clone()))?;
        }
    }
    FiniteAct::from_parts(Arc::clone(monoid), doc.elements.clone(), action)
}

/// The monoid acting on itself by its own multiplication.
pub fn regular_act(monoid: &Arc<FiniteMonoid>) -> FiniteAct {
    let carrier = monoid.elements().to_vec();
    let action = (0..monoid.size())
        .map(|a| (0..monoid.size()).map(|s| monoid.mul(a, s)).collect())
        .collect();
    FiniteAct {
        monoid: Arc::clone(monoid),
        carrier,
        action,
    }
}

/// Coproduct of `k >= 1` copies of the regular act.
pub fn free_act(monoid: &Arc<FiniteMonoid>, k: usize) -> Result<FiniteAct, ActError> {
    if k == 0 {
        return Err(ActError::EmptyAct);
    }
    let copies: Vec<FiniteAct> = (0..k).map(|_| regular_act(monoid)).collect();
    coproduct(&copies)
}

/// Coproduct of principal right-ideal acts `eS` over a list of idempotents
/// (repetition allowed).
pub fn projective_act(monoid: &Arc<FiniteMonoid>, es: &[usize]) -> Result<FiniteAct, ActError> {
    if es.is_empty() {
        return Err(ActError::EmptyAct);
    }
    let summands: Vec<FiniteAct> = es
        .iter()
        .map(|&e| crate::monoid::principal_right_act(monoid, e))
        .collect::<Result<_, _>>()?;
    coproduct(&summands)
}

/// Tagged disjoint union of acts over one monoid.
///
/// Carrier labels are `"<summand-index>.<original-label>"`; this scheme is
/// normative so outputs are byte-stable.
pub fn coproduct(acts: &[FiniteAct]) -> Result<FiniteAct, ActError> {
    let first = acts.first().ok_or(ActError::EmptyAct)?;
    if !acts.iter().all(|a| first.same_monoid(a)) {
        return Err(ActError::MonoidMismatch);
    }
    let mut carrier = Vec::new();
    let mut action = Vec::new();
    let mut offset = 0usize;
    for (i, act) in acts.iter().enumerate() {
        for a in 0..act.size() {
            carrier.push(format!("{i}.{}", act.label(a)));
            action.push(act.action[a].iter().map(|&v| v + offset).collect());
        }
        offset += act.size();
    }
    Ok(FiniteAct {
        monoid: Arc::clone(&first.monoid),
        carrier,
        action,
    })
}

/// A map between acts over one monoid, stored as target indices per source
/// carrier index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActMorphism {
    source: FiniteAct,
    target: FiniteAct,
    map: Vec<usize>,
}

impl ActMorphism {
    /// Build a map, checking shape and that both acts share one monoid.
    /// The morphism property itself is checked by [`ActMorphism::is_morphism`].
    pub fn new(source: FiniteAct, target: FiniteAct, map: Vec<usize>) -> Result<Self, ActError> {
        if !source.same_monoid(&target) {
            return Err(ActError::MonoidMismatch);
        }
        if map.len() != source.size() {
            return Err(ActError::MalformedDocument(format!(
                "map length {} does not match source size {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size()) {
            return Err(ActError::MalformedDocument(format!(
                "map value {v} out of range for target of size {}",
                target.size()
            )));
        }
        Ok(ActMorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteAct {
        &self.source
    }

    pub fn target(&self) -> &FiniteAct {
        &self.target
    }

    /// Target index assigned to source index `a`.
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// True iff `f(a·s) = f(a)·s` for all `a`, `s`.
    pub fn is_morphism(&self) -> bool {
        let n = self.source.monoid.size();
        (0..self.source.size()).all(|a| {
            (0..n).all(|s| self.map[self.source.apply(a, s)] == self.target.apply(self.map[a], s))
        })
    }

    /// True iff the map is a bijection.
    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// Inverse map, when bijective.
    pub fn inverse(&self) -> Option<ActMorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.source.size()];
        for (a, &v) in self.map.iter().enumerate() {
            inv[v] = a;
        }
        Some(ActMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }

    /// Composition `g∘f` where `self` is `f : A -> B` and `other` is
    /// `g : B -> C`; requires `f.target == g.source`.
    pub fn compose(&self, other: &ActMorphism) -> Result<ActMorphism, ActError> {
        if self.target != other.source {
            return Err(ActError::MonoidMismatch);
        }
        let map = self.map.iter().map(|&v| other.map[v]).collect();
        Ok(ActMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map,
        })
    }
}

/// Search for an isomorphism between two acts over one monoid.
///
/// Decomposes both acts, matches components by canonical form, and
/// assembles an explicit bijective morphism; returns `None` when the
/// component signatures differ. Deterministic for fixed inputs.
pub fn find_isomorphism(a: &FiniteAct, b: &FiniteAct) -> Result<Option<ActMorphism>, ActError> {
    if !a.same_monoid(b) {
        return Err(ActError::MonoidMismatch);
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let comps_a = canonical::analyze_components(a);
    let comps_b = canonical::analyze_components(b);
    if comps_a.len() != comps_b.len() {
        return Ok(None);
    }
    // Match each component of `a`, in decomposition order, to the first
    // unused component of `b` with the same canonical key.
    let mut used = vec![false; comps_b.len()];
    let mut map = vec![0usize; a.size()];
    for ca in &comps_a {
        let mut matched = false;
        for (j, cb) in comps_b.iter().enumerate() {
            if used[j] || cb.key != ca.key {
                continue;
            }
            used[j] = true;
            // canonical position -> carrier index of b
            let mut from_canon = vec![0usize; cb.indices.len()];
            for (local, &carrier_idx) in cb.indices.iter().enumerate() {
                from_canon[cb.perm[local]] = carrier_idx;
            }
            for (local, &carrier_idx) in ca.indices.iter().enumerate() {
                map[carrier_idx] = from_canon[ca.perm[local]];
            }
            matched = true;
            break;
        }
        if !matched {
            return Ok(None);
        }
    }
    let morphism = ActMorphism::new(a.clone(), b.clone(), map).expect("same monoid, shape ok");
    debug_assert!(morphism.is_morphism() && morphism.is_bijective());
    Ok(Some(morphism))
}

/// True iff some orbit `aS` covers the whole carrier.
pub fn is_cyclic(act: &FiniteAct) -> bool {
    (0..act.size()).any(|a| act.orbit(a).len() == act.size())
}

/// True iff every orbit `aS` covers the whole carrier (no proper subact).
pub fn is_simple(act: &FiniteAct) -> bool {
    (0..act.size()).all(|a| act.orbit(a).len() == act.size())
}

/// Canonical normal form of an act as a document: canonical forms of the
/// indecomposable components, sorted, reassembled with positional labels
/// `"<component>.<point>"`. Two acts over one monoid are isomorphic iff
/// their canonical forms are equal documents.
pub fn canonical_form(act: &FiniteAct) -> ActDoc {
    canonical::canonical_form(act)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::doc::parse_json;
    use crate::monoid::builtin_monoid;

    pub(crate) fn z2() -> Arc<FiniteMonoid> {
        Arc::new(builtin_monoid("cyclic_group(2)").unwrap())
    }

    fn act_from(monoid: &Arc<FiniteMonoid>, text: &str) -> Result<FiniteAct, ActError> {
        validate_act(monoid, &parse_json(text).unwrap())
    }

    /// The two-element act where the generator swaps the points.
    pub(crate) fn swap_act(monoid: &Arc<FiniteMonoid>) -> FiniteAct {
        act_from(
            monoid,
            r#"{"monoid":"builtin:cyclic_group(2)","elements":["x","y"],"action":[["x","y"],["y","x"]]}"#,
        )
        .unwrap()
    }

    /// A single fixed point.
    pub(crate) fn fixed_point(monoid: &Arc<FiniteMonoid>) -> FiniteAct {
        let n = monoid.size();
        FiniteAct::from_parts(
            Arc::clone(monoid),
            vec!["p".into()],
            vec![vec![0; n]],
        )
        .unwrap()
    }

    #[test]
    fn one_element_act_is_valid() {
        let m = z2();
        let act = fixed_point(&m);
        assert!(act.check().is_ok());
        assert_eq!(act.size(), 1);
    }

    #[test]
    fn swap_act_is_valid() {
        let m = z2();
        let act = swap_act(&m);
        assert_eq!(act.apply(0, 1), 1);
        assert_eq!(act.apply(1, 1), 0);
    }

    #[test]
    fn compatibility_violation_reports_first_triple() {
        let m = z2();
        let err = act_from(
            &m,
            r#"{"monoid":"builtin:cyclic_group(2)","elements":["x","y"],"action":[["x","y"],["y","y"]]}"#,
        )
        .unwrap_err();
        // x·(g·g) = x but (x·g)·g = y
        assert_eq!(
            err,
            ActError::CompatibilityViolation {
                point: "x".into(),
                s: "g".into(),
                t: "g".into()
            }
        );
    }

    #[test]
    fn identity_axiom_violation_detected() {
        let m = z2();
        let err = act_from(
            &m,
            r#"{"monoid":"builtin:cyclic_group(2)","elements":["x","y"],"action":[["y","y"],["x","x"]]}"#,
        )
        .unwrap_err();
        assert_eq!(err, ActError::IdentityAxiomViolation { point: "x".into() });
    }

    #[test]
    fn empty_act_rejected() {
        let m = z2();
        let err = act_from(
            &m,
            r#"{"monoid":"builtin:cyclic_group(2)","elements":[],"action":[]}"#,
        )
        .unwrap_err();
        assert_eq!(err, ActError::EmptyAct);
    }

    #[test]
    fn regular_act_is_the_table() {
        let m = z2();
        let act = regular_act(&m);
        assert_eq!(act.labels(), m.elements());
        assert_eq!(act.apply(0, 1), 1);
        assert_eq!(act.apply(1, 1), 0);
        assert!(act.check().is_ok());

        let t2 = Arc::new(builtin_monoid("full_transformation(2)").unwrap());
        let reg = regular_act(&t2);
        assert_eq!(reg.size(), 4);
        assert!(reg.check().is_ok());
    }

    #[test]
    fn free_act_sizes() {
        let m = z2();
        let f1 = free_act(&m, 1).unwrap();
        assert!(find_isomorphism(&f1, &regular_act(&m)).unwrap().is_some());
        let f3 = free_act(&m, 3).unwrap();
        assert_eq!(f3.size(), 6);
        assert!(free_act(&m, 0).is_err());
    }

    #[test]
    fn projective_act_examples() {
        let t2 = Arc::new(builtin_monoid("full_transformation(2)").unwrap());
        let reg = projective_act(&t2, &[t2.identity()]).unwrap();
        assert_eq!(reg.size(), 4);
        let c0 = t2.index_of("t00").unwrap();
        let c1 = t2.index_of("t11").unwrap();
        let p = projective_act(&t2, &[c0, c1]).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.check().is_ok());
        assert_eq!(projective_act(&t2, &[]).unwrap_err(), ActError::EmptyAct);
        assert!(matches!(
            projective_act(&t2, &[t2.index_of("t10").unwrap()]),
            Err(ActError::NotIdempotent(_))
        ));
    }

    #[test]
    fn coproduct_sizes_and_labels() {
        let m = z2();
        let a = swap_act(&m);
        let b = fixed_point(&m);
        let c = coproduct(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(c.size(), a.size() + b.size());
        assert_eq!(c.labels(), &["0.x", "0.y", "1.p"]);
        assert!(c.check().is_ok());
        assert!(coproduct(&[]).is_err());
    }

    #[test]
    fn coproduct_rejects_monoid_mismatch() {
        let m = z2();
        let t = Arc::new(builtin_monoid("trivial").unwrap());
        let a = swap_act(&m);
        let b = fixed_point(&t);
        assert_eq!(coproduct(&[a, b]).unwrap_err(), ActError::MonoidMismatch);
    }

    #[test]
    fn morphism_examples() {
        let m = z2();
        let a = swap_act(&m);
        // identity map
        let id = ActMorphism::new(a.clone(), a.clone(), vec![0, 1]).unwrap();
        assert!(id.is_morphism());
        // constant map onto a fixed point
        let p = fixed_point(&m);
        let c = ActMorphism::new(a.clone(), p, vec![0, 0]).unwrap();
        assert!(c.is_morphism());
        // x↦x, y↦x is not a morphism on the swap act
        let bad = ActMorphism::new(a.clone(), a, vec![0, 0]).unwrap();
        assert!(!bad.is_morphism());
    }

    #[test]
    fn find_isomorphism_identity_case() {
        let m = z2();
        let a = swap_act(&m);
        let f = find_isomorphism(&a, &a).unwrap().unwrap();
        assert!(f.is_morphism() && f.is_bijective());
        assert!(f.inverse().unwrap().is_morphism());
    }

    #[test]
    fn find_isomorphism_distinguishes_component_counts() {
        let m = z2();
        let a = swap_act(&m);
        let two_points = coproduct(&[fixed_point(&m), fixed_point(&m)]).unwrap();
        assert!(find_isomorphism(&a, &two_points).unwrap().is_none());
    }

    #[test]
    fn cyclic_and_simple_examples() {
        let m = z2();
        let p = fixed_point(&m);
        assert!(is_cyclic(&p) && is_simple(&p));
        let reg = regular_act(&m);
        assert!(is_cyclic(&reg));
        let two = coproduct(&[fixed_point(&m), fixed_point(&m)]).unwrap();
        assert!(!is_cyclic(&two) && !is_simple(&two));
        // the swap act is cyclic and simple; the regular Z2 act equals it
        assert!(is_simple(&swap_act(&m)));
    }
}
