//! Symbolic acts: formal coproducts of indecomposable isomorphism classes
//! with cardinal multiplicities, and the cancellation deciders over them.
//!
//! A symbolic act lists finitely many named classes (`entries`) and
//! finitely many `families`, each family standing for countably many
//! pairwise non-isomorphic classes that all occur with one constant
//! multiplicity. Multiplicities are finite or ω, which covers every
//! countable case expressible in this grammar; an act whose classes take
//! infinitely many distinct finite multiplicities is deliberately not
//! representable.
//!
//! Cancellation is decidable here: an act cancels from coproducts exactly
//! when no class occurs ω times. A failing act carries a machine-checkable
//! witness pair `B ≇ C` with `A ⊔ B ≅ A ⊔ C`, and the internal decider
//! produces the analogous in-place witness quadruple.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::act::FiniteAct;
use crate::decompose;
use crate::doc::{CardinalDoc, OmegaTag, SymbolicDoc};
use crate::error::ActError;

/// A finite count or ω, the countably infinite cardinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cardinal {
    Finite(u64),
    Omega,
}

impl Cardinal {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub(crate) fn to_doc(self) -> CardinalDoc {
        match self {
            Cardinal::Finite(k) => CardinalDoc::Finite(k),
            Cardinal::Omega => CardinalDoc::Named(OmegaTag::Omega),
        }
    }

    pub(crate) fn from_doc(doc: CardinalDoc) -> Cardinal {
        match doc {
            CardinalDoc::Finite(k) => Cardinal::Finite(k),
            CardinalDoc::Named(OmegaTag::Omega) => Cardinal::Omega,
        }
    }
}

impl std::fmt::Display for Cardinal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cardinal::Finite(k) => write!(f, "{k}"),
            Cardinal::Omega => write!(f, "omega"),
        }
    }
}

/// Cardinal addition: finite values add, ω absorbs.
pub fn card_add(x: Cardinal, y: Cardinal) -> Cardinal {
    match (x, y) {
        (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a.saturating_add(b)),
        _ => Cardinal::Omega,
    }
}

/// A formal coproduct of indecomposable classes.
///
/// Distinct ids denote non-isomorphic classes; entry ids and family ids
/// live in disjoint namespaces. All stored multiplicities are ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicAct {
    entries: BTreeMap<String, Cardinal>,
    families: BTreeMap<String, Cardinal>,
}

impl SymbolicAct {
    /// Build and validate: non-empty, multiplicities ≥ 1, disjoint id
    /// namespaces.
    pub fn new(
        entries: BTreeMap<String, Cardinal>,
        families: BTreeMap<String, Cardinal>,
    ) -> Result<Self, ActError> {
        if entries.is_empty() && families.is_empty() {
            return Err(ActError::EmptyAct);
        }
        for (id, card) in entries.iter().chain(families.iter()) {
            if *card == Cardinal::Finite(0) {
                return Err(ActError::MalformedDocument(format!(
                    "multiplicity of '{id}' must be at least 1"
                )));
            }
        }
        if let Some(id) = entries.keys().find(|id| families.contains_key(*id)) {
            return Err(ActError::MalformedDocument(format!(
                "id '{id}' used as both a type and a family"
            )));
        }
        Ok(SymbolicAct { entries, families })
    }

    /// A single named class with a multiplicity.
    pub fn of_entry(id: &str, card: Cardinal) -> Result<Self, ActError> {
        Self::new(BTreeMap::from([(id.to_string(), card)]), BTreeMap::new())
    }

    /// A single family with a constant multiplicity.
    pub fn of_family(id: &str, card: Cardinal) -> Result<Self, ActError> {
        Self::new(BTreeMap::new(), BTreeMap::from([(id.to_string(), card)]))
    }

    pub fn entries(&self) -> &BTreeMap<String, Cardinal> {
        &self.entries
    }

    pub fn families(&self) -> &BTreeMap<String, Cardinal> {
        &self.families
    }

    pub fn from_doc(doc: &SymbolicDoc) -> Result<Self, ActError> {
        let conv = |m: &BTreeMap<String, CardinalDoc>| {
            m.iter()
                .map(|(k, &v)| (k.clone(), Cardinal::from_doc(v)))
                .collect()
        };
        SymbolicAct::new(conv(&doc.entries), conv(&doc.families))
    }

    pub fn to_doc(&self) -> SymbolicDoc {
        let conv = |m: &BTreeMap<String, Cardinal>| {
            m.iter().map(|(k, &v)| (k.clone(), v.to_doc())).collect()
        };
        SymbolicDoc {
            entries: conv(&self.entries),
            families: conv(&self.families),
        }
    }
}

/// Coproduct of symbolic acts: multiplicities add pointwise per id.
pub fn sym_coproduct(a: &SymbolicAct, b: &SymbolicAct) -> SymbolicAct {
    let merge = |x: &BTreeMap<String, Cardinal>, y: &BTreeMap<String, Cardinal>| {
        let mut out = x.clone();
        for (id, &card) in y {
            out.entry(id.clone())
                .and_modify(|c| *c = card_add(*c, card))
                .or_insert(card);
        }
        out
    };
    SymbolicAct {
        entries: merge(&a.entries, &b.entries),
        families: merge(&a.families, &b.families),
    }
}

/// Isomorphism of symbolic acts is equality of both multiplicity maps,
/// by uniqueness of the decomposition into indecomposables.
pub fn sym_iso(a: &SymbolicAct, b: &SymbolicAct) -> bool {
    a == b
}

/// The set of multiplicities occurring in the act. Finite by construction:
/// there are only finitely many ids.
pub fn signature_p(a: &SymbolicAct) -> BTreeSet<Cardinal> {
    a.entries
        .values()
        .chain(a.families.values())
        .copied()
        .collect()
}

/// True iff the act has finitely many components: no families and every
/// entry multiplicity finite.
pub fn is_finitely_decomposable(a: &SymbolicAct) -> bool {
    a.families.is_empty() && a.entries.values().all(Cardinal::is_finite)
}

/// Why a symbolic act is cancellable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CancellationRule {
    /// Every isomorphism class occurs finitely often.
    AllClassesFinite,
    /// Finitely many components altogether.
    FinitelyDecomposable,
    /// A single indecomposable.
    Indecomposable,
}

impl CancellationRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            CancellationRule::AllClassesFinite => "all-classes-finite",
            CancellationRule::FinitelyDecomposable => "finitely-decomposable",
            CancellationRule::Indecomposable => "indecomposable",
        }
    }
}

/// A machine-checkable refutation of cancellability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CancellationWitness {
    /// `A ⊔ B ≅ A ⊔ C` with `B ≇ C`.
    Coproduct { b: SymbolicAct, c: SymbolicAct },
    /// `A = C ⊔ D = E ⊔ F` with `D ≅ F` but `C ≇ E`.
    Internal {
        c: SymbolicAct,
        d: SymbolicAct,
        e: SymbolicAct,
        f: SymbolicAct,
    },
}

/// Outcome of a cancellation decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CancellationVerdict {
    Cancellable { rule: CancellationRule },
    NotCancellable { witness: CancellationWitness },
}

impl CancellationVerdict {
    pub fn is_cancellable(&self) -> bool {
        matches!(self, CancellationVerdict::Cancellable { .. })
    }

    pub fn witness(&self) -> Option<&CancellationWitness> {
        match self {
            CancellationVerdict::Cancellable { .. } => None,
            CancellationVerdict::NotCancellable { witness } => Some(witness),
        }
    }
}

/// The lexicographically smallest id carrying ω, with a flag for whether it
/// names a family.
fn smallest_omega_id(a: &SymbolicAct) -> Option<(&str, bool)> {
    let e = a
        .entries
        .iter()
        .find(|(_, &c)| c == Cardinal::Omega)
        .map(|(id, _)| (id.as_str(), false));
    let f = a
        .families
        .iter()
        .find(|(_, &c)| c == Cardinal::Omega)
        .map(|(id, _)| (id.as_str(), true));
    match (e, f) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, y) => x.or(y),
    }
}

fn single_id(id: &str, family: bool, card: Cardinal) -> SymbolicAct {
    if family {
        SymbolicAct::of_family(id, card).expect("positive multiplicity")
    } else {
        SymbolicAct::of_entry(id, card).expect("positive multiplicity")
    }
}

fn cancellable_rule(a: &SymbolicAct) -> CancellationRule {
    if a.families.is_empty() {
        if a.entries.len() == 1 && a.entries.values().next() == Some(&Cardinal::Finite(1)) {
            CancellationRule::Indecomposable
        } else {
            CancellationRule::FinitelyDecomposable
        }
    } else {
        CancellationRule::AllClassesFinite
    }
}

/// Decide whether `A` cancels from coproducts: `A ⊔ B ≅ A ⊔ C ⇒ B ≅ C`
/// for all symbolic `B`, `C`.
///
/// Cancellable iff every multiplicity in entries and families is finite.
/// Otherwise the verdict carries `B = {t:1}`, `C = {t:2}` for the smallest
/// id `t` with ω copies: one extra copy of `t` is absorbed either way, so
/// `A ⊔ B ≅ A ⊔ C` while `B ≇ C`. The witness is re-verified before the
/// verdict is returned.
pub fn decide_cancellable(a: &SymbolicAct) -> CancellationVerdict {
    match smallest_omega_id(a) {
        None => CancellationVerdict::Cancellable {
            rule: cancellable_rule(a),
        },
        Some((id, family)) => {
            let b = single_id(id, family, Cardinal::Finite(1));
            let c = single_id(id, family, Cardinal::Finite(2));
            assert!(
                sym_iso(&sym_coproduct(a, &b), &sym_coproduct(a, &c)),
                "witness must absorb into A"
            );
            assert!(!sym_iso(&b, &c), "witness sides must differ");
            CancellationVerdict::NotCancellable {
                witness: CancellationWitness::Coproduct { b, c },
            }
        }
    }
}

/// Decide internal cancellation: for subact splittings `A = C ⊔ D = E ⊔ F`,
/// does `C ≅ E` force `D ≅ F`?
///
/// The verdict always matches [`decide_cancellable`], but the refutation is
/// an in-place quadruple: removing one or two copies of an ω-repeated class
/// leaves `A` itself, so `C = {t:1}`, `E = {t:2}`, `D = F = A` split `A`
/// both ways with `D ≅ F` and `C ≇ E`. Verified before returning.
pub fn decide_internally_cancellable(a: &SymbolicAct) -> CancellationVerdict {
    match smallest_omega_id(a) {
        None => CancellationVerdict::Cancellable {
            rule: cancellable_rule(a),
        },
        Some((id, family)) => {
            let c = single_id(id, family, Cardinal::Finite(1));
            let e = single_id(id, family, Cardinal::Finite(2));
            let d = a.clone();
            let f = a.clone();
            assert!(sym_iso(&sym_coproduct(&c, &d), a), "C ⊔ D must rebuild A");
            assert!(sym_iso(&sym_coproduct(&e, &f), a), "E ⊔ F must rebuild A");
            assert!(sym_iso(&d, &f) && !sym_iso(&c, &e));
            CancellationVerdict::NotCancellable {
                witness: CancellationWitness::Internal { c, d, e, f },
            }
        }
    }
}

/// A free act as a symbolic value: `basis` copies of the regular act.
pub fn free_act_symbolic(basis: Cardinal) -> Result<SymbolicAct, ActError> {
    SymbolicAct::of_entry("S", basis)
}

/// When the act has finitely many class ids (no families), cancellability
/// coincides with finite decomposability; returns that shared verdict, or
/// `None` when families are present and the hypothesis fails.
pub fn theorem_eq_predicate(a: &SymbolicAct) -> Option<bool> {
    if !a.families.is_empty() {
        return None;
    }
    let cancellable = decide_cancellable(a).is_cancellable();
    assert_eq!(
        cancellable,
        is_finitely_decomposable(a),
        "without families, cancellable must equal finitely decomposable"
    );
    Some(cancellable)
}

/// Bridge from a concrete finite act: its isomorphism-class signature as a
/// symbolic act, canonical component forms serving as type ids.
pub fn symbolize(act: &FiniteAct) -> SymbolicAct {
    let entries = decompose::iso_signature(act)
        .entries()
        .iter()
        .map(|(k, &mult)| (k.clone(), Cardinal::Finite(mult as u64)))
        .collect();
    SymbolicAct {
        entries,
        families: BTreeMap::new(),
    }
}
