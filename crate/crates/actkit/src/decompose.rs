//! Unique decomposition of a finite act into indecomposable subacts, and
//! the isomorphism-class signature derived from it.
//!
//! Two carrier points belong to one component iff they are joined by a
//! zig-zag of action steps, i.e. they are connected in the symmetric
//! closure of `{(a, a·s)}`. Union-find over those edges computes the
//! partition in near-linear time; each block is action-closed by
//! construction and indecomposable because any further split would
//! disconnect it.

use std::collections::BTreeMap;

use crate::act::FiniteAct;
use crate::canonical;
use crate::error::ActError;

/// Default carrier bound for [`brute_force_split`].
pub const DEFAULT_SPLIT_BOUND: usize = 12;

/// The partition of an act's carrier into indecomposable components.
#[derive(Debug, Clone)]
pub struct Decomposition {
    act: FiniteAct,
    /// Disjoint carrier-index sets, each sorted ascending; components are
    /// ordered by smallest carrier index.
    components: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn act(&self) -> &FiniteAct {
        &self.act
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Each component as a standalone act with its original labels.
    pub fn components_as_acts(&self) -> Vec<FiniteAct> {
        self.components
            .iter()
            .map(|c| self.act.subact(c))
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // rooting at the smaller index keeps the output order stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The component index sets of an act, ordered by smallest carrier index.
pub(crate) fn component_sets(act: &FiniteAct) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(act.size());
    for a in 0..act.size() {
        for s in 0..act.monoid().size() {
            uf.union(a, act.apply(a, s));
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..act.size() {
        by_root.entry(uf.find(a)).or_default().push(a);
    }
    by_root.into_values().collect()
}

/// Compute the unique decomposition into indecomposable subacts.
pub fn decompose(act: &FiniteAct) -> Decomposition {
    Decomposition {
        act: act.clone(),
        components: component_sets(act),
    }
}

/// True iff the act has exactly one component.
pub fn is_indecomposable(act: &FiniteAct) -> bool {
    component_sets(act).len() == 1
}

/// Independent decomposability oracle: search all two-block partitions for
/// a pair of disjoint, covering, non-empty, action-closed subsets.
///
/// Exhaustive over subsets containing/excluding point 0, so it is
/// `O(2^(m-1))`; rejects carriers above `bound`.
pub fn brute_force_split(
    act: &FiniteAct,
    bound: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>, ActError> {
    let m = act.size();
    if m > bound {
        return Err(ActError::SizeBoundExceeded { size: m, bound });
    }
    let n = act.monoid().size();
    let closed = |mask: u64| -> bool {
        (0..m)
            .filter(|&a| mask >> a & 1 == 1)
            .all(|a| (0..n).all(|s| mask >> act.apply(a, s) & 1 == 1))
    };
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    // point 0 always lands in the first block; enumerate the rest
    for rest in 0..(1u64 << (m - 1)) {
        let mask = rest << 1 | 1;
        if mask == full {
            continue;
        }
        let co = full & !mask;
        if closed(mask) && closed(co) {
            let b: Vec<usize> = (0..m).filter(|&a| mask >> a & 1 == 1).collect();
            let c: Vec<usize> = (0..m).filter(|&a| co >> a & 1 == 1).collect();
            return Ok(Some((b, c)));
        }
    }
    Ok(None)
}

/// Multiset of canonical component forms with multiplicities.
///
/// Keys are the serialized standalone canonical documents of the
/// components; two finite acts over one monoid are isomorphic iff their
/// signatures are equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IsoSignature {
    entries: BTreeMap<String, usize>,
}

impl IsoSignature {
    /// Canonical form -> multiplicity, in key order.
    pub fn entries(&self) -> &BTreeMap<String, usize> {
        &self.entries
    }

    /// Total number of components.
    pub fn component_count(&self) -> usize {
        self.entries.values().sum()
    }

    /// Multiset sum.
    pub fn sum(&self, other: &IsoSignature) -> IsoSignature {
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            *entries.entry(k.clone()).or_insert(0) += v;
        }
        IsoSignature { entries }
    }
}

/// The isomorphism-class signature of an act.
pub fn iso_signature(act: &FiniteAct) -> IsoSignature {
    let mut entries = BTreeMap::new();
    for comp in canonical::analyze_components(act) {
        *entries.entry(comp.key).or_insert(0) += 1;
    }
    IsoSignature { entries }
}

/// Check the partition and closure invariants of a claimed decomposition,
/// returning one message per violation. Used by the verification suites
/// and as a negative control for corrupted inputs.
pub fn verify_decomposition(act: &FiniteAct, components: &[Vec<usize>]) -> Vec<String> {
    let mut violations = Vec::new();
    let m = act.size();
    let mut seen = vec![0usize; m];
    for (ci, comp) in components.iter().enumerate() {
        if comp.is_empty() {
            violations.push(format!("component {ci} is empty"));
        }
        for &a in comp {
            if a >= m {
                violations.push(format!("component {ci} references index {a} out of range"));
            } else {
                seen[a] += 1;
            }
        }
    }
    for (a, &count) in seen.iter().enumerate() {
        if count != 1 {
            violations.push(format!(
                "carrier point '{}' covered {count} times",
                act.label(a)
            ));
        }
    }
    for (ci, comp) in components.iter().enumerate() {
        for &a in comp {
            if a >= m {
                continue;
            }
            for s in 0..act.monoid().size() {
                let t = act.apply(a, s);
                if !comp.contains(&t) {
                    violations.push(format!(
                        "component {ci} not action-closed: '{}'·'{}' leaves it",
                        act.label(a),
                        act.monoid().label(s)
                    ));
                }
            }
        }
    }
    violations
}
