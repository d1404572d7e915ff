//! Finite monoids: validated multiplication tables, builtin fixtures,
//! idempotents, and principal right-ideal acts.
//!
//! Element labels are opaque strings; all computation runs on dense indices,
//! and the label order of the source document fixes the index order. The
//! composition convention for transformations is "apply left, then right":
//! `s·t` means apply `s` first, which makes right acts read naturally as
//! `a·(st) = (a·s)·t`.

use std::sync::Arc;

use crate::act::FiniteAct;
use crate::doc::MonoidDoc;
use crate::error::ActError;

/// A finite monoid given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteMonoid {
    /// Number of elements.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Element labels in index order.
    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    /// Index of the label, if declared.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// Product `s·t` by table lookup.
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s][t]
    }

    /// One-line descriptor used in suite reports.
    pub fn descriptor(&self) -> String {
        format!("{{{}}}", self.elements.join(","))
    }

    /// Serialize back to the document form.
    pub fn to_doc(&self) -> MonoidDoc {
        MonoidDoc {
            elements: self.elements.clone(),
            identity: self.elements[self.identity].clone(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&k| self.elements[k].clone()).collect())
                .collect(),
        }
    }

    /// Re-assert the monoid invariants on an already-constructed value.
    pub fn check(&self) -> Result<(), ActError> {
        check_invariants(&self.elements, self.identity, &self.table)
    }
}

fn check_invariants(
    elements: &[String],
    identity: usize,
    table: &[Vec<usize>],
) -> Result<(), ActError> {
    let n = elements.len();
    for row in table {
        for &k in row {
            if k >= n {
                return Err(ActError::MalformedDocument(format!(
                    "table index {k} out of range for {n} elements"
                )));
            }
        }
    }
    for s in 0..n {
        if table[identity][s] != s || table[s][identity] != s {
            return Err(ActError::MissingIdentity(elements[identity].clone()));
        }
    }
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                if table[table[s][t]][u] != table[s][table[t][u]] {
                    return Err(ActError::NonAssociative {
                        s: elements[s].clone(),
                        t: elements[t].clone(),
                        u: elements[u].clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Parse and validate a monoid document.
///
/// Checks shape, label uniqueness, the identity laws for the declared
/// identity, and associativity (reporting the first violating triple).
pub fn load_monoid(doc: &MonoidDoc) -> Result<FiniteMonoid, ActError> {
    let n = doc.elements.len();
    if n == 0 {
        return Err(ActError::MalformedDocument("empty element list".into()));
    }
    for (i, a) in doc.elements.iter().enumerate() {
        if doc.elements[..i].contains(a) {
            return Err(ActError::MalformedDocument(format!("duplicate label '{a}'")));
        }
    }
    if doc.table.len() != n || doc.table.iter().any(|row| row.len() != n) {
        return Err(ActError::MalformedDocument(format!(
            "table must be {n}x{n}"
        )));
    }
    let index = |label: &String| -> Result<usize, ActError> {
        doc.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| ActError::UnknownLabel(label.clone()))
    };
    let identity = index(&doc.identity)?;
    let mut table = vec![vec![0usize; n]; n];
    for (s, row) in doc.table.iter().enumerate() {
        for (t, label) in row.iter().enumerate() {
            table[s][t] = index(label)?;
        }
    }
    check_invariants(&doc.elements, identity, &table)?;
    Ok(FiniteMonoid {
        elements: doc.elements.clone(),
        identity,
        table,
    })
}

/// Construct a builtin monoid from a name like `trivial`, `cyclic_group(3)`,
/// or `full_transformation(2)`.
pub fn builtin_monoid(name: &str) -> Result<FiniteMonoid, ActError> {
    let name = name.trim();
    if name == "trivial" {
        return Ok(trivial());
    }
    if let Some(arg) = parse_call(name, "cyclic_group") {
        let n: usize = arg
            .parse()
            .map_err(|_| ActError::UnsupportedParams(name.to_string()))?;
        if n == 0 {
            return Err(ActError::UnsupportedParams(name.to_string()));
        }
        return Ok(cyclic_group(n));
    }
    if let Some(arg) = parse_call(name, "full_transformation") {
        let n: usize = arg
            .parse()
            .map_err(|_| ActError::UnsupportedParams(name.to_string()))?;
        if n == 0 || n > 3 {
            return Err(ActError::UnsupportedParams(name.to_string()));
        }
        return Ok(full_transformation(n));
    }
    Err(ActError::UnsupportedParams(name.to_string()))
}

fn parse_call<'a>(name: &'a str, head: &str) -> Option<&'a str> {
    name.strip_prefix(head)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

fn trivial() -> FiniteMonoid {
    FiniteMonoid {
        elements: vec!["1".into()],
        identity: 0,
        table: vec![vec![0]],
    }
}

fn cyclic_group(n: usize) -> FiniteMonoid {
    let elements: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteMonoid {
        elements,
        identity: 0,
        table,
    }
}

/// All maps `{0..n-1} -> {0..n-1}`, ordered lexicographically by image
/// tuple and labeled `t<images>`; `s·t` applies `s` first, then `t`.
fn full_transformation(n: usize) -> FiniteMonoid {
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        maps.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if cur[i] + 1 < n {
                cur[i] += 1;
                cur[i + 1..].fill(0);
                break;
            }
            if i == 0 {
                cur.clear();
                break;
            }
        }
        if cur.is_empty() {
            break;
        }
    }
    let label = |m: &[usize]| {
        let digits: String = m.iter().map(|d| d.to_string()).collect();
        format!("t{digits}")
    };
    let elements: Vec<String> = maps.iter().map(|m| label(m)).collect();
    let identity = maps
        .iter()
        .position(|m| m.iter().enumerate().all(|(x, &y)| x == y))
        .expect("identity map is enumerated");
    let index_of = |m: &Vec<usize>| maps.iter().position(|q| q == m).unwrap();
    let table = maps
        .iter()
        .map(|s| {
            maps.iter()
                .map(|t| {
                    // (s·t)(x) = t(s(x))
                    let composed: Vec<usize> = (0..n).map(|x| t[s[x]]).collect();
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    FiniteMonoid {
        elements,
        identity,
        table,
    }
}

/// Indices of all idempotents `e·e = e`; always contains the identity.
pub fn idempotents(m: &FiniteMonoid) -> Vec<usize> {
    (0..m.size()).filter(|&e| m.mul(e, e) == e).collect()
}

/// The principal right-ideal act `eS` for an idempotent `e`.
///
/// The carrier is `{e·s : s in S}` deduplicated in first-occurrence order;
/// the action is inherited from the multiplication table.
pub fn principal_right_act(m: &Arc<FiniteMonoid>, e: usize) -> Result<FiniteAct, ActError> {
    if e >= m.size() || m.mul(e, e) != e {
        let label = if e < m.size() {
            m.label(e).to_string()
        } else {
            format!("#{e}")
        };
        return Err(ActError::NotIdempotent(label));
    }
    let mut carrier: Vec<usize> = Vec::new();
    for s in 0..m.size() {
        let x = m.mul(e, s);
        if !carrier.contains(&x) {
            carrier.push(x);
        }
    }
    let pos = |x: usize| carrier.iter().position(|&c| c == x).unwrap();
    let labels: Vec<String> = carrier.iter().map(|&x| m.label(x).to_string()).collect();
    let action: Vec<Vec<usize>> = carrier
        .iter()
        .map(|&a| (0..m.size()).map(|s| pos(m.mul(a, s))).collect())
        .collect();
    FiniteAct::from_parts(Arc::clone(m), labels, action)
}

/// Partition of the idempotents where `e` and `f` share a block iff
/// `eS` and `fS` are isomorphic acts.
pub fn idempotent_classes(m: &Arc<FiniteMonoid>) -> Vec<Vec<usize>> {
    let es = idempotents(m);
    let acts: Vec<FiniteAct> = es
        .iter()
        .map(|&e| principal_right_act(m, e).expect("idempotent by construction"))
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<usize> = Vec::new(); // index into `es` of each block's first member
    for (i, &e) in es.iter().enumerate() {
        let found = reps.iter().position(|&r| {
            crate::act::find_isomorphism(&acts[r], &acts[i])
                .expect("same monoid")
                .is_some()
        });
        match found {
            Some(b) => blocks[b].push(e),
            None => {
                reps.push(i);
                blocks.push(vec![e]);
            }
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::parse_json;

    fn load(text: &str) -> Result<FiniteMonoid, ActError> {
        load_monoid(&parse_json(text).unwrap())
    }

    #[test]
    fn trivial_monoid_loads() {
        let m = load(r#"{"elements":["1"],"identity":"1","table":[["1"]]}"#).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.identity(), 0);
    }

    #[test]
    fn z2_loads() {
        let m = load(
            r#"{"elements":["1","g"],"identity":"1","table":[["1","g"],["g","1"]]}"#,
        )
        .unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.mul(1, 1), 0);
    }

    #[test]
    fn non_associative_table_rejected_with_triple() {
        // Brute-force a 3-element completion with valid identity row/column
        // that breaks associativity, then assert rejection names a triple.
        let labels = ["1", "a", "b"];
        let mut found = false;
        'outer: for bits in 0..81u32 {
            // free entries: a·a, a·b, b·a, b·b in {0,1,2}
            let mut v = bits;
            let mut free = [0usize; 4];
            for f in &mut free {
                *f = (v % 3) as usize;
                v /= 3;
            }
            let idx = [[0, 1, 2], [1, free[0], free[1]], [2, free[2], free[3]]];
            let doc = crate::doc::MonoidDoc {
                elements: labels.iter().map(|s| s.to_string()).collect(),
                identity: "1".into(),
                table: idx
                    .iter()
                    .map(|row| row.iter().map(|&k| labels[k].to_string()).collect())
                    .collect(),
            };
            match load_monoid(&doc) {
                Ok(_) => {}
                Err(ActError::NonAssociative { .. }) => {
                    found = true;
                    break 'outer;
                }
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
        assert!(found, "some 3x3 completion must be non-associative");
    }

    #[test]
    fn wrong_identity_rejected() {
        // g is declared identity but does not act as one.
        let err = load(
            r#"{"elements":["1","g"],"identity":"g","table":[["1","g"],["g","1"]]}"#,
        )
        .unwrap_err();
        assert_eq!(err, ActError::MissingIdentity("g".into()));
    }

    #[test]
    fn unknown_label_rejected() {
        let err = load(r#"{"elements":["1"],"identity":"1","table":[["x"]]}"#).unwrap_err();
        assert_eq!(err, ActError::UnknownLabel("x".into()));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = load(r#"{"elements":["1","1"],"identity":"1","table":[["1","1"],["1","1"]]}"#)
            .unwrap_err();
        assert!(matches!(err, ActError::MalformedDocument(_)));
    }

    #[test]
    fn builtin_trivial_and_cyclic() {
        assert_eq!(builtin_monoid("trivial").unwrap().size(), 1);
        let z3 = builtin_monoid("cyclic_group(3)").unwrap();
        assert_eq!(z3.size(), 3);
        // every element invertible: each row is a permutation hitting identity
        for s in 0..3 {
            assert!((0..3).any(|t| z3.mul(s, t) == z3.identity()));
        }
        assert!(builtin_monoid("cyclic_group(0)").is_err());
        assert!(builtin_monoid("full_transformation(4)").is_err());
        assert!(builtin_monoid("nonsense").is_err());
    }

    #[test]
    fn full_transformation_2_matches_composition() {
        let t2 = builtin_monoid("full_transformation(2)").unwrap();
        assert_eq!(t2.size(), 4);
        // Independently recompute the table from map composition.
        let maps = [[0, 0], [0, 1], [1, 0], [1, 1]];
        let idx = |m: [usize; 2]| maps.iter().position(|&q| q == m).unwrap();
        for (si, s) in maps.iter().enumerate() {
            for (ti, t) in maps.iter().enumerate() {
                let composed = [t[s[0]], t[s[1]]];
                assert_eq!(t2.mul(si, ti), idx(composed), "s={si} t={ti}");
            }
        }
        assert_eq!(t2.label(t2.identity()), "t01");
        assert!(t2.check().is_ok());
    }

    #[test]
    fn idempotents_examples() {
        let m = builtin_monoid("trivial").unwrap();
        assert_eq!(idempotents(&m), vec![0]);
        let z2 = builtin_monoid("cyclic_group(2)").unwrap();
        assert_eq!(idempotents(&z2), vec![0]);
        let t2 = builtin_monoid("full_transformation(2)").unwrap();
        let es = idempotents(&t2);
        let labels: Vec<&str> = es.iter().map(|&e| t2.label(e)).collect();
        assert_eq!(labels, vec!["t00", "t01", "t11"]);
        assert!(es.contains(&t2.identity()));
    }

    #[test]
    fn principal_right_act_of_identity_is_regular() {
        let m = Arc::new(builtin_monoid("full_transformation(2)").unwrap());
        let act = principal_right_act(&m, m.identity()).unwrap();
        assert_eq!(act.size(), m.size());
        assert!(act.check().is_ok());
    }

    #[test]
    fn principal_right_act_of_constant_map() {
        let m = Arc::new(builtin_monoid("full_transformation(2)").unwrap());
        let c0 = m.index_of("t00").unwrap();
        let act = principal_right_act(&m, c0).unwrap();
        // carrier is the closure of {c0·s}: the two constant maps
        assert_eq!(act.labels(), &["t00".to_string(), "t11".to_string()]);
        assert!(act.check().is_ok());
        // carrier stays inside M and is closed under the action
        for a in 0..act.size() {
            for s in 0..m.size() {
                assert!(act.apply(a, s) < act.size());
            }
        }
    }

    #[test]
    fn principal_right_act_rejects_non_idempotent() {
        let z2 = Arc::new(builtin_monoid("cyclic_group(2)").unwrap());
        let err = principal_right_act(&z2, 1).unwrap_err();
        assert_eq!(err, ActError::NotIdempotent("g".into()));
    }

    #[test]
    fn idempotent_classes_partition() {
        let m = Arc::new(builtin_monoid("trivial").unwrap());
        assert_eq!(idempotent_classes(&m), vec![vec![0]]);
        let z3 = Arc::new(builtin_monoid("cyclic_group(3)").unwrap());
        assert_eq!(idempotent_classes(&z3), vec![vec![0]]);
    }

    #[test]
    fn idempotent_classes_t2_constants_collapse() {
        let t2 = Arc::new(builtin_monoid("full_transformation(2)").unwrap());
        let blocks = idempotent_classes(&t2);
        let labels: Vec<Vec<&str>> = blocks
            .iter()
            .map(|b| b.iter().map(|&e| t2.label(e)).collect())
            .collect();
        // identity generates the regular act; both constants generate the
        // same two-element act of constants
        assert_eq!(labels, vec![vec!["t00", "t11"], vec!["t01"]]);
        // cross-check with an all-bijections isomorphism oracle
        let es = idempotents(&t2);
        for &e in &es {
            for &f in &es {
                let a = principal_right_act(&t2, e).unwrap();
                let b = principal_right_act(&t2, f).unwrap();
                let same_block = blocks.iter().any(|bl| bl.contains(&e) && bl.contains(&f));
                let iso = crate::act::find_isomorphism(&a, &b).unwrap().is_some();
                assert_eq!(same_block, iso, "e={e} f={f}");
            }
        }
    }
}
