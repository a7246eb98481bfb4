//! Finite groups given by multiplication tables, with subgroups, double
//! cosets and permutation actions.
//!
//! Element `0` is always the identity. Tables whose identity sits elsewhere
//! are re-indexed by swapping it into position `0` when validated.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is empty or not square")]
    NotSquare,
    #[error("table entry ({row},{col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("subset is not a subgroup: {reason}")]
    NotSubgroup { reason: String },
    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },
    #[error("invalid group action: {reason}")]
    InvalidAction { reason: String },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("malformed group description: {0}")]
    Format(String),
}

impl GroupError {
    pub fn name(&self) -> &'static str {
        match self {
            GroupError::NotSquare => "NotSquare",
            GroupError::EntryOutOfRange { .. } => "EntryOutOfRange",
            GroupError::NoIdentity => "NoIdentity",
            GroupError::NotAssociative { .. } => "NotAssociative",
            GroupError::NoInverse { .. } => "NoInverse",
            GroupError::ElementOutOfRange { .. } => "ElementOutOfRange",
            GroupError::NotSubgroup { .. } => "NotSubgroup",
            GroupError::InvalidPermutation { .. } => "InvalidPermutation",
            GroupError::InvalidAction { .. } => "InvalidAction",
            GroupError::NotAbelian => "NotAbelian",
            GroupError::Format(_) => "SchemaError",
        }
    }
}

/// A finite group stored as its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a multiplication table (`table[i][j]` is the index of
    /// `gᵢ·gⱼ`) and returns the group in canonical form.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_with_labels(table, None)
    }

    pub fn from_table_with_labels(
        mut table: Vec<Vec<usize>>,
        mut labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotSquare);
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(GroupError::Format(format!(
                    "{} labels for a table of order {n}",
                    l.len()
                )));
            }
        }
        for (row, r) in table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value });
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or(GroupError::NoIdentity)?;
        if e != 0 {
            let swap = |x: usize| match x {
                0 => e,
                x if x == e => 0,
                x => x,
            };
            let old = table.clone();
            for i in 0..n {
                for j in 0..n {
                    table[swap(i)][swap(j)] = swap(old[i][j]);
                }
            }
            if let Some(l) = labels.as_mut() {
                l.swap(0, e);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == 0 && table[h][g] == 0)
                .ok_or(GroupError::NoInverse { element: g })?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { table, inverse, labels })
    }

    /// Cyclic group `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic table is a group")
    }

    /// `Z/d₁ × … × Z/d_k` indexed in mixed radix, first factor slowest,
    /// matching [`AbelianGroup::elements`].
    pub fn abelian(orders: &[u64]) -> Self {
        let mut g = FiniteGroup::cyclic(1);
        for &d in orders {
            g = g.product(&FiniteGroup::cyclic(d as usize));
        }
        g
    }

    pub fn from_abelian(group: &AbelianGroup) -> Self {
        assert!(group.is_finite());
        FiniteGroup::abelian(&group.invariant_factors)
    }

    /// Direct product; element `(a, b)` has index `a·|other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let mut table = vec![vec![0; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        table[a1 * m + b1][a2 * m + b2] =
                            self.mul(a1, a2) * m + other.mul(b1, b2);
                    }
                }
            }
        }
        FiniteGroup::from_table(table).expect("product of groups is a group")
    }

    /// Symmetric group on `degree` points as a permutation group.
    pub fn symmetric(degree: usize) -> PermutationGroup {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut t: Vec<usize> = (0..degree).collect();
            t.swap(0, 1);
            gens.push(t);
            let c: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            gens.push(c);
        }
        PermutationGroup::generate(degree, &gens).expect("valid generators")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn check_element(&self, g: usize) -> Result<(), GroupError> {
        if g < self.order() {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange { element: g, order: self.order() })
        }
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Abelian invariants, read off from the number of elements killed by
    /// each prime power.
    pub fn abelian_invariants(&self) -> Result<AbelianGroup, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let n = self.order() as u64;
        let orders: Vec<u64> = (0..self.order()).map(|g| self.element_order(g) as u64).collect();
        let mut cyclic_orders = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                while m % p == 0 {
                    m /= p;
                }
                // s_k = log_p #{g : g^(p^k) = 1}
                let mut s = vec![0u32];
                let mut pk = 1u64;
                loop {
                    pk *= p;
                    let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
                    let sk = count.ilog(p);
                    if sk == *s.last().unwrap() {
                        break;
                    }
                    s.push(sk);
                }
                // parts with exponent ≥ k number s_k − s_{k−1}
                let kmax = s.len() - 1;
                for k in 1..=kmax {
                    let at_least_k = s[k] - s[k - 1];
                    let at_least_next = if k < kmax { s[k + 1] - s[k] } else { 0 };
                    for _ in 0..(at_least_k - at_least_next) {
                        cyclic_orders.push(p.pow(k as u32));
                    }
                }
            }
            p += 1;
        }
        Ok(AbelianGroup::finite(&cyclic_orders))
    }

    /// Parses either JSON group format (table or permutation generators).
    pub fn from_json(text: &str) -> Result<FiniteGroup, GroupError> {
        let input: GroupInput =
            serde_json::from_str(text).map_err(|e| GroupError::Format(e.to_string()))?;
        input.build()
    }

    pub fn to_input(&self) -> GroupInput {
        GroupInput::Table {
            order: self.order(),
            table: self.table.clone(),
            labels: self.labels.clone(),
        }
    }
}

/// JSON group descriptions.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupInput {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Permutations {
        degree: usize,
        /// Each generator is a list of cycles.
        generators: Vec<Vec<Vec<usize>>>,
    },
}

impl GroupInput {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupInput::Table { order, table, labels } => {
                if *order != table.len() {
                    return Err(GroupError::Format(format!(
                        "order {order} does not match table of size {}",
                        table.len()
                    )));
                }
                FiniteGroup::from_table_with_labels(table.clone(), labels.clone())
            }
            GroupInput::Permutations { degree, generators } => {
                Ok(PermutationGroup::from_cycles(*degree, generators)?.group)
            }
        }
    }
}

/// A permutation group expanded to a table, remembering the permutations.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Vec<usize>>,
}

impl PermutationGroup {
    /// Closes the generators (given as image arrays) under composition.
    /// Elements are sorted lexicographically by image array, which puts the
    /// identity first.
    pub fn generate(degree: usize, gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        for g in gens {
            check_permutation(degree, g)?;
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q = compose(g, &p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let perms: Vec<Vec<usize>> = seen.into_iter().collect();
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        let group = FiniteGroup::from_table(table)?;
        Ok(PermutationGroup { group, perms })
    }

    pub fn from_cycles(degree: usize, gens: &[Vec<Vec<usize>>]) -> Result<Self, GroupError> {
        let images = gens
            .iter()
            .map(|cycles| cycles_to_images(degree, cycles))
            .collect::<Result<Vec<_>, _>>()?;
        Self::generate(degree, &images)
    }

    pub fn index_of(&self, perm: &[usize]) -> Option<usize> {
        self.perms.iter().position(|p| p == perm)
    }

    /// The defining action on `{0, …, degree−1}`.
    pub fn natural_action(&self) -> GroupAction {
        GroupAction {
            set_size: self.perms.first().map_or(0, Vec::len),
            images: self.perms.clone(),
        }
    }
}

/// `(a ∘ b)(x) = a(b(x))`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn check_permutation(degree: usize, p: &[usize]) -> Result<(), GroupError> {
    if p.len() != degree {
        return Err(GroupError::InvalidPermutation {
            reason: format!("length {} for degree {degree}", p.len()),
        });
    }
    let mut hit = vec![false; degree];
    for &x in p {
        if x >= degree || hit[x] {
            return Err(GroupError::InvalidPermutation {
                reason: format!("{p:?} is not a bijection of 0..{degree}"),
            });
        }
        hit[x] = true;
    }
    Ok(())
}

fn cycles_to_images(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut moved = vec![false; degree];
    for cycle in cycles {
        for (k, &x) in cycle.iter().enumerate() {
            if x >= degree || moved[x] {
                return Err(GroupError::InvalidPermutation {
                    reason: format!("cycle {cycle:?} repeats or exceeds degree {degree}"),
                });
            }
            moved[x] = true;
            images[x] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(images)
}

/// A subgroup, stored as its sorted element list. The parent group is passed
/// to every operation rather than stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        for &g in &set {
            group.check_element(g)?;
        }
        if !set.contains(&0) {
            return Err(GroupError::NotSubgroup { reason: "identity missing".into() });
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(GroupError::NotSubgroup {
                    reason: format!("inverse of {a} missing"),
                });
            }
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(GroupError::NotSubgroup {
                        reason: format!("product {a}*{b} missing"),
                    });
                }
            }
        }
        Ok(Subgroup { elements: set.into_iter().collect() })
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { elements: (0..group.order()).collect() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

/// Smallest subgroup containing `gens`.
pub fn generated_subgroup(group: &FiniteGroup, gens: &[usize]) -> Result<Subgroup, GroupError> {
    let mut set = BTreeSet::from([0]);
    let mut queue = VecDeque::from([0]);
    for &g in gens {
        group.check_element(g)?;
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    // finite group: closure under right multiplication by generators is a subgroup
    Ok(Subgroup { elements: set.into_iter().collect() })
}

/// `{g₁·g·g₂ : g₁, g₂ ∈ sub}` as a sorted set.
pub fn double_coset(
    group: &FiniteGroup,
    sub: &Subgroup,
    g: usize,
) -> Result<Vec<usize>, GroupError> {
    group.check_element(g)?;
    let mut set = BTreeSet::new();
    for &a in sub.elements() {
        let ag = group.mul(a, g);
        for &b in sub.elements() {
            set.insert(group.mul(ag, b));
        }
    }
    Ok(set.into_iter().collect())
}

/// Result of forming `⋃ G·ρ·G` over a list of representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionClosure {
    pub elements: Vec<usize>,
    pub closed: bool,
    /// Set when `closed`.
    pub subgroup: Option<Subgroup>,
    /// A pair `(a, b)` with `a·b` (or `a⁻¹` when `a == b` and the inverse is
    /// missing) outside the union, when not closed.
    pub witness: Option<(usize, usize)>,
}

pub fn double_coset_union_closure(
    group: &FiniteGroup,
    sub: &Subgroup,
    reps: &[usize],
) -> Result<UnionClosure, GroupError> {
    let mut set = BTreeSet::new();
    for &r in reps {
        set.extend(double_coset(group, sub, r)?);
    }
    let mut witness = None;
    'outer: for &a in &set {
        if !set.contains(&group.inv(a)) {
            witness = Some((a, a));
            break;
        }
        for &b in &set {
            if !set.contains(&group.mul(a, b)) {
                witness = Some((a, b));
                break 'outer;
            }
        }
    }
    let elements: Vec<usize> = set.into_iter().collect();
    let closed = witness.is_none() && elements.contains(&0);
    let subgroup = closed.then(|| Subgroup { elements: elements.clone() });
    Ok(UnionClosure { elements, closed, subgroup, witness })
}

/// An action of a group on `{0, …, set_size−1}`; `images[g][x]` is `g·x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    pub set_size: usize,
    pub images: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn validate(&self, group: &FiniteGroup) -> Result<(), GroupError> {
        if self.images.len() != group.order() {
            return Err(GroupError::InvalidAction {
                reason: format!(
                    "{} images for a group of order {}",
                    self.images.len(),
                    group.order()
                ),
            });
        }
        for p in &self.images {
            check_permutation(self.set_size, p)
                .map_err(|e| GroupError::InvalidAction { reason: e.to_string() })?;
        }
        if self.images[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(GroupError::InvalidAction {
                reason: "identity does not act trivially".into(),
            });
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if self.images[group.mul(a, b)] != compose(&self.images[a], &self.images[b]) {
                    return Err(GroupError::InvalidAction {
                        reason: format!("action of {a}*{b} is not the composite"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.images[g][x]
    }

    pub fn is_transitive(&self, group: &FiniteGroup) -> bool {
        orbits(self, &Subgroup::whole(group)).len() <= 1
    }

    pub fn stabilizer(&self, group: &FiniteGroup, point: usize) -> Subgroup {
        let elements = (0..group.order()).filter(|&g| self.apply(g, point) == point).collect();
        Subgroup { elements }
    }
}

/// Orbits of the restricted action, each sorted, listed by smallest member.
pub fn orbits(action: &GroupAction, restrict_to: &Subgroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; action.set_size];
    let mut out = Vec::new();
    for start in 0..action.set_size {
        if seen[start] {
            continue;
        }
        let orbit: BTreeSet<usize> =
            restrict_to.elements().iter().map(|&g| action.apply(g, start)).collect();
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermutationGroup {
        FiniteGroup::symmetric(3)
    }

    #[test]
    fn validate_small_tables() {
        assert_eq!(FiniteGroup::from_table(vec![vec![0]]).unwrap().order(), 1);
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.inv(1), 1);
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse { element: 1 })
        );
    }

    #[test]
    fn validation_errors() {
        assert_eq!(FiniteGroup::from_table(vec![]), Err(GroupError::NotSquare));
        assert_eq!(FiniteGroup::from_table(vec![vec![0, 1]]), Err(GroupError::NotSquare));
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { .. })
        ));
        assert_eq!(
            FiniteGroup::from_table(vec![vec![1, 0], vec![0, 0]]),
            Err(GroupError::NoIdentity)
        );
        // identity is 0 but (1*1)*2 = 1*2 = 0 while 1*(1*2) = 1*0 = 1
        let t = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 2]];
        assert!(matches!(
            FiniteGroup::from_table(t),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn identity_is_reindexed_to_zero() {
        // Z/2 with identity at index 1
        let g = FiniteGroup::from_table_with_labels(
            vec![vec![1, 0], vec![0, 1]],
            Some(vec!["a".into(), "e".into()]),
        )
        .unwrap();
        assert_eq!(g.table(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(g.label(0), "e");
    }

    #[test]
    fn permutation_input() {
        let g = FiniteGroup::from_json(r#"{"degree": 3, "generators": [[[0,1]], [[0,1,2]]]}"#)
            .unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let t = FiniteGroup::from_json(r#"{"order": 2, "table": [[0,1],[1,0]], "labels": ["e","s"]}"#)
            .unwrap();
        assert_eq!(t.label(1), "s");
        assert!(FiniteGroup::from_json(r#"{"degree": 2, "generators": [[[0,5]]]}"#).is_err());
    }

    #[test]
    fn double_coset_examples() {
        let s3 = s3();
        let g = &s3.group;
        let t = s3.index_of(&[1, 0, 2]).unwrap();
        let c = s3.index_of(&[1, 2, 0]).unwrap();
        let h = Subgroup::new(g, &[0, t]).unwrap();
        assert_eq!(double_coset(g, &Subgroup::trivial(), c).unwrap(), vec![c]);
        assert_eq!(double_coset(g, &Subgroup::whole(g), c).unwrap().len(), 6);
        assert_eq!(double_coset(g, &h, c).unwrap().len(), 4);
        assert!(matches!(
            double_coset(g, &h, 9),
            Err(GroupError::ElementOutOfRange { element: 9, order: 6 })
        ));
    }

    #[test]
    fn union_closure_examples() {
        let s3 = s3();
        let g = &s3.group;
        let t = s3.index_of(&[1, 0, 2]).unwrap();
        let c = s3.index_of(&[1, 2, 0]).unwrap();
        let h = Subgroup::new(g, &[0, t]).unwrap();
        let r = double_coset_union_closure(g, &h, &[0]).unwrap();
        assert!(r.closed);
        assert_eq!(r.elements, h.elements());
        let r = double_coset_union_closure(g, &h, &[c]).unwrap();
        assert!(!r.closed);
        assert_eq!(r.elements.len(), 4);
        let r = double_coset_union_closure(g, &h, &[0, c]).unwrap();
        assert!(r.closed);
        assert_eq!(r.elements.len(), 6);

        let z4 = FiniteGroup::cyclic(4);
        let r = double_coset_union_closure(&z4, &Subgroup::trivial(), &[0, 1]).unwrap();
        assert_eq!(r.elements, vec![0, 1]);
        assert!(!r.closed);
        assert!(r.subgroup.is_none());
        let (a, b) = r.witness.unwrap();
        assert!(!r.elements.contains(&z4.mul(a, b)) || !r.elements.contains(&z4.inv(a)));
    }

    #[test]
    fn orbit_examples() {
        let s3 = s3();
        let g = &s3.group;
        let act = s3.natural_action();
        act.validate(g).unwrap();
        assert_eq!(orbits(&act, &Subgroup::trivial()), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(orbits(&act, &Subgroup::whole(g)), vec![vec![0, 1, 2]]);
        let stab = act.stabilizer(g, 0);
        assert_eq!(orbits(&act, &stab), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn generated_subgroup_examples() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(generated_subgroup(&z4, &[0]).unwrap(), Subgroup::trivial());
        assert_eq!(generated_subgroup(&z4, &[2]).unwrap().elements(), &[0, 2]);
        let s3 = s3();
        let t = s3.index_of(&[1, 0, 2]).unwrap();
        let c = s3.index_of(&[1, 2, 0]).unwrap();
        assert_eq!(generated_subgroup(&s3.group, &[t, c]).unwrap().order(), 6);
    }

    #[test]
    fn abelian_invariants_of_products() {
        assert_eq!(
            FiniteGroup::abelian(&[2, 2]).abelian_invariants().unwrap(),
            AbelianGroup::elementary(2, 2)
        );
        assert_eq!(
            FiniteGroup::abelian(&[2, 3]).abelian_invariants().unwrap(),
            AbelianGroup::cyclic(6)
        );
        assert_eq!(
            FiniteGroup::abelian(&[2, 4, 4]).abelian_invariants().unwrap(),
            AbelianGroup::finite(&[2, 4, 4])
        );
        assert_eq!(FiniteGroup::cyclic(1).abelian_invariants().unwrap(), AbelianGroup::trivial());
        assert_eq!(s3().group.abelian_invariants(), Err(GroupError::NotAbelian));
    }

    #[test]
    fn bad_action_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let bad = GroupAction { set_size: 3, images: vec![vec![0, 1, 2], vec![1, 2, 0]] };
        assert!(bad.validate(&z2).is_err());
    }
}
