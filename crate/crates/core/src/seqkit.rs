//! Exact sequences of finite abelian groups, the Brauer–Picard order chase
//! and graded extensions of `Vec_R`.
//!
//! The sequence studied here is
//!
//! ```text
//! 0 → Inv(Z(C)) → Aut_⊗(Id_C) → Br(K) → BrPic(C) → Aut_br(Z(C)) → H³(K; G_m)
//! ```
//!
//! preceded by the identity `K^× → K^×`, which is recorded but not computed.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;
use crate::cohomology::{
    cocycle_representatives, cohomology, pw_sign_identity_check, CohomologyError, GModule,
};
use crate::fieldtable::{postnikov_k4_trivial, BaseField};
use crate::fusion::{validate_fusion_ring, EndLabel, FusionError, FusionRingData};
use crate::groups::FiniteGroup;

/// Bound on node orders for element enumeration.
pub const ENUMERATION_BOUND: u64 = 10_000;

/// Symbolic head of the long sequence, printed in reports.
pub const SYMBOLIC_PREFIX: &str = "K^x -> K^x (identity; not computed)";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("malformed map {index}: {reason}")]
    MalformedMap { index: usize, reason: String },
    #[error("node {0} is unknown")]
    UnknownNode(usize),
    #[error("node {index} has order {order}, above the enumeration bound")]
    TooLarge { index: usize, order: u64 },
    #[error("{0}")]
    NotDivisible(String),
    #[error("H^3(K; G_m) may be nonzero: |BrPic| lies between {min} and {max}")]
    H3Obstruction { min: u64, max: u64 },
    #[error("the k4 Postnikov class is not known over {0}")]
    UnknownPostnikovClass(String),
    #[error("the sign identity gating the count fails")]
    SignIdentityFailure,
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("malformed sequence: {0}")]
    Schema(String),
}

impl SeqError {
    pub fn name(&self) -> &'static str {
        match self {
            SeqError::MalformedMap { .. } => "MalformedMap",
            SeqError::UnknownNode(_) => "UnknownNode",
            SeqError::TooLarge { .. } => "TooLarge",
            SeqError::NotDivisible(_) => "NotDivisible",
            SeqError::H3Obstruction { .. } => "H3Obstruction",
            SeqError::UnknownPostnikovClass(_) => "UnknownPostnikovClass",
            SeqError::SignIdentityFailure => "SignIdentityFailure",
            SeqError::Cohomology(e) => e.name(),
            SeqError::Fusion(e) => e.name(),
            SeqError::Schema(_) => "SchemaError",
        }
    }
}

/// A node: the orders of its cyclic generators, or unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Node {
    Known(Vec<u64>),
    Unknown(UnknownTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnknownTag {
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl Node {
    pub fn known(orders: &[u64]) -> Self {
        Node::Known(orders.to_vec())
    }

    pub fn unknown() -> Self {
        Node::Unknown(UnknownTag::Unknown)
    }

    pub fn orders(&self) -> Option<&[u64]> {
        match self {
            Node::Known(o) => Some(o),
            Node::Unknown(_) => None,
        }
    }

    pub fn group(&self) -> Option<AbelianGroup> {
        self.orders().map(AbelianGroup::finite)
    }
}

/// A chain of finite abelian groups with homomorphisms between consecutive
/// known nodes. `maps[i]` goes from node `i` to node `i+1`; its column `j`
/// is the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceInstance {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub nodes: Vec<Node>,
    pub maps: Vec<Option<Vec<Vec<i64>>>>,
    /// The sequence starts with `0 →`, so the first map must be injective.
    #[serde(default)]
    pub left_exact_start: bool,
    /// The sequence ends with `→ 0`, so the last map must be surjective.
    #[serde(default)]
    pub surjective_end: bool,
}

impl ExactSequenceInstance {
    pub fn from_json(text: &str) -> Result<Self, SeqError> {
        serde_json::from_str(text).map_err(|e| SeqError::Schema(e.to_string()))
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.get(i).cloned().unwrap_or_else(|| format!("node {i}"))
    }
}

/// Exactness at one node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub index: usize,
    pub label: String,
    pub exact: bool,
    pub image_order: u64,
    pub kernel_order: u64,
    /// An element in exactly one of image and kernel.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub prefix: String,
    pub nodes: Vec<NodeReport>,
    pub exact: bool,
}

impl ExactnessReport {
    pub fn failing_labels(&self) -> Vec<String> {
        self.nodes.iter().filter(|n| !n.exact).map(|n| n.label.clone()).collect()
    }
}

struct Hom<'a> {
    source: &'a [u64],
    target: &'a [u64],
    matrix: &'a [Vec<i64>],
}

impl Hom<'_> {
    fn apply(&self, x: &[u64]) -> Vec<u64> {
        (0..self.target.len())
            .map(|i| {
                let d = self.target[i] as i128;
                let s: i128 = (0..self.source.len())
                    .map(|j| self.matrix[i][j] as i128 * x[j] as i128)
                    .sum();
                s.rem_euclid(d) as u64
            })
            .collect()
    }

    fn check(&self, index: usize) -> Result<(), SeqError> {
        let bad = |reason: String| Err(SeqError::MalformedMap { index, reason });
        if self.matrix.len() != self.target.len()
            || self.matrix.iter().any(|row| row.len() != self.source.len())
        {
            return bad(format!(
                "expected a {}x{} matrix",
                self.target.len(),
                self.source.len()
            ));
        }
        for (j, &d) in self.source.iter().enumerate() {
            for (i, &t) in self.target.iter().enumerate() {
                if (d as i128 * self.matrix[i][j] as i128).rem_euclid(t as i128) != 0 {
                    return bad(format!("generator {j} of order {d} cannot map to {}", self.matrix[i][j]));
                }
            }
        }
        Ok(())
    }
}

fn all_elements(orders: &[u64]) -> Vec<Vec<u64>> {
    AbelianGroup { free_rank: 0, invariant_factors: orders.to_vec() }.elements()
}

fn node_orders(seq: &ExactSequenceInstance, i: usize) -> Result<&[u64], SeqError> {
    let orders = seq.nodes[i].orders().ok_or(SeqError::UnknownNode(i))?;
    if orders.iter().any(|&d| d == 0) {
        return Err(SeqError::Schema(format!("node {i} has a free summand")));
    }
    let order: u64 = orders.iter().product();
    if order > ENUMERATION_BOUND {
        return Err(SeqError::TooLarge { index: i, order });
    }
    Ok(orders)
}

/// Checks `im = ker` at every interior node (and injectivity / surjectivity
/// at the ends when flagged) by enumerating elements.
pub fn verify_exactness(seq: &ExactSequenceInstance) -> Result<ExactnessReport, SeqError> {
    let k = seq.nodes.len();
    if k < 2 || seq.maps.len() != k - 1 {
        return Err(SeqError::Schema(format!("{k} nodes need {} maps", k.saturating_sub(1))));
    }
    let orders: Vec<&[u64]> = (0..k).map(|i| node_orders(seq, i)).collect::<Result<_, _>>()?;
    let mut homs = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let m = seq.maps[i]
            .as_ref()
            .ok_or_else(|| SeqError::MalformedMap { index: i, reason: "missing".into() })?;
        let h = Hom { source: orders[i], target: orders[i + 1], matrix: m };
        h.check(i)?;
        homs.push(h);
    }
    let zero = |i: usize| vec![0u64; orders[i].len()];
    let mut reports = Vec::new();
    for i in 0..k {
        let image: Option<BTreeSet<Vec<u64>>> = match i {
            0 if seq.left_exact_start => Some([zero(0)].into()),
            0 => None,
            _ => Some(all_elements(orders[i - 1]).iter().map(|x| homs[i - 1].apply(x)).collect()),
        };
        let kernel: Option<BTreeSet<Vec<u64>>> = if i + 1 < k {
            Some(
                all_elements(orders[i])
                    .into_iter()
                    .filter(|x| homs[i].apply(x).iter().all(|&c| c == 0))
                    .collect(),
            )
        } else if seq.surjective_end {
            Some(all_elements(orders[i]).into_iter().collect())
        } else {
            None
        };
        let (Some(image), Some(kernel)) = (image, kernel) else { continue };
        let witness = image.symmetric_difference(&kernel).next().cloned();
        reports.push(NodeReport {
            index: i,
            label: seq.label(i),
            exact: witness.is_none(),
            image_order: image.len() as u64,
            kernel_order: kernel.len() as u64,
            witness,
        });
    }
    let exact = reports.iter().all(|r| r.exact);
    Ok(ExactnessReport { prefix: SYMBOLIC_PREFIX.into(), nodes: reports, exact })
}

/// Order and, when forced, isomorphism type of `BrPic`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrPicSolution {
    pub order: u64,
    /// `None` when the extension problem leaves the type undetermined.
    pub iso_type: Option<AbelianGroup>,
    /// Order of the image of `Aut_⊗(Id) → Br(K)`.
    pub br_image_order: u64,
    /// Order of the image of `Br(K) → BrPic`.
    pub br_part_order: u64,
}

impl BrPicSolution {
    pub fn iso_type_text(&self) -> String {
        self.iso_type.as_ref().map_or_else(|| "UNDETERMINED".into(), ToString::to_string)
    }
}

/// Order chase through `0 → inv → aut_t → br → BrPic → aut_br → H³`.
pub fn solve_brpic(
    inv: &AbelianGroup,
    aut_t: &AbelianGroup,
    br: &AbelianGroup,
    aut_br: &AbelianGroup,
    h3_trivial: bool,
) -> Result<BrPicSolution, SeqError> {
    let ord = |g: &AbelianGroup, name: &str| {
        g.order().ok_or_else(|| SeqError::NotDivisible(format!("{name} must be finite")))
    };
    let (i, a, b, t) = (ord(inv, "Inv")?, ord(aut_t, "Aut_t")?, ord(br, "Br")?, ord(aut_br, "Aut_br")?);
    if a % i != 0 {
        return Err(SeqError::NotDivisible(format!("|Inv| = {i} does not divide |Aut_t| = {a}")));
    }
    let image = a / i;
    if b % image != 0 {
        return Err(SeqError::NotDivisible(format!(
            "the image of Aut_t in Br has order {image}, which does not divide |Br| = {b}"
        )));
    }
    let br_part = b / image;
    if !h3_trivial {
        return Err(SeqError::H3Obstruction { min: br_part, max: br_part * t });
    }
    let iso_type = if br_part == 1 {
        Some(aut_br.clone())
    } else if t == 1 {
        quotient_type(br, image)
    } else {
        None
    };
    Ok(BrPicSolution { order: br_part * t, iso_type, br_image_order: image, br_part_order: br_part })
}

/// Isomorphism type of `B / I` for a subgroup `I` of order `k`, when that
/// type does not depend on the choice of `I`.
fn quotient_type(b: &AbelianGroup, k: u64) -> Option<AbelianGroup> {
    let n = b.order()?;
    if k == 1 {
        return Some(b.clone());
    }
    if k == n {
        return Some(AbelianGroup::trivial());
    }
    let cyclic = is_cyclic(b);
    if cyclic {
        return Some(AbelianGroup::cyclic(n / k));
    }
    if is_prime(n / k) {
        return Some(AbelianGroup::cyclic(n / k));
    }
    None
}

fn is_cyclic(g: &AbelianGroup) -> bool {
    // elementary divisors: cyclic iff the primes are distinct
    let mut primes = BTreeSet::new();
    g.invariant_factors.iter().all(|&q| primes.insert(smallest_prime(q)))
}

fn smallest_prime(q: u64) -> u64 {
    (2..=q).find(|p| q % p == 0).unwrap_or(q)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime(n) == n
}

/// All homomorphisms between groups given by generator orders, as matrices.
fn homs(source: &[u64], target: &[u64]) -> Vec<Vec<Vec<i64>>> {
    let targets = all_elements(target);
    // admissible images for each source generator
    let choices: Vec<Vec<&Vec<u64>>> = source
        .iter()
        .map(|&d| {
            targets
                .iter()
                .filter(|y| y.iter().zip(target).all(|(&c, &t)| (c * d) % t == 0))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; source.len()];
    loop {
        let m: Vec<Vec<i64>> = (0..target.len())
            .map(|i| (0..source.len()).map(|j| choices[j][pick[j]][i] as i64).collect())
            .collect();
        out.push(m);
        let mut p = source.len();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            pick[p] += 1;
            if pick[p] < choices[p].len() {
                break;
            }
            pick[p] = 0;
        }
    }
}

/// Searches for maps making `0 → inv → aut_t → br → brpic → aut_br → 0`
/// exact. Returns the first instance found.
pub fn realize_sequence(
    inv: &[u64],
    aut_t: &[u64],
    br: &[u64],
    brpic: &[u64],
    aut_br: &[u64],
) -> Option<ExactSequenceInstance> {
    let nodes = [inv, aut_t, br, brpic, aut_br];
    let candidates: Vec<Vec<Vec<Vec<i64>>>> =
        (0..4).map(|i| homs(nodes[i], nodes[i + 1])).collect();
    let mut seq = ExactSequenceInstance {
        labels: ["Inv", "Aut_t", "Br", "BrPic", "Aut_br"].map(String::from).to_vec(),
        nodes: nodes.iter().map(|o| Node::known(o)).collect(),
        maps: vec![None; 4],
        left_exact_start: true,
        surjective_end: true,
    };
    search(&mut seq, &candidates, 0).then_some(seq)
}

fn search(seq: &mut ExactSequenceInstance, candidates: &[Vec<Vec<Vec<i64>>>], depth: usize) -> bool {
    if depth == candidates.len() {
        return verify_exactness(seq).is_ok_and(|r| r.exact);
    }
    for m in &candidates[depth] {
        seq.maps[depth] = Some(m.clone());
        if prefix_exact(seq, depth) && search(seq, candidates, depth + 1) {
            return true;
        }
    }
    seq.maps[depth] = None;
    false
}

/// Exactness at every node whose incoming and outgoing maps are both chosen.
fn prefix_exact(seq: &ExactSequenceInstance, depth: usize) -> bool {
    let mut partial = seq.clone();
    partial.nodes.truncate(depth + 2);
    partial.maps.truncate(depth + 1);
    partial.surjective_end = false;
    verify_exactness(&partial).is_ok_and(|r| r.exact)
}

/// One graded extension of `Vec_R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRecord {
    /// `f(g) ∈ {0, 1}` for each group element.
    pub f: Vec<u8>,
    /// Index of the associator class in `H³(G; Z/2)`.
    pub phi: u64,
    pub fusion: FusionRingData,
}

impl ExtensionRecord {
    pub fn f_is_trivial(&self) -> bool {
        self.f.iter().all(|&x| x == 0)
    }
}

/// Graded extensions of `Vec_K`: pairs `(f, φ)` with `f ∈ Hom(G, Z/2)` and `φ`
/// in the `H³(G; Z/2)`-torsor of associators. Only `K = R` is supported.
pub fn classify_vec_extensions(
    field: &BaseField,
    group: &FiniteGroup,
) -> Result<Vec<ExtensionRecord>, SeqError> {
    if postnikov_k4_trivial(field) != Some(true) {
        return Err(SeqError::UnknownPostnikovClass(field.name()));
    }
    let z2 = GModule::cyclic(group, 2);
    // with trivial action 1-cocycles are homomorphisms and there are no
    // nonzero 1-coboundaries
    let homs = cocycle_representatives(group, &z2, 1)?;
    let h3 = cohomology(group, &z2, 3)
        .order()
        .expect("cohomology of a finite group with finite coefficients is finite");
    let n = group.order();
    let mut out = Vec::new();
    for hom in &homs {
        let f: Vec<u8> = (0..n)
            .map(|g| if g == 0 { 0 } else { hom.value(&[g])[0] as u8 })
            .collect();
        let fusion = graded_fusion(group, &f);
        validate_fusion_ring(&fusion)?;
        for phi in 0..h3 {
            out.push(ExtensionRecord { f: f.clone(), phi, fusion: fusion.clone() });
        }
    }
    Ok(out)
}

pub fn classify_vecr_extensions(group: &FiniteGroup) -> Result<Vec<ExtensionRecord>, SeqError> {
    classify_vec_extensions(&BaseField::Real, group)
}

/// `X_g ⊗ X_h = 4^{f(g)f(h)}·X_{gh}`, `End(X_g) = H` exactly when `f(g) = 1`.
fn graded_fusion(group: &FiniteGroup, f: &[u8]) -> FusionRingData {
    let n = group.order();
    let labels: Vec<String> = (0..n).map(|g| format!("X_{}", group.label(g))).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let ends = f.iter().map(|&x| if x == 1 { EndLabel::H } else { EndLabel::R }).collect();
    let mut rules = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let m = if f[a] == 1 && f[b] == 1 { 4 } else { 1 };
            rules.push((a, b, vec![(group.mul(a, b), m)]));
        }
    }
    FusionRingData::from_rules(BaseField::Real, &refs, ends, (0..n).map(|g| group.inv(g)).collect(), &rules)
}

/// Number of `Z/2`-graded extensions of `Q_-` with the given underlying
/// data: tensorators form an `H²(Z/2; Z/2)`-torsor and, when counted,
/// associators an `H³(Z/2; Z/2)`-torsor. The obstruction vanishes by the
/// sign identity, which is checked first.
pub fn count_qminus_z2_extensions_with(include_associators: bool) -> Result<u64, SeqError> {
    if !pw_sign_identity_check() {
        return Err(SeqError::SignIdentityFailure);
    }
    let g = FiniteGroup::cyclic(2);
    let z2 = GModule::cyclic(&g, 2);
    let h2 = cohomology(&g, &z2, 2).order().unwrap_or(0);
    let h3 = if include_associators { cohomology(&g, &z2, 3).order().unwrap_or(0) } else { 1 };
    Ok(h2 * h3)
}

pub fn count_qminus_z2_extensions() -> Result<u64, SeqError> {
    count_qminus_z2_extensions_with(true)
}

/// Sequence instances of the worked examples.
pub mod instances {
    use super::*;

    fn labels() -> Vec<String> {
        ["Inv", "Aut_t", "Br", "BrPic", "Aut_br"].map(String::from).to_vec()
    }

    /// `Z/2 ↪ (Z/2)² → Z/2 → (Z/2)² → (Z/2)² → 0` for `Q_-`.
    pub fn q_minus() -> ExactSequenceInstance {
        ExactSequenceInstance {
            labels: labels(),
            nodes: vec![
                Node::known(&[2]),
                Node::known(&[2, 2]),
                Node::known(&[2]),
                Node::known(&[2, 2]),
                Node::known(&[2, 2]),
            ],
            maps: vec![
                Some(vec![vec![1], vec![0]]),
                Some(vec![vec![0, 1]]),
                Some(vec![vec![0], vec![0]]),
                Some(vec![vec![1, 0], vec![0, 1]]),
            ],
            left_exact_start: true,
            surjective_end: true,
        }
    }

    /// `Z/2 ≅ Z/2 → Z/2 ↪ Z/2 → 0` for `Q_+`.
    pub fn q_plus() -> ExactSequenceInstance {
        ExactSequenceInstance {
            labels: labels(),
            nodes: vec![
                Node::known(&[2]),
                Node::known(&[2]),
                Node::known(&[2]),
                Node::known(&[2]),
                Node::known(&[]),
            ],
            maps: vec![
                Some(vec![vec![1]]),
                Some(vec![vec![0]]),
                Some(vec![vec![1]]),
                Some(vec![]),
            ],
            left_exact_start: true,
            surjective_end: true,
        }
    }

    /// `q_minus` with `Br → BrPic` replaced by an injection.
    pub fn q_minus_faulty() -> ExactSequenceInstance {
        let mut s = q_minus();
        s.maps[2] = Some(vec![vec![1], vec![0]]);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::instances::*;
    use super::*;

    fn z2() -> AbelianGroup {
        AbelianGroup::cyclic(2)
    }

    fn klein() -> AbelianGroup {
        AbelianGroup::elementary(2, 2)
    }

    #[test]
    fn catalog_sequences() {
        assert!(verify_exactness(&q_minus()).unwrap().exact);
        assert!(verify_exactness(&q_plus()).unwrap().exact);
        let r = verify_exactness(&q_minus_faulty()).unwrap();
        assert!(!r.exact);
        assert!(r.failing_labels().contains(&"BrPic".to_string()));
    }

    #[test]
    fn trivial_sequence() {
        let s = ExactSequenceInstance {
            labels: vec![],
            nodes: vec![Node::known(&[2]), Node::known(&[2]), Node::known(&[])],
            maps: vec![Some(vec![vec![1]]), Some(vec![])],
            left_exact_start: true,
            surjective_end: true,
        };
        assert!(verify_exactness(&s).unwrap().exact);
    }

    #[test]
    fn malformed_maps() {
        let mut s = q_minus();
        s.maps[0] = Some(vec![vec![1]]);
        assert_eq!(verify_exactness(&s).unwrap_err().name(), "MalformedMap");
        // Z/2 → Z/3 sending the generator to 1 is not well defined
        let s = ExactSequenceInstance {
            labels: vec![],
            nodes: vec![Node::known(&[2]), Node::known(&[3])],
            maps: vec![Some(vec![vec![1]])],
            left_exact_start: false,
            surjective_end: false,
        };
        assert_eq!(verify_exactness(&s).unwrap_err().name(), "MalformedMap");
        let mut s = q_minus();
        s.nodes[3] = Node::unknown();
        assert_eq!(verify_exactness(&s).unwrap_err(), SeqError::UnknownNode(3));
    }

    #[test]
    fn brpic_examples() {
        let q_minus = solve_brpic(&z2(), &klein(), &z2(), &klein(), true).unwrap();
        assert_eq!(q_minus.order, 4);
        assert_eq!(q_minus.iso_type, Some(klein()));
        let q_plus = solve_brpic(&z2(), &z2(), &z2(), &AbelianGroup::trivial(), true).unwrap();
        assert_eq!((q_plus.order, q_plus.iso_type), (2, Some(z2())));
        let t = AbelianGroup::trivial();
        let vec_r = solve_brpic(&t, &t, &z2(), &t, true).unwrap();
        assert_eq!(vec_r.order, 2);
        assert_eq!(vec_r.iso_type, Some(z2()));
    }

    #[test]
    fn brpic_errors_and_undetermined() {
        let t = AbelianGroup::trivial();
        assert_eq!(solve_brpic(&AbelianGroup::cyclic(3), &z2(), &z2(), &t, true).unwrap_err().name(), "NotDivisible");
        assert_eq!(
            solve_brpic(&z2(), &klein(), &z2(), &klein(), false).unwrap_err(),
            SeqError::H3Obstruction { min: 1, max: 4 }
        );
        // both parts nontrivial: extension problem
        let s = solve_brpic(&t, &t, &z2(), &z2(), true).unwrap();
        assert_eq!(s.order, 4);
        assert_eq!(s.iso_type, None);
        assert_eq!(s.iso_type_text(), "UNDETERMINED");
        // Br = (Z/2)^2 modulo an order-2 subgroup is Z/2 whichever subgroup
        let s = solve_brpic(&t, &z2(), &klein(), &t, true).unwrap();
        assert_eq!(s.iso_type, Some(z2()));
    }

    #[test]
    fn realizations_exist() {
        let s = realize_sequence(&[2], &[2, 2], &[2], &[2, 2], &[2, 2]).unwrap();
        assert!(verify_exactness(&s).unwrap().exact);
        assert!(realize_sequence(&[2], &[2], &[2], &[2], &[]).is_some());
        // wrong BrPic order cannot be realized
        assert!(realize_sequence(&[2], &[2, 2], &[2], &[2], &[2, 2]).is_none());
    }

    #[test]
    fn vec_r_extensions() {
        let recs = classify_vecr_extensions(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(recs.len(), 4);
        let nontrivial: Vec<_> = recs.iter().filter(|r| !r.f_is_trivial()).collect();
        assert_eq!(nontrivial.len(), 2);
        for r in nontrivial {
            assert_eq!(r.fusion.n[1][1], vec![4, 0]);
            assert_eq!(r.fusion.ends, vec![EndLabel::R, EndLabel::H]);
        }
        assert_eq!(classify_vecr_extensions(&FiniteGroup::cyclic(3)).unwrap().len(), 1);
        assert_eq!(classify_vecr_extensions(&FiniteGroup::cyclic(1)).unwrap().len(), 1);
        // |Hom((Z/2)^2, Z/2)| · |H^3((Z/2)^2; Z/2)| = 4 · 16
        assert_eq!(classify_vecr_extensions(&FiniteGroup::abelian(&[2, 2])).unwrap().len(), 64);
        assert_eq!(
            classify_vec_extensions(&BaseField::Complex, &FiniteGroup::cyclic(2)).unwrap_err().name(),
            "UnknownPostnikovClass"
        );
    }

    #[test]
    fn qminus_count() {
        assert_eq!(count_qminus_z2_extensions().unwrap(), 4);
        assert_eq!(count_qminus_z2_extensions_with(false).unwrap(), 2);
    }

    #[test]
    fn json_round_trip() {
        let s = q_minus();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(ExactSequenceInstance::from_json(&text).unwrap(), s);
        let u = ExactSequenceInstance::from_json(r#"{"nodes": [[2], "UNKNOWN"], "maps": [null]}"#).unwrap();
        assert_eq!(u.nodes[1], Node::unknown());
    }
}
