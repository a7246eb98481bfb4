//! Splitting-field scenarios and the double-coset faithfulness criterion.
//!
//! A scenario has an abstract layer (the group `Γ`, its action on the roots
//! `θ₀, …, θₙ₋₁` of `f` and the distinguished root `θ = θ_theta`) and an
//! optional concrete layer (the field `E = Q[x]/(m)`, the root values and
//! `f`). Every decision procedure runs on the abstract layer; the concrete
//! layer is used to build and check the interpolation idempotents.
//!
//! Orbit and factor labels are 0-based throughout.

mod numberfield;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use numberfield::{EPoly, NumberField, NumberFieldElement};

use crate::groups::{
    double_coset_union_closure, orbits, FiniteGroup, GroupAction, GroupError, GroupInput,
    PermutationGroup, Subgroup,
};
use crate::poly::QPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("root action is not transitive")]
    NotTransitive,
    #[error("degenerate modulus: {0}")]
    DegenerateModulus(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("root {index} is not a root of f")]
    NotARoot { index: usize },
    #[error("action of element {element} is not a field automorphism: {reason}")]
    InconsistentAction { element: usize, reason: String },
    #[error("roots {i} and {k} coincide")]
    RepeatedRoot { i: usize, k: usize },
    #[error("coefficient {degree} of P_{j} is moved by element {element}")]
    CoefficientNotFixed { j: usize, degree: usize, element: usize },
    #[error("supplied stabilizer {supplied:?} differs from the derived {derived:?}")]
    StabilizerMismatch { supplied: Vec<usize>, derived: Vec<usize> },
    #[error("scenario has no concrete layer")]
    MissingConcreteLayer,
    #[error("invalid embedding data: {0}")]
    InvalidEmbedding(String),
    #[error("union of double cosets is not a group: {a}*{b} escapes it")]
    ClosureFailure { a: usize, b: usize, elements: Vec<usize> },
    #[error("idempotent property failed: {0}")]
    PropertyFailure(String),
}

impl GaloisError {
    pub fn name(&self) -> &'static str {
        match self {
            GaloisError::Group(e) => e.name(),
            GaloisError::InvalidScenario(_) => "InvalidScenario",
            GaloisError::NotTransitive => "NotTransitive",
            GaloisError::DegenerateModulus(_) => "DegenerateModulus",
            GaloisError::NotInvertible(_) => "NotInvertible",
            GaloisError::NotARoot { .. } => "NotARoot",
            GaloisError::InconsistentAction { .. } => "InconsistentAction",
            GaloisError::RepeatedRoot { .. } => "RepeatedRoot",
            GaloisError::CoefficientNotFixed { .. } => "CoefficientNotFixed",
            GaloisError::StabilizerMismatch { .. } => "StabilizerMismatch",
            GaloisError::MissingConcreteLayer => "MissingConcreteLayer",
            GaloisError::InvalidEmbedding(_) => "InvalidEmbedding",
            GaloisError::ClosureFailure { .. } => "ClosureFailure",
            GaloisError::PropertyFailure(_) => "PropertyFailure",
        }
    }
}

/// The field `E`, the root values and `f`, with the action of `Γ` on `E`
/// recovered from its action on the roots.
#[derive(Clone, Debug)]
pub struct ConcreteLayer {
    field: NumberField,
    roots: Vec<NumberFieldElement>,
    f: QPoly,
    /// Monomials in the roots forming a `Q`-basis of `E`, as root-index lists.
    basis_words: Vec<Vec<usize>>,
    /// Inverse of the matrix whose columns are the basis elements.
    basis_inv: Vec<Vec<BigRational>>,
}

impl ConcreteLayer {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn roots(&self) -> &[NumberFieldElement] {
        &self.roots
    }

    pub fn f(&self) -> &QPoly {
        &self.f
    }

    /// `σ(a)` for the automorphism that sends root `i` to root `perm[i]`.
    pub fn apply(&self, perm: &[usize], a: &NumberFieldElement) -> NumberFieldElement {
        let d = self.field.degree();
        let v = dense(a, d);
        let c: Vec<BigRational> = (0..d)
            .map(|i| (0..d).map(|j| &self.basis_inv[i][j] * &v[j]).sum())
            .collect();
        let mut out = self.field.zero();
        for (w, ci) in self.basis_words.iter().zip(&c) {
            if ci.is_zero() {
                continue;
            }
            let image = self.word_value(w.iter().map(|&r| perm[r]));
            out = self.field.add(&out, &self.field.scale(&image, ci));
        }
        out
    }

    fn word_value(&self, word: impl Iterator<Item = usize>) -> NumberFieldElement {
        word.fold(self.field.one(), |acc, r| self.field.mul(&acc, &self.roots[r]))
    }
}

fn dense(a: &NumberFieldElement, d: usize) -> Vec<BigRational> {
    (0..d).map(|i| a.as_poly().coeff(i)).collect()
}

/// Abstract Galois data plus an optional concrete layer.
#[derive(Clone, Debug)]
pub struct GaloisScenario {
    pub name: Option<String>,
    gamma: FiniteGroup,
    root_action: GroupAction,
    theta: usize,
    concrete: Option<ConcreteLayer>,
}

impl GaloisScenario {
    pub fn new(
        gamma: FiniteGroup,
        root_action: GroupAction,
        theta: usize,
        concrete: Option<(NumberField, Vec<NumberFieldElement>, QPoly)>,
    ) -> Result<Self, GaloisError> {
        root_action.validate(&gamma)?;
        if root_action.set_size == 0 || theta >= root_action.set_size {
            return Err(GaloisError::InvalidScenario(format!(
                "theta {theta} is not one of {} roots",
                root_action.set_size
            )));
        }
        if !root_action.is_transitive(&gamma) {
            return Err(GaloisError::NotTransitive);
        }
        let concrete = match concrete {
            None => None,
            Some((field, roots, f)) => Some(build_concrete(&gamma, &root_action, field, roots, f)?),
        };
        Ok(GaloisScenario { name: None, gamma, root_action, theta, concrete })
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn root_action(&self) -> &GroupAction {
        &self.root_action
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn root_count(&self) -> usize {
        self.root_action.set_size
    }

    pub fn concrete(&self) -> Option<&ConcreteLayer> {
        self.concrete.as_ref()
    }

    pub fn from_json(text: &str) -> Result<Self, GaloisError> {
        let input: ScenarioInput =
            serde_json::from_str(text).map_err(|e| GaloisError::InvalidScenario(e.to_string()))?;
        input.build()
    }
}

fn build_concrete(
    gamma: &FiniteGroup,
    action: &GroupAction,
    field: NumberField,
    roots: Vec<NumberFieldElement>,
    f: QPoly,
) -> Result<ConcreteLayer, GaloisError> {
    let n = action.set_size;
    if roots.len() != n {
        return Err(GaloisError::InvalidScenario(format!(
            "{} root values for an action on {n} roots",
            roots.len()
        )));
    }
    if f.degree() != Some(n) {
        return Err(GaloisError::InvalidScenario(format!("f = {f} should have degree {n}")));
    }
    for (i, r) in roots.iter().enumerate() {
        if !field.eval_rational_poly(&f, r).is_zero() {
            return Err(GaloisError::NotARoot { index: i });
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            if roots[i] == roots[k] {
                return Err(GaloisError::RepeatedRoot { i, k });
            }
        }
    }

    // breadth-first search over monomials in the roots for a Q-basis of E
    let d = field.degree();
    let mut echelon = Echelon::new(d);
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut queue = std::collections::VecDeque::from([Vec::<usize>::new()]);
    while let Some(w) = queue.pop_front() {
        if words.len() == d {
            break;
        }
        let value = w.iter().fold(field.one(), |acc, &r| field.mul(&acc, &roots[r]));
        if !echelon.insert(dense(&value, d)) {
            continue;
        }
        for r in w.last().copied().unwrap_or(0)..n {
            let mut next = w.clone();
            next.push(r);
            queue.push_back(next);
        }
        words.push(w);
    }
    if words.len() < d {
        return Err(GaloisError::InvalidScenario(format!(
            "the roots generate a subfield of degree {} < {d}",
            words.len()
        )));
    }
    let columns: Vec<Vec<BigRational>> = words
        .iter()
        .map(|w| dense(&w.iter().fold(field.one(), |acc, &r| field.mul(&acc, &roots[r])), d))
        .collect();
    let basis_inv = invert_columns(&columns).expect("basis vectors are independent");
    let layer = ConcreteLayer { field, roots, f, basis_words: words, basis_inv };

    // each group element must act by a ring automorphism of E
    let values: Vec<NumberFieldElement> = layer
        .basis_words
        .iter()
        .map(|w| layer.word_value(w.iter().copied()))
        .collect();
    for g in 0..gamma.order() {
        let perm = &action.images[g];
        if g != 0 && perm.iter().enumerate().all(|(i, &x)| i == x) {
            return Err(GaloisError::InconsistentAction {
                element: g,
                reason: "acts trivially on the roots, which generate E".into(),
            });
        }
        for (i, r) in layer.roots.iter().enumerate() {
            if layer.apply(perm, r) != layer.roots[perm[i]] {
                return Err(GaloisError::InconsistentAction {
                    element: g,
                    reason: format!("root {i} is not sent to root {}", perm[i]),
                });
            }
        }
        let images: Vec<NumberFieldElement> = values.iter().map(|v| layer.apply(perm, v)).collect();
        for a in 0..d {
            for b in a..d {
                let lhs = layer.apply(perm, &layer.field.mul(&values[a], &values[b]));
                let rhs = layer.field.mul(&images[a], &images[b]);
                if lhs != rhs {
                    return Err(GaloisError::InconsistentAction {
                        element: g,
                        reason: "not multiplicative".into(),
                    });
                }
            }
        }
    }
    Ok(layer)
}

/// Incremental row echelon form over `Q` for independence tests.
struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    fn new(_dim: usize) -> Self {
        Echelon { rows: Vec::new() }
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone() / &row[*p];
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Inverse of the square matrix with the given columns, by Gauss–Jordan.
fn invert_columns(columns: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = columns.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &c * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Rationals in JSON: integers or strings such as `"-3/4"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Text(String),
}

impl RationalJson {
    pub fn parse(&self) -> Result<BigRational, GaloisError> {
        match self {
            RationalJson::Int(n) => Ok(BigRational::from_integer((*n).into())),
            RationalJson::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| GaloisError::InvalidScenario(format!("bad rational `{s}`"))),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        if r.is_integer() {
            if let Ok(n) = i64::try_from(r.to_integer()) {
                return RationalJson::Int(n);
            }
        }
        RationalJson::Text(r.to_string())
    }
}

fn parse_rationals(v: &[RationalJson]) -> Result<Vec<BigRational>, GaloisError> {
    v.iter().map(RationalJson::parse).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConcreteInput {
    /// Integer coefficients of `m`, lowest degree first.
    pub modulus: Vec<i64>,
    /// Each root as coefficients in the powers of the class of `x`.
    pub roots: Vec<Vec<RationalJson>>,
    /// Coefficients of `f`, lowest degree first.
    pub f: Vec<RationalJson>,
}

/// JSON scenario format. `root_action` may be omitted when `gamma` is given
/// by permutations of the roots.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub gamma: GroupInput,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_action: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub theta: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub concrete: Option<ConcreteInput>,
}

impl ScenarioInput {
    pub fn build(&self) -> Result<GaloisScenario, GaloisError> {
        let (gamma, action) = match (&self.gamma, &self.root_action) {
            (_, Some(images)) => {
                let gamma = self.gamma.build()?;
                let set_size = images.first().map_or(0, Vec::len);
                (gamma, GroupAction { set_size, images: images.clone() })
            }
            (GroupInput::Permutations { degree, generators }, None) => {
                let pg = PermutationGroup::from_cycles(*degree, generators)?;
                let action = pg.natural_action();
                (pg.group, action)
            }
            (GroupInput::Table { .. }, None) => {
                return Err(GaloisError::InvalidScenario(
                    "root_action is required when gamma is given by a table".into(),
                ))
            }
        };
        let concrete = match &self.concrete {
            None => None,
            Some(c) => {
                let field = NumberField::from_ints(&c.modulus)?;
                let roots = c
                    .roots
                    .iter()
                    .map(|r| field.from_coeffs(parse_rationals(r)?))
                    .collect::<Result<Vec<_>, _>>()?;
                let f = QPoly::new(parse_rationals(&c.f)?);
                Some((field, roots, f))
            }
        };
        let mut scenario = GaloisScenario::new(gamma, action, self.theta, concrete)?;
        scenario.name = self.name.clone();
        if let Some(supplied) = &self.stabilizer {
            let mut supplied = supplied.clone();
            supplied.sort_unstable();
            supplied.dedup();
            let derived = derive_stabilizer(&scenario);
            if supplied != derived.elements() {
                return Err(GaloisError::StabilizerMismatch {
                    supplied,
                    derived: derived.elements().to_vec(),
                });
            }
        }
        Ok(scenario)
    }
}

/// Embedding data: for each simple object, an element of `Γ` extending its
/// right embedding. Elements may be given by index or, for permutation
/// groups, by image array.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingData {
    pub objects: BTreeMap<String, usize>,
    /// Label of the monoidal unit, whose element must lie in `G`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

impl EmbeddingData {
    pub fn new(objects: &[(&str, usize)]) -> Self {
        EmbeddingData {
            objects: objects.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            unit: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, GaloisError> {
        serde_json::from_str(text).map_err(|e| GaloisError::InvalidEmbedding(e.to_string()))
    }

    pub fn validate(&self, scenario: &GaloisScenario) -> Result<(), GaloisError> {
        if self.objects.is_empty() {
            return Err(GaloisError::InvalidEmbedding("no objects".into()));
        }
        for (label, &rho) in &self.objects {
            if rho >= scenario.gamma.order() {
                return Err(GaloisError::InvalidEmbedding(format!(
                    "object {label}: element {rho} is not in a group of order {}",
                    scenario.gamma.order()
                )));
            }
        }
        if let Some(unit) = &self.unit {
            let rho = *self
                .objects
                .get(unit)
                .ok_or_else(|| GaloisError::InvalidEmbedding(format!("unit {unit} is not listed")))?;
            if !derive_stabilizer(scenario).contains(rho) {
                return Err(GaloisError::InvalidEmbedding(format!(
                    "unit {unit} maps to {rho}, which does not fix theta"
                )));
            }
        }
        Ok(())
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.objects.values().copied().collect()
    }
}

/// `G = Stab_Γ(θ)`.
pub fn derive_stabilizer(scenario: &GaloisScenario) -> Subgroup {
    scenario.root_action.stabilizer(&scenario.gamma, scenario.theta)
}

/// `J`: root index to the index of its `G`-orbit, orbits numbered by their
/// smallest member.
pub fn factor_orbit_map(scenario: &GaloisScenario) -> Vec<usize> {
    let mut j = vec![0; scenario.root_count()];
    for (label, orbit) in root_orbits(scenario).iter().enumerate() {
        for &i in orbit {
            j[i] = label;
        }
    }
    j
}

pub fn root_orbits(scenario: &GaloisScenario) -> Vec<Vec<usize>> {
    orbits(&scenario.root_action, &derive_stabilizer(scenario))
}

/// Degrees of the factors `f_j` of `f` over `L`.
pub fn tensor_unit_decomposition(scenario: &GaloisScenario) -> Vec<usize> {
    root_orbits(scenario).iter().map(Vec::len).collect()
}

fn concrete(scenario: &GaloisScenario) -> Result<&ConcreteLayer, GaloisError> {
    scenario.concrete.as_ref().ok_or(GaloisError::MissingConcreteLayer)
}

/// `pᵢ(x) = Π_{k≠i} (x − θ_k)/(θᵢ − θ_k)`, checked against `pᵢ(θ_k) = δ_{ik}`
/// and `Σ pᵢ = 1`.
pub fn lagrange_idempotents(scenario: &GaloisScenario) -> Result<Vec<EPoly>, GaloisError> {
    let layer = concrete(scenario)?;
    let field = &layer.field;
    let roots = &layer.roots;
    let n = roots.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut p = EPoly::constant(field.one());
        for k in 0..n {
            if k == i {
                continue;
            }
            let diff = field.sub(&roots[i], &roots[k]);
            if diff.is_zero() {
                return Err(GaloisError::RepeatedRoot { i: i.min(k), k: i.max(k) });
            }
            let c = field.inv(&diff)?;
            let factor = EPoly::new(vec![field.neg(&field.mul(&roots[k], &c)), c]);
            p = p.mul(&factor, field);
        }
        out.push(p);
    }
    for (i, p) in out.iter().enumerate() {
        for (k, r) in roots.iter().enumerate() {
            let v = field.eval(p, r);
            let expected = if i == k { field.one() } else { field.zero() };
            if v != expected {
                return Err(GaloisError::PropertyFailure(format!("p_{i}(theta_{k}) = {v}")));
            }
        }
    }
    check_sum_is_one(&out, field, "p")?;
    Ok(out)
}

fn check_sum_is_one(ps: &[EPoly], field: &NumberField, name: &str) -> Result<(), GaloisError> {
    let sum = ps.iter().fold(EPoly::new(vec![]), |acc, p| acc.add(p, field));
    if !sum.is_one() {
        return Err(GaloisError::PropertyFailure(format!("sum of {name}_i is {}", sum.display())));
    }
    Ok(())
}

/// `P_j = Σ_{J(i) = j} pᵢ`, checked against `P_j(θ_k) = δ_{j,J(k)}`, `Σ P_j = 1`
/// and `G`-invariance of every coefficient.
pub fn grouped_idempotents(scenario: &GaloisScenario) -> Result<Vec<EPoly>, GaloisError> {
    let p = lagrange_idempotents(scenario)?;
    let layer = concrete(scenario)?;
    let field = &layer.field;
    let j_of = factor_orbit_map(scenario);
    let m = j_of.iter().max().map_or(0, |&x| x + 1);
    let mut grouped = vec![EPoly::new(vec![]); m];
    for (i, pi) in p.iter().enumerate() {
        grouped[j_of[i]] = grouped[j_of[i]].add(pi, field);
    }
    for (j, pj) in grouped.iter().enumerate() {
        for (k, r) in layer.roots.iter().enumerate() {
            let v = field.eval(pj, r);
            let expected = if j_of[k] == j { field.one() } else { field.zero() };
            if v != expected {
                return Err(GaloisError::PropertyFailure(format!("P_{j}(theta_{k}) = {v}")));
            }
        }
    }
    check_sum_is_one(&grouped, field, "P")?;
    let g = derive_stabilizer(scenario);
    for (j, pj) in grouped.iter().enumerate() {
        for (degree, c) in pj.coeffs.iter().enumerate() {
            for &s in g.elements() {
                if layer.apply(&scenario.root_action.images[s], c) != *c {
                    return Err(GaloisError::CoefficientNotFixed { j, degree, element: s });
                }
            }
        }
    }
    Ok(grouped)
}

/// Outcome of the double-coset test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulnessReport {
    pub faithful: bool,
    /// `H = ∪_X G·ρ_X·G`, sorted.
    pub h: Vec<usize>,
    pub h_is_group: bool,
    /// `[Γ : H]`, the degree of the fixed field of `H` over the base field.
    pub fixed_field_index: usize,
}

/// Forms `H = ∪_X G·ρ_X·G`; the action is faithful iff `H = Γ`.
pub fn faithfulness_check(
    scenario: &GaloisScenario,
    embeddings: &EmbeddingData,
) -> Result<FaithfulnessReport, GaloisError> {
    embeddings.validate(scenario)?;
    let g = derive_stabilizer(scenario);
    let closure =
        double_coset_union_closure(&scenario.gamma, &g, &embeddings.representatives())?;
    if !closure.closed {
        let (a, b) = closure.witness.unwrap_or((0, 0));
        return Err(GaloisError::ClosureFailure { a, b, elements: closure.elements });
    }
    let order = scenario.gamma.order();
    let h = closure.elements;
    Ok(FaithfulnessReport {
        faithful: h.len() == order,
        fixed_field_index: order / h.len(),
        h_is_group: true,
        h,
    })
}

/// The polynomial form of the criterion: for every factor `j` some object
/// has `P_j(ρ_X(θ)) = 1`. Evaluated with exact arithmetic in `E`.
pub fn polynomial_faithfulness(
    scenario: &GaloisScenario,
    embeddings: &EmbeddingData,
) -> Result<bool, GaloisError> {
    embeddings.validate(scenario)?;
    let grouped = grouped_idempotents(scenario)?;
    let layer = concrete(scenario)?;
    let field = &layer.field;
    let images: Vec<&NumberFieldElement> = embeddings
        .objects
        .values()
        .map(|&rho| &layer.roots[scenario.root_action.apply(rho, scenario.theta)])
        .collect();
    Ok(grouped.iter().all(|pj| images.iter().any(|r| field.eval(pj, r).is_one())))
}

/// Built-in scenarios used by the catalog and the tests.
pub mod scenarios {
    use super::*;

    fn s3_on_roots() -> PermutationGroup {
        FiniteGroup::symmetric(3)
    }

    /// `E = L = Q(i)` over `Q`, a model of `C` over `R`: `Γ = Z/2` swaps
    /// `±i` and `G` is trivial.
    pub fn complex_over_real() -> GaloisScenario {
        let pg = FiniteGroup::symmetric(2);
        let field = NumberField::from_ints(&[1, 0, 1]).expect("x^2 + 1 is squarefree");
        let i = field.generator();
        let roots = vec![i.clone(), field.neg(&i)];
        GaloisScenario::new(pg.group.clone(), pg.natural_action(), 0, Some((field, roots, QPoly::from_ints(&[1, 0, 1]))))
            .expect("valid scenario")
            .with_name("C/R")
    }

    /// `Q(√2)` over `Q`.
    pub fn sqrt2() -> GaloisScenario {
        let pg = FiniteGroup::symmetric(2);
        let field = NumberField::from_ints(&[-2, 0, 1]).expect("x^2 - 2 is squarefree");
        let s = field.generator();
        let roots = vec![s.clone(), field.neg(&s)];
        GaloisScenario::new(pg.group.clone(), pg.natural_action(), 0, Some((field, roots, QPoly::from_ints(&[-2, 0, 1]))))
            .expect("valid scenario")
            .with_name("Q(sqrt2)/Q")
    }

    /// `L = K`: a single root, `Γ` trivial.
    pub fn trivial_extension() -> GaloisScenario {
        let field = NumberField::rationals();
        let roots = vec![field.zero()];
        GaloisScenario::new(
            FiniteGroup::cyclic(1),
            GroupAction { set_size: 1, images: vec![vec![0]] },
            0,
            Some((field, roots, QPoly::x())),
        )
        .expect("valid scenario")
        .with_name("K/K")
    }

    /// Coefficients (lowest first) of the minimal polynomial of a primitive
    /// element `β` of the splitting field of `x³ − 2`.
    pub const CUBE_ROOT_MODULUS: [i64; 7] = [31, 36, 27, -4, 9, 0, 1];

    /// The three roots of `x³ − 2` as polynomials in `β`, lowest first:
    /// the real cube root, then `ω·∛2`, then `ω²·∛2`.
    pub const CUBE_ROOTS: [[(i64, i64); 6]; 3] = [
        [(-91, 90), (-46, 45), (13, 45), (-4, 9), (1, 90), (-2, 45)],
        [(79, 60), (13, 60), (4, 15), (1, 6), (1, 60), (1, 60)],
        [(-11, 36), (29, 36), (-5, 9), (5, 18), (-1, 36), (1, 36)],
    ];

    /// `L = Q(∛2)` over `Q`, with `E` the degree-6 splitting field and
    /// `Γ = S₃` permuting the roots.
    pub fn cube_root_two() -> GaloisScenario {
        let pg = s3_on_roots();
        let field = NumberField::from_ints(&CUBE_ROOT_MODULUS).expect("modulus is squarefree");
        let roots = CUBE_ROOTS
            .iter()
            .map(|r| field.elem(&r.iter().map(|&(n, d)| crate::poly::ratio(n, d)).collect::<Vec<_>>()))
            .collect();
        GaloisScenario::new(pg.group.clone(), pg.natural_action(), 0, Some((field, roots, QPoly::from_ints(&[-2, 0, 0, 1]))))
            .expect("valid scenario")
            .with_name("Q(cbrt2)/Q")
    }

    /// Index of the permutation with the given images in `S_n` as built by
    /// [`FiniteGroup::symmetric`].
    pub fn perm_index(images: &[usize]) -> usize {
        FiniteGroup::symmetric(images.len()).index_of(images).expect("a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::scenarios::*;
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn stabilizers_and_orbits() {
        let c = complex_over_real();
        assert_eq!(derive_stabilizer(&c).elements(), &[0]);
        assert_eq!(factor_orbit_map(&c), vec![0, 1]);
        assert_eq!(tensor_unit_decomposition(&c), vec![1, 1]);

        let t = cube_root_two();
        let g = derive_stabilizer(&t);
        assert_eq!(g.order(), 2);
        assert_eq!(factor_orbit_map(&t), vec![0, 1, 1]);
        assert_eq!(tensor_unit_decomposition(&t), vec![1, 2]);

        let k = trivial_extension();
        assert_eq!(tensor_unit_decomposition(&k), vec![1]);
        assert_eq!(derive_stabilizer(&k).order(), 1);
    }

    #[test]
    fn gaussian_idempotents() {
        let c = complex_over_real();
        let f = c.concrete().unwrap().field().clone();
        let i = f.generator();
        let p = lagrange_idempotents(&c).unwrap();
        // p₁ = (1 − i·x)/2
        let half = ratio(1, 2);
        assert_eq!(p[0].coeffs, vec![f.rational(half.clone()), f.scale(&i, &-half.clone())]);
        assert_eq!(p[1].coeffs, vec![f.rational(half.clone()), f.scale(&i, &half)]);
        assert_eq!(grouped_idempotents(&c).unwrap(), p);
    }

    #[test]
    fn sqrt2_idempotent() {
        let s = sqrt2();
        let f = s.concrete().unwrap().field().clone();
        let p = lagrange_idempotents(&s).unwrap();
        // p₁ = (x + √2)/(2√2) = 1/2 + (√2/4)·x
        let r2 = f.generator();
        assert_eq!(p[0].coeffs, vec![f.rational(ratio(1, 2)), f.scale(&r2, &ratio(1, 4))]);
    }

    #[test]
    fn cube_root_scenario_is_consistent() {
        let t = cube_root_two();
        let layer = t.concrete().unwrap();
        let f = layer.field();
        // r1 / r0 is a primitive cube root of unity
        let w = f.div(&layer.roots()[1], &layer.roots()[0]).unwrap();
        assert!(f.add(&f.add(&f.mul(&w, &w), &w), &f.one()).is_zero());
        let grouped = grouped_idempotents(&t).unwrap();
        assert_eq!(grouped.len(), 2);
        // P₀ has rational coefficients times powers of ∛2: every coefficient is
        // fixed by the transposition of roots 1 and 2
        let swap = perm_index(&[0, 2, 1]);
        for c in &grouped[1].coeffs {
            assert_eq!(layer.apply(&[0, 2, 1], c), *c);
        }
        assert!(derive_stabilizer(&t).contains(swap));
        assert_eq!(lagrange_idempotents(&t).unwrap().len(), 3);
        // the 3-cycle moves ∛2
        let moved = layer.apply(&[1, 2, 0], &layer.roots()[0]);
        assert_eq!(moved, layer.roots()[1]);
    }

    #[test]
    fn inconsistent_actions_are_rejected() {
        // perturb one root value
        let pg = FiniteGroup::symmetric(3);
        let field = NumberField::from_ints(&CUBE_ROOT_MODULUS).unwrap();
        let mut roots: Vec<NumberFieldElement> = CUBE_ROOTS
            .iter()
            .map(|r| field.elem(&r.iter().map(|&(n, d)| ratio(n, d)).collect::<Vec<_>>()))
            .collect();
        roots[2] = field.add(&roots[2], &field.one());
        let r = GaloisScenario::new(pg.group.clone(), pg.natural_action(), 0, Some((field, roots, QPoly::from_ints(&[-2, 0, 0, 1]))));
        assert_eq!(r.unwrap_err(), GaloisError::NotARoot { index: 2 });

        let field = NumberField::from_ints(&[1, 0, 1]).unwrap();
        let i = field.generator();
        let r = GaloisScenario::new(
            pg.group.clone(),
            pg.natural_action(),
            0,
            Some((field.clone(), vec![i.clone(), i.clone(), field.neg(&i)], QPoly::from_ints(&[1, 0, 1]))),
        );
        assert!(r.is_err());
    }

    #[test]
    fn faithfulness_examples() {
        let c = complex_over_real();
        let r = faithfulness_check(&c, &EmbeddingData::new(&[("C", 0)])).unwrap();
        assert!(!r.faithful);
        assert_eq!(r.fixed_field_index, 2);
        assert_eq!(r.h, vec![0]);
        let r = faithfulness_check(&c, &EmbeddingData::new(&[("C", 0), ("C_sigma", 1)])).unwrap();
        assert!(r.faithful);
        assert_eq!(r.fixed_field_index, 1);

        let k = trivial_extension();
        assert!(faithfulness_check(&k, &EmbeddingData::new(&[("1", 0)])).unwrap().faithful);

        let t = cube_root_two();
        let cycle = perm_index(&[1, 2, 0]);
        let r = faithfulness_check(&t, &EmbeddingData::new(&[("L", 0), ("W", cycle)])).unwrap();
        assert!(r.faithful);
        let r = faithfulness_check(&t, &EmbeddingData::new(&[("L", 0)])).unwrap();
        assert!(!r.faithful);
        assert_eq!(r.fixed_field_index, 3);
    }

    #[test]
    fn closure_failure_has_witness() {
        // Γ = Z/4 on 4 roots, G trivial, H = {0, 1}
        let z4 = FiniteGroup::cyclic(4);
        let images = (0..4).map(|g| (0..4).map(|x| (g + x) % 4).collect()).collect();
        let s = GaloisScenario::new(z4, GroupAction { set_size: 4, images }, 0, None).unwrap();
        match faithfulness_check(&s, &EmbeddingData::new(&[("1", 0), ("X", 1)])) {
            Err(GaloisError::ClosureFailure { elements, .. }) => assert_eq!(elements, vec![0, 1]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unit_must_fix_theta() {
        let c = complex_over_real();
        let mut e = EmbeddingData::new(&[("1", 1)]);
        e.unit = Some("1".into());
        assert!(matches!(faithfulness_check(&c, &e), Err(GaloisError::InvalidEmbedding(_))));
    }

    #[test]
    fn polynomial_criterion_agrees() {
        for (s, reps) in [
            (complex_over_real(), vec![vec![0], vec![1], vec![0, 1]]),
            (sqrt2(), vec![vec![0], vec![0, 1]]),
            (cube_root_two(), vec![vec![0], vec![0, 1], vec![0, 3], vec![4], vec![2, 5]]),
        ] {
            for r in reps {
                let objects: Vec<(String, usize)> =
                    r.iter().enumerate().map(|(k, &g)| (format!("X{k}"), g)).collect();
                let e = EmbeddingData {
                    objects: objects.into_iter().collect(),
                    unit: None,
                };
                let Ok(report) = faithfulness_check(&s, &e) else { continue };
                assert_eq!(report.faithful, polynomial_faithfulness(&s, &e).unwrap(), "{r:?}");
            }
        }
    }

    #[test]
    fn json_scenario() {
        let text = r#"{
            "gamma": {"degree": 2, "generators": [[[0, 1]]]},
            "theta": 0,
            "stabilizer": [0],
            "concrete": {"modulus": [1, 0, 1], "roots": [[0, 1], [0, -1]], "f": [1, 0, 1]}
        }"#;
        let s = GaloisScenario::from_json(text).unwrap();
        assert_eq!(tensor_unit_decomposition(&s), vec![1, 1]);
        let bad = text.replace("\"stabilizer\": [0]", "\"stabilizer\": [0, 1]");
        assert!(matches!(
            GaloisScenario::from_json(&bad),
            Err(GaloisError::StabilizerMismatch { .. })
        ));
        let half = RationalJson::Text("-3/4".into()).parse().unwrap();
        assert_eq!(half, ratio(-3, 4));
        assert_eq!(RationalJson::Int(2).parse().unwrap(), rat(2));
        let e = EmbeddingData::from_json(r#"{"objects": {"C": 0}}"#).unwrap();
        assert_eq!(e.representatives(), vec![0]);
    }
}
