//! Fusion rings whose simples carry division-algebra endomorphism labels,
//! algebra profiles in the Brauer ring of `R`, invertible objects, and
//! Frobenius–Perron dimensions.
//!
//! Over a field that is not algebraically closed, `Hom(Xᵢ ⊗ Xⱼ, X_k)` has
//! dimension `N_{ij}^k · e_k` where `e_k = dim End(X_k)`. Validation checks
//! associativity of the structure constants and the rigidity identity
//! `dim Hom((Xᵢ⊗Xⱼ)⊗X_l, X_m) = dim Hom(Xᵢ⊗Xⱼ, X_m⊗X_l*)`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;
use crate::fieldtable::BaseField;
use crate::groups::{FiniteGroup, GroupError};
use crate::poly::{char_poly, default_width, largest_real_root, RealRoot};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("malformed fusion data: {0}")]
    Shape(String),
    #[error("unit axiom fails: {0}")]
    UnitFailure(String),
    #[error("duality fails at ({i}, {j}): {reason}")]
    DualityFailure { i: usize, j: usize, reason: String },
    #[error("{kind} fails at (i,j,l,m) = ({i},{j},{l},{m}): {lhs} != {rhs}")]
    AssociativityFailure {
        kind: String,
        i: usize,
        j: usize,
        l: usize,
        m: usize,
        lhs: u64,
        rhs: u64,
    },
    #[error("endomorphism label {label} is not available over {field}")]
    InvalidLabel { label: String, field: String },
    #[error("grading fails: X_{i} ⊗ X_{j} contains X_{k} in the wrong degree")]
    GradingFailure { i: usize, j: usize, k: usize },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invertible objects do not form a group: {0}")]
    NonGroupClosure(String),
    #[error("no grading supplied")]
    MissingGrading,
}

impl FusionError {
    pub fn name(&self) -> &'static str {
        match self {
            FusionError::Shape(_) => "SchemaError",
            FusionError::UnitFailure(_) => "UnitFailure",
            FusionError::DualityFailure { .. } => "DualityFailure",
            FusionError::AssociativityFailure { .. } => "AssociativityFailure",
            FusionError::InvalidLabel { .. } => "InvalidLabel",
            FusionError::GradingFailure { .. } => "GradingFailure",
            FusionError::UnsupportedField(_) => "UnsupportedField",
            FusionError::NonGroupClosure(_) => "NonGroupClosure",
            FusionError::MissingGrading => "MissingGrading",
        }
    }
}

/// Endomorphism algebra of a simple object. Over `R` this is `R`, `C` or `H`;
/// elsewhere a central division algebra over a finite extension, recorded by
/// names for the center and the Brauer class together with its dimension
/// over the base field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabelRepr", into = "LabelRepr")]
pub enum EndLabel {
    R,
    C,
    H,
    Ext { center: String, class: String, dim: u64 },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Name(String),
    Ext { center: String, class: String, dim: u64 },
}

impl TryFrom<LabelRepr> for EndLabel {
    type Error = String;
    fn try_from(r: LabelRepr) -> Result<Self, String> {
        match r {
            LabelRepr::Name(s) => match s.as_str() {
                "R" => Ok(EndLabel::R),
                "C" => Ok(EndLabel::C),
                "H" => Ok(EndLabel::H),
                other => Err(format!("unknown endomorphism label `{other}`")),
            },
            LabelRepr::Ext { dim: 0, .. } => Err("extension label with dimension 0".into()),
            LabelRepr::Ext { center, class, dim } => Ok(EndLabel::Ext { center, class, dim }),
        }
    }
}

impl From<EndLabel> for LabelRepr {
    fn from(l: EndLabel) -> Self {
        match l {
            EndLabel::R => LabelRepr::Name("R".into()),
            EndLabel::C => LabelRepr::Name("C".into()),
            EndLabel::H => LabelRepr::Name("H".into()),
            EndLabel::Ext { center, class, dim } => LabelRepr::Ext { center, class, dim },
        }
    }
}

impl fmt::Display for EndLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndLabel::R => write!(f, "R"),
            EndLabel::C => write!(f, "C"),
            EndLabel::H => write!(f, "H"),
            EndLabel::Ext { center, class, .. } => write!(f, "Ext({center},{class})"),
        }
    }
}

impl EndLabel {
    /// Dimension over the base field.
    pub fn dim(&self, field: &BaseField) -> Result<u64, FusionError> {
        let bad = || FusionError::InvalidLabel { label: self.to_string(), field: field.name() };
        match (self, field) {
            (EndLabel::R, BaseField::Real) => Ok(1),
            (EndLabel::C, BaseField::Real) => Ok(2),
            (EndLabel::H, BaseField::Real) => Ok(4),
            (EndLabel::C, BaseField::Complex) => Ok(1),
            (EndLabel::Ext { dim, .. }, BaseField::Complex) if *dim == 1 => Ok(1),
            (EndLabel::Ext { dim, .. }, BaseField::FiniteField(_) | BaseField::Abstract(_)) => {
                Ok(*dim)
            }
            _ => Err(bad()),
        }
    }
}

/// An abelian grading: `grades[i]` is the degree of simple `i` in the group
/// with the given invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub group: Vec<u64>,
    pub grades: Vec<Vec<u64>>,
}

impl Grading {
    pub fn abelian_group(&self) -> AbelianGroup {
        AbelianGroup::finite(&self.group)
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.group).map(|((x, y), d)| (x + y) % d).collect()
    }
}

/// Combinatorial data of a fusion category: `N[i][j][k]` is the multiplicity
/// of `X_k` in `Xᵢ ⊗ Xⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRingData {
    pub base_field: BaseField,
    pub simples: Vec<String>,
    #[serde(default)]
    pub unit: usize,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u64>>>,
    pub dual: Vec<usize>,
    pub ends: Vec<EndLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Grading>,
}

impl FusionRingData {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.simples.iter().position(|s| s == label)
    }

    pub fn from_json(text: &str) -> Result<Self, FusionError> {
        serde_json::from_str(text).map_err(|e| FusionError::Shape(e.to_string()))
    }

    /// Builds data from a list of products `(i, j, [(k, N_{ij}^k)])`; products
    /// with the unit are filled in automatically.
    pub fn from_rules(
        base_field: BaseField,
        simples: &[&str],
        ends: Vec<EndLabel>,
        dual: Vec<usize>,
        rules: &[(usize, usize, Vec<(usize, u64)>)],
    ) -> Self {
        let r = simples.len();
        let mut n = vec![vec![vec![0; r]; r]; r];
        for i in 0..r {
            n[0][i][i] = 1;
            n[i][0][i] = 1;
        }
        for (i, j, terms) in rules {
            for &(k, m) in terms {
                n[*i][*j][k] = m;
            }
        }
        FusionRingData {
            base_field,
            simples: simples.iter().map(|s| s.to_string()).collect(),
            unit: 0,
            n,
            dual,
            ends,
            grading: None,
        }
    }

    pub fn with_grading(mut self, group: &[u64], grades: Vec<Vec<u64>>) -> Self {
        self.grading = Some(Grading { group: group.to_vec(), grades });
        self
    }

    fn end_dims(&self) -> Result<Vec<u64>, FusionError> {
        self.ends.iter().map(|e| e.dim(&self.base_field)).collect()
    }

    /// Left multiplication matrix of simple `i`: entry `(k, j)` is `N_{ij}^k`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let r = self.rank();
        (0..r).map(|k| (0..r).map(|j| self.n[i][j][k] as i64).collect()).collect()
    }
}

/// Checks every axiom and returns the data unchanged.
pub fn validate_fusion_ring(data: &FusionRingData) -> Result<FusionRingData, FusionError> {
    let r = data.rank();
    let shape = |m: String| Err(FusionError::Shape(m));
    if r == 0 {
        return shape("no simple objects".into());
    }
    if data.n.len() != r || data.n.iter().any(|a| a.len() != r || a.iter().any(|b| b.len() != r)) {
        return shape(format!("N must be {r}x{r}x{r}"));
    }
    if data.dual.len() != r || data.ends.len() != r {
        return shape(format!("dual and ends must have {r} entries"));
    }
    if data.unit >= r || data.dual.iter().any(|&d| d >= r) {
        return shape("index out of range".into());
    }
    let e = data.end_dims()?;
    let u = data.unit;
    let n = &data.n;

    for j in 0..r {
        for k in 0..r {
            let delta = u64::from(j == k);
            if n[u][j][k] != delta || n[j][u][k] != delta {
                return Err(FusionError::UnitFailure(format!(
                    "{} is not a two-sided unit at ({j}, {k})",
                    data.simples[u]
                )));
            }
        }
    }
    for i in 0..r {
        let d = data.dual[i];
        if data.dual[d] != i {
            return Err(FusionError::DualityFailure { i, j: d, reason: "dual is not an involution".into() });
        }
        for j in 0..r {
            if (n[i][j][u] > 0) != (j == d) {
                return Err(FusionError::DualityFailure {
                    i,
                    j,
                    reason: format!("N_{{{i},{j}}}^1 = {} but dual({i}) = {d}", n[i][j][u]),
                });
            }
        }
        if data.ends[i] != data.ends[d] {
            return Err(FusionError::DualityFailure {
                i,
                j: d,
                reason: "a simple and its dual have different endomorphism algebras".into(),
            });
        }
    }

    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                for m in 0..r {
                    let lhs: u64 = (0..r).map(|k| n[i][j][k] * n[k][l][m]).sum();
                    let rhs: u64 = (0..r).map(|k| n[j][l][k] * n[i][k][m]).sum();
                    if lhs != rhs {
                        return Err(FusionError::AssociativityFailure {
                            kind: "associativity".into(),
                            i,
                            j,
                            l,
                            m,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }

    // dim Hom((Xi⊗Xj)⊗Xl, Xm) against dim Hom(Xi⊗Xj, Xm⊗Xl*)
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                let ld = data.dual[l];
                for m in 0..r {
                    let lhs: u64 = (0..r).map(|k| n[i][j][k] * n[k][l][m]).sum::<u64>() * e[m];
                    let rhs: u64 = (0..r).map(|k| n[i][j][k] * n[m][ld][k] * e[k]).sum();
                    if lhs != rhs {
                        return Err(FusionError::AssociativityFailure {
                            kind: "rigidity dimension count".into(),
                            i,
                            j,
                            l,
                            m,
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }

    if let Some(g) = &data.grading {
        if g.grades.len() != r
            || g.grades.iter().any(|x| x.len() != g.group.len())
            || g.group.iter().any(|&d| d < 2)
        {
            return shape("grading has the wrong shape".into());
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if n[i][j][k] > 0 && g.add(&g.grades[i], &g.grades[j]) != g.grades[k] {
                        return Err(FusionError::GradingFailure { i, j, k });
                    }
                }
            }
        }
    }
    Ok(data.clone())
}

/// A formal combination of endomorphism classes with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerRingElement {
    pub terms: BTreeMap<EndLabel, u64>,
}

impl BrauerRingElement {
    pub fn from_terms(terms: &[(EndLabel, u64)]) -> Self {
        let mut out = BrauerRingElement::default();
        for (l, m) in terms {
            out.add(l.clone(), *m);
        }
        out
    }

    pub fn add(&mut self, label: EndLabel, mult: u64) {
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, label: &EndLabel) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for BrauerRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, &m)| if m == 1 { format!("[{l}]") } else { format!("{m}[{l}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The multiset of endomorphism labels of all simples.
pub fn algebra_profile(data: &FusionRingData) -> BrauerRingElement {
    let mut p = BrauerRingElement::default();
    for l in &data.ends {
        p.add(l.clone(), 1);
    }
    p
}

/// Product of two classes in the Brauer ring of `R`: `R` is the unit,
/// `H·H = R`, `C·H = C`, and `C·C = 2C` since `C ⊗_R C ≅ C × C`.
pub fn real_brauer_product(a: &EndLabel, b: &EndLabel) -> Result<(EndLabel, u64), FusionError> {
    use EndLabel::*;
    match (a, b) {
        (R, x) | (x, R) if !matches!(x, Ext { .. }) => Ok((x.clone(), 1)),
        (H, H) => Ok((R, 1)),
        (C, H) | (H, C) => Ok((C, 1)),
        (C, C) => Ok((C, 2)),
        _ => Err(FusionError::UnsupportedField(format!(
            "no Brauer ring product for {a} and {b} outside R"
        ))),
    }
}

/// Multiplies every term of a real profile by `[D]`.
pub fn profile_twist(
    profile: &BrauerRingElement,
    d: &EndLabel,
) -> Result<BrauerRingElement, FusionError> {
    let mut out = BrauerRingElement::default();
    for (l, &m) in &profile.terms {
        let (prod, k) = real_brauer_product(l, d)?;
        out.add(prod, m * k);
    }
    Ok(out)
}

/// `true` when twisting by `[D]` changes the profile, which shows the image of
/// `[D]` in the Brauer–Picard group is nontrivial. `false` is inconclusive.
pub fn twist_obstruction(data: &FusionRingData, d: &EndLabel) -> Result<bool, FusionError> {
    if data.base_field != BaseField::Real {
        return Err(FusionError::UnsupportedField(data.base_field.name()));
    }
    let p = algebra_profile(data);
    Ok(profile_twist(&p, d)? != p)
}

/// The group of invertible simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvertibleObjects {
    /// Simple indices, unit first.
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    /// Multiplication table in positions of `indices`.
    pub table: Vec<Vec<usize>>,
    /// Invariant factors when the group is abelian.
    pub group: Option<AbelianGroup>,
}

impl InvertibleObjects {
    pub fn order(&self) -> usize {
        self.indices.len()
    }
}

/// Simples `X` with `End(X)` the base field and `X ⊗ X* = 𝟙` exactly.
pub fn invertible_objects(data: &FusionRingData) -> Result<InvertibleObjects, FusionError> {
    let data = validate_fusion_ring(data)?;
    let r = data.rank();
    let u = data.unit;
    // an invertible object has the same endomorphism algebra as the unit,
    // which need not be the base field (End(1) = C in Bim(C))
    let unit_end = &data.ends[u];
    let is_invertible = |i: usize| {
        let d = data.dual[i];
        data.ends[i] == *unit_end
            && (0..r).all(|k| data.n[i][d][k] == u64::from(k == u))
            && (0..r).all(|k| data.n[d][i][k] == u64::from(k == u))
    };
    let mut indices: Vec<usize> = (0..r).filter(|&i| is_invertible(i)).collect();
    indices.sort_by_key(|&i| (i != u, i));
    let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let mut table = Vec::with_capacity(indices.len());
    for &a in &indices {
        let mut row = Vec::with_capacity(indices.len());
        for &b in &indices {
            let support: Vec<usize> = (0..r).filter(|&k| data.n[a][b][k] > 0).collect();
            let single = support.len() == 1 && data.n[a][b][support[0]] == 1;
            match (single, support.first().and_then(|k| pos.get(k))) {
                (true, Some(&p)) => row.push(p),
                _ => {
                    return Err(FusionError::NonGroupClosure(format!(
                        "{} ⊗ {} is not an invertible simple",
                        data.simples[a], data.simples[b]
                    )))
                }
            }
        }
        table.push(row);
    }
    let g = FiniteGroup::from_table(table.clone())
        .map_err(|e: GroupError| FusionError::NonGroupClosure(e.to_string()))?;
    let group = g.abelian_invariants().ok();
    Ok(InvertibleObjects {
        labels: indices.iter().map(|&i| data.simples[i].clone()).collect(),
        indices,
        table,
        group,
    })
}

/// `Hom(grading group, Z/2)`: monoidal automorphisms of the identity functor
/// of a graded category over `R`, acting by the sign of a character on each
/// graded piece.
pub fn aut_tensor_id(data: &FusionRingData) -> Result<AbelianGroup, FusionError> {
    if data.base_field != BaseField::Real {
        return Err(FusionError::UnsupportedField(data.base_field.name()));
    }
    let g = data.grading.as_ref().ok_or(FusionError::MissingGrading)?;
    let even = g.group.iter().filter(|&&d| d % 2 == 0).count();
    Ok(AbelianGroup::elementary(2, even))
}

/// Frobenius–Perron dimension of each simple: the largest real eigenvalue of
/// its fusion matrix, exact when rational.
pub fn fp_dimensions(data: &FusionRingData) -> Vec<RealRoot> {
    let w = default_width();
    (0..data.rank())
        .map(|i| {
            largest_real_root(&char_poly(&data.fusion_matrix(i)), &w)
                .expect("a nonnegative integer matrix has a real eigenvalue")
        })
        .collect()
}

/// Checks `d_i·d_j = Σ_k N_{ij}^k d_k` with interval arithmetic on the
/// certified enclosures (exact when every dimension is rational).
pub fn fp_dimensions_multiplicative(data: &FusionRingData) -> bool {
    let dims = fp_dimensions(data);
    let r = data.rank();
    for i in 0..r {
        for j in 0..r {
            let lo_l = &dims[i].lower * &dims[j].lower;
            let hi_l = &dims[i].upper * &dims[j].upper;
            let mut lo_r = BigRational::from_integer(0.into());
            let mut hi_r = lo_r.clone();
            for k in 0..r {
                let m = BigRational::from_integer(data.n[i][j][k].into());
                lo_r += &m * &dims[k].lower;
                hi_r += &m * &dims[k].upper;
            }
            // the two enclosures of the same number must overlap
            if hi_l < lo_r || hi_r < lo_l {
                return false;
            }
        }
    }
    true
}

/// Relabels simples by `perm` (new index `p` holds old simple `perm[p]`).
pub fn permute_simples(data: &FusionRingData, perm: &[usize]) -> FusionRingData {
    let r = data.rank();
    let mut inv = vec![0; r];
    for (p, &o) in perm.iter().enumerate() {
        inv[o] = p;
    }
    FusionRingData {
        base_field: data.base_field.clone(),
        simples: perm.iter().map(|&o| data.simples[o].clone()).collect(),
        unit: inv[data.unit],
        n: (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| data.n[perm[i]][perm[j]][perm[k]]).collect())
                    .collect()
            })
            .collect(),
        dual: perm.iter().map(|&o| inv[data.dual[o]]).collect(),
        ends: perm.iter().map(|&o| data.ends[o].clone()).collect(),
        grading: data.grading.as_ref().map(|g| Grading {
            group: g.group.clone(),
            grades: perm.iter().map(|&o| g.grades[o].clone()).collect(),
        }),
    }
}

/// Fusion data of the worked examples.
pub mod examples {
    use super::*;
    use EndLabel::*;

    /// `Vec_R`.
    pub fn vec_r() -> FusionRingData {
        FusionRingData::from_rules(BaseField::Real, &["1"], vec![R], vec![0], &[])
    }

    /// `Vec_R(G)` for a finite group, simples labelled by element index.
    pub fn vec_r_group(g: &FiniteGroup) -> FusionRingData {
        let n = g.order();
        let labels: Vec<String> = (0..n).map(|x| g.label(x)).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let rules: Vec<_> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, vec![(g.mul(a, b), 1)])).collect();
        FusionRingData::from_rules(BaseField::Real, &refs, vec![R; n], (0..n).map(|x| g.inv(x)).collect(), &rules)
    }

    /// The real Tambara–Yamagami-type rings `Q_±`: `Y ⊗ Y = 4·𝟙`, `End(Y) = H`.
    pub fn q_pm() -> FusionRingData {
        FusionRingData::from_rules(BaseField::Real, &["1", "Y"], vec![R, H], vec![0, 1], &[(1, 1, vec![(0, 4)])])
    }

    /// `Q_±` with `Y ⊗ Y = c·𝟙`.
    pub fn q_pm_with(c: u64) -> FusionRingData {
        FusionRingData::from_rules(BaseField::Real, &["1", "Y"], vec![R, H], vec![0, 1], &[(1, 1, vec![(0, c)])])
    }

    /// Center of `Q_-`: `{𝟙, M, Y, MY}`, graded by `(Z/2)²`.
    pub fn z_q_minus() -> FusionRingData {
        FusionRingData::from_rules(
            BaseField::Real,
            &["1", "M", "Y", "MY"],
            vec![R, R, H, H],
            vec![0, 1, 2, 3],
            &[
                (1, 1, vec![(0, 1)]),
                (1, 2, vec![(3, 1)]),
                (2, 1, vec![(3, 1)]),
                (1, 3, vec![(2, 1)]),
                (3, 1, vec![(2, 1)]),
                (2, 2, vec![(0, 4)]),
                (3, 3, vec![(0, 4)]),
                (2, 3, vec![(1, 4)]),
                (3, 2, vec![(1, 4)]),
            ],
        )
        .with_grading(&[2, 2], vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
    }

    /// Center of `Q_+`: `{𝟙, X, V}` with `X ⊗ V = V`, `V ⊗ V = 2·𝟙 + 2·X`.
    pub fn z_q_plus() -> FusionRingData {
        FusionRingData::from_rules(
            BaseField::Real,
            &["1", "X", "V"],
            vec![R, R, C],
            vec![0, 1, 2],
            &[
                (1, 1, vec![(0, 1)]),
                (1, 2, vec![(2, 1)]),
                (2, 1, vec![(2, 1)]),
                (2, 2, vec![(0, 2), (1, 2)]),
            ],
        )
        .with_grading(&[2], vec![vec![0], vec![0], vec![1]])
    }

    /// `Rep_R(Q₈)`: four real characters and the quaternionic representation.
    pub fn rep_r_q8() -> FusionRingData {
        let mut rules = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                rules.push((a, b, vec![(a ^ b, 1)]));
            }
            rules.push((a, 4, vec![(4, 1)]));
            rules.push((4, a, vec![(4, 1)]));
        }
        rules.push((4, 4, (0..4).map(|k| (k, 4)).collect()));
        FusionRingData::from_rules(BaseField::Real, &["1", "a", "b", "ab", "H"], vec![R, R, R, R, H], (0..5).collect(), &rules)
    }

    /// `Bim_{Vec_R}(C)`: the bimodules `C` and `C_σ` (conjugate action).
    pub fn bim_c() -> FusionRingData {
        FusionRingData::from_rules(BaseField::Real, &["C", "C_sigma"], vec![C, C], vec![0, 1], &[(1, 1, vec![(0, 1)])])
            .with_grading(&[2], vec![vec![0], vec![1]])
    }

    /// `Vec_C` regarded as a fusion category over `R`.
    pub fn vec_c_over_r() -> FusionRingData {
        FusionRingData::from_rules(BaseField::Real, &["C"], vec![C], vec![0], &[])
    }

    /// `Bim_{Vec_Q}(Q(∛2))`: `L ⊗_Q L ≅ L ⊕ W` with `W` the splitting field.
    pub fn bim_cube_root_two() -> FusionRingData {
        let q = BaseField::abstract_field("Q", None, None);
        let l = Ext { center: "Q(cbrt2)".into(), class: "0".into(), dim: 3 };
        let w = Ext { center: "Q(cbrt2,omega)".into(), class: "0".into(), dim: 6 };
        FusionRingData::from_rules(q, &["L", "W"], vec![l, w], vec![0, 1], &[(1, 1, vec![(0, 2), (1, 1)])])
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::poly::rat;
    use EndLabel::*;

    #[test]
    fn catalog_rings_validate() {
        for d in [vec_r(), q_pm(), z_q_minus(), z_q_plus(), rep_r_q8(), bim_c(), vec_c_over_r(), bim_cube_root_two()] {
            validate_fusion_ring(&d).unwrap_or_else(|e| panic!("{:?}: {e}", d.simples));
        }
        validate_fusion_ring(&vec_r_group(&FiniteGroup::symmetric(3).group)).unwrap();
    }

    #[test]
    fn coefficient_three_fails() {
        let e = validate_fusion_ring(&q_pm_with(3)).unwrap_err();
        assert_eq!(e.name(), "AssociativityFailure");
        assert!(matches!(
            e,
            FusionError::AssociativityFailure { lhs: 4, rhs: 3, i: 0, j: 0, l: 1, m: 1, .. }
        ));
        // any coefficient other than dim End(Y) = 4 fails the same way
        for c in [1, 2, 5] {
            assert!(validate_fusion_ring(&q_pm_with(c)).is_err());
        }
    }

    #[test]
    fn axiom_violations() {
        let mut d = q_pm();
        d.n[0][1][1] = 0;
        assert_eq!(validate_fusion_ring(&d).unwrap_err().name(), "UnitFailure");
        let mut d = z_q_plus();
        d.dual = vec![0, 2, 1];
        assert_eq!(validate_fusion_ring(&d).unwrap_err().name(), "DualityFailure");
        let mut d = z_q_minus();
        d.grading.as_mut().unwrap().grades[1] = vec![0, 1];
        assert_eq!(validate_fusion_ring(&d).unwrap_err().name(), "GradingFailure");
        let mut d = q_pm();
        d.ends[1] = Ext { center: "x".into(), class: "y".into(), dim: 4 };
        assert_eq!(validate_fusion_ring(&d).unwrap_err().name(), "InvalidLabel");
        // a non-associative ring: Z/3-like products with one rule broken
        let mut d = vec_r_group(&FiniteGroup::cyclic(3));
        d.n[1][1] = vec![0, 1, 0];
        assert!(validate_fusion_ring(&d).is_err());
    }

    #[test]
    fn profiles_and_twists() {
        let q8 = algebra_profile(&rep_r_q8());
        assert_eq!(q8, BrauerRingElement::from_terms(&[(R, 4), (H, 1)]));
        let twisted = profile_twist(&q8, &H).unwrap();
        assert_eq!(twisted, BrauerRingElement::from_terms(&[(H, 4), (R, 1)]));
        assert_eq!(algebra_profile(&q_pm()), BrauerRingElement::from_terms(&[(R, 1), (H, 1)]));
        assert_eq!(algebra_profile(&vec_r()), BrauerRingElement::from_terms(&[(R, 1)]));
        let rc = BrauerRingElement::from_terms(&[(R, 1), (C, 1)]);
        assert_eq!(profile_twist(&rc, &C).unwrap(), BrauerRingElement::from_terms(&[(C, 3)]));
        assert_eq!(profile_twist(&q8, &R).unwrap(), q8);
        assert!(twist_obstruction(&rep_r_q8(), &H).unwrap());
        assert!(!twist_obstruction(&q_pm(), &H).unwrap());
        assert!(twist_obstruction(&bim_cube_root_two(), &H).is_err());
        assert_eq!(q8.to_string(), "4[R] + [H]");
    }

    #[test]
    fn invertibles() {
        let inv = invertible_objects(&z_q_plus()).unwrap();
        assert_eq!(inv.labels, vec!["1", "X"]);
        assert_eq!(inv.group, Some(AbelianGroup::cyclic(2)));
        let inv = invertible_objects(&z_q_minus()).unwrap();
        assert_eq!(inv.labels, vec!["1", "M"]);
        let inv = invertible_objects(&vec_r_group(&FiniteGroup::abelian(&[2, 4]))).unwrap();
        assert_eq!(inv.group, Some(AbelianGroup::finite(&[2, 4])));
        assert_eq!(invertible_objects(&rep_r_q8()).unwrap().group, Some(AbelianGroup::elementary(2, 2)));
    }

    #[test]
    fn automorphisms_of_identity() {
        assert_eq!(aut_tensor_id(&z_q_minus()).unwrap(), AbelianGroup::elementary(2, 2));
        assert_eq!(aut_tensor_id(&z_q_plus()).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(aut_tensor_id(&q_pm()), Err(FusionError::MissingGrading));
        let trivial = vec_r().with_grading(&[], vec![vec![]]);
        assert!(aut_tensor_id(&trivial).unwrap().is_trivial());
    }

    #[test]
    fn frobenius_perron() {
        let dims = fp_dimensions(&z_q_plus());
        assert_eq!(dims.iter().map(|d| d.exact.clone().unwrap()).collect::<Vec<_>>(), vec![rat(1), rat(1), rat(2)]);
        let dims = fp_dimensions(&bim_cube_root_two());
        assert_eq!(dims[1].exact, Some(rat(2)));
        for d in [q_pm(), z_q_minus(), z_q_plus(), rep_r_q8(), bim_c()] {
            assert!(fp_dimensions_multiplicative(&d));
        }
        // Fibonacci ring: irrational dimension
        let fib = FusionRingData::from_rules(BaseField::Real, &["1", "t"], vec![R, R], vec![0, 1], &[(1, 1, vec![(0, 1), (1, 1)])]);
        let d = &fp_dimensions(&fib)[1];
        assert!(d.exact.is_none());
        assert!((d.approx() - 1.618_033_988_749_895).abs() < 1e-11);
        assert!(fp_dimensions_multiplicative(&fib));
    }

    #[test]
    fn json_round_trip() {
        let d = z_q_minus();
        let text = serde_json::to_string(&d).unwrap();
        assert!(text.contains("\"N\""));
        assert_eq!(FusionRingData::from_json(&text).unwrap(), d);
        let d = bim_cube_root_two();
        let back = FusionRingData::from_json(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        assert!(FusionRingData::from_json(r#"{"base_field": "R", "simples": ["1"], "N": [[[1]]], "dual": [0], "ends": ["Q"]}"#).is_err());
    }
}
