//! Curated catalog of worked examples and the reproduction report.
//!
//! Each entry bundles fusion data with optional center, Galois scenario,
//! exact sequence and cocycles, plus a map of expected results. Every
//! expectation is a named check; [`verify_paper`] runs them all, together
//! with a fixed set of property checks, and reports one line per check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::abelian::AbelianGroup;
use crate::cohomology::{
    cohomology, d_squared_defect, is_symmetric_cocycle, pw_sign_identity_check,
    reduce_unit_coefficients, smith_normal_form, Cocycle, GModule, IntMatrix,
};
use crate::fieldtable::{brauer_group, h3_gm, H3Value};
use crate::fusion::{
    aut_tensor_id, algebra_profile, fp_dimensions_multiplicative, invertible_objects,
    profile_twist, twist_obstruction, validate_fusion_ring, EndLabel, FusionRingData,
};
use crate::galois::{
    faithfulness_check, grouped_idempotents, polynomial_faithfulness,
    tensor_unit_decomposition, EmbeddingData, GaloisScenario, ScenarioInput,
};
use crate::groups::{double_coset, generated_subgroup, FiniteGroup, Subgroup};
use crate::seqkit::{
    classify_vecr_extensions, count_qminus_z2_extensions, instances, solve_brpic,
    verify_exactness, ExactSequenceInstance,
};

/// The built-in catalog.
pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

/// Environment variable naming a catalog file to use instead.
pub const CATALOG_ENV: &str = "BRPIC_CATALOG";

/// Seed for the random Smith-form matrices; fixed so reports are stable.
pub const SMITH_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("malformed catalog: {0}")]
    Schema(String),
    #[error("entry {id}: {reason}")]
    Validation { id: String, reason: String },
}

impl CatalogError {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogError::Io { .. } => "IoError",
            CatalogError::Schema(_) => "SchemaError",
            CatalogError::Validation { .. } => "ValidationError",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: Value,
    /// Where the expected value comes from, printed next to the check.
    pub source: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaloisData {
    pub scenario: ScenarioInput,
    pub embeddings: EmbeddingData,
}

/// A degree-2 `Z/2`-valued cocycle on the center's grading group, given as
/// the bilinear form `J(g, h) = Σ B_ij g_i h_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearCocycle {
    pub name: String,
    pub bilinear: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    #[serde(default)]
    pub title: String,
    pub fusion: FusionRingData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<FusionRingData>,
    /// An invertible bimodule category recorded as data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<FusionRingData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub galois: Option<GaloisData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<ExactSequenceInstance>,
    /// `Aut_br` of the center, as an abelian group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_br: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cocycles: Vec<BilinearCocycle>,
    pub expected: BTreeMap<String, Expectation>,
}

impl CatalogEntry {
    fn invalid(&self, reason: impl fmt::Display) -> CatalogError {
        CatalogError::Validation { id: self.id.clone(), reason: reason.to_string() }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        validate_fusion_ring(&self.fusion).map_err(|e| self.invalid(format!("fusion: {e}")))?;
        if let Some(c) = &self.center {
            validate_fusion_ring(c).map_err(|e| self.invalid(format!("center: {e}")))?;
        }
        if let Some(b) = &self.bimodule {
            validate_fusion_ring(b).map_err(|e| self.invalid(format!("bimodule: {e}")))?;
        }
        if self.galois.is_some() {
            self.scenario()?;
        }
        if let Some(s) = &self.sequence {
            verify_exactness(s).map_err(|e| self.invalid(format!("sequence: {e}")))?;
        }
        if let Some(a) = &self.aut_br {
            AbelianGroup::parse(a).map_err(|e| self.invalid(format!("aut_br: {e}")))?;
        }
        for c in &self.cocycles {
            self.cocycle(c)?;
        }
        Ok(())
    }

    pub fn scenario(&self) -> Result<(GaloisScenario, EmbeddingData), CatalogError> {
        let data = self.galois.as_ref().ok_or_else(|| self.invalid("no Galois scenario"))?;
        let s = data.scenario.build().map_err(|e| self.invalid(format!("galois: {e}")))?;
        data.embeddings.validate(&s).map_err(|e| self.invalid(format!("embeddings: {e}")))?;
        Ok((s, data.embeddings.clone()))
    }

    fn center_grading_group(&self) -> Result<(FiniteGroup, Vec<u64>), CatalogError> {
        let grading = self
            .center
            .as_ref()
            .and_then(|c| c.grading.as_ref())
            .ok_or_else(|| self.invalid("cocycles need a graded center"))?;
        Ok((FiniteGroup::abelian(&grading.group), grading.group.clone()))
    }

    /// The cocycle on the center's grading group.
    pub fn cocycle(&self, c: &BilinearCocycle) -> Result<(FiniteGroup, Cocycle), CatalogError> {
        let (group, orders) = self.center_grading_group()?;
        let r = orders.len();
        if c.bilinear.len() != r || c.bilinear.iter().any(|row| row.len() != r) {
            return Err(self.invalid(format!("{}: expected a {r}x{r} form", c.name)));
        }
        if orders.iter().any(|&o| o != 2) {
            return Err(self.invalid(format!("{}: bilinear forms need an elementary 2-group", c.name)));
        }
        let z2 = GModule::cyclic(&group, 2);
        let coords = |mut idx: usize| {
            let mut v = vec![0u64; r];
            for k in (0..r).rev() {
                v[k] = (idx % 2) as u64;
                idx /= 2;
            }
            v
        };
        let cocycle = Cocycle::scalar(&group, &z2, 2, |t| {
            let (g, h) = (coords(t[0]), coords(t[1]));
            let mut s = 0;
            for i in 0..r {
                for j in 0..r {
                    s += c.bilinear[i][j] * g[i] * h[j];
                }
            }
            (s % 2) as i64
        });
        Ok((group, cocycle))
    }
}

/// Parses and validates catalog JSON (an array of entries). Blank input is
/// an empty catalog.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(text).map_err(|e| CatalogError::Schema(e.to_string()))?;
    let mut seen = BTreeSet::new();
    for e in &entries {
        if !seen.insert(e.id.as_str()) {
            return Err(e.invalid("duplicate id"));
        }
        e.validate()?;
    }
    Ok(entries)
}

pub fn catalog_load(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_catalog(&text)
}

/// The catalog named by `BRPIC_CATALOG`, or the built-in one.
pub fn default_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    match std::env::var_os(CATALOG_ENV) {
        Some(path) => catalog_load(path),
        None => parse_catalog(BUILTIN_CATALOG),
    }
}

pub fn find<'a>(entries: &'a [CatalogEntry], id: &str) -> Option<&'a CatalogEntry> {
    entries.iter().find(|e| e.id == id)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub entry: String,
    pub name: String,
    pub computed: Value,
    pub expected: Value,
    pub source: String,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{}: computed {}, expected {}  [{}]",
            if self.pass { "PASS" } else { "FAIL" },
            self.entry,
            self.name,
            self.computed,
            self.expected,
            self.source
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        RunReport { checks, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, entry: &str, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.entry == entry && c.name == name)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed: {}", self.checks.len(), failed, if self.pass { "PASS" } else { "FAIL" })
    }
}

type Computed = Result<Value, String>;

fn err(e: impl fmt::Display, name: &str) -> String {
    format!("{name}: {e}")
}

fn group_text(g: &AbelianGroup) -> Value {
    Value::String(g.to_string())
}

/// Evaluates one named expectation on an entry.
pub fn compute_expectation(entry: &CatalogEntry, key: &str) -> Computed {
    let (head, arg) = match key.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (key, None),
    };
    let fusion = &entry.fusion;
    let need_arg = || arg.ok_or_else(|| format!("{head} needs an argument"));
    let label = |s: &str| -> Result<EndLabel, String> {
        serde_json::from_value(Value::String(s.into())).map_err(|e| e.to_string())
    };
    let center = || entry.center.as_ref().ok_or_else(|| "no center data".to_string());
    let scenario = || entry.scenario().map_err(|e| e.to_string());
    match head {
        "valid" => Ok(json!(validate_fusion_ring(fusion).is_ok())),
        "rank" => Ok(json!(fusion.rank())),
        "profile" => Ok(json!(algebra_profile(fusion).to_string())),
        "profile_twist" => {
            let d = label(need_arg()?)?;
            let p = profile_twist(&algebra_profile(fusion), &d).map_err(|e| err(&e, e.name()))?;
            Ok(json!(p.to_string()))
        }
        "twist_obstruction" => {
            let d = label(need_arg()?)?;
            twist_obstruction(fusion, &d).map(|b| json!(b)).map_err(|e| err(&e, e.name()))
        }
        "fp_dims_multiplicative" => Ok(json!(fp_dimensions_multiplicative(fusion))),
        "invertibles" => invertibles(fusion),
        "aut_tensor_id" => aut_tensor_id(fusion).map(|g| group_text(&g)).map_err(|e| err(&e, e.name())),
        "center_valid" => Ok(json!(validate_fusion_ring(center()?).is_ok())),
        "center_invertibles" => invertibles(center()?),
        "center_aut_tensor_id" => {
            aut_tensor_id(center()?).map(|g| group_text(&g)).map_err(|e| err(&e, e.name()))
        }
        "tensorator_classes" => {
            let grading = center()?.grading.as_ref().ok_or("center has no grading")?;
            unit_cohomology_text(fusion, &grading.group, 2)
        }
        "associator_classes" => {
            let grading = fusion.grading.as_ref().ok_or("fusion data has no grading")?;
            unit_cohomology_text(fusion, &grading.group, 3)
        }
        "braided" => {
            let name = need_arg()?;
            let c = entry
                .cocycles
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| format!("no cocycle named {name}"))?;
            let (group, j) = entry.cocycle(c).map_err(|e| e.to_string())?;
            is_symmetric_cocycle(&group, &j).map(|b| json!(b)).map_err(|e| err(&e, e.name()))
        }
        "sequence_exact" => {
            let s = entry.sequence.as_ref().ok_or("no sequence data")?;
            verify_exactness(s).map(|r| json!(r.exact)).map_err(|e| err(&e, e.name()))
        }
        "brpic_order" | "brpic_type" => {
            let s = brpic(entry)?;
            Ok(if head == "brpic_order" { json!(s.order) } else { json!(s.iso_type_text()) })
        }
        "bimodule_unit_end" => {
            let b = entry.bimodule.as_ref().ok_or("no bimodule data")?;
            Ok(json!(b.ends[b.unit].to_string()))
        }
        "z2_extensions" => count_qminus_z2_extensions().map(|n| json!(n)).map_err(|e| err(&e, e.name())),
        "pw_sign_identity" => Ok(json!(pw_sign_identity_check())),
        "vecr_extensions" => {
            let g = AbelianGroup::parse(need_arg()?).map_err(|e| e.to_string())?;
            if !g.is_finite() {
                return Err("group must be finite".into());
            }
            classify_vecr_extensions(&FiniteGroup::from_abelian(&g))
                .map(|r| json!(r.len()))
                .map_err(|e| err(&e, e.name()))
        }
        "faithful" | "fixed_field_degree" => {
            let (s, e) = scenario()?;
            let r = faithfulness_check(&s, &e).map_err(|e| err(&e, e.name()))?;
            Ok(if head == "faithful" { json!(r.faithful) } else { json!(r.fixed_field_index) })
        }
        "polynomial_faithful" => {
            let (s, e) = scenario()?;
            polynomial_faithfulness(&s, &e).map(|b| json!(b)).map_err(|e| err(&e, e.name()))
        }
        "factor_degrees" => Ok(json!(tensor_unit_decomposition(&scenario()?.0))),
        "idempotents_exact" => {
            let (s, _) = scenario()?;
            grouped_idempotents(&s).map(|_| json!(true)).map_err(|e| err(&e, e.name()))
        }
        _ => Err(format!("unknown expectation `{key}`")),
    }
}

fn invertibles(data: &FusionRingData) -> Computed {
    let inv = invertible_objects(data).map_err(|e| err(&e, e.name()))?;
    let g = inv.group.ok_or("invertible objects do not form an abelian group")?;
    Ok(group_text(&g))
}

fn unit_cohomology_text(fusion: &FusionRingData, orders: &[u64], n: usize) -> Computed {
    let group = FiniteGroup::abelian(orders);
    let red = reduce_unit_coefficients(&fusion.base_field, n, &group).map_err(|e| err(&e, e.name()))?;
    Ok(group_text(&cohomology(&group, &red.module, n)))
}

fn brpic(entry: &CatalogEntry) -> Result<crate::seqkit::BrPicSolution, String> {
    let (inv, aut_t) = match &entry.center {
        Some(c) => (
            invertible_objects(c)
                .map_err(|e| err(&e, e.name()))?
                .group
                .ok_or("invertible objects do not form an abelian group")?,
            aut_tensor_id(c).map_err(|e| err(&e, e.name()))?,
        ),
        None => return Err("no center data".into()),
    };
    let field = &entry.fusion.base_field;
    let br = brauer_group(field).map_err(|e| err(&e, e.name()))?;
    let aut_br = AbelianGroup::parse(entry.aut_br.as_deref().ok_or("no aut_br data")?)
        .map_err(|e| e.to_string())?;
    let h3_trivial = matches!(h3_gm(field), Ok(H3Value::Group(g)) if g.is_trivial());
    solve_brpic(&inv, &aut_t, &br, &aut_br, h3_trivial).map_err(|e| err(&e, e.name()))
}

/// One check per expectation of every entry, in catalog order.
pub fn verify_entries(entries: &[CatalogEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    for entry in entries {
        for (key, exp) in &entry.expected {
            let computed = compute_expectation(entry, key).unwrap_or_else(|e| json!(format!("error: {e}")));
            out.push(Check {
                entry: entry.id.clone(),
                name: key.clone(),
                pass: computed == exp.value,
                computed,
                expected: exp.value.clone(),
                source: exp.source.clone(),
            });
        }
    }
    out
}

fn suite_check(name: &str, computed: Value, expected: Value, source: &str) -> Check {
    Check {
        entry: "suite".into(),
        name: name.into(),
        pass: computed == expected,
        computed,
        expected,
        source: source.into(),
    }
}

/// Groups appearing in the catalog: grading groups and Galois groups.
pub fn catalog_groups(entries: &[CatalogEntry]) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let mut push = |name: String, g: FiniteGroup| {
        if !out.iter().any(|(n, _)| *n == name) {
            out.push((name, g));
        }
    };
    for e in entries {
        for data in [Some(&e.fusion), e.center.as_ref(), e.bimodule.as_ref()].into_iter().flatten() {
            if let Some(gr) = &data.grading {
                push(AbelianGroup::finite(&gr.group).to_string(), FiniteGroup::abelian(&gr.group));
            }
        }
        if let Ok((s, _)) = e.scenario() {
            let name = match s.gamma().order() {
                6 => "S3".to_string(),
                n => AbelianGroup::cyclic(n as u64).to_string(),
            };
            push(name, s.gamma().clone());
        }
    }
    out
}

/// Largest `dⁿ⁺¹∘dⁿ` defect over `n < max_degree` with `Z` and `Z/2`
/// coefficients.
pub fn d_squared_worst(group: &FiniteGroup, max_degree: usize) -> i64 {
    let modules = [GModule::integers(group), GModule::cyclic(group, 2)];
    (0..max_degree)
        .flat_map(|n| modules.iter().map(move |m| (n, m)))
        .map(|(n, m)| d_squared_defect(group, m, n))
        .max()
        .unwrap_or(0)
}

/// Random `r×c` matrices with `1 ≤ r, c ≤ 8` and entries in `[−9, 9]`.
pub fn random_matrices(seed: u64, count: usize) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let rows: Vec<Vec<i64>> =
                (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            IntMatrix::from_rows(&rows)
        })
        .collect()
}

/// All subgroups of a group, found as subgroups generated by pairs.
pub fn two_generated_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let h = generated_subgroup(group, &[a, b]).expect("elements are in range");
            if seen.insert(h.elements().to_vec()) {
                out.push(h);
            }
        }
    }
    out
}

/// `|HgH| = |H|² / |H ∩ gHg⁻¹|` for every subgroup `H` and element `g`.
pub fn double_coset_formula_holds(group: &FiniteGroup, subs: &[Subgroup]) -> bool {
    subs.iter().all(|h| {
        (0..group.order()).all(|g| {
            let conj: BTreeSet<usize> =
                h.elements().iter().map(|&x| group.mul(group.mul(g, x), group.inv(g))).collect();
            let meet = h.elements().iter().filter(|x| conj.contains(x)).count();
            let size = double_coset(group, h, g).expect("element in range").len();
            size * meet == h.order() * h.order()
        })
    })
}

/// Property checks independent of any one entry.
pub fn property_checks(entries: &[CatalogEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, g) in catalog_groups(entries) {
        let computed = d_squared_worst(&g, 5);
        out.push(suite_check(&format!("d_squared:{name}"), json!(computed), json!(0), "d∘d = 0 in degrees ≤ 4"));
    }
    let matrices = random_matrices(SMITH_SEED, 200);
    let certified = matrices.iter().filter(|a| smith_normal_form(a).certifies(a)).count();
    out.push(suite_check("smith_random", json!(certified), json!(200), "U·A·V = D on 200 seeded random matrices"));
    let s3 = FiniteGroup::symmetric(3).group;
    let subs = two_generated_subgroups(&s3);
    out.push(suite_check(
        "double_coset_formula:S3",
        json!(subs.len() == 6 && double_coset_formula_holds(&s3, &subs)),
        json!(true),
        "|HgH| |H ∩ gHg^-1| = |H|^2 over the 6 subgroups of S3",
    ));
    let faulty = verify_exactness(&instances::q_minus_faulty())
        .map(|r| json!(r.failing_labels()))
        .unwrap_or_else(|e| json!(format!("error: {e}")));
    out.push(suite_check(
        "sequence_fault",
        faulty,
        json!(["Br", "BrPic"]),
        "an injective Br -> BrPic breaks exactness on both sides of the map",
    ));
    out
}

pub fn verify_catalog(entries: &[CatalogEntry]) -> RunReport {
    let mut checks = verify_entries(entries);
    checks.extend(property_checks(entries));
    RunReport::new(checks)
}

/// Runs every catalog expectation and the property suite on the default
/// catalog. Load failures become a single failing check.
pub fn verify_paper() -> RunReport {
    match default_catalog() {
        Ok(entries) => verify_catalog(&entries),
        Err(e) => RunReport::new(vec![Check {
            entry: "catalog".into(),
            name: "load".into(),
            computed: json!(format!("{}: {e}", e.name())),
            expected: json!("loaded"),
            source: "catalog file".into(),
            pass: false,
        }]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtin() -> Vec<CatalogEntry> {
        parse_catalog(BUILTIN_CATALOG).unwrap()
    }

    #[test]
    fn builtin_catalog_loads() {
        let c = builtin();
        assert!(c.len() >= 7);
        assert!(find(&c, "q_minus").is_some());
        assert!(parse_catalog("  \n").unwrap().is_empty());
        assert_eq!(parse_catalog("{").unwrap_err().name(), "SchemaError");
    }

    #[test]
    fn every_expectation_passes() {
        let report = verify_catalog(&builtin());
        for c in report.failures() {
            eprintln!("{c}");
        }
        assert!(report.pass);
        let n: usize = builtin().iter().map(|e| e.expected.len()).sum();
        assert_eq!(report.checks.iter().filter(|c| c.entry != "suite").count(), n);
    }

    #[test]
    fn broken_entry_is_named() {
        let mut c = builtin();
        c[1].fusion = crate::fusion::examples::q_pm_with(3);
        let text = serde_json::to_string(&c).unwrap();
        let e = parse_catalog(&text).unwrap_err();
        assert_eq!(e.name(), "ValidationError");
        assert!(e.to_string().contains("q_minus"));
    }

    #[test]
    fn altered_aut_br_is_flagged() {
        let mut c = builtin();
        let q = c.iter_mut().find(|e| e.id == "q_minus").unwrap();
        q.aut_br = Some("Z/2".into());
        let report = verify_catalog(&c);
        assert!(!report.pass);
        assert!(!report.check("q_minus", "brpic_order").unwrap().pass);
    }

    #[test]
    fn braided_j_c_is_flagged() {
        let mut c = builtin();
        let q = c.iter_mut().find(|e| e.id == "q_minus").unwrap();
        q.expected.get_mut("braided:J^c").unwrap().value = json!(true);
        let report = verify_catalog(&c);
        let failing: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["braided:J^c"]);
    }

    #[test]
    fn unknown_keys_fail_loudly() {
        let mut c = builtin();
        c[0].expected.insert("nonsense".into(), Expectation { value: json!(1), source: String::new() });
        let report = verify_catalog(&c);
        assert!(!report.check("vec_r", "nonsense").unwrap().pass);
    }
}
