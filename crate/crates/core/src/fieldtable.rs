//! Curated Galois-cohomology invariants `Hⁿ(K; G_m)` of supported base fields.
//!
//! Nothing here is computed: each entry is a classical fact stored with a
//! short note naming where it comes from.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::abelian::AbelianGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}

impl FieldError {
    pub fn name(&self) -> &'static str {
        match self {
            FieldError::UnsupportedField(_) => "UnsupportedField",
            FieldError::NotPrimePower(_) => "NotPrimePower",
        }
    }
}

/// Third cohomology with unit coefficients, which may be known only to be
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H3Value {
    Group(AbelianGroup),
    NontrivialUnknown,
}

impl H3Value {
    pub fn is_trivial(&self) -> bool {
        matches!(self, H3Value::Group(g) if g.is_trivial())
    }
}

impl fmt::Display for H3Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H3Value::Group(g) => write!(f, "{g}"),
            H3Value::NontrivialUnknown => write!(f, "nontrivial-unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractField {
    pub name: String,
    pub br: Option<AbelianGroup>,
    pub h3: Option<H3Value>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseField {
    Real,
    Complex,
    FiniteField(u64),
    Abstract(AbstractField),
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q % p == 0).unwrap();
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    r == 1
}

impl BaseField {
    pub fn finite(q: u64) -> Result<Self, FieldError> {
        if is_prime_power(q) {
            Ok(BaseField::FiniteField(q))
        } else {
            Err(FieldError::NotPrimePower(q))
        }
    }

    pub fn abstract_field(name: &str, br: Option<AbelianGroup>, h3: Option<H3Value>) -> Self {
        BaseField::Abstract(AbstractField { name: name.into(), br, h3 })
    }

    /// The function field `C(x,y,z)`, the standard example with nonzero
    /// `H³(K; G_m)`.
    pub fn complex_rational_functions_3() -> Self {
        Self::abstract_field("C(x,y,z)", None, Some(H3Value::NontrivialUnknown))
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        match self {
            BaseField::FiniteField(q) if !is_prime_power(*q) => Err(FieldError::NotPrimePower(*q)),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            BaseField::Real => "R".into(),
            BaseField::Complex => "C".into(),
            BaseField::FiniteField(q) => format!("F_{q}"),
            BaseField::Abstract(a) => a.name.clone(),
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum H3Repr {
    Factors(Vec<u64>),
    Flag(String),
}

#[derive(Serialize, Deserialize)]
struct AbstractRepr {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    br: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h3: Option<H3Repr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Named(String),
    Finite {
        #[serde(rename = "Fq")]
        fq: u64,
    },
    Abstract {
        #[serde(rename = "abstract")]
        data: AbstractRepr,
    },
}

impl Serialize for BaseField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            BaseField::Real => FieldRepr::Named("R".into()),
            BaseField::Complex => FieldRepr::Named("C".into()),
            BaseField::FiniteField(q) => FieldRepr::Finite { fq: *q },
            BaseField::Abstract(a) => FieldRepr::Abstract {
                data: AbstractRepr {
                    name: a.name.clone(),
                    br: a.br.as_ref().map(|g| g.invariant_factors.clone()),
                    h3: a.h3.as_ref().map(|h| match h {
                        H3Value::Group(g) => H3Repr::Factors(g.invariant_factors.clone()),
                        H3Value::NontrivialUnknown => H3Repr::Flag("nontrivial-unknown".into()),
                    }),
                },
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BaseField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let field = match FieldRepr::deserialize(d)? {
            FieldRepr::Named(n) => match n.as_str() {
                "R" => BaseField::Real,
                "C" => BaseField::Complex,
                other => return Err(D::Error::custom(format!("unknown field `{other}`"))),
            },
            FieldRepr::Finite { fq } => BaseField::finite(fq).map_err(D::Error::custom)?,
            FieldRepr::Abstract { data } => {
                let h3 = match data.h3 {
                    None => None,
                    Some(H3Repr::Factors(f)) => Some(H3Value::Group(AbelianGroup::finite(&f))),
                    Some(H3Repr::Flag(s)) if s == "nontrivial-unknown" => {
                        Some(H3Value::NontrivialUnknown)
                    }
                    Some(H3Repr::Flag(s)) => {
                        return Err(D::Error::custom(format!("unknown h3 flag `{s}`")))
                    }
                };
                BaseField::Abstract(AbstractField {
                    name: data.name,
                    br: data.br.map(|f| AbelianGroup::finite(&f)),
                    h3,
                })
            }
        };
        Ok(field)
    }
}

/// The field descriptor file: `{"kind": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub kind: BaseField,
}

/// `Br(K) = H²(K; G_m)`.
pub fn brauer_group(field: &BaseField) -> Result<AbelianGroup, FieldError> {
    match field {
        // Frobenius: the only real central division algebras are R and H
        BaseField::Real => Ok(AbelianGroup::cyclic(2)),
        BaseField::Complex => Ok(AbelianGroup::trivial()),
        // Wedderburn: finite division rings are commutative
        BaseField::FiniteField(_) => Ok(AbelianGroup::trivial()),
        BaseField::Abstract(a) => a
            .br
            .clone()
            .ok_or_else(|| FieldError::UnsupportedField(format!("no Brauer group supplied for {}", a.name))),
    }
}

/// Hilbert's Theorem 90: always trivial.
pub fn h1_gm(_field: &BaseField) -> AbelianGroup {
    AbelianGroup::trivial()
}

pub fn h3_gm(field: &BaseField) -> Result<H3Value, FieldError> {
    match field {
        // cohomological dimension: R has periodic 2-torsion cohomology with
        // H³(R; G_m) = H¹(Z/2; C^×) = 0; C and finite fields have cd ≤ 1
        BaseField::Real | BaseField::Complex | BaseField::FiniteField(_) => {
            Ok(H3Value::Group(AbelianGroup::trivial()))
        }
        BaseField::Abstract(a) => a
            .h3
            .clone()
            .ok_or_else(|| FieldError::UnsupportedField(format!("no H^3 data supplied for {}", a.name))),
    }
}

/// Whether the `k⁴` Postnikov invariant of the Brauer–Picard space of
/// `Vec_K` is known to vanish. Only the real case is recorded; it follows
/// from the existence of quaternionic `Z/2`-extensions of `Vec_R`.
pub fn postnikov_k4_trivial(field: &BaseField) -> Option<bool> {
    match field {
        BaseField::Real => Some(true),
        _ => None,
    }
}

/// The column `H⁰ … H³` of `G_m`-cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmColumn {
    pub h0: String,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub h3: H3Value,
    pub notes: Vec<&'static str>,
}

pub fn gm_column(field: &BaseField) -> Result<GmColumn, FieldError> {
    field.validate()?;
    let h0 = match field {
        BaseField::FiniteField(q) => format!("F_{q}^x = Z/{}", q - 1),
        other => format!("{}^x (infinite)", other.name()),
    };
    Ok(GmColumn {
        h0,
        h1: h1_gm(field),
        h2: brauer_group(field)?,
        h3: h3_gm(field)?,
        notes: vec![
            "H^1 vanishes by Hilbert's Theorem 90",
            "H^2 is the Brauer group",
        ],
    })
}
