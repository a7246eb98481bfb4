//! Group cohomology `Hⁿ(G; M)` of finite groups from the normalized bar
//! complex, with all linear algebra done exactly over `Z`.
//!
//! `Cⁿ(G; M)` is presented as `Z^a / Lₙ`, where `Lₙ` is spanned by `dₖ·eᵢ`
//! for each torsion coordinate. Cocycles are the lattice
//! `K = {x : dⁿx ∈ Lₙ₊₁}` and `Hⁿ = K / (Lₙ + im dⁿ⁻¹)`, read off from a
//! Smith form of the coordinates of the denominator in a basis of `K`.

mod bar;
mod cocycle;
mod module;
mod smith;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use bar::{bar_differential, cochain_dim, d_squared_defect, sparse_differential, SparseMatrix};
pub use cocycle::{
    cocycle_representatives, cocycle_representatives_bounded, is_cocycle, is_symmetric_cocycle,
    pw_exponent, pw_sign_identity_check, Cocycle, CocycleJson, DEFAULT_REPRESENTATIVE_BOUND,
};
pub use module::{GModule, ModuleInput};
pub use smith::{elementary_divisors, kernel_basis, smith_normal_form, IntMatrix, SmithForm};

use crate::abelian::AbelianGroup;
use crate::fieldtable::BaseField;
use crate::groups::FiniteGroup;
use bar::normalized_tuples;
use smith::{reduce, Track};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("too many cochains to enumerate: {size} exceeds bound {bound}")]
    TooLarge { size: u128, bound: u128 },
    #[error("cohomology group has a free part; representatives need a finite group")]
    InfiniteCohomology,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),
}

impl CohomologyError {
    pub fn name(&self) -> &'static str {
        match self {
            CohomologyError::InvalidModule(_) => "InvalidModule",
            CohomologyError::TooLarge { .. } => "TooLarge",
            CohomologyError::InfiniteCohomology => "InfiniteCohomology",
            CohomologyError::NotAbelian => "NotAbelian",
            CohomologyError::UnsupportedField(_) => "UnsupportedField",
            CohomologyError::InvalidCocycle(_) => "InvalidCocycle",
            CohomologyError::UnsupportedDegree(_) => "UnsupportedDegree",
        }
    }
}

/// `Hⁿ(G; M)` in invariant-factor form.
pub type CohomologyGroup = AbelianGroup;

/// Everything needed to move between cocycle vectors and class coordinates.
pub(crate) struct CohomologyData {
    /// Basis of the cocycle lattice `K` as columns (`a × r`).
    pub kernel_basis: IntMatrix,
    /// Row transform with `U·kernel_basis = diag(kernel_diag)`.
    kernel_u: IntMatrix,
    kernel_diag: Vec<BigInt>,
    /// Row transform of the Smith form of the denominator coordinates.
    class_u: IntMatrix,
    /// `class_u⁻¹`; its columns give class generators in `K` coordinates.
    pub class_u_inv: IntMatrix,
    /// Diagonal of that Smith form, padded with zeros to length `r`.
    pub class_diag: Vec<BigInt>,
    pub group: CohomologyGroup,
}

impl CohomologyData {
    /// Coordinates in the `K` basis of a cochain vector, or `None` if it is
    /// not a cocycle.
    pub fn kernel_coords(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let uz = self.kernel_u.mul_vec(z);
        let r = self.kernel_diag.len();
        if uz[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = Vec::with_capacity(r);
        for (x, d) in uz.iter().zip(&self.kernel_diag) {
            if !(x % d).is_zero() {
                return None;
            }
            y.push(x / d);
        }
        Some(y)
    }

    /// Class coordinates: one residue per nontrivial invariant factor, then
    /// one integer per free summand.
    pub fn class_coords(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.kernel_coords(z)?;
        let c = self.class_u.mul_vec(&y);
        let mut out = Vec::new();
        for (x, d) in c.iter().zip(&self.class_diag) {
            if d.is_zero() {
                out.push(x.clone());
            } else if !d.is_one() {
                out.push(num_integer::Integer::mod_floor(x, d));
            }
        }
        Some(out)
    }
}

fn relation_columns(module: &GModule, dim: usize) -> Vec<(usize, u64)> {
    let r = module.rank();
    (0..dim)
        .filter_map(|idx| match module.generator_order(idx % r) {
            0 => None,
            d => Some((idx, d)),
        })
        .collect()
}

pub(crate) fn compute(group: &FiniteGroup, module: &GModule, n: usize) -> CohomologyData {
    let a = cochain_dim(group, module, n);
    let b = cochain_dim(group, module, n + 1);
    let dn = sparse_differential(group, module, n);

    // cocycle lattice: kernel of [dⁿ | relations of Cⁿ⁺¹], projected to Cⁿ
    let rel_next = relation_columns(module, b);
    let mut aug = IntMatrix::zeros(b, a + rel_next.len());
    for (i, row) in dn.entries.iter().enumerate() {
        for &(j, x) in row {
            aug[(i, j)] = BigInt::from(x);
        }
    }
    for (c, &(i, d)) in rel_next.iter().enumerate() {
        aug[(i, a + c)] = BigInt::from(d);
    }
    let ker = kernel_basis(&aug);
    let gens = IntMatrix::from_columns(
        a,
        &(0..ker.ncols())
            .map(|j| ker.column(j)[..a].to_vec())
            .collect::<Vec<_>>(),
    );

    // basis of K: first r columns of gens·V, with U·(gens·V) = D
    let red = reduce(&gens, Track { u: true, v: true, ..Track::default() });
    let rk = red.rank;
    let kernel_basis = (&gens * red.v.as_ref().unwrap()).columns(0..rk);
    let kernel_diag: Vec<BigInt> = red.diagonal()[..rk].to_vec();
    let kernel_u = red.u.unwrap();

    // denominator: relations of Cⁿ plus the image of dⁿ⁻¹
    let mut denom: Vec<Vec<BigInt>> = Vec::new();
    for (idx, d) in relation_columns(module, a) {
        let mut v = vec![BigInt::zero(); a];
        v[idx] = BigInt::from(d);
        denom.push(v);
    }
    if n > 0 {
        let prev = sparse_differential(group, module, n - 1);
        for j in 0..prev.cols {
            let col = prev.column(j);
            if col.iter().any(|&x| x != 0) {
                denom.push(col.into_iter().map(BigInt::from).collect());
            }
        }
    }
    let partial = CohomologyData {
        kernel_basis: kernel_basis.clone(),
        kernel_u: kernel_u.clone(),
        kernel_diag: kernel_diag.clone(),
        class_u: IntMatrix::identity(rk),
        class_u_inv: IntMatrix::identity(rk),
        class_diag: vec![],
        group: AbelianGroup::trivial(),
    };
    let coord_cols: Vec<Vec<BigInt>> = denom
        .iter()
        .map(|s| partial.kernel_coords(s).expect("boundaries are cocycles"))
        .collect();
    let coords = IntMatrix::from_columns(rk, &coord_cols);
    let red = reduce(&coords, Track { u: true, u_inv: true, ..Track::default() });
    let mut class_diag = red.diagonal();
    class_diag.resize(rk, BigInt::zero());
    let factors: Vec<u64> = class_diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect();
    let free = class_diag.iter().filter(|d| d.is_zero()).count();
    CohomologyData {
        kernel_basis,
        kernel_u,
        kernel_diag,
        class_u: red.u.unwrap(),
        class_u_inv: red.u_inv.unwrap(),
        class_diag,
        group: AbelianGroup::finite(&factors).with_free_rank(free),
    }
}

/// `Hⁿ(G; M)`; `H⁰` is the fixed submodule `M^G`.
pub fn cohomology(group: &FiniteGroup, module: &GModule, n: usize) -> CohomologyGroup {
    compute(group, module, n).group
}

/// Finitely generated stand-in for the unit group of a field, valid as a
/// coefficient module in degrees `≥ 1` for finite groups acting trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitReduction {
    pub module: GModule,
    pub note: String,
}

/// Replaces `K^×` by a finite cyclic module:
/// `R^× ↦ Z/2` (the positive reals are uniquely divisible),
/// `C^× ↦ Z/exp(G)` (the `|G|`-torsion of `Q/Z`), `F_q^× ↦ Z/(q−1)`.
///
/// The complex truncation keeps the torsion that finite-group cochains can
/// see, but `Hⁿ(G; Z/e)` is not `Hⁿ(G; C^×)`; use [`unit_cohomology`] for the
/// latter.
pub fn reduce_unit_coefficients(
    field: &BaseField,
    n: usize,
    group: &FiniteGroup,
) -> Result<UnitReduction, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::UnsupportedDegree(0));
    }
    let (order, note) = match field {
        BaseField::Real => (2, "R^x = {±1} x R_{>0}; R_{>0} is uniquely divisible".to_string()),
        BaseField::Complex => {
            let e = group.exponent() as u64;
            (e, format!("C^x torsion Q/Z truncated to Z/{e} (exponent of G)"))
        }
        BaseField::FiniteField(q) => (q - 1, format!("F_{q}^x is cyclic of order {}", q - 1)),
        BaseField::Abstract(a) => {
            return Err(CohomologyError::UnsupportedField(format!(
                "no unit-group data for {}",
                a.name
            )))
        }
    };
    Ok(UnitReduction { module: GModule::cyclic(group, order), note })
}

/// `Hⁿ(G; K^×)` for trivial action and `n ≥ 1`. For `C` this uses
/// `Hⁿ(G; C^×) ≅ Hⁿ⁺¹(G; Z)`, from `0 → Z → C → C^× → 0`.
pub fn unit_cohomology(
    field: &BaseField,
    group: &FiniteGroup,
    n: usize,
) -> Result<CohomologyGroup, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::UnsupportedDegree(0));
    }
    match field {
        BaseField::Complex => Ok(cohomology(group, &GModule::integers(group), n + 1)),
        _ => {
            let red = reduce_unit_coefficients(field, n, group)?;
            Ok(cohomology(group, &red.module, n))
        }
    }
}

/// Converts a dense cocycle to its normalized cochain vector.
pub(crate) fn cochain_vector(
    group: &FiniteGroup,
    module: &GModule,
    cocycle: &Cocycle,
) -> Vec<BigInt> {
    let r = module.rank();
    let mut v = Vec::new();
    for t in normalized_tuples(group.order(), cocycle.degree()) {
        let val = cocycle.value(&t);
        for k in 0..r {
            v.push(BigInt::from(val[k]));
        }
    }
    v
}

/// Class coordinates of a cocycle in `Hⁿ(G; M)`, following the invariant
/// factors of [`cohomology`]. Errors if `cocycle` fails the cocycle condition
/// or is not normalized.
pub fn class_of(
    group: &FiniteGroup,
    module: &GModule,
    cocycle: &Cocycle,
) -> Result<Vec<BigInt>, CohomologyError> {
    if !cocycle.is_normalized() {
        return Err(CohomologyError::InvalidCocycle("not normalized".into()));
    }
    let data = compute(group, module, cocycle.degree());
    data.class_coords(&cochain_vector(group, module, cocycle))
        .ok_or_else(|| CohomologyError::InvalidCocycle("cocycle condition fails".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(order: usize) -> FiniteGroup {
        FiniteGroup::cyclic(order)
    }

    #[test]
    fn h0_is_fixed_points() {
        let g = z(3);
        assert_eq!(cohomology(&g, &GModule::integers(&g), 0), AbelianGroup::trivial().with_free_rank(1));
        assert_eq!(cohomology(&g, &GModule::cyclic(&g, 4), 0), AbelianGroup::cyclic(4));
        // sign action of Z/2 on Z has no fixed points
        let z2 = z(2);
        let sign = GModule::new(&z2, 1, vec![], vec![vec![vec![1]], vec![vec![-1]]]).unwrap();
        assert!(cohomology(&z2, &sign, 0).is_trivial());
        assert_eq!(cohomology(&z2, &sign, 1), AbelianGroup::cyclic(2));
    }

    #[test]
    fn cyclic_groups_with_integer_coefficients() {
        for order in 2..=4 {
            let g = z(order);
            let m = GModule::integers(&g);
            assert!(cohomology(&g, &m, 1).is_trivial());
            assert_eq!(cohomology(&g, &m, 2), AbelianGroup::cyclic(order as u64));
            assert!(cohomology(&g, &m, 3).is_trivial());
        }
    }

    #[test]
    fn klein_four_with_z2_coefficients() {
        let g = FiniteGroup::abelian(&[2, 2]);
        let m = GModule::cyclic(&g, 2);
        assert_eq!(cohomology(&g, &m, 1), AbelianGroup::elementary(2, 2));
        assert_eq!(cohomology(&g, &m, 2), AbelianGroup::elementary(2, 3));
        assert_eq!(cohomology(&g, &m, 3), AbelianGroup::elementary(2, 4));
    }

    #[test]
    fn unit_coefficients() {
        let z2 = z(2);
        let r = reduce_unit_coefficients(&BaseField::Real, 2, &z2).unwrap();
        assert_eq!(r.module, GModule::cyclic(&z2, 2));
        let c = reduce_unit_coefficients(&BaseField::Complex, 2, &z2).unwrap();
        assert_eq!(c.module, GModule::cyclic(&z2, 2));
        assert!(c.note.contains("Z/2"));
        let f3 = reduce_unit_coefficients(&BaseField::FiniteField(3), 1, &z2).unwrap();
        assert_eq!(f3.module, GModule::cyclic(&z2, 2));
        assert!(matches!(
            reduce_unit_coefficients(&BaseField::complex_rational_functions_3(), 1, &z2),
            Err(CohomologyError::UnsupportedField(_))
        ));
        // the truncated module has H² = Z/2, but H²(Z/2; C^×) = H³(Z/2; Z) = 0
        assert_eq!(cohomology(&z2, &c.module, 2), AbelianGroup::cyclic(2));
        assert!(unit_cohomology(&BaseField::Complex, &z2, 2).unwrap().is_trivial());
        assert_eq!(unit_cohomology(&BaseField::Complex, &z2, 3).unwrap(), AbelianGroup::cyclic(2));
        assert_eq!(unit_cohomology(&BaseField::Real, &z2, 2).unwrap(), AbelianGroup::cyclic(2));
    }

    #[test]
    fn odd_order_kills_two_torsion() {
        let g = z(3);
        let m = reduce_unit_coefficients(&BaseField::Real, 3, &g).unwrap().module;
        assert!(cohomology(&g, &m, 3).is_trivial());
        assert!(cohomology(&g, &m, 2).is_trivial());
    }
}
