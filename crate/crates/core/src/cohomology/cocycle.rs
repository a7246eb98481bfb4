use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::module::GModule;
use super::{compute, CohomologyError};
use crate::groups::FiniteGroup;

/// Default cap on `|Hⁿ| · |G|ⁿ` when enumerating representatives.
pub const DEFAULT_REPRESENTATIVE_BOUND: u128 = 1 << 22;

/// An n-cochain stored densely on all of `Gⁿ`, values reduced in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    degree: usize,
    order: usize,
    rank: usize,
    values: Vec<Vec<i64>>,
}

fn all_tuples(order: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = order.pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = idx % order;
            idx /= order;
        }
        t
    })
}

impl Cocycle {
    pub fn from_fn<F>(group: &FiniteGroup, module: &GModule, degree: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> Vec<i64>,
    {
        let values = all_tuples(group.order(), degree)
            .map(|t| {
                let mut v = f(&t);
                assert_eq!(v.len(), module.rank(), "value has wrong rank");
                module.reduce(&mut v);
                v
            })
            .collect();
        Cocycle { degree, order: group.order(), rank: module.rank(), values }
    }

    /// Scalar-valued cochain into a module with one generator.
    pub fn scalar<F>(group: &FiniteGroup, module: &GModule, degree: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> i64,
    {
        Self::from_fn(group, module, degree, |t| vec![f(t)])
    }

    pub(crate) fn from_normalized_vector(
        group: &FiniteGroup,
        module: &GModule,
        degree: usize,
        v: &[BigInt],
    ) -> Self {
        let r = module.rank();
        let base = group.order() - 1;
        Self::from_fn(group, module, degree, |t| {
            match super::bar::normalized_index(base, t) {
                None => vec![0; r],
                Some(idx) => (0..r)
                    .map(|k| {
                        let x = &v[idx * r + k];
                        let x = match module.generator_order(k) {
                            0 => x.clone(),
                            d => num_integer::Integer::mod_floor(x, &BigInt::from(d)),
                        };
                        x.to_i64().expect("cocycle value fits in i64")
                    })
                    .collect(),
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &g| acc * self.order + g)
    }

    pub fn value(&self, tuple: &[usize]) -> &[i64] {
        &self.values[self.index(tuple)]
    }

    /// Vanishes whenever an argument is the identity.
    pub fn is_normalized(&self) -> bool {
        all_tuples(self.order, self.degree)
            .zip(&self.values)
            .all(|(t, v)| !t.contains(&0) || v.iter().all(|&x| x == 0))
    }

    /// `{"degree": n, "values": [[g₁, …, gₙ, value], …]}` with a bare integer
    /// value for one-generator modules and an array otherwise.
    pub fn to_json(&self) -> CocycleJson {
        let values = all_tuples(self.order, self.degree)
            .zip(&self.values)
            .map(|(t, v)| {
                let mut row: Vec<Value> = t.into_iter().map(Value::from).collect();
                if self.rank == 1 {
                    row.push(Value::from(v[0]));
                } else {
                    row.push(Value::from(v.clone()));
                }
                row
            })
            .collect();
        CocycleJson { degree: self.degree, values }
    }

    pub fn from_json(
        group: &FiniteGroup,
        module: &GModule,
        json: &CocycleJson,
    ) -> Result<Self, CohomologyError> {
        let n = json.degree;
        let r = module.rank();
        let mut values = vec![vec![0; r]; group.order().pow(n as u32)];
        let bad = |m: &str| CohomologyError::InvalidCocycle(m.to_string());
        for row in &json.values {
            if row.len() != n + 1 {
                return Err(bad("row length must be degree + 1"));
            }
            let mut idx = 0;
            for x in &row[..n] {
                let g = x.as_u64().ok_or_else(|| bad("tuple entries must be indices"))? as usize;
                if g >= group.order() {
                    return Err(bad("tuple entry out of range"));
                }
                idx = idx * group.order() + g;
            }
            let mut v = match &row[n] {
                Value::Number(x) => vec![x.as_i64().ok_or_else(|| bad("value must be an integer"))?],
                Value::Array(xs) => xs
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| bad("value must be integers")))
                    .collect::<Result<_, _>>()?,
                _ => return Err(bad("value must be an integer or array")),
            };
            if v.len() != r {
                return Err(bad("value rank does not match the module"));
            }
            module.reduce(&mut v);
            values[idx] = v;
        }
        Ok(Cocycle { degree: n, order: group.order(), rank: r, values })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub degree: usize,
    pub values: Vec<Vec<Value>>,
}

/// Evaluates the bar differential pointwise on all of `Gⁿ⁺¹` (identity
/// arguments included) and checks that it vanishes.
pub fn is_cocycle(group: &FiniteGroup, module: &GModule, f: &Cocycle) -> bool {
    let n = f.degree;
    let r = module.rank();
    for s in all_tuples(group.order(), n + 1) {
        let mut acc = module.act(s[0], f.value(&s[1..]));
        for i in 1..=n {
            let mut merged = s[..i - 1].to_vec();
            merged.push(group.mul(s[i - 1], s[i]));
            merged.extend_from_slice(&s[i + 1..]);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for k in 0..r {
                acc[k] += sign * f.value(&merged)[k];
            }
        }
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        for k in 0..r {
            acc[k] += sign * f.value(&s[..n])[k];
        }
        module.reduce(&mut acc);
        if acc.iter().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

/// One normalized cocycle per class of `Hⁿ(G; M)`, in mixed-radix order of
/// the class coordinates (first invariant factor slowest). Class `0` is the
/// zero cocycle.
pub fn cocycle_representatives(
    group: &FiniteGroup,
    module: &GModule,
    n: usize,
) -> Result<Vec<Cocycle>, CohomologyError> {
    cocycle_representatives_bounded(group, module, n, DEFAULT_REPRESENTATIVE_BOUND)
}

pub fn cocycle_representatives_bounded(
    group: &FiniteGroup,
    module: &GModule,
    n: usize,
    bound: u128,
) -> Result<Vec<Cocycle>, CohomologyError> {
    let data = compute(group, module, n);
    if data.group.free_rank > 0 {
        return Err(CohomologyError::InfiniteCohomology);
    }
    let classes = data.group.order().unwrap() as u128;
    let size = classes.saturating_mul((group.order() as u128).saturating_pow(n as u32));
    if size > bound {
        return Err(CohomologyError::TooLarge { size, bound });
    }
    let a = data.kernel_basis.nrows();
    let mut gens: Vec<(u64, Vec<BigInt>)> = Vec::new();
    for (i, d) in data.class_diag.iter().enumerate() {
        if d.is_zero() || *d == BigInt::from(1) {
            continue;
        }
        let y = data.class_u_inv.column(i);
        gens.push((d.to_u64().unwrap(), data.kernel_basis.mul_vec(&y)));
    }
    let mut reps = Vec::with_capacity(classes as usize);
    let mut digits = vec![0u64; gens.len()];
    loop {
        let mut v = vec![BigInt::zero(); a];
        for ((_, g), &k) in gens.iter().zip(&digits) {
            if k != 0 {
                for (x, y) in v.iter_mut().zip(g) {
                    *x += y * k;
                }
            }
        }
        reps.push(Cocycle::from_normalized_vector(group, module, n, &v));
        // increment, last digit fastest
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(reps);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < gens[pos].0 {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// `J(g, h) = J(h, g)` for all `g, h`, the braiding condition on a scalar
/// tensorator of an identity-on-objects autoequivalence.
pub fn is_symmetric_cocycle(group: &FiniteGroup, j: &Cocycle) -> Result<bool, CohomologyError> {
    if !group.is_abelian() {
        return Err(CohomologyError::NotAbelian);
    }
    if j.degree != 2 {
        return Err(CohomologyError::InvalidCocycle(format!(
            "expected degree 2, got {}",
            j.degree
        )));
    }
    let n = group.order();
    Ok((0..n).all(|g| (0..n).all(|h| j.value(&[g, h]) == j.value(&[h, g]))))
}

/// Exponent `f·g·h·k·(g + 2h + k)` of the sign produced by the two
/// tensorator factors in the Pontryagin–Whitehead composite.
pub fn pw_exponent(f: u8, g: u8, h: u8, k: u8) -> u32 {
    let (f, g, h, k) = (f as u32, g as u32, h as u32, k as u32);
    f * g * h * k * (g + 2 * h + k)
}

/// `(−1)^{fghk(g+2h+k)} = 1` for every `f, g, h, k ∈ {0, 1}`.
pub fn pw_sign_identity_check() -> bool {
    (0..16u8).all(|bits| {
        let b = |i: u8| (bits >> i) & 1;
        pw_exponent(b(3), b(2), b(1), b(0)) % 2 == 0
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::AbelianGroup;

    fn klein() -> FiniteGroup {
        FiniteGroup::abelian(&[2, 2])
    }

    /// Element index `2i + j` is `M^i Y^j`.
    fn bits(g: usize) -> (i64, i64) {
        ((g / 2) as i64, (g % 2) as i64)
    }

    fn j_a(g: &FiniteGroup, m: &GModule) -> Cocycle {
        Cocycle::scalar(g, m, 2, |t| bits(t[0]).0 * bits(t[1]).0)
    }
    fn j_b(g: &FiniteGroup, m: &GModule) -> Cocycle {
        Cocycle::scalar(g, m, 2, |t| bits(t[0]).1 * bits(t[1]).1)
    }
    fn j_c(g: &FiniteGroup, m: &GModule) -> Cocycle {
        Cocycle::scalar(g, m, 2, |t| bits(t[0]).0 * bits(t[1]).1)
    }

    #[test]
    fn klein_four_representatives() {
        let g = klein();
        let m = GModule::cyclic(&g, 2);
        let reps = cocycle_representatives(&g, &m, 2).unwrap();
        assert_eq!(reps.len(), 8);
        for r in &reps {
            assert!(r.is_normalized());
            assert!(is_cocycle(&g, &m, r));
        }
        for j in [j_a(&g, &m), j_b(&g, &m), j_c(&g, &m)] {
            assert!(is_cocycle(&g, &m, &j));
            let class = super::super::class_of(&g, &m, &j).unwrap();
            let matching = reps
                .iter()
                .filter(|r| super::super::class_of(&g, &m, r).unwrap() == class)
                .count();
            assert_eq!(matching, 1);
        }
    }

    #[test]
    fn symmetric_tensorators() {
        let g = klein();
        let m = GModule::cyclic(&g, 2);
        assert!(is_symmetric_cocycle(&g, &j_a(&g, &m)).unwrap());
        assert!(is_symmetric_cocycle(&g, &j_b(&g, &m)).unwrap());
        assert!(!is_symmetric_cocycle(&g, &j_c(&g, &m)).unwrap());
        let s3 = FiniteGroup::symmetric(3).group;
        let m3 = GModule::cyclic(&s3, 2);
        let zero = Cocycle::scalar(&s3, &m3, 2, |_| 0);
        assert_eq!(is_symmetric_cocycle(&s3, &zero), Err(CohomologyError::NotAbelian));
    }

    #[test]
    fn one_cocycles_are_homomorphisms() {
        let g = FiniteGroup::abelian(&[2, 4]);
        let m = GModule::cyclic(&g, 2);
        let reps = cocycle_representatives(&g, &m, 1).unwrap();
        assert_eq!(reps.len(), 4);
        for r in &reps {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let lhs = r.value(&[g.mul(a, b)])[0];
                    let rhs = (r.value(&[a])[0] + r.value(&[b])[0]) % 2;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn z3_has_only_zero_class() {
        let g = FiniteGroup::cyclic(3);
        let m = GModule::cyclic(&g, 2);
        let reps = cocycle_representatives(&g, &m, 2).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].values.iter().all(|v| v[0] == 0));
    }

    #[test]
    fn bounds_and_free_parts() {
        let g = FiniteGroup::cyclic(2);
        let m = GModule::cyclic(&g, 2);
        assert!(matches!(
            cocycle_representatives_bounded(&g, &m, 3, 4),
            Err(CohomologyError::TooLarge { .. })
        ));
        let z = GModule::integers(&g);
        assert_eq!(
            cocycle_representatives(&g, &z, 0),
            Err(CohomologyError::InfiniteCohomology)
        );
        assert_eq!(super::super::cohomology(&g, &z, 0), AbelianGroup::trivial().with_free_rank(1));
    }

    #[test]
    fn pw_identity() {
        assert!(pw_sign_identity_check());
        for bits in 0..8u8 {
            assert_eq!(pw_exponent(0, bits >> 2 & 1, bits >> 1 & 1, bits & 1), 0);
        }
        assert_eq!(pw_exponent(1, 1, 1, 1), 4);
    }

    #[test]
    fn json_round_trip() {
        let g = klein();
        let m = GModule::cyclic(&g, 2);
        let c = j_c(&g, &m);
        let json = c.to_json();
        assert_eq!(json.values.len(), 16);
        let text = serde_json::to_string(&json).unwrap();
        let back: CocycleJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Cocycle::from_json(&g, &m, &back).unwrap(), c);
    }
}
