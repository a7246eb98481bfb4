//! Normalized bar complex `Cⁿ(G; M)`.
//!
//! A normalized n-cochain is determined by its values on tuples of
//! non-identity elements. Tuple `(g₁, …, gₙ)` with every `gᵢ ≠ e` is indexed
//! in base `|G|−1` (first entry most significant), and coordinate `k` of its
//! value sits at `tuple_index · rank(M) + k`.

use num_bigint::BigInt;

use super::module::GModule;
use super::smith::IntMatrix;
use crate::groups::FiniteGroup;

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, x) in row {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    /// `self · v` for an integer vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&(j, x)| x * v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().find(|(c, _)| *c == j).map_or(0, |&(_, x)| x))
            .collect()
    }
}

/// Dimension of the normalized cochain group `Cⁿ` as a count of cyclic
/// generators.
pub fn cochain_dim(group: &FiniteGroup, module: &GModule, n: usize) -> usize {
    (group.order() - 1).pow(n as u32) * module.rank()
}

/// Index of a tuple of non-identity elements, `None` if any entry is `e`.
pub(crate) fn normalized_index(base: usize, tuple: &[usize]) -> Option<usize> {
    let mut idx = 0;
    for &g in tuple {
        if g == 0 {
            return None;
        }
        idx = idx * base + (g - 1);
    }
    Some(idx)
}

/// All tuples of non-identity elements of length `n`, in index order.
pub(crate) fn normalized_tuples(order: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * (order - 1));
        for t in &out {
            for g in 1..order {
                let mut s = t.clone();
                s.push(g);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// Matrix of `dⁿ : Cⁿ → Cⁿ⁺¹`,
/// `df(g₀,…,gₙ) = g₀·f(g₁,…,gₙ) + Σᵢ (−1)ⁱ f(…, gᵢ₋₁gᵢ, …) + (−1)ⁿ⁺¹ f(g₀,…,gₙ₋₁)`,
/// with entries in torsion rows reduced to `[0, d)`.
pub fn sparse_differential(group: &FiniteGroup, module: &GModule, n: usize) -> SparseMatrix {
    let order = group.order();
    let base = order - 1;
    let r = module.rank();
    let rows = cochain_dim(group, module, n + 1);
    let cols = cochain_dim(group, module, n);
    let mut entries = Vec::with_capacity(rows);
    for s in normalized_tuples(order, n + 1) {
        // accumulate per (source tuple) the scalar or matrix contribution
        let mut blocks: Vec<(usize, Vec<Vec<i64>>)> = Vec::new();
        let add_scalar = |t: usize, c: i64, blocks: &mut Vec<(usize, Vec<Vec<i64>>)>| {
            let pos = match blocks.iter().position(|(u, _)| *u == t) {
                Some(p) => p,
                None => {
                    blocks.push((t, vec![vec![0; r]; r]));
                    blocks.len() - 1
                }
            };
            for k in 0..r {
                blocks[pos].1[k][k] += c;
            }
        };
        // g₀ · f(g₁, …, gₙ)
        let t0 = normalized_index(base, &s[1..]).expect("entries are non-identity");
        let a = module.action(s[0]);
        blocks.push((t0, a.to_vec()));
        for i in 1..=n {
            let prod = group.mul(s[i - 1], s[i]);
            let mut merged = Vec::with_capacity(n);
            merged.extend_from_slice(&s[..i - 1]);
            merged.push(prod);
            merged.extend_from_slice(&s[i + 1..]);
            if let Some(t) = normalized_index(base, &merged) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                add_scalar(t, sign, &mut blocks);
            }
        }
        let tl = normalized_index(base, &s[..n]).expect("entries are non-identity");
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        add_scalar(tl, sign, &mut blocks);

        for k in 0..r {
            let mut row: Vec<(usize, i64)> = Vec::new();
            for (t, m) in &blocks {
                for (j, &x) in m[k].iter().enumerate() {
                    let x = module.reduce_coord(k, x);
                    if x != 0 {
                        row.push((t * r + j, x));
                    }
                }
            }
            // blocks are keyed by distinct source tuples, so columns never repeat
            row.sort_unstable();
            entries.push(row);
        }
    }
    SparseMatrix { rows, cols, entries }
}

/// Dense matrix of the normalized bar differential `dⁿ`.
pub fn bar_differential(group: &FiniteGroup, module: &GModule, n: usize) -> IntMatrix {
    sparse_differential(group, module, n).to_dense()
}

/// Largest absolute entry of `dⁿ⁺¹ ∘ dⁿ` after reducing torsion rows; zero for
/// a chain complex.
pub fn d_squared_defect(group: &FiniteGroup, module: &GModule, n: usize) -> i64 {
    let d0 = sparse_differential(group, module, n);
    let d1 = sparse_differential(group, module, n + 1);
    let mut worst = 0;
    for j in 0..d0.cols {
        let col = d0.column(j);
        let mut image = d1.apply(&col);
        for (idx, x) in image.iter_mut().enumerate() {
            *x = module.reduce_coord(idx % module.rank().max(1), *x);
        }
        worst = image.iter().fold(worst, |w, x| w.max(x.abs()));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_on_trivial_group_is_empty() {
        let g = FiniteGroup::cyclic(1);
        let m = GModule::integers(&g);
        let d = bar_differential(&g, &m, 0);
        assert_eq!((d.nrows(), d.ncols()), (0, 1));
        assert!(d.is_zero());
    }

    #[test]
    fn z2_degree_one_pattern() {
        // C¹ and C² are both Z (one non-identity element); d¹f(s,s) = f(s) - f(e) + f(s) = 2f(s)
        let g = FiniteGroup::cyclic(2);
        let m = GModule::integers(&g);
        let d1 = bar_differential(&g, &m, 1);
        assert_eq!(d1, IntMatrix::from_rows(&[vec![2i64]]));
        let d0 = bar_differential(&g, &m, 0);
        assert!(d0.is_zero());
        let d2 = bar_differential(&g, &m, 2);
        assert!(d2.is_zero());
    }

    #[test]
    fn d_squared_vanishes() {
        for order in 1..=4 {
            let g = FiniteGroup::cyclic(order);
            for m in [GModule::integers(&g), GModule::cyclic(&g, 2), GModule::cyclic(&g, 4)] {
                for n in 0..=3 {
                    assert_eq!(d_squared_defect(&g, &m, n), 0, "order {order} degree {n}");
                }
            }
        }
    }

    #[test]
    fn d_squared_vanishes_for_sign_action() {
        let g = FiniteGroup::cyclic(2);
        let m = GModule::new(&g, 1, vec![], vec![vec![vec![1]], vec![vec![-1]]]).unwrap();
        for n in 0..=4 {
            assert_eq!(d_squared_defect(&g, &m, n), 0);
        }
    }
}
