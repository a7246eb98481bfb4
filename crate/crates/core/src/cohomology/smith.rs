//! Dense integer matrices over `BigInt` and the Smith normal form.
//!
//! Pivoting always picks the smallest nonzero absolute value in the active
//! block, and reductions use the nearest-integer quotient, which keeps entry
//! growth small at the sizes the bar complex produces.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().map(|&x| x.into())).collect(),
        }
    }

    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Keeps the columns in `range`.
    pub fn columns(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let mut m = Self::zeros(self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += q · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = s * q;
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// `col[dst] += q · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = s * q;
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`,
/// all `dᵢ ≥ 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Which transforms to accumulate alongside the reduction.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Track {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

#[derive(Debug)]
pub(crate) struct Reduction {
    pub d: IntMatrix,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
}

impl Reduction {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Nearest-integer quotient, so the remainder has absolute value ≤ |p|/2.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(p);
    let twice: BigInt = &r * 2;
    // floor division leaves r with the sign of p, so q + 1 moves r toward 0
    if twice.abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

struct Reducer {
    d: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(a, b);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = self.v.as_mut() {
            v.swap_cols(a, b);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            vi.swap_rows(a, b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_row(dst, src, q);
        if let Some(u) = self.u.as_mut() {
            u.add_row(dst, src, q);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.add_col(src, dst, &-q);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_col(dst, src, q);
        if let Some(v) = self.v.as_mut() {
            v.add_col(dst, src, q);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            vi.add_row(src, dst, &-q);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.d.negate_row(r);
        if let Some(u) = self.u.as_mut() {
            u.negate_row(r);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            ui.negate_col(r);
        }
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().map_or(true, |(_, _, b)| a < *b) {
                    let done = a.is_one();
                    best = Some((i, j, a));
                    if done {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry in row `t` / column `t` beyond the pivot.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        let mut consider = |i: usize, j: usize, x: &BigInt| {
            if !x.is_zero() {
                let a = x.abs();
                if best.as_ref().map_or(true, |(_, _, b)| a < *b) {
                    best = Some((i, j, a));
                }
            }
        };
        for i in t..self.d.rows {
            consider(i, t, &self.d[(i, t)]);
        }
        for j in t + 1..self.d.cols {
            consider(t, j, &self.d[(t, j)]);
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(mut self) -> Reduction {
        let (m, n) = (self.d.rows, self.d.cols);
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = self.min_in_block(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.d[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m {
                    if !self.d[(i, t)].is_zero() {
                        let q = nearest_quotient(&self.d[(i, t)], &p);
                        self.add_row(i, t, &-q);
                        clean &= self.d[(i, t)].is_zero();
                    }
                }
                for j in t + 1..n {
                    if !self.d[(t, j)].is_zero() {
                        let q = nearest_quotient(&self.d[(t, j)], &p);
                        self.add_col(j, t, &-q);
                        clean &= self.d[(t, j)].is_zero();
                    }
                }
                if !clean {
                    let (i, j) = self.min_in_cross(t).expect("pivot is nonzero");
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                // divisibility: fold an offending row into the pivot row
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.d[(i, j)].is_multiple_of(&p))
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.d[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        Reduction {
            d: self.d,
            u: self.u,
            u_inv: self.u_inv,
            v: self.v,
            v_inv: self.v_inv,
            rank: t,
        }
    }
}

pub(crate) fn reduce(a: &IntMatrix, track: Track) -> Reduction {
    let (m, n) = (a.rows, a.cols);
    Reducer {
        d: a.clone(),
        u: track.u.then(|| IntMatrix::identity(m)),
        u_inv: track.u_inv.then(|| IntMatrix::identity(m)),
        v: track.v.then(|| IntMatrix::identity(n)),
        v_inv: track.v_inv.then(|| IntMatrix::identity(n)),
    }
    .run()
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let r = reduce(a, Track { u: true, v: true, ..Track::default() });
    SmithForm { u: r.u.unwrap(), d: r.d, v: r.v.unwrap() }
}

impl SmithForm {
    /// `U·A·V = D`, `U` and `V` unimodular, `D` diagonal with a nonnegative
    /// divisibility chain.
    pub fn certifies(&self, a: &IntMatrix) -> bool {
        if &(&self.u * a) * &self.v != self.d
            || !self.u.determinant().abs().is_one()
            || !self.v.determinant().abs().is_one()
        {
            return false;
        }
        let off_diagonal_zero = (0..self.d.rows)
            .all(|i| (0..self.d.cols).all(|j| i == j || self.d[(i, j)].is_zero()));
        let chain = self.diagonal().windows(2).all(|w| {
            !w[0].is_negative()
                && !w[1].is_negative()
                && if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) }
        });
        off_diagonal_zero && chain && self.diagonal().iter().all(|x| !x.is_negative())
    }
}

/// Nonzero diagonal entries of the Smith form, without transforms.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<BigInt> {
    reduce(a, Track::default()).diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

/// A lattice basis of `{x : A·x = 0}`, as columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let r = reduce(a, Track { v: true, ..Track::default() });
    let v = r.v.unwrap();
    v.columns(r.rank..a.cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        for i in 0..s.d.nrows() {
            for j in 0..s.d.ncols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn negative_pivots_terminate() {
        check(&m(&[vec![7, -8, 9, 3], vec![9, 5, -6, 7], vec![9, -6, 7, -3], vec![7, 6, 2, 0]]));
        for a in -12i64..=12 {
            for p in [-5i64, -4, 4, 5] {
                let q = nearest_quotient(&a.into(), &p.into());
                let r = a - i64::try_from(q).unwrap() * p;
                assert!(2 * r.abs() <= p.abs(), "a={a} p={p} r={r}");
            }
        }
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn gcd_lcm_normalization() {
        let s = check(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn rectangular_and_negative() {
        let s = check(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        check(&m(&[vec![0, 0, 5], vec![0, 7, 0]]));
        check(&m(&[vec![4], vec![6], vec![-9]]));
    }

    #[test]
    fn kernel_of_a_rank_one_map() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.ncols(), 2);
        assert!((&a * &k).is_zero());
        // saturated: the kernel basis extends to a unimodular matrix
        assert_eq!(elementary_divisors(&k), vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn inverse_transforms_are_inverses() {
        let a = m(&[vec![3, 5, 7], vec![2, 4, 8], vec![1, 1, 9]]);
        let r = reduce(&a, Track { u: true, u_inv: true, v: true, v_inv: true });
        assert_eq!(&r.u.unwrap() * r.u_inv.as_ref().unwrap(), IntMatrix::identity(3));
        assert_eq!(&r.v.unwrap() * r.v_inv.as_ref().unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(m(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(
            m(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]).determinant(),
            BigInt::from(-3)
        );
    }
}
