//! Dense univariate polynomials over `Q`, with the real-root tools needed for
//! Frobenius–Perron dimensions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            r.pop();
            q[k] = c;
            while r.last().is_some_and(Zero::is_zero) && r.len() > dd {
                r.pop();
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g = gcd(self, other)`.
    pub fn extended_gcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&self.gcd(&self.derivative())).0.monic()
    }

    /// Sturm sequence `p, p', −rem(p, p'), …`.
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            seq.push(-&r);
        }
        seq.pop();
        seq
    }

    /// Distinct real roots in the half-open interval `(a, b]`; `self` must be
    /// squarefree.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        sign_changes(&seq, a) - sign_changes(&seq, b)
    }

    /// Cauchy bound: every complex root has absolute value below it.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }
}

fn sign_changes(seq: &[QPoly], x: &BigRational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x·I − A)` of a square integer matrix by
/// Faddeev–LeVerrier.
pub fn char_poly(a: &[Vec<i64>]) -> QPoly {
    let n = a.len();
    let a: Vec<Vec<BigRational>> =
        a.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s: BigRational = (0..n).map(|l| &a[i][l] * &m[l][j]).sum();
                if i == j {
                    s += &c[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        let tr: BigRational =
            (0..n).map(|i| (0..n).map(|l| &a[i][l] * &m[l][i]).sum::<BigRational>()).sum();
        c[n - k] = -tr / rat(k as i64);
    }
    QPoly::new(c)
}

/// A real algebraic number pinned down either exactly or by a rational
/// isolating interval `(lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub exact: Option<BigRational>,
    pub lower: BigRational,
    pub upper: BigRational,
}

impl RealRoot {
    pub fn exact(x: BigRational) -> Self {
        RealRoot { exact: Some(x.clone()), lower: x.clone(), upper: x }
    }

    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(x) => x.to_f64().unwrap_or(f64::NAN),
            None => ((&self.lower + &self.upper) / rat(2)).to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "{:.12}", self.approx()),
        }
    }
}

/// Largest real root of `p`, exact when rational and otherwise isolated to
/// an interval of width at most `width`. `None` when `p` has no real root.
pub fn largest_real_root(p: &QPoly, width: &BigRational) -> Option<RealRoot> {
    let p = p.squarefree_part();
    p.degree()?;
    let bound = p.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    if p.count_roots(&lo, &hi) == 0 {
        return None;
    }
    if let Some(r) = largest_rational_root(&p) {
        // exact unless an irrational root lies above it
        if p.count_roots(&r, &hi) == 0 {
            return Some(RealRoot::exact(r));
        }
    }
    // invariant: exactly the largest root lies in (lo, hi]
    while p.count_roots(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / rat(2);
        if p.count_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rat(2);
        if p.eval(&mid).is_zero() {
            return Some(RealRoot::exact(mid));
        }
        if p.count_roots(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if p.eval(&hi).is_zero() {
        return Some(RealRoot::exact(hi));
    }
    Some(RealRoot { exact: None, lower: lo, upper: hi })
}

/// Rational roots via the rational root theorem on the integer-cleared
/// polynomial.
fn largest_rational_root(p: &QPoly) -> Option<BigRational> {
    let denom = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * BigRational::from_integer(denom.clone())).to_integer()).collect();
    // strip a factor x^k
    let shift = ints.iter().position(|c| !c.is_zero())?;
    let ints = &ints[shift..];
    let mut best = (shift > 0).then(BigRational::zero);
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let (d0, dn) = (divisors(&a0)?, divisors(&an)?);
    for num in &d0 {
        for den in &dn {
            for sign in [1, -1] {
                let r = BigRational::new(num * BigInt::from(sign), den.clone());
                if p.eval(&r).is_zero() && best.as_ref().map_or(true, |b| r > *b) {
                    best = Some(r);
                }
            }
        }
    }
    best
}

/// Positive divisors, `None` when the number is too large to factor by trial
/// division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n > 1 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// `10⁻¹²`, the default isolation width.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        let p = QPoly::from_ints(&[-2, 0, 1]);
        let q = QPoly::from_ints(&[1, 1]);
        let (d, r) = p.div_rem(&q);
        assert_eq!(&(&d * &q) + &r, p);
        assert_eq!(r, QPoly::from_ints(&[-1]));
        assert_eq!(p.to_string(), "x^2 - 2");
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn gcd_and_bezout() {
        let a = &QPoly::from_ints(&[-1, 1]) * &QPoly::from_ints(&[2, 1]);
        let b = &QPoly::from_ints(&[-1, 1]) * &QPoly::from_ints(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(!(&a * &a).is_squarefree());
        assert!(QPoly::from_ints(&[1, 0, 1]).is_squarefree());
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly(&[vec![0, 4], vec![1, 0]]), QPoly::from_ints(&[-4, 0, 1]));
        assert_eq!(char_poly(&[vec![2, 1], vec![1, 1]]), QPoly::from_ints(&[1, -3, 1]));
        assert_eq!(char_poly(&[]), QPoly::one());
    }

    #[test]
    fn largest_roots() {
        let w = default_width();
        let r = largest_real_root(&QPoly::from_ints(&[-4, 0, 1]), &w).unwrap();
        assert_eq!(r.exact, Some(rat(2)));
        // golden ratio
        let r = largest_real_root(&QPoly::from_ints(&[-1, -1, 1]), &w).unwrap();
        assert!(r.exact.is_none());
        assert!(r.width() <= w);
        assert!((r.approx() - 1.618_033_988_749_895).abs() < 1e-11);
        // rational root below an irrational one: (x - 1)(x^2 - 2)
        let p = &QPoly::from_ints(&[-1, 1]) * &QPoly::from_ints(&[-2, 0, 1]);
        let r = largest_real_root(&p, &w).unwrap();
        assert!((r.approx() - 2f64.sqrt()).abs() < 1e-11);
        assert!(largest_real_root(&QPoly::from_ints(&[1, 0, 1]), &w).is_none());
        let r = largest_real_root(&QPoly::from_ints(&[0, -1, 2]), &w).unwrap();
        assert_eq!(r.exact, Some(ratio(1, 2)));
    }
}
