//! Exact arithmetic in `Q[x]/(m)`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::GaloisError;
use crate::poly::QPoly;

/// `Q[x]/(m)` for a monic, squarefree modulus with integer coefficients.
/// When `m` is irreducible this is a number field; reducible squarefree
/// moduli give a product of fields, where inversion can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: QPoly,
}

/// A residue class, stored by its reduced representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberFieldElement {
    coeffs: QPoly,
}

impl NumberFieldElement {
    pub fn coeffs(&self) -> &[BigRational] {
        self.coeffs.coeffs()
    }

    pub fn as_poly(&self) -> &QPoly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == QPoly::one()
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeffs.coeff(0)),
            _ => None,
        }
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coeffs)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs)
    }
}

impl NumberField {
    pub fn new(modulus: QPoly) -> Result<Self, GaloisError> {
        match modulus.degree() {
            None | Some(0) => {
                return Err(GaloisError::DegenerateModulus("modulus must have positive degree".into()))
            }
            _ => {}
        }
        if !modulus.is_monic() || !modulus.has_integer_coeffs() {
            return Err(GaloisError::DegenerateModulus(format!(
                "modulus {modulus} is not monic with integer coefficients"
            )));
        }
        if !modulus.is_squarefree() {
            return Err(GaloisError::DegenerateModulus(format!("modulus {modulus} is not squarefree")));
        }
        Ok(NumberField { modulus })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, GaloisError> {
        Self::new(QPoly::from_ints(coeffs))
    }

    /// `Q` itself, as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        NumberField { modulus: QPoly::x() }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn element(&self, p: &QPoly) -> NumberFieldElement {
        NumberFieldElement { coeffs: p.rem(&self.modulus) }
    }

    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> Result<NumberFieldElement, GaloisError> {
        if coeffs.len() > self.degree() && coeffs[self.degree()..].iter().any(|c| !c.is_zero()) {
            return Err(GaloisError::InvalidScenario(format!(
                "element with {} coefficients exceeds field degree {}",
                coeffs.len(),
                self.degree()
            )));
        }
        Ok(NumberFieldElement { coeffs: QPoly::new(coeffs) })
    }

    pub fn rational(&self, c: BigRational) -> NumberFieldElement {
        self.element(&QPoly::constant(c))
    }

    pub fn zero(&self) -> NumberFieldElement {
        NumberFieldElement { coeffs: QPoly::zero() }
    }

    pub fn one(&self) -> NumberFieldElement {
        self.element(&QPoly::one())
    }

    /// The class of `x`.
    pub fn generator(&self) -> NumberFieldElement {
        self.element(&QPoly::x())
    }

    pub fn add(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { coeffs: &a.coeffs + &b.coeffs }
    }

    pub fn sub(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { coeffs: &a.coeffs - &b.coeffs }
    }

    pub fn neg(&self, a: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { coeffs: -&a.coeffs }
    }

    pub fn mul(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        self.element(&(&a.coeffs * &b.coeffs))
    }

    pub fn scale(&self, a: &NumberFieldElement, c: &BigRational) -> NumberFieldElement {
        NumberFieldElement { coeffs: a.coeffs.scale(c) }
    }

    /// Inverse by extended Euclid against the modulus.
    pub fn inv(&self, a: &NumberFieldElement) -> Result<NumberFieldElement, GaloisError> {
        let (g, s, _) = a.coeffs.extended_gcd(&self.modulus);
        if g != QPoly::one() {
            return Err(GaloisError::NotInvertible(a.to_string()));
        }
        Ok(self.element(&s))
    }

    pub fn div(
        &self,
        a: &NumberFieldElement,
        b: &NumberFieldElement,
    ) -> Result<NumberFieldElement, GaloisError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Evaluates a polynomial with rational coefficients at `a`.
    pub fn eval_rational_poly(&self, p: &QPoly, a: &NumberFieldElement) -> NumberFieldElement {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, a), &self.rational(c.clone()))
        })
    }

    /// Evaluates a polynomial with coefficients in this field at `a`.
    pub fn eval(&self, p: &EPoly, a: &NumberFieldElement) -> NumberFieldElement {
        p.coeffs.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, a), c))
    }
}

/// A polynomial in one variable with coefficients in a [`NumberField`],
/// lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPoly {
    pub coeffs: Vec<NumberFieldElement>,
}

impl EPoly {
    pub fn new(mut coeffs: Vec<NumberFieldElement>) -> Self {
        while coeffs.last().is_some_and(NumberFieldElement::is_zero) {
            coeffs.pop();
        }
        EPoly { coeffs }
    }

    pub fn constant(c: NumberFieldElement) -> Self {
        Self::new(vec![c])
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &EPoly, field: &NumberField) -> EPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = field.zero();
        EPoly::new(
            (0..n)
                .map(|i| {
                    field.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &EPoly, field: &NumberField) -> EPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return EPoly::new(vec![]);
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        EPoly::new(out)
    }

    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl NumberField {
    /// `Σ cᵢ·xⁱ` for rational `cᵢ`; helper for tests and data.
    pub fn elem(&self, coeffs: &[BigRational]) -> NumberFieldElement {
        self.element(&QPoly::new(coeffs.to_vec()))
    }

    pub fn pow(&self, a: &NumberFieldElement, k: usize) -> NumberFieldElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_unit(&self, a: &NumberFieldElement) -> bool {
        a.coeffs.gcd(&self.modulus) == QPoly::one() && !a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn gaussian_rationals() {
        let f = NumberField::from_ints(&[1, 0, 1]).unwrap();
        let i = f.generator();
        assert_eq!(f.mul(&i, &i), f.rational(rat(-1)));
        let a = f.elem(&[rat(1), rat(2)]);
        let b = f.inv(&a).unwrap();
        assert!(f.mul(&a, &b).is_one());
        assert_eq!(b, f.elem(&[ratio(1, 5), ratio(-2, 5)]));
    }

    #[test]
    fn rejects_degenerate_moduli() {
        assert!(NumberField::from_ints(&[1, 2, 1]).is_err());
        assert!(NumberField::from_ints(&[5]).is_err());
        assert!(NumberField::new(QPoly::new(vec![rat(1), rat(0), rat(2)])).is_err());
    }

    #[test]
    fn reducible_modulus_has_zero_divisors() {
        // Q[x]/(x^2 - 1) ≅ Q × Q
        let f = NumberField::from_ints(&[-1, 0, 1]).unwrap();
        let e = f.elem(&[rat(1), rat(1)]);
        assert!(f.inv(&e).is_err());
        assert!(!f.is_unit(&e));
    }

    #[test]
    fn polynomial_evaluation() {
        let f = NumberField::from_ints(&[-2, 0, 1]).unwrap();
        let s = f.generator();
        assert!(f.eval_rational_poly(&QPoly::from_ints(&[-2, 0, 1]), &s).is_zero());
        assert_eq!(f.pow(&s, 4), f.rational(rat(4)));
    }
}
