use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly;
use super::{CyclotomicField, RationalScalar};
use crate::error::{Error, Result};

/// An element of `Q(zeta_N)` in power-basis coordinates, always reduced
/// modulo `Phi_N`.
///
/// The arithmetic operators panic when the two operands live in different
/// fields; the `checked_*` methods report that as [`Error::IncompatibleField`].
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus() == other.field.modulus() && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNumber(N={}, {})", self.field.modulus(), self)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycNumber {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: RationalScalar) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = q;
        z
    }

    /// Builds an element from power-basis coordinates; shorter inputs are
    /// padded with zeros.
    pub fn from_coords(field: &Arc<CyclotomicField>, coords: Vec<RationalScalar>) -> Result<Self> {
        if coords.len() > field.degree() {
            return Err(Error::Domain(format!(
                "{} coordinates given but Q(zeta_{}) has degree {}",
                coords.len(),
                field.modulus(),
                field.degree()
            )));
        }
        let mut z = Self::zero(field);
        for (slot, c) in z.coeffs.iter_mut().zip(coords) {
            *slot = c;
        }
        Ok(z)
    }

    /// `zeta_N^(e mod N)`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        CycNumber {
            field: field.clone(),
            coeffs: field
                .zeta_coords(e)
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> usize {
        self.field.modulus()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub fn to_rational_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::IncompatibleField {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let prod = poly::mul(&self.coeffs, &other.coeffs);
        Ok(self.reduce(prod))
    }

    /// Reduces an arbitrary-degree polynomial in `zeta` modulo `Phi_N`.
    fn reduce(&self, mut p: Vec<BigRational>) -> Self {
        let phi = self.field.phi_poly();
        let deg = self.field.degree();
        for i in (deg..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    p[i - deg + j] -= &c * BigInt::from(pj);
                }
            }
        }
        p.resize(deg, BigRational::zero());
        CycNumber {
            field: self.field.clone(),
            coeffs: p,
        }
    }

    pub fn scale(&self, q: &RationalScalar) -> Self {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// `self * zeta^e`.
    pub fn mul_zeta_pow(&self, e: i64) -> Self {
        if let Some(q) = self.as_rational() {
            let z = Self::zeta_pow(&self.field, e);
            return z.scale(q);
        }
        let coords = self.field.zeta_coords(e);
        let z: Vec<BigRational> = coords
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        self.reduce(poly::mul(&self.coeffs, &z))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        let m: Vec<BigRational> = self
            .field
            .phi_poly()
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let (mut r0, mut r1) = (m, poly::trim(self.coeffs.clone()));
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly::divmod(&r0, &r1);
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Phi_N is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let inv_c = r0[0].recip();
        let s: Vec<BigRational> = s0.iter().map(|c| c * &inv_c).collect();
        Ok(self.reduce(s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inverse()?)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                self.$checked(rhs).expect("cyclotomic operands from different fields")
            }
        }
        impl $trait<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}
