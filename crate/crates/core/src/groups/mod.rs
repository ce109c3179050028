//! Finite abelian groups given as products of cyclic factors.
//!
//! Elements and character labels share one coordinate scheme: a vector of
//! residues, one per cyclic factor. Both are enumerated in mixed-radix
//! lexicographic order (first coordinate most significant), so an index in
//! `0..order` identifies an element or a label.
//!
//! Characters are identified with labels through the standard self-pairing
//! of `Z_m1 x ... x Z_mr`: the label `c` sends `x` to `zeta_N^e` with
//! `e = sum_i c_i * x_i * (N / m_i) mod N`, where `N` is the exponent.

mod quotient;
mod smith;
mod subgroup;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use quotient::{quotient, QuotientDescriptor};
pub use subgroup::{annihilator, subgroup_of_order, Subgroup};

/// A finite abelian group `Z_m1 x ... x Z_mr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    exponent: usize,
}

/// An element of a [`GroupSpec`], as reduced residues per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<usize>);

/// A character of a [`GroupSpec`], identified by its pairing coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterLabel(Vec<usize>);

impl GroupElement {
    pub fn new(coords: Vec<usize>) -> Self {
        GroupElement(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl CharacterLabel {
    pub fn new(coords: Vec<usize>) -> Self {
        CharacterLabel(coords)
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

impl fmt::Display for CharacterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

impl GroupSpec {
    /// Builds `Z_m1 x ... x Z_mr` from the factor orders.
    pub fn new(factors: &[usize]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("empty factor list".into()));
        }
        if let Some(bad) = factors.iter().find(|&&m| m == 0) {
            return Err(Error::InvalidSpec(format!("factor order {bad} must be >= 1")));
        }
        let mut order: usize = 1;
        for &m in factors {
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::InvalidSpec("group order overflows".into()))?;
        }
        let exponent = factors.iter().fold(1usize, |acc, &m| acc.lcm(&m));
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(GroupSpec {
            factors: factors.to_vec(),
            strides,
            order,
            exponent,
        })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn trivial_label(&self) -> CharacterLabel {
        CharacterLabel(vec![0; self.rank()])
    }

    /// The element at position `index` of the enumeration order.
    pub fn element(&self, index: usize) -> GroupElement {
        GroupElement(self.coords_of(index))
    }

    pub fn label(&self, index: usize) -> CharacterLabel {
        CharacterLabel(self.coords_of(index))
    }

    fn coords_of(&self, index: usize) -> Vec<usize> {
        assert!(index < self.order, "index {index} out of range for order {}", self.order);
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (index / s) % m)
            .collect()
    }

    fn index_of_coords(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    /// Position of `x` in the enumeration order. `x` must be valid.
    pub fn index(&self, x: &GroupElement) -> usize {
        self.index_of_coords(&x.0)
    }

    pub fn label_index(&self, chi: &CharacterLabel) -> usize {
        self.index_of_coords(&chi.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn labels(&self) -> impl Iterator<Item = CharacterLabel> + '_ {
        (0..self.order).map(|i| self.label(i))
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        for (i, (&c, &m)) in coords.iter().zip(&self.factors).enumerate() {
            if c >= m {
                return Err(Error::InvalidElement(format!(
                    "coordinate {i} is {c}, not reduced mod {m}"
                )));
            }
        }
        Ok(())
    }

    pub fn check_element(&self, x: &GroupElement) -> Result<()> {
        self.check_coords(&x.0)
    }

    pub fn check_label(&self, chi: &CharacterLabel) -> Result<()> {
        self.check_coords(&chi.0)
    }

    /// Reduces arbitrary integer coordinates into an element.
    pub fn reduce(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.rank(),
                coords.len()
            )));
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as usize)
                .collect(),
        ))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_element(a)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(x, m)| (m - x) % m)
                .collect(),
        ))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.add(a, &self.neg(b)?)
    }

    /// Index-level addition, for hot loops over the enumeration.
    pub fn add_index(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        for (&m, &s) in self.factors.iter().zip(&self.strides) {
            out += (((i / s) % m + (j / s) % m) % m) * s;
        }
        out
    }

    pub fn neg_index(&self, i: usize) -> usize {
        let mut out = 0;
        for (&m, &s) in self.factors.iter().zip(&self.strides) {
            out += ((m - (i / s) % m) % m) * s;
        }
        out
    }

    /// Label addition, i.e. the pointwise product of characters.
    pub fn mul_labels(&self, a: &CharacterLabel, b: &CharacterLabel) -> Result<CharacterLabel> {
        let sum = self.add(&GroupElement(a.0.clone()), &GroupElement(b.0.clone()))?;
        Ok(CharacterLabel(sum.0))
    }

    /// Exponent `e` in `[0, N)` with `chi(x) = zeta_N^e`.
    pub fn pairing(&self, chi: &CharacterLabel, x: &GroupElement) -> Result<usize> {
        self.check_label(chi)?;
        self.check_element(x)?;
        Ok(self.pairing_coords(&chi.0, &x.0))
    }

    fn pairing_coords(&self, chi: &[usize], x: &[usize]) -> usize {
        let n = self.exponent;
        chi.iter()
            .zip(x)
            .zip(&self.factors)
            .fold(0usize, |acc, ((&c, &y), &m)| {
                (acc + (c * y % m) * (n / m)) % n
            })
    }

    /// Pairing exponent between the label at `chi` and the element at `x`.
    pub fn pairing_index(&self, chi: usize, x: usize) -> usize {
        let n = self.exponent;
        let mut e = 0;
        for (&m, &s) in self.factors.iter().zip(&self.strides) {
            let c = (chi / s) % m;
            let y = (x / s) % m;
            e = (e + (c * y % m) * (n / m)) % n;
        }
        e
    }

    /// Full `order x order` table of pairing exponents, rows by label.
    pub fn pairing_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|chi| (0..self.order).map(|x| self.pairing_index(chi, x)).collect())
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `"4,3"` or `"Z4xZ3"` (case-insensitive, `Z_4` also allowed).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s.is_empty() {
            return Err(Error::InvalidSpec("empty group spec".into()));
        }
        let parts: Vec<&str> = if s.contains('z') {
            s.split('x')
                .map(|p| p.trim().trim_start_matches('z').trim_start_matches('_'))
                .collect()
        } else {
            s.split(',').map(str::trim).collect()
        };
        let factors = parts
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidSpec(format!("bad factor {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(&factors)
    }
}
