//! The Fourier transform `f^(chi) = sum_x f(x) chi(-x)` on a finite abelian
//! group, computed exactly, and its evaluation through a subgroup `H` and the
//! quotient `G/H`.
//!
//! The coset path picks, for every character `eta` of `H`, a character
//! `eta~` of `G` restricting to it, descends `f` to
//! `F_eta(y + H) = f_y^(eta) * eta~(-y)` on `G/H` (with `f_y(z) = f(z + y)` on
//! `H`), and reads `f^(eta~ * lambda)` off `F_eta^(lambda')`.

use std::sync::Arc;

use crate::cyclo::{CycNumber, CyclotomicField, RationalScalar};
use crate::error::{Error, Result};
use crate::groups::{annihilator, quotient, CharacterLabel, GroupElement, GroupSpec, QuotientDescriptor, Subgroup};

/// A function on the elements of a group, indexed by enumeration order.
///
/// Values live in `Q(zeta_M)` where `M` is a multiple of the group exponent;
/// ordinarily `M` is the exponent itself, but functions descended to a
/// quotient keep the field of the parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signal {
    group: GroupSpec,
    field: Arc<CyclotomicField>,
    values: Vec<CycNumber>,
}

/// A function on the characters of a group, indexed by label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    group: GroupSpec,
    field: Arc<CyclotomicField>,
    values: Vec<CycNumber>,
}

fn check_values(group: &GroupSpec, field: &CyclotomicField, values: &[CycNumber]) -> Result<()> {
    if values.len() != group.order() {
        return Err(Error::Domain(format!(
            "{} values for a group of order {}",
            values.len(),
            group.order()
        )));
    }
    if field.modulus() % group.exponent() != 0 {
        return Err(Error::IncompatibleField {
            left: group.exponent(),
            right: field.modulus(),
        });
    }
    if let Some(bad) = values.iter().find(|v| v.modulus() != field.modulus()) {
        return Err(Error::IncompatibleField {
            left: field.modulus(),
            right: bad.modulus(),
        });
    }
    Ok(())
}

macro_rules! function_on_group {
    ($ty:ident) => {
        impl $ty {
            /// Values over `Q(zeta_M)`; `M` must be a multiple of the exponent.
            pub fn new(group: &GroupSpec, values: Vec<CycNumber>) -> Result<Self> {
                let field = match values.first() {
                    Some(v) => v.field().clone(),
                    None => CyclotomicField::get(group.exponent()),
                };
                check_values(group, &field, &values)?;
                Ok($ty {
                    group: group.clone(),
                    field,
                    values,
                })
            }

            /// Rational values, embedded in `Q(zeta_N)` for the exponent `N`.
            pub fn from_rationals(group: &GroupSpec, values: Vec<RationalScalar>) -> Result<Self> {
                let field = CyclotomicField::get(group.exponent());
                let values = values
                    .into_iter()
                    .map(|q| CycNumber::from_rational(&field, q))
                    .collect();
                Self::new(group, values)
            }

            pub fn zero(group: &GroupSpec) -> Self {
                let field = CyclotomicField::get(group.exponent());
                $ty {
                    group: group.clone(),
                    values: vec![CycNumber::zero(&field); group.order()],
                    field,
                }
            }

            pub fn group(&self) -> &GroupSpec {
                &self.group
            }

            pub fn field(&self) -> &Arc<CyclotomicField> {
                &self.field
            }

            pub fn values(&self) -> &[CycNumber] {
                &self.values
            }

            pub fn value(&self, index: usize) -> &CycNumber {
                &self.values[index]
            }

            pub fn support(&self) -> Vec<usize> {
                support(&self.values)
            }

            pub fn support_size(&self) -> usize {
                self.values.iter().filter(|v| !v.is_zero()).count()
            }

            pub fn is_zero(&self) -> bool {
                self.values.iter().all(CycNumber::is_zero)
            }

            /// Scale from the group exponent to the field modulus.
            fn root_scale(&self) -> i64 {
                (self.field.modulus() / self.group.exponent()) as i64
            }
        }
    };
}

function_on_group!(Signal);
function_on_group!(Spectrum);

impl Signal {
    /// The point mass at `x`.
    pub fn delta(group: &GroupSpec, x: &GroupElement) -> Result<Self> {
        group.check_element(x)?;
        let mut s = Self::zero(group);
        s.values[group.index(x)] = CycNumber::one(&s.field);
        Ok(s)
    }

    /// `1_H` for a subgroup of `group`.
    pub fn indicator(h: &Subgroup) -> Self {
        let mut s = Self::zero(h.parent());
        for &i in h.member_indices() {
            s.values[i] = CycNumber::one(&s.field);
        }
        s
    }

    /// `f_y(z) = f(z + y)` on the whole group.
    pub fn translate(&self, y: &GroupElement) -> Result<Self> {
        self.group.check_element(y)?;
        let yi = self.group.index(y);
        let values = (0..self.group.order())
            .map(|z| self.values[self.group.add_index(z, yi)].clone())
            .collect();
        Ok(Signal {
            group: self.group.clone(),
            field: self.field.clone(),
            values,
        })
    }

    /// Pointwise product with the character `chi`.
    pub fn modulate(&self, chi: &CharacterLabel) -> Result<Self> {
        self.group.check_label(chi)?;
        let c = self.group.label_index(chi);
        let scale = self.root_scale();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(x, v)| v.mul_zeta_pow(scale * self.group.pairing_index(c, x) as i64))
            .collect();
        Ok(Signal {
            group: self.group.clone(),
            field: self.field.clone(),
            values,
        })
    }
}

/// Sorted indices of the nonzero entries.
pub fn support(values: &[CycNumber]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// `sum_x values[x] * zeta_M^(sign * scale * e(chi, x))` for every `chi`.
///
/// Terms are first bucketed by root-of-unity exponent so each output costs
/// `n` additions and at most `N` multiplications.
fn character_sums(
    group: &GroupSpec,
    field: &Arc<CyclotomicField>,
    values: &[CycNumber],
    sign: i64,
    scale: i64,
) -> Vec<CycNumber> {
    let n = group.exponent();
    let nonzero: Vec<usize> = support(values);
    (0..group.order())
        .map(|chi| {
            let mut buckets: Vec<Option<CycNumber>> = vec![None; n];
            for &x in &nonzero {
                let e = group.pairing_index(chi, x);
                let slot = &mut buckets[e];
                *slot = Some(match slot.take() {
                    Some(acc) => acc + &values[x],
                    None => values[x].clone(),
                });
            }
            let mut acc = CycNumber::zero(field);
            for (e, b) in buckets.into_iter().enumerate() {
                if let Some(b) = b {
                    if !b.is_zero() {
                        acc = acc + b.mul_zeta_pow(sign * scale * e as i64);
                    }
                }
            }
            acc
        })
        .collect()
}

/// `f^(chi) = sum_x f(x) chi(-x)`.
pub fn dft(f: &Signal) -> Spectrum {
    let values = character_sums(&f.group, &f.field, &f.values, -1, f.root_scale());
    Spectrum {
        group: f.group.clone(),
        field: f.field.clone(),
        values,
    }
}

/// `f(x) = (1/n) sum_chi F(chi) chi(x)`.
pub fn idft(spec: &Spectrum) -> Signal {
    // e(chi, x) is symmetric in the two index sets, so the same kernel applies.
    let sums = character_sums(&spec.group, &spec.field, &spec.values, 1, spec.root_scale());
    let inv_n = crate::cyclo::rational(1, spec.group.order() as i64);
    Signal {
        group: spec.group.clone(),
        field: spec.field.clone(),
        values: sums.iter().map(|v| v.scale(&inv_n)).collect(),
    }
}

/// A fixed choice of `eta~` in `G^` restricting to each `eta` in `H^`.
///
/// Characters of `H` are labelled through `H^ = G^ / H^perp`: the label
/// space of `H^` is the quotient group of [`characters_of_subgroup`], and
/// restriction is its projection.
///
/// [`characters_of_subgroup`]: SectionMap::characters_of_subgroup
#[derive(Debug, Clone)]
pub struct SectionMap {
    group: GroupSpec,
    subgroup: Subgroup,
    restriction: QuotientDescriptor,
    table: Vec<usize>,
}

impl SectionMap {
    /// For every `eta`, the smallest label of `G` restricting to it.
    pub fn minimal(group: &GroupSpec, h: &Subgroup) -> Self {
        let ann = annihilator(group, h);
        let restriction = quotient(group, &ann);
        let table = restriction.coset_rep_indices().to_vec();
        SectionMap {
            group: group.clone(),
            subgroup: h.clone(),
            restriction,
            table,
        }
    }

    /// A caller-chosen section, checked for consistency.
    pub fn from_table(group: &GroupSpec, h: &Subgroup, table: &[CharacterLabel]) -> Result<Self> {
        let mut s = Self::minimal(group, h);
        if table.len() != s.table.len() {
            return Err(Error::InvalidSection(format!(
                "{} entries for {} characters of the subgroup",
                table.len(),
                s.table.len()
            )));
        }
        for chi in table {
            group
                .check_label(chi)
                .map_err(|e| Error::InvalidSection(e.to_string()))?;
        }
        s.table = table.iter().map(|chi| group.label_index(chi)).collect();
        s.validate()?;
        Ok(s)
    }

    /// Checks that `table[eta]` restricts to `eta` for every `eta`.
    pub fn validate(&self) -> Result<()> {
        for (eta, &lift) in self.table.iter().enumerate() {
            if self.restriction.project_index(lift) != eta {
                return Err(Error::InvalidSection(format!(
                    "label {} does not restrict to character {}",
                    self.group.label(lift),
                    self.characters_of_subgroup().label(eta)
                )));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// The group whose labels name the characters of `H`.
    pub fn characters_of_subgroup(&self) -> &GroupSpec {
        self.restriction.quotient_group()
    }

    /// Restriction `q: G^ -> H^`.
    pub fn restrict(&self, chi: &CharacterLabel) -> Result<CharacterLabel> {
        self.group.check_label(chi)?;
        let eta = self.restriction.project_index(self.group.label_index(chi));
        Ok(self.characters_of_subgroup().label(eta))
    }

    pub fn lift(&self, eta: &CharacterLabel) -> Result<CharacterLabel> {
        let hd = self.characters_of_subgroup();
        hd.check_label(eta)?;
        Ok(self.group.label(self.table[hd.label_index(eta)]))
    }

    pub fn lift_index(&self, eta: usize) -> usize {
        self.table[eta]
    }
}

/// Everything needed to evaluate a transform through `H` and `G/H`.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    group: GroupSpec,
    quotient: QuotientDescriptor,
    section: SectionMap,
}

impl CosetDecomposition {
    pub fn new(section: &SectionMap) -> Result<Self> {
        section.validate()?;
        Ok(CosetDecomposition {
            group: section.group.clone(),
            quotient: quotient(&section.group, &section.subgroup),
            section: section.clone(),
        })
    }

    pub fn quotient(&self) -> &QuotientDescriptor {
        &self.quotient
    }

    pub fn section(&self) -> &SectionMap {
        &self.section
    }

    fn check_signal(&self, f: &Signal) -> Result<()> {
        if f.group != self.group {
            return Err(Error::InvalidSection(format!(
                "section built for {} applied to a signal on {}",
                self.group, f.group
            )));
        }
        Ok(())
    }

    /// `F_eta` using the minimal coset representatives.
    pub fn descend(&self, f: &Signal, eta: &CharacterLabel) -> Result<Signal> {
        let reps = self.quotient.coset_rep_indices().to_vec();
        self.descend_at(f, eta, &reps)
    }

    /// `F_eta` computed from caller-chosen coset representatives; `reps[q]`
    /// must lie in the coset with quotient index `q`.
    pub fn descend_with_reps(&self, f: &Signal, eta: &CharacterLabel, reps: &[GroupElement]) -> Result<Signal> {
        let qg = self.quotient.quotient_group();
        if reps.len() != qg.order() {
            return Err(Error::Domain(format!(
                "{} representatives for {} cosets",
                reps.len(),
                qg.order()
            )));
        }
        let mut idx = Vec::with_capacity(reps.len());
        for (q, y) in reps.iter().enumerate() {
            self.group.check_element(y)?;
            let i = self.group.index(y);
            if self.quotient.project_index(i) != q {
                return Err(Error::Domain(format!("{y} is not in coset {q}")));
            }
            idx.push(i);
        }
        self.descend_at(f, eta, &idx)
    }

    fn descend_at(&self, f: &Signal, eta: &CharacterLabel, reps: &[usize]) -> Result<Signal> {
        self.check_signal(f)?;
        let hd = self.section.characters_of_subgroup();
        hd.check_label(eta)?;
        let lift = self.section.lift_index(hd.label_index(eta));
        let g = &self.group;
        let scale = f.root_scale();
        let h = self.section.subgroup.member_indices();
        let values = reps
            .iter()
            .map(|&y| {
                // f_y^(eta) = sum_{z in H} f(z + y) eta(-z)
                let mut fy_hat = CycNumber::zero(&f.field);
                for &z in h {
                    let v = &f.values[g.add_index(z, y)];
                    if !v.is_zero() {
                        let e = g.pairing_index(lift, g.neg_index(z)) as i64;
                        fy_hat = fy_hat + v.mul_zeta_pow(scale * e);
                    }
                }
                let e = g.pairing_index(lift, g.neg_index(y)) as i64;
                fy_hat.mul_zeta_pow(scale * e)
            })
            .collect();
        Ok(Signal {
            group: self.quotient.quotient_group().clone(),
            field: f.field.clone(),
            values,
        })
    }

    /// Assembles `f^` from `F_eta^` over all characters of `H`.
    pub fn transform(&self, f: &Signal) -> Result<Spectrum> {
        self.check_signal(f)?;
        let g = &self.group;
        let hd = self.section.characters_of_subgroup();
        let mut out: Vec<Option<CycNumber>> = vec![None; g.order()];
        for eta in 0..hd.order() {
            let big_f = self.descend(f, &hd.label(eta))?;
            let big_f_hat = dft(&big_f);
            let lift = self.section.lift_index(eta);
            for (prime, v) in big_f_hat.values.into_iter().enumerate() {
                let lambda = self.quotient.lift_character_index(prime);
                out[g.add_index(lift, lambda)] = Some(v);
            }
        }
        let values = out
            .into_iter()
            .map(|v| v.expect("eta~ * lambda covers every character"))
            .collect();
        Ok(Spectrum {
            group: g.clone(),
            field: f.field.clone(),
            values,
        })
    }
}

/// `F_eta(y + H) = f_y^(eta) eta~(-y)` as a function on `G/H`.
pub fn descend(f: &Signal, h: &Subgroup, eta: &CharacterLabel, section: &SectionMap) -> Result<Signal> {
    if section.subgroup != *h {
        return Err(Error::InvalidSection("section belongs to a different subgroup".into()));
    }
    CosetDecomposition::new(section)?.descend(f, eta)
}

/// The transform of `f` assembled through `H` and `G/H`; equals [`dft`].
pub fn coset_dft(f: &Signal, h: &Subgroup, section: &SectionMap) -> Result<Spectrum> {
    if section.subgroup != *h {
        return Err(Error::InvalidSection("section belongs to a different subgroup".into()));
    }
    CosetDecomposition::new(section)?.transform(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{integer, rational, zeta_pow};
    use crate::groups::subgroup_of_order;

    fn rationals(v: &[i64]) -> Vec<RationalScalar> {
        v.iter().map(|&x| integer(x)).collect()
    }

    #[test]
    fn dft_of_delta_is_all_ones() {
        for factors in [vec![5], vec![2, 2], vec![4, 3]] {
            let g = GroupSpec::new(&factors).unwrap();
            let s = dft(&Signal::delta(&g, &g.identity()).unwrap());
            assert!(s.values().iter().all(CycNumber::is_one));
        }
    }

    #[test]
    fn dft_of_constant_is_spike() {
        let g = GroupSpec::new(&[2, 3]).unwrap();
        let f = Signal::from_rationals(&g, rationals(&[1; 6])).unwrap();
        let s = dft(&f);
        assert_eq!(s.value(0).as_rational(), Some(&integer(6)));
        assert_eq!(s.support(), vec![0]);
    }

    #[test]
    fn dft_of_subgroup_indicator() {
        let z4 = GroupSpec::cyclic(4).unwrap();
        let h = subgroup_of_order(&z4, 2).unwrap();
        let s = dft(&Signal::indicator(&h));
        assert_eq!(s.support(), vec![0, 2]);
        assert_eq!(s.value(0).as_rational(), Some(&integer(2)));
        assert_eq!(s.value(2).as_rational(), Some(&integer(2)));
    }

    #[test]
    fn idft_examples() {
        let z3 = GroupSpec::cyclic(3).unwrap();
        let ones = Spectrum::from_rationals(&z3, rationals(&[1, 1, 1])).unwrap();
        let back = idft(&ones);
        assert_eq!(back, Signal::delta(&z3, &z3.identity()).unwrap());

        let g = GroupSpec::new(&[2, 3]).unwrap();
        let f = Signal::from_rationals(
            &g,
            vec![rational(3, 2), integer(-1), integer(0), rational(7, 5), integer(2), integer(0)],
        )
        .unwrap();
        assert_eq!(idft(&dft(&f)), f);
    }

    #[test]
    fn support_examples() {
        let g = GroupSpec::cyclic(4).unwrap();
        assert!(Signal::zero(&g).support().is_empty());
        assert_eq!(Signal::delta(&g, &g.identity()).unwrap().support(), vec![0]);
    }

    #[test]
    fn translate_examples() {
        let z4 = GroupSpec::cyclic(4).unwrap();
        let d0 = Signal::delta(&z4, &z4.identity()).unwrap();
        assert_eq!(d0.translate(&z4.identity()).unwrap(), d0);
        let shifted = d0.translate(&GroupElement::new(vec![1])).unwrap();
        assert_eq!(shifted, Signal::delta(&z4, &GroupElement::new(vec![3])).unwrap());
    }

    #[test]
    fn section_restricts_correctly() {
        let g = GroupSpec::new(&[4, 6]).unwrap();
        for d in [1, 2, 3, 4, 6, 8, 12, 24] {
            let h = subgroup_of_order(&g, d).unwrap();
            let sec = SectionMap::minimal(&g, &h);
            assert_eq!(sec.characters_of_subgroup().order(), d);
            for eta in sec.characters_of_subgroup().labels() {
                let lift = sec.lift(&eta).unwrap();
                assert_eq!(sec.restrict(&lift).unwrap(), eta);
                // every label in the fiber agrees with the lift on H
                for chi in g.labels().filter(|c| sec.restrict(c).unwrap() == eta) {
                    for &z in h.member_indices() {
                        assert_eq!(
                            g.pairing_index(g.label_index(&chi), z),
                            g.pairing_index(g.label_index(&lift), z)
                        );
                    }
                    assert!(chi >= lift);
                }
            }
        }
    }

    #[test]
    fn inconsistent_section_rejected() {
        let g = GroupSpec::cyclic(6).unwrap();
        let h = subgroup_of_order(&g, 2).unwrap();
        // both characters of H lifted to the trivial label
        let bad = [g.trivial_label(), g.trivial_label()];
        assert!(matches!(
            SectionMap::from_table(&g, &h, &bad),
            Err(Error::InvalidSection(_))
        ));
        let other = subgroup_of_order(&g, 3).unwrap();
        let sec = SectionMap::minimal(&g, &h);
        let f = Signal::delta(&g, &g.identity()).unwrap();
        assert!(matches!(
            coset_dft(&f, &other, &sec),
            Err(Error::InvalidSection(_))
        ));
    }

    #[test]
    fn descend_examples() {
        let g = GroupSpec::cyclic(6).unwrap();
        let h = subgroup_of_order(&g, 2).unwrap();
        let sec = SectionMap::minimal(&g, &h);
        let hd = sec.characters_of_subgroup().clone();

        for eta in hd.labels() {
            let big_f = descend(&Signal::zero(&g), &h, &eta, &sec).unwrap();
            assert!(big_f.is_zero());
        }

        let big_f = descend(&Signal::indicator(&h), &h, &hd.trivial_label(), &sec).unwrap();
        assert_eq!(big_f.value(0).as_rational(), Some(&integer(2)));
        assert_eq!(big_f.support(), vec![0]);

        // f supported on the coset 1 + H = {1, 4}
        let f = Signal::from_rationals(&g, rationals(&[0, 3, 0, 0, -5, 0])).unwrap();
        let cd = CosetDecomposition::new(&sec).unwrap();
        let coset = cd.quotient().project_index(1);
        for eta in hd.labels() {
            assert_eq!(descend(&f, &h, &eta, &sec).unwrap().support(), vec![coset]);
        }
    }

    #[test]
    fn coset_dft_matches_dft_on_z6() {
        let g = GroupSpec::cyclic(6).unwrap();
        let h = subgroup_of_order(&g, 2).unwrap();
        let sec = SectionMap::minimal(&g, &h);
        let f = Signal::from_rationals(&g, rationals(&[1, -2, 0, 5, 3, 7])).unwrap();
        assert_eq!(coset_dft(&f, &h, &sec).unwrap(), dft(&f));

        let d = Signal::delta(&g, &g.identity()).unwrap();
        assert!(coset_dft(&d, &h, &sec).unwrap().values().iter().all(CycNumber::is_one));
    }

    #[test]
    fn coset_dft_with_cyclotomic_values_and_other_section() {
        let g = GroupSpec::new(&[4, 2]).unwrap();
        let field = CyclotomicField::get(4);
        let values: Vec<CycNumber> = (0..8)
            .map(|i| zeta_pow(4, i) + CycNumber::from_rational(&field, rational(i - 3, 2)))
            .collect();
        let f = Signal::new(&g, values).unwrap();
        for d in [1, 2, 4, 8] {
            let h = subgroup_of_order(&g, d).unwrap();
            let minimal = SectionMap::minimal(&g, &h);
            // lift every eta to the largest label in its fiber instead
            let hd = minimal.characters_of_subgroup().clone();
            let table: Vec<CharacterLabel> = hd
                .labels()
                .map(|eta| {
                    g.labels()
                        .filter(|c| minimal.restrict(c).unwrap() == eta)
                        .max()
                        .unwrap()
                })
                .collect();
            let other = SectionMap::from_table(&g, &h, &table).unwrap();
            assert_eq!(coset_dft(&f, &h, &minimal).unwrap(), dft(&f));
            assert_eq!(coset_dft(&f, &h, &other).unwrap(), dft(&f));
        }
    }

    #[test]
    fn modulation_keeps_support() {
        let g = GroupSpec::new(&[3, 4]).unwrap();
        let f = Signal::from_rationals(&g, rationals(&[0, 1, 0, 2, 0, 0, -1, 0, 0, 4, 0, 1])).unwrap();
        for chi in g.labels() {
            assert_eq!(f.modulate(&chi).unwrap().support(), f.support());
        }
    }

    #[test]
    fn wrong_length_rejected() {
        let g = GroupSpec::cyclic(3).unwrap();
        assert!(Signal::from_rationals(&g, rationals(&[1, 2])).is_err());
        let values = vec![zeta_pow(2, 1); 3];
        assert!(matches!(Signal::new(&g, values), Err(Error::IncompatibleField { .. })));
    }
}
