use super::smith::diagonalize;
use super::{CharacterLabel, GroupElement, GroupSpec, Subgroup};
use crate::error::{Error, Result};

/// `G/H` as a concrete group together with the maps that connect it to `G`.
#[derive(Debug, Clone)]
pub struct QuotientDescriptor {
    parent: GroupSpec,
    subgroup: Subgroup,
    quotient_group: GroupSpec,
    /// `coset_reps[q]` is the smallest element of the coset with index `q`.
    coset_reps: Vec<usize>,
    /// Element index of `G` to element index of `G/H`.
    projection: Vec<usize>,
    /// Label index of `(G/H)^` to the label index of the matching `lambda`
    /// in `H^perp`.
    char_lift: Vec<usize>,
    /// Element lifts of the unit vectors of `G/H`, used to transport labels.
    basis_lifts: Vec<usize>,
}

/// Builds `G/H`. The factor list of the quotient comes from diagonalizing the
/// relation lattice generated by the factor orders and the generators of `h`.
pub fn quotient(g: &GroupSpec, h: &Subgroup) -> QuotientDescriptor {
    let r = g.rank();
    let mut rel: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            let mut row = vec![0i128; r];
            row[i] = g.factors()[i] as i128;
            row
        })
        .collect();
    let gens: Vec<GroupElement> = if h.generators().is_empty() {
        h.elements()
    } else {
        h.generators().to_vec()
    };
    for x in &gens {
        rel.push(x.coords().iter().map(|&c| c as i128).collect());
    }
    let dz = diagonalize(rel, r);
    let kept: Vec<usize> = (0..r).filter(|&t| dz.diag[t] > 1).collect();
    let q_factors: Vec<usize> = if kept.is_empty() {
        vec![1]
    } else {
        kept.iter().map(|&t| dz.diag[t] as usize).collect()
    };
    let quotient_group = GroupSpec::new(&q_factors).expect("diagonal entries are >= 1");

    let project_coords = |x: &[usize]| -> Vec<i64> {
        if kept.is_empty() {
            return vec![0];
        }
        kept.iter()
            .map(|&t| {
                let v: i128 = x
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c as i128 * dz.transform[i][t])
                    .sum();
                v.rem_euclid(dz.diag[t]) as i64
            })
            .collect()
    };

    let projection: Vec<usize> = (0..g.order())
        .map(|i| {
            let c = project_coords(g.element(i).coords());
            quotient_group.index(&quotient_group.reduce(&c).expect("arity matches"))
        })
        .collect();

    let mut coset_reps = vec![usize::MAX; quotient_group.order()];
    for (i, &q) in projection.iter().enumerate() {
        if coset_reps[q] == usize::MAX {
            coset_reps[q] = i;
        }
    }
    debug_assert!(coset_reps.iter().all(|&i| i != usize::MAX));

    let basis_lifts: Vec<usize> = (0..quotient_group.rank())
        .map(|j| {
            let mut c = vec![0usize; quotient_group.rank()];
            if quotient_group.factors()[j] > 1 {
                c[j] = 1;
            }
            coset_reps[quotient_group.index(&GroupElement::new(c))]
        })
        .collect();

    let mut desc = QuotientDescriptor {
        parent: g.clone(),
        subgroup: h.clone(),
        quotient_group,
        coset_reps,
        projection,
        char_lift: Vec::new(),
        basis_lifts,
    };

    let mut char_lift = vec![usize::MAX; desc.quotient_group.order()];
    for lam in 0..g.order() {
        if let Some(prime) = desc.transport_index(lam) {
            char_lift[prime] = lam;
        }
    }
    debug_assert!(char_lift.iter().all(|&i| i != usize::MAX));
    desc.char_lift = char_lift;
    desc
}

impl QuotientDescriptor {
    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn quotient_group(&self) -> &GroupSpec {
        &self.quotient_group
    }

    pub fn coset_reps(&self) -> Vec<GroupElement> {
        self.coset_reps.iter().map(|&i| self.parent.element(i)).collect()
    }

    pub fn coset_rep_indices(&self) -> &[usize] {
        &self.coset_reps
    }

    /// `y -> y + H` as an element of the quotient group.
    pub fn project(&self, y: &GroupElement) -> Result<GroupElement> {
        self.parent.check_element(y)?;
        Ok(self.quotient_group.element(self.projection[self.parent.index(y)]))
    }

    pub fn project_index(&self, i: usize) -> usize {
        self.projection[i]
    }

    /// Sends `lambda` in `H^perp` to `lambda'` on `G/H` with
    /// `lambda'(y + H) = lambda(y)`. Labels outside `H^perp` are rejected.
    pub fn transport(&self, lambda: &CharacterLabel) -> Result<CharacterLabel> {
        self.parent.check_label(lambda)?;
        self.transport_index(self.parent.label_index(lambda))
            .map(|i| self.quotient_group.label(i))
            .ok_or_else(|| {
                Error::Domain(format!("label {lambda} is not trivial on the subgroup"))
            })
    }

    fn transport_index(&self, lam: usize) -> Option<usize> {
        let g = &self.parent;
        if !self
            .subgroup
            .member_indices()
            .iter()
            .all(|&h| g.pairing_index(lam, h) == 0)
        {
            return None;
        }
        let n = g.exponent();
        let coords: Vec<i64> = self
            .basis_lifts
            .iter()
            .zip(self.quotient_group.factors())
            .map(|(&y, &d)| {
                let e = g.pairing_index(lam, y) * d;
                debug_assert_eq!(e % n, 0);
                (e / n) as i64
            })
            .collect();
        let q = &self.quotient_group;
        Some(q.label_index(&CharacterLabel::new(q.reduce(&coords).ok()?.coords().to_vec())))
    }

    /// Inverse of [`transport`](Self::transport).
    pub fn lift_character(&self, prime: &CharacterLabel) -> Result<CharacterLabel> {
        self.quotient_group.check_label(prime)?;
        Ok(self
            .parent
            .label(self.char_lift[self.quotient_group.label_index(prime)]))
    }

    pub fn lift_character_index(&self, prime: usize) -> usize {
        self.char_lift[prime]
    }
}

#[cfg(test)]
mod tests {
    use super::super::{annihilator, subgroup_of_order};
    use super::*;

    #[test]
    fn quotient_by_whole_group() {
        let g = GroupSpec::new(&[4, 3]).unwrap();
        let q = quotient(&g, &Subgroup::whole(&g));
        assert_eq!(q.quotient_group().order(), 1);
        assert_eq!(q.coset_reps(), vec![g.identity()]);
    }

    #[test]
    fn z6_mod_order_two() {
        let g = GroupSpec::cyclic(6).unwrap();
        let h = subgroup_of_order(&g, 2).unwrap();
        assert_eq!(h.member_indices(), &[0, 3]);
        let q = quotient(&g, &h);
        assert_eq!(q.quotient_group().order(), 3);
        let mut reps = q.coset_rep_indices().to_vec();
        reps.sort();
        assert_eq!(reps, vec![0, 1, 2]);
        assert_eq!(q.coset_rep_indices()[0], 0);
    }

    #[test]
    fn klein_mod_order_two() {
        let g = GroupSpec::new(&[2, 2]).unwrap();
        let h = Subgroup::generated_by(&g, &[GroupElement::new(vec![1, 0])]).unwrap();
        let q = quotient(&g, &h);
        assert_eq!(q.quotient_group().order(), 2);
        let diag = Subgroup::generated_by(&g, &[GroupElement::new(vec![1, 1])]).unwrap();
        let q = quotient(&g, &diag);
        assert_eq!(q.quotient_group().order(), 2);
        assert_eq!(q.project_index(1), q.project_index(2));
    }

    #[test]
    fn projection_is_homomorphism_with_h_as_kernel() {
        for factors in [vec![12], vec![2, 6], vec![4, 4], vec![2, 2, 3], vec![3, 9]] {
            let g = GroupSpec::new(&factors).unwrap();
            for d in (1..=g.order()).filter(|d| g.order() % d == 0) {
                let h = subgroup_of_order(&g, d).unwrap();
                let q = quotient(&g, &h);
                let qg = q.quotient_group();
                assert_eq!(qg.order() * d, g.order());
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let lhs = q.project_index(g.add_index(a, b));
                        let rhs = qg.add_index(q.project_index(a), q.project_index(b));
                        assert_eq!(lhs, rhs);
                        let diff = g.add_index(a, g.neg_index(b));
                        assert_eq!(
                            q.project_index(a) == q.project_index(b),
                            h.contains_index(diff)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transport_preserves_values() {
        for factors in [vec![12], vec![2, 6], vec![4, 2], vec![3, 3]] {
            let g = GroupSpec::new(&factors).unwrap();
            for d in (1..=g.order()).filter(|d| g.order() % d == 0) {
                let h = subgroup_of_order(&g, d).unwrap();
                let q = quotient(&g, &h);
                let qg = q.quotient_group();
                let ann = annihilator(&g, &h);
                for lam in ann.labels() {
                    let prime = q.transport(&lam).unwrap();
                    assert_eq!(q.lift_character(&prime).unwrap(), lam);
                    for y in 0..g.order() {
                        // lambda(y) as a fraction of a full turn on both sides.
                        let e_g = g.pairing_index(g.label_index(&lam), y) * qg.exponent();
                        let e_q = qg.pairing_index(qg.label_index(&prime), q.project_index(y))
                            * g.exponent();
                        assert_eq!(e_g % (g.exponent() * qg.exponent()), e_q);
                    }
                }
                if ann.order() < g.order() {
                    let outside = (0..g.order()).find(|&i| !ann.contains_index(i)).unwrap();
                    assert!(q.transport(&g.label(outside)).is_err());
                }
            }
        }
    }
}
