use super::{quotient, CharacterLabel, GroupElement, GroupSpec};
use crate::error::{Error, Result};

/// A subgroup of a [`GroupSpec`], stored as its sorted element indices.
///
/// The same type represents subgroups of the dual group (annihilators); in
/// that case the member indices are label indices of `parent`.
///
/// Equality compares the parent and the members, not the generators.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: GroupSpec,
    generators: Vec<GroupElement>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by `generators`.
    pub fn generated_by(parent: &GroupSpec, generators: &[GroupElement]) -> Result<Self> {
        for g in generators {
            parent.check_element(g)?;
        }
        let gens: Vec<usize> = generators.iter().map(|g| parent.index(g)).collect();
        let mask = closure(parent, &gens, None);
        Ok(Self::from_mask(parent, generators.to_vec(), mask))
    }

    pub fn trivial(parent: &GroupSpec) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Self::from_mask(parent, Vec::new(), mask)
    }

    pub fn whole(parent: &GroupSpec) -> Self {
        let gens = (0..parent.rank())
            .filter(|&i| parent.factors()[i] > 1)
            .map(|i| {
                let mut c = vec![0; parent.rank()];
                c[i] = 1;
                GroupElement::new(c)
            })
            .collect();
        Self::from_mask(parent, gens, vec![true; parent.order()])
    }

    /// Builds a subgroup from a membership set that is already known to be
    /// closed; a small generating set is extracted greedily.
    pub(crate) fn from_closed_members(parent: &GroupSpec, mask: Vec<bool>) -> Self {
        let mut gens = Vec::new();
        let mut span = vec![false; parent.order()];
        span[0] = true;
        for i in 0..parent.order() {
            if mask[i] && !span[i] {
                gens.push(i);
                span = closure(parent, &gens, Some(span));
            }
        }
        debug_assert_eq!(span, mask);
        let gens = gens.into_iter().map(|i| parent.element(i)).collect();
        Self::from_mask(parent, gens, mask)
    }

    fn from_mask(parent: &GroupSpec, generators: Vec<GroupElement>, mask: Vec<bool>) -> Self {
        let members = (0..parent.order()).filter(|&i| mask[i]).collect();
        Subgroup {
            parent: parent.clone(),
            generators,
            members,
            mask,
        }
    }

    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted member indices in the parent's enumeration order.
    pub fn member_indices(&self) -> &[usize] {
        &self.members
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members.iter().map(|&i| self.parent.element(i)).collect()
    }

    /// Members read as character labels (for annihilators).
    pub fn labels(&self) -> Vec<CharacterLabel> {
        self.members.iter().map(|&i| self.parent.label(i)).collect()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.parent.check_element(x).is_ok() && self.mask[self.parent.index(x)]
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn contains_label(&self, chi: &CharacterLabel) -> bool {
        self.parent.check_label(chi).is_ok() && self.mask[self.parent.label_index(chi)]
    }

    /// A cyclic factor list for the abstract group `H`, obtained as the
    /// quotient of the dual by the annihilator (`H^ = G^ / H^perp`, and a
    /// finite abelian group is isomorphic to its dual).
    pub fn structure(&self) -> GroupSpec {
        let ann = annihilator(&self.parent, self);
        quotient(&self.parent, &ann).quotient_group().clone()
    }
}

/// Closure of `gens` under addition, optionally starting from an already
/// closed set.
fn closure(g: &GroupSpec, gens: &[usize], start: Option<Vec<bool>>) -> Vec<bool> {
    let mut mask = start.unwrap_or_else(|| {
        let mut m = vec![false; g.order()];
        m[0] = true;
        m
    });
    let mut frontier: Vec<usize> = (0..g.order()).filter(|&i| mask[i]).collect();
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.add_index(x, s);
            if !mask[y] {
                mask[y] = true;
                frontier.push(y);
            }
        }
    }
    mask
}

fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn valuation(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// A deterministic subgroup of order `d`.
///
/// Each prime power `p^a` of `d` is spread greedily over the factors in index
/// order, taking as much of `p` as each `Z_m` can hold. Inside `Z_m` the
/// subgroup of order `c` is generated by `m / c`.
pub fn subgroup_of_order(g: &GroupSpec, d: usize) -> Result<Subgroup> {
    if d == 0 || g.order() % d != 0 {
        return Err(Error::NoSuchSubgroup {
            order: d,
            group_order: g.order(),
        });
    }
    let mut local = vec![1usize; g.rank()];
    for (p, mut need) in factorize(d) {
        for (i, &m) in g.factors().iter().enumerate() {
            if need == 0 {
                break;
            }
            let take = need.min(valuation(m, p));
            local[i] *= p.pow(take);
            need -= take;
        }
        if need > 0 {
            return Err(Error::NoSuchSubgroup {
                order: d,
                group_order: g.order(),
            });
        }
    }
    let gens: Vec<GroupElement> = local
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 1)
        .map(|(i, &c)| {
            let mut coords = vec![0; g.rank()];
            coords[i] = g.factors()[i] / c;
            GroupElement::new(coords)
        })
        .collect();
    let h = Subgroup::generated_by(g, &gens)?;
    debug_assert_eq!(h.order(), d);
    Ok(h)
}

/// `H^perp`: the labels whose characters are trivial on `h`.
pub fn annihilator(g: &GroupSpec, h: &Subgroup) -> Subgroup {
    let gens: Vec<usize> = if h.generators().is_empty() {
        h.member_indices().to_vec()
    } else {
        h.generators().iter().map(|x| g.index(x)).collect()
    };
    let mask = (0..g.order())
        .map(|chi| gens.iter().all(|&x| g.pairing_index(chi, x) == 0))
        .collect();
    Subgroup::from_closed_members(g, mask)
}
