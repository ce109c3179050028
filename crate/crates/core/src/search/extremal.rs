use super::{exact_witness, is_prime};
use crate::cyclo::{CycNumber, CyclotomicField};
use crate::error::{Error, Result};
use crate::fourier::Signal;
use crate::groups::{CharacterLabel, GroupSpec, Subgroup};

/// `f = 1_H * chi`, for which `|supp(f)| |supp(f^)| = n`.
pub fn extremal_subgroup_function(group: &GroupSpec, h: &Subgroup, chi: &CharacterLabel) -> Result<Signal> {
    if h.parent() != group {
        return Err(Error::Domain(format!("subgroup of {} used with {group}", h.parent())));
    }
    group.check_label(chi)?;
    let field = CyclotomicField::get(group.exponent());
    let c = group.label_index(chi);
    let mut values = vec![CycNumber::zero(&field); group.order()];
    for &x in h.member_indices() {
        values[x] = CycNumber::zeta_pow(&field, group.pairing_index(c, x) as i64);
    }
    Signal::new(group, values)
}

/// A function on `Z_p` supported on `S` whose transform vanishes exactly on
/// `T`, so that the two support sizes add up to `p + 1`.
///
/// `S` defaults to `{0, .., k-1}` and `T` to the first `k - 1` labels.
pub fn tao_tight_construct(p: usize, k: usize, s: Option<&[usize]>, t: Option<&[usize]>) -> Result<Signal> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if k == 0 || k > p {
        return Err(Error::Domain(format!("k = {k} outside [1, {p}]")));
    }
    let default_s: Vec<usize> = (0..k).collect();
    let default_t: Vec<usize> = (0..k - 1).collect();
    let s = s.unwrap_or(&default_s);
    let t = t.unwrap_or(&default_t);
    if s.len() != k || t.len() != k - 1 {
        return Err(Error::Domain(format!(
            "need |S| = {k} and |T| = {}, got {} and {}",
            k - 1,
            s.len(),
            t.len()
        )));
    }
    for (name, set) in [("S", s), ("T", t)] {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() || set.iter().any(|&x| x >= p) {
            return Err(Error::Domain(format!("{name} must be distinct indices below {p}")));
        }
    }
    let group = GroupSpec::cyclic(p)?;
    let field = CyclotomicField::get(p);
    exact_witness(&group, &field, s, t)
}
