//! Invariants of `p`-groups: Frattini subgroup, generator rank and `Ω_1`.

use crate::analysis::structure::{derived_subgroup, normal_closure};
use crate::arith::prime_power;
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

/// The prime of a `p`-group; the trivial group is rejected.
pub fn require_p_group(p: &Group) -> Result<u64> {
    let n = p.order()? as u64;
    prime_power(n).map(|(q, _)| q).ok_or(GroupError::NotPGroup(n))
}

/// `Φ(P) = P' P^p`. The `p`-th powers form a conjugation-invariant set, so
/// the subgroup they generate is normal and the product is a subgroup.
pub fn frattini_pgroup(p: &Group) -> Result<Subgroup> {
    let prime = require_p_group(p)?;
    let powers: Vec<u32> = (0..p.len() as u32).map(|x| p.pow_idx(x, prime)).collect();
    let derived = derived_subgroup(p)?;
    Subgroup::generated(p, &powers)?.extend(derived.generators())
}

/// Minimal number of generators `d`, from `|P/Φ(P)| = p^d`.
pub fn min_generators(p: &Group) -> Result<u32> {
    let prime = require_p_group(p)?;
    let phi = frattini_pgroup(p)?;
    let mut index = (p.len() / phi.order()) as u64;
    let mut d = 0;
    while index > 1 {
        index /= prime;
        d += 1;
    }
    Ok(d)
}

/// `⟨x ∈ P : x^p = 1⟩`.
pub fn omega1(p: &Group) -> Result<Subgroup> {
    let prime = require_p_group(p)?;
    let orders = p.orders();
    let gens: Vec<u32> = (1..p.len() as u32)
        .filter(|&x| orders[x as usize] as u64 == prime)
        .collect();
    Subgroup::generated(p, &gens)
}

/// Subgroup generated by all involutions; normal by construction.
pub fn involution_subgroup(g: &Group) -> Result<Subgroup> {
    g.enumeration()?;
    let orders = g.orders();
    let gens: Vec<u32> = (1..g.len() as u32).filter(|&x| orders[x as usize] == 2).collect();
    normal_closure(g, &gens)
}

/// Whether every non-identity element has order `p` and the group is abelian.
pub fn is_elementary_abelian(g: &Group) -> Result<bool> {
    let n = g.order()?;
    if n == 1 {
        return Ok(true);
    }
    let Some((p, _)) = prime_power(n as u64) else {
        return Ok(false);
    };
    let orders = g.orders();
    Ok(orders[1..].iter().all(|&o| o as u64 == p) && crate::analysis::structure::is_abelian(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::structure::{center, commutator};
    use crate::constructions::basic;

    /// `⟨[x,y], x^p : x, y ∈ P⟩` over all pairs.
    fn frattini_by_pairs(p: &Group, prime: u64) -> Subgroup {
        let n = p.len() as u32;
        let mut gens = Vec::new();
        for x in 0..n {
            gens.push(p.pow_idx(x, prime));
            for y in 0..n {
                gens.push(commutator(p, x, y));
            }
        }
        Subgroup::generated(p, &gens).unwrap()
    }

    #[test]
    fn dihedral_frattini_is_center() {
        let d8 = basic::dihedral(8).unwrap();
        let phi = frattini_pgroup(&d8).unwrap();
        assert_eq!(phi, center(&d8).unwrap());
        assert_eq!(phi, frattini_by_pairs(&d8, 2));
        assert_eq!(min_generators(&d8).unwrap(), 2);
        assert_eq!(omega1(&d8).unwrap().order(), 8);
    }

    #[test]
    fn elementary_abelian_invariants() {
        for d in 1..=4u32 {
            let e = basic::elementary_abelian(2, d).unwrap();
            assert!(frattini_pgroup(&e).unwrap().is_trivial());
            assert_eq!(min_generators(&e).unwrap(), d);
            assert!(omega1(&e).unwrap().is_whole());
            assert!(is_elementary_abelian(&e).unwrap());
        }
    }

    #[test]
    fn frattini_matches_pair_scan() {
        for g in [
            basic::quaternion(8).unwrap(),
            basic::cyclic(8).unwrap(),
            basic::dihedral(16).unwrap(),
        ] {
            assert_eq!(frattini_pgroup(&g).unwrap(), frattini_by_pairs(&g, 2));
        }
    }

    #[test]
    fn non_p_groups_are_rejected() {
        let s3 = basic::symmetric(3).unwrap();
        assert_eq!(frattini_pgroup(&s3).unwrap_err(), GroupError::NotPGroup(6));
        assert_eq!(involution_subgroup(&s3).unwrap().order(), 6);
        let c9 = basic::cyclic(9).unwrap();
        assert!(involution_subgroup(&c9).unwrap().is_trivial());
    }
}
