//! Centralizers, normalizers, Sylow theory and the derived and Fitting series.
//!
//! Everything here works in the element-index space of an enumerated group.
//! Whole-group scans use `Group::conjugation_images`, a single pass of table
//! lookups along the enumeration tree.

use crate::analysis::classes::conjugacy_classes;
use crate::arith::{lcm, p_part, prime_divisors, prime_power};
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::products::quotient_group;
use crate::subgroup::Subgroup;

/// `C_G(x)`.
pub fn centralizer(g: &Group, x: u32) -> Result<Subgroup> {
    g.enumeration()?;
    let images = g.conjugation_images(x);
    let members: Vec<u32> = (0..images.len() as u32).filter(|&h| images[h as usize] == x).collect();
    Subgroup::from_members(g, &members)
}

/// Indices of `⟨x⟩` as a membership mask.
fn cyclic_mask(g: &Group, x: u32) -> Vec<bool> {
    let mut mask = vec![false; g.len()];
    let mut cur = 0u32;
    loop {
        mask[cur as usize] = true;
        cur = g.mul_idx(cur, x);
        if cur == 0 {
            return mask;
        }
    }
}

/// `N_G(⟨x⟩)`.
pub fn normalizer_cyclic(g: &Group, x: u32) -> Result<Subgroup> {
    g.enumeration()?;
    let mask = cyclic_mask(g, x);
    let images = g.conjugation_images(x);
    let members: Vec<u32> = (0..images.len() as u32)
        .filter(|&h| mask[images[h as usize] as usize])
        .collect();
    Subgroup::from_members(g, &members)
}

/// `N_G(H)` for a subgroup of `g`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    let mask = h.mask();
    let mut keep = vec![true; g.len()];
    for &y in h.generators() {
        let images = g.conjugation_images(y);
        for (k, &im) in keep.iter_mut().zip(&images) {
            *k = *k && mask[im as usize];
        }
    }
    let members: Vec<u32> = (0..g.len() as u32).filter(|&i| keep[i as usize]).collect();
    Subgroup::from_members(g, &members)
}

/// `[a, b] = a^-1 b^-1 a b`.
pub fn commutator(g: &Group, a: u32, b: u32) -> u32 {
    let ab = g.mul_idx(a, b);
    let ba = g.mul_idx(b, a);
    g.mul_idx(g.inv_idx(ba), ab)
}

/// Smallest subgroup of `k` containing `s` and normalized by `k`.
pub fn normal_closure_in(k: &Subgroup, s: &[u32]) -> Result<Subgroup> {
    let g = k.parent();
    if k.is_whole() {
        return normal_closure(g, s);
    }
    let conjugators: Vec<u32> = k.generators().to_vec();
    let mut h = Subgroup::generated(g, s)?;
    let mut i = 0;
    while i < h.generators().len() {
        let x = h.generators()[i];
        for &c in &conjugators {
            let y = g.conj_idx(c, x);
            if !h.contains(y) {
                h = h.extend(&[y])?;
            }
        }
        i += 1;
    }
    Ok(h)
}

/// Normal closure of `s` in the whole group.
pub fn normal_closure(g: &Group, s: &[u32]) -> Result<Subgroup> {
    let mut h = Subgroup::generated(g, s)?;
    let conj = g.conj_tables();
    let mut i = 0;
    while i < h.generators().len() {
        let x = h.generators()[i] as usize;
        for t in conj {
            if !h.contains(t[x]) {
                h = h.extend(&[t[x]])?;
            }
        }
        i += 1;
    }
    Ok(h)
}

/// `K'` as the normal closure in `K` of the commutators of its generators.
pub fn derived_of(k: &Subgroup) -> Result<Subgroup> {
    let g = k.parent();
    let gens = k.generators();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = commutator(g, a, b);
            if c != 0 {
                comms.push(c);
            }
        }
    }
    normal_closure_in(k, &comms)
}

pub fn derived_subgroup(g: &Group) -> Result<Subgroup> {
    derived_of(&Subgroup::whole(g)?)
}

/// `G ≥ G' ≥ G'' ≥ ...` up to and including the first repeated term.
pub fn derived_series(g: &Group) -> Result<Vec<Subgroup>> {
    let mut series = vec![Subgroup::whole(g)?];
    loop {
        let last = series.last().unwrap();
        let next = derived_of(last)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            return Ok(series);
        }
    }
}

pub fn is_solvable(g: &Group) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// Number of steps to reach the trivial group.
pub fn derived_length(g: &Group) -> Result<usize> {
    let series = derived_series(g)?;
    if !series.last().unwrap().is_trivial() {
        return Err(GroupError::NotSolvable);
    }
    Ok(series.len() - 1)
}

fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// A Sylow `p`-subgroup, grown inside successive normalizers from the
/// trivial group by adding the least-index `p`-element outside it.
pub fn sylow(g: &Group, p: u64) -> Result<Subgroup> {
    let target = p_part(g.order()? as u64, p) as usize;
    let orders = g.orders();
    let mut sub = Subgroup::trivial(g)?;
    while sub.order() < target {
        let norm = normalizer(g, &sub)?;
        // P is normal in N(P) and not Sylow there, so N(P) has a p-element outside P
        let x = norm
            .members()
            .iter()
            .copied()
            .find(|&m| !sub.contains(m) && is_p_power(orders[m as usize] as u64, p))
            .expect("normalizer contains a p-element outside a non-Sylow p-subgroup");
        sub = sub.extend(&[x])?;
    }
    Ok(sub)
}

/// `O_p(G)`: the members of a Sylow `p`-subgroup whose whole class lies in
/// it, which is the intersection of all conjugates of that Sylow.
pub fn p_core(g: &Group, p: u64) -> Result<Subgroup> {
    let s = sylow(g, p)?;
    let cl = conjugacy_classes(g)?;
    let mask = s.mask();
    let members: Vec<u32> = s
        .members()
        .iter()
        .copied()
        .filter(|&x| cl.members(cl.class_of(x)).iter().all(|&y| mask[y as usize]))
        .collect();
    Subgroup::from_members(g, &members)
}

pub fn center(g: &Group) -> Result<Subgroup> {
    let cl = conjugacy_classes(g)?;
    let members: Vec<u32> = (0..cl.len())
        .filter(|&c| cl.size(c) == 1)
        .map(|c| cl.reps()[c])
        .collect();
    Subgroup::from_members(g, &members)
}

/// `F(G)`, generated by the `O_p(G)`.
pub fn fitting_subgroup(g: &Group) -> Result<Subgroup> {
    let mut f = Subgroup::trivial(g)?;
    for p in prime_divisors(g.order()? as u64) {
        let core = p_core(g, p)?;
        f = f.extend(core.generators())?;
    }
    Ok(f)
}

/// Length of the series `G, G/F(G), ...` down to the trivial group.
pub fn fitting_length(g: &Group) -> Result<usize> {
    if !is_solvable(g)? {
        return Err(GroupError::NotSolvable);
    }
    let mut cur = g.clone();
    let mut len = 0;
    while cur.order()? > 1 {
        let f = fitting_subgroup(&cur)?;
        cur = quotient_group(&cur, &f)?;
        len += 1;
    }
    Ok(len)
}

/// A finite group is nilpotent iff it is the product of its `p`-cores.
pub fn is_nilpotent(g: &Group) -> Result<bool> {
    let n = g.order()? as u64;
    let mut prod = 1u64;
    for p in prime_divisors(n) {
        prod *= p_core(g, p)?.order() as u64;
    }
    Ok(prod == n)
}

pub fn exponent(g: &Group) -> Result<u64> {
    g.enumeration()?;
    Ok(g.orders().iter().fold(1u64, |acc, &o| lcm(acc, o as u64)))
}

pub fn is_abelian(g: &Group) -> Result<bool> {
    g.enumeration()?;
    let gens = g.generator_indices();
    Ok(gens
        .iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul_idx(a, b) == g.mul_idx(b, a))))
}

/// The prime of a non-trivial `p`-group.
pub fn p_group_prime(g: &Group) -> Result<Option<u64>> {
    let n = g.order()? as u64;
    Ok(prime_power(n).map(|(p, _)| p))
}

/// `|N_G(⟨x⟩) : C_G(x)|` divides `φ(|x|)`; exposed for invariant checks.
pub fn normalizer_index(g: &Group, x: u32) -> Result<u64> {
    let n = normalizer_cyclic(g, x)?.order() as u64;
    let c = centralizer(g, x)?.order() as u64;
    Ok(n / c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::basic;

    #[test]
    fn dihedral_centralizer_and_normalizer() {
        let d8 = basic::dihedral(8).unwrap();
        d8.enumeration().unwrap();
        let r = (0..8u32).find(|&i| d8.order_of_idx(i) == 4).unwrap();
        assert_eq!(centralizer(&d8, r).unwrap().order(), 4);
        assert_eq!(normalizer_cyclic(&d8, r).unwrap().order(), 8);
        for i in 0..8u32 {
            if d8.order_of_idx(i) == 2 {
                assert_eq!(centralizer(&d8, i).unwrap(), normalizer_cyclic(&d8, i).unwrap());
            }
        }
    }

    #[test]
    fn quaternion_centralizer() {
        let q8 = basic::quaternion(8).unwrap();
        q8.enumeration().unwrap();
        let i = (0..8u32).find(|&i| q8.order_of_idx(i) == 4).unwrap();
        let c = centralizer(&q8, i).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.contains(i));
    }

    #[test]
    fn sylow_orders_in_symmetric_groups() {
        let s4 = basic::symmetric(4).unwrap();
        assert_eq!(sylow(&s4, 2).unwrap().order(), 8);
        assert_eq!(sylow(&s4, 3).unwrap().order(), 3);
        assert_eq!(sylow(&s4, 5).unwrap().order(), 1);
        assert_eq!(p_core(&s4, 2).unwrap().order(), 4);
        assert_eq!(p_core(&s4, 3).unwrap().order(), 1);
        let a6 = basic::alternating(6).unwrap();
        let p = sylow(&a6, 2).unwrap().to_group("P").unwrap();
        assert_eq!(p.order().unwrap(), 8);
        assert_eq!(exponent(&p).unwrap(), 4);
        assert!(!is_abelian(&p).unwrap());
    }

    #[test]
    fn derived_series_and_solvability() {
        let s4 = basic::symmetric(4).unwrap();
        let orders: Vec<usize> = derived_series(&s4).unwrap().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert_eq!(derived_length(&s4).unwrap(), 3);
        let a5 = basic::alternating(5).unwrap();
        assert!(!is_solvable(&a5).unwrap());
        assert_eq!(derived_subgroup(&a5).unwrap().order(), 60);
        assert_eq!(fitting_length(&a5).unwrap_err(), GroupError::NotSolvable);
    }

    #[test]
    fn fitting_of_symmetric_four() {
        let s4 = basic::symmetric(4).unwrap();
        assert_eq!(fitting_subgroup(&s4).unwrap().order(), 4);
        assert_eq!(fitting_length(&s4).unwrap(), 3);
        assert!(!is_nilpotent(&s4).unwrap());
        let d8 = basic::dihedral(8).unwrap();
        assert!(is_nilpotent(&d8).unwrap());
        assert_eq!(fitting_length(&d8).unwrap(), 1);
        assert_eq!(center(&d8).unwrap().order(), 2);
    }

    #[test]
    fn normal_closure_examples() {
        let d8 = basic::dihedral(8).unwrap();
        d8.enumeration().unwrap();
        let z = center(&d8).unwrap().members()[1];
        let refl = (0..8u32).find(|&i| d8.order_of_idx(i) == 2 && i != z).unwrap();
        assert_eq!(normal_closure(&d8, &[refl]).unwrap().order(), 4);
        assert_eq!(normal_closure(&d8, &[0]).unwrap().order(), 1);
        let a4 = basic::alternating(4).unwrap();
        a4.enumeration().unwrap();
        let three = (0..12u32).find(|&i| a4.order_of_idx(i) == 3).unwrap();
        assert_eq!(normal_closure(&a4, &[three]).unwrap().order(), 12);
    }
}
