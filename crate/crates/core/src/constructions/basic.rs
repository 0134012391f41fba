//! Cyclic, abelian, dihedral, dicyclic, symmetric and alternating groups.

use std::sync::Arc;

use crate::arith::is_prime;
use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::law::{AbelianLaw, DicyclicLaw, MetacyclicLaw, PermLaw};

fn bad(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

/// `Z/m_1 × ... × Z/m_r` on coordinate words.
pub fn abelian(moduli: &[u32]) -> Result<Group> {
    if moduli.contains(&0) {
        return Err(bad("abelian moduli are positive"));
    }
    let r = moduli.len();
    let gens = (0..r)
        .filter(|&i| moduli[i] > 1)
        .map(|i| {
            let mut w = vec![0; r];
            w[i] = 1;
            Element::word(w)
        })
        .collect();
    let label = format!(
        "abelian({})",
        moduli.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
    );
    Group::new(
        Arc::new(AbelianLaw {
            moduli: moduli.to_vec(),
        }),
        gens,
        label,
    )
}

pub fn cyclic(n: u32) -> Result<Group> {
    Ok(abelian(&[n])
        .map_err(|_| bad("cyclic(n) needs n >= 1"))?
        .with_label(format!("cyclic({n})")))
}

/// `C_p^d` as coordinate vectors over `F_p`.
pub fn elementary_abelian(p: u32, d: u32) -> Result<Group> {
    if !is_prime(p as u64) {
        return Err(bad(format!("elemab({p},{d}): {p} is not prime")));
    }
    Ok(abelian(&vec![p; d as usize])?.with_label(format!("elemab({p},{d})")))
}

/// Dihedral group of order `order`, as `C_n ⋊ C_2` with inversion.
pub fn dihedral(order: u32) -> Result<Group> {
    if order < 2 || order % 2 == 1 {
        return Err(bad("dihedral(n) needs an even order n >= 2"));
    }
    let n = order / 2;
    let law = MetacyclicLaw::new(n, 2, n - 1);
    let gens = vec![Element::word(vec![1 % n, 0]), Element::word(vec![0, 1])];
    Group::new(Arc::new(law), gens, format!("dihedral({order})"))
}

/// Dicyclic group of order `order = 4m`, `m >= 2`; order 8 is `Q_8`.
pub fn quaternion(order: u32) -> Result<Group> {
    if order < 8 || order % 4 != 0 {
        return Err(bad("quaternion(n) needs n divisible by 4 and n >= 8"));
    }
    let m = order / 4;
    let gens = vec![Element::word(vec![1, 0]), Element::word(vec![0, 1])];
    Group::new(Arc::new(DicyclicLaw { m }), gens, format!("quaternion({order})"))
}

fn perm_group(degree: usize, gens: Vec<Vec<u32>>, label: String) -> Result<Group> {
    let gens = gens.into_iter().map(Element::perm).collect();
    Group::new(Arc::new(PermLaw { degree }), gens, label)
}

/// `S_n` on `n` points.
pub fn symmetric(n: u32) -> Result<Group> {
    if n == 0 {
        return Err(bad("symmetric(n) needs n >= 1"));
    }
    let d = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<u32> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    }
    if n >= 3 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    perm_group(d, gens, format!("symmetric({n})"))
}

/// `A_n` on `n` points, generated by the 3-cycles `(1 2 i)`.
pub fn alternating(n: u32) -> Result<Group> {
    if n == 0 {
        return Err(bad("alternating(n) needs n >= 1"));
    }
    let gens = (2..n)
        .map(|i| {
            let mut c: Vec<u32> = (0..n).collect();
            c[0] = 1;
            c[1] = i;
            c[i as usize] = 0;
            c
        })
        .collect();
    perm_group(n as usize, gens, format!("alternating({n})"))
}

/// `C_n` generated by the `n`-cycle on `n` points.
pub fn cyclic_perm(n: u32) -> Result<Group> {
    if n == 0 {
        return Err(bad("cyclic_perm(n) needs n >= 1"));
    }
    perm_group(
        n as usize,
        vec![(0..n).map(|i| (i + 1) % n).collect()],
        format!("cyclic_perm({n})"),
    )
}

/// Permutation group on `degree` points from image arrays.
pub fn perms(degree: usize, gens: Vec<Vec<u32>>, label: String) -> Result<Group> {
    for g in &gens {
        if g.len() != degree {
            return Err(bad("permutation of the wrong degree"));
        }
    }
    perm_group(degree, gens, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{conjugacy_classes, exponent, is_abelian};

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).unwrap().order().unwrap(), 1);
        assert_eq!(cyclic(12).unwrap().order().unwrap(), 12);
        assert_eq!(abelian(&[2, 4, 3]).unwrap().order().unwrap(), 24);
        assert_eq!(elementary_abelian(2, 5).unwrap().order().unwrap(), 32);
        assert_eq!(dihedral(8).unwrap().order().unwrap(), 8);
        assert_eq!(dihedral(4).unwrap().order().unwrap(), 4);
        assert_eq!(quaternion(8).unwrap().order().unwrap(), 8);
        assert_eq!(quaternion(12).unwrap().order().unwrap(), 12);
        assert_eq!(symmetric(1).unwrap().order().unwrap(), 1);
        assert_eq!(symmetric(5).unwrap().order().unwrap(), 120);
        assert_eq!(alternating(3).unwrap().order().unwrap(), 3);
        assert_eq!(alternating(6).unwrap().order().unwrap(), 360);
        assert_eq!(cyclic_perm(5).unwrap().order().unwrap(), 5);
    }

    #[test]
    fn dihedral_and_quaternion_shape() {
        let d8 = dihedral(8).unwrap();
        assert!(!is_abelian(&d8).unwrap());
        assert_eq!(exponent(&d8).unwrap(), 4);
        let q8 = quaternion(8).unwrap();
        q8.enumeration().unwrap();
        assert_eq!(q8.orders().iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(q8.orders().iter().filter(|&&o| o == 4).count(), 6);
    }

    #[test]
    fn symmetric_four_has_five_classes() {
        assert_eq!(conjugacy_classes(&symmetric(4).unwrap()).unwrap().len(), 5);
    }

    #[test]
    fn bad_parameters() {
        assert!(cyclic(0).is_err());
        assert!(dihedral(7).is_err());
        assert!(quaternion(6).is_err());
        assert!(elementary_abelian(4, 2).is_err());
    }
}
