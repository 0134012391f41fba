//! Frobenius complements and kernels.

use crate::analysis::classes::conjugacy_classes;
use crate::analysis::structure::normalizer;
use crate::error::Result;
use crate::group::Group;
use crate::subgroup::Subgroup;

#[derive(Debug, Clone)]
pub struct FrobeniusCheck {
    pub is_frobenius: bool,
    pub kernel: Option<Subgroup>,
}

impl FrobeniusCheck {
    fn no() -> Self {
        FrobeniusCheck {
            is_frobenius: false,
            kernel: None,
        }
    }
}

/// Whether `K ∩ gKg^-1 = 1` for all `g ∉ K`, with the kernel on success.
///
/// Such a `K` is self-normalizing, so it has `|G:K|` conjugates, and they
/// meet trivially iff their union has `|G:K|(|K|-1)` non-identity elements.
/// `x` lies in some conjugate of `K` iff its class meets `K`.
pub fn is_frobenius_with_complement(g: &Group, k: &Subgroup) -> Result<FrobeniusCheck> {
    let n = g.order()?;
    if k.is_trivial() || k.is_whole() {
        return Ok(FrobeniusCheck::no());
    }
    if normalizer(g, k)?.order() != k.order() {
        return Ok(FrobeniusCheck::no());
    }
    let cl = conjugacy_classes(g)?;
    let mut hit = vec![false; cl.len()];
    for &x in &k.members()[1..] {
        hit[cl.class_of(x)] = true;
    }
    let covered: usize = (0..cl.len()).filter(|&c| hit[c]).map(|c| cl.size(c)).sum();
    let index = n / k.order();
    if covered != index * (k.order() - 1) {
        return Ok(FrobeniusCheck::no());
    }
    let kernel: Vec<u32> = (0..n as u32).filter(|&x| !hit[cl.class_of(x)]).collect();
    if kernel.len() != index {
        return Ok(FrobeniusCheck::no());
    }
    match Subgroup::from_members(g, &kernel) {
        Ok(kern) => Ok(FrobeniusCheck {
            is_frobenius: true,
            kernel: Some(kern),
        }),
        Err(_) => Ok(FrobeniusCheck::no()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::basic;

    #[test]
    fn symmetric_three_is_frobenius() {
        let s3 = basic::symmetric(3).unwrap();
        s3.enumeration().unwrap();
        let t = (0..6u32).find(|&i| s3.order_of_idx(i) == 2).unwrap();
        let k = Subgroup::generated(&s3, &[t]).unwrap();
        let res = is_frobenius_with_complement(&s3, &k).unwrap();
        assert!(res.is_frobenius);
        assert_eq!(res.kernel.unwrap().order(), 3);
    }

    #[test]
    fn dihedral_eight_reflection_is_not_a_complement() {
        let d8 = basic::dihedral(8).unwrap();
        d8.enumeration().unwrap();
        for t in (1..8u32).filter(|&i| d8.order_of_idx(i) == 2) {
            let k = Subgroup::generated(&d8, &[t]).unwrap();
            assert!(!is_frobenius_with_complement(&d8, &k).unwrap().is_frobenius);
        }
    }
}
