//! Deciding π-irrationality through power orbits.
//!
//! For `x` of order `n`, `B(x)` is the set of units `k` mod `n` with `x^k`
//! conjugate to `x`. It is the image of `N(⟨x⟩)/C(x)` in `Aut(⟨x⟩)`, so
//! `C(x) = N(⟨x⟩)` exactly when `B(x) = {1}`, and `φ(n)/|B(x)|` is the degree
//! of the field generated by the character values at `x`.

use crate::analysis::{conjugacy_classes, is_real};
use crate::arith::{euler_phi, is_pi_number, prime_divisors, units_mod};
use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    /// Element index.
    pub x: u32,
    pub order: u64,
    /// Units `k` with `x^k ~ x`, ascending; always a subgroup containing 1.
    pub units: Vec<u64>,
    pub field_degree: u64,
}

impl PowerOrbit {
    pub fn is_trivial(&self) -> bool {
        self.units.len() == 1
    }
}

/// `g x g^-1 = x^k` with `k ≢ 1 (mod order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: Element,
    pub k: u64,
    pub g: Element,
    pub order: u64,
}

impl Witness {
    /// Re-checks the conjugation identity in `group`.
    pub fn verify(&self, group: &Group) -> bool {
        let lhs = group.conjugate(&self.g, &self.x);
        let k_ok = self.order > 1 && self.k % self.order != 1 % self.order;
        k_ok && lhs == group.pow(&self.x, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Irrational,
    Witnessed(Witness),
}

impl Verdict {
    pub fn is_irrational(&self) -> bool {
        matches!(self, Verdict::Irrational)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Irrational => None,
            Verdict::Witnessed(w) => Some(w),
        }
    }
}

/// Powers `x^0, x^1, ..., x^{n-1}` by index.
fn cyclic_powers(g: &Group, x: u32) -> Vec<u32> {
    let mut out = vec![0u32];
    let mut cur = x;
    while cur != 0 {
        out.push(cur);
        cur = g.mul_idx(cur, x);
    }
    out
}

pub fn power_orbit(g: &Group, x: u32) -> Result<PowerOrbit> {
    let cl = conjugacy_classes(g)?;
    let powers = cyclic_powers(g, x);
    let n = powers.len() as u64;
    let units: Vec<u64> = units_mod(n)
        .into_iter()
        .filter(|&k| cl.same_class(x, powers[k as usize]))
        .map(|k| if n == 1 { 1 } else { k })
        .collect();
    let field_degree = euler_phi(n) / units.len() as u64;
    Ok(PowerOrbit {
        x,
        order: n,
        units,
        field_degree,
    })
}

/// Least nontrivial `k` in the power orbit of the class representative
/// `r`, with the conjugator rebuilt from the class tree.
fn witness_for(g: &Group, r: u32) -> Result<Option<Witness>> {
    let cl = conjugacy_classes(g)?;
    let powers = cyclic_powers(g, r);
    let n = powers.len() as u64;
    for k in units_mod(n).into_iter().skip(1) {
        let y = powers[k as usize];
        if cl.same_class(r, y) {
            let c = cl.conjugator(g, y);
            return Ok(Some(Witness {
                x: g.element(r).clone(),
                k,
                g: g.element(c).clone(),
                order: n,
            }));
        }
    }
    Ok(None)
}

/// A witness that `x^k` is conjugate to `x`, when it is and `k ≢ 1`.
pub fn power_witness(g: &Group, x: u32, k: u64) -> Result<Option<Witness>> {
    let cl = conjugacy_classes(g)?;
    let n = g.order_of_idx(x);
    let y = g.pow_idx(x, k);
    if k % n == 1 % n || !cl.same_class(x, y) {
        return Ok(None);
    }
    // c_x r c_x^-1 = x and c_y r c_y^-1 = y for the common representative r
    let cx = cl.conjugator(g, x);
    let cy = cl.conjugator(g, y);
    let c = g.mul_idx(cy, g.inv_idx(cx));
    Ok(Some(Witness {
        x: g.element(x).clone(),
        k: k % n,
        g: g.element(c).clone(),
        order: n,
    }))
}

/// A generator `t` conjugating a generator `s` to a power `s^k ≠ s`, found
/// by the law alone without enumerating the group.
pub fn generator_witness(g: &Group, pi: &[u64]) -> Result<Option<Witness>> {
    for s in g.generators() {
        let n = g.element_order(s)?;
        if n <= 2 || !is_pi_number(n, pi) {
            continue;
        }
        let images: Vec<Element> = g.generators().iter().map(|t| g.conjugate(t, s)).collect();
        if images.iter().all(|c| c == s) {
            continue;
        }
        let mut power = s.clone();
        for k in 2..n {
            power = g.mul(&power, s);
            if let Some(i) = images.iter().position(|c| *c == power) {
                return Ok(Some(Witness {
                    x: s.clone(),
                    k,
                    g: g.generators()[i].clone(),
                    order: n,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether every π-element `x` has `C(x) = N(⟨x⟩)`; otherwise a witness.
/// Elements of order at most 2 are skipped since `Aut(⟨x⟩)` is trivial.
///
/// A witness among the generators is returned before any class is built.
pub fn pi_irrationality(g: &Group, pi: &[u64]) -> Result<Verdict> {
    if let Some(&p) = pi.iter().find(|&&p| !crate::arith::is_prime(p)) {
        return Err(GroupError::InvalidParameters(format!("{p} is not prime")));
    }
    if let Some(w) = generator_witness(g, pi)? {
        return Ok(Verdict::Witnessed(w));
    }
    let cl = conjugacy_classes(g)?;
    for &r in cl.reps() {
        let n = g.order_of_idx(r);
        if n <= 2 || !is_pi_number(n, pi) {
            continue;
        }
        if let Some(w) = witness_for(g, r)? {
            return Ok(Verdict::Witnessed(w));
        }
    }
    Ok(Verdict::Irrational)
}

pub fn is_pi_irrational(g: &Group, pi: &[u64]) -> Result<bool> {
    Ok(pi_irrationality(g, pi)?.is_irrational())
}

/// π-irrationality for `π` the set of all primes dividing `|G|`.
pub fn irrationality(g: &Group) -> Result<Verdict> {
    let primes = prime_divisors(g.order()? as u64);
    pi_irrationality(g, &primes)
}

pub fn is_irrational(g: &Group) -> Result<bool> {
    Ok(irrationality(g)?.is_irrational())
}

/// Odd primes dividing `|G|`, the usual reading of `2'`.
pub fn odd_primes(g: &Group) -> Result<Vec<u64>> {
    Ok(prime_divisors(g.order()? as u64)
        .into_iter()
        .filter(|&p| p != 2)
        .collect())
}

/// `C(x) = N(⟨x⟩)` by a direct scan of all conjugates of `x`, without the
/// class partition. Agrees with `power_orbit(g, x).is_trivial()`.
pub fn crosscheck_nc(g: &Group, x: u32) -> Result<bool> {
    g.enumeration()?;
    let mut in_cyclic = vec![false; g.len()];
    for p in cyclic_powers(g, x) {
        in_cyclic[p as usize] = true;
    }
    Ok(g.conjugation_images(x)
        .into_iter()
        .all(|y| y == x || !in_cyclic[y as usize]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub rep: u32,
    pub order: u64,
    pub class_size: usize,
    pub units: Vec<u64>,
    pub field_degree: u64,
    pub real: bool,
}

#[derive(Debug, Clone)]
pub struct IrrationalityReport {
    pub order: usize,
    pub rows: Vec<ClassRow>,
    /// `(p, G is p-irrational)` for each prime dividing `|G|`.
    pub primes: Vec<(u64, bool)>,
    pub irrational: bool,
}

pub fn irrationality_report(g: &Group) -> Result<IrrationalityReport> {
    let cl = conjugacy_classes(g)?;
    let mut rows = Vec::with_capacity(cl.len());
    for (c, &r) in cl.reps().iter().enumerate() {
        let orbit = power_orbit(g, r)?;
        rows.push(ClassRow {
            rep: r,
            order: orbit.order,
            class_size: cl.size(c),
            real: is_real(g, r)?,
            units: orbit.units,
            field_degree: orbit.field_degree,
        });
    }
    let order = g.order()?;
    let primes: Vec<(u64, bool)> = prime_divisors(order as u64)
        .into_iter()
        .map(|p| {
            let ok = rows
                .iter()
                .filter(|row| is_pi_number(row.order, &[p]))
                .all(|row| row.units.len() == 1);
            (p, ok)
        })
        .collect();
    let irrational = rows.iter().all(|row| row.units.len() == 1);
    Ok(IrrationalityReport {
        order,
        rows,
        primes,
        irrational,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::basic::{cyclic, dihedral, quaternion, symmetric};

    #[test]
    fn dihedral_eight_has_inverting_witness() {
        let g = dihedral(8).unwrap();
        let v = irrationality(&g).unwrap();
        let w = v.witness().expect("D8 is not irrational");
        assert_eq!((w.order, w.k), (4, 3));
        assert!(w.verify(&g));
        assert!(!is_pi_irrational(&g, &[2]).unwrap());
    }

    #[test]
    fn generator_witness_needs_no_enumeration() {
        let g = crate::constructions::families::metacyclic(7, 3, 2).unwrap();
        let w = generator_witness(&g, &[7]).unwrap().expect("b a b^-1 = a^2");
        assert_eq!((w.order, w.k), (7, 2));
        assert!(!g.is_enumerated());
        assert!(w.verify(&g));
        // commuting generators leave the class scan to decide
        assert!(generator_witness(&cyclic(12).unwrap(), &[2, 3]).unwrap().is_none());
    }

    #[test]
    fn abelian_and_vacuous_cases() {
        assert!(is_irrational(&cyclic(12).unwrap()).unwrap());
        let s4 = symmetric(4).unwrap();
        assert!(is_pi_irrational(&s4, &[5]).unwrap());
        assert!(!is_pi_irrational(&s4, &[3]).unwrap());
    }

    #[test]
    fn power_orbit_of_three_cycle() {
        let s3 = symmetric(3).unwrap();
        s3.enumeration().unwrap();
        let x = (0..s3.len() as u32).find(|&i| s3.order_of_idx(i) == 3).unwrap();
        let o = power_orbit(&s3, x).unwrap();
        assert_eq!(o.units, vec![1, 2]);
        assert_eq!(o.field_degree, 1);
        assert!(!crosscheck_nc(&s3, x).unwrap());
    }

    #[test]
    fn oracle_agreement_on_small_groups() {
        for g in [dihedral(12).unwrap(), quaternion(8).unwrap(), symmetric(4).unwrap()] {
            let cl = conjugacy_classes(&g).unwrap();
            for &r in cl.reps() {
                assert_eq!(power_orbit(&g, r).unwrap().is_trivial(), crosscheck_nc(&g, r).unwrap());
            }
        }
    }

    #[test]
    fn power_witness_for_non_representatives() {
        let s4 = symmetric(4).unwrap();
        s4.enumeration().unwrap();
        for x in 0..s4.len() as u32 {
            let n = s4.order_of_idx(x);
            if n > 2 {
                let w = power_witness(&s4, x, n - 1).unwrap().expect("S4 elements are real");
                assert!(w.verify(&s4));
                assert_eq!(&w.x, s4.element(x));
            }
        }
    }

    #[test]
    fn report_for_cyclic_six() {
        let rep = irrationality_report(&cyclic(6).unwrap()).unwrap();
        assert_eq!(rep.rows.len(), 6);
        assert!(rep.rows.iter().all(|r| r.units.len() == 1));
        assert_eq!(rep.primes, vec![(2, true), (3, true)]);
    }
}
