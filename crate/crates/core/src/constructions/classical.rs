//! Classical matrix groups `GL, SL, PSL, SU, PSU, Sp, PSp` over GF(q).
//!
//! `SL` is generated by the adjacent elementary transvections with entries
//! from an `F_p`-basis of `F_q`. `Sp(2m, q)` uses the form
//! `[[0, I], [-I, 0]]` and transvections `x -> x + a⟨x,v⟩v` along the
//! 0/1 vectors `v`. `SU(3, q)` lives in `GL(3, q^2)` with the antidiagonal
//! Hermitian form and is generated by its lower unitriangular subgroup, a
//! torus element and the antidiagonal Weyl element.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::prime_power;
use crate::constructions::greedy_generators;
use crate::error::{GroupError, Result};
use crate::field::FieldCtx;
use crate::group::Group;
use crate::law::{Law, MatLaw};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    GL,
    SL,
    PSL,
    SU,
    PSU,
    Sp,
    PSp,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::GL,
        Family::SL,
        Family::PSL,
        Family::SU,
        Family::PSU,
        Family::Sp,
        Family::PSp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GL => "gl",
            Family::SL => "sl",
            Family::PSL => "psl",
            Family::SU => "su",
            Family::PSU => "psu",
            Family::Sp => "sp",
            Family::PSp => "psp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::InvalidParameters(format!("unknown classical family {s:?}")))
    }
}

fn field_of_order(q: u32) -> Result<Arc<FieldCtx>> {
    prime_power(q as u64).ok_or_else(|| GroupError::InvalidParameters(format!("{q} is not a prime power")))?;
    Ok(FieldCtx::with_order(q as u64)?)
}

/// Packed values of `1, X, ..., X^{k-1}`, an `F_p`-basis of the field.
pub fn additive_basis(f: &FieldCtx) -> Vec<u32> {
    let p = f.characteristic();
    (0..f.degree()).map(|i| p.pow(i)).collect()
}

fn elementary(f: &FieldCtx, n: usize, i: usize, j: usize, a: u32) -> Matrix {
    let mut m = Matrix::identity(n);
    m.set(i, j, f.add(m.get(i, j), a));
    m
}

fn sl_generators(f: &FieldCtx, n: usize) -> Vec<Matrix> {
    let basis = additive_basis(f);
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for &a in &basis {
            gens.push(elementary(f, n, i, i + 1, a));
            gens.push(elementary(f, n, i + 1, i, a));
        }
    }
    gens
}

/// Scalars `λ` with `λ^n = 1`: the centre of `SL(n, q)`.
fn roots_of_unity(f: &FieldCtx, n: u64) -> Vec<u32> {
    (1..f.size()).filter(|&l| f.pow(l, n) == 1).collect()
}

fn matrix_group(law: MatLaw, gens: Vec<Matrix>, label: String) -> Result<Group> {
    let elems = gens.iter().map(|m| law.element(m)).collect();
    Group::new(Arc::new(law), elems, label)
}

pub fn general_linear(n: u32, q: u32) -> Result<Group> {
    let f = field_of_order(q)?;
    let n = n as usize;
    let mut gens = sl_generators(&f, n);
    if q > 2 && n > 0 {
        let mut d = Matrix::identity(n);
        d.set(0, 0, f.primitive_element());
        gens.push(d);
    }
    matrix_group(MatLaw::linear(f, n), gens, format!("gl({n},{q})"))
}

pub fn special_linear(n: u32, q: u32, projective: bool) -> Result<Group> {
    let f = field_of_order(q)?;
    let gens = sl_generators(&f, n as usize);
    let (law, name) = if projective {
        let scalars = roots_of_unity(&f, n as u64);
        (MatLaw::projective(f, n as usize, scalars), "psl")
    } else {
        (MatLaw::linear(f, n as usize), "sl")
    };
    matrix_group(law, gens, format!("{name}({n},{q})"))
}

/// The alternating form `[[0, I], [-I, 0]]` as a matrix.
pub fn symplectic_form(f: &FieldCtx, dim: usize) -> Matrix {
    let m = dim / 2;
    let mut j = Matrix::new(dim, vec![0; dim * dim]);
    for i in 0..m {
        j.set(i, m + i, 1);
        j.set(m + i, i, f.neg(1));
    }
    j
}

/// Whether `g^T J g = J`.
pub fn preserves_form(f: &FieldCtx, g: &Matrix, j: &Matrix) -> bool {
    g.transpose().mul(j, f).mul(g, f) == *j
}

pub fn symplectic(dim: u32, q: u32, projective: bool) -> Result<Group> {
    if dim == 0 || dim % 2 == 1 {
        return Err(GroupError::InvalidParameters(format!(
            "sp({dim},{q}): dimension must be even and positive"
        )));
    }
    let f = field_of_order(q)?;
    let d = dim as usize;
    let form = symplectic_form(&f, d);
    let basis = additive_basis(&f);
    let mut gens = Vec::new();
    for bits in 1u32..(1 << d) {
        let v: Vec<u32> = (0..d).map(|i| bits >> i & 1).collect();
        // x + a⟨x,v⟩v = (I + a v (Jv)^T) x
        let jv = form.apply(&v, &f);
        for &a in &basis {
            let mut m = Matrix::identity(d);
            for r in 0..d {
                for c in 0..d {
                    let add = f.mul(a, f.mul(v[r], jv[c]));
                    m.set(r, c, f.add(m.get(r, c), add));
                }
            }
            gens.push(m);
        }
    }
    let (law, name) = if projective && q % 2 == 1 {
        (MatLaw::projective(f.clone(), d, vec![1, f.neg(1)]), "psp")
    } else if projective {
        (MatLaw::linear(f.clone(), d), "psp")
    } else {
        (MatLaw::linear(f.clone(), d), "sp")
    };
    matrix_group(law, gens, format!("{name}({dim},{q})"))
}

/// The antidiagonal ones matrix.
pub fn antidiagonal(n: usize) -> Matrix {
    let mut j = Matrix::new(n, vec![0; n * n]);
    for i in 0..n {
        j.set(i, n - 1 - i, 1);
    }
    j
}

/// Whether `g^T J ḡ = J` with `ḡ` the entrywise `x -> x^q` conjugate.
pub fn is_unitary(f2: &FieldCtx, g: &Matrix, j: &Matrix) -> bool {
    let bar = g.map(|v| f2.conjugate(v).expect("quadratic extension"));
    g.transpose().mul(j, f2).mul(&bar, f2) == *j
}

/// Lower unitriangular 3×3 matrices over `F_{q^2}` that are unitary for the
/// antidiagonal form.
pub fn unitary_lower_unitriangular(f2: &FieldCtx) -> Vec<Matrix> {
    let j = antidiagonal(3);
    let mut out = Vec::new();
    for x in f2.elements() {
        for y in f2.elements() {
            for z in f2.elements() {
                let m = Matrix::new(3, vec![1, 0, 0, x, 1, 0, y, z, 1]);
                if is_unitary(f2, &m, &j) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Hermitian inner product `u^T v̄` over `F_{q^2}`.
fn herm(f2: &FieldCtx, u: &[u32], v: &[u32]) -> u32 {
    u.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| f2.add(acc, f2.mul(a, f2.conjugate(b).unwrap())))
}

/// A matrix `D` with `D^T D̄ = J` (antidiagonal), so `g -> D^-1 g D` carries
/// the unitary group of the identity form onto that of `J`.
pub fn unitary_frame(f2: &FieldCtx) -> Option<Matrix> {
    let q2 = f2.size();
    let vectors: Vec<[u32; 3]> = (0..q2 * q2 * q2)
        .map(|i| [i % q2, i / q2 % q2, i / (q2 * q2)])
        .collect();
    let isotropic: Vec<&[u32; 3]> = vectors[1..].iter().filter(|v| herm(f2, &v[..], &v[..]) == 0).collect();
    let d2 = vectors.iter().find(|v| herm(f2, &v[..], &v[..]) == 1)?;
    for d1 in isotropic.iter().filter(|v| herm(f2, &v[..], d2) == 0) {
        for d3 in isotropic.iter().filter(|v| herm(f2, &v[..], d2) == 0) {
            if herm(f2, &d1[..], &d3[..]) == 1 {
                let cols = [d1, d2, d3];
                let mut d = Matrix::new(3, vec![0; 9]);
                for (c, col) in cols.iter().enumerate() {
                    for r in 0..3 {
                        d.set(r, c, col[r]);
                    }
                }
                return Some(d);
            }
        }
    }
    None
}

pub fn special_unitary(n: u32, q: u32, projective: bool) -> Result<Group> {
    if n != 3 {
        return Err(GroupError::InvalidParameters(format!(
            "su({n},{q}): only dimension 3 is supported"
        )));
    }
    let (p, e) =
        prime_power(q as u64).ok_or_else(|| GroupError::InvalidParameters(format!("{q} is not a prime power")))?;
    let f2 = FieldCtx::new(p, 2 * e)?;
    let q64 = q as u64;
    let unip = unitary_lower_unitriangular(&f2);
    let lin: Arc<dyn Law> = Arc::new(MatLaw::linear(f2.clone(), 3));
    let lin_law = MatLaw::linear(f2.clone(), 3);
    let candidates: Vec<_> = unip.iter().map(|m| lin_law.element(m)).collect();
    let mut gens: Vec<Matrix> = greedy_generators(&lin, &candidates, 1 << 20)?
        .iter()
        .map(|e| lin_law.matrix(e))
        .collect();
    let lambda = f2.primitive_element();
    let inv_q = f2.inv(f2.pow(lambda, q64)).unwrap();
    gens.push(Matrix::diagonal(&[lambda, f2.pow(lambda, q64 - 1), inv_q]));
    // -J has determinant 1 in dimension 3
    gens.push(antidiagonal(3).scale(f2.neg(1), &f2));
    let (law, name) = if projective {
        let scalars: Vec<u32> = (1..f2.size())
            .filter(|&l| f2.pow(l, 3) == 1 && f2.pow(l, q64 + 1) == 1)
            .collect();
        (MatLaw::projective(f2, 3, scalars), "psu")
    } else {
        (MatLaw::linear(f2, 3), "su")
    };
    matrix_group(law, gens, format!("{name}({n},{q})"))
}

pub fn classical(family: Family, n: u32, q: u32) -> Result<Group> {
    match family {
        Family::GL => general_linear(n, q),
        Family::SL => special_linear(n, q, false),
        Family::PSL => special_linear(n, q, true),
        Family::SU => special_unitary(n, q, false),
        Family::PSU => special_unitary(n, q, true),
        Family::Sp => symplectic(n, q, false),
        Family::PSp => symplectic(n, q, true),
    }
}

/// `|PSL(2, q)| = q(q^2-1)/gcd(2, q-1)`.
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / crate::arith::gcd(2, q - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{center, conjugacy_classes};

    #[test]
    fn small_linear_orders() {
        assert_eq!(general_linear(2, 3).unwrap().order().unwrap(), 48);
        assert_eq!(special_linear(2, 3, false).unwrap().order().unwrap(), 24);
        assert_eq!(special_linear(3, 2, false).unwrap().order().unwrap(), 168);
        assert_eq!(special_linear(3, 3, false).unwrap().order().unwrap(), 5616);
        for q in [4u32, 5, 7, 8, 9] {
            let g = special_linear(2, q, true).unwrap();
            assert_eq!(g.order().unwrap() as u64, psl2_order(q as u64), "q = {q}");
        }
    }

    #[test]
    fn projective_identification() {
        let g = special_linear(2, 5, true).unwrap();
        let law = g.law().as_any().downcast_ref::<MatLaw>().unwrap();
        let f = &law.field;
        let minus = Matrix::identity(2).scale(f.neg(1), f);
        assert_eq!(law.element(&minus), g.identity());
        assert_eq!(center(&g).unwrap().order(), 1);
    }

    #[test]
    fn symplectic_generators_preserve_the_form() {
        let g = symplectic(4, 3, false).unwrap();
        let law = g.law().as_any().downcast_ref::<MatLaw>().unwrap();
        let j = symplectic_form(&law.field, 4);
        for e in g.generators() {
            assert!(preserves_form(&law.field, &law.matrix(e), &j));
        }
    }

    #[test]
    fn unitary_lower_family_has_q_cubed_members() {
        for (q, k) in [(2u64, 2u32), (3, 2), (4, 4)] {
            let p = prime_power(q).unwrap().0;
            let f2 = FieldCtx::new(p, k).unwrap();
            assert_eq!(unitary_lower_unitriangular(&f2).len() as u64, q * q * q);
        }
    }

    #[test]
    fn su33_order_and_center() {
        let g = special_unitary(3, 3, false).unwrap();
        assert_eq!(g.order().unwrap(), 6048);
        assert_eq!(center(&g).unwrap().order(), 1);
        let law = g.law().as_any().downcast_ref::<MatLaw>().unwrap();
        let j = antidiagonal(3);
        for e in g.generators() {
            let m = law.matrix(e);
            assert!(is_unitary(&law.field, &m, &j));
            assert_eq!(m.det(&law.field), 1);
        }
        assert_eq!(conjugacy_classes(&g).unwrap().len(), 14);
    }

    #[test]
    fn unitary_frame_changes_the_form() {
        let f2 = FieldCtx::new(3, 2).unwrap();
        let d = unitary_frame(&f2).unwrap();
        let bar = d.map(|v| f2.conjugate(v).unwrap());
        assert_eq!(d.transpose().mul(&bar, &f2), antidiagonal(3));
    }
}
