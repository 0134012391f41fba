//! Suzuki groups, their Sylow 2-subgroups, unitary unipotent groups in even
//! characteristic, `J_1`, and the small witness matrices used against
//! 2-irrationality.

use std::sync::Arc;

use crate::arith::prime_power;
use crate::constructions::classical::additive_basis;
use crate::constructions::greedy_generators;
use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::field::FieldCtx;
use crate::group::Group;
use crate::law::{Law, MatLaw, SuzukiTwoLaw};
use crate::linalg::Matrix;

/// `(f, field)` for `q = 2^{2f+1}`, `f >= 1`.
fn suzuki_field(q: u32) -> Result<(u32, Arc<FieldCtx>)> {
    match prime_power(q as u64) {
        Some((2, e)) if e >= 3 && e % 2 == 1 => Ok(((e - 1) / 2, FieldCtx::new(2, e)?)),
        _ => Err(GroupError::InvalidParameters(format!(
            "suzuki parameter {q} is not 2^(2f+1) with f >= 1"
        ))),
    }
}

/// Exponent of the twist `θ: x -> x^{2^{f+1}}`.
pub fn suzuki_theta(f: u32) -> u64 {
    1 << (f + 1)
}

/// The lower unitriangular `S(a, b)`; `S(a,b) S(c,d) = S(a+c, b+d+a^θ c)`.
pub fn suzuki_unipotent(field: &FieldCtx, theta: u64, a: u32, b: u32) -> Matrix {
    let at = field.pow(a, theta);
    let bt = field.pow(b, theta);
    let a2t = field.mul(field.mul(a, a), at);
    let r30 = field.add(field.add(a2t, field.mul(a, b)), bt);
    let r31 = field.add(field.mul(a, at), b);
    Matrix::new(
        4,
        vec![
            1, 0, 0, 0, //
            a, 1, 0, 0, //
            b, at, 1, 0, //
            r30, r31, a, 1,
        ],
    )
}

/// `Sz(q)` in `GL(4, q)`.
pub fn suzuki(q: u32) -> Result<Group> {
    let (f, field) = suzuki_field(q)?;
    let theta = suzuki_theta(f);
    let mut gens = Vec::new();
    for x in additive_basis(&field) {
        gens.push(suzuki_unipotent(&field, theta, x, 0));
        gens.push(suzuki_unipotent(&field, theta, 0, x));
    }
    let l = field.primitive_element();
    let s = 1u64 << f;
    let inv = |e: u64| field.inv(field.pow(l, e)).unwrap();
    gens.push(Matrix::diagonal(&[
        field.pow(l, 1 + s),
        field.pow(l, s),
        inv(s),
        inv(1 + s),
    ]));
    let mut tau = Matrix::new(4, vec![0; 16]);
    for i in 0..4 {
        tau.set(i, 3 - i, 1);
    }
    gens.push(tau);
    let law = MatLaw::linear(field, 4);
    let elems = gens.iter().map(|m| law.element(m)).collect();
    Group::new(Arc::new(law), elems, format!("sz({q})"))
}

/// The Sylow 2-subgroup of `Sz(q)` on pairs `(a, b)`.
pub fn suzuki_2group(q: u32) -> Result<Group> {
    let (f, field) = suzuki_field(q)?;
    let theta = suzuki_theta(f);
    let mut gens = Vec::new();
    for x in additive_basis(&field) {
        gens.push(Element::word(vec![x, 0]));
        gens.push(Element::word(vec![0, x]));
    }
    Group::new(Arc::new(SuzukiTwoLaw { field, theta }), gens, format!("suzuki2({q})"))
}

/// `(m, GF(q^2))` for `q = 2^m`, `m >= 2`.
fn even_unitary_field(q: u32) -> Result<Arc<FieldCtx>> {
    match prime_power(q as u64) {
        Some((2, m)) if m >= 2 => Ok(FieldCtx::new(2, 2 * m)?),
        _ => Err(GroupError::InvalidParameters(format!(
            "psu3_unipotent parameter {q} is not 2^m with m >= 2"
        ))),
    }
}

/// `M(x, y) = [[1,0,0],[x,1,0],[y,x^q,1]]`.
pub fn unitary_unipotent(f2: &FieldCtx, x: u32, y: u32) -> Matrix {
    let xq = f2.conjugate(x).expect("quadratic extension");
    Matrix::new(3, vec![1, 0, 0, x, 1, 0, y, xq, 1])
}

/// All `M(x, y)` with `y + y^q = x^{1+q}`, a group of order `q^3`.
pub fn psu3_unipotent_even(q: u32) -> Result<Group> {
    let f2 = even_unitary_field(q)?;
    let law = MatLaw::linear(f2.clone(), 3);
    let mut members = Vec::new();
    for x in f2.elements() {
        let norm = f2.relative_norm(x)?;
        for y in f2.elements() {
            if f2.relative_trace(y)? == norm {
                members.push(law.element(&unitary_unipotent(&f2, x, y)));
            }
        }
    }
    let dyn_law: Arc<dyn Law> = Arc::new(law);
    let gens = greedy_generators(&dyn_law, &members, members.len())?;
    Group::new(dyn_law, gens, format!("psu3_unipotent({q})"))
}

/// `A = M(1, ζ)` and `B = M(ζ, ξ)` with `ζ^q + ζ + 1 = 0` and
/// `ξ^q + ξ = ζ^{1+q}`, each root the least packed solution.
pub fn psu3_witness(q: u32) -> Result<(Matrix, Matrix)> {
    let f2 = even_unitary_field(q)?;
    let zeta = f2.solve_artin_schreier(1)?;
    let xi = f2.solve_artin_schreier(f2.relative_norm(zeta)?)?;
    Ok((unitary_unipotent(&f2, 1, zeta), unitary_unipotent(&f2, zeta, xi)))
}

/// `s` of order 4 and `t` of order 2 in `SL(3, q)`, q odd; `t` inverts `s`.
pub fn witness_st(field: &FieldCtx) -> (Matrix, Matrix) {
    let s = Matrix::from_ints(field, &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let t = Matrix::from_ints(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    (s, t)
}

/// `J_1` as the subgroup of `GL(7, 11)` generated by a 7-cycle permutation
/// matrix `Y` and an element `Z` of order 5.
pub fn j1() -> Result<Group> {
    let f = FieldCtx::new(11, 1)?;
    let mut y = Matrix::new(7, vec![0; 49]);
    for i in 0..7 {
        y.set(i, (i + 1) % 7, 1);
    }
    let z = Matrix::from_ints(
        &f,
        &[
            &[-3, 2, -1, -1, -3, -1, -3],
            &[-2, 1, 1, 3, 1, 3, 3],
            &[-1, -1, -3, -1, -3, -3, 2],
            &[-1, -3, -1, -3, -3, 2, -1],
            &[-3, -1, -3, -3, 2, -1, -1],
            &[1, 3, 3, -2, 1, 1, 3],
            &[3, 3, -2, 1, 1, 3, 1],
        ],
    );
    let law = MatLaw::linear(f, 7);
    let gens = vec![law.element(&y), law.element(&z)];
    Group::new(Arc::new(law), gens, "j1()")
}
