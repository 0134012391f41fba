//! Extensions and twisted products: Singer-cycle Frobenius groups,
//! extraspecial groups and their permutation extensions, minimal
//! non-abelian groups, metacyclic groups and module extensions.

use std::sync::Arc;

use crate::arith::{gcd, ipow, is_prime, multiplicative_order, pow_mod};
use crate::constructions::basic::{cyclic, elementary_abelian};
use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::field::{FieldCtx, Subfield};
use crate::group::Group;
use crate::law::{ExtraspecialLaw, MetacyclicLaw, MinNonabelianLaw, PermLaw, SuzukiTwoLaw};
use crate::linalg::{companion_matrix, Matrix};
use crate::products::{direct_product, semidirect_product, ActionMap, Automorphism};

fn bad(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

fn small_prime(p: u32, what: &str) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(bad(format!("{what}: {p} is not prime")))
    }
}

/// Companion matrix over `F_q` of the minimal polynomial of an element of
/// order `n` in `F_{q^r}`, `r = ord_n(q)`; it has multiplicative order `n`.
pub fn order_n_companion(q: u32, n: u32) -> Result<Matrix> {
    let r = multiplicative_order(q as u64, n as u64).ok_or_else(|| bad(format!("{q} is not a unit modulo {n}")))?;
    let big = FieldCtx::new(q as u64, r as u32)?;
    let zeta = big.element_of_order(n as u64)?;
    let poly = big.minimal_polynomial(zeta, Subfield::Prime)?;
    let small = FieldCtx::new(q as u64, 1)?;
    Ok(companion_matrix(&small, &poly)?)
}

/// `C_2^n ⋊ C_m` with `n = ord_m(2)` and `C_m` acting as a subgroup of a
/// Singer cycle.
pub fn singer_frobenius(m: u32) -> Result<Group> {
    if m < 3 || m % 2 == 0 {
        return Err(bad(format!("singer_frobenius({m}) needs an odd m >= 3")));
    }
    let c = order_n_companion(2, m)?;
    let v = elementary_abelian(2, c.dim() as u32)?;
    let h = cyclic(m)?;
    let act = ActionMap::new(&h, &v, vec![Automorphism::Linear(c)])?;
    Ok(semidirect_product(act)?.with_label(format!("singer_frobenius({m})")))
}

/// Extraspecial group `p^{1+2n}` of exponent `p`.
pub fn extraspecial(p: u32, n: u32) -> Result<Group> {
    small_prime(p, "extraspecial")?;
    if p == 2 {
        return Err(bad("extraspecial: p = 2 is unsupported"));
    }
    if n == 0 {
        return Err(bad("extraspecial: width n >= 1"));
    }
    let d = 2 * n as usize;
    let gens = (0..d)
        .map(|i| {
            let mut w = vec![0; d + 1];
            w[i] = 1;
            Element::word(w)
        })
        .collect();
    Group::new(
        Arc::new(ExtraspecialLaw { p, n: n as usize }),
        gens,
        format!("extraspecial({p},{n})"),
    )
}

/// `p^{1+2n} ⋊ G` for a permutation group `G` on `n` points, where `g` acts
/// on `(u, c)` by permuting both halves of `u` and fixing `c`.
pub fn winter_extension(g: &Group, p: u32) -> Result<Group> {
    let perm = g
        .law()
        .as_any()
        .downcast_ref::<PermLaw>()
        .ok_or_else(|| bad("winter: acting group must be a permutation group"))?;
    let n = perm.degree;
    let e = extraspecial(p, n as u32)?;
    e.enumeration()?;
    g.enumeration()?;
    let xlaw = ExtraspecialLaw { p, n };
    let move_word = |img: &[u32], w: &[u32]| {
        let mut out = w.to_vec();
        for i in 0..n {
            let j = img[i] as usize;
            out[j] = w[i];
            out[n + j] = w[n + i];
        }
        out
    };
    let mut images = Vec::new();
    for s in g.generators() {
        let img = s.as_perm().unwrap();
        for i in 0..2 * n {
            for j in 0..2 * n {
                let mut u = vec![0; 2 * n + 1];
                let mut v = vec![0; 2 * n + 1];
                u[i] = 1;
                v[j] = 1;
                let (mu, mv) = (move_word(img, &u), move_word(img, &v));
                if xlaw.form(&mu[..2 * n], &mv[..2 * n]) != xlaw.form(&u[..2 * n], &v[..2 * n]) {
                    return Err(GroupError::InvalidAction("permutation action is not symplectic".into()));
                }
            }
        }
        let table = e
            .elements()?
            .iter()
            .map(|x| e.member_index(&Element::word(move_word(img, x.as_word().unwrap()))))
            .collect::<Result<Vec<_>>>()?;
        images.push(Automorphism::Table(table));
    }
    let act = ActionMap::new(g, &e, images)?;
    Ok(semidirect_product(act)?.with_label(format!("winter({},{p})", g.label())))
}

/// `p^{1+2n} ⋊ G` with the generators of `G` acting on `(u, c)` as
/// `(M u, c)`; each `M` must preserve the symplectic form.
pub fn symplectic_extension(g: &Group, p: u32, matrices: Vec<Matrix>) -> Result<Group> {
    let d = matrices
        .first()
        .map(|m| m.dim())
        .ok_or_else(|| bad("extraspecial_ext needs one matrix per generator"))?;
    if d % 2 == 1 || matrices.iter().any(|m| m.dim() != d) {
        return Err(bad("extraspecial_ext matrices must share an even dimension"));
    }
    let n = d / 2;
    let e = extraspecial(p, n as u32)?;
    e.enumeration()?;
    let f = FieldCtx::new(p as u64, 1)?;
    let xlaw = ExtraspecialLaw { p, n };
    let mut images = Vec::new();
    for (s, m) in matrices.iter().enumerate() {
        let basis = |i: usize| {
            let mut u = vec![0; d];
            u[i] = 1;
            u
        };
        for i in 0..d {
            for j in 0..d {
                let (u, v) = (basis(i), basis(j));
                if xlaw.form(&m.apply(&u, &f), &m.apply(&v, &f)) != xlaw.form(&u, &v) {
                    return Err(GroupError::InvalidAction(format!(
                        "matrix {s} does not preserve the symplectic form"
                    )));
                }
            }
        }
        let table = e
            .elements()?
            .iter()
            .map(|x| {
                let w = x.as_word().unwrap();
                let mut out = m.apply(&w[..d], &f);
                out.push(w[d]);
                e.member_index(&Element::word(out))
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(Automorphism::Table(table));
    }
    let act = ActionMap::new(g, &e, images)?;
    semidirect_product(act)
}

/// `⟨x,y | x^{p^r} = y^{p^s} = [x,y]^p = [x,x,y] = [y,x,y] = 1⟩`, `r >= s >= 1`.
pub fn minimal_nonabelian_p(p: u32, r: u32, s: u32) -> Result<Group> {
    small_prime(p, "minimal_nonabelian_p")?;
    if s < 1 || r < s {
        return Err(bad("minimal_nonabelian_p needs r >= s >= 1"));
    }
    let pr = ipow(p as u64, r);
    let ps = ipow(p as u64, s);
    if pr * ps * p as u64 > u32::MAX as u64 {
        return Err(GroupError::BudgetExceeded(crate::group::DEFAULT_BUDGET));
    }
    let law = MinNonabelianLaw {
        p,
        pr: pr as u32,
        ps: ps as u32,
    };
    let gens = vec![Element::word(vec![1, 0, 0]), Element::word(vec![0, 1, 0])];
    Group::new(Arc::new(law), gens, format!("minimal_nonabelian_p({p},{r},{s})"))
}

/// `C_q^r ⋊ C_{p^s}` with the generator acting by the companion matrix of an
/// irreducible factor of `(X^p - 1)/(X - 1)` over `F_q`, `r = ord_p(q) >= 2`.
pub fn minimal_nonabelian_qp(q: u32, p: u32, s: u32) -> Result<Group> {
    small_prime(q, "minimal_nonabelian_qp")?;
    small_prime(p, "minimal_nonabelian_qp")?;
    if p == q || s < 1 {
        return Err(bad("minimal_nonabelian_qp needs distinct primes and s >= 1"));
    }
    let c = order_n_companion(q, p)?;
    if c.dim() < 2 {
        return Err(bad(format!(
            "minimal_nonabelian_qp({q},{p},{s}): ord_{p}({q}) = 1, the metacyclic case is excluded"
        )));
    }
    let v = elementary_abelian(q, c.dim() as u32)?;
    let h = cyclic(ipow(p as u64, s) as u32)?;
    let act = ActionMap::new(&h, &v, vec![Automorphism::Linear(c)])?;
    Ok(semidirect_product(act)?.with_label(format!("minimal_nonabelian_qp({q},{p},{s})")))
}

/// `C_n ⋊ C_m` with the generator of `C_m` acting by `x -> x^k`.
pub fn metacyclic(n: u32, m: u32, k: u32) -> Result<Group> {
    if n == 0 || m == 0 {
        return Err(bad("metacyclic needs n, m >= 1"));
    }
    let k = k % n.max(1);
    if n > 1 && (gcd(k as u64, n as u64) != 1 || pow_mod(k as u64, m as u64, n as u64) != 1 % n as u64) {
        return Err(bad(format!("metacyclic({n},{m},{k}): k^m must be 1 modulo n")));
    }
    let gens = vec![Element::word(vec![1 % n, 0]), Element::word(vec![0, 1 % m])];
    Group::new(
        Arc::new(MetacyclicLaw::new(n, m, k)),
        gens,
        format!("metacyclic({n},{m},{k})"),
    )
}

/// `F_p^{|G|} ⋊ G` with `G` permuting coordinates by its right-regular
/// action, for `p ≡ 2 (mod |G|)` and `p ∤ |G|`.
pub fn regular_module_extension(g: &Group, p: u32) -> Result<Group> {
    small_prime(p, "regular_module")?;
    let n = g.order()?;
    if n > 7 {
        return Err(bad(format!(
            "regular_module: |G| = {n} > 7, use matrix_module with a smaller faithful module"
        )));
    }
    if n > 1 && ((p as usize) % n != 2 % n || (p as usize) % n == 0) {
        return Err(bad(format!("regular_module: need p ≡ 2 (mod {n}) and p ∤ {n}")));
    }
    let v = elementary_abelian(p, n as u32)?;
    v.enumeration()?;
    let mut images = Vec::new();
    for s in g.generator_indices() {
        let sinv = g.inv_idx(s);
        // coordinate x moves to x s^-1
        let dest: Vec<usize> = (0..n as u32).map(|x| g.mul_idx(x, sinv) as usize).collect();
        let table = v
            .elements()?
            .iter()
            .map(|w| {
                let w = w.as_word().unwrap();
                let mut out = vec![0; n];
                for x in 0..n {
                    out[dest[x]] = w[x];
                }
                v.member_index(&Element::word(out))
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(Automorphism::Table(table));
    }
    let act = ActionMap::new(g, &v, images)?;
    Ok(semidirect_product(act)?.with_label(format!("regular_module({},{p})", g.label())))
}

/// `F_p^d ⋊ G` for a faithful representation given by one matrix per
/// generator of `G`.
pub fn matrix_module_extension(g: &Group, p: u32, matrices: Vec<Matrix>) -> Result<Group> {
    small_prime(p, "matrix_module")?;
    let d = matrices.first().map(|m| m.dim()).unwrap_or(0);
    if d == 0 || matrices.iter().any(|m| m.dim() != d) {
        return Err(bad("matrix_module: matrices must share a positive dimension"));
    }
    let f = FieldCtx::new(p as u64, 1)?;
    if matrices.iter().any(|m| m.det(&f) == 0) {
        return Err(GroupError::InvalidAction("singular matrix".into()));
    }
    let v = elementary_abelian(p, d as u32)?;
    let act = ActionMap::new(g, &v, matrices.into_iter().map(Automorphism::Linear).collect())?;
    if !act.is_faithful() {
        return Err(GroupError::InvalidAction("representation is not faithful".into()));
    }
    semidirect_product(act)
}

/// `(P × C_13^2) ⋊ C_7` with `P` the Sylow 2-subgroup of `Sz(8)`; `C_7`
/// scales `P` by `(a, b) -> (λa, λ^{1+θ}b)` and acts on `C_13^2` through an
/// element of order 7 in `GF(169)`.
pub fn sz2_frobenius() -> Result<Group> {
    let p = crate::constructions::lie::suzuki_2group(8)?;
    let law = p
        .law()
        .as_any()
        .downcast_ref::<SuzukiTwoLaw>()
        .expect("suzuki 2-group law");
    let (field, theta) = (law.field.clone(), law.theta);
    let w = elementary_abelian(13, 2)?;
    let a = direct_product(&p, &w)?;
    a.enumeration()?;
    let lambda = field.element_of_order(7)?;
    let lambda_b = field.pow(lambda, 1 + theta);
    let c = order_n_companion(13, 7)?;
    let f13 = FieldCtx::new(13, 1)?;
    let table = a
        .elements()?
        .iter()
        .map(|x| {
            let t = x.as_tuple().unwrap();
            let ab = t[0].as_word().unwrap();
            let v = t[1].as_word().unwrap();
            let img = Element::tuple(vec![
                Element::word(vec![field.mul(lambda, ab[0]), field.mul(lambda_b, ab[1])]),
                Element::word(c.apply(v, &f13)),
            ]);
            a.member_index(&img)
        })
        .collect::<Result<Vec<_>>>()?;
    let act = ActionMap::new(&cyclic(7)?, &a, vec![Automorphism::Table(table)])?;
    Ok(semidirect_product(act)?.with_label("sz2_frobenius()"))
}

/// The generator matrices of a group whose law is a [`PermLaw`], as
/// permutation matrices over `F_p` (used to build modules of permutation
/// groups).
pub fn permutation_matrices(g: &Group, p: u32) -> Result<Vec<Matrix>> {
    let law = g
        .law()
        .as_any()
        .downcast_ref::<PermLaw>()
        .ok_or_else(|| bad("permutation group expected"))?;
    small_prime(p, "permutation_matrices")?;
    let n = law.degree;
    Ok(g.generators()
        .iter()
        .map(|s| {
            let img = s.as_perm().unwrap();
            let mut m = Matrix::new(n, vec![0; n * n]);
            for i in 0..n {
                m.set(img[i] as usize, i, 1);
            }
            m
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{
        center, conjugacy_classes, exponent, fitting_length, is_abelian, is_frobenius_with_complement, sylow,
    };
    use crate::constructions::basic;
    use crate::subgroup::Subgroup;

    #[test]
    fn singer_orders() {
        for (m, order) in [(3u32, 12usize), (5, 80), (7, 56), (9, 576)] {
            assert_eq!(singer_frobenius(m).unwrap().order().unwrap(), order, "m = {m}");
        }
        assert_eq!(conjugacy_classes(&singer_frobenius(3).unwrap()).unwrap().len(), 4);
        assert!(singer_frobenius(4).is_err());
    }

    #[test]
    fn singer_complement_is_fixed_point_free() {
        let g = singer_frobenius(5).unwrap();
        g.enumeration().unwrap();
        let c = g.generators().last().unwrap().clone();
        let k = Subgroup::from_elements(&g, &[c]).unwrap();
        let res = is_frobenius_with_complement(&g, &k).unwrap();
        assert!(res.is_frobenius);
        assert_eq!(res.kernel.unwrap().order(), 16);
    }

    #[test]
    fn extraspecial_shape() {
        let e = extraspecial(5, 1).unwrap();
        assert_eq!(e.order().unwrap(), 125);
        assert_eq!(exponent(&e).unwrap(), 5);
        assert_eq!(center(&e).unwrap().order(), 5);
        assert_eq!(center(&extraspecial(3, 2).unwrap()).unwrap().order(), 3);
        assert!(extraspecial(2, 1).is_err());
    }

    #[test]
    fn minimal_nonabelian_orders() {
        assert_eq!(minimal_nonabelian_p(3, 2, 1).unwrap().order().unwrap(), 81);
        assert_eq!(minimal_nonabelian_qp(2, 3, 1).unwrap().order().unwrap(), 12);
        assert_eq!(minimal_nonabelian_qp(5, 3, 1).unwrap().order().unwrap(), 75);
        assert_eq!(minimal_nonabelian_qp(3, 5, 1).unwrap().order().unwrap(), 405);
        assert!(minimal_nonabelian_qp(7, 3, 1).is_err());
        assert!(minimal_nonabelian_p(3, 1, 2).is_err());
    }

    #[test]
    fn metacyclic_validation() {
        assert_eq!(metacyclic(7, 3, 2).unwrap().order().unwrap(), 21);
        assert!(is_abelian(&metacyclic(5, 4, 1).unwrap()).unwrap());
        assert_eq!(exponent(&metacyclic(9, 3, 4).unwrap()).unwrap(), 9);
        assert!(metacyclic(7, 3, 3).is_err());
    }

    #[test]
    fn regular_module_of_c3() {
        let g = regular_module_extension(&basic::cyclic(3).unwrap(), 5).unwrap();
        assert_eq!(g.order().unwrap(), 375);
        assert_eq!(fitting_length(&g).unwrap(), 2);
        assert_eq!(
            regular_module_extension(&basic::cyclic(1).unwrap(), 5)
                .unwrap()
                .order()
                .unwrap(),
            5
        );
        assert!(regular_module_extension(&basic::cyclic(3).unwrap(), 7).is_err());
    }

    #[test]
    fn matrix_module_faithfulness() {
        let f5 = FieldCtx::new(5, 1).unwrap();
        let c = companion_matrix(&f5, &[1, 1, 1]).unwrap();
        let g = matrix_module_extension(&basic::cyclic(3).unwrap(), 5, vec![c]).unwrap();
        assert_eq!(g.order().unwrap(), 75);
        let err = matrix_module_extension(&basic::cyclic(3).unwrap(), 5, vec![Matrix::identity(2)]);
        assert!(matches!(err, Err(GroupError::InvalidAction(_))));
    }

    #[test]
    fn winter_small() {
        let c3 = basic::cyclic_perm(3).unwrap();
        let g = winter_extension(&c3, 3).unwrap();
        assert_eq!(g.order().unwrap(), 3usize.pow(7) * 3);
        let s = sylow(&g, 3).unwrap();
        assert_eq!(s.order(), 3usize.pow(8));
    }
}
