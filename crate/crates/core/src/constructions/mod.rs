//! Catalog of concrete groups and the [`GroupSpec`] tree that names them.
//!
//! `GroupSpec`'s `Display` output is the textual grammar understood by the
//! command-line parser, and every built group is labelled with it.

pub mod basic;
pub mod classical;
pub mod families;
pub mod lie;

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::analysis::sylow;
use crate::element::{format_cycles, Element};
use crate::error::{GroupError, Result};
use crate::field::FieldCtx;
use crate::group::Group;
use crate::law::{Law, MatLaw};
use crate::linalg::{companion_matrix, format_entries, Matrix};
use crate::products::{direct_product, semidirect_product, wreath_product, ActionMap, Automorphism};

pub use classical::Family;

/// Picks candidates in order, keeping each one not already generated by the
/// previous picks.
pub fn greedy_generators(law: &Arc<dyn Law>, candidates: &[Element], budget: usize) -> Result<Vec<Element>> {
    let id = law.identity();
    let mut seen: FxHashSet<Element> = FxHashSet::default();
    seen.insert(id.clone());
    let mut elems = vec![id];
    let mut gens: Vec<Element> = Vec::new();
    for c in candidates {
        if seen.contains(c) {
            continue;
        }
        gens.push(c.clone());
        let mut queue = Vec::new();
        for e in &elems {
            let y = law.mul(e, c);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        while let Some(x) = queue.pop() {
            for g in &gens {
                let y = law.mul(&x, g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
            elems.push(x);
            if elems.len() > budget {
                return Err(GroupError::BudgetExceeded(budget));
            }
        }
    }
    Ok(gens)
}

/// A square matrix literal over `GF(p^k)`, entries packed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixLit {
    pub p: u32,
    pub k: u32,
    pub matrix: Matrix,
}

impl MatrixLit {
    pub fn field(&self) -> Result<Arc<FieldCtx>> {
        Ok(FieldCtx::new(self.p as u64, self.k)?)
    }
}

impl fmt::Display for MatrixLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match FieldCtx::new(self.p as u64, self.k) {
            Ok(ctx) => f.write_str(&format_entries(&ctx, self.matrix.dim(), self.matrix.entries())),
            Err(_) => write!(f, "<invalid field GF({}^{})>", self.p, self.k),
        }
    }
}

/// How the top group of a semidirect product acts on an elementary abelian
/// base: one matrix per top generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ActionSpec {
    /// Companion matrix of a monic polynomial over `F_p`, constant term first.
    Companion {
        p: u32,
        poly: Vec<u32>,
    },
    Matrix(MatrixLit),
}

impl ActionSpec {
    pub fn matrix(&self) -> Result<Matrix> {
        match self {
            ActionSpec::Companion { p, poly } => {
                let f = FieldCtx::new(*p as u64, 1)?;
                Ok(companion_matrix(&f, poly)?)
            }
            ActionSpec::Matrix(m) => {
                if m.k != 1 {
                    return Err(GroupError::InvalidAction(
                        "action matrices must be over a prime field".into(),
                    ));
                }
                Ok(m.matrix.clone())
            }
        }
    }
}

/// `x^2+x+1` style, highest degree first, coefficients reduced mod `p`.
pub fn format_poly(poly: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        let term = match i {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::Companion { p, poly } => write!(f, "companion({}@{p})", format_poly(poly)),
            ActionSpec::Matrix(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    Abelian(Vec<u32>),
    ElemAb(u32, u32),
    Dihedral(u32),
    Quaternion(u32),
    Symmetric(u32),
    Alternating(u32),
    CyclicPerm(u32),
    Classical(Family, u32, u32),
    Suzuki(u32),
    Suzuki2(u32),
    Psu3Unipotent(u32),
    J1,
    SingerFrobenius(u32),
    Extraspecial(u32, u32),
    Winter(Box<GroupSpec>, u32),
    /// `p^{1+2n} ⋊ G` through symplectic matrices, one per generator of `G`.
    ExtraspecialExt(Box<GroupSpec>, u32, Vec<MatrixLit>),
    MinNonabelianP(u32, u32, u32),
    MinNonabelianQp(u32, u32, u32),
    Metacyclic(u32, u32, u32),
    RegularModule(Box<GroupSpec>, u32),
    MatrixModule(Box<GroupSpec>, Vec<MatrixLit>),
    Sz2Frobenius,
    Direct(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect(Box<GroupSpec>, Box<GroupSpec>, Vec<ActionSpec>),
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    /// Image arrays on `degree` points.
    Perms {
        degree: usize,
        gens: Vec<Vec<u32>>,
    },
    Matrices(Vec<MatrixLit>),
    Sylow(Box<GroupSpec>, u32),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "cyclic({n})"),
            Abelian(m) => write!(f, "abelian({})", join(m)),
            ElemAb(p, d) => write!(f, "elemab({p},{d})"),
            Dihedral(n) => write!(f, "dihedral({n})"),
            Quaternion(n) => write!(f, "quaternion({n})"),
            Symmetric(n) => write!(f, "symmetric({n})"),
            Alternating(n) => write!(f, "alternating({n})"),
            CyclicPerm(n) => write!(f, "cyclic_perm({n})"),
            Classical(fam, n, q) => write!(f, "{fam}({n},{q})"),
            Suzuki(q) => write!(f, "sz({q})"),
            Suzuki2(q) => write!(f, "suzuki2({q})"),
            Psu3Unipotent(q) => write!(f, "psu3_unipotent({q})"),
            J1 => write!(f, "j1()"),
            SingerFrobenius(m) => write!(f, "singer_frobenius({m})"),
            Extraspecial(p, n) => write!(f, "extraspecial({p},{n})"),
            Winter(g, p) => write!(f, "winter({g},{p})"),
            ExtraspecialExt(g, p, ms) => write!(f, "extraspecial_ext({g},{p},{})", join(ms)),
            MinNonabelianP(p, r, s) => write!(f, "minimal_nonabelian_p({p},{r},{s})"),
            MinNonabelianQp(q, p, s) => write!(f, "minimal_nonabelian_qp({q},{p},{s})"),
            Metacyclic(n, m, k) => write!(f, "metacyclic({n},{m},{k})"),
            RegularModule(g, p) => write!(f, "regular_module({g},{p})"),
            MatrixModule(g, ms) => write!(f, "matrix_module({g},{})", join(ms)),
            Sz2Frobenius => write!(f, "sz2_frobenius()"),
            Direct(a, b) => write!(f, "direct({a},{b})"),
            Semidirect(a, h, acts) => write!(f, "semidirect({a},{h},{})", join(acts)),
            Wreath(a, h) => write!(f, "wreath({a},{h})"),
            Perms { degree, gens } => {
                let cycles: Vec<String> = gens.iter().map(|g| format_cycles(g)).collect();
                write!(f, "perms({degree},{})", cycles.join(","))
            }
            Matrices(ms) => write!(f, "matrices({})", join(ms)),
            Sylow(g, p) => write!(f, "sylow({g},{p})"),
        }
    }
}

fn matrix_group(lits: &[MatrixLit]) -> Result<Group> {
    let first = lits
        .first()
        .ok_or_else(|| GroupError::InvalidParameters("matrices() needs at least one matrix".into()))?;
    let field = first.field()?;
    let dim = first.matrix.dim();
    if lits
        .iter()
        .any(|m| m.p != first.p || m.k != first.k || m.matrix.dim() != dim)
    {
        return Err(GroupError::InvalidParameters(
            "matrices must share field and dimension".into(),
        ));
    }
    if lits.iter().any(|m| m.matrix.det(&field) == 0) {
        return Err(GroupError::InvalidParameters("singular matrix".into()));
    }
    let law = MatLaw::linear(field, dim);
    let gens = lits.iter().map(|m| law.element(&m.matrix)).collect();
    Group::new(Arc::new(law), gens, "matrices")
}

impl GroupSpec {
    /// Builds the group with the default budget, labelled by `self`.
    pub fn build(&self) -> Result<Group> {
        use GroupSpec::*;
        let g = match self {
            Cyclic(n) => basic::cyclic(*n)?,
            Abelian(m) => basic::abelian(m)?,
            ElemAb(p, d) => basic::elementary_abelian(*p, *d)?,
            Dihedral(n) => basic::dihedral(*n)?,
            Quaternion(n) => basic::quaternion(*n)?,
            Symmetric(n) => basic::symmetric(*n)?,
            Alternating(n) => basic::alternating(*n)?,
            CyclicPerm(n) => basic::cyclic_perm(*n)?,
            Classical(fam, n, q) => classical::classical(*fam, *n, *q)?,
            Suzuki(q) => lie::suzuki(*q)?,
            Suzuki2(q) => lie::suzuki_2group(*q)?,
            Psu3Unipotent(q) => lie::psu3_unipotent_even(*q)?,
            J1 => lie::j1()?,
            SingerFrobenius(m) => families::singer_frobenius(*m)?,
            Extraspecial(p, n) => families::extraspecial(*p, *n)?,
            Winter(g, p) => families::winter_extension(&g.build()?, *p)?,
            ExtraspecialExt(g, p, ms) => {
                if ms.iter().any(|m| m.k != 1 || m.p != *p) {
                    return Err(GroupError::InvalidParameters(format!(
                        "extraspecial_ext needs matrices over GF({p})"
                    )));
                }
                let mats = ms.iter().map(|m| m.matrix.clone()).collect();
                families::symplectic_extension(&g.build()?, *p, mats)?
            }
            MinNonabelianP(p, r, s) => families::minimal_nonabelian_p(*p, *r, *s)?,
            MinNonabelianQp(q, p, s) => families::minimal_nonabelian_qp(*q, *p, *s)?,
            Metacyclic(n, m, k) => families::metacyclic(*n, *m, *k)?,
            RegularModule(g, p) => families::regular_module_extension(&g.build()?, *p)?,
            MatrixModule(g, ms) => {
                let p = ms.first().map(|m| m.p).unwrap_or(0);
                if ms.iter().any(|m| m.k != 1 || m.p != p) {
                    return Err(GroupError::InvalidParameters(
                        "matrix_module needs matrices over one prime field".into(),
                    ));
                }
                let mats = ms.iter().map(|m| m.matrix.clone()).collect();
                families::matrix_module_extension(&g.build()?, p, mats)?
            }
            Sz2Frobenius => families::sz2_frobenius()?,
            Direct(a, b) => direct_product(&a.build()?, &b.build()?)?,
            Semidirect(a, h, acts) => {
                let a = a.build()?;
                let h = h.build()?;
                let mats = acts
                    .iter()
                    .map(|x| x.matrix().map(Automorphism::Linear))
                    .collect::<Result<Vec<_>>>()?;
                semidirect_product(ActionMap::new(&h, &a, mats)?)?
            }
            Wreath(a, h) => wreath_product(&a.build()?, &h.build()?)?,
            Perms { degree, gens } => basic::perms(*degree, gens.clone(), String::new())?,
            Matrices(ms) => matrix_group(ms)?,
            Sylow(g, p) => {
                let g = g.build()?;
                sylow(&g, *p as u64)?.to_group("")?
            }
        };
        Ok(g.with_label(self.to_string()))
    }

    /// Same as [`GroupSpec::build`] with an explicit enumeration budget on
    /// the result.
    pub fn build_with_budget(&self, budget: usize) -> Result<Group> {
        Ok(self.build()?.with_budget(budget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_formatting() {
        assert_eq!(format_poly(&[1, 1, 1]), "x^2+x+1");
        assert_eq!(format_poly(&[4, 0, 2, 1]), "x^3+2x^2+4");
        assert_eq!(format_poly(&[0, 1]), "x");
    }

    #[test]
    fn spec_labels_and_orders() {
        let spec = GroupSpec::Semidirect(
            Box::new(GroupSpec::ElemAb(5, 2)),
            Box::new(GroupSpec::Cyclic(3)),
            vec![ActionSpec::Companion {
                p: 5,
                poly: vec![1, 1, 1],
            }],
        );
        assert_eq!(
            spec.to_string(),
            "semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5))"
        );
        let g = spec.build().unwrap();
        assert_eq!(g.label(), spec.to_string());
        assert_eq!(g.order().unwrap(), 75);
        let w = GroupSpec::Wreath(Box::new(GroupSpec::Cyclic(3)), Box::new(GroupSpec::CyclicPerm(3)));
        assert_eq!(w.build().unwrap().order().unwrap(), 81);
        let s = GroupSpec::Sylow(Box::new(GroupSpec::Symmetric(4)), 2);
        assert_eq!(s.build().unwrap().order().unwrap(), 8);
    }

    #[test]
    fn greedy_generators_is_minimal_for_cyclic_candidates() {
        let g = basic::cyclic(12).unwrap();
        let cands: Vec<Element> = (0..12).map(|i| Element::word(vec![i])).collect();
        let gens = greedy_generators(g.law(), &cands, 100).unwrap();
        assert_eq!(gens, vec![Element::word(vec![1])]);
    }
}
