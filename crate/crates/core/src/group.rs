//! Finite groups as generator lists over a multiplication oracle, with a
//! lazily computed, compute-once enumeration.
//!
//! Enumeration is a breadth-first closure under *left* multiplication by the
//! generators, so element `i > 0` equals `gen[via[i]] * element[parent[i]]`
//! with `parent[i] < i`. That spanning tree lets whole-group scans such as
//! "`g x g^-1` for every `g`" run as one pass of table lookups.

use std::fmt;
use std::sync::Arc;

use once_cell::sync::OnceCell;
use rustc_hash::FxHashMap;

use crate::analysis::classes::ConjClasses;
use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::law::Law;

pub const DEFAULT_BUDGET: usize = 500_000;

#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

struct GroupInner {
    law: Arc<dyn Law>,
    generators: Vec<Element>,
    label: String,
    budget: usize,
    enumeration: OnceCell<Enumeration>,
    right_inv: OnceCell<Vec<Vec<u32>>>,
    inverses: OnceCell<Vec<u32>>,
    conj: OnceCell<Vec<Vec<u32>>>,
    orders: OnceCell<Vec<u32>>,
    classes: OnceCell<Arc<ConjClasses>>,
}

pub struct Enumeration {
    elements: Vec<Element>,
    index: FxHashMap<Element, u32>,
    /// `left[s][i]` is the index of `gen_s * e_i`.
    left: Vec<Vec<u32>>,
    parent: Vec<u32>,
    via: Vec<u16>,
}

impl Enumeration {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &Element) -> Option<u32> {
        self.index.get(e).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Mul,
    Inv,
    Id,
}

impl Group {
    pub fn new(law: Arc<dyn Law>, generators: Vec<Element>, label: impl Into<String>) -> Result<Self> {
        for g in &generators {
            if !law.accepts(g) {
                return Err(GroupError::KindMismatch(format!(
                    "generator of kind {} rejected",
                    g.kind()
                )));
            }
        }
        let mut generators = generators;
        if generators.is_empty() {
            generators.push(law.identity());
        }
        if generators.len() > u16::MAX as usize {
            return Err(GroupError::InvalidParameters("too many generators".into()));
        }
        Ok(Group(Arc::new(GroupInner {
            law,
            generators,
            label: label.into(),
            budget: DEFAULT_BUDGET,
            enumeration: OnceCell::new(),
            right_inv: OnceCell::new(),
            inverses: OnceCell::new(),
            conj: OnceCell::new(),
            orders: OnceCell::new(),
            classes: OnceCell::new(),
        })))
    }

    /// Same group with a different enumeration budget and empty caches.
    pub fn with_budget(&self, budget: usize) -> Self {
        let mut g = Group::new(self.0.law.clone(), self.0.generators.clone(), self.0.label.clone())
            .expect("generators already validated");
        Arc::get_mut(&mut g.0).unwrap().budget = budget;
        g
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let mut g =
            Group::new(self.0.law.clone(), self.0.generators.clone(), label).expect("generators already validated");
        Arc::get_mut(&mut g.0).unwrap().budget = self.0.budget;
        g
    }

    pub fn law(&self) -> &Arc<dyn Law> {
        &self.0.law
    }

    pub fn generators(&self) -> &[Element] {
        &self.0.generators
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn budget(&self) -> usize {
        self.0.budget
    }

    pub fn identity(&self) -> Element {
        self.0.law.identity()
    }

    pub fn format(&self, e: &Element) -> String {
        self.0.law.format(e)
    }

    pub fn same_group(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Group operation with a kind check on the operands.
    pub fn evaluate(&self, a: &Element, b: &Element, op: Op) -> Result<Element> {
        let law = &self.0.law;
        let check = |e: &Element| {
            if law.accepts(e) {
                Ok(())
            } else {
                Err(GroupError::KindMismatch(format!("operand of kind {}", e.kind())))
            }
        };
        match op {
            Op::Id => Ok(law.identity()),
            Op::Inv => {
                check(a)?;
                Ok(law.inv(a))
            }
            Op::Mul => {
                check(a)?;
                check(b)?;
                Ok(law.mul(a, b))
            }
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.0.law.mul(a, b)
    }

    pub fn inv(&self, a: &Element) -> Element {
        self.0.law.inv(a)
    }

    pub fn pow(&self, a: &Element, mut e: u64) -> Element {
        let law = &self.0.law;
        let mut base = a.clone();
        let mut acc = law.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = law.mul(&acc, &base);
            }
            base = law.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: &Element, x: &Element) -> Element {
        self.mul(&self.mul(g, x), &self.inv(g))
    }

    /// Breadth-first closure of the generators, cached.
    pub fn enumeration(&self) -> Result<&Enumeration> {
        self.0
            .enumeration
            .get_or_try_init(|| enumerate(&self.0.law, &self.0.generators, self.0.budget))
    }

    /// Enumerates under an explicit budget; a group already enumerated
    /// under a larger budget is re-checked against this one.
    pub fn enumerate(&self, budget: usize) -> Result<&[Element]> {
        if let Some(e) = self.0.enumeration.get() {
            if e.len() > budget {
                return Err(GroupError::BudgetExceeded(budget));
            }
            return Ok(&e.elements);
        }
        let e = self
            .0
            .enumeration
            .get_or_try_init(|| enumerate(&self.0.law, &self.0.generators, budget))?;
        Ok(&e.elements)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.enumeration()?.len())
    }

    pub fn elements(&self) -> Result<&[Element]> {
        Ok(&self.enumeration()?.elements)
    }

    pub fn is_enumerated(&self) -> bool {
        self.0.enumeration.get().is_some()
    }

    fn enm(&self) -> &Enumeration {
        self.0
            .enumeration
            .get()
            .expect("index-level access needs a successful enumeration() first")
    }

    // ---- index-level access; all of these require a prior enumeration ----

    pub fn len(&self) -> usize {
        self.enm().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.enm().elements[i as usize]
    }

    pub fn index_of(&self, e: &Element) -> Option<u32> {
        self.enm().index.get(e).copied()
    }

    pub fn member_index(&self, e: &Element) -> Result<u32> {
        self.index_of(e).ok_or(GroupError::NotMember)
    }

    pub fn mul_idx(&self, i: u32, j: u32) -> u32 {
        let e = self.enm();
        let prod = self.0.law.mul(&e.elements[i as usize], &e.elements[j as usize]);
        e.index[&prod]
    }

    pub fn inv_idx(&self, i: u32) -> u32 {
        self.inverses()[i as usize]
    }

    pub fn pow_idx(&self, i: u32, e: u64) -> u32 {
        let p = self.pow(self.element(i), e);
        self.enm().index[&p]
    }

    pub fn conj_idx(&self, g: u32, x: u32) -> u32 {
        self.mul_idx(self.mul_idx(g, x), self.inv_idx(g))
    }

    pub fn generator_count(&self) -> usize {
        self.0.generators.len()
    }

    pub fn generator_indices(&self) -> Vec<u32> {
        let e = self.enm();
        self.0.generators.iter().map(|g| e.index[g]).collect()
    }

    pub fn left_table(&self, s: usize) -> &[u32] {
        &self.enm().left[s]
    }

    /// Spanning tree: `e_i = gen[via[i]] * e_parent[i]` for `i > 0`.
    pub fn tree(&self) -> (&[u32], &[u16]) {
        let e = self.enm();
        (&e.parent, &e.via)
    }

    fn right_inv(&self) -> &[Vec<u32>] {
        self.0.right_inv.get_or_init(|| {
            let e = self.enm();
            let law = &self.0.law;
            self.0
                .generators
                .iter()
                .map(|s| {
                    let si = law.inv(s);
                    e.elements.iter().map(|x| e.index[&law.mul(x, &si)]).collect()
                })
                .collect()
        })
    }

    /// Inverse of every element, by index.
    pub fn inverses(&self) -> &[u32] {
        self.0.inverses.get_or_init(|| {
            let e = self.enm();
            let right = self.right_inv();
            let mut inv = vec![0u32; e.len()];
            // (s x)^-1 = x^-1 s^-1
            for i in 1..e.len() {
                let s = e.via[i] as usize;
                inv[i] = right[s][inv[e.parent[i] as usize] as usize];
            }
            inv
        })
    }

    /// `conj[s][i]` is the index of `gen_s e_i gen_s^-1`.
    pub fn conj_tables(&self) -> &[Vec<u32>] {
        self.0.conj.get_or_init(|| {
            let e = self.enm();
            let right = self.right_inv();
            (0..self.0.generators.len())
                .map(|s| right[s].iter().map(|&r| e.left[s][r as usize]).collect())
                .collect()
        })
    }

    /// Order of every element, by index.
    pub fn orders(&self) -> &[u32] {
        self.0.orders.get_or_init(|| {
            let e = self.enm();
            let law = &self.0.law;
            let mut orders = vec![0u32; e.len()];
            orders[0] = 1;
            for i in 1..e.len() {
                if orders[i] != 0 {
                    continue;
                }
                let x = &e.elements[i];
                let mut powers = vec![i as u32];
                let mut cur = x.clone();
                loop {
                    cur = law.mul(&cur, x);
                    let j = e.index[&cur];
                    if j == 0 {
                        break;
                    }
                    powers.push(j);
                }
                let n = powers.len() as u64 + 1;
                for (k, &j) in powers.iter().enumerate() {
                    let exp = k as u64 + 1;
                    orders[j as usize] = (n / crate::arith::gcd(exp, n)) as u32;
                }
            }
            orders
        })
    }

    pub fn order_of_idx(&self, i: u32) -> u64 {
        self.orders()[i as usize] as u64
    }

    /// Least `n >= 1` with `g^n = 1`; uses the cached table for members.
    pub fn element_order(&self, g: &Element) -> Result<u64> {
        if !self.0.law.accepts(g) {
            return Err(GroupError::KindMismatch(format!("element of kind {}", g.kind())));
        }
        if let Some(e) = self.0.enumeration.get() {
            if let Some(&i) = e.index.get(g) {
                return Ok(self.orders()[i as usize] as u64);
            }
        }
        let id = self.identity();
        let mut cur = g.clone();
        let mut n = 1u64;
        while cur != id {
            cur = self.mul(&cur, g);
            n += 1;
            if n as usize > self.0.budget {
                return Err(GroupError::BudgetExceeded(self.0.budget));
            }
        }
        Ok(n)
    }

    /// For every `g`, the index of `g x g^-1`, computed along the spanning tree.
    pub fn conjugation_images(&self, x: u32) -> Vec<u32> {
        let e = self.enm();
        let conj = self.conj_tables();
        let mut val = vec![0u32; e.len()];
        val[0] = x;
        for i in 1..e.len() {
            val[i] = conj[e.via[i] as usize][val[e.parent[i] as usize] as usize];
        }
        val
    }

    pub fn classes_cell(&self) -> &OnceCell<Arc<ConjClasses>> {
        &self.0.classes
    }
}

fn enumerate(law: &Arc<dyn Law>, gens: &[Element], budget: usize) -> Result<Enumeration> {
    let id = law.identity();
    let mut elements = vec![id.clone()];
    let mut index = FxHashMap::default();
    index.insert(id, 0u32);
    let mut parent = vec![0u32];
    let mut via = vec![0u16];
    let mut left: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < elements.len() {
        for (s, g) in gens.iter().enumerate() {
            let y = law.mul(g, &elements[head]);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elements.len() as u32;
                    if elements.len() >= budget {
                        return Err(GroupError::BudgetExceeded(budget));
                    }
                    index.insert(y.clone(), j);
                    elements.push(y);
                    parent.push(head as u32);
                    via.push(s as u16);
                    j
                }
            };
            left[s].push(j);
        }
        head += 1;
    }
    Ok(Enumeration {
        elements,
        index,
        left,
        parent,
        via,
    })
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("label", &self.0.label)
            .field("generators", &self.0.generators.len())
            .field("order", &self.0.enumeration.get().map(|e| e.len()))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::law::{AbelianLaw, PermLaw};

    fn cyclic(n: u32) -> Group {
        Group::new(
            Arc::new(AbelianLaw { moduli: vec![n] }),
            vec![Element::word(vec![1 % n])],
            format!("cyclic({n})"),
        )
        .unwrap()
    }

    #[test]
    fn cyclic_six_has_six_elements() {
        assert_eq!(cyclic(6).order().unwrap(), 6);
    }

    #[test]
    fn evaluate_identities_and_kind_errors() {
        let g = cyclic(6);
        let x = Element::word(vec![4]);
        let id = g.evaluate(&x, &x, Op::Id).unwrap();
        assert_eq!(g.evaluate(&x, &id, Op::Mul).unwrap(), x);
        let xi = g.evaluate(&x, &x, Op::Inv).unwrap();
        assert_eq!(g.evaluate(&x, &xi, Op::Mul).unwrap(), id);
        let bad = Element::perm(vec![0]);
        assert!(matches!(
            g.evaluate(&x, &bad, Op::Mul),
            Err(GroupError::KindMismatch(_))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let g = cyclic(100).with_budget(50);
        assert_eq!(g.order().unwrap_err(), GroupError::BudgetExceeded(50));
        let h = cyclic(100);
        assert!(h.enumerate(99).is_err());
    }

    #[test]
    fn tables_are_consistent() {
        let law: Arc<dyn Law> = Arc::new(PermLaw { degree: 4 });
        let g = Group::new(
            law,
            vec![Element::perm(vec![1, 0, 2, 3]), Element::perm(vec![1, 2, 3, 0])],
            "S4",
        )
        .unwrap();
        assert_eq!(g.order().unwrap(), 24);
        let n = g.len() as u32;
        for i in 0..n {
            assert_eq!(g.mul_idx(i, g.inv_idx(i)), 0);
            for s in 0..g.generator_count() {
                let expect = g.index_of(&g.conjugate(&g.generators()[s], g.element(i))).unwrap();
                assert_eq!(g.conj_tables()[s][i as usize], expect);
            }
            let images = g.conjugation_images(i);
            for h in 0..n {
                assert_eq!(images[h as usize], g.conj_idx(h, i));
            }
        }
        let orders = g.orders();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 9);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
    }
}
