//! Direct, semidirect, wreath and central products, and quotients.

use std::any::Any;
use std::sync::Arc;

use crate::element::Element;
use crate::error::{GroupError, Result};
use crate::field::FieldCtx;
use crate::group::Group;
use crate::law::{AbelianLaw, DirectLaw, Law, PermLaw};
use crate::linalg::Matrix;
use crate::subgroup::Subgroup;

/// Image of one acting generator in `Aut(A)`.
#[derive(Debug, Clone)]
pub enum Automorphism {
    /// `table[i]` is the index of the image of `A`'s element `i`.
    Table(Vec<u32>),
    /// Matrix acting on the coordinate vectors of an elementary abelian `A`.
    Linear(Matrix),
}

/// A homomorphism `H -> Aut(A)`, verified eagerly and stored for every
/// element of `H` as a permutation of `A`'s element indices.
#[derive(Debug)]
pub struct ActionMap {
    acting: Group,
    target: Group,
    /// `auts[h][a]`, both indices into the respective enumerations.
    auts: Vec<Vec<u32>>,
}

impl ActionMap {
    pub fn new(acting: &Group, target: &Group, images: Vec<Automorphism>) -> Result<Self> {
        acting.enumeration()?;
        target.enumeration()?;
        if images.len() != acting.generator_count() {
            return Err(GroupError::InvalidAction(format!(
                "{} images for {} generators",
                images.len(),
                acting.generator_count()
            )));
        }
        let tables = images
            .into_iter()
            .enumerate()
            .map(|(s, aut)| {
                let t = automorphism_table(target, aut)
                    .map_err(|m| GroupError::InvalidAction(format!("generator {s}: {m}")))?;
                Ok(t)
            })
            .collect::<Result<Vec<_>>>()?;
        let (parent, via) = acting.tree();
        let n = acting.len();
        let mut auts: Vec<Vec<u32>> = Vec::with_capacity(n);
        auts.push((0..target.len() as u32).collect());
        // h_i = gen_s h_parent, so act(h_i) = act(gen_s) ∘ act(h_parent)
        for i in 1..n {
            let s = via[i] as usize;
            let prev = &auts[parent[i] as usize];
            let composed = prev.iter().map(|&a| tables[s][a as usize]).collect();
            auts.push(composed);
        }
        for (s, table) in tables.iter().enumerate() {
            let left = acting.left_table(s);
            for i in 0..n {
                let j = left[i] as usize;
                let ok = auts[i].iter().zip(&auts[j]).all(|(&a, &b)| table[a as usize] == b);
                if !ok {
                    return Err(GroupError::InvalidAction(format!(
                        "generator images do not define a homomorphism (generator {s})"
                    )));
                }
            }
        }
        Ok(ActionMap {
            acting: acting.clone(),
            target: target.clone(),
            auts,
        })
    }

    /// Every element of `H` fixes every element of `A`.
    pub fn trivial(acting: &Group, target: &Group) -> Result<Self> {
        target.enumeration()?;
        let id: Vec<u32> = (0..target.len() as u32).collect();
        let images = (0..acting.generator_count())
            .map(|_| Automorphism::Table(id.clone()))
            .collect();
        ActionMap::new(acting, target, images)
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    /// Image of `A`'s element `a` under `H`'s element `h`, by index.
    pub fn apply_idx(&self, h: u32, a: u32) -> u32 {
        self.auts[h as usize][a as usize]
    }

    /// Indices of `H` acting trivially.
    pub fn kernel(&self) -> Vec<u32> {
        (0..self.auts.len() as u32)
            .filter(|&h| self.auts[h as usize].iter().enumerate().all(|(i, &v)| i as u32 == v))
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().len() == 1
    }
}

fn automorphism_table(a: &Group, aut: Automorphism) -> std::result::Result<Vec<u32>, String> {
    let n = a.len();
    let table = match aut {
        Automorphism::Table(t) => t,
        Automorphism::Linear(m) => linear_table(a, &m)?,
    };
    if table.len() != n {
        return Err(format!("table has {} entries for {} elements", table.len(), n));
    }
    let mut seen = vec![false; n];
    for &v in &table {
        if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
            return Err("not a bijection".into());
        }
    }
    // φ(x s) = φ(x) φ(s) for all x and generators s forces φ to be a homomorphism
    for s in a.generator_indices() {
        let fs = table[s as usize];
        for x in 0..n as u32 {
            if table[a.mul_idx(x, s) as usize] != a.mul_idx(table[x as usize], fs) {
                return Err("not multiplicative".into());
            }
        }
    }
    Ok(table)
}

fn linear_table(a: &Group, m: &Matrix) -> std::result::Result<Vec<u32>, String> {
    let law = a
        .law()
        .as_any()
        .downcast_ref::<AbelianLaw>()
        .ok_or("linear action needs an elementary abelian target")?;
    let p = law
        .elementary_prime()
        .ok_or("linear action needs an elementary abelian target")?;
    if m.dim() != law.moduli.len() {
        return Err(format!("matrix dimension {} on rank {}", m.dim(), law.moduli.len()));
    }
    let field = FieldCtx::new(p as u64, 1).map_err(|e| e.to_string())?;
    a.elements()
        .map_err(|e| e.to_string())?
        .iter()
        .map(|e| {
            let v = m.apply(e.as_word().unwrap(), &field);
            a.index_of(&Element::word(v))
                .ok_or_else(|| "image outside the target".to_string())
        })
        .collect()
}

// ---------------------------------------------------------------------------

/// `(a,h)(a',h') = (a · h(a'), h h')` on `Tuple[a, h]`.
#[derive(Debug)]
pub struct SemidirectLaw {
    pub action: ActionMap,
}

impl SemidirectLaw {
    fn act(&self, h: &Element, a: &Element) -> Element {
        let act = &self.action;
        let hi = act.acting.index_of(h).expect("acting element");
        let ai = act.target.index_of(a).expect("target element");
        act.target.element(act.apply_idx(hi, ai)).clone()
    }
}

impl Law for SemidirectLaw {
    fn identity(&self) -> Element {
        Element::tuple(vec![self.action.target.identity(), self.action.acting.identity()])
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let (x, y) = (x.as_tuple().unwrap(), y.as_tuple().unwrap());
        let a = self.action.target.mul(&x[0], &self.act(&x[1], &y[0]));
        let h = self.action.acting.mul(&x[1], &y[1]);
        Element::tuple(vec![a, h])
    }

    fn inv(&self, x: &Element) -> Element {
        let x = x.as_tuple().unwrap();
        let hi = self.action.acting.inv(&x[1]);
        let a = self.act(&hi, &self.action.target.inv(&x[0]));
        Element::tuple(vec![a, hi])
    }

    fn accepts(&self, x: &Element) -> bool {
        matches!(x.as_tuple(), Some(t) if t.len() == 2
            && self.action.target.index_of(&t[0]).is_some()
            && self.action.acting.index_of(&t[1]).is_some())
    }

    fn format(&self, x: &Element) -> String {
        let t = x.as_tuple().unwrap();
        format!(
            "<{}, {}>",
            self.action.target.format(&t[0]),
            self.action.acting.format(&t[1])
        )
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let law = DirectLaw {
        factors: vec![a.law().clone(), b.law().clone()],
    };
    let mut gens: Vec<Element> = a
        .generators()
        .iter()
        .map(|x| Element::tuple(vec![x.clone(), b.identity()]))
        .collect();
    gens.extend(
        b.generators()
            .iter()
            .map(|y| Element::tuple(vec![a.identity(), y.clone()])),
    );
    Group::new(Arc::new(law), gens, format!("direct({}, {})", a.label(), b.label()))
}

/// `A ⋊ H`, generated by `A`'s generators and `H`'s generators.
pub fn semidirect_product(action: ActionMap) -> Result<Group> {
    let a = action.target.clone();
    let h = action.acting.clone();
    let mut gens: Vec<Element> = a
        .generators()
        .iter()
        .map(|x| Element::tuple(vec![x.clone(), h.identity()]))
        .collect();
    gens.extend(
        h.generators()
            .iter()
            .map(|y| Element::tuple(vec![a.identity(), y.clone()])),
    );
    let label = format!("semidirect({}, {})", a.label(), h.label());
    Group::new(Arc::new(SemidirectLaw { action }), gens, label)
}

// ---------------------------------------------------------------------------

/// `A ≀ H` for `H` permuting `n` points: `Tuple[Tuple(f_0..f_{n-1}), h]` with
/// `(f,h)(f',h') = (f · h(f'), hh')` and `h(f')_i = f'_{h^-1(i)}`.
#[derive(Debug)]
pub struct WreathLaw {
    pub base: Arc<dyn Law>,
    pub top: PermLaw,
}

impl Law for WreathLaw {
    fn identity(&self) -> Element {
        let n = self.top.degree;
        Element::tuple(vec![Element::tuple(vec![self.base.identity(); n]), self.top.identity()])
    }

    fn mul(&self, x: &Element, y: &Element) -> Element {
        let (x, y) = (x.as_tuple().unwrap(), y.as_tuple().unwrap());
        let (f, h) = (x[0].as_tuple().unwrap(), x[1].as_perm().unwrap());
        let g = y[0].as_tuple().unwrap();
        let mut moved = vec![None; f.len()];
        for (j, &hj) in h.iter().enumerate() {
            moved[hj as usize] = Some(&g[j]);
        }
        let coords = f
            .iter()
            .zip(moved)
            .map(|(fi, gi)| self.base.mul(fi, gi.unwrap()))
            .collect();
        Element::tuple(vec![Element::tuple(coords), self.top.mul(&x[1], &y[1])])
    }

    fn inv(&self, x: &Element) -> Element {
        let x = x.as_tuple().unwrap();
        let (f, h) = (x[0].as_tuple().unwrap(), x[1].as_perm().unwrap());
        // (h^-1 f^-1)_i = f^-1_{h(i)}
        let coords = h.iter().map(|&hi| self.base.inv(&f[hi as usize])).collect();
        Element::tuple(vec![Element::tuple(coords), self.top.inv(&x[1])])
    }

    fn accepts(&self, x: &Element) -> bool {
        matches!(x.as_tuple(), Some(t) if t.len() == 2
            && matches!(t[0].as_tuple(), Some(f) if f.len() == self.top.degree
                && f.iter().all(|c| self.base.accepts(c)))
            && self.top.accepts(&t[1]))
    }

    fn format(&self, x: &Element) -> String {
        let t = x.as_tuple().unwrap();
        let f = t[0].as_tuple().unwrap();
        let parts: Vec<String> = f.iter().map(|c| self.base.format(c)).collect();
        format!("<[{}], {}>", parts.join(", "), self.top.format(&t[1]))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// `A ≀ H` where `H` is a permutation group; `A`'s generators are placed in
/// every coordinate.
pub fn wreath_product(a: &Group, h: &Group) -> Result<Group> {
    let top = h
        .law()
        .as_any()
        .downcast_ref::<PermLaw>()
        .ok_or_else(|| GroupError::KindMismatch("wreath top group must be a permutation group".into()))?;
    let n = top.degree;
    let law = WreathLaw {
        base: a.law().clone(),
        top: PermLaw { degree: n },
    };
    let id_base = vec![a.identity(); n];
    let mut gens = Vec::new();
    for x in a.generators() {
        for i in 0..n {
            let mut f = id_base.clone();
            f[i] = x.clone();
            gens.push(Element::tuple(vec![Element::tuple(f), law.top.identity()]));
        }
    }
    for y in h.generators() {
        gens.push(Element::tuple(vec![Element::tuple(id_base.clone()), y.clone()]));
    }
    Group::new(Arc::new(law), gens, format!("wreath({}, {})", a.label(), h.label()))
}

// ---------------------------------------------------------------------------

/// `(A × B) / D` with `D = {(z, ι(z)^-1)}`; elements are stored as the least
/// member of their `D`-coset.
#[derive(Debug)]
pub struct CentralLaw {
    inner: DirectLaw,
    diagonal: Vec<Element>,
}

impl CentralLaw {
    fn canonical(&self, x: Element) -> Element {
        self.diagonal.iter().map(|d| self.inner.mul(&x, d)).min().unwrap_or(x)
    }
}

impl Law for CentralLaw {
    fn identity(&self) -> Element {
        self.inner.identity()
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        self.canonical(self.inner.mul(a, b))
    }

    fn inv(&self, a: &Element) -> Element {
        self.canonical(self.inner.inv(a))
    }

    fn accepts(&self, a: &Element) -> bool {
        self.inner.accepts(a) && self.canonical(a.clone()) == *a
    }

    fn format(&self, a: &Element) -> String {
        self.inner.format(a)
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// Central product identifying `Z_A = ⟨pairs.0⟩` with `Z_B = ⟨pairs.1⟩`
/// through `pairs[i].0 -> pairs[i].1`.
pub fn central_product(a: &Group, b: &Group, pairs: &[(Element, Element)]) -> Result<Group> {
    let commutes = |g: &Group, z: &Element| g.generators().iter().all(|x| g.mul(x, z) == g.mul(z, x));
    for (za, zb) in pairs {
        if !a.law().accepts(za) || !b.law().accepts(zb) {
            return Err(GroupError::InvalidCentralIso("element of the wrong kind".into()));
        }
        if !commutes(a, za) || !commutes(b, zb) {
            return Err(GroupError::InvalidCentralIso(
                "identified subgroup is not central".into(),
            ));
        }
    }
    let direct = direct_product(a, b)?;
    let d_gens: Vec<Element> = pairs
        .iter()
        .map(|(za, zb)| Element::tuple(vec![za.clone(), b.inv(zb)]))
        .collect();
    let d = Group::new(direct.law().clone(), d_gens, "diagonal")?;
    let za = Group::new(a.law().clone(), pairs.iter().map(|p| p.0.clone()).collect(), "Z_A")?;
    let zb = Group::new(b.law().clone(), pairs.iter().map(|p| p.1.clone()).collect(), "Z_B")?;
    let nd = d.order()?;
    // D is the graph of an isomorphism iff both projections are bijective
    if nd != za.order()? || nd != zb.order()? {
        return Err(GroupError::InvalidCentralIso(
            "assignment does not extend to an isomorphism".into(),
        ));
    }
    let inner = DirectLaw {
        factors: vec![a.law().clone(), b.law().clone()],
    };
    let law = CentralLaw {
        inner,
        diagonal: d.elements()?.to_vec(),
    };
    let gens = direct.generators().iter().map(|g| law.canonical(g.clone())).collect();
    Group::new(Arc::new(law), gens, format!("central({}, {})", a.label(), b.label()))
}

// ---------------------------------------------------------------------------

/// Cosets of a normal subgroup (index 0 is the identity), multiplied through representatives in the
/// parent's table. Element `[c]` is the coset numbered `c`.
#[derive(Debug)]
pub struct CosetLaw {
    parent: Group,
    /// Coset number of each parent index.
    coset: Vec<u32>,
    /// Least parent index in each coset.
    reps: Vec<u32>,
}

impl CosetLaw {
    fn idx(&self, a: &Element) -> u32 {
        self.reps[a.as_word().expect("coset element")[0] as usize]
    }
}

impl Law for CosetLaw {
    fn identity(&self) -> Element {
        Element::word(vec![self.coset[0]])
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let ab = self.parent.mul_idx(self.idx(a), self.idx(b));
        Element::word(vec![self.coset[ab as usize]])
    }

    fn inv(&self, a: &Element) -> Element {
        Element::word(vec![self.coset[self.parent.inv_idx(self.idx(a)) as usize]])
    }

    fn accepts(&self, a: &Element) -> bool {
        matches!(a.as_word(), Some([c]) if (*c as usize) < self.reps.len())
    }

    fn format(&self, a: &Element) -> String {
        format!("{}N", self.parent.format(self.parent.element(self.idx(a))))
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// `G/N` on the cosets of a normal subgroup `N`, numbered by least member.
pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<Group> {
    if !n.parent().same_group(g) {
        return Err(GroupError::InvalidParameters("subgroup of a different group".into()));
    }
    if !n.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let size = g.len();
    let mut coset = vec![u32::MAX; size];
    let mut reps = Vec::new();
    for x in 0..size as u32 {
        if coset[x as usize] != u32::MAX {
            continue;
        }
        for &m in n.members() {
            coset[g.mul_idx(x, m) as usize] = reps.len() as u32;
        }
        reps.push(x);
    }
    let gens = g
        .generator_indices()
        .into_iter()
        .map(|s| Element::word(vec![coset[s as usize]]))
        .collect();
    let law = CosetLaw {
        parent: g.clone(),
        coset,
        reps,
    };
    let q = Group::new(Arc::new(law), gens, format!("{}/N", g.label()))?;
    Ok(q.with_budget(g.budget()))
}
